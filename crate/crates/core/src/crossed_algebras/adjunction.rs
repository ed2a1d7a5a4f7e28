//! The two adjunction bijections, checked by enumerating all three hom-sets.

use super::{
    check_algebra_morphism, enumerate_morphisms, pullback, pushforward, transpose_from_pushforward,
    transpose_to_pullback, untranspose_from_pullback, untranspose_from_pushforward, AlgebraError,
    CrossedAlgebra, CrossedAlgebraMorphism,
};
use crate::crossed_modules::CrossedModuleMorphism;
use crate::exact_linalg::Scalar;
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdjunctionCounts {
    /// |Hom_f(L, L′)|
    pub over_f: usize,
    /// |Hom(L, f*L′)|
    pub into_pullback: usize,
    /// |Hom(f_*L, L′)|
    pub from_pushforward: usize,
}

/// Enumerates Hom_f(L, L′), Hom(L, f*L′) and Hom(f_*L, L′) over a finite field and
/// checks that both transposes are mutually inverse bijections between them.
pub fn check_adjunction<F: Scalar>(
    f: &CrossedModuleMorphism,
    l: &CrossedAlgebra<F>,
    lp: &CrossedAlgebra<F>,
    bound: u128,
) -> Result<(AdjunctionCounts, Report), AlgebraError> {
    let pulled = pullback(f, lp)?;
    let pf = pushforward(f, l)?;
    let id_src = CrossedModuleMorphism::identity(f.source());
    let id_tgt = CrossedModuleMorphism::identity(f.target());
    let over_f = enumerate_morphisms(f, l, lp, bound)?;
    let into_pullback = enumerate_morphisms(&id_src, l, &pulled, bound)?;
    let from_pushforward = enumerate_morphisms(&id_tgt, &pf.algebra, lp, bound)?;
    let counts = AdjunctionCounts {
        over_f: over_f.len(),
        into_pullback: into_pullback.len(),
        from_pushforward: from_pushforward.len(),
    };
    let mut report = Report::new("adjunction");
    report.axiom("adjunction", "hom-set sizes agree").check(
        counts.over_f == counts.into_pullback && counts.over_f == counts.from_pushforward,
        || {
            (
                "counts".into(),
                format!(
                    "|Hom_f(L, L′)| = {}, |Hom(L, f*L′)| = {}, |Hom(f_*L, L′)| = {}",
                    counts.over_f, counts.into_pullback, counts.from_pushforward
                ),
            )
        },
    );
    let is_morphism =
        |m: &CrossedAlgebraMorphism<F>, s: &CrossedAlgebra<F>, t: &CrossedAlgebra<F>| {
            check_algebra_morphism(m, s, t).passed
        };
    {
        let mut ax = report.axiom("adjunction", "pullback transposes are inverse");
        for (i, m) in over_f.iter().enumerate() {
            let ok = transpose_to_pullback(m, l, &pulled).and_then(|t| {
                let back = untranspose_from_pullback(&t, f, l, lp)?;
                Ok(is_morphism(&t, l, &pulled) && &back == m)
            });
            ax.check(ok == Ok(true), || {
                (format!("morphism {i} over f"), format!("{ok:?}"))
            });
        }
        for (i, n) in into_pullback.iter().enumerate() {
            let ok = untranspose_from_pullback(n, f, l, lp).and_then(|u| {
                let back = transpose_to_pullback(&u, l, &pulled)?;
                Ok(is_morphism(&u, l, lp) && &back == n)
            });
            ax.check(ok == Ok(true), || {
                (format!("morphism {i} into f*L′"), format!("{ok:?}"))
            });
        }
    }
    let mut ax = report.axiom("adjunction", "pushforward transposes are inverse");
    for (i, m) in over_f.iter().enumerate() {
        let ok = transpose_from_pushforward(m, l, &pf, lp).and_then(|t| {
            let back = untranspose_from_pushforward(&t, f, l, &pf, lp)?;
            Ok(is_morphism(&t, &pf.algebra, lp) && &back == m)
        });
        ax.check(ok == Ok(true), || {
            (format!("morphism {i} over f"), format!("{ok:?}"))
        });
    }
    for (i, n) in from_pushforward.iter().enumerate() {
        let ok = untranspose_from_pushforward(n, f, l, &pf, lp).and_then(|u| {
            let back = transpose_from_pushforward(&u, l, &pf, lp)?;
            Ok(is_morphism(&u, l, lp) && &back == n)
        });
        ax.check(ok == Ok(true), || {
            (format!("morphism {i} from f_*L"), format!("{ok:?}"))
        });
    }
    Ok((counts, report))
}
