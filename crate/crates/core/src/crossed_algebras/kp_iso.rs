//! The isomorphism K[P] ≅ q*(K[G]) for G = P/∂C, with its cocycle multiplication law.

use super::{
    check_algebra_morphism, group_algebra_p, pullback, AlgebraError, CrossedAlgebra,
    CrossedAlgebraMorphism,
};
use crate::crossed_modules::{CrossedModule, CrossedModuleMorphism};
use crate::exact_linalg::{Matrix, Scalar};
use crate::groups::{cocycle_from_section, Section, TwoCocycle};
use crate::report::Report;

#[derive(Clone, Debug)]
pub struct KpIso<F> {
    pub quotient: CrossedModuleMorphism,
    pub section: Section,
    pub cocycle: TwoCocycle,
    pub kp: CrossedAlgebra<F>,
    /// q*(K[G])
    pub pulled: CrossedAlgebra<F>,
    /// e_p ↦ (e_{q(p)})_n with p = n·s(q(p)), over the identity of the crossed module.
    pub morphism: CrossedAlgebraMorphism<F>,
    pub report: Report,
}

/// Builds and verifies the witness; `section` defaults to least-index representatives.
pub fn kp_iso_witness<F: Scalar>(
    cm: &CrossedModule,
    section: Option<Section>,
) -> Result<KpIso<F>, AlgebraError> {
    let quotient = cm.quotient_morphism();
    let section = match section {
        Some(s) if s.projection() == quotient.f_base() => s,
        Some(_) => return Err(AlgebraError::SectionRequired),
        None => Section::canonical(quotient.f_base().clone())?,
    };
    let cocycle = cocycle_from_section(&section)?;
    let kg = group_algebra_p::<F>(quotient.target());
    let pulled = pullback(&quotient, &kg)?;
    let kp = group_algebra_p::<F>(cm);
    let p = cm.base();
    let g_grp = quotient.target().base();
    let q = |x: usize| quotient.f0(x);

    // (e_g)_n is the basis vector of grade n·s(g); both sides are one-dimensional in every grade
    let blocks = p.elements().map(|_| Matrix::identity(1)).collect();
    let morphism = CrossedAlgebraMorphism::from_parts(
        CrossedModuleMorphism::identity(cm),
        blocks,
        &kp,
        &pulled,
    )?;
    let mut report = Report::new("K[P] ≅ q*(K[G])");
    report.absorb("morphism", check_algebra_morphism(&morphism, &kp, &pulled));
    report
        .axiom("iso", "bijective")
        .check(morphism.is_bijective(), || {
            ("blocks".into(), "a block is not invertible".into())
        });
    {
        let mut ax = report.axiom("iso", "p = n·s(q(p)) decomposition");
        for x in p.elements() {
            let n = p.mul(x, p.inv(section.lift(q(x))));
            ax.check(quotient.f0(n) == 0, || {
                (p.name(x).into(), format!("n = {} is not in ∂C", p.name(n)))
            });
        }
    }
    let kernel = cocycle.kernel();
    let incl = cocycle.kernel_incl();
    let mut ax = report.axiom(
        "cocycle law",
        "(e_g₁)_n₁(e_g₂)_n₂ = (e_g₁g₂)_(n₁·^s(g₁)n₂·f(g₁,g₂))",
    );
    for g1 in g_grp.elements() {
        for n1 in kernel.elements() {
            for g2 in g_grp.elements() {
                for n2 in kernel.elements() {
                    let p1 = p.mul(incl[n1], section.lift(g1));
                    let p2 = p.mul(incl[n2], section.lift(g2));
                    let prod = pulled.product(p1, &[F::one()], p2, &[F::one()]);
                    let n = kernel.product(&[n1, cocycle.act(g1, n2), cocycle.value(g1, g2)]);
                    let g = g_grp.mul(g1, g2);
                    let expected_grade = p.mul(incl[n], section.lift(g));
                    let ok = expected_grade == p.mul(p1, p2) && prod == vec![F::one()];
                    ax.check(ok, || {
                        (
                            format!(
                                "(g₁, n₁, g₂, n₂) = ({}, {}, {}, {})",
                                g_grp.name(g1),
                                kernel.name(n1),
                                g_grp.name(g2),
                                kernel.name(n2)
                            ),
                            format!(
                                "product lies in grade {} with coefficient {:?}, law predicts grade {}",
                                p.name(p.mul(p1, p2)),
                                prod.iter().map(|x| x.encode()).collect::<Vec<_>>(),
                                p.name(expected_grade)
                            ),
                        )
                    });
                }
            }
        }
    }
    Ok(KpIso {
        quotient,
        section,
        cocycle,
        kp,
        pulled,
        morphism,
        report,
    })
}
