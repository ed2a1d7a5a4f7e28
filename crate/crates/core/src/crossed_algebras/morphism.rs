//! Morphisms of crossed algebras over a crossed module morphism.

use super::{first_diff, fmt_vec, AlgebraError, CrossedAlgebra};
use crate::crossed_modules::CrossedModuleMorphism;
use crate::exact_linalg::{Matrix, Scalar};
use crate::report::Report;

/// θ: L → L′ over f, stored as one block L_p → L′_{f₀(p)} per p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedAlgebraMorphism<F> {
    over: CrossedModuleMorphism,
    blocks: Vec<Matrix<F>>,
}

impl<F: Scalar> CrossedAlgebraMorphism<F> {
    /// Checks that the blocks have the right shapes for `source` and `target`.
    pub fn from_parts(
        over: CrossedModuleMorphism,
        blocks: Vec<Matrix<F>>,
        source: &CrossedAlgebra<F>,
        target: &CrossedAlgebra<F>,
    ) -> Result<Self, AlgebraError> {
        if over.source() != source.crossed_module() || over.target() != target.crossed_module() {
            return Err(AlgebraError::WrongBase);
        }
        let p = source.crossed_module().base();
        if blocks.len() != p.order() {
            return Err(AlgebraError::Shape(
                "one block per grade is required".into(),
            ));
        }
        for g in p.elements() {
            let b = &blocks[g];
            if b.rows() != target.dim(over.f0(g)) || b.cols() != source.dim(g) {
                return Err(AlgebraError::Shape(format!(
                    "block for grade {}",
                    p.name(g)
                )));
            }
        }
        Ok(CrossedAlgebraMorphism { over, blocks })
    }

    pub fn identity(l: &CrossedAlgebra<F>) -> Self {
        let cm = l.crossed_module();
        CrossedAlgebraMorphism {
            over: CrossedModuleMorphism::identity(cm),
            blocks: cm
                .base()
                .elements()
                .map(|g| Matrix::identity(l.dim(g)))
                .collect(),
        }
    }

    pub fn over(&self) -> &CrossedModuleMorphism {
        &self.over
    }

    pub fn blocks(&self) -> &[Matrix<F>] {
        &self.blocks
    }

    pub fn block(&self, g: usize) -> &Matrix<F> {
        &self.blocks[g]
    }

    /// Bijective on every grade, over a morphism with bijective components.
    pub fn is_bijective(&self) -> bool {
        self.over.f_top().is_injective()
            && self.over.f_top().is_surjective()
            && self.over.f_base().is_injective()
            && self.over.f_base().is_surjective()
            && self.blocks.iter().all(Matrix::is_invertible)
    }
}

/// Unit, products, ρ on inverse grade pairs, φ-equivariance and tilde compatibility.
///
/// ρ′(θa, θb) = ρ(a, b) is imposed for a ∈ L_p, b ∈ L_{p⁻¹}: when f₀ is not injective,
/// other source pairs land in pairing target grades while ρ vanishes on them.
pub fn check_algebra_morphism<F: Scalar>(
    m: &CrossedAlgebraMorphism<F>,
    source: &CrossedAlgebra<F>,
    target: &CrossedAlgebra<F>,
) -> Report {
    let f = &m.over;
    let cm = source.crossed_module();
    let (c_grp, p) = (cm.top(), cm.base());
    let tp = target.crossed_module().base();
    let mut report = Report::new("crossed algebra morphism");
    {
        let v = m.block(0).apply(source.unit());
        report
            .axiom("unit", "θ(1) = 1")
            .check(v == target.unit(), || {
                ("1".into(), format!("θ(1) = {}", fmt_vec(&v)))
            });
    }
    {
        let mut ax = report.axiom("multiplicative", "θ(xy) = θ(x)θ(y)");
        for g in p.elements() {
            for h in p.elements() {
                let lhs = m.block(p.mul(g, h)).mul(source.mul_block(g, h));
                let rhs = target
                    .mul_block(f.f0(g), f.f0(h))
                    .mul(&m.block(g).kron(m.block(h)));
                let diff = first_diff(&lhs, &rhs);
                ax.check(diff.is_none(), || {
                    let (_, col) = diff.unwrap();
                    let dh = source.dim(h);
                    (
                        format!(
                            "({}, {})",
                            source.basis_label(g, col / dh),
                            source.basis_label(h, col % dh)
                        ),
                        format!(
                            "θ(xy) = {} but θ(x)θ(y) = {}",
                            fmt_vec(&lhs.column(col)),
                            fmt_vec(&rhs.column(col))
                        ),
                    )
                });
            }
        }
    }
    {
        let mut ax = report.axiom("rho", "ρ′(θx, θy) = ρ(x, y)");
        for g in p.elements() {
            let gi = p.inv(g);
            let lhs = m
                .block(g)
                .transpose()
                .mul(target.rho(f.f0(g)))
                .mul(m.block(gi));
            let diff = first_diff(&lhs, source.rho(g));
            ax.check(diff.is_none(), || {
                let (i, j) = diff.unwrap();
                (
                    format!(
                        "({}, {})",
                        source.basis_label(g, i),
                        source.basis_label(gi, j)
                    ),
                    format!(
                        "{} ≠ {}",
                        lhs.get(i, j).encode(),
                        source.rho(g).get(i, j).encode()
                    ),
                )
            });
        }
    }
    {
        let mut ax = report.axiom("phi", "φ′_f₀(h)∘θ = θ∘φ_h");
        for h in p.elements() {
            for g in p.elements() {
                let lhs = target.phi(f.f0(h), f.f0(g)).mul(m.block(g));
                let rhs = m.block(p.conj(h, g)).mul(source.phi(h, g));
                let diff = first_diff(&lhs, &rhs);
                ax.check(diff.is_none(), || {
                    let (_, col) = diff.unwrap();
                    (
                        format!("h = {}, x = {}", p.name(h), source.basis_label(g, col)),
                        format!(
                            "{} ≠ {}",
                            fmt_vec(&lhs.column(col)),
                            fmt_vec(&rhs.column(col))
                        ),
                    )
                });
            }
        }
    }
    let mut ax = report.axiom("tilde", "θ(c̃) = (f₁c)~");
    for c in c_grp.elements() {
        let lhs = m.block(cm.d(c)).apply(source.tilde(c));
        let rhs = target.tilde(f.f1(c));
        ax.check(lhs == rhs, || {
            (
                c_grp.name(c).into(),
                format!(
                    "θ(c̃) = {} but (f₁c)~ = {} in grade {}",
                    fmt_vec(&lhs),
                    fmt_vec(rhs),
                    tp.name(f.f0(cm.d(c)))
                ),
            )
        });
    }
    report
}
