//! Pulling a crossed algebra back along a crossed module morphism.

use super::{AlgebraError, AlgebraParts, CrossedAlgebra, CrossedAlgebraMorphism};
use crate::crossed_modules::CrossedModuleMorphism;
use crate::exact_linalg::{GradedSpace, Scalar};

/// f*(L′): grade p is a copy of L′_{f₀(p)}, φ_h = φ′_{f₀(h)} and c̃ = (f₁c)~ placed in grade ∂c.
pub fn pullback<F: Scalar>(
    f: &CrossedModuleMorphism,
    lp: &CrossedAlgebra<F>,
) -> Result<CrossedAlgebra<F>, AlgebraError> {
    if lp.crossed_module() != f.target() {
        return Err(AlgebraError::WrongBase);
    }
    let cm = f.source();
    let p = cm.base();
    let names = p
        .elements()
        .map(|g| lp.space().basis_names(f.f0(g)).to_vec())
        .collect();
    let mut mul = Vec::with_capacity(p.order() * p.order());
    for g in p.elements() {
        for h in p.elements() {
            mul.push(lp.mul_block(f.f0(g), f.f0(h)).clone());
        }
    }
    let mut phi = Vec::with_capacity(p.order() * p.order());
    for h in p.elements() {
        for g in p.elements() {
            phi.push(lp.phi(f.f0(h), f.f0(g)).clone());
        }
    }
    let parts = AlgebraParts {
        space: GradedSpace::new(names).expect("names copied from a valid space"),
        mul,
        unit: lp.unit().to_vec(),
        rho: p.elements().map(|g| lp.rho(f.f0(g)).clone()).collect(),
        phi,
        tilde: cm
            .top()
            .elements()
            .map(|c| lp.tilde(f.f1(c)).to_vec())
            .collect(),
    };
    CrossedAlgebra::from_parts(cm.clone(), parts)
}

/// θ: L → L′ over f, re-read as a morphism L → f*(L′) over the identity.
pub fn transpose_to_pullback<F: Scalar>(
    m: &CrossedAlgebraMorphism<F>,
    source: &CrossedAlgebra<F>,
    pulled: &CrossedAlgebra<F>,
) -> Result<CrossedAlgebraMorphism<F>, AlgebraError> {
    CrossedAlgebraMorphism::from_parts(
        CrossedModuleMorphism::identity(source.crossed_module()),
        m.blocks().to_vec(),
        source,
        pulled,
    )
}

/// The inverse of [`transpose_to_pullback`].
pub fn untranspose_from_pullback<F: Scalar>(
    m: &CrossedAlgebraMorphism<F>,
    f: &CrossedModuleMorphism,
    source: &CrossedAlgebra<F>,
    target: &CrossedAlgebra<F>,
) -> Result<CrossedAlgebraMorphism<F>, AlgebraError> {
    if !m.over().is_identity() {
        return Err(AlgebraError::WrongBase);
    }
    CrossedAlgebraMorphism::from_parts(f.clone(), m.blocks().to_vec(), source, target)
}
