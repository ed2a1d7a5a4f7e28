//! The group-algebra constructions K[C] and K[P].

use super::{AlgebraParts, CrossedAlgebra};
use crate::crossed_modules::CrossedModule;
use crate::exact_linalg::{GradedSpace, Matrix, Scalar};
use crate::groups::Elem;

/// Builds parts from a basis given as labelled elements per grade, with products,
/// the action and the pairing all sending basis vectors to basis vectors (or zero).
struct MonomialData<'a> {
    /// basis[g] = labels of the basis of L_g
    basis: Vec<Vec<Elem>>,
    names: Vec<Vec<String>>,
    product: &'a dyn Fn(Elem, Elem) -> Elem,
    act: &'a dyn Fn(Elem, Elem) -> Elem,
    paired: &'a dyn Fn(Elem, Elem) -> bool,
    unit: Elem,
    tilde: &'a dyn Fn(Elem) -> Elem,
}

fn monomial_parts<F: Scalar>(cm: &CrossedModule, data: MonomialData<'_>) -> AlgebraParts<F> {
    let p = cm.base();
    let n = p.order();
    let pos = |g: Elem, label: Elem| -> usize {
        data.basis[g]
            .iter()
            .position(|&x| x == label)
            .expect("monomial lands in the expected grade")
    };
    let dim = |g: Elem| data.basis[g].len();
    let mut mul = Vec::with_capacity(n * n);
    for g in p.elements() {
        for h in p.elements() {
            let gh = p.mul(g, h);
            let mut m = Matrix::zeros(dim(gh), dim(g) * dim(h));
            for (i, &a) in data.basis[g].iter().enumerate() {
                for (j, &b) in data.basis[h].iter().enumerate() {
                    m.set(pos(gh, (data.product)(a, b)), i * dim(h) + j, F::one());
                }
            }
            mul.push(m);
        }
    }
    let mut phi = Vec::with_capacity(n * n);
    for h in p.elements() {
        for g in p.elements() {
            let t = p.conj(h, g);
            let mut m = Matrix::zeros(dim(t), dim(g));
            for (i, &a) in data.basis[g].iter().enumerate() {
                m.set(pos(t, (data.act)(h, a)), i, F::one());
            }
            phi.push(m);
        }
    }
    let rho = p
        .elements()
        .map(|g| {
            let gi = p.inv(g);
            Matrix::from_fn(dim(g), dim(gi), |i, j| {
                if (data.paired)(data.basis[g][i], data.basis[gi][j]) {
                    F::one()
                } else {
                    F::zero()
                }
            })
        })
        .collect();
    let mut unit = vec![F::zero(); dim(0)];
    unit[pos(0, data.unit)] = F::one();
    let tilde = cm
        .top()
        .elements()
        .map(|c| {
            let g = cm.d(c);
            let mut v = vec![F::zero(); dim(g)];
            v[pos(g, (data.tilde)(c))] = F::one();
            v
        })
        .collect();
    AlgebraParts {
        space: GradedSpace::new(data.names).expect("element names are unique"),
        mul,
        unit,
        rho,
        phi,
        tilde,
    }
}

/// K[C]: L_p spanned by e_c with ∂c = p, φ_g(e_c) = e_{ᵍc}, c̃ = e_c, ρ(e_c, e_{c′}) = [c′ = c⁻¹].
pub fn group_algebra_c<F: Scalar>(cm: &CrossedModule) -> CrossedAlgebra<F> {
    let (c_grp, p) = (cm.top(), cm.base());
    let basis: Vec<Vec<Elem>> = p
        .elements()
        .map(|g| c_grp.elements().filter(|&c| cm.d(c) == g).collect())
        .collect();
    let names = basis
        .iter()
        .map(|b| b.iter().map(|&c| c_grp.name(c).to_string()).collect())
        .collect();
    let parts = monomial_parts(
        cm,
        MonomialData {
            basis,
            names,
            product: &|a, b| c_grp.mul(a, b),
            act: &|h, c| cm.act(h, c),
            paired: &|a, b| c_grp.mul(a, b) == 0,
            unit: 0,
            tilde: &|c| c,
        },
    );
    CrossedAlgebra::from_parts(cm.clone(), parts).expect("K[C] is well shaped")
}

/// K[P]: one basis vector e_p per grade, φ_h(e_g) = e_{hgh⁻¹}, c̃ = e_{∂c}.
pub fn group_algebra_p<F: Scalar>(cm: &CrossedModule) -> CrossedAlgebra<F> {
    let p = cm.base();
    let basis = p.elements().map(|g| vec![g]).collect();
    let names = p.elements().map(|g| vec![p.name(g).to_string()]).collect();
    let parts = monomial_parts(
        cm,
        MonomialData {
            basis,
            names,
            product: &|a, b| p.mul(a, b),
            act: &|h, g| p.conj(h, g),
            paired: &|a, b| p.mul(a, b) == 0,
            unit: 0,
            tilde: &|c| cm.d(c),
        },
    );
    CrossedAlgebra::from_parts(cm.clone(), parts).expect("K[P] is well shaped")
}
