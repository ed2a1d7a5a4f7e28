//! θ maps, the four θ identities and the pointwise check of L ↦ 𝔄ut(L).

use super::{first_diff, fmt_vec, AlgebraError, CrossedAlgebra};
use crate::exact_linalg::{solve, Matrix, Scalar};
use crate::groups::Elem;
use crate::report::Report;

pub const FAMILY_THETA_COMPOSITION: &str = "boxed-1 theta composition";
pub const FAMILY_THETA_COMMUTE: &str = "boxed-2 x·c̃ = (ᵍc)~·x";
pub const FAMILY_THETA_ADJOINT: &str = "boxed-3 rho adjoint";
pub const FAMILY_THETA_EQUIVARIANT: &str = "boxed-4 phi equivariance";

/// θ_{(c,g)}: L_g → L_{∂c·g}, x ↦ c̃·x.
pub fn theta<F: Scalar>(
    l: &CrossedAlgebra<F>,
    c: Elem,
    g: Elem,
) -> Result<Matrix<F>, AlgebraError> {
    let cm = l.crossed_module();
    let m = theta_unchecked(l, c, g);
    if !m.is_invertible() {
        return Err(AlgebraError::SingularTheta {
            c: cm.top().name(c).into(),
            g: cm.base().name(g).into(),
        });
    }
    Ok(m)
}

fn theta_unchecked<F: Scalar>(l: &CrossedAlgebra<F>, c: Elem, g: Elem) -> Matrix<F> {
    l.left_mul(l.crossed_module().d(c), l.tilde(c), g)
}

/// Exhaustive sweep of the four identities over all c, c′ ∈ C and g, h ∈ P.
pub fn check_boxed_identities<F: Scalar>(l: &CrossedAlgebra<F>) -> Report {
    let cm = l.crossed_module();
    let (c_grp, p) = (cm.top(), cm.base());
    let cn = |c: Elem| c_grp.name(c).to_string();
    let pn = |g: Elem| p.name(g).to_string();
    let mut report = Report::new("θ identities");
    let thetas: Vec<Vec<Matrix<F>>> = c_grp
        .elements()
        .map(|c| p.elements().map(|g| theta_unchecked(l, c, g)).collect())
        .collect();
    {
        let mut ax = report.axiom(FAMILY_THETA_COMPOSITION, "θ_(c′c,g) = θ_(c′,∂c·g)∘θ_(c,g)");
        for c in c_grp.elements() {
            for c2 in c_grp.elements() {
                for g in p.elements() {
                    let lhs = &thetas[c_grp.mul(c2, c)][g];
                    let rhs = thetas[c2][p.mul(cm.d(c), g)].mul(&thetas[c][g]);
                    let diff = first_diff(lhs, &rhs);
                    ax.check(diff.is_none(), || {
                        let (_, col) = diff.unwrap();
                        (
                            format!(
                                "(c, c′, g) = ({}, {}, {}), x = {}",
                                cn(c),
                                cn(c2),
                                pn(g),
                                l.basis_label(g, col)
                            ),
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
    }
    {
        let mut ax = report.axiom(FAMILY_THETA_COMMUTE, "x·c̃ = (ᵍc)~·x on L_g");
        for c in c_grp.elements() {
            for g in p.elements() {
                let lhs = l.right_mul(cm.d(c), l.tilde(c), g);
                let rhs = &thetas[cm.act(g, c)][g];
                let diff = first_diff(&lhs, rhs);
                ax.check(diff.is_none(), || {
                    let (_, col) = diff.unwrap();
                    (
                        format!(
                            "(c, g) = ({}, {}), x = {}",
                            cn(c),
                            pn(g),
                            l.basis_label(g, col)
                        ),
                        format!(
                            "x·c̃ = {} but (ᵍc)~·x = {}",
                            fmt_vec(&lhs.column(col)),
                            fmt_vec(&rhs.column(col))
                        ),
                    )
                });
            }
        }
    }
    {
        let mut ax = report.axiom(FAMILY_THETA_ADJOINT, "ρ(c̃·x, y) = ρ(x, (^(g⁻¹)c)~·y)");
        for c in c_grp.elements() {
            for g in p.elements() {
                let t = p.mul(cm.d(c), g);
                let y_grade = p.inv(t);
                // entries [i, j] for x = e_i ∈ L_g and y = e_j ∈ L_{(∂c·g)⁻¹}
                let lhs = thetas[c][g].transpose().mul(l.rho(t));
                let rhs = l.rho(g).mul(&thetas[cm.act(p.inv(g), c)][y_grade]);
                let diff = first_diff(&lhs, &rhs);
                ax.check(diff.is_none(), || {
                    let (i, j) = diff.unwrap();
                    (
                        format!(
                            "(c, g) = ({}, {}), (x, y) = ({}, {})",
                            cn(c),
                            pn(g),
                            l.basis_label(g, i),
                            l.basis_label(y_grade, j)
                        ),
                        format!("{} ≠ {}", lhs.get(i, j).encode(), rhs.get(i, j).encode()),
                    )
                });
            }
        }
    }
    let mut ax = report.axiom(FAMILY_THETA_EQUIVARIANT, "φ_h∘θ_(c,g) = θ_(ʰc,hgh⁻¹)∘φ_h");
    for c in c_grp.elements() {
        for g in p.elements() {
            for h in p.elements() {
                let lhs = l.phi(h, p.mul(cm.d(c), g)).mul(&thetas[c][g]);
                let rhs = thetas[cm.act(h, c)][p.conj(h, g)].mul(l.phi(h, g));
                let diff = first_diff(&lhs, &rhs);
                ax.check(diff.is_none(), || {
                    let (_, col) = diff.unwrap();
                    (
                        format!(
                            "(c, g, h) = ({}, {}, {}), x = {}",
                            cn(c),
                            pn(g),
                            pn(h),
                            l.basis_label(g, col)
                        ),
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
    report
}

/// Checks that c ↦ (c̃, φ_{∂c}) defines a morphism into (U(L), Aut(L), δ):
/// units, δ(c̃) = φ_{∂c} on every grade, and (ᵖc)~ = φ_p(c̃).
pub fn aut_square_check<F: Scalar>(l: &CrossedAlgebra<F>) -> Report {
    let cm = l.crossed_module();
    let (c_grp, p) = (cm.top(), cm.base());
    let mut report = Report::new("morphism into Aut(L)");
    {
        let mut ax = report.axiom("units", "c̃·(c⁻¹)~ = 1 = (c⁻¹)~·c̃");
        for c in c_grp.elements() {
            let ci = c_grp.inv(c);
            let a = l.product(cm.d(c), l.tilde(c), cm.d(ci), l.tilde(ci));
            let b = l.product(cm.d(ci), l.tilde(ci), cm.d(c), l.tilde(c));
            ax.check(a == l.unit() && b == l.unit(), || {
                (
                    c_grp.name(c).into(),
                    format!(
                        "c̃·(c⁻¹)~ = {}, (c⁻¹)~·c̃ = {}, unit = {}",
                        fmt_vec(&a),
                        fmt_vec(&b),
                        fmt_vec(l.unit())
                    ),
                )
            });
        }
    }
    {
        let mut ax = report.axiom("square", "conjugation by c̃ equals φ_∂c");
        for c in c_grp.elements() {
            let dc = cm.d(c);
            let dci = p.inv(dc);
            // an inverse of c̃ inside L_{∂c⁻¹}, if one exists
            let inverse = solve(&l.left_mul(dc, l.tilde(c), dci), l.unit());
            for g in p.elements() {
                let target = l.phi(dc, g);
                let Some(u) = inverse.as_ref() else {
                    ax.check(false, || {
                        (c_grp.name(c).into(), "c̃ has no right inverse".into())
                    });
                    continue;
                };
                let conj = l
                    .right_mul(dci, u, p.mul(dc, g))
                    .mul(&l.left_mul(dc, l.tilde(c), g));
                let diff = first_diff(&conj, target);
                ax.check(diff.is_none(), || {
                    let (_, col) = diff.unwrap();
                    (
                        format!("c = {}, x = {}", c_grp.name(c), l.basis_label(g, col)),
                        format!(
                            "c̃·x·c̃⁻¹ = {} but φ_∂c(x) = {}",
                            fmt_vec(&conj.column(col)),
                            fmt_vec(&target.column(col))
                        ),
                    )
                });
            }
        }
    }
    let mut ax = report.axiom("equivariance", "(ᵖc)~ = φ_p(c̃)");
    for q in p.elements() {
        for c in c_grp.elements() {
            let lhs = l.tilde(cm.act(q, c));
            let rhs = l.phi(q, cm.d(c)).apply(l.tilde(c));
            ax.check(lhs == rhs.as_slice(), || {
                (
                    format!("(p, c) = ({}, {})", p.name(q), c_grp.name(c)),
                    format!("(ᵖc)~ = {} but φ_p(c̃) = {}", fmt_vec(lhs), fmt_vec(&rhs)),
                )
            });
        }
    }
    report
}
