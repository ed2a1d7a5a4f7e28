//! The full axiom list of a crossed C-algebra.

use super::{first_diff, fmt_vec, CrossedAlgebra};
use crate::exact_linalg::{Matrix, Scalar};
use crate::report::Report;

pub const FAMILY_ALGEBRA: &str = "algebra";
pub const FAMILY_FROBENIUS: &str = "frobenius";
pub const FAMILY_ACTION: &str = "action";
pub const FAMILY_OWN_GRADE: &str = "own-grade";
pub const FAMILY_TWISTED: &str = "twisted-commutativity";
pub const FAMILY_TRACE: &str = "trace";
pub const FAMILY_TILDE: &str = "tilde";

/// Every axiom instance, swept exhaustively over grades, basis vectors and elements of C.
pub fn check_crossed_algebra<F: Scalar>(l: &CrossedAlgebra<F>) -> Report {
    let mut report = Report::new("crossed algebra");
    check_algebra(l, &mut report);
    check_frobenius(l, &mut report);
    check_action(l, &mut report);
    check_own_grade(l, &mut report);
    check_twisted(l, &mut report);
    check_trace(l, &mut report);
    check_tilde(l, &mut report);
    report
}

fn name<F: Scalar>(l: &CrossedAlgebra<F>, g: usize) -> String {
    l.crossed_module().base().name(g).to_string()
}

fn check_algebra<F: Scalar>(l: &CrossedAlgebra<F>, report: &mut Report) {
    let p = l.crossed_module().base();
    {
        let mut ax = report.axiom(FAMILY_ALGEBRA, "associativity");
        for g in p.elements() {
            for h in p.elements() {
                for k in p.elements() {
                    let (gh, hk) = (p.mul(g, h), p.mul(h, k));
                    let (dg, dh, dk) = (l.dim(g), l.dim(h), l.dim(k));
                    if dg * dh * dk == 0 {
                        continue;
                    }
                    // (xy)z and x(yz) as maps L_g ⊗ L_h ⊗ L_k → L_{ghk}
                    let lhs = l
                        .mul_block(gh, k)
                        .mul(&l.mul_block(g, h).kron(&Matrix::identity(dk)));
                    let rhs = l
                        .mul_block(g, hk)
                        .mul(&Matrix::identity(dg).kron(l.mul_block(h, k)));
                    let diff = first_diff(&lhs, &rhs);
                    ax.check(diff.is_none(), || {
                        let (_, col) = diff.unwrap();
                        let (i, j, m) = (col / (dh * dk), (col / dk) % dh, col % dk);
                        (
                            format!(
                                "({}, {}, {})",
                                l.basis_label(g, i),
                                l.basis_label(h, j),
                                l.basis_label(k, m)
                            ),
                            format!(
                                "(xy)z = {} but x(yz) = {}",
                                fmt_vec(&lhs.column(col)),
                                fmt_vec(&rhs.column(col))
                            ),
                        )
                    });
                }
            }
        }
    }
    let mut ax = report.axiom(FAMILY_ALGEBRA, "unit");
    let unit = Matrix::from_columns(&[l.unit().to_vec()], l.dim(0));
    for g in p.elements() {
        let dg = l.dim(g);
        let id = Matrix::identity(dg);
        let left = l.mul_block(0, g).mul(&unit.kron(&id));
        let right = l.mul_block(g, 0).mul(&id.kron(&unit));
        for (side, m) in [("1·x", left), ("x·1", right)] {
            let diff = first_diff(&m, &id);
            ax.check(diff.is_none(), || {
                let (_, c) = diff.unwrap();
                (
                    l.basis_label(g, c),
                    format!("{side} = {}", fmt_vec(&m.column(c))),
                )
            });
        }
    }
}

fn check_frobenius<F: Scalar>(l: &CrossedAlgebra<F>, report: &mut Report) {
    let p = l.crossed_module().base();
    {
        let mut ax = report.axiom(FAMILY_FROBENIUS, "rho symmetric");
        for g in p.elements() {
            let a = l.rho(g);
            let b = l.rho(p.inv(g)).transpose();
            let diff = first_diff(a, &b);
            ax.check(diff.is_none(), || {
                let (i, j) = diff.unwrap();
                (
                    format!("({}, {})", l.basis_label(g, i), l.basis_label(p.inv(g), j)),
                    format!(
                        "ρ(x,y) = {} but ρ(y,x) = {}",
                        a.get(i, j).encode(),
                        b.get(i, j).encode()
                    ),
                )
            });
        }
    }
    {
        let mut ax = report.axiom(FAMILY_FROBENIUS, "rho nondegenerate");
        for g in p.elements() {
            let r = l.rho(g);
            ax.check(r.is_invertible(), || {
                (
                    format!("grade {}", name(l, g)),
                    format!("ρ block {}x{} has rank {}", r.rows(), r.cols(), r.rank()),
                )
            });
        }
    }
    let mut ax = report.axiom(FAMILY_FROBENIUS, "rho invariant");
    for g in p.elements() {
        for h in p.elements() {
            let gh = p.mul(g, h);
            let k = p.inv(gh);
            let (dg, dh, dk) = (l.dim(g), l.dim(h), l.dim(k));
            if dg * dh * dk == 0 {
                continue;
            }
            // ρ(xy, z) indexed [(i,j), m] and ρ(x, yz) indexed [i, (j,m)]
            let lhs = l.mul_block(g, h).transpose().mul(l.rho(gh));
            let rhs = l.rho(g).mul(l.mul_block(h, k));
            for i in 0..dg {
                for j in 0..dh {
                    for m in 0..dk {
                        let a = lhs.get(i * dh + j, m);
                        let b = rhs.get(i, j * dk + m);
                        ax.check(a == b, || {
                            (
                                format!(
                                    "({}, {}, {})",
                                    l.basis_label(g, i),
                                    l.basis_label(h, j),
                                    l.basis_label(k, m)
                                ),
                                format!("ρ(xy,z) = {} but ρ(x,yz) = {}", a.encode(), b.encode()),
                            )
                        });
                    }
                }
            }
        }
    }
}

fn check_action<F: Scalar>(l: &CrossedAlgebra<F>, report: &mut Report) {
    let p = l.crossed_module().base();
    {
        let mut ax = report.axiom(FAMILY_ACTION, "phi of identity");
        for g in p.elements() {
            let diff = first_diff(l.phi(0, g), &Matrix::identity(l.dim(g)));
            ax.check(diff.is_none(), || {
                let (_, c) = diff.unwrap();
                (
                    l.basis_label(g, c),
                    format!("φ_1(x) = {}", fmt_vec(&l.phi(0, g).column(c))),
                )
            });
        }
    }
    {
        let mut ax = report.axiom(FAMILY_ACTION, "phi homomorphism");
        for h1 in p.elements() {
            for h2 in p.elements() {
                for g in p.elements() {
                    let lhs = l.phi(p.mul(h1, h2), g);
                    let rhs = l.phi(h1, p.conj(h2, g)).mul(l.phi(h2, g));
                    let diff = first_diff(lhs, &rhs);
                    ax.check(diff.is_none(), || {
                        let (_, c) = diff.unwrap();
                        (
                            format!(
                                "(h₁, h₂) = ({}, {}), x = {}",
                                name(l, h1),
                                name(l, h2),
                                l.basis_label(g, c)
                            ),
                            format!(
                                "φ_(h₁h₂)(x) = {} but φ_h₁φ_h₂(x) = {}",
                                fmt_vec(&lhs.column(c)),
                                fmt_vec(&rhs.column(c))
                            ),
                        )
                    });
                }
            }
        }
    }
    {
        let mut ax = report.axiom(FAMILY_ACTION, "phi multiplicative");
        for h in p.elements() {
            for g in p.elements() {
                for k in p.elements() {
                    let (dg, dk) = (l.dim(g), l.dim(k));
                    if dg * dk == 0 {
                        continue;
                    }
                    let lhs = l.phi(h, p.mul(g, k)).mul(l.mul_block(g, k));
                    let rhs = l
                        .mul_block(p.conj(h, g), p.conj(h, k))
                        .mul(&l.phi(h, g).kron(l.phi(h, k)));
                    let diff = first_diff(&lhs, &rhs);
                    ax.check(diff.is_none(), || {
                        let (_, c) = diff.unwrap();
                        (
                            format!(
                                "h = {}, (x, y) = ({}, {})",
                                name(l, h),
                                l.basis_label(g, c / dk),
                                l.basis_label(k, c % dk)
                            ),
                            format!(
                                "φ_h(xy) = {} but φ_h(x)φ_h(y) = {}",
                                fmt_vec(&lhs.column(c)),
                                fmt_vec(&rhs.column(c))
                            ),
                        )
                    });
                }
            }
        }
    }
    {
        let mut ax = report.axiom(FAMILY_ACTION, "phi fixes unit");
        for h in p.elements() {
            let v = l.phi(h, 0).apply(l.unit());
            ax.check(v == l.unit(), || {
                (
                    format!("h = {}", name(l, h)),
                    format!("φ_h(1) = {}", fmt_vec(&v)),
                )
            });
        }
    }
    let mut ax = report.axiom(FAMILY_ACTION, "phi preserves rho");
    for h in p.elements() {
        for g in p.elements() {
            let gi = p.inv(g);
            let lhs = l
                .phi(h, g)
                .transpose()
                .mul(l.rho(p.conj(h, g)))
                .mul(l.phi(h, gi));
            let diff = first_diff(&lhs, l.rho(g));
            ax.check(diff.is_none(), || {
                let (i, j) = diff.unwrap();
                (
                    format!(
                        "h = {}, (x, y) = ({}, {})",
                        name(l, h),
                        l.basis_label(g, i),
                        l.basis_label(gi, j)
                    ),
                    format!(
                        "ρ(φ_h x, φ_h y) = {} but ρ(x, y) = {}",
                        lhs.get(i, j).encode(),
                        l.rho(g).get(i, j).encode()
                    ),
                )
            });
        }
    }
}

fn check_own_grade<F: Scalar>(l: &CrossedAlgebra<F>, report: &mut Report) {
    let p = l.crossed_module().base();
    let mut ax = report.axiom(FAMILY_OWN_GRADE, "phi_g is the identity on L_g");
    for g in p.elements() {
        let diff = first_diff(l.phi(g, g), &Matrix::identity(l.dim(g)));
        ax.check(diff.is_none(), || {
            let (_, c) = diff.unwrap();
            (
                l.basis_label(g, c),
                format!("φ_g(x) = {}", fmt_vec(&l.phi(g, g).column(c))),
            )
        });
    }
}

fn check_twisted<F: Scalar>(l: &CrossedAlgebra<F>, report: &mut Report) {
    let p = l.crossed_module().base();
    let mut ax = report.axiom(FAMILY_TWISTED, "phi_h(a)·b = b·a");
    for g in p.elements() {
        for h in p.elements() {
            for i in 0..l.dim(g) {
                let a = l.basis_vector(g, i);
                let pa = l.phi(h, g).apply(&a);
                for j in 0..l.dim(h) {
                    let b = l.basis_vector(h, j);
                    let lhs = l.product(p.conj(h, g), &pa, h, &b);
                    let rhs = l.product(h, &b, g, &a);
                    ax.check(lhs == rhs, || {
                        (
                            format!(
                                "(a, b) = ({}, {})",
                                l.basis_label(g, i),
                                l.basis_label(h, j)
                            ),
                            format!("φ_h(a)·b = {} but b·a = {}", fmt_vec(&lhs), fmt_vec(&rhs)),
                        )
                    });
                }
            }
        }
    }
}

/// Both sides of the trace axiom for c ∈ L_{ghg⁻¹h⁻¹}.
pub fn trace_pair<F: Scalar>(l: &CrossedAlgebra<F>, g: usize, h: usize, c: &[F]) -> (F, F) {
    let p = l.crossed_module().base();
    let k = p.product(&[g, h, p.inv(g), p.inv(h)]);
    let hg = p.conj(h, g);
    let lhs = l.left_mul(k, c, hg).mul(l.phi(h, g));
    let rhs = l.phi(p.inv(g), p.conj(g, h)).mul(&l.left_mul(k, c, h));
    (lhs.trace().expect("square"), rhs.trace().expect("square"))
}

fn check_trace<F: Scalar>(l: &CrossedAlgebra<F>, report: &mut Report) {
    let p = l.crossed_module().base();
    let mut ax = report.axiom(FAMILY_TRACE, "Tr(c·φ_h on L_g) = Tr(φ_g⁻¹∘c· on L_h)");
    for g in p.elements() {
        for h in p.elements() {
            let k = p.product(&[g, h, p.inv(g), p.inv(h)]);
            for m in 0..l.dim(k) {
                let c = l.basis_vector(k, m);
                let (a, b) = trace_pair(l, g, h, &c);
                ax.check(a == b, || {
                    (
                        format!(
                            "(g, h) = ({}, {}), c = {}",
                            name(l, g),
                            name(l, h),
                            l.basis_label(k, m)
                        ),
                        format!("traces {} and {}", a.encode(), b.encode()),
                    )
                });
            }
        }
    }
}

fn check_tilde<F: Scalar>(l: &CrossedAlgebra<F>, report: &mut Report) {
    let cm = l.crossed_module();
    let (c_grp, p) = (cm.top(), cm.base());
    report
        .axiom(FAMILY_TILDE, "tilde of identity is the unit")
        .check(l.tilde(0) == l.unit(), || {
            (
                "1".into(),
                format!("1̃ = {} but 1 = {}", fmt_vec(l.tilde(0)), fmt_vec(l.unit())),
            )
        });
    {
        let mut ax = report.axiom(FAMILY_TILDE, "tilde multiplicative");
        for c2 in c_grp.elements() {
            for c in c_grp.elements() {
                let lhs = l.tilde(c_grp.mul(c2, c));
                let rhs = l.product(cm.d(c2), l.tilde(c2), cm.d(c), l.tilde(c));
                ax.check(lhs == rhs.as_slice(), || {
                    (
                        format!("(c′, c) = ({}, {})", c_grp.name(c2), c_grp.name(c)),
                        format!("(c′c)~ = {} but c̃′·c̃ = {}", fmt_vec(lhs), fmt_vec(&rhs)),
                    )
                });
            }
        }
    }
    let mut ax = report.axiom(FAMILY_TILDE, "tilde equivariant");
    for h in p.elements() {
        for c in c_grp.elements() {
            let lhs = l.phi(h, cm.d(c)).apply(l.tilde(c));
            let rhs = l.tilde(cm.act(h, c));
            ax.check(lhs == rhs, || {
                (
                    format!("(h, c) = ({}, {})", p.name(h), c_grp.name(c)),
                    format!("φ_h(c̃) = {} but (ʰc)~ = {}", fmt_vec(&lhs), fmt_vec(rhs)),
                )
            });
        }
    }
}
