mod common;

use common::*;
use crossed_hqft::crossed_algebras::*;
use crossed_hqft::crossed_modules::{standard, CrossedModule, CrossedModuleMorphism};
use crossed_hqft::exact_linalg::{Matrix, Scalar};
use crossed_hqft::groups::{
    cocycle_from_section, FiniteGroup, GroupAction, GroupHomomorphism, Section,
};
use crossed_hqft::{Rational, F2, F3};
use num_traits::{One, Zero};

type L = CrossedAlgebra<Rational>;

fn one_by_one(x: i64) -> Matrix<Rational> {
    Matrix::from_fn(1, 1, |_, _| q(x))
}

#[test]
fn group_algebra_c_dims_match_count_oracle() {
    for (name, cm) in standard::all() {
        let l: L = group_algebra_c(&cm);
        let kernel = cm.top().elements().filter(|&c| cm.d(c) == 0).count();
        for p in cm.base().elements() {
            let count = cm.top().elements().filter(|&c| cm.d(c) == p).count();
            let in_image = cm.top().elements().any(|c| cm.d(c) == p);
            assert_eq!(l.dim(p), count, "{name} grade {}", cm.base().name(p));
            assert_eq!(l.dim(p), if in_image { kernel } else { 0 });
        }
    }
    let id2: L = group_algebra_c(&standard::cm_id2());
    assert_eq!((id2.dim(0), id2.dim(1)), (1, 1));
    let a3s3 = standard::cm_a3s3();
    let l: L = group_algebra_c(&a3s3);
    assert_eq!(l.total_dim(), 3);
    for n in S3_NAMES {
        assert_eq!(l.dim(idx(a3s3.base(), n)), usize::from(sign(n) > 0));
    }
    let m: L = group_algebra_c(&standard::cm_mod());
    assert_eq!((m.dim(0), m.dim(1)), (3, 0));
}

#[test]
fn group_algebra_c_over_surjective_boundary_passes() {
    for cm in [standard::cm_id2(), standard::cm_aut_s3()] {
        let r = check_crossed_algebra::<Rational>(&group_algebra_c(&cm));
        assert!(r.passed, "{}", r.summary());
    }
}

/// The trace axiom fails for K[C] at g = 1, h ∉ ∂C, c = e_1: the left trace
/// counts fixed points of h on ker ∂ while L_h = 0.
#[test]
fn group_algebra_c_trace_failure_is_exactly_the_missing_grades() {
    for cm in [standard::cm_a3s3(), standard::cm_mod()] {
        let l: L = group_algebra_c(&cm);
        let r = check_crossed_algebra(&l);
        assert_eq!(r.failed_families(), vec![FAMILY_TRACE.to_string()]);
        let p = cm.base();
        for h in p.elements() {
            let in_image = cm.top().elements().any(|c| cm.d(c) == h);
            let unit = l.unit().to_vec();
            let (lhs, rhs) = trace_pair(&l, 0, h, &unit);
            let fixed = cm
                .top()
                .elements()
                .filter(|&c| cm.d(c) == 0 && cm.act(h, c) == c)
                .count();
            assert_eq!(lhs, q(fixed as i64));
            if !in_image {
                assert!(rhs.is_zero());
                assert_ne!(lhs, rhs);
            }
        }
    }
}

#[test]
fn group_algebra_p_examples() {
    for (name, cm) in standard::all() {
        let l: L = group_algebra_p(&cm);
        assert!(check_crossed_algebra(&l).passed, "{name}");
        for g in cm.base().elements() {
            assert_eq!(l.dim(g), 1);
        }
        for h in cm.base().elements() {
            for g in cm.base().elements() {
                // φ_h(e_g) = e_{hgh⁻¹}: the only nonzero block has target grade hgh⁻¹.
                assert_eq!(l.phi(h, g), &one_by_one(1));
            }
        }
        for c in cm.top().elements() {
            assert_eq!(l.tilde(c), &[Rational::one()][..], "{name}");
        }
    }
    let id2 = standard::cm_id2();
    let l: L = group_algebra_p(&id2);
    assert_eq!(l.total_dim(), 2);
    let a3s3 = standard::cm_a3s3();
    let l: L = group_algebra_p(&a3s3);
    assert_eq!(l.total_dim(), 6);
    let c123 = idx(a3s3.top(), "(123)");
    assert_eq!(a3s3.base().name(a3s3.d(c123)), "(123)");
}

#[test]
fn broken_tilde_is_reported() {
    let cm = standard::cm_id2();
    let l: L = group_algebra_p(&cm);
    let mut parts = l.parts();
    parts.tilde[1] = vec![Rational::zero()];
    let bad = CrossedAlgebra::from_parts(cm.clone(), parts).unwrap();
    let r = check_crossed_algebra(&bad);
    assert!(!r.family_passed(FAMILY_TILDE));
    // A tilde vector outside L_{∂c} is not representable.
    let mut parts = l.parts();
    parts.tilde[1] = vec![Rational::one(), Rational::one()];
    assert!(CrossedAlgebra::from_parts(cm, parts).is_err());
}

#[test]
fn theta_examples() {
    let id2 = standard::cm_id2();
    let l: L = group_algebra_c(&id2);
    assert_eq!(theta(&l, 1, 0).unwrap(), one_by_one(1));
    for (name, cm) in standard::all() {
        let l: L = group_algebra_p(&cm);
        let (c_grp, p) = (cm.top(), cm.base());
        for g in p.elements() {
            assert_eq!(
                theta(&l, 0, g).unwrap(),
                Matrix::identity(l.dim(g)),
                "{name}"
            );
            for c in c_grp.elements() {
                let t = theta(&l, c, g).unwrap();
                for c2 in c_grp.elements() {
                    let composite = theta(&l, c2, p.mul(cm.d(c), g)).unwrap().mul(&t);
                    assert_eq!(composite, theta(&l, c_grp.mul(c2, c), g).unwrap(), "{name}");
                }
            }
        }
    }
}

#[test]
fn units_property_and_aut_square() {
    for (name, cm) in standard::all() {
        for l in [group_algebra_c::<Rational>(&cm), group_algebra_p(&cm)] {
            for c in cm.top().elements() {
                let ci = cm.top().inv(c);
                let prod = l.product(cm.d(c), l.tilde(c), cm.d(ci), l.tilde(ci));
                assert_eq!(prod, l.unit().to_vec(), "{name}");
            }
            assert!(aut_square_check(&l).passed, "{name}");
            assert!(check_boxed_identities(&l).passed, "{name}");
        }
    }
}

#[test]
fn phi_mutation_shows_up_in_boxed_family_four() {
    let cm = standard::cm_a3s3();
    let l: L = group_algebra_p(&cm);
    let p = cm.base();
    let (h, g) = (idx(p, "(12)"), idx(p, "(123)"));
    let mut parts = l.parts();
    let n = p.order();
    parts.phi[h * n + g] = one_by_one(2);
    let bad = CrossedAlgebra::from_parts(cm, parts).unwrap();
    let r = check_boxed_identities(&bad);
    assert!(!r.passed);
    assert_eq!(
        r.failed_families(),
        vec![FAMILY_THETA_EQUIVARIANT.to_string()]
    );
}

#[test]
fn scaled_tilde_fails_units_not_square() {
    // (123)~ = 2·e_(123): conjugation by it is still φ_∂c, but (123)~·(132)~ = 2.
    let cm = standard::cm_a3s3();
    let l: L = group_algebra_p(&cm);
    let mut parts = l.parts();
    parts.tilde[idx(cm.top(), "(123)")] = vec![q(2)];
    let bad = CrossedAlgebra::from_parts(cm, parts).unwrap();
    assert!(!check_crossed_algebra(&bad).family_passed(FAMILY_TILDE));
    let r = aut_square_check(&bad);
    assert!(r.family_passed("square"));
    assert!(!r.family_passed("units"));
}

fn trivial_cm() -> CrossedModule {
    CrossedModule::over_group(&FiniteGroup::trivial())
}

fn to_trivial(cm: &CrossedModule) -> CrossedModuleMorphism {
    let t = trivial_cm();
    let f1 = GroupHomomorphism::trivial(cm.top(), t.top());
    let f0 = GroupHomomorphism::trivial(cm.base(), t.base());
    CrossedModuleMorphism::new(cm.clone(), t, f1, f0).unwrap()
}

#[test]
fn pullback_examples() {
    let cm = standard::cm_a3s3();
    let l: L = group_algebra_p(&cm);
    let id = CrossedModuleMorphism::identity(&cm);
    assert_eq!(pullback(&id, &l).unwrap(), l);

    let q_mor = cm.quotient_morphism();
    let kg: L = group_algebra_p(q_mor.target());
    let pulled = pullback(&q_mor, &kg).unwrap();
    assert!(check_crossed_algebra(&pulled).passed);
    assert_eq!(pulled.total_dim(), 6);
    for p in cm.base().elements() {
        assert_eq!(pulled.dim(p), 1);
    }
    // ρ vanishes between grades that are not inverse in P even when their images pair.
    let (a, b) = (idx(cm.base(), "(12)"), idx(cm.base(), "(13)"));
    assert!(pulled.pairing(a, &[q(1)], b, &[q(1)]).is_zero());
    assert!(pulled.pairing(a, &[q(1)], a, &[q(1)]).is_one());

    let field: L = group_algebra_p(&trivial_cm());
    for cm in [standard::cm_a3s3(), standard::cm_mod(), standard::cm_id2()] {
        let pulled = pullback(&to_trivial(&cm), &field).unwrap();
        assert!(check_crossed_algebra(&pulled).passed);
        for g in cm.base().elements() {
            assert_eq!(pulled.dim(g), 1);
            for h in cm.base().elements() {
                assert_eq!(pulled.mul_block(g, h), &one_by_one(1));
            }
        }
    }
}

/// Checks the cocycle law on every product of q*(K[G]) with S3 arithmetic done by hand.
fn cocycle_law_oracle(w: &KpIso<Rational>, cm: &CrossedModule) -> usize {
    let p = cm.base();
    let name = |x: usize| p.name(x).to_string();
    let proj = w.quotient.f_base();
    let s = |g: usize| name(w.section.lift(g));
    let mut checked = 0;
    for p1 in p.elements() {
        for p2 in p.elements() {
            let (g1, g2) = (proj.apply(p1), proj.apply(p2));
            let n1 = s3_mul(&name(p1), &s3_inv(&s(g1)));
            let n2 = s3_mul(&name(p2), &s3_inv(&s(g2)));
            let g12 = proj.apply(p.mul(p1, p2));
            let f = s3_prod(&[&s(g1), &s(g2), &s3_inv(&s(g12))]);
            let n = s3_prod(&[&n1, &s3_conj(&s(g1), &n2), &f]);
            let grade = s3_mul(&n, &s(g12));
            assert_eq!(grade, s3_mul(&name(p1), &name(p2)));
            assert_eq!(w.pulled.mul_block(p1, p2), &one_by_one(1));
            checked += 1;
        }
    }
    checked
}

#[test]
fn kp_iso_examples() {
    let id2 = standard::cm_id2();
    let w = kp_iso_witness::<Rational>(&id2, None).unwrap();
    assert!(w.report.passed);
    assert_eq!(w.kp.total_dim(), 2);
    assert!(w.cocycle.is_trivial());

    let cm = standard::cm_a3s3();
    let w = kp_iso_witness::<Rational>(&cm, None).unwrap();
    assert!(w.report.passed, "{}", w.report.summary());
    assert!(w.morphism.is_bijective());
    assert!(check_algebra_morphism(&w.morphism, &w.kp, &w.pulled).passed);
    assert_eq!(cocycle_law_oracle(&w, &cm), 36);
    assert_eq!(
        w.report
            .result("(e_g₁)_n₁(e_g₂)_n₂ = (e_g₁g₂)_(n₁·^s(g₁)n₂·f(g₁,g₂))")
            .unwrap()
            .checked,
        36
    );

    // Split section s(−1) = (12) makes f ≡ 1.
    let q_mor = cm.quotient_morphism();
    let minus = 1 - q_mor.target().base().identity();
    let mut choice = vec![0; 2];
    choice[minus] = idx(cm.base(), "(12)");
    let sec = Section::new(q_mor.f_base().clone(), choice).unwrap();
    assert!(cocycle_from_section(&sec).unwrap().is_trivial());
    let w = kp_iso_witness::<Rational>(&cm, Some(sec)).unwrap();
    assert!(w.report.passed);
    assert_eq!(cocycle_law_oracle(&w, &cm), 36);
}

#[test]
fn kp_iso_transposes_to_a_morphism_over_q() {
    let cm = standard::cm_a3s3();
    let w = kp_iso_witness::<Rational>(&cm, None).unwrap();
    let kg: L = group_algebra_p(w.quotient.target());
    let over_q = untranspose_from_pullback(&w.morphism, &w.quotient, &w.kp, &kg).unwrap();
    assert!(check_algebra_morphism(&over_q, &w.kp, &kg).passed);
    assert_eq!(
        transpose_to_pullback(&over_q, &w.kp, &w.pulled).unwrap(),
        w.morphism
    );
}

#[test]
fn identity_morphism_transposes_to_identity() {
    let cm = standard::cm_id2();
    let l: L = group_algebra_p(&cm);
    let f = CrossedModuleMorphism::identity(&cm);
    let id = CrossedAlgebraMorphism::identity(&l);
    let pulled = pullback(&f, &l).unwrap();
    assert_eq!(
        transpose_to_pullback(&id, &l, &pulled).unwrap().blocks(),
        id.blocks()
    );
    let pf = pushforward(&f, &l).unwrap();
    assert_eq!(pf.ideal_dim(), 0);
    assert_eq!(pf.algebra, l);
    assert_eq!(
        transpose_from_pushforward(&id, &l, &pf, &l)
            .unwrap()
            .blocks(),
        id.blocks()
    );
}

#[test]
fn pushforward_of_k_s3_along_q() {
    let cm = standard::cm_a3s3();
    let f = cm.quotient_morphism();
    let l: L = group_algebra_p(&cm);
    let pf = pushforward(&f, &l).unwrap();
    assert_eq!(pf.ideal_dim(), ks3_ideal_oracle());
    assert_eq!(pf.ideal_dim(), 4);
    assert!(pf.rho_report.passed);
    assert!(check_crossed_algebra(&pf.algebra).passed);
    assert_eq!(pf.algebra.crossed_module(), f.target());
    let dims: Vec<usize> = f
        .target()
        .base()
        .elements()
        .map(|g| pf.algebra.dim(g))
        .collect();
    assert_eq!(dims, vec![1, 1]);
}

#[test]
fn pushforward_of_k_c_over_cm_mod() {
    let cm = standard::cm_mod();
    let f = cm.quotient_morphism();
    let l: L = group_algebra_c(&cm);
    let ideal = pushforward_ideal(&f, &l).unwrap();
    assert_eq!(ideal.quotient_dims[0], 1);
    assert_eq!(ideal.quotient_dims[1], 0);
    // ρ̄(1,1) would have to be both ρ(e_0,e_0) = 1 and ρ(e_1,e_0) = 0.
    assert!(matches!(
        pushforward(&f, &l),
        Err(AlgebraError::RhoIllDefined { .. })
    ));
}

#[test]
fn pushforward_needs_an_epimorphism() {
    let cm = standard::cm_id2();
    let target = CrossedModule::over_group(&FiniteGroup::z2());
    let f1 = GroupHomomorphism::trivial(cm.top(), target.top());
    let f0 = GroupHomomorphism::trivial(cm.base(), target.base());
    let f = CrossedModuleMorphism::new(cm.clone(), target, f1, f0).unwrap();
    let l: L = group_algebra_c(&cm);
    assert!(matches!(
        pushforward(&f, &l),
        Err(AlgebraError::NotEpimorphism)
    ));
}

#[test]
fn adjunction_over_f2() {
    let cm = standard::cm_id2();
    let f = cm.quotient_morphism();
    let l: CrossedAlgebra<F2> = group_algebra_c(&cm);
    let lp: CrossedAlgebra<F2> = group_algebra_p(f.target());
    let (counts, r) = check_adjunction(&f, &l, &lp, DEFAULT_SEARCH_BOUND).unwrap();
    assert!(r.passed, "{}", r.summary());
    assert!(counts.over_f >= 1);
    assert_eq!(counts.over_f, counts.into_pullback);
    assert_eq!(counts.over_f, counts.from_pushforward);
}

#[test]
fn adjunction_over_f3_on_a3s3() {
    let cm = standard::cm_a3s3();
    let f = cm.quotient_morphism();
    let l: CrossedAlgebra<F3> = group_algebra_p(&cm);
    let lp: CrossedAlgebra<F3> = group_algebra_p(f.target());
    let (counts, r) = check_adjunction(&f, &l, &lp, DEFAULT_SEARCH_BOUND).unwrap();
    assert!(r.passed, "{}", r.summary());
    assert!(counts.over_f >= 1);
}

#[test]
fn morphism_search_refuses_rationals() {
    let cm = standard::cm_id2();
    let l: L = group_algebra_p(&cm);
    let f = CrossedModuleMorphism::identity(&cm);
    assert!(matches!(
        enumerate_morphisms(&f, &l, &l, DEFAULT_SEARCH_BOUND),
        Err(AlgebraError::InfiniteField)
    ));
}

#[test]
fn degenerate_trivial_top_is_a_crossed_pi_algebra() {
    // C trivial: the tilde axioms only involve 1̃ = 1, so the checker reduces to
    // the crossed π-algebra list; K[P] over (1 → Z/2) passes it.
    let cm = CrossedModule::over_group(&FiniteGroup::z2());
    let l: L = group_algebra_p(&cm);
    let r = check_crossed_algebra(&l);
    assert!(r.passed);
    assert_eq!(r.result("tilde multiplicative").unwrap().checked, 1);
}

#[test]
fn degenerate_trivial_base_acts_through_central_units() {
    // P trivial, C = Z/3 abelian: L = L₁ = K[Z/3] is a Frobenius algebra and
    // c ↦ c̃ lands in central units of L₁.
    let z3 = FiniteGroup::cyclic(3);
    let one = FiniteGroup::trivial();
    let cm = crossed_hqft::crossed_modules::from_module(&z3, &one, GroupAction::trivial(&one, &z3))
        .unwrap();
    let l: L = group_algebra_c(&cm);
    assert!(check_crossed_algebra(&l).passed);
    for c in cm.top().elements() {
        let x = l.tilde(c).to_vec();
        for i in 0..l.dim(0) {
            let b = l.basis_vector(0, i);
            assert_eq!(l.product(0, &x, 0, &b), l.product(0, &b, 0, &x));
        }
    }
}

#[test]
fn scalars_are_generic() {
    fn dims<F: Scalar>() -> usize {
        group_algebra_p::<F>(&standard::cm_a3s3()).total_dim()
    }
    assert_eq!(dims::<Rational>(), dims::<F2>());
    assert_eq!(dims::<F3>(), 6);
}
