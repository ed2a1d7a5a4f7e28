mod common;

use common::*;
use crossed_hqft::crossed_algebras::{group_algebra_c, group_algebra_p, CrossedAlgebra};
use crossed_hqft::crossed_modules::standard;
use crossed_hqft::formal_maps::{CobordismExpression, ElementaryPiece, FormalBoundary};
use crossed_hqft::hqft::{
    check_equivalence_invariance, random_expression, FormalHqft, HqftError, FAMILY_DISC_CYL,
    FAMILY_INNER_PRODUCT, FAMILY_PANTS, FAMILY_WHISKERING,
};
use crossed_hqft::{Matrix, Rational, Scalar, F2, F3};
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::SeedableRng;

use ElementaryPiece::*;

fn e<F: Scalar>(dim: usize, i: usize) -> Vec<F> {
    (0..dim)
        .map(|j| if i == j { F::one() } else { F::zero() })
        .collect()
}

#[test]
fn state_space_dimensions() {
    let cm = standard::cm_mod();
    let kc = group_algebra_c::<Rational>(&cm);
    let tau = FormalHqft::unchecked(&kc);
    assert_eq!(tau.state_space(&FormalBoundary::empty()).dim(), 1);
    assert_eq!(
        tau.state_space(&FormalBoundary::from_grades(&[0, 0])).dim(),
        9
    );
    let t = idx(cm.base(), "t");
    assert_eq!(
        tau.state_space(&FormalBoundary::from_grades(&[0, t])).dim(),
        0
    );
    // A two-label circuit is read through its holonomy.
    let b = FormalBoundary::from_lists(vec![vec![t, t]]).unwrap();
    assert_eq!(tau.state_space(&b).dim(), 3);

    let a3s3 = standard::cm_a3s3();
    let kc = group_algebra_c::<Rational>(&a3s3);
    let tau = FormalHqft::unchecked(&kc);
    let p = a3s3.base();
    let dims: Vec<usize> = p
        .elements()
        .map(|g| tau.state_space(&FormalBoundary::from_grades(&[g])).dim())
        .collect();
    for g in p.elements() {
        assert_eq!(dims[g], usize::from(sign(p.name(g)) > 0), "{}", p.name(g));
    }
}

#[test]
fn elementary_pieces_on_kp() {
    let cm = standard::cm_a3s3();
    let (c, p) = (cm.top(), cm.base());
    let kp = group_algebra_p::<Rational>(&cm);
    let tau = FormalHqft::new(&kp).unwrap();
    assert_eq!(
        tau.eval_piece(&Disc { c: 0 }).unwrap().matrix.column(0),
        kp.unit().to_vec()
    );
    for g in p.elements() {
        assert_eq!(
            tau.eval_piece(&Cyl { c: 0, g, h: 0 }).unwrap().matrix,
            Matrix::identity(1)
        );
        assert_eq!(
            tau.eval_piece(&Id { g }).unwrap().matrix,
            Matrix::identity(1)
        );
    }
    let cyl = tau
        .eval_piece(&Cyl {
            c: 0,
            g: idx(p, "(123)"),
            h: idx(p, "(12)"),
        })
        .unwrap();
    assert_eq!(
        p.name(cyl.target.grades(p)[0]),
        s3_prod(&["(12)", "(123)", "(12)"])
    );
    assert_eq!(p.name(cyl.target.grades(p)[0]), "(132)");
    assert_eq!(cyl.matrix, Matrix::identity(1));

    let disc = tau.eval_piece(&Disc { c: idx(c, "(123)") }).unwrap();
    assert_eq!(p.name(disc.target.grades(p)[0]), "(123)");
    assert_eq!(disc.matrix.column(0), vec![Rational::one()]);
}

#[test]
fn elementary_pieces_on_kc() {
    let cm = standard::cm_a3s3();
    let (c, p) = (cm.top(), cm.base());
    let kc = group_algebra_c::<Rational>(&cm);
    let tau = FormalHqft::unchecked(&kc);
    let c123 = idx(c, "(123)");
    let g123 = cm.d(c123);
    let pants = tau
        .eval_piece(&Pants {
            c: 0,
            g1: g123,
            g2: g123,
        })
        .unwrap();
    assert_eq!(p.name(pants.target.grades(p)[0]), s3_mul("(123)", "(123)"));
    assert_eq!(pants.matrix, Matrix::identity(1));
    // Pants(c, ...) multiplies by c̃ afterwards.
    let pants_c = tau
        .eval_piece(&Pants {
            c: c123,
            g1: 0,
            g2: 0,
        })
        .unwrap();
    assert_eq!(p.name(pants_c.target.grades(p)[0]), "(123)");
    assert_eq!(pants_c.matrix, Matrix::identity(1));

    // Disc(c) then Cyl(1, ∂c, h) is Disc(^{h⁻¹}c).
    for cn in A3_NAMES {
        for hn in S3_NAMES {
            let cc = idx(c, cn);
            let ex = CobordismExpression::from_layers(
                &cm,
                vec![
                    vec![Disc { c: cc }],
                    vec![Cyl {
                        c: 0,
                        g: cm.d(cc),
                        h: idx(p, hn),
                    }],
                ],
            );
            let got = tau.eval_expression(&ex).unwrap();
            let want = s3_conj(&s3_inv(hn), cn);
            assert_eq!(p.name(got.target.grades(p)[0]), want);
            assert_eq!(got.matrix.column(0), kc.tilde(idx(c, &want)).to_vec());
        }
    }
}

#[test]
fn empty_expression_is_identity() {
    let cm = standard::cm_mod();
    let kc = group_algebra_c::<F3>(&cm);
    let tau = FormalHqft::unchecked(&kc);
    let id = CobordismExpression::identity(FormalBoundary::from_grades(&[0, 0]));
    assert_eq!(
        tau.eval_expression(&id).unwrap().matrix,
        Matrix::identity(9)
    );
    let none = CobordismExpression::identity(FormalBoundary::empty());
    assert_eq!(
        tau.eval_expression(&none).unwrap().matrix,
        Matrix::identity(1)
    );
}

#[test]
fn cup_swap_cap_is_the_dimension() {
    // Σᵢ ρ(eⁱ, eᵢ) over a dual basis counts the basis.
    for (name, cm) in standard::all() {
        for l in [
            group_algebra_c::<Rational>(&cm),
            group_algebra_p::<Rational>(&cm),
        ] {
            let tau = FormalHqft::unchecked(&l);
            let p = cm.base();
            for g in p.elements() {
                let ex = CobordismExpression::from_layers(
                    &cm,
                    vec![
                        vec![Cup { g }],
                        vec![Swap {
                            g1: g,
                            g2: p.inv(g),
                        }],
                        vec![Cap { g: p.inv(g) }],
                    ],
                );
                let m = tau.eval_expression(&ex).unwrap().matrix;
                assert_eq!((m.rows(), m.cols()), (1, 1));
                assert_eq!(*m.get(0, 0), Rational::from_i64(l.dim(g) as i64), "{name}");
            }
        }
    }
}

#[test]
fn cup_then_cap_on_kc_over_mod() {
    // Cup = Σ e_a ⊗ e_{−a}; Cap pairs e_a with e_b when a + b = 0.
    let cm = standard::cm_mod();
    let kc = group_algebra_c::<Rational>(&cm);
    let tau = FormalHqft::unchecked(&kc);
    let cup = tau.eval_piece(&Cup { g: 0 }).unwrap().matrix;
    let mut want = vec![Rational::zero(); 9];
    for a in 0..3 {
        want[a * 3 + (3 - a) % 3] = Rational::one();
    }
    assert_eq!(cup.column(0), want);
    let cap = tau.eval_piece(&Cap { g: 0 }).unwrap().matrix;
    assert_eq!(cap.row(0), want);
}

#[test]
fn snake_identity() {
    for (name, cm) in standard::all() {
        let l = group_algebra_p::<F2>(&cm);
        let tau = FormalHqft::new(&l).unwrap();
        let p = cm.base();
        for g in p.elements() {
            let ex = CobordismExpression::from_layers(
                &cm,
                vec![
                    vec![Id { g }, Cup { g: p.inv(g) }],
                    vec![Cap { g }, Id { g }],
                ],
            );
            let m = tau.eval_expression(&ex).unwrap().matrix;
            assert_eq!(m, Matrix::identity(l.dim(g)), "{name}");
        }
    }
}

#[test]
fn swap_twice_is_identity() {
    let cm = standard::cm_mod();
    let kc = group_algebra_c::<Rational>(&cm);
    let tau = FormalHqft::unchecked(&kc);
    let ex = CobordismExpression::from_layers(
        &cm,
        vec![vec![Swap { g1: 0, g2: 0 }], vec![Swap { g1: 0, g2: 0 }]],
    );
    assert_eq!(
        tau.eval_expression(&ex).unwrap().matrix,
        Matrix::identity(9)
    );
    let once = tau.eval_piece(&Swap { g1: 0, g2: 0 }).unwrap().matrix;
    assert_ne!(once, Matrix::identity(9));
    // e₀ ⊗ e₁ ↦ e₁ ⊗ e₀
    let v = once.apply(&e::<Rational>(9, 1));
    assert_eq!(v, e(9, 3));
}

#[test]
fn ill_typed_expressions_are_rejected() {
    let cm = standard::cm_a3s3();
    let kp = group_algebra_p::<Rational>(&cm);
    let tau = FormalHqft::new(&kp).unwrap();
    let c = idx(cm.top(), "(123)");
    let bad =
        CobordismExpression::from_layers(&cm, vec![vec![Disc { c }], vec![Cap { g: cm.d(c) }]]);
    assert!(matches!(
        tau.eval_expression(&bad),
        Err(HqftError::TypecheckFailed(_))
    ));
}

fn fixture_algebras() -> Vec<(String, CrossedAlgebra<Rational>)> {
    let mut v = Vec::new();
    for (name, cm) in standard::all() {
        v.push((format!("kC over {name}"), group_algebra_c(&cm)));
        v.push((format!("kP over {name}"), group_algebra_p(&cm)));
    }
    v
}

#[test]
fn extracting_the_algebra_round_trips() {
    for (name, l) in fixture_algebras() {
        let back = FormalHqft::unchecked(&l).extract_algebra().unwrap();
        assert_eq!(back, l, "{name}");
    }
    let l = group_algebra_c::<F2>(&standard::cm_aut_s3());
    assert_eq!(FormalHqft::new(&l).unwrap().extract_algebra().unwrap(), l);
}

#[test]
fn checked_evaluator_refuses_failing_algebras() {
    let kc = group_algebra_c::<Rational>(&standard::cm_mod());
    assert!(matches!(FormalHqft::new(&kc), Err(HqftError::Algebra(_))));
    let kc = group_algebra_c::<Rational>(&standard::cm_id2());
    assert!(FormalHqft::new(&kc).is_ok());
}

#[test]
fn trace_axiom_probes() {
    let cm = standard::cm_a3s3();
    let p = cm.base();
    let kc = group_algebra_c::<Rational>(&cm);
    let tau = FormalHqft::unchecked(&kc);
    let (l, r) = tau
        .trace_axiom_probe(0, idx(p, "(23)"), &[Rational::one()])
        .unwrap();
    assert_eq!((l, r), (q(1), q(0)));
    // Inside ∂C both sides agree.
    let (l, r) = tau
        .trace_axiom_probe(0, idx(p, "(123)"), &[Rational::one()])
        .unwrap();
    assert_eq!(l, r);

    let kp = group_algebra_p::<Rational>(&cm);
    let tau = FormalHqft::new(&kp).unwrap();
    for g in p.elements() {
        for h in p.elements() {
            let (l, r) = tau.trace_axiom_probe(g, h, &[Rational::one()]).unwrap();
            assert_eq!(l, r);
        }
    }
    assert!(matches!(
        tau.trace_axiom_probe(0, 0, &[Rational::one(), Rational::one()]),
        Err(HqftError::GradeMismatch { .. })
    ));
}

#[test]
fn equivalence_families_pass_on_fixtures() {
    for (name, l) in fixture_algebras() {
        let cm = l.crossed_module().clone();
        let (nc, np) = (cm.top().order(), cm.base().order());
        let r = check_equivalence_invariance(&FormalHqft::unchecked(&l));
        assert!(r.passed, "{name}: {}", r.summary());
        let checked = |fam: &str| -> usize {
            r.results
                .iter()
                .filter(|a| a.family == fam)
                .map(|a| a.checked)
                .sum()
        };
        assert_eq!(checked(FAMILY_DISC_CYL), nc * np, "{name}");
        assert_eq!(checked(FAMILY_PANTS), nc * nc * np * np, "{name}");
        assert_eq!(checked(FAMILY_WHISKERING), 2 * nc * nc * np * np, "{name}");
        assert_eq!(checked(FAMILY_INNER_PRODUCT), nc * np, "{name}");
    }
}

#[test]
fn equivalence_detects_a_twisted_tilde() {
    let cm = standard::cm_a3s3();
    let mut parts = group_algebra_c::<Rational>(&cm).parts();
    // (123)~ moved to 2·e_(123): Disc then Cyl no longer matches.
    let c = idx(cm.top(), "(123)");
    parts.tilde[c] = vec![q(2)];
    let l = CrossedAlgebra::from_parts(cm.clone(), parts).unwrap();
    let r = check_equivalence_invariance(&FormalHqft::unchecked(&l));
    assert!(!r.family_passed(FAMILY_DISC_CYL));
}

#[test]
fn random_expressions_typecheck_and_evaluate() {
    let mut rng = StdRng::seed_from_u64(7);
    for (name, l) in fixture_algebras() {
        let cm = l.crossed_module().clone();
        let tau = FormalHqft::unchecked(&l);
        for _ in 0..20 {
            let src = vec![rand::Rng::gen_range(&mut rng, 0..cm.base().order())];
            let ex = random_expression(&mut rng, &cm, &src, 3, 3);
            let m = tau.eval_expression(&ex).unwrap();
            assert!(m.target_dims.len() <= 3, "{name}");
            assert_eq!(m.matrix.cols(), m.source_dims.iter().product::<usize>());
            assert_eq!(m.matrix.rows(), m.target_dims.iter().product::<usize>());
        }
    }
}
