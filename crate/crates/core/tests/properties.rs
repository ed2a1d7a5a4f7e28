mod common;

use common::*;
use crossed_hqft::crossed_algebras::{group_algebra_c, group_algebra_p, CrossedAlgebra};
use crossed_hqft::crossed_modules::{sd_mul, standard, CrossedModule, SemidirectElement};
use crossed_hqft::exact_linalg::dual_basis;
use crossed_hqft::formal_maps::{
    compose_h, compose_v, reverse_orientation, rotate_basepoint, typecheck, validate_simplicial,
    FormalCircuit, LabeledCell, SimplicialComplex, SimplicialFormalMap,
};
use crossed_hqft::groups::{
    check_action, cocycle_from_section, conjugation_action, quotient_group, FiniteGroup, Section,
};
use crossed_hqft::hqft::{random_expression, FormalHqft};
use crossed_hqft::{Matrix, Rational, Scalar, F7};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn cms() -> Vec<CrossedModule> {
    standard::all().into_iter().map(|(_, cm)| cm).collect()
}

fn algebras() -> Vec<CrossedAlgebra<Rational>> {
    cms()
        .iter()
        .flat_map(|cm| [group_algebra_c(cm), group_algebra_p(cm)])
        .collect()
}

fn cell(cm: &CrossedModule, c: usize, p: usize) -> LabeledCell {
    LabeledCell::new(c % cm.top().order(), p % cm.base().order())
}

fn groups() -> Vec<FiniteGroup> {
    let mut v: Vec<FiniteGroup> = (1..=8).map(FiniteGroup::cyclic).collect();
    v.push(standard::s3());
    v.push(standard::cm_aut_s3().base().clone());
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn group_products_associate(k in 0usize..10, a in any::<usize>(), b in any::<usize>(), c in any::<usize>()) {
        let g = &groups()[k];
        let n = g.order();
        let (a, b, c) = (a % n, b % n, c % n);
        prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        prop_assert_eq!(g.mul(a, g.inv(a)), 0);
        prop_assert_eq!(g.mul(0, a), a);
    }

    #[test]
    fn semidirect_product_is_a_group(k in 0usize..4, x in any::<[usize; 6]>()) {
        let cm = &cms()[k];
        let el = |c: usize, p: usize| SemidirectElement::new(cm, c % cm.top().order(), p % cm.base().order());
        let (a, b, c) = (el(x[0], x[1]), el(x[2], x[3]), el(x[4], x[5]));
        let ab_c = sd_mul(sd_mul(a, b).unwrap(), c).unwrap();
        let a_bc = sd_mul(a, sd_mul(b, c).unwrap()).unwrap();
        prop_assert_eq!((ab_c.c, ab_c.p), (a_bc.c, a_bc.p));
        let one = el(0, 0);
        let r = sd_mul(a, one).unwrap();
        prop_assert_eq!((r.c, r.p), (a.c, a.p));
        let l = sd_mul(one, a).unwrap();
        prop_assert_eq!((l.c, l.p), (a.c, a.p));
    }

    #[test]
    fn horizontal_composition_associates_and_matches_semidirect(k in 0usize..4, x in any::<[usize; 6]>()) {
        let cm = &cms()[k];
        let (a, b, c) = (cell(cm, x[0], x[1]), cell(cm, x[2], x[3]), cell(cm, x[4], x[5]));
        prop_assert_eq!(compose_h(cm, compose_h(cm, a, b), c), compose_h(cm, a, compose_h(cm, b, c)));
        prop_assert_eq!(compose_h(cm, a, LabeledCell::new(0, 0)), a);
        let s = sd_mul(SemidirectElement::new(cm, a.c, a.p), SemidirectElement::new(cm, b.c, b.p)).unwrap();
        let h = compose_h(cm, a, b);
        prop_assert_eq!((h.c, h.p), (s.c, s.p));
    }

    #[test]
    fn vertical_composition_associates(k in 0usize..4, x in any::<[usize; 4]>()) {
        let cm = &cms()[k];
        let a = cell(cm, x[0], x[1]);
        let next = |prev: LabeledCell, c: usize| LabeledCell::new(c % cm.top().order(), cm.base().mul(cm.d(prev.c), prev.p));
        let b = next(a, x[2]);
        let c = next(b, x[3]);
        let left = compose_v(cm, compose_v(cm, a, b).unwrap(), c).unwrap();
        let right = compose_v(cm, a, compose_v(cm, b, c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn interchange_law(k in 0usize..4, x in any::<[usize; 6]>()) {
        // (a #₀ b) #₁ (a′ #₀ b′) = (a #₁ a′) #₀ (b #₁ b′)
        let cm = &cms()[k];
        let p = cm.base();
        let (a, b) = (cell(cm, x[0], x[1]), cell(cm, x[2], x[3]));
        let a2 = LabeledCell::new(x[4] % cm.top().order(), p.mul(cm.d(a.c), a.p));
        let b2 = LabeledCell::new(x[5] % cm.top().order(), p.mul(cm.d(b.c), b.p));
        let left = compose_v(cm, compose_h(cm, a, b), compose_h(cm, a2, b2)).unwrap();
        let right = compose_h(cm, compose_v(cm, a, a2).unwrap(), compose_v(cm, b, b2).unwrap());
        prop_assert_eq!(left, right);
    }

    #[test]
    fn circuit_orientation_and_rotation(k in 0usize..4, labels in prop::collection::vec(any::<usize>(), 1..6), r in any::<usize>()) {
        let cm = &cms()[k];
        let p = cm.base();
        let b = FormalCircuit::new(labels.iter().map(|&x| x % p.order()).collect()).unwrap();
        prop_assert_eq!(reverse_orientation(p, &reverse_orientation(p, &b)), b.clone());
        prop_assert_eq!(rotate_basepoint(&b, b.len()), b.clone());
        let once = rotate_basepoint(&b, r % b.len());
        prop_assert_eq!(rotate_basepoint(&once, b.len() - r % b.len()), b.clone());
        // Rotation conjugates the holonomy; reversal inverts it.
        prop_assert_eq!(reverse_orientation(p, &b).holonomy(p), p.inv(b.holonomy(p)));
    }

    #[test]
    fn conjugation_is_an_action(k in 0usize..10) {
        prop_assert!(check_action(&conjugation_action(&groups()[k])).passed);
    }

    #[test]
    fn every_section_gives_a_cocycle(choice in any::<[usize; 6]>(), which in 0usize..3) {
        let (g, normal): (FiniteGroup, Vec<usize>) = match which {
            0 => (FiniteGroup::cyclic(4), vec![0, 2]),
            1 => (FiniteGroup::cyclic(6), vec![0, 3]),
            _ => {
                let s3 = standard::s3();
                let a3 = A3_NAMES.iter().map(|n| idx(&s3, n)).collect();
                (s3, a3)
            }
        };
        let (q, proj) = quotient_group(&g, &normal).unwrap();
        let mut sec = vec![0; q.order()];
        for t in q.elements().skip(1) {
            let pre: Vec<usize> = g.elements().filter(|&x| proj.apply(x) == t).collect();
            sec[t] = pre[choice[t] % pre.len()];
        }
        let section = Section::new(proj, sec).unwrap();
        let f = cocycle_from_section(&section).unwrap();
        prop_assert!(f.check().passed);
    }

    #[test]
    fn identity_labelings_validate(k in 0usize..4, x in any::<[usize; 4]>()) {
        let cm = &cms()[k];
        let p = cm.base();
        let mut edges = Vec::new();
        let mut tris = Vec::new();
        for a in 0..4 {
            for b in a + 1..4 {
                edges.push(vec![a, b]);
                for c in b + 1..4 {
                    tris.push(vec![a, b, c]);
                }
            }
        }
        let cx = SimplicialComplex::new(4, vec![0, 1, 2, 3], edges, tris, vec![vec![0, 1, 2, 3]]).unwrap();
        let pot: Vec<usize> = x.iter().map(|&v| v % p.order()).collect();
        let m = SimplicialFormalMap::identity_labeled(p, cx, &pot);
        prop_assert!(validate_simplicial(cm, &m).passed);
    }

    #[test]
    fn rational_field_axioms(a in -50i64..50, b in -50i64..50, c in 1i64..50, d in 1i64..50) {
        let x = Rational::from_i64(a) * Rational::from_i64(c).inverse().unwrap();
        let y = Rational::from_i64(b) * Rational::from_i64(d).inverse().unwrap();
        let z = Rational::from_i64(c - b);
        prop_assert_eq!((x.clone() + y.clone()) + z.clone(), x.clone() + (y.clone() + z.clone()));
        prop_assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * y.clone() + x.clone() * z.clone());
        prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
        if let Some(inv) = x.inverse() {
            prop_assert_eq!(inv * x.clone(), Rational::from_i64(1));
        }
        // Canonical form: equal values encode identically.
        let scaled = Rational::from_i64(a * 3) * Rational::from_i64(c * 3).inverse().unwrap();
        prop_assert_eq!(scaled.encode(), x.encode());
    }

    #[test]
    fn prime_field_axioms(a in any::<i64>(), b in any::<i64>(), c in any::<i64>()) {
        let (x, y, z) = (F7::new(a % 1000), F7::new(b % 1000), F7::new(c % 1000));
        prop_assert_eq!((x + y) + z, x + (y + z));
        prop_assert_eq!(x * (y + z), x * y + x * z);
        prop_assert_eq!(x - x, F7::new(0));
        if let Some(inv) = x.inverse() {
            prop_assert_eq!(inv * x, F7::new(1));
        }
    }

    #[test]
    fn inverses_are_two_sided(entries in prop::collection::vec(-5i64..6, 9)) {
        let m = Matrix::from_fn(3, 3, |i, j| q(entries[i * 3 + j]));
        match m.inverse() {
            Ok(inv) => {
                prop_assert_eq!(inv.mul(&m), Matrix::identity(3));
                prop_assert_eq!(m.mul(&inv), Matrix::identity(3));
            }
            Err(_) => prop_assert!(rank(&m.to_rows()) < 3),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn evaluation_is_functorial_and_monoidal(k in 0usize..8, seed in any::<u64>(), g in any::<usize>()) {
        let l = &algebras()[k];
        let cm = l.crossed_module();
        let p = cm.base();
        let tau = FormalHqft::unchecked(l);
        let mut rng = StdRng::seed_from_u64(seed);
        let src = vec![g % p.order()];
        let e1 = random_expression(&mut rng, cm, &src, 2, 3);
        let e2 = random_expression(&mut rng, cm, &e1.target_grades(cm), 2, 3);
        prop_assert!(typecheck(cm, &e1).passed);
        let e12 = e1.then(cm, &e2).unwrap();
        let (m1, m2) = (tau.eval_expression(&e1).unwrap(), tau.eval_expression(&e2).unwrap());
        prop_assert_eq!(tau.eval_expression(&e12).unwrap().matrix, m2.matrix.mul(&m1.matrix));

        let side = e1.beside(cm, &e2);
        prop_assert_eq!(tau.eval_expression(&side).unwrap().matrix, m1.matrix.kron(&m2.matrix));

        for layer in &e1.layers {
            let one = crossed_hqft::formal_maps::CobordismExpression::from_layers(cm, vec![layer.clone()]);
            let mut kron = Matrix::identity(1);
            for piece in layer {
                kron = kron.kron(&tau.piece_matrix(piece).unwrap());
            }
            prop_assert_eq!(tau.eval_expression(&one).unwrap().matrix, kron);
        }
    }
}

#[test]
fn dual_basis_contract_on_every_fixture_grade() {
    for l in algebras() {
        let p = l.crossed_module().base();
        for g in p.elements() {
            let rho = l.rho(g);
            if rho.rows() == 0 {
                continue;
            }
            let dual = dual_basis(rho).unwrap();
            assert_eq!(rho.mul(&dual), Matrix::identity(rho.rows()));
            assert_eq!(dual.mul(rho), Matrix::identity(rho.rows()));
        }
    }
}

#[test]
fn small_groups_associate_exhaustively() {
    for g in groups() {
        assert_eq!(g.associativity_failures(), 0);
    }
}
