mod common;

use common::*;
use crossed_hqft::crossed_modules::{
    check_crossed_module, check_kernel_descends, check_morphism, from_conjugation_aut, from_module,
    from_normal_inclusion, sd_mul, standard, CrossedModule, CrossedModuleError, SemidirectElement,
};
use crossed_hqft::groups::{conjugation_action, FiniteGroup, GroupAction, GroupHomomorphism};

fn inversion_on_z3() -> GroupAction {
    let z3 = FiniteGroup::cyclic(3);
    let z2 = FiniteGroup::z2();
    GroupAction::new(z2, z3, vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap()
}

#[test]
fn standard_examples_pass() {
    for (name, cm) in standard::all() {
        let r = check_crossed_module(&cm);
        assert!(r.passed, "{name}: {}", r.summary());
        assert!(check_kernel_descends(&cm).passed, "{name}");
    }
}

#[test]
fn zero_boundary_on_nonabelian_top_fails_peiffer() {
    let s3 = standard::s3();
    let zero = GroupHomomorphism::trivial(&s3, &s3);
    let cm = CrossedModule::from_parts(zero, conjugation_action(&s3)).unwrap();
    let r = check_crossed_module(&cm);
    assert!(!r.passed);
    assert!(r.family_passed("CM1"));
    assert!(!r.family_passed("CM2"));
    // Exactly the non-commuting ordered pairs: 36 minus Σ|centralizer| = 36 − 18.
    assert_eq!(r.result("CM2 Peiffer").unwrap().failures, 18);
    assert!(r
        .violations
        .iter()
        .any(|v| v.instance == "(c, c′) = ((12), (123))"));
}

#[test]
fn normal_inclusion_examples() {
    let s3 = standard::s3();
    let a3: Vec<usize> = A3_NAMES.iter().map(|n| idx(&s3, n)).collect();
    let cm = from_normal_inclusion(&s3, &a3).unwrap();
    assert_eq!(cm.top().order(), 3);
    for c in cm.top().elements() {
        assert_eq!(cm.base().name(cm.d(c)), cm.top().name(c));
    }
    let z2 = FiniteGroup::z2();
    let id2 = from_normal_inclusion(&z2, &[0, 1]).unwrap();
    assert!(id2.boundary().is_injective() && id2.boundary().is_surjective());
    let triv = from_normal_inclusion(&s3, &[0]).unwrap();
    assert_eq!(triv.top().order(), 1);
    let not_normal = [0, idx(&s3, "(12)")];
    assert!(from_normal_inclusion(&s3, &not_normal).is_err());
}

#[test]
fn module_examples() {
    let cm = from_module(
        &FiniteGroup::cyclic(3),
        &FiniteGroup::z2(),
        inversion_on_z3(),
    )
    .unwrap();
    assert!(check_crossed_module(&cm).passed);
    assert!(cm.top().elements().all(|c| cm.d(c) == 0));

    let z2 = FiniteGroup::z2();
    let one = FiniteGroup::trivial();
    let cm = from_module(&z2, &one, GroupAction::trivial(&one, &z2)).unwrap();
    assert!(check_crossed_module(&cm).passed);

    let s3 = standard::s3();
    let r = from_module(&s3, &z2, GroupAction::trivial(&z2, &s3));
    assert!(matches!(r, Err(CrossedModuleError::NotAbelian)));
}

#[test]
fn conjugation_aut_examples() {
    let cm = from_conjugation_aut(&FiniteGroup::z2()).unwrap();
    assert_eq!((cm.top().order(), cm.base().order()), (2, 1));

    let cm = from_conjugation_aut(&FiniteGroup::cyclic(3)).unwrap();
    assert_eq!(cm.base().order(), 2);
    assert!(cm.top().elements().all(|c| cm.d(c) == cm.base().identity()));
    assert!(check_crossed_module(&cm).passed);

    let cm = from_conjugation_aut(&standard::s3()).unwrap();
    assert!(cm.boundary().is_injective() && cm.boundary().is_surjective());
    assert!(check_crossed_module(&cm).passed);
}

#[test]
fn kernel_and_image_examples() {
    let ki = standard::cm_id2().kernel_and_image();
    assert_eq!((ki.kernel.len(), ki.image.len(), ki.pi.order()), (1, 2, 1));
    let cm = standard::cm_a3s3();
    let ki = cm.kernel_and_image();
    assert_eq!((ki.kernel.len(), ki.image.len(), ki.pi.order()), (1, 3, 2));
    assert!(cm.base().is_normal(&ki.image));
    let ki = standard::cm_mod().kernel_and_image();
    assert_eq!((ki.kernel.len(), ki.image.len(), ki.pi.order()), (3, 1, 2));
}

#[test]
fn kernel_is_central() {
    for (name, cm) in standard::all() {
        let c = cm.top();
        for k in cm.kernel_and_image().kernel {
            for x in c.elements() {
                assert_eq!(c.mul(k, x), c.mul(x, k), "{name}");
            }
        }
    }
}

#[test]
fn quotient_morphisms() {
    for (name, cm, pi) in [
        ("CM-A3S3", standard::cm_a3s3(), 2),
        ("CM-Id2", standard::cm_id2(), 1),
        ("CM-Mod", standard::cm_mod(), 2),
    ] {
        let q = cm.quotient_morphism();
        assert!(check_morphism(&q).passed, "{name}");
        assert_eq!(q.target().top().order(), 1, "{name}");
        assert_eq!(q.target().base().order(), pi, "{name}");
        assert!(q.is_epimorphism());
    }
}

#[test]
fn semidirect_examples() {
    let cm = standard::cm_a3s3();
    let (c, p) = (cm.top(), cm.base());
    let el = |cn: &str, pn: &str| SemidirectElement::new(&cm, idx(c, cn), idx(p, pn));
    let prod = sd_mul(el("(123)", "(12)"), el("(123)", "(13)")).unwrap();
    // ^{(12)}(123) = (132), and (123)·(132) = e
    assert_eq!(s3_conj("(12)", "(123)"), "(132)");
    assert_eq!(c.name(prod.c), "e");
    assert_eq!(p.name(prod.p), s3_mul("(12)", "(13)"));

    for pn in S3_NAMES {
        for cn in A3_NAMES {
            for qn in S3_NAMES {
                let r = sd_mul(el("e", pn), el(cn, qn)).unwrap();
                assert_eq!(c.name(r.c), s3_conj(pn, cn));
                assert_eq!(p.name(r.p), s3_mul(pn, qn));
            }
        }
    }
    for a in A3_NAMES {
        for b in A3_NAMES {
            let r = sd_mul(el(a, "e"), el(b, "e")).unwrap();
            assert_eq!((c.name(r.c).to_string(), r.p), (s3_mul(a, b), 0));
        }
    }
    let other = standard::cm_id2();
    let foreign = SemidirectElement::new(&other, 0, 0);
    assert!(matches!(
        sd_mul(el("e", "e"), foreign),
        Err(CrossedModuleError::ParentMismatch)
    ));
}

#[test]
fn morphism_axioms_detect_broken_square() {
    let cm = standard::cm_a3s3();
    let id = crossed_hqft::crossed_modules::CrossedModuleMorphism::identity(&cm);
    assert!(check_morphism(&id).passed);
    // f₀ trivial with f₁ = id breaks the square.
    let p = cm.base();
    let f0 = GroupHomomorphism::trivial(p, p);
    let f1 = GroupHomomorphism::identity(cm.top());
    let bad = crossed_hqft::crossed_modules::CrossedModuleMorphism::from_parts(
        cm.clone(),
        cm.clone(),
        f1,
        f0,
    )
    .unwrap();
    let r = check_morphism(&bad);
    assert!(!r.family_passed("square"));
}
