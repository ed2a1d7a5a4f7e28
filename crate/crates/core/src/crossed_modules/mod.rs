//! Crossed modules (C, P, ∂), their morphisms, standard constructors and the
//! semidirect-product calculus of labelled cells.

mod morphism;
mod semidirect;

use thiserror::Error;

use crate::groups::{
    automorphism_group, check_action, check_homomorphism, conjugation_on_subgroup, quotient_group,
    Elem, FiniteGroup, GroupAction, GroupError, GroupHomomorphism,
};
use crate::report::Report;

pub use morphism::{check_morphism, CrossedModuleMorphism};
pub use semidirect::{sd_mul, SemidirectElement};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CrossedModuleError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("boundary and action disagree on the groups involved")]
    Shape,
    #[error("crossed module axioms fail: {}", .0.summary())]
    Axioms(Box<Report>),
    #[error("morphism axioms fail: {}", .0.summary())]
    MorphismAxioms(Box<Report>),
    #[error("top group is not abelian")]
    NotAbelian,
    #[error("semidirect elements belong to different crossed modules")]
    ParentMismatch,
}

/// ∂: C → P with a left P-action on C.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CrossedModule {
    boundary: GroupHomomorphism,
    action: GroupAction,
}

impl CrossedModule {
    /// Assembles a candidate without checking CM1/CM2.
    pub fn from_parts(
        boundary: GroupHomomorphism,
        action: GroupAction,
    ) -> Result<Self, CrossedModuleError> {
        if boundary.source() != action.space() || boundary.target() != action.actor() {
            return Err(CrossedModuleError::Shape);
        }
        Ok(CrossedModule { boundary, action })
    }

    pub fn new(
        boundary: GroupHomomorphism,
        action: GroupAction,
    ) -> Result<Self, CrossedModuleError> {
        let cm = Self::from_parts(boundary, action)?;
        let report = check_crossed_module(&cm);
        if !report.passed {
            return Err(CrossedModuleError::Axioms(Box::new(report)));
        }
        Ok(cm)
    }

    /// (1 → P) with the trivial action.
    pub fn over_group(p: &FiniteGroup) -> Self {
        let c = FiniteGroup::trivial();
        CrossedModule {
            boundary: GroupHomomorphism::trivial(&c, p),
            action: GroupAction::trivial(p, &c),
        }
    }

    /// C
    pub fn top(&self) -> &FiniteGroup {
        self.boundary.source()
    }

    /// P
    pub fn base(&self) -> &FiniteGroup {
        self.boundary.target()
    }

    pub fn boundary(&self) -> &GroupHomomorphism {
        &self.boundary
    }

    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    /// ∂c
    pub fn d(&self, c: Elem) -> Elem {
        self.boundary.apply(c)
    }

    /// ᵖc
    pub fn act(&self, p: Elem, c: Elem) -> Elem {
        self.action.act(p, c)
    }

    pub fn kernel_and_image(&self) -> KernelImage {
        let kernel = self.boundary.kernel();
        let image = self.boundary.image();
        let (pi, projection) = quotient_group(self.base(), &image)
            .expect("the image of a crossed module boundary is normal");
        KernelImage {
            kernel,
            image,
            pi,
            projection,
        }
    }

    /// The morphism (C → P) ⟶ (1 → P/∂C).
    pub fn quotient_morphism(&self) -> CrossedModuleMorphism {
        let ki = self.kernel_and_image();
        let target = CrossedModule::over_group(&ki.pi);
        let f_top = GroupHomomorphism::trivial(self.top(), target.top());
        CrossedModuleMorphism::from_parts(self.clone(), target, f_top, ki.projection)
            .expect("quotient morphism shapes agree")
    }
}

/// ker ∂, ∂C and π = P/∂C.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelImage {
    pub kernel: Vec<Elem>,
    pub image: Vec<Elem>,
    pub pi: FiniteGroup,
    pub projection: GroupHomomorphism,
}

/// Boundary and action axioms, then CM1 over all (p, c) and CM2 over all (c, c′).
pub fn check_crossed_module(cm: &CrossedModule) -> Report {
    let (c_grp, p_grp) = (cm.top(), cm.base());
    let mut report = Report::new("crossed module");
    report.absorb("boundary", check_homomorphism(&cm.boundary));
    report.absorb("", check_action(&cm.action));
    {
        let mut ax = report.axiom("CM1", "CM1 equivariance");
        for p in p_grp.elements() {
            for c in c_grp.elements() {
                let lhs = cm.d(cm.act(p, c));
                let rhs = p_grp.conj(p, cm.d(c));
                ax.check(lhs == rhs, || {
                    (
                        format!("(p, c) = ({}, {})", p_grp.name(p), c_grp.name(c)),
                        format!(
                            "∂(ᵖc) = {} but p·∂c·p⁻¹ = {}",
                            p_grp.name(lhs),
                            p_grp.name(rhs)
                        ),
                    )
                });
            }
        }
    }
    {
        let mut ax = report.axiom("CM2", "CM2 Peiffer");
        for c in c_grp.elements() {
            for c2 in c_grp.elements() {
                let lhs = cm.act(cm.d(c), c2);
                let rhs = c_grp.conj(c, c2);
                ax.check(lhs == rhs, || {
                    (
                        format!("(c, c′) = ({}, {})", c_grp.name(c), c_grp.name(c2)),
                        format!(
                            "^(∂c)c′ = {} but c·c′·c⁻¹ = {}",
                            c_grp.name(lhs),
                            c_grp.name(rhs)
                        ),
                    )
                });
            }
        }
    }
    report
}

/// ker ∂ is central in C, ∂C is normal in P, and ∂C acts trivially on ker ∂
/// (so the P-action on ker ∂ descends to π).
pub fn check_kernel_descends(cm: &CrossedModule) -> Report {
    let ki = cm.kernel_and_image();
    let (c_grp, p_grp) = (cm.top(), cm.base());
    let mut report = Report::new("kernel and image");
    report
        .axiom("derived", "image normal")
        .check(p_grp.is_normal(&ki.image), || {
            ("∂C".into(), "∂C is not normal in P".into())
        });
    {
        let mut ax = report.axiom("derived", "kernel central");
        for &k in &ki.kernel {
            for c in c_grp.elements() {
                ax.check(c_grp.mul(k, c) == c_grp.mul(c, k), || {
                    (
                        format!("({}, {})", c_grp.name(k), c_grp.name(c)),
                        "k·c ≠ c·k".into(),
                    )
                });
            }
        }
    }
    {
        let mut ax = report.axiom("derived", "kernel is P-stable");
        for p in p_grp.elements() {
            for &k in &ki.kernel {
                ax.check(cm.d(cm.act(p, k)) == 0, || {
                    (
                        format!("({}, {})", p_grp.name(p), c_grp.name(k)),
                        "ᵖk ∉ ker ∂".into(),
                    )
                });
            }
        }
    }
    let mut ax = report.axiom("derived", "image acts trivially on kernel");
    for &q in &ki.image {
        for &k in &ki.kernel {
            ax.check(cm.act(q, k) == k, || {
                (
                    format!("({}, {})", p_grp.name(q), c_grp.name(k)),
                    "ᵖk ≠ k for p ∈ ∂C".into(),
                )
            });
        }
    }
    report
}

/// (N ↪ G) with G acting by conjugation.
pub fn from_normal_inclusion(
    g: &FiniteGroup,
    n: &[Elem],
) -> Result<CrossedModule, CrossedModuleError> {
    if !g.is_subgroup(n) {
        return Err(GroupError::NotSubgroup.into());
    }
    if !g.is_normal(n) {
        return Err(GroupError::NotNormal.into());
    }
    let (sub, incl) = g.subgroup(n)?;
    let boundary = GroupHomomorphism::new(sub.clone(), g.clone(), incl.clone())?;
    let action = conjugation_on_subgroup(g, &sub, &incl)?;
    CrossedModule::new(boundary, action)
}

/// (M →0 P) for an abelian M with a P-action.
pub fn from_module(
    m: &FiniteGroup,
    p: &FiniteGroup,
    act: GroupAction,
) -> Result<CrossedModule, CrossedModuleError> {
    if !m.is_abelian() {
        return Err(CrossedModuleError::NotAbelian);
    }
    if act.space() != m || act.actor() != p {
        return Err(CrossedModuleError::Shape);
    }
    let act = GroupAction::new(
        act.actor().clone(),
        act.space().clone(),
        act.table().to_vec(),
    )?;
    CrossedModule::new(GroupHomomorphism::trivial(m, p), act)
}

/// (G → Aut G) with the evaluation action.
pub fn from_conjugation_aut(g: &FiniteGroup) -> Result<CrossedModule, CrossedModuleError> {
    let aut = automorphism_group(g)?;
    CrossedModule::new(aut.embedding, aut.action)
}

/// The fixtures used throughout the tests and the CLI.
pub mod standard {
    use super::*;
    use crate::groups::perm::{alternating_indices, symmetric};

    pub fn z2(other: &str) -> FiniteGroup {
        FiniteGroup::new(vec!["e".into(), other.into()], vec![vec![0, 1], vec![1, 0]]).expect("Z/2")
    }

    pub fn s3() -> FiniteGroup {
        symmetric(3)
    }

    pub fn a3_indices() -> Vec<Elem> {
        alternating_indices(3)
    }

    /// Z/2 →id Z/2, elements `e`, `s`.
    pub fn cm_id2() -> CrossedModule {
        let g = z2("s");
        from_normal_inclusion(&g, &[0, 1]).expect("CM-Id2")
    }

    /// A3 ↪ S3 with conjugation.
    pub fn cm_a3s3() -> CrossedModule {
        from_normal_inclusion(&s3(), &a3_indices()).expect("CM-A3S3")
    }

    /// Z/3 →0 Z/2 with the inversion action.
    pub fn cm_mod() -> CrossedModule {
        let m = FiniteGroup::cyclic(3);
        let p = z2("t");
        let act = GroupAction::from_parts(p.clone(), m.clone(), vec![vec![0, 1, 2], vec![0, 2, 1]])
            .expect("inversion action shape");
        from_module(&m, &p, act).expect("CM-Mod")
    }

    /// S3 → Aut(S3).
    pub fn cm_aut_s3() -> CrossedModule {
        from_conjugation_aut(&s3()).expect("CM-AutS3")
    }

    /// Named fixtures, in a fixed order.
    pub fn all() -> Vec<(&'static str, CrossedModule)> {
        vec![
            ("CM-Id2", cm_id2()),
            ("CM-A3S3", cm_a3s3()),
            ("CM-Mod", cm_mod()),
            ("CM-AutS3", cm_aut_s3()),
        ]
    }
}
