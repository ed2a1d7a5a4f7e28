//! Morphisms of crossed modules.

use super::{CrossedModule, CrossedModuleError};
use crate::groups::{check_homomorphism, Elem, GroupHomomorphism};
use crate::report::Report;

/// (f₁: C → D, f₀: P → Q) commuting with the boundaries and the actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModuleMorphism {
    source: CrossedModule,
    target: CrossedModule,
    f_top: GroupHomomorphism,
    f_base: GroupHomomorphism,
}

impl CrossedModuleMorphism {
    pub fn from_parts(
        source: CrossedModule,
        target: CrossedModule,
        f_top: GroupHomomorphism,
        f_base: GroupHomomorphism,
    ) -> Result<Self, CrossedModuleError> {
        if f_top.source() != source.top()
            || f_top.target() != target.top()
            || f_base.source() != source.base()
            || f_base.target() != target.base()
        {
            return Err(CrossedModuleError::Shape);
        }
        Ok(CrossedModuleMorphism {
            source,
            target,
            f_top,
            f_base,
        })
    }

    pub fn new(
        source: CrossedModule,
        target: CrossedModule,
        f_top: GroupHomomorphism,
        f_base: GroupHomomorphism,
    ) -> Result<Self, CrossedModuleError> {
        let m = Self::from_parts(source, target, f_top, f_base)?;
        let report = check_morphism(&m);
        if !report.passed {
            return Err(CrossedModuleError::MorphismAxioms(Box::new(report)));
        }
        Ok(m)
    }

    pub fn identity(cm: &CrossedModule) -> Self {
        CrossedModuleMorphism {
            source: cm.clone(),
            target: cm.clone(),
            f_top: GroupHomomorphism::identity(cm.top()),
            f_base: GroupHomomorphism::identity(cm.base()),
        }
    }

    pub fn source(&self) -> &CrossedModule {
        &self.source
    }

    pub fn target(&self) -> &CrossedModule {
        &self.target
    }

    pub fn f_top(&self) -> &GroupHomomorphism {
        &self.f_top
    }

    pub fn f_base(&self) -> &GroupHomomorphism {
        &self.f_base
    }

    /// f₁(c)
    pub fn f1(&self, c: Elem) -> Elem {
        self.f_top.apply(c)
    }

    /// f₀(p)
    pub fn f0(&self, p: Elem) -> Elem {
        self.f_base.apply(p)
    }

    /// `other ∘ self`
    pub fn then(&self, other: &CrossedModuleMorphism) -> Result<Self, CrossedModuleError> {
        if self.target != other.source {
            return Err(CrossedModuleError::Shape);
        }
        Ok(CrossedModuleMorphism {
            source: self.source.clone(),
            target: other.target.clone(),
            f_top: self.f_top.then(&other.f_top)?,
            f_base: self.f_base.then(&other.f_base)?,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target
            && self.f_top.map().iter().enumerate().all(|(i, &x)| i == x)
            && self.f_base.map().iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Both components surjective.
    pub fn is_epimorphism(&self) -> bool {
        self.f_top.is_surjective() && self.f_base.is_surjective()
    }
}

/// Both components are homomorphisms, ∂′∘f₁ = f₀∘∂, and f₁(ᵖc) = ^{f₀(p)}f₁(c).
pub fn check_morphism(m: &CrossedModuleMorphism) -> Report {
    let (s, t) = (&m.source, &m.target);
    let mut report = Report::new("crossed module morphism");
    report.absorb("f_top", check_homomorphism(&m.f_top));
    report.absorb("f_base", check_homomorphism(&m.f_base));
    {
        let mut ax = report.axiom("square", "boundary square commutes");
        for c in s.top().elements() {
            let lhs = t.d(m.f1(c));
            let rhs = m.f0(s.d(c));
            ax.check(lhs == rhs, || {
                (
                    s.top().name(c).to_string(),
                    format!(
                        "∂′f₁(c) = {} but f₀∂(c) = {}",
                        t.base().name(lhs),
                        t.base().name(rhs)
                    ),
                )
            });
        }
    }
    let mut ax = report.axiom("equivariance", "action equivariant");
    for p in s.base().elements() {
        for c in s.top().elements() {
            let lhs = m.f1(s.act(p, c));
            let rhs = t.act(m.f0(p), m.f1(c));
            ax.check(lhs == rhs, || {
                (
                    format!("({}, {})", s.base().name(p), s.top().name(c)),
                    format!(
                        "f₁(ᵖc) = {} but ^(f₀p)f₁(c) = {}",
                        t.top().name(lhs),
                        t.top().name(rhs)
                    ),
                )
            });
        }
    }
    report
}
