//! The semidirect product C ⋊ P.

use super::{CrossedModule, CrossedModuleError};
use crate::groups::Elem;

#[derive(Clone, Copy, Debug)]
pub struct SemidirectElement<'a> {
    pub parent: &'a CrossedModule,
    pub c: Elem,
    pub p: Elem,
}

impl<'a> SemidirectElement<'a> {
    pub fn new(parent: &'a CrossedModule, c: Elem, p: Elem) -> Self {
        assert!(c < parent.top().order() && p < parent.base().order());
        SemidirectElement { parent, c, p }
    }

    pub fn identity(parent: &'a CrossedModule) -> Self {
        SemidirectElement { parent, c: 0, p: 0 }
    }

    /// (c, p)⁻¹ = (^{p⁻¹}c⁻¹, p⁻¹)
    pub fn inverse(&self) -> Self {
        let cm = self.parent;
        let pinv = cm.base().inv(self.p);
        SemidirectElement {
            parent: cm,
            c: cm.act(pinv, cm.top().inv(self.c)),
            p: pinv,
        }
    }
}

impl PartialEq for SemidirectElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.c == other.c && self.p == other.p
    }
}

/// (c₁,g₁)·(c₂,g₂) = (c₁·^{g₁}c₂, g₁g₂)
pub fn sd_mul<'a>(
    a: SemidirectElement<'a>,
    b: SemidirectElement<'a>,
) -> Result<SemidirectElement<'a>, CrossedModuleError> {
    if !std::ptr::eq(a.parent, b.parent) && a.parent != b.parent {
        return Err(CrossedModuleError::ParentMismatch);
    }
    let cm = a.parent;
    Ok(SemidirectElement {
        parent: cm,
        c: cm.top().mul(a.c, cm.act(a.p, b.c)),
        p: cm.base().mul(a.p, b.p),
    })
}
