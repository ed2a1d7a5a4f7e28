//! Globular C-cells (c, p) from p to ∂c·p, and their two compositions.

use super::FormalError;
use crate::crossed_modules::CrossedModule;
use crate::groups::Elem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LabeledCell {
    pub c: Elem,
    pub p: Elem,
}

impl LabeledCell {
    pub fn new(c: Elem, p: Elem) -> Self {
        LabeledCell { c, p }
    }

    /// (1, p)
    pub fn identity_on(p: Elem) -> Self {
        LabeledCell { c: 0, p }
    }

    /// ∂c·p
    pub fn target(&self, cm: &CrossedModule) -> Elem {
        cm.base().mul(cm.d(self.c), self.p)
    }

    pub fn display(&self, cm: &CrossedModule) -> String {
        format!("({}, {})", cm.top().name(self.c), cm.base().name(self.p))
    }
}

/// (c, p) #₁ (c′, ∂c·p) = (c′c, p)
pub fn compose_v(
    cm: &CrossedModule,
    a: LabeledCell,
    b: LabeledCell,
) -> Result<LabeledCell, FormalError> {
    let t = a.target(cm);
    if b.p != t {
        return Err(FormalError::BoundaryMismatch {
            expected: cm.base().name(t).into(),
            found: cm.base().name(b.p).into(),
        });
    }
    Ok(LabeledCell::new(cm.top().mul(b.c, a.c), a.p))
}

/// (c, p) #₀ (c′, p′) = (c·ᵖc′, pp′)
pub fn compose_h(cm: &CrossedModule, a: LabeledCell, b: LabeledCell) -> LabeledCell {
    LabeledCell::new(cm.top().mul(a.c, cm.act(a.p, b.c)), cm.base().mul(a.p, b.p))
}

/// (1, p) #₀ cell
pub fn whisker_left(cm: &CrossedModule, p: Elem, cell: LabeledCell) -> LabeledCell {
    compose_h(cm, LabeledCell::identity_on(p), cell)
}

/// cell #₀ (1, p)
pub fn whisker_right(cm: &CrossedModule, cell: LabeledCell, p: Elem) -> LabeledCell {
    compose_h(cm, cell, LabeledCell::identity_on(p))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WhiskerOrder {
    /// Left cell first: (a #₀ 1) #₁ (1 #₀ b).
    LeftFirst,
    /// Right cell first: (1 #₀ b) #₁ (a #₀ 1).
    RightFirst,
}

/// The two cells whose vertical composite is a #₀ b, in the given order.
pub fn whiskering_steps(
    cm: &CrossedModule,
    a: LabeledCell,
    b: LabeledCell,
    order: WhiskerOrder,
) -> (LabeledCell, LabeledCell) {
    match order {
        WhiskerOrder::LeftFirst => (whisker_right(cm, a, b.p), whisker_left(cm, a.target(cm), b)),
        WhiskerOrder::RightFirst => (whisker_left(cm, a.p, b), whisker_right(cm, a, b.target(cm))),
    }
}

/// Horizontal composite of two cells, reduced to whiskering and vertical composition.
pub fn horizontal_by_whiskering(
    cm: &CrossedModule,
    a: LabeledCell,
    b: LabeledCell,
    order: WhiskerOrder,
) -> LabeledCell {
    let (first, second) = whiskering_steps(cm, a, b, order);
    compose_v(cm, first, second).expect("whiskered cells always share an edge")
}

/// The pants coloured c₁ on one leg and c₂ on the other, with all colour moved
/// to the start vertex: (c₁·^{g₁}c₂, g₁g₂).
pub fn pants_semidirect_reduction(
    cm: &CrossedModule,
    c1: Elem,
    c2: Elem,
    g1: Elem,
    g2: Elem,
) -> LabeledCell {
    compose_h(cm, LabeledCell::new(c1, g1), LabeledCell::new(c2, g2))
}
