//! Homomorphisms and actions between finite groups.

use super::group::cells;
use super::{Elem, FiniteGroup, GroupError};
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupHomomorphism {
    source: FiniteGroup,
    target: FiniteGroup,
    map: Vec<Elem>,
}

impl GroupHomomorphism {
    /// Checks shape only; use [`check_homomorphism`] or [`GroupHomomorphism::new`] for the axioms.
    pub fn from_parts(
        source: FiniteGroup,
        target: FiniteGroup,
        map: Vec<Elem>,
    ) -> Result<Self, GroupError> {
        if map.len() != source.order() {
            return Err(GroupError::MapLength {
                expected: source.order(),
                found: map.len(),
            });
        }
        if let Some(&bad) = map.iter().find(|&&x| x >= target.order()) {
            return Err(GroupError::MapValueOutOfRange(bad));
        }
        Ok(GroupHomomorphism {
            source,
            target,
            map,
        })
    }

    pub fn new(
        source: FiniteGroup,
        target: FiniteGroup,
        map: Vec<Elem>,
    ) -> Result<Self, GroupError> {
        let h = Self::from_parts(source, target, map)?;
        let report = check_homomorphism(&h);
        if !report.passed {
            return Err(GroupError::NotHomomorphism(Box::new(report)));
        }
        Ok(h)
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        GroupHomomorphism {
            source: g.clone(),
            target: g.clone(),
            map: g.elements().collect(),
        }
    }

    pub fn trivial(source: &FiniteGroup, target: &FiniteGroup) -> Self {
        GroupHomomorphism {
            source: source.clone(),
            target: target.clone(),
            map: vec![0; source.order()],
        }
    }

    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    pub fn apply(&self, a: Elem) -> Elem {
        self.map[a]
    }

    /// `other ∘ self`
    pub fn then(&self, other: &GroupHomomorphism) -> Result<Self, GroupError> {
        if self.target != other.source {
            return Err(GroupError::CompositionMismatch);
        }
        Ok(GroupHomomorphism {
            source: self.source.clone(),
            target: other.target.clone(),
            map: self.map.iter().map(|&a| other.apply(a)).collect(),
        })
    }

    pub fn kernel(&self) -> Vec<Elem> {
        self.source
            .elements()
            .filter(|&a| self.map[a] == 0)
            .collect()
    }

    pub fn image(&self) -> Vec<Elem> {
        let mut im: Vec<Elem> = self.map.clone();
        im.sort_unstable();
        im.dedup();
        im
    }

    pub fn is_surjective(&self) -> bool {
        self.image().len() == self.target.order()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().len() == 1
    }
}

/// Lists every pair (i, j) with map(i·j) ≠ map(i)·map(j), plus the identity condition.
pub fn check_homomorphism(h: &GroupHomomorphism) -> Report {
    let (s, t) = (&h.source, &h.target);
    let mut report = Report::new("homomorphism");
    report
        .axiom("homomorphism", "identity preserved")
        .check(h.apply(0) == 0, || {
            (
                "e".into(),
                format!("identity maps to {}", t.name(h.apply(0))),
            )
        });
    let mut ax = report.axiom("homomorphism", "multiplicative");
    for (i, j) in cells(s.order()) {
        let lhs = h.apply(s.mul(i, j));
        let rhs = t.mul(h.apply(i), h.apply(j));
        ax.check(lhs == rhs, || {
            (
                format!("({}, {})", s.name(i), s.name(j)),
                format!(
                    "map(i·j) = {} but map(i)·map(j) = {}",
                    t.name(lhs),
                    t.name(rhs)
                ),
            )
        });
    }
    report
}

/// A left action of `actor` on `space` by group automorphisms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupAction {
    actor: FiniteGroup,
    space: FiniteGroup,
    table: Vec<Vec<Elem>>,
}

impl GroupAction {
    pub fn from_parts(
        actor: FiniteGroup,
        space: FiniteGroup,
        table: Vec<Vec<Elem>>,
    ) -> Result<Self, GroupError> {
        if table.len() != actor.order() || table.iter().any(|r| r.len() != space.order()) {
            return Err(GroupError::ActionShape {
                actor: actor.order(),
                space: space.order(),
            });
        }
        if let Some(&bad) = table.iter().flatten().find(|&&x| x >= space.order()) {
            return Err(GroupError::MapValueOutOfRange(bad));
        }
        Ok(GroupAction {
            actor,
            space,
            table,
        })
    }

    pub fn new(
        actor: FiniteGroup,
        space: FiniteGroup,
        table: Vec<Vec<Elem>>,
    ) -> Result<Self, GroupError> {
        let a = Self::from_parts(actor, space, table)?;
        let report = check_action(&a);
        if !report.passed {
            return Err(GroupError::NotAction(Box::new(report)));
        }
        Ok(a)
    }

    pub fn trivial(actor: &FiniteGroup, space: &FiniteGroup) -> Self {
        GroupAction {
            actor: actor.clone(),
            space: space.clone(),
            table: vec![space.elements().collect(); actor.order()],
        }
    }

    pub fn actor(&self) -> &FiniteGroup {
        &self.actor
    }

    pub fn space(&self) -> &FiniteGroup {
        &self.space
    }

    pub fn table(&self) -> &[Vec<Elem>] {
        &self.table
    }

    /// ᵖc
    pub fn act(&self, p: Elem, c: Elem) -> Elem {
        self.table[p][c]
    }

    /// The action of `h` pulled back along `f`: q acts as f(q).
    pub fn pullback(&self, f: &GroupHomomorphism) -> Result<Self, GroupError> {
        if f.target() != &self.actor {
            return Err(GroupError::CompositionMismatch);
        }
        Ok(GroupAction {
            actor: f.source().clone(),
            space: self.space.clone(),
            table: f
                .source()
                .elements()
                .map(|q| self.table[f.apply(q)].clone())
                .collect(),
        })
    }
}

/// Action axioms: ¹c = c, ^{pq}c = ᵖ(^q c), each ᵖ(−) an automorphism.
pub fn check_action(a: &GroupAction) -> Report {
    let (p_grp, c_grp) = (&a.actor, &a.space);
    let mut report = Report::new("action");
    {
        let mut ax = report.axiom("action", "identity acts trivially");
        for c in c_grp.elements() {
            ax.check(a.act(0, c) == c, || {
                (
                    c_grp.name(c).into(),
                    format!("¹c = {}", c_grp.name(a.act(0, c))),
                )
            });
        }
    }
    {
        let mut ax = report.axiom("action", "compatible with product");
        for p in p_grp.elements() {
            for q in p_grp.elements() {
                for c in c_grp.elements() {
                    let lhs = a.act(p_grp.mul(p, q), c);
                    let rhs = a.act(p, a.act(q, c));
                    ax.check(lhs == rhs, || {
                        (
                            format!("({}, {}, {})", p_grp.name(p), p_grp.name(q), c_grp.name(c)),
                            format!(
                                "^(pq)c = {} but ^p(^q c) = {}",
                                c_grp.name(lhs),
                                c_grp.name(rhs)
                            ),
                        )
                    });
                }
            }
        }
    }
    {
        let mut ax = report.axiom("action", "acts by automorphisms");
        for p in p_grp.elements() {
            for (c, d) in cells(c_grp.order()) {
                let lhs = a.act(p, c_grp.mul(c, d));
                let rhs = c_grp.mul(a.act(p, c), a.act(p, d));
                ax.check(lhs == rhs, || {
                    (
                        format!("({}, {}, {})", p_grp.name(p), c_grp.name(c), c_grp.name(d)),
                        format!(
                            "^p(cd) = {} but ^p c · ^p d = {}",
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

/// G acting on itself, or on a normal subgroup given as an index set, by conjugation.
pub fn conjugation_action(g: &FiniteGroup) -> GroupAction {
    GroupAction {
        actor: g.clone(),
        space: g.clone(),
        table: g
            .elements()
            .map(|p| g.elements().map(|c| g.conj(p, c)).collect())
            .collect(),
    }
}

/// Conjugation of `g` on the normal subgroup `sub` (with `incl` its inclusion).
pub fn conjugation_on_subgroup(
    g: &FiniteGroup,
    sub: &FiniteGroup,
    incl: &[Elem],
) -> Result<GroupAction, GroupError> {
    let back = |x: Elem| incl.iter().position(|&y| y == x);
    let mut table = Vec::with_capacity(g.order());
    for p in g.elements() {
        let mut row = Vec::with_capacity(sub.order());
        for c in sub.elements() {
            row.push(back(g.conj(p, incl[c])).ok_or(GroupError::NotNormal)?);
        }
        table.push(row);
    }
    GroupAction::from_parts(g.clone(), sub.clone(), table)
}
