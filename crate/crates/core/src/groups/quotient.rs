//! Quotients, set-theoretic sections and their 2-cocycles.

use super::{Elem, FiniteGroup, GroupError, GroupHomomorphism};
use crate::report::Report;

/// G/N with cosets ordered by their least element; names are `[rep]`.
pub fn quotient_group(
    g: &FiniteGroup,
    n: &[Elem],
) -> Result<(FiniteGroup, GroupHomomorphism), GroupError> {
    if !g.is_subgroup(n) {
        return Err(GroupError::NotSubgroup);
    }
    if !g.is_normal(n) {
        return Err(GroupError::NotNormal);
    }
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for a in g.elements() {
        if coset_of[a] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        reps.push(a);
        for &m in n {
            coset_of[g.mul(a, m)] = idx;
        }
    }
    let names = reps.iter().map(|&r| format!("[{}]", g.name(r))).collect();
    let table = reps
        .iter()
        .map(|&a| reps.iter().map(|&b| coset_of[g.mul(a, b)]).collect())
        .collect();
    let q = FiniteGroup::new(names, table)?;
    let proj = GroupHomomorphism::from_parts(g.clone(), q.clone(), coset_of)?;
    Ok((q, proj))
}

/// A set-theoretic section s of a surjection q with s(1) = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    projection: GroupHomomorphism,
    choice: Vec<Elem>,
}

impl Section {
    pub fn new(projection: GroupHomomorphism, choice: Vec<Elem>) -> Result<Self, GroupError> {
        if !projection.is_surjective() {
            return Err(GroupError::NotSurjective);
        }
        let tgt = projection.target();
        if choice.len() != tgt.order() || choice.iter().any(|&x| x >= projection.source().order()) {
            return Err(GroupError::MapLength {
                expected: tgt.order(),
                found: choice.len(),
            });
        }
        if choice[0] != 0 {
            return Err(GroupError::SectionNotNormalized);
        }
        if let Some(g) = tgt.elements().find(|&g| projection.apply(choice[g]) != g) {
            return Err(GroupError::NotASection { element: g });
        }
        Ok(Section { projection, choice })
    }

    /// The section picking the least-index preimage of every element.
    pub fn canonical(projection: GroupHomomorphism) -> Result<Self, GroupError> {
        let mut choice = vec![usize::MAX; projection.target().order()];
        for p in projection.source().elements().rev() {
            choice[projection.apply(p)] = p;
        }
        if choice.contains(&usize::MAX) {
            return Err(GroupError::NotSurjective);
        }
        Self::new(projection, choice)
    }

    pub fn projection(&self) -> &GroupHomomorphism {
        &self.projection
    }

    pub fn choice(&self) -> &[Elem] {
        &self.choice
    }

    pub fn lift(&self, g: Elem) -> Elem {
        self.choice[g]
    }

    pub fn is_homomorphism(&self) -> bool {
        let (p, g) = (self.projection.source(), self.projection.target());
        g.elements().all(|a| {
            g.elements()
                .all(|b| p.mul(self.lift(a), self.lift(b)) == self.lift(g.mul(a, b)))
        })
    }
}

/// The normalized 2-cocycle f(g,h) = s(g)s(h)s(gh)⁻¹ of a section, valued in N = ker q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCocycle {
    base: FiniteGroup,
    kernel: FiniteGroup,
    kernel_incl: Vec<Elem>,
    values: Vec<Vec<Elem>>,
    /// lift_action[g][n] = s(g)·n·s(g)⁻¹, in kernel indices
    lift_action: Vec<Vec<Elem>>,
}

impl TwoCocycle {
    pub fn base(&self) -> &FiniteGroup {
        &self.base
    }

    pub fn kernel(&self) -> &FiniteGroup {
        &self.kernel
    }

    /// Kernel index to the corresponding element of the extension group.
    pub fn kernel_incl(&self) -> &[Elem] {
        &self.kernel_incl
    }

    /// f(g, h) as a kernel index.
    pub fn value(&self, g: Elem, h: Elem) -> Elem {
        self.values[g][h]
    }

    pub fn values(&self) -> &[Vec<Elem>] {
        &self.values
    }

    /// ^{s(g)}n
    pub fn act(&self, g: Elem, n: Elem) -> Elem {
        self.lift_action[g][n]
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().flatten().all(|&v| v == 0)
    }

    /// Normalization and f(g,h)f(gh,k) = ^{s(g)}f(h,k)·f(g,hk).
    pub fn check(&self) -> Report {
        let (g, n) = (&self.base, &self.kernel);
        let mut report = Report::new("2-cocycle");
        {
            let mut ax = report.axiom("cocycle", "normalized");
            for a in g.elements() {
                ax.check(self.value(0, a) == 0 && self.value(a, 0) == 0, || {
                    (g.name(a).into(), "f(1,g) or f(g,1) is not trivial".into())
                });
            }
        }
        let mut ax = report.axiom("cocycle", "cocycle identity");
        for a in g.elements() {
            for b in g.elements() {
                for c in g.elements() {
                    let lhs = n.mul(self.value(a, b), self.value(g.mul(a, b), c));
                    let rhs = n.mul(self.act(a, self.value(b, c)), self.value(a, g.mul(b, c)));
                    ax.check(lhs == rhs, || {
                        (
                            format!("({}, {}, {})", g.name(a), g.name(b), g.name(c)),
                            format!("{} ≠ {}", n.name(lhs), n.name(rhs)),
                        )
                    });
                }
            }
        }
        report
    }
}

pub fn cocycle_from_section(sec: &Section) -> Result<TwoCocycle, GroupError> {
    let q = sec.projection();
    let (p, g) = (q.source(), q.target());
    let (kernel, kernel_incl) = p.subgroup(&q.kernel())?;
    let to_kernel = |x: Elem| -> Elem {
        kernel_incl
            .iter()
            .position(|&y| y == x)
            .expect("value lies in the kernel")
    };
    let values = g
        .elements()
        .map(|a| {
            g.elements()
                .map(|b| {
                    let v = p.product(&[sec.lift(a), sec.lift(b), p.inv(sec.lift(g.mul(a, b)))]);
                    to_kernel(v)
                })
                .collect()
        })
        .collect();
    let lift_action = g
        .elements()
        .map(|a| {
            kernel
                .elements()
                .map(|m| to_kernel(p.conj(sec.lift(a), kernel_incl[m])))
                .collect()
        })
        .collect();
    let cocycle = TwoCocycle {
        base: g.clone(),
        kernel,
        kernel_incl,
        values,
        lift_action,
    };
    let report = cocycle.check();
    if !report.passed {
        return Err(GroupError::CocycleIdentityViolated(Box::new(report)));
    }
    Ok(cocycle)
}
