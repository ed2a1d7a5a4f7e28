//! Pushing a crossed algebra forward along an epimorphism of crossed modules.

use super::{AlgebraError, AlgebraParts, CrossedAlgebra, CrossedAlgebraMorphism};
use crate::crossed_modules::CrossedModuleMorphism;
use crate::exact_linalg::{solve, GradedSpace, Matrix, Scalar, SpanBasis};
use crate::groups::Elem;
use crate::report::Report;

/// f_*(L) together with the data used to build it.
#[derive(Clone, Debug)]
pub struct Pushforward<F> {
    pub algebra: CrossedAlgebra<F>,
    /// `classes[q]`: the source grades p with f₀(p) = q, ascending.
    pub classes: Vec<Vec<Elem>>,
    /// `ideal[q]`: 𝒦_q inside 𝓛_q = ⊕ L_p, coordinates concatenated in class order.
    pub ideal: Vec<SpanBasis<F>>,
    /// `projection[p]`: L_p → f_*(L)_{f₀(p)}.
    pub projection: Vec<Matrix<F>>,
    /// Every representative pair (p, p⁻¹) against the quotient pairing.
    pub rho_report: Report,
}

impl<F: Scalar> Pushforward<F> {
    pub fn ideal_dim(&self) -> usize {
        self.ideal.iter().map(SpanBasis::dim).sum()
    }
}

/// Coordinates of 𝓛_q = ⊕_{f₀(p)=q} L_p.
struct Classes<'a, F> {
    l: &'a CrossedAlgebra<F>,
    f: &'a CrossedModuleMorphism,
    members: Vec<Vec<Elem>>,
    offset: Vec<usize>,
    width: Vec<usize>,
}

impl<'a, F: Scalar> Classes<'a, F> {
    fn new(l: &'a CrossedAlgebra<F>, f: &'a CrossedModuleMorphism) -> Self {
        let p = l.crossed_module().base();
        let q_order = f.target().base().order();
        let mut members = vec![Vec::new(); q_order];
        let mut offset = vec![0; p.order()];
        let mut width = vec![0; q_order];
        for g in p.elements() {
            let q = f.f0(g);
            members[q].push(g);
            offset[g] = width[q];
            width[q] += l.dim(g);
        }
        Classes {
            l,
            f,
            members,
            offset,
            width,
        }
    }

    fn embed(&self, g: Elem, x: &[F]) -> Vec<F> {
        let q = self.f.f0(g);
        let mut v = vec![F::zero(); self.width[q]];
        v[self.offset[g]..self.offset[g] + x.len()].clone_from_slice(x);
        v
    }

    fn component<'v>(&self, g: Elem, v: &'v [F]) -> &'v [F] {
        &v[self.offset[g]..self.offset[g] + self.l.dim(g)]
    }

    /// e·v (left) or v·e (right) for e a basis vector of L_r and v ∈ 𝓛_q.
    fn multiply(&self, r: Elem, j: usize, q: Elem, v: &[F], left: bool) -> (Elem, Vec<F>) {
        let (p, qg) = (self.l.crossed_module().base(), self.f.target().base());
        let e = self.l.basis_vector(r, j);
        let tq = if left {
            qg.mul(self.f.f0(r), q)
        } else {
            qg.mul(q, self.f.f0(r))
        };
        let mut out = vec![F::zero(); self.width[tq]];
        for &g in &self.members[q] {
            let comp = self.component(g, v);
            if comp.iter().all(|x| x.is_zero()) {
                continue;
            }
            let (prod, tg) = if left {
                (self.l.product(r, &e, g, comp), p.mul(r, g))
            } else {
                (self.l.product(g, comp, r, &e), p.mul(g, r))
            };
            for (k, x) in prod.into_iter().enumerate() {
                let idx = self.offset[tg] + k;
                out[idx] = out[idx].clone() + x;
            }
        }
        (tq, out)
    }
}

/// 𝒦 and the graded quotient vector space, without the algebra structure.
#[derive(Clone, Debug)]
pub struct PushforwardIdeal<F> {
    pub classes: Vec<Vec<Elem>>,
    pub ideal: Vec<SpanBasis<F>>,
    /// dim 𝓛_q/𝒦_q per target grade
    pub quotient_dims: Vec<usize>,
}

/// The two-sided ideal generated by φ_n(a) − a (n ∈ ker f₀) and b̃ − 1 (b ∈ ker f₁),
/// closed under multiplication by basis vectors on both sides until the span is stable.
pub fn pushforward_ideal<F: Scalar>(
    f: &CrossedModuleMorphism,
    l: &CrossedAlgebra<F>,
) -> Result<PushforwardIdeal<F>, AlgebraError> {
    if l.crossed_module() != f.source() {
        return Err(AlgebraError::WrongBase);
    }
    if !f.is_epimorphism() {
        return Err(AlgebraError::NotEpimorphism);
    }
    let cls = Classes::new(l, f);
    let ideal = build_ideal(&cls);
    Ok(PushforwardIdeal {
        classes: cls.members.clone(),
        quotient_dims: ideal.iter().map(|k| k.ambient() - k.dim()).collect(),
        ideal,
    })
}

fn build_ideal<F: Scalar>(cls: &Classes<'_, F>) -> Vec<SpanBasis<F>> {
    let (l, f) = (cls.l, cls.f);
    let cm = f.source();
    let p = cm.base();
    let qg = f.target().base();
    let mut ideal: Vec<SpanBasis<F>> = qg
        .elements()
        .map(|q| SpanBasis::new(cls.width[q]))
        .collect();
    let mut work: Vec<(Elem, Vec<F>)> = Vec::new();
    let push =
        |ideal: &mut Vec<SpanBasis<F>>, work: &mut Vec<(Elem, Vec<F>)>, q: Elem, v: Vec<F>| {
            if ideal[q].insert(v.clone()) {
                work.push((q, v));
            }
        };
    for n in f.f_base().kernel() {
        for g in p.elements() {
            for i in 0..l.dim(g) {
                let moved = cls.embed(p.conj(n, g), &l.phi(n, g).column(i));
                let orig = cls.embed(g, &l.basis_vector(g, i));
                let v: Vec<F> = moved.into_iter().zip(orig).map(|(a, b)| a - b).collect();
                push(&mut ideal, &mut work, f.f0(g), v);
            }
        }
    }
    for b in f.f_top().kernel() {
        let t = cls.embed(cm.d(b), l.tilde(b));
        let u = cls.embed(0, l.unit());
        let v: Vec<F> = t.into_iter().zip(u).map(|(a, b)| a - b).collect();
        push(&mut ideal, &mut work, 0, v);
    }
    while let Some((q, v)) = work.pop() {
        for r in p.elements() {
            for j in 0..l.dim(r) {
                for left in [true, false] {
                    let (tq, w) = cls.multiply(r, j, q, &v, left);
                    push(&mut ideal, &mut work, tq, w);
                }
            }
        }
    }
    ideal
}

/// f_*(L) = ⊕_q 𝓛_q/𝒦_q with the induced product, pairing, action and tilde.
///
/// The pairing is solved for from ρ̄(πx, πy) = ρ(x, y) over all x ∈ L_p, y ∈ L_{p⁻¹};
/// an inconsistent system is reported as [`AlgebraError::RhoIllDefined`], and entries
/// the system leaves free are set to zero.
pub fn pushforward<F: Scalar>(
    f: &CrossedModuleMorphism,
    l: &CrossedAlgebra<F>,
) -> Result<Pushforward<F>, AlgebraError> {
    if l.crossed_module() != f.source() {
        return Err(AlgebraError::WrongBase);
    }
    if !f.is_epimorphism() {
        return Err(AlgebraError::NotEpimorphism);
    }
    let cm = f.source();
    let (c_grp, p) = (cm.top(), cm.base());
    let (d_cm, qg) = (f.target(), f.target().base());
    let cls = Classes::new(l, f);
    let ideal = build_ideal(&cls);

    let free: Vec<Vec<usize>> = qg.elements().map(|q| ideal[q].free_columns()).collect();
    let project = |q: Elem, v: &[F]| -> Vec<F> {
        let r = ideal[q].reduce(v);
        free[q].iter().map(|&c| r[c].clone()).collect()
    };
    // the source basis vector sitting at a class coordinate
    let lift = |q: Elem, coord: usize| -> (Elem, usize) {
        let g = *cls.members[q]
            .iter()
            .rev()
            .find(|&&g| cls.offset[g] <= coord && l.dim(g) > 0)
            .expect("coordinate belongs to a grade");
        (g, coord - cls.offset[g])
    };
    let dim = |q: Elem| free[q].len();

    let names: Vec<Vec<String>> = qg
        .elements()
        .map(|q| {
            let plain: Vec<String> = free[q]
                .iter()
                .map(|&c| {
                    let (g, i) = lift(q, c);
                    l.space().basis_names(g)[i].clone()
                })
                .collect();
            let unique = plain
                .iter()
                .collect::<std::collections::BTreeSet<_>>()
                .len()
                == plain.len();
            if unique {
                plain
            } else {
                free[q]
                    .iter()
                    .map(|&c| {
                        let (g, i) = lift(q, c);
                        l.basis_label(g, i)
                    })
                    .collect()
            }
        })
        .collect();

    let mut mul = Vec::with_capacity(qg.order() * qg.order());
    for q1 in qg.elements() {
        for q2 in qg.elements() {
            let q12 = qg.mul(q1, q2);
            let mut cols = Vec::with_capacity(dim(q1) * dim(q2));
            for &a in &free[q1] {
                for &b in &free[q2] {
                    let (g1, i) = lift(q1, a);
                    let (g2, j) = lift(q2, b);
                    let prod = l.product(g1, &l.basis_vector(g1, i), g2, &l.basis_vector(g2, j));
                    cols.push(project(q12, &cls.embed(p.mul(g1, g2), &prod)));
                }
            }
            mul.push(Matrix::from_columns(&cols, dim(q12)));
        }
    }
    let unit = project(0, &cls.embed(0, l.unit()));
    let mut phi = Vec::with_capacity(qg.order() * qg.order());
    for h in qg.elements() {
        let rep = cls.members[h][0];
        for q in qg.elements() {
            let target = qg.conj(h, q);
            let cols: Vec<Vec<F>> = free[q]
                .iter()
                .map(|&a| {
                    let (g, i) = lift(q, a);
                    project(target, &cls.embed(p.conj(rep, g), &l.phi(rep, g).column(i)))
                })
                .collect();
            phi.push(Matrix::from_columns(&cols, dim(target)));
        }
    }
    let tilde = d_cm
        .top()
        .elements()
        .map(|d| {
            let c = c_grp
                .elements()
                .find(|&c| f.f1(c) == d)
                .expect("f₁ is surjective");
            project(d_cm.d(d), &cls.embed(cm.d(c), l.tilde(c)))
        })
        .collect();
    let projection: Vec<Matrix<F>> = p
        .elements()
        .map(|g| {
            let q = f.f0(g);
            let cols: Vec<Vec<F>> = (0..l.dim(g))
                .map(|i| project(q, &cls.embed(g, &l.basis_vector(g, i))))
                .collect();
            Matrix::from_columns(&cols, dim(q))
        })
        .collect();

    // ρ̄_q is pinned down by ρ̄(πx, πy) = ρ(x, y) for x ∈ L_p, y ∈ L_{p⁻¹}, f₀(p) = q
    let mut rho = Vec::with_capacity(qg.order());
    let mut rho_report = Report::new("pushforward pairing");
    for q in qg.elements() {
        let qi = qg.inv(q);
        let (dq, dqi) = (dim(q), dim(qi));
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for &g in &cls.members[q] {
            let gi = p.inv(g);
            for i in 0..l.dim(g) {
                for j in 0..l.dim(gi) {
                    let x = projection[g].column(i);
                    let y = projection[gi].column(j);
                    let mut row = Vec::with_capacity(dq * dqi);
                    for a in 0..dq {
                        for b in 0..dqi {
                            row.push(x[a].clone() * y[b].clone());
                        }
                    }
                    rows.push(row);
                    rhs.push(l.rho(g).get(i, j).clone());
                }
            }
        }
        let system = Matrix::from_rows(rows, dq * dqi).expect("rows have equal length");
        let Some(sol) = solve(&system, &rhs) else {
            return Err(AlgebraError::RhoIllDefined {
                grade: qg.name(q).to_string(),
            });
        };
        let block = Matrix::from_fn(dq, dqi, |a, b| sol[a * dqi + b].clone());
        {
            let mut ax = rho_report.axiom("rho", "representative independence");
            for &g in &cls.members[q] {
                let gi = p.inv(g);
                let induced = projection[g].transpose().mul(&block).mul(&projection[gi]);
                ax.check(&induced == l.rho(g), || {
                    (
                        format!("representatives ({}, {})", p.name(g), p.name(gi)),
                        "quotient pairing disagrees with ρ on this pair".into(),
                    )
                });
            }
        }
        let rank = system.rank();
        rho_report
            .axiom("rho", "determined by representatives")
            .check(rank == dq * dqi, || {
                (
                    format!("grade {}", qg.name(q)),
                    format!(
                        "{} of {} entries undetermined, set to zero",
                        dq * dqi - rank,
                        dq * dqi
                    ),
                )
            });
        rho.push(block);
    }

    let parts = AlgebraParts {
        space: GradedSpace::new(names).map_err(|e| AlgebraError::Shape(e.to_string()))?,
        mul,
        unit,
        rho,
        phi,
        tilde,
    };
    let algebra = CrossedAlgebra::from_parts(d_cm.clone(), parts)?;
    Ok(Pushforward {
        algebra,
        classes: cls.members.clone(),
        ideal,
        projection,
        rho_report,
    })
}

/// θ: L → L′ over f, factored through f_*(L) as a morphism over the identity of the target.
pub fn transpose_from_pushforward<F: Scalar>(
    m: &CrossedAlgebraMorphism<F>,
    source: &CrossedAlgebra<F>,
    pf: &Pushforward<F>,
    target: &CrossedAlgebra<F>,
) -> Result<CrossedAlgebraMorphism<F>, AlgebraError> {
    let f = m.over();
    let cls = Classes::new(source, f);
    let qg = f.target().base();
    let apply = |q: Elem, v: &[F]| -> Vec<F> {
        let mut out = vec![F::zero(); target.dim(q)];
        for &g in &cls.members[q] {
            let w = m.block(g).apply(cls.component(g, v));
            for (o, x) in out.iter_mut().zip(w) {
                *o = o.clone() + x;
            }
        }
        out
    };
    for q in qg.elements() {
        for v in pf.ideal[q].basis() {
            if apply(q, v).iter().any(|x| !x.is_zero()) {
                return Err(AlgebraError::DoesNotFactor);
            }
        }
    }
    let blocks = qg
        .elements()
        .map(|q| {
            let cols: Vec<Vec<F>> = pf.ideal[q]
                .free_columns()
                .into_iter()
                .map(|c| {
                    let mut e = vec![F::zero(); cls.width[q]];
                    e[c] = F::one();
                    apply(q, &e)
                })
                .collect();
            Matrix::from_columns(&cols, target.dim(q))
        })
        .collect();
    CrossedAlgebraMorphism::from_parts(
        CrossedModuleMorphism::identity(f.target()),
        blocks,
        &pf.algebra,
        target,
    )
}

/// The inverse of [`transpose_from_pushforward`]: θ = θ̄ ∘ π.
pub fn untranspose_from_pushforward<F: Scalar>(
    m: &CrossedAlgebraMorphism<F>,
    f: &CrossedModuleMorphism,
    source: &CrossedAlgebra<F>,
    pf: &Pushforward<F>,
    target: &CrossedAlgebra<F>,
) -> Result<CrossedAlgebraMorphism<F>, AlgebraError> {
    if !m.over().is_identity() {
        return Err(AlgebraError::WrongBase);
    }
    let blocks = source
        .crossed_module()
        .base()
        .elements()
        .map(|g| m.block(f.f0(g)).mul(&pf.projection[g]))
        .collect();
    CrossedAlgebraMorphism::from_parts(f.clone(), blocks, source, target)
}
