//! Crossed C-algebras: storage, axiom checking and the standard constructions.

mod adjunction;
mod check;
mod constructions;
mod enumerate;
mod identities;
mod kp_iso;
mod morphism;
mod pullback;
mod pushforward;

use thiserror::Error;

use crate::crossed_modules::{CrossedModule, CrossedModuleError};
use crate::exact_linalg::{GradedSpace, LinalgError, Matrix, Scalar};
use crate::groups::{Elem, GroupError};
use crate::report::Report;

pub use adjunction::{check_adjunction, AdjunctionCounts};
pub use check::{
    check_crossed_algebra, trace_pair, FAMILY_ACTION, FAMILY_ALGEBRA, FAMILY_FROBENIUS,
    FAMILY_OWN_GRADE, FAMILY_TILDE, FAMILY_TRACE, FAMILY_TWISTED,
};
pub use constructions::{group_algebra_c, group_algebra_p};
pub use enumerate::{enumerate_morphisms, DEFAULT_SEARCH_BOUND};
pub use identities::{
    aut_square_check, check_boxed_identities, theta, FAMILY_THETA_ADJOINT, FAMILY_THETA_COMMUTE,
    FAMILY_THETA_COMPOSITION, FAMILY_THETA_EQUIVARIANT,
};
pub use kp_iso::{kp_iso_witness, KpIso};
pub use morphism::{check_algebra_morphism, CrossedAlgebraMorphism};
pub use pullback::{pullback, transpose_to_pullback, untranspose_from_pullback};
pub use pushforward::{
    pushforward, pushforward_ideal, transpose_from_pushforward, untranspose_from_pushforward,
    Pushforward, PushforwardIdeal,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("malformed algebra data: {0}")]
    Shape(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    CrossedModule(#[from] CrossedModuleError),
    #[error("θ({c}, {g}) is singular")]
    SingularTheta { c: String, g: String },
    #[error("crossed module morphism is not an epimorphism")]
    NotEpimorphism,
    #[error("pushforward inner product is not well defined in grade {grade}")]
    RhoIllDefined { grade: String },
    #[error("morphism does not vanish on the pushforward ideal")]
    DoesNotFactor,
    #[error("a section of the quotient map is required")]
    SectionRequired,
    #[error("morphism search needs a finite field")]
    InfiniteField,
    #[error("morphism search space of {size} candidates exceeds the bound {bound}")]
    SearchTooLarge { size: String, bound: u128 },
    #[error("algebra is over a different crossed module than expected")]
    WrongBase,
    #[error("axioms fail: {}", .0.summary())]
    Axioms(Box<Report>),
}

/// A P-graded algebra L = ⊕ L_g with pairing ρ, action φ and the tilde map c ↦ c̃.
///
/// Products are stored per pair of grades, so L_g·L_h ⊆ L_{gh} holds by construction;
/// the block for (g, h) maps the basis pair (i, j) at column `i·dim(h) + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedAlgebra<F> {
    cm: CrossedModule,
    space: GradedSpace,
    mul: Vec<Matrix<F>>,
    unit: Vec<F>,
    rho: Vec<Matrix<F>>,
    phi: Vec<Matrix<F>>,
    tilde: Vec<Vec<F>>,
}

/// Raw structure data, indexed by grade (and pairs of grades, row-major).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraParts<F> {
    pub space: GradedSpace,
    /// `mul[g * n + h]`: dim(gh) × dim(g)·dim(h)
    pub mul: Vec<Matrix<F>>,
    pub unit: Vec<F>,
    /// `rho[g]`: dim(g) × dim(g⁻¹)
    pub rho: Vec<Matrix<F>>,
    /// `phi[h * n + g]`: dim(hgh⁻¹) × dim(g)
    pub phi: Vec<Matrix<F>>,
    /// `tilde[c]`: vector in L_{∂c}
    pub tilde: Vec<Vec<F>>,
}

impl<F: Scalar> CrossedAlgebra<F> {
    /// Checks shapes only; see [`check_crossed_algebra`] for the axioms.
    pub fn from_parts(cm: CrossedModule, parts: AlgebraParts<F>) -> Result<Self, AlgebraError> {
        let p = cm.base();
        let n = p.order();
        let AlgebraParts {
            space,
            mul,
            unit,
            rho,
            phi,
            tilde,
        } = parts;
        let bad = |s: String| Err(AlgebraError::Shape(s));
        if space.num_grades() != n {
            return bad(format!(
                "{} grades for a base group of order {n}",
                space.num_grades()
            ));
        }
        let d = |g: Elem| space.dim(g);
        if mul.len() != n * n || phi.len() != n * n || rho.len() != n {
            return bad("wrong number of structure blocks".into());
        }
        for g in p.elements() {
            for h in p.elements() {
                let m = &mul[g * n + h];
                if m.rows() != d(p.mul(g, h)) || m.cols() != d(g) * d(h) {
                    return bad(format!("product block ({}, {})", p.name(g), p.name(h)));
                }
                let f = &phi[h * n + g];
                if f.rows() != d(p.conj(h, g)) || f.cols() != d(g) {
                    return bad(format!(
                        "action block φ_{} on grade {}",
                        p.name(h),
                        p.name(g)
                    ));
                }
            }
            if rho[g].rows() != d(g) || rho[g].cols() != d(p.inv(g)) {
                return bad(format!("pairing block for grade {}", p.name(g)));
            }
        }
        if unit.len() != d(0) {
            return bad("unit does not lie in the identity grade".into());
        }
        if tilde.len() != cm.top().order() {
            return bad("one tilde vector per element of C is required".into());
        }
        for c in cm.top().elements() {
            if tilde[c].len() != d(cm.d(c)) {
                return bad(format!(
                    "tilde of {} does not lie in grade ∂c",
                    cm.top().name(c)
                ));
            }
        }
        Ok(CrossedAlgebra {
            cm,
            space,
            mul,
            unit,
            rho,
            phi,
            tilde,
        })
    }

    /// Builds and checks all axioms.
    pub fn new(cm: CrossedModule, parts: AlgebraParts<F>) -> Result<Self, AlgebraError> {
        let l = Self::from_parts(cm, parts)?;
        let report = check_crossed_algebra(&l);
        if !report.passed {
            return Err(AlgebraError::Axioms(Box::new(report)));
        }
        Ok(l)
    }

    pub fn into_parts(self) -> (CrossedModule, AlgebraParts<F>) {
        (
            self.cm,
            AlgebraParts {
                space: self.space,
                mul: self.mul,
                unit: self.unit,
                rho: self.rho,
                phi: self.phi,
                tilde: self.tilde,
            },
        )
    }

    pub fn parts(&self) -> AlgebraParts<F> {
        self.clone().into_parts().1
    }

    pub fn crossed_module(&self) -> &CrossedModule {
        &self.cm
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn grades(&self) -> usize {
        self.space.num_grades()
    }

    pub fn dim(&self, g: Elem) -> usize {
        self.space.dim(g)
    }

    pub fn total_dim(&self) -> usize {
        self.space.total_dim()
    }

    pub fn mul_block(&self, g: Elem, h: Elem) -> &Matrix<F> {
        &self.mul[g * self.grades() + h]
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn rho(&self, g: Elem) -> &Matrix<F> {
        &self.rho[g]
    }

    /// φ_h restricted to L_g, as a map L_g → L_{hgh⁻¹}.
    pub fn phi(&self, h: Elem, g: Elem) -> &Matrix<F> {
        &self.phi[h * self.grades() + g]
    }

    pub fn tilde(&self, c: Elem) -> &[F] {
        &self.tilde[c]
    }

    pub fn basis_vector(&self, g: Elem, i: usize) -> Vec<F> {
        unit_vector(self.dim(g), i)
    }

    /// x·y for x ∈ L_g, y ∈ L_h.
    pub fn product(&self, g: Elem, x: &[F], h: Elem, y: &[F]) -> Vec<F> {
        let m = self.mul_block(g, h);
        let mut out = vec![F::zero(); m.rows()];
        let dh = self.dim(h);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let s = a.clone() * b.clone();
                for (r, o) in out.iter_mut().enumerate() {
                    let e = m.get(r, i * dh + j);
                    if !e.is_zero() {
                        *o = o.clone() + s.clone() * e.clone();
                    }
                }
            }
        }
        out
    }

    /// Left multiplication by x ∈ L_g, as a map L_h → L_{gh}.
    pub fn left_mul(&self, g: Elem, x: &[F], h: Elem) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim(h))
            .map(|j| self.product(g, x, h, &self.basis_vector(h, j)))
            .collect();
        Matrix::from_columns(&cols, self.dim(self.cm.base().mul(g, h)))
    }

    /// Right multiplication by y ∈ L_h, as a map L_g → L_{gh}.
    pub fn right_mul(&self, h: Elem, y: &[F], g: Elem) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim(g))
            .map(|i| self.product(g, &self.basis_vector(g, i), h, y))
            .collect();
        Matrix::from_columns(&cols, self.dim(self.cm.base().mul(g, h)))
    }

    /// ρ(x, y) for x ∈ L_g and y ∈ L_h; zero unless h = g⁻¹.
    pub fn pairing(&self, g: Elem, x: &[F], h: Elem, y: &[F]) -> F {
        if h != self.cm.base().inv(g) {
            return F::zero();
        }
        bilinear(self.rho(g), x, y)
    }

    /// Name of the j-th basis vector of grade g, qualified by the grade.
    pub fn basis_label(&self, g: Elem, j: usize) -> String {
        format!(
            "{}@{}",
            self.space.basis_names(g)[j],
            self.cm.base().name(g)
        )
    }
}

pub(crate) fn unit_vector<F: Scalar>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

/// xᵀ M y
pub(crate) fn bilinear<F: Scalar>(m: &Matrix<F>, x: &[F], y: &[F]) -> F {
    let my = m.apply(y);
    x.iter()
        .zip(&my)
        .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
}

pub(crate) fn fmt_vec<F: Scalar>(v: &[F]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.encode()).collect();
    format!("[{}]", parts.join(", "))
}

/// First column where two equally-shaped matrices differ.
pub(crate) fn first_diff<F: Scalar>(a: &Matrix<F>, b: &Matrix<F>) -> Option<(usize, usize)> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Some((usize::MAX, usize::MAX));
    }
    for c in 0..a.cols() {
        for r in 0..a.rows() {
            if a.get(r, c) != b.get(r, c) {
                return Some((r, c));
            }
        }
    }
    None
}
