//! The formal HQFT τ_L determined by a crossed C-algebra L.

mod equivalence;
mod random;

use thiserror::Error;

use crate::crossed_algebras::{
    check_crossed_algebra, trace_pair, AlgebraError, AlgebraParts, CrossedAlgebra,
};
use crate::exact_linalg::{dual_basis, Matrix, Scalar, TensorSpace};
use crate::formal_maps::{
    typecheck, CobordismExpression, ElementaryPiece, FormalBoundary, FormalError,
};
use crate::groups::Elem;
use crate::report::Report;

pub use equivalence::{
    check_equivalence_invariance, FAMILY_DISC_CYL, FAMILY_INNER_PRODUCT, FAMILY_PANTS,
    FAMILY_WHISKERING,
};
pub use random::random_expression;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HqftError {
    #[error("expression does not typecheck: {}", .0.first_violation().map(|v| v.detail.clone()).unwrap_or_default())]
    TypecheckFailed(Box<Report>),
    #[error("pairing on grade {grade} is singular")]
    SingularRho { grade: String },
    #[error("vector has length {found}, grade {grade} has dimension {expected}")]
    GradeMismatch {
        grade: String,
        expected: usize,
        found: usize,
    },
    #[error(transparent)]
    Formal(#[from] FormalError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A linear map between the state spaces of two boundaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvaluatedMap<F> {
    pub source: FormalBoundary,
    pub target: FormalBoundary,
    pub source_dims: Vec<usize>,
    pub target_dims: Vec<usize>,
    pub matrix: Matrix<F>,
}

#[derive(Clone, Copy, Debug)]
pub struct FormalHqft<'a, F> {
    algebra: &'a CrossedAlgebra<F>,
}

impl<'a, F: Scalar> FormalHqft<'a, F> {
    /// Requires the algebra to pass every axiom.
    pub fn new(algebra: &'a CrossedAlgebra<F>) -> Result<Self, HqftError> {
        let report = check_crossed_algebra(algebra);
        if !report.passed {
            return Err(AlgebraError::Axioms(Box::new(report)).into());
        }
        Ok(FormalHqft { algebra })
    }

    /// Evaluates with whatever structure the algebra has, axioms or not.
    pub fn unchecked(algebra: &'a CrossedAlgebra<F>) -> Self {
        FormalHqft { algebra }
    }

    pub fn algebra(&self) -> &'a CrossedAlgebra<F> {
        self.algebra
    }

    /// ⊗ᵢ L_{gᵢ} over the normalized circuits; ∅ gives the ground field.
    pub fn state_space(&self, b: &FormalBoundary) -> TensorSpace {
        let p = self.algebra.crossed_module().base();
        TensorSpace::new(self.algebra.space(), &b.grades(p))
    }

    fn tensor_dim(&self, grades: &[Elem]) -> usize {
        grades.iter().map(|&g| self.algebra.dim(g)).product()
    }

    pub fn piece_matrix(&self, piece: &ElementaryPiece) -> Result<Matrix<F>, HqftError> {
        let l = self.algebra;
        let cm = l.crossed_module();
        let p = cm.base();
        piece.validate(cm)?;
        let d = |g: Elem| l.dim(g);
        Ok(match *piece {
            ElementaryPiece::Disc { c } => Matrix::from_columns(&[l.tilde(c).to_vec()], d(cm.d(c))),
            ElementaryPiece::Cyl { c, g, h } => {
                let hinv = p.inv(h);
                let moved = p.conj(hinv, g);
                l.left_mul(cm.d(c), l.tilde(c), moved).mul(l.phi(hinv, g))
            }
            ElementaryPiece::Pants { c, g1, g2 } => l
                .left_mul(cm.d(c), l.tilde(c), p.mul(g1, g2))
                .mul(l.mul_block(g1, g2)),
            ElementaryPiece::Cap { g } => {
                let r = l.rho(g);
                let row: Vec<F> = (0..r.rows())
                    .flat_map(|i| (0..r.cols()).map(move |j| (i, j)))
                    .map(|(i, j)| r.get(i, j).clone())
                    .collect();
                Matrix::from_rows(vec![row], r.rows() * r.cols()).expect("one row")
            }
            ElementaryPiece::Cup { g } => self.cup(g)?,
            ElementaryPiece::Copants { g1, g2 } => {
                let g12 = p.mul(g1, g2);
                let first = self.cup(g1)?.kron(&Matrix::identity(d(g12)));
                let pants = self.piece_matrix(&ElementaryPiece::Pants {
                    c: 0,
                    g1: p.inv(g1),
                    g2: g12,
                })?;
                Matrix::identity(d(g1)).kron(&pants).mul(&first)
            }
            ElementaryPiece::Id { g } => Matrix::identity(d(g)),
            ElementaryPiece::Swap { g1, g2 } => {
                let (a, b) = (d(g1), d(g2));
                let mut m = Matrix::zeros(a * b, a * b);
                for i in 0..a {
                    for j in 0..b {
                        m.set(j * a + i, i * b + j, F::one());
                    }
                }
                m
            }
        })
    }

    /// Σᵢ eᵢ ⊗ eⁱ with ρ_g(eᵢ, eʲ) = δᵢⱼ.
    fn cup(&self, g: Elem) -> Result<Matrix<F>, HqftError> {
        let l = self.algebra;
        let r = l.rho(g);
        let dual = dual_basis(r).map_err(|_| HqftError::SingularRho {
            grade: l.crossed_module().base().name(g).into(),
        })?;
        let column: Vec<F> = (0..r.rows())
            .flat_map(|i| (0..r.cols()).map(move |k| (i, k)))
            .map(|(i, k)| dual.get(k, i).clone())
            .collect();
        Ok(Matrix::from_columns(&[column], r.rows() * r.cols()))
    }

    pub fn eval_piece(&self, piece: &ElementaryPiece) -> Result<EvaluatedMap<F>, HqftError> {
        let cm = self.algebra.crossed_module();
        let matrix = self.piece_matrix(piece)?;
        let (src, tgt) = (piece.source(cm), piece.target(cm));
        Ok(EvaluatedMap {
            source_dims: src.iter().map(|&g| self.algebra.dim(g)).collect(),
            target_dims: tgt.iter().map(|&g| self.algebra.dim(g)).collect(),
            source: FormalBoundary::from_grades(&src),
            target: FormalBoundary::from_grades(&tgt),
            matrix,
        })
    }

    /// Kronecker product within a layer, matrix product across layers.
    pub fn eval_expression(&self, e: &CobordismExpression) -> Result<EvaluatedMap<F>, HqftError> {
        let cm = self.algebra.crossed_module();
        let report = typecheck(cm, e);
        if !report.passed {
            return Err(HqftError::TypecheckFailed(Box::new(report)));
        }
        let src = e.source_grades(cm);
        let mut acc = Matrix::identity(self.tensor_dim(&src));
        for layer in &e.layers {
            let mut m = Matrix::identity(1);
            for piece in layer {
                m = m.kron(&self.piece_matrix(piece)?);
            }
            acc = m.mul(&acc);
        }
        let tgt = e.target_grades(cm);
        Ok(EvaluatedMap {
            source: e.source.clone(),
            target: e.target.clone(),
            source_dims: src.iter().map(|&g| self.algebra.dim(g)).collect(),
            target_dims: tgt.iter().map(|&g| self.algebra.dim(g)).collect(),
            matrix: acc,
        })
    }

    /// Reads the algebra back off the evaluator: grading from state spaces, μ from
    /// Pants(1, g, h), ρ from Cap, φ_h from Cyl(1, g, h⁻¹) and c̃ from Disc(c).
    pub fn extract_algebra(&self) -> Result<CrossedAlgebra<F>, HqftError> {
        let l = self.algebra;
        let cm = l.crossed_module();
        let p = cm.base();
        let n = p.order();
        let eval = |piece: ElementaryPiece| self.piece_matrix(&piece);
        let mut mul = Vec::with_capacity(n * n);
        let mut phi = Vec::with_capacity(n * n);
        for a in p.elements() {
            for b in p.elements() {
                mul.push(eval(ElementaryPiece::Pants { c: 0, g1: a, g2: b })?);
                phi.push(eval(ElementaryPiece::Cyl {
                    c: 0,
                    g: b,
                    h: p.inv(a),
                })?);
            }
        }
        let mut rho = Vec::with_capacity(n);
        for g in p.elements() {
            let row = eval(ElementaryPiece::Cap { g })?.row(0);
            let cols = l.dim(p.inv(g));
            let rows: Vec<Vec<F>> = (0..l.dim(g))
                .map(|i| row[i * cols..(i + 1) * cols].to_vec())
                .collect();
            rho.push(Matrix::from_rows(rows, cols).expect("rectangular"));
        }
        let tilde = cm
            .top()
            .elements()
            .map(|c| eval(ElementaryPiece::Disc { c }).map(|m| m.column(0)))
            .collect::<Result<Vec<_>, _>>()?;
        let space = crate::exact_linalg::GradedSpace::new(
            p.elements()
                .map(|g| {
                    let dim = self.state_space(&FormalBoundary::from_grades(&[g])).dim();
                    l.space().basis_names(g)[..dim].to_vec()
                })
                .collect(),
        )
        .map_err(|e| AlgebraError::Shape(e.to_string()))?;
        let parts = AlgebraParts {
            space,
            mul,
            unit: tilde[0].clone(),
            rho,
            phi,
            tilde,
        };
        Ok(CrossedAlgebra::from_parts(cm.clone(), parts)?)
    }

    /// Both sides of the trace axiom for g, h and c ∈ L_{ghg⁻¹h⁻¹}.
    pub fn trace_axiom_probe(&self, g: Elem, h: Elem, c: &[F]) -> Result<(F, F), HqftError> {
        let l = self.algebra;
        let p = l.crossed_module().base();
        let k = p.product(&[g, h, p.inv(g), p.inv(h)]);
        if c.len() != l.dim(k) {
            return Err(HqftError::GradeMismatch {
                grade: p.name(k).into(),
                expected: l.dim(k),
                found: c.len(),
            });
        }
        Ok(trace_pair(l, g, h, c))
    }
}
