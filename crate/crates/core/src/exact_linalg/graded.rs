//! Graded vector spaces with named bases and ordered tensor products of grades.

use std::collections::HashSet;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GradedError {
    #[error("expected {expected} grades, got {found}")]
    GradeCount { expected: usize, found: usize },
    #[error("grade {grade}: {names} basis names for dimension {dim}")]
    NameCount {
        grade: usize,
        names: usize,
        dim: usize,
    },
    #[error("grade {grade}: duplicate basis name {name:?}")]
    DuplicateName { grade: usize, name: String },
}

/// A vector space split into summands indexed by the elements of a finite group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedSpace {
    dims: Vec<usize>,
    basis_names: Vec<Vec<String>>,
    offsets: Vec<usize>,
}

impl GradedSpace {
    pub fn new(basis_names: Vec<Vec<String>>) -> Result<Self, GradedError> {
        for (g, names) in basis_names.iter().enumerate() {
            let mut seen = HashSet::new();
            for n in names {
                if !seen.insert(n) {
                    return Err(GradedError::DuplicateName {
                        grade: g,
                        name: n.clone(),
                    });
                }
            }
        }
        let dims: Vec<usize> = basis_names.iter().map(Vec::len).collect();
        let mut offsets = Vec::with_capacity(dims.len());
        let mut acc = 0;
        for d in &dims {
            offsets.push(acc);
            acc += d;
        }
        Ok(GradedSpace {
            dims,
            basis_names,
            offsets,
        })
    }

    /// Basis names `b0, b1, ...` in every grade.
    pub fn with_dims(dims: &[usize]) -> Self {
        let names = dims
            .iter()
            .map(|&d| (0..d).map(|i| format!("b{i}")).collect())
            .collect();
        Self::new(names).expect("generated names are unique")
    }

    pub fn num_grades(&self) -> usize {
        self.dims.len()
    }

    pub fn dim(&self, g: usize) -> usize {
        self.dims[g]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn basis_names(&self, g: usize) -> &[String] {
        &self.basis_names[g]
    }

    /// Position of the first basis vector of grade `g` in the total space.
    pub fn offset(&self, g: usize) -> usize {
        self.offsets[g]
    }

    /// Grade and in-grade index of a global basis position.
    pub fn locate(&self, global: usize) -> (usize, usize) {
        assert!(global < self.total_dim(), "basis position out of range");
        // an empty grade shares its offset with the next one, so the last match is nonempty
        let g = self.offsets.partition_point(|&o| o <= global) - 1;
        (g, global - self.offsets[g])
    }
}

/// An ordered tensor product of single grades of a graded space.
///
/// The basis is lexicographic in the factors, the first factor most significant;
/// the empty product is the one-dimensional ground field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorSpace {
    grades: Vec<usize>,
    factor_dims: Vec<usize>,
}

impl TensorSpace {
    pub fn new(space: &GradedSpace, grades: &[usize]) -> Self {
        TensorSpace {
            grades: grades.to_vec(),
            factor_dims: grades.iter().map(|&g| space.dim(g)).collect(),
        }
    }

    pub fn ground() -> Self {
        TensorSpace {
            grades: Vec::new(),
            factor_dims: Vec::new(),
        }
    }

    pub fn grades(&self) -> &[usize] {
        &self.grades
    }

    pub fn factor_dims(&self) -> &[usize] {
        &self.factor_dims
    }

    pub fn dim(&self) -> usize {
        self.factor_dims.iter().product()
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let mut grades = self.grades.clone();
        grades.extend(&other.grades);
        let mut factor_dims = self.factor_dims.clone();
        factor_dims.extend(&other.factor_dims);
        TensorSpace {
            grades,
            factor_dims,
        }
    }

    /// Basis labels as tuples of in-grade indices, in lexicographic order.
    pub fn basis(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for &d in &self.factor_dims {
            let mut next = Vec::with_capacity(out.len() * d);
            for prefix in &out {
                for i in 0..d {
                    let mut t = prefix.clone();
                    t.push(i);
                    next.push(t);
                }
            }
            out = next;
        }
        out
    }
}
