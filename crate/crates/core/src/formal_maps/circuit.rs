//! Formal C-circuits: based, oriented, subdivided circles with one P-label per edge.

use super::FormalError;
use crate::groups::{Elem, FiniteGroup};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FormalCircuit {
    labels: Vec<Elem>,
}

impl FormalCircuit {
    pub fn new(labels: Vec<Elem>) -> Result<Self, FormalError> {
        if labels.is_empty() {
            return Err(FormalError::EmptyCircuit);
        }
        Ok(FormalCircuit { labels })
    }

    pub fn single(g: Elem) -> Self {
        FormalCircuit { labels: vec![g] }
    }

    pub fn labels(&self) -> &[Elem] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// g₁·…·g_n
    pub fn holonomy(&self, p: &FiniteGroup) -> Elem {
        p.product(&self.labels)
    }

    pub fn display(&self, p: &FiniteGroup) -> String {
        let names: Vec<&str> = self.labels.iter().map(|&g| p.name(g)).collect();
        format!("({})", names.join(", "))
    }
}

/// Collapses a circuit to the single label g₁·…·g_n.
pub fn circuit_normalize(p: &FiniteGroup, b: &FormalCircuit) -> FormalCircuit {
    FormalCircuit::single(b.holonomy(p))
}

/// Reverses the sequence and inverts every label.
pub fn reverse_orientation(p: &FiniteGroup, b: &FormalCircuit) -> FormalCircuit {
    FormalCircuit {
        labels: b.labels.iter().rev().map(|&g| p.inv(g)).collect(),
    }
}

/// Moves the basepoint forward by `k` edges.
pub fn rotate_basepoint(b: &FormalCircuit, k: usize) -> FormalCircuit {
    let mut labels = b.labels.clone();
    let n = labels.len();
    labels.rotate_left(k % n);
    FormalCircuit { labels }
}

/// An ordered list of circuits; the empty list is ∅.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FormalBoundary {
    pub circuits: Vec<FormalCircuit>,
}

impl FormalBoundary {
    pub fn empty() -> Self {
        FormalBoundary::default()
    }

    pub fn new(circuits: Vec<FormalCircuit>) -> Self {
        FormalBoundary { circuits }
    }

    /// One single-label circuit per grade.
    pub fn from_grades(grades: &[Elem]) -> Self {
        FormalBoundary {
            circuits: grades.iter().map(|&g| FormalCircuit::single(g)).collect(),
        }
    }

    pub fn from_lists(lists: Vec<Vec<Elem>>) -> Result<Self, FormalError> {
        let circuits = lists
            .into_iter()
            .map(FormalCircuit::new)
            .collect::<Result<_, _>>()?;
        Ok(FormalBoundary { circuits })
    }

    pub fn len(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }

    /// Holonomy of each circuit.
    pub fn grades(&self, p: &FiniteGroup) -> Vec<Elem> {
        self.circuits.iter().map(|c| c.holonomy(p)).collect()
    }

    pub fn normalize(&self, p: &FiniteGroup) -> FormalBoundary {
        FormalBoundary::from_grades(&self.grades(p))
    }

    pub fn display(&self, p: &FiniteGroup) -> String {
        if self.circuits.is_empty() {
            return "∅".into();
        }
        let parts: Vec<String> = self.circuits.iter().map(|c| c.display(p)).collect();
        parts.join(" ⊔ ")
    }
}

pub(crate) fn grades_display(p: &FiniteGroup, grades: &[Elem]) -> String {
    FormalBoundary::from_grades(grades).display(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::perm::symmetric;

    #[test]
    fn rotation_and_reversal() {
        let s3 = symmetric(3);
        let a = s3.index_of("(12)").unwrap();
        let b = s3.index_of("(123)").unwrap();
        let c = FormalCircuit::new(vec![a, b]).unwrap();
        assert_eq!(rotate_basepoint(&c, 1).labels(), &[b, a]);
        assert_eq!(rotate_basepoint(&c, 2), c);
        assert_eq!(reverse_orientation(&s3, &c).labels(), &[s3.inv(b), a]);
        assert_eq!(reverse_orientation(&s3, &reverse_orientation(&s3, &c)), c);
        assert!(FormalCircuit::new(vec![]).is_err());
    }
}
