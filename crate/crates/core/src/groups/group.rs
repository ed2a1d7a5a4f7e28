//! Finite groups given by a full multiplication table.

use std::collections::{BTreeSet, HashMap};

use super::GroupError;

/// Index of a group element; 0 is always the identity.
pub type Elem = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<Vec<Elem>>,
    inverses: Vec<Elem>,
}

impl FiniteGroup {
    /// Validates the table: identity at index 0, Latin square, inverses, associativity.
    pub fn new(names: Vec<String>, table: Vec<Vec<Elem>>) -> Result<Self, GroupError> {
        let n = names.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(GroupError::TableShape { order: n });
        }
        if let Some((i, j)) = cells(n).find(|&(i, j)| table[i][j] >= n) {
            return Err(GroupError::IndexOutOfRange {
                row: i,
                col: j,
                value: table[i][j],
            });
        }
        let mut seen = std::collections::HashSet::new();
        for name in &names {
            if !seen.insert(name) {
                return Err(GroupError::DuplicateName(name.clone()));
            }
        }
        for i in 0..n {
            if table[0][i] != i || table[i][0] != i {
                return Err(GroupError::NoIdentityAtZero { element: i });
            }
        }
        for i in 0..n {
            let row: BTreeSet<_> = table[i].iter().collect();
            let col: BTreeSet<_> = (0..n).map(|j| table[j][i]).collect();
            if row.len() != n {
                return Err(GroupError::NotLatinSquare {
                    line: format!("row {i}"),
                });
            }
            if col.len() != n {
                return Err(GroupError::NotLatinSquare {
                    line: format!("column {i}"),
                });
            }
        }
        let mut inverses = vec![0; n];
        for i in 0..n {
            match (0..n).find(|&j| table[i][j] == 0 && table[j][i] == 0) {
                Some(j) => inverses[i] = j,
                None => return Err(GroupError::MissingInverse { element: i }),
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(FiniteGroup {
            names,
            table,
            inverses,
        })
    }

    pub fn trivial() -> Self {
        Self::new(vec!["e".into()], vec![vec![0]]).expect("trivial group")
    }

    /// Z/n with elements named `0..n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        let names = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        Self::new(names, table).expect("cyclic group")
    }

    /// Z/2 with elements named `e` and `s`.
    pub fn z2() -> Self {
        Self::new(vec!["e".into(), "s".into()], vec![vec![0, 1], vec![1, 0]]).expect("Z/2")
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn identity(&self) -> Elem {
        0
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order()
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a][b]
    }

    /// Product of a sequence, left to right.
    pub fn product(&self, elems: &[Elem]) -> Elem {
        elems.iter().fold(0, |acc, &x| self.mul(acc, x))
    }

    pub fn inv(&self, a: Elem) -> Elem {
        self.inverses[a]
    }

    /// p·c·p⁻¹
    pub fn conj(&self, p: Elem, c: Elem) -> Elem {
        self.mul(self.mul(p, c), self.inv(p))
    }

    pub fn pow(&self, a: Elem, k: usize) -> Elem {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: Elem) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn name(&self, a: Elem) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn table(&self) -> &[Vec<Elem>] {
        &self.table
    }

    pub fn index_of(&self, name: &str) -> Option<Elem> {
        self.names.iter().position(|n| n == name)
    }

    pub fn name_index(&self) -> HashMap<&str, Elem> {
        self.names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        cells(self.order()).all(|(a, b)| self.mul(a, b) == self.mul(b, a))
    }

    /// Whether the sorted index set is a subgroup.
    pub fn is_subgroup(&self, set: &[Elem]) -> bool {
        let s: BTreeSet<Elem> = set.iter().copied().collect();
        s.contains(&0)
            && s.iter().all(|&a| a < self.order())
            && s.iter()
                .all(|&a| s.iter().all(|&b| s.contains(&self.mul(a, self.inv(b)))))
    }

    pub fn is_normal(&self, set: &[Elem]) -> bool {
        let s: BTreeSet<Elem> = set.iter().copied().collect();
        self.is_subgroup(set)
            && self
                .elements()
                .all(|g| s.iter().all(|&n| s.contains(&self.conj(g, n))))
    }

    /// Subgroup generated by `gens`, as a sorted index set.
    pub fn generated(&self, gens: &[Elem]) -> Vec<Elem> {
        let mut set: BTreeSet<Elem> = BTreeSet::from([0]);
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set.into_iter().collect()
    }

    /// Centre of the group, sorted.
    pub fn center(&self) -> Vec<Elem> {
        self.elements()
            .filter(|&a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
            .collect()
    }

    /// The subgroup `set` as a group in its own right, with names kept; returns the inclusion map.
    pub fn subgroup(&self, set: &[Elem]) -> Result<(FiniteGroup, Vec<Elem>), GroupError> {
        if !self.is_subgroup(set) {
            return Err(GroupError::NotSubgroup);
        }
        let elems: Vec<Elem> = set
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let pos: HashMap<Elem, usize> = elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let names = elems.iter().map(|&e| self.names[e].clone()).collect();
        let table = elems
            .iter()
            .map(|&a| elems.iter().map(|&b| pos[&self.mul(a, b)]).collect())
            .collect();
        Ok((FiniteGroup::new(names, table)?, elems))
    }

    /// Exhaustive associativity sweep, for use on tables not built through `new`.
    pub fn associativity_failures(&self) -> usize {
        let n = self.order();
        let mut bad = 0;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        bad += 1;
                    }
                }
            }
        }
        bad
    }
}

pub(crate) fn cells(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))
}
