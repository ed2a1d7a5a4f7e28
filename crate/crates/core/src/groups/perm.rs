//! Permutation groups, composed right to left: (a·b)(x) = a(b(x)).

use std::collections::{BTreeSet, HashMap};

use super::{FiniteGroup, GroupError};

/// A permutation of `{0, ..., n-1}` as its image list.
pub type Perm = Vec<usize>;

pub fn compose(a: &[usize], b: &[usize]) -> Perm {
    b.iter().map(|&x| a[x]).collect()
}

pub fn invert(a: &[usize]) -> Perm {
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x] = i;
    }
    out
}

/// Cycle notation on the points `1..=n`, `e` for the identity.
pub fn cycle_name(a: &[usize]) -> String {
    let mut seen = vec![false; a.len()];
    let mut out = String::new();
    for start in 0..a.len() {
        if seen[start] || a[start] == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            out.push_str(&(x + 1).to_string());
            x = a[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}

/// The group generated by the given permutations, identity first and then
/// in lexicographic order of image lists.
pub fn permutation_group(
    degree: usize,
    gens: &[Perm],
) -> Result<(FiniteGroup, Vec<Perm>), GroupError> {
    let id: Perm = (0..degree).collect();
    let mut set: BTreeSet<Perm> = BTreeSet::from([id.clone()]);
    let mut frontier = vec![id.clone()];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = compose(&x, g);
            if set.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    set.remove(&id);
    let mut perms = vec![id];
    perms.extend(set);
    let index: HashMap<&Perm, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let table = perms
        .iter()
        .map(|a| perms.iter().map(|b| index[&compose(a, b)]).collect())
        .collect();
    let names = perms.iter().map(|p| cycle_name(p)).collect();
    Ok((FiniteGroup::new(names, table)?, perms))
}

/// The symmetric group on `n` points with cycle-notation names, and its permutations.
pub fn symmetric_with_perms(n: usize) -> (FiniteGroup, Vec<Perm>) {
    let mut gens = Vec::new();
    if n >= 2 {
        let mut t: Perm = (0..n).collect();
        t.swap(0, 1);
        gens.push(t);
        gens.push((0..n).map(|i| (i + 1) % n).collect());
    }
    permutation_group(n, &gens).expect("symmetric group")
}

pub fn symmetric(n: usize) -> FiniteGroup {
    symmetric_with_perms(n).0
}

pub fn is_even(a: &[usize]) -> bool {
    let mut seen = vec![false; a.len()];
    let mut transpositions = 0;
    for start in 0..a.len() {
        let mut x = start;
        let mut len = 0;
        while !seen[x] {
            seen[x] = true;
            x = a[x];
            len += 1;
        }
        if len > 0 {
            transpositions += len - 1;
        }
    }
    transpositions % 2 == 0
}

/// The sorted index set of even permutations in `symmetric(n)`.
pub fn alternating_indices(n: usize) -> Vec<usize> {
    let (_, perms) = symmetric_with_perms(n);
    (0..perms.len()).filter(|&i| is_even(&perms[i])).collect()
}
