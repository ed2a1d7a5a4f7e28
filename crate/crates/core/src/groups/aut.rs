//! Automorphism groups of small finite groups.

use std::collections::{BTreeSet, HashMap};

use super::hom::check_homomorphism;
use super::{Elem, FiniteGroup, GroupAction, GroupError, GroupHomomorphism};

pub const DEFAULT_AUT_BOUND: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismGroup {
    /// Aut(G), composed as (a·b)(x) = a(b(x)).
    pub group: FiniteGroup,
    /// The underlying bijection of each automorphism, as an image list on G.
    pub perms: Vec<Vec<Elem>>,
    /// The canonical map α: G → Aut(G), g ↦ conjugation by g.
    pub embedding: GroupHomomorphism,
    /// Aut(G) acting on G by evaluation.
    pub action: GroupAction,
}

/// Greedy generating set: repeatedly add the least element outside the span so far.
fn generating_set(g: &FiniteGroup) -> Vec<Elem> {
    let mut gens = Vec::new();
    let mut span: BTreeSet<Elem> = BTreeSet::from([0]);
    for a in g.elements() {
        if !span.contains(&a) {
            gens.push(a);
            span = g.generated(&gens).into_iter().collect();
        }
    }
    gens
}

/// Extends generator images to a map on all of G, or fails if the assignment is inconsistent.
fn extend(g: &FiniteGroup, gens: &[Elem], images: &[Elem]) -> Option<Vec<Elem>> {
    let mut map = vec![usize::MAX; g.order()];
    map[0] = 0;
    let mut frontier = vec![0];
    while let Some(x) = frontier.pop() {
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let fy = g.mul(map[x], t);
            if map[y] == usize::MAX {
                map[y] = fy;
                frontier.push(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}

/// Aut(G) by exhaustive search over images of a generating set.
pub fn automorphism_group(g: &FiniteGroup) -> Result<AutomorphismGroup, GroupError> {
    automorphism_group_bounded(g, DEFAULT_AUT_BOUND)
}

pub fn automorphism_group_bounded(
    g: &FiniteGroup,
    bound: usize,
) -> Result<AutomorphismGroup, GroupError> {
    if g.order() > bound {
        return Err(GroupError::OrderBoundExceeded {
            order: g.order(),
            bound,
        });
    }
    let gens = generating_set(g);
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&s| {
            g.elements()
                .filter(|&t| g.element_order(t) == g.element_order(s))
                .collect()
        })
        .collect();
    let mut found: BTreeSet<Vec<Elem>> = BTreeSet::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        let images: Vec<Elem> = choice
            .iter()
            .enumerate()
            .map(|(i, &k)| candidates[i][k])
            .collect();
        if let Some(map) = extend(g, &gens, &images) {
            let bijective = map.iter().collect::<BTreeSet<_>>().len() == g.order();
            if bijective
                && check_homomorphism(&GroupHomomorphism::from_parts(
                    g.clone(),
                    g.clone(),
                    map.clone(),
                )?)
                .passed
            {
                found.insert(map);
            }
        }
        // odometer over candidate images
        let mut i = 0;
        loop {
            if i == choice.len() {
                return finish(g, found);
            }
            choice[i] += 1;
            if choice[i] < candidates[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn finish(g: &FiniteGroup, found: BTreeSet<Vec<Elem>>) -> Result<AutomorphismGroup, GroupError> {
    let id: Vec<Elem> = g.elements().collect();
    let mut perms = vec![id.clone()];
    perms.extend(found.into_iter().filter(|p| *p != id));
    let index: HashMap<&Vec<Elem>, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let inner: Vec<Vec<Elem>> = g
        .elements()
        .map(|x| g.elements().map(|c| g.conj(x, c)).collect())
        .collect();
    let names = perms
        .iter()
        .enumerate()
        .map(|(k, p)| {
            if k == 0 {
                "id".to_string()
            } else if let Some(x) = inner.iter().position(|q| q == p) {
                format!("inn{}", g.name(x))
            } else {
                format!("aut{k}")
            }
        })
        .collect();
    let table = perms
        .iter()
        .map(|a| {
            perms
                .iter()
                .map(|b| index[&b.iter().map(|&x| a[x]).collect::<Vec<_>>()])
                .collect()
        })
        .collect();
    let group = FiniteGroup::new(names, table)?;
    let embedding = GroupHomomorphism::new(
        g.clone(),
        group.clone(),
        inner.iter().map(|p| index[p]).collect(),
    )?;
    let action = GroupAction::new(group.clone(), g.clone(), perms.clone())?;
    Ok(AutomorphismGroup {
        group,
        perms,
        embedding,
        action,
    })
}
