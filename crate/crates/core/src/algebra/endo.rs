use std::collections::HashMap;

use super::group::{FinAbGroup, Subgroup};
use super::ring::FinRing;
use crate::error::{Error, Result};
use crate::guard::Guards;

/// Additive self-map of a finite abelian group, stored as its value table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdditiveEndo {
    pub map: Vec<usize>,
}

impl AdditiveEndo {
    pub fn zero(order: usize) -> Self {
        AdditiveEndo { map: vec![0; order] }
    }

    pub fn identity(order: usize) -> Self {
        AdditiveEndo { map: (0..order).collect() }
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn is_additive(&self, group: &FinAbGroup) -> bool {
        self.map.len() == group.order()
            && self.map[0] == 0
            && group
                .elements()
                .all(|a| group.elements().all(|b| self.map[group.add(a, b)] == group.add(self.map[a], self.map[b])))
    }

    pub fn add(&self, other: &Self, group: &FinAbGroup) -> Self {
        AdditiveEndo { map: self.map.iter().zip(&other.map).map(|(&a, &b)| group.add(a, b)).collect() }
    }

    pub fn sub(&self, other: &Self, group: &FinAbGroup) -> Self {
        AdditiveEndo { map: self.map.iter().zip(&other.map).map(|(&a, &b)| group.sub(a, b)).collect() }
    }

    pub fn neg(&self, group: &FinAbGroup) -> Self {
        AdditiveEndo { map: self.map.iter().map(|&a| group.neg(a)).collect() }
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        AdditiveEndo { map: other.map.iter().map(|&a| self.map[a]).collect() }
    }
}

/// A finite additive subgroup of `End_ℤ(A)` closed under composition.
/// `witness[i]`, when present, is the least ring element inducing `elements[i]`.
#[derive(Clone, Debug)]
pub struct EndoSubring {
    pub group: FinAbGroup,
    pub elements: Vec<AdditiveEndo>,
    pub witness: Option<Vec<usize>>,
    index: HashMap<AdditiveEndo, usize>,
}

impl EndoSubring {
    pub fn new(group: FinAbGroup, elements: Vec<AdditiveEndo>, witness: Option<Vec<usize>>) -> Self {
        let index = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        EndoSubring { group, elements, witness, index }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, e: &AdditiveEndo) -> bool {
        self.index.contains_key(e)
    }

    pub fn index_of(&self, e: &AdditiveEndo) -> Option<usize> {
        self.index.get(e).copied()
    }

    /// Closure under `+`, `−`, `∘` and presence of the zero map, checked exhaustively.
    pub fn is_closed(&self) -> bool {
        let g = &self.group;
        self.contains(&AdditiveEndo::zero(g.order()))
            && self.elements.iter().all(|a| {
                self.contains(&a.neg(g))
                    && self.elements.iter().all(|b| self.contains(&a.add(b, g)) && self.contains(&a.compose(b)))
            })
    }
}

/// All of `End_ℤ(A)`, sorted by value table. Refuses groups above the guard.
pub fn additive_endos(group: &FinAbGroup, guards: &Guards) -> Result<EndoSubring> {
    guards.check_group("End_Z(A) enumeration", group.order())?;
    let gens = group.greedy_generators();
    let n = group.order();
    let mut found = Vec::new();
    let mut images = vec![0usize; gens.len()];
    loop {
        if let Some(e) = extend_from_generators(group, &gens, &images) {
            found.push(e);
        }
        // odometer over generator images
        let mut i = 0;
        loop {
            if i == images.len() {
                found.sort();
                found.dedup();
                return Ok(EndoSubring::new(group.clone(), found, None));
            }
            images[i] += 1;
            if images[i] < n {
                break;
            }
            images[i] = 0;
            i += 1;
        }
    }
}

fn extend_from_generators(group: &FinAbGroup, gens: &[usize], images: &[usize]) -> Option<AdditiveEndo> {
    let n = group.order();
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    let mut frontier = vec![0];
    while let Some(a) = frontier.pop() {
        for (&g, &img) in gens.iter().zip(images) {
            let b = group.add(a, g);
            let v = group.add(map[a], img);
            if map[b] == usize::MAX {
                map[b] = v;
                frontier.push(b);
            } else if map[b] != v {
                return None;
            }
        }
    }
    let e = AdditiveEndo { map };
    e.is_additive(group).then_some(e)
}

/// `l_a(b) = ab`.
pub fn left_mult(ring: &FinRing, a: usize) -> AdditiveEndo {
    AdditiveEndo { map: ring.elements().map(|b| ring.mul(a, b)).collect() }
}

/// `r_a(b) = ba`.
pub fn right_mult(ring: &FinRing, a: usize) -> AdditiveEndo {
    AdditiveEndo { map: ring.elements().map(|b| ring.mul(b, a)).collect() }
}

fn mults(ring: &FinRing, f: impl Fn(&FinRing, usize) -> AdditiveEndo) -> EndoSubring {
    let mut elements = Vec::new();
    let mut witness = Vec::new();
    let mut seen = HashMap::new();
    for a in ring.elements() {
        let e = f(ring, a);
        if !seen.contains_key(&e) {
            seen.insert(e.clone(), elements.len());
            elements.push(e);
            witness.push(a);
        }
    }
    EndoSubring::new(ring.group().clone(), elements, Some(witness))
}

/// `L(A) = {l_a}` with the least witnessing element for each map.
pub fn left_mults(ring: &FinRing) -> EndoSubring {
    mults(ring, left_mult)
}

/// `R(A) = {r_a}` with the least witnessing element for each map.
pub fn right_mults(ring: &FinRing) -> EndoSubring {
    mults(ring, right_mult)
}

/// Elements annihilated on both sides by all of `A`.
pub fn bicenter_elements(ring: &FinRing) -> Vec<usize> {
    ring.elements()
        .filter(|&c| ring.elements().all(|a| ring.mul(c, a) == 0 && ring.mul(a, c) == 0))
        .collect()
}

/// `K_A` as a subgroup of `A`.
pub fn bicenter(ring: &FinRing) -> Subgroup {
    Subgroup::new(ring.group(), &bicenter_elements(ring)).expect("the bicenter is an additive subgroup")
}

/// Additive cosets of `sub` in `ambient`.
#[derive(Clone, Debug)]
pub struct CosetSpace {
    pub representatives: Vec<AdditiveEndo>,
    /// For each ambient element (in ambient order), the index of its coset.
    pub coset_of: Vec<usize>,
}

impl CosetSpace {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }
}

pub fn coset_space(ambient: &EndoSubring, sub: &EndoSubring) -> Result<CosetSpace> {
    if let Some(bad) = sub.elements.iter().find(|e| !ambient.contains(e)) {
        return Err(Error::Precondition(format!("subgroup element {:?} is not in the ambient ring", bad.map)));
    }
    let g = &ambient.group;
    let mut coset_of = vec![usize::MAX; ambient.len()];
    let mut representatives = Vec::new();
    for (i, e) in ambient.elements.iter().enumerate() {
        if coset_of[i] != usize::MAX {
            continue;
        }
        let c = representatives.len();
        representatives.push(e.clone());
        for s in &sub.elements {
            let j = ambient.index_of(&e.add(s, g)).expect("ambient closed under addition");
            coset_of[j] = c;
        }
    }
    Ok(CosetSpace { representatives, coset_of })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog;

    #[test]
    fn end_counts() {
        let g = Guards::default();
        assert_eq!(additive_endos(&FinAbGroup::cyclic(4), &g).unwrap().len(), 4);
        assert_eq!(additive_endos(&catalog::klein(), &g).unwrap().len(), 16);
        assert_eq!(additive_endos(&FinAbGroup::trivial(), &g).unwrap().len(), 1);
        assert!(matches!(additive_endos(&FinAbGroup::cyclic(9), &g), Err(Error::Guard { .. })));
    }

    #[test]
    fn twisted_z4_multiplications() {
        let a = catalog::scaled_zmod(4, 2);
        let l = left_mults(&a);
        assert_eq!(l.len(), 2);
        assert_eq!(l.witness.as_ref().unwrap(), &vec![0, 1]);
        assert_eq!(bicenter_elements(&a), vec![0, 2]);
        let end = additive_endos(a.group(), &Guards::default()).unwrap();
        assert_eq!(coset_space(&end, &l).unwrap().len(), 2);
    }
}
