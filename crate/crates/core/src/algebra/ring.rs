use std::collections::HashMap;
use std::hash::Hash;

use super::group::FinAbGroup;
use crate::error::{Error, Result};
use crate::report::Report;

/// Finite ring given by tables. `one` is present only for rings with identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinRing {
    name: String,
    group: FinAbGroup,
    mul: Vec<usize>,
    one: Option<usize>,
}

impl FinRing {
    /// Shape-checked construction; ring laws are reported by [`FinRing::validate`].
    pub fn from_tables(
        name: impl Into<String>,
        add: &[Vec<usize>],
        mul: &[Vec<usize>],
        one: Option<usize>,
    ) -> Result<Self> {
        let group = FinAbGroup::from_table(add)?;
        Self::from_group(name, group, mul, one)
    }

    pub fn from_group(
        name: impl Into<String>,
        group: FinAbGroup,
        mul: &[Vec<usize>],
        one: Option<usize>,
    ) -> Result<Self> {
        let n = group.order();
        super::group::check_rect("mul", mul, n, n, n)?;
        if let Some(o) = one {
            if o >= n {
                return Err(Error::malformed(format!("identity index {o} out of range 0..{n}")));
            }
        }
        Ok(FinRing { name: name.into(), group, mul: mul.iter().flatten().copied().collect(), one })
    }

    /// Builds a ring from explicit elements; `elements[0]` must be the zero.
    pub fn from_fn<T: Clone + Eq + Hash>(
        name: impl Into<String>,
        elements: &[T],
        add: impl Fn(&T, &T) -> T,
        mul: impl Fn(&T, &T) -> T,
        one: Option<T>,
    ) -> Result<Self> {
        let index: HashMap<&T, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let lookup = |v: T| index.get(&v).copied().ok_or_else(|| Error::malformed("operation leaves the element list"));
        let group = FinAbGroup::from_fn(elements, add)?;
        let mul_table = elements
            .iter()
            .map(|a| elements.iter().map(|b| lookup(mul(a, b))).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let one = one.map(lookup).transpose()?;
        Self::from_group(name, group, &mul_table, one)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.group.order()
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.group.add(a, b)
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.group.neg(a)
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.group.sub(a, b)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b]
    }

    pub fn one(&self) -> Option<usize> {
        self.one
    }

    /// The identity, or a precondition error for rings without one.
    pub fn require_one(&self) -> Result<usize> {
        match self.one {
            Some(o) if o != 0 => Ok(o),
            _ => Err(Error::Precondition(format!("ring {} must have an identity 1 ≠ 0", self.name))),
        }
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        self.group.elements()
    }

    pub fn mul_rows(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.order()).map(|r| r.to_vec()).collect()
    }

    pub fn add_rows(&self) -> Vec<Vec<usize>> {
        self.group.table_rows()
    }

    pub fn has_zero_multiplication(&self) -> bool {
        self.mul.iter().all(|&v| v == 0)
    }

    /// Every failed ring law with its witness. An empty report means `self` is an
    /// associative ring, with identity when `one` is set.
    pub fn validate(&self) -> Report {
        let n = self.order();
        let mut r = self.group.validate();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        r.push("multiplication associative", &[a, b, c]);
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        r.push("left distributive", &[a, b, c]);
                    }
                    if self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c)) {
                        r.push("right distributive", &[a, b, c]);
                    }
                }
            }
        }
        if let Some(one) = self.one {
            for a in 0..n {
                if self.mul(one, a) != a || self.mul(a, one) != a {
                    r.push("identity law", &[a]);
                }
            }
            if one == 0 && n > 1 {
                r.push("identity differs from zero", &[one]);
            }
        }
        r
    }

    /// Relabels elements by a permutation `perm[old] = new` with `perm[0] = 0`.
    pub fn relabel(&self, perm: &[usize]) -> Result<FinRing> {
        let n = self.order();
        if perm.len() != n || perm[0] != 0 {
            return Err(Error::malformed("relabelling must fix zero and cover every element"));
        }
        let mut inv = vec![usize::MAX; n];
        for (old, &new) in perm.iter().enumerate() {
            if new >= n || inv[new] != usize::MAX {
                return Err(Error::malformed("relabelling is not a permutation"));
            }
            inv[new] = old;
        }
        let add: Vec<Vec<usize>> =
            (0..n).map(|i| (0..n).map(|j| perm[self.add(inv[i], inv[j])]).collect()).collect();
        let mul: Vec<Vec<usize>> =
            (0..n).map(|i| (0..n).map(|j| perm[self.mul(inv[i], inv[j])]).collect()).collect();
        FinRing::from_tables(self.name.clone(), &add, &mul, self.one.map(|o| perm[o]))
    }

    /// The subring on `members` (closed under `+`, `·`, containing 0), relabelled
    /// in increasing ambient order; returns the ring and the embedding.
    pub fn subring(&self, name: impl Into<String>, members: &[usize]) -> Result<(FinRing, Vec<usize>)> {
        let sub = super::group::Subgroup::new(&self.group, members)?;
        let mul = sub
            .embed
            .iter()
            .map(|&a| {
                sub.embed
                    .iter()
                    .map(|&b| sub.index_of(self.mul(a, b)).ok_or_else(|| Error::malformed("subset not closed under multiplication")))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let ring = FinRing::from_group(name, sub.group.clone(), &mul, None)?;
        Ok((ring, sub.embed))
    }

    /// Checks that `map: self → target` is a ring homomorphism, unital when both
    /// sides have an identity and `unital` is set.
    pub fn is_homomorphism(&self, target: &FinRing, map: &[usize], unital: bool) -> bool {
        if map.len() != self.order() || map.iter().any(|&v| v >= target.order()) {
            return false;
        }
        for a in self.elements() {
            for b in self.elements() {
                if map[self.add(a, b)] != target.add(map[a], map[b]) {
                    return false;
                }
                if map[self.mul(a, b)] != target.mul(map[a], map[b]) {
                    return false;
                }
            }
        }
        if unital {
            if let (Some(o1), Some(o2)) = (self.one, target.one) {
                return map[o1] == o2;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog;

    #[test]
    fn zmod4_is_a_ring() {
        assert!(catalog::zmod(4).validate().is_empty());
    }

    #[test]
    fn wrong_identity_is_witnessed() {
        let r = FinRing::from_tables("bad", &[vec![0, 1], vec![1, 0]], &[vec![0, 0], vec![0, 1]], Some(0)).unwrap();
        let rep = r.validate();
        assert_eq!(rep.first_with_rule("identity law").unwrap().witness, vec![1]);
    }

    #[test]
    fn relabel_round_trip() {
        let r = catalog::zmod(4);
        let s = r.relabel(&[0, 3, 2, 1]).unwrap();
        assert!(s.validate().is_empty());
        assert_eq!(s.one(), Some(3));
        let back = s.relabel(&[0, 3, 2, 1]).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn ideal_as_subring() {
        let r = catalog::zmod(8);
        let (a, embed) = r.subring("2Z/8", &[0, 2, 4, 6]).unwrap();
        assert_eq!(embed, vec![0, 2, 4, 6]);
        assert!(a.validate().is_empty());
        assert_eq!(a.mul(1, 1), 2); // 2·2 = 4
    }
}
