use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::report::Report;

/// Finite abelian group on `0..order` with `0` as the neutral element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinAbGroup {
    order: usize,
    add: Vec<usize>,
    neg: Vec<usize>,
}

fn check_square(name: &str, table: &[Vec<usize>], n: usize) -> Result<()> {
    if table.len() != n {
        return Err(Error::malformed(format!("{name} table has {} rows, expected {n}", table.len())));
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::malformed(format!(
                "{name} table row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        if let Some(&bad) = row.iter().find(|&&v| v >= n) {
            return Err(Error::malformed(format!("{name} table entry {bad} out of range 0..{n}")));
        }
    }
    Ok(())
}

pub(crate) fn check_rect(name: &str, table: &[Vec<usize>], rows: usize, cols: usize, range: usize) -> Result<()> {
    if table.len() != rows {
        return Err(Error::malformed(format!("{name} table has {} rows, expected {rows}", table.len())));
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != cols {
            return Err(Error::malformed(format!(
                "{name} table row {i} has {} entries, expected {cols}",
                row.len()
            )));
        }
        if let Some(&bad) = row.iter().find(|&&v| v >= range) {
            return Err(Error::malformed(format!("{name} table entry {bad} out of range 0..{range}")));
        }
    }
    Ok(())
}

impl FinAbGroup {
    /// Builds a group from its addition table. Only the shape is checked here;
    /// the group laws are reported by [`FinAbGroup::validate`].
    pub fn from_table(add: &[Vec<usize>]) -> Result<Self> {
        let n = add.len();
        if n == 0 {
            return Err(Error::malformed("a group needs at least one element"));
        }
        check_square("add", add, n)?;
        let flat: Vec<usize> = add.iter().flatten().copied().collect();
        let neg = (0..n).map(|a| (0..n).find(|&b| flat[a * n + b] == 0).unwrap_or(0)).collect();
        Ok(FinAbGroup { order: n, add: flat, neg })
    }

    /// Builds a group from an explicit element list (neutral element first).
    pub fn from_fn<T: Clone + Eq + Hash>(elements: &[T], add: impl Fn(&T, &T) -> T) -> Result<Self> {
        let index: HashMap<&T, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let table = elements
            .iter()
            .map(|a| {
                elements
                    .iter()
                    .map(|b| {
                        index
                            .get(&add(a, b))
                            .copied()
                            .ok_or_else(|| Error::malformed("sum leaves the element list"))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_table(&table)
    }

    pub fn trivial() -> Self {
        FinAbGroup { order: 1, add: vec![0], neg: vec![0] }
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let add = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        let neg = (0..n).map(|a| (n - a) % n).collect();
        FinAbGroup { order: n, add, neg }
    }

    /// Direct product; the pair `(a, b)` has index `a * |H| + b`.
    pub fn product(g: &FinAbGroup, h: &FinAbGroup) -> Self {
        let (m, k) = (g.order, h.order);
        let n = m * k;
        let mut add = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                add[i * n + j] = g.add(i / k, j / k) * k + h.add(i % k, j % k);
            }
        }
        let neg = (0..n).map(|i| g.neg(i / k) * k + h.neg(i % k)).collect();
        FinAbGroup { order: n, add, neg }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg[b])
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn sum(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(0, |acc, x| self.add(acc, x))
    }

    /// `k · a` for any integer `k`.
    pub fn times(&self, k: i64, a: usize) -> usize {
        let base = if k < 0 { self.neg(a) } else { a };
        let mut acc = 0;
        for _ in 0..k.unsigned_abs() {
            acc = self.add(acc, base);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut acc = a;
        while acc != 0 {
            acc = self.add(acc, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        fn gcd(a: usize, b: usize) -> usize {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.elements().map(|a| self.element_order(a)).fold(1, |l, o| l / gcd(l, o) * o)
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.add.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    /// Generators chosen greedily: each is the least element outside the span of
    /// the previous ones.
    pub fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![false; self.order];
        span[0] = true;
        let mut members = vec![0];
        for a in self.elements() {
            if span[a] {
                continue;
            }
            gens.push(a);
            // close the span under adding the new generator
            let mut frontier = members.clone();
            while let Some(b) = frontier.pop() {
                let c = self.add(b, a);
                if !span[c] {
                    span[c] = true;
                    members.push(c);
                    frontier.push(c);
                }
            }
        }
        gens
    }

    /// Reports every failed abelian-group law with its witness.
    pub fn validate(&self) -> Report {
        let n = self.order;
        let mut r = Report::new();
        for a in 0..n {
            if self.add(0, a) != a || self.add(a, 0) != a {
                r.push("zero is neutral", &[a]);
            }
            if !(0..n).any(|b| self.add(a, b) == 0) {
                r.push("inverse exists", &[a]);
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    r.push("addition commutative", &[a, b]);
                }
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        r.push("addition associative", &[a, b, c]);
                    }
                }
            }
        }
        r
    }
}

/// A subgroup, relabelled as a group in its own right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    pub group: FinAbGroup,
    /// `embed[i]` is the ambient element carrying subgroup index `i`; `embed[0] = 0`.
    pub embed: Vec<usize>,
    index: Vec<Option<usize>>,
}

impl Subgroup {
    /// `members` must be closed under addition and contain 0.
    pub fn new(ambient: &FinAbGroup, members: &[usize]) -> Result<Self> {
        let mut embed: Vec<usize> = members.to_vec();
        embed.sort_unstable();
        embed.dedup();
        if embed.first() != Some(&0) {
            return Err(Error::malformed("subgroup must contain zero"));
        }
        let mut index = vec![None; ambient.order()];
        for (i, &a) in embed.iter().enumerate() {
            index[a] = Some(i);
        }
        let table = embed
            .iter()
            .map(|&a| {
                embed
                    .iter()
                    .map(|&b| index[ambient.add(a, b)].ok_or_else(|| Error::malformed("subset not closed under addition")))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Subgroup { group: FinAbGroup::from_table(&table)?, embed, index })
    }

    pub fn contains(&self, a: usize) -> bool {
        self.index[a].is_some()
    }

    pub fn index_of(&self, a: usize) -> Option<usize> {
        self.index[a]
    }

    pub fn order(&self) -> usize {
        self.embed.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_and_product() {
        let z4 = FinAbGroup::cyclic(4);
        assert!(z4.validate().is_empty());
        assert_eq!(z4.exponent(), 4);
        let v = FinAbGroup::product(&FinAbGroup::cyclic(2), &FinAbGroup::cyclic(2));
        assert!(v.validate().is_empty());
        assert_eq!(v.exponent(), 2);
        assert_eq!(v.greedy_generators(), vec![1, 2]);
        assert_eq!(z4.greedy_generators(), vec![1]);
    }

    #[test]
    fn broken_table_is_reported() {
        let g = FinAbGroup::from_table(&[vec![0, 1], vec![1, 1]]).unwrap();
        let r = g.validate();
        assert!(r.has_rule("inverse exists"));
        assert_eq!(r.first_with_rule("inverse exists").unwrap().witness, vec![1]);
    }

    #[test]
    fn shape_errors_are_structural() {
        assert!(matches!(FinAbGroup::from_table(&[vec![0, 1], vec![1]]), Err(Error::Malformed(_))));
        assert!(matches!(FinAbGroup::from_table(&[vec![0, 2], vec![1, 0]]), Err(Error::Malformed(_))));
    }

    #[test]
    fn subgroup_relabel() {
        let z4 = FinAbGroup::cyclic(4);
        let s = Subgroup::new(&z4, &[2, 0]).unwrap();
        assert_eq!(s.embed, vec![0, 2]);
        assert_eq!(s.group.add(1, 1), 0);
        assert!(Subgroup::new(&z4, &[0, 1]).is_err());
    }
}
