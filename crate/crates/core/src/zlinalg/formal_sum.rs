use std::collections::BTreeMap;
use std::collections::HashMap;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

/// Finite ℤ-linear combination of generators. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormalSum<G: Ord = usize> {
    terms: BTreeMap<G, BigInt>,
}

impl<G: Ord + Clone> Default for FormalSum<G> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<G: Ord + Clone> FormalSum<G> {
    pub fn zero() -> Self {
        FormalSum { terms: BTreeMap::new() }
    }

    pub fn generator(g: G) -> Self {
        Self::term(g, 1)
    }

    pub fn term(g: G, coeff: impl Into<BigInt>) -> Self {
        let mut s = Self::zero();
        s.add_term(g, coeff.into());
        s
    }

    pub fn add_term(&mut self, g: G, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(g.clone()).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn coeff(&self, g: &G) -> BigInt {
        self.terms.get(g).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&G, &BigInt)> {
        self.terms.iter()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        FormalSum { terms: self.terms.iter().map(|(g, c)| (g.clone(), c * k)).collect() }
    }

    /// Applies a generator-level linear map and sums the results.
    pub fn flat_map<H: Ord + Clone>(&self, mut f: impl FnMut(&G) -> FormalSum<H>) -> FormalSum<H> {
        let mut out = FormalSum::zero();
        for (g, c) in &self.terms {
            out += f(g).scale(c);
        }
        out
    }

    /// Dense coordinates against an indexed basis. Panics on a generator outside the basis.
    pub fn to_dense(&self, basis: &Basis<G>) -> Vec<BigInt>
    where
        G: Hash,
    {
        let mut v = vec![BigInt::zero(); basis.len()];
        for (g, c) in &self.terms {
            let i = basis.index_of(g).expect("generator outside the declared basis");
            v[i] = c.clone();
        }
        v
    }

    pub fn from_dense(v: &[BigInt], basis: &Basis<G>) -> Self
    where
        G: Hash,
    {
        let mut s = Self::zero();
        for (i, c) in v.iter().enumerate() {
            s.add_term(basis.generator(i).clone(), c.clone());
        }
        s
    }
}

impl FormalSum<usize> {
    pub fn from_vec(v: &[BigInt]) -> Self {
        let mut s = Self::zero();
        for (i, c) in v.iter().enumerate() {
            s.add_term(i, c.clone());
        }
        s
    }

    pub fn from_i64s(v: &[i64]) -> Self {
        let big: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        Self::from_vec(&big)
    }

    pub fn to_vec(&self, len: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); len];
        for (&i, c) in &self.terms {
            assert!(i < len, "coordinate {i} outside dimension {len}");
            v[i] = c.clone();
        }
        v
    }

    pub fn support_bound(&self) -> usize {
        self.terms.keys().next_back().map_or(0, |&i| i + 1)
    }
}

impl<G: Ord + Clone> AddAssign for FormalSum<G> {
    fn add_assign(&mut self, rhs: Self) {
        for (g, c) in rhs.terms {
            self.add_term(g, c);
        }
    }
}

impl<G: Ord + Clone> Add for FormalSum<G> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl<G: Ord + Clone> Neg for FormalSum<G> {
    type Output = Self;
    fn neg(self) -> Self {
        FormalSum { terms: self.terms.into_iter().map(|(g, c)| (g, -c)).collect() }
    }
}

impl<G: Ord + Clone> Sub for FormalSum<G> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

/// An ordered list of generators with reverse lookup.
#[derive(Clone, Debug)]
pub struct Basis<G> {
    gens: Vec<G>,
    index: HashMap<G, usize>,
}

impl<G: Clone + Eq + Hash> Basis<G> {
    pub fn new(gens: Vec<G>) -> Self {
        let index = gens.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
        Basis { gens, index }
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn index_of(&self, g: &G) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn generator(&self, i: usize) -> &G {
        &self.gens[i]
    }

    pub fn generators(&self) -> &[G] {
        &self.gens
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let a = FormalSum::term("x", 3) + FormalSum::term("y", 1);
        let b = FormalSum::term("x", 3);
        let d = a - b;
        assert_eq!(d, FormalSum::generator("y"));
        assert_eq!(d.len(), 1);
        assert!((d.clone() - d).is_zero());
    }

    #[test]
    fn dense_round_trip() {
        let basis = Basis::new(vec!['a', 'b', 'c']);
        let s = FormalSum::term('c', -2) + FormalSum::term('a', 5);
        let v = s.to_dense(&basis);
        assert_eq!(v, vec![BigInt::from(5), BigInt::zero(), BigInt::from(-2)]);
        assert_eq!(FormalSum::from_dense(&v, &basis), s);
    }
}
