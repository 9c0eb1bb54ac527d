use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::group::FinAbGroup;
use crate::zlinalg::{smith_form, IntMatrix};

/// `G ≅ ℤᵐ / N` for the greedy generators of `G`, with a test for membership
/// in `N` that works modulo the exponent `e`: `y ∈ N` iff `Π·y ≡ 0 (mod e)`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub generators: Vec<usize>,
    /// One coordinate vector per element, with entries below the generator orders.
    pub coords: Vec<Vec<i64>>,
    /// Generators of the relation lattice `N`.
    pub relations: Vec<Vec<i64>>,
    pub exponent: u64,
    /// Rows of `Π`, entries in `[0, e)`; one row per nontrivial invariant factor.
    pub pi: Vec<Vec<i64>>,
}

impl Presentation {
    pub fn new(group: &FinAbGroup) -> Self {
        let generators = group.greedy_generators();
        let m = generators.len();
        let orders: Vec<usize> = generators.iter().map(|&g| group.element_order(g)).collect();
        let mut coords: Vec<Option<Vec<i64>>> = vec![None; group.order()];
        let mut relations: Vec<Vec<i64>> = (0..m)
            .map(|i| {
                let mut r = vec![0; m];
                r[i] = orders[i] as i64;
                r
            })
            .collect();
        // walk the box ∏ [0, oᵢ) in lexicographic order
        let mut c = vec![0usize; m];
        loop {
            let v = group.sum(c.iter().zip(&generators).map(|(&k, &g)| group.times(k as i64, g)));
            let cv: Vec<i64> = c.iter().map(|&k| k as i64).collect();
            if v == 0 && c.iter().any(|&k| k != 0) {
                relations.push(cv.clone());
            }
            if coords[v].is_none() {
                coords[v] = Some(cv);
            }
            let mut i = m;
            loop {
                if i == 0 {
                    let coords = coords.into_iter().map(|c| c.expect("generators span the group")).collect();
                    let exponent = group.exponent() as u64;
                    let pi = projection(&relations, m, exponent);
                    return Presentation { generators, coords, relations, exponent, pi };
                }
                i -= 1;
                c[i] += 1;
                if c[i] < orders[i] {
                    break;
                }
                c[i] = 0;
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// `Π·y mod e`.
    pub fn project(&self, y: &[i64]) -> Vec<i64> {
        let e = self.exponent as i64;
        self.pi.iter().map(|row| row.iter().zip(y).map(|(&p, &v)| (p * v.rem_euclid(e)) % e).sum::<i64>() % e).collect()
    }

    pub fn is_relation(&self, y: &[i64]) -> bool {
        self.project(y).iter().all(|&v| v == 0)
    }

    /// The element `Σ yᵢ gᵢ`.
    pub fn element(&self, group: &FinAbGroup, y: &[i64]) -> usize {
        group.sum(y.iter().zip(&self.generators).map(|(&k, &g)| group.times(k, g)))
    }
}

fn projection(relations: &[Vec<i64>], m: usize, e: u64) -> Vec<Vec<i64>> {
    if m == 0 {
        return Vec::new();
    }
    let nf = smith_form(&IntMatrix::from_rows(relations));
    let e_big = BigInt::from(e);
    let mut out = Vec::new();
    for i in 0..m {
        let d = nf.d.get(i, i).clone();
        assert!(d > BigInt::from(0), "relation lattice has full rank");
        if d == BigInt::from(1) {
            continue;
        }
        let scale = &e_big / &d;
        let row = (0..m)
            .map(|k| {
                let v: BigInt = (&scale * nf.v.get(k, i)) % &e_big;
                let v = if v < BigInt::from(0) { v + &e_big } else { v };
                v.to_i64().expect("entry below the exponent")
            })
            .collect();
        out.push(row);
    }
    out
}
