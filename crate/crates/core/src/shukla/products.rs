use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use serde::Serialize;

use super::resolution::{bracket, Chain, GeneratorId, Level, ResolutionData};
use crate::error::{Error, Result};
use crate::zlinalg::FormalSum;

fn degree(c: &Chain) -> Option<usize> {
    c.iter().next().map(|(g, _)| g.level.degree())
}

/// `[x][x₁,…,x_n] = [xx₁,…,xx_n]`, extended linearly; zero brackets vanish.
pub fn product_u0(res: &ResolutionData, x: usize, chain: &Chain) -> Chain {
    let r = &res.ring;
    chain.flat_map(|g| {
        let entries: Vec<usize> = g.entries.iter().map(|&e| r.mul(x, e)).collect();
        bracket(g.level, &entries)
    })
}

/// `[x₁,…,x_n][x] = [x₁x,…,x_nx]`.
pub fn chain_times_u0(res: &ResolutionData, chain: &Chain, x: usize) -> Chain {
    let r = &res.ring;
    chain.flat_map(|g| {
        let entries: Vec<usize> = g.entries.iter().map(|&e| r.mul(e, x)).collect();
        bracket(g.level, &entries)
    })
}

/// Products `U_i × U_j → U_{i+j}` for `i + j ≤ 3`, defined on generators by
/// `ab = s[(da)b + (−1)^i a(db)]` with `s` the Hermite lift, and grounded in the
/// entrywise scalar rule when one factor has degree 0.
pub struct Products<'a> {
    pub res: &'a ResolutionData,
    memo: Mutex<HashMap<(GeneratorId, GeneratorId), Chain>>,
}

impl<'a> Products<'a> {
    pub fn new(res: &'a ResolutionData) -> Self {
        Products { res, memo: Mutex::new(HashMap::new()) }
    }

    pub fn generators(&self, a: &GeneratorId, b: &GeneratorId) -> Result<Chain> {
        let (i, j) = (a.level.degree(), b.level.degree());
        if i + j > 3 {
            return Err(Error::Unsupported(format!("product of degrees {i} and {j} lands above U3")));
        }
        if i == 0 {
            return Ok(product_u0(self.res, a.entries[0], &Chain::generator(b.clone())));
        }
        if j == 0 {
            return Ok(chain_times_u0(self.res, &Chain::generator(a.clone()), b.entries[0]));
        }
        let key = (a.clone(), b.clone());
        if let Some(c) = self.memo.lock().expect("memo lock").get(&key) {
            return Ok(c.clone());
        }
        let rhs = self.leibniz_rhs(&Chain::generator(a.clone()), i, &Chain::generator(b.clone()), j)?;
        let p = self.res.lift(i + j, &rhs).ok_or_else(|| {
            Error::Precondition(format!("Leibniz right side for {a}·{b} is not a boundary; the complex is not exact"))
        })?;
        self.memo.lock().expect("memo lock").insert(key, p.clone());
        Ok(p)
    }

    /// `(da)b + (−1)^i a(db)` for homogeneous `a` of degree `i` and `b` of degree `j`.
    pub fn leibniz_rhs(&self, a: &Chain, i: usize, b: &Chain, j: usize) -> Result<Chain> {
        let left = if i == 0 { Chain::zero() } else { self.chains(&self.res.boundary(a), b)? };
        let right = if j == 0 { Chain::zero() } else { self.chains(a, &self.res.boundary(b))? };
        let sign = if i.is_multiple_of(2) { 1 } else { -1 };
        Ok(left + right.scale(&BigInt::from(sign)))
    }

    /// Bilinear extension of the generator product.
    pub fn chains(&self, a: &Chain, b: &Chain) -> Result<Chain> {
        let mut out = Chain::zero();
        for (ga, ca) in a.iter() {
            for (gb, cb) in b.iter() {
                out += self.generators(ga, gb)?.scale(&(ca * cb));
            }
        }
        Ok(out)
    }

    /// Checks `d(ab) = (da)b + (−1)^i a(db)` for two homogeneous chains.
    pub fn leibniz_holds(&self, a: &Chain, b: &Chain) -> Result<bool> {
        let (Some(i), Some(j)) = (degree(a), degree(b)) else {
            return Ok(true);
        };
        let ab = self.chains(a, b)?;
        if i + j == 0 {
            return Ok(true);
        }
        Ok(self.res.boundary(&ab) == self.leibniz_rhs(a, i, b, j)?)
    }
}

pub fn product_u1_u1(products: &Products<'_>, x: usize, y: usize, z: usize, t: usize) -> Result<Chain> {
    products.chains(&bracket(Level::U1, &[x, y]), &bracket(Level::U1, &[z, t]))
}

pub fn product_general(products: &Products<'_>, a: &Chain, b: &Chain) -> Result<Chain> {
    products.chains(a, b)
}

/// How a printed candidate for `[x,y][z,t]` relates to the Leibniz right side under `d₂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Agreement {
    Match,
    NegatedMatch,
    Mismatch,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComparisonRow {
    pub args: [usize; 4],
    pub printed: Agreement,
    pub relation_pattern: Agreement,
}

/// The degree-2 part of the printed product formula (its lone degree-0 term
/// cannot live in `U₂` and is dropped).
pub fn printed_candidate(res: &ResolutionData, x: usize, y: usize, z: usize, t: usize) -> Chain {
    let r = &res.ring;
    let (xz, yz, xt, yt) = (r.mul(x, z), r.mul(y, z), r.mul(x, t), r.mul(y, t));
    bracket(Level::U2Triple, &[xz, yz, xt]) + bracket(Level::U2Triple, &[r.add(xz, xt), yz, yt])
        - bracket(Level::U2Triple, &[xz, xt, yz])
        + bracket(Level::U2Pair, &[xt, yz])
}

/// The chain whose coefficients follow the right side of the distributivity
/// relation between `ρ`, `λ`, `ξ` and `η`.
pub fn relation_candidate(res: &ResolutionData, x: usize, y: usize, z: usize, t: usize) -> Chain {
    let r = &res.ring;
    let (xz, yz, xt, yt) = (r.mul(x, z), r.mul(y, z), r.mul(x, t), r.mul(y, t));
    bracket(Level::U2Triple, &[xz, xt, yz]) - bracket(Level::U2Triple, &[r.add(xz, xt), yz, yt])
        - bracket(Level::U2Pair, &[xt, yz])
        + bracket(Level::U2Triple, &[r.add(xz, yz), xt, yt])
        - bracket(Level::U2Triple, &[xz, yz, xt])
}

fn agreement(res: &ResolutionData, candidate: &Chain, rhs: &Chain) -> Agreement {
    let d = res.boundary(candidate);
    if &d == rhs {
        Agreement::Match
    } else if d == -rhs.clone() {
        Agreement::NegatedMatch
    } else {
        Agreement::Mismatch
    }
}

/// Per-tuple comparison of both printed candidates against the lifted product.
pub fn comparison_report(products: &Products<'_>) -> Result<Vec<ComparisonRow>> {
    let res = products.res;
    let n = res.ring.order();
    let mut rows = Vec::new();
    for x in 1..n {
        for y in 1..n {
            for z in 1..n {
                for t in 1..n {
                    let rhs = products.leibniz_rhs(&bracket(Level::U1, &[x, y]), 1, &bracket(Level::U1, &[z, t]), 1)?;
                    rows.push(ComparisonRow {
                        args: [x, y, z, t],
                        printed: agreement(res, &printed_candidate(res, x, y, z, t), &rhs),
                        relation_pattern: agreement(res, &relation_candidate(res, x, y, z, t), &rhs),
                    });
                }
            }
        }
    }
    Ok(rows)
}

/// Coordinates of a chain over the basis of its degree.
pub fn dense(res: &ResolutionData, degree: usize, c: &Chain) -> Vec<BigInt> {
    c.to_dense(&res.bases[degree])
}

pub fn chain_from_dense(res: &ResolutionData, degree: usize, v: &[BigInt]) -> Chain {
    FormalSum::from_dense(v, &res.bases[degree])
}
