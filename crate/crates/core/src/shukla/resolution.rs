use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{FinRing, Presentation};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::zlinalg::{hermite_form, kernel_basis, subgroup_equal, Basis, FormalSum, IntMatrix, NormalForm};

/// Largest ring for which the resolution is built; `U₃` has `(|R|−1)⁴` quadruples.
pub const MAX_RESOLUTION_RING: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Level {
    U0,
    U1,
    U2Triple,
    U2Pair,
    U3Quad,
    U3Triple,
    U3Pair,
    U3Single,
}

impl Level {
    pub fn degree(self) -> usize {
        match self {
            Level::U0 => 0,
            Level::U1 => 1,
            Level::U2Triple | Level::U2Pair => 2,
            _ => 3,
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Level::U0 | Level::U3Single => 1,
            Level::U1 | Level::U2Pair | Level::U3Pair => 2,
            Level::U2Triple | Level::U3Triple => 3,
            Level::U3Quad => 4,
        }
    }

    /// Levels of a degree, in basis order.
    pub fn of_degree(d: usize) -> &'static [Level] {
        match d {
            0 => &[Level::U0],
            1 => &[Level::U1],
            2 => &[Level::U2Triple, Level::U2Pair],
            3 => &[Level::U3Quad, Level::U3Triple, Level::U3Pair, Level::U3Single],
            _ => &[],
        }
    }
}

/// A bracket `[x₁,…,x_k]` with nonzero entries.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GeneratorId {
    pub level: Level,
    pub entries: Vec<usize>,
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.level {
            Level::U0 | Level::U1 => "",
            Level::U2Triple | Level::U3Triple => "T",
            Level::U2Pair | Level::U3Pair => "P",
            Level::U3Quad => "Q",
            Level::U3Single => "S",
        };
        let body: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "{tag}[{}]", body.join(","))
    }
}

pub type Chain = FormalSum<GeneratorId>;

/// `[x₁,…,x_k]` at `level`, or the zero chain if some entry is 0.
pub fn bracket(level: Level, entries: &[usize]) -> Chain {
    debug_assert_eq!(entries.len(), level.arity());
    if entries.contains(&0) {
        Chain::zero()
    } else {
        Chain::generator(GeneratorId { level, entries: entries.to_vec() })
    }
}

fn signed(terms: &[(i64, Chain)]) -> Chain {
    let mut out = Chain::zero();
    for (s, c) in terms {
        out += c.scale(&BigInt::from(*s));
    }
    out
}

/// The differential on one generator.
pub fn boundary(r: &FinRing, g: &GeneratorId) -> Chain {
    let e = &g.entries;
    let add = |a: usize, b: usize| r.add(a, b);
    use Level::*;
    match g.level {
        U0 => Chain::zero(),
        U1 => {
            let (x, y) = (e[0], e[1]);
            signed(&[(1, bracket(U0, &[y])), (-1, bracket(U0, &[add(x, y)])), (1, bracket(U0, &[x]))])
        }
        U2Triple => {
            let (x, y, z) = (e[0], e[1], e[2]);
            signed(&[
                (1, bracket(U1, &[y, z])),
                (-1, bracket(U1, &[add(x, y), z])),
                (1, bracket(U1, &[x, add(y, z)])),
                (-1, bracket(U1, &[x, y])),
            ])
        }
        U2Pair => signed(&[(1, bracket(U1, &[e[0], e[1]])), (-1, bracket(U1, &[e[1], e[0]]))]),
        U3Quad => {
            let (x, y, z, t) = (e[0], e[1], e[2], e[3]);
            signed(&[
                (1, bracket(U2Triple, &[y, z, t])),
                (-1, bracket(U2Triple, &[add(x, y), z, t])),
                (1, bracket(U2Triple, &[x, add(y, z), t])),
                (-1, bracket(U2Triple, &[x, y, add(z, t)])),
                (1, bracket(U2Triple, &[x, y, z])),
            ])
        }
        U3Triple => {
            let (x, y, z) = (e[0], e[1], e[2]);
            signed(&[
                (1, bracket(U2Triple, &[x, y, z])),
                (-1, bracket(U2Triple, &[x, z, y])),
                (1, bracket(U2Triple, &[z, x, y])),
                (-1, bracket(U2Pair, &[y, z])),
                (1, bracket(U2Pair, &[add(x, y), z])),
                (-1, bracket(U2Pair, &[x, z])),
            ])
        }
        U3Pair => signed(&[(1, bracket(U2Pair, &[e[0], e[1]])), (1, bracket(U2Pair, &[e[1], e[0]]))]),
        U3Single => bracket(U2Pair, &[e[0], e[0]]),
    }
}

pub fn boundary_chain(r: &FinRing, c: &Chain) -> Chain {
    c.flat_map(|g| boundary(r, g))
}

fn tuples_nonzero(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (1..n).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}

/// The free resolution `0 → U₄ → U₃ → U₂ → U₁ → U₀ → R → 0` in low degrees.
#[derive(Debug)]
pub struct ResolutionData {
    pub ring: FinRing,
    /// Bases of `U₀ … U₃`.
    pub bases: Vec<Basis<GeneratorId>>,
    /// `d₁, d₂, d₃` as `|U_{i−1}| × |U_i|` matrices acting on columns.
    pub d: Vec<IntMatrix>,
    /// `U₄ = ker d₃`, as coordinate vectors over the `U₃` basis.
    pub u4_basis: Vec<FormalSum>,
    /// `ε[x] = x` for each `U₀` generator.
    pub epsilon: Vec<usize>,
    lifts: [OnceLock<NormalForm>; 3],
}

pub fn build_resolution(r: &FinRing) -> Result<ResolutionData> {
    r.require_one()?;
    let n = r.order();
    if n > MAX_RESOLUTION_RING {
        return Err(Error::Guard {
            what: "resolution ring order".into(),
            needed: format!("order {n}"),
            bound: MAX_RESOLUTION_RING as u64,
        });
    }
    let bases: Vec<Basis<GeneratorId>> = (0..=3)
        .map(|d| {
            Basis::new(
                Level::of_degree(d)
                    .iter()
                    .flat_map(|&level| {
                        tuples_nonzero(n, level.arity()).into_iter().map(move |entries| GeneratorId { level, entries })
                    })
                    .collect(),
            )
        })
        .collect();
    let d: Vec<IntMatrix> = (1..=3)
        .map(|k| {
            let columns: Vec<Vec<BigInt>> =
                bases[k].generators().iter().map(|g| boundary(r, g).to_dense(&bases[k - 1])).collect();
            IntMatrix::from_columns(&columns, bases[k - 1].len())
        })
        .collect();
    let u4_basis = kernel_basis(&d[2]);
    let epsilon = bases[0].generators().iter().map(|g| g.entries[0]).collect();
    Ok(ResolutionData { ring: r.clone(), bases, d, u4_basis, epsilon, lifts: Default::default() })
}

impl ResolutionData {
    /// Hermite form of `d_kᵀ`, computed on first use.
    fn lift_form(&self, k: usize) -> &NormalForm {
        self.lifts[k - 1].get_or_init(|| hermite_form(&self.d[k - 1].transpose()))
    }

    pub fn boundary(&self, c: &Chain) -> Chain {
        boundary_chain(&self.ring, c)
    }

    /// The deterministic Hermite solution `x` of `d_k x = c`, if `c` is a boundary.
    pub fn lift(&self, k: usize, c: &Chain) -> Option<Chain> {
        let form = self.lift_form(k);
        let x = crate::zlinalg::solve_with_hermite(form, &c.to_dense(&self.bases[k - 1]))?;
        Some(FormalSum::from_dense(&x.to_vec(self.bases[k].len()), &self.bases[k]))
    }

    /// `d₁d₂ = 0`, `d₂d₃ = 0`, `d₃` kills `U₄`, and `ε d₁ = 0`.
    pub fn check_complex(&self) -> Report {
        let mut rep = Report::new();
        for k in 0..2 {
            let prod = self.d[k].mul(&self.d[k + 1]);
            if !prod.is_zero() {
                let col = (0..prod.cols()).find(|&j| (0..prod.rows()).any(|i| !prod.get(i, j).is_zero())).unwrap_or(0);
                rep.push_detail(format!("d{}d{} = 0", k + 1, k + 2), &[col], self.bases[k + 2].generator(col).to_string());
            }
        }
        for (i, v) in self.u4_basis.iter().enumerate() {
            if self.d[2].mul_vec(&v.to_vec(self.bases[3].len())).iter().any(|x| !x.is_zero()) {
                rep.push("d3 on U4 = 0", &[i]);
            }
        }
        let r = &self.ring;
        for (j, g) in self.bases[1].generators().iter().enumerate() {
            let img = boundary(r, g);
            let mut total = 0usize;
            for (h, c) in img.iter() {
                total = r.add(total, r.group().times(num_traits::ToPrimitive::to_i64(c).unwrap(), h.entries[0]));
            }
            if total != 0 {
                rep.push_detail("ε d1 = 0", &[j], g.to_string());
            }
        }
        rep
    }

    /// Generators of `ker ε ⊆ U₀`, read from the kernel of `[E | N]` where `E`
    /// sends `[x]` to coordinates of `x` and `N` generates the relations of `(R,+)`.
    pub fn epsilon_kernel(&self) -> Vec<FormalSum> {
        let p = Presentation::new(self.ring.group());
        let m = p.rank();
        let u0 = self.bases[0].len();
        let mut columns: Vec<Vec<BigInt>> =
            self.epsilon.iter().map(|&x| p.coords[x].iter().map(|&c| BigInt::from(c)).collect()).collect();
        columns.extend(p.relations.iter().map(|r| r.iter().map(|&c| BigInt::from(c)).collect()));
        let mat = IntMatrix::from_columns(&columns, m);
        kernel_basis(&mat).into_iter().map(|k| FormalSum::from_vec(&k.to_vec(u0 + p.relations.len())[..u0])).collect()
    }

    pub fn check_exactness(&self) -> Vec<Junction> {
        let image = |k: usize| -> Vec<FormalSum> {
            (0..self.d[k - 1].cols()).map(|j| FormalSum::from_vec(&self.d[k - 1].column(j))).collect()
        };
        let mut out = vec![Junction { at: "U0".into(), exact: subgroup_equal(&image(1), &self.epsilon_kernel()) }];
        for k in 1..=2 {
            out.push(Junction { at: format!("U{k}"), exact: subgroup_equal(&image(k + 1), &kernel_basis(&self.d[k - 1])) });
        }
        let d3_kernel = kernel_basis(&self.d[2]);
        out.push(Junction { at: "U3".into(), exact: subgroup_equal(&self.u4_basis, &d3_kernel) });
        out
    }
}

/// Whether `im d_{i+1} = ker d_i` (or `ker ε` at `U₀`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Junction {
    pub at: String,
    pub exact: bool,
}

pub fn check_exactness(res: &ResolutionData) -> Vec<Junction> {
    res.check_exactness()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog;

    #[test]
    fn z2_small_pieces() {
        let r = catalog::zmod(2);
        let d3 = boundary(&r, &GeneratorId { level: Level::U3Single, entries: vec![1] });
        assert_eq!(d3, bracket(Level::U2Pair, &[1, 1]));
        assert!(boundary_chain(&r, &d3).is_zero());
        let d1 = boundary(&r, &GeneratorId { level: Level::U1, entries: vec![1, 1] });
        assert_eq!(d1, bracket(Level::U0, &[1]).scale(&BigInt::from(2)));
    }

    #[test]
    fn z3_zero_bracket() {
        let r = catalog::zmod(3);
        let d1 = boundary(&r, &GeneratorId { level: Level::U1, entries: vec![1, 2] });
        assert_eq!(d1, bracket(Level::U0, &[2]) + bracket(Level::U0, &[1]));
    }

    #[test]
    fn complex_and_exactness_for_small_rings() {
        for r in [catalog::zmod(2), catalog::zmod(3)] {
            let res = build_resolution(&r).unwrap();
            assert!(res.check_complex().is_empty(), "{}", res.check_complex());
            assert!(res.check_exactness().iter().all(|j| j.exact), "{:?}", res.check_exactness());
        }
    }
}
