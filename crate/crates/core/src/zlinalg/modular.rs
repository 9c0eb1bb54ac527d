use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

/// Full-rank lattice `L ⊆ ℤⁿ` containing `e·ℤⁿ`, kept as an upper-triangular
/// Hermite basis whose pivots divide `e`. Submodules of `(ℤ/e)ⁿ` correspond
/// one-to-one to such lattices, which is how finite cochain groups are handled.
#[derive(Clone, Debug)]
pub struct ModLattice {
    n: usize,
    e: i128,
    rows: Vec<Vec<i128>>,
    // tags[i] records row i as a combination of the tagged inserts (mod e)
    tags: Vec<Vec<i128>>,
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    // returns (g, x, y) with g = a x + b y, g >= 0
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

impl ModLattice {
    /// The lattice `e·ℤⁿ`, i.e. the zero submodule of `(ℤ/e)ⁿ`.
    pub fn new(n: usize, e: u64) -> Self {
        Self::with_tags(n, e, 0)
    }

    /// Like [`ModLattice::new`], but every basis row remembers how it is built
    /// from inserts made with [`ModLattice::insert_tagged`] (tags of length `width`).
    pub fn with_tags(n: usize, e: u64, width: usize) -> Self {
        assert!(e >= 1, "modulus must be positive");
        let e = e as i128;
        let rows = (0..n)
            .map(|i| {
                let mut r = vec![0i128; n];
                r[i] = e;
                r
            })
            .collect();
        ModLattice { n, e, rows, tags: vec![vec![0; width]; n] }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.e as u64
    }

    pub fn pivots(&self) -> Vec<u64> {
        (0..self.n).map(|i| self.rows[i][i] as u64).collect()
    }

    pub fn basis_rows(&self) -> &[Vec<i128>] {
        &self.rows
    }

    /// Adds a generator to the lattice.
    pub fn insert(&mut self, v: &[i64]) {
        let width = self.tags.first().map_or(0, |t| t.len());
        self.insert_tagged(v, &vec![0; width]);
    }

    /// Adds a generator that [`ModLattice::express`] will report through `tag`.
    pub fn insert_tagged(&mut self, v: &[i64], tag: &[i64]) {
        assert_eq!(v.len(), self.n);
        let e = self.e;
        let first: Vec<i128> = v.iter().map(|&x| (x as i128).rem_euclid(e)).collect();
        let first_tag: Vec<i128> = tag.iter().map(|&x| (x as i128).rem_euclid(e)).collect();
        // Whenever a pivot shrinks to g, (e/g)·row vanishes in its pivot column
        // but not necessarily further right; queueing it keeps e·ℤⁿ inside the
        // span of the stored rows.
        let mut queue = vec![(first, first_tag)];
        while let Some((mut v, mut t)) = queue.pop() {
            for j in 0..self.n {
                if v[j] == 0 {
                    continue;
                }
                let hjj = self.rows[j][j];
                if v[j] % hjj == 0 {
                    let q = v[j] / hjj;
                    for k in j..self.n {
                        v[k] = (v[k] - q * self.rows[j][k]).rem_euclid(e);
                    }
                    for (tk, rk) in t.iter_mut().zip(&self.tags[j]) {
                        *tk = (*tk - q * rk).rem_euclid(e);
                    }
                    continue;
                }
                let (g, a, b) = ext_gcd(hjj, v[j]);
                let (vj_g, hjj_g) = (v[j] / g, hjj / g);
                let row = &self.rows[j];
                let mut new_row = vec![0i128; self.n];
                let mut new_v = vec![0i128; self.n];
                for k in j..self.n {
                    new_row[k] = (a * row[k] + b * v[k]).rem_euclid(e);
                    new_v[k] = (vj_g * row[k] - hjj_g * v[k]).rem_euclid(e);
                }
                let rt = &self.tags[j];
                let new_tag: Vec<i128> = rt.iter().zip(&t).map(|(&r, &x)| (a * r + b * x).rem_euclid(e)).collect();
                let new_t: Vec<i128> =
                    rt.iter().zip(&t).map(|(&r, &x)| (vj_g * r - hjj_g * x).rem_euclid(e)).collect();
                // the pivot is a proper positive divisor of e; keep it unreduced
                new_row[j] = g;
                debug_assert_eq!(new_v[j], 0);
                let multiple: Vec<i128> =
                    new_row.iter().map(|&x| ((e / g) * x).rem_euclid(e)).collect();
                let multiple_tag: Vec<i128> = new_tag.iter().map(|&x| ((e / g) * x).rem_euclid(e)).collect();
                self.rows[j] = new_row;
                self.tags[j] = new_tag;
                queue.push((multiple, multiple_tag));
                v = new_v;
                t = new_t;
            }
        }
        self.reduce_above_pivots();
    }

    fn reduce_above_pivots(&mut self) {
        for j in 0..self.n {
            for k in j + 1..self.n {
                let p = self.rows[k][k];
                let q = self.rows[j][k].div_euclid(p);
                if q != 0 {
                    let (head, tail) = self.rows.split_at_mut(k);
                    let src = &tail[0];
                    for (t, s) in head[j][k..].iter_mut().zip(&src[k..]) {
                        *t -= q * s;
                    }
                    let (head, tail) = self.tags.split_at_mut(k);
                    for (t, s) in head[j].iter_mut().zip(&tail[0]) {
                        *t = (*t - q * s).rem_euclid(self.e);
                    }
                }
            }
        }
    }

    /// Canonical representative of `v + L`: every coordinate ends in `[0, pivot)`.
    pub fn reduce(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.n);
        let mut w: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        for j in 0..self.n {
            let p = self.rows[j][j];
            let q = w[j].div_euclid(p);
            if q != 0 {
                for k in j..self.n {
                    w[k] -= q * self.rows[j][k];
                }
            }
        }
        w.into_iter().map(|x| x as i64).collect()
    }

    /// A tag combination `c` with `v ≡ Σ cᵢ·(tagged insert i)` modulo the
    /// untagged part, or `None` if `v` is outside the lattice.
    pub fn express(&self, v: &[i64]) -> Option<Vec<i64>> {
        assert_eq!(v.len(), self.n);
        let mut w: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        let width = self.tags.first().map_or(0, |t| t.len());
        let mut c = vec![0i128; width];
        for j in 0..self.n {
            let p = self.rows[j][j];
            let q = w[j].div_euclid(p);
            if q != 0 {
                for k in j..self.n {
                    w[k] -= q * self.rows[j][k];
                }
                for (ck, tk) in c.iter_mut().zip(&self.tags[j]) {
                    *ck = (*ck + q * tk).rem_euclid(self.e);
                }
            }
        }
        w.iter().all(|&x| x == 0).then(|| c.into_iter().map(|x| x as i64).collect())
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// `|L / e·ℤⁿ|`, the order of the corresponding submodule of `(ℤ/e)ⁿ`.
    pub fn submodule_order(&self) -> BigUint {
        self.rows
            .iter()
            .enumerate()
            .map(|(i, r)| BigUint::from((self.e / r[i]) as u64))
            .product()
    }

    /// `|ℤⁿ / L|`.
    pub fn index(&self) -> BigUint {
        self.rows.iter().enumerate().map(|(i, r)| BigUint::from(r[i] as u64)).product()
    }

    /// Generators of `{x : r·x ≡ 0 (mod e) for all r ∈ L}`, i.e. the kernel over
    /// ℤ/e of any matrix whose rows generate `L`. Columns of `e·H⁻¹`, reduced mod e.
    pub fn annihilator_generators(&self) -> Vec<Vec<i64>> {
        let n = self.n;
        let e = BigInt::from(self.e);
        let h: Vec<Vec<BigInt>> =
            self.rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let mut out = Vec::with_capacity(n);
        for col in 0..n {
            let mut c = vec![BigInt::zero(); n];
            for i in (0..n).rev() {
                let mut rhs = if i == col { e.clone() } else { BigInt::zero() };
                for k in i + 1..n {
                    if !h[i][k].is_zero() && !c[k].is_zero() {
                        rhs -= &h[i][k] * &c[k];
                    }
                }
                let (q, r) = rhs.div_rem(&h[i][i]);
                assert!(r.is_zero(), "e·H⁻¹ must be integral");
                c[i] = q;
            }
            let reduced: Vec<i64> =
                c.iter().map(|x| x.mod_floor(&e).to_i64().expect("reduced entry fits")).collect();
            if reduced.iter().any(|&x| x != 0) {
                out.push(reduced);
            }
        }
        out
    }

    pub fn is_everything(&self) -> bool {
        (0..self.n).all(|i| self.rows[i][i] == 1)
    }
}

/// Order of `BigUint` quotient `a / b`, asserting exact divisibility.
pub fn exact_quotient(a: &BigUint, b: &BigUint) -> BigUint {
    let (q, r) = a.div_rem(b);
    assert!(r.is_zero(), "inexact group-order quotient");
    q
}
