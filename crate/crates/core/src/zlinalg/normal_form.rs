use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::formal_sum::FormalSum;
use super::matrix::IntMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormKind {
    /// Row-style Hermite form: `u * original = d`, `v` is the identity.
    Hermite,
    /// `u * original * v = d` with `d` diagonal and d₁ | d₂ | … .
    Smith,
}

/// A matrix together with unimodular transforms bringing it to a normal form.
#[derive(Clone, Debug)]
pub struct NormalForm {
    pub kind: FormKind,
    pub original: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub d: IntMatrix,
    /// Number of nonzero rows (Hermite) or nonzero diagonal entries (Smith).
    pub rank: usize,
}

impl NormalForm {
    /// Nonzero diagonal entries of a Smith form.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        assert_eq!(self.kind, FormKind::Smith);
        (0..self.rank).map(|i| self.d.get(i, i).clone()).collect()
    }

    /// Re-verifies `u * original * v == d` exactly.
    pub fn verify_product(&self) -> bool {
        self.u.mul(&self.original).mul(&self.v) == self.d
    }
}

/// Position of the smallest nonzero absolute value; ties go to the lowest row, then column.
fn smallest_nonzero(
    m: &IntMatrix,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in rows {
        for j in cols.clone() {
            let v = m.get(i, j);
            if v.is_zero() {
                continue;
            }
            let a = v.abs();
            if best.as_ref().is_none_or(|(_, _, b)| a < *b) {
                best = Some((i, j, a));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Row-style Hermite normal form with positive pivots and entries above each
/// pivot reduced into `[0, pivot)`.
pub fn hermite_form(m: &IntMatrix) -> NormalForm {
    let (r, c) = (m.rows(), m.cols());
    let mut h = m.clone();
    let mut u = IntMatrix::identity(r);
    let mut pivot_row = 0;
    for col in 0..c {
        if pivot_row == r {
            break;
        }
        while let Some((best, _)) = smallest_nonzero(&h, pivot_row..r, col..col + 1) {
            h.swap_rows(best, pivot_row);
            u.swap_rows(best, pivot_row);
            let pivot = h.get(pivot_row, col).clone();
            let mut clean = true;
            for i in pivot_row + 1..r {
                let v = h.get(i, col);
                if v.is_zero() {
                    continue;
                }
                let q = -v.div_floor(&pivot);
                h.add_row_multiple(i, pivot_row, &q);
                u.add_row_multiple(i, pivot_row, &q);
                if !h.get(i, col).is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if h.get(pivot_row, col).is_zero() {
            continue;
        }
        if h.get(pivot_row, col).is_negative() {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        let pivot = h.get(pivot_row, col).clone();
        for i in 0..pivot_row {
            let q = -h.get(i, col).div_floor(&pivot);
            h.add_row_multiple(i, pivot_row, &q);
            u.add_row_multiple(i, pivot_row, &q);
        }
        pivot_row += 1;
    }
    NormalForm {
        kind: FormKind::Hermite,
        original: m.clone(),
        v: IntMatrix::identity(c),
        u,
        d: h,
        rank: pivot_row,
    }
}

/// Smith normal form `u * m * v = d` with nonnegative invariant factors.
pub fn smith_form(m: &IntMatrix) -> NormalForm {
    let (r, c) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut u = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);
    let mut t = 0;
    while t < r.min(c) {
        let Some((pi, pj)) = smallest_nonzero(&d, t..r, t..c) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            let pivot = d.get(t, t).clone();
            for i in t + 1..r {
                if !d.get(i, t).is_zero() {
                    let q = -d.get(i, t).div_floor(&pivot);
                    d.add_row_multiple(i, t, &q);
                    u.add_row_multiple(i, t, &q);
                }
            }
            for j in t + 1..c {
                if !d.get(t, j).is_zero() {
                    let q = -d.get(t, j).div_floor(&pivot);
                    d.add_col_multiple(j, t, &q);
                    v.add_col_multiple(j, t, &q);
                }
            }
            // a nonzero remainder in the pivot row or column becomes the new pivot
            let col_rest = smallest_nonzero(&d, t + 1..r, t..t + 1);
            let row_rest = smallest_nonzero(&d, t..t + 1, t + 1..c);
            match (col_rest, row_rest) {
                (None, None) => {}
                (col_rest, row_rest) => {
                    let pick_col = match (&col_rest, &row_rest) {
                        (Some((i, _)), Some((_, j))) => d.get(*i, t).abs() <= d.get(t, *j).abs(),
                        (Some(_), None) => true,
                        _ => false,
                    };
                    if pick_col {
                        let (i, _) = col_rest.unwrap();
                        d.swap_rows(t, i);
                        u.swap_rows(t, i);
                    } else {
                        let (_, j) = row_rest.unwrap();
                        d.swap_cols(t, j);
                        v.swap_cols(t, j);
                    }
                    continue;
                }
            }
            let pivot = d.get(t, t).clone();
            let offender = (t + 1..r)
                .flat_map(|i| (t + 1..c).map(move |j| (i, j)))
                .find(|&(i, j)| !d.get(i, j).is_multiple_of(&pivot));
            match offender {
                Some((i, _)) => {
                    let one = BigInt::one();
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    NormalForm { kind: FormKind::Smith, original: m.clone(), u, v, d, rank: t }
}

/// A ℤ-basis of the integer kernel of `m`, saturated by construction
/// (it is read off a unimodular transform).
pub fn kernel_basis(m: &IntMatrix) -> Vec<FormalSum> {
    let hnf = hermite_form(&m.transpose());
    (hnf.rank..m.cols()).map(|k| FormalSum::from_vec(hnf.u.row(k))).collect()
}

/// Solves `m * x = b` over ℤ. The answer is the one read off the Hermite form of
/// `mᵀ` with all free coordinates set to zero, so it is deterministic.
pub fn solve(m: &IntMatrix, b: &FormalSum) -> Option<FormalSum> {
    let rhs = b.to_vec(m.rows());
    let hnf = hermite_form(&m.transpose());
    solve_with_hermite(&hnf, &rhs)
}

/// Same as [`solve`] with a precomputed Hermite form of `mᵀ`; lets callers
/// reuse one factorisation for many right-hand sides.
pub fn solve_with_hermite(hnf_of_transpose: &NormalForm, rhs: &[BigInt]) -> Option<FormalSum> {
    let h = &hnf_of_transpose.d;
    let n = h.cols();
    assert_eq!(rhs.len(), n, "right-hand side has the wrong length");
    let mut residual = rhs.to_vec();
    let mut y = Vec::with_capacity(hnf_of_transpose.rank);
    let mut scanned = 0;
    for k in 0..hnf_of_transpose.rank {
        let row = h.row(k);
        let p = row.iter().position(|v| !v.is_zero()).expect("zero row inside the rank");
        if residual[scanned..p].iter().any(|v| !v.is_zero()) {
            return None;
        }
        let (q, rem) = residual[p].div_rem(&row[p]);
        if !rem.is_zero() {
            return None;
        }
        if !q.is_zero() {
            for (r, hv) in residual.iter_mut().zip(row).skip(p) {
                if !hv.is_zero() {
                    *r -= &q * hv;
                }
            }
        }
        y.push(q);
        scanned = p + 1;
    }
    if residual.iter().any(|v| !v.is_zero()) {
        return None;
    }
    let dim = hnf_of_transpose.u.cols();
    let mut x = vec![BigInt::zero(); dim];
    for (k, q) in y.iter().enumerate() {
        if q.is_zero() {
            continue;
        }
        for (xi, uv) in x.iter_mut().zip(hnf_of_transpose.u.row(k)) {
            if !uv.is_zero() {
                *xi += q * uv;
            }
        }
    }
    Some(FormalSum::from_vec(&x))
}

/// Ambient dimension large enough for every generator in both lists.
fn ambient_dim(a: &[FormalSum], b: &[FormalSum]) -> usize {
    a.iter().chain(b).map(FormalSum::support_bound).max().unwrap_or(0)
}

/// True iff every element of `gens` lies in the subgroup generated by `span`.
pub fn subgroup_contains(span: &[FormalSum], gens: &[FormalSum], dim: usize) -> bool {
    if gens.iter().all(FormalSum::is_zero) {
        return true;
    }
    let columns: Vec<Vec<BigInt>> = span.iter().map(|s| s.to_vec(dim)).collect();
    let m = IntMatrix::from_columns(&columns, dim);
    let hnf = hermite_form(&m.transpose());
    gens.iter().all(|g| solve_with_hermite(&hnf, &g.to_vec(dim)).is_some())
}

/// Whether two generating sets span the same subgroup of a free ℤ-module.
pub fn subgroup_equal(gens1: &[FormalSum], gens2: &[FormalSum]) -> bool {
    let dim = ambient_dim(gens1, gens2);
    subgroup_contains(gens2, gens1, dim) && subgroup_contains(gens1, gens2, dim)
}

/// Hermite basis (nonzero rows) of the lattice generated by `gens` in ℤ^dim.
pub fn lattice_basis(gens: &[Vec<BigInt>], dim: usize) -> Vec<Vec<BigInt>> {
    let m = IntMatrix::from_bigint_rows(gens.to_vec(), dim);
    let hnf = hermite_form(&m);
    (0..hnf.rank).map(|i| hnf.d.row(i).to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn smith_of_2468() {
        let m = IntMatrix::from_rows(&[vec![2i64, 4], vec![6, 8]]);
        let nf = smith_form(&m);
        assert!(nf.verify_product());
        assert_eq!(nf.invariant_factors(), big(&[2, 4]));
        assert_eq!(nf.u.determinant().abs(), BigInt::one());
        assert_eq!(nf.v.determinant().abs(), BigInt::one());
    }

    #[test]
    fn smith_identity_and_zero() {
        let id = IntMatrix::identity(3);
        let nf = smith_form(&id);
        assert_eq!(nf.d, id);
        let z = IntMatrix::zeros(2, 3);
        let nf = smith_form(&z);
        assert_eq!(nf.rank, 0);
        assert!(nf.d.is_zero());
    }

    #[test]
    fn smith_enforces_divisibility() {
        // diag(2, 3) is not Smith; the form is diag(1, 6)
        let m = IntMatrix::from_rows(&[vec![2i64, 0], vec![0, 3]]);
        let nf = smith_form(&m);
        assert!(nf.verify_product());
        assert_eq!(nf.invariant_factors(), big(&[1, 6]));
    }

    #[test]
    fn hermite_is_echelon() {
        let m = IntMatrix::from_rows(&[vec![3i64, 5, 7], vec![6, 1, 2], vec![0, 4, 4]]);
        let nf = hermite_form(&m);
        assert_eq!(nf.u.mul(&m), nf.d);
        assert_eq!(nf.u.determinant().abs(), BigInt::one());
        let mut last = None;
        for i in 0..nf.rank {
            let p = nf.d.row(i).iter().position(|v| !v.is_zero()).unwrap();
            assert!(nf.d.get(i, p).is_positive());
            if let Some(l) = last {
                assert!(p > l);
            }
            for k in 0..i {
                assert!(!nf.d.get(k, p).is_negative() && nf.d.get(k, p) < nf.d.get(i, p));
            }
            last = Some(p);
        }
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&IntMatrix::from_rows(&[vec![2i64]])).is_empty());
        let k = kernel_basis(&IntMatrix::from_rows(&[vec![1i64, 1]]));
        assert_eq!(k.len(), 1);
        let v = k[0].to_vec(2);
        assert_eq!(v[0].clone() + v[1].clone(), BigInt::zero());
        assert_eq!(v[0].abs(), BigInt::one());
    }

    #[test]
    fn solve_examples() {
        let two = IntMatrix::from_rows(&[vec![2i64]]);
        let x = solve(&two, &FormalSum::from_i64s(&[4])).unwrap();
        assert_eq!(x, FormalSum::from_i64s(&[2]));
        assert!(solve(&two, &FormalSum::from_i64s(&[3])).is_none());
    }

    #[test]
    fn subgroup_examples() {
        let a = vec![FormalSum::from_i64s(&[2, 0])];
        let b = vec![FormalSum::from_i64s(&[-2, 0])];
        let c = vec![FormalSum::from_i64s(&[1, 0])];
        assert!(subgroup_equal(&a, &b));
        assert!(!subgroup_equal(&c, &a));
    }
}
