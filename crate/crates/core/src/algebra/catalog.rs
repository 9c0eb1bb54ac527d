//! Small rings used throughout the tests, examples and the acceptance suite.

use super::group::FinAbGroup;
use super::ring::FinRing;

/// `ℤ/n` with the usual operations; element `k` is the residue `k`.
pub fn zmod(n: usize) -> FinRing {
    scaled_zmod(n, 1).renamed(format!("Z/{n}"))
}

/// `ℤ/n` with multiplication `a * b = k·a·b`; has an identity only for `k = 1`.
pub fn scaled_zmod(n: usize, k: usize) -> FinRing {
    let group = FinAbGroup::cyclic(n);
    let mul: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (k * a * b) % n).collect()).collect();
    let one = if k == 1 && n > 1 { Some(1) } else { None };
    FinRing::from_group(format!("Z/{n} ({k}ab)"), group, &mul, one).expect("well-shaped tables")
}

/// The group with zero multiplication.
pub fn zero_ring(group: FinAbGroup, name: impl Into<String>) -> FinRing {
    let n = group.order();
    FinRing::from_group(name, group, &vec![vec![0; n]; n], None).expect("well-shaped tables")
}

pub fn klein() -> FinAbGroup {
    FinAbGroup::product(&FinAbGroup::cyclic(2), &FinAbGroup::cyclic(2))
}

/// Direct product; `(a, b)` has index `a * |S| + b`.
pub fn product(r: &FinRing, s: &FinRing) -> FinRing {
    let k = s.order();
    let group = FinAbGroup::product(r.group(), s.group());
    let n = group.order();
    let mul: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).map(|j| r.mul(i / k, j / k) * k + s.mul(i % k, j % k)).collect())
        .collect();
    let one = match (r.one(), s.one()) {
        (Some(a), Some(b)) => Some(a * k + b),
        _ => None,
    };
    FinRing::from_group(format!("{}x{}", r.name(), s.name()), group, &mul, one).expect("well-shaped tables")
}

/// Ring on `ℤ/m₁ × … × ℤ/m_k` whose multiplication is the bilinear extension of
/// `basis[i]·basis[j] = products[i][j]`. Elements are indexed in mixed radix with
/// the first coordinate most significant, so the zero vector has index 0.
pub fn structure_constants(
    name: &str,
    moduli: &[usize],
    products: &[Vec<Vec<i64>>],
    one: Option<Vec<i64>>,
) -> FinRing {
    let k = moduli.len();
    let mut elements: Vec<Vec<i64>> = vec![vec![]];
    for &m in moduli {
        elements = elements
            .into_iter()
            .flat_map(|prefix| {
                (0..m as i64).map(move |c| {
                    let mut v = prefix.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    let reduce = |v: Vec<i64>| -> Vec<i64> { v.iter().zip(moduli).map(|(&c, &m)| c.rem_euclid(m as i64)).collect() };
    let add = |a: &Vec<i64>, b: &Vec<i64>| reduce(a.iter().zip(b).map(|(x, y)| x + y).collect());
    let mul = |a: &Vec<i64>, b: &Vec<i64>| {
        let mut out = vec![0i64; k];
        for i in 0..k {
            for j in 0..k {
                let c = a[i] * b[j];
                if c == 0 {
                    continue;
                }
                for (o, p) in out.iter_mut().zip(&products[i][j]) {
                    *o += c * p;
                }
            }
        }
        reduce(out)
    };
    FinRing::from_fn(name, &elements, add, mul, one.map(reduce)).expect("structure constants close up")
}

pub fn f4() -> FinRing {
    // basis 1, w with w² = 1 + w
    structure_constants(
        "F4",
        &[2, 2],
        &[vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 1]]],
        Some(vec![1, 0]),
    )
}

/// `F₂[ε]/(ε²)`.
pub fn f2_dual() -> FinRing {
    structure_constants(
        "F2[e]",
        &[2, 2],
        &[vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![0, 0]]],
        Some(vec![1, 0]),
    )
}

/// `F₂[x]/(x³)`.
pub fn f2_truncated_cubic() -> FinRing {
    let e = |i: usize| {
        let mut v = vec![0i64; 3];
        if i < 3 {
            v[i] = 1;
        }
        v
    };
    let products = (0..3).map(|i| (0..3).map(|j| e(i + j)).collect()).collect::<Vec<_>>();
    structure_constants("F2[x]/x^3", &[2, 2, 2], &products, Some(vec![1, 0, 0]))
}

/// `F₂[x, y]/(x, y)²`.
pub fn f2_square_zero_plane() -> FinRing {
    let z = vec![0i64; 3];
    let products = vec![
        vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
        vec![vec![0, 1, 0], z.clone(), z.clone()],
        vec![vec![0, 0, 1], z.clone(), z],
    ];
    structure_constants("F2[x,y]/(x,y)^2", &[2, 2, 2], &products, Some(vec![1, 0, 0]))
}

/// `ℤ/4[x]/(2x, x² − c)` for `c ∈ {0, 2}`.
pub fn z4_with_nilpotent(c: i64) -> FinRing {
    let products = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![c, 0]]];
    structure_constants(&format!("Z/4[x]/(2x,x^2-{c})"), &[4, 2], &products, Some(vec![1, 0]))
}

/// Upper triangular 2×2 matrices over `F₂`, basis `e11, e12, e22`.
pub fn f2_upper_triangular() -> FinRing {
    let z = vec![0i64; 3];
    let products = vec![
        vec![vec![1, 0, 0], vec![0, 1, 0], z.clone()],
        vec![z.clone(), z.clone(), vec![0, 1, 0]],
        vec![z.clone(), z, vec![0, 0, 1]],
    ];
    structure_constants("T2(F2)", &[2, 2, 2], &products, Some(vec![1, 0, 1]))
}

/// Unital rings of order 4 and 8 used as the extension inventory over `ℤ/2`.
pub fn unital_inventory() -> Vec<FinRing> {
    let z2 = zmod(2);
    vec![
        zmod(4),
        product(&z2, &z2),
        f4(),
        f2_dual(),
        zmod(8),
        product(&zmod(4), &z2),
        product(&product(&z2, &z2), &z2),
        product(&z2, &f4()),
        product(&z2, &f2_dual()),
        f2_truncated_cubic(),
        f2_square_zero_plane(),
        z4_with_nilpotent(0),
        z4_with_nilpotent(2),
        f2_upper_triangular(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inventory_rings_are_valid() {
        for r in unital_inventory() {
            assert!(r.validate().is_empty(), "{}: {}", r.name(), r.validate());
        }
    }

    #[test]
    fn twisted_and_zero_rings_are_valid() {
        for n in 1..=8 {
            assert!(scaled_zmod(n, 2).validate().is_empty());
            assert!(zero_ring(FinAbGroup::cyclic(n), "0").validate().is_empty());
        }
    }

    #[test]
    fn upper_triangular_is_noncommutative() {
        let t = f2_upper_triangular();
        assert!(t.elements().any(|a| t.elements().any(|b| t.mul(a, b) != t.mul(b, a))));
    }
}
