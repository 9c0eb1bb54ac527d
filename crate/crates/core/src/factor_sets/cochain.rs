use crate::algebra::BimoduleAction;
use crate::error::{Error, Result};
use crate::guard::Guards;
use crate::report::Report;

/// Which normalization the cochains obey. `Strict` mirrors sections with
/// `u(0) = 0`, `u(1) = 1`; `Relaxed` only keeps `u(0) = 0`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Normalization {
    #[default]
    Strict,
    Relaxed,
}

/// A pair `(f, g)` of `A`-valued functions on `R²`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCochain {
    pub bimodule: BimoduleAction,
    pub f: Vec<usize>,
    pub g: Vec<usize>,
}

/// `t: R → A` with `t(0) = 0`, and `t(1) = 0` in strict mode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneCochain {
    pub t: Vec<usize>,
    pub mode: Normalization,
}

impl TwoCochain {
    pub fn zero(bimodule: &BimoduleAction) -> Self {
        let n = bimodule.ring().order();
        TwoCochain { bimodule: bimodule.clone(), f: vec![0; n * n], g: vec![0; n * n] }
    }

    pub fn from_tables(bimodule: &BimoduleAction, f: &[Vec<usize>], g: &[Vec<usize>]) -> Result<Self> {
        let (n, m) = (bimodule.ring().order(), bimodule.group().order());
        for (name, t) in [("f", f), ("g", g)] {
            if t.len() != n || t.iter().any(|row| row.len() != n || row.iter().any(|&v| v >= m)) {
                return Err(Error::malformed(format!("{name} must be a {n}x{n} table with entries below {m}")));
            }
        }
        Ok(TwoCochain {
            bimodule: bimodule.clone(),
            f: f.iter().flatten().copied().collect(),
            g: g.iter().flatten().copied().collect(),
        })
    }

    fn n(&self) -> usize {
        self.bimodule.ring().order()
    }

    #[inline]
    pub fn f(&self, x: usize, y: usize) -> usize {
        self.f[x * self.n() + y]
    }

    #[inline]
    pub fn g(&self, x: usize, y: usize) -> usize {
        self.g[x * self.n() + y]
    }

    pub fn f_rows(&self) -> Vec<Vec<usize>> {
        self.f.chunks(self.n()).map(|r| r.to_vec()).collect()
    }

    pub fn g_rows(&self) -> Vec<Vec<usize>> {
        self.g.chunks(self.n()).map(|r| r.to_vec()).collect()
    }

    /// Lexicographic key: the `f` table, then the `g` table.
    pub fn key(&self) -> (Vec<usize>, Vec<usize>) {
        (self.f.clone(), self.g.clone())
    }

    pub fn add(&self, other: &TwoCochain) -> TwoCochain {
        let a = self.bimodule.group();
        TwoCochain {
            bimodule: self.bimodule.clone(),
            f: self.f.iter().zip(&other.f).map(|(&x, &y)| a.add(x, y)).collect(),
            g: self.g.iter().zip(&other.g).map(|(&x, &y)| a.add(x, y)).collect(),
        }
    }
}

impl OneCochain {
    pub fn new(bimodule: &BimoduleAction, t: Vec<usize>, mode: Normalization) -> Result<Self> {
        let r = bimodule.ring();
        if t.len() != r.order() || t.iter().any(|&v| v >= bimodule.group().order()) {
            return Err(Error::malformed("t must map every element of R into A"));
        }
        if t[0] != 0 {
            return Err(Error::Precondition("t(0) must be 0".into()));
        }
        if mode == Normalization::Strict && t[r.require_one()?] != 0 {
            return Err(Error::Precondition("t(1) must be 0 unless relaxed normalization is requested".into()));
        }
        Ok(OneCochain { t, mode })
    }

    pub fn zero(bimodule: &BimoduleAction) -> Self {
        OneCochain { t: vec![0; bimodule.ring().order()], mode: Normalization::Strict }
    }

    pub fn neg(&self, bimodule: &BimoduleAction) -> Self {
        let a = bimodule.group();
        OneCochain { t: self.t.iter().map(|&v| a.neg(v)).collect(), mode: self.mode }
    }
}

/// Reports every violated factor-set relation (strict normalization).
pub fn check_factor_set(c: &TwoCochain) -> Report {
    check_factor_set_with(c, Normalization::Strict)
}

pub fn check_factor_set_with(c: &TwoCochain, mode: Normalization) -> Report {
    let bm = &c.bimodule;
    let (r, a) = (bm.ring(), bm.group());
    let one = r.one().expect("bimodule ring has identity");
    let mut rep = Report::new();
    for x in r.elements() {
        if c.f(x, 0) != 0 || c.f(0, x) != 0 {
            rep.push("(2) normalization: f(x,0)=f(0,x)=0", &[x]);
        }
        if c.g(x, 0) != 0 || c.g(0, x) != 0 {
            rep.push("(2) normalization: g(x,0)=g(0,x)=0", &[x]);
        }
        if mode == Normalization::Strict && (c.g(one, x) != 0 || c.g(x, one) != 0) {
            rep.push("(2) normalization: g(1,x)=g(x,1)=0", &[x]);
        }
    }
    for x in r.elements() {
        for y in r.elements() {
            if c.f(x, y) != c.f(y, x) {
                rep.push("(3) f(x,y)=f(y,x)", &[x, y]);
            }
            for z in r.elements() {
                let v4 = a.sum([
                    c.f(y, z),
                    a.neg(c.f(r.add(x, y), z)),
                    c.f(x, r.add(y, z)),
                    a.neg(c.f(x, y)),
                ]);
                if v4 != 0 {
                    rep.push("(4) f(y,z)-f(x+y,z)+f(x,y+z)-f(x,y)=0", &[x, y, z]);
                }
                let v5 = a.sum([
                    bm.left(x, c.g(y, z)),
                    a.neg(c.g(r.mul(x, y), z)),
                    c.g(x, r.mul(y, z)),
                    a.neg(bm.right(c.g(x, y), z)),
                ]);
                if v5 != 0 {
                    rep.push("(5) xg(y,z)-g(xy,z)+g(x,yz)-g(x,y)z=0", &[x, y, z]);
                }
                let lhs = a.sub(bm.left(x, c.f(y, z)), c.f(r.mul(x, y), r.mul(x, z)));
                let rhs = a.sub(a.add(c.g(x, y), c.g(x, z)), c.g(x, r.add(y, z)));
                if lhs != rhs {
                    rep.push("(6) xf(y,z)-f(xy,xz)=g(x,y)+g(x,z)-g(x,y+z)", &[x, y, z]);
                }
                let lhs = a.sub(bm.right(c.f(x, y), z), c.f(r.mul(x, z), r.mul(y, z)));
                let rhs = a.sub(a.add(c.g(x, z), c.g(y, z)), c.g(r.add(x, y), z));
                if lhs != rhs {
                    rep.push("(6) f(x,y)z-f(xz,yz)=g(x,z)+g(y,z)-g(x+y,z)", &[x, y, z]);
                }
            }
        }
    }
    rep
}

/// `(δ₁t, δ₂t)` with `δ₁t(x,y) = −t(x+y)+t(x)+t(y)` and `δ₂t(x,y) = xt(y)−t(xy)+t(x)y`.
pub fn coboundary1(bimodule: &BimoduleAction, t: &OneCochain) -> TwoCochain {
    let (r, a) = (bimodule.ring(), bimodule.group());
    let n = r.order();
    let mut f = vec![0; n * n];
    let mut g = vec![0; n * n];
    for x in r.elements() {
        for y in r.elements() {
            f[x * n + y] = a.sum([a.neg(t.t[r.add(x, y)]), t.t[x], t.t[y]]);
            g[x * n + y] = a.sum([bimodule.left(x, t.t[y]), a.neg(t.t[r.mul(x, y)]), bimodule.right(t.t[x], y)]);
        }
    }
    TwoCochain { bimodule: bimodule.clone(), f, g }
}

/// `c + δt`.
pub fn shift(c: &TwoCochain, t: &OneCochain) -> TwoCochain {
    c.add(&coboundary1(&c.bimodule, t))
}

/// Visits all admissible `t` in lexicographic order until `visit` returns true.
pub(crate) fn for_each_one_cochain(
    bimodule: &BimoduleAction,
    mode: Normalization,
    guards: &Guards,
    mut visit: impl FnMut(&OneCochain) -> bool,
) -> Result<Option<OneCochain>> {
    let r = bimodule.ring();
    let one = r.require_one()?;
    let m = bimodule.group().order();
    let free: Vec<usize> =
        r.elements().filter(|&x| x != 0 && (mode == Normalization::Relaxed || x != one)).collect();
    guards.search_space("1-cochain search", m, free.len())?;
    let mut t = OneCochain { t: vec![0; r.order()], mode };
    loop {
        if visit(&t) {
            return Ok(Some(t));
        }
        // odometer, most significant slot first so the visit order is lexicographic
        let mut i = free.len();
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            let x = free[i];
            t.t[x] += 1;
            if t.t[x] < m {
                break;
            }
            t.t[x] = 0;
        }
    }
}

/// The least `t` (lexicographically) with `c₂ = c₁ + δt`, if any.
pub fn are_equivalent(c1: &TwoCochain, c2: &TwoCochain, guards: &Guards) -> Result<Option<OneCochain>> {
    are_equivalent_with(c1, c2, Normalization::Strict, guards)
}

pub fn are_equivalent_with(
    c1: &TwoCochain,
    c2: &TwoCochain,
    mode: Normalization,
    guards: &Guards,
) -> Result<Option<OneCochain>> {
    if c1.bimodule != c2.bimodule {
        return Err(Error::Precondition("cochains live over different bimodules".into()));
    }
    for_each_one_cochain(&c1.bimodule, mode, guards, |t| shift(c1, t) == *c2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog;

    fn z2() -> BimoduleAction {
        BimoduleAction::regular(&catalog::zmod(2)).unwrap()
    }

    #[test]
    fn examples() {
        let bm = z2();
        assert!(check_factor_set(&TwoCochain::zero(&bm)).is_empty());
        let c = TwoCochain::from_tables(&bm, &[vec![0, 0], vec![0, 1]], &[vec![0, 0], vec![0, 0]]).unwrap();
        assert!(check_factor_set(&c).is_empty());
        let bad = TwoCochain::from_tables(&bm, &[vec![0, 0], vec![0, 1]], &[vec![0, 0], vec![0, 1]]).unwrap();
        assert!(check_factor_set(&bad).has_rule("(2) normalization: g(1,x)=g(x,1)=0"));
    }

    #[test]
    fn strict_t_must_vanish_at_one() {
        let bm = z2();
        assert!(OneCochain::new(&bm, vec![0, 1], Normalization::Strict).is_err());
        assert!(OneCochain::new(&bm, vec![0, 1], Normalization::Relaxed).is_ok());
    }

    #[test]
    fn equivalence_examples() {
        let bm = z2();
        let g = Guards::default();
        let zero = TwoCochain::zero(&bm);
        let c = TwoCochain::from_tables(&bm, &[vec![0, 0], vec![0, 1]], &[vec![0, 0], vec![0, 0]]).unwrap();
        assert_eq!(are_equivalent(&c, &c, &g).unwrap().unwrap().t, vec![0, 0]);
        assert!(are_equivalent(&zero, &c, &g).unwrap().is_none());
    }
}
