use super::cochain::{check_factor_set, check_factor_set_with, Normalization, TwoCochain};
use crate::algebra::{catalog, BimoduleAction, FinRing};
use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::report::Report;

/// An extension with `A² = 0`, together with the bimodule it induces on `A` and
/// a chosen section `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularExtension {
    pub ext: Extension,
    pub bimodule: BimoduleAction,
    pub u: Vec<usize>,
}

impl SingularExtension {
    /// Reads off the bimodule `x·a = χ⁻¹(u(x)χ(a))`, `a·x = χ⁻¹(χ(a)u(x))`.
    pub fn from_extension(ext: Extension, u: Vec<usize>) -> Result<Self> {
        if !ext.is_singular() {
            return Err(Error::Precondition("A² ≠ 0, the extension is not singular".into()));
        }
        if !ext.is_section(&u, false) {
            return Err(Error::Precondition("u is not a section with u(0)=0".into()));
        }
        let (r, s) = (&ext.r, &ext.s);
        let inv = |e: usize| ext.chi_inverse(e).expect("products with χ(A) stay in χ(A)");
        let left: Vec<Vec<usize>> =
            r.elements().map(|x| ext.a.elements().map(|a| inv(s.mul(u[x], ext.chi[a]))).collect()).collect();
        let right: Vec<Vec<usize>> =
            r.elements().map(|x| ext.a.elements().map(|a| inv(s.mul(ext.chi[a], u[x]))).collect()).collect();
        let bimodule = BimoduleAction::from_tables(r.clone(), ext.a.group().clone(), &left, &right)?;
        Ok(SingularExtension { ext, bimodule, u })
    }

    pub fn validate(&self) -> Report {
        let mut rep = self.ext.validate();
        if !self.ext.is_singular() {
            rep.push("A^2 = 0", &[]);
        }
        if !self.ext.is_section(&self.u, false) {
            rep.push("u section with u(0)=0", &[]);
            return rep;
        }
        let s = &self.ext.s;
        for x in self.ext.r.elements() {
            for a in self.ext.a.elements() {
                if self.ext.chi[self.bimodule.left(x, a)] != s.mul(self.u[x], self.ext.chi[a]) {
                    rep.push("x·a = u(x)χ(a)", &[x, a]);
                }
                if self.ext.chi[self.bimodule.right(a, x)] != s.mul(self.ext.chi[a], self.u[x]) {
                    rep.push("a·x = χ(a)u(x)", &[x, a]);
                }
            }
        }
        rep
    }
}

/// `S = A × R` with `(a,x)+(b,y) = (a+b+f(x,y), x+y)` and
/// `(a,x)(b,y) = (ay+xb+g(x,y), xy)`. The pair `(a,x)` has index `x·|A| + a`.
pub fn build_singular_extension(c: &TwoCochain) -> Result<SingularExtension> {
    let rep = check_factor_set(c);
    if !rep.is_empty() {
        return Err(Error::invalid("not a factor set", rep));
    }
    let bm = &c.bimodule;
    let (r, a) = (bm.ring(), bm.group());
    let (n, m) = (r.order(), a.order());
    let idx = |a_: usize, x: usize| x * m + a_;
    let add: Vec<Vec<usize>> = (0..n * m)
        .map(|p| {
            let (pa, px) = (p % m, p / m);
            (0..n * m)
                .map(|q| {
                    let (qa, qx) = (q % m, q / m);
                    idx(a.sum([pa, qa, c.f(px, qx)]), r.add(px, qx))
                })
                .collect()
        })
        .collect();
    let mul: Vec<Vec<usize>> = (0..n * m)
        .map(|p| {
            let (pa, px) = (p % m, p / m);
            (0..n * m)
                .map(|q| {
                    let (qa, qx) = (q % m, q / m);
                    idx(a.sum([bm.right(pa, qx), bm.left(px, qa), c.g(px, qx)]), r.mul(px, qx))
                })
                .collect()
        })
        .collect();
    let one = idx(0, r.require_one()?);
    let s = FinRing::from_tables(format!("S({})", r.name()), &add, &mul, Some(one))?;
    let rep = s.validate();
    if !rep.is_empty() {
        return Err(Error::invalid("constructed S is not a ring", rep));
    }
    let ext = Extension {
        r: r.clone(),
        a: catalog::zero_ring(a.clone(), "A"),
        s,
        chi: (0..m).map(|a_| idx(a_, 0)).collect(),
        sigma: (0..n * m).map(|p| p / m).collect(),
    };
    let u = (0..n).map(|x| idx(0, x)).collect();
    let out = SingularExtension { ext, bimodule: bm.clone(), u };
    let rep = out.validate();
    if !rep.is_empty() {
        return Err(Error::invalid("constructed extension", rep));
    }
    Ok(out)
}

/// The unique `(f, g)` with `u(x)+u(y) = χf(x,y)+u(x+y)` and `u(x)u(y) = χg(x,y)+u(xy)`.
/// With `Normalization::Strict` the section must satisfy `u(1) = 1_S`.
pub fn extract_factor_set(e: &SingularExtension, u: &[usize], mode: Normalization) -> Result<TwoCochain> {
    let ext = &e.ext;
    if !ext.is_section(u, mode == Normalization::Strict) {
        return Err(Error::Precondition("u is not an admissible section".into()));
    }
    let (r, s) = (&ext.r, &ext.s);
    let n = r.order();
    let inv = |v: usize| ext.chi_inverse(v).expect("difference of lifts lies in χ(A)");
    let mut f = vec![0; n * n];
    let mut g = vec![0; n * n];
    for x in r.elements() {
        for y in r.elements() {
            f[x * n + y] = inv(s.sub(s.add(u[x], u[y]), u[r.add(x, y)]));
            g[x * n + y] = inv(s.sub(s.mul(u[x], u[y]), u[r.mul(x, y)]));
        }
    }
    let c = TwoCochain { bimodule: e.bimodule.clone(), f, g };
    let rep = check_factor_set_with(&c, mode);
    if !rep.is_empty() {
        return Err(Error::invalid("extracted cochain", rep));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::guard::Guards;

    fn z2() -> BimoduleAction {
        BimoduleAction::regular(&catalog::zmod(2)).unwrap()
    }

    #[test]
    fn nontrivial_factor_set_gives_z4() {
        let c = TwoCochain::from_tables(&z2(), &[vec![0, 0], vec![0, 1]], &[vec![0, 0], vec![0, 0]]).unwrap();
        let e = build_singular_extension(&c).unwrap();
        let s = &e.ext.s;
        assert_eq!(s.group().element_order(e.u[1]), 4);
        let back = extract_factor_set(&e, &e.u, Normalization::Strict).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn zero_factor_set_gives_exponent_two() {
        let e = build_singular_extension(&TwoCochain::zero(&z2())).unwrap();
        assert_eq!(e.ext.s.group().exponent(), 2);
    }

    #[test]
    fn z4_with_ideal_two() {
        let s = catalog::zmod(4);
        let r = catalog::zmod(2);
        let ext = Extension::from_surjection(&s, &r, &[0, 1, 0, 1]).unwrap();
        let e = SingularExtension::from_extension(ext, vec![0, 1]).unwrap();
        let c = extract_factor_set(&e, &[0, 1], Normalization::Strict).unwrap();
        assert_eq!((c.f(1, 1), c.g(1, 1)), (1, 0));
        let c3 = extract_factor_set(&e, &[0, 3], Normalization::Relaxed).unwrap();
        assert_eq!((c3.f(1, 1), c3.g(1, 1)), (1, 1));
        let t = super::super::are_equivalent_with(&c, &c3, Normalization::Relaxed, &Guards::default()).unwrap();
        assert_eq!(t.unwrap().t, vec![0, 1]);
    }
}
