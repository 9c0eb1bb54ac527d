use crate::algebra::{
    bicenter, left_mult, left_mults, right_mult, right_mults, AdditiveEndo, BimoduleAction, EndoSubring, FinRing,
    Subgroup,
};
use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::report::Report;

/// Representatives `φ_x`, `ψ_x` of the coset-valued actions of `R` on `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreExtension {
    pub r: FinRing,
    pub a: FinRing,
    pub phi: Vec<AdditiveEndo>,
    pub psi: Vec<AdditiveEndo>,
}

impl PreExtension {
    pub fn new(r: FinRing, a: FinRing, phi: Vec<AdditiveEndo>, psi: Vec<AdditiveEndo>) -> Result<Self> {
        r.require_one()?;
        let ok = |v: &[AdditiveEndo]| {
            v.len() == r.order() && v.iter().all(|e| e.map.len() == a.order() && e.map.iter().all(|&x| x < a.order()))
        };
        if !ok(&phi) || !ok(&psi) {
            return Err(Error::malformed("phi and psi need one |A|-table per element of R"));
        }
        Ok(PreExtension { r, a, phi, psi })
    }

    /// The pre-extension whose actions come from a bimodule on a zero-multiplication `A`.
    pub fn from_bimodule(bm: &BimoduleAction) -> Self {
        let r = bm.ring().clone();
        let a = crate::algebra::catalog::zero_ring(bm.group().clone(), "A");
        let phi = r.elements().map(|x| bm.left_endo(x)).collect();
        let psi = r.elements().map(|x| bm.right_endo(x)).collect();
        PreExtension { r, a, phi, psi }
    }

    pub fn left_mults(&self) -> EndoSubring {
        left_mults(&self.a)
    }

    pub fn right_mults(&self) -> EndoSubring {
        right_mults(&self.a)
    }

    /// Replaces `φ_x` by `φ_x + l_{s(x)}` and `ψ_x` by `ψ_x + r_{s(x)}`.
    pub fn shifted(&self, s: &[usize]) -> PreExtension {
        let g = self.a.group();
        let phi = self.phi.iter().zip(s).map(|(p, &b)| p.add(&left_mult(&self.a, b), g)).collect();
        let psi = self.psi.iter().zip(s).map(|(p, &b)| p.add(&right_mult(&self.a, b), g)).collect();
        PreExtension { r: self.r.clone(), a: self.a.clone(), phi, psi }
    }
}

/// `φ_x(a) = u(x)a`, `ψ_x(a) = au(x)` computed inside `S`.
pub fn induced_pre_extension(e: &Extension, u: &[usize]) -> Result<PreExtension> {
    let rep = e.validate();
    if !rep.is_empty() {
        return Err(Error::invalid("invalid extension", rep));
    }
    if !e.is_section(u, true) {
        return Err(Error::Precondition("u must be a section with u(0)=0 and u(1)=1".into()));
    }
    let s = &e.s;
    let inv = |v: usize| e.chi_inverse(v).expect("χ(A) is an ideal");
    let phi = e
        .r
        .elements()
        .map(|x| AdditiveEndo { map: e.a.elements().map(|a| inv(s.mul(u[x], e.chi[a]))).collect() })
        .collect();
    let psi = e
        .r
        .elements()
        .map(|x| AdditiveEndo { map: e.a.elements().map(|a| inv(s.mul(e.chi[a], u[x]))).collect() })
        .collect();
    PreExtension::new(e.r.clone(), e.a.clone(), phi, psi)
}

pub fn validate_pre_extension(p: &PreExtension) -> Report {
    let (r, a) = (&p.r, &p.a);
    let g = a.group();
    let mut rep = Report::new();
    let one = match r.one() {
        Some(o) => o,
        None => {
            rep.push("R has identity", &[]);
            return rep;
        }
    };
    let id = AdditiveEndo::identity(a.order());
    let zero = AdditiveEndo::zero(a.order());
    if p.phi[one] != id || p.psi[one] != id {
        rep.push("φ₁=ψ₁=id", &[one]);
    }
    if p.phi[0] != zero || p.psi[0] != zero {
        rep.push("φ₀=ψ₀=0", &[0]);
    }
    for x in r.elements() {
        if !p.phi[x].is_additive(g) {
            rep.push("φ_x additive", &[x]);
        }
        if !p.psi[x].is_additive(g) {
            rep.push("ψ_x additive", &[x]);
        }
    }
    for x in r.elements() {
        let (phi, psi) = (&p.phi[x], &p.psi[x]);
        for b in a.elements() {
            for c in a.elements() {
                if a.mul(b, phi.apply(c)) != a.mul(psi.apply(b), c) {
                    rep.push("l_a∘φ_x=l_{ψ_x(a)}", &[x, b, c]);
                }
                if phi.apply(a.mul(b, c)) != a.mul(phi.apply(b), c) {
                    rep.push("φ_x∘l_a=l_{φ_x(a)}", &[x, b, c]);
                }
                if psi.apply(a.mul(c, b)) != a.mul(c, psi.apply(b)) {
                    rep.push("ψ_x∘r_a=r_{ψ_x(a)}", &[x, b, c]);
                }
                if a.mul(psi.apply(c), b) != a.mul(c, phi.apply(b)) {
                    rep.push("r_a∘ψ_x=r_{φ_x(a)}", &[x, b, c]);
                }
            }
        }
        for y in r.elements() {
            if p.phi[x].compose(&p.psi[y]) != p.psi[y].compose(&p.phi[x]) {
                rep.push("φ_x∘ψ_y=ψ_y∘φ_x", &[x, y]);
            }
        }
    }
    let la = p.left_mults();
    let ra = p.right_mults();
    for x in r.elements() {
        for y in r.elements() {
            let add_l = p.phi[r.add(x, y)].sub(&p.phi[x], g).sub(&p.phi[y], g);
            if !la.contains(&add_l) {
                rep.push("additivity mod L(A)", &[x, y]);
            }
            let add_r = p.psi[r.add(x, y)].sub(&p.psi[x], g).sub(&p.psi[y], g);
            if !ra.contains(&add_r) {
                rep.push("additivity mod R(A)", &[x, y]);
            }
            let mul_l = p.phi[x].compose(&p.phi[y]).sub(&p.phi[r.mul(x, y)], g);
            if !la.contains(&mul_l) {
                rep.push("multiplicativity mod L(A)", &[x, y]);
            }
            let mul_r = p.psi[y].compose(&p.psi[x]).sub(&p.psi[r.mul(x, y)], g);
            if !ra.contains(&mul_r) {
                rep.push("multiplicativity mod R(A)", &[x, y]);
            }
        }
    }
    rep
}

/// The bicenter `K_A` with the induced `R`-bimodule structure `xc = φ_x(c)`, `cx = ψ_x(c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KaModule {
    pub module: BimoduleAction,
    pub sub: Subgroup,
}

impl KaModule {
    /// Ambient element of `A` for a `K_A` index.
    pub fn embed(&self, c: usize) -> usize {
        self.sub.embed[c]
    }

    pub fn index_of(&self, a: usize) -> Option<usize> {
        self.sub.index_of(a)
    }
}

pub fn ka_bimodule(p: &PreExtension) -> Result<KaModule> {
    let sub = bicenter(&p.a);
    let act = |maps: &[AdditiveEndo]| -> Result<Vec<Vec<usize>>> {
        maps.iter()
            .enumerate()
            .map(|(x, e)| {
                sub.embed
                    .iter()
                    .map(|&c| {
                        sub.index_of(e.apply(c)).ok_or_else(|| {
                            Error::Precondition(format!("action of {x} moves {c} out of the bicenter"))
                        })
                    })
                    .collect()
            })
            .collect()
    };
    let left = act(&p.phi)?;
    let right = act(&p.psi)?;
    let module = BimoduleAction::from_tables(p.r.clone(), sub.group.clone(), &left, &right)?;
    Ok(KaModule { module, sub })
}

/// For each pair, all `a` with `l_a = D_l` and `r_a = D_r` where `(D_l, D_r)`
/// are the additive or multiplicative defects of `(φ, ψ)` at `(x, y)`.
#[derive(Clone, Debug)]
pub struct FgSolutions {
    pub f: Vec<Vec<usize>>,
    pub g: Vec<Vec<usize>>,
    /// Same sets under the left-sided constraint alone.
    pub f_left_only: Vec<Vec<usize>>,
    pub g_left_only: Vec<Vec<usize>>,
}

pub fn fg_solutions(p: &PreExtension) -> FgSolutions {
    let (r, a) = (&p.r, &p.a);
    let g = a.group();
    let lm: Vec<AdditiveEndo> = a.elements().map(|b| left_mult(a, b)).collect();
    let rm: Vec<AdditiveEndo> = a.elements().map(|b| right_mult(a, b)).collect();
    let n = r.order();
    let mut out = FgSolutions {
        f: vec![vec![]; n * n],
        g: vec![vec![]; n * n],
        f_left_only: vec![vec![]; n * n],
        g_left_only: vec![vec![]; n * n],
    };
    for x in r.elements() {
        for y in r.elements() {
            let dl_f = p.phi[x].add(&p.phi[y], g).sub(&p.phi[r.add(x, y)], g);
            let dr_f = p.psi[x].add(&p.psi[y], g).sub(&p.psi[r.add(x, y)], g);
            let dl_g = p.phi[x].compose(&p.phi[y]).sub(&p.phi[r.mul(x, y)], g);
            let dr_g = p.psi[y].compose(&p.psi[x]).sub(&p.psi[r.mul(x, y)], g);
            for b in a.elements() {
                if lm[b] == dl_f {
                    out.f_left_only[x * n + y].push(b);
                    if rm[b] == dr_f {
                        out.f[x * n + y].push(b);
                    }
                }
                if lm[b] == dl_g {
                    out.g_left_only[x * n + y].push(b);
                    if rm[b] == dr_g {
                        out.g[x * n + y].push(b);
                    }
                }
            }
        }
    }
    out
}

/// The least simultaneous solutions `f`, `g` (tables on `R²` into `A`).
pub fn choose_fg(p: &PreExtension) -> Result<(Vec<usize>, Vec<usize>)> {
    let sols = fg_solutions(p);
    let n = p.r.order();
    let pick = |sets: &[Vec<usize>], which: &'static str| -> Result<Vec<usize>> {
        sets.iter()
            .enumerate()
            .map(|(i, s)| s.first().copied().ok_or(Error::Incoherent { x: i / n, y: i % n, which }))
            .collect()
    };
    Ok((pick(&sols.f, "additive")?, pick(&sols.g, "multiplicative")?))
}

/// Pairs where the left-only reading admits more solutions than the two-sided one.
pub fn divergent_readings(p: &PreExtension) -> Vec<(usize, usize, &'static str)> {
    let sols = fg_solutions(p);
    let n = p.r.order();
    let mut out = Vec::new();
    for i in 0..n * n {
        if sols.f[i] != sols.f_left_only[i] {
            out.push((i / n, i % n, "f"));
        }
        if sols.g[i] != sols.g_left_only[i] {
            out.push((i / n, i % n, "g"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog;
    use crate::guard::Guards;

    fn z4_over_z2() -> Extension {
        Extension::from_surjection(&catalog::zmod(4), &catalog::zmod(2), &[0, 1, 0, 1]).unwrap()
    }

    #[test]
    fn induced_from_z4() {
        let e = z4_over_z2();
        let p = induced_pre_extension(&e, &[0, 1]).unwrap();
        assert!(validate_pre_extension(&p).is_empty());
        assert_eq!(p.phi[1], AdditiveEndo::identity(2));
        // A² = 0 here, so every a solves the constraints and the least is 0;
        // the section value u(1)+u(1) = 2 is one of the admissible choices
        let (f, g) = choose_fg(&p).unwrap();
        assert_eq!((f[3], g[3]), (0, 0));
        let sols = fg_solutions(&p);
        assert_eq!(sols.f[3], vec![0, 1]);
        assert_eq!(sols.g[3], vec![0, 1]);
        let ka = ka_bimodule(&p).unwrap();
        assert_eq!(ka.sub.embed, vec![0, 1]);
        assert!(ka.module.validate().is_empty());
    }

    #[test]
    fn tampered_identity_is_reported() {
        let e = z4_over_z2();
        let mut p = induced_pre_extension(&e, &[0, 1]).unwrap();
        p.phi[1] = AdditiveEndo::zero(2);
        assert!(validate_pre_extension(&p).has_rule("φ₁=ψ₁=id"));
    }

    #[test]
    fn extensions_by_surjection_induce_valid_pre_extensions() {
        let g = Guards::default();
        let z2 = catalog::zmod(2);
        for s in catalog::unital_inventory() {
            for sigma in Extension::surjections(&s, &z2, &g).unwrap() {
                let e = Extension::from_surjection(&s, &z2, &sigma).unwrap();
                let p = induced_pre_extension(&e, &e.canonical_section()).unwrap();
                assert!(validate_pre_extension(&p).is_empty(), "{}", s.name());
                assert!(choose_fg(&p).is_ok());
            }
        }
    }
}
