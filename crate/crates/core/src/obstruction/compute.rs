use super::pre_extension::{choose_fg, fg_solutions, ka_bimodule, validate_pre_extension, KaModule, PreExtension};
use crate::algebra::{FinAbGroup, FinRing};
use crate::cochain3::{delta2, CoboundaryPair, Family3, RelationCheck};
use crate::error::{Error, Result};
use crate::extension::{equivalence_classes, Extension};
use crate::guard::Guards;

/// The obstruction `(ξ, η, α, λ, ρ)` of `p` for the choice `(f, g)`, with values
/// relabelled into `K_A`.
pub fn compute_obstruction(p: &PreExtension, f: &[usize], g: &[usize]) -> Result<Family3> {
    let ka = ka_bimodule(p)?;
    compute_obstruction_in(p, &ka, f, g)
}

pub(crate) fn compute_obstruction_in(p: &PreExtension, ka: &KaModule, f: &[usize], g: &[usize]) -> Result<Family3> {
    let (r, a) = (&p.r, p.a.group());
    let n = r.order();
    let fv = |x: usize, y: usize| f[x * n + y];
    let gv = |x: usize, y: usize| g[x * n + y];
    let mut k = Family3::zero(&ka.module);
    let into_k = |function: &'static str, tuple: &[usize], v: usize| {
        ka.index_of(v).ok_or_else(|| Error::OutsideBicenter { function, tuple: tuple.to_vec(), value: v })
    };
    for x in 0..n {
        for y in 0..n {
            k.eta[x * n + y] = into_k("eta", &[x, y], a.sub(fv(x, y), fv(y, x)))?;
            for z in 0..n {
                let i = (x * n + y) * n + z;
                let t = [x, y, z];
                let xi = a.sum([fv(y, z), a.neg(fv(r.add(x, y), z)), fv(x, r.add(y, z)), a.neg(fv(x, y))]);
                k.xi[i] = into_k("xi", &t, xi)?;
                let alpha = a.sum([
                    p.phi[x].apply(gv(y, z)),
                    a.neg(gv(r.mul(x, y), z)),
                    gv(x, r.mul(y, z)),
                    a.neg(p.psi[z].apply(gv(x, y))),
                ]);
                k.alpha[i] = into_k("alpha", &t, alpha)?;
                let lambda = a.sum([
                    p.phi[x].apply(fv(y, z)),
                    a.neg(fv(r.mul(x, y), r.mul(x, z))),
                    gv(x, r.add(y, z)),
                    a.neg(gv(x, y)),
                    a.neg(gv(x, z)),
                ]);
                k.lambda[i] = into_k("lambda", &t, lambda)?;
                let rho = a.sum([
                    p.psi[z].apply(fv(x, y)),
                    a.neg(fv(r.mul(x, z), r.mul(y, z))),
                    gv(r.add(x, y), z),
                    a.neg(gv(x, z)),
                    a.neg(gv(y, z)),
                ]);
                k.rho[i] = into_k("rho", &t, rho)?;
            }
        }
    }
    Ok(k)
}

/// `γ(x,y,z,t) = f(x+y,z+t) − f(x,z) − f(y,t) − f(x+z,y+t) + f(x,y) + f(z,t)`,
/// returned as a table on `R⁴`.
pub fn compute_gamma(r: &FinRing, target: &FinAbGroup, f: &[usize]) -> Vec<usize> {
    let n = r.order();
    let fv = |x: usize, y: usize| f[x * n + y];
    let mut out = Vec::with_capacity(n.pow(4));
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for t in 0..n {
                    out.push(target.sum([
                        fv(r.add(x, y), r.add(z, t)),
                        target.neg(fv(x, z)),
                        target.neg(fv(y, t)),
                        target.neg(fv(r.add(x, z), r.add(y, t))),
                        fv(x, y),
                        fv(z, t),
                    ]));
                }
            }
        }
    }
    out
}

/// The family `(α, γ, λ, ρ)` where `γ` replaces the additive pair `(ξ, η)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaForm {
    pub alpha: Vec<usize>,
    pub lambda: Vec<usize>,
    pub rho: Vec<usize>,
    /// Values in `K_A`, on `R⁴`.
    pub gamma: Vec<usize>,
}

pub fn gamma_form(p: &PreExtension, f: &[usize], g: &[usize]) -> Result<GammaForm> {
    let ka = ka_bimodule(p)?;
    let k = compute_obstruction_in(p, &ka, f, g)?;
    let gamma = compute_gamma(&p.r, p.a.group(), f)
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            let n = p.r.order();
            let tuple = vec![i / (n * n * n), (i / (n * n)) % n, (i / n) % n, i % n];
            ka.index_of(v).ok_or(Error::OutsideBicenter { function: "gamma", tuple, value: v })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GammaForm { alpha: k.alpha, lambda: k.lambda, rho: k.rho, gamma })
}

/// The eighteen relations, with relation 5 reported separately as regularity.
pub fn is_three_cocycle(k: &Family3) -> RelationCheck {
    RelationCheck::run(k)
}

/// A pair `c` with `k₂ − k₁ = δ²c`, if one exists. Searches exhaustively in
/// lexicographic order of the free slots when the space fits the guard, and
/// falls back to exact lattice solving otherwise.
pub fn are_cohomologous(k1: &Family3, k2: &Family3, guards: &Guards) -> Result<Option<CoboundaryPair>> {
    if k1.module != k2.module {
        return Err(Error::Precondition("families have different coefficient modules".into()));
    }
    let target = k2.sub(k1);
    let module = &k1.module;
    let slots = CoboundaryPair::free_slots(module);
    let m = module.group().order();
    match guards.search_space("cohomologous search", m, slots.len()) {
        Ok(_) => Ok(exhaustive_preimage(&target, &slots)),
        Err(Error::Guard { .. }) => crate::shukla::h3::coboundary_preimage(&target),
        Err(e) => Err(e),
    }
}

fn exhaustive_preimage(target: &Family3, slots: &[(bool, usize, usize)]) -> Option<CoboundaryPair> {
    let module = &target.module;
    let g = module.group();
    let m = g.order();
    // δ² is additive, so each candidate's image is the sum of per-slot images
    let unit_images: Vec<Vec<Vec<usize>>> = slots
        .iter()
        .map(|&s| {
            (0..m)
                .map(|v| {
                    let mut c = CoboundaryPair::zero(module);
                    c.set(s, v);
                    delta2(&c).key()
                })
                .collect()
        })
        .collect();
    let goal = target.key();
    let len = goal.len();
    let mut choice = vec![0usize; slots.len()];
    let mut partial: Vec<Vec<usize>> = vec![vec![0; len]; slots.len() + 1];
    // depth-first over slots, first slot most significant
    fn rec(
        depth: usize,
        units: &[Vec<Vec<usize>>],
        g: &FinAbGroup,
        goal: &[usize],
        choice: &mut Vec<usize>,
        partial: &mut Vec<Vec<usize>>,
    ) -> bool {
        if depth == units.len() {
            return partial[depth] == goal;
        }
        for v in 0..g.order() {
            choice[depth] = v;
            let (lo, hi) = partial.split_at_mut(depth + 1);
            for ((o, &p), &u) in hi[0].iter_mut().zip(&lo[depth]).zip(&units[depth][v]) {
                *o = g.add(p, u);
            }
            if rec(depth + 1, units, g, goal, choice, partial) {
                return true;
            }
        }
        false
    }
    if rec(0, &unit_images, g, &goal, &mut choice, &mut partial) {
        let mut c = CoboundaryPair::zero(module);
        for (&s, &v) in slots.iter().zip(&choice) {
            c.set(s, v);
        }
        Some(c)
    } else {
        None
    }
}

/// `S = A × R` with `(a,x)+(b,y) = (a+b+f(x,y), x+y)` and
/// `(a,x)(b,y) = (ab+φ_x(b)+ψ_y(a)+g(x,y), xy)`; `(a, x)` has index `x·|A| + a`.
pub fn build_extension(p: &PreExtension, f: &[usize], g: &[usize]) -> Result<Extension> {
    let (r, a) = (&p.r, &p.a);
    let (n, m) = (r.order(), a.order());
    let idx = |b: usize, x: usize| x * m + b;
    let add: Vec<Vec<usize>> = (0..n * m)
        .map(|i| {
            (0..n * m)
                .map(|j| {
                    let (ia, ix, ja, jx) = (i % m, i / m, j % m, j / m);
                    idx(a.group().sum([ia, ja, f[ix * n + jx]]), r.add(ix, jx))
                })
                .collect()
        })
        .collect();
    let mul: Vec<Vec<usize>> = (0..n * m)
        .map(|i| {
            (0..n * m)
                .map(|j| {
                    let (ia, ix, ja, jx) = (i % m, i / m, j % m, j / m);
                    let v = a.group().sum([a.mul(ia, ja), p.phi[ix].apply(ja), p.psi[jx].apply(ia), g[ix * n + jx]]);
                    idx(v, r.mul(ix, jx))
                })
                .collect()
        })
        .collect();
    let s = FinRing::from_tables(format!("S[{}]", r.name()), &add, &mul, Some(idx(0, r.require_one()?)))?;
    let rep = s.validate();
    if !rep.is_empty() {
        return Err(Error::invalid("constructed S fails the ring axioms", rep));
    }
    let ext = Extension {
        r: r.clone(),
        a: a.clone(),
        s,
        chi: (0..m).map(|b| idx(b, 0)).collect(),
        sigma: (0..n * m).map(|i| i / m).collect(),
    };
    let rep = ext.validate();
    if !rep.is_empty() {
        return Err(Error::invalid("constructed extension", rep));
    }
    Ok(ext)
}

/// Result of [`vanish_and_build`].
#[derive(Clone, Debug)]
pub struct Vanishing {
    pub obstruction: Family3,
    pub witness: CoboundaryPair,
    pub f: Vec<usize>,
    pub g: Vec<usize>,
    pub extension: Extension,
}

/// Computes the obstruction of `p`; if it is a coboundary `δ²(ν, μ)`, builds the
/// extension from `(f − μ, g − ν)`.
pub fn vanish_and_build(p: &PreExtension, guards: &Guards) -> Result<Option<Vanishing>> {
    let rep = validate_pre_extension(p);
    if !rep.is_empty() {
        return Err(Error::invalid("invalid pre-extension", rep));
    }
    let ka = ka_bimodule(p)?;
    let (f, g) = choose_fg(p)?;
    let k = compute_obstruction_in(p, &ka, &f, &g)?;
    let zero = Family3::zero(&ka.module);
    let Some(w) = are_cohomologous(&zero, &k, guards)? else {
        return Ok(None);
    };
    let a = p.a.group();
    let n = p.r.order();
    let f2: Vec<usize> = (0..n * n).map(|i| a.sub(f[i], ka.embed(w.mu[i]))).collect();
    let g2: Vec<usize> = (0..n * n).map(|i| a.sub(g[i], ka.embed(w.nu[i]))).collect();
    let extension = build_extension(p, &f2, &g2)?;
    Ok(Some(Vanishing { obstruction: k, witness: w, f: f2, g: g2, extension }))
}

/// All pairwise inequivalent extensions realizing `p`, built from every
/// compatible `(f, g)` whose obstruction vanishes identically.
pub fn classify_extensions(p: &PreExtension, guards: &Guards) -> Result<Vec<Extension>> {
    let rep = validate_pre_extension(p);
    if !rep.is_empty() {
        return Err(Error::invalid("invalid pre-extension", rep));
    }
    let ka = ka_bimodule(p)?;
    let (f0, g0) = choose_fg(p)?;
    let sols = fg_solutions(p);
    let n = p.r.order();
    let one = p.r.require_one()?;
    // free positions: f at nonzero pairs, g at pairs avoiding 0 and 1
    let mut positions: Vec<(bool, usize)> = Vec::new();
    for x in 1..n {
        for y in 1..n {
            positions.push((true, x * n + y));
        }
    }
    for x in (1..n).filter(|&x| x != one) {
        for y in (1..n).filter(|&y| y != one) {
            positions.push((false, x * n + y));
        }
    }
    let kk = ka.sub.order();
    guards.search_space("extension classification", kk, positions.len())?;
    let a = p.a.group();
    let mut found = Vec::new();
    let mut choice = vec![0usize; positions.len()];
    loop {
        let mut f = f0.clone();
        let mut g = g0.clone();
        for (&(is_f, i), &c) in positions.iter().zip(&choice) {
            if is_f {
                f[i] = a.add(f0[i], ka.embed(c));
            } else {
                g[i] = a.add(g0[i], ka.embed(c));
            }
        }
        debug_assert!((0..n * n).all(|i| sols.f[i].contains(&f[i]) && sols.g[i].contains(&g[i])));
        if compute_obstruction_in(p, &ka, &f, &g)?.is_zero() {
            found.push(build_extension(p, &f, &g)?);
        }
        let mut i = choice.len();
        loop {
            if i == 0 {
                let classes = equivalence_classes(&found, guards)?;
                return Ok(classes.into_iter().map(|c| found[c[0]].clone()).collect());
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < kk {
                break;
            }
            choice[i] = 0;
        }
    }
}
