//! Ring extensions `0 → A → S → R → 0` as explicit tables, sections, and the
//! search for equivalences (isomorphisms of `S` fixing `A` and `R`).

use crate::algebra::FinRing;
use crate::error::{Error, Result};
use crate::guard::Guards;
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    pub r: FinRing,
    pub a: FinRing,
    pub s: FinRing,
    /// `chi[a]` is the image of `a ∈ A` in `S`.
    pub chi: Vec<usize>,
    /// `sigma[s]` is the image of `s ∈ S` in `R`.
    pub sigma: Vec<usize>,
}

impl Extension {
    /// The extension given by a surjection `sigma: S → R` with `A = ker σ`.
    pub fn from_surjection(s: &FinRing, r: &FinRing, sigma: &[usize]) -> Result<Self> {
        if !s.is_homomorphism(r, sigma, true) {
            return Err(Error::Precondition("sigma is not a unital ring homomorphism".into()));
        }
        let kernel: Vec<usize> = s.elements().filter(|&e| sigma[e] == 0).collect();
        let (a, chi) = s.subring(format!("ker({})", s.name()), &kernel)?;
        let ext = Extension { r: r.clone(), a, s: s.clone(), chi, sigma: sigma.to_vec() };
        let rep = ext.validate();
        if !rep.is_empty() {
            return Err(Error::invalid("extension from surjection", rep));
        }
        Ok(ext)
    }

    /// All unital surjections `S → R`, lexicographic by table.
    pub fn surjections(s: &FinRing, r: &FinRing, guards: &Guards) -> Result<Vec<Vec<usize>>> {
        guards.search_space("ring homomorphisms S -> R", r.order(), s.order().saturating_sub(1))?;
        let mut out = Vec::new();
        let mut map = vec![0usize; s.order()];
        loop {
            if s.is_homomorphism(r, &map, true) && r.elements().all(|x| map.contains(&x)) {
                out.push(map.clone());
            }
            let mut i = 1;
            loop {
                if i >= map.len() {
                    return Ok(out);
                }
                map[i] += 1;
                if map[i] < r.order() {
                    break;
                }
                map[i] = 0;
                i += 1;
            }
        }
    }

    pub fn validate(&self) -> Report {
        let mut rep = Report::new();
        let (r, a, s) = (&self.r, &self.a, &self.s);
        for (name, ring) in [("R", r), ("A", a), ("S", s)] {
            for v in ring.validate().violations {
                rep.push(format!("{name}: {}", v.rule), &v.witness);
            }
        }
        if self.chi.len() != a.order() || self.sigma.len() != s.order() {
            rep.push("table shapes", &[]);
            return rep;
        }
        if r.one().is_none() || s.one().is_none() {
            rep.push("R and S have identities", &[]);
            return rep;
        }
        for x in a.elements() {
            for y in a.elements() {
                if self.chi[a.add(x, y)] != s.add(self.chi[x], self.chi[y]) {
                    rep.push("chi additive", &[x, y]);
                }
                if self.chi[a.mul(x, y)] != s.mul(self.chi[x], self.chi[y]) {
                    rep.push("chi multiplicative", &[x, y]);
                }
                if x < y && self.chi[x] == self.chi[y] {
                    rep.push("chi injective", &[x, y]);
                }
            }
        }
        if !s.is_homomorphism(r, &self.sigma, true) {
            rep.push("sigma unital ring homomorphism", &[]);
        }
        for x in r.elements() {
            if !self.sigma.contains(&x) {
                rep.push("sigma surjective", &[x]);
            }
        }
        for e in s.elements() {
            let in_image = self.chi.contains(&e);
            if in_image != (self.sigma[e] == 0) {
                rep.push("image(chi) = kernel(sigma)", &[e]);
            }
        }
        rep
    }

    /// True when `χ(A)² = 0` in `S`.
    pub fn is_singular(&self) -> bool {
        self.a.has_zero_multiplication()
    }

    /// Index of `χ(a) ∈ S` by `a`, or `None` if `e ∉ χ(A)`.
    pub fn chi_inverse(&self, e: usize) -> Option<usize> {
        self.chi.iter().position(|&v| v == e)
    }

    /// Whether `u` is a set-theoretic section with `u(0) = 0`; `unital` also
    /// demands `u(1) = 1_S`.
    pub fn is_section(&self, u: &[usize], unital: bool) -> bool {
        u.len() == self.r.order()
            && u.iter().all(|&v| v < self.s.order())
            && u[0] == 0
            && u.iter().enumerate().all(|(x, &v)| self.sigma[v] == x)
            && (!unital || Some(u[self.r.one().unwrap_or(0)]) == self.s.one())
    }

    /// All sections with `u(0) = 0` (and `u(1) = 1_S` when `unital`), lexicographic.
    pub fn sections(&self, unital: bool) -> Vec<Vec<usize>> {
        let fibres: Vec<Vec<usize>> =
            self.r.elements().map(|x| self.s.elements().filter(|&e| self.sigma[e] == x).collect()).collect();
        let mut out = vec![vec![]];
        for (x, fibre) in fibres.iter().enumerate() {
            let allowed: Vec<usize> = if x == 0 {
                vec![0]
            } else if unital && Some(x) == self.r.one() {
                vec![self.s.one().expect("S has identity")]
            } else {
                fibre.clone()
            };
            out = out
                .into_iter()
                .flat_map(|p: Vec<usize>| {
                    allowed.iter().map(move |&v| {
                        let mut q = p.clone();
                        q.push(v);
                        q
                    })
                })
                .collect();
        }
        out
    }

    /// The least unital section.
    pub fn canonical_section(&self) -> Vec<usize> {
        self.sections(true).into_iter().next().expect("a unital section exists")
    }
}

/// Searches for a ring isomorphism `Θ: S₁ → S₂` with `Θ∘χ₁ = χ₂` and
/// `σ₂∘Θ = σ₁`. Returns the table of `Θ`.
pub fn find_equivalence(e1: &Extension, e2: &Extension, guards: &Guards) -> Result<Option<Vec<usize>>> {
    if e1.r != e2.r || e1.a.group() != e2.a.group() || e1.s.order() != e2.s.order() {
        return Err(Error::Precondition("extensions must share R and the group of A".into()));
    }
    let (r, a) = (&e1.r, &e1.a);
    guards.search_space("extension equivalence", a.order(), r.order() - 1)?;
    let u1 = e1.sections(false).into_iter().next().expect("section exists");
    let u2 = e2.sections(false).into_iter().next().expect("section exists");
    // decompose every element of S₁ as χ₁(a) + u₁(x)
    let mut decomp = vec![(0usize, 0usize); e1.s.order()];
    for x in r.elements() {
        for b in a.elements() {
            decomp[e1.s.add(e1.chi[b], u1[x])] = (b, x);
        }
    }
    let mut t = vec![0usize; r.order()];
    loop {
        let theta: Vec<usize> = decomp
            .iter()
            .map(|&(b, x)| e2.s.add(e2.chi[a.add(b, t[x])], u2[x]))
            .collect();
        if e1.s.is_homomorphism(&e2.s, &theta, true) {
            return Ok(Some(theta));
        }
        let mut i = 1;
        loop {
            if i >= t.len() {
                return Ok(None);
            }
            t[i] += 1;
            if t[i] < a.order() {
                break;
            }
            t[i] = 0;
            i += 1;
        }
    }
}

/// Greedy partition of extensions into equivalence classes; each class is listed
/// by the indices of its members in input order.
pub fn equivalence_classes(exts: &[Extension], guards: &Guards) -> Result<Vec<Vec<usize>>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    'outer: for (i, e) in exts.iter().enumerate() {
        for class in classes.iter_mut() {
            if find_equivalence(&exts[class[0]], e, guards)?.is_some() {
                class.push(i);
                continue 'outer;
            }
        }
        classes.push(vec![i]);
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog;

    #[test]
    fn z4_over_z2() {
        let s = catalog::zmod(4);
        let r = catalog::zmod(2);
        let sig = Extension::surjections(&s, &r, &Guards::default()).unwrap();
        assert_eq!(sig, vec![vec![0, 1, 0, 1]]);
        let e = Extension::from_surjection(&s, &r, &sig[0]).unwrap();
        assert_eq!(e.chi, vec![0, 2]);
        assert!(!e.is_singular() || e.a.has_zero_multiplication());
        assert_eq!(e.sections(true), vec![vec![0, 1]]);
        assert_eq!(e.sections(false), vec![vec![0, 1], vec![0, 3]]);
        assert!(find_equivalence(&e, &e, &Guards::default()).unwrap().is_some());
    }
}
