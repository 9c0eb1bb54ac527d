//! Ann-categories of type `(R, A)`: objects are the elements of `R`, every
//! hom-set `Hom(s, s)` is `{s} × A`, and a structure is a constraint family
//! `(ξ, η, α, λ, ρ)` with values in `A`.

use crate::algebra::BimoduleAction;
use crate::cochain3::{relation_report, CoboundaryPair, Family3, RelationCheck};
use crate::error::{Error, Result};
use crate::guard::Guards;
use crate::obstruction::are_cohomologous;
use crate::report::Report;

/// An arrow `s → s` labelled by an element of `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub object: usize,
    pub label: usize,
}

impl Morphism {
    pub fn identity(object: usize) -> Self {
        Morphism { object, label: 0 }
    }
}

/// Composition adds labels.
pub fn compose(m: &BimoduleAction, a: Morphism, b: Morphism) -> Result<Morphism> {
    if a.object != b.object {
        return Err(Error::Precondition(format!("cannot compose arrows on objects {} and {}", a.object, b.object)));
    }
    Ok(Morphism { object: a.object, label: m.group().add(a.label, b.label) })
}

/// `(r,u) ⊕ (s,v) = (r+s, u+v)`.
pub fn oplus(m: &BimoduleAction, a: Morphism, b: Morphism) -> Morphism {
    Morphism { object: m.ring().add(a.object, b.object), label: m.group().add(a.label, b.label) }
}

/// `(r,u) ⊗ (s,v) = (rs, rv + us)`.
pub fn otimes(m: &BimoduleAction, a: Morphism, b: Morphism) -> Morphism {
    Morphism {
        object: m.ring().mul(a.object, b.object),
        label: m.group().add(m.left(a.object, b.label), m.right(a.label, b.object)),
    }
}

/// Constraint family of an Ann-category of type `(R, A)`; the unit constraints
/// are the identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnStructure {
    pub constraints: Family3,
}

impl AnnStructure {
    pub fn new(constraints: Family3) -> Self {
        AnnStructure { constraints }
    }

    pub fn zero(m: &BimoduleAction) -> Self {
        AnnStructure { constraints: Family3::zero(m) }
    }

    pub fn module(&self) -> &BimoduleAction {
        &self.constraints.module
    }
}

/// Relations 1–4 and 6–18.
pub fn check_ann_structure(s: &AnnStructure) -> Report {
    relation_report(&s.constraints, |r| r != 5)
}

/// `η(x,x) = 0` for every `x`.
pub fn is_regular(s: &AnnStructure) -> bool {
    relation_report(&s.constraints, |r| r == 5).is_empty()
}

pub fn structure_from_obstruction(k: &Family3) -> Result<AnnStructure> {
    let check = RelationCheck::run(k);
    if !check.is_empty() {
        return Err(Error::invalid("obstruction family fails the relations", check.combined()));
    }
    Ok(AnnStructure::new(k.clone()))
}

/// `(ξ, η, α, −λ, ρ)`, defined for valid regular structures.
pub fn structure_to_shukla_cocycle(s: &AnnStructure) -> Result<Family3> {
    let rep = check_ann_structure(s);
    if !rep.is_empty() {
        return Err(Error::invalid("not an Ann-category structure", rep));
    }
    if !is_regular(s) {
        return Err(Error::Precondition("structure is not regular (η(x,x) ≠ 0 somewhere)".into()));
    }
    Ok(s.constraints.negate_lambda())
}

pub fn structure_from_shukla_cocycle(k: &Family3) -> AnnStructure {
    AnnStructure::new(k.negate_lambda())
}

/// An Ann-functor that is the identity on objects, with `F̆_{x,y}: Fx ⊕ Fy → F(x+y)`
/// and `F̃_{x,y}: Fx ⊗ Fy → F(xy)` given by their labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnFunctorData {
    pub module: BimoduleAction,
    pub f_plus: Vec<usize>,
    pub f_times: Vec<usize>,
}

impl AnnFunctorData {
    pub fn zero(m: &BimoduleAction) -> Self {
        let n = m.ring().order();
        AnnFunctorData { module: m.clone(), f_plus: vec![0; n * n], f_times: vec![0; n * n] }
    }

    pub fn from_pair(c: &CoboundaryPair) -> Self {
        AnnFunctorData { module: c.module.clone(), f_plus: c.mu.clone(), f_times: c.nu.clone() }
    }

    pub fn to_pair(&self) -> CoboundaryPair {
        CoboundaryPair { module: self.module.clone(), nu: self.f_times.clone(), mu: self.f_plus.clone() }
    }

    fn plus(&self, x: usize, y: usize) -> Morphism {
        let n = self.module.ring().order();
        Morphism { object: self.module.ring().add(x, y), label: self.f_plus[x * n + y] }
    }

    fn times(&self, x: usize, y: usize) -> Morphism {
        let n = self.module.ring().order();
        Morphism { object: self.module.ring().mul(x, y), label: self.f_times[x * n + y] }
    }
}

fn arrow(object: usize, label: usize) -> Morphism {
    Morphism { object, label }
}

/// Composite of a path, first arrow first.
fn path(m: &BimoduleAction, arrows: &[Morphism]) -> Result<Morphism> {
    let mut acc = Morphism::identity(arrows[0].object);
    for &a in arrows {
        acc = compose(m, acc, a)?;
    }
    Ok(acc)
}

/// Checks that `(id, F̆, F̃)` carries `s` to `s2`: the five coherence squares,
/// each evaluated as the labels of its two composite paths.
pub fn check_ann_functor(d: &AnnFunctorData, s: &AnnStructure, s2: &AnnStructure) -> Result<Report> {
    let m = &d.module;
    if s.module() != m || s2.module() != m {
        return Err(Error::Precondition("functor and structures have different types".into()));
    }
    let (r, k1, k2) = (m.ring(), &s.constraints, &s2.constraints);
    let one = r.require_one()?;
    let n = r.order();
    let mut rep = Report::new();
    for x in 0..n {
        for y in 0..n {
            let zero_arg = x == 0 || y == 0;
            if zero_arg && (d.f_plus[x * n + y] != 0 || d.f_times[x * n + y] != 0) {
                rep.push("functor data vanish on 0", &[x, y]);
            }
            if (x == one || y == one) && d.f_times[x * n + y] != 0 {
                rep.push("F̃ vanishes on 1", &[x, y]);
            }
            // commutativity: Fx⊕Fy → F(x+y) → F(y+x)  vs  Fx⊕Fy → Fy⊕Fx → F(y+x)
            let xy = r.add(x, y);
            let p1 = path(m, &[d.plus(x, y), arrow(xy, k1.eta(x, y))])?;
            let p2 = path(m, &[arrow(xy, k2.eta(x, y)), d.plus(y, x)])?;
            if p1 != p2 {
                rep.push("⊕-commutativity square", &[x, y]);
            }
            for z in 0..n {
                let (yz, xy_z) = (r.add(y, z), r.add(xy, z));
                // Fx⊕(Fy⊕Fz) → Fx⊕F(y+z) → F(x+(y+z)) → F((x+y)+z)
                let p1 = path(
                    m,
                    &[oplus(m, Morphism::identity(x), d.plus(y, z)), d.plus(x, yz), arrow(xy_z, k1.xi(x, y, z))],
                )?;
                // Fx⊕(Fy⊕Fz) → (Fx⊕Fy)⊕Fz → F(x+y)⊕Fz → F((x+y)+z)
                let p2 = path(
                    m,
                    &[arrow(xy_z, k2.xi(x, y, z)), oplus(m, d.plus(x, y), Morphism::identity(z)), d.plus(xy, z)],
                )?;
                if p1 != p2 {
                    rep.push("⊕-associativity square", &[x, y, z]);
                }
                let (xyz_t, yz_t) = (r.mul(r.mul(x, y), z), r.mul(y, z));
                let p1 = path(
                    m,
                    &[otimes(m, Morphism::identity(x), d.times(y, z)), d.times(x, yz_t), arrow(xyz_t, k1.alpha(x, y, z))],
                )?;
                let p2 = path(
                    m,
                    &[
                        arrow(xyz_t, k2.alpha(x, y, z)),
                        otimes(m, d.times(x, y), Morphism::identity(z)),
                        d.times(r.mul(x, y), z),
                    ],
                )?;
                if p1 != p2 {
                    rep.push("⊗-associativity square", &[x, y, z]);
                }
                // Fx(Fy⊕Fz) → FxF(y+z) → F(x(y+z)) → F(xy+xz)  vs  → FxFy⊕FxFz → F(xy)⊕F(xz) → F(xy+xz)
                let (mxy, mxz) = (r.mul(x, y), r.mul(x, z));
                let target = r.add(mxy, mxz);
                let p1 = path(
                    m,
                    &[otimes(m, Morphism::identity(x), d.plus(y, z)), d.times(x, yz), arrow(target, k1.lambda(x, y, z))],
                )?;
                let p2 = path(
                    m,
                    &[arrow(target, k2.lambda(x, y, z)), oplus(m, d.times(x, y), d.times(x, z)), d.plus(mxy, mxz)],
                )?;
                if p1 != p2 {
                    rep.push("left distributivity square", &[x, y, z]);
                }
                let (mxz, myz) = (r.mul(x, z), r.mul(y, z));
                let target = r.add(mxz, myz);
                let p1 = path(
                    m,
                    &[otimes(m, d.plus(x, y), Morphism::identity(z)), d.times(xy, z), arrow(target, k1.rho(x, y, z))],
                )?;
                let p2 = path(
                    m,
                    &[arrow(target, k2.rho(x, y, z)), oplus(m, d.times(x, z), d.times(y, z)), d.plus(mxz, myz)],
                )?;
                if p1 != p2 {
                    rep.push("right distributivity square", &[x, y, z]);
                }
            }
        }
    }
    Ok(rep)
}

/// An Ann-functor `(id, F̆, F̃)` from `s` to `s2`, if one exists.
pub fn cohomologous_structures(s: &AnnStructure, s2: &AnnStructure, guards: &Guards) -> Result<Option<AnnFunctorData>> {
    let Some(c) = are_cohomologous(&s.constraints, &s2.constraints, guards)? else {
        return Ok(None);
    };
    let d = AnnFunctorData::from_pair(&c);
    let rep = check_ann_functor(&d, s, s2)?;
    if !rep.is_empty() {
        return Err(Error::invalid("coboundary witness is not an Ann-functor", rep));
    }
    Ok(Some(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog;
    use crate::cochain3::delta2;

    fn z2() -> BimoduleAction {
        BimoduleAction::regular(&catalog::zmod(2)).unwrap()
    }

    #[test]
    fn morphism_calculus() {
        let m = z2();
        let a = Morphism { object: 1, label: 1 };
        assert_eq!(otimes(&m, a, a), Morphism { object: 1, label: 0 });
        assert_eq!(otimes(&m, Morphism::identity(1), a), a);
        assert_eq!(compose(&m, a, a).unwrap(), Morphism { object: 1, label: 0 });
        assert!(compose(&m, a, Morphism::identity(0)).is_err());
        assert_eq!(oplus(&m, a, a), Morphism { object: 0, label: 0 });
    }

    #[test]
    fn eta_one_one_is_not_regular() {
        let mut k = Family3::zero(&z2());
        k.eta[3] = 1;
        let s = AnnStructure::new(k);
        assert!(!is_regular(&s));
    }

    #[test]
    fn functor_squares_match_delta2() {
        let m = BimoduleAction::regular(&catalog::zmod(3)).unwrap();
        let mut c = CoboundaryPair::zero(&m);
        c.mu[3 + 2] = 1;
        c.mu[2 * 3 + 1] = 2;
        c.nu[2 * 3 + 2] = 1;
        let s = AnnStructure::zero(&m);
        let s2 = AnnStructure::new(delta2(&c));
        let d = AnnFunctorData::from_pair(&c);
        assert!(check_ann_functor(&d, &s, &s2).unwrap().is_empty());
        assert!(!check_ann_functor(&AnnFunctorData::zero(&m), &s, &s2).unwrap().is_empty());
    }
}
