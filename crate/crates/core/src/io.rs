//! JSON file formats. Nested rings and bimodules may be given inline, as a
//! path relative to the referencing file, or as `"builtin:<name>"`.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::algebra::{catalog, AdditiveEndo, BimoduleAction, FinAbGroup, FinRing};
use crate::ann::{AnnFunctorData, AnnStructure};
use crate::cochain3::{Component, Family3, Slot};
use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::factor_sets::TwoCochain;
use crate::obstruction::PreExtension;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RingFile {
    pub name: String,
    pub order: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub one: Option<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupFile {
    pub order: usize,
    pub add: Vec<Vec<usize>>,
}

/// `left`/`right` may be omitted together with `group` when `regular` is set.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BimoduleFile {
    pub ring: Ref<RingFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub regular: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Ref<T> {
    Path(String),
    Inline(T),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CochainFile {
    pub bimodule: Ref<BimoduleFile>,
    pub f: Vec<Vec<usize>>,
    pub g: Vec<Vec<usize>>,
}

/// `S` with `σ: S → R`; `chi` and `a` are filled in on output.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExtensionFile {
    pub s: RingFile,
    pub r: Ref<RingFile>,
    pub sigma: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<RingFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PreExtensionFile {
    pub r: Ref<RingFile>,
    pub a: Ref<RingFile>,
    pub phi: Vec<Vec<usize>>,
    pub psi: Vec<Vec<usize>>,
}

/// Five value tables keyed by `"x,y,z"`; absent keys are zero.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyFile {
    #[serde(default, rename = "type", skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    pub module: Ref<BimoduleFile>,
    #[serde(default)]
    pub xi: BTreeMap<String, usize>,
    #[serde(default)]
    pub eta: BTreeMap<String, usize>,
    #[serde(default)]
    pub alpha: BTreeMap<String, usize>,
    #[serde(default)]
    pub lambda: BTreeMap<String, usize>,
    #[serde(default)]
    pub rho: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FunctorFile {
    pub module: Ref<BimoduleFile>,
    pub f_plus: Vec<Vec<usize>>,
    pub f_times: Vec<Vec<usize>>,
}

pub const ANN_STRUCTURE_TYPE: &str = "ann-structure";

/// Named rings accepted as `"builtin:<name>"`.
pub fn builtin_ring(name: &str) -> Result<FinRing> {
    if let Some(n) = name.strip_prefix("Z/") {
        if let Some((n, k)) = n.split_once('(') {
            let n: usize = n.parse().map_err(|_| Error::malformed(format!("bad builtin ring {name}")))?;
            let k: usize = k
                .trim_end_matches(')')
                .trim_end_matches("ab")
                .parse()
                .map_err(|_| Error::malformed(format!("bad builtin ring {name}")))?;
            return Ok(catalog::scaled_zmod(n, k));
        }
        let n: usize = n.parse().map_err(|_| Error::malformed(format!("bad builtin ring {name}")))?;
        if n == 0 {
            return Err(Error::malformed("Z/0 is not finite"));
        }
        return Ok(catalog::zmod(n));
    }
    match name {
        "F4" => Ok(catalog::f4()),
        "F2[e]" => Ok(catalog::f2_dual()),
        "Z2xZ2" => Ok(catalog::product(&catalog::zmod(2), &catalog::zmod(2))),
        _ => Err(Error::malformed(format!("unknown builtin ring {name}"))),
    }
}

fn parse_file<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::malformed(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::malformed(format!("{}: {e}", path.display())))
}

/// Resolves references relative to a base directory.
#[derive(Clone, Debug)]
pub struct Loader {
    pub base: PathBuf,
}

impl Loader {
    pub fn for_file(path: &Path) -> Self {
        Loader { base: path.parent().map(Path::to_path_buf).unwrap_or_default() }
    }

    fn child(&self, rel: &str) -> (PathBuf, Loader) {
        let p = self.base.join(rel);
        let l = Loader::for_file(&p);
        (p, l)
    }

    pub fn ring(&self, r: &Ref<RingFile>) -> Result<FinRing> {
        match r {
            Ref::Path(p) => match p.strip_prefix("builtin:") {
                Some(name) => builtin_ring(name),
                None => {
                    let (path, _) = self.child(p);
                    ring_from_file(&parse_file(&path)?)
                }
            },
            Ref::Inline(f) => ring_from_file(f),
        }
    }

    pub fn bimodule(&self, b: &Ref<BimoduleFile>) -> Result<BimoduleAction> {
        match b {
            Ref::Path(p) => {
                let (path, l) = self.child(p);
                l.bimodule_file(&parse_file(&path)?)
            }
            Ref::Inline(f) => self.bimodule_file(f),
        }
    }

    pub fn bimodule_file(&self, f: &BimoduleFile) -> Result<BimoduleAction> {
        let ring = self.ring(&f.ring)?;
        if f.regular {
            if f.group.is_some() || f.left.is_some() || f.right.is_some() {
                return Err(Error::malformed("a regular bimodule takes no group or action tables"));
            }
            return BimoduleAction::regular(&ring);
        }
        let (Some(group), Some(left), Some(right)) = (&f.group, &f.left, &f.right) else {
            return Err(Error::malformed("bimodule needs group, left and right (or regular: true)"));
        };
        let group = group_from_file(group)?;
        BimoduleAction::from_tables(ring, group, left, right)
    }

    pub fn cochain(&self, f: &CochainFile) -> Result<TwoCochain> {
        TwoCochain::from_tables(&self.bimodule(&f.bimodule)?, &f.f, &f.g)
    }

    pub fn extension(&self, f: &ExtensionFile) -> Result<(Extension, Option<Vec<usize>>)> {
        let s = ring_from_file(&f.s)?;
        let r = self.ring(&f.r)?;
        if f.sigma.len() != s.order() || f.sigma.iter().any(|&v| v >= r.order()) {
            return Err(Error::malformed("sigma must list an element of R for every element of S"));
        }
        if let Some(u) = &f.u {
            if u.len() != r.order() || u.iter().any(|&v| v >= s.order()) {
                return Err(Error::malformed("u must list an element of S for every element of R"));
            }
        }
        Ok((Extension::from_surjection(&s, &r, &f.sigma)?, f.u.clone()))
    }

    pub fn pre_extension(&self, f: &PreExtensionFile) -> Result<PreExtension> {
        let r = self.ring(&f.r)?;
        let a = self.ring(&f.a)?;
        let endos = |name: &str, rows: &[Vec<usize>]| -> Result<Vec<AdditiveEndo>> {
            if rows.len() != r.order() || rows.iter().any(|t| t.len() != a.order() || t.iter().any(|&v| v >= a.order())) {
                return Err(Error::malformed(format!(
                    "{name} must hold {} tables of length {} with entries below {}",
                    r.order(),
                    a.order(),
                    a.order()
                )));
            }
            Ok(rows.iter().map(|t| AdditiveEndo { map: t.clone() }).collect())
        };
        let phi = endos("phi", &f.phi)?;
        let psi = endos("psi", &f.psi)?;
        PreExtension::new(r, a, phi, psi)
    }

    pub fn family(&self, f: &FamilyFile) -> Result<Family3> {
        let module = self.bimodule(&f.module)?;
        let mut k = Family3::zero(&module);
        let (n, m) = (module.ring().order(), module.group().order());
        for (c, table) in [
            (Component::Xi, &f.xi),
            (Component::Eta, &f.eta),
            (Component::Alpha, &f.alpha),
            (Component::Lambda, &f.lambda),
            (Component::Rho, &f.rho),
        ] {
            for (key, &value) in table {
                let args = parse_key(key, c.arity(), n).map_err(|e| Error::malformed(format!("{}: {e}", c.name())))?;
                if value >= m {
                    return Err(Error::malformed(format!("{}({key}) = {value} is not below {m}", c.name())));
                }
                k.set(&Slot { component: c, args }, value);
            }
        }
        Ok(k)
    }

    pub fn structure(&self, f: &FamilyFile) -> Result<AnnStructure> {
        match f.kind.as_deref() {
            None | Some(ANN_STRUCTURE_TYPE) => Ok(AnnStructure::new(self.family(f)?)),
            Some(other) => Err(Error::malformed(format!("expected type {ANN_STRUCTURE_TYPE}, found {other}"))),
        }
    }

    pub fn functor(&self, f: &FunctorFile) -> Result<AnnFunctorData> {
        let module = self.bimodule(&f.module)?;
        let (n, m) = (module.ring().order(), module.group().order());
        let flat = |name: &str, t: &[Vec<usize>]| -> Result<Vec<usize>> {
            if t.len() != n || t.iter().any(|row| row.len() != n || row.iter().any(|&v| v >= m)) {
                return Err(Error::malformed(format!("{name} must be a {n}x{n} table with entries below {m}")));
            }
            Ok(t.iter().flatten().copied().collect())
        };
        Ok(AnnFunctorData { f_plus: flat("f_plus", &f.f_plus)?, f_times: flat("f_times", &f.f_times)?, module })
    }
}

fn parse_key(key: &str, arity: usize, n: usize) -> std::result::Result<Vec<usize>, String> {
    let args: Vec<usize> = key
        .split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|_| format!("bad key {key:?}")))
        .collect::<std::result::Result<_, _>>()?;
    if args.len() != arity {
        return Err(format!("key {key:?} needs {arity} arguments"));
    }
    if args.iter().any(|&a| a >= n) {
        return Err(format!("key {key:?} has an argument outside 0..{n}"));
    }
    Ok(args)
}

pub fn load<T: DeserializeOwned>(path: &Path) -> Result<(T, Loader)> {
    Ok((parse_file(path)?, Loader::for_file(path)))
}

pub fn ring_from_file(f: &RingFile) -> Result<FinRing> {
    if f.add.len() != f.order || f.mul.len() != f.order {
        return Err(Error::malformed(format!("ring {} declares order {} but its tables differ", f.name, f.order)));
    }
    FinRing::from_tables(f.name.clone(), &f.add, &f.mul, f.one)
}

pub fn group_from_file(f: &GroupFile) -> Result<FinAbGroup> {
    if f.add.len() != f.order {
        return Err(Error::malformed(format!("group declares order {} but its table has {} rows", f.order, f.add.len())));
    }
    FinAbGroup::from_table(&f.add)
}

pub fn ring_to_file(r: &FinRing) -> RingFile {
    RingFile { name: r.name().to_string(), order: r.order(), add: r.add_rows(), mul: r.mul_rows(), one: r.one() }
}

pub fn bimodule_to_file(m: &BimoduleAction) -> BimoduleFile {
    BimoduleFile {
        ring: Ref::Inline(ring_to_file(m.ring())),
        group: Some(GroupFile { order: m.group().order(), add: m.group().table_rows() }),
        left: Some(m.left_rows()),
        right: Some(m.right_rows()),
        regular: false,
    }
}

pub fn cochain_to_file(c: &TwoCochain) -> CochainFile {
    CochainFile { bimodule: Ref::Inline(bimodule_to_file(&c.bimodule)), f: c.f_rows(), g: c.g_rows() }
}

pub fn extension_to_file(e: &Extension, u: Option<&[usize]>) -> ExtensionFile {
    ExtensionFile {
        s: ring_to_file(&e.s),
        r: Ref::Inline(ring_to_file(&e.r)),
        sigma: e.sigma.clone(),
        chi: Some(e.chi.clone()),
        a: Some(ring_to_file(&e.a)),
        u: u.map(<[usize]>::to_vec),
    }
}

pub fn pre_extension_to_file(p: &PreExtension) -> PreExtensionFile {
    PreExtensionFile {
        r: Ref::Inline(ring_to_file(&p.r)),
        a: Ref::Inline(ring_to_file(&p.a)),
        phi: p.phi.iter().map(|e| e.map.clone()).collect(),
        psi: p.psi.iter().map(|e| e.map.clone()).collect(),
    }
}

fn key(args: &[usize]) -> String {
    args.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

/// Nonzero entries only.
pub fn family_to_file(k: &Family3, kind: Option<&str>) -> FamilyFile {
    let n = k.module.ring().order();
    let mut out = FamilyFile {
        kind: kind.map(str::to_string),
        module: Ref::Inline(bimodule_to_file(&k.module)),
        xi: BTreeMap::new(),
        eta: BTreeMap::new(),
        alpha: BTreeMap::new(),
        lambda: BTreeMap::new(),
        rho: BTreeMap::new(),
    };
    for c in [Component::Xi, Component::Eta, Component::Alpha, Component::Lambda, Component::Rho] {
        let table = match c {
            Component::Xi => &mut out.xi,
            Component::Eta => &mut out.eta,
            Component::Alpha => &mut out.alpha,
            Component::Lambda => &mut out.lambda,
            Component::Rho => &mut out.rho,
        };
        for (i, &v) in k.table(c).iter().enumerate() {
            if v != 0 {
                let args: Vec<usize> = (0..c.arity()).rev().map(|p| (i / n.pow(p as u32)) % n).collect();
                table.insert(key(&args), v);
            }
        }
    }
    out
}

pub fn functor_to_file(d: &AnnFunctorData) -> FunctorFile {
    let n = d.module.ring().order();
    FunctorFile {
        module: Ref::Inline(bimodule_to_file(&d.module)),
        f_plus: d.f_plus.chunks(n).map(<[usize]>::to_vec).collect(),
        f_times: d.f_times.chunks(n).map(<[usize]>::to_vec).collect(),
    }
}
