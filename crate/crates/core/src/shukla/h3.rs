use std::collections::{HashSet, VecDeque};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::algebra::{BimoduleAction, Presentation};
use crate::cochain3::{delta2, evaluate_relations, relation_report, CoboundaryPair, Family3, Slot, TupleCochain3};
use crate::error::{Error, Result};
use crate::guard::Guards;
use crate::report::Report;
use crate::zlinalg::modular::exact_quotient;
use crate::zlinalg::ModLattice;

/// Largest coboundary group that is materialized to find lexicographically
/// least representatives.
const LEX_LEAST_LIMIT: u64 = 1 << 14;

/// Shukla cocycle test: the eighteen relations applied to `(ξ, η, α, −λ, ρ)`.
pub fn cocycle3_check(k: &TupleCochain3) -> Report {
    relation_report(&k.negate_lambda(), |_| true)
}

/// Normalized degree-3 tuples over `M` as coordinate vectors in `(ℤ/e)^{ms}`:
/// one block of `m` coordinates (one per generator of `M`) for each free slot.
pub(crate) struct TupleComplex {
    module: BimoduleAction,
    pres: Presentation,
    slots: Vec<Slot>,
    cob_slots: Vec<(bool, usize, usize)>,
}

impl TupleComplex {
    pub(crate) fn new(module: &BimoduleAction) -> Result<Self> {
        module.ring().require_one()?;
        let rep = module.validate();
        if !rep.is_empty() {
            return Err(Error::invalid("coefficient bimodule", rep));
        }
        Ok(TupleComplex {
            module: module.clone(),
            pres: Presentation::new(module.group()),
            slots: Family3::free_slots(module.ring().order()),
            cob_slots: CoboundaryPair::free_slots(module),
        })
    }

    fn m(&self) -> usize {
        self.pres.rank()
    }

    fn dim(&self) -> usize {
        self.m() * self.slots.len()
    }

    fn e(&self) -> u64 {
        self.pres.exponent
    }

    /// Coordinates of a normalized family, or `None` if it is nonzero off the free slots.
    fn coords(&self, k: &Family3) -> Option<Vec<i64>> {
        let mut rest = k.clone();
        let mut out = Vec::with_capacity(self.dim());
        for s in &self.slots {
            out.extend_from_slice(&self.pres.coords[k.get(s)]);
            rest.set(s, 0);
        }
        rest.is_zero().then_some(out)
    }

    fn family(&self, v: &[i64]) -> Family3 {
        let m = self.m();
        let mut k = Family3::zero(&self.module);
        for (i, s) in self.slots.iter().enumerate() {
            k.set(s, self.pres.element(self.module.group(), &v[i * m..(i + 1) * m]));
        }
        k
    }

    fn unit_family(&self, slot: usize, gen: usize) -> Family3 {
        let mut k = Family3::zero(&self.module);
        k.set(&self.slots[slot], self.pres.generators[gen]);
        k
    }

    /// `Z̃`: coordinate vectors whose family satisfies every relation.
    fn cocycles(&self) -> ModLattice {
        let (m, e, dim) = (self.m(), self.e(), self.dim());
        let mut values: Vec<Vec<usize>> = Vec::new();
        for unit in 0..dim {
            let k = self.unit_family(unit / m, unit % m);
            let mut col = Vec::new();
            evaluate_relations(&k, |_, _, v| col.push(v));
            values.push(col);
        }
        let instances = values.first().map_or(0, |c| c.len());
        let mut rows = ModLattice::new(dim, e);
        for inst in 0..instances {
            let projected: Vec<Vec<i64>> = (0..dim).map(|u| self.pres.project(&self.pres.coords[values[u][inst]])).collect();
            for i in 0..self.pres.pi.len() {
                let row: Vec<i64> = projected.iter().map(|p| p[i]).collect();
                if row.iter().any(|&x| x != 0) {
                    rows.insert(&row);
                }
            }
        }
        let mut z = ModLattice::new(dim, e);
        for g in rows.annihilator_generators() {
            z.insert(&g);
        }
        z
    }

    /// `N^s`, the coordinate vectors of the zero family.
    fn insert_relations(&self, lat: &mut ModLattice) {
        let (m, dim) = (self.m(), self.dim());
        for t in 0..self.slots.len() {
            for r in &self.pres.relations {
                let mut v = vec![0i64; dim];
                v[t * m..(t + 1) * m].copy_from_slice(r);
                lat.insert(&v);
            }
        }
    }

    fn unit_pair(&self, slot: usize, gen: usize) -> CoboundaryPair {
        let mut c = CoboundaryPair::zero(&self.module);
        c.set(self.cob_slots[slot], self.pres.generators[gen]);
        c
    }

    /// `B̃ = im δ² + N^s`, tagged by the unit pairs so preimages can be read back.
    fn coboundaries(&self) -> Result<ModLattice> {
        let (m, e, dim) = (self.m(), self.e(), self.dim());
        let width = self.cob_slots.len() * m;
        let mut b = ModLattice::with_tags(dim, e, width);
        for u in 0..width {
            let img = delta2(&self.unit_pair(u / m, u % m));
            let v = self.coords(&img).ok_or_else(|| Error::Precondition("δ² image is not normalized".into()))?;
            let mut tag = vec![0i64; width];
            tag[u] = 1;
            b.insert_tagged(&v, &tag);
        }
        self.insert_relations(&mut b);
        Ok(b)
    }

    fn zero_lattice(&self) -> ModLattice {
        let mut n = ModLattice::new(self.dim(), self.e());
        self.insert_relations(&mut n);
        n
    }

    fn pair_from_tags(&self, c: &[i64]) -> CoboundaryPair {
        let m = self.m();
        let mut out = CoboundaryPair::zero(&self.module);
        for (k, &slot) in self.cob_slots.iter().enumerate() {
            out.set(slot, self.pres.element(self.module.group(), &c[k * m..(k + 1) * m]));
        }
        out
    }
}

/// `c` with `δ²c = target` (obstruction sign convention), solved exactly on
/// the coordinate lattice.
pub fn coboundary_preimage(target: &Family3) -> Result<Option<CoboundaryPair>> {
    let cx = TupleComplex::new(&target.module)?;
    let Some(v) = cx.coords(target) else {
        return Ok(None);
    };
    let b = cx.coboundaries()?;
    let Some(c) = b.express(&v) else {
        return Ok(None);
    };
    let pair = cx.pair_from_tags(&c);
    if delta2(&pair) != *target {
        return Err(Error::Precondition("lattice preimage does not reproduce the target".into()));
    }
    Ok(Some(pair))
}

#[derive(Clone, Debug)]
pub struct H3Result {
    pub order: BigUint,
    pub cocycles: BigUint,
    pub coboundaries: BigUint,
    /// One Shukla cocycle per class, sorted by table key.
    pub representatives: Vec<Family3>,
    /// Whether each representative is the lexicographically least tuple of its
    /// class (otherwise it is the canonical lattice representative).
    pub lex_least: bool,
}

/// `H³` of the normalized tuple complex with coefficients in `M`, computed on
/// the coordinate lattice: `|H³| = |Z̃| / |B̃|`.
pub fn h3_small(module: &BimoduleAction, guards: &Guards) -> Result<H3Result> {
    guards.check_ring("H3 base ring", module.ring().order())?;
    let cx = TupleComplex::new(module)?;
    let z = cx.cocycles();
    let b = cx.coboundaries()?;
    for row in b.basis_rows() {
        let r: Vec<i64> = row.iter().map(|&x| x as i64).collect();
        if !z.contains(&r) {
            return Err(Error::Precondition("a coboundary fails the relations".into()));
        }
    }
    let order = exact_quotient(&z.submodule_order(), &b.submodule_order());
    let zero = cx.zero_lattice().submodule_order();
    let cocycles = exact_quotient(&z.submodule_order(), &zero);
    let coboundaries = exact_quotient(&b.submodule_order(), &zero);
    let h = order.to_u64().filter(|&h| h <= guards.max_candidates).ok_or_else(|| Error::Guard {
        what: "H3 representatives".into(),
        needed: order.to_string(),
        bound: guards.max_candidates,
    })?;

    // classes by canonical form modulo B̃, walked breadth-first from zero
    let gens: Vec<Vec<i64>> = z.basis_rows().iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
    let start = b.reduce(&vec![0; cx.dim()]);
    let mut seen: HashSet<Vec<i64>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    let mut canon = Vec::new();
    while let Some(v) = queue.pop_front() {
        for g in &gens {
            let w = b.reduce(&v.iter().zip(g).map(|(a, b)| a + b).collect::<Vec<_>>());
            if seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
        canon.push(v);
    }
    debug_assert_eq!(canon.len() as u64, h);

    let boundary_count = coboundaries
        .to_u64()
        .filter(|&c| c <= LEX_LEAST_LIMIT && c.saturating_mul(h) <= guards.max_candidates);
    let (mut representatives, lex_least) = match boundary_count {
        Some(_) => {
            let boundaries = coboundary_set(&cx)?;
            let reps = canon
                .iter()
                .map(|v| {
                    let base = cx.family(v);
                    boundaries
                        .iter()
                        .map(|bd| base.add(bd).negate_lambda())
                        .min_by_key(|k| k.key())
                        .expect("zero is a coboundary")
                })
                .collect();
            (reps, true)
        }
        None => (canon.iter().map(|v| cx.family(v).negate_lambda()).collect::<Vec<_>>(), false),
    };
    representatives.sort_by_key(|k| k.key());
    Ok(H3Result { order, cocycles, coboundaries, representatives, lex_least })
}

/// Every `δ²(ν, μ)` as a family, by closing zero under the unit images.
fn coboundary_set(cx: &TupleComplex) -> Result<Vec<Family3>> {
    let m = cx.m();
    let units: Vec<Family3> = (0..cx.cob_slots.len() * m).map(|u| delta2(&cx.unit_pair(u / m, u % m))).collect();
    let zero = Family3::zero(&cx.module);
    let mut seen = HashSet::from([zero.key()]);
    let mut out = vec![zero];
    let mut i = 0;
    while i < out.len() {
        for u in &units {
            let next = out[i].add(u);
            if seen.insert(next.key()) {
                out.push(next);
            }
        }
        i += 1;
    }
    Ok(out)
}

/// Direct enumeration: every normalized tuple is tested with
/// [`cocycle3_check`], and classes are formed against every `(ν, μ)`.
/// Representatives are the lexicographically least tuples of their classes.
pub fn h3_by_enumeration(module: &BimoduleAction, guards: &Guards) -> Result<H3Result> {
    module.ring().require_one()?;
    let n = module.ring().order();
    let mo = module.group().order();
    let slots = Family3::free_slots(n);
    let cob = CoboundaryPair::free_slots(module);
    guards.search_space("H3 enumeration", mo, slots.len())?;
    guards.search_space("H3 coboundary enumeration", mo, cob.len())?;

    let mut cocycles = Vec::new();
    for_each_assignment(mo, slots.len(), |vals| {
        let mut k = Family3::zero(module);
        for (s, &v) in slots.iter().zip(vals) {
            k.set(s, v);
        }
        if cocycle3_check(&k).is_empty() {
            cocycles.push(k);
        }
    });
    let mut boundaries: Vec<Family3> = Vec::new();
    let mut bkeys = HashSet::new();
    for_each_assignment(mo, cob.len(), |vals| {
        let mut c = CoboundaryPair::zero(module);
        for (&s, &v) in cob.iter().zip(vals) {
            c.set(s, v);
        }
        let k = delta2(&c).negate_lambda();
        if bkeys.insert(k.key()) {
            boundaries.push(k);
        }
    });
    cocycles.sort_by_key(|k| k.key());
    let mut seen = HashSet::new();
    let mut representatives = Vec::new();
    for k in &cocycles {
        if seen.contains(&k.key()) {
            continue;
        }
        representatives.push(k.clone());
        for b in &boundaries {
            seen.insert(k.add(b).key());
        }
    }
    Ok(H3Result {
        order: BigUint::from(representatives.len()),
        cocycles: BigUint::from(cocycles.len()),
        coboundaries: BigUint::from(boundaries.len()),
        representatives,
        lex_least: true,
    })
}

fn for_each_assignment(base: usize, len: usize, mut visit: impl FnMut(&[usize])) {
    let mut vals = vec![0usize; len];
    loop {
        visit(&vals);
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            vals[i] += 1;
            if vals[i] < base {
                break;
            }
            vals[i] = 0;
        }
    }
}
