use std::collections::HashSet;

use super::cochain::{check_factor_set, for_each_one_cochain, shift, Normalization, TwoCochain};
use crate::algebra::BimoduleAction;
use crate::error::{Error, Result};
use crate::guard::Guards;

#[derive(Clone, Debug)]
pub struct H2Classes {
    /// Lexicographically least cochain of each class, in increasing order.
    pub representatives: Vec<TwoCochain>,
    pub cocycles: usize,
    pub coboundaries: usize,
}

impl H2Classes {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }
}

/// Enumerates all normalized factor sets (`f` symmetric, `g` vanishing on `0`
/// and `1`) and partitions them into coboundary classes.
pub fn h2_classes(bimodule: &BimoduleAction, guards: &Guards) -> Result<H2Classes> {
    let rep = bimodule.validate();
    if !rep.is_empty() {
        return Err(Error::invalid("h2 needs a valid bimodule", rep));
    }
    let r = bimodule.ring();
    let one = r.require_one()?;
    let n = r.order();
    let m = bimodule.group().order();
    let nonzero: Vec<usize> = r.elements().filter(|&x| x != 0).collect();
    let f_slots: Vec<(usize, usize)> =
        nonzero.iter().flat_map(|&x| nonzero.iter().filter(move |&&y| y >= x).map(move |&y| (x, y))).collect();
    let g_free: Vec<usize> = nonzero.iter().copied().filter(|&x| x != one).collect();
    let g_slots: Vec<(usize, usize)> =
        g_free.iter().flat_map(|&x| g_free.iter().map(move |&y| (x, y))).collect();
    let slots = f_slots.len() + g_slots.len();
    guards.search_space("H2 enumeration", m, slots)?;

    let mut cocycles = Vec::new();
    let mut values = vec![0usize; slots];
    loop {
        let mut c = TwoCochain::zero(bimodule);
        for (k, &(x, y)) in f_slots.iter().enumerate() {
            c.f[x * n + y] = values[k];
            c.f[y * n + x] = values[k];
        }
        for (k, &(x, y)) in g_slots.iter().enumerate() {
            c.g[x * n + y] = values[f_slots.len() + k];
        }
        if check_factor_set(&c).is_empty() {
            cocycles.push(c);
        }
        let mut i = 0;
        loop {
            if i == slots {
                return partition(bimodule, cocycles, guards);
            }
            values[i] += 1;
            if values[i] < m {
                break;
            }
            values[i] = 0;
            i += 1;
        }
    }
}

fn partition(bimodule: &BimoduleAction, mut cocycles: Vec<TwoCochain>, guards: &Guards) -> Result<H2Classes> {
    cocycles.sort_by_key(|c| c.key());
    let zero = TwoCochain::zero(bimodule);
    let mut boundaries = HashSet::new();
    for_each_one_cochain(bimodule, Normalization::Strict, guards, |t| {
        boundaries.insert(shift(&zero, t).key());
        false
    })?;
    let mut seen = HashSet::new();
    let mut representatives = Vec::new();
    for c in &cocycles {
        if seen.contains(&c.key()) {
            continue;
        }
        representatives.push(c.clone());
        for_each_one_cochain(bimodule, Normalization::Strict, guards, |t| {
            seen.insert(shift(c, t).key());
            false
        })?;
    }
    Ok(H2Classes { representatives, cocycles: cocycles.len(), coboundaries: boundaries.len() })
}
