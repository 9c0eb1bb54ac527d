use super::endo::{additive_endos, AdditiveEndo};
use super::group::{check_rect, FinAbGroup};
use super::ring::FinRing;
use crate::error::{Error, Result};
use crate::guard::Guards;
use crate::report::Report;

/// A unital `R`-bimodule structure on a finite abelian group, as two action tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleAction {
    ring: FinRing,
    group: FinAbGroup,
    left: Vec<usize>,
    right: Vec<usize>,
}

impl BimoduleAction {
    /// `left[x][a] = x·a`, `right[x][a] = a·x`. Shapes are checked here; the
    /// module laws are reported by [`BimoduleAction::validate`].
    pub fn from_tables(ring: FinRing, group: FinAbGroup, left: &[Vec<usize>], right: &[Vec<usize>]) -> Result<Self> {
        ring.require_one()?;
        let (n, m) = (ring.order(), group.order());
        check_rect("left action", left, n, m, m)?;
        check_rect("right action", right, n, m, m)?;
        Ok(BimoduleAction {
            ring,
            group,
            left: left.iter().flatten().copied().collect(),
            right: right.iter().flatten().copied().collect(),
        })
    }

    /// `R` acting on itself by multiplication.
    pub fn regular(ring: &FinRing) -> Result<Self> {
        let rows = ring.mul_rows();
        let right: Vec<Vec<usize>> =
            ring.elements().map(|x| ring.elements().map(|a| ring.mul(a, x)).collect()).collect();
        Self::from_tables(ring.clone(), ring.group().clone(), &rows, &right)
    }

    /// Actions through a map `lift: R → A` into a ring `A`: `x·a = lift(x)a`, `a·x = a·lift(x)`.
    pub fn via_lift(ring: &FinRing, target: &FinRing, lift: &[usize]) -> Result<Self> {
        if lift.len() != ring.order() || lift.iter().any(|&v| v >= target.order()) {
            return Err(Error::malformed("lift table does not map R into A"));
        }
        let left: Vec<Vec<usize>> =
            ring.elements().map(|x| target.elements().map(|a| target.mul(lift[x], a)).collect()).collect();
        let right: Vec<Vec<usize>> =
            ring.elements().map(|x| target.elements().map(|a| target.mul(a, lift[x])).collect()).collect();
        Self::from_tables(ring.clone(), target.group().clone(), &left, &right)
    }

    /// Both actions given by the same family of endomorphisms (symmetric bimodule).
    pub fn symmetric(ring: &FinRing, group: &FinAbGroup, actions: &[AdditiveEndo]) -> Result<Self> {
        let rows: Vec<Vec<usize>> = actions.iter().map(|e| e.map.clone()).collect();
        Self::from_tables(ring.clone(), group.clone(), &rows, &rows)
    }

    /// The zero module over `R`.
    pub fn zero_module(ring: &FinRing) -> Result<Self> {
        let rows = vec![vec![0]; ring.order()];
        Self::from_tables(ring.clone(), FinAbGroup::trivial(), &rows, &rows)
    }

    pub fn ring(&self) -> &FinRing {
        &self.ring
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    #[inline]
    pub fn left(&self, x: usize, a: usize) -> usize {
        self.left[x * self.group.order() + a]
    }

    #[inline]
    pub fn right(&self, a: usize, x: usize) -> usize {
        self.right[x * self.group.order() + a]
    }

    pub fn left_rows(&self) -> Vec<Vec<usize>> {
        self.left.chunks(self.group.order()).map(|r| r.to_vec()).collect()
    }

    pub fn right_rows(&self) -> Vec<Vec<usize>> {
        self.right.chunks(self.group.order()).map(|r| r.to_vec()).collect()
    }

    pub fn left_endo(&self, x: usize) -> AdditiveEndo {
        AdditiveEndo { map: self.left_rows().swap_remove(x) }
    }

    pub fn right_endo(&self, x: usize) -> AdditiveEndo {
        AdditiveEndo { map: self.right_rows().swap_remove(x) }
    }

    /// Every failed bimodule law with its witness `(x, y, a)` or `(x, a)`.
    pub fn validate(&self) -> Report {
        let (r, g) = (&self.ring, &self.group);
        let mut rep = g.validate();
        let one = r.one().expect("checked at construction");
        for x in r.elements() {
            for a in g.elements() {
                for b in g.elements() {
                    if self.left(x, g.add(a, b)) != g.add(self.left(x, a), self.left(x, b)) {
                        rep.push("x(a+b)=xa+xb", &[x, a, b]);
                    }
                    if self.right(g.add(a, b), x) != g.add(self.right(a, x), self.right(b, x)) {
                        rep.push("(a+b)x=ax+bx", &[x, a, b]);
                    }
                }
                for y in r.elements() {
                    if self.left(r.add(x, y), a) != g.add(self.left(x, a), self.left(y, a)) {
                        rep.push("(x+y)a=xa+ya", &[x, y, a]);
                    }
                    if self.right(a, r.add(x, y)) != g.add(self.right(a, x), self.right(a, y)) {
                        rep.push("a(x+y)=ax+ay", &[x, y, a]);
                    }
                    if self.left(r.mul(x, y), a) != self.left(x, self.left(y, a)) {
                        rep.push("(xy)a=x(ya)", &[x, y, a]);
                    }
                    if self.right(a, r.mul(x, y)) != self.right(self.right(a, x), y) {
                        rep.push("a(xy)=(ax)y", &[x, y, a]);
                    }
                    if self.right(self.left(x, a), y) != self.left(x, self.right(a, y)) {
                        rep.push("(xa)y=x(ay)", &[x, y, a]);
                    }
                }
            }
        }
        for a in g.elements() {
            if self.left(one, a) != a {
                rep.push("1a=a", &[a]);
            }
            if self.right(a, one) != a {
                rep.push("a1=a", &[a]);
            }
            if self.left(0, a) != 0 {
                rep.push("0a=0", &[a]);
            }
            if self.right(a, 0) != 0 {
                rep.push("a0=0", &[a]);
            }
        }
        rep
    }

    /// Whether relabelling the group by the automorphism `perm` (`perm[old] = new`)
    /// carries this bimodule onto `other`.
    pub fn transported(&self, perm: &[usize]) -> Result<Self> {
        let m = self.group.order();
        let mut inv = vec![0; m];
        for (old, &new) in perm.iter().enumerate() {
            inv[new] = old;
        }
        let add: Vec<Vec<usize>> =
            (0..m).map(|a| (0..m).map(|b| perm[self.group.add(inv[a], inv[b])]).collect()).collect();
        let left: Vec<Vec<usize>> = self
            .ring
            .elements()
            .map(|x| (0..m).map(|a| perm[self.left(x, inv[a])]).collect())
            .collect();
        let right: Vec<Vec<usize>> = self
            .ring
            .elements()
            .map(|x| (0..m).map(|a| perm[self.right(inv[a], x)]).collect())
            .collect();
        Self::from_tables(self.ring.clone(), FinAbGroup::from_table(&add)?, &left, &right)
    }
}

/// All unital bimodule structures of `R` on `group`, in lexicographic order of
/// (left table, right table).
pub fn enumerate_bimodules(ring: &FinRing, group: &FinAbGroup, guards: &Guards) -> Result<Vec<BimoduleAction>> {
    let one = ring.require_one()?;
    let end = additive_endos(group, guards)?;
    let n = ring.order();
    let free: Vec<usize> = ring.elements().filter(|&x| x != 0 && x != one).collect();
    guards.search_space("bimodule enumeration", end.len(), 2 * free.len())?;

    let side_candidates = |left_side: bool| -> Vec<Vec<AdditiveEndo>> {
        let mut out = Vec::new();
        let mut choice = vec![0usize; free.len()];
        loop {
            let mut maps = vec![AdditiveEndo::zero(group.order()); n];
            maps[one] = AdditiveEndo::identity(group.order());
            for (&x, &c) in free.iter().zip(&choice) {
                maps[x] = end.elements[c].clone();
            }
            let ok = ring.elements().all(|x| {
                ring.elements().all(|y| {
                    let sum = maps[ring.add(x, y)] == maps[x].add(&maps[y], group);
                    // left: (xy)a = x(ya); right: a(xy) = (ax)y
                    let prod = if left_side {
                        maps[ring.mul(x, y)] == maps[x].compose(&maps[y])
                    } else {
                        maps[ring.mul(x, y)] == maps[y].compose(&maps[x])
                    };
                    sum && prod
                })
            });
            if ok {
                out.push(maps);
            }
            let mut i = 0;
            loop {
                if i == choice.len() {
                    return out;
                }
                choice[i] += 1;
                if choice[i] < end.len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
        }
    };

    let lefts = side_candidates(true);
    let rights = side_candidates(false);
    let mut out = Vec::new();
    for l in &lefts {
        for r in &rights {
            let commute = ring
                .elements()
                .all(|x| ring.elements().all(|y| l[x].compose(&r[y]) == r[y].compose(&l[x])));
            if commute {
                let lt: Vec<Vec<usize>> = l.iter().map(|e| e.map.clone()).collect();
                let rt: Vec<Vec<usize>> = r.iter().map(|e| e.map.clone()).collect();
                let bm = BimoduleAction::from_tables(ring.clone(), group.clone(), &lt, &rt)?;
                if bm.validate().is_empty() {
                    out.push(bm);
                }
            }
        }
    }
    out.sort_by_key(|m| (m.left_rows(), m.right_rows()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog;

    #[test]
    fn regular_z2() {
        let bm = BimoduleAction::regular(&catalog::zmod(2)).unwrap();
        assert!(bm.validate().is_empty());
    }

    #[test]
    fn zero_left_action_breaks_unitality() {
        let r = catalog::zmod(2);
        let bm = BimoduleAction::from_tables(r.clone(), r.group().clone(), &[vec![0, 0], vec![0, 0]], &r.mul_rows())
            .unwrap();
        let rep = bm.validate();
        assert_eq!(rep.first_with_rule("1a=a").unwrap().witness, vec![1]);
    }

    #[test]
    fn counting_structures() {
        let g = Guards::default();
        let z2 = catalog::zmod(2);
        assert_eq!(enumerate_bimodules(&z2, &FinAbGroup::cyclic(2), &g).unwrap().len(), 1);
        assert!(enumerate_bimodules(&z2, &FinAbGroup::cyclic(3), &g).unwrap().is_empty());
        assert!(enumerate_bimodules(&z2, &FinAbGroup::cyclic(4), &g).unwrap().is_empty());
        assert_eq!(enumerate_bimodules(&z2, &catalog::klein(), &g).unwrap().len(), 1);
    }
}
