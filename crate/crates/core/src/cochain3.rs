//! Degree-3 tuple cochains `(ξ, η, α, λ, ρ)`, degree-2 pairs `(ν, μ)`, the
//! coboundary `δ²` between them, and the evaluator for the eighteen relations.

use crate::algebra::BimoduleAction;
use crate::error::{Error, Result};
use crate::report::Report;

/// Five value tables into a bimodule `M`: `ξ, α, λ, ρ` on `R³`, `η` on `R²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family3 {
    pub module: BimoduleAction,
    pub xi: Vec<usize>,
    pub eta: Vec<usize>,
    pub alpha: Vec<usize>,
    pub lambda: Vec<usize>,
    pub rho: Vec<usize>,
}

pub type ObstructionFamily = Family3;
pub type TupleCochain3 = Family3;

/// Which of the five functions a slot belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Component {
    Xi,
    Eta,
    Alpha,
    Lambda,
    Rho,
}

impl Component {
    pub const ALL: [Component; 5] = [Component::Xi, Component::Eta, Component::Alpha, Component::Lambda, Component::Rho];

    pub fn name(self) -> &'static str {
        match self {
            Component::Xi => "xi",
            Component::Eta => "eta",
            Component::Alpha => "alpha",
            Component::Lambda => "lambda",
            Component::Rho => "rho",
        }
    }

    pub fn arity(self) -> usize {
        if self == Component::Eta {
            2
        } else {
            3
        }
    }
}

/// A position `(component, arguments)` in a tuple cochain.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slot {
    pub component: Component,
    pub args: Vec<usize>,
}

fn tuples(n: usize, arity: usize, keep: impl Fn(usize) -> bool) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..n).filter(|&v| keep(v)).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}

impl Family3 {
    pub fn zero(module: &BimoduleAction) -> Self {
        let n = module.ring().order();
        Family3 {
            module: module.clone(),
            xi: vec![0; n * n * n],
            eta: vec![0; n * n],
            alpha: vec![0; n * n * n],
            lambda: vec![0; n * n * n],
            rho: vec![0; n * n * n],
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.module.ring().order()
    }

    #[inline]
    fn i3(&self, x: usize, y: usize, z: usize) -> usize {
        let n = self.n();
        (x * n + y) * n + z
    }

    #[inline]
    pub fn xi(&self, x: usize, y: usize, z: usize) -> usize {
        self.xi[self.i3(x, y, z)]
    }

    #[inline]
    pub fn eta(&self, x: usize, y: usize) -> usize {
        self.eta[x * self.n() + y]
    }

    #[inline]
    pub fn alpha(&self, x: usize, y: usize, z: usize) -> usize {
        self.alpha[self.i3(x, y, z)]
    }

    #[inline]
    pub fn lambda(&self, x: usize, y: usize, z: usize) -> usize {
        self.lambda[self.i3(x, y, z)]
    }

    #[inline]
    pub fn rho(&self, x: usize, y: usize, z: usize) -> usize {
        self.rho[self.i3(x, y, z)]
    }

    pub fn table(&self, c: Component) -> &Vec<usize> {
        match c {
            Component::Xi => &self.xi,
            Component::Eta => &self.eta,
            Component::Alpha => &self.alpha,
            Component::Lambda => &self.lambda,
            Component::Rho => &self.rho,
        }
    }

    pub fn table_mut(&mut self, c: Component) -> &mut Vec<usize> {
        match c {
            Component::Xi => &mut self.xi,
            Component::Eta => &mut self.eta,
            Component::Alpha => &mut self.alpha,
            Component::Lambda => &mut self.lambda,
            Component::Rho => &mut self.rho,
        }
    }

    fn flat_index(&self, args: &[usize]) -> usize {
        args.iter().fold(0, |acc, &a| acc * self.n() + a)
    }

    pub fn get(&self, slot: &Slot) -> usize {
        self.table(slot.component)[self.flat_index(&slot.args)]
    }

    pub fn set(&mut self, slot: &Slot, value: usize) {
        let i = self.flat_index(&slot.args);
        self.table_mut(slot.component)[i] = value;
    }

    /// Slots with every argument nonzero, in component order then lexicographic.
    /// A tuple vanishing off these slots satisfies the zero-argument halves of
    /// the normalization relations by construction.
    pub fn free_slots(n: usize) -> Vec<Slot> {
        Component::ALL
            .iter()
            .flat_map(|&c| tuples(n, c.arity(), |v| v != 0).into_iter().map(move |args| Slot { component: c, args }))
            .collect()
    }

    fn zip_with(&self, other: &Family3, op: impl Fn(usize, usize) -> usize) -> Family3 {
        let z = |a: &Vec<usize>, b: &Vec<usize>| a.iter().zip(b).map(|(&x, &y)| op(x, y)).collect();
        Family3 {
            module: self.module.clone(),
            xi: z(&self.xi, &other.xi),
            eta: z(&self.eta, &other.eta),
            alpha: z(&self.alpha, &other.alpha),
            lambda: z(&self.lambda, &other.lambda),
            rho: z(&self.rho, &other.rho),
        }
    }

    pub fn add(&self, other: &Family3) -> Family3 {
        let g = self.module.group();
        self.zip_with(other, |a, b| g.add(a, b))
    }

    pub fn sub(&self, other: &Family3) -> Family3 {
        let g = self.module.group();
        self.zip_with(other, |a, b| g.sub(a, b))
    }

    pub fn is_zero(&self) -> bool {
        Component::ALL.iter().all(|&c| self.table(c).iter().all(|&v| v == 0))
    }

    /// `(ξ, η, α, −λ, ρ)`.
    pub fn negate_lambda(&self) -> Family3 {
        let g = self.module.group();
        let mut out = self.clone();
        out.lambda = self.lambda.iter().map(|&v| g.neg(v)).collect();
        out
    }

    /// Concatenated tables in component order; the lexicographic key of the tuple.
    pub fn key(&self) -> Vec<usize> {
        Component::ALL.iter().flat_map(|&c| self.table(c).iter().copied()).collect()
    }

    pub fn from_tables(
        module: &BimoduleAction,
        xi: Vec<usize>,
        eta: Vec<usize>,
        alpha: Vec<usize>,
        lambda: Vec<usize>,
        rho: Vec<usize>,
    ) -> Result<Self> {
        let n = module.ring().order();
        let m = module.group().order();
        let k = Family3 { module: module.clone(), xi, eta, alpha, lambda, rho };
        for c in Component::ALL {
            let want = n.pow(c.arity() as u32);
            let t = k.table(c);
            if t.len() != want || t.iter().any(|&v| v >= m) {
                return Err(Error::malformed(format!("{} must have {want} entries below {m}", c.name())));
            }
        }
        Ok(k)
    }
}

/// A pair `(ν, μ)` of functions `R² → M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoboundaryPair {
    pub module: BimoduleAction,
    pub nu: Vec<usize>,
    pub mu: Vec<usize>,
}

impl CoboundaryPair {
    pub fn zero(module: &BimoduleAction) -> Self {
        let n = module.ring().order();
        CoboundaryPair { module: module.clone(), nu: vec![0; n * n], mu: vec![0; n * n] }
    }

    #[inline]
    pub fn nu(&self, x: usize, y: usize) -> usize {
        self.nu[x * self.module.ring().order() + y]
    }

    #[inline]
    pub fn mu(&self, x: usize, y: usize) -> usize {
        self.mu[x * self.module.ring().order() + y]
    }

    /// Free positions: `ν` at arguments outside `{0, 1}`, then `μ` at nonzero
    /// arguments. Returned as `(is_mu, x, y)`.
    pub fn free_slots(module: &BimoduleAction) -> Vec<(bool, usize, usize)> {
        let r = module.ring();
        let one = r.one().expect("ring with identity");
        let mut out = Vec::new();
        for x in r.elements().filter(|&x| x != 0 && x != one) {
            for y in r.elements().filter(|&y| y != 0 && y != one) {
                out.push((false, x, y));
            }
        }
        for x in r.elements().filter(|&x| x != 0) {
            for y in r.elements().filter(|&y| y != 0) {
                out.push((true, x, y));
            }
        }
        out
    }

    pub fn set(&mut self, slot: (bool, usize, usize), value: usize) {
        let n = self.module.ring().order();
        let (is_mu, x, y) = slot;
        if is_mu {
            self.mu[x * n + y] = value;
        } else {
            self.nu[x * n + y] = value;
        }
    }

    pub fn add(&self, other: &CoboundaryPair) -> CoboundaryPair {
        let g = self.module.group();
        CoboundaryPair {
            module: self.module.clone(),
            nu: self.nu.iter().zip(&other.nu).map(|(&a, &b)| g.add(a, b)).collect(),
            mu: self.mu.iter().zip(&other.mu).map(|(&a, &b)| g.add(a, b)).collect(),
        }
    }

    pub fn neg(&self) -> CoboundaryPair {
        let g = self.module.group();
        CoboundaryPair {
            module: self.module.clone(),
            nu: self.nu.iter().map(|&a| g.neg(a)).collect(),
            mu: self.mu.iter().map(|&a| g.neg(a)).collect(),
        }
    }

    /// Vanishing on zero arguments, and `ν` also on arguments equal to 1.
    pub fn is_normalized(&self) -> bool {
        let r = self.module.ring();
        let one = r.one().expect("ring with identity");
        r.elements().all(|x| {
            r.elements().all(|y| {
                let zero_arg = x == 0 || y == 0;
                let one_arg = x == one || y == one;
                (!zero_arg || (self.mu(x, y) == 0 && self.nu(x, y) == 0)) && (!one_arg || self.nu(x, y) == 0)
            })
        })
    }
}

/// `(∂₁μ, ant μ, ∂₂ν, λ-shift, ρ-shift)`.
pub fn delta2(c: &CoboundaryPair) -> Family3 {
    let m = &c.module;
    let (r, g) = (m.ring(), m.group());
    let mut k = Family3::zero(m);
    let n = r.order();
    for x in 0..n {
        for y in 0..n {
            k.eta[x * n + y] = g.sub(c.mu(x, y), c.mu(y, x));
            for z in 0..n {
                let i = (x * n + y) * n + z;
                k.xi[i] = g.sum([
                    c.mu(y, z),
                    g.neg(c.mu(r.add(x, y), z)),
                    c.mu(x, r.add(y, z)),
                    g.neg(c.mu(x, y)),
                ]);
                k.alpha[i] = g.sum([
                    m.left(x, c.nu(y, z)),
                    g.neg(c.nu(r.mul(x, y), z)),
                    c.nu(x, r.mul(y, z)),
                    g.neg(m.right(c.nu(x, y), z)),
                ]);
                k.lambda[i] = g.sum([
                    c.nu(x, r.add(y, z)),
                    g.neg(c.nu(x, y)),
                    g.neg(c.nu(x, z)),
                    m.left(x, c.mu(y, z)),
                    g.neg(c.mu(r.mul(x, y), r.mul(x, z))),
                ]);
                k.rho[i] = g.sum([
                    c.nu(r.add(x, y), z),
                    g.neg(c.nu(x, z)),
                    g.neg(c.nu(y, z)),
                    m.right(c.mu(x, y), z),
                    g.neg(c.mu(r.mul(x, z), r.mul(y, z))),
                ]);
            }
        }
    }
    k
}

pub const RELATION_COUNT: usize = 18;

/// Human-readable statement of each relation, indexed from 1.
pub fn relation_statement(k: usize) -> &'static str {
    match k {
        1 => "ξ(y,z,t)−ξ(x+y,z,t)+ξ(x,y+z,t)−ξ(x,y,z+t)+ξ(x,y,z)=0",
        2 => "ξ(0,y,z)=ξ(x,0,z)=ξ(x,y,0)=0",
        3 => "ξ(x,y,z)−ξ(x,z,y)+ξ(z,x,y)−η(x,z)+η(x+y,z)−η(y,z)=0",
        4 => "η(x,y)+η(y,x)=0",
        5 => "η(x,x)=0",
        6 => "xη(y,z)−η(xy,xz)=λ(x,y,z)−λ(x,z,y)",
        7 => "η(x,y)z−η(xz,yz)=ρ(x,y,z)−ρ(y,x,z)",
        8 => "xξ(y,z,t)−ξ(xy,xz,xt)=λ(x,z,t)−λ(x,y+z,t)+λ(x,y,z+t)−λ(x,y,z)",
        9 => "ξ(x,y,z)t−ξ(xt,yt,zt)=ρ(y,z,t)−ρ(x+y,z,t)+ρ(x,y+z,t)−ρ(x,y,t)",
        10 => "ρ(x,y,z+t)−ρ(x,y,z)−ρ(x,y,t)+λ(x,z,t)+λ(y,z,t)−λ(x+y,z,t)=−ξ(xz+xt,yz,yt)+ξ(xz,xt,yz)−η(xt,yz)+ξ(xz+yz,xt,yt)−ξ(xz,yz,xt)",
        11 => "α(x,y,z+t)−α(x,y,z)−α(x,y,t)=xλ(y,z,t)+λ(x,yz,yt)−λ(xy,z,t)",
        12 => "α(x,y+z,t)−α(x,y,t)−α(x,z,t)=xρ(y,z,t)−ρ(xy,xz,t)+λ(x,yt,zt)−λ(x,y,z)t",
        13 => "α(x+y,z,t)−α(x,z,t)−α(y,z,t)=−ρ(x,y,z)t−ρ(xz,yz,t)+ρ(x,y,zt)",
        14 => "xα(y,z,t)−α(xy,z,t)+α(x,yz,t)−α(x,y,zt)+α(x,y,z)t=0",
        15 => "α(1,y,z)=α(x,1,z)=α(x,y,1)=0",
        16 => "α(0,y,z)=α(x,0,z)=α(x,y,0)=0",
        17 => "λ(1,y,z)=λ(0,y,z)=λ(x,0,z)=λ(x,y,0)=0",
        18 => "ρ(x,y,1)=ρ(0,y,z)=ρ(x,0,z)=ρ(x,y,0)=0",
        _ => "unknown relation",
    }
}

pub fn relation_label(k: usize) -> String {
    format!("relation {k}: {}", relation_statement(k))
}

/// Visits every instance of every relation as `(relation, arguments, lhs − rhs)`
/// in a fixed order: relations ascending, arguments lexicographic. Instances of
/// the vanishing relations (2, 15–18) are the argument tuples they constrain.
pub fn evaluate_relations(k: &Family3, mut visit: impl FnMut(usize, &[usize], usize)) {
    let m = &k.module;
    let (r, g) = (m.ring(), m.group());
    let one = r.one().expect("ring with identity");
    let n = r.order();
    let add = |a: usize, b: usize| r.add(a, b);
    let mul = |a: usize, b: usize| r.mul(a, b);
    let s = |terms: &[usize]| g.sum(terms.iter().copied());
    let ng = |a: usize| g.neg(a);

    let all4 = tuples(n, 4, |_| true);
    let all3 = tuples(n, 3, |_| true);
    let all2 = tuples(n, 2, |_| true);

    for a in &all4 {
        let (x, y, z, t) = (a[0], a[1], a[2], a[3]);
        let v = s(&[
            k.xi(y, z, t),
            ng(k.xi(add(x, y), z, t)),
            k.xi(x, add(y, z), t),
            ng(k.xi(x, y, add(z, t))),
            k.xi(x, y, z),
        ]);
        visit(1, a, v);
    }
    for a in &all3 {
        if a.contains(&0) {
            visit(2, a, k.xi(a[0], a[1], a[2]));
        }
    }
    for a in &all3 {
        let (x, y, z) = (a[0], a[1], a[2]);
        let v = s(&[
            k.xi(x, y, z),
            ng(k.xi(x, z, y)),
            k.xi(z, x, y),
            ng(k.eta(x, z)),
            k.eta(add(x, y), z),
            ng(k.eta(y, z)),
        ]);
        visit(3, a, v);
    }
    for a in &all2 {
        visit(4, a, g.add(k.eta(a[0], a[1]), k.eta(a[1], a[0])));
    }
    for x in 0..n {
        visit(5, &[x], k.eta(x, x));
    }
    for a in &all3 {
        let (x, y, z) = (a[0], a[1], a[2]);
        let lhs = g.sub(m.left(x, k.eta(y, z)), k.eta(mul(x, y), mul(x, z)));
        let rhs = g.sub(k.lambda(x, y, z), k.lambda(x, z, y));
        visit(6, a, g.sub(lhs, rhs));
    }
    for a in &all3 {
        let (x, y, z) = (a[0], a[1], a[2]);
        let lhs = g.sub(m.right(k.eta(x, y), z), k.eta(mul(x, z), mul(y, z)));
        let rhs = g.sub(k.rho(x, y, z), k.rho(y, x, z));
        visit(7, a, g.sub(lhs, rhs));
    }
    for a in &all4 {
        let (x, y, z, t) = (a[0], a[1], a[2], a[3]);
        let lhs = g.sub(m.left(x, k.xi(y, z, t)), k.xi(mul(x, y), mul(x, z), mul(x, t)));
        let rhs = s(&[
            k.lambda(x, z, t),
            ng(k.lambda(x, add(y, z), t)),
            k.lambda(x, y, add(z, t)),
            ng(k.lambda(x, y, z)),
        ]);
        visit(8, a, g.sub(lhs, rhs));
    }
    for a in &all4 {
        let (x, y, z, t) = (a[0], a[1], a[2], a[3]);
        let lhs = g.sub(m.right(k.xi(x, y, z), t), k.xi(mul(x, t), mul(y, t), mul(z, t)));
        let rhs = s(&[
            k.rho(y, z, t),
            ng(k.rho(add(x, y), z, t)),
            k.rho(x, add(y, z), t),
            ng(k.rho(x, y, t)),
        ]);
        visit(9, a, g.sub(lhs, rhs));
    }
    for a in &all4 {
        let (x, y, z, t) = (a[0], a[1], a[2], a[3]);
        let lhs = s(&[
            k.rho(x, y, add(z, t)),
            ng(k.rho(x, y, z)),
            ng(k.rho(x, y, t)),
            k.lambda(x, z, t),
            k.lambda(y, z, t),
            ng(k.lambda(add(x, y), z, t)),
        ]);
        let (xz, xt, yz, yt) = (mul(x, z), mul(x, t), mul(y, z), mul(y, t));
        let rhs = s(&[
            ng(k.xi(add(xz, xt), yz, yt)),
            k.xi(xz, xt, yz),
            ng(k.eta(xt, yz)),
            k.xi(add(xz, yz), xt, yt),
            ng(k.xi(xz, yz, xt)),
        ]);
        visit(10, a, g.sub(lhs, rhs));
    }
    for a in &all4 {
        let (x, y, z, t) = (a[0], a[1], a[2], a[3]);
        let lhs = s(&[k.alpha(x, y, add(z, t)), ng(k.alpha(x, y, z)), ng(k.alpha(x, y, t))]);
        let rhs = s(&[
            m.left(x, k.lambda(y, z, t)),
            k.lambda(x, mul(y, z), mul(y, t)),
            ng(k.lambda(mul(x, y), z, t)),
        ]);
        visit(11, a, g.sub(lhs, rhs));
    }
    for a in &all4 {
        let (x, y, z, t) = (a[0], a[1], a[2], a[3]);
        let lhs = s(&[k.alpha(x, add(y, z), t), ng(k.alpha(x, y, t)), ng(k.alpha(x, z, t))]);
        let rhs = s(&[
            m.left(x, k.rho(y, z, t)),
            ng(k.rho(mul(x, y), mul(x, z), t)),
            k.lambda(x, mul(y, t), mul(z, t)),
            ng(m.right(k.lambda(x, y, z), t)),
        ]);
        visit(12, a, g.sub(lhs, rhs));
    }
    for a in &all4 {
        let (x, y, z, t) = (a[0], a[1], a[2], a[3]);
        let lhs = s(&[k.alpha(add(x, y), z, t), ng(k.alpha(x, z, t)), ng(k.alpha(y, z, t))]);
        let rhs = s(&[
            ng(m.right(k.rho(x, y, z), t)),
            ng(k.rho(mul(x, z), mul(y, z), t)),
            k.rho(x, y, mul(z, t)),
        ]);
        visit(13, a, g.sub(lhs, rhs));
    }
    for a in &all4 {
        let (x, y, z, t) = (a[0], a[1], a[2], a[3]);
        let v = s(&[
            m.left(x, k.alpha(y, z, t)),
            ng(k.alpha(mul(x, y), z, t)),
            k.alpha(x, mul(y, z), t),
            ng(k.alpha(x, y, mul(z, t))),
            m.right(k.alpha(x, y, z), t),
        ]);
        visit(14, a, v);
    }
    for a in &all3 {
        if a.contains(&one) {
            visit(15, a, k.alpha(a[0], a[1], a[2]));
        }
    }
    for a in &all3 {
        if a.contains(&0) {
            visit(16, a, k.alpha(a[0], a[1], a[2]));
        }
    }
    for a in &all3 {
        if a[0] == one || a.contains(&0) {
            visit(17, a, k.lambda(a[0], a[1], a[2]));
        }
    }
    for a in &all3 {
        if a[2] == one || a.contains(&0) {
            visit(18, a, k.rho(a[0], a[1], a[2]));
        }
    }
}

/// Violations of the relations selected by `which`.
pub fn relation_report(k: &Family3, which: impl Fn(usize) -> bool) -> Report {
    let mut rep = Report::new();
    let labels: Vec<String> = (0..=RELATION_COUNT).map(relation_label).collect();
    evaluate_relations(k, |rel, args, v| {
        if v != 0 && which(rel) {
            rep.push(labels[rel].clone(), args);
        }
    });
    rep
}

/// Outcome of the eighteen-relation sweep, split into the structure relations
/// (all but 5) and the regularity relation 5.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationCheck {
    pub structure: Report,
    pub regularity: Report,
}

impl RelationCheck {
    pub fn run(k: &Family3) -> Self {
        RelationCheck { structure: relation_report(k, |r| r != 5), regularity: relation_report(k, |r| r == 5) }
    }

    pub fn is_empty(&self) -> bool {
        self.structure.is_empty() && self.regularity.is_empty()
    }

    pub fn combined(&self) -> Report {
        let mut all = self.structure.clone();
        all.extend(self.regularity.clone());
        all.violations.sort_by_key(|v| {
            v.rule
                .split(':')
                .next()
                .and_then(|h| h.trim_start_matches("relation ").parse::<usize>().ok())
                .unwrap_or(0)
        });
        all
    }
}
