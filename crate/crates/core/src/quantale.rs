//! Finite quantales with a dualizing element, used as thin star-autonomous
//! categories. Built-in families: relations on `{0..n}`, 2-valued
//! profunctors on a small poset, pointed groups, Łukasiewicz chains.

use crate::error::{Result, StautError};
use crate::report::{Tally, Verdict};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Relations on `{0..n}` as `n²`-bit sets; bit `a*n + b` holds `(a, b)`.
pub mod rel {
    pub fn full(n: usize) -> u16 {
        ((1u32 << (n * n)) - 1) as u16
    }

    pub fn diagonal(n: usize) -> u16 {
        (0..n).fold(0, |acc, i| acc | (1 << (i * n + i)))
    }

    pub fn has(n: usize, r: u16, a: usize, b: usize) -> bool {
        r >> (a * n + b) & 1 == 1
    }

    fn row(n: usize, r: u16, a: usize) -> u16 {
        (r >> (a * n)) & ((1 << n) - 1)
    }

    pub fn compose(n: usize, r: u16, s: u16) -> u16 {
        let mut out = 0u16;
        for a in 0..n {
            let ra = row(n, r, a);
            let mut acc = 0u16;
            for b in 0..n {
                if ra >> b & 1 == 1 {
                    acc |= row(n, s, b);
                }
            }
            out |= acc << (a * n);
        }
        out
    }

    pub fn reverse(n: usize, r: u16) -> u16 {
        let mut out = 0;
        for a in 0..n {
            for b in 0..n {
                if has(n, r, a, b) {
                    out |= 1 << (b * n + a);
                }
            }
        }
        out
    }

    pub fn complement(n: usize, r: u16) -> u16 {
        full(n) & !r
    }

    pub fn show(n: usize, r: u16) -> String {
        let pairs: Vec<String> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| has(n, r, a, b))
            .map(|(a, b)| format!("({a},{b})"))
            .collect();
        format!("{{{}}}", pairs.join(","))
    }
}

/// A finite partial order given by its `≤` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    pub n: usize,
    leq: Vec<bool>,
}

impl Poset {
    pub fn new(n: usize, leq: Vec<bool>) -> Result<Poset> {
        if leq.len() != n * n {
            return Err(StautError::Validation("order matrix has the wrong size".into()));
        }
        let p = Poset { n, leq };
        for a in 0..n {
            if !p.leq(a, a) {
                return Err(StautError::Validation(format!("order not reflexive at {a}")));
            }
            for b in 0..n {
                if a != b && p.leq(a, b) && p.leq(b, a) {
                    return Err(StautError::Validation(format!("order not antisymmetric at ({a},{b})")));
                }
                for c in 0..n {
                    if p.leq(a, b) && p.leq(b, c) && !p.leq(a, c) {
                        return Err(StautError::Validation(format!("order not transitive at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(p)
    }

    pub fn discrete(n: usize) -> Poset {
        Poset { n, leq: (0..n * n).map(|i| i / n == i % n).collect() }
    }

    pub fn chain(n: usize) -> Poset {
        Poset { n, leq: (0..n * n).map(|i| i / n <= i % n).collect() }
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    pub fn as_relation(&self) -> u16 {
        let mut r = 0u16;
        for a in 0..self.n {
            for b in 0..self.n {
                if self.leq(a, b) {
                    r |= 1 << (a * self.n + b);
                }
            }
        }
        r
    }

    /// Every partial order on `{0..n}` (labelled), in lexicographic order of
    /// the strict part.
    pub fn all(n: usize) -> Vec<Poset> {
        let off: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|(a, b)| a != b).collect();
        let mut out = Vec::new();
        for mask in 0u32..(1 << off.len()) {
            let mut leq: Vec<bool> = (0..n * n).map(|i| i / n == i % n).collect();
            for (k, &(a, b)) in off.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    leq[a * n + b] = true;
                }
            }
            if let Ok(p) = Poset::new(n, leq) {
                out.push(p);
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
enum Carrier {
    /// Explicit order and multiplication tables.
    Table { leq: Vec<bool>, tensor: Vec<u32> },
    /// A union-closed set of relations on `{0..n}` closed under composition.
    Relations { n: usize, members: Vec<u16>, index: Vec<u32> },
}

/// A finite closed monoidal poset with a dualizing element.
#[derive(Clone, Debug)]
pub struct Quantale {
    name: String,
    labels: Vec<String>,
    carrier: Carrier,
    unit: u32,
    dualizer: u32,
    ldual: Vec<u32>,
    rdual: Vec<u32>,
}

const NONE: u32 = u32::MAX;

impl Quantale {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, a: u32) -> &str {
        &self.labels[a as usize]
    }

    pub fn index_of(&self, label: &str) -> Option<u32> {
        self.labels.iter().position(|l| l == label).map(|i| i as u32)
    }

    pub fn unit(&self) -> u32 {
        self.unit
    }

    pub fn dualizer(&self) -> u32 {
        self.dualizer
    }

    pub fn leq(&self, a: u32, b: u32) -> bool {
        match &self.carrier {
            Carrier::Table { leq, .. } => leq[a as usize * self.size() + b as usize],
            Carrier::Relations { members, .. } => {
                let (x, y) = (members[a as usize], members[b as usize]);
                x & !y == 0
            }
        }
    }

    pub fn tensor(&self, a: u32, b: u32) -> u32 {
        match &self.carrier {
            Carrier::Table { tensor, .. } => tensor[a as usize * self.size() + b as usize],
            Carrier::Relations { n, members, index } => {
                let c = rel::compose(*n, members[a as usize], members[b as usize]);
                let i = index[c as usize];
                assert!(i != NONE, "relation carrier not closed under composition");
                i
            }
        }
    }

    /// `⊥a = a⊸d0`
    pub fn ldual(&self, a: u32) -> u32 {
        self.ldual[a as usize]
    }

    /// `ᵖa = d0⟜a`
    pub fn rdual(&self, a: u32) -> u32 {
        self.rdual[a as usize]
    }

    /// `a⅋b = ⊥(ᵖb ⊗ ᵖa)`
    pub fn par(&self, a: u32, b: u32) -> u32 {
        self.ldual(self.tensor(self.rdual(b), self.rdual(a)))
    }

    /// Relation bit-set of an element, for relation carriers.
    pub fn relation(&self, a: u32) -> Option<(usize, u16)> {
        match &self.carrier {
            Carrier::Relations { n, members, .. } => Some((*n, members[a as usize])),
            Carrier::Table { .. } => None,
        }
    }

    pub fn element_of_relation(&self, r: u16) -> Option<u32> {
        match &self.carrier {
            Carrier::Relations { index, .. } => index.get(r as usize).copied().filter(|&i| i != NONE),
            Carrier::Table { .. } => None,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.size() as u32
    }

    /// Least upper bound, if it exists.
    pub fn join(&self, a: u32, b: u32) -> Option<u32> {
        if let Carrier::Relations { members, index, .. } = &self.carrier {
            let i = index[(members[a as usize] | members[b as usize]) as usize];
            return (i != NONE).then_some(i);
        }
        let ubs: Vec<u32> = self.elements().filter(|&c| self.leq(a, c) && self.leq(b, c)).collect();
        ubs.iter().copied().find(|&c| ubs.iter().all(|&u| self.leq(c, u)))
    }

    /// Greatest lower bound, if it exists.
    pub fn meet(&self, a: u32, b: u32) -> Option<u32> {
        if let Carrier::Relations { members, index, .. } = &self.carrier {
            let i = index[(members[a as usize] & members[b as usize]) as usize];
            if i != NONE {
                return Some(i);
            }
        }
        let lbs: Vec<u32> = self.elements().filter(|&c| self.leq(c, a) && self.leq(c, b)).collect();
        lbs.iter().copied().find(|&c| lbs.iter().all(|&l| self.leq(l, c)))
    }

    pub fn bottom(&self) -> Option<u32> {
        self.elements().find(|&b| self.elements().all(|x| self.leq(b, x)))
    }

    pub fn top(&self) -> Option<u32> {
        self.elements().find(|&t| self.elements().all(|x| self.leq(x, t)))
    }

    /// Largest `ξ` with `a⊗ξ ≤ b`, found by scanning all elements.
    pub fn lres_brute(&self, a: u32, b: u32) -> Option<u32> {
        let cands: Vec<u32> = self.elements().filter(|&x| self.leq(self.tensor(a, x), b)).collect();
        cands.iter().copied().find(|&c| cands.iter().all(|&x| self.leq(x, c)))
    }

    /// Largest `ξ` with `ξ⊗a ≤ b`, found by scanning all elements.
    pub fn rres_brute(&self, a: u32, b: u32) -> Option<u32> {
        let cands: Vec<u32> = self.elements().filter(|&x| self.leq(self.tensor(x, a), b)).collect();
        cands.iter().copied().find(|&c| cands.iter().all(|&x| self.leq(x, c)))
    }

    fn finish(name: String, labels: Vec<String>, carrier: Carrier, unit: u32, dualizer: u32) -> Result<Quantale> {
        let n = labels.len();
        let mut q = Quantale { name, labels, carrier, unit, dualizer, ldual: vec![NONE; n], rdual: vec![NONE; n] };
        let full_rel = matches!(&q.carrier, Carrier::Relations { n: k, members, .. } if members.len() == 1 << (k * k));
        for a in q.elements() {
            let (l, r) = if full_rel {
                (q.rel_lres(a, dualizer), q.rel_rres(a, dualizer))
            } else {
                (q.lres_brute(a, dualizer), q.rres_brute(a, dualizer))
            };
            let l = l.ok_or_else(|| StautError::Validation(format!("no residual {}⊸d0", q.label(a))))?;
            let r = r.ok_or_else(|| StautError::Validation(format!("no residual d0⟜{}", q.label(a))))?;
            q.ldual[a as usize] = l;
            q.rdual[a as usize] = r;
        }
        for a in q.elements() {
            if q.ldual(q.rdual(a)) != a || q.rdual(q.ldual(a)) != a {
                return Err(StautError::Validation(format!(
                    "{} is not dualizing: double negation moves {}",
                    q.label(dualizer),
                    q.label(a)
                )));
            }
        }
        Ok(q)
    }

    /// For the full relation quantale, `a⊸b` is the union of the singletons
    /// `{(x,y)}` with `a;{(x,y)} ⊆ b`, since composition preserves unions.
    fn rel_lres(&self, a: u32, b: u32) -> Option<u32> {
        let (n, ra) = self.relation(a)?;
        let (_, rb) = self.relation(b)?;
        let mut out = 0u16;
        for x in 0..n {
            for y in 0..n {
                let single = 1u16 << (x * n + y);
                if rel::compose(n, ra, single) & !rb == 0 {
                    out |= single;
                }
            }
        }
        self.element_of_relation(out)
    }

    fn rel_rres(&self, a: u32, b: u32) -> Option<u32> {
        let (n, ra) = self.relation(a)?;
        let (_, rb) = self.relation(b)?;
        let mut out = 0u16;
        for x in 0..n {
            for y in 0..n {
                let single = 1u16 << (x * n + y);
                if rel::compose(n, single, ra) & !rb == 0 {
                    out |= single;
                }
            }
        }
        self.element_of_relation(out)
    }

    /// Explicit tables; validates order, monoid laws, monotonicity, residuals
    /// and the dualizing element.
    pub fn from_tables(
        name: &str,
        labels: Vec<String>,
        leq: Vec<bool>,
        tensor: Vec<u32>,
        unit: u32,
        dualizer: u32,
    ) -> Result<Quantale> {
        let n = labels.len();
        if n == 0 || leq.len() != n * n || tensor.len() != n * n {
            return Err(StautError::Validation("table sizes do not match the element count".into()));
        }
        if tensor.iter().any(|&t| t as usize >= n) || unit as usize >= n || dualizer as usize >= n {
            return Err(StautError::Validation("table entry out of range".into()));
        }
        Poset::new(n, leq.clone())?;
        let t = |a: usize, b: usize| tensor[a * n + b] as usize;
        let le = |a: usize, b: usize| leq[a * n + b];
        for a in 0..n {
            if t(unit as usize, a) != a || t(a, unit as usize) != a {
                return Err(StautError::Validation(format!("{} is not a unit at {}", labels[unit as usize], labels[a])));
            }
            for b in 0..n {
                for c in 0..n {
                    if t(t(a, b), c) != t(a, t(b, c)) {
                        return Err(StautError::Validation(format!(
                            "tensor not associative at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                    if le(a, b) && (!le(t(a, c), t(b, c)) || !le(t(c, a), t(c, b))) {
                        return Err(StautError::Validation(format!(
                            "tensor not monotone: {} ≤ {} but multiplying by {} breaks it",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        Quantale::finish(name.to_string(), labels, Carrier::Table { leq, tensor }, unit, dualizer)
    }

    /// Elementwise law checks: associativity, units, monotonicity, residual
    /// maximality. Exhaustive up to `cap` triples, seeded sampling beyond.
    pub fn check_laws(&self, cap: usize, seed: u64) -> Verdict {
        let n = self.size() as u32;
        let mut t = Tally::new();
        let mut triples: Vec<(u32, u32, u32)> = Vec::new();
        if (n as usize).pow(3) <= cap {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        triples.push((a, b, c));
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let els: Vec<u32> = (0..n).collect();
            for _ in 0..cap {
                let pick = |r: &mut ChaCha8Rng| *els.choose(r).expect("nonempty");
                triples.push((pick(&mut rng), pick(&mut rng), pick(&mut rng)));
            }
        }
        for (a, b, c) in triples {
            t.record(self.tensor(self.tensor(a, b), c) == self.tensor(a, self.tensor(b, c)), || {
                format!("associativity at ({}, {}, {})", self.label(a), self.label(b), self.label(c))
            });
            if self.leq(a, b) {
                t.record(
                    self.leq(self.tensor(a, c), self.tensor(b, c)) && self.leq(self.tensor(c, a), self.tensor(c, b)),
                    || format!("monotonicity at ({}, {}, {})", self.label(a), self.label(b), self.label(c)),
                );
            }
            // residual adjunction: a⊗b ≤ c ⟺ b ≤ ⊥a⅋c ⟺ a ≤ c⅋ᵖb
            let lhs = self.leq(self.tensor(a, b), c);
            t.record(lhs == self.leq(b, self.par(self.ldual(a), c)), || {
                format!("left residuation at ({}, {}, {})", self.label(a), self.label(b), self.label(c))
            });
            t.record(lhs == self.leq(a, self.par(c, self.rdual(b))), || {
                format!("right residuation at ({}, {}, {})", self.label(a), self.label(b), self.label(c))
            });
        }
        for a in 0..n {
            t.record(self.tensor(self.unit, a) == a && self.tensor(a, self.unit) == a, || {
                format!("unit law at {}", self.label(a))
            });
            t.record(self.ldual(self.rdual(a)) == a && self.rdual(self.ldual(a)) == a, || {
                format!("double negation at {}", self.label(a))
            });
        }
        t.finish()
    }
}

/// `⊥a = ᵖa` for every element; the first failing element on failure.
pub fn is_cyclic(q: &Quantale) -> (bool, Option<u32>) {
    match q.elements().find(|&a| q.ldual(a) != q.rdual(a)) {
        Some(a) => (false, Some(a)),
        None => (true, None),
    }
}

fn relations_quantale(name: String, n: usize, members: Vec<u16>, unit: u16, dualizer: u16) -> Result<Quantale> {
    let mut index = vec![NONE; 1 << (n * n)];
    for (i, &r) in members.iter().enumerate() {
        index[r as usize] = i as u32;
    }
    let labels = members.iter().map(|&r| rel::show(n, r)).collect();
    let (u, d) = (index[unit as usize], index[dualizer as usize]);
    if u == NONE || d == NONE {
        return Err(StautError::Validation("unit or dualizer is not a member".into()));
    }
    Quantale::finish(name, labels, Carrier::Relations { n, members, index }, u, d)
}

/// All relations on `{0..n}`; tensor is composition, unit the diagonal,
/// dualizer the inequality relation.
pub fn build_rel_quantale(n: usize) -> Result<Quantale> {
    if !(1..=4).contains(&n) {
        return Err(StautError::Size(format!("relation quantale needs 1 ≤ n ≤ 4, got {n}")));
    }
    let members: Vec<u16> = (0..=rel::full(n)).collect();
    let diag = rel::diagonal(n);
    relations_quantale(format!("rel:{n}"), n, members, diag, rel::complement(n, diag))
}

/// Relations `ω` on a poset with `(≤);ω;(≤) ⊆ ω`, under composition.
pub fn build_two_profunctor_quantale(p: &Poset) -> Result<Quantale> {
    let n = p.n;
    if !(1..=3).contains(&n) {
        return Err(StautError::Size(format!("profunctor quantale needs 1 ≤ |P| ≤ 3, got {n}")));
    }
    let le = p.as_relation();
    let members: Vec<u16> = (0..=rel::full(n)).filter(|&w| rel::compose(n, rel::compose(n, le, w), le) & !w == 0).collect();
    let dualizer = rel::complement(n, rel::reverse(n, le));
    relations_quantale(format!("2prof[{}]", rel::show(n, le)), n, members, le, dualizer)
}

/// A group with a compatible order (discrete if `leq` is `None`) and a
/// chosen dualizing element `d0`.
pub fn build_pointed_group(name: &str, labels: Vec<String>, table: Vec<u32>, leq: Option<Vec<bool>>, d0: u32) -> Result<Quantale> {
    let n = labels.len();
    if table.len() != n * n {
        return Err(StautError::Validation("group table has the wrong size".into()));
    }
    let unit = (0..n as u32)
        .find(|&u| (0..n).all(|a| table[u as usize * n + a] as usize == a && table[a * n + u as usize] as usize == a))
        .ok_or_else(|| StautError::Validation("group table has no identity".into()))?;
    for a in 0..n {
        if !(0..n).any(|b| table[a * n + b] == unit) {
            return Err(StautError::Validation(format!("{} has no inverse", labels[a])));
        }
    }
    let leq = leq.unwrap_or_else(|| (0..n * n).map(|i| i / n == i % n).collect());
    Quantale::from_tables(name, labels, leq, table, unit, d0)
}

/// The symmetric group on three letters, elements as images of `(0,1,2)`.
pub fn s3() -> (Vec<String>, Vec<u32>) {
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
    let labels = ["id", "t01", "t02", "t12", "c012", "c021"].iter().map(|s| s.to_string()).collect();
    let idx = |p: [usize; 3]| perms.iter().position(|&q| q == p).expect("closed") as u32;
    let mut table = Vec::with_capacity(36);
    for a in perms {
        for b in perms {
            // a⊗b: apply a, then b
            table.push(idx([b[a[0]], b[a[1]], b[a[2]]]));
        }
    }
    (labels, table)
}

pub fn build_s3(d0: &str) -> Result<Quantale> {
    let (labels, table) = s3();
    let d = labels.iter().position(|l| l == d0).ok_or_else(|| StautError::UnknownBuiltin {
        name: format!("s3:{d0}"),
        available: labels.iter().map(|l| format!("s3:{l}")).collect::<Vec<_>>().join(", "),
    })?;
    build_pointed_group(&format!("s3:{d0}"), labels, table, None, d as u32)
}

/// Integers mod `n` under addition, discrete order, dualizer `d0`.
pub fn build_cyclic_group(n: usize, d0: u32) -> Result<Quantale> {
    if n == 0 || d0 as usize >= n {
        return Err(StautError::Size(format!("need 0 ≤ d0 < n, got n = {n}, d0 = {d0}")));
    }
    let labels = (0..n).map(|i| i.to_string()).collect();
    let table = (0..n * n).map(|i| ((i / n + i % n) % n) as u32).collect();
    build_pointed_group(&format!("z:{n}"), labels, table, None, d0)
}

/// The `n`-element Łukasiewicz chain `{0, 1/(n-1), .., 1}` with truncated
/// addition; unit is the top, dualizer the bottom.
pub fn build_lukasiewicz(n: usize) -> Result<Quantale> {
    if n < 2 {
        return Err(StautError::Size(format!("Łukasiewicz chain needs n ≥ 2, got {n}")));
    }
    let top = n - 1;
    let labels = (0..n).map(|i| if i == 0 { "0".into() } else if i == top { "1".into() } else { format!("{i}/{top}") }).collect();
    let leq = (0..n * n).map(|i| i / n <= i % n).collect();
    let tensor = (0..n * n).map(|i| (i / n + i % n).saturating_sub(top) as u32).collect();
    Quantale::from_tables(&format!("luk:{n}"), labels, leq, tensor, top as u32, 0)
}

pub const BUILTINS: &str = "rel:1..4, s3:<id|t01|t02|t12|c012|c021>, s3:t, z:<n>, luk:<n>, 2prof:chain2, 2prof:discrete<n>, 2prof:chain3";

/// Resolves a CLI shorthand such as `rel:3` or `s3:t`.
pub fn builtin(spec: &str) -> Result<Quantale> {
    let unknown = || StautError::UnknownBuiltin { name: spec.to_string(), available: BUILTINS.to_string() };
    let (family, arg) = spec.split_once(':').ok_or_else(unknown)?;
    let num = || arg.parse::<usize>().map_err(|_| unknown());
    match family {
        "rel" => build_rel_quantale(num()?),
        "s3" => build_s3(if arg == "t" { "t01" } else { arg }),
        "z" => build_cyclic_group(num()?, 0),
        "luk" => build_lukasiewicz(num()?),
        "2prof" => {
            let p = if let Some(k) = arg.strip_prefix("chain") {
                Poset::chain(k.parse().map_err(|_| unknown())?)
            } else if let Some(k) = arg.strip_prefix("discrete") {
                Poset::discrete(k.parse().map_err(|_| unknown())?)
            } else {
                return Err(unknown());
            };
            build_two_profunctor_quantale(&p)
        }
        _ => Err(unknown()),
    }
}

/// Parses the line-oriented quantale description:
///
/// ```text
/// # comment
/// elements bot mid top
/// order bot mid          # bot ≤ mid; reflexive-transitive closure is taken
/// tensor mid mid = bot   # one line per pair
/// unit top
/// dualizer bot
/// ```
pub fn parse_description(text: &str) -> Result<Quantale> {
    let mut labels: Vec<String> = Vec::new();
    let mut order: Vec<(usize, usize)> = Vec::new();
    let mut tensor: Vec<Option<u32>> = Vec::new();
    let mut unit = None;
    let mut dualizer = None;
    let mut name = "file".to_string();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let words: Vec<(usize, &str)> = line
            .split_whitespace()
            .map(|w| (w.as_ptr() as usize - raw.as_ptr() as usize + 1, w))
            .collect();
        let Some(&(col0, kw)) = words.first() else { continue };
        let err = |col: usize, msg: String| StautError::Parse { line: ln + 1, col, msg };
        let lookup = |&(col, w): &(usize, &str)| {
            labels
                .iter()
                .position(|l| l == w)
                .ok_or_else(|| err(col, format!("unknown element `{w}`")))
        };
        match kw {
            "name" => name = words.get(1).map(|w| w.1.to_string()).unwrap_or(name),
            "elements" => {
                if !labels.is_empty() {
                    return Err(err(col0, "elements declared twice".into()));
                }
                labels = words[1..].iter().map(|w| w.1.to_string()).collect();
                if labels.is_empty() {
                    return Err(err(col0, "no elements".into()));
                }
                tensor = vec![None; labels.len() * labels.len()];
            }
            "order" => {
                if words.len() != 3 {
                    return Err(err(col0, "expected `order <a> <b>`".into()));
                }
                order.push((lookup(&words[1])?, lookup(&words[2])?));
            }
            "tensor" => {
                if words.len() != 5 || words[3].1 != "=" {
                    return Err(err(col0, "expected `tensor <a> <b> = <c>`".into()));
                }
                let (a, b, c) = (lookup(&words[1])?, lookup(&words[2])?, lookup(&words[4])?);
                tensor[a * labels.len() + b] = Some(c as u32);
            }
            "unit" | "dualizer" => {
                if words.len() != 2 {
                    return Err(err(col0, format!("expected `{kw} <a>`")));
                }
                let v = Some(lookup(&words[1])? as u32);
                if kw == "unit" {
                    unit = v;
                } else {
                    dualizer = v;
                }
            }
            other => return Err(err(col0, format!("unknown directive `{other}`"))),
        }
    }
    let n = labels.len();
    let end = |msg: &str| StautError::Parse { line: text.lines().count().max(1), col: 1, msg: msg.to_string() };
    if n == 0 {
        return Err(end("missing `elements` line"));
    }
    let mut leq: Vec<bool> = (0..n * n).map(|i| i / n == i % n).collect();
    for (a, b) in order {
        leq[a * n + b] = true;
    }
    for k in 0..n {
        for a in 0..n {
            for b in 0..n {
                if leq[a * n + k] && leq[k * n + b] {
                    leq[a * n + b] = true;
                }
            }
        }
    }
    let tensor: Vec<u32> = tensor
        .iter()
        .enumerate()
        .map(|(i, t)| t.ok_or_else(|| end(&format!("missing tensor entry for ({}, {})", labels[i / n], labels[i % n]))))
        .collect::<Result<_>>()?;
    let unit = unit.ok_or_else(|| end("missing `unit` line"))?;
    let dualizer = dualizer.ok_or_else(|| end("missing `dualizer` line"))?;
    Quantale::from_tables(&name, labels, leq, tensor, unit, dualizer)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent residual: largest relation ξ with ω;ξ ⊆ ≠, scanning all
    /// relations as plain pair sets.
    fn oracle_bot(n: usize, w: u16) -> u16 {
        let pairs = |r: u16| -> Vec<(usize, usize)> {
            (0..n * n).filter(|i| r >> i & 1 == 1).map(|i| (i / n, i % n)).collect()
        };
        let mut best = 0u16;
        for xi in 0..=rel::full(n) {
            let ok = pairs(w).iter().all(|&(a, b)| pairs(xi).iter().all(|&(c, dd)| c != b || a != dd));
            if ok {
                best |= xi;
            }
        }
        best
    }

    #[test]
    fn rel1_is_two_element() {
        let q = build_rel_quantale(1).unwrap();
        assert_eq!(q.size(), 2);
        assert_eq!(q.relation(q.dualizer()).unwrap().1, 0);
    }

    #[test]
    fn rel2_bot_of_single_loop() {
        let q = build_rel_quantale(2).unwrap();
        let w = q.element_of_relation(0b0001).unwrap(); // {(0,0)}
        let b = q.relation(q.ldual(w)).unwrap().1;
        assert_eq!(rel::show(2, b), "{(0,1),(1,0),(1,1)}");
        assert_eq!(b, oracle_bot(2, 0b0001));
    }

    #[test]
    fn rel_composition_example() {
        // {(0,1)} ; {(1,0)} = {(0,0)}
        assert_eq!(rel::compose(2, 1 << 1, 1 << 2), 1);
    }

    #[test]
    fn bot_of_dualizer_is_unit() {
        for n in 1..=3 {
            let q = build_rel_quantale(n).unwrap();
            assert_eq!(q.ldual(q.dualizer()), q.unit());
            assert_eq!(q.rdual(q.dualizer()), q.unit());
        }
    }

    #[test]
    fn rel_residual_matches_oracle_and_formula() {
        for n in 1..=3 {
            let q = build_rel_quantale(n).unwrap();
            for a in q.elements() {
                let (_, r) = q.relation(a).unwrap();
                let expect = rel::complement(n, rel::reverse(n, r));
                assert_eq!(q.relation(q.ldual(a)).unwrap().1, expect);
                assert_eq!(q.relation(q.rdual(a)).unwrap().1, expect);
                if n <= 2 {
                    assert_eq!(expect, oracle_bot(n, r));
                }
            }
            assert!(is_cyclic(&q).0);
        }
    }

    #[test]
    fn rel4_builds_and_rel5_refused() {
        let q = build_rel_quantale(4).unwrap();
        assert_eq!(q.size(), 65536);
        assert!(matches!(build_rel_quantale(5), Err(StautError::Size(_))));
        assert!(matches!(build_rel_quantale(0), Err(StautError::Size(_))));
    }

    #[test]
    fn s3_cyclic_exactly_at_centre() {
        let (labels, table) = s3();
        for (i, l) in labels.iter().enumerate() {
            let q = build_s3(l).unwrap();
            // brute-force centrality of d0
            let central = (0..6).all(|g| table[g * 6 + i] == table[i * 6 + g]);
            assert_eq!(is_cyclic(&q).0, central, "d0 = {l}");
            assert_eq!(central, l == "id");
        }
        let (ok, w) = is_cyclic(&build_s3("t01").unwrap());
        assert!(!ok && w.is_some());
    }

    #[test]
    fn pointed_group_residual_is_inverse_times() {
        // (Z/12, +, 0): 3⊸5 = 2 means ⊥3 ⅋ 5 = 2.
        let q = build_cyclic_group(12, 0).unwrap();
        assert_eq!(q.par(q.ldual(3), 5), 2);
        assert_eq!(q.lres_brute(3, 5), Some(2));
        assert!(is_cyclic(&q).0);
        assert!(is_cyclic(&build_cyclic_group(6, 0).unwrap()).0);
    }

    #[test]
    fn two_profunctors_on_discrete_two_match_rel2() {
        let p = build_two_profunctor_quantale(&Poset::discrete(2)).unwrap();
        let r = build_rel_quantale(2).unwrap();
        assert_eq!(p.size(), 16);
        for a in p.elements() {
            let ra = r.element_of_relation(p.relation(a).unwrap().1).unwrap();
            for b in p.elements() {
                let rb = r.element_of_relation(p.relation(b).unwrap().1).unwrap();
                assert_eq!(p.leq(a, b), r.leq(ra, rb));
                let pt = p.relation(p.tensor(a, b)).unwrap().1;
                assert_eq!(r.element_of_relation(pt), Some(r.tensor(ra, rb)));
            }
        }
    }

    #[test]
    fn chain2_profunctors() {
        let q = build_two_profunctor_quantale(&Poset::chain(2)).unwrap();
        assert_eq!(q.ldual(q.unit()), q.dualizer());
        let full = q.element_of_relation(rel::full(2)).unwrap();
        assert_eq!(q.relation(q.ldual(full)).unwrap().1, 0);
        assert!(is_cyclic(&q).0);
    }

    #[test]
    fn poset_counts() {
        assert_eq!(Poset::all(1).len(), 1);
        assert_eq!(Poset::all(2).len(), 3);
        assert_eq!(Poset::all(3).len(), 19);
    }

    #[test]
    fn lukasiewicz_is_cyclic_and_lawful() {
        let q = build_lukasiewicz(3).unwrap();
        assert!(is_cyclic(&q).0);
        assert!(q.check_laws(10_000, 0).pass);
        assert_eq!(q.label(q.ldual(1)), "1/2");
    }

    #[test]
    fn description_roundtrip_and_errors() {
        let text = "name three\nelements bot mid top\norder bot mid\norder mid top\n\
                    tensor bot bot = bot\ntensor bot mid = bot\ntensor bot top = bot\n\
                    tensor mid bot = bot\ntensor mid mid = bot\ntensor mid top = mid\n\
                    tensor top bot = bot\ntensor top mid = mid\ntensor top top = top\n\
                    unit top\ndualizer bot\n";
        let q = parse_description(text).unwrap();
        assert_eq!(q.size(), 3);
        assert!(is_cyclic(&q).0);
        let bad = "elements a b\norder a c\n";
        match parse_description(bad) {
            Err(StautError::Parse { line, col, .. }) => assert_eq!((line, col), (2, 9)),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(builtin("nope:1"), Err(StautError::UnknownBuiltin { .. })));
    }

    #[test]
    fn incompatible_order_rejected() {
        // Z/2 with 0 ≤ 1: adding 1 reverses the order.
        let r = build_pointed_group("bad", vec!["0".into(), "1".into()], vec![0, 1, 1, 0], Some(vec![true, true, false, true]), 0);
        assert!(matches!(r, Err(StautError::Validation(_))));
    }
}
