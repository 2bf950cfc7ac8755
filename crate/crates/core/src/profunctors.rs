//! Categories and profunctors enriched in a finite quantale. Coends are
//! joins and ends are meets; action compatibility is a property, so
//! modulations are pointwise order witnesses.

use crate::cyclicity::{classify, validate_cycle, CycleData};
use crate::error::{Result, StautError};
use crate::quantale::{is_cyclic, Quantale};
use crate::report::{Check, Tally, Verdict};
use crate::staut::{
    check_canonical_maps, check_curry_bijection, check_distribution_coherence, check_monoidal_coherence,
    check_structure_maps, check_triangles, demorgan, ldual_mor, residual_objects, rcurry, DeMorgan, Mor, StautModel,
};
use crate::thin::{ThinAlgebra, ThinModel};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

/// A small category enriched in `v`: `hom(a,b) ∈ v`, with `e ≤ hom(a,a)` and
/// `hom(a,b)⊗hom(b,c) ≤ hom(a,c)`.
#[derive(Clone, Debug)]
pub struct VCat {
    pub v: Arc<Quantale>,
    pub objects: Vec<String>,
    hom: Vec<u32>,
}

impl PartialEq for VCat {
    fn eq(&self, o: &VCat) -> bool {
        Arc::ptr_eq(&self.v, &o.v) && self.objects == o.objects && self.hom == o.hom
    }
}

impl VCat {
    pub fn new(v: Arc<Quantale>, objects: Vec<String>, hom: Vec<u32>) -> Result<VCat> {
        let n = objects.len();
        if n == 0 || n > 3 {
            return Err(StautError::Size(format!("enriched category needs 1 to 3 objects, got {n}")));
        }
        if hom.len() != n * n || hom.iter().any(|&x| x as usize >= v.size()) {
            return Err(StautError::Validation("hom matrix has the wrong size or a foreign element".into()));
        }
        if v.bottom().is_none() || v.top().is_none() {
            return Err(StautError::Validation(format!("{} has no bottom or top", v.name())));
        }
        let c = VCat { v, objects, hom };
        for a in 0..n {
            if !c.v.leq(c.v.unit(), c.hom(a, a)) {
                return Err(StautError::Validation(format!("identity fails: e ≰ hom({0},{0})", c.objects[a])));
            }
            for b in 0..n {
                for d in 0..n {
                    if !c.v.leq(c.v.tensor(c.hom(a, b), c.hom(b, d)), c.hom(a, d)) {
                        return Err(StautError::Validation(format!(
                            "composition fails: hom({a},{b})⊗hom({b},{d}) ≰ hom({a},{d})",
                            a = c.objects[a],
                            b = c.objects[b],
                            d = c.objects[d]
                        )));
                    }
                }
            }
        }
        Ok(c)
    }

    /// `hom(a,a) = e`, everything else bottom.
    pub fn discrete(v: Arc<Quantale>, n: usize) -> Result<VCat> {
        let (e, bot) = (v.unit(), v.bottom().unwrap_or(0));
        let hom = (0..n * n).map(|i| if i / n == i % n { e } else { bot }).collect();
        VCat::new(v, (0..n).map(|i| format!("c{i}")).collect(), hom)
    }

    /// `hom(a,b) = e` for `a ≤ b`, bottom otherwise.
    pub fn chain(v: Arc<Quantale>, n: usize) -> Result<VCat> {
        let (e, bot) = (v.unit(), v.bottom().unwrap_or(0));
        let hom = (0..n * n).map(|i| if i / n <= i % n { e } else { bot }).collect();
        VCat::new(v, (0..n).map(|i| format!("c{i}")).collect(), hom)
    }

    pub fn n(&self) -> usize {
        self.objects.len()
    }

    pub fn hom(&self, a: usize, b: usize) -> u32 {
        self.hom[a * self.n() + b]
    }

    fn join_all(&self, xs: impl Iterator<Item = u32>) -> u32 {
        let bot = self.v.bottom().expect("checked at construction");
        xs.fold(bot, |acc, x| self.v.join(acc, x).expect("finite quantale is a complete lattice"))
    }

    fn meet_all(&self, xs: impl Iterator<Item = u32>) -> u32 {
        let top = self.v.top().expect("checked at construction");
        xs.fold(top, |acc, x| self.v.meet(acc, x).expect("finite quantale is a complete lattice"))
    }
}

/// Parses a VCat description:
///
/// ```text
/// quantale luk:3
/// objects a b
/// hom a b = 1/2      # unlisted diagonal entries are e, others bottom
/// ```
pub fn parse_vcat(text: &str) -> Result<VCat> {
    let mut v: Option<Arc<Quantale>> = None;
    let mut objects: Vec<String> = Vec::new();
    let mut entries: Vec<(usize, usize, usize, String)> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let words: Vec<&str> = line.split_whitespace().collect();
        let Some(&head) = words.first() else { continue };
        let col = raw.find(head).unwrap_or(0) + 1;
        let perr = |msg: String| StautError::Parse { line: ln + 1, col, msg };
        match head {
            "quantale" => {
                let spec = words.get(1).ok_or_else(|| perr("`quantale` needs a builtin name".into()))?;
                v = Some(Arc::new(crate::quantale::builtin(spec).map_err(|e| perr(e.to_string()))?));
            }
            "objects" => objects = words[1..].iter().map(|s| s.to_string()).collect(),
            "hom" => {
                if words.len() != 5 || words[3] != "=" {
                    return Err(perr("expected `hom <a> <b> = <element>`".into()));
                }
                let find = |s: &str| objects.iter().position(|o| o == s);
                let a = find(words[1]).ok_or_else(|| perr(format!("unknown object `{}`", words[1])))?;
                let b = find(words[2]).ok_or_else(|| perr(format!("unknown object `{}`", words[2])))?;
                entries.push((ln + 1, a, b, words[4].to_string()));
            }
            other => return Err(perr(format!("unknown directive `{other}`"))),
        }
    }
    let v = v.ok_or(StautError::Parse { line: 1, col: 1, msg: "missing `quantale` line".into() })?;
    let n = objects.len();
    let (e, bot) = (v.unit(), v.bottom().unwrap_or(0));
    let mut hom: Vec<u32> = (0..n * n).map(|i| if i / n == i % n { e } else { bot }).collect();
    for (line, a, b, label) in entries {
        hom[a * n + b] = v
            .index_of(&label)
            .ok_or_else(|| StautError::Parse { line, col: 1, msg: format!("`{label}` is not an element of {}", v.name()) })?;
    }
    VCat::new(v, objects, hom)
}

/// A profunctor `a ⇸ b`: values `f(q,r)`, `q ∈ a`, `r ∈ b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VProf {
    pub vals: Vec<u32>,
}

impl VProf {
    pub fn get(&self, nb: usize, q: usize, r: usize) -> u32 {
        self.vals[q * nb + r]
    }
}

/// First failing action inequality, if any.
pub fn action_failure(a: &VCat, b: &VCat, f: &VProf) -> Option<String> {
    let v = &a.v;
    let (na, nb) = (a.n(), b.n());
    for p in 0..na {
        for q in 0..na {
            for r in 0..nb {
                if !v.leq(v.tensor(a.hom(p, q), f.get(nb, q, r)), f.get(nb, p, r)) {
                    return Some(format!("left action: hom({p},{q})⊗f({q},{r}) ≰ f({p},{r})"));
                }
            }
        }
    }
    for q in 0..na {
        for r in 0..nb {
            for s in 0..nb {
                if !v.leq(v.tensor(f.get(nb, q, r), b.hom(r, s)), f.get(nb, q, s)) {
                    return Some(format!("right action: f({q},{r})⊗hom({r},{s}) ≰ f({q},{s})"));
                }
            }
        }
    }
    None
}

fn verified(a: &VCat, b: &VCat, f: VProf, what: &str) -> Result<VProf> {
    match action_failure(a, b, &f) {
        None => Ok(f),
        Some(w) => {
            let hint = match is_cyclic(&a.v) {
                (false, Some(x)) => format!("; {} is not cyclic at {}", a.v.name(), a.v.label(x)),
                _ => String::new(),
            };
            Err(StautError::Validation(format!("{what} is not a profunctor: {w}{hint}")))
        }
    }
}

fn same_base(cats: &[&VCat]) -> Result<()> {
    if cats.windows(2).all(|w| Arc::ptr_eq(&w[0].v, &w[1].v)) {
        Ok(())
    } else {
        Err(StautError::ModelMismatch("categories are enriched in different quantales".into()))
    }
}

/// `(f⊗g)(q,s) = ⋁_r f(q,r)⊗g(r,s)` for `f: a ⇸ b`, `g: b ⇸ c`.
pub fn compose_prof(a: &VCat, b: &VCat, c: &VCat, f: &VProf, g: &VProf) -> Result<VProf> {
    same_base(&[a, b, c])?;
    if f.vals.len() != a.n() * b.n() || g.vals.len() != b.n() * c.n() {
        return Err(StautError::ModelMismatch("profunctor sizes do not match the categories".into()));
    }
    let (nb, nc) = (b.n(), c.n());
    let vals = (0..a.n() * nc)
        .map(|i| {
            let (q, s) = (i / nc, i % nc);
            b.join_all((0..nb).map(|r| a.v.tensor(f.get(nb, q, r), g.get(nc, r, s))))
        })
        .collect();
    verified(a, c, VProf { vals }, "composite")
}

/// `(f⅋g)(q,s) = ⋀_r f(q,r)⅋g(r,s)`.
pub fn par_prof(a: &VCat, b: &VCat, c: &VCat, f: &VProf, g: &VProf) -> Result<VProf> {
    same_base(&[a, b, c])?;
    if f.vals.len() != a.n() * b.n() || g.vals.len() != b.n() * c.n() {
        return Err(StautError::ModelMismatch("profunctor sizes do not match the categories".into()));
    }
    let (nb, nc) = (b.n(), c.n());
    let vals = (0..a.n() * nc)
        .map(|i| {
            let (q, s) = (i / nc, i % nc);
            b.meet_all((0..nb).map(|r| a.v.par(f.get(nb, q, r), g.get(nc, r, s))))
        })
        .collect();
    verified(a, c, VProf { vals }, "par")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `(⊥f)(q,r) = ⊥(f(r,q))` or `(ᵖf)(q,r) = ᵖ(f(r,q))`, a profunctor `b ⇸ a`.
pub fn dual_prof(a: &VCat, b: &VCat, f: &VProf, side: Side) -> Result<VProf> {
    same_base(&[a, b])?;
    let (na, nb) = (a.n(), b.n());
    let vals = (0..nb * na)
        .map(|i| {
            let (q, r) = (i / na, i % na);
            let x = f.get(nb, r, q);
            match side {
                Side::Left => a.v.ldual(x),
                Side::Right => a.v.rdual(x),
            }
        })
        .collect();
    verified(b, a, VProf { vals }, "dual")
}

pub fn id_prof(c: &VCat) -> VProf {
    VProf { vals: c.hom.clone() }
}

/// `d(q,r) = ⊥hom(r,q)`.
pub fn dualizing_prof(c: &VCat) -> VProf {
    let n = c.n();
    VProf { vals: (0..n * n).map(|i| c.v.ldual(c.hom(i % n, i / n))).collect() }
}

/// A modulation `f ⇒ g`: exists iff `f ≤ g` pointwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Modulation {
    pub from: VProf,
    pub to: VProf,
}

impl Modulation {
    pub fn new(v: &Quantale, from: &VProf, to: &VProf) -> Option<Modulation> {
        let ok = from.vals.len() == to.vals.len() && from.vals.iter().zip(&to.vals).all(|(&x, &y)| v.leq(x, y));
        ok.then(|| Modulation { from: from.clone(), to: to.clone() })
    }
}

/// Every endo-profunctor on `c`: exhaustive when `|V|^(n²) ≤ 65536`, else
/// `cap` seeded samples filtered by the action inequalities. Returns the list
/// and whether it is exhaustive.
pub fn enumerate_profs(c: &VCat, cap: usize, seed: u64) -> (Vec<VProf>, bool) {
    let n2 = c.n() * c.n();
    let k = c.v.size();
    let total = (k as u128).checked_pow(n2 as u32).unwrap_or(u128::MAX);
    let mut out = Vec::new();
    if total <= 65536 {
        for code in 0..total as usize {
            let mut x = code;
            let vals: Vec<u32> = (0..n2)
                .map(|_| {
                    let d = (x % k) as u32;
                    x /= k;
                    d
                })
                .collect();
            let f = VProf { vals };
            if action_failure(c, c, &f).is_none() {
                out.push(f);
            }
        }
        (out, true)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..cap {
            let f = VProf { vals: (0..n2).map(|_| rng.gen_range(0..k as u32)).collect() };
            if action_failure(c, c, &f).is_none() && !out.contains(&f) {
                out.push(f);
            }
        }
        (out, false)
    }
}

/// `Prof_V(c,c)` as a thin algebra.
pub struct ProfAlgebra {
    pub c: VCat,
}

impl ThinAlgebra for ProfAlgebra {
    type El = Vec<u32>;
    fn leq(&self, a: &Vec<u32>, b: &Vec<u32>) -> bool {
        a.iter().zip(b).all(|(&x, &y)| self.c.v.leq(x, y))
    }
    fn tensor(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        let c = &self.c;
        compose_prof(c, c, c, &VProf { vals: a.clone() }, &VProf { vals: b.clone() }).expect("closed under composition").vals
    }
    fn par(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        let c = &self.c;
        par_prof(c, c, c, &VProf { vals: a.clone() }, &VProf { vals: b.clone() }).expect("closed under par").vals
    }
    fn unit(&self) -> Vec<u32> {
        id_prof(&self.c).vals
    }
    fn dualizer(&self) -> Vec<u32> {
        dualizing_prof(&self.c).vals
    }
    fn ldual(&self, a: &Vec<u32>) -> Vec<u32> {
        dual_prof(&self.c, &self.c, &VProf { vals: a.clone() }, Side::Left).expect("closed under ⊥").vals
    }
    fn rdual(&self, a: &Vec<u32>) -> Vec<u32> {
        dual_prof(&self.c, &self.c, &VProf { vals: a.clone() }, Side::Right).expect("closed under ᵖ").vals
    }
    fn show(&self, a: &Vec<u32>) -> String {
        let n = self.c.n();
        let rows: Vec<String> = a
            .chunks(n)
            .map(|r| r.iter().map(|&x| self.c.v.label(x).to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        format!("[{}]", rows.join("; "))
    }
}

fn sample_tuples(n: usize, arity: u32, cap: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<usize>> {
    let total = (n as u128).pow(arity);
    if total <= cap as u128 {
        (0..total as usize)
            .map(|mut x| {
                (0..arity)
                    .map(|_| {
                        let d = x % n;
                        x /= n;
                        d
                    })
                    .collect()
            })
            .collect()
    } else {
        (0..cap).map(|_| (0..arity).map(|_| rng.gen_range(0..n)).collect()).collect()
    }
}

/// The star-autonomous and cyclic structure of `Prof_V(c,c)`, checked on
/// enumerated profunctors as pointwise inequalities, plus the thin-model
/// route through the generic suites with the identity cycle.
pub fn check_prof_staut(c: &VCat, cap: usize, seed: u64) -> Vec<Check> {
    let (profs, exhaustive) = enumerate_profs(c, cap, seed);
    let alg = ProfAlgebra { c: c.clone() };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let scope = if exhaustive { "all".to_string() } else { format!("{} sampled (cap {cap})", profs.len()) };
    let mut checks = Vec::new();
    let n = profs.len();
    let el = |i: usize| &profs[i].vals;
    let (e, d) = (alg.unit(), alg.dualizer());
    let eqv = |x: &Vec<u32>, y: &Vec<u32>| alg.leq(x, y) && alg.leq(y, x);

    let mut t = Tally::new();
    for f in &profs {
        let (l, r) = (alg.ldual(&f.vals), alg.rdual(&f.vals));
        let ok = l == r && alg.rdual(&l) == f.vals && alg.ldual(&r) == f.vals;
        t.record(ok, || format!("⊥f ≠ ᵖf or double negation fails at {}", alg.show(&f.vals)));
    }
    checks.push(Check::new("prof.cyclic-duals", format!("⊥f = ᵖf and ⊥ᵖf = f for {scope} {n} profunctors"), t.finish()));

    let mut t = Tally::new();
    for f in &profs {
        let (l, r) = (alg.ldual(&f.vals), alg.rdual(&f.vals));
        t.record(alg.leq(&e, &alg.par(&l, &f.vals)) && alg.leq(&alg.tensor(&f.vals, &l), &d), || {
            format!("left duality data missing at {}", alg.show(&f.vals))
        });
        t.record(alg.leq(&e, &alg.par(&f.vals, &r)) && alg.leq(&alg.tensor(&r, &f.vals), &d), || {
            format!("right duality data missing at {}", alg.show(&f.vals))
        });
        t.record(eqv(&alg.tensor(&e, &f.vals), &f.vals) && eqv(&alg.tensor(&f.vals, &e), &f.vals), || {
            format!("⊗ unit law at {}", alg.show(&f.vals))
        });
        t.record(eqv(&alg.par(&d, &f.vals), &f.vals) && eqv(&alg.par(&f.vals, &d), &f.vals), || {
            format!("⅋ unit law at {}", alg.show(&f.vals))
        });
    }
    checks.push(Check::new("prof.units-and-duality", format!("τ, γ and unitors exist for {scope} profunctors"), t.finish()));

    let mut t = Tally::new();
    for ij in sample_tuples(n, 2, 4096, &mut rng) {
        let (f, g) = (el(ij[0]), el(ij[1]));
        // de Morgan: ⊥(f⊗g) = ⊥g⅋⊥f
        t.record(alg.ldual(&alg.tensor(f, g)) == alg.par(&alg.ldual(g), &alg.ldual(f)), || {
            format!("⊥(f⊗g) ≠ ⊥g⅋⊥f at f = {}, g = {}", alg.show(f), alg.show(g))
        });
        // residuation: f⊗g ≤ d ⟺ g ≤ ⊥f
        t.record(alg.leq(&alg.tensor(f, g), &d) == alg.leq(g, &alg.ldual(f)), || {
            format!("⊥f is not the residual at f = {}, g = {}", alg.show(f), alg.show(g))
        });
    }
    checks.push(Check::new("prof.de-morgan", "pointwise de Morgan and residuation on pairs", t.finish()));

    let mut t = Tally::new();
    for ijk in sample_tuples(n, 3, 20000, &mut rng) {
        let (f, g, h) = (el(ijk[0]), el(ijk[1]), el(ijk[2]));
        t.record(alg.tensor(&alg.tensor(f, g), h) == alg.tensor(f, &alg.tensor(g, h)), || {
            format!("⊗ associativity at {}, {}, {}", alg.show(f), alg.show(g), alg.show(h))
        });
        t.record(alg.par(&alg.par(f, g), h) == alg.par(f, &alg.par(g, h)), || {
            format!("⅋ associativity at {}, {}, {}", alg.show(f), alg.show(g), alg.show(h))
        });
        t.record(alg.leq(&alg.tensor(f, &alg.par(g, h)), &alg.par(&alg.tensor(f, g), h)), || {
            format!("δL missing at {}, {}, {}", alg.show(f), alg.show(g), alg.show(h))
        });
        t.record(alg.leq(&alg.tensor(&alg.par(f, g), h), &alg.par(f, &alg.tensor(g, h))), || {
            format!("δR missing at {}, {}, {}", alg.show(f), alg.show(g), alg.show(h))
        });
    }
    checks.push(Check::new("prof.linear-distribution", "associativity and both linear distributions on triples", t.finish()));

    checks.push(Check::new(
        "prof.dual-action-routes",
        "contraposition and residuation routes give the same dual actions",
        check_dual_action_routes(c, &profs),
    ));

    // The generic suites, with up to two generators.
    let gens: Vec<Vec<u32>> = profs.iter().map(|f| f.vals.clone()).filter(|x| *x != e && *x != d).take(2).collect();
    let name = format!("prof[{}:{}]", c.v.name(), c.n());
    let model = ThinModel::new(&name, ProfAlgebra { c: c.clone() }, gens, 1);
    checks.extend(generic_suite(&model, "prof.model"));
    checks
}

/// Core staut invariants plus classification of the identity cycle.
pub fn generic_suite(m: &dyn StautModel, prefix: &str) -> Vec<Check> {
    let mut out = vec![
        Check::new(format!("{prefix}.structure-maps"), "structure maps are well-formed", check_structure_maps(m)),
        Check::new(format!("{prefix}.triangles"), "linear triangle identities", check_triangles(m)),
        Check::new(format!("{prefix}.curry"), "currying is bijective", check_curry_bijection(m)),
        Check::new(format!("{prefix}.monoidal"), "pentagons and unit triangles", check_monoidal_coherence(m)),
        Check::new(format!("{prefix}.distribution"), "linear distribution coherence", check_distribution_coherence(m)),
        Check::new(format!("{prefix}.canonical"), "de Morgan and cancellation maps invertible", check_canonical_maps(m)),
    ];
    let c = CycleData::identity();
    out.push(Check::new(format!("{prefix}.cycle-valid"), "identity cycle invertible and natural", validate_cycle(m, &c)));
    let cl = classify(m, &c);
    let all = cl.profile.results.values().fold(Verdict::ok(0), |acc, v| acc.and(v.clone()));
    out.push(Check::new(format!("{prefix}.cycle-axioms"), format!("identity cycle: {}", cl.profile.row()), all));
    out
}

/// The dual actions in the thin setting, computed twice: `h⊗⊥x ≤ ⊥y` by
/// contraposing `y⊗h ≤ x`, and `ᵖx ≤ ⊥h⅋ᵖy` by dualizing `y⊗h` and
/// transporting along the cycle. Both must hold and agree.
pub fn check_dual_action_routes(c: &VCat, profs: &[VProf]) -> Verdict {
    let v = &c.v;
    let n = c.n();
    let mut t = Tally::new();
    for f in profs {
        for p in 0..n {
            for q in 0..n {
                for r in 0..n {
                    let h = c.hom(p, q);
                    let (x, y) = (f.get(n, r, q), f.get(n, r, p));
                    let route1 = v.leq(v.tensor(h, v.ldual(x)), v.ldual(y));
                    let route2 = v.leq(v.rdual(x), v.par(v.ldual(h), v.rdual(y)));
                    t.record(route1 && route2, || format!("dual action routes disagree at ({p},{q},{r}) for {:?}", f.vals));
                }
            }
        }
    }
    t.finish()
}

/// Explicit bijection between `Prof_2(c,c)` for discrete `c` and the
/// relation quantale on `|c|` points, checked to preserve order, both
/// monoidal structures, both duals and the units.
pub fn check_iso_with_relations(c: &VCat, rel: &Quantale) -> Verdict {
    let v = &c.v;
    let n = c.n();
    let Some(top) = v.top() else { return Verdict::fail(0, "no top") };
    let (profs, _) = enumerate_profs(c, 0, 0);
    let alg = ProfAlgebra { c: c.clone() };
    let phi = |f: &Vec<u32>| -> Option<u32> {
        let bits = (0..n * n).filter(|&i| f[i] == top).fold(0u16, |acc, i| acc | 1 << i);
        rel.element_of_relation(bits)
    };
    let mut t = Tally::new();
    let images: Vec<Option<u32>> = profs.iter().map(|f| phi(&f.vals)).collect();
    let mut seen: Vec<u32> = images.iter().flatten().copied().collect();
    seen.sort();
    seen.dedup();
    t.record(seen.len() == profs.len() && profs.len() == rel.size(), || {
        format!("{} profunctors map onto {} of {} relations", profs.len(), seen.len(), rel.size())
    });
    t.record(phi(&alg.unit()) == Some(rel.unit()) && phi(&alg.dualizer()) == Some(rel.dualizer()), || {
        "units do not correspond".into()
    });
    for f in &profs {
        let pf = phi(&f.vals);
        t.record(phi(&alg.ldual(&f.vals)) == pf.map(|x| rel.ldual(x)), || format!("⊥ not preserved at {:?}", f.vals));
        t.record(phi(&alg.rdual(&f.vals)) == pf.map(|x| rel.rdual(x)), || format!("ᵖ not preserved at {:?}", f.vals));
        for g in &profs {
            let pg = phi(&g.vals);
            let (Some(a), Some(b)) = (pf, pg) else { continue };
            t.record(phi(&alg.tensor(&f.vals, &g.vals)) == Some(rel.tensor(a, b)), || {
                format!("⊗ not preserved at {:?}, {:?}", f.vals, g.vals)
            });
            t.record(phi(&alg.par(&f.vals, &g.vals)) == Some(rel.par(a, b)), || {
                format!("⅋ not preserved at {:?}, {:?}", f.vals, g.vals)
            });
            t.record(alg.leq(&f.vals, &g.vals) == rel.leq(a, b), || format!("order not preserved at {:?}, {:?}", f.vals, g.vals));
        }
    }
    t.finish()
}

/// The two maps `⊥y⊗a → ⊥x` built from an action `α: a⊗x → y`: transport
/// the contraposed action along `ν`, or curry through `⊥α`, the de Morgan
/// map and `id⅋ν_a`. Returns `(route1, route2)`.
pub fn contraposition_routes(m: &dyn StautModel, c: &CycleData, alpha: &Mor) -> Result<(Mor, Mor)> {
    let (a, x) = crate::staut::split_tensor(alpha.dom)?;
    let y = alpha.cod;
    let (ly, ry, lx) = (y.ldual(), y.rdual(), x.ldual());
    // ᵖy⊗a → ᵖx, the contraposed action
    let act = rcurry(
        m,
        &m.compose(
            &m.compose(&m.assoc_t(ry, a, x), &m.tensor_mor(&m.id(ry), alpha))?,
            &m.gamma_r(y),
        )?,
    )?;
    let nu_x_inv = m.inverse(&c.nu(m, x)?)?;
    let route1 = m.compose(&m.compose(&m.tensor_mor(&c.nu(m, y)?, &m.id(a)), &act)?, &nu_x_inv)?;
    // ⊥y → ⊥(a⊗x) → ⊥x⅋⊥a → ⊥x⅋ᵖa, then uncurry against a
    let g = m.compose(
        &m.compose(&ldual_mor(m, alpha)?, &demorgan(m, a, x, DeMorgan::LOfTensor)?)?,
        &m.par_mor(&m.id(lx), &c.nu(m, a)?),
    )?;
    let ev = residual_objects(m, a, lx)?.eval_r;
    let route2 = m.compose(&m.tensor_mor(&g, &m.id(a)), &ev)?;
    debug_assert!(route1.typed_as(ly.tensor(a), lx));
    Ok((route1, route2))
}

/// Both routes agree for sampled actions between generators.
pub fn check_contraposition_agreement(m: &dyn StautModel, c: &CycleData, samples: usize, seed: u64) -> Verdict {
    let gens = m.generators();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::new();
    let mut attempts = 0;
    while (t.probes() as usize) < samples && attempts < samples * 20 {
        attempts += 1;
        let mut pick = || gens[rng.gen_range(0..gens.len())];
        let (a, x, y) = (pick(), pick(), pick());
        let span = m.hom_span(a.tensor(x), y);
        if span.is_empty() {
            continue;
        }
        let coeffs: Vec<_> = span.iter().map(|_| crate::matrix::Q::new(rng.gen_range(-5..=5), rng.gen_range(1..=3))).collect();
        let terms: Vec<_> = coeffs.into_iter().zip(span.iter()).collect();
        let alpha = m.lin_comb(&terms).unwrap_or_else(|| span[0].clone());
        let r = contraposition_routes(m, c, &alpha).map(|(r1, r2)| r1 == r2);
        t.record_res(r, || format!("routes differ for α = {alpha}"));
    }
    t.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::build_vec_model;
    use crate::matrix::Q;
    use crate::quantale::{build_lukasiewicz, build_rel_quantale};

    fn two() -> Arc<Quantale> {
        Arc::new(build_rel_quantale(1).unwrap())
    }

    #[test]
    fn composite_of_swapped_points() {
        let v = two();
        let c = VCat::discrete(v.clone(), 2).unwrap();
        let (o, i) = (v.bottom().unwrap(), v.top().unwrap());
        let f = VProf { vals: vec![o, i, o, o] };
        let g = VProf { vals: vec![o, o, i, o] };
        let fg = compose_prof(&c, &c, &c, &f, &g).unwrap();
        assert_eq!(fg.vals, vec![i, o, o, o]);
        assert_eq!(compose_prof(&c, &c, &c, &id_prof(&c), &f).unwrap(), f);
    }

    #[test]
    fn chain_dualizer_is_complement_of_reverse_order() {
        let v = two();
        let c = VCat::chain(v.clone(), 2).unwrap();
        let (o, i) = (v.bottom().unwrap(), v.top().unwrap());
        // ≤ on the chain is {(0,0),(0,1),(1,1)}; the reverse complement is {(0,1)}
        assert_eq!(dualizing_prof(&c).vals, vec![o, i, o, o]);
    }

    #[test]
    fn discrete_two_is_rel2() {
        let c = VCat::discrete(two(), 2).unwrap();
        let (profs, exhaustive) = enumerate_profs(&c, 0, 0);
        assert!(exhaustive);
        assert_eq!(profs.len(), 16);
        assert!(check_iso_with_relations(&c, &build_rel_quantale(2).unwrap()).pass);
        for ch in check_prof_staut(&c, 1000, 1) {
            assert!(ch.pass, "{ch:?}");
        }
    }

    #[test]
    fn lukasiewicz_two_object_category() {
        let v = Arc::new(build_lukasiewicz(3).unwrap());
        let half = v.index_of("1/2").unwrap();
        let (one, zero) = (v.unit(), v.bottom().unwrap());
        let c = VCat::new(v, vec!["a".into(), "b".into()], vec![one, half, zero, one]).unwrap();
        for ch in check_prof_staut(&c, 1000, 1) {
            assert!(ch.pass, "{ch:?}");
        }
    }

    #[test]
    fn vcat_rejects_bad_composition() {
        let v = Arc::new(build_lukasiewicz(3).unwrap());
        let half = v.index_of("1/2").unwrap();
        let one = v.unit();
        let err = VCat::new(v, vec!["a".into(), "b".into()], vec![one, half, half, half]).unwrap_err();
        assert!(err.to_string().contains("identity"), "{err}");
    }

    #[test]
    fn parse_vcat_file() {
        let c = parse_vcat("quantale luk:3\nobjects a b\nhom a b = 1/2\n").unwrap();
        assert_eq!(c.v.label(c.hom(0, 1)), "1/2");
        let err = parse_vcat("quantale luk:3\nobjects a b\nhom a c = 1\n").unwrap_err();
        assert!(matches!(err, StautError::Parse { line: 3, .. }), "{err}");
    }

    #[test]
    fn contraposition_routes_agree_on_vec_identity_cycle() {
        let m = build_vec_model(2, 1).unwrap();
        let v = check_contraposition_agreement(&m, &CycleData::identity(), 50, 11);
        assert!(v.pass && v.probes >= 50, "{v:?}");
    }

    #[test]
    fn contraposition_routes_differ_without_tensor_semicyclicity() {
        let m = build_vec_model(2, 1).unwrap();
        let v = check_contraposition_agreement(&m, &CycleData::scalar(Q::int(2)), 10, 11);
        assert!(!v.pass);
    }

    #[test]
    fn contraposition_routes_on_thin() {
        let m = crate::thin::quantale_model(build_rel_quantale(2).unwrap(), 3, 1);
        let v = check_contraposition_agreement(&m, &CycleData::identity(), 20, 5);
        assert!(v.pass, "{v:?}");
    }
}
