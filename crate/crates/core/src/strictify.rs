//! Strict negations: Z-strings of linear adjoints and mates over a base
//! model, the star-autonomous structure on them, and the F-strings of a
//! cyclic base.
//!
//! A Z-string is infinite; it is held as a finite descriptor and every check
//! runs on a window of indices containing 0. Z-string components follow
//! `(⊥P)_n = P_{n+1}`, so the canonical string of `p` has `⊥ⁿp` at `n > 0`
//! and `ᵖ⁻ⁿp` at `n < 0`, with `γ_n: P_n⊗P_{n+1} → d`.

use crate::cyclicity::{classify, Axiom, CycleData};
use crate::error::{Result, StautError};
use crate::matrix::Q;
use crate::obj::{ObjRef, Term};
use crate::report::{Tally, Verdict};
use crate::staut::{check_adjunction, lbind, lcurry, lcurry_inv, ldual_mor, rbind, rcurry, rcurry_inv, rdual_mor, split_tensor, Mor, Payload, Probe, StautModel};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

/// Deepest dual iterate a window may ask for.
pub const MAX_WINDOW: i64 = 8;

/// A range of indices `lo..=hi` with `lo ≤ 0 ≤ hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
}

impl Default for Window {
    fn default() -> Self {
        Window { lo: -3, hi: 3 }
    }
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Result<Window> {
        if lo > 0 || hi < 0 {
            return Err(StautError::Precondition(format!("window [{lo}, {hi}] must contain 0")));
        }
        if lo < -MAX_WINDOW || hi > MAX_WINDOW {
            return Err(StautError::BoundedUniverse(format!(
                "window [{lo}, {hi}] needs dual iterates beyond depth {MAX_WINDOW}; use a window inside [-{MAX_WINDOW}, {MAX_WINDOW}]"
            )));
        }
        Ok(Window { lo, hi })
    }

    /// `"a,b"` or `"[a,b]"`.
    pub fn parse(s: &str) -> Result<Window> {
        let t = s.trim().trim_start_matches('[').trim_end_matches(']');
        let (a, b) = t
            .split_once(',')
            .ok_or_else(|| StautError::Parse { line: 1, col: 1, msg: format!("window `{s}` is not of the form lo,hi") })?;
        let num = |x: &str, col: usize| {
            x.trim().parse::<i64>().map_err(|e| StautError::Parse { line: 1, col, msg: format!("bad window bound `{x}`: {e}") })
        };
        Window::new(num(a, 1)?, num(b, a.len() + 2)?)
    }

    pub fn indices(self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }

    pub fn len(self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn is_empty(self) -> bool {
        false
    }

    fn slot(self, n: i64) -> usize {
        (n - self.lo) as usize
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

fn even(n: i64) -> bool {
    n.rem_euclid(2) == 0
}

#[derive(Clone)]
enum Desc {
    Canonical(ObjRef),
    Period2 { p0: ObjRef, p1: ObjRef, gamma0: Mor, cycle: CycleData },
    Unit,
    Dualizer,
    Tensor(ZString, ZString),
    Par(ZString, ZString),
    LDual(ZString),
    RDual(ZString),
}

struct ZNode {
    base: Arc<dyn StautModel>,
    desc: Desc,
    gammas: RwLock<HashMap<i64, Mor>>,
    /// Inverses of `lcurry(γ_n)` (`true`) and `rcurry(γ_n)` (`false`).
    curried: RwLock<HashMap<(i64, bool), Mor>>,
}

/// A Z-string of linear adjoints, given by a finite descriptor.
#[derive(Clone)]
pub struct ZString(Arc<ZNode>);

impl fmt::Debug for ZString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ZString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.desc {
            Desc::Canonical(p) => write!(f, "Z({p})"),
            Desc::Period2 { p0, cycle, .. } => write!(f, "F({p0}; {})", cycle.label),
            Desc::Unit => write!(f, "e"),
            Desc::Dualizer => write!(f, "d"),
            Desc::Tensor(a, b) => write!(f, "({a} ⊗ {b})"),
            Desc::Par(a, b) => write!(f, "({a} ⅋ {b})"),
            Desc::LDual(a) => write!(f, "⊥{a}"),
            Desc::RDual(a) => write!(f, "{a}⊥"),
        }
    }
}

impl ZString {
    fn mk(base: Arc<dyn StautModel>, desc: Desc) -> ZString {
        ZString(Arc::new(ZNode { base, desc, gammas: RwLock::new(HashMap::new()), curried: RwLock::new(HashMap::new()) }))
    }

    /// The canonical string of `p` with the chosen adjunctions.
    pub fn canonical(base: Arc<dyn StautModel>, p: ObjRef) -> ZString {
        ZString::mk(base, Desc::Canonical(p))
    }

    /// The 2-periodic string `p, ⊥p, p, ⊥p, ..` whose pairings are generated
    /// from `γ_p` by the cycle in both directions.
    pub fn period2(base: Arc<dyn StautModel>, p: ObjRef, cycle: &CycleData) -> ZString {
        let gamma0 = base.gamma(p);
        ZString::mk(base, Desc::Period2 { p0: p, p1: p.ldual(), gamma0, cycle: cycle.clone() })
    }

    /// A 2-periodic string from an arbitrary pairing `γ_0: p0⊗p1 → d`.
    pub fn period2_with(base: Arc<dyn StautModel>, gamma0: Mor, cycle: &CycleData) -> Result<ZString> {
        let (p0, p1) = split_tensor(gamma0.dom)?;
        Ok(ZString::mk(base, Desc::Period2 { p0, p1, gamma0, cycle: cycle.clone() }))
    }

    pub fn unit(base: Arc<dyn StautModel>) -> ZString {
        ZString::mk(base, Desc::Unit)
    }

    pub fn dualizer(base: Arc<dyn StautModel>) -> ZString {
        ZString::mk(base, Desc::Dualizer)
    }

    pub fn tensor(&self, o: &ZString) -> Result<ZString> {
        self.same_base(o)?;
        Ok(ZString::mk(self.0.base.clone(), Desc::Tensor(self.clone(), o.clone())))
    }

    pub fn par(&self, o: &ZString) -> Result<ZString> {
        self.same_base(o)?;
        Ok(ZString::mk(self.0.base.clone(), Desc::Par(self.clone(), o.clone())))
    }

    pub fn ldual(&self) -> ZString {
        ZString::mk(self.0.base.clone(), Desc::LDual(self.clone()))
    }

    pub fn rdual(&self) -> ZString {
        ZString::mk(self.0.base.clone(), Desc::RDual(self.clone()))
    }

    fn same_base(&self, o: &ZString) -> Result<()> {
        if Arc::ptr_eq(&self.0.base, &o.0.base) {
            Ok(())
        } else {
            Err(StautError::ModelMismatch(format!("{self} and {o} live over different base models")))
        }
    }

    pub fn base(&self) -> &dyn StautModel {
        &*self.0.base
    }

    /// Whether the descriptor is 2-periodic (built from period-2 strings and units only).
    pub fn is_periodic(&self) -> bool {
        match &self.0.desc {
            Desc::Canonical(_) => false,
            Desc::Period2 { .. } | Desc::Unit | Desc::Dualizer => true,
            Desc::Tensor(a, b) | Desc::Par(a, b) => a.is_periodic() && b.is_periodic(),
            Desc::LDual(a) | Desc::RDual(a) => a.is_periodic(),
        }
    }

    /// The component `P_n`.
    pub fn z(&self, n: i64) -> ObjRef {
        match &self.0.desc {
            Desc::Canonical(p) => p.dual_iter(n),
            Desc::Period2 { p0, p1, .. } => {
                if even(n) {
                    *p0
                } else {
                    *p1
                }
            }
            Desc::Unit => {
                if even(n) {
                    ObjRef::e()
                } else {
                    ObjRef::d()
                }
            }
            Desc::Dualizer => {
                if even(n) {
                    ObjRef::d()
                } else {
                    ObjRef::e()
                }
            }
            Desc::Tensor(a, b) => {
                if even(n) {
                    a.z(n).tensor(b.z(n))
                } else {
                    b.z(n).par(a.z(n))
                }
            }
            Desc::Par(a, b) => {
                if even(n) {
                    a.z(n).par(b.z(n))
                } else {
                    b.z(n).tensor(a.z(n))
                }
            }
            Desc::LDual(a) => a.z(n + 1),
            Desc::RDual(a) => a.z(n - 1),
        }
    }

    /// The pairing `γ_n: P_n⊗P_{n+1} → d`.
    pub fn gamma(&self, n: i64) -> Result<Mor> {
        if let Some(g) = self.0.gammas.read().expect("gamma cache poisoned").get(&n) {
            return Ok(g.clone());
        }
        let g = self.compute_gamma(n)?;
        self.0.gammas.write().expect("gamma cache poisoned").insert(n, g.clone());
        Ok(g)
    }

    fn compute_gamma(&self, n: i64) -> Result<Mor> {
        let m = self.base();
        let d = ObjRef::d();
        match &self.0.desc {
            Desc::Canonical(_) => {
                if n >= 0 {
                    Ok(m.gamma(self.z(n)))
                } else {
                    Ok(m.gamma_r(self.z(n + 1)))
                }
            }
            Desc::Period2 { gamma0, cycle, .. } => match n {
                0 => Ok(gamma0.clone()),
                n if n > 0 => big_cycle(m, cycle, &self.gamma(n - 1)?),
                n => big_cycle_inv(m, cycle, &self.gamma(n + 1)?),
            },
            Desc::Unit => Ok(if even(n) { m.lunit_t(d) } else { m.runit_t(d) }),
            Desc::Dualizer => Ok(if even(n) { m.runit_t(d) } else { m.lunit_t(d) }),
            Desc::Tensor(a, b) => {
                if even(n) {
                    rbind(m, &a.gamma(n)?, &b.gamma(n)?)
                } else {
                    lbind(m, &b.gamma(n)?, &a.gamma(n)?)
                }
            }
            Desc::Par(a, b) => {
                if even(n) {
                    lbind(m, &a.gamma(n)?, &b.gamma(n)?)
                } else {
                    rbind(m, &b.gamma(n)?, &a.gamma(n)?)
                }
            }
            Desc::LDual(a) => a.gamma(n + 1),
            Desc::RDual(a) => a.gamma(n - 1),
        }
    }

    /// `lcurry(γ_n)⁻¹: ⊥P_n → P_{n+1}` if `left`, else `rcurry(γ_{n})⁻¹: ᵖP_{n+1} → P_n`.
    pub fn curried_inv(&self, n: i64, left: bool) -> Result<Mor> {
        if let Some(f) = self.0.curried.read().expect("curry cache poisoned").get(&(n, left)) {
            return Ok(f.clone());
        }
        let m = self.base();
        let g = self.gamma(n)?;
        let f = m.inverse(&if left { lcurry(m, &g)? } else { rcurry(m, &g)? })?;
        self.0.curried.write().expect("curry cache poisoned").insert((n, left), f.clone());
        Ok(f)
    }

    /// The unit `τ_n: e → P_{n+1}⅋P_n` matching `γ_n`.
    pub fn tau(&self, n: i64) -> Result<Mor> {
        let m = self.base();
        let p = self.z(n);
        m.compose(&m.tau(p), &m.par_mor(&self.curried_inv(n, true)?, &m.id(p)))
    }

    /// Component objects and pairings agree on the window.
    pub fn agrees_with(&self, o: &ZString, w: Window) -> Result<bool> {
        for n in w.indices() {
            if self.z(n) != o.z(n) || self.gamma(n)? != o.gamma(n)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `N_{p,t}(ω) = rcurry⁻¹(lcurry(ω) ; ν_p)`.
fn big_cycle(m: &dyn StautModel, c: &CycleData, w: &Mor) -> Result<Mor> {
    let (p, _) = split_tensor(w.dom)?;
    rcurry_inv(m, &m.compose(&lcurry(m, w)?, &c.nu(m, p)?)?)
}

/// The inverse of [`big_cycle`]: `ω: t⊗p → d` to `lcurry⁻¹(rcurry(ω) ; ν_p⁻¹)`.
fn big_cycle_inv(m: &dyn StautModel, c: &CycleData, w: &Mor) -> Result<Mor> {
    let (_, p) = split_tensor(w.dom)?;
    lcurry_inv(m, &m.compose(&rcurry(m, w)?, &m.inverse(&c.nu(m, p)?)?)?)
}

/// Triangle identities for every adjacent pair on the window.
pub fn check_string(s: &ZString, w: Window) -> Verdict {
    let m = s.base();
    let mut t = Tally::new();
    for n in w.indices() {
        let r = (|| check_adjunction(m, s.z(n), s.z(n + 1), &s.tau(n)?, &s.gamma(n)?))();
        t.record_res(r, || format!("{s}: triangle identities fail at n = {n}"));
    }
    t.finish()
}

/// A Z-string of linear mates `P → Q` on a window: `m(n): P_n → Q_n` for even
/// `n` and `Q_n → P_n` for odd `n`.
#[derive(Clone, Debug)]
pub struct ZMate {
    pub source: ZString,
    pub target: ZString,
    pub window: Window,
    comps: Vec<Mor>,
}

impl ZMate {
    pub fn new(source: ZString, target: ZString, window: Window, comps: Vec<Mor>) -> Result<ZMate> {
        if comps.len() != window.len() {
            return Err(StautError::Size(format!("{} components for window {window}", comps.len())));
        }
        for (n, f) in window.indices().zip(&comps) {
            let (a, b) = if even(n) { (source.z(n), target.z(n)) } else { (target.z(n), source.z(n)) };
            if !f.typed_as(a, b) {
                return Err(StautError::Shape(format!("component {n} has type {} → {}, expected {a} → {b}", f.dom, f.cod)));
            }
        }
        Ok(ZMate { source, target, window, comps })
    }

    pub fn m(&self, n: i64) -> &Mor {
        &self.comps[self.window.slot(n)]
    }

    pub fn components(&self) -> &[Mor] {
        &self.comps
    }

    /// `(a_n⊗id);γ^B_n = (id⊗a_{n+1});γ^A_n` for adjacent window indices,
    /// where `(A, B)` is `(source, target)` at even `n` and swapped at odd `n`.
    pub fn check_mateship(&self) -> Verdict {
        let m = self.source.base();
        let mut t = Tally::new();
        for n in self.window.lo..self.window.hi {
            let (a, b) = if even(n) { (&self.source, &self.target) } else { (&self.target, &self.source) };
            let r = (|| -> Result<bool> {
                let lhs = m.compose(&m.tensor_mor(self.m(n), &m.id(b.z(n + 1))), &b.gamma(n)?)?;
                let rhs = m.compose(&m.tensor_mor(&m.id(a.z(n)), self.m(n + 1)), &a.gamma(n)?)?;
                Ok(lhs == rhs)
            })();
            t.record_res(r, || format!("mateship fails between components {n} and {} of {} → {}", n + 1, self.source, self.target));
        }
        t.finish()
    }
}

/// The unique Z-string of mates `P → Q` on the window whose component 0 is `f0`.
pub fn extend_mate(p: &ZString, q: &ZString, f0: &Mor, w: Window) -> Result<ZMate> {
    let m = p.base();
    let mut comps: Vec<Option<Mor>> = vec![None; w.len()];
    comps[w.slot(0)] = Some(f0.clone());
    let mut cur = f0.clone();
    for n in 0..w.hi {
        let (a, b) = if even(n) { (p, q) } else { (q, p) };
        let lhs = m.compose(&m.tensor_mor(&cur, &m.id(b.z(n + 1))), &b.gamma(n)?)?;
        cur = m.compose(&lcurry(m, &lhs)?, &a.curried_inv(n, true)?)?;
        comps[w.slot(n + 1)] = Some(cur.clone());
    }
    cur = f0.clone();
    for n in (w.lo + 1..=0).rev() {
        let (a, b) = if even(n - 1) { (p, q) } else { (q, p) };
        let rhs = m.compose(&m.tensor_mor(&m.id(a.z(n - 1)), &cur), &a.gamma(n - 1)?)?;
        cur = m.compose(&rcurry(m, &rhs)?, &b.curried_inv(n - 1, false)?)?;
        comps[w.slot(n - 1)] = Some(cur.clone());
    }
    ZMate::new(p.clone(), q.clone(), w, comps.into_iter().map(|c| c.expect("every slot filled")).collect())
}

/// The canonical string of `p`.
pub fn zangify(base: Arc<dyn StautModel>, p: ObjRef) -> ZString {
    ZString::canonical(base, p)
}

/// The canonical mates of `f: p → q`: iterated left duals above 0, iterated
/// right duals below.
pub fn zangify_mor(base: Arc<dyn StautModel>, f: &Mor, w: Window) -> Result<ZMate> {
    let m: &dyn StautModel = &*base;
    let mut comps: Vec<Option<Mor>> = vec![None; w.len()];
    comps[w.slot(0)] = Some(f.clone());
    let mut cur = f.clone();
    for n in 1..=w.hi {
        cur = ldual_mor(m, &cur)?;
        comps[w.slot(n)] = Some(cur.clone());
    }
    cur = f.clone();
    for n in (w.lo..0).rev() {
        cur = rdual_mor(m, &cur)?;
        comps[w.slot(n)] = Some(cur.clone());
    }
    let (p, q) = (ZString::canonical(base.clone(), f.dom), ZString::canonical(base, f.cod));
    ZMate::new(p, q, w, comps.into_iter().map(|c| c.expect("every slot filled")).collect())
}

/// The star-autonomous category of Z-strings over a base model, restricted
/// to a window. Objects are terms over named Z-strings; morphisms carry
/// their window components as a [`Payload::Family`].
pub struct ZangModel {
    name: String,
    base: Arc<dyn StautModel>,
    window: Window,
    gens: Vec<(ObjRef, ZString)>,
    strings: RwLock<HashMap<ObjRef, ZString>>,
    /// Lifted structure maps by type; each type has at most one.
    maps: RwLock<HashMap<(ObjRef, ObjRef), Mor>>,
    probe: Option<Probe>,
}

impl ZangModel {
    pub fn new(name: &str, base: Arc<dyn StautModel>, window: Window, gens: Vec<(&str, ZString)>) -> Result<ZangModel> {
        let mut named = Vec::new();
        for (label, s) in gens {
            if !Arc::ptr_eq(&s.0.base, &base) {
                return Err(StautError::ModelMismatch(format!("string {s} is over a different base")));
            }
            named.push((ObjRef::gen(&format!("{name}.{label}")), s));
        }
        Ok(ZangModel { name: name.to_string(), base, window, gens: named, strings: RwLock::new(HashMap::new()), maps: RwLock::new(HashMap::new()), probe: None })
    }

    pub fn with_probe(mut self, probe: Probe) -> Self {
        self.probe = Some(probe);
        self
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn base(&self) -> &dyn StautModel {
        &*self.base
    }

    pub fn gen(&self, label: &str) -> ObjRef {
        ObjRef::gen(&format!("{}.{label}", self.name))
    }

    /// The Z-string an object term denotes.
    pub fn eval(&self, p: ObjRef) -> ZString {
        if let Some(s) = self.strings.read().expect("string cache poisoned").get(&p) {
            return s.clone();
        }
        let s = match p.term() {
            Term::Gen(_) => self
                .gens
                .iter()
                .find(|(g, _)| *g == p)
                .map(|(_, s)| s.clone())
                .unwrap_or_else(|| panic!("object {p} is not generated in {}", self.name)),
            Term::E => ZString::unit(self.base.clone()),
            Term::D => ZString::dualizer(self.base.clone()),
            Term::Tensor(a, b) => self.eval(a).tensor(&self.eval(b)).expect("one base"),
            Term::Par(a, b) => self.eval(a).par(&self.eval(b)).expect("one base"),
            Term::LDual(a) => self.eval(a).ldual(),
            Term::RDual(a) => self.eval(a).rdual(),
        };
        self.strings.write().expect("string cache poisoned").insert(p, s.clone());
        s
    }

    fn family(&self, dom: ObjRef, cod: ObjRef, comps: Vec<Mor>) -> Mor {
        Mor::new(dom, cod, Payload::Family(comps))
    }

    /// Packs the mate determined by a base morphism at index 0.
    pub fn lift(&self, dom: ObjRef, cod: ObjRef, f0: &Mor) -> Result<Mor> {
        let z = extend_mate(&self.eval(dom), &self.eval(cod), f0, self.window)?;
        Ok(self.family(dom, cod, z.comps))
    }

    fn structural(&self, dom: ObjRef, cod: ObjRef, f0: Mor) -> Mor {
        if let Some(f) = self.maps.read().expect("map cache poisoned").get(&(dom, cod)) {
            return f.clone();
        }
        let f = self.lift(dom, cod, &f0).unwrap_or_else(|e| panic!("structure map {dom} → {cod} does not extend: {e}"));
        self.maps.write().expect("map cache poisoned").insert((dom, cod), f.clone());
        f
    }

    /// The morphism as a Z-string of mates.
    pub fn as_mate(&self, f: &Mor) -> Result<ZMate> {
        ZMate::new(self.eval(f.dom), self.eval(f.cod), self.window, f.family().to_vec())
    }

    fn zip(&self, f: &Mor, g: &Mor, op: impl Fn(i64, &Mor, &Mor) -> Result<Mor>) -> Result<Vec<Mor>> {
        self.window.indices().zip(f.family().iter().zip(g.family())).map(|(n, (a, b))| op(n, a, b)).collect()
    }
}

impl StautModel for ZangModel {
    fn label(&self) -> String {
        let gens: Vec<String> = self.gens.iter().map(|(g, s)| format!("{g}={s}")).collect();
        format!("Zang {} over {} on {} [{}]", self.name, self.base.label(), self.window, gens.join(", "))
    }

    fn generators(&self) -> Vec<ObjRef> {
        self.gens.iter().map(|(g, _)| *g).collect()
    }

    fn probe(&self) -> Probe {
        self.probe.clone().unwrap_or_else(|| Probe::standard(&self.generators(), 0))
    }

    fn is_thin(&self) -> bool {
        self.base.is_thin()
    }

    /// Mates are determined by component 0, so a span of `Hom(P_0, Q_0)` lifts
    /// to a span of Zang morphisms.
    fn hom_span(&self, p: ObjRef, q: ObjRef) -> Vec<Mor> {
        let (sp, sq) = (self.eval(p), self.eval(q));
        self.base.hom_span(sp.z(0), sq.z(0)).iter().filter_map(|f0| self.lift(p, q, f0).ok()).collect()
    }

    fn id(&self, p: ObjRef) -> Mor {
        let s = self.eval(p);
        self.family(p, p, self.window.indices().map(|n| self.base.id(s.z(n))).collect())
    }

    fn compose(&self, f: &Mor, g: &Mor) -> Result<Mor> {
        if f.cod != g.dom {
            return Err(crate::staut::compose_error(f, g));
        }
        let comps = self.zip(f, g, |n, a, b| if even(n) { self.base.compose(a, b) } else { self.base.compose(b, a) })?;
        Ok(self.family(f.dom, g.cod, comps))
    }

    fn tensor_mor(&self, f: &Mor, g: &Mor) -> Mor {
        let comps = self
            .zip(f, g, |n, a, b| Ok(if even(n) { self.base.tensor_mor(a, b) } else { self.base.par_mor(b, a) }))
            .expect("componentwise tensor is total");
        self.family(f.dom.tensor(g.dom), f.cod.tensor(g.cod), comps)
    }

    fn par_mor(&self, f: &Mor, g: &Mor) -> Mor {
        let comps = self
            .zip(f, g, |n, a, b| Ok(if even(n) { self.base.par_mor(a, b) } else { self.base.tensor_mor(b, a) }))
            .expect("componentwise par is total");
        self.family(f.dom.par(g.dom), f.cod.par(g.cod), comps)
    }

    fn inverse(&self, f: &Mor) -> Result<Mor> {
        let comps: Result<Vec<Mor>> = f.family().iter().map(|a| self.base.inverse(a)).collect();
        Ok(self.family(f.cod, f.dom, comps?))
    }

    fn lin_comb(&self, terms: &[(Q, &Mor)]) -> Option<Mor> {
        let first = terms.first()?.1;
        let mut comps = Vec::with_capacity(self.window.len());
        for k in 0..self.window.len() {
            let parts: Vec<(Q, &Mor)> = terms.iter().map(|(c, f)| (*c, &f.family()[k])).collect();
            comps.push(self.base.lin_comb(&parts)?);
        }
        Some(self.family(first.dom, first.cod, comps))
    }

    fn validate(&self, f: &Mor) -> Result<()> {
        let Payload::Family(comps) = &f.payload else {
            return Err(StautError::Validation("Zang morphisms carry component families".into()));
        };
        for c in comps {
            self.base.validate(c)?;
        }
        let v = self.as_mate(f)?.check_mateship();
        if v.pass {
            Ok(())
        } else {
            Err(StautError::Validation(v.witness.unwrap_or_default()))
        }
    }

    fn assoc_t(&self, p: ObjRef, q: ObjRef, r: ObjRef) -> Mor {
        let (a, b, c) = (self.eval(p).z(0), self.eval(q).z(0), self.eval(r).z(0));
        self.structural(p.tensor(q).tensor(r), p.tensor(q.tensor(r)), self.base.assoc_t(a, b, c))
    }
    fn assoc_p(&self, p: ObjRef, q: ObjRef, r: ObjRef) -> Mor {
        let (a, b, c) = (self.eval(p).z(0), self.eval(q).z(0), self.eval(r).z(0));
        self.structural(p.par(q).par(r), p.par(q.par(r)), self.base.assoc_p(a, b, c))
    }
    fn lunit_t(&self, p: ObjRef) -> Mor {
        self.structural(ObjRef::e().tensor(p), p, self.base.lunit_t(self.eval(p).z(0)))
    }
    fn runit_t(&self, p: ObjRef) -> Mor {
        self.structural(p.tensor(ObjRef::e()), p, self.base.runit_t(self.eval(p).z(0)))
    }
    fn lunit_p(&self, p: ObjRef) -> Mor {
        self.structural(ObjRef::d().par(p), p, self.base.lunit_p(self.eval(p).z(0)))
    }
    fn runit_p(&self, p: ObjRef) -> Mor {
        self.structural(p.par(ObjRef::d()), p, self.base.runit_p(self.eval(p).z(0)))
    }
    fn dist_l(&self, q: ObjRef, s: ObjRef, t: ObjRef) -> Mor {
        let (a, b, c) = (self.eval(q).z(0), self.eval(s).z(0), self.eval(t).z(0));
        self.structural(q.tensor(s.par(t)), q.tensor(s).par(t), self.base.dist_l(a, b, c))
    }
    fn dist_r(&self, p: ObjRef, q: ObjRef, s: ObjRef) -> Mor {
        let (a, b, c) = (self.eval(p).z(0), self.eval(q).z(0), self.eval(s).z(0));
        self.structural(p.par(q).tensor(s), p.par(q.tensor(s)), self.base.dist_r(a, b, c))
    }
    fn tau(&self, p: ObjRef) -> Mor {
        let t0 = self.eval(p).tau(0).expect("Z-string pairing is perfect");
        self.structural(ObjRef::e(), p.ldual().par(p), t0)
    }
    fn tau_r(&self, p: ObjRef) -> Mor {
        let t0 = self.eval(p).tau(-1).expect("Z-string pairing is perfect");
        self.structural(ObjRef::e(), p.par(p.rdual()), t0)
    }
    fn gamma(&self, p: ObjRef) -> Mor {
        let g0 = self.eval(p).gamma(0).expect("Z-string pairing exists");
        self.structural(p.tensor(p.ldual()), ObjRef::d(), g0)
    }
    fn gamma_r(&self, p: ObjRef) -> Mor {
        let g0 = self.eval(p).gamma(-1).expect("Z-string pairing exists");
        self.structural(p.rdual().tensor(p), ObjRef::d(), g0)
    }
}

/// The de Morgan and double-negation identities hold on the nose: each pair
/// of strings below has equal components and pairings on the window.
pub fn check_strict_negations(z: &ZangModel) -> Verdict {
    let w = z.window();
    let atoms: Vec<ObjRef> = z.probe().pairs;
    let mut t = Tally::new();
    let mut same = |a: ObjRef, b: ObjRef| {
        let r = z.eval(a).agrees_with(&z.eval(b), w);
        t.record_res(r, || format!("{a} and {b} differ on {w}"));
    };
    let (e, d) = (ObjRef::e(), ObjRef::d());
    same(e.ldual(), d);
    same(e.rdual(), d);
    same(d.ldual(), e);
    same(d.rdual(), e);
    for &p in &atoms {
        same(p.rdual().ldual(), p);
        same(p.ldual().rdual(), p);
        for &q in &atoms {
            same(p.tensor(q).ldual(), q.ldual().par(p.ldual()));
            same(p.par(q).ldual(), q.ldual().tensor(p.ldual()));
            same(p.tensor(q).rdual(), q.rdual().par(p.rdual()));
            same(p.par(q).rdual(), q.rdual().tensor(p.rdual()));
        }
    }
    t.finish()
}

/// `zangify(p)_0 = p` on base probes, and for each given string `P` the mate
/// `P ≅ zangify(P_0)` extending `id_{P_0}` is a family of isomorphisms
/// satisfying the mateship relations on the window.
pub fn check_equivalence(base: Arc<dyn StautModel>, strings: &[ZString], w: Window) -> Verdict {
    let m: &dyn StautModel = &*base;
    let mut t = Tally::new();
    for p in m.probe().unary {
        t.record(zangify(base.clone(), p).z(0) == p, || format!("zangify({p})_0 is not {p}"));
    }
    for s in strings {
        let r = (|| -> Result<bool> {
            let target = zangify(base.clone(), s.z(0));
            let iso = extend_mate(s, &target, &m.id(s.z(0)), w)?;
            for f in iso.components() {
                m.inverse(f)?;
            }
            Ok(iso.check_mateship().pass && check_string(s, w).pass)
        })();
        t.record_res(r, || format!("{s} is not isomorphic to zangify of its 0th component on {w}"));
    }
    t.finish()
}

/// The extension of a base cycle to Zang: at `P`, the family
/// `P_{n+1} ≅ ⊥(P_n) → ᵖ(P_n) ≅ P_{n-1}`, inverted at odd `n` to point the
/// right way for a mate `⊥P → ᵖP`.
pub fn zangcycle(z: Arc<ZangModel>, c: &CycleData) -> CycleData {
    let c = c.clone();
    let cache: RwLock<HashMap<ObjRef, Mor>> = RwLock::new(HashMap::new());
    CycleData::new(format!("zang[{}]", c.label), move |_, p| {
        if let Some(nu) = cache.read().expect("cycle cache poisoned").get(&p) {
            return Ok(nu.clone());
        }
        let s = z.eval(p);
        let m = z.base();
        let comps: Result<Vec<Mor>> = z
            .window()
            .indices()
            .map(|n| {
                let fwd = zang_component(m, &s, &c, n)?;
                if even(n) {
                    Ok(fwd)
                } else {
                    m.inverse(&fwd)
                }
            })
            .collect();
        let nu = Mor::new(p.ldual(), p.rdual(), Payload::Family(comps?));
        cache.write().expect("cycle cache poisoned").insert(p, nu.clone());
        Ok(nu)
    })
}

/// `lcurry(γ_n) ; ν_{P_n} ; rcurry(γ_{n-1})⁻¹: P_{n+1} → P_{n-1}`.
pub fn zang_component(m: &dyn StautModel, s: &ZString, c: &CycleData, n: i64) -> Result<Mor> {
    let pn = s.z(n);
    crate::staut::seq(m, &[&lcurry(m, &s.gamma(n)?)?, &c.nu(m, pn)?, &s.curried_inv(n - 1, false)?])
}

/// Fails with a precondition error naming the first axiom `c` violates.
pub fn require_cycle(m: &dyn StautModel, c: &CycleData) -> Result<()> {
    let cl = classify(m, c);
    if cl.cycle {
        return Ok(());
    }
    let bad: Vec<String> = Axiom::ALL
        .iter()
        .filter(|a| !cl.profile.holds(**a))
        .map(|a| {
            let w = cl.profile.results[a].witness.clone().unwrap_or_default();
            format!("{a} ({w})")
        })
        .collect();
    Err(StautError::Precondition(format!("{} is not a cycle: fails {}", c.label, bad.join(", "))))
}

/// `P_{n+1} = P_{n-1}` and `γ_n = N(γ_{n-1})` on the window.
pub fn fang_member(s: &ZString, c: &CycleData, w: Window) -> Result<bool> {
    let m = s.base();
    for n in w.indices() {
        if s.z(n + 1) != s.z(n - 1) || s.gamma(n)? != big_cycle(m, c, &s.gamma(n - 1)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Membership of every given string, closure of the members under the
/// star-autonomous operations, and triviality of the extended cycle on them.
pub fn fang_check(strings: &[ZString], c: &CycleData, w: Window) -> Result<Verdict> {
    let Some(first) = strings.first() else {
        return Ok(Verdict::ok(0));
    };
    let base = first.0.base.clone();
    let m: &dyn StautModel = &*base;
    require_cycle(m, c)?;
    let mut t = Tally::new();
    let mut members = vec![ZString::unit(base.clone()), ZString::dualizer(base.clone())];
    for s in strings {
        members.push(s.clone());
        members.push(s.ldual());
        members.push(s.rdual());
    }
    let mut all = members.clone();
    for a in strings {
        for b in strings {
            all.push(a.tensor(b)?);
            all.push(a.par(b)?);
        }
    }
    for s in &all {
        t.record_res(fang_member(s, c, w), || format!("{s} is not an F-string on {w}"));
        for n in w.indices() {
            let r = zang_component(m, s, c, n).map(|f| f == m.id(s.z(n + 1)));
            t.record_res(r, || format!("extended cycle at {s} is not the identity at n = {n}"));
        }
    }
    Ok(t.finish())
}

/// For F-strings `P`, `Q` and even `n` in the window, each link of
/// `γ^{P⊗Q}_n = rbind(γ^P_n, γ^Q_n) = rbind(N γ^P_{n-1}, N γ^Q_{n-1})
///  = N(lbind(γ^Q_{n-1}, γ^P_{n-1})) = N(γ^{P⊗Q}_{n-1})`.
pub fn check_fang_tensor_chain(p: &ZString, q: &ZString, c: &CycleData, w: Window) -> Result<Verdict> {
    let m = p.base();
    let pq = p.tensor(q)?;
    let mut t = Tally::new();
    for n in w.indices().filter(|&n| even(n)) {
        let s0 = pq.gamma(n)?;
        let s1 = rbind(m, &p.gamma(n)?, &q.gamma(n)?)?;
        let s2 = rbind(m, &big_cycle(m, c, &p.gamma(n - 1)?)?, &big_cycle(m, c, &q.gamma(n - 1)?)?)?;
        let s3 = big_cycle(m, c, &lbind(m, &q.gamma(n - 1)?, &p.gamma(n - 1)?)?)?;
        let s4 = big_cycle(m, c, &pq.gamma(n - 1)?)?;
        for (i, (a, b)) in [(&s0, &s1), (&s1, &s2), (&s2, &s3), (&s3, &s4)].iter().enumerate() {
            t.record(a == b, || format!("link {} of the tensor chain fails for {p}, {q} at n = {n}", i + 1));
        }
    }
    Ok(t.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclicity::validate_cycle;
    use crate::linear::build_vec_model;
    use crate::quantale::build_rel_quantale;
    use crate::staut::{check_structure_maps, check_triangles};
    use crate::thin::quantale_model;

    fn vec_base() -> Arc<dyn StautModel> {
        Arc::new(build_vec_model(2, 1).unwrap())
    }

    fn thin_base() -> Arc<dyn StautModel> {
        Arc::new(quantale_model(build_rel_quantale(2).unwrap(), 2, 1))
    }

    #[test]
    fn canonical_components_follow_duals() {
        let b = vec_base();
        let p = b.generators()[0];
        let z = zangify(b.clone(), p);
        assert_eq!(z.z(2), p.ldual().ldual());
        assert_eq!(z.z(-1), p.rdual());
        assert!(check_string(&z, Window::default()).pass);
        assert_eq!(z.tau(-1).unwrap(), b.tau_r(p));
        assert_eq!(z.tau(1).unwrap(), b.tau(p.ldual()));
    }

    #[test]
    fn unit_string_pairs_with_d() {
        let b = vec_base();
        let e = zangify(b.clone(), ObjRef::e());
        // ⊥e ≅ d through the de Morgan unit map
        let phi = crate::staut::demorgan(&*b, e.z(0), e.z(0), crate::staut::DeMorgan::LOfUnit).unwrap();
        assert!(phi.typed_as(e.z(1), ObjRef::d()));
        assert!(b.inverse(&phi).is_ok());
    }

    #[test]
    fn identity_mates_are_identities() {
        let b = vec_base();
        let p = b.generators()[1];
        let z = zangify_mor(b.clone(), &b.id(p), Window::default()).unwrap();
        for n in Window::default().indices() {
            assert_eq!(z.m(n), &b.id(zangify(b.clone(), p).z(n)));
        }
        assert!(z.check_mateship().pass);
    }

    #[test]
    fn canonical_mates_agree_with_extension() {
        for b in [vec_base(), thin_base()] {
            let g = b.generators();
            for f in b.hom_span(g[0], g[1]) {
                let w = Window::default();
                let canon = zangify_mor(b.clone(), &f, w).unwrap();
                let ext = extend_mate(&zangify(b.clone(), g[0]), &zangify(b.clone(), g[1]), &f, w).unwrap();
                assert_eq!(canon.components(), ext.components());
                assert!(canon.check_mateship().pass);
            }
        }
    }

    #[test]
    fn table_examples() {
        let b = vec_base();
        let g = b.generators();
        let (p, q) = (zangify(b.clone(), g[0]), zangify(b.clone(), g[1]));
        let pq = p.tensor(&q).unwrap();
        assert_eq!(pq.z(1), q.z(1).par(p.z(1)));
        assert_eq!(p.ldual().z(0), p.z(1));
        let e = ZString::unit(b.clone());
        let d = ZString::dualizer(b.clone());
        assert!(e.ldual().agrees_with(&d, Window::default()).unwrap());
    }

    #[test]
    fn strings_satisfy_triangles() {
        let b = vec_base();
        let g = b.generators();
        let c = CycleData::identity();
        let (p, f) = (zangify(b.clone(), g[0]), ZString::period2(b.clone(), g[1], &c));
        for s in [p.clone(), f.clone(), p.tensor(&f).unwrap(), f.par(&p).unwrap(), p.ldual(), f.rdual(), ZString::unit(b.clone())] {
            assert!(check_string(&s, Window::default()).pass, "{s}");
        }
    }

    fn zang_over(b: Arc<dyn StautModel>, c: &CycleData) -> ZangModel {
        let g = b.generators();
        let gens = vec![("p", zangify(b.clone(), g[0])), ("f", ZString::period2(b.clone(), g[1], c))];
        ZangModel::new("Z", b, Window::new(-2, 2).unwrap(), gens).unwrap()
    }

    #[test]
    fn zang_is_star_autonomous_with_strict_negations() {
        for b in [vec_base(), thin_base()] {
            let z = zang_over(b, &CycleData::identity());
            assert!(check_structure_maps(&z).pass);
            let v = check_triangles(&z);
            assert!(v.pass, "{:?}", v.witness);
            assert!(check_strict_negations(&z).pass);
        }
    }

    #[test]
    fn equivalence_on_vec_has_identity_double_dual_maps() {
        let b = vec_base();
        let c = CycleData::identity();
        let g = b.generators();
        let f = ZString::period2(b.clone(), g[0], &c);
        let w = Window::default();
        let iso = extend_mate(&f, &zangify(b.clone(), g[0]), &b.id(g[0]), w).unwrap();
        assert!(iso.m(2).mat().is_identity());
        assert!(iso.m(-2).mat().is_identity());
        let strings = [f.clone(), zangify(b.clone(), g[1]), f.tensor(&zangify(b.clone(), g[1])).unwrap()];
        assert!(check_equivalence(b, &strings, w).pass);
    }

    #[test]
    fn fang_on_vec_and_thin() {
        for b in [vec_base(), thin_base()] {
            let c = CycleData::identity();
            let g = b.generators();
            let fs = [ZString::period2(b.clone(), g[0], &c), ZString::period2(b.clone(), g[1], &c)];
            let v = fang_check(&fs, &c, Window::default()).unwrap();
            assert!(v.pass, "{:?}", v.witness);
            assert!(check_fang_tensor_chain(&fs[0], &fs[1], &c, Window::default()).unwrap().pass);
            assert!(!fang_member(&zangify(b.clone(), g[0]), &c, Window::default()).unwrap());
        }
    }

    #[test]
    fn fang_refuses_non_cycles() {
        let b = vec_base();
        let c = CycleData::scalar(Q::int(-1));
        let fs = [ZString::period2(b.clone(), b.generators()[0], &c)];
        let err = fang_check(&fs, &c, Window::default()).unwrap_err();
        assert!(matches!(err, StautError::Precondition(_)), "{err}");
    }

    #[test]
    fn zangcycle_is_a_natural_cycle() {
        let b = vec_base();
        let c = CycleData::identity();
        let z = Arc::new(zang_over(b, &c));
        let zc = zangcycle(z.clone(), &c);
        let v = validate_cycle(&*z, &zc);
        assert!(v.pass, "{:?}", v.witness);
        let f = z.gen("f");
        let at_f = zc.nu(&*z, f).unwrap();
        assert!(z.validate(&at_f).is_ok());
        for (n, comp) in z.window().indices().zip(at_f.family()) {
            assert!(comp.mat().is_identity(), "component {n}");
        }
    }

    #[test]
    fn window_bounds() {
        assert!(matches!(Window::new(-9, 3), Err(StautError::BoundedUniverse(_))));
        assert!(Window::new(1, 3).is_err());
        assert_eq!(Window::parse("[-2,3]").unwrap(), Window { lo: -2, hi: 3 });
    }
}
