//! The model interface shared by every backend, and the canonical maps
//! derived from it.
//!
//! Composition is diagrammatic throughout: `seq(m, &[f, g])` is "f then g".
//! Structural maps point the following way:
//!
//! | map            | type                            |
//! |----------------|---------------------------------|
//! | `assoc_t`      | `(p⊗q)⊗r → p⊗(q⊗r)`             |
//! | `assoc_p`      | `(p⅋q)⅋r → p⅋(q⅋r)`             |
//! | `lunit_t`      | `e⊗p → p`                       |
//! | `runit_t`      | `p⊗e → p`                       |
//! | `lunit_p`      | `d⅋p → p`                       |
//! | `runit_p`      | `p⅋d → p`                       |
//! | `dist_l`       | `q⊗(s⅋t) → (q⊗s)⅋t`             |
//! | `dist_r`       | `(p⅋q)⊗s → p⅋(q⊗s)`             |
//! | `tau`          | `e → ⊥p⅋p`                      |
//! | `tau_r`        | `e → p⅋ᵖp`                      |
//! | `gamma`        | `p⊗⊥p → d`                      |
//! | `gamma_r`      | `ᵖp⊗p → d`                      |

use crate::error::{Result, StautError};
use crate::matrix::{QMat, Q};
use crate::obj::{ObjRef, Term};
use crate::report::{ProbeStats, Tally, Verdict};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    /// Order witness in a thin model.
    Thin,
    /// Matrix of shape `dim(cod) × dim(dom)`.
    Mat(QMat),
    /// Components of a Z-indexed family, lowest index first.
    Family(Vec<Mor>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mor {
    pub dom: ObjRef,
    pub cod: ObjRef,
    pub payload: Payload,
}

impl Mor {
    pub fn new(dom: ObjRef, cod: ObjRef, payload: Payload) -> Mor {
        Mor { dom, cod, payload }
    }

    pub fn mat(&self) -> &QMat {
        match &self.payload {
            Payload::Mat(m) => m,
            _ => panic!("morphism {self} has no matrix payload"),
        }
    }

    pub fn family(&self) -> &[Mor] {
        match &self.payload {
            Payload::Family(v) => v,
            _ => panic!("morphism {self} has no family payload"),
        }
    }

    pub fn typed_as(&self, dom: ObjRef, cod: ObjRef) -> bool {
        self.dom == dom && self.cod == cod
    }
}

impl std::fmt::Display for Mor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.payload {
            Payload::Thin => write!(f, "{} ≤ {}", self.dom, self.cod),
            Payload::Mat(m) => write!(f, "{} → {} {:?}", self.dom, self.cod, m),
            Payload::Family(v) => write!(f, "{} → {} ({} components)", self.dom, self.cod, v.len()),
        }
    }
}

/// Objects over which universally quantified statements are checked, by arity.
#[derive(Clone, Debug)]
pub struct Probe {
    pub unary: Vec<ObjRef>,
    pub pairs: Vec<ObjRef>,
    pub triples: Vec<ObjRef>,
    pub quads: Vec<ObjRef>,
}

impl Probe {
    /// Generators plus units, closed under duals up to `depth`; tensor and par
    /// are applied to atoms only so the set stays linear in `depth`.
    pub fn standard(gens: &[ObjRef], depth: usize) -> Probe {
        let mut atoms: Vec<ObjRef> = gens.to_vec();
        atoms.push(ObjRef::e());
        atoms.push(ObjRef::d());
        let mut unary = atoms.clone();
        let push = |v: &mut Vec<ObjRef>, x: ObjRef| {
            if !v.contains(&x) {
                v.push(x);
            }
        };
        if depth >= 1 {
            for &x in &atoms {
                for &y in &atoms {
                    push(&mut unary, x.tensor(y));
                    push(&mut unary, x.par(y));
                }
            }
        }
        let mut frontier = atoms.clone();
        for _ in 0..depth {
            let mut next = Vec::new();
            for &x in &frontier {
                next.push(x.ldual());
                next.push(x.rdual());
            }
            for &x in &next {
                push(&mut unary, x);
            }
            frontier = next;
        }
        let mut pairs = atoms.clone();
        if depth >= 1 {
            for &g in gens {
                push(&mut pairs, g.ldual());
                push(&mut pairs, g.rdual());
            }
        }
        let mut quads: Vec<ObjRef> = gens.iter().copied().take(2).collect();
        quads.push(ObjRef::e());
        Probe { unary, pairs, triples: atoms, quads }
    }

    pub fn stats(&self) -> ProbeStats {
        ProbeStats {
            unary: self.unary.len(),
            pairs: self.pairs.len(),
            triples: self.triples.len(),
            quads: self.quads.len(),
        }
    }
}

/// A finite star-autonomous category, presented through its structure maps.
pub trait StautModel: Send + Sync {
    fn label(&self) -> String;
    fn generators(&self) -> Vec<ObjRef>;
    fn probe(&self) -> Probe;

    fn is_thin(&self) -> bool {
        false
    }

    /// A finite spanning set of `Hom(p, q)` (a basis for linear backends,
    /// the unique witness or nothing for thin ones).
    fn hom_span(&self, p: ObjRef, q: ObjRef) -> Vec<Mor>;

    fn id(&self, p: ObjRef) -> Mor;
    fn compose(&self, f: &Mor, g: &Mor) -> Result<Mor>;
    fn tensor_mor(&self, f: &Mor, g: &Mor) -> Mor;
    fn par_mor(&self, f: &Mor, g: &Mor) -> Mor;
    fn inverse(&self, f: &Mor) -> Result<Mor>;

    /// `Σ c_i f_i` for parallel morphisms; `None` when the model is not linear.
    fn lin_comb(&self, _terms: &[(Q, &Mor)]) -> Option<Mor> {
        None
    }

    /// Backend-level well-formedness (order witness valid, shape right,
    /// module map, grading preserved).
    fn validate(&self, f: &Mor) -> Result<()>;

    /// A distinguished map `⊥p → ᵖp` when the backend picks its two duals
    /// compatibly (equal dual spaces, or an order witness). Cycles given by
    /// a scalar are multiples of it.
    fn dual_identity(&self, _p: ObjRef) -> Option<Mor> {
        None
    }

    fn assoc_t(&self, p: ObjRef, q: ObjRef, r: ObjRef) -> Mor;
    fn assoc_p(&self, p: ObjRef, q: ObjRef, r: ObjRef) -> Mor;
    fn lunit_t(&self, p: ObjRef) -> Mor;
    fn runit_t(&self, p: ObjRef) -> Mor;
    fn lunit_p(&self, p: ObjRef) -> Mor;
    fn runit_p(&self, p: ObjRef) -> Mor;
    fn dist_l(&self, q: ObjRef, s: ObjRef, t: ObjRef) -> Mor;
    fn dist_r(&self, p: ObjRef, q: ObjRef, s: ObjRef) -> Mor;
    fn tau(&self, p: ObjRef) -> Mor;
    fn tau_r(&self, p: ObjRef) -> Mor;
    fn gamma(&self, p: ObjRef) -> Mor;
    fn gamma_r(&self, p: ObjRef) -> Mor;
}

pub fn seq(m: &dyn StautModel, fs: &[&Mor]) -> Result<Mor> {
    let (first, rest) = fs.split_first().expect("seq of nothing");
    let mut acc = (*first).clone();
    for f in rest {
        acc = m.compose(&acc, f)?;
    }
    Ok(acc)
}

pub fn compose_error(f: &Mor, g: &Mor) -> StautError {
    StautError::Compose {
        f: format!("{} → {}", f.dom, f.cod),
        g: format!("{} → {}", g.dom, g.cod),
        left: f.cod.to_string(),
        right: g.dom.to_string(),
    }
}

pub fn split_tensor(p: ObjRef) -> Result<(ObjRef, ObjRef)> {
    match p.term() {
        Term::Tensor(a, b) => Ok((a, b)),
        _ => Err(StautError::Shape(format!("expected a tensor, got {p}"))),
    }
}

pub fn split_par(p: ObjRef) -> Result<(ObjRef, ObjRef)> {
    match p.term() {
        Term::Par(a, b) => Ok((a, b)),
        _ => Err(StautError::Shape(format!("expected a par, got {p}"))),
    }
}

pub fn un_ldual(p: ObjRef) -> Result<ObjRef> {
    match p.term() {
        Term::LDual(a) => Ok(a),
        _ => Err(StautError::Shape(format!("expected a left dual, got {p}"))),
    }
}

pub fn un_rdual(p: ObjRef) -> Result<ObjRef> {
    match p.term() {
        Term::RDual(a) => Ok(a),
        _ => Err(StautError::Shape(format!("expected a right dual, got {p}"))),
    }
}

fn expect_cod_d(f: &Mor) -> Result<()> {
    if f.cod == ObjRef::d() {
        Ok(())
    } else {
        Err(StautError::Shape(format!("expected a map into d, got {} → {}", f.dom, f.cod)))
    }
}

/// `ω: p⊗t → d` to `t → ⊥p`.
pub fn lcurry(m: &dyn StautModel, w: &Mor) -> Result<Mor> {
    expect_cod_d(w)?;
    let (p, t) = split_tensor(w.dom)?;
    let lp = p.ldual();
    seq(
        m,
        &[
            &m.inverse(&m.lunit_t(t))?,
            &m.tensor_mor(&m.tau(p), &m.id(t)),
            &m.dist_r(lp, p, t),
            &m.par_mor(&m.id(lp), w),
            &m.runit_p(lp),
        ],
    )
}

/// `g: t → ⊥p` to `p⊗t → d`.
pub fn lcurry_inv(m: &dyn StautModel, g: &Mor) -> Result<Mor> {
    let p = un_ldual(g.cod)?;
    m.compose(&m.tensor_mor(&m.id(p), g), &m.gamma(p))
}

/// `ω: t⊗p → d` to `t → ᵖp`.
pub fn rcurry(m: &dyn StautModel, w: &Mor) -> Result<Mor> {
    expect_cod_d(w)?;
    let (t, p) = split_tensor(w.dom)?;
    let rp = p.rdual();
    seq(
        m,
        &[
            &m.inverse(&m.runit_t(t))?,
            &m.tensor_mor(&m.id(t), &m.tau_r(p)),
            &m.dist_l(t, p, rp),
            &m.par_mor(w, &m.id(rp)),
            &m.lunit_p(rp),
        ],
    )
}

/// `g: t → ᵖp` to `t⊗p → d`.
pub fn rcurry_inv(m: &dyn StautModel, g: &Mor) -> Result<Mor> {
    let p = un_rdual(g.cod)?;
    m.compose(&m.tensor_mor(g, &m.id(p)), &m.gamma_r(p))
}

/// `f: p → q` to `⊥f: ⊥q → ⊥p`.
pub fn ldual_mor(m: &dyn StautModel, f: &Mor) -> Result<Mor> {
    let lq = f.cod.ldual();
    lcurry(m, &m.compose(&m.tensor_mor(f, &m.id(lq)), &m.gamma(f.cod))?)
}

/// `f: p → q` to `ᵖf: ᵖq → ᵖp`.
pub fn rdual_mor(m: &dyn StautModel, f: &Mor) -> Result<Mor> {
    let rq = f.cod.rdual();
    rcurry(m, &m.compose(&m.tensor_mor(&m.id(rq), f), &m.gamma_r(f.cod))?)
}

/// `ι_r: r → ⊥(ᵖr)`.
pub fn iota_l(m: &dyn StautModel, r: ObjRef) -> Result<Mor> {
    lcurry(m, &m.gamma_r(r))
}

/// `ι'_r: r → ᵖ(⊥r)`.
pub fn iota_r(m: &dyn StautModel, r: ObjRef) -> Result<Mor> {
    rcurry(m, &m.gamma(r))
}

/// For `ω: p⊗t → d` and `ψ: q⊗s → d`, the map `(p⅋q)⊗(s⊗t) → d` that feeds
/// `s` to `ψ` through the right distribution and then applies `ω`.
pub fn lbind(m: &dyn StautModel, w: &Mor, psi: &Mor) -> Result<Mor> {
    expect_cod_d(w)?;
    expect_cod_d(psi)?;
    let (p, t) = split_tensor(w.dom)?;
    let (q, s) = split_tensor(psi.dom)?;
    let pq = p.par(q);
    let it = m.id(t);
    seq(
        m,
        &[
            &m.inverse(&m.assoc_t(pq, s, t))?,
            &m.tensor_mor(&m.dist_r(p, q, s), &it),
            &m.tensor_mor(&m.par_mor(&m.id(p), psi), &it),
            &m.tensor_mor(&m.runit_p(p), &it),
            w,
        ],
    )
}

/// For `ω: p⊗t → d` and `ψ: q⊗s → d`, the map `(p⊗q)⊗(s⅋t) → d` that feeds
/// `q` to `ψ` through the left distribution and then applies `ω`.
pub fn rbind(m: &dyn StautModel, w: &Mor, psi: &Mor) -> Result<Mor> {
    expect_cod_d(w)?;
    expect_cod_d(psi)?;
    let (p, t) = split_tensor(w.dom)?;
    let (q, s) = split_tensor(psi.dom)?;
    let ip = m.id(p);
    seq(
        m,
        &[
            &m.assoc_t(p, q, s.par(t)),
            &m.tensor_mor(&ip, &m.dist_l(q, s, t)),
            &m.tensor_mor(&ip, &m.par_mor(psi, &m.id(t))),
            &m.tensor_mor(&ip, &m.lunit_p(t)),
            w,
        ],
    )
}

/// The de Morgan isomorphisms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DeMorgan {
    /// `⊥p⊗⊥q → ⊥(q⅋p)`
    LTensor,
    /// `⊥(p⊗q) → ⊥q⅋⊥p`
    LOfTensor,
    /// `⊥(p⅋q) → ⊥q⊗⊥p`
    LOfPar,
    /// `e → ⊥d`
    LUnit,
    /// `⊥e → d`
    LOfUnit,
    /// `ᵖp⊗ᵖq → ᵖ(q⅋p)`
    RTensor,
    /// `ᵖ(p⊗q) → ᵖq⅋ᵖp`
    ROfTensor,
    /// `ᵖ(p⅋q) → ᵖq⊗ᵖp`
    ROfPar,
    /// `e → ᵖd`
    RUnit,
    /// `ᵖe → d`
    ROfUnit,
}

impl DeMorgan {
    pub const ALL: [DeMorgan; 10] = [
        DeMorgan::LTensor,
        DeMorgan::LOfTensor,
        DeMorgan::LOfPar,
        DeMorgan::LUnit,
        DeMorgan::LOfUnit,
        DeMorgan::RTensor,
        DeMorgan::ROfTensor,
        DeMorgan::ROfPar,
        DeMorgan::RUnit,
        DeMorgan::ROfUnit,
    ];

    pub fn is_binary(self) -> bool {
        !matches!(self, DeMorgan::LUnit | DeMorgan::LOfUnit | DeMorgan::RUnit | DeMorgan::ROfUnit)
    }
}

/// Builds the de Morgan map `variant` at `(p, q)`; nullary variants ignore
/// their arguments.
pub fn demorgan(m: &dyn StautModel, p: ObjRef, q: ObjRef, variant: DeMorgan) -> Result<Mor> {
    let d = ObjRef::d();
    match variant {
        DeMorgan::LTensor => lcurry(m, &lbind(m, &m.gamma(q), &m.gamma(p))?),
        DeMorgan::LOfTensor => m.inverse(&lcurry(m, &rbind(m, &m.gamma(p), &m.gamma(q))?)?),
        DeMorgan::LOfPar => m.inverse(&demorgan(m, q, p, DeMorgan::LTensor)?),
        DeMorgan::LUnit => lcurry(m, &m.runit_t(d)),
        DeMorgan::LOfUnit => m.inverse(&lcurry(m, &m.lunit_t(d))?),
        DeMorgan::RTensor => rcurry(m, &rbind(m, &m.gamma_r(p), &m.gamma_r(q))?),
        DeMorgan::ROfTensor => m.inverse(&rcurry(m, &lbind(m, &m.gamma_r(q), &m.gamma_r(p))?)?),
        DeMorgan::ROfPar => m.inverse(&demorgan(m, q, p, DeMorgan::RTensor)?),
        DeMorgan::RUnit => rcurry(m, &m.lunit_t(d)),
        DeMorgan::ROfUnit => m.inverse(&rcurry(m, &m.runit_t(d))?),
    }
}

/// Expected source and target of a de Morgan map, for typing checks.
pub fn demorgan_type(p: ObjRef, q: ObjRef, variant: DeMorgan) -> (ObjRef, ObjRef) {
    let (e, d) = (ObjRef::e(), ObjRef::d());
    match variant {
        DeMorgan::LTensor => (p.ldual().tensor(q.ldual()), q.par(p).ldual()),
        DeMorgan::LOfTensor => (p.tensor(q).ldual(), q.ldual().par(p.ldual())),
        DeMorgan::LOfPar => (p.par(q).ldual(), q.ldual().tensor(p.ldual())),
        DeMorgan::LUnit => (e, d.ldual()),
        DeMorgan::LOfUnit => (e.ldual(), d),
        DeMorgan::RTensor => (p.rdual().tensor(q.rdual()), q.par(p).rdual()),
        DeMorgan::ROfTensor => (p.tensor(q).rdual(), q.rdual().par(p.rdual())),
        DeMorgan::ROfPar => (p.par(q).rdual(), q.rdual().tensor(p.rdual())),
        DeMorgan::RUnit => (e, d.rdual()),
        DeMorgan::ROfUnit => (e.rdual(), d),
    }
}

/// `f: p → q` to its name `e → ⊥p⅋q`.
pub fn name(m: &dyn StautModel, f: &Mor) -> Result<Mor> {
    m.compose(&m.tau(f.dom), &m.par_mor(&m.id(f.dom.ldual()), f))
}

/// Recovers `f` from its name: the inverse of [`name`].
pub fn unname(m: &dyn StautModel, n: &Mor) -> Result<Mor> {
    let (lp, q) = split_par(n.cod)?;
    let p = un_ldual(lp)?;
    // p → p⊗e → p⊗(⊥p⅋q) → (p⊗⊥p)⅋q → d⅋q → q
    seq(
        m,
        &[
            &m.inverse(&m.runit_t(p))?,
            &m.tensor_mor(&m.id(p), n),
            &m.dist_l(p, lp, q),
            &m.par_mor(&m.gamma(p), &m.id(q)),
            &m.lunit_p(q),
        ],
    )
}

/// The residual objects `x⊸z ≅ ⊥x⅋z` and `z⟜x ≅ z⅋ᵖx` with their
/// evaluation maps.
#[derive(Clone, Debug)]
pub struct Residuals {
    pub lolli: ObjRef,
    pub lollo: ObjRef,
    /// `x⊗(⊥x⅋z) → z`
    pub eval_l: Mor,
    /// `(z⅋ᵖx)⊗x → z`
    pub eval_r: Mor,
}

pub fn residual_objects(m: &dyn StautModel, x: ObjRef, z: ObjRef) -> Result<Residuals> {
    let (lx, rx) = (x.ldual(), x.rdual());
    let eval_l = seq(m, &[&m.dist_l(x, lx, z), &m.par_mor(&m.gamma(x), &m.id(z)), &m.lunit_p(z)])?;
    let eval_r = seq(m, &[&m.dist_r(z, rx, x), &m.par_mor(&m.id(z), &m.gamma_r(x)), &m.runit_p(z)])?;
    Ok(Residuals { lolli: lx.par(z), lollo: z.par(rx), eval_l, eval_r })
}

/// Linear triangle identities for `τ: e → B⅋A`, `γ: A⊗B → d`.
pub fn check_adjunction(m: &dyn StautModel, a: ObjRef, b: ObjRef, tau: &Mor, gamma: &Mor) -> Result<bool> {
    if !tau.typed_as(ObjRef::e(), b.par(a)) || !gamma.typed_as(a.tensor(b), ObjRef::d()) {
        return Err(StautError::Shape(format!("adjunction data mistyped for ({a}, {b})")));
    }
    let t1 = seq(
        m,
        &[
            &m.inverse(&m.runit_t(a))?,
            &m.tensor_mor(&m.id(a), tau),
            &m.dist_l(a, b, a),
            &m.par_mor(gamma, &m.id(a)),
            &m.lunit_p(a),
        ],
    )?;
    let t2 = seq(
        m,
        &[
            &m.inverse(&m.lunit_t(b))?,
            &m.tensor_mor(tau, &m.id(b)),
            &m.dist_r(b, a, b),
            &m.par_mor(&m.id(b), gamma),
            &m.runit_p(b),
        ],
    )?;
    Ok(t1 == m.id(a) && t2 == m.id(b))
}

fn eq_res(a: Result<Mor>, b: Result<Mor>) -> Result<bool> {
    Ok(a? == b?)
}

/// Both duality adjunctions at every unary probe object.
pub fn check_triangles(m: &dyn StautModel) -> Verdict {
    let mut t = Tally::new();
    for p in m.probe().unary {
        t.record_res(check_adjunction(m, p, p.ldual(), &m.tau(p), &m.gamma(p)), || format!("(p, ⊥p) at p = {p}"));
        t.record_res(check_adjunction(m, p.rdual(), p, &m.tau_r(p), &m.gamma_r(p)), || format!("(ᵖp, p) at p = {p}"));
    }
    t.finish()
}

/// `lcurry` and `rcurry` are inverse to their inverses on hom spans.
pub fn check_curry_bijection(m: &dyn StautModel) -> Verdict {
    let mut t = Tally::new();
    let probe = m.probe();
    for &p in &probe.pairs {
        for &s in &probe.pairs {
            for w in m.hom_span(p.tensor(s), ObjRef::d()) {
                t.record_res(
                    (|| Ok(lcurry_inv(m, &lcurry(m, &w)?)? == w && rcurry_inv(m, &rcurry(m, &w)?)? == w))(),
                    || format!("ω = {w}"),
                );
            }
            for g in m.hom_span(s, p.ldual()) {
                t.record_res((|| Ok(lcurry(m, &lcurry_inv(m, &g)?)? == g))(), || format!("g = {g}"));
            }
            for g in m.hom_span(s, p.rdual()) {
                t.record_res((|| Ok(rcurry(m, &rcurry_inv(m, &g)?)? == g))(), || format!("g = {g}"));
            }
        }
    }
    t.finish()
}

/// Pentagon and triangle coherence for both monoidal structures.
pub fn check_monoidal_coherence(m: &dyn StautModel) -> Verdict {
    let mut t = Tally::new();
    let probe = m.probe();
    let qs = &probe.quads;
    for &a in qs {
        for &b in qs {
            for &c in qs {
                for &d in qs {
                    // ((ab)c)d → (ab)(cd) → a(b(cd))  vs  ((ab)c)d → (a(bc))d → a((bc)d) → a(b(cd))
                    let pent_t = eq_res(
                        m.compose(&m.assoc_t(a.tensor(b), c, d), &m.assoc_t(a, b, c.tensor(d))),
                        seq(
                            m,
                            &[
                                &m.tensor_mor(&m.assoc_t(a, b, c), &m.id(d)),
                                &m.assoc_t(a, b.tensor(c), d),
                                &m.tensor_mor(&m.id(a), &m.assoc_t(b, c, d)),
                            ],
                        ),
                    );
                    t.record_res(pent_t, || format!("⊗ pentagon at ({a}, {b}, {c}, {d})"));
                    let pent_p = eq_res(
                        m.compose(&m.assoc_p(a.par(b), c, d), &m.assoc_p(a, b, c.par(d))),
                        seq(
                            m,
                            &[
                                &m.par_mor(&m.assoc_p(a, b, c), &m.id(d)),
                                &m.assoc_p(a, b.par(c), d),
                                &m.par_mor(&m.id(a), &m.assoc_p(b, c, d)),
                            ],
                        ),
                    );
                    t.record_res(pent_p, || format!("⅋ pentagon at ({a}, {b}, {c}, {d})"));
                }
            }
        }
    }
    let (e, d) = (ObjRef::e(), ObjRef::d());
    for &a in &probe.triples {
        for &b in &probe.triples {
            // (a⊗e)⊗b → a⊗(e⊗b) → a⊗b  equals  r⊗id
            let tri_t = eq_res(
                m.compose(&m.assoc_t(a, e, b), &m.tensor_mor(&m.id(a), &m.lunit_t(b))),
                Ok(m.tensor_mor(&m.runit_t(a), &m.id(b))),
            );
            t.record_res(tri_t, || format!("⊗ unit triangle at ({a}, {b})"));
            let tri_p = eq_res(
                m.compose(&m.assoc_p(a, d, b), &m.par_mor(&m.id(a), &m.lunit_p(b))),
                Ok(m.par_mor(&m.runit_p(a), &m.id(b))),
            );
            t.record_res(tri_p, || format!("⅋ unit triangle at ({a}, {b})"));
        }
    }
    t.finish()
}

/// Coherence between the distributions, the associators and the unitors.
pub fn check_distribution_coherence(m: &dyn StautModel) -> Verdict {
    let mut t = Tally::new();
    let probe = m.probe();
    let qs = &probe.quads;
    let (e, d) = (ObjRef::e(), ObjRef::d());
    for &p in qs {
        for &q in qs {
            for &s in qs {
                for &u in qs {
                    // (p⊗q)⊗(s⅋u) → ((p⊗q)⊗s)⅋u
                    let r1 = (|| {
                        let back = m.par_mor(&m.inverse(&m.assoc_t(p, q, s))?, &m.id(u));
                        let rhs = seq(
                            m,
                            &[
                                &m.assoc_t(p, q, s.par(u)),
                                &m.tensor_mor(&m.id(p), &m.dist_l(q, s, u)),
                                &m.dist_l(p, q.tensor(s), u),
                                &back,
                            ],
                        )?;
                        Ok(m.dist_l(p.tensor(q), s, u) == rhs)
                    })();
                    t.record_res(r1, || format!("δL/⊗-assoc at ({p}, {q}, {s}, {u})"));
                    // p⊗((q⅋s)⅋u) → ((p⊗q)⅋s)⅋u
                    let r2 = eq_res(
                        m.compose(&m.tensor_mor(&m.id(p), &m.assoc_p(q, s, u)), &m.dist_l(p, q, s.par(u)))
                            .and_then(|f| m.compose(&f, &m.inverse(&m.assoc_p(p.tensor(q), s, u))?)),
                        seq(m, &[&m.dist_l(p, q.par(s), u), &m.par_mor(&m.dist_l(p, q, s), &m.id(u))]),
                    );
                    t.record_res(r2, || format!("δL/⅋-assoc at ({p}, {q}, {s}, {u})"));
                    // (p⅋q)⊗(s⊗u) → p⅋(q⊗(s⊗u))
                    let r3 = (|| {
                        let rhs = seq(
                            m,
                            &[
                                &m.inverse(&m.assoc_t(p.par(q), s, u))?,
                                &m.tensor_mor(&m.dist_r(p, q, s), &m.id(u)),
                                &m.dist_r(p, q.tensor(s), u),
                                &m.par_mor(&m.id(p), &m.assoc_t(q, s, u)),
                            ],
                        )?;
                        Ok(m.dist_r(p, q, s.tensor(u)) == rhs)
                    })();
                    t.record_res(r3, || format!("δR/⊗-assoc at ({p}, {q}, {s}, {u})"));
                    // ((p⅋q)⅋s)⊗u → p⅋(q⅋(s⊗u))
                    let r4 = eq_res(
                        seq(m, &[&m.dist_r(p.par(q), s, u), &m.assoc_p(p, q, s.tensor(u))]),
                        seq(
                            m,
                            &[
                                &m.tensor_mor(&m.assoc_p(p, q, s), &m.id(u)),
                                &m.dist_r(p, q.par(s), u),
                                &m.par_mor(&m.id(p), &m.dist_r(q, s, u)),
                            ],
                        ),
                    );
                    t.record_res(r4, || format!("δR/⅋-assoc at ({p}, {q}, {s}, {u})"));
                    // (p⅋q)⊗(s⅋u) → p⅋((q⊗s)⅋u)
                    let r5 = eq_res(
                        seq(m, &[&m.dist_r(p, q, s.par(u)), &m.par_mor(&m.id(p), &m.dist_l(q, s, u))]),
                        seq(
                            m,
                            &[
                                &m.dist_l(p.par(q), s, u),
                                &m.par_mor(&m.dist_r(p, q, s), &m.id(u)),
                                &m.assoc_p(p, q.tensor(s), u),
                            ],
                        ),
                    );
                    t.record_res(r5, || format!("δR/δL interchange at ({p}, {q}, {s}, {u})"));
                }
            }
        }
    }
    for &q in &probe.triples {
        for &s in &probe.triples {
            let u1 = eq_res(
                seq(m, &[&m.dist_l(e, q, s), &m.par_mor(&m.lunit_t(q), &m.id(s))]),
                Ok(m.lunit_t(q.par(s))),
            );
            t.record_res(u1, || format!("δL/⊗-unit at ({q}, {s})"));
            let u2 = eq_res(
                seq(m, &[&m.dist_r(q, s, e), &m.par_mor(&m.id(q), &m.runit_t(s))]),
                Ok(m.runit_t(q.par(s))),
            );
            t.record_res(u2, || format!("δR/⊗-unit at ({q}, {s})"));
            let u3 = eq_res(
                seq(m, &[&m.dist_l(q, s, d), &m.runit_p(q.tensor(s))]),
                Ok(m.tensor_mor(&m.id(q), &m.runit_p(s))),
            );
            t.record_res(u3, || format!("δL/⅋-unit at ({q}, {s})"));
            let u4 = eq_res(
                seq(m, &[&m.dist_r(d, q, s), &m.lunit_p(q.tensor(s))]),
                Ok(m.tensor_mor(&m.lunit_p(q), &m.id(s))),
            );
            t.record_res(u4, || format!("δR/⅋-unit at ({q}, {s})"));
        }
    }
    t.finish()
}

/// Every supplied structure map passes backend validation and is typed as documented.
pub fn check_structure_maps(m: &dyn StautModel) -> Verdict {
    let mut t = Tally::new();
    let probe = m.probe();
    let (e, d) = (ObjRef::e(), ObjRef::d());
    for &p in &probe.unary {
        let maps = [
            (m.lunit_t(p), e.tensor(p), p),
            (m.runit_t(p), p.tensor(e), p),
            (m.lunit_p(p), d.par(p), p),
            (m.runit_p(p), p.par(d), p),
            (m.tau(p), e, p.ldual().par(p)),
            (m.tau_r(p), e, p.par(p.rdual())),
            (m.gamma(p), p.tensor(p.ldual()), d),
            (m.gamma_r(p), p.rdual().tensor(p), d),
        ];
        for (f, dom, cod) in maps {
            let ok = f.typed_as(dom, cod) && m.validate(&f).is_ok();
            t.record(ok, || format!("structure map {dom} → {cod}: {:?}", m.validate(&f).err()));
        }
    }
    for &p in &probe.triples {
        for &q in &probe.triples {
            for &s in &probe.triples {
                let maps = [
                    (m.assoc_t(p, q, s), p.tensor(q).tensor(s), p.tensor(q.tensor(s))),
                    (m.assoc_p(p, q, s), p.par(q).par(s), p.par(q.par(s))),
                    (m.dist_l(p, q, s), p.tensor(q.par(s)), p.tensor(q).par(s)),
                    (m.dist_r(p, q, s), p.par(q).tensor(s), p.par(q.tensor(s))),
                ];
                for (f, dom, cod) in maps {
                    let ok = f.typed_as(dom, cod) && m.validate(&f).is_ok();
                    t.record(ok, || format!("structure map {dom} → {cod}: {:?}", m.validate(&f).err()));
                }
            }
        }
    }
    t.finish()
}

/// All de Morgan maps and both cancellation maps are typed and invertible.
pub fn check_canonical_maps(m: &dyn StautModel) -> Verdict {
    let mut t = Tally::new();
    let probe = m.probe();
    for &p in &probe.pairs {
        for &q in &probe.pairs {
            for v in DeMorgan::ALL {
                if !v.is_binary() && (p != probe.pairs[0] || q != probe.pairs[0]) {
                    continue;
                }
                let (dom, cod) = demorgan_type(p, q, v);
                let r = demorgan(m, p, q, v).and_then(|f| {
                    let inv = m.inverse(&f)?;
                    Ok(f.typed_as(dom, cod) && m.compose(&f, &inv)? == m.id(dom) && m.validate(&f).is_ok())
                });
                t.record_res(r, || format!("{v:?} at ({p}, {q})"));
            }
        }
    }
    for &p in &probe.unary {
        for (which, r) in [("ι", iota_l(m, p)), ("ι'", iota_r(m, p))] {
            let ok = r.and_then(|f| {
                let inv = m.inverse(&f)?;
                Ok(m.compose(&f, &inv)? == m.id(p))
            });
            t.record_res(ok, || format!("{which} at {p}"));
        }
    }
    t.finish()
}
