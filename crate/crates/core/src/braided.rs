//! Braided star-autonomous models: the ⅋-braiding induced by σ̂, balances,
//! the 4π-twist, and the passage between balances and cycles.
//!
//! Crossings named in a composite are typed by their domain: `pos(a, b)` is
//! `σ̂_{a,b}: a⊗b → b⊗a` and `neg(a, b)` is `σ̂_{b,a}⁻¹: a⊗b → b⊗a`; likewise
//! for the ⅋-braiding.

use crate::cyclicity::{profile, to_lower, Axiom, AxiomProfile, BigCycle, CycleData};
use crate::error::{Result, StautError};
use crate::matrix::Q;
use crate::obj::ObjRef;
use crate::report::{Tally, Verdict};
use crate::staut::{demorgan, iota_l, iota_r, ldual_mor, rdual_mor, seq, split_tensor, DeMorgan, Mor, StautModel};
use std::fmt;
use std::sync::Arc;

pub trait BraidedModel: StautModel {
    /// `σ̂_{p,q}: p⊗q → q⊗p`.
    fn braid(&self, p: ObjRef, q: ObjRef) -> Mor;
    /// A chosen ribbon twist, if the backend carries one.
    fn ribbon(&self, p: ObjRef) -> Option<Mor>;
}

fn st(m: &dyn BraidedModel) -> &dyn StautModel {
    m
}

/// Negative ⊗-crossing `a⊗b → b⊗a`.
pub fn tensor_braid_inv(m: &dyn BraidedModel, a: ObjRef, b: ObjRef) -> Result<Mor> {
    m.inverse(&m.braid(b, a))
}

/// `σ̌_{p,q}: p⅋q → q⅋p`, transported from `σ̂_{ᵖp,ᵖq}` through the de Morgan
/// maps `ᵖ(p⅋q) ≅ ᵖq⊗ᵖp` and `x ≅ ⊥(ᵖx)`.
pub fn par_braid(m: &dyn BraidedModel, p: ObjRef, q: ObjRef) -> Result<Mor> {
    let s = st(m);
    // ᵖ(q⅋p) → ᵖp⊗ᵖq → ᵖq⊗ᵖp → ᵖ(p⅋q)
    let h = seq(
        s,
        &[
            &demorgan(s, q, p, DeMorgan::ROfPar)?,
            &m.braid(p.rdual(), q.rdual()),
            &s.inverse(&demorgan(s, p, q, DeMorgan::ROfPar)?)?,
        ],
    )?;
    seq(s, &[&iota_l(s, p.par(q))?, &ldual_mor(s, &h)?, &s.inverse(&iota_l(s, q.par(p))?)?])
}

/// Negative ⅋-crossing `a⅋b → b⅋a`.
pub fn par_braid_inv(m: &dyn BraidedModel, a: ObjRef, b: ObjRef) -> Result<Mor> {
    m.inverse(&par_braid(m, b, a)?)
}

fn probe_triples(m: &dyn BraidedModel) -> Vec<(ObjRef, ObjRef, ObjRef)> {
    let ts = m.probe().triples;
    let mut out = Vec::new();
    for &p in &ts {
        for &q in &ts {
            for &r in &ts {
                out.push((p, q, r));
            }
        }
    }
    out
}

/// Hexagon identities for σ̂ and for the derived σ̌ on probe triples.
pub fn check_hexagons(m: &dyn BraidedModel) -> Verdict {
    let s = st(m);
    let mut t = Tally::new();
    for (p, q, r) in probe_triples(m) {
        let hex = || -> Result<[bool; 4]> {
            let a = |x, y, z| s.assoc_t(x, y, z);
            let ai = |x, y, z| s.inverse(&s.assoc_t(x, y, z));
            let b = |x, y| m.braid(x, y);
            let t1 = m.braid(p.tensor(q), r)
                == seq(s, &[&a(p, q, r), &s.tensor_mor(&s.id(p), &b(q, r)), &ai(p, r, q)?, &s.tensor_mor(&b(p, r), &s.id(q)), &a(r, p, q)])?;
            let t2 = m.braid(p, q.tensor(r))
                == seq(s, &[&ai(p, q, r)?, &s.tensor_mor(&b(p, q), &s.id(r)), &a(q, p, r), &s.tensor_mor(&s.id(q), &b(p, r)), &ai(q, r, p)?])?;
            let pa = |x, y, z| s.assoc_p(x, y, z);
            let pai = |x, y, z| s.inverse(&s.assoc_p(x, y, z));
            let c = |x, y| par_braid(m, x, y);
            let p1 = par_braid(m, p.par(q), r)?
                == seq(s, &[&pa(p, q, r), &s.par_mor(&s.id(p), &c(q, r)?), &pai(p, r, q)?, &s.par_mor(&c(p, r)?, &s.id(q)), &pa(r, p, q)])?;
            let p2 = par_braid(m, p, q.par(r))?
                == seq(s, &[&pai(p, q, r)?, &s.par_mor(&c(p, q)?, &s.id(r)), &pa(q, p, r), &s.par_mor(&s.id(q), &c(p, r)?), &pai(q, r, p)?])?;
            Ok([t1, t2, p1, p2])
        };
        let res = hex();
        let names = ["σ̂ at (p⊗q, r)", "σ̂ at (p, q⊗r)", "σ̌ at (p⅋q, r)", "σ̌ at (p, q⅋r)"];
        match res {
            Ok(bs) => {
                for (ok, name) in bs.iter().zip(names) {
                    t.record(*ok, || format!("hexagon {name} fails for p = {p}, q = {q}, r = {r}"));
                }
            }
            Err(e) => t.record(false, || format!("hexagon at ({p}, {q}, {r}): {e}")),
        }
    }
    t.finish()
}

/// The four squares relating σ̂, σ̌ and the linear distributions: two outer
/// hexagons and the two inner ones they split into.
pub fn check_par_braid_coherence(m: &dyn BraidedModel) -> Verdict {
    let s = st(m);
    let mut t = Tally::new();
    for (p, q, r) in probe_triples(m) {
        let res = (|| -> Result<[bool; 4]> {
            let idp = |x: ObjRef| s.id(x);
            // (p⅋q)⊗r → (p⊗r)⅋q
            let l1 = seq(
                s,
                &[&s.tensor_mor(&par_braid_inv(m, p, q)?, &idp(r)), &s.dist_r(q, p, r), &par_braid(m, q, p.tensor(r))?],
            )?;
            let r1 = seq(
                s,
                &[&m.braid(p.par(q), r), &s.dist_l(r, p, q), &s.par_mor(&tensor_braid_inv(m, r, p)?, &idp(q))],
            )?;
            // r⊗(q⅋p) → q⅋(r⊗p)
            let l2 = seq(
                s,
                &[&m.braid(r, q.par(p)), &s.dist_r(q, p, r), &s.par_mor(&idp(q), &tensor_braid_inv(m, p, r)?)],
            )?;
            let r2 = seq(
                s,
                &[&s.tensor_mor(&idp(r), &par_braid_inv(m, q, p)?), &s.dist_l(r, p, q), &par_braid(m, r.tensor(p), q)?],
            )?;
            // inner: r⊗(q⅋p) → q⅋(r⊗p)
            let l3 = seq(
                s,
                &[&tensor_braid_inv(m, r, q.par(p))?, &s.dist_r(q, p, r), &s.par_mor(&idp(q), &m.braid(p, r))],
            )?;
            let r3 = seq(
                s,
                &[&s.tensor_mor(&idp(r), &par_braid(m, q, p)?), &s.dist_l(r, p, q), &par_braid_inv(m, r.tensor(p), q)?],
            )?;
            // inner: (p⅋q)⊗r → (p⊗r)⅋q
            let l4 = seq(
                s,
                &[&s.tensor_mor(&par_braid(m, p, q)?, &idp(r)), &s.dist_r(q, p, r), &par_braid_inv(m, q, p.tensor(r))?],
            )?;
            let r4 = seq(
                s,
                &[&tensor_braid_inv(m, p.par(q), r)?, &s.dist_l(r, p, q), &s.par_mor(&m.braid(r, p), &idp(q))],
            )?;
            Ok([l1 == r1, l2 == r2, l3 == r3, l4 == r4])
        })();
        match res {
            Ok(bs) => {
                for (i, ok) in bs.iter().enumerate() {
                    t.record(*ok, || format!("braid/distribution square {} fails for p = {p}, q = {q}, r = {r}", i + 1));
                }
            }
            Err(e) => t.record(false, || format!("braid/distribution squares at ({p}, {q}, {r}): {e}")),
        }
    }
    t.finish()
}

/// Naturality of σ̂ in its first argument over spans between unary probes.
pub fn check_braid_naturality(m: &dyn BraidedModel) -> Verdict {
    let s = st(m);
    let gens = m.generators();
    let mut t = Tally::new();
    for &a in &gens {
        for &b in &gens {
            for f in m.hom_span(a, b) {
                for &q in &gens {
                    let lhs = s.compose(&s.tensor_mor(&f, &s.id(q)), &m.braid(b, q));
                    let rhs = s.compose(&m.braid(a, q), &s.tensor_mor(&s.id(q), &f));
                    t.record_res((|| Ok(lhs? == rhs?))(), || format!("σ̂ not natural at f: {a} → {b}, q = {q}"));
                }
            }
        }
    }
    t.finish()
}

/// `σ̂_{q,p} ; σ̂_{p,q} = id` on probe pairs.
pub fn is_symmetric(m: &dyn BraidedModel) -> Verdict {
    let s = st(m);
    let pairs = m.probe().pairs;
    let mut t = Tally::new();
    for &p in &pairs {
        for &q in &pairs {
            t.record_res(s.compose(&m.braid(p, q), &m.braid(q, p)).map(|x| x == s.id(p.tensor(q))), || {
                format!("double braiding of {p} and {q} is not the identity")
            });
        }
    }
    t.finish()
}

type ThetaFn = dyn Fn(&dyn BraidedModel, ObjRef) -> Result<Mor> + Send + Sync;

/// A candidate balance `θ_p: p → p`, evaluated lazily.
#[derive(Clone)]
pub struct Balance {
    pub label: String,
    theta: Arc<ThetaFn>,
}

impl fmt::Debug for Balance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Balance({})", self.label)
    }
}

impl Balance {
    pub fn new(label: impl Into<String>, theta: impl Fn(&dyn BraidedModel, ObjRef) -> Result<Mor> + Send + Sync + 'static) -> Self {
        Balance { label: label.into(), theta: Arc::new(theta) }
    }

    pub fn theta(&self, m: &dyn BraidedModel, p: ObjRef) -> Result<Mor> {
        let th = (self.theta)(m, p)?;
        if !th.typed_as(p, p) {
            return Err(StautError::Shape(format!("balance {} at {p} has type {} → {}", self.label, th.dom, th.cod)));
        }
        Ok(th)
    }

    pub fn identity() -> Self {
        Balance::new("identity", |m, p| Ok(m.id(p)))
    }

    pub fn scalar(lambda: Q) -> Self {
        Balance::new(format!("{lambda}·id"), move |m, p| {
            m.lin_comb(&[(lambda, &m.id(p))])
                .ok_or_else(|| StautError::Precondition("scalar balances need a linear backend".into()))
        })
    }

    /// The backend's ribbon twist.
    pub fn ribbon() -> Self {
        Balance::new("ribbon", |m, p| {
            m.ribbon(p).ok_or_else(|| StautError::Precondition(format!("{} carries no ribbon twist", m.label())))
        })
    }
}

/// Invertibility and naturality `f ; θ_b = θ_a ; f` over spans between
/// unary probes.
pub fn validate_balance(m: &dyn BraidedModel, th: &Balance) -> Verdict {
    let s = st(m);
    let probe = m.probe();
    let mut t = Tally::new();
    for &p in &probe.unary {
        t.record_res(th.theta(m, p).and_then(|x| s.inverse(&x)).map(|_| true), || format!("θ at {p} not invertible"));
    }
    for &a in &probe.unary {
        for &b in &probe.unary {
            for f in m.hom_span(a, b) {
                let r = (|| Ok(s.compose(&f, &th.theta(m, b)?)? == s.compose(&th.theta(m, a)?, &f)?))();
                t.record_res(r, || format!("θ not natural at f: {a} → {b}"));
            }
        }
    }
    t.finish()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    Tensor,
    Par,
}

/// `θ_{p⊗q} = σ̂_{p,q} ; (θ_q⊗θ_p) ; σ̂_{q,p}` (or its ⅋ analogue) on probe
/// pairs, together with `θ_e = id` (resp. `θ_d = id`).
pub fn check_semibalance(m: &dyn BraidedModel, th: &Balance, which: Which) -> Verdict {
    let s = st(m);
    let pairs = m.probe().pairs;
    let mut t = Tally::new();
    let unit = match which {
        Which::Tensor => ObjRef::e(),
        Which::Par => ObjRef::d(),
    };
    t.record_res(th.theta(m, unit).map(|x| x == s.id(unit)), || format!("θ at {unit} is not the identity"));
    for &p in &pairs {
        for &q in &pairs {
            let r = (|| -> Result<bool> {
                let (tp, tq) = (th.theta(m, p)?, th.theta(m, q)?);
                Ok(match which {
                    Which::Tensor => th.theta(m, p.tensor(q))? == seq(s, &[&m.braid(p, q), &s.tensor_mor(&tq, &tp), &m.braid(q, p)])?,
                    Which::Par => {
                        th.theta(m, p.par(q))?
                            == seq(s, &[&par_braid(m, p, q)?, &s.par_mor(&tq, &tp), &par_braid(m, q, p)?])?
                    }
                })
            })();
            t.record_res(r, || format!("{which:?} balance square fails at p = {p}, q = {q}"));
        }
    }
    t.finish()
}

/// The balance carried by a cycle:
/// `p → p⊗e → p⊗(⊥p⅋p) → (p⊗⊥p)⅋p → (p⊗ᵖp)⅋p → (ᵖp⊗p)⅋p → d⅋p → p`
/// through `τ`, `δL`, `ν_p`, a negative crossing and `γ'`.
pub fn balance_from_cycle(c: &CycleData) -> Balance {
    let c = c.clone();
    Balance::new(format!("θ[{}]", c.label), move |m, p| {
        let s = st(m);
        let (lp, rp) = (p.ldual(), p.rdual());
        let nu = c.nu(s, p)?;
        seq(
            s,
            &[
                &s.inverse(&s.runit_t(p))?,
                &s.tensor_mor(&s.id(p), &s.tau(p)),
                &s.dist_l(p, lp, p),
                &s.par_mor(&s.tensor_mor(&s.id(p), &nu), &s.id(p)),
                &s.par_mor(&tensor_braid_inv(m, p, rp)?, &s.id(p)),
                &s.par_mor(&s.gamma_r(p), &s.id(p)),
                &s.lunit_p(p),
            ],
        )
    })
}

/// `N_{p,t}(ω) = σ̂_{t,p} ; (θ_p⊗id_t) ; ω` for `ω: p⊗t → d`. The braiding
/// comes from `bm`, which must be the model the cycle is evaluated in.
pub fn cycle_from_balance(bm: Arc<dyn BraidedModel>, th: &Balance) -> BigCycle {
    let th = th.clone();
    BigCycle::new(format!("N[{}]", th.label), move |m, w| {
        let (p, t) = split_tensor(w.dom)?;
        let b: &dyn BraidedModel = &*bm;
        seq(m, &[&b.braid(t, p), &m.tensor_mor(&th.theta(b, p)?, &m.id(t)), w])
    })
}

/// The lowercase cycle of [`cycle_from_balance`].
pub fn lower_cycle_from_balance(bm: Arc<dyn BraidedModel>, th: &Balance) -> CycleData {
    to_lower(&cycle_from_balance(bm, th))
}

/// Balance → cycle → balance and cycle → balance → cycle on unary probes.
pub fn check_correspondence_roundtrip(bm: Arc<dyn BraidedModel>, th: &Balance, c: &CycleData) -> Verdict {
    let m: &dyn BraidedModel = &*bm;
    let s = st(m);
    let back = balance_from_cycle(&lower_cycle_from_balance(bm.clone(), th));
    let c2 = lower_cycle_from_balance(bm.clone(), &balance_from_cycle(c));
    let mut t = Tally::new();
    for &p in &m.probe().unary {
        t.record_res((|| Ok(th.theta(m, p)? == back.theta(m, p)?))(), || format!("θ not recovered at {p}"));
        t.record_res((|| Ok(c.nu(s, p)? == c2.nu(s, p)?))(), || format!("ν not recovered at {p}"));
    }
    t.finish()
}

/// The 4π-twist: `p → e⊗p → (p⅋ᵖp)⊗p → (p⅋ᵖp)⊗p → p⅋(ᵖp⊗p) → p⅋d → p`
/// through `τ'`, a double ⅋-crossing, `δR` and `γ'`.
pub fn stitch(m: &dyn BraidedModel, p: ObjRef) -> Result<Mor> {
    let s = st(m);
    let rp = p.rdual();
    let double = s.compose(&par_braid_inv(m, p, rp)?, &par_braid_inv(m, rp, p)?)?;
    seq(
        s,
        &[
            &s.inverse(&s.lunit_t(p))?,
            &s.tensor_mor(&s.tau_r(p), &s.id(p)),
            &s.tensor_mor(&double, &s.id(p)),
            &s.dist_r(p, rp, p),
            &s.par_mor(&s.id(p), &s.gamma_r(p)),
            &s.runit_p(p),
        ],
    )
}

/// `f ; stitch_b = stitch_a ; f` over spans between unary probes.
pub fn check_stitch_naturality(m: &dyn BraidedModel) -> Verdict {
    let s = st(m);
    let unary = m.probe().unary;
    let mut t = Tally::new();
    for &a in &unary {
        for &b in &unary {
            for f in m.hom_span(a, b) {
                let r = (|| Ok(s.compose(&f, &stitch(m, b)?)? == s.compose(&stitch(m, a)?, &f)?))();
                t.record_res(r, || format!("stitch not natural at f: {a} → {b}"));
            }
        }
    }
    t.finish()
}

/// `stitch_p = id` on unary probes.
pub fn stitch_is_trivial(m: &dyn BraidedModel) -> Verdict {
    let mut t = Tally::new();
    for &p in &m.probe().unary {
        t.record_res(stitch(m, p).map(|x| x == m.id(p)), || format!("stitch at {p} is not the identity"));
    }
    t.finish()
}

/// `θ_p ; ι_p ; ᵖ(θ_{⊥p}) ; ι_p⁻¹ = stitch_p` on unary probes, with
/// `ι_p: p → ᵖ(⊥p)`.
pub fn check_quasibalance(m: &dyn BraidedModel, th: &Balance) -> Verdict {
    let s = st(m);
    let mut t = Tally::new();
    for &p in &m.probe().unary {
        let r = (|| -> Result<bool> {
            let iota = iota_r(s, p)?;
            let lhs = seq(s, &[&th.theta(m, p)?, &iota, &rdual_mor(s, &th.theta(m, p.ldual())?)?, &s.inverse(&iota)?])?;
            Ok(lhs == stitch(m, p)?)
        })();
        t.record_res(r, || format!("quasibalance condition fails at {p}"));
    }
    t.finish()
}

/// `θ_{⊥p} = ⊥(θ_p)` holds exactly when `stitch_p = θ_p²`, per unary probe.
/// Meaningful for balances.
pub fn check_balance_double(m: &dyn BraidedModel, th: &Balance) -> Verdict {
    let s = st(m);
    let mut t = Tally::new();
    for &p in &m.probe().unary {
        let r = (|| -> Result<(bool, bool)> {
            let tp = th.theta(m, p)?;
            let dual_ok = th.theta(m, p.ldual())? == ldual_mor(s, &tp)?;
            let square_ok = stitch(m, p)? == s.compose(&tp, &tp)?;
            Ok((dual_ok, square_ok))
        })();
        match r {
            Ok((a, b)) => t.record(a == b, || format!("at {p}: θ_⊥p = ⊥θ_p is {a} but stitch = θ² is {b}")),
            Err(e) => t.record(false, || format!("at {p}: {e}")),
        }
    }
    t.finish()
}

/// What the braid-induced identity cycle (`θ = id`) looks like on a model.
#[derive(Clone, Debug)]
pub struct IdentityCycleReport {
    pub symmetric: Verdict,
    pub stitch_trivial: Verdict,
    pub profile: AxiomProfile,
}

impl IdentityCycleReport {
    /// Cycle iff symmetric, quasicycle iff the stitch is trivial.
    pub fn verdict(&self) -> Verdict {
        let cyc = self.profile.cycle();
        let quasi = self.profile.quasicycle();
        let a = Verdict::from_bool(cyc == self.symmetric.pass, self.symmetric.probes, || {
            format!("identity cycle is a cycle: {cyc}, braiding symmetric: {}", self.symmetric.pass)
        });
        let b = Verdict::from_bool(quasi == self.stitch_trivial.pass, self.stitch_trivial.probes, || {
            format!("identity cycle is a quasicycle: {quasi}, stitch trivial: {}", self.stitch_trivial.pass)
        });
        a.and(b)
    }
}

pub fn check_identity_cycle_symmetry(bm: Arc<dyn BraidedModel>) -> IdentityCycleReport {
    let c = lower_cycle_from_balance(bm.clone(), &Balance::identity());
    let m: &dyn BraidedModel = &*bm;
    IdentityCycleReport { symmetric: is_symmetric(m), stitch_trivial: stitch_is_trivial(m), profile: profile(st(m), &c) }
}

/// Per-instance transfer of the semicycle/semibalance split: Tbin input gives
/// a ⊗-semibalance, Pbin input a ⅋-semibalance.
pub fn check_split_from_cycle(m: &dyn BraidedModel, c: &CycleData, pr: &AxiomProfile) -> Verdict {
    let th = balance_from_cycle(c);
    let mut v = Verdict::ok(0);
    if pr.holds(Axiom::Tbin) {
        v = v.and(check_semibalance(m, &th, Which::Tensor));
    }
    if pr.holds(Axiom::Pbin) {
        v = v.and(check_semibalance(m, &th, Which::Par));
    }
    v
}

/// The reverse transfer: a ⊗-semibalance gives E2, a ⅋-semibalance gives M2.
pub fn check_split_from_balance(bm: Arc<dyn BraidedModel>, th: &Balance) -> Verdict {
    let m: &dyn BraidedModel = &*bm;
    let c = lower_cycle_from_balance(bm.clone(), th);
    let mut v = Verdict::ok(0);
    if check_semibalance(m, th, Which::Tensor).pass {
        v = v.and(crate::cyclicity::check_axiom(st(m), &c, Axiom::E2));
    }
    if check_semibalance(m, th, Which::Par).pass {
        v = v.and(crate::cyclicity::check_axiom(st(m), &c, Axiom::M2));
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclicity::{check_axiom, validate_cycle};
    use crate::linear::{build_drinfeld_z2, build_graded_lines, build_vec_model, LinearModel, DZ2_SIMPLES};

    fn vec2() -> Arc<LinearModel> {
        Arc::new(build_vec_model(2, 1).unwrap())
    }

    fn graded() -> Arc<LinearModel> {
        Arc::new(build_graded_lines(Q::int(2), &[1, -1, 2], 1).unwrap())
    }

    fn dz2() -> Arc<LinearModel> {
        Arc::new(build_drinfeld_z2(1).unwrap())
    }

    #[test]
    fn derived_par_braiding_is_coherent() {
        for m in [vec2(), graded(), dz2()] {
            assert!(check_hexagons(&*m).pass, "{}", m.label());
            let v = check_par_braid_coherence(&*m);
            assert!(v.pass, "{}: {:?}", m.label(), v.witness);
            assert!(check_braid_naturality(&*m).pass);
        }
    }

    #[test]
    fn par_braiding_matches_tensor_braiding_in_compact_models() {
        for m in [vec2(), graded(), dz2()] {
            let g = m.generators();
            for &p in &g {
                for &q in &g {
                    assert_eq!(par_braid(&*m, p, q).unwrap().mat(), m.braid(p, q).mat());
                }
            }
        }
    }

    #[test]
    fn stitch_collapses_in_symmetric_vec() {
        let m = vec2();
        assert!(is_symmetric(&*m).pass);
        assert!(stitch_is_trivial(&*m).pass);
        assert!(check_stitch_naturality(&*m).pass);
    }

    #[test]
    fn double_has_trivial_stitch_but_nontrivial_double_braiding() {
        let m = dz2();
        let v = stitch_is_trivial(&*m);
        assert!(v.pass, "{:?}", v.witness);
        assert!(!is_symmetric(&*m).pass);
        assert!(check_stitch_naturality(&*m).pass);
    }

    #[test]
    fn graded_stitch_is_twist_squared() {
        let m = graded();
        let p = m.generators()[0];
        let k = m.degree(p);
        let st = stitch(&*m, p).unwrap();
        assert_eq!(st.mat().get(0, 0), Q::int(2).powi(2 * k * k));
    }

    #[test]
    fn semibalance_examples() {
        let m = vec2();
        for w in [Which::Tensor, Which::Par] {
            assert!(check_semibalance(&*m, &Balance::identity(), w).pass);
            assert!(!check_semibalance(&*m, &Balance::scalar(Q::int(2)), w).pass);
        }
        let d = dz2();
        assert!(validate_balance(&*d, &Balance::ribbon()).pass);
        for w in [Which::Tensor, Which::Par] {
            let v = check_semibalance(&*d, &Balance::ribbon(), w);
            assert!(v.pass, "{w:?}: {:?}", v.witness);
        }
        let g = graded();
        for w in [Which::Tensor, Which::Par] {
            assert!(check_semibalance(&*g, &Balance::ribbon(), w).pass);
            assert!(!check_semibalance(&*g, &Balance::identity(), w).pass);
        }
    }

    #[test]
    fn balance_of_identity_and_scalar_cycles_on_vec() {
        let m = vec2();
        let th = balance_from_cycle(&CycleData::identity());
        for &p in &m.probe().unary {
            assert_eq!(th.theta(&*m, p).unwrap(), m.id(p));
        }
        let th = balance_from_cycle(&CycleData::scalar(Q::int(3)));
        let v1 = m.gen("v1");
        assert_eq!(th.theta(&*m, v1).unwrap().mat().get(0, 0), Q::int(3));
    }

    #[test]
    fn identity_cycle_on_double_gives_ribbon_twist() {
        let m = dz2();
        let th = balance_from_cycle(&CycleData::identity());
        for s in DZ2_SIMPLES.iter().chain(["reg"].iter()) {
            let p = m.gen(s);
            assert_eq!(th.theta(&*m, p).unwrap(), m.ribbon(p).unwrap(), "{s}");
        }
    }

    #[test]
    fn cycle_from_scalar_balance_scales() {
        let m = vec2();
        let c = lower_cycle_from_balance(m.clone(), &Balance::scalar(Q::int(5)));
        let v1 = m.gen("v1");
        assert_eq!(c.nu(&*m, v1).unwrap().mat().get(0, 0), Q::int(5));
        let n = cycle_from_balance(m.clone(), &Balance::identity());
        let p = m.gen("v2");
        let w = m.gamma(p);
        let expect = m.compose(&m.braid(p.ldual(), p), &w).unwrap();
        assert_eq!(n.apply(&*m, &w).unwrap(), expect);
    }

    #[test]
    fn roundtrips() {
        let m = vec2();
        assert!(check_correspondence_roundtrip(m.clone(), &Balance::scalar(Q::int(2)), &CycleData::scalar(Q::int(2))).pass);
        let d = dz2();
        let v = check_correspondence_roundtrip(d.clone(), &Balance::ribbon(), &CycleData::identity());
        assert!(v.pass, "{:?}", v.witness);
        let g = graded();
        assert!(check_correspondence_roundtrip(g.clone(), &Balance::ribbon(), &CycleData::identity()).pass);
    }

    #[test]
    fn ribbon_on_double_gives_a_cycle() {
        let d = dz2();
        let c = lower_cycle_from_balance(d.clone(), &Balance::ribbon());
        assert!(validate_cycle(&*d, &c).pass);
        for ax in [Axiom::Tbin, Axiom::Pbin, Axiom::K] {
            assert!(check_axiom(&*d, &c, ax).pass, "{ax}");
        }
        assert!(check_split_from_balance(d.clone(), &Balance::ribbon()).pass);
    }

    #[test]
    fn quasibalance_both_branches() {
        let d = dz2();
        assert!(check_quasibalance(&*d, &Balance::identity()).pass);
        assert!(check_quasibalance(&*d, &Balance::ribbon()).pass);
        assert!(check_quasibalance(&*vec2(), &Balance::identity()).pass);
        let g = graded();
        assert!(!check_quasibalance(&*g, &Balance::identity()).pass);
        assert!(check_quasibalance(&*g, &Balance::ribbon()).pass);
    }

    #[test]
    fn balance_double_examples() {
        let d = dz2();
        assert!(check_balance_double(&*d, &Balance::ribbon()).pass);
        assert!(check_balance_double(&*vec2(), &Balance::identity()).pass);
        assert!(check_balance_double(&*graded(), &Balance::ribbon()).pass);
        // 2·id satisfies θ_⊥p = ⊥θ_p but not stitch = θ², so it cannot be a balance.
        assert!(!check_balance_double(&*vec2(), &Balance::scalar(Q::int(2))).pass);
        assert!(!check_semibalance(&*vec2(), &Balance::scalar(Q::int(2)), Which::Tensor).pass);
    }

    #[test]
    fn identity_cycle_symmetry() {
        let r = check_identity_cycle_symmetry(vec2());
        assert!(r.profile.cycle() && r.verdict().pass);
        let r = check_identity_cycle_symmetry(dz2());
        assert!(!r.profile.cycle(), "{}", r.profile.row());
        assert!(r.profile.quasicycle());
        assert!(r.verdict().pass, "{:?}", r.verdict().witness);
        let r = check_identity_cycle_symmetry(graded());
        assert!(!r.profile.quasicycle());
        assert!(r.verdict().pass);
    }

    #[test]
    fn split_transfers_from_cycles() {
        let d = dz2();
        let c = CycleData::identity();
        let pr = profile(&*d, &c);
        assert!(pr.holds(Axiom::Tbin) && pr.holds(Axiom::Pbin));
        assert!(check_split_from_cycle(&*d, &c, &pr).pass);
    }
}
