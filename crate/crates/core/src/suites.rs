//! Named check suites behind the CLI and the acceptance run. Each criterion
//! builds its own models and returns a report section plus every axiom
//! profile it computed, so the dependency-table check can run over all of
//! them at the end.

use crate::braided::{
    check_balance_double, check_braid_naturality, check_correspondence_roundtrip, check_hexagons,
    check_identity_cycle_symmetry, check_par_braid_coherence, check_quasibalance, check_split_from_balance,
    check_stitch_naturality, is_symmetric, lower_cycle_from_balance, stitch, stitch_is_trivial, Balance, BraidedModel,
};
use crate::cyclicity::{
    check_base_identity, check_big_cycle_bijective, check_dependency_table, check_further_equivalences, check_roundtrip,
    check_upper_lower_equivalences, classify, profile, validate_cycle, Axiom, AxiomProfile, CycleData,
};
use crate::error::{Result, StautError};
use crate::linear::{build_drinfeld_z2, build_vec_model, LinearModel, DZ2_SIMPLES};
use crate::matrix::Q;
use crate::obj::ObjRef;
use crate::profunctors::{check_contraposition_agreement, check_iso_with_relations, check_prof_staut, VCat};
use crate::quantale::{build_lukasiewicz, build_rel_quantale, build_s3, build_two_profunctor_quantale, is_cyclic, rel, s3, Poset, Quantale};
use crate::report::{Check, Section, SuiteReport, Tally, Verdict};
use crate::staut::{
    check_canonical_maps, check_curry_bijection, check_distribution_coherence, check_monoidal_coherence,
    check_structure_maps, check_triangles, StautModel,
};
use crate::strictify::{
    check_equivalence, check_fang_tensor_chain, check_strict_negations, check_string, fang_check, require_cycle, zangcycle,
    zangify,
    Window, ZString, ZangModel,
};
use crate::thin::quantale_model;
use std::sync::Arc;

/// The Vec scalars of the scalar table.
pub const SCALARS: [(i64, i64); 4] = [(1, 1), (-1, 1), (2, 1), (1, 2)];

/// How the braid-induced cycle is read off a balance; printed in braided reports.
pub const CYCLE_FROM_BALANCE_READING: &str =
    "N(ω) = σ̂_{t,p} ; (θ_p ⊗ id_t) ; ω for ω: p⊗t → d, with the positive tensor crossing";

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub seed: u64,
    pub depth: usize,
    pub window: Window,
}

impl Default for Options {
    fn default() -> Self {
        Options { seed: 0, depth: 1, window: Window::default() }
    }
}

/// A report section together with the axiom profiles computed for it.
pub struct Outcome {
    pub section: Section,
    pub profiles: Vec<AxiomProfile>,
}

impl Outcome {
    fn new(model: impl Into<String>) -> Outcome {
        Outcome { section: Section::new(model), profiles: Vec::new() }
    }

    fn push(&mut self, c: Check) {
        self.section.push(c);
    }

    pub fn pass(&self) -> bool {
        self.section.pass()
    }
}

fn staut_checks(m: &dyn StautModel, prefix: &str) -> Vec<Check> {
    vec![
        Check::new(format!("{prefix}.structure-maps"), "structure maps are well-formed", check_structure_maps(m)),
        Check::new(format!("{prefix}.triangles"), "linear triangle identities", check_triangles(m)),
        Check::new(format!("{prefix}.curry"), "currying is bijective", check_curry_bijection(m)),
        Check::new(format!("{prefix}.monoidal"), "pentagons and unit triangles", check_monoidal_coherence(m)),
        Check::new(format!("{prefix}.distribution"), "linear distribution coherence", check_distribution_coherence(m)),
        Check::new(format!("{prefix}.canonical"), "de Morgan and cancellation maps invertible", check_canonical_maps(m)),
    ]
}

/// `⊥ω = ¬ω^rev = ᵖω` for every element of a relation quantale, with `⊥ω`
/// recomputed by brute-force residuation.
pub fn relation_negation_identity(q: &Quantale) -> Verdict {
    let mut t = Tally::new();
    let d = q.dualizer();
    for a in q.elements() {
        let Some((n, r)) = q.relation(a) else {
            return Verdict::fail(t.probes(), format!("{} is not a relation quantale", q.name()));
        };
        let formula = q.element_of_relation(rel::complement(n, rel::reverse(n, r)));
        let brute = q.lres_brute(a, d);
        let ok = formula.is_some() && formula == Some(q.ldual(a)) && formula == Some(q.rdual(a)) && brute == formula;
        t.record(ok, || format!("{}: negations of {} disagree with ¬ω^rev", q.name(), rel::show(n, r)));
    }
    t.finish()
}

/// Relations on 1..3 points and 2-valued profunctors over every poset on at
/// most 3 points.
pub fn relations_criterion() -> Outcome {
    let mut o = Outcome::new("relation and 2-valued profunctor quantales");
    for n in 1..=3 {
        let r = build_rel_quantale(n).map(|q| relation_negation_identity(&q));
        o.push(Check::from_result(format!("rel{n}.negation-identity"), format!("⊥ω = ¬ω^rev = ᵖω on Rel({n})"), r));
    }
    for n in 1..=3 {
        let mut v = Verdict::ok(0);
        let posets = Poset::all(n);
        for p in &posets {
            match build_two_profunctor_quantale(p) {
                Ok(q) => v = v.and(relation_negation_identity(&q)),
                Err(e) => v = v.and(Verdict::fail(0, e.to_string())),
            }
        }
        o.push(Check::new(
            format!("2prof{n}.negation-identity"),
            format!("⊥ω = ¬ω^rev = ᵖω over all {} posets on {n} points", posets.len()),
            v,
        ));
    }
    o
}

/// Pointed discrete S3 is cyclic exactly at central dualizers.
pub fn s3_criterion() -> Outcome {
    let mut o = Outcome::new("pointed discrete S3");
    let (labels, table) = s3();
    let n = labels.len();
    for (i, l) in labels.iter().enumerate() {
        let central = (0..n).all(|g| table[g * n + i] == table[i * n + g]);
        let r = build_s3(l).map(|q| {
            let (cyc, w) = is_cyclic(&q);
            Verdict::from_bool(cyc == central, n as u64, || {
                format!("cyclic = {cyc} but central = {central} (first non-cyclic element {:?})", w.map(|w| q.label(w).to_string()))
            })
        });
        let expect = if central { "cyclic, central" } else { "not cyclic, not central" };
        o.push(Check::from_result(format!("s3.{l}"), format!("d0 = {l}: {expect}"), r));
    }
    o
}

fn scalar(lam: (i64, i64)) -> Q {
    Q::new(lam.0, lam.1)
}

/// Expected truth of an axiom for `ν = λ·id` on Vec: K needs `λ² = 1`, T0
/// and the lower binary axioms need `λ = 1`.
fn scalar_expectation(ax: Axiom, lam: Q) -> Option<bool> {
    let one = Q::int(1);
    match ax {
        Axiom::K => Some(lam * lam == one),
        Axiom::T0 | Axiom::Pnul | Axiom::Tbin | Axiom::Pbin => Some(lam == one),
        _ => None,
    }
}

/// Axiom profiles of the scalar cycles `λ·id` on Vec.
pub fn scalar_table_criterion(opts: Options) -> Outcome {
    let mut o = Outcome::new("Vec, dims ≤ 2, scalar cycles");
    let m = match build_vec_model(2, opts.depth) {
        Ok(m) => m,
        Err(e) => {
            o.push(Check::new("vec.build", "build Vec", Verdict::fail(0, e.to_string())));
            return o;
        }
    };
    o.section.probes = Some(m.probe().stats());
    for lam in SCALARS.map(scalar) {
        let c = CycleData::scalar(lam);
        o.push(Check::new(format!("scalar[{lam}].valid"), "invertible and natural", validate_cycle(&m, &c)));
        let cl = classify(&m, &c);
        let mut t = Tally::new();
        for ax in Axiom::ALL {
            if let Some(want) = scalar_expectation(ax, lam) {
                let got = cl.profile.holds(ax);
                t.record(got == want, || format!("{ax} at λ = {lam}: expected {want}, got {got}"));
            }
        }
        let kind = if cl.cycle {
            "cycle"
        } else if cl.quasicycle {
            "quasicycle"
        } else {
            "neither"
        };
        o.push(Check::new(format!("scalar[{lam}].profile"), format!("{kind}: {}", cl.profile.row()), t.finish()));
        o.push(Check::new(format!("scalar[{lam}].roundtrip"), "cycle ↔ Cycle roundtrip", check_roundtrip(&m, &c)));
        o.push(Check::new(format!("scalar[{lam}].bijective"), "N is a bijection on hom-sets", check_big_cycle_bijective(&m, &c)));
        o.profiles.push(cl.profile);
    }
    o
}

/// Dependency rows, upper/lower pairs and the further equivalences over a
/// set of profiles.
pub fn consistency_criterion(profiles: &[AxiomProfile]) -> Outcome {
    let mut o = Outcome::new(format!("axiom dependencies over {} profiles", profiles.len()));
    o.push(Check::new("deps.table", "six dependency rows", check_dependency_table(profiles)));
    let mut ul = Verdict::ok(0);
    let mut fu = Verdict::ok(0);
    for pr in profiles {
        ul = ul.and(check_upper_lower_equivalences(pr));
        fu = fu.and(check_further_equivalences(pr));
    }
    o.push(Check::new("deps.upper-lower", "four upper/lower pairs agree", ul));
    o.push(Check::new("deps.further", "Tbin ⟺ E2 ⟺ M2′ and BLR2 ⟺ K′ ∧ E2", fu));
    o
}

/// Thin profunctor categories: `Prof_2` on two discrete points against
/// `Rel(2)`, and a two-object Łukasiewicz-enriched category.
pub fn profunctor_criterion(opts: Options) -> Outcome {
    let mut o = Outcome::new("thin enriched profunctors");
    let r = (|| -> Result<Vec<Check>> {
        let two = Arc::new(build_rel_quantale(1)?);
        let c = VCat::discrete(two, 2)?;
        let mut out = vec![Check::new(
            "prof2.iso-rel2",
            "Prof_2(c,c) ≅ Rel(2) for discrete c on two points",
            check_iso_with_relations(&c, &build_rel_quantale(2)?),
        )];
        out.extend(prefixed(check_prof_staut(&c, 0, opts.seed), "discrete2"));
        let luk = Arc::new(build_lukasiewicz(3)?);
        let half = luk.index_of("1/2").expect("luk:3 has 1/2");
        let (one, zero) = (luk.unit(), luk.bottom().expect("complete"));
        let c = VCat::new(luk, vec!["a".into(), "b".into()], vec![one, half, zero, one])?;
        out.extend(prefixed(check_prof_staut(&c, 2000, opts.seed), "luk3"));
        Ok(out)
    })();
    match r {
        Ok(cs) => cs.into_iter().for_each(|c| o.push(c)),
        Err(e) => o.push(Check::new("prof.build", "build enriched categories", Verdict::fail(0, e.to_string()))),
    }
    o.profiles.extend(thin_profiles());
    o
}

fn prefixed(cs: Vec<Check>, p: &str) -> Vec<Check> {
    cs.into_iter().map(|mut c| {
        c.key = format!("{p}.{}", c.key);
        c
    }).collect()
}

fn thin_profiles() -> Vec<AxiomProfile> {
    let m = quantale_model(build_rel_quantale(2).expect("rel:2"), 2, 1);
    vec![profile(&m, &CycleData::identity())]
}

/// Sampled base identity on Vec, sampled contraposition agreement on Vec,
/// and the four par-braiding coherence squares on D(Z2).
pub fn appendix_criterion(opts: Options) -> Outcome {
    let mut o = Outcome::new("Vec dims ≤ 2 and D(Z2)-modules");
    match build_vec_model(2, opts.depth) {
        Ok(m) => {
            o.push(Check::new("vec.base-identity", "sampled (ψ, ω) pairs", check_base_identity(&m, 100, opts.seed)));
            o.push(Check::new(
                "vec.contraposition-agreement",
                "sampled action triples, identity cycle",
                check_contraposition_agreement(&m, &CycleData::identity(), 50, opts.seed),
            ));
        }
        Err(e) => o.push(Check::new("vec.build", "build Vec", Verdict::fail(0, e.to_string()))),
    }
    match build_drinfeld_z2(opts.depth) {
        Ok(m) => o.push(Check::new("dz2.par-braid-coherence", "four diagrams on probe triples", check_par_braid_coherence(&m))),
        Err(e) => o.push(Check::new("dz2.build", "build D(Z2)", Verdict::fail(0, e.to_string()))),
    }
    o
}

/// The braided suite on D(Z2)-modules.
pub fn braided_criterion(opts: Options) -> Outcome {
    let m = match build_drinfeld_z2(opts.depth) {
        Ok(m) => Arc::new(m),
        Err(e) => {
            let mut o = Outcome::new("D(Z2)-modules");
            o.push(Check::new("dz2.build", "build D(Z2)", Verdict::fail(0, e.to_string())));
            return o;
        }
    };
    braided_suite(m)
}

pub fn braided_suite(m: Arc<LinearModel>) -> Outcome {
    let mut o = Outcome::new(m.label());
    o.section.probes = Some(m.probe().stats());
    let bm: Arc<dyn BraidedModel> = m.clone();
    let b: &dyn BraidedModel = &*m;
    o.push(Check::new("braid.hexagons", "hexagons for σ̂ and σ̌", check_hexagons(b)));
    o.push(Check::new("braid.naturality", "σ̂ natural on spans", check_braid_naturality(b)));

    let simples: Vec<ObjRef> = DZ2_SIMPLES.iter().map(|s| m.gen(s)).collect();
    let mut mixed = None;
    for &p in &simples {
        for &q in &simples {
            let Ok(dbl) = m.compose(&m.braid(p, q), &m.braid(q, p)) else { continue };
            if mixed.is_none() && dbl != m.id(p.tensor(q)) {
                mixed = Some((p, q));
            }
        }
    }
    let v = match mixed {
        Some(_) => Verdict::ok(1),
        None => Verdict::fail(16, "σ∘σ = id on every pair of simples"),
    };
    let detail = match mixed {
        Some((p, q)) => format!("σ_{{{q},{p}}} ∘ σ_{{{p},{q}}} ≠ id"),
        None => "no witness".into(),
    };
    o.push(Check::new("braid.not-symmetric", detail, v));
    o.push(Check::expect("braid.symmetric", "σ∘σ = id on probe pairs (expected to fail)", false, is_symmetric(b)));

    let mut t = Tally::new();
    for s in DZ2_SIMPLES.iter().chain(["reg"].iter()) {
        let p = m.gen(s);
        t.record_res(stitch(b, p).map(|x| x == m.id(p)), || format!("stitch at {s} is not the identity"));
    }
    o.push(Check::new("stitch.simples-and-regular", "stitch = id on four simples and the regular module", t.finish()));
    o.push(Check::new("stitch.trivial", "stitch = id on unary probes", stitch_is_trivial(b)));
    o.push(Check::new("stitch.natural", "stitch is natural", check_stitch_naturality(b)));

    let rep = check_identity_cycle_symmetry(bm.clone());
    let k = rep.profile.results.get(&Axiom::K).cloned().unwrap_or_else(|| Verdict::fail(0, "K missing"));
    o.push(Check::new("identity-cycle.k", "braid-induced cycle of θ = id satisfies K", k));
    o.push(Check::new(
        "identity-cycle.quasicycle",
        format!("quasicycle: {}", rep.profile.row()),
        Verdict::from_bool(rep.profile.quasicycle(), 1, || "not a quasicycle".into()),
    ));
    o.push(Check::new(
        "identity-cycle.not-cycle",
        "not a full cycle, since the braiding is not symmetric",
        Verdict::from_bool(!rep.profile.cycle(), 1, || "identity cycle is a cycle".into()),
    ));
    o.push(Check::new("identity-cycle.symmetry-criterion", "cycle ⟺ symmetric, quasicycle ⟺ trivial stitch", rep.verdict()));
    o.profiles.push(rep.profile);

    let ribbon = Balance::ribbon();
    o.push(Check::new(
        "ribbon.roundtrip",
        "balance → cycle → balance is the identity for the ribbon twist",
        check_correspondence_roundtrip(bm.clone(), &ribbon, &CycleData::identity()),
    ));
    o.push(Check::new("ribbon.balance-double", "θ_⊥p = ⊥θ_p ⟺ stitch = θ²", check_balance_double(b, &ribbon)));
    o.push(Check::new("ribbon.quasibalance", "ribbon twist is a quasibalance", check_quasibalance(b, &ribbon)));
    o.push(Check::new("ribbon.split", "semibalances give E2 and M2", check_split_from_balance(bm.clone(), &ribbon)));
    let c = lower_cycle_from_balance(bm, &ribbon);
    let cl = classify(&*m, &c);
    o.push(Check::new(
        "ribbon.cycle",
        format!("cycle induced by the ribbon twist: {}", cl.profile.row()),
        Verdict::from_bool(cl.cycle, 1, || "ribbon-induced cycle is not a cycle".into()),
    ));
    o.profiles.push(cl.profile);
    o
}

/// Zang over one backend: star-autonomy, strict negations, the equivalence
/// with the base, and the Fang checks.
pub fn zang_suite(base: Arc<dyn StautModel>, opts: Options) -> Outcome {
    let w = opts.window;
    let mut o = Outcome::new(format!("Zang over {} on {w}", base.label()));
    let c = CycleData::identity();
    let gens = base.generators();
    if gens.len() < 2 {
        o.push(Check::new("zang.gens", "backend needs two generators", Verdict::fail(0, "fewer than two generators")));
        return o;
    }
    let (p, q) = (gens[0], gens[1]);
    let canon = zangify(base.clone(), p);
    // F-strings only make sense over a cycle; without one, Zang is still
    // checked on canonical strings.
    let cyclic = require_cycle(&*base, &c);
    if let Err(e) = &cyclic {
        o.push(Check::new("fang.precondition", "identity is a cycle on the base", Verdict::fail(0, e.to_string())));
    }
    let f = cyclic.is_ok().then(|| ZString::period2(base.clone(), q, &c));
    let mut strings = vec![canon.clone()];
    strings.extend(f.iter().cloned());
    if let Some(f) = &f {
        strings.push(canon.tensor(f).expect("one base"));
    }
    let mut t = Tally::new();
    for s in &strings {
        let v = check_string(s, w);
        t.record(v.pass, || v.witness.unwrap_or_default());
    }
    o.push(Check::new("zang.strings", "triangle identities along each string", t.finish()));

    let mut gens = vec![("p", canon)];
    gens.extend(f.iter().map(|f| ("f", f.clone())));
    let z = match ZangModel::new("Z", base.clone(), w, gens) {
        Ok(z) => Arc::new(z),
        Err(e) => {
            o.push(Check::new("zang.build", "build Zang", Verdict::fail(0, e.to_string())));
            return o;
        }
    };
    o.section.probes = Some(z.probe().stats());
    o.push(Check::new("zang.structure-maps", "structure maps are valid mates", check_structure_maps(&*z)));
    o.push(Check::new("zang.triangles", "linear triangle identities", check_triangles(&*z)));
    o.push(Check::new("zang.strict-negations", "de Morgan and cancellation are identities", check_strict_negations(&z)));
    o.push(Check::new("zang.equivalence", "every string is isomorphic to its canonical string", check_equivalence(base.clone(), &strings, w)));

    if let Some(f) = f {
        let fs = [f, ZString::period2(base.clone(), p, &c)];
        o.push(Check::from_result("fang.closure", "F-strings closed under ⊗, ⅋, ⊥, ᵖ, e, d; restricted cycle is id", fang_check(&fs, &c, w)));
        o.push(Check::from_result("fang.tensor-chain", "γ of a tensor of F-strings is N-compatible, link by link", check_fang_tensor_chain(&fs[0], &fs[1], &c, w)));

        let zc = zangcycle(z.clone(), &c);
        o.push(Check::new("zangcycle.valid", "extended cycle invertible and natural", validate_cycle(&*z, &zc)));
        // The thirteen axioms on a short window; the full window costs
        // seconds per binary axiom.
        let short = Window::new(-1, 1).expect("contains 0");
        let zs = ZangModel::new("Z", base.clone(), short, vec![("p", zangify(base.clone(), p)), ("f", fs[0].clone())]).map(Arc::new);
        match zs {
            Ok(zs) => {
                let cl = classify(&*zs, &zangcycle(zs.clone(), &c));
                o.push(Check::new(
                    "zangcycle.axioms",
                    format!("extended cycle on {short}: {}", cl.profile.row()),
                    Verdict::from_bool(cl.cycle, 1, || "extended cycle is not a cycle".into()),
                ));
                o.profiles.push(cl.profile);
            }
            Err(e) => o.push(Check::new("zangcycle.axioms", "build Zang on a short window", Verdict::fail(0, e.to_string()))),
        }
        let mut t = Tally::new();
        let fz = z.gen("f");
        for obj in [fz, fz.ldual(), fz.tensor(fz.rdual())] {
            let r = zc.nu(&*z, obj).map(|nu| {
                let s = z.eval(obj);
                w.indices().zip(nu.family()).all(|(n, comp)| *comp == base.id(s.z(n + 1)))
            });
            t.record_res(r, || format!("extended cycle at {obj} is not the identity"));
        }
        o.push(Check::new("zangcycle.identity-on-fang", "extended cycle is the identity on F-strings", t.finish()));
    }

    let lam = CycleData::scalar(Q::int(-1));
    let bad = [ZString::period2(base.clone(), p, &lam)];
    let v = match fang_check(&bad, &lam, w) {
        Err(StautError::Precondition(_)) => Verdict::ok(1),
        Err(e) => Verdict::fail(1, format!("wrong error: {e}")),
        Ok(_) => Verdict::fail(1, "(-1)·id accepted as a cycle"),
    };
    o.push(Check::new("fang.rejects-non-cycle", "(-1)·id is refused with the failing axiom named", v));
    o
}

/// Zang over the thin cyclic Rel(2) and over Vec with the identity cycle.
pub fn strictify_criterion(opts: Options) -> Vec<Outcome> {
    let mut out = Vec::new();
    match zang_backend("thin") {
        Ok(b) => out.push(zang_suite(b, opts)),
        Err(e) => out.push(failed("zang thin", e)),
    }
    match zang_backend("vec") {
        Ok(b) => out.push(zang_suite(b, opts)),
        Err(e) => out.push(failed("zang vec", e)),
    }
    out
}

fn failed(model: &str, e: StautError) -> Outcome {
    let mut o = Outcome::new(model);
    o.push(Check::new("build", "build backend", Verdict::fail(0, e.to_string())));
    o
}

pub const ZANG_BACKENDS: &str = "thin (Rel(2)), vec (Vec dims ≤ 2), or any cyclic quantale builtin";

/// `thin`, `vec`, or a quantale builtin.
pub fn zang_backend(name: &str) -> Result<Arc<dyn StautModel>> {
    match name {
        "thin" => Ok(Arc::new(quantale_model(build_rel_quantale(2)?, 2, 0))),
        "vec" => Ok(Arc::new(build_vec_model(2, 0)?)),
        other => {
            let q = crate::quantale::builtin(other).map_err(|_| StautError::UnknownBuiltin {
                name: other.to_string(),
                available: ZANG_BACKENDS.to_string(),
            })?;
            Ok(Arc::new(quantale_model(q, 2, 0)))
        }
    }
}

/// Checks for one quantale: laws, the thin model's staut suite, and the
/// cyclicity verdict computed elementwise and through the model.
pub fn quantale_report(q: Quantale, opts: Options) -> SuiteReport {
    let mut rep = SuiteReport::new("quantale check", opts.seed, opts.depth);
    let mut s = Section::new(format!("quantale {} ({} elements)", q.name(), q.size()));
    s.push(Check::new("laws", "associativity, units, monotonicity, residuals", q.check_laws(200_000, opts.seed)));
    if q.relation(0).is_some() {
        s.push(Check::new("negation-identity", "⊥ω = ¬ω^rev = ᵖω for every element", relation_negation_identity(&q)));
    }
    let (cyc, w) = is_cyclic(&q);
    let name = q.name().to_string();
    let wl = w.map(|w| q.label(w).to_string());
    let m = quantale_model(q, 2, opts.depth);
    s.probes = Some(m.probe().stats());
    for c in staut_checks(&m, "model") {
        s.push(c);
    }
    let c = CycleData::identity();
    let model_cyc = validate_cycle(&m, &c).pass;
    s.push(Check::new(
        "cyclic",
        if cyc { format!("{name} is cyclic") } else { format!("{name} is not cyclic (⊥a ≠ ᵖa at {})", wl.unwrap_or_default()) },
        Verdict::from_bool(cyc == model_cyc, 1, || format!("elementwise: {cyc}, identity cycle on the model: {model_cyc}")),
    ));
    if cyc {
        let cl = classify(&m, &c);
        let all = cl.profile.results.values().fold(Verdict::ok(0), |acc, v| acc.and(v.clone()));
        s.push(Check::new("cycle-axioms", format!("identity cycle: {}", cl.profile.row()), all));
    }
    rep.add(s);
    rep
}

/// `prof check`: the staut and cyclicity suite on `Prof_V(c,c)`.
pub fn prof_report(c: &VCat, opts: Options) -> SuiteReport {
    let mut rep = SuiteReport::new("prof check", opts.seed, opts.depth);
    let mut s = Section::new(format!("Prof over {} with {} objects", c.v.name(), c.n()));
    for ch in check_prof_staut(c, 2000, opts.seed) {
        s.push(ch);
    }
    rep.add(s);
    rep
}

/// `vec scalar-table`.
pub fn scalar_table_report(opts: Options) -> SuiteReport {
    let mut rep = SuiteReport::new("vec scalar-table", opts.seed, opts.depth);
    let o = scalar_table_criterion(opts);
    let c = consistency_criterion(&o.profiles);
    rep.add(o.section);
    rep.add(c.section);
    rep
}

pub fn braided_report(opts: Options) -> SuiteReport {
    let mut rep = SuiteReport::new("braided d2-suite", opts.seed, opts.depth);
    let o = braided_criterion(opts);
    let c = consistency_criterion(&o.profiles);
    rep.add(o.section);
    rep.add(c.section);
    rep.notes.push(format!("cycle_from_balance reading: {CYCLE_FROM_BALANCE_READING}"));
    rep
}

pub fn zang_report(backend: &str, opts: Options) -> Result<SuiteReport> {
    let base = zang_backend(backend)?;
    let mut rep = SuiteReport::new(format!("zang suite {backend}"), opts.seed, opts.depth);
    rep.window = Some(opts.window.hi.max(-opts.window.lo));
    rep.add(zang_suite(base, opts).section);
    Ok(rep)
}

/// Number of acceptance criteria run by [`paper_all`].
pub const CRITERIA: usize = 9;

/// Every acceptance criterion. Criteria run on separate threads; sections
/// are assembled in criterion order.
pub fn paper_all(opts: Options) -> SuiteReport {
    let mut rep = SuiteReport::new("paper all", opts.seed, opts.depth);
    rep.window = Some(opts.window.hi.max(-opts.window.lo));
    let outcomes: Vec<Vec<Outcome>> = std::thread::scope(|sc| {
        let hs = vec![
            sc.spawn(|| vec![relations_criterion()]),
            sc.spawn(|| vec![s3_criterion()]),
            sc.spawn(move || vec![scalar_table_criterion(opts)]),
            sc.spawn(move || vec![profunctor_criterion(opts)]),
            sc.spawn(move || vec![appendix_criterion(opts)]),
            sc.spawn(move || vec![braided_criterion(opts)]),
            sc.spawn(move || strictify_criterion(opts)),
        ];
        hs.into_iter().map(|h| h.join().expect("criterion thread panicked")).collect()
    });
    let mut profiles = Vec::new();
    for (i, os) in outcomes.into_iter().enumerate() {
        for mut o in os {
            o.section.model = format!("[{}] {}", SECTION_CRITERIA[i], o.section.model);
            profiles.extend(o.profiles);
            rep.add(o.section);
        }
    }
    let mut c = consistency_criterion(&profiles);
    c.section.model = format!("[4] {}", c.section.model);
    rep.add(c.section);
    rep.notes.push(format!("cycle_from_balance reading: {CYCLE_FROM_BALANCE_READING}"));
    rep
}

const SECTION_CRITERIA: [&str; 7] = ["1", "2", "3", "5", "6", "7", "8"];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_identity_holds_on_small_rels() {
        for n in 1..=2 {
            assert!(relation_negation_identity(&build_rel_quantale(n).unwrap()).pass);
        }
    }

    #[test]
    fn relation_identity_rejects_table_quantales() {
        assert!(!relation_negation_identity(&build_lukasiewicz(3).unwrap()).pass);
    }

    #[test]
    fn s3_rows() {
        let o = s3_criterion();
        assert!(o.pass());
        assert_eq!(o.section.checks.len(), 6);
    }

    #[test]
    fn scalar_expectations() {
        assert_eq!(scalar_expectation(Axiom::K, Q::int(-1)), Some(true));
        assert_eq!(scalar_expectation(Axiom::T0, Q::int(-1)), Some(false));
        assert_eq!(scalar_expectation(Axiom::E2, Q::int(2)), None);
    }

    #[test]
    fn unknown_backend_lists_choices() {
        let Err(StautError::UnknownBuiltin { available, .. }) = zang_backend("nope") else { panic!() };
        assert!(available.contains("thin"));
    }
}
