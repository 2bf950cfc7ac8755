//! The nine acceptance criteria, each under its time limit. Runs without the
//! libtest harness so every criterion prints its own line.

use staut::cyclicity::{profile, Axiom, AxiomProfile, CycleData};
use staut::linear::build_vec_model;
use staut::suites::{self, Options, Outcome};
use staut::Q;
use std::process::Command;
use std::time::{Duration, Instant};

struct Row {
    id: &'static str,
    what: &'static str,
    limit: Duration,
    elapsed: Duration,
    failures: Vec<String>,
}

fn failures(outcomes: &[Outcome]) -> Vec<String> {
    outcomes
        .iter()
        .flat_map(|o| o.section.checks.iter().filter(|c| !c.pass).map(move |c| format!("{}: {} ({})", o.section.model, c.key, c.witness.clone().unwrap_or_default())))
        .collect()
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let r = f();
    (r, t.elapsed())
}

/// Each axiom for `λ·id` on Vec reduces to `λ^a = λ^b` by counting the
/// components of `ν` on either side of its diagram.
fn scalar_oracle(ax: Axiom, lam: Q) -> bool {
    let (a, b) = match ax {
        Axiom::K | Axiom::KPrime => (2, 0),
        Axiom::Pnul | Axiom::T0 | Axiom::Blr0 | Axiom::M0 => (1, 0),
        _ => (1, 2),
    };
    lam.powi(a) == lam.powi(b)
}

fn main() {
    let opts = Options::default();
    let mut rows = Vec::new();
    let mut profiles: Vec<AxiomProfile> = Vec::new();

    let (o, t) = timed(|| vec![suites::relations_criterion()]);
    rows.push(Row { id: "1", what: "negation identity on Rel(n) and 2-valued profunctors", limit: Duration::from_secs(5), elapsed: t, failures: failures(&o) });

    let (o, t) = timed(|| vec![suites::s3_criterion()]);
    rows.push(Row { id: "2", what: "pointed S3 cyclic exactly at the centre", limit: Duration::from_secs(1), elapsed: t, failures: failures(&o) });

    let ((o, mut extra), t) = timed(|| {
        let o = suites::scalar_table_criterion(opts);
        let m = build_vec_model(2, opts.depth).expect("Vec builds");
        let mut extra = Vec::new();
        for (n, d) in suites::SCALARS {
            let lam = Q::new(n, d);
            let pr = profile(&m, &CycleData::scalar(lam));
            for ax in Axiom::ALL {
                if pr.holds(ax) != scalar_oracle(ax, lam) {
                    extra.push(format!("{ax} at λ = {lam} disagrees with the scalar oracle"));
                }
            }
        }
        (vec![o], extra)
    });
    let mut f3 = failures(&o);
    f3.append(&mut extra);
    profiles.extend(o.into_iter().flat_map(|o| o.profiles));
    rows.push(Row { id: "3", what: "scalar table over λ ∈ {1, -1, 2, 1/2}", limit: Duration::from_secs(5), elapsed: t, failures: f3 });

    let (o, t5) = timed(|| vec![suites::profunctor_criterion(opts)]);
    let f5 = failures(&o);
    profiles.extend(o.into_iter().flat_map(|o| o.profiles));

    let (o, t6) = timed(|| vec![suites::appendix_criterion(opts)]);
    let f6 = failures(&o);

    let (o, t7) = timed(|| vec![suites::braided_criterion(opts)]);
    let f7 = failures(&o);
    profiles.extend(o.into_iter().flat_map(|o| o.profiles));

    let (o, t8) = timed(|| suites::strictify_criterion(opts));
    let f8 = failures(&o);
    profiles.extend(o.into_iter().flat_map(|o| o.profiles));

    let (o, t) = timed(|| vec![suites::consistency_criterion(&profiles)]);
    rows.push(Row { id: "4", what: "dependency rows and equivalences over every profile", limit: Duration::from_secs(5), elapsed: t, failures: failures(&o) });
    rows.push(Row { id: "5", what: "thin Prof: discrete 2-object ≅ Rel(2), Łukasiewicz 2-object", limit: Duration::from_secs(30), elapsed: t5, failures: f5 });
    rows.push(Row { id: "6", what: "base identity, contraposition agreement, par-braid squares", limit: Duration::from_secs(20), elapsed: t6, failures: f6 });
    rows.push(Row { id: "7", what: "braided suite on D(Z2)-modules", limit: Duration::from_secs(20), elapsed: t7, failures: f7 });
    rows.push(Row { id: "8", what: "Zang over thin and Vec on [-3, 3]", limit: Duration::from_secs(10), elapsed: t8, failures: f8 });

    let run = || {
        Command::new(env!("CARGO_BIN_EXE_staut"))
            .args(["paper", "all", "--format", "structured"])
            .output()
            .expect("binary runs")
    };
    let (a, t) = timed(run);
    let b = run();
    let mut f9 = Vec::new();
    if a.status.code() != Some(0) {
        f9.push(format!("exit code {:?}", a.status.code()));
    }
    if a.stdout != b.stdout {
        f9.push("two runs produced different structured reports".to_string());
    }
    rows.push(Row { id: "9", what: "`paper all` exits 0, deterministic", limit: Duration::from_secs(90), elapsed: t, failures: f9 });

    rows.sort_by_key(|r| r.id);
    let mut ok = true;
    for r in &rows {
        let in_time = r.elapsed <= r.limit;
        let pass = r.failures.is_empty() && in_time;
        ok &= pass;
        println!(
            "{} criterion {}: {} ({:.2}s, limit {}s)",
            if pass { "PASS" } else { "FAIL" },
            r.id,
            r.what,
            r.elapsed.as_secs_f64(),
            r.limit.as_secs()
        );
        for f in &r.failures {
            println!("    {f}");
        }
        if !in_time {
            println!("    over the time limit");
        }
    }
    if !ok {
        std::process::exit(1);
    }
}
