//! Verdicts, named checks and suite reports.

use crate::error::Result;
use serde::Serialize;

pub const SCHEMA_VERSION: &str = "staut-report/1";

/// Outcome of one exact check over a probe set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub pass: bool,
    /// Number of instances examined (object tuples times hom-span elements).
    pub probes: u64,
    /// First counterexample, replayable from the model and seed.
    pub witness: Option<String>,
}

impl Verdict {
    pub fn ok(probes: u64) -> Verdict {
        Verdict { pass: true, probes, witness: None }
    }

    pub fn fail(probes: u64, witness: impl Into<String>) -> Verdict {
        Verdict { pass: false, probes, witness: Some(witness.into()) }
    }

    pub fn from_bool(pass: bool, probes: u64, witness: impl FnOnce() -> String) -> Verdict {
        if pass {
            Verdict::ok(probes)
        } else {
            Verdict::fail(probes, witness())
        }
    }

    /// Conjunction; keeps the first witness.
    pub fn and(self, o: Verdict) -> Verdict {
        Verdict {
            pass: self.pass && o.pass,
            probes: self.probes + o.probes,
            witness: self.witness.or(o.witness),
        }
    }
}

/// Accumulates per-instance outcomes into a verdict.
#[derive(Default)]
pub struct Tally {
    probes: u64,
    witness: Option<String>,
}

impl Tally {
    pub fn new() -> Tally {
        Tally::default()
    }

    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.probes += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    /// Records a fallible instance; construction errors count as failures.
    pub fn record_res(&mut self, r: Result<bool>, witness: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.record(ok, witness),
            Err(e) => {
                let w = witness();
                self.record(false, || format!("{w}: {e}"));
            }
        }
    }

    pub fn probes(&self) -> u64 {
        self.probes
    }

    pub fn failed(&self) -> bool {
        self.witness.is_some()
    }

    pub fn finish(self) -> Verdict {
        Verdict { pass: self.witness.is_none(), probes: self.probes, witness: self.witness }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub key: String,
    pub pass: bool,
    pub probes: u64,
    pub detail: String,
    pub witness: Option<String>,
}

impl Check {
    pub fn new(key: impl Into<String>, detail: impl Into<String>, v: Verdict) -> Check {
        Check { key: key.into(), pass: v.pass, probes: v.probes, detail: detail.into(), witness: v.witness }
    }

    /// A check whose construction failed outright.
    pub fn from_result(key: impl Into<String>, detail: impl Into<String>, r: Result<Verdict>) -> Check {
        match r {
            Ok(v) => Check::new(key, detail, v),
            Err(e) => Check::new(key, detail, Verdict::fail(0, e.to_string())),
        }
    }

    /// A check asserting that `v` came out with an expected verdict.
    pub fn expect(key: impl Into<String>, detail: impl Into<String>, expected: bool, v: Verdict) -> Check {
        let pass = v.pass == expected;
        let witness = if pass {
            None
        } else {
            Some(v.witness.unwrap_or_else(|| format!("expected {expected}, got {}", v.pass)))
        };
        Check { key: key.into(), pass, probes: v.probes, detail: detail.into(), witness }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbeStats {
    pub unary: usize,
    pub pairs: usize,
    pub triples: usize,
    pub quads: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Section {
    pub model: String,
    pub probes: Option<ProbeStats>,
    pub checks: Vec<Check>,
}

impl Section {
    pub fn new(model: impl Into<String>) -> Section {
        Section { model: model.into(), probes: None, checks: Vec::new() }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Machine-readable report. Wall-clock time is deliberately kept out of the
/// structured form so identical runs serialize identically.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub schema: &'static str,
    pub suite: String,
    pub seed: u64,
    pub window: Option<i64>,
    pub depth: usize,
    pub sections: Vec<Section>,
    pub notes: Vec<String>,
    pub pass: bool,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, seed: u64, depth: usize) -> SuiteReport {
        SuiteReport {
            schema: SCHEMA_VERSION,
            suite: suite.into(),
            seed,
            window: None,
            depth,
            sections: Vec::new(),
            notes: Vec::new(),
            pass: true,
        }
    }

    pub fn add(&mut self, mut s: Section) {
        s.checks.sort_by(|a, b| a.key.cmp(&b.key));
        self.sections.push(s);
        self.pass = self.sections.iter().all(Section::pass);
    }

    pub fn merge(&mut self, o: SuiteReport) {
        for s in o.sections {
            self.add(s);
        }
        self.notes.extend(o.notes);
    }

    pub fn check_count(&self) -> usize {
        self.sections.iter().map(|s| s.checks.len()).sum()
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.sections.iter().flat_map(|s| s.checks.iter()).filter(|c| !c.pass).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    pub fn to_text(&self, elapsed: Option<std::time::Duration>) -> String {
        let mut out = String::new();
        out.push_str(&format!("suite {} (seed {}, depth {}", self.suite, self.seed, self.depth));
        if let Some(w) = self.window {
            out.push_str(&format!(", window [-{w},{w}]"));
        }
        out.push_str(")\n");
        for s in &self.sections {
            out.push_str(&format!("\n== {}", s.model));
            if let Some(p) = &s.probes {
                out.push_str(&format!(
                    "  [probes: {} unary, {} pair, {} triple, {} quad]",
                    p.unary, p.pairs, p.triples, p.quads
                ));
            }
            out.push('\n');
            for c in &s.checks {
                out.push_str(&format!(
                    "  {} {:<40} {:>7}  {}\n",
                    if c.pass { "PASS" } else { "FAIL" },
                    c.key,
                    c.probes,
                    c.detail
                ));
                if let Some(w) = &c.witness {
                    out.push_str(&format!("       witness: {w}\n"));
                }
            }
        }
        for n in &self.notes {
            out.push_str(&format!("\nnote: {n}"));
        }
        if !self.notes.is_empty() {
            out.push('\n');
        }
        out.push_str(&format!(
            "\n{}: {} checks, {} failed",
            if self.pass { "PASS" } else { "FAIL" },
            self.check_count(),
            self.failures().len()
        ));
        if let Some(d) = elapsed {
            out.push_str(&format!(" ({:.2}s)", d.as_secs_f64()));
        }
        out.push('\n');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tally_keeps_first_witness() {
        let mut t = Tally::new();
        t.record(true, || "a".into());
        t.record(false, || "b".into());
        t.record(false, || "c".into());
        let v = t.finish();
        assert!(!v.pass);
        assert_eq!(v.probes, 3);
        assert_eq!(v.witness.as_deref(), Some("b"));
    }

    #[test]
    fn report_pass_tracks_sections() {
        let mut r = SuiteReport::new("t", 1, 2);
        let mut s = Section::new("m");
        s.push(Check::new("z", "", Verdict::ok(1)));
        s.push(Check::new("a", "", Verdict::fail(1, "w")));
        r.add(s);
        assert!(!r.pass);
        assert_eq!(r.sections[0].checks[0].key, "a");
        assert_eq!(r.failures().len(), 1);
    }
}
