//! Grid sweeps for `gnarayana verify`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use narayana_core::narayana::{chu_vandermonde_check, recurrence_residual, verify_recurrence};
use narayana_core::theorems::{
    root_census, sign_samples, theorem31_bounds, verify_bounds, verify_interlacing, verify_monotonicity,
    verify_proposition, verify_sign_lemma,
};
use narayana_core::{Check, FamilyIndex, Rational, TheoremError, Verdict};
use rayon::prelude::*;
use serde::Serialize;

use crate::render::VerdictJson;
use crate::{CliError, Format};

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub m_min: u32,
    pub m_max: u32,
    /// `K`: per `m`, `n` runs up to `m+K` within each check's regime.
    pub n_offset_max: u32,
    pub bits: u32,
    pub checks: Vec<Check>,
    pub format: Format,
    pub output_path: Option<std::path::PathBuf>,
    pub parallelism: usize,
    /// Optional target for the last upper bound in the proposition check.
    pub epsilon: Option<Rational>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            m_min: 0,
            m_max: 10,
            n_offset_max: 20,
            bits: 64,
            checks: Check::ALL.to_vec(),
            format: Format::Text,
            output_path: None,
            parallelism: 1,
            epsilon: None,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        let bad = |s: &str| Err(CliError::Usage(s.to_string()));
        if self.m_min > self.m_max {
            return bad("--m-min must not exceed --m-max");
        }
        if self.n_offset_max < 1 {
            return bad("--n-offset-max must be at least 1");
        }
        if self.bits < 1 {
            return bad("--bits must be at least 1");
        }
        if self.checks.is_empty() {
            return bad("--checks must name at least one check");
        }
        if self.parallelism < 1 {
            return bad("--parallelism must be at least 1");
        }
        if self.epsilon.as_ref().is_some_and(|e| *e <= Rational::from_integer(0.into())) {
            return bad("--epsilon must be positive");
        }
        Ok(())
    }

    fn selected(&self) -> Vec<Check> {
        let mut checks = self.checks.clone();
        checks.sort();
        checks.dedup();
        checks
    }

    /// Grid cells `(m, n, check)` in emission order.
    pub fn cells(&self) -> Vec<(u32, u32, Check)> {
        let k = self.n_offset_max;
        let mut cells = Vec::new();
        for m in self.m_min..=self.m_max {
            for check in self.selected() {
                let ns: Vec<u32> = match check {
                    Check::Recurrence => (1..=m + k).collect(),
                    Check::Chu => vec![m + 2],
                    Check::Census | Check::Signs | Check::Interlace => (m + 2..=m + k).collect(),
                    Check::Bounds | Check::Monotonic => (m + 3..=m + k).collect(),
                    Check::Proposition if k >= 3 => vec![m + k],
                    Check::Proposition => Vec::new(),
                };
                cells.extend(ns.into_iter().map(|n| (m, n, check)));
            }
        }
        cells.sort();
        cells
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellRecord {
    pub m: u32,
    pub n: u32,
    pub check: Check,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub undecided: usize,
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub records: Vec<CellRecord>,
}

impl SweepReport {
    pub fn tallies(&self) -> BTreeMap<Check, Tally> {
        let mut out: BTreeMap<Check, Tally> =
            self.config.selected().into_iter().map(|c| (c, Tally::default())).collect();
        for r in &self.records {
            let t = out.entry(r.check).or_default();
            match r.verdict {
                Verdict::Pass(_) => t.pass += 1,
                Verdict::Fail(_) => t.fail += 1,
                Verdict::Undecided(_) => t.undecided += 1,
            }
        }
        out
    }

    pub fn all_pass(&self) -> bool {
        self.records.iter().all(|r| r.verdict.is_pass())
    }

    pub fn exit_code(&self) -> u8 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Text => Ok(self.render_text()),
            Format::Json => {
                let doc = ReportJson {
                    config: ConfigJson {
                        m_min: self.config.m_min,
                        m_max: self.config.m_max,
                        n_offset_max: self.config.n_offset_max,
                        bits: self.config.bits,
                        checks: self.config.selected().iter().map(|c| c.as_str()).collect(),
                        epsilon: self.config.epsilon.as_ref().map(crate::render::pair),
                    },
                    summary: self.tallies().into_iter().map(|(c, t)| (c.as_str(), t)).collect(),
                    all_pass: self.all_pass(),
                    records: self
                        .records
                        .iter()
                        .map(|r| RecordJson { m: r.m, n: r.n, check: r.check.as_str(), result: (&r.verdict).into() })
                        .collect(),
                };
                Ok(serde_json::to_string_pretty(&doc)? + "\n")
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["m", "n", "check", "verdict", "detail"])?;
                for r in &self.records {
                    w.write_record([
                        r.m.to_string(),
                        r.n.to_string(),
                        r.check.as_str().to_string(),
                        r.verdict.label().to_string(),
                        r.verdict.detail().to_string(),
                    ])?;
                }
                let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
                Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
            }
        }
    }

    /// Per-check counts followed by the witness of every non-passing cell.
    pub fn summary_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "{:<12} {:>6} {:>6} {:>10}", "check", "pass", "fail", "undecided").unwrap();
        for (c, t) in self.tallies() {
            writeln!(s, "{:<12} {:>6} {:>6} {:>10}", c.as_str(), t.pass, t.fail, t.undecided).unwrap();
        }
        for r in self.records.iter().filter(|r| !r.verdict.is_pass()) {
            writeln!(s, "{} n={} m={} {}: {}", r.verdict.label(), r.n, r.m, r.check, r.verdict.detail()).unwrap();
        }
        s
    }

    fn render_text(&self) -> String {
        let c = &self.config;
        let mut s = format!(
            "sweep m = {}..={}, n up to m+{}, bits = {}, {} cells\n",
            c.m_min,
            c.m_max,
            c.n_offset_max,
            c.bits,
            self.records.len()
        );
        s.push_str(&self.summary_text());
        s.push_str(if self.all_pass() { "result: all pass\n" } else { "result: FAILED\n" });
        s
    }
}

#[derive(Serialize)]
struct ConfigJson {
    m_min: u32,
    m_max: u32,
    n_offset_max: u32,
    bits: u32,
    checks: Vec<&'static str>,
    epsilon: Option<crate::render::RationalPair>,
}

#[derive(Serialize)]
struct RecordJson {
    m: u32,
    n: u32,
    check: &'static str,
    #[serde(flatten)]
    result: VerdictJson,
}

#[derive(Serialize)]
struct ReportJson {
    config: ConfigJson,
    summary: BTreeMap<&'static str, Tally>,
    all_pass: bool,
    records: Vec<RecordJson>,
}

/// Evaluates a single grid cell. Errors that are findings become `Fail`;
/// any other error inside a valid regime is also reported as `Fail` so the
/// sweep never silently drops a cell.
pub fn run_cell(m: u32, n: u32, check: Check, config: &SweepConfig) -> Verdict {
    let idx = FamilyIndex::new(n, m);
    let bits = config.bits;
    let result: Result<Verdict, TheoremError> = match check {
        Check::Recurrence => match verify_recurrence(idx) {
            Ok(true) => Ok(Verdict::Pass("residual is the zero polynomial".into())),
            Ok(false) => recurrence_residual(idx).map(|r| Verdict::Fail(format!("residual {r}"))).map_err(Into::into),
            Err(e) => Err(e.into()),
        },
        Check::Chu => Ok(if chu_vandermonde_check(m) {
            Verdict::Pass(format!("N_{{{n},{m}}}(1) = 0"))
        } else {
            Verdict::Fail(format!("N_{{{n},{m}}}(1) != 0"))
        }),
        Check::Census => root_census(idx),
        Check::Signs => {
            let bracket = if idx.at_least(3) { theorem31_bounds(idx).ok() } else { None };
            verify_sign_lemma(idx, &sign_samples(bracket.as_ref()), bits)
        }
        Check::Interlace => verify_interlacing(idx, bits),
        Check::Bounds => verify_bounds(idx).map(|w| w.verdict()),
        Check::Monotonic => verify_monotonicity(m, n, bits).map(|r| r.verdict()),
        Check::Proposition => verify_proposition(m, n, config.epsilon.as_ref(), bits),
    };
    match Verdict::from_result(result) {
        Ok(v) => v,
        Err(e) => Verdict::Fail(format!("error: {e}")),
    }
}

pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport, CliError> {
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.parallelism)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?;
    let cells = config.cells();
    let mut records: Vec<CellRecord> = pool.install(|| {
        cells
            .par_iter()
            .map(|&(m, n, check)| CellRecord { m, n, check, verdict: run_cell(m, n, check, config) })
            .collect()
    });
    records.sort_by_key(|r| (r.m, r.n, r.check));
    Ok(SweepReport { config: config.clone(), records })
}
