//! Report model and batch engine behind the `ut-orbits` binary.
//!
//! One quotient produces one [`RunReport`]; batch campaigns append one
//! report per line to a JSONL results file, keyed by the ideal's threshold
//! sequence, and can resume by skipping ideals already present. After a
//! run the file is rewritten sorted by that key, so resuming a partial
//! file yields a byte-identical result to a fresh full run.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use ut_orbits::diagram::Diagram;
use ut_orbits::perm::associated_permutation;
use ut_orbits::poisson::{OracleConfig, PoissonError};
use ut_orbits::roots::{enumerate_regular_ideals, IdealError, RegularIdeal, Root};
use ut_orbits::verify::{conjecture_checks, oracle_check, parity_check, structural_checks};

pub const SCHEMA_VERSION: &str = "v1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT_ERROR: i32 = 2;
pub const EXIT_THEOREM_FAILURE: i32 = 3;
pub const EXIT_CONJECTURE_COUNTEREXAMPLE: i32 = 4;

/// Which check families to run.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Families {
    pub theorems: bool,
    pub oracle: bool,
    pub conjecture: bool,
}

impl Families {
    pub fn all() -> Families {
        Families { theorems: true, oracle: true, conjecture: true }
    }

    pub fn none_selected(&self) -> bool {
        !(self.theorems || self.oracle || self.conjecture)
    }
}

fn pair(r: Root) -> [usize; 2] {
    [r.row(), r.col()]
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct InputEcho {
    pub n: usize,
    pub ideal: Vec<[usize; 2]>,
    pub thresholds: Vec<usize>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct StatsReport {
    pub index: usize,
    pub dim: usize,
    pub max_orbit_dim: usize,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct StepReport {
    pub index: usize,
    pub cross: [usize; 2],
    pub plus: Vec<[usize; 2]>,
    pub minus: Vec<[usize; 2]>,
    pub remaining: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct DiagramReport {
    /// ASCII rows, row 1 first; the report charset is fixed so reports do
    /// not depend on the --ascii flag.
    pub grid: Vec<String>,
    pub steps: Vec<StepReport>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct PermutationReport {
    pub one_line: Vec<usize>,
    pub inversions: usize,
    pub reflection_word: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct CheckReport {
    pub name: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct WitnessReport {
    pub root: [usize; 2],
    pub bracket: String,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct FactorReport {
    pub by: [usize; 2],
    pub quotient: String,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct CandidateReport {
    pub xi: [usize; 2],
    pub case: u8,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub lambda_degree: usize,
    pub poly: String,
    pub invariant: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub factors: Vec<FactorReport>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct OracleSection {
    pub generic_rank: usize,
    pub index_estimate: usize,
    pub dim: usize,
    pub trials: u32,
    pub prime: u64,
    pub seed: u64,
    pub expected_rank: usize,
    pub expected_index: usize,
    pub matches: bool,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct JacobianSection {
    pub rank: usize,
    pub expected: usize,
    pub matches: bool,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct RunReport {
    pub v: String,
    pub input: InputEcho,
    pub stats: StatsReport,
    pub diagram: DiagramReport,
    pub permutation: PermutationReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<CheckReport>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub candidates: Option<Vec<CandidateReport>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jacobian: Option<JacobianSection>,
}

impl RunReport {
    pub fn theorem_failures(&self) -> usize {
        let checks = self.checks.iter().flatten().filter(|c| !c.pass).count();
        let oracle = usize::from(self.oracle.as_ref().is_some_and(|o| !o.matches));
        checks + oracle
    }

    pub fn conjecture_counterexamples(&self) -> usize {
        let bad_candidates = self
            .candidates
            .iter()
            .flatten()
            .filter(|c| !c.invariant || c.poly == "0")
            .count();
        let jacobian = usize::from(self.jacobian.as_ref().is_some_and(|j| !j.matches));
        bad_candidates + jacobian
    }
}

/// Exit code for a single report: theorem-family failures beat conjecture
/// counterexamples, so campaigns can tell falsification from bugs.
pub fn report_exit_code(report: &RunReport) -> i32 {
    if report.theorem_failures() > 0 {
        EXIT_THEOREM_FAILURE
    } else if report.conjecture_counterexamples() > 0 {
        EXIT_CONJECTURE_COUNTEREXAMPLE
    } else {
        EXIT_OK
    }
}

/// Runs the selected families on one quotient.
pub fn run_pipeline(
    ideal: &RegularIdeal,
    families: Families,
    cfg: &OracleConfig,
) -> Result<RunReport, PoissonError> {
    let diagram = Diagram::build(ideal);
    let stats = diagram.stats();
    let w = associated_permutation(ideal);

    let checks = families.theorems.then(|| {
        let mut list: Vec<CheckReport> = structural_checks(ideal)
            .into_iter()
            .map(|c| CheckReport { name: c.name.to_string(), pass: c.pass, detail: c.detail })
            .collect();
        let parity = parity_check(ideal);
        list.push(CheckReport {
            name: parity.name.to_string(),
            pass: parity.pass,
            detail: parity.detail,
        });
        list
    });

    let oracle = if families.oracle {
        let check = oracle_check(ideal, cfg)?;
        Some(OracleSection {
            generic_rank: check.report.generic_rank,
            index_estimate: check.report.index_estimate,
            dim: check.report.dim,
            trials: check.report.trials,
            prime: check.report.prime,
            seed: check.report.seed,
            expected_rank: check.expected_rank,
            expected_index: check.expected_index,
            matches: check.matches,
        })
    } else {
        None
    };

    let (candidates, jacobian) = if families.conjecture {
        let outcome = conjecture_checks(ideal, cfg)?;
        let candidates = outcome
            .verdicts
            .iter()
            .map(|v| CandidateReport {
                xi: pair(v.candidate.cross),
                case: match v.candidate.case {
                    ut_orbits::invariants::CaseTag::One => 1,
                    ut_orbits::invariants::CaseTag::Two => 2,
                },
                rows: v.candidate.rows.clone(),
                cols: v.candidate.cols.clone(),
                lambda_degree: v.candidate.lambda_degree,
                poly: v.candidate.highest_coefficient.to_string(),
                invariant: v.invariant,
                witness: v.witness.as_ref().map(|(root, bracket)| WitnessReport {
                    root: pair(*root),
                    bracket: bracket.to_string(),
                }),
                factors: v
                    .quotients
                    .iter()
                    .map(|(by, q)| FactorReport { by: pair(*by), quotient: q.to_string() })
                    .collect(),
            })
            .collect();
        let jacobian = JacobianSection {
            rank: outcome.jacobian_rank,
            expected: outcome.expected_rank,
            matches: outcome.jacobian_rank == outcome.expected_rank,
        };
        (Some(candidates), Some(jacobian))
    } else {
        (None, None)
    };

    Ok(RunReport {
        v: SCHEMA_VERSION.to_string(),
        input: InputEcho {
            n: ideal.n(),
            ideal: ideal.dead_roots().into_iter().map(pair).collect(),
            thresholds: ideal.thresholds().to_vec(),
        },
        stats: StatsReport {
            index: stats.index,
            dim: stats.dim,
            max_orbit_dim: stats.max_orbit_dim,
        },
        diagram: DiagramReport {
            grid: diagram.render(true).lines().map(str::to_string).collect(),
            steps: diagram
                .steps()
                .iter()
                .map(|s| StepReport {
                    index: s.index,
                    cross: pair(s.cross),
                    plus: s.plus_set.iter().copied().map(pair).collect(),
                    minus: s.minus_set.iter().copied().map(pair).collect(),
                    remaining: s.remaining.iter().copied().map(pair).collect(),
                })
                .collect(),
        },
        permutation: PermutationReport {
            one_line: w.one_line().to_vec(),
            inversions: w.inversions(),
            reflection_word: diagram.crosses().into_iter().map(pair).collect(),
        },
        checks,
        candidates,
        oracle,
        jacobian,
    })
}

/// One entry in the batch summary's counterexample list.
#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct CounterexampleReport {
    pub n: usize,
    pub ideal: Vec<[usize; 2]>,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub check: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi: Option<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_root: Option<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bracket_poly_string: Option<String>,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct BatchSummary {
    pub v: String,
    pub n: usize,
    pub ideals: usize,
    pub theorem_failures: usize,
    pub oracle_mismatches: usize,
    pub conjecture_counterexamples: usize,
    pub counterexamples: Vec<CounterexampleReport>,
}

pub fn summary_exit_code(summary: &BatchSummary) -> i32 {
    if summary.theorem_failures + summary.oracle_mismatches > 0 {
        EXIT_THEOREM_FAILURE
    } else if summary.conjecture_counterexamples > 0 {
        EXIT_CONJECTURE_COUNTEREXAMPLE
    } else {
        EXIT_OK
    }
}

fn collect_counterexamples(report: &RunReport, out: &mut Vec<CounterexampleReport>) {
    let seed = report.oracle.as_ref().map(|o| o.seed).unwrap_or_default();
    let base = |kind: &str| CounterexampleReport {
        n: report.input.n,
        ideal: report.input.ideal.clone(),
        kind: kind.to_string(),
        check: None,
        xi: None,
        witness_root: None,
        bracket_poly_string: None,
        seed,
        detail: None,
    };
    for check in report.checks.iter().flatten().filter(|c| !c.pass) {
        let mut c = base("theorem_check");
        c.check = Some(check.name.clone());
        c.detail = check.detail.clone();
        out.push(c);
    }
    if let Some(oracle) = report.oracle.as_ref().filter(|o| !o.matches) {
        let mut c = base("oracle_mismatch");
        c.detail = Some(format!(
            "rank {} vs {}, index {} vs {}",
            oracle.generic_rank, oracle.expected_rank, oracle.index_estimate, oracle.expected_index
        ));
        out.push(c);
    }
    for cand in report.candidates.iter().flatten() {
        if !cand.invariant {
            let mut c = base("not_invariant");
            c.xi = Some(cand.xi);
            c.witness_root = cand.witness.as_ref().map(|w| w.root);
            c.bracket_poly_string = cand.witness.as_ref().map(|w| w.bracket.clone());
            out.push(c);
        }
        if cand.poly == "0" {
            let mut c = base("degenerate_candidate");
            c.xi = Some(cand.xi);
            out.push(c);
        }
    }
    if let Some(j) = report.jacobian.as_ref().filter(|j| !j.matches) {
        let mut c = base("independence_deficit");
        c.detail = Some(format!("jacobian rank {} vs {}", j.rank, j.expected));
        out.push(c);
    }
}

pub fn summarize(n: usize, reports: &[RunReport]) -> BatchSummary {
    let mut counterexamples = Vec::new();
    let mut theorem_failures = 0;
    let mut oracle_mismatches = 0;
    let mut conjecture = 0;
    for report in reports {
        theorem_failures += report.checks.iter().flatten().filter(|c| !c.pass).count();
        oracle_mismatches += usize::from(report.oracle.as_ref().is_some_and(|o| !o.matches));
        conjecture += report.conjecture_counterexamples();
        collect_counterexamples(report, &mut counterexamples);
    }
    BatchSummary {
        v: SCHEMA_VERSION.to_string(),
        n,
        ideals: reports.len(),
        theorem_failures,
        oracle_mismatches,
        conjecture_counterexamples: conjecture,
        counterexamples,
    }
}

#[derive(Debug)]
pub enum BatchError {
    Io(std::io::Error),
    BadResumeLine { line: usize, message: String },
    ForeignReport { line: usize, expected_n: usize, got_n: usize },
    Pipeline(PoissonError),
}

impl fmt::Display for BatchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BatchError::Io(e) => write!(f, "i/o error: {e}"),
            BatchError::BadResumeLine { line, message } => {
                write!(f, "results file line {line} is not a report: {message}")
            }
            BatchError::ForeignReport { line, expected_n, got_n } => {
                write!(f, "results file line {line} has n = {got_n}, campaign has n = {expected_n}")
            }
            BatchError::Pipeline(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for BatchError {}

impl From<std::io::Error> for BatchError {
    fn from(e: std::io::Error) -> BatchError {
        BatchError::Io(e)
    }
}

impl From<PoissonError> for BatchError {
    fn from(e: PoissonError) -> BatchError {
        BatchError::Pipeline(e)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct BatchConfig {
    pub n: usize,
    pub families: Families,
    pub oracle: OracleConfig,
    /// Worker count; zero means the default pool size.
    pub jobs: usize,
}

/// Largest size batch accepts; the ideal count grows with the Catalan
/// numbers (16796 at size ten).
pub const MAX_BATCH_N: usize = 10;

fn compute_reports(
    cfg: &BatchConfig,
    todo: Vec<RegularIdeal>,
) -> Result<Vec<RunReport>, BatchError> {
    use rayon::prelude::*;
    let worker = |ideal: &RegularIdeal| run_pipeline(ideal, cfg.families, &cfg.oracle);
    let results: Vec<Result<RunReport, PoissonError>> = if cfg.jobs == 1 {
        todo.iter().map(worker).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .expect("worker pool");
        pool.install(|| todo.par_iter().map(worker).collect())
    };
    results.into_iter().map(|r| r.map_err(BatchError::from)).collect()
}

/// Runs a campaign against a JSONL results file. With `resume`, reports
/// already present are kept as-is and only missing ideals are computed.
/// The file ends up sorted by threshold key either way.
pub fn run_batch_to_file(
    cfg: &BatchConfig,
    path: &Path,
    resume: bool,
) -> Result<BatchSummary, BatchError> {
    let mut lines_by_key: BTreeMap<Vec<usize>, String> = BTreeMap::new();
    let mut reports_by_key: BTreeMap<Vec<usize>, RunReport> = BTreeMap::new();
    if resume && path.exists() {
        let existing = fs::read_to_string(path)?;
        for (idx, line) in existing.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let report: RunReport = serde_json::from_str(line)
                .map_err(|e| BatchError::BadResumeLine { line: idx + 1, message: e.to_string() })?;
            if report.input.n != cfg.n {
                return Err(BatchError::ForeignReport {
                    line: idx + 1,
                    expected_n: cfg.n,
                    got_n: report.input.n,
                });
            }
            let key = report.input.thresholds.clone();
            lines_by_key.insert(key.clone(), line.to_string());
            reports_by_key.insert(key, report);
        }
    }

    let todo: Vec<RegularIdeal> = enumerate_regular_ideals(cfg.n)
        .filter(|ideal| !lines_by_key.contains_key(ideal.thresholds()))
        .collect();
    for report in compute_reports(cfg, todo)? {
        let key = report.input.thresholds.clone();
        let line = serde_json::to_string(&report).expect("report serializes");
        lines_by_key.insert(key.clone(), line);
        reports_by_key.insert(key, report);
    }

    let mut file = fs::File::create(path)?;
    for line in lines_by_key.values() {
        writeln!(file, "{line}")?;
    }

    let reports: Vec<RunReport> = reports_by_key.into_values().collect();
    Ok(summarize(cfg.n, &reports))
}

/// Runs a campaign without persistence, returning the lines and summary.
pub fn run_batch_in_memory(cfg: &BatchConfig) -> Result<(Vec<String>, BatchSummary), BatchError> {
    let todo: Vec<RegularIdeal> = enumerate_regular_ideals(cfg.n).collect();
    let reports = compute_reports(cfg, todo)?;
    let lines = reports
        .iter()
        .map(|r| serde_json::to_string(r).expect("report serializes"))
        .collect();
    Ok((lines, summarize(cfg.n, &reports)))
}

/// Parses an inline ideal spec like `"5,1;6,1;7,1;7,2"`; empty means the
/// empty ideal.
pub fn parse_ideal_spec(spec: &str) -> Result<Vec<Root>, String> {
    let mut out = Vec::new();
    for part in spec.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let fields: Vec<&str> = part.split(',').map(str::trim).collect();
        if fields.len() != 2 {
            return Err(format!("bad root '{part}', expected 'row,col'"));
        }
        let row: usize = fields[0].parse().map_err(|_| format!("bad row in '{part}'"))?;
        let col: usize = fields[1].parse().map_err(|_| format!("bad column in '{part}'"))?;
        if row == col {
            return Err(format!("bad root '{part}', indices must differ"));
        }
        out.push(Root::new(row, col));
    }
    Ok(out)
}

/// JSON input schema for `run --input`.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct IdealInput {
    pub n: usize,
    #[serde(default)]
    pub ideal: Vec<[usize; 2]>,
}

impl IdealInput {
    pub fn roots(&self) -> Result<Vec<Root>, String> {
        self.ideal
            .iter()
            .map(|&[row, col]| {
                if row == col {
                    Err(format!("bad root [{row}, {col}], indices must differ"))
                } else {
                    Ok(Root::new(row, col))
                }
            })
            .collect()
    }
}

/// Builds the ideal, strictly by default or closing the seed when asked.
pub fn build_ideal(n: usize, roots: &[Root], closure: bool) -> Result<RegularIdeal, IdealError> {
    if closure {
        RegularIdeal::closure_of(n, roots)
    } else {
        RegularIdeal::from_roots(n, roots)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(row: usize, col: usize) -> Root {
        Root::new(row, col)
    }

    fn sample7() -> RegularIdeal {
        RegularIdeal::from_roots(7, &[r(5, 1), r(6, 1), r(7, 1), r(7, 2)]).unwrap()
    }

    #[test]
    fn report_round_trips_through_json() {
        let cfg = OracleConfig { seed: 3, ..OracleConfig::default() };
        let report = run_pipeline(&sample7(), Families::all(), &cfg).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        let back: RunReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn sample7_report_content() {
        let cfg = OracleConfig { seed: 3, ..OracleConfig::default() };
        let report = run_pipeline(&sample7(), Families::all(), &cfg).unwrap();
        assert_eq!(report.v, "v1");
        assert_eq!(report.stats.index, 5);
        assert_eq!(report.permutation.one_line, vec![4, 6, 7, 5, 3, 2, 1]);
        assert_eq!(report.permutation.inversions, 17);
        let cands = report.candidates.as_ref().unwrap();
        assert_eq!(cands.len(), 5);
        assert_eq!(cands[0].poly, "y41");
        assert_eq!(cands[3].factors.len(), 1);
        assert_eq!(cands[3].factors[0].by, [6, 2]);
        assert!(report.jacobian.as_ref().unwrap().matches);
        assert_eq!(report_exit_code(&report), EXIT_OK);
    }

    #[test]
    fn exit_codes_rank_theorems_over_conjecture() {
        let cfg = OracleConfig { seed: 3, ..OracleConfig::default() };
        let mut report = run_pipeline(&sample7(), Families::all(), &cfg).unwrap();
        assert_eq!(report_exit_code(&report), EXIT_OK);

        // fabricate a conjecture counterexample
        report.candidates.as_mut().unwrap()[0].invariant = false;
        assert_eq!(report_exit_code(&report), EXIT_CONJECTURE_COUNTEREXAMPLE);

        // a theorem failure dominates it
        report.checks.as_mut().unwrap()[0].pass = false;
        assert_eq!(report_exit_code(&report), EXIT_THEOREM_FAILURE);

        // degenerate candidates and jacobian deficits also count
        let mut degenerate = run_pipeline(&sample7(), Families::all(), &cfg).unwrap();
        degenerate.candidates.as_mut().unwrap()[1].poly = "0".to_string();
        assert_eq!(report_exit_code(&degenerate), EXIT_CONJECTURE_COUNTEREXAMPLE);
        let mut deficit = run_pipeline(&sample7(), Families::all(), &cfg).unwrap();
        deficit.jacobian.as_mut().unwrap().matches = false;
        assert_eq!(report_exit_code(&deficit), EXIT_CONJECTURE_COUNTEREXAMPLE);
    }

    #[test]
    fn summary_collects_fabricated_counterexamples() {
        let cfg = OracleConfig { seed: 3, ..OracleConfig::default() };
        let mut report = run_pipeline(&sample7(), Families::all(), &cfg).unwrap();
        report.candidates.as_mut().unwrap()[0].invariant = false;
        report.candidates.as_mut().unwrap()[0].witness =
            Some(WitnessReport { root: [3, 2], bracket: "y31".to_string() });
        let summary = summarize(7, &[report]);
        assert_eq!(summary.conjecture_counterexamples, 1);
        assert_eq!(summary.counterexamples.len(), 1);
        let ce = &summary.counterexamples[0];
        assert_eq!(ce.kind, "not_invariant");
        assert_eq!(ce.xi, Some([4, 1]));
        assert_eq!(ce.witness_root, Some([3, 2]));
        assert_eq!(ce.bracket_poly_string.as_deref(), Some("y31"));
        assert_eq!(summary_exit_code(&summary), EXIT_CONJECTURE_COUNTEREXAMPLE);
    }

    #[test]
    fn ideal_spec_parsing() {
        assert_eq!(
            parse_ideal_spec("5,1;6,1; 7,1 ;7,2"),
            Ok(vec![r(5, 1), r(6, 1), r(7, 1), r(7, 2)])
        );
        assert_eq!(parse_ideal_spec(""), Ok(vec![]));
        assert!(parse_ideal_spec("5").is_err());
        assert!(parse_ideal_spec("5,5").is_err());
        assert!(parse_ideal_spec("a,1").is_err());
    }

    #[test]
    fn families_default_detection() {
        let none = Families { theorems: false, oracle: false, conjecture: false };
        assert!(none.none_selected());
        assert!(!Families::all().none_selected());
    }
}
