//! Scaling runs and the configurable check suite behind `ordex scaling` and
//! `ordex suite`.

use std::path::{Path, PathBuf};

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::audit::full_audit;
use crate::constructions::{
    family_from_c4_free, polarity_graph, random_valid_family, FamilySeedSpec,
};
use crate::edge_ordered::{brute_force_ex_unordered, c4_1243, ex_ordered_search, SearchBudget};
use crate::error::{Error, Result};
use crate::geo::{
    break_self_crossing_c4, enumerate_self_crossing_c4, random_geometric_graph, slope_reduction,
    verify_slope_claim, GeometricGraph,
};
use crate::io;
use crate::matrix::{
    brute_force_ex, connect_hypotheses, hat, random_avoider, s_t, verify_connect, ZeroOneMatrix,
};
use crate::orders::OrderFamily;

pub const SUITE_SCHEMA: &str = "ordex.suite/1";

/// Parses `"p"` or `"p/q"`.
pub fn parse_ratio(s: &str) -> Result<Ratio<u64>> {
    let bad = || {
        Error::Config(format!(
            "expected a positive ratio like 2 or 3/2, got {s:?}"
        ))
    };
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (
            p.trim().parse().map_err(|_| bad())?,
            q.trim().parse().map_err(|_| bad())?,
        ),
        None => (s.trim().parse().map_err(|_| bad())?, 1),
    };
    if q == 0 {
        return Err(bad());
    }
    Ok(Ratio::new(p, q))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalingRow {
    pub q: u64,
    /// Number of orders.
    pub n: usize,
    /// Number of symbols.
    pub universe: usize,
    pub total_weight: u64,
    /// `Σ|A^i| / n^{3/2}`, for display.
    pub ratio: f64,
    pub checks_passed: usize,
    pub checks_total: usize,
    pub audit_passed: bool,
}

/// One row per `q`: the polarity family's size, weight ratio and audit outcome.
pub fn scaling_rows(qs: &[u64], seed: u64) -> Result<Vec<ScalingRow>> {
    qs.iter()
        .map(|&q| {
            let p = polarity_graph(q)?;
            let family = family_from_c4_free(&p.graph, seed)?;
            let report = full_audit(&family, Ratio::from_integer(2));
            let passed = report
                .checks
                .iter()
                .filter(|c| c.status == crate::audit::CheckStatus::Pass)
                .count();
            Ok(ScalingRow {
                q,
                n: family.len(),
                universe: family.universe(),
                total_weight: family.total_weight(),
                ratio: (family.weight_ratio().approx() * 1e6).round() / 1e6,
                checks_passed: passed,
                checks_total: report.checks.len(),
                audit_passed: report.all_passed(),
            })
        })
        .collect()
}

/// Writes [`scaling_rows`] as CSV; the header comes from the field names.
pub fn run_scaling(qs: &[u64], seed: u64, out: &Path) -> Result<Vec<ScalingRow>> {
    let rows = scaling_rows(qs, seed)?;
    let file = std::fs::File::create(out).map_err(|source| Error::Io {
        path: out.to_path_buf(),
        source,
    })?;
    let mut w = csv::Writer::from_writer(file);
    for r in &rows {
        w.serialize(r)?;
    }
    w.flush().map_err(|source| Error::Io {
        path: out.to_path_buf(),
        source,
    })?;
    Ok(rows)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AuditSuite {
    /// Family files, relative to the config file.
    pub families: Vec<PathBuf>,
    pub random_count: usize,
    pub random: FamilyShape,
    pub polarity_qs: Vec<u64>,
    /// Regularity parameter for the informational final chain.
    pub k: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyShape {
    pub n: usize,
    pub universe: usize,
    pub min_len: usize,
    pub max_len: usize,
}

impl Default for AuditSuite {
    fn default() -> Self {
        AuditSuite {
            families: Vec::new(),
            random_count: 100,
            random: FamilyShape {
                n: 10,
                universe: 10,
                min_len: 1,
                max_len: 8,
            },
            polarity_qs: vec![5, 7],
            k: "2".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ConnectSuite {
    /// Pattern file; `S_2` when absent.
    pub pattern: Option<PathBuf>,
    /// Every square host up to this size is checked.
    pub exhaustive_n: usize,
    pub random_hosts: usize,
    pub random_n: usize,
    pub density: f64,
}

impl Default for ConnectSuite {
    fn default() -> Self {
        ConnectSuite {
            pattern: None,
            exhaustive_n: 3,
            random_hosts: 100,
            random_n: 6,
            density: 0.8,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GeoSuite {
    /// Drawing files, relative to the config file.
    pub drawings: Vec<PathBuf>,
    /// Random drawings, each thinned until no 4-cycle crosses itself.
    pub trials: usize,
    pub n: usize,
    pub edge_prob: f64,
    pub span: i64,
}

impl Default for GeoSuite {
    fn default() -> Self {
        GeoSuite {
            drawings: Vec::new(),
            trials: 50,
            n: 10,
            edge_prob: 0.6,
            span: 1000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExSearchSuite {
    /// Largest `n` for the edge-ordered search (at most 5 finishes quickly).
    pub ordered_max_n: usize,
    /// Largest `n` for the matrix search with the hat pattern.
    pub matrix_max_n: usize,
}

impl Default for ExSearchSuite {
    fn default() -> Self {
        ExSearchSuite {
            ordered_max_n: 5,
            matrix_max_n: 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub schema: String,
    pub seed: u64,
    /// Any of `audit`, `connect`, `exsearch`, `geo`.
    pub suites: Vec<String>,
    pub audit: AuditSuite,
    pub connect: ConnectSuite,
    pub geo: GeoSuite,
    pub exsearch: ExSearchSuite,
    /// Where `ordex suite` writes the JSON summary, relative to the config file.
    pub output: Option<PathBuf>,
    #[serde(skip)]
    pub base_dir: PathBuf,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            schema: SUITE_SCHEMA.into(),
            seed: 1,
            suites: SUITE_NAMES.iter().map(|s| s.to_string()).collect(),
            audit: AuditSuite::default(),
            connect: ConnectSuite::default(),
            geo: GeoSuite::default(),
            exsearch: ExSearchSuite::default(),
            output: None,
            base_dir: PathBuf::from("."),
        }
    }
}

pub const SUITE_NAMES: [&str; 4] = ["audit", "connect", "exsearch", "geo"];

impl ExperimentConfig {
    pub fn from_json(text: &str, base_dir: &Path) -> Result<Self> {
        let mut c: ExperimentConfig = serde_json::from_str(text)?;
        c.base_dir = base_dir.to_path_buf();
        c.check()?;
        Ok(c)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let base = path
            .parent()
            .map_or_else(|| PathBuf::from("."), Path::to_path_buf);
        Self::from_json(&io::read_text(path)?, &base)
    }

    pub fn check(&self) -> Result<()> {
        if self.schema != SUITE_SCHEMA {
            return Err(Error::Config(format!(
                "schema must be {SUITE_SCHEMA:?}, got {:?}",
                self.schema
            )));
        }
        if let Some(s) = self
            .suites
            .iter()
            .find(|s| !SUITE_NAMES.contains(&s.as_str()))
        {
            return Err(Error::Config(format!("unknown suite {s:?}")));
        }
        parse_ratio(&self.audit.k)?;
        if !(0.0..=1.0).contains(&self.connect.density)
            || !(0.0..=1.0).contains(&self.geo.edge_prob)
        {
            return Err(Error::Config("probabilities must lie in [0, 1]".into()));
        }
        Ok(())
    }

    pub fn resolve(&self, p: &Path) -> PathBuf {
        if p.is_absolute() {
            p.to_path_buf()
        } else {
            self.base_dir.join(p)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<SuiteCheck>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub schema: String,
    pub seed: u64,
    pub passed: bool,
    pub suites: Vec<SuiteResult>,
}

fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> SuiteCheck {
    SuiteCheck {
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

fn audit_one(name: String, family: &OrderFamily, k: Ratio<u64>) -> SuiteCheck {
    let r = full_audit(family, k);
    let failed: Vec<&str> = r
        .checks
        .iter()
        .filter(|c| c.status != crate::audit::CheckStatus::Pass)
        .map(|c| c.name.as_str())
        .collect();
    let detail = if failed.is_empty() {
        format!(
            "S = {}, M = {}, all {} checks pass",
            r.s_value,
            r.total_weight,
            r.checks.len()
        )
    } else {
        format!("not passing: {}", failed.join(", "))
    };
    check(name, failed.is_empty(), detail)
}

fn run_audit(c: &ExperimentConfig) -> Result<Vec<SuiteCheck>> {
    let a = &c.audit;
    let k = parse_ratio(&a.k)?;
    let mut out = Vec::new();
    for f in &a.families {
        let family = io::read_family(&c.resolve(f))?.to_linear()?;
        out.push(audit_one(format!("file {}", f.display()), &family, k));
    }
    let failures: Vec<u64> = (0..a.random_count as u64)
        .into_par_iter()
        .filter_map(|i| {
            let spec = FamilySeedSpec {
                n: a.random.n,
                universe: a.random.universe,
                min_len: a.random.min_len,
                max_len: a.random.max_len,
                seed: c.seed.wrapping_add(i),
            };
            let ok = random_valid_family(&spec)
                .map(|f| full_audit(&f, k).all_passed())
                .unwrap_or(false);
            (!ok).then_some(spec.seed)
        })
        .collect();
    if a.random_count > 0 {
        out.push(check(
            "random families",
            failures.is_empty(),
            format!("{} families, failing seeds {failures:?}", a.random_count),
        ));
    }
    for &q in &a.polarity_qs {
        let family = family_from_c4_free(&polarity_graph(q)?.graph, c.seed)?;
        out.push(audit_one(format!("polarity q={q}"), &family, k));
    }
    Ok(out)
}

fn all_matrices(n: usize) -> impl ParallelIterator<Item = ZeroOneMatrix> {
    (0u64..1 << (n * n)).into_par_iter().map(move |mask| {
        let mut m = ZeroOneMatrix::zeros(n, n);
        for k in 0..n * n {
            m.set(k / n, k % n, mask >> k & 1 == 1);
        }
        m
    })
}

fn run_connect(c: &ExperimentConfig) -> Result<Vec<SuiteCheck>> {
    let s = &c.connect;
    let pattern = match &s.pattern {
        Some(p) => io::read_matrix(&c.resolve(p))?,
        None => s_t(2)?,
    };
    let hyp = connect_hypotheses(&pattern);
    let detail = if hyp.passed() {
        "all three hold".to_string()
    } else {
        hyp.reasons.join("; ")
    };
    let mut out = vec![check("hypotheses", hyp.passed(), detail)];
    if !hyp.passed() {
        return Ok(out);
    }
    if s.exhaustive_n > 5 {
        return Err(Error::Config("connect.exhaustive_n is capped at 5".into()));
    }
    for n in 1..=s.exhaustive_n {
        let (avoiders, bad) = all_matrices(n)
            .map(|m| match verify_connect(&m, &pattern) {
                Ok(v) => ((!v.vacuous()) as u64, (!v.holds()) as u64),
                Err(_) => (0, 1),
            })
            .reduce(|| (0, 0), |x, y| (x.0 + y.0, x.1 + y.1));
        out.push(check(
            format!("all {n}x{n} hosts"),
            bad == 0,
            format!("{avoiders} avoiders, {bad} failures"),
        ));
    }
    let bad: Vec<u64> = (0..s.random_hosts as u64)
        .into_par_iter()
        .filter(|&i| {
            let seed = c.seed.wrapping_add(i);
            let m = random_avoider(s.random_n, s.random_n, &pattern, s.density, seed);
            !verify_connect(&m, &pattern)
                .map(|v| v.holds())
                .unwrap_or(false)
        })
        .map(|i| c.seed.wrapping_add(i))
        .collect();
    if s.random_hosts > 0 {
        out.push(check(
            format!("random {0}x{0} avoiders", s.random_n),
            bad.is_empty(),
            format!("{} hosts, failing seeds {bad:?}", s.random_hosts),
        ));
    }
    Ok(out)
}

/// Slope reduction of a drawing and the checks on its output.
fn geo_one(g: &GeometricGraph, seed: u64) -> Result<(bool, bool, usize)> {
    let crossing_free = enumerate_self_crossing_c4(g)?.is_empty();
    let r = slope_reduction(g, seed)?;
    let claim = verify_slope_claim(&r.graph, g)?;
    Ok((
        claim.holds(),
        crossing_free && claim.contains_c4_1243,
        claim.cycles,
    ))
}

fn run_geo(c: &ExperimentConfig) -> Result<Vec<SuiteCheck>> {
    let s = &c.geo;
    let mut out = Vec::new();
    for f in &s.drawings {
        let g = io::read_geometry(&c.resolve(f))?;
        let (holds, bad, cycles) = geo_one(&g, c.seed)?;
        out.push(check(
            format!("file {}", f.display()),
            holds && !bad,
            format!("{cycles} four-cycles after reduction"),
        ));
    }
    if s.trials > 0 {
        let outcomes = (0..s.trials as u64)
            .into_par_iter()
            .map(|i| {
                let seed = c.seed.wrapping_add(i);
                let raw = random_geometric_graph(s.n, s.edge_prob, s.span, seed)?;
                // The claim concerns non-crossing cycles, so it is checked on the raw drawing too.
                let (raw_holds, _, _) = geo_one(&raw, seed)?;
                let g = break_self_crossing_c4(&raw, seed)?;
                let (holds, bad, cycles) = geo_one(&g, seed)?;
                Ok((seed, raw_holds && holds && !bad, cycles))
            })
            .collect::<Result<Vec<_>>>()?;
        let failures: Vec<u64> = outcomes.iter().filter(|o| !o.1).map(|o| o.0).collect();
        let cycles: usize = outcomes.iter().map(|o| o.2).sum();
        out.push(check(
            "random drawings",
            failures.is_empty(),
            format!(
                "{} drawings, {cycles} reduced four-cycles, failing seeds {failures:?}",
                s.trials
            ),
        ));
    }
    Ok(out)
}

fn run_exsearch(c: &ExperimentConfig) -> Result<Vec<SuiteCheck>> {
    let s = &c.exsearch;
    let pattern = c4_1243();
    let mut out = Vec::new();
    let mut values = Vec::new();
    for n in 1..=s.ordered_max_n {
        let r = ex_ordered_search(n, &pattern, SearchBudget::unlimited())?;
        let plain = brute_force_ex_unordered(n, &pattern)?;
        out.push(check(
            format!("ex_<({n}, C4^1243) >= ex({n}, C4)"),
            r.value >= plain,
            format!("{} >= {plain}", r.value),
        ));
        values.push(r.value);
    }
    if values.len() >= 3 {
        out.push(check(
            "ex_<(3, C4^1243) = 3",
            values[2] == 3,
            format!("{}", values[2]),
        ));
    }
    out.push(check(
        "ex_< monotone",
        values.windows(2).all(|w| w[0] <= w[1]),
        format!("{values:?}"),
    ));
    let hat_values = (1..=s.matrix_max_n)
        .map(|n| brute_force_ex(n, &hat()))
        .collect::<Result<Vec<_>>>()?;
    out.push(check(
        "Ex(n, hat) monotone",
        hat_values.windows(2).all(|w| w[0] <= w[1]),
        format!("{hat_values:?}"),
    ));
    Ok(out)
}

/// Runs the selected suites (concurrently) and collects their checks, sorted
/// by suite name. A suite that errors is reported as failed.
pub fn run_suite(config: &ExperimentConfig) -> Result<SuiteSummary> {
    config.check()?;
    let mut names: Vec<&str> = config.suites.iter().map(String::as_str).collect();
    names.sort_unstable();
    names.dedup();
    let results: Vec<Result<SuiteResult>> = names
        .par_iter()
        .map(|&name| {
            let checks = match name {
                "audit" => run_audit(config),
                "connect" => run_connect(config),
                "geo" => run_geo(config),
                "exsearch" => run_exsearch(config),
                _ => unreachable!("names validated"),
            }?;
            Ok(SuiteResult {
                suite: name.into(),
                passed: checks.iter().all(|c| c.passed),
                checks,
            })
        })
        .collect();
    let suites = results.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(SuiteSummary {
        schema: SUITE_SCHEMA.into(),
        seed: config.seed,
        passed: suites.iter().all(|s| s.passed),
        suites,
    })
}
