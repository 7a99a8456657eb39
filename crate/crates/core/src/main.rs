use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use ordex::audit::full_audit;
use ordex::constructions::{
    family_from_c4_free, polarity_graph, random_valid_family, FamilySeedSpec,
};
use ordex::edge_ordered::{c4_1243, contains, ex_ordered_search, find_c4_fast, SearchBudget};
use ordex::experiment::{parse_ratio, run_scaling, run_suite, ExperimentConfig};
use ordex::geo::{
    enumerate_self_crossing_c4, shear_remove_vertical, slope_reduction, verify_slope_claim,
};
use ordex::io::{self, FamilyFile};
use ordex::matrix::{
    contains_pattern, ex_heuristic, ex_search, verify_connect, MATRIX_EX_EXACT_CAP,
};
use ordex::regularize::{build_incidence, extract_almost_regular, restrict_family};
use ordex::{Error, Result};

#[derive(Parser)]
#[command(
    name = "ordex",
    version,
    about = "Intersection-reverse sequences, edge-ordered graphs and zero-one matrix patterns"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Seed for every randomized step
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Print machine-readable JSON
    #[arg(long, global = true)]
    json: bool,
    /// Time budget in seconds for exhaustive searches
    #[arg(long, global = true)]
    time_budget: Option<f64>,
    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Check that no two orders share a same-order triple
    Validate { family: PathBuf },
    /// Compute S and run every proof check on a family
    Audit {
        family: PathBuf,
        /// Regularity parameter K for the final chain, e.g. 2 or 3/2
        #[arg(long, default_value = "2")]
        k: String,
    },
    /// Extract a K-almost-regular part of the incidence graph and restrict the family to it
    Regularize {
        family: PathBuf,
        #[arg(long, default_value = "2")]
        k: String,
        /// Write the restricted family here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Edge-ordered containment
    EoContains {
        #[arg(long)]
        host: PathBuf,
        /// Pattern file; C4^{1243} when omitted
        #[arg(long)]
        pattern: Option<PathBuf>,
        /// Use the sound but incomplete neighbour-order detector (C4^{1243} only)
        #[arg(long)]
        fast: bool,
    },
    /// Exact ex_<(n, H) for n <= 6
    EoEx {
        #[arg(long)]
        n: usize,
        /// Pattern file; C4^{1243} when omitted
        #[arg(long)]
        pattern: Option<PathBuf>,
    },
    /// Zero-one matrix containment
    MxContains {
        #[arg(long)]
        host: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
    },
    /// Ex(n, A): exact for n <= 5, n = 6 needs --time-budget; --heuristic gives a lower bound
    MxEx {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long, conflicts_with = "heuristic")]
        exact: bool,
        #[arg(long)]
        heuristic: bool,
        /// Restarts for the heuristic
        #[arg(long, default_value_t = 50)]
        restarts: usize,
    },
    /// Check that M avoiding A forces G(M) to avoid G(A)
    ConnectCheck {
        #[arg(long)]
        host: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
    },
    /// Self-crossing 4-cycles and the slope reduction on a drawing
    GeoCheck {
        file: PathBuf,
        #[arg(long, default_value_t = 20)]
        trials: u64,
        /// Shear the drawing first so no edge is vertical
        #[arg(long)]
        shear: bool,
    },
    /// Build a family
    Construct {
        #[command(subcommand)]
        kind: Construct,
    },
    /// Polarity families for several q: CSV of sizes, ratios and audit outcomes
    Scaling {
        /// Comma-separated primes
        #[arg(long, value_delimiter = ',', default_value = "5,7,11,13")]
        qs: Vec<u64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the check suites described by a config file
    Suite {
        #[arg(long)]
        config: PathBuf,
        /// Summary path; overrides the config's `output`
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Construct {
    /// Neighbourhoods of the polarity graph over Z_q
    Polarity {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Seeded random valid family from a JSON spec
    Random {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

fn emit<T: Serialize>(g: &Global, value: &T, text: impl FnOnce() -> String) {
    if g.json {
        println!(
            "{}",
            serde_json::to_string_pretty(value).expect("serializable")
        );
    } else {
        println!("{}", text());
    }
}

fn budget(g: &Global) -> SearchBudget {
    g.time_budget.map_or_else(SearchBudget::unlimited, |s| {
        SearchBudget::with_time(Duration::from_secs_f64(s))
    })
}

fn pattern_or_c4(p: &Option<PathBuf>) -> Result<ordex::edge_ordered::EdgeOrderedGraph> {
    p.as_deref()
        .map_or_else(|| Ok(c4_1243()), io::read_edge_ordered)
}

fn write_family(path: &Path, f: &FamilyFile) -> Result<()> {
    io::write_text(path, &(io::format_family(f) + "\n"))
}

/// Runs a command; `Ok(false)` means a check failed.
fn run(cli: Cli) -> Result<bool> {
    let g = &cli.global;
    match cli.command {
        Command::Validate { family } => {
            let f = io::read_family(&family)?.to_linear()?;
            let w = f.validate();
            emit(g, &json!({ "valid": w.is_empty(), "witnesses": w }), || {
                if w.is_empty() {
                    format!("valid: {} orders over {} symbols", f.len(), f.universe())
                } else {
                    let lines: Vec<String> = w.iter().map(|w| format!("  {w}")).collect();
                    format!("invalid: {} violating pairs\n{}", w.len(), lines.join("\n"))
                }
            });
            Ok(w.is_empty())
        }
        Command::Audit { family, k } => {
            let f = io::read_family(&family)?.to_linear()?;
            let r = full_audit(&f, parse_ratio(&k)?);
            emit(g, &r, || {
                let mut s = format!(
                    "n = {}, n' = {}, M = {}, S = {}, lower bound {}\n",
                    r.num_orders, r.universe, r.total_weight, r.s_value, r.lower_bound
                );
                for c in &r.checks {
                    s.push_str(&format!("  {:<28} {:?}  {}\n", c.name, c.status, c.detail));
                }
                s.trim_end().to_string()
            });
            Ok(r.all_passed())
        }
        Command::Regularize { family, k, out } => {
            let f = io::read_family(&family)?.to_linear()?;
            let (sub, report) = extract_almost_regular(&build_incidence(&f), parse_ratio(&k)?)?;
            let restricted = restrict_family(&f, &sub)?;
            if let Some(out) = out {
                write_family(&out, &FamilyFile::from_family(&restricted.family))?;
            }
            let valid_kept = !f.is_valid() || restricted.family.is_valid();
            emit(
                g,
                &json!({ "report": report, "orders": restricted.family.len(), "universe": restricted.family.universe() }),
                || {
                    format!(
                    "kept {} of {} incidences (degrees {}..{}, ratio {} for target {}), {} orders over {} symbols",
                    report.retained_edges,
                    report.total_edges,
                    report.min_degree,
                    report.max_degree,
                    report.k_achieved,
                    report.k_target,
                    restricted.family.len(),
                    restricted.family.universe()
                )
                },
            );
            Ok(valid_kept)
        }
        Command::EoContains {
            host,
            pattern,
            fast,
        } => {
            let h = io::read_edge_ordered(&host)?;
            let p = pattern_or_c4(&pattern)?;
            let e = if fast {
                if pattern.is_some() {
                    return Err(Error::Config("--fast only detects C4^{1243}".into()));
                }
                find_c4_fast(&h)
            } else {
                contains(&h, &p)
            };
            emit(
                g,
                &json!({ "contains": e.is_some(), "embedding": e }),
                || match &e {
                    Some(e) => format!("contains: vertex map {:?}", e.vertex_map),
                    None if fast => {
                        "no copy found by the fast detector (a copy may still exist)".into()
                    }
                    None => "avoids".into(),
                },
            );
            Ok(true)
        }
        Command::EoEx { n, pattern } => {
            let p = pattern_or_c4(&pattern)?;
            let r = ex_ordered_search(n, &p, budget(g))?;
            emit(g, &r, || {
                format!(
                    "ex_<({n}) {} {} ({} nodes); witness {:?}",
                    if r.exact { "=" } else { ">=" },
                    r.value,
                    r.nodes,
                    r.witness
                )
            });
            Ok(true)
        }
        Command::MxContains { host, pattern } => {
            let m = io::read_matrix(&host)?;
            let a = io::read_matrix(&pattern)?;
            let e = contains_pattern(&m, &a).map(|e| e.one_based());
            emit(
                g,
                &json!({ "contains": e.is_some(), "embedding": e }),
                || match &e {
                    Some(e) => format!("contains: rows {:?}, columns {:?}", e.row_idx, e.col_idx),
                    None => "avoids".into(),
                },
            );
            Ok(true)
        }
        Command::MxEx {
            n,
            pattern,
            exact: _,
            heuristic,
            restarts,
        } => {
            let a = io::read_matrix(&pattern)?;
            let r = if heuristic {
                ex_heuristic(n, &a, restarts, g.seed.unwrap_or(0))
            } else {
                if n > MATRIX_EX_EXACT_CAP && g.time_budget.is_none() {
                    return Err(Error::Config(format!(
                        "exact search beyond n = {MATRIX_EX_EXACT_CAP} needs --time-budget"
                    )));
                }
                ex_search(n, &a, budget(g))?
            };
            emit(g, &r, || {
                let rel = if r.exact { "=" } else { ">=" };
                format!("Ex({n}) {rel} {}\n{}", r.value, r.witness.join("\n"))
            });
            Ok(true)
        }
        Command::ConnectCheck { host, pattern } => {
            let m = io::read_matrix(&host)?;
            let a = io::read_matrix(&pattern)?;
            let v = verify_connect(&m, &a)?;
            emit(
                g,
                &json!({ "holds": v.holds(), "vacuous": v.vacuous(), "verdict": v }),
                || {
                    format!(
                        "{}: matrix {} the pattern, G(M) {} G(A)",
                        if v.holds() { "holds" } else { "FAILS" },
                        if v.matrix_contains {
                            "contains"
                        } else {
                            "avoids"
                        },
                        if v.graph_contains {
                            "contains"
                        } else {
                            "avoids"
                        }
                    )
                },
            );
            Ok(v.holds())
        }
        Command::GeoCheck {
            file,
            trials,
            shear,
        } => {
            let mut drawing = io::read_geometry(&file)?;
            if shear {
                drawing = shear_remove_vertical(&drawing)?.0;
            }
            let crossings = enumerate_self_crossing_c4(&drawing)?;
            let seed0 = g.seed.unwrap_or(0);
            let mut rows = Vec::new();
            let mut ok = true;
            for t in 0..trials {
                let seed = seed0.wrapping_add(t);
                let r = slope_reduction(&drawing, seed)?;
                let claim = verify_slope_claim(&r.graph, &drawing)?;
                let avoids_when_required = !crossings.is_empty() || !claim.contains_c4_1243;
                ok &= claim.holds() && avoids_when_required;
                rows.push(json!({
                    "seed": seed,
                    "kept_edges": r.kept.len(),
                    "cycles": claim.cycles,
                    "exempt": claim.exempt,
                    "violations": claim.violations,
                    "contains_c4_1243": claim.contains_c4_1243,
                }));
            }
            emit(
                g,
                &json!({ "self_crossing_c4": crossings, "trials": rows, "passed": ok }),
                || {
                    format!(
                        "{} self-crossing four-cycles; {trials} reductions from seed {seed0}: {}",
                        crossings.len(),
                        if ok { "slope claim holds" } else { "FAILED" }
                    )
                },
            );
            Ok(ok)
        }
        Command::Construct { kind } => {
            let seed = g.seed.unwrap_or(0);
            let (f, out) = match kind {
                Construct::Polarity { q, out } => {
                    (family_from_c4_free(&polarity_graph(q)?.graph, seed)?, out)
                }
                Construct::Random { spec, out } => {
                    let mut spec: FamilySeedSpec = serde_json::from_str(&io::read_text(&spec)?)?;
                    if let Some(s) = g.seed {
                        spec.seed = s;
                    }
                    (random_valid_family(&spec)?, out)
                }
            };
            write_family(&out, &FamilyFile::from_family(&f))?;
            emit(
                g,
                &json!({ "orders": f.len(), "universe": f.universe(), "total_weight": f.total_weight(), "out": out }),
                || {
                    format!(
                        "wrote {} orders over {} symbols (M = {}) to {}",
                        f.len(),
                        f.universe(),
                        f.total_weight(),
                        out.display()
                    )
                },
            );
            Ok(true)
        }
        Command::Scaling { qs, out } => {
            let rows = run_scaling(&qs, g.seed.unwrap_or(0), &out)?;
            emit(g, &rows, || {
                let lines: Vec<String> = rows
                    .iter()
                    .map(|r| {
                        format!(
                            "q={:<3} n={:<4} M={:<6} ratio={:.4} audit={}",
                            r.q, r.n, r.total_weight, r.ratio, r.audit_passed
                        )
                    })
                    .collect();
                lines.join("\n")
            });
            Ok(rows.iter().all(|r| r.audit_passed))
        }
        Command::Suite { config, out } => {
            let mut c = ExperimentConfig::load(&config)?;
            if let Some(s) = g.seed {
                c.seed = s;
            }
            let summary = run_suite(&c)?;
            let body = serde_json::to_string_pretty(&summary)?;
            if let Some(path) = out.or_else(|| c.output.as_ref().map(|p| c.resolve(p))) {
                io::write_text(&path, &(body.clone() + "\n"))?;
            }
            emit(g, &summary, || {
                let mut s = String::new();
                for r in &summary.suites {
                    s.push_str(&format!(
                        "{} {}\n",
                        if r.passed { "PASS" } else { "FAIL" },
                        r.suite
                    ));
                    for c in &r.checks {
                        s.push_str(&format!(
                            "  {} {}: {}\n",
                            if c.passed { "ok  " } else { "FAIL" },
                            c.name,
                            c.detail
                        ));
                    }
                }
                s.trim_end().to_string()
            });
            Ok(summary.passed)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
