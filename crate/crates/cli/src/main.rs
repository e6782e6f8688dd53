//! `ekrlab` — batch front door over the intersecting-family toolkit.
//!
//! Reports are JSON objects with sorted keys (CSV for sweeps); exact counts
//! are serialized as decimal strings so no precision is ever lost, floats
//! carry 15 significant digits, and every run echoes its resolved
//! configuration.  Exit codes: 0 success, 2 validation error, 3 budget
//! exhausted.

use clap::{Args, Parser, Subcommand, ValueEnum};
use ekrlab_core::bounds;
use ekrlab_core::budget::Budget;
use ekrlab_core::combinatorics::BigCount;
use ekrlab_core::enumeration::{
    count_polynomial, count_total, count_trivial, enumerate_maximal, extremal_report,
    ConflictGraph,
};
use ekrlab_core::error::Error;
use ekrlab_core::intersection::{minimal_generating_set, Ground};
use ekrlab_core::setting::{Family, Setting};
use ekrlab_core::{random, spectral};
use serde_json::{json, Map, Value};

#[derive(Parser)]
#[command(name = "ekrlab", version, about = "Exact computations for intersecting families")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SettingKind {
    Hypergraph,
    Permutation,
    Subspace,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct SettingArgs {
    /// Which setting the ground objects live in.
    #[arg(long, value_enum)]
    setting: SettingKind,
    /// Ground size parameter (vertices / permutation length / dimension).
    #[arg(long)]
    n: u32,
    /// Uniformity / subspace dimension (hypergraph and subspace settings).
    #[arg(long)]
    k: Option<u32>,
    /// Agreement threshold.
    #[arg(long, default_value_t = 1)]
    t: u32,
    /// Field size (subspace setting; prime in {2,3,5}).
    #[arg(long)]
    q: Option<u32>,
}

impl SettingArgs {
    fn to_setting(&self) -> Result<Setting, Error> {
        match self.setting {
            SettingKind::Hypergraph => {
                let k = self
                    .k
                    .ok_or_else(|| Error::InvalidParameter("--k is required for hypergraphs".into()))?;
                Setting::hypergraph(self.n, k, self.t)
            }
            SettingKind::Permutation => Setting::permutation(self.n, self.t),
            SettingKind::Subspace => {
                let k = self
                    .k
                    .ok_or_else(|| Error::InvalidParameter("--k is required for subspaces".into()))?;
                let q = self
                    .q
                    .ok_or_else(|| Error::InvalidParameter("--q is required for subspaces".into()))?;
                if self.t != 1 {
                    return Err(Error::InvalidParameter(
                        "the subspace setting supports t = 1 only".into(),
                    ));
                }
                Setting::subspace(self.n, k, q)
            }
        }
    }
}

#[derive(Args)]
struct RunArgs {
    /// Output format (sweep supports csv; everything else is json).
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Worker threads for parallel sections.
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Per-run time budget in milliseconds
    /// (flag > EKRLAB_BUDGET_MS env > default 60000).
    #[arg(long)]
    budget_ms: Option<u64>,
    /// Optional search-node cap.
    #[arg(long)]
    budget_nodes: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Exact number of intersecting families (optionally by size).
    Count {
        #[command(flatten)]
        setting: SettingArgs,
        /// Also report the full by-size coefficient list.
        #[arg(long)]
        by_size: bool,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Enumerate all maximal intersecting families.
    Maximal {
        #[command(flatten)]
        setting: SettingArgs,
        /// Skip the per-family minimal generating-set audit.
        #[arg(long)]
        skip_gensets: bool,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Exact maximum and maximum non-trivial family sizes.
    Extremal {
        #[command(flatten)]
        setting: SettingArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Exact number of trivial families plus the Bonferroni window.
    TrivialCount {
        #[command(flatten)]
        setting: SettingArgs,
        /// Also compute the exact total so the non-trivial count appears.
        #[arg(long)]
        with_total: bool,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Kneser graph spectrum: closed form and numeric cross-check.
    Spectral {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Graph containers for KG(n,k) and the log-count bound.
    Containers {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        epsilon: f64,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Closed-form bound report for a setting.
    Bounds {
        #[command(flatten)]
        setting: SettingArgs,
        /// Probability at which to evaluate threshold-dependent terms.
        #[arg(long)]
        p: Option<f64>,
        /// Family size at which to evaluate the fixed-size condition.
        #[arg(long)]
        m: Option<f64>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Monte Carlo: largest intersecting subfamily of p-random samples.
    Random {
        #[command(flatten)]
        setting: SettingArgs,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Monte Carlo sweep over a probability grid (CSV by default).
    Sweep {
        #[command(flatten)]
        setting: SettingArgs,
        /// Comma-separated probability grid, e.g. 0.1,0.3,1.0
        #[arg(long, value_delimiter = ',')]
        p_grid: Vec<f64>,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        run: RunArgs,
    },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvalidParameter(_) => 2,
                Error::BudgetExceeded(_) => 3,
            }
        }
    });
}

fn make_budget(run: &RunArgs) -> Budget {
    let default_ms = std::env::var("EKRLAB_BUDGET_MS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(60_000);
    Budget::new(Some(run.budget_ms.unwrap_or(default_ms)), run.budget_nodes)
}

fn init_threads(run: &RunArgs) -> Result<(), Error> {
    if run.threads == 0 {
        return Err(Error::InvalidParameter("--threads must be at least 1".into()));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(run.threads)
        .build_global()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    Ok(())
}

fn require_json(run: &RunArgs) -> Result<(), Error> {
    if run.format == Format::Csv {
        return Err(Error::InvalidParameter(
            "csv output is only available for sweep".into(),
        ));
    }
    Ok(())
}

/// Round to 15 significant digits so serialized floats are stable.
fn float(x: f64) -> Value {
    if !x.is_finite() {
        return Value::String(format!("{x}"));
    }
    let rounded: f64 = format!("{x:.14e}").parse().unwrap();
    serde_json::Number::from_f64(rounded).map_or(Value::Null, Value::Number)
}

/// Exact integers travel as decimal strings, never as JSON numbers.
fn big(x: &BigCount) -> Value {
    Value::String(x.to_string())
}

fn config_value(setting: Option<&SettingArgs>, run: &RunArgs, extra: &[(&str, Value)]) -> Value {
    let mut m = Map::new();
    if let Some(s) = setting {
        m.insert(
            "setting".into(),
            Value::String(
                match s.setting {
                    SettingKind::Hypergraph => "hypergraph",
                    SettingKind::Permutation => "permutation",
                    SettingKind::Subspace => "subspace",
                }
                .into(),
            ),
        );
        m.insert("n".into(), json!(s.n));
        if let Some(k) = s.k {
            m.insert("k".into(), json!(k));
        }
        m.insert("t".into(), json!(s.t));
        if let Some(q) = s.q {
            m.insert("q".into(), json!(q));
        }
    }
    m.insert(
        "format".into(),
        Value::String(if run.format == Format::Json { "json" } else { "csv" }.into()),
    );
    m.insert("threads".into(), json!(run.threads));
    if let Some(ms) = run.budget_ms {
        m.insert("budget_ms".into(), json!(ms));
    }
    if let Some(nc) = run.budget_nodes {
        m.insert("budget_nodes".into(), json!(nc));
    }
    for (k, v) in extra {
        m.insert((*k).into(), v.clone());
    }
    Value::Object(m)
}

fn emit(mut payload: Map<String, Value>, command: &str, config: Value) {
    payload.insert("command".into(), Value::String(command.into()));
    payload.insert("config".into(), config);
    println!("{}", serde_json::to_string_pretty(&Value::Object(payload)).unwrap());
}

fn dispatch(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Count { setting, by_size, run } => {
            require_json(&run)?;
            init_threads(&run)?;
            let budget = make_budget(&run);
            let s = setting.to_setting()?;
            let ground = Ground::new(s)?;
            let cg = ConflictGraph::build(&ground, &budget)?;
            let mut payload = Map::new();
            payload.insert("ground_size".into(), big(&s.ground_size()?));
            payload.insert("provenance".into(), json!("enumeration"));
            if by_size {
                let poly = count_polynomial(&cg, None, &budget)?;
                payload.insert("total".into(), big(&poly.total()));
                payload.insert("max_family_size".into(), json!(poly.degree()));
                payload.insert(
                    "by_size".into(),
                    Value::Array(poly.coefficients.iter().map(big).collect()),
                );
            } else {
                payload.insert("total".into(), big(&count_total(&cg, None, &budget)?));
            }
            emit(payload, "count", config_value(Some(&setting), &run, &[("by_size", json!(by_size))]));
            Ok(())
        }
        Command::Maximal { setting, skip_gensets, run } => {
            require_json(&run)?;
            init_threads(&run)?;
            let budget = make_budget(&run);
            let s = setting.to_setting()?;
            let ground = Ground::new(s)?;
            let cg = ConflictGraph::build(&ground, &budget)?;
            let maximal = enumerate_maximal(&cg, None, &budget)?;
            let mut histogram: std::collections::BTreeMap<usize, u64> = Default::default();
            for m in &maximal {
                *histogram.entry(m.count()).or_default() += 1;
            }
            let mut payload = Map::new();
            payload.insert("count".into(), json!(maximal.len()));
            payload.insert(
                "size_histogram".into(),
                Value::Object(
                    histogram
                        .into_iter()
                        .map(|(k, v)| (k.to_string(), json!(v)))
                        .collect(),
                ),
            );
            if !skip_gensets {
                let bound = generating_set_bound(&s);
                let mut worst = 0usize;
                for m in &maximal {
                    budget.tick("generating-set audit")?;
                    let fam = Family { setting: s, members: m.clone() };
                    let gs = minimal_generating_set(&ground, &fam)?;
                    worst = worst.max(gs.len());
                }
                payload.insert("generating_set_max".into(), json!(worst));
                payload.insert("generating_set_bound".into(), big(&bound));
                payload.insert(
                    "generating_set_bound_respected".into(),
                    json!(BigCount::from(worst as u64) <= bound),
                );
            }
            payload.insert("provenance".into(), json!("enumeration"));
            emit(payload, "maximal", config_value(Some(&setting), &run, &[]));
            Ok(())
        }
        Command::Extremal { setting, run } => {
            require_json(&run)?;
            init_threads(&run)?;
            let budget = make_budget(&run);
            let s = setting.to_setting()?;
            let ground = Ground::new(s)?;
            let cg = ConflictGraph::build(&ground, &budget)?;
            let rep = extremal_report(&ground, &cg, None, &budget)?;
            let mut payload = Map::new();
            payload.insert("max".into(), json!(rep.max_size));
            payload.insert("max_trivial".into(), json!(rep.max_trivial_size));
            payload.insert(
                "max_nontrivial".into(),
                rep.max_nontrivial_size.map_or(Value::Null, |v| json!(v)),
            );
            payload.insert("every_max_trivial".into(), json!(rep.every_max_trivial));
            payload.insert("witness_size".into(), json!(rep.witness_max.count()));
            payload.insert("provenance".into(), json!("enumeration"));
            emit(payload, "extremal", config_value(Some(&setting), &run, &[]));
            Ok(())
        }
        Command::TrivialCount { setting, with_total, run } => {
            require_json(&run)?;
            init_threads(&run)?;
            let budget = make_budget(&run);
            let s = setting.to_setting()?;
            let trivial = count_trivial(s)?;
            let report = bounds_for(&s)?;
            let (lo, hi) = bounds::bonferroni_window(&report.t_count, &report.n0, &report.n2)?;
            let mut payload = Map::new();
            payload.insert("trivial".into(), big(&trivial));
            payload.insert("bonferroni_lower".into(), big(&lo));
            payload.insert("bonferroni_upper".into(), big(&hi));
            payload.insert(
                "window_contains_trivial".into(),
                json!(lo <= trivial && trivial <= hi),
            );
            payload.insert("provenance".into(), json!("formula"));
            if with_total {
                let ground = Ground::new(s)?;
                let cg = ConflictGraph::build(&ground, &budget)?;
                let total = count_total(&cg, None, &budget)?;
                payload.insert("nontrivial".into(), big(&(&total - &trivial)));
                payload.insert("total".into(), big(&total));
                payload.insert("provenance".into(), json!("formula+enumeration"));
            }
            emit(
                payload,
                "trivial-count",
                config_value(Some(&setting), &run, &[("with_total", json!(with_total))]),
            );
            Ok(())
        }
        Command::Spectral { n, k, run } => {
            require_json(&run)?;
            init_threads(&run)?;
            let budget = make_budget(&run);
            let r = spectral::spectral_report(n, k, &budget)?;
            let tol = 1e-9 * 1f64.max(r.lambda_min_closed.unsigned_abs() as f64);
            let mut payload = Map::new();
            payload.insert("n_vertices".into(), json!(r.n_vertices));
            payload.insert("degree".into(), json!(r.degree));
            payload.insert("lambda_min_closed".into(), json!(r.lambda_min_closed));
            payload.insert("lambda_min_numeric".into(), float(r.lambda_min_numeric));
            payload.insert(
                "within_tolerance".into(),
                json!((r.lambda_min_numeric - r.lambda_min_closed as f64).abs() <= tol),
            );
            let config = config_value(None, &run, &[("n", json!(n)), ("k", json!(k))]);
            emit(payload, "spectral", config);
            Ok(())
        }
        Command::Containers { n, k, epsilon, run } => {
            require_json(&run)?;
            init_threads(&run)?;
            let budget = make_budget(&run);
            let set = spectral::build_containers(n, k, epsilon, &budget)?;
            let cg = spectral::kneser_graph(n, k, &budget)?;
            let maximal = enumerate_maximal(&cg, None, &budget)?;
            let covered = maximal.iter().all(|m| set.covers(m));
            let limit = set.params.big_r + set.params.ell;
            let mut payload = Map::new();
            payload.insert("epsilon".into(), float(set.params.epsilon));
            payload.insert("r".into(), float(set.params.big_r));
            payload.insert("beta".into(), float(set.params.beta));
            payload.insert("ell".into(), float(set.params.ell));
            payload.insert(
                "epsilon_above_proof_cap".into(),
                json!(set.params.epsilon_above_proof_cap),
            );
            payload.insert("fingerprint_size_cap".into(), json!(set.fingerprint_size_cap));
            payload.insert("num_containers".into(), json!(set.containers.len()));
            payload.insert("max_container_size".into(), json!(set.max_container_size()));
            payload.insert("size_cap".into(), float(limit));
            payload.insert(
                "size_cap_respected".into(),
                json!((set.max_container_size() as f64) <= limit),
            );
            payload.insert("coverage_verified".into(), json!(covered));
            payload.insert("log_count_upper".into(), float(spectral::log_count_upper(n, k, epsilon)?));
            payload.insert("log_count_lower".into(), float(spectral::log_count_lower(n, k)));
            let config = config_value(
                None,
                &run,
                &[("n", json!(n)), ("k", json!(k)), ("epsilon", float(epsilon))],
            );
            emit(payload, "containers", config);
            Ok(())
        }
        Command::Bounds { setting, p, m, run } => {
            require_json(&run)?;
            init_threads(&run)?;
            let s = setting.to_setting()?;
            let report = bounds_for(&s)?;
            let mut payload = Map::new();
            payload.insert("n0".into(), big(&report.n0));
            payload.insert("n2".into(), big(&report.n2));
            payload.insert("t_count".into(), big(&report.t_count));
            payload.insert(
                "n1_exact".into(),
                report.n1_exact.as_ref().map_or(Value::Null, big),
            );
            payload.insert(
                "n1_upper".into(),
                report.n1_upper.map_or(Value::Null, float),
            );
            payload.insert(
                "n1_asymptotic_reference".into(),
                report.n1_asymptotic.map_or(Value::Null, float),
            );
            payload.insert("log_m_upper".into(), float(report.log_m_upper));
            payload.insert("eta".into(), report.eta.map_or(Value::Null, float));
            payload.insert(
                "ekr_threshold".into(),
                report.ekr_threshold.map_or(Value::Null, |v| json!(v)),
            );
            payload.insert(
                "cond_allsizes".into(),
                report.cond_allsizes.map_or(Value::Null, float),
            );
            payload.insert(
                "cond_allsizes_asymptotic".into(),
                json!(report.cond_allsizes_asymptotic),
            );
            payload.insert("cond_union".into(), float(report.cond_union));
            payload.insert("h1_size".into(), report.h1_size.as_ref().map_or(Value::Null, big));
            payload.insert("h2_size".into(), report.h2_size.as_ref().map_or(Value::Null, big));
            let (lo, hi) = bounds::bonferroni_window(&report.t_count, &report.n0, &report.n2)?;
            payload.insert("bonferroni_lower".into(), big(&lo));
            payload.insert("bonferroni_upper".into(), big(&hi));
            if let Setting::Hypergraph { n, k, .. } = s {
                if k >= 3 && 4 * k <= n {
                    let p0 = bounds::p0_hypergraph(n, k)?;
                    payload.insert("p0".into(), float(p0));
                    payload.insert("p0_exceeds_one".into(), json!(p0 > 1.0));
                }
                if let Some(p) = p {
                    payload.insert("tau".into(), float(bounds::tau_hypergraph(n, k, p)?));
                }
            }
            if let Setting::Permutation { n, t } = s {
                payload.insert(
                    "random_threshold_p".into(),
                    report.random_threshold_p.map_or(Value::Null, float),
                );
                payload.insert(
                    "random_threshold_exceeds_one".into(),
                    json!(report.random_threshold_p.unwrap_or(0.0) > 1.0),
                );
                if let Some(p) = p {
                    payload.insert(
                        "union_bound_log2".into(),
                        float(bounds::permutation_union_bound_log2(n, t, p)?),
                    );
                }
            }
            if let Some(m) = m {
                payload.insert(
                    "cond_fixedsize".into(),
                    report.cond_fixedsize(m).map_or(Value::Null, float),
                );
            }
            payload.insert("provenance".into(), json!("formula"));
            let mut extras: Vec<(&str, Value)> = Vec::new();
            if let Some(p) = p {
                extras.push(("p", float(p)));
            }
            if let Some(m) = m {
                extras.push(("m", float(m)));
            }
            emit(payload, "bounds", config_value(Some(&setting), &run, &extras));
            Ok(())
        }
        Command::Random { setting, p, trials, seed, run } => {
            require_json(&run)?;
            init_threads(&run)?;
            let budget = make_budget(&run);
            let s = setting.to_setting()?;
            let ground = Ground::new(s)?;
            let cg = ConflictGraph::build(&ground, &budget)?;
            let summary = random::monte_carlo(&ground, &cg, p, trials, seed, &budget)?;
            let mut payload = Map::new();
            payload.insert("trials".into(), json!(summary.trials));
            payload.insert("p".into(), float(summary.p));
            payload.insert(
                "empirical_probability".into(),
                float(summary.empirical_probability),
            );
            payload.insert("confidence_radius".into(), float(summary.confidence_radius));
            payload.insert("mean_sample_size".into(), float(summary.mean_sample_size));
            payload.insert("mean_max_size".into(), float(summary.mean_max_size));
            // theorem-scale threshold for these parameters, flagged when the
            // asymptotic regime is not reachable at this n
            match s {
                Setting::Hypergraph { n, k, .. } if k >= 3 && 4 * k <= n => {
                    let p0 = bounds::p0_hypergraph(n, k)?;
                    payload.insert("threshold_p0".into(), float(p0));
                    payload.insert("threshold_exceeds_one".into(), json!(p0 > 1.0));
                }
                Setting::Permutation { n, t } if t < n => {
                    let th = bounds::permutation_bounds(n, t)?.random_threshold_p.unwrap();
                    payload.insert("threshold_p0".into(), float(th));
                    payload.insert("threshold_exceeds_one".into(), json!(th > 1.0));
                }
                _ => {}
            }
            let config = config_value(
                Some(&setting),
                &run,
                &[("p", float(p)), ("trials", json!(trials)), ("seed", json!(seed))],
            );
            emit(payload, "random", config);
            Ok(())
        }
        Command::Sweep { setting, p_grid, trials, seed, run } => {
            init_threads(&run)?;
            let budget = make_budget(&run);
            if p_grid.is_empty() {
                return Err(Error::InvalidParameter("--p-grid must be nonempty".into()));
            }
            let s = setting.to_setting()?;
            let ground = Ground::new(s)?;
            let cg = ConflictGraph::build(&ground, &budget)?;
            let summaries = random::sweep(&ground, &cg, &p_grid, trials, seed, &budget)?;
            match run.format {
                Format::Csv => {
                    // config echo rides a comment line above the header
                    let config = config_value(
                        Some(&setting),
                        &run,
                        &[
                            ("p_grid", Value::Array(p_grid.iter().map(|&p| float(p)).collect())),
                            ("trials", json!(trials)),
                            ("seed", json!(seed)),
                        ],
                    );
                    println!("# config: {}", serde_json::to_string(&config).unwrap());
                    println!(
                        "p,trials,empirical_probability,confidence_radius,mean_sample_size,mean_max_size"
                    );
                    for sm in &summaries {
                        println!(
                            "{},{},{},{},{},{}",
                            fmt15(sm.p),
                            sm.trials,
                            fmt15(sm.empirical_probability),
                            fmt15(sm.confidence_radius),
                            fmt15(sm.mean_sample_size),
                            fmt15(sm.mean_max_size)
                        );
                    }
                }
                Format::Json => {
                    let rows: Vec<Value> = summaries
                        .iter()
                        .map(|sm| {
                            json!({
                                "p": float(sm.p),
                                "trials": sm.trials,
                                "empirical_probability": float(sm.empirical_probability),
                                "confidence_radius": float(sm.confidence_radius),
                                "mean_sample_size": float(sm.mean_sample_size),
                                "mean_max_size": float(sm.mean_max_size),
                            })
                        })
                        .collect();
                    let mut payload = Map::new();
                    payload.insert("rows".into(), Value::Array(rows));
                    let config = config_value(
                        Some(&setting),
                        &run,
                        &[
                            ("p_grid", Value::Array(p_grid.iter().map(|&p| float(p)).collect())),
                            ("trials", json!(trials)),
                            ("seed", json!(seed)),
                        ],
                    );
                    emit(payload, "sweep", config);
                }
            }
            Ok(())
        }
    }
}

fn fmt15(x: f64) -> String {
    let rounded: f64 = format!("{x:.14e}").parse().unwrap();
    format!("{rounded}")
}

fn bounds_for(s: &Setting) -> Result<bounds::BoundsReport, Error> {
    match *s {
        Setting::Hypergraph { n, k, t } => bounds::hypergraph_bounds(n, k, t),
        Setting::Permutation { n, t } => bounds::permutation_bounds(n, t),
        Setting::Subspace { n, k, q } => bounds::subspace_bounds(n, k, q),
    }
}

/// Set-pairs cap on minimal generating sets per setting.
fn generating_set_bound(s: &Setting) -> BigCount {
    use ekrlab_core::combinatorics::binomial;
    match *s {
        Setting::Hypergraph { k, t, .. } => {
            binomial(2 * (k - t) as u64 + 1, (k - t) as i64)
        }
        Setting::Permutation { n, t } => {
            binomial(2 * (n - t) as u64 + 2, (n - t) as i64 + 1) / BigCount::from(2u32)
        }
        Setting::Subspace { k, .. } => binomial(2 * k as u64 - 1, k as i64 - 1),
    }
}
