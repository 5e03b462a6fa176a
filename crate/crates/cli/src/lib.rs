//! The `hyperchar` command line: argument parsing, run configuration and
//! report rendering. `main` only parses arguments and prints.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use hypertree_spectra::hypergraph::{grow_hypertree, HypergraphError};
use hypertree_spectra::io::{self, ReadError};
use hypertree_spectra::oracle::{adjacency_charpoly_2graph, macaulay_charpoly, OracleError};
use hypertree_spectra::spectra::{
    check_divisibility, loose_path_crosscheck, nullity, SpectraError,
};
use hypertree_spectra::toppling::{
    chip_total, count_parking, critical_configurations, topple_report, CensusLimits, OrderingSpec,
    TopplingError,
};
use hypertree_spectra::{
    charpoly_hypertree, good_ordering, matching_counts, validate, FactoredPoly, Hypergraph,
    Hypertree, PolyError,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 1;
pub const EXIT_CAP: u8 = 2;
pub const EXIT_PARSE: u8 = 3;

/// Factored characteristic polynomial of the bundled five-edge hypertree.
pub const FIVE_EDGE_CHARPOLY: &str = "l^2192 * (l^11 - 5*l^8 + 5*l^5 - 2*l^2)^243 * (l^9 - 4*l^6 + 3*l^3 - 1)^162 * (l^9 - 4*l^6 + 2*l^3)^162 * (l^7 - 3*l^4 + l)^135 * (l^7 - 3*l^4)^27 * (l^5 - 2*l^2)^180 * (l^3 - 1)^483";
const FIVE_EDGE_SRC: &str = include_str!("../../../data/five_edge.txt");

#[derive(Parser, Debug)]
#[command(
    name = "hyperchar",
    version,
    about = "Exact characteristic polynomials of uniform hypertrees"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CommandArgs,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Maximum number of connected subgraphs to enumerate
    #[arg(long, env = "HYPERCHAR_SUBGRAPH_CAP", default_value_t = 1_000_000, global = true,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub subgraph_cap: u64,
    /// Maximum number of configurations in a toppled digraph
    #[arg(long, env = "HYPERCHAR_DIGRAPH_CAP", default_value_t = 200_000, global = true,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub digraph_cap: u64,
    /// Largest degree `--expand` will multiply out
    #[arg(long, env = "HYPERCHAR_DEGREE_GUARD", default_value_t = 100_000, global = true,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub degree_guard: u64,
}

#[derive(Subcommand, Debug)]
pub enum CommandArgs {
    /// Validate a hypergraph file
    Check { input: PathBuf },
    /// Factored characteristic polynomial of a hypertree
    Charpoly {
        input: PathBuf,
        /// Also print the expanded polynomial (subject to --degree-guard)
        #[arg(long)]
        expand: bool,
        /// Include the per-subgraph table
        #[arg(long)]
        breakdown: bool,
    },
    /// Matching counts and matching polynomial
    Matching { input: PathBuf },
    /// Nullity from the subgraph sum and from the factored polynomial
    Nullity { input: PathBuf },
    /// Divisibility of the whole polynomial by that of a vertex-induced subgraph
    Divides {
        input: PathBuf,
        /// Vertex labels to keep
        #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
        keep: Vec<String>,
    },
    /// Toppled digraph census
    Topple {
        input: PathBuf,
        /// Root label (default: the least label)
        #[arg(long)]
        root: Option<String>,
        /// `good`, or labels from highest to lowest priority separated by commas
        #[arg(long, default_value = "good")]
        ordering: String,
        /// Longest cycle the census follows
        #[arg(long, default_value_t = 64)]
        max_cycle_len: usize,
        /// Most cycles the census records
        #[arg(long, default_value_t = 1_000_000)]
        max_cycles: usize,
    },
    /// Loose path exponents against the closed form
    Loosepath {
        #[arg(short, long)]
        m: usize,
        #[arg(short, long)]
        r: usize,
    },
    /// Cross-check the theorem against independent computations
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::Small)]
        suite: Suite,
        /// Seed for the random trees in the suite
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Small,
    Full,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ordering {
    Good,
    Explicit(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Check,
    Charpoly { expand: bool, breakdown: bool },
    Matching,
    Nullity,
    Divides { keep: Vec<String> },
    Topple { limits: CensusLimits },
    Loosepath { m: usize, r: usize },
    Verify { suite: Suite, seed: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub subgraphs: usize,
    pub digraph: usize,
    pub degree_guard: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            subgraphs: 1_000_000,
            digraph: 200_000,
            degree_guard: 100_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub input: Option<PathBuf>,
    pub command: Command,
    pub root: Option<String>,
    pub ordering: Ordering,
    pub caps: Caps,
    pub format: Format,
}

impl Cli {
    pub fn into_config(self) -> RunConfig {
        let caps = Caps {
            subgraphs: self.subgraph_cap as usize,
            digraph: self.digraph_cap as usize,
            degree_guard: self.degree_guard,
        };
        let mut cfg = RunConfig {
            input: None,
            command: Command::Check,
            root: None,
            ordering: Ordering::Good,
            caps,
            format: self.format,
        };
        cfg.command = match self.command {
            CommandArgs::Check { input } => {
                cfg.input = Some(input);
                Command::Check
            }
            CommandArgs::Charpoly {
                input,
                expand,
                breakdown,
            } => {
                cfg.input = Some(input);
                Command::Charpoly { expand, breakdown }
            }
            CommandArgs::Matching { input } => {
                cfg.input = Some(input);
                Command::Matching
            }
            CommandArgs::Nullity { input } => {
                cfg.input = Some(input);
                Command::Nullity
            }
            CommandArgs::Divides { input, keep } => {
                cfg.input = Some(input);
                Command::Divides { keep }
            }
            CommandArgs::Topple {
                input,
                root,
                ordering,
                max_cycle_len,
                max_cycles,
            } => {
                cfg.input = Some(input);
                cfg.root = root;
                if ordering != "good" {
                    cfg.ordering = Ordering::Explicit(
                        ordering.split(',').map(|s| s.trim().to_string()).collect(),
                    );
                }
                Command::Topple {
                    limits: CensusLimits {
                        max_len: max_cycle_len,
                        max_cycles,
                    },
                }
            }
            CommandArgs::Loosepath { m, r } => Command::Loosepath { m, r },
            CommandArgs::Verify { suite, seed } => Command::Verify { suite, seed },
        };
        cfg
    }
}

/// Exit status and what goes to standard output and standard error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: u8,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    status: u8,
    message: String,
    findings: Vec<String>,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Self {
            status: EXIT_INVALID,
            message: message.into(),
            findings: Vec::new(),
        }
    }
}

impl From<ReadError> for Failure {
    fn from(e: ReadError) -> Self {
        Self {
            status: EXIT_PARSE,
            message: e.to_string(),
            findings: Vec::new(),
        }
    }
}

impl From<HypergraphError> for Failure {
    fn from(e: HypergraphError) -> Self {
        match e {
            HypergraphError::CapExceeded { .. } => Self {
                status: EXIT_CAP,
                message: e.to_string(),
                findings: Vec::new(),
            },
            _ => Self::invalid(e.to_string()),
        }
    }
}

impl From<PolyError> for Failure {
    fn from(e: PolyError) -> Self {
        let status = match e {
            PolyError::DegreeGuard { .. } | PolyError::ContentOverflow { .. } => EXIT_CAP,
            _ => EXIT_INVALID,
        };
        Self {
            status,
            message: e.to_string(),
            findings: Vec::new(),
        }
    }
}

impl From<SpectraError> for Failure {
    fn from(e: SpectraError) -> Self {
        match e {
            SpectraError::Hypergraph(h) => h.into(),
            SpectraError::Poly(p) => p.into(),
            other => Self::invalid(other.to_string()),
        }
    }
}

impl From<TopplingError> for Failure {
    fn from(e: TopplingError) -> Self {
        match e {
            TopplingError::CapExceeded { .. } | TopplingError::DenseCap { .. } => Self {
                status: EXIT_CAP,
                message: e.to_string(),
                findings: Vec::new(),
            },
            TopplingError::Hypergraph(h) => h.into(),
            other => Self::invalid(other.to_string()),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        let status = match e {
            OracleError::CapExceeded { .. } | OracleError::TooManyEdges { .. } => EXIT_CAP,
            _ => EXIT_INVALID,
        };
        Self {
            status,
            message: e.to_string(),
            findings: Vec::new(),
        }
    }
}

/// A report in both renderings.
struct Report {
    json: Value,
    text: String,
    status: u8,
}

impl Report {
    fn ok(json: Value, text: String) -> Self {
        Self {
            json,
            text,
            status: EXIT_OK,
        }
    }
}

pub fn run(cfg: &RunConfig) -> Outcome {
    match execute(cfg) {
        Ok(report) => Outcome {
            status: report.status,
            stdout: match cfg.format {
                Format::Json => {
                    serde_json::to_string_pretty(&report.json).expect("JSON values serialize")
                        + "\n"
                }
                Format::Text => report.text,
            },
            stderr: String::new(),
        },
        Err(f) => {
            let stdout = match cfg.format {
                Format::Json => {
                    let v = json!({"error": f.message, "exit": f.status, "findings": f.findings});
                    serde_json::to_string_pretty(&v).expect("JSON values serialize") + "\n"
                }
                Format::Text => String::new(),
            };
            let mut stderr = format!("error: {}\n", f.message);
            for line in &f.findings {
                let _ = writeln!(stderr, "  {line}");
            }
            Outcome {
                status: f.status,
                stdout,
                stderr,
            }
        }
    }
}

fn execute(cfg: &RunConfig) -> Result<Report, Failure> {
    match &cfg.command {
        Command::Loosepath { m, r } => return loosepath(*m, *r, cfg.caps),
        Command::Verify { suite, seed } => return Ok(verify(*suite, *seed, cfg.caps)),
        _ => {}
    }
    let path = cfg
        .input
        .as_ref()
        .ok_or_else(|| Failure::invalid("this subcommand needs an input file"))?;
    let raw = io::read_file(path)?;
    let validation = validate(&raw);
    if let Command::Check = cfg.command {
        let status = if validation.hypertree {
            EXIT_OK
        } else {
            EXIT_INVALID
        };
        let mut text = format!(
            "r = {}, n = {}, m = {}: {}\n",
            validation.r,
            validation.n,
            validation.m,
            if validation.hypertree {
                "hypertree"
            } else {
                "not a hypertree"
            }
        );
        for f in &validation.findings {
            let _ = writeln!(text, "  {f}");
        }
        return Ok(Report {
            json: serde_json::to_value(&validation).expect("validation serializes"),
            text,
            status,
        });
    }
    if !validation.is_valid_hypergraph() {
        return Err(Failure {
            status: EXIT_INVALID,
            message: "input is not a uniform hypergraph".into(),
            findings: validation.findings,
        });
    }
    let h = raw.into_hypergraph()?;
    if let Command::Matching = cfg.command {
        return Ok(matching(&h));
    }
    if !validation.hypertree {
        return Err(Failure {
            status: EXIT_INVALID,
            message: "input is not a hypertree".into(),
            findings: validation.findings,
        });
    }
    let root = match &cfg.root {
        Some(label) => vertex(&h, label)?,
        None => 0,
    };
    let t = good_ordering(&h, root)?;
    match &cfg.command {
        Command::Charpoly { expand, breakdown } => charpoly(&t, *expand, *breakdown, cfg.caps),
        Command::Nullity => nullity_report(&t, cfg.caps),
        Command::Divides { keep } => divides(&t, keep, cfg.caps),
        Command::Topple { limits } => topple(&h, root, &cfg.ordering, *limits, cfg.caps),
        Command::Check | Command::Matching | Command::Loosepath { .. } | Command::Verify { .. } => {
            unreachable!("handled above")
        }
    }
}

fn vertex(h: &Hypergraph, label: &str) -> Result<usize, Failure> {
    h.vertex_by_label(label)
        .ok_or_else(|| Failure::invalid(format!("no vertex labelled `{label}`")))
}

fn charpoly(t: &Hypertree, expand: bool, breakdown: bool, caps: Caps) -> Result<Report, Failure> {
    let report = charpoly_hypertree(t, caps.subgraphs)?;
    let g = t.graph();
    let display = report.factored.to_string();
    let mut json = json!({
        "factored": report.factored,
        "display": display,
        "degree": report.total_degree,
        "nullity": report.nullity,
        "subgraphs": report.per_subgraph.len(),
    });
    let mut text = String::new();
    if breakdown {
        let rows: Vec<Value> = report
            .per_subgraph
            .iter()
            .map(|term| {
                json!({
                    "subgraph": term.handle.label(g),
                    "order": term.handle.order(),
                    "size": term.handle.size(),
                    "boundary": term.handle.boundary_size,
                    "a_H": term.exponent,
                    "phi_H": term.base,
                    "phi_H_display": term.base.to_string(),
                })
            })
            .collect();
        json["breakdown"] = Value::Array(rows);
        let width = report
            .per_subgraph
            .iter()
            .map(|t| t.handle.label(g).len())
            .max()
            .unwrap_or(1)
            .max("subgraph".len());
        let _ = writeln!(text, "{:<width$}  {:>8}  phi_H", "subgraph", "a_H");
        for term in &report.per_subgraph {
            let _ = writeln!(
                text,
                "{:<width$}  {:>8}  {}",
                term.handle.label(g),
                term.exponent.to_string(),
                term.base
            );
        }
        text.push('\n');
    }
    let _ = writeln!(text, "{display}");
    if expand {
        let full = report.factored.expand(&BigUint::from(caps.degree_guard))?;
        let _ = writeln!(text, "{full}");
        json["expanded"] = serde_json::to_value(&full).expect("polynomials serialize");
    }
    Ok(Report::ok(json, text))
}

fn matching(h: &Hypergraph) -> Report {
    let profile = matching_counts(h);
    let poly = profile.polynomial(h.r());
    let counts: Vec<String> = profile.counts.iter().map(|c| c.to_string()).collect();
    let json = json!({
        "counts": counts,
        "nu": profile.nu,
        "order": profile.order,
        "polynomial": poly,
        "display": poly.to_string(),
    });
    let text = format!(
        "m(k): {}\nnu = {}\n{}\n",
        counts.join(" "),
        profile.nu,
        poly
    );
    Report::ok(json, text)
}

fn nullity_report(t: &Hypertree, caps: Caps) -> Result<Report, Failure> {
    let report = charpoly_hypertree(t, caps.subgraphs)?;
    let sum = nullity(&report);
    let valuation = report.factored.valuation();
    let json = json!({
        "nullity": sum.to_string(),
        "valuation": valuation.to_string(),
        "agree": sum == valuation,
    });
    let mut text = format!("{sum}\n");
    if sum != valuation {
        let _ = writeln!(text, "warning: power of l in the product is {valuation}");
    }
    Ok(Report::ok(json, text))
}

fn divides(t: &Hypertree, keep: &[String], caps: Caps) -> Result<Report, Failure> {
    let g = t.graph();
    let ids = keep
        .iter()
        .map(|l| vertex(g, l))
        .collect::<Result<Vec<_>, _>>()?;
    let verdict = check_divisibility(t, &ids, caps.subgraphs)?;
    let text = format!(
        "matching_divides: {}\ncharpoly_divides: {}\ncorollary_predicts: {}\ncomponents: {}\n",
        verdict.matching_divides,
        verdict.charpoly_divides,
        verdict.corollary_predicts,
        verdict.components
    );
    Ok(Report::ok(
        serde_json::to_value(&verdict).expect("verdict serializes"),
        text,
    ))
}

fn topple(
    h: &Hypergraph,
    root: usize,
    ordering: &Ordering,
    limits: CensusLimits,
    caps: Caps,
) -> Result<Report, Failure> {
    let spec = match ordering {
        Ordering::Good => OrderingSpec::Good { root },
        Ordering::Explicit(labels) => OrderingSpec::Explicit(
            labels
                .iter()
                .map(|l| vertex(h, l))
                .collect::<Result<Vec<_>, _>>()?,
        ),
    };
    let report = topple_report(h, &spec, caps.digraph, limits)?;
    let hist: Vec<String> = report
        .scc_histogram
        .iter()
        .map(|(k, v)| format!("{k}:{v}"))
        .collect();
    let cycles: Vec<String> = report
        .cycle_length_census
        .iter()
        .map(|(k, v)| format!("{k}:{v}"))
        .collect();
    let opt = |b: Option<bool>| b.map_or("n/a".to_string(), |b| b.to_string());
    let mut text = String::new();
    let _ = writeln!(
        text,
        "configurations: {} ({} arcs)",
        report.config_count, report.arc_count
    );
    let _ = writeln!(text, "component sizes: {}", hist.join(" "));
    let _ = writeln!(
        text,
        "cycle lengths: {}{}",
        cycles.join(" "),
        if report.census_partial {
            " (truncated)"
        } else {
            ""
        }
    );
    let _ = writeln!(text, "cycles with hops: {}", report.cycles_with_hops);
    if let Some(c) = report.critical_count {
        let _ = writeln!(text, "critical configurations: {c}");
    }
    let _ = writeln!(
        text,
        "single_edge_cycles: {}  lengths_divisible: {}  critical_representative: {}",
        opt(report.checks.single_edge_cycles),
        report.checks.lengths_divisible,
        opt(report.checks.critical_representative)
    );
    Ok(Report::ok(
        serde_json::to_value(&report).expect("report serializes"),
        text,
    ))
}

fn loosepath(m: usize, r: usize, caps: Caps) -> Result<Report, Failure> {
    let cmp = loose_path_crosscheck(m, r, caps.subgraphs)?;
    let mut text = format!("P_{m}^{r}: {}\n", cmp.factored);
    let _ = writeln!(text, "{:>3}  {:>16}  {:>16}", "j", "closed form", "theorem");
    for row in &cmp.rows {
        let _ = writeln!(
            text,
            "{:>3}  {:>16}  {:>16}",
            row.j, row.closed_form, row.theorem
        );
    }
    let _ = writeln!(
        text,
        "power of l: closed form {}, theorem {}\nagree: {}",
        cmp.closed_form_lambda, cmp.theorem_lambda, cmp.all_agree
    );
    let status = if cmp.all_agree { EXIT_OK } else { EXIT_INVALID };
    Ok(Report {
        json: serde_json::to_value(&cmp).expect("comparison serializes"),
        text,
        status,
    })
}

struct Check {
    name: String,
    pass: bool,
    detail: String,
}

fn oracle_check(name: &str, h: &Hypergraph, caps: Caps) -> Check {
    let outcome = (|| -> Result<(bool, String), String> {
        let t = good_ordering(h, 0).map_err(|e| e.to_string())?;
        let theorem = charpoly_hypertree(&t, caps.subgraphs).map_err(|e| e.to_string())?;
        let expanded = theorem
            .factored
            .expand(&BigUint::from(caps.degree_guard))
            .map_err(|e| e.to_string())?;
        let oracle = macaulay_charpoly(h, 300).map_err(|e| e.to_string())?;
        Ok((
            expanded == oracle,
            format!(
                "theorem {}; resultant degree {:?}",
                theorem.factored,
                oracle.degree()
            ),
        ))
    })();
    match outcome {
        Ok((pass, detail)) => Check {
            name: name.into(),
            pass,
            detail,
        },
        Err(detail) => Check {
            name: name.into(),
            pass: false,
            detail,
        },
    }
}

fn verify(suite: Suite, seed: u64, caps: Caps) -> Report {
    let mut checks = Vec::new();
    let edge = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).expect("single edge");
    checks.push(oracle_check(
        "single 3-edge: theorem equals resultant",
        &edge,
        caps,
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = Vec::new();
    for _ in 0..20 {
        let m = rng.gen_range(1..=9);
        let g = grow_hypertree(2, m, |k| rng.gen_range(0..k));
        let t = good_ordering(&g, 0).expect("grown trees are hypertrees");
        let ok = match (
            charpoly_hypertree(&t, caps.subgraphs),
            adjacency_charpoly_2graph(&g),
        ) {
            (Ok(rep), Ok(adj)) => {
                rep.factored.factors().len() == 1
                    && FactoredPoly::power(adj, 1u64).map_or(false, |p| p == rep.factored)
            }
            _ => false,
        };
        if !ok {
            bad.push(g.to_string().replace('\n', "; "));
        }
    }
    checks.push(Check {
        name: "r = 2 trees: single factor equal to the adjacency polynomial".into(),
        pass: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("20 random trees, seed {seed}")
        } else {
            format!("failed on {}", bad.join(" | "))
        },
    });

    let parking: Vec<(usize, u64)> = (1..=6).map(|k| (k, count_parking(k))).collect();
    let parking_ok = parking
        .iter()
        .all(|&(k, c)| c == (k as u64 + 1).pow(k as u32 - 1));
    checks.push(Check {
        name: "parking functions number (k+1)^(k-1)".into(),
        pass: parking_ok,
        detail: format!("{parking:?}"),
    });

    let mut crit = Vec::new();
    let mut crit_ok = true;
    for (r, m) in [(3, 1), (3, 2), (3, 3), (4, 1), (4, 2), (5, 1)] {
        let t = good_ordering(&grow_hypertree(r, m, |k| k - 1), 0).expect("paths are hypertrees");
        let got = critical_configurations(&t, caps.digraph)
            .map(|c| c.len())
            .unwrap_or(0);
        let want = r.pow(((r - 2) * m) as u32);
        crit_ok &= got == want;
        crit.push(format!("r={r} m={m}: {got} (d = {})", chip_total(t.n(), r)));
    }
    checks.push(Check {
        name: "critical configurations number r^((r-2)m)".into(),
        pass: crit_ok,
        detail: crit.join(", "),
    });

    if suite == Suite::Full {
        let path =
            Hypergraph::new(3, 5, vec![vec![0, 1, 2], vec![2, 3, 4]]).expect("two-edge path");
        checks.push(oracle_check(
            "two-edge 3-path: theorem equals resultant",
            &path,
            caps,
        ));
        let golden = (|| -> Result<String, String> {
            let h = io::parse_text(FIVE_EDGE_SRC)
                .map_err(|e| e.to_string())?
                .into_hypergraph()
                .map_err(|e| e.to_string())?;
            let t = Hypertree::new(h).map_err(|e| e.to_string())?;
            let rep = charpoly_hypertree(&t, caps.subgraphs).map_err(|e| e.to_string())?;
            Ok(rep.factored.to_string())
        })();
        let (pass, detail) = match golden {
            Ok(s) if s == FIVE_EDGE_CHARPOLY => (true, s),
            Ok(s) => (false, format!("got {s}")),
            Err(e) => (false, e),
        };
        checks.push(Check {
            name: "five-edge hypertree: golden factored polynomial".into(),
            pass,
            detail,
        });
    }

    let passed = checks.iter().all(|c| c.pass);
    let mut text = String::new();
    for c in &checks {
        let _ = writeln!(
            text,
            "[{}] {}: {}",
            if c.pass { "pass" } else { "FAIL" },
            c.name,
            c.detail
        );
    }
    let json = json!({
        "suite": match suite { Suite::Small => "small", Suite::Full => "full" },
        "seed": seed,
        "passed": passed,
        "checks": checks
            .iter()
            .map(|c| json!({"name": c.name, "pass": c.pass, "detail": c.detail}))
            .collect::<Vec<_>>(),
    });
    Report {
        json,
        text,
        status: if passed { EXIT_OK } else { EXIT_INVALID },
    }
}
