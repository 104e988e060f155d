use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use locdirac_core::cycles::{
    find_extension_by_moves, find_extension_exhaustive, hamilton_by_extension, hamilton_cycle, validate_cycle, Budget,
};
use locdirac_core::invariants::{diameter, edge_connectivity, girth, is_planar, vertex_connectivity};
use locdirac_core::predicates::*;
use locdirac_core::{to_edge_list, CycleError, Graph};
use locdirac_harness::canon::graph_hash;
use locdirac_harness::io::{parse_family_spec, parse_graph_file};
use locdirac_harness::report::tally;
use locdirac_harness::{
    exhaustive_search, exit_code, random_search, run_suite, write_report, default_catalog, CheckOptions, Format,
    HarnessError, HypothesisMode, Instance, SearchConfig, SuiteConfig, SuiteKind, TheoremId,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "locdirac", version, about = "Locally Dirac and locally Ore graphs: properties, theorem checks, search")]
struct Cli {
    /// Seed for every random stream.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Cap on enumerated cycles; backtracking gets 20 times as many steps.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(Args)]
struct GraphSource {
    /// Edge-list file.
    graph: Option<PathBuf>,
    /// Family spec instead of a file, e.g. "path-strong-k3 m=5".
    #[arg(long, conflicts_with = "graph")]
    family: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Catalog,
    Random,
    None,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Random,
}

#[derive(Subcommand)]
enum Command {
    /// Print a family member as an edge list.
    Gen {
        /// Family id followed by key=value parameters.
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
    },
    /// Evaluate predicates and invariants of one graph.
    Props(GraphSource),
    /// Run theorem checks and emit one report line per check.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Restrict to these theorem ids (repeatable).
        #[arg(long = "theorem")]
        theorems: Vec<String>,
        /// Extra edge-list files to check (repeatable).
        #[arg(long = "graph")]
        graphs: Vec<PathBuf>,
        /// Extra family specs to check (repeatable).
        #[arg(long = "family")]
        families: Vec<String>,
        /// Number of seeded graphs in the random suite.
        #[arg(long, default_value_t = 200)]
        samples: u64,
        /// Drop the connectedness hypothesis where the statements omit it.
        #[arg(long)]
        literal: bool,
        /// Record per-check wall-clock milliseconds.
        #[arg(long)]
        timings: bool,
    },
    /// Grow a Hamilton cycle by extension moves, or extend one given cycle.
    Extend {
        #[command(flatten)]
        source: GraphSource,
        /// Comma-separated cycle to extend by one vertex.
        #[arg(long)]
        cycle: Option<String>,
    },
    /// Look for a graph passing the filter but violating the property.
    Search {
        #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
        mode: ModeArg,
        #[arg(long, default_value = "true")]
        filter: String,
        #[arg(long, default_value = "true")]
        property: String,
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        /// Largest order (default 7 exhaustive, 12 random).
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
    },
}

enum Failure {
    Usage(String),
    Budget(String),
    Io(io::Error),
}

impl From<HarnessError> for Failure {
    fn from(e: HarnessError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn cycle_failure(e: CycleError) -> Failure {
    match e {
        CycleError::Budget(b) => Failure::Budget(b.to_string()),
        other => Failure::Usage(other.to_string()),
    }
}

fn load(source: &GraphSource) -> Result<(String, Graph), Failure> {
    match (&source.graph, &source.family) {
        (Some(path), None) => {
            let g = parse_graph_file(path)?;
            Ok((graph_hash(&g), g))
        }
        (None, Some(text)) => {
            let spec = parse_family_spec(text)?;
            Ok((spec.to_string(), spec.build().map_err(HarnessError::from)?))
        }
        _ => Err(Failure::Usage("give an edge-list file or --family".into())),
    }
}

fn budget_of(cli: &Cli) -> Budget {
    match cli.budget {
        Some(b) => Budget { max_cycles: b, max_steps: b.saturating_mul(20) },
        None => Budget::default(),
    }
}

fn emit_value(out: &mut dyn Write, format: FormatArg, value: &Value) -> io::Result<()> {
    match (format, value) {
        (FormatArg::Text, Value::Object(map)) => {
            for (k, v) in map {
                match v {
                    Value::String(s) => writeln!(out, "{k}: {s}")?,
                    other => writeln!(out, "{k}: {other}")?,
                }
            }
            Ok(())
        }
        _ => writeln!(out, "{value}"),
    }
}

fn props(g: &Graph, label: &str, budget: &Budget) -> Result<Value, Failure> {
    let hamiltonian = hamilton_cycle(g, budget).map_err(cycle_failure)?.is_some();
    let clustering = min_clustering_coefficient(g).ok().map(|r| r.to_string());
    Ok(json!({
        "instance": label,
        "n": g.n(),
        "m": g.edge_count(),
        "min_degree": g.min_degree(),
        "max_degree": g.max_degree(),
        "connected": g.n() > 0 && g.is_connected(),
        "dirac": satisfies_dirac(g),
        "ore": satisfies_ore(g),
        "locally_dirac": is_locally_dirac(g),
        "locally_ore": is_locally_ore(g),
        "closed_locally_dirac": is_closed_locally_dirac(g),
        "closed_locally_ore": is_closed_locally_ore(g),
        "locally_connected": is_locally_connected(g),
        "claw_free": is_claw_free(g),
        "locally_isometric": is_locally_isometric(g),
        "min_clustering": clustering,
        "kappa": vertex_connectivity(g).value,
        "lambda": edge_connectivity(g).value,
        "diameter": diameter(g).to_string(),
        "girth": girth(g).to_string(),
        "planar": is_planar(g),
        "hamiltonian": hamiltonian,
    }))
}

fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let budget = budget_of(cli);
    let format = cli.format;
    match &cli.command {
        Command::Gen { spec } => {
            let spec = parse_family_spec(&spec.join(" "))?;
            let g = spec.build().map_err(HarnessError::from)?;
            out.write_all(to_edge_list(&g).as_bytes())?;
            Ok(0)
        }
        Command::Props(source) => {
            let (label, g) = load(source)?;
            emit_value(out, format, &props(&g, &label, &budget)?)?;
            Ok(0)
        }
        Command::Verify { suite, theorems, graphs, families, samples, literal, timings } => {
            let theorems = if theorems.is_empty() {
                TheoremId::ALL.to_vec()
            } else {
                theorems.iter().map(|t| t.parse()).collect::<Result<Vec<TheoremId>, _>>()?
            };
            let mut extra = Vec::new();
            for text in families {
                let spec = parse_family_spec(text)?;
                extra.push(Instance::from_spec(&spec).map_err(HarnessError::from)?);
            }
            for path in graphs {
                let g = parse_graph_file(path)?;
                extra.push(Instance { label: graph_hash(&g), graph: g });
            }
            let config = SuiteConfig {
                kind: match suite {
                    SuiteArg::All => SuiteKind::All,
                    SuiteArg::Catalog => SuiteKind::Catalog,
                    SuiteArg::Random => SuiteKind::Random,
                    SuiteArg::None => SuiteKind::None,
                },
                theorems,
                extra,
                seed: cli.seed,
                random_samples: *samples,
                options: CheckOptions {
                    budget,
                    mode: if *literal { HypothesisMode::Literal } else { HypothesisMode::Connected },
                    ..CheckOptions::default()
                },
                timings: *timings,
                ..SuiteConfig::default()
            };
            let reports = run_suite(&config);
            write_report(
                out,
                &reports,
                match format {
                    FormatArg::Json => Format::Json,
                    FormatArg::Text => Format::Text,
                },
            )?;
            let counts: Vec<String> = tally(&reports).iter().map(|(s, c)| format!("{c} {s}")).collect();
            eprintln!("{} checks: {}", reports.len(), counts.join(", "));
            Ok(exit_code(&reports))
        }
        Command::Extend { source, cycle } => {
            let (_, g) = load(source)?;
            match cycle {
                Some(text) => {
                    let seq = text
                        .split(',')
                        .map(|t| t.trim().parse::<usize>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|e| Failure::Usage(format!("bad cycle `{text}`: {e}")))?;
                    let c = validate_cycle(&g, &seq).map_err(cycle_failure)?;
                    if let Some(m) = find_extension_by_moves(&g, &c).map_err(cycle_failure)? {
                        writeln!(out, "{}", serde_json::to_string(&m).expect("serializes"))?;
                        return Ok(0);
                    }
                    match find_extension_exhaustive(&g, &c, &budget).map_err(cycle_failure)? {
                        Some((x, after)) => {
                            let v = json!({ "move": "Exhaustive", "x": x, "indices": [], "cycle_after": after });
                            writeln!(out, "{v}")?;
                            Ok(0)
                        }
                        None => {
                            eprintln!("cycle {:?} is not extendable", c.vertices());
                            Ok(1)
                        }
                    }
                }
                None => match hamilton_by_extension(&g, &budget) {
                    Ok(Some(trace)) => {
                        if let FormatArg::Text = format {
                            writeln!(out, "seed {:?}", trace.seed)?;
                        }
                        for m in &trace.moves {
                            writeln!(out, "{}", serde_json::to_string(m).expect("serializes"))?;
                        }
                        Ok(if trace.verify(&g) { 0 } else { 1 })
                    }
                    Ok(None) => {
                        eprintln!("no Hamilton cycle reached by extension");
                        Ok(1)
                    }
                    Err(CycleError::Budget(b)) => Err(Failure::Budget(b.to_string())),
                    Err(e) => {
                        eprintln!("{e}");
                        Ok(1)
                    }
                },
            }
        }
        Command::Search { mode, filter, property, min_n, max_n, samples } => {
            let config = SearchConfig {
                filter: filter.parse()?,
                property: property.parse()?,
                min_n: *min_n,
                max_n: max_n.unwrap_or(match mode {
                    ModeArg::Exhaustive => 7,
                    ModeArg::Random => 12,
                }),
                samples: *samples,
                seed: cli.seed,
                options: CheckOptions { budget, ..CheckOptions::default() },
                bases: default_catalog(),
            };
            let outcome = match mode {
                ModeArg::Exhaustive => exhaustive_search(&config)?,
                ModeArg::Random => random_search(&config),
            };
            emit_value(out, format, &serde_json::to_value(&outcome).expect("serializes"))?;
            Ok(if outcome.counterexample.is_some() {
                1
            } else if outcome.over_budget > 0 {
                3
            } else {
                0
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.report {
        Some(path) => match File::create(path) {
            Ok(f) => {
                let mut w = BufWriter::new(f);
                run(&cli, &mut w).and_then(|code| w.flush().map(|_| code).map_err(Failure::Io))
            }
            Err(e) => Err(Failure::Usage(format!("{}: {e}", path.display()))),
        },
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            run(&cli, &mut w).and_then(|code| w.flush().map(|_| code).map_err(Failure::Io))
        }
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("budget exhausted: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
