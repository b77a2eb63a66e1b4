//! Batch frontend for the wellspread library.
//!
//! Exit codes: 0 success, 1 output I/O failure, 2 unreadable or malformed
//! input, 3 connectivity precondition, 4 internal invariant, 5 overlap
//! bound violated (the offending instance is written next to the input).

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use wellspread::cuts::{build_cactus, CactusModel, CutError, NodeKind};
use wellspread::graph::CubicGraph;
use wellspread::io::{format_graph, format_matching, parse_graph, parse_matching};
use wellspread::pair::{small_intersection_pair, PairError};
use wellspread::spread::{assemble, decompose, is_well_spread, well_spread_violations, SpreadError};
use wellspread::{bench, gen, matching};

#[derive(Parser)]
#[command(name = "wellspread", version, about = "Well-spread perfect matchings in 3-edge-connected cubic graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a graph file for one of the built-in families
    Gen {
        #[arg(long = "type", value_enum)]
        kind: Kind,
        /// vertex count (random)
        #[arg(long)]
        n: Option<usize>,
        /// cycle length (prism)
        #[arg(long)]
        k: Option<usize>,
        /// generator seed (random)
        #[arg(long)]
        seed: Option<u64>,
        /// graph file to truncate
        #[arg(long)]
        input: Option<PathBuf>,
        /// output file (stdout if absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute a well-spread perfect matching of a graph file
    Match { file: PathBuf },
    /// Check a matching file against every 3-edge cut of a graph file
    Verify { file: PathBuf, matching: PathBuf },
    /// Export the tree of 3-edge cuts
    Cactus {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Two perfect matchings overlapping in at most n/10 edges
    Pair { file: PathBuf },
    /// Time the pipeline over a size x seed grid, CSV out
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        seeds: Vec<u64>,
        /// output file (stdout if absent)
        #[arg(long)]
        out: Option<PathBuf>,
        /// report the median-total run of three per cell
        #[arg(long)]
        median3: bool,
        /// worker threads
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Petersen,
    Prism,
    K4,
    Truncate,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

struct Failure {
    code: u8,
    msg: String,
}

fn fail(code: u8, msg: impl Into<String>) -> Failure {
    Failure { code, msg: msg.into() }
}

const EXIT_IO: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_CONNECTIVITY: u8 = 3;
const EXIT_INVARIANT: u8 = 4;
const EXIT_BOUND: u8 = 5;

fn main() -> ExitCode {
    match run(Cli::parse().cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("wellspread: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn load_graph(path: &Path) -> Result<CubicGraph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| fail(EXIT_PARSE, format!("{}: {}", path.display(), e)))?;
    parse_graph(&text).map_err(|e| fail(EXIT_PARSE, format!("{}: {}", path.display(), e)))
}

fn model_for(g: &CubicGraph) -> Result<CactusModel, Failure> {
    build_cactus(g).map_err(|e| {
        let code = match e {
            CutError::Disconnected | CutError::NotThreeEdgeConnected => EXIT_CONNECTIVITY,
            _ => EXIT_INVARIANT,
        };
        fail(code, e.to_string())
    })
}

fn spread_failure(e: SpreadError) -> Failure {
    match e {
        SpreadError::Cut(c) => fail(EXIT_CONNECTIVITY, c.to_string()),
        other => fail(EXIT_INVARIANT, other.to_string()),
    }
}

fn write_out(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| fail(EXIT_IO, format!("{}: {}", path.display(), e))),
        None => {
            print!("{}", text);
            Ok(())
        }
    }
}

fn run(cmd: Cmd) -> Result<(), Failure> {
    match cmd {
        Cmd::Gen { kind, n, k, seed, input, out } => {
            let g = match kind {
                Kind::K4 => gen::k4(),
                Kind::Petersen => gen::petersen(),
                Kind::Prism => {
                    let k = k.unwrap_or(3);
                    if k < 3 {
                        return Err(fail(EXIT_PARSE, "--k must be at least 3"));
                    }
                    gen::prism(k)
                }
                Kind::Random => {
                    let n = n.ok_or_else(|| fail(EXIT_PARSE, "--type random needs --n"))?;
                    if n < 4 || n % 2 != 0 {
                        return Err(fail(EXIT_PARSE, "--n must be even and at least 4"));
                    }
                    gen::random(n, seed.unwrap_or(0))
                }
                Kind::Truncate => {
                    let path =
                        input.ok_or_else(|| fail(EXIT_PARSE, "--type truncate needs --input"))?;
                    gen::truncate(&load_graph(&path)?)
                }
            };
            write_out(out.as_deref(), &format_graph(&g))
        }

        Cmd::Match { file } => {
            let g = load_graph(&file)?;
            let model = model_for(&g)?;
            let d = decompose(&g, &model).map_err(spread_failure)?;
            let m = assemble(&g, &d).map_err(spread_failure)?;
            if !is_well_spread(&g, &model, &m) {
                return Err(fail(EXIT_INVARIANT, "computed matching failed verification"));
            }
            let summary = json!({
                "perfect": true,
                "well_spread": true,
                "n": g.n(),
                "cut_count": model.edge_count(),
            });
            print!("{}# {}\n", format_matching(&m), summary);
            Ok(())
        }

        Cmd::Verify { file, matching } => {
            let g = load_graph(&file)?;
            let text = std::fs::read_to_string(&matching)
                .map_err(|e| fail(EXIT_PARSE, format!("{}: {}", matching.display(), e)))?;
            let ids = parse_matching(&text)
                .map_err(|e| fail(EXIT_PARSE, format!("{}: {}", matching.display(), e)))?;
            let model = model_for(&g)?;
            let perfect = matching::is_perfect_matching(&g, &ids);
            let violations = well_spread_violations(&g, &model, &ids);
            let report = json!({
                "perfect": perfect,
                "well_spread": perfect && violations.is_empty(),
                "violated_cuts": violations.iter().map(|v| json!({
                    "cut_edges": v.cut_edges,
                    "side_size": v.side_size,
                    "intersection": v.intersection,
                })).collect::<Vec<_>>(),
            });
            println!("{}", report);
            Ok(())
        }

        Cmd::Cactus { file, format } => {
            let g = load_graph(&file)?;
            let model = model_for(&g)?;
            match format {
                Format::Json => {
                    let report = json!({
                        "n": g.n(),
                        "root": model.root,
                        "phi": model.phi,
                        "nodes": model.nodes.iter().enumerate().map(|(i, k)| match k {
                            NodeKind::Leaf(v) => json!({"id": i, "kind": "leaf", "vertex": v}),
                            NodeKind::Empty => json!({"id": i, "kind": "empty"}),
                        }).collect::<Vec<_>>(),
                        "edges": model.tree_edges.iter().map(|t| json!({
                            "a": t.a,
                            "b": t.b,
                            "cut_edges": t.cut_edges,
                        })).collect::<Vec<_>>(),
                    });
                    println!("{}", report);
                }
                Format::Dot => {
                    let mut out = String::from("graph cuts {\n");
                    for (i, kind) in model.nodes.iter().enumerate() {
                        match kind {
                            NodeKind::Leaf(v) => {
                                out.push_str(&format!("  t{} [label=\"v{}\"];\n", i, v))
                            }
                            NodeKind::Empty => {
                                out.push_str(&format!("  t{} [shape=point, label=\"\"];\n", i))
                            }
                        }
                    }
                    for t in &model.tree_edges {
                        out.push_str(&format!(
                            "  t{} -- t{} [label=\"{} {} {}\"];\n",
                            t.a, t.b, t.cut_edges[0], t.cut_edges[1], t.cut_edges[2]
                        ));
                    }
                    out.push_str("}\n");
                    print!("{}", out);
                }
            }
            Ok(())
        }

        Cmd::Pair { file } => {
            let g = load_graph(&file)?;
            match small_intersection_pair(&g) {
                Ok(p) => {
                    let report = json!({
                        "n": g.n(),
                        "m1": p.m1,
                        "m2": p.m2,
                        "shared": p.shared,
                        "shared_count": p.shared.len(),
                        "bound": p.bound,
                    });
                    println!("{}", report);
                    Ok(())
                }
                Err(PairError::Spread(e)) => Err(spread_failure(e)),
                Err(PairError::BoundViolated(p)) => {
                    let dump = format!("{}.quarantine.graph", file.display());
                    let saved = match std::fs::write(&dump, format_graph(&g)) {
                        Ok(()) => format!("instance kept at {}", dump),
                        Err(e) => format!("could not keep the instance at {}: {}", dump, e),
                    };
                    Err(fail(
                        EXIT_BOUND,
                        format!(
                            "matchings share {} edges, over the bound {}; {}",
                            p.shared.len(),
                            p.bound,
                            saved
                        ),
                    ))
                }
            }
        }

        Cmd::Bench { sizes, seeds, out, median3, jobs } => {
            if let Some(&n) = sizes.iter().find(|&&n| n < 4 || n % 2 != 0) {
                return Err(fail(EXIT_PARSE, format!("size {} is not even and at least 4", n)));
            }
            let rows = bench::run_grid(&sizes, &seeds, median3, jobs);
            write_out(out.as_deref(), &bench::to_csv(&rows))?;
            let mut distinct = sizes.to_vec();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() >= 2 {
                eprintln!("slope {:.3}", bench::log_log_slope(&rows));
            }
            if rows.iter().any(|r| !r.verified) {
                return Err(fail(EXIT_INVARIANT, "a benchmark row failed verification"));
            }
            Ok(())
        }
    }
}
