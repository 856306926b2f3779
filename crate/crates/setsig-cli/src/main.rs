//! `setsig` — construct, analyze, and verify set-labeled signed graphs.
//!
//! Exit codes: 0 when the requested property holds (or the command
//! succeeded), 1 when a checked property fails (a witness is printed),
//! 2 on usage, parse, or precondition errors.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use setsig::analysis::{
    check_balance, check_two_clusterable, eulerian_label_sum, AnalysisError, BalanceVerdict,
    ClusterVerdict, LabelSumReport,
};
use setsig::construct::{balance_compatible_labeling, canonical_set_indexer, random_valuation, LabelingOutcome};
use setsig::graph::Cycle;
use setsig::io::{
    parse_signed_graph, parse_valuation, serialize_signed_graph, serialize_valuation, NameTable,
    SignedGraphDoc, ValuationDocument,
};
use setsig::oracle::{random_signed_graph_seeded, verify_theorem_suite, SuiteConfig};
use setsig::valuation::{check_set_indexer, induce_signed_graph, GroundSet, IndexerVerdict, SetValuation};

#[derive(Parser)]
#[command(
    name = "setsig",
    version,
    about = "Signed graphs with set-valued vertex labelings",
    after_help = "Graph and valuation files may be given as '-' to read standard input."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Scheme {
    /// Singleton labels over {1..n}; ignores signs, induces all-positive.
    Canonical,
    /// Labels whose induced signature reproduces the input signature;
    /// fails with a negative cycle on unbalanced input.
    Compatible,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a set-valuation for a graph
    Label {
        /// Signed edge-list file
        graph: String,
        #[arg(long, value_enum, default_value_t = Scheme::Canonical)]
        scheme: Scheme,
        /// Write to this file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
        /// Emit the valuation as JSON instead of flat text
        #[arg(long)]
        json: bool,
    },
    /// Induce a signed graph from a graph and a valuation
    Induce {
        /// Signed edge-list file (its signs are ignored; only the
        /// underlying graph matters)
        graph: String,
        /// Valuation document (text, or JSON if the name ends in .json)
        #[arg(long)]
        valuation: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check properties of a signed graph, printing certificates
    Check {
        /// Signed edge-list file
        graph: String,
        /// Balance: a bipartition cutting exactly the negative edges, or a
        /// negative cycle
        #[arg(long)]
        balance: bool,
        /// 2-clusterability (connected graphs only)
        #[arg(long)]
        two_cluster: bool,
        /// Whether the valuation is a set-indexer (needs --valuation)
        #[arg(long)]
        indexer: bool,
        /// Eulerian label-sum parity report (needs --valuation)
        #[arg(long)]
        eulerian_sum: bool,
        /// Valuation document for --indexer / --eulerian-sum
        #[arg(long)]
        valuation: Option<String>,
    },
    /// Run the brute-force theorem suite over exhaustive small families
    Verify {
        /// Largest vertex count in the family
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Ground-set size for the exhaustive valuations
        #[arg(long, default_value_t = 3)]
        max_m: u32,
        /// Cap on the number of instances
        #[arg(long, default_value_t = setsig::oracle::DEFAULT_SUITE_BUDGET)]
        budget: u64,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Generate random instances reproducibly
    Gen {
        #[command(subcommand)]
        what: GenCommand,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    /// Random signed graph on vertices v0..v{n-1}
    Graph {
        #[arg(long)]
        n: usize,
        /// Probability of each possible edge
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        /// Probability that an edge is negative
        #[arg(long, default_value_t = 0.5)]
        negative: f64,
        /// Seed for the ChaCha8 generator; same seed, same output
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random injective valuation for an existing graph
    Valuation {
        /// Signed edge-list file naming the vertices
        #[arg(long)]
        graph: String,
        /// Ground-set size m; needs 2^m >= n
        #[arg(long)]
        ground_size: u32,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Emit the valuation as JSON instead of flat text
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

const HOLDS: ExitCode = ExitCode::SUCCESS;
fn fails() -> ExitCode {
    ExitCode::from(1)
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .context("reading standard input")?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn write_output(out: Option<&Path>, content: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, content).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn load_graph(path: &str) -> Result<SignedGraphDoc> {
    let text = read_input(path)?;
    let doc = parse_signed_graph(&text).with_context(|| format!("parsing {path}"))?;
    if doc.duplicate_edges > 0 {
        eprintln!(
            "warning: {}: {} duplicate edge record(s) removed",
            path, doc.duplicate_edges
        );
    }
    let isolated = doc.signed.graph().isolated_vertices();
    if !isolated.is_empty() {
        let names: Vec<&str> = isolated.iter().map(|&v| doc.names.name(v)).collect();
        eprintln!("warning: {}: isolated vertices: {}", path, names.join(" "));
    }
    Ok(doc)
}

fn load_valuation(path: &str) -> Result<ValuationDocument> {
    let text = read_input(path)?;
    let doc = if path.ends_with(".json") {
        ValuationDocument::from_json(&text)
    } else {
        parse_valuation(&text)
    };
    doc.with_context(|| format!("parsing {path}"))
}

fn valuation_text(doc: &ValuationDocument, json: bool, out: Option<&Path>) -> String {
    let json_wanted = json
        || out
            .and_then(|p| p.extension())
            .is_some_and(|ext| ext == "json");
    if json_wanted {
        doc.to_json()
    } else {
        serialize_valuation(doc)
    }
}

fn cycle_names(cycle: &Cycle, names: &NameTable) -> String {
    cycle
        .vertices()
        .iter()
        .map(|&v| names.name(v))
        .collect::<Vec<_>>()
        .join(" ")
}

fn part_names(part: &[setsig::graph::VertexId], names: &NameTable) -> String {
    if part.is_empty() {
        return "(empty)".to_string();
    }
    part.iter()
        .map(|&v| names.name(v))
        .collect::<Vec<_>>()
        .join(" ")
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Label {
            graph,
            scheme,
            out,
            json,
        } => {
            let doc = load_graph(&graph)?;
            let valuation = match scheme {
                Scheme::Canonical => canonical_set_indexer(doc.signed.graph())
                    .map_err(|e| anyhow!("{e}"))?,
                Scheme::Compatible => match balance_compatible_labeling(&doc.signed) {
                    LabelingOutcome::Valuation(v) => v,
                    LabelingOutcome::Unbalanced(cycle) => {
                        println!(
                            "unbalanced: negative cycle {}",
                            cycle_names(&cycle, &doc.names)
                        );
                        return Ok(fails());
                    }
                },
            };
            let val_doc = ValuationDocument::from_valuation(&valuation, &doc.names);
            write_output(out.as_deref(), &valuation_text(&val_doc, json, out.as_deref()))?;
            Ok(HOLDS)
        }
        Command::Induce {
            graph,
            valuation,
            out,
        } => {
            let doc = load_graph(&graph)?;
            let val_doc = load_valuation(&valuation)?;
            let val = val_doc
                .to_valuation(&doc.names)
                .map_err(|e| anyhow!("{e}"))?;
            let induced = induce_signed_graph(doc.signed.graph(), &val)
                .map_err(|e| anyhow!("{e}"))?;
            write_output(out.as_deref(), &serialize_signed_graph(&induced, &doc.names))?;
            Ok(HOLDS)
        }
        Command::Check {
            graph,
            balance,
            two_cluster,
            indexer,
            eulerian_sum,
            valuation,
        } => {
            if !(balance || two_cluster || indexer || eulerian_sum) {
                bail!("no checks requested; pass --balance, --two-cluster, --indexer, or --eulerian-sum");
            }
            let doc = load_graph(&graph)?;
            let val = match (&valuation, indexer || eulerian_sum) {
                (Some(path), _) => {
                    let val_doc = load_valuation(path)?;
                    Some(val_doc.to_valuation(&doc.names).map_err(|e| anyhow!("{e}"))?)
                }
                (None, true) => {
                    bail!("--indexer and --eulerian-sum need --valuation <file>")
                }
                (None, false) => None,
            };

            let mut all_hold = true;
            if balance {
                all_hold &= report_balance(&doc);
            }
            if two_cluster {
                all_hold &= report_two_cluster(&doc)?;
            }
            if indexer {
                all_hold &= report_indexer(&doc, val.as_ref().unwrap())?;
            }
            if eulerian_sum {
                all_hold &= report_eulerian_sum(&doc, val.as_ref().unwrap())?;
            }
            Ok(if all_hold { HOLDS } else { fails() })
        }
        Command::Verify {
            max_n,
            max_m,
            budget,
            json,
        } => {
            let config = SuiteConfig {
                max_n,
                ground_size: max_m,
                budget,
            };
            let report = verify_theorem_suite(&config).map_err(|e| anyhow!("{e}"))?;
            if json {
                println!("{}", report.to_json());
            } else {
                println!("{report}");
            }
            Ok(if report.passed() { HOLDS } else { fails() })
        }
        Command::Gen { what } => match what {
            GenCommand::Graph {
                n,
                density,
                negative,
                seed,
                out,
            } => {
                if n == 0 {
                    bail!("--n must be at least 1");
                }
                for (flag, p) in [("--density", density), ("--negative", negative)] {
                    if !(0.0..=1.0).contains(&p) {
                        bail!("{flag} must be a probability in [0, 1]");
                    }
                }
                let sg = random_signed_graph_seeded(n, density, negative, seed);
                let names = NameTable::numbered(n);
                write_output(out.as_deref(), &serialize_signed_graph(&sg, &names))?;
                Ok(HOLDS)
            }
            GenCommand::Valuation {
                graph,
                ground_size,
                seed,
                out,
                json,
            } => {
                let doc = load_graph(&graph)?;
                let ground = GroundSet::new(ground_size).map_err(|e| anyhow!("{e}"))?;
                let val = random_valuation(doc.signed.graph(), ground, seed)
                    .map_err(|e| anyhow!("{e}"))?;
                let val_doc = ValuationDocument::from_valuation(&val, &doc.names);
                write_output(out.as_deref(), &valuation_text(&val_doc, json, out.as_deref()))?;
                Ok(HOLDS)
            }
        },
    }
}

fn report_balance(doc: &SignedGraphDoc) -> bool {
    match check_balance(&doc.signed) {
        BalanceVerdict::Balanced(bip) => {
            let (v1, v2) = bip.parts();
            println!("balance: balanced");
            println!("  V1: {}", part_names(&v1, &doc.names));
            println!("  V2: {}", part_names(&v2, &doc.names));
            true
        }
        BalanceVerdict::Unbalanced(cycle) => {
            println!("balance: unbalanced");
            println!("  negative cycle: {}", cycle_names(&cycle, &doc.names));
            false
        }
    }
}

fn report_two_cluster(doc: &SignedGraphDoc) -> Result<bool> {
    match check_two_clusterable(&doc.signed) {
        Ok(ClusterVerdict::Clusterable(cert)) => {
            println!("two-cluster: clusterable");
            println!("  U1: {}", part_names(&cert.clusters.0, &doc.names));
            println!("  U2: {}", part_names(&cert.clusters.1, &doc.names));
            Ok(true)
        }
        Ok(ClusterVerdict::AllPositive) => {
            println!("two-cluster: not clusterable (all edges positive)");
            Ok(false)
        }
        Ok(ClusterVerdict::Unbalanced(cycle)) => {
            println!("two-cluster: not clusterable (unbalanced)");
            println!("  negative cycle: {}", cycle_names(&cycle, &doc.names));
            Ok(false)
        }
        Err(AnalysisError::Disconnected) => bail!("--two-cluster needs a connected graph"),
        Err(e) => bail!("{e}"),
    }
}

fn report_indexer(doc: &SignedGraphDoc, val: &SetValuation) -> Result<bool> {
    match check_set_indexer(doc.signed.graph(), val).map_err(|e| anyhow!("{e}"))? {
        IndexerVerdict::Indexer => {
            println!("indexer: yes (all induced edge labels distinct)");
            Ok(true)
        }
        IndexerVerdict::EdgeLabelCollision { first, second } => {
            let (a, b) = first.endpoints();
            let (c, d) = second.endpoints();
            let label = val
                .induced_edge_label(doc.signed.graph(), first)
                .map_err(|e| anyhow!("{e}"))?;
            println!("indexer: no");
            println!(
                "  edges {} {} and {} {} share label {}",
                doc.names.name(a),
                doc.names.name(b),
                doc.names.name(c),
                doc.names.name(d),
                label
            );
            Ok(false)
        }
    }
}

fn print_label_sum(report: &LabelSumReport, names: &NameTable) {
    println!(
        "eulerian-sum: total {} ({})",
        report.total,
        if report.total_is_even() { "even" } else { "odd" }
    );
    for c in &report.cycles {
        println!(
            "  cycle {}: sum {} ({} positive, {} negative edges)",
            cycle_names(&c.cycle, names),
            c.sum,
            c.positive_edges,
            c.negative_edges
        );
    }
}

fn report_eulerian_sum(doc: &SignedGraphDoc, val: &SetValuation) -> Result<bool> {
    match eulerian_label_sum(doc.signed.graph(), val) {
        Ok(report) => {
            print_label_sum(&report, &doc.names);
            Ok(report.total_is_even() && report.all_cycle_sums_even())
        }
        Err(AnalysisError::NotEulerian) => bail!("--eulerian-sum needs an Eulerian graph"),
        Err(AnalysisError::NotSetIndexer { first, second }) => {
            let (a, b) = first.endpoints();
            let (c, d) = second.endpoints();
            bail!(
                "--eulerian-sum needs a set-indexer; edges {} {} and {} {} share a label",
                doc.names.name(a),
                doc.names.name(b),
                doc.names.name(c),
                doc.names.name(d)
            )
        }
        Err(e) => bail!("{e}"),
    }
}
