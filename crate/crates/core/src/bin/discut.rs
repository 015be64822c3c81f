use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use discut::arcs::{self, ArcModel, Recognition};
use discut::error::Error;
use discut::files::{
    parse_arcs, parse_instance, partition_from_document, result_document, write_arcs,
    write_instance, ResultDocument,
};
use discut::graph::Graph;
use discut::hfree;
use discut::linegraph;
use discut::oracle::{check_partition, generate, oracle_disconnected_cut, GeneratorKind, GeneratorSpec};
use discut::pattern::{self, PatternId};
use discut::pipeline::{self, Budgets};
use discut::reductions::ReductionTrace;
use discut::verdict::{Answer, Verdict};

#[derive(Parser)]
#[command(name = "discut", version, about = "Exact solver for the Disconnected Cut problem")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether the input graph has a disconnected cut.
    Solve {
        /// Instance file: `n m` header plus m `u v` edge lines.
        #[arg(long)]
        input: PathBuf,
        /// Optional circular-arc model file for the input graph.
        #[arg(long)]
        arcs: Option<PathBuf>,
        /// Solver route: auto, triangle-free, paw-free, copaw-free,
        /// diamond-free, 2p2-free, p4-free, small-independence, clawfree,
        /// circular-arc, line, oracle.
        #[arg(long, default_value = "auto")]
        class: String,
        /// Max subsets the exponential oracle may examine.
        #[arg(long)]
        budget: Option<u64>,
        /// Max node expansions for arc-model recognition.
        #[arg(long)]
        recognition_budget: Option<u64>,
        /// Emit the result document as JSON.
        #[arg(long)]
        json: bool,
        /// Re-verify the emitted certificate through the document encoding.
        #[arg(long)]
        certify: bool,
    },
    /// Check a result document's partition against an instance.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Emit a deterministic generated instance on standard output.
    Gen {
        /// gnp, line-of-random, proper-circular-arc,
        /// complement-of-triangle-free, wjoin-gadget.
        #[arg(long)]
        model: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        /// Write the arc model here instead of commenting it into stdout.
        #[arg(long)]
        arcs_out: Option<PathBuf>,
    },
    /// Run the exponential oracle directly.
    Oracle {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
    },
}

fn exit_for(e: &Error) -> u8 {
    match e {
        Error::InvalidInput(_) | Error::Precondition(_) | Error::OutOfScope(_) => 2,
        Error::Internal(_) => 4,
    }
}

fn read_file(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))
}

fn require_free(g: &Graph, p: PatternId) -> Result<(), Error> {
    if let Some(w) = pattern::find_induced_pattern(g, p) {
        return Err(Error::invalid(format!(
            "input is not {}-free: induced copy at {:?}",
            p.name(),
            w
        )));
    }
    Ok(())
}

struct Solved {
    verdict: Verdict,
    route: String,
    trace: Option<ReductionTrace>,
}

fn route_solve(
    g: &Graph,
    class: &str,
    budgets: &Budgets,
    user_arcs: Option<&ArcModel>,
) -> Result<Solved, Error> {
    let plain = |verdict: Verdict, route: &str| Solved {
        verdict,
        route: route.to_string(),
        trace: None,
    };
    Ok(match class {
        "auto" => {
            let out = pipeline::solve_auto_with_arcs(g, budgets, user_arcs)?;
            Solved {
                verdict: out.verdict,
                route: out.route,
                trace: Some(out.trace),
            }
        }
        "clawfree" => {
            let out = pipeline::solve_claw_free_with_arcs(g, budgets, user_arcs)?;
            Solved {
                verdict: out.verdict,
                route: format!("clawfree/{}", out.route),
                trace: Some(out.trace),
            }
        }
        "oracle" => plain(oracle_disconnected_cut(g, budgets.oracle_subsets)?, "oracle"),
        "triangle-free" => {
            require_free(g, PatternId::C3)?;
            plain(hfree::solve_triangle_free(g)?, "triangle-free")
        }
        "paw-free" => {
            require_free(g, PatternId::Paw)?;
            plain(hfree::solve_paw_free(g)?, "paw-free")
        }
        "copaw-free" => {
            require_free(g, PatternId::P1P3)?;
            plain(
                hfree::solve_copaw_free(g, budgets.oracle_subsets)?,
                "copaw-free",
            )
        }
        "diamond-free" => {
            require_free(g, PatternId::Diamond)?;
            plain(hfree::solve_diamond_free(g)?, "diamond-free")
        }
        "2p2-free" => {
            require_free(g, PatternId::TwoP2)?;
            plain(hfree::solve_2p2_free(g)?, "2p2-free")
        }
        "p4-free" => {
            require_free(g, PatternId::P4)?;
            plain(hfree::solve_p4_free(g)?, "p4-free")
        }
        "small-independence" => {
            if let Some(w) = g.independence_exceeds_three() {
                return Err(Error::invalid(format!(
                    "independence number exceeds 3: witness {w:?}"
                )));
            }
            plain(
                hfree::solve_small_independence(g, budgets.oracle_subsets)?,
                "small-independence",
            )
        }
        "line" => plain(linegraph::solve_line_graph(g)?, "line"),
        "circular-arc" => {
            let model = match user_arcs {
                Some(m) => m.clone(),
                None => match arcs::recognize_arcs(g, budgets.recognition_expansions) {
                    Recognition::Model(m) => m,
                    Recognition::NotCircularArc => {
                        return Err(Error::invalid("input is not a circular-arc graph"))
                    }
                    Recognition::Unresolved => {
                        return Ok(plain(Verdict::unresolved(), "circular-arc"))
                    }
                },
            };
            plain(arcs::solve_circular_arc(g, &model)?, "circular-arc")
        }
        other => {
            return Err(Error::invalid(format!(
                "unknown class {other:?}; see --help for the list"
            )))
        }
    })
}

/// Writes a line to stdout, exiting quietly if the pipe closed.
fn emit(text: std::fmt::Arguments<'_>) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if out.write_fmt(text).is_err() || out.write_all(b"\n").is_err() {
        std::process::exit(0);
    }
}

macro_rules! emitln {
    ($($arg:tt)*) => { emit(format_args!($($arg)*)) };
}

fn print_document(doc: &ResultDocument, json: bool) {
    if json {
        emitln!("{}", serde_json::to_string_pretty(doc).unwrap());
        return;
    }
    emitln!("answer: {}", doc.answer);
    emitln!("reason: {}", doc.reason);
    emitln!("class: {}", doc.class);
    if let Some(parts) = &doc.partition {
        for (i, part) in parts.iter().enumerate() {
            let items: Vec<String> = part.iter().map(|v| v.to_string()).collect();
            emitln!("V{}: {}", i + 1, items.join(" "));
        }
    }
    if !doc.trace.is_empty() {
        emitln!("reductions: {}", doc.trace.len());
    }
    let d = doc
        .stats
        .diameter
        .map(|d| d.to_string())
        .unwrap_or_else(|| "inf".to_string());
    emitln!(
        "stats: n={} m={} diameter={} elapsed-ms={}",
        doc.stats.n, doc.stats.m, d, doc.stats.elapsed_ms
    );
}

fn answer_exit(v: &Verdict) -> u8 {
    match v.answer {
        Answer::Yes | Answer::No => 0,
        Answer::Unresolved => 3,
    }
}

fn run() -> Result<u8, Error> {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Solve {
            input,
            arcs: arcs_path,
            class,
            budget,
            recognition_budget,
            json,
            certify,
        } => {
            let g = parse_instance(&read_file(&input)?)?;
            let mut budgets = Budgets::default();
            if let Some(b) = budget {
                budgets.oracle_subsets = b;
            }
            if let Some(b) = recognition_budget {
                budgets.recognition_expansions = b;
            }
            let model = match arcs_path {
                Some(p) => {
                    let m = parse_arcs(&read_file(&p)?)?;
                    if let Err((u, v)) = arcs::validate_arc_model(&g, &m)? {
                        return Err(Error::invalid(format!(
                            "arc model disagrees with the graph at pair ({u},{v})"
                        )));
                    }
                    Some(m)
                }
                None => None,
            };
            let started = Instant::now();
            let solved = route_solve(&g, &class, &budgets, model.as_ref())?;
            let elapsed = started.elapsed().as_millis() as u64;
            if let Some(cert) = &solved.verdict.certificate {
                check_partition(&g, cert)
                    .map_err(|e| Error::internal(format!("unverified certificate: {e}")))?;
            }
            let doc = result_document(
                &g,
                &solved.verdict,
                &solved.route,
                solved.trace.as_ref(),
                elapsed,
            );
            if certify && doc.answer == "yes" {
                let p = partition_from_document(&g, &doc)?;
                check_partition(&g, &p).map_err(|e| {
                    Error::internal(format!("document certificate failed re-verification: {e}"))
                })?;
            }
            print_document(&doc, json);
            Ok(answer_exit(&solved.verdict))
        }
        Cmd::Verify { input, certificate } => {
            let g = parse_instance(&read_file(&input)?)?;
            let doc: ResultDocument = serde_json::from_str(&read_file(&certificate)?)
                .map_err(|e| Error::invalid(format!("bad certificate document: {e}")))?;
            let p = partition_from_document(&g, &doc)?;
            match check_partition(&g, &p) {
                Ok(()) => {
                    emitln!("certificate: valid");
                    Ok(0)
                }
                Err(v) => {
                    emitln!("certificate: INVALID ({v})");
                    Ok(1)
                }
            }
        }
        Cmd::Gen {
            model,
            n,
            seed,
            density,
            arcs_out,
        } => {
            let kind = GeneratorKind::parse(&model)
                .ok_or_else(|| Error::invalid(format!("unknown generator kind {model:?}")))?;
            let spec = GeneratorSpec::new(kind, n, density, seed);
            let (g, arc_model) = generate(&spec)?;
            emit(format_args!("{}", write_instance(&g).trim_end()));
            if let Some(m) = arc_model {
                match arcs_out {
                    Some(path) => std::fs::write(&path, write_arcs(&m))
                        .map_err(|e| Error::invalid(format!("cannot write {}: {e}", path.display())))?,
                    None => {
                        emitln!("#--- arcs");
                        for line in write_arcs(&m).lines() {
                            emitln!("# {line}");
                        }
                    }
                }
            }
            Ok(0)
        }
        Cmd::Oracle { input, budget, json } => {
            let g = parse_instance(&read_file(&input)?)?;
            let b = budget.unwrap_or(Budgets::default().oracle_subsets);
            let started = Instant::now();
            let verdict = oracle_disconnected_cut(&g, b)?;
            let elapsed = started.elapsed().as_millis() as u64;
            let doc = result_document(&g, &verdict, "oracle", None, elapsed);
            print_document(&doc, json);
            Ok(answer_exit(&verdict))
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_for(&e))
        }
    }
}
