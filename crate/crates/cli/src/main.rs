//! `dsgraph`: construct graphs, compute exact and floating spectra, run
//! cospectral censuses and reproduce the kite DS results.
//!
//! Graphs travel between verbs as graph6 lines on stdin/stdout; reports are
//! JSON. Exit status: 0 success (DS, all PASS), 1 a negative answer (mates
//! found, a FAIL), 2 an error.

use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use dsgraph::census::{
    kites_of_order, Census, CensusOptions, DsVerdict, CACHE_DIR_ENV, DEFAULT_CACHE_DIR,
};
use dsgraph::exact::{
    charpoly, charpoly_pendant_recurrence, discriminant, verify_line_identity,
    verify_subdivision_identity, MatrixKind,
};
use dsgraph::graph::{make_family, Family};
use dsgraph::reproduce::{ReproduceOptions, Reproducer, CLAIMS, DEFAULT_SEED};
use dsgraph::spectra::eigenvalues;
use dsgraph::structure::{
    clique_number, is_smith, root_graph_search, triangle_count, ROOT_SEARCH_CAP, STRUCTURE_CAP,
};
use dsgraph::transforms::{generalized_line_graph, line_graph_simple, subdivision};
use dsgraph::Graph;

#[derive(Parser, Debug)]
#[command(
    name = "dsgraph",
    version,
    about = "Exact spectral characterization of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a named family member as graph6, e.g. `kite:p=5,q=3`.
    ///
    /// Families: path:n, cycle:n, complete:n, star:k, kite:p,q, lollipop:n,p,
    /// double_kite:p,q, starlike:l=l1,l2,..., smith_d:n, smith_e6, smith_e7,
    /// smith_e8.
    Make { spec: String },

    /// Transform each graph6 line on stdin and print the result as graph6.
    Transform {
        #[arg(value_enum)]
        op: TransformOp,
        /// Petal counts per vertex, comma separated (gline only).
        #[arg(long, value_delimiter = ',')]
        petals: Vec<usize>,
    },

    /// Exact characteristic polynomial of each input graph.
    ///
    /// Output: one line per graph, coefficients in ascending degree order,
    /// space separated, exact decimal integers.
    Charpoly {
        #[arg(long, default_value = "adjacency", value_parser = parse_kind)]
        kind: MatrixKind,
    },

    /// Floating-point eigenvalues of each input graph.
    ///
    /// Output: eigenvalues in descending order, one per line, with 15
    /// significant digits; values within the error bound of zero print as 0.
    /// Graphs are separated by a blank line.
    Spectrum {
        #[arg(long, default_value = "adjacency", value_parser = parse_kind)]
        kind: MatrixKind,
    },

    /// One JSON object per input graph: n, m, triangles, clique_number,
    /// discriminant, lambda1, lambda2, lambda_min, is_smith,
    /// root_classification.
    ///
    /// Eigenvalues are JSON floats; the discriminant is an exact integer
    /// (a string when it exceeds 64 bits). Fields that do not apply (lambda2
    /// on one vertex, is_smith on a disconnected graph, roots above 12
    /// vertices) are null.
    Analyze,

    /// Check an identity on each input graph; prints `PASS <graph6>` or
    /// `FAIL <graph6>` per line.
    Verify {
        #[arg(value_enum)]
        identity: Identity,
    },

    /// Exhaustive census of order n as a JSON report: nontrivial cospectral
    /// classes (exact polynomial, ascending coefficients, member graph6) and
    /// DS verdicts for the query graphs (by default every kite of order n).
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "adjacency", value_parser = parse_kind)]
        kind: MatrixKind,
        /// Only connected graphs count as members and mates.
        #[arg(long)]
        connected: bool,
        /// Extra graph6 query graph; repeatable. Replaces the kite default.
        #[arg(long)]
        query: Vec<String>,
        #[command(flatten)]
        engine: EngineArgs,
    },

    /// Decide whether each input graph is determined by its spectrum.
    ///
    /// Prints `DS`, or the cospectral mates as graph6 lines. Exit status 0
    /// when every input is DS, 1 when mates were found.
    DsCheck {
        #[arg(long, default_value = "adjacency", value_parser = parse_kind)]
        kind: MatrixKind,
        #[arg(long)]
        connected: bool,
        #[command(flatten)]
        engine: EngineArgs,
    },

    /// Run the reproduction suite and print a PASS/FAIL table.
    ///
    /// Columns: claim id, PASS or FAIL, seconds, detail. Exit status 1 if
    /// any claim fails.
    Reproduce {
        /// Run only these claims; repeatable. `--list` shows the ids.
        #[arg(long)]
        claim: Vec<String>,
        /// List claim ids with descriptions and exit.
        #[arg(long)]
        list: bool,
        /// Seed for the randomised graph sets.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        engine: EngineArgs,
    },
}

#[derive(clap::Args, Debug)]
struct EngineArgs {
    /// Worker threads for enumeration (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Directory for persisted census tables.
    #[arg(long, env = CACHE_DIR_ENV, default_value = DEFAULT_CACHE_DIR)]
    cache_dir: PathBuf,
    /// Keep census tables in memory only.
    #[arg(long)]
    no_cache: bool,
}

impl EngineArgs {
    fn options(&self) -> CensusOptions {
        CensusOptions {
            jobs: self.jobs,
            cache_dir: (!self.no_cache).then(|| self.cache_dir.clone()),
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TransformOp {
    Line,
    Subdivide,
    Gline,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Identity {
    #[value(name = "lemma2.3")]
    Line,
    #[value(name = "lemma2.4")]
    Subdivision,
    #[value(name = "lemma2.10")]
    Pendant,
}

fn parse_kind(s: &str) -> Result<MatrixKind, String> {
    s.parse().map_err(|e: dsgraph::Error| e.to_string())
}

/// Reads graph6 lines from stdin, skipping blank lines.
fn read_graphs() -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (i, line) in io::stdin().lock().lines().enumerate() {
        let line = line.context("reading stdin")?;
        if line.trim().is_empty() {
            continue;
        }
        let g = Graph::from_graph6(&line).with_context(|| format!("stdin line {}", i + 1))?;
        out.push(g);
    }
    if out.is_empty() {
        bail!("no graph6 input on stdin");
    }
    Ok(out)
}

/// `%.15g`-style formatting.
fn format_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.14e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let trim = |s: &str| {
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s.to_string()
        }
    };
    if (-4..15).contains(&exp) {
        trim(&format!("{:.*}", (14 - exp) as usize, x))
    } else {
        format!("{}e{exp}", trim(mantissa))
    }
}

fn json_line<T: Serialize>(out: &mut impl Write, v: &T) -> Result<()> {
    serde_json::to_writer(&mut *out, v)?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
struct Analysis {
    n: usize,
    m: usize,
    triangles: u64,
    clique_number: Option<usize>,
    discriminant: Value,
    lambda1: Option<f64>,
    lambda2: Option<f64>,
    lambda_min: Option<f64>,
    is_smith: Option<bool>,
    root_classification: Option<Vec<dsgraph::structure::Root>>,
}

fn analyze(g: &Graph) -> Result<Analysis> {
    let spectrum = eigenvalues(g, MatrixKind::Adjacency);
    let disc = discriminant(g)?;
    let discriminant = match i64::try_from(&disc) {
        Ok(d) => json!(d),
        Err(_) => json!(disc.to_string()),
    };
    Ok(Analysis {
        n: g.order(),
        m: g.size(),
        triangles: triangle_count(g),
        clique_number: if g.order() <= STRUCTURE_CAP {
            Some(clique_number(g)?)
        } else {
            None
        },
        discriminant,
        lambda1: spectrum.largest(),
        lambda2: spectrum.values.get(1).copied(),
        lambda_min: spectrum.smallest(),
        is_smith: if g.order() > 0 && g.is_connected() {
            Some(is_smith(g)?)
        } else {
            None
        },
        root_classification: if g.order() <= ROOT_SEARCH_CAP {
            Some(root_graph_search(g)?)
        } else {
            None
        },
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut code = ExitCode::SUCCESS;
    match cli.command {
        Command::Make { spec } => {
            let family: Family = spec.parse()?;
            writeln!(out, "{}", make_family(&family)?)?;
        }
        Command::Transform { op, petals } => {
            if !matches!(op, TransformOp::Gline) && !petals.is_empty() {
                bail!("--petals only applies to gline");
            }
            for g in read_graphs()? {
                let h = match op {
                    TransformOp::Line => line_graph_simple(&g),
                    TransformOp::Subdivide => subdivision(&g),
                    TransformOp::Gline => generalized_line_graph(&g, &petals)?,
                };
                writeln!(out, "{h}")?;
            }
        }
        Command::Charpoly { kind } => {
            for g in read_graphs()? {
                writeln!(out, "{}", charpoly(&g, kind)?.to_ascending_string())?;
            }
        }
        Command::Spectrum { kind } => {
            for (i, g) in read_graphs()?.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                let r = eigenvalues(g, kind);
                for &x in &r.values {
                    let x = if x.abs() <= r.err_bound { 0.0 } else { x };
                    writeln!(out, "{}", format_sig(x))?;
                }
            }
        }
        Command::Analyze => {
            for g in read_graphs()? {
                json_line(&mut out, &analyze(&g)?)?;
            }
        }
        Command::Verify { identity } => {
            for g in read_graphs()? {
                let holds = match identity {
                    Identity::Line => verify_line_identity(&g)?.holds,
                    Identity::Subdivision => verify_subdivision_identity(&g)?.holds,
                    Identity::Pendant => {
                        let pendants = g.pendant_vertices();
                        if pendants.is_empty() {
                            bail!("{g}: no pendant vertex");
                        }
                        let direct = charpoly(&g, MatrixKind::Adjacency)?;
                        pendants
                            .iter()
                            .map(|&x| charpoly_pendant_recurrence(&g, x))
                            .collect::<Result<Vec<_>, _>>()?
                            .iter()
                            .all(|p| *p == direct)
                    }
                };
                writeln!(out, "{} {g}", if holds { "PASS" } else { "FAIL" })?;
                if !holds {
                    code = ExitCode::from(1);
                }
            }
        }
        Command::Census {
            n,
            kind,
            connected,
            query,
            engine,
        } => {
            let queries = if query.is_empty() {
                kites_of_order(n)
            } else {
                query
                    .iter()
                    .map(|q| Graph::from_graph6(q).with_context(|| format!("--query {q}")))
                    .collect::<Result<_>>()?
            };
            let census = Census::new(engine.options())?;
            let report = census.cospectral_classes(n, kind, connected, &queries)?;
            serde_json::to_writer_pretty(&mut out, &report)?;
            writeln!(out)?;
        }
        Command::DsCheck {
            kind,
            connected,
            engine,
        } => {
            let graphs = read_graphs()?;
            let census = Census::new(engine.options())?;
            for g in graphs {
                match census.ds_check(&g, kind, connected)? {
                    DsVerdict::Ds => writeln!(out, "DS")?,
                    DsVerdict::Mates(mates) => {
                        code = ExitCode::from(1);
                        for m in mates {
                            writeln!(out, "{m}")?;
                        }
                    }
                }
            }
        }
        Command::Reproduce {
            claim,
            list,
            seed,
            engine,
        } => {
            if list {
                for (id, about) in CLAIMS {
                    writeln!(out, "{id:<22} {about}")?;
                }
                out.flush()?;
                return Ok(code);
            }
            let ids: Vec<&str> = if claim.is_empty() {
                CLAIMS.iter().map(|(id, _)| *id).collect()
            } else {
                for c in &claim {
                    if !CLAIMS.iter().any(|(id, _)| id == c) {
                        bail!("unknown claim '{c}' (see --list)");
                    }
                }
                claim.iter().map(String::as_str).collect()
            };
            let r = Reproducer::new(ReproduceOptions {
                seed,
                census: engine.options(),
            })?;
            for id in ids {
                let o = r.run(id)?;
                writeln!(
                    out,
                    "{:<22} {} {:>8.2}s  {}",
                    o.id,
                    if o.passed { "PASS" } else { "FAIL" },
                    o.seconds,
                    o.detail
                )?;
                out.flush()?;
                if !o.passed {
                    code = ExitCode::from(1);
                }
            }
        }
    }
    out.flush()?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("dsgraph: error: {e:#}");
            ExitCode::from(2)
        }
    }
}
