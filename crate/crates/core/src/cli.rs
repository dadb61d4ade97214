//! The `surfsep` command line.
//!
//! Exit status: 0 on success, 1 when `verify` rejects a certificate, 2 on
//! usage errors and unmet preconditions. Diagnostics go to the error stream.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{bounds_report, BoundsError};
use crate::constructions::{construct_lower_bound, ConstructionError, ConstructionSpec};
use crate::embedding::{sem1, EmbeddedMultigraph, EmbeddingError};
use crate::generators::{grow_random, triangulate, GeneratorError, GrowthSpec, Strategy, Surface};
use crate::separator::{separate, verify_certificate, Certificate, SeparatorConfig, SeparatorError};

#[derive(Debug, Parser)]
#[command(name = "surfsep", version, about = "Separators for graphs embedded in surfaces")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Grow a random triangulation of a built-in surface and print it as SEM1.
    Gen {
        #[arg(long)]
        surface: Surface,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        /// Write here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Triangulate every face of an embedding.
    Triangulate {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value = "ear")]
        strategy: Strategy,
        /// Write the ids of added vertices here as JSON.
        #[arg(long)]
        aux_out: Option<PathBuf>,
    },
    /// Compute an ℓ-separator and write its certificate.
    Separate {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        cert: PathBuf,
        /// Auxiliary-vertex file written by `triangulate --aux-out`.
        #[arg(long)]
        aux: Option<PathBuf>,
        /// BFS root; a center vertex by default.
        #[arg(long)]
        root: Option<usize>,
    },
    /// Re-check a certificate against a graph.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        cert: PathBuf,
    },
    /// Degree–diameter bounds for Euler genus g.
    Bounds {
        #[arg(long)]
        genus: u64,
        #[arg(long)]
        delta: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        json: bool,
    },
    /// Build the complete-graph-plus-trees graph for odd k.
    Construct {
        #[arg(long)]
        genus: u64,
        #[arg(long)]
        delta: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        out: PathBuf,
        /// Embedded complete graph to use instead of the built-in one.
        #[arg(long)]
        kp: Option<PathBuf>,
    },
    /// Print order, size, genus, max degree, diameter and radius.
    Metrics {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Sem1 {
        path: PathBuf,
        source: sem1::Sem1Error,
    },
    #[error("{}: {source}", path.display())]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error(transparent)]
    Separator(#[from] SeparatorError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error("writing output: {0}")]
    Output(#[from] std::io::Error),
}

#[derive(Debug, Serialize, Deserialize)]
struct AuxiliaryFile {
    auxiliary: Vec<usize>,
}

#[derive(Debug, Serialize)]
struct MetricsOutput {
    n: usize,
    m: usize,
    g: usize,
    max_degree: usize,
    diameter: usize,
    radius: usize,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(config.command, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn read_graph(path: &Path) -> Result<EmbeddedMultigraph, CliError> {
    sem1::read(&read_text(path)?).map_err(|source| CliError::Sem1 {
        path: path.to_owned(),
        source,
    })
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    serde_json::from_str(&read_text(path)?).map_err(|source| CliError::Json {
        path: path.to_owned(),
        source,
    })
}

fn execute(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Gen {
            surface,
            n,
            seed,
            out,
        } => {
            let graph = grow_random(&GrowthSpec::new(surface, n, seed))?;
            let text = sem1::write(&graph);
            match out {
                Some(path) => write_text(&path, &text)?,
                None => stdout.write_all(text.as_bytes())?,
            }
        }
        Command::Triangulate {
            input,
            out,
            strategy,
            aux_out,
        } => {
            let graph = read_graph(&input)?;
            let result = triangulate(&graph, strategy)?;
            write_text(&out, &sem1::write(&result.graph))?;
            if let Some(path) = aux_out {
                let aux = AuxiliaryFile {
                    auxiliary: result.auxiliary.iter().copied().collect(),
                };
                write_text(&path, &(serde_json::to_string(&aux).unwrap() + "\n"))?;
            }
            writeln!(
                stderr,
                "triangulated: {} vertices ({} added), {} edges",
                result.graph.vertex_count(),
                result.auxiliary.len(),
                result.graph.edge_count()
            )?;
        }
        Command::Separate {
            input,
            ell,
            cert,
            aux,
            root,
        } => {
            let graph = read_graph(&input)?;
            let mut config = SeparatorConfig::new(ell);
            config.root = root;
            if let Some(path) = aux {
                let file: AuxiliaryFile = read_json(&path)?;
                config.auxiliary = file.auxiliary.into_iter().collect::<BTreeSet<_>>();
            }
            let run = separate(&graph, &config)?;
            let c = &run.certificate;
            write_text(&cert, &c.to_json())?;
            writeln!(
                stdout,
                "|E(S)| = {}, faces = {}, interiors = {:?}, threshold = {}/{}",
                c.separator_edges.len(),
                c.faces.len(),
                c.faces.iter().map(|f| f.interior_count).collect::<Vec<_>>(),
                c.threshold_num,
                c.threshold_den
            )?;
        }
        Command::Verify { input, cert } => {
            let graph = read_graph(&input)?;
            let cert: Certificate = read_json(&cert)?;
            let report = verify_certificate(&graph, &cert);
            write!(stdout, "{report}")?;
            if !report.passed() {
                return Ok(1);
            }
        }
        Command::Bounds {
            genus,
            delta,
            k,
            json,
        } => {
            let r = bounds_report(genus, delta, k)?;
            if json {
                stdout.write_all(r.to_json().as_bytes())?;
            } else {
                writeln!(stdout, "g = {}, Δ = {}, k = {} ({:?})", r.g, r.delta, r.k, r.parity)?;
                writeln!(stdout, "Moore bound M(Δ,k) = {}", r.moore_k)?;
                writeln!(stdout, "(ℓ, c) = ({}, {})", r.ell, r.c)?;
                writeln!(stdout, "upper bound: |V| < {}", r.thm_main_upper)?;
                writeln!(
                    stdout,
                    "headline shape: {} when {}{}",
                    r.headline_shape,
                    r.headline_precondition,
                    if r.preconditions_possibly_unmet {
                        " (possibly unmet)"
                    } else {
                        ""
                    }
                )?;
                if let (Some(p), Some(lower), Some(order)) =
                    (r.p, &r.eq2_lower_formula, &r.construction_order)
                {
                    writeln!(stdout, "lower bound with K_{p}: {lower} (construction order {order})")?;
                }
            }
        }
        Command::Construct {
            genus,
            delta,
            k,
            out,
            kp,
        } => {
            let mut spec = ConstructionSpec::builtin(genus, delta, k);
            if let Some(path) = kp {
                spec.clique = Some(read_graph(&path)?);
            }
            let c = construct_lower_bound(&spec)?;
            write_text(&out, &sem1::write(&c.graph))?;
            write!(stdout, "{}", c.report)?;
        }
        Command::Metrics { input, json } => {
            let graph = read_graph(&input)?;
            let m = graph.metrics()?;
            let out = MetricsOutput {
                n: graph.vertex_count(),
                m: graph.edge_count(),
                g: graph.euler_genus()?,
                max_degree: m.max_degree,
                diameter: m.diameter,
                radius: m.radius,
            };
            if json {
                writeln!(stdout, "{}", serde_json::to_string(&out).unwrap())?;
            } else {
                writeln!(stdout, "n {}", out.n)?;
                writeln!(stdout, "m {}", out.m)?;
                writeln!(stdout, "g {}", out.g)?;
                writeln!(stdout, "max_degree {}", out.max_degree)?;
                writeln!(stdout, "diameter {}", out.diameter)?;
                writeln!(stdout, "radius {}", out.radius)?;
            }
        }
    }
    Ok(0)
}
