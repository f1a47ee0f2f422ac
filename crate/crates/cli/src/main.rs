//! `jaco`: build linear Jaco graphs, compute Gutman indices and audit the
//! recursion and edge-joint formulas.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain or computation error.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use jaco_core::export::{self, ExportFormat};
use jaco_core::sequences::{self, SequenceKind};
use jaco_core::{joint, recursion, Error, JacoGraph, LinearFunction};

#[derive(Parser)]
#[command(
    name = "jaco",
    version,
    about = "Linear Jaco graphs and their Gutman index"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FunctionArgs {
    /// Slope m of f(x) = mx + c
    #[arg(long, default_value_t = 1)]
    m: u64,
    /// Intercept c of f(x) = mx + c
    #[arg(long, default_value_t = 0)]
    c: u64,
    /// Order n of J_n(f)
    #[arg(long)]
    n: usize,
}

impl FunctionArgs {
    fn build(&self) -> Result<JacoGraph, Failure> {
        JacoGraph::build(LinearFunction::new(self.m, self.c), self.n).map_err(Failure::Domain)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the arcs of J_n(f)
    Build {
        #[command(flatten)]
        f: FunctionArgs,
        #[arg(long, default_value = "json")]
        format: ExportFormat,
        /// Emit DOT arcs (->) instead of undirected edges
        #[arg(long)]
        directed: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print Gut(J*_n(f))
    Gutman {
        #[command(flatten)]
        f: FunctionArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the Wiener index of J*_n(f)
    Wiener {
        #[command(flatten)]
        f: FunctionArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the stated and exact recursions with Gut(J*_{n+1}(x))
    RecursionCheck {
        #[arg(long, default_value_t = 50)]
        n_max: usize,
        #[arg(long, default_value = "csv")]
        format: ExportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Gutman index of the edge-joint J*_n(x) ~ J*_m(x) bridged at v_vi u_uj
    Joint {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        vi: usize,
        #[arg(long, default_value_t = 1)]
        uj: usize,
        #[arg(long, default_value = "csv")]
        format: ExportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate invariant sequences of J_n(x) for n = 1..=n_max
    Sequences {
        /// Comma-separated: edges, gutman, jaconian_cardinality, v1_vn_distance
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "edges,gutman,jaconian_cardinality,v1_vn_distance"
        )]
        which: Vec<SequenceKind>,
        #[arg(long, default_value_t = 30)]
        n_max: usize,
        #[arg(long, default_value = "csv")]
        format: ExportFormat,
        /// Directory receiving one file per sequence
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Full audit report for both formulas
    Erratum {
        #[arg(long, default_value_t = 30)]
        n_max: usize,
        #[arg(long, default_value_t = 20)]
        m_max: usize,
        /// Seed for the non-trivial anchor sample
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Non-trivial anchor pairs drawn per (n, m)
        #[arg(long, default_value_t = 5)]
        anchors: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
    /// Report was produced but an exact value disagreed with the oracle.
    Mismatch(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn no_dot(format: ExportFormat, command: &str) -> Result<(), Failure> {
    if format == ExportFormat::Dot {
        Err(Failure::Usage(format!(
            "{command} does not support --format dot"
        )))
    } else {
        Ok(())
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Build {
            f,
            format,
            directed,
            out,
        } => {
            let j = f.build()?;
            emit(out.as_deref(), &export::render_graph(&j, format, directed))
        }
        Command::Gutman { f, out } => {
            let j = f.build()?;
            let value = j.underlying().gutman_index().map_err(Failure::Domain)?;
            emit(out.as_deref(), &format!("{value}\n"))
        }
        Command::Wiener { f, out } => {
            let j = f.build()?;
            let value = j.underlying().wiener_index().map_err(Failure::Domain)?;
            emit(out.as_deref(), &format!("{value}\n"))
        }
        Command::RecursionCheck { n_max, format, out } => {
            no_dot(format, "recursion-check")?;
            if n_max < 2 {
                return Err(Failure::Usage("--n-max must be at least 2".into()));
            }
            let rows = recursion::recursion_delta_report(n_max).map_err(Failure::Domain)?;
            let text = match format {
                ExportFormat::Json => export::recursion_json(&rows),
                _ => export::recursion_csv(&rows),
            };
            emit(out.as_deref(), &text)?;
            match rows.iter().find(|r| !r.exact_matches_direct()) {
                Some(r) => Err(Failure::Mismatch(format!(
                    "exact recursion disagrees with direct value at n = {}",
                    r.n
                ))),
                None => Ok(()),
            }
        }
        Command::Joint {
            n,
            m,
            vi,
            uj,
            format,
            out,
        } => {
            no_dot(format, "joint")?;
            if n < 2 || m < 2 {
                return Err(Failure::Usage("--n and --m must be at least 2".into()));
            }
            if vi == 0 || vi > n || uj == 0 || uj > m {
                return Err(Failure::Usage(format!(
                    "anchors must satisfy 1 <= vi <= {n} and 1 <= uj <= {m}"
                )));
            }
            let t = joint::joint_trace(n, m, vi, uj).map_err(Failure::Domain)?;
            let text = match format {
                ExportFormat::Json => export::joint_json(&t),
                _ => export::joint_csv(&t),
            };
            emit(out.as_deref(), &text)?;
            if t.closed_matches_direct() {
                Ok(())
            } else {
                Err(Failure::Mismatch(
                    "closed form disagrees with direct value".into(),
                ))
            }
        }
        Command::Sequences {
            which,
            n_max,
            format,
            out,
        } => {
            no_dot(format, "sequences")?;
            if n_max == 0 {
                return Err(Failure::Usage("--n-max must be at least 1".into()));
            }
            let tables = which
                .iter()
                .map(|&k| sequences::tabulate(k, LinearFunction::IDENTITY, n_max))
                .collect::<Result<Vec<_>, _>>()
                .map_err(Failure::Domain)?;
            match (out, format) {
                (Some(dir), _) => {
                    fs::create_dir_all(&dir)?;
                    for t in &tables {
                        let (ext, text) = match format {
                            ExportFormat::Json => {
                                ("json", export::sequences_json(std::slice::from_ref(t)))
                            }
                            _ => ("csv", export::sequence_csv(t)),
                        };
                        fs::write(dir.join(format!("{}.{ext}", t.name)), text)?;
                    }
                    Ok(())
                }
                (None, ExportFormat::Json) => emit(None, &export::sequences_json(&tables)),
                (None, _) if tables.len() == 1 => emit(None, &export::sequence_csv(&tables[0])),
                (None, _) => {
                    let sections: Vec<String> = tables
                        .iter()
                        .map(|t| format!("# {}\n{}", t.name, export::sequence_csv(t)))
                        .collect();
                    emit(None, &sections.join("\n"))
                }
            }
        }
        Command::Erratum {
            n_max,
            m_max,
            seed,
            anchors,
            out,
        } => {
            if n_max < 2 || m_max < 2 {
                return Err(Failure::Usage(
                    "--n-max and --m-max must be at least 2".into(),
                ));
            }
            let rec = recursion::recursion_delta_report(n_max).map_err(Failure::Domain)?;
            let trivial = joint::joint_delta_report(n_max, m_max).map_err(Failure::Domain)?;
            let sampled = joint::nontrivial_anchor_report(n_max, m_max, anchors, seed)
                .map_err(Failure::Domain)?;
            let text = export::erratum_csv(&rec, &trivial, &sampled).map_err(Failure::Domain)?;
            emit(out.as_deref(), &text)?;
            let rec_ok = rec.iter().all(|r| r.exact_matches_direct());
            let joint_ok = trivial
                .iter()
                .chain(&sampled)
                .all(|t| t.closed_matches_direct());
            if rec_ok && joint_ok {
                Ok(())
            } else {
                Err(Failure::Mismatch(
                    "an exact or closed-form value disagreed with the direct value".into(),
                ))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(Error::DisconnectedGraph)) => {
            eprintln!(
                "error: DisconnectedGraph: the underlying graph is disconnected and the \
                 Gutman index is only defined for connected graphs (linear Jaco graphs \
                 need m >= 1 to be connected)"
            );
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
