//! Command-line surface: construction, spectra, quotients, lifts,
//! verification suites, and plot-ready CSV.
//!
//! All state lives in flags; identical argv yields byte-identical output.
//! Data goes to stdout, diagnostics to stderr. Exit codes: 0 success,
//! 1 computation error, 2 usage error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use tokenspectra::cyclift::{
    asymptotic_eigs, even_4r2_base, f2_cycle_spectrum_detail, lift_spectrum, odd_cycle_base,
    PerRoot,
};
use tokenspectra::error::Error;
use tokenspectra::graph::{build_family, delete_vertex, laplacian, write_edge_list, Graph};
use tokenspectra::linalg::{eig_sym, Spectrum, DEFAULT_TOL, PRINTED_TOL};
use tokenspectra::partitions::{f2_cycle_partition, quotient_laplacian, PartitionShape};
use tokenspectra::token::{binomial, token_graph, DEFAULT_CAP};
use tokenspectra::verify::{run_suite, SuiteKind};

#[derive(Parser)]
#[command(
    name = "tokenspectra",
    version,
    about = "Laplacian spectra of k-token graphs: brute force, cyclic lifts, and over-lifts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Laplacian spectrum of the k-token graph of a named family
    Spectrum {
        /// Family spec, e.g. cycle:9, path:6, complete:5, star:7,
        /// complete_multipartite:2,2,3, odd:3, hypercube:4, petersen
        #[arg(long)]
        graph: String,
        /// Number of tokens
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Method::Brute)]
        method: Method,
        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        format: OutFormat,
        /// Cap on C(n,k) for the dense route
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Clustering tolerance recorded in the output
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Emit the k-token graph in edge-list text format (n m header, then i j lines)
    Token {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Algebraic connectivity alpha(F_k(G \ i))
    Alpha {
        #[arg(long)]
        graph: String,
        /// Token count applied after any deletion (default 1: the graph itself)
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Delete this vertex first
        #[arg(long)]
        delete: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Exact quotient Laplacian of a regular partition of F_2(C_n)
    Quotient {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        shape: ShapeArg,
    },
    /// Assemble spec L(F_2(C_n)) from the n small matrices
    Overlift {
        #[arg(long)]
        n: usize,
        /// Include the per-root eigenvalue lists
        #[arg(long)]
        per_r: bool,
    },
    /// Asymptotic closed-form eigenvalues for B*(r)
    Asympt {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        format: OutFormat,
    },
    /// Run the verification suites
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Tolerance against reference values printed to four decimals
        #[arg(long, default_value_t = PRINTED_TOL)]
        tol: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Dense eigensolve of the token-graph Laplacian
    Brute,
    /// Genuine lift base (cycles, k=2, n odd or n = 4r+2)
    Lift,
    /// Over-lift assembly (cycles, k=2, any n >= 4)
    Overlift,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum ShapeArg {
    Path,
    U,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    /// Reference tables: per-root spectra, quotients, endpoints, traces
    PaperTables,
    /// Cross-method equality sweeps and bound checks
    Invariants,
    All,
}

/// Canonical 12-significant-digit rendering; all emitted floatsround-trip
/// through this exact string, so CSV and JSON agree bit for bit.
fn fmt12(v: f64) -> String {
    format!("{:.11e}", v)
}

fn canon12(v: f64) -> f64 {
    fmt12(v).parse().expect("canonical float round-trip")
}

#[derive(Serialize)]
struct SpectrumOut {
    n: usize,
    tol: f64,
    values: Vec<f64>,
}

fn print_spectrum(s: &Spectrum, format: OutFormat, tol: f64) {
    match format {
        OutFormat::Json => {
            let out = SpectrumOut {
                n: s.len(),
                tol,
                values: s.values().iter().map(|&v| canon12(v)).collect(),
            };
            println!("{}", serde_json::to_string(&out).expect("serialize"));
        }
        OutFormat::Csv => {
            for (i, &v) in s.values().iter().enumerate() {
                println!("{i},{}", fmt12(v));
            }
        }
        OutFormat::Table => {
            println!("{:>22}  {:>12}", "eigenvalue", "multiplicity");
            for (value, mult) in s.clustered(tol) {
                println!("{:>22}  {:>12}", fmt12(value), mult);
            }
        }
    }
}

fn parse_cycle_n(spec: &str) -> Result<usize, Error> {
    match spec.split_once(':') {
        Some(("cycle", arg)) => arg
            .parse::<usize>()
            .ok()
            .filter(|&n| n >= 3)
            .ok_or_else(|| Error::InvalidFamily(spec.to_string())),
        _ => Err(Error::InvalidInput(format!(
            "method requires --graph cycle:n, got `{spec}`"
        ))),
    }
}

fn check_cap(g: &Graph, k: usize, cap: usize) -> Result<(), Error> {
    let size = binomial(g.n(), k);
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Spectrum {
            graph,
            k,
            method,
            format,
            cap,
            tol,
        } => {
            let spectrum = match method {
                Method::Brute => {
                    let g = build_family(&graph)?;
                    check_cap(&g, k, cap)?;
                    eig_sym(&laplacian(&token_graph(&g, k)?).to_dense())?
                }
                Method::Lift => {
                    let n = parse_cycle_n(&graph)?;
                    if k != 2 {
                        return Err(Error::InvalidInput("method lift supports k=2 only".into()));
                    }
                    if n % 2 == 1 {
                        lift_spectrum(&odd_cycle_base(n)?)?
                    } else if n % 4 == 2 {
                        lift_spectrum(&even_4r2_base(n)?)?
                    } else {
                        return Err(Error::InvalidInput(format!(
                            "no genuine lift base for n={n} (n divisible by 4); use --method overlift"
                        )));
                    }
                }
                Method::Overlift => {
                    let n = parse_cycle_n(&graph)?;
                    if k != 2 {
                        return Err(Error::InvalidInput(
                            "method overlift supports k=2 only".into(),
                        ));
                    }
                    tokenspectra::cyclift::f2_cycle_spectrum(n)?
                }
            };
            print_spectrum(&spectrum, format, tol);
        }
        Command::Token { graph, k, cap } => {
            let g = build_family(&graph)?;
            check_cap(&g, k, cap)?;
            let t = token_graph(&g, k)?;
            let stdout = std::io::stdout();
            write_edge_list(&t, stdout.lock())?;
        }
        Command::Alpha {
            graph,
            k,
            delete,
            cap,
        } => {
            let mut g = build_family(&graph)?;
            if let Some(i) = delete {
                g = delete_vertex(&g, i)?;
            }
            let g = if k == 1 {
                g
            } else {
                check_cap(&g, k, cap)?;
                token_graph(&g, k)?
            };
            let alpha = tokenspectra::token::algebraic_connectivity(&g)?;
            println!("{}", fmt12(alpha));
        }
        Command::Quotient { n, shape } => {
            let shape = match shape {
                ShapeArg::Path => PartitionShape::Path,
                ShapeArg::U => PartitionShape::U,
            };
            let p = f2_cycle_partition(n, shape)?;
            let f2 = token_graph(&build_family(&format!("cycle:{n}"))?, 2)?;
            let q = quotient_laplacian(&f2, &p)?;
            let spectrum = q.spectrum()?;
            #[derive(Serialize)]
            struct QuotientOut {
                n: usize,
                shape: &'static str,
                cells: Vec<Vec<usize>>,
                matrix: Vec<Vec<i64>>,
                cell_sizes: Vec<usize>,
                spectrum: Vec<f64>,
            }
            let out = QuotientOut {
                n,
                shape: match shape {
                    PartitionShape::Path => "path",
                    PartitionShape::U => "u",
                },
                cells: p.cells.clone(),
                matrix: q.entries.clone(),
                cell_sizes: q.cell_sizes.clone(),
                spectrum: spectrum.values().iter().map(|&v| canon12(v)).collect(),
            };
            println!("{}", serde_json::to_string(&out).expect("serialize"));
        }
        Command::Overlift { n, per_r } => {
            let detail = f2_cycle_spectrum_detail(n)?;
            #[derive(Serialize)]
            struct OverliftOut {
                n: usize,
                method: &'static str,
                per_r: Vec<PerRoot>,
                spectrum: Vec<f64>,
                lambda_removed: Vec<f64>,
            }
            let out = OverliftOut {
                n,
                method: detail.method,
                per_r: if per_r {
                    detail
                        .per_r
                        .iter()
                        .map(|p| PerRoot {
                            r: p.r,
                            eigs: p.eigs.iter().map(|&v| canon12(v)).collect(),
                        })
                        .collect()
                } else {
                    Vec::new()
                },
                spectrum: detail
                    .spectrum
                    .values()
                    .iter()
                    .map(|&v| canon12(v))
                    .collect(),
                lambda_removed: detail.lambda_removed.iter().map(|&v| canon12(v)).collect(),
            };
            println!("{}", serde_json::to_string(&out).expect("serialize"));
        }
        Command::Asympt { n, r, format } => {
            let values = asymptotic_eigs(n, r)?;
            match format {
                OutFormat::Json => {
                    #[derive(Serialize)]
                    struct AsymptOut {
                        n: usize,
                        r: usize,
                        values: Vec<f64>,
                    }
                    let out = AsymptOut {
                        n,
                        r,
                        values: values.iter().map(|&v| canon12(v)).collect(),
                    };
                    println!("{}", serde_json::to_string(&out).expect("serialize"));
                }
                OutFormat::Csv => {
                    for (i, &v) in values.iter().enumerate() {
                        println!("{i},{}", fmt12(v));
                    }
                }
                OutFormat::Table => {
                    let s = Spectrum::new(values, DEFAULT_TOL);
                    print_spectrum(&s, OutFormat::Table, DEFAULT_TOL);
                }
            }
        }
        Command::Verify { suite, tol } => {
            let kind = match suite {
                SuiteArg::PaperTables => SuiteKind::Tables,
                SuiteArg::Invariants => SuiteKind::Invariants,
                SuiteArg::All => SuiteKind::All,
            };
            let report = run_suite(kind, tol)?;
            eprintln!(
                "suite `{}`: {} passed, {} failed",
                report.suite, report.passed, report.failed
            );
            for c in &report.checks {
                eprintln!(
                    "  [{}] {} (lhs={} rhs={} tol={})",
                    if c.pass { "pass" } else { "FAIL" },
                    c.name,
                    fmt12(c.lhs),
                    fmt12(c.rhs),
                    c.tol
                );
            }
            for note in &report.notes {
                eprintln!("  note: {note}");
            }
            println!("{}", serde_json::to_string(&report).expect("serialize"));
            if !report.all_pass() {
                return Err(Error::InvalidInput(format!(
                    "{} verification check(s) failed",
                    report.failed
                )));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
