use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use capelli_core::capelli::{
    quantum_immanant, sweep, verify_corollary, verify_proof_steps, verify_theorem,
    verify_theorem_pair, VerificationReport,
};
use capelli_core::scalar::parse_q;
use capelli_core::ugl::{hc_eigenvalue, is_central, Centrality};
use capelli_core::young::{Partition, SeminormalRep, StandardTableau};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

/// Exact verification of the higher Capelli identities.
#[derive(Parser)]
#[command(name = "capelli", version)]
struct Cli {
    /// Emit JSON (one object per line) instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify identities and proof steps.
    Verify {
        #[command(subcommand)]
        target: Verify,
    },
    /// Compute a quantum immanant in U(gl(m)).
    Immanant {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long)]
        m: usize,
        /// Tableau to build the immanant from (defaults to the first standard tableau).
        #[arg(long)]
        tableau: Option<StandardTableau>,
        /// Print the full PBW expansion.
        #[arg(long)]
        print_pbw: bool,
    },
    /// Eigenvalue of a quantum immanant on a highest-weight module.
    Eigenvalue {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long)]
        m: usize,
        /// Highest weight, comma separated, e.g. 3,1.
        #[arg(long)]
        weights: String,
    },
    /// List standard tableaux of a shape with their contents.
    Tableaux {
        #[command(flatten)]
        shape: ShapeArg,
    },
}

#[derive(Subcommand)]
enum Verify {
    /// Tensor identity for all (or one) ordered tableau pairs.
    Theorem {
        #[command(flatten)]
        shape: ShapeArg,
        #[command(flatten)]
        grid: Grid,
        #[arg(long, requires = "tableau2")]
        tableau: Option<StandardTableau>,
        #[arg(long, requires = "tableau")]
        tableau2: Option<StandardTableau>,
    },
    /// Traced identity and tableau independence.
    Corollary {
        #[command(flatten)]
        shape: ShapeArg,
        #[command(flatten)]
        grid: Grid,
    },
    /// Branching and Jucys-Murphy annihilation in the group algebra.
    ProofSteps {
        #[command(flatten)]
        shape: ShapeArg,
    },
    /// Everything, over all shapes up to max-k and all m, n up to the bounds.
    Sweep {
        #[arg(long, default_value_t = 3)]
        max_k: usize,
        #[arg(long, default_value_t = 3)]
        max_m: usize,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
    },
}

#[derive(Args)]
struct ShapeArg {
    /// Partition, comma separated, e.g. 2,1.
    #[arg(long)]
    shape: Partition,
}

#[derive(Args)]
struct Grid {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
}

fn check_grid(m: usize, n: usize) -> Result<()> {
    if m == 0 || n == 0 {
        bail!("m and n must be at least 1");
    }
    Ok(())
}

fn emit(reports: &[VerificationReport], json: bool) -> Result<ExitCode> {
    for r in reports {
        if json {
            println!("{}", serde_json::to_string(r)?);
        } else {
            println!("{r}");
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if !json {
        println!(
            "{} cases, {} passed, {failed} failed",
            reports.len(),
            reports.len() - failed
        );
    }
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn run_verify(target: Verify, json: bool) -> Result<ExitCode> {
    let reports = match target {
        Verify::Theorem {
            shape,
            grid,
            tableau,
            tableau2,
        } => {
            check_grid(grid.m, grid.n)?;
            match (tableau, tableau2) {
                (Some(t), Some(t2)) => {
                    if t.shape() != &shape.shape || t2.shape() != &shape.shape {
                        bail!("tableaux must have shape {}", shape.shape);
                    }
                    vec![verify_theorem_pair(&t, &t2, grid.m, grid.n)?]
                }
                _ => verify_theorem(&shape.shape, grid.m, grid.n),
            }
        }
        Verify::Corollary { shape, grid } => {
            check_grid(grid.m, grid.n)?;
            verify_corollary(&shape.shape, grid.m, grid.n)
        }
        Verify::ProofSteps { shape } => vec![verify_proof_steps(&shape.shape)?],
        Verify::Sweep {
            max_k,
            max_m,
            max_n,
        } => sweep(max_k, max_m, max_n),
    };
    emit(&reports, json)
}

fn pick_tableau(shape: &Partition, tableau: Option<StandardTableau>) -> Result<StandardTableau> {
    match tableau {
        Some(t) if t.shape() != shape => bail!("tableau {t} does not have shape {shape}"),
        Some(t) => Ok(t),
        None => Ok(SeminormalRep::new(shape).tableaux()[0].clone()),
    }
}

fn run() -> Result<ExitCode> {
    let cli = Cli::parse();
    let json = cli.json;
    match cli.command {
        Command::Verify { target } => run_verify(target, json),
        Command::Immanant {
            shape,
            m,
            tableau,
            print_pbw,
        } => {
            if m == 0 {
                bail!("m must be at least 1");
            }
            let shape = shape.shape;
            let t = pick_tableau(&shape, tableau)?;
            let u = quantum_immanant(&shape, &t, m)?;
            let central = is_central(&u);
            if json {
                let mut obj = json!({
                    "shape": shape.to_string(),
                    "tableau": t.to_string(),
                    "m": m,
                    "terms": u.len(),
                    "central": central.is_central(),
                });
                if print_pbw {
                    obj["pbw"] = json!(u.to_string());
                }
                println!("{obj}");
            } else {
                println!(
                    "quantum immanant shape={shape} T={t} m={m}: {} PBW terms",
                    u.len()
                );
                match &central {
                    Centrality::Central => println!("central: yes"),
                    Centrality::NotCentral { a, b, commutator } => {
                        println!("central: no, [u, E[{a},{b}]] = {commutator}")
                    }
                }
                if print_pbw {
                    println!("{u}");
                }
            }
            Ok(if central.is_central() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Eigenvalue { shape, m, weights } => {
            let shape = shape.shape;
            let weights = weights
                .split(',')
                .map(parse_q)
                .collect::<capelli_core::Result<Vec<_>>>()
                .context("parsing --weights")?;
            if weights.len() != m {
                bail!("expected {m} weights, got {}", weights.len());
            }
            let t = pick_tableau(&shape, None)?;
            let u = quantum_immanant(&shape, &t, m)?;
            let ev = hc_eigenvalue(&u, &weights)?;
            let shown: Vec<String> = weights.iter().map(ToString::to_string).collect();
            if json {
                println!(
                    "{}",
                    json!({ "shape": shape.to_string(), "m": m, "weights": shown, "eigenvalue": ev.to_string() })
                );
            } else {
                println!("{ev}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Tableaux { shape } => {
            let rep = SeminormalRep::new(&shape.shape);
            for t in rep.tableaux() {
                let contents = t.contents();
                if json {
                    println!(
                        "{}",
                        json!({ "tableau": t.to_string(), "contents": contents })
                    );
                } else {
                    let shown: Vec<String> = contents.iter().map(ToString::to_string).collect();
                    println!("{t}  contents {}", shown.join(","));
                }
            }
            if !json {
                println!("{} standard tableaux of shape {}", rep.dim(), shape.shape);
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
