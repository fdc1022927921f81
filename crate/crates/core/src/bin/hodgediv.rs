use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hodgediv::catalog::default_path;
use hodgediv::extremality::PartitionKind;
use hodgediv::report::{
    cmd_catalog_check, cmd_catalog_list, cmd_catalog_write, cmd_certify, cmd_chow_eval, cmd_derive,
    cmd_teich_pair, cmd_threshold, cmd_verify, AmpleInput, Report,
};
use hodgediv::{Rational, Result};

/// Exact intersection numbers on the projectivized Hodge bundle.
#[derive(Parser)]
#[command(name = "hodgediv", version)]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Re-derive the class of D from test curves.
    Derive {
        #[arg(long)]
        genus: u32,
    },
    /// Check every quantity of a worked example.
    #[command(name = "verify-example", alias = "verify")]
    Verify {
        /// quartic-pencil, genus4-quadric or genus2-relation
        #[arg(long)]
        example: String,
    },
    #[command(subcommand)]
    Catalog(CatalogCmd),
    #[command(subcommand)]
    Chow(ChowCmd),
    #[command(subcommand)]
    Teich(TeichCmd),
    /// Optimal multiplier d for the double-zero stratum.
    Threshold(ThresholdArgs),
    /// Check C.(S + dA) <= 0 on a grid of Teichmuller curves.
    Certify {
        #[command(flatten)]
        t: ThresholdArgs,
        /// Multiplier to test; defaults to the threshold.
        #[arg(long, allow_hyphen_values = true)]
        d: Option<Rational>,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// Print the records of one genus.
    List {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        path: Option<PathBuf>,
    },
    /// Write the catalog for genera 2..=max-genus.
    Write {
        #[arg(long)]
        path: Option<PathBuf>,
        #[arg(long, default_value_t = 12)]
        max_genus: u32,
    },
    /// Compare a stored catalog against a fresh build.
    Check {
        #[arg(long)]
        path: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ChowCmd {
    /// Degree of an expression in the hyperplane classes.
    Eval {
        expr: String,
        /// Factor dimensions, e.g. 1,3
        #[arg(long)]
        dims: String,
        /// Generator names, one per factor (default a,b,c,...)
        #[arg(long, value_delimiter = ',')]
        gens: Option<Vec<String>>,
    },
}

#[derive(Subcommand)]
enum TeichCmd {
    /// Intersection vector and stratum pairing of a Teichmuller curve.
    Pair {
        #[arg(long)]
        kind: PartitionKind,
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        chi: Rational,
        #[arg(long)]
        lyapunov: Option<Rational>,
        #[arg(long)]
        carea: Option<Rational>,
    },
}

#[derive(Args)]
struct ThresholdArgs {
    #[arg(long)]
    kind: PartitionKind,
    #[arg(long)]
    genus: u32,
    /// lambda coefficient of the ample class
    #[arg(long, allow_hyphen_values = true)]
    a: Rational,
    /// eta coefficient
    #[arg(long, allow_hyphen_values = true)]
    b: Rational,
    /// boundary coefficient (delta_0, or every delta_i for quadratic)
    #[arg(long, allow_hyphen_values = true)]
    c: Rational,
    /// upper bound for c_area
    #[arg(long)]
    cmax: Option<Rational>,
}

fn run(cmd: Cmd) -> Result<Report> {
    match cmd {
        Cmd::Derive { genus } => cmd_derive(genus),
        Cmd::Verify { example } => cmd_verify(&example),
        Cmd::Catalog(CatalogCmd::List { genus, path }) => {
            cmd_catalog_list(genus, &path.unwrap_or_else(default_path))
        }
        Cmd::Catalog(CatalogCmd::Write { path, max_genus }) => {
            cmd_catalog_write(&path.unwrap_or_else(default_path), max_genus)
        }
        Cmd::Catalog(CatalogCmd::Check { path }) => {
            cmd_catalog_check(&path.unwrap_or_else(default_path))
        }
        Cmd::Chow(ChowCmd::Eval { expr, dims, gens }) => {
            cmd_chow_eval(&expr, &dims, gens.as_deref())
        }
        Cmd::Teich(TeichCmd::Pair {
            kind,
            genus,
            chi,
            lyapunov,
            carea,
        }) => {
            let param = match kind {
                PartitionKind::Abelian => lyapunov,
                PartitionKind::Quadratic => carea,
            };
            let param = param.ok_or_else(|| {
                hodgediv::Error::TeichParams(format!(
                    "{kind} needs --{}",
                    if kind == PartitionKind::Abelian {
                        "lyapunov"
                    } else {
                        "carea"
                    }
                ))
            })?;
            cmd_teich_pair(kind, genus, &chi, &param)
        }
        Cmd::Threshold(t) => {
            let amp = AmpleInput {
                a: &t.a,
                b: &t.b,
                c: &t.c,
            };
            cmd_threshold(t.kind, t.genus, &amp, t.cmax.as_ref())
        }
        Cmd::Certify { t, d } => {
            let amp = AmpleInput {
                a: &t.a,
                b: &t.b,
                c: &t.c,
            };
            cmd_certify(t.kind, t.genus, &amp, t.cmax.as_ref(), d.as_ref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(rep) => {
            if cli.json {
                println!("{}", rep.to_json());
            } else {
                print!("{}", rep.to_table());
            }
            ExitCode::from(rep.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
