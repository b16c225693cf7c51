mod bundle;
mod commands;

use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "gl2q", version, about = "Exact verification toolkit for GL(2)-type quantum groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Completion rounds allowed in ideal-membership checks.
    #[arg(long, global = true, default_value_t = gl2q::rewrite::DEFAULT_BOUND)]
    bound: usize,
    /// Maximum word length (basis listing, completion overlap witnesses).
    #[arg(long = "max-len", global = true)]
    max_len: Option<usize>,
    /// Seed for randomly drawn witness matrices.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum MorphismKind {
    /// `x ↦ P y Q⁻¹` between algebras with four matrices.
    Congruence,
    /// `x ↦ y d⁻¹`, `d ↦ d⁻¹`.
    Inversion,
    /// `x ↦ P y P⁻¹` on `𝒢(A,B)`.
    HopfCongruence,
    /// `x ↦ Q y d⁻¹ Q⁻¹`, `d ↦ d⁻¹` on `𝒢(A,B)`.
    HopfFlip,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Orient the relations and resolve every ambiguity.
    CheckDiamond { input: String },
    /// Normal form of a polynomial modulo the oriented relations.
    NormalForm {
        input: String,
        #[arg(long)]
        poly: String,
    },
    /// Irreducible words up to `--max-len` (default 2).
    Basis { input: String },
    /// Comultiplication, counit, antipode and the Hopf identities of `𝒢(A,B)`.
    VerifyHopf { input: String },
    /// A standard isomorphism together with its inverse.
    VerifyMorphism {
        input: String,
        #[arg(long, value_enum)]
        kind: MorphismKind,
    },
    /// The involution on `𝒢(E, Ē)`.
    VerifyStar { input: String },
    /// Tensor product of simple comodules.
    Fusion {
        #[arg(required = true, num_args = 1..)]
        labels: Vec<String>,
        /// Order of `q` as a root of unity; generic when absent.
        #[arg(long)]
        root: Option<u32>,
        /// Apply the relabelling automorphism `U(n,e) ↦ U(n,−n−e)` to the result.
        #[arg(long)]
        relabel: bool,
    },
    /// `λ`, `μ`, `κ` and genericity; monoidal equivalence when `C`, `D` are given.
    Invariants { input: String },
    /// Check that `P` carries `(A,B)` to `(C,D)` up to scalars.
    VerifyWitness { input: String },
    /// Galois-pair conditions, and a witness `M` between `(C,D)` and `(C2,D2)` when given.
    GaloisCheck { input: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = commands::Options {
        bound: cli.bound,
        max_len: cli.max_len,
        seed: cli.seed,
    };
    let result = match &cli.command {
        Command::CheckDiamond { input } => commands::check_diamond(input, &opts),
        Command::NormalForm { input, poly } => commands::normal_form(input, poly, &opts),
        Command::Basis { input } => commands::basis(input, &opts),
        Command::VerifyHopf { input } => commands::verify_hopf(input, &opts),
        Command::VerifyMorphism { input, kind } => commands::verify_morphism(input, *kind, &opts),
        Command::VerifyStar { input } => commands::verify_star(input, &opts),
        Command::Fusion {
            labels,
            root,
            relabel,
        } => commands::fusion(labels, *root, *relabel),
        Command::Invariants { input } => commands::invariants(input),
        Command::VerifyWitness { input } => commands::verify_witness(input),
        Command::GaloisCheck { input } => commands::galois_check(input),
    };
    match result {
        Ok(report) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("report serializes")
                );
            } else {
                print!("{}", report.text);
            }
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
