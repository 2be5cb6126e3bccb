//! `autospec`: classify disk automorphisms, construct their normal forms,
//! and predict, verify, and numerically probe the spectra of the
//! composition operators they induce.

mod commands;
mod error;
mod input;
mod report;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::json;

use crate::cli::{Cli, Command};
use crate::error::CliError;

pub mod cli {
    //! Flag definitions. Kept in one place so command modules depend only
    //! on plain argument structs.

    use std::path::PathBuf;

    use clap::{Args, Parser, Subcommand, ValueEnum};

    #[derive(Parser)]
    #[command(
        name = "autospec",
        version,
        about = "Spectral analysis of composition operators with disk-automorphism symbols",
        disable_help_subcommand = true
    )]
    pub struct Cli {
        #[command(subcommand)]
        pub command: Command,
    }

    #[derive(Subcommand)]
    pub enum Command {
        /// Classify an automorphism by its fixed-point geometry.
        Classify(ClassifyArgs),
        /// Conjugate onto the canonical rotation/translation/dilation model.
        NormalForm(NormalFormArgs),
        /// Predict the spectrum of the composition operator on a space.
        Predict(PredictArgs),
        /// Check eigen-identities against grid residuals.
        Verify(VerifyArgs),
        /// Finite-section eigenvalue cloud and spectral-radius diagnostic.
        Truncate(TruncateArgs),
        /// Boundary limits showing the eigenfunctions are not little Bloch.
        LittleBloch(LittleBlochArgs),
    }

    #[derive(Args)]
    pub struct CommonArgs {
        /// Automorphism: a preset (psi1, psi2, psi_r:<r>, rotation:<num>/<den>)
        /// or a JSON object with lambda/lambda_angle and a.
        #[arg(long)]
        pub input: String,
        /// Override a named tolerance, e.g. verify_residual=1e-10; repeatable.
        #[arg(long = "tol-override", value_name = "KEY=VALUE")]
        pub tol_override: Vec<String>,
    }

    #[derive(Args)]
    pub struct ClassifyArgs {
        #[command(flatten)]
        pub common: CommonArgs,
    }

    #[derive(Args)]
    pub struct NormalFormArgs {
        #[command(flatten)]
        pub common: CommonArgs,
    }

    #[derive(Clone, Copy, ValueEnum)]
    pub enum OutputFormat {
        Json,
        Csv,
    }

    #[derive(Args)]
    pub struct PredictArgs {
        #[command(flatten)]
        pub common: CommonArgs,
        /// Target space: X, hardy:<p>, bergman:<p>:<alpha>, wbanach:<p>, dirichlet.
        #[arg(long)]
        pub space: String,
        /// json: full report; csv: point cloud of the predicted spectrum.
        #[arg(long, value_enum, default_value = "json")]
        pub format: OutputFormat,
        /// Write the CSV cloud here instead of stdout (csv format only).
        #[arg(long)]
        pub out: Option<PathBuf>,
    }

    #[derive(Args)]
    pub struct VerifyArgs {
        #[command(flatten)]
        pub common: CommonArgs,
        /// Eigenfunction family: monomial, expcusp, or logpower.
        #[arg(long)]
        pub family: String,
        /// Comma-separated family parameters, e.g. 0.5,1.0,2.0.
        #[arg(long, allow_hyphen_values = true)]
        pub params: String,
        /// Dyadic grid depth K (radii 1 - 2^-k, k = 1..=K).
        #[arg(long = "grid-depth", default_value_t = 12)]
        pub grid_depth: u32,
    }

    #[derive(Args)]
    pub struct TruncateArgs {
        #[command(flatten)]
        pub common: CommonArgs,
        /// Truncation order N (section size N+1, at most 511).
        #[arg(long = "N")]
        pub n: usize,
        /// Coefficient-norm weights: h2 or bergman:<alpha>.
        #[arg(long, default_value = "h2")]
        pub weights: String,
        /// Largest dyadic power in the radius diagnostic.
        #[arg(long = "n-powers", default_value_t = 64)]
        pub n_powers: u32,
        /// Path for the eigenvalue-cloud CSV.
        #[arg(long)]
        pub out: PathBuf,
    }

    #[derive(Args)]
    pub struct LittleBlochArgs {
        /// Cusp-family parameter s > 0 (needs --x0).
        #[arg(long, allow_negative_numbers = true)]
        pub s: Option<f64>,
        /// Power-family parameter t != 0.
        #[arg(long, allow_negative_numbers = true)]
        pub t: Option<f64>,
        /// Real part x0 < 0 of the boundary ray for the cusp family.
        #[arg(long, allow_negative_numbers = true)]
        pub x0: Option<f64>,
        /// Sequence index at which the limit is evaluated.
        #[arg(long = "n-max", default_value_t = 1_000_000)]
        pub n_max: u64,
        /// Override a named tolerance; repeatable.
        #[arg(long = "tol-override", value_name = "KEY=VALUE")]
        pub tol_override: Vec<String>,
    }
}

fn emit_error(code: i32, kind: &str, message: &str) {
    let object = json!({ "error": { "code": code, "kind": kind, "message": message } });
    eprintln!("{}", report::to_json(&object));
}

fn dispatch(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Classify(args) => commands::classify::run(args),
        Command::NormalForm(args) => commands::normal_form::run(args),
        Command::Predict(args) => commands::predict::run(args),
        Command::Verify(args) => commands::verify::run(args),
        Command::Truncate(args) => commands::truncate::run(args),
        Command::LittleBloch(args) => commands::little_bloch::run(args),
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{err}");
                std::process::exit(0);
            }
            let message = err
                .to_string()
                .lines()
                .next()
                .unwrap_or("invalid arguments")
                .to_string();
            emit_error(2, "usage", &message);
            std::process::exit(2);
        }
    };
    if let Err(err) = dispatch(&cli) {
        emit_error(err.code(), err.kind(), err.message());
        std::process::exit(err.code());
    }
}
