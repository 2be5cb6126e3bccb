//! `autospec truncate`: dense finite-section model of the composition
//! operator — eigenvalue cloud to CSV, power-norm radius diagnostic to the
//! report.

use autospec_core::numerics::{
    bergman_weights, spectral_radius_estimate, truncated_matrix, truncation_eigenvalues,
    unit_weights, MAX_SECTION,
};
use serde_json::json;

use crate::cli::TruncateArgs;
use crate::error::{CliError, CliResult};
use crate::input::{parse_input, parse_overrides};
use crate::report::{cloud_csv, Report};

pub fn run(args: &TruncateArgs) -> CliResult<()> {
    let tols = parse_overrides(&args.common.tol_override)?;
    let input = parse_input(&args.common.input)?;
    if args.n < 1 || args.n >= MAX_SECTION {
        return Err(CliError::Usage(format!(
            "truncation order must satisfy 1 <= N <= {}, got {}",
            MAX_SECTION - 1,
            args.n
        )));
    }
    let weights = parse_weights(&args.weights, args.n)?;
    let op = truncated_matrix(&input.phi, args.n, &weights)?;
    let eigenvalues = truncation_eigenvalues(&op)?;
    let radius = spectral_radius_estimate(&op, args.n_powers)?;

    std::fs::write(&args.out, cloud_csv(&eigenvalues))
        .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", args.out.display())))?;

    let max_abs = eigenvalues.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let (tail_n, tail_value) = *radius
        .sequence
        .last()
        .expect("the diagnostic sequence is never empty");
    let payload = json!({
        "n": args.n,
        "weights": args.weights,
        "n_powers": args.n_powers,
        "eigenvalue_count": eigenvalues.len(),
        "max_abs_eigenvalue": max_abs,
        "radius_estimate": radius.estimate,
        "radius_sequence": radius
            .sequence
            .iter()
            .map(|(n, value)| json!({ "n": n, "value": value }))
            .collect::<Vec<_>>(),
        "radius_tail": { "n": tail_n, "value": tail_value },
        "cloud_path": args.out.display().to_string(),
    });
    Report::new("truncate", input.echo, &tols, payload).print();
    Ok(())
}

fn parse_weights(raw: &str, n: usize) -> CliResult<Vec<f64>> {
    if raw == "h2" {
        return Ok(unit_weights(n));
    }
    if let Some(alpha) = raw.strip_prefix("bergman:") {
        let alpha: f64 = alpha
            .parse()
            .map_err(|_| CliError::Usage(format!("invalid Bergman weight parameter '{alpha}'")))?;
        return Ok(bergman_weights(n, alpha)?);
    }
    Err(CliError::Usage(format!(
        "unknown weights '{raw}' (expected h2 or bergman:<alpha>)"
    )))
}
