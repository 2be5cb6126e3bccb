//! `autospec verify`: measure eigen-identity residuals against the
//! predicted eigenvalues; any failing parameter makes the command exit
//! nonzero by design.

use autospec_core::numerics::{eigen_residual, predicted_eigenvalue, Eigenfunction, GridSchedule};
use autospec_core::tolerances::DEFAULT_GRID_ANGLES;
use autospec_core::normal_form_with;
use serde_json::{json, Value};

use crate::cli::VerifyArgs;
use crate::error::{CliError, CliResult};
use crate::input::{parse_input, parse_overrides};
use crate::report::{complex_json, Report};

pub fn run(args: &VerifyArgs) -> CliResult<()> {
    let tols = parse_overrides(&args.common.tol_override)?;
    let input = parse_input(&args.common.input)?;
    let params = parse_params(&args.params, &args.family)?;
    let form = normal_form_with(&input.phi, &tols)?;
    let grid = GridSchedule::new(args.grid_depth, DEFAULT_GRID_ANGLES)?;

    let mut results = Vec::new();
    let mut all_pass = true;
    for param in &params {
        let f = param.eigenfunction()?;
        let mu = predicted_eigenvalue(&form.kind, &f)?;
        let residual = eigen_residual(&input.phi, &f, mu, &grid)?;
        let pass = residual < tols.verify_residual;
        all_pass &= pass;
        results.push(json!({
            "param": param.echo(),
            "eigenvalue": complex_json(mu),
            "residual": residual,
            "tolerance": tols.verify_residual,
            "pass": pass,
        }));
    }

    let payload = json!({
        "family": args.family,
        "grid_depth": args.grid_depth,
        "results": results,
        "all_pass": all_pass,
    });
    Report::new("verify", input.echo, &tols, payload).print();
    if all_pass {
        Ok(())
    } else {
        Err(CliError::Verification(format!(
            "{} of {} residuals exceeded {}",
            params.len() - results_passing(&results),
            params.len(),
            tols.verify_residual
        )))
    }
}

fn results_passing(results: &[Value]) -> usize {
    results
        .iter()
        .filter(|r| r["pass"].as_bool().unwrap_or(false))
        .count()
}

/// Parse the comma-separated `--params` list for the given family.
fn parse_params(raw: &str, family: &str) -> CliResult<Vec<FamilyParam>> {
    let items: Vec<&str> = raw.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    if items.is_empty() {
        return Err(CliError::Usage("--params must list at least one value".to_string()));
    }
    items
        .iter()
        .map(|item| FamilyParam::parse(item, family))
        .collect()
}

/// A parameter bound to its eigenfunction family.
struct FamilyParam {
    family: Family,
    value: f64,
}

#[derive(Clone, Copy)]
enum Family {
    Monomial,
    ExpCusp,
    LogPower,
}

impl FamilyParam {
    fn parse(item: &str, family: &str) -> CliResult<Self> {
        let family = match family {
            "monomial" => Family::Monomial,
            "expcusp" => Family::ExpCusp,
            "logpower" => Family::LogPower,
            other => {
                return Err(CliError::Usage(format!(
                    "unknown family '{other}' (expected monomial, expcusp, or logpower)"
                )))
            }
        };
        let value: f64 = item
            .parse()
            .map_err(|_| CliError::Usage(format!("invalid parameter '{item}'")))?;
        if matches!(family, Family::Monomial)
            && !(value.fract() == 0.0 && value >= 1.0 && value <= u32::MAX as f64)
        {
            return Err(CliError::Usage(format!(
                "monomial degree must be a positive integer, got '{item}'"
            )));
        }
        Ok(FamilyParam { family, value })
    }

    fn eigenfunction(&self) -> CliResult<Eigenfunction> {
        Ok(match self.family {
            Family::Monomial => Eigenfunction::monomial(self.value as u32)?,
            Family::ExpCusp => Eigenfunction::exp_cusp(self.value)?,
            Family::LogPower => Eigenfunction::log_power(self.value)?,
        })
    }

    fn echo(&self) -> Value {
        match self.family {
            Family::Monomial => json!(self.value as u64),
            _ => json!(self.value),
        }
    }
}
