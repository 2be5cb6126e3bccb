//! `autospec normal-form`: conjugate onto the canonical model and report
//! the conjugator together with its measured residual.

use autospec_core::{normal_form_with, NormalFormKind};
use serde_json::json;

use crate::cli::NormalFormArgs;
use crate::error::CliResult;
use crate::input::{parse_input, parse_overrides};
use crate::report::{complex_json, Report};

pub fn run(args: &NormalFormArgs) -> CliResult<()> {
    let tols = parse_overrides(&args.common.tol_override)?;
    let input = parse_input(&args.common.input)?;
    let form = normal_form_with(&input.phi, &tols)?;
    let (kind, parameter) = match form.kind {
        NormalFormKind::Rotation(multiplier) => ("rotation", complex_json(multiplier)),
        NormalFormKind::ParabolicPlus => ("parabolic_plus", serde_json::Value::Null),
        NormalFormKind::ParabolicMinus => ("parabolic_minus", serde_json::Value::Null),
        NormalFormKind::Hyperbolic(r) => ("hyperbolic", json!(r)),
    };
    let payload = json!({
        "kind": kind,
        "parameter": parameter,
        "conjugator": {
            "lambda": complex_json(form.conjugator.lambda()),
            "a": complex_json(form.conjugator.a()),
        },
        "residual": form.residual,
        "residual_tolerance": tols.conjugacy_residual,
    });
    Report::new("normal-form", input.echo, &tols, payload).print();
    Ok(())
}
