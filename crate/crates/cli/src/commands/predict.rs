//! `autospec predict`: spectrum of the composition operator on a named
//! space, optionally with a point cloud for plotting.

use autospec_core::spectra::{
    predict_spectrum_with_order, rotation_order, MultiplierInput, SpaceDescriptor,
    SpectrumPrediction,
};
use autospec_core::tolerances::DEFAULT_ORDER_MAX;
use autospec_core::{classify_with, Classification, Tolerances};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::cli::{OutputFormat, PredictArgs};
use crate::error::{CliError, CliResult};
use crate::input::{parse_input, parse_overrides, ParsedInput};
use crate::report::{cloud_csv, complex_json, Report};

const TAU: f64 = std::f64::consts::TAU;

pub fn run(args: &PredictArgs) -> CliResult<()> {
    let tols = parse_overrides(&args.common.tol_override)?;
    let input = parse_input(&args.common.input)?;
    let space = parse_space(&args.space)?;
    let cls = classify_with(&input.phi, &tols)?;
    let prediction = predict(&cls, &space, &input, &tols)?;

    let mut payload = json!({
        "space": space.to_string(),
        "prediction": prediction_json(&prediction),
    });

    match args.format {
        OutputFormat::Json => {
            if args.out.is_some() {
                return Err(CliError::Usage(
                    "--out applies to --format csv".to_string(),
                ));
            }
            Report::new("predict", input.echo, &tols, payload).print();
        }
        OutputFormat::Csv => {
            let csv = cloud_csv(&sample_cloud(&prediction));
            match &args.out {
                Some(path) => {
                    std::fs::write(path, csv).map_err(|e| {
                        CliError::Usage(format!("cannot write {}: {e}", path.display()))
                    })?;
                    payload["cloud_path"] = json!(path.display().to_string());
                    Report::new("predict", input.echo, &tols, payload).print();
                }
                None => print!("{csv}"),
            }
        }
    }
    Ok(())
}

pub fn parse_space(raw: &str) -> CliResult<SpaceDescriptor> {
    let unknown = || {
        CliError::Usage(format!(
            "unknown space '{raw}' (expected X, hardy:<p>, bergman:<p>:<alpha>, \
             wbanach:<p>, or dirichlet)"
        ))
    };
    let number = |s: &str| s.parse::<f64>().map_err(|_| unknown());
    match raw {
        "X" => Ok(SpaceDescriptor::XFamily),
        "dirichlet" => Ok(SpaceDescriptor::Dirichlet),
        _ => {
            if let Some(p) = raw.strip_prefix("hardy:") {
                Ok(SpaceDescriptor::hardy(number(p)?)?)
            } else if let Some(rest) = raw.strip_prefix("bergman:") {
                let (p, alpha) = rest.split_once(':').ok_or_else(unknown)?;
                Ok(SpaceDescriptor::bergman(number(p)?, number(alpha)?)?)
            } else if let Some(p) = raw.strip_prefix("wbanach:") {
                Ok(SpaceDescriptor::weighted_banach(number(p)?)?)
            } else {
                Err(unknown())
            }
        }
    }
}

/// Predict with exact order information when the input supplies it.
fn predict(
    cls: &Classification,
    space: &SpaceDescriptor,
    input: &ParsedInput,
    tols: &Tolerances,
) -> CliResult<SpectrumPrediction> {
    let order = match (cls, input.exact_angle) {
        (Classification::Elliptic { .. }, Some((num, den))) => Some(rotation_order(
            MultiplierInput::ExactAngle { num, den },
            tols.rotation_order,
            DEFAULT_ORDER_MAX,
        )?),
        _ => None,
    };
    Ok(predict_spectrum_with_order(cls, space, order.as_ref())?)
}

fn prediction_json(prediction: &SpectrumPrediction) -> Value {
    match prediction {
        SpectrumPrediction::UnitCircle => json!({ "kind": "unit_circle" }),
        SpectrumPrediction::FiniteCyclicGroup { generator, order } => json!({
            "kind": "finite_cyclic_group",
            "generator": complex_json(*generator),
            "order": order,
            "elements": prediction
                .group_elements()
                .expect("finite groups list their elements")
                .iter()
                .map(|e| complex_json(*e))
                .collect::<Vec<_>>(),
        }),
        SpectrumPrediction::Annulus { r_in, r_out } => json!({
            "kind": "annulus",
            "r_in": r_in,
            "r_out": r_out,
        }),
        SpectrumPrediction::AnnulusLowerBound { r_in, r_out } => json!({
            "kind": "annulus_lower_bound",
            "r_in": r_in,
            "r_out": r_out,
        }),
    }
}

/// 360 samples for continuous predictions (both annulus rims), the literal
/// elements for finite groups.
fn sample_cloud(prediction: &SpectrumPrediction) -> Vec<Complex64> {
    let circle = |radius: f64, count: usize| {
        (0..count)
            .map(move |k| Complex64::from_polar(radius, TAU * k as f64 / count as f64))
            .collect::<Vec<_>>()
    };
    match prediction {
        SpectrumPrediction::UnitCircle => circle(1.0, 360),
        SpectrumPrediction::FiniteCyclicGroup { .. } => prediction
            .group_elements()
            .expect("finite groups list their elements"),
        SpectrumPrediction::Annulus { r_in, r_out }
        | SpectrumPrediction::AnnulusLowerBound { r_in, r_out } => {
            let mut cloud = circle(*r_in, 180);
            cloud.extend(circle(*r_out, 180));
            cloud
        }
    }
}
