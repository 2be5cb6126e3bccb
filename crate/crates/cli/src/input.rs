//! Automorphism input parsing: presets and explicit JSON forms.
//!
//! Accepted values for `--input`:
//!
//! * `psi1`, `psi2` — the two canonical parabolic maps;
//! * `psi_r:<r>` — the canonical dilation `(z + r)/(1 + rz)`;
//! * `rotation:<num>/<den>` — the rotation by `e^{2πi·num/den}`, carrying
//!   the angle as an exact fraction so the cyclic order is computed by
//!   integer arithmetic instead of a tolerance scan;
//! * a JSON object `{"lambda": {"re", "im"}, "a": {"re", "im"}}` with the
//!   canonical coefficients of `z ↦ λ(a − z)/(1 − āz)`;
//! * a JSON object `{"lambda_angle": {"num", "den"}, "a": {"re", "im"}}`
//!   with `λ = e^{2πi·num/den}`; when `a = 0` the rotation multiplier
//!   `−λ` is also an exact fraction and order detection stays exact.

use autospec_core::DiskAutomorphism;
use num_complex::Complex64;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};

const TAU: f64 = std::f64::consts::TAU;

/// A parsed automorphism plus everything the report needs to echo it.
pub struct ParsedInput {
    pub phi: DiskAutomorphism,
    /// The multiplier angle of an exact rotation, as a fraction of a full
    /// turn; set only when the input pinned the angle down exactly.
    pub exact_angle: Option<(i64, i64)>,
    pub echo: Value,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexIn {
    re: f64,
    im: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AngleIn {
    num: i64,
    den: i64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonIn {
    lambda: Option<ComplexIn>,
    lambda_angle: Option<AngleIn>,
    a: ComplexIn,
}

pub fn parse_input(raw: &str) -> CliResult<ParsedInput> {
    if raw.trim_start().starts_with('{') {
        parse_json(raw)
    } else {
        parse_preset(raw)
    }
}

fn parse_json(raw: &str) -> CliResult<ParsedInput> {
    let parsed: JsonIn = serde_json::from_str(raw)
        .map_err(|e| CliError::Usage(format!("invalid input JSON: {e}")))?;
    let a = Complex64::new(parsed.a.re, parsed.a.im);
    match (parsed.lambda, parsed.lambda_angle) {
        (Some(lambda), None) => {
            let lambda = Complex64::new(lambda.re, lambda.im);
            let phi = DiskAutomorphism::new(lambda, a)?;
            let echo = json!({
                "lambda": { "re": phi.lambda().re, "im": phi.lambda().im },
                "a": { "re": a.re, "im": a.im },
            });
            Ok(ParsedInput {
                phi,
                exact_angle: None,
                echo,
            })
        }
        (None, Some(angle)) => {
            if angle.den <= 0 {
                return Err(CliError::Usage(format!(
                    "lambda_angle denominator must be positive, got {}",
                    angle.den
                )));
            }
            let lambda =
                Complex64::from_polar(1.0, TAU * angle.num as f64 / angle.den as f64);
            let phi = DiskAutomorphism::new(lambda, a)?;
            // The rotation multiplier is −λ = e^{2πi(num/den + 1/2)}; it is
            // exact only when a = 0 makes the map an actual rotation.
            let exact_angle = if a == Complex64::new(0.0, 0.0) {
                let num = angle
                    .num
                    .checked_mul(2)
                    .and_then(|n| n.checked_add(angle.den));
                let den = angle.den.checked_mul(2);
                match (num, den) {
                    (Some(num), Some(den)) => Some((num, den)),
                    _ => {
                        return Err(CliError::Usage(
                            "lambda_angle fraction overflows".to_string(),
                        ))
                    }
                }
            } else {
                None
            };
            let echo = json!({
                "lambda": { "re": phi.lambda().re, "im": phi.lambda().im },
                "a": { "re": a.re, "im": a.im },
                "lambda_angle": { "num": angle.num, "den": angle.den },
            });
            Ok(ParsedInput {
                phi,
                exact_angle,
                echo,
            })
        }
        (Some(_), Some(_)) => Err(CliError::Usage(
            "give either lambda or lambda_angle, not both".to_string(),
        )),
        (None, None) => Err(CliError::Usage(
            "input needs a lambda or lambda_angle field".to_string(),
        )),
    }
}

fn parse_preset(raw: &str) -> CliResult<ParsedInput> {
    let (phi, exact_angle) = match raw {
        "psi1" => (DiskAutomorphism::psi_one(), None),
        "psi2" => (DiskAutomorphism::psi_two(), None),
        _ => {
            if let Some(rest) = raw.strip_prefix("psi_r:") {
                let r: f64 = rest
                    .parse()
                    .map_err(|_| CliError::Usage(format!("invalid dilation parameter '{rest}'")))?;
                (DiskAutomorphism::psi_r(r)?, None)
            } else if let Some(rest) = raw.strip_prefix("rotation:") {
                let (num, den) = rest.split_once('/').ok_or_else(|| {
                    CliError::Usage(format!("rotation preset needs num/den, got '{rest}'"))
                })?;
                let num: i64 = num
                    .parse()
                    .map_err(|_| CliError::Usage(format!("invalid angle numerator '{num}'")))?;
                let den: i64 = den
                    .parse()
                    .map_err(|_| CliError::Usage(format!("invalid angle denominator '{den}'")))?;
                if den <= 0 {
                    return Err(CliError::Usage(format!(
                        "angle denominator must be positive, got {den}"
                    )));
                }
                let nu = Complex64::from_polar(1.0, TAU * num as f64 / den as f64);
                (DiskAutomorphism::rotation(nu)?, Some((num, den)))
            } else {
                return Err(CliError::Usage(format!(
                    "unknown preset '{raw}' (expected psi1, psi2, psi_r:<r>, \
                     rotation:<num>/<den>, or a JSON object)"
                )));
            }
        }
    };
    let mut echo = json!({
        "preset": raw,
        "lambda": { "re": phi.lambda().re, "im": phi.lambda().im },
        "a": { "re": phi.a().re, "im": phi.a().im },
    });
    if let Some((num, den)) = exact_angle {
        echo["rotation_angle"] = json!({ "num": num, "den": den });
    }
    Ok(ParsedInput {
        phi,
        exact_angle,
        echo,
    })
}

/// Apply `--tol-override key=value` pairs on top of the defaults.
pub fn parse_overrides(overrides: &[String]) -> CliResult<autospec_core::Tolerances> {
    let mut tols = autospec_core::Tolerances::default();
    for entry in overrides {
        let (key, value) = entry.split_once('=').ok_or_else(|| {
            CliError::Usage(format!("tolerance override '{entry}' is not key=value"))
        })?;
        let value: f64 = value.parse().map_err(|_| {
            CliError::Usage(format!("tolerance override '{entry}' has a non-numeric value"))
        })?;
        tols.set(key, value)?;
    }
    Ok(tols)
}
