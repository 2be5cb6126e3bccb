//! `autospec classify`: fixed-point classification with multipliers and,
//! for elliptic maps, the cyclic order of the rotation multiplier.

use autospec_core::spectra::{rotation_order, Exactness, MultiplierInput};
use autospec_core::tolerances::DEFAULT_ORDER_MAX;
use autospec_core::{classify_with, Classification, Tolerances};
use serde_json::{json, Value};

use crate::cli::ClassifyArgs;
use crate::error::CliResult;
use crate::input::{parse_input, parse_overrides, ParsedInput};
use crate::report::{complex_json, Report};

pub fn run(args: &ClassifyArgs) -> CliResult<()> {
    let tols = parse_overrides(&args.common.tol_override)?;
    let input = parse_input(&args.common.input)?;
    let cls = classify_with(&input.phi, &tols)?;
    let payload = classification_json(&cls, &input, &tols)?;
    Report::new("classify", input.echo, &tols, payload).print();
    Ok(())
}

/// The classification payload, shared with `normal-form` and `predict`.
pub fn classification_json(
    cls: &Classification,
    input: &ParsedInput,
    tols: &Tolerances,
) -> CliResult<Value> {
    Ok(match cls {
        Classification::Elliptic {
            interior_fixed_point,
            multiplier,
        } => {
            let order = elliptic_order(multiplier, input, tols)?;
            json!({
                "kind": "elliptic",
                "fixed_point": complex_json(*interior_fixed_point),
                "multiplier": complex_json(*multiplier),
                "order": order.0,
                "order_mode": order.1,
            })
        }
        Classification::Parabolic {
            boundary_fixed_point,
            translation_sign,
        } => json!({
            "kind": "parabolic",
            "fixed_point": complex_json(*boundary_fixed_point),
            "translation_sign": *translation_sign,
        }),
        Classification::Hyperbolic {
            attracting,
            repelling,
            multiplier,
        } => json!({
            "kind": "hyperbolic",
            "attracting": complex_json(*attracting),
            "repelling": complex_json(*repelling),
            "multiplier": *multiplier,
        }),
    })
}

/// Cyclic order of the elliptic multiplier: exact integer arithmetic when
/// the input carried the angle as a fraction, tolerance scan otherwise.
pub fn elliptic_order(
    multiplier: &num_complex::Complex64,
    input: &ParsedInput,
    tols: &Tolerances,
) -> CliResult<(Value, &'static str)> {
    let order = match input.exact_angle {
        Some((num, den)) => rotation_order(
            MultiplierInput::ExactAngle { num, den },
            tols.rotation_order,
            DEFAULT_ORDER_MAX,
        )?,
        None => rotation_order(
            MultiplierInput::Numeric(*multiplier),
            tols.rotation_order,
            DEFAULT_ORDER_MAX,
        )?,
    };
    let mode = match order.exactness {
        Exactness::ExactRational => "exact",
        Exactness::NumericDetection => "numeric",
    };
    Ok((order.order.map_or(Value::Null, |m| json!(m)), mode))
}
