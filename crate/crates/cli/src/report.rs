//! Report envelope and deterministic JSON/CSV rendering.
//!
//! Every command emits one envelope with a fixed field order
//! (schema_version, tool, tool_version, command, input, tolerances,
//! payload). All floating-point numbers — in JSON and CSV alike — are
//! rendered as `%.12e` so that identical inputs produce byte-identical
//! output across runs and platforms.

use std::io;

use autospec_core::Tolerances;
use num_complex::Complex64;
use serde::Serialize;
use serde_json::ser::Formatter;
use serde_json::Value;

/// Render a float in C `%.12e` form: 12 fractional digits, explicit
/// exponent sign, at least two exponent digits.
pub fn sci(value: f64) -> String {
    if !value.is_finite() {
        return "null".to_string();
    }
    if value == 0.0 {
        // Fold -0.0 into +0.0 so sign bits of exact zeros never show up.
        return "0.000000000000e+00".to_string();
    }
    let raw = format!("{value:.12e}");
    let (mantissa, exponent) = raw.split_once('e').expect("{:e} always has an exponent");
    let (sign, digits) = match exponent.strip_prefix('-') {
        Some(rest) => ('-', rest),
        None => ('+', exponent),
    };
    format!("{mantissa}e{sign}{digits:0>2}")
}

/// JSON formatter that routes every f64 through [`sci`]; everything else is
/// compact-standard.
struct SciFormatter;

impl Formatter for SciFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        writer.write_all(sci(value).as_bytes())
    }

    fn write_f32<W>(&mut self, writer: &mut W, value: f32) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        writer.write_all(sci(value as f64).as_bytes())
    }
}

/// Serialize any value to one line of JSON with `%.12e` floats.
pub fn to_json(value: &impl Serialize) -> String {
    let mut out = Vec::new();
    let mut serializer = serde_json::Serializer::with_formatter(&mut out, SciFormatter);
    value
        .serialize(&mut serializer)
        .expect("report values contain no non-serializable data");
    String::from_utf8(out).expect("serde_json writes UTF-8")
}

/// Mirror of [`Tolerances`] with a serialization order matching
/// [`Tolerances::keys`].
#[derive(Serialize)]
pub struct ToleranceEcho {
    unimodular: f64,
    boundary: f64,
    parabolic_band: f64,
    root_pair: f64,
    fixed_point_residual: f64,
    conjugacy_residual: f64,
    translation_drift: f64,
    resolvent_singular: f64,
    resolvent_residual: f64,
    verify_residual: f64,
    little_bloch_tail: f64,
    pole: f64,
    rotation_order: f64,
}

impl From<&Tolerances> for ToleranceEcho {
    fn from(t: &Tolerances) -> Self {
        Self {
            unimodular: t.unimodular,
            boundary: t.boundary,
            parabolic_band: t.parabolic_band,
            root_pair: t.root_pair,
            fixed_point_residual: t.fixed_point_residual,
            conjugacy_residual: t.conjugacy_residual,
            translation_drift: t.translation_drift,
            resolvent_singular: t.resolvent_singular,
            resolvent_residual: t.resolvent_residual,
            verify_residual: t.verify_residual,
            little_bloch_tail: t.little_bloch_tail,
            pole: t.pole,
            rotation_order: t.rotation_order,
        }
    }
}

/// The envelope shared by every command.
#[derive(Serialize)]
pub struct Report {
    pub schema_version: &'static str,
    pub tool: &'static str,
    pub tool_version: &'static str,
    pub command: &'static str,
    pub input: Value,
    pub tolerances: ToleranceEcho,
    pub payload: Value,
}

impl Report {
    pub fn new(command: &'static str, input: Value, tols: &Tolerances, payload: Value) -> Self {
        Report {
            schema_version: "1",
            tool: "autospec",
            tool_version: env!("CARGO_PKG_VERSION"),
            command,
            input,
            tolerances: ToleranceEcho::from(tols),
            payload,
        }
    }

    pub fn print(&self) {
        println!("{}", to_json(self));
    }
}

/// JSON fragment for a complex number.
pub fn complex_json(z: Complex64) -> Value {
    serde_json::json!({ "re": z.re, "im": z.im })
}

/// Render a point cloud as CSV: `re,im` header, one `%.12e` pair per line,
/// newline-terminated.
pub fn cloud_csv(points: &[Complex64]) -> String {
    let mut out = String::from("re,im\n");
    for p in points {
        out.push_str(&sci(p.re));
        out.push(',');
        out.push_str(&sci(p.im));
        out.push('\n');
    }
    out
}
