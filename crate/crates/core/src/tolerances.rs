//! Centralized numerical tolerances.
//!
//! Every threshold used by the library is declared here with its default
//! value, so tests and the CLI (`--tol-override`) can reason about — and
//! override — each one by name. Double precision throughout; the defaults are
//! sized for inputs whose parameters stay a comfortable distance from the
//! degenerate set (|a| → 1, near-identity maps).

use crate::error::{Error, Result};

/// `|λ| − 1` allowed after renormalizing the rotation factor of a
/// constructor argument.
pub const UNIMODULAR: f64 = 1e-12;

/// Distance from the unit circle within which a point counts as a boundary
/// point (fixed-point and triple-anchor checks).
pub const BOUNDARY: f64 = 1e-9;

/// Half-width of the band around the parabolic value 4 of the normalized
/// trace invariant `|1 − λ|² / (1 − |a|²)`. Inputs inside the band are
/// resolved by the root-coincidence test.
pub const PARABOLIC_BAND: f64 = 1e-9;

/// Maximum separation of the two quadratic roots for them to count as a
/// boundary double root (parabolic case).
pub const ROOT_PAIR: f64 = 1e-7;

/// Minimum separation of the two quadratic roots at which a map whose trace
/// invariant sits inside the parabolic band is still confidently
/// non-parabolic and can be classified from the root geometry instead.
/// Small `a` compresses the trace invariant toward 4 without bringing the
/// roots anywhere near each other.
pub const ROOT_SEPARATION: f64 = 1e-3;

/// Residual `|φ(z) − z|` each reported finite fixed point must satisfy.
pub const FIXED_POINT_RESIDUAL: f64 = 1e-9;

/// Sup-grid residual below which a constructed conjugation `τφτ⁻¹ = ψ` is
/// accepted.
pub const CONJUGACY_RESIDUAL: f64 = 1e-8;

/// Maximum drift of the measured translation increment across the half-plane
/// probe grid before a claimed parabolic map is rejected.
pub const TRANSLATION_DRIFT: f64 = 1e-8;

/// `|μ^m − 1|` below which the elliptic resolvent is treated as singular.
pub const RESOLVENT_SINGULAR: f64 = 1e-9;

/// Maximum grid residual `|f∘ψ − μf − g|` tolerated before a closed-form
/// resolvent solution is rejected as numerically unreliable.
pub const RESOLVENT_RESIDUAL: f64 = 1e-9;

/// Pass/fail threshold for eigenfunction residuals in the verification
/// pipeline.
pub const VERIFY_RESIDUAL: f64 = 1e-8;

/// Relative agreement required of the final little-Bloch limit iterates.
pub const LITTLE_BLOCH_TAIL: f64 = 1e-6;

/// Distance to a pole below which evaluation refuses to proceed.
pub const POLE: f64 = 1e-14;

/// `|λ^m − 1|` below which a numeric multiplier counts as a root of unity of
/// order m.
pub const ROTATION_ORDER: f64 = 1e-9;

/// Slack allowed above 1 for `|z|` when evaluating on the closed disk.
pub const CLOSED_DISK_SLACK: f64 = 1e-9;

/// Default number of concentric circles in a residual grid.
pub const DEFAULT_GRID_DEPTH: u32 = 12;

/// Default number of equispaced angles per grid circle.
pub const DEFAULT_GRID_ANGLES: usize = 32;

/// Default cap for numeric rotation-order detection.
pub const DEFAULT_ORDER_MAX: u64 = 10_000;

/// The full tolerance set as a value, for call sites (CLI `--tol-override`)
/// that need to adjust thresholds at runtime.
#[derive(Debug, Clone, PartialEq)]
pub struct Tolerances {
    pub unimodular: f64,
    pub boundary: f64,
    pub parabolic_band: f64,
    pub root_pair: f64,
    pub fixed_point_residual: f64,
    pub conjugacy_residual: f64,
    pub translation_drift: f64,
    pub resolvent_singular: f64,
    pub resolvent_residual: f64,
    pub verify_residual: f64,
    pub little_bloch_tail: f64,
    pub pole: f64,
    pub rotation_order: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            unimodular: UNIMODULAR,
            boundary: BOUNDARY,
            parabolic_band: PARABOLIC_BAND,
            root_pair: ROOT_PAIR,
            fixed_point_residual: FIXED_POINT_RESIDUAL,
            conjugacy_residual: CONJUGACY_RESIDUAL,
            translation_drift: TRANSLATION_DRIFT,
            resolvent_singular: RESOLVENT_SINGULAR,
            resolvent_residual: RESOLVENT_RESIDUAL,
            verify_residual: VERIFY_RESIDUAL,
            little_bloch_tail: LITTLE_BLOCH_TAIL,
            pole: POLE,
            rotation_order: ROTATION_ORDER,
        }
    }
}

impl Tolerances {
    /// Set a tolerance by its snake_case name. Unknown names are an error so
    /// that a typo in `--tol-override` cannot silently do nothing.
    pub fn set(&mut self, key: &str, value: f64) -> Result<()> {
        if !(value.is_finite() && value > 0.0) {
            return Err(Error::Domain(format!(
                "tolerance '{key}' must be a positive finite number, got {value}"
            )));
        }
        match key {
            "unimodular" => self.unimodular = value,
            "boundary" => self.boundary = value,
            "parabolic_band" => self.parabolic_band = value,
            "root_pair" => self.root_pair = value,
            "fixed_point_residual" => self.fixed_point_residual = value,
            "conjugacy_residual" => self.conjugacy_residual = value,
            "translation_drift" => self.translation_drift = value,
            "resolvent_singular" => self.resolvent_singular = value,
            "resolvent_residual" => self.resolvent_residual = value,
            "verify_residual" => self.verify_residual = value,
            "little_bloch_tail" => self.little_bloch_tail = value,
            "pole" => self.pole = value,
            "rotation_order" => self.rotation_order = value,
            _ => {
                return Err(Error::Domain(format!("unknown tolerance key '{key}'")));
            }
        }
        Ok(())
    }

    /// The names accepted by [`Tolerances::set`], in a fixed report order.
    pub fn keys() -> &'static [&'static str] {
        &[
            "unimodular",
            "boundary",
            "parabolic_band",
            "root_pair",
            "fixed_point_residual",
            "conjugacy_residual",
            "translation_drift",
            "resolvent_singular",
            "resolvent_residual",
            "verify_residual",
            "little_bloch_tail",
            "pole",
            "rotation_order",
        ]
    }

    /// Read a tolerance by name (the inverse of [`Tolerances::set`]).
    pub fn get(&self, key: &str) -> Option<f64> {
        match key {
            "unimodular" => Some(self.unimodular),
            "boundary" => Some(self.boundary),
            "parabolic_band" => Some(self.parabolic_band),
            "root_pair" => Some(self.root_pair),
            "fixed_point_residual" => Some(self.fixed_point_residual),
            "conjugacy_residual" => Some(self.conjugacy_residual),
            "translation_drift" => Some(self.translation_drift),
            "resolvent_singular" => Some(self.resolvent_singular),
            "resolvent_residual" => Some(self.resolvent_residual),
            "verify_residual" => Some(self.verify_residual),
            "little_bloch_tail" => Some(self.little_bloch_tail),
            "pole" => Some(self.pole),
            "rotation_order" => Some(self.rotation_order),
            _ => None,
        }
    }
}
