//! Numerical verification layer: the eigenfunction family, residual
//! checks of the eigenvalue identities, grid-based norm estimators, and
//! the boundary limits that decide little-Bloch membership.
//!
//! Submodules: [`series`] holds the Taylor model of an automorphism,
//! [`operator`] the truncated-matrix model of the composition operator.

pub mod operator;
pub mod series;

pub use operator::{
    bergman_weights, spectral_radius_estimate, truncated_matrix, truncation_eigenvalues,
    unit_weights, SpectralRadiusEstimate, TruncatedOperator, MAX_SECTION,
};
pub use series::{automorphism_series, PowerSeries};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::mobius::{DiskAutomorphism, ONE, ZERO};
use crate::normalform::NormalFormKind;
use crate::tolerances;

fn cis(theta: f64) -> Complex64 {
    Complex64::from_polar(1.0, theta)
}

/// The eigenfunction family: monomials `z^k` for rotations, the cusp
/// exponentials `f_s(z) = exp(s(z+1)/(z−1))` for the parabolic
/// translations, and the boundary powers `f_t(z) = ((1+z)/(1−z))^{it}`
/// (principal branch) for the canonical dilations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Eigenfunction {
    /// `z^k`, `k ≥ 1`.
    Monomial(u32),
    /// `exp(s(z+1)/(z−1))`, `s ≥ 0`; maps the disk into itself for `s > 0`.
    ExpCusp(f64),
    /// `((1+z)/(1−z))^{it}`, `t` real; bounded by `e^{π|t|/2}` on the disk.
    LogPower(f64),
}

impl Eigenfunction {
    /// `z^k` with `k ≥ 1`.
    pub fn monomial(k: u32) -> Result<Self> {
        if k < 1 {
            return Err(Error::Domain("monomial degree must be at least 1".to_string()));
        }
        Ok(Eigenfunction::Monomial(k))
    }

    /// `f_s` with `s ≥ 0`.
    pub fn exp_cusp(s: f64) -> Result<Self> {
        if !(s.is_finite() && s >= 0.0) {
            return Err(Error::Domain(format!(
                "cusp parameter must satisfy s ≥ 0, got {s}"
            )));
        }
        Ok(Eigenfunction::ExpCusp(s))
    }

    /// `f_t` with `t` finite real.
    pub fn log_power(t: f64) -> Result<Self> {
        if !t.is_finite() {
            return Err(Error::Domain(format!("power parameter must be finite, got {t}")));
        }
        Ok(Eigenfunction::LogPower(t))
    }

    fn check_disk(z: Complex64) -> Result<()> {
        if z.norm() > 1.0 + tolerances::CLOSED_DISK_SLACK {
            return Err(Error::Domain(format!(
                "eigenfunctions are evaluated on the closed disk, got |z| = {}",
                z.norm()
            )));
        }
        Ok(())
    }

    fn check_pole(z: Complex64, pole: Complex64) -> Result<()> {
        if (z - pole).norm() < tolerances::POLE {
            return Err(Error::Pole(format!(
                "eigenfunction is singular at {pole}, got z = {z}"
            )));
        }
        Ok(())
    }

    /// Evaluate at `z` in the (closed) disk.
    pub fn evaluate(&self, z: Complex64) -> Result<Complex64> {
        Self::check_disk(z)?;
        match self {
            Eigenfunction::Monomial(k) => Ok(z.powu(*k)),
            Eigenfunction::ExpCusp(s) => {
                Self::check_pole(z, ONE)?;
                if *s == 0.0 {
                    return Ok(ONE);
                }
                Ok(((z + ONE) / (z - ONE) * *s).exp())
            }
            Eigenfunction::LogPower(t) => {
                Self::check_pole(z, ONE)?;
                if *t == 0.0 {
                    return Ok(ONE);
                }
                Self::check_pole(z, -ONE)?;
                // (1+z)/(1−z) has positive real part on the disk, so the
                // principal logarithm is single-valued here.
                let w = (ONE + z) / (ONE - z);
                Ok((Complex64::new(0.0, *t) * w.ln()).exp())
            }
        }
    }

    /// The analytic derivative at `z`.
    pub fn derivative(&self, z: Complex64) -> Result<Complex64> {
        Self::check_disk(z)?;
        match self {
            Eigenfunction::Monomial(k) => {
                if *k == 0 {
                    return Ok(ZERO);
                }
                Ok(*k as f64 * z.powu(k - 1))
            }
            Eigenfunction::ExpCusp(s) => {
                let value = self.evaluate(z)?;
                Ok(value * (-2.0 * s) / ((z - ONE) * (z - ONE)))
            }
            Eigenfunction::LogPower(t) => {
                let value = self.evaluate(z)?;
                Self::check_pole(z, -ONE)?;
                Ok(value * Complex64::new(0.0, 2.0 * t) / ((ONE - z) * (ONE + z)))
            }
        }
    }
}

/// Concentric sampling grid: shells of radius `1 − 2^{−k}` for
/// `k = 1..=depth`, each carrying `angles_per_radius` equally spaced
/// points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSchedule {
    depth: u32,
    angles_per_radius: usize,
}

impl GridSchedule {
    /// A schedule with `depth` shells (at most 53, past which the radii
    /// round to 1) and `angles_per_radius ≥ 1` points per shell.
    pub fn new(depth: u32, angles_per_radius: usize) -> Result<Self> {
        if !(1..=53).contains(&depth) {
            return Err(Error::Domain(format!(
                "grid depth must lie in 1..=53, got {depth}"
            )));
        }
        if angles_per_radius < 1 {
            return Err(Error::Domain("need at least one angle per shell".to_string()));
        }
        Ok(GridSchedule {
            depth,
            angles_per_radius,
        })
    }

    /// The shell radii `1 − 2^{−k}`, increasing and strictly below 1.
    pub fn radii(&self) -> Vec<f64> {
        (1..=self.depth).map(|k| 1.0 - 0.5f64.powi(k as i32)).collect()
    }

    /// All sample points. The origin is always included, so suprema
    /// attained at the center (e.g. the Bloch seminorm of `z ↦ z`) are
    /// seen by the estimators.
    pub fn points(&self) -> Vec<Complex64> {
        let mut pts = Vec::with_capacity(1 + self.depth as usize * self.angles_per_radius);
        pts.push(ZERO);
        for r in self.radii() {
            for j in 0..self.angles_per_radius {
                let theta = std::f64::consts::TAU * j as f64 / self.angles_per_radius as f64;
                pts.push(Complex64::from_polar(r, theta));
            }
        }
        pts
    }
}

impl Default for GridSchedule {
    fn default() -> Self {
        GridSchedule {
            depth: tolerances::DEFAULT_GRID_DEPTH,
            angles_per_radius: tolerances::DEFAULT_GRID_ANGLES,
        }
    }
}

/// The eigenvalue of `C_ψ` on the paired eigenfunction for a canonical
/// model ψ: `ν^k` for rotations and monomials, `e^{∓2is}` for the two
/// parabolic translations and `f_s`, and `((1+r)/(1−r))^{it}` (positive
/// real base) for the canonical dilation and `f_t`. All outputs are
/// unimodular.
pub fn predicted_eigenvalue(kind: &NormalFormKind, f: &Eigenfunction) -> Result<Complex64> {
    match (kind, f) {
        (NormalFormKind::Rotation(nu), Eigenfunction::Monomial(k)) => Ok(nu.powu(*k)),
        (NormalFormKind::ParabolicPlus, Eigenfunction::ExpCusp(s)) => Ok(cis(-2.0 * s)),
        (NormalFormKind::ParabolicMinus, Eigenfunction::ExpCusp(s)) => Ok(cis(2.0 * s)),
        (NormalFormKind::Hyperbolic(r), Eigenfunction::LogPower(t)) => {
            Ok(cis(t * ((1.0 + r) / (1.0 - r)).ln()))
        }
        (kind, f) => Err(Error::Pairing(format!(
            "{kind:?} does not pair with {f:?}: rotations take monomials, parabolic \
             translations take cusp exponentials, dilations take boundary powers"
        ))),
    }
}

/// The residual `sup |f(φ(z)) − μ·f(z)|` over the grid.
pub fn eigen_residual(
    phi: &DiskAutomorphism,
    f: &Eigenfunction,
    mu: Complex64,
    grid: &GridSchedule,
) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for z in grid.points() {
        let pushed = f.evaluate(phi.evaluate(z)?)?;
        let scaled = mu * f.evaluate(z)?;
        worst = worst.max((pushed - scaled).norm());
    }
    Ok(worst)
}

/// Grid lower bound for `‖f‖∞ = sup |f|`.
pub fn sup_norm_estimate(f: &Eigenfunction, grid: &GridSchedule) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for z in grid.points() {
        worst = worst.max(f.evaluate(z)?.norm());
    }
    Ok(worst)
}

/// Grid lower bound for the Bloch seminorm `sup (1 − |z|²)|f′(z)|`.
pub fn bloch_seminorm_estimate(f: &Eigenfunction, grid: &GridSchedule) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for z in grid.points() {
        worst = worst.max((1.0 - z.norm_sqr()) * f.derivative(z)?.norm());
    }
    Ok(worst)
}

/// The default radial sequence `1 − 2^{−k}`, `k = 1..=40`.
pub fn default_radial_sequence() -> Vec<f64> {
    (1..=40).map(|k| 1.0 - 0.5f64.powi(k)).collect()
}

/// The limit of `(1 − r²)|f_t′(r)|` along the real radius, evaluated on an
/// increasing sequence of radii. For `f_t` the quantity equals `2|t|·|f_t(r)|`
/// and `|f_t(r)| = 1` for real `r`, so the limit is `2|t| > 0` — which is
/// exactly why no `f_t` with `t ≠ 0` lies in the little Bloch space.
///
/// `1 − r²` is accumulated in the factored form `(1 − r)(1 + r)`: near
/// `r = 1` the subtraction `1 − r` is exact while `1 − r·r` loses half the
/// working digits, enough to break the convergence certificate.
pub fn little_bloch_radial_limit(f: &Eigenfunction, r_sequence: &[f64]) -> Result<f64> {
    match f {
        Eigenfunction::LogPower(t) if *t != 0.0 => t,
        Eigenfunction::LogPower(_) => {
            return Err(Error::Domain(
                "the radial limit needs t ≠ 0 (f₀ ≡ 1 is trivially little Bloch)".to_string(),
            ))
        }
        other => {
            return Err(Error::Domain(format!(
                "the radial limit applies to the LogPower family, got {other:?}"
            )))
        }
    };
    if r_sequence.len() < 2 {
        return Err(Error::Domain(
            "need at least two radii to certify convergence".to_string(),
        ));
    }
    if r_sequence.windows(2).any(|w| w[0] >= w[1])
        || r_sequence.iter().any(|r| !(0.0..1.0).contains(r))
    {
        return Err(Error::Domain(
            "radii must increase strictly inside (0, 1)".to_string(),
        ));
    }
    let mut values = Vec::with_capacity(r_sequence.len());
    for &r in r_sequence {
        let z = Complex64::new(r, 0.0);
        let factored = (1.0 - r) * (1.0 + r);
        values.push(factored * f.derivative(z)?.norm());
    }
    let last = values[values.len() - 1];
    let prev = values[values.len() - 2];
    if (last - prev).abs() >= tolerances::LITTLE_BLOCH_TAIL {
        return Err(Error::NoConvergence(format!(
            "radial tail is not Cauchy: |{last} − {prev}| ≥ {}",
            tolerances::LITTLE_BLOCH_TAIL
        )));
    }
    Ok(last)
}

/// The Bloch quantity `(1 − |z_n|²)|f_s′(z_n)|` along the boundary sequence
/// `z_n = (x₀ + 1 + in)/(x₀ − 1 + in)`, evaluated at `n = n_max`. The limit
/// is `(−2sx₀)e^{sx₀} > 0`, witnessing that `f_s ∉ 𝓑₀` for `s > 0`.
///
/// With `w = (x₀ − 1) + in` the identities `(z_n+1)/(z_n−1) = x₀ + in`,
/// `1 − |z_n|² = −4x₀/|w|²` and `|f_s′(z_n)| = e^{sx₀}·2s|w|²/4` hold, and
/// the `|w|²` factors cancel in the product. Direct evaluation through
/// `z_n` loses half the digits once `n ≫ 10³` (the tests cross-check it at
/// small `n`).
pub fn little_bloch_sequence_limit(s: f64, x0: f64, n_max: u64) -> Result<f64> {
    if !(s.is_finite() && s > 0.0) {
        return Err(Error::Domain(format!("need s > 0, got {s}")));
    }
    if !(x0.is_finite() && x0 < 0.0) {
        return Err(Error::Domain(format!("need x₀ < 0, got {x0}")));
    }
    if n_max < 10 {
        return Err(Error::Domain(format!("need n_max ≥ 10, got {n_max}")));
    }
    let n = n_max as f64;
    let w_sq = (x0 - 1.0) * (x0 - 1.0) + n * n;
    let one_minus_mod_sq = -4.0 * x0 / w_sq;
    let derivative_modulus = (s * x0).exp() * 2.0 * s * w_sq / 4.0;
    Ok(one_minus_mod_sq * derivative_modulus)
}
