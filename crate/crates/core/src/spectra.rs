//! Spectrum predictions for composition operators with automorphic symbol.
//!
//! For a disk automorphism φ, the operator `C_φ : f ↦ f∘φ` acts on a scale
//! of analytic function spaces. On the isometric scale (denoted `XFamily`
//! here) and on the Dirichlet space its spectrum is the unit circle except
//! in the finite-order elliptic case, where it is the finite cyclic group
//! generated by the multiplier. On Hardy spaces a hyperbolic symbol opens
//! the spectrum into an annulus, and on Bergman / weighted-Banach spaces
//! the corresponding annuli are containment statements only — the
//! predictions are typed accordingly so the output never claims more than
//! is known.
//!
//! The module also houses the closed-form resolvent for finite-order
//! elliptic symbols and root-of-unity order detection with an exact
//! rational-angle input mode.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::mobius::{Classification, ONE};
use crate::tolerances;

/// The function space a prediction refers to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpaceDescriptor {
    /// The isometric scale of spaces on which `C_φ` is always a surjective
    /// isometry, where the spectrum is pinned down completely.
    XFamily,
    /// Hardy space `H^p`, `p ≥ 1`.
    Hardy { p: f64 },
    /// Weighted Bergman space `A^p_α`, `p ≥ 1`, `α > −1`.
    Bergman { p: f64, alpha: f64 },
    /// Weighted Banach space `H^∞_{v_p}` with standard weight exponent
    /// `p > 0`.
    WeightedBanach { p: f64 },
    /// The Dirichlet space (predictions coincide with the isometric scale).
    Dirichlet,
}

impl SpaceDescriptor {
    /// Hardy space with validated exponent.
    pub fn hardy(p: f64) -> Result<Self> {
        if !(p.is_finite() && p >= 1.0) {
            return Err(Error::Domain(format!("Hardy exponent must satisfy p ≥ 1, got {p}")));
        }
        Ok(SpaceDescriptor::Hardy { p })
    }

    /// Bergman space with validated exponent and weight.
    pub fn bergman(p: f64, alpha: f64) -> Result<Self> {
        if !(p.is_finite() && p >= 1.0) {
            return Err(Error::Domain(format!(
                "Bergman exponent must satisfy p ≥ 1, got {p}"
            )));
        }
        if !(alpha.is_finite() && alpha > -1.0) {
            return Err(Error::Domain(format!(
                "Bergman weight must satisfy alpha > -1, got {alpha}"
            )));
        }
        Ok(SpaceDescriptor::Bergman { p, alpha })
    }

    /// Weighted Banach space with validated weight exponent.
    pub fn weighted_banach(p: f64) -> Result<Self> {
        if !(p.is_finite() && p > 0.0) {
            return Err(Error::Domain(format!(
                "weighted-Banach exponent must satisfy p > 0, got {p}"
            )));
        }
        Ok(SpaceDescriptor::WeightedBanach { p })
    }

    /// The Bergman scaling exponent `s = (α + 2)/p`, when applicable.
    pub fn bergman_exponent(&self) -> Option<f64> {
        match self {
            SpaceDescriptor::Bergman { p, alpha } => Some((alpha + 2.0) / p),
            _ => None,
        }
    }
}

impl std::fmt::Display for SpaceDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpaceDescriptor::XFamily => write!(f, "X"),
            SpaceDescriptor::Hardy { p } => write!(f, "hardy:{p}"),
            SpaceDescriptor::Bergman { p, alpha } => write!(f, "bergman:{p}:{alpha}"),
            SpaceDescriptor::WeightedBanach { p } => write!(f, "wbanach:{p}"),
            SpaceDescriptor::Dirichlet => write!(f, "dirichlet"),
        }
    }
}

/// A predicted spectrum. `Annulus` states the spectrum as a set;
/// `AnnulusLowerBound` states only that the spectrum *contains* the annulus
/// (the Bergman and weighted-Banach cases), so consumers cannot mistake a
/// containment for an equality.
#[derive(Debug, Clone, PartialEq)]
pub enum SpectrumPrediction {
    UnitCircle,
    FiniteCyclicGroup { generator: Complex64, order: u64 },
    Annulus { r_in: f64, r_out: f64 },
    AnnulusLowerBound { r_in: f64, r_out: f64 },
}

impl SpectrumPrediction {
    /// The elements of a finite cyclic prediction (powers of the
    /// generator), if this prediction is one.
    pub fn group_elements(&self) -> Option<Vec<Complex64>> {
        match self {
            SpectrumPrediction::FiniteCyclicGroup { generator, order } => {
                let mut out = Vec::with_capacity(*order as usize);
                let mut acc = ONE;
                for _ in 0..*order {
                    out.push(acc);
                    acc *= generator;
                }
                Some(out)
            }
            _ => None,
        }
    }
}

/// Membership test for a predicted spectrum, up to `tol`: modulus distance
/// to the circle, minimum distance to a group element, or the annulus band
/// widened by `tol` on both sides.
pub fn spectrum_contains(prediction: &SpectrumPrediction, mu: Complex64, tol: f64) -> bool {
    match prediction {
        SpectrumPrediction::UnitCircle => (mu.norm() - 1.0).abs() <= tol,
        SpectrumPrediction::FiniteCyclicGroup { .. } => prediction
            .group_elements()
            .expect("finite cyclic prediction has elements")
            .iter()
            .any(|e| (mu - e).norm() <= tol),
        SpectrumPrediction::Annulus { r_in, r_out }
        | SpectrumPrediction::AnnulusLowerBound { r_in, r_out } => {
            r_in - tol <= mu.norm() && mu.norm() <= r_out + tol
        }
    }
}

/// How a rotation order was established: from an exact rational angle, or
/// by a tolerance-bounded numeric scan (which cannot distinguish a
/// multiplier from a nearby root of unity).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exactness {
    ExactRational,
    NumericDetection,
}

/// The multiplicative order of a unimodular multiplier; `order: None` marks
/// infinite order (dense powers).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RotationOrder {
    pub order: Option<u64>,
    pub exactness: Exactness,
}

/// A multiplier given either as a complex number or as an exact angle
/// fraction: `ExactAngle { num, den }` means `λ = e^{2πi·num/den}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MultiplierInput {
    Numeric(Complex64),
    ExactAngle { num: i64, den: i64 },
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The order of the cyclic group generated by a unimodular `λ`.
///
/// Exact mode reduces `num/den` and reports `den` from the lowest-terms
/// fraction. Numeric mode scans `m = 1..=m_max` for the first power within
/// `tol` of 1 and reports infinite order if none is found; such a scan is
/// tolerance-bounded by nature, which is exactly why the exact input mode
/// exists.
pub fn rotation_order(input: MultiplierInput, tol: f64, m_max: u64) -> Result<RotationOrder> {
    if m_max < 1 {
        return Err(Error::Domain("order scan bound must be at least 1".to_string()));
    }
    match input {
        MultiplierInput::ExactAngle { num, den } => {
            if den <= 0 {
                return Err(Error::Domain(format!(
                    "angle denominator must be positive, got {den}"
                )));
            }
            let den_u = den as u64;
            let num_mod = num.rem_euclid(den) as u64;
            let order = if num_mod == 0 {
                1
            } else {
                den_u / gcd(num_mod, den_u)
            };
            Ok(RotationOrder {
                order: Some(order),
                exactness: Exactness::ExactRational,
            })
        }
        MultiplierInput::Numeric(lambda) => {
            if (lambda.norm() - 1.0).abs() > tolerances::BOUNDARY {
                return Err(Error::Domain(format!(
                    "order detection needs a unimodular multiplier, got |λ| = {}",
                    lambda.norm()
                )));
            }
            let lambda = lambda / lambda.norm();
            let mut acc = ONE;
            for m in 1..=m_max {
                acc *= lambda;
                if (acc - ONE).norm() < tol {
                    return Ok(RotationOrder {
                        order: Some(m),
                        exactness: Exactness::NumericDetection,
                    });
                }
            }
            Ok(RotationOrder {
                order: None,
                exactness: Exactness::NumericDetection,
            })
        }
    }
}

/// Predict the spectrum of `C_φ`, detecting finite elliptic order
/// numerically with the default tolerance and scan bound. See
/// [`predict_spectrum_with_order`] when the order is known exactly.
pub fn predict_spectrum(
    cls: &Classification,
    space: &SpaceDescriptor,
) -> Result<SpectrumPrediction> {
    let order = match cls {
        Classification::Elliptic { multiplier, .. } => Some(rotation_order(
            MultiplierInput::Numeric(*multiplier),
            tolerances::ROTATION_ORDER,
            tolerances::DEFAULT_ORDER_MAX,
        )?),
        _ => None,
    };
    predict_spectrum_with_order(cls, space, order.as_ref())
}

/// Predict the spectrum of `C_φ` with a caller-supplied rotation order for
/// the elliptic case (pass `None` for non-elliptic symbols, where it is
/// ignored).
///
/// * Elliptic (all spaces): the finite cyclic group generated by the
///   multiplier when the order is finite, the unit circle otherwise.
/// * Parabolic (all spaces): the unit circle.
/// * Hyperbolic: the unit circle on the isometric scale and the Dirichlet
///   space; the annulus `[m^{1/p}, m^{−1/p}]` on `H^p` (an equality); the
///   annulus `[m^s, m^{−s}]`, `s = (α+2)/p`, on `A^p_α` and `[m^p, m^{−p}]`
///   on the weighted Banach space, both as containments only. Here
///   `m = φ′(attracting) ∈ (0, 1)`.
pub fn predict_spectrum_with_order(
    cls: &Classification,
    space: &SpaceDescriptor,
    order: Option<&RotationOrder>,
) -> Result<SpectrumPrediction> {
    match cls {
        Classification::Elliptic { multiplier, .. } => {
            let order = match order {
                Some(o) => *o,
                None => rotation_order(
                    MultiplierInput::Numeric(*multiplier),
                    tolerances::ROTATION_ORDER,
                    tolerances::DEFAULT_ORDER_MAX,
                )?,
            };
            Ok(match order.order {
                Some(m) => SpectrumPrediction::FiniteCyclicGroup {
                    generator: *multiplier,
                    order: m,
                },
                None => SpectrumPrediction::UnitCircle,
            })
        }
        Classification::Parabolic { .. } => Ok(SpectrumPrediction::UnitCircle),
        Classification::Hyperbolic { multiplier: m, .. } => Ok(match space {
            SpaceDescriptor::XFamily | SpaceDescriptor::Dirichlet => {
                SpectrumPrediction::UnitCircle
            }
            SpaceDescriptor::Hardy { p } => SpectrumPrediction::Annulus {
                r_in: m.powf(1.0 / p),
                r_out: m.powf(-1.0 / p),
            },
            SpaceDescriptor::Bergman { .. } => {
                let s = space.bergman_exponent().expect("Bergman space has s");
                SpectrumPrediction::AnnulusLowerBound {
                    r_in: m.powf(s),
                    r_out: m.powf(-s),
                }
            }
            SpaceDescriptor::WeightedBanach { p } => SpectrumPrediction::AnnulusLowerBound {
                r_in: m.powf(*p),
                r_out: m.powf(-*p),
            },
        }),
    }
}

/// The spectral radius of `C_φ` on `H^p` for a hyperbolic symbol:
/// `m^{−1/p} > 1` with `m = φ′(attracting)`.
pub fn hardy_spectral_radius(cls: &Classification, p: f64) -> Result<f64> {
    if !(p.is_finite() && p >= 1.0) {
        return Err(Error::Domain(format!("Hardy exponent must satisfy p ≥ 1, got {p}")));
    }
    match cls {
        Classification::Hyperbolic { multiplier, .. } => Ok(multiplier.powf(-1.0 / p)),
        other => Err(Error::WrongKind(format!(
            "Hardy spectral radius formula applies to hyperbolic symbols, got {}",
            other.kind()
        ))),
    }
}

/// The determinant `(−1)^m (μ^m − 1)` of the cyclic resolvent system for a
/// finite-order elliptic symbol; zero exactly when `μ` lies in the spectrum
/// (is an `m`-th root of unity).
pub fn resolvent_determinant(mu: Complex64, m: u32) -> Complex64 {
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    sign * (mu.powu(m) - ONE)
}

/// Closed-form solve of `f∘ψ − μf = g` for `ψ(z) = λz` with `λ^m = 1`:
///
/// `f = (1/(1 − μ^m)) Σ_{j=0}^{m−1} μ^{m−1−j} · (g∘ψ^{(j)})`.
///
/// Returns the values of `f` at the grid points after verifying the defining
/// identity on the grid; a residual above the tolerance means the
/// amplification `1/(1 − μ^m)` has eaten the working precision and the
/// result cannot be trusted.
pub fn elliptic_resolvent_solve(
    m: u32,
    lambda: Complex64,
    mu: Complex64,
    g: impl Fn(Complex64) -> Complex64,
    grid: &[Complex64],
) -> Result<Vec<Complex64>> {
    if m < 1 {
        return Err(Error::Domain("cyclic order must be at least 1".to_string()));
    }
    if (lambda.powu(m) - ONE).norm() > tolerances::ROTATION_ORDER {
        return Err(Error::Domain(format!(
            "λ must satisfy λ^{m} = 1 within {}, got defect {}",
            tolerances::ROTATION_ORDER,
            (lambda.powu(m) - ONE).norm()
        )));
    }
    let denom = ONE - mu.powu(m);
    if denom.norm() <= tolerances::RESOLVENT_SINGULAR {
        return Err(Error::SingularResolvent(format!(
            "μ^{m} is within {} of 1, so μ lies in the spectrum and the resolvent \
             does not exist",
            tolerances::RESOLVENT_SINGULAR
        )));
    }
    // ψ^{(j)}(z) = λ^j z and the weight of the j-th orbit sample is μ^{m−1−j}.
    let mut lambda_pows = Vec::with_capacity(m as usize);
    let mut mu_pows = vec![ONE; m as usize];
    let mut acc = ONE;
    for _ in 0..m as usize {
        lambda_pows.push(acc);
        acc *= lambda;
    }
    for j in (0..m as usize - 1).rev() {
        mu_pows[j] = mu_pows[j + 1] * mu;
    }
    let eval_f = |z: Complex64| -> Complex64 {
        let mut sum = Complex64::new(0.0, 0.0);
        for j in 0..m as usize {
            sum += mu_pows[j] * g(lambda_pows[j] * z);
        }
        sum / denom
    };
    let mut worst: f64 = 0.0;
    for &z in grid {
        let defect = eval_f(lambda * z) - mu * eval_f(z) - g(z);
        worst = worst.max(defect.norm());
    }
    if worst > tolerances::RESOLVENT_RESIDUAL {
        return Err(Error::NoConvergence(format!(
            "resolvent residual {worst} exceeds {} on the verification grid",
            tolerances::RESOLVENT_RESIDUAL
        )));
    }
    Ok(grid.iter().map(|&z| eval_f(z)).collect())
}
