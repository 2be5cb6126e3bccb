//! Truncated Taylor series of disk automorphisms.
//!
//! The expansion of `φ(z) = λ(a − z)/(1 − āz)` around the origin is
//! geometric: `c₀ = λa` and `c_k = −λ(1 − |a|²) ā^{k−1}` for `k ≥ 1`. The
//! coefficients are generated iteratively (each is `ā` times the previous
//! one), which also sidesteps the `0⁰` corner of the closed form when
//! `a = 0`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::mobius::{DiskAutomorphism, ZERO};

/// A finite Taylor polynomial `c₀ + c₁z + … + c_N z^N`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<Complex64>,
}

impl PowerSeries {
    /// Wrap a coefficient list `c₀..c_N`; it must be nonempty and finite.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain(
                "a power series needs at least the constant coefficient".to_string(),
            ));
        }
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::Domain(
                "power series coefficients must be finite".to_string(),
            ));
        }
        Ok(PowerSeries { coeffs })
    }

    /// The coefficients `c₀..c_N`.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// The truncation order `N` (degree of the polynomial).
    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Horner evaluation of the polynomial.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(ZERO, |acc, &c| acc * z + c)
    }

    /// The product of two series, truncated at order `n`.
    pub fn mul_truncated(&self, other: &PowerSeries, n: usize) -> PowerSeries {
        let mut coeffs = vec![ZERO; n + 1];
        for (i, &ci) in self.coeffs.iter().enumerate().take(n + 1) {
            for (j, &cj) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                coeffs[i + j] += ci * cj;
            }
        }
        PowerSeries { coeffs }
    }
}

/// The Taylor expansion of `φ` around 0, truncated at order `n`.
pub fn automorphism_series(phi: &DiskAutomorphism, n: usize) -> PowerSeries {
    let lambda = phi.lambda();
    let a = phi.a();
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(lambda * a);
    if n >= 1 {
        let mut c = -lambda * (1.0 - a.norm_sqr());
        coeffs.push(c);
        for _ in 2..=n {
            c *= a.conj();
            coeffs.push(c);
        }
    }
    PowerSeries { coeffs }
}
