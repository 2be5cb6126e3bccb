//! Finite sections of the composition operator in the monomial basis.
//!
//! Writing `C_φ f = f∘φ` on Taylor coefficients gives the infinite matrix
//! whose column `j` holds the expansion of `φ(z)^j`; truncating at order
//! `N` yields a dense `(N+1)×(N+1)` section. Weighted ℓ² coefficient norms
//! `‖f‖² = Σ w_k |c_k|²` model the classical space norms (unit weights for
//! `H²`, the moment weights below for Bergman spaces), and the induced
//! operator norm of a section is the largest singular value of
//! `D^{1/2} M D^{−1/2}` with `D = diag(w)`. Powering the section and taking
//! `‖Mⁿ‖^{1/n}` gives a spectral-radius diagnostic that approaches the true
//! radius from below as the section grows.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::mobius::{DiskAutomorphism, ONE, ZERO};
use crate::numerics::series::automorphism_series;

/// Largest section size the dense eigensolver is asked to handle.
pub const MAX_SECTION: usize = 512;

/// A truncated matrix model of `C_φ` together with the weights of the
/// coefficient norm it is measured in.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedOperator {
    /// `M[i][j]` = coefficient of `z^i` in `φ(z)^j`, `0 ≤ i, j ≤ N`.
    pub matrix: DMatrix<Complex64>,
    /// Positive weights `w₀..w_N`.
    pub weights: Vec<f64>,
}

impl TruncatedOperator {
    /// The truncation order `N`.
    pub fn order(&self) -> usize {
        self.matrix.nrows() - 1
    }
}

/// Weights of the unweighted coefficient norm (the `H²` model).
pub fn unit_weights(n: usize) -> Vec<f64> {
    vec![1.0; n + 1]
}

/// The Bergman moment weights `w_k = ‖z^k‖²` in `A²_α`, normalized to
/// `w₀ = 1`; generated by the ratio `w_{k+1}/w_k = (k+1)/(k+α+2)`.
pub fn bergman_weights(n: usize, alpha: f64) -> Result<Vec<f64>> {
    if !(alpha.is_finite() && alpha > -1.0) {
        return Err(Error::Domain(format!(
            "Bergman weight parameter must satisfy alpha > -1, got {alpha}"
        )));
    }
    let mut weights = Vec::with_capacity(n + 1);
    let mut w = 1.0;
    weights.push(w);
    for k in 0..n {
        w *= (k as f64 + 1.0) / (k as f64 + alpha + 2.0);
        weights.push(w);
    }
    Ok(weights)
}

/// The order-`N` section of `C_φ`: column `j` is the expansion of `φ(z)^j`
/// computed by repeated truncated multiplication of the series of `φ`, so
/// column 0 is the constant function 1.
pub fn truncated_matrix(
    phi: &DiskAutomorphism,
    n: usize,
    weights: &[f64],
) -> Result<TruncatedOperator> {
    if n < 1 {
        return Err(Error::Domain("truncation order must be at least 1".to_string()));
    }
    if weights.len() != n + 1 {
        return Err(Error::Domain(format!(
            "expected {} weights for order {n}, got {}",
            n + 1,
            weights.len()
        )));
    }
    if weights.iter().any(|w| !(w.is_finite() && *w > 0.0)) {
        return Err(Error::Domain("weights must be positive and finite".to_string()));
    }
    let series = automorphism_series(phi, n);
    let mut matrix = DMatrix::from_element(n + 1, n + 1, ZERO);
    matrix[(0, 0)] = ONE;
    let mut column = series.clone();
    for j in 1..=n {
        for i in 0..=n {
            matrix[(i, j)] = column.coeffs()[i];
        }
        if j < n {
            column = column.mul_truncated(&series, n);
        }
    }
    Ok(TruncatedOperator {
        matrix,
        weights: weights.to_vec(),
    })
}

/// Eigenvalues of the section by a dense solver.
pub fn truncation_eigenvalues(op: &TruncatedOperator) -> Result<Vec<Complex64>> {
    if op.matrix.nrows() > MAX_SECTION {
        return Err(Error::Domain(format!(
            "section size {} exceeds the dense eigensolver cap {MAX_SECTION}",
            op.matrix.nrows()
        )));
    }
    op.matrix
        .clone()
        .eigenvalues()
        .map(|values| values.iter().copied().collect())
        .ok_or_else(|| {
            Error::Eigensolver("dense eigenvalue iteration failed to converge".to_string())
        })
}

/// The Gelfand-style diagnostic `‖Mⁿ‖^{1/n}` along the dyadic powers
/// `n = 1, 2, 4, … ≤ n_powers`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralRadiusEstimate {
    /// `(n, ‖Mⁿ‖^{1/n})` for each dyadic power.
    pub sequence: Vec<(u32, f64)>,
    /// The maximum of the sequence, the reported estimate.
    pub estimate: f64,
}

/// Estimate the spectral radius of the modeled operator from the section's
/// power norms `‖Mⁿ‖^{1/n}` in the weighted norm (the largest singular
/// value of `D^{1/2} Mⁿ D^{−1/2}`).
///
/// Powers advance by repeated squaring with a per-step entry rescale and an
/// accumulated log-scale, so intermediates never overflow even when the
/// norms grow geometrically; the diagnostic therefore lands on the dyadic
/// `n ≤ n_powers`.
///
/// The reported estimate is the maximum of the sequence. For a finite
/// section the sequence starts at the operator-norm scale and then decays
/// toward the section's own spectral radius, because truncation clips the
/// boundary-concentrated coefficient mass that carries the true power
/// growth; the early entries are the informative ones and the maximum is
/// the stable summary. It remains a diagnostic, not a proof.
pub fn spectral_radius_estimate(
    op: &TruncatedOperator,
    n_powers: u32,
) -> Result<SpectralRadiusEstimate> {
    if n_powers < 1 {
        return Err(Error::Domain("need at least one power".to_string()));
    }
    let dim = op.matrix.nrows();
    let scale: Vec<f64> = op.weights.iter().map(|w| w.sqrt()).collect();
    let weighted = DMatrix::from_fn(dim, dim, |i, j| op.matrix[(i, j)] * (scale[i] / scale[j]));
    // Invariant: weighted^n = power · e^{log_scale}.
    let mut power = weighted;
    let mut log_scale = 0.0f64;
    let mut n: u32 = 1;
    let mut sequence = Vec::new();
    loop {
        let max_abs = power.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if !max_abs.is_finite() {
            return Err(Error::NoConvergence(
                "matrix power overflowed despite rescaling".to_string(),
            ));
        }
        if max_abs > 0.0 {
            power.iter_mut().for_each(|z| *z /= max_abs);
            log_scale += max_abs.ln();
        }
        let sigma = power.clone().svd(false, false).singular_values[0];
        let log_norm = sigma.ln() + log_scale;
        sequence.push((n, (log_norm / n as f64).exp()));
        if n > n_powers / 2 {
            break;
        }
        power = &power * &power;
        log_scale *= 2.0;
        n *= 2;
    }
    let estimate = sequence
        .iter()
        .map(|entry| entry.1)
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(SpectralRadiusEstimate { sequence, estimate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const TAU: f64 = std::f64::consts::TAU;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn cis(theta: f64) -> Complex64 {
        Complex64::from_polar(1.0, theta)
    }

    #[test]
    fn rotation_section_is_diagonal_with_multiplier_powers() {
        let nu = cis(0.7);
        let phi = DiskAutomorphism::rotation(nu).unwrap();
        let op = truncated_matrix(&phi, 6, &unit_weights(6)).unwrap();
        for i in 0..=6 {
            for j in 0..=6 {
                let expected = if i == j { nu.powu(i as u32) } else { ZERO };
                assert!(
                    (op.matrix[(i, j)] - expected).norm() < 1e-13,
                    "entry ({i},{j})"
                );
            }
        }
    }

    #[test]
    fn canonical_dilation_column_matches_series() {
        let phi = DiskAutomorphism::psi_r(0.5).unwrap();
        let op = truncated_matrix(&phi, 2, &unit_weights(2)).unwrap();
        let expected = [c(0.5, 0.0), c(0.75, 0.0), c(-0.375, 0.0)];
        for (i, want) in expected.iter().enumerate() {
            assert!((op.matrix[(i, 1)] - want).norm() < 1e-15, "row {i}");
        }
        // Column 0 is the constant 1.
        assert!((op.matrix[(0, 0)] - ONE).norm() < 1e-15);
        assert!(op.matrix[(1, 0)].norm() < 1e-15);
    }

    #[test]
    fn squared_section_tracks_composed_symbol() {
        // The section of φ∘φ agrees with M² in the columns that are not yet
        // polluted by truncation; column 1 is accurate to the tail size.
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..5 {
            let lambda = cis(TAU * rng.gen::<f64>());
            let a = Complex64::from_polar(0.6 * rng.gen::<f64>(), TAU * rng.gen::<f64>());
            let phi = DiskAutomorphism::new(lambda, a).unwrap();
            let n = 40;
            let op = truncated_matrix(&phi, n, &unit_weights(n)).unwrap();
            let squared = &op.matrix * &op.matrix;
            let composed = truncated_matrix(&phi.compose(&phi), n, &unit_weights(n)).unwrap();
            for i in 0..=n {
                assert!(
                    (squared[(i, 1)] - composed.matrix[(i, 1)]).norm() < 1e-8,
                    "row {i} for {phi:?}"
                );
            }
        }
    }

    #[test]
    fn eigenvalues_of_diagonal_section() {
        let nu = cis(1.1);
        let phi = DiskAutomorphism::rotation(nu).unwrap();
        let op = truncated_matrix(&phi, 2, &unit_weights(2)).unwrap();
        let mut eigs = truncation_eigenvalues(&op).unwrap();
        let mut expected = vec![ONE, nu, nu * nu];
        let sort = |v: &mut Vec<Complex64>| {
            v.sort_by(|x, y| x.arg().partial_cmp(&y.arg()).unwrap());
        };
        sort(&mut eigs);
        sort(&mut expected);
        for (got, want) in eigs.iter().zip(expected.iter()) {
            assert!((got - want).norm() < 1e-12, "{got} vs {want}");
        }
    }

    #[test]
    fn eigenvalues_of_companion_matrix() {
        // Companion matrix of z² − 1 has eigenvalues ±1.
        let mut matrix = DMatrix::from_element(2, 2, ZERO);
        matrix[(0, 1)] = ONE;
        matrix[(1, 0)] = ONE;
        let op = TruncatedOperator {
            matrix,
            weights: unit_weights(1),
        };
        let eigs = truncation_eigenvalues(&op).unwrap();
        assert!(eigs.iter().any(|e| (e - ONE).norm() < 1e-12));
        assert!(eigs.iter().any(|e| (e + ONE).norm() < 1e-12));
    }

    #[test]
    fn fifth_root_rotation_doubles_its_spectrum() {
        // ν = e^{2πi/5}, N = 9: the diagonal holds ν^0..ν^9, so each fifth
        // root of unity appears exactly twice.
        let nu = cis(TAU / 5.0);
        let phi = DiskAutomorphism::rotation(nu).unwrap();
        let op = truncated_matrix(&phi, 9, &unit_weights(9)).unwrap();
        let eigs = truncation_eigenvalues(&op).unwrap();
        assert_eq!(eigs.len(), 10);
        for k in 0..5u32 {
            let root = nu.powu(k);
            let hits = eigs.iter().filter(|e| (*e - root).norm() < 1e-10).count();
            assert_eq!(hits, 2, "multiplicity of fifth root {k}");
        }
    }

    #[test]
    fn eigensolver_cap_is_enforced() {
        let op = TruncatedOperator {
            matrix: DMatrix::from_element(513, 513, ZERO),
            weights: vec![1.0; 513],
        };
        assert!(matches!(truncation_eigenvalues(&op), Err(Error::Domain(_))));
    }

    #[test]
    fn radius_of_identity_is_one_for_all_powers() {
        let matrix = DMatrix::from_diagonal_element(5, 5, ONE);
        let op = TruncatedOperator {
            matrix,
            weights: unit_weights(4),
        };
        let estimate = spectral_radius_estimate(&op, 8).unwrap();
        for (n, value) in &estimate.sequence {
            assert!((value - 1.0).abs() < 1e-12, "power {n}");
        }
    }

    #[test]
    fn radius_of_rotation_section_is_one() {
        let phi = DiskAutomorphism::rotation(cis(0.9)).unwrap();
        let op = truncated_matrix(&phi, 12, &unit_weights(12)).unwrap();
        let estimate = spectral_radius_estimate(&op, 16).unwrap();
        assert!((estimate.estimate - 1.0).abs() < 1e-10);
    }

    #[test]
    fn radius_estimate_is_stable_under_symbol_conjugation() {
        // Conjugate symbols share their spectral radius; at fixed (N, n)
        // the section diagnostics agree loosely. A rotation conjugator is a
        // weight-preserving unitary change of basis (near-exact agreement);
        // a small generic conjugator perturbs the norm scale only mildly.
        let phi = DiskAutomorphism::psi_r(0.5).unwrap();
        let n = 60;
        let base = truncated_matrix(&phi, n, &unit_weights(n)).unwrap();
        let e0 = spectral_radius_estimate(&base, 32).unwrap().estimate;

        let rotation = DiskAutomorphism::rotation(cis(0.8)).unwrap();
        let rotated =
            truncated_matrix(&rotation.conjugate(&phi), n, &unit_weights(n)).unwrap();
        let e1 = spectral_radius_estimate(&rotated, 32).unwrap().estimate;
        assert!((e0 - e1).abs() < 1e-6, "rotation conjugate: {e0} vs {e1}");

        let tau = DiskAutomorphism::new(cis(0.3), c(0.02, -0.01)).unwrap();
        let moved = truncated_matrix(&tau.conjugate(&phi), n, &unit_weights(n)).unwrap();
        let e2 = spectral_radius_estimate(&moved, 32).unwrap().estimate;
        assert!((e0 - e2).abs() < 0.1, "generic conjugate: {e0} vs {e2}");
    }

    #[test]
    fn hyperbolic_section_approaches_hardy_radius_from_below() {
        // Moderate-size smoke test of the full-scale experiment: the
        // estimate sits just below √3 and the dyadic tail decays as
        // truncation clips the powers.
        let phi = DiskAutomorphism::psi_r(0.5).unwrap();
        let n = 80;
        let op = truncated_matrix(&phi, n, &unit_weights(n)).unwrap();
        let estimate = spectral_radius_estimate(&op, 32).unwrap();
        assert!(estimate.estimate > 1.5, "estimate {} too small", estimate.estimate);
        assert!(
            estimate.estimate < 3f64.sqrt(),
            "estimate {} should stay below the true radius",
            estimate.estimate
        );
        let first = estimate.sequence.first().unwrap().1;
        let last = estimate.sequence.last().unwrap().1;
        assert!(first > last, "tail should decay: {first} -> {last}");
    }

    #[test]
    fn bergman_weights_match_quadrature_moments() {
        // ‖z^k‖² in A²_α, normalized to w₀ = 1, equals
        // (α+1)∫₀¹ u^k (1−u)^α du. Substituting 1−u = v² removes the
        // endpoint singularity: the integral becomes
        // 2(α+1)∫₀¹ (1−v²)^k v^{2α+1} dv, which the trapezoid rule handles
        // for the α tested here.
        let alpha = -0.5;
        let weights = bergman_weights(6, alpha).unwrap();
        let nodes = 200_000;
        for (k, w) in weights.iter().enumerate() {
            let mut sum = 0.0;
            for i in 0..=nodes {
                let v = i as f64 / nodes as f64;
                let f = (1.0 - v * v).powi(k as i32) * v.powf(2.0 * alpha + 1.0);
                let weight = if i == 0 || i == nodes { 0.5 } else { 1.0 };
                sum += f * weight;
            }
            let integral = 2.0 * (alpha + 1.0) * sum / nodes as f64;
            assert!(
                (w - integral).abs() < 1e-8,
                "k={k}: recurrence {w} vs quadrature {integral}"
            );
        }
    }

    #[test]
    fn bergman_weights_closed_forms() {
        // α = 0: w_k = 1/(k+1); α = 1: w_k = 2/((k+1)(k+2)).
        let flat = bergman_weights(5, 0.0).unwrap();
        for (k, w) in flat.iter().enumerate() {
            assert!((w - 1.0 / (k as f64 + 1.0)).abs() < 1e-15, "alpha=0, k={k}");
        }
        let heavy = bergman_weights(5, 1.0).unwrap();
        for (k, w) in heavy.iter().enumerate() {
            let expected = 2.0 / ((k as f64 + 1.0) * (k as f64 + 2.0));
            assert!((w - expected).abs() < 1e-15, "alpha=1, k={k}");
        }
    }

    #[test]
    fn operator_construction_rejects_bad_input() {
        let phi = DiskAutomorphism::psi_r(0.5).unwrap();
        assert!(matches!(
            truncated_matrix(&phi, 0, &[1.0]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            truncated_matrix(&phi, 2, &[1.0, 1.0]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            truncated_matrix(&phi, 1, &[1.0, -1.0]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            bergman_weights(3, -1.0),
            Err(Error::Domain(_))
        ));
        let op = truncated_matrix(&phi, 1, &unit_weights(1)).unwrap();
        assert!(matches!(
            spectral_radius_estimate(&op, 0),
            Err(Error::Domain(_))
        ));
    }
}
