//! End-to-end acceptance suite: nine timed criteria covering the
//! eigenvalue identities, elliptic spectra and resolvents, circle
//! containment, normal-form recovery, the Hardy comparison, the
//! little-Bloch limits, and the randomized property suites. Each test
//! prints a single PASS line with its runtime on success.

use std::time::{Duration, Instant};

use autospec_core::mobius::{classify, Classification, DiskAutomorphism};
use autospec_core::normalform::{normal_form, NormalFormKind};
use autospec_core::numerics::{
    automorphism_series, eigen_residual, little_bloch_sequence_limit, little_bloch_radial_limit,
    default_radial_sequence, predicted_eigenvalue, spectral_radius_estimate, truncated_matrix,
    unit_weights, Eigenfunction, GridSchedule,
};
use autospec_core::spectra::{
    elliptic_resolvent_solve, predict_spectrum, predict_spectrum_with_order,
    resolvent_determinant, rotation_order, MultiplierInput, SpectrumPrediction,
};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const TAU: f64 = std::f64::consts::TAU;
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn cis(theta: f64) -> Complex64 {
    Complex64::from_polar(1.0, theta)
}

fn random_automorphism(rng: &mut ChaCha8Rng, max_a: f64) -> DiskAutomorphism {
    let lambda = cis(TAU * rng.gen::<f64>());
    let a = Complex64::from_polar(max_a * rng.gen::<f64>(), TAU * rng.gen::<f64>());
    DiskAutomorphism::new(lambda, a).unwrap()
}

fn assert_budget(criterion: u32, elapsed: Duration, budget: Duration) {
    assert!(
        elapsed < budget,
        "criterion {criterion} exceeded its {budget:?} budget: {elapsed:?}"
    );
}

#[test]
fn criterion_1_parabolic_eigen_identities() {
    let start = Instant::now();
    let grid = GridSchedule::new(12, 32).unwrap();
    let mut worst: f64 = 0.0;
    for i in 0..20 {
        let s = 10.0 * i as f64 / 19.0;
        let f = Eigenfunction::exp_cusp(s).unwrap();
        let plus = eigen_residual(&DiskAutomorphism::psi_one(), &f, cis(-2.0 * s), &grid).unwrap();
        let minus = eigen_residual(&DiskAutomorphism::psi_two(), &f, cis(2.0 * s), &grid).unwrap();
        worst = worst.max(plus).max(minus);
        assert!(plus < 1e-9, "s = {s}: residual {plus} for the plus translation");
        assert!(minus < 1e-9, "s = {s}: residual {minus} for the minus translation");
    }
    let elapsed = start.elapsed();
    assert_budget(1, elapsed, Duration::from_secs(1));
    println!("criterion 1: PASS (parabolic residual sup {worst:.3e}) in {elapsed:?}");
}

#[test]
fn criterion_2_hyperbolic_eigen_identities() {
    let start = Instant::now();
    let grid = GridSchedule::new(12, 32).unwrap();
    let mut worst: f64 = 0.0;
    for r in [0.1, 0.5, 0.9] {
        let psi = DiskAutomorphism::psi_r(r).unwrap();
        for t in [0.5, -0.5, 1.0, -1.0, 3.0, -3.0] {
            let f = Eigenfunction::log_power(t).unwrap();
            let mu = cis(t * ((1.0 + r) / (1.0 - r)).ln());
            let residual = eigen_residual(&psi, &f, mu, &grid).unwrap();
            worst = worst.max(residual);
            assert!(residual < 1e-9, "r = {r}, t = {t}: residual {residual}");
        }
    }
    let elapsed = start.elapsed();
    assert_budget(2, elapsed, Duration::from_secs(1));
    println!("criterion 2: PASS (hyperbolic residual sup {worst:.3e}) in {elapsed:?}");
}

#[test]
fn criterion_3_elliptic_spectrum_and_resolvent() {
    let start = Instant::now();

    // Preset rotation 1/3: exactly the three cube roots of unity.
    let phi = DiskAutomorphism::rotation(cis(TAU / 3.0)).unwrap();
    let cls = classify(&phi).unwrap();
    let order = rotation_order(MultiplierInput::ExactAngle { num: 1, den: 3 }, 1e-9, 10).unwrap();
    let prediction =
        predict_spectrum_with_order(&cls, &autospec_core::spectra::SpaceDescriptor::XFamily,
            Some(&order))
        .unwrap();
    let elements = prediction.group_elements().expect("three-element group");
    assert_eq!(elements.len(), 3);
    for k in 0..3 {
        let root = cis(TAU * k as f64 / 3.0);
        assert!(elements.iter().any(|e| (e - root).norm() < 1e-9));
    }

    // Exact-mode order detection against an integer brute-force oracle.
    for den in 1..=50i64 {
        for num in 0..den {
            let got = rotation_order(MultiplierInput::ExactAngle { num, den }, 1e-9, 10_000)
                .unwrap()
                .order
                .unwrap();
            let oracle = (1..=den as u64)
                .find(|m| (*m as i64 * num) % den == 0)
                .unwrap();
            assert_eq!(got, oracle, "num = {num}, den = {den}");
        }
    }

    // Closed-form resolvent against the dense cyclic solve.
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for &m in &[2usize, 3, 4, 6] {
        let lambda = cis(TAU / m as f64);
        for _ in 0..20 {
            let mu = Complex64::from_polar(0.3 + 1.2 * rng.gen::<f64>(), TAU * rng.gen::<f64>());
            if (mu.powu(m as u32) - ONE).norm() < 1e-3 {
                continue;
            }
            let coeffs: Vec<Complex64> = (0..5)
                .map(|_| c(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5))
                .collect();
            let g = |z: Complex64| coeffs.iter().rev().fold(ZERO, |acc, &cf| acc * z + cf);
            let grid: Vec<Complex64> = (0..6)
                .map(|i| Complex64::from_polar(0.1 + 0.12 * i as f64, 0.41 * i as f64))
                .collect();
            let solved = elliptic_resolvent_solve(m as u32, lambda, mu, g, &grid).unwrap();
            for (idx, &z) in grid.iter().enumerate() {
                let mut a = DMatrix::from_element(m, m, ZERO);
                for j in 0..m {
                    a[(j, j)] -= mu;
                    a[(j, (j + 1) % m)] += ONE;
                }
                let b = DVector::from_iterator(m, (0..m).map(|j| g(lambda.powu(j as u32) * z)));
                let dense = a.lu().solve(&b).expect("dense solve")[0];
                assert!(
                    (dense - solved[idx]).norm() < 1e-10,
                    "m = {m}, mu = {mu}, z = {z}"
                );
            }
        }
    }

    let elapsed = start.elapsed();
    assert_budget(3, elapsed, Duration::from_secs(2));
    println!("criterion 3: PASS (group, order oracle to den 50, resolvent vs dense) in {elapsed:?}");
}

#[test]
fn criterion_4_resolvent_determinant() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    for _ in 0..50 {
        let mu = Complex64::from_polar(0.2 + 1.6 * rng.gen::<f64>(), TAU * rng.gen::<f64>());
        for m in 1..=8usize {
            let mut a = DMatrix::from_element(m, m, ZERO);
            for j in 0..m {
                a[(j, j)] -= mu;
                a[(j, (j + 1) % m)] += ONE;
            }
            let dense = a.determinant();
            let closed = resolvent_determinant(mu, m as u32);
            assert!(
                (dense - closed).norm() < 1e-10,
                "m = {m}, mu = {mu}: {dense} vs {closed}"
            );
        }
    }
    let elapsed = start.elapsed();
    assert_budget(4, elapsed, Duration::from_secs(1));
    println!("criterion 4: PASS (determinant vs dense, m ≤ 8, 50 draws) in {elapsed:?}");
}

#[test]
fn criterion_5_circle_containment() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(107);
    let mut checked = 0usize;

    // Predicted eigenvalues across all pairings.
    for _ in 0..40 {
        let cases: [(NormalFormKind, Eigenfunction); 4] = [
            (
                NormalFormKind::Rotation(cis(TAU * rng.gen::<f64>())),
                Eigenfunction::monomial(rng.gen_range(1..=8)).unwrap(),
            ),
            (
                NormalFormKind::ParabolicPlus,
                Eigenfunction::exp_cusp(10.0 * rng.gen::<f64>()).unwrap(),
            ),
            (
                NormalFormKind::ParabolicMinus,
                Eigenfunction::exp_cusp(10.0 * rng.gen::<f64>()).unwrap(),
            ),
            (
                NormalFormKind::Hyperbolic(0.05 + 0.9 * rng.gen::<f64>()),
                Eigenfunction::log_power(6.0 * rng.gen::<f64>() - 3.0).unwrap(),
            ),
        ];
        for (kind, f) in cases {
            let mu = predicted_eigenvalue(&kind, &f).unwrap();
            assert!((mu.norm() - 1.0).abs() < 1e-12, "eigenvalue for {kind:?}");
            checked += 1;
        }
    }

    // Elements sampled from finite-group predictions of conjugated
    // rational rotations.
    for _ in 0..40 {
        let den = rng.gen_range(2..=12i64);
        let num = rng.gen_range(1..den);
        let rotation = DiskAutomorphism::rotation(cis(TAU * num as f64 / den as f64)).unwrap();
        let tau = random_automorphism(&mut rng, 0.7);
        let phi = tau.conjugate(&rotation);
        let cls = classify(&phi).unwrap();
        let prediction =
            predict_spectrum(&cls, &autospec_core::spectra::SpaceDescriptor::XFamily).unwrap();
        match prediction {
            SpectrumPrediction::FiniteCyclicGroup { .. } => {
                for e in prediction.group_elements().unwrap() {
                    assert!(
                        (e.norm() - 1.0).abs() < 1e-12,
                        "group element {e} for {num}/{den}"
                    );
                    checked += 1;
                }
            }
            other => panic!("expected a finite group for {num}/{den}, got {other:?}"),
        }
    }

    let elapsed = start.elapsed();
    assert_budget(5, elapsed, Duration::from_secs(5));
    println!("criterion 5: PASS ({checked} spectral samples unimodular within 1e-12) in {elapsed:?}");
}

#[test]
fn criterion_6_normal_form_recovery() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(109);
    let mut recovered = [0u32; 3];

    for i in 0..100 {
        // Elliptic: rotation by an angle bounded away from 0.
        let theta = 0.1 + (TAU - 0.2) * rng.gen::<f64>();
        let nu = cis(theta);
        let tau = random_automorphism(&mut rng, 0.85);
        let phi = tau.conjugate(&DiskAutomorphism::rotation(nu).unwrap());
        let form = normal_form(&phi).unwrap();
        match form.kind {
            NormalFormKind::Rotation(mu) => {
                assert!((mu - nu).norm() < 1e-8, "case {i}: multiplier {mu} vs {nu}");
            }
            other => panic!("case {i}: expected a rotation, got {other:?}"),
        }
        assert!(form.residual < 1e-8, "case {i}: residual {}", form.residual);
        recovered[0] += 1;

        // Parabolic: either translation direction.
        let plus = i % 2 == 0;
        let model = if plus {
            DiskAutomorphism::psi_one()
        } else {
            DiskAutomorphism::psi_two()
        };
        let tau = random_automorphism(&mut rng, 0.85);
        let phi = tau.conjugate(&model);
        let form = normal_form(&phi).unwrap();
        match (plus, &form.kind) {
            (true, NormalFormKind::ParabolicPlus) | (false, NormalFormKind::ParabolicMinus) => {}
            (_, other) => panic!("case {i}: wrong translation direction {other:?}"),
        }
        assert!(form.residual < 1e-8, "case {i}: residual {}", form.residual);
        recovered[1] += 1;

        // Hyperbolic: canonical dilation with r bounded inside (0, 1).
        let r = 0.05 + 0.9 * rng.gen::<f64>();
        let tau = random_automorphism(&mut rng, 0.85);
        let phi = tau.conjugate(&DiskAutomorphism::psi_r(r).unwrap());
        let form = normal_form(&phi).unwrap();
        match form.kind {
            NormalFormKind::Hyperbolic(r_hat) => {
                assert!((r_hat - r).abs() < 1e-8, "case {i}: r {r_hat} vs {r}");
            }
            other => panic!("case {i}: expected a dilation, got {other:?}"),
        }
        assert!(form.residual < 1e-8, "case {i}: residual {}", form.residual);
        recovered[2] += 1;
    }

    assert_eq!(recovered, [100, 100, 100]);
    let elapsed = start.elapsed();
    assert_budget(6, elapsed, Duration::from_secs(5));
    println!("criterion 6: PASS (100/100 per kind, parameters within 1e-8) in {elapsed:?}");
}

#[test]
fn criterion_7_hardy_comparison() {
    let start = Instant::now();
    let psi = DiskAutomorphism::psi_r(0.5).unwrap();
    let cls = classify(&psi).unwrap();
    let radius = autospec_core::spectra::hardy_spectral_radius(&cls, 2.0).unwrap();
    assert!(
        (radius - 3f64.sqrt()).abs() < 1e-12,
        "formula radius {radius} vs sqrt(3)"
    );

    let n = 200;
    let op = truncated_matrix(&psi, n, &unit_weights(n)).unwrap();
    let estimate = spectral_radius_estimate(&op, 64).unwrap().estimate;
    assert!(
        (1.55..=1.74).contains(&estimate),
        "finite-section estimate {estimate} outside [1.55, 1.74]"
    );

    let elapsed = start.elapsed();
    assert_budget(7, elapsed, Duration::from_secs(30));
    println!("criterion 7: PASS (formula √3, finite-section estimate {estimate:.4}) in {elapsed:?}");
}

#[test]
fn criterion_8_little_bloch_limits() {
    let start = Instant::now();
    let sequence = little_bloch_sequence_limit(1.0, -1.0, 1_000_000).unwrap();
    let target = 2.0 * (-1.0f64).exp();
    assert!(
        (sequence - target).abs() < 1e-6,
        "sequence limit {sequence} vs {target}"
    );

    let f = Eigenfunction::log_power(1.0).unwrap();
    let radial = little_bloch_radial_limit(&f, &default_radial_sequence()).unwrap();
    assert!((radial - 2.0).abs() < 1e-6, "radial limit {radial} vs 2");

    let elapsed = start.elapsed();
    assert_budget(8, elapsed, Duration::from_secs(1));
    println!("criterion 8: PASS (sequence {sequence:.7}, radial {radial:.7}) in {elapsed:?}");
}

#[test]
fn criterion_9_property_suites() {
    let start = Instant::now();
    let grid: Vec<Complex64> = (0..100)
        .map(|i| {
            Complex64::from_polar(
                0.95 * ((i / 10) as f64 + 1.0) / 10.0,
                TAU * (i % 10) as f64 / 10.0,
            )
        })
        .collect();

    // Group laws: associativity and two-sided inverses, pointwise.
    let mut rng = ChaCha8Rng::seed_from_u64(113);
    for _ in 0..100 {
        let f = random_automorphism(&mut rng, 0.9);
        let g = random_automorphism(&mut rng, 0.9);
        let h = random_automorphism(&mut rng, 0.9);
        let left = f.compose(&g).compose(&h);
        let right = f.compose(&g.compose(&h));
        let inv = f.compose(&f.inverse());
        for &z in &grid {
            let d = (left.evaluate(z).unwrap() - right.evaluate(z).unwrap()).norm();
            assert!(d < 1e-11, "associativity defect {d} at {z}");
            let e = (inv.evaluate(z).unwrap() - z).norm();
            assert!(e < 1e-11, "inverse defect {e} at {z}");
        }
    }

    // Boundary preservation on 64 equispaced boundary points.
    let mut rng = ChaCha8Rng::seed_from_u64(127);
    for _ in 0..100 {
        let f = random_automorphism(&mut rng, 0.9);
        for j in 0..64 {
            let z = cis(TAU * j as f64 / 64.0);
            let w = f.evaluate(z).unwrap();
            assert!((w.norm() - 1.0).abs() < 1e-10, "boundary image {w}");
        }
    }

    // Multiplier reciprocity at the two hyperbolic fixed points.
    let mut rng = ChaCha8Rng::seed_from_u64(131);
    for _ in 0..100 {
        let r = 0.05 + 0.9 * rng.gen::<f64>();
        let tau = random_automorphism(&mut rng, 0.85);
        let phi = tau.conjugate(&DiskAutomorphism::psi_r(r).unwrap());
        match classify(&phi).unwrap() {
            Classification::Hyperbolic {
                attracting,
                repelling,
                multiplier,
            } => {
                assert!(multiplier > 0.0 && multiplier < 1.0);
                let p = phi.derivative(attracting).unwrap();
                let q = phi.derivative(repelling).unwrap();
                assert!(((p * q).re - 1.0).abs() < 1e-9 && (p * q).im.abs() < 1e-9);
            }
            other => panic!("expected hyperbolic, got {other:?}"),
        }
    }

    // Derivative formula against central finite differences.
    let mut rng = ChaCha8Rng::seed_from_u64(137);
    let h = 1e-6;
    for _ in 0..100 {
        let f = random_automorphism(&mut rng, 0.9);
        let z = Complex64::from_polar(0.8 * rng.gen::<f64>(), TAU * rng.gen::<f64>());
        let fd = (f.evaluate(z + c(h, 0.0)).unwrap() - f.evaluate(z - c(h, 0.0)).unwrap())
            / (2.0 * h);
        let exact = f.derivative(z).unwrap();
        assert!(
            (fd - exact).norm() / exact.norm() < 1e-6,
            "derivative mismatch at {z}"
        );
    }

    // Series/evaluation consistency at |z| ≤ 0.5 with N = 60.
    let mut rng = ChaCha8Rng::seed_from_u64(139);
    for _ in 0..100 {
        let f = random_automorphism(&mut rng, 0.9);
        let series = automorphism_series(&f, 60);
        for i in 0..8 {
            let z = Complex64::from_polar(0.5 * (i as f64 + 1.0) / 8.0, 0.9 * i as f64);
            let d = (series.eval(z) - f.evaluate(z).unwrap()).norm();
            assert!(d < 1e-9, "series defect {d} at {z}");
        }
    }

    let elapsed = start.elapsed();
    assert_budget(9, elapsed, Duration::from_secs(10));
    println!("criterion 9: PASS (five property suites, 100 cases each) in {elapsed:?}");
}
