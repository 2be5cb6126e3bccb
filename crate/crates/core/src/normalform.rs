//! Normal forms of disk automorphisms and explicit conjugators.
//!
//! Every non-identity disk automorphism is conjugate, inside the
//! automorphism group, to exactly one of four canonical models:
//!
//! * elliptic → a rotation `z ↦ λz` with `λ` the multiplier at the interior
//!   fixed point,
//! * parabolic → one of the two half-plane translations `ψ₁`, `ψ₂`,
//! * hyperbolic → the boundary dilation `ψ_r(z) = (z+r)/(1+rz)` with
//!   `r ∈ (0, 1)` determined by the multiplier at the attracting point.
//!
//! This module constructs the conjugator `τ` with `ψ = τ∘φ∘τ⁻¹` for each
//! kind and verifies the identity on a concentric-circle grid before
//! returning. The half-plane chart `K(z) = (1+z)/(1−z)` used in the
//! parabolic construction is also exposed.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::mobius::{Classification, DiskAutomorphism, ONE, ZERO};
use crate::tolerances::{self, Tolerances};

/// The canonical model a given automorphism conjugates to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NormalFormKind {
    /// `z ↦ λz` with `λ` the (unimodular) elliptic multiplier.
    Rotation(Complex64),
    /// `ψ₁(z) = ((1+i)z − 1)/(z + i − 1)`, the chart translation `w ↦ w + 2i`.
    ParabolicPlus,
    /// `ψ₂(z) = ((1−i)z − 1)/(z − i − 1)`, the chart translation `w ↦ w − 2i`.
    ParabolicMinus,
    /// `ψ_r(z) = (z + r)/(1 + rz)` with `r ∈ (0, 1)`.
    Hyperbolic(f64),
}

impl NormalFormKind {
    /// The canonical automorphism this kind names.
    pub fn automorphism(&self) -> DiskAutomorphism {
        match self {
            NormalFormKind::Rotation(lambda) => DiskAutomorphism::rotation(*lambda)
                .expect("rotation multiplier is unimodular by construction"),
            NormalFormKind::ParabolicPlus => DiskAutomorphism::psi_one(),
            NormalFormKind::ParabolicMinus => DiskAutomorphism::psi_two(),
            NormalFormKind::Hyperbolic(r) => {
                DiskAutomorphism::psi_r(*r).expect("dilation parameter lies in (0,1)")
            }
        }
    }
}

/// A normal form together with the conjugator that realizes it and the
/// measured conjugacy residual `sup |τ(φ(τ⁻¹(z))) − ψ(z)|` on the default
/// verification grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalForm {
    pub kind: NormalFormKind,
    pub conjugator: DiskAutomorphism,
    pub residual: f64,
}

/// The involution `τ_a(z) = (a − z)/(1 − ā·z)`, which swaps `0` and `a` and
/// is its own inverse. In canonical parameters it is `(λ, a) = (1, a)`.
pub fn involution(a: Complex64) -> Result<DiskAutomorphism> {
    DiskAutomorphism::new(ONE, a)
}

/// The image of a disk point under the Cayley chart `K(z) = (1+z)/(1−z)`,
/// which maps 𝔻 onto the right half-plane. Points of ∂𝔻 land on the
/// imaginary axis; such results carry the `boundary` flag instead of an
/// error so that chart computations can work up to the closed disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPlanePoint {
    pub w: Complex64,
    pub boundary: bool,
}

/// The Cayley chart `K(z) = (1+z)/(1−z)`. Accepts the closed disk except
/// for the pole at `z = 1`.
pub fn cayley(z: Complex64) -> Result<HalfPlanePoint> {
    if z.norm() > 1.0 + tolerances::CLOSED_DISK_SLACK {
        return Err(Error::Domain(format!(
            "chart input must lie in the closed unit disk, got |z| = {}",
            z.norm()
        )));
    }
    if (ONE - z).norm() < tolerances::POLE {
        return Err(Error::Pole("the Cayley chart has its pole at z = 1".to_string()));
    }
    let w = (ONE + z) / (ONE - z);
    Ok(HalfPlanePoint {
        w,
        boundary: w.re.abs() <= tolerances::BOUNDARY,
    })
}

/// The inverse chart `K⁻¹(w) = (w − 1)/(w + 1)`, defined on the closed
/// right half-plane except for the pole at `w = −1` (reachable only through
/// the boundary axis).
pub fn cayley_inverse(w: Complex64) -> Result<Complex64> {
    if (w + ONE).norm() < tolerances::POLE {
        return Err(Error::Pole(
            "the inverse Cayley chart has its pole at w = -1".to_string(),
        ));
    }
    if w.re < -tolerances::BOUNDARY {
        return Err(Error::Domain(format!(
            "inverse chart input must lie in the closed right half-plane, got Re w = {}",
            w.re
        )));
    }
    Ok((w - ONE) / (w + ONE))
}

/// Sup of the conjugacy defect `|τ(φ(τ⁻¹(z))) − ψ(z)|` over a grid of
/// `grid_size` concentric circles of radii `1 − 2^{−k}`, `k = 1..grid_size`,
/// with 32 samples each. The grid emphasizes near-boundary behavior, where
/// automorphisms vary the most. `grid_size` must be at least 8.
pub fn verify_conjugacy(
    phi: &DiskAutomorphism,
    psi: &DiskAutomorphism,
    tau: &DiskAutomorphism,
    grid_size: u32,
) -> f64 {
    assert!(grid_size >= 8, "conjugacy grid needs at least 8 circles");
    let tau_inv = tau.inverse();
    let mut worst: f64 = 0.0;
    for k in 1..=grid_size {
        let r = 1.0 - 0.5f64.powi(k as i32);
        for j in 0..tolerances::DEFAULT_GRID_ANGLES {
            let theta = std::f64::consts::TAU * j as f64 / tolerances::DEFAULT_GRID_ANGLES as f64;
            let z = Complex64::from_polar(r, theta);
            // Every factor is an automorphism and z is strictly interior, so
            // no pole or domain error can occur along the chain.
            let lhs = tau
                .evaluate(phi.evaluate(tau_inv.evaluate(z).expect("interior point"))
                    .expect("interior point"))
                .expect("interior point");
            let rhs = psi.evaluate(z).expect("interior point");
            worst = worst.max((lhs - rhs).norm());
        }
    }
    worst
}

/// Normal form of an elliptic automorphism: `Rotation(φ′(z₀))` with
/// conjugator the involution at the interior fixed point `z₀`. See
/// [`elliptic_normal_form_with`] for the tolerance-aware variant.
pub fn elliptic_normal_form(phi: &DiskAutomorphism, cls: &Classification) -> Result<NormalForm> {
    elliptic_normal_form_with(phi, cls, &Tolerances::default())
}

/// Tolerance-aware variant of [`elliptic_normal_form`].
///
/// Conjugating by the involution `τ_{z₀}` moves the fixed point to the
/// origin; an automorphism fixing the origin is a rotation, and the chain
/// rule gives its angle as exactly `φ′(z₀)` (the derivative factors of the
/// involution cancel). The conjugacy residual is verified before returning.
pub fn elliptic_normal_form_with(
    phi: &DiskAutomorphism,
    cls: &Classification,
    tols: &Tolerances,
) -> Result<NormalForm> {
    let Classification::Elliptic {
        interior_fixed_point,
        multiplier,
    } = cls
    else {
        return Err(Error::WrongKind(format!(
            "elliptic normal form requires an elliptic classification, got {}",
            cls.kind()
        )));
    };
    let conjugator = involution(*interior_fixed_point)?;
    let kind = NormalFormKind::Rotation(*multiplier);
    finish(phi, kind, conjugator, tols)
}

/// Normal form of a parabolic automorphism: `ParabolicPlus` or
/// `ParabolicMinus` by the sign of the chart translation. See
/// [`parabolic_normal_form_with`].
pub fn parabolic_normal_form(phi: &DiskAutomorphism, cls: &Classification) -> Result<NormalForm> {
    parabolic_normal_form_with(phi, cls, &Tolerances::default())
}

/// Tolerance-aware variant of [`parabolic_normal_form`].
///
/// Construction: rotate the boundary fixed point `p` to 1 with
/// `ρ_p(z) = p̄·z`; in the Cayley chart the rotated map becomes a pure
/// imaginary translation `w ↦ w + ic` (this is measured, and any drift
/// beyond `tols.translation_drift` across a 50-point probe is reported as
/// `NotTranslation`); the dilation `w ↦ (2/|c|)w` — realized in the disk by
/// `ψ_r̂` with `r̂ = (k−1)/(k+1)`, `k = 2/|c|` — rescales the increment to
/// `±2i`. The sign of `c` selects `ψ₁` (`c > 0`, matching the chart law of
/// `ψ₁`) or `ψ₂`.
pub fn parabolic_normal_form_with(
    phi: &DiskAutomorphism,
    cls: &Classification,
    tols: &Tolerances,
) -> Result<NormalForm> {
    let Classification::Parabolic {
        boundary_fixed_point,
        ..
    } = cls
    else {
        return Err(Error::WrongKind(format!(
            "parabolic normal form requires a parabolic classification, got {}",
            cls.kind()
        )));
    };
    let p = *boundary_fixed_point;
    let rho = DiskAutomorphism::rotation(p.conj())?;
    let sigma = rho.compose(phi).compose(&rho.inverse());
    let c = translation_increment(&sigma, tols)?;
    let k = 2.0 / c.abs();
    let r_hat = (k - 1.0) / (k + 1.0);
    let scale = DiskAutomorphism::psi_r(r_hat)?;
    let conjugator = scale.compose(&rho);
    let kind = if c > 0.0 {
        NormalFormKind::ParabolicPlus
    } else {
        NormalFormKind::ParabolicMinus
    };
    finish(phi, kind, conjugator, tols)
}

/// Measure the chart translation increment of an automorphism expected to
/// fix 1: returns the real `c` with `K(σ(z)) = K(z) + ic`, probing 50
/// interior points and rejecting the input if the increment drifts.
fn translation_increment(sigma: &DiskAutomorphism, tols: &Tolerances) -> Result<f64> {
    let base = cayley(sigma.evaluate(ZERO).expect("interior point"))?.w - ONE;
    let c = base.im;
    // The dilation parameter divides by |c|; a translation this small means
    // the map was within rounding error of the identity all along.
    if c.abs() < 1e-12 {
        return Err(Error::NotTranslation(
            "chart increment is numerically zero; the map is too close to the identity"
                .to_string(),
        ));
    }
    let ic = Complex64::new(0.0, c);
    for i in 0..5 {
        let r = 0.1 + 0.2 * i as f64;
        for j in 0..10 {
            let theta = std::f64::consts::TAU * j as f64 / 10.0;
            let z = Complex64::from_polar(r, theta);
            let delta = cayley(sigma.evaluate(z).expect("interior point"))?.w - cayley(z)?.w;
            if (delta - ic).norm() > tols.translation_drift {
                return Err(Error::NotTranslation(format!(
                    "chart increment drifts by {} across the probe grid; \
                     the map is not conjugate to a translation",
                    (delta - ic).norm()
                )));
            }
        }
    }
    Ok(c)
}

/// The disk automorphism sending one boundary triple to another.
///
/// Both triples must consist of distinct points of ∂𝔻 listed so that the
/// third point lies on the counterclockwise arc from the first to the
/// second; mismatched or clockwise triples would force a reflection, which
/// is not an automorphism, and are rejected with `Orientation`.
pub fn mobius_from_boundary_triple(
    src: [Complex64; 3],
    dst: [Complex64; 3],
) -> Result<DiskAutomorphism> {
    for z in src.iter().chain(dst.iter()) {
        if (z.norm() - 1.0).abs() > tolerances::BOUNDARY {
            return Err(Error::Domain(format!(
                "triple points must lie on the unit circle, got |z| = {}",
                z.norm()
            )));
        }
    }
    for t in [&src, &dst] {
        for (i, j) in [(0usize, 1usize), (0, 2), (1, 2)] {
            if (t[i] - t[j]).norm() < 1e-9 {
                return Err(Error::Domain(
                    "triple points must be pairwise distinct".to_string(),
                ));
            }
        }
        if !is_ccw_triple(t[0], t[1], t[2]) {
            return Err(Error::Orientation(
                "triple is clockwise: the third point must lie on the counterclockwise \
                 arc from the first to the second"
                    .to_string(),
            ));
        }
    }
    let m_src = to_zero_inf_one(src);
    let m_dst = to_zero_inf_one(dst);
    // 2×2 adjugate inverts up to a scalar, which a fractional linear action
    // ignores.
    let adj = [[m_dst[1][1], -m_dst[0][1]], [-m_dst[1][0], m_dst[0][0]]];
    let mut m = [[ZERO; 2]; 2];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = adj[i][0] * m_src[0][j] + adj[i][1] * m_src[1][j];
        }
    }
    DiskAutomorphism::from_matrix(m)
}

/// Whether `u` lies on the counterclockwise arc from `p` to `q`.
fn is_ccw_triple(p: Complex64, q: Complex64, u: Complex64) -> bool {
    ((q - p) * (u - p).conj()).im > 0.0
}

/// Matrix of the fractional linear map sending `(z₁, z₂, z₃) → (0, ∞, 1)`,
/// i.e. `z ↦ ((z − z₁)(z₃ − z₂)) / ((z − z₂)(z₃ − z₁))`.
fn to_zero_inf_one(t: [Complex64; 3]) -> [[Complex64; 2]; 2] {
    let (z1, z2, z3) = (t[0], t[1], t[2]);
    [
        [z3 - z2, -z1 * (z3 - z2)],
        [z3 - z1, -z2 * (z3 - z1)],
    ]
}

/// The midpoint of the counterclockwise arc from `p` to `q`, renormalized
/// onto the circle.
fn ccw_arc_midpoint(p: Complex64, q: Complex64) -> Complex64 {
    let mut delta = q.arg() - p.arg();
    while delta <= 0.0 {
        delta += std::f64::consts::TAU;
    }
    let u = p * Complex64::from_polar(1.0, delta / 2.0);
    u / u.norm()
}

/// Normal form of a hyperbolic automorphism: `Hyperbolic(r)` with
/// `r = (1 − m)/(1 + m)` for `m = φ′(attracting)`. See
/// [`hyperbolic_normal_form_with`].
pub fn hyperbolic_normal_form(phi: &DiskAutomorphism, cls: &Classification) -> Result<NormalForm> {
    hyperbolic_normal_form_with(phi, cls, &Tolerances::default())
}

/// Tolerance-aware variant of [`hyperbolic_normal_form`].
///
/// The conjugator sends the attracting point `p` to 1 and the repelling
/// point `q` to −1 through a boundary-triple solve; the third anchor is the
/// counterclockwise arc midpoint on each side, which keeps both triples
/// positively oriented. Any automorphism with `τ(p) = 1, τ(q) = −1` works
/// (the maps fixing ±1 commute with `ψ_r`), so if the first anchor choice
/// fails the residual check, the complementary arc midpoints are tried once
/// before giving up.
pub fn hyperbolic_normal_form_with(
    phi: &DiskAutomorphism,
    cls: &Classification,
    tols: &Tolerances,
) -> Result<NormalForm> {
    let Classification::Hyperbolic {
        attracting,
        repelling,
        multiplier,
    } = cls
    else {
        return Err(Error::WrongKind(format!(
            "hyperbolic normal form requires a hyperbolic classification, got {}",
            cls.kind()
        )));
    };
    let (p, q, m) = (*attracting, *repelling, *multiplier);
    let r = (1.0 - m) / (1.0 + m);
    let kind = NormalFormKind::Hyperbolic(r);
    let u = ccw_arc_midpoint(p, q);
    let i = Complex64::new(0.0, 1.0);
    let primary = mobius_from_boundary_triple([p, q, u], [ONE, -ONE, i])?;
    match finish(phi, kind, primary, tols) {
        Ok(nf) => Ok(nf),
        Err(Error::ConjugacyFailure(_)) => {
            // The complementary arc midpoints give the retry triple; note
            // −u is exactly the counterclockwise midpoint from q back to p.
            let retry = mobius_from_boundary_triple([q, p, -u], [-ONE, ONE, -i])?;
            finish(phi, kind, retry, tols)
        }
        Err(e) => Err(e),
    }
}

/// Normal form of any non-identity automorphism, dispatching on its
/// classification. See [`normal_form_with`].
pub fn normal_form(phi: &DiskAutomorphism) -> Result<NormalForm> {
    normal_form_with(phi, &Tolerances::default())
}

/// Tolerance-aware variant of [`normal_form`].
pub fn normal_form_with(phi: &DiskAutomorphism, tols: &Tolerances) -> Result<NormalForm> {
    let cls = crate::mobius::classify_with(phi, tols)?;
    match cls {
        Classification::Elliptic { .. } => elliptic_normal_form_with(phi, &cls, tols),
        Classification::Parabolic { .. } => parabolic_normal_form_with(phi, &cls, tols),
        Classification::Hyperbolic { .. } => hyperbolic_normal_form_with(phi, &cls, tols),
    }
}

/// Assemble the result, verifying the conjugacy identity on the default
/// grid and rejecting candidates whose residual exceeds the tolerance.
fn finish(
    phi: &DiskAutomorphism,
    kind: NormalFormKind,
    conjugator: DiskAutomorphism,
    tols: &Tolerances,
) -> Result<NormalForm> {
    let psi = kind.automorphism();
    let residual = verify_conjugacy(phi, &psi, &conjugator, tolerances::DEFAULT_GRID_DEPTH);
    if residual > tols.conjugacy_residual {
        return Err(Error::ConjugacyFailure(format!(
            "conjugacy residual {residual} exceeds tolerance {}",
            tols.conjugacy_residual
        )));
    }
    Ok(NormalForm {
        kind,
        conjugator,
        residual,
    })
}
