//! Disk automorphisms and their fixed-point classification.
//!
//! Every analytic bijection of the open unit disk 𝔻 can be written as
//! `φ(z) = λ(a − z)/(1 − ā·z)` with `|λ| = 1` and `|a| < 1`. Under
//! composition these maps form a group, conveniently represented by 2×2
//! complex matrices acting as fractional linear maps. This module implements
//! evaluation, composition, inversion, derivatives, fixed points, and the
//! elliptic / parabolic / hyperbolic trichotomy by fixed-point location.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tolerances::{self, Tolerances};

/// Shorthand used throughout the crate.
pub(crate) const I: Complex64 = Complex64::new(0.0, 1.0);
pub(crate) const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub(crate) const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// A disk automorphism in canonical form `z ↦ λ(a − z)/(1 − ā·z)`.
///
/// The fields are private so that the invariants `|λ| = 1` (after
/// renormalization) and `|a| < 1` hold for every constructed value; all
/// operations then stay inside the group without further checking.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskAutomorphism {
    lambda: Complex64,
    a: Complex64,
}

/// One fixed point in the projective sense: a rotation about the origin
/// genuinely fixes the point at infinity, which has no finite representative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FixedPoint {
    Finite(Complex64),
    Infinity,
}

impl FixedPoint {
    /// The finite value, if this is not the point at infinity.
    pub fn finite(&self) -> Option<Complex64> {
        match self {
            FixedPoint::Finite(z) => Some(*z),
            FixedPoint::Infinity => None,
        }
    }
}

/// The two fixed points of a non-identity automorphism, counting
/// multiplicity. When `multiplicity_two` is set both entries hold the same
/// boundary point (a parabolic double root).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedPoints {
    pub points: [FixedPoint; 2],
    pub multiplicity_two: bool,
}

/// Coarse kind of an automorphism, for comparisons that ignore payloads.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Elliptic,
    Parabolic,
    Hyperbolic,
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Kind::Elliptic => write!(f, "elliptic"),
            Kind::Parabolic => write!(f, "parabolic"),
            Kind::Hyperbolic => write!(f, "hyperbolic"),
        }
    }
}

/// Fixed-point classification with the conjugacy-invariant payload of each
/// kind.
///
/// * Elliptic: the interior fixed point and the unimodular multiplier
///   `φ′(interior_fixed_point)` (the rotation angle of the normal form).
/// * Parabolic: the boundary fixed point and the sign of the induced
///   translation in the right half-plane chart (selects which of the two
///   canonical parabolic maps the automorphism conjugates to).
/// * Hyperbolic: attracting and repelling boundary fixed points ordered so
///   that `φ′(attracting) < 1 < φ′(repelling)`, plus the real multiplier
///   `φ′(attracting) ∈ (0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Classification {
    Elliptic {
        interior_fixed_point: Complex64,
        multiplier: Complex64,
    },
    Parabolic {
        boundary_fixed_point: Complex64,
        translation_sign: i8,
    },
    Hyperbolic {
        attracting: Complex64,
        repelling: Complex64,
        multiplier: f64,
    },
}

impl Classification {
    pub fn kind(&self) -> Kind {
        match self {
            Classification::Elliptic { .. } => Kind::Elliptic,
            Classification::Parabolic { .. } => Kind::Parabolic,
            Classification::Hyperbolic { .. } => Kind::Hyperbolic,
        }
    }
}

impl DiskAutomorphism {
    /// Construct the automorphism `z ↦ λ(a − z)/(1 − ā·z)`.
    ///
    /// `lambda` is renormalized to exact unit modulus; it must start within
    /// [`tolerances::UNIMODULAR`] of the circle after renormalization — i.e.
    /// be nonzero and finite. `a` must satisfy `|a| < 1`.
    pub fn new(lambda: Complex64, a: Complex64) -> Result<Self> {
        if !(lambda.re.is_finite() && lambda.im.is_finite()) || lambda == ZERO {
            return Err(Error::Domain(format!(
                "rotation factor must be finite and nonzero, got {lambda}"
            )));
        }
        if !(a.re.is_finite() && a.im.is_finite()) || a.norm() >= 1.0 {
            return Err(Error::Domain(format!(
                "coefficient a must lie in the open unit disk, got |a| = {}",
                a.norm()
            )));
        }
        Ok(Self {
            lambda: lambda / lambda.norm(),
            a,
        })
    }

    /// The canonical rotation factor λ (unit modulus).
    pub fn lambda(&self) -> Complex64 {
        self.lambda
    }

    /// The canonical coefficient a (open unit disk); equals `φ⁻¹(0)`.
    pub fn a(&self) -> Complex64 {
        self.a
    }

    /// The identity map `z ↦ z`, which in canonical form is `(λ, a) = (−1, 0)`.
    pub fn identity() -> Self {
        Self {
            lambda: -ONE,
            a: ZERO,
        }
    }

    /// The rotation `z ↦ ν·z` about the origin (`ν` is renormalized to unit
    /// modulus). Canonical form `(λ, a) = (−ν, 0)`.
    pub fn rotation(nu: Complex64) -> Result<Self> {
        Self::new(-nu, ZERO)
    }

    /// The canonical parabolic map `ψ₁(z) = ((1+i)z − 1)/(z + i − 1)`,
    /// which induces the translation `w ↦ w + 2i` in the right half-plane
    /// chart. Canonical form `(λ, a) = (i, (1−i)/2)`.
    pub fn psi_one() -> Self {
        Self {
            lambda: I,
            a: Complex64::new(0.5, -0.5),
        }
    }

    /// The canonical parabolic map `ψ₂(z) = ((1−i)z − 1)/(z − i − 1)`,
    /// the chart translation `w ↦ w − 2i`. Canonical form
    /// `(λ, a) = (−i, (1+i)/2)`.
    pub fn psi_two() -> Self {
        Self {
            lambda: -I,
            a: Complex64::new(0.5, 0.5),
        }
    }

    /// The canonical hyperbolic map `ψ_r(z) = (z + r)/(1 + r·z)`, fixing ±1.
    ///
    /// `r ∈ (−1, 1)` is accepted: negative values give the inverse-direction
    /// dilation, which is needed when building conjugators. (Normal forms
    /// themselves always report `r ∈ (0, 1)`.)
    pub fn psi_r(r: f64) -> Result<Self> {
        if !(r.is_finite() && r.abs() < 1.0) {
            return Err(Error::Domain(format!(
                "dilation parameter must satisfy |r| < 1, got {r}"
            )));
        }
        Ok(Self {
            lambda: -ONE,
            a: Complex64::new(-r, 0.0),
        })
    }

    /// Whether this is the identity map, i.e. `λ = −1` within
    /// [`tolerances::UNIMODULAR`] and `|a| < `[`tolerances::UNIMODULAR`].
    pub fn is_identity(&self) -> bool {
        (self.lambda + ONE).norm() <= tolerances::UNIMODULAR
            && self.a.norm() < tolerances::UNIMODULAR
    }

    /// The 2×2 matrix `[[−λ, λa], [−ā, 1]]` whose fractional linear action
    /// `z ↦ (M₀₀z + M₀₁)/(M₁₀z + M₁₁)` reproduces the automorphism.
    pub fn matrix(&self) -> [[Complex64; 2]; 2] {
        [
            [-self.lambda, self.lambda * self.a],
            [-self.a.conj(), ONE],
        ]
    }

    /// Recover canonical `(λ, a)` form from a fractional-linear matrix that
    /// represents a disk automorphism. Errors if the matrix is degenerate or
    /// maps the disk onto the exterior (so no canonical form exists).
    pub fn from_matrix(m: [[Complex64; 2]; 2]) -> Result<Self> {
        let (a00, a01, a11) = (m[0][0], m[0][1], m[1][1]);
        if a00.norm() < tolerances::POLE || a11.norm() < tolerances::POLE {
            return Err(Error::Domain(
                "matrix does not represent a disk automorphism (degenerate corner entries)"
                    .to_string(),
            ));
        }
        let lambda = -a00 / a11;
        let a = -a01 / a00;
        Self::new(lambda, a)
    }

    /// Evaluate `φ(z)`. Boundary evaluation is allowed
    /// (`|z| ≤ 1 + `[`tolerances::CLOSED_DISK_SLACK`]).
    pub fn evaluate(&self, z: Complex64) -> Result<Complex64> {
        if z.norm() > 1.0 + tolerances::CLOSED_DISK_SLACK {
            return Err(Error::Domain(format!(
                "evaluation point must lie in the closed unit disk, got |z| = {}",
                z.norm()
            )));
        }
        let denom = ONE - self.a.conj() * z;
        if denom.norm() < tolerances::POLE {
            return Err(Error::Pole(format!("1 − ā·z vanishes at z = {z}")));
        }
        Ok(self.lambda * (self.a - z) / denom)
    }

    /// The analytic derivative `φ′(z) = λ(|a|² − 1)/(1 − ā·z)²`.
    pub fn derivative(&self, z: Complex64) -> Result<Complex64> {
        if z.norm() > 1.0 + tolerances::CLOSED_DISK_SLACK {
            return Err(Error::Domain(format!(
                "evaluation point must lie in the closed unit disk, got |z| = {}",
                z.norm()
            )));
        }
        let denom = ONE - self.a.conj() * z;
        if denom.norm() < tolerances::POLE {
            return Err(Error::Pole(format!("1 − ā·z vanishes at z = {z}")));
        }
        Ok(self.lambda * (self.a.norm_sqr() - 1.0) / (denom * denom))
    }

    /// The composition `self ∘ other` (apply `other` first), computed through
    /// the matrix representation and recanonicalized.
    pub fn compose(&self, other: &Self) -> Self {
        let f = self.matrix();
        let g = other.matrix();
        let mut m = [[ZERO; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = f[i][0] * g[0][j] + f[i][1] * g[1][j];
            }
        }
        // For matrices of genuine automorphisms the corner entries are
        // provably nonzero and the induced |a| stays below 1, so
        // canonicalization cannot fail.
        Self::from_matrix(m).expect("composition of disk automorphisms is a disk automorphism")
    }

    /// The group inverse. In canonical parameters, `(λ, a)⁻¹ = (λ̄, λa)`.
    pub fn inverse(&self) -> Self {
        Self {
            lambda: self.lambda.conj(),
            a: self.lambda * self.a,
        }
    }

    /// The conjugate `self ∘ phi ∘ self⁻¹`.
    pub fn conjugate(&self, phi: &Self) -> Self {
        self.compose(phi).compose(&self.inverse())
    }

    /// Both fixed points, counting multiplicity.
    ///
    /// Setting `φ(z) = z` gives the quadratic `ā·z² − (1 + λ)z + λa = 0`.
    /// When `a = 0` the equation degenerates: the map is the rotation
    /// `z ↦ −λz`, which fixes 0 and ∞ (reported with the infinity marker).
    /// Every returned finite point satisfies
    /// `|φ(z) − z| < `[`tolerances::FIXED_POINT_RESIDUAL`].
    pub fn fixed_points(&self) -> Result<FixedPoints> {
        if self.is_identity() {
            return Err(Error::Identity(
                "the identity fixes every point; it has no fixed-point pair".to_string(),
            ));
        }
        if self.a.norm() < tolerances::POLE {
            return Ok(FixedPoints {
                points: [FixedPoint::Finite(ZERO), FixedPoint::Infinity],
                multiplicity_two: false,
            });
        }
        let abar = self.a.conj();
        let b = -(ONE + self.lambda);
        let c = self.lambda * self.a;
        let disc = b * b - 4.0 * abar * c;
        let mut s = disc.sqrt();
        // Choose the square-root sign that adds constructively to b, so the
        // larger root comes from the numerically stable branch; the other
        // root follows from Vieta.
        if (b.conj() * s).re < 0.0 {
            s = -s;
        }
        let q = -(b + s) / 2.0;
        let z1 = q / abar;
        let z2 = c / q;
        let on_boundary = (z1.norm() - 1.0).abs() <= tolerances::BOUNDARY
            && (z2.norm() - 1.0).abs() <= tolerances::BOUNDARY;
        if on_boundary && (z1 - z2).norm() <= tolerances::ROOT_PAIR {
            let mid = (z1 + z2) / 2.0;
            let p = mid / mid.norm();
            return Ok(FixedPoints {
                points: [FixedPoint::Finite(p), FixedPoint::Finite(p)],
                multiplicity_two: true,
            });
        }
        // Root extraction via √disc loses half the working precision, so a
        // map that is parabolic up to machine noise can show a root pair
        // separated by ~√ε/|a|, past the coincidence tolerance when |a| is
        // small. In that regime the root midpoint −b/(2ā) is the stable
        // estimator of the double point: accept it when the trace invariant
        // sits in the parabolic band and the midpoint certifiably lies on
        // the boundary and is fixed to within the fixed-point residual.
        if (trace_invariant(self) - 4.0).abs() <= tolerances::PARABOLIC_BAND {
            let mid = -b / (2.0 * abar);
            if (mid.norm() - 1.0).abs() <= tolerances::BOUNDARY {
                let p = mid / mid.norm();
                if let Ok(image) = self.evaluate(p) {
                    if (image - p).norm() <= tolerances::FIXED_POINT_RESIDUAL {
                        return Ok(FixedPoints {
                            points: [FixedPoint::Finite(p), FixedPoint::Finite(p)],
                            multiplicity_two: true,
                        });
                    }
                }
            }
        }
        Ok(FixedPoints {
            points: [FixedPoint::Finite(z1), FixedPoint::Finite(z2)],
            multiplicity_two: false,
        })
    }
}

/// The normalized trace invariant `|1 − λ|² / (1 − |a|²)` of the matrix
/// representation (real and nonnegative). It is < 4 exactly for elliptic
/// maps, = 4 for parabolic ones, and > 4 for hyperbolic ones.
pub fn trace_invariant(phi: &DiskAutomorphism) -> f64 {
    (ONE - phi.lambda()).norm_sqr() / (1.0 - phi.a().norm_sqr())
}

/// Classify with the default tolerance set. See [`classify_with`].
pub fn classify(phi: &DiskAutomorphism) -> Result<Classification> {
    classify_with(phi, &Tolerances::default())
}

/// Classify a non-identity automorphism by the location of its fixed points.
///
/// The primary test is the trace invariant (parabolic band
/// `tols.parabolic_band` around 4); inputs inside the band must additionally
/// have coinciding boundary roots (within `tols.root_pair`), otherwise the
/// input is reported as numerically ambiguous.
pub fn classify_with(phi: &DiskAutomorphism, tols: &Tolerances) -> Result<Classification> {
    if phi.is_identity() {
        return Err(Error::Identity(
            "the identity automorphism has no classification".to_string(),
        ));
    }
    let t = trace_invariant(phi);
    let fps = phi.fixed_points()?;
    if (t - 4.0).abs() <= tols.parabolic_band {
        if fps.multiplicity_two {
            let p = fps.points[0]
                .finite()
                .expect("a double fixed point is finite");
            let sign = if half_plane_increment(phi, p)? > 0.0 {
                1
            } else {
                -1
            };
            return Ok(Classification::Parabolic {
                boundary_fixed_point: p,
                translation_sign: sign,
            });
        }
        // Inside the trace band without a certified double point. A small
        // `a` compresses the trace invariant toward 4 for decisively
        // non-parabolic maps too, but then the roots stay far apart and the
        // geometry still tells the kinds apart: two boundary roots mean
        // hyperbolic, an interior root means elliptic. Only when the roots
        // are themselves close together (a genuine borderline case, e.g. a
        // perturbation of the identity) do we refuse to call it.
        return match (fps.points[0], fps.points[1]) {
            (FixedPoint::Finite(x), FixedPoint::Infinity) => elliptic_at(phi, x),
            (FixedPoint::Finite(x), FixedPoint::Finite(y))
                if (x - y).norm() > tolerances::ROOT_SEPARATION =>
            {
                let on_circle = |z: Complex64| (z.norm() - 1.0).abs() <= tols.boundary;
                if on_circle(x) && on_circle(y) {
                    hyperbolic_from_roots(phi, x, y)
                } else if x.norm().min(y.norm()) < 1.0 - tols.boundary {
                    let interior = if x.norm() <= y.norm() { x } else { y };
                    elliptic_at(phi, interior)
                } else {
                    Err(Error::NumericallyAmbiguous(format!(
                        "trace invariant within {} of the parabolic value and the roots \
                         certify neither a double point nor a definite kind",
                        tols.parabolic_band
                    )))
                }
            }
            _ => Err(Error::NumericallyAmbiguous(format!(
                "trace invariant within {} of the parabolic value but the roots do not \
                 form a boundary double point",
                tols.parabolic_band
            ))),
        };
    }
    if t < 4.0 {
        // Elliptic: exactly one finite root lies strictly inside the disk.
        let interior = match (fps.points[0], fps.points[1]) {
            (FixedPoint::Finite(x), FixedPoint::Infinity) => x,
            (FixedPoint::Finite(x), FixedPoint::Finite(y)) => {
                if x.norm() <= y.norm() {
                    x
                } else {
                    y
                }
            }
            _ => unreachable!("first fixed point is always finite"),
        };
        return elliptic_at(phi, interior);
    }
    // Hyperbolic: two distinct boundary roots.
    let (z1, z2) = match (fps.points[0], fps.points[1]) {
        (FixedPoint::Finite(x), FixedPoint::Finite(y)) => (x, y),
        _ => {
            return Err(Error::NumericallyAmbiguous(
                "hyperbolic trace invariant but a fixed point is at infinity".to_string(),
            ))
        }
    };
    hyperbolic_from_roots(phi, z1, z2)
}

fn elliptic_at(phi: &DiskAutomorphism, interior: Complex64) -> Result<Classification> {
    let multiplier = phi.derivative(interior)?;
    Ok(Classification::Elliptic {
        interior_fixed_point: interior,
        multiplier,
    })
}

/// Hyperbolic classification from the two boundary roots, ordered by the
/// derivative: the attracting point is the one with multiplier below 1.
fn hyperbolic_from_roots(
    phi: &DiskAutomorphism,
    z1: Complex64,
    z2: Complex64,
) -> Result<Classification> {
    let m1 = phi.derivative(z1)?.re;
    let m2 = phi.derivative(z2)?.re;
    let (attracting, repelling, multiplier) = if m1 < m2 { (z1, z2, m1) } else { (z2, z1, m2) };
    Ok(Classification::Hyperbolic {
        attracting,
        repelling,
        multiplier,
    })
}

/// The imaginary translation increment `c` of a parabolic automorphism with
/// boundary fixed point `p`, measured in the right half-plane chart after
/// rotating `p` to 1: with `σ = ρ_p ∘ φ ∘ ρ_p⁻¹` (where `ρ_p(z) = p̄·z`),
/// the chart conjugate is `w ↦ w + ic` and `c = Im K(σ(0))` since `K(0) = 1`.
pub(crate) fn half_plane_increment(phi: &DiskAutomorphism, p: Complex64) -> Result<f64> {
    let sigma_zero = p.conj() * phi.evaluate(ZERO)?;
    let w = (ONE + sigma_zero) / (ONE - sigma_zero);
    Ok(w.im)
}
