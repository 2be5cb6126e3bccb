//! Classification of disk automorphisms and spectra of the composition
//! operators they induce.
//!
//! The crate is organized in four layers:
//!
//! * [`mobius`] — the automorphism group of the unit disk: canonical
//!   `(λ, a)` parameters, evaluation, composition, fixed points, and the
//!   elliptic / parabolic / hyperbolic classification.
//! * [`normalform`] — explicit conjugations onto the canonical models
//!   (rotations, the two half-plane translations, boundary dilations),
//!   with a residual check of the conjugacy identity.
//! * [`spectra`] — symbolic spectrum predictions for composition operators
//!   on the scale of spaces handled here, plus closed-form resolvents in
//!   the finite-order elliptic case.
//! * [`numerics`] — eigenfunction families and residuals, power-series and
//!   truncated-matrix machinery, spectral-radius estimation, and the
//!   boundary limits used to check membership in the little Bloch space.
//!
//! Shared error and tolerance vocabulary lives in [`error`] and
//! [`tolerances`].

pub mod error;
pub mod mobius;
pub mod normalform;
pub mod numerics;
pub mod spectra;
pub mod tolerances;

pub use error::{Error, Result};
pub use mobius::{classify, classify_with, Classification, DiskAutomorphism, FixedPoint,
    FixedPoints, Kind};
pub use normalform::{normal_form, normal_form_with, NormalForm, NormalFormKind};
pub use numerics::{
    eigen_residual, predicted_eigenvalue, Eigenfunction, GridSchedule, TruncatedOperator,
};
pub use spectra::{
    predict_spectrum, predict_spectrum_with_order, rotation_order, spectrum_contains,
    MultiplierInput, RotationOrder, SpaceDescriptor, SpectrumPrediction,
};
pub use tolerances::Tolerances;
