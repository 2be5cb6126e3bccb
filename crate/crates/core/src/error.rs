//! Error type shared by every module of the crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while constructing or analyzing an
/// automorphism, a normal form, or a spectral computation.
///
/// Each variant carries a human-readable message; the CLI maps variants to
/// exit codes and machine-readable categories.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument violates a domain precondition (e.g. `|a| >= 1`).
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation too close to a pole of the map in question.
    #[error("pole error: {0}")]
    Pole(String),

    /// The identity automorphism was passed where a non-identity map is
    /// required (it has no fixed-point classification).
    #[error("identity error: {0}")]
    Identity(String),

    /// The trace invariant falls inside the parabolic tolerance band but the
    /// computed roots do not behave like a boundary double root; the input is
    /// too ill-conditioned to classify.
    #[error("numerically ambiguous: {0}")]
    NumericallyAmbiguous(String),

    /// A classification of the wrong kind was supplied to a kind-specific
    /// operation.
    #[error("wrong kind: {0}")]
    WrongKind(String),

    /// The half-plane conjugate of a claimed parabolic map is not a constant
    /// imaginary translation; the classification is inconsistent.
    #[error("not a translation: {0}")]
    NotTranslation(String),

    /// A boundary triple is clockwise; mapping it onto a counterclockwise
    /// triple would require a reflection, which is not an automorphism.
    #[error("orientation error: {0}")]
    Orientation(String),

    /// A constructed conjugation failed its residual verification.
    #[error("conjugacy failure: {0}")]
    ConjugacyFailure(String),

    /// The resolvent parameter lies in (or within tolerance of) the spectrum,
    /// so the resolvent equation has no unique solution.
    #[error("singular resolvent: {0}")]
    SingularResolvent(String),

    /// An eigenfunction family was paired with a normal form it does not
    /// diagonalize.
    #[error("pairing error: {0}")]
    Pairing(String),

    /// An iterative limit did not become Cauchy at the requested tolerance.
    #[error("no convergence: {0}")]
    NoConvergence(String),

    /// The dense eigensolver failed to converge.
    #[error("eigensolver error: {0}")]
    Eigensolver(String),
}
