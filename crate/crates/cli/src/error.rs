//! CLI error categories and the exit-code contract.

use autospec_core::Error as CoreError;

/// A failed command, bucketed by exit code.
///
/// * `Usage` (exit 2): bad flags, unparsable input, domain violations,
///   invalid family/space names, invalid eigenfunction pairings.
/// * `Identity` (exit 3): the identity map was passed where a fixed-point
///   classification is required.
/// * `Verification` (exit 4): a residual check failed, or the input is too
///   ill-conditioned to classify or conjugate.
/// * `Numeric` (exit 5): the eigensolver or an iterative limit failed.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Identity(String),
    Verification(String),
    Numeric(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Identity(_) => 3,
            CliError::Verification(_) => 4,
            CliError::Numeric(_) => 5,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Identity(_) => "identity",
            CliError::Verification(_) => "verification",
            CliError::Numeric(_) => "numeric",
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m)
            | CliError::Identity(m)
            | CliError::Verification(m)
            | CliError::Numeric(m) => m,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(err: CoreError) -> Self {
        let message = err.to_string();
        match err {
            CoreError::Domain(_)
            | CoreError::Pole(_)
            | CoreError::WrongKind(_)
            | CoreError::Orientation(_)
            | CoreError::Pairing(_) => CliError::Usage(message),
            CoreError::Identity(_) => CliError::Identity(message),
            CoreError::NumericallyAmbiguous(_)
            | CoreError::NotTranslation(_)
            | CoreError::ConjugacyFailure(_) => CliError::Verification(message),
            CoreError::SingularResolvent(_)
            | CoreError::NoConvergence(_)
            | CoreError::Eigensolver(_) => CliError::Numeric(message),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
