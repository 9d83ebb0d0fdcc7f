//! Shared plumbing for the `spinpair` command-line tool: error
//! classification onto exit codes, atomic file output, serialization to
//! CSV/JSON/SVG, and the seeded cross-route verification driver.

pub mod output;
pub mod verify;

use spinpair::{
    ConcurrenceError, LimitError, LinalgError, ModelError, SweepError, ThermalError,
};
use std::io;
use std::path::Path;

/// Failure category, fixing both the exit code and the machine-readable
/// `kind` field on stderr.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed or inconsistent request. Exit code 1.
    Usage,
    /// The computation itself failed: overflow, non-convergence, no
    /// crossing found. Exit code 2.
    Numeric,
    /// Cross-route verification found disagreements. Exit code 3.
    Verification,
    /// Filesystem failure while emitting results. Exit code 2.
    Io,
}

impl ErrorKind {
    pub fn name(&self) -> &'static str {
        match self {
            ErrorKind::Usage => "usage",
            ErrorKind::Numeric => "numeric",
            ErrorKind::Verification => "verification",
            ErrorKind::Io => "io",
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            ErrorKind::Usage => 1,
            ErrorKind::Numeric => 2,
            ErrorKind::Verification => 3,
            ErrorKind::Io => 2,
        }
    }
}

#[derive(Debug)]
pub struct CliError {
    pub kind: ErrorKind,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { kind: ErrorKind::Usage, message: message.into() }
    }

    pub fn numeric(message: impl Into<String>) -> Self {
        CliError { kind: ErrorKind::Numeric, message: message.into() }
    }

    pub fn verification(message: impl Into<String>) -> Self {
        CliError { kind: ErrorKind::Verification, message: message.into() }
    }
}

impl From<ModelError> for CliError {
    fn from(e: ModelError) -> Self {
        CliError::usage(e.to_string())
    }
}

impl From<LinalgError> for CliError {
    fn from(e: LinalgError) -> Self {
        CliError::numeric(e.to_string())
    }
}

impl From<ThermalError> for CliError {
    fn from(e: ThermalError) -> Self {
        match e {
            ThermalError::InvalidTemperature { .. } => CliError::usage(e.to_string()),
            ThermalError::Overflow { .. } | ThermalError::Linalg(_) => {
                CliError::numeric(e.to_string())
            }
        }
    }
}

impl From<ConcurrenceError> for CliError {
    fn from(e: ConcurrenceError) -> Self {
        match e {
            ConcurrenceError::Thermal(inner) => inner.into(),
            ConcurrenceError::Linalg(_) | ConcurrenceError::NegativeRadicand { .. } => {
                CliError::numeric(e.to_string())
            }
        }
    }
}

impl From<LimitError> for CliError {
    fn from(e: LimitError) -> Self {
        CliError::numeric(e.to_string())
    }
}

impl From<SweepError> for CliError {
    fn from(e: SweepError) -> Self {
        match e {
            SweepError::InvalidAxis(_) => CliError::usage(e.to_string()),
            SweepError::Evaluation { index, source } => {
                let mut err: CliError = source.into();
                err.message = format!("grid point {index}: {}", err.message);
                err
            }
            SweepError::NoEntanglement
            | SweepError::NoVanishing { .. }
            | SweepError::BisectionExhausted { .. } => CliError::numeric(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError { kind: ErrorKind::Io, message: e.to_string() }
    }
}

/// Write `bytes` to `path` atomically: the content lands in a sibling
/// temporary file first and is renamed into place, so a crash never leaves
/// a half-written result behind.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> io::Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = std::path::PathBuf::from(tmp);
    std::fs::write(&tmp, bytes)?;
    std::fs::rename(&tmp, path)
}
