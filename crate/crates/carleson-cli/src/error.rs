//! CLI error taxonomy mapped onto the documented exit codes:
//! 1 parse, 2 invariant, 3 numerical non-convergence, 4 assertion failure.

use std::fmt;

use carleson_core::kernels::KernelError;
use carleson_core::measures::MeasureError;
use carleson_core::numerics::NumericsError;
use carleson_core::reciprocal::ReciprocalError;
use carleson_core::systems::SystemError;

#[derive(Debug)]
pub enum CliError {
    /// Malformed input document or unreadable file.
    Parse(String),
    /// Well-formed document violating a domain invariant.
    Invariant(String),
    /// Quadrature or series failed to converge.
    Numerics(String),
    /// A checked inequality failed.
    Assertion(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 1,
            CliError::Invariant(_) => 2,
            CliError::Numerics(_) => 3,
            CliError::Assertion(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(msg) => write!(f, "parse error: {msg}"),
            CliError::Invariant(msg) => write!(f, "invariant violation: {msg}"),
            CliError::Numerics(msg) => write!(f, "numerical failure: {msg}"),
            CliError::Assertion(msg) => write!(f, "assertion failure: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

fn classify_numerics(e: &NumericsError) -> CliError {
    match e {
        NumericsError::NonConvergence { .. } | NumericsError::Overflow => {
            CliError::Numerics(e.to_string())
        }
        _ => CliError::Invariant(e.to_string()),
    }
}

impl From<NumericsError> for CliError {
    fn from(e: NumericsError) -> Self {
        classify_numerics(&e)
    }
}

impl From<MeasureError> for CliError {
    fn from(e: MeasureError) -> Self {
        match e {
            MeasureError::Quadrature(q) => classify_numerics(&q),
            other => CliError::Invariant(other.to_string()),
        }
    }
}

impl From<SystemError> for CliError {
    fn from(e: SystemError) -> Self {
        match e {
            SystemError::Quadrature(q) => classify_numerics(&q),
            other => CliError::Invariant(other.to_string()),
        }
    }
}

impl From<KernelError> for CliError {
    fn from(e: KernelError) -> Self {
        match e {
            KernelError::Quadrature(q) => classify_numerics(&q),
            other => CliError::Invariant(other.to_string()),
        }
    }
}

impl From<ReciprocalError> for CliError {
    fn from(e: ReciprocalError) -> Self {
        match e {
            ReciprocalError::Quadrature(q) => classify_numerics(&q),
            ReciprocalError::System(s) => s.into(),
            other => CliError::Invariant(other.to_string()),
        }
    }
}
