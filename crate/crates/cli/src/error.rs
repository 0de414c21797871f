use std::fmt;

use phcurves::dual::DualError;
use phcurves::factorization::FactorError;
use phcurves::hermite::HermiteError;
use phcurves::linear::LinearError;
use phcurves::residue::ResidueError;
use phcurves::verify::VerifyError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Invalid,
    Infeasible,
    Verification,
}

/// An error with its process exit code.
#[derive(Debug)]
pub struct Failure {
    pub kind: Kind,
    pub message: String,
}

impl Failure {
    pub fn invalid(m: impl fmt::Display) -> Self {
        Self {
            kind: Kind::Invalid,
            message: m.to_string(),
        }
    }

    pub fn infeasible(m: impl fmt::Display) -> Self {
        Self {
            kind: Kind::Infeasible,
            message: m.to_string(),
        }
    }

    pub fn verification(m: impl fmt::Display) -> Self {
        Self {
            kind: Kind::Verification,
            message: m.to_string(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.kind {
            Kind::Invalid => 2,
            Kind::Infeasible => 3,
            Kind::Verification => 4,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            Kind::Invalid => "invalid input",
            Kind::Infeasible => "infeasible construction",
            Kind::Verification => "verification failed",
        };
        write!(f, "{tag}: {}", self.message)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::invalid(e)
    }
}

impl From<FactorError> for Failure {
    fn from(e: FactorError) -> Self {
        match e {
            FactorError::UnsupportedSplittingField(_) => Failure::infeasible(e),
            _ => Failure::invalid(e),
        }
    }
}

impl From<LinearError> for Failure {
    fn from(e: LinearError) -> Self {
        Failure::invalid(e)
    }
}

impl From<ResidueError> for Failure {
    fn from(e: ResidueError) -> Self {
        match e {
            ResidueError::NonzeroResidue { .. } | ResidueError::EmptySpace(_) => {
                Failure::infeasible(e)
            }
            _ => Failure::invalid(e),
        }
    }
}

impl From<DualError> for Failure {
    fn from(e: DualError) -> Self {
        match e {
            DualError::NotAnEnvelopeSolution(_) => Failure::invalid(e),
            _ => Failure::infeasible(e),
        }
    }
}

impl From<HermiteError> for Failure {
    fn from(e: HermiteError) -> Self {
        match e {
            HermiteError::Infeasible { .. } | HermiteError::Underdetermined { .. } => {
                Failure::infeasible(e)
            }
            HermiteError::Basis(inner) => inner.into(),
            _ => Failure::invalid(e),
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        Failure::verification(e)
    }
}
