use std::fmt;

use thiserror::Error;

/// An axiom that failed on a concrete basis tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    /// 0-based basis indices of the failing tuple.
    pub witness: Vec<usize>,
}

impl Violation {
    pub fn new(axiom: Axiom, witness: impl Into<Vec<usize>>) -> Self {
        Self {
            axiom,
            witness: witness.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.witness.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{} fails at ({})", self.axiom, idx.join(", "))
    }
}

/// Outcome of an axiom check: `Ok(())` or the first violation found.
pub type Verdict = std::result::Result<(), Violation>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    Antisymmetry,
    Jacobi,
    /// `[n, n']·m = n·(n'·m) - n'·(n·m)`
    ActionBracket,
    /// `n·[m, m'] = [n·m, m'] + [m, n·m']`
    ActionDerivation,
    HomBracket,
    Equivariance,
    Peiffer,
    XLieH1,
    XLieH2,
    BXLieH3,
    BLie1,
    BLie2,
    BLie3,
    BLie4,
    BLie5,
    BLie6,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Antisymmetry => "antisymmetry",
            Axiom::Jacobi => "Jacobi identity",
            Axiom::ActionBracket => "action bracket rule",
            Axiom::ActionDerivation => "action derivation rule",
            Axiom::HomBracket => "bracket preservation",
            Axiom::Equivariance => "equivariance",
            Axiom::Peiffer => "Peiffer identity",
            Axiom::XLieH1 => "XLieH1",
            Axiom::XLieH2 => "XLieH2",
            Axiom::BXLieH3 => "BXLieH3",
            Axiom::BLie1 => "BLie1",
            Axiom::BLie2 => "BLie2",
            Axiom::BLie3 => "BLie3",
            Axiom::BLie4 => "BLie4",
            Axiom::BLie5 => "BLie5",
            Axiom::BLie6 => "BLie6",
        };
        f.write_str(s)
    }
}

/// Exit/status category shared by the CLI and the C interface.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Category {
    Usage = 1,
    Parse = 2,
    Axiom = 3,
    Mismatch = 4,
    Internal = 5,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: String,
        expected: usize,
        found: usize,
    },
    #[error("{object}: {violation}")]
    Axiom {
        object: String,
        violation: Violation,
    },
    #[error(
        "subspace is not an ideal: bracket of basis {basis} with ideal vector {vector} leaves it"
    )]
    NotAnIdeal { basis: usize, vector: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("map is not well defined: relation {relation} is not annihilated")]
    NotWellDefined { relation: String },
    #[error("non-abelian tensor product is not a Lie algebra: {0}")]
    TensorDiagnostic(String),
    #[error("not perfect: {0}")]
    NotPerfect(String),
    #[error("source is perfect; the cokernel of its commutator is zero")]
    SourcePerfect,
    #[error("assertion failed: {0}")]
    Assertion(String),
    #[error("parse error in {location}: {message}")]
    Parse { location: String, message: String },
    #[error("unresolved reference to {kind} `{name}`")]
    Unresolved { kind: String, name: String },
    #[error("unknown command argument: {0}")]
    Usage(String),
    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn category(&self) -> Category {
        match self {
            Error::Parse { .. } | Error::Io { .. } | Error::Unresolved { .. } => Category::Parse,
            Error::Axiom { .. } => Category::Axiom,
            Error::Usage(_) => Category::Usage,
            Error::Assertion(_) => Category::Internal,
            Error::DimensionMismatch { .. }
            | Error::NotAnIdeal { .. }
            | Error::Precondition(_)
            | Error::NotWellDefined { .. }
            | Error::TensorDiagnostic(_)
            | Error::NotPerfect(_)
            | Error::SourcePerfect => Category::Mismatch,
        }
    }

    pub(crate) fn axiom(object: impl Into<String>, violation: Violation) -> Self {
        Error::Axiom {
            object: object.into(),
            violation,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
