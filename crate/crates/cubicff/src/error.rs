use thiserror::Error;

/// Every failure the library can report.
///
/// Variants split into rejected input (the caller asked for something the
/// theory does not cover) and internal inconsistencies, see [`Error::is_internal`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {0} exceeds the supported maximum of 2^20")]
    FieldTooLarge(u64),
    #[error("modulus is not a monic irreducible polynomial of degree {0}")]
    BadModulus(u32),
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("valuation is negative at the requested place")]
    NegativeValuation,
    #[error("no root exists in the residue field")]
    NoRoot,
    #[error("moduli are not pairwise coprime")]
    NonCoprimeModuli,
    #[error("the cubic is reducible over F_q(x)")]
    ReducibleInput,
    #[error("the cubic is purely inseparable")]
    InseparableInput,
    #[error("input is not a monic cubic in y")]
    NotMonicCubic,
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("constant field extension (no ramification)")]
    ConstantExtension,
    #[error("different has odd degree {0}")]
    OddDifferentDegree(i64),
    #[error("oracle needs q = 1 mod 3")]
    WrongConstantField,
    #[error("extension is not Galois")]
    NotGalois,
    #[error("place is not applicable for this check")]
    InapplicablePlace,
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    /// True for failures that indicate a bug or a theory/implementation mismatch
    /// rather than unsupported input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_) | Error::OddDifferentDegree(_))
    }

    /// Short machine-readable name used in JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::ZeroDegree => "ZeroDegree",
            Error::FieldTooLarge(_) => "FieldTooLarge",
            Error::BadModulus(_) => "BadModulus",
            Error::ZeroArgument => "ZeroArgument",
            Error::NegativeValuation => "NegativeValuation",
            Error::NoRoot => "NoRoot",
            Error::NonCoprimeModuli => "NonCoprimeModuli",
            Error::ReducibleInput => "ReducibleInput",
            Error::InseparableInput => "InseparableInput",
            Error::NotMonicCubic => "NotMonicCubic",
            Error::Syntax { .. } => "SyntaxError",
            Error::ConstantExtension => "ConstantExtension",
            Error::OddDifferentDegree(_) => "OddDifferentDegree",
            Error::WrongConstantField => "WrongConstantField",
            Error::NotGalois => "NotGalois",
            Error::InapplicablePlace => "InapplicablePlace",
            Error::Internal(_) => "Internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
