use thiserror::Error;

/// Errors raised by constructors and operations across the crate.
///
/// Axiom violations found by the `validate_*` family are not errors; they are
/// reported as data in a [`crate::CheckReport`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field of order {p}^{m} is larger than the supported 2^16 elements")]
    FieldTooLarge { p: u64, m: u32 },
    #[error("modulus is not a monic irreducible polynomial of degree {0}")]
    BadModulus(usize),
    #[error("inverse of zero")]
    InverseOfZero,
    #[error("field context mismatch")]
    ContextMismatch,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("cannot base change from degree {from} to degree {to}")]
    BadExtension { from: u32, to: u32 },
    #[error("element is zero")]
    ZeroElement,
    #[error("subspace is not a two-sided ideal: product with basis element {basis} leaves it")]
    NotAnIdeal { basis: usize },
    #[error("not a Hopf ideal: {inclusion} fails (witness {witness:?})")]
    NotHopfIdeal { inclusion: &'static str, witness: Vec<u32> },
    #[error("not a Hopf subalgebra: {0}")]
    NotHopfSubalgebra(&'static str),
    #[error("algebra is not {0}")]
    WrongAlgebraKind(&'static str),
    #[error("Hopf algebra is not irreducible")]
    NotIrreducible,
    #[error("group is not a {0}-group")]
    NotPGroup(u64),
    #[error("base field is not a prime field")]
    NonPrimeField,
    #[error("element already lies in the Hopf subalgebra")]
    ElementInSubalgebra,
    #[error("invalid {what}: {detail}")]
    Invalid { what: &'static str, detail: String },
    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
