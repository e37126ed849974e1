use thiserror::Error;

use crate::complex::Simplex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The empty set is not a simplex.
    #[error("the empty set is not a simplex")]
    EmptySimplex,
    #[error("operation requires a nonempty complex")]
    EmptyComplex,
    #[error("vertex {0} is not a vertex of the complex")]
    UnknownVertex(usize),
    #[error("simplex {0} is not a member of the complex")]
    SimplexNotInComplex(Simplex),
    #[error("degree {degree} out of range (complex has dimension {max})")]
    DegreeOutOfRange { degree: isize, max: isize },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("unknown field `{0}` (expected f2, f<p> for a prime p, or q)")]
    UnknownField(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("chain is not a cycle")]
    NotACycle,
    #[error("not a pseudomanifold: {0}")]
    NotPseudomanifold(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("cover member {0} is empty")]
    EmptyMember(usize),
    #[error("cover member {0} is not a subcomplex of the host")]
    MemberNotInHost(usize),
    #[error("the union of the cover is not the host complex")]
    NotCovering,
    #[error("cover has {len} members, above the limit of {limit}")]
    CoverTooLarge { len: usize, limit: usize },
    #[error("carrier of {simplex} has nonzero reduced homology in degree {degree}")]
    CarrierNotAcyclic { simplex: Simplex, degree: isize },
    #[error("carrier is not monotone at {0}")]
    CarrierNotMonotone(Simplex),
    #[error("colour {0} has no vertices")]
    EmptyColour(usize),
    #[error("colouring: {0}")]
    Colouring(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("THEOREM_VIOLATION: {0}")]
    TheoremViolation(String),
}
