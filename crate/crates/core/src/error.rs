use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("matrix mixes scalars from different fields")]
    FieldMismatch,
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("prime {0} is too large (must be below 2^31)")]
    PrimeTooLarge(u64),
    #[error("ragged matrix: row {row} has {len} entries, expected {expected}")]
    RaggedMatrix { row: usize, len: usize, expected: usize },
    #[error("generator {0} is not homogeneous")]
    NonHomogeneous(usize),
    #[error("symplectic group needs even n, got {0}")]
    OddSymplectic(usize),
    #[error("matrix size n must be at least 2, got {0}")]
    SmallRank(usize),
    #[error(
        "the field {field} has no square root of -1; the orthogonal torus cannot be diagonalized (use an F_p2 field)"
    )]
    NoSqrtMinusOne { field: String },
    #[error("characteristic {p} must exceed n = {n} for root-subgroup invariants")]
    CharacteristicTooSmall { p: u64, n: usize },
    #[error("missing graded slice in degree {0}")]
    MissingSlice(i64),
    #[error("wrong arity: expected {expected} coordinates, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("point is not in the admissible lattice region: {0}")]
    OutOfDomain(String),
    #[error("isomorphism bound undefined: d*dim(g) = {0} < 4")]
    BoundUndefined(usize),
    #[error("exact value too large to materialize: exponent 2^{0}")]
    TooLarge(u64),
    #[error("map is not an involution on the given space")]
    NotInvolution,
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("character is not Weyl-invariant")]
    NotWeylInvariant,
    #[error("unsupported request: {0}")]
    Unsupported(String),
    #[error("characteristic 2 is not supported")]
    CharacteristicTwo,
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}
