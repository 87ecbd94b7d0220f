use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycError {
    #[error("galois index {0} is not a unit mod 7")]
    InvalidGaloisIndex(i64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("division is not exact in the ring")]
    InexactDivision,
    #[error("{0} ramifies in the quadratic order")]
    Ramified(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TorusError {
    #[error("matrix does not preserve the lattice")]
    NonIntegral,
    #[error("unknown automorphism `{0}` for this model")]
    UnknownAutomorphism(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("gradient vanishes at the point")]
    Singular,
    #[error("pullback of a differential is not a combination of the basis")]
    NonReducible,
    #[error("point is not one of the coordinate points on the curve")]
    NotCoordinatePoint,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("action does not preserve the integral lattice")]
    NonIntegral,
    #[error("form is not invariant under the group action")]
    NotInLattice,
    #[error("lattice generators are linearly dependent over R")]
    Degenerate,
    #[error(transparent)]
    Torus(#[from] TorusError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModularityError {
    #[error("bad reduction at {0}")]
    BadReduction(u64),
    #[error("no single congruence rule selects the associates; {0}")]
    NoConsistentRule(String),
    #[error("missing Euler factor at {0}")]
    MissingPrime(u64),
    #[error("q-expansion input: {0}")]
    QExpansion(String),
    #[error(transparent)]
    Cyc(#[from] CycError),
}

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("format `{0}` is not supported for suite `{1}`")]
    UnsupportedFormat(String, String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
