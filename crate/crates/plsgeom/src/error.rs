use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("modulus is reducible")]
    ReducibleModulus,
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("GF({sub}) is not a subfield of GF({ambient})")]
    NotASubfield { sub: u32, ambient: u32 },
    #[error("semilinear generators are not supported here")]
    SemilinearNotSupported,
    #[error("domain of size {0} exceeds the cap")]
    DomainTooLarge(u64),
    #[error("group is not transitive on the domain")]
    NotTransitive,
    #[error("point {0} is not in the given set")]
    PointNotInSet(u32),
    #[error("suborbit of size {0} exceeds the search cap")]
    SuborbitTooLarge(u64),
    #[error("block lattice exploration exceeded the cap of {0} blocks")]
    BlockLatticeOverflow(usize),
    #[error("point index {0} out of range")]
    PointOutOfRange(u64),
    #[error("duplicate line in input")]
    DuplicateLine,
    #[error("group does not have exactly two line orbits (found {0})")]
    NotTwoOrbits(usize),
    #[error("linear space has a line of size two")]
    LineSizeTwo,
    #[error("generators do not preserve the line set")]
    NotInvariant,
    #[error("geometry has {0} points, beyond the isomorphism-search cap of 730")]
    TooLargeForSearch(usize),
    #[error("group does not have two orbits on the projective points")]
    NotTwoProjectiveOrbits,
    #[error("subfield must have more than two elements")]
    SubfieldTooSmall,
    #[error("grid requires more than two points per side")]
    GridTooSmall,
    #[error("group is not regular on the nonzero vectors")]
    NotRegular,
    #[error("triple fails Definition conditions: {0}")]
    NotSharplyGenerating(String),
    #[error("compatible triple is invalid")]
    TripleInvalid,
    #[error("alpha is not an admissible exceptional-plane parameter")]
    BadAlpha,
    #[error("seed set is not a block")]
    NotABlock,
    #[error("line stabilizer is not transitive on the line")]
    LineStabilizerNotTransitive,
    #[error("bad field parameters: {0}")]
    BadFieldParameters(String),
    #[error("no invariant partition found")]
    NoInvariantPartition,
    #[error("unknown catalog entry: {0}")]
    UnknownEntry(String),
    #[error("catalog validation failed for {name}: {detail}")]
    ValidationFailed { name: String, detail: String },
    #[error("field size must be an odd power of two, at least 8")]
    BadFieldSize,
    #[error("unknown regular-group row: p={0}, name={1}")]
    UnknownRow(u32, String),
    #[error("preset requires the extended tier: {0}")]
    ExtendedTierRequired(String),
    #[error("exhaustive census domain too large")]
    TooLargeForExhaustive,
    #[error("zero spinor has no annihilator")]
    ZeroSpinor,
    #[error("odd word applied where an even word is required")]
    OddWordToEvenSpace,
    #[error("spin element precondition violated")]
    PreconditionViolated,
    #[error("group is not of rank 3")]
    NotRankThree,
    #[error("intersection is empty")]
    EmptyIntersection,
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error: {0}")]
    Parse(String),
}
