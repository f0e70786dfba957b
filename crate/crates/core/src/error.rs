use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported family/rank combination: {family} rank {rank}")]
    UnsupportedRank { family: String, rank: usize },

    #[error("ambient dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("Weyl group of order {order} exceeds cap {cap} (pass --force-large to override)")]
    WeylCapExceeded { order: u64, cap: u64 },

    #[error("label count {count} exceeds cap {cap}")]
    LabelCapExceeded { count: usize, cap: usize },

    #[error("S-matrix denominator sum vanished (invalid q for this level)")]
    ZeroDenominator,

    #[error("fusion residual {residual:e} exceeds tolerance {tol:e} at highest precision")]
    PrecisionFailure { residual: f64, tol: f64 },

    #[error("negative fusion coefficient at ({i},{j};{k})")]
    NegativeFusion { i: usize, j: usize, k: usize },

    #[error("no unique dual for label {label}")]
    NoDual { label: usize },

    #[error("fusion among dimension-one labels is not closed")]
    InvertiblesNotClosed,

    #[error("degree maps disagree at label {label}: table {table:?} vs character {character:?}")]
    DegreeMismatch {
        label: usize,
        table: Vec<u32>,
        character: Vec<u32>,
    },

    #[error("degeneracy verdicts disagree: computed {computed}, table condition {table}")]
    DegeneracyMismatch { computed: bool, table: bool },

    #[error("invertible group is not cyclic")]
    NotCyclic,

    #[error("invertible group is not a Klein four-group")]
    NotKlein,

    #[error("instance is not degenerate; zesting data reduce to abelian 3-cocycles")]
    NotDegenerate,

    #[error("zesting datum is not braided-valid")]
    NotBraided,

    #[error("zested fusion cross-check failed: structural and Verlinde routes disagree")]
    ZestedFusionMismatch,

    #[error("linear system over Z/{modulus} is infeasible")]
    Infeasible { modulus: u64 },

    #[error("cochain degree {degree} exceeds supported maximum {max}")]
    DegreeOverflow { degree: usize, max: usize },

    #[error("coefficient conductor {m} cannot represent exponent {num}/{den} of pi·i")]
    ConductorTooSmall { m: u64, num: i64, den: i64 },

    #[error("O2 value table is not a character column")]
    NotACharacter,

    #[error("{0}")]
    Invalid(String),
}
