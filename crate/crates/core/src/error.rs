use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cover relations create a cycle: `{0}` and `{1}` end up mutually comparable")]
    Cycle(String, String),
    #[error("poset is not bounded: {0}")]
    NotBounded(String),
    #[error("a poset needs at least two elements")]
    TooSmall,
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("cover relation references element id {found}, but the poset has {count} elements")]
    BadCover { found: usize, count: usize },
    #[error("outside the supported envelope: {0}")]
    OutOfEnvelope(String),
    #[error("both factors of a reduced bounded product need more than two elements")]
    FactorTooSmall,
    #[error("poset was not built by a product constructor")]
    NotAProduct,
    #[error("bad subset: {0}")]
    BadSubset(String),
    #[error("operation requires a nonempty subset that avoids the least element")]
    HypothesisViolated,
    #[error("`{0}` and `{1}` are comparable, so the set is not an antichain")]
    NotAnAntichain(String, String),
    #[error("not a Sperner family: {0} contains {1}")]
    NotSperner(String, String),
    #[error("malformed order map: {0}")]
    MalformedMap(String),
    #[error("order map fails its certificate: {0}")]
    UnsafeMap(String),
    #[error("antichain `{0}` is not a member of the blocker image")]
    NotABlocker(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
