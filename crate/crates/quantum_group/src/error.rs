use thiserror::Error;

#[derive(Debug, Error)]
pub enum QgError {
    #[error("invalid type: {0}")]
    InvalidType(String),
    #[error("level must be at least 1")]
    BadLevel,
    #[error("weight {0:?} is not in the alcove")]
    OutsideAlcove(Vec<i64>),
    #[error("Weyl group of rank {rank} exceeds the cap {cap}; raise the cap to proceed")]
    RankCap { rank: usize, cap: usize },
    #[error("exceptional level: {0}")]
    Exceptional(String),
    #[error("fusion coefficient not integral: {0}")]
    NonIntegral(String),
    #[error(transparent)]
    Ring(#[from] fusion_ring::RingError),
    #[error(transparent)]
    Cyc(#[from] cyclotomic::CycError),
}
