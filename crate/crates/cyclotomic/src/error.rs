use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{unit} is not a unit modulo {modulus}")]
    NotAUnit { unit: i64, modulus: u64 },
    #[error("modulus {modulus} is not a multiple of the conductor {conductor}")]
    ModulusMismatch { modulus: u64, conductor: u64 },
    #[error("quantum integer [{n}]_{m} is outside 0 < n < m")]
    OutOfRange { n: i64, m: u64 },
    #[error("invalid input: {0}")]
    Invalid(String),
}
