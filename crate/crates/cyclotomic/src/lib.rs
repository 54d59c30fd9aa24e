//! Exact arithmetic in cyclotomic fields Q(zeta_N).
//!
//! Elements live on the power basis of zeta_N with the conductor always
//! minimized, so equality is structural. Subfields are Galois stabilizers.

pub mod cpoly;
pub mod elem;
pub mod error;
pub mod float;
pub mod galois;
mod kernel;
pub mod ntheory;
pub mod serial;
pub mod special;
pub mod subfield;

pub use elem::CycElem;
pub use error::CycError;
pub use float::{approx_f64, real_sign, to_float, ComplexApprox};
pub use galois::{galois_apply, stabilizer_of, GaloisElement};
pub use special::{
    cos_pi_frac, cos_two_pi_frac, gauss_sum_prime, quantum_integer, quantum_integer_field,
    root_of_unity, sqrt_integer,
};
pub use subfield::{
    field_generated_by, field_join, field_meet, quadratic_field, real_cyclotomic, subfield_leq,
    SubfieldHandle,
};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
