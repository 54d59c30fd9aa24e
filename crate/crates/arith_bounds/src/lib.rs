//! Totients, the Carmichael function, the largest modulus with a given unit
//! group exponent, and the central-charge order bounds built on it.

pub mod bound;
pub mod degrees;
pub mod factored;
pub mod totient;

pub use bound::{
    charge_order_bound, charge_verdict, exponent_is_attained, f_bound, f_bound_oracle, fig_k_values, twist_order_bound, BoundError, ChargeVerdict,
    DEFAULT_ORACLE_MULTIPLIER,
};
pub use degrees::{eight_root_levels, phi_image, prime_power_sixteen_check, unrealized_degrees};
pub use factored::FactoredInteger;
pub use totient::{carmichael_lambda, euler_phi, unit_group_exponent};
