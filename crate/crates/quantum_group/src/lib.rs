//! Quantum-group categories C(g, k): root data, Weyl alcoves, exact
//! quantum dimensions, dimension fields and small-rank modular data.

pub mod category;
pub mod error;
pub mod fields;
pub mod figa;
pub mod lie;
pub mod modular;
pub mod sweep;
pub mod unity;
pub mod weyl;

pub use category::{alcove_size, CategoryHandle};
pub use error::QgError;
pub use fields::{dimensional_component, expected_fields, figure_b_prediction, test_weights, Expected};
pub use figa::{figure_a_enumeration, FieldBlock};
pub use lie::{build_algebra, AlgebraData, LieType, Weight};
pub use modular::{central_charge_formula, gauss_sum, grothendieck_ring, t_matrix, twist, verlinde_field_prediction, ModularData};
pub use unity::RootOfUnity;
pub use weyl::{weyl_group, WeylElement, DEFAULT_WEYL_CAP};
