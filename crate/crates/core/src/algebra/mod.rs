//! Exact arithmetic over F_q and its polynomial rings.

pub mod bivar;
pub mod field;
pub mod poly;

pub use bivar::{discriminant_y, resultant_y, BivarPoly};
pub use field::{least_primitive_root, FieldSpec, Fq};
pub use poly::Poly;
