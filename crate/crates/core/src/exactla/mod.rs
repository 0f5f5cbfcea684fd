//! Exact linear algebra over the rationals and prime fields.

pub mod dump;
pub mod field;
pub mod matrix;
pub mod reducer;

pub use dump::{read_dump, write_dump};
pub use field::{parse_rational, Field, FieldSpec, PrimeField, Rationals, DEFAULT_PRIME};
pub use matrix::{row_space_contains, ExactMatrix};
pub use reducer::IncrementalReducer;
