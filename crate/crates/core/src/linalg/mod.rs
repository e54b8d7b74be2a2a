//! Exact field arithmetic and dense linear algebra over ℚ and GF(p).

mod charpoly;
pub(crate) mod echelon;
mod field;
mod matrix;
mod poly;
mod roots;
mod subspace;
mod vector;

pub use charpoly::{berkowitz, char_poly, faddeev_leverrier};
pub use field::{Field, FieldElement};
pub use matrix::SquareMatrix;
pub use poly::Polynomial;
pub use roots::{roots_in_field, roots_in_field_with, RootSearch};
pub use subspace::Subspace;
pub use vector::{rank_of, Vector};
