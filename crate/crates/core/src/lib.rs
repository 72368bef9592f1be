//! Exact computational algebra for bivariate total-degree interpolation:
//! poised node sets built line by line, H-bases of their vanishing ideals,
//! the matrix of linear syzygies of such a basis, and detection of maximal
//! lines from the structure of that matrix. All arithmetic is over the
//! rationals and exact; every advertised identity is checked with zero
//! tolerance.

pub mod error;
pub mod scalar;
pub mod poly;
pub mod matrix;
pub mod factor;
pub mod nodes;

pub use error::{Error, Result};
pub use poly::{LinearForm, Monomial, Point, Poly};
pub use scalar::Scalar;
