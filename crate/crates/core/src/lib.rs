//! Exact computations for q-rook monoid algebras, cyclotomic Hecke algebras,
//! their seminormal representations and the associated Schur-Weyl actions.
//!
//! Everything is computed over `Q(q)` (or over `Q` after specializing `q`),
//! so every identity is checked to literal zero.

pub mod error;
pub mod linalg;
pub mod matrix;
pub mod presentations;
pub mod qfield;
pub mod rook;
pub mod seminormal;
pub mod shapes;
pub mod tensor;

pub use error::{Error, Result};
