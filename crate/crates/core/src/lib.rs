//! Exact computations around the Jantzen sum formula for simple algebraic
//! groups: root data, alcove depths, the sum formula itself, recursive and
//! closed-form bounds on Weyl module lengths, and the resulting explicit
//! bounds on `dim H^1(G, V)` for finite groups of Lie type in defining
//! characteristic.
//!
//! All arithmetic is integer-exact. Weights are stored in fundamental-weight
//! coordinates, so every pairing is an integer dot product.

pub mod arith;
pub mod bounds;
pub mod charnorm;
pub mod cli;
pub mod error;
pub mod jantzen;
pub mod rootsys;
pub mod sl2oracle;
pub mod weights;

pub use error::{Error, Result};
pub use rootsys::{Family, RootSystem, RootSystemSpec, Weight};
pub use weights::PrimeContext;
