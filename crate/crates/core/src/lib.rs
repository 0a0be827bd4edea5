//! Gauss-Epple homomorphisms of braid groups and their generalizations to
//! Artin groups of crystallographic type.
//!
//! All group-valued computations are exact and generic over a signed integer
//! [`Scalar`]; the aliases below fix the scalar to `i64`, which is what the
//! command-line tool and most callers use.

pub mod analogue;
pub mod artin;
pub mod braid;
pub mod error;
pub mod ge;
pub mod lattice;
pub mod montecarlo;
pub mod perm;
pub mod scalar;
pub mod sge;

pub use braid::BraidWord;
pub use error::{Error, Result};
pub use perm::Permutation;
pub use scalar::Scalar;

/// Default exact integer type.
pub type Int = i64;

pub type GePoint = ge::GePoint<Int>;
pub type GeElement = ge::GeElement<Int>;
pub type SgeMatrix = sge::SquareMatrix<Int>;
pub type SgeElement = sge::SgeElement<Int>;
pub type AntisymMatrix = sge::AntisymMatrix<Int>;
pub type ArtinElement = artin::ArtinElement<Int>;
pub type RootVector = artin::RootVector<Int>;
