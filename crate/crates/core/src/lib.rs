//! Kashiwara crystals on irreducible components of representation varieties
//! of commutative grid quivers.
//!
//! The closed-form crystals live in [`an`] (the equioriented chain) and
//! [`g22`] (the commutative square). [`oracle`] samples genuine points of the
//! varieties over a prime field and recomputes the same statistics with
//! exact linear algebra, [`modules`] holds the interval modules of the square
//! with their Hom and Ext data, and [`binfty`] is a truncated polyhedral model
//! of `B(infinity)` used to separate operator words.

pub mod an;
pub mod binfty;
pub mod crystal;
pub mod error;
pub mod field;
pub mod g22;
pub mod graph;
pub mod linalg;
pub mod modules;
pub mod oracle;
pub mod quiver;
pub mod rep;

pub use error::{Error, Result};
