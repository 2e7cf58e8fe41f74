//! Generalized Satake diagrams, the automorphism `theta` and the subalgebra
//! `k_gamma` of a complex semisimple Lie algebra, in exact rational arithmetic.

pub mod cartan;
pub mod chevalley;
pub mod decorations;
pub mod error;
pub mod ksub;
pub mod linalg;
mod one_based;
pub mod roots;
pub mod verify;

pub use chevalley::{LieAlgebra, LinearMap};
pub use cartan::{CartanMatrix, DiagramAutomorphism, SimpleType};
pub use error::{Error, Result};
pub use roots::{IntMap, RootSystem, RootVector, WeylElement};
