//! Exact computations around the 27 lines on a smooth cubic surface.
//!
//! The crate is organised bottom-up:
//!
//! - [`linalg`]: exact rational vectors, matrices and canonical subspaces.
//! - [`picard`]: the lattice `Z^{1,6}`, its 27 lines, 72 roots and 45 triangles.
//! - [`weyl_perm`]: permutation groups on 27 points, Schreier-Sims, classes, orbitals.
//! - [`rep`]: the permutation representation of W(E6) and its isotypic pieces.
//! - [`equivalence`]: the linear model of relations among the 27 curve classes.
//! - [`verify`]: every check above bundled into named certificates.
//!
//! [`Model`] computes everything once and keeps the results together.

pub mod equivalence;
pub mod error;
pub mod linalg;
pub mod model;
pub mod picard;
pub mod rep;
pub mod verify;
pub mod weyl_perm;

pub use error::{Error, Result};
pub use linalg::{QMatrix, QVector, Rational, Subspace};
pub use model::Model;
pub use picard::{Line, LineLabel, PicVector, Root, Triangle};
pub use weyl_perm::{ConjugacyClass, PermGroup, Permutation};

/// Number of lines on a smooth cubic surface, and the degree of every permutation here.
pub const N_LINES: usize = 27;
