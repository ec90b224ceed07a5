//! Enumerative machinery for permutation patterns.
//!
//! * [`perm`]: permutations, containment, structure and large-pattern statistics.
//! * [`bijection`]: Dyck paths and the maps from 132- and 123-avoiders.
//! * [`series`]: exact truncated power series and a catalog of generating functions.
//! * [`peg`]: peg permutations, vector downsets and polynomial class enumeration.
//! * [`genome`]: block moves acting on peg sets and their distance balls.
//! * [`oracle`]: brute-force enumeration used as ground truth.
//! * [`verify`]: table checks shared by the command line and the test suite.

pub mod bijection;
pub mod error;
pub mod genome;
pub mod oracle;
pub mod peg;
pub mod perm;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use perm::Permutation;
