//! Finite models of cyclic star-autonomous categories and exact checkers for
//! their coherence axioms.

pub mod braided;
pub mod cyclicity;
pub mod error;
pub mod linear;
pub mod matrix;
pub mod obj;
pub mod profunctors;
pub mod quantale;
pub mod report;
pub mod staut;
pub mod strictify;
pub mod suites;
pub mod thin;

pub use error::{Result, StautError};
pub use matrix::{QMat, Q};
pub use obj::ObjRef;
pub use staut::{Mor, Payload, Probe, StautModel};
