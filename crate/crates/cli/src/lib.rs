//! Library side of the command-line front end: the JSON wire format for
//! polynomials and the tableau-versus-nilCoxeter verification harness.

pub mod format;
pub mod verify;
