//! IO formats, the family-spec grammar, the verification suite and the
//! command-line front end for [`pdrecon_core`].

pub mod cli;
pub mod family;
pub mod io;
pub mod verify;

pub use pdrecon_core as core;
