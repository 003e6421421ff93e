//! Combinatorial neural codes: codes and their maps, neural ideals and
//! canonical forms, code graphs, exact convex realizations, and sweeps that
//! check the structural results on every small code.

pub mod code;
pub mod error;
pub mod graph;
pub mod ideal;
pub mod realize;
pub mod sweep;

pub use code::{Code, Codeword};
pub use error::{Error, Result};
pub use ideal::{canonical_form, CanonicalForm, PseudoMonomial};
