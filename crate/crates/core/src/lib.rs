//! Total colorings of circulant and Cayley graphs.
//!
//! The crate builds circulant, unitary Cayley and table-defined Cayley
//! graphs ([`graph`]), represents and strictly verifies total colorings
//! ([`coloring`]), produces explicit colorings for several arithmetic
//! families of circulants ([`constructions`]), and certifies total chromatic
//! numbers at small scale with exact searches ([`oracles`]).
//!
//! Every construction ends by running the verifier; nothing is returned that
//! has not passed it.

pub mod bitset;
pub mod coloring;
pub mod constructions;
pub mod exec;
pub mod graph;
pub mod oracles;
mod parse_error;

pub use coloring::{verify_total, Color, TotalColoring, VerificationReport};
pub use exec::Exec;
pub use graph::{CirculantSpec, Edge, Graph};
pub use parse_error::ParseError;
