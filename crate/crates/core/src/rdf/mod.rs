//! Minimal RDF model: terms, an immutable triple set, and readers and
//! writers for Turtle and N-Triples.

mod graph;
mod lex;
mod ntriples;
mod term;
mod turtle;
mod writer;

pub use graph::{namespace_of, Graph, GraphBuilder};
pub use ntriples::parse_ntriples;
pub use term::{Iri, Literal, Term, Triple};
pub use turtle::{parse_turtle, parse_turtle_with_base, resolve_iri};
pub use writer::{nt_term, quoted, write_ntriples, write_turtle, TermWriter};
