use std::fmt;

use thiserror::Error;

/// Location-bearing syntax error from the Turtle and N-Triples readers.
/// Lines and columns are 1-based; columns count characters.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct SyntaxError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RdfError {
    #[error("invalid IRI `{iri}`: {reason}")]
    InvalidIri { iri: String, reason: &'static str },
    #[error("rdf:langString literal without a language tag")]
    LangStringWithoutTag,
    #[error("a literal cannot be the subject of a triple")]
    LiteralSubject,
    #[error("IRI `{0}` contains neither '#' nor '/'")]
    NoNamespaceSeparator(String),
    #[error("syntax error at {0}")]
    Syntax(#[from] SyntaxError),
}
