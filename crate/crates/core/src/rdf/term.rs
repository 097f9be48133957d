use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::RdfError;
use crate::vocab::{rdf, xsd};

/// An absolute IRI. Equality is exact codepoint equality; no normalization
/// is ever applied.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Iri(String);

impl Iri {
    pub fn new(value: impl Into<String>) -> Result<Self, RdfError> {
        let value = value.into();
        if !has_scheme(&value) {
            return Err(RdfError::InvalidIri {
                iri: value,
                reason: "missing scheme",
            });
        }
        if value.chars().any(is_forbidden_iri_char) {
            return Err(RdfError::InvalidIri {
                iri: value,
                reason: "forbidden character",
            });
        }
        Ok(Iri(value))
    }

    /// Builds an IRI from a value known to be valid (vocabulary constants).
    pub(crate) fn from_static(value: &str) -> Self {
        debug_assert!(has_scheme(value), "{value}");
        Iri(value.to_owned())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// The part after the last `#` or, failing that, the last `/`.
    pub fn local_name(&self) -> &str {
        let s = self.0.as_str();
        match s.rfind('#') {
            Some(i) => &s[i + 1..],
            None => match s.rfind('/') {
                Some(i) => &s[i + 1..],
                None => s.split_once(':').map(|(_, rest)| rest).unwrap_or(s),
            },
        }
    }
}

fn has_scheme(value: &str) -> bool {
    let Some((scheme, _)) = value.split_once(':') else {
        return false;
    };
    let mut chars = scheme.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '+' | '-' | '.'))
}

pub(crate) fn is_forbidden_iri_char(c: char) -> bool {
    matches!(c, '<' | '>' | '"' | '{' | '}' | '|' | '^' | '`' | '\\') || c <= ' '
}

impl fmt::Display for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.0)
    }
}

impl fmt::Debug for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.0)
    }
}

impl TryFrom<String> for Iri {
    type Error = RdfError;
    fn try_from(value: String) -> Result<Self, Self::Error> {
        Iri::new(value)
    }
}

impl From<Iri> for String {
    fn from(iri: Iri) -> Self {
        iri.0
    }
}

impl AsRef<str> for Iri {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Literal {
    lexical: String,
    lang: Option<String>,
    datatype: Option<Iri>,
}

impl Literal {
    /// A plain string literal (`xsd:string`).
    pub fn simple(lexical: impl Into<String>) -> Self {
        Literal {
            lexical: lexical.into(),
            lang: None,
            datatype: None,
        }
    }

    pub fn lang_tagged(lexical: impl Into<String>, lang: impl Into<String>) -> Self {
        Literal {
            lexical: lexical.into(),
            lang: Some(lang.into()),
            datatype: None,
        }
    }

    /// `xsd:string` collapses to the simple form and `rdf:langString`
    /// without a tag is rejected, so that equal RDF literals compare equal.
    pub fn typed(lexical: impl Into<String>, datatype: Iri) -> Result<Self, RdfError> {
        if datatype.as_str() == rdf::LANG_STRING {
            return Err(RdfError::LangStringWithoutTag);
        }
        let datatype = (datatype.as_str() != xsd::STRING).then_some(datatype);
        Ok(Literal {
            lexical: lexical.into(),
            lang: None,
            datatype,
        })
    }

    pub fn lexical(&self) -> &str {
        &self.lexical
    }

    pub fn lang(&self) -> Option<&str> {
        self.lang.as_deref()
    }

    /// The explicit datatype; `None` for simple and language-tagged literals.
    pub fn datatype(&self) -> Option<&Iri> {
        self.datatype.as_ref()
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Term {
    Iri(Iri),
    Blank(String),
    Literal(Literal),
}

impl Term {
    pub fn as_iri(&self) -> Option<&Iri> {
        match self {
            Term::Iri(iri) => Some(iri),
            _ => None,
        }
    }

    pub fn is_literal(&self) -> bool {
        matches!(self, Term::Literal(_))
    }

    pub fn is_blank(&self) -> bool {
        matches!(self, Term::Blank(_))
    }
}

impl From<Iri> for Term {
    fn from(iri: Iri) -> Self {
        Term::Iri(iri)
    }
}

impl From<Literal> for Term {
    fn from(lit: Literal) -> Self {
        Term::Literal(lit)
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Triple {
    subject: Term,
    predicate: Iri,
    object: Term,
}

impl Triple {
    pub fn new(subject: Term, predicate: Iri, object: Term) -> Result<Self, RdfError> {
        if subject.is_literal() {
            return Err(RdfError::LiteralSubject);
        }
        Ok(Triple {
            subject,
            predicate,
            object,
        })
    }

    pub fn subject(&self) -> &Term {
        &self.subject
    }

    pub fn predicate(&self) -> &Iri {
        &self.predicate
    }

    pub fn object(&self) -> &Term {
        &self.object
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::writer::nt_term(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iri_requires_scheme() {
        assert!(Iri::new("http://e/a").is_ok());
        assert!(Iri::new("urn:x").is_ok());
        assert!(Iri::new("no-scheme").is_err());
        assert!(Iri::new("1http://e").is_err());
        assert!(Iri::new("http://e/a b").is_err());
    }

    #[test]
    fn iri_equality_is_exact() {
        assert_ne!(
            Iri::new("http://e/A").unwrap(),
            Iri::new("http://e/a").unwrap()
        );
        assert_ne!(
            Iri::new("http://e/%41").unwrap(),
            Iri::new("http://e/A").unwrap()
        );
    }

    #[test]
    fn local_names() {
        let iri = Iri::new("http://www.ontologydesignpatterns.org/ont/fred/domain.owl#componentOf")
            .unwrap();
        assert_eq!(iri.local_name(), "componentOf");
        assert_eq!(Iri::new("http://e/a/b").unwrap().local_name(), "b");
        assert_eq!(Iri::new("urn:x").unwrap().local_name(), "x");
    }

    #[test]
    fn xsd_string_collapses() {
        let typed = Literal::typed("a", Iri::from_static(xsd::STRING)).unwrap();
        assert_eq!(typed, Literal::simple("a"));
        assert!(Literal::typed("a", Iri::from_static(rdf::LANG_STRING)).is_err());
    }

    #[test]
    fn literal_subject_rejected() {
        let p = Iri::new("http://e/p").unwrap();
        let err = Triple::new(
            Literal::simple("x").into(),
            p.clone(),
            Literal::simple("y").into(),
        );
        assert!(err.is_err());
    }
}
