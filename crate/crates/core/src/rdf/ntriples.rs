//! N-Triples reader.

use crate::error::SyntaxError;
use crate::rdf::lex::Cursor;
use crate::rdf::{Graph, GraphBuilder, Iri, Literal, Term, Triple};

/// Parses an N-Triples document. The returned graph has an empty prefix map.
pub fn parse_ntriples(text: &str) -> Result<Graph, SyntaxError> {
    let mut cur = Cursor::new(text);
    let mut out = GraphBuilder::new();
    loop {
        cur.skip_ws();
        if cur.at_end() {
            break;
        }
        let subject = match cur.peek() {
            Some('<') => Term::Iri(iri(&mut cur)?),
            Some('_') => Term::Blank(cur.blank_label()?),
            _ => return Err(cur.unexpected("subject")),
        };
        cur.skip_inline_ws();
        let predicate = iri(&mut cur)?;
        cur.skip_inline_ws();
        let object = match cur.peek() {
            Some('<') => Term::Iri(iri(&mut cur)?),
            Some('_') => Term::Blank(cur.blank_label()?),
            Some('"') => literal(&mut cur)?,
            _ => return Err(cur.unexpected("object")),
        };
        cur.skip_inline_ws();
        cur.expect('.')?;
        cur.skip_inline_ws();
        match cur.peek() {
            None | Some('\n') | Some('\r') => {}
            _ => return Err(cur.unexpected("end of line")),
        }
        let triple =
            Triple::new(subject, predicate, object).map_err(|e| cur.error(e.to_string()))?;
        out.insert(triple);
    }
    Ok(out.build())
}

fn iri(cur: &mut Cursor<'_>) -> Result<Iri, SyntaxError> {
    let at = cur.error("");
    let raw = cur.iriref()?;
    Iri::new(raw).map_err(|e| SyntaxError {
        message: e.to_string(),
        ..at
    })
}

fn literal(cur: &mut Cursor<'_>) -> Result<Term, SyntaxError> {
    let lexical = cur.string(false)?;
    if cur.peek() == Some('@') {
        let lang = cur.langtag()?;
        return Ok(Term::Literal(Literal::lang_tagged(lexical, lang)));
    }
    if cur.eat("^^") {
        let datatype = iri(cur)?;
        return Literal::typed(lexical, datatype)
            .map(Term::Literal)
            .map_err(|e| cur.error(e.to_string()));
    }
    Ok(Term::Literal(Literal::simple(lexical)))
}
