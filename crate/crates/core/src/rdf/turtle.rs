//! Turtle 1.1 reader.

use std::collections::{HashMap, HashSet};

use crate::error::SyntaxError;
use crate::rdf::lex::{is_local_escapable, is_pn_chars, is_pn_chars_base, is_pn_chars_u, Cursor};
use crate::rdf::{Graph, GraphBuilder, Iri, Literal, Term, Triple};
use crate::vocab::{rdf, xsd};

/// Parses a Turtle document. Relative IRIs are resolved against `@base`
/// directives; a relative IRI with no base in scope is a syntax error.
pub fn parse_turtle(text: &str) -> Result<Graph, SyntaxError> {
    parse_turtle_with_base(text, None)
}

pub fn parse_turtle_with_base(text: &str, base: Option<&str>) -> Result<Graph, SyntaxError> {
    let mut parser = Parser {
        cur: Cursor::new(text),
        base: base.map(str::to_owned),
        prefixes: HashMap::new(),
        out: GraphBuilder::new(),
        blanks: BlankLabels::default(),
    };
    parser.document()?;
    Ok(parser.out.build())
}

/// Keeps document blank-node labels verbatim and mints `genid<n>` labels
/// for anonymous nodes, renaming a document label only if it collides
/// with a label already minted.
#[derive(Default)]
struct BlankLabels {
    doc: HashMap<String, String>,
    used: HashSet<String>,
    next: usize,
}

impl BlankLabels {
    fn named(&mut self, label: String) -> Term {
        if let Some(mapped) = self.doc.get(&label) {
            return Term::Blank(mapped.clone());
        }
        let mapped = if self.used.contains(&label) {
            self.mint()
        } else {
            label.clone()
        };
        self.used.insert(mapped.clone());
        self.doc.insert(label, mapped.clone());
        Term::Blank(mapped)
    }

    fn fresh(&mut self) -> Term {
        let label = self.mint();
        self.used.insert(label.clone());
        Term::Blank(label)
    }

    fn mint(&mut self) -> String {
        loop {
            let label = format!("genid{}", self.next);
            self.next += 1;
            if !self.used.contains(&label) && !self.doc.contains_key(&label) {
                return label;
            }
        }
    }
}

struct Parser<'a> {
    cur: Cursor<'a>,
    base: Option<String>,
    prefixes: HashMap<String, String>,
    out: GraphBuilder,
    blanks: BlankLabels,
}

impl Parser<'_> {
    fn document(&mut self) -> Result<(), SyntaxError> {
        loop {
            self.cur.skip_ws();
            if self.cur.at_end() {
                return Ok(());
            }
            self.statement()?;
        }
    }

    fn statement(&mut self) -> Result<(), SyntaxError> {
        if self.cur.starts_with("@prefix") {
            self.cur.eat("@prefix");
            self.prefix_decl()?;
            self.cur.skip_ws();
            return self.cur.expect('.');
        }
        if self.cur.starts_with("@base") {
            self.cur.eat("@base");
            self.base_decl()?;
            self.cur.skip_ws();
            return self.cur.expect('.');
        }
        if self.keyword_ahead("PREFIX") {
            self.prefix_decl()?;
            return Ok(());
        }
        if self.keyword_ahead("BASE") {
            self.base_decl()?;
            return Ok(());
        }
        self.triples()?;
        self.cur.skip_ws();
        self.cur.expect('.')
    }

    /// Case-insensitive SPARQL-style keyword followed by whitespace; consumes it on match.
    fn keyword_ahead(&mut self, kw: &str) -> bool {
        let rest = self.cur.rest();
        let matches = rest.len() > kw.len()
            && rest.is_char_boundary(kw.len())
            && rest[..kw.len()].eq_ignore_ascii_case(kw)
            && rest[kw.len()..].starts_with(|c: char| c.is_whitespace() || c == '<');
        if matches {
            for _ in 0..kw.len() {
                self.cur.bump();
            }
        }
        matches
    }

    fn prefix_decl(&mut self) -> Result<(), SyntaxError> {
        self.cur.skip_ws();
        let prefix = self.pn_prefix()?;
        self.cur.expect(':')?;
        self.cur.skip_ws();
        let iri = self.iri_ref()?;
        self.prefixes
            .insert(prefix.clone(), iri.as_str().to_owned());
        self.out.prefix(prefix, iri);
        Ok(())
    }

    fn base_decl(&mut self) -> Result<(), SyntaxError> {
        self.cur.skip_ws();
        let iri = self.iri_ref()?;
        self.base = Some(iri.as_str().to_owned());
        Ok(())
    }

    fn pn_prefix(&mut self) -> Result<String, SyntaxError> {
        let mut out = String::new();
        match self.cur.peek() {
            Some(c) if is_pn_chars_base(c) => {
                self.cur.bump();
                out.push(c);
            }
            _ => return Ok(out),
        }
        loop {
            match self.cur.peek() {
                Some('.')
                    if self
                        .cur
                        .peek_nth(1)
                        .is_some_and(|c| is_pn_chars(c) || c == '.') =>
                {
                    self.cur.bump();
                    out.push('.');
                }
                Some(c) if is_pn_chars(c) => {
                    self.cur.bump();
                    out.push(c);
                }
                _ => break,
            }
        }
        if out.ends_with('.') {
            return Err(self.cur.error("prefix name cannot end with '.'"));
        }
        Ok(out)
    }

    fn triples(&mut self) -> Result<(), SyntaxError> {
        if self.cur.peek() == Some('[') {
            let subject = self.blank_property_list()?;
            self.cur.skip_ws();
            if self.cur.peek() != Some('.') {
                self.predicate_object_list(&subject)?;
            }
            return Ok(());
        }
        let subject = self.subject()?;
        self.cur.skip_ws();
        self.predicate_object_list(&subject)
    }

    fn subject(&mut self) -> Result<Term, SyntaxError> {
        match self.cur.peek() {
            Some('<') => Ok(Term::Iri(self.iri_ref()?)),
            Some('_') if self.cur.peek_nth(1) == Some(':') => {
                let label = self.cur.blank_label()?;
                Ok(self.blanks.named(label))
            }
            Some('(') => self.collection(),
            Some(_) => Ok(Term::Iri(self.prefixed_name()?)),
            None => Err(self.cur.unexpected("subject")),
        }
    }

    fn predicate_object_list(&mut self, subject: &Term) -> Result<(), SyntaxError> {
        loop {
            self.cur.skip_ws();
            let predicate = self.verb()?;
            self.object_list(subject, &predicate)?;
            self.cur.skip_ws();
            if !self.cur.eat_char(';') {
                return Ok(());
            }
            loop {
                self.cur.skip_ws();
                if !self.cur.eat_char(';') {
                    break;
                }
            }
            self.cur.skip_ws();
            if matches!(self.cur.peek(), Some('.') | Some(']') | None) {
                return Ok(());
            }
        }
    }

    fn verb(&mut self) -> Result<Iri, SyntaxError> {
        if self.cur.peek() == Some('a')
            && !self
                .cur
                .peek_nth(1)
                .is_some_and(|c| is_pn_chars(c) || c == ':' || c == '.')
        {
            self.cur.bump();
            return Ok(Iri::from_static(rdf::TYPE));
        }
        match self.cur.peek() {
            Some('<') => self.iri_ref(),
            Some(_) => self.prefixed_name(),
            None => Err(self.cur.unexpected("predicate")),
        }
    }

    fn object_list(&mut self, subject: &Term, predicate: &Iri) -> Result<(), SyntaxError> {
        loop {
            self.cur.skip_ws();
            let object = self.object()?;
            self.emit(subject.clone(), predicate.clone(), object)?;
            self.cur.skip_ws();
            if !self.cur.eat_char(',') {
                return Ok(());
            }
        }
    }

    fn emit(&mut self, s: Term, p: Iri, o: Term) -> Result<(), SyntaxError> {
        let t = Triple::new(s, p, o).map_err(|e| self.cur.error(e.to_string()))?;
        self.out.insert(t);
        Ok(())
    }

    fn object(&mut self) -> Result<Term, SyntaxError> {
        match self.cur.peek() {
            Some('<') => Ok(Term::Iri(self.iri_ref()?)),
            Some('_') if self.cur.peek_nth(1) == Some(':') => {
                let label = self.cur.blank_label()?;
                Ok(self.blanks.named(label))
            }
            Some('[') => self.blank_property_list(),
            Some('(') => self.collection(),
            Some('"' | '\'') => self.rdf_literal(),
            Some(c) if c.is_ascii_digit() || matches!(c, '+' | '-' | '.') => self.numeric(),
            Some(_) => {
                if let Some(b) = self.boolean() {
                    return Ok(b);
                }
                Ok(Term::Iri(self.prefixed_name()?))
            }
            None => Err(self.cur.unexpected("object")),
        }
    }

    fn boolean(&mut self) -> Option<Term> {
        for word in ["true", "false"] {
            if self.cur.starts_with(word)
                && !self
                    .cur
                    .peek_nth(word.len())
                    .is_some_and(|c| is_pn_chars(c) || c == ':')
            {
                self.cur.eat(word);
                let lit = Literal::typed(word, Iri::from_static(xsd::BOOLEAN)).ok()?;
                return Some(Term::Literal(lit));
            }
        }
        None
    }

    fn blank_property_list(&mut self) -> Result<Term, SyntaxError> {
        self.cur.expect('[')?;
        let node = self.blanks.fresh();
        self.cur.skip_ws();
        if self.cur.peek() != Some(']') {
            self.predicate_object_list(&node)?;
            self.cur.skip_ws();
        }
        self.cur.expect(']')?;
        Ok(node)
    }

    fn collection(&mut self) -> Result<Term, SyntaxError> {
        self.cur.expect('(')?;
        let mut items = Vec::new();
        loop {
            self.cur.skip_ws();
            if self.cur.eat_char(')') {
                break;
            }
            items.push(self.object()?);
        }
        let mut head = Term::Iri(Iri::from_static(rdf::NIL));
        for item in items.into_iter().rev() {
            let node = self.blanks.fresh();
            self.emit(node.clone(), Iri::from_static(rdf::FIRST), item)?;
            self.emit(node.clone(), Iri::from_static(rdf::REST), head)?;
            head = node;
        }
        Ok(head)
    }

    fn rdf_literal(&mut self) -> Result<Term, SyntaxError> {
        let lexical = self.cur.string(true)?;
        if self.cur.peek() == Some('@') {
            let lang = self.cur.langtag()?;
            return Ok(Term::Literal(Literal::lang_tagged(lexical, lang)));
        }
        if self.cur.eat("^^") {
            let datatype = match self.cur.peek() {
                Some('<') => self.iri_ref()?,
                _ => self.prefixed_name()?,
            };
            let lit =
                Literal::typed(lexical, datatype).map_err(|e| self.cur.error(e.to_string()))?;
            return Ok(Term::Literal(lit));
        }
        Ok(Term::Literal(Literal::simple(lexical)))
    }

    fn numeric(&mut self) -> Result<Term, SyntaxError> {
        let mut text = String::new();
        if let Some(sign @ ('+' | '-')) = self.cur.peek() {
            self.cur.bump();
            text.push(sign);
        }
        let int_digits = self.digits(&mut text);
        let mut datatype = xsd::INTEGER;
        if self.cur.peek() == Some('.') {
            let next = self.cur.peek_nth(1);
            if next.is_some_and(|c| c.is_ascii_digit()) {
                self.cur.bump();
                text.push('.');
                self.digits(&mut text);
                datatype = xsd::DECIMAL;
            } else if int_digits > 0 && matches!(next, Some('e' | 'E')) && self.exponent_at(1) {
                self.cur.bump();
                text.push('.');
            }
        } else if int_digits == 0 {
            return Err(self.cur.unexpected("number"));
        }
        if matches!(self.cur.peek(), Some('e' | 'E')) && self.exponent_at(0) {
            text.push(self.cur.bump().unwrap_or('e'));
            if let Some(sign @ ('+' | '-')) = self.cur.peek() {
                self.cur.bump();
                text.push(sign);
            }
            self.digits(&mut text);
            datatype = xsd::DOUBLE;
        }
        if text.chars().all(|c| !c.is_ascii_digit()) {
            return Err(self.cur.error("malformed number"));
        }
        let lit = Literal::typed(text, Iri::from_static(datatype))
            .map_err(|e| self.cur.error(e.to_string()))?;
        Ok(Term::Literal(lit))
    }

    /// Whether an exponent (`e`, optional sign, digit) starts `offset` chars ahead.
    fn exponent_at(&self, offset: usize) -> bool {
        let mut i = offset + 1;
        if matches!(self.cur.peek_nth(i), Some('+' | '-')) {
            i += 1;
        }
        self.cur.peek_nth(i).is_some_and(|c| c.is_ascii_digit())
    }

    fn digits(&mut self, into: &mut String) -> usize {
        let mut n = 0;
        while let Some(c) = self.cur.peek().filter(char::is_ascii_digit) {
            self.cur.bump();
            into.push(c);
            n += 1;
        }
        n
    }

    fn iri_ref(&mut self) -> Result<Iri, SyntaxError> {
        let (line, column) = self.position();
        let raw = self.cur.iriref()?;
        let resolved = match &self.base {
            Some(base) => resolve_iri(base, &raw),
            None => raw,
        };
        Iri::new(resolved).map_err(|e| SyntaxError {
            line,
            column,
            message: e.to_string(),
        })
    }

    fn position(&self) -> (usize, usize) {
        let e = self.cur.error("");
        (e.line, e.column)
    }

    fn prefixed_name(&mut self) -> Result<Iri, SyntaxError> {
        let (line, column) = self.position();
        let prefix = self.pn_prefix()?;
        if !self.cur.eat_char(':') {
            return Err(self.cur.unexpected("':' in prefixed name"));
        }
        let local = self.pn_local()?;
        let ns = self.prefixes.get(&prefix).ok_or_else(|| SyntaxError {
            line,
            column,
            message: format!("undeclared prefix `{prefix}:`"),
        })?;
        Iri::new(format!("{ns}{local}")).map_err(|e| SyntaxError {
            line,
            column,
            message: e.to_string(),
        })
    }

    fn pn_local(&mut self) -> Result<String, SyntaxError> {
        let mut out = String::new();
        let mut first = true;
        while let Some(c) = self.cur.peek() {
            let ok_here = if first {
                is_pn_chars_u(c) || c == ':' || c.is_ascii_digit()
            } else {
                is_pn_chars(c) || c == ':'
            };
            if ok_here {
                self.cur.bump();
                out.push(c);
            } else if c == '%' {
                let h1 = self.cur.peek_nth(1).filter(char::is_ascii_hexdigit);
                let h2 = self.cur.peek_nth(2).filter(char::is_ascii_hexdigit);
                match (h1, h2) {
                    (Some(a), Some(b)) => {
                        self.cur.bump();
                        self.cur.bump();
                        self.cur.bump();
                        out.push('%');
                        out.push(a);
                        out.push(b);
                    }
                    _ => return Err(self.cur.error("invalid percent encoding in local name")),
                }
            } else if c == '\\' {
                match self.cur.peek_nth(1) {
                    Some(e) if is_local_escapable(e) => {
                        self.cur.bump();
                        self.cur.bump();
                        out.push(e);
                    }
                    _ => return Err(self.cur.error("invalid escape in local name")),
                }
            } else if c == '.' && !first {
                let continues = self
                    .cur
                    .peek_nth(1)
                    .is_some_and(|n| is_pn_chars(n) || matches!(n, ':' | '%' | '\\' | '.'));
                if !continues {
                    break;
                }
                // A run of dots is only part of the name if a name char follows it.
                let mut k = 1;
                while self.cur.peek_nth(k) == Some('.') {
                    k += 1;
                }
                if !self
                    .cur
                    .peek_nth(k)
                    .is_some_and(|n| is_pn_chars(n) || matches!(n, ':' | '%' | '\\'))
                {
                    break;
                }
                self.cur.bump();
                out.push('.');
            } else {
                break;
            }
            first = false;
        }
        Ok(out)
    }
}

/// RFC 3986 reference resolution.
pub fn resolve_iri(base: &str, reference: &str) -> String {
    let r = split_iri(reference);
    if r.scheme.is_some() {
        return recompose(
            r.scheme,
            r.authority,
            &remove_dot_segments(r.path),
            r.query,
            r.fragment,
        );
    }
    let b = split_iri(base);
    if r.authority.is_some() {
        return recompose(
            b.scheme,
            r.authority,
            &remove_dot_segments(r.path),
            r.query,
            r.fragment,
        );
    }
    if r.path.is_empty() {
        let query = r.query.or(b.query);
        return recompose(b.scheme, b.authority, b.path, query, r.fragment);
    }
    let path = if r.path.starts_with('/') {
        remove_dot_segments(r.path)
    } else {
        let merged = if b.authority.is_some() && b.path.is_empty() {
            format!("/{}", r.path)
        } else {
            match b.path.rfind('/') {
                Some(i) => format!("{}{}", &b.path[..=i], r.path),
                None => r.path.to_owned(),
            }
        };
        remove_dot_segments(&merged)
    };
    recompose(b.scheme, b.authority, &path, r.query, r.fragment)
}

struct IriParts<'a> {
    scheme: Option<&'a str>,
    authority: Option<&'a str>,
    path: &'a str,
    query: Option<&'a str>,
    fragment: Option<&'a str>,
}

fn split_iri(s: &str) -> IriParts<'_> {
    let (s, fragment) = match s.find('#') {
        Some(i) => (&s[..i], Some(&s[i + 1..])),
        None => (s, None),
    };
    let (s, query) = match s.find('?') {
        Some(i) => (&s[..i], Some(&s[i + 1..])),
        None => (s, None),
    };
    let (scheme, s) = match s.find(':') {
        Some(i)
            if i > 0
                && s[..i].starts_with(|c: char| c.is_ascii_alphabetic())
                && s[..i]
                    .chars()
                    .all(|c| c.is_ascii_alphanumeric() || "+-.".contains(c)) =>
        {
            (Some(&s[..i]), &s[i + 1..])
        }
        _ => (None, s),
    };
    let (authority, path) = match s.strip_prefix("//") {
        Some(rest) => {
            let end = rest.find('/').unwrap_or(rest.len());
            (Some(&rest[..end]), &rest[end..])
        }
        None => (None, s),
    };
    IriParts {
        scheme,
        authority,
        path,
        query,
        fragment,
    }
}

fn recompose(
    scheme: Option<&str>,
    authority: Option<&str>,
    path: &str,
    query: Option<&str>,
    fragment: Option<&str>,
) -> String {
    let mut out = String::new();
    if let Some(s) = scheme {
        out.push_str(s);
        out.push(':');
    }
    if let Some(a) = authority {
        out.push_str("//");
        out.push_str(a);
    }
    out.push_str(path);
    if let Some(q) = query {
        out.push('?');
        out.push_str(q);
    }
    if let Some(f) = fragment {
        out.push('#');
        out.push_str(f);
    }
    out
}

fn remove_dot_segments(path: &str) -> String {
    let mut input = path;
    let mut output: Vec<&str> = Vec::new();
    while !input.is_empty() {
        if let Some(rest) = input.strip_prefix("../") {
            input = rest;
        } else if let Some(rest) = input.strip_prefix("./") {
            input = rest;
        } else if input.starts_with("/./") {
            input = &input[2..];
        } else if input == "/." {
            input = "/";
        } else if input.starts_with("/../") {
            input = &input[3..];
            output.pop();
        } else if input == "/.." {
            input = "/";
            output.pop();
        } else if input == "." || input == ".." {
            input = "";
        } else {
            let start = usize::from(input.starts_with('/'));
            let end = input[start..]
                .find('/')
                .map(|i| i + start)
                .unwrap_or(input.len());
            output.push(&input[..end]);
            input = &input[end..];
        }
    }
    output.concat()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iri(s: &str) -> Iri {
        Iri::new(s).unwrap()
    }

    #[test]
    fn empty_document() {
        assert_eq!(parse_turtle("").unwrap().len(), 0);
        assert_eq!(parse_turtle("  # only a comment\n").unwrap().len(), 0);
    }

    #[test]
    fn single_triple_with_prefix() {
        let g = parse_turtle("@prefix ex: <http://e/> . ex:a ex:p ex:b .").unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g.prefixes().get("ex"), Some(&iri("http://e/")));
        let t = g.iter().next().unwrap();
        assert_eq!(t.subject(), &Term::Iri(iri("http://e/a")));
        assert_eq!(t.predicate(), &iri("http://e/p"));
        assert_eq!(t.object(), &Term::Iri(iri("http://e/b")));
    }

    #[test]
    fn sparql_style_directives() {
        let g =
            parse_turtle("PREFIX ex: <http://e/>\nBASE <http://b/x/>\nex:a <p> <../q> .").unwrap();
        let t = g.iter().next().unwrap();
        assert_eq!(t.predicate(), &iri("http://b/x/p"));
        assert_eq!(t.object(), &Term::Iri(iri("http://b/q")));
    }

    #[test]
    fn lists_and_semicolons() {
        let doc = r#"@prefix ex: <http://e/> .
            ex:a a ex:C ; ex:p ex:b , ex:c ; .
            ex:d ex:q "x"@en-GB , "5"^^ex:T, 7, -1.5, 2e3, true ."#;
        let g = parse_turtle(doc).unwrap();
        assert_eq!(g.len(), 9);
        let lits: Vec<_> = g
            .iter()
            .filter_map(|t| match t.object() {
                Term::Literal(l) => Some(l.clone()),
                _ => None,
            })
            .collect();
        assert!(lits.contains(&Literal::lang_tagged("x", "en-GB")));
        assert!(lits.contains(&Literal::typed("2e3", Iri::from_static(xsd::DOUBLE)).unwrap()));
        assert!(lits.contains(&Literal::typed("-1.5", Iri::from_static(xsd::DECIMAL)).unwrap()));
    }

    #[test]
    fn integer_before_statement_dot() {
        let g = parse_turtle("<http://e/a> <http://e/p> 1.").unwrap();
        let t = g.iter().next().unwrap();
        assert_eq!(
            t.object(),
            &Term::Literal(Literal::typed("1", Iri::from_static(xsd::INTEGER)).unwrap())
        );
    }

    #[test]
    fn anonymous_nodes_and_collections() {
        let doc = "@prefix ex: <http://e/> . ex:a ex:p [ ex:q ex:b ] ; ex:l ( ex:x ex:y ) .";
        let g = parse_turtle(doc).unwrap();
        // p, q, l, and two first/rest pairs
        assert_eq!(g.len(), 7);
        assert!(g.iter().any(|t| t.object() == &Term::Iri(iri(rdf::NIL))));
    }

    #[test]
    fn document_labels_kept_and_collisions_avoided() {
        let doc = "@prefix ex: <http://e/> . ex:a ex:p [] . _:genid0 ex:p _:x .";
        let g = parse_turtle(doc).unwrap();
        let blanks: HashSet<_> = g
            .iter()
            .flat_map(|t| [t.subject().clone(), t.object().clone()])
            .filter(Term::is_blank)
            .collect();
        assert_eq!(blanks.len(), 3);
        assert!(blanks.contains(&Term::Blank("x".into())));
    }

    #[test]
    fn local_names_with_dots_and_escapes() {
        let g = parse_turtle("@prefix ex: <http://e/> . ex:a.b ex:p ex:c\\-d .").unwrap();
        let t = g.iter().next().unwrap();
        assert_eq!(t.subject(), &Term::Iri(iri("http://e/a.b")));
        assert_eq!(t.object(), &Term::Iri(iri("http://e/c-d")));
    }

    #[test]
    fn prefix_with_dot() {
        let g = parse_turtle(
            "@prefix vn.role: <http://v/> . <http://e/a> vn.role:Agent <http://e/b> .",
        )
        .unwrap();
        assert_eq!(g.iter().next().unwrap().predicate(), &iri("http://v/Agent"));
    }

    #[test]
    fn errors_carry_position() {
        let err = parse_turtle("@prefix ex: <http://e/> .\nex:a ex:p .").unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(err.column, 11);
        let err = parse_turtle("ex:a <http://e/p> <http://e/b> .").unwrap_err();
        assert!(err.message.contains("undeclared prefix"), "{err}");
        assert_eq!((err.line, err.column), (1, 1));
        assert!(parse_turtle("<http://e/a> <http://e/p> \"open").is_err());
        assert!(parse_turtle("<http://e/a> <http://e/p> <http://e/b>").is_err());
        assert!(parse_turtle("<rel> <http://e/p> <http://e/b> .").is_err());
    }

    #[test]
    fn reference_resolution() {
        let base = "http://a/b/c/d;p?q";
        for (r, expected) in [
            ("g", "http://a/b/c/g"),
            ("./g", "http://a/b/c/g"),
            ("g/", "http://a/b/c/g/"),
            ("/g", "http://a/g"),
            ("//g", "http://g"),
            ("?y", "http://a/b/c/d;p?y"),
            ("#s", "http://a/b/c/d;p?q#s"),
            ("", "http://a/b/c/d;p?q"),
            (".", "http://a/b/c/"),
            ("..", "http://a/b/"),
            ("../g", "http://a/b/g"),
            ("../../g", "http://a/g"),
            ("../../../g", "http://a/g"),
            ("g;x=1/../y", "http://a/b/c/y"),
        ] {
            assert_eq!(resolve_iri(base, r), expected, "{r}");
        }
    }
}
