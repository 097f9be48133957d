//! Turtle and N-Triples writers. Output is deterministic: triples are
//! emitted in the graph's sorted order.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::rdf::lex::{is_pn_chars, is_pn_chars_base, is_pn_chars_u};
use crate::rdf::{Graph, Iri, Literal, Term};
use crate::vocab::rdf;

pub fn write_ntriples(g: &Graph) -> String {
    let mut out = String::new();
    for t in g.iter() {
        let _ = writeln!(
            out,
            "{} {} {} .",
            nt_term(t.subject()),
            nt_iri(t.predicate()),
            nt_term(t.object())
        );
    }
    out
}

pub fn write_turtle(g: &Graph) -> String {
    let prefixes: Vec<(&str, &str)> = g
        .prefixes()
        .iter()
        .map(|(p, ns)| (p.as_str(), ns.as_str()))
        .filter(|(p, _)| is_valid_prefix(p))
        .collect();
    let w = TermWriter::new(&prefixes);
    let mut out = String::new();
    for (p, ns) in &prefixes {
        let _ = writeln!(out, "@prefix {p}: <{ns}> .");
    }
    if !prefixes.is_empty() && !g.is_empty() {
        out.push('\n');
    }
    let mut by_subject: BTreeMap<&Term, Vec<(&Iri, &Term)>> = BTreeMap::new();
    for t in g.iter() {
        by_subject
            .entry(t.subject())
            .or_default()
            .push((t.predicate(), t.object()));
    }
    for (subject, pairs) in by_subject {
        out.push_str(&w.term(subject));
        let mut last_pred: Option<&Iri> = None;
        for (p, o) in pairs {
            if last_pred == Some(p) {
                out.push_str(" ,\n        ");
            } else {
                if last_pred.is_some() {
                    out.push_str(" ;");
                }
                out.push_str("\n    ");
                out.push_str(&w.predicate(p));
                out.push(' ');
                last_pred = Some(p);
            }
            out.push_str(&w.term(o));
        }
        out.push_str(" .\n");
    }
    out
}

/// Formats terms for Turtle output, abbreviating IRIs with the given
/// prefixes when the local part is a legal prefixed-name local.
pub struct TermWriter<'a> {
    prefixes: &'a [(&'a str, &'a str)],
}

impl<'a> TermWriter<'a> {
    pub fn new(prefixes: &'a [(&'a str, &'a str)]) -> Self {
        TermWriter { prefixes }
    }

    pub fn iri(&self, iri: &Iri) -> String {
        let s = iri.as_str();
        self.prefixes
            .iter()
            .filter(|(_, ns)| s.starts_with(ns) && is_valid_local(&s[ns.len()..]))
            .max_by_key(|(_, ns)| ns.len())
            .map(|(p, ns)| format!("{p}:{}", &s[ns.len()..]))
            .unwrap_or_else(|| nt_iri(iri))
    }

    pub fn predicate(&self, iri: &Iri) -> String {
        if iri.as_str() == rdf::TYPE {
            "a".to_owned()
        } else {
            self.iri(iri)
        }
    }

    pub fn term(&self, term: &Term) -> String {
        match term {
            Term::Iri(iri) => self.iri(iri),
            Term::Blank(label) => format!("_:{label}"),
            Term::Literal(lit) => self.literal(lit),
        }
    }

    pub fn literal(&self, lit: &Literal) -> String {
        let mut out = quoted(lit.lexical());
        if let Some(lang) = lit.lang() {
            out.push('@');
            out.push_str(lang);
        } else if let Some(dt) = lit.datatype() {
            out.push_str("^^");
            out.push_str(&self.iri(dt));
        }
        out
    }
}

pub fn nt_iri(iri: &Iri) -> String {
    format!("<{}>", iri.as_str())
}

pub fn nt_term(term: &Term) -> String {
    match term {
        Term::Iri(iri) => nt_iri(iri),
        Term::Blank(label) => format!("_:{label}"),
        Term::Literal(lit) => {
            let mut out = quoted(lit.lexical());
            if let Some(lang) = lit.lang() {
                out.push('@');
                out.push_str(lang);
            } else if let Some(dt) = lit.datatype() {
                out.push_str("^^");
                out.push_str(&nt_iri(dt));
            }
            out
        }
    }
}

/// A double-quoted string with the escapes both grammars accept.
pub fn quoted(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            '\u{8}' => out.push_str("\\b"),
            '\u{c}' => out.push_str("\\f"),
            c if (c as u32) < 0x20 || c == '\u{7f}' => {
                let _ = write!(out, "\\u{:04X}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn is_valid_prefix(p: &str) -> bool {
    let mut chars = p.chars();
    match chars.next() {
        None => true,
        Some(c) if is_pn_chars_base(c) => {
            !p.ends_with('.') && chars.all(|c| is_pn_chars(c) || c == '.')
        }
        Some(_) => false,
    }
}

fn is_valid_local(l: &str) -> bool {
    let mut chars = l.chars();
    match chars.next() {
        None => true,
        Some(c) if is_pn_chars_u(c) || c.is_ascii_digit() || c == ':' => {
            !l.ends_with('.') && chars.all(|c| is_pn_chars(c) || c == '.' || c == ':')
        }
        Some(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rdf::{parse_ntriples, parse_turtle};

    #[test]
    fn abbreviates_only_legal_locals() {
        let prefixes = [("ex", "http://e/")];
        let w = TermWriter::new(&prefixes);
        assert_eq!(w.iri(&Iri::new("http://e/a").unwrap()), "ex:a");
        assert_eq!(w.iri(&Iri::new("http://e/a/b").unwrap()), "<http://e/a/b>");
        assert_eq!(w.iri(&Iri::new("http://e/a.").unwrap()), "<http://e/a.>");
        assert_eq!(w.iri(&Iri::new("http://e/").unwrap()), "ex:");
    }

    #[test]
    fn escapes_round_trip() {
        let doc = "<http://e/a> <http://e/p> \"q\\\" \\\\ \\n \\t \\u0001 é\" .\n";
        let g = parse_ntriples(doc).unwrap();
        assert_eq!(parse_ntriples(&write_ntriples(&g)).unwrap(), g);
        assert_eq!(
            parse_turtle(&write_turtle(&g)).unwrap().triple_set(),
            g.triple_set()
        );
    }
}
