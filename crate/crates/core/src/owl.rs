//! Manchester syntax and OWL-in-Turtle serializations of a draft.

use std::fmt::Write as _;

use crate::draft::{ClassRef, DraftClass, DraftObjectProperty, Label, OntologyDraft};
use crate::rdf::quoted;
use crate::vocab::{owl, rdf, rdfs, xsd};

const INDENT: &str = "    ";

fn fixed_prefixes() -> [(&'static str, &'static str); 4] {
    [
        ("owl", owl::NS),
        ("rdf", rdf::NS),
        ("rdfs", rdfs::NS),
        ("xsd", xsd::NS),
    ]
}

fn literal(label: &Label) -> String {
    match &label.lang {
        Some(lang) => format!("{}@{lang}", quoted(&label.value)),
        None => quoted(&label.value),
    }
}

/// Manchester rendering: a prefix block and the ontology IRI, then the
/// object property frames and the class frames, each in name order.
pub fn emit_manchester(d: &OntologyDraft) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "Prefix: : {}", d.namespace);
    for (p, ns) in fixed_prefixes() {
        let _ = writeln!(out, "Prefix: {p}: <{ns}>");
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "Ontology: {}", d.ontology_iri);
    for p in d.properties() {
        out.push('\n');
        manchester_property(&mut out, p);
    }
    for c in d.classes() {
        out.push('\n');
        manchester_class(&mut out, c);
    }
    out
}

fn manchester_property(out: &mut String, p: &DraftObjectProperty) {
    let _ = writeln!(out, "ObjectProperty: {}", p.name);
    let _ = writeln!(out, "{INDENT}Annotations: rdfs:label {}", literal(&p.label));
    let _ = writeln!(out, "{INDENT}Domain: {}", p.domain);
    let _ = writeln!(out, "{INDENT}Range: {}", p.range);
    if let Some(inv) = &p.inverse_of {
        let _ = writeln!(out, "{INDENT}InverseOf: {inv}");
    }
}

fn manchester_class(out: &mut String, c: &DraftClass) {
    let _ = writeln!(out, "Class: {}", c.name);
    let _ = writeln!(out, "{INDENT}Annotations: rdfs:label {}", literal(&c.label));
    let entries: Vec<String> = c
        .superclasses
        .iter()
        .cloned()
        .chain(
            c.restrictions
                .iter()
                .map(|r| format!("{} some {}", r.property, r.filler)),
        )
        .collect();
    if entries.is_empty() {
        return;
    }
    let head = format!("{INDENT}SubClassOf: ");
    let hang = " ".repeat(head.len());
    for (i, e) in entries.iter().enumerate() {
        let lead = if i == 0 { head.as_str() } else { hang.as_str() };
        let sep = if i + 1 < entries.len() { "," } else { "" };
        let _ = writeln!(out, "{lead}{e}{sep}");
    }
}

fn class_ref(r: &ClassRef) -> String {
    match r {
        ClassRef::Thing => "owl:Thing".into(),
        ClassRef::Named(n) => format!(":{n}"),
    }
}

/// OWL-in-Turtle rendering. Restrictions are anonymous `owl:Restriction`
/// nodes; inverse links are written on both properties.
pub fn emit_turtle(d: &OntologyDraft) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "@prefix : {} .", d.namespace);
    for (p, ns) in fixed_prefixes() {
        let _ = writeln!(out, "@prefix {p}: <{ns}> .");
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "{} a owl:Ontology .", d.ontology_iri);
    for p in d.properties() {
        let mut lines = vec![
            format!(":{} a owl:ObjectProperty", p.name),
            format!("rdfs:label {}", literal(&p.label)),
            format!("rdfs:domain {}", class_ref(&p.domain)),
            format!("rdfs:range {}", class_ref(&p.range)),
        ];
        if let Some(inv) = &p.inverse_of {
            lines.push(format!("owl:inverseOf :{inv}"));
        }
        out.push('\n');
        turtle_block(&mut out, &lines);
    }
    for c in d.classes() {
        let mut lines = vec![
            format!(":{} a owl:Class", c.name),
            format!("rdfs:label {}", literal(&c.label)),
        ];
        let supers: Vec<String> = c
            .superclasses
            .iter()
            .map(|s| format!(":{s}"))
            .chain(c.restrictions.iter().map(|r| {
                format!(
                    "[ a owl:Restriction ; owl:onProperty :{} ; owl:someValuesFrom :{} ]",
                    r.property, r.filler
                )
            }))
            .collect();
        if !supers.is_empty() {
            let sep = format!(" ,\n{INDENT}{INDENT}");
            lines.push(format!("rdfs:subClassOf {}", supers.join(&sep)));
        }
        out.push('\n');
        turtle_block(&mut out, &lines);
    }
    out
}

fn turtle_block(out: &mut String, lines: &[String]) {
    for (i, l) in lines.iter().enumerate() {
        let lead = if i == 0 { "" } else { INDENT };
        let end = if i + 1 < lines.len() { " ;" } else { " ." };
        let _ = writeln!(out, "{lead}{l}{end}");
    }
}
