//! Shared test support: bundled fixtures, a seeded generator of small
//! FRED-style graphs, and brute-force oracles written independently of the
//! library's own algorithms.

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use frodo_core::draft::{ClassRef, OntologyDraft};
use frodo_core::frames::{recognize, RoleKind};
use frodo_core::naming::{class_name, gerund_class_name, involves_property, periphrastic_property};
use frodo_core::rdf::{Graph, Iri, Literal, Term, Triple};
use frodo_core::source::CompetencyQuestion;
use frodo_core::vocab::{owl, rdf, rdfs, ReaderVocabulary, DUL_EVENT, DUL_NS, FRED_NS, VN_ROLE_NS};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const RUNNING_EXAMPLE: &str = "Who commissioned a component of a system?";

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures")
}

pub fn fred_fixtures() -> PathBuf {
    fixtures_dir().join("fred")
}

pub fn golden(name: &str) -> String {
    std::fs::read_to_string(fixtures_dir().join("golden").join(name)).expect("golden file")
}

/// The six corpus questions with their ids, in file order.
pub fn corpus() -> Vec<CompetencyQuestion> {
    let text = std::fs::read_to_string(fixtures_dir().join("cqs.tsv")).expect("cqs.tsv");
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let (id, q) = l.split_once('\t').expect("id<TAB>text");
            CompetencyQuestion::new(q).expect("non-empty").with_id(id)
        })
        .collect()
}

/// Listing comparison form: header lines before the first frame dropped,
/// runs of whitespace collapsed, blank lines removed, and the
/// `Annotations rdfs:label` spelling normalised to `Annotations:`.
pub fn normalize_listing(text: &str) -> Vec<String> {
    text.lines()
        .skip_while(|l| !(l.starts_with("ObjectProperty:") || l.starts_with("Class:")))
        .map(|l| l.split_whitespace().collect::<Vec<_>>().join(" "))
        .filter(|l| !l.is_empty())
        .map(|l| match l.strip_prefix("Annotations rdfs:label") {
            Some(rest) => format!("Annotations: rdfs:label{rest}"),
            None => l,
        })
        .collect()
}

fn iri(s: impl Into<String>) -> Iri {
    Iri::new(s).expect("generated IRIs are valid")
}

fn fred(local: &str) -> Term {
    Term::Iri(iri(format!("{FRED_NS}{local}")))
}

const ROLES: &[&str] = &[
    "Agent",
    "Actor",
    "Actor2",
    "Patient",
    "Patient1",
    "Patient2",
    "Theme",
    "Theme1",
    "Experiencer",
    "Time",
    "Asset",
    "Location",
];
const LOCAL_RELATIONS: &[&str] = &["componentOf", "in", "of", "for", "partOf", "at", "levelOf"];
const CLASS_NAMES: &[&str] = &[
    "Commission",
    "Record",
    "Monitor",
    "Component",
    "System",
    "Person",
    "Level",
    "Water",
    "Area",
    "Disease",
    "Site",
    "Agency",
];

/// A pseudo-random FRED-style graph of at most `max_triples` triples:
/// subclass chains (possibly cyclic) over local classes ending in the
/// event class, typed and untyped individuals, role edges, local
/// relations, literals and foreign predicates.
pub fn random_fred_graph(seed: u64, max_triples: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ty = iri(rdf::TYPE);
    let sub = iri(rdfs::SUB_CLASS_OF);
    let event = Term::Iri(iri(DUL_EVENT));

    let n_classes = rng.random_range(2..=7);
    let classes: Vec<Term> = CLASS_NAMES
        .choose_multiple(&mut rng, n_classes)
        .map(|c| fred(c))
        .collect();
    let n_ind = rng.random_range(2..=8);
    let individuals: Vec<Term> = (0..n_ind)
        .map(|i| {
            if rng.random_bool(0.1) {
                Term::Blank(format!("n{i}"))
            } else {
                fred(&format!("x_{i}"))
            }
        })
        .collect();

    let mut triples = Vec::new();
    for c in &classes {
        if rng.random_bool(0.6) {
            let target = if rng.random_bool(0.4) {
                event.clone()
            } else {
                classes.choose(&mut rng).cloned().expect("non-empty")
            };
            triples.push(Triple::new(c.clone(), sub.clone(), target).expect("iri subject"));
        }
    }
    for ind in &individuals {
        let n_types = [0, 1, 1, 1, 2].choose(&mut rng).copied().unwrap_or(1);
        for _ in 0..n_types {
            let t = match rng.random_range(0..20) {
                0 => event.clone(),
                1 => Term::Iri(iri(owl::THING)),
                2 => Term::Iri(iri(format!("{DUL_NS}Person"))),
                _ => classes.choose(&mut rng).cloned().expect("non-empty"),
            };
            triples.push(Triple::new(ind.clone(), ty.clone(), t).expect("valid"));
        }
    }
    let n_edges = rng.random_range(1..=12);
    for _ in 0..n_edges {
        let s = individuals.choose(&mut rng).cloned().expect("non-empty");
        let p = match rng.random_range(0..10) {
            0..=4 => iri(format!(
                "{VN_ROLE_NS}{}",
                ROLES.choose(&mut rng).expect("non-empty")
            )),
            5..=8 => iri(format!(
                "{FRED_NS}{}",
                LOCAL_RELATIONS.choose(&mut rng).expect("non-empty")
            )),
            _ => iri(format!("{DUL_NS}hasQuality")),
        };
        let o = if rng.random_bool(0.1) {
            Term::Literal(Literal::simple("text"))
        } else {
            individuals.choose(&mut rng).cloned().expect("non-empty")
        };
        triples.push(Triple::new(s, p, o).expect("non-literal subject"));
    }
    triples.truncate(max_triples);
    triples.into_iter().collect()
}

/// Every node reachable from `c` through one or more subclass edges, by
/// naive fixpoint iteration over the whole edge list.
pub fn reach(g: &Graph, c: &Iri) -> BTreeSet<Iri> {
    let edges: Vec<(Iri, Iri)> = g
        .iter()
        .filter(|t| t.predicate().as_str() == rdfs::SUB_CLASS_OF)
        .filter_map(|t| Some((t.subject().as_iri()?.clone(), t.object().as_iri()?.clone())))
        .collect();
    let mut out: BTreeSet<Iri> = BTreeSet::new();
    loop {
        let before = out.len();
        for (a, b) in &edges {
            if a == c || out.contains(a) {
                out.insert(b.clone());
            }
        }
        if out.len() == before {
            return out;
        }
    }
}

fn in_namespace(p: &Iri, ns: &str) -> bool {
    p.as_str()
        .strip_prefix(ns)
        .is_some_and(|rest| !rest.contains('#') && !rest.contains('/'))
}

fn is_role_predicate(p: &Iri) -> bool {
    in_namespace(p, VN_ROLE_NS) || in_namespace(p, FRED_NS)
}

/// One entry of the frame-occurrence set: occurrence, frame class and the
/// (role predicate, argument) pairs leaving the occurrence.
pub type NaryEntry = (Term, Iri, BTreeSet<(Iri, Term)>);

/// Brute-force frame-occurrence set: every (individual, type) where the
/// type is the event class or reaches it, keeping only types not strictly
/// below another candidate type of the same individual.
pub fn nary_oracle(g: &Graph) -> BTreeSet<NaryEntry> {
    let event = iri(DUL_EVENT);
    let mut candidates: BTreeMap<Term, BTreeSet<Iri>> = BTreeMap::new();
    for t in g.iter() {
        if t.predicate().as_str() != rdf::TYPE {
            continue;
        }
        if let Some(c) = t.object().as_iri() {
            if *c == event || reach(g, c).contains(&event) {
                candidates
                    .entry(t.subject().clone())
                    .or_default()
                    .insert(c.clone());
            }
        }
    }
    let mut out = BTreeSet::new();
    for (f, types) in &candidates {
        let args: BTreeSet<(Iri, Term)> = g
            .iter()
            .filter(|t| t.subject() == f && is_role_predicate(t.predicate()))
            .map(|t| (t.predicate().clone(), t.object().clone()))
            .collect();
        for c in types {
            let strictly_above_another = types
                .iter()
                .any(|d| d != c && reach(g, d).contains(c) && !reach(g, c).contains(d));
            if !strictly_above_another {
                out.insert((f.clone(), c.clone(), args.clone()));
            }
        }
    }
    out
}

/// Brute-force periphrastic set: local-namespace triples between two
/// non-literals whose subject is not a frame occurrence.
pub fn periphrastic_oracle(g: &Graph) -> BTreeSet<(Term, Iri, Term)> {
    let occurrences: BTreeSet<Term> = nary_oracle(g).into_iter().map(|(f, _, _)| f).collect();
    g.iter()
        .filter(|t| in_namespace(t.predicate(), FRED_NS))
        .filter(|t| !t.subject().is_literal() && !t.object().is_literal())
        .filter(|t| !occurrences.contains(t.subject()))
        .map(|t| {
            (
                t.subject().clone(),
                t.predicate().clone(),
                t.object().clone(),
            )
        })
        .collect()
}

/// Counts from a single linear scan, for cross-checking the census.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct ScanCounts {
    pub classes: usize,
    pub object_properties: usize,
    pub datatype_properties: usize,
    pub subclass_of: usize,
    pub labels: usize,
    pub inverse_of_triples: usize,
    pub domain_on_object_properties: usize,
    pub range_on_object_properties: usize,
    pub restrictions_with_some: usize,
}

pub fn scan_counts(g: &Graph) -> ScanCounts {
    let typed = |s: &Term, class: &str| {
        g.iter().any(|t| {
            t.subject() == s
                && t.predicate().as_str() == rdf::TYPE
                && t.object().as_iri().is_some_and(|o| o.as_str() == class)
        })
    };
    let has = |s: &Term, pred: &str| {
        g.iter()
            .any(|t| t.subject() == s && t.predicate().as_str() == pred)
    };
    let mut subjects_typed: BTreeMap<&str, BTreeSet<&Term>> = BTreeMap::new();
    let mut c = ScanCounts::default();
    for t in g.iter() {
        let p = t.predicate().as_str();
        if p == rdf::TYPE {
            if let Some(o) = t.object().as_iri() {
                if !t.subject().is_blank()
                    && !(o.as_str() == owl::CLASS
                        && t.subject()
                            .as_iri()
                            .is_some_and(|s| s.as_str() == owl::THING))
                {
                    subjects_typed
                        .entry(o.as_str())
                        .or_default()
                        .insert(t.subject());
                }
                if o.as_str() == owl::RESTRICTION && has(t.subject(), owl::SOME_VALUES_FROM) {
                    c.restrictions_with_some += 1;
                }
            }
        } else if p == rdfs::SUB_CLASS_OF {
            c.subclass_of += 1;
        } else if p == rdfs::LABEL {
            c.labels += 1;
        } else if p == owl::INVERSE_OF {
            c.inverse_of_triples += 1;
        } else if p == rdfs::DOMAIN && typed(t.subject(), owl::OBJECT_PROPERTY) {
            c.domain_on_object_properties += 1;
        } else if p == rdfs::RANGE && typed(t.subject(), owl::OBJECT_PROPERTY) {
            c.range_on_object_properties += 1;
        }
    }
    let count = |k: &str| subjects_typed.get(k).map_or(0, BTreeSet::len);
    c.classes = count(owl::CLASS);
    c.object_properties = count(owl::OBJECT_PROPERTY);
    c.datatype_properties = count(owl::DATATYPE_PROPERTY);
    c
}

/// Structural policies every generated draft obeys. Returns one message
/// per breach.
pub fn policy_breaches(d: &OntologyDraft) -> Vec<String> {
    let mut out = d.violations();
    for p in d.properties() {
        match &p.inverse_of {
            None => out.push(format!("{} has no inverse", p.name)),
            Some(q) => match d.property(q) {
                Some(qp) if qp.inverse_of.as_deref() == Some(p.name.as_str()) => {}
                _ => out.push(format!("{} inverse is not symmetric", p.name)),
            },
        }
        if matches!(p.domain, ClassRef::Thing) == matches!(p.range, ClassRef::Thing) {
            out.push(format!(
                "{} does not have exactly one of domain/range Thing",
                p.name
            ));
        }
        // The inverse member of a pair is the one named after its partner.
        let forward = match &p.inverse_of {
            Some(q) => {
                let upper = q
                    .chars()
                    .next()
                    .map(|c| c.to_uppercase().collect::<String>())
                    .unwrap_or_default()
                    + &q[q.chars().next().map_or(0, char::len_utf8)..];
                let named_after_partner = p.name == format!("is{upper}Of")
                    || q.strip_prefix("involves")
                        .is_some_and(|c| p.name == format!("is{c}InvolvedIn"));
                !named_after_partner
            }
            None => true,
        };
        if forward && !matches!(p.domain, ClassRef::Thing) {
            out.push(format!("{} should have domain Thing", p.name));
        }
        if !forward && !matches!(p.range, ClassRef::Thing) {
            out.push(format!("{} should have range Thing", p.name));
        }
    }
    for c in d.classes() {
        if c.label.value.trim().is_empty() {
            out.push(format!("{} has no label", c.name));
        }
    }
    out
}

/// Restrictions the templates call for, derived frame by frame.
pub fn expected_restrictions(g: &Graph) -> BTreeSet<(String, String, String)> {
    let rec = recognize(g, &ReaderVocabulary::default());
    let mut out = BTreeSet::new();
    for f in &rec.nary {
        let gerund = gerund_class_name(&f.frame_class);
        let typed: Vec<(RoleKind, String)> = f
            .arguments
            .iter()
            .filter_map(|a| a.type_class.as_ref().map(|t| (a.role_kind, class_name(t))))
            .collect();
        let passive: BTreeSet<&String> = typed
            .iter()
            .filter(|(k, _)| *k == RoleKind::Passive)
            .map(|(_, c)| c)
            .collect();
        let thematic: BTreeSet<&String> = typed
            .iter()
            .filter(|(k, _)| *k == RoleKind::Thematic)
            .map(|(_, c)| c)
            .collect();
        let heads = if !passive.is_empty() {
            passive
        } else {
            thematic
        };
        let holders: Vec<String> = if heads.is_empty() {
            vec![gerund.clone()]
        } else {
            heads.iter().map(|h| format!("{h}{gerund}")).collect()
        };
        for holder in &holders {
            for (_, c) in &typed {
                out.insert((holder.clone(), involves_property(c), c.clone()));
            }
        }
    }
    for p in &rec.periphrastic {
        if let (Some(s), Some(o)) = (&p.subject_class, &p.object_class) {
            let o = class_name(o);
            out.insert((class_name(s), periphrastic_property(&p.relation, &o), o));
        }
    }
    out
}

pub fn actual_restrictions(d: &OntologyDraft) -> BTreeSet<(String, String, String)> {
    d.classes()
        .flat_map(|c| {
            c.restrictions
                .iter()
                .map(move |r| (c.name.clone(), r.property.clone(), r.filler.clone()))
        })
        .collect()
}

/// Compound names only ever start with a class of a non-agentive argument
/// of some frame with the same gerund.
pub fn agentive_leaks(g: &Graph, d: &OntologyDraft) -> Vec<String> {
    let rec = recognize(g, &ReaderVocabulary::default());
    let mut heads: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    for f in &rec.nary {
        let gerund = gerund_class_name(&f.frame_class);
        let entry = heads.entry(gerund).or_default();
        for a in &f.arguments {
            if let (Some(t), true) = (&a.type_class, a.role_kind != RoleKind::Agentive) {
                entry.insert(class_name(t));
            }
        }
    }
    let mut out = Vec::new();
    for c in d.classes() {
        for s in &c.superclasses {
            if let Some(head) = c.name.strip_suffix(s.as_str()) {
                if heads.contains_key(s) && !heads[s].contains(head) {
                    out.push(c.name.clone());
                }
            }
        }
    }
    out
}
