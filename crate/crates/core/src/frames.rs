//! Frame recognition over a machine-reader graph.
//!
//! Two kinds of frame are recognised:
//!
//! * n-ary frames: individuals typed by a class that reaches the event
//!   class through zero or more `rdfs:subClassOf` edges, together with the
//!   role edges leaving them;
//! * periphrastic frames: triples whose predicate lives in the reader's
//!   local namespace and links two non-literal nodes, excluding triples
//!   already consumed as arguments of an n-ary frame.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::rdf::{namespace_of, Graph, Iri, Term};
use crate::vocab::{owl, rdf, ReaderVocabulary};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RoleKind {
    Agentive,
    Passive,
    Thematic,
    Oblique,
    PeriphrasticRole,
}

/// Classifies a predicate leaving a frame occurrence.
///
/// VerbNet roles are grouped by base-name family (`Agent*`/`Actor*`,
/// `Patient*`, `Theme*`/`Experiencer*`, everything else oblique);
/// predicates in the reader's local namespace are periphrastic roles.
/// Anything else is not a role.
pub fn classify_role(vocab: &ReaderVocabulary, predicate: &Iri) -> Option<RoleKind> {
    let ns = namespace_of(predicate).ok()?;
    if ns == vocab.role_ns {
        let local = predicate.local_name().to_ascii_lowercase();
        let family = |prefixes: &[&str]| prefixes.iter().any(|p| local.starts_with(p));
        Some(if family(&["agent", "actor"]) {
            RoleKind::Agentive
        } else if family(&["patient"]) {
            RoleKind::Passive
        } else if family(&["theme", "experiencer"]) {
            RoleKind::Thematic
        } else {
            RoleKind::Oblique
        })
    } else if ns == vocab.local_ns {
        Some(RoleKind::PeriphrasticRole)
    } else {
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Argument {
    pub role_predicate: Iri,
    pub node: Term,
    pub role_kind: RoleKind,
    pub type_class: Option<Iri>,
}

/// An individual whose type specialises the event class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct NaryFrame {
    pub occurrence: Term,
    pub frame_class: Iri,
    pub arguments: Vec<Argument>,
}

/// A binary relation minted in the reader's local namespace.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PeriphrasticFrame {
    pub subject: Term,
    pub relation: Iri,
    pub object: Term,
    pub subject_class: Option<Iri>,
    pub object_class: Option<Iri>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum FrameOccurrence {
    NAry(NaryFrame),
    Periphrastic(PeriphrasticFrame),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Recognition {
    pub nary: Vec<NaryFrame>,
    pub periphrastic: Vec<PeriphrasticFrame>,
}

impl Recognition {
    pub fn is_empty(&self) -> bool {
        self.nary.is_empty() && self.periphrastic.is_empty()
    }

    pub fn occurrences(&self) -> impl Iterator<Item = FrameOccurrence> + '_ {
        self.nary.iter().cloned().map(FrameOccurrence::NAry).chain(
            self.periphrastic
                .iter()
                .cloned()
                .map(FrameOccurrence::Periphrastic),
        )
    }
}

/// Memoised `rdfs:subClassOf` reachability over one graph.
struct Taxonomy<'g> {
    graph: &'g Graph,
    closures: BTreeMap<Iri, BTreeSet<Iri>>,
}

impl<'g> Taxonomy<'g> {
    fn new(graph: &'g Graph) -> Self {
        Taxonomy {
            graph,
            closures: BTreeMap::new(),
        }
    }

    fn closure(&mut self, class: &Iri) -> &BTreeSet<Iri> {
        if !self.closures.contains_key(class) {
            let c = self.graph.subclass_closure(class);
            self.closures.insert(class.clone(), c);
        }
        &self.closures[class]
    }

    fn reaches(&mut self, class: &Iri, target: &Iri) -> bool {
        class == target || self.closure(class).contains(target)
    }

    /// Drops every candidate that is a strict ancestor of another
    /// candidate; classes on a shared cycle are all kept.
    fn most_specific(&mut self, candidates: &BTreeSet<Iri>) -> BTreeSet<Iri> {
        let mut keep = BTreeSet::new();
        for c in candidates {
            let dominated = candidates
                .iter()
                .any(|d| d != c && self.closure(d).contains(c) && !self.closure(c).contains(d));
            if !dominated {
                keep.insert(c.clone());
            }
        }
        keep
    }
}

/// The class used to name a node: among its most specific types, one in
/// the reader's local namespace if any, then the lexicographically
/// smallest. Bookkeeping types (`owl:Thing`, `owl:NamedIndividual`) are
/// ignored.
fn preferred_type(tax: &mut Taxonomy<'_>, vocab: &ReaderVocabulary, node: &Term) -> Option<Iri> {
    if node.is_literal() {
        return None;
    }
    let types: BTreeSet<Iri> = tax
        .graph
        .types_of(node)
        .into_iter()
        .filter(|t| t.as_str() != owl::THING && t.as_str() != owl::NAMED_INDIVIDUAL)
        .collect();
    let specific = tax.most_specific(&types);
    let local = specific
        .iter()
        .find(|t| namespace_of(t).is_ok_and(|ns| ns == vocab.local_ns));
    local.or_else(|| specific.iter().next()).cloned()
}

pub fn recognize(g: &Graph, vocab: &ReaderVocabulary) -> Recognition {
    let mut tax = Taxonomy::new(g);
    let nary = recognize_nary_with(&mut tax, vocab);
    let periphrastic = recognize_periphrastic_with(&mut tax, vocab, &nary);
    Recognition { nary, periphrastic }
}

/// One frame per (individual, most specific event-reaching type), with
/// every role edge leaving the individual as an argument.
pub fn recognize_nary(g: &Graph, vocab: &ReaderVocabulary) -> Vec<NaryFrame> {
    recognize_nary_with(&mut Taxonomy::new(g), vocab)
}

pub fn recognize_periphrastic(g: &Graph, vocab: &ReaderVocabulary) -> Vec<PeriphrasticFrame> {
    recognize(g, vocab).periphrastic
}

fn recognize_nary_with(tax: &mut Taxonomy<'_>, vocab: &ReaderVocabulary) -> Vec<NaryFrame> {
    let g = tax.graph;
    let mut event_types: BTreeMap<&Term, BTreeSet<Iri>> = BTreeMap::new();
    for t in g.with_predicate(rdf::TYPE) {
        if let Term::Iri(class) = t.object() {
            if tax.reaches(class, &vocab.event_class) {
                event_types
                    .entry(t.subject())
                    .or_default()
                    .insert(class.clone());
            }
        }
    }
    let mut frames = Vec::new();
    for (occurrence, types) in event_types {
        let mut arguments: Vec<Argument> = g
            .with_subject(occurrence)
            .iter()
            .filter_map(|t| {
                let role_kind = classify_role(vocab, t.predicate())?;
                Some((t.predicate().clone(), t.object().clone(), role_kind))
            })
            .collect::<Vec<_>>()
            .into_iter()
            .map(|(role_predicate, node, role_kind)| Argument {
                type_class: preferred_type(tax, vocab, &node),
                role_predicate,
                node,
                role_kind,
            })
            .collect();
        arguments.sort();
        for frame_class in tax.most_specific(&types) {
            frames.push(NaryFrame {
                occurrence: occurrence.clone(),
                frame_class,
                arguments: arguments.clone(),
            });
        }
    }
    frames.sort();
    frames
}

fn recognize_periphrastic_with(
    tax: &mut Taxonomy<'_>,
    vocab: &ReaderVocabulary,
    nary: &[NaryFrame],
) -> Vec<PeriphrasticFrame> {
    let g = tax.graph;
    let consumed: BTreeSet<(&Term, &Iri, &Term)> = nary
        .iter()
        .flat_map(|f| {
            f.arguments
                .iter()
                .map(move |a| (&f.occurrence, &a.role_predicate, &a.node))
        })
        .collect();
    let mut frames = Vec::new();
    for t in g.iter() {
        if t.subject().is_literal() || t.object().is_literal() {
            continue;
        }
        if !namespace_of(t.predicate()).is_ok_and(|ns| ns == vocab.local_ns) {
            continue;
        }
        if consumed.contains(&(t.subject(), t.predicate(), t.object())) {
            continue;
        }
        frames.push(PeriphrasticFrame {
            subject: t.subject().clone(),
            relation: t.predicate().clone(),
            object: t.object().clone(),
            subject_class: preferred_type(tax, vocab, t.subject()),
            object_class: preferred_type(tax, vocab, t.object()),
        });
    }
    frames.sort();
    frames
}
