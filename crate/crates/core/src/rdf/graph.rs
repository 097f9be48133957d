use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::error::RdfError;
use crate::rdf::{Iri, Term, Triple};
use crate::vocab::{rdf, rdfs};

/// An immutable, duplicate-free set of triples with the prefix map it was
/// read with. Triples are kept sorted, so subject lookups are range scans;
/// an object index covers reverse lookups.
#[derive(Debug, Clone, Default)]
pub struct Graph {
    triples: Vec<Triple>,
    prefixes: BTreeMap<String, Iri>,
    by_object: HashMap<Term, Vec<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.triples == other.triples && self.prefixes == other.prefixes
    }
}

impl Eq for Graph {}

#[derive(Debug, Clone, Default)]
pub struct GraphBuilder {
    triples: BTreeSet<Triple>,
    prefixes: BTreeMap<String, Iri>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, triple: Triple) -> bool {
        self.triples.insert(triple)
    }

    /// Binds `prefix`; a later binding of the same prefix replaces the earlier one.
    pub fn prefix(&mut self, prefix: impl Into<String>, namespace: Iri) -> &mut Self {
        self.prefixes.insert(prefix.into(), namespace);
        self
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn build(self) -> Graph {
        let triples: Vec<Triple> = self.triples.into_iter().collect();
        let mut by_object: HashMap<Term, Vec<usize>> = HashMap::new();
        for (i, t) in triples.iter().enumerate() {
            by_object.entry(t.object().clone()).or_default().push(i);
        }
        Graph {
            triples,
            prefixes: self.prefixes,
            by_object,
        }
    }
}

impl FromIterator<Triple> for Graph {
    fn from_iter<I: IntoIterator<Item = Triple>>(iter: I) -> Self {
        let mut b = GraphBuilder::new();
        for t in iter {
            b.insert(t);
        }
        b.build()
    }
}

impl Graph {
    pub fn builder() -> GraphBuilder {
        GraphBuilder::new()
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// Triples in sorted (subject, predicate, object) order.
    pub fn iter(&self) -> std::slice::Iter<'_, Triple> {
        self.triples.iter()
    }

    pub fn prefixes(&self) -> &BTreeMap<String, Iri> {
        &self.prefixes
    }

    pub fn contains(&self, triple: &Triple) -> bool {
        self.triples.binary_search(triple).is_ok()
    }

    /// Same triples, new prefix map.
    pub fn with_prefixes(mut self, prefixes: BTreeMap<String, Iri>) -> Self {
        self.prefixes = prefixes;
        self
    }

    pub fn triple_set(&self) -> BTreeSet<Triple> {
        self.triples.iter().cloned().collect()
    }

    pub fn with_subject(&self, subject: &Term) -> &[Triple] {
        let start = self.triples.partition_point(|t| t.subject() < subject);
        let end = start + self.triples[start..].partition_point(|t| t.subject() == subject);
        &self.triples[start..end]
    }

    pub fn objects<'a>(
        &'a self,
        subject: &Term,
        predicate: &'a str,
    ) -> impl Iterator<Item = &'a Term> + 'a {
        self.with_subject(subject)
            .iter()
            .filter(move |t| t.predicate().as_str() == predicate)
            .map(Triple::object)
    }

    pub fn with_object<'a>(&'a self, object: &Term) -> impl Iterator<Item = &'a Triple> + 'a {
        self.by_object
            .get(object)
            .into_iter()
            .flatten()
            .map(move |&i| &self.triples[i])
    }

    pub fn with_predicate<'a>(
        &'a self,
        predicate: &'a str,
    ) -> impl Iterator<Item = &'a Triple> + 'a {
        self.triples
            .iter()
            .filter(move |t| t.predicate().as_str() == predicate)
    }

    /// Every IRI `C` with `(node, rdf:type, C)` in the graph.
    pub fn types_of(&self, node: &Term) -> BTreeSet<Iri> {
        self.objects(node, rdf::TYPE)
            .filter_map(Term::as_iri)
            .cloned()
            .collect()
    }

    /// All classes reachable from `class` through one or more
    /// `rdfs:subClassOf` edges. `class` itself is included only when a
    /// cycle leads back to it.
    pub fn subclass_closure(&self, class: &Iri) -> BTreeSet<Iri> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([class.clone()]);
        while let Some(current) = queue.pop_front() {
            let node = Term::Iri(current);
            for sup in self
                .objects(&node, rdfs::SUB_CLASS_OF)
                .filter_map(Term::as_iri)
            {
                if seen.insert(sup.clone()) {
                    queue.push_back(sup.clone());
                }
            }
        }
        seen
    }

    /// Named superclass edges only; used where reachability must be
    /// computed repeatedly over the same graph.
    pub fn subclass_edges(&self) -> BTreeMap<Iri, BTreeSet<Iri>> {
        let mut edges: BTreeMap<Iri, BTreeSet<Iri>> = BTreeMap::new();
        for t in self.with_predicate(rdfs::SUB_CLASS_OF) {
            if let (Term::Iri(s), Term::Iri(o)) = (t.subject(), t.object()) {
                edges.entry(s.clone()).or_default().insert(o.clone());
            }
        }
        edges
    }
}

/// The namespace part of an IRI: everything up to and including the last
/// `#`, or the last `/` when there is no `#`.
pub fn namespace_of(iri: &Iri) -> Result<Iri, RdfError> {
    let s = iri.as_str();
    let cut = s
        .rfind('#')
        .or_else(|| s.rfind('/'))
        .ok_or_else(|| RdfError::NoNamespaceSeparator(s.to_owned()))?;
    Iri::new(&s[..=cut])
}
