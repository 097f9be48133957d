use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::generate::ontology_iri_for;
use super::{ClassRef, OntologyDraft};
use crate::rdf::Iri;

/// Namespace of a merge whose inputs disagree on theirs.
pub const MERGED_NAMESPACE: &str = "https://w3id.org/frodo/draft/merged#";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MergeConflict {
    pub entity: String,
    pub field: &'static str,
    pub left: String,
    pub right: String,
    pub left_sources: Vec<String>,
    pub right_sources: Vec<String>,
}

impl fmt::Display for MergeConflict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} of `{}` is `{}` in [{}] but `{}` in [{}]",
            self.field,
            self.entity,
            self.left,
            self.left_sources.join(", "),
            self.right,
            self.right_sources.join(", ")
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, thiserror::Error)]
#[error("{} conflicting definition(s): {}", conflicts.len(), conflicts.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("; "))]
pub struct MergeError {
    pub conflicts: Vec<MergeConflict>,
}

fn show_inverse(p: &Option<String>) -> String {
    p.clone().unwrap_or_else(|| "none".into())
}

impl OntologyDraft {
    /// Unifies `other` into `self` by local name. Classes union their
    /// superclasses and restrictions; labels keep the first seen; property
    /// definitions must agree on domain, range and inverse, otherwise the
    /// existing one stays and a conflict is reported.
    pub(crate) fn absorb(&mut self, other: &OntologyDraft) -> Vec<MergeConflict> {
        let mut conflicts = Vec::new();
        for c in other.classes.values() {
            match self.classes.get_mut(&c.name) {
                Some(mine) => {
                    mine.superclasses.extend(c.superclasses.iter().cloned());
                    mine.restrictions.extend(c.restrictions.iter().cloned());
                }
                None => {
                    self.classes.insert(c.name.clone(), c.clone());
                }
            }
        }
        for p in other.properties.values() {
            match self.properties.get(&p.name) {
                Some(mine) => {
                    let fields: [(&'static str, String, String); 3] = [
                        ("domain", mine.domain.to_string(), p.domain.to_string()),
                        ("range", mine.range.to_string(), p.range.to_string()),
                        (
                            "inverseOf",
                            show_inverse(&mine.inverse_of),
                            show_inverse(&p.inverse_of),
                        ),
                    ];
                    for (field, left, right) in fields {
                        if left != right {
                            conflicts.push(MergeConflict {
                                entity: p.name.clone(),
                                field,
                                left,
                                right,
                                left_sources: self.sources_of(&p.name).map(str::to_owned).collect(),
                                right_sources: other
                                    .sources_of(&p.name)
                                    .map(str::to_owned)
                                    .collect(),
                            });
                        }
                    }
                }
                None => {
                    self.properties.insert(p.name.clone(), p.clone());
                }
            }
        }
        for (entity, sources) in &other.provenance {
            self.provenance
                .entry(entity.clone())
                .or_default()
                .extend(sources.iter().cloned());
        }
        self.restore_inverse_symmetry();
        conflicts
    }

    /// Completes one-sided inverse links where the partner has none.
    fn restore_inverse_symmetry(&mut self) {
        let links: Vec<(String, String)> = self
            .properties
            .values()
            .filter_map(|p| p.inverse_of.clone().map(|q| (p.name.clone(), q)))
            .collect();
        for (p, q) in links {
            if let Some(partner) = self.properties.get_mut(&q) {
                if partner.inverse_of.is_none() {
                    partner.inverse_of = Some(p);
                }
            }
        }
    }
}

/// Picks the merged namespace and ontology IRI. Empty drafts do not vote,
/// so the empty draft is an identity for merging.
fn merged_identity(drafts: &[OntologyDraft]) -> (Iri, Iri) {
    let voters: Vec<&OntologyDraft> = {
        let non_empty: Vec<_> = drafts.iter().filter(|d| !d.is_empty()).collect();
        if non_empty.is_empty() {
            drafts.iter().collect()
        } else {
            non_empty
        }
    };
    let namespaces: BTreeSet<&Iri> = voters.iter().map(|d| &d.namespace).collect();
    if namespaces.len() == 1 {
        let ns = namespaces
            .into_iter()
            .next()
            .cloned()
            .expect("one namespace");
        let iri = voters
            .iter()
            .map(|d| &d.ontology_iri)
            .min()
            .cloned()
            .expect("at least one voter");
        (ns, iri)
    } else {
        let ns = Iri::new(MERGED_NAMESPACE).expect("valid constant");
        let iri = ontology_iri_for(&ns);
        (ns, iri)
    }
}

/// Unifies drafts by local name. The result does not depend on the order
/// of the inputs except for which label wins when labels differ.
pub fn merge_drafts(drafts: &[OntologyDraft]) -> Result<OntologyDraft, MergeError> {
    let (namespace, ontology_iri) = merged_identity(drafts);
    let mut merged = OntologyDraft::new(ontology_iri, namespace);
    let mut conflicts = Vec::new();
    for d in drafts {
        conflicts.extend(merged.absorb(d));
    }
    if conflicts.is_empty() {
        Ok(merged)
    } else {
        Err(MergeError { conflicts })
    }
}

impl ClassRef {
    pub fn is_thing(&self) -> bool {
        matches!(self, ClassRef::Thing)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::draft::{DraftObjectProperty, Label};

    fn iri(s: &str) -> Iri {
        Iri::new(s).unwrap()
    }

    fn draft(ns: &str, class: &str, source: &str) -> OntologyDraft {
        let mut d = OntologyDraft::new(iri(ns.trim_end_matches('#')), iri(ns));
        d.add_class(class, Label::plain(class));
        d.add_class("Water", Label::plain("Water"));
        d.add_superclass(class, "Water");
        d.attribute_all(source);
        d
    }

    #[test]
    fn shared_class_unions_provenance() {
        let a = draft("urn:a#", "Sea", "CQ2");
        let b = draft("urn:a#", "Lake", "CQ3");
        let m = merge_drafts(&[a, b]).unwrap();
        assert_eq!(m.sources_of("Water").collect::<Vec<_>>(), ["CQ2", "CQ3"]);
        assert_eq!(m.classes().len(), 3);
    }

    #[test]
    fn idempotent_and_identity() {
        let a = draft("urn:a#", "Sea", "CQ2");
        assert_eq!(merge_drafts(&[a.clone(), a.clone()]).unwrap(), a);
        let empty = OntologyDraft::new(iri("urn:other"), iri("urn:other#"));
        assert_eq!(merge_drafts(&[a.clone(), empty.clone()]).unwrap(), a);
        assert_eq!(merge_drafts(&[empty, a.clone()]).unwrap(), a);
    }

    #[test]
    fn differing_namespaces_fall_back() {
        let a = draft("urn:a#", "Sea", "CQ2");
        let b = draft("urn:b#", "Lake", "CQ3");
        let m = merge_drafts(&[a, b]).unwrap();
        assert_eq!(m.namespace.as_str(), MERGED_NAMESPACE);
        assert_eq!(
            m.ontology_iri.as_str(),
            "https://w3id.org/frodo/draft/merged"
        );
    }

    #[test]
    fn range_conflict_names_both_sources() {
        let mut a = draft("urn:a#", "Sea", "CQ2");
        let mut b = draft("urn:a#", "Lake", "CQ3");
        for (d, range, src) in [(&mut a, "Sea", "CQ2"), (&mut b, "Lake", "CQ3")] {
            d.insert_property(DraftObjectProperty {
                name: "p".into(),
                label: Label::plain("p"),
                domain: ClassRef::Thing,
                range: ClassRef::Named(range.into()),
                inverse_of: None,
            });
            d.note_source("p", src);
        }
        let err = merge_drafts(&[a, b]).unwrap_err();
        assert_eq!(err.conflicts.len(), 1);
        let c = &err.conflicts[0];
        assert_eq!(
            (
                c.field,
                c.left_sources.as_slice(),
                c.right_sources.as_slice()
            ),
            ("range", &["CQ2".to_string()][..], &["CQ3".to_string()][..])
        );
        assert!(err.to_string().contains("range of `p`"));
    }
}
