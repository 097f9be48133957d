//! The generated OWL module: classes, object properties with their
//! inverses, subclass axioms, existential restrictions, labels.

mod generate;
mod merge;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rdf::Iri;

pub use generate::{
    default_namespace, draft_cq, draft_from_nary, draft_from_periphrastic, DraftOutcome,
    DraftSettings, DraftWarning,
};
pub use merge::{merge_drafts, MergeConflict, MergeError, MERGED_NAMESPACE};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Label {
    pub value: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lang: Option<String>,
}

impl Label {
    pub fn plain(value: impl Into<String>) -> Self {
        Label {
            value: value.into(),
            lang: None,
        }
    }

    pub fn english(value: impl Into<String>) -> Self {
        Label {
            value: value.into(),
            lang: Some("en".into()),
        }
    }
}

/// Domain or range of a property: `owl:Thing` or a class of the draft.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassRef {
    Thing,
    Named(String),
}

impl ClassRef {
    pub fn named(&self) -> Option<&str> {
        match self {
            ClassRef::Thing => None,
            ClassRef::Named(n) => Some(n),
        }
    }
}

impl fmt::Display for ClassRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassRef::Thing => f.write_str("owl:Thing"),
            ClassRef::Named(n) => f.write_str(n),
        }
    }
}

impl Serialize for ClassRef {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ClassRef {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Ok(if s == "owl:Thing" {
            ClassRef::Thing
        } else {
            ClassRef::Named(s)
        })
    }
}

/// `property some filler`
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Restriction {
    pub property: String,
    pub filler: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DraftClass {
    pub name: String,
    pub label: Label,
    #[serde(default)]
    pub superclasses: BTreeSet<String>,
    #[serde(default)]
    pub restrictions: BTreeSet<Restriction>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DraftObjectProperty {
    pub name: String,
    pub label: Label,
    pub domain: ClassRef,
    pub range: ClassRef,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inverse_of: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct OntologyDraft {
    pub ontology_iri: Iri,
    /// Namespace bound to the empty prefix `:` in serializations.
    pub namespace: Iri,
    #[serde(with = "by_name")]
    classes: BTreeMap<String, DraftClass>,
    #[serde(with = "by_name")]
    properties: BTreeMap<String, DraftObjectProperty>,
    /// Entity name → labels of the questions it was drafted from.
    #[serde(default)]
    provenance: BTreeMap<String, BTreeSet<String>>,
}

trait Named {
    fn name(&self) -> &str;
}

impl Named for DraftClass {
    fn name(&self) -> &str {
        &self.name
    }
}

impl Named for DraftObjectProperty {
    fn name(&self) -> &str {
        &self.name
    }
}

/// Name-keyed maps travel as JSON arrays in name order.
mod by_name {
    use super::Named;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use std::collections::BTreeMap;

    pub fn serialize<S: Serializer, T: Serialize>(
        map: &BTreeMap<String, T>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        s.collect_seq(map.values())
    }

    pub fn deserialize<'de, D, T>(d: D) -> Result<BTreeMap<String, T>, D::Error>
    where
        D: Deserializer<'de>,
        T: Deserialize<'de> + Named,
    {
        let items = Vec::<T>::deserialize(d)?;
        let mut map = BTreeMap::new();
        for item in items {
            let name = item.name().to_owned();
            if map.insert(name.clone(), item).is_some() {
                return Err(serde::de::Error::custom(format!(
                    "duplicate entity `{name}`"
                )));
            }
        }
        Ok(map)
    }
}

impl OntologyDraft {
    pub fn new(ontology_iri: Iri, namespace: Iri) -> Self {
        OntologyDraft {
            ontology_iri,
            namespace,
            classes: BTreeMap::new(),
            properties: BTreeMap::new(),
            provenance: BTreeMap::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty() && self.properties.is_empty()
    }

    /// Classes in name order.
    pub fn classes(&self) -> impl ExactSizeIterator<Item = &DraftClass> {
        self.classes.values()
    }

    /// Properties in name order.
    pub fn properties(&self) -> impl ExactSizeIterator<Item = &DraftObjectProperty> {
        self.properties.values()
    }

    pub fn class(&self, name: &str) -> Option<&DraftClass> {
        self.classes.get(name)
    }

    pub fn property(&self, name: &str) -> Option<&DraftObjectProperty> {
        self.properties.get(name)
    }

    pub fn provenance(&self) -> &BTreeMap<String, BTreeSet<String>> {
        &self.provenance
    }

    pub fn sources_of(&self, entity: &str) -> impl Iterator<Item = &str> {
        self.provenance
            .get(entity)
            .into_iter()
            .flatten()
            .map(String::as_str)
    }

    /// All entity names, classes and properties together.
    pub fn entity_names(&self) -> BTreeSet<String> {
        self.classes
            .keys()
            .chain(self.properties.keys())
            .cloned()
            .collect()
    }

    pub fn class_names(&self) -> BTreeSet<String> {
        self.classes.keys().cloned().collect()
    }

    pub fn property_names(&self) -> BTreeSet<String> {
        self.properties.keys().cloned().collect()
    }

    pub fn iri_of(&self, name: &str) -> String {
        format!("{}{}", self.namespace.as_str(), name)
    }

    /// Adds a class unless one with the same name exists; the first label wins.
    pub fn add_class(&mut self, name: &str, label: Label) -> &mut DraftClass {
        self.classes
            .entry(name.to_owned())
            .or_insert_with(|| DraftClass {
                name: name.to_owned(),
                label,
                superclasses: BTreeSet::new(),
                restrictions: BTreeSet::new(),
            })
    }

    pub fn add_superclass(&mut self, class: &str, superclass: &str) {
        if class != superclass {
            if let Some(c) = self.classes.get_mut(class) {
                c.superclasses.insert(superclass.to_owned());
            }
        }
    }

    pub fn add_restriction(&mut self, class: &str, property: &str, filler: &str) {
        if let Some(c) = self.classes.get_mut(class) {
            c.restrictions.insert(Restriction {
                property: property.to_owned(),
                filler: filler.to_owned(),
            });
        }
    }

    /// Inserts a property verbatim. Callers keep inverse links symmetric.
    pub fn insert_property(&mut self, property: DraftObjectProperty) {
        self.properties.insert(property.name.clone(), property);
    }

    pub fn insert_class(&mut self, class: DraftClass) {
        self.classes.insert(class.name.clone(), class);
    }

    pub fn note_source(&mut self, entity: &str, source: &str) {
        self.provenance
            .entry(entity.to_owned())
            .or_default()
            .insert(source.to_owned());
    }

    /// Attributes every entity to `source`.
    pub fn attribute_all(&mut self, source: &str) {
        for name in self.entity_names() {
            self.note_source(&name, source);
        }
    }

    /// Structural invariants a well-formed draft satisfies. Returns one
    /// message per violation; an empty list means the draft is valid.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for c in self.classes.values() {
            if !c.name.starts_with(|ch: char| ch.is_uppercase()) || !is_local_part(&c.name) {
                out.push(format!(
                    "class name `{}` is not a capitalised local name",
                    c.name
                ));
            }
            if c.label.value.is_empty() {
                out.push(format!("class `{}` has an empty label", c.name));
            }
            for s in &c.superclasses {
                if s == &c.name {
                    out.push(format!("class `{}` is its own superclass", c.name));
                } else if !self.classes.contains_key(s) {
                    out.push(format!("superclass `{s}` of `{}` is not declared", c.name));
                }
            }
            for r in &c.restrictions {
                if !self.properties.contains_key(&r.property) {
                    out.push(format!(
                        "restriction property `{}` on `{}` is not declared",
                        r.property, c.name
                    ));
                }
                if !self.classes.contains_key(&r.filler) {
                    out.push(format!(
                        "restriction filler `{}` on `{}` is not declared",
                        r.filler, c.name
                    ));
                }
            }
        }
        for p in self.properties.values() {
            if !is_local_part(&p.name) || !p.name.starts_with(|ch: char| ch.is_lowercase()) {
                out.push(format!(
                    "property name `{}` is not a camelCase local name",
                    p.name
                ));
            }
            if p.label.value.is_empty() {
                out.push(format!("property `{}` has an empty label", p.name));
            }
            for end in [&p.domain, &p.range] {
                if let ClassRef::Named(n) = end {
                    if !self.classes.contains_key(n) {
                        out.push(format!(
                            "domain/range `{n}` of `{}` is not declared",
                            p.name
                        ));
                    }
                }
            }
            if let Some(inv) = &p.inverse_of {
                match self.properties.get(inv) {
                    None => out.push(format!("inverse `{inv}` of `{}` is not declared", p.name)),
                    Some(q) if q.inverse_of.as_deref() != Some(p.name.as_str()) => {
                        out.push(format!("inverse of `{}` is not symmetric", p.name))
                    }
                    Some(_) => {}
                }
            }
        }
        out
    }
}

fn is_local_part(name: &str) -> bool {
    !name.is_empty()
        && name.chars().all(|c| c.is_alphanumeric() || c == '_')
        && !name.starts_with(|c: char| c.is_ascii_digit())
}
