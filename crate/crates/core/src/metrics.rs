//! Structural ontology metrics over OWL-in-Turtle graphs or drafts.
//!
//! Counting follows the usual OWL API conventions: declarations,
//! annotation assertions and logical axioms are disjoint and together make
//! up the axiom total. A restriction is part of the `rdfs:subClassOf` axiom
//! that uses it, so it adds one subclass axiom and nothing else.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::draft::OntologyDraft;
use crate::rdf::{Graph, Iri, Term};
use crate::vocab::{owl, rdf, rdfs};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub classes: usize,
    pub object_properties: usize,
    pub datatype_properties: usize,
    pub annotation_properties: usize,
    /// Object properties taking part in an `owl:inverseOf` statement.
    pub inverse_object_properties: usize,
    pub inverse_functional_datatype_properties: usize,
    /// Distinct unordered `owl:inverseOf` pairs.
    pub inverse_of_axioms: usize,
    pub subclass_of_axioms: usize,
    /// Subclass axioms whose superclass is a named class other than `owl:Thing`.
    pub named_subclass_of_axioms: usize,
    pub existential_restrictions: usize,
    pub object_property_domain_axioms: usize,
    pub object_property_range_axioms: usize,
    pub labels: usize,
    pub annotation_assertions: usize,
    pub declarations: usize,
    /// Logical axioms not counted by any field above.
    pub other_logical_axioms: usize,
}

impl Census {
    pub fn logical_axioms(&self) -> usize {
        self.subclass_of_axioms
            + self.object_property_domain_axioms
            + self.object_property_range_axioms
            + self.inverse_of_axioms
            + self.other_logical_axioms
    }

    pub fn axioms(&self) -> usize {
        self.logical_axioms() + self.annotation_assertions + self.declarations
    }
}

const BUILTIN_ANNOTATIONS: &[&str] = &[
    rdfs::LABEL,
    rdfs::COMMENT,
    rdfs::SEE_ALSO,
    rdfs::IS_DEFINED_BY,
    owl::VERSION_INFO,
];

const CHARACTERISTICS: &[&str] = &[
    owl::FUNCTIONAL_PROPERTY,
    owl::INVERSE_FUNCTIONAL_PROPERTY,
    owl::TRANSITIVE_PROPERTY,
    owl::SYMMETRIC_PROPERTY,
    "http://www.w3.org/2002/07/owl#AsymmetricProperty",
    "http://www.w3.org/2002/07/owl#ReflexiveProperty",
    "http://www.w3.org/2002/07/owl#IrreflexiveProperty",
];

const OTHER_LOGICAL_PREDICATES: &[&str] = &[
    owl::EQUIVALENT_CLASS,
    owl::DISJOINT_WITH,
    owl::EQUIVALENT_PROPERTY,
    rdfs::SUB_PROPERTY_OF,
];

fn typed_as(g: &Graph, class: &str) -> BTreeSet<Iri> {
    g.with_predicate(rdf::TYPE)
        .filter(|t| t.object().as_iri().is_some_and(|o| o.as_str() == class))
        .filter_map(|t| t.subject().as_iri().cloned())
        .collect()
}

/// Raw counts of an OWL-in-Turtle graph.
pub fn census(g: &Graph) -> Census {
    let mut classes = typed_as(g, owl::CLASS);
    classes.retain(|c| c.as_str() != owl::THING);
    let object_properties = typed_as(g, owl::OBJECT_PROPERTY);
    let datatype_properties = typed_as(g, owl::DATATYPE_PROPERTY);
    let annotation_properties = typed_as(g, owl::ANNOTATION_PROPERTY);
    let individuals = typed_as(g, owl::NAMED_INDIVIDUAL);
    let ontologies: BTreeSet<Term> = typed_as(g, owl::ONTOLOGY)
        .into_iter()
        .map(Term::Iri)
        .collect();
    let inverse_functional = typed_as(g, owl::INVERSE_FUNCTIONAL_PROPERTY);

    let mut inverse_members = BTreeSet::new();
    let mut inverse_pairs = BTreeSet::new();
    for t in g.with_predicate(owl::INVERSE_OF) {
        if let (Some(p), Some(q)) = (t.subject().as_iri(), t.object().as_iri()) {
            inverse_members.insert(p.clone());
            inverse_members.insert(q.clone());
            inverse_pairs.insert(if p <= q { (p, q) } else { (q, p) });
        }
    }

    let mut subclass_of_axioms = 0;
    let mut named_subclass_of_axioms = 0;
    for t in g.with_predicate(rdfs::SUB_CLASS_OF) {
        subclass_of_axioms += 1;
        if t.object()
            .as_iri()
            .is_some_and(|o| o.as_str() != owl::THING)
        {
            named_subclass_of_axioms += 1;
        }
    }

    let existential_restrictions = g
        .with_predicate(rdf::TYPE)
        .filter(|t| {
            t.object()
                .as_iri()
                .is_some_and(|o| o.as_str() == owl::RESTRICTION)
        })
        .filter(|t| {
            g.objects(t.subject(), owl::SOME_VALUES_FROM)
                .next()
                .is_some()
        })
        .count();

    let on = |pred: &'static str, props: &BTreeSet<Iri>| {
        g.with_predicate(pred)
            .filter(|t| t.subject().as_iri().is_some_and(|s| props.contains(s)))
            .count()
    };

    let annotation_predicates: BTreeSet<&str> = BUILTIN_ANNOTATIONS
        .iter()
        .copied()
        .chain(annotation_properties.iter().map(Iri::as_str))
        .collect();
    let mut labels = 0;
    let mut annotation_assertions = 0;
    for t in g.iter() {
        if !annotation_predicates.contains(t.predicate().as_str())
            || ontologies.contains(t.subject())
        {
            continue;
        }
        annotation_assertions += 1;
        if t.predicate().as_str() == rdfs::LABEL {
            labels += 1;
        }
    }

    let declarations = classes.len()
        + object_properties.len()
        + datatype_properties.len()
        + annotation_properties.len()
        + individuals.len();

    let characteristics: usize = CHARACTERISTICS.iter().map(|c| typed_as(g, c).len()).sum();
    let other_predicates: usize = OTHER_LOGICAL_PREDICATES
        .iter()
        .map(|p| g.with_predicate(p).count())
        .sum();
    let declared: BTreeSet<&Iri> = classes
        .iter()
        .chain(&object_properties)
        .chain(&datatype_properties)
        .chain(&annotation_properties)
        .collect();
    let class_assertions = g
        .with_predicate(rdf::TYPE)
        .filter(|t| t.object().as_iri().is_some_and(|c| classes.contains(c)))
        .filter(|t| t.subject().as_iri().is_some_and(|s| !declared.contains(s)))
        .count();
    let other_logical_axioms = characteristics
        + other_predicates
        + class_assertions
        + on(rdfs::DOMAIN, &datatype_properties)
        + on(rdfs::RANGE, &datatype_properties);

    Census {
        classes: classes.len(),
        object_properties: object_properties.len(),
        datatype_properties: datatype_properties.len(),
        annotation_properties: annotation_properties.len(),
        inverse_object_properties: object_properties.intersection(&inverse_members).count(),
        inverse_functional_datatype_properties: datatype_properties
            .intersection(&inverse_functional)
            .count(),
        inverse_of_axioms: inverse_pairs.len(),
        subclass_of_axioms,
        named_subclass_of_axioms,
        existential_restrictions,
        object_property_domain_axioms: on(rdfs::DOMAIN, &object_properties),
        object_property_range_axioms: on(rdfs::RANGE, &object_properties),
        labels,
        annotation_assertions,
        declarations,
        other_logical_axioms,
    }
}

/// The same counts read straight off a draft, without serializing it.
pub fn draft_census(d: &OntologyDraft) -> Census {
    let mut inverse_members = BTreeSet::new();
    let mut inverse_pairs = BTreeSet::new();
    for p in d.properties() {
        if let Some(q) = &p.inverse_of {
            inverse_members.insert(p.name.as_str());
            inverse_members.insert(q.as_str());
            let pair = if p.name.as_str() <= q.as_str() {
                (p.name.as_str(), q.as_str())
            } else {
                (q.as_str(), p.name.as_str())
            };
            inverse_pairs.insert(pair);
        }
    }
    let named: usize = d.classes().map(|c| c.superclasses.len()).sum();
    let restrictions: usize = d.classes().map(|c| c.restrictions.len()).sum();
    let entities = d.classes().len() + d.properties().len();
    Census {
        classes: d.classes().len(),
        object_properties: d.properties().len(),
        inverse_object_properties: d
            .properties()
            .filter(|p| inverse_members.contains(p.name.as_str()))
            .count(),
        inverse_of_axioms: inverse_pairs.len(),
        subclass_of_axioms: named + restrictions,
        named_subclass_of_axioms: named,
        existential_restrictions: restrictions,
        object_property_domain_axioms: d.properties().len(),
        object_property_range_axioms: d.properties().len(),
        labels: entities,
        annotation_assertions: entities,
        declarations: entities,
        ..Census::default()
    }
}

/// Table of structural metrics. Ratios are `None` where their denominator
/// is zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MetricsReport {
    pub annotation_assertions: usize,
    pub axioms: usize,
    pub classes: usize,
    pub datatype_properties: usize,
    pub inverse_object_properties: usize,
    pub logical_axioms: usize,
    pub object_properties: usize,
    pub obj_prop_domain_axioms: usize,
    pub obj_prop_range_axioms: usize,
    pub subclassof_axioms: usize,
    pub axiom_class_ratio: Option<f64>,
    pub class_property_ratio: Option<f64>,
    pub inverse_relations_ratio: Option<f64>,
    pub inheritance_richness: Option<f64>,
    pub relationship_richness: Option<f64>,
}

fn ratio(num: usize, den: usize) -> Option<f64> {
    (den > 0).then(|| num as f64 / den as f64)
}

impl MetricsReport {
    pub fn from_census(c: &Census) -> Self {
        let properties = c.object_properties + c.datatype_properties;
        let inheritance = c.named_subclass_of_axioms;
        MetricsReport {
            annotation_assertions: c.annotation_assertions,
            axioms: c.axioms(),
            classes: c.classes,
            datatype_properties: c.datatype_properties,
            inverse_object_properties: c.inverse_object_properties,
            logical_axioms: c.logical_axioms(),
            object_properties: c.object_properties,
            obj_prop_domain_axioms: c.object_property_domain_axioms,
            obj_prop_range_axioms: c.object_property_range_axioms,
            subclassof_axioms: c.subclass_of_axioms,
            axiom_class_ratio: ratio(c.axioms(), c.classes),
            class_property_ratio: ratio(c.classes, properties),
            inverse_relations_ratio: ratio(
                c.inverse_object_properties + c.inverse_functional_datatype_properties,
                properties,
            ),
            inheritance_richness: ratio(inheritance, c.classes),
            relationship_richness: ratio(properties, properties + inheritance),
        }
    }
}

pub fn compute_metrics(g: &Graph) -> MetricsReport {
    MetricsReport::from_census(&census(g))
}

pub fn draft_metrics(d: &OntologyDraft) -> MetricsReport {
    MetricsReport::from_census(&draft_census(d))
}

pub const CSV_COLUMNS: [&str; 16] = [
    "ontology",
    "annotation_assertions",
    "axioms",
    "classes",
    "datatype_properties",
    "inverse_object_properties",
    "logical_axioms",
    "object_properties",
    "obj_prop_domain_axioms",
    "obj_prop_range_axioms",
    "subclassof_axioms",
    "axiom_class_ratio",
    "class_property_ratio",
    "inverse_relations_ratio",
    "inheritance_richness",
    "relationship_richness",
];

fn cell(v: Option<f64>) -> String {
    v.map(|x| format!("{x:.4}")).unwrap_or_default()
}

/// One header row and one row per report. Ratios carry four decimals;
/// undefined ratios are empty cells.
pub fn report_csv(reports: &[(String, MetricsReport)]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_COLUMNS).expect("in-memory write");
    for (label, r) in reports {
        let counts = [
            r.annotation_assertions,
            r.axioms,
            r.classes,
            r.datatype_properties,
            r.inverse_object_properties,
            r.logical_axioms,
            r.object_properties,
            r.obj_prop_domain_axioms,
            r.obj_prop_range_axioms,
            r.subclassof_axioms,
        ];
        let ratios = [
            r.axiom_class_ratio,
            r.class_property_ratio,
            r.inverse_relations_ratio,
            r.inheritance_richness,
            r.relationship_richness,
        ];
        let row: Vec<String> = std::iter::once(label.clone())
            .chain(counts.iter().map(usize::to_string))
            .chain(ratios.into_iter().map(cell))
            .collect();
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
}
