use std::collections::BTreeSet;
use std::fmt;

use log::warn;
use serde::{Serialize, Serializer};

use super::{ClassRef, DraftObjectProperty, Label, OntologyDraft};
use crate::frames::{recognize, Argument, NaryFrame, PeriphrasticFrame, RoleKind};
use crate::naming::{
    class_label, class_name, gerund_class_name, involved_in_property, involves_property,
    periphrastic_inverse, periphrastic_property, property_label,
};
use crate::rdf::{Graph, Iri, Term};
use crate::source::CompetencyQuestion;
use crate::vocab::ReaderVocabulary;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum DraftWarning {
    UntypedArgument {
        occurrence: String,
        role: String,
    },
    NoTypedArguments {
        occurrence: String,
    },
    MissingSubjectClass {
        relation: String,
    },
    MissingObjectClass {
        relation: String,
    },
    /// An oblique time role modelled with the uniform `involves` rule.
    TemporalRole {
        occurrence: String,
        class: String,
    },
    NameCollision {
        entity: String,
        detail: String,
    },
    NoFrames,
}

impl fmt::Display for DraftWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DraftWarning::UntypedArgument { occurrence, role } => {
                write!(f, "argument of {occurrence} via <{role}> has no type and was skipped")
            }
            DraftWarning::NoTypedArguments { occurrence } => {
                write!(f, "frame occurrence {occurrence} has no typed arguments")
            }
            DraftWarning::MissingSubjectClass { relation } => {
                write!(f, "subject of periphrastic relation <{relation}> has no type; skipped")
            }
            DraftWarning::MissingObjectClass { relation } => {
                write!(f, "object of periphrastic relation <{relation}> has no type; skipped")
            }
            DraftWarning::TemporalRole { occurrence, class } => write!(
                f,
                "time role of {occurrence} drafted as involves{class}; consider dedicated temporal modelling"
            ),
            DraftWarning::NameCollision { entity, detail } => write!(f, "name collision on `{entity}`: {detail}"),
            DraftWarning::NoFrames => f.write_str("no frames recognized in the machine-reader graph"),
        }
    }
}

impl Serialize for DraftWarning {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DraftOutcome {
    pub draft: OntologyDraft,
    pub warnings: Vec<DraftWarning>,
}

#[derive(Debug, Clone, Default)]
pub struct DraftSettings {
    pub vocabulary: ReaderVocabulary,
    /// Overrides the per-question default namespace.
    pub namespace: Option<Iri>,
}

/// `https://w3id.org/frodo/draft/<slug>#`
pub fn default_namespace(cq: &CompetencyQuestion) -> Iri {
    let mut s = cq.slug();
    if s.is_empty() {
        s = "draft".into();
    }
    Iri::new(format!("https://w3id.org/frodo/draft/{s}#")).expect("slug is IRI-safe")
}

/// Ontology IRI for a namespace: the namespace without its trailing `#`.
pub(crate) fn ontology_iri_for(namespace: &Iri) -> Iri {
    let s = namespace.as_str();
    let trimmed = s.strip_suffix('#').unwrap_or(s);
    Iri::new(trimmed).unwrap_or_else(|_| namespace.clone())
}

fn node_name(t: &Term) -> String {
    match t {
        Term::Iri(i) => i.local_name().to_owned(),
        other => other.to_string(),
    }
}

/// Creates `involves{C}` and `is{C}InvolvedIn` for class `c`.
fn add_involves_pair(d: &mut OntologyDraft, c: &str) -> String {
    let fwd = involves_property(c);
    let inv = involved_in_property(c);
    if d.property(&fwd).is_none() && d.property(&inv).is_none() {
        d.insert_property(DraftObjectProperty {
            name: fwd.clone(),
            label: Label::plain(property_label(&fwd)),
            domain: ClassRef::Thing,
            range: ClassRef::Named(c.to_owned()),
            inverse_of: Some(inv.clone()),
        });
        d.insert_property(DraftObjectProperty {
            name: inv.clone(),
            label: Label::plain(property_label(&inv)),
            domain: ClassRef::Named(c.to_owned()),
            range: ClassRef::Thing,
            inverse_of: Some(fwd.clone()),
        });
    }
    fwd
}

/// Drafts the module for one n-ary frame occurrence.
///
/// Compound classes are named after typed Passive arguments, falling back
/// to Thematic ones; with neither, the gerund frame class carries the
/// restrictions itself. Every typed argument, whatever its role, yields a
/// class, an `involves` property pair and a restriction.
pub fn draft_from_nary(frame: &NaryFrame, namespace: &Iri) -> DraftOutcome {
    let mut d = OntologyDraft::new(ontology_iri_for(namespace), namespace.clone());
    let mut warnings = Vec::new();
    let occurrence = node_name(&frame.occurrence);

    let gerund = gerund_class_name(&frame.frame_class);
    d.add_class(&gerund, Label::english(class_label(&gerund)));

    let mut typed: Vec<(&Argument, String)> = Vec::new();
    for arg in &frame.arguments {
        match &arg.type_class {
            Some(t) => typed.push((arg, class_name(t))),
            None => warnings.push(DraftWarning::UntypedArgument {
                occurrence: occurrence.clone(),
                role: arg.role_predicate.as_str().to_owned(),
            }),
        }
    }
    if typed.is_empty() {
        warnings.push(DraftWarning::NoTypedArguments { occurrence });
        return DraftOutcome { draft: d, warnings };
    }

    let naming_roles = [RoleKind::Passive, RoleKind::Thematic];
    let heads: BTreeSet<&str> = naming_roles
        .iter()
        .map(|kind| {
            typed
                .iter()
                .filter(|(a, _)| a.role_kind == *kind)
                .map(|(_, c)| c.as_str())
                .collect::<BTreeSet<_>>()
        })
        .find(|set| !set.is_empty())
        .unwrap_or_default();

    let mut nary_classes = Vec::new();
    for head in &heads {
        let compound = format!("{head}{gerund}");
        d.add_class(&compound, Label::english(class_label(&compound)));
        d.add_superclass(&compound, &gerund);
        nary_classes.push(compound);
    }
    if nary_classes.is_empty() {
        nary_classes.push(gerund.clone());
    }

    for (arg, c) in &typed {
        d.add_class(c, Label::plain(class_label(c)));
        let prop = add_involves_pair(&mut d, c);
        for n in &nary_classes {
            d.add_restriction(n, &prop, c);
        }
        if arg.role_kind == RoleKind::Oblique
            && arg
                .role_predicate
                .local_name()
                .to_ascii_lowercase()
                .starts_with("time")
        {
            warnings.push(DraftWarning::TemporalRole {
                occurrence: occurrence.clone(),
                class: c.clone(),
            });
        }
    }
    DraftOutcome { draft: d, warnings }
}

/// Drafts the module for one periphrastic relation: `S′ ⊑ ∃{relation}{O}.O′`.
pub fn draft_from_periphrastic(frame: &PeriphrasticFrame, namespace: &Iri) -> DraftOutcome {
    let mut d = OntologyDraft::new(ontology_iri_for(namespace), namespace.clone());
    let relation = frame.relation.as_str().to_owned();
    let (s, o) = match (&frame.subject_class, &frame.object_class) {
        (Some(s), Some(o)) => (class_name(s), class_name(o)),
        (None, _) => {
            return DraftOutcome {
                draft: d,
                warnings: vec![DraftWarning::MissingSubjectClass { relation }],
            }
        }
        (_, None) => {
            return DraftOutcome {
                draft: d,
                warnings: vec![DraftWarning::MissingObjectClass { relation }],
            }
        }
    };
    let prop = periphrastic_property(&frame.relation, &o);
    let inv = periphrastic_inverse(&prop);
    d.add_class(&s, Label::plain(class_label(&s)));
    d.add_class(&o, Label::english(class_label(&o)));
    d.insert_property(DraftObjectProperty {
        name: prop.clone(),
        label: Label::plain(property_label(&prop)),
        domain: ClassRef::Thing,
        range: ClassRef::Named(o.clone()),
        inverse_of: Some(inv.clone()),
    });
    d.insert_property(DraftObjectProperty {
        name: inv.clone(),
        label: Label::plain(property_label(&inv)),
        domain: ClassRef::Named(o.clone()),
        range: ClassRef::Thing,
        inverse_of: Some(prop.clone()),
    });
    d.add_restriction(&s, &prop, &o);
    DraftOutcome {
        draft: d,
        warnings: Vec::new(),
    }
}

/// Recognises every frame in `g` and unifies the per-frame drafts by name.
/// Collisions inside one question keep the first definition and warn.
pub fn draft_cq(cq: &CompetencyQuestion, g: &Graph, settings: &DraftSettings) -> DraftOutcome {
    let namespace = settings
        .namespace
        .clone()
        .unwrap_or_else(|| default_namespace(cq));
    let mut draft = OntologyDraft::new(ontology_iri_for(&namespace), namespace.clone());
    let mut warnings = Vec::new();

    let recognition = recognize(g, &settings.vocabulary);
    if recognition.is_empty() {
        warnings.push(DraftWarning::NoFrames);
    }
    let parts = recognition
        .nary
        .iter()
        .map(|f| draft_from_nary(f, &namespace))
        .chain(
            recognition
                .periphrastic
                .iter()
                .map(|f| draft_from_periphrastic(f, &namespace)),
        );
    for part in parts {
        warnings.extend(part.warnings);
        for conflict in draft.absorb(&part.draft) {
            warnings.push(DraftWarning::NameCollision {
                entity: conflict.entity.clone(),
                detail: conflict.to_string(),
            });
        }
    }
    draft.attribute_all(&cq.label());
    for w in &warnings {
        warn!("{}: {w}", cq.label());
    }
    DraftOutcome { draft, warnings }
}
