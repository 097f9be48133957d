use std::collections::BTreeSet;

use frodo_core::frames::{recognize, recognize_nary, recognize_periphrastic, RoleKind};
use frodo_core::rdf::{namespace_of, parse_turtle, Graph, Iri, Term};
use frodo_core::vocab::{ReaderVocabulary, DUL_EVENT, FRED_NS};
use frodo_testkit::{
    fred_fixtures, nary_oracle, periphrastic_oracle, random_fred_graph, reach, NaryEntry,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn vocab() -> ReaderVocabulary {
    ReaderVocabulary::default()
}

fn fred(local: &str) -> Iri {
    Iri::new(format!("{FRED_NS}{local}")).unwrap()
}

fn nary_as_set(g: &Graph) -> BTreeSet<NaryEntry> {
    recognize_nary(g, &vocab())
        .into_iter()
        .map(|f| {
            let args = f
                .arguments
                .into_iter()
                .map(|a| (a.role_predicate, a.node))
                .collect();
            (f.occurrence, f.frame_class, args)
        })
        .collect()
}

fn periphrastic_as_set(g: &Graph) -> BTreeSet<(Term, Iri, Term)> {
    recognize_periphrastic(g, &vocab())
        .into_iter()
        .map(|f| (f.subject, f.relation, f.object))
        .collect()
}

#[test]
fn running_example_frames() {
    let text = std::fs::read_to_string(
        fred_fixtures().join("who-commissioned-a-component-of-a-system.ttl"),
    )
    .unwrap();
    let g = parse_turtle(&text).unwrap();
    let r = recognize(&g, &vocab());
    assert_eq!(r.nary.len(), 1);
    let f = &r.nary[0];
    assert_eq!(f.occurrence, Term::Iri(fred("commission_1")));
    assert_eq!(f.frame_class, fred("Commission"));
    let kinds: BTreeSet<(RoleKind, Option<Iri>)> = f
        .arguments
        .iter()
        .map(|a| (a.role_kind, a.type_class.clone()))
        .collect();
    assert_eq!(
        kinds,
        BTreeSet::from([
            (RoleKind::Agentive, Some(fred("Person"))),
            (RoleKind::Passive, Some(fred("Component")))
        ])
    );
    assert_eq!(r.periphrastic.len(), 1);
    let p = &r.periphrastic[0];
    assert_eq!(p.relation, fred("componentOf"));
    assert_eq!(p.subject_class, Some(fred("Component")));
    assert_eq!(p.object_class, Some(fred("System")));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn nary_matches_oracle(seed in any::<u64>()) {
        let g = random_fred_graph(seed, 50);
        prop_assert_eq!(nary_as_set(&g), nary_oracle(&g));
    }

    #[test]
    fn periphrastic_matches_oracle(seed in any::<u64>()) {
        let g = random_fred_graph(seed, 50);
        prop_assert_eq!(periphrastic_as_set(&g), periphrastic_oracle(&g));
    }

    #[test]
    fn soundness(seed in any::<u64>()) {
        let g = random_fred_graph(seed, 50);
        let event = Iri::new(DUL_EVENT).unwrap();
        let r = recognize(&g, &vocab());
        for f in &r.nary {
            prop_assert!(f.frame_class == event || reach(&g, &f.frame_class).contains(&event));
            for a in &f.arguments {
                if let Some(t) = &a.type_class {
                    prop_assert!(g.types_of(&a.node).contains(t));
                }
            }
        }
        let consumed: BTreeSet<(&Term, &Iri, &Term)> = r.nary.iter()
            .flat_map(|f| f.arguments.iter().map(move |a| (&f.occurrence, &a.role_predicate, &a.node)))
            .collect();
        for p in &r.periphrastic {
            prop_assert_eq!(namespace_of(&p.relation).unwrap(), vocab().local_ns);
            prop_assert!(!consumed.contains(&(&p.subject, &p.relation, &p.object)));
        }
    }

    #[test]
    fn order_independent(seed in any::<u64>(), shuffle in any::<u64>()) {
        let g = random_fred_graph(seed, 50);
        let mut triples: Vec<_> = g.iter().cloned().collect();
        triples.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(shuffle));
        let h: Graph = triples.into_iter().collect();
        prop_assert_eq!(recognize(&g, &vocab()), recognize(&h, &vocab()));
    }
}
