use std::collections::BTreeSet;

use frodo_core::rdf::{
    namespace_of, parse_ntriples, parse_turtle, write_ntriples, write_turtle, Graph, Iri, Literal,
    Term, Triple,
};
use frodo_core::vocab::{rdfs, DUL_EVENT, FRED_NS};
use frodo_testkit::{fred_fixtures, random_fred_graph, reach};
use proptest::prelude::*;

fn fred(local: &str) -> Iri {
    Iri::new(format!("{FRED_NS}{local}")).unwrap()
}

fn fixture() -> Graph {
    let text = std::fs::read_to_string(
        fred_fixtures().join("who-commissioned-a-component-of-a-system.ttl"),
    )
    .unwrap();
    parse_turtle(&text).unwrap()
}

#[test]
fn fixture_triple_count_matches_ntriples_lines() {
    let nt = std::fs::read_to_string(
        fred_fixtures().join("who-commissioned-a-component-of-a-system.nt"),
    )
    .unwrap();
    let lines = nt
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .count();
    let g = fixture();
    assert_eq!(g.len(), lines);
    assert_eq!(g.len(), 8);
    assert_eq!(g.triple_set(), parse_ntriples(&nt).unwrap().triple_set());
}

#[test]
fn fixture_queries() {
    let g = fixture();
    assert_eq!(
        g.types_of(&Term::Iri(fred("commission_1"))),
        BTreeSet::from([fred("Commission")])
    );
    assert_eq!(
        g.subclass_closure(&fred("Commission")),
        BTreeSet::from([Iri::new(DUL_EVENT).unwrap()])
    );
    assert!(g.types_of(&Term::Iri(fred("nobody"))).is_empty());
    assert!(g.subclass_closure(&fred("System")).is_empty());
}

#[test]
fn closure_on_cycle_brute_force() {
    let g = parse_turtle(&format!(
        "@prefix rdfs: <{}> . @prefix : <http://e/> . :A rdfs:subClassOf :B . :B rdfs:subClassOf :C . :C rdfs:subClassOf :A .",
        rdfs::NS
    ))
    .unwrap();
    let a = Iri::new("http://e/A").unwrap();
    let expected: BTreeSet<Iri> = ["A", "B", "C"]
        .iter()
        .map(|x| Iri::new(format!("http://e/{x}")).unwrap())
        .collect();
    assert_eq!(g.subclass_closure(&a), expected);
    assert_eq!(reach(&g, &a), expected);
}

#[test]
fn namespace_rules() {
    assert_eq!(
        namespace_of(&fred("componentOf")).unwrap().as_str(),
        FRED_NS
    );
    assert_eq!(
        namespace_of(&Iri::new("http://e/a/b").unwrap())
            .unwrap()
            .as_str(),
        "http://e/a/"
    );
    assert!(namespace_of(&Iri::new("urn:x").unwrap()).is_err());
}

#[test]
fn trivial_documents() {
    assert_eq!(parse_turtle("").unwrap().len(), 0);
    assert_eq!(parse_ntriples("").unwrap().len(), 0);
    let g = parse_turtle("@prefix ex: <http://e/> . ex:a ex:p ex:b .").unwrap();
    assert_eq!(g.len(), 1);
    assert_eq!(g.prefixes().get("ex").map(Iri::as_str), Some("http://e/"));
    assert_eq!(
        parse_ntriples("<http://e/a> <http://e/p> \"x\" .\n")
            .unwrap()
            .len(),
        1
    );
}

#[test]
fn errors_carry_position() {
    let err = parse_turtle("@prefix ex: <http://e/> .\nex:a ex:p .").unwrap_err();
    assert_eq!(err.line, 2);
    let err = parse_ntriples("<http://e/a> <http://e/p> <http://e/b>\n").unwrap_err();
    assert_eq!(err.line, 1);
}

fn term_strategy() -> impl Strategy<Value = Term> {
    prop_oneof![
        (0..6u8).prop_map(|i| Term::Iri(Iri::new(format!("http://e/n{i}")).unwrap())),
        (0..3u8).prop_map(|i| Term::Blank(format!("b{i}"))),
        "[ -~\\n\\t\u{e9}\u{4e2d}]{0,12}".prop_map(|s| Term::Literal(Literal::simple(s))),
        (
            "[a-z]{0,6}",
            prop_oneof![Just("en"), Just("it"), Just("en-GB")]
        )
            .prop_map(|(s, l)| Term::Literal(Literal::lang_tagged(s, l))),
        (-1000i64..1000).prop_map(|n| Term::Literal(
            Literal::typed(
                n.to_string(),
                Iri::new("http://www.w3.org/2001/XMLSchema#integer").unwrap()
            )
            .unwrap()
        )),
    ]
}

fn graph_strategy() -> impl Strategy<Value = Graph> {
    let subject = prop_oneof![
        (0..6u8).prop_map(|i| Term::Iri(Iri::new(format!("http://e/n{i}")).unwrap())),
        (0..3u8).prop_map(|i| Term::Blank(format!("b{i}"))),
    ];
    let predicate = (0..4u8).prop_map(|i| Iri::new(format!("http://e/p{i}")).unwrap());
    proptest::collection::vec((subject, predicate, term_strategy()), 0..30).prop_map(|ts| {
        ts.into_iter()
            .map(|(s, p, o)| Triple::new(s, p, o).unwrap())
            .collect()
    })
}

proptest! {
    #[test]
    fn turtle_round_trip(g in graph_strategy()) {
        let back = parse_turtle(&write_turtle(&g)).unwrap();
        prop_assert_eq!(back.triple_set(), g.triple_set());
    }

    #[test]
    fn ntriples_round_trip(g in graph_strategy()) {
        let back = parse_ntriples(&write_ntriples(&g)).unwrap();
        prop_assert_eq!(back.triple_set(), g.triple_set());
    }

    #[test]
    fn fred_graph_round_trip(seed in any::<u64>()) {
        let g = random_fred_graph(seed, 50);
        prop_assert_eq!(parse_turtle(&write_turtle(&g)).unwrap().triple_set(), g.triple_set());
    }

    #[test]
    fn closure_matches_fixpoint_and_is_monotone(seed in any::<u64>(), a in 0..12usize, b in 0..12usize) {
        let g = random_fred_graph(seed, 50);
        let classes: Vec<Iri> = g.iter().filter_map(|t| t.object().as_iri().cloned()).chain(g.iter().filter_map(|t| t.subject().as_iri().cloned())).collect();
        prop_assume!(!classes.is_empty());
        let (x, y) = (&classes[a % classes.len()], &classes[b % classes.len()]);
        let bigger: Graph = g.iter().cloned()
            .chain([Triple::new(Term::Iri(x.clone()), Iri::new(rdfs::SUB_CLASS_OF).unwrap(), Term::Iri(y.clone())).unwrap()])
            .collect();
        for c in &classes {
            let before = g.subclass_closure(c);
            prop_assert_eq!(&before, &reach(&g, c));
            prop_assert!(before.is_subset(&bigger.subclass_closure(c)));
        }
    }

    #[test]
    fn types_of_is_brute_force(seed in any::<u64>()) {
        let g = random_fred_graph(seed, 50);
        let all_type_objects: BTreeSet<Iri> = g.with_predicate(frodo_core::vocab::rdf::TYPE).filter_map(|t| t.object().as_iri().cloned()).collect();
        for t in g.iter() {
            let node = t.subject();
            let brute: BTreeSet<Iri> = g.iter()
                .filter(|u| u.subject() == node && u.predicate().as_str() == frodo_core::vocab::rdf::TYPE)
                .filter_map(|u| u.object().as_iri().cloned())
                .collect();
            let got = g.types_of(node);
            prop_assert!(got.is_subset(&all_type_objects));
            prop_assert_eq!(got, brute);
        }
    }
}
