mod common;

use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sqsym::fundamental::{f_product, FExpr};
use sqsym::io::{parse_document, render_document, render_expr, render_fexpr, render_graph, render_tpoly, Document, Format};
use sqsym::poset::{Labeling, SignedPoset};
use sqsym::sqsym::TPoly;
use sqsym::{Error, Limits};

fn parse(text: &str) -> Document {
    parse_document(text, &Limits::default()).unwrap()
}

fn parse_err(text: &str) -> String {
    parse_document(text, &Limits::default()).unwrap_err().to_string()
}

proptest! {
    #[test]
    fn expressions_round_trip(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = random_expr(&mut rng, 3);
        prop_assert_eq!(parse(&render_expr(&e, Format::Json)), Document::Expression(e));
    }

    #[test]
    fn t_polynomials_round_trip(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut x = TPoly::zero();
        for t in 0..3 {
            x.add_at(t, &random_expr(&mut rng, 2));
        }
        prop_assert_eq!(parse(&render_tpoly(&x, Format::Json)), Document::TPoly(x));
    }

    #[test]
    fn graphs_round_trip(d in 1usize..=4, seed: u64) {
        let g = seeded_directed_graph(d, seed);
        let doc = parse(&render_graph(&g));
        // Without edges there are no incidence signs to mark it directed.
        let expected = if g.edges().is_empty() {
            Document::Graph(g.underlying())
        } else {
            Document::DirectedGraph(g.clone())
        };
        prop_assert_eq!(&doc, &expected);
        let under = Document::Graph(g.underlying());
        prop_assert_eq!(parse(&render_document(&under, Format::Json)), under);
    }
}

#[test]
fn fundamental_expressions_round_trip() {
    let product = f_product(&fi(&[1], "-+"), &fi(&[0], "++")).unwrap().to_fexpr();
    assert_eq!(parse(&render_fexpr(&product, Format::Json)), Document::FExpression(product.clone()));
    assert_eq!(render_fexpr(&FExpr::new(), Format::Text), "0");
    let single = parse("F[d=2; S={1}; eps=-+]");
    let Document::FExpression(e) = single else { panic!("not an F expression") };
    assert_eq!(e.len(), 1);
    assert!(e.contains_key(&fi(&[1], "-+")));
}

#[test]
fn graph_kind_follows_incidence_signs() {
    let undirected = parse(r#"{"d":2,"edges":[{"u":1,"v":2,"sign":"+"}]}"#);
    assert_eq!(undirected.kind(), "graph");
    let directed = parse(r#"{"d":2,"edges":[{"u":1,"v":2,"sign":"+","tau_u":"-","tau_v":"+"}]}"#);
    assert_eq!(directed.kind(), "directed-graph");
    let err = parse_err(
        r#"{"d":2,"edges":[{"u":1,"v":2,"sign":"+","tau_u":"-","tau_v":"+"},{"u":1,"v":1,"sign":"-"}]}"#,
    );
    assert!(err.contains("edge 1"), "{err}");
}

#[test]
fn malformed_documents_are_explained() {
    assert!(parse_err("[1,2]").contains("JSON object"));
    assert!(parse_err(r#"{"d":1}"#).contains("unrecognised document"));
    assert!(parse_err(r#"{"d":2,"edges":[{"u":1,"v":2,"sign":"x"}]}"#).contains("expected \"+\" or \"-\""));
    assert!(parse_err(r#"{"d":2,"edges":[],"extra":1}"#).contains("unknown field"));
    assert!(parse_err(r#"{"terms":[{"k":0,"lam":[[1,0]],"coef":"1/0x"}]}"#).contains("not a rational"));
    assert!(parse_err(r#"{"terms":[{"F":{"d":2,"S":[1],"eps":"+"},"coef":"1"}]}"#).contains("eps has 1 signs"));
    let err = parse_document(r#"{"d":2,"edges":[{"u":1,"v":2,"sign":"+","tau_u":"+","tau_v":"+"}]}"#, &Limits::default());
    assert!(matches!(err, Err(Error::InvalidGraph(_))));
}

#[test]
fn poset_documents() {
    let lim = Limits::default();
    let Document::Poset { poset, labeling } = parse(r#"{"d":2,"covers":[[1,2]]}"#) else { panic!("not a poset") };
    assert_eq!(labeling, Labeling::dual_natural(&poset, &lim).unwrap());

    let Document::Poset { labeling, .. } = parse(r#"{"d":2,"covers":[[1,2]],"labeling":[2,1]}"#) else {
        panic!("not a poset")
    };
    assert_eq!(labeling.values(), &[2, 1]);

    let Document::Poset { poset, labeling } = parse(r#"{"d":2,"covers":[[1,2]],"strict":[[1,2]]}"#) else {
        panic!("not a poset")
    };
    assert!(labeling.at(1) > labeling.at(2));
    assert_eq!(poset, SignedPoset::new(2, &[(1, 2)]).unwrap());

    assert!(parse_err(r#"{"d":2,"covers":[[1,2]],"labeling":[1]}"#).contains("labeling has 1 values"));
    assert!(parse_err(r#"{"d":1,"covers":[[1,-1],[-1,1]]}"#).contains("poset"));
}

#[test]
fn text_and_json_agree_on_the_example() {
    let x = example2_expected();
    let Document::TPoly(back) = parse(&render_tpoly(&x, Format::Json)) else { panic!("not a t-polynomial") };
    assert_eq!(back.to_string(), x.to_string());
}
