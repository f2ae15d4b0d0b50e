//! Grammar round-trip: printing a parsed expression and parsing it again
//! must reproduce the same element, across every operator family at
//! sizes up to four plus a set of handwritten expressions.

use lauricella_cli::parser::{format_operator, parse_operator, parse_operator_with, ParseOptions};
use lauricella_core::fc::{ell, ell_pair, ell_prime, s_ab_shift, s_op, t_op, t_pair, ParamSet};
use lauricella_core::weyl::WeylElement;

fn assert_round_trip(source: &str) {
    let p1 = parse_operator(source)
        .unwrap_or_else(|e| panic!("failed to parse {source:?}: {e}"));
    let printed = format_operator(&p1);
    let p2 = parse_operator(&printed)
        .unwrap_or_else(|e| panic!("failed to reparse {printed:?}: {e}"));
    assert_eq!(p1, p2, "round trip changed the element for {source:?}");
    // printing the reparsed element is a fixed point
    assert_eq!(format_operator(&p2), printed);
}

#[test]
fn operator_families_round_trip() {
    let mut corpus: Vec<WeylElement> = Vec::new();
    for m in 1..=4usize {
        let ps = ParamSet::symbolic(m);
        for i in 1..=m {
            corpus.push(ell(&ps, i).unwrap());
            corpus.push(ell_prime(&ps, i).unwrap());
            corpus.push(s_op(&ps, i).unwrap());
            corpus.push(t_op(&ps, i).unwrap());
            for j in i + 1..=m {
                corpus.push(ell_pair(&ps, i, j).unwrap());
                corpus.push(t_pair(&ps, i, j).unwrap());
            }
        }
        corpus.push(s_ab_shift(&ps, 0));
        corpus.push(s_ab_shift(&ps, -1));
    }
    assert!(corpus.len() >= 50, "corpus has only {}", corpus.len());
    for op in &corpus {
        let printed = format_operator(op);
        let p1 = parse_operator(&printed)
            .unwrap_or_else(|e| panic!("failed to parse {printed:?}: {e}"));
        // the inferred context may use a smaller variable count when the
        // top index cancels out of an operator (pair families), so the
        // stable statement is: print and parse again, exactly once more
        assert_eq!(format_operator(&p1), printed);
        let p2 = parse_operator(&format_operator(&p1)).unwrap();
        assert_eq!(p1, p2);
    }
}

#[test]
fn operator_families_round_trip_with_pinned_context() {
    for m in 1..=4usize {
        let ps = ParamSet::symbolic(m);
        let opts = ParseOptions {
            m: Some(m),
            ..ParseOptions::default()
        };
        for i in 1..=m {
            for op in [ell(&ps, i).unwrap(), t_op(&ps, i).unwrap(), s_op(&ps, i).unwrap()] {
                let printed = format_operator(&op);
                let back = parse_operator_with(&printed, &opts).unwrap();
                assert_eq!(back, op, "pinned parse changed {printed:?}");
            }
        }
    }
}

#[test]
fn handwritten_expressions_round_trip() {
    let sources = [
        "d1*x1",
        "x1*d1",
        "d1^2*x1^2",
        "x1^3*d2^2 - 1/2",
        "(a + b - 2*c3)*x1*d1",
        "-x1 + 2",
        "h^2",
        "h*x1*d1 - x2*d2*h",
        "y1*d1*(y1*d1 - c1 + 1) - (y1*d1 + y2*d2 - a)*(y1*d1 + y2*d2 - b)",
        "((x1))",
        "1/3",
        "2/4",
        "0",
        "x1*(x2*(d1 + d2))^2",
        "a*b*c1*c2",
        "x1*d1 + x2*d2 + x3*d3 + x4*d4",
        "-1/2*y1 + y2 - 3/7",
        "d3*d1*x1*x3",
    ];
    for s in sources {
        assert_round_trip(s);
    }
}
