// SPDX-License-Identifier: Apache-2.0

mod common;

use common::{bits, eval_reference, fixture, random_circuit};
use maskedhls::codegen::emit_source;
use maskedhls::frontend::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn parse_err(src: &str) -> ParseError {
    parse_masked_c(src).expect_err("input should be rejected")
}

#[test]
fn domand_parses_to_expected_graph() {
    let g = parse_masked_c(&fixture("domand_balanced.c")).unwrap();
    assert_eq!(g.name, "domand");
    assert_eq!(g.input_names(), ["a0", "a1", "b0", "b1", "z"]);
    assert_eq!(g.output_names(), ["y0", "y1"]);
    assert_eq!(g.count_kind(NodeKind::And), 4);
    assert_eq!(g.count_kind(NodeKind::Xor), 4);
    assert_eq!(g.annotated_count(), 4);
    assert!(validate_dfg(&g).is_empty());
    let registered: Vec<String> = g
        .nodes
        .iter()
        .filter(|n| n.annotated)
        .map(|n| g.label(n.id))
        .collect();
    assert_eq!(registered, ["i1", "i2", "p1", "p4"]);
}

#[test]
fn function_matches_its_definition() {
    let g = parse_masked_c(&fixture("domand.c")).unwrap();
    for x in 0..32u64 {
        let v = bits(x, 5);
        let (a0, a1, b0, b1, z) = (v[0], v[1], v[2], v[3], v[4]);
        let y0 = (a0 & b1 ^ z) ^ (a0 & b0);
        let y1 = (a1 & b0 ^ z) ^ (a1 & b1);
        assert_eq!(eval_reference(&g, &v), vec![y0, y1]);
    }
}

#[test]
fn errors_carry_positions() {
    match parse_err("int f(bool a, bool *y)\n{\n  *y = a $ a;\n  return 0;\n}\n") {
        ParseError::Syntax { line, col, .. } => assert_eq!((line, col), (3, 10)),
        e => panic!("{e:?}"),
    }
    match parse_err("int f(bool a, bool *y)\n{\n  *y = a ^ q;\n  return 0;\n}\n") {
        ParseError::UndefinedWire { line, name, .. } => assert_eq!((line, name.as_str()), (3, "q")),
        e => panic!("{e:?}"),
    }
    match parse_err("int f(bool a, bool *y)\n{\n  t = a;\n  t = ~a;\n  *y = t;\n  return 0;\n}\n") {
        ParseError::MultipleAssignment { line, name, .. } => {
            assert_eq!((line, name.as_str()), (4, "t"))
        }
        e => panic!("{e:?}"),
    }
    assert_eq!(
        parse_err("int f(bool a, bool *y, bool *z)\n{\n  *y = a;\n  return 0;\n}\n"),
        ParseError::OutputNeverAssigned { name: "z".into() }
    );
    assert!(matches!(
        parse_err("int f(bool a, bool *y) { *y = reg(reg(~a)); return 0; }"),
        ParseError::NestedReg { .. }
    ));
}

#[test]
fn control_flow_and_arrays_are_unsupported() {
    let cases = [
        "int f(bool a, bool *y) { if (a) { *y = a; } return 0; }",
        "int f(bool a, bool *y) { for (;;) { } *y = a; return 0; }",
        "int f(bool a, bool *y) { while (a) { } *y = a; return 0; }",
        "int f(bool a[2], bool *y) { *y = a; return 0; }",
        "int f(bool a, bool *y) { *y = a | a; return 0; }",
        "int f(bool a, bool *y) { *y = g(a); return 0; }",
    ];
    for src in cases {
        assert!(
            matches!(parse_err(src), ParseError::Unsupported { .. }),
            "accepted or misreported: {src}"
        );
    }
}

#[test]
fn validation_reports_structural_faults() {
    let mut g = Dfg::new("bad");
    let a = g.add_input("a");
    let x = g.add_op(NodeKind::And, &[a, a], false);
    let y = g.add_op(NodeKind::Xor, &[x, a], false);
    g.nodes[x].args[1] = y;
    g.add_output("o", y, 0);
    let kinds: Vec<DiagnosticKind> = validate_dfg(&g).iter().map(|d| d.kind).collect();
    assert!(kinds.contains(&DiagnosticKind::Cycle));

    let mut g = Dfg::new("dead");
    let a = g.add_input("a");
    g.add_op(NodeKind::Not, &[a], false);
    g.add_output("o", a, 0);
    let kinds: Vec<DiagnosticKind> = validate_dfg(&g).iter().map(|d| d.kind).collect();
    assert_eq!(kinds, [DiagnosticKind::DeadCode]);
}

#[test]
fn json_round_trip_preserves_everything() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let g = random_circuit(&mut rng, 40, true);
        let back = parse_json_netlist(&dfg_to_json(&g)).unwrap();
        assert_eq!(back.canonical_form(true), g.canonical_form(true));
        assert_eq!(back.input_names(), g.input_names());
        assert_eq!(back.output_names(), g.output_names());
    }
    assert!(matches!(parse_json_netlist("{"), Err(ParseError::Json(_))));
}

#[test]
fn emitted_source_parses_back_to_the_same_circuit() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..200 {
        let g = random_circuit(&mut rng, 40, true);
        let text = emit_source(&g);
        let back = parse_masked_c(&text).unwrap_or_else(|e| panic!("{e}\n{text}"));
        let n = g.inputs.len();
        for x in 0..1u64 << n {
            assert_eq!(
                eval_reference(&back, &bits(x, n)),
                eval_reference(&g, &bits(x, n))
            );
        }
        assert!(back.isomorphic_logic(&g), "{text}");
        assert_eq!(back.annotated_count(), g.annotated_count());
    }
}
