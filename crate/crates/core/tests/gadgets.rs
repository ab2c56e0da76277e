// SPDX-License-Identifier: Apache-2.0

mod common;

use common::{bits, eval_reference, random_circuit};
use maskedhls::frontend::{Dfg, NodeKind};
use maskedhls::gadgets::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn unmasked_circuit(rng: &mut ChaCha8Rng) -> Dfg {
    loop {
        let mut g = random_circuit(rng, 24, false);
        for n in &mut g.nodes {
            n.annotated = false;
        }
        if g.count_kind(NodeKind::And) > 0 {
            return g;
        }
    }
}

#[test]
fn every_gadget_computes_a_masked_and() {
    for kind in GadgetKind::ALL {
        let t = &kind.template().dfg;
        let n = t.inputs.len();
        for x in 0..1u64 << n {
            let v = bits(x, n);
            let out = eval_reference(t, &v);
            assert_eq!(
                out[0] ^ out[1],
                (v[0] ^ v[1]) & (v[2] ^ v[3]),
                "{kind} on {v:?}"
            );
        }
    }
}

#[test]
fn masking_preserves_function() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for kind in GadgetKind::ALL {
        for shared in [false, true] {
            for _ in 0..25 {
                let g = unmasked_circuit(&mut rng);
                let (m, inst) = apply_masking_pass(&g, kind, shared).unwrap();
                let ands = g.count_kind(NodeKind::And);
                assert_eq!(inst.len(), ands);
                assert_eq!(m.annotated_count(), ands * kind.annotated_count());
                let randoms = m.inputs.len() - 2 * g.inputs.len();
                let expect_r = if shared && kind == GadgetKind::Comar {
                    kind.random_count()
                } else {
                    ands * kind.random_count()
                };
                assert_eq!(randoms, expect_r);
                for _ in 0..64 {
                    let secret: Vec<bool> = (0..g.inputs.len()).map(|_| rng.gen()).collect();
                    let mut masked_in = Vec::new();
                    for &s in &secret {
                        let m0: bool = rng.gen();
                        masked_in.extend([m0, m0 ^ s]);
                    }
                    masked_in.extend((0..randoms).map(|_| rng.gen::<bool>()));
                    let want = eval_reference(&g, &secret);
                    let got = eval_reference(&m, &masked_in);
                    let joined: Vec<bool> = got.chunks(2).map(|p| p[0] ^ p[1]).collect();
                    assert_eq!(joined, want, "{kind}");
                }
            }
        }
    }
}

#[test]
fn masked_names_follow_the_source() {
    let src = "int f(bool a, bool b, bool *y) { t = a & b; *y = ~t; return 0; }";
    let g = maskedhls::frontend::parse_masked_c(src).unwrap();
    let (m, _) = apply_masking_pass(&g, GadgetKind::Dom, false).unwrap();
    assert_eq!(m.input_names(), ["a_s0", "a_s1", "b_s0", "b_s1", "g1_r"]);
    assert_eq!(m.output_names(), ["y_s0", "y_s1"]);
}

#[test]
fn matcher_recovers_annotations() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for kind in GadgetKind::ALL {
        for _ in 0..15 {
            let g = unmasked_circuit(&mut rng);
            let (m, inst) = apply_masking_pass(&g, kind, false).unwrap();
            let mut bare = m.clone();
            bare.nodes.iter_mut().for_each(|n| n.annotated = false);
            let (found, found_inst) =
                annotate_gadgets(&bare, kind).expect("all gadgets recognised");
            assert_eq!(found_inst.len(), inst.len());
            let want: Vec<usize> = m
                .nodes
                .iter()
                .filter(|n| n.annotated)
                .map(|n| n.id)
                .collect();
            let got: Vec<usize> = found
                .nodes
                .iter()
                .filter(|n| n.annotated)
                .map(|n| n.id)
                .collect();
            assert_eq!(got, want, "{kind}");
        }
    }
}

#[test]
fn matcher_rejects_plain_logic() {
    let src = "int f(bool a, bool b, bool c, bool *y) { *y = (a & b) ^ c; return 0; }";
    let g = maskedhls::frontend::parse_masked_c(src).unwrap();
    for kind in GadgetKind::ALL {
        assert!(annotate_gadgets(&g, kind).is_none());
    }
}

#[test]
fn annotated_gadgets_keep_shares_apart() {
    // Gadget operands must be independent for the separation to hold,
    // which the S-box decomposition guarantees.
    let g = maskedhls::frontend::parse_masked_c(&common::benchmark("present.c")).unwrap();
    for kind in GadgetKind::ALL {
        let (m, _) = apply_masking_pass(&g, kind, false).unwrap();
        assert!(share_separation_violations(&m).is_empty(), "{kind}");
        let mut bare = m.clone();
        bare.nodes.iter_mut().for_each(|n| n.annotated = false);
        assert!(
            !share_separation_violations(&bare).is_empty(),
            "{kind} without registers"
        );
    }
}

#[test]
fn masking_rejects_registered_input() {
    let src = "int f(bool a, bool b, bool *y) { *y = reg(a & b); return 0; }";
    let g = maskedhls::frontend::parse_masked_c(src).unwrap();
    assert!(matches!(
        apply_masking_pass(&g, GadgetKind::Hpc1, false),
        Err(GadgetError::AnnotatedInput(_))
    ));
}

#[test]
fn template_listing_shows_registers() {
    let text = template_listing(GadgetKind::Dom);
    assert_eq!(text.matches("reg(").count(), 2);
}
