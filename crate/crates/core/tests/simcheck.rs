// SPDX-License-Identifier: Apache-2.0

mod common;

use common::{bits, eval_reference, fixture, random_circuit, run_reference};
use maskedhls::frontend::{parse_masked_c, Dfg};
use maskedhls::retimer::{retime, PipelinedNetlist};
use maskedhls::simcheck::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn golden(g: &Dfg) -> Dfg {
    let mut c = g.clone();
    for n in &mut c.nodes {
        n.annotated = false;
        n.regs.iter_mut().for_each(|r| *r = 0);
    }
    c
}

fn shared_paths() -> (Dfg, PipelinedNetlist) {
    let g = parse_masked_c(&fixture("shared_paths.c")).unwrap();
    let net = retime(&g, 1.0).unwrap().netlist;
    (g, net)
}

#[test]
fn cycle_simulation_matches_reference() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..100 {
        let g = random_circuit(&mut rng, 40, true);
        let net = PipelinedNetlist {
            dfg: g.clone(),
            latency: 0,
        };
        let seq: Vec<Vec<bool>> = (0..20)
            .map(|_| (0..g.inputs.len()).map(|_| rng.gen()).collect())
            .collect();
        assert_eq!(simulate_bits(&net, &seq).unwrap(), run_reference(&g, &seq));
    }
}

#[test]
fn combinational_evaluation_matches_reference() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..100 {
        let g = random_circuit(&mut rng, 40, false);
        let n = g.inputs.len();
        // Lane k carries input vector k.
        let words: Vec<u64> = (0..n)
            .map(|i| (0..1u64 << n).fold(0, |w, x| w | ((x >> i & 1) << x)))
            .collect();
        let out = eval_comb(&g, &words).unwrap();
        for x in 0..1u64 << n {
            let want = eval_reference(&g, &bits(x, n));
            let got: Vec<bool> = out.iter().map(|w| w >> x & 1 == 1).collect();
            assert_eq!(got, want);
        }
    }
}

#[test]
fn retimed_shared_paths_is_equivalent_and_balanced() {
    let (g, net) = shared_paths();
    let eq = check_equivalence(&net, &golden(&g), 500, 1).unwrap();
    assert!(eq.equivalent && eq.exhaustive);
    assert_eq!(eq.trials, 1 << 12);
    assert!(check_balance(&net).balanced);
}

#[test]
fn removing_a_register_is_detected() {
    let (g, mut net) = shared_paths();
    // Drop the balancing register on x9's use.
    let x9 = g.inputs[8];
    let user = net
        .dfg
        .nodes
        .iter()
        .position(|n| n.args.contains(&x9))
        .unwrap();
    let port = net.dfg.nodes[user]
        .args
        .iter()
        .position(|&a| a == x9)
        .unwrap();
    assert_eq!(net.dfg.nodes[user].regs[port], 1);
    net.dfg.nodes[user].regs[port] = 0;

    let bal = check_balance(&net);
    assert!(!bal.balanced);
    let w = bal.witness.unwrap();
    assert_eq!(w.node, user);

    let eq = check_equivalence(&net, &golden(&g), 0, 0).unwrap();
    assert!(!eq.equivalent);
    assert!(eq.mismatch_count > 0);
    assert!(eq.mismatches.len() <= MISMATCH_CAP);
    let m = &eq.mismatches[0];
    assert_eq!(m.output, "y1");
    assert_eq!(m.cycle, m.trial / 64 + 1);
}

#[test]
fn random_trials_are_reproducible() {
    let src = fixture("shared_paths.c")
        .replacen(
            "bool x12,",
            "bool x12, bool x13, bool x14, bool x15, bool x16, bool x17,",
            1,
        )
        .replace(
            "n11 = n5 ^ x12;",
            "n11 = n5 ^ x12 ^ x13 ^ x14 ^ x15 ^ x16 ^ x17;",
        );
    let g = parse_masked_c(&src).unwrap();
    assert!(g.inputs.len() > EXHAUSTIVE_LIMIT);
    let net = retime(&g, 1.0).unwrap().netlist;
    let a = check_equivalence(&net, &golden(&g), 1000, 99).unwrap();
    let b = check_equivalence(&net, &golden(&g), 1000, 99).unwrap();
    assert!(!a.exhaustive && a.equivalent);
    assert_eq!(a.trials, 1000);
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
}

#[test]
fn port_mismatch_is_an_error() {
    let (_, net) = shared_paths();
    let other = parse_masked_c(&fixture("domand.c")).unwrap();
    assert!(matches!(
        check_equivalence(&net, &other, 10, 0),
        Err(SimError::PortMismatch(_))
    ));
}

#[test]
fn full_cut_baseline_on_shared_paths() {
    let (g, _) = shared_paths();
    let nv = naive_balance(&g);
    assert_eq!(nv.total_registers(), 12);
    assert_eq!(nv.latency, 2);
    assert!(check_balance(&nv).balanced);
    assert!(
        check_equivalence(&nv, &golden(&g), 0, 0)
            .unwrap()
            .equivalent
    );
}

#[test]
fn full_cut_baseline_is_always_correct() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..200 {
        let g = random_circuit(&mut rng, 40, false);
        let nv = naive_balance(&g);
        assert!(check_balance(&nv).balanced);
        assert!(
            check_equivalence(&nv, &golden(&g), 0, 0)
                .unwrap()
                .equivalent
        );
        assert!(nv.unregistered_annotations().is_empty());
    }
}

#[test]
fn savings_arithmetic() {
    assert!((savings_pct(52, 168) - 69.047).abs() < 0.01);
    assert_eq!(savings_pct(3, 5), 40.0);
    assert_eq!(savings_pct(1, 0), 0.0);
}
