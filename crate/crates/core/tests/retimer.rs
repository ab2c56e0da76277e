// SPDX-License-Identifier: Apache-2.0

#![allow(clippy::needless_range_loop)]

mod common;

use common::{fixture, random_circuit, wd_reference};
use maskedhls::frontend::parse_masked_c;
use maskedhls::hlsmodel::{build_hls_model, max_extra_regs, ModelEdgeKind};
use maskedhls::retimer::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn c(lhs: usize, rhs: usize, bound: i64) -> DiffConstraint {
    DiffConstraint {
        lhs,
        rhs,
        bound,
        kind: ConstraintKind::CriticalPath,
    }
}

#[test]
fn path_matrices_match_floyd_warshall() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..150 {
        let g = random_circuit(&mut rng, 40, true);
        let m = build_hls_model(&g, 1.0).unwrap();
        let wd = compute_wd(&m);
        let reference = wd_reference(&m);
        for u in 0..m.len() {
            for v in 0..m.len() {
                let got = wd.w(u, v).map(|w| (w, wd.d(u, v).unwrap()));
                assert_eq!(
                    got, reference[u][v],
                    "pair {} -> {}",
                    m.nodes[u].name, m.nodes[v].name
                );
            }
        }
    }
}

#[test]
fn solver_finds_greatest_nonpositive_solution() {
    // r1 - r0 <= 2, r2 - r1 <= -1, r0 - r2 <= 0
    let cs = [c(1, 0, 2), c(2, 1, -1), c(0, 2, 0)];
    let sol = solve_constraints(&cs, 3).unwrap();
    assert!(sol.satisfies(&cs));
    assert_eq!(sol.labels, vec![-1, 0, -1]);
}

#[test]
fn solver_reports_negative_cycle() {
    let cs = [c(1, 0, 1), c(2, 1, -1), c(0, 2, -1), c(3, 0, 5)];
    match solve_constraints(&cs, 4) {
        Err(SolveError::NegativeCycle { cycle }) => {
            let mut nodes = cycle.clone();
            nodes.sort_unstable();
            nodes.dedup();
            assert_eq!(nodes, vec![0, 1, 2]);
        }
        other => panic!("expected a negative cycle, got {other:?}"),
    }
    assert!(matches!(
        solve_constraints(&[c(5, 0, 0)], 2),
        Err(SolveError::NodeOutOfRange { node: 5, n: 2 })
    ));
}

#[test]
fn small_models_are_feasible_by_exhaustive_search() {
    // Enumerate every label vector in a window wide enough for any
    // solution normalised to r(source) = 0.
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    while checked < 40 {
        let g = random_circuit(&mut rng, 8, false);
        let m = build_hls_model(&g, 1.0).unwrap();
        if m.len() > 9 {
            continue;
        }
        let cs = gen_constraints(&m, &compute_wd(&m));
        let lo = -(i64::from(max_extra_regs(&m)) + 1);
        let free: Vec<usize> = (0..m.len()).filter(|&v| v != m.source).collect();
        let span = (1 - lo) as usize;
        let total = span.pow(free.len() as u32);
        let mut labels = vec![0i64; m.len()];
        let mut found = false;
        for code in 0..total {
            let mut k = code;
            for &v in &free {
                labels[v] = lo + (k % span) as i64;
                k /= span;
            }
            if cs.iter().all(|x| x.holds(&labels)) {
                found = true;
                break;
            }
        }
        assert!(
            found,
            "no labelling satisfies the constraints of {}",
            m.to_dot()
        );
        let sol = solve_constraints(&cs, m.len()).expect("solver agrees a solution exists");
        assert!(sol.satisfies(&cs));
        checked += 1;
    }
}

#[test]
fn tampered_labels_are_rejected() {
    let g = parse_masked_c(&fixture("domand_cross.c")).unwrap();
    let r = retime(&g, 1.0).unwrap();
    let mut bad = r.solution.clone();
    bad.labels[r.model.sink] += 5;
    assert!(matches!(
        apply_retiming(&r.model, &bad),
        Err(ApplyError::NegativeWeight { .. } | ApplyError::BackEdgeNotEmpty(_))
    ));
    let short = RetimingSolution { labels: vec![0; 2] };
    assert!(matches!(
        apply_retiming(&r.model, &short),
        Err(ApplyError::LabelCount { .. })
    ));
    // All-zero labels leave the back-edge register unplaced.
    let zero = RetimingSolution {
        labels: vec![0; r.model.len()],
    };
    assert_eq!(
        apply_retiming(&r.model, &zero),
        Err(ApplyError::BackEdgeNotEmpty(1))
    );
}

#[test]
fn series_annotations_are_locked() {
    let src = "int f(bool a, bool b, bool c, bool *y) {\n  t = reg(a & b);\n  u = reg(t ^ c);\n  *y = u;\n  return 0;\n}\n";
    let g = parse_masked_c(src).unwrap();
    let r = retime(&g, 1.0).unwrap();
    assert_eq!(r.model.locks.len(), 1);
    let lock = r.model.locks[0];
    assert_eq!(r.model.edges[lock.edge].kind, ModelEdgeKind::Lock);
    assert_eq!(
        r.solution.labels[lock.lock_in],
        r.solution.labels[lock.lock_out]
    );
    let net = &r.netlist;
    assert_eq!(net.latency, 2);
    // c must be delayed once to meet t, and both annotations hold a register.
    assert_eq!(net.annotated_registers(), 2);
    assert_eq!(net.total_registers(), 3);
    assert!(net.unregistered_annotations().is_empty());
}

#[test]
fn model_dot_matches_golden() {
    let g = parse_masked_c(&fixture("domand_cross.c")).unwrap();
    let m = build_hls_model(&g, 1.0).unwrap();
    assert_eq!(m.to_dot(), fixture("domand_model.dot"));
    assert_eq!(max_extra_regs(&m), 1);
    assert_eq!(m.back_edge_weight(), 1);
}

#[test]
fn constraint_dump_is_sorted_and_deduplicated() {
    let g = parse_masked_c(&fixture("domand_cross.c")).unwrap();
    let r = retime(&g, 1.0).unwrap();
    let text = format_constraints(&r.model, &r.constraints);
    let lines: Vec<&str> = text.lines().collect();
    let mut sorted = lines.clone();
    sorted.sort_unstable();
    sorted.dedup();
    assert_eq!(lines, sorted);
    assert!(lines
        .iter()
        .all(|l| l.starts_with("r(") && l.contains(") - r(") && l.contains(" <= ")));
}

#[test]
fn nonpositive_clock_is_rejected() {
    let g = parse_masked_c(&fixture("domand_cross.c")).unwrap();
    assert!(matches!(retime(&g, 0.0), Err(RetimeError::Model(_))));
    assert!(matches!(retime(&g, f64::NAN), Err(RetimeError::Model(_))));
}
