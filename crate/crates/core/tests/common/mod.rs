// SPDX-License-Identifier: Apache-2.0

//! Reference models shared by the integration tests. Each one is written
//! from the definitions directly and shares no code with the library.

#![allow(clippy::needless_range_loop, dead_code)]

use std::collections::HashMap;

use maskedhls::frontend::{Dfg, NodeId, NodeKind};
use maskedhls::hlsmodel::HlsModel;
use rand::Rng;

pub const FIXTURES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures");
pub const BENCHMARKS: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/benchmarks");

pub fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!("{FIXTURES}/{name}")).expect("fixture exists")
}

pub fn benchmark(name: &str) -> String {
    std::fs::read_to_string(format!("{BENCHMARKS}/{name}")).expect("benchmark exists")
}

/// Random well-formed circuit with at most `max_nodes` nodes, random
/// register annotations and occasional registers on single operands.
pub fn random_circuit<R: Rng>(rng: &mut R, max_nodes: usize, edge_regs: bool) -> Dfg {
    loop {
        let mut g = Dfg::new("rnd");
        let n_in = rng.gen_range(1..=5);
        let n_ops = rng.gen_range(1..=16);
        let mut pool: Vec<NodeId> = (0..n_in).map(|i| g.add_input(format!("i{i}"))).collect();
        for _ in 0..n_ops {
            let kind = match rng.gen_range(0..10) {
                0..=3 => NodeKind::Xor,
                4..=7 => NodeKind::And,
                _ => NodeKind::Not,
            };
            let mut args = Vec::new();
            for _ in 0..kind.arity() {
                let a = if rng.gen_bool(0.05) {
                    g.add_const(rng.gen_bool(0.5))
                } else {
                    pool[rng.gen_range(0..pool.len())]
                };
                args.push(a);
            }
            let id = g.add_op(kind, &args, rng.gen_bool(0.3));
            if edge_regs && rng.gen_bool(0.1) {
                let p = rng.gen_range(0..args.len());
                if !g.nodes[args[p]].kind.is_const() {
                    g.nodes[id].regs[p] = rng.gen_range(1..=2);
                }
            }
            pool.push(id);
        }
        let fan = g.fanouts();
        let sinks: Vec<NodeId> = pool
            .iter()
            .copied()
            .filter(|&v| fan[v].is_empty())
            .collect();
        for (k, v) in sinks.into_iter().enumerate() {
            g.add_output(format!("o{k}"), v, 0);
        }
        if g.len() <= max_nodes {
            return g;
        }
    }
}

/// Evaluate the circuit on one input assignment by recursion, ignoring
/// registers.
pub fn eval_reference(g: &Dfg, inputs: &[bool]) -> Vec<bool> {
    fn val(
        g: &Dfg,
        v: NodeId,
        ins: &HashMap<NodeId, bool>,
        memo: &mut HashMap<NodeId, bool>,
    ) -> bool {
        if let Some(&b) = memo.get(&v) {
            return b;
        }
        let n = &g.nodes[v];
        let a = |k: usize, memo: &mut HashMap<NodeId, bool>| val(g, n.args[k], ins, memo);
        let b = match n.kind {
            NodeKind::Input => ins[&v],
            NodeKind::Const0 => false,
            NodeKind::Const1 => true,
            NodeKind::Not => !a(0, memo),
            NodeKind::Output => a(0, memo),
            NodeKind::And => a(0, memo) & a(1, memo),
            NodeKind::Xor => a(0, memo) ^ a(1, memo),
        };
        memo.insert(v, b);
        b
    }
    let ins: HashMap<NodeId, bool> = g
        .inputs
        .iter()
        .copied()
        .zip(inputs.iter().copied())
        .collect();
    let mut memo = HashMap::new();
    g.outputs
        .iter()
        .map(|&o| val(g, o, &ins, &mut memo))
        .collect()
}

/// Outputs of a registered circuit at each cycle: an operand behind `r`
/// registers reads its driver `r` cycles earlier, and everything reads 0
/// before time begins.
pub fn run_reference(g: &Dfg, seq: &[Vec<bool>]) -> Vec<Vec<bool>> {
    fn val(
        g: &Dfg,
        v: NodeId,
        t: i64,
        seq: &[Vec<bool>],
        pos: &HashMap<NodeId, usize>,
        memo: &mut HashMap<(NodeId, i64), bool>,
    ) -> bool {
        if t < 0 {
            return false;
        }
        if let Some(&b) = memo.get(&(v, t)) {
            return b;
        }
        let n = &g.nodes[v];
        let arg = |k: usize, memo: &mut HashMap<(NodeId, i64), bool>| {
            val(g, n.args[k], t - i64::from(n.regs[k]), seq, pos, memo)
        };
        let b = match n.kind {
            NodeKind::Input => seq[t as usize][pos[&v]],
            NodeKind::Const0 => false,
            NodeKind::Const1 => true,
            NodeKind::Not => !arg(0, memo),
            NodeKind::Output => arg(0, memo),
            NodeKind::And => arg(0, memo) & arg(1, memo),
            NodeKind::Xor => arg(0, memo) ^ arg(1, memo),
        };
        memo.insert((v, t), b);
        b
    }
    let pos: HashMap<NodeId, usize> = g.inputs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut memo = HashMap::new();
    (0..seq.len() as i64)
        .map(|t| {
            g.outputs
                .iter()
                .map(|&o| val(g, o, t, seq, &pos, &mut memo))
                .collect()
        })
        .collect()
}

/// Bits of `x`, least significant first.
pub fn bits(x: u64, n: usize) -> Vec<bool> {
    (0..n).map(|i| x >> i & 1 == 1).collect()
}

/// Registered-path matrices by Floyd-Warshall over the forward edges,
/// with routes through the back edge composed afterwards. `None` marks
/// "no path".
pub fn wd_reference(m: &HlsModel) -> Vec<Vec<Option<(u32, u32)>>> {
    let n = m.nodes.len();
    let delay: Vec<u32> = m.nodes.iter().map(|x| x.delay).collect();
    // Path cost as (registers, -delay) so "smaller is better" throughout.
    let mut best: Vec<Vec<Option<(u32, i64)>>> = vec![vec![None; n]; n];
    for (v, row) in best.iter_mut().enumerate() {
        row[v] = Some((0, -i64::from(delay[v])));
    }
    for (i, e) in m.edges.iter().enumerate() {
        if i == m.back_edge {
            continue;
        }
        let c = (e.weight, -i64::from(delay[e.from] + delay[e.to]));
        let slot = &mut best[e.from][e.to];
        if slot.is_none_or(|s| c < s) {
            *slot = Some(c);
        }
    }
    for k in 0..n {
        for i in 0..n {
            let Some((w1, d1)) = best[i][k] else { continue };
            for j in 0..n {
                let Some((w2, d2)) = best[k][j] else { continue };
                if i == j {
                    continue;
                }
                let c = (w1 + w2, d1 + d2 + i64::from(delay[k]));
                if best[i][j].is_none_or(|s| c < s) {
                    best[i][j] = Some(c);
                }
            }
        }
    }
    let fwd = best.clone();
    let back = m.edges[m.back_edge].weight;
    for u in 0..n {
        let Some((w1, d1)) = fwd[u][m.sink] else {
            continue;
        };
        for v in 0..n {
            if u == v {
                continue;
            }
            let Some((w2, d2)) = fwd[m.source][v] else {
                continue;
            };
            let c = (w1 + back + w2, d1.min(d2));
            if best[u][v].is_none_or(|s| c < s) {
                best[u][v] = Some(c);
            }
        }
    }
    best.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|c| c.map(|(w, d)| (w, (-d) as u32)))
                .collect()
        })
        .collect()
}
