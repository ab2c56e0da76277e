// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeSet;

use crate::frontend::{Dfg, NodeKind};
use crate::retimer::PipelinedNetlist;

/// Combinational depth: inputs and constants 0, an operator one more than
/// its deepest operand, outputs unbounded.
pub fn logic_depths(g: &Dfg) -> Vec<u32> {
    let order = g.topo_order().expect("circuit is acyclic");
    let mut depth = vec![0u32; g.len()];
    for v in order {
        let n = &g.nodes[v];
        depth[v] = match n.kind {
            NodeKind::Input | NodeKind::Const0 | NodeKind::Const1 => 0,
            NodeKind::Output => u32::MAX,
            _ => 1 + n.args.iter().map(|&a| depth[a]).max().unwrap_or(0),
        };
    }
    depth
}

/// Baseline without retiming: one full pipeline cut after every logic level
/// that holds a registered node.
///
/// Every wire crossing a cut gets a register, so the registered nodes are
/// covered and all paths stay balanced, but wires that merely pass a level
/// are registered too. Constant wires are never cut. Registers already on
/// operand edges of `g` are discarded.
pub fn naive_balance(g: &Dfg) -> PipelinedNetlist {
    let depth = logic_depths(g);
    let levels: BTreeSet<u32> = g
        .nodes
        .iter()
        .filter(|n| n.annotated)
        .map(|n| depth[n.id])
        .collect();
    let mut dfg = g.clone();
    for node in &mut dfg.nodes {
        let dv = depth[node.id];
        for (port, &a) in node.args.iter().enumerate() {
            node.regs[port] = if g.nodes[a].kind.is_const() {
                0
            } else {
                let du = depth[a];
                levels.range(du..).take_while(|&&l| l < dv).count() as u32
            };
        }
    }
    PipelinedNetlist {
        dfg,
        latency: levels.len() as u32,
    }
}
