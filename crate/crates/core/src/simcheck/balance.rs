// SPDX-License-Identifier: Apache-2.0

use serde::Serialize;

use crate::frontend::{NodeId, NodeKind};
use crate::retimer::PipelinedNetlist;

/// Two operands (or two outputs) of `node` that arrive after different
/// numbers of registers: `(driver, registers from the inputs)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnbalancedWitness {
    pub node: NodeId,
    pub first: (NodeId, u32),
    pub second: (NodeId, u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BalanceReport {
    pub balanced: bool,
    pub latency: u32,
    pub witness: Option<UnbalancedWitness>,
}

/// Forward register-depth labelling. Constants fit any depth.
pub fn check_balance(net: &PipelinedNetlist) -> BalanceReport {
    let g = &net.dfg;
    let order = g.topo_order().expect("netlist is acyclic");
    let mut depth: Vec<Option<u32>> = vec![None; g.len()];
    let mut witness = None;
    for v in order {
        let n = &g.nodes[v];
        match n.kind {
            NodeKind::Input => depth[v] = Some(0),
            NodeKind::Const0 | NodeKind::Const1 => depth[v] = None,
            _ => {
                let mut seen: Option<(NodeId, u32)> = None;
                for (&a, &r) in n.args.iter().zip(&n.regs) {
                    let Some(da) = depth[a] else { continue };
                    let arrival = da + r;
                    match seen {
                        None => seen = Some((a, arrival)),
                        Some((b, db)) if db != arrival && witness.is_none() => {
                            witness = Some(UnbalancedWitness {
                                node: v,
                                first: (b, db),
                                second: (a, arrival),
                            });
                        }
                        _ => {}
                    }
                }
                depth[v] = seen.map(|(_, d)| d);
            }
        }
    }
    let mut latency: Option<(NodeId, u32)> = None;
    for &o in &g.outputs {
        let Some(d) = depth[o] else { continue };
        match latency {
            None => latency = Some((o, d)),
            Some((p, dp)) if dp != d && witness.is_none() => {
                witness = Some(UnbalancedWitness {
                    node: o,
                    first: (p, dp),
                    second: (o, d),
                });
            }
            _ => {}
        }
    }
    BalanceReport {
        balanced: witness.is_none(),
        latency: latency.map_or(0, |(_, d)| d),
        witness,
    }
}
