// SPDX-License-Identifier: Apache-2.0

use super::solver::RetimingSolution;
use super::PipelinedNetlist;
use crate::hlsmodel::{HlsModel, ModelEdgeKind};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ApplyError {
    #[error("labels cover {got} nodes, model has {expected}")]
    LabelCount { expected: usize, got: usize },
    #[error("edge {from} -> {to} would carry {weight} registers")]
    NegativeWeight {
        from: String,
        to: String,
        weight: i64,
    },
    #[error("lock {lock_in}/{lock_out} moved")]
    LockMoved { lock_in: String, lock_out: String },
    #[error("{0} register(s) left on the back edge")]
    BackEdgeNotEmpty(i64),
    #[error("operand {port} of node {node} would carry {regs} registers")]
    NegativeOperand { node: usize, port: usize, regs: i64 },
}

/// Retimed weight of every model edge.
pub fn retimed_weights(model: &HlsModel, sol: &RetimingSolution) -> Vec<i64> {
    let r = &sol.labels;
    model
        .edges
        .iter()
        .map(|e| i64::from(e.weight) + r[e.from] - r[e.to])
        .collect()
}

/// Turn a solution back into a netlist: every circuit operand receives the
/// registers found along its route through the model, minus the locked
/// series registers, which only existed to shape the solution.
pub fn apply_retiming(
    model: &HlsModel,
    sol: &RetimingSolution,
) -> Result<PipelinedNetlist, ApplyError> {
    if sol.labels.len() != model.len() {
        return Err(ApplyError::LabelCount {
            expected: model.len(),
            got: sol.labels.len(),
        });
    }
    let wr = retimed_weights(model, sol);
    for (e, &w) in model.edges.iter().zip(&wr) {
        if w < 0 {
            return Err(ApplyError::NegativeWeight {
                from: model.nodes[e.from].name.clone(),
                to: model.nodes[e.to].name.clone(),
                weight: w,
            });
        }
    }
    for l in &model.locks {
        if sol.labels[l.lock_in] != sol.labels[l.lock_out] {
            return Err(ApplyError::LockMoved {
                lock_in: model.nodes[l.lock_in].name.clone(),
                lock_out: model.nodes[l.lock_out].name.clone(),
            });
        }
    }
    let left = wr[model.back_edge];
    if left != 0 {
        return Err(ApplyError::BackEdgeNotEmpty(left));
    }
    let mut dfg = model.dfg.clone();
    for node in &mut dfg.nodes {
        for port in 0..node.args.len() {
            let route = &model.routes[node.id][port];
            let regs: i64 = route
                .iter()
                .map(|&e| match model.edges[e].kind {
                    ModelEdgeKind::Lock => wr[e] - 1,
                    _ => wr[e],
                })
                .sum();
            if regs < 0 {
                return Err(ApplyError::NegativeOperand {
                    node: node.id,
                    port,
                    regs,
                });
            }
            // A constant needs no pipeline register.
            let src_const = model.dfg.nodes[node.args[port]].kind.is_const();
            node.regs[port] = if src_const { 0 } else { regs as u32 };
        }
    }
    Ok(PipelinedNetlist {
        dfg,
        latency: model.back_edge_weight(),
    })
}
