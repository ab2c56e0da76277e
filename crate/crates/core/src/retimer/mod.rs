// SPDX-License-Identifier: Apache-2.0

//! Retiming: path matrices, constraint generation, the shortest-path solve
//! and conversion of labels back into a register-balanced netlist.

mod apply;
mod constraints;
mod solver;
mod wd;

pub use apply::{apply_retiming, retimed_weights, ApplyError};
pub use constraints::{format_constraints, gen_constraints, ConstraintKind, DiffConstraint};
pub use solver::{solve_constraints, RetimingSolution, SolveError};
pub use wd::{compute_wd, PathMatrices, NO_PATH};

use crate::frontend::{Dfg, NodeId};
use crate::hlsmodel::{build_hls_model, HlsModel, ModelError};

/// A circuit whose operand edges carry their final register counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelinedNetlist {
    pub dfg: Dfg,
    pub latency: u32,
}

impl PipelinedNetlist {
    /// Flops needed for each driver: uses of one wire share a register
    /// chain, so a net costs the largest count on any of its uses.
    pub fn flops_per_net(&self) -> Vec<u32> {
        let mut per = vec![0u32; self.dfg.len()];
        for e in self.dfg.edges() {
            per[e.src] = per[e.src].max(e.regs);
        }
        per
    }

    pub fn total_registers(&self) -> u32 {
        self.flops_per_net().iter().sum()
    }

    /// Registers at annotated positions: one per annotated node.
    pub fn annotated_registers(&self) -> u32 {
        self.dfg.annotated_count() as u32
    }

    pub fn balancing_registers(&self) -> u32 {
        self.total_registers()
            .saturating_sub(self.annotated_registers())
    }

    /// Sum of registers over all operand edges, without sharing.
    pub fn edge_registers(&self) -> u32 {
        self.dfg.edges().map(|e| e.regs).sum()
    }

    /// Annotated nodes with an unregistered use.
    pub fn unregistered_annotations(&self) -> Vec<NodeId> {
        let fan = self.dfg.fanouts();
        self.dfg
            .nodes
            .iter()
            .filter(|n| n.annotated)
            .filter(|n| {
                fan[n.id]
                    .iter()
                    .any(|&(dst, port)| self.dfg.nodes[dst].regs[port] == 0)
            })
            .map(|n| n.id)
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RetimeError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Apply(#[from] ApplyError),
}

/// Every intermediate of one balancing run.
#[derive(Debug, Clone)]
pub struct Retimed {
    pub model: HlsModel,
    pub constraints: Vec<DiffConstraint>,
    pub solution: RetimingSolution,
    pub netlist: PipelinedNetlist,
}

/// Model, constrain, solve and apply in one go.
pub fn retime(g: &Dfg, clock: f64) -> Result<Retimed, RetimeError> {
    let model = build_hls_model(g, clock)?;
    let wd = compute_wd(&model);
    let constraints = gen_constraints(&model, &wd);
    let solution = solve_constraints(&constraints, model.len())?;
    let netlist = apply_retiming(&model, &solution)?;
    Ok(Retimed {
        model,
        constraints,
        solution,
        netlist,
    })
}
