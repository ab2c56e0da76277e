// SPDX-License-Identifier: Apache-2.0

//! Two-valued, bit-parallel evaluation. Every `u64` carries 64 independent
//! lanes, so one pass evaluates 64 input vectors.

use crate::frontend::{Dfg, NodeId, NodeKind};
use crate::retimer::PipelinedNetlist;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SimError {
    #[error("expected {expected} input words per cycle, got {got}")]
    Width { expected: usize, got: usize },
    #[error("circuit has a cycle or dangling operand")]
    Malformed,
    #[error("port lists differ: {0}")]
    PortMismatch(String),
}

#[inline]
fn gate(kind: NodeKind, a: u64, b: u64) -> u64 {
    match kind {
        NodeKind::And => a & b,
        NodeKind::Xor => a ^ b,
        NodeKind::Not => !a,
        NodeKind::Output => a,
        NodeKind::Const0 => 0,
        NodeKind::Const1 => u64::MAX,
        NodeKind::Input => unreachable!("inputs are assigned, not evaluated"),
    }
}

/// Combinational evaluator with registers ignored.
#[derive(Debug, Clone)]
pub struct CombEvaluator<'a> {
    g: &'a Dfg,
    order: Vec<NodeId>,
    values: Vec<u64>,
}

impl<'a> CombEvaluator<'a> {
    pub fn new(g: &'a Dfg) -> Result<Self, SimError> {
        let order = g.topo_order().ok_or(SimError::Malformed)?;
        Ok(CombEvaluator {
            g,
            order,
            values: vec![0; g.len()],
        })
    }

    /// Output words, in output order, for one word per input.
    pub fn eval(&mut self, inputs: &[u64]) -> Result<Vec<u64>, SimError> {
        let g = self.g;
        if inputs.len() != g.inputs.len() {
            return Err(SimError::Width {
                expected: g.inputs.len(),
                got: inputs.len(),
            });
        }
        for (&i, &w) in g.inputs.iter().zip(inputs) {
            self.values[i] = w;
        }
        for &v in &self.order {
            let n = &g.nodes[v];
            if n.kind == NodeKind::Input {
                continue;
            }
            let a = n.args.first().map_or(0, |&x| self.values[x]);
            let b = n.args.get(1).map_or(0, |&x| self.values[x]);
            self.values[v] = gate(n.kind, a, b);
        }
        Ok(g.outputs.iter().map(|&o| self.values[o]).collect())
    }

    /// Value of every node after the last [`eval`](Self::eval).
    pub fn values(&self) -> &[u64] {
        &self.values
    }
}

/// One-shot combinational evaluation.
pub fn eval_comb(g: &Dfg, inputs: &[u64]) -> Result<Vec<u64>, SimError> {
    CombEvaluator::new(g)?.eval(inputs)
}

/// Cycle-accurate simulator. Uses of one wire share a register chain, as
/// in the generated hardware; all flops start at 0.
#[derive(Debug, Clone)]
pub struct CycleSim<'a> {
    g: &'a Dfg,
    order: Vec<NodeId>,
    values: Vec<u64>,
    /// `chains[v][k]` is the output of the (k+1)-th flop after `v`.
    chains: Vec<Vec<u64>>,
    cycle: u64,
}

impl<'a> CycleSim<'a> {
    pub fn new(net: &'a PipelinedNetlist) -> Result<Self, SimError> {
        Self::from_dfg(&net.dfg)
    }

    pub fn from_dfg(g: &'a Dfg) -> Result<Self, SimError> {
        let order = g.topo_order().ok_or(SimError::Malformed)?;
        let mut depth = vec![0usize; g.len()];
        for e in g.edges() {
            depth[e.src] = depth[e.src].max(e.regs as usize);
        }
        Ok(CycleSim {
            g,
            order,
            values: vec![0; g.len()],
            chains: depth.into_iter().map(|d| vec![0; d]).collect(),
            cycle: 0,
        })
    }

    #[inline]
    fn tap(&self, src: NodeId, regs: u32) -> u64 {
        if regs == 0 {
            self.values[src]
        } else {
            self.chains[src][regs as usize - 1]
        }
    }

    /// Apply one input vector, return this cycle's outputs, then clock.
    pub fn step(&mut self, inputs: &[u64]) -> Result<Vec<u64>, SimError> {
        let g = self.g;
        if inputs.len() != g.inputs.len() {
            return Err(SimError::Width {
                expected: g.inputs.len(),
                got: inputs.len(),
            });
        }
        for (&i, &w) in g.inputs.iter().zip(inputs) {
            self.values[i] = w;
        }
        for &v in &self.order {
            let n = &g.nodes[v];
            if n.kind == NodeKind::Input {
                continue;
            }
            let a = n.args.first().map_or(0, |&x| self.tap(x, n.regs[0]));
            let b = n.args.get(1).map_or(0, |&x| self.tap(x, n.regs[1]));
            self.values[v] = gate(n.kind, a, b);
        }
        let out = g.outputs.iter().map(|&o| self.values[o]).collect();
        for (v, chain) in self.chains.iter_mut().enumerate() {
            if chain.is_empty() {
                continue;
            }
            chain.rotate_right(1);
            chain[0] = self.values[v];
        }
        self.cycle += 1;
        Ok(out)
    }

    pub fn cycle(&self) -> u64 {
        self.cycle
    }
}

/// Input and output words for each simulated cycle.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimTrace {
    pub inputs: Vec<Vec<u64>>,
    pub outputs: Vec<Vec<u64>>,
}

/// Simulate a netlist over a sequence of input vectors, one per cycle.
pub fn simulate(net: &PipelinedNetlist, inputs: &[Vec<u64>]) -> Result<SimTrace, SimError> {
    let mut sim = CycleSim::new(net)?;
    let mut trace = SimTrace::default();
    for v in inputs {
        trace.outputs.push(sim.step(v)?);
        trace.inputs.push(v.clone());
    }
    Ok(trace)
}

/// Single-lane convenience wrapper over [`simulate`].
pub fn simulate_bits(
    net: &PipelinedNetlist,
    inputs: &[Vec<bool>],
) -> Result<Vec<Vec<bool>>, SimError> {
    let words: Vec<Vec<u64>> = inputs
        .iter()
        .map(|v| v.iter().map(|&b| u64::from(b)).collect())
        .collect();
    let trace = simulate(net, &words)?;
    Ok(trace
        .outputs
        .iter()
        .map(|o| o.iter().map(|&w| w & 1 == 1).collect())
        .collect())
}
