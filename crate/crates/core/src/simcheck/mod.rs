// SPDX-License-Identifier: Apache-2.0

//! Simulation, equivalence and balance checks, and the full-cut baseline.

mod balance;
mod equiv;
mod naive;
mod sim;

pub use balance::{check_balance, BalanceReport, UnbalancedWitness};
pub use equiv::{check_equivalence, EquivalenceReport, Mismatch, EXHAUSTIVE_LIMIT, MISMATCH_CAP};
pub use naive::{logic_depths, naive_balance};
pub use sim::{eval_comb, simulate, simulate_bits, CombEvaluator, CycleSim, SimError, SimTrace};

use serde::Serialize;

/// Savings of the balanced netlist over the baseline, in percent of the
/// baseline: `(baseline - ours) / baseline * 100`.
pub fn savings_pct(ours: u32, baseline: u32) -> f64 {
    if baseline == 0 {
        0.0
    } else {
        (f64::from(baseline) - f64::from(ours)) / f64::from(baseline) * 100.0
    }
}

/// Combined check result in the interchange layout.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub equivalent: bool,
    pub trials: u64,
    pub mismatches: Vec<Mismatch>,
    pub latency: u32,
    pub registers: u32,
    pub naive_registers: u32,
    pub naive_latency: u32,
    pub savings_regs_pct: f64,
    pub savings_latency_pct: f64,
}

impl CheckReport {
    pub fn new(
        eq: &EquivalenceReport,
        registers: u32,
        latency: u32,
        naive_registers: u32,
        naive_latency: u32,
    ) -> Self {
        CheckReport {
            equivalent: eq.equivalent,
            trials: eq.trials,
            mismatches: eq.mismatches.clone(),
            latency,
            registers,
            naive_registers,
            naive_latency,
            savings_regs_pct: savings_pct(registers, naive_registers),
            savings_latency_pct: savings_pct(latency, naive_latency),
        }
    }
}
