// SPDX-License-Identifier: Apache-2.0

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::sim::{CombEvaluator, CycleSim, SimError};
use crate::frontend::Dfg;
use crate::retimer::PipelinedNetlist;

/// Inputs up to this many bits are checked exhaustively.
pub const EXHAUSTIVE_LIMIT: usize = 16;

/// Mismatches kept in a report; the total is still counted.
pub const MISMATCH_CAP: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    /// Index of the input vector. Vectors run on 64 bit lanes, so vector
    /// `t` is applied in cycle `t / 64` on lane `t % 64`.
    pub trial: u64,
    /// Cycle in which the pipelined output was sampled.
    pub cycle: u64,
    pub output: String,
    pub expected: bool,
    pub got: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub equivalent: bool,
    pub exhaustive: bool,
    pub trials: u64,
    pub latency: u32,
    pub mismatch_count: u64,
    pub mismatches: Vec<Mismatch>,
}

/// Stream one input vector per cycle through `net` and compare every
/// output, `latency` cycles later, with the combinational value of `golden`.
///
/// All `2^n` vectors are used when the circuit has at most
/// [`EXHAUSTIVE_LIMIT`] inputs; otherwise `trials` vectors are drawn from a
/// ChaCha stream seeded with `seed`.
pub fn check_equivalence(
    net: &PipelinedNetlist,
    golden: &Dfg,
    trials: u64,
    seed: u64,
) -> Result<EquivalenceReport, SimError> {
    let g = &net.dfg;
    if g.input_names() != golden.input_names() {
        return Err(SimError::PortMismatch(format!(
            "inputs {:?} vs {:?}",
            g.input_names(),
            golden.input_names()
        )));
    }
    if g.output_names() != golden.output_names() {
        return Err(SimError::PortMismatch(format!(
            "outputs {:?} vs {:?}",
            g.output_names(),
            golden.output_names()
        )));
    }
    let n_in = g.inputs.len();
    let exhaustive = n_in <= EXHAUSTIVE_LIMIT;
    let total: u64 = if exhaustive { 1u64 << n_in } else { trials };
    let words = total.div_ceil(64);
    let latency = u64::from(net.latency);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut gen = |w: u64| -> Vec<u64> {
        if exhaustive {
            (0..n_in)
                .map(|bit| {
                    let mut word = 0u64;
                    for lane in 0..64u64 {
                        let idx = w * 64 + lane;
                        word |= ((idx >> bit) & 1) << lane;
                    }
                    word
                })
                .collect()
        } else {
            (0..n_in).map(|_| rng.next_u64()).collect()
        }
    };

    let mut sim = CycleSim::new(net)?;
    let mut gold = CombEvaluator::new(golden)?;
    let mut expected: std::collections::VecDeque<Vec<u64>> = Default::default();
    let mut report = EquivalenceReport {
        equivalent: true,
        exhaustive,
        trials: total,
        latency: net.latency,
        mismatch_count: 0,
        mismatches: Vec::new(),
    };
    let names = g.output_names();
    for cycle in 0..words + latency {
        let inputs = if cycle < words {
            gen(cycle)
        } else {
            vec![0; n_in]
        };
        if cycle < words {
            expected.push_back(gold.eval(&inputs)?);
        }
        let got = sim.step(&inputs)?;
        if cycle < latency {
            continue;
        }
        let applied = cycle - latency;
        let want = expected.pop_front().expect("one expectation per vector");
        let live = if (applied + 1) * 64 > total {
            let k = total - applied * 64;
            if k >= 64 {
                u64::MAX
            } else {
                (1u64 << k) - 1
            }
        } else {
            u64::MAX
        };
        for (o, (&w, &x)) in want.iter().zip(&got).enumerate() {
            let diff = (w ^ x) & live;
            if diff == 0 {
                continue;
            }
            report.equivalent = false;
            report.mismatch_count += u64::from(diff.count_ones());
            let mut d = diff;
            while d != 0 && report.mismatches.len() < MISMATCH_CAP {
                let lane = u64::from(d.trailing_zeros());
                d &= d - 1;
                report.mismatches.push(Mismatch {
                    trial: applied * 64 + lane,
                    cycle,
                    output: names[o].to_string(),
                    expected: (w >> lane) & 1 == 1,
                    got: (x >> lane) & 1 == 1,
                });
            }
        }
    }
    Ok(report)
}
