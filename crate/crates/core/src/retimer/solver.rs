// SPDX-License-Identifier: Apache-2.0

use std::collections::VecDeque;

use super::constraints::DiffConstraint;

/// Retiming labels, indexed by model node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RetimingSolution {
    pub labels: Vec<i64>,
}

impl RetimingSolution {
    pub fn satisfies(&self, cs: &[DiffConstraint]) -> bool {
        cs.iter().all(|c| c.holds(&self.labels))
    }

    pub fn violated<'a>(&self, cs: &'a [DiffConstraint]) -> Vec<&'a DiffConstraint> {
        cs.iter().filter(|c| !c.holds(&self.labels)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("constraint graph has a negative cycle through nodes {cycle:?}")]
    NegativeCycle { cycle: Vec<usize> },
    #[error("constraint mentions node {node} but only {n} nodes exist")]
    NodeOutOfRange { node: usize, n: usize },
}

/// Solve a system of difference constraints over `n` labels.
///
/// Each `r(a) - r(b) <= k` is an edge `b -> a` of weight `k`; a virtual
/// root reaches every node with weight 0, and the labels are the shortest
/// distances from it. Edges may be negative, so this is a FIFO
/// label-correcting search with path-length cycle detection. The result is
/// the componentwise largest solution with all labels at most 0.
pub fn solve_constraints(cs: &[DiffConstraint], n: usize) -> Result<RetimingSolution, SolveError> {
    for c in cs {
        for node in [c.lhs, c.rhs] {
            if node >= n {
                return Err(SolveError::NodeOutOfRange { node, n });
            }
        }
    }
    // Compressed adjacency.
    let mut start = vec![0usize; n + 1];
    for c in cs {
        start[c.rhs + 1] += 1;
    }
    for i in 0..n {
        start[i + 1] += start[i];
    }
    let mut fill = start.clone();
    let mut to = vec![0usize; cs.len()];
    let mut wt = vec![0i64; cs.len()];
    for c in cs {
        let k = fill[c.rhs];
        to[k] = c.lhs;
        wt[k] = c.bound;
        fill[c.rhs] += 1;
    }

    let mut dist = vec![0i64; n];
    let mut hops = vec![0usize; n];
    let mut pred = vec![usize::MAX; n];
    let mut queued = vec![true; n];
    let mut queue: VecDeque<usize> = (0..n).collect();
    while let Some(u) = queue.pop_front() {
        queued[u] = false;
        for k in start[u]..start[u + 1] {
            let v = to[k];
            let cand = dist[u] + wt[k];
            if cand < dist[v] {
                dist[v] = cand;
                pred[v] = u;
                hops[v] = hops[u] + 1;
                if hops[v] >= n {
                    return Err(SolveError::NegativeCycle {
                        cycle: extract_cycle(&pred, v),
                    });
                }
                if !queued[v] {
                    queued[v] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    Ok(RetimingSolution { labels: dist })
}

fn extract_cycle(pred: &[usize], from: usize) -> Vec<usize> {
    let mut first_seen = vec![usize::MAX; pred.len()];
    let mut walk = Vec::new();
    let mut v = from;
    while v != usize::MAX {
        if first_seen[v] != usize::MAX {
            let mut cycle = walk[first_seen[v]..].to_vec();
            cycle.reverse();
            return cycle;
        }
        first_seen[v] = walk.len();
        walk.push(v);
        v = pred[v];
    }
    walk.reverse();
    walk
}
