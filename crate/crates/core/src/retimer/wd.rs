// SPDX-License-Identifier: Apache-2.0

use rayon::prelude::*;

use crate::hlsmodel::{HlsModel, ModelNodeId};

/// Marks "no path" in [`PathMatrices`].
pub const NO_PATH: u32 = u32::MAX;

/// For every ordered pair `(u, v)`: `W` is the fewest registers on any
/// `u -> v` path and `D` the largest total delay among the paths achieving
/// `W`, counting both end points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathMatrices {
    n: usize,
    w: Vec<u32>,
    d: Vec<u32>,
}

impl PathMatrices {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn w(&self, u: ModelNodeId, v: ModelNodeId) -> Option<u32> {
        let x = self.w[u * self.n + v];
        (x != NO_PATH).then_some(x)
    }

    pub fn d(&self, u: ModelNodeId, v: ModelNodeId) -> Option<u32> {
        self.w(u, v).map(|_| self.d[u * self.n + v])
    }
}

/// Better in the lexicographic (fewest registers, then longest delay) order.
fn better(w: u32, d: u32, bw: u32, bd: u32) -> bool {
    w < bw || (w == bw && d > bd)
}

/// Compute `W` and `D` for the model.
///
/// The model without its back edge is a DAG, so each row is one dynamic
/// program in topological order; rows run in parallel. Routes through the
/// back edge are then folded in: `u -> sink -> source -> v`. The back edge
/// stands for the environment, which captures outputs and launches inputs,
/// so delay does not accumulate across it: such a route's delay is the
/// larger of its two halves.
pub fn compute_wd(model: &HlsModel) -> PathMatrices {
    let n = model.len();
    let order = model.forward_order();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut preds: Vec<Vec<(ModelNodeId, u32)>> = vec![Vec::new(); n];
    for (i, e) in model.edges.iter().enumerate() {
        if i != model.back_edge {
            preds[e.to].push((e.from, e.weight));
        }
    }
    let delay: Vec<u32> = model.nodes.iter().map(|x| x.delay).collect();

    let rows: Vec<(Vec<u32>, Vec<u32>)> = (0..n)
        .into_par_iter()
        .map(|u| {
            let mut w = vec![NO_PATH; n];
            let mut d = vec![0u32; n];
            w[u] = 0;
            d[u] = delay[u];
            for &v in &order[pos[u] + 1..] {
                for &(p, wt) in &preds[v] {
                    if w[p] == NO_PATH {
                        continue;
                    }
                    let (cw, cd) = (w[p] + wt, d[p] + delay[v]);
                    if w[v] == NO_PATH || better(cw, cd, w[v], d[v]) {
                        w[v] = cw;
                        d[v] = cd;
                    }
                }
            }
            (w, d)
        })
        .collect();

    let mut w = Vec::with_capacity(n * n);
    let mut d = Vec::with_capacity(n * n);
    for (rw, rd) in &rows {
        w.extend_from_slice(rw);
        d.extend_from_slice(rd);
    }

    let m = model.back_edge_weight();
    let (src, snk) = (model.source, model.sink);
    let to_sink: Vec<(u32, u32)> = (0..n).map(|u| (rows[u].0[snk], rows[u].1[snk])).collect();
    let (from_w, from_d) = (&rows[src].0, &rows[src].1);
    for (u, &(uw, ud)) in to_sink.iter().enumerate() {
        if uw == NO_PATH {
            continue;
        }
        for v in 0..n {
            if u == v || from_w[v] == NO_PATH {
                continue;
            }
            let cw = uw + m + from_w[v];
            let cd = ud.max(from_d[v]);
            let k = u * n + v;
            if w[k] == NO_PATH || better(cw, cd, w[k], d[k]) {
                w[k] = cw;
                d[k] = cd;
            }
        }
    }
    PathMatrices { n, w, d }
}
