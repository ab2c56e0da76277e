// SPDX-License-Identifier: Apache-2.0

use std::collections::HashSet;
use std::fmt;

use super::wd::PathMatrices;
use crate::hlsmodel::{HlsModel, ModelNodeId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstraintKind {
    Feasibility,
    CriticalPath,
    LockEquality,
}

/// `r(lhs) - r(rhs) <= bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DiffConstraint {
    pub lhs: ModelNodeId,
    pub rhs: ModelNodeId,
    pub bound: i64,
    pub kind: ConstraintKind,
}

impl DiffConstraint {
    pub fn holds(&self, labels: &[i64]) -> bool {
        labels[self.lhs] - labels[self.rhs] <= self.bound
    }

    /// `r(x) - r(y) <= k` using model node names.
    pub fn display<'a>(&'a self, model: &'a HlsModel) -> impl fmt::Display + 'a {
        DisplayConstraint { c: self, model }
    }
}

struct DisplayConstraint<'a> {
    c: &'a DiffConstraint,
    model: &'a HlsModel,
}

impl fmt::Display for DisplayConstraint<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "r({}) - r({}) <= {}",
            self.model.nodes[self.c.lhs].name, self.model.nodes[self.c.rhs].name, self.c.bound
        )
    }
}

/// All retiming constraints of the model, with exact duplicates removed
/// (first occurrence kept).
///
/// With retimed weight `w_r(u -> v) = w + r(u) - r(v)`:
/// every edge gives `r(v) - r(u) <= w`; every ordered pair whose `D` exceeds
/// one clock period gives `r(v) - r(u) <= W(u, v) - 1`; every lock gives
/// `r(Lin) = r(Lout)` as two opposed inequalities.
pub fn gen_constraints(model: &HlsModel, wd: &PathMatrices) -> Vec<DiffConstraint> {
    let mut out = Vec::new();
    let mut seen: HashSet<(ModelNodeId, ModelNodeId, i64)> = HashSet::new();
    let mut push = |out: &mut Vec<DiffConstraint>, c: DiffConstraint, record: bool| {
        let key = (c.lhs, c.rhs, c.bound);
        let fresh = if record {
            seen.insert(key)
        } else {
            !seen.contains(&key)
        };
        if fresh {
            out.push(c);
        }
    };
    for e in &model.edges {
        let c = DiffConstraint {
            lhs: e.to,
            rhs: e.from,
            bound: i64::from(e.weight),
            kind: ConstraintKind::Feasibility,
        };
        push(&mut out, c, true);
    }
    for l in &model.locks {
        for (a, b) in [(l.lock_in, l.lock_out), (l.lock_out, l.lock_in)] {
            let c = DiffConstraint {
                lhs: a,
                rhs: b,
                bound: 0,
                kind: ConstraintKind::LockEquality,
            };
            push(&mut out, c, true);
        }
    }
    // Critical-path pairs are unique per ordered pair, so they only need
    // checking against the constraints above.
    let n = model.len();
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let (Some(w), Some(d)) = (wd.w(u, v), wd.d(u, v)) else {
                continue;
            };
            if d > 1 {
                let c = DiffConstraint {
                    lhs: v,
                    rhs: u,
                    bound: i64::from(w) - 1,
                    kind: ConstraintKind::CriticalPath,
                };
                push(&mut out, c, false);
            }
        }
    }
    out
}

/// Text form, one constraint per line, sorted lexicographically.
pub fn format_constraints(model: &HlsModel, cs: &[DiffConstraint]) -> String {
    let mut lines: Vec<String> = cs.iter().map(|c| c.display(model).to_string()).collect();
    lines.sort();
    let mut s = lines.join("\n");
    s.push('\n');
    s
}
