// SPDX-License-Identifier: Apache-2.0

//! Recognise gadget instances in an already masked, unannotated circuit so
//! their register positions can be annotated in place.

use std::collections::HashSet;

use super::{GadgetInstance, GadgetKind};
use crate::frontend::{Dfg, NodeId, NodeKind};

#[derive(Clone)]
struct State {
    /// Template node -> circuit node.
    bind: Vec<Option<NodeId>>,
    /// Circuit nodes claimed by template operators.
    used: HashSet<NodeId>,
    /// Circuit nodes feeding the instance. Two template inputs may share
    /// one, as in `x & x`.
    feeds: HashSet<NodeId>,
    /// Template op nodes still to check against their bound circuit node.
    pending: Vec<usize>,
}

struct Matcher<'a> {
    t: &'a Dfg,
    g: &'a Dfg,
    taken: &'a [bool],
}

impl Matcher<'_> {
    fn try_bind(&self, st: &mut State, tn: usize, v: NodeId) -> bool {
        match st.bind[tn] {
            Some(b) => b == v,
            None => {
                if st.used.contains(&v) {
                    return false;
                }
                let tk = self.t.nodes[tn].kind;
                if !tk.is_operation() {
                    st.feeds.insert(v);
                } else {
                    if st.feeds.contains(&v) {
                        return false;
                    }
                    let gn = &self.g.nodes[v];
                    if gn.kind != tk || gn.annotated || self.taken[v] {
                        return false;
                    }
                    if gn.regs.iter().any(|&r| r > 0) {
                        return false;
                    }
                    st.pending.push(tn);
                    st.used.insert(v);
                }
                st.bind[tn] = Some(v);
                true
            }
        }
    }

    fn solve(&self, mut st: State) -> Option<State> {
        let Some(tn) = st.pending.pop() else {
            return Some(st);
        };
        let v = st.bind[tn].expect("pending nodes are bound");
        let targs = &self.t.nodes[tn].args;
        let gargs = &self.g.nodes[v].args;
        let orders: &[&[usize]] = if targs.len() == 2 {
            &[&[0, 1], &[1, 0]]
        } else {
            &[&[0]]
        };
        for perm in orders {
            let mut s = st.clone();
            let ok = targs
                .iter()
                .zip(perm.iter())
                .all(|(&ta, &gi)| self.try_bind(&mut s, ta, gargs[gi]));
            if ok {
                if let Some(done) = self.solve(s) {
                    return Some(done);
                }
            }
        }
        None
    }
}

/// Find disjoint instances of `kind` in `g`, scanning candidate `c0` roots
/// in id order. Internal gadget nodes may not feed anything outside the
/// instance.
pub fn find_gadget_instances(g: &Dfg, kind: GadgetKind) -> Vec<GadgetInstance> {
    let t = &kind.template().dfg;
    let root = |k: usize| t.nodes[t.outputs[k]].args[0];
    let (t0, t1) = (root(0), root(1));
    let fan = g.fanouts();
    let mut taken = vec![false; g.len()];
    let mut found = Vec::new();

    for v0 in 0..g.len() {
        if g.nodes[v0].kind != t.nodes[t0].kind || taken[v0] {
            continue;
        }
        let m = Matcher {
            t,
            g,
            taken: &taken,
        };
        let mut st = State {
            bind: vec![None; t.len()],
            used: HashSet::new(),
            feeds: HashSet::new(),
            pending: Vec::new(),
        };
        if !m.try_bind(&mut st, t0, v0) {
            continue;
        }
        // Cheap filter: the c0 cone alone must match somewhere.
        if m.solve(st.clone()).is_none() {
            continue;
        }
        let mut matched = None;
        for v1 in 0..g.len() {
            let mut s = st.clone();
            if !m.try_bind(&mut s, t1, v1) {
                continue;
            }
            if let Some(done) = m.solve(s) {
                if closed(t, &fan, &done) {
                    matched = Some(done);
                    break;
                }
            }
        }
        let Some(st) = matched else {
            continue;
        };
        let bind = |tn: usize| st.bind[tn].expect("every template node is bound");
        let mut nodes = Vec::new();
        let mut annotated = Vec::new();
        for tn in &t.nodes {
            if tn.kind.is_operation() {
                let v = bind(tn.id);
                nodes.push(v);
                taken[v] = true;
                if tn.annotated {
                    annotated.push(v);
                }
            }
        }
        nodes.sort_unstable();
        annotated.sort_unstable();
        let ins = &t.inputs;
        found.push(GadgetInstance {
            kind,
            share_inputs: [bind(ins[0]), bind(ins[1]), bind(ins[2]), bind(ins[3])],
            random_inputs: ins[4..].iter().map(|&i| bind(i)).collect(),
            share_outputs: [bind(t0), bind(t1)],
            annotated_nodes: annotated,
            nodes,
        });
    }
    found
}

/// Internal nodes of a match must only feed other nodes of the match.
fn closed(t: &Dfg, fan: &[Vec<(NodeId, usize)>], st: &State) -> bool {
    let members: HashSet<NodeId> = t
        .nodes
        .iter()
        .filter(|n| n.kind.is_operation())
        .filter_map(|n| st.bind[n.id])
        .collect();
    let roots: HashSet<NodeId> = t
        .outputs
        .iter()
        .filter_map(|&o| st.bind[t.nodes[o].args[0]])
        .collect();
    members
        .iter()
        .filter(|v| !roots.contains(v))
        .all(|&v| fan[v].iter().all(|(d, _)| members.contains(d)))
}

/// Annotate every instance of `kind` found in `g`. Succeeds only if every
/// AND node of `g` belongs to some instance, so the circuit is fully
/// accounted for by gadgets; otherwise returns `None` and leaves `g` as is.
pub fn annotate_gadgets(g: &Dfg, kind: GadgetKind) -> Option<(Dfg, Vec<GadgetInstance>)> {
    let instances = find_gadget_instances(g, kind);
    let mut covered = vec![false; g.len()];
    for inst in &instances {
        for &v in &inst.nodes {
            covered[v] = true;
        }
    }
    let all_ands = g
        .nodes
        .iter()
        .filter(|n| n.kind == NodeKind::And)
        .all(|n| covered[n.id]);
    if instances.is_empty() || !all_ands {
        return None;
    }
    let mut out = g.clone();
    for inst in &instances {
        for &v in &inst.annotated_nodes {
            out.nodes[v].annotated = true;
        }
    }
    Some((out, instances))
}
