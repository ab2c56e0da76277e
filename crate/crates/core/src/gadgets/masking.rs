// SPDX-License-Identifier: Apache-2.0

use std::collections::{BTreeSet, HashMap};

use super::{instantiate_gadget, GadgetError, GadgetInstance, GadgetKind};
use crate::frontend::{validate_dfg, Dfg, NodeId, NodeKind};

/// Rewrite an unmasked circuit into its two-share masked form.
///
/// Every input `x` becomes `x_s0, x_s1`; linear gates act share-wise, NOT
/// flips share 0 only, and every AND becomes one gadget of `kind`. Random
/// bits become extra inputs after all share inputs, named `g<k>_<r>` for
/// gadget `k` (or `m_<r>` when COMAR instances share one mask set).
pub fn apply_masking_pass(
    unmasked: &Dfg,
    kind: GadgetKind,
    share_all_randoms: bool,
) -> Result<(Dfg, Vec<GadgetInstance>), GadgetError> {
    let diags = validate_dfg(unmasked);
    if let Some(d) = diags.first() {
        return Err(GadgetError::Invalid(d.to_string()));
    }
    for n in &unmasked.nodes {
        if n.annotated {
            return Err(GadgetError::AnnotatedInput(n.id));
        }
        if n.regs.iter().any(|&r| r > 0) {
            return Err(GadgetError::EdgeRegisters(n.id));
        }
    }
    let order = unmasked.topo_order().expect("validated graph is acyclic");
    let shared = share_all_randoms && kind == GadgetKind::Comar;
    let template_randoms = &kind.template().randoms;

    let mut g = Dfg::new(unmasked.name.clone());
    let mut shares: HashMap<NodeId, [NodeId; 2]> = HashMap::new();
    for &i in &unmasked.inputs {
        let name = unmasked.wire_name(i);
        let s0 = g.add_input(format!("{name}_s0"));
        let s1 = g.add_input(format!("{name}_s1"));
        shares.insert(i, [s0, s1]);
    }

    let ands: Vec<NodeId> = order
        .iter()
        .copied()
        .filter(|&v| unmasked.nodes[v].kind == NodeKind::And)
        .collect();
    let mut randoms: HashMap<NodeId, Vec<NodeId>> = HashMap::new();
    if shared && !ands.is_empty() {
        let set: Vec<NodeId> = template_randoms
            .iter()
            .map(|r| g.add_input(format!("m_{r}")))
            .collect();
        for &a in &ands {
            randoms.insert(a, set.clone());
        }
    } else {
        for (k, &a) in ands.iter().enumerate() {
            let set = template_randoms
                .iter()
                .map(|r| g.add_input(format!("g{}_{r}", k + 1)))
                .collect();
            randoms.insert(a, set);
        }
    }

    let share_name =
        |v: NodeId, s: usize| unmasked.nodes[v].name.as_ref().map(|n| format!("{n}_s{s}"));
    let mut instances = Vec::new();
    for v in order {
        let n = &unmasked.nodes[v];
        let pair = match n.kind {
            NodeKind::Input | NodeKind::Output => continue,
            NodeKind::Const0 => [g.add_const(false), g.add_const(false)],
            NodeKind::Const1 => [g.add_const(true), g.add_const(false)],
            NodeKind::Xor => {
                let a = shares[&n.args[0]];
                let b = shares[&n.args[1]];
                let s0 = g.add_op(NodeKind::Xor, &[a[0], b[0]], false);
                let s1 = g.add_op(NodeKind::Xor, &[a[1], b[1]], false);
                [s0, s1]
            }
            NodeKind::Not => {
                let a = shares[&n.args[0]];
                [g.add_op(NodeKind::Not, &[a[0]], false), a[1]]
            }
            NodeKind::And => {
                let a = shares[&n.args[0]];
                let b = shares[&n.args[1]];
                let k = instances.len() + 1;
                let inst = instantiate_gadget(
                    &mut g,
                    kind,
                    [a[0], a[1], b[0], b[1]],
                    &randoms[&v],
                    &format!("g{k}"),
                )?;
                let out = inst.share_outputs;
                instances.push(inst);
                out
            }
        };
        for (s, &id) in pair.iter().enumerate() {
            // Name fresh share-wise nodes after the unmasked wire; aliases keep theirs.
            let fresh = g.nodes[id].kind.is_operation() && !(n.kind == NodeKind::Not && s == 1);
            if fresh {
                if let Some(name) = share_name(v, s) {
                    g.nodes[id].name = Some(name);
                }
            }
        }
        shares.insert(v, pair);
    }
    for &o in &unmasked.outputs {
        let name = unmasked.wire_name(o);
        let d = shares[&unmasked.nodes[o].args[0]];
        g.add_output(format!("{name}_s0"), d[0], 0);
        g.add_output(format!("{name}_s1"), d[1], 0);
    }
    Ok((g, instances))
}

/// Split a share input name `x_s0` into `("x", 0)`.
fn share_of(name: &str) -> Option<(&str, u8)> {
    let (base, s) = name.rsplit_once("_s")?;
    match s {
        "0" => Some((base, 0)),
        "1" => Some((base, 1)),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShareViolation {
    pub node: NodeId,
    pub secret: String,
}

/// Nodes whose register-free input cone mixes both shares of one secret.
///
/// Share inputs are recognised by their `_s0`/`_s1` suffix. A registered
/// node or an operand register cuts the cone, so glitches from before the
/// register cannot reach the node.
pub fn share_separation_violations(g: &Dfg) -> Vec<ShareViolation> {
    let Some(order) = g.topo_order() else {
        return Vec::new();
    };
    let mut cone: Vec<BTreeSet<(String, u8)>> = vec![BTreeSet::new(); g.len()];
    let mut out = Vec::new();
    for v in order {
        let n = &g.nodes[v];
        let mut set = BTreeSet::new();
        if n.kind == NodeKind::Input {
            if let Some((base, s)) = share_of(g.wire_name(v)) {
                set.insert((base.to_string(), s));
            }
        }
        for (&a, &r) in n.args.iter().zip(&n.regs) {
            if r == 0 && !g.nodes[a].annotated {
                set.extend(cone[a].iter().cloned());
            }
        }
        if n.kind.is_operation() {
            if let Some((secret, _)) = set
                .iter()
                .find(|(s, sh)| *sh == 0 && set.contains(&(s.clone(), 1)))
            {
                out.push(ShareViolation {
                    node: v,
                    secret: secret.clone(),
                });
            }
        }
        cone[v] = set;
    }
    out
}
