// SPDX-License-Identifier: Apache-2.0

//! Two-share masked AND gadgets and the pass that masks a whole circuit.

mod masking;
mod matcher;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Deserialize;

use crate::frontend::{Dfg, JsonNetlist, NodeId, NodeKind};

pub use masking::{apply_masking_pass, share_separation_violations, ShareViolation};
pub use matcher::{annotate_gadgets, find_gadget_instances};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GadgetKind {
    Dom,
    Hpc1,
    Hpc2,
    Comar,
}

impl GadgetKind {
    pub const ALL: [GadgetKind; 4] = [
        GadgetKind::Dom,
        GadgetKind::Hpc1,
        GadgetKind::Hpc2,
        GadgetKind::Comar,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GadgetKind::Dom => "dom",
            GadgetKind::Hpc1 => "hpc1",
            GadgetKind::Hpc2 => "hpc2",
            GadgetKind::Comar => "comar",
        }
    }

    pub fn template(self) -> &'static GadgetTemplate {
        static CELLS: [OnceLock<GadgetTemplate>; 4] = [
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
        ];
        let (idx, text) = match self {
            GadgetKind::Dom => (0, include_str!("../../gadgets/v1/dom.json")),
            GadgetKind::Hpc1 => (1, include_str!("../../gadgets/v1/hpc1.json")),
            GadgetKind::Hpc2 => (2, include_str!("../../gadgets/v1/hpc2.json")),
            GadgetKind::Comar => (3, include_str!("../../gadgets/v1/comar.json")),
        };
        CELLS[idx].get_or_init(|| GadgetTemplate::from_json(self, text))
    }

    /// Fresh random bits consumed by one instance.
    pub fn random_count(self) -> usize {
        self.template().randoms.len()
    }

    /// Registered nodes in one instance.
    pub fn annotated_count(self) -> usize {
        self.template().dfg.annotated_count()
    }
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GadgetKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "dom" | "domand" => Ok(GadgetKind::Dom),
            "hpc1" => Ok(GadgetKind::Hpc1),
            "hpc2" => Ok(GadgetKind::Hpc2),
            "comar" => Ok(GadgetKind::Comar),
            other => Err(format!(
                "unknown gadget `{other}` (expected dom, hpc1, hpc2 or comar)"
            )),
        }
    }
}

/// A gadget as a small netlist whose first four inputs are the shares
/// `a0 a1 b0 b1`, followed by the random inputs, with outputs `c0 c1`.
#[derive(Debug, Clone)]
pub struct GadgetTemplate {
    pub kind: GadgetKind,
    pub randoms: Vec<String>,
    pub note: String,
    pub dfg: Dfg,
}

#[derive(Deserialize)]
struct TemplateFile {
    gadget: String,
    #[serde(default)]
    note: String,
    share_inputs: Vec<String>,
    randoms: Vec<String>,
    #[serde(flatten)]
    netlist: JsonNetlist,
}

impl GadgetTemplate {
    fn from_json(kind: GadgetKind, text: &str) -> Self {
        let file: TemplateFile = serde_json::from_str(text).expect("bundled template parses");
        assert_eq!(file.gadget, kind.as_str(), "template file for wrong gadget");
        assert_eq!(file.share_inputs, ["a0", "a1", "b0", "b1"]);
        let dfg = file
            .netlist
            .to_dfg()
            .expect("bundled template is a netlist");
        assert_eq!(dfg.inputs.len(), 4 + file.randoms.len());
        assert_eq!(dfg.outputs.len(), 2);
        GadgetTemplate {
            kind,
            randoms: file.randoms,
            note: file.note,
            dfg,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetInstance {
    pub kind: GadgetKind,
    /// `a0, a1, b0, b1`.
    pub share_inputs: [NodeId; 4],
    pub random_inputs: Vec<NodeId>,
    /// `c0, c1`.
    pub share_outputs: [NodeId; 2],
    /// Registered nodes, ascending.
    pub annotated_nodes: Vec<NodeId>,
    /// Every operator node belonging to the instance, ascending.
    pub nodes: Vec<NodeId>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GadgetError {
    #[error("{kind} gadget needs {expected} random input(s), got {got}")]
    RandomArity {
        kind: GadgetKind,
        expected: usize,
        got: usize,
    },
    #[error("masking expects an unannotated circuit, but node {0} is registered")]
    AnnotatedInput(NodeId),
    #[error("masking expects a circuit without registers, but node {0} has one on an operand")]
    EdgeRegisters(NodeId),
    #[error("circuit is not valid: {0}")]
    Invalid(String),
}

/// Splice one gadget into `g`, reading shares from `shares` (`a0 a1 b0 b1`).
/// Internal nodes are named `<prefix>_<template wire>`.
pub fn instantiate_gadget(
    g: &mut Dfg,
    kind: GadgetKind,
    shares: [NodeId; 4],
    randoms: &[NodeId],
    prefix: &str,
) -> Result<GadgetInstance, GadgetError> {
    let t = kind.template();
    if randoms.len() != t.randoms.len() {
        return Err(GadgetError::RandomArity {
            kind,
            expected: t.randoms.len(),
            got: randoms.len(),
        });
    }
    let td = &t.dfg;
    let mut map = vec![usize::MAX; td.len()];
    for (i, &inp) in td.inputs.iter().enumerate() {
        map[inp] = if i < 4 { shares[i] } else { randoms[i - 4] };
    }
    let mut nodes = Vec::new();
    let mut annotated = Vec::new();
    let order = td.topo_order().expect("template is acyclic");
    for tid in order {
        let tn = &td.nodes[tid];
        if !tn.kind.is_operation() {
            continue;
        }
        let args: Vec<NodeId> = tn.args.iter().map(|&a| map[a]).collect();
        let name = format!("{prefix}_{}", td.wire_name(tid));
        let id = g.add_named_op(tn.kind, &args, tn.annotated, name);
        map[tid] = id;
        nodes.push(id);
        if tn.annotated {
            annotated.push(id);
        }
    }
    let out = |k: usize| map[td.nodes[td.outputs[k]].args[0]];
    nodes.sort_unstable();
    annotated.sort_unstable();
    Ok(GadgetInstance {
        kind,
        share_inputs: shares,
        random_inputs: randoms.to_vec(),
        share_outputs: [out(0), out(1)],
        annotated_nodes: annotated,
        nodes,
    })
}

/// Operator nodes of a template, for documentation and inspection.
pub fn template_listing(kind: GadgetKind) -> String {
    let td = &kind.template().dfg;
    let mut s = String::new();
    for n in &td.nodes {
        if !n.kind.is_operation() {
            continue;
        }
        let args: Vec<String> = n.args.iter().map(|&a| td.label(a)).collect();
        let rhs = match n.kind {
            NodeKind::Not => format!("~{}", args[0]),
            NodeKind::And => format!("{} & {}", args[0], args[1]),
            _ => format!("{} ^ {}", args[0], args[1]),
        };
        if n.annotated {
            s.push_str(&format!("{} = reg({rhs});\n", td.label(n.id)));
        } else {
            s.push_str(&format!("{} = {rhs};\n", td.label(n.id)));
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn annotation_counts_per_gadget() {
        let counts: Vec<usize> = GadgetKind::ALL
            .iter()
            .map(|k| k.annotated_count())
            .collect();
        assert_eq!(counts, vec![2, 4, 6, 7]);
        let randoms: Vec<usize> = GadgetKind::ALL.iter().map(|k| k.random_count()).collect();
        assert_eq!(randoms, vec![1, 2, 1, 6]);
    }

    #[test]
    fn random_arity_is_checked() {
        let mut g = Dfg::new("t");
        let ins: Vec<NodeId> = (0..4).map(|i| g.add_input(format!("x{i}"))).collect();
        let e = instantiate_gadget(
            &mut g,
            GadgetKind::Dom,
            [ins[0], ins[1], ins[2], ins[3]],
            &[],
            "g",
        )
        .unwrap_err();
        assert!(matches!(
            e,
            GadgetError::RandomArity {
                expected: 1,
                got: 0,
                ..
            }
        ));
    }

    #[test]
    fn names_parse() {
        assert_eq!("HPC2".parse::<GadgetKind>().unwrap(), GadgetKind::Hpc2);
        assert!("bogus".parse::<GadgetKind>().is_err());
    }
}
