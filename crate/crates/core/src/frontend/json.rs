// SPDX-License-Identifier: Apache-2.0

//! JSON netlist interchange format.
//!
//! ```json
//! {"name": "f", "inputs": ["a", "b"], "outputs": ["y"],
//!  "nodes": [{"id": 0, "kind": "INPUT", "name": "a"},
//!            {"id": 1, "kind": "INPUT", "name": "b"},
//!            {"id": 2, "kind": "AND", "args": [0, 1], "reg": true},
//!            {"id": 3, "kind": "OUTPUT", "args": [2], "name": "y"}]}
//! ```
//!
//! Ids may be arbitrary integers; they are renumbered densely in the order
//! the nodes appear. `arg_regs` optionally carries registers per operand.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::dfg::{Dfg, Node, NodeKind};
use super::ParseError;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JsonNetlist {
    #[serde(default)]
    pub name: String,
    pub inputs: Vec<PortRef>,
    pub outputs: Vec<PortRef>,
    pub nodes: Vec<JsonNode>,
}

/// A port is referenced by wire name or by node id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PortRef {
    Id(u64),
    Name(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JsonNode {
    pub id: u64,
    pub kind: String,
    #[serde(default)]
    pub args: Vec<u64>,
    #[serde(default)]
    pub reg: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arg_regs: Option<Vec<u32>>,
}

fn bad(message: impl Into<String>) -> ParseError {
    ParseError::Json(message.into())
}

impl JsonNetlist {
    pub fn from_dfg(g: &Dfg) -> Self {
        JsonNetlist {
            name: g.name.clone(),
            inputs: g
                .inputs
                .iter()
                .map(|&i| PortRef::Name(g.wire_name(i).to_string()))
                .collect(),
            outputs: g
                .outputs
                .iter()
                .map(|&i| PortRef::Name(g.wire_name(i).to_string()))
                .collect(),
            nodes: g
                .nodes
                .iter()
                .map(|n| JsonNode {
                    id: n.id as u64,
                    kind: n.kind.as_str().to_string(),
                    args: n.args.iter().map(|&a| a as u64).collect(),
                    reg: n.annotated,
                    name: n.name.clone(),
                    arg_regs: n.regs.iter().any(|&r| r > 0).then(|| n.regs.clone()),
                })
                .collect(),
        }
    }

    pub fn to_dfg(&self) -> Result<Dfg, ParseError> {
        let mut index: HashMap<u64, usize> = HashMap::new();
        for (i, n) in self.nodes.iter().enumerate() {
            if index.insert(n.id, i).is_some() {
                return Err(bad(format!("duplicate node id {}", n.id)));
            }
        }
        let mut g = Dfg::new(self.name.clone());
        for (i, n) in self.nodes.iter().enumerate() {
            let kind = NodeKind::parse(&n.kind.to_ascii_uppercase())
                .ok_or_else(|| bad(format!("node {}: unknown kind `{}`", n.id, n.kind)))?;
            let args =
                n.args
                    .iter()
                    .map(|a| {
                        index.get(a).copied().ok_or_else(|| {
                            bad(format!("node {}: operand {a} does not exist", n.id))
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
            let regs = match &n.arg_regs {
                Some(r) if r.len() == args.len() => r.clone(),
                Some(_) => {
                    return Err(bad(format!(
                        "node {}: arg_regs length differs from args",
                        n.id
                    )))
                }
                None => vec![0; args.len()],
            };
            g.nodes.push(Node {
                id: i,
                kind,
                args,
                regs,
                annotated: n.reg,
                name: n.name.clone(),
            });
        }
        let resolve = |p: &PortRef, kind: NodeKind| -> Result<usize, ParseError> {
            let found = match p {
                PortRef::Id(id) => index.get(id).copied(),
                PortRef::Name(s) => g
                    .nodes
                    .iter()
                    .find(|n| n.kind == kind && n.name.as_deref() == Some(s.as_str()))
                    .map(|n| n.id),
            };
            match found {
                Some(i) if g.nodes[i].kind == kind => Ok(i),
                _ => Err(bad(format!("port {p:?} is not a {kind} node"))),
            }
        };
        let inputs = self
            .inputs
            .iter()
            .map(|p| resolve(p, NodeKind::Input))
            .collect::<Result<Vec<_>, _>>()?;
        let outputs = self
            .outputs
            .iter()
            .map(|p| resolve(p, NodeKind::Output))
            .collect::<Result<Vec<_>, _>>()?;
        g.inputs = inputs;
        g.outputs = outputs;
        Ok(g)
    }
}

pub fn parse_json_netlist(text: &str) -> Result<Dfg, ParseError> {
    let n: JsonNetlist = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    n.to_dfg()
}

pub fn dfg_to_json(g: &Dfg) -> String {
    serde_json::to_string_pretty(&JsonNetlist::from_dfg(g)).expect("netlist serializes")
}
