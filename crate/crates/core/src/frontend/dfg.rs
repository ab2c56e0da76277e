// SPDX-License-Identifier: Apache-2.0

//! Bit-level dataflow graph: the circuit under compilation.

use std::collections::HashMap;
use std::fmt;

pub type NodeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NodeKind {
    Input,
    Output,
    And,
    Xor,
    Not,
    Const0,
    Const1,
}

impl NodeKind {
    /// Number of operands a node of this kind takes.
    pub fn arity(self) -> usize {
        match self {
            NodeKind::And | NodeKind::Xor => 2,
            NodeKind::Not | NodeKind::Output => 1,
            NodeKind::Input | NodeKind::Const0 | NodeKind::Const1 => 0,
        }
    }

    /// Gates that become logic in the generated RTL.
    pub fn is_operation(self) -> bool {
        matches!(self, NodeKind::And | NodeKind::Xor | NodeKind::Not)
    }

    pub fn is_const(self) -> bool {
        matches!(self, NodeKind::Const0 | NodeKind::Const1)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            NodeKind::Input => "INPUT",
            NodeKind::Output => "OUTPUT",
            NodeKind::And => "AND",
            NodeKind::Xor => "XOR",
            NodeKind::Not => "NOT",
            NodeKind::Const0 => "CONST0",
            NodeKind::Const1 => "CONST1",
        }
    }

    pub fn parse(s: &str) -> Option<NodeKind> {
        Some(match s {
            "INPUT" => NodeKind::Input,
            "OUTPUT" => NodeKind::Output,
            "AND" => NodeKind::And,
            "XOR" => NodeKind::Xor,
            "NOT" => NodeKind::Not,
            "CONST0" => NodeKind::Const0,
            "CONST1" => NodeKind::Const1,
            _ => return None,
        })
    }
}

impl fmt::Display for NodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub id: NodeId,
    pub kind: NodeKind,
    /// Operand drivers, in operand-position order.
    pub args: Vec<NodeId>,
    /// Registers sitting on each operand edge (parallel to `args`).
    pub regs: Vec<u32>,
    /// The node's result must be registered (a `reg(...)` annotation).
    pub annotated: bool,
    /// Wire name from the source, if any.
    pub name: Option<String>,
}

/// One operand connection `src -> dst` at operand position `port`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub src: NodeId,
    pub dst: NodeId,
    pub port: usize,
    pub regs: u32,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Dfg {
    pub name: String,
    pub nodes: Vec<Node>,
    pub inputs: Vec<NodeId>,
    pub outputs: Vec<NodeId>,
}

impl Dfg {
    pub fn new(name: impl Into<String>) -> Self {
        Dfg {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn add_input(&mut self, name: impl Into<String>) -> NodeId {
        let id = self.push(NodeKind::Input, vec![], false, Some(name.into()));
        self.inputs.push(id);
        id
    }

    pub fn add_output(&mut self, name: impl Into<String>, driver: NodeId, regs: u32) -> NodeId {
        let id = self.nodes.len();
        self.nodes.push(Node {
            id,
            kind: NodeKind::Output,
            args: vec![driver],
            regs: vec![regs],
            annotated: false,
            name: Some(name.into()),
        });
        self.outputs.push(id);
        id
    }

    pub fn add_const(&mut self, value: bool) -> NodeId {
        let kind = if value {
            NodeKind::Const1
        } else {
            NodeKind::Const0
        };
        self.push(kind, vec![], false, None)
    }

    pub fn add_op(&mut self, kind: NodeKind, args: &[NodeId], annotated: bool) -> NodeId {
        debug_assert!(kind.is_operation());
        self.push(kind, args.to_vec(), annotated, None)
    }

    pub fn add_named_op(
        &mut self,
        kind: NodeKind,
        args: &[NodeId],
        annotated: bool,
        name: impl Into<String>,
    ) -> NodeId {
        self.push(kind, args.to_vec(), annotated, Some(name.into()))
    }

    fn push(
        &mut self,
        kind: NodeKind,
        args: Vec<NodeId>,
        annotated: bool,
        name: Option<String>,
    ) -> NodeId {
        let id = self.nodes.len();
        let regs = vec![0; args.len()];
        self.nodes.push(Node {
            id,
            kind,
            args,
            regs,
            annotated,
            name,
        });
        id
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.nodes.iter().flat_map(|n| {
            n.args.iter().enumerate().map(move |(port, &src)| Edge {
                src,
                dst: n.id,
                port,
                regs: n.regs.get(port).copied().unwrap_or(0),
            })
        })
    }

    /// Consumers of every node, as `(dst, port)` pairs in id order.
    pub fn fanouts(&self) -> Vec<Vec<(NodeId, usize)>> {
        let mut out = vec![Vec::new(); self.nodes.len()];
        for e in self.edges() {
            if e.src < out.len() {
                out[e.src].push((e.dst, e.port));
            }
        }
        out
    }

    pub fn input_names(&self) -> Vec<&str> {
        self.inputs.iter().map(|&i| self.wire_name(i)).collect()
    }

    pub fn output_names(&self) -> Vec<&str> {
        self.outputs.iter().map(|&i| self.wire_name(i)).collect()
    }

    /// Name of a node, empty if it has none.
    pub fn wire_name(&self, id: NodeId) -> &str {
        self.nodes[id].name.as_deref().unwrap_or("")
    }

    /// Display label: the wire name, or `n<id>`.
    pub fn label(&self, id: NodeId) -> String {
        match &self.nodes[id].name {
            Some(n) if !n.is_empty() => n.clone(),
            _ => format!("n{id}"),
        }
    }

    pub fn operation_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.kind.is_operation()).count()
    }

    pub fn count_kind(&self, kind: NodeKind) -> usize {
        self.nodes.iter().filter(|n| n.kind == kind).count()
    }

    pub fn annotated_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.annotated).count()
    }

    pub fn has_edge_registers(&self) -> bool {
        self.nodes.iter().any(|n| n.regs.iter().any(|&r| r > 0))
    }

    /// Topological order (Kahn). `None` if the graph has a cycle or a
    /// dangling operand reference.
    pub fn topo_order(&self) -> Option<Vec<NodeId>> {
        let n = self.nodes.len();
        let mut indeg = vec![0usize; n];
        let mut fan: Vec<Vec<NodeId>> = vec![Vec::new(); n];
        for node in &self.nodes {
            for &a in &node.args {
                if a >= n {
                    return None;
                }
                indeg[node.id] += 1;
                fan[a].push(node.id);
            }
        }
        let mut stack: Vec<NodeId> = (0..n).rev().filter(|&i| indeg[i] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(u) = stack.pop() {
            order.push(u);
            for &v in fan[u].iter().rev() {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    stack.push(v);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// Canonical structural form used for isomorphism checks.
    ///
    /// Nodes are numbered by a depth-first walk from the outputs (in output
    /// order, operands in port order) and inputs are identified by name, so
    /// two graphs compare equal iff they have the same port-ordered structure
    /// regardless of node numbering or internal wire names.
    pub fn canonical_form(&self, with_registers: bool) -> Vec<CanonNode> {
        let mut index: HashMap<NodeId, usize> = HashMap::new();
        let mut out = Vec::new();
        for &inp in &self.inputs {
            index.insert(inp, out.len());
            out.push(CanonNode {
                kind: NodeKind::Input,
                args: vec![],
                annotated: false,
                name: Some(self.wire_name(inp).to_string()),
            });
        }
        for &o in &self.outputs {
            self.canon_visit(o, &mut index, &mut out, with_registers);
        }
        out
    }

    fn canon_visit(
        &self,
        root: NodeId,
        index: &mut HashMap<NodeId, usize>,
        out: &mut Vec<CanonNode>,
        with_registers: bool,
    ) -> usize {
        // Iterative post-order to survive deep chains.
        let mut stack = vec![(root, false)];
        while let Some((id, expanded)) = stack.pop() {
            if index.contains_key(&id) {
                continue;
            }
            let node = &self.nodes[id];
            if !expanded {
                stack.push((id, true));
                for &a in node.args.iter().rev() {
                    if !index.contains_key(&a) {
                        stack.push((a, false));
                    }
                }
                continue;
            }
            let args = node
                .args
                .iter()
                .zip(&node.regs)
                .map(|(a, &r)| (index[a], if with_registers { r } else { 0 }))
                .collect();
            let name = (node.kind == NodeKind::Output).then(|| self.wire_name(id).to_string());
            index.insert(id, out.len());
            out.push(CanonNode {
                kind: node.kind,
                args,
                annotated: node.annotated,
                name,
            });
        }
        index[&root]
    }

    /// Same structure ignoring annotations and registers.
    pub fn isomorphic_logic(&self, other: &Dfg) -> bool {
        let strip = |v: Vec<CanonNode>| {
            v.into_iter()
                .map(|mut c| {
                    c.annotated = false;
                    c
                })
                .collect::<Vec<_>>()
        };
        strip(self.canonical_form(false)) == strip(other.canonical_form(false))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonNode {
    pub kind: NodeKind,
    pub args: Vec<(usize, u32)>,
    pub annotated: bool,
    pub name: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagnosticKind {
    DanglingOperand,
    Arity,
    Cycle,
    DeadCode,
    AnnotatedTerminal,
    PortList,
    OutputConsumed,
    NoOutputs,
    DuplicateName,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub kind: DiagnosticKind,
    pub node: Option<NodeId>,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.node {
            Some(n) => write!(f, "node {n}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

fn diag(kind: DiagnosticKind, node: Option<NodeId>, message: String) -> Diagnostic {
    Diagnostic {
        kind,
        node,
        message,
    }
}

/// Check every structural invariant of a [`Dfg`]. An empty result means the
/// graph is well formed.
pub fn validate_dfg(g: &Dfg) -> Vec<Diagnostic> {
    use DiagnosticKind::*;
    let n = g.nodes.len();
    let mut out = Vec::new();

    for (i, node) in g.nodes.iter().enumerate() {
        if node.id != i {
            out.push(diag(
                PortList,
                Some(i),
                format!("node stored at index {i} carries id {}", node.id),
            ));
        }
        if node.args.len() != node.kind.arity() || node.regs.len() != node.args.len() {
            out.push(diag(
                Arity,
                Some(i),
                format!(
                    "{} expects {} operand(s), has {}",
                    node.kind,
                    node.kind.arity(),
                    node.args.len()
                ),
            ));
        }
        for &a in &node.args {
            if a >= n {
                out.push(diag(
                    DanglingOperand,
                    Some(i),
                    format!("operand refers to missing node {a}"),
                ));
            } else if g.nodes[a].kind == NodeKind::Output {
                out.push(diag(
                    OutputConsumed,
                    Some(i),
                    format!("operand is OUTPUT node {a}"),
                ));
            }
        }
        if node.annotated && !node.kind.is_operation() {
            out.push(diag(
                AnnotatedTerminal,
                Some(i),
                format!("{} node cannot carry a register annotation", node.kind),
            ));
        }
    }

    let listed_inputs: Vec<NodeId> = g
        .nodes
        .iter()
        .filter(|n| n.kind == NodeKind::Input)
        .map(|n| n.id)
        .collect();
    let mut sorted_inputs = g.inputs.clone();
    sorted_inputs.sort_unstable();
    if sorted_inputs != listed_inputs {
        out.push(diag(
            PortList,
            None,
            "input list does not match the INPUT nodes".into(),
        ));
    }
    let listed_outputs: Vec<NodeId> = g
        .nodes
        .iter()
        .filter(|n| n.kind == NodeKind::Output)
        .map(|n| n.id)
        .collect();
    let mut sorted_outputs = g.outputs.clone();
    sorted_outputs.sort_unstable();
    if sorted_outputs != listed_outputs {
        out.push(diag(
            PortList,
            None,
            "output list does not match the OUTPUT nodes".into(),
        ));
    }
    if g.outputs.is_empty() {
        out.push(diag(NoOutputs, None, "circuit has no outputs".into()));
    }

    let mut seen: HashMap<&str, NodeId> = HashMap::new();
    for &p in g.inputs.iter().chain(&g.outputs) {
        if p >= n {
            continue;
        }
        let name = g.wire_name(p);
        if let Some(prev) = seen.insert(name, p) {
            out.push(diag(
                DuplicateName,
                Some(p),
                format!("port name `{name}` also used by node {prev}"),
            ));
        }
    }

    if out.iter().any(|d| d.kind == DanglingOperand) {
        return out;
    }

    if g.topo_order().is_none() {
        // Report one node per strongly-connected leftover of Kahn's algorithm.
        let mut indeg = vec![0usize; n];
        for node in &g.nodes {
            indeg[node.id] = node.args.len();
        }
        let fan = g.fanouts();
        let mut stack: Vec<NodeId> = (0..n).filter(|&i| indeg[i] == 0).collect();
        while let Some(u) = stack.pop() {
            for &(v, _) in &fan[u] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    stack.push(v);
                }
            }
        }
        for (i, &d) in indeg.iter().enumerate() {
            if d > 0 {
                out.push(diag(Cycle, Some(i), "node lies on a cycle".into()));
            }
        }
    }

    // Reverse reachability from the outputs.
    let mut live = vec![false; n];
    let mut stack: Vec<NodeId> = g.outputs.iter().copied().filter(|&o| o < n).collect();
    while let Some(u) = stack.pop() {
        if live[u] {
            continue;
        }
        live[u] = true;
        stack.extend(g.nodes[u].args.iter().copied());
    }
    for (i, node) in g.nodes.iter().enumerate() {
        if !live[i] && node.kind != NodeKind::Output {
            out.push(diag(
                DeadCode,
                Some(i),
                format!("{} `{}` reaches no output", node.kind, g.label(i)),
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn and_of_inputs() -> Dfg {
        let mut g = Dfg::new("t");
        let a = g.add_input("a");
        let b = g.add_input("b");
        let x = g.add_op(NodeKind::And, &[a, b], false);
        g.add_output("y", x, 0);
        g
    }

    #[test]
    fn well_formed_graph_has_no_diagnostics() {
        assert!(validate_dfg(&and_of_inputs()).is_empty());
    }

    #[test]
    fn dead_node_is_reported() {
        let mut g = and_of_inputs();
        let extra = g.add_op(NodeKind::Not, &[0], false);
        let d = validate_dfg(&g);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].kind, DiagnosticKind::DeadCode);
        assert_eq!(d[0].node, Some(extra));
    }

    #[test]
    fn two_node_cycle_is_reported() {
        let mut g = Dfg::new("cyc");
        let a = g.add_input("a");
        let x = g.add_op(NodeKind::Xor, &[a, 3], false);
        let y = g.add_op(NodeKind::Not, &[x], false);
        assert_eq!(y, 2);
        let z = g.add_op(NodeKind::Not, &[y], false);
        assert_eq!(z, 3);
        g.add_output("o", z, 0);
        let d = validate_dfg(&g);
        assert!(d.iter().any(|d| d.kind == DiagnosticKind::Cycle));
        assert!(g.topo_order().is_none());
    }

    #[test]
    fn annotation_on_input_is_rejected() {
        let mut g = and_of_inputs();
        g.nodes[0].annotated = true;
        let d = validate_dfg(&g);
        assert!(d
            .iter()
            .any(|d| d.kind == DiagnosticKind::AnnotatedTerminal && d.node == Some(0)));
    }

    #[test]
    fn arity_mismatch_is_reported() {
        let mut g = and_of_inputs();
        g.nodes[2].args.pop();
        g.nodes[2].regs.pop();
        assert!(validate_dfg(&g)
            .iter()
            .any(|d| d.kind == DiagnosticKind::Arity));
    }

    #[test]
    fn canonical_form_ignores_numbering() {
        let g1 = and_of_inputs();
        let mut g2 = Dfg::new("t");
        let a = g2.add_input("a");
        let b = g2.add_input("b");
        let unused_order = g2.add_op(NodeKind::And, &[a, b], false);
        g2.add_output("y", unused_order, 0);
        assert_eq!(g1.canonical_form(true), g2.canonical_form(true));

        let mut g3 = Dfg::new("t");
        let a = g3.add_input("a");
        let b = g3.add_input("b");
        let x = g3.add_op(NodeKind::And, &[b, a], false);
        g3.add_output("y", x, 0);
        assert_ne!(g1.canonical_form(true), g3.canonical_form(true));
    }
}
