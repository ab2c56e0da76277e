// SPDX-License-Identifier: Apache-2.0

//! The retiming model of a circuit.
//!
//! Inputs and constants collapse into one `source` node and outputs into one
//! `sink`; a back edge `sink -> source` carries the registers that retiming
//! may pull into the circuit. Each registered node `v` is followed by a
//! dummy `v'`, both with unit delay, so the path `v -> v'` violates the
//! clock and must receive a register. A register written on a single use
//! (`reg(wire)`) becomes a unit-delay buffer node with its own dummy.
//!
//! When two such units follow each other without a register in between, a
//! locked register `Lin -(1)-> Lout` is spliced after the first dummy so the
//! second unit does not force an extra stage. It is dropped again when the
//! model is turned back into a netlist.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use crate::frontend::{validate_dfg, Dfg, NodeId};

pub type ModelNodeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelNodeKind {
    Source,
    Sink,
    /// An operator of the circuit.
    Op(NodeId),
    /// Register requirement on operand `port` of circuit node `dst`;
    /// `stage` counts from 1 when several registers sit on one use.
    Buffer {
        dst: NodeId,
        port: usize,
        stage: u32,
    },
    /// Dummy following the given model node.
    Dummy(ModelNodeId),
    LockIn(usize),
    LockOut(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelNode {
    pub name: String,
    pub kind: ModelNodeKind,
    /// 0 or 1, in units of the clock period.
    pub delay: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelEdgeKind {
    Plain,
    Lock,
    Back,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModelEdge {
    pub from: ModelNodeId,
    pub to: ModelNodeId,
    pub weight: u32,
    pub kind: ModelEdgeKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lock {
    pub lock_in: ModelNodeId,
    pub lock_out: ModelNodeId,
    /// The locked unit-weight edge.
    pub edge: usize,
    /// The registered unit whose output the lock follows.
    pub after: ModelNodeId,
}

#[derive(Debug, Clone)]
pub struct HlsModel {
    pub dfg: Dfg,
    pub nodes: Vec<ModelNode>,
    pub edges: Vec<ModelEdge>,
    pub source: ModelNodeId,
    pub sink: ModelNodeId,
    pub back_edge: usize,
    pub locks: Vec<Lock>,
    /// Target clock period, reporting only; delays are normalised to it.
    pub clock: f64,
    /// Model edges traversed by each circuit operand, `routes[node][port]`.
    pub routes: Vec<Vec<Vec<usize>>>,
    /// Model node of each circuit operator.
    pub op_node: Vec<Option<ModelNodeId>>,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ModelError {
    #[error("invalid circuit: {}", .0.join("; "))]
    InvalidDfg(Vec<String>),
    #[error("clock period must be positive, got {0}")]
    BadClock(f64),
}

struct Builder<'a> {
    g: &'a Dfg,
    nodes: Vec<ModelNode>,
    names: HashSet<String>,
    op_node: Vec<Option<ModelNodeId>>,
    dummy: HashMap<ModelNodeId, ModelNodeId>,
    /// Buffers per operand, in stage order.
    buffers: HashMap<(NodeId, usize), Vec<ModelNodeId>>,
    /// Registered units (annotated ops, then buffers) in creation order.
    units: Vec<ModelNodeId>,
}

impl Builder<'_> {
    fn add(&mut self, name: String, kind: ModelNodeKind, delay: u32) -> ModelNodeId {
        let id = self.nodes.len();
        let name = if self.names.contains(&name) {
            let mut k = id;
            loop {
                let cand = format!("{name}_{k}");
                if !self.names.contains(&cand) {
                    break cand;
                }
                k += 1;
            }
        } else {
            name
        };
        self.names.insert(name.clone());
        self.nodes.push(ModelNode { name, kind, delay });
        id
    }

    /// Model edges for every circuit operand, given the lock (if any) that
    /// follows each unit.
    fn wire(
        &self,
        source: ModelNodeId,
        sink: ModelNodeId,
        lock_of: &HashMap<ModelNodeId, (ModelNodeId, ModelNodeId)>,
    ) -> (Vec<ModelEdge>, Vec<Vec<Vec<usize>>>) {
        let mut set = EdgeSet::default();
        let mut routes = Vec::with_capacity(self.g.len());
        for n in &self.g.nodes {
            let mut per_port = Vec::with_capacity(n.args.len());
            for (port, &src) in n.args.iter().enumerate() {
                let mut route = Vec::new();
                let mut cur = self.op_node[src].unwrap_or(source);
                if self.g.nodes[src].annotated {
                    cur = self.leave_unit(&mut set, &mut route, cur, lock_of);
                }
                if let Some(bufs) = self.buffers.get(&(n.id, port)) {
                    for &b in bufs {
                        route.push(set.get(cur, b, 0, ModelEdgeKind::Plain));
                        cur = self.leave_unit(&mut set, &mut route, b, lock_of);
                    }
                }
                let head = self.op_node[n.id].unwrap_or(sink);
                route.push(set.get(cur, head, 0, ModelEdgeKind::Plain));
                per_port.push(route);
            }
            routes.push(per_port);
        }
        (set.edges, routes)
    }

    /// Route from a unit through its dummy and optional lock; returns the
    /// node the unit's fanout leaves from.
    fn leave_unit(
        &self,
        set: &mut EdgeSet,
        route: &mut Vec<usize>,
        unit: ModelNodeId,
        lock_of: &HashMap<ModelNodeId, (ModelNodeId, ModelNodeId)>,
    ) -> ModelNodeId {
        let d = self.dummy[&unit];
        route.push(set.get(unit, d, 0, ModelEdgeKind::Plain));
        match lock_of.get(&unit) {
            Some(&(lin, lout)) => {
                route.push(set.get(d, lin, 0, ModelEdgeKind::Plain));
                route.push(set.get(lin, lout, 1, ModelEdgeKind::Lock));
                lout
            }
            None => d,
        }
    }
}

/// Edge list with parallel edges merged.
#[derive(Default)]
struct EdgeSet {
    edges: Vec<ModelEdge>,
    index: HashMap<(ModelNodeId, ModelNodeId), usize>,
}

impl EdgeSet {
    fn get(
        &mut self,
        from: ModelNodeId,
        to: ModelNodeId,
        weight: u32,
        kind: ModelEdgeKind,
    ) -> usize {
        let edges = &mut self.edges;
        *self.index.entry((from, to)).or_insert_with(|| {
            edges.push(ModelEdge {
                from,
                to,
                weight,
                kind,
            });
            edges.len() - 1
        })
    }
}

/// Build the retiming model of `g` for clock period `clock`.
pub fn build_hls_model(g: &Dfg, clock: f64) -> Result<HlsModel, ModelError> {
    if !(clock > 0.0 && clock.is_finite()) {
        return Err(ModelError::BadClock(clock));
    }
    let diags = validate_dfg(g);
    if !diags.is_empty() {
        return Err(ModelError::InvalidDfg(
            diags.iter().map(|d| d.to_string()).collect(),
        ));
    }
    let mut b = Builder {
        g,
        nodes: Vec::new(),
        names: HashSet::new(),
        op_node: vec![None; g.len()],
        dummy: HashMap::new(),
        buffers: HashMap::new(),
        units: Vec::new(),
    };
    let source = b.add("source".into(), ModelNodeKind::Source, 0);
    let sink = b.add("sink".into(), ModelNodeKind::Sink, 0);
    for n in &g.nodes {
        if n.kind.is_operation() {
            let id = b.add(
                g.label(n.id),
                ModelNodeKind::Op(n.id),
                u32::from(n.annotated),
            );
            b.op_node[n.id] = Some(id);
        }
    }
    let mut k = 0;
    for n in &g.nodes {
        if n.annotated {
            k += 1;
            let v = b.op_node[n.id].expect("annotated nodes are operators");
            let d = b.add(format!("d{k}"), ModelNodeKind::Dummy(v), 1);
            b.dummy.insert(v, d);
            b.units.push(v);
        }
    }
    let mut e = 0;
    for n in &g.nodes {
        for (port, &r) in n.regs.iter().enumerate() {
            let mut chain = Vec::new();
            for stage in 1..=r {
                e += 1;
                let name = format!("e{e}");
                let buf = b.add(
                    name.clone(),
                    ModelNodeKind::Buffer {
                        dst: n.id,
                        port,
                        stage,
                    },
                    1,
                );
                let d = b.add(format!("{name}d"), ModelNodeKind::Dummy(buf), 1);
                b.dummy.insert(buf, d);
                b.units.push(buf);
                chain.push(buf);
            }
            if !chain.is_empty() {
                b.buffers.insert((n.id, port), chain);
            }
        }
    }

    // Which units reach another unit with nothing registered in between.
    let (pre_edges, _) = b.wire(source, sink, &HashMap::new());
    let mut succ = vec![Vec::new(); b.nodes.len()];
    for e in &pre_edges {
        succ[e.from].push(e.to);
    }
    let is_unit: HashSet<ModelNodeId> = b.units.iter().copied().collect();
    let mut lock_of = HashMap::new();
    let mut lock_count = 0;
    for &u in &b.units.clone() {
        let start = b.dummy[&u];
        let mut seen = HashSet::new();
        let mut queue: VecDeque<ModelNodeId> = succ[start].iter().copied().collect();
        let mut hit = false;
        while let Some(v) = queue.pop_front() {
            if is_unit.contains(&v) {
                hit = true;
                break;
            }
            if v == sink || !seen.insert(v) {
                continue;
            }
            queue.extend(succ[v].iter().copied());
        }
        if hit {
            lock_count += 1;
            let lin = b.add(
                format!("R{lock_count}i"),
                ModelNodeKind::LockIn(lock_count - 1),
                0,
            );
            let lout = b.add(
                format!("R{lock_count}o"),
                ModelNodeKind::LockOut(lock_count - 1),
                0,
            );
            lock_of.insert(u, (lin, lout));
        }
    }

    let (mut edges, routes) = b.wire(source, sink, &lock_of);
    let mut locks: Vec<Lock> = lock_of
        .iter()
        .map(|(&after, &(lock_in, lock_out))| Lock {
            lock_in,
            lock_out,
            edge: edges
                .iter()
                .position(|e| e.from == lock_in && e.to == lock_out)
                .expect("lock edge exists"),
            after,
        })
        .collect();
    locks.sort_by_key(|l| l.lock_in);
    edges.push(ModelEdge {
        from: sink,
        to: source,
        weight: 0,
        kind: ModelEdgeKind::Back,
    });
    let back_edge = edges.len() - 1;
    let mut model = HlsModel {
        dfg: g.clone(),
        nodes: b.nodes,
        edges,
        source,
        sink,
        back_edge,
        locks,
        clock,
        routes,
        op_node: b.op_node,
    };
    let m = max_extra_regs(&model);
    model.edges[back_edge].weight = m;
    Ok(model)
}

impl HlsModel {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn back_edge_weight(&self) -> u32 {
        self.edges[self.back_edge].weight
    }

    /// Registered units: annotated operators and use-site buffers.
    pub fn is_unit(&self, v: ModelNodeId) -> bool {
        match self.nodes[v].kind {
            ModelNodeKind::Op(id) => self.dfg.nodes[id].annotated,
            ModelNodeKind::Buffer { .. } => true,
            _ => false,
        }
    }

    pub fn dummy_count(&self) -> usize {
        self.nodes
            .iter()
            .filter(|n| matches!(n.kind, ModelNodeKind::Dummy(_)))
            .count()
    }

    /// Topological order of the model with the back edge removed.
    pub fn forward_order(&self) -> Vec<ModelNodeId> {
        let n = self.nodes.len();
        let mut indeg = vec![0usize; n];
        let mut succ = vec![Vec::new(); n];
        for (i, e) in self.edges.iter().enumerate() {
            if i == self.back_edge {
                continue;
            }
            indeg[e.to] += 1;
            succ[e.from].push(e.to);
        }
        let mut queue: VecDeque<ModelNodeId> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &v in &succ[u] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    queue.push_back(v);
                }
            }
        }
        assert_eq!(order.len(), n, "model without back edge must be acyclic");
        order
    }

    /// DOT rendering: node labels carry the delay, edge labels the weight.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph \"{}\" {{", self.dfg.name);
        for n in &self.nodes {
            let shape = match n.kind {
                ModelNodeKind::Source | ModelNodeKind::Sink => "box",
                ModelNodeKind::Dummy(_) => "circle",
                ModelNodeKind::LockIn(_) | ModelNodeKind::LockOut(_) => "diamond",
                _ => "ellipse",
            };
            let _ = writeln!(
                s,
                "  \"{}\" [label=\"{}\\nd={}\", shape={shape}];",
                n.name, n.name, n.delay
            );
        }
        for e in &self.edges {
            let style = match e.kind {
                ModelEdgeKind::Plain => "",
                ModelEdgeKind::Lock => ", style=bold",
                ModelEdgeKind::Back => ", style=dashed",
            };
            let _ = writeln!(
                s,
                "  \"{}\" -> \"{}\" [label=\"{}\"{style}];",
                self.nodes[e.from].name, self.nodes[e.to].name, e.weight
            );
        }
        s.push_str("}\n");
        s
    }
}

/// Largest number of registered units on any source-to-sink path.
pub fn max_extra_regs(model: &HlsModel) -> u32 {
    let n = model.nodes.len();
    let mut best = vec![0u32; n];
    let mut preds = vec![Vec::new(); n];
    for (i, e) in model.edges.iter().enumerate() {
        if i != model.back_edge {
            preds[e.to].push(e.from);
        }
    }
    for v in model.forward_order() {
        let here = u32::from(model.is_unit(v));
        best[v] = preds[v].iter().map(|&p| best[p]).max().unwrap_or(0) + here;
    }
    best[model.sink]
}
