// SPDX-License-Identifier: Apache-2.0

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::frontend::{Dfg, NodeId, NodeKind};
use crate::retimer::PipelinedNetlist;

const RESERVED: &[&str] = &[
    "int", "bool", "_Bool", "void", "return", "reg", "if", "else", "for", "while", "do", "switch",
    "case", "goto", "break", "continue", "struct", "union", "typedef", "static", "extern", "char",
    "unsigned", "long", "short", "uint8_t",
];

fn is_ident(s: &str) -> bool {
    let mut c = s.chars();
    matches!(c.next(), Some(ch) if ch.is_ascii_alphabetic() || ch == '_')
        && c.all(|ch| ch.is_ascii_alphanumeric() || ch == '_')
}

struct Namer {
    used: HashSet<String>,
}

impl Namer {
    fn claim(&mut self, want: &str, fallback: &str) -> String {
        let base = if is_ident(want) && !RESERVED.contains(&want) {
            want.to_string()
        } else {
            fallback.to_string()
        };
        if self.used.insert(base.clone()) {
            return base;
        }
        let mut k = 1;
        loop {
            let cand = format!("{base}_{k}");
            if self.used.insert(cand.clone()) {
                return cand;
            }
            k += 1;
        }
    }
}

/// Registers seen by each use: `(driver, total registers)`.
struct Plan {
    /// Node whose every use is registered is written as `v = reg(...)`.
    wrapped: Vec<bool>,
    /// Total registers on each operand, `[node][port]`.
    total: Vec<Vec<u32>>,
}

fn render(g: &Dfg, plan: &Plan) -> String {
    let fan = g.fanouts();
    let mut namer = Namer {
        used: HashSet::new(),
    };
    let mut name: Vec<String> = vec![String::new(); g.len()];
    for &i in &g.inputs {
        name[i] = namer.claim(g.wire_name(i), &format!("in{i}"));
    }
    let outputs: HashSet<&str> = g.output_names().into_iter().collect();
    // Outputs written directly by their driver's statement.
    let mut direct: Vec<Option<NodeId>> = vec![None; g.len()];
    let mut out_names = Vec::new();
    for &o in &g.outputs {
        let oname = namer.claim(g.wire_name(o), &format!("out{o}"));
        let d = g.nodes[o].args[0];
        let t = plan.total[o][0];
        let tap0 = if plan.wrapped[d] { 1 } else { 0 };
        let dn = &g.nodes[d];
        if dn.kind.is_operation()
            && direct[d].is_none()
            && t == tap0
            && dn.name.as_deref() == Some(g.wire_name(o))
        {
            direct[d] = Some(o);
            name[d] = oname.clone();
        }
        out_names.push(oname);
    }
    for n in &g.nodes {
        if n.kind.is_operation() && name[n.id].is_empty() {
            let want = n.name.as_deref().unwrap_or("");
            let want = if outputs.contains(want) { "" } else { want };
            name[n.id] = namer.claim(want, &format!("t{}", n.id));
        }
    }

    // Deepest tap needed on every net.
    let mut deepest = vec![0u32; g.len()];
    for n in &g.nodes {
        for (&a, &t) in n.args.iter().zip(&plan.total[n.id]) {
            deepest[a] = deepest[a].max(t);
        }
    }
    let mut tap_name: Vec<Vec<String>> = vec![Vec::new(); g.len()];
    let mut body = String::new();
    let emit_taps = |v: NodeId,
                     namer: &mut Namer,
                     tap_name: &mut Vec<Vec<String>>,
                     body: &mut String,
                     name: &[String]| {
        let first = if plan.wrapped[v] { 2 } else { 1 };
        let mut prev = name[v].clone();
        for k in first..=deepest[v] {
            let t = namer.claim(&format!("{}_r{k}", name[v]), &format!("t{v}_r{k}"));
            let _ = writeln!(body, "    {t} = reg({prev});");
            tap_name[v].push(t.clone());
            prev = t;
        }
    };
    for &i in &g.inputs {
        emit_taps(i, &mut namer, &mut tap_name, &mut body, &name);
    }
    let order = g.topo_order().expect("acyclic circuit");
    let operand = |a: NodeId, t: u32, tap_name: &Vec<Vec<String>>| -> String {
        match g.nodes[a].kind {
            NodeKind::Const0 => "0".into(),
            NodeKind::Const1 => "1".into(),
            _ => {
                let base = if plan.wrapped[a] { 1 } else { 0 };
                if t <= base {
                    name[a].clone()
                } else {
                    tap_name[a][(t - base - 1) as usize].clone()
                }
            }
        }
    };
    for v in order {
        let n = &g.nodes[v];
        if !n.kind.is_operation() {
            continue;
        }
        let ops: Vec<String> = n
            .args
            .iter()
            .zip(&plan.total[v])
            .map(|(&a, &t)| operand(a, t, &tap_name))
            .collect();
        let rhs = match n.kind {
            NodeKind::And => format!("{} * {}", ops[0], ops[1]),
            NodeKind::Xor => format!("{} ^ {}", ops[0], ops[1]),
            _ => format!("~{}", ops[0]),
        };
        let rhs = if plan.wrapped[v] {
            format!("reg({rhs})")
        } else {
            rhs
        };
        let lhs = if direct[v].is_some() {
            format!("*{}", name[v])
        } else {
            name[v].clone()
        };
        let _ = writeln!(body, "    {lhs} = {rhs};");
        if !fan[v].is_empty() {
            emit_taps(v, &mut namer, &mut tap_name, &mut body, &name);
        }
    }
    for (k, &o) in g.outputs.iter().enumerate() {
        let d = g.nodes[o].args[0];
        if direct[d] == Some(o) {
            continue;
        }
        let src = operand(d, plan.total[o][0], &tap_name);
        let _ = writeln!(body, "    *{} = {src};", out_names[k]);
    }

    let mut params: Vec<String> = g
        .inputs
        .iter()
        .map(|&i| format!("bool {}", name[i]))
        .collect();
    params.extend(out_names.iter().map(|o| format!("bool *{o}")));
    let fname = if is_ident(&g.name) && !RESERVED.contains(&g.name.as_str()) {
        g.name.clone()
    } else {
        "circuit".to_string()
    };
    let mut s = String::new();
    let _ = writeln!(s, "int {fname}({})", params.join(", "));
    s.push_str("{\n");
    s.push_str(&body);
    s.push_str("    return 0;\n}\n");
    s
}

/// Source for a circuit as written: annotated nodes become `reg(...)` and
/// operand registers become `reg` temporaries.
pub fn emit_source(g: &Dfg) -> String {
    let total = g
        .nodes
        .iter()
        .map(|n| {
            n.args
                .iter()
                .zip(&n.regs)
                .map(|(&a, &r)| r + u32::from(g.nodes[a].annotated))
                .collect()
        })
        .collect();
    let wrapped = g.nodes.iter().map(|n| n.annotated).collect();
    render(g, &Plan { wrapped, total })
}

/// Source for a balanced netlist. A node whose every use is registered is
/// written `v = reg(...)`; further registers on a wire become a chain of
/// temporaries `v_r2 = reg(v)`, `v_r3 = reg(v_r2)`, and so on.
pub fn emit_balanced_source(net: &PipelinedNetlist) -> String {
    let g = &net.dfg;
    let fan = g.fanouts();
    let wrapped = g
        .nodes
        .iter()
        .map(|n| {
            n.kind.is_operation()
                && !fan[n.id].is_empty()
                && fan[n.id].iter().all(|&(d, p)| g.nodes[d].regs[p] >= 1)
        })
        .collect();
    let total = g.nodes.iter().map(|n| n.regs.clone()).collect();
    render(g, &Plan { wrapped, total })
}
