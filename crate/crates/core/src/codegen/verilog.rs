// SPDX-License-Identifier: Apache-2.0

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::frontend::{NodeId, NodeKind};
use crate::retimer::PipelinedNetlist;

const KEYWORDS: &[&str] = &[
    "always",
    "and",
    "assign",
    "automatic",
    "begin",
    "buf",
    "bufif0",
    "bufif1",
    "case",
    "casex",
    "casez",
    "cell",
    "cmos",
    "config",
    "deassign",
    "default",
    "defparam",
    "design",
    "disable",
    "edge",
    "else",
    "end",
    "endcase",
    "endconfig",
    "endfunction",
    "endgenerate",
    "endmodule",
    "endprimitive",
    "endspecify",
    "endtable",
    "endtask",
    "event",
    "for",
    "force",
    "forever",
    "fork",
    "function",
    "generate",
    "genvar",
    "highz0",
    "highz1",
    "if",
    "ifnone",
    "incdir",
    "include",
    "initial",
    "inout",
    "input",
    "instance",
    "integer",
    "join",
    "large",
    "liblist",
    "library",
    "localparam",
    "macromodule",
    "medium",
    "module",
    "nand",
    "negedge",
    "nmos",
    "nor",
    "noshowcancelled",
    "not",
    "notif0",
    "notif1",
    "or",
    "output",
    "parameter",
    "pmos",
    "posedge",
    "primitive",
    "pull0",
    "pull1",
    "pulldown",
    "pullup",
    "pulsestyle_onevent",
    "pulsestyle_ondetect",
    "rcmos",
    "real",
    "realtime",
    "reg",
    "release",
    "repeat",
    "rnmos",
    "rpmos",
    "rtran",
    "rtranif0",
    "rtranif1",
    "scalared",
    "showcancelled",
    "signed",
    "small",
    "specify",
    "specparam",
    "strong0",
    "strong1",
    "supply0",
    "supply1",
    "table",
    "task",
    "time",
    "tran",
    "tranif0",
    "tranif1",
    "tri",
    "tri0",
    "tri1",
    "triand",
    "trior",
    "trireg",
    "unsigned",
    "use",
    "uwire",
    "vectored",
    "wait",
    "wand",
    "weak0",
    "weak1",
    "while",
    "wire",
    "wor",
    "xnor",
    "xor",
];

/// Clock port name.
pub const CLOCK: &str = "clk";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerilogModule {
    pub text: String,
    /// Identifiers changed to stay legal and unique: `(original, emitted)`.
    pub renames: Vec<(String, String)>,
    pub flops: u32,
    pub gates: usize,
}

struct Names {
    used: HashSet<String>,
    renames: Vec<(String, String)>,
}

impl Names {
    fn legal(s: &str) -> String {
        let mut out: String = s
            .chars()
            .map(|c| {
                if c.is_ascii_alphanumeric() || c == '_' {
                    c
                } else {
                    '_'
                }
            })
            .collect();
        if out.is_empty() || out.starts_with(|c: char| c.is_ascii_digit()) {
            out.insert(0, 'n');
        }
        out
    }

    /// Claim `want` (falling back to `fallback` if empty), recording a rename
    /// whenever a named wire cannot keep its name.
    fn claim(&mut self, want: &str, fallback: &str) -> String {
        let named = !want.is_empty();
        let base = Self::legal(if named { want } else { fallback });
        let mut cand = base.clone();
        if KEYWORDS.contains(&cand.as_str()) {
            cand = format!("{cand}_v");
        }
        let mut k = 1;
        while self.used.contains(&cand) {
            cand = format!("{base}_{k}");
            k += 1;
        }
        self.used.insert(cand.clone());
        if named && cand != want {
            self.renames.push((want.to_string(), cand.clone()));
        }
        cand
    }
}

/// One-to-one Verilog for a pipelined netlist: one `assign` per gate, one
/// flop per register, no reset. Flops are named `<wire>_r<k>`.
pub fn emit_verilog(net: &PipelinedNetlist, module_name: &str) -> VerilogModule {
    let g = &net.dfg;
    let mut names = Names {
        used: HashSet::new(),
        renames: Vec::new(),
    };
    names.used.insert(CLOCK.to_string());
    let module = names.claim(module_name, "top");
    let mut wire: Vec<String> = vec![String::new(); g.len()];
    for &i in &g.inputs {
        wire[i] = names.claim(g.wire_name(i), &format!("in{i}"));
    }
    let mut out_port = Vec::new();
    let flops = net.flops_per_net();
    for &o in &g.outputs {
        let p = names.claim(g.wire_name(o), &format!("out{o}"));
        let d = g.nodes[o].args[0];
        let dn = &g.nodes[d];
        // A gate that only exists to drive this port is written onto it.
        if dn.kind.is_operation()
            && wire[d].is_empty()
            && g.nodes[o].regs[0] == 0
            && dn.name.as_deref() == Some(g.wire_name(o))
        {
            wire[d] = p.clone();
        }
        out_port.push(p);
    }
    let ports: HashSet<String> = out_port.iter().cloned().collect();
    for n in &g.nodes {
        if n.kind.is_operation() && wire[n.id].is_empty() {
            let want = n.name.as_deref().unwrap_or("");
            let want = if ports.contains(want) { "" } else { want };
            wire[n.id] = names.claim(want, &format!("n{}", n.id));
        }
    }
    let mut flop_name: Vec<Vec<String>> = vec![Vec::new(); g.len()];
    for v in 0..g.len() {
        for k in 1..=flops[v] {
            let f = names.claim("", &format!("{}_r{k}", wire[v]));
            flop_name[v].push(f);
        }
    }
    let refer = |a: NodeId, regs: u32| -> String {
        match g.nodes[a].kind {
            NodeKind::Const0 => "1'b0".into(),
            NodeKind::Const1 => "1'b1".into(),
            _ if regs == 0 => wire[a].clone(),
            _ => flop_name[a][regs as usize - 1].clone(),
        }
    };

    let mut s = String::new();
    let total: u32 = flops.iter().sum();
    let _ = writeln!(
        s,
        "// {module}: latency {} cycle(s), {total} flop(s). Outputs are valid {} cycle(s) after their inputs.",
        net.latency, net.latency
    );
    let mut header = vec![CLOCK.to_string()];
    header.extend(g.inputs.iter().map(|&i| wire[i].clone()));
    header.extend(out_port.iter().cloned());
    let _ = writeln!(s, "module {module}({});", header.join(", "));
    let _ = writeln!(s, "  input {CLOCK};");
    for &i in &g.inputs {
        let _ = writeln!(s, "  input {};", wire[i]);
    }
    for p in &out_port {
        let _ = writeln!(s, "  output {p};");
    }
    let order = g.topo_order().expect("acyclic netlist");
    for &v in &order {
        let n = &g.nodes[v];
        if n.kind.is_operation() && !ports.contains(&wire[v]) {
            let _ = writeln!(s, "  wire {};", wire[v]);
        }
    }
    for names in &flop_name {
        for f in names {
            let _ = writeln!(s, "  reg {f};");
        }
    }
    let mut gates = 0;
    for &v in &order {
        let n = &g.nodes[v];
        if !n.kind.is_operation() {
            continue;
        }
        let a: Vec<String> = n
            .args
            .iter()
            .zip(&n.regs)
            .map(|(&x, &r)| refer(x, r))
            .collect();
        let rhs = match n.kind {
            NodeKind::And => format!("{} & {}", a[0], a[1]),
            NodeKind::Xor => format!("{} ^ {}", a[0], a[1]),
            _ => format!("~{}", a[0]),
        };
        let _ = writeln!(s, "  assign {} = {rhs};", wire[v]);
        gates += 1;
    }
    for (k, &o) in g.outputs.iter().enumerate() {
        let d = g.nodes[o].args[0];
        if wire[d] == out_port[k] {
            continue;
        }
        let _ = writeln!(
            s,
            "  assign {} = {};",
            out_port[k],
            refer(d, g.nodes[o].regs[0])
        );
    }
    for v in 0..g.len() {
        let mut prev = wire[v].clone();
        for f in &flop_name[v] {
            let _ = writeln!(s, "  always @(posedge {CLOCK}) {f} <= {prev};");
            prev = f.clone();
        }
    }
    s.push_str("endmodule\n");
    VerilogModule {
        text: s,
        renames: names.renames,
        flops: total,
        gates,
    }
}
