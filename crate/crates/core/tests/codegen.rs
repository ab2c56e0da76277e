// SPDX-License-Identifier: Apache-2.0

mod common;

use std::collections::HashMap;

use common::{fixture, random_circuit, run_reference};
use maskedhls::codegen::*;
use maskedhls::frontend::parse_masked_c;
use maskedhls::retimer::{retime, PipelinedNetlist};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Just enough Verilog to run what the emitter produces.
struct MiniVerilog {
    inputs: Vec<String>,
    outputs: Vec<String>,
    assigns: Vec<(String, String)>,
    flops: Vec<(String, String)>,
}

impl MiniVerilog {
    fn read(text: &str) -> Self {
        let mut m = MiniVerilog {
            inputs: Vec::new(),
            outputs: Vec::new(),
            assigns: Vec::new(),
            flops: Vec::new(),
        };
        for line in text.lines().map(str::trim) {
            let body = line.trim_end_matches(';');
            if let Some(r) = body.strip_prefix("input ") {
                if r != "clk" {
                    m.inputs.push(r.to_string());
                }
            } else if let Some(r) = body.strip_prefix("output ") {
                m.outputs.push(r.to_string());
            } else if let Some(r) = body.strip_prefix("assign ") {
                let (l, rhs) = r.split_once(" = ").unwrap();
                m.assigns.push((l.to_string(), rhs.to_string()));
            } else if let Some(r) = body.strip_prefix("always @(posedge clk) ") {
                let (l, rhs) = r.split_once(" <= ").unwrap();
                m.flops.push((l.to_string(), rhs.to_string()));
            } else {
                assert!(
                    line.is_empty()
                        || line.starts_with("//")
                        || line.starts_with("module ")
                        || line.starts_with("wire ")
                        || line.starts_with("reg ")
                        || line == "endmodule",
                    "unexpected line `{line}`"
                );
            }
        }
        m
    }

    fn value(env: &HashMap<String, bool>, tok: &str) -> bool {
        match tok {
            "1'b0" => false,
            "1'b1" => true,
            t => *env
                .get(t)
                .unwrap_or_else(|| panic!("`{t}` read before it is driven")),
        }
    }

    /// Apply one input vector, returning outputs before the clock edge.
    fn step(&self, state: &mut HashMap<String, bool>, ins: &[bool]) -> Vec<bool> {
        let mut env = state.clone();
        for (n, &b) in self.inputs.iter().zip(ins) {
            env.insert(n.clone(), b);
        }
        // Assigns are emitted in dependency order.
        for (l, rhs) in &self.assigns {
            let t: Vec<&str> = rhs.split(' ').collect();
            let v = match t.as_slice() {
                [a, "&", b] => Self::value(&env, a) & Self::value(&env, b),
                [a, "^", b] => Self::value(&env, a) ^ Self::value(&env, b),
                [a] if a.starts_with('~') => !Self::value(&env, &a[1..]),
                [a] => Self::value(&env, a),
                _ => panic!("bad expression `{rhs}`"),
            };
            env.insert(l.clone(), v);
        }
        let outs = self.outputs.iter().map(|o| Self::value(&env, o)).collect();
        let next: Vec<(String, bool)> = self
            .flops
            .iter()
            .map(|(q, d)| (q.clone(), Self::value(&env, d)))
            .collect();
        state.extend(next);
        outs
    }

    fn reset(&self) -> HashMap<String, bool> {
        self.flops.iter().map(|(q, _)| (q.clone(), false)).collect()
    }
}

fn verilog_agrees(net: &PipelinedNetlist, rng: &mut ChaCha8Rng, cycles: usize) {
    let v = emit_verilog(net, "dut");
    let mv = MiniVerilog::read(&v.text);
    assert_eq!(mv.flops.len() as u32, net.total_registers());
    assert_eq!(v.flops, net.total_registers());
    let seq: Vec<Vec<bool>> = (0..cycles)
        .map(|_| (0..net.dfg.inputs.len()).map(|_| rng.gen()).collect())
        .collect();
    let want = run_reference(&net.dfg, &seq);
    let mut state = mv.reset();
    for (t, ins) in seq.iter().enumerate() {
        assert_eq!(mv.step(&mut state, ins), want[t], "cycle {t}\n{}", v.text);
    }
}

#[test]
fn verilog_simulates_like_the_netlist() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..150 {
        let g = random_circuit(&mut rng, 40, true);
        let r = retime(&g, 1.0).unwrap();
        verilog_agrees(&r.netlist, &mut rng, 24);
    }
}

#[test]
fn domand_verilog_shape() {
    let g = parse_masked_c(&fixture("domand_cross.c")).unwrap();
    let r = retime(&g, 1.0).unwrap();
    let v = emit_verilog(&r.netlist, "domand");
    assert!(v
        .text
        .starts_with("// domand: latency 1 cycle(s), 4 flop(s)."));
    assert!(v
        .text
        .contains("module domand(clk, a0, a1, b0, b1, z, y0, y1);"));
    assert!(v.text.contains("  always @(posedge clk) p1_r1 <= p1;"));
    assert!(v.text.contains("  assign y0 = i1_r1 ^ p1_r1;"));
    assert!(v.renames.is_empty());
    assert_eq!(v.gates, 8);
}

#[test]
fn keywords_and_clock_are_renamed() {
    let src = "int f(bool clk, bool wire, bool *output)\n{\n  begin = reg(clk & wire);\n  *output = begin ^ wire;\n  return 0;\n}\n";
    let g = parse_masked_c(src).unwrap();
    let r = retime(&g, 1.0).unwrap();
    let v = emit_verilog(&r.netlist, "module");
    let renamed: Vec<&str> = v.renames.iter().map(|(a, _)| a.as_str()).collect();
    for name in ["module", "clk", "wire", "output", "begin"] {
        assert!(
            renamed.contains(&name),
            "{name} not renamed: {:?}",
            v.renames
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    verilog_agrees(&r.netlist, &mut rng, 16);
}

#[test]
fn balanced_domand_source() {
    let g = parse_masked_c(&fixture("domand_cross.c")).unwrap();
    let r = retime(&g, 1.0).unwrap();
    let text = emit_balanced_source(&r.netlist);
    for line in [
        "p1 = reg(a0 * b0);",
        "p4 = reg(a1 * b1);",
        "i1 = reg(p2 ^ z);",
        "i2 = reg(p3 ^ z);",
        "*y0 = i1 ^ p1;",
        "*y1 = i2 ^ p4;",
    ] {
        assert!(text.contains(line), "missing `{line}` in\n{text}");
    }
    assert_eq!(text.matches("reg(").count(), 4);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn balanced_source_is_a_fixed_point(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_circuit(&mut rng, 40, true);
        let first = retime(&g, 1.0).unwrap().netlist;
        let text = emit_balanced_source(&first);
        let again = retime(&parse_masked_c(&text).unwrap(), 1.0).unwrap().netlist;
        prop_assert_eq!(again.total_registers(), first.total_registers());
        prop_assert_eq!(again.latency, first.latency);
        prop_assert_eq!(emit_balanced_source(&again), text);
    }
}
