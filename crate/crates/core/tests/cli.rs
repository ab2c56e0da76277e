// SPDX-License-Identifier: Apache-2.0

mod common;

use std::path::Path;
use std::process::{Command, Output};

use common::FIXTURES;
use serde_json::Value;

fn run(args: &[&str], envs: &[(&str, &str)]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maskedhls"))
        .args(args)
        .env_remove("MASKEDHLS_SEED")
        .envs(envs.iter().copied())
        .output()
        .expect("binary runs")
}

fn fixture_path(name: &str) -> String {
    format!("{FIXTURES}/{name}")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stderr)))
}

#[test]
fn domand_with_gadget_and_check() {
    let dir = tempfile::tempdir().unwrap();
    let v = dir.path().join("out.v");
    let c = dir.path().join("out.c");
    let out = run(
        &[
            "compile",
            &fixture_path("domand.c"),
            "--gadget",
            "dom",
            "--emit-verilog",
            v.to_str().unwrap(),
            "--emit-source",
            c.to_str().unwrap(),
            "--check",
        ],
        &[],
    );
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["gadget_mode"], "annotated");
    assert_eq!(r["total_regs"], 4);
    assert_eq!(r["ann_regs"], 2);
    assert_eq!(r["bal_regs"], 2);
    assert_eq!(r["latency"], 1);
    assert_eq!(r["check"]["equivalent"], true);
    assert_eq!(r["check"]["trials"], 32);
    assert!(std::fs::read_to_string(&v)
        .unwrap()
        .contains("module domand(clk"));
    assert!(std::fs::read_to_string(&c)
        .unwrap()
        .contains("p1 = reg(a0 * b0);"));
}

#[test]
fn report_file_and_dumps() {
    let dir = tempfile::tempdir().unwrap();
    let rp = dir.path().join("r.json");
    let cp = dir.path().join("c.txt");
    let mp = dir.path().join("m.dot");
    let out = run(
        &[
            "compile",
            &fixture_path("domand_cross.c"),
            "--report",
            rp.to_str().unwrap(),
            "--dump-constraints",
            cp.to_str().unwrap(),
            "--dump-model",
            mp.to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&rp).unwrap()).unwrap();
    assert_eq!(r["mode"], "balance");
    assert!(r["runtime_s"].as_f64().unwrap() >= 0.0);
    let cs = std::fs::read_to_string(&cp).unwrap();
    assert!(cs.lines().any(|l| l == "r(source) - r(sink) <= 1"));
    assert_eq!(
        cs.lines().count() as u64,
        r["constraints"].as_u64().unwrap()
    );
    assert!(std::fs::read_to_string(&mp).unwrap().starts_with("digraph"));
}

#[test]
fn naive_mode_reports_the_full_cut() {
    let out = run(
        &[
            "compile",
            &fixture_path("shared_paths.c"),
            "--naive",
            "--check",
        ],
        &[],
    );
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["mode"], "naive");
    assert_eq!(r["total_regs"], 12);
    assert_eq!(r["latency"], 2);
    assert_eq!(r["constraints"], 0);
}

#[test]
fn mask_then_compile() {
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("f.c");
    std::fs::write(
        &src,
        "int f(bool a, bool b, bool c, bool *y) { t = a & b; *y = t & c; return 0; }\n",
    )
    .unwrap();
    let masked = dir.path().join("m.c");
    let out = run(
        &[
            "mask",
            src.to_str().unwrap(),
            "--gadget",
            "hpc1",
            "-o",
            masked.to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = std::fs::read_to_string(&masked).unwrap();
    assert_eq!(text.matches("reg(").count(), 8);
    let out = run(&["compile", masked.to_str().unwrap(), "--check"], &[]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["ann_regs"], 8);

    // The same in one step, masking the plain circuit.
    let out = run(
        &[
            "compile",
            src.to_str().unwrap(),
            "--gadget",
            "hpc1",
            "--check",
        ],
        &[],
    );
    let r = report(&out);
    assert_eq!(r["gadget_mode"], "masked");
    assert_eq!(r["ann_regs"], 8);

    let json = dir.path().join("m.json");
    let out = run(
        &[
            "mask",
            src.to_str().unwrap(),
            "--gadget",
            "dom",
            "--json",
            "-o",
            json.to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["compile", json.to_str().unwrap()], &[]);
    assert_eq!(report(&out)["ann_regs"], 4);
}

#[test]
fn exit_codes_per_stage() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_string()
    };
    let syntax = write("s.c", "int f(bool a, bool *y) { *y = a a; return 0; }");
    let out = run(&["compile", &syntax], &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("1:"));

    let dead = write(
        "d.json",
        r#"{"name":"d","inputs":["a"],"outputs":["y"],"nodes":[
        {"id":0,"kind":"INPUT","args":[],"reg":false,"name":"a"},
        {"id":1,"kind":"NOT","args":[0],"reg":false},
        {"id":2,"kind":"OUTPUT","args":[0],"reg":false,"name":"y"}]}"#,
    );
    assert_eq!(run(&["compile", &dead], &[]).status.code(), Some(3));

    let annotated = fixture_path("domand_cross.c");
    assert_eq!(
        run(&["compile", &annotated, "--gadget", "dom"], &[])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(&["compile", "/nonexistent/x.c"], &[]).status.code(),
        Some(1)
    );
    assert_eq!(
        run(&["compile", &annotated, "--clock", "0"], &[])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["compile", &annotated, "--bogus"], &[]).status.code(),
        Some(1)
    );
    assert_eq!(
        run(
            &["compile", &annotated, "--check"],
            &[("MASKEDHLS_SEED", "x")]
        )
        .status
        .code(),
        Some(1)
    );
}

#[test]
fn seed_comes_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("wide.c");
    let params: Vec<String> = (0..20).map(|i| format!("bool x{i}")).collect();
    let body: Vec<String> = (0..20).map(|i| format!("x{i}")).collect();
    std::fs::write(
        &p,
        format!(
            "int wide({}, bool *y) {{ t = reg(x0 & x1); *y = t ^ {}; return 0; }}\n",
            params.join(", "),
            body[2..].join(" ^ ")
        ),
    )
    .unwrap();
    let path = p.to_str().unwrap();
    let a = run(
        &["compile", path, "--check", "--trials", "256"],
        &[("MASKEDHLS_SEED", "5")],
    );
    let b = run(
        &["compile", path, "--check", "--trials", "256", "--seed", "5"],
        &[],
    );
    let (ra, rb) = (report(&a), report(&b));
    assert_eq!(ra["check"], rb["check"]);
    assert_eq!(ra["check"]["trials"], 256);
    assert!(Path::new(path).exists());
}
