// SPDX-License-Identifier: Apache-2.0

//! Command-line driver: parse, optionally mask, balance, emit and check.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use log::info;
use serde::Serialize;

use crate::codegen::{emit_balanced_source, emit_source, emit_verilog};
use crate::frontend::{dfg_to_json, parse_json_netlist, parse_masked_c, validate_dfg, Dfg};
use crate::gadgets::{annotate_gadgets, apply_masking_pass, GadgetKind};
use crate::hlsmodel::ModelError;
use crate::retimer::{format_constraints, retime, PipelinedNetlist, RetimeError};
use crate::simcheck::{
    check_balance, check_equivalence, naive_balance, BalanceReport, CheckReport,
};

/// Version of the JSON report layout.
pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// Environment variable that seeds random equivalence trials.
pub const SEED_ENV: &str = "MASKEDHLS_SEED";

/// Process exit codes, one per failing stage.
pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const VALIDATION: i32 = 3;
    pub const SOLVER: i32 = 4;
    pub const EQUIVALENCE: i32 = 5;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    C,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "maskedhls",
    version,
    about = "Register balancing for gadget-masked boolean circuits"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Balance a register-annotated circuit and emit RTL.
    Compile(CompileArgs),
    /// Replace every AND of an unmasked circuit by a masked gadget.
    Mask(MaskArgs),
}

#[derive(Debug, clap::Args)]
pub struct CompileArgs {
    pub input: PathBuf,
    /// Input format; guessed from the extension when omitted.
    #[arg(long, value_enum)]
    pub format: Option<InputFormat>,
    /// Gadget for an annotation-free input. A circuit already built from
    /// this gadget gets its register positions annotated in place; anything
    /// else is masked first.
    #[arg(long)]
    pub gadget: Option<GadgetKind>,
    /// With COMAR masking, reuse one set of random bits for every gadget.
    #[arg(long)]
    pub share_randoms: bool,
    /// Target clock period, normalised so one gate level fits.
    #[arg(long, default_value_t = 1.0)]
    pub clock: f64,
    #[arg(long, value_name = "PATH")]
    pub emit_verilog: Option<PathBuf>,
    /// Write the balanced circuit back out in the C dialect.
    #[arg(long, value_name = "PATH")]
    pub emit_source: Option<PathBuf>,
    /// Write the JSON report here instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub report: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    pub dump_constraints: Option<PathBuf>,
    /// Write the retiming graph in Graphviz format.
    #[arg(long, value_name = "PATH")]
    pub dump_model: Option<PathBuf>,
    /// Use a full register cut per annotation level instead of retiming.
    #[arg(long)]
    pub naive: bool,
    /// Simulate the result against the unregistered circuit.
    #[arg(long)]
    pub check: bool,
    /// Random vectors for the check when exhaustive simulation is too big.
    #[arg(long, default_value_t = 100_000)]
    pub trials: u64,
    /// Seed for random vectors; overrides the environment variable.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub module_name: Option<String>,
}

#[derive(Debug, clap::Args)]
pub struct MaskArgs {
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub format: Option<InputFormat>,
    #[arg(long)]
    pub gadget: GadgetKind,
    #[arg(long)]
    pub share_randoms: bool,
    /// Output file; standard output when omitted.
    #[arg(short, long, value_name = "PATH")]
    pub output: Option<PathBuf>,
    /// Write JSON instead of C.
    #[arg(long)]
    pub json: bool,
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn new(code: i32, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }
}

impl From<RetimeError> for CliError {
    fn from(e: RetimeError) -> Self {
        let code = match &e {
            RetimeError::Model(ModelError::InvalidDfg(_)) => exit::VALIDATION,
            RetimeError::Model(ModelError::BadClock(_)) => exit::USAGE,
            _ => exit::SOLVER,
        };
        CliError::new(code, e.to_string())
    }
}

/// How gadget registers got into the compiled circuit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GadgetMode {
    /// Annotations came with the input.
    None,
    /// Gadget instances were recognised and annotated in place.
    Annotated,
    /// The masking pass rewrote the input.
    Masked,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub design: String,
    pub mode: &'static str,
    pub gadget: Option<String>,
    pub gadget_mode: GadgetMode,
    pub gadget_instances: usize,
    pub inputs: usize,
    pub outputs: usize,
    pub nodes: usize,
    pub model_nodes: usize,
    pub constraints: usize,
    pub clock: f64,
    pub ann_regs: u32,
    pub bal_regs: u32,
    pub total_regs: u32,
    pub latency: u32,
    pub balance: BalanceReport,
    pub check: Option<CheckReport>,
    pub runtime_s: f64,
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::new(exit::USAGE, format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text)
        .map_err(|e| CliError::new(exit::USAGE, format!("cannot write {}: {e}", path.display())))
}

fn load(path: &Path, format: Option<InputFormat>) -> Result<Dfg, CliError> {
    let text = read(path)?;
    let format = format.unwrap_or_else(|| {
        if path.extension().is_some_and(|e| e == "json") {
            InputFormat::Json
        } else {
            InputFormat::C
        }
    });
    let g = match format {
        InputFormat::C => parse_masked_c(&text),
        InputFormat::Json => parse_json_netlist(&text),
    }
    .map_err(|e| CliError::new(exit::PARSE, format!("{}: {e}", path.display())))?;
    let diags = validate_dfg(&g);
    if !diags.is_empty() {
        let lines: Vec<String> = diags.iter().map(|d| d.to_string()).collect();
        return Err(CliError::new(exit::VALIDATION, lines.join("\n")));
    }
    Ok(g)
}

fn seed(explicit: Option<u64>) -> Result<u64, CliError> {
    if let Some(s) = explicit {
        return Ok(s);
    }
    match std::env::var(SEED_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::new(
                exit::USAGE,
                format!("{SEED_ENV} must be an unsigned integer"),
            )
        }),
        Err(_) => Ok(0),
    }
}

/// Bring in gadget registers, returning the circuit to compile.
fn prepare(
    g: Dfg,
    gadget: Option<GadgetKind>,
    share_randoms: bool,
) -> Result<(Dfg, GadgetMode, usize), CliError> {
    let Some(kind) = gadget else {
        return Ok((g, GadgetMode::None, 0));
    };
    if g.annotated_count() > 0 || g.has_edge_registers() {
        return Err(CliError::new(
            exit::VALIDATION,
            "--gadget needs a circuit without reg() annotations",
        ));
    }
    if let Some((annotated, inst)) = annotate_gadgets(&g, kind) {
        info!("recognised {} {kind} instance(s)", inst.len());
        return Ok((annotated, GadgetMode::Annotated, inst.len()));
    }
    let (masked, inst) = apply_masking_pass(&g, kind, share_randoms)
        .map_err(|e| CliError::new(exit::VALIDATION, e.to_string()))?;
    info!("masked {} AND gate(s) with {kind}", inst.len());
    Ok((masked, GadgetMode::Masked, inst.len()))
}

/// The circuit with every register removed, used as the reference.
fn unregistered(g: &Dfg) -> Dfg {
    let mut golden = g.clone();
    for n in &mut golden.nodes {
        n.annotated = false;
        n.regs.iter_mut().for_each(|r| *r = 0);
    }
    golden
}

/// Run the compile pipeline and build its report.
pub fn compile(args: &CompileArgs) -> Result<Report, CliError> {
    let start = Instant::now();
    let g = load(&args.input, args.format)?;
    let (g, gadget_mode, gadget_instances) = prepare(g, args.gadget, args.share_randoms)?;

    let (net, model_nodes, constraints): (PipelinedNetlist, usize, usize) = if args.naive {
        if !args.clock.is_finite() || args.clock <= 0.0 {
            return Err(CliError::from(RetimeError::Model(ModelError::BadClock(
                args.clock,
            ))));
        }
        (naive_balance(&g), 0, 0)
    } else {
        let r = retime(&g, args.clock)?;
        info!(
            "model: {} nodes, {} constraints, latency {}",
            r.model.len(),
            r.constraints.len(),
            r.netlist.latency
        );
        if let Some(p) = &args.dump_constraints {
            write(p, &format_constraints(&r.model, &r.constraints))?;
        }
        if let Some(p) = &args.dump_model {
            write(p, &r.model.to_dot())?;
        }
        let (m, c) = (r.model.len(), r.constraints.len());
        (r.netlist, m, c)
    };
    if args.naive && (args.dump_constraints.is_some() || args.dump_model.is_some()) {
        log::warn!("--naive builds no retiming model; nothing to dump");
    }

    if let Some(p) = &args.emit_verilog {
        let module = args.module_name.as_deref().unwrap_or(&g.name);
        let v = emit_verilog(&net, module);
        for (from, to) in &v.renames {
            log::warn!("renamed `{from}` to `{to}` in Verilog output");
        }
        write(p, &v.text)?;
    }
    if let Some(p) = &args.emit_source {
        write(p, &emit_balanced_source(&net))?;
    }

    let balance = check_balance(&net);
    let check = if args.check {
        let golden = unregistered(&g);
        let eq = check_equivalence(&net, &golden, args.trials, seed(args.seed)?)
            .map_err(|e| CliError::new(exit::EQUIVALENCE, e.to_string()))?;
        let (naive_regs, naive_lat) = if args.naive {
            (net.total_registers(), net.latency)
        } else {
            let nv = naive_balance(&g);
            (nv.total_registers(), nv.latency)
        };
        Some(CheckReport::new(
            &eq,
            net.total_registers(),
            net.latency,
            naive_regs,
            naive_lat,
        ))
    } else {
        None
    };

    Ok(Report {
        schema_version: REPORT_SCHEMA_VERSION,
        design: g.name.clone(),
        mode: if args.naive { "naive" } else { "balance" },
        gadget: args.gadget.map(|k| k.to_string()),
        gadget_mode,
        gadget_instances,
        inputs: g.inputs.len(),
        outputs: g.outputs.len(),
        nodes: g.operation_count(),
        model_nodes,
        constraints,
        clock: args.clock,
        ann_regs: net.annotated_registers(),
        bal_regs: net.balancing_registers(),
        total_regs: net.total_registers(),
        latency: net.latency,
        balance,
        check,
        runtime_s: start.elapsed().as_secs_f64(),
    })
}

fn mask(args: &MaskArgs) -> Result<(), CliError> {
    let g = load(&args.input, args.format)?;
    let (masked, _) = apply_masking_pass(&g, args.gadget, args.share_randoms)
        .map_err(|e| CliError::new(exit::VALIDATION, e.to_string()))?;
    let text = if args.json {
        dfg_to_json(&masked)
    } else {
        emit_source(&masked)
    };
    match &args.output {
        Some(p) => write(p, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run_compile(args: &CompileArgs) -> Result<(), CliError> {
    let report = compile(args)?;
    let json = serde_json::to_string_pretty(&report).expect("report serialises") + "\n";
    match &args.report {
        Some(p) => write(p, &json)?,
        None => print!("{json}"),
    }
    if let Some(c) = &report.check {
        if !c.equivalent {
            return Err(CliError::new(
                exit::EQUIVALENCE,
                format!(
                    "pipelined circuit differs from the reference ({} mismatching vector(s) shown)",
                    c.mismatches.len()
                ),
            ));
        }
        if !report.balance.balanced {
            return Err(CliError::new(
                exit::EQUIVALENCE,
                "pipelined circuit is not balanced",
            ));
        }
    }
    Ok(())
}

/// Parse `args` and run; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                exit::USAGE
            } else {
                exit::OK
            };
        }
    };
    let result = match &cli.command {
        Command::Compile(a) => run_compile(a),
        Command::Mask(a) => mask(a),
    };
    match result {
        Ok(()) => exit::OK,
        Err(e) => {
            eprintln!("maskedhls: {}", e.message);
            e.code
        }
    }
}
