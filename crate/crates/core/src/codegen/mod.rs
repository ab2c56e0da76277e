// SPDX-License-Identifier: Apache-2.0

//! Text back ends: the C dialect (annotated or balanced) and Verilog.

mod source;
mod verilog;

pub use source::{emit_balanced_source, emit_source};
pub use verilog::{emit_verilog, VerilogModule, CLOCK};
