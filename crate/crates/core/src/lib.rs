// SPDX-License-Identifier: Apache-2.0

//! Compiler from register-annotated, gadget-masked boolean C to pipelined
//! RTL whose parallel paths are balanced with the minimum number of stages.
//!
//! The flow is [`frontend`] (parse) -> [`gadgets`] (optional masking) ->
//! [`hlsmodel`] (retiming model) -> [`retimer`] (constraints, solve, apply)
//! -> [`codegen`] (C and Verilog), with [`simcheck`] for simulation,
//! equivalence and the full-cut baseline.

pub mod cli;
pub mod codegen;
pub mod frontend;
pub mod gadgets;
pub mod hlsmodel;
pub mod retimer;
pub mod simcheck;
