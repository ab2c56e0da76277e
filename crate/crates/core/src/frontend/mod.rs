// SPDX-License-Identifier: Apache-2.0

//! Front end: masked C dialect and JSON netlists into a [`Dfg`].

mod dfg;
mod json;
mod parser;

pub use dfg::{
    validate_dfg, CanonNode, Dfg, Diagnostic, DiagnosticKind, Edge, Node, NodeId, NodeKind,
};
pub use json::{dfg_to_json, parse_json_netlist, JsonNetlist, JsonNode, PortRef};
pub use parser::parse_masked_c;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("{line}:{col}: syntax error: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("{line}:{col}: unsupported construct: {construct}")]
    Unsupported {
        line: usize,
        col: usize,
        construct: String,
    },
    #[error("{line}:{col}: use of undefined wire `{name}`")]
    UndefinedWire {
        line: usize,
        col: usize,
        name: String,
    },
    #[error("{line}:{col}: `{name}` is assigned more than once")]
    MultipleAssignment {
        line: usize,
        col: usize,
        name: String,
    },
    #[error("output `{name}` is never assigned")]
    OutputNeverAssigned { name: String },
    #[error("{line}:{col}: nested reg() has no meaning")]
    NestedReg { line: usize, col: usize },
    #[error("invalid JSON netlist: {0}")]
    Json(String),
}
