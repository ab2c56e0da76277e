// SPDX-License-Identifier: Apache-2.0

//! Parser for the straight-line boolean C dialect.
//!
//! ```text
//! function := "int" ident "(" params ")" "{" stmt* ["return" "0" ";"] "}"
//! stmt     := ["bool"] ["*"] ident "=" expr ";" | "bool" ident ("," ident)* ";"
//! expr     := term ("^" term)*
//! term     := factor (("&" | "*") factor)*
//! factor   := ("~" | "!") factor | "reg" "(" expr ")" | "(" expr ")"
//!           | ["*"] ident | "0" | "1"
//! ```
//!
//! `reg(e)` marks the operator at the root of `e` as registered. Wrapping a
//! bare wire or constant instead puts a register on that particular use.

use std::collections::HashMap;

use super::dfg::{Dfg, NodeId, NodeKind};
use super::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Number(String),
    Punct(&'static str),
    Eof,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

const PUNCT: &[&str] = &[
    "<<=", ">>=", "&&", "||", "==", "!=", "<=", ">=", "<<", ">>", "++", "--", "+=", "-=", "*=",
    "/=", "&=", "|=", "^=", "->", "(", ")", "{", "}", "[", "]", ",", ";", "=", "^", "&", "*", "~",
    "!", "|", "+", "-", "/", "%", "<", ">", "?", ":", ".", "#",
];

fn lex(src: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    macro_rules! bump {
        () => {{
            if chars[i] == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            i += 1;
        }};
    }
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            bump!();
            continue;
        }
        if c == '/' && chars.get(i + 1) == Some(&'/') {
            while i < chars.len() && chars[i] != '\n' {
                bump!();
            }
            continue;
        }
        if c == '/' && chars.get(i + 1) == Some(&'*') {
            let (l0, c0) = (line, col);
            bump!();
            bump!();
            loop {
                if i >= chars.len() {
                    return Err(ParseError::Syntax {
                        line: l0,
                        col: c0,
                        message: "unterminated comment".into(),
                    });
                }
                if chars[i] == '*' && chars.get(i + 1) == Some(&'/') {
                    bump!();
                    bump!();
                    break;
                }
                bump!();
            }
            continue;
        }
        let (l0, c0) = (line, col);
        if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                s.push(chars[i]);
                bump!();
            }
            out.push(Token {
                tok: Tok::Ident(s),
                line: l0,
                col: c0,
            });
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                s.push(chars[i]);
                bump!();
            }
            out.push(Token {
                tok: Tok::Number(s),
                line: l0,
                col: c0,
            });
            continue;
        }
        let rest: String = chars[i..chars.len().min(i + 3)].iter().collect();
        match PUNCT.iter().find(|p| rest.starts_with(**p)) {
            Some(p) => {
                for _ in 0..p.len() {
                    bump!();
                }
                out.push(Token {
                    tok: Tok::Punct(p),
                    line: l0,
                    col: c0,
                });
            }
            None => {
                return Err(ParseError::Syntax {
                    line: l0,
                    col: c0,
                    message: format!("unexpected character `{c}`"),
                })
            }
        }
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        col,
    });
    Ok(out)
}

/// A reference to a wire: driving node plus registers on this particular use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct WireRef {
    node: NodeId,
    regs: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ParamKind {
    In,
    Out,
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    g: Dfg,
    wires: HashMap<String, WireRef>,
    params: HashMap<String, ParamKind>,
    out_order: Vec<String>,
    out_drivers: HashMap<String, WireRef>,
    /// Nodes created while parsing the current statement.
    fresh_from: NodeId,
}

const UNSUPPORTED_KEYWORDS: &[&str] = &[
    "if", "else", "for", "while", "do", "switch", "case", "goto", "break", "continue", "struct",
    "union", "typedef", "static", "extern",
];

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn is_punct(&self, p: &str) -> bool {
        matches!(&self.peek().tok, Tok::Punct(q) if *q == p)
    }

    fn is_ident(&self, s: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(q) if q == s)
    }

    fn syntax<T>(&self, t: &Token, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            line: t.line,
            col: t.col,
            message: message.into(),
        })
    }

    fn unsupported<T>(&self, t: &Token, what: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Unsupported {
            line: t.line,
            col: t.col,
            construct: what.into(),
        })
    }

    /// Reject a token that belongs to C but not to this dialect, or report a
    /// plain syntax error.
    fn reject<T>(&self, t: &Token, expected: &str) -> Result<T, ParseError> {
        match &t.tok {
            Tok::Ident(s) if UNSUPPORTED_KEYWORDS.contains(&s.as_str()) => {
                self.unsupported(t, format!("`{s}` (only straight-line code is accepted)"))
            }
            Tok::Punct(p) if matches!(*p, "[" | "]") => self.unsupported(t, "arrays"),
            Tok::Punct(p) if *p == "#" => self.unsupported(t, "preprocessor directives"),
            Tok::Punct(p)
                if matches!(
                    *p,
                    "|" | "+"
                        | "-"
                        | "/"
                        | "%"
                        | "<<"
                        | ">>"
                        | "&&"
                        | "||"
                        | "=="
                        | "!="
                        | "<"
                        | ">"
                        | "<="
                        | ">="
                        | "?"
                        | "++"
                        | "--"
                        | "+="
                        | "-="
                        | "*="
                        | "/="
                        | "&="
                        | "|="
                        | "^="
                        | "<<="
                        | ">>="
                ) =>
            {
                self.unsupported(t, format!("operator `{p}`"))
            }
            Tok::Eof => self.syntax(t, format!("unexpected end of input, expected {expected}")),
            Tok::Ident(s) | Tok::Number(s) => {
                self.syntax(t, format!("unexpected `{s}`, expected {expected}"))
            }
            Tok::Punct(p) => self.syntax(t, format!("unexpected `{p}`, expected {expected}")),
        }
    }

    fn expect_punct(&mut self, p: &str) -> Result<Token, ParseError> {
        if self.is_punct(p) {
            Ok(self.next())
        } else {
            let t = self.peek().clone();
            self.reject(&t, &format!("`{p}`"))
        }
    }

    fn expect_ident(&mut self) -> Result<(String, Token), ParseError> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Ident(s) if !UNSUPPORTED_KEYWORDS.contains(&s.as_str()) => {
                let s = s.clone();
                self.next();
                Ok((s, t))
            }
            _ => self.reject(&t, "identifier"),
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<Token, ParseError> {
        if self.is_ident(kw) {
            Ok(self.next())
        } else {
            let t = self.peek().clone();
            self.reject(&t, &format!("`{kw}`"))
        }
    }

    fn function(&mut self) -> Result<(), ParseError> {
        if self.is_ident("void") {
            self.next();
        } else {
            self.expect_keyword("int")?;
        }
        let (name, _) = self.expect_ident()?;
        self.g.name = name;
        self.expect_punct("(")?;
        if !self.is_punct(")") {
            loop {
                self.param()?;
                if self.is_punct(",") {
                    self.next();
                    continue;
                }
                break;
            }
        }
        self.expect_punct(")")?;
        self.expect_punct("{")?;
        loop {
            if self.is_punct("}") {
                self.next();
                break;
            }
            if self.is_ident("return") {
                self.next();
                if !self.is_punct(";") {
                    let t = self.next();
                    if t.tok != Tok::Number("0".into()) {
                        return self.syntax(&t, "only `return 0;` is accepted");
                    }
                }
                self.expect_punct(";")?;
                continue;
            }
            self.statement()?;
        }
        let t = self.peek().clone();
        match t.tok {
            Tok::Eof => Ok(()),
            Tok::Ident(ref s) if s == "int" || s == "void" => {
                self.unsupported(&t, "more than one function")
            }
            _ => self.reject(&t, "end of input"),
        }
    }

    fn param(&mut self) -> Result<(), ParseError> {
        let ty = self.peek().clone();
        match &ty.tok {
            Tok::Ident(s) if s == "bool" || s == "_Bool" => {
                self.next();
            }
            Tok::Ident(s) => return self.unsupported(&ty, format!("parameter type `{s}`")),
            _ => return self.reject(&ty, "`bool`"),
        }
        let is_out = if self.is_punct("*") {
            self.next();
            true
        } else {
            false
        };
        let (name, tok) = self.expect_ident()?;
        if self.is_punct("[") {
            let t = self.peek().clone();
            return self.unsupported(&t, "arrays");
        }
        if self.params.contains_key(&name) {
            return Err(ParseError::MultipleAssignment {
                line: tok.line,
                col: tok.col,
                name,
            });
        }
        if is_out {
            self.params.insert(name.clone(), ParamKind::Out);
            self.out_order.push(name);
        } else {
            self.params.insert(name.clone(), ParamKind::In);
            let id = self.g.add_input(name.clone());
            self.wires.insert(name, WireRef { node: id, regs: 0 });
        }
        Ok(())
    }

    fn statement(&mut self) -> Result<(), ParseError> {
        let mut declared = false;
        if self.is_ident("bool") || self.is_ident("_Bool") {
            self.next();
            declared = true;
        } else if let Tok::Ident(s) = &self.peek().tok {
            if matches!(
                s.as_str(),
                "int" | "char" | "unsigned" | "long" | "short" | "uint8_t" | "void"
            ) {
                let t = self.peek().clone();
                return self.unsupported(&t, format!("type `{s}`"));
            }
        }
        let deref = if self.is_punct("*") {
            self.next();
            true
        } else {
            false
        };
        let (name, tok) = self.expect_ident()?;
        if declared && !deref && (self.is_punct(";") || self.is_punct(",")) {
            // Pure declaration list.
            while self.is_punct(",") {
                self.next();
                self.expect_ident()?;
            }
            self.expect_punct(";")?;
            return Ok(());
        }
        if self.is_punct("(") {
            return self.unsupported(&tok, format!("call to `{name}`"));
        }
        self.expect_punct("=")?;
        self.fresh_from = self.g.nodes.len();
        let value = self.expr()?;
        self.expect_punct(";")?;
        self.assign(name, &tok, value)
    }

    fn assign(&mut self, name: String, tok: &Token, value: WireRef) -> Result<(), ParseError> {
        let dup = || ParseError::MultipleAssignment {
            line: tok.line,
            col: tok.col,
            name: name.clone(),
        };
        match self.params.get(&name) {
            Some(ParamKind::In) => return Err(dup()),
            Some(ParamKind::Out) => {
                if self.out_drivers.contains_key(&name) {
                    return Err(dup());
                }
                self.out_drivers.insert(name.clone(), value);
            }
            None => {
                if self.wires.contains_key(&name) {
                    return Err(dup());
                }
            }
        }
        // Name a freshly built operator after the wire it defines.
        let node = &mut self.g.nodes[value.node];
        if value.regs == 0 && value.node >= self.fresh_from && node.name.is_none() {
            node.name = Some(name.clone());
        }
        self.wires.insert(name, value);
        Ok(())
    }

    fn expr(&mut self) -> Result<WireRef, ParseError> {
        let mut lhs = self.term()?;
        while self.is_punct("^") {
            self.next();
            let rhs = self.term()?;
            lhs = self.binary(NodeKind::Xor, lhs, rhs);
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<WireRef, ParseError> {
        let mut lhs = self.factor()?;
        while self.is_punct("&") || self.is_punct("*") {
            self.next();
            let rhs = self.factor()?;
            lhs = self.binary(NodeKind::And, lhs, rhs);
        }
        Ok(lhs)
    }

    fn binary(&mut self, kind: NodeKind, a: WireRef, b: WireRef) -> WireRef {
        let id = self.g.add_op(kind, &[a.node, b.node], false);
        self.g.nodes[id].regs = vec![a.regs, b.regs];
        WireRef { node: id, regs: 0 }
    }

    fn factor(&mut self) -> Result<WireRef, ParseError> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Punct("~") | Tok::Punct("!") => {
                self.next();
                let a = self.factor()?;
                let id = self.g.add_op(NodeKind::Not, &[a.node], false);
                self.g.nodes[id].regs = vec![a.regs];
                Ok(WireRef { node: id, regs: 0 })
            }
            Tok::Punct("(") => {
                self.next();
                let v = self.expr()?;
                self.expect_punct(")")?;
                Ok(v)
            }
            Tok::Punct("*") => {
                self.next();
                self.wire_use()
            }
            Tok::Number(n) => {
                self.next();
                match n.as_str() {
                    "0" => Ok(WireRef {
                        node: self.g.add_const(false),
                        regs: 0,
                    }),
                    "1" => Ok(WireRef {
                        node: self.g.add_const(true),
                        regs: 0,
                    }),
                    _ => self.unsupported(&t, format!("integer literal `{n}`")),
                }
            }
            Tok::Ident(s) if s == "reg" => {
                self.next();
                self.reg_call()
            }
            Tok::Ident(_) => {
                if matches!(self.toks[self.pos + 1].tok, Tok::Punct("(")) {
                    let (name, _) = self.expect_ident()?;
                    return self.unsupported(&t, format!("call to `{name}`"));
                }
                self.wire_use()
            }
            _ => self.reject(&t, "an operand"),
        }
    }

    fn reg_call(&mut self) -> Result<WireRef, ParseError> {
        self.expect_punct("(")?;
        // Look through redundant parentheses for a directly nested reg.
        let mut k = self.pos;
        while matches!(self.toks[k].tok, Tok::Punct("(")) {
            k += 1;
        }
        if matches!(&self.toks[k].tok, Tok::Ident(s) if s == "reg") {
            let inner = self.toks[k].clone();
            return Err(ParseError::NestedReg {
                line: inner.line,
                col: inner.col,
            });
        }
        let start = self.g.nodes.len();
        let v = self.expr()?;
        self.expect_punct(")")?;
        let fresh_op = v.regs == 0 && v.node >= start && self.g.nodes[v.node].kind.is_operation();
        if fresh_op {
            self.g.nodes[v.node].annotated = true;
            Ok(v)
        } else if v.node >= start && self.g.nodes[v.node].kind.is_const() {
            // A constant has no timing; a register on it is meaningless.
            Ok(v)
        } else {
            Ok(WireRef {
                node: v.node,
                regs: v.regs + 1,
            })
        }
    }

    fn wire_use(&mut self) -> Result<WireRef, ParseError> {
        let (name, tok) = self.expect_ident()?;
        if self.is_punct("[") {
            let t = self.peek().clone();
            return self.unsupported(&t, "arrays");
        }
        if let Some(w) = self.wires.get(&name) {
            return Ok(*w);
        }
        Err(ParseError::UndefinedWire {
            line: tok.line,
            col: tok.col,
            name,
        })
    }
}

/// Parse one function of the dialect into a [`Dfg`].
///
/// The graph mirrors the source one operator per occurrence. It is not
/// validated here; use [`crate::frontend::validate_dfg`] for dead code and
/// similar structural checks.
pub fn parse_masked_c(text: &str) -> Result<Dfg, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        g: Dfg::new(""),
        wires: HashMap::new(),
        params: HashMap::new(),
        out_order: Vec::new(),
        out_drivers: HashMap::new(),
        fresh_from: 0,
    };
    p.function()?;
    let Parser {
        mut g,
        out_order,
        out_drivers,
        ..
    } = p;
    for name in out_order {
        let Some(w) = out_drivers.get(&name) else {
            return Err(ParseError::OutputNeverAssigned { name });
        };
        g.add_output(name, w.node, w.regs);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexes_comments_and_positions() {
        let t = lex("a // x\n /* y */ ^b").unwrap();
        assert_eq!(t[0].tok, Tok::Ident("a".into()));
        assert_eq!((t[1].line, t[1].col), (2, 10));
    }

    #[test]
    fn precedence_and_binds_tighter_than_xor() {
        let g =
            parse_masked_c("int f(bool a, bool b, bool c, bool *y) { *y = a ^ b & c; }").unwrap();
        let root = g.nodes[g.outputs[0]].args[0];
        assert_eq!(g.nodes[root].kind, NodeKind::Xor);
        assert_eq!(g.nodes[g.nodes[root].args[1]].kind, NodeKind::And);
    }

    #[test]
    fn reg_on_wire_is_an_edge_register() {
        let g = parse_masked_c("int f(bool a, bool b, bool *y) { t = a & b; *y = reg(t) ^ a; }")
            .unwrap();
        let x = g.nodes[g.outputs[0]].args[0];
        assert_eq!(g.nodes[x].regs, vec![1, 0]);
        assert_eq!(g.annotated_count(), 0);
    }

    #[test]
    fn nested_reg_is_rejected() {
        let e = parse_masked_c("int f(bool a, bool *y) { *y = reg((reg(~a))); }").unwrap_err();
        assert!(matches!(e, ParseError::NestedReg { .. }));
    }

    #[test]
    fn constants_are_per_occurrence() {
        let g = parse_masked_c("int f(bool a, bool *y) { *y = (a ^ 1) ^ 1; }").unwrap();
        assert_eq!(g.count_kind(NodeKind::Const1), 2);
    }
}
