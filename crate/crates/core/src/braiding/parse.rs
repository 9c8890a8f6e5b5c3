//! R-matrix file format and the expression grammar for entry values.
//!
//! Files are JSON:
//!   { "name": str, "dim": N, "kind": "hecke"|"involutive"|"auto",
//!     "entries": [ {"row": r, "col": c, "value": expr}, ... ] }
//! with 0 <= row, col < N^2 in the mixed-radix convention (leftmost tensor
//! factor most significant) and omitted entries zero.
//!
//! The value grammar (whitespace insignificant, decimals rejected):
//!   expr   := term (('+'|'-') term)*
//!   term   := factor (('*'|'/') factor)*
//!   factor := '-' factor | base ('^' signed-integer)?
//!   base   := integer | 'q' | 'h' | '(' expr ')'

use super::{Braiding, BraidKind, BraidingError};
use crate::scalar::{Scalar, Var};
use crate::tensor::TensorOp;
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Deserialize;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("position {pos}: unexpected character `{ch}`")]
    UnexpectedChar { pos: usize, ch: char },
    #[error("position {pos}: decimal literals are rejected; use exact fractions")]
    DecimalRejected { pos: usize },
    #[error("position {pos}: expected {expected}")]
    Expected { pos: usize, expected: String },
    #[error("position {pos}: division by zero in constant expression")]
    DivisionByZero { pos: usize },
    #[error("position {pos}: mixed formal variables q and h in one expression")]
    MixedVariables { pos: usize },
    #[error("invalid JSON envelope: {0}")]
    Json(String),
    #[error("entry {index}: row/col {row},{col} out of range for dim {dim}")]
    EntryOutOfRange {
        index: usize,
        row: u32,
        col: u32,
        dim: u32,
    },
    #[error("entry {index} (`{value}`): {source}")]
    EntryValue {
        index: usize,
        value: String,
        source: Box<ParseError>,
    },
    #[error("unknown kind `{0}`; expected hecke, involutive or auto")]
    UnknownKind(String),
}

#[derive(Clone, Copy, PartialEq, Debug)]
enum Tok {
    Int(i128),
    Q,
    H,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let bytes: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i];
        match ch {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '0'..='9' => {
                let start = i;
                let mut v: i128 = 0;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    v = v * 10 + (bytes[i] as i128 - '0' as i128);
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == '.' {
                    return Err(ParseError::DecimalRejected { pos: i });
                }
                out.push((start, Tok::Int(v)));
            }
            'q' => {
                out.push((i, Tok::Q));
                i += 1;
            }
            'h' => {
                out.push((i, Tok::H));
                i += 1;
            }
            '+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            '/' => {
                out.push((i, Tok::Slash));
                i += 1;
            }
            '^' => {
                out.push((i, Tok::Caret));
                i += 1;
            }
            '(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            '.' => return Err(ParseError::DecimalRejected { pos: i }),
            _ => return Err(ParseError::UnexpectedChar { pos: i, ch }),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    i: usize,
    src_len: usize,
}

impl Parser {
    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.i).map(|(_, t)| *t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.src_len, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.peek();
        if t.is_some() {
            self.i += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(t) {
            self.i += 1;
            Ok(())
        } else {
            Err(ParseError::Expected {
                pos: self.pos(),
                expected: what.to_string(),
            })
        }
    }

    fn expr(&mut self) -> Result<Scalar, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.i += 1;
                    acc = self.checked(|a, b| a.add(b), acc, self.i, true)?;
                }
                Some(Tok::Minus) => {
                    self.i += 1;
                    acc = self.checked(|a, b| a.sub(b), acc, self.i, true)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn checked(
        &mut self,
        op: impl Fn(&Scalar, &Scalar) -> Scalar,
        acc: Scalar,
        _at: usize,
        term_level: bool,
    ) -> Result<Scalar, ParseError> {
        let pos = self.pos();
        let rhs = if term_level { self.term()? } else { self.factor()? };
        if acc.variable().is_some()
            && rhs.variable().is_some()
            && acc.variable() != rhs.variable()
        {
            return Err(ParseError::MixedVariables { pos });
        }
        Ok(op(&acc, &rhs))
    }

    fn term(&mut self) -> Result<Scalar, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.i += 1;
                    acc = self.checked(|a, b| a.mul(b), acc, self.i, false)?;
                }
                Some(Tok::Slash) => {
                    self.i += 1;
                    let pos = self.pos();
                    let rhs = self.factor()?;
                    if rhs.is_zero() {
                        return Err(ParseError::DivisionByZero { pos });
                    }
                    if acc.variable().is_some()
                        && rhs.variable().is_some()
                        && acc.variable() != rhs.variable()
                    {
                        return Err(ParseError::MixedVariables { pos });
                    }
                    acc = acc.div(&rhs);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Scalar, ParseError> {
        if self.peek() == Some(Tok::Minus) {
            self.i += 1;
            return Ok(self.factor()?.neg());
        }
        let base = self.base()?;
        if self.peek() == Some(Tok::Caret) {
            self.i += 1;
            let pos = self.pos();
            let neg = if self.peek() == Some(Tok::Minus) {
                self.i += 1;
                true
            } else {
                false
            };
            match self.bump() {
                Some(Tok::Int(e)) => {
                    let e = if neg { -e } else { e };
                    if base.is_zero() && e < 0 {
                        return Err(ParseError::DivisionByZero { pos });
                    }
                    Ok(base.pow(e as i64))
                }
                _ => Err(ParseError::Expected {
                    pos,
                    expected: "signed integer exponent".into(),
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Scalar, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(v)) => Ok(Scalar::from_rat(BigRational::from_integer(BigInt::from(v)))),
            Some(Tok::Q) => Ok(Scalar::var(Var::Q)),
            Some(Tok::H) => Ok(Scalar::var(Var::H)),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "closing parenthesis")?;
                Ok(e)
            }
            _ => Err(ParseError::Expected {
                pos,
                expected: "integer, q, h or parenthesized expression".into(),
            }),
        }
    }
}

/// Parse a scalar expression in the entry grammar.
pub fn parse_expr(src: &str) -> Result<Scalar, ParseError> {
    let toks = tokenize(src)?;
    let mut p = Parser {
        toks,
        i: 0,
        src_len: src.len(),
    };
    let e = p.expr()?;
    if p.i != p.toks.len() {
        return Err(ParseError::Expected {
            pos: p.pos(),
            expected: "end of expression".into(),
        });
    }
    Ok(e)
}

#[derive(Deserialize)]
struct FileEntry {
    row: u32,
    col: u32,
    value: String,
}

#[derive(Deserialize)]
struct RMatrixFile {
    name: String,
    dim: u32,
    #[serde(default = "default_kind")]
    kind: String,
    entries: Vec<FileEntry>,
}

fn default_kind() -> String {
    "auto".to_string()
}

/// Parse the JSON envelope and the entry grammar without any verification;
/// callers that want a checked braiding use [`load_braiding_str`].
pub fn load_matrix_str(
    text: &str,
) -> Result<(String, u32, TensorOp<Scalar>, Option<BraidKind>), ParseError> {
    let file: RMatrixFile =
        serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    let declared = match file.kind.as_str() {
        "auto" => None,
        "hecke" => Some(BraidKind::Hecke),
        "involutive" => Some(BraidKind::Involutive),
        other => return Err(ParseError::UnknownKind(other.to_string())),
    };
    let n2 = file.dim * file.dim;
    let mut mat = TensorOp::zero(2, file.dim);
    for (index, e) in file.entries.iter().enumerate() {
        if e.row >= n2 || e.col >= n2 {
            return Err(ParseError::EntryOutOfRange {
                index,
                row: e.row,
                col: e.col,
                dim: file.dim,
            });
        }
        let v = parse_expr(&e.value).map_err(|source| ParseError::EntryValue {
            index,
            value: e.value.clone(),
            source: Box::new(source),
        })?;
        mat.set(e.row, e.col, v);
    }
    Ok((file.name, file.dim, mat, declared))
}

/// Parse, classify and fully verify a braiding from JSON text.
pub fn load_braiding_str(text: &str) -> Result<Braiding, BraidingError> {
    let (name, dim, mat, declared) = load_matrix_str(text)?;
    Braiding::verify_and_build(&name, dim, mat, declared)
}

/// Parse a matrix file without verification.
pub fn load_matrix(
    path: &std::path::Path,
) -> Result<(String, u32, TensorOp<Scalar>, Option<BraidKind>), ParseError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| ParseError::Json(format!("cannot read {}: {e}", path.display())))?;
    load_matrix_str(&text)
}

/// Load a braiding from a file path.
pub fn load_braiding(path: &std::path::Path) -> Result<Braiding, BraidingError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| ParseError::Json(format!("cannot read {}: {e}", path.display())))?;
    load_braiding_str(&text)
}
