//! Text form of orbifold signatures and ingestion of action tables.
//!
//! Grammar (whitespace between tokens is ignored):
//!
//! ```text
//! signature  := '(' genus ';' orient ';' elliptic ';' boundaries ')'
//! orient     := '+' | '-'
//! elliptic   := '[-]' | '[' int (',' int)* ']'
//! boundaries := '{-}' | '{' bcomp (',' bcomp)* '}'
//! bcomp      := '(' ')' | '(' int (',' int)* ')'
//! ```
//!
//! `()` is a boundary circle made only of mirror points. The canonical
//! rendering is `(0; +; [-]; {(2,4,6)})`.
//!
//! Action tables are UTF-8 lines `g <TAB> order <TAB> signature [<TAB> λ]`,
//! `#` comments and blank lines allowed.

use std::collections::BTreeSet;
use std::fmt;
use std::io::BufRead;

use serde::Serialize;
use thiserror::Error;

use crate::orbifolds::{OrbifoldSignature, SignatureError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("invalid {field}: {message}")]
    Semantic {
        field: &'static str,
        message: String,
    },
}

impl ParseError {
    pub fn offset(&self) -> Option<usize> {
        match self {
            ParseError::Syntax { offset, .. } => Some(*offset),
            ParseError::Semantic { .. } => None,
        }
    }
}

impl From<SignatureError> for ParseError {
    fn from(e: SignatureError) -> Self {
        let field = match &e {
            SignatureError::NonOrientableGenusZero => "genus",
            SignatureError::TooComplex => "orders",
            SignatureError::OrderTooSmall { field, .. }
            | SignatureError::OrderTooLarge { field, .. } => field,
        };
        ParseError::Semantic {
            field,
            message: e.to_string(),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => self.err(format!("expected '{}', found '{}'", c as char, x as char)),
            None => self.err(format!("expected '{}', found end of input", c as char)),
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return match self.src.get(self.pos) {
                Some(&x) => self.err(format!("expected integer, found '{}'", x as char)),
                None => self.err("expected integer, found end of input"),
            };
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        text.parse::<u32>().map_err(|_| ParseError::Syntax {
            offset: start,
            message: format!("integer {text} out of range"),
        })
    }

    /// `[-]`, `{-}` or a comma-separated list closed by `close`.
    fn int_list(&mut self, close: u8) -> Result<Vec<u32>, ParseError> {
        let mut out = Vec::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            out.push(self.int()?);
            if self.eat(close) {
                return Ok(out);
            }
            self.expect(b',')?;
        }
    }

    fn elliptic(&mut self) -> Result<Vec<u32>, ParseError> {
        self.expect(b'[')?;
        if self.eat(b'-') {
            self.expect(b']')?;
            return Ok(Vec::new());
        }
        if self.peek() == Some(b']') {
            return self.err("empty elliptic list is written [-]");
        }
        self.int_list(b']')
    }

    fn boundaries(&mut self) -> Result<Vec<Vec<u32>>, ParseError> {
        self.expect(b'{')?;
        if self.eat(b'-') {
            self.expect(b'}')?;
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        loop {
            self.expect(b'(')?;
            out.push(self.int_list(b')')?);
            if self.eat(b'}') {
                return Ok(out);
            }
            self.expect(b',')?;
        }
    }

    fn signature(&mut self) -> Result<OrbifoldSignature, ParseError> {
        self.expect(b'(')?;
        let genus = self.int()?;
        self.expect(b';')?;
        let orientable = match self.peek() {
            Some(b'+') => true,
            Some(b'-') => false,
            Some(x) => return self.err(format!("expected '+' or '-', found '{}'", x as char)),
            None => return self.err("expected '+' or '-', found end of input"),
        };
        self.pos += 1;
        self.expect(b';')?;
        let elliptic = self.elliptic()?;
        self.expect(b';')?;
        let boundaries = self.boundaries()?;
        self.expect(b')')?;
        if self.peek().is_some() {
            return self.err("trailing characters after signature");
        }
        Ok(OrbifoldSignature::new(
            orientable, genus, elliptic, boundaries,
        )?)
    }
}

pub fn parse_signature(text: &str) -> Result<OrbifoldSignature, ParseError> {
    Parser {
        src: text.as_bytes(),
        pos: 0,
    }
    .signature()
}

fn join(xs: &[u32]) -> String {
    xs.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

pub fn render_signature(sig: &OrbifoldSignature) -> String {
    let elliptic = if sig.elliptic_orders().is_empty() {
        "[-]".to_string()
    } else {
        format!("[{}]", join(sig.elliptic_orders()))
    };
    let boundaries = if sig.boundaries().is_empty() {
        "{-}".to_string()
    } else {
        let parts: Vec<String> = sig
            .boundaries()
            .iter()
            .map(|b| format!("({})", join(b.corners())))
            .collect();
        format!("{{{}}}", parts.join(", "))
    };
    format!(
        "({}; {}; {}; {})",
        sig.genus(),
        if sig.is_orientable() { '+' } else { '-' },
        elliptic,
        boundaries
    )
}

impl fmt::Display for OrbifoldSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_signature(self))
    }
}

impl std::str::FromStr for OrbifoldSignature {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_signature(s)
    }
}

/// One known action of a finite group on `N_g`: its order, quotient
/// signature and, when known, the exact subgroup chain length of the group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ActionRow {
    pub genus: u32,
    pub order: u64,
    pub signature: OrbifoldSignature,
    pub lambda_max: Option<u32>,
}

impl ActionRow {
    pub fn to_tsv(&self) -> String {
        let mut line = format!("{}\t{}\t{}", self.genus, self.order, self.signature);
        if let Some(l) = self.lambda_max {
            line.push_str(&format!("\t{l}"));
        }
        line
    }

    fn sort_key(&self) -> (u32, std::cmp::Reverse<u64>, String, Option<u32>) {
        (
            self.genus,
            std::cmp::Reverse(self.order),
            self.signature.to_string(),
            self.lambda_max,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineDiagnostic {
    pub line: usize,
    pub reason: String,
}

impl fmt::Display for LineDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.reason)
    }
}

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("read failed: {0}")]
    Io(#[from] std::io::Error),
    #[error("{} invalid line(s); first: {}", .0.len(), .0[0])]
    Invalid(Vec<LineDiagnostic>),
}

fn parse_row(line: &str) -> Result<ActionRow, String> {
    let fields: Vec<&str> = line.split('\t').collect();
    if !(3..=4).contains(&fields.len()) {
        return Err(format!(
            "expected 3 or 4 tab-separated fields, found {}",
            fields.len()
        ));
    }
    let genus: u32 = fields[0]
        .trim()
        .parse()
        .map_err(|_| format!("bad genus `{}`", fields[0]))?;
    if genus < 3 {
        return Err(format!("genus {genus} is below 3"));
    }
    let order: u64 = fields[1]
        .trim()
        .parse()
        .map_err(|_| format!("bad order `{}`", fields[1]))?;
    if order == 0 {
        return Err("order must be positive".into());
    }
    let signature = parse_signature(fields[2]).map_err(|e| format!("signature: {e}"))?;
    let lambda_max = match fields.get(3).map(|s| s.trim()) {
        None | Some("") => None,
        Some(t) => Some(t.parse().map_err(|_| format!("bad lambda_max `{t}`"))?),
    };
    match signature.rh_order(genus) {
        Some(o) if o == order => {}
        Some(o) => {
            return Err(format!(
                "RH mismatch: {signature} on N_{genus} forces order {o}, not {order}"
            ))
        }
        None => {
            return Err(format!(
                "RH mismatch: {signature} is not a quotient of N_{genus} for any order"
            ))
        }
    }
    Ok(ActionRow {
        genus,
        order,
        signature,
        lambda_max,
    })
}

/// Reads an action table. Every line is checked; if any fails, all
/// diagnostics are returned together. Output is deduplicated and sorted by
/// genus, descending order, then signature text.
pub fn ingest_actions<R: BufRead>(reader: R) -> Result<Vec<ActionRow>, IngestError> {
    let mut rows = BTreeSet::new();
    let mut diagnostics = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let body = line.trim_end_matches('\r');
        if body.trim().is_empty() || body.trim_start().starts_with('#') {
            continue;
        }
        match parse_row(body) {
            Ok(row) => {
                rows.insert((row.sort_key(), row));
            }
            Err(reason) => diagnostics.push(LineDiagnostic {
                line: idx + 1,
                reason,
            }),
        }
    }
    if !diagnostics.is_empty() {
        return Err(IngestError::Invalid(diagnostics));
    }
    Ok(rows.into_iter().map(|(_, row)| row).collect())
}

pub fn ingest_actions_path(
    path: impl AsRef<std::path::Path>,
) -> Result<Vec<ActionRow>, IngestError> {
    let file = std::fs::File::open(path)?;
    ingest_actions(std::io::BufReader::new(file))
}
