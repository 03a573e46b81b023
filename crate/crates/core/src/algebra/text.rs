//! Line-oriented text format for functions.
//!
//! ```text
//! # bound=10 field=rational
//! 2 1/1
//! 6 -3/4
//! ```
//!
//! The header is mandatory. Each following line is `<index> <coefficient>`
//! in ascending index order; zero coefficients are omitted on output and
//! accepted on input. Other lines starting with `#` are annotations and are
//! skipped by the parser. Several functions are written as blocks separated
//! by blank lines.

use std::fmt::Write as _;

use thiserror::Error;

use super::coefficient::{Coefficient, FieldKind};
use super::function::ArithFunc;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        Self { line, message: message.into() }
    }
}

pub fn header(bound: usize, field: FieldKind) -> String {
    format!("# bound={bound} field={field}")
}

/// Parses a header line into `(bound, field)`.
pub fn parse_header(line: &str) -> Option<(usize, FieldKind)> {
    let rest = line.trim().strip_prefix('#')?.trim();
    let mut bound = None;
    let mut field = None;
    for tok in rest.split_whitespace() {
        if let Some(b) = tok.strip_prefix("bound=") {
            bound = Some(b.parse().ok()?);
        } else {
            let f = tok.strip_prefix("field=")?;
            field = Some(f.parse().ok()?);
        }
    }
    Some((bound?, field?))
}

/// Reads the header of the first block without parsing values.
pub fn peek_header(text: &str) -> Result<(usize, FieldKind), ParseError> {
    let (idx, line) = text
        .lines()
        .enumerate()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| ParseError::new(1, "empty input"))?;
    parse_header(line).ok_or_else(|| ParseError::new(idx + 1, "expected `# bound=<N> field=<rational|gaussian>`"))
}

pub fn to_text<C: Coefficient>(f: &ArithFunc<C>) -> String {
    let mut out = header(f.bound(), C::FIELD);
    out.push('\n');
    for (n, c) in f.entries() {
        writeln!(out, "{n} {}", c.to_text()).unwrap();
    }
    out
}

/// Writes several functions as blank-line separated blocks.
pub fn blocks_to_text<'a, C: Coefficient>(fs: impl IntoIterator<Item = &'a ArithFunc<C>>) -> String {
    fs.into_iter().map(to_text).collect::<Vec<_>>().join("\n")
}

fn parse_lines<'a, C: Coefficient>(
    lines: impl IntoIterator<Item = (usize, &'a str)>,
) -> Result<ArithFunc<C>, ParseError> {
    let mut lines = lines.into_iter();
    let (hline, htext) = lines.next().ok_or_else(|| ParseError::new(1, "empty block"))?;
    let (bound, field) = parse_header(htext)
        .ok_or_else(|| ParseError::new(hline, "expected `# bound=<N> field=<rational|gaussian>`"))?;
    if field != C::FIELD {
        return Err(ParseError::new(hline, format!("field is {field}, expected {}", C::FIELD)));
    }
    let mut values = vec![C::zero(); bound];
    let mut seen = vec![false; bound];
    for (ln, text) in lines {
        let text = text.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let (idx, coeff) = text
            .split_once(char::is_whitespace)
            .ok_or_else(|| ParseError::new(ln, "expected `<index> <coefficient>`"))?;
        let idx: usize = idx.parse().map_err(|_| ParseError::new(ln, format!("bad index `{idx}`")))?;
        if idx == 0 || idx > bound {
            return Err(ParseError::new(ln, format!("index {idx} outside 1..={bound}")));
        }
        if seen[idx - 1] {
            return Err(ParseError::new(ln, format!("duplicate index {idx}")));
        }
        seen[idx - 1] = true;
        values[idx - 1] = C::parse_text(coeff.trim())
            .ok_or_else(|| ParseError::new(ln, format!("bad coefficient `{}`", coeff.trim())))?;
    }
    ArithFunc::from_values(values).map_err(|e| ParseError::new(hline, e.to_string()))
}

/// Parses a single function.
pub fn parse<C: Coefficient>(text: &str) -> Result<ArithFunc<C>, ParseError> {
    let mut blocks = parse_blocks::<C>(text)?;
    match blocks.len() {
        1 => Ok(blocks.pop().unwrap()),
        0 => Err(ParseError::new(1, "empty input")),
        n => Err(ParseError::new(1, format!("expected one function, found {n} blocks"))),
    }
}

/// Parses every block of a blank-line separated file. Blocks start at a
/// header line; annotation lines before a header are skipped.
pub fn parse_blocks<C: Coefficient>(text: &str) -> Result<Vec<ArithFunc<C>>, ParseError> {
    let mut out = Vec::new();
    let mut current: Vec<(usize, &str)> = Vec::new();
    let flush = |current: &mut Vec<(usize, &str)>, out: &mut Vec<ArithFunc<C>>| -> Result<(), ParseError> {
        if let Some(start) = current.iter().position(|(_, l)| parse_header(l).is_some()) {
            out.push(parse_lines(current.drain(start..))?);
        } else if let Some(&(ln, l)) = current.iter().find(|(_, l)| !l.trim().starts_with('#')) {
            return Err(ParseError::new(ln, format!("entry `{l}` before any header")));
        }
        current.clear();
        Ok(())
    };
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            flush(&mut current, &mut out)?;
        } else {
            current.push((i + 1, line));
        }
    }
    flush(&mut current, &mut out)?;
    Ok(out)
}
