//! Plain-text code and word files.
//!
//! A code file starts with a header line `p k n` followed by `k` rows of
//! `n` residues. A word file holds a single row of `n` residues. Tokens are
//! base-10 digit strings separated by exactly one space; every line ends in
//! `\n` (the final newline may be omitted). Lines whose first byte is `#`
//! are comments.

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::Matrix;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split_terminator('\n')
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.starts_with('#'))
}

fn parse_tokens(line_no: usize, line: &str) -> Result<Vec<u64>> {
    if line.is_empty() {
        return Err(parse_err(line_no, "empty line"));
    }
    line.split(' ')
        .map(|tok| {
            if tok.is_empty() {
                return Err(parse_err(
                    line_no,
                    "tokens must be separated by a single space",
                ));
            }
            if !tok.bytes().all(|b| b.is_ascii_digit()) {
                return Err(parse_err(line_no, format!("invalid integer {tok:?}")));
            }
            tok.parse::<u64>()
                .map_err(|_| parse_err(line_no, format!("integer {tok:?} out of range")))
        })
        .collect()
}

fn parse_row(line_no: usize, line: &str, field: PrimeField, n: usize) -> Result<Vec<u32>> {
    let values = parse_tokens(line_no, line)?;
    if values.len() != n {
        return Err(parse_err(
            line_no,
            format!("expected {n} entries, found {}", values.len()),
        ));
    }
    values
        .into_iter()
        .map(|v| {
            if v < field.order() {
                Ok(v as u32)
            } else {
                Err(parse_err(
                    line_no,
                    format!("entry {v} not in [0, {})", field.modulus()),
                ))
            }
        })
        .collect()
}

pub fn parse_code(text: &str) -> Result<LinearCode> {
    let mut lines = content_lines(text);
    let (header_no, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let header_vals = parse_tokens(header_no, header)?;
    let &[p, k, n] = header_vals.as_slice() else {
        return Err(parse_err(header_no, "header must be `p k n`"));
    };
    let field = PrimeField::new(p)?;
    let (k, n) = (
        usize::try_from(k).map_err(|_| parse_err(header_no, "k too large"))?,
        usize::try_from(n).map_err(|_| parse_err(header_no, "n too large"))?,
    );
    if k == 0 || k > n {
        return Err(Error::InvalidShape { k, n });
    }
    let mut rows = Vec::new();
    for (line_no, line) in lines {
        if rows.len() == k {
            return Err(parse_err(line_no, format!("more than {k} rows")));
        }
        rows.push(parse_row(line_no, line, field, n)?);
    }
    if rows.len() != k {
        return Err(parse_err(
            text.split_terminator('\n').count().max(1),
            format!("expected {k} rows, found {}", rows.len()),
        ));
    }
    LinearCode::new(Matrix::from_rows(field, n, &rows)?)
}

pub fn serialize_code(code: &LinearCode) -> String {
    let mut out = format!("{} {} {}\n", code.field().modulus(), code.k(), code.n());
    for row in code.generator().row_iter() {
        out.push_str(&serialize_word(row));
    }
    out
}

/// Parses a word file, validating its length and entries against `code`.
pub fn parse_word(text: &str, code: &LinearCode) -> Result<Vec<u32>> {
    let mut lines = content_lines(text);
    let (line_no, line) = lines.next().ok_or_else(|| parse_err(1, "missing word"))?;
    let word = parse_row(line_no, line, code.field(), code.n())?;
    if let Some((extra, _)) = lines.next() {
        return Err(parse_err(extra, "word file holds a single line"));
    }
    Ok(word)
}

pub fn serialize_word(word: &[u32]) -> String {
    let mut out = String::with_capacity(word.len() * 3);
    for (i, v) in word.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(&v.to_string());
    }
    out.push('\n');
    out
}
