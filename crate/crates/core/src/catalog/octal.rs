//! The octal row format used for the printed length-80 generator matrices.
//!
//! A row of `3m + 1` bits is written as `m` octal digits (`0 = 000`,
//! ..., `7 = 111`, most significant bit first) followed by one letter,
//! `a = 0` or `b = 1`. Tokens are separated by arbitrary whitespace and
//! appear in row order.

use crate::error::{Error, Result};
use crate::gf2::{BitMat, BitVec};

/// Rows in the printed figures.
pub const FIGURE_ROWS: usize = 40;
/// Octal digits per printed token.
pub const FIGURE_DIGITS: usize = 13;

fn parse_token(tok: &str, digits: usize) -> Result<BitVec> {
    let chars: Vec<char> = tok.chars().collect();
    if chars.len() != digits + 1 {
        return Err(Error::Parse(format!(
            "token {tok:?} has length {}, expected {}",
            chars.len(),
            digits + 1
        )));
    }
    let mut v = BitVec::zeros(3 * digits + 1);
    for (i, &ch) in chars[..digits].iter().enumerate() {
        let d = ch
            .to_digit(8)
            .ok_or_else(|| Error::Parse(format!("invalid octal digit {ch:?} in {tok:?}")))?;
        for b in 0..3 {
            if (d >> (2 - b)) & 1 == 1 {
                v.set(3 * i + b, true);
            }
        }
    }
    match chars[digits] {
        'a' => {}
        'b' => v.set(3 * digits, true),
        ch => {
            return Err(Error::Parse(format!(
                "invalid trailing letter {ch:?} in {tok:?}"
            )))
        }
    }
    Ok(v)
}

/// Parses any number of tokens with `digits` octal digits each.
pub fn parse_octal_rows(text: &str, digits: usize) -> Result<BitMat> {
    let rows = text
        .split_whitespace()
        .map(|t| parse_token(t, digits))
        .collect::<Result<Vec<_>>>()?;
    BitMat::from_rows(3 * digits + 1, rows)
}

/// Parses a 40-token figure into the 40 x 40 matrix `M`.
pub fn parse_octal_matrix(text: &str) -> Result<BitMat> {
    let count = text.split_whitespace().count();
    if count != FIGURE_ROWS {
        return Err(Error::Parse(format!(
            "expected {FIGURE_ROWS} tokens, found {count}"
        )));
    }
    parse_octal_rows(text, FIGURE_DIGITS)
}

/// Inverse of [`parse_octal_rows`], four tokens per line.
pub fn render_octal_matrix(m: &BitMat) -> Result<String> {
    let cols = m.ncols();
    if cols % 3 != 1 {
        return Err(Error::InvalidParameter(format!(
            "octal rows need 3m+1 columns, got {cols}"
        )));
    }
    let digits = cols / 3;
    let tokens: Vec<String> = m
        .rows()
        .iter()
        .map(|r| {
            let mut s: String = (0..digits)
                .map(|i| {
                    let d = (0..3).fold(0u32, |acc, b| (acc << 1) | u32::from(r.get(3 * i + b)));
                    char::from_digit(d, 8).expect("octal digit")
                })
                .collect();
            s.push(if r.get(3 * digits) { 'b' } else { 'a' });
            s
        })
        .collect();
    let mut out = String::new();
    for line in tokens.chunks(4) {
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    Ok(out)
}
