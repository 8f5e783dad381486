//! Code and vector files.
//!
//! * `.gen`: one generator row per line as `0`/`1` characters.
//! * `.oct`: octal rows (see [`crate::catalog::octal`]); the code is
//!   `(I_r | M)` for the `r` parsed rows.
//! * `.sup`: a first line `n=<length>` followed by one support list
//!   `{c1,c2,...}` per generator row.
//!
//! Lines starting with `#` are comments in every format.

use std::path::Path;

use crate::catalog::constructions::systematic;
use crate::catalog::octal::parse_octal_rows;
use crate::catalog::support::{parse_support, render_support};
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::{BitMat, BitVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CodeFormat {
    Generator,
    Octal,
    Support,
}

impl CodeFormat {
    pub fn from_path(path: &Path) -> Result<Self> {
        match path.extension().and_then(|e| e.to_str()) {
            Some("gen") => Ok(CodeFormat::Generator),
            Some("oct") => Ok(CodeFormat::Octal),
            Some("sup") => Ok(CodeFormat::Support),
            other => Err(Error::Parse(format!(
                "unknown code file extension {other:?} (expected .gen, .oct or .sup)"
            ))),
        }
    }
}

fn strip_comments(text: &str) -> String {
    text.lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .collect::<Vec<_>>()
        .join("\n")
}

fn parse_length_header(line: &str) -> Result<usize> {
    line.trim()
        .strip_prefix("n=")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| Error::Parse(format!("expected `n=<length>` header, found {line:?}")))
}

/// Rows of a `.sup` document.
pub fn parse_support_rows(text: &str) -> Result<BitMat> {
    let body = strip_comments(text);
    let mut lines = body.lines().map(str::trim).filter(|l| !l.is_empty());
    let n = parse_length_header(lines.next().unwrap_or(""))?;
    let rows = lines
        .map(|l| parse_support(l, n))
        .collect::<Result<Vec<_>>>()?;
    BitMat::from_rows(n, rows)
}

pub fn parse_code(text: &str, format: CodeFormat) -> Result<LinearCode> {
    let body = strip_comments(text);
    let code = match format {
        CodeFormat::Generator => LinearCode::from_generator(&BitMat::parse_rows(&body)?),
        CodeFormat::Octal => {
            let first = body
                .split_whitespace()
                .next()
                .ok_or_else(|| Error::Parse("empty octal document".into()))?;
            let digits = first.chars().count().saturating_sub(1);
            systematic(&parse_octal_rows(&body, digits)?)?
        }
        CodeFormat::Support => LinearCode::from_generator(&parse_support_rows(&body)?),
    };
    if code.n() == 0 {
        return Err(Error::Parse("code file has no rows".into()));
    }
    Ok(code)
}

pub fn read_code(path: &Path) -> Result<LinearCode> {
    let format = CodeFormat::from_path(path)?;
    let text = std::fs::read_to_string(path)?;
    parse_code(&text, format)
}

pub fn render_code(c: &LinearCode, format: CodeFormat) -> Result<String> {
    match format {
        CodeFormat::Generator => Ok(c.generator().to_text()),
        CodeFormat::Support => {
            let mut s = format!("n={}\n", c.n());
            for r in c.generator().rows() {
                s.push_str(&render_support(r));
                s.push('\n');
            }
            Ok(s)
        }
        CodeFormat::Octal => Err(Error::InvalidParameter(
            "octal output needs a systematic matrix; write .gen instead".into(),
        )),
    }
}

pub fn write_code(c: &LinearCode, path: &Path) -> Result<()> {
    let text = render_code(c, CodeFormat::from_path(path)?)?;
    std::fs::write(path, text)?;
    Ok(())
}

/// A vector given either inline as `{c1,...}` / a `0`/`1` string, or as
/// a file whose first non-comment line is in one of those forms.
pub fn parse_vector(spec: &str, n: usize) -> Result<BitVec> {
    let body = strip_comments(spec);
    let line = body
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with("n="))
        .unwrap_or("{}");
    let v = if line.starts_with('{') {
        parse_support(line, n)?
    } else {
        BitVec::parse_binary(line)?
    };
    if v.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: v.len(),
        });
    }
    Ok(v)
}
