use crate::error::{Error, Result};
use crate::gf2::BitVec;

/// Parses `{c1,c2,...}` (1-based coordinates, braces optional) into the
/// characteristic vector of length `n`.
pub fn parse_support(text: &str, n: usize) -> Result<BitVec> {
    let t = text.trim();
    let inner = t
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .unwrap_or(t);
    let coords = inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Error::Parse(format!("invalid coordinate {s:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    BitVec::from_support(n, &coords)
}

pub fn render_support(v: &BitVec) -> String {
    let parts: Vec<String> = v.support().iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(","))
}
