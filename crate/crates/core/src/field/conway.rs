//! Built-in Conway polynomial registry.
//!
//! Coefficients are ascending and monic. The table can be extended at runtime
//! through a file named by `SGC_CONWAY_PATH` with lines `p m c0,c1,...,1`.

use crate::error::{Error, Result};

pub const CONWAY_PATH_ENV: &str = "SGC_CONWAY_PATH";

static BUILTIN: &[(u32, u32, &[u32])] = &[
    (2, 1, &[1, 1]),
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (2, 9, &[1, 0, 0, 0, 1, 0, 0, 0, 0, 1]),
    (2, 10, &[1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1]),
    (2, 11, &[1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 12, &[1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1]),
    (3, 1, &[1, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (3, 5, &[1, 2, 0, 0, 0, 1]),
    (3, 6, &[2, 2, 1, 0, 2, 0, 1]),
    (3, 7, &[1, 0, 2, 0, 0, 0, 0, 1]),
    (3, 8, &[2, 2, 2, 0, 1, 2, 0, 0, 1]),
    (5, 1, &[3, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (5, 4, &[2, 4, 4, 0, 1]),
    (7, 1, &[4, 1]),
    (7, 2, &[3, 6, 1]),
    (7, 3, &[4, 0, 6, 1]),
    (7, 4, &[3, 4, 5, 0, 1]),
    (11, 1, &[9, 1]),
    (11, 2, &[2, 7, 1]),
    (11, 3, &[9, 2, 0, 1]),
    (11, 4, &[2, 10, 8, 0, 1]),
    (13, 1, &[11, 1]),
    (13, 2, &[2, 12, 1]),
    (13, 3, &[11, 2, 0, 1]),
    (13, 4, &[2, 12, 3, 0, 1]),
];

/// Parses an extension table. Blank lines and `#` comments are skipped.
pub fn parse_table(text: &str) -> Result<Vec<(u32, u32, Vec<u32>)>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.lines() {
        let start = offset;
        offset += line.len() + 1;
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let bad = |msg: &str| Error::Parse { pos: start, msg: msg.to_string() };
        let mut parts = body.split_whitespace();
        let p = parts.next().and_then(|s| s.parse().ok()).ok_or_else(|| bad("expected p"))?;
        let m = parts.next().and_then(|s| s.parse().ok()).ok_or_else(|| bad("expected m"))?;
        let coeffs = parts
            .next()
            .ok_or_else(|| bad("expected coefficients"))?
            .split(',')
            .map(|c| c.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| bad("bad coefficient"))?;
        if parts.next().is_some() {
            return Err(bad("trailing tokens"));
        }
        out.push((p, m, coeffs));
    }
    Ok(out)
}

/// Looks up the modulus for GF(p^m): the extension file first, then the
/// built-in table.
pub fn lookup(p: u32, m: u32) -> Option<Vec<u32>> {
    if let Ok(path) = std::env::var(CONWAY_PATH_ENV) {
        if let Ok(text) = std::fs::read_to_string(path) {
            if let Ok(rows) = parse_table(&text) {
                if let Some((_, _, c)) = rows.into_iter().find(|(pp, mm, _)| *pp == p && *mm == m) {
                    return Some(c);
                }
            }
        }
    }
    BUILTIN
        .iter()
        .find(|(pp, mm, _)| *pp == p && *mm == m)
        .map(|(_, _, c)| c.to_vec())
}

pub fn builtin_entries() -> impl Iterator<Item = (u32, u32, &'static [u32])> {
    BUILTIN.iter().copied()
}
