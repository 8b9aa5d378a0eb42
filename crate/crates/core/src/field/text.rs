//! Element notation: `0`, `1`, `w`, `w^k`, and decimal integers.

use super::{FieldCtx, FieldElement};
use crate::error::{Error, Result};

impl FieldCtx {
    /// Canonical text: decimals for prime fields, `w^k` with k in [0, q-1) otherwise.
    pub fn format_raw(&self, a: u32) -> String {
        if self.m == 1 {
            return a.to_string();
        }
        match a {
            0 => "0".into(),
            1 => "1".into(),
            _ => match self.log_raw(a) {
                1 => "w".into(),
                k => format!("w^{k}"),
            },
        }
    }

    pub fn format(&self, a: FieldElement) -> String {
        self.format_raw(a.value)
    }

    pub fn parse(&self, s: &str) -> Result<FieldElement> {
        self.parse_at(s, 0)
    }

    /// Parses one element token; `offset` is added to reported positions.
    pub fn parse_at(&self, s: &str, offset: usize) -> Result<FieldElement> {
        let err = |pos: usize, msg: &str| Error::Parse { pos: offset + pos, msg: msg.to_string() };
        if s.is_empty() {
            return Err(err(0, "empty element"));
        }
        if let Some(rest) = s.strip_prefix('w') {
            if rest.is_empty() {
                return Ok(self.w());
            }
            let digits = rest.strip_prefix('^').ok_or_else(|| err(1, "expected '^' after w"))?;
            let k: i64 = parse_int(digits).ok_or_else(|| err(2, "expected exponent"))?;
            return Ok(self.w_pow(k));
        }
        let v: u64 = s
            .bytes()
            .all(|b| b.is_ascii_digit())
            .then(|| s.parse().ok())
            .flatten()
            .ok_or_else(|| err(first_bad(s), "expected integer or w^k"))?;
        if self.m == 1 {
            return Ok(self.elem((v % self.p as u64) as u32));
        }
        // prime subfield literals only
        if v < self.p as u64 {
            Ok(self.elem(v as u32))
        } else {
            Err(err(0, &format!("integer {v} is not an element of the prime subfield")))
        }
    }
}

fn parse_int(s: &str) -> Option<i64> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn first_bad(s: &str) -> usize {
    s.bytes().position(|b| !b.is_ascii_digit()).unwrap_or(0)
}
