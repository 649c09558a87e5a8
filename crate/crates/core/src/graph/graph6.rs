//! graph6 encoding (header-less, one graph per line).
//!
//! The order `n` is written as one byte `63 + n` for `n <= 62`, as `~`
//! followed by three 6-bit groups for `n <= 258047`, and as `~~` followed by
//! six groups beyond that. The upper triangle is then written column by
//! column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), padded with zeros to a
//! multiple of six bits, six bits per byte offset by 63.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn push_groups(out: &mut String, value: usize, groups: usize) {
    for i in (0..groups).rev() {
        out.push((63 + ((value >> (6 * i)) & 63) as u8) as char);
    }
}

impl Graph {
    pub fn to_graph6(&self) -> String {
        let n = self.order();
        let mut out = String::new();
        if n <= 62 {
            out.push((63 + n as u8) as char);
        } else if n <= 258_047 {
            out.push('~');
            push_groups(&mut out, n, 3);
        } else {
            out.push_str("~~");
            push_groups(&mut out, n, 6);
        }
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | self.has_edge(i, j) as u8;
                filled += 1;
                if filled == 6 {
                    out.push((63 + acc) as char);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push((63 + (acc << (6 - filled))) as char);
        }
        out
    }

    /// Parses one graph6 line. Surrounding whitespace and an optional
    /// `>>graph6<<` header are ignored.
    pub fn from_graph6(text: &str) -> Result<Graph> {
        let leading = text.len() - text.trim_start().len();
        let mut s = text.trim().as_bytes();
        let mut base = leading;
        if s.starts_with(HEADER.as_bytes()) {
            s = &s[HEADER.len()..];
            base += HEADER.len();
        }
        let err = |offset: usize, reason: &'static str| Error::Graph6 {
            offset: base + offset,
            reason,
        };
        for (i, &b) in s.iter().enumerate() {
            if !(63..=126).contains(&b) {
                return Err(err(i, "byte outside the printable range 63..=126"));
            }
        }
        let read = |from: usize, groups: usize| -> Result<usize> {
            if s.len() < from + groups {
                return Err(err(s.len(), "truncated vertex count"));
            }
            Ok(s[from..from + groups]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
        };
        let (n, mut pos) = match s {
            [] => return Err(err(0, "empty input")),
            [126, 126, ..] => (read(2, 6)?, 8),
            [126, ..] => (read(1, 3)?, 4),
            [b, ..] => ((b - 63) as usize, 1),
        };
        let bits = n * n.saturating_sub(1) / 2;
        let expected = bits.div_ceil(6);
        if s.len() - pos < expected {
            return Err(err(s.len(), "too few edge bytes"));
        }
        if s.len() - pos > expected {
            return Err(err(pos + expected, "trailing bytes"));
        }
        let mut g = Graph::empty(n);
        let mut k = 0;
        'outer: for j in 1..n {
            for i in 0..j {
                if k == bits {
                    break 'outer;
                }
                let byte = s[pos + k / 6] - 63;
                if byte >> (5 - k % 6) & 1 == 1 {
                    g.set_edge(i, j);
                }
                k += 1;
            }
        }
        pos += expected;
        if bits % 6 != 0 {
            let last = s[pos - 1] - 63;
            let pad = 6 - bits % 6;
            if last & ((1 << pad) - 1) != 0 {
                return Err(err(pos - 1, "nonzero padding bits"));
            }
        }
        Ok(g)
    }
}
