//! graph6 encoding and decoding.
//!
//! Layout: a size header (`63 + n` for `n ≤ 62`, otherwise `~` followed by
//! 18 bits, or `~~` followed by 36 bits), then the upper triangle of the
//! adjacency matrix in column order `x(0,1), x(0,2), x(1,2), x(0,3), …`,
//! zero-padded to a multiple of six bits, each 6-bit group offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";
const MAX_ORDER: usize = (1 << 36) - 1;

fn push_bits(out: &mut String, value: usize, groups: usize) {
    for k in (0..groups).rev() {
        out.push(char::from(OFFSET + ((value >> (6 * k)) & 0x3f) as u8));
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    if n <= 62 {
        out.push(char::from(OFFSET + n as u8));
    } else if n <= 258_047 {
        out.push('~');
        push_bits(&mut out, n, 3);
    } else {
        out.push_str("~~");
        push_bits(&mut out, n, 6);
    }

    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(char::from(OFFSET + group));
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(char::from(OFFSET + (group << (6 - filled))));
    }
    out
}

fn parse_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn sextet(bytes: &[u8], pos: usize) -> Result<u8> {
    match bytes.get(pos) {
        None => Err(parse_err(pos, "unexpected end of input")),
        Some(&b) if (OFFSET..=126).contains(&b) => Ok(b - OFFSET),
        Some(&b) => Err(parse_err(pos, format!("byte 0x{b:02x} outside 63..=126"))),
    }
}

fn read_wide(bytes: &[u8], pos: usize, groups: usize) -> Result<usize> {
    (0..groups).try_fold(0usize, |acc, k| Ok((acc << 6) | sextet(bytes, pos + k)? as usize))
}

/// Decode a single graph6 string (an optional `>>graph6<<` prefix is
/// accepted). Reported offsets are byte positions in `text`.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let mut pos = if text.starts_with(HEADER) {
        HEADER.len()
    } else {
        0
    };

    let first = sextet(bytes, pos)?;
    let n = if first < 63 {
        pos += 1;
        first as usize
    } else if bytes.get(pos + 1) == Some(&b'~') {
        let n = read_wide(bytes, pos + 2, 6)?;
        if n <= 258_047 {
            return Err(parse_err(pos, "non-canonical 8-byte order header"));
        }
        pos += 8;
        n
    } else {
        let n = read_wide(bytes, pos + 1, 3)?;
        if n <= 62 {
            return Err(parse_err(pos, "non-canonical 4-byte order header"));
        }
        pos += 4;
        n
    };
    debug_assert!(n <= MAX_ORDER);

    let bits = n
        .checked_mul(n.saturating_sub(1))
        .map(|b| b / 2)
        .filter(|&b| b / 6 < bytes.len())
        .ok_or_else(|| parse_err(bytes.len(), format!("input too short for order {n}")))?;
    let body_len = bits.div_ceil(6);
    let body_start = pos;
    if bytes.len() < body_start + body_len {
        return Err(parse_err(
            bytes.len(),
            format!(
                "expected {body_len} adjacency bytes for order {n}, found {}",
                bytes.len() - body_start
            ),
        ));
    }
    if bytes.len() > body_start + body_len {
        return Err(parse_err(body_start + body_len, "trailing characters"));
    }

    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = sextet(bytes, body_start + k / 6)?;
            if byte & (0x20 >> (k % 6)) != 0 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body_start + body_len - 1;
        let pad_mask = (1u8 << (6 - bits % 6)) - 1;
        if sextet(bytes, last)? & pad_mask != 0 {
            return Err(parse_err(last, "nonzero padding bits"));
        }
    }
    Ok(g)
}
