//! graph6 encoding as used by nauty/geng.
//!
//! Vertex count: one byte `n + 63` for `n ≤ 62`, `126` followed by three
//! bytes (18 bits) for `n ≤ 258047`, else `126 126` followed by six bytes
//! (36 bits). The upper triangle follows column by column (`x(0,1), x(0,2),
//! x(1,2), x(0,3), ...`), six bits per byte, most significant bit first,
//! zero-padded, each byte offset by 63.

use super::Graph;
use crate::error::{Error, Result};

const MAX_N: usize = (1 << 36) - 1;

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    encode_n(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn encode_n(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    } else {
        assert!(n <= MAX_N, "graph too large for graph6");
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and
/// surrounding whitespace are accepted.
pub fn decode(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse(format!("invalid graph6 byte {b:#04x}")));
    }
    let (n, rest) = decode_n(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if rest.len() != expected {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {expected} for n = {n}",
            rest.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.set_edge(i, j);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let pad = 6 - bits % 6;
        if (rest[rest.len() - 1] - 63) & ((1 << pad) - 1) != 0 {
            return Err(Error::Parse("nonzero graph6 padding bits".into()));
        }
    }
    Ok(g)
}

fn decode_n(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let take = |k: usize, from: &[u8]| -> Result<usize> {
        if from.len() < k {
            return Err(Error::Parse("truncated graph6 header".into()));
        }
        Ok(from[..k]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize))
    };
    match bytes {
        [] => Err(Error::Parse("empty graph6 string".into())),
        [126, 126, rest @ ..] => Ok((take(6, rest)?, &rest[6..])),
        [126, rest @ ..] => Ok((take(3, rest)?, &rest[3..])),
        [b, rest @ ..] => Ok(((b - 63) as usize, rest)),
    }
}

/// Decodes every graph in a multi-line graph6 text. Blank lines and lines
/// starting with `#` are skipped.
pub fn decode_all(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(decode)
        .collect()
}
