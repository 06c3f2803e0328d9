//! graph6 short form (orders 0..=62).
//!
//! Byte 0 is `n + 63`; the upper triangle follows column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), six bits per byte, big-endian,
//! each byte offset by 63 and the tail padded with zero bits.

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 line. A trailing `\n` or `\r\n` is tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let bytes = line.as_bytes();
    let Some(&head) = bytes.first() else {
        return Err(Error::parse(0, "empty graph6 string"));
    };
    if !(63..=126).contains(&head) {
        return Err(Error::parse(0, format!("invalid header byte {head:#04x}")));
    }
    let n = (head - 63) as usize;
    if n > MAX_ORDER {
        return Err(Error::parse(
            0,
            format!("long-form graph6 (order > {MAX_ORDER}) is not supported"),
        ));
    }
    if n == 0 {
        return Err(Error::parse(0, "graph6 order 0 is not a valid graph here"));
    }
    let expected = data_len(n);
    if bytes.len() != 1 + expected {
        return Err(Error::parse(
            bytes.len().min(1 + expected),
            format!(
                "expected {} data bytes for order {n}, found {}",
                expected,
                bytes.len() - 1
            ),
        ));
    }

    let mut g = Graph::with_order(n)?;
    let total_bits = n * (n - 1) / 2;
    let mut k = 0;
    for (i, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(i + 1, format!("invalid data byte {b:#04x}")));
        }
        let word = b - 63;
        for shift in (0..6).rev() {
            let bit = word >> shift & 1 == 1;
            if k >= total_bits {
                if bit {
                    return Err(Error::parse(i + 1, "non-zero padding bit"));
                }
            } else if bit {
                let (u, v) = pair_of(k);
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    Ok(g)
}

// Position k in the column-wise upper triangle -> (row, column).
fn pair_of(k: usize) -> (usize, usize) {
    let mut v = 1;
    let mut start = 0;
    while start + v <= k {
        start += v;
        v += 1;
    }
    (k - start, v)
}

/// Parses newline-separated graph6 records; blank lines are skipped.
/// Each entry carries its 1-based line number.
pub fn parse_graph6_lines(text: &str) -> Vec<(usize, Result<Graph>)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, parse_graph6(l.trim_end())))
        .collect()
}

/// Encodes `g` without a trailing newline.
pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Error::Unsupported(format!(
            "graph6 short form supports order <= {MAX_ORDER}, got {n}"
        )));
    }
    let mut out = String::with_capacity(1 + data_len(n));
    out.push((n as u8 + 63) as char);
    let mut word = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            word = word << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push((word + 63) as char);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((word << (6 - filled)) + 63) as char);
    }
    Ok(out)
}
