//! graph6 text encoding restricted to the short (single size byte) form.
//!
//! Bits `x(i, j)` for `i < j` are emitted column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), six to a byte, each byte offset by 63.

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

const OFFSET: u8 = 63;

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push(n as u8 + OFFSET);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn graph6_decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let (&size, payload) = bytes
        .split_first()
        .ok_or_else(|| Error::MalformedGraph6("empty input".into()))?;
    if let Some(b) = bytes.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(Error::MalformedGraph6(format!("byte {b} outside 63..=126")));
    }
    if size == 126 {
        return Err(Error::MalformedGraph6("multi-byte order prefix not supported".into()));
    }
    let n = (size - OFFSET) as usize;
    if n > MAX_ORDER {
        return Err(Error::order(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    if payload.len() != bits.div_ceil(6) {
        return Err(Error::MalformedGraph6(format!(
            "order {n} needs {} payload bytes, found {}",
            bits.div_ceil(6),
            payload.len()
        )));
    }
    let bit = |k: usize| (payload[k / 6] - OFFSET) >> (5 - k % 6) & 1 == 1;
    if (bits..payload.len() * 6).any(bit) {
        return Err(Error::MalformedGraph6("non-zero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}
