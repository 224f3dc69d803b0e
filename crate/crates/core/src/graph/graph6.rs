use alloc::vec::Vec;

use super::Graph;
use crate::error::Graph6Error;

const BIAS: u8 = 63;
const LONG: u8 = 126;
const MAX_N: usize = (1 << 36) - 1;

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(LONG);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        out.push(LONG);
        out.push(LONG);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
}

/// Standard graph6 encoding (no trailing newline).
pub fn encode_graph6(g: &Graph) -> Vec<u8> {
    let n = g.vertex_count();
    assert!(n <= MAX_N, "{}", Graph6Error::TooLarge(n));
    let mut out = Vec::new();
    push_size(&mut out, n);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + BIAS);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + BIAS);
    }
    out
}

fn sextet(s: &[u8], position: usize) -> Result<usize, Graph6Error> {
    let byte = s[position];
    if !(BIAS..=LONG).contains(&byte) {
        return Err(Graph6Error::BadByte { position, byte });
    }
    Ok((byte - BIAS) as usize)
}

fn read_size(s: &[u8]) -> Result<(usize, usize), Graph6Error> {
    if s.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if s[0] != LONG {
        return Ok((sextet(s, 0)?, 1));
    }
    let (start, len) = if s.len() > 1 && s[1] == LONG { (2, 6) } else { (1, 3) };
    if s.len() < start + len {
        return Err(Graph6Error::MalformedHeader);
    }
    let mut n = 0;
    for p in start..start + len {
        n = (n << 6) | sextet(s, p)?;
    }
    // the long forms must not encode sizes that fit a shorter form
    let min = if len == 3 { 63 } else { 258_048 };
    if n < min {
        return Err(Graph6Error::MalformedHeader);
    }
    Ok((n, start + len))
}

/// Decodes a graph6 string. The input must be exactly one graph with no
/// surrounding whitespace.
pub fn decode_graph6(s: &[u8]) -> Result<Graph, Graph6Error> {
    let (n, header) = read_size(s)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = header + bits.div_ceil(6);
    if s.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: s.len() });
    }
    if s.len() > expected {
        return Err(Graph6Error::TrailingGarbage { expected, found: s.len() });
    }
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            let value = sextet(s, header + bit / 6)?;
            if value >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    if bits % 6 != 0 {
        let last = sextet(s, expected - 1)?;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding);
        }
    }
    for p in header..expected {
        sextet(s, p)?;
    }
    Ok(Graph::new(n, edges).expect("graph6 bit field only names pairs i < j < n"))
}
