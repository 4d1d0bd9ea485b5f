//! McKay's graph6 encoding: a size header followed by the upper triangle of
//! the adjacency matrix, column by column, packed six bits per printable byte.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        push_sextets(&mut out, n as u64, 3);
    } else {
        out.push(126);
        out.push(126);
        push_sextets(&mut out, n as u64, 6);
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn push_sextets(out: &mut Vec<u8>, value: u64, count: u32) {
    for k in (0..count).rev() {
        out.push(((value >> (6 * k)) & 0x3f) as u8 + BIAS);
    }
}

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse { offset, message: message.into() }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut base = 0;
    let mut body = text.trim_end_matches(['\n', '\r']);
    if let Some(rest) = body.strip_prefix(HEADER) {
        base = HEADER.len();
        body = rest;
    }
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(base, "empty graph6 string"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(parse_err(base + i, format!("byte {b:#04x} outside the graph6 range")));
        }
    }
    let sextet = |i: usize| u64::from(bytes[i] - BIAS);

    let (n, mut pos) = if bytes[0] != 126 {
        (sextet(0), 1)
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(parse_err(base + bytes.len(), "truncated 8-byte size header"));
        }
        ((2..8).fold(0, |acc, i| (acc << 6) | sextet(i)), 8)
    } else {
        if bytes.len() < 4 {
            return Err(parse_err(base + bytes.len(), "truncated 4-byte size header"));
        }
        ((1..4).fold(0, |acc, i| (acc << 6) | sextet(i)), 4)
    };
    let n = usize::try_from(n).map_err(|_| parse_err(base, "vertex count too large"))?;

    let bits = n * n.saturating_sub(1) / 2;
    let expected = pos + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(parse_err(
            base + bytes.len().min(expected),
            format!("expected {expected} bytes for {n} vertices, found {}", bytes.len()),
        ));
    }

    let mut edges = Vec::new();
    let mut bit = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + bit / 6] - BIAS;
            if byte & (0x20 >> (bit % 6)) != 0 {
                edges.push((i, j));
            }
            bit += 1;
            if bit == bits {
                break 'outer;
            }
        }
    }
    pos += bits / 6;
    if bits % 6 != 0 {
        let pad_mask = (1u8 << (6 - bits % 6)) - 1;
        if (bytes[pos] - BIAS) & pad_mask != 0 {
            return Err(parse_err(base + pos, "nonzero padding bits"));
        }
    }
    Graph::from_edge_list(n, &edges)
}
