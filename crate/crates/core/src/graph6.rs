//! The graph6 ASCII encoding for simple undirected graphs.
//!
//! Each byte carries six payload bits offset by 63, so valid bytes lie
//! in `63..=126`. After the size prefix, the upper triangle of the
//! adjacency matrix is packed column-major -- bit order
//! (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ... -- most significant
//! bit first, zero-padded to a byte boundary.

use thiserror::Error;

use crate::graph::Graph;

/// Optional header some tools prepend to graph6 data.
pub const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("byte 0x{byte:02x} at offset {pos} outside the graph6 range 63..=126")]
    BadChar { byte: u8, pos: usize },
    #[error("payload truncated: expected {expected} payload bytes, found {found}")]
    TruncatedPayload { expected: usize, found: usize },
    #[error("malformed or missing graph6 size prefix")]
    BadHeader,
    #[error("trailing data after the {expected}-byte payload")]
    TrailingData { expected: usize },
    #[error("padding bits past the upper triangle must be zero")]
    NonzeroPadding,
    #[error("graph6 string encodes a graph on zero vertices")]
    EmptyGraph,
}

/// Decodes one graph6 line (an optional `>>graph6<<` header is
/// accepted). Graphs on zero vertices are rejected.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let s = line.trim();
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::BadHeader);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadChar { byte: b, pos });
        }
    }

    let (n, used) = decode_order(bytes)?;
    if n == 0 {
        return Err(Graph6Error::EmptyGraph);
    }
    let payload = &bytes[used..];
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if payload.len() < nbytes {
        return Err(Graph6Error::TruncatedPayload {
            expected: nbytes,
            found: payload.len(),
        });
    }
    if payload.len() > nbytes {
        return Err(Graph6Error::TrailingData { expected: nbytes });
    }

    let mut edges = Vec::new();
    let mut k = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let bit = (payload[k / 6] - 63) >> (5 - k % 6) & 1;
            if bit == 1 {
                edges.push((i, j));
            }
            k += 1;
            if k == nbits {
                break 'outer;
            }
        }
    }
    for k in nbits..nbytes * 6 {
        if (payload[k / 6] - 63) >> (5 - k % 6) & 1 != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }

    Ok(Graph::from_edge_list(n, &edges).expect("decoded pairs are in range and loop-free"))
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as usize, 1));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Graph6Error::BadHeader);
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = n << 6 | (b - 63) as usize;
        }
        return Ok((n, 8));
    }
    if bytes.len() < 4 {
        return Err(Graph6Error::BadHeader);
    }
    let mut n = 0usize;
    for &b in &bytes[1..4] {
        n = n << 6 | (b - 63) as usize;
    }
    Ok((n, 4))
}

/// Encodes a graph as one graph6 line (no trailing newline).
/// Total on valid graphs: `parse_graph6(write_graph6(g))`
/// reconstructs `g` exactly.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 0x3f) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((n >> shift & 0x3f) as u8 + 63);
        }
    }

    let nbits = n * (n - 1) / 2;
    let mut acc = 0u8;
    let mut filled = 0;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            k += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        acc <<= 6 - filled;
        out.push(acc + 63);
    }
    debug_assert_eq!(k, nbits);
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
