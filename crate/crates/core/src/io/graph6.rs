//! graph6: printable bytes 63..=126, each carrying six bits. A size header
//! is followed by the upper triangle of the adjacency matrix, column by
//! column (`(0,1), (0,2), (1,2), (0,3), …`), padded with zero bits.
//!
//! Format reference: <https://users.cecs.anu.edu.au/~bdm/data/formats.txt>

use thiserror::Error;

use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("byte {byte:#04x} at position {position} is outside the printable range 63..=126")]
    BadByte { byte: u8, position: usize },
    #[error("truncated size header")]
    TruncatedHeader,
    #[error("expected {expected} adjacency bytes for {vertices} vertices, found {found}")]
    BodyLength { vertices: usize, expected: usize, found: usize },
    #[error("padding bits in the last byte are not zero")]
    NonZeroPadding,
}

pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let mut data = Vec::with_capacity(bytes.len());
    for (position, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadByte { byte, position });
        }
        data.push(byte - 63);
    }

    let (n, header_len) = if data[0] != 63 {
        (data[0] as usize, 1)
    } else if data.get(1) != Some(&63) {
        (read_bits(&data, 1, 3)?, 4)
    } else {
        (read_bits(&data, 2, 6)?, 8)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let body = &data[header_len..];
    if body.len() != expected {
        return Err(Graph6Error::BodyLength { vertices: n, expected, found: body.len() });
    }
    let padding = expected * 6 - bits;
    if padding > 0 && body[expected - 1] & ((1 << padding) - 1) != 0 {
        return Err(Graph6Error::NonZeroPadding);
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if body[k / 6] >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, edges).expect("upper-triangle bits encode a simple graph"))
}

fn read_bits(data: &[u8], start: usize, count: usize) -> Result<usize, Graph6Error> {
    let chunk = data.get(start..start + count).ok_or(Graph6Error::TruncatedHeader)?;
    Ok(chunk.iter().fold(0usize, |acc, &b| acc << 6 | b as usize))
}

pub fn encode_graph6(graph: &Graph) -> String {
    let n = graph.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8);
    } else if n < 1 << 18 {
        out.push(63);
        out.extend((0..3).rev().map(|i| (n >> (6 * i) & 63) as u8));
    } else {
        out.extend([63, 63]);
        out.extend((0..6).rev().map(|i| (n >> (6 * i) & 63) as u8));
    }
    let mut adjacent = std::collections::HashSet::new();
    adjacent.extend(graph.edges().iter().copied());
    let mut current = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            current = current << 1 | adjacent.contains(&(i, j)) as u8;
            filled += 1;
            if filled == 6 {
                out.push(current);
                current = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(current << (6 - filled));
    }
    out.into_iter().map(|b| (b + 63) as char).collect()
}
