//! graph6 encoding (short form, `n <= 62`).
//!
//! The header byte is `n + 63`. The upper triangle of the adjacency matrix
//! is read column by column (`(0,1), (0,2), (1,2), (0,3), ...`), packed six
//! bits per byte most-significant first, zero padded, and each byte offset
//! by 63.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {offset}: non-printable or out-of-range byte 0x{byte:02x}")]
    BadByte { offset: usize, byte: u8 },
    #[error("byte 0: header announces {0} vertices; only 1..=62 are supported")]
    BadHeader(usize),
    #[error("byte {offset}: expected {expected} bytes in total, found {found}")]
    Length { offset: usize, expected: usize, found: usize },
    #[error("byte {offset}: padding bits are not zero")]
    Padding { offset: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl Graph6Error {
    /// Byte offset of the error within the decoded string.
    pub fn offset(&self) -> usize {
        match self {
            Graph6Error::BadByte { offset, .. } | Graph6Error::Length { offset, .. } | Graph6Error::Padding { offset } => *offset,
            Graph6Error::Empty | Graph6Error::BadHeader(_) | Graph6Error::Graph(_) => 0,
        }
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= 62, "short-form graph6 supports at most 62 vertices");
    let mut out = vec![(n + 63) as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes one graph6 string. A single trailing newline is tolerated.
pub fn decode_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.strip_suffix('\n').unwrap_or(text).as_bytes();
    let Some(&header) = bytes.first() else {
        return Err(Graph6Error::Empty);
    };
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadByte { offset, byte });
        }
    }
    let n = (header - 63) as usize;
    if n == 0 || n > 62 {
        return Err(Graph6Error::BadHeader(n));
    }
    let nbits = n * (n - 1) / 2;
    let expected = 1 + nbits.div_ceil(6);
    if bytes.len() != expected {
        return Err(Graph6Error::Length { offset: bytes.len().min(expected), expected, found: bytes.len() });
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = bytes[1 + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.set_edge(u, v);
            }
            k += 1;
        }
    }
    if !nbits.is_multiple_of(6) {
        let last = bytes[expected - 1] - 63;
        if last & ((1u8 << (6 - nbits % 6)) - 1) != 0 {
            return Err(Graph6Error::Padding { offset: expected - 1 });
        }
    }
    Ok(g)
}
