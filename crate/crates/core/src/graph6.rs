//! The graph6 line format.
//!
//! Byte 0 is `n + 63` with `n <= 62`; the upper-triangle bits x(i,j),
//! i < j, follow column by column (j = 1..n-1, i = 0..j-1), packed
//! big-endian into 6-bit groups, zero-padded, each group emitted as
//! `group + 63`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Graph6Error};
use crate::graph::Graph;

const OFFSET: u8 = 63;

fn bad(reason: Graph6Error) -> Error {
    Error::Graph6 { reason }
}

/// Decode one graph6 line; a single trailing newline is tolerated.
pub fn parse(line: &str) -> Result<Graph, Error> {
    let bytes = line.as_bytes();
    let bytes = bytes.strip_suffix(b"\r\n").unwrap_or(bytes);
    let bytes = bytes.strip_suffix(b"\n").unwrap_or(bytes);
    let (&len_byte, body) = bytes.split_first().ok_or(bad(Graph6Error::Empty))?;
    if !(OFFSET..=125).contains(&len_byte) {
        return Err(bad(Graph6Error::BadLengthByte(len_byte)));
    }
    let n = (len_byte - OFFSET) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if body.len() < nbytes {
        return Err(bad(Graph6Error::Truncated));
    }
    if body.len() > nbytes {
        return Err(bad(Graph6Error::TrailingData));
    }
    let mut groups = Vec::with_capacity(nbytes);
    for &b in body {
        if !(OFFSET..=126).contains(&b) {
            return Err(bad(Graph6Error::CharOutOfRange(b)));
        }
        groups.push(b - OFFSET);
    }
    let bit = |pos: usize| groups[pos / 6] >> (5 - pos % 6) & 1 == 1;
    for pos in nbits..nbytes * 6 {
        if bit(pos) {
            return Err(bad(Graph6Error::TrailingBits));
        }
    }
    let mut g = Graph::empty(n);
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(pos) {
                g.add_edge(i, j);
            }
            pos += 1;
        }
    }
    Ok(g)
}

/// Encode a graph as a bare graph6 line (no trailing newline).
pub fn write(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    out.push(n as u8 + OFFSET);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(group + OFFSET);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_round_trip() {
        let k4 = parse("C~").unwrap();
        assert_eq!(k4, Graph::complete(4));
        assert_eq!(write(&k4), "C~");
    }

    #[test]
    fn k1_is_at_sign() {
        assert_eq!(write(&Graph::empty(1)), "@");
        assert_eq!(parse("@").unwrap(), Graph::empty(1));
    }

    #[test]
    fn fixture_lines_round_trip() {
        // Lines as nauty's geng emits them.
        for line in ["?", "@", "A_", "A?", "DQc", "D~{", "H]}eIQb"] {
            let g = parse(line).unwrap();
            assert_eq!(write(&g), line);
        }
    }

    #[test]
    fn newline_tolerated() {
        assert_eq!(parse("C~\n").unwrap(), Graph::complete(4));
    }

    #[test]
    fn largest_supported_order_round_trips() {
        let g = Graph::cycle(62);
        let line = write(&g);
        assert_eq!(line.len(), 1 + (62 * 61 / 2usize).div_ceil(6));
        assert_eq!(parse(&line).unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(parse(""), Err(Error::Graph6 { reason: Graph6Error::Empty })));
        // '~' as length byte announces the multi-byte format.
        assert!(matches!(
            parse("~??"),
            Err(Error::Graph6 { reason: Graph6Error::BadLengthByte(126) })
        ));
        assert!(matches!(
            parse("C"),
            Err(Error::Graph6 { reason: Graph6Error::Truncated })
        ));
        assert!(matches!(
            parse("C~~"),
            Err(Error::Graph6 { reason: Graph6Error::TrailingData })
        ));
        assert!(matches!(
            parse("C "),
            Err(Error::Graph6 { reason: Graph6Error::CharOutOfRange(32) })
        ));
        // n=3 uses 3 bits; '@' - 63 = 1 sets only the lowest padding bit.
        assert!(matches!(
            parse("B@"),
            Err(Error::Graph6 { reason: Graph6Error::TrailingBits })
        ));
    }
}
