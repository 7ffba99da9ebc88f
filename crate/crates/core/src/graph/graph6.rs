//! graph6 encoding.
//!
//! Format: `N(n)` followed by the upper triangle of the adjacency matrix,
//! column by column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed six bits per
//! byte with 63 added. `N(n)` is one byte for `n <= 62`, `~` plus three
//! bytes for `n <= 258047`, and `~~` plus six bytes beyond that. An optional
//! `>>graph6<<` header is accepted on input.

use super::SimpleGraph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn push_size(out: &mut String, n: usize) {
    let n = n as u64;
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift & 0x3f) as u8 + 63) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift & 0x3f) as u8 + 63) as char);
        }
    }
}

pub fn encode(g: &SimpleGraph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(8 + n * n.saturating_sub(1) / 12);
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            used += 1;
            if used == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(((acc << (6 - used)) + 63) as char);
    }
    out
}

fn sextet(bytes: &[u8], at: usize) -> Result<u64> {
    match bytes.get(at) {
        Some(&b) if (63..=126).contains(&b) => Ok(u64::from(b - 63)),
        Some(&b) => Err(Error::Parse {
            offset: at,
            message: format!("byte 0x{b:02x} is outside the graph6 range 63..=126"),
        }),
        None => Err(Error::Parse {
            offset: at,
            message: "unexpected end of input".into(),
        }),
    }
}

pub fn decode(text: &str) -> Result<SimpleGraph> {
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let start = if trimmed.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = trimmed.as_bytes();
    let mut pos = start;

    let first = sextet(bytes, pos)?;
    let n = if first < 63 {
        pos += 1;
        first
    } else if bytes.get(pos + 1) == Some(&b'~') {
        pos += 2;
        let mut n = 0;
        for _ in 0..6 {
            n = n << 6 | sextet(bytes, pos)?;
            pos += 1;
        }
        n
    } else {
        pos += 1;
        let mut n = 0;
        for _ in 0..3 {
            n = n << 6 | sextet(bytes, pos)?;
            pos += 1;
        }
        n
    } as usize;

    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if bytes.len() - pos != needed {
        return Err(Error::Parse {
            offset: pos + needed.min(bytes.len() - pos),
            message: format!(
                "expected {needed} data bytes for {n} vertices, found {}",
                bytes.len() - pos
            ),
        });
    }
    let mut adj = vec![Vec::new(); n];
    let mut k = 0;
    'cols: for j in 1..n {
        for i in 0..j {
            let byte = sextet(bytes, pos + k / 6)?;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i].push(j);
                adj[j].push(i);
            }
            k += 1;
            if k == bits {
                break 'cols;
            }
        }
    }
    if bits % 6 != 0 {
        let last = pos + needed - 1;
        let pad = sextet(bytes, last)? & ((1 << (6 - bits % 6)) - 1);
        if pad != 0 {
            return Err(Error::Parse {
                offset: last,
                message: "non-zero padding bits".into(),
            });
        }
    }
    Ok(SimpleGraph::from_adjacency(adj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{standard_graph, StandardFamily};

    #[test]
    fn known_encodings() {
        let k4 = standard_graph(StandardFamily::Complete, &[4]).unwrap();
        assert_eq!(encode(&k4), "C~");
        assert_eq!(encode(&SimpleGraph::empty(1)), "@");
        assert_eq!(encode(&SimpleGraph::empty(0)), "?");
        // Reference string from the format description: 5 vertices,
        // edges 0-2, 0-4, 1-3, 3-4.
        let g = SimpleGraph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
        assert_eq!(decode("DQc").unwrap(), g);
    }

    #[test]
    fn long_size_prefix() {
        let g = standard_graph(StandardFamily::Cycle, &[100]).unwrap();
        let s = encode(&g);
        assert!(s.starts_with("~?@c"));
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn header_and_newline_accepted() {
        let paw = standard_graph(StandardFamily::Paw, &[]).unwrap();
        let s = format!(">>graph6<<{}\n", encode(&paw));
        assert_eq!(decode(&s).unwrap(), paw);
    }

    #[test]
    fn malformed_inputs_report_offsets() {
        assert_eq!(
            decode("C~~"),
            Err(Error::Parse {
                offset: 2,
                message: "expected 1 data bytes for 4 vertices, found 2".into()
            })
        );
        assert!(matches!(decode(""), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(decode("C\x01"), Err(Error::Parse { offset: 1, .. })));
        // K_2 has one bit; the remaining five must be zero.
        assert!(matches!(decode("A@"), Err(Error::Parse { offset: 1, .. })));
        assert!(decode("A_").is_ok());
    }
}
