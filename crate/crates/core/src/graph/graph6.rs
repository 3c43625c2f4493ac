use super::{Digraph, Graph};
use crate::error::{Error, Result};

const GRAPH6_HEADER: &str = ">>graph6<<";
const DIGRAPH6_HEADER: &str = ">>digraph6<<";

fn bad(msg: impl Into<String>) -> Error {
    Error::Format(msg.into())
}

fn decode_chars(s: &[u8]) -> Result<Vec<u8>> {
    s.iter()
        .map(|&c| {
            if (63..=126).contains(&c) {
                Ok(c - 63)
            } else {
                Err(bad(format!("character {:?} out of range 63..126", c as char)))
            }
        })
        .collect()
}

// Returns (n, number of 6-bit groups consumed).
fn decode_order(v: &[u8]) -> Result<(usize, usize)> {
    match v {
        [] => Err(bad("empty input")),
        [63, 63, rest @ ..] => {
            if rest.len() < 6 {
                return Err(bad("truncated 8-byte length header"));
            }
            let n = rest[..6].iter().fold(0usize, |acc, &b| (acc << 6) | b as usize);
            Ok((n, 8))
        }
        [63, rest @ ..] => {
            if rest.len() < 3 {
                return Err(bad("truncated 4-byte length header"));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| (acc << 6) | b as usize);
            Ok((n, 4))
        }
        [b, ..] => Ok((*b as usize, 1)),
    }
}

fn encode_order(n: usize, out: &mut String) {
    if n < 63 {
        out.push((n as u8 + 63) as char);
    } else if n < 258_048 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
}

fn unpack_bits(groups: &[u8], nbits: usize) -> Result<Vec<bool>> {
    let need = nbits.div_ceil(6);
    if groups.len() != need {
        return Err(bad(format!(
            "expected {need} data characters, found {}",
            groups.len()
        )));
    }
    let mut bits = Vec::with_capacity(need * 6);
    for &g in groups {
        for k in (0..6).rev() {
            bits.push((g >> k) & 1 == 1);
        }
    }
    if bits[nbits..].iter().any(|&b| b) {
        return Err(bad("nonzero padding bits"));
    }
    bits.truncate(nbits);
    Ok(bits)
}

fn pack_bits(bits: impl Iterator<Item = bool>, out: &mut String) {
    let mut acc = 0u8;
    let mut k = 0;
    for b in bits {
        acc = (acc << 1) | b as u8;
        k += 1;
        if k == 6 {
            out.push((acc + 63) as char);
            acc = 0;
            k = 0;
        }
    }
    if k > 0 {
        out.push(((acc << (6 - k)) + 63) as char);
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s);
    if s.starts_with('&') || s.starts_with(':') || s.starts_with(';') {
        return Err(bad("not a graph6 string"));
    }
    let v = decode_chars(s.as_bytes())?;
    let (n, used) = decode_order(&v)?;
    let bits = unpack_bits(&v[used..], n * n.saturating_sub(1) / 2)?;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    encode_order(n, &mut out);
    pack_bits(
        (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).map(|(i, j)| g.has_edge(i, j)),
        &mut out,
    );
    out
}

pub fn parse_digraph6(text: &str) -> Result<Digraph> {
    let s = text.trim();
    let s = s.strip_prefix(DIGRAPH6_HEADER).unwrap_or(s);
    let s = s
        .strip_prefix('&')
        .ok_or_else(|| bad("digraph6 string must start with '&'"))?;
    let v = decode_chars(s.as_bytes())?;
    let (n, used) = decode_order(&v)?;
    let bits = unpack_bits(&v[used..], n * n)?;
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if bits[i * n + j] {
                if i == j {
                    return Err(bad(format!("loop at vertex {i}")));
                }
                arcs.push((i, j));
            }
        }
    }
    Digraph::from_arcs(n, &arcs)
}

pub fn encode_digraph6(d: &Digraph) -> String {
    let n = d.order();
    let mut out = String::from("&");
    encode_order(n, &mut out);
    pack_bits(
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| d.has_arc(i, j)),
        &mut out,
    );
    out
}

/// Whitespace-separated "u v" pairs, one per line, 0-based. Lines starting
/// with `#` are skipped. The order is one more than the largest id, unless
/// a line of the form `n <order>` appears first.
pub fn parse_edge_list(text: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut declared = None;
    let mut pairs = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() == 2 && fields[0] == "n" && pairs.is_empty() && declared.is_none() {
            declared = Some(
                fields[1]
                    .parse::<usize>()
                    .map_err(|_| bad(format!("line {}: bad order", lineno + 1)))?,
            );
            continue;
        }
        if fields.len() != 2 {
            return Err(bad(format!("line {}: expected two vertex ids", lineno + 1)));
        }
        let u = fields[0]
            .parse::<usize>()
            .map_err(|_| bad(format!("line {}: bad vertex id", lineno + 1)))?;
        let v = fields[1]
            .parse::<usize>()
            .map_err(|_| bad(format!("line {}: bad vertex id", lineno + 1)))?;
        pairs.push((u, v));
    }
    let inferred = pairs.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = match declared {
        Some(n) if n < inferred => return Err(bad("vertex id exceeds declared order")),
        Some(n) => n,
        None => inferred,
    };
    Ok((n, pairs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!((k4.order(), k4.size()), (4, 6));
        let p4 = parse_graph6("Ch").unwrap();
        assert_eq!(p4.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        let c4 = parse_graph6("Cl").unwrap();
        assert_eq!(c4.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(encode_graph6(&c4), "Cl");
    }

    #[test]
    fn header_and_errors() {
        assert_eq!(parse_graph6(">>graph6<<C~").unwrap().size(), 6);
        assert!(parse_graph6("C").is_err());
        assert!(parse_graph6("C~~").is_err());
        assert!(parse_graph6("C\u{7f}").is_err());
        // "A_" is K2; "A`" sets a padding bit.
        assert_eq!(parse_graph6("A_").unwrap().size(), 1);
        assert!(parse_graph6("A`").is_err());
    }

    #[test]
    fn large_order_header() {
        let g = Graph::from_edges(70, &[(0, 69), (3, 4)]).unwrap();
        let s = encode_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn digraph_round_trip() {
        let d = Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let s = encode_digraph6(&d);
        assert!(s.starts_with('&'));
        assert_eq!(parse_digraph6(&s).unwrap(), d);
        assert!(parse_digraph6("C~").is_err());
    }

    #[test]
    fn edge_list() {
        let (n, e) = parse_edge_list("# p3\n0 1\n1 2\n").unwrap();
        assert_eq!((n, e), (3, vec![(0, 1), (1, 2)]));
        let (n, _) = parse_edge_list("n 5\n0 1\n").unwrap();
        assert_eq!(n, 5);
        assert!(parse_edge_list("0 1 2\n").is_err());
    }
}
