//! Text formats: graph6, 1-based edge lists, and facet lists.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

/// Encodes `g` in graph6: the vertex count, then the upper triangle column
/// by column in 6-bit groups, each offset by 63.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

pub fn parse_graph6(input: &str) -> Result<Graph> {
    let s = input.trim_end_matches(['\n', '\r']);
    let offset = if s.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = &s.as_bytes()[offset..];
    let at = |k: usize| format!("byte {}", offset + k + 1);
    for (k, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(at(k), format!("character {:?} is outside '?'..'~'", b as char)));
        }
    }
    let (n, start) = match bytes {
        [] => return Err(Error::parse(at(0), "empty graph6 string")),
        [126, 126, ..] => return Err(Error::parse(at(1), "graphs this large are not supported")),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::parse(at(bytes.len()), "truncated vertex count"));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, 4)
        }
        [b, ..] => ((b - 63) as usize, 1),
    };
    if n > MAX_VERTICES {
        return Err(Error::parse(at(0), format!("{n} vertices, at most {MAX_VERTICES} supported")));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = start + pairs.div_ceil(6);
    if bytes.len() != expected {
        return Err(Error::parse(
            at(bytes.len().min(expected)),
            format!("expected {expected} characters for {n} vertices, got {}", bytes.len()),
        ));
    }
    let mut g = Graph::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[start + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if pairs % 6 != 0 {
        let last = bytes[expected - 1] - 63;
        if last & ((1 << (6 - pairs % 6)) - 1) != 0 {
            return Err(Error::parse(at(expected - 1), "nonzero padding bits"));
        }
    }
    Ok(g)
}

fn content_lines(input: &str) -> impl Iterator<Item = (usize, &str)> {
    input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

/// Edge list: a line with `n`, then one `u v` line per edge, 1-based.
/// Blank lines and `#` comments are ignored.
pub fn parse_edge_list(input: &str) -> Result<Graph> {
    let mut lines = content_lines(input);
    let (first, header) = lines
        .next()
        .ok_or_else(|| Error::parse("line 1", "missing vertex count"))?;
    let n: usize = header
        .parse()
        .map_err(|_| Error::parse(format!("line {first}"), format!("expected a vertex count, got {header:?}")))?;
    if n > MAX_VERTICES {
        return Err(Error::parse(format!("line {first}"), format!("{n} vertices, at most {MAX_VERTICES} supported")));
    }
    let mut g = Graph::new(n)?;
    for (line, text) in lines {
        let pos = || format!("line {line}");
        let ends: Vec<&str> = text.split_whitespace().collect();
        let [u, v] = ends.as_slice() else {
            return Err(Error::parse(pos(), format!("expected two vertices, got {text:?}")));
        };
        let vertex = |t: &str| -> Result<usize> {
            match t.parse::<usize>() {
                Ok(x) if (1..=n).contains(&x) => Ok(x - 1),
                _ => Err(Error::parse(pos(), format!("vertex {t:?} is not in 1..={n}"))),
            }
        };
        let (u, v) = (vertex(u)?, vertex(v)?);
        if u == v {
            return Err(Error::parse(pos(), format!("self-loop at {}", u + 1)));
        }
        g.add_edge(u, v)?;
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

/// Reads either format: a leading integer line means an edge list, anything
/// else is taken as graph6.
pub fn parse_graph(input: &str) -> Result<Graph> {
    let first = content_lines(input).next().map(|(_, l)| l);
    match first {
        Some(l) if l.chars().all(|c| c.is_ascii_digit()) => parse_edge_list(input),
        Some(l) => parse_graph6(l),
        None => Err(Error::parse("line 1", "empty input")),
    }
}

/// Facet list: one facet per line, vertex labels separated by spaces. Labels
/// are numbered in order of first appearance.
pub fn parse_facet_list(input: &str) -> Result<SimplicialComplex> {
    let mut labels: Vec<String> = Vec::new();
    let mut facets = Vec::new();
    for (line, text) in content_lines(input) {
        let mut f = VertexSet::EMPTY;
        for name in text.split_whitespace() {
            let v = match labels.iter().position(|l| l == name) {
                Some(v) => v,
                None => {
                    if labels.len() == MAX_VERTICES {
                        return Err(Error::parse(format!("line {line}"), format!("more than {MAX_VERTICES} vertices")));
                    }
                    labels.push(name.to_string());
                    labels.len() - 1
                }
            };
            f.insert(v);
        }
        facets.push(f);
    }
    if facets.is_empty() {
        return Err(Error::parse("line 1", "no facets"));
    }
    SimplicialComplex::new(labels, facets)
}

pub fn to_facet_list(c: &SimplicialComplex) -> String {
    c.facets()
        .iter()
        .map(|f| {
            let names: Vec<&str> = f.iter().map(|v| c.labels()[v].as_str()).collect();
            names.join(" ") + "\n"
        })
        .collect()
}
