//! Text formats for ideals, graphs, and integer matrices.
//!
//! Ideal files start with a `dim n` header; each later non-blank line is one
//! generator, either as space-separated exponents (`1 1 0 0 0 1 0`) or in
//! symbolic form (`x1*x2*x6`, `x1x2x6`, `x2^3`; a bare `1` is the unit
//! monomial). The writer always emits the exponent form. Graph files start
//! with `vertices a b c ...` followed by `edge a b` lines. Lines beginning
//! with `#` are comments everywhere.

use crate::error::{Error, Result};
use crate::exponent::ExponentVector;
use crate::graph::SimpleGraph;
use crate::ideal::MonomialIdeal;
use num::BigInt;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_err(line_no: usize, detail: impl std::fmt::Display) -> Error {
    Error::Parse(format!("line {line_no}: {detail}"))
}

/// Parse one symbolic monomial: `x`-prefixed factors with optional `^`
/// exponents, joined by optional `*`, or the literal `1`.
fn parse_symbolic(line_no: usize, dim: usize, text: &str) -> Result<ExponentVector> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
    if compact == "1" {
        return Ok(ExponentVector::one(dim));
    }
    let mut coords = vec![0u32; dim];
    let mut chars = compact.chars().peekable();
    let read_number = |chars: &mut std::iter::Peekable<std::str::Chars>| -> Option<u32> {
        let mut digits = String::new();
        while let Some(c) = chars.peek() {
            if c.is_ascii_digit() {
                digits.push(*c);
                chars.next();
            } else {
                break;
            }
        }
        digits.parse().ok()
    };
    while let Some(c) = chars.next() {
        if c != 'x' {
            return Err(parse_err(line_no, format!("expected 'x', found '{c}'")));
        }
        let index: usize = read_number(&mut chars)
            .ok_or_else(|| parse_err(line_no, "missing variable index after 'x'"))?
            as usize;
        if index == 0 || index > dim {
            return Err(parse_err(
                line_no,
                format!("variable x{index} out of range for dim {dim}"),
            ));
        }
        let exp = if chars.peek() == Some(&'^') {
            chars.next();
            read_number(&mut chars)
                .ok_or_else(|| parse_err(line_no, "missing exponent after '^'"))?
        } else {
            1
        };
        coords[index - 1] += exp;
    }
    Ok(ExponentVector::new(coords))
}

/// Read an ideal from its text form. A header with no generator rows is the
/// zero ideal; a row of all zeros (or symbolic `1`) makes it the unit ideal.
pub fn read_ideal(text: &str) -> Result<MonomialIdeal> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input, expected 'dim n' header".into()))?;
    let dim: usize = header
        .strip_prefix("dim")
        .map(str::trim)
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| parse_err(line_no, format!("expected 'dim n' header, found '{header}'")))?;
    if dim == 0 {
        return Err(parse_err(line_no, "dimension must be positive"));
    }
    let mut gens = Vec::new();
    for (line_no, line) in lines {
        if line.contains('x') || line == "1" {
            gens.push(parse_symbolic(line_no, dim, line)?);
            continue;
        }
        let coords: Vec<u32> = line
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| parse_err(line_no, format!("bad exponent '{t}'")))
            })
            .collect::<Result<_>>()?;
        if coords.len() != dim {
            return Err(parse_err(
                line_no,
                format!("expected {dim} exponents, found {}", coords.len()),
            ));
        }
        gens.push(ExponentVector::new(coords));
    }
    MonomialIdeal::minimalize(dim, gens)
}

/// Exponent form of an ideal: `dim n` header plus one row per generator in
/// canonical order.
pub fn write_ideal(ideal: &MonomialIdeal) -> String {
    let mut out = format!("dim {}\n", ideal.dim());
    for g in ideal.gens() {
        out.push_str(&exponent_row(g));
        out.push('\n');
    }
    out
}

fn exponent_row(v: &ExponentVector) -> String {
    v.coords()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// One space-separated exponent row, no trailing newline.
pub fn write_exponents(v: &ExponentVector) -> String {
    exponent_row(v)
}

/// Read a graph: `vertices a b c ...` then `edge a b` lines.
pub fn read_graph(text: &str) -> Result<SimpleGraph> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input, expected 'vertices ...' header".into()))?;
    let labels: Vec<String> = header
        .strip_prefix("vertices")
        .ok_or_else(|| {
            parse_err(line_no, format!("expected 'vertices ...' header, found '{header}'"))
        })?
        .split_whitespace()
        .map(str::to_string)
        .collect();
    let mut graph = SimpleGraph::new(labels)?;
    for (line_no, line) in lines {
        let rest = line
            .strip_prefix("edge")
            .ok_or_else(|| parse_err(line_no, format!("expected 'edge a b', found '{line}'")))?;
        let ends: Vec<&str> = rest.split_whitespace().collect();
        if ends.len() != 2 {
            return Err(parse_err(line_no, "edge needs exactly two endpoints"));
        }
        graph.add_edge(ends[0], ends[1])?;
    }
    Ok(graph)
}

/// Graph text form, edges in canonical sorted order.
pub fn write_graph(graph: &SimpleGraph) -> String {
    let mut out = String::from("vertices");
    for l in graph.labels() {
        out.push(' ');
        out.push_str(l);
    }
    out.push('\n');
    let labels = graph.labels();
    for &(a, b) in graph.edge_indices() {
        out.push_str(&format!("edge {} {}\n", labels[a], labels[b]));
    }
    out
}

/// Space-separated integer rows, one per line (the Hilbert-basis matrix
/// format).
pub fn write_matrix(rows: &[Vec<BigInt>]) -> String {
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
