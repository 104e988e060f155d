//! Plain-text edge lists.
//!
//! Line 1 is `n m`; then `m` lines `u v` with `u < v`. Tokens are ASCII
//! decimal separated by a single space, and every line ends in LF.

use std::collections::HashSet;
use std::fmt::Write;

use crate::error::ParseError;
use crate::graph::Graph;

/// Serializes `g`, edges in lexicographic order.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, column, message: message.into() }
}

/// Splits a line into exactly two decimal fields.
fn two_numbers(text: &str, line: usize) -> Result<[(usize, usize); 2], ParseError> {
    let mut fields = Vec::with_capacity(2);
    let mut column = 1;
    for tok in text.split(' ') {
        if tok.is_empty() {
            return Err(err(line, column, "expected a single space between two numbers"));
        }
        if fields.len() == 2 {
            return Err(err(line, column, "unexpected extra field"));
        }
        if !tok.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err(line, column, format!("`{tok}` is not a non-negative decimal integer")));
        }
        if tok.len() > 1 && tok.starts_with('0') {
            return Err(err(line, column, format!("`{tok}` has a leading zero")));
        }
        let value = tok.parse().map_err(|_| err(line, column, format!("`{tok}` is too large")))?;
        fields.push((value, column));
        column += tok.len() + 1;
    }
    match fields[..] {
        [a, b] => Ok([a, b]),
        _ => Err(err(line, column, "expected two numbers")),
    }
}

/// Parses the edge-list format, rejecting anything [`to_edge_list`] would
/// not produce apart from edge order.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let body = text.strip_suffix('\n').ok_or_else(|| {
        let line = text.split('\n').count();
        err(line, text.rsplit('\n').next().map_or(0, str::len) + 1, "missing final line feed")
    })?;
    let mut lines = body.split('\n').enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().expect("split yields at least one piece");
    if let Some(col) = header.find('\r') {
        return Err(err(1, col + 1, "carriage return is not allowed"));
    }
    let [(n, _), (m, m_col)] = two_numbers(header, 1)?;
    let mut seen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        if let Some(col) = text.find('\r') {
            return Err(err(line, col + 1, "carriage return is not allowed"));
        }
        if text.is_empty() {
            return Err(err(line, 1, "blank line"));
        }
        if edges.len() == m {
            return Err(err(line, 1, format!("more than the {m} edges declared in the header")));
        }
        let [(u, _), (v, v_col)] = two_numbers(text, line)?;
        if u >= v {
            return Err(err(line, v_col, format!("edge `{u} {v}` must have u < v")));
        }
        if v >= n {
            return Err(err(line, v_col, format!("vertex {v} out of range for n = {n}")));
        }
        if !seen.insert((u, v)) {
            return Err(err(line, 1, format!("duplicate edge `{u} {v}`")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(err(1, m_col, format!("header declares {m} edges but {} follow", edges.len())));
    }
    Ok(Graph::from_edges(n, edges).expect("pairs checked above"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn round_trip() {
        for g in [petersen(), path_strong_k3(3).unwrap(), Graph::empty(0), Graph::empty(4), complete(1)] {
            let text = to_edge_list(&g);
            assert_eq!(parse_edge_list(&text).unwrap(), g);
        }
        assert_eq!(to_edge_list(&path(3)), "3 2\n0 1\n1 2\n");
        assert_eq!(to_edge_list(&Graph::empty(0)), "0 0\n");
    }

    #[test]
    fn any_edge_order_is_accepted() {
        assert_eq!(parse_edge_list("3 2\n1 2\n0 1\n").unwrap(), path(3));
    }

    #[test]
    fn diagnostics() {
        let at = |s: &str| {
            let e = parse_edge_list(s).unwrap_err();
            (e.line, e.column)
        };
        assert_eq!(at("3 1\n1 1\n"), (2, 3));
        assert_eq!(at("3 1\n2 1\n"), (2, 3));
        assert_eq!(at("3 2\n0 1\n0 1\n"), (3, 1));
        assert_eq!(at("3 1\n0 3\n"), (2, 3));
        assert_eq!(at("3 1\n0  1\n"), (2, 3));
        assert_eq!(at("3 1\n0 x\n"), (2, 3));
        assert_eq!(at("3 1\n0 1"), (2, 4));
        assert_eq!(at("3 1\n0 1\n\n"), (3, 1));
        assert_eq!(at("3 2\n0 1\n"), (1, 3));
        assert_eq!(at("3 1\r\n0 1\n"), (1, 4));
        assert_eq!(at("3 0\n0 1\n"), (2, 1));
        assert_eq!(at("3\n"), (1, 3));
        assert_eq!(at("03 0\n"), (1, 1));
        assert!(parse_edge_list("3 1\n1 1\n").unwrap_err().to_string().contains("line 2"));
    }
}
