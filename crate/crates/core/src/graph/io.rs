use super::{Graph, VertexRole};
use crate::error::{Error, Result};
use serde_json::{json, Value};

/// Parses the `n m` / `u v` edge-list format. Blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("missing header line".into()))?;
    let (n, m) = parse_pair(header, "header")?;
    let mut edges = Vec::with_capacity(m);
    for (i, line) in lines.enumerate() {
        if i >= m {
            return Err(Error::Parse(format!(
                "more than the declared {m} edge lines"
            )));
        }
        edges.push(parse_pair(line, "edge")?);
    }
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header declares {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::new(n, edges)
}

fn parse_pair(line: &str, what: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(|t| {
        t.parse::<usize>()
            .map_err(|_| Error::Parse(format!("{what} line {line:?}: not a non-negative integer")))
    });
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a?, b?)),
        _ => Err(Error::Parse(format!(
            "{what} line {line:?}: expected two integers"
        ))),
    }
}

/// Role map as a JSON array of `{vertex, role, source}`.
pub fn roles_to_json(roles: &[VertexRole]) -> Value {
    Value::Array(
        roles
            .iter()
            .enumerate()
            .map(|(vertex, role)| match *role {
                VertexRole::Original(v) => {
                    json!({"vertex": vertex, "role": "original", "source": v})
                }
                VertexRole::EdgeVertex(u, v) => {
                    json!({"vertex": vertex, "role": "edge", "source": [u, v]})
                }
            })
            .collect(),
    )
}
