//! Named small graphs and exhaustive isomorphism-class generators.

use super::{canonical_form, CanonicalForm, Edge, Graph};
use crate::error::{Error, Result};
use std::collections::BTreeSet;

/// Looks up a graph by name: `K<n>`, `C<n>`, `P<n>` (path on n vertices),
/// `E<n>` (edgeless), `K<a>,<b>`, `K<a>,<b>,<c>`, `W<n>` (wheel with n rim
/// vertices), `Petersen`, `Q3`, `paw`, `bull`, `diamond`.
pub fn named(name: &str) -> Result<Graph> {
    let bad = || Error::Parse(format!("unknown graph name {name:?}"));
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
    match name {
        "Petersen" | "petersen" => {
            let outer = (0..5).map(|i| (i, (i + 1) % 5));
            let spokes = (0..5).map(|i| (i, i + 5));
            let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
            return Graph::new(10, outer.chain(spokes).chain(inner));
        }
        "Q3" | "cube" => {
            let edges = (0..8usize).flat_map(|u| {
                (0..3)
                    .map(move |b| (u, u ^ (1 << b)))
                    .filter(|&(u, v)| u < v)
            });
            return Graph::new(8, edges);
        }
        "paw" => return Graph::new(4, [(0, 1), (0, 2), (1, 2), (2, 3)]),
        "bull" => return Graph::new(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]),
        "diamond" => return Graph::new(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
        _ => {}
    }
    let (head, rest) = name.split_at(name.char_indices().nth(1).ok_or_else(bad)?.0);
    match head {
        "K" if rest.contains(',') => {
            let parts = rest.split(',').map(num).collect::<Result<Vec<_>>>()?;
            Ok(complete_multipartite(&parts))
        }
        "K" => {
            let n = num(rest)?;
            Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        "C" => {
            let n = num(rest)?;
            if n < 3 {
                return Err(bad());
            }
            Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        "P" => {
            let n = num(rest)?;
            Graph::new(n, (1..n).map(|i| (i - 1, i)))
        }
        "E" => Ok(Graph::empty(num(rest)?)),
        "W" => {
            let r = num(rest)?;
            if r < 3 {
                return Err(bad());
            }
            let rim = (0..r).map(|i| (1 + i, 1 + (i + 1) % r));
            Graph::new(r + 1, rim.chain((1..=r).map(|i| (0, i))))
        }
        _ => Err(bad()),
    }
}

fn complete_multipartite(parts: &[usize]) -> Graph {
    let mut part_of = Vec::new();
    for (p, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(p, size));
    }
    let n = part_of.len();
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| part_of[u] != part_of[v]);
    Graph::new(n, edges).expect("multipartite graph is simple")
}

fn finish(set: BTreeSet<(usize, CanonicalForm)>) -> Vec<Graph> {
    set.into_iter().map(|(_, f)| f.to_graph()).collect()
}

/// All graphs on exactly `n` vertices up to isomorphism (n ≤ 7), ordered by
/// edge count then canonical form.
pub fn all_graphs_on(n: usize) -> Vec<Graph> {
    assert!(n <= 7, "exhaustive generation is limited to 7 vertices");
    let pairs: Vec<Edge> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut set = BTreeSet::new();
    for mask in 0u64..1 << pairs.len() {
        let g = Graph::new(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e),
        )
        .expect("subset of pairs");
        set.insert((g.m(), canonical_form(&g)));
    }
    finish(set)
}

pub fn connected_graphs_on(n: usize) -> Vec<Graph> {
    all_graphs_on(n)
        .into_iter()
        .filter(Graph::is_connected)
        .collect()
}

/// Connected graphs with between 1 and `max_m` edges, up to isomorphism,
/// ordered by edge count then canonical form.
///
/// Level `m + 1` is grown from level `m` by adding a chord or a pendant edge;
/// every connected graph with at least two edges has a leaf edge or a non-bridge
/// whose removal leaves a connected graph, so nothing is missed.
pub fn connected_graphs_up_to_edges(max_m: usize) -> Vec<Graph> {
    if max_m == 0 {
        return Vec::new();
    }
    let mut all = BTreeSet::new();
    let k2 = canonical_form(&Graph::new(2, [(0, 1)]).unwrap());
    let mut level: BTreeSet<CanonicalForm> = [k2].into();
    for m in 1..=max_m {
        all.extend(level.iter().map(|f| (m, f.clone())));
        if m == max_m {
            break;
        }
        let mut next = BTreeSet::new();
        for f in &level {
            let g = f.to_graph();
            let n = g.n();
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        next.insert(canonical_form(&g.with_edges([(u, v)]).unwrap()));
                    }
                }
                let grown = g.with_vertices(1).with_edges([(u, n)]).unwrap();
                next.insert(canonical_form(&grown));
            }
        }
        level = next;
    }
    finish(all)
}

/// Every graph without isolated vertices having at most `max_m` edges, up to
/// isomorphism, including the null graph. Built as multisets of connected
/// graphs, so disconnected graphs are never canonicalized as a whole.
pub fn graphs_up_to_edges(max_m: usize) -> Vec<Graph> {
    let connected = connected_graphs_up_to_edges(max_m);
    let mut out = BTreeSet::new();
    let mut stack = Vec::new();
    multisets(&connected, 0, max_m, &mut stack, &mut out);
    finish(out)
}

fn multisets(
    parts: &[Graph],
    from: usize,
    budget: usize,
    chosen: &mut Vec<usize>,
    out: &mut BTreeSet<(usize, CanonicalForm)>,
) {
    let g = chosen
        .iter()
        .fold(Graph::empty(0), |acc, &i| acc.disjoint_union(&parts[i]));
    out.insert((g.m(), canonical_form(&g)));
    for i in from..parts.len() {
        if parts[i].m() <= budget {
            chosen.push(i);
            multisets(parts, i, budget - parts[i].m(), chosen, out);
            chosen.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_sizes() {
        for (name, n, m) in [
            ("K4", 4, 6),
            ("C5", 5, 5),
            ("P4", 4, 3),
            ("K1,3", 4, 3),
            ("K3,3", 6, 9),
            ("K2,2,2", 6, 12),
            ("Petersen", 10, 15),
            ("Q3", 8, 12),
            ("W4", 5, 8),
            ("E5", 5, 0),
            ("paw", 4, 4),
        ] {
            let g = named(name).unwrap();
            assert_eq!((g.n(), g.m()), (n, m), "{name}");
        }
        assert!(named("X9").is_err());
        assert!(named("C2").is_err());
        assert!(named("").is_err());
    }

    #[test]
    fn small_counts_match_known_tables() {
        let counts: Vec<usize> = (0..=5).map(|n| all_graphs_on(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34]);
        let conn: Vec<usize> = (1..=5).map(|n| connected_graphs_on(n).len()).collect();
        assert_eq!(conn, vec![1, 1, 2, 6, 21]);
    }

    #[test]
    fn edge_graded_counts() {
        let conn = connected_graphs_up_to_edges(6);
        let per_m: Vec<usize> = (1..=6)
            .map(|m| conn.iter().filter(|g| g.m() == m).count())
            .collect();
        assert_eq!(per_m, vec![1, 1, 3, 5, 12, 30]);
        let all = graphs_up_to_edges(6);
        let per_m: Vec<usize> = (0..=6)
            .map(|m| all.iter().filter(|g| g.m() == m).count())
            .collect();
        assert_eq!(per_m, vec![1, 1, 2, 5, 11, 26, 68]);
        assert!(all.iter().all(|g| g.isolated_vertices().is_empty()));
    }
}
