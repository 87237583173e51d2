//! Canonical labeling for small graphs.
//!
//! Each connected component is labeled by individualization and refinement:
//! colour refinement to an equitable ordered partition, then branching on every
//! vertex of the first non-singleton cell, keeping the lexicographically least
//! relabeled edge list over all discrete leaves. Vertices of a cell that are
//! twins of an already tried vertex are skipped, since swapping twins is an
//! automorphism that fixes the current partition. Components are then sorted
//! and concatenated, so the form of a disjoint union never branches across
//! components.

use super::{Edge, Graph};

/// Canonical representative: isomorphic graphs map to equal values.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    pub edges: Vec<Edge>,
}

impl CanonicalForm {
    pub fn to_graph(&self) -> Graph {
        Graph::new(self.n, self.edges.iter().copied()).expect("canonical form is simple")
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let mut parts: Vec<CanonicalForm> = g
        .components()
        .iter()
        .map(|comp| canonical_connected(&g.induced_subgraph(comp)))
        .collect();
    // Larger components first, then by edge list.
    parts.sort_by(|a, b| b.n.cmp(&a.n).then_with(|| a.edges.cmp(&b.edges)));
    let mut n = 0;
    let mut edges = Vec::with_capacity(g.m());
    for p in parts {
        edges.extend(p.edges.iter().map(|&(u, v)| (u + n, v + n)));
        n += p.n;
    }
    CanonicalForm { n, edges }
}

fn canonical_connected(g: &Graph) -> CanonicalForm {
    let adj = g.adjacency();
    let mut best: Option<Vec<Edge>> = None;
    let cells = vec![(0..g.n()).collect::<Vec<_>>()];
    search(g, &adj, cells, &mut best);
    CanonicalForm {
        n: g.n(),
        edges: best.unwrap_or_default(),
    }
}

fn search(g: &Graph, adj: &[Vec<usize>], cells: Vec<Vec<usize>>, best: &mut Option<Vec<Edge>>) {
    let cells = refine(adj, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let mut label = vec![0; g.n()];
        for (i, c) in cells.iter().enumerate() {
            label[c[0]] = i;
        }
        let mut edges: Vec<Edge> = g
            .edges()
            .iter()
            .map(|&(u, v)| (label[u].min(label[v]), label[u].max(label[v])))
            .collect();
        edges.sort_unstable();
        if best.as_ref().is_none_or(|b| edges < *b) {
            *best = Some(edges);
        }
        return;
    };
    let cell = &cells[target];
    let mut tried: Vec<usize> = Vec::new();
    for &v in cell {
        if tried.iter().any(|&u| twins(adj, u, v)) {
            continue;
        }
        tried.push(v);
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..target]);
        next.push(vec![v]);
        next.push(cell.iter().copied().filter(|&w| w != v).collect());
        next.extend_from_slice(&cells[target + 1..]);
        search(g, adj, next, best);
    }
}

fn twins(adj: &[Vec<usize>], u: usize, v: usize) -> bool {
    let nu = adj[u].iter().filter(|&&w| w != v);
    let nv = adj[v].iter().filter(|&&w| w != u);
    nu.eq(nv)
}

/// Colour refinement of an ordered partition until stable. Cells split by the
/// vector of neighbour counts into each current cell; the pieces are ordered by
/// that vector, so the result does not depend on vertex names.
fn refine(adj: &[Vec<usize>], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut cell_of = vec![0; n];
    loop {
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        let k = cells.len();
        let mut next = Vec::with_capacity(k);
        for c in &cells {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = c
                .iter()
                .map(|&v| {
                    let mut sig = vec![0u32; k];
                    for &w in &adj[v] {
                        sig[cell_of[w]] += 1;
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == k {
            return next;
        }
        cells = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn brute_force(g: &Graph) -> Vec<Edge> {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for i in 0..n {
                    let mut q = p.clone();
                    q.insert(i, n - 1);
                    out.push(q);
                }
            }
            out
        }
        perms(g.n())
            .iter()
            .map(|p| g.relabel(p).edges().to_vec())
            .min()
            .unwrap()
    }

    #[test]
    fn relabeling_invariance() {
        for name in ["Petersen", "K3,3", "P4", "C6", "K1,3", "paw", "Q3"] {
            let g = named(name).unwrap();
            let f = canonical_form(&g);
            let n = g.n();
            let rev: Vec<usize> = (0..n).rev().collect();
            let rot: Vec<usize> = (0..n).map(|i| (i + 3) % n).collect();
            assert_eq!(canonical_form(&g.relabel(&rev)), f, "{name}");
            assert_eq!(canonical_form(&g.relabel(&rot)), f, "{name}");
        }
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let a = canonical_form(&named("C6").unwrap());
        let b = canonical_form(&named("C3").unwrap().disjoint_union(&named("C3").unwrap()));
        assert_ne!(a, b);
        assert_ne!(
            canonical_form(&named("K3,3").unwrap()),
            canonical_form(&named("K2,2,2").unwrap().with_edges([]).unwrap())
        );
    }

    #[test]
    fn connected_graphs_agree_with_brute_force_ordering_classes() {
        // Equivalence classes under both canonicalizers must coincide.
        let graphs: Vec<Graph> = (0u32..1 << 10)
            .filter_map(|mask| {
                let pairs: Vec<Edge> = (0..5)
                    .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
                    .collect();
                let g = Graph::new(
                    5,
                    pairs
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &e)| e),
                )
                .unwrap();
                g.is_connected().then_some(g)
            })
            .collect();
        let mut a: Vec<_> = graphs.iter().map(canonical_form).collect();
        let mut b: Vec<_> = graphs.iter().map(brute_force).collect();
        a.sort();
        a.dedup();
        b.sort();
        b.dedup();
        assert_eq!(a.len(), 21);
        assert_eq!(b.len(), 21);
    }
}
