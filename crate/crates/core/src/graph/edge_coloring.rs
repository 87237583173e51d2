use super::{Edge, Graph};
use crate::error::{Error, Result};
use crate::exec::Limits;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EdgeClass {
    Class1,
    Class2,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticIndex {
    pub class: EdgeClass,
    pub chromatic_index: usize,
    pub max_degree: usize,
    /// An optimal proper edge coloring, one color per edge in canonical order.
    pub coloring: Vec<usize>,
}

/// A partition of the edge set into perfect matchings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneFactorization {
    pub factors: Vec<Vec<Edge>>,
}

impl OneFactorization {
    /// Post-hoc check: every factor is a perfect matching of `g` and the
    /// factors partition `E(g)`.
    pub fn verify(&self, g: &Graph) -> bool {
        let mut covered = vec![false; g.m()];
        for factor in &self.factors {
            if factor.len() * 2 != g.n() {
                return false;
            }
            let mut hit = vec![false; g.n()];
            for &(u, v) in factor {
                let Some(i) = g.edge_index(u, v) else {
                    return false;
                };
                if covered[i] || hit[u] || hit[v] {
                    return false;
                }
                covered[i] = true;
                hit[u] = true;
                hit[v] = true;
            }
        }
        covered.into_iter().all(|c| c)
    }
}

/// Proper edge coloring with at most `colors` colors, if one exists.
///
/// Exhaustive backtracking: the next edge is the uncolored one with the fewest
/// admissible colors (lowest index on ties), and a fresh color is only ever the
/// smallest color not used so far, which removes color-permutation symmetry.
pub fn edge_coloring(g: &Graph, colors: usize) -> Option<Vec<usize>> {
    assert!(colors <= 64, "edge coloring supports at most 64 colors");
    if g.m() == 0 {
        return Some(Vec::new());
    }
    if colors == 0 {
        return None;
    }
    let mut search = EdgeColoringSearch {
        edges: g.edges(),
        colors,
        used: vec![0; g.n()],
        color: vec![usize::MAX; g.m()],
    };
    search.run(g.m(), 0).then_some(search.color)
}

struct EdgeColoringSearch<'a> {
    edges: &'a [Edge],
    colors: usize,
    used: Vec<u64>,
    color: Vec<usize>,
}

impl EdgeColoringSearch<'_> {
    fn admissible(&self, e: usize, fresh: usize) -> u64 {
        let (u, v) = self.edges[e];
        let limit = (fresh + 1).min(self.colors);
        let range = if limit == 64 {
            u64::MAX
        } else {
            (1u64 << limit) - 1
        };
        range & !(self.used[u] | self.used[v])
    }

    fn run(&mut self, remaining: usize, fresh: usize) -> bool {
        if remaining == 0 {
            return true;
        }
        let mut best: Option<(u32, usize)> = None;
        for e in 0..self.edges.len() {
            if self.color[e] != usize::MAX {
                continue;
            }
            let count = self.admissible(e, fresh).count_ones();
            if count == 0 {
                return false;
            }
            if best.is_none_or(|(c, _)| count < c) {
                best = Some((count, e));
            }
        }
        let (_, e) = best.expect("an uncolored edge remains");
        let (u, v) = self.edges[e];
        let mut options = self.admissible(e, fresh);
        while options != 0 {
            let c = options.trailing_zeros() as usize;
            options &= options - 1;
            self.color[e] = c;
            self.used[u] |= 1 << c;
            self.used[v] |= 1 << c;
            if self.run(remaining - 1, fresh.max(c + 1)) {
                return true;
            }
            self.used[u] &= !(1 << c);
            self.used[v] &= !(1 << c);
            self.color[e] = usize::MAX;
        }
        false
    }
}

/// Decides class 1 versus class 2 by exact search with Δ colors, then
/// confirms χ′ = Δ + 1 with an explicit coloring in the class 2 case.
pub fn chromatic_index_class(g: &Graph, limits: &Limits) -> Result<ChromaticIndex> {
    if g.m() > limits.max_edge_coloring_edges {
        return Err(Error::guard(
            "edge coloring edges",
            limits.max_edge_coloring_edges,
            g.m(),
        ));
    }
    let delta = g.max_degree();
    if let Some(coloring) = edge_coloring(g, delta) {
        return Ok(ChromaticIndex {
            class: EdgeClass::Class1,
            chromatic_index: delta,
            max_degree: delta,
            coloring,
        });
    }
    let coloring =
        edge_coloring(g, delta + 1).expect("every simple graph has a (Δ+1)-edge-coloring");
    Ok(ChromaticIndex {
        class: EdgeClass::Class2,
        chromatic_index: delta + 1,
        max_degree: delta,
        coloring,
    })
}

/// Exhaustive search for a 1-factorization. `Ok(None)` is the definitive
/// negative answer; non-regular graphs and odd orders are answered
/// immediately.
///
/// For a Δ-regular graph the color classes of a proper Δ-edge-coloring are
/// exactly perfect matchings, so the search runs as an edge coloring. Factors
/// are returned sorted, each factor's edges in canonical order.
pub fn one_factorization(g: &Graph, limits: &Limits) -> Result<Option<OneFactorization>> {
    if g.n() % 2 == 1 || !g.is_regular() {
        return Ok(None);
    }
    if g.n() > limits.max_factorization_order {
        return Err(Error::guard(
            "factorization order",
            limits.max_factorization_order,
            g.n(),
        ));
    }
    let delta = g.max_degree();
    let Some(coloring) = edge_coloring(g, delta) else {
        return Ok(None);
    };
    let mut factors = vec![Vec::new(); delta];
    for (e, &c) in coloring.iter().enumerate() {
        factors[c].push(g.edges()[e]);
    }
    factors.sort();
    let f = OneFactorization { factors };
    debug_assert!(f.verify(g));
    Ok(Some(f))
}
