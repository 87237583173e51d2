//! Brute-force coloring oracles: chromatic number, choosability, and the
//! chromatic-choosability check on line graphs.

use crate::error::{Error, Result};
use crate::exec::{find_map_first, Limits};
use crate::graph::{line_graph, Graph};
use crate::poly::atn_from_polynomial;
use serde_json::{json, Value};

/// Exact chromatic number by backtracking in vertex order, smallest feasible
/// color first, with colors introduced in order.
pub fn chromatic_number(g: &Graph, limits: &Limits) -> Result<usize> {
    if g.n() > limits.max_chromatic_order {
        return Err(Error::guard(
            "chromatic order",
            limits.max_chromatic_order,
            g.n(),
        ));
    }
    let adj = g.adjacency_masks();
    Ok((0..=g.n())
        .find(|&k| k_colorable(&adj, k))
        .expect("n colors always suffice"))
}

fn k_colorable(adj: &[u64], k: usize) -> bool {
    fn go(adj: &[u64], k: usize, v: usize, used: usize, color: &mut [usize]) -> bool {
        if v == adj.len() {
            return true;
        }
        for c in 0..k.min(used + 1) {
            let clash = (0..v).any(|w| adj[v] >> w & 1 == 1 && color[w] == c);
            if !clash {
                color[v] = c;
                if go(adj, k, v + 1, used.max(c + 1), color) {
                    return true;
                }
            }
        }
        false
    }
    let mut color = vec![usize::MAX; adj.len()];
    go(adj, k, 0, 0, &mut color)
}

/// One list of colors per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    pub lists: Vec<Vec<usize>>,
}

impl ListAssignment {
    /// A proper coloring choosing each vertex's color from its list, if any.
    pub fn coloring(&self, g: &Graph) -> Option<Vec<usize>> {
        list_coloring(&g.adjacency(), &self.lists)
    }
}

fn list_coloring(adj: &[Vec<usize>], lists: &[Vec<usize>]) -> Option<Vec<usize>> {
    fn go(adj: &[Vec<usize>], lists: &[Vec<usize>], v: usize, color: &mut [usize]) -> bool {
        if v == lists.len() {
            return true;
        }
        for &c in &lists[v] {
            if adj[v].iter().all(|&w| w > v || color[w] != c) {
                color[v] = c;
                if go(adj, lists, v + 1, color) {
                    return true;
                }
            }
        }
        false
    }
    let mut color = vec![usize::MAX; lists.len()];
    go(adj, lists, 0, &mut color).then_some(color)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Choosability {
    pub k: usize,
    pub choosable: bool,
    /// An assignment of k-lists with no proper coloring, when not choosable.
    pub counterexample: Option<ListAssignment>,
}

/// Vertices of the k-core, i.e. what survives repeatedly deleting vertices of
/// degree below `k`.
fn k_core(g: &Graph, k: usize) -> Vec<usize> {
    let adj = g.adjacency();
    let mut alive = vec![true; g.n()];
    let mut deg = g.degrees();
    let mut changed = true;
    while changed {
        changed = false;
        for v in 0..g.n() {
            if alive[v] && deg[v] < k {
                alive[v] = false;
                changed = true;
                for &w in &adj[v] {
                    deg[w] -= 1;
                }
            }
        }
    }
    (0..g.n()).filter(|&v| alive[v]).collect()
}

/// Decides whether every assignment of k-element lists admits a proper
/// coloring.
///
/// A vertex of degree below k can always be colored last, so only the k-core
/// is searched; if k is below the core's chromatic number, equal lists
/// `{0..k-1}` are already a counterexample. Otherwise list assignments over the
/// colors `0..k·n` are enumerated up to renaming of colors: colors appear in
/// increasing order of first use, and each list is drawn from the colors used
/// so far plus the next fresh ones. Any bad assignment uses at most k·n colors,
/// so the enumeration is complete. The size guard applies to this search.
pub fn is_k_choosable(g: &Graph, k: usize, limits: &Limits) -> Result<Choosability> {
    let n = g.n();
    if n == 0 {
        return Ok(Choosability {
            k,
            choosable: true,
            counterexample: None,
        });
    }
    let core = k_core(g, k);
    if core.is_empty() {
        return Ok(Choosability {
            k,
            choosable: true,
            counterexample: None,
        });
    }
    let h = g.induced_subgraph(&core);
    let bad_core = if chromatic_number(&h, limits)? > k {
        Some(vec![(0..k).collect::<Vec<_>>(); core.len()])
    } else {
        if core.len() > limits.max_choosability_order {
            return Err(Error::guard(
                "choosability order",
                limits.max_choosability_order,
                core.len(),
            ));
        }
        if k > limits.max_choosability_k {
            return Err(Error::guard("choosability k", limits.max_choosability_k, k));
        }
        ListSearch::new(&h, k).first_bad(limits)
    };
    Ok(match bad_core {
        None => Choosability {
            k,
            choosable: true,
            counterexample: None,
        },
        Some(core_lists) => {
            let mut fresh = core_lists.iter().flatten().max().map_or(0, |&c| c + 1);
            let mut lists = vec![Vec::new(); n];
            for (i, &v) in core.iter().enumerate() {
                lists[v] = core_lists[i].clone();
            }
            for list in lists.iter_mut().filter(|l| l.is_empty()) {
                *list = (fresh..fresh + k).collect();
                fresh += k;
            }
            Choosability {
                k,
                choosable: false,
                counterexample: Some(ListAssignment { lists }),
            }
        }
    })
}

struct ListSearch {
    adj: Vec<Vec<usize>>,
    k: usize,
}

impl ListSearch {
    fn new(g: &Graph, k: usize) -> Self {
        ListSearch {
            adj: g.adjacency(),
            k,
        }
    }

    /// Candidate lists for the next vertex given `used` colors so far: `j`
    /// old colors (any j-subset of `0..used`) plus the next `k - j` fresh ones.
    /// Produced in lexicographic order of the sorted list.
    fn candidates(&self, used: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for j in 0..=self.k.min(used) {
            for old in subsets(used, j) {
                let mut list = old;
                list.extend(used..used + self.k - j);
                out.push(list);
            }
        }
        out.sort();
        out
    }

    fn first_bad(&self, limits: &Limits) -> Option<Vec<Vec<usize>>> {
        let depth = self.adj.len().min(2);
        let mut prefixes = Vec::new();
        self.prefixes(depth, &mut Vec::new(), 0, &mut prefixes);
        find_map_first(limits.exec, &prefixes, |(lists, used)| {
            let mut lists = lists.clone();
            self.search(&mut lists, *used)
        })
    }

    fn prefixes(
        &self,
        depth: usize,
        lists: &mut Vec<Vec<usize>>,
        used: usize,
        out: &mut Vec<(Vec<Vec<usize>>, usize)>,
    ) {
        if lists.len() == depth {
            out.push((lists.clone(), used));
            return;
        }
        for cand in self.candidates(used) {
            let next_used = used.max(cand.last().map_or(0, |&c| c + 1));
            lists.push(cand);
            self.prefixes(depth, lists, next_used, out);
            lists.pop();
        }
    }

    fn search(&self, lists: &mut Vec<Vec<usize>>, used: usize) -> Option<Vec<Vec<usize>>> {
        if lists.len() == self.adj.len() {
            return list_coloring(&self.adj, lists)
                .is_none()
                .then(|| lists.clone());
        }
        for cand in self.candidates(used) {
            let next_used = used.max(cand.last().map_or(0, |&c| c + 1));
            lists.push(cand);
            let found = self.search(lists, next_used);
            lists.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

fn subsets(n: usize, j: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, j: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == j {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(n, j, x + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, j, 0, &mut Vec::new(), &mut out);
    out
}

/// Degeneracy: the largest minimum degree over all subgraphs.
pub fn degeneracy(g: &Graph) -> usize {
    (0..=g.n())
        .rev()
        .find(|&k| !k_core(g, k).is_empty())
        .unwrap_or(0)
}

/// Least k such that `g` is k-choosable. Searches upward from 1; the greedy
/// bound degeneracy + 1 ends the search without a check.
pub fn choice_number(g: &Graph, limits: &Limits) -> Result<usize> {
    if g.n() == 0 {
        return Ok(0);
    }
    let upper = degeneracy(g) + 1;
    for k in 1..upper {
        if is_k_choosable(g, k, limits)?.choosable {
            return Ok(k);
        }
    }
    Ok(upper)
}

/// Coloring quantities of L(G) against the line-graph bound Δ(G) + 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LccReport {
    pub chi: usize,
    pub ch: usize,
    pub atn: usize,
    pub max_degree: usize,
}

impl LccReport {
    pub fn chromatic_choosable(&self) -> bool {
        self.chi == self.ch
    }

    pub fn within_bound(&self) -> bool {
        self.atn <= self.max_degree + 1
    }

    pub fn to_json(&self, g: &Graph) -> Value {
        json!({
            "graph": g.to_edge_list(),
            "chi": self.chi,
            "ch": self.ch,
            "atn": self.atn,
            "bounds": {"thm2": self.max_degree + 1},
            "satisfies": self.chromatic_choosable() && self.within_bound(),
        })
    }
}

pub fn lcc_check(g: &Graph, limits: &Limits) -> Result<LccReport> {
    let l = line_graph(g).graph;
    Ok(LccReport {
        chi: chromatic_number(&l, limits)?,
        ch: choice_number(&l, limits)?,
        atn: atn_from_polynomial(&l, limits)?.atn,
        max_degree: g.max_degree(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn g(name: &str) -> Graph {
        named(name).unwrap()
    }

    #[test]
    fn chromatic_examples() {
        let lim = Limits::default();
        assert_eq!(chromatic_number(&g("K4"), &lim).unwrap(), 4);
        assert_eq!(chromatic_number(&g("C5"), &lim).unwrap(), 3);
        assert_eq!(
            chromatic_number(&line_graph(&g("K4")).graph, &lim).unwrap(),
            3
        );
        assert_eq!(chromatic_number(&Graph::empty(0), &lim).unwrap(), 0);
        assert_eq!(chromatic_number(&g("E3"), &lim).unwrap(), 1);
        assert!(chromatic_number(&g("K13"), &lim).unwrap_err().is_guard());
    }

    #[test]
    fn choosable_examples() {
        let lim = Limits::default();
        assert!(is_k_choosable(&g("K2"), 2, &lim).unwrap().choosable);
        assert!(is_k_choosable(&g("C4"), 2, &lim).unwrap().choosable);
        let c3 = is_k_choosable(&g("C3"), 2, &lim).unwrap();
        assert!(!c3.choosable);
        assert_eq!(c3.counterexample.unwrap().lists, vec![vec![0, 1]; 3]);
    }

    #[test]
    fn k33_is_not_2_choosable() {
        let lim = Limits::default();
        let r = is_k_choosable(&g("K3,3"), 2, &lim).unwrap();
        assert!(!r.choosable);
        let lists = r.counterexample.unwrap();
        assert!(lists.coloring(&g("K3,3")).is_none());
        assert!(lists.lists.iter().all(|l| l.len() == 2));
    }

    #[test]
    fn choice_number_examples() {
        let lim = Limits::default();
        assert_eq!(choice_number(&g("K3"), &lim).unwrap(), 3);
        assert_eq!(choice_number(&g("C4"), &lim).unwrap(), 2);
        assert_eq!(choice_number(&g("P4"), &lim).unwrap(), 2);
        assert_eq!(choice_number(&g("E4"), &lim).unwrap(), 1);
        assert_eq!(choice_number(&g("K5"), &lim).unwrap(), 5);
    }

    #[test]
    fn choosability_guard_is_loud() {
        let lim = Limits::default();
        // W6 is its own 3-core on 7 vertices and is 3-colorable.
        assert!(is_k_choosable(&g("W6"), 3, &lim).unwrap_err().is_guard());
    }

    #[test]
    fn lcc_examples() {
        let lim = Limits::default();
        let p3 = lcc_check(&g("P3"), &lim).unwrap();
        assert_eq!((p3.chi, p3.ch, p3.atn), (2, 2, 2));
        let k3 = lcc_check(&g("K3"), &lim).unwrap();
        assert_eq!((k3.chi, k3.ch, k3.atn), (3, 3, 3));
        assert_eq!(k3.atn, k3.max_degree + 1);
        let c4 = lcc_check(&g("C4"), &lim).unwrap();
        assert_eq!((c4.chi, c4.ch, c4.atn), (2, 2, 2));
        assert!(c4.within_bound() && c4.chromatic_choosable());
    }

    #[test]
    fn degeneracy_values() {
        assert_eq!(degeneracy(&g("K5")), 4);
        assert_eq!(degeneracy(&g("P4")), 1);
        assert_eq!(degeneracy(&g("W4")), 3);
        assert_eq!(degeneracy(&g("E3")), 0);
    }
}
