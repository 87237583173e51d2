//! Erdős–Faber–Lovász configurations: k cliques of order k, pairwise sharing
//! at most one vertex.

use crate::certificate::AtnCertificate;
use crate::error::{Error, Result};
use crate::exec::Limits;
use crate::graph::{Edge, Graph};
use crate::orient::atn_from_orientations;
use crate::poly::atn_from_polynomial;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::collections::BTreeSet;

/// Cliques are stored sorted, and the clique list is sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EflConfig {
    pub k: usize,
    pub cliques: Vec<Vec<usize>>,
}

impl EflConfig {
    /// Normalizes and validates.
    pub fn new(k: usize, cliques: Vec<Vec<usize>>) -> Result<Self> {
        let mut cliques: Vec<Vec<usize>> = cliques
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        cliques.sort();
        let cfg = EflConfig { k, cliques };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: EflConfig =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("EFL config: {e}")))?;
        EflConfig::new(raw.k, raw.cliques)
    }

    pub fn to_json(&self) -> Value {
        json!({"k": self.k, "cliques": self.cliques})
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.k == 0 {
            return bad("k must be at least 1".into());
        }
        if self.cliques.len() != self.k {
            return bad(format!(
                "expected {} cliques, got {}",
                self.k,
                self.cliques.len()
            ));
        }
        for c in &self.cliques {
            if c.len() != self.k {
                return bad(format!("clique {c:?} does not have order {}", self.k));
            }
            if c.windows(2).any(|w| w[0] == w[1]) {
                return bad(format!("clique {c:?} repeats a vertex"));
            }
        }
        for (i, a) in self.cliques.iter().enumerate() {
            for b in &self.cliques[i + 1..] {
                let shared = a.iter().filter(|v| b.contains(v)).count();
                if shared > 1 {
                    return bad(format!("cliques {a:?} and {b:?} share {shared} vertices"));
                }
            }
        }
        let n = self.n();
        let mut covered = vec![false; n];
        self.cliques
            .iter()
            .flatten()
            .for_each(|&v| covered[v] = true);
        if let Some(v) = covered.iter().position(|&c| !c) {
            return bad(format!("vertex {v} lies in no clique"));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.cliques.iter().flatten().max().map_or(0, |&v| v + 1)
    }

    /// Number of cliques containing each vertex.
    pub fn clique_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n()];
        self.cliques.iter().flatten().for_each(|&v| deg[v] += 1);
        deg
    }
}

/// Union of the cliques as edge sets.
pub fn build_graph(cfg: &EflConfig) -> Result<Graph> {
    cfg.validate()?;
    let edges = cfg.cliques.iter().flat_map(|c| {
        c.iter()
            .enumerate()
            .flat_map(move |(i, &u)| c[i + 1..].iter().map(move |&v| (u, v)))
    });
    Graph::new(cfg.n(), edges)
}

/// Contact vertices (clique degree ≥ 2) versus the clique remnants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EflDecomposition {
    pub contact: Vec<usize>,
    /// Induced on `contact`; vertex `i` is `contact[i]`.
    pub c_graph: Graph,
    pub remnant: Vec<usize>,
    /// Induced on `remnant`; vertex `i` is `remnant[i]`.
    pub d_graph: Graph,
    /// Components of D as original vertex sets, one per clique with a nonempty
    /// remnant, in clique order.
    pub d_components: Vec<Vec<usize>>,
    /// Indices into `d_components` of remnants of order k: cliques without any
    /// contact vertex, which exceed the k-1 bound on remnant order.
    pub full_remnants: Vec<usize>,
    pub c_edges: Vec<Edge>,
    pub d_edges: Vec<Edge>,
    pub connectors: Vec<Edge>,
}

impl EflDecomposition {
    /// Whether E(C), E(D) and the connectors partition `E(g)`.
    pub fn partitions(&self, g: &Graph) -> bool {
        let mut all: Vec<Edge> = self
            .c_edges
            .iter()
            .chain(&self.d_edges)
            .chain(&self.connectors)
            .copied()
            .collect();
        all.sort_unstable();
        all == g.edges()
    }
}

pub fn decompose(cfg: &EflConfig) -> Result<EflDecomposition> {
    let g = build_graph(cfg)?;
    let deg = cfg.clique_degrees();
    let is_contact = |v: usize| deg[v] >= 2;
    let contact: Vec<usize> = (0..cfg.n()).filter(|&v| is_contact(v)).collect();
    let remnant: Vec<usize> = (0..cfg.n()).filter(|&v| !is_contact(v)).collect();
    let d_graph = g.induced_subgraph(&remnant);
    let mut d_components = Vec::new();
    let mut full_remnants = Vec::new();
    for c in &cfg.cliques {
        let part: Vec<usize> = c.iter().copied().filter(|&v| !is_contact(v)).collect();
        if part.is_empty() {
            continue;
        }
        if part.len() == cfg.k {
            full_remnants.push(d_components.len());
        }
        d_components.push(part);
    }
    let (mut c_edges, mut d_edges, mut connectors) = (Vec::new(), Vec::new(), Vec::new());
    for &(u, v) in g.edges() {
        match (is_contact(u), is_contact(v)) {
            (true, true) => c_edges.push((u, v)),
            (false, false) => d_edges.push((u, v)),
            _ => connectors.push((u, v)),
        }
    }
    let dec = EflDecomposition {
        c_graph: g.induced_subgraph(&contact),
        contact,
        remnant,
        d_graph,
        d_components,
        full_remnants,
        c_edges,
        d_edges,
        connectors,
    };
    debug_assert!(dec.partitions(&g));
    Ok(dec)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Hypotheses {
    /// Δ(C) ≤ k − 1.
    pub case_a: bool,
    /// Every clique degree is 1 or 2.
    pub case_b: bool,
}

impl Hypotheses {
    pub fn either(&self) -> bool {
        self.case_a || self.case_b
    }
}

pub fn hypothesis_check(cfg: &EflConfig) -> Result<Hypotheses> {
    let dec = decompose(cfg)?;
    Ok(Hypotheses {
        case_a: dec.c_graph.max_degree() < cfg.k,
        case_b: cfg.clique_degrees().iter().all(|&d| d == 1 || d == 2),
    })
}

/// Isomorphism-invariant key: over all orderings of the cliques, the least
/// sorted list of per-vertex membership masks. Vertices with equal masks are
/// interchangeable, so the key determines the configuration up to
/// relabeling.
fn membership_key(cliques: &[Vec<usize>], n: usize) -> Vec<u32> {
    let mut best: Option<Vec<u32>> = None;
    for perm in permutations(cliques.len()) {
        let mut masks = vec![0u32; n];
        for (j, c) in cliques.iter().enumerate() {
            for &v in c {
                masks[v] |= 1 << perm[j];
            }
        }
        masks.sort_unstable();
        if best.as_ref().is_none_or(|b| masks < *b) {
            best = Some(masks);
        }
    }
    best.unwrap_or_default()
}

fn from_key(key: &[u32], count: usize) -> Vec<Vec<usize>> {
    (0..count)
        .map(|j| (0..key.len()).filter(|&v| key[v] >> j & 1 == 1).collect())
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// All configurations for parameter `k ≤ 3` up to isomorphism, in canonical
/// key order.
///
/// Cliques are added one at a time; a new clique reuses a set of existing
/// vertices meeting each earlier clique at most once and fills up with fresh
/// vertices. Each level is reduced to canonical representatives.
pub fn generate_all(k: usize) -> Result<Vec<EflConfig>> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    if k > 3 {
        return Err(Error::guard("EFL generation k", 3, k));
    }
    let mut level: BTreeSet<Vec<u32>> = [vec![1u32; k]].into();
    for count in 1..k {
        let mut next = BTreeSet::new();
        for key in &level {
            let cliques = from_key(key, count);
            let n = key.len();
            for size in 0..=k.min(n) {
                for reuse in subsets(n, size) {
                    if cliques
                        .iter()
                        .any(|c| c.iter().filter(|v| reuse.contains(v)).count() > 1)
                    {
                        continue;
                    }
                    let mut grown = cliques.clone();
                    let mut clique = reuse;
                    clique.extend(n..n + k - size);
                    grown.push(clique);
                    next.insert(membership_key(&grown, n + k - size));
                }
            }
        }
        level = next;
    }
    level
        .iter()
        .map(|key| EflConfig::new(k, from_key(key, k)))
        .collect()
}

fn subsets(n: usize, j: usize) -> Vec<Vec<usize>> {
    if j == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for last in j - 1..n {
        for mut s in subsets(last, j - 1) {
            s.push(last);
            out.push(s);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem4Report {
    pub config: EflConfig,
    pub hypotheses: Hypotheses,
    pub poly: AtnCertificate,
    /// `None` when the orientation route exceeded its guard.
    pub orient: Option<AtnCertificate>,
    pub full_remnants: usize,
}

impl Theorem4Report {
    pub fn atn(&self) -> usize {
        self.poly.atn
    }

    pub fn engines_agree(&self) -> bool {
        self.orient.as_ref().is_none_or(|o| o.atn == self.poly.atn)
    }

    pub fn holds(&self) -> bool {
        self.atn() <= self.config.k
    }

    pub fn to_json(&self) -> Value {
        json!({
            "config": self.config.to_json(),
            "atn": self.atn(),
            "atnOrient": self.orient.as_ref().map(|o| o.atn),
            "caseA": self.hypotheses.case_a,
            "caseB": self.hypotheses.case_b,
            "holds": self.holds(),
            "fullRemnants": self.full_remnants,
            "certificate": self.poly.to_json(),
        })
    }
}

/// Computes the Alon-Tarsi number of the configuration's graph by both
/// engines and records which hypotheses hold.
pub fn theorem4_certify(cfg: &EflConfig, limits: &Limits) -> Result<Theorem4Report> {
    let g = build_graph(cfg)?;
    let poly = atn_from_polynomial(&g, limits)?;
    let orient = match atn_from_orientations(&g, limits) {
        Ok(c) => Some(c),
        Err(e) if e.is_guard() => None,
        Err(e) => return Err(e),
    };
    Ok(Theorem4Report {
        config: cfg.clone(),
        hypotheses: hypothesis_check(cfg)?,
        poly,
        orient,
        full_remnants: decompose(cfg)?.full_remnants.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical_form, named};

    fn cfg(k: usize, cliques: &[&[usize]]) -> EflConfig {
        EflConfig::new(k, cliques.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    fn triangle_of_triangles() -> EflConfig {
        cfg(3, &[&[0, 1, 3], &[1, 2, 4], &[0, 2, 5]])
    }

    fn sunflower() -> EflConfig {
        cfg(3, &[&[0, 1, 2], &[0, 3, 4], &[0, 5, 6]])
    }

    #[test]
    fn validation() {
        assert!(EflConfig::new(2, vec![vec![0, 1], vec![0, 1]]).is_err());
        assert!(EflConfig::new(2, vec![vec![0, 1]]).is_err());
        assert!(EflConfig::new(2, vec![vec![0, 1], vec![2, 2]]).is_err());
        assert!(EflConfig::new(2, vec![vec![0, 1], vec![1, 3]]).is_err());
        assert!(matches!(
            EflConfig::from_json(r#"{"k":3,"cliques":[[0,1,2],[0,1,3],[4,5,6]]}"#),
            Err(Error::InvalidConfig(_))
        ));
        assert!(matches!(EflConfig::from_json("{"), Err(Error::Parse(_))));
    }

    #[test]
    fn build_examples() {
        let g = build_graph(&cfg(2, &[&[0, 1], &[2, 3]])).unwrap();
        assert_eq!(
            canonical_form(&g),
            canonical_form(&named("K2").unwrap().disjoint_union(&named("K2").unwrap()))
        );
        let g = build_graph(&cfg(2, &[&[0, 1], &[1, 2]])).unwrap();
        assert_eq!(canonical_form(&g), canonical_form(&named("P3").unwrap()));
        let g = build_graph(&triangle_of_triangles()).unwrap();
        assert_eq!((g.n(), g.m()), (6, 9));
    }

    #[test]
    fn decompose_examples() {
        let disjoint = cfg(2, &[&[0, 1], &[2, 3]]);
        let d = decompose(&disjoint).unwrap();
        assert!(d.contact.is_empty() && d.connectors.is_empty());
        assert_eq!(d.d_components, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(d.full_remnants, vec![0, 1]);

        let t = decompose(&triangle_of_triangles()).unwrap();
        assert_eq!(t.contact, vec![0, 1, 2]);
        assert_eq!(
            canonical_form(&t.c_graph),
            canonical_form(&named("K3").unwrap())
        );
        assert_eq!(t.d_graph.m(), 0);
        assert_eq!(t.d_components.len(), 3);
        assert_eq!(t.connectors.len(), 6);
        assert!(t.full_remnants.is_empty());

        let s = decompose(&sunflower()).unwrap();
        assert_eq!(s.contact, vec![0]);
        assert_eq!(s.d_components, vec![vec![1, 2], vec![3, 4], vec![5, 6]]);
        assert_eq!(s.d_graph.m(), 3);
        assert!(s.partitions(&build_graph(&sunflower()).unwrap()));
    }

    #[test]
    fn hypothesis_examples() {
        let s = hypothesis_check(&sunflower()).unwrap();
        assert_eq!((s.case_a, s.case_b), (true, false));
        let t = hypothesis_check(&triangle_of_triangles()).unwrap();
        assert_eq!((t.case_a, t.case_b), (true, true));
        let d = hypothesis_check(&cfg(3, &[&[0, 1, 2], &[3, 4, 5], &[6, 7, 8]])).unwrap();
        assert_eq!((d.case_a, d.case_b), (true, true));
    }

    #[test]
    fn generation_small() {
        let one = generate_all(1).unwrap();
        assert_eq!(one, vec![cfg(1, &[&[0]])]);
        let two = generate_all(2).unwrap();
        assert_eq!(two.len(), 2);
        assert!(generate_all(4).unwrap_err().is_guard());
        assert!(generate_all(0).is_err());
    }

    #[test]
    fn certify_examples() {
        let lim = Limits::default();
        let p3 = theorem4_certify(&cfg(2, &[&[0, 1], &[1, 2]]), &lim).unwrap();
        assert_eq!(p3.atn(), 2);
        assert!(p3.holds() && p3.engines_agree());
        let t = theorem4_certify(&triangle_of_triangles(), &lim).unwrap();
        assert!(t.holds() && t.engines_agree());
        let s = theorem4_certify(&sunflower(), &lim).unwrap();
        assert_eq!(s.atn(), 3);
        assert!(s.engines_agree());
    }
}
