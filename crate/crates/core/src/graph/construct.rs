use super::{chromatic_index_class, EdgeClass, Graph};
use crate::error::{Error, Result};
use crate::exec::Limits;

/// Provenance of a vertex in a subdivision or total graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexRole {
    Original(usize),
    EdgeVertex(usize, usize),
}

pub type VertexRoleMap = Vec<VertexRole>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineGraph {
    pub graph: Graph,
    /// `edge_to_vertex[i]` is the vertex of L(G) standing for edge `i` of G.
    pub edge_to_vertex: Vec<usize>,
}

/// Line graph; vertex `i` corresponds to the `i`-th edge in canonical order.
pub fn line_graph(g: &Graph) -> LineGraph {
    let mut incident = vec![Vec::new(); g.n()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    let mut edges = Vec::new();
    for list in &incident {
        for (a, &i) in list.iter().enumerate() {
            for &j in &list[a + 1..] {
                edges.push((i, j));
            }
        }
    }
    // Two distinct simple edges share at most one endpoint, so no duplicates.
    let labels = g.edges().iter().map(|(u, v)| format!("e{u}_{v}")).collect();
    LineGraph {
        graph: Graph::new(g.m(), edges)
            .expect("line graph is simple")
            .with_labels(labels),
        edge_to_vertex: (0..g.m()).collect(),
    }
}

fn subdivision_roles(g: &Graph) -> VertexRoleMap {
    (0..g.n())
        .map(VertexRole::Original)
        .chain(g.edges().iter().map(|&(u, v)| VertexRole::EdgeVertex(u, v)))
        .collect()
}

fn role_labels(roles: &[VertexRole]) -> Vec<String> {
    roles
        .iter()
        .map(|r| match r {
            VertexRole::Original(v) => format!("v{v}"),
            VertexRole::EdgeVertex(u, v) => format!("e{u}_{v}"),
        })
        .collect()
}

/// S(G): originals keep ids `0..n`, the vertex for edge `i` is `n + i`.
pub fn subdivision_graph(g: &Graph) -> (Graph, VertexRoleMap) {
    let n = g.n();
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .flat_map(|(i, &(u, v))| [(u, n + i), (v, n + i)]);
    let roles = subdivision_roles(g);
    let graph = Graph::new(n + g.m(), edges)
        .expect("subdivision is simple")
        .with_labels(role_labels(&roles));
    (graph, roles)
}

/// T(G) as the square of S(G), with the same vertex numbering as S(G).
pub fn total_graph(g: &Graph) -> (Graph, VertexRoleMap) {
    let (s, roles) = subdivision_graph(g);
    let graph = s.square().with_labels(role_labels(&roles));
    (graph, roles)
}

/// Two disjoint copies; vertex `i` of the second copy is `n + i`.
pub fn disjoint_double(g: &Graph) -> Graph {
    g.disjoint_union(g)
}

/// The round-robin 1-factorization of K_c for even `c`: `c - 1` perfect
/// matchings, each a list of `c / 2` pairs.
pub fn round_robin_factors(c: usize) -> Vec<Vec<(usize, usize)>> {
    assert!(
        c >= 2 && c.is_multiple_of(2),
        "round robin needs an even count"
    );
    let r = c - 1;
    (0..r)
        .map(|round| {
            let mut pairs = vec![(round.min(r), round.max(r))];
            for k in 1..c / 2 {
                let a = (round + k) % r;
                let b = (round + r - k) % r;
                pairs.push((a.min(b), a.max(b)));
            }
            pairs.sort_unstable();
            pairs
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub host: Graph,
    pub copies: usize,
    /// Vertex of G to vertex of the host (copy 0).
    pub map: Vec<usize>,
}

/// Embeds a class-1 graph into a Δ-regular host made of an even number of
/// copies of G. A vertex with deficiency `d` receives the first `d` factors of
/// the round-robin factorization of the copy indices.
pub fn regular_embed_class1(g: &Graph, limits: &Limits) -> Result<Embedding> {
    let delta = g.max_degree();
    if delta == 0 {
        return Err(Error::Precondition(
            "regular embedding needs at least one edge".into(),
        ));
    }
    if let Some(&v) = g.isolated_vertices().first() {
        return Err(Error::Precondition(format!(
            "regular embedding rejects isolated vertex {v}"
        )));
    }
    if chromatic_index_class(g, limits)?.class != EdgeClass::Class1 {
        return Err(Error::Precondition(
            "regular embedding requires a class 1 graph".into(),
        ));
    }
    let n = g.n();
    let copies = if delta.is_multiple_of(2) {
        delta
    } else {
        delta + 1
    };
    let factors = round_robin_factors(copies);
    let mut edges = Vec::with_capacity(copies * g.m());
    for c in 0..copies {
        edges.extend(g.edges().iter().map(|&(u, v)| (c * n + u, c * n + v)));
    }
    for (v, &deg) in g.degrees().iter().enumerate() {
        for factor in &factors[..delta - deg] {
            edges.extend(factor.iter().map(|&(a, b)| (a * n + v, b * n + v)));
        }
    }
    let host = Graph::new(copies * n, edges)?;
    Ok(Embedding {
        host,
        copies,
        map: (0..n).collect(),
    })
}

/// Attaches a pendant vertex to the first maximum-degree vertex of a class-2
/// graph. Returns the new graph and the attachment vertex.
pub fn class2_augment(g: &Graph, limits: &Limits) -> Result<(Graph, usize)> {
    if chromatic_index_class(g, limits)?.class != EdgeClass::Class2 {
        return Err(Error::Precondition(
            "class 2 augmentation applies only to class 2 graphs".into(),
        ));
    }
    let deg = g.degrees();
    let delta = g.max_degree();
    let at = deg.iter().position(|&d| d == delta).expect("nonempty");
    let out = g.with_vertices(1).with_edges([(at, g.n())])?;
    Ok((out, at))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical_form, named};

    fn iso(a: &Graph, b: &Graph) -> bool {
        canonical_form(a) == canonical_form(b)
    }

    #[test]
    fn line_graph_examples() {
        let k3 = named("K3").unwrap();
        assert!(iso(&line_graph(&k3).graph, &k3));
        assert!(iso(
            &line_graph(&named("P3").unwrap()).graph,
            &named("K2").unwrap()
        ));
        let oct = line_graph(&named("K4").unwrap()).graph;
        assert_eq!((oct.n(), oct.m()), (6, 12));
        assert!(oct.is_regular() && oct.max_degree() == 4);
        assert!(iso(&oct, &named("K2,2,2").unwrap()));
        assert_eq!(line_graph(&Graph::empty(3)).graph.n(), 0);
    }

    #[test]
    fn subdivision_examples() {
        let (s, roles) = subdivision_graph(&named("K2").unwrap());
        assert!(iso(&s, &named("P3").unwrap()));
        assert_eq!(roles[2], VertexRole::EdgeVertex(0, 1));
        assert!(iso(
            &subdivision_graph(&named("C3").unwrap()).0,
            &named("C6").unwrap()
        ));
        let (s4, _) = subdivision_graph(&named("K4").unwrap());
        assert_eq!((s4.n(), s4.m()), (10, 12));
        assert!(s4.is_bipartite());
    }

    #[test]
    fn total_examples() {
        assert!(iso(
            &total_graph(&named("K2").unwrap()).0,
            &named("K3").unwrap()
        ));
        let (t3, _) = total_graph(&named("C3").unwrap());
        assert_eq!((t3.n(), t3.m()), (6, 12));
        assert!(t3.is_regular() && t3.max_degree() == 4);
        let (t4, _) = total_graph(&named("C4").unwrap());
        assert_eq!((t4.n(), t4.m()), (8, 16));
        assert!(t4.is_regular() && t4.max_degree() == 4);
    }

    #[test]
    fn double_examples() {
        let d = disjoint_double(&named("K2").unwrap());
        assert_eq!(d.edges(), &[(0, 1), (2, 3)]);
        let c = disjoint_double(&named("C3").unwrap());
        assert_eq!((c.n(), c.components().len()), (6, 2));
        let g6 = named("C6").unwrap();
        assert_eq!(disjoint_double(&g6).n() % 4, 0);
    }

    #[test]
    fn round_robin_is_factorization() {
        for c in [2, 4, 6, 8] {
            let f = round_robin_factors(c);
            assert_eq!(f.len(), c - 1);
            let mut all: Vec<_> = f.iter().flatten().copied().collect();
            for m in &f {
                let mut seen = vec![false; c];
                for &(a, b) in m {
                    assert!(!seen[a] && !seen[b]);
                    seen[a] = true;
                    seen[b] = true;
                }
            }
            all.sort_unstable();
            all.dedup();
            assert_eq!(all.len(), c * (c - 1) / 2);
        }
    }

    #[test]
    fn embed_examples() {
        let lim = Limits::default();
        let k4 = named("K4").unwrap();
        let e = regular_embed_class1(&k4, &lim).unwrap();
        assert_eq!(e.copies, 4);
        assert_eq!(e.host.m(), 4 * 6);

        let e = regular_embed_class1(&named("P3").unwrap(), &lim).unwrap();
        assert!(iso(&e.host, &named("C6").unwrap()));

        let e = regular_embed_class1(&named("K1,3").unwrap(), &lim).unwrap();
        assert_eq!((e.copies, e.host.n()), (4, 16));
        assert!(e.host.is_regular() && e.host.max_degree() == 3);
    }

    #[test]
    fn embed_rejections() {
        let lim = Limits::default();
        assert!(regular_embed_class1(&named("C5").unwrap(), &lim).is_err());
        let iso_v = Graph::new(3, [(0, 1)]).unwrap();
        assert!(matches!(
            regular_embed_class1(&iso_v, &lim),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn augment_examples() {
        let lim = Limits::default();
        for (name, m) in [("C3", 4), ("C5", 6), ("Petersen", 16)] {
            let g = named(name).unwrap();
            let (h, at) = class2_augment(&g, &lim).unwrap();
            assert_eq!(h.m(), m);
            assert_eq!(h.max_degree(), g.max_degree() + 1);
            assert_eq!(h.degrees()[at], g.max_degree() + 1);
            let c = chromatic_index_class(&h, &lim).unwrap();
            assert_eq!(c.class, EdgeClass::Class1, "{name}");
            assert_eq!(c.chromatic_index, g.max_degree() + 1);
        }
        assert!(class2_augment(&named("K4").unwrap(), &lim).is_err());
    }
}
