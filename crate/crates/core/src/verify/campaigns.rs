use super::report::{InstanceReport, Status};
use crate::certificate::AtnCertificate;
use crate::coloring::{choice_number, chromatic_number};
use crate::efl::{decompose, generate_all, theorem4_certify, EflConfig};
use crate::error::{Error, Result};
use crate::exec::{map_ordered, Limits};
use crate::graph::{
    all_graphs_on, chromatic_index_class, class2_augment, connected_graphs_on,
    connected_graphs_up_to_edges, disjoint_double, graphs_up_to_edges, line_graph, named,
    one_factorization, regular_embed_class1, subdivision_graph, total_graph, EdgeClass, Graph,
    VertexRole,
};
use crate::orient::{atn_from_orientations, eulerian_census, Orientation};
use crate::poly::{atn_from_polynomial, coefficient_of, expand_full, graph_polynomial_factors};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use serde_json::{json, Value};
use std::str::FromStr;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Campaign {
    Thm1,
    Thm2,
    Embed,
    Cor3,
    Thm4,
    Duality,
    Sandwich,
    Agreement,
    Vandermonde,
    Eval,
}

impl Campaign {
    pub const ALL: [Campaign; 10] = [
        Campaign::Thm1,
        Campaign::Thm2,
        Campaign::Embed,
        Campaign::Cor3,
        Campaign::Thm4,
        Campaign::Duality,
        Campaign::Sandwich,
        Campaign::Agreement,
        Campaign::Vandermonde,
        Campaign::Eval,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Campaign::Thm1 => "thm1",
            Campaign::Thm2 => "thm2",
            Campaign::Embed => "embed",
            Campaign::Cor3 => "cor3",
            Campaign::Thm4 => "thm4",
            Campaign::Duality => "duality",
            Campaign::Sandwich => "sandwich",
            Campaign::Agreement => "agreement",
            Campaign::Vandermonde => "vandermonde",
            Campaign::Eval => "eval",
        }
    }
}

impl FromStr for Campaign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Campaign::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown campaign {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct GraphList {
    pub graphs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct EdgeBound {
    pub max_edges: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct VertexBound {
    pub max_vertices: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct EmbedFamily {
    pub max_vertices: usize,
    pub max_edges: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct Thm4Family {
    pub max_k: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct VandermondeFamily {
    pub max_n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct EvalFamily {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub graphs: Vec<String>,
    pub points: usize,
    pub value_range: i64,
}

/// Instance families, read from a TOML file. The default is versioned with
/// the crate in `campaigns/default.toml`.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct CampaignConfig {
    pub thm1: GraphList,
    pub thm2: EdgeBound,
    pub embed: EmbedFamily,
    pub cor3: GraphList,
    pub thm4: Thm4Family,
    pub duality: EdgeBound,
    pub sandwich: VertexBound,
    pub agreement: VertexBound,
    pub vandermonde: VandermondeFamily,
    pub eval: EvalFamily,
}

pub const DEFAULT_CAMPAIGNS: &str = include_str!("../../campaigns/default.toml");

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig::from_toml(DEFAULT_CAMPAIGNS).expect("bundled campaign file parses")
    }
}

impl CampaignConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Parse(format!("campaign file: {e}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    pub limits: Limits,
    /// Base seed for the random-point evaluation oracle.
    pub seed: u64,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            limits: Limits::default(),
            seed: 0x5eed,
        }
    }
}

/// Runs one campaign; reports come back in instance order.
pub fn run_campaign(
    campaign: Campaign,
    config: &CampaignConfig,
    opts: &RunOptions,
) -> Result<Vec<InstanceReport>> {
    let name = campaign.name();
    match campaign {
        Campaign::Thm1 => {
            let graphs = named_list(&config.thm1.graphs)?;
            Ok(run_graphs(name, &graphs, opts, thm1))
        }
        Campaign::Thm2 => {
            let graphs = described(connected_graphs_up_to_edges(config.thm2.max_edges));
            Ok(run_graphs(name, &graphs, opts, thm2))
        }
        Campaign::Embed => {
            let graphs: Vec<Graph> = (2..=config.embed.max_vertices)
                .flat_map(connected_graphs_on)
                .filter(|g| g.m() <= config.embed.max_edges)
                .collect();
            Ok(run_graphs(name, &described(graphs), opts, embed))
        }
        Campaign::Cor3 => {
            let graphs = named_list(&config.cor3.graphs)?;
            Ok(run_graphs(name, &graphs, opts, cor3))
        }
        Campaign::Thm4 => {
            let mut configs = Vec::new();
            for k in 1..=config.thm4.max_k {
                configs.extend(generate_all(k)?);
            }
            Ok(run_items(
                name,
                &configs,
                opts,
                |c| c.to_json().to_string(),
                thm4,
            ))
        }
        Campaign::Duality => {
            let graphs = described(graphs_up_to_edges(config.duality.max_edges));
            Ok(run_graphs(name, &graphs, opts, duality))
        }
        Campaign::Sandwich => {
            let graphs = described(
                (1..=config.sandwich.max_vertices)
                    .flat_map(all_graphs_on)
                    .collect(),
            );
            Ok(run_graphs(name, &graphs, opts, sandwich))
        }
        Campaign::Agreement => {
            let graphs = described(
                (1..=config.agreement.max_vertices)
                    .flat_map(connected_graphs_on)
                    .collect(),
            );
            Ok(run_graphs(name, &graphs, opts, agreement))
        }
        Campaign::Vandermonde => {
            let graphs = named_list(
                &(1..=config.vandermonde.max_n)
                    .map(|n| format!("K{n}"))
                    .collect::<Vec<_>>(),
            )?;
            Ok(run_graphs(name, &graphs, opts, vandermonde))
        }
        Campaign::Eval => {
            let fam = &config.eval;
            let mut graphs = described(
                (1..=fam.max_vertices)
                    .flat_map(connected_graphs_on)
                    .collect(),
            );
            graphs.extend(named_list(&fam.graphs)?);
            graphs.retain(|(_, g)| g.m() <= fam.max_edges);
            let fam = fam.clone();
            Ok(run_graphs(name, &graphs, opts, move |r, g, o| {
                eval(r, g, o, &fam)
            }))
        }
    }
}

fn named_list(names: &[String]) -> Result<Vec<(String, Graph)>> {
    names.iter().map(|s| Ok((s.clone(), named(s)?))).collect()
}

fn described(graphs: Vec<Graph>) -> Vec<(String, Graph)> {
    graphs.into_iter().map(|g| (describe(&g), g)).collect()
}

/// Compact instance descriptor: `n=4 m=3 [0-1 0-2 0-3]`.
pub fn describe(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} m={} [{}]", g.n(), g.m(), edges.join(" "))
}

fn run_graphs<F>(
    campaign: &'static str,
    graphs: &[(String, Graph)],
    opts: &RunOptions,
    check: F,
) -> Vec<InstanceReport>
where
    F: Fn(&mut InstanceReport, &Graph, &RunOptions) -> Result<()> + Sync + Send,
{
    run_items(
        campaign,
        graphs,
        opts,
        |(d, _)| d.clone(),
        |r, (_, g), o| check(r, g, o),
    )
}

fn run_items<T, D, F>(
    campaign: &'static str,
    items: &[T],
    opts: &RunOptions,
    describe: D,
    check: F,
) -> Vec<InstanceReport>
where
    T: Sync,
    D: Fn(&T) -> String + Sync + Send,
    F: Fn(&mut InstanceReport, &T, &RunOptions) -> Result<()> + Sync + Send,
{
    let indexed: Vec<(usize, &T)> = items.iter().enumerate().collect();
    map_ordered(opts.limits.exec, &indexed, |&(id, item)| {
        let start = Instant::now();
        let mut report = InstanceReport::new(campaign, id, describe(item));
        let mut inst_opts = *opts;
        inst_opts.seed = opts.seed.wrapping_add(id as u64);
        if let Err(e) = check(&mut report, item, &inst_opts) {
            let status = if e.is_guard() {
                Status::Skip
            } else {
                Status::Fail
            };
            report.claim_with("completed", status, e.to_string());
        }
        report.wall_ms = start.elapsed().as_secs_f64() * 1e3;
        report
    })
}

/// Both engines; a guard on the orientation side is a SKIP of the
/// cross-check, not of the instance.
struct AtnPair {
    poly: AtnCertificate,
    orient: Option<AtnCertificate>,
}

fn atn_both(r: &mut InstanceReport, g: &Graph, limits: &Limits, key: &str) -> Result<AtnPair> {
    let poly = atn_from_polynomial(g, limits)?;
    let orient = match atn_from_orientations(g, limits) {
        Ok(c) => Some(c),
        Err(e) if e.is_guard() => None,
        Err(e) => return Err(e),
    };
    r.value(&format!("{key}_poly"), poly.atn);
    r.certificates.insert(format!("{key}_poly"), poly.to_json());
    match &orient {
        Some(o) => {
            r.value(&format!("{key}_orient"), o.atn);
            r.certificates.insert(format!("{key}_orient"), o.to_json());
            r.claim("engines_agree", Status::from_bool(o.atn == poly.atn));
        }
        None => {
            r.value(&format!("{key}_orient"), Value::Null);
            r.claim_with(
                "engines_agree",
                Status::Skip,
                format!("orientation route guarded at m = {}", g.m()),
            );
        }
    }
    Ok(AtnPair { poly, orient })
}

fn thm1(r: &mut InstanceReport, g: &Graph, opts: &RunOptions) -> Result<()> {
    let limits = &opts.limits;
    let (n, delta) = (g.n(), g.max_degree());
    r.value("n", n);
    r.value("delta", delta);
    if !g.is_regular() || n % 4 != 0 {
        r.claim_with(
            "hypothesis",
            Status::Skip,
            "needs a regular graph of order divisible by 4".into(),
        );
        return Ok(());
    }
    let Some(f) = one_factorization(g, limits)? else {
        r.claim_with("hypothesis", Status::Skip, "not 1-factorizable".into());
        return Ok(());
    };
    r.claim("one_factorizable", Status::from_bool(f.verify(g)));
    let l = line_graph(g).graph;
    let classes: Vec<Vec<usize>> = f
        .factors
        .iter()
        .map(|factor| {
            factor
                .iter()
                .map(|&(u, v)| g.edge_index(u, v).expect("factor edge"))
                .collect()
        })
        .collect();
    let independent = classes
        .iter()
        .all(|c| c.len() == n / 2 && c.iter().all(|&a| c.iter().all(|&b| !l.has_edge(a, b))));
    r.claim("factor_classes_independent", Status::from_bool(independent));
    let mut pairs_ok = true;
    let mut monomials_ok = true;
    for i in 0..classes.len() {
        for j in i + 1..classes.len() {
            let union: Vec<usize> = classes[i].iter().chain(&classes[j]).copied().collect();
            let sub = l.induced_subgraph(&union);
            pairs_ok &= sub.is_regular() && sub.max_degree() == 2 && sub.is_bipartite();
            monomials_ok &= !coefficient_of(&sub, &vec![1; sub.n()]).is_zero();
        }
    }
    r.claim(
        "factor_pairs_2_regular_bipartite",
        Status::from_bool(pairs_ok),
    );
    r.claim(
        "factor_pair_monomial_nonzero",
        Status::from_bool(monomials_ok),
    );
    let atn = atn_both(r, &l, limits, "atn")?.poly.atn;
    r.claim("atn_equals_delta", Status::from_bool(atn == delta));
    if atn == n - 1 {
        r.claim("statement_form_n_minus_1", Status::Pass);
    } else {
        r.claim_with(
            "statement_form_n_minus_1",
            Status::Flag,
            format!("ATN(L(G)) = {atn} differs from n - 1 = {}", n - 1),
        );
    }
    Ok(())
}

fn thm2(r: &mut InstanceReport, g: &Graph, opts: &RunOptions) -> Result<()> {
    let limits = &opts.limits;
    let delta = g.max_degree();
    let ci = chromatic_index_class(g, limits)?;
    r.value("delta", delta);
    r.value("class", if ci.class == EdgeClass::Class1 { 1 } else { 2 });
    let l = line_graph(g).graph;
    let atn = atn_both(r, &l, limits, "atn")?.poly.atn;
    r.claim("atn_le_delta_plus_1", Status::from_bool(atn <= delta + 1));
    if ci.class == EdgeClass::Class1 {
        r.claim("class1_atn_equals_delta", Status::from_bool(atn == delta));
    }
    Ok(())
}

fn embed(r: &mut InstanceReport, g: &Graph, opts: &RunOptions) -> Result<()> {
    let limits = &opts.limits;
    let delta = g.max_degree();
    let ci = chromatic_index_class(g, limits)?;
    r.value("delta", delta);
    r.value("class", if ci.class == EdgeClass::Class1 { 1 } else { 2 });
    if ci.class == EdgeClass::Class1 {
        return embed_host(r, g, limits, false);
    }
    let (g2, at) = class2_augment(g, limits)?;
    let ci2 = chromatic_index_class(&g2, limits)?;
    r.value("attachment_vertex", at);
    r.claim(
        "augment_class1",
        Status::from_bool(ci2.class == EdgeClass::Class1),
    );
    r.claim(
        "augment_delta_plus_1",
        Status::from_bool(g2.max_degree() == delta + 1 && ci2.chromatic_index == delta + 1),
    );
    embed_host(r, &g2, limits, true)
}

fn embed_host(r: &mut InstanceReport, g: &Graph, limits: &Limits, augmented: bool) -> Result<()> {
    let e = regular_embed_class1(g, limits)?;
    let host = &e.host;
    let prefix = if augmented { "augmented_" } else { "" };
    r.value(&format!("{prefix}host_order"), host.n());
    r.value(&format!("{prefix}copies"), e.copies);
    let regular = host.is_regular() && host.max_degree() == g.max_degree();
    let contains = host.induced_subgraph(&e.map) == *g;
    let (reg_name, contains_name, fact_name) = if augmented {
        (
            "augmented_host_regular",
            "augmented_host_contains_graph",
            "augmented_host_one_factorizable",
        )
    } else {
        (
            "host_regular",
            "host_contains_graph",
            "host_one_factorizable",
        )
    };
    r.claim(reg_name, Status::from_bool(regular));
    r.claim(contains_name, Status::from_bool(contains));
    match one_factorization(host, limits) {
        Ok(Some(f)) => r.claim(fact_name, Status::from_bool(f.verify(host))),
        Ok(None) => r.claim_with(
            fact_name,
            Status::Flag,
            "embedded host is not 1-factorizable".into(),
        ),
        Err(err) if err.is_guard() => r.claim_with(fact_name, Status::Skip, err.to_string()),
        Err(err) => return Err(err),
    }
    if host.n() % 4 != 0 {
        let doubled = disjoint_double(host);
        r.value(&format!("{prefix}doubled_order"), doubled.n());
    }
    Ok(())
}

fn cor3(r: &mut InstanceReport, g: &Graph, opts: &RunOptions) -> Result<()> {
    let limits = &opts.limits;
    let delta = g.max_degree();
    let (t, roles) = total_graph(g);
    r.value("delta", delta);
    r.value("total_n", t.n());
    r.value("total_m", t.m());
    let originals: Vec<usize> = (0..t.n())
        .filter(|&v| matches!(roles[v], VertexRole::Original(_)))
        .collect();
    let edge_vertices: Vec<usize> = (0..t.n())
        .filter(|&v| matches!(roles[v], VertexRole::EdgeVertex(..)))
        .collect();
    let (s, _) = subdivision_graph(g);
    let cross: Vec<_> = t
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| originals.contains(&u) != originals.contains(&v))
        .collect();
    let halves = t.induced_subgraph(&originals) == *g
        && t.induced_subgraph(&edge_vertices) == line_graph(g).graph
        && cross == s.edges();
    r.claim("half_squares", Status::from_bool(halves));
    let deg_g = g.degrees();
    let deg_t = t.degrees();
    let degrees_ok = roles.iter().enumerate().all(|(v, role)| match *role {
        VertexRole::Original(x) => deg_t[v] == 2 * deg_g[x],
        VertexRole::EdgeVertex(a, b) => deg_t[v] == deg_g[a] + deg_g[b],
    });
    r.claim("degree_formulas", Status::from_bool(degrees_ok));
    let atn = atn_both(r, &t, limits, "atn")?.poly.atn;
    r.value("bound", delta + 3);
    r.claim("atn_le_delta_plus_3", Status::from_bool(atn <= delta + 3));
    Ok(())
}

fn thm4(r: &mut InstanceReport, cfg: &EflConfig, opts: &RunOptions) -> Result<()> {
    let rep = theorem4_certify(cfg, &opts.limits)?;
    let dec = decompose(cfg)?;
    let g = crate::efl::build_graph(cfg)?;
    r.value("k", cfg.k);
    r.value("atn_poly", rep.poly.atn);
    r.value("atn_orient", rep.orient.as_ref().map(|o| o.atn));
    r.value("caseA", rep.hypotheses.case_a);
    r.value("caseB", rep.hypotheses.case_b);
    r.certificates.insert("atn_poly".into(), rep.poly.to_json());
    r.claim(
        "decomposition_partitions",
        Status::from_bool(dec.partitions(&g)),
    );
    let complete = dec.d_components.iter().all(|c| {
        c.iter()
            .all(|&a| c.iter().all(|&b| a == b || g.has_edge(a, b)))
            && c.len() <= cfg.k
    });
    r.claim("remnants_complete", Status::from_bool(complete));
    if !dec.full_remnants.is_empty() {
        r.claim_with(
            "remnant_order_le_k_minus_1",
            Status::Flag,
            format!("{} remnant(s) of order k", dec.full_remnants.len()),
        );
    }
    r.claim(
        "engines_agree",
        match &rep.orient {
            Some(_) => Status::from_bool(rep.engines_agree()),
            None => Status::Skip,
        },
    );
    if rep.hypotheses.either() {
        r.claim("atn_le_k", Status::from_bool(rep.holds()));
    } else {
        r.claim(
            "atn_le_k_outside_hypotheses",
            if rep.holds() {
                Status::Pass
            } else {
                Status::Flag
            },
        );
    }
    Ok(())
}

fn duality(r: &mut InstanceReport, g: &Graph, opts: &RunOptions) -> Result<()> {
    let limits = &opts.limits;
    let m = g.m();
    if m > limits.max_census_edges {
        return Err(Error::SizeGuardExceeded {
            what: "census edges",
            limit: limits.max_census_edges,
            actual: m,
        });
    }
    let (mut mismatches, mut reversal_breaks, mut alon_tarsi) = (0usize, 0usize, 0usize);
    for mask in 0u64..1 << m {
        let bits: Vec<bool> = (0..m).map(|i| mask >> (m - 1 - i) & 1 == 1).collect();
        let d = Orientation::new(g.clone(), bits)?;
        let census = eulerian_census(&d, limits)?;
        let coeff = coefficient_of(g, &d.outdegrees());
        if coeff.magnitude() != BigInt::from(census.difference()).magnitude() {
            mismatches += 1;
        }
        let rev = eulerian_census(&d.reversed(), limits)?;
        if rev.difference().abs() != census.difference().abs() {
            reversal_breaks += 1;
        }
        alon_tarsi += census.is_alon_tarsi() as usize;
    }
    r.value("orientations", 1u64 << m);
    r.value("alon_tarsi_orientations", alon_tarsi);
    r.value("mismatches", mismatches);
    r.claim("duality", Status::from_bool(mismatches == 0));
    r.claim("reversal_symmetry", Status::from_bool(reversal_breaks == 0));
    Ok(())
}

fn sandwich(r: &mut InstanceReport, g: &Graph, opts: &RunOptions) -> Result<()> {
    let limits = &opts.limits;
    let chi = chromatic_number(g, limits)?;
    let atn = atn_from_polynomial(g, limits)?.atn;
    r.value("chi", chi);
    r.value("atn", atn);
    match choice_number(g, limits) {
        Ok(ch) => {
            r.value("ch", ch);
            r.claim("chi_le_ch", Status::from_bool(chi <= ch));
            r.claim("ch_le_atn", Status::from_bool(ch <= atn));
        }
        Err(e) if e.is_guard() => {
            r.value("ch", Value::Null);
            r.claim_with("chi_le_ch", Status::Skip, e.to_string());
            r.claim_with("ch_le_atn", Status::Skip, e.to_string());
        }
        Err(e) => return Err(e),
    }
    r.claim("chi_le_atn", Status::from_bool(chi <= atn));
    Ok(())
}

fn agreement(r: &mut InstanceReport, g: &Graph, opts: &RunOptions) -> Result<()> {
    let limits = &opts.limits;
    let pair = atn_both(r, g, limits, "atn")?;
    let mut ok = pair.poly.verify(g, limits)?;
    if let Some(o) = &pair.orient {
        ok &= o.verify(g, limits)?;
    }
    r.claim("certificates_verify", Status::from_bool(ok));
    Ok(())
}

fn vandermonde(r: &mut InstanceReport, g: &Graph, opts: &RunOptions) -> Result<()> {
    let n = g.n();
    let p = expand_full(&graph_polynomial_factors(g), n, &opts.limits)?;
    let factorial: usize = (1..=n).product();
    r.value("terms", p.len());
    r.claim(
        "term_count_n_factorial",
        Status::from_bool(p.len() == factorial),
    );
    let unit = p.terms().all(|(_, c)| c.magnitude().is_one());
    r.claim("coefficients_unit", Status::from_bool(unit));
    let perms = p.terms().all(|(e, _)| {
        let mut v = e.0.clone();
        v.sort_unstable();
        v.iter().enumerate().all(|(i, &x)| x as usize == i)
    });
    r.claim("exponents_are_permutations", Status::from_bool(perms));
    let atn = atn_from_polynomial(g, &opts.limits)?.atn;
    r.value("atn", atn);
    r.claim("atn_equals_n", Status::from_bool(atn == n.max(1)));
    Ok(())
}

fn eval(r: &mut InstanceReport, g: &Graph, opts: &RunOptions, fam: &EvalFamily) -> Result<()> {
    let n = g.n();
    let p = expand_full(&graph_polynomial_factors(g), n, &opts.limits)?;
    let m = g.m() as u32;
    r.value("terms", p.len());
    r.claim(
        "homogeneous",
        Status::from_bool(p.terms().all(|(e, _)| e.total_degree() == m)),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let span = fam.value_range;
    let direct = |point: &[BigInt]| -> BigInt {
        g.edges()
            .iter()
            .map(|&(u, v)| &point[u] - &point[v])
            .product()
    };
    let mut mismatches = 0;
    for _ in 0..fam.points {
        let point: Vec<BigInt> = (0..n)
            .map(|_| BigInt::from(rng.gen_range(-span..=span)))
            .collect();
        if p.evaluate(&point) != direct(&point) {
            mismatches += 1;
        }
    }
    r.value("points", fam.points);
    r.value("mismatches", mismatches);
    r.claim("evaluation_matches", Status::from_bool(mismatches == 0));
    if let Some(&(u, v)) = g.edges().first() {
        let mut point: Vec<BigInt> = (0..n)
            .map(|_| BigInt::from(rng.gen_range(-span..=span)))
            .collect();
        point[v] = point[u].clone();
        r.claim(
            "vanishes_on_edge_diagonal",
            Status::from_bool(p.evaluate(&point).is_zero()),
        );
    }
    r.value("seed", json!(opts.seed));
    Ok(())
}
