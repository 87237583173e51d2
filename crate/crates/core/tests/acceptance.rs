//! One test per acceptance criterion. Each prints a single PASS/FAIL line.

use atn_core::efl::{build_graph, generate_all, EflConfig};
use atn_core::graph::{canonical_form, line_graph, named, total_graph, Graph};
use atn_core::orient::atn_from_orientations;
use atn_core::poly::{atn_from_polynomial, coefficient_of};
use atn_core::verify::{
    run_campaign, Campaign, CampaignConfig, InstanceReport, RunOptions, Status,
};
use atn_core::Limits;
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

fn campaign(c: Campaign) -> Vec<InstanceReport> {
    run_campaign(c, &CampaignConfig::default(), &RunOptions::default()).expect("campaign runs")
}

fn all_claims(reports: &[InstanceReport], claim: &str) -> bool {
    reports
        .iter()
        .all(|r| r.status_of(claim) == Some(Status::Pass))
}

fn no_failures(reports: &[InstanceReport]) -> bool {
    reports.iter().all(|r| !r.failed())
}

fn verdict(id: u32, name: &str, ok: bool, start: Instant, budget: Duration, detail: String) {
    let elapsed = start.elapsed();
    let ok = ok && elapsed <= budget;
    println!(
        "criterion {id:>2} {name}: {} ({detail}; {:.2}s of {}s)",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        budget.as_secs()
    );
    assert!(ok, "criterion {id} failed: {detail}");
}

#[test]
fn criterion_01_duality() {
    let start = Instant::now();
    let reports = campaign(Campaign::Duality);
    let orientations: u64 = reports
        .iter()
        .map(|r| r.values["orientations"].as_u64().unwrap())
        .sum();
    // Graphs without isolated vertices having 0..=8 edges.
    let expected_graphs = 1 + 1 + 2 + 5 + 11 + 26 + 68 + 177 + 497;
    let ok = reports.len() == expected_graphs
        && all_claims(&reports, "duality")
        && all_claims(&reports, "reversal_symmetry");
    verdict(
        1,
        "coefficient equals Eulerian census difference",
        ok,
        start,
        Duration::from_secs(120),
        format!("{} graphs, {orientations} orientations", reports.len()),
    );
}

#[test]
fn criterion_02_engine_agreement() {
    let start = Instant::now();
    let reports = campaign(Campaign::Agreement);
    let ok = reports.len() == 1 + 1 + 2 + 6 + 21
        && all_claims(&reports, "engines_agree")
        && all_claims(&reports, "certificates_verify");
    verdict(
        2,
        "polynomial and orientation engines agree",
        ok,
        start,
        Duration::from_secs(300),
        format!("{} connected graphs", reports.len()),
    );
}

#[test]
fn criterion_03_sandwich() {
    let start = Instant::now();
    let reports = campaign(Campaign::Sandwich);
    let small_skips = reports
        .iter()
        .filter(|r| {
            r.instance.starts_with("n=1 ")
                || r.instance.starts_with("n=2 ")
                || r.instance.starts_with("n=3 ")
                || r.instance.starts_with("n=4 ")
        })
        .filter(|r| r.claims.iter().any(|c| c.status == Status::Skip))
        .count();
    let skips = reports
        .iter()
        .filter(|r| r.claims.iter().any(|c| c.status == Status::Skip))
        .count();
    let judged = |claim: &str| {
        reports
            .iter()
            .all(|r| matches!(r.status_of(claim), Some(Status::Pass | Status::Skip)))
    };
    let ok = reports.len() == 1 + 2 + 4 + 11 + 34
        && small_skips == 0
        && judged("chi_le_ch")
        && judged("ch_le_atn")
        && all_claims(&reports, "chi_le_atn");
    verdict(
        3,
        "chi <= ch <= ATN",
        ok,
        start,
        Duration::from_secs(600),
        format!("{} graphs, {skips} skipped", reports.len()),
    );
}

#[test]
fn criterion_04_line_graph_of_k4() {
    let start = Instant::now();
    let reports = campaign(Campaign::Thm1);
    let k4 = reports
        .iter()
        .find(|r| r.instance == "K4")
        .expect("K4 in family");
    let l = line_graph(&named("K4").unwrap()).graph;
    let atn = atn_from_polynomial(&l, &Limits::default()).unwrap().atn;
    let ok = atn == 3
        && l.n() == 6
        && k4.status_of("factor_classes_independent") == Some(Status::Pass)
        && k4.status_of("factor_pairs_2_regular_bipartite") == Some(Status::Pass)
        && k4.status_of("atn_equals_delta") == Some(Status::Pass)
        && k4.status_of("statement_form_n_minus_1") == Some(Status::Pass)
        && no_failures(&reports);
    verdict(
        4,
        "ATN(L(K4)) = 3 with factor-pair structure",
        ok,
        start,
        Duration::from_secs(10),
        format!("ATN(L(K4)) = {atn}"),
    );
}

#[test]
fn criterion_05_line_graph_bound() {
    let start = Instant::now();
    let reports = campaign(Campaign::Thm2);
    let class1 = reports.iter().filter(|r| r.values["class"] == 1).count();
    let ok = reports.len() == 1 + 1 + 3 + 5 + 12 + 30
        && all_claims(&reports, "atn_le_delta_plus_1")
        && reports
            .iter()
            .filter(|r| r.values["class"] == 1)
            .all(|r| r.status_of("class1_atn_equals_delta") == Some(Status::Pass))
        && no_failures(&reports);
    verdict(
        5,
        "ATN(L(G)) <= Delta + 1, equality on class 1",
        ok,
        start,
        Duration::from_secs(600),
        format!("{} graphs, {class1} class 1", reports.len()),
    );
}

#[test]
fn criterion_06_embedding() {
    let start = Instant::now();
    let reports = campaign(Campaign::Embed);
    let findings = reports
        .iter()
        .flat_map(|r| &r.claims)
        .filter(|c| c.status == Status::Flag)
        .count();
    let class2: Vec<_> = reports.iter().filter(|r| r.values["class"] == 2).collect();
    let ok = reports.len() == 1 + 2 + 6 + 13
        && reports.iter().all(|r| r.status_of("completed").is_none())
        && class2.iter().all(|r| {
            r.status_of("augment_class1") == Some(Status::Pass)
                && r.status_of("augment_delta_plus_1") == Some(Status::Pass)
        })
        && reports.iter().all(|r| {
            r.status_of("host_regular")
                .or(r.status_of("augmented_host_regular"))
                == Some(Status::Pass)
        })
        && no_failures(&reports);
    verdict(
        6,
        "regular embedding and class 2 augmentation",
        ok,
        start,
        Duration::from_secs(300),
        format!(
            "{} graphs, {} class 2, {findings} findings",
            reports.len(),
            class2.len()
        ),
    );
}

#[test]
fn criterion_07_total_graph_bound() {
    let start = Instant::now();
    let reports = campaign(Campaign::Cor3);
    let tc4 = total_graph(&named("C4").unwrap()).0;
    let values: Vec<String> = reports
        .iter()
        .map(|r| format!("{}:{}", r.instance, r.values["atn_poly"]))
        .collect();
    let ok = reports.len() == 6
        && tc4.m() == 16
        && all_claims(&reports, "atn_le_delta_plus_3")
        && all_claims(&reports, "half_squares")
        && no_failures(&reports);
    verdict(
        7,
        "ATN(T(G)) <= Delta + 3",
        ok,
        start,
        Duration::from_secs(900),
        values.join(" "),
    );
}

/// Every family of k pairwise almost-disjoint k-subsets of a k^2 ground set,
/// deduplicated by the isomorphism class of the resulting graph.
fn recount_efl_graphs(k: usize) -> usize {
    let ground = k * k;
    let subsets: Vec<Vec<usize>> = (0u32..1 << ground)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..ground).filter(|&i| m >> i & 1 == 1).collect())
        .collect();
    let mut classes = BTreeSet::new();
    let mut pick = Vec::new();
    fn rec(
        subsets: &[Vec<usize>],
        from: usize,
        k: usize,
        pick: &mut Vec<usize>,
        out: &mut dyn FnMut(&[usize]),
    ) {
        if pick.len() == k {
            out(pick);
            return;
        }
        for i in from..subsets.len() {
            let ok = pick
                .iter()
                .all(|&j| subsets[i].iter().filter(|v| subsets[j].contains(v)).count() <= 1);
            if ok {
                pick.push(i);
                rec(subsets, i + 1, k, pick, out);
                pick.pop();
            }
        }
    }
    rec(&subsets, 0, k, &mut pick, &mut |chosen| {
        let used: BTreeSet<usize> = chosen.iter().flat_map(|&i| subsets[i].clone()).collect();
        let used: Vec<usize> = used.into_iter().collect();
        let mut edges = Vec::new();
        for &i in chosen {
            for a in 0..k {
                for b in a + 1..k {
                    let u = used.binary_search(&subsets[i][a]).unwrap();
                    let v = used.binary_search(&subsets[i][b]).unwrap();
                    edges.push((u.min(v), u.max(v)));
                }
            }
        }
        let g = Graph::new(used.len(), edges).unwrap();
        classes.insert(canonical_form(&g));
    });
    classes.len()
}

#[test]
fn criterion_08_efl_bound() {
    let start = Instant::now();
    let reports = campaign(Campaign::Thm4);
    let mut catalog_ok = true;
    for k in 1..=3 {
        let configs: Vec<EflConfig> = generate_all(k).unwrap();
        let graphs: BTreeSet<_> = configs
            .iter()
            .map(|c| canonical_form(&build_graph(c).unwrap()))
            .collect();
        catalog_ok &= graphs.len() == configs.len() && configs.len() == recount_efl_graphs(k);
    }
    let covered = reports
        .iter()
        .filter(|r| r.status_of("atn_le_k").is_some())
        .count();
    let ok = catalog_ok
        && reports.len() == 1 + 2 + 5
        && reports
            .iter()
            .all(|r| r.status_of("atn_le_k").is_none_or(|s| s == Status::Pass))
        && no_failures(&reports);
    verdict(
        8,
        "ATN <= k on EFL configurations meeting a hypothesis",
        ok,
        start,
        Duration::from_secs(900),
        format!(
            "{} configurations, {covered} under a hypothesis",
            reports.len()
        ),
    );
}

#[test]
fn criterion_09_vandermonde() {
    let start = Instant::now();
    let reports = campaign(Campaign::Vandermonde);
    let ok = reports.len() == 5
        && all_claims(&reports, "term_count_n_factorial")
        && all_claims(&reports, "coefficients_unit")
        && all_claims(&reports, "atn_equals_n");
    let terms: Vec<String> = reports
        .iter()
        .map(|r| r.values["terms"].to_string())
        .collect();
    verdict(
        9,
        "K_n expansion has n! unit monomials and ATN = n",
        ok,
        start,
        Duration::from_secs(10),
        format!("terms {}", terms.join(",")),
    );
}

#[test]
fn criterion_10_evaluation() {
    let start = Instant::now();
    let reports = campaign(Campaign::Eval);
    let cfg = CampaignConfig::default();
    let points: u64 = reports
        .iter()
        .map(|r| r.values["points"].as_u64().unwrap())
        .sum();
    let ok = !reports.is_empty()
        && cfg.eval.points == 100
        && reports.iter().all(|r| r.values["points"] == 100)
        && all_claims(&reports, "evaluation_matches")
        && no_failures(&reports);
    verdict(
        10,
        "random-point evaluation matches the edge product",
        ok,
        start,
        Duration::from_secs(30),
        format!("{} graphs, {points} evaluations", reports.len()),
    );
}

#[test]
fn named_small_values() {
    let limits = Limits::default();
    for (name, atn) in [("K3", 3), ("C4", 2), ("E5", 1), ("K4", 4), ("Petersen", 3)] {
        let g = named(name).unwrap();
        assert_eq!(atn_from_polynomial(&g, &limits).unwrap().atn, atn, "{name}");
        assert_eq!(
            atn_from_orientations(&g, &limits).unwrap().atn,
            atn,
            "{name}"
        );
    }
    // The cyclic orientation of C4 has census (2, 0); its outdegree vector is all ones.
    assert_eq!(
        coefficient_of(&named("C4").unwrap(), &[1, 1, 1, 1])
            .magnitude()
            .to_string(),
        "2"
    );
}
