//! One test per acceptance criterion. Each prints a single verdict line.
//!
//! Run with `cargo test -p hypertree-spectra --test acceptance -- --nocapture`
//! to see the lines.

mod common;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hypertree_spectra::hypergraph::{
    connected_subgraphs, good_ordering, Hypertree, DEFAULT_SUBGRAPH_CAP,
};
use hypertree_spectra::matching::{power_hypergraph, power_tree_matching};
use hypertree_spectra::oracle::{adjacency_charpoly_2graph, brute_matchings, macaulay_charpoly};
use hypertree_spectra::spectra::{
    charpoly_degree, charpoly_subgraph, check_divisibility, exponent_a, loose_path_crosscheck,
    nullity, ExponentParams,
};
use hypertree_spectra::toppling::{
    build_toppled_digraph, component_witness, critical_configurations, critical_scc_check,
    cycle_census, cycle_lengths_divisible, subgraph_config_census, subgraph_configurations,
    CensusLimits, SccDecomposition, ToppledDigraph, VertexOrder,
};
use hypertree_spectra::{
    charpoly_hypertree, matching_counts, matching_polynomial, FactoredPoly, Hypergraph, IntPoly,
};

use common::{all_hypertrees, five_edge, hyperstar, random_hypergraph, random_hypertree};

const EQ17: &str = "l^2192 * (l^11 - 5*l^8 + 5*l^5 - 2*l^2)^243 * (l^9 - 4*l^6 + 3*l^3 - 1)^162 * (l^9 - 4*l^6 + 2*l^3)^162 * (l^7 - 3*l^4 + l)^135 * (l^7 - 3*l^4)^27 * (l^5 - 2*l^2)^180 * (l^3 - 1)^483";

fn verdict(
    n: u32,
    failures: &[String],
    elapsed: Duration,
    budget: Duration,
    summary: &str,
) -> bool {
    let in_time = elapsed <= budget;
    let pass = failures.is_empty() && in_time;
    println!(
        "criterion {n}: {} ({summary}; {:.2?} of {:?})",
        if pass { "PASS" } else { "FAIL" },
        elapsed,
        budget
    );
    for f in failures.iter().take(10) {
        println!("    {f}");
    }
    if !in_time {
        println!("    over the time budget");
    }
    pass
}

fn tree(h: &Hypergraph) -> Hypertree {
    good_ordering(h, 0).unwrap()
}

#[test]
fn criterion_1_five_edge_golden() {
    let start = Instant::now();
    let t = tree(&five_edge());
    let report = charpoly_hypertree(&t, DEFAULT_SUBGRAPH_CAP).unwrap();
    let elapsed = start.elapsed();
    let mut failures = Vec::new();
    if report.factored.to_string() != EQ17 {
        failures.push(format!("factored form is {}", report.factored));
    }
    // (subgraphs, a_H, phi_H) for every connected subgraph
    let table: [(&[&str], u32, &str); 13] = [
        (
            &["{2}", "{3}", "{5}", "{6}", "{8}", "{9}", "{10}", "{11}"],
            256,
            "l",
        ),
        (&["{1}", "{4}"], 64, "l"),
        (&["{7}"], 16, "l"),
        (&["{e2}", "{e3}"], 192, "l^3 - 1"),
        (&["{e4}", "{e5}"], 48, "l^3 - 1"),
        (&["{e1}"], 3, "l^3 - 1"),
        (
            &["{e1, e2}", "{e1, e3}", "{e1, e4}", "{e1, e5}"],
            9,
            "l^5 - 2*l^2",
        ),
        (&["{e4, e5}"], 144, "l^5 - 2*l^2"),
        (
            &[
                "{e1, e2, e3}",
                "{e1, e2, e4}",
                "{e1, e2, e5}",
                "{e1, e3, e4}",
                "{e1, e3, e5}",
            ],
            27,
            "l^7 - 3*l^4 + l",
        ),
        (&["{e1, e4, e5}"], 27, "l^7 - 3*l^4"),
        (
            &["{e1, e2, e3, e4}", "{e1, e2, e3, e5}"],
            81,
            "l^9 - 4*l^6 + 3*l^3 - 1",
        ),
        (
            &["{e1, e2, e4, e5}", "{e1, e3, e4, e5}"],
            81,
            "l^9 - 4*l^6 + 2*l^3",
        ),
        (
            &["{e1, e2, e3, e4, e5}"],
            243,
            "l^11 - 5*l^8 + 5*l^5 - 2*l^2",
        ),
    ];
    let rows: BTreeMap<String, (String, String)> = report
        .per_subgraph
        .iter()
        .map(|term| {
            (
                term.handle.label(t.graph()),
                (term.exponent.to_string(), term.base.to_string()),
            )
        })
        .collect();
    let mut expected = 0;
    for (names, a, phi) in table {
        for name in names {
            expected += 1;
            match rows.get(*name) {
                Some((got_a, got_phi)) if *got_a == a.to_string() && got_phi == phi => {}
                other => failures.push(format!("row {name}: expected ({a}, {phi}), got {other:?}")),
            }
        }
    }
    if rows.len() != expected {
        failures.push(format!("{} rows, table has {expected}", rows.len()));
    }
    let ok = verdict(
        1,
        &failures,
        elapsed,
        Duration::from_secs(1),
        &format!("factored string and {expected} table rows"),
    );
    assert!(ok);
}

#[test]
fn criterion_2_degree_identity() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut failures = Vec::new();
    let mut done = 0;
    let mut skipped = 0;
    let max_m = |r: usize| 30 / (r - 1);
    while done < 200 {
        let r = [2, 3, 4, 5][done % 4];
        let m = rng.gen_range(1..=max_m(r));
        let h = random_hypertree(r, m, &mut rng);
        let t = tree(&h);
        let report = match charpoly_hypertree(&t, 200_000) {
            Ok(rep) => rep,
            Err(_) => {
                skipped += 1;
                continue;
            }
        };
        let sum: BigUint = report
            .per_subgraph
            .iter()
            .map(|term| &term.exponent.0 * BigUint::from(term.handle.order()))
            .sum();
        let want = charpoly_degree(r, h.n());
        if sum != want || report.factored.degree() != want {
            failures.push(format!("r={r} n={}: sum {sum}, expected {want}", h.n()));
        }
        done += 1;
    }
    let five = charpoly_hypertree(&tree(&five_edge()), DEFAULT_SUBGRAPH_CAP).unwrap();
    let five_sum: BigUint = five
        .per_subgraph
        .iter()
        .map(|term| &term.exponent.0 * BigUint::from(term.handle.order()))
        .sum();
    if five_sum != BigUint::from(11264u32) {
        failures.push(format!("the five-edge tree sum is {five_sum}"));
    }
    let ok = verdict(
        2,
        &failures,
        start.elapsed(),
        Duration::from_secs(30),
        &format!("200 random hypertrees, {skipped} over the enumeration cap resampled; the five-edge tree sum {five_sum}"),
    );
    assert!(ok);
}

#[test]
fn criterion_3_oracle_equivalence() {
    let start = Instant::now();
    let cases = [
        (
            "single 3-edge",
            Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap(),
        ),
        (
            "two-edge 3-path",
            Hypergraph::new(3, 5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap(),
        ),
        (
            "single 4-edge",
            Hypergraph::new(4, 4, vec![vec![0, 1, 2, 3]]).unwrap(),
        ),
    ];
    let mut failures = Vec::new();
    let mut sizes = Vec::new();
    for (name, h) in cases {
        let theorem = charpoly_hypertree(&tree(&h), DEFAULT_SUBGRAPH_CAP).unwrap();
        let expanded = theorem.factored.expand(&BigUint::from(1000u32)).unwrap();
        let oracle = macaulay_charpoly(&h, 300).unwrap();
        sizes.push(format!("{name} degree {}", oracle.degree().unwrap()));
        if expanded != oracle {
            failures.push(format!("{name}: theorem {expanded} vs resultant {oracle}"));
        }
    }
    let ok = verdict(
        3,
        &failures,
        start.elapsed(),
        Duration::from_secs(600),
        &sizes.join(", "),
    );
    assert!(ok);
}

#[test]
fn criterion_4_graph_collapse() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut failures = Vec::new();
    for _ in 0..100 {
        let m = rng.gen_range(1..=11);
        let g = random_hypertree(2, m, &mut rng);
        let report = charpoly_hypertree(&tree(&g), DEFAULT_SUBGRAPH_CAP).unwrap();
        let adj = adjacency_charpoly_2graph(&g).unwrap();
        let single = report.factored.factors().len() == 1
            && report.factored.factors()[0].1 == 1u64.into()
            && report.factored.factors()[0].0 == matching_polynomial(&g);
        if !single || report.factored != FactoredPoly::power(adj, 1u64).unwrap() {
            failures.push(format!(
                "{} gives {}",
                g.to_string().replace('\n', "; "),
                report.factored
            ));
        }
    }
    let ok = verdict(
        4,
        &failures,
        start.elapsed(),
        Duration::from_secs(5),
        "100 random trees with n <= 12",
    );
    assert!(ok);
}

#[test]
fn criterion_5_divisibility() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let five = tree(&five_edge());
    let seven = five.graph().vertex_by_label("7").unwrap();
    let keep: Vec<usize> = (0..11).filter(|&v| v != seven).collect();
    let sub = charpoly_subgraph(&five, &keep, DEFAULT_SUBGRAPH_CAP).unwrap();
    if sub.to_string() != "l^2816 * (l^3 - 1)^768" {
        failures.push(format!("the five-edge tree minus 7 gives {sub}"));
    }
    let v = check_divisibility(&five, &keep, DEFAULT_SUBGRAPH_CAP).unwrap();
    if v.charpoly_divides || !v.matching_divides {
        failures.push(format!("the five-edge tree minus 7: {v:?}"));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        let m = rng.gen_range(1..=4);
        let t = tree(&random_hypertree(4, m, &mut rng));
        let keep: Vec<usize> = (0..t.n()).filter(|_| rng.gen_bool(0.6)).collect();
        let v = check_divisibility(&t, &keep, DEFAULT_SUBGRAPH_CAP).unwrap();
        if !v.charpoly_divides || !v.matching_divides {
            failures.push(format!("r=4 {:?} keep {keep:?}: {v:?}", t.graph().edges()));
        }
    }
    for _ in 0..50 {
        let m = rng.gen_range(1..=6);
        let t = tree(&random_hypertree(3, m, &mut rng));
        let subs = connected_subgraphs(t.graph(), DEFAULT_SUBGRAPH_CAP).unwrap();
        let h = subs.choose(&mut rng).unwrap();
        let v = check_divisibility(&t, &h.vertices, DEFAULT_SUBGRAPH_CAP).unwrap();
        if !v.charpoly_divides || !v.matching_divides || !v.subgraph_connected {
            failures.push(format!(
                "r=3 {:?} keep {:?}: {v:?}",
                t.graph().edges(),
                h.vertices
            ));
        }
    }
    let ok = verdict(
        5,
        &failures,
        start.elapsed(),
        Duration::from_secs(60),
        "the five-edge tree minus 7, 50 r=4 vertex deletions, 50 r=3 connected subgraphs",
    );
    assert!(ok);
}

// Digraphs of one tree under the good ordering at each root.
struct Rooted {
    t: Hypertree,
    d: ToppledDigraph,
    scc: SccDecomposition,
}

fn check_tree(h: &Hypergraph, rng: &mut ChaCha8Rng, failures: &mut Vec<String>) -> usize {
    let r = h.r();
    let name = format!("r={r} {:?}", h.edges());
    let limits = CensusLimits::default();
    let rooted: HashMap<usize, Rooted> = (0..h.n())
        .map(|root| {
            let t = good_ordering(h, root).unwrap();
            let d = build_toppled_digraph(h, &VertexOrder::good(&t), 200_000).unwrap();
            let scc = SccDecomposition::of(&d);
            (root, Rooted { t, d, scc })
        })
        .collect();
    let subs = connected_subgraphs(h, DEFAULT_SUBGRAPH_CAP).unwrap();
    let params = ExponentParams::new(r, h.m());
    let mut checked = 0;
    for root in 0..h.n() {
        let Rooted { t, d, scc } = &rooted[&root];
        let census = cycle_census(d, scc, limits);
        if census.partial
            || census.lengths.keys().any(|&l| l != r)
            || census.single_edge_cycles != census.total()
        {
            failures.push(format!(
                "{name} root {root}: cycle lengths {:?}",
                census.lengths
            ));
        }
        let critical = critical_configurations(t, 200_000).unwrap();
        let want = r.pow(((r - 2) * h.m()) as u32);
        if critical.len() != want {
            failures.push(format!(
                "{name} root {root}: {} critical, expected {want}",
                critical.len()
            ));
        }
        for cfg in &critical {
            let w = critical_scc_check(t, d, scc, cfg).unwrap();
            if !w.component.is_representative() || !w.charpoly_is_matching {
                failures.push(format!(
                    "{name} root {root} {cfg:?}: {:?}",
                    w.component.problem
                ));
            }
        }
        for sub in &subs {
            let count = subgraph_config_census(t, sub).unwrap().count;
            let a = exponent_a(&params, sub).unwrap();
            if count != a {
                failures.push(format!(
                    "{name} root {root} H={:?}: census {count}, a_H {a}",
                    sub.edges
                ));
            }
            let (tu, cfgs) = subgraph_configurations(t, sub, 200_000).unwrap();
            let host = &rooted[&tu.root()];
            for cfg in &cfgs {
                let node = host.d.index_of(cfg).unwrap();
                let w = component_witness(&host.d, &host.scc, node, &sub.vertices, &sub.edges);
                if !w.is_representative() {
                    failures.push(format!("{name} H={:?} {cfg:?}: {:?}", sub.edges, w.problem));
                }
            }
        }
        checked += 1;
    }
    // arbitrary orderings
    for _ in 0..2 {
        let mut priority: Vec<usize> = (0..h.n()).collect();
        priority.shuffle(rng);
        let order = VertexOrder::from_priority(priority.clone()).unwrap();
        let d = build_toppled_digraph(h, &order, 200_000).unwrap();
        let scc = SccDecomposition::of(&d);
        if !cycle_lengths_divisible(&d.adjacency(), &scc, r) {
            failures.push(format!(
                "{name} ordering {priority:?}: a cycle length is not a multiple of r"
            ));
        }
    }
    checked
}

#[test]
fn criterion_6_toppling_structure() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut failures = Vec::new();
    let mut families = Vec::new();
    let mut rooted = 0;
    for (r, max_m) in [(2, 8), (3, 4), (4, 2), (5, 1), (6, 1)] {
        let mut trees = 0;
        for m in 1..=max_m {
            for h in all_hypertrees(r, m) {
                rooted += check_tree(&h, &mut rng, &mut failures);
                trees += 1;
            }
        }
        families.push(format!("r={r}: {trees} trees"));
    }
    let star = hyperstar();
    let priority: Vec<usize> = (1..=9)
        .map(|l| star.vertex_by_label(&l.to_string()).unwrap())
        .collect();
    let d = build_toppled_digraph(
        &star,
        &VertexOrder::from_priority(priority).unwrap(),
        200_000,
    )
    .unwrap();
    let scc = SccDecomposition::of(&d);
    let census = cycle_census(
        &d,
        &scc,
        CensusLimits {
            max_len: 15,
            max_cycles: 1_000_000,
        },
    );
    let lengths: BTreeSet<usize> = census.lengths.keys().copied().collect();
    if d.len() != 43758 || census.partial || lengths != BTreeSet::from([3, 6, 9, 12]) {
        failures.push(format!(
            "hyperstar: {} configs, cycle lengths {:?}",
            d.len(),
            census.lengths
        ));
    }
    let ok = verdict(
        6,
        &failures,
        start.elapsed(),
        Duration::from_secs(300),
        &format!(
            "{}, {rooted} rooted good orderings; hyperstar cycle lengths {:?}",
            families.join(", "),
            lengths
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_7_nullity() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut failures = Vec::new();
    let mut done = 0;
    while done < 200 {
        let r = [2, 3, 4, 5][done % 4];
        let m = rng.gen_range(1..=30 / (r - 1));
        let t = tree(&random_hypertree(r, m, &mut rng));
        let Ok(report) = charpoly_hypertree(&t, 200_000) else {
            continue;
        };
        let sum = nullity(&report);
        if sum != report.factored.valuation() {
            failures.push(format!(
                "r={r} {:?}: sum {sum}, valuation {}",
                t.graph().edges(),
                report.factored.valuation()
            ));
        }
        done += 1;
    }
    let five = charpoly_hypertree(&tree(&five_edge()), DEFAULT_SUBGRAPH_CAP).unwrap();
    let five_sum = nullity(&five);
    let five_val = five.factored.valuation();
    let bare = five.factored.exponent_of(&IntPoly::x());
    // The stated value 2192 is the exponent of the bare l factor only; the
    // subgraph sum and the true multiplicity of 0 are both 3767.
    if five_sum != BigUint::from(2192u32) || five_val != BigUint::from(2192u32) {
        failures.push(format!(
            "the five-edge tree: subgraph sum {five_sum}, multiplicity of 0 is {five_val}, bare l exponent {bare}; 2192 not attained"
        ));
    }
    let ok = verdict(
        7,
        &failures,
        start.elapsed(),
        Duration::from_secs(60),
        "sum equals the multiplicity of 0 on 200 random hypertrees; the five-edge tree value checked against 2192",
    );
    // Only the five-edge tree claim is known to fail; every other part must hold.
    assert_eq!(five_sum, BigUint::from(3767u32));
    assert_eq!(five_val, five_sum);
    assert_eq!(bare, BigUint::from(2192u32));
    assert!(ok || failures.iter().all(|f| f.starts_with("the five-edge tree")));
}

/// The literal claim that the five-edge tree's nullity sum is 2192. It does not hold;
/// kept so `cargo test -- --ignored` shows the failure.
#[test]
#[ignore = "the five-edge tree subgraph sum is 3767, not 2192"]
fn criterion_7_five_edge_sum_is_2192() {
    let five = charpoly_hypertree(&tree(&five_edge()), DEFAULT_SUBGRAPH_CAP).unwrap();
    assert_eq!(nullity(&five), BigUint::from(2192u32));
}

#[test]
fn criterion_8_matching_engine() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut failures = Vec::new();
    for _ in 0..100 {
        let r = rng.gen_range(2..=4);
        let n = rng.gen_range(r + 1..=12);
        let max_edges = (1..=r).fold(1usize, |acc, k| acc * (n + 1 - k) / k).min(8);
        let m = rng.gen_range(0..=max_edges);
        let h = random_hypergraph(r, n, m, &mut rng);
        if matching_counts(&h) != brute_matchings(&h, 24).unwrap() {
            failures.push(format!(
                "recursion differs from brute force on {:?}",
                h.edges()
            ));
        }
    }
    let mut powers = 0;
    for m in 0..=9 {
        for g in all_hypertrees(2, m) {
            for r in 3..=5 {
                let direct = matching_polynomial(&power_hypergraph(&g, r).unwrap());
                if power_tree_matching(&g, r).unwrap() != direct {
                    failures.push(format!("power {r} of {:?}", g.edges()));
                }
                powers += 1;
            }
        }
    }
    for r in [3, 4] {
        for m in 1..=5 {
            let cmp = loose_path_crosscheck(m, r, DEFAULT_SUBGRAPH_CAP).unwrap();
            if !cmp.rows.iter().all(|row| row.agree) {
                failures.push(format!("loose path m={m} r={r}: {:?}", cmp.rows));
            }
        }
    }
    let ok = verdict(
        8,
        &failures,
        start.elapsed(),
        Duration::from_secs(60),
        &format!("100 brute-force comparisons, {powers} tree powers, loose paths m <= 5"),
    );
    assert!(ok);
}
