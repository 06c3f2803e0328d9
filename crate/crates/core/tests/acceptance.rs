//! The acceptance suite. Each test prints one `PASS`/`FAIL` line and then
//! asserts it, so `cargo test --test acceptance -- --test-threads 1` gives a
//! readable table.

use std::io::Write;
use std::process::Command;

use corona_invariants::graph::{cycle, path};
use corona_invariants::harness::{
    census_graphs, run_corpus, CensusKind, CorpusSpec, Plan, RunConfig, TheoremId, Verdict,
    VerificationReport,
};
use corona_invariants::{
    geodetic_number, geodetic_number_unpruned, interval, oracle_steiner_trees, steiner_hull,
    Graph, SearchOptions, VertexSet,
};

fn line(id: u32, name: &str, ok: bool, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    let mut out = std::io::stdout().lock();
    writeln!(out, "acceptance {id:>2} {verdict} {name}: {detail}").unwrap();
}

fn connected(orders: std::ops::RangeInclusive<usize>) -> Vec<Graph> {
    orders
        .flat_map(|n| census_graphs(CensusKind::Connected, n).unwrap())
        .collect()
}

fn run(theorem: TheoremId, plan: Plan) -> Vec<VerificationReport> {
    let cfg = RunConfig {
        threads: 4,
        ..RunConfig::default()
    };
    run_corpus(theorem, &plan, &cfg).unwrap()
}

fn count(reports: &[VerificationReport], v: Verdict) -> usize {
    reports.iter().filter(|r| r.verdict == v).count()
}

fn tally(reports: &[VerificationReport]) -> String {
    let fails: Vec<&str> = reports
        .iter()
        .filter(|r| r.verdict == Verdict::FAIL)
        .map(|r| r.instance.g6.last().map(String::as_str).unwrap_or("?"))
        .collect();
    let mut s = format!(
        "{} pass, {} fail, {} skipped",
        count(reports, Verdict::PASS),
        count(reports, Verdict::FAIL),
        count(reports, Verdict::SKIPPED)
    );
    if !fails.is_empty() {
        s.push_str(&format!("; failing instances {fails:?}"));
    }
    s
}

fn formula(
    id: u32,
    name: &str,
    theorem: TheoremId,
    range: std::ops::RangeInclusive<usize>,
    key: &str,
    expected: impl Fn(usize) -> usize,
) {
    let reports = run(theorem, Plan::Orders(range.clone()));
    let mismatches: Vec<usize> = range
        .clone()
        .zip(&reports)
        .filter(|(n, r)| r.verdict != Verdict::PASS || r.value(key) != Some(expected(*n) as i64))
        .map(|(n, _)| n)
        .collect();
    let values: Vec<i64> = reports.iter().map(|r| r.value(key).unwrap_or(-1)).collect();
    let ok = mismatches.is_empty() && reports.len() == range.clone().count();
    line(id, name, ok, &format!("n={range:?} {key}={values:?} mismatches={mismatches:?}"));
    assert!(ok);
}

#[test]
fn a01_wheel_geodetic() {
    formula(1, "g(W_1,n) = ceil(n/2)", TheoremId::WHEEL_GEO, 4..=10, "g", |n| n.div_ceil(2));
}

#[test]
fn a02_fan_geodetic() {
    formula(2, "g(F_1,n) = ceil((n+1)/2)", TheoremId::FAN_GEO, 3..=10, "g", |n| (n + 1).div_ceil(2));
}

#[test]
fn a03_wheel_steiner() {
    formula(3, "s(W_1,n) = n-2", TheoremId::WHEEL_STEINER, 4..=9, "s", |n| n - 2);
}

#[test]
fn a04_fan_steiner() {
    let reports = run(TheoremId::FAN_STEINER, Plan::Orders(3..=9));
    let mut detail = Vec::new();
    let mut ok = reports.len() == 7;
    for (n, r) in (3..=9).zip(&reports) {
        let (g, s) = (r.value("g").unwrap(), r.value("s").unwrap());
        ok &= r.verdict == Verdict::PASS && s == n as i64 - 1;
        let matches = r.reason.as_deref().unwrap_or("");
        detail.push(format!("n={n} g={g} s={s} ({matches})"));
    }
    line(4, "s(F_1,n) = n-1, g reported alongside", ok, &detail.join(", "));
    assert!(ok);
}

#[test]
fn a05_corona_geodetic_theorem() {
    let hs: Vec<Graph> = connected(1..=3).into_iter().filter(|h| !h.is_complete()).collect();
    let plan = Plan::Pair {
        g: CorpusSpec::Exhaustive {
            orders: 1..=3,
            connected_only: true,
        },
        h: CorpusSpec::Graphs(hs.clone()),
    };
    let reports = run(TheoremId::GEO_CORONA_EQ, plan);
    let ok = !reports.is_empty() && count(&reports, Verdict::PASS) == reports.len();
    line(5, "g(G⊙H) = n1·g(K1⊙H)", ok, &tally(&reports));
    assert!(ok);
}

#[test]
fn a06_corona_steiner_proposition() {
    let plan = Plan::Pair {
        g: CorpusSpec::Exhaustive {
            orders: 2..=3,
            connected_only: true,
        },
        h: CorpusSpec::Exhaustive {
            orders: 1..=3,
            connected_only: false,
        },
    };
    let reports = run(TheoremId::STEINER_CORONA_EQ, plan);
    let small: Vec<&VerificationReport> = reports
        .iter()
        .filter(|r| r.value("s_product_unpruned").is_some())
        .collect();
    let agree = small
        .iter()
        .all(|r| r.value("s_product_unpruned") == r.value("s_product"));
    let ok = !reports.is_empty() && count(&reports, Verdict::PASS) == reports.len() && agree;
    line(
        6,
        "s(G⊙H) = n1·n2",
        ok,
        &format!("{}; unpruned agreement on {} products", tally(&reports), small.len()),
    );
    assert!(ok);
}

#[test]
fn a07_g2_biconditional() {
    let hs: Vec<Graph> = connected(1..=6).into_iter().filter(|h| !h.is_complete()).collect();
    let reports = run(TheoremId::G2_EQUIV, Plan::Single(CorpusSpec::Graphs(hs)));
    let ok = count(&reports, Verdict::FAIL) == 0 && count(&reports, Verdict::SKIPPED) == 0;
    line(7, "g(H) = g(K1⊙H) iff g(H) = g2(H)", ok, &tally(&reports));
    assert!(ok);
}

#[test]
fn a08_steiner_diameter_two_biconditional() {
    let hs: Vec<Graph> = connected(1..=6).into_iter().filter(|h| !h.is_complete()).collect();
    let reports = run(TheoremId::STEINER_K1_IFF_DIAM2, Plan::Single(CorpusSpec::Graphs(hs)));
    let ok = count(&reports, Verdict::FAIL) == 0 && count(&reports, Verdict::SKIPPED) == 0;
    line(8, "s(K1⊙H) = s(H) iff D(H) = 2", ok, &tally(&reports));
    assert!(ok, "{}", tally(&reports));
}

#[test]
fn a09_diameter_two_steiner_sets_are_geodetic() {
    let gs: Vec<Graph> = connected(1..=6)
        .into_iter()
        .filter(|g| g.diameter() == Some(2))
        .collect();
    let reports = run(TheoremId::DIAM2_STEINER_GEODETIC, Plan::Single(CorpusSpec::Graphs(gs)));
    let every_set = reports
        .iter()
        .all(|r| r.value("non_geodetic_steiner_sets") == Some(0));
    let sets: i64 = reports.iter().filter_map(|r| r.value("steiner_sets")).sum();
    let ok = !reports.is_empty() && count(&reports, Verdict::PASS) == reports.len() && every_set;
    line(
        9,
        "diameter 2: every Steiner set geodetic, g <= s",
        ok,
        &format!("{}; {sets} Steiner sets enumerated", tally(&reports)),
    );
    assert!(ok);
}

#[test]
fn a10_pendant_corollary() {
    let hs = vec![path(2).unwrap(), path(3).unwrap(), cycle(3).unwrap()];
    let plan = Plan::Pair {
        g: CorpusSpec::Graphs(vec![path(2).unwrap()]),
        h: CorpusSpec::Graphs(hs.clone()),
    };
    let reports = run(TheoremId::PENDANT_COROLLARY, plan);
    let mut ok = reports.len() == 3;
    let mut detail = Vec::new();
    for (h, r) in hs.iter().zip(&reports) {
        let want = 2 * h.order() as i64 * 2;
        let got = r.value("g_product");
        ok &= r.verdict == Verdict::PASS && got == Some(want);
        detail.push(format!("n2={} g={got:?} want={want}", h.order()));
    }
    line(10, "g(P2⊙(H⊙N2)) = n1·n2·2", ok, &detail.join(", "));
    assert!(ok);
}

#[test]
fn a11_oracle_equivalences() {
    let graphs = connected(1..=7);
    let opts = SearchOptions::geodetic();
    let (mut hull_checked, mut hull_bad) = (0usize, 0usize);
    let (mut prune_bad, mut pair_checked, mut pair_bad) = (0usize, 0usize, 0usize);
    for g in &graphs {
        let n = g.order();
        for m in 1u64..1 << n {
            if m.count_ones() > 4 {
                continue;
            }
            let w = VertexSet::from_mask(n, m);
            let union = oracle_steiner_trees(g, &w)
                .unwrap()
                .into_iter()
                .fold(VertexSet::empty(n), |acc, t| acc.union(&t));
            hull_checked += 1;
            hull_bad += usize::from(steiner_hull(g, &w).unwrap() != union);
        }
        let pruned = geodetic_number(g, &opts).unwrap();
        let full = geodetic_number_unpruned(g, &opts).unwrap();
        prune_bad += usize::from(pruned.value != full.value);
        let d = g.distances();
        for u in 0..n {
            for v in u..n {
                let w = VertexSet::from_vertices(n, [u, v]).unwrap();
                pair_checked += 1;
                pair_bad += usize::from(steiner_hull(g, &w).unwrap() != interval(&d, u, v).unwrap());
            }
        }
    }
    let ok = hull_bad == 0 && prune_bad == 0 && pair_bad == 0;
    line(
        11,
        "oracle equivalences",
        ok,
        &format!(
            "(a) hull vs tree supports {hull_bad}/{hull_checked} mismatches; \
             (b) pruned vs unpruned g {prune_bad}/{} mismatches; \
             (c) S[{{u,v}}] vs I[u,v] {pair_bad}/{pair_checked} mismatches",
            graphs.len()
        ),
    );
    assert!(ok);
}

#[test]
fn a12_complete_graph_characterizations() {
    let plan = || {
        Plan::Single(CorpusSpec::Exhaustive {
            orders: 1..=6,
            connected_only: true,
        })
    };
    let geo = run(TheoremId::GEO_KN, plan());
    let st = run(TheoremId::STEINER_KN, plan());
    let ok = count(&geo, Verdict::FAIL) + count(&st, Verdict::FAIL) == 0
        && count(&geo, Verdict::PASS) == 143
        && count(&st, Verdict::PASS) == 143;
    line(
        12,
        "g = n iff complete, s = n iff complete",
        ok,
        &format!("g: {}; s: {}", tally(&geo), tally(&st)),
    );
    assert!(ok);
}

#[test]
fn a13_determinism() {
    let verify = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_corona"))
            .args([
                "verify",
                "--theorem",
                "GEO_BOUNDS",
                "--family-g",
                "all-connected:1..3",
                "--random",
                "n=6,p=0.35,count=20",
                "--seed",
                "2024",
                "--parallel",
                threads,
            ])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        out.stdout
    };
    let first = verify("1");
    let second = verify("1");
    let parallel = verify("4");
    let lines = first.iter().filter(|&&b| b == b'\n').count();
    let ok = first == second && first == parallel && lines == 4 * 20 + 1;
    line(
        13,
        "byte-identical verify output",
        ok,
        &format!("{lines} lines; repeat identical={}, --parallel 4 identical={}", first == second, first == parallel),
    );
    assert!(ok);
}
