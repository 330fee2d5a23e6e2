//! Acceptance criteria 1 to 6. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails. Every comparison is exact: integer or
//! rational arithmetic, zero tolerance.

use std::path::PathBuf;
use std::process::Command;

use kiso::certify::{certify_families, CertifyReport, Grid, Status};
use kiso::input::read_source;
use kiso::verify::{verify_stream, Aggregate, GraphRecord, VerifyOptions};
use kiso_core::construct::{Rational, Regime};
use kiso_core::{parse_graph6, Graph};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

/// Connected graphs on 1..=8 vertices, by order.
const CONNECTED_COUNTS: [usize; 8] = [1, 1, 2, 6, 21, 112, 853, 11117];

/// Brute force over vertex masks, from the edge list only.
struct Oracle {
    n: usize,
    closed: Vec<u32>,
    /// Cliques as masks, indexed by size.
    cliques: Vec<Vec<u32>>,
}

impl Oracle {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut adj = vec![0u32; n];
        for (u, v) in g.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let closed = (0..n).map(|v| adj[v] | 1 << v).collect();
        let mut cliques = vec![Vec::new(); n + 1];
        for mask in 1u32..(1 << n) {
            let vs = (0..n).filter(|v| mask >> v & 1 == 1);
            if vs.clone().all(|v| adj[v] | 1 << v | !mask == u32::MAX) {
                cliques[mask.count_ones() as usize].push(mask);
            }
        }
        Oracle { n, closed, cliques }
    }

    fn reach(&self, s: u32) -> u32 {
        (0..self.n)
            .filter(|v| s >> v & 1 == 1)
            .fold(0, |a, v| a | self.closed[v])
    }

    fn isolating(&self, s: u32, k: usize) -> bool {
        let r = self.reach(s);
        self.cliques
            .get(k)
            .is_none_or(|cs| cs.iter().all(|c| c & r != 0))
    }

    fn irredundant(&self, s: u32) -> bool {
        (0..self.n).filter(|x| s >> x & 1 == 1).all(|x| {
            let others = self.reach(s & !(1 << x));
            self.closed[x] & !others != 0
        })
    }

    fn min_size(&self, ok: impl Fn(u32) -> bool) -> usize {
        (0u32..(1 << self.n))
            .filter(|&s| ok(s))
            .map(|s| s.count_ones() as usize)
            .min()
            .expect("the full set qualifies")
    }

    fn gamma(&self) -> usize {
        let all = (1u32 << self.n) - 1;
        self.min_size(|s| self.reach(s) == all)
    }

    fn iota(&self, k: usize) -> usize {
        self.min_size(|s| self.isolating(s, k))
    }

    fn ir(&self) -> usize {
        self.min_size(|s| {
            self.irredundant(s)
                && (0..self.n).all(|u| s >> u & 1 == 1 || !self.irredundant(s | 1 << u))
        })
    }
}

struct Run {
    agg: Aggregate,
    records: Vec<GraphRecord>,
}

fn run_verify() -> Run {
    let reader = read_source(&data("connected_le8.g6")).expect("corpus present");
    let opts = VerifyOptions {
        samples: 2,
        seed: 1,
        ..Default::default()
    };
    let mut records = Vec::new();
    let agg = verify_stream(reader, &opts, |r| {
        records.push(r.clone());
        Ok(())
    })
    .expect("verify runs");
    Run { agg, records }
}

type Verdict = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn no_failures(agg: &Aggregate, names: &[&str]) -> Result<(), String> {
    for name in names {
        let t = agg
            .checks
            .get(*name)
            .ok_or_else(|| format!("check {name} never ran"))?;
        ensure(t.hard && t.failed == 0 && t.evaluated > 0, || {
            format!("{name}: {t:?}")
        })?;
    }
    Ok(())
}

const THEOREM_CHECKS: [&str; 11] = [
    "gamma_lt_2ir",
    "iota_delta_le_ir",
    "iota_delta_plus_1_le_ir",
    "iota_delta_minus_1_le_(3D-4)ir/(2D-2)",
    "iota_delta_minus_1_refined_with_s",
    "iota_delta_minus_2_le_3ir/2",
    "delta3_gamma_le_3ir/2",
    "tree_2gamma_lt_3ir",
    "cactus_5gamma_lt_8ir",
    "claw_free_2gamma_le_3ir",
    "graph6_round_trip",
];

fn criterion1(run: &Run) -> Verdict {
    let agg = &run.agg;
    ensure(
        agg.parse_errors.is_empty() && agg.skipped.is_empty(),
        || {
            format!(
                "{} parse errors, {} skipped",
                agg.parse_errors.len(),
                agg.skipped.len()
            )
        },
    )?;
    let orders: Vec<usize> = (1..=8)
        .map(|n| agg.by_order.get(&n).copied().unwrap_or(0))
        .collect();
    ensure(orders == CONNECTED_COUNTS, || {
        format!("graphs per order {orders:?}")
    })?;
    no_failures(agg, &THEOREM_CHECKS[..10])?;
    ensure(agg.evaluated("gamma_lt_2ir") == 12113, || {
        "gamma check did not cover every graph".into()
    })?;

    // Invariants against the brute-force oracle, then the inequalities
    // recomputed from the oracle values alone.
    let mut violations = 0;
    for r in &run.records {
        let g = parse_graph6(&r.graph6).map_err(|e| e.to_string())?;
        let o = Oracle::new(&g);
        let (gm, ir) = (o.gamma(), o.ir());
        let iota: Vec<usize> = (1..=r.delta + 1).map(|k| o.iota(k)).collect();
        ensure(gm == r.gamma && ir == r.ir && iota == r.iota, || {
            format!(
                "{}: solver ({}, {}, {:?}) vs oracle ({gm}, {ir}, {iota:?})",
                r.graph6, r.gamma, r.ir, r.iota
            )
        })?;
        let d = r.delta;
        let q = |x: usize| Rational::from_integer(x as i64);
        let mut ok = gm < 2 * ir && iota[d] <= ir;
        if d >= 1 {
            ok &= iota[d - 1] <= ir;
        }
        if d >= 2 {
            ok &= q(iota[d - 2]) <= q(ir) * Rational::new(3 * d as i64 - 4, 2 * d as i64 - 2);
        }
        if d >= 3 {
            ok &= 2 * iota[d - 3] <= 3 * ir;
        }
        if d == 3 {
            ok &= 2 * gm <= 3 * ir;
        }
        if r.class.is_tree {
            ok &= 2 * gm < 3 * ir;
        }
        if r.class.is_cactus {
            ok &= 5 * gm < 8 * ir;
        }
        if r.class.is_claw_free {
            ok &= 2 * gm <= 3 * ir;
        }
        violations += usize::from(!ok);
    }
    ensure(violations == 0, || {
        format!("{violations} oracle-recomputed violations")
    })?;
    Ok(format!(
        "{} graphs, {} theorem checks evaluated, 0 violations (oracle-confirmed)",
        agg.verified,
        THEOREM_CHECKS[..10]
            .iter()
            .map(|c| agg.evaluated(c))
            .sum::<usize>()
    ))
}

fn criterion2(run: &Run) -> Verdict {
    let agg = &run.agg;
    let expected: usize = run
        .records
        .iter()
        .map(|r| Regime::applicable_ks(r.delta).count())
        .sum();
    let ran: usize = agg
        .checks
        .iter()
        .filter(|(n, _)| n.starts_with("construct_"))
        .map(|(_, t)| t.evaluated)
        .sum();
    ensure(ran == expected, || {
        format!("{ran} constructions, expected {expected}")
    })?;
    ensure(agg.failed_with_prefix("construct_") == 0, || {
        "construction failures".into()
    })?;
    for r in &run.records {
        for c in &r.constructive {
            ensure(
                Rational::from_integer(c.size as i64) <= c.bound && c.iota <= c.size,
                || {
                    format!(
                        "{} k={}: |T|={} bound={} iota={}",
                        r.graph6, c.k, c.size, c.bound, c.iota
                    )
                },
            )?;
        }
    }
    Ok(format!(
        "{ran} constructions, all k-isolating, within bound and at least iota_k"
    ))
}

fn criterion3(report: &CertifyReport) -> Verdict {
    ensure(report.passed(), || {
        format!("{} failing rows", report.failures)
    })?;
    // (family, params, invariant, value)
    let mut expected: Vec<(&str, Vec<usize>, String, usize)> = Vec::new();
    for t in 1..=3 {
        for k in 2..=4 {
            expected.push(("G1", vec![t, k], "ir".into(), t));
            expected.push(("G1", vec![t, k], format!("iota_{k}"), t));
        }
    }
    for t in 1..=2 {
        for k in 2..=3 {
            expected.push(("G2", vec![t, k], "ir".into(), 2 * t));
            expected.push(("G2", vec![t, k], format!("iota_{k}"), 2 * t));
        }
    }
    for k in 1..=2 {
        for t in 1..=2 {
            expected.push(("Dkt", vec![k, t], format!("iota_{k}"), 3 * t));
            expected.push(("Dkt", vec![k, t], "ir".into(), 2 * t));
        }
    }
    for c in 2..=3 {
        expected.push(("subcubicH", vec![c], "gamma".into(), 3 * c));
        expected.push(("subcubicH", vec![c], "ir".into(), 2 * c));
    }
    expected.push(("fivethirds", vec![], "gamma".into(), 10));
    expected.push(("fivethirds", vec![], "ir".into(), 6));
    for (name, params, inv, value) in &expected {
        let row = report
            .find(name, params)
            .ok_or_else(|| format!("{name} {params:?} missing"))?;
        let c = row
            .claims
            .iter()
            .find(|c| &c.invariant == inv)
            .ok_or_else(|| format!("{name} {params:?}: no {inv} claim"))?;
        ensure(
            c.status == Status::Exact && c.computed == Some(*value),
            || format!("{name} {params:?} {inv}: {c:?}, expected {value}"),
        )?;
    }
    let ft = report.find("fivethirds", &[]).expect("present");
    let get = |inv: &str| {
        ft.claims
            .iter()
            .find(|c| c.invariant == inv)
            .and_then(|c| c.computed)
            .unwrap()
    };
    let ratio = Rational::new(get("gamma") as i64, get("ir") as i64);
    ensure(ratio == Rational::new(5, 3), || {
        format!("five-thirds ratio {ratio}")
    })?;
    Ok(format!(
        "{} solver equalities exact; fivethirds gamma/ir = {ratio}",
        expected.len()
    ))
}

fn criterion4(report: &CertifyReport) -> Verdict {
    ensure(report.passed(), || {
        format!("{} failing rows", report.failures)
    })?;
    let mut parts = Vec::new();
    for (name, params, k, iota, ir) in [("Gkl", [6, 3], 6, 12, 9), ("Hksl", [8, 6], 8, 38, 30)] {
        let row = report
            .find(name, &params)
            .ok_or_else(|| format!("{name} missing"))?;
        ensure(row.error.is_none() && row.degree_audits > 0, || {
            format!("{name}: {:?}", row.error)
        })?;
        let iota_row = row
            .claims
            .iter()
            .find(|c| c.invariant == format!("iota_{k}"))
            .unwrap();
        ensure(
            iota_row.status == Status::PinnedByPacking
                && iota_row.witness == Some(iota)
                && iota_row.packing == Some(iota),
            || format!("{name}: {iota_row:?}"),
        )?;
        let ir_row = row.claims.iter().find(|c| c.invariant == "ir").unwrap();
        ensure(
            ir_row.status == Status::UpperBoundOnly
                && ir_row.witness == Some(ir)
                && row.ir_lower_bound_paper_asserted,
            || format!("{name}: {ir_row:?}"),
        )?;
        parts.push(format!(
            "{name}{params:?}: iota_{k} = {iota} pinned, ir <= {ir} (lower bound paper-asserted), {} degree audits",
            row.degree_audits
        ));
    }
    let h = report.find("Hksl", &[8, 6]).unwrap();
    ensure(
        h.derived.get("l") == Some(&7)
            && h.derived.get("r") == Some(&3)
            && h.derived.get("r_prime") == Some(&3),
        || format!("H(8,6) derived {:?}", h.derived),
    )?;
    Ok(parts.join("; "))
}

fn criterion5(run: &Run) -> Verdict {
    let agg = &run.agg;
    let count = |f: &dyn Fn(&GraphRecord) -> bool| run.records.iter().filter(|r| f(r)).count();
    let expect = [
        ("theorem6_witnesses", count(&|_| true)),
        ("lemma1_domination", count(&|_| true)),
        ("claim1_k_delta", count(&|r| r.delta >= 2)),
        ("claim5_k_delta_minus_1", count(&|r| r.delta >= 2)),
        (
            "claims_refinement_k_delta_minus_1",
            count(&|r| r.delta >= 2),
        ),
        (
            "claims_refinement_k_delta_minus_2",
            count(&|r| r.delta >= 3),
        ),
    ];
    for (name, n) in expect {
        no_failures(agg, &[name])?;
        ensure(agg.evaluated(name) == n, || {
            format!("{name}: {} evaluations, expected {n}", agg.evaluated(name))
        })?;
    }
    ensure(agg.failed_with_prefix("sampled_") == 0, || {
        "sampled-set failures".into()
    })?;
    let sampled = agg.evaluated("sampled_theorem6_witnesses");
    Ok(format!(
        "{} minimum-set partitions, all claims hold; plus {sampled} random non-minimum sets",
        agg.evaluated("theorem6_witnesses")
    ))
}

fn criterion6(run: &Run) -> Verdict {
    no_failures(&run.agg, &["graph6_round_trip"])?;
    ensure(
        run.agg.evaluated("graph6_round_trip") == run.agg.verified,
        || "round trip not on every graph".into(),
    )?;
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for jobs in [1, 4] {
        let json = dir.path().join(format!("agg{jobs}.json"));
        let csv = dir.path().join(format!("rows{jobs}.csv"));
        let status = Command::new(env!("CARGO_BIN_EXE_kiso"))
            .args([
                "verify",
                "--g6",
                &data("connected_le8.g6"),
                "--jobs",
                &jobs.to_string(),
            ])
            .arg("--json")
            .arg(&json)
            .arg("--csv")
            .arg(&csv)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(status.status.success(), || {
            format!("verify --jobs {jobs} exited {:?}", status.status)
        })?;
        outputs.push((std::fs::read(&json).unwrap(), std::fs::read(&csv).unwrap()));
    }
    ensure(outputs[0].0 == outputs[1].0, || {
        "aggregates differ between --jobs 1 and --jobs 4".into()
    })?;
    ensure(outputs[0].1 == outputs[1].1, || {
        "CSV differs between --jobs 1 and --jobs 4".into()
    })?;
    let lib = serde_json::to_string_pretty(&run_plain()).unwrap() + "\n";
    ensure(lib.as_bytes() == outputs[0].0.as_slice(), || {
        "CLI aggregate differs from library aggregate".into()
    })?;
    Ok(format!(
        "{} round trips; aggregate ({} bytes) and CSV byte-identical for --jobs 1 and 4",
        run.agg.verified,
        outputs[0].0.len()
    ))
}

/// The library aggregate with the CLI's default options.
fn run_plain() -> Aggregate {
    let reader = read_source(&data("connected_le8.g6")).unwrap();
    verify_stream(reader, &VerifyOptions::default(), |_| Ok(())).unwrap()
}

fn main() {
    let run = run_verify();
    let small = certify_families(&Grid::Small.entries());
    let large = certify_families(&Grid::Large.entries());
    let results = [
        (
            "1 exhaustive theorem suite, connected n <= 8",
            criterion1(&run),
        ),
        ("2 constructive pipeline", criterion2(&run)),
        ("3 family exactness (solver-verified)", criterion3(&small)),
        ("4 large-family certificates", criterion4(&large)),
        ("5 partition machinery", criterion5(&run)),
        ("6 codec and determinism", criterion6(&run)),
    ];
    let mut failed = 0;
    println!("acceptance (tolerance: exact, zero violations)");
    for (name, r) in &results {
        match r {
            Ok(msg) => println!("PASS criterion {name}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name}: {msg}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
