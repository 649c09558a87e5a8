//! Acceptance suite: the fourteen desk-scale criteria, one PASS/FAIL line
//! each (run with `--nocapture` to see the table).
//!
//! Criterion 7 asks for λ₁(G − v) < 2 with v the degree-Δ clique vertex of
//! the kite. That cannot hold for p ≥ 4: G − v contains K_{p−1}, whose
//! largest eigenvalue is p − 2 ≥ 2. The suite reports that line as FAIL,
//! asserts that the certificate is refuted for every kite in the grid, and
//! reports the exact interlacing route through the subdivided root tree on
//! its own line.

use std::time::{Duration, Instant};

use num_rational::Rational64;

use dsgraph::census::{kites_of_order, Census, CensusOptions};
use dsgraph::exact::{certify_rho_le, certify_rho_lt, MatrixKind};
use dsgraph::graph::{make_family, Family};
use dsgraph::reproduce::{ReproduceOptions, Reproducer};
use dsgraph::transforms::delete_vertex;

struct Line {
    label: String,
    passed: bool,
    detail: String,
}

fn claim(r: &Reproducer, label: &str, id: &str, limit: Option<Duration>) -> Line {
    let o = r.run(id).expect("claim runs");
    let in_time = limit.is_none_or(|l| o.seconds < l.as_secs_f64());
    let mut detail = format!("{} [{:.2}s]", o.detail, o.seconds);
    if !in_time {
        detail.push_str(&format!(" exceeds {:?}", limit.unwrap()));
    }
    Line {
        label: label.into(),
        passed: o.passed && in_time,
        detail,
    }
}

/// The clique-vertex deletion route, checked literally: returns how many
/// kites in the grid have λ₁(G − v) < 2 proved, and how many have λ₁(G − v)
/// = 2 exactly or more.
fn clique_vertex_route() -> (usize, usize) {
    let two = Rational64::from_integer(2);
    let (mut proved, mut refuted) = (0, 0);
    for p in 4..=11 {
        for q in 0..=20 {
            let g = make_family(&Family::Kite { p, q }).unwrap();
            let v = p - 1;
            assert_eq!(g.degree(v), g.max_degree());
            let h = delete_vertex(&g, v).unwrap();
            if certify_rho_lt(&h, two).is_proved() {
                proved += 1;
            } else {
                refuted += 1;
                // p = 4 leaves K3, with λ₁ = 2 exactly; larger p exceed 2.
                assert_eq!(certify_rho_le(&h, two).is_proved(), p == 4);
            }
        }
    }
    (proved, refuted)
}

#[test]
fn acceptance() {
    let r = Reproducer::new(ReproduceOptions::default()).unwrap();
    let mut lines = vec![
        claim(&r, "1", "lemma2.1", Some(Duration::from_secs(1))),
        claim(&r, "2", "lemma2.3", Some(Duration::from_secs(30))),
        claim(&r, "3", "lemma2.4", None),
        claim(&r, "4", "lemma2.8", None),
        claim(&r, "5", "lemma2.10", None),
        claim(&r, "6", "lemma2.11", None),
    ];

    let (proved, refuted) = clique_vertex_route();
    lines.push(Line {
        label: "7".into(),
        passed: refuted == 0,
        detail: format!(
            "lambda_1(kite - clique vertex) < 2 proved for {proved} of {} kites; unattainable as stated, \
             the deleted graph contains K_(p-1)",
            proved + refuted
        ),
    });
    lines.push(claim(&r, "7 (root route)", "lemma3.1", None));
    lines.push(claim(&r, "8", "lemma3.3:bounds", None));

    // Criterion 9 on a fresh four-thread engine, timed in two stages.
    let census = Census::new(CensusOptions {
        jobs: Some(4),
        cache_dir: None,
    })
    .unwrap();
    let mut ds = 0;
    let mut not_ds = Vec::new();
    let mut stage = |orders: std::ops::RangeInclusive<usize>| {
        let start = Instant::now();
        for n in orders {
            for g in kites_of_order(n) {
                if census
                    .ds_check(&g, MatrixKind::Adjacency, false)
                    .unwrap()
                    .is_ds()
                {
                    ds += 1;
                } else {
                    not_ds.push(g.to_graph6());
                }
            }
        }
        start.elapsed()
    };
    let small = stage(2..=8);
    let nine = stage(9..=9);
    let timely = small < Duration::from_secs(60) && nine < Duration::from_secs(600);
    lines.push(Line {
        label: "9".into(),
        passed: not_ds.is_empty() && timely,
        detail: format!(
            "{ds} kites DS, mates for {not_ds:?}; n <= 8 in {:.1}s, n = 9 in {:.1}s",
            small.as_secs_f64(),
            nine.as_secs_f64()
        ),
    });

    lines.push(claim(&r, "10", "lemma2.13", None));
    lines.push(claim(&r, "11", "census:counts", None));
    lines.push(claim(&r, "12", "census:smallest-pair", None));
    lines.push(claim(&r, "13", "lemma2.6", None));
    lines.push(claim(&r, "14", "lemma2.7:roots", None));

    for l in &lines {
        println!(
            "criterion {:<15} {}  {}",
            l.label,
            if l.passed { "PASS" } else { "FAIL" },
            l.detail
        );
    }

    // The literal criterion 7 must fail for the reason given above, on every
    // kite; everything else must pass.
    assert_eq!((proved, refuted), (0, 8 * 21));
    let failed: Vec<&str> = lines
        .iter()
        .filter(|l| !l.passed && l.label != "7")
        .map(|l| l.label.as_str())
        .collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
