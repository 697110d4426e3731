//! Acceptance suite: one line per criterion, nonzero exit on any failure.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use finspace::classify::bracket_readings;
use finspace::complex::boundary_matrices;
use finspace::enumerate::{enumerate_cores, enumerate_height2_cores, enumerate_posets};
use finspace::grouppres::DEFAULT_STEP_BUDGET;
use finspace::{
    circle_wedge_size, classify_poset, fixtures, homology, inventory, min_model_search,
    order_complex, presentation, tietze_simplify, CanonicalCode, Poset, SimplificationStatus,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const C1_BUDGET: Duration = Duration::from_secs(60);
const C2_BUDGET: Duration = Duration::from_secs(600);
const C3_BUDGET: Duration = Duration::from_secs(5);
const C4_BUDGET: Duration = Duration::from_secs(1);
const C5_BUDGET: Duration = Duration::from_secs(1);
const C8_BUDGET: Duration = Duration::from_secs(60);
const PROPERTY_INSTANCES: usize = 250;
const PROPERTY_SEED: u64 = 20_240_611;

struct Outcome {
    pass: bool,
    detail: String,
}

fn ok(detail: impl Into<String>) -> Outcome {
    Outcome {
        pass: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        pass: false,
        detail: detail.into(),
    }
}

fn timed(budget: Option<Duration>, f: impl FnOnce() -> Outcome) -> (Outcome, Duration) {
    let start = Instant::now();
    let mut out = f();
    let elapsed = start.elapsed();
    if let Some(b) = budget {
        if elapsed > b {
            out.pass = false;
            out.detail = format!("{} (over budget {:?})", out.detail, b);
        }
    }
    (out, elapsed)
}

fn poset(id: &str) -> &'static Poset {
    fixtures::get(id)
        .unwrap_or_else(|| panic!("fixture {id}"))
        .poset()
}

fn counts_line(inv: &finspace::Inventory, wanted: &[((usize, usize), usize)]) -> Outcome {
    let mut bad = Vec::new();
    for &((p, q), want) in wanted {
        let got = inv.count(p, q);
        if got != want {
            let codes: Vec<String> = inv
                .with_type(p, q)
                .iter()
                .map(|r| r.code.to_string())
                .collect();
            bad.push(format!(
                "({p},{q}) expected {want} got {got} [{}]",
                codes.join(" ")
            ));
        }
    }
    let summary = wanted
        .iter()
        .map(|&((p, q), _)| format!("({p},{q})={}", inv.count(p, q)))
        .collect::<Vec<_>>()
        .join(" ");
    if bad.is_empty() {
        ok(summary)
    } else {
        fail(bad.join("; "))
    }
}

fn c1() -> Outcome {
    let inv = inventory(7, 2).unwrap();
    counts_line(&inv, &[((1, 1), 2), ((0, 2), 3)])
}

fn c2() -> Outcome {
    let inv = inventory(8, 2).unwrap();
    counts_line(
        &inv,
        &[
            ((2, 1), 7),
            ((3, 1), 1),
            ((1, 2), 6),
            ((0, 3), 5),
            ((0, 4), 3),
        ],
    )
}

fn c3() -> Outcome {
    let five = inventory(5, 2).unwrap();
    let six = inventory(6, 2).unwrap();
    let pass = five.records.is_empty() && six.records.len() == 1 && six.count(0, 1) == 1;
    let d = format!("n=5: {} records, n=6: {:?}", five.records.len(), six.counts);
    if pass {
        ok(d)
    } else {
        fail(d)
    }
}

fn c4() -> Outcome {
    let want: [(&str, [usize; 3], [usize; 2], [usize; 3], i64); 2] = [
        ("fig17a", [8, 14, 4], [7, 4], [1, 3, 0], -2),
        ("fig14c", [8, 16, 8], [7, 7], [1, 2, 1], 0),
    ];
    let mut parts = Vec::new();
    let mut pass = true;
    for (id, f, r, b, chi) in want {
        let start = Instant::now();
        let h = homology(&order_complex(poset(id)));
        let elapsed = start.elapsed();
        let good = h.f_vector == f
            && h.f2_ranks == r
            && h.betti == b
            && h.euler == chi
            && elapsed <= C4_BUDGET;
        pass &= good;
        parts.push(format!(
            "{id} f={:?} f2={:?} betti={:?} chi={} {:?}",
            h.f_vector, h.f2_ranks, h.betti, h.euler, elapsed
        ));
    }
    Outcome {
        pass,
        detail: parts.join("; "),
    }
}

fn status(id: &str) -> (SimplificationStatus, Duration) {
    let start = Instant::now();
    let k = order_complex(poset(id));
    let s = tietze_simplify(&presentation(&k, 0).unwrap(), DEFAULT_STEP_BUDGET);
    (s, start.elapsed())
}

fn c5() -> Outcome {
    let mut parts = Vec::new();
    let mut pass = true;
    for (id, want) in [
        ("fig17a", SimplificationStatus::FreeOfRank(3)),
        ("fig14c", SimplificationStatus::FreeOfRank(2)),
    ] {
        let (s, t) = status(id);
        pass &= s == want && t <= C5_BUDGET;
        parts.push(format!("{id}: {s}"));
    }
    // one representative per isomorphism class of 7-point (0,q) fixtures
    let mut seen = BTreeSet::new();
    for f in fixtures::all() {
        let Some(t) = &f.meta.expected else { continue };
        if t.circles == 0
            && t.spheres > 0
            && f.poset().len() == 7
            && seen.insert(f.poset().canonical_code())
        {
            let (s, time) = status(f.id);
            pass &= s == SimplificationStatus::Trivial && time <= C5_BUDGET;
            parts.push(format!("{}: {s}", f.id));
        }
    }
    pass &= seen.len() == 3;
    parts.push(format!("{} classes", seen.len()));
    Outcome {
        pass,
        detail: parts.join("; "),
    }
}

fn c6() -> Outcome {
    let mut bad = Vec::new();
    let mut pairs = 0;
    for f in fixtures::all() {
        if let Some(orig) = &f.meta.dual_of {
            pairs += 1;
            if !f.poset().is_isomorphic(&poset(orig).dual()) {
                bad.push(format!("{} is not dual to {orig}", f.id));
            }
        }
    }
    for id in ["fig14b", "fig21b"] {
        if !poset(id).is_isomorphic(&poset(id).dual()) {
            bad.push(format!("{id} not self-dual"));
        }
    }
    let c = poset("fig18c");
    if !(c.is_isomorphic(poset("fig18d")) && c.is_isomorphic(poset("fig18e"))) {
        bad.push("fig18c, fig18d, fig18e not isomorphic".into());
    }
    if bad.is_empty() {
        ok(format!("{pairs} dual pairs, 2 self-dual, fig18c=d=e"))
    } else {
        fail(bad.join("; "))
    }
}

fn c7() -> Outcome {
    let invs = [inventory(7, 2).unwrap(), inventory(8, 2).unwrap()];
    let mut checked = 0;
    let mut missing = Vec::new();
    for f in fixtures::all() {
        let p = f.poset();
        if f.meta.expected.is_none() || p.height() != 2 || !(7..=8).contains(&p.len()) {
            continue;
        }
        checked += 1;
        if !invs[p.len() - 7].contains(&p.canonical_code()) {
            missing.push(f.id);
        }
    }
    if missing.is_empty() {
        ok(format!("{checked} fixtures found"))
    } else {
        fail(format!("missing: {}", missing.join(" ")))
    }
}

fn c8() -> Outcome {
    let mut parts = Vec::new();
    let mut pass = true;
    let mut by_size: Vec<Vec<(usize, usize)>> = Vec::new();
    // the largest expected minimum is 7, so sizes through 8 settle every case
    for m in 0..=8 {
        let rows = if m < 2 {
            Vec::new()
        } else {
            enumerate_cores(m, 1)
                .unwrap()
                .iter()
                .map(|p| {
                    let h = homology(&order_complex(p));
                    (h.betti_at(1), h.f_vector[1])
                })
                .collect()
        };
        by_size.push(rows);
    }
    for b in 1..=6 {
        let want = circle_wedge_size(b);
        let found = (0..by_size.len()).find(|&m| by_size[m].iter().any(|&(b1, _)| b1 == b));
        let edges_ok = found
            .map(|m| {
                by_size[m]
                    .iter()
                    .filter(|r| r.0 == b)
                    .all(|&(_, e)| e == m + b - 1)
            })
            .unwrap_or(false);
        pass &= found == Some(want) && edges_ok;
        parts.push(format!("b1={b}: {found:?}/{want}"));
    }
    // exact-integer check of the bracket reading used for the closed form
    pass &= (1..=6).all(|b| bracket_readings(b).0 == circle_wedge_size(b));
    Outcome {
        pass,
        detail: parts.join(" "),
    }
}

fn c9() -> Outcome {
    let counts: Vec<usize> = (1..=6)
        .map(|n| enumerate_posets(n).unwrap().len())
        .collect();
    let mut pass = counts == [1, 2, 5, 16, 63, 318];
    for n in 1..=6 {
        let filtered: BTreeSet<CanonicalCode> = enumerate_posets(n)
            .unwrap()
            .iter()
            .filter(|p| p.height() == 2 && p.is_connected() && p.is_core())
            .map(Poset::canonical_code)
            .collect();
        let direct: BTreeSet<CanonicalCode> = enumerate_height2_cores(n)
            .unwrap()
            .iter()
            .map(Poset::canonical_code)
            .collect();
        pass &= filtered == direct;
    }
    let d = format!("counts {counts:?}");
    if pass {
        ok(d)
    } else {
        fail(d)
    }
}

fn random_poset(rng: &mut ChaCha8Rng) -> Poset {
    let n = rng.gen_range(1..=8);
    let density = rng.gen_range(0.15..0.6);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut rel = vec![vec![false; n]; n];
    for i in 0..n {
        rel[perm[i]][perm[i]] = true;
        for j in i + 1..n {
            if rng.gen_bool(density) {
                rel[perm[i]][perm[j]] = true;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if rel[i][k] && rel[k][j] {
                    rel[i][j] = true;
                }
            }
        }
    }
    let labels = (1..=n).map(|i| format!("x{i}")).collect();
    Poset::from_relation(labels, |i, j| rel[i][j]).unwrap()
}

fn padded(mut v: Vec<usize>) -> Vec<usize> {
    v.resize(12, 0);
    v
}

fn c10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(PROPERTY_SEED);
    let posets: Vec<Poset> = (0..PROPERTY_INSTANCES)
        .map(|_| random_poset(&mut rng))
        .collect();
    let mut failures = [0usize; 5];
    for p in &posets {
        let k = order_complex(p);
        let h = homology(&k);
        if !boundary_matrices(&k)
            .windows(2)
            .all(|w| w[0].mul(&w[1]).is_zero())
        {
            failures[0] += 1;
        }
        let c = p.core();
        if !c.is_core() || padded(homology(&order_complex(&c)).betti) != padded(h.betti.clone()) {
            failures[1] += 1;
        }
        let d = p.dual();
        let hd = homology(&order_complex(&d));
        let label_ok = !p.is_connected() || classify_poset(p).label == classify_poset(&d).label;
        if hd.betti != h.betti || !label_ok {
            failures[2] += 1;
        }
        let code = p.canonical_code();
        let relabel_ok = (0..20).all(|_| {
            let mut order: Vec<usize> = (0..p.len()).collect();
            order.shuffle(&mut rng);
            p.reorder(&order).canonical_code() == code
        });
        if !relabel_ok {
            failures[3] += 1;
        }
        let s = p.nh_suspension(1);
        let mut shifted = vec![0];
        shifted.extend(h.reduced_betti());
        if homology(&order_complex(&s)).reduced_betti() != shifted {
            failures[4] += 1;
        }
    }
    let d = format!(
        "{} instances; failures dd={} core={} dual={} relabel={} suspension={}",
        posets.len(),
        failures[0],
        failures[1],
        failures[2],
        failures[3],
        failures[4]
    );
    if failures.iter().all(|&f| f == 0) {
        ok(d)
    } else {
        fail(d)
    }
}

fn c11() -> Outcome {
    let want = [((1, 0), 4, 1), ((1, 1), 7, 2), ((0, 2), 7, 3)];
    let mut parts = Vec::new();
    let mut pass = true;
    for ((p, q), n, models) in want {
        let m = min_model_search(p, q, 8).unwrap();
        pass &= m.n_min == Some(n) && m.models.len() == models;
        parts.push(format!(
            "({p},{q}): n={:?} models={}",
            m.n_min,
            m.models.len()
        ));
    }
    let fence = min_model_search(1, 0, 8).unwrap();
    pass &= fence
        .models
        .first()
        .is_some_and(|r| r.poset().is_isomorphic(poset("s1_fence")));
    Outcome {
        pass,
        detail: parts.join("; "),
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, Option<Duration>, fn() -> Outcome); 11] = [
        ("C1 inventory(7,2) counts", Some(C1_BUDGET), c1),
        ("C2 inventory(8,2) counts", Some(C2_BUDGET), c2),
        ("C3 inventories at n=5,6", Some(C3_BUDGET), c3),
        ("C4 fixture homology", None, c4),
        ("C5 pi1 certification", None, c5),
        ("C6 duality and isomorphism", None, c6),
        ("C7 fixture membership", None, c7),
        ("C8 height-1 circle law", Some(C8_BUDGET), c8),
        ("C9 oracle equivalence", None, c9),
        ("C10 property suites", None, c10),
        ("C11 minimal models", None, c11),
    ];
    let mut failed = 0;
    for (name, budget, f) in criteria {
        let (out, t) = timed(budget, f);
        if !out.pass {
            failed += 1;
        }
        let tag = if out.pass { "PASS" } else { "FAIL" };
        println!("[{tag}] {name}: {} ({:.3}s)", out.detail, t.as_secs_f64());
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
