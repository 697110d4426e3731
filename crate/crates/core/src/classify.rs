//! Wedge-of-spheres labels for cores, inventories, minimal-model search and
//! the reproduction report.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::complex::{homology, order_complex, HomologyProfile};
use crate::enumerate::{
    enumerate_cores, tier_labels, EnumerateError, Inventory, MAX_HEIGHT1_N, MAX_HEIGHT2_N,
};
use crate::fixtures;
use crate::grouppres::{presentation, tietze_simplify, SimplificationStatus, DEFAULT_STEP_BUDGET};
use crate::poset::{CanonicalCode, Poset, PosetJson};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HomotopyTypeLabel {
    /// `circles` copies of the circle wedged with `spheres` 2-spheres.
    Wedge {
        circles: usize,
        spheres: usize,
        pi1_verified: bool,
    },
    Unrecognized,
}

impl HomotopyTypeLabel {
    pub fn wedge_type(&self) -> Option<(usize, usize)> {
        match *self {
            HomotopyTypeLabel::Wedge {
                circles, spheres, ..
            } => Some((circles, spheres)),
            HomotopyTypeLabel::Unrecognized => None,
        }
    }

    pub fn pi1_verified(&self) -> bool {
        matches!(
            self,
            HomotopyTypeLabel::Wedge {
                pi1_verified: true,
                ..
            }
        )
    }

    /// Count key, `"(p,q)"` or `"unrecognized"`.
    pub fn key(&self) -> String {
        match self.wedge_type() {
            Some((p, q)) => format!("({p},{q})"),
            None => "unrecognized".into(),
        }
    }
}

impl fmt::Display for HomotopyTypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            HomotopyTypeLabel::Wedge {
                circles: 0,
                spheres: 0,
                ..
            } => f.write_str("point")?,
            HomotopyTypeLabel::Wedge {
                circles, spheres, ..
            } => {
                let parts: Vec<&str> = std::iter::repeat_n("S1", circles)
                    .chain(std::iter::repeat_n("S2", spheres))
                    .collect();
                f.write_str(&parts.join(" v "))?;
            }
            HomotopyTypeLabel::Unrecognized => return f.write_str("unrecognized"),
        }
        if !self.pi1_verified() {
            f.write_str(" (pi1 unverified)")?;
        }
        Ok(())
    }
}

/// `(p, q)` is assigned when the complex has dimension at most 2, is
/// connected and torsion-free, with `p = beta_1` and `q = beta_2`.
/// The fundamental group counts as verified when `s` certifies it free of
/// rank `p`.
pub fn label(
    h: &HomologyProfile,
    s: Option<&SimplificationStatus>,
    dim: usize,
) -> HomotopyTypeLabel {
    if dim > 2 || h.betti_at(0) != 1 || h.has_torsion() {
        return HomotopyTypeLabel::Unrecognized;
    }
    let circles = h.betti_at(1);
    HomotopyTypeLabel::Wedge {
        circles,
        spheres: h.betti_at(2),
        pi1_verified: s.and_then(SimplificationStatus::free_rank) == Some(circles),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassificationRecord {
    pub code: CanonicalCode,
    pub n: usize,
    pub height: usize,
    pub f_vector: Vec<usize>,
    pub homology: HomologyProfile,
    pub label: HomotopyTypeLabel,
    pub homogeneous: bool,
    pub dual_code: CanonicalCode,
    pub self_dual: bool,
    /// Bundled fixtures isomorphic to this space.
    pub figures: Vec<String>,
    /// Asphericity is never certified; always `false`.
    pub asphericity_checked: bool,
    pub elements: Vec<String>,
    pub covers: Vec<[String; 2]>,
}

impl ClassificationRecord {
    /// The canonical representative, labelled by level.
    pub fn poset(&self) -> Poset {
        let j = PosetJson {
            n: self.n,
            elements: self.elements.clone(),
            covers: self.covers.clone(),
        };
        j.to_poset().expect("record stores a valid poset")
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("record JSON is serializable")
    }
}

/// Fundamental group status of the order complex, if it is connected.
pub fn pi1_status(p: &Poset) -> Option<SimplificationStatus> {
    let k = order_complex(p);
    let g = presentation(&k, 0).ok()?;
    Some(tietze_simplify(&g, DEFAULT_STEP_BUDGET))
}

pub fn classify_poset(p: &Poset) -> ClassificationRecord {
    let (code, rep) = p.canonical_form();
    let rep = tier_labels(&rep);
    let k = order_complex(&rep);
    let h = homology(&k);
    let status = presentation(&k, 0)
        .ok()
        .map(|g| tietze_simplify(&g, DEFAULT_STEP_BUDGET));
    let dual_code = rep.dual().canonical_code();
    let json = PosetJson::from(&rep);
    ClassificationRecord {
        n: rep.len(),
        height: rep.height(),
        f_vector: h.f_vector.clone(),
        label: label(&h, status.as_ref(), k.dimension()),
        homology: h,
        homogeneous: rep.is_homogeneous(),
        self_dual: dual_code == code,
        dual_code,
        figures: fixtures::matching(&code),
        asphericity_checked: false,
        elements: json.elements,
        covers: json.covers,
        code,
    }
}

/// Classifies all cores of the given size and height.
pub fn inventory(n: usize, height: usize) -> Result<Inventory, EnumerateError> {
    let cores = enumerate_cores(n, height)?;
    let records: Vec<ClassificationRecord> = cores.par_iter().map(classify_poset).collect();
    let mut counts = BTreeMap::new();
    for r in &records {
        *counts.entry(r.label.key()).or_insert(0) += 1;
    }
    Ok(Inventory {
        n,
        height,
        filters: vec!["connected".into(), "beat_point_free".into()],
        records,
        counts,
    })
}

impl Inventory {
    pub fn count(&self, circles: usize, spheres: usize) -> usize {
        self.records
            .iter()
            .filter(|r| r.label.wedge_type() == Some((circles, spheres)))
            .count()
    }

    pub fn with_type(&self, circles: usize, spheres: usize) -> Vec<&ClassificationRecord> {
        self.records
            .iter()
            .filter(|r| r.label.wedge_type() == Some((circles, spheres)))
            .collect()
    }

    pub fn contains(&self, code: &CanonicalCode) -> bool {
        self.records.binary_search_by(|r| r.code.cmp(code)).is_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MinModel {
    pub circles: usize,
    pub spheres: usize,
    pub n_max: usize,
    pub height: usize,
    /// `None` when no core up to `n_max` points has the type.
    pub n_min: Option<usize>,
    pub models: Vec<ClassificationRecord>,
}

/// Smallest cores of type `(p, q)` with at most `n_max` points. Types with
/// 2-spheres are searched among height-2 cores, pure circle wedges among
/// height-1 cores, and the point is the one-point space.
pub fn min_model_search(p: usize, q: usize, n_max: usize) -> Result<MinModel, EnumerateError> {
    let height = if q > 0 { 2 } else { 1 };
    let cap = if q > 0 { MAX_HEIGHT2_N } else { MAX_HEIGHT1_N };
    if n_max > cap {
        return Err(EnumerateError::SizeTooLarge { n: n_max, max: cap });
    }
    let mut result = MinModel {
        circles: p,
        spheres: q,
        n_max,
        height,
        n_min: None,
        models: Vec::new(),
    };
    if (p, q) == (0, 0) {
        if n_max >= 1 {
            result.height = 0;
            result.n_min = Some(1);
            result.models = vec![classify_poset(&Poset::chain(1))];
        }
        return Ok(result);
    }
    for n in 1..=n_max {
        let inv = inventory(n, height)?;
        let models: Vec<ClassificationRecord> = inv
            .records
            .into_iter()
            .filter(|r| r.label.wedge_type() == Some((p, q)))
            .collect();
        if !models.is_empty() {
            result.n_min = Some(n);
            result.models = models;
            break;
        }
    }
    Ok(result)
}

/// `min { i + j : i, j >= 2, (i - 1)(j - 1) >= n }`.
pub fn circle_wedge_size(n: usize) -> usize {
    assert!(n >= 1, "circle_wedge_size needs n >= 1");
    (2..=n + 1)
        .map(|i| {
            let j = n.div_ceil(i - 1) + 1;
            i + j.max(2)
        })
        .min()
        .unwrap()
}

fn ceil_sqrt(n: usize) -> usize {
    let r = n.isqrt();
    if r * r == n {
        r
    } else {
        r + 1
    }
}

/// `min(2[sqrt(n) + 1], 2[(1 + sqrt(1 + 4n)) / 2] + 1)` with the bracket read
/// as ceiling and as floor, in exact integer arithmetic.
pub fn bracket_readings(n: usize) -> (usize, usize) {
    // [(1 + sqrt(1 + 4n)) / 2] compares k(k - 1) against n
    let ceil_k = (1..).find(|k: &usize| k * (k - 1) >= n).unwrap();
    let floor_k = (1..)
        .take_while(|k: &usize| k * (k - 1) <= n)
        .last()
        .unwrap();
    let ceiling = (2 * (ceil_sqrt(n) + 1)).min(2 * ceil_k + 1);
    let floor = (2 * (n.isqrt() + 1)).min(2 * floor_k + 1);
    (ceiling, floor)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportLine {
    pub check: String,
    pub expected: Value,
    pub observed: Value,
    pub pass: bool,
    /// Canonical codes behind a failing count.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub codes: Vec<String>,
}

/// Values with no stated expectation, recorded as found.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Observation {
    pub topic: String,
    pub observed: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PaperReport {
    pub lines: Vec<ReportLine>,
    pub observations: Vec<Observation>,
}

impl PaperReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }

    pub fn failures(&self) -> Vec<&ReportLine> {
        self.lines.iter().filter(|l| !l.pass).collect()
    }

    pub fn line(&self, check: &str) -> Option<&ReportLine> {
        self.lines.iter().find(|l| l.check == check)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report JSON is serializable")
    }
}

impl fmt::Display for PaperReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.lines.iter().map(|l| l.check.len()).max().unwrap_or(5);
        writeln!(
            f,
            "{:<4}  {:<width$}  {:<24}  observed",
            "", "check", "expected"
        )?;
        for l in &self.lines {
            let status = if l.pass { "ok" } else { "FAIL" };
            writeln!(
                f,
                "{status:<4}  {:<width$}  {:<24}  {}",
                l.check,
                l.expected.to_string(),
                l.observed
            )?;
            if !l.codes.is_empty() {
                writeln!(f, "      codes: {}", l.codes.join(" "))?;
            }
        }
        let failed = self.failures().len();
        writeln!(f, "{} checks, {} failed", self.lines.len(), failed)?;
        for o in &self.observations {
            writeln!(f, "note  {}: {}", o.topic, o.observed)?;
        }
        Ok(())
    }
}

struct Report {
    lines: Vec<ReportLine>,
    observations: Vec<Observation>,
}

impl Report {
    fn check(&mut self, id: impl Into<String>, expected: Value, observed: Value) {
        let pass = expected == observed;
        self.lines.push(ReportLine {
            check: id.into(),
            expected,
            observed,
            pass,
            codes: Vec::new(),
        });
    }

    fn count(&mut self, id: String, expected: usize, records: &[&ClassificationRecord]) {
        let pass = records.len() == expected;
        self.lines.push(ReportLine {
            check: id,
            expected: json!(expected),
            observed: json!(records.len()),
            pass,
            codes: if pass {
                Vec::new()
            } else {
                records.iter().map(|r| r.code.to_string()).collect()
            },
        });
    }

    fn note(&mut self, topic: impl Into<String>, observed: Value) {
        self.observations.push(Observation {
            topic: topic.into(),
            observed,
        });
    }
}

fn fixture(id: &str) -> &'static Poset {
    fixtures::get(id)
        .unwrap_or_else(|| panic!("missing fixture {id}"))
        .poset()
}

fn status_text(s: Option<SimplificationStatus>) -> Value {
    match s {
        Some(SimplificationStatus::Inconclusive(_)) => json!("inconclusive"),
        Some(s) => json!(s.to_string()),
        None => json!("disconnected"),
    }
}

/// Height-1 minimum for each `k`: point count and edge counts of minimizers.
fn height1_minimum(k: usize, inventories: &[Inventory]) -> Option<(usize, Vec<usize>)> {
    inventories.iter().find_map(|inv| {
        let hits = inv.with_type(k, 0);
        (!hits.is_empty()).then(|| (inv.n, hits.iter().map(|r| r.covers.len()).collect()))
    })
}

/// Runs every stated expectation and records pass or fail per line, sorted by
/// check id.
pub fn verify_paper() -> PaperReport {
    let mut r = Report {
        lines: Vec::new(),
        observations: Vec::new(),
    };

    let inv: BTreeMap<usize, Inventory> = [5, 6, 7, 8]
        .into_par_iter()
        .map(|n| (n, inventory(n, 2).expect("n within cap")))
        .collect();
    r.check("cores.h2.n5.total", json!(0), json!(inv[&5].records.len()));
    r.check("cores.h2.n6.total", json!(1), json!(inv[&6].records.len()));
    let expected_counts: [(usize, (usize, usize), usize); 8] = [
        (6, (0, 1), 1),
        (7, (1, 1), 2),
        (7, (0, 2), 3),
        (8, (2, 1), 7),
        (8, (3, 1), 1),
        (8, (1, 2), 6),
        (8, (0, 3), 5),
        (8, (0, 4), 3),
    ];
    for (n, (p, q), want) in expected_counts {
        r.count(
            format!("cores.h2.n{n}.({p},{q})"),
            want,
            &inv[&n].with_type(p, q),
        );
    }
    let six = &inv[&6].records;
    r.check(
        "cores.h2.n6.is_double_suspension",
        json!(true),
        json!(six.len() == 1 && six[0].code == Poset::sphere_model(2).canonical_code()),
    );
    for n in [7, 8] {
        let stated: Vec<String> = expected_counts
            .iter()
            .filter(|e| e.0 == n)
            .map(|e| format!("({},{})", e.1 .0, e.1 .1))
            .collect();
        let extra: BTreeMap<&String, &usize> = inv[&n]
            .counts
            .iter()
            .filter(|(k, _)| !stated.contains(k))
            .collect();
        r.note(format!("cores.h2.n{n}.other_types"), json!(extra));
        let min_roles = inv[&n]
            .records
            .iter()
            .map(|rec| {
                let roles = rec.poset().role_partition();
                roles.maximal.len().min(roles.minimal.len())
            })
            .min()
            .unwrap_or(0);
        r.check(
            format!("cores.h2.n{n}.two_maximal_two_minimal"),
            json!(true),
            json!(min_roles >= 2),
        );
    }

    for (id, f, ranks, betti, euler) in [
        ("fig17a", [8, 14, 4], [7, 4], [1, 3, 0], -2),
        ("fig14c", [8, 16, 8], [7, 7], [1, 2, 1], 0),
    ] {
        let h = homology(&order_complex(fixture(id)));
        r.check(
            format!("homology.{id}.f_vector"),
            json!(f),
            json!(h.f_vector),
        );
        r.check(
            format!("homology.{id}.f2_ranks"),
            json!(ranks),
            json!(h.f2_ranks),
        );
        r.check(format!("homology.{id}.betti"), json!(betti), json!(h.betti));
        r.check(format!("homology.{id}.euler"), json!(euler), json!(h.euler));
        r.check(
            format!("homology.{id}.torsion_free"),
            json!(true),
            json!(!h.has_torsion()),
        );
    }

    for (id, want) in [
        ("fig17a", "free of rank 3"),
        ("fig14c", "free of rank 2"),
        ("fig04a", "free of rank 1"),
        ("fig05a", "trivial"),
        ("fig05a_star", "trivial"),
        ("fig05b", "trivial"),
    ] {
        r.check(
            format!("pi1.{id}"),
            json!(want),
            status_text(pi1_status(fixture(id))),
        );
    }

    for f in fixtures::all() {
        let code = f.poset().canonical_code();
        if let Some(d) = &f.meta.dual_of {
            let other = fixture(d).dual().canonical_code();
            r.check(
                format!("duality.{}~op({d})", f.id),
                json!(true),
                json!(code == other),
            );
        }
        if f.meta.self_dual {
            let dual = f.poset().dual().canonical_code();
            r.check(
                format!("self_dual.{}", f.id),
                json!(true),
                json!(code == dual),
            );
        }
        if let Some(t) = f.meta.expected {
            let rec = classify_poset(f.poset());
            r.check(
                format!("fixture_type.{}", f.id),
                json!([t.circles, t.spheres]),
                json!(rec.label.wedge_type()),
            );
            let n = f.poset().len();
            if f.poset().height() == 2 && (n == 7 || n == 8) {
                r.check(
                    format!("membership.{}", f.id),
                    json!(true),
                    json!(inv[&n].contains(&code)),
                );
            }
        }
    }

    for other in ["fig18d", "fig18e"] {
        r.check(
            format!("homeomorphic.fig18c~{other}"),
            json!(true),
            json!(fixture("fig18c").is_isomorphic(fixture(other))),
        );
    }
    r.check(
        "homogeneous.fig06",
        json!(true),
        json!(fixture("fig06").is_homogeneous()),
    );
    r.check(
        "homogeneous.fig04a",
        json!(false),
        json!(fixture("fig04a").is_homogeneous()),
    );

    let top = circle_wedge_size(6);
    let h1: Vec<Inventory> = (1..=top)
        .into_par_iter()
        .map(|n| inventory(n, 1).expect("n within cap"))
        .collect();
    for k in 1..=6 {
        let want = circle_wedge_size(k);
        let found = height1_minimum(k, &h1);
        r.check(
            format!("height1_law.b1={k}.points"),
            json!(want),
            json!(found.as_ref().map(|f| f.0)),
        );
        let edges_ok = found
            .as_ref()
            .is_some_and(|(n, edges)| edges.iter().all(|&e| e == n + k - 1));
        r.check(
            format!("height1_law.b1={k}.edges"),
            json!(true),
            json!(edges_ok),
        );
        let (ceiling, floor) = bracket_readings(k);
        r.note(
            format!("bracket.n{k}"),
            json!({"min_formula": want, "ceiling": ceiling, "floor": floor}),
        );
    }

    for (p, q, n, count) in [(1, 0, 4, 1), (1, 1, 7, 2), (0, 2, 7, 3)] {
        let m = min_model_search(p, q, 8).expect("n within cap");
        r.check(
            format!("min_model.({p},{q})"),
            json!({"n": n, "models": count}),
            json!({"n": m.n_min, "models": m.models.len()}),
        );
    }

    for id in ["fig15a", "fig15b", "fig15c", "fig15d", "fig15e"] {
        let p = fixture(id);
        let rec = classify_poset(p);
        r.note(
            format!("configuration.{id}"),
            json!({
                "connected": p.is_connected(),
                "beat_points": p.beat_points().len(),
                "betti": rec.homology.betti,
                "type": rec.label.wedge_type(),
            }),
        );
    }

    r.lines.sort_by(|a, b| a.check.cmp(&b.check));
    PaperReport {
        lines: r.lines,
        observations: r.observations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(betti: Vec<usize>, torsion: Vec<Vec<u64>>) -> HomologyProfile {
        HomologyProfile {
            f_vector: vec![],
            betti,
            torsion,
            euler: 0,
            f2_ranks: vec![],
        }
    }

    #[test]
    fn label_rules() {
        let h = profile(vec![1, 2, 1], vec![vec![], vec![], vec![]]);
        assert_eq!(
            label(&h, Some(&SimplificationStatus::FreeOfRank(2)), 2),
            HomotopyTypeLabel::Wedge {
                circles: 2,
                spheres: 1,
                pi1_verified: true
            }
        );
        let h = profile(vec![1, 0, 0], vec![vec![], vec![], vec![]]);
        assert_eq!(
            label(&h, Some(&SimplificationStatus::Trivial), 2),
            HomotopyTypeLabel::Wedge {
                circles: 0,
                spheres: 0,
                pi1_verified: true
            }
        );
        let h = profile(vec![1, 3, 0], vec![vec![], vec![], vec![]]);
        let inconclusive = SimplificationStatus::Inconclusive(
            crate::grouppres::GroupPresentation::new(1, vec![vec![1, 1]]),
        );
        assert_eq!(
            label(&h, Some(&inconclusive), 2),
            HomotopyTypeLabel::Wedge {
                circles: 3,
                spheres: 0,
                pi1_verified: false
            }
        );
        let torsion = profile(vec![1, 0, 0], vec![vec![], vec![2], vec![]]);
        assert_eq!(label(&torsion, None, 2), HomotopyTypeLabel::Unrecognized);
        let two = profile(vec![2, 0], vec![vec![], vec![]]);
        assert_eq!(label(&two, None, 1), HomotopyTypeLabel::Unrecognized);
        assert_eq!(label(&h, None, 3), HomotopyTypeLabel::Unrecognized);
    }

    #[test]
    fn label_display_and_key() {
        let l = HomotopyTypeLabel::Wedge {
            circles: 1,
            spheres: 2,
            pi1_verified: false,
        };
        assert_eq!(l.to_string(), "S1 v S2 v S2 (pi1 unverified)");
        assert_eq!(l.key(), "(1,2)");
        assert_eq!(HomotopyTypeLabel::Unrecognized.key(), "unrecognized");
    }

    #[test]
    fn wedge_sizes() {
        let got: Vec<usize> = (1..=6).map(circle_wedge_size).collect();
        assert_eq!(got, [4, 5, 6, 6, 7, 7]);
    }

    #[test]
    fn bracket_ceiling_matches_small_n() {
        assert_eq!(bracket_readings(1), (4, 3));
        for n in 1..=30 {
            assert_eq!(bracket_readings(n).0, circle_wedge_size(n), "n = {n}");
        }
    }

    #[test]
    fn classify_fence() {
        let rec = classify_poset(&Poset::sphere_model(1));
        assert_eq!(rec.label.wedge_type(), Some((1, 0)));
        assert!(rec.label.pi1_verified());
        assert!(rec.self_dual && rec.homogeneous && !rec.asphericity_checked);
        assert_eq!(rec.figures, ["s1_fence"]);
        assert!(rec.poset().is_isomorphic(&Poset::sphere_model(1)));
    }

    #[test]
    fn point_model() {
        let m = min_model_search(0, 0, 3).unwrap();
        assert_eq!(m.n_min, Some(1));
        assert_eq!(m.models.len(), 1);
    }

    #[test]
    fn min_model_not_found() {
        let m = min_model_search(1, 1, 6).unwrap();
        assert_eq!(m.n_min, None);
        assert!(m.models.is_empty());
        assert!(min_model_search(0, 1, 11).is_err());
    }

    #[test]
    fn small_inventories() {
        let six = inventory(6, 2).unwrap();
        assert_eq!(six.records.len(), 1);
        assert_eq!(six.counts.get("(0,1)"), Some(&1));
        assert!(inventory(5, 2).unwrap().records.is_empty());
    }
}
