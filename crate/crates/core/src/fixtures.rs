//! Posets transcribed from published Hasse diagrams, bundled with the crate.
//!
//! Each fixture is a text-format poset; `manifest.json` records a caption,
//! the expected wedge type when one is claimed for it, and duality links.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Deserialize;

use crate::poset::{parse_text, CanonicalCode, Poset};

const FILES: &[(&str, &str)] = &[
    ("chain2", include_str!("../../../fixtures/chain2.poset")),
    ("fig02", include_str!("../../../fixtures/fig02.poset")),
    ("fig04a", include_str!("../../../fixtures/fig04a.poset")),
    (
        "fig04a_star",
        include_str!("../../../fixtures/fig04a_star.poset"),
    ),
    ("fig05a", include_str!("../../../fixtures/fig05a.poset")),
    (
        "fig05a_star",
        include_str!("../../../fixtures/fig05a_star.poset"),
    ),
    ("fig05b", include_str!("../../../fixtures/fig05b.poset")),
    ("fig06", include_str!("../../../fixtures/fig06.poset")),
    ("fig07", include_str!("../../../fixtures/fig07.poset")),
    ("fig09", include_str!("../../../fixtures/fig09.poset")),
    ("fig11", include_str!("../../../fixtures/fig11.poset")),
    ("fig12", include_str!("../../../fixtures/fig12.poset")),
    ("fig13", include_str!("../../../fixtures/fig13.poset")),
    ("fig14a", include_str!("../../../fixtures/fig14a.poset")),
    (
        "fig14a_star",
        include_str!("../../../fixtures/fig14a_star.poset"),
    ),
    ("fig14b", include_str!("../../../fixtures/fig14b.poset")),
    ("fig14c", include_str!("../../../fixtures/fig14c.poset")),
    (
        "fig14c_star",
        include_str!("../../../fixtures/fig14c_star.poset"),
    ),
    ("fig14d", include_str!("../../../fixtures/fig14d.poset")),
    (
        "fig14d_star",
        include_str!("../../../fixtures/fig14d_star.poset"),
    ),
    ("fig15a", include_str!("../../../fixtures/fig15a.poset")),
    ("fig15b", include_str!("../../../fixtures/fig15b.poset")),
    ("fig15c", include_str!("../../../fixtures/fig15c.poset")),
    ("fig15d", include_str!("../../../fixtures/fig15d.poset")),
    ("fig15e", include_str!("../../../fixtures/fig15e.poset")),
    ("fig16a", include_str!("../../../fixtures/fig16a.poset")),
    (
        "fig16a_star",
        include_str!("../../../fixtures/fig16a_star.poset"),
    ),
    ("fig16b", include_str!("../../../fixtures/fig16b.poset")),
    ("fig17a", include_str!("../../../fixtures/fig17a.poset")),
    (
        "fig17a_star",
        include_str!("../../../fixtures/fig17a_star.poset"),
    ),
    ("fig17b", include_str!("../../../fixtures/fig17b.poset")),
    (
        "fig17b_star",
        include_str!("../../../fixtures/fig17b_star.poset"),
    ),
    ("fig17c", include_str!("../../../fixtures/fig17c.poset")),
    (
        "fig17c_star",
        include_str!("../../../fixtures/fig17c_star.poset"),
    ),
    ("fig17d", include_str!("../../../fixtures/fig17d.poset")),
    (
        "fig17d_star",
        include_str!("../../../fixtures/fig17d_star.poset"),
    ),
    ("fig17e", include_str!("../../../fixtures/fig17e.poset")),
    (
        "fig17e_star",
        include_str!("../../../fixtures/fig17e_star.poset"),
    ),
    ("fig17f", include_str!("../../../fixtures/fig17f.poset")),
    (
        "fig17f_star",
        include_str!("../../../fixtures/fig17f_star.poset"),
    ),
    ("fig17g", include_str!("../../../fixtures/fig17g.poset")),
    (
        "fig17g_star",
        include_str!("../../../fixtures/fig17g_star.poset"),
    ),
    ("fig18a", include_str!("../../../fixtures/fig18a.poset")),
    (
        "fig18a_star",
        include_str!("../../../fixtures/fig18a_star.poset"),
    ),
    ("fig18b", include_str!("../../../fixtures/fig18b.poset")),
    (
        "fig18b_star",
        include_str!("../../../fixtures/fig18b_star.poset"),
    ),
    ("fig18c", include_str!("../../../fixtures/fig18c.poset")),
    (
        "fig18c_star",
        include_str!("../../../fixtures/fig18c_star.poset"),
    ),
    ("fig18d", include_str!("../../../fixtures/fig18d.poset")),
    (
        "fig18d_star",
        include_str!("../../../fixtures/fig18d_star.poset"),
    ),
    ("fig18e", include_str!("../../../fixtures/fig18e.poset")),
    (
        "fig18e_star",
        include_str!("../../../fixtures/fig18e_star.poset"),
    ),
    ("fig19", include_str!("../../../fixtures/fig19.poset")),
    ("fig20", include_str!("../../../fixtures/fig20.poset")),
    ("fig21a", include_str!("../../../fixtures/fig21a.poset")),
    (
        "fig21a_star",
        include_str!("../../../fixtures/fig21a_star.poset"),
    ),
    ("fig21b", include_str!("../../../fixtures/fig21b.poset")),
    ("fig21c", include_str!("../../../fixtures/fig21c.poset")),
    (
        "fig21c_star",
        include_str!("../../../fixtures/fig21c_star.poset"),
    ),
    ("s1_fence", include_str!("../../../fixtures/s1_fence.poset")),
    ("s2_model", include_str!("../../../fixtures/s2_model.poset")),
];

const MANIFEST: &str = include_str!("../../../fixtures/manifest.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
pub struct WedgeType {
    pub circles: usize,
    pub spheres: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct FixtureMeta {
    pub caption: String,
    #[serde(default)]
    pub expected: Option<WedgeType>,
    /// Id of the fixture this one is drawn as the opposite of.
    #[serde(default)]
    pub dual_of: Option<String>,
    #[serde(default)]
    pub self_dual: bool,
}

#[derive(Debug, Clone)]
pub struct Fixture {
    pub id: &'static str,
    pub source: &'static str,
    pub meta: FixtureMeta,
    poset: Poset,
}

impl Fixture {
    pub fn poset(&self) -> &Poset {
        &self.poset
    }
}

fn load() -> Vec<Fixture> {
    let mut manifest: BTreeMap<String, FixtureMeta> =
        serde_json::from_str(MANIFEST).expect("fixture manifest is valid JSON");
    let list: Vec<Fixture> = FILES
        .iter()
        .map(|&(id, source)| {
            let poset = parse_text(source).unwrap_or_else(|e| panic!("fixture {id}: {e}"));
            let meta = manifest
                .remove(id)
                .unwrap_or_else(|| panic!("fixture {id} missing from manifest"));
            Fixture {
                id,
                source,
                meta,
                poset,
            }
        })
        .collect();
    assert!(
        manifest.is_empty(),
        "manifest lists unknown fixtures: {:?}",
        manifest.keys()
    );
    list
}

/// Every bundled fixture, sorted by id.
pub fn all() -> &'static [Fixture] {
    static ALL: OnceLock<Vec<Fixture>> = OnceLock::new();
    ALL.get_or_init(load)
}

pub fn get(id: &str) -> Option<&'static Fixture> {
    all().iter().find(|f| f.id == id)
}

/// Ids of the fixtures isomorphic to the poset with this code.
pub fn matching(code: &CanonicalCode) -> Vec<String> {
    static BY_CODE: OnceLock<BTreeMap<CanonicalCode, Vec<String>>> = OnceLock::new();
    let map = BY_CODE.get_or_init(|| {
        let mut m: BTreeMap<CanonicalCode, Vec<String>> = BTreeMap::new();
        for f in all() {
            m.entry(f.poset.canonical_code())
                .or_default()
                .push(f.id.to_owned());
        }
        m
    });
    map.get(code).cloned().unwrap_or_default()
}
