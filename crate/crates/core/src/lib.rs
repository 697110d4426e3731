//! Finite T0-spaces as posets: cores, order complexes, integral homology,
//! edge-path group presentations, and exhaustive enumeration of small cores
//! classified by wedge-of-spheres type.

pub mod classify;
pub mod complex;
pub mod enumerate;
pub mod fixtures;
pub mod grouppres;
pub mod poset;

pub use classify::{
    circle_wedge_size, classify_poset, inventory, label, min_model_search, verify_paper,
    ClassificationRecord, HomotopyTypeLabel, MinModel, PaperReport,
};
pub use complex::{homology, order_complex, HomologyProfile, SimplicialComplex};
pub use enumerate::{
    enumerate_height1_cores, enumerate_height2_cores, enumerate_posets, EnumerateError, Inventory,
    LevelShape,
};
pub use grouppres::{presentation, tietze_simplify, GroupPresentation, SimplificationStatus};
pub use poset::{CanonicalCode, CoverRelationList, ElementSet, Poset, PosetError};
