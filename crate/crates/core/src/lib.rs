//! Exhaustive laboratory for topologies on small finite ground sets.
//!
//! The library represents subsets of an n-point ground set (n ≤ 64) as
//! bitmasks and topologies as canonical sorted lists of open-set masks.
//! On top of that base it provides:
//!
//! - interiors, closures, regular open sets, semiregularizations, and the
//!   meager/Baire notions that survive on finite spaces ([`topology`],
//!   [`baire`]);
//! - a difference hierarchy over the closed sets of a topology, graded by
//!   a union-arity bound ν and a level index ξ, together with the least
//!   level whose classes form a neighborhood basis or π-basis of a finer
//!   topology ([`borel`]);
//! - filtrations between a pair of comparable topologies σ ⊆ τ: validity
//!   checks for the interior condition and its weak variant, prefix joins,
//!   exhaustive enumeration of short filtrations, and the slowest
//!   filtration, the stagewise-minimal one ([`filtration`]);
//! - slight set families along a weak filtration: the minus/plus towers,
//!   graded closure operators, and verifiers for the structural facts the
//!   stabilization arguments rest on ([`slight`]);
//! - exhaustive enumeration of all topologies on up to six points
//!   ([`enumerate`]);
//! - sweep drivers that run the stabilization checks over every comparable
//!   pair on n points, hypothesis-dropping counterexample searches, and
//!   the serializable report types they emit ([`check`], [`report`]).
//!
//! Everything is deterministic: families and reports are kept in canonical
//! sorted order, and sweeps produce identical output at any thread count.

pub mod baire;
pub mod borel;
pub mod check;
pub mod enumerate;
pub mod error;
pub mod filtration;
pub mod report;
pub mod slight;
pub mod space;
pub mod topology;

pub use baire::{
    has_kappa_baire_property, is_kappa_baire, is_kappa_meager, is_nowhere_dense, Kappa,
};
pub use borel::{
    bor, borel_algebra, min_pi_basis_level, min_sigma_pibasis_level, p_level, pi_class, s_level,
    sigma_class, HierarchySnapshot, LevelIndex,
};
pub use check::{
    check_theorem_stab2, check_theorem_stab3, search_counterexamples, sweep, DroppedHypothesis,
    SweepConfig, SweepOutput, TheoremSelection,
};
pub use enumerate::{count_topologies, enumerate_topologies, MAX_ENUMERATION_N, MAX_EXHAUSTIVE_N};
pub use error::{Error, Result};
pub use filtration::{
    filtrations_between, is_filtration, is_weak_filtration, join_prefix, slowest_filtration,
    stabilization_ordinal, weak_filtrations_between, Filtration, StageOrdinal,
};
pub use report::{CheckReport, Instance, SweepSummary, Verdict, Witness, XI_CONVENTION};
pub use slight::{
    compute_slight, slight_core, verify_closed_approximation, verify_closure_excess,
    verify_open_envelope, verify_slight_meager, verify_slight_monotone, SlightFamilies,
    MAX_SLIGHT_N,
};
pub use space::{GroundSet, PointSet};
pub use topology::{join_topologies, SetFamily, Topology};
