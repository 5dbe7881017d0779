//! Computational engine for Sylow graphs of finite permutation groups.
//!
//! The crate constructs finite groups as permutation groups (classical
//! families, `PSL₂(q)` and its Frobenius extensions, the shipped sporadic
//! generator data, direct products), computes Sylow subgroups together with
//! their normalizers, centralizers and automisers, assembles the prime
//! graphs Γ(G) and Δ(G), runs the per-prime hypothesis test, and decides
//! membership in locally defined formations given by symmetric coverings.
//!
//! Everything is deterministic: group construction, element enumeration,
//! subgroup sweeps and exports produce identical results on every run.

pub mod appendix;
pub mod chain;
pub mod constructors;
pub mod error;
pub mod formation;
pub mod gf;
pub mod graph;
pub mod group;
pub mod perm;
pub mod subgroup;

pub use appendix::{
    appendix_item, computable_group, reference_lines, report_lines, verify_item, AppendixItem,
    ClaimOutcome, DivisibilityClaim, VerificationReport, APPENDIX,
};
pub use constructors::{
    alternating, cyclic, dihedral, direct_product, janko1, janko2, mathieu, parse_group_expr, psl2,
    psl2_frobenius_extension, realize, symmetric, GroupExpr,
};
pub use error::{Error, Result};
pub use formation::{
    class_membership, fundamental_local_definition, is_partition, lattice_formation_membership,
    lemma1_membership, lf_membership, local_definition_from_covering, n_closure_test,
    parse_formation_spec, validate_symmetric, with_solvable_intersection, ClassSpec, Covering,
    FormationSpec, LfReport, LfTraceRow, LocalDefinition, NClosureReport, NClosureRow,
    SymmetryReport,
};
pub use graph::{
    export_dot, export_json, gamma_graph, hypothesis_check, sylow_data, GraphVariant,
    HypothesisReport, HypothesisRow, SylowData, SylowGraph,
};
pub use group::{Caps, PermGroup, Subgroup, DEFAULT_EXHAUSTIVE_CAP, DEFAULT_QUOTIENT_CAP};
pub use perm::{parse_generator_file, prime_divisors, Permutation};
pub use subgroup::{
    action_kernel_on_factor, center, centralizer, chief_series, derived_series, derived_subgroup,
    is_nilpotent, is_perfect, is_solvable, normal_closure, normalizer, perfect_core, quotient,
    sylow, ChiefFactor, ChiefSeries, QuotientMap,
};
