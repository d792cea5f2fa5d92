//! Circulant graphs `C(m,p)` and their distinguishing numbers.
//!
//! `C(m,p)` is the circulant graph of order `n = m * p` generated by the
//! residues `{p-1+rp, p+1+rp : 0 <= r < m}`: two vertices are adjacent
//! exactly when their residues mod `p` differ by one, so the graph is a
//! cycle of `p` stable modules of size `m`. A vertex labeling is
//! *distinguishing* when no automorphism other than the identity preserves
//! it, and the distinguishing number `D(G)` is the least number of labels
//! that admits one.
//!
//! The crate provides, per module:
//!
//! * [`graph`] — general simple graphs, circulant construction and
//!   validation, module partitions, stability/module predicates, distances,
//!   complete-multipartite detection;
//! * [`perm`] — permutation algebra, exhaustive automorphism enumeration
//!   for desk-scale graphs, and the structured automorphisms of `C(m,p)`;
//! * [`distinguishing`] — verification by color-constrained search, the
//!   exact distinguishing number with a canonical witness, closed forms,
//!   the explicit `(m+1)`-labeling, and the constructive breaker for
//!   labelings with at most `m` labels;
//! * [`family`] — same-order graph families hitting a prescribed list of
//!   distinguishing numbers;
//! * [`json`] / [`dot`] — the wire formats used by the `circdist` binary.
//!
//! ```
//! use circdist::{CmpSpec, cmp_distinguishing_formula, exact_distinguishing_number};
//!
//! let spec = CmpSpec::new(2, 5)?;
//! let graph = spec.build();
//! let (d, witness) = exact_distinguishing_number(&graph, 10)?;
//! assert_eq!(d, 3);
//! assert_eq!(d, cmp_distinguishing_formula(&spec)?);
//! assert!(circdist::is_distinguishing(&graph, &witness));
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```
//!
//! The runnable examples under `examples/` walk through each capability;
//! `cargo run --example exact_vs_formula` is a good place to start.

#![forbid(unsafe_code)]

pub mod distinguishing;
pub mod dot;
pub mod family;
pub mod graph;
pub mod json;
pub mod perm;

pub use distinguishing::{
    break_labeling, cmp_distinguishing_formula, exact_distinguishing_number,
    exact_distinguishing_number_opts, explicit_labeling, is_distinguishing,
    multipartite_distinguishing_formula, neighborhood_label_signature, preserving_automorphism,
    random_labeling, restricted_growth_strings, DistinguishingError, Labeling, MultipartiteShape,
    OracleOptions, DEFAULT_SEARCH_CAP,
};
pub use family::{
    build_connected_family, build_disconnected_family, certify_connected_plan,
    minimal_common_order, DisconnectedMember, DisconnectedPlan, FamilyError, FamilyPlan,
    MemberCertificate,
};
pub use graph::{CirculantSpec, CmpSpec, Graph, GraphError, ModulePartition};
pub use perm::{
    enumerate_automorphisms, first_nontrivial_automorphism, is_automorphism, label_sort,
    module_permutation, reflection, AutGroup, PermError, Permutation, DEFAULT_AUT_CAP,
};
