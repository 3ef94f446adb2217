//! Self-complementary graphs and their structure.
//!
//! A graph is self-complementary (sc) when it is isomorphic to its own
//! complement; the isomorphism, read as a permutation of the vertices,
//! is an antimorphism. This crate provides:
//!
//! - graphs on up to 62 vertices with complement, induced subgraphs,
//!   canonical labeling and the graph6 line format;
//! - antimorphism search, including variants constrained to
//!   power-of-two or prescribed cycle types;
//! - generators: the P4- and J-block constructions and exhaustive
//!   enumeration of sc-graphs up to isomorphism;
//! - constructive partition of any sc-graph into induced P4s (plus one
//!   leftover vertex when n = 4k+1);
//! - skew and symmetric partition detection, induced-C5 search, the
//!   16-case decomposition for antimorphisms of type (4, 4k), and a
//!   per-graph verdict for the C5/skew/symmetric trichotomy.
//!
//! Everything is pure and allocation-only; the crate builds without
//! `std`.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod antimorphism;
pub mod canon;
pub mod construct;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod p4;
pub mod perm;
pub mod structure;

pub use antimorphism::{
    check_sachs_ringel, find_antimorphism, find_antimorphism_with_cycle_lengths,
    find_power_of_two_antimorphism, is_antimorphism,
};
pub use canon::{are_isomorphic, canonical_form, canonical_string, CanonicalForm};
pub use construct::{enumerate_sc_graphs, enumerate_sc_graphs_with_guard, j_construction, p4_construction, OrbitChoice};
pub use error::Error;
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use p4::{
    lemma_base, lemma_gibbs, p4_partition, verify_p4_partition, zmod_pair_partition,
    CentralEdge, GibbsBranch, GibbsWitness, LemmaBaseOutcome, P4Partition, PairPartition,
    QuadCycleView,
};
pub use perm::{parse_cycles, CycleDecomposition, Permutation};
pub use structure::{
    akiyama_harary_check, conjecture_check, conjecture_check_with_guards, find_induced_c5,
    find_skew_partition, find_skew_partition_with_guard, find_symmetric_partition,
    find_symmetric_partition_with_guard, symmetric_to_2join_shape, theorem_m_decompose,
    verify_c5, verify_skew_partition, verify_symmetric_partition, DetectorGuards,
    EndVertexDecomposition, SkewPartition, StructureReport, StructureWitness,
    SymmetricPartition, TheoremMOutcome, TwoJoinReport, WitnessKind,
};

/// Small named graphs shared by tests across modules.
#[cfg(test)]
pub(crate) mod fixtures {
    use crate::graph::Graph;

    /// Triangle 0-1-2 with horns 3 (on 0) and 4 (on 1).
    pub fn bull() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)])
    }
}
