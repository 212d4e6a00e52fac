//! Exact computations in the two-row Specht module `S^(n,n)`.
//!
//! Three models of the same `S_2n`-module live side by side:
//!
//! * polytabloids `v_T` indexed by standard tableaux ([`young`], [`actions`]),
//! * cup diagrams (noncrossing matchings), the web basis ([`diagrams`]),
//! * arbitrary perfect matchings modulo crossing resolution ([`resolution`]).
//!
//! [`transition`] assembles the change-of-basis matrix between polytabloids
//! and webs and checks its triangularity and positivity against the tableau
//! graph order.

pub mod actions;
pub mod diagrams;
pub mod error;
pub mod export;
pub mod resolution;
pub mod transition;
pub mod vector;
pub mod young;

pub use actions::{
    act_matching, act_polytabloid, act_web, f_on_vector, garnir_straighten,
    garnir_straighten_vector, kl_product, psi_web, DiagramVector, GeneralTwoRowTableau,
    TabloidVector,
};
pub use diagrams::{
    crossings, f_matching, is_noncrossing, phi, phi_inverse, swap_dots, Crossing, CupDiagram,
    Matching,
};
pub use error::{Error, Result};
pub use resolution::{
    build_resolution_graph, check_witness, resolve_full, resolve_step, witness_path, FirstCrossing,
    Move, MoveKind, RandomStrategy, ResolutionGraph, Scripted, SinkMultiset, Strategy,
};
pub use transition::{
    inverse_matrix, test_order_conjecture, transition_matrix, verify_positivity, verify_psi,
    verify_unitriangular, TransitionMatrix, VerificationReport,
};
pub use vector::SparseVector;
pub use young::{
    build_tableau_graph, classify, coxeter_length, enumerate_syt, first_row_dominates,
    perm_between, Adjacency, Permutation, StandardTableau, TableauGraph,
};

/// Resource limits shared by every size-sensitive operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest accepted `n` (the shape is `(n,n)`).
    pub max_n: usize,
    /// Nodes a single crossing-resolution tree may visit.
    pub node_budget: usize,
    /// Rewrite steps a single straightening may take.
    pub step_budget: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: 8,
            node_budget: 1_000_000,
            step_budget: 1_000_000,
        }
    }
}
