//! Balanced decompositions of colored graphs.
//!
//! A *balanced coloring* of a graph splits its vertices into three disjoint
//! classes `P1`, `P2`, `X` with `|P1| = |P2|`. A *balanced decomposition* is a
//! partition of the vertices into connected parts, each containing equally
//! many `P1` and `P2` vertices. This crate decides, constructively, whether a
//! given coloring admits a balanced decomposition whose parts all have at
//! most 3 vertices:
//!
//! * if yes, it returns such a decomposition, found as a perfect matching in
//!   an auxiliary bipartite graph ([`reduction`], [`matching`]);
//! * if no, it returns a vertex cut of size at most `⌊n/2⌋ − 1`
//!   ([`certificate`]), proving the graph is not `⌊n/2⌋`-connected.
//!
//! On graphs that are *not* `⌊n/2⌋`-connected it can also construct an
//! adversarial coloring that defeats every decomposition with parts of at
//! most 3 vertices ([`coloring::adversarial_coloring`]). A brute-force
//! [`oracle`] computes exact balanced decomposition numbers on small graphs
//! and backs the test suite.
//!
//! ```
//! use baldec::{decompose_or_certify, BalancedColoring, Graph, Outcome};
//!
//! let g = Graph::complete(4);
//! let c = BalancedColoring::from_slices(&[0], &[1], &[2, 3]);
//! match decompose_or_certify(&g, &c).unwrap() {
//!     Outcome::Decomposed(d) => assert_eq!(d.parts.len(), 3),
//!     Outcome::Certified(_) => unreachable!("K4 is 2-connected"),
//! }
//! ```
//!
//! The `examples/` directory has one runnable program per capability; the
//! thin `baldec` binary exposes the same operations as subcommands.

pub mod certificate;
pub mod coloring;
pub mod generate;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod reduction;
pub mod solver;
pub mod sweep;

pub use certificate::{verify_certificate, violator_to_certificate, CutCertificate, CutSide};
pub use coloring::{
    adversarial_coloring, enumerate_balanced_colorings, validate_coloring, verify_decomposition,
    BalancedColoring, Decomposition,
};
pub use graph::{
    induced, is_connected, is_k_connected, is_vertex_cut, min_vertex_cut, neighborhood,
    parse_graph, Graph, VertexSet,
};
pub use matching::{hall_violator, max_matching, Bipartite, HallViolator, Matching};
pub use oracle::{bdn_exact, exists_decomposition, Bdn};
pub use reduction::{
    build_aux, decomposition_to_matching, matching_to_decomposition, normalize_decomposition,
    AuxBipartite, AuxVertex,
};
pub use solver::{decompose_or_certify, Outcome};
pub use sweep::{run_sweep, SweepConfig, SweepReport};

/// Errors shared by all modules.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Malformed graph/coloring text; the message names the offending line or field.
    #[error("parse error: {0}")]
    Parse(String),
    /// A vertex or index outside the host structure's range, or data
    /// inconsistent with the graph it claims to describe.
    #[error("domain error: {0}")]
    Domain(String),
    /// A coloring violating disjointness, coverage, or balance.
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    /// A decomposition violating partition, connectivity, balance, or size.
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    /// A certificate that fails independent re-verification.
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    /// An operation's stated precondition does not hold for this input.
    #[error("not applicable: {0}")]
    NotApplicable(String),
    /// A caller broke an inter-module contract (e.g. passed a non-perfect
    /// matching where a perfect one is required).
    #[error("contract violation: {0}")]
    Contract(String),
    /// An exhaustive operation was asked to exceed its configured size bound.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    /// Bad top-level input to the solver pipeline.
    #[error("input error: {0}")]
    Input(String),
    /// A self-check failed; indicates a bug, never silently ignored.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
