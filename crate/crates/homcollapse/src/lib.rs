//! Multihomomorphism complexes of graphs and the discrete Morse machinery
//! used to collapse them.
//!
//! The library builds three layers:
//!
//! 1. **Combinatorics** — graphs with ≤ 61 vertices ([`graph`]), cells of the
//!    multihomomorphism complex Hom(Γ, K_n) ([`hom`]), and the four nested
//!    array posets M ⊇ K ⊇ L, S obtained from the pentagon with its middle
//!    vertex deleted ([`mkls`]).
//! 2. **Topology** — finite posets with order complexes ([`poset`]), abstract
//!    simplicial complexes with links, joins, and pseudomanifold boundaries
//!    ([`complex`]), chain complexes with mod-2 and integral homology
//!    ([`homology`]), and derived subdivisions near a subcomplex
//!    ([`subdivision`]).
//! 3. **Collapsing** — a discrete Morse engine (matchings, acyclicity,
//!    height functions, elementary collapse sequences, [`morse`]), the
//!    collapsible disk complexes F(k, l) with their canonical matchings
//!    ([`disk`]), per-cell link structure verification ([`links`]), and the
//!    three-stage equivariant collapse ΔK → ΔK1 → ΔK2 → ΔS ([`stages`]).
//!
//! Every construction is exact and deterministic: cells, simplices, and
//! chains are produced in a canonical order, so dumps and reports are
//! byte-for-byte reproducible. Enumerations that can explode are guarded by
//! a configurable cap (`HOMCOLLAPSE_CAP`, or per-call limits).
//!
//! The `examples/` directory exercises each capability end to end; the
//! `homcollapse` binary exposes the same functionality as `build`, `verify`,
//! and `report` subcommands.

pub mod complex;
pub mod disk;
pub mod graph;
pub mod hom;
pub mod homology;
pub mod links;
pub mod mkls;
pub mod morse;
pub mod poset;
pub mod report;
pub mod set;
pub mod stages;
pub mod subdivision;
pub mod suites;

pub use complex::{Simplex, SimplicialComplex};
pub use graph::Graph;
pub use poset::Poset;
pub use set::LabelSet;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("size cap exceeded: {0} needs {1} elements, cap is {2}")]
    CapExceeded(&'static str, u64, u64),
    #[error("not a subcomplex: {0}")]
    NotSubcomplex(String),
    #[error("{0} is not a full subcomplex: {1}")]
    NotFull(&'static str, String),
    #[error("complex is not pure: facet dimensions {0:?}")]
    NotPure(Vec<i32>),
    #[error("element ids are not in linear-extension order")]
    NotLinearExtension,
    #[error("matching is invalid: {0}")]
    InvalidMatching(String),
    #[error("matching has a directed cycle through {0} cells")]
    CyclicMatching(usize),
    #[error("map is not monotone: {0}")]
    NotMonotone(String),
    #[error("isomorphism search cap of {0} nodes exceeded")]
    SearchCapExceeded(u64),
    #[error("integer overflow during {0}; input exceeds supported magnitude")]
    Overflow(&'static str),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Default ceiling on enumerated cells or chains, overridable by the
/// `HOMCOLLAPSE_CAP` environment variable and by explicit caps in the CLI.
pub const DEFAULT_CAP: u64 = 1_000_000;

/// Effective enumeration cap: `HOMCOLLAPSE_CAP` when set and parseable,
/// otherwise [`DEFAULT_CAP`].
pub fn default_cap() -> u64 {
    std::env::var("HOMCOLLAPSE_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_CAP)
}
