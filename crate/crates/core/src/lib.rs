//! Generalized Petersen graphs and Kronecker covers.
//!
//! This crate is `no_std` (it only needs `alloc`). It provides:
//!
//! * [`graph`]: a canonical simple undirected [`Graph`] with graph6 and DOT
//!   interchange,
//! * [`families`]: GP(n,k), LCF graphs, the C⁺/C⁻ families and the graph 𝓗,
//! * [`perm`]: the permutations α, β, γ, Δ and normal forms of words in them,
//! * [`cover`]: Kronecker covers, Kronecker involutions and quotients,
//! * [`classify`]: the closed-form decision of which GP(n,k) are Kronecker
//!   covers together with the supporting number theory,
//! * [`search`]: an independent brute-force oracle (automorphism groups,
//!   canonical forms, isomorphism, Kronecker-involution search).
//!
//! Vertices are dense indices. GP(n,k) uses `u_i ↦ i`, `v_i ↦ n + i`
//! throughout, and the Kronecker cover of a graph on `m` vertices uses
//! `v' ↦ v`, `v'' ↦ v + m`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod classify;
pub mod cover;
pub mod error;
pub mod families;
pub mod graph;
pub mod perm;
pub mod search;

mod arith;

pub use classify::{classify, Case, Classification, QuotientDescriptor};
pub use cover::{is_kronecker_involution, kronecker_cover, natural_swap, quotient};
pub use error::{
    ClassifyError, CoverError, GpError, Graph6Error, GraphError, LcfError, PermError, SearchError,
};
pub use families::{gp, h_graph, lcf, GpParams, LcfSpec};
pub use graph::{Bipartition, Graph};
pub use perm::{CanonicalTriple, Permutation};
pub use search::{automorphisms, canonical_form, is_isomorphic, kronecker_involutions, SearchConfig};
