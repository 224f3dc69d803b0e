//! Kronecker covers and quotients by Kronecker involutions.
//!
//! The cover of a graph on `m` vertices has vertex `v'` at index `v` and
//! `v''` at index `v + m`.

use alloc::vec::Vec;

use crate::error::CoverError;
use crate::graph::Graph;
use crate::perm::Permutation;

/// `G × K₂`: every edge `uv` lifts to `u'v''` and `u''v'`.
pub fn kronecker_cover(g: &Graph) -> Graph {
    let m = g.vertex_count();
    let edges = g.edges().iter().flat_map(|&(u, v)| [(u, v + m), (u + m, v)]);
    Graph::new(2 * m, edges).expect("cover of a simple graph is simple")
}

/// The involution `v' ↔ v''` on `2 * base_vertex_count` points.
pub fn natural_swap(base_vertex_count: usize) -> Permutation {
    let m = base_vertex_count;
    Permutation::from_images_unchecked((0..2 * m).map(|x| (x + m) % (2 * m)).collect())
}

/// Checks every clause of the Kronecker-involution definition and reports the
/// first one that fails.
///
/// Besides being a fixed-point-free colour-reversing involutive automorphism
/// of a connected bipartite graph, `p` must not swap the ends of an edge:
/// otherwise the contracted graph would carry a loop.
pub fn check_kronecker_involution(g: &Graph, p: &Permutation) -> Result<(), CoverError> {
    if p.len() != g.vertex_count() {
        return Err(CoverError::LengthMismatch);
    }
    if !g.is_connected() {
        return Err(CoverError::Disconnected);
    }
    let bip = g.bipartition().ok_or(CoverError::NotBipartite)?;
    if !g.edges().iter().all(|&(a, b)| g.has_edge(p.apply(a), p.apply(b))) {
        return Err(CoverError::NotAutomorphism);
    }
    if !p.is_involution() {
        return Err(CoverError::NotInvolution);
    }
    if let Some(x) = p.fixed_points().next() {
        return Err(CoverError::FixedVertex(x));
    }
    if (0..g.vertex_count()).any(|x| bip.color(x) == bip.color(p.apply(x))) {
        return Err(CoverError::ColorPreserving);
    }
    if let Some(x) = (0..g.vertex_count()).find(|&x| g.has_edge(x, p.apply(x))) {
        let y = p.apply(x);
        return Err(CoverError::FixedEdge(x.min(y), x.max(y)));
    }
    Ok(())
}

pub fn is_kronecker_involution(g: &Graph, p: &Permutation) -> bool {
    check_kronecker_involution(g, p).is_ok()
}

/// Contracts every orbit `{x, p(x)}` of a Kronecker involution.
///
/// Orbits are numbered in increasing order of their least element.
pub fn quotient(g: &Graph, p: &Permutation) -> Result<Graph, CoverError> {
    check_kronecker_involution(g, p)?;
    let mut rank = alloc::vec![usize::MAX; g.vertex_count()];
    let mut next = 0;
    for x in 0..g.vertex_count() {
        if rank[x] == usize::MAX {
            rank[x] = next;
            rank[p.apply(x)] = next;
            next += 1;
        }
    }
    let edges: Vec<_> = g.edges().iter().map(|&(a, b)| (rank[a], rank[b])).collect();
    Ok(Graph::new(next, edges).expect("no fixed edge, so no loop"))
}
