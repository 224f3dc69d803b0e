//! Exact search oracle: automorphism groups, canonical forms and
//! isomorphism via partition refinement and individualization.
//!
//! Nothing here relies on the closed-form theory in [`crate::classify`].

mod canon;
mod partition;

use alloc::vec::Vec;

use crate::cover::{is_kronecker_involution, quotient};
use crate::error::SearchError;
use crate::graph::{encode_graph6, Graph};
use crate::perm::Permutation;

pub use canon::canonical_labeling;
pub use partition::{refine, VertexPartition};

use partition::Partition;

/// Limits on the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_vertices: usize,
    pub max_group_order: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { max_vertices: 120, max_group_order: 100_000 }
    }
}

impl SearchConfig {
    fn check(&self, g: &Graph) -> Result<(), SearchError> {
        if g.vertex_count() > self.max_vertices {
            return Err(SearchError::TooManyVertices { vertices: g.vertex_count(), bound: self.max_vertices });
        }
        Ok(())
    }
}

/// Every automorphism of `g`, each exactly once, in lexicographic order of
/// image vectors.
pub fn automorphisms(g: &Graph) -> Result<Vec<Permutation>, SearchError> {
    automorphisms_with(g, &SearchConfig::default())
}

pub fn automorphisms_with(g: &Graph, cfg: &SearchConfig) -> Result<Vec<Permutation>, SearchError> {
    cfg.check(g)?;
    let n = g.vertex_count();
    let mut root = Partition::unit(n);
    let root_trace = root.refine(g, &[0]);

    // the fixed first path: always individualize the least vertex of the target cell
    let mut traces = alloc::vec![(root_trace, root.cell_count())];
    let mut targets = Vec::new();
    let mut leaf = root.clone();
    while let Some(t) = leaf.target_cell() {
        targets.push((t, leaf.cell(t).len()));
        let v = *leaf.cell(t).iter().min().unwrap();
        let s = leaf.individualize(v);
        let tr = leaf.refine(g, &[s]);
        traces.push((tr, leaf.cell_count()));
    }
    let first_lab = leaf.lab.clone();

    let mut found = Vec::new();
    let mut walk = Walk { g, cfg, traces: &traces, targets: &targets, first_lab: &first_lab, found: &mut found };
    walk.descend(0, &root)?;
    found.sort_unstable();
    Ok(found)
}

struct Walk<'a> {
    g: &'a Graph,
    cfg: &'a SearchConfig,
    traces: &'a [(u64, usize)],
    targets: &'a [(usize, usize)],
    first_lab: &'a [usize],
    found: &'a mut Vec<Permutation>,
}

impl Walk<'_> {
    fn descend(&mut self, level: usize, part: &Partition) -> Result<(), SearchError> {
        let Some(&(t, size)) = self.targets.get(level) else {
            if part.is_discrete() {
                let mut image = alloc::vec![0; part.len()];
                for (&a, &b) in self.first_lab.iter().zip(&part.lab) {
                    image[a] = b;
                }
                if self.g.edges().iter().all(|&(a, b)| self.g.has_edge(image[a], image[b])) {
                    if self.found.len() >= self.cfg.max_group_order {
                        return Err(SearchError::GroupTooLarge { bound: self.cfg.max_group_order });
                    }
                    self.found.push(Permutation::from_images_unchecked(image));
                }
            }
            return Ok(());
        };
        if part.target_cell() != Some(t) || part.cell(t).len() != size {
            return Ok(());
        }
        let mut cell = part.cell(t).to_vec();
        cell.sort_unstable();
        for w in cell {
            let mut child = part.clone();
            let s = child.individualize(w);
            let tr = child.refine(self.g, &[s]);
            if (tr, child.cell_count()) == self.traces[level + 1] {
                self.descend(level + 1, &child)?;
            }
        }
        Ok(())
    }
}

/// The Kronecker involutions of `g` among its automorphisms, in the same
/// order. Empty when `g` is not connected and bipartite.
pub fn kronecker_involutions(g: &Graph) -> Result<Vec<Permutation>, SearchError> {
    kronecker_involutions_with(g, &SearchConfig::default())
}

pub fn kronecker_involutions_with(g: &Graph, cfg: &SearchConfig) -> Result<Vec<Permutation>, SearchError> {
    cfg.check(g)?;
    if !g.is_connected() || !g.is_bipartite() {
        return Ok(Vec::new());
    }
    Ok(automorphisms_with(g, cfg)?.into_iter().filter(|p| is_kronecker_involution(g, p)).collect())
}

/// graph6 encoding of the canonical relabelling of `g`. Two graphs are
/// isomorphic exactly when their canonical forms are equal.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>, SearchError> {
    canonical_form_with(g, &SearchConfig::default())
}

pub fn canonical_form_with(g: &Graph, cfg: &SearchConfig) -> Result<Vec<u8>, SearchError> {
    cfg.check(g)?;
    let map = canonical_labeling(g);
    Ok(encode_graph6(&g.relabel(&map)))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool, SearchError> {
    Ok(isomorphism(g, h)?.is_some())
}

pub fn is_isomorphic_with(g: &Graph, h: &Graph, cfg: &SearchConfig) -> Result<bool, SearchError> {
    Ok(isomorphism_with(g, h, cfg)?.is_some())
}

/// An isomorphism `φ` with `φ(g) = h`, if one exists.
pub fn isomorphism(g: &Graph, h: &Graph) -> Result<Option<Permutation>, SearchError> {
    isomorphism_with(g, h, &SearchConfig::default())
}

pub fn isomorphism_with(g: &Graph, h: &Graph, cfg: &SearchConfig) -> Result<Option<Permutation>, SearchError> {
    cfg.check(g)?;
    cfg.check(h)?;
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let cg = canonical_labeling(g);
    let ch = canonical_labeling(h);
    if g.relabel(&cg) != h.relabel(&ch) {
        return Ok(None);
    }
    let mut inv_h = alloc::vec![0; ch.len()];
    for (v, &c) in ch.iter().enumerate() {
        inv_h[c] = v;
    }
    Ok(Some(Permutation::from_images_unchecked(cg.iter().map(|&c| inv_h[c]).collect())))
}

/// All Kronecker involutions of `g`, and the distinct quotient isomorphism
/// classes as (canonical graph6, first quotient found), sorted by form.
#[derive(Debug, Clone)]
pub struct QuotientSurvey {
    pub involutions: Vec<Permutation>,
    pub classes: Vec<(Vec<u8>, Graph)>,
}

pub fn quotients_up_to_iso(g: &Graph) -> Result<QuotientSurvey, SearchError> {
    quotients_up_to_iso_with(g, &SearchConfig::default())
}

pub fn quotients_up_to_iso_with(g: &Graph, cfg: &SearchConfig) -> Result<QuotientSurvey, SearchError> {
    let involutions = kronecker_involutions_with(g, cfg)?;
    let mut classes: Vec<(Vec<u8>, Graph)> = Vec::new();
    for p in &involutions {
        let q = quotient(g, p).expect("search only returns Kronecker involutions");
        let form = canonical_form_with(&q, cfg)?;
        if !classes.iter().any(|(f, _)| *f == form) {
            classes.push((form, q));
        }
    }
    classes.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(QuotientSurvey { involutions, classes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gp, h_graph, GpParams};

    fn gpg(n: usize, k: usize) -> Graph {
        gp(GpParams::new(n, k).unwrap())
    }

    #[test]
    fn group_orders() {
        assert_eq!(automorphisms(&gpg(5, 2)).unwrap().len(), 120);
        assert_eq!(automorphisms(&gpg(7, 2)).unwrap().len(), 14);
        assert_eq!(automorphisms(&gpg(10, 3)).unwrap().len(), 240);
        assert_eq!(automorphisms(&gpg(8, 3)).unwrap().len(), 96);
        assert_eq!(automorphisms(&Graph::empty(4)).unwrap().len(), 24);
        assert_eq!(automorphisms(&Graph::empty(0)).unwrap().len(), 1);
    }

    #[test]
    fn group_is_closed_and_distinct() {
        let auts = automorphisms(&gpg(12, 5)).unwrap();
        assert_eq!(auts.len(), 144);
        let mut sorted = auts.clone();
        sorted.dedup();
        assert_eq!(sorted.len(), auts.len());
        for p in &auts[..5] {
            for q in &auts {
                assert!(auts.binary_search(&p.compose(q).unwrap()).is_ok());
            }
        }
    }

    #[test]
    fn limits() {
        let cfg = SearchConfig { max_vertices: 5, max_group_order: 10 };
        assert_eq!(
            automorphisms_with(&gpg(5, 2), &cfg),
            Err(SearchError::TooManyVertices { vertices: 10, bound: 5 })
        );
        let cfg = SearchConfig { max_vertices: 50, max_group_order: 10 };
        assert_eq!(automorphisms_with(&gpg(5, 2), &cfg), Err(SearchError::GroupTooLarge { bound: 10 }));
    }

    #[test]
    fn canonical_forms() {
        let g = gpg(10, 3);
        let p: Vec<usize> = (0..20).map(|x| (7 * x + 3) % 20).collect();
        assert_eq!(canonical_form(&g).unwrap(), canonical_form(&g.relabel(&p)).unwrap());
        assert_ne!(canonical_form(&gpg(10, 3)).unwrap(), canonical_form(&gpg(10, 2)).unwrap());
        // GP(7,2) ≅ GP(7,3)
        assert!(is_isomorphic(&gpg(7, 2), &gpg(7, 3)).unwrap());
        assert!(!is_isomorphic(&gpg(8, 1), &gpg(8, 3)).unwrap());
    }

    #[test]
    fn isomorphism_maps_edges() {
        let (g, h) = (gpg(7, 2), gpg(7, 3));
        let phi = isomorphism(&g, &h).unwrap().unwrap();
        assert_eq!(g.relabel(phi.images()), h);
    }

    #[test]
    fn kronecker_search_basics() {
        assert!(kronecker_involutions(&gpg(7, 2)).unwrap().is_empty());
        let invs = kronecker_involutions(&gpg(14, 3)).unwrap();
        assert!(invs.contains(&crate::perm::alpha(14).power(7)));
        let survey = quotients_up_to_iso(&gpg(10, 3)).unwrap();
        assert_eq!(survey.classes.len(), 2);
        let h = canonical_form(&h_graph()).unwrap();
        let p = canonical_form(&gpg(5, 2)).unwrap();
        assert!(survey.classes.iter().any(|(f, _)| *f == h));
        assert!(survey.classes.iter().any(|(f, _)| *f == p));
    }
}
