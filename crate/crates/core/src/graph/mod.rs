//! Simple undirected graphs on dense vertex indices.

mod dot;
mod graph6;

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::GraphError;

pub use dot::to_dot;
pub use graph6::{decode_graph6, encode_graph6};

/// A simple undirected graph on `0..vertex_count`.
///
/// Edges are stored as ordered pairs `(i, j)` with `i < j`, sorted and
/// deduplicated, so two graphs with the same edge set compare equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph")
            .field("vertex_count", &self.vertex_count)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph, silently dropping duplicate edges. Loops and
    /// out-of-range endpoints are errors.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= vertex_count {
                    return Err(GraphError::OutOfRange { vertex: v, vertex_count });
                }
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            list.push(if a < b { (a, b) } else { (b, a) });
        }
        list.sort_unstable();
        list.dedup();
        let mut adj = vec![Vec::new(); vertex_count];
        for &(a, b) in &list {
            adj[a].push(b);
            adj[b].push(a);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(Graph { vertex_count, edges: list, adj })
    }

    /// Graph with no edges.
    pub fn empty(vertex_count: usize) -> Self {
        Graph { vertex_count, edges: Vec::new(), adj: vec![Vec::new(); vertex_count] }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbours of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.vertex_count && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adj.iter().all(|n| n.len() == d)
    }

    /// Relabels vertex `v` as `map[v]`. `map` must be a bijection.
    pub fn relabel(&self, map: &[usize]) -> Graph {
        debug_assert_eq!(map.len(), self.vertex_count);
        Graph::new(self.vertex_count, self.edges.iter().map(|&(a, b)| (map[a], map[b])))
            .expect("relabeling by a bijection keeps the graph simple")
    }

    /// Subgraph induced by `vertices`, relabeled `vertices[i] ↦ i`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.vertex_count];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| index[a] != usize::MAX && index[b] != usize::MAX)
            .map(|&(a, b)| (index[a], index[b]));
        Graph::new(vertices.len(), edges).expect("induced subgraph of a simple graph")
    }

    /// Proper 2-colouring, or `None` if the graph has an odd cycle.
    ///
    /// In every component the least vertex gets colour 0.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut color = vec![u8::MAX; self.vertex_count];
        let mut queue = VecDeque::new();
        for root in 0..self.vertex_count {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            queue.push_back(root);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if color[y] == u8::MAX {
                        color[y] = 1 - color[x];
                        queue.push_back(y);
                    } else if color[y] == color[x] {
                        return None;
                    }
                }
            }
        }
        Some(Bipartition { color })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for root in 0..self.vertex_count {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            stack.push(root);
            let mut comp = Vec::new();
            while let Some(x) = stack.pop() {
                comp.push(x);
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.vertex_count;
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            'bfs: while let Some(x) = queue.pop_front() {
                if let Some(b) = best {
                    // nothing shorter can be closed from this depth
                    if 2 * dist[x] >= b {
                        break 'bfs;
                    }
                }
                for &y in &self.adj[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        let len = dist[x] + dist[y] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }
}

/// A proper 2-colouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    color: Vec<u8>,
}

impl Bipartition {
    pub fn color(&self, v: usize) -> u8 {
        self.color[v]
    }

    pub fn colors(&self) -> &[u8] {
        &self.color
    }

    /// Sizes of colour classes 0 and 1.
    pub fn class_sizes(&self) -> (usize, usize) {
        let ones = self.color.iter().filter(|&&c| c == 1).count();
        (self.color.len() - ones, ones)
    }

    /// Whether every edge of `g` joins the two colour classes.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.color.len() == g.vertex_count()
            && g.edges().iter().all(|&(a, b)| self.color[a] != self.color[b])
    }
}
