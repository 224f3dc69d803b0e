//! Canonical labelling by a depth-first search tree of refined partitions.
//!
//! Leaves are ordered by their vector of refinement traces and then by the
//! sorted edge list of the relabelled graph; the least leaf defines the
//! canonical labelling. Subtrees are skipped when their trace prefix already
//! loses, or when a discovered automorphism maps them onto explored ones.

use alloc::vec;
use alloc::vec::Vec;

use super::partition::Partition;
use crate::graph::Graph;

/// `map[v]` is the canonical index of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut root = Partition::unit(n);
    let t = root.refine(g, &[0]);
    let mut search = Search { g, first: None, best: None, generators: Vec::new() };
    let mut traces = vec![t];
    let mut path = Vec::new();
    search.visit(&root, &mut traces, &mut path);
    search.best.expect("search reaches at least one leaf").lab_positions
}

#[derive(Clone)]
struct Leaf {
    traces: Vec<u64>,
    cert: Vec<(u32, u32)>,
    path: Vec<usize>,
    lab: Vec<usize>,
    lab_positions: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Returns `Some(level)` to abandon every node deeper than `level`.
    fn visit(&mut self, part: &Partition, traces: &mut Vec<u64>, path: &mut Vec<usize>) -> Option<usize> {
        if let Some(best) = &self.best {
            let m = traces.len().min(best.traces.len());
            match traces[..m].cmp(&best.traces[..m]) {
                core::cmp::Ordering::Greater => return None,
                core::cmp::Ordering::Equal if traces.len() > best.traces.len() => return None,
                _ => {}
            }
        }
        let Some(t) = part.target_cell() else {
            return self.leaf(part, traces, path);
        };
        let level = path.len();
        let mut cell = part.cell(t).to_vec();
        cell.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for w in cell {
            if !explored.is_empty() && self.equivalent_to_explored(path, w, &explored) {
                continue;
            }
            explored.push(w);
            let mut child = part.clone();
            let s = child.individualize(w);
            traces.push(child.refine(self.g, &[s]));
            path.push(w);
            let jump = self.visit(&child, traces, path);
            path.pop();
            traces.pop();
            if let Some(j) = jump {
                if j < level {
                    return Some(j);
                }
            }
        }
        None
    }

    fn leaf(&mut self, part: &Partition, traces: &[u64], path: &[usize]) -> Option<usize> {
        let pos = part.positions();
        let mut cert: Vec<(u32, u32)> = self
            .g
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (pos[a] as u32, pos[b] as u32);
                (x.min(y), x.max(y))
            })
            .collect();
        cert.sort_unstable();
        let leaf = Leaf { traces: traces.to_vec(), cert, path: path.to_vec(), lab: part.lab.clone(), lab_positions: pos };

        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.traces == leaf.traces && reference.cert == leaf.cert {
                let mut image = vec![0; leaf.lab.len()];
                for (&a, &b) in reference.lab.iter().zip(&leaf.lab) {
                    image[a] = b;
                }
                let split = reference.path.iter().zip(&leaf.path).take_while(|(a, b)| a == b).count();
                if !image.iter().enumerate().all(|(i, &x)| i == x) {
                    self.generators.push(image);
                }
                return Some(split);
            }
        }
        if self.first.is_none() {
            self.first = Some(leaf.clone());
        }
        let better = match &self.best {
            None => true,
            Some(b) => (&leaf.traces, &leaf.cert) < (&b.traces, &b.cert),
        };
        if better {
            self.best = Some(leaf);
        }
        None
    }

    /// Whether some product of the stored generators that fix `path`
    /// pointwise sends `w` to an already explored sibling.
    fn equivalent_to_explored(&self, path: &[usize], w: usize, explored: &[usize]) -> bool {
        let n = self.g.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for gen in &self.generators {
            if path.iter().all(|&p| gen[p] == p) {
                any = true;
                for (x, &y) in gen.iter().enumerate() {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rw = find(&mut parent, w);
        explored.iter().any(|&e| find(&mut parent, e) == rw)
    }
}
