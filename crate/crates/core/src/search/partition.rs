//! Ordered vertex partitions and equitable refinement.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// An ordered partition of `0..n` into cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    cells: Vec<Vec<usize>>,
}

impl VertexPartition {
    /// Returns `None` unless `cells` partition `0..n` into non-empty sets.
    pub fn new(n: usize, cells: Vec<Vec<usize>>) -> Option<Self> {
        let mut seen = vec![false; n];
        let mut total = 0;
        for cell in &cells {
            if cell.is_empty() {
                return None;
            }
            for &v in cell {
                if v >= n || core::mem::replace(&mut seen[v], true) {
                    return None;
                }
                total += 1;
            }
        }
        (total == n).then_some(VertexPartition { cells })
    }

    pub fn unit(n: usize) -> Self {
        if n == 0 {
            return VertexPartition { cells: Vec::new() };
        }
        VertexPartition { cells: vec![(0..n).collect()] }
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn is_discrete(&self) -> bool {
        self.cells.iter().all(|c| c.len() == 1)
    }
}

/// Coarsest equitable refinement of `p`: afterwards every vertex in a cell
/// has the same number of neighbours in every other cell. Cells keep their
/// relative order; a split cell is replaced by its parts ordered by
/// neighbour count.
pub fn refine(g: &Graph, p: &VertexPartition) -> VertexPartition {
    let mut part = Partition::from_cells(g.vertex_count(), p.cells());
    let all: Vec<usize> = part.cell_starts().collect();
    part.refine(g, &all);
    part.to_vertex_partition()
}

fn mix(h: u64, x: u64) -> u64 {
    let mut z = (h ^ x).wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Working representation: `lab` lists vertices cell by cell, a cell is named
/// by its start index in `lab`.
#[derive(Debug, Clone)]
pub(crate) struct Partition {
    pub(crate) lab: Vec<usize>,
    cell_of: Vec<usize>,
    end: Vec<usize>,
    cells: usize,
}

impl Partition {
    pub(crate) fn unit(n: usize) -> Self {
        Partition { lab: (0..n).collect(), cell_of: vec![0; n], end: vec![n; n], cells: usize::from(n > 0) }
    }

    pub(crate) fn from_cells(n: usize, cells: &[Vec<usize>]) -> Self {
        let mut part = Partition::unit(n);
        let mut start = 0;
        for cell in cells {
            for (i, &v) in cell.iter().enumerate() {
                part.lab[start + i] = v;
                part.cell_of[v] = start;
            }
            part.end[start] = start + cell.len();
            start += cell.len();
        }
        part.cells = cells.len();
        part
    }

    pub(crate) fn len(&self) -> usize {
        self.lab.len()
    }

    pub(crate) fn cell_count(&self) -> usize {
        self.cells
    }

    pub(crate) fn is_discrete(&self) -> bool {
        self.cells == self.lab.len()
    }

    pub(crate) fn cell_starts(&self) -> impl Iterator<Item = usize> + '_ {
        let mut s = 0;
        core::iter::from_fn(move || {
            (s < self.lab.len()).then(|| {
                let here = s;
                s = self.end[s];
                here
            })
        })
    }

    pub(crate) fn cell(&self, start: usize) -> &[usize] {
        &self.lab[start..self.end[start]]
    }

    /// First non-singleton cell of least size.
    pub(crate) fn target_cell(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        for s in self.cell_starts() {
            let size = self.end[s] - s;
            if size > 1 && best.is_none_or(|(_, b)| size < b) {
                best = Some((s, size));
                if size == 2 {
                    break;
                }
            }
        }
        best.map(|(s, _)| s)
    }

    /// Splits `v` off the front of its cell; returns the singleton's start.
    pub(crate) fn individualize(&mut self, v: usize) -> usize {
        let s = self.cell_of[v];
        let e = self.end[s];
        debug_assert!(e - s > 1);
        let p = s + self.lab[s..e].iter().position(|&x| x == v).unwrap();
        self.lab.swap(s, p);
        self.end[s] = s + 1;
        self.end[s + 1] = e;
        for i in s + 1..e {
            self.cell_of[self.lab[i]] = s + 1;
        }
        self.cells += 1;
        s
    }

    /// Refines to the coarsest equitable partition below `self`, starting from
    /// the given splitter cells. Returns a label-invariant trace of the work.
    pub(crate) fn refine(&mut self, g: &Graph, splitters: &[usize]) -> u64 {
        let n = self.len();
        if n == 0 {
            return 0;
        }
        let mut in_queue = vec![false; n];
        let mut queue = VecDeque::new();
        for &s in splitters {
            if !in_queue[s] {
                in_queue[s] = true;
                queue.push_back(s);
            }
        }
        let mut count = vec![0u32; n];
        let mut hit_mark = vec![false; n];
        let mut hit: Vec<usize> = Vec::new();
        let mut parts: Vec<(usize, usize, u32)> = Vec::new();
        let mut trace = 0xcbf2_9ce4_8422_2325u64;

        while let Some(w) = queue.pop_front() {
            in_queue[w] = false;
            if self.is_discrete() {
                break;
            }
            let we = self.end[w];
            trace = mix(trace, w as u64);
            for i in w..we {
                for &y in g.neighbors(self.lab[i]) {
                    count[y] += 1;
                    let c = self.cell_of[y];
                    if !hit_mark[c] {
                        hit_mark[c] = true;
                        hit.push(c);
                    }
                }
            }
            hit.sort_unstable();
            for &s in &hit {
                hit_mark[s] = false;
                let e = self.end[s];
                if e - s == 1 {
                    trace = mix(trace, (s as u64) << 32 | count[self.lab[s]] as u64);
                    continue;
                }
                self.lab[s..e].sort_unstable_by_key(|&x| count[x]);
                parts.clear();
                let mut i = s;
                while i < e {
                    let c = count[self.lab[i]];
                    let mut j = i + 1;
                    while j < e && count[self.lab[j]] == c {
                        j += 1;
                    }
                    parts.push((i, j, c));
                    i = j;
                }
                for &(ps, pe, c) in &parts {
                    trace = mix(trace, ((ps as u64) << 40) | ((pe - ps) as u64) << 20 | c as u64);
                }
                if parts.len() == 1 {
                    continue;
                }
                for &(ps, pe, _) in &parts {
                    self.end[ps] = pe;
                    for t in ps..pe {
                        self.cell_of[self.lab[t]] = ps;
                    }
                }
                self.cells += parts.len() - 1;
                let skip = if in_queue[s] {
                    Some(0)
                } else {
                    let mut largest = 0;
                    for (idx, &(ps, pe, _)) in parts.iter().enumerate() {
                        if pe - ps > parts[largest].1 - parts[largest].0 {
                            largest = idx;
                        }
                    }
                    Some(largest)
                };
                for (idx, &(ps, _, _)) in parts.iter().enumerate() {
                    if Some(idx) != skip && !in_queue[ps] {
                        in_queue[ps] = true;
                        queue.push_back(ps);
                    }
                }
            }
            hit.clear();
            for i in w..we {
                for &y in g.neighbors(self.lab[i]) {
                    count[y] = 0;
                }
            }
        }
        mix(trace, self.cells as u64)
    }

    /// `pos[v]`: index of `v` in `lab`.
    pub(crate) fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.len()];
        for (i, &v) in self.lab.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    pub(crate) fn to_vertex_partition(&self) -> VertexPartition {
        let cells = self
            .cell_starts()
            .map(|s| {
                let mut c = self.cell(s).to_vec();
                c.sort_unstable();
                c
            })
            .collect();
        VertexPartition { cells }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gp, GpParams};

    #[test]
    fn regular_graph_stays_unit() {
        let g = gp(GpParams::new(5, 2).unwrap());
        assert_eq!(refine(&g, &VertexPartition::unit(10)), VertexPartition::unit(10));
    }

    #[test]
    fn star_splits_center() {
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = refine(&star, &VertexPartition::unit(4));
        assert_eq!(r.cells(), &[vec![1, 2, 3], vec![0]]);
    }

    #[test]
    fn idempotent_on_path() {
        let p = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let once = refine(&p, &VertexPartition::unit(5));
        assert_eq!(refine(&p, &once), once);
        // ends, next-to-ends, middle
        assert_eq!(once.cells().len(), 3);
    }

    #[test]
    fn validation() {
        assert!(VertexPartition::new(3, vec![vec![0, 1], vec![2]]).is_some());
        assert!(VertexPartition::new(3, vec![vec![0, 1], vec![1, 2]]).is_none());
        assert!(VertexPartition::new(3, vec![vec![0, 1]]).is_none());
    }
}
