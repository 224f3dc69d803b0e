#![allow(dead_code)]

use gpkc_core::Graph;
use proptest::prelude::*;

/// Random simple graph on `1..=max_n` vertices with edge density about `p`.
pub fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), proptest::collection::vec(any::<bool>(), pairs))
    })
    .prop_map(|(n, bits)| {
        let mut edges = Vec::new();
        let mut t = 0;
        for j in 1..n {
            for i in 0..j {
                if bits[t] {
                    edges.push((i, j));
                }
                t += 1;
            }
        }
        Graph::new(n, edges).unwrap()
    })
}

pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// All permutations of `0..n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else { break };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    out
}

/// Automorphisms by trying every permutation.
pub fn brute_automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    all_permutations(g.vertex_count())
        .into_iter()
        .filter(|p| g.edges().iter().all(|&(a, b)| g.has_edge(p[a], p[b])))
        .collect()
}

pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.vertex_count() == h.vertex_count()
        && g.edge_count() == h.edge_count()
        && all_permutations(g.vertex_count()).into_iter().any(|p| g.relabel(&p) == *h)
}

/// One representative per isomorphism class of 3-regular graphs on `n`
/// vertices, by exhaustive edge selection.
pub fn cubic_classes(n: usize) -> Vec<Graph> {
    fn go(n: usize, pairs: &[(usize, usize)], at: usize, deg: &mut [usize], chosen: &mut Vec<(usize, usize)>, out: &mut Vec<Graph>) {
        if chosen.len() == 3 * n / 2 {
            out.push(Graph::new(n, chosen.iter().copied()).unwrap());
            return;
        }
        if at == pairs.len() {
            return;
        }
        let (i, j) = pairs[at];
        // vertex i must be saturated before the pairs move past it
        if deg[i] < 3 && deg[j] < 3 {
            deg[i] += 1;
            deg[j] += 1;
            chosen.push((i, j));
            go(n, pairs, at + 1, deg, chosen, out);
            chosen.pop();
            deg[i] -= 1;
            deg[j] -= 1;
        }
        let last_for_i = at + 1 == pairs.len() || pairs[at + 1].0 != i;
        if !(last_for_i && deg[i] < 3) {
            go(n, pairs, at + 1, deg, chosen, out);
        }
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut all = Vec::new();
    go(n, &pairs, 0, &mut vec![0; n], &mut Vec::new(), &mut all);
    let mut forms: Vec<Vec<u8>> = Vec::new();
    let mut reps = Vec::new();
    for g in all {
        let f = gpkc_core::canonical_form(&g).unwrap();
        if !forms.contains(&f) {
            forms.push(f);
            reps.push(g);
        }
    }
    reps
}
