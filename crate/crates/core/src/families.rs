//! Constructors for the concrete graph families.
//!
//! GP(n,k) is labelled `u_i ↦ i`, `v_i ↦ n + i`. LCF graphs are labelled by
//! their position on the Hamilton cycle.

use alloc::vec::Vec;
use core::fmt;

use crate::arith::modn;
use crate::error::{GpError, LcfError};
use crate::graph::Graph;

/// A validated pair `(n, k)` with `n ≥ 3` and `1 ≤ k < n/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GpParams {
    n: usize,
    k: usize,
}

impl GpParams {
    pub fn new(n: usize, k: usize) -> Result<Self, GpError> {
        if n < 3 {
            return Err(GpError::NTooSmall(n));
        }
        if k == 0 || 2 * k >= n {
            return Err(GpError::KOutOfRange { n, k });
        }
        Ok(GpParams { n, k })
    }

    pub fn n(self) -> usize {
        self.n
    }

    pub fn k(self) -> usize {
        self.k
    }

    /// All valid parameter pairs with `n_min ≤ n ≤ n_max`, ordered by `n`
    /// then `k`.
    pub fn range(n_min: usize, n_max: usize) -> impl Iterator<Item = GpParams> {
        (n_min.max(3)..=n_max).flat_map(|n| (1..n.div_ceil(2)).map(move |k| GpParams { n, k }))
    }

    pub fn u(self, i: usize) -> usize {
        i % self.n
    }

    pub fn v(self, i: usize) -> usize {
        self.n + i % self.n
    }
}

impl fmt::Display for GpParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GP({},{})", self.n, self.k)
    }
}

/// The three edge orbits of GP(n,k) under the dihedral rotation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeClasses {
    pub outer: Vec<(usize, usize)>,
    pub inner: Vec<(usize, usize)>,
    pub spokes: Vec<(usize, usize)>,
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

pub fn edge_classes(p: GpParams) -> EdgeClasses {
    let n = p.n;
    let mut outer: Vec<_> = (0..n).map(|i| ordered(p.u(i), p.u(i + 1))).collect();
    let mut inner: Vec<_> = (0..n).map(|i| ordered(p.v(i), p.v(i + p.k))).collect();
    let spokes: Vec<_> = (0..n).map(|i| (p.u(i), p.v(i))).collect();
    outer.sort_unstable();
    inner.sort_unstable();
    EdgeClasses { outer, inner, spokes }
}

/// The generalized Petersen graph on `2n` vertices.
pub fn gp(p: GpParams) -> Graph {
    let EdgeClasses { outer, inner, spokes } = edge_classes(p);
    Graph::new(2 * p.n, outer.into_iter().chain(inner).chain(spokes))
        .expect("GP edges are simple for valid parameters")
}

/// A cubic Hamiltonian graph in LCF form: the cycle `0 - 1 - … - (n-1) - 0`
/// plus a chord `{i, i + jumps[i]}` at every position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LcfSpec {
    jumps: Vec<usize>,
}

impl LcfSpec {
    /// Wraps a jump sequence, reducing every entry mod `n = jumps.len()`.
    /// Nothing is validated until [`LcfSpec::validate`] or [`lcf`].
    pub fn new<I: IntoIterator<Item = i64>>(jumps: I) -> Self {
        let raw: Vec<i64> = jumps.into_iter().collect();
        let n = raw.len().max(1);
        LcfSpec { jumps: raw.into_iter().map(|j| modn(j, n)).collect() }
    }

    pub fn n(&self) -> usize {
        self.jumps.len()
    }

    /// Jumps as residues in `0..n`.
    pub fn jumps(&self) -> &[usize] {
        &self.jumps
    }

    /// Jumps in the symmetric range `(-n/2, n/2]`, the usual way LCF is
    /// written.
    pub fn signed_jumps(&self) -> Vec<i64> {
        let n = self.n() as i64;
        self.jumps
            .iter()
            .map(|&j| {
                let j = j as i64;
                if 2 * j > n {
                    j - n
                } else {
                    j
                }
            })
            .collect()
    }

    /// The same spec read from position `shift`: `f'(i) = f(i + shift)`.
    pub fn rotated(&self, shift: i64) -> LcfSpec {
        let n = self.n();
        LcfSpec { jumps: (0..n).map(|i| self.jumps[modn(i as i64 + shift, n)]).collect() }
    }

    /// Checks that the chords are a fixed-point-free matching that does not
    /// repeat a cycle edge.
    pub fn validate(&self) -> Result<(), LcfError> {
        let n = self.n();
        if n < 3 {
            return Err(LcfError::NTooSmall(n));
        }
        for (i, &f) in self.jumps.iter().enumerate() {
            if f == 0 {
                return Err(LcfError::ZeroJump { position: i });
            }
            if f == 1 || f == n - 1 {
                return Err(LcfError::ParallelJump { position: i });
            }
            let partner = (i + f) % n;
            if (self.jumps[partner] + f) % n != 0 {
                return Err(LcfError::NotMatching { position: i });
            }
        }
        Ok(())
    }
}

impl fmt::Display for LcfSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, j) in self.signed_jumps().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{j}")?;
        }
        f.write_str("]")
    }
}

/// Materializes an LCF spec.
pub fn lcf(spec: &LcfSpec) -> Result<Graph, LcfError> {
    spec.validate()?;
    let n = spec.n();
    let cycle = (0..n).map(|i| (i, (i + 1) % n));
    let chords = spec.jumps().iter().enumerate().map(|(i, &f)| (i, (i + f) % n));
    Ok(Graph::new(n, cycle.chain(chords)).expect("validated LCF spec is simple"))
}

fn half(p: GpParams) -> Result<i64, LcfError> {
    if p.n % 2 == 1 {
        return Err(LcfError::OddN(p.n));
    }
    Ok(p.n as i64 / 2)
}

/// `C⁺(n,k) = [n/2 + i(k-1)]`.
pub fn c_plus(p: GpParams) -> Result<LcfSpec, LcfError> {
    let h = half(p)?;
    let k = p.k as i64;
    Ok(LcfSpec::new((0..p.n as i64).map(|i| h + i * (k - 1))))
}

/// `C⁻(n,k) = [n/2 - i(k+1)]`.
pub fn c_minus(p: GpParams) -> Result<LcfSpec, LcfError> {
    let h = half(p)?;
    let k = p.k as i64;
    Ok(LcfSpec::new((0..p.n as i64).map(|i| h - i * (k + 1))))
}

/// The graph 𝓗: `K₃ □ P₃` with the middle triangle removed and an apex
/// joined to the three middle vertices.
///
/// Vertex `(t, layer)` of the prism is `3 * layer + t`; the apex is 9.
pub fn h_graph() -> Graph {
    let at = |t: usize, layer: usize| 3 * layer + t % 3;
    let mut edges = Vec::new();
    for t in 0..3 {
        edges.push((at(t, 0), at(t + 1, 0)));
        edges.push((at(t, 2), at(t + 1, 2)));
        edges.push((at(t, 0), at(t, 1)));
        edges.push((at(t, 1), at(t, 2)));
        edges.push((at(t, 1), 9));
    }
    Graph::new(10, edges).expect("H is simple")
}

/// The drawing of the Desargues graph: `C₆ □ P₃` without the middle hexagon,
/// plus two apexes joined alternately to the middle layer.
///
/// Vertex `(p, layer)` is `6 * layer + p`; the apexes are 18 (even middle
/// vertices) and 19 (odd middle vertices).
pub fn desargues_drawing() -> Graph {
    let at = |p: usize, layer: usize| 6 * layer + p % 6;
    let mut edges = Vec::new();
    for p in 0..6 {
        edges.push((at(p, 0), at(p + 1, 0)));
        edges.push((at(p, 2), at(p + 1, 2)));
        edges.push((at(p, 0), at(p, 1)));
        edges.push((at(p, 1), at(p, 2)));
        edges.push((at(p, 1), 18 + p % 2));
    }
    Graph::new(20, edges).expect("drawing is simple")
}

/// Möbius ladder: the `n`-cycle with all antipodal chords (`n` even).
pub fn mobius_ladder(n: usize) -> Result<Graph, LcfError> {
    if n % 2 == 1 {
        return Err(LcfError::OddN(n));
    }
    lcf(&LcfSpec::new(core::iter::repeat_n(n as i64 / 2, n)))
}
