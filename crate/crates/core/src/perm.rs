//! Permutations of vertex sets and the GP generators α, β, γ.
//!
//! Composition is right-to-left: `compose(p, q)` applies `q` first. With this
//! convention `α^a γ` sends `u_i` to `v_{ki+a}`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{modn, squares_to_minus_one, squares_to_one};
use crate::error::PermError;
use crate::families::desargues_drawing;
use crate::graph::{Bipartition, Graph};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.image)
    }
}

impl Permutation {
    pub fn identity(len: usize) -> Self {
        Permutation { image: (0..len).collect() }
    }

    /// `image[x]` is the image of `x`.
    pub fn from_images(image: Vec<usize>) -> Result<Self, PermError> {
        let mut seen = alloc::vec![false; image.len()];
        for &y in &image {
            if y >= image.len() || core::mem::replace(&mut seen[y], true) {
                return Err(PermError::NotBijection);
            }
        }
        Ok(Permutation { image })
    }

    pub(crate) fn from_images_unchecked(image: Vec<usize>) -> Self {
        debug_assert!(Self::from_images(image.clone()).is_ok());
        Permutation { image }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0; self.len()];
        for (x, &y) in self.image.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { image: inv }
    }

    /// `self ∘ q`: apply `q`, then `self`.
    pub fn compose(&self, q: &Permutation) -> Result<Self, PermError> {
        if self.len() != q.len() {
            return Err(PermError::LengthMismatch { left: self.len(), right: q.len() });
        }
        Ok(Permutation { image: q.image.iter().map(|&x| self.image[x]).collect() })
    }

    pub fn power(&self, m: i64) -> Self {
        let base = if m < 0 { self.inverse() } else { self.clone() };
        let mut e = m.unsigned_abs();
        let mut acc = Permutation::identity(self.len());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&sq).unwrap();
            }
            sq = sq.compose(&sq).unwrap();
            e >>= 1;
        }
        acc
    }

    pub fn is_involution(&self) -> bool {
        self.image.iter().enumerate().all(|(x, &y)| self.image[y] == x)
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.image.iter().enumerate().filter(|(x, y)| x == *y).map(|(x, _)| x)
    }

    /// Cycle notation, omitting fixed points; `()` for the identity.
    pub fn cycle_notation(&self) -> String {
        use fmt::Write;
        let mut out = String::new();
        let mut seen = alloc::vec![false; self.len()];
        for start in 0..self.len() {
            if seen[start] || self.image[start] == start {
                continue;
            }
            out.push('(');
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    out.push(' ');
                }
                write!(out, "{x}").unwrap();
                first = false;
                x = self.image[x];
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

/// Rotation `u_i ↦ u_{i+1}`, `v_i ↦ v_{i+1}` on GP(n,·) labels.
pub fn alpha(n: usize) -> Permutation {
    let image = (0..2 * n).map(|x| (x / n) * n + (x % n + 1) % n).collect();
    Permutation { image }
}

/// Reflection `u_i ↦ u_{-i}`, `v_i ↦ v_{-i}`.
pub fn beta(n: usize) -> Permutation {
    let image = (0..2 * n).map(|x| (x / n) * n + (n - x % n) % n).collect();
    Permutation { image }
}

/// Rim swap `u_i ↦ v_{ki}`, `v_i ↦ u_{ki}`; an automorphism of GP(n,k)
/// exactly when `k² ≡ ±1 (mod n)`.
pub fn gamma(n: usize, k: usize) -> Result<Permutation, PermError> {
    if n < 3 || !(squares_to_one(n as u64, k as u64) || squares_to_minus_one(n as u64, k as u64)) {
        return Err(PermError::GammaNotAutomorphism { n, k });
    }
    let image = (0..2 * n)
        .map(|x| {
            let other_rim = if x < n { n } else { 0 };
            other_rim + (k * (x % n)) % n
        })
        .collect();
    Ok(Permutation { image })
}

/// Isomorphism from [`desargues_drawing`] onto GP(10,3): drawing vertex `x`
/// goes to `DESARGUES_TO_GP[x]`.
///
/// The least such table (lexicographically) under which the drawing's
/// half-turn sends some outer-rim edge to a spoke.
pub const DESARGUES_TO_GP: [usize; 20] =
    [0, 1, 2, 3, 13, 10, 9, 11, 12, 4, 16, 17, 8, 18, 15, 5, 6, 7, 19, 14];

/// The half-turn of the Desargues drawing with its two apexes swapped,
/// transported to GP(10,3) labels.
pub fn delta_10_3() -> Permutation {
    let drawing_delta: Vec<usize> = (0..20)
        .map(|x| match x {
            18 => 19,
            19 => 18,
            _ => (x / 6) * 6 + (x % 6 + 3) % 6,
        })
        .collect();
    let mut image = alloc::vec![0; 20];
    for x in 0..20 {
        image[DESARGUES_TO_GP[x]] = DESARGUES_TO_GP[drawing_delta[x]];
    }
    debug_assert!(is_automorphism(&desargues_drawing(), &Permutation { image: drawing_delta }).unwrap());
    Permutation { image }
}

/// The word `α^a β^b γ^c` with `a ∈ Z_n`, `b, c ∈ {0, 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalTriple {
    pub a: usize,
    pub b: u8,
    pub c: u8,
}

impl CanonicalTriple {
    pub fn new(a: usize, b: u8, c: u8) -> Self {
        CanonicalTriple { a, b: b & 1, c: c & 1 }
    }

    /// ASCII rendering, e.g. `a^12*b*g`.
    pub fn ascii(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        match self.a {
            0 => {}
            1 => parts.push("a".into()),
            a => parts.push(alloc::format!("a^{a}")),
        }
        if self.b == 1 {
            parts.push("b".into());
        }
        if self.c == 1 {
            parts.push("g".into());
        }
        if parts.is_empty() {
            return "1".into();
        }
        parts.join("*")
    }
}

fn superscript(mut x: usize, out: &mut String) {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    let mut digits = Vec::new();
    loop {
        digits.push(DIGITS[x % 10]);
        x /= 10;
        if x == 0 {
            break;
        }
    }
    out.extend(digits.iter().rev());
}

impl fmt::Display for CanonicalTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        if self.a > 0 {
            s.push('α');
            if self.a > 1 {
                superscript(self.a, &mut s);
            }
        }
        if self.b == 1 {
            s.push('β');
        }
        if self.c == 1 {
            s.push('γ');
        }
        if s.is_empty() {
            s.push('1');
        }
        f.write_str(&s)
    }
}

/// A named Kronecker involution: a word in α, β, γ or the Desargues
/// symmetry Δ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedInvolution {
    Word(CanonicalTriple),
    Delta,
}

impl NamedInvolution {
    pub fn ascii(&self) -> String {
        match self {
            NamedInvolution::Word(t) => t.ascii(),
            NamedInvolution::Delta => "D".into(),
        }
    }
}

impl fmt::Display for NamedInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedInvolution::Word(t) => t.fmt(f),
            NamedInvolution::Delta => f.write_str("Δ"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Letter {
    Alpha,
    AlphaInv,
    Beta,
    Gamma,
    GammaInv,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum GammaKind {
    /// `k² ≡ 1`: γ² = 1.
    Plus,
    /// `k² ≡ -1`: γ² = β.
    Minus,
}

fn gamma_kind(n: usize, k: usize) -> Result<GammaKind, PermError> {
    if n >= 3 && squares_to_one(n as u64, k as u64) {
        Ok(GammaKind::Plus)
    } else if n >= 3 && squares_to_minus_one(n as u64, k as u64) {
        Ok(GammaKind::Minus)
    } else {
        Err(PermError::GammaNotAutomorphism { n, k })
    }
}

/// Normal form `α^a β^b γ^c` of a word (letters multiply left to right, so the
/// rightmost letter acts first).
///
/// The word is folded from the left: multiplying `α^a β^b γ^c` on the right by
/// `α^e` uses `γα^e = α^{ke}γ` and `βα^e = α^{-e}β`; by `β` uses `γβ = βγ`; by
/// `γ` uses `γ² = 1` or `γ² = β`.
pub fn normalize_word(n: usize, k: usize, word: &[Letter]) -> Result<CanonicalTriple, PermError> {
    let kind = if word.iter().any(|l| matches!(l, Letter::Gamma | Letter::GammaInv)) {
        Some(gamma_kind(n, k)?)
    } else {
        None
    };
    let (mut a, mut b, mut c) = (0i64, 0u8, 0u8);
    let times_gamma = |a: i64, b: u8, c: u8| -> (i64, u8, u8) {
        if c == 0 {
            (a, b, 1)
        } else if kind == Some(GammaKind::Plus) {
            (a, b, 0)
        } else {
            (a, b ^ 1, 0)
        }
    };
    for letter in word {
        match letter {
            Letter::Alpha | Letter::AlphaInv => {
                let mut e: i64 = if *letter == Letter::Alpha { 1 } else { -1 };
                if c == 1 {
                    e *= k as i64;
                }
                if b == 1 {
                    e = -e;
                }
                a = (a + e).rem_euclid(n as i64);
            }
            Letter::Beta => b ^= 1,
            Letter::Gamma => (a, b, c) = times_gamma(a, b, c),
            Letter::GammaInv => {
                // γ⁻¹ = γ when γ² = 1, γ³ otherwise
                let reps = if kind == Some(GammaKind::Plus) { 1 } else { 3 };
                for _ in 0..reps {
                    (a, b, c) = times_gamma(a, b, c);
                }
            }
        }
    }
    Ok(CanonicalTriple { a: modn(a, n), b, c })
}

/// Evaluates `α^a β^b γ^c` on GP(n,k) labels.
pub fn from_triple(n: usize, k: usize, t: CanonicalTriple) -> Result<Permutation, PermError> {
    let mut p = alpha(n).power(t.a as i64);
    if t.b == 1 {
        p = p.compose(&beta(n))?;
    }
    if t.c == 1 {
        p = p.compose(&gamma(n, k)?)?;
    }
    Ok(p)
}

/// Evaluates a word letter by letter, without any rewriting.
pub fn evaluate_word(n: usize, k: usize, word: &[Letter]) -> Result<Permutation, PermError> {
    let mut p = Permutation::identity(2 * n);
    for letter in word {
        let q = match letter {
            Letter::Alpha => alpha(n),
            Letter::AlphaInv => alpha(n).inverse(),
            Letter::Beta => beta(n),
            Letter::Gamma => gamma(n, k)?,
            Letter::GammaInv => gamma(n, k)?.inverse(),
        };
        p = p.compose(&q)?;
    }
    Ok(p)
}

/// Whether `p` maps the edge set of `g` onto itself.
pub fn is_automorphism(g: &Graph, p: &Permutation) -> Result<bool, PermError> {
    if p.len() != g.vertex_count() {
        return Err(PermError::LengthMismatch { left: p.len(), right: g.vertex_count() });
    }
    Ok(g.edges().iter().all(|&(a, b)| g.has_edge(p.apply(a), p.apply(b))))
}

/// The facts that decide whether an automorphism is a Kronecker involution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InvolutionProfile {
    pub is_involution: bool,
    pub fixed_vertices: usize,
    /// Edges `{x, y}` with `p(x) = y` and `p(y) = x`.
    pub fixed_edges: usize,
    pub color_reversing: bool,
}

pub fn involution_profile(
    g: &Graph,
    bip: &Bipartition,
    p: &Permutation,
) -> Result<InvolutionProfile, PermError> {
    if !is_automorphism(g, p)? {
        return Err(PermError::NotAutomorphism);
    }
    let fixed_edges =
        g.edges().iter().filter(|&&(x, y)| p.apply(x) == y && p.apply(y) == x).count();
    Ok(InvolutionProfile {
        is_involution: p.is_involution(),
        fixed_vertices: p.fixed_points().count(),
        fixed_edges,
        color_reversing: (0..g.vertex_count()).all(|x| bip.color(x) != bip.color(p.apply(x))),
    })
}
