//! Closed-form decision of which GP(n,k) are Kronecker covers, and the
//! number theory behind it.
//!
//! Two families of rim-swapping involutions matter: `ω_a = α^a γ` with
//! `Ω_a(i) = ki + a`, and `ω'_a = α^a β γ` with `Ω'_a(i) = a − ki`. Here
//! `ω_a` sends `u_i` to `v_{Ω_a(i)}`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{gcd, modn, squares_to_one};
use crate::error::{ClassifyError, LcfError};
use crate::families::{c_minus, c_plus, gp, h_graph, lcf, GpParams, LcfSpec};
use crate::graph::Graph;
use crate::perm::{CanonicalTriple, NamedInvolution};

/// Exponent of the largest power of two dividing `i`.
pub fn two_adic(i: u64) -> Result<u32, ClassifyError> {
    if i == 0 {
        return Err(ClassifyError::ZeroArgument);
    }
    Ok(i.trailing_zeros())
}

/// `Q = (k² − 1) / n` when `n` divides `k² − 1`.
pub fn q_value(n: u64, k: u64) -> Option<u64> {
    let s = k * k - 1;
    (n != 0 && k != 0 && s % n == 0).then_some(s / n)
}

/// The minimal shifts of the two involution families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arith {
    pub n: u64,
    pub k: u64,
    pub q: Option<u64>,
    /// `n / gcd(n, k + 1)`
    pub a_min: u64,
    /// `n / gcd(n, n − k + 1)`
    pub a_min_prime: u64,
}

impl Arith {
    pub fn new(n: u64, k: u64) -> Self {
        Arith {
            n,
            k,
            q: q_value(n, k),
            a_min: n / gcd(n, k + 1),
            a_min_prime: n / gcd(n, n - k + 1),
        }
    }
}

/// `α^a γ` (plain) or `α^a β γ` (reflected).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Plain,
    Reflected,
}

impl Kind {
    pub fn triple(self, a: usize) -> CanonicalTriple {
        match self {
            Kind::Plain => CanonicalTriple::new(a, 0, 1),
            Kind::Reflected => CanonicalTriple::new(a, 1, 1),
        }
    }
}

/// Decides by arithmetic alone whether `ω_a` / `ω'_a` is a Kronecker
/// involution of GP(n,k), assuming `k² ≡ 1 (mod n)`.
///
/// Colour reversal needs `a` even and `k` odd, involution needs
/// `Ω(Ω(i)) ≡ i`, and a fixed spoke is a solution of `Ω(i) ≡ i`.
pub fn omega_is_kronecker(n: u64, k: u64, a: u64, kind: Kind) -> bool {
    if n % 2 == 1 || k % 2 == 0 || a % 2 == 1 || !squares_to_one(n, k) {
        return false;
    }
    let a = a % n;
    match kind {
        Kind::Plain => (a * (k + 1)) % n == 0 && a % gcd(n, k - 1) != 0,
        Kind::Reflected => (a * (n - k + 1)) % n == 0 && a % gcd(n, k + 1) != 0,
    }
}

/// The five necessary conditions for `ω_a` (plain) or `ω'_a` (reflected).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Conditions {
    /// `ω_{2a}` is not a Kronecker involution.
    pub c1: bool,
    /// `a` is an odd multiple of the minimal shift.
    pub c2: bool,
    /// The minimal shift is even.
    pub c3: bool,
    /// `Q` is even.
    pub c4: bool,
    /// `k ≡ 1 (mod 4)` (plain) or `k ≡ −1 (mod 4)` (reflected).
    pub c5: bool,
}

impl Conditions {
    pub fn all(&self) -> bool {
        self.c1 && self.c2 && self.c3 && self.c4 && self.c5
    }
}

pub fn necessary_conditions(n: u64, k: u64, a: u64, kind: Kind) -> Result<Conditions, ClassifyError> {
    let Some(q) = q_value(n, k) else {
        return Err(ClassifyError::NotUnitSquare { n: n as usize, k: k as usize });
    };
    let ar = Arith::new(n, k);
    let m = match kind {
        Kind::Plain => ar.a_min,
        Kind::Reflected => ar.a_min_prime,
    };
    Ok(Conditions {
        c1: !omega_is_kronecker(n, k, (2 * a) % n, kind),
        c2: a % m == 0 && (a / m) % 2 == 1,
        c3: m % 2 == 0,
        c4: q % 2 == 0,
        c5: match kind {
            Kind::Plain => k % 4 == 1,
            Kind::Reflected => k % 4 == 3,
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Case {
    A1,
    A2,
    B1,
    B2,
    Exceptional10_3,
    Exceptional8_3,
    NoCover,
    NotBipartite,
}

impl Case {
    pub fn name(self) -> &'static str {
        match self {
            Case::A1 => "A1",
            Case::A2 => "A2",
            Case::B1 => "B1",
            Case::B2 => "B2",
            Case::Exceptional10_3 => "Exceptional_10_3",
            Case::Exceptional8_3 => "Exceptional_8_3",
            Case::NoCover => "NoCover",
            Case::NotBipartite => "NotBipartite",
        }
    }

    /// Whether the closed form claims a Kronecker cover. `None` for (8,3),
    /// which is left to the search oracle.
    pub fn is_cover(self) -> Option<bool> {
        match self {
            Case::A1 | Case::A2 | Case::B1 | Case::B2 | Case::Exceptional10_3 => Some(true),
            Case::Exceptional8_3 => None,
            Case::NoCover | Case::NotBipartite => Some(false),
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A quotient graph named by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuotientDescriptor {
    Gp(GpParams),
    CPlus(GpParams),
    CMinus(GpParams),
    H,
    OracleDetermined,
}

impl QuotientDescriptor {
    pub fn lcf_spec(&self) -> Option<LcfSpec> {
        match self {
            QuotientDescriptor::CPlus(p) => c_plus(*p).ok(),
            QuotientDescriptor::CMinus(p) => c_minus(*p).ok(),
            _ => None,
        }
    }

    /// Builds the graph; `None` for [`QuotientDescriptor::OracleDetermined`].
    pub fn materialize(&self) -> Option<Result<Graph, LcfError>> {
        match self {
            QuotientDescriptor::Gp(p) => Some(Ok(gp(*p))),
            QuotientDescriptor::CPlus(_) | QuotientDescriptor::CMinus(_) => {
                self.lcf_spec().map(|s| lcf(&s))
            }
            QuotientDescriptor::H => Some(Ok(h_graph())),
            QuotientDescriptor::OracleDetermined => None,
        }
    }
}

impl fmt::Display for QuotientDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientDescriptor::Gp(p) => write!(f, "{p}"),
            QuotientDescriptor::CPlus(p) => write!(f, "C+({},{})", p.n(), p.k()),
            QuotientDescriptor::CMinus(p) => write!(f, "C-({},{})", p.n(), p.k()),
            QuotientDescriptor::H => f.write_str("H"),
            QuotientDescriptor::OracleDetermined => f.write_str("oracle"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub params: GpParams,
    pub case: Case,
    pub quotients: Vec<QuotientDescriptor>,
    /// Canonical Kronecker involutions, one per quotient.
    pub involutions: Vec<NamedInvolution>,
}

pub fn classify(p: GpParams) -> Classification {
    let (n, k) = (p.n(), p.k());
    let make = |case, quotients, involutions| Classification { params: p, case, quotients, involutions };
    if (n, k) == (10, 3) {
        return make(
            Case::Exceptional10_3,
            vec![QuotientDescriptor::Gp(GpParams::new(5, 2).unwrap()), QuotientDescriptor::H],
            vec![NamedInvolution::Word(CanonicalTriple::new(5, 0, 0)), NamedInvolution::Delta],
        );
    }
    if (n, k) == (8, 3) {
        return make(Case::Exceptional8_3, vec![QuotientDescriptor::OracleDetermined], vec![]);
    }
    if n % 2 == 1 || k % 2 == 0 {
        return make(Case::NotBipartite, vec![], vec![]);
    }
    let half = n / 2;
    if n % 4 == 2 {
        let (case, q) = if 4 * k < n {
            (Case::A1, GpParams::new(half, k))
        } else {
            (Case::A2, GpParams::new(half, half - k))
        };
        let q = q.expect("half-size parameters are valid");
        return make(case, vec![QuotientDescriptor::Gp(q)], vec![NamedInvolution::Word(CanonicalTriple::new(half, 0, 0))]);
    }
    let (n64, k64) = (n as u64, k as u64);
    let q_even = q_value(n64, k64).is_some_and(|q| q % 2 == 0);
    assert_eq!(q_even, (k64 * k64 - 1) % (2 * n64) == 0, "two forms of the cover condition disagree");
    if !q_even {
        return make(Case::NoCover, vec![], vec![]);
    }
    if k % 4 == 1 {
        make(Case::B1, vec![QuotientDescriptor::CPlus(p)], vec![NamedInvolution::Word(Kind::Plain.triple(half))])
    } else {
        make(Case::B2, vec![QuotientDescriptor::CMinus(p)], vec![NamedInvolution::Word(Kind::Reflected.triple(half))])
    }
}

fn b_kind(p: GpParams) -> Result<Kind, ClassifyError> {
    match classify(p).case {
        Case::B1 => Ok(Kind::Plain),
        Case::B2 => Ok(Kind::Reflected),
        _ => Err(ClassifyError::WrongCase),
    }
}

/// Triples `(s·m, b, 1)` for odd `s` with `s·m < n`, where `m` is the
/// minimal shift of the family matching the case; ascending in `a`.
pub fn involution_family(p: GpParams) -> Result<Vec<CanonicalTriple>, ClassifyError> {
    let kind = b_kind(p)?;
    let ar = Arith::new(p.n() as u64, p.k() as u64);
    let m = match kind {
        Kind::Plain => ar.a_min,
        Kind::Reflected => ar.a_min_prime,
    } as usize;
    Ok((m..p.n()).step_by(2 * m).map(|a| kind.triple(a)).collect())
}

/// LCF jumps of the quotient by `ω_a`: `f_a(i) = ik + a − i` in case B1 and
/// `f_a(i) = a − ik − i` in case B2.
pub fn quotient_lcf(p: GpParams, a: usize) -> Result<LcfSpec, ClassifyError> {
    let kind = b_kind(p)?;
    if !involution_family(p)?.iter().any(|t| t.a == a % p.n()) {
        return Err(ClassifyError::NotInFamily { a });
    }
    let (n, k, a) = (p.n() as i64, p.k() as i64, a as i64);
    let jumps = (0..n).map(|i| match kind {
        Kind::Plain => modn(i * k + a - i, n as usize) as i64,
        Kind::Reflected => modn(a - i * k - i, n as usize) as i64,
    });
    Ok(LcfSpec::new(jumps))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetryClass {
    pub symmetric: bool,
    pub vertex_transitive: bool,
    pub cayley: bool,
}

const SYMMETRIC: [(usize, usize); 7] = [(4, 1), (5, 2), (8, 3), (10, 2), (10, 3), (12, 5), (24, 5)];

pub fn symmetry_class(p: GpParams) -> SymmetryClass {
    let (n, k) = (p.n() as u64, p.k() as u64);
    let sq = (k * k) % n;
    SymmetryClass {
        symmetric: SYMMETRIC.contains(&(p.n(), p.k())),
        vertex_transitive: sq == 1 % n || sq == n - 1 || (n, k) == (10, 2),
        cayley: sq == 1 % n,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn gpp(n: usize, k: usize) -> GpParams {
        GpParams::new(n, k).unwrap()
    }

    #[test]
    fn valuations() {
        assert_eq!(two_adic(12), Ok(2));
        assert_eq!(two_adic(7), Ok(0));
        assert_eq!(two_adic(8), Ok(3));
        assert_eq!(two_adic(0), Err(ClassifyError::ZeroArgument));
        assert_eq!(q_value(12, 5), Some(2));
        assert_eq!(q_value(24, 5), Some(1));
        assert_eq!(q_value(7, 2), None);
    }

    #[test]
    fn conditions() {
        let c = necessary_conditions(12, 5, 6, Kind::Plain).unwrap();
        assert!(c.all());
        assert!(!necessary_conditions(24, 5, 12, Kind::Plain).unwrap().c4);
        assert!(necessary_conditions(24, 7, 12, Kind::Reflected).unwrap().all());
        assert_eq!(
            necessary_conditions(7, 2, 0, Kind::Plain),
            Err(ClassifyError::NotUnitSquare { n: 7, k: 2 })
        );
    }

    #[test]
    fn cases() {
        let c = classify(gpp(6, 1));
        assert_eq!((c.case, c.quotients), (Case::A1, vec![QuotientDescriptor::Gp(gpp(3, 1))]));
        let c = classify(gpp(26, 7));
        assert_eq!((c.case, c.quotients), (Case::A2, vec![QuotientDescriptor::Gp(gpp(13, 6))]));
        let c = classify(gpp(20, 9));
        assert_eq!((c.case, c.quotients), (Case::B1, vec![QuotientDescriptor::CPlus(gpp(20, 9))]));
        let c = classify(gpp(24, 7));
        assert_eq!((c.case, c.quotients), (Case::B2, vec![QuotientDescriptor::CMinus(gpp(24, 7))]));
        let c = classify(gpp(10, 3));
        assert_eq!(c.case, Case::Exceptional10_3);
        assert_eq!(c.quotients, vec![QuotientDescriptor::Gp(gpp(5, 2)), QuotientDescriptor::H]);
        assert_eq!(classify(gpp(24, 5)).case, Case::NoCover);
        assert_eq!(classify(gpp(40, 9)).case, Case::B1);
        assert_eq!(classify(gpp(11, 2)).case, Case::NotBipartite);
        assert_eq!(classify(gpp(12, 2)).case, Case::NotBipartite);
        assert_eq!(classify(gpp(8, 3)).quotients, vec![QuotientDescriptor::OracleDetermined]);
        let c = classify(gpp(12, 5));
        assert_eq!(format!("{}", c.involutions[0]), "α⁶γ");
    }

    #[test]
    fn families() {
        let t = |a| CanonicalTriple::new(a, 0, 1);
        assert_eq!(involution_family(gpp(12, 5)).unwrap(), vec![t(2), t(6), t(10)]);
        assert_eq!(involution_family(gpp(4, 1)).unwrap(), vec![t(2)]);
        assert_eq!(involution_family(gpp(7, 2)), Err(ClassifyError::WrongCase));
        for (n, k) in [(12, 5), (4, 1), (20, 9), (24, 7), (40, 9)] {
            for t in involution_family(gpp(n, k)).unwrap() {
                let kind = if t.b == 0 { Kind::Plain } else { Kind::Reflected };
                assert!(omega_is_kronecker(n as u64, k as u64, t.a as u64, kind), "{n} {k} {t:?}");
            }
        }
    }

    #[test]
    fn quotient_specs() {
        assert_eq!(quotient_lcf(gpp(12, 5), 6).unwrap(), c_plus(gpp(12, 5)).unwrap());
        assert_eq!(quotient_lcf(gpp(24, 7), 12).unwrap(), c_minus(gpp(24, 7)).unwrap());
        assert_eq!(quotient_lcf(gpp(12, 5), 2).unwrap(), quotient_lcf(gpp(12, 5), 6).unwrap().rotated(-1));
        assert_eq!(quotient_lcf(gpp(12, 5), 4), Err(ClassifyError::NotInFamily { a: 4 }));
    }

    #[test]
    fn symmetry() {
        let s = |symmetric, vertex_transitive, cayley| SymmetryClass { symmetric, vertex_transitive, cayley };
        assert_eq!(symmetry_class(gpp(24, 5)), s(true, true, true));
        assert_eq!(symmetry_class(gpp(10, 2)), s(true, true, false));
        assert_eq!(symmetry_class(gpp(7, 2)), s(false, false, false));
    }
}
