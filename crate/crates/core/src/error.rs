use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    Loop(usize),
    OutOfRange { vertex: usize, vertex_count: usize },
    LabelCount { expected: usize, found: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::Loop(v) => write!(f, "loop edge at vertex {v}"),
            GraphError::OutOfRange { vertex, vertex_count } => {
                write!(f, "vertex {vertex} out of range for a graph on {vertex_count} vertices")
            }
            GraphError::LabelCount { expected, found } => {
                write!(f, "expected {expected} labels, got {found}")
            }
        }
    }
}

impl core::error::Error for GraphError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    Empty,
    BadByte { position: usize, byte: u8 },
    MalformedHeader,
    Truncated { expected: usize, found: usize },
    TrailingGarbage { expected: usize, found: usize },
    NonZeroPadding,
    TooLarge(usize),
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::Empty => write!(f, "empty graph6 string"),
            Graph6Error::BadByte { position, byte } => {
                write!(f, "byte {byte:#04x} at position {position} is not a graph6 character")
            }
            Graph6Error::MalformedHeader => write!(f, "malformed graph6 size header"),
            Graph6Error::Truncated { expected, found } => {
                write!(f, "truncated graph6 bit field: expected {expected} bytes, found {found}")
            }
            Graph6Error::TrailingGarbage { expected, found } => {
                write!(f, "trailing garbage after graph6 data: expected {expected} bytes, found {found}")
            }
            Graph6Error::NonZeroPadding => write!(f, "graph6 padding bits are not zero"),
            Graph6Error::TooLarge(n) => write!(f, "graph on {n} vertices is too large for graph6"),
        }
    }
}

impl core::error::Error for Graph6Error {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GpError {
    NTooSmall(usize),
    KOutOfRange { n: usize, k: usize },
}

impl fmt::Display for GpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GpError::NTooSmall(n) => write!(f, "GP(n,k) needs n >= 3, got n = {n}"),
            GpError::KOutOfRange { n, k } => {
                write!(f, "GP({n},{k}) needs 1 <= k < n/2, got k = {k}")
            }
        }
    }
}

impl core::error::Error for GpError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LcfError {
    NTooSmall(usize),
    Length { n: usize, found: usize },
    ZeroJump { position: usize },
    ParallelJump { position: usize },
    NotMatching { position: usize },
    OddN(usize),
}

impl fmt::Display for LcfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LcfError::NTooSmall(n) => write!(f, "LCF graph needs n >= 3, got {n}"),
            LcfError::Length { n, found } => write!(f, "expected {n} jumps, got {found}"),
            LcfError::ZeroJump { position } => write!(f, "jump at position {position} is 0 (loop)"),
            LcfError::ParallelJump { position } => {
                write!(f, "jump at position {position} is ±1 (parallel to the Hamilton cycle)")
            }
            LcfError::NotMatching { position } => {
                write!(f, "chords do not close into a matching at position {position}")
            }
            LcfError::OddN(n) => write!(f, "C+/C- need an even n, got {n}"),
        }
    }
}

impl core::error::Error for LcfError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PermError {
    NotBijection,
    LengthMismatch { left: usize, right: usize },
    GammaNotAutomorphism { n: usize, k: usize },
    NotAutomorphism,
}

impl fmt::Display for PermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermError::NotBijection => write!(f, "image vector is not a bijection"),
            PermError::LengthMismatch { left, right } => {
                write!(f, "permutation length mismatch: {left} vs {right}")
            }
            PermError::GammaNotAutomorphism { n, k } => {
                write!(f, "gamma needs k^2 = ±1 (mod n); {k}^2 is neither mod {n}")
            }
            PermError::NotAutomorphism => write!(f, "permutation is not an automorphism"),
        }
    }
}

impl core::error::Error for PermError {}

/// The clause of the Kronecker-involution test that failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverError {
    LengthMismatch,
    Disconnected,
    NotBipartite,
    NotAutomorphism,
    NotInvolution,
    FixedVertex(usize),
    ColorPreserving,
    FixedEdge(usize, usize),
}

impl fmt::Display for CoverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverError::LengthMismatch => write!(f, "permutation length does not match the graph"),
            CoverError::Disconnected => write!(f, "graph is not connected"),
            CoverError::NotBipartite => write!(f, "graph is not bipartite"),
            CoverError::NotAutomorphism => write!(f, "permutation is not an automorphism"),
            CoverError::NotInvolution => write!(f, "permutation is not an involution"),
            CoverError::FixedVertex(v) => write!(f, "permutation fixes vertex {v}"),
            CoverError::ColorPreserving => write!(f, "permutation does not reverse colors"),
            CoverError::FixedEdge(x, y) => write!(f, "permutation fixes edge {{{x},{y}}}"),
        }
    }
}

impl core::error::Error for CoverError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    ZeroArgument,
    NotUnitSquare { n: usize, k: usize },
    WrongCase,
    NotInFamily { a: usize },
}

impl fmt::Display for ClassifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassifyError::ZeroArgument => write!(f, "2-adic valuation of 0 is undefined"),
            ClassifyError::NotUnitSquare { n, k } => write!(f, "{k}^2 is not 1 mod {n}"),
            ClassifyError::WrongCase => write!(f, "parameters are not in case b1 or b2"),
            ClassifyError::NotInFamily { a } => {
                write!(f, "shift {a} does not give a Kronecker involution")
            }
        }
    }
}

impl core::error::Error for ClassifyError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchError {
    TooManyVertices { vertices: usize, bound: usize },
    GroupTooLarge { bound: usize },
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::TooManyVertices { vertices, bound } => {
                write!(f, "graph has {vertices} vertices, search bound is {bound}")
            }
            SearchError::GroupTooLarge { bound } => {
                write!(f, "automorphism group has more than {bound} elements")
            }
        }
    }
}

impl core::error::Error for SearchError {}
