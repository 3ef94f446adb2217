//! Error type shared by the whole crate.

use core::fmt;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A permutation was applied to a graph of a different order.
    SizeMismatch { expected: usize, found: usize },
    /// A vertex index is not in `0..n`.
    VertexOutOfRange { vertex: usize, n: usize },
    /// The same vertex appears twice where distinct vertices are required.
    DuplicateVertex { vertex: usize },
    /// The image array does not describe a bijection.
    NotAPermutation,
    /// Malformed cycle notation.
    BadCycleNotation { reason: &'static str },
    /// Malformed graph6 input.
    Graph6 { reason: Graph6Error },
    /// The graph is too large for the requested operation.
    GuardExceeded { n: usize, max: usize },
    /// An operation that requires a self-complementary input got something else.
    NotSelfComplementary,
    /// The pair-partition shift is divisible by the modulus.
    ShiftDivisible { shift: usize, modulus: usize },
    /// A vertex sequence handed in as an antimorphism cycle is not one.
    InconsistentCycle,
    /// The cycle length is not a positive multiple of four.
    CycleNotQuad { len: usize },
    /// An antimorphism with the wrong cycle structure for the requested decomposition.
    WrongCycleType,
    /// The permutation is not an antimorphism of the graph.
    NotAnAntimorphism,
    /// The graph has no vertex of degree one.
    NoEndVertex,
    /// The witness fails its own verification.
    InvalidWitness,
    /// A state that the underlying theorems rule out. Seeing this means a bug.
    Inconsistency(&'static str),
}

/// Reasons a graph6 line can be rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Graph6Error {
    Empty,
    /// The length byte encodes n > 62 or the multi-byte length marker.
    BadLengthByte(u8),
    /// A byte outside the printable range 63..=126.
    CharOutOfRange(u8),
    /// Fewer edge bytes than the length byte demands.
    Truncated,
    /// More edge bytes than the length byte demands.
    TrailingData,
    /// Padding bits of the last byte are not zero.
    TrailingBits,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SizeMismatch { expected, found } => {
                write!(f, "size mismatch: expected {expected}, found {found}")
            }
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph on {n} vertices")
            }
            Error::DuplicateVertex { vertex } => write!(f, "duplicate vertex {vertex}"),
            Error::NotAPermutation => write!(f, "image array is not a bijection"),
            Error::BadCycleNotation { reason } => write!(f, "bad cycle notation: {reason}"),
            Error::Graph6 { reason } => write!(f, "bad graph6 input: {reason}"),
            Error::GuardExceeded { n, max } => {
                write!(f, "graph on {n} vertices exceeds the guard of {max}")
            }
            Error::NotSelfComplementary => write!(f, "graph is not self-complementary"),
            Error::ShiftDivisible { shift, modulus } => {
                write!(f, "shift {shift} is divisible by {modulus}")
            }
            Error::InconsistentCycle => {
                write!(f, "vertex sequence is not a cycle of an antimorphism of the graph")
            }
            Error::CycleNotQuad { len } => {
                write!(f, "cycle length {len} is not a positive multiple of four")
            }
            Error::WrongCycleType => {
                write!(f, "antimorphism is not a 4-cycle times one other cycle")
            }
            Error::NotAnAntimorphism => write!(f, "permutation is not an antimorphism"),
            Error::NoEndVertex => write!(f, "graph has no vertex of degree one"),
            Error::InvalidWitness => write!(f, "witness fails verification"),
            Error::Inconsistency(what) => write!(f, "internal inconsistency: {what}"),
        }
    }
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::Empty => write!(f, "empty line"),
            Graph6Error::BadLengthByte(b) => write!(f, "unsupported length byte {b}"),
            Graph6Error::CharOutOfRange(b) => write!(f, "byte {b} outside 63..=126"),
            Graph6Error::Truncated => write!(f, "truncated edge data"),
            Graph6Error::TrailingData => write!(f, "trailing data after edge bits"),
            Graph6Error::TrailingBits => write!(f, "nonzero padding bits"),
        }
    }
}

impl core::error::Error for Error {}
