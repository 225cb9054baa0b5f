use core::fmt;

/// Result alias used across the crate.
pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong in the core routines.
#[allow(missing_docs)]
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// `n * d` is odd, so no perfect matching of half-edges exists.
    OddHalfEdges { n: usize, d: usize },
    /// Degree below 3.
    DegreeTooSmall { d: usize },
    /// Too few vertices for the requested operation.
    TooFewVertices { n: usize, min: usize },
    /// A supplied pairing is not a fixed-point-free involution.
    InvalidPairing { half_edge: usize },
    /// Rejection sampling for a simple graph gave up.
    RejectionExhausted { attempts: u32 },
    /// Some vertices could not be reached from the source.
    Disconnected { unreached: usize },
    /// Vertex index out of range.
    InvalidVertex { vertex: usize, n: usize },
    /// Two consecutive path vertices are not adjacent, or an edge id is out of range.
    MissingEdge { from: usize, to: usize },
    /// All-pairs computation refused because `n` exceeds the configured cap.
    AllPairsCap { n: usize, cap: usize },
    /// A boundary trace entry is too small for the coupling probabilities.
    InvalidTrace {
        index: usize,
        value: usize,
        min: usize,
    },
    /// Argument outside the mathematical domain of a function.
    Domain(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OddHalfEdges { n, d } => {
                write!(
                    f,
                    "n*d must be even (n={n}, d={d} gives {} half-edges)",
                    n * d
                )
            }
            Error::DegreeTooSmall { d } => write!(f, "degree must be at least 3, got {d}"),
            Error::TooFewVertices { n, min } => write!(f, "need at least {min} vertices, got {n}"),
            Error::InvalidPairing { half_edge } => {
                write!(
                    f,
                    "pairing is not a fixed-point-free involution at half-edge {half_edge}"
                )
            }
            Error::RejectionExhausted { attempts } => write!(
                f,
                "no simple graph after {attempts} attempts; use multigraph mode for this degree"
            ),
            Error::Disconnected { unreached } => {
                write!(f, "graph is disconnected: {unreached} vertices unreached")
            }
            Error::InvalidVertex { vertex, n } => {
                write!(f, "vertex {vertex} out of range for n={n}")
            }
            Error::MissingEdge { from, to } => write!(f, "no edge between {from} and {to}"),
            Error::AllPairsCap { n, cap } => {
                write!(f, "all-pairs computation refused: n={n} exceeds cap {cap}")
            }
            Error::InvalidTrace { index, value, min } => {
                write!(f, "boundary trace entry S_{index}={value} is below {min}")
            }
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
