use core::fmt;

/// Errors raised by the engine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Base-graph order outside `1..=64`.
    OrderOutOfRange { order: usize },
    SelfLoop { vertex: usize },
    /// `v` lists `u` as a neighbor but not conversely.
    Asymmetric { u: usize, v: usize },
    VertexOutOfRange { vertex: usize, order: usize },
    /// A family generator received a parameter outside its valid range.
    ParamOutOfRange { family: &'static str, detail: &'static str },
    /// A vertex set mentions vertices beyond the graph order.
    SetOutOfRange { bits: u64, order: usize },
    OrderTooLargeForExhaustive { order: usize, limit: usize },
    /// A reconfiguration graph would exceed the configured vertex cap.
    ReconTooLarge { cap: usize },
    KBelowXNumber { k: usize, x_number: usize },
    NotAVertex { bits: u64 },
    SearchTooLarge { order: usize, limit: usize },
    TooLargeForCanonical { order: usize, limit: usize },
    OrderTooLargeForEnumeration { order: usize, limit: usize },
    /// A reconfiguration graph assembled from parts violates its construction rule.
    InvalidReconGraph(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OrderOutOfRange { order } => {
                write!(f, "graph order {order} outside the supported range 1..=64")
            }
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::Asymmetric { u, v } => {
                write!(f, "adjacency not symmetric between {u} and {v}")
            }
            Error::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for a graph of order {order}")
            }
            Error::ParamOutOfRange { family, detail } => {
                write!(f, "parameter out of range for {family}: {detail}")
            }
            Error::SetOutOfRange { bits, order } => {
                write!(f, "vertex set {bits:#x} has members beyond order {order}")
            }
            Error::OrderTooLargeForExhaustive { order, limit } => write!(
                f,
                "order {order} too large for an exhaustive subset scan (limit {limit})"
            ),
            Error::ReconTooLarge { cap } => {
                write!(f, "reconfiguration graph exceeds the vertex cap of {cap}")
            }
            Error::KBelowXNumber { k, x_number } => {
                write!(f, "k = {k} is below the parameter value {x_number}")
            }
            Error::NotAVertex { bits } => {
                write!(f, "set {bits:#x} is not a vertex of the reconfiguration graph")
            }
            Error::SearchTooLarge { order, limit } => {
                write!(f, "search space of order {order} exceeds the limit {limit}")
            }
            Error::TooLargeForCanonical { order, limit } => {
                write!(f, "order {order} too large for canonical labeling (limit {limit})")
            }
            Error::OrderTooLargeForEnumeration { order, limit } => {
                write!(f, "order {order} too large for graph enumeration (limit {limit})")
            }
            Error::InvalidReconGraph(why) => write!(f, "invalid reconfiguration graph: {why}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
