use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid node string {0:?}: expected digits 0/1 only")]
    InvalidNode(String),

    #[error("node {0:?} is longer than the supported maximum of {max} digits", max = crate::btree::MAX_NODE_LEN)]
    NodeTooLong(String),

    #[error("{lower:?} is not strictly below {upper:?}")]
    NotStrictlyBelow { lower: String, upper: String },

    #[error("invalid V ({x:?},{y:?},{z:?}): {reason}")]
    InvalidVee {
        x: String,
        y: String,
        z: String,
        reason: &'static str,
    },

    #[error("invalid Y (low {low:?}, leaves {up_left:?}, {up_right:?}): {reason}")]
    InvalidWye {
        low: String,
        up_left: String,
        up_right: String,
        reason: &'static str,
    },

    #[error("invalid interval vertex [{a},{b}]: need 1 <= a < b")]
    InvalidInterval { a: i64, b: i64 },

    #[error("malformed vertex key {0:?}")]
    InvalidKey(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("unknown vertex {0}")]
    UnknownVertex(String),

    #[error("host is not a tree: {0}")]
    HostNotTree(String),

    #[error("decomposition does not match graph: {0}")]
    DecompositionMismatch(String),

    #[error("{what} has size {size}, above the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("intervals [{0},{1}] and [{2},{3}] do not have four distinct endpoints")]
    CoincidingEndpoints(i64, i64, i64, i64),

    #[error("the two-coloring C1+C3 / C2 is only defined for the shrunk decomposition")]
    RequiresShrunk,

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
