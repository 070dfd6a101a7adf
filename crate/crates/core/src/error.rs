use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors shared by all modules.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A graph constructor was given an invalid size.
    #[error("invalid graph size: {0}")]
    InvalidSize(String),

    /// An edge list violates the simple-graph invariants.
    #[error("invalid edge ({x}, {y}): {reason}")]
    InvalidEdge { x: usize, y: usize, reason: &'static str },

    /// A numeric argument is outside an operation's precondition.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A configuration or parameter vector has the wrong length.
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    /// Exhaustive enumeration was requested beyond the brute-force cap.
    /// Operations refuse instead of silently truncating.
    #[error("instance with {vertices} vertices exceeds the brute-force cap of {cap}")]
    TooLarge { vertices: usize, cap: usize },

    /// An operation requires a specific graph family and got something else.
    #[error("unsupported graph structure: {0}")]
    WrongGraphFamily(String),

    /// A theorem hypothesis required by the operation does not hold.
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    /// The digit search hit its hard cap without reaching the target.
    #[error("digit search exceeded the cap of {cap} bits")]
    DigitCapExceeded { cap: u32 },
}
