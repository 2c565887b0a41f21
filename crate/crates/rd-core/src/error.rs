use thiserror::Error;

/// Errors produced by the workbench.
#[derive(Debug, Error)]
pub enum Error {
    /// Two elements (or an element and a function) belong to different backends.
    #[error("backend mismatch: operands come from different groups")]
    BackendMismatch,

    /// An operation that only makes sense on a graph product was called on
    /// another backend.
    #[error("operation requires a graph-product backend")]
    NotGraphProduct,

    /// An operation that only makes sense on a free group was called on
    /// another backend.
    #[error("operation requires a free-group backend")]
    NotFree,

    /// An operation that only makes sense on a weighted-abelian backend was
    /// called on another backend.
    #[error("operation requires a weighted-abelian backend")]
    NotWeightedAbelian,

    /// A function with empty support was passed where a nonempty one is needed.
    #[error("function has empty support")]
    EmptySupport,

    /// The given elements do not multiply to the claimed product.
    #[error("the listed parts do not multiply to the given element")]
    NotAProduct,

    /// Enumeration exceeded the configured element cap.
    #[error("enumeration budget exceeded: more than {cap} elements at radius {radius}")]
    BudgetExceeded { cap: usize, radius: String },

    /// Incremental search exceeded its cap.
    #[error("search cap reached: no result up to {cap}")]
    SearchCapReached { cap: u64 },

    /// A group configuration failed validation.
    #[error("invalid group configuration: {0}")]
    InvalidConfig(String),

    /// A canonical element string failed to parse.
    #[error("cannot parse element '{input}': {reason}")]
    ParseElement { input: String, reason: String },

    /// A polynomial or numeric argument failed validation.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An internal invariant that the library guarantees was found violated.
    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}
