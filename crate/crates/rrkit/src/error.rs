use thiserror::Error;

/// Errors reported by rrkit operations.
///
/// `Domain`, `InvalidDistribution`, `DimensionMismatch`, `NotDeterministic`
/// and `MalformedCodebook` indicate bad inputs; the remaining variants are
/// numerical or I/O failures.
#[derive(Debug, Error)]
pub enum Error {
    /// A scalar argument is outside its documented domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A probability vector or matrix row fails its stochasticity invariant.
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    /// Incompatible alphabet sizes.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// The Y3 branch is not a deterministic function of the input.
    #[error("channel is not deterministic: {0}")]
    NotDeterministic(String),

    /// Blocklength exceeds the exact-enumeration cap.
    #[error("blocklength {n} exceeds the enumeration cap of {max}")]
    BlocklengthTooLarge { n: usize, max: usize },

    /// A codebook document violates a structural requirement.
    #[error("malformed codebook: {0}")]
    MalformedCodebook(String),

    /// A root-finding bracket does not enclose a sign change; for the
    /// inequality checks this signals a non-increasing `f`.
    #[error("root not bracketed on [{lo}, {hi}]")]
    RootNotBracketed { lo: f64, hi: f64 },

    /// Hull construction was asked for from zero points.
    #[error("empty point cloud")]
    EmptyPointCloud,

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for input-validation errors (as opposed to numeric/IO failures).
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Domain(_)
                | Error::InvalidDistribution(_)
                | Error::DimensionMismatch(_)
                | Error::NotDeterministic(_)
                | Error::BlocklengthTooLarge { .. }
                | Error::MalformedCodebook(_)
                | Error::EmptyPointCloud
                | Error::Json(_)
        )
    }
}
