use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A bond-function sample dropped to -1 or below, so the pair potential
    /// -ln(g+1) is undefined there.
    #[error("non-physical pair function at radius {radius}: sample {value} <= -1")]
    NonPhysical { radius: f64, value: f64 },

    #[error("configuration of {m} points exceeds the direct-evaluator limit m_max = {m_max}")]
    OrderTooLarge { m: usize, m_max: usize },

    #[error("radial grid mismatch: {0}")]
    GridMismatch(String),

    #[error(
        "quadrature under-resolved: sigma {sigma:.3e} exceeds {fraction} of |value| = {value:.3e}"
    )]
    QuadratureUnderResolved { sigma: f64, value: f64, fraction: f64 },

    /// Convergence guard: the truncated series is only trusted while
    /// z * (c0 + ||g||) stays below 1/2.
    #[error("activity guard violated: z*(c0 + ||g||) = {product:.4} > {limit}")]
    ActivityGuard { product: f64, limit: f64 },

    #[error("smallness guard: target density {z0} exceeds {limit} (use force to override)")]
    SmallnessGuard { z0: f64, limit: f64 },

    #[error(
        "no convergence after {iterations} iterations: last step {last_step:.3e}, left domain: {left_domain}"
    )]
    NoConvergence { iterations: usize, last_step: f64, left_domain: bool },

    #[error("targets rejected: {0}")]
    Inadmissible(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("format error: {0}")]
    Format(String),
}
