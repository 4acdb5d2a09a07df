use thiserror::Error;

/// Errors surfaced by the invariant calculators.
#[derive(Debug, Clone, Error)]
pub enum CalcError {
    /// Input points for a body span less than three dimensions.
    #[error("degenerate body: {0}")]
    DegenerateBody(String),

    /// A density profile carries no mass.
    #[error("density has zero total mass")]
    EmptyDensity,

    /// The Futaki function keeps one sign over the admissible range of xi.
    #[error("no sign change while bracketing the soliton candidate (|xi * alpha| capped at {cap})")]
    NoBracket { cap: f64 },

    /// The soliton solve did not reach tolerance.
    #[error("soliton solve did not converge within {iterations} iterations")]
    NonConvergence { iterations: usize },

    /// A lattice enumeration would exceed the configured point cap.
    #[error("lattice enumeration needs about {needed} points, cap is {cap}")]
    ResourceLimit { needed: u128, cap: u128 },

    /// A fiber-volume profile disagrees with the scenario it is attached to.
    #[error("profile mismatch: {0}")]
    ProfileMismatch(String),

    /// A fiber-volume profile violates its structural invariants.
    #[error("invalid profile: {0}")]
    InvalidProfile(String),

    /// Unknown builtin scenario id.
    #[error("unknown scenario {0:?}")]
    UnknownScenario(String),

    /// Boundary coefficient outside the admissible range for a bundle.
    #[error("bad boundary coefficient: {0}")]
    BadBoundary(String),

    /// A scenario references a check id that does not exist.
    #[error("invalid scenario: {0}")]
    InvalidScenario(String),
}
