use thiserror::Error;

/// Errors produced by the design and simulation routines.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument lies outside the domain an operation is defined on.
    #[error("domain error: {0}")]
    Domain(String),
    /// A numerical procedure failed to converge or produced non-finite values.
    #[error("numerical error: {0}")]
    Numerical(String),
    /// A design problem has no solution with the requested structure.
    #[error("design error: {0}")]
    Design(String),
    /// The constraint set is contradictory.
    #[error("infeasible constraints: {0}")]
    Infeasible(String),
    /// A linear solve is too ill-conditioned to trust.
    #[error("ill-conditioned problem: {0}")]
    IllConditioned(String),
}

pub type Result<T> = std::result::Result<T, Error>;
