//! Inverse solver for Gibbs point processes with a unit hard core.
//!
//! Given a small target density and a pair correlation that vanishes inside
//! the unit ball, the library computes a hard-core pair potential and an
//! activity whose Gibbs field reproduces those targets. The forward map is a
//! truncated Mayer cluster expansion (Ursell-function integrals); the inverse
//! is a fixed-point iteration of a contracting operator on (activity, bond
//! function) pairs. An independent grand-canonical Monte Carlo sampler and an
//! exact one-dimensional hard-rod partition function serve as verification
//! oracles.

pub mod error;
pub mod expansion;
pub mod gcmc;
pub mod io;
pub mod pairfn;
pub mod seed;
pub mod solver;
pub mod ursell;

pub use error::{Error, Result};
pub use expansion::{
    forward_cluster, series_a, series_b, ForwardResult, OrderEstimate, QuadratureSpec, Scheme,
    SeriesResult, TruncationEstimate, UrsellTable,
};
pub use gcmc::{
    compare_to_targets, exact_rod_density, simulate, Boundary, ComparisonReport, Interaction,
    PairHistogram, SimulationConfig, SimulationResult,
};
pub use pairfn::{
    check_admissible, cluster_to_correlation, correlation_to_cluster, AdmissibilityReport,
    ClusterTargets, HardCorePotential, NormBracket, RadialFunction,
};
pub use solver::{
    apply_q, contraction_probe, domain_check, metric_rho, solve_inverse, ContractionReport,
    DomainCheck, DomainConstants, IterationTrace, SolveOutcome, SolverPoint,
};
pub use ursell::{
    boltzmann, boltzmann_sequence, gamma, gamma_inverse, star, ursell_direct, ursell_mobius,
    ursell_recurrence, Configuration, Point, TruncatedSequence,
};
