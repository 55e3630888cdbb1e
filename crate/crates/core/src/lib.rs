//! Non-cooperative and cooperative solutions of two-player bimatrix games.
//!
//! The solvers cover the pure Nash equilibria, the transferable-utility (TU)
//! solution with optimal threats, the Nash bargaining solution over the
//! convex hull of pure outcomes, and the lambda-transfer solution. The
//! [`models`] module ships the counter-terrorism games (Preempt, Status Quo,
//! Deter) along with their closed-form answers.

pub mod cli;
pub mod coop;
pub mod error;
pub mod geom;
pub mod matgame;
pub mod models;

pub use coop::{
    delta_of_lambda, lambda_transfer, lambda_transfer_with, nash_bargaining, ntu_nash, pure_nash,
    sigma_of_lambda, tu_solution, Bimatrix, LambdaOptions, LambdaSolution, NtuSolution,
    PureEquilibrium, TuSolution,
};
pub use error::{Error, Result};
pub use geom::{feasible_set, FeasibleSet, PayoffPoint, Segment, Support};
pub use matgame::{GameValue, Matrix, MixedStrategy};
