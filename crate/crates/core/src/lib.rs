//! Numerical and closed-form solutions of the fractional relaxation-oscillation
//! equation `D^α u + A u = f(t)` with a Caputo derivative of order `0 < α ≤ 2`.
//!
//! - [`expr`] parses forcing functions such as `5*cos(t^2)*exp(-t)`.
//! - [`mittag_leffler`] evaluates Γ and `E_{α,β}` on the negative real axis.
//! - [`solver`] is the predictor-corrector time stepper.
//! - [`analytic`] builds the exact Mittag-Leffler solutions used as an oracle.
//! - [`dataio`] loads measurements, exports curves and fits (α, A) to data.

pub mod analytic;
pub mod dataio;
pub mod expr;
pub mod mittag_leffler;
mod quadrature;
pub mod solver;

pub use analytic::{solve_analytic, GreenFunction};
pub use expr::Expression;
pub use solver::{solve_pece, Forcing, FroProblem, Method, TimeGrid, Trajectory};
