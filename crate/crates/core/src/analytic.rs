//! Closed-form solutions through Mittag-Leffler functions.
//!
//! For `D^α u + A u = f`:
//!
//! ```text
//! 0 < α ≤ 1:  u(t) = y0 E_{α,1}(-A t^α)                          + (G * f)(t)
//! 1 < α ≤ 2:  u(t) = y0 E_{α,1}(-A t^α) + y0' t E_{α,2}(-A t^α)  + (G * f)(t)
//! G(t) = t^{α-1} E_{α,α}(-A t^α)
//! ```
//!
//! These curves are the reference the PECE solver is measured against.
//!
//! The convolution `G * f` uses product integration: `f` is taken piecewise
//! linear between grid nodes and multiplied against the exact kernel. Panel
//! moments of the kernel come from 32-point Gauss-Legendre, except on the
//! first panel where `G` is singular for α < 1; there the moments have the
//! closed forms
//!
//! ```text
//! ∫_0^h G(s) ds   = h^α     E_{α,α+1}(-A h^α)
//! ∫_0^h G(s) s ds = h^{α+1} [E_{α,α+1} - E_{α,α+2}](-A h^α)
//! ```

use thiserror::Error;

use crate::expr::EvalError;
use crate::mittag_leffler::{ml_unchecked, MlError};
use crate::quadrature::gauss_legendre_32;
use crate::solver::{FroProblem, Method, TimeGrid, Trajectory, ValidationError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalyticError {
    #[error(transparent)]
    Invalid(#[from] ValidationError),
    #[error("the relaxation form needs 0 < alpha <= 1, got {0}; use the oscillation form")]
    NotRelaxation(f64),
    #[error("the oscillation form needs 1 < alpha <= 2, got {0}; use the relaxation form")]
    NotOscillation(f64),
    #[error("closed-form solutions need coeff >= 0, got {0}")]
    NegativeCoefficient(f64),
    #[error("Green function is only defined for t > 0, got {0}")]
    NonPositiveTime(f64),
    #[error(transparent)]
    MittagLeffler(#[from] MlError),
    #[error("forcing function failed: {0}")]
    Forcing(#[from] EvalError),
}

/// The kernel `G(t) = t^{α-1} E_{α,α}(-A t^α)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GreenFunction {
    alpha: f64,
    relax_coeff: f64,
}

impl GreenFunction {
    pub fn new(alpha: f64, relax_coeff: f64) -> Result<Self, AnalyticError> {
        if !(alpha > 0.0 && alpha <= 2.0) {
            return Err(MlError::OrderOutOfRange(alpha).into());
        }
        if !(relax_coeff >= 0.0 && relax_coeff.is_finite()) {
            return Err(AnalyticError::NegativeCoefficient(relax_coeff));
        }
        Ok(GreenFunction { alpha, relax_coeff })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn relax_coeff(&self) -> f64 {
        self.relax_coeff
    }

    pub fn eval(&self, t: f64) -> Result<f64, AnalyticError> {
        if t.is_nan() || t <= 0.0 {
            return Err(AnalyticError::NonPositiveTime(t));
        }
        Ok(self.eval_positive(t))
    }

    fn eval_positive(&self, t: f64) -> f64 {
        let a = self.alpha;
        t.powf(a - 1.0) * ml_unchecked(a, a, -self.relax_coeff * t.powf(a))
    }

    /// Moments of `G` against the two hat-function halves on every lag panel
    /// `[m h, (m+1) h]`: `rising[m] = ∫ G(s) (s/h - m) ds` and
    /// `falling[m] = ∫ G(s) (m + 1 - s/h) ds`.
    fn panel_moments(&self, h: f64, panels: usize) -> (Vec<f64>, Vec<f64>) {
        let a = self.alpha;
        let mut rising = Vec::with_capacity(panels);
        let mut falling = Vec::with_capacity(panels);
        if panels == 0 {
            return (rising, falling);
        }
        let z = -self.relax_coeff * h.powf(a);
        let e1 = ml_unchecked(a, a + 1.0, z);
        let e2 = ml_unchecked(a, a + 2.0, z);
        let mass = h.powf(a) * e1;
        let first_moment = h.powf(a + 1.0) * (e1 - e2);
        rising.push(first_moment / h);
        falling.push(mass - first_moment / h);

        let rule = gauss_legendre_32();
        for m in 1..panels {
            let lo = m as f64 * h;
            let mut up = 0.0;
            let mut down = 0.0;
            let half = 0.5 * h;
            let mid = lo + half;
            for (x, w) in rule.nodes.iter().zip(&rule.weights) {
                let s = mid + half * x;
                let g = w * self.eval_positive(s);
                let theta = s / h - m as f64;
                up += g * theta;
                down += g * (1.0 - theta);
            }
            rising.push(up * half);
            falling.push(down * half);
        }
        (rising, falling)
    }
}

/// `G(t)` for the given order and coefficient.
pub fn green(gf: &GreenFunction, t: f64) -> Result<f64, AnalyticError> {
    gf.eval(t)
}

/// Exact solution for the relaxation regime `0 < α ≤ 1`.
pub fn relaxation_solution(
    problem: &FroProblem,
    grid: &TimeGrid,
) -> Result<Trajectory, AnalyticError> {
    problem.validate()?;
    if problem.alpha > 1.0 {
        return Err(AnalyticError::NotRelaxation(problem.alpha));
    }
    closed_form(problem, grid)
}

/// Exact solution for the oscillation regime `1 < α ≤ 2`.
pub fn oscillation_solution(
    problem: &FroProblem,
    grid: &TimeGrid,
) -> Result<Trajectory, AnalyticError> {
    problem.validate()?;
    if problem.alpha <= 1.0 {
        return Err(AnalyticError::NotOscillation(problem.alpha));
    }
    closed_form(problem, grid)
}

/// Picks the relaxation or oscillation form by order and uses the problem's
/// own grid.
pub fn solve_analytic(problem: &FroProblem) -> Result<Trajectory, AnalyticError> {
    let grid = problem.grid()?;
    if problem.alpha <= 1.0 {
        relaxation_solution(problem, &grid)
    } else {
        oscillation_solution(problem, &grid)
    }
}

fn closed_form(problem: &FroProblem, grid: &TimeGrid) -> Result<Trajectory, AnalyticError> {
    let alpha = problem.alpha;
    let coeff = problem.relax_coeff;
    let green = GreenFunction::new(alpha, coeff)?;
    let oscillating = alpha > 1.0;

    let mut values: Vec<f64> = grid
        .times
        .iter()
        .map(|&t| {
            let z = -coeff * t.powf(alpha);
            let mut u = problem.y0 * ml_unchecked(alpha, 1.0, z);
            if oscillating && problem.y0_prime != 0.0 {
                u += problem.y0_prime * t * ml_unchecked(alpha, 2.0, z);
            }
            u
        })
        .collect();

    if !problem.forcing.is_zero() {
        let samples = grid
            .times
            .iter()
            .map(|&t| problem.forcing.evaluate(t))
            .collect::<Result<Vec<_>, _>>()?;
        let n = grid.steps();
        let (rising, falling) = green.panel_moments(grid.step, n);
        // the panel [t_j, t_j+1] sits at lag m = n - 1 - j from t_n; f_j meets
        // the kernel's rising half, f_j+1 its falling half
        for (idx, value) in values.iter_mut().enumerate().skip(1) {
            let mut conv = 0.0;
            for j in 0..idx {
                let m = idx - 1 - j;
                conv += rising[m] * samples[j] + falling[m] * samples[j + 1];
            }
            *value += conv;
        }
    }

    let mut notices = Vec::new();
    if !oscillating && problem.y0_prime != 0.0 {
        notices.push(format!(
            "yp0 = {} ignored: alpha = {alpha} <= 1 needs only y0",
            problem.y0_prime
        ));
    }
    Ok(Trajectory {
        grid: grid.clone(),
        values,
        method: Method::Analytic,
        problem: problem.clone(),
        notices,
    })
}
