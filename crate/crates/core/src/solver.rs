//! Predictor-corrector (PECE) solver for the fractional relaxation-oscillation
//! problem
//!
//! ```text
//! D^α u(t) + A u(t) = f(t),   0 < α ≤ 2,
//! u(0) = y0,  u'(0) = y0'  (the latter only for α > 1)
//! ```
//!
//! where `D^α` is the Caputo derivative. The problem is rewritten as the
//! Volterra equation
//!
//! ```text
//! u(t) = Σ_{j<⌈α⌉} y0^(j) t^j / j!  +  1/Γ(α) ∫_0^t (t-τ)^(α-1) (f(τ) - A u(τ)) dτ
//! ```
//!
//! and marched on a uniform grid: a product-rectangle predictor followed by
//! one product-trapezoid corrector per step. The scheme is linear in the data
//! and converges like `h^min(2, 1+α)` for smooth solutions.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::expr::{EvalError, Expression};
use crate::mittag_leffler::rgamma;

/// Largest accepted number of steps.
pub const MAX_STEPS: usize = 1_000_000;
/// Above this many steps the O(N²) history sums get slow enough to warn about.
pub const WARN_STEPS: usize = 100_000;

const STEP_COUNT_TOLERANCE: f64 = 1e-9;
const DIVERGENCE_BOUND: f64 = 1e300;

/// Right-hand side source term.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Forcing {
    Expression(Expression),
    /// Samples joined by straight lines, held constant outside their range.
    Tabulated(Tabulated),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tabulated {
    pub times: Vec<f64>,
    pub values: Vec<f64>,
}

impl Forcing {
    pub fn zero() -> Self {
        Forcing::Expression(Expression::zero())
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Forcing::Expression(e) => e.is_zero(),
            Forcing::Tabulated(tab) => tab.values.iter().all(|v| *v == 0.0),
        }
    }

    pub fn evaluate(&self, t: f64) -> Result<f64, EvalError> {
        match self {
            Forcing::Expression(e) => e.evaluate(t),
            Forcing::Tabulated(tab) => Ok(tab.interpolate(t)),
        }
    }
}

impl From<Expression> for Forcing {
    fn from(e: Expression) -> Self {
        Forcing::Expression(e)
    }
}

impl Tabulated {
    /// `times` must be strictly increasing and the same length as `values`.
    pub fn new(times: Vec<f64>, values: Vec<f64>) -> Option<Self> {
        let ok = !times.is_empty()
            && times.len() == values.len()
            && times.windows(2).all(|w| w[0] < w[1])
            && times.iter().chain(&values).all(|v| v.is_finite());
        ok.then_some(Tabulated { times, values })
    }

    fn interpolate(&self, t: f64) -> f64 {
        let n = self.times.len();
        if t <= self.times[0] {
            return self.values[0];
        }
        if t >= self.times[n - 1] {
            return self.values[n - 1];
        }
        let i = self.times.partition_point(|&x| x <= t) - 1;
        let (t0, t1) = (self.times[i], self.times[i + 1]);
        let w = (t - t0) / (t1 - t0);
        self.values[i] * (1.0 - w) + self.values[i + 1] * w
    }
}

/// One complete solve request. `Default` gives the classic toolbox defaults:
/// α = 0.5, A = 1, dt = 0.1, T = 10, zero initial data and zero forcing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FroProblem {
    pub alpha: f64,
    #[serde(rename = "coeff")]
    pub relax_coeff: f64,
    pub forcing: Forcing,
    pub y0: f64,
    /// Only consulted when α > 1.
    #[serde(rename = "yp0")]
    pub y0_prime: f64,
    #[serde(rename = "dt")]
    pub step: f64,
    pub duration: f64,
}

impl Default for FroProblem {
    fn default() -> Self {
        FroProblem {
            alpha: 0.5,
            relax_coeff: 1.0,
            forcing: Forcing::zero(),
            y0: 0.0,
            y0_prime: 0.0,
            step: 0.1,
            duration: 10.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ValidationError {
    #[error("alpha = {0} is outside the permitted range (0, 2]")]
    OrderOutOfRange(f64),
    #[error("time step dt = {0} must be positive")]
    NonPositiveStep(f64),
    #[error("duration = {0} must be positive")]
    NonPositiveDuration(f64),
    #[error("duration / dt = {duration} / {step} = {ratio} is not a whole number of steps")]
    NonIntegerStepCount {
        duration: f64,
        step: f64,
        ratio: f64,
    },
    #[error("{field} = {value} must be finite")]
    NonFinite { field: &'static str, value: f64 },
    #[error("duration / dt = {steps} steps exceeds the limit of {limit}")]
    TooManySteps { steps: usize, limit: usize },
}

impl FroProblem {
    /// Checks every field and returns the number of steps `N = T / h`.
    pub fn validate(&self) -> Result<usize, ValidationError> {
        let fields = [
            ("alpha", self.alpha),
            ("coeff", self.relax_coeff),
            ("y0", self.y0),
            ("yp0", self.y0_prime),
            ("dt", self.step),
            ("duration", self.duration),
        ];
        for (field, value) in fields {
            if !value.is_finite() {
                return Err(ValidationError::NonFinite { field, value });
            }
        }
        if !(self.alpha > 0.0 && self.alpha <= 2.0) {
            return Err(ValidationError::OrderOutOfRange(self.alpha));
        }
        if self.step <= 0.0 {
            return Err(ValidationError::NonPositiveStep(self.step));
        }
        if self.duration <= 0.0 {
            return Err(ValidationError::NonPositiveDuration(self.duration));
        }
        let ratio = self.duration / self.step;
        let steps = ratio.round();
        if steps < 1.0 || (ratio - steps).abs() > STEP_COUNT_TOLERANCE * ratio {
            return Err(ValidationError::NonIntegerStepCount {
                duration: self.duration,
                step: self.step,
                ratio,
            });
        }
        if steps > MAX_STEPS as f64 {
            return Err(ValidationError::TooManySteps {
                steps: steps as usize,
                limit: MAX_STEPS,
            });
        }
        Ok(steps as usize)
    }

    pub fn grid(&self) -> Result<TimeGrid, ValidationError> {
        Ok(TimeGrid::new(self.step, self.validate()?))
    }

    /// Number of initial conditions the order needs: 1 for α ≤ 1, 2 above.
    pub fn initial_condition_count(&self) -> usize {
        if self.alpha > 1.0 {
            2
        } else {
            1
        }
    }

    /// The polynomial `Σ y0^(j) t^j / j!` carried by the initial data.
    pub fn taylor_head(&self, t: f64) -> f64 {
        if self.alpha > 1.0 {
            self.y0 + self.y0_prime * t
        } else {
            self.y0
        }
    }
}

/// Uniform grid `t_n = n h` for `n = 0..=N`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimeGrid {
    pub step: f64,
    pub times: Vec<f64>,
}

impl TimeGrid {
    pub fn new(step: f64, steps: usize) -> Self {
        TimeGrid {
            step,
            times: (0..=steps).map(|n| n as f64 * step).collect(),
        }
    }

    pub fn n_points(&self) -> usize {
        self.times.len()
    }

    pub fn steps(&self) -> usize {
        self.times.len() - 1
    }

    pub fn duration(&self) -> f64 {
        self.times[self.times.len() - 1]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Pece,
    Analytic,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Pece => "pece",
            Method::Analytic => "analytic",
        })
    }
}

/// A solution curve on a uniform grid together with what produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Trajectory {
    pub grid: TimeGrid,
    pub values: Vec<f64>,
    pub method: Method,
    pub problem: FroProblem,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notices: Vec<String>,
}

impl Trajectory {
    pub fn times(&self) -> &[f64] {
        &self.grid.times
    }

    pub fn last(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    /// Largest pointwise deviation from `other` on the shared grid.
    pub fn max_abs_difference(&self, other: &Trajectory) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Invalid(#[from] ValidationError),
    #[error("forcing function failed: {0}")]
    Forcing(#[from] EvalError),
    #[error("solution diverged (|u| > 1e300) at t = {t}")]
    Diverged { t: f64 },
}

/// Predictor weight `b_{j,k+1} = h^α/α [(k+1-j)^α - (k-j)^α]`.
pub fn predictor_weight(j: usize, k: usize, alpha: f64, h: f64) -> f64 {
    debug_assert!(j <= k);
    let m = (k - j) as f64;
    h.powf(alpha) / alpha * ((m + 1.0).powf(alpha) - m.powf(alpha))
}

/// Corrector weight `a_{j,k+1}` of the product trapezoid rule.
pub fn corrector_weight(j: usize, k: usize, alpha: f64, h: f64) -> f64 {
    debug_assert!(j <= k + 1);
    let scale = h.powf(alpha) / (alpha * (alpha + 1.0));
    let w = if j == 0 {
        let k = k as f64;
        k.powf(alpha + 1.0) - (k - alpha) * (k + 1.0).powf(alpha)
    } else if j <= k {
        let m = (k - j) as f64;
        (m + 2.0).powf(alpha + 1.0) + m.powf(alpha + 1.0) - 2.0 * (m + 1.0).powf(alpha + 1.0)
    } else {
        1.0
    };
    scale * w
}

/// `f(t) - A y`.
pub fn rhs(problem: &FroProblem, t: f64, y: f64) -> Result<f64, EvalError> {
    Ok(problem.forcing.evaluate(t)? - problem.relax_coeff * y)
}

/// Both weight families tabulated by lag, with the `1/Γ(α)` factor folded in.
struct Weights {
    predictor: Vec<f64>,
    corrector_first: Vec<f64>,
    corrector_lag: Vec<f64>,
    corrector_last: f64,
}

impl Weights {
    fn new(alpha: f64, h: f64, steps: usize) -> Self {
        let pow_a: Vec<f64> = (0..=steps + 1).map(|m| (m as f64).powf(alpha)).collect();
        let pow_a1: Vec<f64> = (0..=steps + 1)
            .map(|m| (m as f64).powf(alpha + 1.0))
            .collect();
        let inv_gamma = rgamma(alpha);
        let hb = h.powf(alpha) / alpha * inv_gamma;
        let ha = h.powf(alpha) / (alpha * (alpha + 1.0)) * inv_gamma;

        let predictor = (0..steps).map(|m| hb * (pow_a[m + 1] - pow_a[m])).collect();
        let corrector_first = (0..steps)
            .map(|k| ha * (pow_a1[k] - (k as f64 - alpha) * pow_a[k + 1]))
            .collect();
        let corrector_lag = (0..steps)
            .map(|m| ha * (pow_a1[m + 2] + pow_a1[m] - 2.0 * pow_a1[m + 1]))
            .collect();
        Weights {
            predictor,
            corrector_first,
            corrector_lag,
            corrector_last: ha,
        }
    }
}

/// Solves the problem with one predictor and one corrector pass per step.
pub fn solve_pece(problem: &FroProblem) -> Result<Trajectory, SolveError> {
    let steps = problem.validate()?;
    if steps > WARN_STEPS {
        log::warn!("{steps} steps: the O(N^2) history sums will be slow");
    }
    let grid = TimeGrid::new(problem.step, steps);
    let forcing = grid
        .times
        .iter()
        .map(|&t| problem.forcing.evaluate(t))
        .collect::<Result<Vec<_>, _>>()?;

    let alpha = problem.alpha;
    let coeff = problem.relax_coeff;
    let weights = Weights::new(alpha, problem.step, steps);

    let mut values = Vec::with_capacity(steps + 1);
    // history of f(t_j) - A y(t_j)
    let mut slopes = Vec::with_capacity(steps + 1);
    values.push(problem.y0);
    slopes.push(forcing[0] - coeff * problem.y0);

    for k in 0..steps {
        let t_next = grid.times[k + 1];
        let head = problem.taylor_head(t_next);

        let mut predicted = 0.0;
        let mut corrected = weights.corrector_first[k] * slopes[0];
        predicted += weights.predictor[k] * slopes[0];
        for (j, slope) in slopes.iter().enumerate().take(k + 1).skip(1) {
            let lag = k - j;
            predicted += weights.predictor[lag] * slope;
            corrected += weights.corrector_lag[lag] * slope;
        }
        let predicted = head + predicted;
        let next = head + corrected + weights.corrector_last * (forcing[k + 1] - coeff * predicted);

        if !next.is_finite() || next.abs() > DIVERGENCE_BOUND {
            return Err(SolveError::Diverged { t: t_next });
        }
        values.push(next);
        slopes.push(forcing[k + 1] - coeff * next);
    }

    let mut notices = Vec::new();
    if alpha <= 1.0 && problem.y0_prime != 0.0 {
        notices.push(format!(
            "yp0 = {} ignored: alpha = {alpha} <= 1 needs only y0",
            problem.y0_prime
        ));
    }
    Ok(Trajectory {
        grid,
        values,
        method: Method::Pece,
        problem: problem.clone(),
        notices,
    })
}

/// Where the exact solution for a convergence study comes from.
pub enum Reference<'a> {
    /// The Mittag-Leffler closed form; only available for zero forcing, since
    /// with a forcing term the closed form itself is a quadrature.
    Analytic,
    ClosedForm(&'a dyn Fn(f64) -> f64),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConvergenceError {
    #[error("need at least 3 step sizes, got {0}")]
    TooFewSteps(usize),
    #[error("step sizes must form a decreasing geometric progression")]
    NotGeometric,
    #[error("no reference solution: the closed form is only used for zero forcing")]
    ReferenceUnavailable,
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("reference solution failed: {0}")]
    Reference(String),
}

/// Max-norm errors on a ladder of step sizes and the fitted slope.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceStudy {
    pub steps: Vec<f64>,
    pub errors: Vec<f64>,
    /// Least-squares slope of log(error) against log(h).
    pub order: f64,
}

/// Theoretical order `min(2, 1 + α)` of the PECE scheme.
pub fn theoretical_order(alpha: f64) -> f64 {
    (1.0 + alpha).min(2.0)
}

/// Runs `problem` at every step in `steps` (its own `step` is ignored) and
/// measures the max-norm error against `reference` over the whole grid.
pub fn empirical_order(
    problem: &FroProblem,
    steps: &[f64],
    reference: Reference<'_>,
) -> Result<ConvergenceStudy, ConvergenceError> {
    if steps.len() < 3 {
        return Err(ConvergenceError::TooFewSteps(steps.len()));
    }
    let ratio = steps[1] / steps[0];
    let geometric = ratio > 0.0
        && ratio < 1.0
        && steps
            .windows(2)
            .all(|w| ((w[1] / w[0]) / ratio - 1.0).abs() < 1e-9);
    if !geometric {
        return Err(ConvergenceError::NotGeometric);
    }
    if matches!(reference, Reference::Analytic) && !problem.forcing.is_zero() {
        return Err(ConvergenceError::ReferenceUnavailable);
    }

    let mut errors = Vec::with_capacity(steps.len());
    for &h in steps {
        let run = FroProblem {
            step: h,
            ..problem.clone()
        };
        let numeric = solve_pece(&run)?;
        let exact: Vec<f64> = match reference {
            Reference::Analytic => {
                crate::analytic::solve_analytic(&run)
                    .map_err(|e| ConvergenceError::Reference(e.to_string()))?
                    .values
            }
            Reference::ClosedForm(u) => numeric.times().iter().map(|&t| u(t)).collect(),
        };
        let err = numeric
            .values
            .iter()
            .zip(&exact)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        errors.push(err);
    }
    let order = log_log_slope(steps, &errors);
    Ok(ConvergenceStudy {
        steps: steps.to_vec(),
        errors,
        order,
    })
}

fn log_log_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx).powi(2)).sum();
    sxy / sxx
}
