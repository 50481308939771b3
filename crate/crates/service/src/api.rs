//! Request and response bodies and the route handlers.

use axum::extract::rejection::QueryRejection;
use axum::extract::{Query, State};
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::Json;
use fro_core::analytic::AnalyticError;
use fro_core::dataio::{
    grid_fit, parse_grid, parse_series, ExperimentalSeries, FitError, FitReport,
};
use fro_core::expr::Expression;
use fro_core::solve_analytic;
use fro_core::solver::{solve_pece, Forcing, FroProblem, Method, SolveError, Trajectory};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::{svg, AppState};

/// Body of `POST /api/solve` and query of `GET /api/plot`. Field names match
/// the CLI flags; anything left out takes the toolbox default.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SolveRequest {
    pub alpha: f64,
    pub coeff: f64,
    pub dt: f64,
    pub duration: f64,
    pub y0: f64,
    pub yp0: f64,
    pub forcing: String,
    pub method: Method,
}

impl Default for SolveRequest {
    fn default() -> Self {
        let p = FroProblem::default();
        SolveRequest {
            alpha: p.alpha,
            coeff: p.relax_coeff,
            dt: p.step,
            duration: p.duration,
            y0: p.y0,
            yp0: p.y0_prime,
            forcing: "0".into(),
            method: Method::Pece,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolveResponse {
    pub t: Vec<f64>,
    pub u: Vec<f64>,
    pub meta: SolveMeta,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolveMeta {
    pub request: SolveRequest,
    pub method: Method,
    pub nodes: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notices: Vec<String>,
}

/// A parameter grid given either as a list of numbers or as a
/// `start:stop:step` / comma-list string.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GridSpec {
    Values(Vec<f64>),
    Spec(String),
}

impl GridSpec {
    fn resolve(&self, name: &str) -> Result<Vec<f64>, ApiError> {
        match self {
            GridSpec::Values(v) if v.is_empty() => {
                Err(ApiError::bad_request(format!("{name} is empty")))
            }
            GridSpec::Values(v) => Ok(v.clone()),
            GridSpec::Spec(s) => {
                parse_grid(s).map_err(|e| ApiError::bad_request(format!("{name}: {e}")))
            }
        }
    }
}

/// Body of `POST /api/fit`. The series comes either as `points` or as `csv`
/// text in the `time,value` format. `y0` defaults to the first data value and
/// `duration` to the last data time rounded up to a whole number of steps.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FitRequest {
    #[serde(default)]
    pub points: Option<Vec<(f64, f64)>>,
    #[serde(default)]
    pub csv: Option<String>,
    pub alpha_grid: GridSpec,
    pub coeff_grid: GridSpec,
    #[serde(default = "default_fit_step")]
    pub dt: f64,
    #[serde(default)]
    pub duration: Option<f64>,
    #[serde(default)]
    pub y0: Option<f64>,
}

fn default_fit_step() -> f64 {
    FroProblem::default().step
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    message: String,
    position: Option<usize>,
}

impl ApiError {
    pub fn new(status: StatusCode, message: impl Into<String>) -> Self {
        ApiError {
            status,
            message: message.into(),
            position: None,
        }
    }

    fn bad_request(message: impl Into<String>) -> Self {
        ApiError::new(StatusCode::BAD_REQUEST, message)
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let body = match self.position {
            Some(p) => json!({ "error": self.message, "position": p }),
            None => json!({ "error": self.message }),
        };
        (self.status, Json(body)).into_response()
    }
}

impl From<SolveError> for ApiError {
    fn from(e: SolveError) -> Self {
        let status = match e {
            SolveError::Diverged { .. } => StatusCode::UNPROCESSABLE_ENTITY,
            _ => StatusCode::BAD_REQUEST,
        };
        ApiError::new(status, e.to_string())
    }
}

impl From<AnalyticError> for ApiError {
    fn from(e: AnalyticError) -> Self {
        let status = match e {
            AnalyticError::MittagLeffler(_) => StatusCode::INTERNAL_SERVER_ERROR,
            _ => StatusCode::BAD_REQUEST,
        };
        ApiError::new(status, e.to_string())
    }
}

impl From<FitError> for ApiError {
    fn from(e: FitError) -> Self {
        let status = match e {
            FitError::Solve {
                source: SolveError::Diverged { .. },
                ..
            }
            | FitError::AllDiverged => StatusCode::UNPROCESSABLE_ENTITY,
            _ => StatusCode::BAD_REQUEST,
        };
        ApiError::new(status, e.to_string())
    }
}

fn body_json<T: for<'de> Deserialize<'de>>(body: &[u8]) -> Result<T, ApiError> {
    let text = if body.iter().all(u8::is_ascii_whitespace) {
        b"{}".as_slice()
    } else {
        body
    };
    serde_json::from_slice(text)
        .map_err(|e| ApiError::bad_request(format!("invalid request body: {e}")))
}

fn problem_from(req: &SolveRequest, max_steps: usize) -> Result<FroProblem, ApiError> {
    let forcing: Expression = req
        .forcing
        .parse()
        .map_err(|e: fro_core::expr::ParseError| ApiError {
            status: StatusCode::UNPROCESSABLE_ENTITY,
            position: Some(e.position()),
            message: format!("forcing {:?}: {e}", req.forcing),
        })?;
    let problem = FroProblem {
        alpha: req.alpha,
        relax_coeff: req.coeff,
        forcing: Forcing::Expression(forcing),
        y0: req.y0,
        y0_prime: req.yp0,
        step: req.dt,
        duration: req.duration,
    };
    let steps = problem
        .validate()
        .map_err(|e| ApiError::bad_request(e.to_string()))?;
    if steps > max_steps {
        return Err(ApiError::new(
            StatusCode::PAYLOAD_TOO_LARGE,
            format!("duration / dt = {steps} steps exceeds this server's limit of {max_steps}"),
        ));
    }
    Ok(problem)
}

async fn blocking<T: Send + 'static>(
    work: impl FnOnce() -> Result<T, ApiError> + Send + 'static,
) -> Result<T, ApiError> {
    tokio::task::spawn_blocking(work).await.map_err(|e| {
        ApiError::new(
            StatusCode::INTERNAL_SERVER_ERROR,
            format!("worker failed: {e}"),
        )
    })?
}

async fn run_solve(
    state: &AppState,
    req: SolveRequest,
) -> Result<(SolveRequest, Trajectory), ApiError> {
    let problem = problem_from(&req, state.config.max_steps)?;
    let method = req.method;
    let traj = blocking(move || match method {
        Method::Pece => Ok(solve_pece(&problem)?),
        Method::Analytic => Ok(solve_analytic(&problem)?),
    })
    .await?;
    Ok((req, traj))
}

pub async fn solve(
    State(state): State<AppState>,
    body: axum::body::Bytes,
) -> Result<Json<SolveResponse>, ApiError> {
    let req: SolveRequest = body_json(&body)?;
    let (req, traj) = run_solve(&state, req).await?;
    state.metrics.solves.incr();
    Ok(Json(SolveResponse {
        meta: SolveMeta {
            method: traj.method,
            nodes: traj.values.len(),
            notices: traj.notices.clone(),
            request: req,
        },
        t: traj.grid.times,
        u: traj.values,
    }))
}

pub async fn plot(
    State(state): State<AppState>,
    query: Result<Query<SolveRequest>, QueryRejection>,
) -> Result<Response, ApiError> {
    let Query(req) = query.map_err(|e| ApiError::bad_request(e.body_text()))?;
    let (req, traj) = run_solve(&state, req).await?;
    state.metrics.plots.incr();
    let title = format!(
        "alpha={} A={} y0={} yp0={} f={} ({})",
        req.alpha, req.coeff, req.y0, req.yp0, req.forcing, traj.method
    );
    let body = svg::line_plot(traj.times(), &traj.values, &title);
    Ok(([(header::CONTENT_TYPE, "image/svg+xml")], body).into_response())
}

pub async fn fit(
    State(state): State<AppState>,
    body: axum::body::Bytes,
) -> Result<Json<FitReport>, ApiError> {
    let req: FitRequest = body_json(&body)?;
    let series = match (&req.points, &req.csv) {
        (Some(points), None) => ExperimentalSeries::new(points.clone(), "data"),
        (None, Some(text)) => parse_series(text),
        _ => {
            return Err(ApiError::bad_request(
                "give the series as exactly one of `points` or `csv`",
            ))
        }
    }
    .map_err(|e| ApiError::bad_request(format!("series: {e}")))?;
    let alphas = req.alpha_grid.resolve("alpha_grid")?;
    let coeffs = req.coeff_grid.resolve("coeff_grid")?;
    let pairs = alphas.len() * coeffs.len();
    if pairs > state.config.max_fit_pairs {
        return Err(ApiError::new(
            StatusCode::PAYLOAD_TOO_LARGE,
            format!(
                "{pairs} grid pairs exceed this server's limit of {}",
                state.config.max_fit_pairs
            ),
        ));
    }
    if !(req.dt > 0.0 && req.dt.is_finite()) {
        return Err(ApiError::bad_request(format!(
            "time step dt = {} must be positive",
            req.dt
        )));
    }
    let last = series.last().0;
    let duration = req
        .duration
        .unwrap_or_else(|| (last / req.dt - 1e-9).ceil().max(1.0) * req.dt);
    let template = FroProblem {
        y0: req.y0.unwrap_or(series.first().1),
        step: req.dt,
        duration,
        ..FroProblem::default()
    };
    let steps = template
        .validate()
        .map_err(|e| ApiError::bad_request(e.to_string()))?;
    if steps > state.config.max_steps {
        return Err(ApiError::new(
            StatusCode::PAYLOAD_TOO_LARGE,
            format!(
                "duration / dt = {steps} steps exceeds this server's limit of {}",
                state.config.max_steps
            ),
        ));
    }
    let report = blocking(move || Ok(grid_fit(&series, &alphas, &coeffs, &template)?)).await?;
    state.metrics.fits.incr();
    Ok(Json(report))
}

pub async fn health() -> Json<serde_json::Value> {
    Json(json!({ "status": "ok", "version": env!("CARGO_PKG_VERSION") }))
}

pub async fn defaults() -> Json<SolveRequest> {
    Json(SolveRequest::default())
}

pub async fn metrics(State(state): State<AppState>) -> Json<serde_json::Value> {
    Json(state.metrics.snapshot())
}

pub async fn not_found() -> ApiError {
    ApiError::new(StatusCode::NOT_FOUND, "no such route")
}
