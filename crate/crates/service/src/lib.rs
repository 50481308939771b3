//! HTTP/JSON front-end for `fro-core`.
//!
//! | route              | does                                             |
//! |--------------------|--------------------------------------------------|
//! | `POST /api/solve`  | solve one problem, JSON `{t, u, meta}`           |
//! | `GET  /api/plot`   | same parameters as a query string, SVG out       |
//! | `POST /api/fit`    | grid fit of a data series                        |
//! | `GET  /api/defaults` | the default solve request                      |
//! | `GET  /api/health` | `{status, version}`                              |
//! | `GET  /api/metrics`| request counters                                 |
//! | `GET  /`           | static UI bundle, or a small built-in page       |
//!
//! Errors come back as `{"error": message}` with 400 for invalid parameters,
//! 422 for forcing expressions that do not parse (plus `position`) and for
//! diverging solves, and 413 when a body, step count or fit grid is over the
//! configured limit.

pub mod api;
pub mod svg;

use std::net::{Ipv4Addr, SocketAddr};
use std::path::PathBuf;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use axum::extract::{DefaultBodyLimit, Request, State};
use axum::middleware::{self, Next};
use axum::response::{Html, Response};
use axum::routing::{get, post};
use axum::Router;
use serde_json::json;
use tower_http::services::ServeDir;

pub use api::{FitRequest, GridSpec, SolveMeta, SolveRequest, SolveResponse};

#[derive(Debug, Clone, PartialEq)]
pub struct AppConfig {
    pub port: u16,
    /// Largest accepted `duration / dt`.
    pub max_steps: usize,
    /// Largest accepted `alpha_grid × coeff_grid` size for a fit.
    pub max_fit_pairs: usize,
    pub body_limit: usize,
    /// Directory served at `/`; the built-in page is used when unset.
    pub static_dir: Option<PathBuf>,
}

impl Default for AppConfig {
    fn default() -> Self {
        AppConfig {
            port: 8080,
            max_steps: 100_000,
            max_fit_pairs: 10_000,
            body_limit: 1 << 20,
            static_dir: None,
        }
    }
}

#[derive(Debug, Default)]
pub struct Counter(AtomicU64);

impl Counter {
    pub fn incr(&self) {
        self.0.fetch_add(1, Ordering::Relaxed);
    }

    pub fn get(&self) -> u64 {
        self.0.load(Ordering::Relaxed)
    }
}

#[derive(Debug, Default)]
pub struct Metrics {
    pub requests: Counter,
    pub solves: Counter,
    pub fits: Counter,
    pub plots: Counter,
    pub client_errors: Counter,
    pub server_errors: Counter,
}

impl Metrics {
    pub fn snapshot(&self) -> serde_json::Value {
        json!({
            "requests": self.requests.get(),
            "solves": self.solves.get(),
            "fits": self.fits.get(),
            "plots": self.plots.get(),
            "client_errors": self.client_errors.get(),
            "server_errors": self.server_errors.get(),
        })
    }
}

#[derive(Debug, Clone)]
pub struct AppState {
    pub config: Arc<AppConfig>,
    pub metrics: Arc<Metrics>,
}

async fn count(State(state): State<AppState>, request: Request, next: Next) -> Response {
    state.metrics.requests.incr();
    let response = next.run(request).await;
    let status = response.status();
    if status.is_client_error() {
        state.metrics.client_errors.incr();
    } else if status.is_server_error() {
        state.metrics.server_errors.incr();
    }
    response
}

const INDEX: &str = include_str!("index.html");

pub fn router(config: AppConfig) -> Router {
    let state = AppState {
        metrics: Arc::new(Metrics::default()),
        config: Arc::new(config),
    };
    let api = Router::new()
        .route("/api/solve", post(api::solve))
        .route("/api/fit", post(api::fit))
        .route("/api/plot", get(api::plot))
        .route("/api/defaults", get(api::defaults))
        .route("/api/health", get(api::health))
        .route("/api/metrics", get(api::metrics))
        .route("/api/{*rest}", get(api::not_found).post(api::not_found));
    let app = match &state.config.static_dir {
        Some(dir) => api.fallback_service(ServeDir::new(dir)),
        None => api.route("/", get(|| async { Html(INDEX) })),
    };
    app.layer(DefaultBodyLimit::max(state.config.body_limit))
        .layer(middleware::from_fn_with_state(state.clone(), count))
        .with_state(state)
}

/// Serves on `0.0.0.0:port` until Ctrl-C.
pub async fn serve(config: AppConfig) -> std::io::Result<()> {
    let addr = SocketAddr::from((Ipv4Addr::UNSPECIFIED, config.port));
    let listener = tokio::net::TcpListener::bind(addr).await?;
    log::info!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(config))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}
