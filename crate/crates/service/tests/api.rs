use axum::body::Body;
use axum::http::{Method, Request, StatusCode};
use axum::Router;
use fro_core::dataio::{grid_fit, parse_series};
use fro_core::FroProblem;
use fro_service::{router, AppConfig};
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tower::ServiceExt;

const DOUGH: &str = "time,value\n0,710\n1,560\n2,487\n4,420\n6,383\n8,355\n\
    10,334\n12,321\n14,309\n16,298\n18,288\n20,280\n";

fn app() -> Router {
    router(AppConfig::default())
}

async fn send(app: Router, req: Request<Body>) -> (StatusCode, String, Vec<u8>) {
    let res = app.oneshot(req).await.unwrap();
    let status = res.status();
    let ctype = res
        .headers()
        .get("content-type")
        .map(|v| v.to_str().unwrap().to_owned())
        .unwrap_or_default();
    let body = res.into_body().collect().await.unwrap().to_bytes().to_vec();
    (status, ctype, body)
}

async fn post(app: Router, uri: &str, body: impl Into<Body>) -> (StatusCode, Value) {
    let req = Request::post(uri)
        .header("content-type", "application/json")
        .body(body.into())
        .unwrap();
    let (status, _, bytes) = send(app, req).await;
    (status, serde_json::from_slice(&bytes).unwrap())
}

async fn get(app: Router, uri: &str) -> (StatusCode, String, Vec<u8>) {
    send(app, Request::get(uri).body(Body::empty()).unwrap()).await
}

#[tokio::test]
async fn empty_request_solves_the_defaults() {
    let (status, body) = post(app(), "/api/solve", "{}").await;
    assert_eq!(status, StatusCode::OK);
    let u = body["u"].as_array().unwrap();
    assert_eq!(u.len(), 101);
    assert!(u.iter().all(|v| v.as_f64() == Some(0.0)));
    assert_eq!(body["meta"]["nodes"], 101);
    assert_eq!(body["meta"]["request"]["alpha"], 0.5);
    assert_eq!(body["meta"]["method"], "pece");
}

#[tokio::test]
async fn out_of_range_order_is_a_bad_request() {
    let (status, body) = post(app(), "/api/solve", r#"{"alpha": 2.5}"#).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert!(body["error"].as_str().unwrap().contains("(0, 2]"));
}

#[tokio::test]
async fn exponential_decay() {
    let req = json!({"alpha": 1, "coeff": 1, "y0": 1, "dt": 0.001, "duration": 4});
    let (status, body) = post(app(), "/api/solve", req.to_string()).await;
    assert_eq!(status, StatusCode::OK);
    let last = body["u"]
        .as_array()
        .unwrap()
        .last()
        .unwrap()
        .as_f64()
        .unwrap();
    assert!((last - (-4.0f64).exp()).abs() < 1e-4, "{last}");
}

#[tokio::test]
async fn parse_errors_carry_a_position() {
    let (status, body) = post(app(), "/api/solve", r#"{"forcing": "1 @ 2"}"#).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    assert_eq!(body["position"], 2);
}

#[tokio::test]
async fn malformed_json_and_unknown_fields() {
    let (status, _) = post(app(), "/api/solve", "{alpha:").await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    let (status, body) = post(app(), "/api/solve", r#"{"alpah": 1}"#).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert!(body["error"].as_str().unwrap().contains("alpah"));
}

#[tokio::test]
async fn domain_fault_in_forcing() {
    let (status, body) = post(app(), "/api/solve", r#"{"forcing": "log(t)"}"#).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert!(body["error"].as_str().unwrap().contains("log"));
}

#[tokio::test]
async fn step_cap_is_enforced() {
    let (status, _) = post(app(), "/api/solve", r#"{"dt": 0.00001, "duration": 10}"#).await;
    assert_eq!(status, StatusCode::PAYLOAD_TOO_LARGE);
}

#[tokio::test]
async fn oversized_body_is_rejected() {
    let padding = " ".repeat(2 << 20);
    let (status, _, _) = send(
        app(),
        Request::post("/api/solve")
            .header("content-type", "application/json")
            .body(Body::from(format!("{{{padding}}}")))
            .unwrap(),
    )
    .await;
    assert_eq!(status, StatusCode::PAYLOAD_TOO_LARGE);
}

#[tokio::test]
async fn analytic_and_pece_agree() {
    let table = [
        (0.5, 1.0, 1.0, 0.0, 0.01, 2e-3),
        (0.8, 2.0, 1.0, 0.0, 0.01, 1e-3),
        (1.0, 1.0, 2.0, 0.0, 0.01, 1e-4),
        (1.5, 1.0, 1.0, 1.0, 0.01, 1e-4),
        (2.0, 1.0, 1.0, 0.0, 0.01, 1e-4),
    ];
    for (alpha, coeff, y0, yp0, dt, tol) in table {
        let mut values = Vec::new();
        for method in ["pece", "analytic"] {
            let req = json!({"alpha": alpha, "coeff": coeff, "y0": y0, "yp0": yp0,
                "dt": dt, "duration": 5, "method": method});
            let (status, body) = post(app(), "/api/solve", req.to_string()).await;
            assert_eq!(status, StatusCode::OK, "{body}");
            assert_eq!(body["meta"]["method"], method);
            let u: Vec<f64> = serde_json::from_value(body["u"].clone()).unwrap();
            values.push(u);
        }
        let gap = values[0]
            .iter()
            .zip(&values[1])
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        assert!(gap < tol, "alpha {alpha}: {gap}");
    }
}

#[tokio::test]
async fn identical_concurrent_requests_match() {
    let app = app();
    let req = r#"{"alpha": 1.8, "y0": 1, "forcing": "cos(t^2)*exp(-t)"}"#;
    let handles: Vec<_> = (0..8)
        .map(|_| {
            let app = app.clone();
            tokio::spawn(async move { post(app, "/api/solve", req).await.1 })
        })
        .collect();
    let mut bodies = Vec::new();
    for h in handles {
        bodies.push(h.await.unwrap());
    }
    assert!(bodies.windows(2).all(|w| w[0] == w[1]));
}

#[tokio::test]
async fn plot_defaults_is_one_polyline() {
    let (status, ctype, body) = get(app(), "/api/plot").await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(ctype, "image/svg+xml");
    let svg = String::from_utf8(body).unwrap();
    assert_eq!(svg.matches("<polyline").count(), 1);
    let points = svg
        .split("points=\"")
        .nth(1)
        .unwrap()
        .split('"')
        .next()
        .unwrap();
    assert_eq!(points.split(' ').count(), 101);
    let (_, _, again) = get(app(), "/api/plot").await;
    assert_eq!(svg.as_bytes(), again.as_slice());
}

#[tokio::test]
async fn plot_of_cosine_crosses_zero() {
    let (status, _, body) = get(app(), "/api/plot?alpha=2&coeff=1&y0=1").await;
    assert_eq!(status, StatusCode::OK);
    let svg = String::from_utf8(body).unwrap();
    let zero_line = svg.split("class=\"zero\"").nth(1).unwrap();
    let zero_y: f64 = zero_line
        .split("y1=\"")
        .nth(1)
        .unwrap()
        .split('"')
        .next()
        .unwrap()
        .parse()
        .unwrap();
    let points = svg
        .split("points=\"")
        .nth(1)
        .unwrap()
        .split('"')
        .next()
        .unwrap();
    let ys: Vec<f64> = points
        .split(' ')
        .map(|p| p.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert!(ys.iter().any(|&y| y < zero_y) && ys.iter().any(|&y| y > zero_y));
}

#[tokio::test]
async fn plot_rejects_bad_order() {
    let (status, ctype, _) = get(app(), "/api/plot?alpha=3").await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert!(ctype.starts_with("application/json"));
}

#[tokio::test]
async fn fit_matches_the_library() {
    let req = json!({"csv": DOUGH, "alpha_grid": "0.3:0.7:0.1", "coeff_grid": [0.1, 0.25, 0.5, 1.0], "dt": 0.05});
    let (status, body) = post(app(), "/api/fit", req.to_string()).await;
    assert_eq!(status, StatusCode::OK, "{body}");

    let series = parse_series(DOUGH).unwrap();
    let template = FroProblem {
        y0: 710.0,
        step: 0.05,
        duration: 20.0,
        ..FroProblem::default()
    };
    let direct = grid_fit(
        &series,
        &[0.3, 0.4, 0.5, 0.6, 0.7],
        &[0.1, 0.25, 0.5, 1.0],
        &template,
    )
    .unwrap();
    assert_eq!(body["rmse"].as_f64().unwrap(), direct.rmse);
    assert_eq!(
        body["params"]["alpha"].as_f64().unwrap(),
        direct.params.alpha
    );
    assert_eq!(
        body["params"]["coeff"].as_f64().unwrap(),
        direct.params.relax_coeff
    );
}

#[tokio::test]
async fn fit_single_point_grid_and_inline_points() {
    let req =
        json!({"points": [[0, 2], [1, 1.5], [2, 1.2]], "alpha_grid": [0.5], "coeff_grid": "1"});
    let (status, body) = post(app(), "/api/fit", req.to_string()).await;
    assert_eq!(status, StatusCode::OK, "{body}");
    assert_eq!(body["params"]["alpha"], 0.5);
    assert_eq!(body["params"]["coeff"], 1.0);
    assert_eq!(body["params"]["y0"], 2.0);
}

#[tokio::test]
async fn fit_errors() {
    let empty = json!({"points": [], "alpha_grid": [0.5], "coeff_grid": [1]});
    assert_eq!(
        post(app(), "/api/fit", empty.to_string()).await.0,
        StatusCode::BAD_REQUEST
    );
    let bad_csv = json!({"csv": "time,value\n0,1\n0,2\n", "alpha_grid": [0.5], "coeff_grid": [1]});
    assert_eq!(
        post(app(), "/api/fit", bad_csv.to_string()).await.0,
        StatusCode::BAD_REQUEST
    );
    let huge = json!({"csv": DOUGH, "alpha_grid": "0.01:1:0.001", "coeff_grid": "0.1:2:0.1"});
    assert_eq!(
        post(app(), "/api/fit", huge.to_string()).await.0,
        StatusCode::PAYLOAD_TOO_LARGE
    );
}

#[tokio::test]
async fn health_get_and_head() {
    let (status, _, body) = get(app(), "/api/health").await;
    assert_eq!(status, StatusCode::OK);
    let v: Value = serde_json::from_slice(&body).unwrap();
    assert_eq!(v["status"], "ok");
    assert_eq!(get(app(), "/api/health").await.2, body);
    let (status, _, head) = send(
        app(),
        Request::builder()
            .method(Method::HEAD)
            .uri("/api/health")
            .body(Body::empty())
            .unwrap(),
    )
    .await;
    assert_eq!(status, StatusCode::OK);
    assert!(head.is_empty());
}

#[tokio::test]
async fn metrics_count_requests() {
    let app = app();
    post(app.clone(), "/api/solve", "{}").await;
    post(app.clone(), "/api/solve", r#"{"alpha": 9}"#).await;
    let (_, _, body) = get(app, "/api/metrics").await;
    let v: Value = serde_json::from_slice(&body).unwrap();
    assert_eq!(v["solves"], 1);
    assert_eq!(v["client_errors"], 1);
    assert_eq!(v["requests"], 3);
}

#[tokio::test]
async fn defaults_and_index() {
    let (_, _, body) = get(app(), "/api/defaults").await;
    let v: Value = serde_json::from_slice(&body).unwrap();
    assert_eq!(
        v,
        json!({"alpha": 0.5, "coeff": 1.0, "dt": 0.1, "duration": 10.0,
        "y0": 0.0, "yp0": 0.0, "forcing": "0", "method": "pece"})
    );
    let (status, ctype, _) = get(app(), "/").await;
    assert_eq!(status, StatusCode::OK);
    assert!(ctype.starts_with("text/html"));
    assert_eq!(get(app(), "/api/nope").await.0, StatusCode::NOT_FOUND);
}

#[tokio::test]
async fn static_dir_is_served() {
    let dir = std::env::temp_dir().join(format!("fro-static-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("index.html"), "<p>bundle</p>").unwrap();
    let app = router(AppConfig {
        static_dir: Some(dir.clone()),
        ..AppConfig::default()
    });
    let (status, _, body) = get(app.clone(), "/").await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body, b"<p>bundle</p>");
    assert_eq!(get(app, "/api/health").await.0, StatusCode::OK);
    std::fs::remove_dir_all(dir).unwrap();
}
