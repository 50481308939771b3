// Driving the HTTP API in-process: solve, plot and fit requests against the
// router without opening a socket. `fro serve` exposes the same router.
//
// `cargo run -p fro-service --example api`

use std::error::Error;

use axum::body::Body;
use axum::http::Request;
use fro_service::{router, AppConfig};
use http_body_util::BodyExt;
use serde_json::json;
use tower::ServiceExt;

async fn call(request: Request<Body>) -> Result<(u16, String), Box<dyn Error>> {
    let response = router(AppConfig::default()).oneshot(request).await?;
    let status = response.status().as_u16();
    let body = response.into_body().collect().await?.to_bytes();
    Ok((status, String::from_utf8(body.to_vec())?))
}

fn post(uri: &str, body: serde_json::Value) -> Request<Body> {
    Request::post(uri)
        .header("content-type", "application/json")
        .body(Body::from(body.to_string()))
        .unwrap()
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let runtime = tokio::runtime::Runtime::new()?;
    runtime.block_on(async {
        let (status, body) = call(post(
            "/api/solve",
            json!({"alpha": 1.8, "y0": 1, "dt": 0.5}),
        ))
        .await?;
        let solved: serde_json::Value = serde_json::from_str(&body)?;
        println!("POST /api/solve -> {status}, u = {}", solved["u"]);

        let (status, body) = call(post("/api/solve", json!({"alpha": 2.5}))).await?;
        println!("POST /api/solve alpha 2.5 -> {status} {body}");

        let (status, body) = call(post("/api/solve", json!({"forcing": "sin(t"}))).await?;
        println!("POST /api/solve bad forcing -> {status} {body}");

        let uri = "/api/plot?alpha=2&y0=1&dt=0.05";
        let (status, svg) = call(Request::get(uri).body(Body::empty())?).await?;
        println!("GET {uri} -> {status}, {} bytes of SVG", svg.len());

        let fit = json!({
            "csv": "time,value\n0,710\n2,487\n6,383\n12,321\n20,280\n",
            "alpha_grid": "0.3:0.7:0.1",
            "coeff_grid": [0.1, 0.25, 0.5],
        });
        let (status, body) = call(post("/api/fit", fit)).await?;
        let report: serde_json::Value = serde_json::from_str(&body)?;
        println!(
            "POST /api/fit -> {status}, alpha {} coeff {} rmse {:.2}",
            report["params"]["alpha"],
            report["params"]["coeff"],
            report["rmse"].as_f64().unwrap_or(f64::NAN)
        );
        Ok(())
    })
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
