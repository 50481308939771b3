// Writing trajectories as CSV or JSON and reading a CSV back as a series.
//
// `cargo run -p fro-core --example export`

use std::error::Error;

use fro_core::dataio::{export_trajectory, load_series, Format};
use fro_core::{solve_analytic, FroProblem};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let problem = FroProblem {
        alpha: 1.5,
        y0: 1.0,
        y0_prime: -0.5,
        step: 0.5,
        duration: 5.0,
        ..FroProblem::default()
    };
    let traj = solve_analytic(&problem)?;

    let dir = std::env::temp_dir().join(format!("fro-export-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let csv = dir.join("oscillation.csv");
    let json = dir.join("oscillation.json");
    export_trajectory(&traj, &csv, Format::Csv)?;
    export_trajectory(&traj, &json, Format::Json)?;

    let text = std::fs::read_to_string(&csv)?;
    for line in text.lines().take(4) {
        println!("{line}");
    }
    let back = load_series(&csv)?;
    let lossless = back
        .points()
        .iter()
        .zip(&traj.values)
        .all(|((_, v), u)| v == u);
    println!(
        "... {} rows, read back as {:?}, lossless: {lossless}",
        back.len(),
        back.label
    );

    let meta: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json)?)?;
    println!("json meta: {}", meta["meta"]);
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
