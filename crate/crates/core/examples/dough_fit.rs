// Fitting order and coefficient to stress-relaxation data for wheat dough
// (Cunningham et al., 1953) by exhaustive grid search.
//
// `cargo run -p fro-core --release --example dough_fit`

use std::error::Error;

use fro_core::dataio::{grid_fit, parse_grid, parse_series, residuals};
use fro_core::{solve_pece, FroProblem};

const DATA: &str = "\
# time (s), tension (g)
time,value
0,710
1,560
2,487
4,420
6,383
8,355
10,334
12,321
14,309
16,298
18,288
20,280
";

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let series = parse_series(DATA)?;
    let template = FroProblem {
        y0: series.first().1,
        step: 0.05,
        duration: 20.0,
        ..FroProblem::default()
    };
    let best = grid_fit(
        &series,
        &parse_grid("0.1:0.95:0.05")?,
        &parse_grid("0.05:3.0:0.05")?,
        &template,
    )?;
    println!(
        "best alpha = {}, A = {}: rmse {:.2} g ({:.2}% of the data RMS), {} unstable grid points skipped",
        best.params.alpha,
        best.params.relax_coeff,
        best.rmse,
        100.0 * best.relative_rmse,
        best.diverged.len()
    );

    // classical exponential relaxation for comparison
    let exp = grid_fit(&series, &[1.0], &parse_grid("0.01:1.0:0.01")?, &template)?;
    println!(
        "best alpha = 1 (exponential): A = {}, rmse {:.2} g",
        exp.params.relax_coeff, exp.rmse
    );

    let curve = solve_pece(&best.params)?;
    let report = residuals(&curve, &series)?;
    println!("\n{:>5} {:>7} {:>8}", "t", "data", "model");
    for &(t, v) in series.points() {
        let n = (t / curve.grid.step).round() as usize;
        println!("{t:>5} {v:>7} {:>8.1}", curve.values[n]);
    }
    println!("max |residual| {:.1} g", report.max_abs_error);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
