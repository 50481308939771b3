// Measured order of accuracy against the Mittag-Leffler solution.
//
// For α < 1 the solution starts like `1 - t^α/Γ(1+α)`, so the largest error
// sits at the first step and the max-norm order falls below `1 + α`; the
// error at the final time keeps the full rate.
//
// `cargo run -p fro-core --release --example convergence`

use std::error::Error;

use fro_core::mittag_leffler::ml;
use fro_core::solver::{empirical_order, theoretical_order, Reference};
use fro_core::{solve_pece, FroProblem};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let ladder = [1.0 / 64.0, 1.0 / 128.0, 1.0 / 256.0, 1.0 / 512.0];
    println!(
        "{:>5} {:>9} {:>9} {:>9}",
        "alpha", "expected", "max-norm", "at T"
    );
    for alpha in [0.3, 0.5, 0.8, 1.0, 1.2, 1.8, 2.0] {
        let problem = FroProblem {
            alpha,
            y0: 1.0,
            duration: 2.0,
            ..FroProblem::default()
        };
        let study = empirical_order(&problem, &ladder, Reference::Analytic)?;

        let exact = ml(alpha, 1.0, -(2.0f64).powf(alpha))?;
        let end: Vec<f64> = ladder
            .iter()
            .map(|&step| {
                solve_pece(&FroProblem {
                    step,
                    ..problem.clone()
                })
                .map(|t| (t.last() - exact).abs())
            })
            .collect::<Result<_, _>>()?;
        let end_order = (end[0] / end[3]).log2() / 3.0;

        println!(
            "{alpha:>5} {:>9.3} {:>9.3} {end_order:>9.3}",
            theoretical_order(alpha),
            study.order
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
