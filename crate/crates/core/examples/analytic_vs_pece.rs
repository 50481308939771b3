// Damped fractional oscillation: the PECE curve against the closed form for
// several initial conditions.
//
// `cargo run -p fro-core --example analytic_vs_pece`

use std::error::Error;

use fro_core::{solve_analytic, solve_pece, FroProblem};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!(
        "{:>4} {:>4} {:>8} {:>12} {:>10}",
        "y0", "yp0", "h", "u(10)", "max gap"
    );
    for (y0, y0_prime) in [(1.0, 1.0), (1.0, 0.0), (0.0, 1.0)] {
        for step in [0.1, 0.025, 1.0 / 1024.0] {
            let problem = FroProblem {
                alpha: 1.8,
                y0,
                y0_prime,
                step,
                ..FroProblem::default()
            };
            let numeric = solve_pece(&problem)?;
            let exact = solve_analytic(&problem)?;
            println!(
                "{y0:>4} {y0_prime:>4} {step:>8.5} {:>12.8} {:>10.2e}",
                numeric.last(),
                numeric.max_abs_difference(&exact)
            );
        }
    }

    // with forcing the closed form adds a product-integrated convolution
    let forced = FroProblem {
        alpha: 0.5,
        relax_coeff: 2.0,
        forcing: "t*sin(t)".parse::<fro_core::Expression>()?.into(),
        y0: 2.0,
        step: 0.01,
        ..FroProblem::default()
    };
    let gap = solve_pece(&forced)?.max_abs_difference(&solve_analytic(&forced)?);
    println!("\nforced, alpha 0.5, A 2: max gap {gap:.2e}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
