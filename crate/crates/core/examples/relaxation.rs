// Forced relaxation at four fractional orders on one grid.
//
// `cargo run -p fro-core --example relaxation`

use std::error::Error;

use fro_core::{solve_pece, Forcing, FroProblem};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let forcing: Forcing = "5*cos(t^2)*exp(-t)".parse::<fro_core::Expression>()?.into();
    let orders = [0.9, 0.8, 0.7, 0.6];
    let mut curves = Vec::new();
    for alpha in orders {
        let problem = FroProblem {
            alpha,
            relax_coeff: 1.0,
            forcing: forcing.clone(),
            step: 0.02,
            duration: 4.0,
            ..FroProblem::default()
        };
        curves.push(solve_pece(&problem)?);
    }

    println!(
        "{:>6} {}",
        "t",
        orders.map(|a| format!("{:>10}", format!("a={a}"))).join("")
    );
    for n in (0..curves[0].values.len()).step_by(25) {
        let row: String = curves
            .iter()
            .map(|c| format!("{:>10.5}", c.values[n]))
            .collect();
        println!("{:>6.2} {row}", curves[0].times()[n]);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
