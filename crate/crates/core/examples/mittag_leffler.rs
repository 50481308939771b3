// The two-parameter Mittag-Leffler function and its classical special cases.
//
// `cargo run -p fro-core --example mittag_leffler`

use std::error::Error;

use fro_core::mittag_leffler::{gamma, ml};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let checks = [
        ("E_1,1(-1) = 1/e", ml(1.0, 1.0, -1.0)?, (-1.0f64).exp()),
        ("E_2,1(-1) = cos 1", ml(2.0, 1.0, -1.0)?, 1.0f64.cos()),
        (
            "E_2,2(-4) = sin(2)/2",
            ml(2.0, 2.0, -4.0)?,
            2.0f64.sin() / 2.0,
        ),
        (
            "E_.5,1(-1) = e erfc 1",
            ml(0.5, 1.0, -1.0)?,
            0.427_583_576_155_807,
        ),
        (
            "E_.7,1.3(0) = 1/G(1.3)",
            ml(0.7, 1.3, 0.0)?,
            1.0 / gamma(1.3)?,
        ),
    ];
    for (name, got, want) in checks {
        println!("{name:<24} {got:.16}  diff {:.1e}", (got - want).abs());
    }

    println!("\nrelaxation E_a(-t) for several orders");
    println!("{:>6} {:>12} {:>12} {:>12}", "t", "a=0.3", "a=0.7", "a=1");
    for t in [0.0, 0.5, 1.0, 5.0, 20.0, 100.0] {
        println!(
            "{t:>6} {:>12.6e} {:>12.6e} {:>12.6e}",
            ml(0.3, 1.0, -t)?,
            ml(0.7, 1.0, -t)?,
            ml(1.0, 1.0, -t)?
        );
    }
    println!("\nE_a,b needs z <= 0: {}", ml(0.5, 1.0, 1.0).unwrap_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
