// Forcing functions are plain text in `t`.
//
// `cargo run -p fro-core --example forcing`

use std::error::Error;

use fro_core::expr::{tokenize, Expression};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for source in ["5*cos(t^2)*exp(-t)", "t*sin(t)", "2^3^2", "-t^2 + pi/e"] {
        let expr: Expression = source.parse()?;
        let tokens = tokenize(source)?.len();
        println!(
            "{source:<22} -> {expr:<40} {tokens:>2} tokens, f(1) = {}",
            expr.evaluate(1.0)?
        );
    }

    // errors carry the character offset they refer to
    for bad in ["1 @ 2", "cos(", "5cos(t)", "foo(t)"] {
        let err = bad.parse::<Expression>().unwrap_err();
        println!("{bad}\n{}^ {err}", " ".repeat(err.position()));
    }

    let log: Expression = "log(t - 1)".parse()?;
    if let Err(e) = log.evaluate(0.5) {
        println!("evaluation: {e}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
