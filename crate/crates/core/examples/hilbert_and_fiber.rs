// Hilbert function `ℓ(I^m / I^{m+1})`, fiber function and generator count.

use monoideal::{fiber_function, hilbert_function, min_generators, parse_ideal, CompleteIdeal};

fn main() -> monoideal::Result<()> {
    let i = CompleteIdeal::new(parse_ideal("x^5, x^2*y, y^4")?.integral_closure()?)?;
    println!("I = {i}, minimal generators: {}", min_generators(&i)?);
    println!("{:>3} {:>8} {:>8}", "m", "hilbert", "fiber");
    for m in 0..=6 {
        println!("{m:>3} {:>8} {:>8}", hilbert_function(&i, m)?, fiber_function(&i, m)?);
    }
    Ok(())
}
