// `ℓ(I^m J^n / I^{m+1} J^n)` for a `J` carrying a monomial factor.

use monoideal::{general_j_step, parse_ideal, CompleteIdeal, CompletenessPolicy};

fn main() -> monoideal::Result<()> {
    let i = CompleteIdeal::new(parse_ideal("x^3, x*y, y^3")?)?;
    // x·y·(x^2, y): not m-primary, but the step only sees (x^2, y)
    let j = parse_ideal("x^3*y, x*y^2")?;
    let (factor, rest) = j.strip_monomial_factor()?;
    println!("J = {j} = x^{}y^{} · ({rest})", factor.u, factor.v);
    for (m, n) in [(0, 0), (1, 0), (1, 1), (2, 3)] {
        let step = general_j_step(&i, &j, m, n, CompletenessPolicy::Strict)?;
        println!("ℓ(I^{m} J^{n} / I^{} J^{n}) = {step}", m + 1);
    }
    Ok(())
}
