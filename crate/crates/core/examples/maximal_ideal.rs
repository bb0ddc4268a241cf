// Specialization `J = (x, y)`.

use monoideal::{bhattacharya_polynomial, parse_ideal, with_maximal_ideal, CompleteIdeal};

fn main() -> monoideal::Result<()> {
    let m = CompleteIdeal::maximal();
    for text in ["x^3, x*y, y^3", "x^4, x*y^2, y^5", "x^9, x^2*y^3, y^7"] {
        let i = CompleteIdeal::new(parse_ideal(text)?.integral_closure()?)?;
        let p = with_maximal_ideal(&i)?;
        assert_eq!(p, bhattacharya_polynomial(&i, &m)?);
        println!("I = {i}\n  P(m, n) = {p}\n  P(2, 3) = {}", p.evaluate(2, 3)?);
    }
    Ok(())
}
