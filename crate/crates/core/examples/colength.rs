// Colength `ℓ(R/I)` by formula and by counting monomials.

use monoideal::{brute_colength, colength, parse_ideal, s_value, CompleteIdeal};

fn main() -> monoideal::Result<()> {
    for text in ["x, y", "x^3, x*y, y^3", "x^5, x^2*y, y^4", "x^7, x^3*y^2, x*y^5, y^8"] {
        let i = CompleteIdeal::new(parse_ideal(text)?.integral_closure()?)?;
        let by_formula = colength(&i)?;
        let by_count = brute_colength(i.ideal())?;
        println!("{:<28} s = {:>5}  ℓ(R/I) = {by_formula:>3}  counted = {by_count:>3}", i.to_string(), s_value(&i)?.to_string());
        assert_eq!(by_formula, by_count as i64);
    }
    Ok(())
}
