// The polynomial `ℓ(R/I^m J^n)` and its mixed multiplicities.

use monoideal::{
    bhattacharya_polynomial, brute_table, mixed_multiplicities, parse_ideal, verma_polynomial, CompleteIdeal,
};

fn main() -> monoideal::Result<()> {
    let i = CompleteIdeal::new(parse_ideal("x^3, x*y, y^3")?)?;
    let j = CompleteIdeal::new(parse_ideal("x^2, y^5")?.integral_closure()?)?;
    let p = bhattacharya_polynomial(&i, &j)?;
    let e = mixed_multiplicities(&i, &j)?;
    println!("I = {i}");
    println!("J = {j}");
    println!("P(m, n) = {p}");
    println!("e(I) = {}, e(I|J) = {}, e(J) = {}", e.e20, e.e11, e.e02);
    assert_eq!(verma_polynomial(&i, &j)?, p);

    let table = brute_table(i.ideal(), j.ideal(), 3, 3)?;
    println!("counted ℓ(R/I^m J^n):\n{table}");
    for m in 0..=3u32 {
        for n in 0..=3u32 {
            assert_eq!(p.evaluate(m.into(), n.into())?, table.get(m, n) as i64);
        }
    }
    println!("closed form matches on the whole grid");
    Ok(())
}
