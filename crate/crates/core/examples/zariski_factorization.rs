// Zariski factorization into block ideals `(x^p, y^q)` and back.

use monoideal::factorization::{boundary_count, edges};
use monoideal::{parse_ideal, zariski_factor, CIFactorization, CompleteIdeal};

fn main() -> monoideal::Result<()> {
    let i = CompleteIdeal::new(parse_ideal("x^6, x^4*y, x^2*y^2, x*y^4, y^7")?.integral_closure()?)?;
    let f = zariski_factor(&i);
    println!("I       = {i}");
    println!("factors = {f}");
    for factor in f.factors() {
        println!("  block (p, q) = ({}, {}) with exponent {}", factor.block.p(), factor.block.q(), factor.n);
    }
    assert_eq!(&f.compose()?, i.ideal());

    // factorization is multiplicative
    let j = CompleteIdeal::new(parse_ideal("x^2, y^5")?.integral_closure()?)?;
    let ij = i.product(&j)?;
    assert_eq!(zariski_factor(&ij), f.merge(&zariski_factor(&j))?);
    println!("I·J     = {}", zariski_factor(&ij));

    // r(I) + 1 boundary points
    let ci = CIFactorization::new(edges(&i.newton_boundary()))?;
    println!("boundary lattice points = {}", boundary_count(&ci));
    Ok(())
}
