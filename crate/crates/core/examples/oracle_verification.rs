// Random pairs checked cell by cell against brute-force counts.

use monoideal::corpus::random_complete_ideal;
use monoideal::{bhattacharya_polynomial, brute_table};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> monoideal::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (pairs, grid) = (25, 4);
    for k in 0..pairs {
        let i = random_complete_ideal(&mut rng, 12)?;
        let j = random_complete_ideal(&mut rng, 12)?;
        let p = bhattacharya_polynomial(&i, &j)?;
        let table = brute_table(i.ideal(), j.ideal(), grid, grid)?;
        for m in 0..=grid {
            for n in 0..=grid {
                let closed = p.evaluate(m.into(), n.into())?;
                if closed != table.get(m, n) as i64 {
                    return Err(monoideal::Error::Inconsistent(format!(
                        "I = {i}, J = {j}, ({m}, {n}): {closed} vs {}",
                        table.get(m, n)
                    )));
                }
            }
        }
        println!("pair {k:>2}: P = {p}");
    }
    println!("{pairs} pairs agree on the {grid}x{grid} grid");
    Ok(())
}
