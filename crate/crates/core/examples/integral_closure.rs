// Integral closure and the Newton boundary of a monomial ideal.

use monoideal::{parse_ideal, CompleteIdeal, CompletenessPolicy};

fn main() -> monoideal::Result<()> {
    let raw = parse_ideal("x^4, x^2*y^3, y^6")?;
    let boundary = raw.newton_boundary()?;
    println!("I          = {raw}");
    println!("vertices   = {:?}", boundary.vertices().iter().map(|p| (p.u, p.v)).collect::<Vec<_>>());
    println!("complete?  = {}", raw.is_complete()?);

    let closure = raw.integral_closure()?;
    println!("closure    = {closure}");

    // strict admission refuses the raw ideal, autoclose repairs it
    assert!(CompleteIdeal::new(raw.clone()).is_err());
    let admitted = CompleteIdeal::admit(raw, CompletenessPolicy::Autoclose)?;
    println!("autoclosed = {} (closed: {})", admitted.ideal, admitted.closed);
    assert_eq!(admitted.ideal.ideal(), &closure);
    Ok(())
}
