//! Complete monomial ideals in `k[x, y]`.
//!
//! For m-primary complete monomial ideals `I`, `J` this crate computes the
//! integral closure, the Zariski factorization into block ideals, the
//! colength `ℓ(R/I)` and the Bhattacharya polynomial `ℓ(R/I^m J^n)` in
//! closed form. The [`oracle`] module recomputes the same numbers by
//! counting lattice points, independently of the formulas.
//!
//! ```
//! use monoideal::{bhattacharya_polynomial, parse_ideal, CompleteIdeal};
//!
//! let i = CompleteIdeal::new(parse_ideal("x^3, x*y, y^3")?)?;
//! let p = bhattacharya_polynomial(&i, &CompleteIdeal::maximal())?;
//! assert_eq!(p.to_string(), "3m^2 + 1/2n^2 + 2mn + 2m + 1/2n");
//! assert_eq!(p.evaluate(1, 1)?, 8);
//! # Ok::<(), monoideal::Error>(())
//! ```

pub mod bhattacharya;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod factorization;
pub mod lattice_geom;
pub mod monomial_ideal;
pub mod oracle;

pub use bhattacharya::{
    bhattacharya_polynomial, colength, fiber_function, general_j_step, hilbert_function, min_generators,
    mixed_multiplicities, s_value, verma_polynomial, with_maximal_ideal, BhattacharyaPolynomial, HalfInteger,
    MixedMultiplicities,
};
pub use cli::parse_ideal;
pub use error::{Error, Result};
pub use factorization::{zariski_factor, BlockFactor, BlockFactorization, BlockIdeal, CIFactorization};
pub use lattice_geom::{DoubledArea, LatticePoint, LatticePolygon};
pub use monomial_ideal::{CompleteIdeal, CompletenessPolicy, EdgeData, MonomialIdeal, NewtonBoundary};
pub use oracle::{brute_colength, brute_table, ColengthTable};
