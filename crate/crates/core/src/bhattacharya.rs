//! Closed-form length functions of complete m-primary monomial ideals.
//!
//! Everything fractional is a [`HalfInteger`] held doubled. Quantities that
//! admit two independent derivations (the area under the Newton boundary,
//! the colength) are computed both ways and compared; a mismatch is an
//! [`Error::Inconsistent`].

use std::fmt;

use num_integer::Integer;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::factorization::{edges, zariski_factor};
use crate::lattice_geom::doubled_area;
use crate::monomial_ideal::{CompleteIdeal, CompletenessPolicy, EdgeData, MonomialIdeal};

/// An element of `½ℤ`, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInteger {
    doubled: i64,
}

impl HalfInteger {
    pub const ZERO: HalfInteger = HalfInteger { doubled: 0 };

    pub const fn from_doubled(doubled: i64) -> Self {
        HalfInteger { doubled }
    }

    pub const fn from_integer(n: i64) -> Self {
        HalfInteger { doubled: 2 * n }
    }

    pub fn doubled(self) -> i64 {
        self.doubled
    }

    /// The value as an integer, if it is one.
    pub fn to_integer(self) -> Option<i64> {
        self.doubled.is_even().then_some(self.doubled / 2)
    }

    fn from_doubled_wide(doubled: i128) -> Result<Self> {
        Ok(HalfInteger { doubled: narrow(doubled)? })
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_integer() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "{}/2", self.doubled),
        }
    }
}

impl Serialize for HalfInteger {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("HalfInteger", 2)?;
        st.serialize_field("doubled", &true)?;
        st.serialize_field("value", &self.doubled)?;
        st.end()
    }
}

fn narrow(x: i128) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow)
}

fn halve(doubled: i128, what: &str) -> Result<i64> {
    if doubled.is_odd() {
        return Err(Error::Inconsistent(format!("{what} is not an integer (doubled value {doubled})")));
    }
    narrow(doubled / 2)
}

/// `ℓ(R/I^m J^n) = qm·m² + qn·n² + cross·mn + lm·m + ln·n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BhattacharyaPolynomial {
    pub qm: HalfInteger,
    pub qn: HalfInteger,
    pub cross: HalfInteger,
    pub lm: HalfInteger,
    pub ln: HalfInteger,
}

impl BhattacharyaPolynomial {
    /// Value at `(m, n)`. The doubled sum must be even.
    pub fn evaluate(&self, m: u64, n: u64) -> Result<i64> {
        let (m, n) = (m as i128, n as i128);
        let terms = [
            (self.qm, m * m),
            (self.qn, n * n),
            (self.cross, m * n),
            (self.lm, m),
            (self.ln, n),
        ];
        let mut doubled: i128 = 0;
        for (coef, mono) in terms {
            let t = (coef.doubled as i128).checked_mul(mono).ok_or(Error::Overflow)?;
            doubled = doubled.checked_add(t).ok_or(Error::Overflow)?;
        }
        halve(doubled, &format!("P({m}, {n})"))
    }

    fn coefficients(&self) -> [(HalfInteger, &'static str); 5] {
        [(self.qm, "m^2"), (self.qn, "n^2"), (self.cross, "mn"), (self.lm, "m"), (self.ln, "n")]
    }
}

impl fmt::Display for BhattacharyaPolynomial {
    /// `3m^2 + 1/2n^2 + 2mn + 2m + 1/2n`; unit coefficients are omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (coef, mono) in self.coefficients() {
            if coef.doubled == 0 {
                continue;
            }
            let negative = coef.doubled < 0;
            let magnitude = HalfInteger::from_doubled(coef.doubled.abs());
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            if magnitude.doubled != 2 {
                write!(f, "{magnitude}")?;
            }
            f.write_str(mono)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for BhattacharyaPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("BhattacharyaPolynomial", 7)?;
        st.serialize_field("doubled", &true)?;
        st.serialize_field("m2", &self.qm.doubled)?;
        st.serialize_field("n2", &self.qn.doubled)?;
        st.serialize_field("mn", &self.cross.doubled)?;
        st.serialize_field("m", &self.lm.doubled)?;
        st.serialize_field("n", &self.ln.doubled)?;
        st.serialize_field("rendered", &self.to_string())?;
        st.end()
    }
}

/// Normalized top-degree coefficients `e_{2,0}, e_{1,1}, e_{0,2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct MixedMultiplicities {
    pub e20: i64,
    pub e11: i64,
    pub e02: i64,
}

/// Doubled `Σ c_i d_i / 2 + Σ_{i<j} c_i d_j` for edges in nonincreasing
/// slope order.
pub(crate) fn doubled_area_from_edges(edges: &[EdgeData]) -> Result<i128> {
    let mut total: i128 = 0;
    let mut runs_so_far: i128 = 0;
    for e in edges {
        let (c, d) = (e.c as i128, e.d as i128);
        let term = c * d + 2 * runs_so_far * d;
        total = total.checked_add(term).ok_or(Error::Overflow)?;
        runs_so_far += c;
    }
    Ok(total)
}

/// `s_I`, the area between the axes and the Newton boundary.
///
/// Computed as the box area minus the convex polygon above the boundary,
/// and again from the edge data; the two must agree.
pub fn s_value(ideal: &CompleteIdeal) -> Result<HalfInteger> {
    let boundary = ideal.newton_boundary();
    let rect = doubled_area(&boundary.bounding_rectangle()?)?.value();
    let upper = doubled_area(&boundary.upper_polygon()?)?.value();
    let geometric = rect as i128 - upper as i128;
    let from_edges = doubled_area_from_edges(&edges(&boundary))?;
    if geometric != from_edges {
        return Err(Error::Inconsistent(format!(
            "s_I of {ideal}: box minus polygon gives {geometric}/2, edge formula gives {from_edges}/2"
        )));
    }
    HalfInteger::from_doubled_wide(geometric)
}

/// `a_I + b_I - l_I + 1`, twice the linear coefficient.
fn doubled_linear_term(ideal: &CompleteIdeal) -> Result<i128> {
    let b = ideal.newton_boundary();
    Ok(b.a() as i128 + b.b() as i128 - b.lattice_count()? as i128 + 1)
}

/// `ℓ(R/I)`, from the vertex formula and from the block factorization.
pub fn colength(ideal: &CompleteIdeal) -> Result<i64> {
    let by_vertices = s_value(ideal)?.doubled as i128 + doubled_linear_term(ideal)?;

    let blocks = zariski_factor(ideal);
    let mut by_blocks: i128 = 0;
    let mut weighted_p: i128 = 0;
    for f in blocks.factors() {
        let (p, q, n) = (f.block.p() as i128, f.block.q() as i128, f.n as i128);
        by_blocks += p * q * n * n + 2 * weighted_p * q * n + (p + q - 1) * n;
        weighted_p += p * n;
    }

    if by_vertices != by_blocks {
        return Err(Error::Inconsistent(format!(
            "colength of {ideal}: vertex formula gives {by_vertices}/2, block formula gives {by_blocks}/2"
        )));
    }
    halve(by_vertices, "colength")
}

/// Colength that also accepts the unit ideal (colength 0), for powers
/// `I^0`.
pub fn colength_or_zero(ideal: &MonomialIdeal) -> Result<i64> {
    if ideal.is_unit() {
        return Ok(0);
    }
    colength(&CompleteIdeal::new(ideal.clone())?)
}

/// The Bhattacharya polynomial of `(I, J)`, exact for all `m, n >= 0`.
/// `s_{IJ}` comes from the product ideal.
pub fn bhattacharya_polynomial(i: &CompleteIdeal, j: &CompleteIdeal) -> Result<BhattacharyaPolynomial> {
    let si = s_value(i)?;
    let sj = s_value(j)?;
    let sij = s_value(&i.product(j)?)?;
    Ok(BhattacharyaPolynomial {
        qm: si,
        qn: sj,
        cross: HalfInteger::from_doubled(sij.doubled - si.doubled - sj.doubled),
        lm: HalfInteger::from_doubled_wide(doubled_linear_term(i)?)?,
        ln: HalfInteger::from_doubled_wide(doubled_linear_term(j)?)?,
    })
}

pub fn mixed_multiplicities(i: &CompleteIdeal, j: &CompleteIdeal) -> Result<MixedMultiplicities> {
    let p = bhattacharya_polynomial(i, j)?;
    Ok(MixedMultiplicities {
        e20: p.qm.doubled,
        e11: halve(p.cross.doubled as i128, "e_{1,1}")?,
        e02: p.qn.doubled,
    })
}

/// The same polynomial assembled from multiplicities and colengths:
/// `e(I)C(m,2) + e(J)C(n,2) + (ℓ(R/IJ) - ℓ(R/I) - ℓ(R/J))mn + ℓ(R/I)m + ℓ(R/J)n`.
pub fn verma_polynomial(i: &CompleteIdeal, j: &CompleteIdeal) -> Result<BhattacharyaPolynomial> {
    let ei = s_value(i)?.doubled;
    let ej = s_value(j)?.doubled;
    let li = colength(i)?;
    let lj = colength(j)?;
    let lij = colength(&i.product(j)?)?;
    // C(k, 2) = k²/2 - k/2
    Ok(BhattacharyaPolynomial {
        qm: HalfInteger::from_doubled(ei),
        qn: HalfInteger::from_doubled(ej),
        cross: HalfInteger::from_integer(lij - li - lj),
        lm: HalfInteger::from_doubled(2 * li - ei),
        ln: HalfInteger::from_doubled(2 * lj - ej),
    })
}

/// Split of the edges around slope 1: `Σ_{d_i ≥ c_i} c_i + Σ_{d_j < c_j} d_j`.
fn slope_one_split(edges: &[EdgeData]) -> i64 {
    let s = edges.iter().take_while(|e| e.d >= e.c).count();
    edges[..s].iter().map(|e| e.c).sum::<i64>() + edges[s..].iter().map(|e| e.d).sum::<i64>()
}

fn doubled_edge_linear(edges: &[EdgeData]) -> i64 {
    edges.iter().map(|e| e.c + e.d - e.c.gcd(&e.d)).sum()
}

/// `ℓ(R/I^m 𝔪^n)` straight from the edge data of `I`, without forming `I𝔪`.
pub fn with_maximal_ideal(ideal: &CompleteIdeal) -> Result<BhattacharyaPolynomial> {
    let edges = edges(&ideal.newton_boundary());
    Ok(BhattacharyaPolynomial {
        qm: HalfInteger::from_doubled_wide(doubled_area_from_edges(&edges)?)?,
        qn: HalfInteger::from_doubled(1),
        cross: HalfInteger::from_integer(slope_one_split(&edges)),
        lm: HalfInteger::from_doubled(doubled_edge_linear(&edges)),
        ln: HalfInteger::from_doubled(1),
    })
}

/// `ℓ(I^m / I^{m+1})`, the Hilbert function of the associated graded ring.
pub fn hilbert_function(ideal: &CompleteIdeal, m: u64) -> Result<i64> {
    let edges = edges(&ideal.newton_boundary());
    let s = doubled_area_from_edges(&edges)?;
    let doubled = s
        .checked_mul(2 * m as i128 + 1)
        .and_then(|x| x.checked_add(doubled_edge_linear(&edges) as i128))
        .ok_or(Error::Overflow)?;
    halve(doubled, "l(I^m/I^(m+1))")
}

/// `ℓ(I^m / 𝔪I^m)`, the Hilbert function of the fiber ring.
pub fn fiber_function(ideal: &CompleteIdeal, m: u64) -> Result<i64> {
    let split = slope_one_split(&edges(&ideal.newton_boundary())) as i128;
    narrow(split * m as i128 + 1)
}

/// Minimal number of generators, from the edge data.
pub fn min_generators(ideal: &CompleteIdeal) -> Result<i64> {
    fiber_function(ideal, 1)
}

/// `ℓ(I^m J^n / I^{m+1} J^n)` for an arbitrary nonzero complete monomial
/// ideal `J`, by removing the monomial factor of `J` first.
pub fn general_j_step(
    i: &CompleteIdeal,
    j: &MonomialIdeal,
    m: u64,
    n: u64,
    policy: CompletenessPolicy,
) -> Result<i64> {
    let (_, stripped) = j.strip_monomial_factor()?;
    if stripped.is_unit() || n == 0 {
        return hilbert_function(i, m);
    }
    let stripped = CompleteIdeal::admit(stripped, policy)?.ideal;
    let p = bhattacharya_polynomial(i, &stripped)?;
    Ok(p.evaluate(m + 1, n)? - p.evaluate(m, n)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(pts: &[(i64, i64)]) -> CompleteIdeal {
        let raw = MonomialIdeal::normalize(pts.iter().map(|&p| p.into())).unwrap();
        CompleteIdeal::new(raw.integral_closure().unwrap()).unwrap()
    }

    fn m() -> CompleteIdeal {
        CompleteIdeal::maximal()
    }

    fn three() -> CompleteIdeal {
        complete(&[(3, 0), (1, 1), (0, 3)])
    }

    fn poly(d: [i64; 5]) -> BhattacharyaPolynomial {
        let h = HalfInteger::from_doubled;
        BhattacharyaPolynomial { qm: h(d[0]), qn: h(d[1]), cross: h(d[2]), lm: h(d[3]), ln: h(d[4]) }
    }

    #[test]
    fn half_integer_display() {
        assert_eq!(HalfInteger::from_doubled(1).to_string(), "1/2");
        assert_eq!(HalfInteger::from_doubled(6).to_string(), "3");
        assert_eq!(HalfInteger::from_doubled(-3).to_string(), "-3/2");
        assert_eq!(HalfInteger::from_doubled(7).to_integer(), None);
    }

    #[test]
    fn s_values() {
        assert_eq!(s_value(&m()).unwrap().doubled(), 1);
        assert_eq!(s_value(&complete(&[(2, 0), (0, 3)])).unwrap().doubled(), 6);
        assert_eq!(s_value(&three()).unwrap().doubled(), 6);
    }

    #[test]
    fn colengths() {
        assert_eq!(colength(&m()).unwrap(), 1);
        assert_eq!(colength(&complete(&[(2, 0), (0, 3)])).unwrap(), 5);
        assert_eq!(colength(&three()).unwrap(), 5);
        assert_eq!(colength_or_zero(&MonomialIdeal::unit()).unwrap(), 0);
    }

    #[test]
    fn polynomial_examples() {
        let pm = bhattacharya_polynomial(&m(), &m()).unwrap();
        assert_eq!(pm, poly([1, 1, 2, 1, 1]));
        for a in 0..6u64 {
            for b in 0..6u64 {
                assert_eq!(pm.evaluate(a, b).unwrap() as u64, (a + b) * (a + b + 1) / 2);
            }
        }
        let p = bhattacharya_polynomial(&three(), &m()).unwrap();
        assert_eq!(p, poly([6, 1, 4, 4, 1]));
        assert_eq!(p.to_string(), "3m^2 + 1/2n^2 + 2mn + 2m + 1/2n");
        assert_eq!(p.evaluate(1, 0).unwrap(), colength(&three()).unwrap());
        assert_eq!(p.evaluate(1, 1).unwrap(), 8);
    }

    #[test]
    fn display_edge_cases() {
        assert_eq!(poly([0, 0, 0, 0, 0]).to_string(), "0");
        assert_eq!(poly([2, 0, -2, 0, 3]).to_string(), "m^2 - mn + 3/2n");
        assert_eq!(poly([-1, 0, 0, 0, 0]).to_string(), "-1/2m^2");
    }

    #[test]
    fn odd_evaluation_is_inconsistent() {
        assert!(matches!(poly([1, 0, 0, 0, 0]).evaluate(1, 0), Err(Error::Inconsistent(_))));
    }

    #[test]
    fn mixed() {
        assert_eq!(mixed_multiplicities(&m(), &m()).unwrap(), MixedMultiplicities { e20: 1, e11: 1, e02: 1 });
        assert_eq!(mixed_multiplicities(&three(), &m()).unwrap(), MixedMultiplicities { e20: 6, e11: 2, e02: 1 });
        let j = complete(&[(2, 0), (0, 5)]);
        assert_eq!(
            mixed_multiplicities(&three(), &j).unwrap().e11,
            mixed_multiplicities(&j, &three()).unwrap().e11
        );
        // Lipman: e11 = l(R/IJ) - l(R/I) - l(R/J)
        let e11 = mixed_multiplicities(&three(), &j).unwrap().e11;
        let lij = colength(&three().product(&j).unwrap()).unwrap();
        assert_eq!(e11, lij - colength(&three()).unwrap() - colength(&j).unwrap());
    }

    #[test]
    fn verma_matches() {
        assert_eq!(verma_polynomial(&m(), &m()).unwrap(), bhattacharya_polynomial(&m(), &m()).unwrap());
        assert_eq!(verma_polynomial(&three(), &m()).unwrap(), bhattacharya_polynomial(&three(), &m()).unwrap());
    }

    #[test]
    fn maximal_ideal_specialization() {
        assert_eq!(with_maximal_ideal(&m()).unwrap(), poly([1, 1, 2, 1, 1]));
        let p = with_maximal_ideal(&three()).unwrap();
        assert_eq!(p.cross.doubled(), 4);
        assert_eq!(p, bhattacharya_polynomial(&three(), &m()).unwrap());
        let q = with_maximal_ideal(&complete(&[(2, 0), (0, 3)])).unwrap();
        assert_eq!(q.to_string(), "3m^2 + 1/2n^2 + 2mn + 2m + 1/2n");
    }

    #[test]
    fn hilbert_examples() {
        for k in 0..6 {
            assert_eq!(hilbert_function(&m(), k).unwrap(), k as i64 + 1);
        }
        assert_eq!(hilbert_function(&three(), 0).unwrap(), 5);
        assert_eq!(hilbert_function(&three(), 2).unwrap(), 17);
        let c2 = colength(&three().power(2).unwrap()).unwrap();
        let c3 = colength(&three().power(3).unwrap()).unwrap();
        assert_eq!(c3 - c2, 17);
    }

    #[test]
    fn fiber_and_generators() {
        for k in 0..5 {
            assert_eq!(fiber_function(&m(), k).unwrap(), k as i64 + 1);
        }
        assert_eq!(fiber_function(&three(), 1).unwrap(), 3);
        assert_eq!(fiber_function(&complete(&[(2, 0), (0, 3)]), 1).unwrap(), 3);
        assert_eq!(min_generators(&m()).unwrap(), 2);
        assert_eq!(min_generators(&complete(&[(4, 0), (0, 4)])).unwrap(), 5);
        assert_eq!(min_generators(&three()).unwrap(), 3);
    }

    #[test]
    fn general_j() {
        let strict = CompletenessPolicy::Strict;
        let principal = MonomialIdeal::normalize([(2, 1).into()]).unwrap();
        for k in 0..4 {
            assert_eq!(
                general_j_step(&three(), &principal, k, 3, strict).unwrap(),
                hilbert_function(&three(), k).unwrap()
            );
        }
        let shifted_m = MonomialIdeal::maximal().shift((1, 1).into()).unwrap();
        assert_eq!(general_j_step(&m(), &shifted_m, 1, 1, strict).unwrap(), 3);
        let expected = colength(&three().product(&m()).unwrap()).unwrap() - colength(&m()).unwrap();
        assert_eq!(general_j_step(&three(), &MonomialIdeal::maximal(), 0, 1, strict).unwrap(), expected);
    }

    #[test]
    fn general_j_respects_policy() {
        let j = MonomialIdeal::normalize([(3, 1).into(), (1, 4).into()]).unwrap();
        assert_eq!(general_j_step(&m(), &j, 1, 1, CompletenessPolicy::Strict), Err(Error::NotComplete));
        assert!(general_j_step(&m(), &j, 1, 1, CompletenessPolicy::Autoclose).is_ok());
    }

    #[test]
    fn polynomial_json() {
        let p = bhattacharya_polynomial(&three(), &m()).unwrap();
        let v = serde_json::to_value(p).unwrap();
        assert_eq!(v["doubled"], true);
        assert_eq!(v["m2"], 6);
        assert_eq!(v["rendered"], "3m^2 + 1/2n^2 + 2mn + 2m + 1/2n");
    }
}
