//! Monomial ideals of `k[x, y]` as antichains of exponent vectors.
//!
//! An ideal is stored as its minimal generators sorted by `u` ascending,
//! which forces `v` descending. The staircase itself is never built.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice_geom::{segment_lattice_count, turn, LatticePoint, LatticePolygon};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct MonomialIdeal {
    gens: Vec<LatticePoint>,
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<LatticePoint>::deserialize(de)?;
        MonomialIdeal::normalize(raw).map_err(serde::de::Error::custom)
    }
}

impl MonomialIdeal {
    /// Reduces a generating set to its unique minimal antichain.
    pub fn normalize(raw: impl IntoIterator<Item = LatticePoint>) -> Result<Self> {
        let mut pts: Vec<LatticePoint> = raw.into_iter().collect();
        if pts.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        if let Some(p) = pts.iter().find(|p| p.u < 0 || p.v < 0) {
            return Err(Error::NegativeExponent { u: p.u, v: p.v });
        }
        pts.sort_unstable();
        let mut gens: Vec<LatticePoint> = Vec::with_capacity(pts.len());
        for p in pts {
            // sorted by (u, v): p is redundant iff an earlier point has v <= p.v
            if gens.last().map_or(true, |last| p.v < last.v) {
                gens.push(p);
            }
        }
        Ok(MonomialIdeal { gens })
    }

    /// The unit ideal `(1)`.
    pub fn unit() -> Self {
        MonomialIdeal { gens: vec![LatticePoint::ORIGIN] }
    }

    /// The maximal ideal `(x, y)`.
    pub fn maximal() -> Self {
        MonomialIdeal {
            gens: vec![LatticePoint::new(0, 1), LatticePoint::new(1, 0)],
        }
    }

    /// Minimal generators, `u` ascending.
    pub fn generators(&self) -> &[LatticePoint] {
        &self.gens
    }

    /// Number of minimal generators.
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens == [LatticePoint::ORIGIN]
    }

    /// Whether the monomial with exponent `p` lies in the ideal.
    pub fn contains(&self, p: LatticePoint) -> bool {
        self.gens.iter().any(|g| g.divides(p))
    }

    /// True iff the ideal contains a pure power of `x` and of `y`.
    pub fn is_m_primary(&self) -> bool {
        self.gens.first().is_some_and(|g| g.u == 0) && self.gens.last().is_some_and(|g| g.v == 0)
    }

    fn require_m_primary(&self) -> Result<()> {
        if self.is_m_primary() {
            return Ok(());
        }
        let missing = match (self.gens[0].u == 0, self.gens[self.gens.len() - 1].v == 0) {
            (false, false) => "no pure power of x or of y",
            (false, true) => "no pure power of y",
            _ => "no pure power of x",
        };
        Err(Error::NotMPrimary(format!("{self}: {missing}")))
    }

    /// Vertices of the compact faces of the Newton polyhedron, from `(0, b)`
    /// to `(a, 0)`.
    ///
    /// Gift wrapping over the generators: from the current vertex the next
    /// one is the generator to its right of least slope, farthest on ties.
    pub fn newton_boundary(&self) -> Result<NewtonBoundary> {
        self.require_m_primary()?;
        let gens = &self.gens;
        let mut vertices = vec![gens[0]];
        let mut cur = 0;
        while cur + 1 < gens.len() {
            let mut best = cur + 1;
            for cand in cur + 2..gens.len() {
                // cand is at least as steep as best iff it is not left of cur->best
                if turn(gens[cur], gens[best], gens[cand])? <= 0 {
                    best = cand;
                }
            }
            vertices.push(gens[best]);
            cur = best;
        }
        Ok(NewtonBoundary { vertices })
    }

    /// Integral closure: all monomials on or above the Newton boundary.
    ///
    /// For each column `u` in `0..=a` the lowest admissible `v` is the
    /// largest ceiling over the edge inequalities `d·u + c·v >= d·a_i + c·b_i`.
    pub fn integral_closure(&self) -> Result<MonomialIdeal> {
        let boundary = self.newton_boundary()?;
        let half_planes = boundary.half_planes()?;
        let mut gens = Vec::with_capacity(boundary.a() as usize + 1);
        for u in 0..=boundary.a() {
            let mut v_min: i64 = 0;
            for &(c, d, rhs) in &half_planes {
                let need = rhs.checked_sub(d.checked_mul(u).ok_or(Error::Overflow)?).ok_or(Error::Overflow)?;
                v_min = v_min.max(div_ceil(need, c));
            }
            gens.push(LatticePoint::new(u, v_min));
        }
        MonomialIdeal::normalize(gens)
    }

    pub fn is_complete(&self) -> Result<bool> {
        Ok(self.integral_closure()? == *self)
    }

    /// Product ideal: the antichain of all pairwise generator sums.
    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        let mut sums = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                sums.push(g.checked_add(*h)?);
            }
        }
        MonomialIdeal::normalize(sums)
    }

    /// `self^k` by repeated multiplication; `self^0` is the unit ideal.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit();
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Splits `J = f · J'` with `f` the componentwise minimum of the
    /// generators. `J'` touches both axes and so is m-primary.
    pub fn strip_monomial_factor(&self) -> Result<(LatticePoint, MonomialIdeal)> {
        let f = LatticePoint::new(
            self.gens.iter().map(|g| g.u).min().ok_or(Error::EmptyIdeal)?,
            self.gens.iter().map(|g| g.v).min().ok_or(Error::EmptyIdeal)?,
        );
        let shifted = MonomialIdeal::normalize(
            self.gens.iter().map(|g| g.checked_sub(f)).collect::<Result<Vec<_>>>()?,
        )?;
        if !shifted.is_m_primary() {
            return Err(Error::NotMPrimary(format!(
                "{shifted} after removing the monomial factor {f}"
            )));
        }
        Ok((f, shifted))
    }

    /// Multiplies every generator by the monomial `f`.
    pub fn shift(&self, f: LatticePoint) -> Result<MonomialIdeal> {
        MonomialIdeal::normalize(self.gens.iter().map(|g| g.checked_add(f)).collect::<Result<Vec<_>>>()?)
    }
}

fn div_ceil(num: i64, den: i64) -> i64 {
    num.div_euclid(den) + i64::from(num.rem_euclid(den) != 0)
}

impl fmt::Display for MonomialIdeal {
    /// Renders generators as `x^3, x*y, y^3`; the unit ideal is `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.gens.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", Monomial(*g))?;
        }
        Ok(())
    }
}

/// Display adapter for a single monomial.
pub struct Monomial(pub LatticePoint);

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn factor(var: char, e: i64) -> Option<String> {
            match e {
                0 => None,
                1 => Some(var.to_string()),
                _ => Some(format!("{var}^{e}")),
            }
        }
        let parts: Vec<String> = [factor('x', self.0.u), factor('y', self.0.v)].into_iter().flatten().collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// One edge of a Newton boundary: horizontal run `c`, vertical drop `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeData {
    pub c: i64,
    pub d: i64,
}

impl EdgeData {
    pub fn new(c: i64, d: i64) -> Result<Self> {
        if c < 1 || d < 1 {
            return Err(Error::InvalidEdge { c, d });
        }
        Ok(EdgeData { c, d })
    }
}

/// The compact part of the boundary of a Newton polyhedron.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NewtonBoundary {
    vertices: Vec<LatticePoint>,
}

impl NewtonBoundary {
    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    /// `a_I`, where the boundary meets the u-axis.
    pub fn a(&self) -> i64 {
        self.vertices[self.vertices.len() - 1].u
    }

    /// `b_I`, where the boundary meets the v-axis.
    pub fn b(&self) -> i64 {
        self.vertices[0].v
    }

    pub fn edges(&self) -> Vec<EdgeData> {
        self.vertices
            .windows(2)
            .map(|w| EdgeData { c: w[1].u - w[0].u, d: w[0].v - w[1].v })
            .collect()
    }

    /// `l_I`: lattice points on the boundary, summed segment by segment.
    pub fn lattice_count(&self) -> Result<i64> {
        self.vertices.windows(2).try_fold(1i64, |acc, w| {
            acc.checked_add(segment_lattice_count(w[0], w[1])? - 1).ok_or(Error::Overflow)
        })
    }

    /// `(c, d, rhs)` for every edge inequality `d·u + c·v >= rhs`.
    fn half_planes(&self) -> Result<Vec<(i64, i64, i64)>> {
        self.vertices
            .windows(2)
            .map(|w| {
                let (c, d) = (w[1].u - w[0].u, w[0].v - w[1].v);
                let rhs = d
                    .checked_mul(w[0].u)
                    .and_then(|x| c.checked_mul(w[0].v).and_then(|y| x.checked_add(y)))
                    .ok_or(Error::Overflow)?;
                Ok((c, d, rhs))
            })
            .collect()
    }

    /// The convex polygon cut off by the boundary inside the box
    /// `[0, a] × [0, b]`: the boundary chain closed through `(a, b)`.
    pub fn upper_polygon(&self) -> Result<LatticePolygon> {
        self.require_edges()?;
        let corner = LatticePoint::new(self.a(), self.b());
        LatticePolygon::new_convex(self.vertices.iter().copied().chain(std::iter::once(corner)))
    }

    /// The box `[0, a] × [0, b]`.
    pub fn bounding_rectangle(&self) -> Result<LatticePolygon> {
        self.require_edges()?;
        let (a, b) = (self.a(), self.b());
        LatticePolygon::new_convex([
            LatticePoint::new(0, 0),
            LatticePoint::new(a, 0),
            LatticePoint::new(a, b),
            LatticePoint::new(0, b),
        ])
    }

    /// The region between the axes and the boundary: the origin followed by
    /// the boundary chain. Not convex in general.
    pub fn lower_region(&self) -> Result<LatticePolygon> {
        self.require_edges()?;
        LatticePolygon::new(std::iter::once(LatticePoint::ORIGIN).chain(self.vertices.iter().copied()))
    }

    fn require_edges(&self) -> Result<()> {
        if self.vertices.len() < 2 {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }
}

/// What to do when an operation needing a complete ideal gets one that
/// is not.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CompletenessPolicy {
    /// Reject with [`Error::NotComplete`].
    #[default]
    Strict,
    /// Replace the ideal by its integral closure.
    Autoclose,
}

/// A proper m-primary complete monomial ideal, the input type for
/// factorization and every closed-form length formula.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct CompleteIdeal(MonomialIdeal);

/// Result of admitting an ideal under a [`CompletenessPolicy`].
#[derive(Debug, Clone)]
pub struct Admitted {
    pub ideal: CompleteIdeal,
    /// Set when the input was replaced by its closure.
    pub closed: bool,
}

impl CompleteIdeal {
    pub fn new(ideal: MonomialIdeal) -> Result<Self> {
        Ok(Self::admit(ideal, CompletenessPolicy::Strict)?.ideal)
    }

    pub fn admit(ideal: MonomialIdeal, policy: CompletenessPolicy) -> Result<Admitted> {
        if ideal.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let closure = ideal.integral_closure()?;
        if closure == ideal {
            return Ok(Admitted { ideal: CompleteIdeal(ideal), closed: false });
        }
        match policy {
            CompletenessPolicy::Strict => Err(Error::NotComplete),
            CompletenessPolicy::Autoclose => Ok(Admitted { ideal: CompleteIdeal(closure), closed: true }),
        }
    }

    pub fn maximal() -> Self {
        CompleteIdeal(MonomialIdeal::maximal())
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.0
    }

    pub fn into_inner(self) -> MonomialIdeal {
        self.0
    }

    pub fn newton_boundary(&self) -> NewtonBoundary {
        self.0.newton_boundary().expect("complete ideals are m-primary")
    }

    /// Products of complete ideals are complete.
    pub fn product(&self, other: &CompleteIdeal) -> Result<CompleteIdeal> {
        let prod = self.0.product(&other.0)?;
        debug_assert_eq!(prod.integral_closure().as_ref(), Ok(&prod));
        Ok(CompleteIdeal(prod))
    }

    /// `self^k` for `k >= 1`.
    pub fn power(&self, k: u32) -> Result<CompleteIdeal> {
        assert!(k >= 1, "the zeroth power is the unit ideal");
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for CompleteIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
