//! Brute-force lattice-point counts used to check the closed forms.
//!
//! Nothing here touches the Newton boundary code, the factorization or
//! the length formulas. The only shared pieces are [`LatticePoint`] and the
//! generator sumset [`MonomialIdeal::product`]. The region above the lower
//! hull of the generators is rebuilt locally and membership is a plain
//! conjunction of half-plane tests.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice_geom::{LatticePoint, LatticePolygon};
use crate::monomial_ideal::MonomialIdeal;

/// The Newton polyhedron of an m-primary monomial ideal intersected with
/// the first quadrant, as a list of half-planes `d·u + c·v >= rhs`.
#[derive(Debug, Clone)]
pub struct NewtonRegion {
    half_planes: Vec<(i128, i128, i128)>,
    a: i64,
    b: i64,
}

impl NewtonRegion {
    pub fn new(ideal: &MonomialIdeal) -> Result<Self> {
        let gens = ideal.generators();
        let (first, last) = (gens[0], gens[gens.len() - 1]);
        if first.u != 0 || last.v != 0 {
            return Err(Error::NotMPrimary(format!("{ideal}: the oracle needs pure powers of x and y")));
        }
        // lower hull by monotone chain; generators are sorted by u already
        let mut hull: Vec<LatticePoint> = Vec::new();
        for &p in gens {
            while hull.len() >= 2 {
                let (o, a) = (hull[hull.len() - 2], hull[hull.len() - 1]);
                let turn = (a.u as i128 - o.u as i128) * (p.v as i128 - o.v as i128)
                    - (a.v as i128 - o.v as i128) * (p.u as i128 - o.u as i128);
                if turn <= 0 {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(p);
        }
        let half_planes = hull
            .windows(2)
            .map(|w| {
                let c = w[1].u as i128 - w[0].u as i128;
                let d = w[0].v as i128 - w[1].v as i128;
                (c, d, d * w[0].u as i128 + c * w[0].v as i128)
            })
            .collect();
        Ok(NewtonRegion { half_planes, a: last.u, b: first.v })
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        p.u >= 0
            && p.v >= 0
            && self
                .half_planes
                .iter()
                .all(|&(c, d, rhs)| d * p.u as i128 + c * p.v as i128 >= rhs)
    }

    /// Lattice points of `[0, a) × [0, b)` outside the region.
    pub fn complement_count(&self) -> u64 {
        (0..self.a)
            .into_par_iter()
            .map(|u| (0..self.b).filter(|&v| !self.contains(LatticePoint::new(u, v))).count() as u64)
            .sum()
    }
}

/// Number of monomials outside the integral closure of `ideal`. For a
/// complete ideal this is its colength. The unit ideal gives 0.
pub fn brute_colength(ideal: &MonomialIdeal) -> Result<u64> {
    if ideal.is_unit() {
        return Ok(0);
    }
    Ok(NewtonRegion::new(ideal)?.complement_count())
}

/// Brute-force values of `ℓ(R/I^m J^n)` on a grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColengthTable {
    pub max_m: u32,
    pub max_n: u32,
    /// `values[m][n]`
    pub values: Vec<Vec<u64>>,
}

impl ColengthTable {
    pub fn get(&self, m: u32, n: u32) -> u64 {
        self.values[m as usize][n as usize]
    }
}

impl fmt::Display for ColengthTable {
    /// Aligned columns: one row per `m`, one column per `n`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .values
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1)
            .max(format!("n={}", self.max_n).len());
        let label = format!("m={}", self.max_m).len();
        write!(f, "{:label$}", "")?;
        for n in 0..=self.max_n {
            write!(f, " {:>width$}", format!("n={n}"))?;
        }
        writeln!(f)?;
        for (m, row) in self.values.iter().enumerate() {
            write!(f, "{:<label$}", format!("m={m}"))?;
            for v in row {
                write!(f, " {v:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// `ℓ(R/I^m J^n)` for `0 <= m <= max_m`, `0 <= n <= max_n`, by counting
/// lattice points under the Newton polyhedron of each product ideal.
///
/// Products are plain generator sumsets. Counting against the Newton
/// polyhedron gives the colength of the closure, so each product is
/// effectively closed once at the end.
pub fn brute_table(i: &MonomialIdeal, j: &MonomialIdeal, max_m: u32, max_n: u32) -> Result<ColengthTable> {
    for ideal in [i, j] {
        if !ideal.is_unit() {
            NewtonRegion::new(ideal)?;
        }
    }
    let i_pows = powers(i, max_m)?;
    let j_pows = powers(j, max_n)?;
    let cells: Vec<(usize, usize)> = (0..=max_m as usize)
        .flat_map(|m| (0..=max_n as usize).map(move |n| (m, n)))
        .collect();
    let counts = cells
        .par_iter()
        .map(|&(m, n)| brute_colength(&i_pows[m].product(&j_pows[n])?))
        .collect::<Result<Vec<u64>>>()?;
    let values = counts.chunks(max_n as usize + 1).map(<[u64]>::to_vec).collect();
    Ok(ColengthTable { max_m, max_n, values })
}

fn powers(ideal: &MonomialIdeal, max: u32) -> Result<Vec<MonomialIdeal>> {
    let mut out = vec![MonomialIdeal::unit()];
    for k in 1..=max as usize {
        out.push(out[k - 1].product(ideal)?);
    }
    Ok(out)
}

/// `ℓ(big / small)` for `small ⊆ big`, as a difference of brute colengths.
pub fn brute_monomial_count_between(big: &MonomialIdeal, small: &MonomialIdeal) -> Result<u64> {
    let big_count = brute_colength(big)?;
    let small_count = brute_colength(small)?;
    if !big.is_unit() {
        let region = NewtonRegion::new(big)?;
        if let Some(g) = small.generators().iter().find(|&&g| !region.contains(g)) {
            return Err(Error::NotContained { u: g.u, v: g.v });
        }
    }
    small_count
        .checked_sub(big_count)
        .ok_or_else(|| Error::Inconsistent("containment holds but colengths decrease".into()))
}

/// Interior and boundary lattice points of a polygon, by testing every
/// point of its bounding box (crossing-number test with exact integers).
pub fn polygon_point_census(poly: &LatticePolygon) -> (u64, u64) {
    let vs = poly.vertices();
    let (umin, umax) = (vs.iter().map(|p| p.u).min().unwrap_or(0), vs.iter().map(|p| p.u).max().unwrap_or(0));
    let (vmin, vmax) = (vs.iter().map(|p| p.v).min().unwrap_or(0), vs.iter().map(|p| p.v).max().unwrap_or(0));
    let n = vs.len();
    let (mut interior, mut boundary) = (0, 0);
    for u in umin..=umax {
        for v in vmin..=vmax {
            let mut on_edge = false;
            let mut crossings = 0;
            for k in 0..n {
                let (a, b) = (vs[k], vs[(k + 1) % n]);
                let cross = (b.u - a.u) as i128 * (v - a.v) as i128 - (b.v - a.v) as i128 * (u - a.u) as i128;
                if cross == 0 && a.u.min(b.u) <= u && u <= a.u.max(b.u) && a.v.min(b.v) <= v && v <= a.v.max(b.v) {
                    on_edge = true;
                    break;
                }
                let upward = a.v <= v && b.v > v;
                let downward = b.v <= v && a.v > v;
                if (upward && cross > 0) || (downward && cross < 0) {
                    crossings += 1;
                }
            }
            if on_edge {
                boundary += 1;
            } else if crossings % 2 == 1 {
                interior += 1;
            }
        }
    }
    (interior, boundary)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(pts: &[(i64, i64)]) -> MonomialIdeal {
        MonomialIdeal::normalize(pts.iter().map(|&p| p.into())).unwrap()
    }

    #[test]
    fn brute_colength_examples() {
        assert_eq!(brute_colength(&MonomialIdeal::maximal()).unwrap(), 1);
        assert_eq!(brute_colength(&ideal(&[(2, 0), (1, 2), (0, 3)])).unwrap(), 5);
        // incomplete input counts the closure's complement
        assert_eq!(brute_colength(&ideal(&[(2, 0), (0, 3)])).unwrap(), 5);
        assert_eq!(brute_colength(&ideal(&[(3, 0), (1, 1), (0, 3)])).unwrap(), 5);
        assert_eq!(brute_colength(&MonomialIdeal::unit()).unwrap(), 0);
        assert!(matches!(brute_colength(&ideal(&[(1, 1)])), Err(Error::NotMPrimary(_))));
    }

    #[test]
    fn table_examples() {
        let m = MonomialIdeal::maximal();
        let t = brute_table(&m, &m, 3, 3).unwrap();
        for a in 0..=3u32 {
            for b in 0..=3u32 {
                assert_eq!(t.get(a, b), u64::from((a + b) * (a + b + 1) / 2));
            }
        }
        let i = ideal(&[(3, 0), (1, 1), (0, 3)]);
        let t = brute_table(&i, &m, 3, 3).unwrap();
        assert_eq!(t.get(1, 1), 8);
        // 3m² + n²/2 + 2mn + 2m + n/2 on the whole grid
        for a in 0..=3u64 {
            for b in 0..=3u64 {
                let doubled = 6 * a * a + b * b + 4 * a * b + 4 * a + b;
                assert_eq!(t.get(a as u32, b as u32), doubled / 2);
            }
        }
        let raw = ideal(&[(2, 0), (0, 3)]);
        let t = brute_table(&raw, &m, 1, 0).unwrap();
        assert_eq!(t.get(1, 0), brute_colength(&raw.integral_closure().unwrap()).unwrap());
    }

    #[test]
    fn between_examples() {
        let m = MonomialIdeal::maximal();
        let i = ideal(&[(3, 0), (1, 1), (0, 3)]);
        assert_eq!(brute_monomial_count_between(&i, &i).unwrap(), 0);
        assert_eq!(brute_monomial_count_between(&m, &m.power(2).unwrap()).unwrap(), 2);
        assert_eq!(brute_monomial_count_between(&i, &i.product(&m).unwrap()).unwrap(), 3);
        assert_eq!(
            brute_monomial_count_between(&i, &m),
            Err(Error::NotContained { u: 0, v: 1 })
        );
    }

    #[test]
    fn table_text_alignment() {
        let m = MonomialIdeal::maximal();
        let text = brute_table(&m, &m, 1, 2).unwrap().to_string();
        assert_eq!(text, "    n=0 n=1 n=2\nm=0   0   1   3\nm=1   1   3   6\n");
    }

    #[test]
    fn census_small_polygons() {
        let tri = LatticePolygon::new([(0, 0).into(), (2, 0).into(), (0, 3).into()]).unwrap();
        assert_eq!(polygon_point_census(&tri), (1, 6));
        let l_shape = LatticePolygon::new(
            [(0, 0), (4, 0), (4, 2), (2, 2), (2, 4), (0, 4)].iter().map(|&p| p.into()),
        )
        .unwrap();
        // 5x5 grid minus the 2x2 notch corner (3..=4, 3..=4); boundary points 16
        assert_eq!(polygon_point_census(&l_shape), (5, 16));
    }
}
