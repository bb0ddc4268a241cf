//! Exact planar lattice geometry.
//!
//! Every area in this module is carried doubled, so all quantities are
//! integers. Cross products are evaluated in `i128` with checked arithmetic;
//! anything that does not fit surfaces as [`Error::Overflow`].

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point of the integer lattice. `u` is the x-exponent, `v` the y-exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct LatticePoint {
    pub u: i64,
    pub v: i64,
}

impl LatticePoint {
    pub const ORIGIN: LatticePoint = LatticePoint { u: 0, v: 0 };

    pub const fn new(u: i64, v: i64) -> Self {
        LatticePoint { u, v }
    }

    pub fn checked_add(self, other: LatticePoint) -> Result<LatticePoint> {
        Ok(LatticePoint {
            u: self.u.checked_add(other.u).ok_or(Error::Overflow)?,
            v: self.v.checked_add(other.v).ok_or(Error::Overflow)?,
        })
    }

    pub fn checked_sub(self, other: LatticePoint) -> Result<LatticePoint> {
        Ok(LatticePoint {
            u: self.u.checked_sub(other.u).ok_or(Error::Overflow)?,
            v: self.v.checked_sub(other.v).ok_or(Error::Overflow)?,
        })
    }

    pub fn checked_scale(self, k: i64) -> Result<LatticePoint> {
        Ok(LatticePoint {
            u: self.u.checked_mul(k).ok_or(Error::Overflow)?,
            v: self.v.checked_mul(k).ok_or(Error::Overflow)?,
        })
    }

    /// Componentwise `<=`, i.e. the monomial `self` divides `other`.
    pub fn divides(self, other: LatticePoint) -> bool {
        self.u <= other.u && self.v <= other.v
    }
}

impl From<[i64; 2]> for LatticePoint {
    fn from([u, v]: [i64; 2]) -> Self {
        LatticePoint { u, v }
    }
}

impl From<LatticePoint> for [i64; 2] {
    fn from(p: LatticePoint) -> Self {
        [p.u, p.v]
    }
}

impl From<(i64, i64)> for LatticePoint {
    fn from((u, v): (i64, i64)) -> Self {
        LatticePoint { u, v }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// Twice the Euclidean area of a lattice polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DoubledArea(pub i64);

impl DoubledArea {
    pub fn value(self) -> i64 {
        self.0
    }
}

type Vec2 = (i128, i128);

fn delta(from: LatticePoint, to: LatticePoint) -> Vec2 {
    (to.u as i128 - from.u as i128, to.v as i128 - from.v as i128)
}

pub(crate) fn cross(a: Vec2, b: Vec2) -> Result<i128> {
    let lhs = a.0.checked_mul(b.1).ok_or(Error::Overflow)?;
    let rhs = a.1.checked_mul(b.0).ok_or(Error::Overflow)?;
    lhs.checked_sub(rhs).ok_or(Error::Overflow)
}

/// Orientation of the turn `a -> b -> c`: positive for a left turn.
pub(crate) fn turn(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> Result<i128> {
    cross(delta(a, b), delta(b, c))
}

fn to_i64(x: i128) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow)
}

/// Number of lattice points on the closed segment `p1 p2`.
pub fn segment_lattice_count(p1: LatticePoint, p2: LatticePoint) -> Result<i64> {
    let (du, dv) = delta(p1, p2);
    let g = du.abs().gcd(&dv.abs());
    to_i64(g + 1)
}

/// A lattice polygon, stored counterclockwise with no repeated or collinear
/// consecutive vertices.
///
/// A single point is also representable. It exists so that Minkowski sums
/// with a point (translations) and zero dilations have a value; every area
/// or count operation rejects it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticePolygon {
    vertices: Vec<LatticePoint>,
    convex: bool,
}

impl LatticePolygon {
    /// Builds a simple polygon from its vertex cycle in either orientation.
    ///
    /// Repeated and collinear vertices are dropped. Simplicity of the cycle
    /// is the caller's responsibility; it is not checked.
    pub fn new(vertices: impl IntoIterator<Item = LatticePoint>) -> Result<Self> {
        let mut pts: Vec<LatticePoint> = Vec::new();
        for p in vertices {
            if pts.last() != Some(&p) {
                pts.push(p);
            }
        }
        while pts.len() > 1 && pts.first() == pts.last() {
            pts.pop();
        }
        prune_collinear(&mut pts)?;
        if pts.len() < 3 {
            return Err(Error::DegeneratePolygon("fewer than three non-collinear vertices"));
        }
        let area = signed_doubled_area(&pts)?;
        if area == 0 {
            return Err(Error::DegeneratePolygon("zero area"));
        }
        if area < 0 {
            pts.reverse();
        }
        let mut convex = true;
        let n = pts.len();
        for i in 0..n {
            if turn(pts[i], pts[(i + 1) % n], pts[(i + 2) % n])? < 0 {
                convex = false;
                break;
            }
        }
        Ok(LatticePolygon { vertices: pts, convex })
    }

    /// Builds a polygon that must be convex.
    pub fn new_convex(vertices: impl IntoIterator<Item = LatticePoint>) -> Result<Self> {
        let poly = Self::new(vertices)?;
        if !poly.convex {
            return Err(Error::NonConvex);
        }
        Ok(poly)
    }

    /// The degenerate one-point polygon `{p}`.
    pub fn point(p: LatticePoint) -> Self {
        LatticePolygon { vertices: vec![p], convex: true }
    }

    /// Convex hull of a point set (monotone chain).
    ///
    /// A hull consisting of a single point yields [`LatticePolygon::point`];
    /// a hull that is a segment is an error.
    pub fn convex_hull(points: impl IntoIterator<Item = LatticePoint>) -> Result<Self> {
        let mut pts: Vec<LatticePoint> = points.into_iter().collect();
        pts.sort_unstable();
        pts.dedup();
        match pts.len() {
            0 => return Err(Error::DegeneratePolygon("empty point set")),
            1 => return Ok(Self::point(pts[0])),
            _ => {}
        }
        let mut hull: Vec<LatticePoint> = Vec::with_capacity(pts.len() + 1);
        for pass in 0..2 {
            let start = hull.len();
            let iter: Box<dyn Iterator<Item = &LatticePoint>> = if pass == 0 {
                Box::new(pts.iter())
            } else {
                Box::new(pts.iter().rev())
            };
            for &p in iter {
                while hull.len() >= start + 2 && turn(hull[hull.len() - 2], hull[hull.len() - 1], p)? <= 0 {
                    hull.pop();
                }
                hull.push(p);
            }
            hull.pop();
        }
        Self::new_convex(hull)
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn is_convex(&self) -> bool {
        self.convex
    }

    pub fn is_point(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn translate(&self, t: LatticePoint) -> Result<Self> {
        let vertices = self
            .vertices
            .iter()
            .map(|p| p.checked_add(t))
            .collect::<Result<Vec<_>>>()?;
        Ok(LatticePolygon { vertices, convex: self.convex })
    }

    /// Dilation `k·P` for `k >= 0`. `0·P` is the origin.
    pub fn scale(&self, k: i64) -> Result<Self> {
        match k.cmp(&0) {
            Ordering::Less => Err(Error::DegeneratePolygon("negative dilation factor")),
            Ordering::Equal => Ok(Self::point(LatticePoint::ORIGIN)),
            Ordering::Greater => {
                let vertices = self
                    .vertices
                    .iter()
                    .map(|p| p.checked_scale(k))
                    .collect::<Result<Vec<_>>>()?;
                Ok(LatticePolygon { vertices, convex: self.convex })
            }
        }
    }

    fn edges(&self) -> impl Iterator<Item = (LatticePoint, LatticePoint)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    fn require_area(&self) -> Result<()> {
        if self.is_point() {
            Err(Error::DegeneratePolygon("a single point has no area"))
        } else {
            Ok(())
        }
    }
}

fn prune_collinear(pts: &mut Vec<LatticePoint>) -> Result<()> {
    loop {
        let n = pts.len();
        if n < 3 {
            return Ok(());
        }
        let mut drop = None;
        for i in 0..n {
            let prev = pts[(i + n - 1) % n];
            let next = pts[(i + 1) % n];
            if turn(prev, pts[i], next)? == 0 {
                drop = Some(i);
                break;
            }
        }
        match drop {
            Some(i) => {
                pts.remove(i);
            }
            None => return Ok(()),
        }
    }
}

fn signed_doubled_area(pts: &[LatticePoint]) -> Result<i128> {
    let n = pts.len();
    let mut sum: i128 = 0;
    for i in 0..n {
        let a = pts[i];
        let b = pts[(i + 1) % n];
        let term = cross((a.u as i128, a.v as i128), (b.u as i128, b.v as i128))?;
        sum = sum.checked_add(term).ok_or(Error::Overflow)?;
    }
    Ok(sum)
}

/// Twice the area of `poly` (shoelace formula).
pub fn doubled_area(poly: &LatticePolygon) -> Result<DoubledArea> {
    poly.require_area()?;
    Ok(DoubledArea(to_i64(signed_doubled_area(&poly.vertices)?.abs())?))
}

/// Number of lattice points on the boundary of `poly`.
pub fn boundary_lattice_count(poly: &LatticePolygon) -> Result<i64> {
    poly.require_area()?;
    poly.edges().try_fold(0i64, |acc, (a, b)| {
        acc.checked_add(segment_lattice_count(a, b)? - 1).ok_or(Error::Overflow)
    })
}

/// Number of lattice points strictly inside `poly`, from Pick's theorem.
pub fn interior_lattice_count(poly: &LatticePolygon) -> Result<i64> {
    let area = doubled_area(poly)?.0 as i128;
    let boundary = boundary_lattice_count(poly)? as i128;
    let twice_interior = area - boundary + 2;
    if twice_interior.is_odd() || twice_interior < 0 {
        return Err(Error::Inconsistent(format!(
            "Pick's theorem yields a non-integral interior count (2A = {area}, b = {boundary})"
        )));
    }
    to_i64(twice_interior / 2)
}

/// Upper half (angle in `[0, pi)`) gets 0, lower half gets 1.
fn half(e: Vec2) -> u8 {
    if e.1 > 0 || (e.1 == 0 && e.0 > 0) {
        0
    } else {
        1
    }
}

fn angle_cmp(a: Vec2, b: Vec2) -> Result<Ordering> {
    let (ha, hb) = (half(a), half(b));
    if ha != hb {
        return Ok(ha.cmp(&hb));
    }
    Ok(0.cmp(&cross(a, b)?))
}

/// Edge vectors of a convex polygon, starting from its lowest (then leftmost)
/// vertex, together with that vertex.
fn edge_sequence(poly: &LatticePolygon) -> (LatticePoint, Vec<Vec2>) {
    let n = poly.vertices.len();
    let start = (0..n)
        .min_by_key(|&i| (poly.vertices[i].v, poly.vertices[i].u))
        .unwrap_or(0);
    let edges = (0..n)
        .map(|k| delta(poly.vertices[(start + k) % n], poly.vertices[(start + k + 1) % n]))
        .collect();
    (poly.vertices[start], edges)
}

/// Minkowski sum of two convex polygons by merging their edge sequences in
/// angular order. Edges of equal direction are fused.
pub fn minkowski_sum(p1: &LatticePolygon, p2: &LatticePolygon) -> Result<LatticePolygon> {
    if !p1.convex || !p2.convex {
        return Err(Error::NonConvex);
    }
    if p1.is_point() {
        return p2.translate(p1.vertices[0]);
    }
    if p2.is_point() {
        return p1.translate(p2.vertices[0]);
    }
    let (s1, e1) = edge_sequence(p1);
    let (s2, e2) = edge_sequence(p2);
    let mut merged: Vec<Vec2> = Vec::with_capacity(e1.len() + e2.len());
    let (mut i, mut j) = (0, 0);
    while i < e1.len() || j < e2.len() {
        let next = if i == e1.len() {
            j += 1;
            e2[j - 1]
        } else if j == e2.len() {
            i += 1;
            e1[i - 1]
        } else {
            match angle_cmp(e1[i], e2[j])? {
                Ordering::Less => {
                    i += 1;
                    e1[i - 1]
                }
                Ordering::Greater => {
                    j += 1;
                    e2[j - 1]
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                    (e1[i - 1].0 + e2[j - 1].0, e1[i - 1].1 + e2[j - 1].1)
                }
            }
        };
        match merged.last_mut() {
            Some(last) if angle_cmp(*last, next)? == Ordering::Equal => {
                last.0 += next.0;
                last.1 += next.1;
            }
            _ => merged.push(next),
        }
    }
    let mut cur = s1.checked_add(s2)?;
    let mut vertices = Vec::with_capacity(merged.len());
    for (du, dv) in merged {
        vertices.push(cur);
        cur = cur.checked_add(LatticePoint::new(to_i64(du)?, to_i64(dv)?))?;
    }
    LatticePolygon::new_convex(vertices)
}

/// Doubled mixed area `2·(V(P1 + P2) - V(P1) - V(P2))`.
pub fn mixed_area(p1: &LatticePolygon, p2: &LatticePolygon) -> Result<i64> {
    let sum = minkowski_sum(p1, p2)?;
    let total = doubled_area(&sum)?.0 as i128;
    let a1 = doubled_area(p1)?.0 as i128;
    let a2 = doubled_area(p2)?.0 as i128;
    to_i64(total - a1 - a2)
}
