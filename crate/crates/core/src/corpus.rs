//! Seeded random inputs for verification runs.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::Result;
use crate::lattice_geom::{LatticePoint, LatticePolygon};
use crate::monomial_ideal::{CompleteIdeal, MonomialIdeal};

/// A random complete m-primary ideal with `a_I, b_I <= max_exponent`:
/// the closure of `(x^a, y^b)` plus a few random interior monomials.
pub fn random_complete_ideal<R: Rng + ?Sized>(rng: &mut R, max_exponent: i64) -> Result<CompleteIdeal> {
    let a = rng.gen_range(1..=max_exponent);
    let b = rng.gen_range(1..=max_exponent);
    let mut gens = vec![LatticePoint::new(a, 0), LatticePoint::new(0, b)];
    let extra = rng.gen_range(0..=6);
    for _ in 0..extra {
        let p = LatticePoint::new(rng.gen_range(0..a), rng.gen_range(0..b));
        if p != LatticePoint::ORIGIN {
            gens.push(p);
        }
    }
    let closure = MonomialIdeal::normalize(gens)?.integral_closure()?;
    CompleteIdeal::new(closure)
}

/// A random convex lattice polygon with vertices in `[-range, range]²`.
pub fn random_convex_polygon<R: Rng + ?Sized>(rng: &mut R, range: i64) -> LatticePolygon {
    loop {
        let count = rng.gen_range(3..=8);
        let pts: Vec<LatticePoint> = (0..count)
            .map(|_| LatticePoint::new(rng.gen_range(-range..=range), rng.gen_range(-range..=range)))
            .collect();
        if let Ok(p) = LatticePolygon::convex_hull(pts) {
            if !p.is_point() {
                return p;
            }
        }
    }
}

/// A random simple (generally non-convex) lattice polygon, star-shaped
/// around an interior lattice point, with vertices in `[-range, range]²`.
pub fn random_simple_polygon<R: Rng + ?Sized>(rng: &mut R, range: i64) -> LatticePolygon {
    loop {
        let center = LatticePoint::new(rng.gen_range(-range / 2..=range / 2), rng.gen_range(-range / 2..=range / 2));
        let count = rng.gen_range(3..=12);
        let mut pts: Vec<(i64, i64)> = (0..count)
            .map(|_| (rng.gen_range(-range..=range) - center.u, rng.gen_range(-range..=range) - center.v))
            .filter(|&(du, dv)| (du, dv) != (0, 0))
            .collect();
        pts.shuffle(rng);
        pts.sort_by(|&a, &b| angle_order(a, b));
        // one vertex per direction
        pts.dedup_by(|b, a| angle_order(*a, *b) == std::cmp::Ordering::Equal);
        let n = pts.len();
        if n < 3 {
            continue;
        }
        // every angular gap below pi keeps the center strictly inside
        let star = (0..n).all(|i| {
            let (a, b) = (pts[i], pts[(i + 1) % n]);
            a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128 > 0
        });
        if !star {
            continue;
        }
        let vertices = pts.iter().map(|&(du, dv)| LatticePoint::new(du + center.u, dv + center.v));
        if let Ok(p) = LatticePolygon::new(vertices) {
            return p;
        }
    }
}

fn angle_order(a: (i64, i64), b: (i64, i64)) -> std::cmp::Ordering {
    let half = |p: (i64, i64)| u8::from(!(p.1 > 0 || (p.1 == 0 && p.0 > 0)));
    half(a)
        .cmp(&half(b))
        .then_with(|| 0.cmp(&(a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128)))
}
