//! Zariski factorization of complete m-primary monomial ideals into block
//! ideals, read off the edges of the Newton boundary.
//!
//! An edge with run `c` and drop `d` contributes the block `(c, d) / g`
//! with multiplicity `g = gcd(c, d)`. Blocks are kept in strictly
//! decreasing slope order `q/p`, compared by cross-multiplication.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice_geom::LatticePoint;
use crate::monomial_ideal::{CompleteIdeal, EdgeData, MonomialIdeal, NewtonBoundary};

/// The integral closure of `(x^p, y^q)` with `gcd(p, q) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockIdeal {
    p: i64,
    q: i64,
}

impl BlockIdeal {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p < 1 || q < 1 || p.gcd(&q) != 1 {
            return Err(Error::InvalidBlock { p, q });
        }
        Ok(BlockIdeal { p, q })
    }

    pub fn p(self) -> i64 {
        self.p
    }

    pub fn q(self) -> i64 {
        self.q
    }

    /// Generators of the block ideal itself.
    pub fn ideal(self) -> Result<MonomialIdeal> {
        complete_intersection_closure(EdgeData { c: self.p, d: self.q })
    }
}

/// Compares slopes `d/c` of two edges (or `q/p` of blocks) exactly.
fn slope_cmp(a: EdgeData, b: EdgeData) -> Ordering {
    (a.d as i128 * b.c as i128).cmp(&(b.d as i128 * a.c as i128))
}

fn complete_intersection_closure(e: EdgeData) -> Result<MonomialIdeal> {
    MonomialIdeal::normalize([LatticePoint::new(e.c, 0), LatticePoint::new(0, e.d)])?.integral_closure()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockFactor {
    #[serde(flatten)]
    pub block: BlockIdeal,
    pub n: u32,
}

/// `I = C_1^{n_1} ··· C_r^{n_r}` with block slopes strictly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct BlockFactorization {
    factors: Vec<BlockFactor>,
}

impl<'de> Deserialize<'de> for BlockFactorization {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            p: i64,
            q: i64,
            n: u32,
        }
        let raw = Vec::<Raw>::deserialize(de)?;
        let factors = raw
            .into_iter()
            .map(|r| Ok(BlockFactor { block: BlockIdeal::new(r.p, r.q)?, n: r.n }))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        BlockFactorization::new(factors).map_err(serde::de::Error::custom)
    }
}

impl BlockFactorization {
    /// Sorts by decreasing slope and merges repeated blocks. Zero
    /// multiplicities are dropped; an empty list is rejected.
    pub fn new(factors: impl IntoIterator<Item = BlockFactor>) -> Result<Self> {
        let mut factors: Vec<BlockFactor> = factors.into_iter().filter(|f| f.n > 0).collect();
        if factors.is_empty() {
            return Err(Error::UnitIdeal);
        }
        factors.sort_by(|a, b| slope_cmp(b.block.as_edge(), a.block.as_edge()));
        let mut merged: Vec<BlockFactor> = Vec::with_capacity(factors.len());
        for f in factors {
            match merged.last_mut() {
                Some(last) if last.block == f.block => {
                    last.n = last.n.checked_add(f.n).ok_or(Error::Overflow)?;
                }
                _ => merged.push(f),
            }
        }
        Ok(BlockFactorization { factors: merged })
    }

    pub fn factors(&self) -> &[BlockFactor] {
        &self.factors
    }

    /// Total number of block ideals counted with multiplicity.
    pub fn block_count(&self) -> u64 {
        self.factors.iter().map(|f| u64::from(f.n)).sum()
    }

    /// Factorization of the product of the two ideals.
    pub fn merge(&self, other: &BlockFactorization) -> Result<BlockFactorization> {
        BlockFactorization::new(self.factors.iter().chain(other.factors.iter()).copied())
    }

    /// One edge `(p·n, q·n)` per factor.
    pub fn to_ci(&self) -> CIFactorization {
        CIFactorization {
            factors: self
                .factors
                .iter()
                .map(|f| EdgeData { c: f.block.p * i64::from(f.n), d: f.block.q * i64::from(f.n) })
                .collect(),
        }
    }

    /// The ideal `∏ C_i^{n_i}`.
    pub fn compose(&self) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit();
        for f in &self.factors {
            let block = f.block.ideal()?;
            for _ in 0..f.n {
                acc = acc.product(&block)?;
            }
        }
        debug_assert_eq!(acc.integral_closure().as_ref(), Ok(&acc));
        Ok(acc)
    }
}

impl BlockIdeal {
    fn as_edge(self) -> EdgeData {
        EdgeData { c: self.p, d: self.q }
    }
}

impl fmt::Display for BlockIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = crate::monomial_ideal::Monomial(LatticePoint::new(self.p, 0));
        let y = crate::monomial_ideal::Monomial(LatticePoint::new(0, self.q));
        write!(f, "({x}, {y})")
    }
}

impl fmt::Display for BlockFactorization {
    /// `(x, y^2)^1 · (x^2, y)^1`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" · ")?;
            }
            write!(f, "{}^{}", factor.block, factor.n)?;
        }
        Ok(())
    }
}

/// `I = J_1 ··· J_r` with `J_i` the closure of `(x^{c_i}, y^{d_i})`.
/// Equal slopes are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct CIFactorization {
    factors: Vec<EdgeData>,
}

impl CIFactorization {
    /// Sorts the factors into nonincreasing slope order.
    pub fn new(factors: impl IntoIterator<Item = EdgeData>) -> Result<Self> {
        let mut factors: Vec<EdgeData> = factors.into_iter().collect();
        if let Some(bad) = factors.iter().find(|e| e.c < 1 || e.d < 1) {
            return Err(Error::InvalidEdge { c: bad.c, d: bad.d });
        }
        if factors.is_empty() {
            return Err(Error::UnitIdeal);
        }
        factors.sort_by(|a, b| slope_cmp(*b, *a));
        Ok(CIFactorization { factors })
    }

    pub fn factors(&self) -> &[EdgeData] {
        &self.factors
    }

    /// Splits every factor into blocks and merges equal ones.
    pub fn to_blocks(&self) -> Result<BlockFactorization> {
        BlockFactorization::new(self.factors.iter().map(|e| {
            let g = e.c.gcd(&e.d);
            BlockFactor {
                block: BlockIdeal { p: e.c / g, q: e.d / g },
                n: u32::try_from(g).unwrap_or(u32::MAX),
            }
        }))
    }

    /// The ideal `∏ closure(x^{c_i}, y^{d_i})`.
    pub fn compose(&self) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit();
        for e in &self.factors {
            acc = acc.product(&complete_intersection_closure(*e)?)?;
        }
        debug_assert_eq!(acc.integral_closure().as_ref(), Ok(&acc));
        Ok(acc)
    }

    /// Vertices `(a_i, b_i)` of the boundary chain built from cumulative
    /// runs and drops. They need not all be true vertices.
    pub fn chain(&self) -> Vec<LatticePoint> {
        let b_total: i64 = self.factors.iter().map(|e| e.d).sum();
        let mut pts = vec![LatticePoint::new(0, b_total)];
        let (mut a, mut b) = (0, b_total);
        for e in &self.factors {
            a += e.c;
            b -= e.d;
            pts.push(LatticePoint::new(a, b));
        }
        pts
    }
}

/// Edge runs and drops of a Newton boundary, in order of decreasing slope.
pub fn edges(boundary: &NewtonBoundary) -> Vec<EdgeData> {
    boundary.edges()
}

/// Zariski factorization of a complete m-primary ideal.
pub fn zariski_factor(ideal: &CompleteIdeal) -> BlockFactorization {
    let ci = CIFactorization { factors: edges(&ideal.newton_boundary()) };
    // boundary edges have distinct slopes, so no merging happens
    ci.to_blocks().expect("a proper complete ideal has at least one edge")
}

/// `l_I = Σ gcd(c_i, d_i) + 1`.
pub fn boundary_count(f: &CIFactorization) -> i64 {
    f.factors.iter().map(|e| e.c.gcd(&e.d)).sum::<i64>() + 1
}

/// `l` of a product from the `l` of its factors: `Σ l_i - r + 1`.
pub fn product_boundary_count(counts: &[i64]) -> i64 {
    counts.iter().sum::<i64>() - counts.len() as i64 + 1
}
