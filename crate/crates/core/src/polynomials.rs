//! Dyck polynomials: triangle labels expressed as signed combinations of
//! Catalan numbers.
//!
//! Along the isoline `i + j = 2n` the label of the node with unbalance `j`
//! is a fixed polynomial `p_j(n) = sum_k a[j][k] * c_{n-k}` whose
//! coefficients do not depend on `n`. The rows satisfy
//! `p_j(n) = p_{j-1}(n) - p_{j-2}(n-1)`, which on coefficients becomes
//! `a[j][k] = a[j-1][k] - a[j-2][k-1]`. Evaluating `p_j` replaces a
//! quadratic table fill with a handful of Catalan multiplications, which
//! pays off for nodes far from the origin with small unbalance.

use std::sync::{Mutex, MutexGuard};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::catalan::catalan;
use crate::error::Error;
use crate::triangle::Node;

/// Coefficient matrix of the Dyck polynomials: `rows[j][k]` is the
/// coefficient of `c_{n-k}` in `p_j`, for `0 <= k <= j/2`.
pub struct PolyMatrix {
    rows: Mutex<Vec<Vec<BigInt>>>,
}

impl PolyMatrix {
    pub const fn new() -> Self {
        Self {
            rows: Mutex::new(Vec::new()),
        }
    }

    fn ensure(&self, j: usize) -> MutexGuard<'_, Vec<Vec<BigInt>>> {
        let mut rows = self.rows.lock().expect("polynomial matrix lock");
        if rows.is_empty() {
            // p_0 = p_1 = c_n
            rows.push(vec![BigInt::one()]);
            rows.push(vec![BigInt::one()]);
        }
        while rows.len() <= j {
            let m = rows.len();
            let mut row = Vec::with_capacity(m / 2 + 1);
            row.push(BigInt::one());
            for k in 1..=m / 2 {
                let above = rows[m - 1].get(k).cloned().unwrap_or_else(BigInt::zero);
                row.push(above - &rows[m - 2][k - 1]);
            }
            rows.push(row);
        }
        rows
    }

    /// The coefficient row `[a[j][0], …, a[j][j/2]]`.
    pub fn coefficients(&self, j: usize) -> Vec<BigInt> {
        self.ensure(j)[j].clone()
    }

    /// `p_j(n) = sum_k a[j][k] * c_{n-k}`.
    ///
    /// Defined only on the triangle, i.e. for `j <= n`; outside it the
    /// polynomial has no node to label.
    pub fn eval(&self, j: usize, n: usize) -> Result<BigUint, Error> {
        if j > n {
            return Err(Error::AboveDiagonal { j, n });
        }
        let coefficients = self.coefficients(j);
        let mut acc = BigInt::zero();
        for (k, a) in coefficients.iter().enumerate() {
            acc += a * BigInt::from(catalan(n - k));
        }
        Ok(acc
            .to_biguint()
            .expect("a Dyck polynomial evaluates to a path count"))
    }
}

impl Default for PolyMatrix {
    fn default() -> Self {
        Self::new()
    }
}

static SHARED: PolyMatrix = PolyMatrix::new();

/// Signed coefficients of `p_j` as multipliers of `c_n, c_{n-1}, …`.
pub fn poly_coefficients(j: usize) -> Vec<BigInt> {
    SHARED.coefficients(j)
}

/// Evaluates `p_j(n)`; errors when `j > n`.
pub fn poly_eval(j: usize, n: usize) -> Result<BigUint, Error> {
    SHARED.eval(j, n)
}

/// The triangle label `d[i][j]` computed through the polynomial route;
/// 0 for unreachable nodes, matching the table route.
pub fn dynamics_poly(i: usize, j: usize) -> BigUint {
    match Node::new(i, j).isoline() {
        Some(n) => SHARED
            .eval(j, n)
            .expect("reachable nodes satisfy j <= isoline"),
        None => BigUint::zero(),
    }
}

/// Where a node stands relative to the computation of a target label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SegmentLabel {
    /// Inside the backward dependency cone feeding the forward recurrence.
    Main,
    /// Inside the forward closure used by the difference recurrence.
    Difference,
    /// In the supporting triangle but used by neither route.
    Dead,
    /// Beyond the supporting triangle (or not a reachable node at all).
    Outside,
}

fn require_interior(x: Node) -> Result<usize, Error> {
    if !x.is_reachable() || x.j == 0 || x.i <= x.j {
        return Err(Error::NotInterior { i: x.i, j: x.j });
    }
    Ok((x.i + x.j) / 2)
}

/// Classifies `node` within the supporting triangle cut off by the isoline
/// of `x`. `x` must be interior (`i > j > 0` and reachable).
///
/// The target `x` itself is the joint of the main and difference segments;
/// it is reported as `Main`.
pub fn segment_of(node: Node, x: Node) -> Result<SegmentLabel, Error> {
    let n = require_interior(x)?;
    if !node.is_reachable() || node.i + node.j > 2 * n {
        return Ok(SegmentLabel::Outside);
    }
    if node.i <= x.i {
        let spread = x.i - node.i;
        if node.j + spread >= x.j && node.j <= x.j + spread {
            return Ok(SegmentLabel::Main);
        }
    }
    if node.i >= x.i {
        return Ok(SegmentLabel::Difference);
    }
    Ok(SegmentLabel::Dead)
}

/// The highest-unbalance node of the dead segment, `(i - 1, j - 3)`;
/// `None` when `j <= 2` and the wedge is empty.
pub fn wedge_top(x: Node) -> Result<Option<Node>, Error> {
    require_interior(x)?;
    Ok((x.j > 2).then(|| Node::new(x.i - 1, x.j - 3)))
}

/// Segment sizes over the reachable nodes of the supporting triangle of `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SegmentCensus {
    pub isoline: usize,
    pub main: usize,
    pub difference: usize,
    pub dead: usize,
}

pub fn segment_census(x: Node) -> Result<SegmentCensus, Error> {
    let n = require_interior(x)?;
    let mut census = SegmentCensus {
        isoline: n,
        main: 0,
        difference: 0,
        dead: 0,
    };
    for m in 0..=n {
        for j in 0..=m {
            match segment_of(Node::new(2 * m - j, j), x)? {
                SegmentLabel::Main => census.main += 1,
                SegmentLabel::Difference => census.difference += 1,
                SegmentLabel::Dead => census.dead += 1,
                SegmentLabel::Outside => unreachable!("node drawn from the triangle"),
            }
        }
    }
    Ok(census)
}
