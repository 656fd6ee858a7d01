//! Dyck-triangle dynamics.
//!
//! The triangle assigns to each lattice node `(i, j)` the number of
//! nonnegative paths from the origin that end at position `i` with
//! unbalance `j`. Nodes with `i + j` odd or `j > i` are unreachable and
//! carry the label 0. Reachable nodes satisfy
//! `d[i][j] = d[i-1][j-1] + d[i-1][j+1]` with `d[0][0] = 1`.

use std::sync::{Mutex, MutexGuard};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::Error;

/// A lattice point: `i` is the parenthesis position, `j` the unbalance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Node {
    pub i: usize,
    pub j: usize,
}

impl Node {
    pub const fn new(i: usize, j: usize) -> Self {
        Self { i, j }
    }

    /// A node is reachable iff the coordinate sum is even and `j <= i`.
    pub fn is_reachable(&self) -> bool {
        (self.i + self.j) % 2 == 0 && self.j <= self.i
    }

    /// Index of the descending diagonal `i + j = 2n` through this node,
    /// for reachable nodes.
    pub fn isoline(&self) -> Option<usize> {
        self.is_reachable().then(|| (self.i + self.j) / 2)
    }
}

/// Memoized triangle labels, packed by (isoline, unbalance) so that only
/// reachable nodes are stored: `rows[n][j] = d[2n - j][j]`.
pub struct DynamicsTable {
    isolines: Mutex<Vec<Vec<BigUint>>>,
}

impl DynamicsTable {
    pub const fn new() -> Self {
        Self {
            isolines: Mutex::new(Vec::new()),
        }
    }

    /// Fills isolines `0..=n` and returns the guarded storage.
    ///
    /// In packed coordinates the recurrence reads
    /// `rows[n][j] = rows[n-1][j-1] + rows[n][j+1]`, so each isoline is
    /// produced from the previous one by a single descending sweep.
    fn ensure(&self, n: usize) -> MutexGuard<'_, Vec<Vec<BigUint>>> {
        let mut rows = self.isolines.lock().expect("dynamics table lock");
        if rows.is_empty() {
            rows.push(vec![BigUint::one()]);
        }
        while rows.len() <= n {
            let m = rows.len();
            let prev = &rows[m - 1];
            let mut row = vec![BigUint::zero(); m + 1];
            row[m] = BigUint::one();
            for j in (0..m).rev() {
                let mut value = row[j + 1].clone();
                if j >= 1 {
                    value += &prev[j - 1];
                }
                row[j] = value;
            }
            rows.push(row);
        }
        rows
    }

    /// The label `d[i][j]`; 0 for any unreachable query.
    pub fn dynamics(&self, i: usize, j: usize) -> BigUint {
        let node = Node::new(i, j);
        match node.isoline() {
            Some(n) => self.ensure(n)[n][j].clone(),
            None => BigUint::zero(),
        }
    }

    /// The inverse label within the supporting triangle of height `n`:
    /// the number of paths from `(2n, 0)` backward to `(i, j)`. The mirror
    /// pair `(i, j) ~ (2n - i, j)` exchanges labels, so this is
    /// `d[2n - i][j]`.
    pub fn inverse_dynamics(&self, i: usize, j: usize, n: usize) -> Result<BigUint, Error> {
        if i > 2 * n {
            return Err(Error::OutsideTriangle { i, base: 2 * n });
        }
        Ok(self.dynamics(2 * n - i, j))
    }

    /// Number of full `2n`-paths that visit `(i, j)`: the product of the
    /// forward and inverse labels.
    pub fn paths_through(&self, n: usize, i: usize, j: usize) -> Result<BigUint, Error> {
        let inverse = self.inverse_dynamics(i, j, n)?;
        Ok(self.dynamics(i, j) * inverse)
    }

    /// Sum of squared labels down column `i = n`; equals `c_n` because the
    /// column's nodes are self-mirrored.
    pub fn column_square_sum(&self, n: usize) -> BigUint {
        let rows = self.ensure(n);
        let mut sum = BigUint::zero();
        let mut j = n % 2;
        while j <= n {
            let label = &rows[(n + j) / 2][j];
            sum += label * label;
            j += 2;
        }
        sum
    }
}

impl Default for DynamicsTable {
    fn default() -> Self {
        Self::new()
    }
}

static SHARED: DynamicsTable = DynamicsTable::new();

/// `d[i][j]` from the shared table; 0 for unreachable nodes.
pub fn dynamics(i: usize, j: usize) -> BigUint {
    SHARED.dynamics(i, j)
}

/// Inverse label `d[2n - i][j]` within the height-`n` supporting triangle.
pub fn inverse_dynamics(i: usize, j: usize, n: usize) -> Result<BigUint, Error> {
    SHARED.inverse_dynamics(i, j, n)
}

/// Count of `2n`-paths passing through `(i, j)`.
pub fn paths_through(n: usize, i: usize, j: usize) -> Result<BigUint, Error> {
    SHARED.paths_through(n, i, j)
}

/// `sum of d[n][j]^2` over the reachable nodes of column `n`.
pub fn column_square_sum(n: usize) -> BigUint {
    SHARED.column_square_sum(n)
}
