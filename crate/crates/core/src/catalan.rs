//! Exact Catalan numbers, their prefix sums, and inversion of an absolute
//! series index into a (semilength, relative index) pair.

use std::sync::Mutex;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::Error;

/// Append-only cache of Catalan numbers, `values[k] = c_k`.
///
/// Values are produced by the multiplicative recurrence
/// `c_{k+1} * (k+2) = c_k * 2 * (2k+1)`, which divides exactly, so the
/// cache never holds an intermediate larger than the next Catalan number.
pub struct CatalanCache {
    values: Mutex<Vec<BigUint>>,
}

impl CatalanCache {
    pub const fn new() -> Self {
        Self {
            values: Mutex::new(Vec::new()),
        }
    }

    /// `c_n`, filling every gap below `n` on the way.
    pub fn get(&self, n: usize) -> BigUint {
        let mut values = self.values.lock().expect("catalan cache lock");
        if values.is_empty() {
            values.push(BigUint::one());
        }
        while values.len() <= n {
            let k = values.len() - 1;
            let next = &values[k] * (2 * (2 * k as u64 + 1)) / (k as u64 + 2);
            values.push(next);
        }
        values[n].clone()
    }

    /// `c_1 + c_2 + … + c_n`; the empty sum for `n = 0`.
    ///
    /// The series has no empty word, so `c_0` never participates.
    pub fn prefix_sum(&self, n: usize) -> BigUint {
        if n == 0 {
            return BigUint::zero();
        }
        self.get(n);
        let values = self.values.lock().expect("catalan cache lock");
        values[1..=n].iter().sum()
    }

    /// Splits an absolute series index into the unique `(n, relative)` with
    /// `1 <= relative <= c_n`.
    pub fn range_of_index(&self, absolute: &BigUint) -> Result<(usize, BigUint), Error> {
        if absolute.is_zero() {
            return Err(Error::IndexZero);
        }
        let mut relative = absolute.clone();
        let mut n = 1usize;
        loop {
            let c = self.get(n);
            if relative <= c {
                return Ok((n, relative));
            }
            relative -= c;
            n += 1;
        }
    }
}

impl Default for CatalanCache {
    fn default() -> Self {
        Self::new()
    }
}

static SHARED: CatalanCache = CatalanCache::new();

/// The `n`th Catalan number, `binomial(2n, n) / (n + 1)`, exactly.
pub fn catalan(n: usize) -> BigUint {
    SHARED.get(n)
}

/// `c_1 + c_2 + … + c_n` — the number of series elements shorter than the
/// `2(n+1)`-range.
pub fn catalan_prefix_sum(n: usize) -> BigUint {
    SHARED.prefix_sum(n)
}

/// Inverse of the absolute/relative index relation: finds the range holding
/// `absolute` by subtracting initial Catalan numbers.
pub fn range_of_index(absolute: &BigUint) -> Result<(usize, BigUint), Error> {
    SHARED.range_of_index(absolute)
}
