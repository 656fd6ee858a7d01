//! Identification of series elements: rank (word to index) and unrank
//! (index to word).
//!
//! Both directions trace the word's lattice path once. The quantity
//! consulted at each candidate down-step is the inverse label of the
//! skipped up-step's target: the number of words that share the prefix
//! but keep climbing. Ranking sums those labels; unranking subtracts
//! them from a leap budget.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::catalan::{catalan, catalan_prefix_sum, range_of_index};
use crate::error::Error;
use crate::polynomials;
use crate::triangle;
use crate::words::{DyckWord, Paren};

/// Both indices of a word: `absolute = relative + c_1 + … + c_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankResult {
    pub semilength: usize,
    pub relative: BigUint,
    pub absolute: BigUint,
}

/// Route selection for inverse-label lookups.
///
/// The polynomial route beats the table fill when the node's column is
/// large against its unbalance; `Factor(t)` switches to polynomials for
/// columns exceeding `t` times the unbalance. `Factor(0)` therefore means
/// always, `Never` pins the table route. Both routes must agree exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Crossover {
    Factor(u64),
    Never,
}

impl Default for Crossover {
    fn default() -> Self {
        DEFAULT_CROSSOVER
    }
}

/// Default route switch: polynomials once the column exceeds four times
/// the unbalance.
pub const DEFAULT_CROSSOVER: Crossover = Crossover::Factor(4);

/// Inverse label of `(i, j)` in the height-`n` triangle, `d[2n - i][j]`,
/// fetched by whichever route the crossover selects. The caller
/// guarantees `i <= 2n` and that the mirrored node is reachable.
fn inverse_label(n: usize, i: usize, j: usize, crossover: Crossover) -> BigUint {
    let column = 2 * n - i;
    let use_poly = match crossover {
        Crossover::Factor(t) => (column as u64) > t.saturating_mul(j as u64),
        Crossover::Never => false,
    };
    if use_poly {
        polynomials::dynamics_poly(column, j)
    } else {
        triangle::dynamics(column, j)
    }
}

fn rank_impl(word: &DyckWord, crossover: Crossover) -> (RankResult, Vec<BigUint>) {
    let n = word.semilength();
    let mut relative = BigUint::one();
    let mut jumps = Vec::new();
    let mut i = 0usize;
    let mut j = 0usize;
    for &symbol in word.symbols() {
        match symbol {
            Paren::Open => {
                i += 1;
                j += 1;
            }
            Paren::Close => {
                // A close before the outer diagonal skips the words that
                // keep climbing from here; trailing closes skip nothing.
                if i + j < 2 * n {
                    let jump = inverse_label(n, i + 1, j + 1, crossover);
                    relative += &jump;
                    jumps.push(jump);
                }
                i += 1;
                j -= 1;
            }
        }
    }
    let absolute = &relative + catalan_prefix_sum(n - 1);
    (
        RankResult {
            semilength: n,
            relative,
            absolute,
        },
        jumps,
    )
}

/// The word's position in the series.
pub fn rank(word: &DyckWord) -> RankResult {
    rank_impl(word, DEFAULT_CROSSOVER).0
}

/// `rank` with an explicit inverse-label route.
pub fn rank_with(word: &DyckWord, crossover: Crossover) -> RankResult {
    rank_impl(word, crossover).0
}

/// `rank` together with the per-close jumps; they sum to `relative - 1`.
pub fn rank_trace(word: &DyckWord) -> (RankResult, Vec<BigUint>) {
    rank_impl(word, DEFAULT_CROSSOVER)
}

fn unrank_impl(
    n: usize,
    relative: &BigUint,
    crossover: Crossover,
) -> Result<(DyckWord, Vec<BigUint>), Error> {
    if n == 0 {
        return Err(Error::EmptySemilength);
    }
    if relative.is_zero() || *relative > catalan(n) {
        return Err(Error::RelativeOutOfRange { n });
    }
    let mut jump = relative - 1u32;
    let mut leaps = Vec::new();
    // any word starts with an up-step
    let mut symbols = vec![Paren::Open];
    let mut i = 1usize;
    let mut j = 1usize;
    while i < 2 * n {
        let down = if j == 0 {
            false
        } else if i + j == 2 * n {
            // the outer diagonal admits no further up-step
            true
        } else {
            let skip = inverse_label(n, i + 1, j + 1, crossover);
            if jump >= skip {
                jump -= &skip;
                leaps.push(skip);
                true
            } else {
                false
            }
        };
        if down {
            symbols.push(Paren::Close);
            j -= 1;
        } else {
            symbols.push(Paren::Open);
            j += 1;
        }
        i += 1;
    }
    debug_assert!(jump.is_zero(), "leap budget must be exhausted at (2n, 0)");
    debug_assert_eq!(j, 0);
    Ok((DyckWord::from_symbols_unchecked(symbols), leaps))
}

/// The word at position `relative` (1-based) within the `2n`-range.
pub fn unrank_relative(n: usize, relative: &BigUint) -> Result<DyckWord, Error> {
    unrank_impl(n, relative, DEFAULT_CROSSOVER).map(|(word, _)| word)
}

/// `unrank_relative` with an explicit inverse-label route.
pub fn unrank_relative_with(
    n: usize,
    relative: &BigUint,
    crossover: Crossover,
) -> Result<DyckWord, Error> {
    unrank_impl(n, relative, crossover).map(|(word, _)| word)
}

/// `unrank_relative` together with the leaps consumed at down-steps;
/// they sum to `relative - 1`.
pub fn unrank_relative_trace(
    n: usize,
    relative: &BigUint,
) -> Result<(DyckWord, Vec<BigUint>), Error> {
    unrank_impl(n, relative, DEFAULT_CROSSOVER)
}

/// The word at an absolute series position, with both its indices.
pub fn unrank(absolute: &BigUint) -> Result<(DyckWord, RankResult), Error> {
    let (n, relative) = range_of_index(absolute)?;
    let word = unrank_relative(n, &relative)?;
    Ok((
        word,
        RankResult {
            semilength: n,
            relative,
            absolute: absolute.clone(),
        },
    ))
}
