//! The `DyckWord` value type: parsing, series ordering, neighbours, and
//! ordered generation of a whole range.
//!
//! The series orders words by length first, then lexicographically with
//! `'(' < ')'`. Every `2n`-range therefore starts at the single block
//! `((…))` and ends at `()…()`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::codec;
use crate::error::Error;

/// One symbol of the two-letter alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Paren {
    Open,
    Close,
}

impl Paren {
    pub fn as_char(self) -> char {
        match self {
            Paren::Open => '(',
            Paren::Close => ')',
        }
    }
}

/// A validated, nonempty balanced string of parentheses.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyckWord {
    symbols: Vec<Paren>,
}

impl DyckWord {
    /// Validates strict ASCII `'('`/`')'` input. Whitespace and any other
    /// glyph are rejected, not normalized.
    pub fn parse(text: &str) -> Result<Self, Error> {
        if text.is_empty() {
            return Err(Error::EmptyWord);
        }
        let mut symbols = Vec::with_capacity(text.len());
        let mut unbalance = 0usize;
        for (pos, ch) in text.chars().enumerate() {
            match ch {
                '(' => {
                    symbols.push(Paren::Open);
                    unbalance += 1;
                }
                ')' => {
                    if unbalance == 0 {
                        return Err(Error::PrefixViolation { position: pos + 1 });
                    }
                    symbols.push(Paren::Close);
                    unbalance -= 1;
                }
                other => {
                    return Err(Error::ForeignChar {
                        found: other,
                        position: pos + 1,
                    })
                }
            }
        }
        if unbalance > 0 {
            return Err(Error::UnbalancedEnd { surplus: unbalance });
        }
        Ok(Self { symbols })
    }

    /// Builds a word the caller has already proven balanced.
    pub(crate) fn from_symbols_unchecked(symbols: Vec<Paren>) -> Self {
        debug_assert!(!symbols.is_empty());
        debug_assert_eq!(
            symbols.iter().filter(|&&p| p == Paren::Open).count() * 2,
            symbols.len()
        );
        Self { symbols }
    }

    /// Number of `(`/`)` pairs; the word has `2n` symbols.
    pub fn semilength(&self) -> usize {
        self.symbols.len() / 2
    }

    pub fn symbols(&self) -> &[Paren] {
        &self.symbols
    }

    /// The exact ASCII form, no trailing newline.
    pub fn render(&self) -> String {
        self.symbols.iter().map(|p| p.as_char()).collect()
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.symbols {
            write!(f, "{}", p.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for DyckWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Self::parse(s)
    }
}

/// Series order: ascending length, then symbol-wise with `Open < Close`.
impl Ord for DyckWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.symbols
            .len()
            .cmp(&other.symbols.len())
            .then_with(|| self.symbols.cmp(&other.symbols))
    }
}

impl PartialOrd for DyckWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The element immediately after `w` in the series. The last word of a
/// range is followed by the single-block word of the next range.
///
/// Implemented as rank, +1, unrank: one audited code path for both
/// neighbour directions, with the in-range generator as its test oracle.
pub fn successor(word: &DyckWord) -> DyckWord {
    let next = codec::rank(word).absolute + 1u32;
    codec::unrank(&next)
        .expect("a positive index always has a word")
        .0
}

/// The element immediately before `w`; `None` at the series start `()`.
pub fn predecessor(word: &DyckWord) -> Option<DyckWord> {
    let mut index = codec::rank(word).absolute;
    index -= 1u32;
    if index.is_zero() {
        return None;
    }
    Some(
        codec::unrank(&index)
            .expect("a positive index always has a word")
            .0,
    )
}

/// All words of semilength `n` in series order, streamed lazily.
///
/// Yields exactly `c_n` words: the first is the single block, the last is
/// `n` copies of `()`.
pub fn generate(n: usize) -> Result<RangeWords, Error> {
    if n == 0 {
        return Err(Error::EmptySemilength);
    }
    let mut first = vec![Paren::Open; n];
    first.extend(std::iter::repeat(Paren::Close).take(n));
    Ok(RangeWords {
        current: Some(first),
    })
}

pub struct RangeWords {
    current: Option<Vec<Paren>>,
}

impl Iterator for RangeWords {
    type Item = DyckWord;

    fn next(&mut self) -> Option<DyckWord> {
        let symbols = self.current.take()?;
        self.current = next_in_range(&symbols);
        Some(DyckWord::from_symbols_unchecked(symbols))
    }
}

/// The next word of the same length, or `None` at the range maximum.
///
/// Scanning from the right, the first `(` with positive unbalance before
/// it can flip to `)`; the least valid completion after the flip is all
/// remaining opens followed by all remaining closes.
fn next_in_range(symbols: &[Paren]) -> Option<Vec<Paren>> {
    let n = symbols.len() / 2;
    let mut opens_suffix = 0usize;
    let mut closes_suffix = 0usize;
    for p in (0..symbols.len()).rev() {
        match symbols[p] {
            Paren::Open => opens_suffix += 1,
            Paren::Close => closes_suffix += 1,
        }
        let unbalance_before = closes_suffix.saturating_sub(opens_suffix);
        if symbols[p] == Paren::Open && unbalance_before >= 1 {
            let opens_used = n - opens_suffix;
            let closes_used = p - opens_used + 1;
            let mut next = Vec::with_capacity(2 * n);
            next.extend_from_slice(&symbols[..p]);
            next.push(Paren::Close);
            next.extend(std::iter::repeat(Paren::Open).take(n - opens_used));
            next.extend(std::iter::repeat(Paren::Close).take(n - closes_used));
            return Some(next);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalan::catalan;
    use num_bigint::BigUint;

    fn word(text: &str) -> DyckWord {
        DyckWord::parse(text).unwrap()
    }

    #[test]
    fn parse_accepts_balanced() {
        assert_eq!(word("()").semilength(), 1);
        assert_eq!(word("(()())").render(), "(()())");
        assert_eq!(word("()").to_string(), "()");
    }

    #[test]
    fn parse_rejects_with_positions() {
        assert_eq!(
            DyckWord::parse(")("),
            Err(Error::PrefixViolation { position: 1 })
        );
        assert_eq!(
            DyckWord::parse("())"),
            Err(Error::PrefixViolation { position: 3 })
        );
        assert_eq!(
            DyckWord::parse("(()"),
            Err(Error::UnbalancedEnd { surplus: 1 })
        );
        assert_eq!(DyckWord::parse(""), Err(Error::EmptyWord));
        assert_eq!(
            DyckWord::parse("(a)"),
            Err(Error::ForeignChar {
                found: 'a',
                position: 2
            })
        );
        assert_eq!(
            DyckWord::parse("( )"),
            Err(Error::ForeignChar {
                found: ' ',
                position: 2
            })
        );
    }

    #[test]
    fn series_order() {
        assert_eq!(word("((()))").cmp(&word("(()())")), Ordering::Less);
        assert_eq!(word("()").cmp(&word("()")), Ordering::Equal);
        // length dominates the symbol order
        assert_eq!(word("()()").cmp(&word("((()))")), Ordering::Less);
        assert_eq!(word("(())").cmp(&word("()")), Ordering::Greater);
    }

    #[test]
    fn generate_fixtures() {
        let one: Vec<String> = generate(1).unwrap().map(|w| w.render()).collect();
        assert_eq!(one, ["()"]);

        let three: Vec<String> = generate(3).unwrap().map(|w| w.render()).collect();
        assert_eq!(three, ["((()))", "(()())", "(())()", "()(())", "()()()"]);

        assert_eq!(generate(6).unwrap().count(), 132);
    }

    #[test]
    fn generate_rejects_zero() {
        assert!(matches!(generate(0), Err(Error::EmptySemilength)));
    }

    #[test]
    fn generated_ranges_are_sorted_and_complete() {
        for n in 1..=9usize {
            let words: Vec<DyckWord> = generate(n).unwrap().collect();
            assert_eq!(BigUint::from(words.len()), catalan(n), "n = {n}");
            for pair in words.windows(2) {
                assert!(pair[0] < pair[1]);
            }
            assert_eq!(words[0].render(), "(".repeat(n) + &")".repeat(n));
            assert_eq!(words.last().unwrap().render(), "()".repeat(n));
        }
    }

    #[test]
    fn position_condition() {
        // the i-th close sits at position r_i with 2i <= r_i <= n + i
        for n in 1..=9usize {
            for w in generate(n).unwrap() {
                let mut seen = 0usize;
                for (pos, &p) in w.symbols().iter().enumerate() {
                    if p == Paren::Close {
                        seen += 1;
                        let r = pos + 1;
                        assert!(2 * seen <= r && r <= n + seen, "{w} close #{seen} at {r}");
                    }
                }
            }
        }
    }

    #[test]
    fn roundtrip_through_ascii() {
        for w in generate(7).unwrap() {
            assert_eq!(DyckWord::parse(&w.render()).unwrap(), w);
        }
    }

    #[test]
    fn successor_fixtures() {
        assert_eq!(successor(&word("()")), word("(())"));
        assert_eq!(successor(&word("((()))")), word("(()())"));
        assert_eq!(successor(&word("()()")), word("((()))"));
    }

    #[test]
    fn predecessor_fixtures() {
        assert_eq!(predecessor(&word("(())")), Some(word("()")));
        assert_eq!(predecessor(&word("()")), None);
        assert_eq!(predecessor(&word("(()())")), Some(word("((()))")));
    }

    #[test]
    fn neighbours_agree_with_generation() {
        for n in 1..=7usize {
            let words: Vec<DyckWord> = generate(n).unwrap().collect();
            for pair in words.windows(2) {
                assert_eq!(successor(&pair[0]), pair[1]);
                assert_eq!(predecessor(&pair[1]), Some(pair[0].clone()));
            }
        }
    }
}
