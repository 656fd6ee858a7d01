use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input: a Dyck word has at least one pair of parentheses")]
    EmptyWord,
    #[error("foreign character {found:?} at position {position}")]
    ForeignChar { found: char, position: usize },
    #[error("prefix violation at position {position}: ')' outnumbers '('")]
    PrefixViolation { position: usize },
    #[error("imbalance at end: {surplus} unmatched '('")]
    UnbalancedEnd { surplus: usize },
    #[error("the series is 1-based: index 0 precedes the first word \"()\"")]
    IndexZero,
    #[error("semilength 0 has no words: the series excludes the empty word")]
    EmptySemilength,
    #[error("relative index must lie in [1, c_{n}]")]
    RelativeOutOfRange { n: usize },
    #[error("position {i} lies outside the supporting triangle with base {base}")]
    OutsideTriangle { i: usize, base: usize },
    #[error("unbalance {j} exceeds isoline {n}: the node sits above the diagonal")]
    AboveDiagonal { j: usize, n: usize },
    #[error("({i}, {j}) is not an interior triangle node")]
    NotInterior { i: usize, j: usize },
}

impl Error {
    /// The 1-based input position for character-level parse errors, if any.
    pub fn position(&self) -> Option<usize> {
        match self {
            Error::ForeignChar { position, .. } | Error::PrefixViolation { position } => {
                Some(*position)
            }
            _ => None,
        }
    }
}
