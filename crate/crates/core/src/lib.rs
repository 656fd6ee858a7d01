//! Exact tools for the lexicographic series of Dyck words.
//!
//! The series lists every balanced parenthesis string, shortest first and
//! lexicographically within each length under `'(' < ')'`:
//!
//! ```text
//! (), (()), ()(), ((())), (()()), (())(), ()(()), ()()(), …
//! ```
//!
//! The crate answers the four classical questions about that ordering —
//! validate a word, step to a neighbour, rank a word to its index, and
//! rebuild the word at an index — plus the counting machinery behind
//! them: Catalan numbers, the Dyck triangle of path counts, and the Dyck
//! polynomials that express far-from-origin triangle labels as short
//! signed combinations of Catalan numbers. All arithmetic is exact.
//!
//! ```
//! use dyck::{DyckWord, codec};
//! use num_bigint::BigUint;
//!
//! let word = DyckWord::parse("((()))").unwrap();
//! assert_eq!(codec::rank(&word).absolute, BigUint::from(4u32));
//!
//! let (back, result) = codec::unrank(&BigUint::from(4u32)).unwrap();
//! assert_eq!(back, word);
//! assert_eq!(result.semilength, 3);
//! ```

pub mod catalan;
pub mod codec;
mod error;
pub mod polynomials;
pub mod triangle;
pub mod words;

pub use catalan::CatalanCache;
pub use codec::{Crossover, RankResult};
pub use error::Error;
pub use polynomials::{PolyMatrix, SegmentCensus, SegmentLabel};
pub use triangle::{DynamicsTable, Node};
pub use words::{DyckWord, Paren};
