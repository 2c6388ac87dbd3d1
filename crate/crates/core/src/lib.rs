//! Naive and automaton-based string matching, exact and parameterized, with
//! exact comparison counting, plus the generators and benchmark harness used
//! to compare the two approaches.
//!
//! Two strings *parameterize-match* (p-match) when a bijection on symbols
//! maps one onto the other: `ABABCCBA` p-matches `XYXYZZYX`. Every symbol is
//! treated as renameable.
//!
//! ```
//! use pmatch::{kmp_search, pkmp_search, Pattern, Text};
//!
//! let text = Text::from_letters("XYXYZZYX").unwrap();
//! let exact = kmp_search(&text, &Pattern::from_letters("YZZ").unwrap()).unwrap();
//! assert_eq!(exact.occurrences, [3]);
//!
//! let p = pkmp_search(&text, &Pattern::from_letters("ABABCCBA").unwrap()).unwrap();
//! assert_eq!(p.occurrences, [0]);
//! ```
//!
//! All positions are 0-based except the entries of [`PrevEncoding`] and the
//! pattern positions taken by [`param::compare_pt`] / [`param::compare_pp`],
//! which are 1-based.

pub mod bench;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod exact;
pub mod format;
pub mod param;
pub mod search;
pub mod symbols;
pub mod textgen;

pub use error::{Error, Result};
pub use exact::{build_failure, kmp_search, naive_exact_search, FailureTable};
pub use param::{
    build_p_failure, compare_pp, compare_pt, naive_p_search, pkmp_search, LastOccurrenceWindow,
    PFailureTable,
};
pub use search::{Algorithm, ComparisonStats, Matching, SearchOutcome};
pub use symbols::{
    bijection_oracle, letters, p_equivalent, prev_encode, Alphabet, Pattern, PrevEncoding, Symbol,
    Text,
};
