use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symbols::{Pattern, Text};
use crate::{exact, param};

/// Work counters for one search call.
///
/// `symbol_comparisons` counts every equality (or `≅`) test between a
/// pattern position and a text position, including the one that fails.
/// `aux_lookups` counts auxiliary reads made to decide a `≅` test: window
/// queries for the automaton, back-scan reads for the naive p-search.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonStats {
    pub symbol_comparisons: u64,
    pub aux_lookups: u64,
    pub elapsed_ns: u64,
}

/// Occurrences (0-based start indices, strictly increasing) and counters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub occurrences: Vec<usize>,
    pub stats: ComparisonStats,
}

impl SearchOutcome {
    pub(crate) fn empty() -> Self {
        SearchOutcome {
            occurrences: Vec::new(),
            stats: ComparisonStats::default(),
        }
    }

    pub(crate) fn finish(mut self, started: Instant) -> Self {
        self.stats.elapsed_ns = started.elapsed().as_nanos() as u64;
        self
    }
}

pub(crate) fn check_compatible(text: &Text, pattern: &Pattern) -> Result<()> {
    if text.alphabet() != pattern.alphabet() {
        return Err(Error::invalid(format!(
            "alphabet mismatch: text has {}, pattern has {}",
            text.alphabet(),
            pattern.alphabet()
        )));
    }
    Ok(())
}

/// The four search algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    ExactNaive,
    ExactKmp,
    PmNaive,
    PmAuto,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::ExactNaive,
        Algorithm::ExactKmp,
        Algorithm::PmNaive,
        Algorithm::PmAuto,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::ExactNaive => "exact-naive",
            Algorithm::ExactKmp => "exact-kmp",
            Algorithm::PmNaive => "pm-naive",
            Algorithm::PmAuto => "pm-auto",
        }
    }

    pub fn search(self, text: &Text, pattern: &Pattern) -> Result<SearchOutcome> {
        match self {
            Algorithm::ExactNaive => exact::naive_exact_search(text, pattern),
            Algorithm::ExactKmp => exact::kmp_search(text, pattern),
            Algorithm::PmNaive => param::naive_p_search(text, pattern),
            Algorithm::PmAuto => param::pkmp_search(text, pattern),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| {
                Error::invalid(format!(
                    "unknown algorithm {s:?}, expected one of exact-naive, exact-kmp, pm-naive, pm-auto"
                ))
            })
    }
}

/// Exact or parameterized matching; each has a naive and an automaton route.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Matching {
    Exact,
    Parameterized,
}

impl Matching {
    pub fn naive(self) -> Algorithm {
        match self {
            Matching::Exact => Algorithm::ExactNaive,
            Matching::Parameterized => Algorithm::PmNaive,
        }
    }

    pub fn automaton(self) -> Algorithm {
        match self {
            Matching::Exact => Algorithm::ExactKmp,
            Matching::Parameterized => Algorithm::PmAuto,
        }
    }
}
