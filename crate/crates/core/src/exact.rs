//! Exact matching: the sliding-window naive search and the KMP automaton.

use std::time::Instant;

use crate::error::Result;
use crate::search::{check_compatible, SearchOutcome};
use crate::symbols::{Pattern, Symbol, Text};

/// KMP failure function.
///
/// `at(i)` (1-based, `1 <= i <= m`) is the length of the longest proper
/// prefix of `P[1..i]` that is also a suffix of it. State `m` of the
/// automaton is accepting; the success transition out of state `q` reads
/// pattern symbol `q` (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailureTable {
    links: Vec<usize>,
}

impl FailureTable {
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.links[i - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.links
    }

    pub fn len(&self) -> usize {
        self.links.len()
    }

    pub fn is_empty(&self) -> bool {
        self.links.is_empty()
    }
}

pub fn build_failure(pattern: &Pattern) -> FailureTable {
    FailureTable {
        links: failure_links(pattern.symbols()),
    }
}

/// Linear-time construction by walking failure chains.
pub(crate) fn failure_links(p: &[Symbol]) -> Vec<usize> {
    let mut f = vec![0; p.len()];
    let mut q = 0;
    for i in 1..p.len() {
        while q > 0 && p[i] != p[q] {
            q = f[q - 1];
        }
        if p[i] == p[q] {
            q += 1;
        }
        f[i] = q;
    }
    f
}

/// Tries every alignment and compares left to right until the first mismatch.
pub fn naive_exact_search(text: &Text, pattern: &Pattern) -> Result<SearchOutcome> {
    check_compatible(text, pattern)?;
    let started = Instant::now();
    let (t, p) = (text.symbols(), pattern.symbols());
    let m = p.len();
    let mut out = SearchOutcome::empty();
    if m > t.len() {
        return Ok(out.finish(started));
    }

    let mut comparisons = 0u64;
    for (j, window) in t.windows(m).enumerate() {
        match window.iter().zip(p).position(|(a, b)| a != b) {
            Some(k) => comparisons += k as u64 + 1,
            None => {
                comparisons += m as u64;
                out.occurrences.push(j);
            }
        }
    }
    out.stats.symbol_comparisons = comparisons;
    Ok(out.finish(started))
}

/// Runs the KMP automaton over the text.
///
/// On a mismatch in state `q > 0` the automaton follows the failure link
/// without consuming the text symbol. After reaching the accepting state it
/// resumes from `f[m]`, so overlapping occurrences are found. At most `2n`
/// symbol comparisons are made.
pub fn kmp_search(text: &Text, pattern: &Pattern) -> Result<SearchOutcome> {
    check_compatible(text, pattern)?;
    let started = Instant::now();
    let (t, p) = (text.symbols(), pattern.symbols());
    let m = p.len();
    let mut out = SearchOutcome::empty();
    if m > t.len() {
        return Ok(out.finish(started));
    }

    let f = failure_links(p);
    let mut comparisons = 0u64;
    let mut q = 0;
    for (j, &c) in t.iter().enumerate() {
        loop {
            comparisons += 1;
            if c == p[q] {
                q += 1;
                break;
            }
            if q == 0 {
                break;
            }
            q = f[q - 1];
        }
        if q == m {
            out.occurrences.push(j + 1 - m);
            q = f[m - 1];
        }
    }
    out.stats.symbol_comparisons = comparisons;
    Ok(out.finish(started))
}
