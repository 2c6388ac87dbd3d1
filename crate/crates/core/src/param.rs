//! Parameterized matching.
//!
//! The automaton route is the KMP automaton with every equality test
//! replaced by the `≅` test, decided in O(1) from the pattern's
//! prev-encoding plus a last-occurrence window over the text. The naive
//! route tries every alignment and decides `≅` with direct back-scans
//! inside the alignment.
//!
//! Position conventions: pattern positions `i` passed to [`compare_pt`] and
//! [`compare_pp`] are 1-based; text indices are 0-based.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::search::{check_compatible, ComparisonStats, SearchOutcome};
use crate::symbols::{prev_encode, Alphabet, Pattern, PrevEncoding, Symbol, Text};

const ABSENT: usize = usize::MAX;

/// Most recent index of every symbol among the last `span` text symbols.
///
/// Backed by a direct-address table over the alphabet. Entries that fall
/// out of the window are not removed; lookups treat anything older than
/// `current - span + 1` as absent.
#[derive(Debug, Clone)]
pub struct LastOccurrenceWindow {
    span: usize,
    last: Vec<usize>,
    current: usize,
    // index of the previous occurrence of the symbol at `current`
    previous: usize,
}

impl LastOccurrenceWindow {
    pub fn new(alphabet: Alphabet, span: usize) -> Result<Self> {
        if span == 0 {
            return Err(Error::invalid("window span must be at least 1"));
        }
        Ok(LastOccurrenceWindow {
            span,
            last: vec![ABSENT; alphabet.size() as usize],
            current: ABSENT,
            previous: ABSENT,
        })
    }

    pub fn span(&self) -> usize {
        self.span
    }

    /// Appends the next text symbol and returns its index.
    #[inline]
    pub fn push(&mut self, symbol: Symbol) -> usize {
        self.current = self.current.wrapping_add(1);
        self.previous = std::mem::replace(&mut self.last[symbol as usize], self.current);
        self.current
    }

    /// Index of the most recently pushed symbol.
    pub fn current(&self) -> Option<usize> {
        (self.current != ABSENT).then_some(self.current)
    }

    #[inline]
    fn in_window(&self, index: usize) -> bool {
        index != ABSENT && index + self.span > self.current
    }

    /// Most recent index of `symbol` inside the window.
    pub fn last_occurrence(&self, symbol: Symbol) -> Option<usize> {
        let at = *self.last.get(symbol as usize)?;
        self.in_window(at).then_some(at)
    }

    /// Previous index, inside the window, of the symbol at [`current`](Self::current).
    #[inline]
    pub fn previous_occurrence(&self) -> Option<usize> {
        self.in_window(self.previous).then_some(self.previous)
    }

    /// Distinct symbols currently in the window, in symbol order.
    pub fn distinct_symbols(&self) -> Vec<Symbol> {
        (0..self.last.len())
            .filter(|&s| self.in_window(self.last[s]))
            .map(|s| s as Symbol)
            .collect()
    }
}

/// `p_i ≅ t_j` for the alignment that puts pattern position `i` (1-based)
/// on text index `j`, assuming positions `1..i` already p-match.
///
/// The window must have consumed the text up to and including `j`.
/// Counts one symbol comparison; a first-occurrence position also costs
/// one window lookup.
pub fn compare_pt(
    i: usize,
    j: usize,
    a: &PrevEncoding,
    text: &[Symbol],
    window: &LastOccurrenceWindow,
    stats: &mut ComparisonStats,
) -> Result<bool> {
    if i == 0 || i > a.len() {
        return Err(Error::invalid(format!(
            "pattern position {i} outside 1..={}",
            a.len()
        )));
    }
    if i > j + 1 {
        return Err(Error::invalid(format!(
            "pattern position {i} cannot align with text index {j}"
        )));
    }
    if window.current() != Some(j) || j >= text.len() {
        return Err(Error::internal(format!(
            "window at {:?} is out of step with text index {j}",
            window.current()
        )));
    }
    Ok(compare_pt_unchecked(i, j, a, text, window, stats))
}

#[inline(always)]
fn compare_pt_unchecked(
    i: usize,
    j: usize,
    a: &PrevEncoding,
    text: &[Symbol],
    window: &LastOccurrenceWindow,
    stats: &mut ComparisonStats,
) -> bool {
    stats.symbol_comparisons += 1;
    match a.distance(i) {
        // t_j must not occur in t[j-i+1..j)
        None => {
            stats.aux_lookups += 1;
            match window.previous_occurrence() {
                None => true,
                Some(prev) => prev + i <= j,
            }
        }
        Some(d) => text[j] == text[j - d],
    }
}

/// `p_i ≅ p_j` while extending a border: the suffix of `P[1..i]` of length
/// `j` is tested against the prefix `P[1..j]`, assuming the first `j - 1`
/// positions already p-match. Requires `1 <= j <= i <= m`.
pub fn compare_pp(i: usize, j: usize, pattern: &[Symbol], a: &PrevEncoding) -> Result<bool> {
    let m = a.len();
    if pattern.len() != m {
        return Err(Error::invalid("prev-encoding does not belong to pattern"));
    }
    if j == 0 || j > i || i > m {
        return Err(Error::invalid(format!(
            "need 1 <= j <= i <= {m}, got i={i}, j={j}"
        )));
    }
    Ok(compare_pp_unchecked(i, j, pattern, a))
}

#[inline]
fn compare_pp_unchecked(i: usize, j: usize, pattern: &[Symbol], a: &PrevEncoding) -> bool {
    match a.distance(i) {
        // p_i is new inside the suffix window, so p_j must be new in P[1..j)
        Some(d) if d < j => pattern[j - 1] == pattern[j - 1 - d],
        _ => a.is_first(j),
    }
}

/// Parameterized failure function.
///
/// `at(i)` (1-based) is the largest `l < i` such that `P[1..l]` p-matches
/// the suffix of `P[1..i]` of length `l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PFailureTable {
    links: Vec<usize>,
}

impl PFailureTable {
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

pub fn build_p_failure(pattern: &Pattern) -> PFailureTable {
    let a = prev_encode(pattern);
    PFailureTable {
        links: p_failure_links(pattern.symbols(), &a),
    }
}

fn p_failure_links(p: &[Symbol], a: &PrevEncoding) -> Vec<usize> {
    let mut f = vec![0; p.len()];
    let mut q = 0;
    for i in 2..=p.len() {
        loop {
            if compare_pp_unchecked(i, q + 1, p, a) {
                q += 1;
                break;
            }
            if q == 0 {
                break;
            }
            q = f[q - 1];
        }
        f[i - 1] = q;
    }
    f
}

/// Automaton-based parameterized search.
///
/// Drives the KMP loop with [`compare_pt`] and the p-failure function,
/// resuming from `pf[m]` after each occurrence. At most `2n` `≅` tests.
pub fn pkmp_search(text: &Text, pattern: &Pattern) -> Result<SearchOutcome> {
    check_compatible(text, pattern)?;
    let started = Instant::now();
    let (t, m) = (text.symbols(), pattern.len());
    let mut out = SearchOutcome::empty();
    if m > t.len() {
        return Ok(out.finish(started));
    }

    let a = prev_encode(pattern);
    let pf = p_failure_links(pattern.symbols(), &a);
    let mut window = LastOccurrenceWindow::new(text.alphabet(), m)?;
    let mut stats = ComparisonStats::default();
    let mut q = 0;
    for (j, &c) in t.iter().enumerate() {
        window.push(c);
        loop {
            if compare_pt_unchecked(q + 1, j, &a, t, &window, &mut stats) {
                q += 1;
                break;
            }
            if q == 0 {
                break;
            }
            q = pf[q - 1];
        }
        if q == m {
            out.occurrences.push(j + 1 - m);
            q = pf[m - 1];
        }
    }
    out.stats = stats;
    Ok(out.finish(started))
}

/// Naive parameterized search.
///
/// Every alignment starts from scratch and tests positions left to right
/// until the first failure. A repeated pattern symbol is checked against the
/// aligned text symbol at the same distance back; a first occurrence is
/// checked by scanning the alignment's earlier text symbols.
pub fn naive_p_search(text: &Text, pattern: &Pattern) -> Result<SearchOutcome> {
    check_compatible(text, pattern)?;
    let started = Instant::now();
    let (t, m) = (text.symbols(), pattern.len());
    let mut out = SearchOutcome::empty();
    if m > t.len() {
        return Ok(out.finish(started));
    }

    let a = prev_encode(pattern);
    // 0 marks a first occurrence
    let dist: Vec<usize> = (1..=m).map(|i| a.distance(i).unwrap_or(0)).collect();
    let mut comparisons = 0u64;
    let mut reads = 0u64;
    for (j, w) in t.windows(m).enumerate() {
        let mut matched = true;
        for (i, &d) in dist.iter().enumerate() {
            comparisons += 1;
            let ok = if d == 0 {
                match w[..i].iter().rposition(|&x| x == w[i]) {
                    Some(k) => {
                        reads += (i - k) as u64;
                        false
                    }
                    None => {
                        reads += i as u64;
                        true
                    }
                }
            } else {
                w[i] == w[i - d]
            };
            if !ok {
                matched = false;
                break;
            }
        }
        if matched {
            out.occurrences.push(j);
        }
    }
    out.stats.symbol_comparisons = comparisons;
    out.stats.aux_lookups = reads;
    Ok(out.finish(started))
}
