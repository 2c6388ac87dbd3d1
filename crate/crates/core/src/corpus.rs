//! FASTA ingestion and extraction of fixed-length DNA windows.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symbols::{Alphabet, Symbol, Text};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FastaRecord {
    /// Description line without the leading `>`.
    pub header: String,
    /// Concatenated sequence lines, whitespace removed, upper-cased.
    pub sequence: Vec<u8>,
}

pub fn parse_fasta(bytes: &[u8]) -> Result<Vec<FastaRecord>> {
    let mut records: Vec<FastaRecord> = Vec::new();
    for (lineno, line) in bytes.split(|&b| b == b'\n').enumerate() {
        if let Some(header) = line.strip_prefix(b">") {
            let header = String::from_utf8_lossy(header).trim_end().to_owned();
            records.push(FastaRecord {
                header,
                sequence: Vec::new(),
            });
            continue;
        }
        if line.first() == Some(&b';') {
            continue;
        }
        let mut bases = line
            .iter()
            .filter(|b| !b.is_ascii_whitespace())
            .map(u8::to_ascii_uppercase)
            .peekable();
        if bases.peek().is_none() {
            continue;
        }
        match records.last_mut() {
            Some(rec) => rec.sequence.extend(bases),
            None => {
                return Err(Error::format(format!(
                    "line {}: sequence data before the first '>' header",
                    lineno + 1
                )))
            }
        }
    }
    if records.is_empty() {
        return Err(Error::format("no FASTA records found"));
    }
    Ok(records)
}

pub fn read_fasta(path: &Path) -> Result<Vec<FastaRecord>> {
    parse_fasta(&fs::read(path)?)
}

/// Marker for a base outside `ACGT`.
pub const INVALID_BASE: u8 = u8::MAX;

const BASES: &[u8; 4] = b"ACGT";

/// A DNA sequence as codes `A=0, C=1, G=2, T=3`, with [`INVALID_BASE`]
/// wherever the source held any other character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodedDna {
    codes: Vec<u8>,
}

impl EncodedDna {
    pub fn codes(&self) -> &[u8] {
        &self.codes
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn invalid_count(&self) -> usize {
        self.codes.iter().filter(|&&c| c == INVALID_BASE).count()
    }
}

pub fn encode_dna(record: &FastaRecord) -> EncodedDna {
    let codes = record
        .sequence
        .iter()
        .map(|b| match b.to_ascii_uppercase() {
            b'A' => 0,
            b'C' => 1,
            b'G' => 2,
            b'T' => 3,
            _ => INVALID_BASE,
        })
        .collect();
    EncodedDna { codes }
}

/// Maps codes `0..4` back to `ACGT`.
pub fn decode_dna(symbols: &[Symbol]) -> Vec<u8> {
    symbols.iter().map(|&s| BASES[s as usize]).collect()
}

/// How consecutive windows are laid out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StridePolicy {
    /// Restart just past the last invalid base of a rejected window.
    #[default]
    Resync,
    /// Fixed back-to-back grid; windows holding an invalid base are dropped.
    Grid,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DnaWindow {
    /// Offset of the window in the encoded sequence.
    pub start: usize,
    pub text: Text,
}

/// Takes up to `count` non-overlapping windows of exactly `window_len`
/// valid bases, left to right.
pub fn extract_windows(
    encoded: &EncodedDna,
    window_len: usize,
    count: usize,
    policy: StridePolicy,
) -> Result<Vec<DnaWindow>> {
    if window_len == 0 {
        return Err(Error::invalid("window length must be at least 1"));
    }
    let codes = &encoded.codes;
    let mut out = Vec::new();
    let mut start = 0;
    while out.len() < count && start + window_len <= codes.len() {
        let slice = &codes[start..start + window_len];
        match slice.iter().rposition(|&c| c == INVALID_BASE) {
            None => {
                let symbols = slice.iter().map(|&c| Symbol::from(c)).collect();
                out.push(DnaWindow {
                    start,
                    text: Text::new(Alphabet::DNA, symbols)?,
                });
                start += window_len;
            }
            Some(bad) => match policy {
                StridePolicy::Resync => start += bad + 1,
                StridePolicy::Grid => start += window_len,
            },
        }
    }
    Ok(out)
}
