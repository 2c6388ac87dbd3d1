//! Binary container for texts and patterns.
//!
//! ```text
//! offset  size  field
//! 0       4     magic "PMTX"
//! 4       1     version (0x01)
//! 5       4     alphabet size σ, little-endian u32
//! 9       1     symbol width in bytes: 1 if σ <= 256, else 2
//! 10      8     symbol count, little-endian u64
//! 18      ...   symbols, each `width` bytes little-endian
//! ```

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::symbols::{Alphabet, Pattern, Symbol, Text};

pub const MAGIC: &[u8; 4] = b"PMTX";
pub const VERSION: u8 = 0x01;
pub const HEADER_LEN: usize = 18;

/// Symbol width mandated for an alphabet.
pub fn symbol_width(alphabet: Alphabet) -> u8 {
    if alphabet.size() <= 256 {
        1
    } else {
        2
    }
}

pub fn write_symbols<W: Write>(mut w: W, alphabet: Alphabet, symbols: &[Symbol]) -> Result<()> {
    let width = symbol_width(alphabet);
    let mut header = [0u8; HEADER_LEN];
    header[..4].copy_from_slice(MAGIC);
    header[4] = VERSION;
    header[5..9].copy_from_slice(&alphabet.size().to_le_bytes());
    header[9] = width;
    header[10..18].copy_from_slice(&(symbols.len() as u64).to_le_bytes());
    w.write_all(&header)?;

    let payload: Vec<u8> = if width == 1 {
        symbols.iter().map(|&s| s as u8).collect()
    } else {
        symbols.iter().flat_map(|s| s.to_le_bytes()).collect()
    };
    w.write_all(&payload)?;
    w.flush()?;
    Ok(())
}

pub fn read_symbols<R: Read>(mut r: R) -> Result<(Alphabet, Vec<Symbol>)> {
    let mut header = [0u8; HEADER_LEN];
    r.read_exact(&mut header)
        .map_err(|e| Error::format(format!("truncated header: {e}")))?;
    if &header[..4] != MAGIC {
        return Err(Error::format("bad magic, expected \"PMTX\""));
    }
    if header[4] != VERSION {
        return Err(Error::format(format!(
            "unsupported version {:#04x}",
            header[4]
        )));
    }
    let sigma = u32::from_le_bytes(header[5..9].try_into().unwrap());
    let alphabet = Alphabet::new(sigma).map_err(|e| Error::format(e.to_string()))?;
    let width = header[9];
    if width != symbol_width(alphabet) {
        return Err(Error::format(format!(
            "symbol width {width} does not match alphabet size {sigma}"
        )));
    }
    let len = u64::from_le_bytes(header[10..18].try_into().unwrap());
    let len = usize::try_from(len).map_err(|_| Error::format("length overflows usize"))?;

    let mut payload = Vec::new();
    r.read_to_end(&mut payload)?;
    let expected = len
        .checked_mul(width as usize)
        .ok_or_else(|| Error::format("length overflows usize"))?;
    if payload.len() != expected {
        return Err(Error::format(format!(
            "payload has {} bytes, header promises {expected}",
            payload.len()
        )));
    }
    let symbols: Vec<Symbol> = if width == 1 {
        payload.iter().map(|&b| Symbol::from(b)).collect()
    } else {
        payload
            .chunks_exact(2)
            .map(|c| Symbol::from_le_bytes([c[0], c[1]]))
            .collect()
    };
    if let Some(bad) = symbols.iter().find(|&&s| !alphabet.contains(s)) {
        return Err(Error::format(format!(
            "symbol {bad} outside alphabet of size {sigma}"
        )));
    }
    Ok((alphabet, symbols))
}

pub fn write_text(path: &Path, text: &Text) -> Result<()> {
    let f = BufWriter::new(File::create(path)?);
    write_symbols(f, text.alphabet(), text.symbols())
}

pub fn read_text(path: &Path) -> Result<Text> {
    let (alphabet, symbols) = read_symbols(BufReader::new(File::open(path)?))?;
    Text::new(alphabet, symbols)
}

pub fn write_pattern(path: &Path, pattern: &Pattern) -> Result<()> {
    let f = BufWriter::new(File::create(path)?);
    write_symbols(f, pattern.alphabet(), pattern.symbols())
}

pub fn read_pattern(path: &Path) -> Result<Pattern> {
    let (alphabet, symbols) = read_symbols(BufReader::new(File::open(path)?))?;
    if symbols.is_empty() {
        return Err(Error::format("pattern file holds zero symbols"));
    }
    Pattern::new(alphabet, symbols)
}
