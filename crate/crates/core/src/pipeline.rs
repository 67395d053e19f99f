//! A two-pass compressor: the transform followed by move-to-front and
//! run-length coding. No entropy coder; the point is to show the transform
//! gathering equal letters into runs.
//!
//! Container layout: `"BWGR1"`, `n` as u64 LE, rotation offset as u64 LE,
//! then the run-length payload of the move-to-front stream as
//! `(symbol byte, count as unsigned LEB128 varint)` pairs.

use crate::bwt::{
    bwt_transform, invert_bwt, read_header_fields, write_header_fields, BwtContainer,
};
use crate::error::{Error, Result};
use crate::words::Word;

const MAGIC: &[u8; 5] = b"BWGR1";

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MtfStream {
    indices: Vec<u8>,
}

impl MtfStream {
    pub fn from_indices(indices: &[usize]) -> Result<Self> {
        let indices = indices
            .iter()
            .map(|&i| u8::try_from(i).map_err(|_| Error::MtfIndex(i)))
            .collect::<Result<_>>()?;
        Ok(MtfStream { indices })
    }

    pub fn indices(&self) -> &[u8] {
        &self.indices
    }
}

/// Move-to-front with the table initialised to `0, 1, ..., 255`.
pub fn mtf_encode(x: &[u8]) -> MtfStream {
    let mut table: [u8; 256] = std::array::from_fn(|i| i as u8);
    let indices = x
        .iter()
        .map(|&b| {
            let pos = table
                .iter()
                .position(|&t| t == b)
                .expect("table holds every byte");
            table.copy_within(0..pos, 1);
            table[0] = b;
            pos as u8
        })
        .collect();
    MtfStream { indices }
}

pub fn mtf_decode(s: &MtfStream) -> Vec<u8> {
    let mut table: [u8; 256] = std::array::from_fn(|i| i as u8);
    s.indices
        .iter()
        .map(|&i| {
            let pos = i as usize;
            let b = table[pos];
            table.copy_within(0..pos, 1);
            table[0] = b;
            b
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Run {
    pub symbol: u8,
    pub count: u64,
}

/// Maximal runs of a byte sequence.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RleStream {
    pub runs: Vec<Run>,
}

impl RleStream {
    pub fn len(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.runs.len() * 2);
        for run in &self.runs {
            out.push(run.symbol);
            write_varint(&mut out, run.count);
        }
        out
    }

    /// Parses `(symbol, varint)` pairs. Rejects zero counts and adjacent
    /// runs of the same symbol, so only canonical encodings are accepted.
    pub fn from_bytes(mut bytes: &[u8]) -> Result<Self> {
        let mut runs: Vec<Run> = Vec::new();
        while let Some((&symbol, rest)) = bytes.split_first() {
            let (count, rest) = read_varint(rest)?;
            if count == 0 {
                return Err(Error::ZeroRun);
            }
            if runs.last().is_some_and(|r| r.symbol == symbol) {
                return Err(Error::Malformed("adjacent runs share a symbol".into()));
            }
            runs.push(Run { symbol, count });
            bytes = rest;
        }
        Ok(RleStream { runs })
    }
}

pub fn rle_encode(x: &[u8]) -> RleStream {
    let mut runs: Vec<Run> = Vec::new();
    for &b in x {
        match runs.last_mut() {
            Some(run) if run.symbol == b => run.count += 1,
            _ => runs.push(Run {
                symbol: b,
                count: 1,
            }),
        }
    }
    RleStream { runs }
}

pub fn rle_decode(s: &RleStream) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    for run in &s.runs {
        if run.count == 0 {
            return Err(Error::ZeroRun);
        }
        out.extend(std::iter::repeat_n(run.symbol, run.count as usize));
    }
    Ok(out)
}

fn write_varint(out: &mut Vec<u8>, mut v: u64) {
    while v >= 0x80 {
        out.push((v as u8 & 0x7f) | 0x80);
        v >>= 7;
    }
    out.push(v as u8);
}

fn read_varint(bytes: &[u8]) -> Result<(u64, &[u8])> {
    let mut v = 0u64;
    for (i, &b) in bytes.iter().enumerate() {
        let shift = 7 * i as u32;
        if shift >= 64 || (shift == 63 && b > 1) {
            return Err(Error::Malformed("varint overflows u64".into()));
        }
        v |= u64::from(b & 0x7f) << shift;
        if b & 0x80 == 0 {
            return Ok((v, &bytes[i + 1..]));
        }
    }
    Err(Error::Malformed("truncated varint".into()))
}

pub fn compress(w: &[u8]) -> Result<Vec<u8>> {
    let container = bwt_transform(w)?;
    let payload = rle_encode(mtf_encode(&container.last_column).indices()).to_bytes();
    let mut out = Vec::with_capacity(5 + 16 + payload.len());
    out.extend_from_slice(MAGIC);
    write_header_fields(
        &mut out,
        container.last_column.len(),
        container.rotation_offset,
    );
    out.extend_from_slice(&payload);
    Ok(out)
}

pub fn decompress(bytes: &[u8]) -> Result<Word> {
    let rest = bytes
        .strip_prefix(MAGIC)
        .ok_or_else(|| Error::Malformed("missing BWGR1 magic".into()))?;
    let (n, offset, payload) = read_header_fields(rest)?;
    let runs = RleStream::from_bytes(payload)?;
    let total: u64 = runs.runs.iter().map(|r| r.count).sum();
    if total != n as u64 {
        return Err(Error::Malformed(format!(
            "header declares {n} symbols, payload has {total}"
        )));
    }
    let indices = rle_decode(&runs)?;
    let last_column = Word::from(mtf_decode(&MtfStream { indices }));
    invert_bwt(&BwtContainer {
        last_column,
        rotation_offset: offset,
    })
}

/// Number of maximal runs in `x`.
pub fn run_count(x: &[u8]) -> usize {
    rle_encode(x).len()
}
