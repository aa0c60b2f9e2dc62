//! State-file serialization.
//!
//! The binary "QSV1" format is little-endian: the 4 magic bytes `QSV1`, a
//! u32 qubit count, a u64 amplitude count (= 2^n), then the amplitudes as
//! consecutive IEEE-754 f64 (real, imaginary) pairs; amplitude k starts at
//! byte offset `16 + 16·k`. Save followed by load round-trips bit-exactly.
//!
//! A plain-text alternative is accepted on load for hand-written fixtures:
//! a header line `n=<n>`, then one `index,re,im` line per nonzero amplitude.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use byteorder::{LittleEndian, ReadBytesExt, WriteBytesExt};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::state::{PureState, MAX_QUBITS};

pub const QSV_MAGIC: &[u8; 4] = b"QSV1";

/// Norm tolerance applied on load: |Σ|z|² − 1| ≤ 1e-9. Looser than the
/// construction tolerance so that fixtures written with fewer digits load.
pub const LOAD_NORM_TOLERANCE: f64 = 1e-9;

/// Write `state` in QSV1 binary form.
pub fn write_qsv<W: Write + ?Sized>(state: &PureState, writer: &mut W) -> Result<()> {
    writer.write_all(QSV_MAGIC)?;
    writer.write_u32::<LittleEndian>(state.qubit_count())?;
    writer.write_u64::<LittleEndian>(state.dim() as u64)?;
    for z in state.amplitudes() {
        writer.write_f64::<LittleEndian>(z.re)?;
        writer.write_f64::<LittleEndian>(z.im)?;
    }
    Ok(())
}

/// Save `state` to `path` in QSV1 binary form.
pub fn save_state(state: &PureState, path: impl AsRef<Path>) -> Result<()> {
    let mut writer = BufWriter::new(File::create(path)?);
    write_qsv(state, &mut writer)?;
    writer.flush()?;
    Ok(())
}

/// Read a state in either QSV1 binary or plain-text form, validating the
/// length and normalization invariants.
pub fn read_state<R: Read>(reader: &mut R) -> Result<PureState> {
    let mut head = Vec::with_capacity(4);
    let mut byte = [0u8; 1];
    while head.len() < 4 {
        match reader.read(&mut byte)? {
            0 => break,
            _ => head.push(byte[0]),
        }
    }
    if head.as_slice() == QSV_MAGIC {
        read_binary(reader)
    } else if head.starts_with(b"n=") || head.starts_with(b"n =") {
        read_text(BufReader::new(head.as_slice().chain(reader)))
    } else {
        Err(Error::format(
            "malformed header: expected QSV1 magic bytes or a text header line \"n=<n>\"",
        ))
    }
}

/// Load a state from `path`.
pub fn load_state(path: impl AsRef<Path>) -> Result<PureState> {
    let mut reader = BufReader::new(File::open(path)?);
    read_state(&mut reader)
}

fn check_norm(amplitudes: &[Complex64]) -> Result<()> {
    let norm_sq: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
    if (norm_sq - 1.0).abs() > LOAD_NORM_TOLERANCE {
        return Err(Error::format(format!(
            "normalization: |Σ|z|² − 1| = {:e} exceeds {LOAD_NORM_TOLERANCE:e}",
            (norm_sq - 1.0).abs()
        )));
    }
    Ok(())
}

fn read_binary<R: Read>(reader: &mut R) -> Result<PureState> {
    let truncated = |e: std::io::Error| {
        if e.kind() == std::io::ErrorKind::UnexpectedEof {
            Error::format("length mismatch: file truncated inside the header")
        } else {
            Error::Io(e)
        }
    };
    let n = reader.read_u32::<LittleEndian>().map_err(truncated)?;
    if !(1..=MAX_QUBITS).contains(&n) {
        return Err(Error::format(format!(
            "unsupported qubit count {n}, expected 1..={MAX_QUBITS}"
        )));
    }
    let count = reader.read_u64::<LittleEndian>().map_err(truncated)?;
    let dim = 1u64 << n;
    if count != dim {
        return Err(Error::format(format!(
            "length mismatch: header claims {count} amplitudes for n = {n}, expected {dim}"
        )));
    }
    let mut raw = vec![0f64; 2 * dim as usize];
    reader
        .read_f64_into::<LittleEndian>(&mut raw)
        .map_err(|e| {
            if e.kind() == std::io::ErrorKind::UnexpectedEof {
                Error::format(format!(
                    "length mismatch: file truncated before {dim} amplitudes were read"
                ))
            } else {
                Error::Io(e)
            }
        })?;
    if reader.read(&mut [0u8; 1])? != 0 {
        return Err(Error::format(format!(
            "length mismatch: trailing data after {dim} amplitudes"
        )));
    }
    let amplitudes: Vec<Complex64> = raw
        .chunks_exact(2)
        .map(|pair| Complex64::new(pair[0], pair[1]))
        .collect();
    check_norm(&amplitudes)?;
    PureState::from_loaded(n, amplitudes)
}

fn read_text<R: BufRead>(reader: R) -> Result<PureState> {
    let mut lines = reader
        .lines()
        .map(|line| line.map_err(Error::Io))
        .filter(|line| !matches!(line, Ok(l) if l.trim().is_empty()));

    let header = lines
        .next()
        .ok_or_else(|| Error::format("malformed header: empty file"))??;
    let n: u32 = header
        .trim()
        .strip_prefix("n=")
        .or_else(|| header.trim().strip_prefix("n ="))
        .map(str::trim)
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| {
            Error::format(format!("malformed header: expected \"n=<n>\", got {header:?}"))
        })?;
    if !(1..=MAX_QUBITS).contains(&n) {
        return Err(Error::format(format!(
            "unsupported qubit count {n}, expected 1..={MAX_QUBITS}"
        )));
    }
    let dim = 1u64 << n;
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim as usize];
    let mut seen = vec![false; dim as usize];
    for line in lines {
        let line = line?;
        let fields: Vec<&str> = line.trim().split(',').map(str::trim).collect();
        if fields.len() != 3 {
            return Err(Error::format(format!(
                "malformed amplitude line, expected \"index,re,im\": {line:?}"
            )));
        }
        let index: u64 = fields[0]
            .parse()
            .map_err(|_| Error::format(format!("bad amplitude index {:?}", fields[0])))?;
        if index >= dim {
            return Err(Error::format(format!(
                "length mismatch: index {index} out of range for n = {n}"
            )));
        }
        if seen[index as usize] {
            return Err(Error::format(format!("duplicate amplitude for index {index}")));
        }
        seen[index as usize] = true;
        let re: f64 = fields[1]
            .parse()
            .map_err(|_| Error::format(format!("bad real part {:?}", fields[1])))?;
        let im: f64 = fields[2]
            .parse()
            .map_err(|_| Error::format(format!("bad imaginary part {:?}", fields[2])))?;
        amplitudes[index as usize] = Complex64::new(re, im);
    }
    check_norm(&amplitudes)?;
    PureState::from_loaded(n, amplitudes)
}
