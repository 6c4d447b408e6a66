//! Image files: PGM for full rectangles, SEM for partial domains.

mod pgm;
mod sem;

use std::path::Path;

pub use pgm::{read_pgm, write_pgm, PgmEncoding};
pub use sem::{read_sem, write_sem};

use crate::error::{MorphError, Result};
use crate::grid::GreyImage;

/// Detects the format from the leading magic.
pub fn decode(bytes: &[u8]) -> Result<GreyImage> {
    let head = bytes.iter().position(|b| !b.is_ascii_whitespace()).map_or(&[][..], |i| &bytes[i..]);
    if head.starts_with(b"P2") || head.starts_with(b"P5") {
        read_pgm(head)
    } else {
        let text = std::str::from_utf8(bytes).map_err(|_| MorphError::Format("not a PGM or SEM file".into()))?;
        read_sem(text)
    }
}

pub fn read_image(path: impl AsRef<Path>) -> Result<GreyImage> {
    let path = path.as_ref();
    let bytes = std::fs::read(path).map_err(|e| MorphError::Io(format!("{}: {e}", path.display())))?;
    decode(&bytes)
}

/// `.pgm` paths get raw PGM; everything else gets SEM.
pub fn encode_for(path: &Path, f: &GreyImage) -> Result<Vec<u8>> {
    let is_pgm = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("pgm"));
    if is_pgm {
        write_pgm(f, PgmEncoding::Raw)
    } else {
        write_sem(f).map(String::into_bytes)
    }
}

pub fn write_image(path: impl AsRef<Path>, f: &GreyImage) -> Result<()> {
    let path = path.as_ref();
    let bytes = encode_for(path, f)?;
    std::fs::write(path, bytes).map_err(|e| MorphError::Io(format!("{}: {e}", path.display())))
}
