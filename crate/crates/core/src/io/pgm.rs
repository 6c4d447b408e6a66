//! Netpbm greymaps. `maxval` becomes the image ceiling; pixel `(r, c)` is
//! row `r`, column `c` counted from the top-left corner.

use crate::error::{MorphError, Result};
use crate::grid::{GreyImage, Point};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PgmEncoding {
    /// P2
    Plain,
    /// P5
    Raw,
}

fn format_err(msg: impl Into<String>) -> MorphError {
    MorphError::Format(msg.into())
}

struct Header<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Header<'a> {
    fn skip_space(&mut self) {
        while self.pos < self.bytes.len() {
            match self.bytes[self.pos] {
                b'#' => {
                    while self.pos < self.bytes.len() && self.bytes[self.pos] != b'\n' {
                        self.pos += 1;
                    }
                }
                b if b.is_ascii_whitespace() => self.pos += 1,
                _ => break,
            }
        }
    }

    fn token(&mut self) -> Option<&'a [u8]> {
        self.skip_space();
        let start = self.pos;
        while self.pos < self.bytes.len() && !self.bytes[self.pos].is_ascii_whitespace() && self.bytes[self.pos] != b'#' {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.bytes[start..self.pos])
    }

    fn number(&mut self, what: &str) -> Result<u64> {
        let tok = self.token().ok_or_else(|| format_err(format!("PGM: missing {what}")))?;
        std::str::from_utf8(tok)
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| format_err(format!("PGM: bad {what} {:?}", String::from_utf8_lossy(tok))))
    }
}

/// Parses a P2 or P5 greymap into a full-rectangle image.
pub fn read_pgm(bytes: &[u8]) -> Result<GreyImage> {
    let mut h = Header { bytes, pos: 0 };
    let encoding = match h.token() {
        Some(b"P2") => PgmEncoding::Plain,
        Some(b"P5") => PgmEncoding::Raw,
        _ => return Err(format_err("PGM: expected magic P2 or P5")),
    };
    let width = h.number("width")? as usize;
    let height = h.number("height")? as usize;
    let maxval = h.number("maxval")?;
    if width == 0 || height == 0 {
        return Err(format_err("PGM: zero width or height"));
    }
    if !(1..=65535).contains(&maxval) {
        return Err(format_err(format!("PGM: maxval {maxval} outside 1..=65535")));
    }
    let n = width * height;
    let values: Vec<u64> = match encoding {
        PgmEncoding::Plain => (0..n).map(|_| h.number("sample")).collect::<Result<_>>()?,
        PgmEncoding::Raw => {
            // exactly one whitespace byte separates maxval from the raster
            let start = h.pos + 1;
            let wide = maxval > 255;
            let need = n * if wide { 2 } else { 1 };
            let data = bytes
                .get(start..start + need)
                .ok_or_else(|| format_err(format!("PGM: raster truncated, need {need} bytes")))?;
            if wide {
                data.chunks_exact(2).map(|p| u64::from(u16::from_be_bytes([p[0], p[1]]))).collect()
            } else {
                data.iter().map(|&b| u64::from(b)).collect()
            }
        }
    };
    if let Some(v) = values.iter().find(|&&v| v > maxval) {
        return Err(format_err(format!("PGM: sample {v} exceeds maxval {maxval}")));
    }
    let pixels = values.into_iter().enumerate().map(|(i, v)| {
        (Point::from([(i / width) as i64, (i % width) as i64]), v as u32)
    });
    GreyImage::from_pixels(2, maxval as u32, pixels)
}

/// Serializes a 2-D image whose domain is a full rectangle, placing the
/// bounding-box minimum at the top-left corner.
pub fn write_pgm(f: &GreyImage, encoding: PgmEncoding) -> Result<Vec<u8>> {
    if f.dim() != 2 {
        return Err(format_err(format!("PGM needs a 2-D image, got {}-D", f.dim())));
    }
    let bbox = f.bounding_box().ok_or_else(|| format_err("PGM cannot hold an empty image"))?;
    if bbox.len() != f.len() {
        return Err(format_err("PGM needs a full rectangular domain; use SEM for partial domains"));
    }
    let maxval = f.ceiling();
    if maxval > 65535 {
        return Err(format_err(format!("PGM maxval {maxval} exceeds 65535")));
    }
    let (rows, cols) = (
        (bbox.max().coords()[0] - bbox.min().coords()[0] + 1) as usize,
        (bbox.max().coords()[1] - bbox.min().coords()[1] + 1) as usize,
    );
    let magic = match encoding {
        PgmEncoding::Plain => "P2",
        PgmEncoding::Raw => "P5",
    };
    let mut out = format!("{magic}\n{cols} {rows}\n{maxval}\n").into_bytes();
    let values: Vec<u32> = f.iter().map(|(_, v)| v).collect();
    match encoding {
        PgmEncoding::Plain => {
            for row in values.chunks(cols) {
                let line: Vec<String> = row.iter().map(u32::to_string).collect();
                out.extend_from_slice(line.join(" ").as_bytes());
                out.push(b'\n');
            }
        }
        PgmEncoding::Raw if maxval > 255 => {
            for v in values {
                out.extend_from_slice(&(v as u16).to_be_bytes());
            }
        }
        PgmEncoding::Raw => out.extend(values.into_iter().map(|v| v as u8)),
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_with_comments() {
        let f = read_pgm(b"P2\n# hi\n3 2\n# depth\n9\n1 2 3\n4 5 9\n").unwrap();
        assert_eq!(f.ceiling(), 9);
        assert_eq!(f.get(&Point::from([1, 2])), Some(9));
        assert_eq!(f.get(&Point::from([0, 1])), Some(2));
        assert_eq!(f.len(), 6);
    }

    #[test]
    fn raw_roundtrip_eight_and_sixteen_bit() {
        for maxval in [255u32, 1000] {
            let px = (0..12).map(|i| (Point::from([i / 4, i % 4]), (i as u32 * 83) % (maxval + 1)));
            let f = GreyImage::from_pixels(2, maxval, px).unwrap();
            let bytes = write_pgm(&f, PgmEncoding::Raw).unwrap();
            assert_eq!(read_pgm(&bytes).unwrap(), f);
            let text = write_pgm(&f, PgmEncoding::Plain).unwrap();
            assert_eq!(read_pgm(&text).unwrap(), f);
        }
    }

    #[test]
    fn raw_header_is_byte_exact() {
        let f = GreyImage::from_pixels(2, 255, [(Point::from([0, 0]), 7), (Point::from([0, 1]), 200)]).unwrap();
        assert_eq!(write_pgm(&f, PgmEncoding::Raw).unwrap(), b"P5\n2 1\n255\n\x07\xc8".to_vec());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(read_pgm(b"P3\n1 1\n1\n0").is_err());
        assert!(read_pgm(b"P2\n2 1\n5\n1 6\n").is_err());
        assert!(read_pgm(b"P5\n2 2\n255\n\x01").is_err());
        let holey = GreyImage::from_pixels(2, 9, [(Point::from([0, 0]), 1), (Point::from([1, 1]), 1)]).unwrap();
        assert!(write_pgm(&holey, PgmEncoding::Raw).is_err());
    }
}
