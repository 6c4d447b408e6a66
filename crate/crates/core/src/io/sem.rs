//! Text format for partial-domain images and structuring elements:
//!
//! ```text
//! SEM <rows> <cols> <origin_row> <origin_col> <maxval>
//! <rows x cols tokens: an integer in [0, maxval] or `.` for no pixel>
//! ```
//!
//! Token `(r, c)` is the pixel at `(r - origin_row, c - origin_col)`.
//! `#` starts a comment that runs to the end of the line.

use crate::error::{MorphError, Result};
use crate::grid::{GreyImage, Point, Window};

fn format_err(msg: impl Into<String>) -> MorphError {
    MorphError::Format(msg.into())
}

pub fn read_sem(text: &str) -> Result<GreyImage> {
    let mut tokens = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(str::split_whitespace);
    if tokens.next() != Some("SEM") {
        return Err(format_err("SEM: missing header"));
    }
    let mut field = |what: &str| -> Result<i64> {
        let tok = tokens.next().ok_or_else(|| format_err(format!("SEM: missing {what}")))?;
        tok.parse().map_err(|_| format_err(format!("SEM: bad {what} {tok:?}")))
    };
    let rows = field("rows")?;
    let cols = field("cols")?;
    let or = field("origin_row")?;
    let oc = field("origin_col")?;
    let maxval = field("maxval")?;
    if rows <= 0 || cols <= 0 {
        return Err(format_err("SEM: rows and cols must be positive"));
    }
    if !(0..rows).contains(&or) || !(0..cols).contains(&oc) {
        return Err(format_err(format!("SEM: origin ({or},{oc}) outside {rows}x{cols}")));
    }
    if !(1..i64::from(u32::MAX)).contains(&maxval) {
        return Err(format_err(format!("SEM: bad maxval {maxval}")));
    }
    let body: Vec<&str> = tokens.collect();
    if body.len() as i64 != rows * cols {
        return Err(format_err(format!(
            "SEM: expected {} tokens, found {}",
            rows * cols,
            body.len()
        )));
    }
    let mut pixels = Vec::new();
    for (i, tok) in body.iter().enumerate() {
        if *tok == "." {
            continue;
        }
        let v: i64 = tok.parse().map_err(|_| format_err(format!("SEM: bad token {tok:?}")))?;
        if !(0..=maxval).contains(&v) {
            return Err(format_err(format!("SEM: value {v} outside [0, {maxval}]")));
        }
        let (r, c) = (i as i64 / cols, i as i64 % cols);
        pixels.push((Point::from([r - or, c - oc]), v as u32));
    }
    GreyImage::from_pixels(2, maxval as u32, pixels)
}

/// Writes the bounding box of the domain widened to contain the origin.
pub fn write_sem(f: &GreyImage) -> Result<String> {
    if f.dim() != 2 {
        return Err(format_err(format!("SEM needs a 2-D image, got {}-D", f.dim())));
    }
    let origin = Point::origin(2);
    let frame = match f.bounding_box() {
        None => Window::new(origin.clone(), origin)?,
        Some(b) => {
            let lo: Vec<i64> = b.min().coords().iter().map(|&c| c.min(0)).collect();
            let hi: Vec<i64> = b.max().coords().iter().map(|&c| c.max(0)).collect();
            Window::new(Point::new(&lo), Point::new(&hi))?
        }
    };
    let (lo, hi) = (frame.min().coords(), frame.max().coords());
    let mut out = format!(
        "SEM {} {} {} {} {}\n",
        hi[0] - lo[0] + 1,
        hi[1] - lo[1] + 1,
        -lo[0],
        -lo[1],
        f.ceiling()
    );
    for r in lo[0]..=hi[0] {
        let row: Vec<String> = (lo[1]..=hi[1])
            .map(|c| f.get(&Point::from([r, c])).map_or(".".to_string(), |v| v.to_string()))
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_holes_and_origin() {
        let f = read_sem("SEM 2 3 1 1 15 # k\n. 4 .\n1 0 2\n").unwrap();
        assert_eq!(f.ceiling(), 15);
        assert_eq!(f.len(), 4);
        assert_eq!(f.get(&Point::from([-1, 0])), Some(4));
        assert_eq!(f.get(&Point::from([0, 0])), Some(0));
        assert_eq!(f.get(&Point::from([-1, -1])), None);
    }

    #[test]
    fn roundtrip_away_from_origin() {
        let f = GreyImage::from_pixels(2, 99, [(Point::from([3, 5]), 9), (Point::from([4, 7]), 0)]).unwrap();
        let text = write_sem(&f).unwrap();
        assert!(text.starts_with("SEM 5 8 0 0 99\n"));
        assert_eq!(read_sem(&text).unwrap(), f);
        assert_eq!(write_sem(&read_sem(&text).unwrap()).unwrap(), text);
    }

    #[test]
    fn empty_image_roundtrips() {
        let e = GreyImage::empty(2, 7).unwrap();
        assert_eq!(write_sem(&e).unwrap(), "SEM 1 1 0 0 7\n.\n");
        assert_eq!(read_sem(&write_sem(&e).unwrap()).unwrap(), e);
    }

    #[test]
    fn rejects_malformed() {
        assert!(read_sem("SEM 2 2 0 0 9\n1 2 3\n").is_err());
        assert!(read_sem("SEM 2 2 2 0 9\n1 2 3 4\n").is_err());
        assert!(read_sem("SEM 1 1 0 0 9\n10\n").is_err());
        assert!(read_sem("PGM 1 1 0 0 9\n1\n").is_err());
    }
}
