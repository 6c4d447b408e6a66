//! Reading and writing images: PGM for full rectangles, SEM text for
//! partial domains and structuring elements.

use morphsample::builtin;
use morphsample::io::{decode, read_pgm, read_sem, write_pgm, write_sem, PgmEncoding};
use morphsample::{GreyImage, Point};

fn main() -> morphsample::Result<()> {
    let f = GreyImage::from_pixels(
        2,
        1023,
        (0..3i64).flat_map(|r| (0..4i64).map(move |c| (Point::new(&[r, c]), (r * 300 + c * 41) as u32))),
    )?;
    let plain = write_pgm(&f, PgmEncoding::Plain)?;
    println!("{}", String::from_utf8_lossy(&plain));
    let raw = write_pgm(&f, PgmEncoding::Raw)?;
    println!("raw PGM: {} bytes (16-bit samples)", raw.len());
    assert_eq!(read_pgm(&plain)?, f);
    assert_eq!(decode(&raw)?, f);

    let b2 = builtin::b2(255);
    let text = write_sem(&b2)?;
    println!("b2 as SEM\n{text}");
    assert_eq!(read_sem(&text)?, b2);

    // Partial domains have no PGM form.
    let mut domain = f.domain();
    domain = domain.difference(&morphsample::BinaryImage::from_points(2, [Point::new(&[1, 1])])?);
    let holed = f.restrict_to(&domain);
    println!("{}", write_pgm(&holed, PgmEncoding::Plain).unwrap_err());
    print!("{}", write_sem(&holed)?);
    Ok(())
}
