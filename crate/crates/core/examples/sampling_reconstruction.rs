//! Check a filter against the sampling conditions, sample an image, and
//! bracket the original between the minimal and maximal reconstructions.

use morphsample::builtin;
use morphsample::grey_morph::flat;
use morphsample::binary_morph::centered_box;
use morphsample::grid::restrict;
use morphsample::io::write_sem;
use morphsample::sampling::{check_grey_sampling, compact, max_reconstruct, min_reconstruct, validate_grey_conditions, FilterSpec};
use morphsample::{GreyImage, Point, Sieve};

fn main() -> morphsample::Result<()> {
    let l = 255;
    let s = Sieve::new(&[2, 2])?;

    println!("5x5 box as a filter:\n{}", validate_grey_conditions(&flat(&centered_box(2, 2), l)?, &s));
    println!("k2 as a filter:\n{}", validate_grey_conditions(&builtin::k2(l), &s));

    let spec = FilterSpec::new(builtin::k2(l), s)?;
    // A smooth bump, which survives sampling well.
    let f = GreyImage::from_pixels(
        2,
        l,
        (0..9i64).flat_map(|r| (0..9i64).map(move |c| (Point::new(&[r, c]), (60 - 3 * ((r - 4).pow(2) + (c - 4).pow(2))).max(0) as u32))),
    )?;
    let fs = restrict(&f, spec.sieve());
    let lo = min_reconstruct(&fs, &spec)?;
    let hi = max_reconstruct(&fs, &spec)?;
    println!("samples on the compact lattice\n{}", write_sem(&compact(&fs, spec.sieve())?)?);
    println!("minimal reconstruction\n{}maximal reconstruction\n{}", write_sem(&lo)?, write_sem(&hi)?);

    for r in check_grey_sampling(&f, &spec)? {
        println!("{}", r.line());
    }
    Ok(())
}
