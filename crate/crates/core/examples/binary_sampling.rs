//! The set version: sample a binary image and reconstruct it by closing
//! or dilating the samples.

use morphsample::binary_morph::{bclose, bdilate, centered_box};
use morphsample::grid::restrict_binary;
use morphsample::io::write_sem;
use morphsample::sampling::{check_binary_sampling, validate_binary_conditions};
use morphsample::{BinaryImage, GreyImage, Point, Sieve};

fn show(label: &str, a: &BinaryImage) {
    println!("{label}\n{}", write_sem(&GreyImage::constant(a, 1, 1).unwrap()).unwrap());
}

fn main() -> morphsample::Result<()> {
    let s = Sieve::new(&[2, 2])?;
    let k = centered_box(2, 1);
    println!("{}", validate_binary_conditions(&k, &s));

    let disc = BinaryImage::from_points(
        2,
        (0..11i64).flat_map(|r| (0..11i64).map(move |c| Point::new(&[r, c]))).filter(|p| {
            let (r, c) = (p.coords()[0] - 5, p.coords()[1] - 5);
            r * r + c * c <= 16
        }),
    )?;
    let fs = restrict_binary(&disc, &s);
    show("F", &disc);
    show("F sampled", &fs);
    show("closing of the samples (smallest reconstruction)", &bclose(&fs, &k)?);
    show("dilation of the samples (largest reconstruction)", &bdilate(&fs, &k)?);
    for r in check_binary_sampling(&disc, &k, &s)? {
        println!("{}", r.line());
    }
    Ok(())
}
