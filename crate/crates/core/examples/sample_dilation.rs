//! Dilating or eroding on the sampled lattice gives the same samples as
//! working at full resolution on a reconstruction.

use morphsample::builtin;
use morphsample::grey_morph::{gclose, gdilate, gerode, gopen};
use morphsample::grid::restrict;
use morphsample::io::write_sem;
use morphsample::sampling::{sampled_grey, FilterSpec, SampledOp};
use morphsample::{GreyImage, Point, Sieve};

fn main() -> morphsample::Result<()> {
    let l = 255;
    let spec = FilterSpec::new(builtin::k2(l), Sieve::new(&[2, 2])?)?;
    let (k, s) = (spec.k(), spec.sieve());
    // The filter only commutes with sampling for elements it leaves unchanged.
    let b = gopen(&builtin::b2(l), k)?;

    let f = GreyImage::from_pixels(
        2,
        l,
        (0..12i64).flat_map(|r| (0..12i64).map(move |c| (Point::new(&[r, c]), ((r * 13 + c * 29) % 50) as u32))),
    )?;
    let fs = restrict(&f, s);
    let bs = restrict(&b, s);

    let dil = sampled_grey(SampledOp::Dilate, &fs, &bs, s)?;
    let rhs = restrict(&gdilate(&gclose(&fs, k)?, &b)?, s);
    println!("sampled dilation\n{}", write_sem(&dil)?);
    assert_eq!(write_sem(&dil)?, write_sem(&rhs)?);

    let ero = sampled_grey(SampledOp::Erode, &fs, &bs, s)?;
    let rhs = restrict(&gerode(&gdilate(&fs, k)?, &b)?, s);
    assert_eq!(write_sem(&ero)?, write_sem(&rhs)?);
    println!("both pairs are byte-identical");

    // Sampling the full-resolution dilation only bounds the sampled one.
    let direct = restrict(&gdilate(&f, &b)?, s);
    let differ = direct.iter().filter(|(p, v)| dil.get(p) != Some(*v)).count();
    println!("sample of the full dilation differs at {differ} of {} sieve points", direct.len());
    Ok(())
}
