//! Strided max pooling as "dilate then sample", its adjoint, and the
//! reconstructions built from them.

use morphsample::builtin;
use morphsample::grid::le;
use morphsample::io::write_sem;
use morphsample::pooling::{adjunction_check, delta, h2_relations, reconstruction_bounds, rho, sigma, sigma_dot};
use morphsample::sampling::FilterSpec;
use morphsample::{GreyImage, Point, Sieve};

fn main() -> morphsample::Result<()> {
    let l = 255;
    // 3x3 window, stride 2.
    let spec = FilterSpec::new(builtin::flat3(l), Sieve::new(&[2, 2])?)?;
    let f = GreyImage::from_pixels(
        2,
        l,
        (0..6i64).flat_map(|r| (0..6i64).map(move |c| (Point::new(&[r, c]), ((r * 5 + c * 11) % 17) as u32))),
    )?;

    let pooled = sigma(&f, &spec)?;
    println!("sigma(f)\n{}", write_sem(&pooled)?);
    println!("sigma-dot(sigma(f))\n{}", write_sem(&sigma_dot(&pooled, &spec)?)?);
    let r = rho(&f, &spec)?;
    let d = delta(&f, &spec)?;
    println!("rho(f)\n{}delta(f)\n{}", write_sem(&r)?, write_sem(&d)?);
    assert!(le(&f, &r)?);

    // sigma(f) <= g  iff  f <= sigma-dot(g), here with g = sigma(f) + 1.
    let g = pooled.map_values(|_, v| i64::from(v) + 1);
    println!("adjunction holds for (f, g): {}", adjunction_check(&f, &g, &spec)?);

    let c = builtin::c2(l).map_values(|_, _| 0);
    for res in reconstruction_bounds(&f, &spec)?.iter().chain(h2_relations(&f, &c, &spec)?.iter()) {
        println!("{}", res.line());
    }
    Ok(())
}
