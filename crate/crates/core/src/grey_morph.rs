//! Grey-value morphology with flat and non-flat structuring elements.
//!
//! A structuring element is an ordinary [`GreyImage`] with a small domain.
//! Dilation saturates at the ceiling `l`. Erosion is the top surface of the
//! eroded umbra: a candidate `x` in `F (-) K` whose raw minimum
//! `min f(x+u) - k(u)` is negative has an empty column and drops out of the
//! domain. [`gerode_clamped`] is the variant that keeps such pixels at 0.

use crate::binary_morph::{bdilate, berode};
use crate::error::{MorphError, Result};
use crate::grid::{reflect, BinaryImage, GreyImage, Point, Raster, Window};
use crate::kernel;
use crate::umbra::{top_surface, umbra, umbra_reflect, umbra_translate, UmbraSet};

fn check_pair(f: &GreyImage, k: &GreyImage) -> Result<()> {
    if f.dim() != k.dim() {
        return Err(MorphError::DimensionMismatch {
            expected: f.dim(),
            found: k.dim(),
        });
    }
    if f.ceiling() != k.ceiling() {
        return Err(MorphError::CeilingMismatch {
            left: f.ceiling(),
            right: k.ceiling(),
        });
    }
    if k.is_empty() {
        return Err(MorphError::EmptyStructuringElement);
    }
    Ok(())
}

/// `(f (+) k)(x) = min(l, max_{u in K, x-u in F} f(x-u) + k(u))` on `F (+) K`.
pub fn gdilate(f: &GreyImage, k: &GreyImage) -> Result<GreyImage> {
    check_pair(f, k)?;
    let raster = kernel::dilate_grey(&f.raster, &k.raster, f.ceiling());
    Ok(GreyImage::from_raster(raster, f.ceiling()))
}

/// `(f (-) k)(x) = min_{u in K} f(x+u) - k(u)` where that is non-negative.
pub fn gerode(f: &GreyImage, k: &GreyImage) -> Result<GreyImage> {
    erode_with(f, k, |m| (m >= 0).then_some(m as u32))
}

/// `max(0, min_{u in K} f(x+u) - k(u))` on all of `F (-) K`.
pub fn gerode_clamped(f: &GreyImage, k: &GreyImage) -> Result<GreyImage> {
    erode_with(f, k, |m| Some(m.max(0) as u32))
}

fn erode_with(
    f: &GreyImage,
    k: &GreyImage,
    finish: impl Fn(i64) -> Option<u32>,
) -> Result<GreyImage> {
    check_pair(f, k)?;
    let (frame, raw) = kernel::erode_grey_raw(&f.raster, &k.raster);
    let cells = raw
        .into_iter()
        .map(|m| m.and_then(&finish).unwrap_or(u32::MAX))
        .collect();
    let raster = Raster::from_parts(f.dim(), frame, cells);
    Ok(GreyImage::from_raster(raster, f.ceiling()))
}

/// `f o k = (f (-) k) (+) k`.
pub fn gopen(f: &GreyImage, k: &GreyImage) -> Result<GreyImage> {
    gdilate(&gerode(f, k)?, k)
}

/// `f • k = (f (+) k) (-) k`.
pub fn gclose(f: &GreyImage, k: &GreyImage) -> Result<GreyImage> {
    gerode(&gdilate(f, k)?, k)
}

/// `(-f)(x) = l - f(x)`.
pub fn negative(f: &GreyImage) -> GreyImage {
    let l = f.ceiling() as i64;
    f.map_values(|_, v| l - v as i64)
}

/// `f^(x) = f(-x)`.
pub fn reflect_image(f: &GreyImage) -> GreyImage {
    GreyImage::from_pixels(f.dim(), f.ceiling(), f.iter().map(|(p, v)| (-&p, v)))
        .expect("reflection keeps dimension and values")
}

/// Opening as the top surface of the union of all clamped umbra translates
/// `U[k]_(x, y)` that fit inside `U[f]`.
pub fn gopen_oracle(f: &GreyImage, k: &GreyImage) -> Result<GreyImage> {
    check_pair(f, k)?;
    let l = f.ceiling();
    let uf = umbra(f);
    let uk = umbra(k);
    let mut opened = UmbraSet::new(f.dim(), l);
    let (Some(fbox), Some(kbox)) = (f.bounding_box(), k.bounding_box()) else {
        return Ok(top_surface(&opened));
    };
    let Ok(xs) = Window::new(fbox.min() - kbox.min(), fbox.max() - kbox.max()) else {
        return Ok(top_surface(&opened));
    };
    for x in xs.points() {
        for y in 0..=l as i64 {
            let t = umbra_translate(&uk, &x, y)?;
            if t.is_subset(&uf) {
                opened = opened.union(&t);
            }
        }
    }
    Ok(top_surface(&opened))
}

/// Closing from reflected umbra translates: `(x, y)` survives when every
/// `tilde(U[k]_(x0, y0))` containing it meets `U[f]`.
///
/// Heights run over `-l..=l`, with points leaving `[0, l]` dropped as in
/// [`umbra_translate`]; blocking `(x, a)` can need `y0 = l - a - k(u) < 0`.
/// The result equals [`gclose`] wherever `f (+) k` does not saturate.
pub fn gclose_oracle(f: &GreyImage, k: &GreyImage) -> Result<GreyImage> {
    check_pair(f, k)?;
    let l = f.ceiling();
    let dim = f.dim();
    let (Some(region), Some(kbox)) = (bdilate(&f.domain(), &k.domain())?.bounding_box(), k.bounding_box())
    else {
        return GreyImage::empty(dim, l);
    };
    let candidates = region.sum(&kbox.reflect());
    // tilde(A_(x0, y0)) is tilde(A_(0, y0)) shifted by -x0, so the reflected
    // sets are built once per level and kept as (column, lowest value).
    let uk = umbra(k);
    let mut tildes: Vec<Vec<(Point, u32)>> = Vec::with_capacity(2 * l as usize + 1);
    for y0 in -(l as i64)..=l as i64 {
        let shifted = if y0 >= 0 {
            umbra_translate(&uk, &Point::origin(dim), y0)?
        } else {
            let down = uk.iter().filter(|(_, y)| *y as i64 + y0 >= 0);
            UmbraSet::from_points(dim, l, down.map(|(p, y)| (p.clone(), (*y as i64 + y0) as u32)))?
        };
        if shifted.is_empty() {
            continue;
        }
        let t = umbra_reflect(&shifted)?;
        let mut cols: Vec<(Point, u32)> = Vec::new();
        for (p, v) in t.iter() {
            match cols.last() {
                Some((q, _)) if q == p => {}
                _ => cols.push((p.clone(), *v)),
            }
        }
        tildes.push(cols);
    }
    let uf = umbra(f);
    let mut blocked = UmbraSet::new(dim, l);
    for z in candidates.sum(&kbox).points() {
        // z = -x0 is the shift applied to the reflected set.
        for cols in &tildes {
            let meets = cols.iter().any(|(c, lo)| {
                uf.column_top(&(c + &z)).is_some_and(|top| top >= *lo)
            });
            if !meets {
                for (c, lo) in cols {
                    let x = c + &z;
                    if candidates.contains(&x) {
                        for v in *lo..=l {
                            blocked.insert(x.clone(), v)?;
                        }
                    }
                }
            }
        }
    }
    let mut survivors = UmbraSet::new(dim, l);
    for x in candidates.points() {
        for v in 0..=l {
            if !blocked.contains(&x, v) {
                survivors.insert(x.clone(), v)?;
            }
        }
    }
    Ok(top_surface(&survivors))
}

/// Compares `f • k` with `-((-f) o k^)`.
///
/// Both sides agree away from the border of `F`; near it the two finite
/// domains see different neighbourhoods. The comparison therefore runs over
/// `(F (-) K) (-) K^`, and both sides must be defined there.
pub fn closing_duality_check(f: &GreyImage, k: &GreyImage) -> Result<bool> {
    check_pair(f, k)?;
    let lhs = gclose(f, k)?;
    let rhs = negative(&gopen(&negative(f), &reflect_image(k))?);
    let kd = k.domain();
    let interior = berode(&berode(&f.domain(), &kd)?, &reflect(&kd))?;
    let agree = interior.iter().all(|p| match (lhs.get(&p), rhs.get(&p)) {
        (Some(a), Some(b)) => a == b,
        _ => false,
    });
    Ok(agree)
}

/// Flat structuring element: value 0 on `domain`.
pub fn flat(domain: &BinaryImage, ceiling: u32) -> Result<GreyImage> {
    GreyImage::constant(domain, 0, ceiling)
}
