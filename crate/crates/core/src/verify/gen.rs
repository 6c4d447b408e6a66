//! Random inputs. All draws go through a caller-supplied RNG.

use rand::Rng;

use crate::binary_morph::{bclose, bopen};
use crate::error::Result;
use crate::grey_morph::{gclose, gopen};
use crate::grid::{BinaryImage, GreyImage, Point};

/// Generated domains lose between 0 and this many pixels. Few holes keep
/// erosions by 5x5 elements (and their compositions) non-empty.
pub const MAX_HOLES: usize = 3;
pub const FIXPOINT_DRAW_CAP: u32 = 100;

fn hole_mask<R: Rng>(rng: &mut R, rows: usize, cols: usize, holes: bool) -> Vec<bool> {
    let mut mask = vec![false; rows * cols];
    if holes && !mask.is_empty() {
        for _ in 0..rng.gen_range(0..=MAX_HOLES) {
            mask[rng.gen_range(0..rows * cols)] = true;
        }
    }
    mask
}

fn rect_pixels(rows: usize, cols: usize, mask: &[bool]) -> impl Iterator<Item = (usize, Point)> + '_ {
    (0..rows * cols)
        .filter(|&i| !mask[i])
        .map(move |i| (i, Point::from([(i / cols) as i64, (i % cols) as i64])))
}

/// Uniform values in `[0, value_max]` on a `rows x cols` rectangle at the
/// origin, minus up to [`MAX_HOLES`] pixels when `holes` is set.
pub fn random_image<R: Rng>(rng: &mut R, rows: usize, cols: usize, value_max: u32, ceiling: u32, holes: bool) -> Result<GreyImage> {
    random_image_above(rng, rows, cols, 0, value_max, ceiling, holes)
}

/// Like [`random_image`] with values in `[floor, value_max]`, so exact
/// erosions by elements with values up to `floor` are defined everywhere.
pub fn random_image_above<R: Rng>(
    rng: &mut R,
    rows: usize,
    cols: usize,
    floor: u32,
    value_max: u32,
    ceiling: u32,
    holes: bool,
) -> Result<GreyImage> {
    let floor = floor.min(value_max);
    let mask = hole_mask(rng, rows, cols, holes);
    let px: Vec<(Point, u32)> = rect_pixels(rows, cols, &mask)
        .map(|(_, p)| (p, rng.gen_range(floor..=value_max)))
        .collect();
    GreyImage::from_pixels(2, ceiling, px)
}

/// Two to five rectangles, one of them at least 9 on a side, with a few
/// pixels flipped and up to [`MAX_HOLES`] holes.
pub fn random_set<R: Rng>(rng: &mut R, rows: usize, cols: usize, holes: bool) -> Result<BinaryImage> {
    let mut cells = vec![false; rows * cols];
    for i in 0..rng.gen_range(2..=5) {
        let min_side = if i == 0 { 9 } else { 2 };
        let (r0, c0, h, w) = random_rect(rng, rows, cols, min_side.min(rows.min(cols)).max(1));
        let (h, w) = if i == 0 { (h, w) } else { (h.min(rows as i64 / 2 + 1), w.min(cols as i64 / 2 + 1)) };
        for r in r0..(r0 + h).min(rows as i64) {
            for c in c0..(c0 + w).min(cols as i64) {
                cells[r as usize * cols + c as usize] = true;
            }
        }
    }
    for cell in cells.iter_mut() {
        if rng.gen_bool(0.02) {
            *cell = !*cell;
        }
    }
    let mask = hole_mask(rng, rows, cols, holes);
    BinaryImage::from_points(2, rect_pixels(rows, cols, &mask).filter(|(i, _)| cells[*i]).map(|(_, p)| p))
}

fn random_rect<R: Rng>(rng: &mut R, rows: usize, cols: usize, min_side: usize) -> (i64, i64, i64, i64) {
    let h = rng.gen_range(min_side..=rows.max(min_side)) as i64;
    let w = rng.gen_range(min_side..=cols.max(min_side)) as i64;
    let r0 = rng.gen_range(0..=(rows as i64 - h).max(0));
    let c0 = rng.gen_range(0..=(cols as i64 - w).max(0));
    (r0, c0, h, w)
}

/// A constant base with up to three raised or lowered rectangular plateaus.
/// Candidate for the fixpoint premise `f = f o k = f • k`.
pub fn plateau_image<R: Rng>(rng: &mut R, rows: usize, cols: usize, value_max: u32, ceiling: u32) -> Result<GreyImage> {
    let mut grid = vec![rng.gen_range(0..=value_max); rows * cols];
    for _ in 0..rng.gen_range(1..=3) {
        let (r0, c0, h, w) = random_rect(rng, rows, cols, 5);
        let v = rng.gen_range(0..=value_max);
        for r in r0..(r0 + h).min(rows as i64) {
            for c in c0..(c0 + w).min(cols as i64) {
                grid[r as usize * cols + c as usize] = v;
            }
        }
    }
    GreyImage::from_pixels(
        2,
        ceiling,
        grid.into_iter().enumerate().map(|(i, v)| (Point::from([(i / cols) as i64, (i % cols) as i64]), v)),
    )
}

/// A union of up to three rectangles, each at least 4 on a side.
pub fn plateau_set<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Result<BinaryImage> {
    let mut pts = Vec::new();
    for _ in 0..rng.gen_range(1..=3) {
        let (r0, c0, h, w) = random_rect(rng, rows, cols, 4);
        for r in r0..(r0 + h).min(rows as i64) {
            for c in c0..(c0 + w).min(cols as i64) {
                pts.push(Point::from([r, c]));
            }
        }
    }
    BinaryImage::from_points(2, pts)
}

/// Draws until `accept` holds, at most [`FIXPOINT_DRAW_CAP`] times.
/// Returns the accepted value (if any) and the number of draws used.
pub fn draw_until<T, R: Rng>(
    rng: &mut R,
    mut draw: impl FnMut(&mut R) -> Result<T>,
    mut accept: impl FnMut(&T) -> Result<bool>,
) -> Result<(Option<T>, u32)> {
    for n in 1..=FIXPOINT_DRAW_CAP {
        let x = draw(rng)?;
        if accept(&x)? {
            return Ok((Some(x), n));
        }
    }
    Ok((None, FIXPOINT_DRAW_CAP))
}

pub fn is_grey_fixpoint(f: &GreyImage, k: &GreyImage) -> Result<bool> {
    Ok(gopen(f, k)? == *f && gclose(f, k)? == *f)
}

pub fn is_set_fixpoint(f: &BinaryImage, k: &BinaryImage) -> Result<bool> {
    Ok(bopen(f, k)? == *f && bclose(f, k)? == *f)
}

/// A structuring element on a random subset of the 5x5 box that always
/// contains the origin, with values in `[0, value_max]`.
///
/// One translate `t + K` (with `t` in the 3x3 box) is always present with
/// values at least `k(u)`, so the opening by `k` is non-empty whenever `K`
/// fits in the box.
pub fn random_se<R: Rng>(rng: &mut R, value_max: u32, ceiling: u32, k: &GreyImage) -> Result<GreyImage> {
    let t = [rng.gen_range(-1..=1i64), rng.gen_range(-1..=1i64)];
    let mut px = Vec::new();
    for r in -2..=2i64 {
        for c in -2..=2i64 {
            let keep = (r == 0 && c == 0) || rng.gen_bool(0.6);
            let mut v = rng.gen_range(0..=value_max);
            let planted = k.get(&Point::from([r - t[0], c - t[1]]));
            if let Some(ku) = planted {
                v = v.max(ku.min(value_max));
            }
            if keep || planted.is_some() {
                px.push((Point::from([r, c]), v));
            }
        }
    }
    GreyImage::from_pixels(2, ceiling, px)
}

/// `f` with some values raised (clamped at `ceiling`) and a few pixels
/// added next to the domain, so that `f <= g`.
pub fn dominating<R: Rng>(rng: &mut R, f: &GreyImage) -> Result<GreyImage> {
    let l = f.ceiling();
    let mut px: Vec<(Point, u32)> = f
        .iter()
        .map(|(p, v)| {
            let bump = if rng.gen_bool(0.3) { rng.gen_range(0..=5) } else { 0 };
            (p, (v + bump).min(l))
        })
        .collect();
    if let Some(bbox) = f.bounding_box() {
        let around: Vec<Point> = bbox.expand(1).points().filter(|p| !f.contains(p)).collect();
        for p in around {
            if rng.gen_bool(0.2) {
                px.push((p, rng.gen_range(0..=l)));
            }
        }
    }
    GreyImage::from_pixels(f.dim(), l, px)
}
