//! Generalized max-pooling: dilate by a filter, then keep the sieve.
//!
//! With a flat square `k` and spacing equal to the stride this is ordinary
//! strided max-pooling; non-flat filters add offsets before taking the max.

use crate::error::{MorphError, Result};
use crate::grey_morph::{gclose, gdilate, gerode, gopen};
use crate::grid::{le, restrict, GreyImage};
use crate::sampling::{ensure_sampled, grey_eq, grey_le, sampled_grey, FilterSpec, RelationResult, SampledOp};

/// `sigma(f) = (f (+) k)|_S`.
pub fn sigma(f: &GreyImage, spec: &FilterSpec) -> Result<GreyImage> {
    Ok(restrict(&gdilate(f, spec.k())?, spec.sieve()))
}

/// `sigma_dot(g) = g • k` for `g` supported on the sieve.
pub fn sigma_dot(g: &GreyImage, spec: &FilterSpec) -> Result<GreyImage> {
    ensure_sampled(g, spec.sieve())?;
    gclose(g, spec.k())
}

/// `rho = sigma_dot ∘ sigma`.
pub fn rho(f: &GreyImage, spec: &FilterSpec) -> Result<GreyImage> {
    sigma_dot(&sigma(f, spec)?, spec)
}

/// `delta(f) = sigma(f) (+) k`, an upper bound for `rho(f)`.
pub fn delta(f: &GreyImage, spec: &FilterSpec) -> Result<GreyImage> {
    gdilate(&sigma(f, spec)?, spec.k())
}

/// Whether `sigma(f) <= g` and `f <= sigma_dot(g)` agree for this pair.
pub fn adjunction_check(f: &GreyImage, g: &GreyImage, spec: &FilterSpec) -> Result<bool> {
    let forward = le(&sigma(f, spec)?, g)?;
    let backward = le(f, &sigma_dot(g, spec)?)?;
    Ok(forward == backward)
}

/// Checks that `c` is a usable operand: `C ⊆ S`, same ceiling as the filter.
pub fn ensure_sampled_se(c: &GreyImage, spec: &FilterSpec) -> Result<()> {
    if c.is_empty() {
        return Err(MorphError::EmptyStructuringElement);
    }
    if c.ceiling() != spec.ceiling() {
        return Err(MorphError::CeilingMismatch {
            left: spec.ceiling(),
            right: c.ceiling(),
        });
    }
    ensure_sampled(c, spec.sieve())
}

fn chain(name: &str, lo: &GreyImage, mid: &GreyImage, hi: &GreyImage) -> [RelationResult; 2] {
    [
        grey_le(&format!("{name}-lower"), lo, mid),
        grey_le(&format!("{name}-upper"), mid, hi),
    ]
}

/// The eight relations between pooling and morphology by a sampled `c`.
///
/// I is an equality; II-IV and VI are two-sided chains reported as
/// `-lower`/`-upper`; V, VII, VIII are single bounds. Operations between
/// two sampled operands run on the compacted lattice.
pub fn h2_relations(f: &GreyImage, c: &GreyImage, spec: &FilterSpec) -> Result<Vec<RelationResult>> {
    ensure_sampled_se(c, spec)?;
    let (k, s) = (spec.k(), spec.sieve());
    let sf = sigma(f, spec)?;
    let on_s = |op, g: &GreyImage| sampled_grey(op, g, c, s);
    let fk = gdilate(f, k)?;
    let rf = rho(f, spec)?;
    let mut out = vec![grey_eq("pool-h2-i", &sigma(&gdilate(f, c)?, spec)?, &on_s(SampledOp::Dilate, &sf)?)];
    out.extend(chain(
        "pool-h2-ii",
        &sigma(&gerode(f, c)?, spec)?,
        &on_s(SampledOp::Erode, &sf)?,
        &sigma(&gerode(&fk, c)?, spec)?,
    ));
    out.extend(chain(
        "pool-h2-iii",
        &sigma(&gopen(f, c)?, spec)?,
        &on_s(SampledOp::Open, &sf)?,
        &sigma(&gopen(&fk, c)?, spec)?,
    ));
    out.extend(chain(
        "pool-h2-iv",
        &sigma(&gclose(f, c)?, spec)?,
        &on_s(SampledOp::Close, &sf)?,
        &sigma(&gclose(&fk, c)?, spec)?,
    ));
    out.push(grey_le("pool-h2-v", &gdilate(&rf, c)?, &rho(&gdilate(f, c)?, spec)?));
    out.extend(chain(
        "pool-h2-vi",
        &rho(&gerode(f, c)?, spec)?,
        &gerode(&rf, c)?,
        &rho(&gerode(&fk, c)?, spec)?,
    ));
    out.push(grey_le("pool-h2-vii", &gopen(&rf, c)?, &rho(&gopen(&fk, c)?, spec)?));
    out.push(grey_le("pool-h2-viii", &gclose(&rf, c)?, &rho(&gclose(&fk, c)?, spec)?));
    Ok(out)
}

/// `f <= rho(f)` and `rho(f) <= delta(f)`.
pub fn reconstruction_bounds(f: &GreyImage, spec: &FilterSpec) -> Result<Vec<RelationResult>> {
    let r = rho(f, spec)?;
    Ok(vec![
        grey_le("pool-hl1", f, &r),
        grey_le("pool-rho-le-delta", &r, &delta(f, spec)?),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binary_morph::centered_box;
    use crate::grid::{Point, Sieve};
    use crate::sampling::Status;

    fn flat_spec() -> FilterSpec {
        let k = GreyImage::constant(&centered_box(2, 1), 0, 255).unwrap();
        FilterSpec::new(k, Sieve::new(&[2, 2]).unwrap()).unwrap()
    }

    #[test]
    fn flat_sigma_is_strided_max_pooling() {
        let rows: Vec<Vec<Option<u32>>> = (0..4)
            .map(|r| (0..4).map(|c| Some((r * 4 + c) as u32)).collect())
            .collect();
        let f = GreyImage::from_rows(255, [0, 0], &rows).unwrap();
        let s = sigma(&f, &flat_spec()).unwrap();
        let got: Vec<(Point, u32)> = s.iter().collect();
        // F (+) K reaches row and column 4, so the border samples see
        // clipped windows.
        let expect: Vec<(Point, u32)> = [[5, 7, 7], [13, 15, 15], [13, 15, 15]]
            .iter()
            .enumerate()
            .flat_map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(move |(j, &v)| (Point::from([2 * i as i64, 2 * j as i64]), v))
            })
            .collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn constant_image_is_reconstructed() {
        let f = GreyImage::constant(&centered_box(2, 3), 20, 255).unwrap();
        let spec = flat_spec();
        assert!(sigma(&f, &spec).unwrap().iter().all(|(_, v)| v == 20));
        let r = rho(&f, &spec).unwrap();
        for (p, v) in f.iter() {
            assert_eq!(r.get(&p), Some(v));
        }
    }

    #[test]
    fn sigma_dot_rejects_unsampled_input() {
        let g = GreyImage::from_pixels(2, 255, [(Point::from([0, 1]), 1)]).unwrap();
        assert!(matches!(sigma_dot(&g, &flat_spec()), Err(MorphError::NotSampled(_))));
    }

    #[test]
    fn h2_on_a_ramp() {
        let rows: Vec<Vec<Option<u32>>> = (0..10)
            .map(|r| (0..10).map(|c| Some(((r * 17 + c * 11) % 40) as u32)).collect())
            .collect();
        let f = GreyImage::from_rows(255, [0, 0], &rows).unwrap();
        let spec = flat_spec();
        let c = GreyImage::from_pixels(
            2,
            255,
            [-2i64, 0, 2]
                .iter()
                .flat_map(|&a| [-2i64, 0, 2].map(|b| (Point::from([a, b]), 0))),
        )
        .unwrap();
        for r in h2_relations(&f, &c, &spec).unwrap() {
            assert_eq!(r.status, Status::Pass, "{}", r.line());
        }
        for r in reconstruction_bounds(&f, &spec).unwrap() {
            assert_eq!(r.status, Status::Pass, "{}", r.line());
        }
    }

    #[test]
    fn unsampled_c_is_an_error() {
        let c = GreyImage::constant(&centered_box(2, 1), 0, 255).unwrap();
        let f = GreyImage::constant(&centered_box(2, 3), 1, 255).unwrap();
        assert!(matches!(h2_relations(&f, &c, &flat_spec()), Err(MorphError::NotSampled(_))));
    }
}
