//! Sampling conditions, reconstruction and the sampling-theorem relations.
//!
//! Operations "in the sampled domain" (between images that live on the sieve
//! `S`) are evaluated on the compacted lattice `S / d = Z^N` and mapped back.
//! The other side of every relation goes through the full grid, so the two
//! halves of each comparison never share an intermediate.

mod binary;
mod conditions;
mod grey;
mod report;

pub use binary::*;
pub use conditions::{validate_binary_conditions, validate_grey_conditions, ConditionCheck, ConditionReport};
pub use grey::*;
pub use report::{first_failure, grey_eq, grey_le, set_eq, subset, RelationResult, Status, Witness};

use crate::error::{MorphError, Result};
use crate::grey_morph::{gclose, gdilate, gerode, gopen};
use crate::binary_morph::{bclose, bdilate, berode, bopen};
use crate::grid::{BinaryImage, GreyImage, Point, Sieve};

/// A sampling filter `k: K -> L` together with its sieve `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilterSpec {
    k: GreyImage,
    sieve: Sieve,
}

impl FilterSpec {
    /// Validates conditions I-VII; the first failing condition is returned
    /// as [`MorphError::InvalidFilter`].
    pub fn new(k: GreyImage, sieve: Sieve) -> Result<Self> {
        let report = validate_grey_conditions(&k, &sieve);
        if let Some(c) = report.failures().next() {
            let witness = c.witness.as_deref().unwrap_or("");
            return Err(MorphError::InvalidFilter(format!(
                "condition {} ({}) fails {witness}",
                c.id, c.name
            )));
        }
        Ok(FilterSpec { k, sieve })
    }

    /// Skips validation, for experiments with filters outside the theorem.
    pub fn new_unchecked(k: GreyImage, sieve: Sieve) -> Self {
        FilterSpec { k, sieve }
    }

    pub fn k(&self) -> &GreyImage {
        &self.k
    }

    pub fn sieve(&self) -> &Sieve {
        &self.sieve
    }

    pub fn ceiling(&self) -> u32 {
        self.k.ceiling()
    }

    pub fn domain(&self) -> BinaryImage {
        self.k.domain()
    }

    pub fn conditions(&self) -> ConditionReport {
        validate_grey_conditions(&self.k, &self.sieve)
    }
}

/// Fails with [`MorphError::NotSampled`] if some pixel lies off the sieve.
pub fn ensure_sampled(g: &GreyImage, s: &Sieve) -> Result<()> {
    match g.iter().find(|(p, _)| !s.contains(p)) {
        Some((p, _)) => Err(MorphError::NotSampled(p.to_string())),
        None => Ok(()),
    }
}

pub fn ensure_sampled_set(a: &BinaryImage, s: &Sieve) -> Result<()> {
    match a.iter().find(|p| !s.contains(p)) {
        Some(p) => Err(MorphError::NotSampled(p.to_string())),
        None => Ok(()),
    }
}

/// Upper reconstruction `g (+) k` of a sampled image.
pub fn max_reconstruct(g: &GreyImage, spec: &FilterSpec) -> Result<GreyImage> {
    ensure_sampled(g, &spec.sieve)?;
    gdilate(g, &spec.k)
}

/// Lower reconstruction `g • k` of a sampled image.
pub fn min_reconstruct(g: &GreyImage, spec: &FilterSpec) -> Result<GreyImage> {
    ensure_sampled(g, &spec.sieve)?;
    gclose(g, &spec.k)
}

fn shrink(p: &Point, s: &Sieve) -> Point {
    Point::new(
        &p.coords()
            .iter()
            .zip(s.spacing())
            .map(|(c, d)| c.div_euclid(*d))
            .collect::<Vec<_>>(),
    )
}

fn stretch(p: &Point, s: &Sieve) -> Point {
    Point::new(
        &p.coords()
            .iter()
            .zip(s.spacing())
            .map(|(c, d)| c * d)
            .collect::<Vec<_>>(),
    )
}

/// Divides the coordinates of a sampled image by the sieve spacing.
pub fn compact(g: &GreyImage, s: &Sieve) -> Result<GreyImage> {
    ensure_sampled(g, s)?;
    GreyImage::from_pixels(g.dim(), g.ceiling(), g.iter().map(|(p, v)| (shrink(&p, s), v)))
}

/// Inverse of [`compact`].
pub fn expand(g: &GreyImage, s: &Sieve) -> GreyImage {
    GreyImage::from_pixels(g.dim(), g.ceiling(), g.iter().map(|(p, v)| (stretch(&p, s), v)))
        .expect("same dimension and values")
}

pub fn compact_set(a: &BinaryImage, s: &Sieve) -> Result<BinaryImage> {
    ensure_sampled_set(a, s)?;
    BinaryImage::from_points(a.dim(), a.iter().map(|p| shrink(&p, s)))
}

pub fn expand_set(a: &BinaryImage, s: &Sieve) -> BinaryImage {
    BinaryImage::from_points(a.dim(), a.iter().map(|p| stretch(&p, s))).expect("same dimension")
}

/// Operator applied to two sampled operands on the compacted lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampledOp {
    Dilate,
    Erode,
    Open,
    Close,
}

/// `f op b` for `f`, `b` supported on `S`, computed in lattice coordinates.
pub fn sampled_grey(op: SampledOp, f: &GreyImage, b: &GreyImage, s: &Sieve) -> Result<GreyImage> {
    let (cf, cb) = (compact(f, s)?, compact(b, s)?);
    let out = match op {
        SampledOp::Dilate => gdilate(&cf, &cb)?,
        SampledOp::Erode => gerode(&cf, &cb)?,
        SampledOp::Open => gopen(&cf, &cb)?,
        SampledOp::Close => gclose(&cf, &cb)?,
    };
    Ok(expand(&out, s))
}

pub fn sampled_binary(op: SampledOp, f: &BinaryImage, b: &BinaryImage, s: &Sieve) -> Result<BinaryImage> {
    let (cf, cb) = (compact_set(f, s)?, compact_set(b, s)?);
    let out = match op {
        SampledOp::Dilate => bdilate(&cf, &cb)?,
        SampledOp::Erode => berode(&cf, &cb)?,
        SampledOp::Open => bopen(&cf, &cb)?,
        SampledOp::Close => bclose(&cf, &cb)?,
    };
    Ok(expand_set(&out, s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binary_morph::centered_box;
    use crate::grid::restrict;

    fn flat3(l: u32) -> GreyImage {
        GreyImage::constant(&centered_box(2, 1), 0, l).unwrap()
    }

    #[test]
    fn constant_image_reconstructs_to_constant() {
        let spec = FilterSpec::new(flat3(255), Sieve::new(&[2, 2]).unwrap()).unwrap();
        let f = GreyImage::constant(&centered_box(2, 4), 9, 255).unwrap();
        let fs = restrict(&f, spec.sieve());
        let hi = max_reconstruct(&fs, &spec).unwrap();
        let lo = min_reconstruct(&fs, &spec).unwrap();
        assert!(hi.iter().all(|(_, v)| v == 9));
        assert!(lo.iter().all(|(_, v)| v == 9));
        assert_eq!(restrict(&hi, spec.sieve()), fs);
        assert_eq!(restrict(&lo, spec.sieve()), fs);
    }

    #[test]
    fn unsampled_input_is_rejected() {
        let spec = FilterSpec::new(flat3(255), Sieve::new(&[2, 2]).unwrap()).unwrap();
        let g = GreyImage::from_pixels(2, 255, [(Point::from([1, 0]), 3)]).unwrap();
        assert_eq!(
            max_reconstruct(&g, &spec),
            Err(MorphError::NotSampled("(1,0)".to_string()))
        );
    }

    #[test]
    fn invalid_filters_are_flagged() {
        let k = GreyImage::constant(&centered_box(2, 2), 0, 255).unwrap();
        let err = FilterSpec::new(k, Sieve::new(&[2, 2]).unwrap()).unwrap_err();
        assert!(matches!(err, MorphError::InvalidFilter(msg) if msg.contains("III")));
    }

    #[test]
    fn compaction_roundtrip() {
        let s = Sieve::new(&[2, 3]).unwrap();
        let g = GreyImage::from_pixels(2, 9, [(Point::from([-2, 3]), 4), (Point::from([4, -6]), 1)])
            .unwrap();
        let c = compact(&g, &s).unwrap();
        assert_eq!(c.get(&Point::from([-1, 1])), Some(4));
        assert_eq!(expand(&c, &s), g);
    }

    #[test]
    fn lattice_dilation_matches_full_grid() {
        let s = Sieve::new(&[2, 2]).unwrap();
        let f = restrict(&GreyImage::constant(&centered_box(2, 3), 5, 255).unwrap(), &s);
        let b = restrict(&flat3(255), &s);
        assert_eq!(
            sampled_grey(SampledOp::Dilate, &f, &b, &s).unwrap(),
            gdilate(&f, &b).unwrap()
        );
    }
}
