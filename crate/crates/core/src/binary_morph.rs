//! Set morphology on [`BinaryImage`].

use crate::error::{MorphError, Result};
use crate::grid::{reflect, translate, BinaryImage, Point, Window};
use crate::kernel;

fn same_dim(a: &BinaryImage, b: &BinaryImage) -> Result<()> {
    if a.dim() == b.dim() {
        Ok(())
    } else {
        Err(MorphError::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        })
    }
}

/// Minkowski sum `A (+) B = { a + b }`.
pub fn bdilate(a: &BinaryImage, b: &BinaryImage) -> Result<BinaryImage> {
    same_dim(a, b)?;
    Ok(BinaryImage(kernel::dilate_bool(&a.0, &b.0)))
}

/// `A (-) B = { x : B_x ⊆ A }`. Erosion by the empty set is rejected.
pub fn berode(a: &BinaryImage, b: &BinaryImage) -> Result<BinaryImage> {
    same_dim(a, b)?;
    if b.is_empty() {
        return Err(MorphError::EmptyStructuringElement);
    }
    Ok(BinaryImage(kernel::erode_bool(&a.0, &b.0)))
}

pub fn bopen(a: &BinaryImage, b: &BinaryImage) -> Result<BinaryImage> {
    bdilate(&berode(a, b)?, b)
}

pub fn bclose(a: &BinaryImage, b: &BinaryImage) -> Result<BinaryImage> {
    berode(&bdilate(a, b)?, b)
}

/// Opening as the union of all translates `B_y` that fit inside `A`.
pub fn bopen_oracle(a: &BinaryImage, b: &BinaryImage) -> Result<BinaryImage> {
    same_dim(a, b)?;
    if b.is_empty() {
        return Err(MorphError::EmptyStructuringElement);
    }
    let mut out = BinaryImage::empty(a.dim());
    let (Some(abox), Some(bbox)) = (a.bounding_box(), b.bounding_box()) else {
        return Ok(out);
    };
    // A fitting translate has y + b_min >= a_min and y + b_max <= a_max.
    let Ok(ys) = Window::new(abox.min() - bbox.min(), abox.max() - bbox.max()) else {
        return Ok(out);
    };
    for y in ys.points() {
        let by = translate(b, &y)?;
        if by.is_subset(a) {
            out = out.union(&by);
        }
    }
    Ok(out)
}

/// Closing as the set of `x` such that every reflected translate containing
/// `x` meets `A`.
pub fn bclose_oracle(a: &BinaryImage, b: &BinaryImage) -> Result<BinaryImage> {
    same_dim(a, b)?;
    if b.is_empty() {
        return Err(MorphError::EmptyStructuringElement);
    }
    let b_refl = reflect(b);
    let Some(region) = bdilate(a, b)?.bounding_box() else {
        return Ok(BinaryImage::empty(a.dim()));
    };
    let bbox = b.bounding_box().expect("non-empty");
    // The closing lies in (A (+) B) (+) B^. A translate B^_y containing x
    // has y in x (+) B.
    let candidates = region.sum(&bbox.reflect());
    let ys = candidates.sum(&bbox);
    let mut missing = Vec::new();
    for y in ys.points() {
        let by = translate(&b_refl, &y)?;
        if by.intersection(a).is_empty() {
            missing.push(by);
        }
    }
    let mut blocked = BinaryImage::empty(a.dim());
    for m in missing {
        blocked = blocked.union(&m);
    }
    let inside = BinaryImage::from_window(&candidates);
    Ok(inside.difference(&blocked))
}

/// `W \ A`.
pub fn complement(a: &BinaryImage, window: &Window) -> BinaryImage {
    BinaryImage::from_window(window).difference(a)
}

/// Checks `(A (-) B)^c = A^c (+) B^` with complements taken inside `window`.
///
/// The right-hand side has spill-over near the window border, so both sides
/// are compared on `window (-) B`, where every point sees a full copy of `B`.
pub fn duality_check(a: &BinaryImage, b: &BinaryImage, window: &Window) -> Result<bool> {
    same_dim(a, b)?;
    if b.is_empty() {
        return Err(MorphError::EmptyStructuringElement);
    }
    let w = BinaryImage::from_window(window);
    if let Some(p) = a.first_outside(&w) {
        return Err(MorphError::WindowTooSmall(format!("point {p} of A")));
    }
    if let Some(p) = bdilate(a, &reflect(b))?.first_outside(&w) {
        return Err(MorphError::WindowTooSmall(format!("point {p} of A (+) B^")));
    }
    let interior = berode(&w, b)?;
    let lhs = complement(&berode(a, b)?, window).intersection(&interior);
    let rhs = bdilate(&complement(a, window), &reflect(b))?.intersection(&interior);
    Ok(lhs == rhs)
}

/// The `(2r+1)^N` box centred on the origin.
pub fn centered_box(dim: usize, radius: i64) -> BinaryImage {
    let min = Point::new(&vec![-radius; dim]);
    let max = Point::new(&vec![radius; dim]);
    BinaryImage::from_window(&Window::new(min, max).expect("radius is non-negative"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(points: &[[i64; 2]]) -> BinaryImage {
        BinaryImage::from_points(2, points.iter().map(|&p| Point::from(p))).unwrap()
    }

    fn origin() -> BinaryImage {
        set(&[[0, 0]])
    }

    #[test]
    fn dilation_examples() {
        let d = bdilate(&set(&[[0, 0], [1, 0]]), &set(&[[0, 0], [0, 1]])).unwrap();
        assert_eq!(d, set(&[[0, 0], [1, 0], [0, 1], [1, 1]]));
        let a = set(&[[3, 1], [-2, 4]]);
        assert_eq!(bdilate(&a, &origin()).unwrap(), a);
        assert!(bdilate(&BinaryImage::empty(2), &a).unwrap().is_empty());
    }

    #[test]
    fn erosion_examples() {
        let e = berode(&set(&[[0, 0], [1, 0], [2, 0]]), &set(&[[0, 0], [1, 0]])).unwrap();
        assert_eq!(e, set(&[[0, 0], [1, 0]]));
        let a = set(&[[3, 1], [-2, 4]]);
        assert_eq!(berode(&a, &origin()).unwrap(), a);
        assert!(berode(&origin(), &set(&[[0, 0], [5, 5]])).unwrap().is_empty());
        assert_eq!(
            berode(&a, &BinaryImage::empty(2)),
            Err(MorphError::EmptyStructuringElement)
        );
    }

    #[test]
    fn erosion_result_may_leave_a() {
        // B does not contain the origin, so the eroded set need not sit inside A.
        let a = set(&[[5, 5], [5, 6]]);
        let b = set(&[[5, 5], [5, 6]]);
        assert_eq!(berode(&a, &b).unwrap(), origin());
    }

    #[test]
    fn opening_and_closing_examples() {
        let a = set(&[[0, 0], [0, 1], [0, 2], [1, 1], [4, 4]]);
        assert_eq!(bopen(&a, &origin()).unwrap(), a);
        let b = set(&[[0, 0], [0, 1]]);
        let opened = bopen(&a, &b).unwrap();
        assert_eq!(opened, set(&[[0, 0], [0, 1], [0, 2]]));
        assert_eq!(bopen(&opened, &b).unwrap(), opened);
        assert!(a.is_subset(&bclose(&a, &b).unwrap()));
        assert!(bopen_oracle(&BinaryImage::empty(2), &b).unwrap().is_empty());
    }

    #[test]
    fn oracles_match_on_a_ring() {
        let ring = Window::new(Point::from([0, 0]), Point::from([5, 5]))
            .unwrap()
            .to_binary()
            .difference(&set(&[[2, 2], [2, 3], [3, 2]]));
        let b = centered_box(2, 1);
        assert_eq!(bopen_oracle(&ring, &b).unwrap(), bopen(&ring, &b).unwrap());
        assert_eq!(bclose_oracle(&ring, &b).unwrap(), bclose(&ring, &b).unwrap());
    }

    #[test]
    fn duality_examples() {
        let window = Window::new(Point::from([-3, -3]), Point::from([8, 8])).unwrap();
        let a = set(&[[0, 0], [0, 1], [1, 1], [2, 3], [4, 4], [4, 5]]);
        assert!(duality_check(&a, &centered_box(2, 1), &window).unwrap());
        assert!(duality_check(&a, &origin(), &window).unwrap());
        let full = window.to_binary();
        assert!(duality_check(&full, &origin(), &window).unwrap());
        let tight = Window::new(Point::from([0, 0]), Point::from([4, 5])).unwrap();
        assert!(matches!(
            duality_check(&a, &centered_box(2, 1), &tight),
            Err(MorphError::WindowTooSmall(_))
        ));
    }
}
