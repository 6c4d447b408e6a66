//! Umbras and top surfaces: grey morphology as set morphology on
//! `E^N x [0, l]`.
//!
//! [`UmbraSet`] is an explicit point set. It is meant for small oracle
//! checks, since its size grows with the ceiling.

use std::collections::BTreeSet;

use crate::error::{MorphError, Result};
use crate::grid::{GreyImage, Point};

/// A finite subset of `E^N x [0, l]`, not necessarily downward closed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UmbraSet {
    dim: usize,
    ceiling: u32,
    points: BTreeSet<(Point, u32)>,
}

impl UmbraSet {
    pub fn new(dim: usize, ceiling: u32) -> Self {
        UmbraSet {
            dim,
            ceiling,
            points: BTreeSet::new(),
        }
    }

    pub fn from_points(
        dim: usize,
        ceiling: u32,
        points: impl IntoIterator<Item = (Point, u32)>,
    ) -> Result<Self> {
        let mut out = UmbraSet::new(dim, ceiling);
        for (p, y) in points {
            out.insert(p, y)?;
        }
        Ok(out)
    }

    pub fn insert(&mut self, p: Point, y: u32) -> Result<()> {
        if p.dim() != self.dim {
            return Err(MorphError::DimensionMismatch {
                expected: self.dim,
                found: p.dim(),
            });
        }
        if y > self.ceiling {
            return Err(MorphError::ValueOutOfRange {
                value: y,
                ceiling: self.ceiling,
            });
        }
        self.points.insert((p, y));
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ceiling(&self) -> u32 {
        self.ceiling
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &Point, y: u32) -> bool {
        self.points.contains(&(p.clone(), y))
    }

    pub fn iter(&self) -> impl Iterator<Item = &(Point, u32)> {
        self.points.iter()
    }

    pub fn is_subset(&self, other: &UmbraSet) -> bool {
        self.points.is_subset(&other.points)
    }

    pub fn union(&self, other: &UmbraSet) -> UmbraSet {
        UmbraSet {
            dim: self.dim,
            ceiling: self.ceiling,
            points: self.points.union(&other.points).cloned().collect(),
        }
    }

    pub fn meets(&self, other: &UmbraSet) -> bool {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        small.points.iter().any(|q| large.points.contains(q))
    }

    /// Highest value in column `x`, if the column is non-empty.
    pub fn column_top(&self, x: &Point) -> Option<u32> {
        self.points
            .range((x.clone(), 0)..=(x.clone(), self.ceiling))
            .next_back()
            .map(|(_, y)| *y)
    }
}

fn check_compatible(a: &UmbraSet, b: &UmbraSet) -> Result<()> {
    if a.dim != b.dim {
        return Err(MorphError::DimensionMismatch {
            expected: a.dim,
            found: b.dim,
        });
    }
    if a.ceiling != b.ceiling {
        return Err(MorphError::CeilingMismatch {
            left: a.ceiling,
            right: b.ceiling,
        });
    }
    Ok(())
}

/// `T[A](x) = max { y : (x, y) in A }` on the columns that `A` touches.
pub fn top_surface(a: &UmbraSet) -> GreyImage {
    let mut pixels: Vec<(Point, u32)> = Vec::new();
    for (p, y) in &a.points {
        match pixels.last_mut() {
            Some((q, top)) if q == p => *top = (*top).max(*y),
            _ => pixels.push((p.clone(), *y)),
        }
    }
    GreyImage::from_pixels(a.dim, a.ceiling, pixels).expect("umbra values lie in [0, l]")
}

/// `U[f] = { (x, y) : x in F, 0 <= y <= f(x) }`.
pub fn umbra(f: &GreyImage) -> UmbraSet {
    let mut out = UmbraSet::new(f.dim(), f.ceiling());
    for (p, v) in f.iter() {
        for y in 0..=v {
            out.points.insert((p.clone(), y));
        }
    }
    out
}

/// `A_(x0, y0)`: shifts every point; points pushed above the ceiling drop out.
pub fn umbra_translate(a: &UmbraSet, x0: &Point, y0: i64) -> Result<UmbraSet> {
    if y0 < 0 {
        return Err(MorphError::NegativeOffset(y0));
    }
    if x0.dim() != a.dim {
        return Err(MorphError::DimensionMismatch {
            expected: a.dim,
            found: x0.dim(),
        });
    }
    let mut out = UmbraSet::new(a.dim, a.ceiling);
    for (p, y) in &a.points {
        let lifted = *y as i64 + y0;
        if lifted <= a.ceiling as i64 {
            out.points.insert((p + x0, lifted as u32));
        }
    }
    Ok(out)
}

/// The tilde reflection `{ (x, v) : -x in dom A, l - T[A](-x) <= v <= l }`.
pub fn umbra_reflect(a: &UmbraSet) -> Result<UmbraSet> {
    if a.is_empty() {
        return Err(MorphError::EmptySet);
    }
    let l = a.ceiling;
    let mut out = UmbraSet::new(a.dim, l);
    for (p, top) in top_surface(a).iter() {
        let x = -&p;
        for v in (l - top)..=l {
            out.points.insert((x.clone(), v));
        }
    }
    Ok(out)
}

/// Union of the clamped translates `A_(xb, yb)` over `(xb, yb)` in `B`.
pub fn udilate(a: &UmbraSet, b: &UmbraSet) -> Result<UmbraSet> {
    check_compatible(a, b)?;
    let mut out = UmbraSet::new(a.dim, a.ceiling);
    for (xb, yb) in &b.points {
        let t = umbra_translate(a, xb, *yb as i64)?;
        out.points.extend(t.points);
    }
    Ok(out)
}

/// Binary erosion in `N + 1` dimensions: `(x, y)` with `y` in `[0, l]` such
/// that `(x + xb, y + yb)` is in `A` for every `(xb, yb)` in `B`.
pub fn uerode(a: &UmbraSet, b: &UmbraSet) -> Result<UmbraSet> {
    check_compatible(a, b)?;
    let Some((xb0, yb0)) = b.points.iter().next() else {
        return Err(MorphError::EmptyStructuringElement);
    };
    let mut out = UmbraSet::new(a.dim, a.ceiling);
    for (xa, ya) in &a.points {
        let y = *ya as i64 - *yb0 as i64;
        if y < 0 || y > a.ceiling as i64 {
            continue;
        }
        let x = xa - xb0;
        let fits = b.points.iter().all(|(xb, yb)| {
            let yy = y + *yb as i64;
            yy <= a.ceiling as i64 && a.points.contains(&(&x + xb, yy as u32))
        });
        if fits {
            out.points.insert((x, y as u32));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single(p: [i64; 2], v: u32, l: u32) -> GreyImage {
        GreyImage::from_pixels(2, l, [(Point::from(p), v)]).unwrap()
    }

    fn uset(l: u32, pts: &[([i64; 2], u32)]) -> UmbraSet {
        UmbraSet::from_points(2, l, pts.iter().map(|&(p, y)| (Point::from(p), y))).unwrap()
    }

    #[test]
    fn top_surface_examples() {
        let a = uset(7, &[([0, 0], 1), ([0, 0], 3)]);
        assert_eq!(top_surface(&a), single([0, 0], 3, 7));
        assert!(top_surface(&UmbraSet::new(2, 7)).is_empty());
    }

    #[test]
    fn umbra_examples() {
        let u = umbra(&single([0, 0], 2, 3));
        assert_eq!(u, uset(3, &[([0, 0], 0), ([0, 0], 1), ([0, 0], 2)]));
        let f = GreyImage::from_pixels(2, 9, [(Point::from([0, 0]), 0), (Point::from([0, 1]), 4)])
            .unwrap();
        assert_eq!(umbra(&f).len(), 1 + 5);
        assert_eq!(top_surface(&umbra(&f)), f);
    }

    #[test]
    fn translate_examples() {
        let a = uset(5, &[([0, 0], 1), ([2, 1], 5)]);
        assert_eq!(umbra_translate(&a, &Point::from([0, 0]), 0).unwrap(), a);
        let top = uset(5, &[([0, 0], 5)]);
        assert!(umbra_translate(&top, &Point::from([0, 0]), 1).unwrap().is_empty());
        let one = uset(5, &[([0, 0], 1)]);
        assert_eq!(
            umbra_translate(&one, &Point::from([1, 0]), 1).unwrap(),
            uset(5, &[([1, 0], 2)])
        );
        assert_eq!(
            umbra_translate(&one, &Point::from([1, 0]), -1),
            Err(MorphError::NegativeOffset(-1))
        );
    }

    #[test]
    fn reflect_examples() {
        let l = 4;
        let full = umbra_reflect(&umbra(&single([0, 0], l, l))).unwrap();
        assert_eq!(full, umbra(&single([0, 0], l, l)));
        let r = umbra_reflect(&uset(3, &[([1, 0], 0)])).unwrap();
        assert_eq!(r, uset(3, &[([-1, 0], 3)]));
        assert_eq!(umbra_reflect(&UmbraSet::new(2, 3)), Err(MorphError::EmptySet));
    }

    #[test]
    fn dilation_by_origin_is_identity() {
        let a = umbra(&GreyImage::from_rows(9, [0, 0], &[vec![Some(3), None, Some(7)]]).unwrap());
        let id = uset(9, &[([0, 0], 0)]);
        assert_eq!(udilate(&a, &id).unwrap(), a);
        assert_eq!(uerode(&a, &id).unwrap(), a);
    }

    #[test]
    fn column_top_reads_the_highest_point() {
        let a = uset(9, &[([0, 0], 2), ([0, 0], 6), ([0, 1], 9)]);
        assert_eq!(a.column_top(&Point::from([0, 0])), Some(6));
        assert_eq!(a.column_top(&Point::from([0, 1])), Some(9));
        assert_eq!(a.column_top(&Point::from([1, 1])), None);
    }
}
