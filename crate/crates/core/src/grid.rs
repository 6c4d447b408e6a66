//! Points, domains and images on the integer grid `E^N`.
//!
//! Both image types keep their cells in a dense raster over the tight
//! bounding box of their domain. The raster is always normalized (tight box,
//! canonical empty form) so that structural equality is set equality.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use smallvec::SmallVec;

use crate::error::{MorphError, Result};

pub(crate) type Coords = SmallVec<[i64; 4]>;
pub(crate) type Extent = SmallVec<[usize; 4]>;

/// A position in `E^N`, in grid units.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Point(Coords);

impl Point {
    pub fn new(coords: &[i64]) -> Self {
        Point(Coords::from_slice(coords))
    }

    pub fn origin(dim: usize) -> Self {
        Point(smallvec::smallvec![0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_origin(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl serde::Serialize for Point {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter())
    }
}

impl<const N: usize> From<[i64; N]> for Point {
    fn from(coords: [i64; N]) -> Self {
        Point::new(&coords)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add for &Point {
    type Output = Point;
    fn add(self, rhs: &Point) -> Point {
        debug_assert_eq!(self.dim(), rhs.dim());
        Point(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Point {
    type Output = Point;
    fn sub(self, rhs: &Point) -> Point {
        debug_assert_eq!(self.dim(), rhs.dim());
        Point(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point(self.0.iter().map(|c| -c).collect())
    }
}

/// Inclusive axis-aligned box `min ..= max`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Window {
    min: Point,
    max: Point,
}

impl Window {
    pub fn new(min: Point, max: Point) -> Result<Self> {
        if min.dim() != max.dim() {
            return Err(MorphError::DimensionMismatch {
                expected: min.dim(),
                found: max.dim(),
            });
        }
        if min.coords().iter().zip(max.coords()).any(|(a, b)| a > b) {
            return Err(MorphError::Config(format!("window {min}..{max} is inverted")));
        }
        Ok(Window { min, max })
    }

    /// The `rows x cols` box anchored at the origin.
    pub fn rect(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "window must be non-empty");
        Window {
            min: Point::from([0, 0]),
            max: Point::from([rows as i64 - 1, cols as i64 - 1]),
        }
    }

    pub fn min(&self) -> &Point {
        &self.min
    }

    pub fn max(&self) -> &Point {
        &self.max
    }

    pub fn dim(&self) -> usize {
        self.min.dim()
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.dim() == self.dim()
            && p.coords()
                .iter()
                .zip(self.min.coords().iter().zip(self.max.coords()))
                .all(|(c, (lo, hi))| lo <= c && c <= hi)
    }

    /// Grows the box by `margin` cells on every side of every axis.
    pub fn expand(&self, margin: i64) -> Window {
        Window {
            min: Point(self.min.0.iter().map(|c| c - margin).collect()),
            max: Point(self.max.0.iter().map(|c| c + margin).collect()),
        }
    }

    /// Minkowski sum of two boxes.
    pub fn sum(&self, other: &Window) -> Window {
        Window {
            min: &self.min + &other.min,
            max: &self.max + &other.max,
        }
    }

    pub fn reflect(&self) -> Window {
        Window {
            min: -&self.max,
            max: -&self.min,
        }
    }

    pub fn len(&self) -> usize {
        self.frame().len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Every point of the box in lexicographic order.
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        let frame = self.frame();
        (0..frame.len()).map(move |i| Point(frame.coords_of(i)))
    }

    pub fn to_binary(&self) -> BinaryImage {
        let frame = self.frame();
        let cells = vec![true; frame.len()];
        BinaryImage(Raster::from_parts(self.dim(), frame, cells))
    }

    fn frame(&self) -> Frame {
        Frame {
            origin: self.min.0.clone(),
            shape: self
                .min
                .0
                .iter()
                .zip(&self.max.0)
                .map(|(lo, hi)| (hi - lo + 1) as usize)
                .collect(),
        }
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..={}", self.min, self.max)
    }
}

/// Row-major box: `origin` is the minimum corner.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct Frame {
    pub(crate) origin: Coords,
    pub(crate) shape: Extent,
}

impl Frame {
    pub(crate) fn empty(dim: usize) -> Self {
        Frame {
            origin: smallvec::smallvec![0; dim],
            shape: smallvec::smallvec![0; dim],
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.shape.iter().product()
    }

    pub(crate) fn strides(&self) -> Extent {
        let mut strides: Extent = smallvec::smallvec![1; self.shape.len()];
        for axis in (0..self.shape.len().saturating_sub(1)).rev() {
            strides[axis] = strides[axis + 1] * self.shape[axis + 1];
        }
        strides
    }

    pub(crate) fn index_of(&self, coords: &[i64]) -> Option<usize> {
        let mut idx = 0usize;
        let mut stride = 1usize;
        for axis in (0..self.shape.len()).rev() {
            let rel = coords[axis] - self.origin[axis];
            if rel < 0 || rel as usize >= self.shape[axis] {
                return None;
            }
            idx += rel as usize * stride;
            stride *= self.shape[axis];
        }
        Some(idx)
    }

    pub(crate) fn coords_of(&self, mut idx: usize) -> Coords {
        let mut coords: Coords = smallvec::smallvec![0; self.shape.len()];
        for axis in (0..self.shape.len()).rev() {
            let extent = self.shape[axis];
            coords[axis] = self.origin[axis] + (idx % extent) as i64;
            idx /= extent;
        }
        coords
    }

    /// For every cell of this frame in row-major order, the linear offset
    /// `sum_i m_i * strides[i]` of its multi-index `m` under foreign strides.
    pub(crate) fn walk(&self, strides: &[usize]) -> Vec<usize> {
        let len = self.len();
        let mut out = Vec::with_capacity(len);
        if len == 0 {
            return out;
        }
        let dim = self.shape.len();
        let mut m: Extent = smallvec::smallvec![0; dim];
        let mut offset = 0usize;
        loop {
            out.push(offset);
            let mut axis = dim;
            loop {
                if axis == 0 {
                    return out;
                }
                axis -= 1;
                m[axis] += 1;
                offset += strides[axis];
                if m[axis] < self.shape[axis] {
                    break;
                }
                offset -= strides[axis] * m[axis];
                m[axis] = 0;
            }
        }
    }

    fn hull(&self, other: &Frame) -> Frame {
        if self.len() == 0 {
            return other.clone();
        }
        if other.len() == 0 {
            return self.clone();
        }
        let mut origin = Coords::new();
        let mut shape = Extent::new();
        for axis in 0..self.shape.len() {
            let lo = self.origin[axis].min(other.origin[axis]);
            let hi = (self.origin[axis] + self.shape[axis] as i64)
                .max(other.origin[axis] + other.shape[axis] as i64);
            origin.push(lo);
            shape.push((hi - lo) as usize);
        }
        Frame { origin, shape }
    }
}

/// Cell payload of a raster with a distinguished "not in the domain" value.
pub(crate) trait Cell: Copy + PartialEq + fmt::Debug {
    const ABSENT: Self;
}

impl Cell for bool {
    const ABSENT: bool = false;
}

/// Grey cells use `u32::MAX` as the hole marker; ceilings stay below it.
impl Cell for u32 {
    const ABSENT: u32 = u32::MAX;
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct Raster<T: Cell> {
    pub(crate) dim: usize,
    pub(crate) frame: Frame,
    pub(crate) cells: Vec<T>,
}

impl<T: Cell> Raster<T> {
    pub(crate) fn empty(dim: usize) -> Self {
        Raster {
            dim,
            frame: Frame::empty(dim),
            cells: Vec::new(),
        }
    }

    /// Builds a raster and normalizes it to the tight bounding box.
    pub(crate) fn from_parts(dim: usize, frame: Frame, cells: Vec<T>) -> Self {
        debug_assert_eq!(frame.len(), cells.len());
        Raster { dim, frame, cells }.tighten()
    }

    pub(crate) fn from_entries(dim: usize, entries: Vec<(Coords, T)>) -> Self {
        if entries.is_empty() {
            return Raster::empty(dim);
        }
        let mut lo: Coords = entries[0].0.clone();
        let mut hi: Coords = entries[0].0.clone();
        for (c, _) in &entries {
            for axis in 0..dim {
                lo[axis] = lo[axis].min(c[axis]);
                hi[axis] = hi[axis].max(c[axis]);
            }
        }
        let frame = Frame {
            shape: lo.iter().zip(&hi).map(|(l, h)| (h - l + 1) as usize).collect(),
            origin: lo,
        };
        let mut cells = vec![T::ABSENT; frame.len()];
        for (c, v) in entries {
            let idx = frame.index_of(&c).expect("entry inside its own hull");
            cells[idx] = v;
        }
        Raster::from_parts(dim, frame, cells)
    }

    pub(crate) fn get(&self, coords: &[i64]) -> T {
        match self.frame.index_of(coords) {
            Some(idx) => self.cells[idx],
            None => T::ABSENT,
        }
    }

    pub(crate) fn count(&self) -> usize {
        self.cells.iter().filter(|&&c| c != T::ABSENT).count()
    }

    pub(crate) fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub(crate) fn entries(&self) -> impl Iterator<Item = (Coords, T)> + '_ {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != T::ABSENT)
            .map(move |(i, &c)| (self.frame.coords_of(i), c))
    }

    /// Present cells as `(offset, value)`, where offset is the cell's
    /// position relative to this raster's origin under foreign strides.
    pub(crate) fn local_offsets(&self, strides: &[usize]) -> Vec<(usize, T)> {
        let walk = self.frame.walk(strides);
        self.cells
            .iter()
            .zip(walk)
            .filter(|(&c, _)| c != T::ABSENT)
            .map(|(&c, off)| (off, c))
            .collect()
    }

    pub(crate) fn map<U: Cell>(&self, mut f: impl FnMut(&[i64], T) -> U) -> Raster<U> {
        let mut cells = vec![U::ABSENT; self.cells.len()];
        for (i, &c) in self.cells.iter().enumerate() {
            if c != T::ABSENT {
                let coords = self.frame.coords_of(i);
                cells[i] = f(&coords, c);
            }
        }
        Raster::from_parts(self.dim, self.frame.clone(), cells)
    }

    /// Cellwise merge over the hull of both frames.
    pub(crate) fn zip_with<U: Cell, V: Cell>(
        &self,
        other: &Raster<U>,
        mut f: impl FnMut(T, U) -> V,
    ) -> Raster<V> {
        let frame = self.frame.hull(&other.frame);
        let mut cells = Vec::with_capacity(frame.len());
        for i in 0..frame.len() {
            let coords = frame.coords_of(i);
            cells.push(f(self.get(&coords), other.get(&coords)));
        }
        Raster::from_parts(self.dim, frame, cells)
    }

    fn tighten(self) -> Self {
        let dim = self.dim;
        let mut lo: Option<Coords> = None;
        let mut hi: Coords = smallvec::smallvec![i64::MIN; dim];
        for (i, &c) in self.cells.iter().enumerate() {
            if c == T::ABSENT {
                continue;
            }
            let coords = self.frame.coords_of(i);
            let lo = lo.get_or_insert_with(|| coords.clone());
            for axis in 0..dim {
                lo[axis] = lo[axis].min(coords[axis]);
                hi[axis] = hi[axis].max(coords[axis]);
            }
        }
        let Some(lo) = lo else {
            return Raster::empty(dim);
        };
        let frame = Frame {
            shape: lo.iter().zip(&hi).map(|(l, h)| (h - l + 1) as usize).collect(),
            origin: lo,
        };
        if frame == self.frame {
            return self;
        }
        let mut cells = Vec::with_capacity(frame.len());
        for i in 0..frame.len() {
            let coords = frame.coords_of(i);
            cells.push(self.get(&coords));
        }
        Raster {
            dim,
            frame,
            cells,
        }
    }
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(MorphError::DimensionMismatch { expected, found })
    }
}

/// A finite subset of `E^N`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinaryImage(pub(crate) Raster<bool>);

impl BinaryImage {
    pub fn empty(dim: usize) -> Self {
        BinaryImage(Raster::empty(dim))
    }

    /// Collects points into a set; duplicates collapse.
    pub fn from_points(dim: usize, points: impl IntoIterator<Item = Point>) -> Result<Self> {
        if dim == 0 {
            return Err(MorphError::ZeroDimension);
        }
        let mut entries = Vec::new();
        for p in points {
            check_dim(dim, p.dim())?;
            entries.push((p.0, true));
        }
        Ok(BinaryImage(Raster::from_entries(dim, entries)))
    }

    /// The full box `min..=max`.
    pub fn from_window(window: &Window) -> Self {
        window.to_binary()
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn len(&self) -> usize {
        self.0.count()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.dim() == self.dim() && self.0.get(p.coords())
    }

    /// Points in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = Point> + '_ {
        self.0.entries().map(|(c, _)| Point(c))
    }

    pub fn bounding_box(&self) -> Option<Window> {
        if self.is_empty() {
            return None;
        }
        let f = &self.0.frame;
        Some(Window {
            min: Point(f.origin.clone()),
            max: Point(
                f.origin
                    .iter()
                    .zip(&f.shape)
                    .map(|(o, s)| o + *s as i64 - 1)
                    .collect(),
            ),
        })
    }

    pub fn union(&self, other: &BinaryImage) -> BinaryImage {
        BinaryImage(self.0.zip_with(&other.0, |a, b| a || b))
    }

    pub fn intersection(&self, other: &BinaryImage) -> BinaryImage {
        BinaryImage(self.0.zip_with(&other.0, |a, b| a && b))
    }

    pub fn difference(&self, other: &BinaryImage) -> BinaryImage {
        BinaryImage(self.0.zip_with(&other.0, |a, b| a && !b))
    }

    pub fn is_subset(&self, other: &BinaryImage) -> bool {
        self.0.entries().all(|(c, _)| other.0.get(&c))
    }

    /// First point of `self` missing from `other`, in lexicographic order.
    pub fn first_outside(&self, other: &BinaryImage) -> Option<Point> {
        self.0
            .entries()
            .find(|(c, _)| !other.0.get(c))
            .map(|(c, _)| Point(c))
    }
}

/// A grey-value image `f: F -> [0, l]` on a finite domain `F`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GreyImage {
    pub(crate) raster: Raster<u32>,
    ceiling: u32,
}

impl GreyImage {
    pub fn empty(dim: usize, ceiling: u32) -> Result<Self> {
        validate_ceiling(ceiling)?;
        if dim == 0 {
            return Err(MorphError::ZeroDimension);
        }
        Ok(GreyImage {
            raster: Raster::empty(dim),
            ceiling,
        })
    }

    pub fn from_pixels(
        dim: usize,
        ceiling: u32,
        pixels: impl IntoIterator<Item = (Point, u32)>,
    ) -> Result<Self> {
        validate_ceiling(ceiling)?;
        if dim == 0 {
            return Err(MorphError::ZeroDimension);
        }
        let mut entries = Vec::new();
        for (p, v) in pixels {
            check_dim(dim, p.dim())?;
            if v > ceiling {
                return Err(MorphError::ValueOutOfRange { value: v, ceiling });
            }
            entries.push((p.0, v));
        }
        Ok(GreyImage {
            raster: Raster::from_entries(dim, entries),
            ceiling,
        })
    }

    /// 2-D image from row-major rows; `None` marks a hole. Row 0, column 0
    /// sits at `origin`.
    pub fn from_rows(ceiling: u32, origin: [i64; 2], rows: &[Vec<Option<u32>>]) -> Result<Self> {
        let pixels = rows.iter().enumerate().flat_map(|(r, row)| {
            row.iter().enumerate().filter_map(move |(c, v)| {
                v.map(|v| (Point::from([origin[0] + r as i64, origin[1] + c as i64]), v))
            })
        });
        GreyImage::from_pixels(2, ceiling, pixels)
    }

    /// The constant image `value` on `domain`.
    pub fn constant(domain: &BinaryImage, value: u32, ceiling: u32) -> Result<Self> {
        validate_ceiling(ceiling)?;
        if value > ceiling {
            return Err(MorphError::ValueOutOfRange { value, ceiling });
        }
        Ok(GreyImage {
            raster: domain.0.map(|_, _| value),
            ceiling,
        })
    }

    pub(crate) fn from_raster(raster: Raster<u32>, ceiling: u32) -> Self {
        GreyImage { raster, ceiling }
    }

    pub fn dim(&self) -> usize {
        self.raster.dim
    }

    pub fn ceiling(&self) -> u32 {
        self.ceiling
    }

    pub fn len(&self) -> usize {
        self.raster.count()
    }

    pub fn is_empty(&self) -> bool {
        self.raster.is_empty()
    }

    pub fn get(&self, p: &Point) -> Option<u32> {
        if p.dim() != self.dim() {
            return None;
        }
        match self.raster.get(p.coords()) {
            u32::MAX => None,
            v => Some(v),
        }
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.get(p).is_some()
    }

    pub fn domain(&self) -> BinaryImage {
        BinaryImage(self.raster.map(|_, _| true))
    }

    /// Pixels in lexicographic order of position.
    pub fn iter(&self) -> impl Iterator<Item = (Point, u32)> + '_ {
        self.raster.entries().map(|(c, v)| (Point(c), v))
    }

    pub fn max_value(&self) -> Option<u32> {
        self.iter().map(|(_, v)| v).max()
    }

    pub fn min_value(&self) -> Option<u32> {
        self.iter().map(|(_, v)| v).min()
    }

    pub fn bounding_box(&self) -> Option<Window> {
        self.domain().bounding_box()
    }

    /// Same pixels under a different grey-value ceiling.
    pub fn with_ceiling(&self, ceiling: u32) -> Result<Self> {
        validate_ceiling(ceiling)?;
        if let Some(v) = self.max_value().filter(|&v| v > ceiling) {
            return Err(MorphError::ValueOutOfRange { value: v, ceiling });
        }
        Ok(GreyImage {
            raster: self.raster.clone(),
            ceiling,
        })
    }

    /// Keeps the pixels in `domain`.
    pub fn restrict_to(&self, domain: &BinaryImage) -> GreyImage {
        GreyImage {
            raster: self.raster.zip_with(&domain.0, |v, keep| if keep { v } else { u32::ABSENT }),
            ceiling: self.ceiling,
        }
    }

    /// Applies `f` to every value; results are clamped to `[0, ceiling]`.
    pub fn map_values(&self, mut f: impl FnMut(&Point, u32) -> i64) -> GreyImage {
        let ceiling = self.ceiling;
        GreyImage {
            raster: self.raster.map(|c, v| {
                f(&Point::new(c), v).clamp(0, ceiling as i64) as u32
            }),
            ceiling,
        }
    }
}

fn validate_ceiling(ceiling: u32) -> Result<()> {
    if ceiling == 0 || ceiling == u32::MAX {
        Err(MorphError::InvalidCeiling(ceiling))
    } else {
        Ok(())
    }
}

/// The sampling lattice `S = d_1 Z x ... x d_N Z`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Sieve {
    spacing: SmallVec<[i64; 4]>,
}

impl Sieve {
    pub fn new(spacing: &[i64]) -> Result<Self> {
        if spacing.is_empty() {
            return Err(MorphError::ZeroDimension);
        }
        if spacing.iter().any(|&d| d <= 0) {
            return Err(MorphError::InvalidSieve(spacing.to_vec()));
        }
        Ok(Sieve {
            spacing: SmallVec::from_slice(spacing),
        })
    }

    /// The identity sieve `S = E^N`.
    pub fn unit(dim: usize) -> Self {
        Sieve {
            spacing: smallvec::smallvec![1; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.spacing.len()
    }

    pub fn spacing(&self) -> &[i64] {
        &self.spacing
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.contains_coords(p.coords())
    }

    pub(crate) fn contains_coords(&self, coords: &[i64]) -> bool {
        coords.len() == self.spacing.len()
            && coords
                .iter()
                .zip(&self.spacing)
                .all(|(c, d)| c.rem_euclid(*d) == 0)
    }

    /// One representative of every residue class of `E^N / S`, i.e. the
    /// cell `[0, d_1) x ... x [0, d_N)`.
    pub fn period_cell(&self) -> Window {
        Window {
            min: Point::origin(self.dim()),
            max: Point(self.spacing.iter().map(|d| d - 1).collect()),
        }
    }
}

/// `(A)_x = { a + x : a in A }`.
pub fn translate(a: &BinaryImage, x: &Point) -> Result<BinaryImage> {
    check_dim(a.dim(), x.dim())?;
    let mut raster = a.0.clone();
    for (o, d) in raster.frame.origin.iter_mut().zip(x.coords()) {
        *o += d;
    }
    if raster.is_empty() {
        raster = Raster::empty(a.dim());
    }
    Ok(BinaryImage(raster))
}

/// `B^ = { -b : b in B }`.
pub fn reflect(b: &BinaryImage) -> BinaryImage {
    BinaryImage::from_points(b.dim(), b.iter().map(|p| -&p)).expect("same dimension")
}

/// `F ∩ S` in the original coordinates.
pub fn restrict_binary(a: &BinaryImage, s: &Sieve) -> BinaryImage {
    assert_eq!(a.dim(), s.dim(), "sieve dimension must match the image");
    BinaryImage(a.0.map(|c, _| s.contains_coords(c)))
}

/// `f|_S`: the pixels of `f` that lie on the sieve, coordinates unchanged.
pub fn restrict(f: &GreyImage, s: &Sieve) -> GreyImage {
    assert_eq!(f.dim(), s.dim(), "sieve dimension must match the image");
    GreyImage {
        raster: f
            .raster
            .map(|c, v| if s.contains_coords(c) { v } else { u32::ABSENT }),
        ceiling: f.ceiling,
    }
}

/// Boundedness order: `f <= g` iff `F ⊆ G` and `f(x) <= g(x)` on `F`.
pub fn le(f: &GreyImage, g: &GreyImage) -> Result<bool> {
    if f.ceiling != g.ceiling {
        return Err(MorphError::CeilingMismatch {
            left: f.ceiling,
            right: g.ceiling,
        });
    }
    Ok(first_le_violation(f, g).is_none())
}

/// First pixel of `f` (lexicographic) where `f <= g` breaks.
pub(crate) fn first_le_violation(f: &GreyImage, g: &GreyImage) -> Option<(Point, u32, Option<u32>)> {
    f.raster.entries().find_map(|(c, v)| match g.raster.get(&c) {
        u32::MAX => Some((Point(c), v, None)),
        w if v > w => Some((Point(c), v, Some(w))),
        _ => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(points: &[[i64; 2]]) -> BinaryImage {
        BinaryImage::from_points(2, points.iter().map(|&p| Point::from(p))).unwrap()
    }

    fn square(rows: i64, cols: i64, value: u32) -> GreyImage {
        let pixels = (0..rows).flat_map(|r| (0..cols).map(move |c| (Point::from([r, c]), value)));
        GreyImage::from_pixels(2, 255, pixels).unwrap()
    }

    #[test]
    fn translate_examples() {
        let a = set(&[[0, 0], [1, 0]]);
        assert_eq!(translate(&a, &Point::from([0, 0])).unwrap(), a);
        assert_eq!(
            translate(&set(&[[0, 0]]), &Point::from([2, 3])).unwrap(),
            set(&[[2, 3]])
        );
        assert!(translate(&BinaryImage::empty(2), &Point::from([5, 5]))
            .unwrap()
            .is_empty());
        assert!(matches!(
            translate(&a, &Point::from([1, 1, 1])),
            Err(MorphError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(reflect(&set(&[[1, 0], [0, 1]])), set(&[[-1, 0], [0, -1]]));
        let bx = Window::new(Point::from([-1, -1]), Point::from([1, 1])).unwrap().to_binary();
        assert_eq!(reflect(&bx), bx);
        assert!(reflect(&BinaryImage::empty(2)).is_empty());
    }

    #[test]
    fn restrict_examples() {
        let f = square(4, 4, 9);
        let fs = restrict(&f, &Sieve::new(&[2, 2]).unwrap());
        let kept: Vec<Point> = fs.iter().map(|(p, _)| p).collect();
        assert_eq!(
            kept,
            vec![
                Point::from([0, 0]),
                Point::from([0, 2]),
                Point::from([2, 0]),
                Point::from([2, 2])
            ]
        );
        assert!(fs.iter().all(|(_, v)| v == 9));
        assert_eq!(fs.ceiling(), 255);

        assert_eq!(restrict(&f, &Sieve::unit(2)), f);

        let odd = GreyImage::from_pixels(2, 255, [(Point::from([1, 1]), 4), (Point::from([1, 3]), 5)])
            .unwrap();
        assert!(restrict(&odd, &Sieve::new(&[2, 2]).unwrap()).is_empty());
    }

    #[test]
    fn negative_coordinates_follow_the_lattice() {
        let s = Sieve::new(&[2, 3]).unwrap();
        assert!(s.contains(&Point::from([-2, -3])));
        assert!(!s.contains(&Point::from([-1, 0])));
        assert!(Sieve::new(&[2, 0]).is_err());
    }

    #[test]
    fn le_examples() {
        let g = square(2, 2, 5);
        assert!(le(&g, &g).unwrap());
        let wider = square(3, 2, 1);
        assert!(!le(&wider, &g).unwrap());
        let a = GreyImage::from_pixels(2, 255, [(Point::from([0, 0]), 3)]).unwrap();
        let b = GreyImage::from_pixels(2, 255, [(Point::from([0, 0]), 5)]).unwrap();
        assert!(le(&a, &b).unwrap());
        assert!(!le(&b, &a).unwrap());
        let other = GreyImage::from_pixels(2, 15, [(Point::from([0, 0]), 5)]).unwrap();
        assert!(matches!(le(&a, &other), Err(MorphError::CeilingMismatch { .. })));
    }

    #[test]
    fn values_above_ceiling_are_rejected() {
        let err = GreyImage::from_pixels(2, 7, [(Point::from([0, 0]), 8)]).unwrap_err();
        assert_eq!(err, MorphError::ValueOutOfRange { value: 8, ceiling: 7 });
        assert!(GreyImage::empty(2, 0).is_err());
    }

    #[test]
    fn representation_is_canonical() {
        let a = set(&[[3, 3], [5, 4]]);
        let b = set(&[[5, 4], [3, 3], [3, 3]]);
        assert_eq!(a, b);
        let shrunk = a.difference(&set(&[[5, 4]]));
        assert_eq!(shrunk, set(&[[3, 3]]));
        assert_eq!(a.len(), 2);
    }

    #[test]
    fn frame_walk_matches_index_arithmetic() {
        let frame = Frame {
            origin: smallvec::smallvec![-1, 2, 0],
            shape: smallvec::smallvec![2, 3, 4],
        };
        let strides = [100usize, 10, 1];
        let walk = frame.walk(&strides);
        for (i, off) in walk.iter().enumerate() {
            let c = frame.coords_of(i);
            let m: Vec<usize> = c
                .iter()
                .zip(&frame.origin)
                .map(|(c, o)| (c - o) as usize)
                .collect();
            assert_eq!(*off, m[0] * 100 + m[1] * 10 + m[2]);
            assert_eq!(frame.index_of(&c), Some(i));
        }
    }
}
