// Dense offset-arithmetic kernels shared by the binary and grey operators.
//
// Both operands are tight rasters, so `frame.origin` is the minimum corner of
// each domain. Dilation writes into the frame of `F (+) K`; erosion scans the
// frame of candidates `x` with `x + K` inside the bounding box of `F`.

use crate::grid::{Extent, Frame, Raster};

fn sum_frame(f: &Frame, k: &Frame) -> Frame {
    Frame {
        origin: f.origin.iter().zip(&k.origin).map(|(a, b)| a + b).collect(),
        shape: f.shape.iter().zip(&k.shape).map(|(a, b)| a + b - 1).collect(),
    }
}

fn erosion_frame(f: &Frame, k: &Frame) -> Option<Frame> {
    if f.shape.iter().zip(&k.shape).any(|(a, b)| a < b) {
        return None;
    }
    Some(Frame {
        origin: f.origin.iter().zip(&k.origin).map(|(a, b)| a - b).collect(),
        shape: f.shape.iter().zip(&k.shape).map(|(a, b)| a - b + 1).collect(),
    })
}

pub(crate) fn dilate_bool(f: &Raster<bool>, k: &Raster<bool>) -> Raster<bool> {
    if f.is_empty() || k.is_empty() {
        return Raster::empty(f.dim);
    }
    let frame = sum_frame(&f.frame, &k.frame);
    let strides = frame.strides();
    let fo = f.local_offsets(&strides);
    let ko = k.local_offsets(&strides);
    let mut cells = vec![false; frame.len()];
    for &(a, _) in &fo {
        for &(b, _) in &ko {
            cells[a + b] = true;
        }
    }
    Raster::from_parts(f.dim, frame, cells)
}

pub(crate) fn erode_bool(f: &Raster<bool>, k: &Raster<bool>) -> Raster<bool> {
    let Some(frame) = erosion_frame(&f.frame, &k.frame) else {
        return Raster::empty(f.dim);
    };
    if f.is_empty() {
        return Raster::empty(f.dim);
    }
    let fs: Extent = f.frame.strides();
    let ko = k.local_offsets(&fs);
    let base = frame.walk(&fs);
    let cells = base
        .iter()
        .map(|&x| ko.iter().all(|&(u, _)| f.cells[x + u]))
        .collect();
    Raster::from_parts(f.dim, frame, cells)
}

/// `min(l, max_u f(x-u) + k(u))` over `F (+) K`.
pub(crate) fn dilate_grey(f: &Raster<u32>, k: &Raster<u32>, ceiling: u32) -> Raster<u32> {
    if f.is_empty() || k.is_empty() {
        return Raster::empty(f.dim);
    }
    let frame = sum_frame(&f.frame, &k.frame);
    let strides = frame.strides();
    let fo = f.local_offsets(&strides);
    let ko = k.local_offsets(&strides);
    let mut acc = vec![-1i64; frame.len()];
    for &(a, fv) in &fo {
        for &(b, kv) in &ko {
            let v = fv as i64 + kv as i64;
            let slot = &mut acc[a + b];
            if v > *slot {
                *slot = v;
            }
        }
    }
    let cells = acc
        .into_iter()
        .map(|v| if v < 0 { u32::MAX } else { v.min(ceiling as i64) as u32 })
        .collect();
    Raster::from_parts(f.dim, frame, cells)
}

/// Raw `min_u f(x+u) - k(u)` over `F (-) K`; `None` marks candidates outside
/// the binary erosion.
pub(crate) fn erode_grey_raw(f: &Raster<u32>, k: &Raster<u32>) -> (Frame, Vec<Option<i64>>) {
    let dim = f.dim;
    let Some(frame) = erosion_frame(&f.frame, &k.frame).filter(|_| !f.is_empty()) else {
        return (Frame::empty(dim), Vec::new());
    };
    let fs: Extent = f.frame.strides();
    let ko = k.local_offsets(&fs);
    let base = frame.walk(&fs);
    let raw = base
        .iter()
        .map(|&x| {
            let mut m = i64::MAX;
            for &(u, kv) in &ko {
                let fv = f.cells[x + u];
                if fv == u32::MAX {
                    return None;
                }
                m = m.min(fv as i64 - kv as i64);
            }
            Some(m)
        })
        .collect();
    (frame, raw)
}
