// Grey-value relations: the grey sampling theorem and its extensions to
// dilation, erosion, opening and closing by a structuring element b.

use crate::binary_morph::bopen;
use crate::error::{MorphError, Result};
use crate::grey_morph::{gclose, gdilate, gerode, gopen};
use crate::grid::{restrict, GreyImage, Point};

use super::report::{grey_eq, grey_le, RelationResult, Witness};
use super::{sampled_grey, FilterSpec, SampledOp};

type Results = Result<Vec<RelationResult>>;

fn guarded(names: &[&str], r: Results) -> Results {
    match r {
        Err(MorphError::EmptyStructuringElement) => {
            Ok(names.iter().map(|n| RelationResult::premise_unmet(n)).collect())
        }
        other => other,
    }
}

fn unmet(names: &[&str]) -> Results {
    Ok(names.iter().map(|n| RelationResult::premise_unmet(n)).collect())
}

/// `b = b o k` together with `B = B o K`.
pub fn is_filtered(b: &GreyImage, spec: &FilterSpec) -> Result<bool> {
    let bd = b.domain();
    Ok(gopen(b, spec.k())? == *b && bopen(&bd, &spec.domain())? == bd)
}

fn sandwich(name: &str, lo: &GreyImage, mid: &GreyImage, hi: &GreyImage) -> RelationResult {
    let r = grey_le(name, lo, mid);
    if r.is_fail() {
        return r;
    }
    grey_le(name, mid, hi)
}

/// Results I-V of the grey sampling theorem. V needs `f = f o k = f • k`.
pub fn grey_sampling(f: &GreyImage, spec: &FilterSpec) -> Results {
    let (k, s) = (spec.k(), spec.sieve());
    let fs = restrict(f, s);
    let closed = gclose(&fs, k)?;
    let dilated = gdilate(&fs, k)?;
    let mut out = vec![
        grey_eq("grey-sampling-i", &fs, &restrict(&closed, s)),
        grey_eq("grey-sampling-ii", &fs, &restrict(&dilated, s)),
        grey_le("grey-sampling-iii", &closed, &gclose(f, k)?),
        grey_le("grey-sampling-iv", &gopen(f, k)?, &dilated),
    ];
    let fixpoint = gopen(f, k)? == *f && gclose(f, k)? == *f;
    out.push(if fixpoint {
        sandwich("grey-sampling-v", &closed, f, &dilated)
    } else {
        RelationResult::premise_unmet("grey-sampling-v")
    });
    Ok(out)
}

/// Result VI: if `g = g • k`, `g|_S = f|_S` and `g <= f|_S • k`, then
/// `g = f|_S • k`.
pub fn grey_sampling_vi(f: &GreyImage, g: &GreyImage, spec: &FilterSpec) -> Result<RelationResult> {
    let name = "grey-sampling-vi";
    let (k, s) = (spec.k(), spec.sieve());
    let fs = restrict(f, s);
    let closed = gclose(&fs, k)?;
    let premise = gclose(g, k)? == *g && restrict(g, s) == fs && grey_le(name, g, &closed).status.eq(&super::Status::Pass);
    Ok(if premise {
        grey_eq(name, g, &closed)
    } else {
        RelationResult::premise_unmet(name)
    })
}

/// Result VII: if `g = g o k`, `g|_S = f|_S` and `g >= f|_S (+) k`, then
/// `g = f|_S (+) k`.
pub fn grey_sampling_vii(f: &GreyImage, g: &GreyImage, spec: &FilterSpec) -> Result<RelationResult> {
    let name = "grey-sampling-vii";
    let (k, s) = (spec.k(), spec.sieve());
    let fs = restrict(f, s);
    let dilated = gdilate(&fs, k)?;
    let premise = gopen(g, k)? == *g && restrict(g, s) == fs && grey_le(name, &dilated, g).status.eq(&super::Status::Pass);
    Ok(if premise {
        grey_eq(name, g, &dilated)
    } else {
        RelationResult::premise_unmet(name)
    })
}

/// `(f|_S • k)` with pixel `x` lowered to `value` (or removed when `None`),
/// then closed by `k`.
pub fn grey_vi_candidate(f: &GreyImage, spec: &FilterSpec, x: &Point, value: Option<u32>) -> Result<GreyImage> {
    let closed = gclose(&restrict(f, spec.sieve()), spec.k())?;
    let perturbed = GreyImage::from_pixels(
        f.dim(),
        f.ceiling(),
        closed.iter().filter_map(|(p, v)| {
            if p == *x {
                value.map(|w| (p, w.min(v)))
            } else {
                Some((p, v))
            }
        }),
    )?;
    gclose(&perturbed, spec.k())
}

/// `(f|_S (+) k)` with pixel `x` raised to `value` (added if absent), then
/// opened by `k`.
pub fn grey_vii_candidate(f: &GreyImage, spec: &FilterSpec, x: &Point, value: u32) -> Result<GreyImage> {
    let dilated = gdilate(&restrict(f, spec.sieve()), spec.k())?;
    let mut pixels: Vec<(Point, u32)> = dilated.iter().filter(|(p, _)| p != x).collect();
    pixels.push((x.clone(), value.max(dilated.get(x).unwrap_or(0))));
    gopen(&GreyImage::from_pixels(f.dim(), f.ceiling(), pixels)?, spec.k())
}

/// Results I-VII, with VI and VII at the first off-sample pixel of each
/// reconstruction.
pub fn check_grey_sampling(f: &GreyImage, spec: &FilterSpec) -> Results {
    let s = spec.sieve();
    let mut out = grey_sampling(f, spec)?;
    let fs = restrict(f, s);
    let closed = gclose(&fs, spec.k())?;
    let off = closed.iter().find(|(p, _)| !s.contains(p));
    let g = match off {
        Some((p, v)) => grey_vi_candidate(f, spec, &p, Some(v / 2))?,
        None => closed,
    };
    out.push(grey_sampling_vi(f, &g, spec)?);
    let dilated = gdilate(&fs, spec.k())?;
    let off = dilated.iter().find(|(p, _)| !s.contains(p));
    let g = match off {
        Some((p, v)) => grey_vii_candidate(f, spec, &p, (v + 5).min(f.ceiling()))?,
        None => dilated,
    };
    out.push(grey_sampling_vii(f, &g, spec)?);
    Ok(out)
}

/// I: `f|_S (+) b|_S <= (f (+) b)|_S`; II: `(f (-) b)|_S <= f|_S (-) b|_S`.
pub fn grey_prop14a(f: &GreyImage, b: &GreyImage, spec: &FilterSpec) -> Results {
    let s = spec.sieve();
    let (fs, bs) = (restrict(f, s), restrict(b, s));
    let i = grey_le(
        "grey-prop14a-i",
        &sampled_grey(SampledOp::Dilate, &fs, &bs, s)?,
        &restrict(&gdilate(f, b)?, s),
    );
    let ii = guarded(&["grey-prop14a-ii"], (|| {
        Ok(vec![grey_le(
            "grey-prop14a-ii",
            &restrict(&gerode(f, b)?, s),
            &sampled_grey(SampledOp::Erode, &fs, &bs, s)?,
        )])
    })())?;
    Ok([vec![i], ii].concat())
}

/// I: `f|_S (+) b|_S = (f (+) b|_S)|_S`; II: the same for erosion.
pub fn grey_lemma_aa(f: &GreyImage, b: &GreyImage, spec: &FilterSpec) -> Results {
    let s = spec.sieve();
    let (fs, bs) = (restrict(f, s), restrict(b, s));
    let i = guarded(&["grey-lemma-aa-i"], (|| {
        Ok(vec![grey_eq(
            "grey-lemma-aa-i",
            &sampled_grey(SampledOp::Dilate, &fs, &bs, s)?,
            &restrict(&gdilate(f, &bs)?, s),
        )])
    })())?;
    let ii = guarded(&["grey-lemma-aa-ii"], (|| {
        Ok(vec![grey_eq(
            "grey-lemma-aa-ii",
            &sampled_grey(SampledOp::Erode, &fs, &bs, s)?,
            &restrict(&gerode(f, &bs)?, s),
        )])
    })())?;
    Ok([i, ii].concat())
}

/// With `b = b o k`: `(f|_S • k) (+) b <= (f|_S (+) k) (+) b|_S`.
pub fn grey_lemma_ba(f: &GreyImage, b: &GreyImage, spec: &FilterSpec) -> Results {
    let names = ["grey-lemma-ba"];
    if !is_filtered(b, spec)? {
        return unmet(&names);
    }
    let (k, s) = (spec.k(), spec.sieve());
    let fs = restrict(f, s);
    guarded(&names, (|| {
        let lhs = gdilate(&gclose(&fs, k)?, b)?;
        let rhs = gdilate(&gdilate(&fs, k)?, &restrict(b, s))?;
        Ok(vec![grey_le(names[0], &lhs, &rhs)])
    })())
}

/// With `b = b o k`: `f|_S (+) b|_S = ((f|_S • k) (+) b)|_S`.
pub fn grey_sample_dilation(f: &GreyImage, b: &GreyImage, spec: &FilterSpec) -> Results {
    let names = ["grey-sample-dilation"];
    if !is_filtered(b, spec)? {
        return unmet(&names);
    }
    let (k, s) = (spec.k(), spec.sieve());
    let (fs, bs) = (restrict(f, s), restrict(b, s));
    guarded(&names, (|| {
        let lhs = sampled_grey(SampledOp::Dilate, &fs, &bs, s)?;
        let rhs = restrict(&gdilate(&gclose(&fs, k)?, b)?, s);
        Ok(vec![grey_eq(names[0], &lhs, &rhs)])
    })())
}

/// With `b = b o k`: `f|_S (-) b|_S = ((f|_S (+) k) (-) b)|_S`.
pub fn grey_sample_erosion(f: &GreyImage, b: &GreyImage, spec: &FilterSpec) -> Results {
    let names = ["grey-sample-erosion"];
    if !is_filtered(b, spec)? {
        return unmet(&names);
    }
    let (k, s) = (spec.k(), spec.sieve());
    let (fs, bs) = (restrict(f, s), restrict(b, s));
    guarded(&names, (|| {
        let lhs = sampled_grey(SampledOp::Erode, &fs, &bs, s)?;
        let rhs = restrict(&gerode(&gdilate(&fs, k)?, b)?, s);
        Ok(vec![grey_eq(names[0], &lhs, &rhs)])
    })())
}

/// `(f o b|_S)|_S = f|_S o b|_S`.
pub fn grey_prop16a(f: &GreyImage, b: &GreyImage, spec: &FilterSpec) -> Results {
    let names = ["grey-prop16a"];
    let s = spec.sieve();
    let (fs, bs) = (restrict(f, s), restrict(b, s));
    guarded(&names, (|| {
        let lhs = restrict(&gopen(f, &bs)?, s);
        Ok(vec![grey_eq(names[0], &lhs, &sampled_grey(SampledOp::Open, &fs, &bs, s)?)])
    })())
}

/// `(f • b|_S)|_S = f|_S • b|_S`.
pub fn grey_prop17a(f: &GreyImage, b: &GreyImage, spec: &FilterSpec) -> Results {
    let names = ["grey-prop17a"];
    let s = spec.sieve();
    let (fs, bs) = (restrict(f, s), restrict(b, s));
    guarded(&names, (|| {
        let lhs = restrict(&gclose(f, &bs)?, s);
        Ok(vec![grey_eq(names[0], &lhs, &sampled_grey(SampledOp::Close, &fs, &bs, s)?)])
    })())
}

const BOUNDS: [&str; 4] = [
    "grey-open-close-bounds-i-lower",
    "grey-open-close-bounds-i-upper",
    "grey-open-close-bounds-ii-lower",
    "grey-open-close-bounds-ii-upper",
];

/// With `b = b o k`:
/// `(f o [b|_S (+) k])|_S <= f|_S o b|_S <= ((f|_S (+) k) o b)|_S` and
/// `((f|_S • k) • b)|_S <= f|_S • b|_S <= (f • (b|_S (+) k))|_S`.
pub fn grey_open_close_bounds(f: &GreyImage, b: &GreyImage, spec: &FilterSpec) -> Results {
    if !is_filtered(b, spec)? {
        return unmet(&BOUNDS);
    }
    let (k, s) = (spec.k(), spec.sieve());
    let (fs, bs) = (restrict(f, s), restrict(b, s));
    guarded(&BOUNDS, (|| {
        let bs_k = gdilate(&bs, k)?;
        let opened = sampled_grey(SampledOp::Open, &fs, &bs, s)?;
        let closed = sampled_grey(SampledOp::Close, &fs, &bs, s)?;
        Ok(vec![
            grey_le(BOUNDS[0], &restrict(&gopen(f, &bs_k)?, s), &opened),
            grey_le(BOUNDS[1], &opened, &restrict(&gopen(&gdilate(&fs, k)?, b)?, s)),
            grey_le(BOUNDS[2], &restrict(&gclose(&gclose(&fs, k)?, b)?, s), &closed),
            grey_le(BOUNDS[3], &closed, &restrict(&gclose(f, &bs_k)?, s)),
        ])
    })())
}

/// With `b = b o k` and `b = b|_S (+) k` (so `B = (B∩S) (+) K`):
/// I: if `f = f|_S (+) k` then `f|_S o b|_S = (f o b)|_S`;
/// II: if `f = f|_S • k` then `f|_S • b|_S = (f • b)|_S`.
pub fn grey_open_close_exact(f: &GreyImage, b: &GreyImage, spec: &FilterSpec) -> Results {
    let (n1, n2) = ("grey-open-close-exact-i", "grey-open-close-exact-ii");
    let (k, s) = (spec.k(), spec.sieve());
    let (fs, bs) = (restrict(f, s), restrict(b, s));
    if bs.is_empty() || !is_filtered(b, spec)? || gdilate(&bs, k)? != *b {
        return unmet(&[n1, n2]);
    }
    let i = if gdilate(&fs, k)? == *f {
        grey_eq(
            n1,
            &sampled_grey(SampledOp::Open, &fs, &bs, s)?,
            &restrict(&gopen(f, b)?, s),
        )
    } else {
        RelationResult::premise_unmet(n1)
    };
    let ii = if gclose(&fs, k)? == *f {
        grey_eq(
            n2,
            &sampled_grey(SampledOp::Close, &fs, &bs, s)?,
            &restrict(&gclose(f, b)?, s),
        )
    } else {
        RelationResult::premise_unmet(n2)
    };
    Ok(vec![i, ii])
}

/// For `f = f o k`: every pixel `p` is dominated from some sample `s` of
/// `F∩S` with `p - s` in `K`, i.e. `f(p) <= f(s) + k(p - s)`. This is the
/// bound the proofs draw from the translate inequality; it is what makes
/// `f <= f|_S (+) k` hold pixel by pixel without clamping.
pub fn grey_prop22(f: &GreyImage, spec: &FilterSpec) -> Results {
    let name = "grey-prop22";
    let (k, s) = (spec.k(), spec.sieve());
    if gopen(f, k)? != *f {
        return unmet(&[name]);
    }
    let offsets: Vec<(Point, u32)> = k.iter().collect();
    for (p, v) in f.iter() {
        let mut best: Option<u32> = None;
        for (u, ku) in &offsets {
            let q = &p - u;
            if s.contains(&q) {
                if let Some(fq) = f.get(&q) {
                    let bound = fq + ku;
                    best = Some(best.map_or(bound, |b| b.max(bound)));
                }
            }
        }
        if best.is_none_or(|b| v > b) {
            return Ok(vec![RelationResult::fail(
                name,
                Some(Witness {
                    x: p,
                    lhs: Some(v),
                    rhs: best,
                }),
            )]);
        }
    }
    Ok(vec![RelationResult::pass(name)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binary_morph::centered_box;
    use crate::grid::Sieve;
    use crate::sampling::Status;

    fn k2() -> GreyImage {
        let px: Vec<(Point, u32)> = centered_box(2, 1)
            .iter()
            .map(|p| {
                let v = if p.is_origin() { 0 } else { 10 };
                (p, v)
            })
            .collect();
        GreyImage::from_pixels(2, 255, px).unwrap()
    }

    fn texture() -> GreyImage {
        let rows: Vec<Vec<Option<u32>>> = (0..12)
            .map(|r| {
                (0..12)
                    .map(|c| if (r * 7 + c * 3) % 11 == 0 { None } else { Some(((r * 13 + c * 29) % 64) as u32) })
                    .collect()
            })
            .collect();
        GreyImage::from_rows(255, [0, 0], &rows).unwrap()
    }

    #[test]
    fn theorem_holds_on_a_fixed_image() {
        for k in [GreyImage::constant(&centered_box(2, 1), 0, 255).unwrap(), k2()] {
            let spec = FilterSpec::new(k, Sieve::new(&[2, 2]).unwrap()).unwrap();
            for r in check_grey_sampling(&texture(), &spec).unwrap() {
                assert_ne!(r.status, Status::Fail, "{}", r.line());
            }
        }
    }

    #[test]
    fn sample_dilation_with_opened_b() {
        let spec = FilterSpec::new(k2(), Sieve::new(&[2, 2]).unwrap()).unwrap();
        let b_raw = GreyImage::constant(&centered_box(2, 2), 10, 255).unwrap();
        let b = gopen(&b_raw, spec.k()).unwrap();
        let f = texture();
        let mut all = grey_sample_dilation(&f, &b, &spec).unwrap();
        all.extend(grey_sample_erosion(&f, &b, &spec).unwrap());
        all.extend(grey_lemma_ba(&f, &b, &spec).unwrap());
        all.extend(grey_open_close_bounds(&f, &b, &spec).unwrap());
        all.extend(grey_prop14a(&f, &b_raw, &spec).unwrap());
        all.extend(grey_lemma_aa(&f, &b_raw, &spec).unwrap());
        all.extend(grey_prop16a(&f, &b_raw, &spec).unwrap());
        all.extend(grey_prop17a(&f, &b_raw, &spec).unwrap());
        all.extend(grey_prop22(&gopen(&f, spec.k()).unwrap(), &spec).unwrap());
        for r in &all {
            assert_eq!(r.status, Status::Pass, "{}", r.line());
        }
    }
}
