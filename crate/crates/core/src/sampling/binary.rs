// Binary relations: the binary sampling theorem and the set identities that
// relate sampling with dilation, erosion, opening and closing.

use crate::binary_morph::{bclose, bdilate, berode, bopen};
use crate::error::{MorphError, Result};
use crate::grid::{restrict_binary, BinaryImage, Point, Sieve};

use super::report::{set_eq, subset, RelationResult};
use super::{sampled_binary, SampledOp};

type Results = Result<Vec<RelationResult>>;

/// Erosion by an empty sampled SE is undefined; report it as an unmet premise.
fn guarded(name: &str, r: Result<RelationResult>) -> Result<RelationResult> {
    match r {
        Err(MorphError::EmptyStructuringElement) => Ok(RelationResult::premise_unmet(name)),
        other => other,
    }
}

fn is_k_open(b: &BinaryImage, k: &BinaryImage) -> Result<bool> {
    Ok(bopen(b, k)? == *b)
}

/// Both inclusions of a sandwich `lo ⊆ mid ⊆ hi`, as one result.
fn sandwich(name: &str, lo: &BinaryImage, mid: &BinaryImage, hi: &BinaryImage) -> RelationResult {
    let r = subset(name, lo, mid);
    if r.is_fail() {
        return r;
    }
    subset(name, mid, hi)
}

/// Results I-V of the binary sampling theorem. Result V is premise-unmet
/// unless `F = F o K = F • K`.
pub fn bin_sampling(f: &BinaryImage, k: &BinaryImage, s: &Sieve) -> Results {
    let fs = restrict_binary(f, s);
    let closed = bclose(&fs, k)?;
    let dilated = bdilate(&fs, k)?;
    let mut out = vec![
        set_eq("bin-sampling-i", &fs, &restrict_binary(&closed, s)),
        set_eq("bin-sampling-ii", &fs, &restrict_binary(&dilated, s)),
        subset("bin-sampling-iii", &closed, &bclose(f, k)?),
        subset("bin-sampling-iv", &bopen(f, k)?, &dilated),
    ];
    let fixpoint = bopen(f, k)? == *f && bclose(f, k)? == *f;
    out.push(if fixpoint {
        sandwich("bin-sampling-v", &closed, f, &dilated)
    } else {
        RelationResult::premise_unmet("bin-sampling-v")
    });
    Ok(out)
}

/// Result VI for a given `A`: if `A = A o K`, `F∩S = A∩S` and
/// `A ⊇ (F∩S) (+) K`, then `A = (F∩S) (+) K`.
pub fn bin_sampling_vi(f: &BinaryImage, a: &BinaryImage, k: &BinaryImage, s: &Sieve) -> Result<RelationResult> {
    let name = "bin-sampling-vi";
    let fs = restrict_binary(f, s);
    let dilated = bdilate(&fs, k)?;
    let premise = is_k_open(a, k)? && restrict_binary(a, s) == fs && dilated.is_subset(a);
    Ok(if premise {
        set_eq(name, a, &dilated)
    } else {
        RelationResult::premise_unmet(name)
    })
}

/// Result VII for a given `A`: if `A = A • K`, `F∩S = A∩S` and
/// `A ⊆ (F∩S) • K`, then `A = (F∩S) • K`.
pub fn bin_sampling_vii(f: &BinaryImage, a: &BinaryImage, k: &BinaryImage, s: &Sieve) -> Result<RelationResult> {
    let name = "bin-sampling-vii";
    let fs = restrict_binary(f, s);
    let closed = bclose(&fs, k)?;
    let premise = bclose(a, k)? == *a && restrict_binary(a, s) == fs && a.is_subset(&closed);
    Ok(if premise {
        set_eq(name, a, &closed)
    } else {
        RelationResult::premise_unmet(name)
    })
}

/// `((F∩S) (+) K ∪ {p}) o K`: a K-open superset of the maximal
/// reconstruction with the same samples when `p` is off the sieve.
pub fn bin_vi_candidate(f: &BinaryImage, k: &BinaryImage, s: &Sieve, p: &Point) -> Result<BinaryImage> {
    let grown = bdilate(&restrict_binary(f, s), k)?;
    let extra = BinaryImage::from_points(f.dim(), [p.clone()])?;
    bopen(&grown.union(&extra), k)
}

/// `((F∩S) • K \ {p}) • K`: a K-closed subset of the minimal reconstruction.
pub fn bin_vii_candidate(f: &BinaryImage, k: &BinaryImage, s: &Sieve, p: &Point) -> Result<BinaryImage> {
    let closed = bclose(&restrict_binary(f, s), k)?;
    let gone = BinaryImage::from_points(f.dim(), [p.clone()])?;
    bclose(&closed.difference(&gone), k)
}

/// Results I-VII, with VI and VII instantiated at the first eligible
/// off-sample perturbation of each reconstruction.
pub fn check_binary_sampling(f: &BinaryImage, k: &BinaryImage, s: &Sieve) -> Results {
    let mut out = bin_sampling(f, k, s)?;
    let fs = restrict_binary(f, s);
    let grown = bdilate(&fs, k)?;
    let outside = grown
        .bounding_box()
        .map(|w| w.expand(1))
        .and_then(|w| w.points().find(|p| !s.contains(p) && !grown.contains(p)));
    let a = match outside {
        Some(p) => bin_vi_candidate(f, k, s, &p)?,
        None => grown,
    };
    out.push(bin_sampling_vi(f, &a, k, s)?);
    let closed = bclose(&fs, k)?;
    let off = closed.iter().find(|p| !s.contains(p));
    let a = match off {
        Some(p) => bin_vii_candidate(f, k, s, &p)?,
        None => closed,
    };
    out.push(bin_sampling_vii(f, &a, k, s)?);
    Ok(out)
}

/// I: `(F∩S) (+) (B∩S) ⊆ (F (+) B)∩S`; II: `(F∩S) (-) (B∩S) ⊇ (F (-) B)∩S`.
pub fn bin_prop14(f: &BinaryImage, b: &BinaryImage, s: &Sieve) -> Results {
    let (fs, bs) = (restrict_binary(f, s), restrict_binary(b, s));
    let i = subset(
        "bin-prop14-i",
        &sampled_binary(SampledOp::Dilate, &fs, &bs, s)?,
        &restrict_binary(&bdilate(f, b)?, s),
    );
    let ii = guarded(
        "bin-prop14-ii",
        (|| {
            Ok(subset(
                "bin-prop14-ii",
                &restrict_binary(&berode(f, b)?, s),
                &sampled_binary(SampledOp::Erode, &fs, &bs, s)?,
            ))
        })(),
    )?;
    Ok(vec![i, ii])
}

/// I: `(F∩S) (+) (B∩S) = [F (+) (B∩S)]∩S`; II: the same for erosion.
pub fn bin_lemma_a(f: &BinaryImage, b: &BinaryImage, s: &Sieve) -> Results {
    let (fs, bs) = (restrict_binary(f, s), restrict_binary(b, s));
    let i = set_eq(
        "bin-lemma-a-i",
        &sampled_binary(SampledOp::Dilate, &fs, &bs, s)?,
        &restrict_binary(&bdilate(f, &bs)?, s),
    );
    let ii = guarded(
        "bin-lemma-a-ii",
        (|| {
            Ok(set_eq(
                "bin-lemma-a-ii",
                &sampled_binary(SampledOp::Erode, &fs, &bs, s)?,
                &restrict_binary(&berode(f, &bs)?, s),
            ))
        })(),
    )?;
    Ok(vec![i, ii])
}

/// With `B = B o K`: `[(F∩S) • K] (+) B ⊆ [(F∩S) (+) K] (+) (B∩S)`.
pub fn bin_lemma_b(f: &BinaryImage, b: &BinaryImage, k: &BinaryImage, s: &Sieve) -> Results {
    let name = "bin-lemma-b";
    if !is_k_open(b, k)? {
        return Ok(vec![RelationResult::premise_unmet(name)]);
    }
    let fs = restrict_binary(f, s);
    let lhs = bdilate(&bclose(&fs, k)?, b)?;
    let rhs = bdilate(&bdilate(&fs, k)?, &restrict_binary(b, s))?;
    Ok(vec![subset(name, &lhs, &rhs)])
}

/// With `B = B o K`: `(F∩S) (+) (B∩S) = {[(F∩S) • K] (+) B}∩S`.
pub fn bin_sample_dilation(f: &BinaryImage, b: &BinaryImage, k: &BinaryImage, s: &Sieve) -> Results {
    let name = "bin-sample-dilation";
    if !is_k_open(b, k)? {
        return Ok(vec![RelationResult::premise_unmet(name)]);
    }
    let (fs, bs) = (restrict_binary(f, s), restrict_binary(b, s));
    let lhs = sampled_binary(SampledOp::Dilate, &fs, &bs, s)?;
    let rhs = restrict_binary(&bdilate(&bclose(&fs, k)?, b)?, s);
    Ok(vec![set_eq(name, &lhs, &rhs)])
}

/// With `B = B o K`: `(F∩S) (-) (B∩S) = {[(F∩S) (+) K] (-) B}∩S`.
pub fn bin_sample_erosion(f: &BinaryImage, b: &BinaryImage, k: &BinaryImage, s: &Sieve) -> Results {
    let name = "bin-sample-erosion";
    if !is_k_open(b, k)? {
        return Ok(vec![RelationResult::premise_unmet(name)]);
    }
    let (fs, bs) = (restrict_binary(f, s), restrict_binary(b, s));
    let r = (|| {
        let lhs = sampled_binary(SampledOp::Erode, &fs, &bs, s)?;
        let rhs = restrict_binary(&berode(&bdilate(&fs, k)?, b)?, s);
        Ok(set_eq(name, &lhs, &rhs))
    })();
    Ok(vec![guarded(name, r)?])
}

/// `[F o (B∩S)]∩S = (F∩S) o (B∩S)`.
pub fn bin_prop16(f: &BinaryImage, b: &BinaryImage, s: &Sieve) -> Results {
    let name = "bin-prop16";
    let (fs, bs) = (restrict_binary(f, s), restrict_binary(b, s));
    let r = (|| {
        let lhs = restrict_binary(&bopen(f, &bs)?, s);
        Ok(set_eq(name, &lhs, &sampled_binary(SampledOp::Open, &fs, &bs, s)?))
    })();
    Ok(vec![guarded(name, r)?])
}

/// `[F • (B∩S)]∩S = (F∩S) • (B∩S)`.
pub fn bin_prop17(f: &BinaryImage, b: &BinaryImage, s: &Sieve) -> Results {
    let name = "bin-prop17";
    let (fs, bs) = (restrict_binary(f, s), restrict_binary(b, s));
    let r = (|| {
        let lhs = restrict_binary(&bclose(f, &bs)?, s);
        Ok(set_eq(name, &lhs, &sampled_binary(SampledOp::Close, &fs, &bs, s)?))
    })();
    Ok(vec![guarded(name, r)?])
}

/// With `B = B o K`, four inclusions:
/// `{F o [(B∩S) (+) K]}∩S ⊆ (F∩S) o (B∩S) ⊆ {[(F∩S) (+) K] o B}∩S` and
/// `{[(F∩S) • K] • B}∩S ⊆ (F∩S) • (B∩S) ⊆ {F • [(B∩S) (+) K]}∩S`.
pub fn bin_open_close_bounds(f: &BinaryImage, b: &BinaryImage, k: &BinaryImage, s: &Sieve) -> Results {
    let names = [
        "bin-open-close-bounds-i-lower",
        "bin-open-close-bounds-i-upper",
        "bin-open-close-bounds-ii-lower",
        "bin-open-close-bounds-ii-upper",
    ];
    if !is_k_open(b, k)? {
        return Ok(names.iter().map(|n| RelationResult::premise_unmet(n)).collect());
    }
    let (fs, bs) = (restrict_binary(f, s), restrict_binary(b, s));
    let r = (|| {
        let bs_k = bdilate(&bs, k)?;
        let opened = sampled_binary(SampledOp::Open, &fs, &bs, s)?;
        let closed = sampled_binary(SampledOp::Close, &fs, &bs, s)?;
        Ok(vec![
            subset(names[0], &restrict_binary(&bopen(f, &bs_k)?, s), &opened),
            subset(names[1], &opened, &restrict_binary(&bopen(&bdilate(&fs, k)?, b)?, s)),
            subset(names[2], &restrict_binary(&bclose(&bclose(&fs, k)?, b)?, s), &closed),
            subset(names[3], &closed, &restrict_binary(&bclose(f, &bs_k)?, s)),
        ])
    })();
    match r {
        Err(MorphError::EmptyStructuringElement) => {
            Ok(names.iter().map(|n| RelationResult::premise_unmet(n)).collect())
        }
        other => other,
    }
}

/// With `B = B o K = (B∩S) (+) K`:
/// I: if `F = (F∩S) (+) K` then `(F∩S) o (B∩S) = (F o B)∩S`;
/// II: if `F = (F∩S) • K` then `(F∩S) • (B∩S) = (F • B)∩S`.
pub fn bin_open_close_exact(f: &BinaryImage, b: &BinaryImage, k: &BinaryImage, s: &Sieve) -> Results {
    let (n1, n2) = ("bin-open-close-exact-i", "bin-open-close-exact-ii");
    let (fs, bs) = (restrict_binary(f, s), restrict_binary(b, s));
    let b_ok = is_k_open(b, k)? && bdilate(&bs, k)? == *b;
    if !b_ok || bs.is_empty() {
        return Ok(vec![RelationResult::premise_unmet(n1), RelationResult::premise_unmet(n2)]);
    }
    let i = if bdilate(&fs, k)? == *f {
        set_eq(
            n1,
            &sampled_binary(SampledOp::Open, &fs, &bs, s)?,
            &restrict_binary(&bopen(f, b)?, s),
        )
    } else {
        RelationResult::premise_unmet(n1)
    };
    let ii = if bclose(&fs, k)? == *f {
        set_eq(
            n2,
            &sampled_binary(SampledOp::Close, &fs, &bs, s)?,
            &restrict_binary(&bclose(f, b)?, s),
        )
    } else {
        RelationResult::premise_unmet(n2)
    };
    Ok(vec![i, ii])
}
