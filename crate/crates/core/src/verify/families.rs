//! One evaluator per predicate family. Each takes a fresh RNG for its trial.

use rand_chacha::ChaCha8Rng;
use rand::Rng;

use crate::binary_morph::{bclose, bdilate, berode, bopen, duality_check};
use crate::error::Result;
use crate::grey_morph::{gclose, gclose_oracle, gdilate, gerode, gopen, gopen_oracle, negative, reflect_image};
use crate::grid::{reflect, restrict, restrict_binary, BinaryImage, GreyImage, Point};
use crate::io::write_sem;
use crate::pooling::{adjunction_check, h2_relations, reconstruction_bounds, sigma};
use crate::sampling::{self as sm, grey_eq, grey_le, subset, RelationResult, Witness};
use crate::umbra::{top_surface, udilate, uerode, umbra};

use super::gen;
use super::{SeChoice, TrialConfig};

/// What one trial of one family produced.
pub(crate) struct Outcome {
    pub results: Vec<RelationResult>,
    /// The primary input, as SEM text, for counterexample records.
    pub input: String,
    /// `(label, accepted, draws)` for premise-filtered generation.
    pub draws: Vec<(&'static str, bool, u32)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Family {
    GreySampling,
    BinSampling,
    GreySample,
    GreyProps,
    GreyOpenClose,
    Umbra,
    Pooling,
    Appendix,
    Duality,
    BinRelations,
}

pub(crate) const FAMILIES: [Family; 10] = [
    Family::GreySampling,
    Family::BinSampling,
    Family::GreySample,
    Family::GreyProps,
    Family::GreyOpenClose,
    Family::Umbra,
    Family::Pooling,
    Family::Appendix,
    Family::Duality,
    Family::BinRelations,
];

const ROMAN: [&str; 7] = ["i", "ii", "iii", "iv", "v", "vi", "vii"];

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::GreySampling => "grey-sampling",
            Family::BinSampling => "bin-sampling",
            Family::GreySample => "grey-sample",
            Family::GreyProps => "grey-props",
            Family::GreyOpenClose => "grey-open-close",
            Family::Umbra => "umbra",
            Family::Pooling => "pooling",
            Family::Appendix => "appendix",
            Family::Duality => "duality",
            Family::BinRelations => "bin-relations",
        }
    }

    /// RNG stream, so adding a family never shifts another family's draws.
    pub fn stream(self) -> u64 {
        FAMILIES.iter().position(|f| *f == self).expect("listed") as u64
    }

    /// Whether results assume no value reaches the ceiling.
    pub fn clamp_free(self) -> bool {
        self != Family::Umbra
    }

    pub fn predicates(self) -> Vec<String> {
        let fixed: &[&str] = match self {
            Family::GreySampling => return ROMAN.iter().map(|r| format!("grey-sampling-{r}")).collect(),
            Family::BinSampling => return ROMAN.iter().map(|r| format!("bin-sampling-{r}")).collect(),
            Family::GreySample => &["grey-sample-dilation", "grey-sample-erosion"],
            Family::GreyProps => &[
                "grey-prop14a-i",
                "grey-prop14a-ii",
                "grey-lemma-aa-i",
                "grey-lemma-aa-ii",
                "grey-lemma-ba",
                "grey-prop16a",
                "grey-prop17a",
                "grey-prop22",
            ],
            Family::GreyOpenClose => &[
                "grey-open-close-bounds-i-lower",
                "grey-open-close-bounds-i-upper",
                "grey-open-close-bounds-ii-lower",
                "grey-open-close-bounds-ii-upper",
                "grey-open-close-exact-i",
                "grey-open-close-exact-ii",
            ],
            Family::Umbra => &[
                "umbra-dilate-k",
                "umbra-dilate-b",
                "umbra-erode-k",
                "umbra-erode-b",
                "umbra-homomorphism-dilate-k",
                "umbra-homomorphism-dilate-b",
                "umbra-homomorphism-erode-k",
                "umbra-homomorphism-erode-b",
                "umbra-open-oracle-k",
                "umbra-open-oracle-b",
                "umbra-close-oracle-k",
                "umbra-close-oracle-b",
            ],
            Family::Pooling => &[
                "pool-adjunction",
                "pool-hl1",
                "pool-rho-le-delta",
                "pool-sampling-fixpoint",
                "pool-h2-i",
                "pool-h2-ii-lower",
                "pool-h2-ii-upper",
                "pool-h2-iii-lower",
                "pool-h2-iii-upper",
                "pool-h2-iv-lower",
                "pool-h2-iv-upper",
                "pool-h2-v",
                "pool-h2-vi-lower",
                "pool-h2-vi-upper",
                "pool-h2-vii",
                "pool-h2-viii",
            ],
            Family::Appendix => &[
                "appendix-l1",
                "appendix-l2",
                "appendix-l3",
                "appendix-l4-i",
                "appendix-l4-ii",
                "appendix-l5-i",
                "appendix-l5-ii",
                "appendix-l6-i",
                "appendix-l6-ii",
                "appendix-l7",
            ],
            Family::Duality => &["duality-grey-k", "duality-grey-b", "duality-binary"],
            Family::BinRelations => &[
                "bin-prop14-i",
                "bin-prop14-ii",
                "bin-lemma-a-i",
                "bin-lemma-a-ii",
                "bin-lemma-b",
                "bin-sample-dilation",
                "bin-sample-erosion",
                "bin-prop16",
                "bin-prop17",
                "bin-open-close-bounds-i-lower",
                "bin-open-close-bounds-i-upper",
                "bin-open-close-bounds-ii-lower",
                "bin-open-close-bounds-ii-upper",
                "bin-open-close-exact-i",
                "bin-open-close-exact-ii",
            ],
        };
        fixed.iter().map(|s| s.to_string()).collect()
    }

    pub fn run(self, cfg: &TrialConfig, rng: &mut ChaCha8Rng) -> Result<Outcome> {
        match self {
            Family::GreySampling => grey_sampling(cfg, rng),
            Family::BinSampling => bin_sampling(cfg, rng),
            Family::GreySample => grey_sample(cfg, rng),
            Family::GreyProps => grey_props(cfg, rng),
            Family::GreyOpenClose => grey_open_close(cfg, rng),
            Family::Umbra => umbra_oracles(cfg, rng),
            Family::Pooling => pooling(cfg, rng),
            Family::Appendix => appendix(cfg, rng),
            Family::Duality => duality(cfg, rng),
            Family::BinRelations => bin_relations(cfg, rng),
        }
    }
}

/// Values start at `max(k) + max(b)` (at most half of `value_max`): exact
/// erosion drops pixels where the difference goes negative, and uniform
/// values from 0 would leave most erosions by non-flat elements empty.
fn image(cfg: &TrialConfig, rng: &mut ChaCha8Rng) -> Result<GreyImage> {
    let top = cfg.spec.k().max_value().unwrap_or(0) + cfg.se_choice.max_value(cfg.spec.ceiling())?;
    let floor = top.min(cfg.value_max / 2);
    gen::random_image_above(rng, cfg.rows, cfg.cols, floor, cfg.value_max, cfg.spec.ceiling(), cfg.holes)
}

fn set(cfg: &TrialConfig, rng: &mut ChaCha8Rng) -> Result<BinaryImage> {
    gen::random_set(rng, cfg.rows, cfg.cols, cfg.holes)
}

fn set_text(a: &BinaryImage) -> String {
    let img = GreyImage::constant(a, 1, 1).expect("ceiling 1 is valid");
    write_sem(&img).unwrap_or_default()
}

fn outcome(results: Vec<RelationResult>, input: String) -> Outcome {
    Outcome {
        results,
        input,
        draws: Vec::new(),
    }
}

/// The raw `b` for this trial and its opening by `k`.
fn se_pair(cfg: &TrialConfig, rng: &mut ChaCha8Rng) -> Result<(GreyImage, GreyImage)> {
    let raw = match &cfg.se_choice {
        SeChoice::RandomOpened => gen::random_se(rng, 10, cfg.spec.ceiling(), cfg.spec.k())?,
        fixed => fixed.resolve(cfg.spec.ceiling())?.expect("fixed choice"),
    };
    let opened = gopen(&raw, cfg.spec.k())?;
    Ok((raw, opened))
}

fn grey_sampling(cfg: &TrialConfig, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let f = image(cfg, rng)?;
    let mut results = sm::check_grey_sampling(&f, &cfg.spec)?;
    let k = cfg.spec.k();
    let (fix, n) = gen::draw_until(
        rng,
        |r| gen::plateau_image(r, cfg.rows, cfg.cols, cfg.value_max, cfg.spec.ceiling()),
        |g| gen::is_grey_fixpoint(g, k),
    )?;
    if let Some(g) = &fix {
        results[4] = sm::grey_sampling(g, &cfg.spec)?.swap_remove(4);
    }
    Ok(Outcome {
        results,
        input: write_sem(&f)?,
        draws: vec![("grey-sampling-v", fix.is_some(), n)],
    })
}

fn bin_sampling(cfg: &TrialConfig, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let f = set(cfg, rng)?;
    let (kd, s) = (cfg.spec.domain(), cfg.spec.sieve());
    let mut results = sm::check_binary_sampling(&f, &kd, s)?;
    let (fix, n) = gen::draw_until(rng, |r| gen::plateau_set(r, cfg.rows, cfg.cols), |g| gen::is_set_fixpoint(g, &kd))?;
    if let Some(g) = &fix {
        results[4] = sm::bin_sampling(g, &kd, s)?.swap_remove(4);
    }
    Ok(Outcome {
        results,
        input: set_text(&f),
        draws: vec![("bin-sampling-v", fix.is_some(), n)],
    })
}

fn grey_sample(cfg: &TrialConfig, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let f = image(cfg, rng)?;
    let (_, b) = se_pair(cfg, rng)?;
    let mut results = sm::grey_sample_dilation(&f, &b, &cfg.spec)?;
    results.extend(sm::grey_sample_erosion(&f, &b, &cfg.spec)?);
    Ok(outcome(results, write_sem(&f)?))
}

fn grey_props(cfg: &TrialConfig, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let f = image(cfg, rng)?;
    let (raw, opened) = se_pair(cfg, rng)?;
    let spec = &cfg.spec;
    let mut results = sm::grey_prop14a(&f, &raw, spec)?;
    results.extend(sm::grey_lemma_aa(&f, &raw, spec)?);
    results.extend(sm::grey_lemma_ba(&f, &opened, spec)?);
    results.extend(sm::grey_prop16a(&f, &raw, spec)?);
    results.extend(sm::grey_prop17a(&f, &raw, spec)?);
    results.extend(sm::grey_prop22(&gopen(&f, spec.k())?, spec)?);
    Ok(outcome(results, write_sem(&f)?))
}

fn grey_open_close(cfg: &TrialConfig, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let f = image(cfg, rng)?;
    let (raw, opened) = se_pair(cfg, rng)?;
    let (spec, s, k) = (&cfg.spec, cfg.spec.sieve(), cfg.spec.k());
    let mut results = sm::grey_open_close_bounds(&f, &opened, spec)?;
    // premises of the exact form: b = b|_S (+) k, f = f|_S (+) k or f|_S • k
    let b = gdilate(&restrict(&raw, s), k)?;
    let fs = restrict(&f, s);
    let upper = sm::max_reconstruct(&fs, spec)?;
    let lower = sm::min_reconstruct(&fs, spec)?;
    results.push(sm::grey_open_close_exact(&upper, &b, spec)?.swap_remove(0));
    results.push(sm::grey_open_close_exact(&lower, &b, spec)?.swap_remove(1));
    Ok(outcome(results, write_sem(&f)?))
}

fn umbra_oracles(cfg: &TrialConfig, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let (raw, _) = se_pair(cfg, rng)?;
    // Mostly above both elements so erosions survive at l = 15; one pixel
    // in thirty dips so that dropped pixels are exercised too.
    let floor = cfg.spec.k().max_value().unwrap_or(0).max(raw.max_value().unwrap_or(0));
    let f = gen::random_image_above(rng, cfg.rows, cfg.cols, floor, cfg.value_max, cfg.spec.ceiling(), cfg.holes)?
        .map_values(|_, v| i64::from(if rng.gen_bool(1.0 / 30.0) { rng.gen_range(0..=v) } else { v }));
    let uf = umbra(&f);
    let mut results = Vec::new();
    for (tag, se) in [("k", cfg.spec.k()), ("b", &raw)] {
        let us = umbra(se);
        let dil = gdilate(&f, se)?;
        let ero = gerode(&f, se)?;
        let udil = udilate(&uf, &us)?;
        let uero = uerode(&uf, &us)?;
        results.push(grey_eq(&format!("umbra-dilate-{tag}"), &dil, &top_surface(&udil)));
        results.push(grey_eq(&format!("umbra-erode-{tag}"), &ero, &top_surface(&uero)));
        results.push(umbra_eq(&format!("umbra-homomorphism-dilate-{tag}"), &umbra(&dil), &udil));
        results.push(umbra_eq(&format!("umbra-homomorphism-erode-{tag}"), &umbra(&ero), &uero));
        results.push(grey_eq(&format!("umbra-open-oracle-{tag}"), &gopen(&f, se)?, &gopen_oracle(&f, se)?));
        // The set-level closing only matches the saturating one where
        // f (+) se stays below the ceiling, so clip f to that headroom.
        let name = format!("umbra-close-oracle-{tag}");
        let top = se.max_value().unwrap_or(0);
        results.push(match f.ceiling().checked_sub(top) {
            Some(room) => {
                let clipped = f.map_values(|_, v| i64::from(v.min(room)));
                grey_eq(&name, &gclose(&clipped, se)?, &gclose_oracle(&clipped, se)?)
            }
            None => RelationResult::premise_unmet(&name),
        });
    }
    // keep the listed order: all dilations, then erosions, ...
    results.sort_by_key(|r| Family::Umbra.predicates().iter().position(|p| *p == r.predicate));
    Ok(outcome(results, write_sem(&f)?))
}

fn umbra_eq(name: &str, lhs: &crate::umbra::UmbraSet, rhs: &crate::umbra::UmbraSet) -> RelationResult {
    if lhs == rhs {
        return RelationResult::pass_unless_empty(name, lhs.is_empty());
    }
    let first = lhs
        .iter()
        .find(|p| !rhs.contains(&p.0, p.1))
        .or_else(|| rhs.iter().find(|p| !lhs.contains(&p.0, p.1)));
    RelationResult::fail(
        name,
        first.map(|(x, y)| Witness {
            x: x.clone(),
            lhs: lhs.contains(x, *y).then_some(*y),
            rhs: rhs.contains(x, *y).then_some(*y),
        }),
    )
}

/// The pooling operand `c`: the configured one, else the sieve points of
/// `[-d, d]` with value 0 for flat `k` and 10 otherwise.
pub(crate) fn default_c(cfg: &TrialConfig) -> Result<GreyImage> {
    if let Some(c) = &cfg.c {
        return Ok(c.clone());
    }
    let d = cfg.spec.sieve().spacing();
    let flat = cfg.spec.k().max_value() == Some(0);
    let v = if flat { 0 } else { 10 };
    let mut px = Vec::new();
    for r in [-d[0], 0, d[0]] {
        for c in [-d[1], 0, d[1]] {
            px.push((Point::from([r, c]), v));
        }
    }
    GreyImage::from_pixels(2, cfg.spec.ceiling(), px)
}

fn pooling(cfg: &TrialConfig, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let f = image(cfg, rng)?;
    let spec = &cfg.spec;
    let sf = sigma(&f, spec)?;
    let g = perturb_sampled(rng, &sf, spec)?;
    let mut results = vec![if adjunction_check(&f, &g, spec)? {
        RelationResult::pass("pool-adjunction")
    } else {
        RelationResult::fail("pool-adjunction", None)
    }];
    results.extend(reconstruction_bounds(&f, spec)?);
    results.push(grey_eq(
        "pool-sampling-fixpoint",
        &restrict(&gclose(&sf, spec.k())?, spec.sieve()),
        &sf,
    ));
    results.extend(h2_relations(&f, &default_c(cfg)?, spec)?);
    Ok(outcome(results, write_sem(&f)?))
}

/// `sigma(f)` nudged at a few samples, so both sides of the adjunction
/// biconditional come up as true and as false.
fn perturb_sampled(rng: &mut ChaCha8Rng, g: &GreyImage, spec: &sm::FilterSpec) -> Result<GreyImage> {
    let l = g.ceiling();
    let mode = rng.gen_range(0..3);
    let mut px: Vec<(Point, u32)> = Vec::new();
    for (p, v) in g.iter() {
        let change = mode > 0 && rng.gen_bool(0.05);
        match (mode, change) {
            (1, true) => px.push((p, v.saturating_sub(rng.gen_range(1..=3)))),
            (2, true) if rng.gen_bool(0.5) => {}
            (2, true) => px.push((p, (v + 2).min(l))),
            _ => px.push((p, v)),
        }
    }
    let out = GreyImage::from_pixels(g.dim(), l, px)?;
    sm::ensure_sampled(&out, spec.sieve())?;
    Ok(out)
}

fn appendix(cfg: &TrialConfig, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let f = image(cfg, rng)?;
    let (c, _) = se_pair(cfg, rng)?;
    let (k, s) = (cfg.spec.k(), cfg.spec.sieve());
    let g = gen::dominating(rng, &f)?;
    let (fd, cd, kd) = (f.domain(), c.domain(), k.domain());
    let results = vec![
        grey_le("appendix-l1", &f, &gdilate(&f, k)?),
        if grey_le("", &f, &g).is_fail() {
            RelationResult::premise_unmet("appendix-l2")
        } else {
            grey_le("appendix-l2", &restrict(&f, s), &restrict(&g, s))
        },
        grey_le("appendix-l3", &gerode(&f, k)?, &f),
        subset("appendix-l4-i", &bdilate(&berode(&fd, &cd)?, &kd)?, &berode(&bdilate(&fd, &kd)?, &cd)?),
        grey_le("appendix-l4-ii", &gdilate(&gerode(&f, &c)?, k)?, &gerode(&gdilate(&f, k)?, &c)?),
        subset("appendix-l5-i", &bdilate(&bopen(&fd, &cd)?, &kd)?, &bopen(&bdilate(&fd, &kd)?, &cd)?),
        grey_le("appendix-l5-ii", &gdilate(&gopen(&f, &c)?, k)?, &gopen(&gdilate(&f, k)?, &c)?),
        subset("appendix-l6-i", &bdilate(&bclose(&fd, &cd)?, &kd)?, &bclose(&bdilate(&fd, &kd)?, &cd)?),
        grey_le("appendix-l6-ii", &gdilate(&gclose(&f, &c)?, k)?, &gclose(&gdilate(&f, k)?, &c)?),
        grey_le("appendix-l7", &gclose(&gerode(&f, &c)?, k)?, &gerode(&gclose(&f, k)?, &c)?),
    ];
    Ok(outcome(results, write_sem(&f)?))
}

/// `f • k = -((-f) o k^)` on `(F (-) K) (-) K^`.
pub fn closing_duality(name: &str, f: &GreyImage, k: &GreyImage) -> Result<RelationResult> {
    let lhs = gclose(f, k)?;
    let rhs = negative(&gopen(&negative(f), &reflect_image(k))?);
    let kd = k.domain();
    let interior = berode(&berode(&f.domain(), &kd)?, &reflect(&kd))?;
    Ok(grey_eq(name, &lhs.restrict_to(&interior), &rhs.restrict_to(&interior)))
}

fn duality(cfg: &TrialConfig, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let f = image(cfg, rng)?;
    let (b, _) = se_pair(cfg, rng)?;
    let a = set(cfg, rng)?;
    let kd = cfg.spec.domain();
    let window = crate::grid::Window::rect(cfg.rows, cfg.cols).expand(4);
    let binary = if duality_check(&a, &kd, &window)? {
        RelationResult::pass("duality-binary")
    } else {
        RelationResult::fail("duality-binary", None)
    };
    let results = vec![
        closing_duality("duality-grey-k", &f, cfg.spec.k())?,
        closing_duality("duality-grey-b", &f, &b)?,
        binary,
    ];
    Ok(outcome(results, write_sem(&f)?))
}

fn bin_relations(cfg: &TrialConfig, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let f = set(cfg, rng)?;
    let (raw, _) = se_pair(cfg, rng)?;
    let (kd, s) = (cfg.spec.domain(), cfg.spec.sieve());
    let b = raw.domain();
    let opened = bopen(&b, &kd)?;
    let mut results = sm::bin_prop14(&f, &b, s)?;
    results.extend(sm::bin_lemma_a(&f, &b, s)?);
    results.extend(sm::bin_lemma_b(&f, &opened, &kd, s)?);
    results.extend(sm::bin_sample_dilation(&f, &opened, &kd, s)?);
    results.extend(sm::bin_sample_erosion(&f, &opened, &kd, s)?);
    results.extend(sm::bin_prop16(&f, &b, s)?);
    results.extend(sm::bin_prop17(&f, &b, s)?);
    results.extend(sm::bin_open_close_bounds(&f, &opened, &kd, s)?);
    let fs = restrict_binary(&f, s);
    let b_exact = bdilate(&restrict_binary(&b, s), &kd)?;
    results.push(sm::bin_open_close_exact(&bdilate(&fs, &kd)?, &b_exact, &kd, s)?.swap_remove(0));
    results.push(sm::bin_open_close_exact(&bclose(&fs, &kd)?, &b_exact, &kd, s)?.swap_remove(1));
    Ok(outcome(results, set_text(&f)))
}
