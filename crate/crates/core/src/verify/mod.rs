//! Seeded randomized checking of every relation in [`crate::sampling`] and
//! [`crate::pooling`], plus exhaustive checks on tiny domains.
//!
//! Trial `t` of family `F` draws from ChaCha8 seeded with `seed + t` on the
//! stream numbered by `F`, so any single trial can be replayed alone and
//! the outcome does not depend on the number of threads. Set
//! `MORPHSAMPLE_THREADS` to cap the worker count.

mod families;
pub mod gen;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::builtin;
use crate::error::{MorphError, Result};
use crate::grid::{le, BinaryImage, GreyImage, Point, Window};
use crate::io::write_sem;
use crate::pooling::{sigma, sigma_dot};
use crate::sampling::{bin_sampling, FilterSpec, RelationResult, Status, Witness};

pub use families::closing_duality;
use families::{Family, FAMILIES};

/// Choice of the auxiliary structuring element `b` (also `c` in the
/// appendix lemmas). Premised predicates use its opening by `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeChoice {
    /// 5x5 without corners, flat.
    FlatB,
    /// The non-flat 5x5 element `b2`.
    B2,
    /// A fresh random element per trial: a subset of the 5x5 box holding
    /// the origin, values in `[0, 10]`.
    RandomOpened,
    Custom(GreyImage),
}

impl SeChoice {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "flat5" | "flat-b" | "flat_b" => Ok(SeChoice::FlatB),
            "b2" => Ok(SeChoice::B2),
            "random" | "random-opened" | "random_opened" => Ok(SeChoice::RandomOpened),
            other => Err(MorphError::Config(format!("unknown structuring element choice {other:?}"))),
        }
    }

    /// The fixed element at ceiling `l`, or `None` for the random choice.
    pub fn resolve(&self, l: u32) -> Result<Option<GreyImage>> {
        Ok(match self {
            SeChoice::FlatB => Some(builtin::load_with_ceiling("flat5", l)?),
            SeChoice::B2 => Some(builtin::load_with_ceiling("b2", l)?),
            SeChoice::RandomOpened => None,
            SeChoice::Custom(b) => Some(b.with_ceiling(l)?),
        })
    }

    fn max_value(&self, l: u32) -> Result<u32> {
        Ok(match self.resolve(l)? {
            Some(b) => b.max_value().unwrap_or(0),
            None => 10,
        })
    }
}

#[derive(Clone, Debug)]
pub struct TrialConfig {
    pub seed: u64,
    pub trials: usize,
    pub rows: usize,
    pub cols: usize,
    /// Largest value drawn for random images.
    pub value_max: u32,
    pub spec: FilterSpec,
    pub se_choice: SeChoice,
    /// Family names, predicate names or prefixes, `all`, `grey`, `binary`.
    pub suite: Vec<String>,
    /// Punch up to three random holes in generated domains.
    pub holes: bool,
    /// Pooling operand; defaults to the sieve points of `[-d, d]`.
    pub c: Option<GreyImage>,
}

impl TrialConfig {
    /// Seed 7, 200 trials of 24x24 images with values up to 63, flat `b`.
    pub fn canonical(spec: FilterSpec) -> Self {
        TrialConfig {
            seed: 7,
            trials: 200,
            rows: 24,
            cols: 24,
            value_max: 63,
            spec,
            se_choice: SeChoice::FlatB,
            suite: vec!["all".to_string()],
            holes: true,
            c: None,
        }
    }

    pub fn with_suite(mut self, names: &[&str]) -> Self {
        self.suite = names.iter().map(|s| s.to_string()).collect();
        self
    }

    fn select(&self) -> Result<Vec<(Family, Vec<String>)>> {
        let mut chosen: BTreeMap<u64, (Family, Vec<String>)> = BTreeMap::new();
        let mut add = |fam: Family, preds: Vec<String>| {
            let slot = chosen.entry(fam.stream()).or_insert((fam, Vec::new()));
            for p in preds {
                if !slot.1.contains(&p) {
                    slot.1.push(p);
                }
            }
        };
        for entry in &self.suite {
            let group: Vec<Family> = match entry.as_str() {
                "all" => FAMILIES.to_vec(),
                "grey" => vec![Family::GreySampling, Family::GreySample, Family::GreyProps, Family::GreyOpenClose],
                "binary" => vec![Family::BinSampling, Family::BinRelations],
                name => FAMILIES.iter().copied().filter(|f| f.name() == name).collect(),
            };
            if !group.is_empty() {
                for fam in group {
                    add(fam, fam.predicates());
                }
                continue;
            }
            let prefix = format!("{entry}-");
            let mut hit = false;
            for fam in FAMILIES {
                let preds: Vec<String> = fam
                    .predicates()
                    .into_iter()
                    .filter(|p| p == entry || p.starts_with(&prefix))
                    .collect();
                if !preds.is_empty() {
                    hit = true;
                    add(fam, preds);
                }
            }
            if !hit {
                return Err(MorphError::UnknownPredicate(entry.clone()));
            }
        }
        // restore declaration order within each family
        Ok(chosen
            .into_values()
            .map(|(fam, picked)| {
                let ordered = fam.predicates().into_iter().filter(|p| picked.contains(p)).collect();
                (fam, ordered)
            })
            .collect())
    }

    /// Checks the filter conditions and the clamp-free value budget, and
    /// resolves the suite.
    fn validate(&self) -> Result<Vec<(Family, Vec<String>)>> {
        if let Some(c) = self.spec.conditions().failures().next() {
            return Err(MorphError::InvalidFilter(format!("condition {} ({}) fails", c.id, c.name)));
        }
        let l = self.spec.ceiling();
        if self.value_max > l {
            return Err(MorphError::Config(format!("value_max {} exceeds ceiling {l}", self.value_max)));
        }
        let selection = self.select()?;
        let kmax = self.spec.k().max_value().unwrap_or(0);
        let bmax = self.se_choice.max_value(l)?;
        if selection.iter().any(|(f, _)| f.clamp_free()) {
            let need = u64::from(self.value_max) + u64::from(kmax) + u64::from(bmax);
            if need > u64::from(l) {
                return Err(MorphError::Config(format!(
                    "value_max + max(k) + max(b) = {need} exceeds ceiling {l}"
                )));
            }
        }
        if selection.iter().any(|(f, _)| *f == Family::Pooling) {
            let c = families::default_c(self)?;
            crate::pooling::ensure_sampled_se(&c, &self.spec)?;
            let need = u64::from(self.value_max) + u64::from(kmax) + u64::from(c.max_value().unwrap_or(0));
            if need > u64::from(l) {
                return Err(MorphError::Config(format!(
                    "value_max + max(k) + max(c) = {need} exceeds ceiling {l}"
                )));
            }
        }
        Ok(selection)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub trial: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// The primary input as SEM text.
    pub input: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredicateSummary {
    pub predicate: String,
    pub pass: u64,
    pub fail: u64,
    #[serde(rename = "premise-unmet")]
    pub premise_unmet: u64,
    /// Passes that compared an empty side.
    pub vacuous: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl PredicateSummary {
    fn new(predicate: &str) -> Self {
        PredicateSummary {
            predicate: predicate.to_string(),
            pass: 0,
            fail: 0,
            premise_unmet: 0,
            vacuous: 0,
            counterexample: None,
        }
    }

    pub fn status(&self) -> Status {
        if self.fail > 0 {
            Status::Fail
        } else if self.pass > 0 {
            Status::Pass
        } else {
            Status::PremiseUnmet
        }
    }

    pub fn total(&self) -> u64 {
        self.pass + self.fail + self.premise_unmet
    }
}

/// Acceptance statistics of a premise-filtered generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorStat {
    pub label: String,
    pub accepted: u64,
    pub attempted: u64,
    pub draws: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct TrialReport {
    pub seed: u64,
    pub trials: u64,
    pub predicates: Vec<PredicateSummary>,
    pub generators: Vec<GeneratorStat>,
    /// Excluded from [`render`](Self::render) and [`json`](Self::json) so
    /// both stay byte-identical across runs.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl TrialReport {
    fn empty(seed: u64) -> Self {
        TrialReport {
            seed,
            trials: 0,
            predicates: Vec::new(),
            generators: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.predicates.iter().all(|p| p.fail == 0)
    }

    pub fn failures(&self) -> u64 {
        self.predicates.iter().map(|p| p.fail).sum()
    }

    pub fn get(&self, predicate: &str) -> Option<&PredicateSummary> {
        self.predicates.iter().find(|p| p.predicate == predicate)
    }

    /// Sums the counts of every predicate whose name is `prefix` or starts
    /// with `prefix-`, as `(pass, fail, premise_unmet)`.
    pub fn counts(&self, prefix: &str) -> (u64, u64, u64) {
        let dashed = format!("{prefix}-");
        self.predicates
            .iter()
            .filter(|p| p.predicate == prefix || p.predicate.starts_with(&dashed))
            .fold((0, 0, 0), |(a, b, c), p| (a + p.pass, b + p.fail, c + p.premise_unmet))
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for p in &self.predicates {
            let _ = write!(out, "RESULT {} {}", p.predicate, p.status());
            if let Some(w) = p.counterexample.as_ref().and_then(|c| c.witness.as_ref()) {
                let _ = write!(out, " {w}");
            }
            out.push('\n');
        }
        for p in &self.predicates {
            let _ = writeln!(
                out,
                "SUMMARY {} pass={} fail={} premise-unmet={} vacuous={}",
                p.predicate, p.pass, p.fail, p.premise_unmet, p.vacuous
            );
        }
        for g in &self.generators {
            let _ = writeln!(
                out,
                "GENERATOR {} accepted={}/{} draws={}",
                g.label, g.accepted, g.attempted, g.draws
            );
        }
        for p in &self.predicates {
            if let Some(c) = &p.counterexample {
                let _ = write!(out, "COUNTEREXAMPLE {} trial={}", p.predicate, c.trial);
                if let Some(w) = &c.witness {
                    let _ = write!(out, " {w}");
                }
                out.push('\n');
                for line in c.input.lines() {
                    let _ = writeln!(out, "  {line}");
                }
            }
        }
        out
    }

    pub fn json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

struct Tally {
    order: Vec<String>,
    by_name: BTreeMap<String, PredicateSummary>,
    gens: Vec<GeneratorStat>,
}

impl Tally {
    fn new(order: Vec<String>) -> Self {
        let by_name = order.iter().map(|p| (p.clone(), PredicateSummary::new(p))).collect();
        Tally {
            order,
            by_name,
            gens: Vec::new(),
        }
    }

    fn add(&mut self, trial: u64, results: &[RelationResult], input: &dyn Fn() -> String) {
        for r in results {
            let Some(s) = self.by_name.get_mut(&r.predicate) else {
                continue;
            };
            match r.status {
                Status::Pass => {
                    s.pass += 1;
                    s.vacuous += u64::from(r.vacuous);
                }
                Status::PremiseUnmet => s.premise_unmet += 1,
                Status::Fail => {
                    s.fail += 1;
                    if s.counterexample.is_none() {
                        s.counterexample = Some(Counterexample {
                            trial,
                            witness: r.witness.clone(),
                            input: input(),
                        });
                    }
                }
            }
        }
    }

    fn draw(&mut self, label: &str, accepted: bool, draws: u32) {
        let g = match self.gens.iter_mut().find(|g| g.label == label) {
            Some(g) => g,
            None => {
                self.gens.push(GeneratorStat {
                    label: label.to_string(),
                    accepted: 0,
                    attempted: 0,
                    draws: 0,
                });
                self.gens.last_mut().expect("just pushed")
            }
        };
        g.attempted += 1;
        g.accepted += u64::from(accepted);
        g.draws += u64::from(draws);
    }

    fn finish(mut self, seed: u64, trials: u64, started: Instant) -> TrialReport {
        let predicates = self.order.iter().filter_map(|p| self.by_name.remove(p)).collect();
        TrialReport {
            seed,
            trials,
            predicates,
            generators: self.gens,
            elapsed: started.elapsed(),
        }
    }
}

/// Runs `job` on a pool capped by `MORPHSAMPLE_THREADS`, if set.
pub fn with_thread_cap<T: Send>(job: impl FnOnce() -> T + Send) -> T {
    let cap = std::env::var("MORPHSAMPLE_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0);
    match cap.and_then(|n| rayon::ThreadPoolBuilder::new().num_threads(n).build().ok()) {
        Some(pool) => pool.install(job),
        None => job(),
    }
}

fn trial_rng(seed: u64, trial: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(trial));
    rng.set_stream(stream);
    rng
}

/// Runs every selected predicate on `config.trials` random trials.
pub fn run_suite(config: &TrialConfig) -> Result<TrialReport> {
    let started = Instant::now();
    let selection = config.validate()?;
    let per_trial: Vec<Result<Vec<families::Outcome>>> = with_thread_cap(|| {
        (0..config.trials as u64)
            .into_par_iter()
            .map(|t| {
                selection
                    .iter()
                    .map(|(fam, preds)| {
                        let mut rng = trial_rng(config.seed, t, fam.stream());
                        let mut out = fam.run(config, &mut rng)?;
                        out.results.retain(|r| preds.contains(&r.predicate));
                        Ok(out)
                    })
                    .collect()
            })
            .collect()
    });
    let order: Vec<String> = selection.iter().flat_map(|(_, p)| p.iter().cloned()).collect();
    let mut tally = Tally::new(order);
    for (t, outcomes) in per_trial.into_iter().enumerate() {
        for out in outcomes? {
            tally.add(t as u64, &out.results, &|| out.input.clone());
            for (label, ok, n) in &out.draws {
                tally.draw(label, *ok, *n);
            }
        }
    }
    Ok(tally.finish(config.seed, config.trials as u64, started))
}

/// Largest enumeration [`exhaustive_small`] accepts.
pub const EXHAUSTIVE_LIMIT: u128 = 20_000_000;

/// Predicates [`exhaustive_small`] can enumerate.
pub const EXHAUSTIVE_PREDICATES: [&str; 2] = ["pool-adjunction", "bin-sampling"];

/// Checks `predicate` on every input inside a `rows x cols` window at the
/// origin.
///
/// * `pool-adjunction`: every `f` on the full window with values in
///   `[0, l]`, against every partial `g` on the sieve points of the window
///   grown by the bounding box of `K`.
/// * `bin-sampling`: results I-V for every subset of the window.
pub fn exhaustive_small(predicate: &str, rows: usize, cols: usize, spec: &FilterSpec) -> Result<TrialReport> {
    let started = Instant::now();
    if !EXHAUSTIVE_PREDICATES.contains(&predicate) {
        return Err(MorphError::UnknownPredicate(predicate.to_string()));
    }
    if rows == 0 || cols == 0 {
        return Ok(TrialReport::empty(0));
    }
    let window = Window::rect(rows, cols);
    let n = window.len() as u32;
    match predicate {
        "pool-adjunction" => {
            let l = u128::from(spec.ceiling());
            let kbox = spec.domain().bounding_box().expect("filters are non-empty");
            let g_points: Vec<Point> = window.sum(&kbox).points().filter(|p| spec.sieve().contains(p)).collect();
            let count = (l + 1)
                .checked_pow(n)
                .and_then(|a| (l + 2).checked_pow(g_points.len() as u32).and_then(|b| a.checked_mul(b)))
                .unwrap_or(u128::MAX);
            if count > EXHAUSTIVE_LIMIT {
                return Err(MorphError::BoundsTooLarge {
                    requested: count,
                    limit: EXHAUSTIVE_LIMIT,
                });
            }
            exhaustive_adjunction(&window, &g_points, spec, started)
        }
        _ => {
            let count = 1u128.checked_shl(n).unwrap_or(u128::MAX);
            if n >= 128 || count > EXHAUSTIVE_LIMIT {
                return Err(MorphError::BoundsTooLarge {
                    requested: if n >= 128 { u128::MAX } else { count },
                    limit: EXHAUSTIVE_LIMIT,
                });
            }
            exhaustive_bin_sampling(&window, spec, started)
        }
    }
}

/// Mixed-radix enumeration: digit `i` ranges over `0..radix`.
fn nth_digits(mut index: u64, len: usize, radix: u64) -> Vec<u64> {
    (0..len)
        .map(|_| {
            let d = index % radix;
            index /= radix;
            d
        })
        .collect()
}

fn exhaustive_adjunction(window: &Window, g_points: &[Point], spec: &FilterSpec, started: Instant) -> Result<TrialReport> {
    let l = spec.ceiling();
    let points: Vec<Point> = window.points().collect();
    let nf = u64::from(l + 1).pow(points.len() as u32);
    let ng = u64::from(l + 2).pow(g_points.len() as u32);
    let fs: Vec<(GreyImage, GreyImage)> = (0..nf)
        .into_par_iter()
        .map(|i| {
            let vals = nth_digits(i, points.len(), u64::from(l + 1));
            let f = GreyImage::from_pixels(2, l, points.iter().cloned().zip(vals.into_iter().map(|v| v as u32)))?;
            let s = sigma(&f, spec)?;
            Ok((f, s))
        })
        .collect::<Result<_>>()?;
    // digit 0 = pixel absent, otherwise value digit-1
    let gs: Vec<(GreyImage, GreyImage)> = (0..ng)
        .into_par_iter()
        .map(|i| {
            let digits = nth_digits(i, g_points.len(), u64::from(l + 2));
            let px = g_points
                .iter()
                .zip(digits)
                .filter(|(_, d)| *d > 0)
                .map(|(p, d)| (p.clone(), (d - 1) as u32));
            let g = GreyImage::from_pixels(2, l, px)?;
            let back = sigma_dot(&g, spec)?;
            Ok((g, back))
        })
        .collect::<Result<_>>()?;
    let name = "pool-adjunction";
    // per f: (passes, failures, first failing g index with its text)
    type Row = (u64, u64, Option<(u64, String)>);
    let rows: Vec<Result<Row>> = with_thread_cap(|| {
        fs.par_iter()
            .enumerate()
            .map(|(i, (f, sf))| {
                let (mut pass, mut fail, mut first) = (0u64, 0u64, None);
                for (j, (g, back)) in gs.iter().enumerate() {
                    if le(sf, g)? == le(f, back)? {
                        pass += 1;
                    } else {
                        fail += 1;
                        if first.is_none() {
                            first = Some(((i as u64) * ng + j as u64, format!("{}{}", write_sem(f)?, write_sem(g)?)));
                        }
                    }
                }
                Ok((pass, fail, first))
            })
            .collect()
    });
    let mut tally = Tally::new(vec![name.to_string()]);
    let mut total = 0;
    for row in rows {
        let (pass, fail, first) = row?;
        total += pass + fail;
        let s = tally.by_name.get_mut(name).expect("registered");
        s.pass += pass;
        s.fail += fail;
        if let (None, Some((idx, input))) = (&s.counterexample, first) {
            s.counterexample = Some(Counterexample {
                trial: idx,
                witness: None,
                input,
            });
        }
    }
    Ok(tally.finish(0, total, started))
}

fn exhaustive_bin_sampling(window: &Window, spec: &FilterSpec, started: Instant) -> Result<TrialReport> {
    let points: Vec<Point> = window.points().collect();
    let (kd, s) = (spec.domain(), spec.sieve());
    let total = 1u64 << points.len();
    let per_set: Vec<Result<Vec<RelationResult>>> = with_thread_cap(|| {
        (0..total)
            .into_par_iter()
            .map(|mask| {
                let f = subset_of(&points, mask)?;
                bin_sampling(&f, &kd, s)
            })
            .collect()
    });
    let names: Vec<String> = ["i", "ii", "iii", "iv", "v"].iter().map(|r| format!("bin-sampling-{r}")).collect();
    let mut tally = Tally::new(names);
    for (mask, results) in per_set.into_iter().enumerate() {
        let results = results?;
        tally.add(mask as u64, &results, &|| {
            let f = subset_of(&points, mask as u64).expect("same points as above");
            write_sem(&GreyImage::constant(&f, 1, 1).expect("ceiling 1")).unwrap_or_default()
        });
    }
    Ok(tally.finish(0, total, started))
}

fn subset_of(points: &[Point], mask: u64) -> Result<BinaryImage> {
    BinaryImage::from_points(
        2,
        points.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| p.clone()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Sieve;

    fn spec(name: &str) -> FilterSpec {
        FilterSpec::new(builtin::load(name).unwrap(), Sieve::new(&[2, 2]).unwrap()).unwrap()
    }

    fn small(suite: &[&str]) -> TrialConfig {
        let mut cfg = TrialConfig::canonical(spec("flat3")).with_suite(suite);
        cfg.trials = 6;
        cfg.rows = 12;
        cfg.cols = 12;
        cfg
    }

    #[test]
    fn every_family_passes_a_short_run() {
        let others: Vec<&str> = FAMILIES.iter().filter(|f| **f != Family::Umbra).map(|f| f.name()).collect();
        for k in ["flat3", "k2"] {
            let mut cfg = small(&others);
            cfg.spec = spec(k);
            let report = run_suite(&cfg).unwrap();
            assert!(report.all_pass(), "{}", report.render());
        }
    }

    #[test]
    fn umbra_family_at_small_ceiling() {
        for k in ["flat3", "k2"] {
            let spec = FilterSpec::new(builtin::load_with_ceiling(k, 15).unwrap(), Sieve::new(&[2, 2]).unwrap()).unwrap();
            let mut cfg = TrialConfig::canonical(spec).with_suite(&["umbra"]);
            (cfg.trials, cfg.rows, cfg.cols, cfg.value_max) = (3, 6, 6, 15);
            cfg.se_choice = SeChoice::RandomOpened;
            let report = run_suite(&cfg).unwrap();
            assert!(report.all_pass(), "{}", report.render());
            assert_eq!(report.counts("umbra-close-oracle").0, 6);
        }
    }

    #[test]
    fn reports_are_reproducible() {
        let cfg = small(&["grey-sampling", "pooling"]);
        let a = run_suite(&cfg).unwrap();
        let b = run_suite(&cfg).unwrap();
        assert_eq!(a.render(), b.render());
        assert_eq!(a.json(), b.json());
    }

    #[test]
    fn selection_by_prefix_and_errors() {
        let cfg = small(&["grey-sample-dilation", "pool-h2-ii"]);
        let names: Vec<String> = run_suite(&cfg).unwrap().predicates.into_iter().map(|p| p.predicate).collect();
        assert_eq!(names, ["grey-sample-dilation", "pool-h2-ii-lower", "pool-h2-ii-upper"]);
        let bad = small(&["no-such-thing"]);
        assert_eq!(run_suite(&bad).unwrap_err(), MorphError::UnknownPredicate("no-such-thing".into()));
    }

    #[test]
    fn zero_trials_is_empty() {
        let mut cfg = small(&["grey-props"]);
        cfg.trials = 0;
        let r = run_suite(&cfg).unwrap();
        assert!(r.predicates.iter().all(|p| p.total() == 0));
    }

    #[test]
    fn value_budget_is_enforced() {
        let mut cfg = small(&["grey-sample"]);
        cfg.spec = spec("k2");
        cfg.value_max = 250;
        assert!(matches!(run_suite(&cfg), Err(MorphError::Config(_))));
    }

    #[test]
    fn exhaustive_bounds() {
        let s = spec("flat3");
        assert!(matches!(exhaustive_small("pool-adjunction", 3, 3, &s), Err(MorphError::BoundsTooLarge { .. })));
        assert_eq!(exhaustive_small("bin-sampling", 0, 4, &s).unwrap().predicates.len(), 0);
        assert!(exhaustive_small("nope", 2, 2, &s).is_err());
        let r = exhaustive_small("bin-sampling", 3, 3, &s).unwrap();
        assert_eq!(r.trials, 512);
        assert!(r.all_pass());
    }
}
