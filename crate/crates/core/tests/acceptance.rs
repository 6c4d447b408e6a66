//! Acceptance run: one PASS/FAIL line per criterion, checked against its
//! time budget. Exits non-zero if any criterion fails.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use morphsample::binary_morph::centered_box;
use morphsample::builtin;
use morphsample::grey_morph::flat;
use morphsample::io::{read_pgm, read_sem, write_pgm, write_sem, PgmEncoding};
use morphsample::sampling::{validate_grey_conditions, FilterSpec};
use morphsample::verify::{exhaustive_small, gen, run_suite, SeChoice, TrialConfig, TrialReport};
use morphsample::Sieve;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<String, String>;
type Criterion = (u32, &'static str, u64, fn() -> Check);

fn sieve() -> Sieve {
    Sieve::new(&[2, 2]).unwrap()
}

fn spec_at(name: &str, l: u32) -> FilterSpec {
    FilterSpec::new(builtin::load_with_ceiling(name, l).unwrap(), sieve()).unwrap()
}

/// Canonical run of `suite` with `k` and `b`; requires zero failures, every
/// premise met, and at most one pass in ten comparing an empty side.
fn canonical(suite: &[&str], k: &str, b: SeChoice) -> std::result::Result<TrialReport, String> {
    let mut cfg = TrialConfig::canonical(spec_at(k, 255)).with_suite(suite);
    cfg.se_choice = b;
    let report = run_suite(&cfg).map_err(|e| e.to_string())?;
    clean(report, k)
}

fn clean(report: TrialReport, label: &str) -> std::result::Result<TrialReport, String> {
    if !report.all_pass() {
        return Err(format!("{label}: {}", report.render()));
    }
    if let Some(p) = report.predicates.iter().find(|p| p.premise_unmet > 0 || p.pass == 0 || p.vacuous * 10 > p.pass) {
        return Err(format!(
            "{label}: {} pass={} premise-unmet={} vacuous={}",
            p.predicate, p.pass, p.premise_unmet, p.vacuous
        ));
    }
    Ok(report)
}

fn tally(reports: &[TrialReport]) -> String {
    let (mut preds, mut passes, mut vacuous) = (0, 0, 0);
    for r in reports {
        preds += r.predicates.len();
        passes += r.predicates.iter().map(|p| p.pass).sum::<u64>();
        vacuous += r.predicates.iter().map(|p| p.vacuous).sum::<u64>();
    }
    format!("{preds} predicate runs, {passes} passing checks ({vacuous} vacuous), 0 failures")
}

fn c1_conditions() -> Check {
    for k in ["flat3", "k2"] {
        let report = validate_grey_conditions(&builtin::load(k).unwrap(), &sieve());
        if !report.all_pass() {
            return Err(format!("{k}: {report}"));
        }
    }
    let box5 = flat(&centered_box(2, 2), 255).unwrap();
    let report = validate_grey_conditions(&box5, &sieve());
    let iii = report.check("III").ok_or("no condition III")?;
    match (&iii.passed, &iii.witness) {
        (false, Some(w)) => Ok(format!("flat3, k2 pass I-VII; 5x5 box fails III at {w}")),
        _ => Err(format!("5x5 box: {report}")),
    }
}

fn c2_grey_sampling() -> Check {
    let a = canonical(&["grey-sampling"], "flat3", SeChoice::FlatB)?;
    let b = canonical(&["grey-sampling"], "k2", SeChoice::FlatB)?;
    Ok(tally(&[a, b]))
}

fn c3_binary_sampling() -> Check {
    Ok(tally(&[canonical(&["bin-sampling"], "flat3", SeChoice::FlatB)?]))
}

fn c4_sample_dilation() -> Check {
    let a = canonical(&["grey-sample"], "flat3", SeChoice::FlatB)?;
    let b = canonical(&["grey-sample"], "k2", SeChoice::B2)?;
    Ok(tally(&[a, b]))
}

fn c5_open_close() -> Check {
    let mut out = Vec::new();
    for (k, b) in [("flat3", SeChoice::FlatB), ("k2", SeChoice::B2)] {
        out.push(canonical(&["grey-open-close"], k, b)?);
    }
    Ok(tally(&out))
}

fn c6_props() -> Check {
    let mut out = Vec::new();
    for (k, b) in [("flat3", SeChoice::FlatB), ("k2", SeChoice::B2)] {
        out.push(canonical(&["grey-props"], k, b)?);
    }
    Ok(tally(&out))
}

fn c7_umbra() -> Check {
    let mut out = Vec::new();
    for k in ["flat3", "k2"] {
        let mut cfg = TrialConfig::canonical(spec_at(k, 15)).with_suite(&["umbra"]);
        (cfg.trials, cfg.rows, cfg.cols, cfg.value_max) = (50, 8, 8, 15);
        cfg.se_choice = SeChoice::RandomOpened;
        out.push(clean(run_suite(&cfg).map_err(|e| e.to_string())?, k)?);
    }
    Ok(tally(&out))
}

fn c8_pooling() -> Check {
    let exhaustive = exhaustive_small("pool-adjunction", 2, 2, &spec_at("flat3", 3)).map_err(|e| e.to_string())?;
    let exhaustive = clean(exhaustive, "exhaustive")?;
    let n = exhaustive.trials;
    let mut out = vec![exhaustive];
    for k in ["flat3", "k2"] {
        let c = builtin::c2(255);
        let c = if k == "flat3" { c.map_values(|_, _| 0) } else { c };
        let mut cfg = TrialConfig::canonical(spec_at(k, 255)).with_suite(&["pooling"]);
        cfg.c = Some(c);
        out.push(clean(run_suite(&cfg).map_err(|e| e.to_string())?, k)?);
    }
    Ok(format!("{n} exhaustive (f, g) pairs; {}", tally(&out)))
}

fn c9_appendix() -> Check {
    let mut out = Vec::new();
    for (k, b) in [("flat3", SeChoice::FlatB), ("k2", SeChoice::B2), ("k2", SeChoice::RandomOpened)] {
        out.push(canonical(&["appendix"], k, b)?);
    }
    Ok(tally(&out))
}

fn c10_duality() -> Check {
    let a = canonical(&["duality"], "flat3", SeChoice::FlatB)?;
    let b = canonical(&["duality"], "k2", SeChoice::B2)?;
    Ok(tally(&[a, b]))
}

fn cli(args: &[&str]) -> std::result::Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_morphsample"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "{args:?} exited {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    Ok(String::from_utf8_lossy(&out.stdout).into_owned())
}

fn read(p: &Path) -> std::result::Result<Vec<u8>, String> {
    std::fs::read(p).map_err(|e| format!("{}: {e}", p.display()))
}

fn c11_cli() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = |n: &str| dir.path().join(n);
    let s = |p: std::path::PathBuf| p.to_string_lossy().into_owned();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut pairs = 0;
    for (i, l) in [255u32, 1000].into_iter().enumerate() {
        let f = gen::random_image(&mut rng, 24, 24, l, l, false).unwrap();
        let pgm = write_pgm(&f, PgmEncoding::Raw).unwrap();
        let src = path(&format!("f{i}.pgm"));
        std::fs::write(&src, &pgm).unwrap();
        let (sem, back) = (path(&format!("f{i}.sem")), path(&format!("g{i}.pgm")));
        cli(&["sample", "--image", &s(src.clone()), "--spacing", "1,1", "--out", &s(sem.clone())])?;
        cli(&["sample", "--image", &s(sem.clone()), "--spacing", "1,1", "--out", &s(back.clone())])?;
        if read(&back)? != pgm {
            return Err(format!("PGM -> SEM -> PGM changed the bytes at maxval {l}"));
        }
        let sem_text = String::from_utf8(read(&sem)?).unwrap();
        if read_sem(&sem_text).unwrap() != f || write_sem(&read_pgm(&pgm).unwrap()).unwrap() != sem_text {
            return Err(format!("SEM round-trip differs at maxval {l}"));
        }
        let plain = write_pgm(&f, PgmEncoding::Plain).unwrap();
        if read_pgm(&plain).unwrap() != f {
            return Err("plain PGM round-trip differs".into());
        }
    }
    let f = gen::random_image(&mut rng, 24, 24, 63, 255, false).unwrap();
    let img = path("demo.pgm");
    std::fs::write(&img, write_pgm(&f, PgmEncoding::Plain).unwrap()).unwrap();
    for (k, b) in [("flat3", "flat5"), ("k2", "b2")] {
        let outdir = path(&format!("fig-{k}"));
        cli(&["demo", "figures", "--image", &s(img.clone()), "--outdir", &s(outdir.clone()), "--filter", k, "--se", b])?;
        for side in ["sample_dilation", "sample_erosion"] {
            let lhs = read(&outdir.join(format!("{side}_lhs.sem")))?;
            let rhs = read(&outdir.join(format!("{side}_rhs.sem")))?;
            if lhs != rhs || lhs.is_empty() {
                return Err(format!("{k}: {side} pair differs"));
            }
            pairs += 1;
        }
    }
    Ok(format!("PGM/SEM round-trips at maxval 255 and 1000; {pairs} byte-identical demo pairs"))
}

fn main() {
    let criteria: [Criterion; 11] = [
        (1, "condition validators", 1, c1_conditions),
        (2, "grey sampling theorem", 30, c2_grey_sampling),
        (3, "binary sampling theorem", 10, c3_binary_sampling),
        (4, "sample dilation and erosion", 30, c4_sample_dilation),
        (5, "opening/closing bounds and exactness", 60, c5_open_close),
        (6, "sampling propositions and lemmas", 30, c6_props),
        (7, "umbra oracle equivalence", 120, c7_umbra),
        (8, "pooling adjunction and relations", 60, c8_pooling),
        (9, "appendix lemmas", 30, c9_appendix),
        (10, "closing/opening duality", 30, c10_duality),
        (11, "CLI round-trip and demo pairs", 10, c11_cli),
    ];
    let filter: Option<String> = std::env::args().skip(1).find(|a| !a.starts_with('-'));
    let mut failed = 0;
    for (id, name, budget, check) in criteria {
        if filter.as_deref().is_some_and(|f| !name.contains(f) && f != id.to_string()) {
            continue;
        }
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let over = took > Duration::from_secs(budget);
        let ok = result.is_ok() && !over;
        failed += usize::from(!ok);
        let detail = match &result {
            Ok(d) => d.clone(),
            Err(e) => e.clone(),
        };
        let time = format!("{:.2}s/{budget}s", took.as_secs_f64());
        println!(
            "{} criterion {id:>2} {name}: {detail} [{time}{}]",
            if ok { "PASS" } else { "FAIL" },
            if over { " over budget" } else { "" }
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
