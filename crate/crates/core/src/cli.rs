//! Command-line front end. Exit codes: 0 ok, 1 usage, 2 I/O or format,
//! 3 precondition, 4 verification failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::builtin;
use crate::error::{MorphError, Result};
use crate::grey_morph::{gclose, gdilate, gerode, gopen};
use crate::grid::{restrict, GreyImage, Sieve};
use crate::io::{encode_for, read_image, write_sem};
use crate::pooling::{delta, rho, sigma, sigma_dot};
use crate::sampling::{
    compact, max_reconstruct, min_reconstruct, sampled_grey, validate_binary_conditions, FilterSpec, SampledOp,
};
use crate::verify::{exhaustive_small, run_suite, SeChoice, TrialConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_IO: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "morphsample", version, about = "Morphological sampling, reconstruction and pooling")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Op {
    Dilate,
    Erode,
    Open,
    Close,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Bound {
    Min,
    Max,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Pool {
    Sigma,
    SigmaDot,
    Rho,
    Delta,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Demo {
    Figures,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply a grey-value operator.
    Op {
        op: Op,
        #[arg(long)]
        image: PathBuf,
        /// SEM/PGM file or built-in name (flat3, flat5, k2, b2, c2).
        #[arg(long)]
        se: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Keep the pixels on the sieve.
    Sample {
        #[arg(long)]
        image: PathBuf,
        #[arg(long, value_parser = parse_pair)]
        spacing: (i64, i64),
        /// Divide coordinates by the spacing.
        #[arg(long)]
        compact: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimal (closing) or maximal (dilation) reconstruction of a sampled image.
    Reconstruct {
        bound: Bound,
        #[arg(long)]
        image: PathBuf,
        #[arg(long)]
        filter: String,
        #[arg(long, value_parser = parse_pair)]
        spacing: (i64, i64),
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generalized max-pooling operators.
    Pool {
        op: Pool,
        #[arg(long)]
        image: PathBuf,
        #[arg(long)]
        filter: String,
        #[arg(long, value_parser = parse_pair)]
        spacing: (i64, i64),
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the sampling conditions for a filter.
    Validate {
        #[arg(long)]
        filter: String,
        #[arg(long, value_parser = parse_pair)]
        spacing: (i64, i64),
        #[arg(long)]
        binary_only: bool,
    },
    /// Randomized (or exhaustive) theorem checks.
    Verify {
        /// Family, predicate or prefix; repeat or comma-separate.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        suite: Vec<String>,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, value_parser = parse_size, default_value = "24x24")]
        size: (usize, usize),
        #[arg(long, default_value = "flat3")]
        filter: String,
        /// flat5, b2, random or a file.
        #[arg(long, default_value = "flat5")]
        se: String,
        #[arg(long, value_parser = parse_pair, default_value = "2,2")]
        spacing: (i64, i64),
        /// Ceiling for built-in filters (files carry their own).
        #[arg(long)]
        ceiling: Option<u32>,
        #[arg(long, default_value_t = 63)]
        value_max: u32,
        #[arg(long)]
        no_holes: bool,
        /// Pooling operand `c` (file or built-in name).
        #[arg(long)]
        c: Option<String>,
        /// Enumerate every input of the given size instead of sampling.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Write the figure pipelines for an image.
    Demo {
        which: Demo,
        #[arg(long)]
        image: PathBuf,
        #[arg(long)]
        outdir: PathBuf,
        #[arg(long, default_value = "flat3")]
        filter: String,
        #[arg(long, default_value = "flat5")]
        se: String,
        /// Pooling operand; defaults to c2 for non-flat filters.
        #[arg(long)]
        c: Option<String>,
        #[arg(long, value_parser = parse_pair, default_value = "2,2")]
        spacing: (i64, i64),
    },
}

fn parse_pair(s: &str) -> std::result::Result<(i64, i64), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected R,C, got {s:?}"))?;
    let p = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("{t:?}: {e}"));
    Ok((p(a)?, p(b)?))
}

fn parse_size(s: &str) -> std::result::Result<(usize, usize), String> {
    let (a, b) = s.split_once(['x', 'X']).ok_or_else(|| format!("expected RxC, got {s:?}"))?;
    let p = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    Ok((p(a)?, p(b)?))
}

pub fn exit_code(e: &MorphError) -> i32 {
    match e {
        MorphError::Io(_) | MorphError::Format(_) => EXIT_IO,
        MorphError::UnknownPredicate(_) => EXIT_USAGE,
        _ => EXIT_PRECONDITION,
    }
}

/// Loads a file, or a built-in element at `ceiling` (255 if unknown).
fn load_se(name: &str, ceiling: Option<u32>) -> Result<GreyImage> {
    let path = Path::new(name);
    if !path.exists() && builtin::source(name).is_some() {
        return builtin::load_with_ceiling(name, ceiling.unwrap_or(255));
    }
    read_image(path)
}

fn same_ceiling(a: &GreyImage, b: &GreyImage) -> Result<()> {
    if a.ceiling() != b.ceiling() {
        return Err(MorphError::CeilingMismatch {
            left: a.ceiling(),
            right: b.ceiling(),
        });
    }
    Ok(())
}

fn sieve(spacing: (i64, i64)) -> Result<Sieve> {
    Sieve::new(&[spacing.0, spacing.1])
}

fn filter_spec(filter: &str, spacing: (i64, i64), ceiling: Option<u32>) -> Result<FilterSpec> {
    FilterSpec::new(load_se(filter, ceiling)?, sieve(spacing)?)
}

fn emit(out: &mut dyn Write, path: Option<&Path>, img: &GreyImage) -> Result<()> {
    match path {
        Some(p) => {
            let bytes = encode_for(p, img)?;
            std::fs::write(p, bytes).map_err(|e| MorphError::Io(format!("{}: {e}", p.display())))
        }
        None => out.write_all(write_sem(img)?.as_bytes()).map_err(MorphError::from),
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Op { op, image, se, out: path } => {
            let f = read_image(&image)?;
            let k = load_se(&se, Some(f.ceiling()))?;
            same_ceiling(&f, &k)?;
            let g = match op {
                Op::Dilate => gdilate(&f, &k)?,
                Op::Erode => gerode(&f, &k)?,
                Op::Open => gopen(&f, &k)?,
                Op::Close => gclose(&f, &k)?,
            };
            emit(out, path.as_deref(), &g)?;
        }
        Command::Sample { image, spacing, compact: squeeze, out: path } => {
            let f = read_image(&image)?;
            let s = sieve(spacing)?;
            let mut g = restrict(&f, &s);
            if squeeze {
                g = compact(&g, &s)?;
            }
            emit(out, path.as_deref(), &g)?;
        }
        Command::Reconstruct { bound, image, filter, spacing, out: path } => {
            let g = read_image(&image)?;
            let spec = filter_spec(&filter, spacing, Some(g.ceiling()))?;
            same_ceiling(&g, spec.k())?;
            let r = match bound {
                Bound::Min => min_reconstruct(&g, &spec)?,
                Bound::Max => max_reconstruct(&g, &spec)?,
            };
            emit(out, path.as_deref(), &r)?;
        }
        Command::Pool { op, image, filter, spacing, out: path } => {
            let f = read_image(&image)?;
            let spec = filter_spec(&filter, spacing, Some(f.ceiling()))?;
            same_ceiling(&f, spec.k())?;
            let r = match op {
                Pool::Sigma => sigma(&f, &spec)?,
                Pool::SigmaDot => sigma_dot(&f, &spec)?,
                Pool::Rho => rho(&f, &spec)?,
                Pool::Delta => delta(&f, &spec)?,
            };
            emit(out, path.as_deref(), &r)?;
        }
        Command::Validate { filter, spacing, binary_only } => {
            let k = load_se(&filter, None)?;
            let s = sieve(spacing)?;
            let report = if binary_only {
                validate_binary_conditions(&k.domain(), &s)
            } else {
                crate::sampling::validate_grey_conditions(&k, &s)
            };
            out.write_all(report.render().as_bytes())?;
            return Ok(if report.all_pass() { EXIT_OK } else { EXIT_PRECONDITION });
        }
        Command::Verify {
            suite,
            seed,
            trials,
            size,
            filter,
            se,
            spacing,
            ceiling,
            value_max,
            no_holes,
            c,
            exhaustive,
            format,
        } => {
            let spec = filter_spec(&filter, spacing, ceiling)?;
            let report = if exhaustive {
                let [name] = suite.as_slice() else {
                    return Err(MorphError::Config("--exhaustive takes exactly one --suite".into()));
                };
                exhaustive_small(name, size.0, size.1, &spec)?
            } else {
                let l = Some(spec.ceiling());
                let se_choice = match SeChoice::parse(&se) {
                    Ok(choice) => choice,
                    Err(_) => SeChoice::Custom(load_se(&se, l)?),
                };
                let cfg = TrialConfig {
                    seed,
                    trials,
                    rows: size.0,
                    cols: size.1,
                    value_max,
                    spec,
                    se_choice,
                    suite,
                    holes: !no_holes,
                    c: c.map(|name| load_se(&name, l)).transpose()?,
                };
                run_suite(&cfg)?
            };
            let body = match format {
                Format::Text => report.render(),
                Format::Json => report.json() + "\n",
            };
            out.write_all(body.as_bytes())?;
            let _ = writeln!(err, "elapsed {:.3}s", report.elapsed.as_secs_f64());
            return Ok(if report.all_pass() { EXIT_OK } else { EXIT_VERIFY });
        }
        Command::Demo { which: Demo::Figures, image, outdir, filter, se, c, spacing } => {
            let f = read_image(&image)?;
            let l = Some(f.ceiling());
            let spec = filter_spec(&filter, spacing, l)?;
            let b = load_se(&se, l)?;
            same_ceiling(&f, &b)?;
            same_ceiling(&f, spec.k())?;
            let c = match c {
                Some(name) => load_se(&name, l)?,
                None if spec.k().max_value() == Some(0) => {
                    builtin::load_with_ceiling("c2", f.ceiling())?.map_values(|_, _| 0)
                }
                None => builtin::load_with_ceiling("c2", f.ceiling())?,
            };
            return demo_figures(&f, &b, &c, &spec, &outdir, out);
        }
    }
    let _ = err;
    Ok(EXIT_OK)
}

/// Every figure pipeline, written as SEM files named after the expression.
pub fn figure_pipelines(
    f: &GreyImage,
    b_raw: &GreyImage,
    c: &GreyImage,
    spec: &FilterSpec,
) -> Result<Vec<(&'static str, GreyImage)>> {
    let (k, s) = (spec.k(), spec.sieve());
    let b = gopen(b_raw, k)?;
    let fs = restrict(f, s);
    let bs = restrict(&b, s);
    let upper = gdilate(&fs, k)?;
    let lower = gclose(&fs, k)?;
    let bs_k = gdilate(&bs, k)?;
    let sf = sigma(f, spec)?;
    Ok(vec![
        ("image_sampled", fs.clone()),
        ("max_reconstruction", upper.clone()),
        ("min_reconstruction", lower.clone()),
        ("dilation_then_sample", restrict(&gdilate(f, &b)?, s)),
        ("sample_dilation_lhs", sampled_grey(SampledOp::Dilate, &fs, &bs, s)?),
        ("sample_dilation_rhs", restrict(&gdilate(&lower, &b)?, s)),
        ("erosion_then_sample", restrict(&gerode(f, &b)?, s)),
        ("sample_erosion_lhs", sampled_grey(SampledOp::Erode, &fs, &bs, s)?),
        ("sample_erosion_rhs", restrict(&gerode(&upper, &b)?, s)),
        ("opening_bound_lower", restrict(&gopen(f, &bs_k)?, s)),
        ("opening_sampled", sampled_grey(SampledOp::Open, &fs, &bs, s)?),
        ("opening_bound_upper", restrict(&gopen(&upper, &b)?, s)),
        ("closing_bound_lower", restrict(&gclose(&lower, &b)?, s)),
        ("closing_sampled", sampled_grey(SampledOp::Close, &fs, &bs, s)?),
        ("closing_bound_upper", restrict(&gclose(f, &bs_k)?, s)),
        ("sigma", sf.clone()),
        ("sigma_dilate_c", sampled_grey(SampledOp::Dilate, &sf, c, s)?),
        ("dilate_c_then_sigma", sigma(&gdilate(f, c)?, spec)?),
        ("rho", rho(f, spec)?),
        ("delta", delta(f, spec)?),
    ])
}

/// File pairs that must come out byte-identical.
pub const IDENTICAL_PAIRS: [(&str, &str); 3] = [
    ("sample_dilation_lhs", "sample_dilation_rhs"),
    ("sample_erosion_lhs", "sample_erosion_rhs"),
    ("sigma_dilate_c", "dilate_c_then_sigma"),
];

fn demo_figures(
    f: &GreyImage,
    b: &GreyImage,
    c: &GreyImage,
    spec: &FilterSpec,
    outdir: &Path,
    out: &mut dyn Write,
) -> Result<i32> {
    std::fs::create_dir_all(outdir).map_err(|e| MorphError::Io(format!("{}: {e}", outdir.display())))?;
    let mut texts = Vec::new();
    for (name, img) in figure_pipelines(f, b, c, spec)? {
        let path = outdir.join(format!("{name}.sem"));
        let text = write_sem(&img)?;
        std::fs::write(&path, &text).map_err(|e| MorphError::Io(format!("{}: {e}", path.display())))?;
        writeln!(out, "WROTE {}", path.display())?;
        texts.push((name, text));
    }
    let mut code = EXIT_OK;
    for (a, b) in IDENTICAL_PAIRS {
        let find = |n: &str| texts.iter().find(|(m, _)| *m == n).map(|(_, t)| t.as_str());
        let same = find(a) == find(b);
        writeln!(out, "{} {a}.sem {b}.sem", if same { "IDENTICAL" } else { "DIFFERENT" })?;
        if !same {
            code = EXIT_VERIFY;
        }
    }
    Ok(code)
}
