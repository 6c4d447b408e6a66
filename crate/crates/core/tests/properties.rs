use morphsample::binary_morph::{bclose, bdilate, berode, bopen, complement};
use morphsample::grey_morph::{gclose, gdilate, gerode, gopen, reflect_image};
use morphsample::grid::{le, reflect, restrict, translate};
use morphsample::io::{read_pgm, read_sem, write_pgm, write_sem, PgmEncoding};
use morphsample::pooling::{rho, sigma};
use morphsample::sampling::{max_reconstruct, min_reconstruct, FilterSpec};
use morphsample::umbra::{top_surface, udilate, uerode, umbra, umbra_reflect, umbra_translate};
use morphsample::verify::{run_suite, TrialConfig};
use morphsample::{builtin, BinaryImage, GreyImage, Point, Sieve, Window};
use proptest::prelude::*;

/// A `rows x cols` image at `origin` with values up to `vmax`, each pixel
/// missing with probability `hole`.
fn grey(max_side: usize, vmax: u32, l: u32, hole: f64) -> impl Strategy<Value = GreyImage> {
    (1..=max_side, 1..=max_side, -2i64..=2, -2i64..=2).prop_flat_map(move |(r, c, r0, c0)| {
        let cell = if hole > 0.0 {
            prop::option::weighted(1.0 - hole, 0..=vmax).boxed()
        } else {
            (0..=vmax).prop_map(Some).boxed()
        };
        prop::collection::vec(prop::collection::vec(cell, c), r)
            .prop_map(move |rows| GreyImage::from_rows(l, [r0, c0], &rows).unwrap())
    })
}

fn set(max_side: usize) -> impl Strategy<Value = BinaryImage> {
    grey(max_side, 1, 1, 0.0).prop_map(|f| BinaryImage::from_points(2, f.iter().filter(|(_, v)| *v == 1).map(|(p, _)| p)).unwrap())
}

/// A non-empty element inside the 3x3 box around the origin.
fn se(vmax: u32, l: u32) -> impl Strategy<Value = GreyImage> {
    prop::collection::vec(prop::option::weighted(0.7, 0..=vmax), 9).prop_filter_map("empty", move |cells| {
        let px: Vec<(Point, u32)> = cells
            .into_iter()
            .enumerate()
            .filter_map(|(i, v)| v.map(|v| (Point::new(&[i as i64 / 3 - 1, i as i64 % 3 - 1]), v)))
            .collect();
        (!px.is_empty()).then(|| GreyImage::from_pixels(2, l, px).unwrap())
    })
}

fn point() -> impl Strategy<Value = Point> {
    (-4i64..=4, -4i64..=4).prop_map(|(a, b)| Point::new(&[a, b]))
}

fn spec(name: &str) -> FilterSpec {
    FilterSpec::new(builtin::load(name).unwrap(), Sieve::new(&[2, 2]).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn translate_and_reflect_invert(a in set(5), x in point()) {
        let back = translate(&translate(&a, &x).unwrap(), &Point::new(&[-x.coords()[0], -x.coords()[1]])).unwrap();
        prop_assert_eq!(back, a.clone());
        prop_assert_eq!(reflect(&reflect(&a)), a);
    }

    #[test]
    fn restrict_is_idempotent(f in grey(6, 63, 63, 0.2)) {
        let s = Sieve::new(&[2, 3]).unwrap();
        prop_assert_eq!(restrict(&restrict(&f, &s), &s), restrict(&f, &s));
    }

    #[test]
    fn le_is_a_partial_order(f in grey(3, 3, 3, 0.2), g in grey(3, 3, 3, 0.2), h in grey(3, 3, 3, 0.2)) {
        prop_assert!(le(&f, &f).unwrap());
        if le(&f, &g).unwrap() && le(&g, &f).unwrap() {
            prop_assert_eq!(&f, &g);
        }
        if le(&f, &g).unwrap() && le(&g, &h).unwrap() {
            prop_assert!(le(&f, &h).unwrap());
        }
    }

    #[test]
    fn binary_dilation_commutes_and_chains(a in set(5), b in set(3), c in set(3)) {
        prop_assert_eq!(bdilate(&a, &b).unwrap(), bdilate(&b, &a).unwrap());
        prop_assert_eq!(
            bdilate(&bdilate(&a, &b).unwrap(), &c).unwrap(),
            bdilate(&a, &bdilate(&b, &c).unwrap()).unwrap()
        );
    }

    #[test]
    fn binary_adjunction(a in set(4), x in set(4), b in set(3)) {
        prop_assume!(!b.is_empty());
        let lhs = bdilate(&x, &b).unwrap().is_subset(&a);
        let rhs = x.is_subset(&berode(&a, &b).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn binary_opening_closing_laws(a in set(6), b in set(3)) {
        prop_assume!(!b.is_empty());
        let o = bopen(&a, &b).unwrap();
        let c = bclose(&a, &b).unwrap();
        prop_assert!(o.is_subset(&a));
        prop_assert!(a.is_subset(&c));
        prop_assert_eq!(bopen(&o, &b).unwrap(), o);
        prop_assert_eq!(bclose(&c, &b).unwrap(), c.clone());
        // Duality against the reflected element, inside a window wide enough for both sides.
        let w = Window::new(Point::new(&[-12, -12]), Point::new(&[12, 12])).unwrap();
        let inner = Window::new(Point::new(&[-6, -6]), Point::new(&[6, 6])).unwrap().to_binary();
        let lhs = complement(&c, &w).intersection(&inner);
        let rhs = bopen(&complement(&a, &w), &reflect(&b)).unwrap().intersection(&inner);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn umbra_homomorphism(f in grey(4, 15, 15, 0.2), k in se(6, 15)) {
        let uf = umbra(&f);
        let uk = umbra(&k);
        prop_assert_eq!(top_surface(&uf), f.clone());
        prop_assert_eq!(umbra(&gdilate(&f, &k).unwrap()), udilate(&uf, &uk).unwrap());
        prop_assert_eq!(umbra(&gerode(&f, &k).unwrap()), uerode(&uf, &uk).unwrap());
    }

    #[test]
    fn umbra_reflection_is_monotone(f in grey(4, 15, 15, 0.2), g in grey(4, 15, 15, 0.2)) {
        prop_assume!(!f.is_empty());
        let (a, b) = (umbra(&f), umbra(&f).union(&umbra(&g)));
        prop_assert!(umbra_reflect(&a).unwrap().is_subset(&umbra_reflect(&b).unwrap()));
    }

    #[test]
    fn umbra_translation_composes(f in grey(3, 15, 15, 0.0), x in point(), y in point(), s in 0i64..4, t in 0i64..4) {
        let a = umbra(&f);
        let two = umbra_translate(&umbra_translate(&a, &x, s).unwrap(), &y, t).unwrap();
        let xy = Point::new(&[x.coords()[0] + y.coords()[0], x.coords()[1] + y.coords()[1]]);
        let one = umbra_translate(&a, &xy, s + t).unwrap();
        // Points pushed past the ceiling are dropped by both routes alike.
        prop_assert_eq!(two, one);
    }

    #[test]
    fn grey_dilation_commutes_and_chains(f in grey(5, 63, 255, 0.2), b in se(20, 255), k in se(20, 255)) {
        prop_assume!(!f.is_empty());
        prop_assert_eq!(gdilate(&f, &k).unwrap(), gdilate(&k, &f).unwrap());
        prop_assert_eq!(
            gdilate(&gdilate(&f, &b).unwrap(), &k).unwrap(),
            gdilate(&f, &gdilate(&b, &k).unwrap()).unwrap()
        );
    }

    #[test]
    fn grey_adjunction(f in grey(3, 7, 7, 0.2), h in grey(3, 7, 7, 0.3), k in se(3, 7)) {
        // Clamping at the ceiling breaks the biconditional, so stay below it.
        prop_assume!(h.max_value().unwrap_or(0) + k.max_value().unwrap() <= 7);
        let lhs = le(&gdilate(&h, &k).unwrap(), &f).unwrap();
        let rhs = le(&h, &gerode(&f, &k).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn grey_opening_closing_laws(f in grey(6, 63, 255, 0.2), k in se(20, 255)) {
        let o = gopen(&f, &k).unwrap();
        let c = gclose(&f, &k).unwrap();
        prop_assert!(le(&o, &f).unwrap());
        prop_assert!(le(&f, &c).unwrap());
        prop_assert_eq!(gopen(&o, &k).unwrap(), o);
        prop_assert_eq!(gclose(&c, &k).unwrap(), c);
        prop_assert_eq!(reflect_image(&reflect_image(&k)), k);
    }

    #[test]
    fn reconstructions_resample_to_the_samples(f in grey(8, 63, 255, 0.1), nonflat in any::<bool>()) {
        let spec = spec(if nonflat { "k2" } else { "flat3" });
        let fs = restrict(&f, spec.sieve());
        let (lo, hi) = (min_reconstruct(&fs, &spec).unwrap(), max_reconstruct(&fs, &spec).unwrap());
        prop_assert_eq!(restrict(&hi, spec.sieve()), fs.clone());
        prop_assert_eq!(restrict(&lo, spec.sieve()), fs.clone());
        prop_assert_eq!(&lo, &gclose(&fs, spec.k()).unwrap());
        prop_assert_eq!(&hi, &gdilate(&fs, spec.k()).unwrap());
        prop_assert!(le(&lo, &hi).unwrap());
    }

    #[test]
    fn binary_images_follow_grey_morphology(a in set(6), b in set(3)) {
        prop_assume!(!b.is_empty());
        let l = 255;
        let fa = GreyImage::constant(&a, l, l).unwrap();
        let fb = GreyImage::constant(&b, 0, l).unwrap();
        let top = |g: GreyImage| BinaryImage::from_points(2, g.iter().filter(|(_, v)| *v == l).map(|(p, _)| p)).unwrap();
        prop_assert_eq!(top(gdilate(&fa, &fb).unwrap()), bdilate(&a, &b).unwrap());
        prop_assert_eq!(top(gerode(&fa, &fb).unwrap()), berode(&a, &b).unwrap());
    }

    #[test]
    fn pooling_is_extensive_and_its_samples_are_closed(f in grey(8, 63, 255, 0.1), nonflat in any::<bool>()) {
        let spec = spec(if nonflat { "k2" } else { "flat3" });
        prop_assert!(le(&f, &rho(&f, &spec).unwrap()).unwrap());
        let s = sigma(&f, &spec).unwrap();
        prop_assert_eq!(restrict(&gclose(&s, spec.k()).unwrap(), spec.sieve()), s);
    }

    #[test]
    fn image_files_round_trip(f in grey(7, 1000, 1000, 0.0), g in grey(7, 255, 255, 0.3)) {
        for enc in [PgmEncoding::Plain, PgmEncoding::Raw] {
            let bytes = write_pgm(&f, enc).unwrap();
            let back = read_pgm(&bytes).unwrap();
            prop_assert_eq!(write_pgm(&back, enc).unwrap(), bytes);
        }
        let text = write_sem(&g).unwrap();
        let back = read_sem(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_sem(&back).unwrap(), text);
    }
}

#[test]
fn reports_are_reproducible() {
    let mut cfg = TrialConfig::canonical(spec("k2")).with_suite(&["grey", "pooling"]);
    cfg.trials = 10;
    let (a, b) = (run_suite(&cfg).unwrap(), run_suite(&cfg).unwrap());
    assert_eq!(a.render(), b.render());
    assert_eq!(a.json(), b.json());
}
