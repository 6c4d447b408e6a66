//! Set dilation, erosion, opening and closing, with the translate-based
//! oracles and the complement duality.

use morphsample::binary_morph::{bclose, bclose_oracle, bdilate, berode, bopen, bopen_oracle, centered_box, duality_check};
use morphsample::io::write_sem;
use morphsample::{BinaryImage, GreyImage, Point, Window};

fn show(label: &str, a: &BinaryImage) {
    let img = GreyImage::constant(a, 1, 1).unwrap();
    println!("{label} ({} points)\n{}", a.len(), write_sem(&img).unwrap());
}

fn main() -> morphsample::Result<()> {
    // An L-shaped blob with a one-pixel notch.
    let mut pts = Vec::new();
    for r in 0..7i64 {
        for c in 0..7i64 {
            if (r < 3 || c < 3) && (r, c) != (1, 1) {
                pts.push(Point::new(&[r, c]));
            }
        }
    }
    let a = BinaryImage::from_points(2, pts)?;
    let b = centered_box(2, 1);

    show("A", &a);
    show("A (+) B", &bdilate(&a, &b)?);
    show("A (-) B", &berode(&a, &b)?);
    let open = bopen(&a, &b)?;
    let close = bclose(&a, &b)?;
    show("A o B", &open);
    show("A . B", &close);

    assert_eq!(open, bopen_oracle(&a, &b)?);
    assert_eq!(close, bclose_oracle(&a, &b)?);
    assert!(open.is_subset(&a) && a.is_subset(&close));

    let window = Window::new(Point::new(&[-4, -4]), Point::new(&[10, 10]))?;
    println!("erosion/dilation duality in {window}: {}", duality_check(&a, &b, &window)?);
    Ok(())
}
