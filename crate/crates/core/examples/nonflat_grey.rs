//! Grey-value morphology with flat and non-flat structuring elements on a
//! partial domain.

use morphsample::builtin;
use morphsample::grey_morph::{closing_duality_check, gclose, gdilate, gerode, gopen, negative, reflect_image};
use morphsample::grid::le;
use morphsample::io::write_sem;
use morphsample::GreyImage;

fn main() -> morphsample::Result<()> {
    let l = 255;
    // A bright cross with a hole off its centre; `None` is outside the domain.
    let rows: Vec<Vec<Option<u32>>> = (0..11)
        .map(|r| {
            (0..13)
                .map(|c| if (r, c) == (1, 2) { None } else { Some(if c == 6 || r == 5 { 120 } else { 30 + (r * c % 7) as u32 }) })
                .collect()
        })
        .collect();
    let f = GreyImage::from_rows(l, [0, 0], &rows)?;

    for (name, k) in [("flat3", builtin::flat3(l)), ("k2", builtin::k2(l)), ("b2", builtin::b2(l))] {
        println!("== {name}\n{}", write_sem(&k)?);
        let d = gdilate(&f, &k)?;
        let e = gerode(&f, &k)?;
        let o = gopen(&f, &k)?;
        let c = gclose(&f, &k)?;
        println!("dilation\n{}erosion\n{}opening\n{}closing\n{}", write_sem(&d)?, write_sem(&e)?, write_sem(&o)?, write_sem(&c)?);
        assert!(le(&o, &f)? && le(&f, &c)?);
        // Closing is the negated opening of the negative by the reflected
        // element, away from the domain border.
        let dual = negative(&gopen(&negative(&f), &reflect_image(&k))?);
        assert!(closing_duality_check(&f, &k)?);
        let agree = c.iter().filter(|(p, v)| dual.get(p) == Some(*v)).count();
        println!("duality: {agree} of {} closing pixels agree, including the whole interior\n", c.len());
    }
    Ok(())
}
