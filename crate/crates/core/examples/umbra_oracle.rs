//! Grey morphology through umbrae: dilate the point sets below the graphs
//! and read the top surface back.

use morphsample::builtin;
use morphsample::grey_morph::{gclose, gclose_oracle, gdilate, gerode, gopen, gopen_oracle};
use morphsample::umbra::{top_surface, udilate, uerode, umbra};
use morphsample::GreyImage;

fn main() -> morphsample::Result<()> {
    let l = 15;
    let rows: Vec<Vec<Option<u32>>> = vec![
        vec![Some(2), Some(3), Some(5), Some(4), Some(1)],
        vec![Some(3), Some(9), Some(6), None, Some(2)],
        vec![Some(1), Some(4), Some(8), Some(7), Some(3)],
        vec![Some(0), Some(2), Some(3), Some(5), Some(6)],
    ];
    let f = GreyImage::from_rows(l, [0, 0], &rows)?;
    let k = builtin::k2(255).map_values(|_, v| i64::from(v / 5)).with_ceiling(l)?;

    let uf = umbra(&f);
    let uk = umbra(&k);
    println!("|U[f]| = {}, |U[k]| = {}", uf.len(), uk.len());
    assert_eq!(top_surface(&uf), f);

    let via_sets = top_surface(&udilate(&uf, &uk)?);
    assert_eq!(via_sets, gdilate(&f, &k)?);
    assert_eq!(top_surface(&uerode(&uf, &uk)?), gerode(&f, &k)?);
    println!("dilation and erosion agree with their umbra counterparts");

    // Opening as the union of fitted translates, closing as the dual
    // construction; k's largest value leaves headroom below l here.
    assert_eq!(gopen_oracle(&f, &k)?, gopen(&f, &k)?);
    assert_eq!(gclose_oracle(&f, &k)?, gclose(&f, &k)?);
    println!("opening and closing agree with the set-level oracles");
    Ok(())
}
