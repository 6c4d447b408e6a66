//! Structuring elements shipped with the crate, stored as SEM text at
//! ceiling 255.

use crate::error::{MorphError, Result};
use crate::grid::GreyImage;
use crate::io::read_sem;

pub const NAMES: [&str; 5] = ["flat3", "flat5", "k2", "b2", "c2"];

pub fn source(name: &str) -> Option<&'static str> {
    Some(match name {
        "flat3" => include_str!("../assets/flat3.sem"),
        "flat5" => include_str!("../assets/flat5.sem"),
        "k2" => include_str!("../assets/k2.sem"),
        "b2" => include_str!("../assets/b2.sem"),
        "c2" => include_str!("../assets/c2.sem"),
        _ => return None,
    })
}

/// The named element at its stored ceiling.
pub fn load(name: &str) -> Result<GreyImage> {
    let text = source(name).ok_or_else(|| MorphError::Config(format!("unknown built-in element {name:?}")))?;
    read_sem(text)
}

/// The named element re-labelled with ceiling `l`.
pub fn load_with_ceiling(name: &str, l: u32) -> Result<GreyImage> {
    load(name)?.with_ceiling(l)
}

pub fn flat3(l: u32) -> GreyImage {
    load_with_ceiling("flat3", l).expect("asset is valid")
}

pub fn flat5(l: u32) -> GreyImage {
    load_with_ceiling("flat5", l).expect("asset is valid")
}

pub fn k2(l: u32) -> GreyImage {
    load_with_ceiling("k2", l).expect("asset is valid")
}

pub fn b2(l: u32) -> GreyImage {
    load_with_ceiling("b2", l).expect("asset is valid")
}

pub fn c2(l: u32) -> GreyImage {
    load_with_ceiling("c2", l).expect("asset is valid")
}
