mod kernel;

pub mod binary_morph;
pub mod builtin;
pub mod cli;
pub mod error;
pub mod grey_morph;
pub mod grid;
pub mod io;
pub mod pooling;
pub mod sampling;
pub mod umbra;
pub mod verify;

pub use error::{MorphError, Result};
pub use grid::{BinaryImage, GreyImage, Point, Sieve, Window};
