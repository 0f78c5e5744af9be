//! Explicit Cayley graphs of `SL_n(F_p)` generated by powers of the
//! unitriangular pair `A` (superdiagonal `a`) and `B` (subdiagonal `b`).
//!
//! Start with [`params::validate`] to see which guarantees a parameter tuple
//! carries, [`cayley::stats`] for order, girth and diameter modulo a prime,
//! and [`words::freeness_scan`] for bounded freeness checks over the integers.

pub mod cayley;
pub mod cli;
pub mod error;
pub mod exactmat;
pub mod modmat;
pub mod params;
pub mod spectral;
pub mod words;

pub use error::{Error, Result};
pub use exactmat::{ExactMatrix, Letter, Word};
pub use modmat::{ElementCode, ModMatrix};
pub use params::{Family, GraphSpec};
