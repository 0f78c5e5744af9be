//! Spectral lower bound on the girth.
use girthlab::params::Family;
use girthlab::spectral::{gram_char_poly, girth_lower_bound, largest_real_root};
use girthlab::exactmat::magic_upper;

fn main() -> girthlab::Result<()> {
    for p in [101, 10_007, 1_000_003] {
        let g = girth_lower_bound(&Family::new(3, 4, 2, 4), p)?;
        println!("p={p}: gamma={:.3} raw={:.3} girth >= {}", g.gamma, g.bound_raw, g.bound_reported);
    }
    let x = magic_upper(3, 2).pow(4)?;
    let poly = gram_char_poly(&x)?;
    println!("char poly of X^T X: {poly:?}, top root {:?}", largest_real_root(&poly));
    Ok(())
}
