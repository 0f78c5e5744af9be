//! Exponents l for which the reduced generators are still unitriangular
//! with the right first superdiagonal.
use girthlab::params::{admissible_exponents, binom_mod_direct, lucas_binom_mod};

fn main() -> girthlab::Result<()> {
    println!("n=4 q=3: {:?}", admissible_exponents(4, 3, 4)?);
    println!("n=5 q=2: {:?}", admissible_exponents(5, 2, 4)?);
    let (alpha, beta, q) = (1000, 337, 7);
    println!(
        "C({alpha},{beta}) mod {q}: lucas={} direct={}",
        lucas_binom_mod(alpha, beta, q)?,
        binom_mod_direct(alpha, beta, q)
    );
    Ok(())
}
