//! Girth and diameter of one Cayley graph, plus the brute-force cross-check
//! through the shortest identity word.
use girthlab::cayley::{stats, BfsOptions};
use girthlab::params::Family;
use girthlab::words::identity_word_length_mod_p;

fn main() -> girthlab::Result<()> {
    let fam = Family::new(3, 4, 2, 2);
    let s = stats(&fam, 5, &BfsOptions::default())?;
    println!("order={} girth={:?} diameter={} ratio={:?}", s.order, s.girth, s.diameter, s.ratio());

    let fam2 = Family::new(2, 1, 2, 2);
    let s2 = stats(&fam2, 13, &BfsOptions::default())?;
    let w = identity_word_length_mod_p(&fam2, 13, 30)?;
    println!("n=2 p=13: girth={:?} shortest identity word={w:?}", s2.girth);
    Ok(())
}
