//! Check that the reduced generators fill out SL_n(F_p).
use girthlab::cayley::{stats, BfsOptions};
use girthlab::params::Family;

fn main() -> girthlab::Result<()> {
    let fam = Family::new(2, 1, 2, 2);
    for p in [3, 5, 7, 11, 13] {
        let s = stats(&fam, p, &BfsOptions::default())?;
        println!("p={p:>2} order={:>5} |SL_2|={:>5} full={}", s.order, s.group_order.unwrap(), s.generated_full);
    }
    Ok(())
}
