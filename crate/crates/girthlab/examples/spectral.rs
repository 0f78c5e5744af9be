//! Second adjacency eigenvalue by power iteration.
use girthlab::cayley::family_generators;
use girthlab::params::Family;
use girthlab::spectral::{second_eigenvalue, DEFAULT_ORDER_LIMIT, DEFAULT_SEED};

fn main() -> girthlab::Result<()> {
    let fam = Family::new(2, 1, 2, 2);
    for p in [5, 7, 11, 13] {
        let r = second_eigenvalue(&family_generators(&fam, p)?, DEFAULT_ORDER_LIMIT, DEFAULT_SEED)?;
        println!(
            "p={p:>2} order={:>5} lambda2={:.4} gap={:.4} iters={}",
            r.order, r.second_eigenvalue, r.normalized_gap, r.iterations
        );
    }
    Ok(())
}
