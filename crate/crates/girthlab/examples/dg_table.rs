//! Diameter/girth table over a prime range, written as CSV to stdout.
use girthlab::cayley::{dg_table, write_dg_csv, BfsOptions};
use girthlab::modmat::is_prime;
use girthlab::params::Family;

fn main() -> girthlab::Result<()> {
    let primes: Vec<u64> = (3..=31).filter(|&p| is_prime(p)).collect();
    let rows = dg_table(&Family::new(2, 1, 2, 2), &primes, &BfsOptions::default());
    write_dg_csv(&rows, std::io::stdout().lock(), false)
}
