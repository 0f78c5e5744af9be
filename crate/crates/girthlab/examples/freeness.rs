//! Search for short relators among the generators.
use girthlab::words::freeness_scan;

fn main() -> girthlab::Result<()> {
    let free = freeness_scan(3, 4, 4, 2, 6)?;
    println!("n=3 l=4 a=4 b=2: {} words, {} relators", free.words_checked, free.violations.len());

    // A = [[1,1],[0,1]] and B^T generate SL_2(Z), which is not free
    let rel = freeness_scan(2, 1, 1, 1, 8)?;
    println!("n=2 a=b=1: {} relators, shortest {}", rel.violations.len(), rel.violations[0]);
    Ok(())
}
