//! Build the generator pair for a family, exactly and reduced mod p.
use girthlab::exactmat::magic_pair;
use girthlab::modmat::reduce;

fn main() -> girthlab::Result<()> {
    let (a, b) = magic_pair(3, 2, 2)?;
    let (x, y) = (a.pow(4)?, b.pow(4)?);
    println!("X = A^4 =\n{x}\nY = B^4 =\n{y}");
    println!("X mod 7 =\n{}", reduce(&x, 7)?);
    println!("det X = {}", x.det());
    Ok(())
}
