//! Which guarantees a parameter tuple earns.
use girthlab::params::validate;

fn main() {
    for (n, l, a, b) in [(2, 1, 2, 2), (3, 4, 4, 2), (3, 5, 2, 2), (4, 10, 4, 7), (3, 4, 1, 2)] {
        match validate(n, l, a, b) {
            Ok(spec) => {
                let clauses: Vec<_> = spec.guarantees.iter().map(|g| g.clause.as_str()).collect();
                println!("n={n} l={l} a={a} b={b}: q={:?} {clauses:?}", spec.q);
            }
            Err(e) => println!("n={n} l={l} a={a} b={b}: rejected ({e})"),
        }
    }
}
