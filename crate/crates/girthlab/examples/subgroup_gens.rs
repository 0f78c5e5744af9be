//! Free generators of an index-m subgroup, and the graph they give mod p.
use girthlab::cayley::stats_for;
use girthlab::cayley::BfsOptions;
use girthlab::exactmat::magic_pair;
use girthlab::modmat::reduce;
use girthlab::words::{schreier_generators, subgroup_images};

fn main() -> girthlab::Result<()> {
    let sub = schreier_generators(3)?;
    let words: Vec<String> = sub.generators.iter().map(|w| w.to_string()).collect();
    println!("index {} rank {}: {words:?}", sub.index, sub.rank);

    let (x, y) = magic_pair(2, 2, 2)?;
    let gens = subgroup_images(&sub, &x, &y)?
        .iter()
        .map(|m| reduce(m, 13))
        .collect::<girthlab::Result<Vec<_>>>()?;
    let s = stats_for(&gens, None, &BfsOptions::default())?;
    println!("mod 13: order={} degree={} girth={:?}", s.order, s.degree, s.girth);
    Ok(())
}
