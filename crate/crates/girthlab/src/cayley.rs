//! Breadth-first exploration of `Cay(<S>, S ∪ S⁻¹)` inside `SL_n(Z/mZ)`.
//!
//! One BFS from the identity yields order, girth and diameter together. Edges
//! follow the simple-graph convention: duplicate generator images collapse and
//! an involution contributes a single edge.

use std::hash::Hash;
use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use rustc_hash::{FxBuildHasher, FxHashMap};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmat::{magic_lower, magic_upper, power_closed_form};
use crate::modmat::{group_order_sl, is_prime, reduce, ModArith, ModMatrix, SparseRight};
use crate::params::Family;

pub const DEFAULT_MEMORY_BUDGET: u64 = 8 << 30;
/// Largest code space served by a flat depth array instead of a hash table.
const DENSE_LIMIT: u128 = 1 << 27;
const CHUNK: usize = 1 << 14;
const NO_ARRIVAL: u8 = u8::MAX;
const UNVISITED: u16 = u16::MAX;
pub const DOT_ORDER_LIMIT: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BfsOptions {
    /// Estimated bytes the visited set and frontiers may occupy.
    pub memory_budget: u64,
    /// Stop as soon as no deeper level can shorten the best cycle found.
    /// Diameter is then not computed.
    pub stop_at_girth: bool,
}

impl Default for BfsOptions {
    fn default() -> Self {
        Self {
            memory_budget: DEFAULT_MEMORY_BUDGET,
            stop_at_girth: false,
        }
    }
}

/// Distinct non-identity elements of `S ∪ S⁻¹` with an inverse table.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    n: usize,
    m: u64,
    elems: Vec<ModMatrix>,
    inverse: Vec<usize>,
}

impl GeneratorSet {
    /// Symmetrises and deduplicates; identity images are dropped.
    pub fn new(gens: &[ModMatrix]) -> Result<Self> {
        let first = gens
            .first()
            .ok_or_else(|| Error::param("empty generator set"))?;
        let (n, m) = (first.dim(), first.modulus());
        let mut elems: Vec<ModMatrix> = Vec::new();
        for g in gens {
            if g.dim() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: g.dim(),
                });
            }
            if g.modulus() != m {
                return Err(Error::param("generators use different moduli"));
            }
            if g.det() != 1 % m {
                return Err(Error::param(format!("generator has determinant {} mod {m}", g.det())));
            }
            let inv = g.inverse()?;
            for h in [g.clone(), inv] {
                if !h.is_identity() && !elems.contains(&h) {
                    elems.push(h);
                }
            }
        }
        if elems.len() >= NO_ARRIVAL as usize {
            return Err(Error::param("at most 254 distinct generator images are supported"));
        }
        let inverse = elems
            .iter()
            .map(|g| {
                let inv = g.inverse().expect("checked above");
                elems.iter().position(|h| *h == inv).expect("set is symmetric")
            })
            .collect();
        Ok(Self {
            n,
            m,
            elems,
            inverse,
        })
    }

    /// Like [`GeneratorSet::new`], but additionally requires every input to be
    /// non-identity and the images `g_i^{±1}` of distinct inputs to differ.
    pub fn strict(gens: &[ModMatrix]) -> Result<Self> {
        for (i, g) in gens.iter().enumerate() {
            if g.is_identity() {
                return Err(Error::Degenerate(format!(
                    "generator {} is the identity modulo {}",
                    i + 1,
                    g.modulus()
                )));
            }
        }
        let set = Self::new(gens)?;
        for i in 0..gens.len() {
            let gi_inv = gens[i].inverse()?;
            for j in 0..i {
                if gens[j] == gens[i] || gens[j] == gi_inv {
                    return Err(Error::Degenerate(format!(
                        "generators {} and {} coincide up to inversion modulo {}",
                        j + 1,
                        i + 1,
                        set.m
                    )));
                }
            }
        }
        Ok(set)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    /// Valency of the simple Cayley graph.
    pub fn degree(&self) -> usize {
        self.elems.len()
    }

    pub fn elements(&self) -> &[ModMatrix] {
        &self.elems
    }

    pub fn inverse_index(&self, s: usize) -> usize {
        self.inverse[s]
    }

    fn code_space(&self) -> Option<u128> {
        (self.m as u128).checked_pow((self.n * self.n) as u32)
    }
}

/// `A^l`, `B^l` reduced modulo `m`.
pub fn family_generators(family: &Family, m: u64) -> Result<[ModMatrix; 2]> {
    if family.n < 2 {
        return Err(Error::param("dimension must be at least 2"));
    }
    let l = i64::try_from(family.l).map_err(|_| Error::Overflow("power l".into()))?;
    let x = power_closed_form(&magic_upper(family.n, family.a), l)?;
    let y = power_closed_form(&magic_lower(family.n, family.b), l)?;
    Ok([reduce(&x, m)?, reduce(&y, m)?])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Exploration {
    pub order: u64,
    /// `None` when the explored graph has no cycle.
    pub girth: Option<u32>,
    /// Eccentricity of the identity; `None` when the search stopped early.
    pub diameter: Option<u32>,
    pub level_sizes: Vec<u64>,
    pub degree: usize,
    pub peak_bytes: u64,
}

trait Key: Copy + Eq + Hash + Send + Sync + 'static {
    fn index(self) -> usize;
    fn decode(self, ar: &ModArith, out: &mut [u32]);
    fn encode(digits: &[u32], m: u64) -> Self;
}

impl Key for u64 {
    fn index(self) -> usize {
        self as usize
    }
    #[inline]
    fn decode(self, ar: &ModArith, out: &mut [u32]) {
        let mut c = self;
        for d in out.iter_mut() {
            let (q, r) = ar.div_rem(c);
            *d = r as u32;
            c = q;
        }
    }
    #[inline]
    fn encode(digits: &[u32], m: u64) -> Self {
        digits.iter().rev().fold(0u64, |acc, &d| acc * m + d as u64)
    }
}

impl Key for u128 {
    fn index(self) -> usize {
        self as usize
    }
    fn decode(self, ar: &ModArith, out: &mut [u32]) {
        let m = ar.modulus() as u128;
        let mut c = self;
        for d in out.iter_mut() {
            *d = (c % m) as u32;
            c /= m;
        }
    }
    fn encode(digits: &[u32], m: u64) -> Self {
        digits
            .iter()
            .rev()
            .fold(0u128, |acc, &d| acc * m as u128 + d as u128)
    }
}

/// Visited set mapping element code to `depth << 8 | arrival generator`.
enum Store<K: Key> {
    Dense(Vec<u16>),
    Hash(FxHashMap<K, u16>),
}

impl<K: Key> Store<K> {
    #[inline]
    fn get(&self, k: K) -> Option<u16> {
        match self {
            Store::Dense(v) => Some(v[k.index()]).filter(|&x| x != UNVISITED),
            Store::Hash(h) => h.get(&k).copied(),
        }
    }

    #[inline]
    fn insert(&mut self, k: K, val: u16) {
        match self {
            Store::Dense(v) => v[k.index()] = val,
            Store::Hash(h) => {
                h.insert(k, val);
            }
        }
    }

    fn bytes(&self) -> u64 {
        match self {
            Store::Dense(v) => v.capacity() as u64 * 2,
            Store::Hash(h) => h.capacity() as u64 * (std::mem::size_of::<(K, u16)>() as u64 + 1),
        }
    }
}

fn identity_digits(n: usize) -> Vec<u32> {
    (0..n * n).map(|i| (i % (n + 1) == 0) as u32).collect()
}

/// Runs the BFS from the identity.
pub fn explore(gens: &GeneratorSet, opts: &BfsOptions) -> Result<Exploration> {
    let space = gens.code_space().ok_or_else(|| {
        Error::Overflow(format!(
            "element codes for n={} modulo {} exceed 128 bits",
            gens.n, gens.m
        ))
    })?;
    if space <= u64::MAX as u128 {
        explore_keyed::<u64>(gens, opts, space)
    } else {
        explore_keyed::<u128>(gens, opts, space)
    }
}

fn explore_keyed<K: Key>(gens: &GeneratorSet, opts: &BfsOptions, space: u128) -> Result<Exploration> {
    let n2 = gens.n * gens.n;
    let m = gens.m;
    let ar = ModArith::new(gens.n, m)?;
    let sparse: Vec<SparseRight> = gens.elems.iter().map(SparseRight::new).collect();
    let deg = gens.degree();

    let dense_bytes = space.saturating_mul(2);
    let mut store: Store<K> = if space <= DENSE_LIMIT && dense_bytes <= opts.memory_budget as u128 / 2 {
        Store::Dense(vec![UNVISITED; space as usize])
    } else {
        Store::Hash(FxHashMap::with_hasher(FxBuildHasher))
    };

    let root = K::encode(&identity_digits(gens.n), m);
    store.insert(root, NO_ARRIVAL as u16);
    let mut frontier: Vec<(K, u8)> = vec![(root, NO_ARRIVAL)];
    let mut level_sizes = vec![1u64];
    let mut order = 1u64;
    let mut best: Option<u32> = None;
    let mut depth: u32 = 0;
    let mut peak = store.bytes();
    let mut complete = true;
    let pair_bytes = std::mem::size_of::<(K, u8)>() as u64;

    while !frontier.is_empty() {
        if opts.stop_at_girth && best.is_some_and(|g| g <= 2 * depth + 1) {
            complete = false;
            break;
        }
        if depth >= 254 {
            return Err(Error::Overflow("BFS depth exceeds 254 levels".into()));
        }
        let expanded: Vec<Vec<K>> = frontier
            .par_chunks(CHUNK)
            .map(|chunk| {
                let mut digits = vec![0u32; n2];
                let mut prod = vec![0u32; n2];
                let mut out = Vec::with_capacity(chunk.len() * deg);
                for &(u, _) in chunk {
                    u.decode(&ar, &mut digits);
                    for g in &sparse {
                        g.apply(&ar, &digits, &mut prod);
                        out.push(K::encode(&prod, m));
                    }
                }
                out
            })
            .collect();

        let mut next: Vec<(K, u8)> = Vec::new();
        let next_depth = depth + 1;
        for (chunk, nbrs) in frontier.chunks(CHUNK).zip(&expanded) {
            for (i, &(_, arrival)) in chunk.iter().enumerate() {
                let back = (arrival != NO_ARRIVAL).then(|| gens.inverse[arrival as usize]);
                for (s, &v) in nbrs[i * deg..(i + 1) * deg].iter().enumerate() {
                    if back == Some(s) {
                        continue;
                    }
                    match store.get(v) {
                        None => {
                            store.insert(v, (next_depth as u16) << 8 | s as u16);
                            next.push((v, s as u8));
                        }
                        Some(val) => {
                            // the tree edge into v comes from this very (u, s) pair
                            // only, so any visited endpoint closes a cycle
                            let cand = depth + (val >> 8) as u32 + 1;
                            best = Some(best.map_or(cand, |b| b.min(cand)));
                        }
                    }
                }
            }
        }
        let chunk_bytes: u64 = expanded.iter().map(|c| c.capacity() as u64).sum::<u64>()
            * std::mem::size_of::<K>() as u64;
        let level_bytes = store.bytes()
            + (frontier.capacity() as u64 + next.capacity() as u64) * pair_bytes
            + chunk_bytes;
        peak = peak.max(level_bytes);
        if level_bytes > opts.memory_budget {
            return Err(Error::BudgetExceeded {
                budget_bytes: opts.memory_budget,
                visited: order + next.len() as u64,
                depth: next_depth,
            });
        }
        drop(expanded);
        if next.is_empty() {
            break;
        }
        order += next.len() as u64;
        level_sizes.push(next.len() as u64);
        depth = next_depth;
        frontier = next;
    }

    Ok(Exploration {
        order,
        girth: best,
        diameter: complete.then_some(level_sizes.len() as u32 - 1),
        level_sizes,
        degree: deg,
        peak_bytes: peak,
    })
}

/// Order of the subgroup generated by `gens`.
pub fn closure(gens: &[ModMatrix]) -> Result<u64> {
    closure_with(gens, &BfsOptions::default())
}

pub fn closure_with(gens: &[ModMatrix], opts: &BfsOptions) -> Result<u64> {
    if gens.iter().all(ModMatrix::is_identity) {
        return Ok(1);
    }
    let opts = BfsOptions {
        stop_at_girth: false,
        ..*opts
    };
    Ok(explore(&GeneratorSet::new(gens)?, &opts)?.order)
}

/// Shortest cycle length of the simple Cayley graph, `None` for a tree.
pub fn girth(gens: &[ModMatrix]) -> Result<Option<u32>> {
    girth_with(gens, &BfsOptions::default())
}

pub fn girth_with(gens: &[ModMatrix], opts: &BfsOptions) -> Result<Option<u32>> {
    let opts = BfsOptions {
        stop_at_girth: true,
        ..*opts
    };
    Ok(explore(&GeneratorSet::strict(gens)?, &opts)?.girth)
}

pub fn diameter(gens: &[ModMatrix]) -> Result<u32> {
    diameter_with(gens, &BfsOptions::default())
}

pub fn diameter_with(gens: &[ModMatrix], opts: &BfsOptions) -> Result<u32> {
    let opts = BfsOptions {
        stop_at_girth: false,
        ..*opts
    };
    let ex = explore(&GeneratorSet::new(gens)?, &opts)?;
    Ok(ex.diameter.expect("full exploration"))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CayleyStats {
    pub family: Option<Family>,
    pub modulus: u64,
    pub order: u64,
    /// `|SL_n(F_p)|`, present for prime moduli.
    pub group_order: Option<u128>,
    pub generated_full: bool,
    pub girth: Option<u32>,
    pub diameter: u32,
    /// `diameter / girth` as an unreduced fraction.
    pub dg_ratio: Option<(u32, u32)>,
    pub degree: usize,
    pub peak_bytes: u64,
    pub seconds: f64,
}

impl CayleyStats {
    pub fn ratio(&self) -> Option<f64> {
        self.dg_ratio.map(|(d, g)| d as f64 / g as f64)
    }
}

/// Order, girth and diameter for an arbitrary generator list from one BFS.
pub fn stats_for(gens: &[ModMatrix], family: Option<Family>, opts: &BfsOptions) -> Result<CayleyStats> {
    let start = Instant::now();
    let set = GeneratorSet::strict(gens)?;
    let opts = BfsOptions {
        stop_at_girth: false,
        ..*opts
    };
    let ex = explore(&set, &opts)?;
    let m = set.modulus();
    let group_order = if is_prime(m) {
        group_order_sl(set.dim(), m).ok()
    } else {
        None
    };
    let diameter = ex.diameter.expect("full exploration");
    Ok(CayleyStats {
        family,
        modulus: m,
        order: ex.order,
        group_order,
        generated_full: group_order == Some(ex.order as u128),
        girth: ex.girth,
        diameter,
        dg_ratio: ex.girth.map(|g| (diameter, g)),
        degree: ex.degree,
        peak_bytes: ex.peak_bytes,
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// Stats of `Cay(<A^l, B^l> mod m)` for one modulus.
pub fn stats(family: &Family, m: u64, opts: &BfsOptions) -> Result<CayleyStats> {
    stats_for(&family_generators(family, m)?, Some(*family), opts)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DgRow {
    pub p: u64,
    pub stats: Option<CayleyStats>,
    pub error: Option<String>,
}

/// One row per prime, sorted by `p`; failures stay in their row.
pub fn dg_table(family: &Family, primes: &[u64], opts: &BfsOptions) -> Vec<DgRow> {
    let mut ps = primes.to_vec();
    ps.sort_unstable();
    ps.dedup();
    ps.into_iter()
        .map(|p| match stats(family, p, opts) {
            Ok(s) => DgRow {
                p,
                stats: Some(s),
                error: None,
            },
            Err(e) => DgRow {
                p,
                stats: None,
                error: Some(e.to_string()),
            },
        })
        .collect()
}

pub const CSV_HEADER: [&str; 8] = [
    "p", "order", "full", "girth", "diameter", "ratio", "seconds", "peak_bytes",
];

/// Writes the table as CSV. Wall-clock seconds are left blank unless
/// `timings` is set, so repeated runs produce identical bytes.
pub fn write_dg_csv<W: Write>(rows: &[DgRow], out: W, timings: bool) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in rows {
        let rec: Vec<String> = match &row.stats {
            Some(s) => vec![
                row.p.to_string(),
                s.order.to_string(),
                s.generated_full.to_string(),
                s.girth.map(|g| g.to_string()).unwrap_or_default(),
                s.diameter.to_string(),
                s.ratio().map(|r| format!("{r:.6}")).unwrap_or_default(),
                if timings {
                    format!("{:.3}", s.seconds)
                } else {
                    String::new()
                },
                s.peak_bytes.to_string(),
            ],
            None => {
                let mut v = vec![String::new(); CSV_HEADER.len()];
                v[0] = row.p.to_string();
                v
            }
        };
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

/// Full vertex list in BFS order with an adjacency table (`degree` entries per
/// vertex, indexed like [`GeneratorSet::elements`]).
#[derive(Debug, Clone)]
pub struct Enumeration {
    pub codes: Vec<u128>,
    pub neighbors: Vec<u32>,
    pub degree: usize,
}

pub fn enumerate(gens: &GeneratorSet, order_limit: u64) -> Result<Enumeration> {
    let n = gens.dim();
    let m = gens.modulus();
    let deg = gens.degree();
    let id = ModMatrix::identity(n, m);
    let mut index: FxHashMap<u128, u32> = FxHashMap::default();
    let mut mats = vec![id.clone()];
    let mut codes = vec![id.encode()?.0];
    index.insert(codes[0], 0);
    let mut neighbors = Vec::new();
    let mut head = 0;
    while head < mats.len() {
        let u = mats[head].clone();
        for g in gens.elements() {
            let v = u.mul(g);
            let c = v.encode()?.0;
            let idx = match index.get(&c) {
                Some(&i) => i,
                None => {
                    let i = mats.len() as u32;
                    if mats.len() as u64 >= order_limit {
                        return Err(Error::OrderLimit {
                            order: mats.len() as u64 + 1,
                            limit: order_limit,
                        });
                    }
                    index.insert(c, i);
                    mats.push(v);
                    codes.push(c);
                    i
                }
            };
            neighbors.push(idx);
        }
        head += 1;
    }
    Ok(Enumeration {
        codes,
        neighbors,
        degree: deg,
    })
}

/// Graphviz export of the simple Cayley graph, vertices labelled by element code.
pub fn export_dot<W: Write>(gens: &[ModMatrix], mut out: W) -> Result<()> {
    let set = GeneratorSet::new(gens)?;
    let en = enumerate(&set, DOT_ORDER_LIMIT)?;
    writeln!(out, "graph cayley {{")?;
    for c in &en.codes {
        writeln!(out, "  \"{c}\";")?;
    }
    for (u, row) in en.neighbors.chunks(en.degree.max(1)).enumerate() {
        for &v in row {
            if (u as u32) < v {
                writeln!(out, "  \"{}\" -- \"{}\";", en.codes[u], en.codes[v as usize])?;
            }
        }
    }
    writeln!(out, "}}")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashSet, VecDeque};

    fn sl2_f2_involutions() -> Vec<ModMatrix> {
        vec![
            ModMatrix::from_rows(&[[1, 1], [0, 1]], 2),
            ModMatrix::from_rows(&[[1, 0], [1, 1]], 2),
        ]
    }

    /// Girth by brute force: BFS from every vertex on an explicit edge list.
    fn brute_girth(gens: &[ModMatrix]) -> Option<u32> {
        let set = GeneratorSet::new(gens).unwrap();
        let en = enumerate(&set, 100_000).unwrap();
        let nv = en.codes.len();
        let mut best: Option<u32> = None;
        for src in 0..nv {
            let mut dist = vec![u32::MAX; nv];
            let mut parent = vec![usize::MAX; nv];
            dist[src] = 0;
            let mut q = VecDeque::from([src]);
            while let Some(u) = q.pop_front() {
                let mut seen = HashSet::new();
                for &v in &en.neighbors[u * en.degree..(u + 1) * en.degree] {
                    let v = v as usize;
                    if !seen.insert(v) || v == u {
                        continue;
                    }
                    if dist[v] == u32::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        q.push_back(v);
                    } else if parent[u] != v {
                        let c = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(c, |b| b.min(c)));
                    }
                }
            }
        }
        best
    }

    #[test]
    fn s3_six_cycle() {
        let g = sl2_f2_involutions();
        assert_eq!(closure(&g).unwrap(), 6);
        assert_eq!(girth(&g).unwrap(), Some(6));
        assert_eq!(diameter(&g).unwrap(), 3);
        assert_eq!(GeneratorSet::new(&g).unwrap().degree(), 2);
    }

    #[test]
    fn klein_four_is_complete() {
        // the determinant-one sign matrices diag(±1, ±1, ±1) over F_3
        let e = |r: [[i64; 3]; 3]| ModMatrix::from_rows(&r, 3);
        let gens = vec![
            e([[2, 0, 0], [0, 2, 0], [0, 0, 1]]),
            e([[2, 0, 0], [0, 1, 0], [0, 0, 2]]),
            e([[1, 0, 0], [0, 2, 0], [0, 0, 2]]),
        ];
        assert_eq!(closure(&gens).unwrap(), 4);
        assert_eq!(diameter(&gens).unwrap(), 1);
        assert_eq!(girth(&gens).unwrap(), Some(3));
    }

    #[test]
    fn identity_subgroup() {
        let id = ModMatrix::identity(3, 5);
        assert_eq!(closure(&[id.clone()]).unwrap(), 1);
        assert!(matches!(girth(&[id]), Err(Error::Degenerate(_))));
    }

    #[test]
    fn sl2_generation_small_primes() {
        let fam = Family::new(2, 1, 2, 2);
        for p in [3u64, 5, 7, 11, 13] {
            let s = stats(&fam, p, &BfsOptions::default()).unwrap();
            assert_eq!(s.order as u128, (p * (p * p - 1)) as u128, "p={p}");
            assert!(s.generated_full);
            assert_eq!(s.degree, 4);
        }
    }

    #[test]
    fn girth_three_at_p3() {
        let g = family_generators(&Family::new(2, 1, 2, 2), 3).unwrap();
        assert_eq!(girth(&g).unwrap(), Some(3));
        let ex = explore(&GeneratorSet::new(&g).unwrap(), &BfsOptions::default()).unwrap();
        assert_eq!(ex.order, 24);
        assert!(4 * 3u64.pow(ex.diameter.unwrap()) >= ex.order - 1);
    }

    #[test]
    fn girth_matches_all_sources_bruteforce() {
        for p in [3u64, 5, 7] {
            let g = family_generators(&Family::new(2, 1, 2, 2), p).unwrap();
            assert_eq!(girth(&g).unwrap(), brute_girth(&g), "p={p}");
        }
        let g = family_generators(&Family::new(2, 1, 2, 3), 11).unwrap();
        assert_eq!(girth(&g).unwrap(), brute_girth(&g));
        let g = family_generators(&Family::new(3, 1, 2, 2), 3).unwrap();
        assert_eq!(girth(&g).unwrap(), brute_girth(&g));
    }

    #[test]
    fn early_stop_agrees_with_full_run() {
        let g = family_generators(&Family::new(2, 1, 2, 2), 17).unwrap();
        let set = GeneratorSet::strict(&g).unwrap();
        let full = explore(&set, &BfsOptions::default()).unwrap();
        let quick = explore(
            &set,
            &BfsOptions {
                stop_at_girth: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(full.girth, quick.girth);
        assert!(quick.diameter.is_none());
        assert!(quick.order <= full.order);
    }

    #[test]
    fn hash_store_matches_dense_store() {
        let g = family_generators(&Family::new(2, 1, 2, 2), 13).unwrap();
        let set = GeneratorSet::new(&g).unwrap();
        let dense = explore(&set, &BfsOptions::default()).unwrap();
        // a budget too small for the flat array forces the hash table
        let space = 13u64.pow(4) * 2;
        let hashed = explore(
            &set,
            &BfsOptions {
                memory_budget: 3 * space,
                stop_at_girth: false,
            },
        )
        .unwrap();
        assert_eq!(dense.order, hashed.order);
        assert_eq!(dense.girth, hashed.girth);
        assert_eq!(dense.level_sizes, hashed.level_sizes);
    }

    #[test]
    fn budget_exhaustion_reports_depth() {
        let g = family_generators(&Family::new(3, 1, 2, 2), 5).unwrap();
        let err = closure_with(
            &g,
            &BfsOptions {
                memory_budget: 1 << 12,
                stop_at_girth: false,
            },
        )
        .unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { depth, .. } if depth >= 1));
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn strict_rejects_coinciding_generators() {
        let x = ModMatrix::from_rows(&[[1, 1], [0, 1]], 5);
        let y = x.inverse().unwrap();
        assert!(matches!(girth(&[x.clone(), y]), Err(Error::Degenerate(_))));
        assert!(matches!(girth(&[x.clone(), x]), Err(Error::Degenerate(_))));
    }

    #[test]
    fn composite_modulus_is_never_full() {
        let g = family_generators(&Family::new(2, 1, 3, 5), 4).unwrap();
        let s = stats_for(&g, None, &BfsOptions::default()).unwrap();
        assert_eq!(s.group_order, None);
        assert!(!s.generated_full);
        assert_eq!(s.order, 48);
    }

    #[test]
    fn dg_table_rows() {
        let fam = Family::new(2, 1, 2, 2);
        let rows = dg_table(&fam, &[13, 5, 11, 7], &BfsOptions::default());
        assert_eq!(rows.iter().map(|r| r.p).collect::<Vec<_>>(), vec![5, 7, 11, 13]);
        assert!(rows.iter().all(|r| r.stats.as_ref().unwrap().generated_full));
        assert!(dg_table(&fam, &[], &BfsOptions::default()).is_empty());
        // p = 2 makes A the identity: recorded in-row, table survives
        let rows = dg_table(&fam, &[2, 3], &BfsOptions::default());
        assert!(rows[0].error.is_some());
        assert_eq!(rows[1].stats.as_ref().unwrap().order, 24);
    }

    #[test]
    fn csv_is_reproducible() {
        let fam = Family::new(2, 1, 2, 2);
        let render = || {
            let rows = dg_table(&fam, &[5, 7], &BfsOptions::default());
            let mut buf = Vec::new();
            write_dg_csv(&rows, &mut buf, false).unwrap();
            String::from_utf8(buf).unwrap()
        };
        let a = render();
        assert_eq!(a, render());
        assert!(a.starts_with("p,order,full,girth,diameter,ratio,seconds,peak_bytes\n5,120,true,"));
    }

    #[test]
    fn dot_export() {
        let mut buf = Vec::new();
        export_dot(&sl2_f2_involutions(), &mut buf).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert_eq!(s.matches(" -- ").count(), 6);
        assert!(s.contains("\"9\";"), "identity code 1 + 1*2^3 = 9");
    }
}
