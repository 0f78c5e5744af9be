//! Free-group words: bounded freeness scans over exact integers, shortest
//! relators modulo `p`, Schreier generators of finite-index subgroups, and
//! step-by-step replays of the explicit generation recipes.
//!
//! Scan letters are coded `0..2k`: `2i` is generator `i`, `2i + 1` its inverse.

use rayon::prelude::*;
use serde::Serialize;

use crate::cayley::{self, BfsOptions, GeneratorSet};
use crate::error::{Error, Result};
use crate::exactmat::{eval_word, magic_lower, magic_upper, power_closed_form, ExactMatrix, Letter, Word};
use crate::modmat::{group_order_sl, is_prime, reduce, ModMatrix};
use crate::params::Family;

pub const DEFAULT_WORD_BUDGET: u64 = 10_000_000;

#[inline]
fn inv(c: u8) -> u8 {
    c ^ 1
}

/// Number of reduced words of each length `1..=max_len` over `k` generators.
fn reduced_word_counts(k: usize, max_len: u32) -> Vec<u128> {
    let r = 2 * k as u128;
    let mut out = Vec::new();
    let mut cur = r;
    for _ in 0..max_len {
        out.push(cur);
        cur = cur.saturating_mul(r - 1);
    }
    out
}

/// True when `w` is cyclically reduced and lexicographically least among its
/// rotations and the rotations of its inverse.
pub fn is_canonical(w: &[u8]) -> bool {
    let len = w.len();
    if len == 0 || (len > 1 && w[0] == inv(w[len - 1])) {
        return false;
    }
    let winv: Vec<u8> = w.iter().rev().map(|&c| inv(c)).collect();
    for cand in [w, &winv[..]] {
        for r in 0..len {
            for i in 0..len {
                let (a, b) = (cand[(r + i) % len], w[i]);
                if a != b {
                    if a < b {
                        return false;
                    }
                    break;
                }
            }
        }
    }
    true
}

/// Letters of a word with `k = 2` in the scan alphabet, `X = 0`, `Y = 2`.
pub fn word_from_letters(w: &[u8]) -> Word {
    Word::new(w.iter().map(|&c| {
        let letter = if c >> 1 == 0 { Letter::X } else { Letter::Y };
        (letter, if c & 1 == 0 { 1 } else { -1 })
    }))
}

fn letters_from_word(w: &Word) -> Vec<u8> {
    let mut out = Vec::new();
    for s in w.syllables() {
        let base = if s.letter == Letter::X { 0 } else { 2 };
        let c = if s.exp > 0 { base } else { base + 1 };
        out.extend(std::iter::repeat(c).take(s.exp.unsigned_abs() as usize));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanResult {
    /// Length actually covered; below the request when the budget cut it.
    pub max_length: u32,
    pub requested_max_length: u32,
    pub partial: bool,
    /// Canonical relators, ordered by length then letter codes.
    pub violations: Vec<Vec<u8>>,
    pub words_checked: u64,
}

/// Scans every canonical reduced word of length `<= max_length` in the given
/// exact generators and reports those equal to the identity.
///
/// The budget bounds the number of reduced words in the search space; the
/// length is lowered to fit it up front so results never depend on timing.
pub fn scan_generators(gens: &[ExactMatrix], max_length: u32, budget: u64) -> Result<ScanResult> {
    if gens.is_empty() || gens.len() > 64 {
        return Err(Error::param("scan needs between 1 and 64 generators"));
    }
    let n = gens[0].dim();
    if gens.iter().any(|g| g.dim() != n) {
        return Err(Error::param("generators have different dimensions"));
    }
    let mut mats = Vec::with_capacity(2 * gens.len());
    for g in gens {
        mats.push(g.clone());
        mats.push(g.inverse_unimodular()?);
    }
    let counts = reduced_word_counts(gens.len(), max_length);
    let mut len = 0u32;
    let mut total = 0u128;
    for c in &counts {
        if total + c > budget as u128 {
            break;
        }
        total += c;
        len += 1;
    }

    let letters = mats.len() as u8;
    // a canonical word starts with its least letter class, and that letter is
    // the uninverted generator; seed tasks by the first two letters
    let mut tasks: Vec<Vec<u8>> = Vec::new();
    for f in (0..letters).step_by(2) {
        tasks.push(vec![f]);
        if len >= 2 {
            for s in 0..letters {
                if s != inv(f) && s >> 1 >= f >> 1 {
                    tasks.push(vec![f, s]);
                }
            }
        }
    }
    let per_task: Vec<(Vec<Vec<u8>>, u64)> = tasks
        .par_iter()
        .map(|prefix| {
            let mut prod = ExactMatrix::identity(n);
            for &c in prefix {
                prod = &prod * &mats[c as usize];
            }
            let mut found = Vec::new();
            let mut checked = 0u64;
            let mut word = prefix.clone();
            if prefix.len() == 1 {
                visit(&word, &prod, &mut found, &mut checked);
            } else {
                dfs(&mats, len, &mut word, prod, &mut found, &mut checked);
            }
            (found, checked)
        })
        .collect();
    let mut violations = Vec::new();
    let mut words_checked = 0;
    for (v, c) in per_task {
        violations.extend(v);
        words_checked += c;
    }
    violations.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(ScanResult {
        max_length: len,
        requested_max_length: max_length,
        partial: len < max_length,
        violations,
        words_checked,
    })
}

fn visit(word: &[u8], prod: &ExactMatrix, found: &mut Vec<Vec<u8>>, checked: &mut u64) {
    if is_canonical(word) {
        *checked += 1;
        if prod.is_identity() {
            found.push(word.to_vec());
        }
    }
}

fn dfs(
    mats: &[ExactMatrix],
    max_len: u32,
    word: &mut Vec<u8>,
    prod: ExactMatrix,
    found: &mut Vec<Vec<u8>>,
    checked: &mut u64,
) {
    visit(word, &prod, found, checked);
    if word.len() as u32 >= max_len {
        return;
    }
    let first_class = word[0] >> 1;
    let last = *word.last().expect("nonempty prefix");
    for c in 0..mats.len() as u8 {
        if c == inv(last) || c >> 1 < first_class {
            continue;
        }
        word.push(c);
        let next = &prod * &mats[c as usize];
        dfs(mats, max_len, word, next, found, checked);
        word.pop();
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FreenessReport {
    pub n: usize,
    pub l: u64,
    pub a: i64,
    pub b: i64,
    pub max_length: u32,
    pub requested_max_length: u32,
    pub partial: bool,
    pub violations: Vec<Word>,
    pub words_checked: u64,
}

impl FreenessReport {
    pub fn is_free_to_bound(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Scan of `<A^l, B^l>` with the default word budget.
pub fn freeness_scan(n: usize, l: u64, a: i64, b: i64, max_length: u32) -> Result<FreenessReport> {
    freeness_scan_with(n, l, a, b, max_length, DEFAULT_WORD_BUDGET)
}

/// Unlike the parameter validator this accepts `a, b >= 1`, since the
/// non-free case `a = b = 1` is part of what a scan should expose.
pub fn freeness_scan_with(
    n: usize,
    l: u64,
    a: i64,
    b: i64,
    max_length: u32,
    budget: u64,
) -> Result<FreenessReport> {
    if n < 2 {
        return Err(Error::param(format!("dimension must be at least 2, got {n}")));
    }
    if max_length < 2 {
        return Err(Error::param("max_length must be at least 2"));
    }
    if a == 0 || b == 0 {
        return Err(Error::param("a and b must be nonzero"));
    }
    let l = i64::try_from(l).map_err(|_| Error::Overflow("power l".into()))?;
    if l < 1 {
        return Err(Error::param("power l must be at least 1"));
    }
    let x = power_closed_form(&magic_upper(n, a), l)?;
    let y = power_closed_form(&magic_lower(n, b), l)?;
    let r = scan_generators(&[x, y], max_length, budget)?;
    Ok(FreenessReport {
        n,
        l: l as u64,
        a,
        b,
        max_length: r.max_length,
        requested_max_length: r.requested_max_length,
        partial: r.partial,
        violations: r.violations.iter().map(|w| word_from_letters(w)).collect(),
        words_checked: r.words_checked,
    })
}

/// Length of the shortest nontrivial closed non-backtracking walk through the
/// identity in the simple Cayley graph of `<A^l, B^l> mod p`, if it is at most
/// `max_length`. Equivalently the shortest cyclically reduced relator, with
/// the inverse of an involution identified with itself.
pub fn identity_word_length_mod_p(family: &Family, p: u64, max_length: u32) -> Result<Option<u32>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let [x, y] = cayley::family_generators(family, p)?;
    if x.is_identity() || y.is_identity() {
        return Err(Error::Degenerate(format!(
            "a generator reduces to the identity modulo {p}; requires a,b ≢ 0 (mod p)"
        )));
    }
    if x == y || x == y.inverse()? {
        return Err(Error::Degenerate(format!(
            "the generators coincide up to inversion modulo {p}"
        )));
    }
    let set = GeneratorSet::new(&[x, y])?;
    let elems = set.elements();
    let inverse: Vec<usize> = (0..elems.len()).map(|s| set.inverse_index(s)).collect();
    let mut best = max_length + 1;
    // rotate every cycle so that it starts with its least generator index
    for first in 0..elems.len() {
        let mut path = vec![first];
        short_relator(elems, &inverse, &mut path, elems[first].clone(), &mut best);
    }
    Ok((best <= max_length).then_some(best))
}

fn short_relator(
    elems: &[ModMatrix],
    inverse: &[usize],
    path: &mut Vec<usize>,
    prod: ModMatrix,
    best: &mut u32,
) {
    let len = path.len() as u32;
    if len >= 2 && prod.is_identity() && path[0] != inverse[*path.last().unwrap()] {
        *best = (*best).min(len);
        return;
    }
    if len + 1 >= *best {
        return;
    }
    let first = path[0];
    let last = *path.last().unwrap();
    for s in first..elems.len() {
        if s == inverse[last] {
            continue;
        }
        path.push(s);
        short_relator(elems, inverse, path, prod.mul(&elems[s]), best);
        path.pop();
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubgroupGenerators {
    pub index: u64,
    pub generators: Vec<Word>,
    pub rank: usize,
}

/// Free generators of the kernel of `X -> 1, Y -> 0` onto `Z/mZ`, using the
/// transversal `{X^i : 0 <= i < m}`.
pub fn schreier_generators(m: u64) -> Result<SubgroupGenerators> {
    if m < 1 {
        return Err(Error::param("index must be at least 1"));
    }
    let m_i = i64::try_from(m).map_err(|_| Error::Overflow("index".into()))?;
    let mut generators = Vec::new();
    for i in 0..m_i {
        let rep = Word::letter(Letter::X, i);
        for letter in [Letter::X, Letter::Y] {
            let target = if letter == Letter::X { (i + 1) % m_i } else { i };
            // X-edges from coset i to i + 1 < m form the spanning tree
            if letter == Letter::X && i + 1 < m_i {
                continue;
            }
            let g = rep
                .concat(&Word::letter(letter, 1))
                .concat(&Word::letter(Letter::X, -target));
            generators.push(g);
        }
    }
    let rank = generators.len();
    Ok(SubgroupGenerators {
        index: m,
        generators,
        rank,
    })
}

/// `w` evaluated modulo `m` with `X`, `Y` replaced by the given matrices.
pub fn eval_word_mod(w: &Word, x: &ModMatrix, y: &ModMatrix) -> Result<ModMatrix> {
    let mut acc = ModMatrix::identity(x.dim(), x.modulus());
    for s in w.syllables() {
        let base = if s.letter == Letter::X { x } else { y };
        acc = acc.checked_mul(&base.pow(s.exp)?)?;
    }
    Ok(acc)
}

/// Images of subgroup generator words under exact `X`, `Y`.
pub fn subgroup_images(gens: &SubgroupGenerators, x: &ExactMatrix, y: &ExactMatrix) -> Result<Vec<ExactMatrix>> {
    gens.generators.iter().map(|w| eval_word(w, x, y)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecipeStep {
    pub label: String,
    pub word: Word,
    pub matrix: ModMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecipeReplay {
    pub modulus: u64,
    pub n: usize,
    pub steps: Vec<RecipeStep>,
    /// BFS order of `<X, Y>`; absent when the closure was not run or ran out
    /// of budget.
    pub closure_order: Option<u64>,
    pub expected_order: u128,
    pub closure_error: Option<String>,
}

impl RecipeReplay {
    pub fn generated_full(&self) -> bool {
        self.closure_order.map(u128::from) == Some(self.expected_order)
    }
}

struct Recipe {
    x: ModMatrix,
    y: ModMatrix,
    steps: Vec<RecipeStep>,
}

impl Recipe {
    fn step(&mut self, label: &str, word: Word, expected: ModMatrix) -> Result<Word> {
        let got = eval_word_mod(&word, &self.x, &self.y)?;
        if got != expected {
            return Err(Error::RecipeFailure {
                step: label.to_string(),
                expected: expected.to_string(),
                actual: got.to_string(),
            });
        }
        self.steps.push(RecipeStep {
            label: label.to_string(),
            word: word.clone(),
            matrix: got,
        });
        Ok(word)
    }

    fn finish(self, run_closure: Option<&BfsOptions>) -> Result<RecipeReplay> {
        let (n, m) = (self.x.dim(), self.x.modulus());
        let expected_order = group_order_sl(n, m)?;
        let (closure_order, closure_error) = match run_closure {
            None => (None, None),
            Some(opts) => match cayley::closure_with(&[self.x.clone(), self.y.clone()], opts) {
                Ok(o) => (Some(o), None),
                Err(e @ (Error::BudgetExceeded { .. } | Error::OrderLimit { .. })) => {
                    (None, Some(e.to_string()))
                }
                Err(e) => return Err(e),
            },
        };
        if let Some(o) = closure_order {
            if o as u128 != expected_order {
                return Err(Error::RecipeFailure {
                    step: "closure".into(),
                    expected: expected_order.to_string(),
                    actual: o.to_string(),
                });
            }
        }
        Ok(RecipeReplay {
            modulus: m,
            n,
            steps: self.steps,
            closure_order,
            expected_order,
            closure_error,
        })
    }
}

fn w(s: &str) -> Word {
    s.parse().expect("recipe words are well formed")
}

fn m3(rows: [[i64; 3]; 3]) -> ModMatrix {
    ModMatrix::from_rows(&rows, 3)
}

/// Shortest word for the lower corner transvection `I + E(3,1)` in
/// `<X, Y> mod 3`; found by breadth-first search over `SL_3(F_3)`.
pub const SL3_T2_WORD: &str = "X Y X^-1 Y^-1 X^-1 Y X Y X^-1 Y X^-1 Y^-1 X^-1 Y";

/// Replays the mod-3 generation recipe for `<A^4, B^4>` in `SL_3`.
pub fn replay_recipe_sl3_mod3(a: i64, b: i64) -> Result<RecipeReplay> {
    replay_recipe_sl3_mod3_with(a, b, Some(&BfsOptions::default()))
}

pub fn replay_recipe_sl3_mod3_with(a: i64, b: i64, closure: Option<&BfsOptions>) -> Result<RecipeReplay> {
    if a.rem_euclid(3) != 1 || b.rem_euclid(3) != 2 {
        return Err(Error::param(format!(
            "recipe needs a ≡ 1 and b ≡ -1 (mod 3), got a={a}, b={b}"
        )));
    }
    let [x, y] = cayley::family_generators(&Family::new(3, 4, a, b), 3)?;
    let mut r = Recipe {
        x,
        y,
        steps: Vec::new(),
    };
    let c1 = r.step("C1", w("Y X Y^-1 X^-1"), m3([[2, 2, 1], [0, 1, 0], [2, 0, 0]]))?;
    let c2 = r.step("C2", w("Y^-1 X^-1 Y X"), m3([[2, 0, 2], [1, 1, 0], [1, 0, 0]]))?;
    r.step("C3", c1.inverse(), m3([[0, 0, 2], [0, 1, 0], [1, 1, 2]]))?;
    let c4 = r.step("C4", c2.inverse(), m3([[0, 0, 1], [0, 1, 2], [2, 0, 2]]))?;
    let c1c2i = r.step("C1*C2^-1", c1.concat(&c2.inverse()), m3([[2, 2, 2], [0, 1, 2], [0, 0, 2]]))?;
    let u = r.step(
        "C1*C2^-1*X",
        c1c2i.concat(&Word::letter(Letter::X, 1)),
        m3([[2, 1, 1], [0, 1, 0], [0, 0, 2]]),
    )?;
    let t1 = r.step("(C1*C2^-1*X)^2 = T1", u.concat(&u), m3([[1, 0, 1], [0, 1, 0], [0, 0, 1]]))?;
    let t2 = r.step("T2", w(SL3_T2_WORD), m3([[1, 0, 0], [0, 1, 0], [1, 0, 1]]))?;
    let t = r.step(
        "T = [T1,T2]",
        t1.concat(&t2).concat(&t1.inverse()).concat(&t2.inverse()),
        m3([[0, 0, 2], [0, 1, 0], [1, 0, 0]]),
    )?;
    let z = r.step("Z = T*C4", t.concat(&c4), m3([[1, 0, 1], [0, 1, 2], [0, 0, 1]]))?;
    r.step("Z*T1^-1", z.concat(&t1.inverse()), m3([[1, 0, 0], [0, 1, 2], [0, 0, 1]]))?;
    r.finish(closure)
}

/// Replays the generation recipe for `<A', B'>` in `SL_{q^t+1}(F_q)`, where
/// `A'`, `B'` are the unit bidiagonal matrices.
pub fn replay_recipe_qt(q: u64, t: u32) -> Result<RecipeReplay> {
    replay_recipe_qt_with(q, t, Some(&BfsOptions::default()))
}

pub fn replay_recipe_qt_with(q: u64, t: u32, closure: Option<&BfsOptions>) -> Result<RecipeReplay> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if t < 1 {
        return Err(Error::param("t must be at least 1"));
    }
    let qt = q
        .checked_pow(t)
        .filter(|&v| v < 64)
        .ok_or_else(|| Error::param(format!("n = {q}^{t} + 1 is too large to replay")))?;
    let n = qt as usize + 1;
    let qt = qt as i64;
    let ap = reduce(&magic_upper(n, 1), q)?;
    let bp = reduce(&magic_lower(n, 1), q)?;
    // 1-based unit matrix E(i, j)
    let e = |i: usize, j: usize| {
        let mut v = vec![0u64; n * n];
        v[(i - 1) * n + (j - 1)] = 1;
        ModMatrix::from_entries(n, q, v)
    };
    let id = ModMatrix::identity(n, q);
    let add = |a: &ModMatrix, b: &ModMatrix| {
        let v = a.entries().iter().zip(b.entries()).map(|(x, y)| (x + y) % q).collect();
        ModMatrix::from_entries(n, q, v)
    };
    let sub = |a: &ModMatrix, b: &ModMatrix| {
        let v = a.entries().iter().zip(b.entries()).map(|(x, y)| (x + q - y) % q).collect();
        ModMatrix::from_entries(n, q, v)
    };

    let mut r = Recipe {
        x: ap.clone(),
        y: bp,
        steps: Vec::new(),
    };
    let xl = |e: i64| Word::letter(Letter::X, e);
    let yl = |e: i64| Word::letter(Letter::Y, e);

    r.step("B'^(q^t)", yl(qt), add(&id, &e(n, 1)))?;
    let xr = r.step(
        "X",
        Word::new([
            (Letter::Y, -1),
            (Letter::X, 1),
            (Letter::Y, qt),
            (Letter::X, -1),
            (Letter::Y, 1),
            (Letter::X, 1),
        ]),
        sub(&ap, &e(n - 1, n)),
    )?;
    let x1 = r.step("X1 = A'*X^-1", xl(1).concat(&xr.inverse()), add(&id, &e(n - 1, n)))?;
    let y1 = r.step(
        "Y1",
        Word::new([
            (Letter::X, 1),
            (Letter::Y, -1),
            (Letter::X, -qt),
            (Letter::Y, 1),
            (Letter::X, -1),
        ]),
        add(&id, &e(n, n - 1)),
    )?;
    let mut bv = id.entries().to_vec();
    for (i, j, v) in [(n - 1, n - 1, 0), (n - 1, n, q - 1), (n, n - 1, 1), (n, n, 1)] {
        bv[(i - 1) * n + (j - 1)] = v;
    }
    let block = ModMatrix::from_entries(n, q, bv);
    let yr = r.step("Y = X1^-1*Y1", x1.inverse().concat(&y1), block)?;
    let z_expected = add(
        &sub(&sub(&sub(&ap, &e(n - 2, n - 1)), &e(n - 1, n)), &e(n - 2, n)),
        &e(n, n - 1),
    );
    let z = r.step("Z = A'*Y", xl(1).concat(&yr), z_expected)?;
    let y1z = r.step(
        "Y1^-1*Z",
        y1.inverse().concat(&z),
        sub(&sub(&sub(&ap, &e(n - 2, n - 1)), &e(n - 1, n)), &e(n - 2, n)),
    )?;
    let comm = r.step(
        "[X,X1]",
        xr.concat(&x1).concat(&xr.inverse()).concat(&x1.inverse()),
        add(&id, &e(n - 2, n)),
    )?;
    let tw = r.step("T = [X,X1]*Y1^-1*Z", comm.concat(&y1z), sub(&sub(&ap, &e(n - 2, n - 1)), &e(n - 1, n)))?;
    let at = r.step(
        "A'*T^-1",
        xl(1).concat(&tw.inverse()),
        add(&add(&id, &e(n - 2, n - 1)), &e(n - 1, n)),
    )?;
    r.step("X1^-1*A'*T^-1", x1.inverse().concat(&at), add(&id, &e(n - 2, n - 1)))?;
    r.finish(closure)
}

/// Letter codes of a two-generator word, for callers working in scan alphabet.
pub fn scan_letters(w: &Word) -> Vec<u8> {
    letters_from_word(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn all_reduced(k: usize, len: usize) -> Vec<Vec<u8>> {
        let mut out: Vec<Vec<u8>> = (0..2 * k as u8).map(|c| vec![c]).collect();
        for _ in 1..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    let last = *w.last().unwrap();
                    (0..2 * k as u8).filter(move |&c| c != inv(last)).map(move |c| {
                        let mut v = w.clone();
                        v.push(c);
                        v
                    })
                })
                .collect();
        }
        out
    }

    /// Orbit representatives of cyclically reduced words under rotation and
    /// inversion, by brute force.
    fn orbit_count(k: usize, len: usize) -> usize {
        let mut reps = BTreeSet::new();
        for w in all_reduced(k, len) {
            if len > 1 && w[0] == inv(w[len - 1]) {
                continue;
            }
            let winv: Vec<u8> = w.iter().rev().map(|&c| inv(c)).collect();
            let mut best = w.clone();
            for cand in [&w, &winv] {
                for r in 0..len {
                    let rot: Vec<u8> = (0..len).map(|i| cand[(r + i) % len]).collect();
                    best = best.min(rot);
                }
            }
            reps.insert(best);
        }
        reps.len()
    }

    #[test]
    fn canonical_count_matches_orbit_oracle() {
        let x = magic_upper(2, 2);
        let y = magic_lower(2, 2);
        let r = scan_generators(&[x, y], 7, u64::MAX).unwrap();
        let expected: usize = (1..=7).map(|l| orbit_count(2, l)).sum();
        assert_eq!(r.words_checked as usize, expected);

        let gens: Vec<ExactMatrix> = (2..5).map(|a| magic_upper(2, a)).collect();
        let r = scan_generators(&gens, 4, u64::MAX).unwrap();
        // all three commute, so their words are mostly relators; only the count matters
        let expected: usize = (1..=4).map(|l| orbit_count(3, l)).sum();
        assert_eq!(r.words_checked as usize, expected);
    }

    #[test]
    fn sl2_free_to_length_twelve() {
        let r = freeness_scan(2, 1, 2, 2, 12).unwrap();
        assert!(r.violations.is_empty());
        assert!(!r.partial);
        assert_eq!(r.max_length, 12);
    }

    #[test]
    fn unit_parameters_are_not_free() {
        let r = freeness_scan(2, 1, 1, 1, 12).unwrap();
        assert!(!r.violations.is_empty());
        let shortest = &r.violations[0];
        assert_eq!(shortest.len(), 6);
        let (x, y) = (magic_upper(2, 1), magic_lower(2, 1));
        for v in &r.violations {
            assert!(eval_word(v, &x, &y).unwrap().is_identity(), "{v}");
        }
        let s: Word = "X Y^-1 X".parse().unwrap();
        let s4 = s.concat(&s).concat(&s).concat(&s);
        assert!(eval_word(&s4, &x, &y).unwrap().is_identity());
        assert!(r.violations.iter().any(|v| v.len() == 12));
    }

    #[test]
    fn swapping_parameters_preserves_violation_count() {
        for (a, b) in [(1, 2), (1, 3), (2, 3)] {
            let r1 = freeness_scan(2, 1, a, b, 10).unwrap();
            let r2 = freeness_scan(2, 1, b, a, 10).unwrap();
            assert_eq!(r1.violations.len(), r2.violations.len(), "a={a} b={b}");
            assert_eq!(r1.words_checked, r2.words_checked);
        }
    }

    #[test]
    fn budget_shortens_scan() {
        let r = freeness_scan_with(2, 1, 2, 2, 12, 1000).unwrap();
        assert!(r.partial);
        // 4 + 12 + 36 + 108 + 324 = 484 <= 1000 < 484 + 972
        assert_eq!(r.max_length, 5);
        assert_eq!(r.requested_max_length, 12);
        assert!(freeness_scan(2, 1, 2, 2, 1).is_err());
    }

    #[test]
    fn identity_word_length_examples() {
        let fam = Family::new(2, 1, 2, 2);
        assert_eq!(identity_word_length_mod_p(&fam, 3, 6).unwrap(), Some(3));
        assert_eq!(identity_word_length_mod_p(&fam, 1009, 8).unwrap(), None);
        assert!(matches!(
            identity_word_length_mod_p(&fam, 2, 6),
            Err(Error::Degenerate(_))
        ));
        assert!(matches!(identity_word_length_mod_p(&fam, 9, 6), Err(Error::NotPrime(9))));
    }

    #[test]
    fn identity_word_length_agrees_with_bfs_girth() {
        for (fam, p) in [
            (Family::new(2, 1, 2, 2), 5u64),
            (Family::new(2, 1, 2, 2), 7),
            (Family::new(2, 1, 2, 3), 11),
            (Family::new(3, 1, 2, 2), 3),
            (Family::new(3, 4, 4, 2), 5),
        ] {
            let g = cayley::girth(&cayley::family_generators(&fam, p).unwrap()).unwrap();
            assert_eq!(identity_word_length_mod_p(&fam, p, 20).unwrap(), g, "{fam:?} p={p}");
        }
    }

    #[test]
    fn schreier_examples() {
        let s = schreier_generators(1).unwrap();
        assert_eq!(s.generators, vec![w("X"), w("Y")]);
        let s = schreier_generators(2).unwrap();
        assert_eq!(s.generators, vec![w("Y"), w("X^2"), w("X Y X^-1")]);
        for m in 1..=6 {
            let s = schreier_generators(m).unwrap();
            assert_eq!(s.rank as u64, m + 1);
            for g in &s.generators {
                let xsum: i64 = g
                    .syllables()
                    .iter()
                    .filter(|s| s.letter == Letter::X)
                    .map(|s| s.exp)
                    .sum();
                assert_eq!(xsum.rem_euclid(m as i64), 0, "{g} not in the kernel");
            }
        }
    }

    /// Coset enumeration: the permutation action of X, Y on Z/m has every
    /// Schreier generator in the point stabiliser of 0, and the action is transitive.
    #[test]
    fn schreier_index_by_coset_action() {
        for m in 1..=6i64 {
            let act = |w: &Word, mut c: i64| {
                for s in w.syllables() {
                    if s.letter == Letter::X {
                        c = (c + s.exp).rem_euclid(m);
                    }
                }
                c
            };
            let orbit: BTreeSet<i64> = (0..m).map(|i| act(&Word::letter(Letter::X, i), 0)).collect();
            assert_eq!(orbit.len() as i64, m);
            for g in schreier_generators(m as u64).unwrap().generators {
                assert_eq!(act(&g, 0), 0);
            }
        }
    }

    #[test]
    fn schreier_images_stay_free() {
        let (x, y) = (magic_upper(2, 2), magic_lower(2, 2));
        for m in [2u64, 3] {
            let s = schreier_generators(m).unwrap();
            let imgs = subgroup_images(&s, &x, &y).unwrap();
            let r = scan_generators(&imgs, if m == 2 { 8 } else { 6 }, u64::MAX).unwrap();
            assert!(r.violations.is_empty(), "m={m}");
        }
    }

    #[test]
    fn sl3_recipe_steps() {
        let r = replay_recipe_sl3_mod3_with(4, 2, None).unwrap();
        assert_eq!(r.steps[0].matrix, m3([[2, -1, 1], [0, 1, 0], [-1, 0, 0]]));
        assert_eq!(r.steps.len(), 11);
        assert_eq!(w(SL3_T2_WORD).len(), 14);
        let other = replay_recipe_sl3_mod3_with(7, 5, None).unwrap();
        assert_eq!(
            r.steps.iter().map(|s| &s.matrix).collect::<Vec<_>>(),
            other.steps.iter().map(|s| &s.matrix).collect::<Vec<_>>()
        );
        assert!(replay_recipe_sl3_mod3(2, 2).is_err());
    }

    #[test]
    fn sl3_recipe_closure() {
        let r = replay_recipe_sl3_mod3(4, 2).unwrap();
        assert_eq!(r.closure_order, Some(5616));
        assert!(r.generated_full());
    }

    #[test]
    fn qt_recipe_small() {
        let r = replay_recipe_qt(3, 1).unwrap();
        assert_eq!(r.n, 4);
        let corner = &r.steps[0].matrix;
        for i in 0..4 {
            for j in 0..4 {
                let want = u64::from(i == j || (i, j) == (3, 0));
                assert_eq!(corner.get(i, j), want);
            }
        }
        assert!(r.generated_full());
        assert_eq!(r.closure_order, Some(group_order_sl(4, 3).unwrap() as u64));

        let r = replay_recipe_qt_with(2, 2, None).unwrap();
        assert_eq!(r.n, 5);
        assert_eq!(r.steps.len(), 11);
        assert!(replay_recipe_qt(4, 1).is_err());
    }

    #[test]
    fn scan_letter_roundtrip() {
        let word = w("X^2 Y^-1 X^-3 Y");
        assert_eq!(word_from_letters(&scan_letters(&word)), word);
    }
}
