//! Arbitrary-precision integer matrices.
//!
//! Houses the unitriangular generator pair `A` (superdiagonal `a`) and `B`
//! (subdiagonal `b`), their closed-form powers, and evaluation of words in two
//! generators over `Z` with no overflow path.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Square matrix over `Z`, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl ExactMatrix {
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { BigInt::one() } else { BigInt::zero() })
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_, _| BigInt::zero())
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Self { n, entries }
    }

    /// Builds a matrix from rows of machine integers. Panics on ragged input.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let n = rows.len();
        Self::from_fn(n, |i, j| {
            let row = rows[i].as_ref();
            assert_eq!(row.len(), n, "row {i} has length {} (expected {n})", row.len());
            BigInt::from(row[j])
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.entries.chunks(self.n)
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(idx, e)| {
            if idx / self.n == idx % self.n {
                e.is_one()
            } else {
                e.is_zero()
            }
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: rhs.n,
            });
        }
        let n = self.n;
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = BigInt::zero();
                for k in 0..n {
                    let l = &self.entries[i * n + k];
                    if l.is_zero() {
                        continue;
                    }
                    let r = &rhs.entries[k * n + j];
                    if !r.is_zero() {
                        acc += l * r;
                    }
                }
                out.push(acc);
            }
        }
        Ok(Self { n, entries: out })
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut m: Vec<BigInt> = self.entries.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k * n + k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&r| !m[r * n + k].is_zero()) else {
                    return BigInt::zero();
                };
                for c in 0..n {
                    m.swap(k * n + c, swap * n + c);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j];
                    m[i * n + j] = v / &prev;
                }
            }
            prev = m[k * n + k].clone();
        }
        sign * &m[n * n - 1]
    }

    fn minor(&self, row: usize, col: usize) -> Self {
        let n = self.n;
        let mut entries = Vec::with_capacity((n - 1) * (n - 1));
        for i in (0..n).filter(|&i| i != row) {
            for j in (0..n).filter(|&j| j != col) {
                entries.push(self.get(i, j).clone());
            }
        }
        Self { n: n - 1, entries }
    }

    /// Inverse of a matrix with determinant ±1, via the adjugate.
    pub fn inverse_unimodular(&self) -> Result<Self> {
        let det = self.det();
        if !(det.is_one() || (-&det).is_one()) {
            return Err(Error::UnsupportedShape(format!(
                "determinant {det} is not a unit in Z"
            )));
        }
        if self.is_unitriangular().is_some() {
            return Ok(unipotent_power(self, -1));
        }
        let n = self.n;
        if n == 1 {
            return Ok(Self::from_fn(1, |_, _| det.clone()));
        }
        Ok(Self::from_fn(n, |i, j| {
            // adj(M)[i][j] = (-1)^{i+j} det(minor(j, i))
            let c = self.minor(j, i).det();
            let c = if (i + j) % 2 == 0 { c } else { -c };
            c * &det
        }))
    }

    /// `Some(true)` for upper, `Some(false)` for lower unitriangular; identity reports upper.
    pub fn is_unitriangular(&self) -> Option<bool> {
        let n = self.n;
        let diag_ok = (0..n).all(|i| self.get(i, i).is_one());
        if !diag_ok {
            return None;
        }
        let lower_zero = (0..n).all(|i| (0..i).all(|j| self.get(i, j).is_zero()));
        if lower_zero {
            return Some(true);
        }
        let upper_zero = (0..n).all(|i| (i + 1..n).all(|j| self.get(i, j).is_zero()));
        upper_zero.then_some(false)
    }

    /// Recognises the banded generators: unit diagonal plus one constant
    /// off-diagonal band adjacent to it and zeros elsewhere.
    pub fn magic_shape(&self) -> Option<MagicShape> {
        let n = self.n;
        if n < 2 {
            return None;
        }
        let upper = !self.get(0, 1).is_zero() || self.get(1, 0).is_zero();
        let value = if upper {
            self.get(0, 1).clone()
        } else {
            self.get(1, 0).clone()
        };
        for i in 0..n {
            for j in 0..n {
                let expected = if i == j {
                    BigInt::one()
                } else if (upper && j == i + 1) || (!upper && i == j + 1) {
                    value.clone()
                } else {
                    BigInt::zero()
                };
                if *self.get(i, j) != expected {
                    return None;
                }
            }
        }
        Some(MagicShape { upper, value })
    }

    /// Generic integer power; negative exponents go through the unimodular inverse.
    pub fn pow(&self, k: i64) -> Result<Self> {
        if self.is_unitriangular().is_some() {
            return Ok(unipotent_power(self, k));
        }
        let base = if k < 0 {
            self.inverse_unimodular()?
        } else {
            self.clone()
        };
        let mut e = k.unsigned_abs();
        let mut acc = Self::identity(self.n);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Entries as `f64`, row-major (lossy for huge entries).
    pub fn to_f64(&self) -> Vec<f64> {
        self.entries
            .iter()
            .map(|e| e.to_f64().unwrap_or(f64::INFINITY))
            .collect()
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;

    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.checked_mul(rhs).expect("matrix dimensions must agree")
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MagicShape {
    pub upper: bool,
    pub value: BigInt,
}

/// `A` with superdiagonal `a`, no range check on `a`.
pub fn magic_upper(n: usize, a: i64) -> ExactMatrix {
    ExactMatrix::from_fn(n, |i, j| {
        if i == j {
            BigInt::one()
        } else if j == i + 1 {
            BigInt::from(a)
        } else {
            BigInt::zero()
        }
    })
}

/// `B` with subdiagonal `b`, no range check on `b`.
pub fn magic_lower(n: usize, b: i64) -> ExactMatrix {
    magic_upper(n, b).transpose()
}

/// The generator pair `(A, B)` for dimension `n`.
pub fn magic_pair(n: usize, a: i64, b: i64) -> Result<(ExactMatrix, ExactMatrix)> {
    if n < 2 {
        return Err(Error::param(format!("dimension must be at least 2, got {n}")));
    }
    if a < 2 || b < 2 {
        return Err(Error::param(format!(
            "a and b must be at least 2, got a={a}, b={b}"
        )));
    }
    Ok((magic_upper(n, a), magic_lower(n, b)))
}

/// Binomial coefficient `C(k, r)` for any integer `k` (falling-factorial form).
pub fn generalized_binomial(k: i64, r: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..r {
        num *= BigInt::from(k) - BigInt::from(j);
        den *= BigInt::from(j + 1);
    }
    let (q, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero());
    q
}

/// `M^k` for a banded generator: entry at band distance `d` is `C(k, d) * v^d`.
pub fn power_closed_form(m: &ExactMatrix, k: i64) -> Result<ExactMatrix> {
    let shape = m.magic_shape().ok_or_else(|| {
        Error::UnsupportedShape("power_closed_form needs a unit-banded generator".into())
    })?;
    let n = m.dim();
    let coeffs: Vec<BigInt> = (0..n)
        .map(|d| generalized_binomial(k, d) * num_traits::pow(shape.value.clone(), d))
        .collect();
    Ok(ExactMatrix::from_fn(n, |i, j| {
        let d = if shape.upper {
            j.checked_sub(i)
        } else {
            i.checked_sub(j)
        };
        match d {
            Some(d) => coeffs[d].clone(),
            None => BigInt::zero(),
        }
    }))
}

/// `(I + N)^k = sum_r C(k, r) N^r` for unitriangular input; exact for negative `k` too.
fn unipotent_power(m: &ExactMatrix, k: i64) -> ExactMatrix {
    let n = m.dim();
    let mut nil = m.clone();
    for i in 0..n {
        nil.entries[i * n + i] -= 1;
    }
    let mut acc = ExactMatrix::identity(n);
    let mut term = ExactMatrix::identity(n);
    for r in 1..n {
        term = &term * &nil;
        if term.entries.iter().all(Zero::is_zero) {
            break;
        }
        let c = generalized_binomial(k, r);
        if c.is_zero() {
            continue;
        }
        for (a, t) in acc.entries.iter_mut().zip(&term.entries) {
            *a += &c * t;
        }
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    pub fn other(self) -> Self {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Syllable {
    pub letter: Letter,
    pub exp: i64,
}

/// Reduced word in two letters, stored as syllables `X^e1 Y^e2 ...`.
///
/// Construction always normalises: zero exponents vanish and adjacent equal
/// letters merge, so no two consecutive syllables share a letter.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Word {
    syllables: Vec<Syllable>,
}

impl Word {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(parts: impl IntoIterator<Item = (Letter, i64)>) -> Self {
        let mut w = Self::empty();
        for (letter, exp) in parts {
            w.push(letter, exp);
        }
        w
    }

    pub fn letter(letter: Letter, exp: i64) -> Self {
        Self::new([(letter, exp)])
    }

    /// Appends `letter^exp`, cancelling against the last syllable as needed.
    pub fn push(&mut self, letter: Letter, exp: i64) {
        if exp == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some(last) if last.letter == letter => {
                last.exp += exp;
                if last.exp == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push(Syllable { letter, exp }),
        }
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn len(&self) -> u64 {
        self.syllables.iter().map(|s| s.exp.unsigned_abs()).sum()
    }

    pub fn inverse(&self) -> Self {
        Self::new(self.syllables.iter().rev().map(|s| (s.letter, -s.exp)))
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut w = self.clone();
        for s in &other.syllables {
            w.push(s.letter, s.exp);
        }
        w
    }

    /// Swaps the two letters.
    pub fn swap_letters(&self) -> Self {
        Self::new(self.syllables.iter().map(|s| (s.letter.other(), s.exp)))
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.syllables.first(), self.syllables.last()) {
            (Some(f), Some(l)) => self.syllables.len() == 1 || f.letter != l.letter,
            _ => true,
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{:?}", s.letter)?;
            if s.exp != 1 {
                write!(f, "^{}", s.exp)?;
            }
        }
        Ok(())
    }
}

impl From<Word> for String {
    fn from(w: Word) -> String {
        w.to_string()
    }
}

impl TryFrom<String> for Word {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses `X^2 Y^-1 X`, with whitespace optional and `1` for the empty word.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() || s == "1" {
            return Ok(Self::empty());
        }
        let bytes = s.as_bytes();
        let mut w = Self::empty();
        let mut i = 0;
        while i < bytes.len() {
            let letter = match bytes[i] {
                b'X' => Letter::X,
                b'Y' => Letter::Y,
                c => return Err(Error::param(format!("unexpected `{}` in word", c as char))),
            };
            i += 1;
            let mut exp = 1i64;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let start = i;
                if i < bytes.len() && bytes[i] == b'-' {
                    i += 1;
                }
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                exp = s[start..i]
                    .parse()
                    .map_err(|_| Error::param(format!("bad exponent in `{s}`")))?;
            }
            w.push(letter, exp);
        }
        Ok(w)
    }
}

/// Exact product of the word with `X`, `Y` substituted.
pub fn eval_word(w: &Word, x: &ExactMatrix, y: &ExactMatrix) -> Result<ExactMatrix> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            left: x.dim(),
            right: y.dim(),
        });
    }
    let mut acc = ExactMatrix::identity(x.dim());
    for s in w.syllables() {
        let base = match s.letter {
            Letter::X => x,
            Letter::Y => y,
        };
        let p = if base.magic_shape().is_some() {
            power_closed_form(base, s.exp)?
        } else {
            base.pow(s.exp)?
        };
        acc = &acc * &p;
    }
    Ok(acc)
}

/// Top-left entry of a word in the 2x2 generators against two upper bounds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthBound {
    /// `|P11|` of the evaluated word.
    pub actual: BigInt,
    /// `M^{2k} (ab+1)^k` with `M` the largest exponent and `k` the syllable pairs.
    pub bound: BigInt,
    /// Product of the max-row-sum norms of the syllables; always `>= actual`.
    pub norm_bound: BigInt,
}

impl GrowthBound {
    pub fn holds(&self) -> bool {
        self.actual <= self.bound
    }
}

pub fn entry_growth_bound(w: &Word, a: i64, b: i64) -> Result<GrowthBound> {
    if a < 1 || b < 1 {
        return Err(Error::param("a and b must be positive"));
    }
    let x = magic_upper(2, a);
    let y = magic_lower(2, b);
    let p = eval_word(w, &x, &y)?;
    let actual = p.get(0, 0).abs();

    let pairs = w.syllables().len().div_ceil(2);
    let max_exp = w
        .syllables()
        .iter()
        .map(|s| s.exp.unsigned_abs())
        .max()
        .unwrap_or(1);
    let pairs_u32 = u32::try_from(pairs).map_err(|_| Error::Overflow("word too long".into()))?;
    let bound = BigInt::from(max_exp).pow(2 * pairs_u32) * BigInt::from(a * b + 1).pow(pairs_u32);

    let norm_bound = w
        .syllables()
        .iter()
        .map(|s| {
            let c = match s.letter {
                Letter::X => a,
                Letter::Y => b,
            };
            BigInt::from(1) + BigInt::from(s.exp.unsigned_abs()) * BigInt::from(c)
        })
        .fold(BigInt::one(), |acc, f| acc * f);

    Ok(GrowthBound {
        actual,
        bound,
        norm_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(rows)
    }

    fn naive_power(base: &ExactMatrix, k: i64) -> ExactMatrix {
        let step = if k < 0 {
            base.inverse_unimodular().unwrap()
        } else {
            base.clone()
        };
        (0..k.unsigned_abs()).fold(ExactMatrix::identity(base.dim()), |acc, _| &acc * &step)
    }

    #[test]
    fn magic_pair_small_cases() {
        let (a, b) = magic_pair(3, 4, 2).unwrap();
        assert_eq!(a, m(&[&[1, 4, 0], &[0, 1, 4], &[0, 0, 1]]));
        assert_eq!(b.rows().nth(1).unwrap(), &[2.into(), 1.into(), 0.into()]);

        let (a, b) = magic_pair(2, 2, 2).unwrap();
        assert_eq!(a, m(&[&[1, 2], &[0, 1]]));
        assert_eq!(b, m(&[&[1, 0], &[2, 1]]));

        let (a, b) = magic_pair(4, 4, 7).unwrap();
        for i in 0..3 {
            assert_eq!(*a.get(i, i + 1), 4.into());
            assert_eq!(*b.get(i + 1, i), 7.into());
        }
        assert_eq!(a.det(), BigInt::one());
        assert_eq!(b.det(), BigInt::one());
    }

    #[test]
    fn magic_pair_rejects_bad_parameters() {
        assert!(matches!(magic_pair(1, 2, 2), Err(Error::Parameter(_))));
        assert!(matches!(magic_pair(3, 1, 2), Err(Error::Parameter(_))));
        assert!(matches!(magic_pair(3, 2, 0), Err(Error::Parameter(_))));
    }

    #[test]
    fn closed_form_powers() {
        let a = magic_upper(3, 2);
        assert_eq!(
            power_closed_form(&a, 4).unwrap(),
            m(&[&[1, 8, 24], &[0, 1, 8], &[0, 0, 1]])
        );
        assert!(power_closed_form(&a, 0).unwrap().is_identity());

        let a1 = magic_upper(4, 1);
        let p = power_closed_form(&a1, 10).unwrap();
        assert_eq!(*p.get(0, 1), 10.into());
        assert_eq!(*p.get(0, 2), 45.into());
        assert_eq!(*p.get(0, 3), 120.into());

        let a5 = magic_upper(5, 3);
        assert_eq!(power_closed_form(&a5, 7).unwrap(), naive_power(&a5, 7));
    }

    #[test]
    fn closed_form_rejects_non_banded() {
        let x = power_closed_form(&magic_upper(3, 2), 4).unwrap();
        assert!(matches!(
            power_closed_form(&x, 2),
            Err(Error::UnsupportedShape(_))
        ));
    }

    #[test]
    fn closed_form_agrees_with_repeated_products() {
        for n in 2..=6 {
            for a in 1..=5 {
                for (base, lower) in [(magic_upper(n, a), false), (magic_lower(n, a), true)] {
                    for k in -12..=12 {
                        assert_eq!(
                            power_closed_form(&base, k).unwrap(),
                            naive_power(&base, k),
                            "n={n} a={a} k={k} lower={lower}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn negative_powers_invert() {
        let a = magic_upper(4, 3);
        let p = power_closed_form(&a, 5).unwrap();
        let q = power_closed_form(&a, -5).unwrap();
        assert!((&p * &q).is_identity());
        assert_eq!(q, p.inverse_unimodular().unwrap());
    }

    #[test]
    fn eval_word_examples() {
        let (a, b) = magic_pair(2, 2, 2).unwrap();
        assert!(eval_word(&Word::empty(), &a, &b).unwrap().is_identity());

        let w: Word = "X^2 Y^3".parse().unwrap();
        let direct = &(&(&a * &a) * &(&b * &b)) * &b;
        assert_eq!(direct, m(&[&[25, 4], &[6, 1]]));
        assert_eq!(eval_word(&w, &a, &b).unwrap(), direct);

        let (a3, b3) = magic_pair(3, 2, 2).unwrap();
        let x = power_closed_form(&a3, 4).unwrap();
        let y = power_closed_form(&b3, 4).unwrap();
        let xy = eval_word(&"XY".parse().unwrap(), &x, &y).unwrap();
        // normalised form 4abrs(ab(4r-1)(4s-1)+4)+1 at r=s=1, a=b=2
        let (ab, r, s) = (4i64, 1i64, 1i64);
        let expected = 4 * ab * r * s * (ab * (4 * r - 1) * (4 * s - 1) + 4) + 1;
        assert_eq!(expected, 641);
        assert_eq!(*xy.get(0, 0), 641.into());
        assert_eq!(xy, &x * &y);
    }

    #[test]
    fn eval_word_dimension_mismatch() {
        let err = eval_word(&Word::empty(), &magic_upper(2, 2), &magic_lower(3, 2));
        assert!(matches!(err, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn eval_word_generic_path_handles_inverses() {
        let g = m(&[&[2, 1], &[1, 1]]);
        let h = m(&[&[1, 1], &[1, 2]]);
        let w: Word = "X^-2 Y X^3 Y^-1".parse().unwrap();
        let got = eval_word(&w, &g, &h).unwrap();
        let gi = g.inverse_unimodular().unwrap();
        let hi = h.inverse_unimodular().unwrap();
        let want = &(&(&(&gi * &gi) * &h) * &(&(&g * &g) * &g)) * &hi;
        assert_eq!(got, want);
    }

    #[test]
    fn growth_bound_examples() {
        let gb = entry_growth_bound(&"X^2 Y^3".parse().unwrap(), 2, 2).unwrap();
        assert_eq!((gb.actual, gb.bound), (25.into(), 45.into()));
        let gb = entry_growth_bound(&"X Y".parse().unwrap(), 2, 2).unwrap();
        assert_eq!((gb.actual, gb.bound), (5.into(), 5.into()));
        let gb = entry_growth_bound(&"X^-1 Y^-1".parse().unwrap(), 2, 2).unwrap();
        assert_eq!((gb.actual, gb.bound), (5.into(), 5.into()));
    }

    #[test]
    fn growth_bound_closed_form_fails_for_unit_exponents() {
        // (AB)^2 with a=b=2 has top-left entry 29 while M^{2k}(ab+1)^k = 25.
        let gb = entry_growth_bound(&"X Y X Y".parse().unwrap(), 2, 2).unwrap();
        assert_eq!(gb.actual, 29.into());
        assert_eq!(gb.bound, 25.into());
        assert!(!gb.holds());
        assert!(gb.actual <= gb.norm_bound);
    }

    #[test]
    fn word_normalisation_and_parsing() {
        let w = Word::new([(Letter::X, 2), (Letter::X, -2), (Letter::Y, 1), (Letter::Y, 0)]);
        assert_eq!(w, Word::letter(Letter::Y, 1));
        let w: Word = "X^2Y^-3X".parse().unwrap();
        assert_eq!(w.len(), 6);
        assert_eq!(w.to_string(), "X^2 Y^-3 X");
        assert!(w.concat(&w.inverse()).is_empty());
        assert!(!w.is_cyclically_reduced());
        assert!("X Z".parse::<Word>().is_err());
    }

    #[test]
    fn generalized_binomials() {
        assert_eq!(generalized_binomial(5, 2), 10.into());
        assert_eq!(generalized_binomial(2, 5), 0.into());
        assert_eq!(generalized_binomial(-1, 3), (-1).into());
        assert_eq!(generalized_binomial(-3, 2), 6.into());
    }

    #[test]
    fn bareiss_determinant() {
        assert_eq!(m(&[&[2, 3], &[1, 4]]).det(), 5.into());
        assert_eq!(m(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]).det(), (-1).into());
        assert_eq!(m(&[&[1, 2], &[2, 4]]).det(), 0.into());
    }
}
