//! Matrices over `Z/mZ`, their compact integer codes, and the `SL_n(F_p)` order formula.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use strength_reduce::StrengthReducedU64;

use crate::error::{Error, Result};
use crate::exactmat::ExactMatrix;

/// Square matrix over `Z/mZ` with entries in `[0, m)`, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModMatrix {
    n: usize,
    m: u64,
    entries: Vec<u64>,
}

impl ModMatrix {
    pub fn identity(n: usize, m: u64) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1 % m;
        }
        Self { n, m, entries }
    }

    /// Entries are reduced into `[0, m)`; negative values wrap.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R], m: u64) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            let row = row.as_ref();
            assert_eq!(row.len(), n, "matrix must be square");
            entries.extend(row.iter().map(|&e| e.rem_euclid(m as i64) as u64));
        }
        Self { n, m, entries }
    }

    pub fn from_entries(n: usize, m: u64, entries: Vec<u64>) -> Self {
        assert_eq!(entries.len(), n * n);
        let entries = entries.into_iter().map(|e| e % m).collect();
        Self { n, m, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n, self.m)
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j];
            }
        }
        Self { n, m: self.m, entries }
    }

    fn check_compatible(&self, rhs: &Self) -> Result<()> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: rhs.n,
            });
        }
        if self.m != rhs.m {
            return Err(Error::param(format!(
                "moduli differ: {} vs {}",
                self.m, rhs.m
            )));
        }
        Ok(())
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_compatible(rhs)?;
        let (n, m) = (self.n, self.m as u128);
        let mut entries = vec![0u64; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u128;
                for k in 0..n {
                    acc += self.entries[i * n + k] as u128 * rhs.entries[k * n + j] as u128;
                    acc %= m;
                }
                entries[i * n + j] = acc as u64;
            }
        }
        Ok(Self { n, m: self.m, entries })
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs).expect("incompatible matrices")
    }

    /// Integer lift with entries in `[0, m)`.
    pub fn lift(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.n, |i, j| BigInt::from(self.get(i, j)))
    }

    pub fn det(&self) -> u64 {
        let d = self.lift().det();
        d.mod_floor(&BigInt::from(self.m)).to_u64().expect("residue fits")
    }

    /// Inverse via the adjugate, valid for composite moduli whenever `gcd(det, m) = 1`.
    pub fn inverse(&self) -> Result<Self> {
        let m = BigInt::from(self.m);
        let det = self.lift().det().mod_floor(&m);
        let ext = det.extended_gcd(&m);
        if !ext.gcd.is_one() {
            return Err(Error::NotInvertible { modulus: self.m });
        }
        let det_inv = ext.x.mod_floor(&m);
        let n = self.n;
        if n == 1 {
            return Ok(Self::from_entries(1, self.m, vec![det_inv.to_u64().unwrap()]));
        }
        let lift = self.lift();
        let mut entries = vec![0u64; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut minor = Vec::with_capacity((n - 1) * (n - 1));
                for r in (0..n).filter(|&r| r != j) {
                    for c in (0..n).filter(|&c| c != i) {
                        minor.push(lift.get(r, c).clone());
                    }
                }
                let minor = ExactMatrix::from_fn(n - 1, |r, c| minor[r * (n - 1) + c].clone());
                let mut cof = minor.det();
                if (i + j) % 2 == 1 {
                    cof = -cof;
                }
                entries[i * n + j] = (cof * &det_inv).mod_floor(&m).to_u64().unwrap();
            }
        }
        Ok(Self { n, m: self.m, entries })
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::identity(self.n, self.m);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// Base-`m` little-endian packing of the row-major entries, when it fits in 128 bits.
    pub fn encode(&self) -> Result<ElementCode> {
        let mut code: u128 = 0;
        for &e in self.entries.iter().rev() {
            code = code
                .checked_mul(self.m as u128)
                .and_then(|c| c.checked_add(e as u128))
                .ok_or_else(|| {
                    Error::Overflow(format!(
                        "{}^{} does not fit a 128-bit element code",
                        self.m,
                        self.n * self.n
                    ))
                })?;
        }
        Ok(ElementCode(code))
    }

    pub fn decode(code: ElementCode, n: usize, m: u64) -> Self {
        let mut c = code.0;
        let mut entries = Vec::with_capacity(n * n);
        for _ in 0..n * n {
            entries.push((c % m as u128) as u64);
            c /= m as u128;
        }
        Self { n, m, entries }
    }
}

impl fmt::Debug for ModMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self, self.m)
    }
}

impl fmt::Display for ModMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.entries.chunks(self.n).enumerate() {
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

impl Serialize for ModMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<&[u64]> = self.entries.chunks(self.n).collect();
        rows.serialize(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ElementCode(pub u128);

/// Entrywise residue of an integer matrix.
pub fn reduce(mat: &ExactMatrix, m: u64) -> Result<ModMatrix> {
    if m < 2 {
        return Err(Error::param(format!("modulus must be at least 2, got {m}")));
    }
    let big_m = BigInt::from(m);
    let entries = mat
        .entries()
        .iter()
        .map(|e| e.mod_floor(&big_m).to_u64().expect("residue fits"))
        .collect();
    Ok(ModMatrix {
        n: mat.dim(),
        m,
        entries,
    })
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// `|SL_n(F_p)| = p^{n(n-1)/2} * prod_{i=2}^{n} (p^i - 1)`.
pub fn group_order_sl(n: usize, p: u64) -> Result<u128> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let overflow = || Error::Overflow(format!("|SL_{n}(F_{p})| exceeds 128 bits"));
    let p = p as u128;
    let mut order: u128 = 1;
    for _ in 0..n * (n.saturating_sub(1)) / 2 {
        order = order.checked_mul(p).ok_or_else(overflow)?;
    }
    for i in 2..=n as u32 {
        let pi = p.checked_pow(i).ok_or_else(overflow)?;
        order = order.checked_mul(pi - 1).ok_or_else(overflow)?;
    }
    Ok(order)
}

/// Multiply-accumulate kernel on `u32` residues used by the BFS hot loops.
#[derive(Debug, Clone, Copy)]
pub(crate) struct ModArith {
    m: u64,
    sr: StrengthReducedU64,
    /// A full row-by-column sum fits in `u64` before reduction.
    lazy: bool,
}

impl ModArith {
    pub(crate) fn new(n: usize, m: u64) -> Result<Self> {
        if m > u32::MAX as u64 {
            return Err(Error::param(format!(
                "modulus {m} exceeds the 32-bit residue range used for enumeration"
            )));
        }
        let max_sum = (n as u128) * ((m - 1) as u128).pow(2);
        Ok(Self {
            m,
            sr: StrengthReducedU64::new(m),
            lazy: max_sum <= u64::MAX as u128,
        })
    }

    #[inline]
    pub(crate) fn reduce(&self, x: u64) -> u32 {
        (x % self.sr) as u32
    }

    pub(crate) fn modulus(&self) -> u64 {
        self.m
    }

    #[inline]
    pub(crate) fn div_rem(&self, x: u64) -> (u64, u64) {
        StrengthReducedU64::div_rem(x, self.sr)
    }
}

/// Right-multiplication operand stored by column as sparse `(row, value)` pairs.
#[derive(Debug, Clone)]
pub(crate) struct SparseRight {
    n: usize,
    cols: Vec<Vec<(usize, u64)>>,
}

impl SparseRight {
    pub(crate) fn new(g: &ModMatrix) -> Self {
        let n = g.dim();
        let cols = (0..n)
            .map(|j| {
                (0..n)
                    .filter(|&k| g.get(k, j) != 0)
                    .map(|k| (k, g.get(k, j)))
                    .collect()
            })
            .collect();
        Self { n, cols }
    }

    /// `out = lhs * self` over `Z/mZ`.
    #[inline]
    pub(crate) fn apply(&self, ar: &ModArith, lhs: &[u32], out: &mut [u32]) {
        let n = self.n;
        for i in 0..n {
            let row = &lhs[i * n..(i + 1) * n];
            for (j, col) in self.cols.iter().enumerate() {
                let v = if ar.lazy {
                    let mut acc = 0u64;
                    for &(k, g) in col {
                        acc += row[k] as u64 * g;
                    }
                    ar.reduce(acc)
                } else {
                    let mut acc = 0u64;
                    for &(k, g) in col {
                        acc = ar.reduce(acc + ar.reduce(row[k] as u64 * g) as u64) as u64;
                    }
                    acc as u32
                };
                out[i * n + j] = v;
            }
        }
    }
}
