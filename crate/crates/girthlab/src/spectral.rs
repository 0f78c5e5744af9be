//! Gram-matrix norms, the resulting girth lower bound, and a power-iteration
//! estimate of the second adjacency eigenvalue.
//!
//! For `p > 2` any nontrivial relator `W` of length `2c` gives a word with
//! `||W|| <= γ^c` and entries divisible by `p`, so girth is at least
//! `2 log_γ(p/2) - 1` with `γ = max(||X||, ||Y||)`.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cayley::{enumerate, GeneratorSet};
use crate::error::{Error, Result};
use crate::exactmat::{magic_lower, magic_upper, power_closed_form, ExactMatrix};
use crate::modmat::ModMatrix;
use crate::params::Family;

pub const GRAM_REL_TOL: f64 = 1e-9;
pub const MAX_GRAM_DIM: usize = 8;
pub const DEFAULT_ORDER_LIMIT: u64 = 2_000_000;
pub const DEFAULT_SEED: u64 = 0x5EED;
pub const EIGEN_ABS_TOL: f64 = 1e-6;
const MAX_ITERATIONS: u32 = 200_000;

fn gram(m: &ExactMatrix) -> ExactMatrix {
    m * &m.transpose()
}

fn check_dim(m: &ExactMatrix) -> Result<()> {
    if m.dim() > MAX_GRAM_DIM {
        return Err(Error::UnsupportedShape(format!(
            "Gram computations support n <= {MAX_GRAM_DIM}, got {}",
            m.dim()
        )));
    }
    Ok(())
}

/// Top eigenvalue of `M Mᵀ` by power iteration, to relative tolerance `1e-9`.
pub fn gram_lambda_max(m: &ExactMatrix) -> Result<f64> {
    check_dim(m)?;
    let n = m.dim();
    let g = gram(m).to_f64();
    let mut v = vec![1.0f64; n];
    let mut rho = 0.0f64;
    for _ in 0..MAX_ITERATIONS {
        let w: Vec<f64> = (0..n)
            .map(|i| (0..n).map(|j| g[i * n + j] * v[j]).sum())
            .collect();
        let vv: f64 = v.iter().map(|x| x * x).sum();
        let next = v.iter().zip(&w).map(|(a, b)| a * b).sum::<f64>() / vv;
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        v = w.iter().map(|x| x / norm).collect();
        if (next - rho).abs() <= 1e-3 * GRAM_REL_TOL * next.abs() {
            return Ok(next);
        }
        rho = next;
    }
    Ok(rho)
}

/// Exact coefficients of `det(M Mᵀ - λI)`, highest power of `λ` first.
pub fn gram_char_poly(m: &ExactMatrix) -> Result<Vec<BigInt>> {
    check_dim(m)?;
    let g = gram(m);
    let n = g.dim();
    // Faddeev-LeVerrier for det(λI - G) = Σ c_k λ^k, c_n = 1
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    let mut mk = ExactMatrix::zero(n);
    for k in 1..=n {
        let shift = c[n - k + 1].clone();
        let prod = &g * &mk;
        mk = ExactMatrix::from_fn(n, |i, j| {
            let mut v = prod.get(i, j).clone();
            if i == j {
                v += &shift;
            }
            v
        });
        let gm = &g * &mk;
        let tr: BigInt = (0..n).map(|i| gm.get(i, i).clone()).sum();
        c[n - k] = -tr / BigInt::from(k);
    }
    let sign = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    Ok(c.into_iter().rev().map(|x| x * &sign).collect())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GirthBound {
    pub lambda_max: f64,
    pub beta_max: f64,
    pub gamma: f64,
    pub p: u64,
    pub bound_raw: f64,
    pub bound_reported: u32,
}

/// `2 log_γ(p/2) - 1` and its consumable form `max(3, ceil(raw))`.
pub fn bound_from_gamma(gamma: f64, p: u64) -> Result<(f64, u32)> {
    if !(gamma > 1.0) {
        return Err(Error::Degenerate(format!("γ = {gamma} must exceed 1")));
    }
    if p < 3 {
        return Err(Error::param(format!("p must be at least 3, got {p}")));
    }
    let raw = 2.0 * (p as f64 / 2.0).ln() / gamma.ln() - 1.0;
    Ok((raw, raw.ceil().max(3.0) as u32))
}

/// Spectral girth lower bound of `Cay(<A^l, B^l> mod p)`.
pub fn girth_lower_bound(family: &Family, p: u64) -> Result<GirthBound> {
    let l = i64::try_from(family.l).map_err(|_| Error::Overflow("power l".into()))?;
    let x = power_closed_form(&magic_upper(family.n, family.a), l)?;
    let y = power_closed_form(&magic_lower(family.n, family.b), l)?;
    let lambda_max = gram_lambda_max(&x)?;
    let beta_max = gram_lambda_max(&y)?;
    let gamma = lambda_max.max(beta_max).sqrt();
    let (bound_raw, bound_reported) = bound_from_gamma(gamma, p)?;
    Ok(GirthBound {
        lambda_max,
        beta_max,
        gamma,
        p,
        bound_raw,
        bound_reported,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralGapReport {
    pub order: u64,
    pub degree: usize,
    pub top_eigenvalue: f64,
    pub second_eigenvalue: f64,
    pub normalized_gap: f64,
    pub iterations: u32,
    /// `||Av - λv||` for the final unit vector.
    pub residual: f64,
    pub converged: bool,
    pub seed: u64,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn center_and_normalise(v: &mut [f64]) {
    let mean = v.iter().sum::<f64>() / v.len() as f64;
    v.iter_mut().for_each(|x| *x -= mean);
    let norm = dot(v, v).sqrt();
    if norm > 0.0 {
        v.iter_mut().for_each(|x| *x /= norm);
    }
}

/// Second-largest adjacency eigenvalue of the simple Cayley graph generated by
/// `gens`, by power iteration on `A + kI` orthogonal to the constants.
pub fn second_eigenvalue(gens: &[ModMatrix], order_limit: u64, seed: u64) -> Result<SpectralGapReport> {
    let set = GeneratorSet::new(gens)?;
    let en = enumerate(&set, order_limit)?;
    let order = en.codes.len();
    let k = en.degree;
    if order < 2 {
        return Err(Error::Degenerate("the generated group is trivial".into()));
    }
    let apply = |v: &[f64], out: &mut [f64]| {
        out.par_iter_mut().enumerate().for_each(|(u, o)| {
            *o = en.neighbors[u * k..(u + 1) * k]
                .iter()
                .map(|&w| v[w as usize])
                .sum();
        });
    };
    let shift = k as f64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut v: Vec<f64> = (0..order).map(|_| rng.gen_range(-1.0..1.0)).collect();
    center_and_normalise(&mut v);
    let mut av = vec![0.0; order];
    let mut rho = f64::NEG_INFINITY;
    let mut iterations = 0;
    let mut converged = false;
    while iterations < MAX_ITERATIONS {
        iterations += 1;
        apply(&v, &mut av);
        let next = dot(&v, &av);
        let delta = next - rho;
        rho = next;
        // step with the shifted operator so the iteration favours the top of
        // the deflated spectrum rather than its largest magnitude
        av.iter_mut().zip(&v).for_each(|(a, x)| *a += shift * x);
        center_and_normalise(&mut av);
        std::mem::swap(&mut v, &mut av);
        if delta.abs() < EIGEN_ABS_TOL * 1e-4 {
            converged = true;
            break;
        }
    }
    apply(&v, &mut av);
    let second = dot(&v, &av);
    let residual = av
        .iter()
        .zip(&v)
        .map(|(a, x)| (a - second * x).powi(2))
        .sum::<f64>()
        .sqrt();
    Ok(SpectralGapReport {
        order: order as u64,
        degree: k,
        top_eigenvalue: k as f64,
        second_eigenvalue: second,
        normalized_gap: (k as f64 - second) / k as f64,
        iterations,
        residual,
        converged,
        seed,
    })
}

/// Largest real root of an integer polynomial (highest degree first) by
/// bisection above all other roots; used to cross-check [`gram_lambda_max`].
pub fn largest_real_root(coeffs: &[BigInt]) -> Option<f64> {
    let c: Vec<f64> = coeffs.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect();
    let lead = *c.first()?;
    if lead == 0.0 {
        return None;
    }
    let eval = |x: f64| c.iter().fold(0.0, |acc, &a| acc * x + a);
    // Cauchy bound on root magnitude
    let mut hi = 1.0 + c[1..].iter().map(|a| (a / lead).abs()).fold(0.0, f64::max);
    let sign_hi = eval(hi).signum();
    // walk down from the bound until the sign flips
    let mut lo = hi;
    let step = hi / 4096.0;
    while lo > -hi {
        lo -= step;
        if eval(lo).signum() != sign_hi {
            break;
        }
    }
    if eval(lo).signum() == sign_hi {
        return None;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if eval(mid).signum() == sign_hi {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn a_pow(n: usize, a: i64, l: i64) -> ExactMatrix {
        power_closed_form(&magic_upper(n, a), l).unwrap()
    }

    fn b_pow(n: usize, b: i64, l: i64) -> ExactMatrix {
        power_closed_form(&magic_lower(n, b), l).unwrap()
    }

    #[test]
    fn lambda_max_examples() {
        assert!((gram_lambda_max(&ExactMatrix::identity(4)).unwrap() - 1.0).abs() < 1e-12);
        let d = ExactMatrix::from_rows(&[[2, 0], [0, 1]]);
        assert!((gram_lambda_max(&d).unwrap() - 4.0).abs() < 1e-9);
        let l = gram_lambda_max(&a_pow(3, 2, 4)).unwrap();
        assert!((l - 704.54).abs() < 0.01, "{l}");
        let b = gram_lambda_max(&b_pow(3, 4, 4)).unwrap();
        assert!((b - 9728.31).abs() < 0.01, "{b}");
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(gram_char_poly(&a_pow(3, 2, 4)).unwrap(), ints(&[-1, 707, -1731, 1]));
        assert_eq!(gram_char_poly(&b_pow(3, 4, 4)).unwrap(), ints(&[-1, 9731, -26115, 1]));
        assert_eq!(gram_char_poly(&a_pow(3, 1, 4)).unwrap(), ints(&[-1, 71, -135, 1]));
        assert_eq!(
            gram_char_poly(&a_pow(4, 4, 10)).unwrap(),
            ints(&[1, -60024004, 45502704006, -199800004, 1])
        );
        assert_eq!(
            gram_char_poly(&b_pow(4, 7, 10)).unwrap(),
            ints(&[1, -1703884354, 3949339922331, -5708752354, 1])
        );
        assert!(gram_char_poly(&ExactMatrix::identity(9)).is_err());
    }

    /// Closed form for n = 3, l = 1: `-λ³ + (36a⁴+32a²+3)λ² - (100a⁴+32a²+3)λ + 1`.
    #[test]
    fn char_poly_matches_closed_form_in_a() {
        for a in 1..=6i64 {
            let (a2, a4) = (a * a, a * a * a * a);
            let want = ints(&[-1, 36 * a4 + 32 * a2 + 3, -(100 * a4 + 32 * a2 + 3), 1]);
            assert_eq!(gram_char_poly(&a_pow(3, a, 4)).unwrap(), want, "a={a}");
        }
    }

    #[test]
    fn power_iteration_matches_char_poly_root() {
        for m in [a_pow(3, 2, 4), b_pow(3, 4, 4), a_pow(4, 4, 10), b_pow(4, 7, 10), a_pow(3, 3, 5)] {
            let l = gram_lambda_max(&m).unwrap();
            let r = largest_real_root(&gram_char_poly(&m).unwrap()).unwrap();
            assert!(((l - r) / r).abs() < 1e-6, "{l} vs {r}");
            let lt = gram_lambda_max(&m.transpose()).unwrap();
            assert!(((l - lt) / l).abs() < 1e-9);
        }
    }

    #[test]
    fn bound_examples() {
        let p = 2 * 99u64.pow(3);
        let (raw, rep) = bound_from_gamma(99.0, p).unwrap();
        assert!((raw - 5.0).abs() < 1e-9);
        assert_eq!(rep, 5);
        let g = girth_lower_bound(&Family::new(3, 4, 2, 4), 101).unwrap();
        assert!((g.lambda_max - 704.54).abs() < 0.01);
        assert!((g.beta_max - 9728.31).abs() < 0.01);
        assert!(g.gamma < 99.0);
        assert!((g.bound_raw - 0.7084).abs() < 1e-3, "{}", g.bound_raw);
        assert_eq!(g.bound_reported, 3);
        let (raw99, _) = bound_from_gamma(99.0, 101).unwrap();
        assert!((raw99 - 0.707).abs() < 1e-3);
        let g = girth_lower_bound(&Family::new(4, 10, 4, 7), 1_000_003).unwrap();
        assert!(g.gamma < 58376.0);
        assert!(g.lambda_max.sqrt() < 10957.0);
        assert!(bound_from_gamma(1.0, 101).is_err());
        assert!(bound_from_gamma(2.0, 2).is_err());
    }

    #[test]
    fn swapping_a_and_b_swaps_lambda_and_beta() {
        let g1 = girth_lower_bound(&Family::new(3, 4, 2, 4), 101).unwrap();
        let g2 = girth_lower_bound(&Family::new(3, 4, 4, 2), 101).unwrap();
        assert!((g1.lambda_max - g2.beta_max).abs() < 1e-6);
        assert!((g1.beta_max - g2.lambda_max).abs() < 1e-6);
        assert!((g1.gamma - g2.gamma).abs() < 1e-9);
    }

    #[test]
    fn six_cycle_and_complete_graph() {
        let s3 = vec![
            ModMatrix::from_rows(&[[1, 1], [0, 1]], 2),
            ModMatrix::from_rows(&[[1, 0], [1, 1]], 2),
        ];
        let r = second_eigenvalue(&s3, 100, DEFAULT_SEED).unwrap();
        assert_eq!((r.order, r.degree), (6, 2));
        assert!((r.second_eigenvalue - 1.0).abs() < 1e-6, "{r:?}");

        let e = |rows: [[i64; 3]; 3]| ModMatrix::from_rows(&rows, 3);
        let k4 = vec![
            e([[2, 0, 0], [0, 2, 0], [0, 0, 1]]),
            e([[2, 0, 0], [0, 1, 0], [0, 0, 2]]),
            e([[1, 0, 0], [0, 2, 0], [0, 0, 2]]),
        ];
        let r = second_eigenvalue(&k4, 100, DEFAULT_SEED).unwrap();
        assert!((r.second_eigenvalue + 1.0).abs() < 1e-6, "{r:?}");
    }

    #[test]
    fn sl2_gap_is_positive_and_seeded() {
        let g = crate::cayley::family_generators(&Family::new(2, 1, 2, 2), 5).unwrap();
        let r = second_eigenvalue(&g, DEFAULT_ORDER_LIMIT, 7).unwrap();
        assert_eq!(r.order, 120);
        assert!(r.second_eigenvalue < 4.0 - 1e-3);
        assert!(r.second_eigenvalue.abs() <= 4.0);
        assert!(r.converged);
        assert_eq!(r, second_eigenvalue(&g, DEFAULT_ORDER_LIMIT, 7).unwrap());
        assert!(matches!(
            second_eigenvalue(&g, 50, 7),
            Err(Error::OrderLimit { limit: 50, .. })
        ));
    }
}
