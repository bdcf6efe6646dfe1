//! Exact cyclotomic polynomials with a process-wide cache.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// `Phi_n` with integer coefficients in ascending degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicPolynomial {
    pub index: u64,
    pub coefficients: Vec<BigInt>,
}

impl CyclotomicPolynomial {
    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coefficients
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Division by a monic polynomial; panics on a nonzero remainder since callers
/// only divide `x^n - 1` by a product of its own factors.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    debug_assert!(den[dd].is_one());
    let qlen = rem.len() - dd;
    let mut quo = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= &c * d;
        }
        quo[k] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quo
}

fn cache() -> &'static RwLock<HashMap<u64, Arc<CyclotomicPolynomial>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<CyclotomicPolynomial>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `Phi_n`, computed as `(x^n - 1) / prod_{d | n, d < n} Phi_d`.
pub fn cyclotomic(n: u64) -> Arc<CyclotomicPolynomial> {
    assert!(n >= 1, "cyclotomic index must be positive");
    if let Some(p) = cache().read().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    let mut den = vec![BigInt::one()];
    for d in divisors(n) {
        if d < n {
            den = poly_mul(&den, &cyclotomic(d).coefficients);
        }
    }
    let poly = Arc::new(CyclotomicPolynomial { index: n, coefficients: poly_div_exact(&num, &den) });
    cache().write().unwrap().entry(n).or_insert(poly).clone()
}

/// `Phi_n(q)` as an exact positive integer.
pub fn phi_eval(n: u64, q: u64) -> BigUint {
    phi_eval_big(n, &BigUint::from(q))
}

pub fn phi_eval_big(n: u64, q: &BigUint) -> BigUint {
    let v = cyclotomic(n).eval(&BigInt::from(q.clone()));
    assert!(!v.is_negative(), "Phi_n(q) negative for q >= 2");
    v.to_biguint().unwrap()
}

/// `Phi_n(q)` for a possibly negative integer point.
pub fn phi_eval_signed(n: u64, q: i64) -> BigInt {
    cyclotomic(n).eval(&BigInt::from(q))
}

/// Small helper for coefficients that fit in `i64`.
pub fn coefficients_i64(n: u64) -> Option<Vec<i64>> {
    cyclotomic(n).coefficients.iter().map(|c| c.to_i64()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_indices() {
        assert_eq!(coefficients_i64(1).unwrap(), vec![-1, 1]);
        assert_eq!(coefficients_i64(2).unwrap(), vec![1, 1]);
        assert_eq!(coefficients_i64(6).unwrap(), vec![1, -1, 1]);
        assert_eq!(coefficients_i64(12).unwrap(), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn first_non_unit_coefficient() {
        // Phi_105 is the smallest with a coefficient of absolute value 2
        let c = coefficients_i64(105).unwrap();
        assert_eq!(c.iter().map(|x| x.abs()).max(), Some(2));
        assert_eq!(c[7], -2);
    }

    #[test]
    fn evaluations() {
        assert_eq!(phi_eval(15, 2), BigUint::from(151u32));
        assert_eq!(phi_eval(20, 2), BigUint::from(205u32));
        assert_eq!(phi_eval(30, 2), BigUint::from(331u32));
        assert_eq!(phi_eval(1, 7), BigUint::from(6u32));
        assert_eq!(phi_eval(9, 2), BigUint::from(73u32));
    }

    #[test]
    fn degree_is_totient() {
        for n in 1..=60 {
            assert_eq!(cyclotomic(n).degree() as u64, euler_phi(n));
        }
    }

    #[test]
    fn divisor_listing() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }
}
