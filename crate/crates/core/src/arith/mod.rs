//! Exact integer and cyclotomic arithmetic.

mod cyclotomic;
mod primes;

pub use cyclotomic::{
    coefficients_i64, cyclotomic, divisors, euler_phi, phi_eval, phi_eval_big, phi_eval_signed,
    CyclotomicPolynomial,
};
pub use primes::{
    factorize, factorize_u64, factorize_with, is_prime, is_prime_u64, FactorConfig,
    FactoredInteger, MR_DETERMINISTIC_BOUND,
};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("factorization effort exceeded on cofactor {0}")]
    BoundExceeded(String),
    #[error("{0} is above the deterministic primality bound")]
    PrimalityBound(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

/// `gcd(d, ell, m)`, with the convention that characteristic zero (`ell = 0`) gives 1.
pub fn gcd3(d: u64, ell: u64, m: &BigUint) -> u64 {
    if ell == 0 {
        return 1;
    }
    let g = d.gcd(&ell);
    (m % g).to_u64().unwrap().gcd(&g)
}

/// Least `e >= 1` with `q^e = 1 (mod p)`.
pub fn mult_order(q: &BigUint, p: &BigUint) -> Result<u64, ArithError> {
    if !is_prime(p)? {
        return Err(ArithError::InvalidInput(format!("{p} is not prime")));
    }
    let qm = q % p;
    if qm.is_zero() {
        return Err(ArithError::InvalidInput(format!("{p} divides {q}")));
    }
    let pm1 = p - 1u32;
    let group = factorize(&pm1)?;
    // shrink p-1 prime by prime while the power stays 1
    let mut e = pm1;
    for (ell, k) in &group.factors {
        for _ in 0..*k {
            let cand = &e / ell;
            if qm.modpow(&cand, p).is_one() {
                e = cand;
            } else {
                break;
            }
        }
    }
    e.to_u64().ok_or_else(|| ArithError::BoundExceeded(e.to_string()))
}

pub fn mult_order_u64(q: u64, p: u64) -> Result<u64, ArithError> {
    mult_order(&BigUint::from(q), &BigUint::from(p))
}

/// Largest power of `p` dividing `n`.
pub fn p_part(n: &FactoredInteger, p: &BigUint) -> BigUint {
    p.pow(n.exponent_of(p))
}

/// Largest power of `p` dividing `n`, without a prior factorization.
pub fn p_part_of(n: &BigUint, p: &BigUint) -> BigUint {
    let mut out = BigUint::one();
    if n.is_zero() {
        return out;
    }
    let mut rest = n.clone();
    loop {
        let (quo, rem) = rest.div_rem(p);
        if !rem.is_zero() {
            return out;
        }
        rest = quo;
        out *= p;
    }
}

/// Returns the `p`-adic valuation of `n > 0`.
pub fn valuation(n: &BigUint, p: &BigUint) -> u32 {
    let mut k = 0;
    let mut rest = n.clone();
    while !rest.is_zero() && (&rest % p).is_zero() {
        rest /= p;
        k += 1;
    }
    k
}

/// A primitive prime divisor of `q^n - 1`, or `None` in the Zsigmondy exceptions.
pub fn zsigmondy(q: u64, n: u64) -> Result<Option<BigUint>, ArithError> {
    if q < 2 || n < 2 {
        return Err(ArithError::InvalidInput(format!("zsigmondy({q}, {n})")));
    }
    // every primitive prime divides Phi_n(q); the only non-primitive prime
    // that can divide it is the largest prime factor of n
    let value = phi_eval(n, q);
    let f = factorize(&value)?;
    let qb = BigUint::from(q);
    for p in f.primes() {
        if (&qb % p).is_zero() {
            continue;
        }
        if mult_order(&qb, p)? == n {
            return Ok(Some(p.clone()));
        }
    }
    Ok(None)
}

/// Solutions of `p^a = r^b + 1` in primes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CatalanCase {
    /// `p = 2`, `b = 1`, `r = 2^a - 1` is a Mersenne prime.
    MersenneCase,
    /// `r = 2`, `a = 1`, `p = 2^b + 1` is a Fermat prime.
    FermatCase,
    /// `9 = 8 + 1`.
    NineCase,
    NotASolution,
}

pub fn catalan_classify(p: u64, a: u32, r: u64, b: u32) -> CatalanCase {
    let lhs = BigUint::from(p).pow(a);
    let rhs = BigUint::from(r).pow(b) + 1u32;
    if lhs != rhs {
        return CatalanCase::NotASolution;
    }
    if p == 2 && b == 1 {
        CatalanCase::MersenneCase
    } else if r == 2 && a == 1 {
        CatalanCase::FermatCase
    } else if p == 3 && a == 2 {
        CatalanCase::NineCase
    } else {
        // Mihailescu rules this out; reaching here means the inputs were not primes
        CatalanCase::NotASolution
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimePowerVerdict {
    pub value: BigUint,
    /// `(t, k)` with `value = t^k` when it is a prime power.
    pub prime_power: Option<(BigUint, u32)>,
}

/// Whether `(q^n + 1)/(q + 1)` is a prime power for odd `n >= 3`; if it is, `n`
/// must be prime, and a composite `n` is reported as an inconsistency.
pub fn quotient_prime_power_check(q: u64, n: u64) -> Result<PrimePowerVerdict, ArithError> {
    if q < 2 || n < 3 || n % 2 == 0 {
        return Err(ArithError::InvalidInput(format!("need q >= 2 and odd n >= 3, got ({q}, {n})")));
    }
    let qb = BigUint::from(q);
    let value = (qb.pow(n as u32) + 1u32) / (&qb + 1u32);
    let prime_power = factorize(&value)?.as_prime_power();
    if prime_power.is_some() && !is_prime_u64(n) {
        return Err(ArithError::InternalInconsistency(format!(
            "(q^n+1)/(q+1) = {value} is a prime power for composite n = {n}, q = {q}"
        )));
    }
    Ok(PrimePowerVerdict { value, prime_power })
}

/// Lower bound `(p - 1) p^(k-1)` on the degree of the minimal polynomial of an
/// element of order `p^k` in the relevant Hall-Higman setting.
pub fn hall_higman_bound(p: u64, k: u32) -> BigUint {
    assert!(k >= 1);
    BigUint::from(p - 1) * BigUint::from(p).pow(k - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn gcd3_examples() {
        assert_eq!(gcd3(3, 0, &big(28)), 1);
        assert_eq!(gcd3(3, 3, &big(28)), 1);
        assert_eq!(gcd3(3, 3, &big(9)), 3);
        assert_eq!(gcd3(4, 2, &big(12)), 2);
    }

    #[test]
    fn mult_order_examples() {
        assert_eq!(mult_order_u64(2, 151).unwrap(), 15);
        assert_eq!(mult_order_u64(2, 7).unwrap(), 3);
        assert_eq!(mult_order_u64(7, 3).unwrap(), 1);
        assert!(matches!(mult_order_u64(9, 3), Err(ArithError::InvalidInput(_))));
    }

    #[test]
    fn p_part_examples() {
        let f = factorize_u64(25920).unwrap();
        assert_eq!(p_part(&f, &big(3)), big(81));
        assert_eq!(p_part(&factorize_u64(7).unwrap(), &big(5)), big(1));
        assert_eq!(p_part(&factorize_u64(32).unwrap(), &big(2)), big(32));
        assert_eq!(p_part_of(&big(25920), &big(2)), big(64));
    }

    #[test]
    fn zsigmondy_examples() {
        assert_eq!(zsigmondy(2, 6).unwrap(), None);
        assert_eq!(zsigmondy(2, 9).unwrap(), Some(big(73)));
        assert_eq!(zsigmondy(3, 2).unwrap(), None);
        assert_eq!(zsigmondy(2, 15).unwrap(), Some(big(151)));
    }

    #[test]
    fn catalan_examples() {
        assert_eq!(catalan_classify(2, 2, 3, 1), CatalanCase::MersenneCase);
        assert_eq!(catalan_classify(5, 1, 2, 2), CatalanCase::FermatCase);
        assert_eq!(catalan_classify(3, 2, 2, 3), CatalanCase::NineCase);
        assert_eq!(catalan_classify(5, 1, 3, 1), CatalanCase::NotASolution);
    }

    #[test]
    fn quotient_prime_power_examples() {
        let v = quotient_prime_power_check(2, 3).unwrap();
        assert_eq!(v.value, big(3));
        assert_eq!(v.prime_power, Some((big(3), 1)));
        let v = quotient_prime_power_check(2, 9).unwrap();
        assert_eq!(v.value, big(171));
        assert_eq!(v.prime_power, None);
        let v = quotient_prime_power_check(3, 3).unwrap();
        assert_eq!(v.prime_power, Some((big(7), 1)));
    }

    #[test]
    fn hall_higman_examples() {
        assert_eq!(hall_higman_bound(3, 1), big(2));
        assert_eq!(hall_higman_bound(5, 2), big(20));
        assert_eq!(hall_higman_bound(7, 1), big(6));
    }
}
