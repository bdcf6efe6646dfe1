use std::sync::{Arc, OnceLock, RwLock};
use std::collections::HashMap;

use super::FfError;

/// Largest field order handled.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// Tables for addition and multiplication are precomputed up to this order.
const TABLE_ORDER: u32 = 256;

/// `GF(r^f)` with elements encoded as integers `sum c_i r^i`, where `c_i` is the
/// coefficient of `x^i` modulo the defining polynomial. The modulus is the least
/// primitive polynomial in lexicographic order, so `x` generates the unit group.
#[derive(Debug)]
pub struct FiniteField {
    r: u32,
    f: u32,
    q: u32,
    /// Monic modulus, ascending, length `f + 1`.
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    add_tab: Option<Vec<u32>>,
    mul_tab: Option<Vec<u32>>,
}

fn field_cache() -> &'static RwLock<HashMap<u32, Arc<FiniteField>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<FiniteField>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

impl FiniteField {
    /// Shared instance of `GF(q)`.
    pub fn get(q: u64) -> Result<Arc<FiniteField>, FfError> {
        if q > MAX_FIELD_ORDER {
            return Err(FfError::InvalidField(format!("q = {q} exceeds 2^20")));
        }
        let q32 = q as u32;
        if let Some(k) = field_cache().read().unwrap().get(&q32) {
            return Ok(k.clone());
        }
        let k = Arc::new(Self::build(q)?);
        field_cache().write().unwrap().insert(q32, k.clone());
        Ok(k)
    }

    fn build(q: u64) -> Result<FiniteField, FfError> {
        let (r, f) = crate::lie::prime_power(q)
            .ok_or_else(|| FfError::InvalidField(format!("{q} is not a prime power")))?;
        let (r, q) = (r as u32, q as u32);
        // try monic polynomials of degree f with nonzero constant term in lexicographic order
        let mut tail = vec![0u32; f as usize];
        loop {
            if tail[0] != 0 {
                let mut modulus = tail.clone();
                modulus.push(1);
                if let Some((exp, log)) = Self::power_tables(r, f, q, &modulus) {
                    let mut k = FiniteField { r, f, q, modulus, exp, log, add_tab: None, mul_tab: None };
                    if q <= TABLE_ORDER {
                        k.build_tables();
                    }
                    return Ok(k);
                }
            }
            // increment the coefficient vector, least significant first
            let mut i = 0;
            loop {
                if i == tail.len() {
                    return Err(FfError::InvalidField(format!("no primitive polynomial for GF({q})")));
                }
                tail[i] += 1;
                if tail[i] < r {
                    break;
                }
                tail[i] = 0;
                i += 1;
            }
        }
    }

    /// Successive powers of `x`; `None` unless `x` has order `q - 1`.
    fn power_tables(r: u32, f: u32, q: u32, modulus: &[u32]) -> Option<(Vec<u32>, Vec<u32>)> {
        let f = f as usize;
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![u32::MAX; q as usize];
        let mut cur = vec![0u32; f];
        cur[0] = 1;
        for k in 0..q - 1 {
            let code = encode(&cur, r);
            if log[code as usize] != u32::MAX {
                return None;
            }
            log[code as usize] = k;
            exp.push(code);
            // multiply by x, reduce by the modulus
            let top = cur[f - 1];
            for i in (1..f).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            for i in 0..f {
                let sub = (top as u64 * modulus[i] as u64 % r as u64) as u32;
                cur[i] = (cur[i] + r - sub) % r;
            }
        }
        (encode(&cur, r) == 1).then_some((exp, log))
    }

    fn build_tables(&mut self) {
        let q = self.q as usize;
        let mut add = vec![0u32; q * q];
        let mut mul = vec![0u32; q * q];
        for a in 0..q as u32 {
            for b in 0..q as u32 {
                add[a as usize * q + b as usize] = self.add_slow(a, b);
                mul[a as usize * q + b as usize] = self.mul_slow(a, b);
            }
        }
        self.add_tab = Some(add);
        self.mul_tab = Some(mul);
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.r
    }

    pub fn degree(&self) -> u32 {
        self.f
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The primitive element `x`.
    pub fn generator(&self) -> u32 {
        self.exp[1 % self.exp.len()]
    }

    /// `{1, x, ..., x^{f-1}}`, a basis over the prime field.
    pub fn prime_field_basis(&self) -> Vec<u32> {
        (0..self.f).map(|i| self.r.pow(i)).collect()
    }

    fn add_slow(&self, a: u32, b: u32) -> u32 {
        if self.r == 2 {
            return a ^ b;
        }
        let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
        for _ in 0..self.f {
            out += ((a % self.r + b % self.r) % self.r) * place;
            a /= self.r;
            b /= self.r;
            place *= self.r;
        }
        out
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.q as u64 - 1;
        self.exp[((self.log[a as usize] as u64 + self.log[b as usize] as u64) % n) as usize]
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        match &self.add_tab {
            Some(t) => t[(a * self.q + b) as usize],
            None => self.add_slow(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.mul_tab {
            Some(t) => t[(a * self.q + b) as usize],
            None => self.mul_slow(a, b),
        }
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.r == 2 {
            return a;
        }
        let (mut a, mut out, mut place) = (a, 0, 1);
        for _ in 0..self.f {
            out += ((self.r - a % self.r) % self.r) * place;
            a /= self.r;
            place *= self.r;
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let n = self.q - 1;
        Some(self.exp[((n - self.log[a as usize]) % n) as usize])
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = self.q as u64 - 1;
        self.exp[((self.log[a as usize] as u64 * (e % n)) % n) as usize]
    }

    /// Discrete logarithm to base `x`.
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    pub fn from_int(&self, v: i64) -> u32 {
        v.rem_euclid(self.r as i64) as u32
    }
}

fn encode(coeffs: &[u32], r: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * r + c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn small_fields_satisfy_ring_axioms() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 81, 243, 1024, 3125] {
            let k = FiniteField::get(q).unwrap();
            assert_eq!(k.modulus().len() as u32, k.degree() + 1);
            for _ in 0..200 {
                let q = k.order();
                let (a, b, c) = (rng.gen_range(0..q), rng.gen_range(0..q), rng.gen_range(0..q));
                assert_eq!(k.add(a, k.add(b, c)), k.add(k.add(a, b), c));
                assert_eq!(k.mul(a, k.mul(b, c)), k.mul(k.mul(a, b), c));
                assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
                assert_eq!(k.add(a, k.neg(a)), 0);
                if a != 0 {
                    assert_eq!(k.mul(a, k.inv(a).unwrap()), 1);
                }
            }
        }
    }

    #[test]
    fn frobenius_is_additive() {
        let k = FiniteField::get(9).unwrap();
        for a in 0..9 {
            for b in 0..9 {
                assert_eq!(k.pow(k.add(a, b), 3), k.add(k.pow(a, 3), k.pow(b, 3)));
            }
        }
    }

    #[test]
    fn prime_field_encoding() {
        let k = FiniteField::get(7).unwrap();
        assert_eq!(k.mul(3, 5), 1);
        assert_eq!(k.add(3, 5), 1);
        assert_eq!(k.from_int(-1), 6);
        assert!(FiniteField::get(6).is_err());
        assert!(FiniteField::get(1 << 21).is_err());
    }
}
