//! Deterministic primality and desk-scale factorization.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::ArithError;

/// Miller-Rabin with the first 13 primes as witnesses is exact below this value.
pub const MR_DETERMINISTIC_BOUND: &str = "3317044064679887385961981";

const WITNESSES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Effort limits for [`factorize_with`].
#[derive(Debug, Clone)]
pub struct FactorConfig {
    /// Largest input accepted.
    pub max_input: BigUint,
    /// Trial division runs over all primes up to this bound.
    pub trial_bound: u64,
    /// Iteration budget for each rho attempt.
    pub rho_iterations: u64,
    /// Number of rho restarts (different polynomial constants).
    pub rho_attempts: u64,
}

impl Default for FactorConfig {
    fn default() -> Self {
        FactorConfig {
            max_input: BigUint::from(10u32).pow(40),
            trial_bound: 1_000_000,
            rho_iterations: 1 << 24,
            rho_attempts: 8,
        }
    }
}

/// A positive integer together with its complete prime factorization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactoredInteger {
    pub value: BigUint,
    pub factors: BTreeMap<BigUint, u32>,
}

impl FactoredInteger {
    pub fn one() -> Self {
        FactoredInteger { value: BigUint::one(), factors: BTreeMap::new() }
    }

    /// Multiplies the listed prime powers back together.
    pub fn product(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e))
    }

    pub fn exponent_of(&self, p: &BigUint) -> u32 {
        self.factors.get(p).copied().unwrap_or(0)
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.factors.keys()
    }

    /// `Some((p, k))` when the value is `p^k` with `k >= 1`.
    pub fn as_prime_power(&self) -> Option<(BigUint, u32)> {
        if self.factors.len() == 1 {
            let (p, e) = self.factors.iter().next().unwrap();
            Some((p.clone(), *e))
        } else {
            None
        }
    }
}

fn small_primes(bound: u64) -> Vec<u64> {
    let bound = bound as usize;
    let mut sieve = vec![true; bound + 1];
    let mut out = Vec::new();
    for i in 2..=bound {
        if sieve[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= bound {
                sieve[j] = false;
                j += i;
            }
        }
    }
    out
}

fn mulmod64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod64(r, b, m);
        }
        b = mulmod64(b, b, m);
        e >>= 1;
    }
    r
}

/// Exact primality for `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES[..12] {
        let mut x = powmod64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Deterministic Miller-Rabin; inputs at or above [`MR_DETERMINISTIC_BOUND`] are rejected.
pub fn is_prime(n: &BigUint) -> Result<bool, ArithError> {
    if let Some(small) = n.to_u64() {
        return Ok(is_prime_u64(small));
    }
    let bound: BigUint = MR_DETERMINISTIC_BOUND.parse().unwrap();
    if *n >= bound {
        return Err(ArithError::PrimalityBound(n.to_string()));
    }
    for &p in &WITNESSES {
        if (n % p).is_zero() {
            return Ok(false);
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for &a in &WITNESSES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

fn rho_u64(n: u64, c: u64, budget: u64) -> Option<u64> {
    // Brent's cycle detection with batched gcds.
    let f = |x: u64| (mulmod64(x, x, n) + c) % n;
    let mut y = 2u64;
    let mut r = 1u64;
    let mut q = 1u64;
    let mut g = 1u64;
    let mut x = y;
    let mut ys = y;
    let mut spent = 0u64;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            let lim = 128.min(r - k);
            for _ in 0..lim {
                y = f(y);
                q = mulmod64(q, x.abs_diff(y), n);
            }
            g = q.gcd(&n);
            k += lim;
            spent += lim;
        }
        r *= 2;
        if spent > budget {
            return None;
        }
    }
    if g == n {
        loop {
            ys = f(ys);
            g = x.abs_diff(ys).gcd(&n);
            if g > 1 {
                break;
            }
        }
    }
    if g == n {
        None
    } else {
        Some(g)
    }
}

fn rho_big(n: &BigUint, c: u64, budget: u64) -> Option<BigUint> {
    let c = BigUint::from(c);
    let f = |x: &BigUint| (x * x + &c) % n;
    let mut y = BigUint::from(2u32);
    let mut r = 1u64;
    let mut q = BigUint::one();
    let mut g = BigUint::one();
    let mut x = y.clone();
    let mut ys = y.clone();
    let mut spent = 0u64;
    let diff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            let lim = 128.min(r - k);
            for _ in 0..lim {
                y = f(&y);
                q = (q * diff(&x, &y)) % n;
            }
            g = q.gcd(n);
            k += lim;
            spent += lim;
        }
        r *= 2;
        if spent > budget {
            return None;
        }
    }
    if &g == n {
        loop {
            ys = f(&ys);
            g = diff(&x, &ys).gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    if &g == n {
        None
    } else {
        Some(g)
    }
}

fn find_factor(n: &BigUint, cfg: &FactorConfig) -> Option<BigUint> {
    for c in 1..=cfg.rho_attempts {
        let found = match n.to_u64() {
            Some(small) => rho_u64(small, c, cfg.rho_iterations).map(BigUint::from),
            None => rho_big(n, c, cfg.rho_iterations),
        };
        if found.is_some() {
            return found;
        }
    }
    None
}

fn split_into(
    n: BigUint,
    cfg: &FactorConfig,
    out: &mut BTreeMap<BigUint, u32>,
) -> Result<(), ArithError> {
    if n.is_one() {
        return Ok(());
    }
    if is_prime(&n)? {
        *out.entry(n).or_insert(0) += 1;
        return Ok(());
    }
    // perfect powers defeat rho's gcd trick less often than one expects, but a
    // square root check is cheap
    let root = n.sqrt();
    if &root * &root == n {
        let mut sub = BTreeMap::new();
        split_into(root, cfg, &mut sub)?;
        for (p, e) in sub {
            *out.entry(p).or_insert(0) += 2 * e;
        }
        return Ok(());
    }
    let d = find_factor(&n, cfg).ok_or_else(|| ArithError::BoundExceeded(n.to_string()))?;
    let other = &n / &d;
    split_into(d, cfg, out)?;
    split_into(other, cfg, out)
}

/// Complete factorization with the default effort budget.
pub fn factorize(n: &BigUint) -> Result<FactoredInteger, ArithError> {
    factorize_with(n, &FactorConfig::default())
}

pub fn factorize_u64(n: u64) -> Result<FactoredInteger, ArithError> {
    factorize(&BigUint::from(n))
}

/// Trial division up to `cfg.trial_bound`, then Pollard-Brent rho on what remains.
pub fn factorize_with(n: &BigUint, cfg: &FactorConfig) -> Result<FactoredInteger, ArithError> {
    if n.is_zero() {
        return Err(ArithError::InvalidInput("cannot factor 0".into()));
    }
    if *n > cfg.max_input {
        return Err(ArithError::BoundExceeded(n.to_string()));
    }
    let mut factors = BTreeMap::new();
    let mut rest = n.clone();
    for &p in trial_primes(cfg.trial_bound).iter() {
        if rest.is_one() {
            break;
        }
        if let Some(small) = rest.to_u64() {
            if p.saturating_mul(p) > small {
                break;
            }
            if small % p != 0 {
                continue;
            }
        } else if !(&rest % p).is_zero() {
            continue;
        }
        let mut e = 0;
        while (&rest % p).is_zero() {
            rest /= p;
            e += 1;
        }
        factors.insert(BigUint::from(p), e);
    }
    split_into(rest, cfg, &mut factors)?;
    Ok(FactoredInteger { value: n.clone(), factors })
}

fn trial_primes(bound: u64) -> std::sync::Arc<Vec<u64>> {
    use std::sync::{Arc, Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<Option<(u64, Arc<Vec<u64>>)>>> = OnceLock::new();
    let cell = CACHE.get_or_init(|| Mutex::new(None));
    let mut guard = cell.lock().unwrap();
    if let Some((b, primes)) = guard.as_ref() {
        if *b == bound {
            return primes.clone();
        }
    }
    let primes = Arc::new(small_primes(bound));
    *guard = Some((bound, primes.clone()));
    primes
}
