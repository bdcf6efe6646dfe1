//! Linear algebra and polynomial root finding over a prime field `F_P`, `P < 2^62`.

use rand::Rng;

#[derive(Debug, Clone, Copy)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut out = 1 % self.p;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                out = self.mul(out, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        out
    }

    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }

    pub fn from_u64(self, a: u64) -> u64 {
        a % self.p
    }

    // polynomials: ascending coefficients, no trailing zeros

    fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    fn poly_mul(self, a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        Self::trim(&mut out);
        out
    }

    /// `(quotient, remainder)`.
    fn poly_divrem(self, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
        let mut rem = a.to_vec();
        Self::trim(&mut rem);
        if rem.len() < b.len() {
            return (Vec::new(), rem);
        }
        let lead_inv = self.inv(*b.last().expect("nonzero divisor"));
        let mut quo = vec![0; rem.len() - b.len() + 1];
        for k in (0..quo.len()).rev() {
            let c = self.mul(rem[k + b.len() - 1], lead_inv);
            quo[k] = c;
            if c == 0 {
                continue;
            }
            for (i, &y) in b.iter().enumerate() {
                rem[k + i] = self.sub(rem[k + i], self.mul(c, y));
            }
        }
        rem.truncate(b.len() - 1);
        Self::trim(&mut rem);
        (quo, rem)
    }

    fn poly_gcd(self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        Self::trim(&mut a);
        Self::trim(&mut b);
        while !b.is_empty() {
            let (_, r) = self.poly_divrem(&a, &b);
            a = std::mem::replace(&mut b, r);
        }
        if let Some(&lead) = a.last() {
            let li = self.inv(lead);
            for x in &mut a {
                *x = self.mul(*x, li);
            }
        }
        a
    }

    fn poly_powmod(self, base: &[u64], mut e: u64, modulus: &[u64]) -> Vec<u64> {
        let mut out = vec![1];
        let mut b = self.poly_divrem(base, modulus).1;
        while e > 0 {
            if e & 1 == 1 {
                out = self.poly_divrem(&self.poly_mul(&out, &b), modulus).1;
            }
            b = self.poly_divrem(&self.poly_mul(&b, &b), modulus).1;
            e >>= 1;
        }
        out
    }

    /// Roots of a monic polynomial that splits into distinct linear factors;
    /// `None` if it does not.
    pub fn distinct_roots<R: Rng>(self, f: &[u64], rng: &mut R) -> Option<Vec<u64>> {
        // squarefree and split: f | x^P - x with deg gcd = deg f
        let xp = self.poly_powmod(&[0, 1], self.p, f);
        let mut xp_minus_x = xp;
        xp_minus_x.resize(xp_minus_x.len().max(2), 0);
        xp_minus_x[1] = self.sub(xp_minus_x[1], 1);
        Self::trim(&mut xp_minus_x);
        if self.poly_gcd(f, &xp_minus_x).len() != f.len() {
            return None;
        }
        let mut roots = Vec::with_capacity(f.len() - 1);
        let mut stack = vec![f.to_vec()];
        while let Some(g) = stack.pop() {
            match g.len() {
                0 | 1 => {}
                2 => roots.push(self.sub(0, self.mul(g[0], self.inv(g[1])))),
                _ => loop {
                    let a = rng.gen_range(0..self.p);
                    let mut h = self.poly_powmod(&[a, 1], (self.p - 1) / 2, &g);
                    if h.is_empty() {
                        h.push(0);
                    }
                    h[0] = self.sub(h[0], 1);
                    Self::trim(&mut h);
                    let d = self.poly_gcd(&g, &h);
                    if d.len() > 1 && d.len() < g.len() {
                        let (other, _) = self.poly_divrem(&g, &d);
                        stack.push(d);
                        stack.push(other);
                        break;
                    }
                },
            }
        }
        roots.sort_unstable();
        Some(roots)
    }

    /// Characteristic polynomial of a square matrix via Hessenberg reduction.
    pub fn charpoly(self, m: &[Vec<u64>]) -> Vec<u64> {
        let n = m.len();
        let mut h: Vec<Vec<u64>> = m.to_vec();
        for col in 0..n.saturating_sub(2) {
            let Some(piv) = (col + 1..n).find(|&r| h[r][col] != 0) else {
                continue;
            };
            if piv != col + 1 {
                h.swap(piv, col + 1);
                for row in h.iter_mut() {
                    row.swap(piv, col + 1);
                }
            }
            let inv = self.inv(h[col + 1][col]);
            for r in col + 2..n {
                let t = self.mul(h[r][col], inv);
                if t == 0 {
                    continue;
                }
                for c in 0..n {
                    let v = self.mul(t, h[col + 1][c]);
                    h[r][c] = self.sub(h[r][c], v);
                }
                for row in h.iter_mut() {
                    let v = self.mul(t, row[r]);
                    row[col + 1] = self.add(row[col + 1], v);
                }
            }
        }
        // p_k = charpoly of the leading k x k block
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for k in 0..n {
            let mut next = self.poly_mul(&polys[k], &[self.sub(0, h[k][k]), 1]);
            let mut prod = 1u64;
            for i in (0..k).rev() {
                prod = self.mul(prod, h[i + 1][i]);
                let coef = self.mul(prod, h[i][k]);
                if coef == 0 {
                    continue;
                }
                let term = &polys[i];
                next.resize(next.len().max(term.len()), 0);
                for (j, &t) in term.iter().enumerate() {
                    next[j] = self.sub(next[j], self.mul(coef, t));
                }
            }
            Self::trim(&mut next);
            polys.push(next);
        }
        polys.pop().unwrap()
    }

    /// A basis of the right kernel of `m`.
    pub fn kernel(self, m: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        let mut a = m.to_vec();
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(piv) = (r..rows).find(|&i| a[i][c] != 0) else {
                continue;
            };
            a.swap(r, piv);
            let inv = self.inv(a[r][c]);
            for x in a[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for i in 0..rows {
                if i != r && a[i][c] != 0 {
                    let t = a[i][c];
                    for j in 0..cols {
                        let v = self.mul(t, a[r][j]);
                        a[i][j] = self.sub(a[i][j], v);
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
            if r == rows {
                break;
            }
        }
        let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0; cols];
                v[f] = 1;
                for (i, &pc) in pivot_cols.iter().enumerate() {
                    v[pc] = self.sub(0, a[i][f]);
                }
                v
            })
            .collect()
    }

    /// A generator of `F_P^*`.
    pub fn primitive_root(self) -> u64 {
        let fac = crate::arith::factorize_u64(self.p - 1).expect("P - 1 factors");
        let primes: Vec<u64> = fac.primes().map(|q| q.try_into().expect("fits u64")).collect();
        (2..self.p)
            .find(|&g| primes.iter().all(|&q| self.pow(g, (self.p - 1) / q) != 1))
            .expect("prime modulus has a primitive root")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn roots_of_split_polynomial() {
        let k = Fp { p: 1_000_003 };
        let mut f = vec![1u64];
        for r in [3u64, 17, 999_999, 42] {
            f = k.poly_mul(&f, &[k.sub(0, r), 1]);
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        assert_eq!(k.distinct_roots(&f, &mut rng).unwrap(), vec![3, 17, 42, 999_999]);
        let sq = k.poly_mul(&[1, 1], &[1, 1]);
        assert!(k.distinct_roots(&sq, &mut rng).is_none());
    }

    #[test]
    fn charpoly_of_companion() {
        let k = Fp { p: 101 };
        // companion matrix of x^3 - 2x^2 + 5x - 7
        let m = vec![vec![0, 0, 7], vec![1, 0, 101 - 5], vec![0, 1, 2]];
        assert_eq!(k.charpoly(&m), vec![101 - 7, 5, 101 - 2, 1]);
        let m2 = vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]];
        let cp = k.charpoly(&m2);
        // det(xI - M) at x = 0 is -det M = 3
        assert_eq!(cp[0], 3);
        assert_eq!(cp.len(), 4);
    }

    #[test]
    fn kernel_dimension() {
        let k = Fp { p: 7 };
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        let ker = k.kernel(&m);
        assert_eq!(ker.len(), 1);
        for row in &m {
            let dot = row.iter().zip(&ker[0]).fold(0, |s, (&a, &b)| k.add(s, k.mul(a, b)));
            assert_eq!(dot, 0);
        }
    }
}
