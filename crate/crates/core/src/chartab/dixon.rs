use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::modp::Fp;
use super::{ChartabError, Character, CharacterTable, CyclotomicValue};
use crate::arith::is_prime_u64;
use crate::ffgrp::MatGroup;

pub const DEFAULT_SEED: u64 = 0x5eed_d1c0;

/// Eigenvalues of a random class-sum combination are distinct with
/// probability about `1 - r^2 / P`; a lower bound of `2^31` keeps that tiny.
const MIN_PRIME: u64 = 1 << 31;

const ATTEMPTS: usize = 8;

/// Least prime `P = 1 mod e` with `P > max(2 sqrt|G|, 2^31)`.
pub fn dixon_prime(exponent: u64, order: u64) -> Result<u64, ChartabError> {
    let bound = (2.0 * (order as f64).sqrt()).ceil() as u64 + 1;
    let start = bound.max(MIN_PRIME);
    let mut p = start - start % exponent + 1;
    while p <= start {
        p += exponent;
    }
    while p < 1 << 62 {
        if is_prime_u64(p) && order % p != 0 {
            return Ok(p);
        }
        p += exponent;
    }
    Err(ChartabError::NoSuitablePrime { exponent, bound })
}

/// Class-multiplication coefficients: `consts[j][i][k]` counts `x` in class `j`
/// with `x^{-1} z_k` in class `i`, `z_k` the representative of class `k`.
fn structure_constants(g: &MatGroup) -> Vec<Vec<Vec<u64>>> {
    let data = g.classes();
    let r = data.len();
    let space = g.space();
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); r];
    for (idx, &c) in data.membership.iter().enumerate() {
        members[c as usize].push(idx);
    }
    let reps: Vec<Vec<u32>> = members.iter().map(|m| space.decode(g.elements()[m[0]])).collect();
    (0..r)
        .into_par_iter()
        .map(|j| {
            let mut m = vec![vec![0u64; r]; r];
            for &x in &members[j] {
                let inv = space.inverse(&space.decode(g.elements()[x])).expect("invertible");
                for (k, z) in reps.iter().enumerate() {
                    let y = space.encode(&space.mul(&inv, z));
                    let i = data.membership[g.index_of(y).expect("product in group")] as usize;
                    m[i][k] += 1;
                }
            }
            m
        })
        .collect()
}

pub fn dixon_table(g: &MatGroup) -> Result<CharacterTable, ChartabError> {
    dixon_table_with(g, DEFAULT_SEED)
}

/// Dixon-Schneider: common eigenvectors of the class matrices mod `P` give the
/// central characters; degrees and values follow, and values are lifted to
/// eigenvalue multiplicities by Fourier inversion over each element's powers.
pub fn dixon_table_with(g: &MatGroup, seed: u64) -> Result<CharacterTable, ChartabError> {
    let data = g.classes();
    let r = data.len();
    let order = g.order();
    let exponent = data.exponent();
    let p = dixon_prime(exponent, order)?;
    let k = Fp { p };
    let consts = structure_constants(g);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut omegas: Option<Vec<Vec<u64>>> = None;
    for _ in 0..ATTEMPTS {
        let coeffs: Vec<u64> = (0..r).map(|_| rng.gen_range(0..p)).collect();
        let mut m = vec![vec![0u64; r]; r];
        for (j, cj) in consts.iter().enumerate() {
            for i in 0..r {
                for l in 0..r {
                    if cj[i][l] != 0 {
                        m[i][l] = k.add(m[i][l], k.mul(coeffs[j], k.from_u64(cj[i][l])));
                    }
                }
            }
        }
        let cp = k.charpoly(&m);
        let Some(roots) = k.distinct_roots(&cp, &mut rng) else {
            continue;
        };
        let mut vecs = Vec::with_capacity(r);
        for lambda in roots {
            let mut shifted = m.clone();
            for (i, row) in shifted.iter_mut().enumerate() {
                row[i] = k.sub(row[i], lambda);
            }
            let ker = k.kernel(&shifted);
            if ker.len() != 1 || ker[0][0] == 0 {
                return Err(ChartabError::SplitFailure(format!("eigenspace of dimension {}", ker.len())));
            }
            let scale = k.inv(ker[0][0]);
            vecs.push(ker[0].iter().map(|&x| k.mul(x, scale)).collect());
        }
        omegas = Some(vecs);
        break;
    }
    let omegas = omegas.ok_or_else(|| ChartabError::SplitFailure(format!("no separating combination in {ATTEMPTS} attempts")))?;

    let sizes: Vec<u64> = data.classes.iter().map(|c| k.from_u64(c.size)).collect();
    let size_inv: Vec<u64> = sizes.iter().map(|&s| k.inv(s)).collect();
    let inverse_class: Vec<usize> = (0..r).map(|c| data.power(c, -1)).collect();
    let divisors: Vec<u64> = (1..).take_while(|d| d * d <= order).filter(|d| order % d == 0).collect();

    let zeta_e = k.pow(k.primitive_root(), (p - 1) / exponent);
    let mut characters = Vec::with_capacity(r);
    for w in &omegas {
        // |G| / chi(1)^2 = sum_j omega_j omega_{j*} / |C_j|
        let s = (0..r).fold(0, |acc, j| k.add(acc, k.mul(k.mul(w[j], w[inverse_class[j]]), size_inv[j])));
        let d_sq = k.mul(k.from_u64(order), k.inv(s));
        let degree = *divisors
            .iter()
            .find(|&&d| k.mul(d, d) == d_sq)
            .ok_or_else(|| ChartabError::SplitFailure("degree is not a divisor of |G|".into()))?;
        let values_p: Vec<u64> = (0..r).map(|j| k.mul(k.mul(degree, w[j]), size_inv[j])).collect();
        let mut values = Vec::with_capacity(r);
        for (c, info) in data.classes.iter().enumerate() {
            let m = info.order;
            let zeta_m = k.pow(zeta_e, exponent / m);
            let m_inv = k.inv(m % p);
            let mut n = Vec::with_capacity(m as usize);
            for j in 0..m {
                let zinv = k.pow(zeta_m, (m - j) % m);
                let mut acc = 0;
                let mut z = 1;
                for t in 0..m {
                    acc = k.add(acc, k.mul(values_p[data.power(c, t as i64)], z));
                    z = k.mul(z, zinv);
                }
                let nj = k.mul(acc, m_inv);
                if nj > degree {
                    return Err(ChartabError::SplitFailure(format!("class {c}: multiplicity {nj} exceeds degree {degree}")));
                }
                n.push(nj);
            }
            values.push(CyclotomicValue { n });
        }
        characters.push(Character { degree, values });
    }
    let mut classes = data.clone();
    classes.membership = Vec::new();
    let mut table = CharacterTable { group: g.name(), order, exponent, classes, characters };
    table.canonicalize();
    table.validate()?;
    Ok(table)
}
