//! Ordinary character tables with exact cyclotomic values.

mod dixon;
pub mod modp;
mod text;

use std::cmp::Reverse;
use std::collections::HashSet;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith;
use crate::ffgrp::ClassData;

pub use dixon::{dixon_prime, dixon_table, dixon_table_with, DEFAULT_SEED};
pub use text::{ingest_table, parse_table, render_table, SCHEMA_HEADER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChartabError {
    #[error("no prime P = 1 mod {exponent} above {bound} below 2^62")]
    NoSuitablePrime { exponent: u64, bound: u64 },
    #[error("eigenspace splitting failed: {0}")]
    SplitFailure(String),
    #[error("schema error at line {line}: {message}")]
    Schema { line: usize, message: String },
    #[error("validation failed ({identity}): {detail}")]
    Validation { identity: String, detail: String },
    #[error("io error: {0}")]
    Io(String),
}

fn invalid(identity: &str, detail: impl Into<String>) -> ChartabError {
    ChartabError::Validation { identity: identity.to_string(), detail: detail.into() }
}

/// `sum_j n_j zeta_m^j` where `m` is the length of `n`, the order of the
/// element the value belongs to. The `n_j` are the eigenvalue multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CyclotomicValue {
    pub n: Vec<u64>,
}

impl CyclotomicValue {
    pub fn order(&self) -> u64 {
        self.n.len() as u64
    }

    pub fn total(&self) -> u64 {
        self.n.iter().sum()
    }

    /// Image under `zeta -> zeta^k`.
    pub fn galois(&self, k: u64) -> CyclotomicValue {
        let m = self.n.len();
        let mut out = vec![0; m];
        for (j, &c) in self.n.iter().enumerate() {
            out[(j as u64 * k % m as u64) as usize] += c;
        }
        CyclotomicValue { n: out }
    }

    /// The value as a rational integer, when it is one.
    pub fn as_integer(&self) -> Option<i128> {
        let red = Reducer::new(self.order());
        let acc: Vec<i128> = self.n.iter().map(|&x| x as i128).collect();
        red.as_integer(&acc)
    }

    /// The value at `g^k`, as a vector over the order of `g^k`.
    pub fn power(&self, k: u64) -> CyclotomicValue {
        let m = self.n.len() as u64;
        let g = m.gcd(&k);
        let mut out = vec![0; (m / g) as usize];
        for (j, &c) in self.n.iter().enumerate() {
            out[((j as u64 * k % m) / g) as usize] += c;
        }
        CyclotomicValue { n: out }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Character {
    pub degree: u64,
    /// One value per class, in class order.
    pub values: Vec<CyclotomicValue>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTable {
    pub group: String,
    pub order: u64,
    pub exponent: u64,
    pub classes: ClassData,
    pub characters: Vec<Character>,
}

/// `x^k mod Phi_e` for `0 <= k < e`, used to decide exact equalities in `Z[zeta_e]`.
pub(crate) struct Reducer {
    e: u64,
    rows: Vec<Vec<i128>>,
}

impl Reducer {
    pub(crate) fn new(e: u64) -> Reducer {
        let phi: Vec<i128> = arith::cyclotomic(e).coefficients.iter().map(|c| c.try_into().expect("small coefficient")).collect();
        let deg = phi.len() - 1;
        let mut rows = Vec::with_capacity(e as usize);
        let mut cur = vec![0i128; deg];
        cur[0] = 1;
        if deg == 0 {
            cur = vec![];
        }
        for _ in 0..e {
            rows.push(cur.clone());
            if deg == 0 {
                continue;
            }
            let top = cur[deg - 1];
            for i in (1..deg).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            for i in 0..deg {
                cur[i] -= top * phi[i];
            }
        }
        Reducer { e, rows }
    }

    /// `Some(c)` when the element `sum acc_k zeta_e^k` is the rational integer `c`.
    pub(crate) fn as_integer(&self, acc: &[i128]) -> Option<i128> {
        let deg = self.rows.first().map_or(0, Vec::len);
        if deg == 0 {
            return Some(acc.iter().sum());
        }
        let mut red = vec![0i128; deg];
        for (k, &a) in acc.iter().enumerate() {
            if a != 0 {
                for (r, &x) in red.iter_mut().zip(&self.rows[k]) {
                    *r += a * x;
                }
            }
        }
        red[1..].iter().all(|&x| x == 0).then_some(red[0])
    }

    /// Adds `w * a * conj(b)` into `acc`.
    fn add_product(&self, acc: &mut [i128], a: &CyclotomicValue, b: &CyclotomicValue, w: i128) {
        let (sa, sb) = (self.e / a.order(), self.e / b.order());
        for (i, &x) in a.n.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.n.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let idx = (i as u64 * sa + self.e - (j as u64 * sb) % self.e) % self.e;
                acc[idx as usize] += w * (x * y) as i128;
            }
        }
    }
}

impl CharacterTable {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.characters.iter().map(|c| c.degree).collect()
    }

    pub fn trivial_index(&self) -> Option<usize> {
        self.characters.iter().position(|c| c.values.iter().all(|v| v.n[0] == 1 && v.total() == 1))
    }

    /// Canonical order: by degree, then by value vectors descending (the
    /// trivial character leads).
    pub fn canonicalize(&mut self) {
        self.characters.sort_by(|a, b| (a.degree, Reverse(&a.values)).cmp(&(b.degree, Reverse(&b.values))));
    }

    /// Every check an ingested or computed table must pass.
    pub fn validate(&self) -> Result<(), ChartabError> {
        if self.characters.len() != self.class_count() {
            return Err(invalid(
                "class-count",
                format!("{} characters for {} classes", self.characters.len(), self.class_count()),
            ));
        }
        let sum: u128 = self.characters.iter().map(|c| (c.degree as u128).pow(2)).sum();
        if sum != self.order as u128 {
            return Err(invalid("degree-sum", format!("sum of squared degrees is {sum}, |G| = {}", self.order)));
        }
        for (i, c) in self.characters.iter().enumerate() {
            if c.degree == 0 || self.order % c.degree != 0 {
                return Err(invalid("degree-divides", format!("character {i}: degree {} does not divide |G|", c.degree)));
            }
        }
        if self.classes.group_order != self.order {
            return Err(invalid("class-data", "class data and header disagree on |G|"));
        }
        self.classes.validate().map_err(|d| invalid("class-data", d))?;
        let e = self.classes.exponent();
        if e != self.exponent {
            return Err(invalid("power-map", format!("exponent {} but element orders give {e}", self.exponent)));
        }
        self.check_shapes()?;
        if self.trivial_index().is_none() {
            return Err(invalid("trivial", "no trivial character"));
        }
        self.check_orthogonality()?;
        self.check_power_maps()
    }

    fn check_shapes(&self) -> Result<(), ChartabError> {
        for (i, ch) in self.characters.iter().enumerate() {
            if ch.values.len() != self.class_count() {
                return Err(invalid("shape", format!("character {i} has {} values", ch.values.len())));
            }
            for (c, v) in ch.values.iter().enumerate() {
                if v.order() != self.classes.classes[c].order {
                    return Err(invalid("shape", format!("character {i}, class {c}: vector length {}", v.order())));
                }
                if v.total() != ch.degree {
                    return Err(invalid(
                        "multiplicity-sum",
                        format!("character {i}, class {c}: multiplicities sum to {}, degree {}", v.total(), ch.degree),
                    ));
                }
            }
        }
        Ok(())
    }

    /// The value at the class of `g^k` is the `k`-th power image of the value at `g`.
    fn check_power_maps(&self) -> Result<(), ChartabError> {
        for (i, ch) in self.characters.iter().enumerate() {
            for (c, info) in self.classes.classes.iter().enumerate() {
                for k in 0..info.order {
                    let img = info.power_map[k as usize] as usize;
                    if ch.values[img] != ch.values[c].power(k) {
                        return Err(invalid("power-map", format!("character {i}: class {c} to the power {k}")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Exact first and second orthogonality in `Z[zeta_e]`.
    pub fn check_orthogonality(&self) -> Result<(), ChartabError> {
        let red = Reducer::new(self.exponent);
        let e = self.exponent as usize;
        let r = self.class_count();
        for a in 0..r {
            for b in a..r {
                let mut acc = vec![0i128; e];
                for (c, info) in self.classes.classes.iter().enumerate() {
                    red.add_product(&mut acc, &self.characters[a].values[c], &self.characters[b].values[c], info.size as i128);
                }
                let expect = if a == b { self.order as i128 } else { 0 };
                if red.as_integer(&acc) != Some(expect) {
                    return Err(invalid("orthogonality", format!("rows {a} and {b}")));
                }
            }
        }
        for c in 0..r {
            for d in c..r {
                let mut acc = vec![0i128; e];
                for ch in &self.characters {
                    red.add_product(&mut acc, &ch.values[c], &ch.values[d], 1);
                }
                let expect = if c == d { self.classes.centralizer_order(c) as i128 } else { 0 };
                if red.as_integer(&acc) != Some(expect) {
                    return Err(invalid("orthogonality", format!("columns {c} and {d}")));
                }
            }
        }
        Ok(())
    }

    /// Applying `zeta -> zeta^k` for each `k` prime to the exponent permutes the characters.
    pub fn galois_stable(&self) -> bool {
        let set: HashSet<&Vec<CyclotomicValue>> = self.characters.iter().map(|c| &c.values).collect();
        (1..self.exponent).filter(|k| k.gcd(&self.exponent) == 1).all(|k| {
            self.characters.iter().all(|ch| {
                let img: Vec<CyclotomicValue> = ch.values.iter().map(|v| v.galois(k)).collect();
                set.contains(&img)
            })
        })
    }
}
