//! Lie-type group families: order polynomials, cyclic Sylow detection and
//! the exceptional-group cyclicity table.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{self, divisors, factorize, mult_order, phi_eval, ArithError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),
    #[error("p = {0} is the defining characteristic")]
    DefiningCharacteristic(u64),
    #[error("invalid group spec: {0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    SL,
    SU,
    Sp,
    SpinMinus,
    SpinPlus,
    SpinOdd,
    F4,
    E6,
    TwistedE6,
    E7,
    E8,
    TriD4,
    G2,
    TwoB2,
    TwoG2,
    TwoF4,
}

impl Family {
    pub const ALL: [Family; 16] = [
        Family::SL,
        Family::SU,
        Family::Sp,
        Family::SpinMinus,
        Family::SpinPlus,
        Family::SpinOdd,
        Family::F4,
        Family::E6,
        Family::TwistedE6,
        Family::E7,
        Family::E8,
        Family::TriD4,
        Family::G2,
        Family::TwoB2,
        Family::TwoG2,
        Family::TwoF4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::SL => "SL",
            Family::SU => "SU",
            Family::Sp => "Sp",
            Family::SpinMinus => "SpinMinus",
            Family::SpinPlus => "SpinPlus",
            Family::SpinOdd => "SpinOdd",
            Family::F4 => "F4",
            Family::E6 => "E6",
            Family::TwistedE6 => "2E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::TriD4 => "3D4",
            Family::G2 => "G2",
            Family::TwoB2 => "2B2",
            Family::TwoG2 => "2G2",
            Family::TwoF4 => "2F4",
        }
    }

    /// Families whose rank is fixed, so the `n` field is ignored.
    pub fn is_exceptional(self) -> bool {
        !matches!(
            self,
            Family::SL | Family::SU | Family::Sp | Family::SpinMinus | Family::SpinPlus | Family::SpinOdd
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = LieError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace(['_', '-', '^'], "");
        let fam = match key.as_str() {
            "sl" => Family::SL,
            "su" => Family::SU,
            "sp" => Family::Sp,
            "spinminus" | "spin" | "omegaminus" => Family::SpinMinus,
            "spinplus" | "omegaplus" => Family::SpinPlus,
            "spinodd" | "omegaodd" => Family::SpinOdd,
            "f4" => Family::F4,
            "e6" => Family::E6,
            "2e6" | "twistede6" => Family::TwistedE6,
            "e7" => Family::E7,
            "e8" => Family::E8,
            "3d4" | "trid4" => Family::TriD4,
            "g2" => Family::G2,
            "2b2" | "sz" | "suzuki" => Family::TwoB2,
            "2g2" | "ree" => Family::TwoG2,
            "2f4" => Family::TwoF4,
            _ => return Err(LieError::UnsupportedFamily(s.to_string())),
        };
        Ok(fam)
    }
}

/// A universal group of Lie type. `n` is the matrix size for SL/SU and the
/// half-dimension for Sp and the spin groups (Spin_{2n+1} for `SpinOdd`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    pub family: Family,
    pub n: u32,
    pub q: u64,
    pub r: u64,
    pub f: u32,
}

/// `Some((r, f))` with `q = r^f`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let fq = arith::factorize_u64(q).ok()?;
    let (p, k) = fq.as_prime_power()?;
    Some((p.try_into().ok()?, k))
}

impl GroupSpec {
    pub fn new(family: Family, n: u32, q: u64) -> Result<Self, LieError> {
        let (r, f) =
            prime_power(q).ok_or_else(|| LieError::InvalidSpec(format!("q = {q} is not a prime power")))?;
        let n = if family.is_exceptional() { 0 } else { n };
        let min_n = match family {
            Family::SL | Family::SU | Family::SpinMinus | Family::SpinOdd => 2,
            Family::Sp => 1,
            Family::SpinPlus => 3,
            _ => 0,
        };
        if n < min_n {
            return Err(LieError::InvalidSpec(format!("{family} needs n >= {min_n}, got {n}")));
        }
        let odd_power_of = |base: u64| r == base && f % 2 == 1;
        match family {
            Family::TwoB2 | Family::TwoF4 if !odd_power_of(2) => {
                return Err(LieError::InvalidSpec(format!("{family} needs q an odd power of 2")));
            }
            Family::TwoG2 if !odd_power_of(3) => {
                return Err(LieError::InvalidSpec(format!("{family} needs q an odd power of 3")));
            }
            _ => {}
        }
        Ok(GroupSpec { family, n, q, r, f })
    }

    pub fn sl(n: u32, q: u64) -> Self {
        Self::new(Family::SL, n, q).unwrap()
    }

    pub fn su(n: u32, q: u64) -> Self {
        Self::new(Family::SU, n, q).unwrap()
    }

    pub fn sp(n: u32, q: u64) -> Self {
        Self::new(Family::Sp, n, q).unwrap()
    }

    pub fn exceptional(family: Family, q: u64) -> Self {
        Self::new(family, 0, q).unwrap()
    }

    pub fn order(&self) -> Result<BigUint, LieError> {
        Ok(order_polynomial(self)?.eval(self.q))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, q) = (self.n, self.q);
        match self.family {
            Family::SL => write!(f, "SL{n}({q})"),
            Family::SU => write!(f, "SU{n}({q})"),
            Family::Sp => write!(f, "Sp{}({q})", 2 * n),
            Family::SpinMinus => write!(f, "Spin-{}({q})", 2 * n),
            Family::SpinPlus => write!(f, "Spin+{}({q})", 2 * n),
            Family::SpinOdd => write!(f, "Spin{}({q})", 2 * n + 1),
            fam => write!(f, "{fam}({q})"),
        }
    }
}

/// `|G| = q^N * prod_i Phi_i(q)^{a_i}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderPolynomial {
    pub q_exponent: u64,
    pub multiplicities: BTreeMap<u64, u32>,
    pub center_divisor: u64,
}

impl OrderPolynomial {
    fn new(q_exponent: u64) -> Self {
        OrderPolynomial { q_exponent, multiplicities: BTreeMap::new(), center_divisor: 1 }
    }

    /// Multiplies by `q^i - 1`.
    fn minus(&mut self, i: u64) -> &mut Self {
        for d in divisors(i) {
            *self.multiplicities.entry(d).or_insert(0) += 1;
        }
        self
    }

    /// Multiplies by `q^i + 1`.
    fn plus(&mut self, i: u64) -> &mut Self {
        for d in divisors(2 * i) {
            if i % d != 0 {
                *self.multiplicities.entry(d).or_insert(0) += 1;
            }
        }
        self
    }

    /// Multiplies by `Phi_i(q)`.
    fn phi(&mut self, i: u64) -> &mut Self {
        *self.multiplicities.entry(i).or_insert(0) += 1;
        self
    }

    pub fn multiplicity(&self, i: u64) -> u32 {
        self.multiplicities.get(&i).copied().unwrap_or(0)
    }

    pub fn eval(&self, q: u64) -> BigUint {
        let qb = BigUint::from(q);
        let mut out = qb.pow(self.q_exponent as u32);
        for (&i, &a) in &self.multiplicities {
            out *= phi_eval(i, q).pow(a);
        }
        out / self.center_divisor
    }

    /// One-line audit form: `N; i^a i^a ...`.
    pub fn audit_line(&self) -> String {
        let mults: Vec<String> = self.multiplicities.iter().map(|(i, a)| format!("{i}^{a}")).collect();
        format!("{}; {}", self.q_exponent, mults.join(" "))
    }
}

pub fn order_polynomial(spec: &GroupSpec) -> Result<OrderPolynomial, LieError> {
    let n = spec.n as u64;
    let mut op;
    match spec.family {
        Family::SL => {
            op = OrderPolynomial::new(n * (n - 1) / 2);
            for i in 2..=n {
                op.minus(i);
            }
        }
        Family::SU => {
            op = OrderPolynomial::new(n * (n - 1) / 2);
            for i in 2..=n {
                if i % 2 == 0 {
                    op.minus(i);
                } else {
                    op.plus(i);
                }
            }
        }
        Family::Sp | Family::SpinOdd => {
            op = OrderPolynomial::new(n * n);
            for i in 1..=n {
                op.minus(2 * i);
            }
        }
        Family::SpinMinus | Family::SpinPlus => {
            op = OrderPolynomial::new(n * (n - 1));
            if spec.family == Family::SpinMinus {
                op.plus(n);
            } else {
                op.minus(n);
            }
            for i in 1..n {
                op.minus(2 * i);
            }
        }
        Family::G2 => {
            op = OrderPolynomial::new(6);
            op.minus(6).minus(2);
        }
        Family::F4 => {
            op = OrderPolynomial::new(24);
            for i in [2, 6, 8, 12] {
                op.minus(i);
            }
        }
        Family::E6 => {
            op = OrderPolynomial::new(36);
            for i in [2, 5, 6, 8, 9, 12] {
                op.minus(i);
            }
        }
        Family::TwistedE6 => {
            op = OrderPolynomial::new(36);
            for i in [2, 6, 8, 12] {
                op.minus(i);
            }
            op.plus(5).plus(9);
        }
        Family::E7 => {
            op = OrderPolynomial::new(63);
            for i in [2, 6, 8, 10, 12, 14, 18] {
                op.minus(i);
            }
        }
        Family::E8 => {
            op = OrderPolynomial::new(120);
            for i in [2, 8, 12, 14, 18, 20, 24, 30] {
                op.minus(i);
            }
        }
        Family::TriD4 => {
            // q^8 + q^4 + 1 = Phi_3(q^4)... = Phi_3 Phi_6 Phi_12
            op = OrderPolynomial::new(12);
            op.phi(3).phi(6).phi(12).minus(6).minus(2);
        }
        Family::TwoB2 => {
            op = OrderPolynomial::new(2);
            op.plus(2).minus(1);
        }
        Family::TwoG2 => {
            op = OrderPolynomial::new(3);
            op.plus(3).minus(1);
        }
        Family::TwoF4 => {
            op = OrderPolynomial::new(12);
            op.plus(6).minus(4).plus(3).minus(1);
        }
    }
    Ok(op)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SylowReport {
    pub p: u64,
    pub e: u64,
    pub p_part: BigUint,
    pub cyclic: bool,
    pub witness_torus_order: Option<BigUint>,
}

/// Cyclicity of a Sylow `p`-subgroup read off the order polynomial: with
/// `e = ord_p(q)`, the Sylow is cyclic iff `Phi_e` occurs once and `p` does
/// not divide `|G| / Phi_e(q)`.
pub fn cyclic_sylow(spec: &GroupSpec, p: u64) -> Result<SylowReport, LieError> {
    if p == spec.r {
        return Err(LieError::DefiningCharacteristic(p));
    }
    if !arith::is_prime_u64(p) {
        return Err(LieError::InvalidSpec(format!("{p} is not prime")));
    }
    let op = order_polynomial(spec)?;
    let order = op.eval(spec.q);
    let pb = BigUint::from(p);
    let p_part = arith::p_part_of(&order, &pb);
    let e = mult_order(&BigUint::from(spec.q), &pb)?;
    let report = |cyclic: bool, witness: Option<BigUint>| SylowReport {
        p,
        e,
        p_part: p_part.clone(),
        cyclic,
        witness_torus_order: witness,
    };
    if p == 2 {
        return Ok(report(false, None));
    }
    if p_part.is_one() {
        return Ok(report(true, Some(BigUint::one())));
    }
    if op.multiplicity(e) != 1 {
        return Ok(report(false, None));
    }
    let witness = phi_eval(e, spec.q);
    let cofactor = &order / &witness;
    if (&cofactor % &pb).is_zero() {
        Ok(report(false, None))
    } else {
        Ok(report(true, Some(witness)))
    }
}

/// Exceptional families covered by the cyclicity table.
pub const TABLE3_FAMILIES: [Family; 5] =
    [Family::F4, Family::E6, Family::TwistedE6, Family::E7, Family::E8];

/// Reference index sets for the cyclicity table.
pub fn table3_reference(family: Family) -> BTreeSet<u64> {
    let v: &[u64] = match family {
        Family::F4 => &[8, 12],
        Family::E6 => &[5, 8, 9, 12],
        Family::TwistedE6 => &[8, 10, 12, 18],
        Family::E7 => &[5, 7, 8, 9, 10, 12, 14, 18],
        Family::E8 => &[7, 9, 14, 15, 18, 20, 24, 30],
        _ => &[],
    };
    v.iter().copied().collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table3Row {
    pub family: Family,
    /// Indices `i` for which a prime with `ord_p(q) = i` has cyclic Sylow.
    pub indices: BTreeSet<u64>,
    /// Reference indices where `Phi_i(q)` has no primitive prime divisor.
    pub skipped: BTreeSet<u64>,
    /// A cyclic prime for each index in `indices`.
    pub witnesses: BTreeMap<u64, BigUint>,
}

impl Table3Row {
    pub fn matches_reference(&self) -> bool {
        let expected: BTreeSet<u64> =
            table3_reference(self.family).difference(&self.skipped).copied().collect();
        expected == self.indices
    }
}

pub fn table3(q: u64) -> Result<Vec<Table3Row>, LieError> {
    TABLE3_FAMILIES.iter().map(|&fam| table3_row(fam, q)).collect()
}

fn table3_row(family: Family, q: u64) -> Result<Table3Row, LieError> {
    let spec = GroupSpec::new(family, 0, q)?;
    let op = order_polynomial(&spec)?;
    let qb = BigUint::from(q);
    let mut indices = BTreeSet::new();
    let mut witnesses = BTreeMap::new();
    let mut has_primitive = BTreeSet::new();
    for &i in op.multiplicities.keys() {
        let fac = factorize(&phi_eval(i, q))?;
        for p in fac.primes() {
            if (&qb % p).is_zero() || *p == BigUint::from(2u32) {
                continue;
            }
            if mult_order(&qb, p)? != i {
                continue;
            }
            has_primitive.insert(i);
            let pu: u64 = p.try_into().map_err(|_| LieError::InvalidSpec(format!("prime {p} too large")))?;
            if cyclic_sylow(&spec, pu)?.cyclic {
                indices.insert(i);
                witnesses.entry(i).or_insert_with(|| p.clone());
            }
        }
    }
    let skipped = table3_reference(family).difference(&has_primitive).copied().collect();
    Ok(Table3Row { family, indices, skipped, witnesses })
}

fn gcd2(q: u64) -> u64 {
    2u64.gcd(&(q - 1))
}

/// Torus orders the exceptional cases of the classification pivot on.
pub fn exceptional_torus_orders(spec: &GroupSpec) -> Result<Vec<BigUint>, LieError> {
    let q = spec.q;
    let qb = BigUint::from(q);
    let n = spec.n;
    let half_plus = |m: u32| (qb.pow(m) + 1u32) / gcd2(q);
    let out = match spec.family {
        Family::SL => vec![(qb.pow(n) - 1u32) / (&qb - 1u32)],
        Family::SU => [n, n - 1]
            .into_iter()
            .filter(|m| m % 2 == 1 && *m >= 1)
            .map(|m| (qb.pow(m) + 1u32) / (&qb + 1u32))
            .collect(),
        Family::Sp | Family::SpinMinus | Family::SpinOdd => vec![half_plus(n)],
        Family::SpinPlus => vec![half_plus(n - 1)],
        Family::E6 => vec![phi_eval(9, q)],
        Family::TwistedE6 => vec![phi_eval(18, q)],
        Family::E7 => vec![phi_eval(9, q), phi_eval(18, q)],
        Family::E8 => vec![phi_eval(15, q), phi_eval(20, q), phi_eval(30, q)],
        fam => return Err(LieError::UnsupportedFamily(fam.to_string())),
    };
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverEntry {
    pub quotient: String,
    pub center: String,
    pub primes: Vec<u64>,
}

/// Simple groups with exceptional Schur multiplier and a cyclic Sylow
/// `p`-subgroup for the listed primes, with the structure of the full center.
pub fn exceptional_cover_registry() -> Vec<CoverEntry> {
    const RAW: [(&str, &str, &[u64]); 15] = [
        ("SL2(4)", "C2", &[3, 5]),
        ("PSL2(9)", "C6", &[5]),
        ("SL3(2)", "C2", &[3, 7]),
        ("SL4(2)", "C2", &[5, 7]),
        ("PSL3(4)", "C12xC4", &[5, 7]),
        ("PSU4(3)", "C12xC3", &[5, 7]),
        ("PSU6(2)", "C6xC2", &[5, 7, 11]),
        ("Sp6(2)", "C2", &[5, 7]),
        ("Omega8+(2)", "C2xC2", &[7]),
        ("G2(4)", "C2", &[7, 13]),
        ("F4(2)", "C2", &[13, 17]),
        ("2E6(2)", "C6xC2", &[11, 13, 17, 19]),
        ("Omega7(3)", "C6", &[5, 7, 13]),
        ("G2(3)", "C3", &[7, 13]),
        ("2B2(8)", "C2xC2", &[13]),
    ];
    RAW.iter()
        .map(|(quo, c, ps)| CoverEntry { quotient: quo.to_string(), center: c.to_string(), primes: ps.to_vec() })
        .collect()
}

fn normalize_name(s: &str) -> String {
    s.chars()
        .filter(|c| !c.is_whitespace() && *c != '_' && *c != '^')
        .flat_map(char::to_lowercase)
        .collect::<String>()
        .replace('×', "x")
        .replace('₂', "2")
}

pub fn lookup_cover(name: &str) -> Option<CoverEntry> {
    let key = normalize_name(name);
    let key = match key.as_str() {
        "sz(8)" => "2b2(8)".to_string(),
        _ => key,
    };
    exceptional_cover_registry().into_iter().find(|e| normalize_name(&e.quotient) == key)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn classical_orders() {
        assert_eq!(GroupSpec::sl(2, 4).order().unwrap(), big(60));
        assert_eq!(GroupSpec::sp(2, 3).order().unwrap(), big(51840));
        assert_eq!(GroupSpec::su(3, 3).order().unwrap(), big(6048));
        assert_eq!(GroupSpec::su(4, 2).order().unwrap(), big(25920));
        assert_eq!(GroupSpec::sl(4, 2).order().unwrap(), big(20160));
        assert_eq!(GroupSpec::sl(3, 2).order().unwrap(), big(168));
    }

    #[test]
    fn exceptional_orders() {
        assert_eq!(GroupSpec::exceptional(Family::G2, 2).order().unwrap(), big(12096));
        assert_eq!(GroupSpec::exceptional(Family::TwoB2, 8).order().unwrap(), big(29120));
        assert_eq!(GroupSpec::exceptional(Family::TwoG2, 27).order().unwrap(), big(10073444472));
        assert_eq!(GroupSpec::exceptional(Family::TriD4, 2).order().unwrap(), big(211341312));
        assert_eq!(GroupSpec::exceptional(Family::TwoF4, 2).order().unwrap(), big(35942400));
        assert_eq!(
            GroupSpec::exceptional(Family::F4, 2).order().unwrap(),
            "3311126603366400".parse::<BigUint>().unwrap()
        );
        // universal 2E6(2) is 3 times the simple group
        assert_eq!(
            GroupSpec::exceptional(Family::TwistedE6, 2).order().unwrap(),
            "76532479683774853939200".parse::<BigUint>().unwrap() * 3u32
        );
        // universal E7(2) equals the simple group (gcd(2, q-1) = 1)
        assert_eq!(
            GroupSpec::exceptional(Family::E7, 2).order().unwrap(),
            "7997476042075799759100487262680802918400".parse::<BigUint>().unwrap()
        );
    }

    #[test]
    fn spin_orders() {
        // Spin+8(2) = Omega+8(2), Spin7(3) = 2.Omega7(3), Spin-8(2) = Omega-8(2)
        let spin = |fam, n, q| GroupSpec::new(fam, n, q).unwrap().order().unwrap();
        assert_eq!(spin(Family::SpinPlus, 4, 2), big(174182400));
        assert_eq!(spin(Family::SpinOdd, 3, 3), big(2 * 4585351680));
        assert_eq!(spin(Family::SpinMinus, 4, 2), big(197406720));
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(GroupSpec::new(Family::SL, 3, 6).is_err());
        assert!(GroupSpec::new(Family::SL, 1, 4).is_err());
        assert!(GroupSpec::new(Family::TwoB2, 0, 4).is_err());
        assert!(GroupSpec::new(Family::TwoG2, 0, 27).is_ok());
    }

    #[test]
    fn sylow_examples() {
        let e8 = GroupSpec::exceptional(Family::E8, 2);
        let rep = cyclic_sylow(&e8, 151).unwrap();
        assert!(rep.cyclic);
        assert_eq!(rep.e, 15);
        assert!(!cyclic_sylow(&GroupSpec::sl(4, 2), 3).unwrap().cyclic);
        let rep = cyclic_sylow(&GroupSpec::sl(3, 3), 13).unwrap();
        assert!(rep.cyclic);
        assert_eq!(rep.witness_torus_order, Some(big(13)));
        assert!(matches!(
            cyclic_sylow(&GroupSpec::sl(3, 3), 3),
            Err(LieError::DefiningCharacteristic(3))
        ));
        let rep = cyclic_sylow(&GroupSpec::sl(2, 8), 3).unwrap();
        assert!(rep.cyclic);
        assert_eq!(rep.p_part, big(9));
        assert!(!cyclic_sylow(&GroupSpec::sl(2, 5), 2).unwrap().cyclic);
    }

    #[test]
    fn table3_small_q() {
        for q in [2, 3, 4, 5] {
            for row in table3(q).unwrap() {
                assert!(row.matches_reference(), "q={q} {:?}", row);
            }
        }
        let rows = table3(2).unwrap();
        assert_eq!(rows[4].indices, table3_reference(Family::E8));
        assert_eq!(rows[0].indices, [8, 12].into_iter().collect());
    }

    #[test]
    fn torus_orders() {
        assert!(exceptional_torus_orders(&GroupSpec::sl(3, 3)).unwrap().contains(&big(13)));
        assert_eq!(
            exceptional_torus_orders(&GroupSpec::exceptional(Family::E8, 2)).unwrap(),
            vec![big(151), big(205), big(331)]
        );
        assert!(exceptional_torus_orders(&GroupSpec::su(3, 3)).unwrap().contains(&big(7)));
        assert!(exceptional_torus_orders(&GroupSpec::exceptional(Family::G2, 3)).is_err());
    }

    #[test]
    fn torus_orders_divide_group_order() {
        for fam in Family::ALL {
            for n in 2..=8u32 {
                for q in [2u64, 3, 4, 5, 7, 8, 9] {
                    let Ok(spec) = GroupSpec::new(fam, n, q) else { continue };
                    let Ok(tori) = exceptional_torus_orders(&spec) else { continue };
                    let order = spec.order().unwrap();
                    for t in tori {
                        assert!((&order % &t).is_zero(), "{spec}: {t}");
                    }
                }
            }
        }
    }

    #[test]
    fn torus_quotient_congruence() {
        for n in [2u64, 3, 5, 7, 11, 13] {
            for q in 2..=16u64 {
                if prime_power(q).is_none() {
                    continue;
                }
                let qb = big(q);
                let sl = (qb.pow(n as u32) - 1u32) / (&qb - 1u32);
                if q > 2 {
                    assert_eq!(sl % (q - 1), big(n % (q - 1)), "SL n={n} q={q}");
                }
                if n % 2 == 1 {
                    let su = (qb.pow(n as u32) + 1u32) / (&qb + 1u32);
                    assert_eq!(su % (q + 1), big(n % (q + 1)), "SU n={n} q={q}");
                }
            }
        }
    }

    #[test]
    fn cover_registry() {
        let reg = exceptional_cover_registry();
        assert_eq!(reg.len(), 15);
        let e = lookup_cover("SL2(4)").unwrap();
        assert_eq!((e.center.as_str(), e.primes.as_slice()), ("C2", &[3u64, 5][..]));
        let e = lookup_cover("2E6(2)").unwrap();
        assert_eq!((e.center.as_str(), e.primes.as_slice()), ("C6xC2", &[11u64, 13, 17, 19][..]));
        assert_eq!(lookup_cover("g2(4)").unwrap().primes, vec![7, 13]);
        assert_eq!(lookup_cover("Sz(8)").unwrap().primes, vec![13]);
    }

    #[test]
    fn family_parsing() {
        for fam in Family::ALL {
            assert_eq!(fam.name().parse::<Family>().unwrap(), fam);
        }
        assert!("H4".parse::<Family>().is_err());
    }
}
