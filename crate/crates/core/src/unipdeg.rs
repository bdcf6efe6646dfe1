//! Unipotent and Brauer character degrees as exact polynomials in q.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UnipError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("{poly} is not integral at q = {q}")]
    NonIntegral { poly: String, q: u64 },
}

/// Polynomial in `q` with rational coefficients, ascending degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPolynomial {
    coeffs: Vec<BigRational>,
}

impl QPolynomial {
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = QPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(vec![BigRational::from_integer(c.into())])
    }

    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    /// `c * q^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn q_pow(k: usize) -> Self {
        Self::monomial(BigRational::one(), k)
    }

    /// Integer coefficients, ascending.
    pub fn from_ints(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&x| BigRational::from_integer(x.into())).collect())
    }

    pub fn scale(&self, num: i64, den: i64) -> Self {
        let r = BigRational::new(num.into(), den.into());
        Self::from_coeffs(self.coeffs.iter().map(|c| c * &r).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, q: &BigInt) -> BigRational {
        let x = BigRational::from_integer(q.clone());
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * &x + c)
    }

    pub fn eval_int(&self, q: u64) -> Result<BigInt, UnipError> {
        let v = self.eval(&BigInt::from(q));
        if v.is_integer() {
            Ok(v.to_integer())
        } else {
            Err(UnipError::NonIntegral { poly: self.to_string(), q })
        }
    }

    /// All denominators divide 2.
    pub fn half_integral(&self) -> bool {
        self.coeffs.iter().all(|c| (BigInt::from(2) % c.denom()).is_zero())
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let coef = if a.is_integer() { a.to_integer().to_string() } else { format!("({a})") };
            match (k, a.is_one()) {
                (0, _) => write!(f, "{coef}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{coef}q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{coef}q^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let get = |v: &[BigRational], i: usize| v.get(i).cloned().unwrap_or_else(BigRational::zero);
        QPolynomial::from_coeffs((0..n).map(|i| get(&self.coeffs, i) + get(&rhs.coeffs, i)).collect())
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        QPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return QPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QPolynomial {
            type Output = QPolynomial;
            fn $m(self, rhs: QPolynomial) -> QPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Shorthands for the cyclotomic factors that appear in the degree formulas.
pub mod q {
    use super::QPolynomial;

    pub fn pow(k: usize) -> QPolynomial {
        QPolynomial::q_pow(k)
    }
    pub fn c(v: i64) -> QPolynomial {
        QPolynomial::constant(v)
    }
    /// `q^2 + q + 1`
    pub fn phi3() -> QPolynomial {
        QPolynomial::from_ints(&[1, 1, 1])
    }
    /// `q^2 - q + 1`
    pub fn phi6() -> QPolynomial {
        QPolynomial::from_ints(&[1, -1, 1])
    }
    /// `q^4 + 1`
    pub fn phi8() -> QPolynomial {
        QPolynomial::from_ints(&[1, 0, 0, 0, 1])
    }
    /// `q^3 / 2`
    pub fn half_cube() -> QPolynomial {
        QPolynomial::q_pow(3).scale(1, 2)
    }
}

fn prod_q_minus_1(range: impl Iterator<Item = u32>, q: &BigUint) -> BigUint {
    range.fold(BigUint::one(), |acc, i| acc * (q.pow(i) - 1u32))
}

/// Degree of the unipotent character of `GL_d(q)` labelled by the hook `(d-j, 1^j)`.
pub fn hook_degree(d: u32, j: u32, q: u64) -> Result<BigUint, UnipError> {
    if j + 2 > d {
        return Err(UnipError::InvalidInput(format!("need 0 <= j <= d - 2, got d = {d}, j = {j}")));
    }
    let qb = BigUint::from(q);
    let num = qb.pow(j * (j + 1) / 2) * prod_q_minus_1(d - j..d, &qb);
    let den = prod_q_minus_1(1..j + 1, &qb);
    let (quo, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero());
    Ok(quo)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelReduction {
    /// `chi^{(d-j, 1^j)}(1)`
    pub chi: BigUint,
    /// `chi^{(d-j+1, 1^{j-1})}(1)`
    pub lower: BigUint,
    /// Lower bound on the Brauer degree `psi^{(d-j, 1^j)}(1)`.
    pub bound: BigUint,
}

/// Reduction mod `ell = d` splits a hook character into two adjacent hook
/// Brauer characters, which bounds the top one from below.
pub fn peel_reduction(d: u32, j: u32, q: u64) -> Result<PeelReduction, UnipError> {
    if j == 0 || j + 2 > d {
        return Err(UnipError::InvalidInput(format!("need 1 <= j <= d - 2, got d = {d}, j = {j}")));
    }
    let chi = hook_degree(d, j, q)?;
    let lower = hook_degree(d, j - 1, q)?;
    let bound = &chi - &lower;
    Ok(PeelReduction { chi, lower, bound })
}

/// The closed form of the Peel bound:
/// `q^{j(j-1)/2} prod_{i=d-j+1}^{d-1}(q^i-1) (q^d - 2q^j + 1) / prod_{i=1}^{j}(q^i-1)`.
pub fn peel_bound_closed_form(d: u32, j: u32, q: u64) -> BigUint {
    let qb = BigUint::from(q);
    let num = qb.pow(j * (j - 1) / 2) * prod_q_minus_1(d - j + 1..d, &qb) * (qb.pow(d) + 1u32 - 2u32 * qb.pow(j));
    num / prod_q_minus_1(1..j + 1, &qb)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionMatrix {
    pub ordinary: Vec<(String, QPolynomial)>,
    pub brauer: Vec<String>,
    pub entries: Vec<Vec<u32>>,
    /// For each Brauer character, the ordinary row it is solved from.
    pub pivots: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowCheck {
    pub label: String,
    pub ordinary: BigInt,
    pub combination: BigInt,
    pub holds: bool,
}

impl DecompositionMatrix {
    /// Brauer degrees by back-substitution through the pivot rows.
    pub fn brauer_degrees(&self) -> Vec<QPolynomial> {
        let mut out: Vec<QPolynomial> = Vec::with_capacity(self.brauer.len());
        for (k, &row) in self.pivots.iter().enumerate() {
            let entries = &self.entries[row];
            debug_assert!(entries[k + 1..].iter().all(|&e| e == 0));
            let mut rest = self.ordinary[row].1.clone();
            for (j, beta) in out.iter().enumerate() {
                if entries[j] > 0 {
                    rest = &rest - &beta.scale(entries[j] as i64, 1);
                }
            }
            out.push(rest.scale(1, entries[k] as i64));
        }
        out
    }

    /// Each ordinary degree against its row applied to the Brauer degrees.
    pub fn row_consistency(&self, q: u64) -> Result<Vec<RowCheck>, UnipError> {
        let betas = self.brauer_degrees();
        self.ordinary
            .iter()
            .zip(&self.entries)
            .map(|((label, deg), row)| {
                let ordinary = deg.eval_int(q)?;
                let mut combination = BigInt::zero();
                for (b, &e) in betas.iter().zip(row) {
                    combination += b.eval_int(q)? * BigInt::from(e);
                }
                Ok(RowCheck { label: label.clone(), holds: ordinary == combination, ordinary, combination })
            })
            .collect()
    }

    /// Rows whose degree polynomial equals the row combination identically.
    pub fn symbolic_consistency(&self) -> Vec<(String, bool)> {
        let betas = self.brauer_degrees();
        self.ordinary
            .iter()
            .zip(&self.entries)
            .map(|((label, deg), row)| {
                let comb = betas
                    .iter()
                    .zip(row)
                    .fold(QPolynomial::zero(), |acc, (b, &e)| &acc + &b.scale(e as i64, 1));
                (label.clone(), comb == *deg)
            })
            .collect()
    }

    /// Plain-text grid: degree, label, then one column per Brauer character.
    pub fn render(&self) -> String {
        let mut rows = vec![{
            let mut h = vec!["degree".to_string(), "label".to_string()];
            h.extend(self.brauer.iter().cloned());
            h
        }];
        for ((label, deg), entries) in self.ordinary.iter().zip(&self.entries) {
            let mut r = vec![deg.to_string(), label.clone()];
            r.extend(entries.iter().map(|e| e.to_string()));
            rows.push(r);
        }
        let widths: Vec<usize> =
            (0..rows[0].len()).map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0)).collect();
        let mut out = String::new();
        for r in rows {
            let cells: Vec<String> = r.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect();
            out.push_str(cells.join(" | ").trim_end());
            out.push('\n');
        }
        out
    }
}

/// The 3-modular decomposition matrix of the unipotent characters of the
/// twisted `D_4(q)`, `q` even, `3 | q - 1`, with rows as printed.
pub fn d4minus_table() -> DecompositionMatrix {
    use q::*;
    let rows: Vec<(&str, QPolynomial, [u32; 7])> = vec![
        ("3.", c(1), [1, 0, 0, 0, 0, 0, 0]),
        ("21.", pow(1) * phi8(), [1, 1, 0, 0, 0, 0, 0]),
        ("1^3.", half_cube() * phi6() * phi8(), [0, 1, 1, 0, 0, 0, 0]),
        ("2.1", pow(2) * phi3() * phi6(), [0, 0, 1, 0, 0, 0, 0]),
        ("1^2.1", half_cube() * phi3() * phi8(), [0, 0, 0, 1, 0, 0, 0]),
        ("1.2", half_cube() * phi3() * phi8(), [0, 0, 0, 1, 0, 0, 0]),
        ("1.1^2", pow(6) * phi3() * phi6(), [0, 0, 0, 0, 1, 0, 0]),
        (".3", half_cube() * phi6() * phi8(), [0, 0, 0, 0, 1, 0, 0]),
        (".21", pow(7) * phi8(), [0, 0, 0, 0, 1, 1, 0]),
        (".1^3", pow(12), [0, 0, 0, 0, 0, 1, 1]),
    ];
    let label_row = |l: &str| rows.iter().position(|r| r.0 == l).unwrap();
    let pivots = ["3.", "21.", "2.1", "1^2.1", ".3", ".21", ".1^3"].iter().map(|l| label_row(l)).collect();
    DecompositionMatrix {
        ordinary: rows.iter().map(|(l, d, _)| (l.to_string(), d.clone())).collect(),
        brauer: (1..=7).map(|i| format!("b{i}")).collect(),
        entries: rows.iter().map(|r| r.2.to_vec()).collect(),
        pivots,
    }
}

/// Row consistency of the printed table at a `q` where it is meant to apply:
/// `q` even with `3 | q - 1`.
pub fn d4minus_row_consistency(q: u64) -> Result<Vec<RowCheck>, UnipError> {
    if q % 2 != 0 || q % 3 != 1 {
        return Err(UnipError::InvalidInput(format!("table needs q even with 3 | q - 1, got {q}")));
    }
    d4minus_table().row_consistency(q)
}

/// The five prime-divisor cases for `ell` in the twisted `D_4(q)` analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Qe4Case {
    /// `ell | q - 1`
    QMinus1,
    /// `ell | q + 1`
    QPlus1,
    /// `ell | q^2 + 1`
    Q2Plus1,
    /// `ell | q^2 + q + 1`
    Q2PlusQPlus1,
    /// `ell | q^2 - q + 1`
    Q2MinusQPlus1,
}

impl Qe4Case {
    pub const ALL: [Qe4Case; 5] =
        [Qe4Case::QMinus1, Qe4Case::QPlus1, Qe4Case::Q2Plus1, Qe4Case::Q2PlusQPlus1, Qe4Case::Q2MinusQPlus1];

    pub fn divisor(self) -> &'static str {
        match self {
            Qe4Case::QMinus1 => "q-1",
            Qe4Case::QPlus1 => "q+1",
            Qe4Case::Q2Plus1 => "q^2+1",
            Qe4Case::Q2PlusQPlus1 => "q^2+q+1",
            Qe4Case::Q2MinusQPlus1 => "q^2-q+1",
        }
    }
}

impl std::str::FromStr for Qe4Case {
    type Err = UnipError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        Qe4Case::ALL
            .into_iter()
            .find(|c| c.divisor() == key)
            .ok_or_else(|| UnipError::InvalidInput(format!("unknown case {s}")))
    }
}

/// A printed congruence `value = residue (mod modulus)`.
#[derive(Debug, Clone)]
pub struct Qe4Claim {
    pub label: String,
    pub value: QPolynomial,
    pub residue: QPolynomial,
    pub modulus: QPolynomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Qe4Verdict {
    pub label: String,
    pub value: BigInt,
    pub claimed_residue: BigInt,
    pub actual_residue: BigInt,
    pub modulus: BigInt,
    pub holds: bool,
}

fn claim(label: impl Into<String>, value: QPolynomial, residue: QPolynomial, modulus: QPolynomial) -> Qe4Claim {
    Qe4Claim { label: label.into(), value, residue, modulus }
}

fn odd(label: &str, value: QPolynomial) -> Qe4Claim {
    claim(format!("{label} odd"), value, q::c(1), q::c(2))
}

/// The congruence claims for one case, as printed.
pub fn qe4_claims(case: Qe4Case) -> Vec<Qe4Claim> {
    use q::*;
    let p3 = phi3();
    let p6 = phi6();
    let p8 = phi8();
    let h = half_cube();
    // unipotent degrees by label
    let c21 = pow(1) * p8.clone();
    let c111 = &(&h * &p6) * &p8;
    let c2_1 = &(&pow(2) * &p3) * &p6;
    let c11_1 = &(&h * &p3) * &p8;
    let c1_2 = c11_1.clone();
    let c1_11 = &(&pow(6) * &p3) * &p6;
    let c_3 = c111.clone();
    let c_21 = pow(7) * p8.clone();
    let c_111 = pow(12);
    let q4 = pow(4);
    match case {
        Qe4Case::QMinus1 => {
            let b = d4minus_table().brauer_degrees();
            let target = (&q4 - &pow(3)).scale(1, 2);
            vec![
                claim("b2 = q^5 + q - 1", b[1].clone(), c(-1), pow(1)),
                claim("b6", b[5].clone(), target.clone(), q4.clone()),
                claim("b7", b[6].clone(), target, q4),
            ]
        }
        Qe4Case::QPlus1 => {
            let b1 = &c2_1 - &c21;
            let b2 = &c_3 - &c(1);
            let b3 = &c_3 - &b1;
            let b4 = &c11_1 - &c2_1;
            let b5 = &c11_1 - &c(1);
            let b7 = &(&c_21 - &c1_11) + &c_3;
            let mut out = vec![
                claim("b1", b1.clone(), -&pow(1), pow(2)),
                claim("b2", b2, c(-1), pow(1)),
                claim("b3", b3.clone(), pow(1), pow(2)),
                claim("b4", b4.clone(), -&pow(2), h.clone()),
                claim("b5", b5, c(-1), pow(1)),
            ];
            for alpha in 0..=2 {
                let b6 = &(&(&(&c1_11 - &c11_1) + &c(1)) - &c_3) - &(&c_3 - &c2_1).scale(alpha, 1);
                out.push(claim(format!("b6 (alpha = {alpha})"), b6, c(1), pow(1)));
            }
            out.push(claim("b7", b7.clone(), h.clone(), pow(3)));
            out.push(claim("b7 (b8 step)", b7.clone(), c(0), h.clone()));
            out.push(claim("b4 (b8 step)", b4.clone(), -&pow(2), h.clone()));
            out.push(claim("b3 (b8 step)", b3.clone(), -&pow(2), h.clone()));
            out.push(claim("b1 (b8 step)", b1.clone(), &pow(2) - &pow(1), h.clone()));
            for alpha in 0..=2 {
                let b8 = &(&(&(&c_111 - &b7.scale(alpha, 1)) - &b4) - &b3) - &b1;
                out.push(claim(format!("b8 (alpha = {alpha})"), b8, &pow(2) + &pow(1), h.clone()));
            }
            out
        }
        Qe4Case::Q2Plus1 => vec![
            odd("b1", &c_3 - &c(1)),
            claim("b2", &c1_11 - &c11_1, -&h, pow(3)),
            claim("b3", &c_21 - &c21, -&pow(1), q4),
            claim("b4", &c_111 - &c111, -&h, pow(3)),
            claim("b5", &c1_2 - &c2_1, -&pow(2), h),
        ],
        Qe4Case::Q2PlusQPlus1 => {
            let b1 = &c21 - &c(1);
            let b3 = &c_21 - &c_3;
            vec![
                odd("b1", b1.clone()),
                odd("b2", &c111 - &b1),
                claim("b3", b3.clone(), -&h, pow(3)),
                claim("b4", &c_111 - &b3, h, pow(3)),
            ]
        }
        Qe4Case::Q2MinusQPlus1 => {
            let b1 = &c1_2 - &c(1);
            let b3 = &c11_1 - &c21;
            vec![
                odd("b1", b1.clone()),
                odd("b2", &c_21 - &b1),
                claim("b3", b3.clone(), -&pow(1), pow(2)),
                claim("b4", &c_111 - &b3, pow(1), pow(2)),
            ]
        }
    }
}

/// Evaluates every printed congruence of one case at `q`.
pub fn qe4_congruences(q: u64, case: Qe4Case) -> Result<Vec<Qe4Verdict>, UnipError> {
    if q % 2 != 0 || q < 4 || !q.is_power_of_two() {
        return Err(UnipError::InvalidInput(format!("q must be a power of 2 with q >= 4, got {q}")));
    }
    qe4_claims(case)
        .into_iter()
        .map(|c| {
            let value = c.value.eval_int(q)?;
            let claimed_residue = c.residue.eval_int(q)?;
            let modulus = c.modulus.eval_int(q)?;
            let actual_residue = value.mod_floor(&modulus);
            let holds = actual_residue == claimed_residue.mod_floor(&modulus);
            Ok(Qe4Verdict { label: c.label, value, claimed_residue, actual_residue, modulus, holds })
        })
        .collect()
}

/// Degree data of `Sp4(q)`, `q` odd.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sp4Degrees {
    pub q: u64,
    /// Ordinary unipotent degrees by name.
    pub unipotent: Vec<(String, BigInt)>,
    /// `(q^2 - 1)/2` and `(q^2 + 1)/2`.
    pub weil: [BigInt; 2],
    /// The liftable Brauer character of the principal block, `q(q-1)^2/2`.
    pub psi: BigInt,
    pub psi_s: BigInt,
    pub psi_t: BigInt,
    /// `psi_st` for `alpha = 1` and `alpha = 2`.
    pub psi_st: [BigInt; 2],
    /// The decomposition parameter for this `q`: 1 when the 3-part of `q + 1` is 3, else 2.
    pub alpha: u32,
}

pub fn sp4_degree_data(q: u64) -> Result<Sp4Degrees, UnipError> {
    if q % 2 == 0 || q < 3 {
        return Err(UnipError::InvalidInput(format!("q must be odd, got {q}")));
    }
    let qi = BigInt::from(q);
    let one = BigInt::one();
    let chi_s: BigInt = &qi * (&qi * &qi + 1) / 2;
    let chi: BigInt = &qi * (&qi - 1) * (&qi - 1) / 2;
    let chi_st: BigInt = qi.pow(4);
    let psi_s: BigInt = &chi_s - &one;
    let psi_st = |alpha: i64| -> BigInt { &chi_st - &one - 2 * &psi_s - BigInt::from(alpha) * &chi };
    let psi_st = [psi_st(1), psi_st(2)];
    let three_part = {
        let mut m = q + 1;
        let mut t = 1;
        while m % 3 == 0 {
            m /= 3;
            t *= 3;
        }
        t
    };
    Ok(Sp4Degrees {
        q,
        unipotent: vec![
            ("1".into(), one.clone()),
            ("chi_s".into(), chi_s.clone()),
            ("chi_t".into(), chi_s.clone()),
            ("chi".into(), chi.clone()),
            ("chi_st".into(), chi_st.clone()),
        ],
        weil: [(&qi * &qi - 1) / 2, (&qi * &qi + 1) / 2],
        psi: chi,
        psi_s: psi_s.clone(),
        psi_t: psi_s,
        psi_st,
        alpha: if three_part == 3 { 1 } else { 2 },
    })
}

/// Convenience: evaluate at `q` and return as `u64` when it fits.
pub fn eval_u64(p: &QPolynomial, q: u64) -> Option<u64> {
    p.eval_int(q).ok()?.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn polynomial_arithmetic() {
        let a = QPolynomial::from_ints(&[1, 1]);
        let b = QPolynomial::from_ints(&[-1, 1]);
        assert_eq!(&a * &b, QPolynomial::from_ints(&[-1, 0, 1]));
        assert_eq!((&a - &a).degree(), None);
        assert_eq!(q::half_cube().eval_int(4).unwrap(), bi(32));
        assert!(q::half_cube().eval_int(3).is_err());
        assert_eq!((q::pow(5) + q::pow(1) - q::c(1)).to_string(), "q^5 + q - 1");
        assert_eq!(q::half_cube().to_string(), "(1/2)q^3");
    }

    #[test]
    fn hook_examples() {
        assert_eq!(hook_degree(3, 1, 2).unwrap(), BigUint::from(6u32));
        assert_eq!(hook_degree(3, 0, 5).unwrap(), BigUint::one());
        assert_eq!(hook_degree(5, 1, 2).unwrap(), BigUint::from(30u32));
        assert!(hook_degree(3, 2, 2).is_err());
    }

    #[test]
    fn peel_examples() {
        let r = peel_reduction(3, 1, 7).unwrap();
        assert_eq!((r.chi, r.bound), (BigUint::from(56u32), BigUint::from(55u32)));
        let r = peel_reduction(5, 1, 4).unwrap();
        assert_eq!(r.bound, hook_degree(5, 1, 4).unwrap() - 1u32);
        let r = peel_reduction(3, 1, 4).unwrap();
        assert_eq!((r.chi, r.bound), (BigUint::from(20u32), BigUint::from(19u32)));
    }

    #[test]
    fn peel_bound_matches_closed_form() {
        for d in [3u32, 5, 7] {
            for j in 1..=d - 2 {
                for q in [4u64, 7, 8, 13] {
                    assert_eq!(peel_reduction(d, j, q).unwrap().bound, peel_bound_closed_form(d, j, q));
                }
            }
        }
    }

    #[test]
    fn table_degrees() {
        let t = d4minus_table();
        let deg = |l: &str| t.ordinary.iter().find(|r| r.0 == l).unwrap().1.eval_int(4).unwrap();
        assert_eq!(deg("21."), bi(1028));
        assert_eq!(deg(".1^3"), bi(16_777_216));
        let b = t.brauer_degrees();
        assert_eq!(b[1], q::pow(5) + q::pow(1) - q::c(1));
        for beta in &b {
            assert!(beta.half_integral());
        }
    }

    #[test]
    fn table_render_has_all_rows() {
        let s = d4minus_table().render();
        assert_eq!(s.lines().count(), 11);
        assert!(s.lines().nth(2).unwrap().contains("21."));
    }

    #[test]
    fn qe4_sample_claims() {
        let v = qe4_congruences(4, Qe4Case::QMinus1).unwrap();
        assert_eq!(v[0].value, bi(1027));
        assert!(v[0].holds);
        let v = qe4_congruences(4, Qe4Case::Q2Plus1).unwrap();
        assert!(v.iter().find(|c| c.label == "b3").unwrap().holds);
        let v = qe4_congruences(8, Qe4Case::Q2PlusQPlus1).unwrap();
        assert!(v.iter().find(|c| c.label == "b3").unwrap().holds);
        assert!(qe4_congruences(6, Qe4Case::QPlus1).is_err());
    }

    #[test]
    fn sp4_examples() {
        let d = sp4_degree_data(3).unwrap();
        assert_eq!(d.unipotent[4].1, bi(81));
        assert_eq!(d.unipotent[1].1, bi(15));
        assert_eq!(d.weil, [bi(4), bi(5)]);
        assert_eq!(d.alpha, 2);
        let d = sp4_degree_data(5).unwrap();
        assert_eq!(d.psi_s, bi(64));
        assert_eq!(d.alpha, 1);
        assert!(d.psi_st.iter().all(|x| x.is_positive()));
    }
}
