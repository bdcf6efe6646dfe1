//! Predicted minimal-polynomial degrees of p-elements when Sylow p-subgroups
//! are cyclic.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{self, gcd3, phi_eval};
use crate::lie::{self, Family, GroupSpec, LieError, SylowReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("unknown exceptional cover: {0}")]
    UnknownCover(String),
    #[error("class function is not constant off the identity")]
    NotConstant,
    #[error("not a character: {0}")]
    NotACharacter(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CaseTag {
    #[serde(rename = "B_a")]
    Ba,
    #[serde(rename = "B_b")]
    Bb,
    #[serde(rename = "B_c")]
    Bc,
    #[serde(rename = "B_d")]
    Bd,
    #[serde(rename = "B_e")]
    Be,
    #[serde(rename = "B_f")]
    Bf,
    #[serde(rename = "B_g")]
    Bg,
    #[serde(rename = "M9T_i")]
    M9tI,
    #[serde(rename = "M9T_ii")]
    M9tII,
    #[serde(rename = "M9T_iii")]
    M9tIII,
    #[serde(rename = "M9T_iv")]
    M9tIV,
    #[serde(rename = "M9T_v")]
    M9tV,
    #[serde(rename = "M9T_vi")]
    M9tVI,
    #[serde(rename = "M9T_vii")]
    M9tVII,
    #[serde(rename = "M9T_viii")]
    M9tVIII,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseTag::Ba => "B_a",
            CaseTag::Bb => "B_b",
            CaseTag::Bc => "B_c",
            CaseTag::Bd => "B_d",
            CaseTag::Be => "B_e",
            CaseTag::Bf => "B_f",
            CaseTag::Bg => "B_g",
            CaseTag::M9tI => "M9T_i",
            CaseTag::M9tII => "M9T_ii",
            CaseTag::M9tIII => "M9T_iii",
            CaseTag::M9tIV => "M9T_iv",
            CaseTag::M9tV => "M9T_v",
            CaseTag::M9tVI => "M9T_vi",
            CaseTag::M9tVII => "M9T_vii",
            CaseTag::M9tVIII => "M9T_viii",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub name: String,
    pub holds: bool,
}

fn cond(name: impl Into<String>, holds: bool) -> Condition {
    Condition { name: name.into(), holds }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum InapplicableReason {
    NonCyclicSylow,
    DefiningCharacteristic,
    PEqualsEll,
    EllEqualsDefining,
    /// Rank-one groups are outside the theorem's scope.
    ExcludedFamily,
    /// Solvable or non-perfect small cases.
    NotQuasisimple,
    /// `p` does not divide `|G|`, so there are no nontrivial p-elements.
    NoPElements,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Outcome {
    FullDegreeOnly {
        /// The template that was tried, if any, with its evaluated predicates.
        considered: Option<CaseTag>,
        conditions: Vec<Condition>,
        note: Option<String>,
    },
    ExceptionalPossible {
        case_tag: CaseTag,
        exceptional_order: BigUint,
        conditions: Vec<Condition>,
        generator_only: bool,
        /// Required representation dimension, when the case pins it.
        dimension_constraint: Option<BigUint>,
    },
    Inapplicable {
        reason: InapplicableReason,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub group: String,
    pub p: u64,
    pub ell: u64,
    pub sylow_cyclic: bool,
    pub sylow: Option<SylowReport>,
    /// Possible orders of p-elements: the divisors of the Sylow p-order.
    pub g_order_divisors: Vec<BigUint>,
    pub outcome: Outcome,
}

impl Classification {
    pub fn exceptional(&self) -> Option<(CaseTag, &BigUint)> {
        match &self.outcome {
            Outcome::ExceptionalPossible { case_tag, exceptional_order, .. } => {
                Some((*case_tag, exceptional_order))
            }
            _ => None,
        }
    }

    pub fn is_full_degree_only(&self) -> bool {
        matches!(self.outcome, Outcome::FullDegreeOnly { .. })
    }
}

/// Which power of `q` enters the gcd term of the unitary case.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum UnitaryGcdExponent {
    /// `q^{n/d} + 1` when `d | n`; otherwise (never integral for `j = 1`)
    /// falls back to `q^{(n-j)/d} + 1`.
    #[default]
    Verbatim,
    /// Always `q^{(n-j)/d} + 1`, matching the torus the element lives in.
    Parallel,
}

impl FromStr for UnitaryGcdExponent {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "verbatim" => Ok(UnitaryGcdExponent::Verbatim),
            "parallel" => Ok(UnitaryGcdExponent::Parallel),
            other => Err(format!("unknown exponent mode {other}")),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyOptions {
    pub unitary_gcd_exponent: UnitaryGcdExponent,
}

/// `Some((d, a))` when `m = d^a` with `d` an odd prime and `a >= 1`.
pub fn odd_prime_power(m: u64) -> Option<(u64, u32)> {
    if m < 3 || m % 2 == 0 {
        return None;
    }
    let (d, a) = lie::prime_power(m)?;
    Some((d, a))
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn divides(d: u64, m: &BigUint) -> bool {
    (m % d).is_zero()
}

struct Template {
    tag: CaseTag,
    order: BigUint,
    conditions: Vec<Condition>,
    dimension_constraint: Option<BigUint>,
}

fn not_quasisimple(spec: &GroupSpec) -> bool {
    matches!(
        (spec.family, spec.n, spec.q),
        (Family::SU, 3, 2)
            | (Family::Sp, 2, 2)
            | (Family::SpinOdd, 2, 2)
            | (Family::G2, _, 2)
            | (Family::TwoB2, _, 2)
            | (Family::TwoG2, _, 3)
            | (Family::TwoF4, _, 2)
    )
}

fn rank_one(spec: &GroupSpec) -> bool {
    matches!(
        (spec.family, spec.n),
        (Family::SL, 2) | (Family::SU, 2) | (Family::Sp, 1) | (Family::SpinMinus, 2)
    )
}

pub fn classify(spec: &GroupSpec, p: u64, ell: u64) -> Result<Classification, ClassifyError> {
    classify_with(spec, p, ell, &ClassifyOptions::default())
}

pub fn classify_with(
    spec: &GroupSpec,
    p: u64,
    ell: u64,
    opts: &ClassifyOptions,
) -> Result<Classification, ClassifyError> {
    let mut out = Classification {
        group: spec.to_string(),
        p,
        ell,
        sylow_cyclic: false,
        sylow: None,
        g_order_divisors: Vec::new(),
        outcome: Outcome::Inapplicable { reason: InapplicableReason::DefiningCharacteristic },
    };
    if !arith::is_prime_u64(p) {
        return Err(ClassifyError::InvalidInput(format!("{p} is not prime")));
    }
    let inapplicable = |mut out: Classification, reason| {
        out.outcome = Outcome::Inapplicable { reason };
        Ok(out)
    };
    if p == spec.r {
        return inapplicable(out, InapplicableReason::DefiningCharacteristic);
    }
    if ell != 0 && ell == spec.r {
        return inapplicable(out, InapplicableReason::EllEqualsDefining);
    }
    if p == ell {
        return inapplicable(out, InapplicableReason::PEqualsEll);
    }
    let sylow = lie::cyclic_sylow(spec, p)?;
    out.sylow_cyclic = sylow.cyclic;
    let k = arith::valuation(&sylow.p_part, &big(p));
    out.g_order_divisors = (0..=k).map(|i| big(p).pow(i)).collect();
    let p_part = sylow.p_part.clone();
    out.sylow = Some(sylow);
    if rank_one(spec) {
        return inapplicable(out, InapplicableReason::ExcludedFamily);
    }
    if not_quasisimple(spec) {
        return inapplicable(out, InapplicableReason::NotQuasisimple);
    }
    if !out.sylow_cyclic {
        return inapplicable(out, InapplicableReason::NonCyclicSylow);
    }
    if p_part.is_one() {
        return inapplicable(out, InapplicableReason::NoPElements);
    }
    out.outcome = match template(spec, p, ell, &p_part, opts) {
        Refinement::None(note) => Outcome::FullDegreeOnly { considered: None, conditions: vec![], note },
        Refinement::Full(t, note) => {
            Outcome::FullDegreeOnly { considered: Some(t.tag), conditions: t.conditions, note: Some(note) }
        }
        Refinement::Template(t) => {
            if t.conditions.iter().all(|c| c.holds) {
                Outcome::ExceptionalPossible {
                    case_tag: t.tag,
                    exceptional_order: t.order,
                    conditions: t.conditions,
                    generator_only: true,
                    dimension_constraint: t.dimension_constraint,
                }
            } else {
                Outcome::FullDegreeOnly { considered: Some(t.tag), conditions: t.conditions, note: None }
            }
        }
    };
    Ok(out)
}

enum Refinement {
    None(Option<String>),
    Template(Template),
    /// A template whose shape matches but a refinement forces full degree.
    Full(Template, String),
}

fn template(spec: &GroupSpec, p: u64, ell: u64, p_part: &BigUint, opts: &ClassifyOptions) -> Refinement {
    let q = spec.q;
    let qb = big(q);
    let n = spec.n as u64;
    let sylow_is = |x: &BigUint| cond(format!("Sylow {p}-order {p_part} equals exceptional order {x}"), x == p_part);
    match spec.family {
        Family::SL => {
            if n.is_power_of_two() {
                return Refinement::None(Some("n is a power of 2: the symplectic-type case does not occur".into()));
            }
            let Some((d, _)) = odd_prime_power(n) else {
                return Refinement::None(None);
            };
            let m = qb.pow((n / d) as u32) - 1u32;
            let x = (qb.pow(n as u32) - 1u32) / &m;
            let conditions = vec![
                cond(format!("n = {n} is a power of the odd prime {d}"), true),
                cond(format!("p = {p} > n = {n}"), p > n),
                cond(format!("{d} does not divide q^(n/d) - 1 = {m}"), !divides(d, &m)),
                sylow_is(&x),
            ];
            Refinement::Template(Template { tag: CaseTag::Ba, order: x, conditions, dimension_constraint: None })
        }
        Family::SU => {
            let j = if n % 2 == 1 { 0 } else { 1 };
            let m = n - j;
            let Some((d, _)) = odd_prime_power(m) else {
                return Refinement::None(None);
            };
            let base = qb.pow((m / d) as u32) + 1u32;
            let gcd_exp = match opts.unitary_gcd_exponent {
                UnitaryGcdExponent::Verbatim if n % d == 0 => n / d,
                _ => m / d,
            };
            let gcd_arg = qb.pow(gcd_exp as u32) + 1u32;
            let g = gcd3(d, ell, &gcd_arg);
            let x = (qb.pow(m as u32) + 1u32) / (&base * g);
            let disjunction = !divides(d, &base) || (d == ell && divides(ell, &base));
            let mut conditions = vec![
                cond(format!("n - j = {m} is a power of the odd prime {d} (j = {j})"), true),
                cond(format!("p = {p} > n = {n}"), p > n),
                cond(
                    format!("{d} does not divide q^((n-j)/d) + 1 = {base}, or d = ell divides it"),
                    disjunction,
                ),
                sylow_is(&x),
            ];
            if gcd_exp != n / d || n % d != 0 {
                conditions.push(cond(format!("gcd term evaluated at q^{gcd_exp} + 1"), true));
            }
            let t = Template { tag: CaseTag::Bb, order: x, conditions, dimension_constraint: None };
            if n == 4 {
                return Refinement::Full(t, "SU4: every nontrivial representation has full degree".into());
            }
            Refinement::Template(t)
        }
        Family::SpinMinus | Family::SpinOdd | Family::SpinPlus => {
            let nn = if spec.family == Family::SpinPlus { n - 1 } else { n };
            let Some((d, _)) = odd_prime_power(nn).filter(|_| nn > 3) else {
                return Refinement::None(None);
            };
            let base = qb.pow((nn / d) as u32) + 1u32;
            let g = gcd3(d, ell, &base);
            let x = (qb.pow(nn as u32) + 1u32) / (&base * g);
            let disjunction = !divides(d, &base) || (d == ell && divides(ell, &base));
            let conditions = vec![
                cond(format!("n = {nn} > 3 is a power of the odd prime {d}"), true),
                cond(format!("{d} does not divide q^(n/d) + 1 = {base}, or d = ell divides it"), disjunction),
                sylow_is(&x),
            ];
            Refinement::Template(Template { tag: CaseTag::Bc, order: x, conditions, dimension_constraint: None })
        }
        Family::Sp => {
            if q % 2 == 0 || !n.is_power_of_two() {
                return Refinement::None(None);
            }
            let qn1 = qb.pow(n as u32) + 1u32;
            let half = &qn1 / 2u32;
            let alt_41 = ell == 2 && (q, n) == (3, 4);
            let alt_fermat = ell == 2 && n > 2 && (q - 1).is_power_of_two() && q - 1 >= 4;
            let mut conditions = vec![cond("q odd", true), cond(format!("n = {n} is a power of 2"), true)];
            let (order, dimension_constraint) = if alt_41 {
                conditions.push(cond("ell = 2 and (q, n, |g|) = (3, 4, 41)", true));
                (big(41), None)
            } else if alt_fermat && &half != p_part {
                // the order is not pinned; any Sylow generator of the q^n + 1 torus
                conditions.push(cond("ell = 2, n > 2 and q - 1 = 2^a >= 4", true));
                conditions.push(cond(format!("p = {p} divides q^n + 1 = {qn1}"), divides(p, &qn1)));
                (p_part.clone(), None)
            } else {
                conditions.push(cond(format!("|g| = (q^n + 1)/2 = {half}"), true));
                (half.clone(), Some((qb.pow(n as u32) - 1u32) / 2u32))
            };
            conditions.push(sylow_is(&order));
            Refinement::Template(Template { tag: CaseTag::Bd, order, conditions, dimension_constraint })
        }
        Family::E6 => {
            let x = phi_eval(9, q);
            let conditions = vec![cond("3 does not divide q - 1", (q - 1) % 3 != 0), sylow_is(&x)];
            Refinement::Template(Template { tag: CaseTag::Be, order: x, conditions, dimension_constraint: None })
        }
        Family::TwistedE6 | Family::E7 => {
            let x = phi_eval(18, q);
            if spec.family == Family::E7 && &x != p_part {
                // E7 also carries Phi_9; only the Phi_18 torus is exceptional
                return Refinement::None(None);
            }
            let conditions = vec![cond("3 does not divide q + 1", (q + 1) % 3 != 0), sylow_is(&x)];
            Refinement::Template(Template { tag: CaseTag::Bf, order: x, conditions, dimension_constraint: None })
        }
        Family::E8 => {
            let candidates = [15u64, 20, 30];
            let Some(&i) = candidates.iter().find(|&&i| &phi_eval(i, q) == p_part) else {
                return Refinement::None(None);
            };
            let x = phi_eval(i, q);
            let mut conditions = vec![cond(format!("|g| = Phi_{i}(q) = {x}"), true), sylow_is(&x)];
            if i == 20 {
                let q2 = q * q + 1;
                conditions.push(cond(
                    format!("5 does not divide q^2 + 1 = {q2}, or ell = 5 divides it"),
                    q2 % 5 != 0 || ell == 5,
                ));
            }
            Refinement::Template(Template { tag: CaseTag::Bg, order: x, conditions, dimension_constraint: None })
        }
        _ => Refinement::None(Some(format!("no exceptional template for {}", spec.family))),
    }
}

/// Exceptional covers with a sub-|g| minimal polynomial degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ExceptionalCover {
    TwoSL2_4,
    TwoSL3_2,
    ThreePSL2_9,
    ThreePSU4_3,
    SixPSU4_3,
    TwoSp6_2,
    TwoG2_4,
    TwoSz8,
}

impl ExceptionalCover {
    pub const ALL: [ExceptionalCover; 8] = [
        ExceptionalCover::TwoSL2_4,
        ExceptionalCover::TwoSL3_2,
        ExceptionalCover::ThreePSL2_9,
        ExceptionalCover::ThreePSU4_3,
        ExceptionalCover::SixPSU4_3,
        ExceptionalCover::TwoSp6_2,
        ExceptionalCover::TwoG2_4,
        ExceptionalCover::TwoSz8,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExceptionalCover::TwoSL2_4 => "2.SL2(4)",
            ExceptionalCover::TwoSL3_2 => "2.SL3(2)",
            ExceptionalCover::ThreePSL2_9 => "3.PSL2(9)",
            ExceptionalCover::ThreePSU4_3 => "3.PSU4(3)",
            ExceptionalCover::SixPSU4_3 => "6.PSU4(3)",
            ExceptionalCover::TwoSp6_2 => "2.Sp6(2)",
            ExceptionalCover::TwoG2_4 => "2.G2(4)",
            ExceptionalCover::TwoSz8 => "2.Sz(8)",
        }
    }

    pub fn tag(self) -> CaseTag {
        match self {
            ExceptionalCover::TwoSL2_4 => CaseTag::M9tI,
            ExceptionalCover::TwoSL3_2 => CaseTag::M9tII,
            ExceptionalCover::ThreePSL2_9 => CaseTag::M9tIII,
            ExceptionalCover::ThreePSU4_3 => CaseTag::M9tIV,
            ExceptionalCover::SixPSU4_3 => CaseTag::M9tV,
            ExceptionalCover::TwoSp6_2 => CaseTag::M9tVI,
            ExceptionalCover::TwoG2_4 => CaseTag::M9tVII,
            ExceptionalCover::TwoSz8 => CaseTag::M9tVIII,
        }
    }

    /// The simple quotient as listed in the cover registry.
    pub fn quotient(self) -> &'static str {
        match self {
            ExceptionalCover::TwoSL2_4 => "SL2(4)",
            ExceptionalCover::TwoSL3_2 => "SL3(2)",
            ExceptionalCover::ThreePSL2_9 => "PSL2(9)",
            ExceptionalCover::ThreePSU4_3 | ExceptionalCover::SixPSU4_3 => "PSU4(3)",
            ExceptionalCover::TwoSp6_2 => "Sp6(2)",
            ExceptionalCover::TwoG2_4 => "G2(4)",
            ExceptionalCover::TwoSz8 => "2B2(8)",
        }
    }
}

impl fmt::Display for ExceptionalCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExceptionalCover {
    type Err = ClassifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = |x: &str| {
            x.chars()
                .filter(|c| !c.is_whitespace() && !matches!(c, '.' | '·' | '_'))
                .flat_map(char::to_lowercase)
                .collect::<String>()
        };
        let key = norm(s);
        Self::ALL
            .into_iter()
            .find(|c| norm(c.name()) == key || (*c == ExceptionalCover::TwoSz8 && key == "22b2(8)"))
            .ok_or_else(|| ClassifyError::UnknownCover(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum EllRule {
    Any,
    Not(&'static [u64]),
    Is(u64),
}

impl EllRule {
    fn admits(&self, ell: u64) -> bool {
        match self {
            EllRule::Any => true,
            EllRule::Not(bad) => !bad.contains(&ell),
            EllRule::Is(v) => ell == *v,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverDegree {
    pub g_order: u64,
    pub dim: u64,
    pub degree: u64,
}

fn m9t_rows(cover: ExceptionalCover) -> Vec<(EllRule, CoverDegree)> {
    let row = |g_order, dim, degree| CoverDegree { g_order, dim, degree };
    match cover {
        ExceptionalCover::TwoSL2_4 => vec![
            (EllRule::Not(&[2]), row(3, 2, 2)),
            (EllRule::Not(&[2]), row(5, 2, 2)),
            (EllRule::Not(&[2]), row(5, 4, 4)),
        ],
        ExceptionalCover::TwoSL3_2 => vec![(EllRule::Is(7), row(3, 2, 2)), (EllRule::Not(&[2]), row(7, 4, 4))],
        ExceptionalCover::ThreePSL2_9 => {
            vec![(EllRule::Not(&[3]), row(4, 3, 3)), (EllRule::Not(&[3]), row(5, 3, 3))]
        }
        ExceptionalCover::ThreePSU4_3 => vec![(EllRule::Is(2), row(7, 6, 6))],
        ExceptionalCover::SixPSU4_3 => vec![(EllRule::Not(&[2, 3]), row(7, 6, 6))],
        ExceptionalCover::TwoSp6_2 => vec![(EllRule::Not(&[2]), row(5, 8, 4))],
        ExceptionalCover::TwoG2_4 => vec![(EllRule::Any, row(7, 12, 6)), (EllRule::Any, row(13, 12, 12))],
        ExceptionalCover::TwoSz8 => vec![(EllRule::Is(5), row(13, 8, 8))],
    }
}

fn prime_of(n: u64) -> u64 {
    lie::prime_power(n).map(|(p, _)| p).unwrap_or(n)
}

/// Entries `(|g|, dim, deg)` with `deg < |g|` admitted for characteristic `ell`.
pub fn m9t_lookup(cover: ExceptionalCover, ell: u64) -> Vec<CoverDegree> {
    m9t_rows(cover)
        .into_iter()
        .filter(|(rule, r)| rule.admits(ell) && prime_of(r.g_order) != ell)
        .map(|(_, r)| r)
        .collect()
}

pub fn m9t_lookup_by_name(cover: &str, ell: u64) -> Result<Vec<CoverDegree>, ClassifyError> {
    Ok(m9t_lookup(cover.parse()?, ell))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HhsVerdict {
    pub full_degree: bool,
    pub reduced_degree: bool,
    /// `(p, n - t)` with `|b| = p^(n-t) + 1`, when the reduced shape applies.
    pub required_shape: Option<(u64, u32)>,
}

/// Minimal polynomial degree of `b` acting on an extraspecial normal
/// subgroup of order `p^(2n+1)` with `|C_W(b)| = p^(2t)`: reduced to
/// `|b| - 1` only when `|b| = p^(n-t) + 1`.
pub fn hhs_case(b_order: u64, p: u64, n: u32, t: u32) -> Result<HhsVerdict, ClassifyError> {
    if t >= n {
        return Err(ClassifyError::InvalidInput(format!("need t < n, got t = {t}, n = {n}")));
    }
    let shape = big(p).pow(n - t) + 1u32;
    let reduced = big(b_order) == shape;
    Ok(HhsVerdict {
        full_degree: !reduced,
        reduced_degree: reduced,
        required_shape: reduced.then_some((p, n - t)),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionDecomposition {
    /// Multiplicity of the regular character of `A`.
    pub m: BigInt,
    /// Multiplicity of the trivial character added on top.
    pub c: BigInt,
    /// On a subgroup `B` of the given index: `chi|_B = rho_B + residual`, with
    /// `residual = regular_left * rho_B + c * 1_B`.
    pub regular_left: BigInt,
}

/// Writes a class function of a cyclic group `A`, constant off the identity,
/// as `m * rho_A + c * 1_A`. `values` is keyed by element order.
pub fn restriction_decomposition(
    a_order: u64,
    values: &BTreeMap<u64, BigInt>,
    subgroup_index: u64,
) -> Result<RestrictionDecomposition, ClassifyError> {
    if subgroup_index < 2 || a_order % subgroup_index != 0 {
        return Err(ClassifyError::InvalidInput(format!(
            "subgroup index {subgroup_index} must be at least 2 and divide {a_order}"
        )));
    }
    let degree = values
        .get(&1)
        .ok_or_else(|| ClassifyError::InvalidInput("missing identity value".into()))?;
    let mut off = values.iter().filter(|(o, _)| **o != 1).map(|(_, v)| v);
    let c = off.next().cloned().unwrap_or_else(|| degree.clone());
    if off.any(|v| *v != c) {
        return Err(ClassifyError::NotConstant);
    }
    let (m, rem) = (degree - &c).div_rem(&BigInt::from(a_order));
    if !rem.is_zero() {
        return Err(ClassifyError::NotACharacter(format!("chi(1) - c = {} not divisible by |A|", degree - &c)));
    }
    if !m.is_positive() {
        return Err(ClassifyError::NotACharacter("kernel is all of A".into()));
    }
    if (&m + &c).is_negative() {
        return Err(ClassifyError::NotACharacter(format!("trivial multiplicity m + c = {} < 0", &m + &c)));
    }
    let regular_left: BigInt = BigInt::from(subgroup_index) * &m - 1;
    if (&regular_left + &c).is_negative() {
        return Err(ClassifyError::NotACharacter("restriction residual is not a character".into()));
    }
    Ok(RestrictionDecomposition { m, c, regular_left })
}

/// Class function values of `m * rho_A + c * 1_A`, keyed by element order.
pub fn reconstruct(a_order: u64, d: &RestrictionDecomposition) -> BTreeMap<u64, BigInt> {
    arith::divisors(a_order)
        .into_iter()
        .map(|o| {
            let v = if o == 1 { &d.m * BigInt::from(a_order) + &d.c } else { d.c.clone() };
            (o, v)
        })
        .collect()
}

/// Numeric helper for report writers.
pub fn order_as_u64(x: &BigUint) -> Option<u64> {
    x.to_u64()
}
