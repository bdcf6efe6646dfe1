//! Minimal polynomial degrees read off exact character tables, and a harness
//! comparing them with the classifier's predictions.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::{self, Write as _};
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::is_prime_u64;
use crate::chartab::{self, CharacterTable, ChartabError, Reducer};
use crate::classify::{self, Classification, ClassifyError, CoverDegree, ExceptionalCover, Outcome};
use crate::ffgrp::{self, FfError};
use crate::lie::{Family, GroupSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("character {character}, class {class}: multiplicity of zeta^{j} is not a non-negative integer")]
    NonIntegralMultiplicity { character: usize, class: usize, j: usize },
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("Sylow {p}-subgroup of {group} is not cyclic")]
    NonCyclicSylow { group: String, p: u64 },
    #[error("p = {p} is the defining characteristic of {group}")]
    DefiningCharacteristic { group: String, p: u64 },
    #[error("no matrix model for {0}")]
    NoModel(String),
    #[error(transparent)]
    Group(#[from] FfError),
    #[error(transparent)]
    Table(#[from] ChartabError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenvalueProfile {
    pub element_order: u64,
    /// `multiplicities[j]` is the multiplicity of `zeta_m^j` as an eigenvalue.
    pub multiplicities: Vec<u64>,
    pub minpoly_degree: u64,
}

/// Eigenvalue multiplicities of `chi` on class `class` by Fourier inversion:
/// `m_j = (1/m) sum_k chi(g^k) zeta_m^{-jk}`, evaluated in `Z[zeta_m]`.
pub fn eigenvalue_profile(table: &CharacterTable, chi: usize, class: usize) -> Result<EigenvalueProfile, OracleError> {
    let ch = table
        .characters
        .get(chi)
        .ok_or_else(|| OracleError::OutOfRange(format!("character {chi} of {}", table.characters.len())))?;
    if class >= table.classes.len() {
        return Err(OracleError::OutOfRange(format!("class {class} of {}", table.classes.len())));
    }
    let data = &table.classes;
    let m = data.classes[class].order as usize;
    let red = Reducer::new(m as u64);
    let bad = |j| OracleError::NonIntegralMultiplicity { character: chi, class, j };
    let mut multiplicities = Vec::with_capacity(m);
    for j in 0..m {
        let mut acc = vec![0i128; m];
        for k in 0..m {
            let v = &ch.values[data.power(class, k as i64)];
            let o = v.n.len();
            if o == 0 || m % o != 0 {
                return Err(bad(j));
            }
            let shift = m - j * k % m;
            for (i, &c) in v.n.iter().enumerate() {
                if c != 0 {
                    acc[(i * (m / o) + shift) % m] += c as i128;
                }
            }
        }
        let s = red.as_integer(&acc).ok_or_else(|| bad(j))?;
        let (q, r) = s.div_rem(&(m as i128));
        if r != 0 || q < 0 {
            return Err(bad(j));
        }
        multiplicities.push(q as u64);
    }
    if multiplicities.iter().sum::<u64>() != ch.degree {
        return Err(bad(0));
    }
    let minpoly_degree = multiplicities.iter().filter(|&&x| x > 0).count() as u64;
    Ok(EigenvalueProfile { element_order: m as u64, multiplicities, minpoly_degree })
}

/// True iff every character of degree `(q^2 - 1)/2` has no eigenvalue 1 on
/// `class` and every other `|g|`-th root of unity as an eigenvalue.
pub fn weil_profile_check(table: &CharacterTable, class: usize, q: u64) -> bool {
    let d = (q * q - 1) / 2;
    table.characters.iter().enumerate().filter(|(_, c)| c.degree == d).all(|(i, _)| {
        eigenvalue_profile(table, i, class)
            .map(|p| p.multiplicities[0] == 0 && p.multiplicities[1..].iter().all(|&x| x >= 1))
            .unwrap_or(false)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnownAnomaly {
    pub group: String,
    pub p: u64,
    pub dims: Vec<u64>,
    pub justification: String,
}

#[derive(Deserialize)]
struct AnomalyFile {
    version: u32,
    anomaly: Vec<KnownAnomaly>,
}

pub const KNOWN_ANOMALIES_VERSION: u32 = 1;
const KNOWN_ANOMALIES_TOML: &str = include_str!("../data/known_anomalies.toml");

pub fn known_anomalies() -> &'static [KnownAnomaly] {
    static LIST: OnceLock<Vec<KnownAnomaly>> = OnceLock::new();
    LIST.get_or_init(|| {
        let file: AnomalyFile = toml::from_str(KNOWN_ANOMALIES_TOML).expect("shipped anomaly list parses");
        assert_eq!(file.version, KNOWN_ANOMALIES_VERSION, "anomaly list version");
        file.anomaly
    })
}

fn known_anomaly(group: &str, p: u64, dim: u64) -> Option<&'static KnownAnomaly> {
    known_anomalies().iter().find(|a| a.group == group && a.p == p && a.dims.contains(&dim))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Conforms,
    ExceptionalAttained,
    KnownAnomaly,
    Anomaly,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Conforms => "Conforms",
            Verdict::ExceptionalAttained => "ExceptionalAttained",
            Verdict::KnownAnomaly => "KnownAnomaly",
            Verdict::Anomaly => "Anomaly",
        })
    }
}

/// What a table is checked against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    Spec(GroupSpec),
    /// Built through an isomorphic matrix group; only the 2-fold covers
    /// 2.SL2(4) = SL2(5) and 2.SL3(2) = SL2(7) have one here.
    Cover(ExceptionalCover),
    /// No prediction: only full degree conforms.
    Unclassified(String),
}

impl Target {
    /// Cover names first, then `SLn(q)`, `SUn(q)`, `Sp2n(q)`.
    pub fn parse(name: &str) -> Target {
        if let Ok(c) = name.parse::<ExceptionalCover>() {
            return Target::Cover(c);
        }
        parse_classical(name).map_or_else(|| Target::Unclassified(name.to_string()), Target::Spec)
    }

    pub fn label(&self) -> String {
        match self {
            Target::Spec(s) => s.to_string(),
            Target::Cover(c) => c.name().to_string(),
            Target::Unclassified(s) => s.clone(),
        }
    }

    pub fn model(&self) -> Result<GroupSpec, OracleError> {
        match self {
            Target::Spec(s) => Ok(s.clone()),
            Target::Cover(ExceptionalCover::TwoSL2_4) => Ok(GroupSpec::sl(2, 5)),
            Target::Cover(ExceptionalCover::TwoSL3_2) => Ok(GroupSpec::sl(2, 7)),
            other => Err(OracleError::NoModel(other.label())),
        }
    }

    fn quotient(cover: ExceptionalCover) -> Option<GroupSpec> {
        match cover {
            ExceptionalCover::TwoSL2_4 => Some(GroupSpec::sl(2, 4)),
            ExceptionalCover::TwoSL3_2 => Some(GroupSpec::sl(3, 2)),
            _ => None,
        }
    }
}

fn parse_classical(name: &str) -> Option<GroupSpec> {
    let (family, rest) = [("SL", Family::SL), ("SU", Family::SU), ("Sp", Family::Sp)]
        .into_iter()
        .find_map(|(pre, fam)| name.strip_prefix(pre).map(|r| (fam, r)))?;
    let (n, q) = rest.strip_suffix(')')?.split_once('(')?;
    let (n, q): (u32, u64) = (n.parse().ok()?, q.parse().ok()?);
    let n = if family == Family::Sp {
        if n % 2 == 1 {
            return None;
        }
        n / 2
    } else {
        n
    };
    GroupSpec::new(family, n, q).ok()
}

enum Predictor {
    Spec(Classification),
    Cover { rows: Vec<CoverDegree>, quotient: Classification },
    None,
}

impl Predictor {
    fn describe(&self) -> String {
        fn outcome(c: &Classification) -> String {
            match &c.outcome {
                Outcome::FullDegreeOnly { .. } => "FullDegreeOnly".into(),
                Outcome::ExceptionalPossible { case_tag, exceptional_order, dimension_constraint, .. } => {
                    let dim = dimension_constraint.as_ref().map(|d| format!(", dim {d}")).unwrap_or_default();
                    format!("ExceptionalPossible({case_tag}, |g| = {exceptional_order}{dim})")
                }
                Outcome::Inapplicable { reason } => format!("Inapplicable({reason:?})"),
            }
        }
        match self {
            Predictor::Spec(c) => outcome(c),
            Predictor::Cover { rows, quotient } => {
                let rows: Vec<String> =
                    rows.iter().map(|r| format!("(|g| {}, dim {}, deg {})", r.g_order, r.dim, r.degree)).collect();
                format!("faithful: [{}]; quotient {}: {}", rows.join(", "), quotient.group, outcome(quotient))
            }
            Predictor::None => "none".into(),
        }
    }

    /// Degrees the prediction admits for a character of degree `dim` on an
    /// element of order `m`.
    fn allowed(&self, dim: u64, faithful: bool, m: u64, generator: bool) -> BTreeSet<u64> {
        let from_classification = |c: &Classification, set: &mut BTreeSet<u64>| {
            if let Outcome::ExceptionalPossible { exceptional_order, dimension_constraint, .. } = &c.outcome {
                let dim_ok = dimension_constraint.as_ref().map_or(true, |d| *d == BigUint::from(dim));
                if generator && dim_ok && *exceptional_order == BigUint::from(m) {
                    set.insert(m - 1);
                }
            }
        };
        let mut set = BTreeSet::from([m]);
        match self {
            Predictor::Spec(c) => from_classification(c, &mut set),
            Predictor::Cover { rows, quotient } => {
                if faithful {
                    set.extend(rows.iter().filter(|r| r.g_order == m && r.dim == dim).map(|r| r.degree));
                } else {
                    from_classification(quotient, &mut set);
                }
            }
            Predictor::None => {}
        }
        set
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub character: usize,
    pub degree: u64,
    pub class: usize,
    pub element_order: u64,
    /// The element generates a Sylow p-subgroup.
    pub sylow_generator: bool,
    pub multiplicities: Vec<u64>,
    pub minpoly_degree: u64,
    pub predicted: Vec<u64>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationSummary {
    pub records: usize,
    pub conforms: usize,
    pub exceptional_attained: usize,
    pub known_anomalies: usize,
    pub anomalies: usize,
    /// Profiles of `g` and `g^k`, `k` prime to `|g|`, are related by `j -> jk`.
    pub galois_consistent: bool,
    /// Profiles with no eigenvalue 1 and every other root present.
    pub restriction_checks: usize,
    /// Each of those restricts to `<g>` as `m rho - m 1`.
    pub restriction_consistent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub group: String,
    pub p: u64,
    pub order: u64,
    pub sylow_order: u64,
    pub prediction: String,
    pub records: Vec<VerificationRecord>,
    pub summary: VerificationSummary,
}

impl VerificationReport {
    pub fn has_unknown_anomaly(&self) -> bool {
        self.summary.anomalies > 0 || !self.summary.galois_consistent || !self.summary.restriction_consistent
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let s = &self.summary;
        writeln!(out, "group {}  |G| = {}  p = {}  |P| = {}", self.group, self.order, self.p, self.sylow_order).unwrap();
        writeln!(out, "prediction: {}", self.prediction).unwrap();
        writeln!(out, "{:>5} {:>6} {:>5} {:>4} {:>3} {:>5} {:>10}  verdict", "chi", "chi(1)", "class", "|g|", "gen", "deg", "allowed")
            .unwrap();
        for r in &self.records {
            let allowed: Vec<String> = r.predicted.iter().map(u64::to_string).collect();
            writeln!(
                out,
                "{:>5} {:>6} {:>5} {:>4} {:>3} {:>5} {:>10}  {}",
                r.character,
                r.degree,
                r.class,
                r.element_order,
                if r.sylow_generator { "y" } else { "n" },
                r.minpoly_degree,
                allowed.join(","),
                r.verdict
            )
            .unwrap();
        }
        writeln!(
            out,
            "records {}: conforms {}, exceptional {}, known anomalies {}, anomalies {}",
            s.records, s.conforms, s.exceptional_attained, s.known_anomalies, s.anomalies
        )
        .unwrap();
        writeln!(
            out,
            "galois consistent: {}; restriction checks {} consistent: {}",
            s.galois_consistent, s.restriction_checks, s.restriction_consistent
        )
        .unwrap();
        out
    }
}

fn p_part(mut n: u64, p: u64) -> u64 {
    let mut out = 1;
    while n % p == 0 {
        n /= p;
        out *= p;
    }
    out
}

fn is_p_power(mut m: u64, p: u64) -> bool {
    while m % p == 0 {
        m /= p;
    }
    m == 1
}

pub fn verify_group(target: &Target, p: u64) -> Result<VerificationReport, OracleError> {
    verify_group_with(target, p, chartab::DEFAULT_SEED)
}

/// Builds the group, computes its table and checks every nontrivial character
/// on every nontrivial p-element class.
pub fn verify_group_with(target: &Target, p: u64, seed: u64) -> Result<VerificationReport, OracleError> {
    let spec = target.model()?;
    let g = ffgrp::build_group(&spec)?;
    if !is_prime_u64(p) {
        return Err(OracleError::NotPrime(p));
    }
    if !ffgrp::sylow_is_cyclic_bruteforce(&g, p) {
        return Err(OracleError::NonCyclicSylow { group: target.label(), p });
    }
    let mut table = chartab::dixon_table_with(&g, seed)?;
    table.group = target.label();
    verify_table(&table, p, target)
}

/// Checks a validated table against the prediction for `target`.
pub fn verify_table(table: &CharacterTable, p: u64, target: &Target) -> Result<VerificationReport, OracleError> {
    if !is_prime_u64(p) {
        return Err(OracleError::NotPrime(p));
    }
    let label = target.label();
    let sylow_order = p_part(table.order, p);
    let data = &table.classes;
    if !data.classes.iter().any(|c| c.order == sylow_order) {
        return Err(OracleError::NonCyclicSylow { group: label, p });
    }
    let predictor = match target {
        Target::Spec(s) => {
            if s.r == p {
                return Err(OracleError::DefiningCharacteristic { group: label, p });
            }
            Predictor::Spec(classify::classify(s, p, 0)?)
        }
        Target::Cover(c) => {
            let quo = Target::quotient(*c).ok_or_else(|| OracleError::NoModel(label.clone()))?;
            if quo.r == p {
                return Err(OracleError::DefiningCharacteristic { group: label, p });
            }
            Predictor::Cover { rows: classify::m9t_lookup(*c, 0), quotient: classify::classify(&quo, p, 0)? }
        }
        Target::Unclassified(_) => Predictor::None,
    };

    let trivial = table.trivial_index();
    let chars: Vec<usize> = (0..table.characters.len()).filter(|&i| Some(i) != trivial).collect();
    let classes: Vec<usize> = (1..data.len()).filter(|&c| is_p_power(data.classes[c].order, p)).collect();
    let central: Vec<usize> = (1..data.len()).filter(|&c| data.classes[c].size == 1).collect();
    let faithful: Vec<bool> = table
        .characters
        .iter()
        .map(|ch| central.iter().any(|&z| ch.values[z].as_integer() != Some(ch.degree as i128)))
        .collect();

    let pairs: Vec<(usize, usize)> = chars.iter().flat_map(|&i| classes.iter().map(move |&c| (i, c))).collect();
    let profiles: Vec<EigenvalueProfile> =
        pairs.par_iter().map(|&(i, c)| eigenvalue_profile(table, i, c)).collect::<Result<_, _>>()?;

    let records: Vec<VerificationRecord> = pairs
        .iter()
        .zip(&profiles)
        .map(|(&(i, c), prof)| {
            let degree = table.characters[i].degree;
            let m = prof.element_order;
            let generator = m == sylow_order;
            let allowed = predictor.allowed(degree, faithful[i], m, generator);
            let md = prof.minpoly_degree;
            let verdict = if md == m {
                Verdict::Conforms
            } else if allowed.contains(&md) {
                Verdict::ExceptionalAttained
            } else if known_anomaly(&label, p, degree).is_some() {
                Verdict::KnownAnomaly
            } else {
                Verdict::Anomaly
            };
            VerificationRecord {
                character: i,
                degree,
                class: c,
                element_order: m,
                sylow_generator: generator,
                multiplicities: prof.multiplicities.clone(),
                minpoly_degree: md,
                predicted: allowed.into_iter().collect(),
                verdict,
            }
        })
        .collect();

    let lookup: HashMap<(usize, usize), &EigenvalueProfile> = pairs.iter().copied().zip(&profiles).collect();
    let galois_consistent = pairs.iter().zip(&profiles).all(|(&(i, c), prof)| {
        let m = prof.element_order;
        (2..m).filter(|k| k.gcd(&m) == 1).all(|k| {
            let image = lookup[&(i, data.power(c, k as i64))];
            (0..m).all(|j| image.multiplicities[(j * k % m) as usize] == prof.multiplicities[j as usize])
        })
    });

    let mut restriction_checks = 0;
    let mut restriction_consistent = true;
    for (&(i, c), prof) in pairs.iter().zip(&profiles) {
        let mult = &prof.multiplicities;
        if mult[0] != 0 || mult[1..].iter().any(|&x| x == 0) {
            continue;
        }
        restriction_checks += 1;
        let m = prof.element_order;
        let values: Option<BTreeMap<u64, BigInt>> = crate::arith::divisors(m)
            .into_iter()
            .map(|o| table.characters[i].values[data.power(c, (m / o) as i64)].as_integer().map(|v| (o, BigInt::from(v))))
            .collect();
        let ok = values
            .and_then(|v| classify::restriction_decomposition(m, &v, p).ok())
            .is_some_and(|d| d.c == -d.m);
        restriction_consistent &= ok;
    }

    let count = |v: Verdict| records.iter().filter(|r| r.verdict == v).count();
    let summary = VerificationSummary {
        records: records.len(),
        conforms: count(Verdict::Conforms),
        exceptional_attained: count(Verdict::ExceptionalAttained),
        known_anomalies: count(Verdict::KnownAnomaly),
        anomalies: count(Verdict::Anomaly),
        galois_consistent,
        restriction_checks,
        restriction_consistent,
    };
    Ok(VerificationReport {
        group: label,
        p,
        order: table.order,
        sylow_order,
        prediction: predictor.describe(),
        records,
        summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(spec: GroupSpec) -> CharacterTable {
        chartab::dixon_table(&ffgrp::build_group(&spec).unwrap()).unwrap()
    }

    fn class_of_order(t: &CharacterTable, m: u64) -> usize {
        t.classes.classes.iter().position(|c| c.order == m).unwrap()
    }

    #[test]
    fn trivial_and_kernel_profiles() {
        let t = table(GroupSpec::sl(2, 5));
        let triv = t.trivial_index().unwrap();
        for c in 0..t.class_count() {
            let p = eigenvalue_profile(&t, triv, c).unwrap();
            assert_eq!(p.minpoly_degree, 1);
            assert_eq!(p.multiplicities[0], 1);
        }
        // -1 is central of order 2; it lies in the kernel of the characters of A5
        let z = t.classes.classes.iter().position(|c| c.order == 2 && c.size == 1).unwrap();
        for (i, ch) in t.characters.iter().enumerate() {
            let p = eigenvalue_profile(&t, i, z).unwrap();
            if ch.values[z].as_integer() == Some(ch.degree as i128) {
                assert_eq!(p.multiplicities, vec![ch.degree, 0]);
            } else {
                assert_eq!(p.multiplicities, vec![0, ch.degree]);
            }
        }
    }

    #[test]
    fn two_dimensional_on_order_five() {
        let t = table(GroupSpec::sl(2, 5));
        let c = class_of_order(&t, 5);
        let two = t.characters.iter().position(|ch| ch.degree == 2).unwrap();
        assert_eq!(eigenvalue_profile(&t, two, c).unwrap().minpoly_degree, 2);
    }

    #[test]
    fn steinberg_like_profile_of_sl3_3() {
        let t = table(GroupSpec::sl(3, 3));
        let c = class_of_order(&t, 13);
        let twelve: Vec<usize> = (0..t.characters.len()).filter(|&i| t.characters[i].degree == 12).collect();
        assert!(!twelve.is_empty());
        let unip = twelve
            .iter()
            .map(|&i| eigenvalue_profile(&t, i, c).unwrap())
            .find(|p| p.minpoly_degree == 12)
            .expect("a degree-12 character attains 12");
        let mut expect = vec![1u64; 13];
        expect[0] = 0;
        assert_eq!(unip.multiplicities, expect);
    }

    #[test]
    fn weil_profiles() {
        let t = table(GroupSpec::sp(2, 3));
        assert!(weil_profile_check(&t, class_of_order(&t, 5), 3));
        let t = table(GroupSpec::sl(2, 9));
        assert!(weil_profile_check(&t, class_of_order(&t, 5), 3));
        // the trivial character never has degree (q^2 - 1)/2, so q = 1 is vacuous
        assert!(weil_profile_check(&t, class_of_order(&t, 5), 1));
    }

    #[test]
    fn shipped_anomalies_parse() {
        let list = known_anomalies();
        assert!(list.iter().any(|a| a.group == "SL3(2)" && a.p == 7 && a.dims == [3]));
        assert!(list.iter().all(|a| a.justification.contains("A1(q)")));
    }

    #[test]
    fn sl3_2_at_seven_is_known() {
        let r = verify_group(&Target::Spec(GroupSpec::sl(3, 2)), 7).unwrap();
        assert!(!r.has_unknown_anomaly());
        assert!(r.records.iter().filter(|x| x.degree == 3).all(|x| x.verdict == Verdict::KnownAnomaly));
        assert!(r.records.iter().any(|x| x.verdict == Verdict::ExceptionalAttained));
    }

    #[test]
    fn sp4_3_weil_characters_attain() {
        let r = verify_group(&Target::Spec(GroupSpec::sp(2, 3)), 5).unwrap();
        assert_eq!(r.summary.anomalies + r.summary.known_anomalies, 0);
        for x in &r.records {
            let expect = if x.degree == 4 { Verdict::ExceptionalAttained } else { Verdict::Conforms };
            assert_eq!(x.verdict, expect, "{x:?}");
        }
        assert!(r.summary.galois_consistent && r.summary.restriction_consistent);
        assert!(r.summary.restriction_checks > 0);
    }

    #[test]
    fn cover_of_sl3_2() {
        let r = verify_group(&Target::parse("2.SL3(2)"), 7).unwrap();
        assert!(!r.has_unknown_anomaly(), "{}", r.render_text());
        assert!(r.records.iter().filter(|x| x.degree == 4).all(|x| x.minpoly_degree == 4));
    }

    #[test]
    fn rejects_defining_characteristic_and_names() {
        let t = table(GroupSpec::sl(2, 5));
        assert!(matches!(
            verify_table(&t, 5, &Target::Spec(GroupSpec::sl(2, 5))),
            Err(OracleError::DefiningCharacteristic { .. })
        ));
        assert_eq!(Target::parse("Sp4(3)"), Target::Spec(GroupSpec::sp(2, 3)));
        assert_eq!(Target::parse("SU3(3)"), Target::Spec(GroupSpec::su(3, 3)));
        assert_eq!(Target::parse("Sp3(3)"), Target::Unclassified("Sp3(3)".into()));
    }
}
