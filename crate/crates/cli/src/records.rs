//! Output records. Big integers are rendered as decimal strings so the JSON
//! stays readable; the schemas live in `docs/schemas`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use minpoly_core::classify::{self, Classification, ExceptionalCover, Outcome};
use minpoly_core::lie::{self, Table3Row};
use minpoly_core::oracle::VerificationReport;
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct ConditionRecord {
    pub name: String,
    pub holds: bool,
}

#[derive(Debug, Serialize)]
pub struct ClassifyRecord {
    pub group: String,
    pub p: u64,
    pub ell: u64,
    pub sylow_cyclic: bool,
    pub sylow_order: Option<String>,
    pub torus_witness: Option<String>,
    /// `FullDegreeOnly`, `ExceptionalPossible` or `Inapplicable`.
    pub outcome: String,
    pub case_tag: Option<String>,
    pub exceptional_order: Option<String>,
    pub generator_only: Option<bool>,
    pub dimension_constraint: Option<String>,
    pub reason: Option<String>,
    pub note: Option<String>,
    pub conditions: Vec<ConditionRecord>,
}

impl From<&Classification> for ClassifyRecord {
    fn from(c: &Classification) -> Self {
        let mut rec = ClassifyRecord {
            group: c.group.clone(),
            p: c.p,
            ell: c.ell,
            sylow_cyclic: c.sylow_cyclic,
            sylow_order: c.sylow.as_ref().map(|s| s.p_part.to_string()),
            torus_witness: c.sylow.as_ref().and_then(|s| s.witness_torus_order.as_ref()).map(ToString::to_string),
            outcome: String::new(),
            case_tag: None,
            exceptional_order: None,
            generator_only: None,
            dimension_constraint: None,
            reason: None,
            note: None,
            conditions: Vec::new(),
        };
        let conds = |v: &[classify::Condition]| {
            v.iter().map(|c| ConditionRecord { name: c.name.clone(), holds: c.holds }).collect()
        };
        match &c.outcome {
            Outcome::FullDegreeOnly { considered, conditions, note } => {
                rec.outcome = "FullDegreeOnly".into();
                rec.case_tag = considered.map(|t| t.to_string());
                rec.note = note.clone();
                rec.conditions = conds(conditions);
            }
            Outcome::ExceptionalPossible {
                case_tag,
                exceptional_order,
                conditions,
                generator_only,
                dimension_constraint,
            } => {
                rec.outcome = "ExceptionalPossible".into();
                rec.case_tag = Some(case_tag.to_string());
                rec.exceptional_order = Some(exceptional_order.to_string());
                rec.generator_only = Some(*generator_only);
                rec.dimension_constraint = dimension_constraint.as_ref().map(ToString::to_string);
                rec.conditions = conds(conditions);
            }
            Outcome::Inapplicable { reason } => {
                rec.outcome = "Inapplicable".into();
                rec.reason = Some(format!("{reason:?}"));
            }
        }
        rec
    }
}

fn opt(v: &Option<String>) -> String {
    v.clone().unwrap_or_default()
}

impl ClassifyRecord {
    pub const CSV_HEADER: [&'static str; 10] = [
        "group",
        "p",
        "ell",
        "sylow_cyclic",
        "outcome",
        "case_tag",
        "exceptional_order",
        "dimension_constraint",
        "reason",
        "conditions",
    ];

    pub fn csv_row(&self) -> Vec<String> {
        let conds: Vec<String> = self.conditions.iter().map(|c| format!("{}={}", c.name, c.holds)).collect();
        vec![
            self.group.clone(),
            self.p.to_string(),
            self.ell.to_string(),
            self.sylow_cyclic.to_string(),
            self.outcome.clone(),
            opt(&self.case_tag),
            opt(&self.exceptional_order),
            opt(&self.dimension_constraint),
            opt(&self.reason),
            conds.join(";"),
        ]
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "group {}  p = {}  ell = {}", self.group, self.p, self.ell).unwrap();
        writeln!(out, "sylow cyclic: {}", self.sylow_cyclic).unwrap();
        if let Some(s) = &self.sylow_order {
            writeln!(out, "sylow order: {s}").unwrap();
        }
        if let Some(t) = &self.torus_witness {
            writeln!(out, "torus witness: {t}").unwrap();
        }
        let mut head = self.outcome.clone();
        match (&self.case_tag, &self.exceptional_order, &self.reason) {
            (Some(tag), Some(order), _) => write!(head, "({tag}, {order})").unwrap(),
            (Some(tag), None, _) => write!(head, " (considered {tag})").unwrap(),
            (_, _, Some(r)) => write!(head, "({r})").unwrap(),
            _ => {}
        }
        writeln!(out, "outcome: {head}").unwrap();
        if let Some(d) = &self.dimension_constraint {
            writeln!(out, "dimension: {d}").unwrap();
        }
        if self.generator_only == Some(true) {
            writeln!(out, "only on Sylow generators").unwrap();
        }
        if let Some(n) = &self.note {
            writeln!(out, "note: {n}").unwrap();
        }
        for c in &self.conditions {
            writeln!(out, "  [{}] {}", if c.holds { "x" } else { " " }, c.name).unwrap();
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct Table3Record {
    pub family: String,
    pub indices: Vec<u64>,
    pub skipped: Vec<u64>,
    pub witnesses: BTreeMap<u64, String>,
    pub matches_reference: bool,
}

impl From<&Table3Row> for Table3Record {
    fn from(r: &Table3Row) -> Self {
        Table3Record {
            family: r.family.to_string(),
            indices: r.indices.iter().copied().collect(),
            skipped: r.skipped.iter().copied().collect(),
            witnesses: r.witnesses.iter().map(|(i, p)| (*i, p.to_string())).collect(),
            matches_reference: r.matches_reference(),
        }
    }
}

fn join<T: ToString>(v: impl IntoIterator<Item = T>, sep: &str) -> String {
    v.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

impl Table3Record {
    pub const CSV_HEADER: [&'static str; 5] = ["family", "indices", "skipped", "witnesses", "matches_reference"];

    fn witness_list(&self) -> String {
        join(self.witnesses.iter().map(|(i, p)| format!("{i}:{p}")), ";")
    }

    pub fn csv_row(&self) -> Vec<String> {
        vec![
            self.family.clone(),
            join(&self.indices, ";"),
            join(&self.skipped, ";"),
            self.witness_list(),
            self.matches_reference.to_string(),
        ]
    }
}

pub fn render_table3(q: u64, recs: &[Table3Record]) -> String {
    let mut out = format!("q = {q}\n");
    writeln!(out, "{:<6} {:<26} {:<10} {:<64} match", "group", "i (cyclic Sylow)", "skipped", "witness primes").unwrap();
    for r in recs {
        writeln!(
            out,
            "{:<6} {:<26} {:<10} {:<64} {}",
            r.family,
            join(&r.indices, ","),
            join(&r.skipped, ","),
            r.witness_list(),
            if r.matches_reference { "ok" } else { "MISMATCH" }
        )
        .unwrap();
    }
    out
}

pub const VERIFY_CSV_HEADER: [&str; 11] = [
    "group",
    "p",
    "character",
    "degree",
    "class",
    "element_order",
    "sylow_generator",
    "minpoly_degree",
    "predicted",
    "multiplicities",
    "verdict",
];

pub fn verify_csv_rows(r: &VerificationReport) -> Vec<Vec<String>> {
    r.records
        .iter()
        .map(|x| {
            vec![
                r.group.clone(),
                r.p.to_string(),
                x.character.to_string(),
                x.degree.to_string(),
                x.class.to_string(),
                x.element_order.to_string(),
                x.sylow_generator.to_string(),
                x.minpoly_degree.to_string(),
                join(&x.predicted, ";"),
                join(&x.multiplicities, " "),
                x.verdict.to_string(),
            ]
        })
        .collect()
}

#[derive(Debug, Serialize)]
pub struct CoverRow {
    pub g_order: u64,
    pub dim: u64,
    pub degree: u64,
}

#[derive(Debug, Serialize)]
pub struct RegistryEntry {
    pub quotient: String,
    pub center: String,
    pub primes: Vec<u64>,
}

#[derive(Debug, Serialize)]
pub struct CoverEntry {
    pub cover: String,
    pub case_tag: String,
    pub rows: Vec<CoverRow>,
}

#[derive(Debug, Serialize)]
pub struct Registry {
    pub ell: u64,
    pub simple_groups: Vec<RegistryEntry>,
    pub covers: Vec<CoverEntry>,
}

pub fn registry(ell: u64) -> Registry {
    Registry {
        ell,
        simple_groups: lie::exceptional_cover_registry()
            .into_iter()
            .map(|e| RegistryEntry { quotient: e.quotient, center: e.center, primes: e.primes })
            .collect(),
        covers: ExceptionalCover::ALL
            .into_iter()
            .map(|c| CoverEntry {
                cover: c.name().to_string(),
                case_tag: c.tag().to_string(),
                rows: classify::m9t_lookup(c, ell)
                    .into_iter()
                    .map(|r| CoverRow { g_order: r.g_order, dim: r.dim, degree: r.degree })
                    .collect(),
            })
            .collect(),
    }
}

pub fn render_registry(reg: &Registry) -> String {
    let mut out = String::from("simple groups with exceptional multiplier\n");
    for e in &reg.simple_groups {
        writeln!(out, "  {:<12} center {:<8} cyclic Sylow p in {{{}}}", e.quotient, e.center, join(&e.primes, ",")).unwrap();
    }
    writeln!(out, "covers with deg < |g| (ell = {})", reg.ell).unwrap();
    for c in &reg.covers {
        let rows = join(c.rows.iter().map(|r| format!("|g|={} dim={} deg={}", r.g_order, r.dim, r.degree)), "; ");
        writeln!(out, "  {:<10} {:<9} {}", c.cover, c.case_tag, if rows.is_empty() { "-".into() } else { rows }).unwrap();
    }
    out
}

pub const REGISTRY_CSV_HEADER: [&str; 5] = ["kind", "name", "center_or_tag", "primes", "rows"];

pub fn registry_csv_rows(reg: &Registry) -> Vec<Vec<String>> {
    let simple = reg.simple_groups.iter().map(|e| {
        vec!["simple".into(), e.quotient.clone(), e.center.clone(), join(&e.primes, ";"), String::new()]
    });
    let covers = reg.covers.iter().map(|c| {
        let rows = join(c.rows.iter().map(|r| format!("{}:{}:{}", r.g_order, r.dim, r.degree)), ";");
        vec!["cover".into(), c.cover.clone(), c.case_tag.clone(), String::new(), rows]
    });
    simple.chain(covers).collect()
}
