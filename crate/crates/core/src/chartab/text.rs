//! Line-oriented text format for character tables.
//!
//! ```text
//! # chartab v1
//! group SL2(4)
//! order 60
//! exponent 30
//! classes 5
//! class 0 repr 0 size 1 order 1 power 0
//! ...
//! characters 5
//! character 0 degree 1 values 1 | 1 0 | ...
//! ```
//!
//! Each value is the eigenvalue multiplicity vector over the class's element order.

use std::fmt::Write as _;
use std::path::Path;

use super::{ChartabError, Character, CharacterTable, CyclotomicValue};
use crate::ffgrp::{ClassData, ClassInfo};

pub const SCHEMA_HEADER: &str = "# chartab v1";

pub fn render_table(t: &CharacterTable) -> String {
    let mut out = String::new();
    let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
    writeln!(out, "{SCHEMA_HEADER}").unwrap();
    writeln!(out, "group {}", t.group).unwrap();
    writeln!(out, "order {}", t.order).unwrap();
    writeln!(out, "exponent {}", t.exponent).unwrap();
    writeln!(out, "classes {}", t.classes.len()).unwrap();
    for (i, c) in t.classes.classes.iter().enumerate() {
        let pm: Vec<u64> = c.power_map.iter().map(|&x| x as u64).collect();
        writeln!(out, "class {i} repr {} size {} order {} power {}", c.repr, c.size, c.order, join(&pm)).unwrap();
    }
    writeln!(out, "characters {}", t.characters.len()).unwrap();
    for (i, ch) in t.characters.iter().enumerate() {
        let vals: Vec<String> = ch.values.iter().map(|v| join(&v.n)).collect();
        writeln!(out, "character {i} degree {} values {}", ch.degree, vals.join(" | ")).unwrap();
    }
    out
}

struct Lines<'a> {
    iter: std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>,
}

impl<'a> Lines<'a> {
    fn next(&mut self, what: &str) -> Result<(usize, &'a str), ChartabError> {
        loop {
            match self.iter.next() {
                Some((i, l)) if l.trim().is_empty() || l.starts_with('#') => {
                    let _ = i;
                }
                Some((i, l)) => return Ok((i + 1, l)),
                None => return Err(ChartabError::Schema { line: 0, message: format!("unexpected end of input, wanted {what}") }),
            }
        }
    }
}

fn schema(line: usize, message: impl Into<String>) -> ChartabError {
    ChartabError::Schema { line, message: message.into() }
}

fn keyed<'a>(line: usize, text: &'a str, key: &str) -> Result<&'a str, ChartabError> {
    text.strip_prefix(key)
        .and_then(|rest| rest.strip_prefix(' '))
        .ok_or_else(|| schema(line, format!("expected `{key} ...`")))
}

fn number<T: std::str::FromStr>(line: usize, s: &str) -> Result<T, ChartabError> {
    s.parse().map_err(|_| schema(line, format!("not a number: `{s}`")))
}

fn numbers(line: usize, s: &str) -> Result<Vec<u64>, ChartabError> {
    s.split_whitespace().map(|x| number(line, x)).collect()
}

/// Parses without validating.
pub fn parse_table(text: &str) -> Result<CharacterTable, ChartabError> {
    if text.lines().next().map(str::trim_end) != Some(SCHEMA_HEADER) {
        return Err(schema(1, format!("missing header `{SCHEMA_HEADER}`")));
    }
    let mut lines = Lines { iter: text.lines().enumerate().peekable() };
    let (l, s) = lines.next("group")?;
    let group = keyed(l, s, "group")?.to_string();
    let (l, s) = lines.next("order")?;
    let order: u64 = number(l, keyed(l, s, "order")?)?;
    let (l, s) = lines.next("exponent")?;
    let exponent: u64 = number(l, keyed(l, s, "exponent")?)?;
    let (l, s) = lines.next("classes")?;
    let class_count: usize = number(l, keyed(l, s, "classes")?)?;
    let mut classes = Vec::with_capacity(class_count);
    for i in 0..class_count {
        let (l, s) = lines.next("class")?;
        let f: Vec<&str> = s.split_whitespace().collect();
        if f.len() < 9 || f[0] != "class" || f[2] != "repr" || f[4] != "size" || f[6] != "order" || f[8] != "power" {
            return Err(schema(l, "expected `class <i> repr <hex> size <n> order <m> power <...>`"));
        }
        if number::<usize>(l, f[1])? != i {
            return Err(schema(l, format!("class index {} out of sequence", f[1])));
        }
        let power_map = f[9..].iter().map(|x| number::<u32>(l, x)).collect::<Result<Vec<_>, _>>()?;
        if power_map.iter().any(|&x| x as usize >= class_count) {
            return Err(schema(l, "power map refers to a missing class"));
        }
        let order: u64 = number(l, f[7])?;
        if order == 0 {
            return Err(schema(l, "element order 0"));
        }
        classes.push(ClassInfo { repr: f[3].to_string(), size: number(l, f[5])?, order, power_map });
    }
    let (l, s) = lines.next("characters")?;
    let char_count: usize = number(l, keyed(l, s, "characters")?)?;
    let mut characters = Vec::with_capacity(char_count);
    for i in 0..char_count {
        let (l, s) = lines.next("character")?;
        let (head, vals) = s.split_once(" values ").ok_or_else(|| schema(l, "missing `values`"))?;
        let f: Vec<&str> = head.split_whitespace().collect();
        if f.len() != 4 || f[0] != "character" || f[2] != "degree" {
            return Err(schema(l, "expected `character <i> degree <d> values ...`"));
        }
        if number::<usize>(l, f[1])? != i {
            return Err(schema(l, format!("character index {} out of sequence", f[1])));
        }
        let values = vals
            .split('|')
            .map(|v| numbers(l, v).map(|n| CyclotomicValue { n }))
            .collect::<Result<Vec<_>, _>>()?;
        characters.push(Character { degree: number(l, f[3])?, values });
    }
    if let Ok((l, _)) = lines.next("end") {
        return Err(schema(l, "trailing content"));
    }
    Ok(CharacterTable {
        group,
        order,
        exponent,
        classes: ClassData { group_order: order, classes, membership: Vec::new() },
        characters,
    })
}

/// Reads, parses and validates a table file.
pub fn ingest_table(path: &Path) -> Result<CharacterTable, ChartabError> {
    let text = std::fs::read_to_string(path).map_err(|e| ChartabError::Io(format!("{}: {e}", path.display())))?;
    let t = parse_table(&text)?;
    t.validate()?;
    Ok(t)
}
