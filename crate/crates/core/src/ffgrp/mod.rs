//! Concrete matrix groups over small finite fields, enumerated element by element.

mod classes;
pub mod field;

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lie::{Family, GroupSpec, LieError};

pub use classes::{conjugacy_classes, p_element_classes, sylow_is_cyclic_bruteforce, ClassData, ClassInfo};
pub use field::FiniteField;

/// Groups are only enumerated up to this many elements.
pub const ELEMENT_CAP: u64 = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FfError {
    #[error("size bound exceeded: {0}")]
    SizeBound(String),
    #[error("{group}: generated {found} elements, expected {expected}")]
    GenerationMismatch { group: String, expected: BigUint, found: u64 },
    #[error("unsupported family {0} for matrix construction")]
    UnsupportedFamily(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Lie(#[from] LieError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupLabel {
    Standard(GroupSpec),
    FreeForm(String),
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupLabel::Standard(s) => s.fmt(f),
            GroupLabel::FreeForm(s) => f.write_str(s),
        }
    }
}

/// The bilinear or sesquilinear form a group is required to preserve.
#[derive(Debug, Clone)]
pub enum Form {
    None,
    Alternating(Vec<u32>),
    /// Gram matrix and the Frobenius exponent `q` of the involution `x -> x^q`.
    Hermitian(Vec<u32>, u64),
}

/// `n x n` matrices over `GF(q)`, packed row-major into a `u128` with the first
/// entry in the most significant position, so integer order is lexicographic.
#[derive(Debug, Clone)]
pub struct MatrixSpace {
    field: Arc<FiniteField>,
    n: usize,
    bits: u32,
}

impl MatrixSpace {
    pub fn new(field: Arc<FiniteField>, n: usize) -> Result<Self, FfError> {
        let bits = 32 - (field.order() - 1).leading_zeros();
        if n == 0 || (n * n) as u32 * bits > 128 {
            return Err(FfError::SizeBound(format!("{n}x{n} matrices over GF({}) do not fit a 128-bit key", field.order())));
        }
        Ok(MatrixSpace { field, n, bits })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Hex digits in a canonical key rendering.
    pub fn key_width(&self) -> usize {
        ((self.n * self.n) as u32 * self.bits).div_ceil(4) as usize
    }

    pub fn encode(&self, m: &[u32]) -> u128 {
        m.iter().fold(0u128, |acc, &x| (acc << self.bits) | x as u128)
    }

    pub fn decode(&self, key: u128) -> Vec<u32> {
        let mask = (1u128 << self.bits) - 1;
        let len = self.n * self.n;
        (0..len).map(|i| ((key >> ((len - 1 - i) as u32 * self.bits)) & mask) as u32).collect()
    }

    pub fn identity(&self) -> Vec<u32> {
        let mut m = vec![0; self.n * self.n];
        for i in 0..self.n {
            m[i * self.n + i] = 1;
        }
        m
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let (n, k) = (self.n, &self.field);
        let mut out = vec![0u32; n * n];
        for i in 0..n {
            for l in 0..n {
                let x = a[i * n + l];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    let y = b[l * n + j];
                    if y != 0 {
                        out[i * n + j] = k.add(out[i * n + j], k.mul(x, y));
                    }
                }
            }
        }
        out
    }

    pub fn mul_keys(&self, a: u128, b: u128) -> u128 {
        self.encode(&self.mul(&self.decode(a), &self.decode(b)))
    }

    pub fn transpose(&self, a: &[u32]) -> Vec<u32> {
        let n = self.n;
        (0..n * n).map(|idx| a[(idx % n) * n + idx / n]).collect()
    }

    /// Entries reversed in both indices: conjugation by the antidiagonal permutation.
    pub fn reverse(&self, a: &[u32]) -> Vec<u32> {
        a.iter().rev().copied().collect()
    }

    pub fn frobenius(&self, a: &[u32], e: u64) -> Vec<u32> {
        a.iter().map(|&x| self.field.pow(x, e)).collect()
    }

    /// Gaussian elimination; returns `(det, inverse)`.
    fn eliminate(&self, a: &[u32]) -> (u32, Option<Vec<u32>>) {
        let (n, k) = (self.n, &self.field);
        let mut m = a.to_vec();
        let mut inv = self.identity();
        let mut det = 1u32;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| m[r * n + col] != 0) else {
                return (0, None);
            };
            if piv != col {
                for j in 0..n {
                    m.swap(piv * n + j, col * n + j);
                    inv.swap(piv * n + j, col * n + j);
                }
                det = k.neg(det);
            }
            let p = m[col * n + col];
            det = k.mul(det, p);
            let pinv = k.inv(p).expect("nonzero pivot");
            for j in 0..n {
                m[col * n + j] = k.mul(m[col * n + j], pinv);
                inv[col * n + j] = k.mul(inv[col * n + j], pinv);
            }
            for r in 0..n {
                let factor = m[r * n + col];
                if r == col || factor == 0 {
                    continue;
                }
                for j in 0..n {
                    m[r * n + j] = k.sub(m[r * n + j], k.mul(factor, m[col * n + j]));
                    inv[r * n + j] = k.sub(inv[r * n + j], k.mul(factor, inv[col * n + j]));
                }
            }
        }
        (det, Some(inv))
    }

    pub fn det(&self, a: &[u32]) -> u32 {
        self.eliminate(a).0
    }

    pub fn inverse(&self, a: &[u32]) -> Option<Vec<u32>> {
        self.eliminate(a).1
    }

    /// Multiplicative order of an invertible matrix.
    pub fn order_of(&self, a: &[u32]) -> u64 {
        let id = self.identity();
        let mut cur = a.to_vec();
        let mut k = 1;
        while cur != id {
            cur = self.mul(&cur, a);
            k += 1;
        }
        k
    }

    pub fn preserves(&self, form: &Form, g: &[u32]) -> bool {
        match form {
            Form::None => true,
            Form::Alternating(j) => self.mul(&self.mul(&self.transpose(g), j), g) == *j,
            Form::Hermitian(j, e) => self.mul(&self.mul(&self.transpose(g), j), &self.frobenius(g, *e)) == *j,
        }
    }
}

/// An explicitly enumerated matrix group.
#[derive(Debug)]
pub struct MatGroup {
    label: GroupLabel,
    space: MatrixSpace,
    form: Form,
    generators: Vec<u128>,
    /// Sorted element keys.
    elements: Vec<u128>,
    index: HashMap<u128, u32>,
    classes: OnceLock<ClassData>,
}

impl MatGroup {
    pub fn label(&self) -> &GroupLabel {
        &self.label
    }

    pub fn name(&self) -> String {
        self.label.to_string()
    }

    pub fn space(&self) -> &MatrixSpace {
        &self.space
    }

    pub fn form(&self) -> &Form {
        &self.form
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn generators(&self) -> &[u128] {
        &self.generators
    }

    pub fn elements(&self) -> &[u128] {
        &self.elements
    }

    pub fn index_of(&self, key: u128) -> Option<usize> {
        self.index.get(&key).map(|&i| i as usize)
    }

    pub fn contains(&self, key: u128) -> bool {
        self.index.contains_key(&key)
    }

    pub fn identity(&self) -> u128 {
        self.space.encode(&self.space.identity())
    }

    pub fn mul(&self, a: u128, b: u128) -> u128 {
        self.space.mul_keys(a, b)
    }

    pub fn inverse(&self, a: u128) -> u128 {
        let m = self.space.inverse(&self.space.decode(a)).expect("group elements are invertible");
        self.space.encode(&m)
    }

    pub fn element_order(&self, a: u128) -> u64 {
        self.space.order_of(&self.space.decode(a))
    }

    /// Group elements satisfy the defining identities: determinant 1 and the form.
    pub fn is_member_matrix(&self, m: &[u32]) -> bool {
        self.space.det(m) == 1 && self.space.preserves(&self.form, m)
    }

    /// Conjugacy classes, computed once.
    pub fn classes(&self) -> &ClassData {
        self.classes.get_or_init(|| classes::compute(self))
    }

    /// Closure of `generators` by breadth-first multiplication.
    pub fn from_generators(
        label: GroupLabel,
        space: MatrixSpace,
        form: Form,
        generators: Vec<Vec<u32>>,
        cap: u64,
    ) -> Result<MatGroup, FfError> {
        for g in &generators {
            if space.det(g) == 0 {
                return Err(FfError::InvalidInput(format!("{label}: singular generator")));
            }
        }
        let gens: Vec<u128> = generators.iter().map(|g| space.encode(g)).collect();
        let elements = closure(&space, &gens, cap).ok_or_else(|| {
            FfError::SizeBound(format!("{label}: more than {cap} elements"))
        })?;
        let index = elements.iter().enumerate().map(|(i, &k)| (k, i as u32)).collect();
        Ok(MatGroup { label, space, form, generators: gens, elements, index, classes: OnceLock::new() })
    }
}

/// Sorted closure of `gens` containing the identity, or `None` past `cap`.
fn closure(space: &MatrixSpace, gens: &[u128], cap: u64) -> Option<Vec<u128>> {
    let id = space.encode(&space.identity());
    let decoded: Vec<Vec<u32>> = gens.iter().map(|&g| space.decode(g)).collect();
    let mut seen: HashSet<u128> = HashSet::from([id]);
    let mut elems = vec![id];
    let mut i = 0;
    while i < elems.len() {
        let x = space.decode(elems[i]);
        for g in &decoded {
            let y = space.encode(&space.mul(&x, g));
            if seen.insert(y) {
                if elems.len() as u64 >= cap {
                    return None;
                }
                elems.push(y);
            }
        }
        i += 1;
    }
    elems.sort_unstable();
    Some(elems)
}

/// Upper unitriangular root elements supported on `positions`, greedily thinned
/// to a generating set of the subgroup they span.
fn root_generators(space: &MatrixSpace, form: &Form, positions: &[(usize, usize)]) -> Result<Vec<Vec<u32>>, FfError> {
    let q = space.field().order() as u64;
    let total = q.checked_pow(positions.len() as u32).filter(|&t| t <= 1 << 22).ok_or_else(|| {
        FfError::SizeBound(format!("{} candidate root elements", q.pow(positions.len() as u32)))
    })?;
    let n = space.dim();
    let mut valid: Vec<u128> = Vec::new();
    for code in 1..total {
        let mut m = space.identity();
        let mut c = code;
        for &(i, j) in positions {
            m[i * n + j] = (c % q) as u32;
            c /= q;
        }
        if space.preserves(form, &m) {
            valid.push(space.encode(&m));
        }
    }
    valid.sort_unstable();
    let mut chosen: Vec<u128> = Vec::new();
    let mut span: HashSet<u128> = HashSet::new();
    for v in valid {
        if span.contains(&v) {
            continue;
        }
        chosen.push(v);
        span = closure(space, &chosen, total + 1).expect("root subgroup is small").into_iter().collect();
    }
    Ok(chosen.into_iter().map(|k| space.decode(k)).collect())
}

/// The standard realization of `SL_n(q)`, `SU_n(q)` or `Sp_{2n}(q)`.
pub fn build_group(spec: &GroupSpec) -> Result<MatGroup, FfError> {
    build_group_with_cap(spec, ELEMENT_CAP)
}

pub fn build_group_with_cap(spec: &GroupSpec, cap: u64) -> Result<MatGroup, FfError> {
    let expected = spec.order()?;
    if expected > BigUint::from(cap) {
        return Err(FfError::SizeBound(format!("|{spec}| = {expected} exceeds {cap}")));
    }
    let (dim, field_order) = match spec.family {
        Family::SL => (spec.n as usize, spec.q),
        Family::SU => (spec.n as usize, spec.q * spec.q),
        Family::Sp => (2 * spec.n as usize, spec.q),
        other => return Err(FfError::UnsupportedFamily(other.name().to_string())),
    };
    let space = MatrixSpace::new(FiniteField::get(field_order)?, dim)?;
    let k = space.field();
    let minus_one = k.neg(1);
    let form = match spec.family {
        Family::SL => Form::None,
        Family::Sp => {
            let mut j = vec![0; dim * dim];
            for i in 0..dim {
                j[i * dim + dim - 1 - i] = if i < dim / 2 { 1 } else { minus_one };
            }
            Form::Alternating(j)
        }
        _ => {
            let mut j = vec![0; dim * dim];
            for i in 0..dim {
                j[i * dim + dim - 1 - i] = 1;
            }
            Form::Hermitian(j, spec.q)
        }
    };
    let mut position_sets: Vec<Vec<(usize, usize)>> = Vec::new();
    if spec.family == Family::SL {
        position_sets.extend((0..dim - 1).map(|i| vec![(i, i + 1)]));
    } else {
        let bar = |i: usize| dim - 1 - i;
        for i in 0..dim / 2 {
            let mut set = vec![(i, i + 1)];
            if (bar(i + 1), bar(i)) != (i, i + 1) {
                set.push((bar(i + 1), bar(i)));
            }
            if bar(i) == i + 2 {
                set.push((i, bar(i)));
            }
            position_sets.push(set);
        }
    }
    let mut generators = Vec::new();
    for set in &position_sets {
        for g in root_generators(&space, &form, set)? {
            generators.push(space.reverse(&g));
            generators.push(g);
        }
    }
    let group = MatGroup::from_generators(GroupLabel::Standard(spec.clone()), space, form, generators, cap)?;
    if BigUint::from(group.order()) != expected {
        return Err(FfError::GenerationMismatch { group: spec.to_string(), expected, found: group.order() });
    }
    Ok(group)
}
