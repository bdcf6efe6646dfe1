use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::MatGroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    /// Canonical representative: hex of the least element key in the class.
    pub repr: String,
    pub size: u64,
    pub order: u64,
    /// `power_map[k]` is the class of `g^k` for `0 <= k < order`.
    pub power_map: Vec<u32>,
}

/// Conjugacy classes sorted by element order, class size, then representative;
/// the identity class is first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassData {
    pub group_order: u64,
    pub classes: Vec<ClassInfo>,
    /// Class index of every element, when the group was enumerated.
    #[serde(skip)]
    pub membership: Vec<u32>,
}

impl ClassData {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn centralizer_order(&self, c: usize) -> u64 {
        self.group_order / self.classes[c].size
    }

    /// Class of `g^k` for `g` in class `c`; `k` may be any integer.
    pub fn power(&self, c: usize, k: i64) -> usize {
        let info = &self.classes[c];
        info.power_map[k.rem_euclid(info.order as i64) as usize] as usize
    }

    /// Lcm of element orders.
    pub fn exponent(&self) -> u64 {
        self.classes.iter().fold(1, |e, c| e.lcm(&c.order))
    }

    /// The class-level identities: sizes sum to the order, centralizer orders
    /// are integral, and power maps agree with element orders.
    pub fn validate(&self) -> Result<(), String> {
        let total: u64 = self.classes.iter().map(|c| c.size).sum();
        if total != self.group_order {
            return Err(format!("class sizes sum to {total}, not {}", self.group_order));
        }
        if self.classes.first().map(|c| (c.order, c.size)) != Some((1, 1)) {
            return Err("first class is not the identity".into());
        }
        for (i, c) in self.classes.iter().enumerate() {
            if c.size == 0 || self.group_order % c.size != 0 {
                return Err(format!("class {i}: size {} does not divide |G|", c.size));
            }
            if c.power_map.len() as u64 != c.order {
                return Err(format!("class {i}: power map has {} entries for order {}", c.power_map.len(), c.order));
            }
            if c.power_map[0] != 0 || (c.order > 1 && c.power_map[1] as usize != i) {
                return Err(format!("class {i}: power map fixes neither identity nor self"));
            }
            for (k, &img) in c.power_map.iter().enumerate() {
                let expect = c.order / c.order.gcd(&(k as u64));
                let got = self.classes.get(img as usize).map(|d| d.order);
                if got != Some(expect) {
                    return Err(format!("class {i}: g^{k} has order {got:?}, expected {expect}"));
                }
            }
        }
        Ok(())
    }
}

pub(super) fn compute(g: &MatGroup) -> ClassData {
    let space = g.space();
    let gens: Vec<(Vec<u32>, Vec<u32>)> = g
        .generators()
        .iter()
        .map(|&s| {
            let m = space.decode(s);
            let inv = space.inverse(&m).expect("invertible generator");
            (m, inv)
        })
        .collect();
    let n = g.elements().len();
    let mut raw = vec![u32::MAX; n];
    // (representative index, size)
    let mut orbits: Vec<(usize, u64)> = Vec::new();
    for start in 0..n {
        if raw[start] != u32::MAX {
            continue;
        }
        let id = orbits.len() as u32;
        raw[start] = id;
        let mut stack = vec![start];
        let mut size = 1u64;
        while let Some(i) = stack.pop() {
            let x = space.decode(g.elements()[i]);
            for (s, s_inv) in &gens {
                let y = space.encode(&space.mul(&space.mul(s, &x), s_inv));
                let j = g.index_of(y).expect("conjugate lies in the group");
                if raw[j] == u32::MAX {
                    raw[j] = id;
                    size += 1;
                    stack.push(j);
                }
            }
        }
        orbits.push((start, size));
    }
    let orders: Vec<u64> = orbits.iter().map(|&(i, _)| g.element_order(g.elements()[i])).collect();
    let mut perm: Vec<usize> = (0..orbits.len()).collect();
    perm.sort_by_key(|&c| (orders[c], orbits[c].1, g.elements()[orbits[c].0]));
    let mut rank = vec![0u32; perm.len()];
    for (new, &old) in perm.iter().enumerate() {
        rank[old] = new as u32;
    }
    let membership: Vec<u32> = raw.iter().map(|&c| rank[c as usize]).collect();
    let width = space.key_width();
    let classes = perm
        .iter()
        .map(|&old| {
            let (rep_idx, size) = orbits[old];
            let rep = space.decode(g.elements()[rep_idx]);
            let order = orders[old];
            let mut power_map = Vec::with_capacity(order as usize);
            let mut cur = space.identity();
            for _ in 0..order {
                power_map.push(membership[g.index_of(space.encode(&cur)).expect("power in group")]);
                cur = space.mul(&cur, &rep);
            }
            ClassInfo { repr: format!("{:0width$x}", g.elements()[rep_idx]), size, order, power_map }
        })
        .collect();
    ClassData { group_order: g.order(), classes, membership }
}

pub fn conjugacy_classes(g: &MatGroup) -> &ClassData {
    g.classes()
}

/// Classes of nontrivial `p`-elements.
pub fn p_element_classes(g: &MatGroup, p: u64) -> Vec<usize> {
    let data = g.classes();
    (1..data.len()).filter(|&c| is_power_of(data.classes[c].order, p)).collect()
}

fn is_power_of(mut m: u64, p: u64) -> bool {
    while m % p == 0 && m > 1 {
        m /= p;
    }
    m == 1
}

/// Some element has order `|G|_p`.
pub fn sylow_is_cyclic_bruteforce(g: &MatGroup, p: u64) -> bool {
    let mut p_part = 1;
    let mut m = g.order();
    while m % p == 0 {
        m /= p;
        p_part *= p;
    }
    g.classes().classes.iter().any(|c| c.order == p_part)
}
