//! Character tables of C_m ≀ S_a and of the index-2 subgroups G(m,2,a).
//!
//! Irreducible characters and classes are both indexed by m-tuples of
//! partitions. Values come from the wreath Murnaghan–Nakayama rule: removing
//! a c-rim hook from component j against a cycle of length c and color k
//! contributes (−1)^leg · ζ_m^{jk}.

mod index2;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::json;

use crate::arith::{factorial, lcm};
use crate::cyclotomic::{CyclotomicNumber, GaloisContext, ZetaPoly};
use crate::error::{Error, Result};
use crate::group::MonomialPerm;
use crate::ladic::hd_subgroup;
use crate::partitions::{beta_set, partitions_of, BetaSet, Partition};

pub use index2::{
    index2_classes, index2_stabilizers, index2_table, is_split_class, is_twist_fixed, restrict_index2,
    split_constituents, Index2Char, Index2Class, Index2Table, Part,
};

/// An m-tuple of partitions (λ^(0), …, λ^(m−1)) labelling an irreducible character.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WreathCharLabel {
    components: Vec<Partition>,
}

/// Component k lists the lengths of the cycles of color k.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WreathClassLabel {
    components: Vec<Partition>,
}

fn multi_fmt(parts: &[Partition], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let body: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    write!(f, "[{}]", body.join(","))
}

fn multi_parse(s: &str) -> Result<Vec<Partition>> {
    let t = s.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::InvalidParameter(format!("expected [..] around '{s}'")))?;
    let mut out = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (i, ch) in inner.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(inner[start..i].parse()?);
                start = i + 1;
            }
            _ => {}
        }
    }
    if !inner.trim().is_empty() {
        out.push(inner[start..].parse()?);
    }
    Ok(out)
}

macro_rules! multipartition {
    ($t:ident) => {
        impl $t {
            pub fn new(components: Vec<Partition>) -> Result<Self> {
                if components.is_empty() {
                    return Err(Error::InvalidParameter("need at least one component".into()));
                }
                Ok($t { components })
            }

            pub fn components(&self) -> &[Partition] {
                &self.components
            }

            pub fn modulus(&self) -> u64 {
                self.components.len() as u64
            }

            pub fn size(&self) -> u32 {
                self.components.iter().map(|p| p.size()).sum()
            }
        }

        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                multi_fmt(&self.components, f)
            }
        }

        impl FromStr for $t {
            type Err = Error;

            /// `[(2),(),(1)]`
            fn from_str(s: &str) -> Result<Self> {
                $t::new(multi_parse(s)?)
            }
        }
    };
}

multipartition!(WreathCharLabel);
multipartition!(WreathClassLabel);

impl WreathClassLabel {
    /// Builds a class from (length, color) pairs.
    pub fn from_cycles(m: u64, cycles: &[(u32, u64)]) -> Result<Self> {
        let mut lens = vec![Vec::new(); m as usize];
        for &(c, k) in cycles {
            if c == 0 {
                return Err(Error::InvalidParameter("cycle of length 0".into()));
            }
            lens[(k % m) as usize].push(c);
        }
        let components = lens
            .into_iter()
            .map(|mut v| {
                v.sort_unstable_by(|a, b| b.cmp(a));
                Partition::new(v).expect("sorted positive parts")
            })
            .collect();
        Ok(WreathClassLabel { components })
    }

    /// (length, color) for every cycle, colors ascending.
    pub fn cycles(&self) -> Vec<(u32, u64)> {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(k, p)| p.parts().iter().map(move |&c| (c, k as u64)))
            .collect()
    }

    pub fn centralizer_order(&self) -> u64 {
        let m = self.modulus();
        let mut out = 1u64;
        for p in &self.components {
            let mut counts: HashMap<u32, u64> = HashMap::new();
            for &c in p.parts() {
                *counts.entry(c).or_default() += 1;
            }
            for (c, mult) in counts {
                out *= (c as u64 * m).pow(mult as u32) * factorial(mult);
            }
        }
        out
    }

    pub fn class_size(&self) -> u64 {
        let m = self.modulus();
        let a = self.size() as u64;
        m.pow(a as u32) * factorial(a) / self.centralizer_order()
    }

    /// Cycles on consecutive points, each cycle's color on its first point.
    pub fn representative(&self) -> MonomialPerm {
        let m = self.modulus() as u32;
        let mut perm = Vec::new();
        let mut colors = Vec::new();
        for (c, k) in self.cycles() {
            let s = perm.len();
            for i in 0..c as usize {
                perm.push(s + (i + 1) % c as usize);
                colors.push(if i == 0 { k as u32 } else { 0 });
            }
        }
        MonomialPerm::new(m, &perm, &colors)
    }

    /// Total color, the image in C_m of the determinant-like map.
    pub fn color_sum(&self) -> u64 {
        self.cycles().iter().map(|&(_, k)| k).sum::<u64>() % self.modulus()
    }
}

impl WreathCharLabel {
    pub fn degree(&self) -> u64 {
        let a = self.size() as u64;
        let mut out = factorial(a);
        for p in &self.components {
            out /= p.hook_lengths().iter().map(|&h| h as u64).product::<u64>();
        }
        out
    }

    /// Tensor with the linear character ζ ↦ ζ^s on every color: components rotate by s.
    pub fn twisted(&self, s: u64) -> WreathCharLabel {
        let m = self.components.len();
        let components = (0..m).map(|j| self.components[(j + m - s as usize % m) % m].clone()).collect();
        WreathCharLabel { components }
    }
}

fn multipartitions(m: u64, a: u32) -> Vec<Vec<Partition>> {
    fn rec(m: usize, a: u32, cur: &mut Vec<Partition>, out: &mut Vec<Vec<Partition>>) {
        if cur.len() + 1 == m {
            cur.push(Partition::new(Vec::new()).unwrap());
            for p in partitions_of(a) {
                *cur.last_mut().unwrap() = p;
                out.push(cur.clone());
            }
            cur.pop();
            return;
        }
        for size in (0..=a).rev() {
            for p in partitions_of(size) {
                cur.push(p);
                rec(m, a - size, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(m as usize, a, &mut Vec::new(), &mut out);
    out
}

/// All irreducible labels of C_m ≀ S_a.
pub fn irr_labels(m: u64, a: u32) -> Result<Vec<WreathCharLabel>> {
    check_modulus(m)?;
    Ok(multipartitions(m, a).into_iter().map(|components| WreathCharLabel { components }).collect())
}

/// All conjugacy classes of C_m ≀ S_a.
pub fn class_labels(m: u64, a: u32) -> Result<Vec<WreathClassLabel>> {
    check_modulus(m)?;
    Ok(multipartitions(m, a).into_iter().map(|components| WreathClassLabel { components }).collect())
}

fn check_modulus(m: u64) -> Result<()> {
    if m == 0 || m > 255 {
        return Err(Error::InvalidParameter(format!("modulus {m} out of range")));
    }
    Ok(())
}

/// Partitions reachable by adding a c-rim hook, with the sign (−1)^leg.
pub fn add_rim_hooks(p: &Partition, c: u32) -> Vec<(Partition, i64)> {
    let beta = beta_set(p, p.len() + c as usize).expect("length suffices");
    let beads = beta.beads();
    let mut out = Vec::new();
    for &b in beads {
        let target = b + c as i64;
        if beta.contains(target) {
            continue;
        }
        let leg = beads.iter().filter(|&&x| x > b && x < target).count();
        let moved: Vec<i64> = beads.iter().map(|&x| if x == b { target } else { x }).collect();
        let q = BetaSet::new(moved).expect("distinct beads").to_partition();
        out.push((q, if leg % 2 == 0 { 1 } else { -1 }));
    }
    out
}

/// Partitions reachable by removing a c-rim hook, with the sign (−1)^leg.
pub fn remove_rim_hooks(p: &Partition, c: u32) -> Vec<(Partition, i64)> {
    let beta = beta_set(p, p.len() + c as usize).expect("length suffices");
    let beads = beta.beads();
    let mut out = Vec::new();
    for &b in beads {
        let target = b - c as i64;
        if target < 0 || beta.contains(target) {
            continue;
        }
        let leg = beads.iter().filter(|&&x| x < b && x > target).count();
        let moved: Vec<i64> = beads.iter().map(|&x| if x == b { target } else { x }).collect();
        let q = BetaSet::new(moved).expect("distinct beads").to_partition();
        out.push((q, if leg % 2 == 0 { 1 } else { -1 }));
    }
    out
}

/// Shapes of size ≤ a with precomputed hook additions.
struct Shapes {
    index: HashMap<Partition, u8>,
    /// `add[c][id]`: (new id, sign)
    add: Vec<Vec<Vec<(u8, i64)>>>,
}

impl Shapes {
    fn new(a: u32) -> Self {
        let all: Vec<Partition> = (0..=a).flat_map(partitions_of).collect();
        assert!(all.len() < 256);
        let index: HashMap<Partition, u8> = all.iter().enumerate().map(|(i, p)| (p.clone(), i as u8)).collect();
        let add = (0..=a)
            .map(|c| {
                all.iter()
                    .map(|p| {
                        if c == 0 {
                            return Vec::new();
                        }
                        add_rim_hooks(p, c)
                            .into_iter()
                            .filter_map(|(q, s)| index.get(&q).map(|&i| (i, s)))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Shapes { index, add }
    }

    /// Bits per component in a packed state key.
    fn bits(&self) -> u32 {
        (usize::BITS - (self.index.len() - 1).leading_zeros()).max(1)
    }

    fn key(&self, parts: &[Partition]) -> u128 {
        let bits = self.bits();
        parts.iter().enumerate().fold(0, |acc, (j, p)| acc | u128::from(self.index[p]) << (bits * j as u32))
    }
}

fn add_rotated(target: &mut [i64], src: &[i64], shift: usize, sign: i64) {
    let n = target.len();
    for (i, &v) in src.iter().enumerate() {
        if v != 0 {
            target[(i + shift) % n] += sign * v;
        }
    }
}

/// Streams the table of C_m ≀ S_a one class column at a time.
pub struct ColumnEngine {
    m: u64,
    shapes: Shapes,
    labels: Vec<WreathCharLabel>,
    label_index: HashMap<u128, usize>,
}

impl ColumnEngine {
    pub fn new(m: u64, a: u32) -> Result<Self> {
        let labels = irr_labels(m, a)?;
        let shapes = Shapes::new(a);
        if u64::from(shapes.bits()) * m > 128 {
            return Err(Error::UnsupportedGroup(format!("C{m} wr S{a} is too large for column tables")));
        }
        let label_index = labels.iter().enumerate().map(|(i, l)| (shapes.key(&l.components), i)).collect();
        Ok(ColumnEngine { m, shapes, labels, label_index })
    }

    pub fn labels(&self) -> &[WreathCharLabel] {
        &self.labels
    }

    /// Values of every label on `class`, in label order.
    pub fn column(&self, class: &WreathClassLabel) -> Vec<ZetaPoly> {
        let m = self.m as usize;
        let bits = self.shapes.bits();
        let mask = (1u128 << bits) - 1;
        let empty = u128::from(self.shapes.index[&Partition::empty()]);
        let start = (0..m).fold(0u128, |acc, j| acc | empty << (bits * j as u32));
        let mut states: HashMap<u128, Vec<i64>> = HashMap::new();
        let mut one = vec![0i64; m];
        one[0] = 1;
        states.insert(start, one);
        for (c, k) in class.cycles() {
            let mut next: HashMap<u128, Vec<i64>> = HashMap::with_capacity(states.len());
            for (&key, val) in &states {
                for j in 0..m {
                    let shift = bits * j as u32;
                    let from = ((key >> shift) & mask) as usize;
                    for &(to, sign) in &self.shapes.add[c as usize][from] {
                        let nk = (key & !(mask << shift)) | u128::from(to) << shift;
                        let slot = next.entry(nk).or_insert_with(|| vec![0; m]);
                        add_rotated(slot, val, (j * k as usize) % m, sign);
                    }
                }
            }
            states = next;
        }
        let mut out = vec![ZetaPoly::zero(m); self.labels.len()];
        for (key, val) in states {
            if let Some(&i) = self.label_index.get(&key) {
                out[i] = ZetaPoly { coeffs: val };
            }
        }
        out
    }
}

/// Full character table of C_m ≀ S_a; rows are labels, columns classes.
#[derive(Clone, Debug)]
pub struct WreathTable {
    pub m: u64,
    pub a: u32,
    pub labels: Vec<WreathCharLabel>,
    pub classes: Vec<WreathClassLabel>,
    pub class_sizes: Vec<u64>,
    pub values: Vec<Vec<ZetaPoly>>,
}

pub fn wreath_table(m: u64, a: u32) -> Result<WreathTable> {
    let engine = ColumnEngine::new(m, a)?;
    let classes = class_labels(m, a)?;
    let mut values = vec![Vec::with_capacity(classes.len()); engine.labels.len()];
    for class in &classes {
        for (row, v) in values.iter_mut().zip(engine.column(class)) {
            row.push(v);
        }
    }
    let class_sizes = classes.iter().map(|c| c.class_size()).collect();
    Ok(WreathTable { m, a, labels: engine.labels.clone(), classes, class_sizes, values })
}

impl WreathTable {
    pub fn group_order(&self) -> u64 {
        self.m.pow(self.a) * factorial(self.a as u64)
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.values.iter().map(|row| row[self.identity_class()].coeffs[0] as u64).collect()
    }

    pub fn identity_class(&self) -> usize {
        self.classes
            .iter()
            .position(|c| c.components[0].parts().iter().all(|&x| x == 1) && c.components[0].size() == self.a)
            .expect("identity class present")
    }

    /// Orthogonality, checked exactly through all embeddings of Z[ζ_m] into
    /// a large prime field.
    pub fn check_orthogonality(&self) -> std::result::Result<(), String> {
        let sizes: Vec<u64> = self.class_sizes.clone();
        let position: HashMap<&WreathClassLabel, usize> = self.classes.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let inv: Vec<usize> = self
            .classes
            .iter()
            .map(|c| {
                let m = self.m;
                let neg = WreathClassLabel::from_cycles(
                    m,
                    &c.cycles().iter().map(|&(l, k)| (l, (m - k) % m)).collect::<Vec<_>>(),
                )
                .expect("valid cycles");
                position[&neg]
            })
            .collect();
        check_table_orthogonality(self.m, self.group_order(), &sizes, &inv, &self.values)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "group": format!("C{}wrS{}", self.m, self.a),
            "order": self.group_order(),
            "labels": self.labels.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
            "classes": self.classes.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "class_sizes": self.class_sizes,
            "values": self.values.iter().map(|row| row.iter().map(|v| v.to_cyclotomic().to_json()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

/// A prime p ≡ 1 mod m above `bound` and all primitive m-th roots of unity in F_p.
fn embedding_prime(m: u64, bound: u64) -> (u64, Vec<u64>) {
    use crate::arith::{is_prime, pow_mod, primitive_root};
    let mut p = (bound / m + 1) * m + 1;
    while !is_prime(p) {
        p += m;
    }
    let z = pow_mod(primitive_root(p), (p - 1) / m, p);
    let roots = if m == 1 { vec![1] } else { crate::arith::units(m).into_iter().map(|k| pow_mod(z, k, p)).collect() };
    (p, roots)
}

/// Exact row orthogonality over all embeddings. Every sum differs from its
/// target by an algebraic integer with all conjugates below 2|G| < p, so
/// vanishing modulo every prime above p means vanishing. For a square table
/// this is equivalent to column orthogonality.
///
/// An embedding whose image rows are a permutation of the first embedding's
/// rows gives the same Gram matrix up to that permutation, so only the first
/// one is multiplied out when the table is Galois-stable.
pub(crate) fn check_table_orthogonality(
    m: u64,
    order: u64,
    sizes: &[u64],
    inverse_class: &[usize],
    values: &[Vec<ZetaPoly>],
) -> std::result::Result<(), String> {
    let r = sizes.len();
    if values.len() != r {
        return Err(format!("{} characters for {} classes", values.len(), r));
    }
    if let Some(i) = values.iter().position(|row| row.len() != r) {
        return Err(format!("character {i} has {} values for {r} classes", values[i].len()));
    }
    let (p, roots) = embedding_prime(m, 2 * order);
    let small = p < 1 << 32;
    let mulm = |a: u64, b: u64| if small { a * b % p } else { ((a as u128 * b as u128) % p as u128) as u64 };
    let sizes_p: Vec<u64> = sizes.iter().map(|s| s % p).collect();
    let dot = DotMod::new(p);
    let powers: Vec<Vec<u64>> = roots
        .iter()
        .map(|&z| {
            let mut zp = vec![1u64; m as usize];
            for i in 1..m as usize {
                zp[i] = mulm(zp[i - 1], z);
            }
            zp
        })
        .collect();
    let image_row = |row: &[ZetaPoly], zp: &[u64]| -> Vec<u64> {
        row.iter()
            .map(|v| {
                let s: i128 = v.coeffs.iter().zip(zp).map(|(&c, &z)| i128::from(c) * i128::from(z)).sum();
                s.rem_euclid(i128::from(p)) as u64
            })
            .collect()
    };
    let image = |zp: &[u64]| -> Vec<Vec<u64>> { values.iter().map(|row| image_row(row, zp)).collect() };
    let gram = |x: Vec<Vec<u64>>| -> std::result::Result<(), String> {
        // y[b][k] = |C_k| · x_b(g_k⁻¹)
        let y: Vec<Vec<u64>> = x
            .iter()
            .map(|row| (0..r).map(|k| mulm(row[inverse_class[k]], sizes_p[k])).collect())
            .collect();
        let (x, y) = (dot.pack(x), dot.pack(y));
        // Blocks of x rows share each pass over y, which keeps y out of main
        // memory for large tables.
        const BLOCK: usize = 32;
        let bad = (0..r.div_ceil(BLOCK)).into_par_iter().find_map_first(|blk| {
            let rows = blk * BLOCK..r.min((blk + 1) * BLOCK);
            let mut first: Option<(usize, usize)> = None;
            for b in rows.start..r {
                for a in rows.clone().take_while(|&a| a <= b) {
                    let want = if a == b { order % p } else { 0 };
                    if first.is_none_or(|f| (a, b) < f) && dot.eval(&x, a, &y, b) != want {
                        first = Some((a, b));
                    }
                }
            }
            first
        });
        match bad {
            Some((a, b)) => Err(format!("rows {a} and {b} are not orthogonal")),
            None => Ok(()),
        }
    };
    let Some((first, rest)) = powers.split_first() else {
        return Ok(());
    };
    let base = image(first);
    let index: HashMap<&[u64], usize> = base.iter().enumerate().map(|(i, row)| (row.as_slice(), i)).collect();
    // permuted[j]: rows seen so far under embedding j are distinct rows of `base`.
    let mut permuted = vec![index.len() == r; rest.len()];
    let mut hit = vec![vec![false; r]; rest.len()];
    for row in values {
        for (j, zp) in rest.iter().enumerate() {
            if !permuted[j] {
                continue;
            }
            permuted[j] = match index.get(image_row(row, zp).as_slice()) {
                Some(&i) if !hit[j][i] => {
                    hit[j][i] = true;
                    true
                }
                _ => false,
            };
        }
    }
    gram(base)?;
    for (zp, _) in rest.iter().zip(&permuted).filter(|(_, &ok)| !ok) {
        gram(image(zp))?;
    }
    Ok(())
}

/// Dot products of residues mod p. Below 2^32 the rows are stored as u32
/// and summed in u64 blocks short enough not to overflow.
enum DotMod {
    Small { p: u64, block: usize },
    Large { p: u64 },
}

enum Packed {
    Small(Vec<Vec<u32>>),
    Large(Vec<Vec<u64>>),
}

impl DotMod {
    fn new(p: u64) -> Self {
        if p < 1 << 32 {
            let sq = (p - 1) * (p - 1);
            let block = u64::MAX.checked_div(sq).map_or(usize::MAX, |b| usize::try_from(b).unwrap_or(usize::MAX).max(1));
            DotMod::Small { p, block }
        } else {
            DotMod::Large { p }
        }
    }

    fn pack(&self, rows: Vec<Vec<u64>>) -> Packed {
        match self {
            DotMod::Small { .. } => {
                Packed::Small(rows.into_iter().map(|r| r.into_iter().map(|v| v as u32).collect()).collect())
            }
            DotMod::Large { .. } => Packed::Large(rows),
        }
    }

    fn eval(&self, x: &Packed, i: usize, y: &Packed, j: usize) -> u64 {
        match (self, x, y) {
            (DotMod::Small { p, block }, Packed::Small(x), Packed::Small(y)) => {
                let mut total = 0u64;
                for (a, b) in x[i].chunks(*block).zip(y[j].chunks(*block)) {
                    let s = a.iter().zip(b).fold(0u64, |acc, (&u, &v)| acc + u64::from(u) * u64::from(v));
                    total = (total + s % p) % p;
                }
                total
            }
            (DotMod::Large { p }, Packed::Large(x), Packed::Large(y)) => {
                let p = u128::from(*p);
                x[i].iter().zip(&y[j]).fold(0u128, |acc, (&u, &v)| (acc + u128::from(u) * u128::from(v)) % p) as u64
            }
            _ => unreachable!("rows packed by the same DotMod"),
        }
    }
}

fn check_sizes(label: &WreathCharLabel, class: &WreathClassLabel) -> Result<()> {
    if label.modulus() != class.modulus() || label.size() != class.size() {
        return Err(Error::SizeMismatch(format!(
            "label {label} (m={}, a={}) vs class {class} (m={}, a={})",
            label.modulus(),
            label.size(),
            class.modulus(),
            class.size()
        )));
    }
    Ok(())
}

/// χ^label(class) in Z[ζ_m], by recursive hook removal.
pub fn char_value_zeta(label: &WreathCharLabel, class: &WreathClassLabel) -> Result<ZetaPoly> {
    check_sizes(label, class)?;
    let m = label.modulus() as usize;
    fn rec(parts: &mut Vec<Partition>, cycles: &[(u32, u64)], m: usize, acc: &mut [i64], shift: usize, sign: i64) {
        let Some((&(c, k), rest)) = cycles.split_first() else {
            acc[shift % m] += sign;
            return;
        };
        for j in 0..m {
            if parts[j].size() < c {
                continue;
            }
            let old = parts[j].clone();
            for (q, s) in remove_rim_hooks(&old, c) {
                parts[j] = q;
                rec(parts, rest, m, acc, shift + j * k as usize, sign * s);
            }
            parts[j] = old;
        }
    }
    let mut acc = vec![0i64; m];
    let mut parts = label.components.clone();
    rec(&mut parts, &class.cycles(), m, &mut acc, 0, 1);
    Ok(ZetaPoly { coeffs: acc })
}

pub fn char_value(label: &WreathCharLabel, class: &WreathClassLabel, m: u64) -> Result<CyclotomicNumber> {
    if label.modulus() != m {
        return Err(Error::SizeMismatch(format!("label {label} has {} components, m = {m}", label.modulus())));
    }
    Ok(char_value_zeta(label, class)?.to_cyclotomic())
}

/// Stabilizer mask (over the units mod m) of all values of one label.
fn label_stabilizer(label: &WreathCharLabel, m: u64, a: u32, ctx: &GaloisContext) -> Result<u128> {
    if label.modulus() != m || label.size() != a {
        return Err(Error::SizeMismatch(format!("label {label} is not for m={m}, a={a}")));
    }
    let mut stab = ctx.full_mask();
    for class in class_labels(m, a)? {
        stab &= ctx.stabilizer(&char_value_zeta(label, &class)?.coeffs);
    }
    Ok(stab)
}

/// Conductor of the character: the lcm of the conductors of its values.
pub fn conductor_of_char(label: &WreathCharLabel, m: u64, a: u32) -> Result<u64> {
    let ctx = GaloisContext::new(m);
    Ok(ctx.conductor_from_stabilizer(label_stabilizer(label, m, a, &ctx)?))
}

/// Whether `stab` (units mod m) contains the image of H_[d] at modulus lcm(m, d).
pub fn stabilizer_contains_hd(ctx: &GaloisContext, stab: u128, d: u64) -> Result<bool> {
    let m = ctx.n;
    let n = lcm(m, d);
    let h = hd_subgroup(d, n)?;
    Ok(h.residues().iter().all(|&k| {
        let idx = ctx.unit_index(k % m).expect("unit mod n is a unit mod m");
        stab & (1 << idx) != 0
    }))
}

pub fn h_d_invariant(label: &WreathCharLabel, m: u64, a: u32, d: u64) -> Result<bool> {
    if d == 0 {
        return Err(Error::InvalidParameter("d must be positive".into()));
    }
    let ctx = GaloisContext::new(m);
    let stab = label_stabilizer(label, m, a, &ctx)?;
    stabilizer_contains_hd(&ctx, stab, d)
}

/// Stabilizer masks of all labels of C_m ≀ S_a, streamed column by column.
pub fn label_stabilizers(m: u64, a: u32) -> Result<(GaloisContext, Vec<WreathCharLabel>, Vec<u128>)> {
    let engine = ColumnEngine::new(m, a)?;
    let ctx = GaloisContext::new(m);
    let mut stabs = vec![ctx.full_mask(); engine.labels.len()];
    let mut cache: HashMap<Vec<i64>, u128> = HashMap::new();
    for class in class_labels(m, a)? {
        for (s, v) in stabs.iter_mut().zip(engine.column(&class)) {
            if *s == 0 {
                continue;
            }
            let mask = *cache.entry(v.coeffs.clone()).or_insert_with(|| ctx.stabilizer(&v.coeffs));
            *s &= mask;
        }
    }
    let labels = engine.labels;
    Ok((ctx, labels, stabs))
}

pub(crate) fn half(m: u64) -> Result<u64> {
    if m % 2 != 0 {
        return Err(Error::NotEven(m));
    }
    Ok(m / 2)
}
