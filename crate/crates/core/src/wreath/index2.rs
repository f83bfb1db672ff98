//! G(m,2,a): the kernel of the order-2 linear character ε of C_m ≀ S_a that
//! sends every element to (−1)^{total color}.
//!
//! Tensoring with ε rotates label components by m/2. A label fixed by the
//! rotation restricts to a sum of two constituents χ± = (χ ± Δ)/2, where Δ
//! vanishes off the split classes. A class splits exactly when every cycle
//! has even length and even color; there Δ is ±2^r times a value of
//! C_{m/2} ≀ S_{a/2} at the class with halved lengths and colors, r being
//! the number of cycles.

use serde_json::json;

use super::{
    check_table_orthogonality, class_labels, half, wreath_table, ColumnEngine, WreathCharLabel,
    WreathClassLabel,
};
use crate::cyclotomic::{GaloisContext, ZetaPoly};
use crate::error::{Error, Result};
use crate::group::{Element, MonomialPerm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    Whole,
    Plus,
    Minus,
}

impl Part {
    fn suffix(self) -> &'static str {
        match self {
            Part::Whole => "",
            Part::Plus => "+",
            Part::Minus => "-",
        }
    }
}

/// An irreducible character of G(m,2,a): the twist-orbit minimum of a label,
/// and which constituent when the restriction splits.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Index2Char {
    pub label: WreathCharLabel,
    pub part: Part,
}

/// A conjugacy class of G(m,2,a). Split classes carry `Plus` for the class of
/// the canonical representative and `Minus` for its conjugate under
/// diag(ζ_m, 1, …, 1).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Index2Class {
    pub class: WreathClassLabel,
    pub part: Part,
}

impl std::fmt::Display for Index2Char {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", self.label, self.part.suffix())
    }
}

impl std::fmt::Display for Index2Class {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", self.class, self.part.suffix())
    }
}

pub fn is_twist_fixed(label: &WreathCharLabel) -> Result<bool> {
    let h = half(label.modulus())?;
    Ok(label.twisted(h) == *label)
}

pub fn is_split_class(class: &WreathClassLabel) -> bool {
    class.cycles().iter().all(|&(c, k)| c % 2 == 0 && k % 2 == 0)
}

impl Index2Class {
    pub fn representative(&self) -> MonomialPerm {
        let h = self.class.representative();
        match self.part {
            Part::Minus => {
                let n = h.degree();
                let mut colors = vec![0u32; n];
                colors[0] = 1;
                let t = MonomialPerm::new(h.modulus(), &(0..n).collect::<Vec<_>>(), &colors);
                t.mul(&h).mul(&t.inv())
            }
            _ => h,
        }
    }
}

/// Decomposition of the restriction of `label` to G(m,2,a); every
/// multiplicity is 1.
pub fn restrict_index2(label: &WreathCharLabel, m: u64, a: u32) -> Result<Vec<(Index2Char, u32)>> {
    let h = half(m)?;
    if label.modulus() != m || label.size() != a {
        return Err(Error::SizeMismatch(format!("label {label} is not for m={m}, a={a}")));
    }
    let tw = label.twisted(h);
    if tw == *label {
        Ok(vec![
            (Index2Char { label: label.clone(), part: Part::Plus }, 1),
            (Index2Char { label: label.clone(), part: Part::Minus }, 1),
        ])
    } else {
        Ok(vec![(Index2Char { label: label.clone().min(tw), part: Part::Whole }, 1)])
    }
}

/// Δ(h+) for a twist-fixed label at a split class, before orientation.
fn raw_delta(label: &WreathCharLabel, class: &WreathClassLabel, engine: &ColumnEngine) -> ZetaPoly {
    let m = label.modulus();
    let h = m / 2;
    let mu = WreathCharLabel { components: label.components()[..h as usize].to_vec() };
    let cycles: Vec<(u32, u64)> = class.cycles().iter().map(|&(c, k)| (c / 2, k / 2)).collect();
    let small = WreathClassLabel::from_cycles(h, &cycles).expect("valid cycles");
    let idx = engine.labels().iter().position(|l| *l == mu).expect("label of the half group");
    let v = &engine.column(&small)[idx];
    let scale = 1i64 << cycles.len();
    let mut out = ZetaPoly::zero(m as usize);
    for (i, &c) in v.coeffs.iter().enumerate() {
        out.coeffs[2 * i] = scale * c;
    }
    out
}

fn padded(v: Vec<i64>, m: u64) -> ZetaPoly {
    let mut coeffs = v;
    coeffs.resize(m as usize, 0);
    ZetaPoly { coeffs }
}

fn halve(v: &ZetaPoly) -> Result<ZetaPoly> {
    let r = v.reduced();
    if r.iter().any(|c| c % 2 != 0) {
        return Err(Error::Internal(format!("constituent value {r:?} is not divisible by 2")));
    }
    Ok(padded(r.into_iter().map(|c| c / 2).collect(), v.order() as u64))
}

/// Values of χ+ and χ− of a twist-fixed label on the given subgroup classes.
///
/// The constituent called `Plus` is the one for which, at the first split
/// class where Δ ≠ 0, the first nonzero power-basis coordinate of Δ is
/// positive.
pub fn split_constituents(
    label: &WreathCharLabel,
    classes: &[Index2Class],
    chi: impl Fn(&WreathClassLabel) -> Result<ZetaPoly>,
) -> Result<(Vec<ZetaPoly>, Vec<ZetaPoly>)> {
    let m = label.modulus();
    let a = label.size();
    if !is_twist_fixed(label)? {
        return Err(Error::InvalidParameter(format!("label {label} is not fixed by the twist")));
    }
    let engine = ColumnEngine::new(m / 2, a / 2)?;
    let mut orientation = 0i64;
    for class in class_labels(m, a)? {
        if is_split_class(&class) {
            let d = raw_delta(label, &class, &engine).reduced();
            if let Some(&c) = d.iter().find(|&&c| c != 0) {
                orientation = c.signum();
                break;
            }
        }
    }
    if orientation == 0 {
        return Err(Error::Internal(format!("Δ vanishes for {label}")));
    }
    let mut plus = Vec::with_capacity(classes.len());
    let mut minus = Vec::with_capacity(classes.len());
    for c in classes {
        let x = chi(&c.class)?;
        let delta = match c.part {
            Part::Whole => ZetaPoly::zero(m as usize),
            Part::Plus => raw_delta(label, &c.class, &engine).scaled(orientation),
            Part::Minus => raw_delta(label, &c.class, &engine).scaled(-orientation),
        };
        let mut s = x.clone();
        s.add_assign(&delta);
        let mut t = x;
        t.add_assign(&delta.scaled(-1));
        plus.push(halve(&s)?);
        minus.push(halve(&t)?);
    }
    Ok((plus, minus))
}

/// Subgroup classes, in the order of the ambient classes.
pub fn index2_classes(m: u64, a: u32) -> Result<Vec<Index2Class>> {
    half(m)?;
    let mut out = Vec::new();
    for class in class_labels(m, a)? {
        if class.color_sum() % 2 != 0 {
            continue;
        }
        if is_split_class(&class) && a > 0 {
            out.push(Index2Class { class: class.clone(), part: Part::Plus });
            out.push(Index2Class { class, part: Part::Minus });
        } else {
            out.push(Index2Class { class, part: Part::Whole });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct Index2Table {
    pub m: u64,
    pub a: u32,
    pub chars: Vec<Index2Char>,
    pub classes: Vec<Index2Class>,
    pub class_sizes: Vec<u64>,
    pub values: Vec<Vec<ZetaPoly>>,
}

/// The full table of G(m,2,a), derived from the table of C_m ≀ S_a.
pub fn index2_table(m: u64, a: u32) -> Result<Index2Table> {
    let h = half(m)?;
    let big = wreath_table(m, a)?;
    let classes = index2_classes(m, a)?;
    let col_of = |c: &WreathClassLabel| big.classes.iter().position(|x| x == c).expect("ambient class");
    let class_sizes = classes
        .iter()
        .map(|c| {
            let s = big.class_sizes[col_of(&c.class)];
            if c.part == Part::Whole {
                s
            } else {
                s / 2
            }
        })
        .collect();
    let mut chars = Vec::new();
    let mut values = Vec::new();
    for (i, label) in big.labels.iter().enumerate() {
        let tw = label.twisted(h);
        let row = |c: &WreathClassLabel| Ok(big.values[i][col_of(c)].clone());
        if tw == *label {
            let (p, q) = split_constituents(label, &classes, row)?;
            chars.push(Index2Char { label: label.clone(), part: Part::Plus });
            values.push(p);
            chars.push(Index2Char { label: label.clone(), part: Part::Minus });
            values.push(q);
        } else if *label < tw {
            chars.push(Index2Char { label: label.clone(), part: Part::Whole });
            values.push(classes.iter().map(|c| row(&c.class)).collect::<Result<Vec<_>>>()?);
        }
    }
    Ok(Index2Table { m, a, chars, classes, class_sizes, values })
}

impl Index2Table {
    pub fn group_order(&self) -> u64 {
        self.class_sizes.iter().sum()
    }

    pub fn degrees(&self) -> Vec<u64> {
        let id = self
            .classes
            .iter()
            .position(|c| c.class.components()[0].size() == self.a && c.class.components()[0].parts().iter().all(|&x| x == 1))
            .expect("identity class");
        self.values.iter().map(|row| row[id].reduced()[0] as u64).collect()
    }

    pub fn check_orthogonality(&self) -> std::result::Result<(), String> {
        let m = self.m;
        let inv: Vec<usize> = self
            .classes
            .iter()
            .map(|c| {
                let neg = WreathClassLabel::from_cycles(
                    m,
                    &c.class.cycles().iter().map(|&(l, k)| (l, (m - k) % m)).collect::<Vec<_>>(),
                )
                .expect("valid cycles");
                // inversion preserves each half of a split class: h+ and its
                // inverse are conjugate under a permutation-only element
                let part = c.part;
                self.classes.iter().position(|x| x.class == neg && x.part == part).expect("inverse class")
            })
            .collect();
        check_table_orthogonality(m, self.group_order(), &self.class_sizes, &inv, &self.values)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "group": format!("G({},2,{})", self.m, self.a),
            "order": self.group_order(),
            "labels": self.chars.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
            "classes": self.classes.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "class_sizes": self.class_sizes,
            "values": self.values.iter().map(|row| row.iter().map(|v| v.to_cyclotomic().to_json()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

/// Stabilizer masks of every irreducible character of G(m,2,a).
pub fn index2_stabilizers(m: u64, a: u32) -> Result<(GaloisContext, Vec<Index2Char>, Vec<u128>)> {
    let t = index2_table(m, a)?;
    let ctx = GaloisContext::new(m);
    let stabs = t
        .values
        .iter()
        .map(|row| row.iter().fold(ctx.full_mask(), |s, v| s & ctx.stabilizer(&v.coeffs)))
        .collect();
    Ok((ctx, t.chars, stabs))
}
