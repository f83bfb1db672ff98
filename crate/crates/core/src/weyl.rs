//! Brute-force relative Weyl groups of the classical types.
//!
//! Elements act as signed permutation matrices: on R^r for types B, C and D,
//! and as plain permutations on R^{r+1} for type A (the reflection
//! representation plus a trivial line). For a coset wφ with maximal
//! ζ_d-eigenspace V, the group N_W(V)/C_W(V) is built explicitly and its
//! character degrees come from the exact Burnside–Dixon table.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::One;

use crate::arith::factorial;
use crate::cyclotomic::{CyclotomicNumber, GaloisContext, ZetaPoly};
use crate::error::{Error, Result};
use crate::group::{character_table, CharacterTable, Coset, Element, ElementGroup, MonomialPerm};
use crate::wreath::{irr_labels, stabilizer_contains_hd};

pub const MAX_RANK: u32 = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WeylType {
    A,
    B,
    C,
    D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Twist {
    Identity,
    /// −w_0 on the permutation representation.
    TypeA,
    /// Sign change of the last coordinate.
    TypeD,
}

impl fmt::Display for WeylType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for WeylType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(WeylType::A),
            "B" | "b" => Ok(WeylType::B),
            "C" | "c" => Ok(WeylType::C),
            "D" | "d" => Ok(WeylType::D),
            other => Err(Error::UnsupportedGroup(other.to_string())),
        }
    }
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Twist::Identity => "id",
            Twist::TypeA => "twA",
            Twist::TypeD => "twD",
        };
        f.write_str(s)
    }
}

impl FromStr for Twist {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "id" | "identity" | "1" => Ok(Twist::Identity),
            "twA" | "typeA" | "A" => Ok(Twist::TypeA),
            "twD" | "typeD" | "D" => Ok(Twist::TypeD),
            other => Err(Error::InvalidParameter(format!("unknown twist '{other}'"))),
        }
    }
}

/// A signed permutation; type A elements carry no signs.
pub type SignedPermutation = MonomialPerm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TwistedElement {
    pub w: SignedPermutation,
    pub twist: Twist,
}

impl TwistedElement {
    /// The matrix of wφ.
    pub fn matrix(&self) -> MonomialPerm {
        self.w.mul(&twist_matrix(self.w.degree(), self.twist))
    }
}

fn twist_matrix(n: usize, twist: Twist) -> MonomialPerm {
    match twist {
        Twist::Identity => MonomialPerm::identity(n, 2),
        Twist::TypeA => MonomialPerm::new(2, &(0..n).rev().collect::<Vec<_>>(), &vec![1; n]),
        Twist::TypeD => {
            let mut c = vec![0; n];
            c[n - 1] = 1;
            MonomialPerm::new(2, &(0..n).collect::<Vec<_>>(), &c)
        }
    }
}

pub struct WeylGroup {
    pub ty: WeylType,
    pub rank: u32,
    group: ElementGroup<MonomialPerm>,
}

/// All elements of W(type_rank) as exact signed permutation matrices.
pub fn weyl_group(ty: WeylType, rank: u32) -> Result<WeylGroup> {
    if rank > MAX_RANK {
        return Err(Error::RankTooLarge { rank: rank as usize, max: MAX_RANK as usize });
    }
    let min = if ty == WeylType::D { 2 } else { 1 };
    if rank < min {
        return Err(Error::UnsupportedGroup(format!("{ty}{rank}")));
    }
    let n = points(ty, rank);
    let id: Vec<usize> = (0..n).collect();
    let zero = vec![0u32; n];
    let mut gens: Vec<MonomialPerm> = (0..n - 1)
        .map(|i| {
            let mut p = id.clone();
            p.swap(i, i + 1);
            MonomialPerm::new(2, &p, &zero)
        })
        .collect();
    match ty {
        WeylType::A => {}
        WeylType::B | WeylType::C => {
            let mut c = zero.clone();
            c[0] = 1;
            gens.push(MonomialPerm::new(2, &id, &c));
        }
        WeylType::D => {
            let mut p = id.clone();
            p.swap(0, 1);
            let mut c = zero.clone();
            c[0] = 1;
            c[1] = 1;
            gens.push(MonomialPerm::new(2, &p, &c));
        }
    }
    let group = ElementGroup::generate(MonomialPerm::identity(n, 2), &gens);
    Ok(WeylGroup { ty, rank, group })
}

fn points(ty: WeylType, rank: u32) -> usize {
    match ty {
        WeylType::A => rank as usize + 1,
        _ => rank as usize,
    }
}

impl WeylGroup {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn elements(&self) -> &[MonomialPerm] {
        self.group.elements()
    }

    pub fn points(&self) -> usize {
        points(self.ty, self.rank)
    }

    fn check_twist(&self, twist: Twist) -> Result<()> {
        let ok = match twist {
            Twist::Identity => true,
            Twist::TypeA => self.ty == WeylType::A && self.rank >= 2,
            Twist::TypeD => self.ty == WeylType::D,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnsupportedGroup(format!("twist {twist} on {}{}", self.ty, self.rank)))
        }
    }
}

/// Dimension of the ζ_d-eigenspace of a signed permutation matrix.
///
/// A cycle of length c and sign s has characteristic polynomial t^c − s.
pub fn eigenspace_dim(x: &MonomialPerm, d: u64) -> usize {
    x.cycles()
        .iter()
        .filter(|&&(c, col)| {
            let c = c as u64;
            if col == 0 {
                c % d == 0
            } else {
                (2 * c) % d == 0 && c % d != 0
            }
        })
        .count()
}

/// Eigenspace dimension on the reflection representation proper.
fn reflection_dim(ty: WeylType, twist: Twist, x: &MonomialPerm, d: u64) -> usize {
    let raw = eigenspace_dim(x, d);
    match (ty, twist) {
        (WeylType::A, Twist::Identity) if d == 1 => raw - 1,
        (WeylType::A, Twist::TypeA) if d == 2 => raw - 1,
        _ => raw,
    }
}

pub struct RegularElements {
    /// Maximal eigenspace dimension a(d).
    pub a: usize,
    pub elements: Vec<TwistedElement>,
}

/// The elements wφ with maximal ζ_d-eigenspace, in group order.
pub fn d_regular_elements(g: &WeylGroup, d: u64, twist: Twist) -> Result<RegularElements> {
    if d == 0 {
        return Err(Error::InvalidParameter("d must be positive".into()));
    }
    g.check_twist(twist)?;
    let phi = twist_matrix(g.points(), twist);
    let dims: Vec<usize> = g.elements().iter().map(|w| reflection_dim(g.ty, twist, &w.mul(&phi), d)).collect();
    let a = dims.iter().copied().max().unwrap_or(0);
    let elements = g
        .elements()
        .iter()
        .zip(&dims)
        .filter(|&(_, &k)| k == a)
        .map(|(w, _)| TwistedElement { w: *w, twist })
        .collect();
    Ok(RegularElements { a, elements })
}

fn rref(rows: &mut [Vec<CyclotomicNumber>]) -> Result<Vec<usize>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].inverse()?;
        rows[r] = rows[r].iter().map(|x| x * &inv).collect();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let sub: Vec<CyclotomicNumber> = rows[r].iter().map(|x| x * &f).collect();
                rows[i] = rows[i].iter().zip(&sub).map(|(a, b)| a - b).collect();
            }
        }
        pivots.push(c);
        r += 1;
    }
    Ok(pivots)
}

/// Row-reduced basis of the ζ_d-eigenspace of x over Q(ζ_d), and its pivots.
pub fn eigenspace(x: &MonomialPerm, d: u64) -> Result<(Vec<Vec<CyclotomicNumber>>, Vec<usize>)> {
    let n = x.degree();
    let zeta = CyclotomicNumber::root_of_unity(d, 1);
    // (X − ζ)[π(i)][i] = ±1
    let mut m: Vec<Vec<CyclotomicNumber>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let mut v = CyclotomicNumber::zero(d);
                    if x.image(c) == r {
                        v = CyclotomicNumber::from_integer(d, if x.color(c) == 0 { 1 } else { -1 });
                    }
                    if r == c {
                        v = &v - &zeta;
                    }
                    v
                })
                .collect()
        })
        .collect();
    let pivots = rref(&mut m)?;
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut basis: Vec<Vec<CyclotomicNumber>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![CyclotomicNumber::zero(d); n];
            v[f] = CyclotomicNumber::one(d);
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -&m[row][f];
            }
            v
        })
        .collect();
    let piv = rref(&mut basis)?;
    Ok((basis, piv))
}

fn to_zeta(x: &CyclotomicNumber) -> Result<ZetaPoly> {
    let n = x.order() as usize;
    let mut z = ZetaPoly::zero(n);
    for (&e, c) in x.coefficients() {
        if !c.denom().is_one() {
            return Err(Error::Internal(format!("non-integral eigenvector entry {x}")));
        }
        z.coeffs[e as usize] = num_traits::ToPrimitive::to_i64(c.numer())
            .ok_or_else(|| Error::Internal("eigenvector entry too large".into()))?;
    }
    Ok(z)
}

fn act(y: &MonomialPerm, v: &[ZetaPoly]) -> Vec<ZetaPoly> {
    y.apply(v, |z, c| if c == 0 { z.clone() } else { z.scaled(-1) })
}

/// Order, sorted degrees and table of N_W(V)/C_W(V).
pub struct RelativeWeylGroup {
    pub a: usize,
    pub order: u64,
    pub degrees: Vec<u64>,
    pub table: CharacterTable,
}

impl RelativeWeylGroup {
    pub fn fingerprint(&self) -> (u64, Vec<u64>) {
        (self.order, self.degrees.clone())
    }

    /// Whether every irreducible character is fixed by H_[d].
    pub fn characters_hd_fixed(&self, d: u64) -> Result<bool> {
        let ctx = GaloisContext::new(self.table.exponent as u64);
        for row in &self.table.chars {
            let stab = row.iter().fold(ctx.full_mask(), |s, v| s & ctx.stabilizer(&v.coeffs));
            if !stabilizer_contains_hd(&ctx, stab, d)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn relative_weyl_group(ty: WeylType, rank: u32, d: u64, twist: Twist) -> Result<RelativeWeylGroup> {
    let g = weyl_group(ty, rank)?;
    relative_weyl_group_in(&g, d, twist)
}

pub fn relative_weyl_group_in(g: &WeylGroup, d: u64, twist: Twist) -> Result<RelativeWeylGroup> {
    let reg = d_regular_elements(g, d, twist)?;
    let x = reg.elements[0].matrix();
    let (basis, pivots) = eigenspace(&x, d)?;
    let basis: Vec<Vec<ZetaPoly>> =
        basis.iter().map(|v| v.iter().map(to_zeta).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
    let in_span = |v: &[ZetaPoly]| {
        let mut acc = vec![ZetaPoly::zero(d as usize); v.len()];
        for (b, &p) in basis.iter().zip(&pivots) {
            for (a, e) in acc.iter_mut().zip(b) {
                a.add_assign(&e.mul(&v[p]));
            }
        }
        acc.iter().zip(v).all(|(a, b)| a.equals(b))
    };
    let mut normalizer = Vec::new();
    let mut centralizer = Vec::new();
    for y in g.elements() {
        let images: Vec<Vec<ZetaPoly>> = basis.iter().map(|b| act(y, b)).collect();
        if images.iter().all(|v| in_span(v)) {
            normalizer.push(*y);
            if images.iter().zip(&basis).all(|(v, b)| v.iter().zip(b).all(|(p, q)| p.equals(q))) {
                centralizer.push(*y);
            }
        }
    }
    let kernel = Arc::new(centralizer);
    let cosets: Vec<Coset<MonomialPerm>> = normalizer.iter().map(|y| Coset::new(y, kernel.clone())).collect();
    let quotient = ElementGroup::from_elements(cosets);
    let table = character_table(&quotient)?;
    let (order, degrees) = table.fingerprint();
    Ok(RelativeWeylGroup { a: reg.a, order, degrees, table })
}

/// G(m,1,a) = C_m ≀ S_a or its index-2 subgroup G(m,2,a).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ImprimitiveGroup {
    pub m: u64,
    pub p: u64,
    pub a: u32,
}

impl fmt::Display for ImprimitiveGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{},{})", self.m, self.p, self.a)
    }
}

impl ImprimitiveGroup {
    pub fn order(&self) -> u64 {
        self.m.pow(self.a) * factorial(self.a as u64) / if self.a > 0 { self.p } else { 1 }
    }

    /// (order, sorted degrees), from hook lengths and Clifford theory.
    pub fn fingerprint(&self) -> Result<(u64, Vec<u64>)> {
        let labels = irr_labels(self.m, self.a)?;
        let mut degs = Vec::new();
        if self.p == 1 || self.a == 0 {
            degs.extend(labels.iter().map(|l| l.degree()));
        } else {
            let h = self.m / 2;
            for l in &labels {
                let t = l.twisted(h);
                if t == *l {
                    degs.push(l.degree() / 2);
                    degs.push(l.degree() / 2);
                } else if *l < t {
                    degs.push(l.degree());
                }
            }
        }
        degs.sort_unstable();
        Ok((self.order(), degs))
    }
}

/// The wreath-product description of W_d read off from type, rank and d.
/// `None` when the predicted rank is 0.
pub fn predicted_group(ty: WeylType, rank: u32, d: u64, twist: Twist) -> Option<ImprimitiveGroup> {
    let n = rank as u64;
    let g = |m: u64, p: u64, a: u64| (a > 0).then_some(ImprimitiveGroup { m, p, a: a as u32 });
    match (ty, twist) {
        (WeylType::A, Twist::Identity) => g(d, 1, (n + 1) / d),
        (WeylType::A, Twist::TypeA) => {
            let dd = match d % 4 {
                1 | 3 => 2 * d,
                2 => d / 2,
                _ => d,
            };
            g(dd, 1, (n + 1) / dd)
        }
        (WeylType::B | WeylType::C, Twist::Identity) => {
            let e = if d % 2 == 0 { d / 2 } else { d };
            g(2 * e, 1, n / e)
        }
        (WeylType::D, Twist::Identity) => {
            if d % 2 == 1 {
                if n % d == 0 {
                    g(2 * d, 2, n / d)
                } else {
                    g(2 * d, 1, n / d)
                }
            } else {
                let e = d / 2;
                if n % e != 0 {
                    g(2 * e, 1, n / e)
                } else if (n / e) % 2 == 0 {
                    g(2 * e, 2, n / e)
                } else {
                    g(2 * e, 1, n / e - 1)
                }
            }
        }
        (WeylType::D, Twist::TypeD) => {
            if d % 2 == 1 {
                g(2 * d, 1, (n - 1) / d)
            } else {
                let e = d / 2;
                if n % e != 0 {
                    g(2 * e, 1, n / e)
                } else if (n / e) % 2 == 1 {
                    g(2 * e, 2, n / e)
                } else {
                    g(2 * e, 1, n / e - 1)
                }
            }
        }
        _ => None,
    }
}

/// Fundamental degrees with the eigenvalues ε_i of φ on the invariants.
pub fn degrees_with_twist(ty: WeylType, rank: u32, twist: Twist) -> Vec<(u64, i64)> {
    let r = rank as u64;
    match (ty, twist) {
        (WeylType::A, Twist::Identity) => (2..=r + 1).map(|k| (k, 1)).collect(),
        (WeylType::A, _) => (2..=r + 1).map(|k| (k, if k % 2 == 0 { 1 } else { -1 })).collect(),
        (WeylType::B | WeylType::C, _) => (1..=r).map(|k| (2 * k, 1)).collect(),
        (WeylType::D, tw) => {
            let mut v: Vec<(u64, i64)> = (1..r).map(|k| (2 * k, 1)).collect();
            v.push((r, if tw == Twist::TypeD { -1 } else { 1 }));
            v
        }
    }
}

/// Number of degrees d_i with ε_i ζ_d^{d_i} = 1, i.e. the multiplicity of
/// Φ_d in the order polynomial.
pub fn a_from_degrees(ty: WeylType, rank: u32, d: u64, twist: Twist) -> usize {
    degrees_with_twist(ty, rank, twist)
        .iter()
        .filter(|&&(k, eps)| if eps == 1 { k % d == 0 } else { (2 * k) % d == 0 && k % d != 0 })
        .count()
}

/// Oracle and prediction for one case.
pub struct WreathComparison {
    pub a: usize,
    pub oracle: (u64, Vec<u64>),
    pub predicted: Option<ImprimitiveGroup>,
    pub matches: bool,
    pub hd_fixed: bool,
}

pub fn compare_with_prediction(g: &WeylGroup, d: u64, twist: Twist) -> Result<WreathComparison> {
    let rel = relative_weyl_group_in(g, d, twist)?;
    let predicted = predicted_group(g.ty, g.rank, d, twist);
    let matches = match predicted {
        Some(p) => p.fingerprint()? == rel.fingerprint(),
        None => rel.order == 1,
    };
    let hd_fixed = rel.characters_hd_fixed(d)?;
    Ok(WreathComparison { a: rel.a, oracle: rel.fingerprint(), predicted, matches, hd_fixed })
}

pub fn matches_wreath_prediction(ty: WeylType, rank: u32, d: u64, twist: Twist) -> Result<bool> {
    let g = weyl_group(ty, rank)?;
    Ok(compare_with_prediction(&g, d, twist)?.matches)
}

/// The cases of the classical sweep: (type, rank, twist), ranks as in the
/// acceptance range.
pub fn sweep_cases(max_rank: u32, max_rank_d: u32) -> Vec<(WeylType, u32, Twist)> {
    let mut out = Vec::new();
    for r in 1..=max_rank {
        out.push((WeylType::A, r, Twist::Identity));
        if r >= 2 {
            out.push((WeylType::A, r, Twist::TypeA));
        }
        out.push((WeylType::B, r, Twist::Identity));
        out.push((WeylType::C, r, Twist::Identity));
    }
    for r in 2..=max_rank_d {
        out.push((WeylType::D, r, Twist::Identity));
        out.push((WeylType::D, r, Twist::TypeD));
    }
    out
}

/// Largest d scanned for a given rank.
pub fn max_d(rank: u32) -> u64 {
    2 * (rank as u64 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        assert_eq!(weyl_group(WeylType::A, 2).unwrap().order(), 6);
        assert_eq!(weyl_group(WeylType::B, 2).unwrap().order(), 8);
        assert_eq!(weyl_group(WeylType::D, 3).unwrap().order(), 24);
        assert_eq!(weyl_group(WeylType::D, 4).unwrap().order(), 192);
        assert!(weyl_group(WeylType::B, 8).is_err());
    }

    #[test]
    fn regular_dimensions() {
        let b2 = weyl_group(WeylType::B, 2).unwrap();
        assert_eq!(d_regular_elements(&b2, 4, Twist::Identity).unwrap().a, 1);
        let a2 = weyl_group(WeylType::A, 2).unwrap();
        let r = d_regular_elements(&a2, 1, Twist::Identity).unwrap();
        assert_eq!(r.a, 2);
        assert_eq!(r.elements.len(), 1);
        let b3 = weyl_group(WeylType::B, 3).unwrap();
        let r = d_regular_elements(&b3, 2, Twist::Identity).unwrap();
        assert_eq!(r.a, 3);
        assert_eq!(r.elements[0].w, MonomialPerm::new(2, &[0, 1, 2], &[1, 1, 1]));
    }

    #[test]
    fn relative_groups() {
        let r = relative_weyl_group(WeylType::B, 2, 4, Twist::Identity).unwrap();
        assert_eq!(r.fingerprint(), (4, vec![1, 1, 1, 1]));
        let r = relative_weyl_group(WeylType::A, 2, 3, Twist::Identity).unwrap();
        assert_eq!(r.order, 3);
        let r = relative_weyl_group(WeylType::B, 3, 2, Twist::Identity).unwrap();
        assert_eq!(r.fingerprint(), (48, vec![1, 1, 1, 1, 2, 2, 3, 3, 3, 3]));
    }

    #[test]
    fn predictions_match() {
        assert!(matches_wreath_prediction(WeylType::B, 2, 4, Twist::Identity).unwrap());
        assert!(matches_wreath_prediction(WeylType::D, 4, 2, Twist::Identity).unwrap());
        assert!(matches_wreath_prediction(WeylType::D, 4, 8, Twist::TypeD).unwrap());
        for n in 2..=5u32 {
            for d in 1..=n as u64 {
                if (n as u64) % d == 0 {
                    assert!(matches_wreath_prediction(WeylType::A, n - 1, d, Twist::Identity).unwrap(), "A{} d={d}", n - 1);
                }
            }
        }
    }

    #[test]
    fn a_matches_degrees() {
        for (ty, r, tw) in sweep_cases(4, 4) {
            let g = weyl_group(ty, r).unwrap();
            for d in 1..=max_d(r) {
                assert_eq!(d_regular_elements(&g, d, tw).unwrap().a, a_from_degrees(ty, r, d, tw), "{ty}{r} {tw} d={d}");
            }
        }
    }

    #[test]
    fn twist_on_wrong_type_rejected() {
        let b = weyl_group(WeylType::B, 3).unwrap();
        assert!(d_regular_elements(&b, 2, Twist::TypeD).is_err());
    }
}
