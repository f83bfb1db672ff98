//! Exact arithmetic in cyclotomic fields.
//!
//! Elements of Q(ζ_n) are stored in the power basis 1, ζ, …, ζ^{φ(n)-1}
//! obtained by reducing modulo the n-th cyclotomic polynomial. Equal field
//! elements of the same declared order therefore have identical storage.

mod phi;
mod zeta;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, Serializer};

use crate::arith::{divisors, euler_phi, gcd, lcm, rem, units};
use crate::error::{Error, Result};

pub use phi::cyclotomic_coeffs;
pub use zeta::{GaloisContext, ZetaPoly};

pub type Rational = BigRational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicNumber {
    order: u64,
    coeffs: BTreeMap<u64, Rational>,
}

impl CyclotomicNumber {
    pub fn zero(n: u64) -> Self {
        assert!(n >= 1, "order must be positive");
        CyclotomicNumber { order: n, coeffs: BTreeMap::new() }
    }

    pub fn from_rational(n: u64, r: Rational) -> Self {
        Self::from_terms(n, [(0, r)])
    }

    pub fn from_integer(n: u64, k: i64) -> Self {
        Self::from_rational(n, Rational::from_integer(BigInt::from(k)))
    }

    pub fn one(n: u64) -> Self {
        Self::from_integer(n, 1)
    }

    /// ζ_n^k in canonical form.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        Self::from_terms(n, [(k, Rational::one())])
    }

    /// Σ c·ζ_n^e over the given terms; exponents may be any integers.
    pub fn from_terms(n: u64, terms: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        assert!(n >= 1, "order must be positive");
        let mut dense = vec![Rational::zero(); n as usize];
        for (e, c) in terms {
            dense[rem(e, n) as usize] += c;
        }
        Self::from_dense(n, dense)
    }

    fn from_dense(n: u64, mut v: Vec<Rational>) -> Self {
        let phi = cyclotomic_coeffs(n);
        let deg = phi.len() - 1;
        for i in (deg..v.len()).rev() {
            if v[i].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut v[i], Rational::zero());
            for (j, &pj) in phi.iter().enumerate().take(deg) {
                if pj != 0 {
                    v[i - deg + j] -= &c * Rational::from_integer(BigInt::from(pj));
                }
            }
        }
        let coeffs = v
            .into_iter()
            .take(deg)
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as u64, c))
            .collect();
        CyclotomicNumber { order: n, coeffs }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Nonzero power-basis coordinates, keyed by exponent.
    pub fn coefficients(&self) -> &BTreeMap<u64, Rational> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => self.coeffs.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    /// Re-expresses the element inside Q(ζ_m); requires order | m.
    pub fn lift(&self, m: u64) -> Self {
        assert!(m % self.order == 0, "cannot lift order {} to {}", self.order, m);
        if m == self.order {
            return self.clone();
        }
        let step = (m / self.order) as i64;
        Self::from_terms(m, self.coeffs.iter().map(|(&e, c)| (e as i64 * step, c.clone())))
    }

    fn lifted_pair(&self, other: &Self) -> (Self, Self) {
        let m = lcm(self.order, other.order);
        (self.lift(m), other.lift(m))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero(self.order);
        }
        CyclotomicNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, c * r)).collect(),
        }
    }

    /// Image under ζ_n ↦ ζ_n^k.
    pub fn galois_apply(&self, k: i64) -> Result<Self> {
        let n = self.order;
        let kr = rem(k, n);
        if n > 1 && gcd(kr, n) != 1 {
            return Err(Error::NotCoprime { k, n });
        }
        Ok(Self::from_terms(
            n,
            self.coeffs.iter().map(|(&e, c)| ((e * kr % n) as i64, c.clone())),
        ))
    }

    /// Smallest divisor c of the order with the element inside Q(ζ_c).
    pub fn conductor(&self) -> u64 {
        let n = self.order;
        if self.is_rational() {
            return 1;
        }
        let us = units(n);
        for c in divisors(n) {
            let fixed = us
                .iter()
                .filter(|&&k| k % c == 1 % c)
                .all(|&k| self.galois_apply(k as i64).unwrap() == *self);
            if fixed {
                return c;
            }
        }
        n
    }

    pub fn is_fixed_by(&self, h: &GaloisSubgroup) -> Result<bool> {
        if h.modulus != self.order {
            return Err(Error::ModulusMismatch { subgroup: h.modulus, element: self.order });
        }
        for &k in &h.residues {
            if self.galois_apply(k as i64)? != *self {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Field norm down to Q.
    pub fn norm(&self) -> Rational {
        let mut acc = Self::one(self.order);
        for k in units(self.order) {
            acc = &acc * &self.galois_apply(k as i64).unwrap();
        }
        acc.as_rational().expect("norm is rational")
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let mut conj = Self::one(self.order);
        for k in units(self.order).into_iter().filter(|&k| k != 1) {
            conj = &conj * &self.galois_apply(k as i64).unwrap();
        }
        let norm = (&conj * self).as_rational().expect("norm is rational");
        Ok(conj.scale(&norm.recip()))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .map(|(e, c)| serde_json::json!([e, int_json(c.numer()), int_json(c.denom())]))
            .collect();
        serde_json::json!({ "order": self.order, "coeffs": coeffs })
    }
}

fn int_json(x: &BigInt) -> serde_json::Value {
    match x.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(x.to_string()),
    }
}

impl Serialize for CyclotomicNumber {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl Add for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        let (a, b) = self.lifted_pair(rhs);
        let mut coeffs = a.coeffs;
        for (e, c) in b.coeffs {
            let slot = coeffs.entry(e).or_insert_with(Rational::zero);
            *slot += c;
            if slot.is_zero() {
                coeffs.remove(&e);
            }
        }
        CyclotomicNumber { order: a.order, coeffs }
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Sub for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self + &(-rhs)
    }
}

impl Mul for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        let (a, b) = self.lifted_pair(rhs);
        let n = a.order;
        let mut dense = vec![Rational::zero(); n as usize];
        for (&i, x) in &a.coeffs {
            for (&j, y) in &b.coeffs {
                dense[((i + j) % n) as usize] += x * y;
            }
        }
        CyclotomicNumber::from_dense(n, dense)
    }
}

impl fmt::Display for CyclotomicNumber {
    /// GAP-style rendering, e.g. `-1/2 + 3*E(8)^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (idx, (&e, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let root = match e {
                0 => String::new(),
                1 => format!("E({})", self.order),
                _ => format!("E({})^{}", self.order, e),
            };
            match (root.is_empty(), abs.is_one()) {
                (true, _) => write!(f, "{abs}")?,
                (false, true) => write!(f, "{root}")?,
                (false, false) => write!(f, "{abs}*{root}")?,
            }
        }
        Ok(())
    }
}

/// A subgroup of (Z/nZ)^×, acting on Q(ζ_n) by ζ ↦ ζ^k.
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct GaloisSubgroup {
    modulus: u64,
    residues: BTreeSet<u64>,
}

impl GaloisSubgroup {
    pub fn new(n: u64, residues: impl IntoIterator<Item = u64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("modulus must be positive".into()));
        }
        let residues: BTreeSet<u64> = residues.into_iter().map(|k| k % n).collect();
        for &k in &residues {
            if n > 1 && gcd(k, n) != 1 {
                return Err(Error::NotCoprime { k: k as i64, n });
            }
        }
        if !residues.contains(&(1 % n)) {
            return Err(Error::InvalidParameter("subgroup must contain 1".into()));
        }
        for &a in &residues {
            for &b in &residues {
                if !residues.contains(&(a * b % n)) {
                    return Err(Error::InvalidParameter(format!(
                        "residues not closed: {a}*{b} mod {n}"
                    )));
                }
            }
        }
        Ok(GaloisSubgroup { modulus: n, residues })
    }

    /// All of (Z/nZ)^×.
    pub fn full(n: u64) -> Self {
        let residues = if n == 1 { [0].into() } else { units(n).into_iter().collect() };
        GaloisSubgroup { modulus: n, residues }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residues(&self) -> &BTreeSet<u64> {
        &self.residues
    }

    pub fn contains(&self, k: u64) -> bool {
        self.residues.contains(&(k % self.modulus))
    }

    pub fn order(&self) -> usize {
        self.residues.len()
    }

    pub fn is_subset(&self, other: &GaloisSubgroup) -> bool {
        self.modulus == other.modulus && self.residues.is_subset(&other.residues)
    }

    pub fn intersection(&self, other: &GaloisSubgroup) -> Result<GaloisSubgroup> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch { subgroup: other.modulus, element: self.modulus });
        }
        Ok(GaloisSubgroup {
            modulus: self.modulus,
            residues: self.residues.intersection(&other.residues).copied().collect(),
        })
    }
}

/// Degree of Q(ζ_n) over Q.
pub fn field_degree(n: u64) -> u64 {
    euler_phi(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(a: i64, b: i64) -> Rational {
        Rational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(CyclotomicNumber::root_of_unity(1, 0), CyclotomicNumber::one(1));
        assert_eq!(CyclotomicNumber::root_of_unity(4, 2), CyclotomicNumber::from_integer(4, -1));
        let s = &CyclotomicNumber::root_of_unity(3, 1) + &CyclotomicNumber::root_of_unity(3, 2);
        assert_eq!(s, CyclotomicNumber::from_integer(3, -1));
    }

    #[test]
    fn galois_examples() {
        let z3 = CyclotomicNumber::root_of_unity(3, 1);
        assert_eq!(z3.galois_apply(2).unwrap(), CyclotomicNumber::root_of_unity(3, 2));
        let z8 = CyclotomicNumber::root_of_unity(8, 1);
        assert_eq!(z8.galois_apply(5).unwrap(), CyclotomicNumber::root_of_unity(8, 5));
        let s = &z3 - &CyclotomicNumber::root_of_unity(3, 2);
        assert_eq!(s.galois_apply(2).unwrap(), -&s);
        assert_eq!(&s * &s, CyclotomicNumber::from_integer(3, -3));
        assert!(matches!(z8.galois_apply(2), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn conductor_examples() {
        assert_eq!(CyclotomicNumber::from_rational(12, rat(7, 2)).conductor(), 1);
        let s = &CyclotomicNumber::root_of_unity(3, 1) - &CyclotomicNumber::root_of_unity(3, 2);
        assert_eq!(s.conductor(), 3);
        assert_eq!(CyclotomicNumber::root_of_unity(8, 1).conductor(), 8);
        // ζ_12^4 = ζ_3 lives in Q(ζ_3)
        assert_eq!(CyclotomicNumber::root_of_unity(12, 4).conductor(), 3);
        // -ζ_3 is a primitive 6th root of unity but Q(ζ_6) = Q(ζ_3)
        assert_eq!(CyclotomicNumber::root_of_unity(6, 1).conductor(), 3);
    }

    #[test]
    fn fixedness_examples() {
        let h = GaloisSubgroup::new(8, [1, 5]).unwrap();
        assert!(!CyclotomicNumber::root_of_unity(8, 1).is_fixed_by(&h).unwrap());
        assert!(CyclotomicNumber::from_integer(8, -1).is_fixed_by(&h).unwrap());
        let h12 = GaloisSubgroup::new(12, [1, 7]).unwrap();
        let z3 = CyclotomicNumber::root_of_unity(3, 1).lift(12);
        assert!(z3.is_fixed_by(&h12).unwrap());
        let bad = CyclotomicNumber::root_of_unity(3, 1);
        assert!(matches!(bad.is_fixed_by(&h12), Err(Error::ModulusMismatch { .. })));
    }

    #[test]
    fn subgroup_validation() {
        assert!(GaloisSubgroup::new(8, [1, 3]).is_ok());
        assert!(GaloisSubgroup::new(8, [3]).is_err());
        assert!(GaloisSubgroup::new(8, [1, 2]).is_err());
        assert!(GaloisSubgroup::new(7, [1, 2]).is_err());
        assert_eq!(GaloisSubgroup::full(1).order(), 1);
    }

    #[test]
    fn mixed_orders_lift() {
        let z3 = CyclotomicNumber::root_of_unity(3, 1);
        let z4 = CyclotomicNumber::root_of_unity(4, 1);
        let p = &z3 * &z4;
        assert_eq!(p.order(), 12);
        assert_eq!(p, CyclotomicNumber::root_of_unity(12, 7));
    }

    #[test]
    fn inverse_and_norm() {
        let x = &CyclotomicNumber::from_integer(5, 2) + &CyclotomicNumber::root_of_unity(5, 1);
        let inv = x.inverse().unwrap();
        assert_eq!(&x * &inv, CyclotomicNumber::one(5));
        assert_eq!(CyclotomicNumber::root_of_unity(7, 3).norm(), Rational::one());
    }

    #[test]
    fn display_and_json() {
        let x = &CyclotomicNumber::from_rational(8, rat(-1, 2))
            + &CyclotomicNumber::root_of_unity(8, 3).scale(&rat(3, 1));
        assert_eq!(x.to_string(), "-1/2 + 3*E(8)^3");
        assert_eq!(
            serde_json::to_string(&x).unwrap(),
            r#"{"coeffs":[[0,-1,2],[3,3,1]],"order":8}"#
        );
    }
}
