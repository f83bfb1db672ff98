//! The Lang map on the diagonal torus of SL_n over F_{p²}, the principal
//! cocharacter, and the Jacobi-symbol description of ℒ(λ(c)) for c² = k.
//!
//! F_{p²} is F_p[α] with α² = g for the smallest quadratic non-residue g
//! when p is odd, and α² = α + 1 when p = 2.

use std::fmt;
use std::ops::{Mul, Neg};

use serde::Serialize;

use crate::arith::{gcd, is_prime, rem};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QuadraticField {
    p: u64,
    /// α² = c0 + c1·α
    c0: u64,
    c1: u64,
}

impl QuadraticField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        if p == 2 {
            return Ok(QuadraticField { p, c0: 1, c1: 1 });
        }
        let g = (2..p)
            .find(|&g| crate::arith::pow_mod(g, (p - 1) / 2, p) == p - 1)
            .expect("odd primes have non-residues");
        Ok(QuadraticField { p, c0: g, c1: 0 })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn element(&self, a: u64, b: u64) -> FieldElement {
        FieldElement { field: *self, a: a % self.p, b: b % self.p }
    }

    pub fn from_int(&self, k: i64) -> FieldElement {
        self.element(rem(k, self.p), 0)
    }

    pub fn one(&self) -> FieldElement {
        self.element(1, 0)
    }

    /// All p² elements in the order (a, b) lexicographic.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.p).flat_map(move |a| (0..self.p).map(move |b| self.element(a, b)))
    }

    /// The first square root of x in the element order, by exhaustive search.
    pub fn sqrt(&self, x: FieldElement) -> Option<FieldElement> {
        self.elements().find(|y| *y * *y == x)
    }
}

/// An element a + b·α of F_{p²}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: QuadraticField,
    a: u64,
    b: u64,
}

impl FieldElement {
    pub fn field(&self) -> QuadraticField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn is_one(&self) -> bool {
        self.a == 1 && self.b == 0
    }

    /// The value in F_p when b = 0.
    pub fn prime_value(&self) -> Option<u64> {
        (self.b == 0).then_some(self.a)
    }

    pub fn pow(self, e: u64) -> FieldElement {
        let mut base = self;
        let mut acc = self.field.one();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn inv(self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let p = self.field.p;
        Ok(self.pow(p * p - 2))
    }

    /// Integer powers, negative exponents through the inverse.
    pub fn powi(self, e: i64) -> Result<FieldElement> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, o: FieldElement) -> FieldElement {
        assert_eq!(self.field, o.field, "elements of different fields");
        let f = self.field;
        let p = u128::from(f.p);
        let (a, b, c, d) = (u128::from(self.a), u128::from(self.b), u128::from(o.a), u128::from(o.b));
        let bd = b * d % p;
        let x = (a * c + bd * u128::from(f.c0)) % p;
        let y = (a * d + b * c + bd * u128::from(f.c1)) % p;
        f.element(x as u64, y as u64)
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let p = self.field.p;
        self.field.element((p - self.a) % p, (p - self.b) % p)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}α"),
            (a, b) => write!(f, "{a}+{b}α"),
        }
    }
}

/// A diagonal matrix of determinant 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalTorusElement {
    entries: Vec<FieldElement>,
}

impl DiagonalTorusElement {
    pub fn new(entries: Vec<FieldElement>) -> Result<Self> {
        let Some(first) = entries.first() else {
            return Err(Error::InvalidParameter("empty diagonal".into()));
        };
        if entries.iter().any(|x| x.is_zero()) {
            return Err(Error::ZeroElement);
        }
        let det = entries.iter().fold(first.field.one(), |acc, &x| acc * x);
        if !det.is_one() {
            return Err(Error::InvalidParameter(format!("determinant {det} is not 1")));
        }
        Ok(DiagonalTorusElement { entries })
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }

    pub fn dimension(&self) -> usize {
        self.entries.len()
    }

    /// The scalar s when the element is s·Id.
    pub fn scalar(&self) -> Option<FieldElement> {
        let s = self.entries[0];
        self.entries.iter().all(|&x| x == s).then_some(s)
    }
}

impl fmt::Display for DiagonalTorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        write!(f, "diag({})", e.join(", "))
    }
}

fn is_two_power(q: u64) -> bool {
    q >= 1 && q & (q - 1) == 0
}

/// (k/q), with (k/q) = 1 whenever q is a power of 2.
pub fn jacobi_symbol(k: i64, q: u64) -> Result<i8> {
    if is_two_power(q) {
        return Ok(1);
    }
    if q % 2 == 0 {
        return Err(Error::InvalidParameter(format!("{q} is neither odd nor a power of 2")));
    }
    let mut a = rem(k, q);
    if gcd(a, q) != 1 {
        return Err(Error::NotCoprime { k, n: q });
    }
    let mut n = q;
    let mut sign = 1i8;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    Ok(sign)
}

/// λ(c) = diag(c^{n−1}, c^{n−3}, …, c^{−(n−1)}).
pub fn principal_cochar_value(n: usize, c: FieldElement) -> Result<DiagonalTorusElement> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n must be at least 2, got {n}")));
    }
    if c.is_zero() {
        return Err(Error::ZeroElement);
    }
    let entries = (0..n)
        .map(|i| c.powi(n as i64 - 1 - 2 * i as i64))
        .collect::<Result<Vec<_>>>()?;
    DiagonalTorusElement::new(entries)
}

/// ℒ(t) = t⁻¹·F(t) with F the q-power Frobenius.
pub fn lang_image(t: &DiagonalTorusElement, q: u64) -> DiagonalTorusElement {
    let entries = t
        .entries
        .iter()
        .map(|&x| x.inv().expect("torus entries are units") * x.pow(q))
        .collect();
    DiagonalTorusElement { entries }
}

/// Everything computed for one (n, p, e, k).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LangCase {
    pub n: usize,
    pub p: u64,
    pub e: u32,
    pub k: i64,
    /// ℒ(λ(c)) = (k/q)^{n−1}·Id.
    pub formula_holds: bool,
    /// ℒ(λ(c)) ∈ {Id, (−1)^{n−1}·Id}.
    pub central: bool,
    /// c^{2(q−1)} = 1.
    pub c_identity: bool,
}

pub fn lang_case(n: usize, p: u64, e: u32, k: i64) -> Result<LangCase> {
    let field = QuadraticField::new(p)?;
    if rem(k, p) == 0 {
        return Err(Error::NotCoprime { k, n: p });
    }
    if e == 0 {
        return Err(Error::InvalidParameter("e must be positive".into()));
    }
    let q = p.checked_pow(e).ok_or_else(|| Error::InvalidParameter("q overflows".into()))?;
    let c = field
        .sqrt(field.from_int(k))
        .ok_or_else(|| Error::Internal(format!("no square root of {k} in F_{p}²")))?;
    let t = principal_cochar_value(n, c)?;
    let image = lang_image(&t, q);
    let symbol = jacobi_symbol(k, q)?;
    let expected = if symbol == 1 || (n - 1) % 2 == 0 { field.one() } else { -field.one() };
    let scalar = image.scalar();
    let formula_holds = scalar == Some(expected);
    let z = if (n - 1) % 2 == 0 { field.one() } else { -field.one() };
    let central = matches!(scalar, Some(s) if s.is_one() || s == z);
    let c_identity = c.pow(2 * (q - 1)).is_one();
    Ok(LangCase { n, p, e, k, formula_holds, central, c_identity })
}

pub fn verify_cor55a(n: usize, p: u64, e: u32, k: i64) -> Result<bool> {
    Ok(lang_case(n, p, e, k)?.formula_holds)
}
