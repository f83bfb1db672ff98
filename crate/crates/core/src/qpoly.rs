//! Integer polynomials in q: cyclotomic factors and type-A generic degrees.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::divisors;
use crate::error::{Error, Result};
use crate::partitions::{d_core, Partition};

/// Coefficients lowest degree first; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// q^k.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::one();
        QPolynomial { coeffs: c }
    }

    /// q^k − 1.
    pub fn q_power_minus_one(k: usize) -> Self {
        let mut p = Self::monomial(k);
        p.coeffs[0] -= 1;
        Self::new(p.coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &QPolynomial) -> QPolynomial {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let out = (0..n)
            .map(|i| {
                self.coeffs.get(i).cloned().unwrap_or_default()
                    - other.coeffs.get(i).cloned().unwrap_or_default()
            })
            .collect();
        Self::new(out)
    }

    /// Quotient and remainder over Z; `None` if a leading-coefficient
    /// division is inexact.
    pub fn div_rem(&self, den: &QPolynomial) -> Option<(QPolynomial, QPolynomial)> {
        let dd = den.degree()?;
        let lead = &den.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd];
            if c.is_zero() {
                continue;
            }
            let (q, r) = c.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dj) in den.coeffs.iter().enumerate() {
                rem[i + j] -= &q * dj;
            }
            quot[i] = q;
        }
        Some((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient, if `den` divides `self`.
    pub fn exact_div(&self, den: &QPolynomial) -> Option<QPolynomial> {
        match self.div_rem(den) {
            Some((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for QPolynomial {
    /// Descending powers, e.g. `q^4 - q^2 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{k}"),
            };
            if var.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{abs}*{var}")?;
            }
        }
        Ok(())
    }
}

/// Φ_d, by dividing q^d − 1 by the Φ_e with e a proper divisor of d.
pub fn cyclotomic_poly(d: u64) -> QPolynomial {
    assert!(d >= 1);
    let mut p = QPolynomial::q_power_minus_one(d as usize);
    for e in divisors(d) {
        if e < d {
            p = p.exact_div(&cyclotomic_poly(e)).expect("cyclotomic factor divides");
        }
    }
    p
}

/// Largest k with Φ_d^k dividing `p`.
pub fn phi_d_valuation(p: &QPolynomial, d: u64) -> Result<u32> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let phi = cyclotomic_poly(d);
    let mut cur = p.clone();
    let mut k = 0;
    while let Some(q) = cur.exact_div(&phi) {
        cur = q;
        k += 1;
    }
    Ok(k)
}

/// Degree of the unipotent character of GL_n labelled by λ, as a polynomial
/// in q: q^{n(λ)} ∏(q^i − 1) / ∏_boxes (q^h − 1).
pub fn generic_degree_typea(lambda: &Partition) -> Result<QPolynomial> {
    let n = lambda.size() as usize;
    if n == 0 {
        return Err(Error::InvalidPartition(Vec::new()));
    }
    let mut num = QPolynomial::monomial(lambda.n_statistic() as usize);
    for i in 1..=n {
        num = num.mul(&QPolynomial::q_power_minus_one(i));
    }
    for h in lambda.hook_lengths() {
        num = num
            .exact_div(&QPolynomial::q_power_minus_one(h as usize))
            .ok_or_else(|| Error::Internal("hook formula not integral".into()))?;
    }
    Ok(num)
}

/// Whether Φ_d does not divide the generic degree of λ.
///
/// d = 1 is accepted; callers reporting on it should flag it with
/// [`is_degenerate_d`].
pub fn in_uch_phid_prime_typea(lambda: &Partition, d: u64) -> Result<bool> {
    if d == 0 {
        return Err(Error::InvalidParameter("d must be positive".into()));
    }
    Ok(phi_d_valuation(&generic_degree_typea(lambda)?, d)? == 0)
}

/// Φ_1-primeness interacts with the (q − 1) factors and is reported as a flag.
pub fn is_degenerate_d(d: u64) -> bool {
    d == 1
}

/// ⌊n/d⌋ minus the d-weight of λ; equals the Φ_d-valuation of the degree.
pub fn predicted_valuation(lambda: &Partition, d: u64) -> u32 {
    lambda.size() / d as u32 - d_core(lambda, d).1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic_poly(1), QPolynomial::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic_poly(6), QPolynomial::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12).to_string(), "q^4 - q^2 + 1");
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(phi_d_valuation(&QPolynomial::from_i64(&[-1, 0, 1]), 2).unwrap(), 1);
        assert_eq!(phi_d_valuation(&QPolynomial::monomial(3), 3).unwrap(), 0);
        assert_eq!(phi_d_valuation(&QPolynomial::from_i64(&[0, 0, 1, 1, 1]), 3).unwrap(), 1);
        assert_eq!(phi_d_valuation(&QPolynomial::zero(), 3), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn generic_degree_examples() {
        assert_eq!(generic_degree_typea(&p(&[4])).unwrap(), QPolynomial::one());
        assert_eq!(generic_degree_typea(&p(&[1, 1, 1])).unwrap(), QPolynomial::monomial(3));
        let g = generic_degree_typea(&p(&[2, 1])).unwrap();
        assert_eq!(g.to_string(), "q^2 + q");
        assert!(generic_degree_typea(&Partition::empty()).is_err());
    }

    #[test]
    fn membership_examples() {
        assert!(in_uch_phid_prime_typea(&p(&[2, 1]), 3).unwrap());
        assert!(!in_uch_phid_prime_typea(&p(&[2, 1]), 2).unwrap());
        for d in 1..8 {
            assert!(in_uch_phid_prime_typea(&p(&[5]), d).unwrap());
        }
        assert!(is_degenerate_d(1) && !is_degenerate_d(2));
    }

    #[test]
    fn display() {
        assert_eq!(QPolynomial::from_i64(&[2, 0, 0, -1]).to_string(), "-q^3 + 2");
        assert_eq!(QPolynomial::from_i64(&[0, -3]).to_string(), "-3*q");
        assert_eq!(QPolynomial::zero().to_string(), "0");
    }
}
