//! Integer fast path: elements of Z[t]/(t^n - 1) viewed in Q(ζ_n).
//!
//! Character values of the groups in this crate are sums of roots of unity,
//! so bulk fixedness and conductor checks run on plain `i64` vectors.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::phi::cyclotomic_coeffs;
use super::CyclotomicNumber;
use crate::arith::{divisors, gcd, rem, units};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZetaPoly {
    pub coeffs: Vec<i64>,
}

impl ZetaPoly {
    pub fn zero(n: usize) -> Self {
        ZetaPoly { coeffs: vec![0; n] }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn from_integer(n: usize, c: i64) -> Self {
        let mut z = Self::zero(n);
        z.coeffs[0] = c;
        z
    }

    pub fn root(n: usize, k: i64) -> Self {
        let mut z = Self::zero(n);
        z.coeffs[rem(k, n as u64) as usize] = 1;
        z
    }

    pub fn add_assign(&mut self, other: &ZetaPoly) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    pub fn scaled(&self, s: i64) -> ZetaPoly {
        ZetaPoly { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn mul(&self, other: &ZetaPoly) -> ZetaPoly {
        let n = self.order();
        let mut out = vec![0i64; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b != 0 {
                    out[(i + j) % n] += a * b;
                }
            }
        }
        ZetaPoly { coeffs: out }
    }

    /// Image under ζ ↦ ζ^k.
    pub fn galois(&self, k: u64) -> ZetaPoly {
        let n = self.order();
        let mut out = vec![0i64; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            out[(i * k as usize) % n] += a;
        }
        ZetaPoly { coeffs: out }
    }

    /// Power-basis coordinates after reduction modulo Φ_n.
    pub fn reduced(&self) -> Vec<i64> {
        let n = self.order() as u64;
        reduce_i64(self.coeffs.clone(), &cyclotomic_coeffs(n))
    }

    pub fn is_zero(&self) -> bool {
        self.reduced().iter().all(|&c| c == 0)
    }

    pub fn equals(&self, other: &ZetaPoly) -> bool {
        let diff = ZetaPoly {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        };
        diff.is_zero()
    }

    pub fn to_cyclotomic(&self) -> CyclotomicNumber {
        let n = self.order() as u64;
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i as i64, BigRational::from_integer(BigInt::from(c))));
        CyclotomicNumber::from_terms(n, terms)
    }
}

pub(crate) fn reduce_i64(mut v: Vec<i64>, phi: &[i64]) -> Vec<i64> {
    let deg = phi.len() - 1;
    for i in (deg..v.len()).rev() {
        let c = v[i];
        if c != 0 {
            for (j, &pj) in phi.iter().enumerate() {
                v[i - deg + j] -= c * pj;
            }
        }
    }
    v.truncate(deg);
    v
}

/// Precomputed Galois data for Q(ζ_n): the units and a reduction context.
///
/// Stabilizers are bitmasks over the index of each unit in `units`.
#[derive(Clone, Debug)]
pub struct GaloisContext {
    pub n: u64,
    pub units: Vec<u64>,
    phi: Arc<Vec<i64>>,
}

impl GaloisContext {
    pub fn new(n: u64) -> Self {
        assert!(n >= 1);
        let units = if n == 1 { vec![1] } else { units(n) };
        GaloisContext { n, units, phi: cyclotomic_coeffs(n) }
    }

    pub fn full_mask(&self) -> u128 {
        assert!(self.units.len() <= 128);
        if self.units.len() == 128 {
            u128::MAX
        } else {
            (1u128 << self.units.len()) - 1
        }
    }

    /// Bitmask of units k with σ_k(x) = x.
    pub fn stabilizer(&self, x: &[i64]) -> u128 {
        let n = self.n as usize;
        let mut mask = 0u128;
        let mut diff = vec![0i64; n];
        for (idx, &k) in self.units.iter().enumerate() {
            diff.iter_mut().for_each(|d| *d = 0);
            for (i, &a) in x.iter().enumerate() {
                diff[i] -= a;
                diff[(i * k as usize) % n] += a;
            }
            if reduce_i64(diff.clone(), &self.phi).iter().all(|&c| c == 0) {
                mask |= 1 << idx;
            }
        }
        mask
    }

    /// Mask of the units congruent to 1 modulo `c`.
    pub fn congruent_to_one_mask(&self, c: u64) -> u128 {
        self.mask_of(|k| k % c == 1 % c)
    }

    pub fn mask_of(&self, pred: impl Fn(u64) -> bool) -> u128 {
        self.units
            .iter()
            .enumerate()
            .filter(|(_, &k)| pred(k))
            .fold(0u128, |m, (i, _)| m | (1 << i))
    }

    /// Smallest divisor c of n whose fixing group lies inside the stabilizer.
    pub fn conductor_from_stabilizer(&self, stab: u128) -> u64 {
        divisors(self.n)
            .into_iter()
            .find(|&c| {
                let need = self.congruent_to_one_mask(c);
                need & stab == need
            })
            .unwrap_or(self.n)
    }

    pub fn unit_index(&self, k: u64) -> Option<usize> {
        let k = k % self.n;
        if gcd(k, self.n) != 1 && self.n != 1 {
            return None;
        }
        self.units.iter().position(|&u| u % self.n == k)
    }
}
