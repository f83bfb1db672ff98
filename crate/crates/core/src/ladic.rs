//! Residue-level number theory over Q_ℓ: multiplicative orders, square
//! classes, the Galois subgroups H_ℓ and H_[d], and root existence.

use serde::Serialize;

use crate::arith::{gcd, is_prime, lcm, p_part, pow_mod, prime_power, primitive_root, rem, units};
use crate::cyclotomic::GaloisSubgroup;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PrimePower {
    pub p: u64,
    pub exponent: u32,
    pub value: u64,
}

impl PrimePower {
    pub fn new(p: u64, exponent: u32) -> Result<Self> {
        if !is_prime(p) || exponent == 0 {
            return Err(Error::NotPrimePower(p.saturating_pow(exponent)));
        }
        Ok(PrimePower { p, exponent, value: p.pow(exponent) })
    }

    pub fn from_value(q: u64) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Ok(PrimePower { p, exponent: e, value: q })
    }
}

/// All prime powers up to `bound`.
pub fn prime_powers_up_to(bound: u64) -> Vec<PrimePower> {
    (2..=bound).filter_map(|q| PrimePower::from_value(q).ok()).collect()
}

fn check_odd_prime(ell: u64) -> Result<()> {
    if ell % 2 == 0 || !is_prime(ell) {
        return Err(Error::NotOddPrime(ell as i64));
    }
    Ok(())
}

fn check_unit(ell: u64, value: i64) -> Result<u64> {
    let r = rem(value, ell);
    if r == 0 {
        return Err(Error::Divisible { ell, value });
    }
    Ok(r)
}

/// d_ℓ(q), the multiplicative order of q modulo ℓ.
pub fn mult_order(q: i64, ell: u64) -> Result<u64> {
    check_odd_prime(ell)?;
    let x = check_unit(ell, q)?;
    let mut acc = x;
    let mut d = 1;
    while acc != 1 {
        acc = acc * x % ell;
        d += 1;
    }
    Ok(d)
}

/// Euler's criterion; by Hensel this decides √a ∈ Q_ℓ.
pub fn is_square_mod(a: i64, ell: u64) -> Result<bool> {
    check_odd_prime(ell)?;
    let x = check_unit(ell, a)?;
    Ok(pow_mod(x, (ell - 1) / 2, ell) == 1)
}

pub fn sqrt_q_fixed(q: &PrimePower, ell: u64) -> Result<bool> {
    is_square_mod(q.value as i64, ell)
}

pub fn sqrt_minus_q_fixed(q: &PrimePower, ell: u64) -> Result<bool> {
    is_square_mod(-(q.value as i64), ell)
}

/// H_ℓ at modulus n: units k that agree with a power of ℓ on the ℓ′-part
/// of n and are arbitrary on the ℓ-part.
pub fn hell_subgroup(ell: u64, n: u64) -> GaloisSubgroup {
    assert!(n >= 1);
    let n_lp = n / p_part(n, ell);
    let mut powers = Vec::new();
    let mut x = 1 % n_lp;
    loop {
        if powers.contains(&x) {
            break;
        }
        powers.push(x);
        x = x * (ell % n_lp) % n_lp;
    }
    let residues: Vec<u64> = if n == 1 {
        vec![0]
    } else {
        units(n).into_iter().filter(|k| powers.contains(&(k % n_lp))).collect()
    };
    GaloisSubgroup::new(n, residues).expect("H_ell is a subgroup")
}

/// H_[d] at modulus n: units congruent to 1 modulo d.
pub fn hd_subgroup(d: u64, n: u64) -> Result<GaloisSubgroup> {
    if d == 0 || n == 0 || n % d != 0 {
        return Err(Error::NotDivisor { d, n });
    }
    let residues: Vec<u64> = if n == 1 {
        vec![0]
    } else {
        units(n).into_iter().filter(|k| k % d == 1 % d).collect()
    };
    GaloisSubgroup::new(n, residues)
}

/// Whether X^r − ζ_a has a zero in Q_ℓ.
///
/// Only the order a of the target matters: all elements of order a generate
/// the same cyclic subgroup, and r-th powers form a subgroup.
pub fn root_exists_in_qell(r: u64, a: u64, ell: u64) -> Result<bool> {
    check_odd_prime(ell)?;
    if r == 0 || a == 0 {
        return Err(Error::InvalidParameter("r and a must be positive".into()));
    }
    check_unit(ell, r as i64)?;
    if (ell - 1) % a != 0 {
        return Err(Error::NotDivisor { d: a, n: ell - 1 });
    }
    let u = pow_mod(primitive_root(ell), (ell - 1) / a, ell);
    Ok(pow_mod(u, (ell - 1) / gcd(r, ell - 1), ell) == 1)
}

/// Whether X^r − b has a zero in Q_ℓ.
pub fn root_exists_for_integer(r: u64, b: i64, ell: u64) -> Result<bool> {
    check_odd_prime(ell)?;
    if r == 0 {
        return Err(Error::InvalidParameter("r must be positive".into()));
    }
    check_unit(ell, r as i64)?;
    let x = check_unit(ell, b)?;
    Ok(pow_mod(x, (ell - 1) / gcd(r, ell - 1), ell) == 1)
}

/// Whether X^{r₀δ} − ζ_{d₀/δ} has a zero in Q_ℓ, with d₀ = lcm(δ, d).
pub fn central_product_splits(delta: u64, d: u64, r0: u64, ell: u64) -> Result<bool> {
    if !(1..=3).contains(&delta) {
        return Err(Error::InvalidParameter(format!("delta must be 1, 2 or 3, got {delta}")));
    }
    let d0 = lcm(delta, d);
    root_exists_in_qell(r0 * delta, d0 / delta, ell)
}

/// A pair (ℓ, q) where the parity rule for √q or √(−q) fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SqrtParityFailure {
    pub ell: u64,
    pub q: u64,
    pub d: u64,
    pub radicand: &'static str,
}

/// Checks over odd primes ℓ ≤ `ell_max` and prime powers q ≤ `q_max`,
/// ℓ ∤ q: odd d_ℓ(q) gives √q ∈ Q_ℓ, and d_ℓ(q) = 2·odd gives √(−q) ∈ Q_ℓ.
/// Returns the number of pairs examined and the failures.
pub fn sqrt_parity_sweep(ell_max: u64, q_max: u64) -> (usize, Vec<SqrtParityFailure>) {
    let qs = prime_powers_up_to(q_max);
    let mut checked = 0;
    let mut failures = Vec::new();
    for ell in (3..=ell_max).filter(|&l| is_prime(l)) {
        for q in qs.iter().filter(|q| q.p != ell) {
            checked += 1;
            let d = mult_order(q.value as i64, ell).expect("ℓ ∤ q");
            if d % 2 == 1 && !sqrt_q_fixed(q, ell).expect("ℓ ∤ q") {
                failures.push(SqrtParityFailure { ell, q: q.value, d, radicand: "q" });
            }
            if d % 2 == 0 && (d / 2) % 2 == 1 && !sqrt_minus_q_fixed(q, ell).expect("ℓ ∤ q") {
                failures.push(SqrtParityFailure { ell, q: q.value, d, radicand: "-q" });
            }
        }
    }
    (checked, failures)
}
