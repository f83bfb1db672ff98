//! Randomized invariants with independent oracles.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::sample::select;

use galfix::arith::{gcd, units};
use galfix::cyclotomic::{CyclotomicNumber, GaloisSubgroup, Rational};
use galfix::ladic::prime_powers_up_to;
use galfix::langmap::{lang_case, QuadraticField};
use galfix::partitions::{
    apply_steps, beta_set, d_core, d_core_all_paths, decompose_d_hook, partitions_of, remove_rim_hook, two_core,
    Partition,
};
use galfix::qpoly::{generic_degree_typea, phi_d_valuation, predicted_valuation};
use galfix::rationality::{graph_extension_field_type_a, FieldDescriptor, FrobeniusClass, Radicand, Sign};
use galfix::symbols::{remove_symbol_hook, symbol_d_core, symbols_up_to_defect, SymbolBCD};

// ---- independent cyclotomic oracle: Z[t]/(t^n − 1) then reduction by Φ_n ----

fn mobius(n: u64) -> i64 {
    let (mut n, mut sign, mut p) = (n, 1, 2);
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        -sign
    } else {
        sign
    }
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact quotient by a monic-up-to-sign divisor.
fn poly_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut r = num.to_vec();
    let lead = *den.last().unwrap();
    let mut q = vec![0; num.len() - den.len() + 1];
    for i in (0..q.len()).rev() {
        let c = r[i + den.len() - 1] / lead;
        q[i] = c;
        for (j, &d) in den.iter().enumerate() {
            r[i + j] -= c * d;
        }
    }
    assert!(r.iter().all(|&x| x == 0), "inexact division");
    q
}

/// Φ_n = ∏_{d|n} (t^d − 1)^{μ(n/d)}.
fn phi_oracle(n: u64) -> Vec<i64> {
    let (mut num, mut den) = (vec![1i64], vec![1i64]);
    for d in (1..=n).filter(|d| n % d == 0) {
        let mut f = vec![0i64; d as usize + 1];
        f[0] = -1;
        f[d as usize] = 1;
        match mobius(n / d) {
            1 => num = poly_mul(&num, &f),
            -1 => den = poly_mul(&den, &f),
            _ => {}
        }
    }
    poly_div(&num, &den)
}

fn reduce_oracle(mut v: Vec<Rational>, phi: &[i64]) -> Vec<Rational> {
    let deg = phi.len() - 1;
    for i in (deg..v.len()).rev() {
        let c = std::mem::replace(&mut v[i], Rational::zero());
        for (j, &p) in phi.iter().enumerate().take(deg) {
            v[i - deg + j] -= &c * Rational::from_integer(BigInt::from(p));
        }
    }
    v.truncate(deg);
    v
}

fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn to_number(n: u64, v: &[(i64, i64)]) -> CyclotomicNumber {
    CyclotomicNumber::from_terms(n, v.iter().enumerate().map(|(e, &(a, b))| (e as i64, rat(a, b))))
}

fn dense(x: &CyclotomicNumber, len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (&e, c) in x.coefficients() {
        out[e as usize] = c.clone();
    }
    out
}

fn element(n: u64) -> impl Strategy<Value = Coeffs> {
    prop::collection::vec((-6i64..=6, 1i64..=4), n as usize)
}

/// Coefficients as (numerator, denominator) pairs.
type Coeffs = Vec<(i64, i64)>;

fn cyclotomic_pair() -> impl Strategy<Value = (u64, Coeffs, Coeffs)> {
    (1u64..=24).prop_flat_map(|n| (Just(n), element(n), element(n)))
}

fn unit_of(n: u64) -> impl Strategy<Value = u64> {
    select(units(n))
}

fn partition(n_max: u32) -> impl Strategy<Value = Partition> {
    (0..=n_max).prop_flat_map(|n| select(partitions_of(n)))
}

fn nonempty_partition(n_max: u32) -> impl Strategy<Value = Partition> {
    (1..=n_max).prop_flat_map(|n| select(partitions_of(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn field_arithmetic_matches_oracle((n, a, b) in cyclotomic_pair()) {
        let phi = phi_oracle(n);
        let ra: Vec<Rational> = a.iter().map(|&(x, y)| rat(x, y)).collect();
        let rb: Vec<Rational> = b.iter().map(|&(x, y)| rat(x, y)).collect();
        let len = n as usize;
        let mut sum = vec![Rational::zero(); len];
        let mut prod = vec![Rational::zero(); len];
        for i in 0..len {
            sum[i] = &ra[i] + &rb[i];
            for j in 0..len {
                prod[(i + j) % len] += &ra[i] * &rb[j];
            }
        }
        let (x, y) = (to_number(n, &a), to_number(n, &b));
        let deg = phi.len() - 1;
        prop_assert_eq!(dense(&(&x + &y), deg), reduce_oracle(sum, &phi));
        prop_assert_eq!(dense(&(&x * &y), deg), reduce_oracle(prod, &phi));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn galois_action_composes((n, a) in (1u64..=24).prop_flat_map(|n| (Just(n), element(n))), s1 in any::<prop::sample::Index>(), s2 in any::<prop::sample::Index>()) {
        let u = units(n);
        let (k1, k2) = (*s1.get(&u), *s2.get(&u));
        let x = to_number(n, &a);
        let lhs = x.galois_apply(k2 as i64).unwrap().galois_apply(k1 as i64).unwrap();
        prop_assert_eq!(lhs, x.galois_apply((k1 * k2 % n) as i64).unwrap());
    }

    #[test]
    fn conductor_is_galois_invariant((n, a, k) in (1u64..=24).prop_flat_map(|n| (Just(n), element(n), unit_of(n)))) {
        let x = to_number(n, &a);
        let c = x.conductor();
        prop_assert_eq!(x.galois_apply(k as i64).unwrap().conductor(), c);
        let fixed = x.is_fixed_by(&GaloisSubgroup::full(n)).unwrap();
        prop_assert_eq!(c == 1, x.is_rational());
        prop_assert_eq!(c == 1, fixed);
    }

    #[test]
    fn beta_sets_round_trip(lambda in partition(14), extra in 0usize..4) {
        let beta = beta_set(&lambda, lambda.len() + extra).unwrap();
        prop_assert_eq!(beta.to_partition(), lambda);
    }

    #[test]
    fn core_size_and_weight(lambda in partition(14), d in 1u64..=8) {
        let (core, w) = d_core(&lambda, d);
        prop_assert_eq!(u64::from(lambda.size()), u64::from(core.size()) + d * u64::from(w));
        let ends = d_core_all_paths(&lambda, d);
        prop_assert_eq!(ends.len(), 1);
        prop_assert!(ends.contains(&core));
        prop_assert_eq!(d_core(&core, d), (core.clone(), 0));
    }

    #[test]
    fn domino_steps_recompose(lambda in partition(12), half in 1u64..=5) {
        let d = 2 * half;
        let beta = beta_set(&lambda, lambda.len()).unwrap();
        for &b in beta.beads() {
            let Ok(direct) = remove_rim_hook(&beta, b, d) else { continue };
            let steps = decompose_d_hook(&lambda, b, d).unwrap();
            prop_assert_eq!(steps.len() as u64, half);
            prop_assert_eq!(apply_steps(&beta, &steps).unwrap(), direct);
        }
    }

    #[test]
    fn degree_valuation_is_weight_defect(lambda in nonempty_partition(10), d in 2u64..=10) {
        let deg = generic_degree_typea(&lambda).unwrap();
        prop_assert_eq!(phi_d_valuation(&deg, d).unwrap(), predicted_valuation(&lambda, d));
    }

    #[test]
    fn generic_degree_at_one_counts_tableaux(lambda in nonempty_partition(10)) {
        let n = u64::from(lambda.size());
        let hooks: u64 = lambda.hook_lengths().iter().map(|&h| u64::from(h)).product();
        let tableaux = (1..=n).product::<u64>() / hooks;
        prop_assert_eq!(generic_degree_typea(&lambda).unwrap().eval(&BigInt::one()), BigInt::from(tableaux));
    }

    #[test]
    fn graph_field_depends_on_two_core(lambda in partition(16), minus in any::<bool>()) {
        let eps = if minus { Sign::Minus } else { Sign::Plus };
        prop_assert_eq!(
            graph_extension_field_type_a(eps, &lambda),
            graph_extension_field_type_a(eps, &two_core(&lambda))
        );
    }

    #[test]
    fn field_resolution_is_idempotent_and_monotone(
        gens in prop::collection::vec((0u8..4, 1u64..=6), 0..4),
        ell in select(vec![3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31]),
        q in select(prime_powers_up_to(32)),
    ) {
        prop_assume!(q.p != ell);
        let field = gens.iter().fold(FieldDescriptor::trivial(), |acc, &(kind, r)| {
            let g = match kind {
                0 => FieldDescriptor::adjoin_sqrt(Radicand::Q),
                1 => FieldDescriptor::adjoin_sqrt(Radicand::MinusQ),
                2 => FieldDescriptor::adjoin_root(r, FrobeniusClass::MinusQ),
                _ => FieldDescriptor::adjoin_root(r, FrobeniusClass::One),
            };
            acc.join(&g)
        });
        prop_assume!(field.generators().iter().all(|g| match g {
            galfix::rationality::Generator::Root { r, .. } => r % ell != 0,
            _ => true,
        }));
        let once = field.resolve(ell, &q).unwrap();
        prop_assert_eq!(once.resolve(ell, &q).unwrap(), once.clone());
        prop_assert!(once.generators().is_subset(field.generators()));
        if field.is_trivial() {
            prop_assert!(once.is_trivial());
        }
        prop_assert_eq!(once.resolved(), Some(once.is_trivial()));
    }
}

fn symbols_small() -> Vec<SymbolBCD> {
    (0..=5).flat_map(|rank| symbols_up_to_defect(rank, 3)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn symbol_hooks_commute_with_shift(s in select(symbols_small()), shift in 1u32..4, d in select(vec![1u64, 3, 5])) {
        let (r1, r2) = s.shifted(shift);
        let shifted = SymbolBCD::new(r1, r2).unwrap();
        prop_assert_eq!(&shifted, &s);
        for row in [1u8, 2] {
            for &e in s.row(row).unwrap() {
                if let Ok(t) = remove_symbol_hook(&s, row, e, d) {
                    prop_assert_eq!(t.rank(), s.rank() - d as i64);
                }
            }
        }
        let core = symbol_d_core(&s, d).unwrap();
        prop_assert_eq!((s.rank() - core.rank()).rem_euclid(d as i64), 0);
    }
}

#[test]
fn cyclotomic_products_telescope() {
    for d in 1..=60u64 {
        let mut prod = vec![1i64];
        for e in (1..=d).filter(|e| d % e == 0) {
            prod = poly_mul(&prod, &phi_oracle(e));
        }
        let mut expect = vec![0i64; d as usize + 1];
        expect[0] = -1;
        expect[d as usize] = 1;
        assert_eq!(prod, expect, "d = {d}");
        let lib = galfix::qpoly::cyclotomic_poly(d);
        let lib: Vec<i64> = lib.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect();
        assert_eq!(lib, phi_oracle(d), "Φ_{d}");
    }
}

#[test]
fn lang_key_identity() {
    for p in [2u64, 3, 5, 7, 11, 13] {
        for e in 1..=2u32 {
            let q = p.pow(e);
            for k in 1..p as i64 {
                if gcd(k as u64, p) != 1 {
                    continue;
                }
                let case = lang_case(4, p, e, k).unwrap();
                assert!(case.c_identity, "c^(2(q-1)) = 1 fails at p={p} e={e} k={k}");
                assert!(case.central, "Lang image not central at p={p} e={e} k={k}");
                let f = QuadraticField::new(p).unwrap();
                let c = f.sqrt(f.from_int(k)).unwrap();
                assert!(c.pow(2 * (q - 1)).is_one());
            }
        }
    }
}
