//! Worked values, frozen from hand computation and independent enumeration.

use std::collections::BTreeSet;

use galfix::cyclotomic::CyclotomicNumber;
use galfix::ladic::{
    central_product_splits, hd_subgroup, hell_subgroup, is_square_mod, mult_order, root_exists_for_integer,
    root_exists_in_qell, sqrt_minus_q_fixed, sqrt_q_fixed, PrimePower,
};
use galfix::langmap::jacobi_symbol;
use galfix::partitions::{beta_set, d_core, remove_rim_hook, two_core, Partition};
use galfix::qpoly::{cyclotomic_poly, generic_degree_typea, in_uch_phid_prime_typea, phi_d_valuation, QPolynomial};
use galfix::rationality::{extension_field_type_a, graph_extension_field_type_a, Sign};
use galfix::weyl::{relative_weyl_group, Twist, WeylType};
use galfix::wreath::{conductor_of_char, h_d_invariant, irr_labels, WreathCharLabel};

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

fn residues(h: &galfix::cyclotomic::GaloisSubgroup) -> Vec<u64> {
    h.residues().iter().copied().collect()
}

#[test]
fn cyclotomic_values() {
    let z3 = CyclotomicNumber::root_of_unity(3, 1);
    let z3sq = CyclotomicNumber::root_of_unity(3, 2);
    let s = &z3 + &z3sq;
    assert_eq!(s, CyclotomicNumber::from_integer(3, -1));
    let root = &z3 - &z3sq;
    assert_eq!(&root * &root, CyclotomicNumber::from_integer(3, -3));
    assert_eq!(root.galois_apply(2).unwrap(), -&root);
    assert_eq!(root.conductor(), 3);
    assert_eq!(CyclotomicNumber::root_of_unity(8, 1).conductor(), 8);
    assert_eq!(CyclotomicNumber::root_of_unity(4, 2), CyclotomicNumber::from_integer(4, -1));
}

#[test]
fn cyclotomic_polynomials() {
    assert_eq!(cyclotomic_poly(12), QPolynomial::from_i64(&[1, 0, -1, 0, 1]));
    assert_eq!(cyclotomic_poly(6), QPolynomial::from_i64(&[1, -1, 1]));
    assert_eq!(phi_d_valuation(&QPolynomial::from_i64(&[0, 0, 1, 1, 1]), 3).unwrap(), 1);
    assert_eq!(phi_d_valuation(&QPolynomial::from_i64(&[-1, 0, 1]), 2).unwrap(), 1);
}

#[test]
fn generic_degrees() {
    assert_eq!(generic_degree_typea(&part("(1,1,1)")).unwrap().to_string(), "q^3");
    assert_eq!(generic_degree_typea(&part("(2,1)")).unwrap().to_string(), "q^2 + q");
    assert!(in_uch_phid_prime_typea(&part("(2,1)"), 3).unwrap());
    assert!(!in_uch_phid_prime_typea(&part("(2,1)"), 2).unwrap());
}

#[test]
fn local_arithmetic() {
    assert_eq!(mult_order(3, 7).unwrap(), 6);
    assert!(is_square_mod(2, 7).unwrap());
    assert!(!is_square_mod(3, 7).unwrap());
    let q = |v| PrimePower::from_value(v).unwrap();
    assert!(sqrt_q_fixed(&q(2), 7).unwrap());
    assert!(!sqrt_q_fixed(&q(3), 5).unwrap());
    assert!(sqrt_minus_q_fixed(&q(3), 7).unwrap());
    assert!(!sqrt_minus_q_fixed(&q(2), 5).unwrap());
    assert_eq!(residues(&hell_subgroup(5, 8)), vec![1, 5]);
    assert_eq!(residues(&hell_subgroup(7, 12)), vec![1, 7]);
    assert_eq!(residues(&hd_subgroup(4, 8).unwrap()), vec![1, 5]);
    assert_eq!(hd_subgroup(6, 12).unwrap(), hd_subgroup(3, 12).unwrap());
    assert!(root_exists_in_qell(2, 3, 7).unwrap());
    assert!(!root_exists_in_qell(2, 4, 5).unwrap());
    assert!(root_exists_for_integer(2, -3, 7).unwrap());
    assert!(!root_exists_for_integer(3, 2, 7).unwrap());
    assert!(central_product_splits(2, 6, 1, 7).unwrap());
    assert!(central_product_splits(2, 3, 1, 7).unwrap());
}

#[test]
fn partition_cores() {
    let beta = beta_set(&part("(3,1)"), 2).unwrap();
    assert_eq!(beta.beads(), &[4, 1]);
    assert_eq!(remove_rim_hook(&beta, 4, 2).unwrap().to_partition(), part("(1,1)"));
    assert!(remove_rim_hook(&beta, 1, 2).is_err());
    assert_eq!(d_core(&part("(3,1)"), 2), (Partition::empty(), 2));
    assert_eq!(d_core(&part("(4,3,1)"), 4), (Partition::empty(), 2));
    assert_eq!(d_core(&part("(2,1)"), 2), (part("(2,1)"), 0));
    assert_eq!(two_core(&part("(3,1)")), Partition::empty());
}

#[test]
fn wreath_labels_and_conductors() {
    assert_eq!(irr_labels(2, 2).unwrap().len(), 5);
    assert_eq!(irr_labels(7, 0).unwrap().len(), 1);
    let label: WreathCharLabel = "[(),(2),(),()]".parse().unwrap();
    assert_eq!(conductor_of_char(&label, 4, 2).unwrap(), 4);
    for l in irr_labels(2, 3).unwrap() {
        assert_eq!(conductor_of_char(&l, 2, 3).unwrap(), 1);
    }
    let labels = irr_labels(4, 2).unwrap();
    assert_eq!(labels.len(), 14);
    assert!(labels.iter().all(|l| h_d_invariant(l, 4, 2, 4).unwrap()));
    let moved: WreathCharLabel = "[(),(1),(),()]".parse().unwrap();
    assert!(!h_d_invariant(&moved, 4, 1, 2).unwrap());
}

#[test]
fn relative_weyl_groups() {
    let w = relative_weyl_group(WeylType::B, 2, 4, Twist::Identity).unwrap();
    assert_eq!(w.fingerprint(), (4, vec![1, 1, 1, 1]));
    let w = relative_weyl_group(WeylType::A, 2, 3, Twist::Identity).unwrap();
    assert_eq!(w.fingerprint().0, 3);
    let w = relative_weyl_group(WeylType::B, 3, 2, Twist::Identity).unwrap();
    assert_eq!(w.fingerprint().0, 48);
}

#[test]
fn extension_fields() {
    let q = |v| PrimePower::from_value(v).unwrap();
    assert!(graph_extension_field_type_a(Sign::Plus, &part("(3)")).is_trivial());
    assert!(!graph_extension_field_type_a(Sign::Minus, &part("(2,1)")).is_trivial());
    assert!(extension_field_type_a(Sign::Plus, &part("(1,1)"), 7, &q(2), 1).unwrap().is_trivial());
    assert!(extension_field_type_a(Sign::Minus, &part("(2,1)"), 7, &q(3), 2).unwrap().is_trivial());
    assert!(!extension_field_type_a(Sign::Minus, &part("(2,1)"), 5, &q(2), 2).unwrap().is_trivial());
}

#[test]
fn jacobi_symbols() {
    assert_eq!(jacobi_symbol(3, 7).unwrap(), -1);
    assert_eq!(jacobi_symbol(3, 8).unwrap(), 1);
    assert_eq!(jacobi_symbol(25, 9).unwrap(), 1);
    let squares: BTreeSet<u64> = (1..7u64).map(|k| k * k % 7).collect();
    for k in 1..7 {
        assert_eq!(jacobi_symbol(k, 7).unwrap() == 1, squares.contains(&(k as u64)));
    }
}
