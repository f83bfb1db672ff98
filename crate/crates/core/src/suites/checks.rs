//! Bodies of the named suites.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde_json::{json, Value};

use super::{Findings, ParamReader, SuiteOptions};
use crate::arith::{divisors, gcd, is_prime, lcm, pow_mod, primitive_root};
use crate::cyclotomic::GaloisContext;
use crate::error::Result;
use crate::group::{character_table, ElementGroup, MonomialPerm};
use crate::ladic::{
    central_product_splits, hd_subgroup, hell_subgroup, mult_order, prime_powers_up_to, root_exists_for_integer,
    root_exists_in_qell, sqrt_parity_sweep,
};
use crate::langmap::lang_case;
use crate::partitions::{apply_steps, beta_set, d_core, decompose_d_hook, partitions_of, remove_rim_hook, two_core, Partition};
use crate::rationality::{
    check_prop75, corollary76_consistency, corollary76_core_pairs, graph_extension_field_type_a, table1_consistency,
    Sign, Table1,
};
use crate::symbols::{symbol_d_core, symbols_up_to_defect, SymbolBCD};
use crate::weyl::{a_from_degrees, compare_with_prediction, max_d, sweep_cases, weyl_group};
use crate::wreath::{index2_stabilizers, index2_table, irr_labels, label_stabilizers, wreath_table, WreathCharLabel};

fn odd_primes(max: u64) -> impl Iterator<Item = u64> {
    (3..=max).filter(|&l| is_prime(l))
}

fn collect_par<T: Sync>(items: &[T], f: impl Fn(&T) -> Result<Findings> + Sync + Send) -> Result<Findings> {
    Findings::collect(items.par_iter().map(f).collect())
}

pub(super) fn lemma22(p: &mut ParamReader) -> Result<Findings> {
    let ell_max = p.u64("ell_max", 200)?;
    let q_max = p.u64("q_max", 200)?;
    let hell_ell_max = p.u64("hell_ell_max", 100)?;
    let n_max = p.u64("n_max", 120)?;
    let m_max = p.u64("m_max", 25)?;

    let mut out = Findings::default();
    let (checked, failures) = sqrt_parity_sweep(ell_max, q_max);
    out.tick(checked as u64);
    for f in failures {
        out.fail(json!({"part": "sqrt", "ell": f.ell, "q": f.q, "d": f.d, "radicand": f.radicand}));
    }

    let ells: Vec<u64> = odd_primes(hell_ell_max).collect();
    out.merge(collect_par(&ells, |&ell| {
        let mut f = Findings::default();
        for n in 1..=n_max {
            let h = hell_subgroup(ell, n);
            for d in divisors(gcd(ell - 1, n)) {
                f.tick(1);
                if !h.is_subset(&hd_subgroup(d, n)?) {
                    f.fail(json!({"part": "hell_in_hd", "ell": ell, "n": n, "d": d}));
                }
            }
        }
        Ok(f)
    })?);

    for m in (1..=m_max).step_by(2) {
        for n in (2 * m..=n_max).step_by(2 * m as usize) {
            out.tick(1);
            if hd_subgroup(2 * m, n)? != hd_subgroup(m, n)? {
                out.fail(json!({"part": "hd_2m_equals_hd_m", "m": m, "n": n}));
            }
        }
    }
    Ok(out)
}

/// The integer square root of a perfect square.
fn exact_sqrt(n: u64) -> Option<u64> {
    let s = (n as f64).sqrt().round() as u64;
    (s * s == n).then_some(s)
}

pub(super) fn lemma71(p: &mut ParamReader) -> Result<Findings> {
    let ell_max = p.u64("ell_max", 100)?;
    let r_max = p.u64("r_max", 20)?;
    let p0_max = p.u64("p0_max", 50)?;
    let ells: Vec<u64> = odd_primes(ell_max).collect();
    collect_par(&ells, |&ell| {
        let mut f = Findings::default();
        let g = primitive_root(ell);
        for r in (1..=r_max).filter(|r| r % ell != 0) {
            let powers: BTreeSet<u64> = (1..ell).map(|x| pow_mod(x, r, ell)).collect();
            for a in divisors(ell - 1) {
                f.tick(1);
                let u = pow_mod(g, (ell - 1) / a, ell);
                if root_exists_in_qell(r, a, ell)? != powers.contains(&u) {
                    f.fail(json!({"part": "root_of_unity_predicate", "ell": ell, "r": r, "a": a}));
                }
            }
            for b in 1..ell {
                f.tick(1);
                if root_exists_for_integer(r, b as i64, ell)? != powers.contains(&b) {
                    f.fail(json!({"part": "integer_predicate", "ell": ell, "r": r, "b": b}));
                }
            }
            // X^r − ζ_a is solvable for a | d_ℓ(p₀^r)
            for p0 in (2..=p0_max).filter(|&x| is_prime(x) && x != ell) {
                let d = mult_order(pow_mod(p0, r, ell) as i64, ell)?;
                for a in divisors(d) {
                    f.tick(1);
                    if !root_exists_in_qell(r, a, ell)? {
                        f.fail(json!({"part": "a", "ell": ell, "p0": p0, "r": r, "a": a}));
                    }
                }
            }
            // q² = p₀^r: if X^r − εq has no root then d′ is even
            for p0 in prime_powers_up_to(p0_max).into_iter().filter(|x| x.p != ell) {
                let q = if r % 2 == 0 {
                    pow_mod(p0.value, r / 2, ell)
                } else if let Some(s) = exact_sqrt(p0.value) {
                    pow_mod(s, r, ell)
                } else {
                    continue;
                };
                for eps in [1i64, -1] {
                    f.tick(1);
                    let b = eps * q as i64;
                    if !root_exists_for_integer(r, b, ell)? && mult_order(b, ell)? % 2 == 1 {
                        f.fail(json!({"part": "b", "ell": ell, "p0": p0.value, "r": r, "eps": eps}));
                    }
                }
            }
        }
        Ok(f)
    })
}

pub(super) fn lemma82(p: &mut ParamReader) -> Result<Findings> {
    let ell_max = p.u64("ell_max", 61)?;
    let p_max = p.u64("p_max", 23)?;
    let r0_max = p.u64("r0_max", 8)?;
    let mut out = Findings::default();
    for delta in 1..=3u64 {
        for prime in (2..=p_max).filter(|&x| is_prime(x)) {
            for r0 in 1..=r0_max {
                for ell in odd_primes(ell_max).filter(|&l| l != prime && (delta * r0) % l != 0) {
                    out.tick(1);
                    let d = mult_order(pow_mod(prime, r0, ell) as i64, ell)?;
                    if !central_product_splits(delta, d, r0, ell)? {
                        out.fail(json!({"delta": delta, "p": prime, "r0": r0, "ell": ell, "d": d}));
                    }
                }
            }
        }
    }
    Ok(out)
}

type Stabilizers = Arc<(GaloisContext, Vec<String>, Vec<u128>)>;
type StabilizerCache = Mutex<HashMap<(bool, u64, u32), Stabilizers>>;

/// Stabilizer masks per group, shared by the invariance and conductor suites.
fn cached_stabilizers(index2: bool, m: u64, a: u32) -> Result<Stabilizers> {
    static CACHE: OnceLock<StabilizerCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(s) = cache.lock().expect("cache lock").get(&(index2, m, a)) {
        return Ok(s.clone());
    }
    let entry = if index2 {
        let (ctx, chars, stabs) = index2_stabilizers(m, a)?;
        Arc::new((ctx, chars.iter().map(|c| c.to_string()).collect(), stabs))
    } else {
        let (ctx, labels, stabs) = label_stabilizers(m, a)?;
        Arc::new((ctx, labels.iter().map(|l| l.to_string()).collect(), stabs))
    };
    cache.lock().expect("cache lock").insert((index2, m, a), entry.clone());
    Ok(entry)
}

/// The groups C_m ≀ S_a (m ≤ m_max, a ≤ a_max) and G(m,2,a) (m even ≤
/// index2_m_max, 2 ≤ a ≤ index2_a_max), as (index2, m, a).
fn stabilizer_groups(p: &mut ParamReader) -> Result<Vec<(bool, u64, u32)>> {
    let m_max = p.u64("m_max", 12)?;
    let a_max = p.u32("a_max", 4)?;
    let i2_m_max = p.u64("index2_m_max", 6)?;
    let i2_a_max = p.u32("index2_a_max", 3)?;
    let mut groups = Vec::new();
    for m in 1..=m_max {
        for a in 1..=a_max {
            groups.push((false, m, a));
        }
    }
    for m in (2..=i2_m_max).step_by(2) {
        for a in 2..=i2_a_max {
            groups.push((true, m, a));
        }
    }
    Ok(groups)
}

fn group_name(index2: bool, m: u64, a: u32) -> String {
    if index2 {
        format!("G({m},2,{a})")
    } else {
        format!("G({m},1,{a})")
    }
}

/// Bits of the units mod m that H_[d] maps onto.
fn hd_mask(ctx: &GaloisContext, d: u64) -> Result<u128> {
    let m = ctx.n;
    let h = hd_subgroup(d, lcm(m, d))?;
    Ok(h.residues().iter().fold(0u128, |acc, &k| {
        acc | 1 << ctx.unit_index(k % m).expect("units reduce to units")
    }))
}

pub(super) fn thm41(p: &mut ParamReader) -> Result<Findings> {
    let groups = stabilizer_groups(p)?;
    let d_max = p.u64("d_max", 12)?;
    collect_par(&groups, |&(index2, m, a)| {
        let mut f = Findings::default();
        let stabs = cached_stabilizers(index2, m, a)?;
        let (ctx, names, masks) = &*stabs;
        for d in (1..=d_max).filter(|&d| lcm(2, d) % m == 0) {
            let need = hd_mask(ctx, d)?;
            for (name, &s) in names.iter().zip(masks) {
                f.tick(1);
                if s & need != need {
                    f.fail(json!({"group": group_name(index2, m, a), "character": name, "d": d}));
                }
            }
        }
        Ok(f)
    })
}

pub(super) fn lemma42(p: &mut ParamReader) -> Result<Findings> {
    let groups = stabilizer_groups(p)?;
    collect_par(&groups, |&(index2, m, a)| {
        let mut f = Findings::default();
        let stabs = cached_stabilizers(index2, m, a)?;
        let (ctx, names, masks) = &*stabs;
        for (name, &s) in names.iter().zip(masks) {
            f.tick(1);
            let c = ctx.conductor_from_stabilizer(s);
            if m % c != 0 {
                f.fail(json!({"group": group_name(index2, m, a), "character": name, "conductor": c}));
            }
        }
        Ok(f)
    })
}

pub(super) fn cor74(p: &mut ParamReader) -> Result<Findings> {
    let n_max = p.u32("n_max", 12)?;
    let d_max = p.u64("d_max", 12)?;
    let all: Vec<Partition> = (0..=n_max).flat_map(partitions_of).collect();
    let ds: Vec<u64> = (2..=d_max).step_by(2).collect();
    collect_par(&ds, |&d| {
        let mut f = Findings::default();
        let mut classes: BTreeMap<Partition, Vec<&Partition>> = BTreeMap::new();
        for lambda in &all {
            classes.entry(d_core(lambda, d).0).or_default().push(lambda);
        }
        for members in classes.values() {
            let k = members.len() as u64;
            f.tick(k * k);
            let first = two_core(members[0]);
            if let Some(other) = members.iter().find(|mu| two_core(mu) != first) {
                f.fail(json!({"part": "same_two_core", "d": d, "lambda": members[0].to_string(), "mu": other.to_string()}));
            }
        }
        for lambda in &all {
            let beta = beta_set(lambda, lambda.len())?;
            for &bead in beta.beads() {
                let target = bead - d as i64;
                if target < 0 || beta.contains(target) {
                    continue;
                }
                f.tick(1);
                let steps = decompose_d_hook(lambda, bead, d)?;
                let direct = remove_rim_hook(&beta, bead, d)?;
                if steps.len() as u64 != d / 2 || apply_steps(&beta, &steps)? != direct {
                    f.fail(json!({"part": "decomposition", "d": d, "lambda": lambda.to_string(), "bead": bead}));
                }
            }
        }
        Ok(f)
    })
}

fn all_symbols(rank_max: u32, defect_max: u32) -> Vec<SymbolBCD> {
    (0..=rank_max).flat_map(|r| symbols_up_to_defect(r, defect_max)).collect()
}

/// Degenerate symbols (equal rows, defect 0) have no settled convention and
/// are left out; the report says how many.
fn degenerate_note(rank_max: u32) -> String {
    let count: usize = (0..=rank_max).step_by(2).map(|r| partitions_of(r / 2).len()).sum();
    format!("{count} degenerate symbols of rank <= {rank_max} excluded")
}

pub(super) fn lemma72(p: &mut ParamReader) -> Result<Findings> {
    let rank_max = p.u32("rank_max", 6)?;
    let defect_max = p.u32("defect_max", 3)?;
    let d_max = p.u64("d_max", 7)?;
    let symbols = all_symbols(rank_max, defect_max);
    let ds: Vec<u64> = (1..=d_max).step_by(2).collect();
    let mut out = collect_par(&ds, |&d| {
        let mut f = Findings::default();
        let mut classes: BTreeMap<SymbolBCD, Vec<&SymbolBCD>> = BTreeMap::new();
        for s in &symbols {
            classes.entry(symbol_d_core(s, d)?).or_default().push(s);
        }
        for members in classes.values() {
            let k = members.len() as u64;
            f.tick(k * k);
            let first = symbol_d_core(members[0], 1)?;
            for s in &members[1..] {
                if symbol_d_core(s, 1)? != first {
                    f.fail(json!({"d": d, "s1": members[0].to_string(), "s2": s.to_string()}));
                    break;
                }
            }
        }
        Ok(f)
    })?;
    out.note(degenerate_note(rank_max));
    Ok(out)
}

pub(super) fn prop75(p: &mut ParamReader) -> Result<Findings> {
    let n_max = p.u32("n_max", 10)?;
    let ell_max = p.u64("ell_max", 31)?;
    let q_max = p.u64("q_max", 9)?;
    let r_max = p.u64("r_max", 2)?;
    let mut cases = Vec::new();
    for eps in [Sign::Plus, Sign::Minus] {
        for ell in odd_primes(ell_max) {
            for q in prime_powers_up_to(q_max).into_iter().filter(|q| q.p != ell) {
                for r in (1..=r_max).filter(|r| r % ell != 0) {
                    cases.push((eps, ell, q, r));
                }
            }
        }
    }
    collect_par(&cases, |&(eps, ell, q, r)| {
        let mut f = Findings::default();
        for n in 1..=n_max {
            let rep = check_prop75(eps, n, ell, &q, r)?;
            f.tick(rep.pairs.len() as u64);
            if !rep.pathway_holds {
                f.fail(json!({"eps": eps.value(), "n": n, "ell": ell, "q": q.value, "r": r, "pathway": false}));
            }
            for pair in rep.pairs.iter().filter(|x| !x.equal) {
                f.fail(json!({
                    "eps": eps.value(), "n": n, "ell": ell, "q": q.value, "r": r,
                    "lambda": pair.lambda.to_string(), "core": pair.core.to_string(),
                    "lambda_field": pair.lambda_field.to_string(), "core_field": pair.core_field.to_string(),
                }));
            }
        }
        Ok(f)
    })
}

pub(super) fn table1(_p: &mut ParamReader, opts: &SuiteOptions) -> Result<Findings> {
    let table = Table1::load(opts.data.as_deref())?;
    let rep = table1_consistency(&table);
    let mut f = Findings::default();
    f.tick(rep.checked as u64);
    for v in rep.violations {
        f.fail(Value::String(v));
    }
    Ok(f)
}

pub(super) fn cor55(p: &mut ParamReader) -> Result<Findings> {
    let p_max = p.u64("p_max", 23)?;
    let e_max = p.u32("e_max", 2)?;
    let n_max = p.u64("n_max", 6)?;
    let primes: Vec<u64> = (2..=p_max).filter(|&x| is_prime(x)).collect();
    collect_par(&primes, |&prime| {
        let mut f = Findings::default();
        for e in 1..=e_max {
            for n in 2..=n_max as usize {
                for k in 1..prime as i64 {
                    f.tick(1);
                    let c = lang_case(n, prime, e, k)?;
                    if !(c.formula_holds && c.central && c.c_identity) {
                        f.fail(serde_json::to_value(&c).expect("serializable"));
                    }
                }
            }
        }
        Ok(f)
    })
}

pub(super) fn weyl_match(p: &mut ParamReader) -> Result<Findings> {
    let rank_max = p.u32("rank_max", 5)?;
    let rank_max_d = p.u32("rank_max_d", 4)?;
    let cases = sweep_cases(rank_max, rank_max_d);
    collect_par(&cases, |&(ty, rank, twist)| {
        let mut f = Findings::default();
        let g = weyl_group(ty, rank)?;
        for d in 1..=max_d(rank) {
            let a = a_from_degrees(ty, rank, d, twist);
            if a == 0 {
                continue;
            }
            f.tick(1);
            let cmp = compare_with_prediction(&g, d, twist)?;
            if !cmp.matches || !cmp.hd_fixed || cmp.a != a {
                f.fail(json!({
                    "type": ty.to_string(), "rank": rank, "twist": twist.to_string(), "d": d,
                    "oracle_order": cmp.oracle.0, "oracle_degrees": cmp.oracle.1,
                    "predicted": cmp.predicted.map(|x| x.to_string()),
                    "matches": cmp.matches, "hd_fixed": cmp.hd_fixed, "a": cmp.a, "a_from_degrees": a,
                }));
            }
        }
        Ok(f)
    })
}

/// C_m ≀ S_a as a group of monomial matrices.
fn wreath_group(m: u64, a: u32) -> ElementGroup<MonomialPerm> {
    let n = a as usize;
    let id: Vec<usize> = (0..n).collect();
    let mut gens = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let mut perm = id.clone();
        perm.swap(i, i + 1);
        gens.push(MonomialPerm::new(m as u32, &perm, &vec![0; n]));
    }
    let mut c = vec![0u32; n];
    c[0] = 1 % m as u32;
    gens.push(MonomialPerm::new(m as u32, &id, &c));
    ElementGroup::generate(MonomialPerm::identity(n, m as u32), &gens)
}

pub(super) fn chartab(p: &mut ParamReader) -> Result<Findings> {
    let m_max = p.u64("m_max", 12)?;
    let a_max = p.u32("a_max", 4)?;
    let i2_m_max = p.u64("index2_m_max", 6)?;
    let i2_a_max = p.u32("index2_a_max", 3)?;
    let dixon_order_max = p.u64("dixon_order_max", 100)?;

    let mut tables = Vec::new();
    for m in 1..=m_max {
        for a in 1..=a_max {
            tables.push((false, m, a));
        }
    }
    for m in (2..=i2_m_max).step_by(2) {
        for a in 2..=i2_a_max {
            tables.push((true, m, a));
        }
    }
    let mut out = collect_par(&tables, |&(index2, m, a)| {
        let mut f = Findings::default();
        f.tick(1);
        let name = group_name(index2, m, a);
        let (order, degrees, ortho) = if index2 {
            let t = index2_table(m, a)?;
            (t.group_order(), t.degrees(), t.check_orthogonality())
        } else {
            let t = wreath_table(m, a)?;
            (t.group_order(), t.degrees(), t.check_orthogonality())
        };
        if let Err(e) = ortho {
            f.fail(json!({"group": name, "orthogonality": e}));
        }
        let sum: u64 = degrees.iter().map(|d| d * d).sum();
        if sum != order {
            f.fail(json!({"group": name, "sum_of_squares": sum, "order": order}));
        }
        Ok(f)
    })?;

    // Degrees straight from the labels, independent of the value tables.
    for m in 1..=m_max {
        for a in 1..=a_max {
            out.tick(1);
            let labels = irr_labels(m, a)?;
            let sum: u64 = labels.iter().map(|l: &WreathCharLabel| l.degree().pow(2)).sum();
            let order = m.pow(a) * crate::arith::factorial(u64::from(a));
            if sum != order {
                out.fail(json!({"group": group_name(false, m, a), "sum_of_squares": sum, "order": order}));
            }
        }
    }

    // Dixon tables of the generated groups against the combinatorial degrees.
    for m in 1..=m_max {
        for a in 1..=a_max {
            let order = m.pow(a) * crate::arith::factorial(u64::from(a));
            if order > dixon_order_max {
                continue;
            }
            out.tick(1);
            let table = character_table(&wreath_group(m, a))?;
            let mut expect: Vec<u64> = irr_labels(m, a)?.iter().map(|l| l.degree()).collect();
            expect.sort_unstable();
            if table.fingerprint() != (order, expect.clone()) || table.check_orthogonality().is_err() {
                out.fail(json!({"group": group_name(false, m, a), "dixon": table.fingerprint().1, "expected": expect}));
            }
        }
    }
    Ok(out)
}

pub(super) fn thm66a(p: &mut ParamReader) -> Result<Findings> {
    let n_max = p.u32("n_max", 12)?;
    let mut f = Findings::default();
    for n in 0..=n_max {
        for lambda in partitions_of(n) {
            let core = two_core(&lambda);
            for eps in [Sign::Plus, Sign::Minus] {
                f.tick(1);
                let a = graph_extension_field_type_a(eps, &lambda);
                let b = graph_extension_field_type_a(eps, &core);
                if a != b {
                    f.fail(json!({"eps": eps.value(), "lambda": lambda.to_string(), "field": a.to_string(), "core_field": b.to_string()}));
                }
            }
        }
    }
    Ok(f)
}

pub(super) fn cor76(p: &mut ParamReader) -> Result<Findings> {
    let rank_max = p.u32("rank_max", 6)?;
    let defect_max = p.u32("defect_max", 3)?;
    let d_max = p.u64("d_max", 7)?;
    let symbols = all_symbols(rank_max, defect_max);
    let mut f = Findings::default();
    for d in (1..=d_max).step_by(2) {
        let pairs = corollary76_core_pairs(&symbols, d)?;
        let (rep, _) = corollary76_consistency(&pairs, d)?;
        f.tick(rep.checked as u64);
        for v in rep.violations {
            f.fail(Value::String(v));
        }
    }
    f.note(degenerate_note(rank_max));
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_count_matches_enumeration() {
        for rank_max in 0..=6u32 {
            let mut count = 0;
            for rank in 0..=rank_max {
                for k in 0..=rank {
                    for alpha in partitions_of(k) {
                        for beta in partitions_of(rank - k) {
                            count += usize::from(SymbolBCD::from_bipartition(&alpha, &beta, 0).is_degenerate());
                        }
                    }
                }
            }
            assert_eq!(degenerate_note(rank_max), format!("{count} degenerate symbols of rank <= {rank_max} excluded"));
        }
    }
}
