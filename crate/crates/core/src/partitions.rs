//! Partitions, β-sets, rim hooks and d-cores.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition { parts })
        } else {
            Err(Error::InvalidPartition(parts.into_iter().map(i64::from).collect()))
        }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Hook length of every box, row by row.
    pub fn hook_lengths(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut out = Vec::new();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                out.push(row - j as u32 + conj.parts[j] - i as u32 - 1);
            }
        }
        out
    }

    /// Σ (i-1)·λ_i.
    pub fn n_statistic(&self) -> u32 {
        self.parts.iter().enumerate().map(|(i, &p)| i as u32 * p).sum()
    }

    /// Whether the partition is a staircase (k, k-1, …, 1).
    pub fn is_staircase(&self) -> bool {
        let k = self.parts.len() as u32;
        self.parts.iter().enumerate().all(|(i, &p)| p == k - i as u32)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `(3,1)`, `[3, 1]`, `3,1`, `()` or `∅`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']).trim();
        if t.is_empty() || t == "∅" {
            return Ok(Partition::empty());
        }
        let mut raw = Vec::new();
        for piece in t.split(',') {
            let v: i64 = piece
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad partition '{s}'")))?;
            raw.push(v);
        }
        if raw.iter().any(|&v| v <= 0 || v > u32::MAX as i64) {
            return Err(Error::InvalidPartition(raw));
        }
        Partition::new(raw.into_iter().map(|v| v as u32).collect())
    }
}

/// All partitions of `n`, largest first part first.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Strictly decreasing bead positions; equality is up to shift.
#[derive(Clone, Debug)]
pub struct BetaSet {
    beads: Vec<i64>,
}

impl BetaSet {
    pub fn new(mut beads: Vec<i64>) -> Result<Self> {
        beads.sort_unstable_by(|a, b| b.cmp(a));
        if beads.iter().any(|&b| b < 0) || beads.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter(format!("invalid beta-set {beads:?}")));
        }
        Ok(BetaSet { beads })
    }

    pub fn beads(&self) -> &[i64] {
        &self.beads
    }

    pub fn len(&self) -> usize {
        self.beads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.beads.is_empty()
    }

    pub fn contains(&self, b: i64) -> bool {
        self.beads.contains(&b)
    }

    pub fn to_partition(&self) -> Partition {
        let l = self.beads.len() as i64;
        let parts = self
            .beads
            .iter()
            .enumerate()
            .map(|(i, &b)| (b - (l - 1 - i as i64)) as u32)
            .filter(|&p| p > 0)
            .collect();
        Partition { parts }
    }

    /// Prepends `k` staircase beads.
    pub fn shifted(&self, k: usize) -> BetaSet {
        let mut beads: Vec<i64> = self.beads.iter().map(|b| b + k as i64).collect();
        beads.extend((0..k as i64).rev());
        BetaSet { beads }
    }
}

impl PartialEq for BetaSet {
    fn eq(&self, other: &Self) -> bool {
        self.to_partition() == other.to_partition()
    }
}

impl Eq for BetaSet {}

impl Hash for BetaSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.to_partition().hash(state);
    }
}

impl fmt::Display for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.beads.iter().map(|b| b.to_string()).collect();
        write!(f, "{{{}}}", body.join(","))
    }
}

/// β_i = λ_i + (length − i).
pub fn beta_set(lambda: &Partition, length: usize) -> Result<BetaSet> {
    if length < lambda.len() {
        return Err(Error::BetaSetTooShort { length, parts: lambda.len() });
    }
    let beads = (0..length)
        .map(|i| lambda.parts.get(i).copied().unwrap_or(0) as i64 + (length - 1 - i) as i64)
        .collect();
    Ok(BetaSet { beads })
}

/// Moves `bead` down by `d`, removing a d-rim hook.
pub fn remove_rim_hook(beta: &BetaSet, bead: i64, d: u64) -> Result<BetaSet> {
    if !beta.contains(bead) {
        return Err(Error::MissingBead(bead));
    }
    let target = bead - d as i64;
    if target < 0 {
        return Err(Error::NegativeBead { bead, d });
    }
    if beta.contains(target) {
        return Err(Error::BeadCollision { bead, d });
    }
    let mut beads: Vec<i64> = beta.beads.iter().map(|&b| if b == bead { target } else { b }).collect();
    beads.sort_unstable_by(|a, b| b.cmp(a));
    Ok(BetaSet { beads })
}

fn legal_moves(beta: &BetaSet, d: u64) -> Vec<i64> {
    beta.beads
        .iter()
        .copied()
        .filter(|&b| b - d as i64 >= 0 && !beta.contains(b - d as i64))
        .collect()
}

/// The d-core and d-weight, by greedy rim-hook removal.
pub fn d_core(lambda: &Partition, d: u64) -> (Partition, u32) {
    assert!(d >= 1);
    let mut beta = beta_set(lambda, lambda.len()).expect("minimal length");
    let mut weight = 0;
    while let Some(&b) = legal_moves(&beta, d).first() {
        beta = remove_rim_hook(&beta, b, d).expect("legal move");
        weight += 1;
    }
    (beta.to_partition(), weight)
}

/// The d-core read off the d-abacus: slide every bead down its runner.
pub fn d_core_abacus(lambda: &Partition, d: u64) -> (Partition, u32) {
    let beta = beta_set(lambda, lambda.len()).expect("minimal length");
    let d = d as i64;
    let mut core = Vec::new();
    let mut weight = 0i64;
    for r in 0..d {
        let mut on_runner: Vec<i64> = beta.beads.iter().copied().filter(|b| b % d == r).collect();
        on_runner.sort_unstable();
        for (k, b) in on_runner.into_iter().enumerate() {
            let settled = r + k as i64 * d;
            weight += (b - settled) / d;
            core.push(settled);
        }
    }
    let core = BetaSet::new(core).expect("distinct");
    (core.to_partition(), weight as u32)
}

/// Every terminal partition reachable by d-rim-hook removals.
pub fn d_core_all_paths(lambda: &Partition, d: u64) -> BTreeSet<Partition> {
    fn explore(
        beta: BetaSet,
        d: u64,
        seen: &mut HashMap<Partition, ()>,
        out: &mut BTreeSet<Partition>,
    ) {
        let key = beta.to_partition();
        if seen.insert(key.clone(), ()).is_some() {
            return;
        }
        let moves = legal_moves(&beta, d);
        if moves.is_empty() {
            out.insert(key);
            return;
        }
        for b in moves {
            explore(remove_rim_hook(&beta, b, d).unwrap(), d, seen, out);
        }
    }
    let mut out = BTreeSet::new();
    let beta = beta_set(lambda, lambda.len()).expect("minimal length");
    explore(beta, d, &mut HashMap::new(), &mut out);
    out
}

pub fn two_core(lambda: &Partition) -> Partition {
    d_core(lambda, 2).0
}

/// One bead move of a hook decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HookStep {
    pub from: i64,
    pub to: i64,
}

/// Splits the d-hook removal at `bead` (d even) into d/2 domino removals.
///
/// Uses the β-set of minimal length. Following the induction: take the
/// largest even d₁ < d with bead − d₁ occupied, slide that bead down to
/// bead − d in steps of two, then recurse on the remaining d₁-hook.
pub fn decompose_d_hook(lambda: &Partition, bead: i64, d: u64) -> Result<Vec<HookStep>> {
    let beta = beta_set(lambda, lambda.len())?;
    decompose_d_hook_beta(&beta, bead, d)
}

pub fn decompose_d_hook_beta(beta: &BetaSet, bead: i64, d: u64) -> Result<Vec<HookStep>> {
    if d == 0 || d % 2 == 1 {
        return Err(Error::NotEven(d));
    }
    remove_rim_hook(beta, bead, d)?;
    let mut steps = Vec::new();
    let mut cur = beta.clone();
    let mut d = d as i64;
    loop {
        let d1 = (0..d).step_by(2).filter(|&e| cur.contains(bead - e)).max().unwrap_or(0);
        let mut pos = bead - d1;
        while pos > bead - d {
            cur = remove_rim_hook(&cur, pos, 2)?;
            steps.push(HookStep { from: pos, to: pos - 2 });
            pos -= 2;
        }
        if d1 == 0 {
            return Ok(steps);
        }
        d = d1;
    }
}

/// Applies domino steps one by one, checking each is legal.
pub fn apply_steps(beta: &BetaSet, steps: &[HookStep]) -> Result<BetaSet> {
    let mut cur = beta.clone();
    for s in steps {
        cur = remove_rim_hook(&cur, s.from, (s.from - s.to) as u64)?;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn beta_set_examples() {
        assert_eq!(beta_set(&p(&[3, 1]), 2).unwrap().beads(), &[4, 1]);
        assert_eq!(beta_set(&Partition::empty(), 3).unwrap().beads(), &[2, 1, 0]);
        assert!(matches!(beta_set(&p(&[2, 1, 1]), 2), Err(Error::BetaSetTooShort { .. })));
        for lam in partitions_of(7) {
            for l in lam.len()..lam.len() + 3 {
                assert_eq!(beta_set(&lam, l).unwrap().to_partition(), lam);
            }
        }
    }

    #[test]
    fn rim_hook_examples() {
        let b = beta_set(&p(&[3, 1]), 2).unwrap();
        assert_eq!(remove_rim_hook(&b, 4, 2).unwrap().to_partition(), p(&[1, 1]));
        let b4 = beta_set(&p(&[4]), 1).unwrap();
        assert_eq!(remove_rim_hook(&b4, 4, 4).unwrap().beads(), &[0]);
        assert!(matches!(remove_rim_hook(&b, 1, 2), Err(Error::NegativeBead { .. })));
        assert!(matches!(remove_rim_hook(&b, 3, 2), Err(Error::MissingBead(3))));
        let b21 = beta_set(&p(&[2, 2]), 2).unwrap();
        assert!(matches!(remove_rim_hook(&b21, 3, 1), Err(Error::BeadCollision { .. })));
    }

    #[test]
    fn core_examples() {
        assert_eq!(d_core(&p(&[3, 1]), 2), (Partition::empty(), 2));
        assert_eq!(d_core(&p(&[4, 3, 1]), 4), (Partition::empty(), 2));
        assert_eq!(d_core(&p(&[2, 1]), 2), (p(&[2, 1]), 0));
        assert_eq!(two_core(&p(&[3, 1])), Partition::empty());
        assert_eq!(two_core(&Partition::empty()), Partition::empty());
    }

    #[test]
    fn decomposition_examples() {
        let steps = decompose_d_hook(&p(&[4]), 4, 4).unwrap();
        assert_eq!(steps, vec![HookStep { from: 4, to: 2 }, HookStep { from: 2, to: 0 }]);
        let lam = p(&[3, 3, 2]);
        let beta = beta_set(&lam, 3).unwrap();
        let steps = decompose_d_hook(&lam, 5, 4).unwrap();
        assert_eq!(steps.len(), 2);
        let mid = apply_steps(&beta, &steps[..1]).unwrap();
        assert_eq!(mid.beads(), &[4, 3, 2]);
        assert_eq!(apply_steps(&beta, &steps).unwrap().to_partition(), p(&[2, 1, 1]));
        assert!(matches!(decompose_d_hook(&lam, 5, 3), Err(Error::NotEven(3))));
        assert!(decompose_d_hook(&lam, 2, 4).is_err());
    }

    #[test]
    fn abacus_agrees_with_greedy() {
        for n in 0..=10 {
            for lam in partitions_of(n) {
                for d in 1..=6 {
                    assert_eq!(d_core(&lam, d), d_core_abacus(&lam, d));
                }
            }
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("(3,1)".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert!("(1,3)".parse::<Partition>().is_err());
        assert_eq!(p(&[3, 1]).to_string(), "(3,1)");
        assert_eq!(Partition::empty().to_string(), "()");
        assert_eq!(partitions_of(5).len(), 7);
        assert_eq!(p(&[3, 1]).hook_lengths(), vec![4, 2, 1, 1]);
    }
}
