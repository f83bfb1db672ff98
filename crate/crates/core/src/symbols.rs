//! Two-row symbols labelling unipotent characters of types B, C and D.
//!
//! Symbols are unordered pairs of rows up to shift: (S, T) ~ (0 ∪ (S+1), 0 ∪ (T+1)).
//! The stored form is reduced (the rows never both start with 0) and the
//! rows are ordered longer first, ties broken lexicographically.
//! Only same-row hooks are modelled; cohooks are not.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{beta_set, partitions_of, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SymbolBCD {
    row1: Vec<u32>,
    row2: Vec<u32>,
}

fn strictly_increasing(row: &[u32]) -> bool {
    row.windows(2).all(|w| w[0] < w[1])
}

impl SymbolBCD {
    pub fn new(mut row1: Vec<u32>, mut row2: Vec<u32>) -> Result<Self> {
        row1.sort_unstable();
        row2.sort_unstable();
        if !strictly_increasing(&row1) || !strictly_increasing(&row2) {
            return Err(Error::InvalidSymbol(format!("repeated entry in {row1:?}, {row2:?}")));
        }
        Ok(Self::normalized(row1, row2))
    }

    fn normalized(mut a: Vec<u32>, mut b: Vec<u32>) -> Self {
        while a.first() == Some(&0) && b.first() == Some(&0) {
            a.remove(0);
            b.remove(0);
            a.iter_mut().for_each(|x| *x -= 1);
            b.iter_mut().for_each(|x| *x -= 1);
        }
        if (b.len(), &b) > (a.len(), &a) {
            std::mem::swap(&mut a, &mut b);
        }
        SymbolBCD { row1: a, row2: b }
    }

    pub fn row1(&self) -> &[u32] {
        &self.row1
    }

    pub fn row2(&self) -> &[u32] {
        &self.row2
    }

    pub fn row(&self, r: u8) -> Result<&[u32]> {
        match r {
            1 => Ok(&self.row1),
            2 => Ok(&self.row2),
            _ => Err(Error::InvalidParameter(format!("row must be 1 or 2, got {r}"))),
        }
    }

    pub fn defect(&self) -> u32 {
        (self.row1.len() - self.row2.len()) as u32
    }

    /// Σ entries − ⌊((N − 1)/2)²⌋ with N the total number of entries.
    pub fn rank(&self) -> i64 {
        let sum: i64 = self.row1.iter().chain(&self.row2).map(|&x| x as i64).sum();
        let n = (self.row1.len() + self.row2.len()) as i64;
        sum - ((n - 1) * (n - 1)) / 4
    }

    /// Both rows equal: the type-D case that splits into two characters.
    pub fn is_degenerate(&self) -> bool {
        self.row1 == self.row2
    }

    /// The unreduced representative with `k` extra leading beads per row.
    pub fn shifted(&self, k: u32) -> (Vec<u32>, Vec<u32>) {
        let sh = |r: &[u32]| (0..k).chain(r.iter().map(|x| x + k)).collect::<Vec<_>>();
        (sh(&self.row1), sh(&self.row2))
    }

    /// Symbol of defect D from a bipartition, of rank |α| + |β| + ⌊D²/4⌋.
    pub fn from_bipartition(alpha: &Partition, beta: &Partition, defect: u32) -> Self {
        let m = alpha.len().max(beta.len());
        let top = beta_set(alpha, m + defect as usize).expect("long enough");
        let bottom = beta_set(beta, m).expect("long enough");
        let conv = |b: &[i64]| b.iter().map(|&x| x as u32).collect::<Vec<_>>();
        SymbolBCD::new(conv(top.beads()), conv(bottom.beads())).expect("distinct beads")
    }
}

impl fmt::Display for SymbolBCD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = |r: &[u32]| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({{{}}},{{{}}})", j(&self.row1), j(&self.row2))
    }
}

impl FromStr for SymbolBCD {
    type Err = Error;

    /// Parses `({0,2},{1})`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidSymbol(s.to_string());
        let t = s.trim().strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(bad)?;
        let mid = t.find('}').ok_or_else(bad)?;
        let (a, b) = (&t[..=mid], t[mid + 1..].trim_start_matches([',', ' ']));
        let row = |r: &str| -> Result<Vec<u32>> {
            let inner = r.trim().strip_prefix('{').and_then(|r| r.strip_suffix('}')).ok_or_else(bad)?;
            inner
                .split(',')
                .map(str::trim)
                .filter(|x| !x.is_empty())
                .map(|x| x.parse::<u32>().map_err(|_| bad()))
                .collect()
        };
        SymbolBCD::new(row(a)?, row(b)?)
    }
}

/// Moves `entry` of the chosen row down by odd `d`.
pub fn remove_symbol_hook(s: &SymbolBCD, row: u8, entry: u32, d: u64) -> Result<SymbolBCD> {
    if d % 2 == 0 {
        return Err(Error::NotOdd(d));
    }
    let r = s.row(row)?;
    if !r.contains(&entry) {
        return Err(Error::MissingBead(entry as i64));
    }
    if (entry as u64) < d {
        return Err(Error::NegativeBead { bead: entry as i64, d });
    }
    let target = entry - d as u32;
    if r.contains(&target) {
        return Err(Error::BeadCollision { bead: entry as i64, d });
    }
    let moved: Vec<u32> = r.iter().map(|&x| if x == entry { target } else { x }).collect();
    let (a, b) = if row == 1 { (moved, s.row2.clone()) } else { (s.row1.clone(), moved) };
    SymbolBCD::new(a, b)
}

fn legal_hooks(s: &SymbolBCD, d: u32) -> Vec<(u8, u32)> {
    let mut out = Vec::new();
    for (idx, r) in [(1u8, &s.row1), (2u8, &s.row2)] {
        for &x in r.iter() {
            if x >= d && !r.contains(&(x - d)) {
                out.push((idx, x));
            }
        }
    }
    out
}

/// Repeated hook removal until none is legal.
pub fn symbol_d_core(s: &SymbolBCD, d: u64) -> Result<SymbolBCD> {
    if d % 2 == 0 {
        return Err(Error::NotOdd(d));
    }
    let mut cur = s.clone();
    while let Some(&(row, x)) = legal_hooks(&cur, d as u32).first() {
        cur = remove_symbol_hook(&cur, row, x, d)?;
    }
    Ok(cur)
}

/// Every terminal symbol reachable by hook removals.
pub fn symbol_core_all_paths(s: &SymbolBCD, d: u64) -> BTreeSet<SymbolBCD> {
    let mut seen = BTreeSet::new();
    let mut out = BTreeSet::new();
    let mut stack = vec![s.clone()];
    while let Some(cur) = stack.pop() {
        if !seen.insert(cur.clone()) {
            continue;
        }
        let moves = legal_hooks(&cur, d as u32);
        if moves.is_empty() {
            out.insert(cur);
            continue;
        }
        for (row, x) in moves {
            stack.push(remove_symbol_hook(&cur, row, x, d).expect("legal"));
        }
    }
    out
}

pub fn same_series_odd_d(s1: &SymbolBCD, s2: &SymbolBCD, d: u64) -> Result<bool> {
    if s1.rank() != s2.rank() {
        return Err(Error::RankMismatch(s1.rank(), s2.rank()));
    }
    Ok(symbol_d_core(s1, d)? == symbol_d_core(s2, d)?)
}

/// All non-degenerate symbols of the given rank and defect.
pub fn symbols_of(rank: u32, defect: u32) -> Vec<SymbolBCD> {
    let shift = defect * defect / 4;
    if shift > rank {
        return Vec::new();
    }
    let n = rank - shift;
    let mut out = BTreeSet::new();
    for k in 0..=n {
        for alpha in partitions_of(k) {
            for beta in partitions_of(n - k) {
                let s = SymbolBCD::from_bipartition(&alpha, &beta, defect);
                if !s.is_degenerate() {
                    out.insert(s);
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Non-degenerate symbols of the given rank with defect at most `max_defect`.
pub fn symbols_up_to_defect(rank: u32, max_defect: u32) -> Vec<SymbolBCD> {
    (0..=max_defect).flat_map(|d| symbols_of(rank, d)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(s: &str) -> SymbolBCD {
        s.parse().unwrap()
    }

    #[test]
    fn normal_form() {
        assert_eq!(sym("({0,1,3},{0,2})"), sym("({0,2},{1})"));
        assert_eq!(sym("({1},{0,2})").row1(), &[0, 2]);
        assert_eq!(sym("({0,1,2},{})").rank(), 2);
        assert_eq!(sym("({0},{})").rank(), 0);
        assert_eq!(sym("({},{})").rank(), 0);
        assert_eq!(sym("({0,2},{1})").rank(), 2);
        assert_eq!(sym("({0,2},{1})").to_string(), "({0,2},{1})");
        assert!(sym("({1},{1})").is_degenerate());
    }

    #[test]
    fn hook_moves() {
        let s = sym("({1,2},{0})");
        assert!(matches!(remove_symbol_hook(&s, 1, 2, 1), Err(Error::BeadCollision { .. })));
        assert_eq!(remove_symbol_hook(&s, 1, 1, 1).unwrap(), sym("({1},{})"));
        assert!(matches!(remove_symbol_hook(&s, 2, 0, 1), Err(Error::NegativeBead { .. })));
        assert!(matches!(remove_symbol_hook(&s, 1, 2, 2), Err(Error::NotOdd(2))));
    }

    #[test]
    fn cores() {
        let s = sym("({0,2},{1})");
        assert_eq!(symbol_d_core(&s, 1).unwrap(), sym("({0},{})"));
        assert_eq!(symbol_core_all_paths(&s, 1).len(), 1);
        let c = sym("({0,1,2},{})");
        assert_eq!(symbol_d_core(&c, 1).unwrap(), c);
        assert!(same_series_odd_d(&s, &s, 3).unwrap());
        assert!(same_series_odd_d(&s, &c, 1).is_ok_and(|b| !b));
        assert!(matches!(same_series_odd_d(&s, &sym("({1},{})"), 1), Err(Error::RankMismatch(..))));
    }

    #[test]
    fn counts() {
        // unipotent characters of B_2: 5 principal series plus θ_10
        assert_eq!(symbols_of(2, 1).len() + symbols_of(2, 3).len(), 6);
        assert_eq!(symbols_of(3, 1).len(), 10);
        for s in symbols_up_to_defect(4, 3) {
            assert_eq!(s.rank(), 4);
        }
    }
}
