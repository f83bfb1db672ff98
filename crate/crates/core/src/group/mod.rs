//! Finite groups given by explicit elements, and their character tables.

mod dixon;
pub mod modp;

use std::collections::{HashMap, VecDeque};
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;

pub use dixon::{character_table, CharacterTable};

/// Largest number of points a [`MonomialPerm`] can act on.
pub const MAX_POINTS: usize = 8;

pub trait Element: Clone + Eq + Hash + Ord + Debug + Send + Sync {
    fn mul(&self, other: &Self) -> Self;
    fn inv(&self) -> Self;
}

/// A monomial matrix with m-th roots of unity as entries: e_i ↦ ζ_m^{c_i} e_{π(i)}.
///
/// m = 1 gives permutations, m = 2 signed permutations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialPerm {
    n: u8,
    m: u8,
    perm: [u8; MAX_POINTS],
    colors: [u8; MAX_POINTS],
}

impl MonomialPerm {
    pub fn identity(n: usize, m: u32) -> Self {
        assert!(n <= MAX_POINTS && (1..=255).contains(&m));
        let mut perm = [0u8; MAX_POINTS];
        for (i, p) in perm.iter_mut().enumerate() {
            *p = i as u8;
        }
        MonomialPerm { n: n as u8, m: m as u8, perm, colors: [0; MAX_POINTS] }
    }

    pub fn new(m: u32, perm: &[usize], colors: &[u32]) -> Self {
        let n = perm.len();
        assert_eq!(n, colors.len());
        let mut x = Self::identity(n, m);
        let mut seen = [false; MAX_POINTS];
        for i in 0..n {
            assert!(perm[i] < n && !seen[perm[i]], "not a permutation: {perm:?}");
            seen[perm[i]] = true;
            x.perm[i] = perm[i] as u8;
            x.colors[i] = (colors[i] % m) as u8;
        }
        x
    }

    pub fn degree(&self) -> usize {
        self.n as usize
    }

    pub fn modulus(&self) -> u32 {
        self.m as u32
    }

    pub fn image(&self, i: usize) -> usize {
        self.perm[i] as usize
    }

    pub fn color(&self, i: usize) -> u32 {
        self.colors[i] as u32
    }

    pub fn color_sum(&self) -> u32 {
        self.colors[..self.n as usize].iter().map(|&c| c as u32).sum::<u32>() % self.m as u32
    }

    /// Cycles as (length, total color), in order of smallest point.
    pub fn cycles(&self) -> Vec<(usize, u32)> {
        let n = self.n as usize;
        let mut seen = [false; MAX_POINTS];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let (mut len, mut col, mut i) = (0, 0u32, s);
            while !seen[i] {
                seen[i] = true;
                len += 1;
                col += self.colors[i] as u32;
                i = self.perm[i] as usize;
            }
            out.push((len, col % self.m as u32));
        }
        out
    }

    pub fn order(&self) -> u64 {
        let m = self.m as u64;
        self.cycles().iter().fold(1u64, |acc, &(len, col)| {
            let col_order = m / crate::arith::gcd(col as u64, m);
            crate::arith::lcm(acc, len as u64 * col_order)
        })
    }

    /// Action on a coordinate vector over a ring with a root-of-unity map.
    pub fn apply<T: Clone>(&self, v: &[T], scale: impl Fn(&T, u32) -> T) -> Vec<T> {
        let n = self.n as usize;
        let mut out = v.to_vec();
        for i in 0..n {
            out[self.perm[i] as usize] = scale(&v[i], self.colors[i] as u32);
        }
        out
    }
}

impl Element for MonomialPerm {
    fn mul(&self, h: &Self) -> Self {
        debug_assert_eq!((self.n, self.m), (h.n, h.m));
        let mut out = *self;
        for i in 0..self.n as usize {
            let j = h.perm[i] as usize;
            out.perm[i] = self.perm[j];
            out.colors[i] = ((h.colors[i] as u32 + self.colors[j] as u32) % self.m as u32) as u8;
        }
        out
    }

    fn inv(&self) -> Self {
        let mut out = *self;
        for i in 0..self.n as usize {
            let j = self.perm[i] as usize;
            out.perm[j] = i as u8;
            out.colors[j] = ((self.m as u32 - self.colors[i] as u32) % self.m as u32) as u8;
        }
        out
    }
}

/// An element of a quotient N/K, stored as the least element of its coset.
#[derive(Clone, Debug)]
pub struct Coset<T: Element> {
    rep: T,
    kernel: Arc<Vec<T>>,
}

impl<T: Element> Coset<T> {
    pub fn new(x: &T, kernel: Arc<Vec<T>>) -> Self {
        let rep = kernel.iter().map(|k| x.mul(k)).min().expect("kernel contains identity");
        Coset { rep, kernel }
    }

    pub fn rep(&self) -> &T {
        &self.rep
    }
}

impl<T: Element> PartialEq for Coset<T> {
    fn eq(&self, other: &Self) -> bool {
        self.rep == other.rep
    }
}
impl<T: Element> Eq for Coset<T> {}
impl<T: Element> Hash for Coset<T> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.rep.hash(state)
    }
}
impl<T: Element> PartialOrd for Coset<T> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl<T: Element> Ord for Coset<T> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.rep.cmp(&other.rep)
    }
}

impl<T: Element> Element for Coset<T> {
    fn mul(&self, other: &Self) -> Self {
        Coset::new(&self.rep.mul(&other.rep), self.kernel.clone())
    }
    fn inv(&self) -> Self {
        Coset::new(&self.rep.inv(), self.kernel.clone())
    }
}

/// A finite group stored as an explicit, deterministically ordered list.
#[derive(Clone, Debug)]
pub struct ElementGroup<T: Element> {
    elements: Vec<T>,
    index: HashMap<T, usize>,
    generators: Vec<usize>,
}

impl<T: Element> ElementGroup<T> {
    /// Closure of the generators; the identity comes first.
    pub fn generate(identity: T, gens: &[T]) -> Self {
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::from([(identity, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let x = elements[i].mul(g);
                if !index.contains_key(&x) {
                    index.insert(x.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(x);
                }
            }
        }
        let generators = gens.iter().map(|g| index[g]).collect();
        ElementGroup { elements, index, generators }
    }

    /// A group from a list that must be closed under multiplication.
    pub fn from_elements(mut elements: Vec<T>) -> Self {
        elements.sort();
        elements.dedup();
        let id = elements[0].mul(&elements[0].inv());
        let pos = elements.iter().position(|x| *x == id).expect("identity present");
        elements.swap(0, pos);
        elements[1..].sort();
        let index: HashMap<T, usize> =
            elements.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
        let mut g = ElementGroup { elements, index, generators: Vec::new() };
        g.generators = g.find_generators();
        g
    }

    fn find_generators(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = Vec::new();
        let mut inside = vec![false; self.elements.len()];
        inside[0] = true;
        for cand in 0..self.elements.len() {
            if inside[cand] {
                continue;
            }
            gens.push(cand);
            let gs: Vec<T> = gens.iter().map(|&g| self.elements[g].clone()).collect();
            let sub = ElementGroup::generate(self.elements[0].clone(), &gs);
            for x in &sub.elements {
                inside[self.index[x]] = true;
            }
        }
        gens
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &T {
        &self.elements[i]
    }

    pub fn index_of(&self, x: &T) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn mul_idx(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].mul(&self.elements[b])]
    }

    pub fn inv_idx(&self, a: usize) -> usize {
        self.index[&self.elements[a].inv()]
    }

    /// Class id of each element; classes numbered by first appearance.
    pub fn conjugacy_classes(&self) -> (Vec<usize>, Vec<Vec<usize>>) {
        let n = self.elements.len();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let gens: Vec<(T, T)> = self
            .generators
            .iter()
            .map(|&g| (self.elements[g].clone(), self.elements[g].inv()))
            .collect();
        for s in 0..n {
            if class_of[s] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = vec![s];
            class_of[s] = id;
            let mut k = 0;
            while k < members.len() {
                let x = &self.elements[members[k]];
                for (g, gi) in &gens {
                    let y = g.mul(x).mul(gi);
                    let j = self.index[&y];
                    if class_of[j] == usize::MAX {
                        class_of[j] = id;
                        members.push(j);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            classes.push(members);
        }
        (class_of, classes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_arithmetic() {
        let a = MonomialPerm::new(4, &[1, 2, 0], &[1, 0, 3]);
        let b = MonomialPerm::new(4, &[0, 2, 1], &[2, 2, 0]);
        let id = MonomialPerm::identity(3, 4);
        assert_eq!(a.mul(&a.inv()), id);
        assert_eq!(a.inv().mul(&a), id);
        assert_eq!(a.mul(&b).mul(&a), a.mul(&b.mul(&a)));
        assert_eq!(a.cycles(), vec![(3, 0)]);
        assert_eq!(a.order(), 3);
        assert_eq!(b.cycles(), vec![(1, 2), (2, 2)]);
        assert_eq!(b.order(), 4);
    }

    #[test]
    fn matrix_action_is_a_homomorphism() {
        let a = MonomialPerm::new(2, &[1, 2, 0], &[1, 0, 1]);
        let b = MonomialPerm::new(2, &[2, 0, 1], &[0, 1, 1]);
        let v = vec![3i64, 5, 7];
        let sc = |x: &i64, c: u32| if c % 2 == 1 { -x } else { *x };
        let lhs = a.mul(&b).apply(&v, sc);
        let rhs = a.apply(&b.apply(&v, sc), sc);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn hyperoctahedral_group() {
        let s = MonomialPerm::new(2, &[1, 0], &[0, 0]);
        let t = MonomialPerm::new(2, &[0, 1], &[1, 0]);
        let g = ElementGroup::generate(MonomialPerm::identity(2, 2), &[s, t]);
        assert_eq!(g.order(), 8);
        let (_, classes) = g.conjugacy_classes();
        assert_eq!(classes.len(), 5);
        let h = ElementGroup::from_elements(g.elements().to_vec());
        assert_eq!(h.order(), 8);
        assert!(h.generators().len() <= 3);
    }
}
