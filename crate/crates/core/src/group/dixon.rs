//! Burnside–Dixon: exact character tables from the class algebra mod p.

use super::modp::{char_poly, inv, null_space, roots};
use super::{Element, ElementGroup};
use crate::arith::{is_prime, lcm, pow_mod, primitive_root};
use crate::cyclotomic::ZetaPoly;
use crate::error::{Error, Result};

/// Character values are stored in Z[ζ_e] with e the group exponent.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub group_order: u64,
    pub exponent: usize,
    pub class_sizes: Vec<u64>,
    pub class_orders: Vec<u64>,
    pub inverse_class: Vec<usize>,
    /// `chars[i][j]` is the value of character i on class j.
    pub chars: Vec<Vec<ZetaPoly>>,
}

impl CharacterTable {
    pub fn degrees(&self) -> Vec<u64> {
        self.chars.iter().map(|row| degree_of(&row[0])).collect()
    }

    /// Sorted degree multiset together with the group order.
    pub fn fingerprint(&self) -> (u64, Vec<u64>) {
        let mut d = self.degrees();
        d.sort_unstable();
        (self.group_order, d)
    }

    /// Checks row and column orthogonality and Σχ(1)² = |G|.
    pub fn check_orthogonality(&self) -> std::result::Result<(), String> {
        let r = self.class_sizes.len();
        if self.chars.len() != r {
            return Err(format!("{} characters for {} classes", self.chars.len(), r));
        }
        let sq: u64 = self.degrees().iter().map(|d| d * d).sum();
        if sq != self.group_order {
            return Err(format!("sum of squared degrees {sq} != {}", self.group_order));
        }
        let e = self.exponent;
        let conj: Vec<Vec<ZetaPoly>> = self
            .chars
            .iter()
            .map(|row| row.iter().map(|v| v.galois(e as u64 - 1)).collect())
            .collect();
        for a in 0..r {
            for b in a..r {
                let mut acc = ZetaPoly::zero(e);
                for k in 0..r {
                    acc.add_assign(&self.chars[a][k].mul(&conj[b][k]).scaled(self.class_sizes[k] as i64));
                }
                let want = if a == b { self.group_order as i64 } else { 0 };
                if !acc.equals(&ZetaPoly::from_integer(e, want)) {
                    return Err(format!("rows {a} and {b} are not orthogonal"));
                }
            }
        }
        for j in 0..r {
            for k in j..r {
                let mut acc = ZetaPoly::zero(e);
                for i in 0..r {
                    acc.add_assign(&self.chars[i][j].mul(&conj[i][k]));
                }
                let want = if j == k { (self.group_order / self.class_sizes[j]) as i64 } else { 0 };
                if !acc.equals(&ZetaPoly::from_integer(e, want)) {
                    return Err(format!("columns {j} and {k} are not orthogonal"));
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn degree_of(v: &ZetaPoly) -> u64 {
    let r = v.reduced();
    debug_assert!(r.iter().skip(1).all(|&c| c == 0));
    r[0] as u64
}

fn choose_prime(exponent: u64, order: u64) -> u64 {
    let bound = 2 * ((order as f64).sqrt().ceil() as u64) + 1;
    let mut p = exponent + 1;
    while p <= bound || !is_prime(p) {
        p += exponent;
    }
    p
}

/// The full character table, sorted by degree and then by values.
pub fn character_table<T: Element>(g: &ElementGroup<T>) -> Result<CharacterTable> {
    let n = g.order();
    let (class_of, classes) = g.conjugacy_classes();
    let r = classes.len();
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let sizes: Vec<u64> = classes.iter().map(|c| c.len() as u64).collect();
    let inverses: Vec<usize> = g.elements().iter().enumerate().map(|(i, _)| g.inv_idx(i)).collect();
    let inverse_class: Vec<usize> = reps.iter().map(|&x| class_of[inverses[x]]).collect();

    // powers of each representative, as class ids
    let mut power_classes: Vec<Vec<usize>> = Vec::with_capacity(r);
    for &x in &reps {
        let mut seq = vec![class_of[0]];
        let mut cur = x;
        while cur != 0 {
            seq.push(class_of[cur]);
            cur = g.mul_idx(cur, x);
        }
        power_classes.push(seq);
    }
    let orders: Vec<u64> = power_classes.iter().map(|s| s.len() as u64).collect();
    let exponent = orders.iter().fold(1, |a, &o| lcm(a, o));
    let p = choose_prime(exponent, n as u64);

    // c[j][i][k] = #{x in K_j : x^{-1} g_k in K_i}
    let mut consts = vec![vec![vec![0u64; r]; r]; r];
    for (k, &gk) in reps.iter().enumerate() {
        for x in 0..n {
            let y = g.mul_idx(inverses[x], gk);
            consts[class_of[x]][class_of[y]][k] += 1;
        }
    }

    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r)
        .map(|i| {
            let mut v = vec![0u64; r];
            v[i] = 1;
            v
        })
        .collect()];
    for mj in consts.iter() {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            next.extend(split_space(&basis, mj, p));
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::Internal("class algebra did not split".into()));
    }

    let z = pow_mod(primitive_root(p), (p - 1) / exponent, p);
    let identity_class = class_of[0];
    let mut chars = Vec::with_capacity(r);
    for space in spaces {
        let mut w = space.into_iter().next().unwrap();
        let s = inv(w[identity_class], p);
        w.iter_mut().for_each(|x| *x = *x * s % p);
        // χ(1)² = |G| / Σ ω_j ω_{j'} / h_j
        let mut acc = 0u64;
        for j in 0..r {
            acc = (acc + w[j] * w[inverse_class[j]] % p * inv(sizes[j] % p, p)) % p;
        }
        let deg_sq = (n as u64 % p) * inv(acc, p) % p;
        let deg = (1..=((n as f64).sqrt() as u64 + 1))
            .find(|d| d * d % p == deg_sq && n as u64 % d == 0)
            .ok_or_else(|| Error::Internal("no degree matches".into()))?;
        let modvals: Vec<u64> =
            (0..r).map(|j| w[j] * (deg % p) % p * inv(sizes[j] % p, p) % p).collect();
        let mut row = Vec::with_capacity(r);
        for j in 0..r {
            row.push(lift_value(&modvals, &power_classes[j], exponent, z, p, deg)?);
        }
        chars.push(row);
    }
    chars.sort_by_key(|row| {
        let d = degree_of(&row[0]);
        (d, row.iter().map(|v| v.reduced()).collect::<Vec<_>>())
    });
    Ok(CharacterTable {
        group_order: n as u64,
        exponent: exponent as usize,
        class_sizes: sizes,
        class_orders: orders,
        inverse_class,
        chars,
    })
}

/// Splits an M-invariant subspace into eigenspaces of M.
fn split_space(basis: &[Vec<u64>], m: &[Vec<u64>], p: u64) -> Vec<Vec<Vec<u64>>> {
    let s = basis.len();
    let r = m.len();
    // columns of B are basis vectors; reduce so that B has an identity block
    let mut rows: Vec<Vec<u64>> = basis.to_vec();
    let pivots = super::modp::rref(&mut rows, p);
    // M acts on column vectors: (M w)_i = Σ_k m[i][k] w_k
    let image: Vec<Vec<u64>> = rows
        .iter()
        .map(|b| (0..r).map(|i| (0..r).fold(0, |a, k| (a + m[i][k] * b[k]) % p)).collect())
        .collect();
    // image_t = Σ_u A[u][t] b_u, read off at pivot coordinates
    let a: Vec<Vec<u64>> = (0..s).map(|u| (0..s).map(|t| image[t][pivots[u]]).collect()).collect();
    let cp = char_poly(&a, p);
    let eig = roots(&cp, p);
    if eig.len() == 1 {
        return vec![rows];
    }
    let mut out = Vec::new();
    for lam in eig {
        let shifted: Vec<Vec<u64>> = (0..s)
            .map(|u| (0..s).map(|t| if u == t { (a[u][t] + p - lam) % p } else { a[u][t] }).collect())
            .collect();
        let kernel = null_space(&shifted, p);
        let vecs: Vec<Vec<u64>> = kernel
            .iter()
            .map(|y| (0..r).map(|i| (0..s).fold(0, |acc, u| (acc + y[u] * rows[u][i]) % p)).collect())
            .collect();
        out.push(vecs);
    }
    out
}

/// Recovers χ(g) = Σ m_i ζ_o^i from χ(g^s) mod p.
fn lift_value(
    modvals: &[u64],
    powers: &[usize],
    exponent: u64,
    z: u64,
    p: u64,
    deg: u64,
) -> Result<ZetaPoly> {
    let o = powers.len() as u64;
    let w = pow_mod(z, exponent / o, p);
    let inv_o = inv(o % p, p);
    let mut out = ZetaPoly::zero(exponent as usize);
    let mut total = 0;
    for i in 0..o {
        let mut acc = 0u64;
        for (s, &cls) in powers.iter().enumerate() {
            let e = (o - (i * s as u64) % o) % o;
            acc = (acc + modvals[cls] * pow_mod(w, e, p)) % p;
        }
        let mult = acc * inv_o % p;
        if mult > deg {
            return Err(Error::Internal(format!("eigenvalue multiplicity {mult} exceeds {deg}")));
        }
        total += mult;
        out.coeffs[(i * (exponent / o)) as usize] = mult as i64;
    }
    if total != deg {
        return Err(Error::Internal("multiplicities do not sum to the degree".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::MonomialPerm;

    #[test]
    fn symmetric_group_s4() {
        let s = MonomialPerm::new(1, &[1, 0, 2, 3], &[0; 4]);
        let c = MonomialPerm::new(1, &[1, 2, 3, 0], &[0; 4]);
        let g = ElementGroup::generate(MonomialPerm::identity(4, 1), &[s, c]);
        let t = character_table(&g).unwrap();
        assert_eq!(t.degrees(), vec![1, 1, 2, 3, 3]);
        t.check_orthogonality().unwrap();
    }

    #[test]
    fn cyclic_group_values() {
        let c = MonomialPerm::new(5, &[0], &[1]);
        let g = ElementGroup::generate(MonomialPerm::identity(1, 5), &[c]);
        let t = character_table(&g).unwrap();
        assert_eq!(t.degrees(), vec![1; 5]);
        t.check_orthogonality().unwrap();
        // some character takes an irrational value
        assert!(t.chars.iter().any(|row| row.iter().any(|v| v.reduced().iter().skip(1).any(|&x| x != 0))));
    }

    #[test]
    fn hyperoctahedral_b3() {
        let s1 = MonomialPerm::new(2, &[1, 0, 2], &[0; 3]);
        let s2 = MonomialPerm::new(2, &[0, 2, 1], &[0; 3]);
        let t = MonomialPerm::new(2, &[0, 1, 2], &[1, 0, 0]);
        let g = ElementGroup::generate(MonomialPerm::identity(3, 2), &[s1, s2, t]);
        assert_eq!(g.order(), 48);
        let tab = character_table(&g).unwrap();
        assert_eq!(tab.degrees(), vec![1, 1, 1, 1, 2, 2, 3, 3, 3, 3]);
        tab.check_orthogonality().unwrap();
    }
}
