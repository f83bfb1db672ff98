//! Dense linear algebra over F_p for the class-algebra eigenproblem.

use crate::arith::pow_mod;

pub fn inv(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "inverting zero mod {p}");
    pow_mod(a, p - 2, p)
}

/// Row-reduces in place; returns pivot columns.
pub fn rref(m: &mut [Vec<u64>], p: u64) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, piv);
        let f = inv(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = *x * f % p;
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for k in 0..cols {
                    m[i][k] = (m[i][k] + p - f * m[r][k] % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis (as columns) of the null space of `a`.
pub fn null_space(a: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let mut m = a.to_vec();
    let n = if m.is_empty() { 0 } else { m[0].len() };
    let pivots = rref(&mut m, p);
    let mut out = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = (p - m[r][free]) % p;
        }
        out.push(v);
    }
    out
}

/// Characteristic polynomial det(tI − A), lowest degree first, via
/// reduction to Hessenberg form.
pub fn char_poly(a: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = a.len();
    let mut h: Vec<Vec<u64>> = a.to_vec();
    for k in 0..n.saturating_sub(2) {
        let Some(piv) = (k + 1..n).find(|&i| h[i][k] != 0) else { continue };
        if piv != k + 1 {
            h.swap(piv, k + 1);
            for row in h.iter_mut() {
                row.swap(piv, k + 1);
            }
        }
        let f = inv(h[k + 1][k], p);
        for i in k + 2..n {
            let m = h[i][k] * f % p;
            if m == 0 {
                continue;
            }
            for c in 0..n {
                h[i][c] = (h[i][c] + p - m * h[k + 1][c] % p) % p;
            }
            for r in 0..n {
                h[r][k + 1] = (h[r][k + 1] + m * h[r][i]) % p;
            }
        }
    }
    // p_0 = 1, p_{k+1}(t) = (t − h_kk) p_k − Σ_{i<k} h_ik ∏_{j=i+1}^{k} h_{j,j-1} p_i
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        let prev = &polys[k];
        let mut next = vec![0u64; k + 2];
        for (i, &c) in prev.iter().enumerate() {
            next[i + 1] = (next[i + 1] + c) % p;
            next[i] = (next[i] + p - c * h[k][k] % p) % p;
        }
        let mut prod = 1u64;
        for i in (0..k).rev() {
            prod = prod * h[i + 1][i] % p;
            let coef = prod * h[i][k] % p;
            if coef == 0 {
                continue;
            }
            for (t, &c) in polys[i].iter().enumerate() {
                next[t] = (next[t] + p - coef * c % p) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

pub fn roots(poly: &[u64], p: u64) -> Vec<u64> {
    (0..p)
        .filter(|&x| poly.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % p) == 0)
        .collect()
}
