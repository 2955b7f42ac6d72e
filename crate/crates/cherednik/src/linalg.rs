//! Exact linear algebra over `Q`: sparse rank, dense kernels.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::lincomb::LinComb;
use crate::scalar::Q;

/// Rank of the span of sparse vectors (rows), by Gaussian elimination with a
/// pivot per leading key.
pub fn sparse_rank<K: Ord + Clone>(rows: &[LinComb<K>]) -> usize {
    let mut pivots: BTreeMap<K, LinComb<K>> = BTreeMap::new();
    for row in rows {
        let mut r = row.clone();
        // Reduce until the leading key has no pivot.
        loop {
            let lead = match r.keys().next() {
                Some(k) => k.clone(),
                None => break,
            };
            match pivots.get(&lead) {
                Some(p) => {
                    let factor = r.coeff(&lead) / p.coeff(&lead);
                    r.add_scaled(p, &-factor);
                }
                None => {
                    pivots.insert(lead, r);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// A basis of `{x : A x = 0}` for a dense `rows × cols` matrix.
pub fn nullspace(a: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let mut m: Vec<Vec<Q>> = a.to_vec();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = Q::from_integer(1.into()) / &m[row][col];
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for k in 0..cols {
                    let sub = &f * &m[row][k];
                    m[r][k] -= sub;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![Q::zero(); cols];
        v[free] = Q::from_integer(1.into());
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -m[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

pub fn rank_dense(a: &[Vec<Q>], cols: usize) -> usize {
    cols - nullspace(a, cols).len()
}

pub fn mat_mul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut s = Q::zero();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            s += &row[k] * &b[k][j];
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    a.iter()
        .map(|row| row.iter().zip(v).fold(Q::zero(), |acc, (x, y)| acc + x * y))
        .collect()
}

pub fn identity(n: usize) -> Vec<Vec<Q>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::from_integer(1.into()) } else { Q::zero() }).collect())
        .collect()
}

/// `a − s·I`.
pub fn shift(a: &[Vec<Q>], s: &Q) -> Vec<Vec<Q>> {
    let mut out = a.to_vec();
    for (i, row) in out.iter_mut().enumerate() {
        row[i] -= s;
    }
    out
}
