//! Standard Young tableaux, contents and hook tableaux.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// A standard Young tableau with entries `1..=n`, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = Tableau { rows };
        if !t.is_standard() {
            return Err(domain!("{:?} is not a standard tableau", t.rows));
        }
        Ok(t)
    }

    /// The single-row tableau `1 2 ⋯ n`.
    pub fn row(n: usize) -> Self {
        Tableau { rows: vec![(1..=n).collect()] }
    }

    /// `T_{i_1<⋯<i_ℓ}` of shape `(n − ℓ, 1^ℓ)`: first column `1, i_1, …, i_ℓ`.
    pub fn hook(n: usize, leg: &[usize]) -> Result<Self> {
        if leg.windows(2).any(|w| w[0] >= w[1]) || leg.iter().any(|&i| i < 2 || i > n) {
            return Err(domain!("hook leg {leg:?} must be increasing in 2..={n}"));
        }
        let first: Vec<usize> = (1..=n).filter(|i| !leg.contains(i)).collect();
        let mut rows = vec![first];
        rows.extend(leg.iter().map(|&i| vec![i]));
        Tableau::new(rows)
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    /// `(row, column)` of entry `i`, both 0-based.
    pub fn position(&self, i: usize) -> (usize, usize) {
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(col) = row.iter().position(|&x| x == i) {
                return (r, col);
            }
        }
        panic!("entry {i} not in tableau {:?}", self.rows)
    }

    /// `ct(T)_i = column − row` of the box holding `i`.
    pub fn content(&self, i: usize) -> i64 {
        let (r, c) = self.position(i);
        c as i64 - r as i64
    }

    pub fn contents(&self) -> Vec<i64> {
        (1..=self.n()).map(|i| self.content(i)).collect()
    }

    fn is_standard(&self) -> bool {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        for row in &self.rows {
            for &x in row {
                if x == 0 || x > n || seen[x] {
                    return false;
                }
                seen[x] = true;
            }
        }
        let shape_ok = self.rows.iter().all(|r| !r.is_empty()) && self.rows.windows(2).all(|w| w[0].len() >= w[1].len());
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(lo, hi)| hi < lo));
        shape_ok && rows_ok && cols_ok
    }

    /// `s_p T`: entries `p` and `p + 1` exchanged, if that is still standard.
    pub fn swap(&self, p: usize) -> Option<Self> {
        let mut rows = self.rows.clone();
        for row in rows.iter_mut() {
            for x in row.iter_mut() {
                if *x == p {
                    *x = p + 1;
                } else if *x == p + 1 {
                    *x = p;
                }
            }
        }
        let t = Tableau { rows };
        t.is_standard().then_some(t)
    }
}

/// All standard tableaux of a shape, in a fixed order.
pub fn standard_tableaux(shape: &[usize]) -> Vec<Tableau> {
    fn rec(shape: &[usize], filled: &mut Vec<Vec<usize>>, next: usize, n: usize, out: &mut Vec<Tableau>) {
        if next > n {
            out.push(Tableau { rows: filled.clone() });
            return;
        }
        for r in 0..shape.len() {
            let len = filled[r].len();
            let fits = len < shape[r] && (r == 0 || filled[r - 1].len() > len);
            if fits {
                filled[r].push(next);
                rec(shape, filled, next + 1, n, out);
                filled[r].pop();
            }
        }
    }
    let n = shape.iter().sum();
    let mut out = Vec::new();
    rec(shape, &mut vec![Vec::new(); shape.len()], 1, n, &mut out);
    out
}

/// All partitions of `n`, largest first.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            rec(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// The hook `μ_ℓ = (n − ℓ, 1^ℓ)`.
pub fn hook_shape(n: usize, l: usize) -> Vec<usize> {
    let mut s = vec![n - l];
    s.extend(std::iter::repeat(1).take(l));
    s
}

pub fn is_hook(shape: &[usize]) -> bool {
    shape.iter().skip(1).all(|&p| p == 1)
}
