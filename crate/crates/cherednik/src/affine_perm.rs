//! The extended affine symmetric group in window notation.
//!
//! An element is an `n`-periodic bijection `p: Z → Z` (`p(i + n) = p(i) + n`),
//! stored by its window `[p(1), …, p(n)]`. Everything outside the window is
//! evaluated through the periodicity rule.
//!
//! Finite permutations are plain 1-based windows (`Vec<usize>` with values in
//! `1..=n`) and act on sequences by `(g·a)_{g(i)} = a_i`.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{domain, internal, Result};
use crate::scalar::{gcd, q, Q};

/// A label `a ∈ Z^n`; basis labels are nonnegative.
pub type IntSequence = Vec<i64>;

/// A finite permutation of `1..=n` in one-line notation.
pub type FinitePerm = Vec<usize>;

pub fn norm(a: &[i64]) -> i64 {
    a.iter().sum()
}

pub fn check_nonnegative(a: &[i64]) -> Result<()> {
    if let Some(x) = a.iter().find(|&&x| x < 0) {
        return Err(domain!("label {a:?} has negative entry {x}"));
    }
    Ok(())
}

/// The minimal-length permutation `g_a` with `g_a·a` weakly increasing:
/// `g_a(i) = #{j : a_j < a_i} + #{j ≤ i : a_j = a_i}`.
pub fn sorting_permutation(a: &[i64]) -> FinitePerm {
    (0..a.len())
        .map(|i| {
            let below = a.iter().filter(|&&x| x < a[i]).count();
            let ties = a[..=i].iter().filter(|&&x| x == a[i]).count();
            below + ties
        })
        .collect()
}

pub fn perm_identity(n: usize) -> FinitePerm {
    (1..=n).collect()
}

pub fn perm_inverse(g: &[usize]) -> FinitePerm {
    let mut inv = vec![0; g.len()];
    for (i, &gi) in g.iter().enumerate() {
        inv[gi - 1] = i + 1;
    }
    inv
}

/// `(g ∘ h)(i) = g(h(i))`.
pub fn perm_compose(g: &[usize], h: &[usize]) -> FinitePerm {
    h.iter().map(|&hi| g[hi - 1]).collect()
}

/// The action `(g·a)_{g(i)} = a_i`.
pub fn perm_act<T: Clone>(g: &[usize], a: &[T]) -> Vec<T> {
    let mut out = a.to_vec();
    for (i, &gi) in g.iter().enumerate() {
        out[gi - 1] = a[i].clone();
    }
    out
}

/// A reduced word `[i_1, …, i_r]` with `g = s_{i_1} ∘ ⋯ ∘ s_{i_r}`.
pub fn reduced_word(g: &[usize]) -> Vec<usize> {
    // Bubble-sort g's one-line notation; each swap of adjacent positions j,j+1
    // is right multiplication by s_j.
    let mut w = g.to_vec();
    let mut right = Vec::new();
    loop {
        let Some(j) = (0..w.len().saturating_sub(1)).find(|&j| w[j] > w[j + 1]) else {
            break;
        };
        w.swap(j, j + 1);
        right.push(j + 1);
    }
    // g · s_{j_1} ⋯ s_{j_r} = id, hence g = s_{j_r} ⋯ s_{j_1}.
    right.reverse();
    right
}

pub fn cycle_count(g: &[usize]) -> usize {
    let mut seen = vec![false; g.len()];
    let mut cycles = 0;
    for start in 0..g.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = g[i] - 1;
        }
    }
    cycles
}

/// `π·a = (a_n + 1, a_1, …, a_{n−1})`.
pub fn pi_action(a: &[i64]) -> IntSequence {
    let n = a.len();
    let mut out = Vec::with_capacity(n);
    out.push(a[n - 1] + 1);
    out.extend_from_slice(&a[..n - 1]);
    out
}

/// `π⁻¹·a = (a_2, …, a_n, a_1 − 1)`.
pub fn pi_inv_action(a: &[i64]) -> IntSequence {
    let mut out = a[1..].to_vec();
    out.push(a[0] - 1);
    out
}

/// `s_i·a` (1-based `i`, swaps entries `i` and `i+1`).
pub fn s_action(i: usize, a: &[i64]) -> IntSequence {
    let mut out = a.to_vec();
    out.swap(i - 1, i);
    out
}

/// All `a ∈ Z^n_{≥0}` with `||a|| = k`, in lexicographically decreasing order.
pub fn compositions(n: usize, k: i64) -> Vec<IntSequence> {
    fn rec(n: usize, k: i64, prefix: &mut Vec<i64>, out: &mut Vec<IntSequence>) {
        if n == 1 {
            prefix.push(k);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=k).rev() {
            prefix.push(first);
            rec(n - 1, k - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if k == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, k, &mut Vec::with_capacity(n), &mut out);
    out
}

/// An element of the extended affine symmetric group.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffinePermutation {
    n: usize,
    window: Vec<i64>,
}

impl fmt::Debug for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.window)
    }
}

impl AffinePermutation {
    /// Builds from a window; the residues mod `n` must be a permutation.
    pub fn new(window: Vec<i64>) -> Result<Self> {
        let n = window.len();
        if n == 0 {
            return Err(domain!("empty window"));
        }
        let mut seen = vec![false; n];
        for &x in &window {
            let r = x.rem_euclid(n as i64) as usize;
            if seen[r] {
                return Err(domain!("window {window:?} repeats a residue mod {n}"));
            }
            seen[r] = true;
        }
        Ok(AffinePermutation { n, window })
    }

    pub fn identity(n: usize) -> Self {
        AffinePermutation { n, window: (1..=n as i64).collect() }
    }

    /// The shift `π = [2, 3, …, n + 1]`.
    pub fn pi(n: usize) -> Self {
        AffinePermutation { n, window: (2..=n as i64 + 1).collect() }
    }

    /// The simple reflection `s_i`, `1 ≤ i < n`.
    pub fn simple(n: usize, i: usize) -> Self {
        let mut w = Self::identity(n);
        w.window.swap(i - 1, i);
        w
    }

    pub fn from_finite(g: &[usize]) -> Self {
        AffinePermutation { n: g.len(), window: g.iter().map(|&x| x as i64).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// `p(x)` for any integer `x`, through `p(x + n) = p(x) + n`.
    pub fn eval(&self, x: i64) -> i64 {
        let n = self.n as i64;
        let r = (x - 1).rem_euclid(n) + 1;
        let shift = (x - r) / n;
        self.window[(r - 1) as usize] + shift * n
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "period mismatch");
        let window = other.window.iter().map(|&x| self.eval(x)).collect();
        AffinePermutation { n: self.n, window }
    }

    pub fn inverse(&self) -> Self {
        let n = self.n as i64;
        let mut window = vec![0; self.n];
        for i in 1..=n {
            let v = self.window[(i - 1) as usize];
            let r = (v - 1).rem_euclid(n) + 1;
            let shift = (v - r) / n;
            window[(r - 1) as usize] = i - shift * n;
        }
        AffinePermutation { n: self.n, window }
    }

    /// `(1/n) Σ (p(i) − i)`, computed exactly and asserted integral.
    pub fn degree(&self) -> Result<i64> {
        let total: i64 = self.window.iter().zip(1..).map(|(&w, i)| w - i).sum();
        let d = q(total) / q(self.n as i64);
        crate::scalar::to_i64(&d).ok_or_else(|| internal!("non-integral degree for {:?}", self.window))
    }

    /// Membership in the set of minimal coset representatives: window strictly
    /// increasing and positive.
    pub fn is_min(&self) -> bool {
        self.window[0] > 0 && self.window.windows(2).all(|w| w[0] < w[1])
    }

    /// `p(x + m) > p(x)` for all `x`; by periodicity `x ∈ 1..=n` suffices.
    pub fn is_m_stable(&self, m: i64) -> bool {
        (1..=self.n as i64).all(|x| self.eval(x + m) > self.eval(x))
    }

    /// `p(j) − p(i) ≠ m` for all `j < i`.
    pub fn is_m_restricted(&self, m: i64) -> bool {
        let n = self.n as i64;
        // Fix i ∈ 1..=n and write j = i − r − s·n with 0 ≤ r < n. Then
        // p(j) − p(i) = p(i − r) − p(i) − s·n, so a violation needs
        // s = (p(i − r) − p(i) − m)/n integral with j < i.
        for i in 1..=n {
            for r in 0..n {
                let diff = self.eval(i - r) - self.eval(i) - m;
                if diff.rem_euclid(n) == 0 {
                    let s = diff / n;
                    if r + s * n >= 1 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Lexicographic comparison of windows.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.window.cmp(&other.window)
    }

    /// The action on `C^n` with level `t`: `(p·w)_{r} = w_i + t·s` where
    /// `p(i) = r + s·n`, `1 ≤ r ≤ n`. For `π` this is
    /// `(w_n + t, w_1, …, w_{n−1})`; finite permutations permute entries.
    pub fn act_on_weight(&self, w: &[Q], t: &Q) -> Vec<Q> {
        let n = self.n as i64;
        let mut out = vec![Q::zero(); self.n];
        for i in 0..self.n {
            let v = self.window[i];
            let r = (v - 1).rem_euclid(n) + 1;
            let shift = (v - r) / n;
            out[(r - 1) as usize] = &w[i] + t * q(shift);
        }
        out
    }
}

/// The translation `t_a`, window `[1 + n a_1, …, n + n a_n]`.
pub fn translation(a: &[i64]) -> AffinePermutation {
    let n = a.len() as i64;
    let window = a.iter().zip(1..).map(|(&ai, i)| i + n * ai).collect();
    AffinePermutation { n: a.len(), window }
}

/// The minimal coset representative `w_a = t_a g_a⁻¹`.
pub fn min_coset_rep(a: &[i64]) -> Result<AffinePermutation> {
    check_nonnegative(a)?;
    let g_inv = AffinePermutation::from_finite(&perm_inverse(&sorting_permutation(a)));
    Ok(translation(a).compose(&g_inv))
}

/// The factorization `w = (s_{ν_r}⋯s_1 π)⋯(s_{ν_1}⋯s_1 π)` of `w ∈ Min`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetFactorization {
    pub n: usize,
    /// Weakly decreasing, `0 ≤ ν_i < n`, zero parts kept; length = degree.
    pub nu: Vec<usize>,
}

impl CosetFactorization {
    /// Multiplies the factors back together.
    pub fn reassemble(&self) -> AffinePermutation {
        let n = self.n;
        let mut w = AffinePermutation::identity(n);
        for &k in &self.nu {
            let mut factor = AffinePermutation::pi(n);
            for j in 1..=k {
                factor = AffinePermutation::simple(n, j).compose(&factor);
            }
            w = factor.compose(&w);
        }
        w
    }

    /// The conjugate partition of `ν` (zero parts ignored), `n − 1` entries.
    pub fn transpose(&self) -> Vec<usize> {
        (1..self.n).map(|i| self.nu.iter().filter(|&&p| p >= i).count()).collect()
    }
}

pub fn coset_factorization(w: &AffinePermutation) -> Result<CosetFactorization> {
    if !w.is_min() {
        return Err(domain!("{:?} is not a minimal coset representative", w.window));
    }
    let n = w.n;
    let pi_inv = AffinePermutation::pi(n).inverse();
    let mut nu = Vec::new();
    let mut cur = w.clone();
    let mut deg = cur.degree()?;
    while deg > 0 {
        let bound = cur.window[n - 1] - n as i64;
        let k = (1..=n).filter(|&k| cur.window[k - 1] < bound).max().unwrap_or(0);
        if k >= n {
            return Err(internal!("coset step produced ν = {k} ≥ n"));
        }
        let mut next = cur.compose(&pi_inv);
        for j in 1..=k {
            next = next.compose(&AffinePermutation::simple(n, j));
        }
        if !next.is_min() || next.degree()? != deg - 1 {
            return Err(internal!("coset recursion left Min at {:?}", next.window));
        }
        nu.push(k);
        cur = next;
        deg -= 1;
    }
    if cur != AffinePermutation::identity(n) {
        return Err(internal!("degree-0 remainder {:?} is not the identity", cur.window));
    }
    Ok(CosetFactorization { n, nu })
}

/// `ν^T_i = #{k < 1 : w(k) > w(i)}` for `i = 1, …, n − 1`: the inversions of
/// `w` grouped by their right end.
pub fn transpose_from_inversions(w: &AffinePermutation) -> Vec<usize> {
    let n = w.n as i64;
    (1..n)
        .map(|i| {
            let target = w.eval(i);
            let mut count = 0;
            for r in 1..=n {
                // k = r − s·n for s ≥ 1, w(k) = w(r) − s·n.
                let mut s = 1;
                while w.eval(r) - s * n > target {
                    count += 1;
                    s += 1;
                }
            }
            count
        })
        .collect()
}

/// The order `≺` on `P_k(n)`: `a ≺ b` iff the window of `w_a` is
/// lexicographically greater than that of `w_b`. Returns `Less` for `a ≺ b`.
pub fn compare_order(a: &[i64], b: &[i64]) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(domain!("length mismatch {a:?} vs {b:?}"));
    }
    if norm(a) != norm(b) {
        return Err(domain!("norms differ: {a:?} vs {b:?}"));
    }
    let wa = min_coset_rep(a)?;
    let wb = min_coset_rep(b)?;
    Ok(wb.lex_cmp(&wa))
}

/// `P_k(n)` listed increasingly for `≺`.
pub fn order_chain(n: usize, k: i64) -> Vec<IntSequence> {
    let mut labelled: Vec<(Vec<i64>, IntSequence)> = compositions(n, k)
        .into_iter()
        .map(|a| (min_coset_rep(&a).expect("nonnegative").window, a))
        .collect();
    labelled.sort_by(|x, y| y.0.cmp(&x.0));
    labelled.into_iter().map(|(_, a)| a).collect()
}

/// The permutation `ω` with `ω⁻¹(i) = −n a_i + m (g_a(i) − 1)`.
pub fn omega_from_basis(a: &[i64], m: i64) -> Result<AffinePermutation> {
    let n = a.len() as i64;
    if m <= 0 || gcd(m, n) != 1 {
        return Err(domain!("omega needs gcd(m, n) = 1 with m > 0, got m = {m}, n = {n}"));
    }
    let g = sorting_permutation(a);
    let inv_window = a.iter().zip(&g).map(|(&ai, &gi)| -n * ai + m * (gi as i64 - 1)).collect();
    Ok(AffinePermutation::new(inv_window)?.inverse())
}
