//! Torus fixed points of Hilbert schemes of points on `C = {x^m = y^n}` and on
//! the non-reduced curve `C_0 = {y^n = 0}`.
//!
//! A monomial ideal of `O_C` is a staircase. In the x-presentation it has `n`
//! generators `y^{i−1} x^{c_i}` over `C[[x]]` with
//! `c_1 ≥ ⋯ ≥ c_n ≥ c_1 − m`. In the y-presentation it has `m` generators
//! `x^α y^{c_α}` over `C[[y]]` with `c_0 ≥ ⋯ ≥ c_{m−1} ≥ c_0 − n`. The
//! codimension is `Σ c`.

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::affine_perm::{compositions, cycle_count, sorting_permutation, IntSequence};
use crate::algebra::{self, Gen};
use crate::error::{domain, Result};
use crate::lincomb::LinComb;
use crate::scalar::{binomial, fmt_q, gcd, multinomial, q, Q};
use crate::weight_modules::{in_l_basis, WeightModule};

/// Which variable the staircase is presented over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Presentation {
    /// `n` generators `y^{i−1}x^{c_i}`, wrap bound `m` (the parabolic side).
    X,
    /// `m` generators `x^α y^{c_α}`, wrap bound `n` (the compositional side).
    Y,
}

fn check_coprime(m: i64, n: i64) -> Result<()> {
    if m <= 0 || n <= 0 || gcd(m, n) != 1 {
        return Err(domain!("need coprime positive (m, n), got ({m}, {n})"));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Staircase {
    pub presentation: Presentation,
    pub c: Vec<i64>,
    /// The wrap bound: `m` for the x-presentation, `n` for the y-presentation.
    pub bound: i64,
}

impl Staircase {
    pub fn codim(&self) -> i64 {
        self.c.iter().sum()
    }

    /// Jordan type of the nilpotent operator on the generators: lengths of
    /// runs of equal `c`, with the first and last run merged when
    /// `c_first − c_last` equals the bound.
    pub fn jordan_composition(&self) -> Vec<usize> {
        let mut runs: Vec<usize> = self.c.iter().dedup_with_count().map(|(k, _)| k).collect();
        let wraps = self.c.first().zip(self.c.last()).is_some_and(|(f, l)| f - l == self.bound);
        if wraps && runs.len() > 1 {
            let last = runs.pop().expect("two runs");
            runs[0] += last;
        }
        runs
    }

    /// Number of full flags above this ideal: `multinomial(n; λ)`.
    pub fn flag_count(&self) -> u64 {
        multinomial(&self.jordan_composition())
    }

    /// Semigroup valuations of the ideal's generators, under
    /// `(x, y) ↦ (z^n, z^m)`.
    pub fn generator_valuations(&self, m: i64, n: i64) -> Vec<i64> {
        match self.presentation {
            Presentation::X => self.c.iter().enumerate().map(|(i, &ci)| m * i as i64 + n * ci).collect(),
            Presentation::Y => self.c.iter().enumerate().map(|(a, &ca)| n * a as i64 + m * ca).collect(),
        }
    }
}

/// All staircases of codimension `k` in the given presentation, ascending
/// lexicographically in `c`.
pub fn enum_staircases(m: i64, n: i64, k: i64, presentation: Presentation) -> Result<Vec<Staircase>> {
    check_coprime(m, n)?;
    let (len, bound) = match presentation {
        Presentation::X => (n as usize, m),
        Presentation::Y => (m as usize, n),
    };
    let mut out: Vec<Staircase> = compositions(len, k)
        .into_iter()
        .filter(|c| c.windows(2).all(|w| w[0] >= w[1]) && c[len - 1] >= c[0] - bound)
        .map(|c| Staircase { presentation, c, bound })
        .collect();
    out.sort();
    Ok(out)
}

/// `Hilb_k(C)` fixed points in the x-presentation.
pub fn enum_hilb(m: i64, n: i64, k: i64) -> Result<Vec<Staircase>> {
    enum_staircases(m, n, k, Presentation::X)
}

/// A fixed point of the parabolic Hilbert scheme: generators `y^{α_i}x^{c_i}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct FlagPoint {
    pub c: Vec<i64>,
}

/// `g̃(i) = #{j : c_j > c_i} + #{j ≤ i : c_j = c_i}`, the sort into
/// non-increasing order with ties kept in index order.
pub fn decreasing_sort_permutation(c: &[i64]) -> Vec<usize> {
    (0..c.len())
        .map(|i| c.iter().filter(|&&x| x > c[i]).count() + c[..=i].iter().filter(|&&x| x == c[i]).count())
        .collect()
}

impl FlagPoint {
    /// `α_i = g̃(i) − 1`.
    pub fn alpha(&self) -> Vec<i64> {
        decreasing_sort_permutation(&self.c).into_iter().map(|g| g as i64 - 1).collect()
    }

    /// The label `a_i = c_{n+1−i}`.
    pub fn label(&self) -> IntSequence {
        self.c.iter().rev().copied().collect()
    }

    /// The ideal `I_k`: `c` sorted non-increasingly.
    pub fn staircase(&self, m: i64) -> Staircase {
        let mut c = self.c.clone();
        c.sort_by(|a, b| b.cmp(a));
        Staircase { presentation: Presentation::X, c, bound: m }
    }

    /// Weights of `𝓛_i`: `m α_i + n c_i`.
    pub fn line_bundle_weights(&self, m: i64) -> Vec<i64> {
        let n = self.c.len() as i64;
        self.alpha().iter().zip(&self.c).map(|(&a, &c)| m * a + n * c).collect()
    }

    /// `n wt_{n+1−i}(a) + m(n − 1)` for `a = label()`, with `t = 1`, `c = m/n`.
    pub fn weights_from_label(&self, m: i64) -> Vec<Q> {
        let n = self.c.len() as i64;
        let a = self.label();
        let g = sorting_permutation(&a);
        (0..n as usize)
            .map(|i| {
                let j = n as usize - 1 - i;
                // n·wt_j = n a_j − m (g_a(j) − 1)
                q(n * a[j] - m * (g[j] as i64 - 1) + m * (n - 1))
            })
            .collect()
    }
}

/// `max c − min c ≤ m`, and `c_j + m = c_i` forces `j < i`.
pub fn is_flag_point(c: &[i64], m: i64) -> bool {
    c.iter().all(|&x| x >= 0)
        && c.iter().enumerate().all(|(i, &ci)| {
            c.iter().enumerate().all(|(j, &cj)| ci - cj < m || (ci - cj == m && j < i))
        })
}

/// `PHilb` fixed points with `Σ c = k`, ascending lexicographically.
pub fn enum_phillb(m: i64, n: i64, k: i64) -> Result<Vec<FlagPoint>> {
    check_coprime(m, n)?;
    let mut out: Vec<FlagPoint> = compositions(n as usize, k)
        .into_iter()
        .filter(|c| is_flag_point(c, m))
        .map(|c| FlagPoint { c })
        .collect();
    out.sort();
    Ok(out)
}

/// A fixed point of the compositional Hilbert scheme: a y-staircase whose
/// `m` generator boxes carry labels in `1..=r`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct LabeledStaircase {
    pub staircase: Staircase,
    pub labels: Vec<usize>,
    pub r: usize,
}

impl LabeledStaircase {
    /// `γ_j = #{boxes labelled j}`.
    pub fn gamma(&self) -> Vec<usize> {
        let mut g = vec![0; self.r];
        for &l in &self.labels {
            g[l - 1] += 1;
        }
        g
    }
}

/// Labels weakly increase along each run of equal `c`, and when
/// `c_0 = c_{m−1} + n` the first box's label is at least the last one's.
pub fn is_valid_labeling(s: &Staircase, labels: &[usize]) -> bool {
    let c = &s.c;
    let len = c.len();
    let runs_ok = (0..len.saturating_sub(1)).all(|a| c[a] != c[a + 1] || labels[a] <= labels[a + 1]);
    let wrap_ok = len < 2 || c[0] - c[len - 1] != s.bound || labels[0] >= labels[len - 1];
    runs_ok && wrap_ok
}

/// `FHilb^r` fixed points of codimension `k`.
pub fn enum_fhilb(m: i64, n: i64, r: usize, k: i64) -> Result<Vec<LabeledStaircase>> {
    if r == 0 {
        return Err(domain!("r must be positive"));
    }
    let mut out = Vec::new();
    for s in enum_staircases(m, n, k, Presentation::Y)? {
        for labels in (0..s.c.len()).map(|_| 1..=r).multi_cartesian_product() {
            if is_valid_labeling(&s, &labels) {
                out.push(LabeledStaircase { staircase: s.clone(), labels, r });
            }
        }
    }
    Ok(out)
}

/// `Σ_{J⁰} ∏_i C(λ_i + r − 1, r − 1)` over y-staircases of codimension `k`.
pub fn fixed_point_dim(m: i64, n: i64, r: usize, k: i64) -> Result<u64> {
    Ok(enum_staircases(m, n, k, Presentation::Y)?
        .iter()
        .map(|s| s.jordan_composition().iter().map(|&l| binomial((l + r - 1) as u64, (r - 1) as u64)).product::<u64>())
        .sum())
}

/// `tr(g)` on the degree-`k` part of `L_{n/m}(triv)` (a module for `S_m`).
pub fn simple_trace(m: i64, n: i64, k: i64, g: &[usize]) -> Result<Q> {
    let module = WeightModule::simple_triv(n, m as usize)?;
    let mut tr = Q::from_integer(0.into());
    for b in module.basis(k) {
        let img = algebra::apply_gen(&module, &Gen::Perm(g.to_vec()), &LinComb::basis(b.clone()))?;
        tr += img.coeff(&b);
    }
    Ok(tr)
}

/// `dim (L_{n/m}(triv)_k ⊗ (C^r)^{⊗m})^{S_m}` by character averaging.
pub fn invariant_dim(m: i64, n: i64, r: usize, k: i64) -> Result<Q> {
    check_coprime(m, n)?;
    let perms: Vec<Vec<usize>> = (1..=m as usize).permutations(m as usize).collect();
    let terms = perms
        .par_iter()
        .map(|g| Ok(simple_trace(m, n, k, g)? * q((r as i64).pow(cycle_count(g) as u32))))
        .collect::<Result<Vec<Q>>>()?;
    let total: Q = terms.into_iter().sum();
    Ok(total / q(perms.len() as i64))
}

#[derive(Clone, Debug, Serialize)]
pub struct GiesekerRow {
    pub k: i64,
    pub fixed_point_dim: u64,
    #[serde(serialize_with = "crate::scalar::serialize_q")]
    pub invariant_dim: Q,
}

impl GiesekerRow {
    pub fn agrees(&self) -> bool {
        self.invariant_dim == q(self.fixed_point_dim as i64)
    }
}

pub fn gieseker_graded_dim(m: i64, n: i64, r: usize, k: i64) -> Result<GiesekerRow> {
    Ok(GiesekerRow { k, fixed_point_dim: fixed_point_dim(m, n, r, k)?, invariant_dim: invariant_dim(m, n, r, k)? })
}

/// `dim L_{n/m}(triv)_k^{S_γ}` for the Young subgroup `S_{γ_1} × ⋯ × S_{γ_r}`.
pub fn young_invariant_dim(m: i64, n: i64, k: i64, gamma: &[usize]) -> Result<Q> {
    let mut blocks = Vec::new();
    let mut start = 1;
    for &g in gamma {
        blocks.push((start..start + g).collect::<Vec<usize>>());
        start += g;
    }
    if start - 1 != m as usize {
        return Err(domain!("γ = {gamma:?} is not a composition of m = {m}"));
    }
    let block_perms: Vec<Vec<Vec<usize>>> =
        blocks.iter().map(|b| b.iter().copied().permutations(b.len()).collect()).collect();
    let mut total = Q::from_integer(0.into());
    let mut count = 0i64;
    for choice in block_perms.iter().map(|v| v.iter()).multi_cartesian_product() {
        let mut g: Vec<usize> = (1..=m as usize).collect();
        for (block, image) in blocks.iter().zip(choice) {
            for (&src, &dst) in block.iter().zip(image) {
                g[src - 1] = dst;
            }
        }
        total += simple_trace(m, n, k, &g)?;
        count += 1;
    }
    Ok(total / q(count))
}

/// Fixed points of `PHilb(C_0)`: every `c ∈ Z^n_{≥0}` with `Σ c = k`.
pub fn enum_nonreduced(n: usize, k: i64) -> Result<Vec<FlagPoint>> {
    if n < 2 {
        return Err(domain!("n must be at least 2"));
    }
    let mut out: Vec<FlagPoint> = compositions(n, k).into_iter().map(|c| FlagPoint { c }).collect();
    out.sort();
    Ok(out)
}

/// `(n − 1) + wt_{n+1−i}(a)` with the `t = 0` weights `wt_i = 1 − g_a(i)`.
pub fn nonreduced_weights_from_label(p: &FlagPoint) -> Vec<i64> {
    let n = p.c.len();
    let a = p.label();
    let g = sorting_permutation(&a);
    (0..n).map(|i| (n as i64 - 1) + (1 - g[n - 1 - i] as i64)).collect()
}

/// JSON/CSV row for `hilb enum`.
#[derive(Clone, Debug, Serialize)]
pub struct HilbRow {
    pub c: Vec<i64>,
    pub alpha: Vec<i64>,
    pub lambda: Vec<usize>,
    pub weights: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<Vec<usize>>,
}

impl HilbRow {
    pub fn from_staircase(s: &Staircase, m: i64, n: i64) -> Self {
        HilbRow {
            c: s.c.clone(),
            alpha: (0..s.c.len() as i64).collect(),
            lambda: s.jordan_composition(),
            weights: s.generator_valuations(m, n).iter().map(|v| v.to_string()).collect(),
            labels: None,
            gamma: None,
        }
    }

    pub fn from_flag(p: &FlagPoint, m: i64) -> Self {
        HilbRow {
            c: p.c.clone(),
            alpha: p.alpha(),
            lambda: p.staircase(m).jordan_composition(),
            weights: p.line_bundle_weights(m).iter().map(|v| fmt_q(&q(*v))).collect(),
            labels: None,
            gamma: None,
        }
    }

    pub fn from_labeled(l: &LabeledStaircase, m: i64, n: i64) -> Self {
        let mut row = Self::from_staircase(&l.staircase, m, n);
        row.labels = Some(l.labels.clone());
        row.gamma = Some(l.gamma());
        row
    }
}

/// `#{a ∈ 𝒯 : ||a|| = k}` for the `(m, n)` simple module.
pub fn simple_degree_count(m: i64, n: usize, k: i64) -> usize {
    compositions(n, k).iter().filter(|a| in_l_basis(a, m)).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn staircase_example() {
        let all = enum_hilb(4, 3, 15).unwrap();
        let s = all.iter().find(|s| s.c == vec![7, 5, 3]).expect("(7,5,3) enumerated");
        assert_eq!(s.codim(), 15);
        assert_eq!(s.jordan_composition(), vec![2, 1]);
        assert_eq!(s.flag_count(), 3);
        assert_eq!(enum_hilb(4, 3, 0).unwrap().len(), 1);
    }

    #[test]
    fn jordan_examples() {
        let s = Staircase { presentation: Presentation::X, c: vec![0, 0, 0], bound: 4 };
        assert_eq!(s.jordan_composition(), vec![3]);
    }

    #[test]
    fn flag_example() {
        let pts = enum_phillb(4, 3, 15).unwrap();
        let p = pts.iter().find(|p| p.c == vec![3, 7, 5]).expect("(3,7,5) enumerated");
        assert_eq!(p.alpha(), vec![2, 0, 1]);
        assert_eq!(p.line_bundle_weights(4), vec![17, 21, 19]);
        let zero = FlagPoint { c: vec![0, 0, 0] };
        assert_eq!(zero.line_bundle_weights(4), vec![0, 4, 8]);
    }

    #[test]
    fn labeled_example() {
        let pts = enum_fhilb(3, 4, 6, 15).unwrap();
        let hit = pts
            .iter()
            .find(|p| p.staircase.c == vec![7, 5, 3] && p.labels == vec![4, 2, 4])
            .expect("example labeling enumerated");
        assert_eq!(hit.gamma(), vec![0, 1, 0, 2, 0, 0]);
    }

    #[test]
    fn fhilb_base_cases() {
        // k = 0: one run of length m, labels weakly increasing.
        assert_eq!(enum_fhilb(2, 3, 3, 0).unwrap().len() as u64, binomial(4, 2));
        for k in 0..5 {
            assert_eq!(enum_fhilb(3, 2, 1, k).unwrap().len(), enum_staircases(3, 2, k, Presentation::Y).unwrap().len());
        }
    }

    #[test]
    fn nonreduced_examples() {
        let pts = enum_nonreduced(3, 0).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].alpha(), vec![0, 1, 2]);
        assert_eq!(nonreduced_weights_from_label(&pts[0]), vec![0, 1, 2]);
        assert_eq!(enum_nonreduced(3, 4).unwrap().len(), 15);
    }

    #[test]
    fn coprimality_is_checked() {
        assert!(enum_hilb(2, 4, 1).is_err());
        assert!(enum_phillb(3, 3, 1).is_err());
    }
}
