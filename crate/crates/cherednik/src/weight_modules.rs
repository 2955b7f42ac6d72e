//! Standard and simple modules in their `u`-weight bases.
//!
//! A basis vector `v(a, T)` is labelled by `a ∈ Z^n_{≥0}` and a standard
//! tableau `T`. The Dunkl–Opdam elements act diagonally with
//! `wt_i(a, T) = t a_i − c ct(T)_{g_a(i)}`, and `τ`, `λ`, `s_i` act by
//! explicit two-term formulas. Simple quotients drop the labels of their
//! radical; the renormalized basis rescales by `φ`.

use std::cmp::Ordering;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::affine_perm::{
    compositions, min_coset_rep, perm_inverse, pi_action, pi_inv_action, s_action,
    sorting_permutation, IntSequence,
};
use crate::algebra::{self, Gen, RelationReport, RepModule};
use crate::error::{domain, Result};
use crate::lincomb::LinComb;
use crate::rca_oracle::canonical_predecessor;
use crate::scalar::{frac, gcd, q, Q};
use crate::tableau::{hook_shape, standard_tableaux, Tableau};

/// A basis label `(a, T)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Label {
    pub a: IntSequence,
    pub tableau: Tableau,
}

impl Label {
    pub fn new(a: IntSequence, tableau: Tableau) -> Self {
        Label { a, tableau }
    }

    /// The label `(a, row tableau)` of `Δ(triv)`.
    pub fn triv(a: IntSequence) -> Self {
        let n = a.len();
        Label { a, tableau: Tableau::row(n) }
    }

    pub fn degree(&self) -> i64 {
        self.a.iter().sum()
    }
}

pub type ModuleVector = LinComb<Label>;

/// `wt_i(a, T) = t a_i − c ct(T)_{g_a(i)}`.
pub fn weight(a: &[i64], tab: &Tableau, t: &Q, c: &Q) -> Vec<Q> {
    let g = sorting_permutation(a);
    a.iter().zip(&g).map(|(&ai, &gi)| t * q(ai) - c * q(tab.content(gi))).collect()
}

/// Membership in `𝒯`: `a_i − a_j ≤ m` for all `i, j`, and `a_i − a_j = m`
/// only with `i < j`.
pub fn in_l_basis(a: &[i64], m: i64) -> bool {
    for (i, &ai) in a.iter().enumerate() {
        for (j, &aj) in a.iter().enumerate() {
            let d = ai - aj;
            if d > m || (d == m && j < i) {
                return false;
            }
        }
    }
    true
}

/// The `∘` condition labelling the weight basis of `L_c(μ_ℓ)`; `i_ℓ` is the
/// entry of the smallest-content box of `T`.
pub fn simple_hook_predicate(a: &[i64], tab: &Tableau, l: usize, m: i64) -> Result<bool> {
    let n = a.len();
    if tab.shape() != hook_shape(n, l) {
        return Err(domain!("tableau shape {:?} is not the hook ({}, 1^{l})", tab.shape(), n - l));
    }
    let i_l = (1..=n).min_by_key(|&i| tab.content(i)).expect("nonempty tableau");
    let g_inv = perm_inverse(&sorting_permutation(a));
    let (top, low) = (g_inv[n - 1], g_inv[i_l - 1]);
    let (x, y) = (a[top - 1] - m, a[low - 1]);
    Ok(x < y || (x == y && top < low))
}

/// `#{a ∈ 𝒯 : a_1 = 0, a_i < m}`, the basis of the `sl_n` slice.
pub fn sl_slice_count(m: i64, n: usize) -> usize {
    fn rec(prefix: &mut Vec<i64>, n: usize, m: i64, count: &mut usize) {
        if prefix.len() == n {
            if in_l_basis(prefix, m) {
                *count += 1;
            }
            return;
        }
        for x in 0..m {
            prefix.push(x);
            rec(prefix, n, m, count);
            prefix.pop();
        }
    }
    let mut count = 0;
    rec(&mut vec![0], n, m, &mut count);
    count
}

/// Which module a [`WeightModule`] realizes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModuleDescriptor {
    Standard { shape: Vec<usize> },
    SimpleTriv { m: i64 },
    SimpleHook { l: usize, m: i64 },
    T0Standard { shape: Vec<usize> },
    RenormalizedTriv { m: i64 },
}

#[derive(Clone, Debug)]
pub struct WeightModule {
    pub n: usize,
    pub t: Q,
    pub c: Q,
    pub kind: ModuleDescriptor,
    shape: Vec<usize>,
}

fn check_coprime(m: i64, n: usize) -> Result<()> {
    if m <= 0 || gcd(m, n as i64) != 1 {
        return Err(domain!("need m > 0 with gcd(m, n) = 1, got m = {m}, n = {n}"));
    }
    Ok(())
}

impl WeightModule {
    /// `Δ_{t,c}(μ)`.
    pub fn standard(shape: &[usize], t: Q, c: Q) -> Result<Self> {
        let n: usize = shape.iter().sum();
        if n < 2 || shape.windows(2).any(|w| w[0] < w[1]) || shape.contains(&0) {
            return Err(domain!("{shape:?} is not a partition of some n ≥ 2"));
        }
        Ok(WeightModule { n, t, c, kind: ModuleDescriptor::Standard { shape: shape.to_vec() }, shape: shape.to_vec() })
    }

    /// `L_{m/n}(triv)` at `t = 1`.
    pub fn simple_triv(m: i64, n: usize) -> Result<Self> {
        check_coprime(m, n)?;
        Ok(WeightModule { n, t: q(1), c: frac(m, n as i64), kind: ModuleDescriptor::SimpleTriv { m }, shape: vec![n] })
    }

    /// `L_{m/n}(μ_ℓ)`, `0 ≤ ℓ < n − 1`.
    pub fn simple_hook(l: usize, m: i64, n: usize) -> Result<Self> {
        check_coprime(m, n)?;
        if l + 1 >= n {
            return Err(domain!("hook index ℓ = {l} out of range for n = {n}"));
        }
        Ok(WeightModule {
            n,
            t: q(1),
            c: frac(m, n as i64),
            kind: ModuleDescriptor::SimpleHook { l, m },
            shape: hook_shape(n, l),
        })
    }

    /// `Δ_{0,c}(μ)`.
    pub fn t0_standard(shape: &[usize], c: Q) -> Result<Self> {
        let mut w = Self::standard(shape, Q::zero(), c)?;
        w.kind = ModuleDescriptor::T0Standard { shape: shape.to_vec() };
        Ok(w)
    }

    /// `L_{m/n}(triv)` in the renormalized basis `ṽ_a = φ(a) v_a`.
    pub fn renormalized_triv(m: i64, n: usize) -> Result<Self> {
        let mut w = Self::simple_triv(m, n)?;
        w.kind = ModuleDescriptor::RenormalizedTriv { m };
        Ok(w)
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn weight(&self, b: &Label) -> Vec<Q> {
        weight(&b.a, &b.tableau, &self.t, &self.c)
    }

    /// Whether `b` indexes a basis vector of this module.
    pub fn contains(&self, b: &Label) -> bool {
        if b.a.len() != self.n || b.a.iter().any(|&x| x < 0) || b.tableau.shape() != self.shape {
            return false;
        }
        match &self.kind {
            ModuleDescriptor::SimpleTriv { m } | ModuleDescriptor::RenormalizedTriv { m } => in_l_basis(&b.a, *m),
            ModuleDescriptor::SimpleHook { l, m } => simple_hook_predicate(&b.a, &b.tableau, *l, *m).unwrap_or(false),
            _ => true,
        }
    }

    /// Basis labels of degree exactly `d`.
    pub fn basis(&self, d: i64) -> Vec<Label> {
        let tabs = standard_tableaux(&self.shape);
        let mut out = Vec::new();
        for a in compositions(self.n, d) {
            for t in &tabs {
                let b = Label::new(a.clone(), t.clone());
                if self.contains(&b) {
                    out.push(b);
                }
            }
        }
        out
    }

    pub fn basis_up_to(&self, d: i64) -> Vec<Label> {
        (0..=d).flat_map(|k| self.basis(k)).collect()
    }

    /// The action of `u_i`, `s_i`, `τ`, `λ` on a basis vector of `Δ(μ)` (no
    /// truncation, no renormalization).
    pub fn act_standard(&self, g: &Gen, b: &Label) -> Result<ModuleVector> {
        let n = self.n;
        match g {
            Gen::U(i) => Ok(LinComb::term(b.clone(), self.weight(b)[i - 1].clone())),
            Gen::Tau => Ok(LinComb::basis(Label::new(pi_action(&b.a), b.tableau.clone()))),
            Gen::Lambda => {
                if b.a[0] == 0 {
                    return Ok(LinComb::new());
                }
                let w1 = self.weight(b)[0].clone();
                Ok(LinComb::term(Label::new(pi_inv_action(&b.a), b.tableau.clone()), w1))
            }
            Gen::S(i) if (1..n).contains(i) => self.act_s(*i, b),
            other => Err(domain!("generator {other:?} is not a weight-basis primitive")),
        }
    }

    /// `c / (wt_i − wt_{i+1})`, the diagonal coefficient of `s_i`.
    fn s_diag(&self, i: usize, w: &[Q]) -> Result<Q> {
        let gap = &w[i - 1] - &w[i];
        if gap.is_zero() {
            return Err(domain!("equal adjacent weights at position {i}: s_{i} is not seminormal here"));
        }
        Ok(&self.c / gap)
    }

    fn act_s(&self, i: usize, b: &Label) -> Result<ModuleVector> {
        let (ai, aj) = (b.a[i - 1], b.a[i]);
        let w = self.weight(b);
        let mut out = LinComb::new();
        match ai.cmp(&aj) {
            Ordering::Greater => {
                let k = self.s_diag(i, &w)?;
                out.add_term(Label::new(s_action(i, &b.a), b.tableau.clone()), Q::one());
                out.add_term(b.clone(), k);
            }
            Ordering::Less => {
                let k = self.s_diag(i, &w)?;
                out.add_term(Label::new(s_action(i, &b.a), b.tableau.clone()), Q::one() - &k * &k);
                out.add_term(b.clone(), k);
            }
            Ordering::Equal => {
                let p = sorting_permutation(&b.a)[i - 1];
                let (rp, cp) = b.tableau.position(p);
                let (rq, cq) = b.tableau.position(p + 1);
                if rp == rq {
                    out.add_term(b.clone(), Q::one());
                } else if cp == cq {
                    out.add_term(b.clone(), -Q::one());
                } else {
                    let k = self.s_diag(i, &w)?;
                    let swapped = b.tableau.swap(p).expect("boxes in different rows and columns");
                    let c_other = if rq < rp { Q::one() } else { Q::one() - &k * &k };
                    out.add_term(Label::new(b.a.clone(), swapped), c_other);
                    out.add_term(b.clone(), k);
                }
            }
        }
        Ok(out)
    }

    /// The action in this module's own basis.
    pub fn act(&self, g: &Gen, b: &Label) -> Result<ModuleVector> {
        if !self.contains(b) {
            return Err(domain!("{b:?} is not a basis label of {:?}", self.kind));
        }
        let mut img = self.act_standard(g, b)?;
        match &self.kind {
            ModuleDescriptor::Standard { .. } | ModuleDescriptor::T0Standard { .. } => Ok(img),
            ModuleDescriptor::SimpleTriv { .. } | ModuleDescriptor::SimpleHook { .. } => {
                img.retain(|l| self.contains(l));
                Ok(img)
            }
            ModuleDescriptor::RenormalizedTriv { m } => {
                img.retain(|l| self.contains(l));
                let src = phi_renorm(&b.a, *m)?;
                let mut out = LinComb::new();
                for (l, coef) in img.iter() {
                    out.add_term(l.clone(), coef * &src / phi_renorm(&l.a, *m)?);
                }
                Ok(out)
            }
        }
    }

    pub fn apply(&self, g: &Gen, v: &ModuleVector) -> Result<ModuleVector> {
        algebra::apply_gen(self, g, v)
    }

    /// `σ_i = s_i − c/(u_i − u_{i+1})` on any vector, term by term.
    pub fn apply_sigma(&self, i: usize, v: &ModuleVector) -> Result<ModuleVector> {
        let mut out = LinComb::new();
        for (b, coef) in v.iter() {
            let w = self.weight(b);
            let k = self.s_diag(i, &w)?;
            let mut img = self.act(&Gen::S(i), b)?;
            img.add_term(b.clone(), -k);
            out.add_scaled(&img, coef);
        }
        Ok(out)
    }

    /// Runs the full relation suite on all basis vectors of degree `≤ d`.
    pub fn verify_relations(&self, d: i64) -> Result<RelationReport> {
        let rels = algebra::all_relations(self.n, &self.t, &self.c);
        algebra::verify(self, &rels, &self.basis_up_to(d))
    }
}

impl RepModule for WeightModule {
    type Label = Label;

    fn n(&self) -> usize {
        self.n
    }
    fn t(&self) -> &Q {
        &self.t
    }
    fn c(&self) -> &Q {
        &self.c
    }

    fn act_primitive(&self, g: &Gen, b: &Label) -> Option<Result<ModuleVector>> {
        match g {
            Gen::U(_) | Gen::S(_) | Gen::Tau | Gen::Lambda => Some(self.act(g, b)),
            _ => None,
        }
    }
}

/// The renormalization `φ` at `t = 1`, `c = m/n`: `φ(0) = 1`,
/// `φ(a) = φ(π⁻¹a)` if `a_1 > 0`, and otherwise, with `j` the first nonzero
/// position, `φ(a) = (wt_j − wt_{j−1})/(wt_j − wt_{j−1} − c) · φ(s_{j−1}a)`.
pub fn phi_renorm(a: &[i64], m: i64) -> Result<Q> {
    let n = a.len();
    check_coprime(m, n)?;
    let c = frac(m, n as i64);
    let t = q(1);
    let mut cur = a.to_vec();
    let mut acc = Q::one();
    loop {
        if cur.iter().all(|&x| x == 0) {
            return Ok(acc);
        }
        if cur[0] > 0 {
            cur = pi_inv_action(&cur);
            continue;
        }
        let j = cur.iter().position(|&x| x > 0).expect("nonzero") + 1;
        let w = weight(&cur, &Tableau::row(n), &t, &c);
        let num = &w[j - 1] - &w[j - 2];
        let den = &num - &c;
        if num.is_zero() || den.is_zero() {
            return Err(domain!("φ is not finite and nonzero along the path from {a:?} (at {cur:?})"));
        }
        acc *= num / den;
        cur = s_action(j - 1, &cur);
    }
}

/// The `t = 0` analogue: `φ_0(a)/φ_0(s_i a) = (δ − 1)/δ` for `a_i > a_{i+1}`,
/// `δ = g_a(i+1) − g_a(i)`, built along the same path as [`phi_renorm`].
pub fn phi_renorm_t0(a: &[i64]) -> Result<Q> {
    let mut cur = a.to_vec();
    let mut acc = Q::one();
    loop {
        if cur.iter().all(|&x| x == 0) {
            return Ok(acc);
        }
        if cur[0] > 0 {
            cur = pi_inv_action(&cur);
            continue;
        }
        let j = cur.iter().position(|&x| x > 0).expect("nonzero") + 1;
        // cur has cur_{j−1} = 0 < cur_j; b = s_{j−1}cur has b_{j−1} > b_j and
        // φ(b)/φ(cur) = (δ_b − 1)/δ_b.
        let b = s_action(j - 1, &cur);
        let g = sorting_permutation(&b);
        let delta = q(g[j - 1] as i64 - g[j - 2] as i64);
        let ratio = (&delta - Q::one()) / &delta;
        if ratio.is_zero() {
            return Err(domain!("φ_0 vanishes along the path from {a:?}"));
        }
        acc /= ratio;
        cur = b;
    }
}

/// The closed form `(1 − s_i)ṽ_a = (wt_i − wt_{i+1} − c)/(wt_i − wt_{i+1}) (ṽ_a − ṽ_{s_i a})`,
/// with `ṽ_{s_i a} = 0` when `s_i a ∉ 𝒯`.
pub fn renormalized_closed_form(a: &[i64], i: usize, m: i64) -> Result<ModuleVector> {
    let n = a.len();
    let c = frac(m, n as i64);
    let w = weight(a, &Tableau::row(n), &q(1), &c);
    let gap = &w[i - 1] - &w[i];
    let coef = (&gap - &c) / &gap;
    let mut out = LinComb::term(Label::triv(a.to_vec()), coef.clone());
    let sa = s_action(i, a);
    if sa != a && in_l_basis(&sa, m) {
        out.add_term(Label::triv(sa), -coef);
    }
    Ok(out)
}

/// The literal `t = 0` renormalized formula
/// `(1 + s_i)ṽ_a = (δ − 1)/δ ṽ_{s_i a} + (δ + 1)/δ ṽ_a`, `δ = g_a(i+1) − g_a(i)`.
pub fn t0_renormalized_closed_form(a: &[i64], i: usize) -> ModuleVector {
    let g = sorting_permutation(a);
    let delta = q(g[i] as i64 - g[i - 1] as i64);
    let mut out = LinComb::term(Label::triv(a.to_vec()), (&delta + Q::one()) / &delta);
    out.add_term(Label::triv(s_action(i, a)), (&delta - Q::one()) / &delta);
    out
}

/// `(1 ± s_i)` applied to `ṽ_a` computed from the module action, expressed in
/// the renormalized basis; `sign = −1` gives `1 − s_i`.
pub fn renormalized_action(module: &WeightModule, a: &[i64], i: usize, sign: i64, phi: impl Fn(&[i64]) -> Result<Q>) -> Result<ModuleVector> {
    let b = Label::triv(a.to_vec());
    let mut s_img = module.act_standard(&Gen::S(i), &b)?;
    s_img.retain(|l| module.contains(l));
    let mut out = LinComb::term(b.clone(), Q::one());
    out.add_scaled(&s_img, &q(sign));
    let pa = phi(a)?;
    let mut renorm = LinComb::new();
    for (l, coef) in out.iter() {
        renorm.add_term(l.clone(), coef * &pa / phi(&l.a)?);
    }
    Ok(renorm)
}

/// The multiset `{w_a · wt_T : ||a|| = k, T ∈ SYT(μ)}` of generalized weights,
/// sorted.
pub fn mackey_weight_multiset(shape: &[usize], t: &Q, c: &Q, k: i64) -> Vec<Vec<Q>> {
    let n: usize = shape.iter().sum();
    let mut out = Vec::new();
    for tab in standard_tableaux(shape) {
        let wt_t: Vec<Q> = (1..=n).map(|i| -c * q(tab.content(i))).collect();
        for a in compositions(n, k) {
            let w = min_coset_rep(&a).expect("compositions are nonnegative");
            out.push(w.act_on_weight(&wt_t, t));
        }
    }
    out.sort();
    out
}

/// Applies `W_m = τ(σ_{n−1}⋯σ_1 τ)^{m−1}`.
pub fn apply_wm(module: &WeightModule, m: i64, v: &ModuleVector) -> Result<ModuleVector> {
    let mut cur = v.clone();
    for _ in 0..m - 1 {
        cur = module.apply(&Gen::Tau, &cur)?;
        for i in 1..module.n {
            cur = module.apply_sigma(i, &cur)?;
        }
    }
    module.apply(&Gen::Tau, &cur)
}

/// Checks the exchange relations of `W_m` on `Δ_{m/n}(triv)` for all labels of
/// degree `≤ d`: `u_1 W = W(u_n + m)`, `u_i W = W u_{i−1}` and
/// `σ_i W = W σ_{i−1}` for `1 < i < n`.
pub fn wm_check(m: i64, n: usize, d: i64) -> Result<bool> {
    check_coprime(m, n)?;
    let module = WeightModule::standard(&[n], q(1), frac(m, n as i64))?;
    for b in module.basis_up_to(d) {
        let v = LinComb::basis(b.clone());
        let wv = apply_wm(&module, m, &v)?;
        let lhs = module.apply(&Gen::U(1), &wv)?;
        let mut shifted = module.apply(&Gen::U(n), &v)?;
        shifted.add_scaled(&v, &(&module.t * q(m)));
        if lhs != apply_wm(&module, m, &shifted)? {
            return Ok(false);
        }
        for i in 2..=n {
            let lhs = module.apply(&Gen::U(i), &wv)?;
            let rhs = apply_wm(&module, m, &module.apply(&Gen::U(i - 1), &v)?)?;
            if lhs != rhs {
                return Ok(false);
            }
        }
        for i in 2..n {
            let (Ok(lhs), Ok(inner)) = (module.apply_sigma(i, &wv), module.apply_sigma(i - 1, &v)) else {
                continue;
            };
            if lhs != apply_wm(&module, m, &inner)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Canonical-word transport: returns `v(a, T)` as `W_a v(0, T)` where `W_a` is
/// the canonical word of `a` (`τ` then `σ_{i_0−1}⋯σ_1`, recursively), with each
/// letter applied by `step`.
pub fn transport_along_canonical_word<V>(
    a: &[i64],
    base: V,
    mut step: impl FnMut(Letter, V) -> Result<V>,
) -> Result<V> {
    let mut word = Vec::new();
    let mut cur = a.to_vec();
    while let Some((i0, star)) = canonical_predecessor(&cur) {
        word.push(i0);
        cur = star;
    }
    let mut v = base;
    for &i0 in word.iter().rev() {
        v = step(Letter::Tau, v)?;
        for j in 1..i0 {
            v = step(Letter::Sigma(j), v)?;
        }
    }
    Ok(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    Tau,
    Sigma(usize),
}
