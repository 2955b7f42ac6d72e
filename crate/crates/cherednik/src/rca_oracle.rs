//! `H_{t,c}(S_n)` acting on `C[x_1, …, x_n]` through Dunkl operators.
//!
//! This is the brute-force ground truth: every formula in
//! [`weight_modules`](crate::weight_modules) is checked against it.
//!
//! Convention: `y_i f = t ∂_i f − c Σ_{j≠i} (f − (i j)f)/(x_i − x_j)`. The
//! commutator suite in [`verify_relations`] pins this down; flipping the sign
//! of `c` breaks `[y_1, x_1]` already on `f = 1`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::affine_perm::{compare_order, min_coset_rep, perm_inverse, sorting_permutation, IntSequence};
use crate::algebra::{self, long_cycle, transposition, Gen, RelationReport, RepModule};
use crate::error::{domain, internal, Result};
use crate::lincomb::LinComb;
use crate::poly::{self, Monomial, MultiPoly};
use crate::scalar::{q, Q};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    pub n: usize,
    #[serde(serialize_with = "crate::scalar::serialize_q")]
    pub t: Q,
    #[serde(serialize_with = "crate::scalar::serialize_q")]
    pub c: Q,
}

impl Params {
    pub fn new(n: usize, t: Q, c: Q) -> Result<Self> {
        if n < 2 {
            return Err(domain!("n must be at least 2, got {n}"));
        }
        Ok(Params { n, t, c })
    }

    /// `wt_i(a) = t a_i − c (g_a(i) − 1)`: the `u`-weight of `v_a` in `Δ(triv)`.
    pub fn weight(&self, a: &[i64]) -> Vec<Q> {
        let g = sorting_permutation(a);
        a.iter()
            .zip(&g)
            .map(|(&ai, &gi)| &self.t * q(ai) - &self.c * q(gi as i64 - 1))
            .collect()
    }
}

/// `y_i f`.
pub fn apply_dunkl(i: usize, f: &MultiPoly, p: &Params) -> MultiPoly {
    let mut out = poly::partial(i, f).scaled(&p.t);
    let minus_c = -p.c.clone();
    if minus_c.is_zero() {
        return out;
    }
    for (e, coef) in f.iter() {
        for j in (1..=p.n).filter(|&j| j != i) {
            let dd = poly::divided_difference_monomial(e, i, j);
            out.add_scaled(&dd, &(coef * &minus_c));
        }
    }
    out
}

/// The same operator with the divided differences done by synthetic division;
/// slower, used to cross-check [`apply_dunkl`].
pub fn apply_dunkl_by_division(i: usize, f: &MultiPoly, p: &Params) -> Result<MultiPoly> {
    let mut out = poly::partial(i, f).scaled(&p.t);
    for j in (1..=p.n).filter(|&j| j != i) {
        let num = f.clone().difference(&poly::swap_vars(i, j, f));
        out.add_scaled(&poly::divide_by_difference(&num, i, j)?, &-p.c.clone());
    }
    Ok(out)
}

/// `u_i = x_i y_i − c Σ_{j<i} (i j)`.
pub fn apply_u(i: usize, f: &MultiPoly, p: &Params) -> MultiPoly {
    let mut out = poly::mul_x(i, &apply_dunkl(i, f, p));
    for j in 1..i {
        out.add_scaled(&poly::swap_vars(i, j, f), &-p.c.clone());
    }
    out
}

/// `τ = x_1 (1 2 ⋯ n)`.
pub fn apply_tau(f: &MultiPoly, p: &Params) -> MultiPoly {
    poly::mul_x(1, &poly::permute(&long_cycle(p.n), f))
}

/// `λ = (1 2 ⋯ n)^{-1} y_1`.
pub fn apply_lambda(f: &MultiPoly, p: &Params) -> MultiPoly {
    poly::permute(&perm_inverse(&long_cycle(p.n)), &apply_dunkl(1, f, p))
}

/// `σ_i f = s_i f − c/(w_i − w_{i+1}) f` for a `u`-eigenvector `f` of weight `w`.
pub fn apply_sigma(i: usize, f: &MultiPoly, w: &[Q], p: &Params) -> Result<MultiPoly> {
    let gap = &w[i - 1] - &w[i];
    if gap.is_zero() {
        return Err(domain!("σ_{i} undefined: equal adjacent weights {}", crate::scalar::fmt_q(&w[i - 1])));
    }
    let mut out = poly::swap_vars(i, i + 1, f);
    out.add_scaled(f, &-(&p.c / gap));
    Ok(out)
}

pub fn is_eigenvector(f: &MultiPoly, w: &[Q], p: &Params) -> bool {
    (1..=p.n).all(|i| apply_u(i, f, p) == f.scaled(&w[i - 1]))
}

/// The polynomial representation as a [`RepModule`] on monomials.
pub struct PolyModule {
    pub params: Params,
}

impl RepModule for PolyModule {
    type Label = Monomial;

    fn n(&self) -> usize {
        self.params.n
    }
    fn t(&self) -> &Q {
        &self.params.t
    }
    fn c(&self) -> &Q {
        &self.params.c
    }

    fn act_primitive(&self, g: &Gen, b: &Monomial) -> Option<Result<MultiPoly>> {
        let p = &self.params;
        let f = poly::monomial(b);
        let out = match g {
            Gen::X(i) => poly::mul_x(*i, &f),
            Gen::Y(i) => apply_dunkl(*i, &f, p),
            Gen::S(i) => poly::swap_vars(*i, i + 1, &f),
            Gen::Perm(w) => poly::permute(w, &f),
            Gen::U(i) => apply_u(*i, &f, p),
            Gen::Tau => apply_tau(&f, p),
            Gen::Lambda => apply_lambda(&f, p),
        };
        Some(Ok(out))
    }
}

/// Every monomial of degree at most `d`.
pub fn monomials_up_to(n: usize, d: i64) -> Vec<Monomial> {
    (0..=d).flat_map(|k| poly::monomials_of_degree(n, k)).collect()
}

/// Checks the full relation suite on all monomials of degree `≤ d`.
pub fn verify_relations(p: &Params, d: i64) -> Result<RelationReport> {
    let m = PolyModule { params: p.clone() };
    let rels = algebra::all_relations(p.n, &p.t, &p.c);
    algebra::verify(&m, &rels, &monomials_up_to(p.n, d))
}

/// The eigenbasis `{v_a}` of `Δ_{t,c}(triv) = C[x]` for `||a|| ≤ D`.
#[derive(Clone, Debug)]
pub struct Eigenbasis {
    pub params: Params,
    pub max_degree: i64,
    pub vectors: BTreeMap<IntSequence, MultiPoly>,
}

/// `i_0 = min{i : a_i ≠ 0}` and `a* = (a_1, …, â_{i_0}, …, a_n, a_{i_0} − 1)`,
/// so that `a = s_{i_0−1}⋯s_1 π·a*`.
pub fn canonical_predecessor(a: &[i64]) -> Option<(usize, IntSequence)> {
    let i0 = a.iter().position(|&x| x != 0)? + 1;
    let mut star: IntSequence = a.iter().enumerate().filter(|&(k, _)| k + 1 != i0).map(|(_, &x)| x).collect();
    star.push(a[i0 - 1] - 1);
    Some((i0, star))
}

/// Builds `v_a = σ_{i_0−1}⋯σ_1 τ v_{a*}` degree by degree.
pub fn build_eigenbasis(p: &Params, max_degree: i64) -> Result<Eigenbasis> {
    let n = p.n;
    let mut vectors: BTreeMap<IntSequence, MultiPoly> = BTreeMap::new();
    vectors.insert(vec![0; n], poly::constant(n, q(1)));
    for d in 1..=max_degree {
        for a in poly::monomials_of_degree(n, d) {
            let (i0, star) = canonical_predecessor(&a).expect("nonzero label");
            let base = vectors.get(&star).ok_or_else(|| internal!("missing predecessor {star:?}"))?;
            let mut label = crate::affine_perm::pi_action(&star);
            let mut v = apply_tau(base, p);
            for j in 1..i0 {
                v = apply_sigma(j, &v, &p.weight(&label), p)?;
                label = crate::affine_perm::s_action(j, &label);
            }
            if label != a {
                return Err(internal!("canonical word for {a:?} ended at {label:?}"));
            }
            if v.coeff(&a) != q(1) {
                return Err(internal!("v_{a:?} has leading coefficient {:?}", v.coeff(&a)));
            }
            if !is_eigenvector(&v, &p.weight(&a), p) {
                return Err(internal!("v_{a:?} is not a u-eigenvector"));
            }
            vectors.insert(a, v);
        }
    }
    Ok(Eigenbasis { params: p.clone(), max_degree, vectors })
}

impl Eigenbasis {
    pub fn get(&self, a: &[i64]) -> Option<&MultiPoly> {
        self.vectors.get(a)
    }

    /// Coordinates of `f` in the basis. Each `v_b` is `x^b` plus
    /// `≺`-lower terms, so the `≺`-largest monomial of `f` (largest `w_b` lex-
    /// smallest) fixes the next coefficient.
    pub fn expand(&self, f: &MultiPoly) -> Result<LinComb<IntSequence>> {
        let mut rest = f.clone();
        let mut out = LinComb::new();
        let mut windows: BTreeMap<Monomial, Vec<i64>> = BTreeMap::new();
        while !rest.is_zero() {
            let mut best: Option<(i64, Vec<i64>, Monomial)> = None;
            for e in rest.keys() {
                let w = windows
                    .entry(e.clone())
                    .or_insert_with(|| min_coset_rep(e).expect("exponents are nonnegative").window().to_vec())
                    .clone();
                let deg: i64 = e.iter().sum();
                let better = match &best {
                    None => true,
                    Some((bd, bw, _)) => deg > *bd || (deg == *bd && w < *bw),
                };
                if better {
                    best = Some((deg, w, e.clone()));
                }
            }
            let (_, _, lead) = best.expect("nonzero remainder");
            let v = self
                .vectors
                .get(&lead)
                .ok_or_else(|| domain!("degree of {lead:?} exceeds the basis range {}", self.max_degree))?;
            let coef = rest.coeff(&lead);
            rest.add_scaled(v, &-coef.clone());
            out.add_term(lead, coef);
        }
        Ok(out)
    }

    /// Matrix column of `g` at `v_a`, in the `v`-basis.
    pub fn generator_image(&self, g: &Gen, a: &[i64]) -> Result<LinComb<IntSequence>> {
        let m = PolyModule { params: self.params.clone() };
        let v = self.get(a).ok_or_else(|| domain!("no basis vector for {a:?}"))?;
        let img = algebra::apply_gen(&m, g, v)?;
        self.expand(&img)
    }

    /// True iff every monomial `x^b` of `v_a` satisfies `b ⪯ a`.
    pub fn is_triangular(&self, a: &[i64]) -> Result<bool> {
        let v = self.get(a).ok_or_else(|| domain!("no basis vector for {a:?}"))?;
        for b in v.keys() {
            if compare_order(b, a)? == std::cmp::Ordering::Greater {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The Euler element `Σ x_i y_i + n t/2 − c Σ_{i<j} (i j)` applied to `f`.
pub fn apply_euler(f: &MultiPoly, p: &Params) -> MultiPoly {
    let n = p.n;
    let mut out = f.scaled(&(&p.t * q(n as i64) / q(2)));
    for i in 1..=n {
        out.add_assign(&poly::mul_x(i, &apply_dunkl(i, f, p)));
        for j in i + 1..=n {
            out.add_scaled(&poly::permute(&transposition(n, i, j), f), &-p.c.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;

    fn params(n: usize, t: i64, c: Q) -> Params {
        Params::new(n, q(t), c).unwrap()
    }

    #[test]
    fn dunkl_examples() {
        let p = Params::new(2, frac(7, 3), frac(1, 2)).unwrap();
        assert!(apply_dunkl(1, &poly::constant(2, q(1)), &p).is_zero());
        assert_eq!(apply_dunkl(1, &poly::monomial(&[1, 0]), &p), poly::constant(2, &p.t - &p.c));
        assert_eq!(apply_dunkl(1, &poly::monomial(&[0, 1]), &p), poly::constant(2, p.c.clone()));
    }

    #[test]
    fn closed_form_matches_synthetic_division() {
        let p = params(3, 1, frac(2, 3));
        for e in monomials_up_to(3, 4) {
            let f = poly::monomial(&e);
            for i in 1..=3 {
                assert_eq!(apply_dunkl(i, &f, &p), apply_dunkl_by_division(i, &f, &p).unwrap());
            }
        }
    }

    #[test]
    fn generator_examples() {
        let p = params(3, 1, frac(2, 3));
        let one = poly::constant(3, q(1));
        assert_eq!(apply_tau(&one, &p), poly::monomial(&[1, 0, 0]));
        assert!(apply_u(1, &one, &p).is_zero());
        assert_eq!(apply_u(2, &one, &p), one.scaled(&-p.c.clone()));
    }

    #[test]
    fn flipped_sign_breaks_commutator() {
        let p = params(2, 1, frac(1, 2));
        let flipped = params(2, 1, frac(-1, 2));
        // [y_1, x_1]·1 must be (t − c(12))·1 = t − c.
        let x1 = poly::monomial(&[1, 0]);
        assert_eq!(apply_dunkl(1, &x1, &p), poly::constant(2, &p.t - &p.c));
        assert_ne!(apply_dunkl(1, &x1, &flipped), poly::constant(2, &p.t - &p.c));
    }

    #[test]
    fn small_relation_suites() {
        assert!(verify_relations(&params(2, 1, frac(1, 2)), 3).unwrap().passed());
        assert!(verify_relations(&params(3, 0, q(1)), 2).unwrap().passed());
    }

    #[test]
    fn eigenbasis_examples() {
        let p = params(2, 1, frac(1, 2));
        let b = build_eigenbasis(&p, 3).unwrap();
        assert_eq!(b.get(&[0, 0]).unwrap(), &poly::constant(2, q(1)));
        assert_eq!(b.get(&[1, 0]).unwrap(), &poly::monomial(&[1, 0]));
        // σ_1 τ·1 with weights (1, −1/2) of (1, 0): x_2 − (1/2)/(3/2)·x_1.
        let expected: MultiPoly = [(vec![0, 1], q(1)), (vec![1, 0], frac(-1, 3))].into_iter().collect();
        let p4 = params(2, 1, frac(1, 4));
        assert_ne!(b.get(&[0, 1]).unwrap(), &expected);
        assert_eq!(build_eigenbasis(&p4, 1).unwrap().get(&[0, 1]).unwrap(), &expected);
        let at_half: MultiPoly = [(vec![0, 1], q(1)), (vec![1, 0], q(-1))].into_iter().collect();
        assert_eq!(b.get(&[0, 1]).unwrap(), &at_half);
    }

    #[test]
    fn canonical_predecessors() {
        assert_eq!(canonical_predecessor(&[0, 2, 1]), Some((2, vec![0, 1, 1])));
        assert_eq!(canonical_predecessor(&[0, 0]), None);
    }

    #[test]
    fn expansion_round_trip() {
        let p = params(3, 1, frac(2, 3));
        let b = build_eigenbasis(&p, 3).unwrap();
        let mut f = b.get(&[1, 0, 2]).unwrap().scaled(&q(3));
        f.add_scaled(b.get(&[0, 3, 0]).unwrap(), &frac(-1, 2));
        let coords = b.expand(&f).unwrap();
        assert_eq!(coords.len(), 2);
        assert_eq!(coords.coeff(&vec![1, 0, 2]), q(3));
        assert_eq!(coords.coeff(&vec![0, 3, 0]), frac(-1, 2));
    }
}
