//! Sparse multivariate polynomials over `Q`.
//!
//! Monomials are exponent vectors `x^e = x_1^{e_1} ⋯ x_n^{e_n}`; permutations
//! act by `w·x_i = x_{w(i)}`, i.e. on exponents through [`perm_act`].

use num_traits::Zero;

use crate::affine_perm::perm_act;
use crate::error::{internal, Result};
use crate::lincomb::LinComb;
use crate::scalar::{q, Q};

pub type Monomial = Vec<i64>;
pub type MultiPoly = LinComb<Monomial>;

pub fn monomial(e: &[i64]) -> MultiPoly {
    MultiPoly::basis(e.to_vec())
}

pub fn constant(n: usize, c: Q) -> MultiPoly {
    MultiPoly::term(vec![0; n], c)
}

/// Total degree of the highest term, `None` for the zero polynomial.
pub fn degree(f: &MultiPoly) -> Option<i64> {
    f.keys().map(|e| e.iter().sum()).max()
}

pub fn is_homogeneous(f: &MultiPoly) -> bool {
    let mut degs = f.keys().map(|e| e.iter().sum::<i64>());
    match degs.next() {
        None => true,
        Some(d) => degs.all(|x| x == d),
    }
}

/// `x_i · f` (1-based `i`).
pub fn mul_x(i: usize, f: &MultiPoly) -> MultiPoly {
    f.iter()
        .map(|(e, c)| {
            let mut e = e.clone();
            e[i - 1] += 1;
            (e, c.clone())
        })
        .collect()
}

pub fn mul(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let mut out = MultiPoly::new();
    for (e1, c1) in f.iter() {
        for (e2, c2) in g.iter() {
            let e: Monomial = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
            out.add_term(e, c1 * c2);
        }
    }
    out
}

/// `∂f/∂x_i`.
pub fn partial(i: usize, f: &MultiPoly) -> MultiPoly {
    f.iter()
        .filter(|(e, _)| e[i - 1] > 0)
        .map(|(e, c)| {
            let mut e = e.clone();
            let k = e[i - 1];
            e[i - 1] -= 1;
            (e, c * q(k))
        })
        .collect()
}

/// `w·f` for a finite permutation `w`.
pub fn permute(w: &[usize], f: &MultiPoly) -> MultiPoly {
    f.iter().map(|(e, c)| (perm_act(w, e), c.clone())).collect()
}

/// The transposition `(i j)` applied to `f`.
pub fn swap_vars(i: usize, j: usize, f: &MultiPoly) -> MultiPoly {
    f.iter()
        .map(|(e, c)| {
            let mut e = e.clone();
            e.swap(i - 1, j - 1);
            (e, c.clone())
        })
        .collect()
}

/// Exact division `f / (x_i − x_j)` by synthetic division: the term with the
/// largest `x_i`-exponent is always divisible, and each step lowers it.
pub fn divide_by_difference(f: &MultiPoly, i: usize, j: usize) -> Result<MultiPoly> {
    let (i, j) = (i - 1, j - 1);
    let mut rem = f.clone();
    let mut quot = MultiPoly::new();
    loop {
        let lead = rem
            .iter()
            .max_by(|(a, _), (b, _)| a[i].cmp(&b[i]).then_with(|| a.cmp(b)))
            .map(|(e, c)| (e.clone(), c.clone()));
        let Some((e, c)) = lead else { break };
        if e[i] == 0 {
            return Err(internal!("{f:?} is not divisible by x_{} - x_{}", i + 1, j + 1));
        }
        let mut qe = e.clone();
        qe[i] -= 1;
        let mut shifted = qe.clone();
        shifted[j] += 1;
        rem.add_term(e, -c.clone());
        rem.add_term(shifted, c.clone());
        quot.add_term(qe, c);
    }
    Ok(quot)
}

/// `(x^e − (i j)·x^e)/(x_i − x_j)` in closed form (a geometric sum).
pub fn divided_difference_monomial(e: &[i64], i: usize, j: usize) -> MultiPoly {
    let (p, r) = (e[i - 1], e[j - 1]);
    let mut out = MultiPoly::new();
    if p == r {
        return out;
    }
    // x_i^p x_j^r − x_i^r x_j^p = ± x_i^lo x_j^lo (x_hi^d − x_lo^d) with d = |p − r|.
    let (lo, d, sign) = if p > r { (r, p - r, q(1)) } else { (p, r - p, q(-1)) };
    for k in 0..d {
        let mut m = e.to_vec();
        m[i - 1] = lo + d - 1 - k;
        m[j - 1] = lo + k;
        out.add_term(m, sign.clone());
    }
    out
}

/// Evaluates `f` at a rational point.
pub fn evaluate(f: &MultiPoly, point: &[Q]) -> Q {
    let mut total = Q::zero();
    for (e, c) in f.iter() {
        let mut term = c.clone();
        for (x, &k) in point.iter().zip(e) {
            for _ in 0..k {
                term *= x;
            }
        }
        total += term;
    }
    total
}

/// All monomials in `n` variables of total degree `d`.
pub fn monomials_of_degree(n: usize, d: i64) -> Vec<Monomial> {
    crate::affine_perm::compositions(n, d)
}
