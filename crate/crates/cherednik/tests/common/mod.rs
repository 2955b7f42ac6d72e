//! Oracles shared by the integration targets.
#![allow(dead_code)]

use std::collections::BTreeMap;

use cherednik::algebra::{self, Gen};
use cherednik::linalg::nullspace;
use cherednik::poly::{self, Monomial};
use cherednik::rca_oracle::{apply_u, build_eigenbasis, Params};
use cherednik::scalar::{frac, q};
use cherednik::weight_modules::{mackey_weight_multiset, Label, WeightModule};
use cherednik::{LinComb, Q};
use num_traits::Zero;

/// Every generator of `H_{1,m/n}` acts by the same matrix on the oracle
/// eigenbasis as on the weight-module labels, for `||a|| ≤ d`.
pub fn eigenbasis_matches_act(m: i64, n: usize, d: i64) -> Result<(), String> {
    let p = Params::new(n, q(1), frac(m, n as i64)).map_err(|e| e.to_string())?;
    let eb = build_eigenbasis(&p, d + 1).map_err(|e| e.to_string())?;
    let module = WeightModule::standard(&[n], q(1), p.c.clone()).map_err(|e| e.to_string())?;
    let mut gens = vec![Gen::Tau, Gen::Lambda];
    for i in 1..=n {
        gens.extend([Gen::U(i), Gen::X(i), Gen::Y(i)]);
    }
    gens.extend((1..n).map(Gen::S));
    for a in eb.vectors.keys().filter(|a| a.iter().sum::<i64>() <= d) {
        for g in &gens {
            let oracle = eb.generator_image(g, a).map_err(|e| e.to_string())?;
            let act = algebra::apply_gen(&module, g, &LinComb::basis(Label::triv(a.clone())))
                .map_err(|e| e.to_string())?;
            let act: LinComb<Vec<i64>> = act.iter().map(|(l, c)| (l.a.clone(), c.clone())).collect();
            if oracle != act {
                return Err(format!("(m,n)=({m},{n}) {g:?} at {a:?}: oracle {oracle:?} vs act {act:?}"));
            }
        }
    }
    Ok(())
}

/// Dense matrix of `u_i` on `C[x]_k` in the monomial basis.
pub fn u_matrix(p: &Params, i: usize, basis: &[Monomial]) -> Vec<Vec<Q>> {
    let index: BTreeMap<&Monomial, usize> = basis.iter().enumerate().map(|(j, e)| (e, j)).collect();
    let mut mat = vec![vec![Q::zero(); basis.len()]; basis.len()];
    for (col, e) in basis.iter().enumerate() {
        for (f, coef) in apply_u(i, &poly::monomial(e), p).iter() {
            mat[index[f]][col] = coef.clone();
        }
    }
    mat
}

pub struct WeightSpace {
    pub weight: Vec<Q>,
    pub multiplicity: usize,
    pub dim: usize,
    /// Dimension of the honest eigenspace.
    pub eigen_dim: usize,
    /// Some `(u_i − w_i)` is nonzero on the space and all square to zero.
    pub nilpotent_square_zero: bool,
    pub semisimple: bool,
}

/// Generalized `u`-weight spaces of `C[x]_k`, one per distinct formal weight.
pub fn generalized_weight_spaces(p: &Params, k: i64) -> Vec<WeightSpace> {
    let n = p.n;
    let basis = poly::monomials_of_degree(n, k);
    let dim = basis.len();
    let mats: Vec<Vec<Vec<Q>>> = (1..=n).map(|i| u_matrix(p, i, &basis)).collect();
    let mut multiset: BTreeMap<Vec<Q>, usize> = BTreeMap::new();
    for w in mackey_weight_multiset(&[n], &p.t, &p.c, k) {
        *multiset.entry(w).or_default() += 1;
    }
    let mut out = Vec::new();
    for (w, mult) in multiset {
        let shifted: Vec<Vec<Vec<Q>>> = mats.iter().zip(&w).map(|(a, wi)| cherednik::linalg::shift(a, wi)).collect();
        let powered: Vec<Vec<Vec<Q>>> = shifted
            .iter()
            .map(|a| {
                let mut acc = cherednik::linalg::identity(dim);
                for _ in 0..dim {
                    acc = cherednik::linalg::mat_mul(&acc, a);
                }
                acc
            })
            .collect();
        let eigen_dim = nullspace(&shifted.iter().flatten().cloned().collect::<Vec<_>>(), dim).len();
        let stacked: Vec<Vec<Q>> = powered.into_iter().flatten().collect();
        let space = nullspace(&stacked, dim);
        let images: Vec<Vec<Vec<Q>>> = shifted
            .iter()
            .map(|a| space.iter().map(|v| cherednik::linalg::mat_vec(a, v)).collect())
            .collect();
        let semisimple = images.iter().flatten().all(|v| v.iter().all(Zero::is_zero));
        let square_zero = shifted.iter().zip(&images).all(|(a, imgs)| {
            imgs.iter().all(|v| cherednik::linalg::mat_vec(a, v).iter().all(Zero::is_zero))
        });
        out.push(WeightSpace {
            weight: w,
            multiplicity: mult,
            dim: space.len(),
            eigen_dim,
            nilpotent_square_zero: !semisimple && square_zero,
            semisimple,
        });
    }
    out
}
