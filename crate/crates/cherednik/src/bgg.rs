//! The BGG complex `0 → Δ(μ_{n−1}) → ⋯ → Δ(μ_1) → Δ(μ_0)` at `c = m/n`.
//!
//! `φ_ℓ : Δ(μ_ℓ) → Δ(μ_{ℓ−1})` is fixed on generators by
//! `v(0, T_{i_1<⋯<i_ℓ}) ↦ v(m e_{i_ℓ}, T_{i_1<⋯<i_{ℓ−1}})` and extended by
//! transporting along the canonical `τ`/`σ` word of each label; it raises
//! degree by `m`.

use serde::Serialize;

use crate::error::{domain, internal, Result};
use crate::lincomb::LinComb;
use crate::linalg::sparse_rank;
use crate::scalar::{frac, gcd, q, Q};
use crate::tableau::{hook_shape, Tableau};
use crate::algebra::Gen;
use crate::weight_modules::{
    in_l_basis, transport_along_canonical_word, Label, Letter, ModuleVector, WeightModule,
};

#[derive(Clone, Debug)]
pub struct BggComplex {
    pub m: i64,
    pub n: usize,
    /// `modules[ℓ] = Δ_{m/n}(μ_ℓ)`.
    pub modules: Vec<WeightModule>,
}

/// The leg `i_1 < ⋯ < i_ℓ` of a hook tableau.
pub fn hook_leg(t: &Tableau) -> Vec<usize> {
    t.rows()[1..].iter().map(|r| r[0]).collect()
}

impl BggComplex {
    pub fn new(m: i64, n: usize) -> Result<Self> {
        if n < 2 || m <= 0 || gcd(m, n as i64) != 1 {
            return Err(domain!("BGG complex needs n ≥ 2, m > 0, gcd(m, n) = 1 (m = {m}, n = {n})"));
        }
        let c = frac(m, n as i64);
        let modules = (0..n)
            .map(|l| WeightModule::standard(&hook_shape(n, l), q(1), c.clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(BggComplex { m, n, modules })
    }

    fn check_l(&self, l: usize) -> Result<()> {
        if l == 0 || l >= self.n {
            return Err(domain!("φ_ℓ needs 1 ≤ ℓ ≤ n − 1, got ℓ = {l}"));
        }
        Ok(())
    }

    /// `φ_ℓ(v(0, T))`.
    pub fn generator_image(&self, l: usize, t: &Tableau) -> Result<ModuleVector> {
        self.check_l(l)?;
        let leg = hook_leg(t);
        let (last, rest) = leg.split_last().ok_or_else(|| internal!("empty leg for ℓ = {l}"))?;
        let mut a = vec![0; self.n];
        a[last - 1] = self.m;
        Ok(LinComb::basis(Label::new(a, Tableau::hook(self.n, rest)?)))
    }

    /// `φ_ℓ(v(a, T))`.
    pub fn phi_label(&self, l: usize, b: &Label) -> Result<ModuleVector> {
        self.check_l(l)?;
        if !self.modules[l].contains(b) {
            return Err(domain!("{b:?} is not a label of Δ(μ_{l})"));
        }
        let target = &self.modules[l - 1];
        let base = self.generator_image(l, &b.tableau)?;
        transport_along_canonical_word(&b.a, base, |letter, v| match letter {
            Letter::Tau => target.apply(&Gen::Tau, &v),
            Letter::Sigma(j) => target.apply_sigma(j, &v),
        })
    }

    pub fn phi(&self, l: usize, v: &ModuleVector) -> Result<ModuleVector> {
        v.map_linear(|b| self.phi_label(l, b))
    }

    /// Exactness data for all `ℓ` and degrees `≤ max_degree`.
    pub fn exactness_report(&self, max_degree: i64) -> Result<BggReport> {
        let (m, n) = (self.m, self.n);
        // rank_out[ℓ][d] = rank of φ_ℓ on degree d.
        let mut rank_out = vec![vec![0usize; (max_degree + 1) as usize]; n];
        let mut composite_zero = true;
        for l in 1..n {
            for d in 0..=max_degree {
                let cols = self.modules[l]
                    .basis(d)
                    .iter()
                    .map(|b| self.phi_label(l, b))
                    .collect::<Result<Vec<_>>>()?;
                rank_out[l][d as usize] = sparse_rank(&cols);
                if l >= 2 {
                    for col in &cols {
                        if !self.phi(l - 1, col)?.is_zero() {
                            composite_zero = false;
                        }
                    }
                }
            }
        }
        let mut rows = Vec::new();
        for l in 0..n {
            for d in 0..=max_degree {
                let dim = self.modules[l].basis(d).len();
                let out = rank_out[l][d as usize];
                let inc = if l + 1 < n && d >= m { rank_out[l + 1][(d - m) as usize] } else { 0 };
                let homology = dim as i64 - out as i64 - inc as i64;
                rows.push(BggRow { l, degree: d, dim, rank_out: out, rank_in: inc, homology });
            }
        }
        let simple_dims: Vec<usize> = (0..=max_degree)
            .map(|d| crate::affine_perm::compositions(n, d).iter().filter(|a| in_l_basis(a, m)).count())
            .collect();
        let euler: Vec<i64> = (0..=max_degree)
            .map(|d| {
                (0..n)
                    .filter(|&l| d - l as i64 * m >= 0)
                    .map(|l| {
                        let dim = self.modules[l].basis(d - l as i64 * m).len() as i64;
                        if l % 2 == 0 { dim } else { -dim }
                    })
                    .sum()
            })
            .collect();
        Ok(BggReport { m, n, max_degree, rows, simple_dims, euler, composite_zero })
    }

    /// `(σ_{n−1}⋯σ_1 τ)^m v(0, T')` in `Δ(μ_{ℓ−1})`, the alternate construction
    /// of `φ_ℓ(v(0, T))` for `T = T_{i_1<⋯<i_{ℓ−1}<n}`.
    pub fn alternate_generator_image(&self, l: usize, t_prime: &Tableau) -> Result<ModuleVector> {
        self.check_l(l)?;
        let target = &self.modules[l - 1];
        let mut v = LinComb::basis(Label::new(vec![0; self.n], t_prime.clone()));
        for _ in 0..self.m {
            v = target.apply(&Gen::Tau, &v)?;
            for i in 1..self.n {
                v = target.apply_sigma(i, &v)?;
            }
        }
        Ok(v)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BggRow {
    pub l: usize,
    pub degree: i64,
    pub dim: usize,
    pub rank_out: usize,
    pub rank_in: usize,
    pub homology: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct BggReport {
    pub m: i64,
    pub n: usize,
    pub max_degree: i64,
    pub rows: Vec<BggRow>,
    /// `|𝒯_d|` per degree.
    pub simple_dims: Vec<usize>,
    /// `Σ_ℓ (−1)^ℓ dim Δ(μ_ℓ)_{d − ℓm}` per degree.
    pub euler: Vec<i64>,
    pub composite_zero: bool,
}

impl BggReport {
    /// Homology vanishes away from `ℓ = 0`, equals `|𝒯_d|` there, the Euler
    /// characteristic matches, and `φ∘φ = 0`.
    pub fn passed(&self) -> bool {
        let homology_ok = self.rows.iter().all(|r| {
            if r.l == 0 {
                r.homology == self.simple_dims[r.degree as usize] as i64
            } else {
                r.homology == 0
            }
        });
        let euler_ok = self.euler.iter().zip(&self.simple_dims).all(|(&e, &s)| e == s as i64);
        homology_ok && euler_ok && self.composite_zero
    }
}

/// Whether `u` is a nonzero scalar multiple of `v`; returns the scalar.
pub fn proportional<K: Ord + Clone>(u: &LinComb<K>, v: &LinComb<K>) -> Option<Q> {
    let (k, cv) = v.iter().next()?;
    let s = u.coeff(k) / cv;
    (v.scaled(&s) == *u && !u.is_zero()).then_some(s)
}
