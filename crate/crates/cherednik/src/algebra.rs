//! Words in the generators of `H_{t,c}` and the relation suites.
//!
//! A representation only has to implement the generators it knows natively
//! ([`RepModule::act_primitive`]); everything else is rewritten into those
//! through [`expand`]. Polynomial modules know `x_i, y_i` and permutations,
//! weight-basis modules know `u_i, s_i, τ, λ`.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::affine_perm::{perm_identity, reduced_word, FinitePerm};
use crate::error::{internal, Result};
use crate::lincomb::LinComb;
use crate::scalar::{one, Q};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Gen {
    X(usize),
    Y(usize),
    S(usize),
    Perm(FinitePerm),
    U(usize),
    Tau,
    Lambda,
}

impl fmt::Debug for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::X(i) => write!(f, "x{i}"),
            Gen::Y(i) => write!(f, "y{i}"),
            Gen::S(i) => write!(f, "s{i}"),
            Gen::Perm(g) => write!(f, "{g:?}"),
            Gen::U(i) => write!(f, "u{i}"),
            Gen::Tau => write!(f, "tau"),
            Gen::Lambda => write!(f, "lambda"),
        }
    }
}

/// `Σ coef · word`; a word is read right to left (the last letter acts first).
pub type Expr = Vec<(Q, Vec<Gen>)>;

pub fn word(gens: Vec<Gen>) -> Expr {
    vec![(one(), gens)]
}

pub fn scalar_expr(c: Q) -> Expr {
    vec![(c, Vec::new())]
}

fn concat(mut a: Expr, b: Expr) -> Expr {
    a.extend(b);
    a
}

fn neg(e: Expr) -> Expr {
    e.into_iter().map(|(c, w)| (-c, w)).collect()
}

fn scale(e: Expr, s: &Q) -> Expr {
    e.into_iter().map(|(c, w)| (c * s, w)).collect()
}

/// `a·b`, distributing over both sums.
pub fn product(a: &Expr, b: &Expr) -> Expr {
    let mut out = Vec::new();
    for (ca, wa) in a {
        for (cb, wb) in b {
            let mut w = wa.clone();
            w.extend(wb.iter().cloned());
            out.push((ca * cb, w));
        }
    }
    out
}

pub fn transposition(n: usize, i: usize, j: usize) -> FinitePerm {
    let mut g = perm_identity(n);
    g.swap(i - 1, j - 1);
    g
}

/// The long cycle `(1 2 ⋯ n)`, `i ↦ i + 1`.
pub fn long_cycle(n: usize) -> FinitePerm {
    (1..=n).map(|i| i % n + 1).collect()
}

fn s_range_down(hi: usize, lo: usize) -> Vec<Gen> {
    // s_hi s_{hi−1} ⋯ s_lo (empty when hi < lo).
    if hi < lo {
        return Vec::new();
    }
    (lo..=hi).rev().map(Gen::S).collect()
}

fn s_range_up(lo: usize, hi: usize) -> Vec<Gen> {
    if hi < lo {
        return Vec::new();
    }
    (lo..=hi).map(Gen::S).collect()
}

/// Rewrites a generator in terms of others. Chosen so that each module's
/// primitives terminate the recursion.
pub fn expand(g: &Gen, n: usize, c: &Q) -> Expr {
    match g {
        Gen::X(i) => {
            let mut w = s_range_down(i - 1, 1);
            w.push(Gen::Tau);
            w.extend(s_range_down(n - 1, *i));
            word(w)
        }
        Gen::Y(i) => {
            let mut w = s_range_up(*i, n - 1);
            w.push(Gen::Lambda);
            w.extend(s_range_up(1, i - 1));
            word(w)
        }
        Gen::Perm(p) => word(reduced_word(p).into_iter().map(Gen::S).collect()),
        Gen::S(i) => word(vec![Gen::Perm(transposition(n, *i, i + 1))]),
        Gen::U(i) => {
            let mut e = word(vec![Gen::X(*i), Gen::Y(*i)]);
            for j in 1..*i {
                e.push((-c.clone(), vec![Gen::Perm(transposition(n, j, *i))]));
            }
            e
        }
        Gen::Tau => word(vec![Gen::X(1), Gen::Perm(long_cycle(n))]),
        Gen::Lambda => {
            let inv = crate::affine_perm::perm_inverse(&long_cycle(n));
            word(vec![Gen::Perm(inv), Gen::Y(1)])
        }
    }
}

/// A representation with a distinguished basis indexed by `Label`.
pub trait RepModule: Sync {
    type Label: Ord + Clone + fmt::Debug + Send + Sync;

    fn n(&self) -> usize;
    fn t(&self) -> &Q;
    fn c(&self) -> &Q;

    /// `Some(image)` for natively supported generators, `None` otherwise.
    fn act_primitive(&self, g: &Gen, b: &Self::Label) -> Option<Result<LinComb<Self::Label>>>;
}

const MAX_EXPANSION_DEPTH: usize = 4;

fn act_basis<M: RepModule>(m: &M, g: &Gen, b: &M::Label, depth: usize) -> Result<LinComb<M::Label>> {
    if let Some(r) = m.act_primitive(g, b) {
        return r;
    }
    if depth >= MAX_EXPANSION_DEPTH {
        return Err(internal!("generator {g:?} has no terminating expansion"));
    }
    let e = expand(g, m.n(), m.c());
    apply_expr_depth(m, &e, &LinComb::basis(b.clone()), depth + 1)
}

pub fn apply_gen<M: RepModule>(m: &M, g: &Gen, v: &LinComb<M::Label>) -> Result<LinComb<M::Label>> {
    v.map_linear(|b| act_basis(m, g, b, 0))
}

fn apply_expr_depth<M: RepModule>(
    m: &M,
    e: &Expr,
    v: &LinComb<M::Label>,
    depth: usize,
) -> Result<LinComb<M::Label>> {
    let mut out = LinComb::new();
    for (coef, w) in e {
        let mut cur = v.clone();
        for g in w.iter().rev() {
            if cur.is_zero() {
                break;
            }
            cur = cur.map_linear(|b| act_basis(m, g, b, depth))?;
        }
        out.add_scaled(&cur, coef);
    }
    Ok(out)
}

pub fn apply_expr<M: RepModule>(m: &M, e: &Expr, v: &LinComb<M::Label>) -> Result<LinComb<M::Label>> {
    apply_expr_depth(m, e, v, 0)
}

/// A relation `expr = 0`.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub expr: Expr,
}

fn rel(name: String, lhs: Expr, rhs: Expr) -> Relation {
    Relation { name, expr: concat(lhs, neg(rhs)) }
}

fn g(gs: &[Gen]) -> Expr {
    word(gs.to_vec())
}

/// The defining relations in `x, y` and `S_n`.
pub fn defining_relations(n: usize, t: &Q, c: &Q) -> Vec<Relation> {
    use Gen::*;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(rel(format!("[x{i},x{j}]=0"), g(&[X(i), X(j)]), g(&[X(j), X(i)])));
            out.push(rel(format!("[y{i},y{j}]=0"), g(&[Y(i), Y(j)]), g(&[Y(j), Y(i)])));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let comm = concat(g(&[Y(i), X(j)]), neg(g(&[X(j), Y(i)])));
            if i != j {
                let rhs = scale(g(&[Perm(transposition(n, i, j))]), c);
                out.push(rel(format!("[y{i},x{j}]=c({i}{j})"), comm, rhs));
            } else {
                let mut rhs = scalar_expr(t.clone());
                for k in (1..=n).filter(|&k| k != i) {
                    rhs.push((-c.clone(), vec![Perm(transposition(n, i, k))]));
                }
                out.push(rel(format!("[y{i},x{i}]=t-cΣ({i}j)"), comm, rhs));
            }
        }
    }
    for k in 1..n {
        for i in 1..=n {
            let si = if i == k { k + 1 } else if i == k + 1 { k } else { i };
            out.push(rel(format!("s{k}x{i}=x{si}s{k}"), g(&[S(k), X(i)]), g(&[X(si), S(k)])));
            out.push(rel(format!("s{k}y{i}=y{si}s{k}"), g(&[S(k), Y(i)]), g(&[Y(si), S(k)])));
        }
    }
    out
}

/// Coxeter relations of `S_n` in the simple reflections.
pub fn coxeter_relations(n: usize) -> Vec<Relation> {
    use Gen::*;
    let mut out = Vec::new();
    for i in 1..n {
        out.push(rel(format!("s{i}^2=1"), g(&[S(i), S(i)]), scalar_expr(one())));
        for j in i + 1..n {
            if j == i + 1 {
                out.push(rel(
                    format!("braid s{i}s{j}"),
                    g(&[S(i), S(j), S(i)]),
                    g(&[S(j), S(i), S(j)]),
                ));
            } else {
                out.push(rel(format!("s{i}s{j}=s{j}s{i}"), g(&[S(i), S(j)]), g(&[S(j), S(i)])));
            }
        }
    }
    out
}

/// The relations among `u_i, s_i, τ, λ` (degenerate affine Hecke relations,
/// shift relations and the `λ s_1 τ` relation).
pub fn dunkl_opdam_relations(n: usize, t: &Q, c: &Q) -> Vec<Relation> {
    use Gen::*;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(rel(format!("[u{i},u{j}]=0"), g(&[U(i), U(j)]), g(&[U(j), U(i)])));
        }
    }
    for i in 1..n {
        out.push(rel(
            format!("s{i}u{i}=u{}s{i}+c", i + 1),
            g(&[S(i), U(i)]),
            concat(g(&[U(i + 1), S(i)]), scalar_expr(c.clone())),
        ));
    }
    for j in 1..n {
        for i in (1..=n).filter(|&i| i != j && i != j + 1) {
            out.push(rel(format!("s{j}u{i}=u{i}s{j}"), g(&[S(j), U(i)]), g(&[U(i), S(j)])));
        }
    }
    for i in 1..n {
        out.push(rel(format!("tau u{i}=u{} tau", i + 1), g(&[Tau, U(i)]), g(&[U(i + 1), Tau])));
    }
    out.push(rel(
        format!("tau u{n}=(u1-t)tau"),
        g(&[Tau, U(n)]),
        concat(g(&[U(1), Tau]), vec![(-t.clone(), vec![Tau])]),
    ));
    for i in 2..=n {
        out.push(rel(format!("lambda u{i}=u{} lambda", i - 1), g(&[Lambda, U(i)]), g(&[U(i - 1), Lambda])));
    }
    out.push(rel(
        "lambda u1=(un+t)lambda".into(),
        g(&[Lambda, U(1)]),
        concat(g(&[U(n), Lambda]), vec![(t.clone(), vec![Lambda])]),
    ));
    for i in 2..n {
        out.push(rel(format!("s{i} tau=tau s{}", i - 1), g(&[S(i), Tau]), g(&[Tau, S(i - 1)])));
    }
    out.push(rel("s1 tau^2=tau^2 s(n-1)".into(), g(&[S(1), Tau, Tau]), g(&[Tau, Tau, S(n - 1)])));
    for i in 1..n - 1 {
        out.push(rel(format!("s{i} lambda=lambda s{}", i + 1), g(&[S(i), Lambda]), g(&[Lambda, S(i + 1)])));
    }
    out.push(rel(
        "s(n-1) lambda^2=lambda^2 s1".into(),
        g(&[S(n - 1), Lambda, Lambda]),
        g(&[Lambda, Lambda, S(1)]),
    ));
    out.push(rel("tau lambda=u1".into(), g(&[Tau, Lambda]), g(&[U(1)])));
    out.push(rel(
        "lambda tau=un+t".into(),
        g(&[Lambda, Tau]),
        concat(g(&[U(n)]), scalar_expr(t.clone())),
    ));
    out.push(rel(
        "lambda s1 tau=tau s(n-1) lambda+c".into(),
        g(&[Lambda, S(1), Tau]),
        concat(g(&[Tau, S(n - 1), Lambda]), scalar_expr(c.clone())),
    ));
    out.push(eliminate_u_relation(n, t, c));
    out
}

/// `λτ = t + (s_{n−1}⋯s_1) τλ (s_1⋯s_{n−1}) − c Σ_i s_{n−1}⋯s_i⋯s_{n−1}`,
/// i.e. `u_n + t` with `u_n` rebuilt from `u_1 = τλ`.
pub fn eliminate_u_relation(n: usize, t: &Q, c: &Q) -> Relation {
    let mut conj = s_range_down(n - 1, 1);
    conj.extend([Gen::Tau, Gen::Lambda]);
    conj.extend(s_range_up(1, n - 1));
    let mut rhs = concat(scalar_expr(t.clone()), word(conj));
    for i in 1..n {
        let mut w = s_range_down(n - 1, i);
        w.extend(s_range_up(i + 1, n - 1));
        rhs.push((-c.clone(), w));
    }
    rel("eliminate-u".into(), word(vec![Gen::Lambda, Gen::Tau]), rhs)
}

/// The same relation with the conjugating words in the order
/// `s_1⋯s_{n−1} τλ s_{n−1}⋯s_1` and sum `s_1⋯s_i⋯s_1`. It conjugates `u_1`
/// to `x_2 y_2`-type terms and fails for `n ≥ 3`; kept as a negative control.
pub fn eliminate_u_relation_reversed(n: usize, t: &Q, c: &Q) -> Relation {
    let mut conj = s_range_up(1, n - 1);
    conj.extend([Gen::Tau, Gen::Lambda]);
    conj.extend(s_range_down(n - 1, 1));
    let mut rhs = concat(scalar_expr(t.clone()), word(conj));
    for i in 1..n {
        let mut w = s_range_up(1, i);
        w.extend(s_range_down(i - 1, 1));
        rhs.push((-c.clone(), w));
    }
    rel("eliminate-u (reversed order)".into(), word(vec![Gen::Lambda, Gen::Tau]), rhs)
}

/// Every relation we check: defining, Coxeter and Dunkl–Opdam.
pub fn all_relations(n: usize, t: &Q, c: &Q) -> Vec<Relation> {
    let mut out = defining_relations(n, t, c);
    out.extend(coxeter_relations(n));
    out.extend(dunkl_opdam_relations(n, t, c));
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub relation: String,
    pub witness: String,
    pub residual: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct RelationReport {
    pub relations: usize,
    pub basis_elements: usize,
    pub checks: usize,
    pub violations: Vec<Violation>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Applies each relation to each basis element. Violations are collected, not
/// raised; computation errors (e.g. a vanishing denominator) are.
pub fn verify<M: RepModule>(m: &M, relations: &[Relation], basis: &[M::Label]) -> Result<RelationReport> {
    let pairs: Vec<(usize, usize)> =
        (0..relations.len()).flat_map(|r| (0..basis.len()).map(move |b| (r, b))).collect();
    let results: Vec<Result<Option<Violation>>> = pairs
        .par_iter()
        .map(|&(r, b)| {
            let rel = &relations[r];
            let v = LinComb::basis(basis[b].clone());
            let res = apply_expr(m, &rel.expr, &v)?;
            Ok((!res.is_zero()).then(|| Violation {
                relation: rel.name.clone(),
                witness: format!("{:?}", basis[b]),
                residual: format!("{res:?}"),
            }))
        })
        .collect();
    let mut report = RelationReport {
        relations: relations.len(),
        basis_elements: basis.len(),
        checks: pairs.len(),
        violations: Vec::new(),
    };
    for r in results {
        if let Some(v) = r? {
            report.violations.push(v);
        }
    }
    Ok(report)
}
