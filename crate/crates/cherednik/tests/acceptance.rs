//! The nine acceptance checks, one PASS/FAIL line each. Exits nonzero if any
//! check fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cherednik::affine_perm::{
    coset_factorization, min_coset_rep, order_chain, AffinePermutation,
};
use cherednik::bgg::BggComplex;
use cherednik::hilb::{
    enum_fhilb, enum_hilb, enum_nonreduced, enum_phillb, gieseker_graded_dim, nonreduced_weights_from_label,
    simple_degree_count,
};
use cherednik::rca_oracle::{verify_relations, Params};
use cherednik::scalar::{binomial, frac, q};
use cherednik::weight_modules::{sl_slice_count, WeightModule};
use cherednik::Q;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn relation_suite() -> Check {
    let start = Instant::now();
    let cases = [(2, 1, frac(1, 2)), (3, 1, frac(2, 3)), (3, 1, frac(5, 7)), (4, 1, frac(3, 4)), (3, 0, q(1))];
    let mut checks = 0;
    for (n, t, c) in cases {
        let p = Params::new(n, q(t), c).map_err(|e| e.to_string())?;
        let report = verify_relations(&p, 5).map_err(|e| e.to_string())?;
        checks += report.checks;
        ensure(report.passed(), || format!("n={n} t={t}: {:?}", report.violations.first()))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("{checks} operator checks in {:.1}s", elapsed.as_secs_f64()))
}

fn eigenbasis_equivalence() -> Check {
    for (m, n) in [(2, 3), (3, 2), (3, 4), (5, 3)] {
        common::eigenbasis_matches_act(m, n, 6)?;
    }
    Ok("all generators agree for ||a|| ≤ 6".into())
}

fn sl_slice() -> Check {
    for (m, n) in [(2i64, 3usize), (3, 2), (3, 4), (4, 3), (5, 2)] {
        let got = sl_slice_count(m, n);
        ensure(got == m.pow(n as u32 - 1) as usize, || format!("(m,n)=({m},{n}): {got}"))?;
    }
    Ok("m^(n−1) in all five cases".into())
}

fn known_examples() -> Check {
    let ideal = enum_hilb(4, 3, 15).map_err(|e| e.to_string())?;
    let s = ideal.iter().find(|s| s.c == [7, 5, 3]).ok_or("staircase (7,5,3) missing")?;
    ensure(s.jordan_composition() == [2, 1], || format!("λ = {:?}", s.jordan_composition()))?;

    let flags = enum_phillb(4, 3, 15).map_err(|e| e.to_string())?;
    let f = flags.iter().find(|f| f.c == [3, 7, 5]).ok_or("flag point (3,7,5) missing")?;
    ensure(f.alpha() == [2, 0, 1], || format!("α = {:?}", f.alpha()))?;

    let tables: [(i64, Vec<Vec<i64>>, Vec<Vec<i64>>); 4] = [
        (0, vec![vec![0, 0, 0]], vec![vec![1, 2, 3]]),
        (1, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]], vec![vec![2, 3, 4], vec![1, 3, 5], vec![1, 2, 6]]),
        (
            2,
            vec![vec![1, 1, 0], vec![1, 0, 1], vec![2, 0, 0], vec![0, 1, 1], vec![0, 2, 0], vec![0, 0, 2]],
            vec![vec![3, 4, 5], vec![2, 4, 6], vec![2, 3, 7], vec![1, 5, 6], vec![1, 3, 8], vec![1, 2, 9]],
        ),
        (
            3,
            vec![
                vec![1, 1, 1],
                vec![2, 1, 0],
                vec![1, 2, 0],
                vec![2, 0, 1],
                vec![1, 0, 2],
                vec![3, 0, 0],
                vec![0, 2, 1],
                vec![0, 1, 2],
                vec![0, 3, 0],
                vec![0, 0, 3],
            ],
            vec![
                vec![4, 5, 6],
                vec![3, 5, 7],
                vec![3, 4, 8],
                vec![2, 6, 7],
                vec![2, 4, 9],
                vec![2, 3, 10],
                vec![1, 6, 8],
                vec![1, 5, 9],
                vec![1, 3, 11],
                vec![1, 2, 12],
            ],
        ),
    ];
    for (k, chain, windows) in tables {
        let got = order_chain(3, k);
        ensure(got == chain, || format!("order chain k={k}: {got:?}"))?;
        for (a, w) in chain.iter().zip(&windows) {
            let rep = min_coset_rep(a).map_err(|e| e.to_string())?;
            ensure(rep.window() == &w[..], || format!("w_{a:?} = {:?}", rep.window()))?;
        }
    }

    let fh = enum_fhilb(3, 4, 6, 15).map_err(|e| e.to_string())?;
    let lab = fh
        .iter()
        .find(|p| p.staircase.c == [7, 5, 3] && p.labels == [4, 2, 4])
        .ok_or("labeled staircase missing")?;
    ensure(lab.gamma() == [0, 1, 0, 2, 0, 0], || format!("γ = {:?}", lab.gamma()))?;

    let w = min_coset_rep(&[0, 2, 0, 0, 1]).map_err(|e| e.to_string())?;
    ensure(w.window() == [1, 3, 4, 10, 12], || format!("w = {:?}", w.window()))?;
    let nu = coset_factorization(&w).map_err(|e| e.to_string())?.nu;
    ensure(nu == [3, 3, 1], || format!("ν = {nu:?}"))?;

    let omega_inv = AffinePermutation::new(vec![0, 4, 3, 6, 2]).map_err(|e| e.to_string())?;
    ensure(omega_inv.is_m_restricted(3), || "ω⁻¹ not 3-restricted".into())?;
    Ok("staircase, flag, order tables, labeling, coset word, restricted ω⁻¹".into())
}

fn phillb_bijection() -> Check {
    for (m, n) in [(2i64, 3i64), (3, 4)] {
        for k in 0..=10 {
            let pts = enum_phillb(m, n, k).map_err(|e| e.to_string())?;
            let expected = simple_degree_count(m, n as usize, k);
            ensure(pts.len() == expected, || format!("(m,n,k)=({m},{n},{k}): {} vs {expected}", pts.len()))?;
            for p in &pts {
                let lhs: Vec<Q> = p.line_bundle_weights(m).into_iter().map(q).collect();
                ensure(lhs == p.weights_from_label(m), || format!("weights differ at c={:?}", p.c))?;
            }
        }
    }
    Ok("counts and line-bundle weights match for k ≤ 10".into())
}

fn bgg_exactness() -> Check {
    for (m, n) in [(2, 3), (3, 2), (3, 4)] {
        let report = BggComplex::new(m, n)
            .and_then(|b| b.exactness_report(8))
            .map_err(|e| e.to_string())?;
        ensure(report.passed(), || format!("(m,n)=({m},{n}) not exact"))?;
    }
    Ok("homology only at Δ(triv), equal to |𝒯_d|, φ∘φ = 0".into())
}

fn mackey() -> Check {
    let p = Params::new(2, q(1), q(2)).map_err(|e| e.to_string())?;
    let mut jordan = 0;
    let mut collisions = 0;
    for k in 0..=10 {
        let spaces = common::generalized_weight_spaces(&p, k);
        let total: usize = spaces.iter().map(|s| s.dim).sum();
        ensure(total == k as usize + 1, || format!("degree {k}: weight spaces span {total}"))?;
        for s in &spaces {
            ensure(s.dim == s.multiplicity, || format!("weight {:?}: dim {} vs {}", s.weight, s.dim, s.multiplicity))?;
            ensure(s.eigen_dim == 1, || format!("weight {:?}: eigenspace dim {}", s.weight, s.eigen_dim))?;
            if s.weight[0] == s.weight[1] {
                ensure(s.dim == 2 && s.nilpotent_square_zero, || format!("weight {:?} not a Jordan block", s.weight))?;
                jordan += 1;
            } else if s.dim > 1 {
                collisions += 1;
            }
        }
    }
    ensure(jordan == 5, || format!("{jordan} Jordan blocks at (d,d), expected d = 0..4"))?;
    Ok(format!(
        "(d,d) generalized spaces are 2-dim nilpotent for d ≤ 4; every eigenspace is 1-dim; \
         {collisions} off-diagonal generalized spaces are also 2-dim (orbit collisions)"
    ))
}

fn gieseker() -> Check {
    let start = Instant::now();
    for (m, n, r) in [(2, 3, 2), (2, 3, 3), (3, 2, 2)] {
        for k in 0..=6 {
            let row = gieseker_graded_dim(m, n, r, k).map_err(|e| e.to_string())?;
            ensure(row.agrees(), || format!("(m,n,r,k)=({m},{n},{r},{k}): {row:?}"))?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(120), || format!("took {elapsed:?}"))?;
    Ok(format!("fixed-point and invariant dimensions agree in {:.1}s", elapsed.as_secs_f64()))
}

fn t0_suite() -> Check {
    for n in 2..=4usize {
        let module = WeightModule::t0_standard(&vec![n][..], q(1)).map_err(|e| e.to_string())?;
        let report = module.verify_relations(5).map_err(|e| e.to_string())?;
        ensure(report.passed(), || format!("n={n}: {:?}", report.violations.first()))?;
    }
    for n in 2..=4usize {
        for k in 0..=8 {
            let pts = enum_nonreduced(n, k).map_err(|e| e.to_string())?;
            let expected = binomial(k as u64 + n as u64 - 1, n as u64 - 1) as usize;
            ensure(pts.len() == expected, || format!("n={n} k={k}: {}", pts.len()))?;
            for p in &pts {
                ensure(p.alpha() == nonreduced_weights_from_label(p), || format!("weights differ at {:?}", p.c))?;
            }
        }
    }
    Ok("t=0 relations for n ≤ 4, nonreduced counts and weights for k ≤ 8".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 9] = [
        ("relation suite", relation_suite),
        ("eigenbasis/oracle equivalence", eigenbasis_equivalence),
        ("sl_n slice dimension", sl_slice),
        ("known examples", known_examples),
        ("fixed-point/basis bijection", phillb_bijection),
        ("BGG exactness", bgg_exactness),
        ("Mackey weight spaces", mackey),
        ("Gieseker identity", gieseker),
        ("t=0 suite", t0_suite),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
