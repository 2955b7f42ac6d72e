//! Relation suites on every module kind.

use cherednik::algebra::{self, eliminate_u_relation_reversed, RepModule};
use cherednik::rca_oracle::{monomials_up_to, verify_relations, Params, PolyModule};
use cherednik::scalar::{frac, q};
use cherednik::weight_modules::WeightModule;
use cherednik::Q;

fn assert_clean(report: cherednik::algebra::RelationReport, what: &str) {
    assert!(
        report.passed(),
        "{what}: {} violations, first: {:?}",
        report.violations.len(),
        report.violations.first()
    );
}

#[test]
fn polynomial_module_small_suites() {
    for (n, t, c) in [(2, q(1), frac(1, 2)), (3, q(0), q(1)), (3, q(1), frac(5, 7))] {
        let p = Params::new(n, t, c).unwrap();
        assert_clean(verify_relations(&p, 3).unwrap(), "poly");
    }
}

#[test]
fn reversed_eliminate_u_fails_for_n_at_least_3() {
    let p = Params::new(3, q(1), frac(2, 3)).unwrap();
    let m = PolyModule { params: p.clone() };
    let rel = eliminate_u_relation_reversed(3, &p.t, &p.c);
    let report = algebra::verify(&m, &[rel], &monomials_up_to(3, 2)).unwrap();
    assert!(!report.passed());
    // For n = 2 both orders coincide.
    let p2 = Params::new(2, q(1), frac(1, 2)).unwrap();
    let m2 = PolyModule { params: p2.clone() };
    let rel2 = eliminate_u_relation_reversed(2, &p2.t, &p2.c);
    assert!(algebra::verify(&m2, &[rel2], &monomials_up_to(2, 3)).unwrap().passed());
}

#[test]
fn standard_triv_relations() {
    for (n, c) in [(2, frac(1, 2)), (3, frac(2, 3)), (4, frac(3, 4))] {
        let m = WeightModule::standard(&vec![n][..], q(1), c).unwrap();
        assert_clean(m.verify_relations(3).unwrap(), "standard triv");
    }
}

#[test]
fn standard_general_shape_relations() {
    for shape in [vec![2, 1], vec![1, 1, 1], vec![2, 2], vec![3, 1], vec![2, 1, 1]] {
        let n: usize = shape.iter().sum();
        let m = WeightModule::standard(&shape, q(1), frac(if n == 4 { 3 } else { 2 }, n as i64)).unwrap();
        assert_clean(m.verify_relations(2).unwrap(), &format!("standard {shape:?}"));
    }
    // Generic parameters away from c = m/n.
    let m = WeightModule::standard(&[2, 1], q(1), frac(3, 11)).unwrap();
    assert_clean(m.verify_relations(3).unwrap(), "standard (2,1) generic");
}

#[test]
fn simple_module_relations() {
    for (m_, n) in [(2, 3), (3, 2), (3, 4)] {
        let m = WeightModule::simple_triv(m_, n).unwrap();
        assert_clean(m.verify_relations(4).unwrap(), "simple triv");
        let r = WeightModule::renormalized_triv(m_, n).unwrap();
        assert_clean(r.verify_relations(4).unwrap(), "renormalized triv");
    }
    for (l, m_, n) in [(1, 2, 3), (1, 3, 4), (2, 3, 4)] {
        let m = WeightModule::simple_hook(l, m_, n).unwrap();
        assert_clean(m.verify_relations(3).unwrap(), "simple hook");
    }
}

#[test]
fn t0_relations() {
    for n in 2..=4usize {
        let m = WeightModule::t0_standard(&vec![n][..], q(1)).unwrap();
        assert_clean(m.verify_relations(3).unwrap(), "t=0 triv");
    }
}

#[test]
fn weight_module_reports_its_parameters() {
    let m = WeightModule::standard(&[3], q(1), frac(2, 3)).unwrap();
    assert_eq!(m.n(), 3);
    assert_eq!(m.c(), &frac(2, 3));
    assert_eq!(m.t(), &Q::from_integer(1.into()));
}
