mod common;

use common::{exs, manifest};
use lightframe::connection::{christoffel, Metric};
use lightframe::framed::{normality_tensor, verify_gff_axioms, verify_s_manifold, GffStructure};
use lightframe::linalg::{identity, matmul};
use lightframe::report::Status;
use lightframe::tensor::bracket;
use lightframe::{Chart, RationalExpr};

const EX42: &str = "example-4-2.lm";
const EX41: &str = "example-4-1.lm";

fn rebuild(s: &GffStructure, phi: Option<Vec<Vec<RationalExpr>>>, eta: Option<Vec<Vec<RationalExpr>>>, metric: Option<Metric>) -> GffStructure {
    GffStructure::new(
        phi.unwrap_or_else(|| s.phi_matrix()),
        s.xis().to_vec(),
        eta.unwrap_or_else(|| s.etas().to_vec()),
        s.epsilons().to_vec(),
        metric.unwrap_or_else(|| s.metric().clone()),
    )
    .unwrap()
}

fn status(rep: &lightframe::report::CheckReport, id: &str) -> Status {
    rep.item(id).unwrap_or_else(|| panic!("missing {id}")).status
}

#[test]
fn two_form_of_the_example() {
    let m = manifest(EX42);
    let s = &m.structure;
    let phi = s.fundamental_two_form().as_matrix();
    for i in 0..6 {
        for j in 0..6 {
            assert_eq!(phi[i][j], -&phi[j][i]);
        }
    }
    for a in 0..2 {
        let row: Vec<RationalExpr> = (0..6).map(|j| s.xi(a).iter().zip(&phi).map(|(x, r)| x * &r[j]).sum()).collect();
        assert!(row.iter().all(|c| c.is_zero()));
    }
    assert_eq!(phi[0][2], RationalExpr::from_ratio(-1, 2));
}

#[test]
fn zero_structure_has_zero_two_form() {
    let ch = Chart::from_names("z");
    let s = GffStructure::new(
        vec![vec![RationalExpr::zero()]],
        vec![exs(&["1"], &ch)],
        vec![exs(&["1"], &ch)],
        vec![1],
        Metric::new(ch.clone(), identity(1), 0).unwrap(),
    )
    .unwrap();
    assert!(s.fundamental_two_form().is_zero());
    assert!(normality_tensor(&s).is_zero());
    assert!(verify_gff_axioms(&s).all_passed());
}

#[test]
fn bundled_structures_are_s_manifolds() {
    for name in [EX42, EX41] {
        let m = manifest(name);
        let s = &m.structure;
        assert!(verify_gff_axioms(s).all_passed(), "{name}");
        assert!(verify_s_manifold(s, &christoffel(s.metric())).all_passed(), "{name}");
        assert!(normality_tensor(s).is_zero(), "{name}");
        let f = s.phi_matrix();
        let f3 = matmul(&matmul(&f, &f), &f);
        for (r3, r) in f3.iter().zip(&f) {
            for (a, b) in r3.iter().zip(r) {
                assert_eq!(a, &-b);
            }
        }
        assert!(bracket(s.xi(0), s.xi(1)).iter().all(|c| c.is_zero()));
    }
}

#[test]
fn wrong_form_breaks_compatibility() {
    let m = manifest(EX42);
    let s = &m.structure;
    let mut eta = s.etas().to_vec();
    eta[0] = exs(&["0", "0", "0", "0", "1", "0"], m.chart());
    let bad = rebuild(s, None, Some(eta), None);
    let rep = verify_gff_axioms(&bad);
    assert_eq!(status(&rep, "gff.compatibility"), Status::Fail);
    assert_ne!(rep.item("gff.compatibility").unwrap().witness, "0");
}

#[test]
fn zeroed_block_is_not_normal() {
    let m = manifest(EX42);
    let s = &m.structure;
    let mut f = s.phi_matrix();
    for row in f.iter_mut().skip(4) {
        row[2] = RationalExpr::zero();
        row[3] = RationalExpr::zero();
    }
    let bad = rebuild(s, Some(f), None, None);
    assert!(!normality_tensor(&bad).is_zero());
    let rep = verify_s_manifold(&bad, &christoffel(bad.metric()));
    assert_eq!(status(&rep, "s.normal"), Status::Fail);
}

#[test]
fn euclidean_metric_breaks_the_connection_identity() {
    let m = manifest(EX42);
    let s = &m.structure;
    let flat = Metric::new(m.chart().clone(), identity(6), 0).unwrap();
    let bad = rebuild(s, None, None, Some(flat));
    let rep = verify_s_manifold(&bad, &christoffel(bad.metric()));
    assert_eq!(status(&rep, "s.nabla-phi"), Status::Fail);
    assert!(!rep.all_passed());
}

#[test]
fn structure_shapes_are_checked() {
    let m = manifest(EX42);
    let s = &m.structure;
    let short = vec![s.xi(0).to_vec()];
    assert!(GffStructure::new(s.phi_matrix(), short, s.etas().to_vec(), vec![1, 1], s.metric().clone()).is_err());
    assert!(GffStructure::new(s.phi_matrix(), s.xis().to_vec(), s.etas().to_vec(), vec![1, 2], s.metric().clone()).is_err());
}
