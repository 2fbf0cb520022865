//! One test per acceptance criterion, all at zero tolerance.
//!
//! Label note: the worked example names its tangent fields U = -phi E and
//! V = -phi N, while the engine uses U = -phi N and V = -phi E throughout.
//! Tables quoted in the example's labels are mapped with `EX_U` / `EX_V`.

mod common;

use std::cell::Cell;

use common::{ex, exs, frame, geometry, manifest};
use lightframe::cli::run_suite;
use lightframe::connection::{christoffel, fit_space_form_constant, riemann, Metric};
use lightframe::framed::verify_s_manifold;
use lightframe::hypersurface::{
    build_frame, cauchy_binet_delta, characteristic_obstruction, cofactor_minors, induced_metric, jacobian_minors,
    lightlike_test, screen_gram, screen_orthogonal, CharacteristicVerdict, FrameRequest, Immersion,
};
use lightframe::induced::{
    curvature_relations, d0_traces, h_circ, induced_report, pull_curvature, umbilicity, InducedGeometry,
};
use lightframe::linalg::{det, inertia, rank};
use lightframe::report::Status;
use lightframe::scalar::{Monomial, Poly};
use lightframe::tensor::bracket;
use lightframe::{Chart, Error, RationalExpr};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

const EX42: &str = "example-4-2.lm";
const EX41: &str = "example-4-1.lm";
const EX43: &str = "example-4-3.lm";

/// Engine label of the example's U (= -phi E).
const EX_U: &str = "V";
/// Engine label of the example's V (= -phi N).
const EX_V: &str = "U";

fn idx(g: &InducedGeometry, l: &str) -> usize {
    g.index_of(l).unwrap_or_else(|| panic!("no basis field {l}"))
}

fn item_witness(rep: &lightframe::report::CheckReport, id: &str) -> (Status, String) {
    let it = rep.item(id).unwrap_or_else(|| panic!("missing item {id}"));
    (it.status, it.witness.clone())
}

#[test]
fn criterion_01_christoffel_table() {
    let m = manifest(EX42);
    let ch = m.chart().clone();
    // (h, list of (i, j), value), 1-based, transcribed from the published table
    let table: &[(usize, &[(usize, usize)], &str)] = &[
        (3, &[(1, 1)], "4*y1"),
        (3, &[(1, 2), (2, 1)], "-2*y2"),
        (4, &[(1, 2), (2, 1)], "2*y1"),
        (4, &[(2, 2)], "-4*y2"),
        (5, &[(1, 3), (3, 1)], "1/2 + 2*y1^2"),
        (6, &[(1, 3), (3, 1)], "1/2 + 2*y1^2"),
        (1, &[(1, 3), (3, 1)], "-2*y1"),
        (2, &[(1, 4), (4, 1)], "-2*y1"),
        (1, &[(2, 3), (3, 2)], "2*y2"),
        (2, &[(2, 4), (4, 2)], "2*y2"),
        (5, &[(2, 4), (4, 2)], "-1/2 + 2*y2^2"),
        (6, &[(2, 4), (4, 2)], "-1/2 + 2*y2^2"),
        (5, &[(1, 4), (4, 1), (2, 3), (3, 2)], "-2*y1*y2"),
        (6, &[(1, 4), (4, 1), (2, 3), (3, 2)], "-2*y1*y2"),
        (3, &[(1, 5), (5, 1), (1, 6), (6, 1)], "1"),
        (4, &[(2, 5), (5, 2), (2, 6), (6, 2)], "1"),
        (5, &[(3, 5), (5, 3), (3, 6), (6, 3)], "y1"),
        (6, &[(3, 5), (5, 3), (3, 6), (6, 3)], "y1"),
        (2, &[(4, 5), (5, 4), (4, 6), (6, 4)], "-1"),
        (1, &[(3, 5), (5, 3), (3, 6), (6, 3)], "-1"),
        (5, &[(4, 5), (5, 4), (4, 6), (6, 4)], "-y2"),
        (6, &[(4, 5), (5, 4), (4, 6), (6, 4)], "-y2"),
    ];
    let mut want = vec![vec![vec![RationalExpr::zero(); 6]; 6]; 6];
    for (h, pairs, v) in table {
        for (i, j) in *pairs {
            want[h - 1][i - 1][j - 1] = ex(v, &ch);
        }
    }
    let c = christoffel(m.structure.metric());
    let mut checked = 0;
    for h in 0..6 {
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(
                    c.gamma(h, i, j),
                    &want[h][i][j],
                    "Gamma^{}_{}{} = {}",
                    h + 1,
                    i + 1,
                    j + 1,
                    c.gamma(h, i, j).to_text(&ch)
                );
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 216);
}

#[test]
fn criterion_02_s_manifold_certification() {
    for name in [EX42, EX41] {
        let m = manifest(name);
        let s = &m.structure;
        let rep = verify_s_manifold(s, &christoffel(s.metric()));
        let mut ids = vec!["s.normal".to_string(), "s.nabla-phi".to_string()];
        for a in 1..=s.r() {
            ids.push(format!("s.d-eta[{a}]"));
            ids.push(format!("s.nabla-xi[{a}]"));
        }
        for id in &ids {
            assert_eq!(item_witness(&rep, id), (Status::Pass, "0".to_string()), "{name}: {id}");
        }
        assert!(rep.all_passed(), "{name}: {:?}", rep.failures().collect::<Vec<_>>());
    }
    let eps: Vec<i64> = manifest(EX41).structure.epsilons().to_vec();
    assert_eq!(eps, vec![-1, -1]);
}

#[test]
fn criterion_03_lightlike_by_two_routes() {
    let m = manifest(EX42);
    let ch = m.chart().clone();
    let f = &m.hypersurface.as_ref().unwrap().immersion;
    let v = lightlike_test(f, m.structure.metric()).expect("routes agree");
    assert!(v.lightlike);
    assert!(v.delta.is_zero());
    assert!(v.delta_cauchy_binet.is_zero());
    let direct = det(&induced_metric(f, m.structure.metric()).unwrap().as_matrix());
    assert!(direct.is_zero());
    assert!(cauchy_binet_delta(f, m.structure.metric()).unwrap().is_zero());
    let uc = f.u_chart().clone();
    assert_eq!(jacobian_minors(f), exs(&["1", "0", "0", "1", "0", "0"], &uc));
    // the published non-zero minors; every other M_AB vanishes
    let listed: &[(&[(usize, usize)], &str)] = &[
        (&[(1, 1), (3, 3)], "-1/8"),
        (&[(2, 2), (4, 4)], "1/8"),
        (&[(5, 5), (6, 6)], "1/16 + y2^2/8 - y1^2/8"),
        (&[(1, 5), (5, 1)], "y1/8"),
        (&[(1, 6), (6, 1)], "-y1/8"),
        (&[(2, 5), (5, 2)], "-y2/8"),
        (&[(2, 6), (6, 2)], "y2/8"),
        (&[(5, 6), (6, 5)], "y1^2/8 - y2^2/8"),
    ];
    let mut want = vec![vec![RationalExpr::zero(); 6]; 6];
    for (pairs, v) in listed {
        for (a, b) in *pairs {
            want[a - 1][b - 1] = ex(v, &ch);
        }
    }
    let got = cofactor_minors(&m.structure.metric().matrix());
    for a in 0..6 {
        for b in 0..6 {
            assert_eq!(got[a][b], want[a][b], "M_{}{} = {}", a + 1, b + 1, got[a][b].to_text(&ch));
        }
    }
}

#[test]
fn criterion_04_frame_reproduction() {
    let m = manifest(EX42);
    let ch = m.chart().clone();
    let fr = frame(&m);
    let f = fr.f();
    let along = |v: &[&str]| f.compose_vec(&exs(v, &ch)).unwrap();
    let e = along(&["-1", "0", "0", "-1", "y1", "y1"]);
    let z = along(&["1", "0", "0", "0", "-y1", "-y1"]);
    let n = along(&["1", "0", "0", "-1", "-y1", "-y1"]);
    let phi_e = along(&["0", "-1", "1", "0", "-y2", "-y2"]);
    let phi_n = along(&["0", "-1", "-1", "0", "-y2", "-y2"]);
    assert_eq!(fr.e, e);
    assert_eq!(fr.z, z);
    let g = |x: &[RationalExpr], y: &[RationalExpr]| fr.amb.inner(x, y);
    assert_eq!(g(&z, &e), RationalExpr::from_ratio(1, 2));
    assert_eq!(fr.n, n);
    // radical and transversal contract
    for col in 0..f.u_chart().dim() {
        let mut a = vec![RationalExpr::zero(); f.u_chart().dim()];
        a[col] = RationalExpr::one();
        assert!(g(&e, &f.push(&a)).is_zero());
    }
    assert!(g(&e, &e).is_zero());
    assert!(g(&n, &e).is_one());
    assert!(g(&n, &n).is_zero());
    for w in &fr.screen_basis {
        assert!(g(&n, &fr.push(w)).is_zero());
    }
    assert_eq!(fr.phi_e, phi_e);
    assert_eq!(fr.phi_n, phi_n);
    assert!(f.resolve(&phi_e).is_some());
    assert!(f.resolve(&phi_n).is_some());
    let (_, neg, zero) = inertia(&screen_gram(&fr)).expect("constant screen Gram matrix");
    assert_eq!((neg, zero), (1, 0));
    let perp = screen_orthogonal(&fr);
    let expected = vec![along(&["1", "0", "0", "0", "-y1", "-y1"]), along(&["0", "0", "0", "1", "0", "0"])];
    assert_eq!(perp.len(), 2);
    let mut both = perp.clone();
    both.extend(expected.clone());
    assert_eq!(rank(&perp), 2);
    assert_eq!(rank(&expected), 2);
    assert_eq!(rank(&both), 2, "spans differ");
    let rep = run_suite(&m, "frame").unwrap();
    assert!(rep.all_passed());
}

#[test]
fn criterion_05_induced_tables() {
    let m = manifest(EX42);
    let g = geometry(&m);
    let labels: Vec<String> = g.labels().to_vec();
    assert_eq!(labels, ["E", "xi1", "xi2", "U", "V"]);
    let xs = ["xi1", "xi2"];
    let mut b_want = std::collections::HashMap::new();
    for x in xs {
        b_want.insert((EX_V, x), -1);
        b_want.insert((x, EX_V), -1);
    }
    for (i, a) in labels.iter().enumerate() {
        for (j, b) in labels.iter().enumerate() {
            let want = b_want.get(&(a.as_str(), b.as_str())).copied().unwrap_or(0);
            assert_eq!(g.b(i, j), &RationalExpr::from_int(want), "B({a}, {b})");
        }
        assert!(g.tau(i).is_zero(), "tau({a})");
    }
    assert!(g.b(idx(&g, EX_U), idx(&g, EX_U)).is_zero());
    assert!(g.b(idx(&g, EX_V), idx(&g, EX_V)).is_zero());
    // C(X, PY) for Y in the screen {xi1, xi2, U, V}
    let mut c_want = std::collections::HashMap::new();
    for x in xs {
        c_want.insert((EX_U, x), -1);
        c_want.insert((x, EX_U), -1);
    }
    for (i, a) in labels.iter().enumerate() {
        for (j, b) in labels.iter().enumerate().skip(1) {
            let want = c_want.get(&(a.as_str(), b.as_str())).copied().unwrap_or(0);
            assert_eq!(g.c(i, j), &RationalExpr::from_int(want), "C({a}, {b})");
        }
    }
}

#[test]
fn criterion_06_induced_structure_identities() {
    let m = manifest(EX42);
    let g = geometry(&m);
    let rep = induced_report(&g);
    for id in [
        "induced.phi-squared",
        "induced.phi-u",
        "induced.u-u",
        "induced.u-phi",
        "induced.eta-phi",
        "induced.nabla-phi",
        "induced.nabla-u",
    ] {
        assert_eq!(item_witness(&rep, id), (Status::Pass, "0".to_string()), "{id}");
    }
    // the two derivative identities, recomputed pair by pair
    let k = g.basis().len();
    assert_eq!(k * k, 25);
    let fr = g.frame();
    let u_vec = fr.u_tan.clone();
    let xi_bar: Vec<RationalExpr> = fr.xi_tan.iter().fold(vec![RationalExpr::zero(); u_vec.len()], |acc, x| {
        acc.iter().zip(x).map(|(a, b)| a + b).collect()
    });
    let phi_of = |v: &[RationalExpr]| lightframe::induced::induced_phi(&g, v).unwrap();
    let nab = |x: &[RationalExpr], y: &[RationalExpr]| lightframe::induced::induced_connection(&g, x, y).unwrap();
    let b_of = |x: &[RationalExpr], y: &[RationalExpr]| lightframe::induced::second_fundamental_b(&g, x, y);
    let tau_of = |x: &[RationalExpr]| lightframe::induced::transversal_tau(&g, x);
    let s = &m.structure;
    for (i, x) in g.basis().iter().enumerate() {
        let (an, _) = lightframe::induced::shape_operators(&g, x).unwrap();
        for (j, y) in g.basis().iter().enumerate() {
            let (phi_y, u_y) = phi_of(y);
            let (phi_nab, u_nab) = phi_of(&nab(x, y));
            let lhs: Vec<RationalExpr> = nab(x, &phi_y).iter().zip(&phi_nab).map(|(a, b)| a - b).collect();
            let gpp = fr.amb.inner(&fr.amb.phi(&fr.push(x)), &fr.amb.phi(&fr.push(y)));
            let eta_bar_y: RationalExpr = (0..s.r()).map(|a| fr.amb.eta_of(a, &fr.push(y)) * RationalExpr::from_int(s.epsilon(a))).sum();
            // ambient phi^2 X = -X + eta^a(X) xi_a, tangent for tangent X
            let phi2x: Vec<RationalExpr> = (0..x.len())
                .map(|c| -&x[c] + (0..s.r()).map(|a| fr.amb.eta_of(a, &fr.push(x)) * &fr.xi_tan[a][c]).sum::<RationalExpr>())
                .collect();
            let bxy = b_of(x, y);
            let rhs: Vec<RationalExpr> = (0..lhs.len())
                .map(|c| &u_y * &an[c] - &bxy * &u_vec[c] + &gpp * &xi_bar[c] + &eta_bar_y * &phi2x[c])
                .collect();
            assert_eq!(lhs, rhs, "(nabla phi) on ({}, {})", g.labels()[i], g.labels()[j]);
            let lhs_u = lightframe::tensor::directional(x, &u_y) - &u_nab;
            let rhs_u = -b_of(x, &phi_y) - &u_y * &tau_of(x);
            assert_eq!(lhs_u, rhs_u, "(nabla u) on ({}, {})", g.labels()[i], g.labels()[j]);
        }
    }
}

#[test]
fn criterion_07_distributions() {
    let m = manifest(EX42);
    let g = geometry(&m);
    let rep = run_suite(&m, "distributions").unwrap();
    for id in ["d0.c-symmetric", "d0.c-phi", "d0.b-phi", "d0.criterion", "d0.bracket", "d0.agreement"] {
        assert_eq!(item_witness(&rep, id), (Status::Pass, "0".to_string()), "{id}");
    }
    assert_eq!(g.frame().d0_labels(), ["xi1", "xi2"]);
    let e = &g.basis()[0];
    let v = g.basis()[idx(&g, "V")].clone(); // -phi E
    let zero = vec![RationalExpr::zero(); v.len()];
    for a in ["xi1", "xi2"] {
        let xa = &g.basis()[idx(&g, a)];
        assert_eq!(h_circ(&g, e, xa).unwrap(), v, "h(E, {a}) = -phi E");
        for b in ["xi1", "xi2"] {
            assert_eq!(h_circ(&g, xa, &g.basis()[idx(&g, b)]).unwrap(), zero, "h({a}, {b})");
        }
    }
    let (tr_h, tr_b) = d0_traces(&g).unwrap();
    assert_eq!(tr_h, zero);
    assert!(tr_b.is_zero());
    for id in ["d0.trace-h", "d0.trace-h-tilde", "d0.mean-curvature"] {
        assert_eq!(item_witness(&rep, id), (Status::Pass, "0".to_string()), "{id}");
    }
    // condition (b) of the D integrability criterion is expected to fail with
    // B(xi_a, V) = -1, and the bracket oracle must agree with the criterion
    assert_eq!(item_witness(&rep, "d.agreement"), (Status::Pass, "0".to_string()));
    let cond_b = rep.item("d.cond-b").expect("d.cond-b");
    assert!(cond_b.detail.starts_with("violated"), "d.cond-b: {} ({})", cond_b.witness, cond_b.detail);
    assert_eq!(cond_b.witness, "-1");
}

#[test]
fn criterion_08_curvature_relations() {
    let m = manifest(EX42);
    let g = geometry(&m);
    let rbar = riemann(&christoffel(m.structure.metric()), m.structure.metric());
    let pulled = pull_curvature(&g, &rbar).unwrap();
    let mut triples = 0;
    for x in g.basis() {
        for y in g.basis() {
            for z in g.basis() {
                let rep = curvature_relations(&g, &pulled, x, y, z);
                assert_eq!(item_witness(&rep, "curvature.e-relation"), (Status::Pass, "0".to_string()));
                assert_eq!(item_witness(&rep, "curvature.n-relation"), (Status::Pass, "0".to_string()));
                triples += 1;
            }
        }
    }
    assert_eq!(triples, 125);
    assert_eq!(fit_space_form_constant(&rbar, &m.structure), Some(BigRational::from_integer(BigInt::from(-6))));
}

#[test]
fn criterion_09_not_umbilical() {
    let m = manifest(EX42);
    let g = geometry(&m);
    let u = umbilicity(&g);
    assert!(u.rho.is_none());
    let w = u.rho_witness.expect("a witness pair");
    let mut pair = [w.x.as_str(), w.y.as_str()];
    pair.sort();
    let mut want = [EX_V, "xi1"];
    want.sort();
    assert_eq!(pair, want);
    assert_eq!(w.form, RationalExpr::from_int(-1));
    assert!(w.metric.is_zero());
    // not totally geodesic either
    assert!(g.basis().iter().enumerate().any(|(i, _)| (0..g.basis().len()).any(|j| !g.b(i, j).is_zero())));
}

#[test]
fn criterion_10_negative_results() {
    let m = manifest(EX41);
    match characteristic_obstruction(&m.structure) {
        CharacteristicVerdict::NonExistent { form, symbols } => {
            assert_eq!(form, ex("D1^2/8 + D2^2/8 + D3^2/8 + D4^2/8", &symbols));
        }
        other => panic!("expected non-existence, got {other:?}"),
    }
    let rep = run_suite(&m, "lightlike").unwrap();
    assert_eq!(rep.item("lightlike.characteristic-request").unwrap().status, Status::Fail);

    let m = manifest(EX43);
    let h = m.hypersurface.as_ref().unwrap();
    let c = christoffel(m.structure.metric());
    let req = FrameRequest { e: h.e.clone(), z: h.z.clone() };
    match build_frame(&h.immersion, &m.structure, &c, &req) {
        Err(Error::DimensionObstruction { n, .. }) => assert_eq!(n, 1),
        other => panic!("expected a dimension obstruction, got {:?}", other.map(|_| ())),
    }
    let rep = run_suite(&m, "frame").unwrap();
    let it = rep.item("frame.dimension").unwrap();
    assert_eq!(it.status, Status::Fail);
    assert!(it.detail.contains("dimension obstruction"));
}

// randomized inputs for the property criterion

fn small_poly(vars: usize, max_deg: u32) -> impl Strategy<Value = RationalExpr> {
    let term = (prop::collection::vec(0..=max_deg, vars), -4i64..=4, 1i64..=3);
    prop::collection::vec(term, 0..4).prop_map(move |ts| {
        let p = Poly::from_terms(ts.into_iter().filter(|(e, _, _)| e.iter().sum::<u32>() <= max_deg).map(|(e, n, d)| {
            (Monomial::from_exponents(e), BigRational::new(BigInt::from(n), BigInt::from(d)))
        }));
        RationalExpr::from_poly(p)
    })
}

fn small_rational(vars: usize) -> impl Strategy<Value = RationalExpr> {
    (small_poly(vars, 2), small_poly(vars, 1)).prop_map(|(n, d)| {
        let d = d + RationalExpr::one();
        if d.is_zero() {
            n
        } else {
            n.try_div(&d).unwrap()
        }
    })
}

/// A metric from a random symmetric matrix, or `None` when it is degenerate.
fn metric_of(ch: Chart, g: Vec<Vec<RationalExpr>>) -> Option<Metric> {
    let index = match inertia(&g) {
        Some((_, _, z)) if z > 0 => return None,
        Some((_, neg, _)) => neg,
        None => 0,
    };
    Metric::new(ch, g, index).ok()
}

/// Seeded so that every run draws the same inputs.
fn runner(cases: u32) -> TestRunner {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

#[test]
fn criterion_11_property_suites() {
    let ring = Cell::new(0u32);
    runner(128)
        .run(&(small_rational(3), small_rational(3), small_rational(3)), |(a, b, c)| {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            if !b.is_zero() {
                prop_assert_eq!(a.try_div(&b).unwrap() * &b, a.clone());
            }
            ring.set(ring.get() + 1);
            Ok(())
        })
        .unwrap();
    assert!(ring.get() >= 100);

    let leibniz = Cell::new(0u32);
    runner(128)
        .run(&(small_rational(3), small_rational(3), 0usize..3), |(a, b, v)| {
            let lhs = (&a * &b).differentiate(v);
            let rhs = &a.differentiate(v) * &b + &a * &b.differentiate(v);
            prop_assert_eq!(lhs, rhs);
            leibniz.set(leibniz.get() + 1);
            Ok(())
        })
        .unwrap();
    assert!(leibniz.get() >= 100);

    let jacobi = Cell::new(0u32);
    let field = || prop::collection::vec(small_poly(3, 2), 3);
    runner(128)
        .run(&(field(), field(), field()), |(x, y, z)| {
            let t1 = bracket(&x, &bracket(&y, &z));
            let t2 = bracket(&y, &bracket(&z, &x));
            let t3 = bracket(&z, &bracket(&x, &y));
            for k in 0..3 {
                prop_assert!((&t1[k] + &t2[k] + &t3[k]).is_zero());
            }
            jacobi.set(jacobi.get() + 1);
            Ok(())
        })
        .unwrap();
    assert!(jacobi.get() >= 100);

    let bianchi = Cell::new(0u32);
    let diag = prop::collection::vec(prop_oneof![Just(1i64), Just(-1), Just(2)], 3);
    runner(100)
        .run(&(diag, small_poly(3, 1), small_poly(3, 1), small_poly(3, 1)), |(d, p, q, r)| {
            let ch = Chart::from_names("a b c");
            let mut g = vec![vec![RationalExpr::zero(); 3]; 3];
            for i in 0..3 {
                g[i][i] = RationalExpr::from_int(d[i]);
            }
            g[0][0] = &g[0][0] + &(&p * &p);
            g[0][1] = q.clone();
            g[1][0] = q;
            g[2][2] = &g[2][2] + &r;
            let met = metric_of(ch, g);
            prop_assume!(met.is_some());
            let met = met.unwrap();
            let rm = riemann(&christoffel(&met), &met);
            for a in 0..3 {
                for b in 0..3 {
                    for c in 0..3 {
                        for e in 0..3 {
                            let s = rm.component(a, b, c, e) + rm.component(b, c, a, e) + rm.component(c, a, b, e);
                            prop_assert!(s.is_zero());
                        }
                    }
                }
            }
            bianchi.set(bianchi.get() + 1);
            Ok(())
        })
        .unwrap();
    assert!(bianchi.get() >= 100);

    let determinants = Cell::new(0u32);
    let immersion = (2usize..=5).prop_flat_map(|m| {
        (
            Just(m),
            prop::collection::vec(small_poly(m - 1, 2), m),
            prop::collection::vec(-3i64..=3, m * (m + 1) / 2),
            small_poly(m, 1),
        )
    });
    runner(64)
        .run(&immersion, |(m, comps, consts, wobble)| {
            let names: Vec<String> = (1..=m).map(|i| format!("x{i}")).collect();
            let x = Chart::new(&names).unwrap();
            let un: Vec<String> = (1..m).map(|i| format!("u{i}")).collect();
            let u = Chart::new(&un).unwrap();
            // a generic point-dependent metric
            let mut g = vec![vec![RationalExpr::zero(); m]; m];
            let mut k = 0;
            for i in 0..m {
                for j in i..m {
                    let v = RationalExpr::from_int(consts[k]);
                    g[i][j] = v.clone();
                    g[j][i] = v;
                    k += 1;
                }
            }
            g[0][0] = &g[0][0] + &wobble;
            let met = metric_of(x.clone(), g);
            prop_assume!(met.is_some());
            let met = met.unwrap();
            let mut comps = comps;
            // add a generic linear part so the map stays an immersion
            for (i, c) in comps.iter_mut().enumerate().take(m - 1) {
                *c = &*c + &RationalExpr::var(i);
            }
            let f = Immersion::new(u, x, comps);
            prop_assume!(f.is_ok());
            let f = f.unwrap();
            let direct = det(&induced_metric(&f, &met).unwrap().as_matrix());
            let cb = cauchy_binet_delta(&f, &met).unwrap();
            prop_assert_eq!(direct, cb);
            determinants.set(determinants.get() + 1);
            Ok(())
        })
        .unwrap();
    assert!(determinants.get() >= 50, "only {} usable immersions", determinants.get());
}
