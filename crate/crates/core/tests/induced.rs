//! The worked example's U and V are the engine's V and U; see `acceptance.rs`.

mod common;

use common::{exs, geometry, manifest};
use lightframe::induced::{
    h_circ, induced_connection, induced_phi, screen_form_c, second_fundamental_b, shape_operators,
    totally_geodesic_report, transversal_tau, umbilicity, InducedGeometry,
};
use lightframe::tensor::{bracket, directional};
use lightframe::RationalExpr;

const EX42: &str = "example-4-2.lm";

struct Fields {
    e: Vec<RationalExpr>,
    xi: Vec<Vec<RationalExpr>>,
    /// `-phi N`
    u: Vec<RationalExpr>,
    /// `-phi E`
    v: Vec<RationalExpr>,
}

fn fields(g: &InducedGeometry) -> Fields {
    let fr = g.frame();
    Fields { e: fr.e_tan.clone(), xi: fr.xi_tan.clone(), u: fr.u_tan.clone(), v: fr.v_tan.clone() }
}

fn zero(v: &[RationalExpr]) -> bool {
    v.iter().all(|c| c.is_zero())
}

fn neg_one() -> RationalExpr {
    RationalExpr::from_int(-1)
}

#[test]
fn second_fundamental_form() {
    let g = geometry(&manifest(EX42));
    let f = fields(&g);
    for xi in &f.xi {
        assert_eq!(second_fundamental_b(&g, &f.u, xi), neg_one());
        assert_eq!(second_fundamental_b(&g, xi, &f.u), neg_one());
    }
    assert!(second_fundamental_b(&g, &f.u, &f.u).is_zero());
    assert!(second_fundamental_b(&g, &f.v, &f.v).is_zero());
    for x in g.basis() {
        assert!(second_fundamental_b(&g, x, &f.e).is_zero());
        for y in g.basis() {
            assert_eq!(second_fundamental_b(&g, x, y), second_fundamental_b(&g, y, x));
        }
    }
}

#[test]
fn rotation_form_vanishes() {
    let g = geometry(&manifest(EX42));
    let f = fields(&g);
    for x in g.basis() {
        assert!(transversal_tau(&g, x).is_zero());
    }
    assert!(zero(&induced_connection(&g, &f.e, &f.e).unwrap()));
}

#[test]
fn screen_form() {
    let g = geometry(&manifest(EX42));
    let f = fields(&g);
    for xi in &f.xi {
        assert_eq!(screen_form_c(&g, &f.v, xi), neg_one());
        assert_eq!(screen_form_c(&g, xi, &f.v), neg_one());
    }
    assert!(screen_form_c(&g, &f.u, &f.u).is_zero());
    assert!(screen_form_c(&g, &f.v, &f.u).is_zero());
    assert!(screen_form_c(&g, &f.e, &f.v).is_zero());
}

#[test]
fn shape_operators_of_the_example() {
    let g = geometry(&manifest(EX42));
    let fr = g.frame();
    let f = fields(&g);
    let uc = fr.u_chart().clone();
    for x in g.basis() {
        let (an, _) = shape_operators(&g, x).unwrap();
        let dn = fr.amb.nabla(x, &fr.n);
        let pushed = fr.push(&an);
        assert!(pushed.iter().zip(&dn).all(|(a, b)| a == &-b));
    }
    let (_, ae) = shape_operators(&g, &f.e).unwrap();
    assert!(zero(&ae));
    let dz = exs(&["0", "0", "0", "0", "1", "1"], &uc);
    assert_eq!(fr.push(&induced_connection(&g, &f.u, &f.e).unwrap()), dz);
    let (_, ae) = shape_operators(&g, &f.u).unwrap();
    assert_eq!(fr.push(&ae), dz.iter().map(|c| -c).collect::<Vec<_>>());
}

#[test]
fn induced_connection_of_the_example() {
    let g = geometry(&manifest(EX42));
    let fr = g.frame();
    let f = fields(&g);
    let expected = exs(&["0", "1", "-1", "0", "u1 + u5", "u1 + u5"], fr.u_chart());
    for xi in &f.xi {
        assert_eq!(fr.push(&induced_connection(&g, xi, &f.e).unwrap()), expected);
    }
    // metric on screen arguments
    let screen = &fr.screen_basis;
    let inner = |a: &[RationalExpr], b: &[RationalExpr]| fr.amb.inner(&fr.push(a), &fr.push(b));
    for x in g.basis() {
        for y in screen {
            for z in screen {
                let d = directional(x, &inner(y, z))
                    - inner(&induced_connection(&g, x, y).unwrap(), z)
                    - inner(y, &induced_connection(&g, x, z).unwrap());
                assert!(d.is_zero());
            }
        }
    }
}

#[test]
fn induced_structure() {
    let g = geometry(&manifest(EX42));
    let fr = g.frame();
    let f = fields(&g);
    let (pu, uu) = induced_phi(&g, &f.u).unwrap();
    assert!(zero(&pu));
    assert!(uu.is_one());
    for xi in &f.xi {
        let (p, u) = induced_phi(&g, xi).unwrap();
        assert!(zero(&p) && u.is_zero());
    }
    for y in &fr.d_basis {
        assert!(induced_phi(&g, y).unwrap().1.is_zero());
    }
}

#[test]
fn not_totally_geodesic_nor_umbilical() {
    let g = geometry(&manifest(EX42));
    let rep = totally_geodesic_report(&g);
    let b = rep.item("geodesic.b-zero").unwrap();
    assert_eq!(b.witness, "-1");
    assert_eq!(rep.item("geodesic.agreement").unwrap().witness, "0");
    let um = umbilicity(&g);
    assert!(um.rho.is_none());
    let w = um.rho_witness.unwrap();
    assert_eq!(w.form, neg_one());
    assert!(w.metric.is_zero());
}

#[test]
fn second_fundamental_form_of_d0() {
    let g = geometry(&manifest(EX42));
    let f = fields(&g);
    for a in &f.xi {
        assert_eq!(h_circ(&g, &f.e, a).unwrap(), f.v);
        for b in &f.xi {
            assert!(zero(&h_circ(&g, a, b).unwrap()));
        }
    }
}

#[test]
fn bracket_oracle_for_d() {
    let g = geometry(&manifest(EX42));
    let fr = g.frame();
    let f = fields(&g);
    let ui = g.index_of("U").unwrap();
    // D = D0 + span{V, E}: closed iff no bracket leaves along U
    let mut closed = true;
    for (i, x) in fr.d_basis.iter().enumerate() {
        for y in &fr.d_basis[i + 1..] {
            let c = g.coordinates(&bracket(x, y)).unwrap();
            closed &= c[ui].is_zero();
        }
    }
    let c = g.coordinates(&bracket(&f.v, &f.xi[0])).unwrap();
    assert!(c[ui].is_zero());
    let item = lightframe::induced::d_report(&g);
    assert_eq!(item.item("d.bracket").unwrap().witness == "0", closed);
    assert_eq!(item.item("d.criterion").unwrap().witness == "0", closed);
}
