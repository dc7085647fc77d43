use super::*;
use crate::chowctx::{p1_power, pi_source, projective};
use proptest::prelude::*;

fn p(s: &str) -> Polynomial {
    s.parse().unwrap()
}

fn class(ring: &Arc<RingDescriptor>, s: &str) -> ChowClass {
    ring.normal_form(&p(s)).unwrap()
}

fn h(n: u32, i: u32) -> Polynomial {
    hyperplane(&projective(Flavor::T, n), i).unwrap().into_value()
}

fn hs(n: u32, range: std::ops::Range<u32>) -> Polynomial {
    range.map(|i| h(n, i)).product()
}

fn fact(n: u32) -> BigInt {
    factorial(n as usize)
}

#[test]
fn diagonal_examples() {
    let p1 = projective(Flavor::T, 1);
    let p1sq = p1_power(Flavor::T, 2).unwrap();
    assert_eq!(diag_push(&p1.one()).unwrap(), class(&p1sq, "xi_1 + xi_2 - t1 - t2"));
    assert_eq!(
        diag_push(&class(&p1, "xi - t2")).unwrap(),
        p1sq.normal_form(&(p("xi_1 - t2") * p("xi_2 - t2"))).unwrap()
    );
    let expect = p("xi_1 - t1") * p("xi_2 - t1") + p("t1") * p("xi_1 + xi_2 - t1 - t2");
    assert_eq!(diag_push(&class(&p1, "xi")).unwrap(), p1sq.normal_form(&expect).unwrap());
    assert!(diag_push(&p1sq.one()).is_err());
}

#[test]
fn rho_examples() {
    let r2 = p1_power(Flavor::T, 2).unwrap();
    assert_eq!(rho_push(&r2.one()).unwrap().value(), &Polynomial::constant(2));
    let r3 = p1_power(Flavor::T, 3).unwrap();
    assert_eq!(rho_push(&class(&r3, "xi_1 - t1")).unwrap().value(), &h(3, 0).scale(&2.into()));
    let z1z2 = r2.normal_form(&(p("xi_1 - t1") * p("xi_2 - t1"))).unwrap();
    assert_eq!(rho_push(&z1z2).unwrap().value(), &hs(2, 0..2));
}

#[test]
fn partial_diagonal_examples() {
    let one1 = p1_power(Flavor::T, 1).unwrap().one();
    assert_eq!(partial_diag_push(&one1, &[0]).unwrap().value(), &p("xi_1 + xi_2 - t1 - t2"));
    let one2 = p1_power(Flavor::T, 2).unwrap().one();
    let r4 = p1_power(Flavor::T, 4).unwrap();
    let expect = r4
        .normal_form(&(p("xi_1 + xi_2 - t1 - t2") * p("xi_3 + xi_4 - t1 - t2")))
        .unwrap();
    assert_eq!(partial_diag_push(&one2, &[0, 1]).unwrap(), expect);
    let src = p1_power(Flavor::T, 2).unwrap();
    let r3 = p1_power(Flavor::T, 3).unwrap();
    let expect = r3
        .normal_form(&(p("xi_1 + xi_2 - t1 - t2") * p("xi_3 - t1")))
        .unwrap();
    assert_eq!(partial_diag_push(&class(&src, "xi_2 - t1"), &[0]).unwrap(), expect);
    assert!(partial_diag_push(&one2, &[2]).is_err());
    assert!(partial_diag_push(&one2, &[1, 1]).is_err());
}

#[test]
fn alpha_closed_forms() {
    for n in 2..=10u32 {
        let ring = projective(Flavor::T, n);
        let n_i = i64::from(n);
        let a10 = class(&ring, &format!("{}*xi - {}*t1 - {}*t2", 2 * (n_i - 1), n_i * (n_i - 1), n_i * (n_i - 1)));
        assert_eq!(alpha(1, 0, n).unwrap(), a10, "N = {n}");
        let a11 = class(&ring, &format!("xi^2 - t1*xi - t2*xi - {}*t1*t2", n_i * (n_i - 2)));
        assert_eq!(alpha(1, 1, n).unwrap(), a11, "N = {n}");
        let b10 = beta(1, 0, n).unwrap();
        assert_eq!(b10.value(), &ring.normal_form(&hs(n, 0..2)).unwrap().into_value());
        let t1a10 = a10.mul_poly(&p("t1")).unwrap();
        assert_eq!(alpha(1, 1, n).unwrap(), b10.add(&t1a10).unwrap());
    }
    assert_eq!(alpha(1, 0, 6).unwrap().to_gl2().unwrap().value(), &p("10*xi - 30*c1"));
}

#[test]
fn alpha20_closed_form() {
    for n in 4..=9u32 {
        let ring = projective(Flavor::T, n);
        let a10 = alpha(1, 0, n).unwrap().into_value();
        let a20 = alpha(2, 0, n).unwrap();
        let u = p("t1 - t2");
        // before dividing by 2(N-4)!
        let lhs = a20.value().scale(&(fact(n - 4) * 2));
        let rhs = hs(n, 0..2).scale(&(fact(n - 2) * 4))
            + (&u * &h(n, 0)).scale(&(fact(n - 1) * 2))
            + (&u * &a10).scale(&fact(n - 2));
        assert_eq!(&lhs, ring.normal_form(&rhs).unwrap().value(), "N = {n}");
        // after dividing; the leading coefficient is 2(N-2)(N-3)
        let k = i64::from((n - 2) * (n - 3));
        let expect = hs(n, 0..2).scale(&(2 * k).into())
            + (&u * &h(n, 0)).scale(&(i64::from(n - 1) * k).into())
            + (&u * &a10).scale(&(k / 2).into());
        assert_eq!(a20, ring.normal_form(&expect).unwrap(), "N = {n}");
    }
}

#[test]
fn intermediate_identities() {
    for n in 3..=10u32 {
        let ring = projective(Flavor::T, n);
        let a10 = alpha(1, 0, n).unwrap().into_value();
        let lhs = a10.scale(&fact(n - 2));
        let rhs = h(n, 0).scale(&(fact(n - 1) * 2)) + p("t1 - t2").scale(&fact(n));
        assert_eq!(lhs, rhs);
        let c = i64::from((n - 1) * (n - 2));
        let lhs = (h(n, 0) * p("t1 - t2")).scale(&c.into());
        let rhs = &h(n, 0) * &a10 - hs(n, 0..2).scale(&(2 * i64::from(n - 1)).into());
        assert_eq!(ring.normal_form(&lhs).unwrap(), ring.normal_form(&rhs).unwrap());
    }
}

#[test]
fn generators_descend_to_gl2() {
    for n in 2..=8u32 {
        for r in 1..=n / 2 {
            for i in 0..=r {
                let a = alpha(r, i, n).unwrap();
                assert!(a.is_symmetric(), "alpha({r},{i},{n})");
                assert_eq!(a.codim(), r + i);
            }
        }
    }
    // beta_{1,0} = h0 h1 is not symmetric under t1 <-> t2
    assert!(!beta(1, 0, 4).unwrap().is_symmetric());
}

#[test]
fn index_checks() {
    assert!(matches!(alpha(0, 0, 4), Err(Error::IndexOutOfRange { .. })));
    assert!(matches!(alpha(3, 0, 5), Err(Error::IndexOutOfRange { .. })));
    assert!(matches!(alpha(1, 2, 5), Err(Error::IndexOutOfRange { .. })));
    assert!(matches!(beta(2, 2, 5), Err(Error::IndexOutOfRange { .. })));
}

#[test]
fn pi_pullback_examples() {
    let n = 6;
    let ring = projective(Flavor::T, n);
    let c = pi_r_pullback(&class(&ring, "xi"), 2).unwrap();
    assert_eq!(c.value(), &p("2*xi_1 + xi_2"));
    assert_eq!(pi_r_pullback(&class(&ring, "t1"), 2).unwrap().value(), &p("t1"));
    let c = pi_r_pullback(&class(&ring, "xi - 6*t1"), 1).unwrap();
    assert_eq!(c.value(), &p("2*xi_1 + xi_2 - 6*t1"));
    let g = projective(Flavor::GL2, 4);
    assert_eq!(pi_r_pullback(&class(&g, "xi - c1"), 1).unwrap().value(), &p("2*xi_1 + xi_2 - c1"));
}

#[test]
fn gl2_push_matches_torus_push() {
    let src = pi_source(Flavor::GL2, 1, 5).unwrap();
    let c = class(&src, "xi_1*xi_2 - c1*xi_2");
    let pushed = pi_r_push(&c).unwrap();
    assert_eq!(pushed.ring().flavor(), Flavor::GL2);
    assert_eq!(pushed.to_torus().unwrap(), pi_r_push(&c.to_torus().unwrap()).unwrap());
}

#[test]
fn mixed_point_classes() {
    for n in 1..=5u32 {
        let ring = p1_power(Flavor::T, n).unwrap();
        let vars = ring.xi_vars();
        // each factor: 0 = unused, 1 = z, 2 = w
        for code in 0..3u32.pow(n) {
            let mut digits = Vec::new();
            let mut c = code;
            for _ in 0..n {
                digits.push(c % 3);
                c /= 3;
            }
            let a = digits.iter().filter(|&&d| d == 1).count() as u32;
            let b = digits.iter().filter(|&&d| d == 2).count() as u32;
            let lhs: Polynomial = digits
                .iter()
                .zip(&vars)
                .map(|(d, v)| match d {
                    1 => Polynomial::linear(&[(1, *v), (-1, Var::T1)]),
                    2 => Polynomial::linear(&[(1, *v), (-1, Var::T2)]),
                    _ => Polynomial::one(),
                })
                .product();
            let pushed = rho_push(&ring.normal_form(&lhs).unwrap()).unwrap();
            let rhs = (hs(n, 0..a) * hs(n, n + 1 - b..n + 1)).scale(&fact(n - a - b));
            let target = projective(Flavor::T, n);
            assert_eq!(pushed, target.normal_form(&rhs).unwrap(), "N={n} digits={digits:?}");
        }
    }
}

#[test]
fn map_descriptors() {
    assert_eq!(MapDescriptor::rho(4).unwrap().degree, BigInt::from(24));
    assert_eq!(MapDescriptor::pi_r(2, 7).unwrap().degree, BigInt::from(12));
    assert_eq!(MapDescriptor::mu(2, 3).unwrap().degree, BigInt::from(12));
    let d = MapDescriptor::diag();
    let pulled = d.pull(&class(&d.target, "xi_1*xi_2")).unwrap();
    assert_eq!(pulled, class(&d.source, "xi^2"));
    let m = MapDescriptor::mu(1, 2).unwrap();
    let pulled = m.pull(&class(&m.target, "xi_2")).unwrap();
    assert_eq!(pulled.value(), &p("xi_2 + xi_3"));
    let pd = MapDescriptor::partial_diag(2, &[1]).unwrap();
    let pulled = pd.pull(&class(&pd.target, "xi_3")).unwrap();
    assert_eq!(pulled.value(), &p("xi_2"));
    assert!(MapDescriptor::pi_r(3, 5).is_err());
    assert!(d.push(&class(&d.target, "xi_1")).is_err());
}

fn arb_coeffs(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-9i64..10, len)
}

fn build(ring: &Arc<RingDescriptor>, d: u32, cs: &[i64]) -> ChowClass {
    let mut out = Polynomial::zero();
    for (c, m) in cs.iter().zip(ring.basis(d)) {
        out.add_term((*c).into(), m);
    }
    ring.normal_form(&out).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rho_projection_formula(n in 1u32..=4, dx in 0u32..3, dy in 0u32..3, cx in arb_coeffs(40), cy in arb_coeffs(40)) {
        let pn = projective(Flavor::T, n);
        let src = p1_power(Flavor::T, n).unwrap();
        let x = build(&pn, dx, &cx);
        let y = build(&src, dy, &cy);
        let lhs = rho_push(&rho_pullback(&x).unwrap().mul(&y).unwrap()).unwrap();
        let rhs = x.mul(&rho_push(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let back = rho_push(&rho_pullback(&x).unwrap()).unwrap();
        prop_assert_eq!(back, x.scale(&fact(n)));
    }

    #[test]
    fn mu_degree_law(r in 1u32..=2, s in 0u32..=2, d in 0u32..3, cs in arb_coeffs(40)) {
        let m = MapDescriptor::mu(r, s).unwrap();
        let x = build(&m.target, d, &cs);
        prop_assert_eq!(m.push(&m.pull(&x).unwrap()).unwrap(), x.scale(&m.degree));
    }

    #[test]
    fn pi_projection_formula(n in 2u32..=6, r_sel in 0u32..3, dx in 0u32..3, dy in 0u32..3, cx in arb_coeffs(40), cy in arb_coeffs(60)) {
        let r = 1 + r_sel % (n / 2);
        let pn = projective(Flavor::T, n);
        let src = pi_source(Flavor::T, r, n).unwrap();
        let x = build(&pn, dx, &cx);
        let y = build(&src, dy, &cy);
        let lhs = pi_r_push(&pi_r_pullback(&x, r).unwrap().mul(&y).unwrap()).unwrap();
        let rhs = x.mul(&pi_r_push(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
