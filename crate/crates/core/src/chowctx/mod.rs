//! Equivariant Chow rings of projective spaces of binary forms and their
//! products, as explicit quotient rings with normal forms.

mod class;
mod ring;

use std::sync::Arc;

pub use class::ChowClass;
pub use ring::{coordinate_weight, make_ring, Factor, Flavor, RingDescriptor};

use crate::error::{Error, Result};
use crate::polyring::Polynomial;

/// Reduced representative of `p` in `ring`.
pub fn normal_form(ring: &Arc<RingDescriptor>, p: &Polynomial) -> Result<ChowClass> {
    ring.normal_form(p)
}

/// `h_i = xi - (N-i) t1 - i t2` on `P^N` (the first factor of `ring`).
pub fn hyperplane(ring: &Arc<RingDescriptor>, i: u32) -> Result<ChowClass> {
    ring.hyperplane_on(0, i)
}

/// `h_{i,r} = xi_{r,1} - (r-i) t1 - i t2` on the first factor of
/// `P^r x P^(N-2r)`.
pub fn hyperplane_r(ring: &Arc<RingDescriptor>, r: u32, i: u32) -> Result<ChowClass> {
    match ring.factors() {
        [Factor::Projective(n), Factor::Projective(_)] if *n == r => ring.hyperplane_on(0, i),
        _ => Err(Error::WrongRing {
            expected: format!("A_T(P^{r} x P^m)"),
            found: ring.to_string(),
        }),
    }
}

/// The Chern relation `prod_{i=0}^{N} h_i` of `P^N`, written over
/// `Z[c1, c2][xi]`.
pub fn chern_relation(n: u32) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::InvalidParameter("chern_relation needs N >= 1".into()));
    }
    let ring = make_ring(Flavor::GL2, &[Factor::Projective(n)])?;
    Ok(ring.relations()[0].clone())
}

/// `A_T(P^N)`.
pub fn projective(flavor: Flavor, n: u32) -> Arc<RingDescriptor> {
    make_ring(flavor, &[Factor::Projective(n)]).expect("valid factor")
}

/// `A_T((P^1)^k)`.
pub fn p1_power(flavor: Flavor, k: u32) -> Result<Arc<RingDescriptor>> {
    make_ring(flavor, &[Factor::P1Power(k)])
}

/// `A_T(P^r x P^(N-2r))`, the source of the map `(f, g) -> f^2 g`.
pub fn pi_source(flavor: Flavor, r: u32, n: u32) -> Result<Arc<RingDescriptor>> {
    if r == 0 || 2 * r > n {
        return Err(Error::IndexOutOfRange {
            what: "r",
            index: r.into(),
            lo: 1,
            hi: (n / 2).into(),
        });
    }
    make_ring(flavor, &[Factor::Projective(r), Factor::Projective(n - 2 * r)])
}

/// The point ring `Z[t1,t2]` or `Z[c1,c2]`.
pub fn point(flavor: Flavor) -> Arc<RingDescriptor> {
    make_ring(flavor, &[Factor::Point]).expect("valid factor")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{symmetric_rewrite, to_torus, Var};
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn projective_line_relation() {
        let r = make_ring(Flavor::T, &[Factor::Projective(1)]).unwrap();
        // h0 h1 with h_i = xi - (1-i) t1 - i t2
        assert_eq!(*r.relations()[0], p("xi - t1") * p("xi - t2"));
    }

    #[test]
    fn p1_power_has_one_relation_per_factor() {
        let r = make_ring(Flavor::T, &[Factor::P1Power(2)]).unwrap();
        let rels: Vec<String> = r.relations().iter().map(|q| q.to_string()).collect();
        assert_eq!(
            rels,
            vec![
                (p("xi_1 - t1") * p("xi_1 - t2")).to_string(),
                (p("xi_2 - t1") * p("xi_2 - t2")).to_string()
            ]
        );
    }

    #[test]
    fn gl2_relation_of_p2() {
        // e1 = 3c1, e2 = 2c1^2 + 4c2, e3 = 4c1c2 for roots 2t1, t1+t2, 2t2
        let r = make_ring(Flavor::GL2, &[Factor::Projective(2)]).unwrap();
        let expected = p("xi^3 - 3*c1*xi^2 + 2*c1^2*xi + 4*c2*xi - 4*c1*c2");
        assert_eq!(*r.relations()[0], expected);
        let torus = p("xi - 2*t1") * p("xi - t1 - t2") * p("xi - 2*t2");
        assert_eq!(to_torus(&expected), torus);
        assert_eq!(chern_relation(2).unwrap(), expected);
    }

    #[test]
    fn chern_relation_small_cases() {
        assert_eq!(chern_relation(1).unwrap(), p("xi^2 - c1*xi + c2"));
        assert_eq!(chern_relation(2).unwrap().constant_term(), BigInt::from(0));
        assert_eq!(chern_relation(2).unwrap().coeff_of_power(Var::Xi, 0), p("-4*c1*c2"));
    }

    #[test]
    fn normal_form_examples() {
        let r = projective(Flavor::T, 1);
        assert_eq!(r.normal_form(&p("xi^2")).unwrap().value(), &p("t1*xi + t2*xi - t1*t2"));
        assert!(r.normal_form(&Polynomial::zero()).unwrap().is_zero());
        for n in 1..=7 {
            let r = projective(Flavor::T, n);
            let prod = (0..=n)
                .map(|i| hyperplane(&r, i).unwrap().into_value())
                .product::<Polynomial>();
            assert!(r.normal_form(&prod).unwrap().is_zero(), "N = {n}");
        }
    }

    #[test]
    fn normal_form_rejects_bad_input() {
        let r = projective(Flavor::T, 2);
        assert!(matches!(r.normal_form(&p("xi + 1")), Err(Error::Inhomogeneous)));
        assert!(matches!(r.normal_form(&p("c1")), Err(Error::VariableMismatch { .. })));
        assert!(matches!(r.normal_form(&p("xi_1")), Err(Error::VariableMismatch { .. })));
    }

    #[test]
    fn hyperplane_examples() {
        let r1 = projective(Flavor::T, 1);
        assert_eq!(hyperplane(&r1, 0).unwrap().value(), &p("xi - t1"));
        for n in 1..6 {
            let r = projective(Flavor::T, n);
            let expect = Polynomial::linear(&[(1, Var::Xi), (-(n as i64), Var::T2)]);
            assert_eq!(hyperplane(&r, n).unwrap().value(), &expect);
        }
        let r6 = projective(Flavor::T, 6);
        assert_eq!(hyperplane(&r6, 3).unwrap().value(), &p("xi - 3*t1 - 3*t2"));
        assert!(matches!(hyperplane(&r6, 7), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(hyperplane(&projective(Flavor::GL2, 3), 0), Err(Error::NotTorus)));

        let src = pi_source(Flavor::T, 2, 6).unwrap();
        assert_eq!(hyperplane_r(&src, 2, 1).unwrap().value(), &p("xi_1 - t1 - t2"));
        assert!(hyperplane_r(&src, 3, 1).is_err());
        assert!(hyperplane_r(&src, 2, 3).is_err());
    }

    #[test]
    fn free_module_rank_count() {
        for n in 1..=6u32 {
            let r = projective(Flavor::T, n);
            for d in 0..=9u32 {
                let expect: usize = (0..=d.min(n)).map(|k| (d - k + 1) as usize).sum();
                assert_eq!(r.basis(d).len(), expect, "N={n} d={d}");
            }
        }
        let pt = point(Flavor::GL2);
        assert_eq!(pt.basis(2), vec![p("c1^2").leading_term().unwrap().0.clone(), p("c2").leading_term().unwrap().0.clone()]);
    }

    #[test]
    fn gl2_relations_descend_torus_relations() {
        for n in 1..=14 {
            let t = projective(Flavor::T, n);
            let g = projective(Flavor::GL2, n);
            assert_eq!(to_torus(g.relations()[0]), *t.relations()[0]);
            for k in 0..=n {
                let coeff = t.relations()[0].coeff_of_power(Var::Xi, k);
                symmetric_rewrite(&coeff).unwrap();
            }
        }
    }

    #[test]
    fn zero_dimensional_factor_kills_its_variable() {
        let r = pi_source(Flavor::T, 2, 4).unwrap();
        assert!(r.normal_form(&p("xi_2")).unwrap().is_zero());
        assert_eq!(r.basis(1).len(), 3);
    }

    #[test]
    fn ring_json_roundtrip() {
        let r = make_ring(Flavor::GL2, &[Factor::Projective(2), Factor::P1Power(2)]).unwrap();
        let s = serde_json::to_string(&*r).unwrap();
        assert!(s.starts_with(r#"{"flavor":"GL2","factors":["PN(2)","P1_power(2)"],"relations":["#));
        let back: RingDescriptor = serde_json::from_str(&s).unwrap();
        assert_eq!(back, *r);
        let bad = s.replace("xi_1^3", "xi_1^4");
        assert!(serde_json::from_str::<RingDescriptor>(&bad).is_err());
    }

    #[test]
    fn diagonal_class_from_hypersurface_rule() {
        // x0*y1 - x1*y0 on P^1 x P^1
        let r = make_ring(Flavor::T, &[Factor::P1Power(2)]).unwrap();
        let diag = r.hypersurface_class(&[vec![(0, 0), (1, 1)], vec![(0, 1), (1, 0)]]).unwrap();
        assert_eq!(diag.value(), &p("xi_1 + xi_2 - t1 - t2"));
        assert!(r.hypersurface_class(&[vec![(0, 0), (1, 0)], vec![(0, 1), (1, 0)]]).is_err());
    }

    fn arb_class_poly(ring: Arc<RingDescriptor>, d: u32) -> impl Strategy<Value = Polynomial> {
        let basis = ring.basis(d);
        prop::collection::vec(-20i64..20, basis.len()).prop_map(move |cs| {
            let mut out = Polynomial::zero();
            for (c, m) in cs.into_iter().zip(&basis) {
                out.add_term(c.into(), m.clone());
            }
            out
        })
    }

    proptest! {
        #[test]
        fn restriction_to_torus_is_injective_on_normal_forms(
            a in arb_class_poly(projective(Flavor::GL2, 3), 4),
            b in arb_class_poly(projective(Flavor::GL2, 3), 4),
            flip in any::<bool>(),
        ) {
            let g = projective(Flavor::GL2, 3);
            let b = if flip { a.clone() } else { b };
            let (ca, cb) = (g.normal_form(&a).unwrap(), g.normal_form(&b).unwrap());
            let (ta, tb) = (ca.to_torus().unwrap(), cb.to_torus().unwrap());
            prop_assert_eq!(ca == cb, ta == tb);
            prop_assert_eq!(ta.to_gl2().unwrap(), ca);
        }

        #[test]
        fn normal_form_is_a_ring_map(a in arb_class_poly(projective(Flavor::T, 4), 2), b in arb_class_poly(projective(Flavor::T, 4), 3)) {
            let r = projective(Flavor::T, 2);
            let direct = r.normal_form(&(&a * &b)).unwrap();
            let staged = r.normal_form(&a).unwrap().mul(&r.normal_form(&b).unwrap()).unwrap();
            prop_assert_eq!(direct, staged);
        }
    }
}
