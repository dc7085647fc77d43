use super::*;
use crate::chowctx::{hyperplane, point, projective, Flavor};
use crate::pushpull::alpha;
use proptest::prelude::*;

fn p(s: &str) -> Polynomial {
    s.parse().unwrap()
}

fn gl2_point(s: &str) -> ChowClass {
    point(Flavor::GL2).normal_form(&p(s)).unwrap()
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[test]
fn zero_is_always_a_member() {
    let gens = [gl2_point("3*c1"), gl2_point("c2")];
    let m = member(&point(Flavor::GL2).zero(2), &gens).unwrap();
    let cert = m.certificate().unwrap();
    assert!(cert.coefficients().iter().all(Polynomial::is_zero));
}

#[test]
fn c1_not_in_two_c1() {
    match member(&gl2_point("c1"), &[gl2_point("2*c1")]).unwrap() {
        Membership::NotMember { residual } => assert_eq!(residual, p("c1")),
        other => panic!("unexpected {other:?}"),
    }
    let m = member(&gl2_point("4*c1^3 + 6*c1*c2"), &[gl2_point("2*c1")]).unwrap();
    assert_eq!(m.certificate().unwrap().coefficients(), &[p("2*c1^2 + 3*c2")]);
}

#[test]
fn alpha20_certificate_at_n8() {
    let n = 8;
    let ring = projective(Flavor::T, n);
    let h0h1 = hyperplane(&ring, 0).unwrap().mul(&hyperplane(&ring, 1).unwrap()).unwrap();
    let gens = [alpha(1, 0, n).unwrap(), h0h1];
    let m = member(&alpha(2, 0, n).unwrap(), &gens).unwrap();
    let cert = m.certificate().expect("alpha_{2,0} lies in (alpha_{1,0}, h0 h1)");
    cert.verify().unwrap();
    assert_eq!(cert.generators().len(), 2);
}

#[test]
fn ideal_equality_examples() {
    let n = 6;
    let ring = projective(Flavor::T, n);
    let h0h1 = hyperplane(&ring, 0).unwrap().mul(&hyperplane(&ring, 1).unwrap()).unwrap();
    let a10 = alpha(1, 0, n).unwrap();
    let a11 = alpha(1, 1, n).unwrap();
    let cmp = ideal_equal(&[a10.clone(), a11.clone()], &[a10.clone(), h0h1]).unwrap();
    assert!(cmp.equal);
    let same = ideal_equal(&[a10.clone(), a11.clone()], &[a10, a11]).unwrap();
    assert!(same.equal);

    let cmp = ideal_equal(&[gl2_point("2*c1")], &[gl2_point("c1")]).unwrap();
    assert!(!cmp.equal);
    assert!(cmp.left_in_right[0].is_member());
    assert!(!cmp.right_in_left[0].is_member());
}

#[test]
fn quotient_examples() {
    let pt = point(Flavor::GL2);
    let rels = [gl2_point("10*c1"), gl2_point("2*c1^2 - 24*c2")];
    let q = quotient_structure(&pt, &rels, 2).unwrap();
    assert_eq!(q.piece(0).unwrap(), &GradedPiece { degree: 0, rank: 1, torsion: vec![] });
    assert_eq!(q.piece(1).unwrap(), &GradedPiece { degree: 1, rank: 0, torsion: ints(&[10]) });
    assert_eq!(q.piece(2).unwrap(), &GradedPiece { degree: 2, rank: 0, torsion: ints(&[2, 120]) });

    let free = quotient_structure(&pt, &[], 2).unwrap();
    assert_eq!(free.piece(2).unwrap().rank, 2);
    assert!(free.piece(2).unwrap().torsion.is_empty());

    let g = 4;
    let rels = [
        gl2_point(&format!("{}*c1", 2 * (2 * g + 1))),
        gl2_point(&format!("{}*c1^2 - {}*c2", g * (g - 1), 4 * g * (g + 1))),
    ];
    let q = quotient_structure(&pt, &rels, 1).unwrap();
    assert_eq!(q.piece(1).unwrap().torsion, ints(&[18]));
}

#[test]
fn graded_json_shape() {
    let q = quotient_structure(&point(Flavor::GL2), &[gl2_point("10*c1")], 1).unwrap();
    let s = serde_json::to_string(&q).unwrap();
    assert_eq!(s, r#"[{"degree":0,"rank":1,"torsion":[]},{"degree":1,"rank":0,"torsion":[10]}]"#);
    assert_eq!(serde_json::from_str::<GradedStructure>(&s).unwrap(), q);
}

#[test]
fn certificate_json_roundtrip() {
    let m = member(&gl2_point("4*c1^3 + 6*c1*c2"), &[gl2_point("2*c1")]).unwrap();
    let cert = m.certificate().unwrap();
    let s = serde_json::to_string(cert).unwrap();
    assert!(s.contains(r#""target":"4*c1^3 + 6*c1*c2""#));
    let back: MembershipCertificate = serde_json::from_str(&s).unwrap();
    assert_eq!(&back, cert);
    let forged = s.replace("2*c1^2 + 3*c2", "2*c1^2 + 5*c2");
    assert!(serde_json::from_str::<MembershipCertificate>(&forged).is_err());
}

#[test]
fn ring_mismatch_is_rejected() {
    let a = projective(Flavor::T, 2).one();
    let b = projective(Flavor::T, 3).one();
    assert!(matches!(member(&a, &[b]), Err(Error::RingMismatch { .. })));
}

fn arb_point_class(d: u32) -> impl Strategy<Value = ChowClass> {
    let n = point(Flavor::GL2).basis(d).len();
    prop::collection::vec(-30i64..30, n).prop_map(move |cs| {
        let pt = point(Flavor::GL2);
        let mut out = Polynomial::zero();
        for (c, m) in cs.into_iter().zip(pt.basis(d)) {
            out.add_term(c.into(), m);
        }
        pt.normal_form(&out).unwrap()
    })
}

proptest! {
    #[test]
    fn membership_is_sound_and_monotone(
        g1 in arb_point_class(1),
        g2 in arb_point_class(2),
        extra in arb_point_class(1),
        f in arb_point_class(3),
    ) {
        let gens = vec![g1, g2];
        let m = member(&f, &gens).unwrap();
        if let Some(cert) = m.certificate() {
            cert.verify().unwrap();
            let mut bigger = gens.clone();
            bigger.push(extra);
            prop_assert!(member(&f, &bigger).unwrap().is_member());
        }
    }

    #[test]
    fn combinations_are_members(
        g1 in arb_point_class(1),
        g2 in arb_point_class(2),
        a in arb_point_class(2),
        b in arb_point_class(1),
    ) {
        let f = g1.mul(&a).unwrap().add(&g2.mul(&b).unwrap()).unwrap();
        prop_assert!(member(&f, &[g1, g2]).unwrap().is_member());
    }
}
