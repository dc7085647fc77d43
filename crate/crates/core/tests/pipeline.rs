use hgchow::chowctx::{hyperplane, projective, Flavor};
use hgchow::hgpipeline::{self, Presentation, Status, Target, LEMMA_IDS};
use hgchow::lattice::{member, Membership, MembershipCertificate};
use hgchow::pushpull::alpha;
use hgchow::Error;

#[test]
fn every_lemma_verifies_at_genus_four() {
    let reports = hgpipeline::verify_all(4, 0).unwrap();
    assert!(reports.iter().all(|r| r.status == Status::Verified), "{reports:#?}");
    let ids: Vec<&str> = reports.iter().map(|r| r.lemma.as_str()).collect();
    for id in LEMMA_IDS {
        assert!(ids.contains(id), "{id} did not run at g = 4");
    }
}

#[test]
fn lemmas_at_projective_targets() {
    for n in [6u32, 9] {
        for id in LEMMA_IDS.iter().filter(|id| hgpipeline::applies(id, Target::N(n))) {
            let report = hgpipeline::verify(Target::N(n), id).unwrap();
            assert!(report.is_verified(), "{id} at N={n}");
        }
    }
}

#[test]
fn out_of_range_parameters() {
    assert!(matches!(hgpipeline::presentation(3, 2), Err(Error::InvalidGenus(3))));
    assert!(matches!(hgpipeline::verify(Target::N(3), "alpha20-ideal"), Err(Error::IndexOutOfRange { .. })));
    assert!(matches!(hgpipeline::verify(Target::Genus(2), "nope"), Err(Error::UnknownLemma(_))));
    // pure identities make sense at odd genus too
    assert!(hgpipeline::verify(Target::Genus(3), "q-identity").unwrap().is_verified());
}

#[test]
fn presentation_roundtrips_through_json() {
    let p = hgpipeline::presentation(6, 3).unwrap();
    let json = serde_json::to_string(&p).unwrap();
    let back: Presentation = serde_json::from_str(&json).unwrap();
    assert_eq!(back, p);
    assert_eq!(back.graded.piece(1).unwrap().torsion, [26.into()]);
}

#[test]
fn certificates_survive_serialization_and_reject_forgery() {
    let n = 10;
    let ring = projective(Flavor::T, n);
    let h0h1 = hyperplane(&ring, 0).unwrap().mul(&hyperplane(&ring, 1).unwrap()).unwrap();
    let m = member(&alpha(2, 0, n).unwrap(), &[alpha(1, 0, n).unwrap(), h0h1]).unwrap();
    let Membership::Member { certificate } = m else { panic!("expected membership") };
    let json = serde_json::to_string(&certificate).unwrap();
    let back: MembershipCertificate = serde_json::from_str(&json).unwrap();
    assert_eq!(back, certificate);
    back.verify().unwrap();

    let mut v: serde_json::Value = serde_json::from_str(&json).unwrap();
    v["target"] = serde_json::Value::String("xi^2".into());
    assert!(serde_json::from_value::<MembershipCertificate>(v).is_err());
}

#[test]
fn non_members_report_a_residual() {
    let n = 6;
    let ring = projective(Flavor::T, n);
    let h0 = hyperplane(&ring, 0).unwrap();
    match member(&h0, &[alpha(1, 0, n).unwrap(), alpha(1, 1, n).unwrap()]).unwrap() {
        Membership::NotMember { residual } => assert!(!residual.is_zero()),
        Membership::Member { .. } => panic!("h0 is not in the ideal"),
    }
}
