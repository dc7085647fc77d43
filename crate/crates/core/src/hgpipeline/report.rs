use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::chowctx::ChowClass;
use crate::lattice::{Membership, MembershipCertificate};
use crate::polyring::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Failed,
}

/// The parameter a lemma was checked at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Target {
    #[serde(rename = "N")]
    N(u32),
    #[serde(rename = "genus")]
    Genus(u32),
}

/// An equality `lhs = rhs` with its difference, which is zero iff it holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub label: String,
    pub lhs: Polynomial,
    pub rhs: Polynomial,
    pub difference: Polynomial,
}

impl IdentityCheck {
    pub fn new(label: impl Into<String>, lhs: Polynomial, rhs: Polynomial) -> Self {
        let difference = &lhs - &rhs;
        IdentityCheck {
            label: label.into(),
            lhs,
            rhs,
            difference,
        }
    }

    pub fn of_classes(label: impl Into<String>, lhs: &ChowClass, rhs: &ChowClass) -> Self {
        let mut check = IdentityCheck::new(label, lhs.value().clone(), rhs.value().clone());
        if lhs.ring() != rhs.ring() && check.difference.is_zero() {
            check.difference = Polynomial::one();
        }
        check
    }

    pub fn holds(&self) -> bool {
        self.difference.is_zero()
    }
}

/// One membership question with its certificate or nonzero residual.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipCheck {
    pub label: String,
    pub member: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<MembershipCertificate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<Polynomial>,
}

impl MembershipCheck {
    pub fn new(label: impl Into<String>, outcome: Membership) -> Self {
        let label = label.into();
        match outcome {
            Membership::Member { certificate } => MembershipCheck {
                label,
                member: true,
                certificate: Some(certificate),
                residual: None,
            },
            Membership::NotMember { residual } => MembershipCheck {
                label,
                member: false,
                certificate: None,
                residual: Some(residual),
            },
        }
    }
}

/// Evidence for a verdict.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub identities: Vec<IdentityCheck>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub memberships: Vec<MembershipCheck>,
}

impl Witness {
    pub fn holds(&self) -> bool {
        self.identities.iter().all(IdentityCheck::holds) && self.memberships.iter().all(|m| m.member)
    }

    pub fn push_identity(&mut self, check: IdentityCheck) {
        self.identities.push(check);
    }

    pub fn push_membership(&mut self, label: impl Into<String>, outcome: Membership) {
        self.memberships.push(MembershipCheck::new(label, outcome));
    }

    /// Drops certificate bodies, keeping verdicts and failure evidence.
    pub fn strip_certificates(&mut self) {
        for m in &mut self.memberships {
            m.certificate = None;
        }
    }

    /// Keeps only the failing checks.
    pub fn failures(&self) -> Witness {
        Witness {
            identities: self.identities.iter().filter(|c| !c.holds()).cloned().collect(),
            memberships: self.memberships.iter().filter(|m| !m.member).cloned().collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub lemma: String,
    pub params: Target,
    pub status: Status,
    pub witness: Witness,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl VerificationReport {
    pub fn new(lemma: &str, params: Target, witness: Witness, elapsed: Duration) -> Self {
        let status = if witness.holds() { Status::Verified } else { Status::Failed };
        VerificationReport {
            lemma: lemma.to_string(),
            params,
            status,
            witness,
            timing_ms: Some(elapsed.as_secs_f64() * 1e3),
        }
    }

    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }

    /// Removes run-dependent data so that reports compare byte for byte.
    pub fn without_timing(mut self) -> Self {
        self.timing_ms = None;
        self
    }
}
