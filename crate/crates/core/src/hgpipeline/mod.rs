//! The presentation of the Chow ring of the stack of hyperelliptic curves
//! of even genus `g`, derived end to end:
//!
//! 1. `alpha_{1,0}`, `alpha_{1,1}` on `P^N`, `N = 2g+2`, by pushforward;
//! 2. descent to `GL2` and the substitution `xi = g c1`;
//! 3. a certificate that `P(g c1)` lies in the ideal of the first two;
//! 4. sign normalization and the graded structure of the quotient.
//!
//! Every intermediate lemma is also available as a standalone check.

mod lemmas;
mod report;

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chowctx::{point, projective, ChowClass, Flavor, RingDescriptor};
use crate::error::{Error, Result};
use crate::lattice::{ideal_equal, member, quotient_structure, GradedStructure};
use crate::polyring::{Polynomial, Var};
use crate::pushpull::alpha;

pub use lemmas::LEMMA_IDS;
pub use report::{IdentityCheck, MembershipCheck, Status, Target, VerificationReport, Witness};

/// `A^*(H_g) = Z[c1, c2] / (relations)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Presentation {
    pub genus: u32,
    #[serde(rename = "N")]
    pub n: u32,
    pub relations: Vec<Polynomial>,
    pub picard_order: u64,
    pub graded: GradedStructure,
    pub certificates: BTreeMap<String, Witness>,
}

impl Presentation {
    /// Drops certificate bodies, keeping the verdicts.
    pub fn strip_certificates(&mut self) {
        self.certificates.clear();
    }
}

pub fn check_genus(g: u32) -> Result<()> {
    if g < 2 || g % 2 == 1 {
        return Err(Error::InvalidGenus(g.into()));
    }
    Ok(())
}

/// The class of `p(xi = g c1)` in `Z[c1, c2]`, for `p` in `A_GL2(P^N)`.
pub(crate) fn substitute_genus(
    ring: &Arc<RingDescriptor>,
    p: &Polynomial,
    codim: u32,
    g: u32,
) -> Result<ChowClass> {
    ring.check_vars(p)?;
    let image = Polynomial::linear(&[(i64::from(g), Var::C1)]);
    point(Flavor::GL2).class_of_degree(&p.substitute_many(&[(Var::Xi, image)]), codim)
}

/// `alpha_{1,0}(g c1)` and `alpha_{1,1}(g c1)`, computed by pushforward.
pub fn genus_classes(g: u32) -> Result<(ChowClass, ChowClass)> {
    let n = 2 * g + 2;
    let ring = projective(Flavor::GL2, n);
    let a10 = alpha(1, 0, n)?.to_gl2()?;
    let a11 = alpha(1, 1, n)?.to_gl2()?;
    Ok((
        substitute_genus(&ring, a10.value(), 1, g)?,
        substitute_genus(&ring, a11.value(), 2, g)?,
    ))
}

/// `P(g c1)`, the Chern relation of `P^(2g+2)` at `xi = g c1`.
pub fn p_of_genus(g: u32) -> Result<ChowClass> {
    lemmas::p_class(g)
}

fn normalize_sign(c: &ChowClass) -> ChowClass {
    if c.value().leading_sign() < 0 {
        c.neg()
    } else {
        c.clone()
    }
}

/// `2(2g+1) c1` and `g(g-1) c1^2 - 4g(g+1) c2`.
pub fn expected_relations(g: u32) -> [Polynomial; 2] {
    let g = i64::from(g);
    [
        Polynomial::linear(&[(2 * (2 * g + 1), Var::C1)]),
        Polynomial::var(Var::C1).pow(2).scale(&(g * (g - 1)).into()) - Polynomial::linear(&[(4 * g * (g + 1), Var::C2)]),
    ]
}

/// Derives the two relations, with the evidence for every step.
fn derive(g: u32) -> Result<(Vec<ChowClass>, BTreeMap<String, Witness>)> {
    check_genus(g)?;
    let n = 2 * g + 2;
    let mut certs = BTreeMap::new();
    for id in ["alpha10-closed", "alpha11-closed"] {
        certs.insert(id.to_string(), lemmas::run(id, Target::N(n))?);
    }
    let (a10, a11) = genus_classes(g)?;
    let p = p_of_genus(g)?;
    let mut w = Witness::default();
    w.push_membership(
        "P(gc1) in (alpha_{1,0}(gc1), alpha_{1,1}(gc1))",
        member(&p, &[a10.clone(), a11.clone()])?,
    );
    certs.insert("p-member".to_string(), w);

    let relations = vec![normalize_sign(&a10), normalize_sign(&a11)];
    let mut w = Witness::default();
    for (k, (rel, expect)) in relations.iter().zip(expected_relations(g)).enumerate() {
        w.push_identity(IdentityCheck::new(format!("relation {}", k + 1), rel.value().clone(), expect));
    }
    let cmp = ideal_equal(&relations, &[a10, a11, p])?;
    for (k, m) in cmp.left_in_right.into_iter().enumerate() {
        w.push_membership(format!("relation {} in (alpha_{{1,0}}(gc1), alpha_{{1,1}}(gc1), P(gc1))", k + 1), m);
    }
    let names = ["alpha_{1,0}(gc1)", "alpha_{1,1}(gc1)", "P(gc1)"];
    for (name, m) in names.iter().zip(cmp.right_in_left) {
        w.push_membership(format!("{name} in (relations)"), m);
    }
    certs.insert("presentation".to_string(), w);
    Ok((relations, certs))
}

fn fail_on(lemma: &str, g: u32, witness: &Witness, start: Instant) -> Result<()> {
    if witness.holds() {
        return Ok(());
    }
    let report = VerificationReport::new(lemma, Target::Genus(g), witness.failures(), start.elapsed());
    Err(Error::VerificationFailed(Box::new(report)))
}

pub(crate) fn presentation_witness(g: u32) -> Result<Witness> {
    let (_, certs) = derive(g)?;
    let mut all = Witness::default();
    for w in certs.into_values() {
        all.identities.extend(w.identities);
        all.memberships.extend(w.memberships);
    }
    Ok(all)
}

/// The presentation at genus `g`, with graded pieces up to `max_degree`.
pub fn presentation(g: u32, max_degree: u32) -> Result<Presentation> {
    let start = Instant::now();
    let (relations, certificates) = derive(g)?;
    for (id, w) in &certificates {
        fail_on(id, g, w, start)?;
    }
    let graded = quotient_structure(&point(Flavor::GL2), &relations, max_degree.max(1))?;
    let picard_order = picard_from(&graded)?;
    let graded = GradedStructure {
        degrees: graded.degrees.into_iter().filter(|p| p.degree <= max_degree).collect(),
    };
    Ok(Presentation {
        genus: g,
        n: 2 * g + 2,
        relations: relations.into_iter().map(ChowClass::into_value).collect(),
        picard_order,
        graded,
        certificates,
    })
}

fn picard_from(graded: &GradedStructure) -> Result<u64> {
    let piece = graded
        .piece(1)
        .ok_or_else(|| Error::Internal("degree 1 not computed".into()))?;
    match (piece.rank, piece.torsion.as_slice()) {
        (0, [order]) => u64::try_from(order).map_err(|_| Error::Internal("Picard order overflows".into())),
        _ => Err(Error::Internal(format!(
            "degree 1 piece is not finite cyclic: rank {}, torsion {:?}",
            piece.rank, piece.torsion
        ))),
    }
}

/// Order of the (cyclic) Picard group, read off the degree-1 piece.
pub fn picard(g: u32) -> Result<u64> {
    let start = Instant::now();
    let (relations, certs) = derive(g)?;
    fail_on("presentation", g, &certs["presentation"], start)?;
    picard_from(&quotient_structure(&point(Flavor::GL2), &relations, 1)?)
}

/// Graded pieces of the presented ring in degrees `0..=max_degree`.
pub fn chow_table(g: u32, max_degree: u32) -> Result<GradedStructure> {
    Ok(presentation(g, max_degree)?.graded)
}

/// Runs one lemma check. A failed check is reported, not raised.
pub fn verify(target: Target, lemma: &str) -> Result<VerificationReport> {
    let target = lemmas::resolve(lemma, target)?;
    let start = Instant::now();
    let witness = lemmas::run(lemma, target)?;
    Ok(VerificationReport::new(lemma, target, witness, start.elapsed()))
}

/// Whether `lemma` can run at `target`.
pub fn applies(lemma: &str, target: Target) -> bool {
    lemmas::resolve(lemma, target).is_ok()
}

/// Every lemma at genus `g` (`N = 2g+2`), in [`LEMMA_IDS`] order, on a pool
/// of `jobs` threads (`0` picks a default).
pub fn verify_all(g: u32, jobs: usize) -> Result<Vec<VerificationReport>> {
    check_genus(g)?;
    run_jobs(jobs, LEMMA_IDS.iter().map(|id| (Target::Genus(g), *id)).collect())
}

/// Runs a batch of `(parameter, lemma)` jobs; results keep the input order.
pub fn run_jobs(jobs: usize, work: Vec<(Target, &str)>) -> Result<Vec<VerificationReport>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    pool.install(|| work.par_iter().map(|(t, id)| verify(*t, id)).collect())
}

/// Integer value of `2(2g+1)`.
pub fn expected_picard(g: u32) -> BigInt {
    BigInt::from(2 * (2 * u64::from(g) + 1))
}
