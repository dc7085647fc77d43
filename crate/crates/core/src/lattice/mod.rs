//! Graded ideal membership, ideal equality and quotient structure over Z.
//!
//! Every ring handled here is graded with free Z-modules of finite rank in
//! each degree, so a homogeneous question reduces to integer linear algebra
//! in a single degree: membership through a row Hermite normal form, the
//! shape of a quotient through a Smith normal form.

mod hnf;
mod snf;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::chowctx::{ChowClass, RingDescriptor};
use crate::error::{Error, Result};
use crate::polyring::{Monomial, Polynomial};

use hnf::{Row, RowHnf};

/// Explicit coefficients expressing `target` in terms of `generators`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipCertificate {
    target: ChowClass,
    generators: Vec<ChowClass>,
    coefficients: Vec<Polynomial>,
}

impl MembershipCertificate {
    /// Builds a certificate, re-checking `sum c_k g_k = target`.
    pub fn new(target: ChowClass, generators: Vec<ChowClass>, coefficients: Vec<Polynomial>) -> Result<Self> {
        let cert = MembershipCertificate {
            target,
            generators,
            coefficients,
        };
        cert.verify()?;
        Ok(cert)
    }

    pub fn target(&self) -> &ChowClass {
        &self.target
    }

    pub fn generators(&self) -> &[ChowClass] {
        &self.generators
    }

    pub fn coefficients(&self) -> &[Polynomial] {
        &self.coefficients
    }

    pub fn ring(&self) -> &Arc<RingDescriptor> {
        self.target.ring()
    }

    /// Re-verifies the certificate by exact arithmetic.
    pub fn verify(&self) -> Result<()> {
        if self.coefficients.len() != self.generators.len() {
            return Err(Error::InvalidParameter("one coefficient per generator required".into()));
        }
        let ring = self.target.ring();
        let mut sum = Polynomial::zero();
        for (c, g) in self.coefficients.iter().zip(&self.generators) {
            if g.ring() != ring {
                return Err(Error::RingMismatch {
                    left: ring.to_string(),
                    right: g.ring().to_string(),
                });
            }
            if c.is_zero() {
                continue;
            }
            ring.check_vars(c)?;
            let want = self.target.codim().checked_sub(g.codim());
            match (want, c.total_degree()) {
                (Some(w), Some(d)) if c.is_homogeneous_of(w) => debug_assert_eq!(w, d),
                (_, Some(d)) => {
                    return Err(Error::DegreeMismatch {
                        expected: want.unwrap_or(0),
                        found: d,
                    })
                }
                _ => return Err(Error::Inhomogeneous),
            }
            sum += &(c * g.value());
        }
        let lhs = ring.normal_form(&sum)?;
        if lhs.value() != self.target.value() {
            return Err(Error::Internal(format!(
                "certificate does not reproduce its target (difference {})",
                lhs.value() - self.target.value()
            )));
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CertificateRepr {
    ring: RingDescriptor,
    target: String,
    generators: Vec<String>,
    coefficients: Vec<String>,
}

impl Serialize for MembershipCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CertificateRepr {
            ring: (**self.ring()).clone(),
            target: self.target.to_string(),
            generators: self.generators.iter().map(|g| g.to_string()).collect(),
            coefficients: self.coefficients.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MembershipCertificate {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = CertificateRepr::deserialize(d)?;
        let build = || -> Result<MembershipCertificate> {
            let ring = Arc::new(repr.ring);
            let class = |s: &str| -> Result<ChowClass> { ring.normal_form(&s.parse()?) };
            let target = class(&repr.target)?;
            let generators = repr.generators.iter().map(|s| class(s)).collect::<Result<Vec<_>>>()?;
            let coefficients = repr
                .coefficients
                .iter()
                .map(|s| s.parse::<Polynomial>())
                .collect::<Result<Vec<_>>>()?;
            MembershipCertificate::new(target, generators, coefficients)
        };
        build().map_err(D::Error::custom)
    }
}

/// Outcome of a membership query.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Membership {
    Member { certificate: MembershipCertificate },
    /// `residual` is the target reduced modulo the degree-`d` lattice of the
    /// ideal; it is nonzero and canonical.
    NotMember { residual: Polynomial },
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member { .. })
    }

    pub fn certificate(&self) -> Option<&MembershipCertificate> {
        match self {
            Membership::Member { certificate } => Some(certificate),
            Membership::NotMember { .. } => None,
        }
    }
}

/// The integer lattice spanned by an ideal in one degree.
struct DegreeSolver {
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    /// `(generator, multiplier)` for each row of the matrix
    rows: Vec<(usize, Monomial)>,
    hnf: RowHnf,
}

impl DegreeSolver {
    fn build(ring: &Arc<RingDescriptor>, gens: &[ChowClass], d: u32) -> Result<Self> {
        let basis = ring.basis(d);
        let index: HashMap<Monomial, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows = Vec::new();
        let mut matrix = Vec::new();
        for (k, g) in gens.iter().enumerate() {
            if g.is_zero() || g.codim() > d {
                continue;
            }
            for m in ring.basis(d - g.codim()) {
                let product = ring.normal_form(&g.value().mul_monomial(&BigInt::one(), &m))?;
                matrix.push(coordinates(&index, product.value())?);
                rows.push((k, m));
            }
        }
        let hnf = RowHnf::new(&matrix, basis.len());
        Ok(DegreeSolver { basis, index, rows, hnf })
    }

    fn polynomial(&self, coords: &[BigInt]) -> Polynomial {
        let mut out = Polynomial::zero();
        for (c, m) in coords.iter().zip(&self.basis) {
            out.add_term(c.clone(), m.clone());
        }
        out
    }
}

fn coordinates(index: &HashMap<Monomial, usize>, p: &Polynomial) -> Result<Row> {
    let mut row = vec![BigInt::zero(); index.len()];
    for (m, c) in p.iter() {
        let i = index
            .get(m)
            .ok_or_else(|| Error::Internal(format!("monomial {m} is not in the reduced basis")))?;
        row[*i] = c.clone();
    }
    Ok(row)
}

fn common_ring<'a>(classes: impl IntoIterator<Item = &'a ChowClass>) -> Result<Option<Arc<RingDescriptor>>> {
    let mut ring: Option<&Arc<RingDescriptor>> = None;
    for c in classes {
        match ring {
            None => ring = Some(c.ring()),
            Some(r) if r != c.ring() => {
                return Err(Error::RingMismatch {
                    left: r.to_string(),
                    right: c.ring().to_string(),
                })
            }
            _ => {}
        }
    }
    Ok(ring.cloned())
}

/// A fixed list of generators with per-degree solvers built on demand.
pub struct IdealLattice {
    ring: Arc<RingDescriptor>,
    generators: Vec<ChowClass>,
    solvers: Mutex<BTreeMap<u32, Arc<DegreeSolver>>>,
}

impl IdealLattice {
    pub fn new(ring: Arc<RingDescriptor>, generators: Vec<ChowClass>) -> Result<Self> {
        if let Some(r) = common_ring(&generators)? {
            if r != ring {
                return Err(Error::RingMismatch {
                    left: ring.to_string(),
                    right: r.to_string(),
                });
            }
        }
        Ok(IdealLattice {
            ring,
            generators,
            solvers: Mutex::new(BTreeMap::new()),
        })
    }

    pub fn generators(&self) -> &[ChowClass] {
        &self.generators
    }

    fn solver(&self, d: u32) -> Result<Arc<DegreeSolver>> {
        if let Some(s) = self.solvers.lock().expect("solver cache poisoned").get(&d) {
            return Ok(s.clone());
        }
        let built = Arc::new(DegreeSolver::build(&self.ring, &self.generators, d)?);
        let mut cache = self.solvers.lock().expect("solver cache poisoned");
        Ok(cache.entry(d).or_insert(built).clone())
    }

    /// Decides whether `f` lies in the ideal, with a certificate if it does.
    pub fn member(&self, f: &ChowClass) -> Result<Membership> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch {
                left: self.ring.to_string(),
                right: f.ring().to_string(),
            });
        }
        let n = self.generators.len();
        if f.is_zero() {
            let cert = MembershipCertificate::new(f.clone(), self.generators.clone(), vec![Polynomial::zero(); n])?;
            return Ok(Membership::Member { certificate: cert });
        }
        let solver = self.solver(f.codim())?;
        let b = coordinates(&solver.index, f.value())?;
        match solver.hnf.solve(&b, solver.rows.len()) {
            Err(residual) => Ok(Membership::NotMember {
                residual: solver.polynomial(&residual),
            }),
            Ok(x) => {
                let mut coefficients = vec![Polynomial::zero(); n];
                for (xi, (k, m)) in x.into_iter().zip(&solver.rows) {
                    if !xi.is_zero() {
                        coefficients[*k].add_term(xi, m.clone());
                    }
                }
                let cert = MembershipCertificate::new(f.clone(), self.generators.clone(), coefficients)?;
                Ok(Membership::Member { certificate: cert })
            }
        }
    }
}

/// Membership of `f` in the ideal generated by `gens`.
pub fn member(f: &ChowClass, gens: &[ChowClass]) -> Result<Membership> {
    common_ring(std::iter::once(f).chain(gens))?;
    IdealLattice::new(f.ring().clone(), gens.to_vec())?.member(f)
}

/// Two-sided comparison of two generator lists.
#[derive(Clone, Debug, Serialize)]
pub struct IdealComparison {
    pub equal: bool,
    /// each generator of the first list tested against the second ideal
    pub left_in_right: Vec<Membership>,
    /// each generator of the second list tested against the first ideal
    pub right_in_left: Vec<Membership>,
}

pub fn ideal_equal(left: &[ChowClass], right: &[ChowClass]) -> Result<IdealComparison> {
    let Some(ring) = common_ring(left.iter().chain(right))? else {
        return Ok(IdealComparison {
            equal: true,
            left_in_right: vec![],
            right_in_left: vec![],
        });
    };
    let l = IdealLattice::new(ring.clone(), left.to_vec())?;
    let r = IdealLattice::new(ring, right.to_vec())?;
    let left_in_right = left.iter().map(|g| r.member(g)).collect::<Result<Vec<_>>>()?;
    let right_in_left = right.iter().map(|g| l.member(g)).collect::<Result<Vec<_>>>()?;
    let equal = left_in_right.iter().chain(&right_in_left).all(Membership::is_member);
    Ok(IdealComparison {
        equal,
        left_in_right,
        right_in_left,
    })
}

/// One graded piece of a quotient: `Z^rank + sum Z/torsion_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedPiece {
    pub degree: u32,
    pub rank: usize,
    #[serde(with = "int_list")]
    pub torsion: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GradedStructure {
    pub degrees: Vec<GradedPiece>,
}

impl GradedStructure {
    pub fn piece(&self, d: u32) -> Option<&GradedPiece> {
        self.degrees.iter().find(|p| p.degree == d)
    }
}

/// Integers as JSON numbers when they fit in 64 bits, strings otherwise.
mod int_list {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Int(i64),
        Text(String),
    }

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            match i64::try_from(x) {
                Ok(i) => seq.serialize_element(&i)?,
                Err(_) => seq.serialize_element(&x.to_string())?,
            }
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        use serde::de::Error;
        Vec::<Repr>::deserialize(d)?
            .into_iter()
            .map(|r| match r {
                Repr::Int(i) => Ok(BigInt::from(i)),
                Repr::Text(s) => s.parse().map_err(D::Error::custom),
            })
            .collect()
    }
}

/// Graded pieces of `ring / (relations)` in degrees `0..=dmax`.
pub fn quotient_structure(ring: &Arc<RingDescriptor>, relations: &[ChowClass], dmax: u32) -> Result<GradedStructure> {
    if let Some(r) = common_ring(relations)? {
        if &r != ring {
            return Err(Error::RingMismatch {
                left: ring.to_string(),
                right: r.to_string(),
            });
        }
    }
    let degrees = (0..=dmax)
        .map(|d| {
            let basis = ring.basis(d);
            let index: HashMap<Monomial, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
            let mut matrix = Vec::new();
            for g in relations.iter().filter(|g| !g.is_zero() && g.codim() <= d) {
                for m in ring.basis(d - g.codim()) {
                    let product = ring.normal_form(&g.value().mul_monomial(&BigInt::one(), &m))?;
                    matrix.push(coordinates(&index, product.value())?);
                }
            }
            let s = snf::smith(&matrix, basis.len());
            Ok(GradedPiece {
                degree: d,
                rank: basis.len() - s.diagonal.len(),
                torsion: s.diagonal.into_iter().filter(|x| !x.is_one()).collect(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GradedStructure { degrees })
}

#[cfg(test)]
mod tests;
