//! Integral pullbacks and pushforwards along the maps relating `P^N`, its
//! stratification by forms with square factors, and products of `P^1`.
//!
//! Every pushforward is computed from two integral rules on
//! `A_T((P^1)^M)`: the diagonal `P^1 -> P^1 x P^1` and the multiplication
//! map `(P^1)^N -> P^N`. The stratum maps `pi_r: P^r x P^(N-2r) -> P^N`,
//! `(f, g) -> f^2 g`, are reached through
//! `r! (N-2r)! pi_r* = rho_* delta_* mu^*`, followed by an exact division that
//! torsion-freeness of `A_T(P^N)` guarantees.

mod zbasis;

use std::sync::Arc;

use num_bigint::BigInt;

use crate::chowctx::{self, hyperplane, hyperplane_r, ChowClass, Factor, Flavor, RingDescriptor};
use crate::error::{Error, Result};
use crate::polyring::{Polynomial, Var};

pub(crate) use zbasis::factorial;
use zbasis::ZClass;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapKind {
    /// `P^1 -> P^1 x P^1`
    Diag,
    /// `(P^1)^M -> (P^1)^(M + |doubled|)`, diagonal on the marked factors.
    PartialDiag { doubled: Vec<usize> },
    /// Multiplication `(P^1)^N -> P^N`.
    Rho { n: u32 },
    /// Multiplication on two blocks, `(P^1)^r x (P^1)^s -> P^r x P^s`.
    Mu { r: u32, s: u32 },
    /// `P^r x P^(N-2r) -> P^N`, `(f, g) -> f^2 g`.
    PiR { r: u32, n: u32 },
}

/// A map between two of the rings above, with its generic degree.
///
/// For `PiR` the stored degree is that of the lift `rho . delta` over
/// `pi_r . mu`, i.e. `r! (N-2r)!`, which is the divisor used when pushing.
#[derive(Clone, Debug)]
pub struct MapDescriptor {
    pub kind: MapKind,
    pub source: Arc<RingDescriptor>,
    pub target: Arc<RingDescriptor>,
    pub degree: BigInt,
}

fn range_err(what: &'static str, index: u32, lo: u32, hi: u32) -> Error {
    Error::IndexOutOfRange {
        what,
        index: index.into(),
        lo: lo.into(),
        hi: hi.into(),
    }
}

impl MapDescriptor {
    pub fn diag() -> Self {
        MapDescriptor {
            kind: MapKind::Diag,
            source: chowctx::projective(Flavor::T, 1),
            target: chowctx::p1_power(Flavor::T, 2).expect("valid"),
            degree: BigInt::from(1),
        }
    }

    pub fn partial_diag(source_factors: u32, doubled: &[usize]) -> Result<Self> {
        let mut marks = doubled.to_vec();
        marks.sort_unstable();
        marks.dedup();
        if marks.len() != doubled.len() {
            return Err(Error::InvalidParameter("repeated doubled factor".into()));
        }
        if let Some(&j) = marks.iter().find(|&&j| j as u32 >= source_factors) {
            return Err(range_err("doubled factor", j as u32, 0, source_factors.saturating_sub(1)));
        }
        let target = source_factors + marks.len() as u32;
        if target > 64 {
            return Err(Error::InvalidParameter("too many P^1 factors".into()));
        }
        Ok(MapDescriptor {
            kind: MapKind::PartialDiag { doubled: marks },
            source: chowctx::p1_power(Flavor::T, source_factors)?,
            target: chowctx::p1_power(Flavor::T, target)?,
            degree: BigInt::from(1),
        })
    }

    pub fn rho(n: u32) -> Result<Self> {
        if n == 0 || n > 64 {
            return Err(range_err("N", n, 1, 64));
        }
        Ok(MapDescriptor {
            kind: MapKind::Rho { n },
            source: chowctx::p1_power(Flavor::T, n)?,
            target: chowctx::projective(Flavor::T, n),
            degree: factorial(n as usize),
        })
    }

    pub fn mu(r: u32, s: u32) -> Result<Self> {
        if r == 0 || r + s > 64 {
            return Err(Error::InvalidParameter(format!("mu({r}, {s})")));
        }
        Ok(MapDescriptor {
            kind: MapKind::Mu { r, s },
            source: chowctx::p1_power(Flavor::T, r + s)?,
            target: chowctx::make_ring(Flavor::T, &[Factor::Projective(r), Factor::Projective(s)])?,
            degree: factorial(r as usize) * factorial(s as usize),
        })
    }

    pub fn pi_r(r: u32, n: u32) -> Result<Self> {
        if r == 0 || 2 * r > n || n - r > 64 {
            return Err(range_err("r", r, 1, n / 2));
        }
        Ok(MapDescriptor {
            kind: MapKind::PiR { r, n },
            source: chowctx::pi_source(Flavor::T, r, n)?,
            target: chowctx::projective(Flavor::T, n),
            degree: factorial(r as usize) * factorial((n - 2 * r) as usize),
        })
    }

    /// Pushforward of a class on the source.
    pub fn push(&self, c: &ChowClass) -> Result<ChowClass> {
        expect_ring(c, &self.source)?;
        match &self.kind {
            MapKind::Diag => diag_push(c),
            MapKind::PartialDiag { doubled } => partial_diag_push(c, doubled),
            MapKind::Rho { .. } => rho_push(c),
            MapKind::Mu { r, s } => mu_push(c, *r, *s),
            MapKind::PiR { .. } => pi_r_push(c),
        }
    }

    /// Pullback of a class on the target.
    pub fn pull(&self, c: &ChowClass) -> Result<ChowClass> {
        expect_ring(c, &self.target)?;
        let image = match &self.kind {
            MapKind::Diag => vec![(Var::XiFactor(1), Polynomial::var(Var::Xi)), (Var::XiFactor(2), Polynomial::var(Var::Xi))],
            MapKind::PartialDiag { doubled } => {
                let svars = self.source.xi_vars();
                let tvars = self.target.xi_vars();
                let mut images = Vec::with_capacity(tvars.len());
                let mut pos = 0;
                for (j, sv) in svars.iter().enumerate() {
                    images.push((tvars[pos], Polynomial::var(*sv)));
                    pos += 1;
                    if doubled.contains(&j) {
                        images.push((tvars[pos], Polynomial::var(*sv)));
                        pos += 1;
                    }
                }
                images
            }
            MapKind::Rho { .. } => return rho_pullback(c),
            MapKind::Mu { r, s } => {
                let svars = self.source.xi_vars();
                let sum = |range: std::ops::Range<usize>| -> Polynomial {
                    range.map(|j| Polynomial::var(svars[j])).sum()
                };
                let (r, s) = (*r as usize, *s as usize);
                vec![(Var::XiFactor(1), sum(0..r)), (Var::XiFactor(2), sum(r..r + s))]
            }
            MapKind::PiR { r, .. } => return pi_r_pullback(c, *r),
        };
        self.source
            .class_of_degree(&c.value().substitute_many(&image), c.codim())
    }
}

fn expect_ring(c: &ChowClass, ring: &Arc<RingDescriptor>) -> Result<()> {
    if c.ring() != ring {
        return Err(Error::WrongRing {
            expected: ring.to_string(),
            found: c.ring().to_string(),
        });
    }
    Ok(())
}

fn p1_factors(c: &ChowClass) -> Result<u32> {
    match (c.ring().flavor(), c.ring().p1_power()) {
        (Flavor::T, Some(k)) => Ok(k),
        _ => Err(Error::WrongRing {
            expected: "A_T((P^1)^k)".into(),
            found: c.ring().to_string(),
        }),
    }
}

/// Pushforward along the diagonal `P^1 -> P^1 x P^1`:
/// `1 -> xi_1 + xi_2 - t1 - t2` and `[0] = xi - t1 -> (xi_1 - t1)(xi_2 - t1)`,
/// extended linearly over `Z[t1, t2]`.
pub fn diag_push(c: &ChowClass) -> Result<ChowClass> {
    if p1_factors(c)? != 1 {
        return Err(Error::WrongRing {
            expected: "A_T(P^1)".into(),
            found: c.ring().to_string(),
        });
    }
    partial_diag_push(c, &[0])
}

/// Pushforward along the map `(P^1)^M -> (P^1)^(M+|doubled|)` that is the
/// diagonal on the `doubled` factors and the identity elsewhere. Doubled
/// factors land on consecutive target factors, in source order.
pub fn partial_diag_push(c: &ChowClass, doubled: &[usize]) -> Result<ChowClass> {
    let m = p1_factors(c)?;
    let map = MapDescriptor::partial_diag(m, doubled)?;
    let marks: Vec<bool> = (0..m as usize).map(|j| doubled.contains(&j)).collect();
    let pushed = ZClass::from_chow(c).diag_push(&marks);
    pushed.to_chow(&map.target, c.codim() + doubled.len() as u32)
}

fn hyperplanes_of(n: u32) -> Vec<Polynomial> {
    let ring = chowctx::projective(Flavor::T, n);
    (0..=n)
        .map(|i| hyperplane(&ring, i).expect("index in range").into_value())
        .collect()
}

fn hyperplanes_on_factor(ring: &Arc<RingDescriptor>, factor: usize, n: u32) -> Vec<Polynomial> {
    (0..=n)
        .map(|i| ring.hyperplane_on(factor, i).expect("index in range").into_value())
        .collect()
}

/// Pushforward along the multiplication map `rho: (P^1)^N -> P^N`:
/// `prod_{j in A} (xi_j - t1) -> (N - |A|)! h_0 ... h_{|A|-1}`.
pub fn rho_push(c: &ChowClass) -> Result<ChowClass> {
    let n = p1_factors(c)?;
    let target = chowctx::projective(Flavor::T, n);
    let z = ZClass::from_chow(c);
    push_z_to_projective(&z, &target, c.codim())
}

fn push_z_to_projective(z: &ZClass, target: &Arc<RingDescriptor>, codim: u32) -> Result<ChowClass> {
    let n = z.factors();
    let block: Vec<usize> = (0..n as usize).collect();
    let raw = z.multiplication_push(&[(block, hyperplanes_of(n))]);
    target.class_of_degree(&raw, codim)
}

/// Pullback along `rho`: `xi -> xi_1 + ... + xi_N`.
pub fn rho_pullback(c: &ChowClass) -> Result<ChowClass> {
    let n = match (c.ring().flavor(), c.ring().single_projective()) {
        (Flavor::T, Some(n)) => n,
        _ => {
            return Err(Error::WrongRing {
                expected: "A_T(P^N)".into(),
                found: c.ring().to_string(),
            })
        }
    };
    let source = chowctx::p1_power(Flavor::T, n)?;
    let sum: Polynomial = source.xi_vars().into_iter().map(Polynomial::var).sum();
    source.class_of_degree(&c.value().substitute_many(&[(Var::Xi, sum)]), c.codim())
}

/// Pushforward along `mu: (P^1)^r x (P^1)^s -> P^r x P^s`.
pub fn mu_push(c: &ChowClass, r: u32, s: u32) -> Result<ChowClass> {
    let map = MapDescriptor::mu(r, s)?;
    expect_ring(c, &map.source)?;
    let z = ZClass::from_chow(c);
    let blocks = vec![
        ((0..r as usize).collect(), hyperplanes_on_factor(&map.target, 0, r)),
        ((r as usize..(r + s) as usize).collect(), hyperplanes_on_factor(&map.target, 1, s)),
    ];
    let raw = z.multiplication_push(&blocks);
    map.target.class_of_degree(&raw, c.codim())
}

/// The shape `(r, N)` of a class on `P^r x P^(N-2r)`.
fn pi_shape(ring: &RingDescriptor) -> Result<(u32, u32)> {
    match ring.factors() {
        [Factor::Projective(r), Factor::Projective(s)] if *r >= 1 => Ok((*r, 2 * r + s)),
        _ => Err(Error::WrongRing {
            expected: "A(P^r x P^(N-2r))".into(),
            found: ring.to_string(),
        }),
    }
}

/// `mu^*` straight into the product basis on `(P^1)^(N-r)`: the first `r`
/// factors cover `P^r` and the remaining `N-2r` cover `P^(N-2r)`.
fn mu_pullback_z(c: &ChowClass, r: u32, n: u32) -> ZClass {
    let m = n - r;
    let s = n - 2 * r;
    let block1: Vec<usize> = (0..r as usize).collect();
    let block2: Vec<usize> = (r as usize..m as usize).collect();
    let t1 = |k: u32| Polynomial::linear(&[(k.into(), Var::T1)]);
    let base1 = ZClass::linear(m, &block1, t1(r));
    let base2 = ZClass::linear(m, &block2, t1(s));
    let mut pow1 = vec![ZClass::one(m)];
    let mut pow2 = vec![ZClass::one(m)];
    let mut out = ZClass::zero(m);
    for (xi_part, coeff) in c.value().collect_by(Var::is_xi) {
        let a = xi_part.exponent(Var::XiFactor(1)) as usize;
        let b = xi_part.exponent(Var::XiFactor(2)) as usize;
        while pow1.len() <= a {
            let next = pow1.last().unwrap().mul(&base1);
            pow1.push(next);
        }
        while pow2.len() <= b {
            let next = pow2.last().unwrap().mul(&base2);
            pow2.push(next);
        }
        let term = pow1[a].mul(&pow2[b]).scale_poly(&coeff);
        for (k, v) in term.terms() {
            out.add(k, v.clone());
        }
    }
    out
}

/// `mu^*` for the factorization of `pi_r`, as a class on `(P^1)^(N-r)`.
pub fn mu_pullback(c: &ChowClass) -> Result<ChowClass> {
    let (r, n) = pi_shape(c.ring())?;
    if c.ring().flavor() != Flavor::T {
        return Err(Error::NotTorus);
    }
    let target = chowctx::p1_power(Flavor::T, n - r)?;
    mu_pullback_z(c, r, n).to_chow(&target, c.codim())
}

/// `rho_* delta_* mu^* c`, which equals `r! (N-2r)! pi_r*(c)`.
pub fn pi_r_push_undivided(c: &ChowClass) -> Result<ChowClass> {
    let (r, n) = pi_shape(c.ring())?;
    if c.ring().flavor() == Flavor::GL2 {
        return pi_r_push_undivided(&c.to_torus()?)?.to_gl2();
    }
    let target = chowctx::projective(Flavor::T, n);
    let lifted = mu_pullback_z(c, r, n);
    let marks: Vec<bool> = (0..(n - r) as usize).map(|j| j < r as usize).collect();
    let doubled = lifted.diag_push(&marks);
    push_z_to_projective(&doubled, &target, c.codim() + r)
}

/// Pushforward along `pi_r: P^r x P^(N-2r) -> P^N`.
///
/// Computes `rho_* delta_* mu^* c = r!(N-2r)! pi_r*(c)` and divides exactly.
/// GL2 classes are pushed through their torus restriction and descended
/// again.
pub fn pi_r_push(c: &ChowClass) -> Result<ChowClass> {
    let (r, n) = pi_shape(c.ring())?;
    let degree = factorial(r as usize) * factorial((n - 2 * r) as usize);
    pi_r_push_undivided(c)?
        .div_exact(&degree)
        .ok_or_else(|| Error::ExactDivisionFailure {
            divisor: degree.to_string(),
        })
}

/// Pullback along `pi_r`: the ring map `xi -> 2 xi_{r,1} + xi_{N-2r,2}`.
pub fn pi_r_pullback(c: &ChowClass, r: u32) -> Result<ChowClass> {
    let n = c.ring().single_projective().ok_or_else(|| Error::WrongRing {
        expected: "A(P^N)".into(),
        found: c.ring().to_string(),
    })?;
    let source = chowctx::pi_source(c.ring().flavor(), r, n)?;
    let image = Polynomial::linear(&[(2, Var::XiFactor(1)), (1, Var::XiFactor(2))]);
    source.class_of_degree(&c.value().substitute_many(&[(Var::Xi, image)]), c.codim())
}

fn check_r(r: u32, n: u32) -> Result<()> {
    if r == 0 || 2 * r > n {
        return Err(range_err("r", r, 1, n / 2));
    }
    Ok(())
}

/// `alpha_{r,i} = pi_r*(xi_{r,1}^i)` in `A_T(P^N)`.
pub fn alpha(r: u32, i: u32, n: u32) -> Result<ChowClass> {
    check_r(r, n)?;
    if i > r {
        return Err(range_err("i", i, 0, r));
    }
    let src = chowctx::pi_source(Flavor::T, r, n)?;
    pi_r_push(&src.gen(Var::XiFactor(1))?.pow(i))
}

/// `beta_{r,m} = pi_r*(h_{0,r} ... h_{m,r})` in `A_T(P^N)`.
pub fn beta(r: u32, m: u32, n: u32) -> Result<ChowClass> {
    check_r(r, n)?;
    if m >= r {
        return Err(range_err("m", m, 0, r - 1));
    }
    let src = chowctx::pi_source(Flavor::T, r, n)?;
    let mut c = src.one();
    for k in 0..=m {
        c = c.mul(&hyperplane_r(&src, r, k)?)?;
    }
    pi_r_push(&c)
}

#[cfg(test)]
mod tests;
