//! Torus fixed points and rational localization.
//!
//! This is an independent oracle for the integral pushforward rules: a
//! class is determined by its restrictions to the finitely many fixed
//! points, and pushforwards can be computed there by the localization
//! formula over the fraction field of `Z[t1, t2]`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::chowctx::{ChowClass, Flavor, RingDescriptor};
use crate::error::{Error, Result};
use crate::polyring::{torus_difference, Monomial, Polynomial, Var};
use crate::pushpull::{MapDescriptor, MapKind};

/// One fixed point of a product of projective spaces: an index per
/// hyperplane slot, `e_i` being the point where only `X_i` is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPoint {
    pub index: Vec<u32>,
    /// restriction of each hyperplane variable, `(n - i) t1 + i t2`
    pub xi_restriction: Vec<(Var, Polynomial)>,
    /// tangent weights `(j - i)(t1 - t2)`, `j != i`, over all slots
    pub tangent_weights: Vec<Polynomial>,
}

impl FixedPoint {
    pub fn euler_class(&self) -> Polynomial {
        self.tangent_weights.iter().product()
    }
}

#[derive(Clone, Debug)]
pub struct FixedPointProfile {
    ring: Arc<RingDescriptor>,
    points: Vec<FixedPoint>,
}

impl FixedPointProfile {
    pub fn of(ring: &Arc<RingDescriptor>) -> Result<Self> {
        if ring.flavor() != Flavor::T {
            return Err(Error::NotTorus);
        }
        let slots: Vec<(Var, u32)> = ring
            .xi_vars()
            .into_iter()
            .map(|v| (v, ring.slot_dim(v).expect("hyperplane variable")))
            .collect();
        let u = torus_difference();
        let mut indices: Vec<Vec<u32>> = vec![vec![]];
        for &(_, n) in &slots {
            indices = indices
                .into_iter()
                .flat_map(|prefix| {
                    (0..=n).map(move |i| {
                        let mut next = prefix.clone();
                        next.push(i);
                        next
                    })
                })
                .collect();
        }
        let points = indices
            .into_iter()
            .map(|index| {
                let mut xi_restriction = Vec::new();
                let mut tangent_weights = Vec::new();
                for (&(v, n), &i) in slots.iter().zip(&index) {
                    let w = Polynomial::linear(&[(i64::from(n - i), Var::T1), (i64::from(i), Var::T2)]);
                    xi_restriction.push((v, w));
                    for j in (0..=n).filter(|&j| j != i) {
                        tangent_weights.push(u.scale(&BigInt::from(i64::from(j) - i64::from(i))));
                    }
                }
                FixedPoint {
                    index,
                    xi_restriction,
                    tangent_weights,
                }
            })
            .collect();
        Ok(FixedPointProfile {
            ring: ring.clone(),
            points,
        })
    }

    pub fn ring(&self) -> &Arc<RingDescriptor> {
        &self.ring
    }

    pub fn points(&self) -> &[FixedPoint] {
        &self.points
    }

    pub fn position(&self, index: &[u32]) -> Option<usize> {
        self.points.iter().position(|p| p.index == index)
    }

    fn restrict_poly(&self, p: &Polynomial) -> Vec<Polynomial> {
        self.points
            .iter()
            .map(|pt| p.substitute_many(&pt.xi_restriction))
            .collect()
    }
}

/// Restrictions of a torus class to every fixed point of its ring, in the
/// order of [`FixedPointProfile::points`].
pub fn restrict(c: &ChowClass) -> Result<Vec<Polynomial>> {
    Ok(FixedPointProfile::of(c.ring())?.restrict_poly(c.value()))
}

/// A fraction of polynomials in `t1, t2`, compared by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

/// `p = c * q` with `c` a positive integer and `q` having positive leading
/// coefficient.
fn split_content(p: &Polynomial) -> (BigInt, Polynomial) {
    let c = p.content();
    let sign = BigInt::from(p.leading_sign());
    (c.clone(), p.div_exact(&(c * sign)).expect("content divides"))
}

/// Coefficients of a form of degree `d` in `t1, t2`, indexed by the `t1`
/// exponent.
fn torus_coeffs(p: &Polynomial, d: u32) -> Option<Vec<BigInt>> {
    let mut out = vec![BigInt::zero(); d as usize + 1];
    for (m, c) in p.iter() {
        let k = m.exponent(Var::T1);
        if k + m.exponent(Var::T2) != m.degree() || m.degree() != d {
            return None;
        }
        out[k as usize] = c.clone();
    }
    Some(out)
}

/// `num / den` for forms in `t1, t2`, when the quotient has integer
/// coefficients.
fn div_forms(num: &Polynomial, den: &Polynomial) -> Option<Polynomial> {
    if num.is_zero() {
        return Some(Polynomial::zero());
    }
    let (dn, dd) = (num.total_degree()?, den.total_degree()?);
    let dq = dn.checked_sub(dd)?;
    let a = torus_coeffs(num, dn)?;
    let c = torus_coeffs(den, dd)?;
    let i0 = c.iter().position(|x| !x.is_zero())?;
    let mut b = vec![BigInt::zero(); dq as usize + 1];
    for j in 0..b.len() {
        let mut r = a.get(j + i0)?.clone();
        for (l, bl) in b.iter().enumerate().take(j) {
            if let Some(cl) = c.get(j + i0 - l) {
                r -= bl * cl;
            }
        }
        let (q, rem) = r.div_rem(&c[i0]);
        if !rem.is_zero() {
            return None;
        }
        b[j] = q;
    }
    let mut quotient = Polynomial::zero();
    for (k, bk) in b.into_iter().enumerate() {
        let m = Monomial::from_pairs([(Var::T1, k as u32), (Var::T2, dq - k as u32)]);
        quotient.add_term(bk, m);
    }
    (&quotient * den == *num).then_some(quotient)
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidParameter("zero denominator".into()));
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn zero() -> Self {
        RationalFunction::from_poly(Polynomial::zero())
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn add(&self, other: &RationalFunction) -> RationalFunction {
        if self.num.is_zero() {
            return other.clone();
        }
        if other.num.is_zero() {
            return self.clone();
        }
        let (c1, q1) = split_content(&self.den);
        let (c2, q2) = split_content(&other.den);
        if q1 == q2 {
            // same primitive part: only the integer parts need a common multiple
            let l = c1.lcm(&c2);
            let s1 = BigInt::from(self.den.leading_sign()) * (&l / &c1);
            let s2 = BigInt::from(other.den.leading_sign()) * (&l / &c2);
            return RationalFunction {
                num: self.num.scale(&s1) + other.num.scale(&s2),
                den: q1.scale(&l),
            };
        }
        RationalFunction {
            num: &self.num * &other.den + &other.num * &self.den,
            den: &self.den * &other.den,
        }
    }

    pub fn mul_poly(&self, p: &Polynomial) -> RationalFunction {
        RationalFunction {
            num: &self.num * p,
            den: self.den.clone(),
        }
    }

    /// The polynomial this fraction equals, if the denominator divides the
    /// numerator.
    pub fn as_polynomial(&self) -> Option<Polynomial> {
        if self.den == Polynomial::one() {
            return Some(self.num.clone());
        }
        div_forms(&self.num, &self.den)
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFunction {}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

fn image_index(kind: &MapKind, index: &[u32]) -> Vec<u32> {
    match kind {
        MapKind::Diag => vec![index[0], index[0]],
        MapKind::PartialDiag { doubled } => {
            let mut out = Vec::new();
            for (j, &i) in index.iter().enumerate() {
                out.push(i);
                if doubled.contains(&j) {
                    out.push(i);
                }
            }
            out
        }
        MapKind::Rho { .. } => vec![index.iter().sum()],
        MapKind::Mu { r, .. } => {
            let (a, b) = index.split_at(*r as usize);
            vec![a.iter().sum(), b.iter().sum()]
        }
        MapKind::PiR { .. } => vec![2 * index[0] + index[1]],
    }
}

/// Pushforward by localization: at a fixed point `q` of the target,
/// `(f_* c)|_q = sum_{f(p) = q} c|_p e(T_q Y) / e(T_p X)`.
pub fn localized_push(map: &MapDescriptor, c: &ChowClass) -> Result<Vec<RationalFunction>> {
    if c.ring() != &map.source {
        return Err(Error::WrongRing {
            expected: map.source.to_string(),
            found: c.ring().to_string(),
        });
    }
    let src = FixedPointProfile::of(&map.source)?;
    let tgt = FixedPointProfile::of(&map.target)?;
    let restricted = src.restrict_poly(c.value());
    let mut out = vec![RationalFunction::zero(); tgt.points.len()];
    for (p, value) in src.points.iter().zip(restricted) {
        let q = tgt
            .position(&image_index(&map.kind, &p.index))
            .ok_or_else(|| Error::Internal("fixed point maps outside the target".into()))?;
        let euler = p.euler_class();
        if euler.is_zero() {
            return Err(Error::Internal("zero tangent weight".into()));
        }
        let term = RationalFunction::new(value * tgt.points[q].euler_class(), euler)?;
        out[q] = out[q].add(&term);
    }
    Ok(out)
}

/// `sum_p c|_p / e(T_p)`, the equivariant integral over the whole space.
pub fn integrate(c: &ChowClass) -> Result<RationalFunction> {
    let profile = FixedPointProfile::of(c.ring())?;
    let mut acc = RationalFunction::zero();
    for (p, value) in profile.points.iter().zip(profile.restrict_poly(c.value())) {
        acc = acc.add(&RationalFunction::new(value, p.euler_class())?);
    }
    Ok(acc)
}
