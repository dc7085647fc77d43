//! Rewriting t1,t2-symmetric polynomials in the elementary symmetric
//! polynomials c1 = t1 + t2, c2 = t1*t2.

use std::collections::HashMap;

use super::monomial::{Monomial, Var};
use super::poly::Polynomial;
use crate::error::{Error, Result};

/// Expresses a symmetric polynomial in `t1, t2` as a polynomial in `c1, c2`.
///
/// Uses leading-term elimination: the leading term `a*t1^i*t2^j` of a
/// symmetric polynomial has `i >= j` and is also the leading term of
/// `a*c1^(i-j)*c2^j` expanded in the torus variables.
pub fn symmetric_rewrite(p: &Polynomial) -> Result<Polynomial> {
    if let Some(v) = p.variables().into_iter().find(|v| !v.is_torus()) {
        return Err(Error::VariableMismatch { var: v.to_string() });
    }
    if p.swap_torus() != *p {
        return Err(Error::NotSymmetric);
    }
    let mut cache = HashMap::new();
    Ok(eliminate(p.clone(), &mut cache))
}

/// Like [`symmetric_rewrite`], but torus variables may be mixed with other
/// (passive) variables such as `xi`; the coefficient of each passive
/// monomial is rewritten separately.
pub fn symmetric_rewrite_over(p: &Polynomial) -> Result<Polynomial> {
    if let Some(v) = p.variables().into_iter().find(|v| v.is_chern()) {
        return Err(Error::VariableMismatch { var: v.to_string() });
    }
    if p.swap_torus() != *p {
        return Err(Error::NotSymmetric);
    }
    let mut cache = HashMap::new();
    let mut out = Polynomial::zero();
    for (passive, coeff) in p.collect_by(|v| !v.is_torus()) {
        let rewritten = eliminate(coeff, &mut cache);
        out += &rewritten.mul_monomial(&1.into(), &passive);
    }
    Ok(out)
}

/// Back-substitution `c1 -> t1 + t2`, `c2 -> t1*t2`.
pub fn to_torus(p: &Polynomial) -> Polynomial {
    p.substitute_many(&[
        (Var::C1, Polynomial::linear(&[(1, Var::T1), (1, Var::T2)])),
        (Var::C2, Polynomial::term(1, Monomial::from_pairs([(Var::T1, 1), (Var::T2, 1)]))),
    ])
}

fn elementary_power(a: u32, b: u32, cache: &mut HashMap<(u32, u32), Polynomial>) -> Polynomial {
    cache
        .entry((a, b))
        .or_insert_with(|| {
            let e1 = Polynomial::linear(&[(1, Var::T1), (1, Var::T2)]).pow(a);
            let e2 = Monomial::from_pairs([(Var::T1, b), (Var::T2, b)]);
            e1.mul_monomial(&1.into(), &e2)
        })
        .clone()
}

fn eliminate(mut rem: Polynomial, cache: &mut HashMap<(u32, u32), Polynomial>) -> Polynomial {
    let mut out = Polynomial::zero();
    while let Some((m, c)) = rem.leading_term() {
        let (i, j) = (m.exponent(Var::T1), m.exponent(Var::T2));
        debug_assert!(i >= j, "leading term of a symmetric polynomial");
        let c = c.clone();
        let (a, b) = (i - j, j);
        rem -= &elementary_power(a, b, cache).scale(&c);
        out.add_term(c, Monomial::from_pairs([(Var::C1, a), (Var::C2, b)]));
    }
    out
}
