use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, Var};
use crate::error::{Error, Result};

/// Exact multivariate polynomial with arbitrary-precision integer
/// coefficients.
///
/// Terms are kept in a `BTreeMap` keyed by [`Monomial`], so the map order is
/// the graded lexicographic term order and zero coefficients never appear.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Polynomial::term(c, Monomial::one())
    }

    pub fn var(v: Var) -> Self {
        Polynomial::term(1, Monomial::var(v))
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    /// Sum of `c * v` over the given pairs, a convenient way to write linear forms.
    pub fn linear(parts: &[(i64, Var)]) -> Self {
        let mut p = Polynomial::zero();
        for &(c, v) in parts {
            p.add_term(BigInt::from(c), Monomial::var(v));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending term order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in canonical (descending) order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&Monomial::one())
    }

    pub fn add_term(&mut self, c: BigInt, m: Monomial) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.iter().map(|(v, _)| v)).collect()
    }

    /// Largest weighted degree of a term, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The zero polynomial counts as homogeneous of every degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, c: &BigInt, mono: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (m.mul(mono), a * c)).collect(),
        }
    }

    /// Divides every coefficient by `d`, or returns `None` if some
    /// coefficient is not a multiple of `d`.
    pub fn div_exact(&self, d: &BigInt) -> Option<Polynomial> {
        if d.is_zero() {
            return None;
        }
        let mut terms = BTreeMap::new();
        for (m, a) in &self.terms {
            let (q, r) = a.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            terms.insert(m.clone(), q);
        }
        Some(Polynomial { terms })
    }

    /// Gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, a| g.gcd(a))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact `p op q`, refusing inputs that use a variable outside `allowed`.
    pub fn arith(p: &Polynomial, q: &Polynomial, op: ArithOp, allowed: &[Var]) -> Result<Polynomial> {
        for v in p.variables().into_iter().chain(q.variables()) {
            if !allowed.contains(&v) {
                return Err(Error::VariableMismatch { var: v.to_string() });
            }
        }
        Ok(match op {
            ArithOp::Add => p + q,
            ArithOp::Sub => p - q,
            ArithOp::Mul => p * q,
        })
    }

    /// Replaces `var` by `value`. The value must be homogeneous of the
    /// same degree as `var`, which keeps homogeneous inputs homogeneous.
    pub fn substitute(&self, var: Var, value: &Polynomial) -> Result<Polynomial> {
        if !value.is_homogeneous_of(var.degree()) {
            let found = value.total_degree().unwrap_or(0);
            return Err(Error::DegreeMismatch {
                expected: var.degree(),
                found: if value.is_homogeneous() { found } else { u32::MAX },
            });
        }
        Ok(self.substitute_many(&[(var, value.clone())]))
    }

    /// Simultaneous substitution of several variables; variables without an
    /// image are left alone. No degree checks.
    pub fn substitute_many(&self, images: &[(Var, Polynomial)]) -> Polynomial {
        let mut powers: HashMap<(Var, u32), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut kept = Monomial::one();
            let mut acc = Polynomial::term(c.clone(), Monomial::one());
            for (v, e) in m.iter() {
                match images.iter().find(|(w, _)| *w == v) {
                    Some((_, img)) => {
                        let pw = powers.entry((v, e)).or_insert_with(|| img.pow(e));
                        acc = &acc * &*pw;
                    }
                    None => kept = kept.mul(&Monomial::power(v, e)),
                }
            }
            out += &acc.mul_monomial(&BigInt::one(), &kept);
        }
        out
    }

    /// Renames variables (an injective relabeling on the variables present).
    pub fn rename(&self, f: impl Fn(Var) -> Var + Copy) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            out.add_term(c.clone(), m.rename(f));
        }
        out
    }

    /// Image under the Weyl involution t1 <-> t2.
    pub fn swap_torus(&self) -> Polynomial {
        self.rename(|v| match v {
            Var::T1 => Var::T2,
            Var::T2 => Var::T1,
            other => other,
        })
    }

    /// Groups terms by the part of the monomial built from variables
    /// satisfying `pred`; each group maps to its cofactor polynomial.
    pub fn collect_by(&self, pred: impl Fn(Var) -> bool + Copy) -> BTreeMap<Monomial, Polynomial> {
        let mut out: BTreeMap<Monomial, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (key, rest) = m.partition(pred);
            out.entry(key).or_default().add_term(c.clone(), rest);
        }
        out
    }

    /// Coefficient of `v^k`, as a polynomial in the remaining variables.
    pub fn coeff_of_power(&self, v: Var, k: u32) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(v);
            if e == k {
                out.add_term(c.clone(), rest);
            }
        }
        out
    }

    /// Sign of the leading coefficient.
    pub fn leading_sign(&self) -> i32 {
        match self.leading_term() {
            Some((_, c)) if c.is_negative() => -1,
            Some(_) => 1,
            None => 0,
        }
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Polynomial::constant(c)
    }
}

impl From<Var> for Polynomial {
    fn from(v: Var) -> Self {
        Polynomial::var(v)
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(c.clone(), m.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(-c, m.clone());
        }
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(self.len() * rhs.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        Polynomial {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &Polynomial) -> Polynomial {
                (&self).$f(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        let mut acc = Polynomial::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl std::iter::Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::one(), |a, b| &a * &b)
    }
}

impl<'a> std::iter::Product<&'a Polynomial> for Polynomial {
    fn product<I: Iterator<Item = &'a Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::one(), |a, b| &a * b)
    }
}
