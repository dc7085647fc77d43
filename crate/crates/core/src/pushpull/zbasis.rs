//! Classes on `(P^1)^M` in the basis of products of point classes.
//!
//! With `z_j = xi_j - t1` (the class of the fixed point where `xi_j`
//! restricts to `t2`), the ring `A_T((P^1)^M)` is free over `Z[t1,t2]` on
//! the square-free products `z_S`, and `z_j^2 = -(t1 - t2) z_j`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use crate::chowctx::{ChowClass, RingDescriptor};
use crate::error::Result;
use crate::polyring::{torus_difference, Monomial, Polynomial, Var};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ZClass {
    factors: u32,
    terms: BTreeMap<u64, Polynomial>,
}

fn t1_power(k: u32) -> Polynomial {
    Polynomial::term(1, Monomial::power(Var::T1, k))
}

impl ZClass {
    pub fn zero(factors: u32) -> Self {
        assert!(factors <= 64, "at most 64 P^1 factors");
        ZClass {
            factors,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(factors: u32) -> Self {
        let mut z = ZClass::zero(factors);
        z.add(0, Polynomial::one());
        z
    }

    pub fn factors(&self) -> u32 {
        self.factors
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &Polynomial)> {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    pub fn add(&mut self, key: u64, coeff: Polynomial) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_default();
        *slot += &coeff;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// `sum_{j in block} z_j + shift`.
    pub fn linear(factors: u32, block: &[usize], shift: Polynomial) -> Self {
        let mut z = ZClass::zero(factors);
        z.add(0, shift);
        for &j in block {
            z.add(1 << j, Polynomial::one());
        }
        z
    }

    pub fn scale_poly(&self, f: &Polynomial) -> Self {
        let mut out = ZClass::zero(self.factors);
        for (&k, v) in &self.terms {
            out.add(k, v * f);
        }
        out
    }

    pub fn mul(&self, other: &ZClass) -> Self {
        debug_assert_eq!(self.factors, other.factors);
        let neg_u = -torus_difference();
        let max_overlap = self.factors as usize;
        let mut pows = Vec::with_capacity(max_overlap + 1);
        pows.push(Polynomial::one());
        let mut out = ZClass::zero(self.factors);
        for (&a, f) in &self.terms {
            for (&b, g) in &other.terms {
                let overlap = (a & b).count_ones() as usize;
                while pows.len() <= overlap {
                    let next = pows.last().unwrap() * &neg_u;
                    pows.push(next);
                }
                out.add(a | b, &(f * g) * &pows[overlap]);
            }
        }
        out
    }

    /// Converts a reduced class on `(P^1)^M` (multilinear in its hyperplane
    /// variables) into the product basis.
    pub fn from_chow(c: &ChowClass) -> Self {
        let vars = c.ring().xi_vars();
        let mut out = ZClass::zero(vars.len() as u32);
        for (xi_part, coeff) in c.value().collect_by(Var::is_xi) {
            let support: Vec<usize> = vars
                .iter()
                .enumerate()
                .filter(|(_, v)| xi_part.exponent(**v) > 0)
                .map(|(j, _)| j)
                .collect();
            // prod_{j in S} (z_j + t1)
            let s = support.len();
            for sub in 0u64..(1 << s) {
                let mut key = 0u64;
                for (bit, &j) in support.iter().enumerate() {
                    if sub >> bit & 1 == 1 {
                        key |= 1 << j;
                    }
                }
                let missing = s as u32 - sub.count_ones();
                out.add(key, &coeff * &t1_power(missing));
            }
        }
        out
    }

    /// Back to hyperplane variables: `z_S = prod_{j in S} (xi_j - t1)`.
    pub fn to_chow(&self, ring: &Arc<RingDescriptor>, codim: u32) -> Result<ChowClass> {
        let vars = ring.xi_vars();
        debug_assert_eq!(vars.len() as u32, self.factors);
        let mut out = Polynomial::zero();
        for (&key, coeff) in &self.terms {
            let z: Polynomial = (0..self.factors as usize)
                .filter(|j| key >> j & 1 == 1)
                .map(|j| Polynomial::linear(&[(1, vars[j]), (-1, Var::T1)]))
                .product();
            out += &(&z * coeff);
        }
        ring.class_of_degree(&out, codim)
    }

    /// Pushforward along the map doubling the marked source factors.
    ///
    /// Source factor `j` goes to one target factor, or to two consecutive
    /// ones when `doubled[j]`; on a doubled factor `1 -> z_a + z_b + (t1 - t2)`
    /// and `z -> z_a z_b`.
    pub fn diag_push(&self, doubled: &[bool]) -> Self {
        debug_assert_eq!(doubled.len() as u32, self.factors);
        let target = doubled.iter().map(|&d| if d { 2 } else { 1 }).sum::<u32>();
        let u = torus_difference();
        let mut upow: Vec<Polynomial> = vec![Polynomial::one()];
        let mut out = ZClass::zero(target);
        for (&key, coeff) in &self.terms {
            // partial expansions: (target key, exponent of u)
            let mut partial: Vec<(u64, u32)> = vec![(0, 0)];
            let mut pos = 0usize;
            for (j, &dbl) in doubled.iter().enumerate() {
                let inside = key >> j & 1 == 1;
                match (dbl, inside) {
                    (false, false) => {}
                    (false, true) => partial.iter_mut().for_each(|p| p.0 |= 1 << pos),
                    (true, true) => partial.iter_mut().for_each(|p| p.0 |= 0b11 << pos),
                    (true, false) => {
                        let mut next = Vec::with_capacity(partial.len() * 3);
                        for &(k, e) in &partial {
                            next.push((k | 1 << pos, e));
                            next.push((k | 1 << (pos + 1), e));
                            next.push((k, e + 1));
                        }
                        partial = next;
                    }
                }
                pos += if dbl { 2 } else { 1 };
            }
            for (k, e) in partial {
                while upow.len() <= e as usize {
                    let next = upow.last().unwrap() * &u;
                    upow.push(next);
                }
                out.add(k, coeff * &upow[e as usize]);
            }
        }
        out
    }

    /// Pushforward along a product of multiplication maps, one per block
    /// of factors. Each block is given with the hyperplane classes
    /// `h_0, ..., h_n` of its target `P^n`, and
    /// `z_A -> (n - |A|)! h_0 ... h_{|A|-1}` blockwise. The blocks must
    /// partition the factors.
    pub fn multiplication_push(&self, blocks: &[(Vec<usize>, Vec<Polynomial>)]) -> Polynomial {
        debug_assert_eq!(
            blocks.iter().map(|b| b.0.len() as u32).sum::<u32>(),
            self.factors
        );
        let prepared: Vec<(u64, Vec<Polynomial>)> = blocks
            .iter()
            .map(|(block, hyps)| {
                let n = block.len();
                let mask = block.iter().map(|&j| 1u64 << j).sum();
                let weighted = partial_products(hyps, n)
                    .into_iter()
                    .enumerate()
                    .map(|(k, h)| h.scale(&factorial(n - k)))
                    .collect();
                (mask, weighted)
            })
            .collect();
        // group by the block profile first so each product is formed once
        let mut by_profile: BTreeMap<Vec<usize>, Polynomial> = BTreeMap::new();
        for (&key, coeff) in &self.terms {
            let profile = prepared
                .iter()
                .map(|(mask, _)| (key & mask).count_ones() as usize)
                .collect();
            *by_profile.entry(profile).or_default() += coeff;
        }
        let mut out = Polynomial::zero();
        for (profile, coeff) in by_profile {
            let mut term = coeff;
            for ((_, weighted), k) in prepared.iter().zip(profile) {
                term = &term * &weighted[k];
            }
            out += &term;
        }
        out
    }
}

/// `[1, h_0, h_0 h_1, ..., h_0 ... h_{n-1}]`
fn partial_products(hyperplanes: &[Polynomial], n: usize) -> Vec<Polynomial> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(Polynomial::one());
    for h in hyperplanes.iter().take(n) {
        let next = out.last().unwrap() * h;
        out.push(next);
    }
    out
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chowctx::{p1_power, Flavor};

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn square_of_point_class() {
        let z = ZClass::linear(1, &[0], Polynomial::zero());
        let sq = z.mul(&z);
        assert_eq!(sq, ZClass::linear(1, &[0], Polynomial::zero()).scale_poly(&p("t2 - t1")));
    }

    #[test]
    fn chow_roundtrip() {
        let ring = p1_power(Flavor::T, 3).unwrap();
        let c = ring.normal_form(&p("xi_1*xi_2*xi_3 - 2*t2*xi_1*xi_3 + t1^2*xi_2")).unwrap();
        let z = ZClass::from_chow(&c);
        assert_eq!(z.to_chow(&ring, 3).unwrap(), c);
    }

    #[test]
    fn diagonal_rules() {
        let one = ZClass::one(1);
        let pushed = one.diag_push(&[true]);
        assert_eq!(pushed, ZClass::linear(2, &[0, 1], p("t1 - t2")));
        let z = ZClass::linear(1, &[0], Polynomial::zero());
        let mut expect = ZClass::zero(2);
        expect.add(0b11, Polynomial::one());
        assert_eq!(z.diag_push(&[true]), expect);
    }
}
