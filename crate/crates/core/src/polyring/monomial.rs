use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// A ring generator.
///
/// The derived order is the variable precedence used by the term order:
/// earlier variants are more significant. Factor hyperplane classes
/// `xi_j` sort by their index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    /// Hyperplane class of the single projective factor of a ring.
    Xi,
    /// Hyperplane class of factor `j` (1-based) of a product ring.
    XiFactor(u16),
    T1,
    T2,
    C1,
    C2,
}

impl Var {
    /// Cohomological degree of the generator.
    pub fn degree(self) -> u32 {
        match self {
            Var::C2 => 2,
            _ => 1,
        }
    }

    pub fn is_xi(self) -> bool {
        matches!(self, Var::Xi | Var::XiFactor(_))
    }

    pub fn is_torus(self) -> bool {
        matches!(self, Var::T1 | Var::T2)
    }

    pub fn is_chern(self) -> bool {
        matches!(self, Var::C1 | Var::C2)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Xi => f.write_str("xi"),
            Var::XiFactor(j) => write!(f, "xi_{j}"),
            Var::T1 => f.write_str("t1"),
            Var::T2 => f.write_str("t2"),
            Var::C1 => f.write_str("c1"),
            Var::C2 => f.write_str("c2"),
        }
    }
}

/// A power product of generators, stored sparsely and sorted by [`Var`].
///
/// Zero exponents are never stored. Monomials are ordered graded
/// lexicographically: weighted degree first, then exponent of the most
/// significant variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: SmallVec<[(Var, u32); 4]>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var) -> Self {
        Monomial::power(v, 1)
    }

    pub fn power(v: Var, e: u32) -> Self {
        let mut factors = SmallVec::new();
        if e > 0 {
            factors.push((v, e));
        }
        Monomial { factors }
    }

    /// Builds a monomial from arbitrary `(var, exponent)` pairs, merging
    /// repeats and dropping zero exponents.
    pub fn from_pairs<I: IntoIterator<Item = (Var, u32)>>(pairs: I) -> Self {
        let mut factors: SmallVec<[(Var, u32); 4]> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        factors.sort_by_key(|p| p.0);
        let mut merged: SmallVec<[(Var, u32); 4]> = SmallVec::new();
        for (v, e) in factors {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => merged.push((v, e)),
            }
        }
        Monomial { factors: merged }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.factors
            .binary_search_by_key(&v, |p| p.0)
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.factors.iter().copied()
    }

    /// Weighted total degree.
    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|&(v, e)| v.degree() * e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.factors, &other.factors);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { factors: out }
    }

    /// Removes `v` entirely, returning its exponent and the cofactor.
    pub fn split_off(&self, v: Var) -> (u32, Monomial) {
        let mut rest = self.clone();
        match rest.factors.binary_search_by_key(&v, |p| p.0) {
            Ok(i) => {
                let e = rest.factors.remove(i).1;
                (e, rest)
            }
            Err(_) => (0, rest),
        }
    }

    /// Splits into the part built from variables satisfying `pred` and the rest.
    pub fn partition(&self, pred: impl Fn(Var) -> bool) -> (Monomial, Monomial) {
        let mut yes = Monomial::one();
        let mut no = Monomial::one();
        for &(v, e) in &self.factors {
            if pred(v) {
                yes.factors.push((v, e));
            } else {
                no.factors.push((v, e));
            }
        }
        (yes, no)
    }

    /// Applies a variable renaming. The renaming must be injective on the
    /// variables present.
    pub fn rename(&self, f: impl Fn(Var) -> Var) -> Monomial {
        Monomial::from_pairs(self.factors.iter().map(|&(v, e)| (f(v), e)))
    }

    fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.factors, &other.factors);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, &(v, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_prefers_degree_then_precedence() {
        let t1 = Monomial::var(Var::T1);
        let t2 = Monomial::var(Var::T2);
        let xi = Monomial::var(Var::Xi);
        let t2sq = Monomial::power(Var::T2, 2);
        assert!(xi > t1);
        assert!(t1 > t2);
        assert!(t2sq > xi);
        assert!(Monomial::var(Var::XiFactor(1)) > Monomial::var(Var::XiFactor(2)));
        assert!(Monomial::var(Var::C2) > Monomial::power(Var::C1, 1));
        assert!(Monomial::power(Var::C1, 2) > Monomial::var(Var::C2));
    }

    #[test]
    fn from_pairs_merges_and_drops_zero() {
        let m = Monomial::from_pairs([(Var::T2, 1), (Var::T1, 2), (Var::T2, 3), (Var::Xi, 0)]);
        assert_eq!(m.exponent(Var::T1), 2);
        assert_eq!(m.exponent(Var::T2), 4);
        assert_eq!(m.exponent(Var::Xi), 0);
        assert_eq!(m.to_string(), "t1^2*t2^4");
    }
}
