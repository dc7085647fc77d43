use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::class::ChowClass;
use crate::error::{Error, Result};
use crate::polyring::{symmetric_rewrite_over, Monomial, Polynomial, Var};

/// Which group the ring is equivariant for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Flavor {
    /// The diagonal torus, point ring Z[t1, t2].
    T,
    /// GL2, point ring Z[c1, c2].
    GL2,
}

/// One factor of a product of projective spaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Factor {
    /// `P(Sym^n E^*)`, the projective space of binary forms of degree `n`.
    /// `n = 0` is allowed and gives a point with a trivial hyperplane class.
    Projective(u32),
    /// `(P^1)^k`, each copy contributing its own hyperplane class.
    P1Power(u32),
    Point,
}

impl Factor {
    fn slots(self) -> Vec<u32> {
        match self {
            Factor::Projective(n) => vec![n],
            Factor::P1Power(k) => vec![1; k as usize],
            Factor::Point => vec![],
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Projective(n) => write!(f, "PN({n})"),
            Factor::P1Power(k) => write!(f, "P1_power({k})"),
            Factor::Point => f.write_str("Point"),
        }
    }
}

impl std::str::FromStr for Factor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidFactor(s.to_string());
        if s == "Point" {
            return Ok(Factor::Point);
        }
        let (head, rest) = s.split_once('(').ok_or_else(bad)?;
        let n: u32 = rest.strip_suffix(')').ok_or_else(bad)?.parse().map_err(|_| bad())?;
        match head {
            "PN" => Ok(Factor::Projective(n)),
            "P1_power" => Ok(Factor::P1Power(n)),
            _ => Err(bad()),
        }
    }
}

/// Monic relation `var^degree = tail` with `tail` of lower degree in `var`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Relation {
    pub var: Var,
    pub dim: u32,
    pub poly: Polynomial,
    /// `tail[k]` is the coefficient of `var^k` in `var^(dim+1) - poly`.
    pub tail: Vec<Polynomial>,
}

/// Presentation of `A^*_G(X)` for `X` a product of projective spaces of
/// binary forms, as a quotient of a polynomial ring by one monic relation
/// per hyperplane variable.
#[derive(Clone, Debug)]
pub struct RingDescriptor {
    flavor: Flavor,
    factors: Vec<Factor>,
    /// hyperplane variables grouped by factor
    factor_vars: Vec<Vec<Var>>,
    relations: Vec<Relation>,
}

impl PartialEq for RingDescriptor {
    fn eq(&self, other: &Self) -> bool {
        self.flavor == other.flavor && self.factors == other.factors
    }
}

impl Eq for RingDescriptor {}

/// Linear form `-(n - i) t1 - i t2`: the first Chern class of the character
/// by which the torus scales the coordinate `X_i` (coefficient of
/// `x0^(n-i) x1^i`) on `P(Sym^n E^*)`.
pub fn coordinate_weight(n: u32, i: u32) -> Polynomial {
    Polynomial::linear(&[(-i64::from(n - i), Var::T1), (-i64::from(i), Var::T2)])
}

/// Torus relation `prod_{i=0}^{n} (v - (n-i) t1 - i t2)`.
fn torus_relation(v: Var, n: u32) -> Polynomial {
    (0..=n)
        .map(|i| &Polynomial::var(v) + &coordinate_weight(n, i))
        .product()
}

/// Builds the ring for the given flavor and factors.
///
/// Each hyperplane variable of a `P^n` slot satisfies the Chern relation of
/// `Sym^n E^*`; in the GL2 flavor its coefficients are rewritten in `c1, c2`.
pub fn make_ring(flavor: Flavor, factors: &[Factor]) -> Result<Arc<RingDescriptor>> {
    for f in factors {
        if let Factor::P1Power(0) = f {
            return Err(Error::InvalidFactor(f.to_string()));
        }
    }
    let slots: Vec<Vec<u32>> = factors.iter().map(|f| f.slots()).collect();
    let total: usize = slots.iter().map(Vec::len).sum();
    let mut next = 1u16;
    let mut factor_vars = Vec::with_capacity(factors.len());
    let mut relations = Vec::with_capacity(total);
    for dims in &slots {
        let mut vars = Vec::with_capacity(dims.len());
        for &n in dims {
            let v = if total == 1 { Var::Xi } else { Var::XiFactor(next) };
            next += 1;
            let t_rel = torus_relation(v, n);
            let poly = match flavor {
                Flavor::T => t_rel,
                Flavor::GL2 => symmetric_rewrite_over(&t_rel)
                    .map_err(|e| Error::Internal(format!("relation of P^{n} not symmetric: {e}")))?,
            };
            let lead = Polynomial::term(1, Monomial::power(v, n + 1));
            let tail_poly = &lead - &poly;
            let tail = (0..=n).map(|k| tail_poly.coeff_of_power(v, k)).collect();
            relations.push(Relation { var: v, dim: n, poly, tail });
            vars.push(v);
        }
        factor_vars.push(vars);
    }
    Ok(Arc::new(RingDescriptor {
        flavor,
        factors: factors.to_vec(),
        factor_vars,
        relations,
    }))
}

impl RingDescriptor {
    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    /// Hyperplane variables in order.
    pub fn xi_vars(&self) -> Vec<Var> {
        self.relations.iter().map(|r| r.var).collect()
    }

    pub fn factor_vars(&self, factor: usize) -> &[Var] {
        &self.factor_vars[factor]
    }

    /// Dimension of the projective slot carrying `v`.
    pub fn slot_dim(&self, v: Var) -> Option<u32> {
        self.relations.iter().find(|r| r.var == v).map(|r| r.dim)
    }

    pub fn base_vars(&self) -> [Var; 2] {
        match self.flavor {
            Flavor::T => [Var::T1, Var::T2],
            Flavor::GL2 => [Var::C1, Var::C2],
        }
    }

    /// All generators of the ring, most significant first.
    pub fn vars(&self) -> Vec<Var> {
        let mut v = self.xi_vars();
        v.extend(self.base_vars());
        v
    }

    /// Relation polynomials, one per hyperplane variable.
    pub fn relations(&self) -> Vec<&Polynomial> {
        self.relations.iter().map(|r| &r.poly).collect()
    }

    /// Is this `A^*(P^n)` (a single projective factor)?
    pub fn single_projective(&self) -> Option<u32> {
        match self.factors.as_slice() {
            [Factor::Projective(n)] => Some(*n),
            _ => None,
        }
    }

    /// Number of `P^1` factors if this is `A^*((P^1)^k)`, written either as
    /// `P1_power(k)` or `PN(1)`.
    pub fn p1_power(&self) -> Option<u32> {
        match self.factors.as_slice() {
            [Factor::P1Power(k)] => Some(*k),
            [Factor::Projective(1)] => Some(1),
            _ => None,
        }
    }

    pub fn check_vars(&self, p: &Polynomial) -> Result<()> {
        let allowed = self.vars();
        match p.variables().into_iter().find(|v| !allowed.contains(v)) {
            Some(v) => Err(Error::VariableMismatch { var: v.to_string() }),
            None => Ok(()),
        }
    }

    /// Reduces `p` modulo the relations without any checks.
    pub(crate) fn reduce(&self, p: &Polynomial) -> Polynomial {
        let mut cur = p.clone();
        for rel in &self.relations {
            if cur.degree_in(rel.var) > rel.dim {
                cur = reduce_var(&cur, rel);
            }
        }
        cur
    }

    /// Reduced representative of `p`. Relations are monic, so two
    /// polynomials agree in the ring exactly when their normal forms agree.
    pub fn normal_form(self: &Arc<Self>, p: &Polynomial) -> Result<ChowClass> {
        self.check_vars(p)?;
        if !p.is_homogeneous() {
            return Err(Error::Inhomogeneous);
        }
        let codim = p.total_degree().unwrap_or(0);
        Ok(ChowClass::from_reduced(self.clone(), self.reduce(p), codim))
    }

    /// Like [`normal_form`](Self::normal_form) but pins the degree, so zero
    /// gets a definite codimension.
    pub fn class_of_degree(self: &Arc<Self>, p: &Polynomial, codim: u32) -> Result<ChowClass> {
        self.check_vars(p)?;
        if !p.is_homogeneous_of(codim) {
            return Err(match p.is_homogeneous() {
                true => Error::DegreeMismatch {
                    expected: codim,
                    found: p.total_degree().unwrap_or(0),
                },
                false => Error::Inhomogeneous,
            });
        }
        Ok(ChowClass::from_reduced(self.clone(), self.reduce(p), codim))
    }

    pub fn zero(self: &Arc<Self>, codim: u32) -> ChowClass {
        ChowClass::from_reduced(self.clone(), Polynomial::zero(), codim)
    }

    pub fn one(self: &Arc<Self>) -> ChowClass {
        ChowClass::from_reduced(self.clone(), Polynomial::one(), 0)
    }

    /// Class of a generator.
    pub fn gen(self: &Arc<Self>, v: Var) -> Result<ChowClass> {
        self.normal_form(&Polynomial::var(v))
    }

    /// Reduced monomials of weighted degree `d`, in descending term order.
    /// They form a Z-basis of the degree `d` piece.
    pub fn basis(&self, d: u32) -> Vec<Monomial> {
        let vars = self.vars();
        let bounds: Vec<Option<u32>> = vars.iter().map(|&v| self.slot_dim(v)).collect();
        let mut out = Vec::new();
        let mut exps = vec![0u32; vars.len()];
        enumerate(&vars, &bounds, 0, d, &mut exps, &mut out);
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    /// `T`-flavor ring with the same factors.
    pub fn torus_ring(&self) -> Result<Arc<RingDescriptor>> {
        make_ring(Flavor::T, &self.factors)
    }

    /// `h_i = xi - (n-i) t1 - i t2` on the projective factor `factor`.
    pub fn hyperplane_on(self: &Arc<Self>, factor: usize, i: u32) -> Result<ChowClass> {
        if self.flavor != Flavor::T {
            return Err(Error::NotTorus);
        }
        let n = match self.factors.get(factor) {
            Some(Factor::Projective(n)) => *n,
            _ => {
                return Err(Error::WrongRing {
                    expected: format!("a projective factor at position {factor}"),
                    found: self.to_string(),
                })
            }
        };
        if i > n {
            return Err(Error::IndexOutOfRange {
                what: "hyperplane",
                index: i.into(),
                lo: 0,
                hi: n.into(),
            });
        }
        let v = self.factor_vars[factor][0];
        self.normal_form(&(&Polynomial::var(v) + &coordinate_weight(n, i)))
    }

    /// Equivariant class of the hypersurface cut out by a torus eigenform.
    ///
    /// The form is given as a list of monomials, each a list of coordinates
    /// `(slot, i)` meaning `X_i` on the `slot`-th hyperplane variable. The
    /// class is `sum_slot d_slot * xi_slot + w`, where `w` is the common
    /// weight of the monomials.
    pub fn hypersurface_class(self: &Arc<Self>, monomials: &[Vec<(usize, u32)>]) -> Result<ChowClass> {
        if self.flavor != Flavor::T {
            return Err(Error::NotTorus);
        }
        let slots = &self.relations;
        let mut signature: Option<(Vec<u32>, Polynomial)> = None;
        for mono in monomials {
            let mut degs = vec![0u32; slots.len()];
            let mut weight = Polynomial::zero();
            for &(slot, i) in mono {
                let rel = slots.get(slot).ok_or_else(|| Error::IndexOutOfRange {
                    what: "slot",
                    index: slot as i64,
                    lo: 0,
                    hi: slots.len() as i64 - 1,
                })?;
                if i > rel.dim {
                    return Err(Error::IndexOutOfRange {
                        what: "coordinate",
                        index: i.into(),
                        lo: 0,
                        hi: rel.dim.into(),
                    });
                }
                degs[slot] += 1;
                weight += &coordinate_weight(rel.dim, i);
            }
            match &signature {
                None => signature = Some((degs, weight)),
                Some(sig) if *sig == (degs, weight) => {}
                Some(_) => {
                    return Err(Error::InvalidParameter(
                        "form is not a multihomogeneous torus eigenvector".into(),
                    ))
                }
            }
        }
        let (degs, weight) =
            signature.ok_or_else(|| Error::InvalidParameter("empty form".into()))?;
        let mut p = weight;
        for (rel, d) in slots.iter().zip(degs) {
            p.add_term(BigInt::from(d), Monomial::var(rel.var));
        }
        self.normal_form(&p)
    }
}

fn enumerate(
    vars: &[Var],
    bounds: &[Option<u32>],
    k: usize,
    left: u32,
    exps: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    if k == vars.len() {
        if left == 0 {
            out.push(Monomial::from_pairs(vars.iter().copied().zip(exps.iter().copied())));
        }
        return;
    }
    let w = vars[k].degree();
    let mut e = 0;
    while e * w <= left && bounds[k].is_none_or(|b| e <= b) {
        exps[k] = e;
        enumerate(vars, bounds, k + 1, left - e * w, exps, out);
        e += 1;
    }
    exps[k] = 0;
}

/// Division by one monic relation, done on the coefficient list in `var`.
fn reduce_var(p: &Polynomial, rel: &Relation) -> Polynomial {
    let deg = rel.dim as usize + 1;
    let by_power = p.collect_by(|v| v == rel.var);
    let top = p.degree_in(rel.var) as usize;
    let mut coeffs = vec![Polynomial::zero(); top + 1];
    for (m, c) in by_power {
        coeffs[m.exponent(rel.var) as usize] = c;
    }
    for k in (deg..=top).rev() {
        let lead = std::mem::take(&mut coeffs[k]);
        if lead.is_zero() {
            continue;
        }
        for (j, t) in rel.tail.iter().enumerate() {
            if !t.is_zero() {
                coeffs[k - deg + j] += &(&lead * t);
            }
        }
    }
    let mut out = Polynomial::zero();
    for (k, c) in coeffs.into_iter().enumerate().take(deg) {
        out += &c.mul_monomial(&BigInt::from(1), &Monomial::power(rel.var, k as u32));
    }
    out
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = match self.flavor {
            Flavor::T => "T",
            Flavor::GL2 => "GL2",
        };
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|fac| match fac {
                Factor::Projective(n) => format!("P^{n}"),
                Factor::P1Power(1) => "P^1".to_string(),
                Factor::P1Power(k) => format!("(P^1)^{k}"),
                Factor::Point => "pt".to_string(),
            })
            .collect();
        let space = if parts.is_empty() { "pt".to_string() } else { parts.join(" x ") };
        write!(f, "A_{g}({space})")
    }
}

#[derive(Serialize, Deserialize)]
struct RingJson {
    flavor: Flavor,
    factors: Vec<String>,
    relations: Vec<Polynomial>,
}

impl Serialize for RingDescriptor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RingJson {
            flavor: self.flavor,
            factors: self.factors.iter().map(ToString::to_string).collect(),
            relations: self.relations.iter().map(|r| r.poly.clone()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RingDescriptor {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let json = RingJson::deserialize(d)?;
        let factors = json
            .factors
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<Factor>>>()
            .map_err(D::Error::custom)?;
        let ring = make_ring(json.flavor, &factors).map_err(D::Error::custom)?;
        if ring.relations.iter().map(|r| &r.poly).ne(json.relations.iter()) {
            return Err(D::Error::custom("relations do not match the factors"));
        }
        Ok(Arc::unwrap_or_clone(ring))
    }
}
