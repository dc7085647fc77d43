//! One checker per lemma id. Each returns the witness; the verdict is
//! derived from it.

use num_bigint::BigInt;

use super::report::{IdentityCheck, Target, Witness};
use super::{genus_classes, presentation_witness, substitute_genus};
use crate::chowctx::{self, chern_relation, hyperplane, point, projective, ChowClass, Flavor};
use crate::error::{Error, Result};
use crate::lattice::{ideal_equal, IdealLattice};
use crate::polyring::{torus_difference, Monomial, Polynomial, Var};
use crate::pushpull::{self, alpha, beta, factorial, pi_r_push_undivided};

/// Every lemma id, in report order.
pub const LEMMA_IDS: &[&str] = &[
    "diag",
    "alpha10-predivision",
    "alpha10-closed",
    "alpha11-closed",
    "ideal-swap",
    "beta-divisible",
    "eq-delta2-4",
    "eq-th0",
    "alpha20-ideal",
    "alpha-r0-ideal",
    "prop-deg",
    "thm-gl2",
    "q-identity",
    "p-product",
    "p-member",
    "presentation",
    "picard",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(super) enum Scope {
    /// checked in `A(P^N)`, from `N >= min_n`
    Projective { min_n: u32 },
    /// checked in `Z[c1, c2]` at a genus
    Genus { even_only: bool },
}

pub(super) fn scope(id: &str) -> Result<Scope> {
    Ok(match id {
        "diag" => Scope::Projective { min_n: 1 },
        "alpha10-predivision" | "alpha10-closed" | "alpha11-closed" | "ideal-swap" | "beta-divisible"
        | "prop-deg" | "thm-gl2" => Scope::Projective { min_n: 2 },
        "eq-th0" => Scope::Projective { min_n: 3 },
        "eq-delta2-4" | "alpha20-ideal" => Scope::Projective { min_n: 4 },
        "alpha-r0-ideal" => Scope::Projective { min_n: 6 },
        "q-identity" | "p-product" | "p-member" => Scope::Genus { even_only: false },
        "presentation" | "picard" => Scope::Genus { even_only: true },
        _ => return Err(Error::UnknownLemma(id.to_string())),
    })
}

/// Resolves the parameter a lemma runs at.
pub(super) fn resolve(id: &str, target: Target) -> Result<Target> {
    match (scope(id)?, target) {
        (Scope::Projective { min_n }, t) => {
            let n = match t {
                Target::N(n) => n,
                Target::Genus(g) => 2 * g + 2,
            };
            if n < min_n {
                return Err(Error::IndexOutOfRange {
                    what: "N",
                    index: n.into(),
                    lo: min_n.into(),
                    hi: i64::MAX,
                });
            }
            Ok(Target::N(n))
        }
        (Scope::Genus { even_only }, t) => {
            let g = match t {
                Target::Genus(g) => g,
                Target::N(n) if n >= 4 && n % 2 == 0 => (n - 2) / 2,
                Target::N(n) => return Err(Error::InvalidParameter(format!("N = {n} is not 2g+2 for a genus g >= 1"))),
            };
            if g == 0 || (even_only && g % 2 == 1) {
                return Err(Error::InvalidGenus(g.into()));
            }
            Ok(Target::Genus(g))
        }
    }
}

fn p(s: &str) -> Polynomial {
    s.parse().expect("well-formed literal")
}

fn int(v: impl Into<BigInt>) -> BigInt {
    v.into()
}

fn h(ring: &std::sync::Arc<chowctx::RingDescriptor>, i: u32) -> ChowClass {
    hyperplane(ring, i).expect("index in range")
}

fn h0h1(n: u32) -> ChowClass {
    let ring = projective(Flavor::T, n);
    h(&ring, 0).mul(&h(&ring, 1)).expect("same ring")
}

pub(super) fn run(id: &str, target: Target) -> Result<Witness> {
    match (id, target) {
        ("diag", Target::N(_)) => diag(),
        ("alpha10-predivision", Target::N(n)) => alpha10_predivision(n),
        ("alpha10-closed", Target::N(n)) => alpha_closed(n, 0),
        ("alpha11-closed", Target::N(n)) => alpha_closed(n, 1),
        ("ideal-swap", Target::N(n)) => ideal_swap(n),
        ("beta-divisible", Target::N(n)) => beta_divisible(n),
        ("eq-delta2-4", Target::N(n)) => alpha20_expansion(n),
        ("eq-th0", Target::N(n)) => h0_difference(n),
        ("alpha20-ideal", Target::N(n)) => alpha_r0_ideal(n, 2..=2),
        ("alpha-r0-ideal", Target::N(n)) => alpha_r0_ideal(n, 3..=n / 2),
        ("prop-deg", Target::N(n)) => prop_deg(n),
        ("thm-gl2", Target::N(n)) => thm_gl2(n),
        ("q-identity", Target::Genus(g)) => q_identity(g),
        ("p-product", Target::Genus(g)) => p_product(g),
        ("p-member", Target::Genus(g)) => p_member(g),
        ("presentation", Target::Genus(g)) => presentation_witness(g),
        ("picard", Target::Genus(g)) => picard(g),
        _ => Err(Error::Internal(format!("lemma {id} called with unresolved parameter"))),
    }
}

/// Diagonal rules on `P^1 x P^1` against the class of `x0 y1 - x1 y0`.
fn diag() -> Result<Witness> {
    let p1 = projective(Flavor::T, 1);
    let sq = chowctx::p1_power(Flavor::T, 2)?;
    let mut w = Witness::default();
    let from_equation = sq.hypersurface_class(&[vec![(0, 0), (1, 1)], vec![(0, 1), (1, 0)]])?;
    let pushed = pushpull::diag_push(&p1.one())?;
    w.push_identity(IdentityCheck::of_classes("d_*(1) = [x0 y1 - x1 y0]", &pushed, &from_equation));
    let expect = sq.normal_form(&(p("xi_1 - t1") + p("xi_2 - t1") + torus_difference()))?;
    w.push_identity(IdentityCheck::of_classes(
        "d_*(1) = [0 x P1] + [P1 x 0] + (t1 - t2)",
        &pushed,
        &expect,
    ));
    let point = pushpull::diag_push(&p1.normal_form(&p("xi - t1"))?)?;
    let expect = sq.normal_form(&(p("xi_1 - t1") * p("xi_2 - t1")))?;
    w.push_identity(IdentityCheck::of_classes("d_*[0] = [0 x 0]", &point, &expect));
    Ok(w)
}

fn alpha10_predivision(n: u32) -> Result<Witness> {
    let ring = projective(Flavor::T, n);
    let src = chowctx::pi_source(Flavor::T, 1, n)?;
    let raw = pi_r_push_undivided(&src.one())?;
    let rhs = h(&ring, 0)
        .scale(&(factorial((n - 1) as usize) * 2))
        .add(&ring.normal_form(&torus_difference().scale(&factorial(n as usize)))?)?;
    let mut w = Witness::default();
    w.push_identity(IdentityCheck::of_classes(
        "(N-2)! alpha_{1,0} = 2(N-1)! h0 + N!(t1 - t2)",
        &raw,
        &rhs,
    ));
    let lhs = alpha(1, 0, n)?.scale(&factorial((n - 2) as usize));
    w.push_identity(IdentityCheck::of_classes("division by (N-2)! is exact", &lhs, &raw));
    Ok(w)
}

fn alpha_closed(n: u32, i: u32) -> Result<Witness> {
    let g = projective(Flavor::GL2, n);
    let n_i = i64::from(n);
    let (label, expect) = if i == 0 {
        (
            "alpha_{1,0} = 2(N-1) xi - N(N-1) c1",
            Polynomial::linear(&[(2 * (n_i - 1), Var::Xi), (-n_i * (n_i - 1), Var::C1)]),
        )
    } else {
        (
            "alpha_{1,1} = xi^2 - c1 xi - N(N-2) c2",
            p("xi^2 - c1*xi") - Polynomial::linear(&[(n_i * (n_i - 2), Var::C2)]),
        )
    };
    let computed = alpha(1, i, n)?.to_gl2()?;
    let mut w = Witness::default();
    w.push_identity(IdentityCheck::of_classes(label, &computed, &g.normal_form(&expect)?));
    Ok(w)
}

fn ideal_swap(n: u32) -> Result<Witness> {
    let (a10, a11, b) = (alpha(1, 0, n)?, alpha(1, 1, n)?, h0h1(n));
    let mut w = Witness::default();
    let rhs = b.add(&a10.mul_poly(&p("t1"))?)?;
    w.push_identity(IdentityCheck::of_classes("alpha_{1,1} = h0 h1 + t1 alpha_{1,0}", &a11, &rhs));
    w.push_identity(IdentityCheck::of_classes("beta_{1,0} = h0 h1", &beta(1, 0, n)?, &b));
    let cmp = ideal_equal(&[a10.clone(), a11.clone()], &[a10, b])?;
    let names = ["alpha_{1,0}", "alpha_{1,1}"];
    for (name, m) in names.iter().zip(cmp.left_in_right) {
        w.push_membership(format!("{name} in (alpha_{{1,0}}, h0 h1)"), m);
    }
    let names = ["alpha_{1,0}", "h0 h1"];
    for (name, m) in names.iter().zip(cmp.right_in_left) {
        w.push_membership(format!("{name} in (alpha_{{1,0}}, alpha_{{1,1}})"), m);
    }
    Ok(w)
}

fn beta_divisible(n: u32) -> Result<Witness> {
    let lattice = IdealLattice::new(projective(Flavor::T, n), vec![h0h1(n)])?;
    let mut w = Witness::default();
    for r in 1..=n / 2 {
        for m in 0..r {
            w.push_membership(format!("beta_{{{r},{m}}} in (h0 h1)"), lattice.member(&beta(r, m, n)?)?);
        }
    }
    Ok(w)
}

fn alpha20_expansion(n: u32) -> Result<Witness> {
    let ring = projective(Flavor::T, n);
    let n_us = n as usize;
    let u = torus_difference();
    let a10 = alpha(1, 0, n)?;
    let a20 = alpha(2, 0, n)?;
    let uh0 = h(&ring, 0).mul_poly(&u)?;
    let ua10 = a10.mul_poly(&u)?;
    let mut w = Witness::default();
    // undivided form
    let rhs = h0h1(n)
        .scale(&(factorial(n_us - 2) * 4))
        .add(&uh0.scale(&(factorial(n_us - 1) * 2)))?
        .add(&ua10.scale(&factorial(n_us - 2)))?;
    w.push_identity(IdentityCheck::of_classes(
        "2(N-4)! alpha_{2,0} = 4(N-2)! h0 h1 + 2(N-1)! (t1-t2) h0 + (N-2)! (t1-t2) alpha_{1,0}",
        &a20.scale(&(factorial(n_us - 4) * 2)),
        &rhs,
    ));
    // divided by 2(N-4)!
    let k = int((n - 2) * (n - 3));
    let rhs = h0h1(n)
        .scale(&(&k * 2))
        .add(&uh0.scale(&(&k * (n - 1))))?
        .add(&ua10.scale(&(&k / 2)))?;
    w.push_identity(IdentityCheck::of_classes(
        "alpha_{2,0} = 2(N-2)(N-3) h0 h1 + (N-1)(N-2)(N-3) (t1-t2) h0 + (N-2)(N-3)/2 (t1-t2) alpha_{1,0}",
        &a20,
        &rhs,
    ));
    Ok(w)
}

fn h0_difference(n: u32) -> Result<Witness> {
    let ring = projective(Flavor::T, n);
    let h0 = h(&ring, 0);
    let lhs = h0.mul_poly(&torus_difference())?.scale(&int((n - 1) * (n - 2)));
    let rhs = h0.mul(&alpha(1, 0, n)?)?.sub(&h0h1(n).scale(&int(2 * (n - 1))))?;
    let mut w = Witness::default();
    w.push_identity(IdentityCheck::of_classes(
        "(N-1)(N-2) h0 (t1 - t2) = h0 alpha_{1,0} - 2(N-1) h0 h1",
        &lhs,
        &rhs,
    ));
    Ok(w)
}

fn alpha_r0_ideal(n: u32, rs: std::ops::RangeInclusive<u32>) -> Result<Witness> {
    let lattice = IdealLattice::new(projective(Flavor::T, n), vec![alpha(1, 0, n)?, h0h1(n)])?;
    let mut w = Witness::default();
    for r in rs {
        w.push_membership(format!("alpha_{{{r},0}} in (alpha_{{1,0}}, h0 h1)"), lattice.member(&alpha(r, 0, n)?)?);
    }
    Ok(w)
}

/// All `alpha_{r,i}` and `beta_{r,m}` in `(alpha_{1,0}, alpha_{1,1})`.
fn prop_deg(n: u32) -> Result<Witness> {
    let lattice = IdealLattice::new(projective(Flavor::T, n), vec![alpha(1, 0, n)?, alpha(1, 1, n)?])?;
    let mut w = Witness::default();
    for r in 1..=n / 2 {
        for i in 0..=r {
            w.push_membership(format!("alpha_{{{r},{i}}}"), lattice.member(&alpha(r, i, n)?)?);
        }
        for m in 0..r {
            w.push_membership(format!("beta_{{{r},{m}}}"), lattice.member(&beta(r, m, n)?)?);
        }
    }
    Ok(w)
}

/// The same memberships for the `alpha_{r,i}` in the GL2 monomial basis.
fn thm_gl2(n: u32) -> Result<Witness> {
    let gens = vec![alpha(1, 0, n)?.to_gl2()?, alpha(1, 1, n)?.to_gl2()?];
    let lattice = IdealLattice::new(projective(Flavor::GL2, n), gens)?;
    let mut w = Witness::default();
    for r in 1..=n / 2 {
        for i in 0..=r {
            w.push_membership(format!("alpha_{{{r},{i}}}"), lattice.member(&alpha(r, i, n)?.to_gl2()?)?);
        }
    }
    Ok(w)
}

/// The printed operands: `alpha_{1,0}(g c1) = -2(2g+1) c1` and
/// `alpha_{1,1}(g c1) = -g(g-1) c1^2 + 4g(g+1) c2`.
pub(super) fn printed_operands(g: u32) -> (Polynomial, Polynomial) {
    let g = i64::from(g);
    let a = Polynomial::linear(&[(-2 * (2 * g + 1), Var::C1)]);
    let b = Polynomial::term(-g * (g - 1), Monomial::power(Var::C1, 2))
        + Polynomial::linear(&[(4 * g * (g + 1), Var::C2)]);
    (a, b)
}

fn q_identity(g: u32) -> Result<Witness> {
    let gi = i64::from(g);
    let (a, b) = printed_operands(g);
    let q = (p("c1^2").scale(&int((gi - 1) * (gi + 1))) - p("c2").scale(&int(4 * gi * gi)))
        * (p("c1^2").scale(&int(gi * (gi + 2))) - p("c2").scale(&int(4 * (gi + 1) * (gi + 1))));
    let rhs = &(&a * &a) * &p("c2") + &(&a * &b) * &p("c1") + &b * &b;
    let mut w = Witness::default();
    w.push_identity(IdentityCheck::new(
        "Q = alpha_{1,0}(gc1)^2 c2 + alpha_{1,0}(gc1) alpha_{1,1}(gc1) c1 + alpha_{1,1}(gc1)^2",
        q,
        rhs,
    ));
    // the printed operands against substitution into the pushforwards
    let (a10, a11) = genus_classes(g)?;
    w.push_identity(IdentityCheck::new("alpha_{1,0}(gc1) as printed", a10.value().clone(), a));
    w.push_identity(IdentityCheck::new("alpha_{1,1}(gc1) is minus the printed form", a11.value().clone(), -b));
    Ok(w)
}

fn p_of_genus(g: u32) -> Result<ChowClass> {
    let n = 2 * g + 2;
    let gl2 = projective(Flavor::GL2, n);
    let rel = chern_relation(n)?;
    substitute_genus(&gl2, &rel, n + 1, g)
}

fn p_product(g: u32) -> Result<Witness> {
    let gi = i64::from(g);
    let product: Polynomial = (0..=gi)
        .map(|j| {
            p("c1^2").scale(&int(-(gi - j) * (gi - j + 2))) + p("c2").scale(&int(4 * (gi + 1 - j) * (gi + 1 - j)))
        })
        .product();
    let rhs = -(&p("c1") * &product);
    let mut w = Witness::default();
    w.push_identity(IdentityCheck::new(
        "P(gc1) = -c1 prod_{j=0}^{g} (-(g-j)(g-j+2) c1^2 + 4(g+1-j)^2 c2)",
        p_of_genus(g)?.into_value(),
        rhs,
    ));
    Ok(w)
}

fn p_member(g: u32) -> Result<Witness> {
    let (a10, a11) = genus_classes(g)?;
    let lattice = IdealLattice::new(point(Flavor::GL2), vec![a10, a11])?;
    let mut w = Witness::default();
    w.push_membership("P(gc1) in (alpha_{1,0}(gc1), alpha_{1,1}(gc1))", lattice.member(&p_of_genus(g)?)?);
    Ok(w)
}

fn picard(g: u32) -> Result<Witness> {
    let order = super::picard(g)?;
    let mut w = Witness::default();
    w.push_identity(IdentityCheck::new(
        "|Pic| = 2(2g+1)",
        Polynomial::constant(order),
        Polynomial::constant(2 * (2 * i64::from(g) + 1)),
    ));
    Ok(w)
}

pub(super) fn p_class(g: u32) -> Result<ChowClass> {
    p_of_genus(g)
}
