use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use super::ring::{Flavor, RingDescriptor};
use crate::error::{Error, Result};
use crate::polyring::{symmetric_rewrite_over, to_torus, Polynomial};

/// A homogeneous element of a [`RingDescriptor`], stored in normal form.
#[derive(Clone, Debug)]
pub struct ChowClass {
    ring: Arc<RingDescriptor>,
    value: Polynomial,
    codim: u32,
}

impl ChowClass {
    pub(crate) fn from_reduced(ring: Arc<RingDescriptor>, value: Polynomial, codim: u32) -> Self {
        debug_assert!(value.is_homogeneous_of(codim));
        ChowClass { ring, value, codim }
    }

    pub fn ring(&self) -> &Arc<RingDescriptor> {
        &self.ring
    }

    pub fn value(&self) -> &Polynomial {
        &self.value
    }

    pub fn into_value(self) -> Polynomial {
        self.value
    }

    pub fn codim(&self) -> u32 {
        self.codim
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    fn same_ring(&self, other: &ChowClass) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            });
        }
        Ok(())
    }

    fn check_codim(&self, other: &ChowClass) -> Result<u32> {
        match (self.is_zero(), other.is_zero()) {
            (true, _) => Ok(other.codim),
            (_, true) => Ok(self.codim),
            _ if self.codim == other.codim => Ok(self.codim),
            _ => Err(Error::Inhomogeneous),
        }
    }

    pub fn add(&self, other: &ChowClass) -> Result<ChowClass> {
        self.same_ring(other)?;
        let codim = self.check_codim(other)?;
        Ok(ChowClass::from_reduced(self.ring.clone(), &self.value + &other.value, codim))
    }

    pub fn sub(&self, other: &ChowClass) -> Result<ChowClass> {
        self.same_ring(other)?;
        let codim = self.check_codim(other)?;
        Ok(ChowClass::from_reduced(self.ring.clone(), &self.value - &other.value, codim))
    }

    pub fn mul(&self, other: &ChowClass) -> Result<ChowClass> {
        self.same_ring(other)?;
        let prod = &self.value * &other.value;
        Ok(ChowClass::from_reduced(
            self.ring.clone(),
            self.ring.reduce(&prod),
            self.codim + other.codim,
        ))
    }

    pub fn neg(&self) -> ChowClass {
        ChowClass::from_reduced(self.ring.clone(), -&self.value, self.codim)
    }

    pub fn scale(&self, c: &BigInt) -> ChowClass {
        ChowClass::from_reduced(self.ring.clone(), self.value.scale(c), self.codim)
    }

    /// Multiplies by an arbitrary homogeneous polynomial of the ring.
    pub fn mul_poly(&self, p: &Polynomial) -> Result<ChowClass> {
        let other = self.ring.normal_form(p)?;
        self.mul(&other)
    }

    pub fn pow(&self, e: u32) -> ChowClass {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Divides by an integer if every coefficient is a multiple of it.
    pub fn div_exact(&self, d: &BigInt) -> Option<ChowClass> {
        let value = self.value.div_exact(d)?;
        Some(ChowClass::from_reduced(self.ring.clone(), value, self.codim))
    }

    /// Invariant under `t1 <-> t2` (always true for GL2 classes).
    pub fn is_symmetric(&self) -> bool {
        self.ring.flavor() == Flavor::GL2 || self.value.swap_torus() == self.value
    }

    /// Descends a symmetric torus class to the GL2 ring with the same
    /// factors.
    pub fn to_gl2(&self) -> Result<ChowClass> {
        if self.ring.flavor() == Flavor::GL2 {
            return Ok(self.clone());
        }
        let value = symmetric_rewrite_over(&self.value)?;
        let ring = super::make_ring(Flavor::GL2, self.ring.factors())?;
        // The GL2 relations are the rewritten torus relations, so a reduced
        // representative stays reduced.
        Ok(ChowClass::from_reduced(ring, value, self.codim))
    }

    /// Restriction from GL2 to the torus: `c1 -> t1 + t2`, `c2 -> t1 t2`.
    /// This map is injective on normal forms.
    pub fn to_torus(&self) -> Result<ChowClass> {
        if self.ring.flavor() == Flavor::T {
            return Ok(self.clone());
        }
        let ring = self.ring.torus_ring()?;
        Ok(ChowClass::from_reduced(ring, to_torus(&self.value), self.codim))
    }
}

impl PartialEq for ChowClass {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring
            && self.value == other.value
            && (self.codim == other.codim || self.value.is_zero())
    }
}

impl Eq for ChowClass {}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

impl Serialize for ChowClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.value.serialize(s)
    }
}
