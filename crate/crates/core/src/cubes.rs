//! Cube classes of the multiplicative group K*.
//!
//! Two nonzero scalars are *cube-equivalent* (`a ∼ b`) when `a/b` is a cube,
//! and *cube-or-square equivalent* (`a ≈ b`) when `a ∼ b` or `a² ∼ b`. The
//! classes of `≈` index the isomorphism classes of type I algebras.
//!
//! Over GF(p) cube-ness is decided by Euler's criterion for cubes; over Q it is
//! decided by the prime-exponent signature of the fraction reduced mod 3.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{rational_parts_u64, Field, FieldDescriptor, Gf, Rationals};

/// Fields that can decide membership in `(K*)³` and extract cube roots.
pub trait CubeClasses: Field {
    /// Whether the nonzero scalar `a` lies in `(K*)³`.
    fn is_cube(&self, a: &Self::Elem) -> Result<bool>;

    /// Some `k` with `k³ = a`, if one exists.
    fn cube_root(&self, a: &Self::Elem) -> Result<Option<Self::Elem>>;

    /// `K = {k³ : k ∈ K}`.
    fn is_cube_rootable(&self) -> bool;
}

fn require_nonzero<F: Field>(field: &F, a: &F::Elem, what: &str) -> Result<()> {
    if field.is_zero(a) {
        Err(Error::domain(format!(
            "{what}: cube classes are defined on K* only, got 0"
        )))
    } else {
        Ok(())
    }
}

/// `a ∼ b` iff `a/b ∈ (K*)³`.
pub fn sim_equiv<F: CubeClasses>(field: &F, a: &F::Elem, b: &F::Elem) -> Result<bool> {
    require_nonzero(field, a, "sim_equiv")?;
    require_nonzero(field, b, "sim_equiv")?;
    field.is_cube(&field.div(a, b)?)
}

/// `a ≈ b` iff `a ∼ b` or `a² ∼ b`.
pub fn approx_equiv<F: CubeClasses>(field: &F, a: &F::Elem, b: &F::Elem) -> Result<bool> {
    Ok(sim_equiv(field, a, b)? || sim_equiv(field, &field.square(a), b)?)
}

impl CubeClasses for Gf {
    fn is_cube(&self, a: &u64) -> Result<bool> {
        require_nonzero(self, a, "is_cube")?;
        let p = self.modulus();
        if !(p - 1).is_multiple_of(3) {
            return Ok(true);
        }
        Ok(self.pow(a, (p - 1) / 3) == 1)
    }

    fn cube_root(&self, a: &u64) -> Result<Option<u64>> {
        let p = self.modulus();
        if *a == 0 {
            return Ok(Some(0));
        }
        if !(p - 1).is_multiple_of(3) {
            // cubing is a bijection; its inverse is the power 3⁻¹ mod (p − 1)
            let k = mod_inverse(3, p - 1).expect("3 is a unit mod p - 1");
            return Ok(Some(self.pow(a, k)));
        }
        Ok(self.units().find(|k| self.cube(k) == *a))
    }

    fn is_cube_rootable(&self) -> bool {
        !(self.modulus() - 1).is_multiple_of(3)
    }
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let g = (a as i128).extended_gcd(&(m as i128));
    (g.gcd == 1).then(|| g.x.rem_euclid(m as i128) as u64)
}

impl CubeClasses for Rationals {
    fn is_cube(&self, a: &BigRational) -> Result<bool> {
        Ok(q_signature(a)?.is_empty())
    }

    fn cube_root(&self, a: &BigRational) -> Result<Option<BigRational>> {
        if a.is_zero() {
            return Ok(Some(a.clone()));
        }
        let n = a.numer().cbrt();
        let d = a.denom().cbrt();
        if &(&n * &n * &n) == a.numer() && &(&d * &d * &d) == a.denom() {
            Ok(Some(BigRational::new(n, d)))
        } else {
            Ok(None)
        }
    }

    fn is_cube_rootable(&self) -> bool {
        false
    }
}

/// Whether the cube map of the named field is surjective.
pub fn is_cube_rootable(field: &FieldDescriptor) -> bool {
    match field {
        FieldDescriptor::Prime { p } => Gf::new(*p).map(|f| f.is_cube_rootable()).unwrap_or(false),
        FieldDescriptor::Rationals => false,
    }
}

/// `(K*)³ = {k³ : k ∈ K*}` by direct enumeration.
pub fn cube_subgroup(field: &Gf) -> BTreeSet<u64> {
    field.units().map(|k| field.cube(&k)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CubeRelation {
    Sim,
    Approx,
}

/// The classes of `∼` or `≈` on GF(p)*, each sorted, ordered by least member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CubeClassPartition {
    pub field: FieldDescriptor,
    pub relation: CubeRelation,
    pub classes: Vec<Vec<u64>>,
}

impl CubeClassPartition {
    pub fn new(field: &Gf, relation: CubeRelation) -> Self {
        let related = |a: &u64, b: &u64| -> bool {
            match relation {
                CubeRelation::Sim => sim_equiv(field, a, b),
                CubeRelation::Approx => approx_equiv(field, a, b),
            }
            .expect("units are nonzero")
        };
        let mut classes: Vec<Vec<u64>> = Vec::new();
        for a in field.units() {
            match classes.iter_mut().find(|c| related(&c[0], &a)) {
                Some(class) => class.push(a),
                None => classes.push(vec![a]),
            }
        }
        CubeClassPartition {
            field: field.descriptor(),
            relation,
            classes,
        }
    }

    pub fn class_of(&self, a: u64) -> Option<usize> {
        self.classes
            .iter()
            .position(|c| c.binary_search(&a).is_ok())
    }
}

/// A complete system of representatives of K*/≈.
///
/// The smallest residue of each class is chosen, so the system is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepSystem {
    pub field: FieldDescriptor,
    pub reps: Vec<u64>,
}

impl RepSystem {
    pub fn new(field: &Gf) -> Self {
        let partition = CubeClassPartition::new(field, CubeRelation::Approx);
        RepSystem {
            field: field.descriptor(),
            reps: partition.classes.iter().map(|c| c[0]).collect(),
        }
    }

    /// `Q*/≈` is infinite, so only prime fields get a representative system.
    pub fn for_descriptor(field: &FieldDescriptor) -> Result<Self> {
        match field {
            FieldDescriptor::Prime { .. } => Ok(Self::new(&field.as_gf()?)),
            FieldDescriptor::Rationals => Err(Error::UnsupportedField(
                "Q*/≈ is infinite; use the prime family instead of a representative system".into(),
            )),
        }
    }

    /// The representative `≈`-equivalent to `a`.
    pub fn representative_of(&self, field: &Gf, a: u64) -> Result<u64> {
        for r in &self.reps {
            if approx_equiv(field, r, &a)? {
                return Ok(*r);
            }
        }
        Err(Error::InvariantViolation(format!(
            "{a} is not covered by the representative system {:?}",
            self.reps
        )))
    }
}

/// Cube-free part of a nonzero rational: `(prime, exponent mod 3)` pairs with
/// exponents in `{1, 2}` and primes strictly increasing.
///
/// `r` is a cube in Q* exactly when its signature is empty.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct QSignature(Vec<(u64, u8)>);

impl QSignature {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, u8)>) -> Self {
        let mut merged = std::collections::BTreeMap::new();
        for (p, e) in pairs {
            *merged.entry(p).or_insert(0u8) += e % 3;
        }
        QSignature(
            merged
                .into_iter()
                .map(|(p, e)| (p, e % 3))
                .filter(|&(_, e)| e != 0)
                .collect(),
        )
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pairs(&self) -> &[(u64, u8)] {
        &self.0
    }

    /// Signature of the product: exponents add mod 3.
    pub fn combine(&self, other: &QSignature) -> QSignature {
        QSignature::from_pairs(self.0.iter().chain(other.0.iter()).copied())
    }

    /// Signature of the reciprocal.
    pub fn inverse(&self) -> QSignature {
        QSignature(self.0.iter().map(|&(p, e)| (p, 3 - e)).collect())
    }

    pub fn square(&self) -> QSignature {
        self.combine(self)
    }
}

impl fmt::Display for QSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (p, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({p},{e})")?;
        }
        write!(f, "}}")
    }
}

/// Default limit on numerators and denominators handed to the factorizer.
pub const DEFAULT_FACTOR_BOUND: u64 = 1 << 63;

pub fn q_signature(r: &BigRational) -> Result<QSignature> {
    q_signature_bounded(r, DEFAULT_FACTOR_BOUND)
}

/// Signature with an explicit ceiling on the size of numerator and denominator.
pub fn q_signature_bounded(r: &BigRational, bound: u64) -> Result<QSignature> {
    if r.is_zero() {
        return Err(Error::domain("q_signature: 0 has no signature"));
    }
    let (n, d) = rational_parts_u64(r)
        .filter(|&(n, d)| n < bound && d < bound)
        .ok_or_else(|| {
            Error::Resource(format!(
                "{}/{} exceeds the factorization bound {bound}",
                r.numer().abs(),
                r.denom()
            ))
        })?;
    let num = num_prime::nt_funcs::factorize64(n);
    let den = num_prime::nt_funcs::factorize64(d);
    Ok(QSignature::from_pairs(
        num.into_iter()
            .map(|(p, e)| (p, (e % 3) as u8))
            .chain(den.into_iter().map(|(p, e)| (p, ((3 - e % 3) % 3) as u8))),
    ))
}

/// `a ∼ b` over Q computed by comparing signatures componentwise.
pub fn q_sim_by_signatures(a: &BigRational, b: &BigRational) -> Result<bool> {
    let sa = q_signature(a)?;
    let sb = q_signature(b)?;
    Ok(sa.combine(&sb.inverse()).is_empty())
}

/// Integer helper for callers that hold plain primes.
pub(crate) fn rational_from_u64(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
