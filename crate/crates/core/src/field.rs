//! Exact scalar fields: the prime fields GF(p) and the rationals.
//!
//! Every algebra in this crate is parameterised by a [`Field`]. Elements are
//! always kept in canonical form (reduced residues, fractions in lowest terms
//! with positive denominator), so structural equality is field equality.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact arithmetic over a field.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync {
    type Elem: Clone + Eq + Ord + Hash + fmt::Debug + Send + Sync;

    fn descriptor(&self) -> FieldDescriptor;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Multiplicative inverse; zero has none.
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    /// Canonical text form: a residue `"n"` or a fraction `"n"` / `"n/d"`.
    fn format(&self, a: &Self::Elem) -> String;

    /// Parses `"n"` or `"n/d"` (integers may be negative) into canonical form.
    fn parse(&self, s: &str) -> Result<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn square(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(a, a)
    }

    fn cube(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(&self.mul(a, a), a)
    }

    fn pow(&self, a: &Self::Elem, mut exp: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    /// Sum of products `Σ cᵢ · Πⱼ xᵢⱼ`, the shape every polynomial system here takes.
    fn sum_of_products(&self, terms: &[&[&Self::Elem]]) -> Self::Elem {
        terms.iter().fold(self.zero(), |acc, factors| {
            let prod = factors.iter().fold(self.one(), |p, f| self.mul(&p, f));
            self.add(&acc, &prod)
        })
    }
}

/// A field named in a report, on the command line, or in JSON.
///
/// Serialises as `{"kind":"gf","p":7}` or `{"kind":"q"}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FieldDescriptor {
    #[serde(rename = "gf")]
    Prime { p: u64 },
    #[serde(rename = "q")]
    Rationals,
}

impl FieldDescriptor {
    pub fn gf(p: u64) -> Result<Self> {
        Gf::new(p).map(|f| f.descriptor())
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            FieldDescriptor::Prime { p } => Gf::new(p).map(|_| ()),
            FieldDescriptor::Rationals => Ok(()),
        }
    }

    /// The prime field, or `UnsupportedField` for the rationals.
    pub fn as_gf(&self) -> Result<Gf> {
        match *self {
            FieldDescriptor::Prime { p } => Gf::new(p),
            FieldDescriptor::Rationals => Err(Error::UnsupportedField(
                "operation requires a finite prime field, got Q".into(),
            )),
        }
    }

    pub fn enumerate_elements(&self) -> Result<Vec<u64>> {
        Ok(self.as_gf()?.elements().collect())
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Prime { p } => write!(f, "GF({p})"),
            FieldDescriptor::Rationals => write!(f, "Q"),
        }
    }
}

impl FromStr for FieldDescriptor {
    type Err = Error;

    /// Accepts `gf:7`, `GF(7)`, `7`, `q` or `Q`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") || t.eq_ignore_ascii_case("rationals") {
            return Ok(FieldDescriptor::Rationals);
        }
        let digits = t
            .strip_prefix("gf:")
            .or_else(|| t.strip_prefix("GF:"))
            .or_else(|| {
                t.strip_prefix("GF(")
                    .or_else(|| t.strip_prefix("gf("))
                    .and_then(|r| r.strip_suffix(')'))
            })
            .unwrap_or(t);
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::parse("field", format!("unrecognised field literal {s:?}")))?;
        FieldDescriptor::gf(p).map_err(|e| Error::parse("field", e.to_string()))
    }
}

/// The prime field GF(p) with residues stored as `u64` in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gf {
    p: u64,
}

impl Gf {
    /// Largest supported modulus; products are formed in `u128`.
    pub const MAX_MODULUS: u64 = 1 << 63;

    pub fn new(p: u64) -> Result<Self> {
        if p >= Self::MAX_MODULUS {
            return Err(Error::domain(format!("modulus {p} exceeds 2^63")));
        }
        if !num_prime::nt_funcs::is_prime64(p) {
            return Err(Error::domain(format!("{p} is not prime")));
        }
        Ok(Gf { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Number of elements, `p`.
    pub fn order(&self) -> u64 {
        self.p
    }

    /// All elements in ascending residue order.
    pub fn elements(&self) -> impl Iterator<Item = u64> + Clone {
        0..self.p
    }

    /// The nonzero elements, ascending.
    pub fn units(&self) -> impl Iterator<Item = u64> + Clone {
        1..self.p
    }

    #[inline]
    fn reduce_i128(&self, n: i128) -> u64 {
        n.rem_euclid(self.p as i128) as u64
    }
}

impl Field for Gf {
    type Elem = u64;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Prime { p: self.p }
    }

    #[inline]
    fn zero(&self) -> u64 {
        0
    }

    #[inline]
    fn one(&self) -> u64 {
        1 % self.p
    }

    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i128(n as i128)
    }

    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = *a as u128 + *b as u128;
        (s % self.p as u128) as u64
    }

    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }

    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        if self.p < (1 << 32) {
            a * b % self.p
        } else {
            ((*a as u128 * *b as u128) % self.p as u128) as u64
        }
    }

    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn inv(&self, a: &u64) -> Result<u64> {
        if *a == 0 {
            return Err(Error::domain(format!("0 has no inverse in GF({})", self.p)));
        }
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (self.p as i128, *a as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.reduce_i128(t0))
    }

    fn format(&self, a: &u64) -> String {
        a.to_string()
    }

    fn parse(&self, s: &str) -> Result<u64> {
        let t = s.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (t, None),
        };
        let to_residue = |txt: &str| -> Result<u64> {
            let n: BigInt = txt
                .parse()
                .map_err(|_| Error::parse(format!("scalar {s:?}"), "not an integer"))?;
            let p = BigInt::from(self.p);
            let r = ((n % &p) + &p) % &p;
            Ok(r.try_into().expect("residue below p fits in u64"))
        };
        let n = to_residue(num)?;
        match den {
            None => Ok(n),
            Some(d) => {
                let d = to_residue(d)?;
                self.div(&n, &d).map_err(|_| {
                    Error::parse(
                        format!("scalar {s:?}"),
                        format!("denominator vanishes in GF({})", self.p),
                    )
                })
            }
        }
    }
}

/// The rational numbers with arbitrary-precision reduced fractions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Rationals
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn inv(&self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            return Err(Error::domain("0 has no inverse in Q"));
        }
        Ok(a.recip())
    }

    fn format(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn parse(&self, s: &str) -> Result<BigRational> {
        let t = s.trim();
        let int = |txt: &str| -> Result<BigInt> {
            txt.trim()
                .parse()
                .map_err(|_| Error::parse(format!("scalar {s:?}"), "not an integer or n/d"))
        };
        match t.split_once('/') {
            None => Ok(BigRational::from_integer(int(t)?)),
            Some((n, d)) => {
                let d = int(d)?;
                if d.is_zero() {
                    return Err(Error::parse(format!("scalar {s:?}"), "zero denominator"));
                }
                Ok(BigRational::new(int(n)?, d))
            }
        }
    }
}

/// Numerator and denominator magnitudes of a rational, if both fit `u64`.
pub(crate) fn rational_parts_u64(r: &BigRational) -> Option<(u64, u64)> {
    let n: u64 = r.numer().abs().try_into().ok()?;
    let d: u64 = r.denom().try_into().ok()?;
    Some((n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_inverse(f: &Gf, a: u64) -> u64 {
        f.elements().find(|&b| f.mul(&a, &b) == 1).unwrap()
    }

    #[test]
    fn gf7_inverses() {
        let f = Gf::new(7).unwrap();
        assert_eq!(f.inv(&3).unwrap(), 5);
        assert_eq!(f.inv(&2).unwrap(), 4);
        for a in f.units() {
            assert_eq!(f.inv(&a).unwrap(), brute_inverse(&f, a));
        }
        assert!(matches!(f.inv(&0), Err(Error::Domain(_))));
    }

    #[test]
    fn rational_inverse_of_one() {
        let q = Rationals;
        assert_eq!(q.inv(&q.one()).unwrap(), q.one());
        assert!(q.inv(&q.zero()).is_err());
    }

    #[test]
    fn enumerate_small_fields() {
        let e2 = FieldDescriptor::gf(2)
            .unwrap()
            .enumerate_elements()
            .unwrap();
        assert_eq!(e2, vec![0, 1]);
        let e3 = FieldDescriptor::gf(3)
            .unwrap()
            .enumerate_elements()
            .unwrap();
        assert_eq!(e3, vec![0, 1, 2]);
        assert_eq!(Gf::new(5).unwrap().elements().count(), 5);
        assert!(matches!(
            FieldDescriptor::Rationals.enumerate_elements(),
            Err(Error::UnsupportedField(_))
        ));
    }

    #[test]
    fn non_prime_modulus_rejected() {
        for p in [0, 1, 4, 9, 15, 91] {
            assert!(Gf::new(p).is_err(), "{p}");
        }
        assert!(Gf::new(2).is_ok());
        assert!(Gf::new(9_223_372_036_854_775_783).is_ok());
    }

    #[test]
    fn large_modulus_uses_wide_products() {
        let f = Gf::new(9_223_372_036_854_775_783).unwrap();
        let a = f.modulus() - 1;
        assert_eq!(f.mul(&a, &a), 1);
        assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
    }

    #[test]
    fn descriptor_literals() {
        assert_eq!(
            "gf:7".parse::<FieldDescriptor>().unwrap(),
            FieldDescriptor::Prime { p: 7 }
        );
        assert_eq!(
            "GF(13)".parse::<FieldDescriptor>().unwrap(),
            FieldDescriptor::Prime { p: 13 }
        );
        assert_eq!(
            "q".parse::<FieldDescriptor>().unwrap(),
            FieldDescriptor::Rationals
        );
        assert!("gf:4".parse::<FieldDescriptor>().is_err());
        let json = serde_json::to_string(&FieldDescriptor::Prime { p: 7 }).unwrap();
        assert_eq!(json, r#"{"kind":"gf","p":7}"#);
        assert_eq!(
            serde_json::to_string(&FieldDescriptor::Rationals).unwrap(),
            r#"{"kind":"q"}"#
        );
    }

    #[test]
    fn scalar_text_forms() {
        let f = Gf::new(7).unwrap();
        assert_eq!(f.parse("-1").unwrap(), 6);
        assert_eq!(f.parse("1/2").unwrap(), 4);
        assert!(f.parse("1/7").is_err());
        assert!(f.parse("x").is_err());
        let q = Rationals;
        let r = q.parse("6/-4").unwrap();
        assert_eq!(q.format(&r), "-3/2");
        assert_eq!(q.format(&q.parse("8").unwrap()), "8");
        assert!(q.parse("1/0").is_err());
    }
}
