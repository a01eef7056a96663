//! Prime fields GF(p) with `p < 2^16`.
//!
//! Residues are stored as `u32`; products of two residues fit in `u32`
//! because `(2^16 - 1)^2 < 2^32`, so the hot kernels never widen.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Largest admissible modulus (exclusive).
pub const MODULUS_LIMIT: u64 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..MODULUS_LIMIT).contains(&p) {
            return Err(Error::ModulusOutOfRange(p));
        }
        let p = p as u32;
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Field size as a `u64`, for enumeration bounds.
    #[inline]
    pub fn order(&self) -> u64 {
        u64::from(self.p)
    }

    pub fn elem(&self, v: u64) -> FieldElement {
        FieldElement {
            value: (v % u64::from(self.p)) as u32,
            field: *self,
        }
    }

    pub fn from_i64(&self, v: i64) -> FieldElement {
        FieldElement {
            value: v.rem_euclid(i64::from(self.p)) as u32,
            field: *self,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.elem(0)
    }

    pub fn one(&self) -> FieldElement {
        self.elem(1)
    }

    /// Iterates over all residues `0..p`.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.p).map(move |value| FieldElement {
            value,
            field: *self,
        })
    }

    #[inline]
    pub fn reduce(&self, v: u64) -> u32 {
        (v % u64::from(self.p)) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        (a * b) % self.p
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    /// Returns `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        let a = a % self.p;
        if a == 0 {
            return None;
        }
        let (mut r0, mut r1) = (i64::from(self.p), i64::from(a));
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Some(t0.rem_euclid(i64::from(self.p)) as u32)
    }

    /// Checks that every nonzero residue has an inverse, i.e. that the
    /// residues really form a field. Independent of the primality test
    /// used at construction.
    pub fn verify_exhaustive(&self) -> bool {
        (1..self.p).all(|a| {
            self.inv(a)
                .is_some_and(|b| (u64::from(a) * u64::from(b)) % u64::from(self.p) == 1)
        })
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

/// Deterministic trial division; adequate for `p < 2^16`.
pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A residue tagged with its field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    field: PrimeField,
}

impl FieldElement {
    #[inline]
    pub fn value(&self) -> u32 {
        self.value
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn inv(&self) -> Option<FieldElement> {
        self.field.inv(self.value).map(|value| FieldElement {
            value,
            field: self.field,
        })
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.field.p,
                right: other.field.p,
            })
        }
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        self.same_field(&rhs)?;
        Ok(self.with(self.field.add(self.value, rhs.value)))
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        self.same_field(&rhs)?;
        Ok(self.with(self.field.sub(self.value, rhs.value)))
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        self.same_field(&rhs)?;
        Ok(self.with(self.field.mul(self.value, rhs.value)))
    }

    fn with(self, value: u32) -> Self {
        Self {
            value,
            field: self.field,
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

// Operator forms panic on mismatched fields; use the `checked_*` methods
// where the operands come from different sources.
impl Add for FieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("field mismatch in addition")
    }
}

impl Sub for FieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs)
            .expect("field mismatch in subtraction")
    }
}

impl Mul for FieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs)
            .expect("field mismatch in multiplication")
    }
}

impl Neg for FieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        self.with(self.field.neg(self.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_composites_and_range() {
        assert_eq!(PrimeField::new(4), Err(Error::NotPrime(4)));
        assert_eq!(PrimeField::new(1), Err(Error::ModulusOutOfRange(1)));
        assert_eq!(PrimeField::new(65536), Err(Error::ModulusOutOfRange(65536)));
        assert!(PrimeField::new(65521).is_ok());
        assert!(PrimeField::new(2).is_ok());
    }

    #[test]
    fn mismatched_fields_error() {
        let f2 = PrimeField::new(2).unwrap();
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(
            f2.one().checked_add(f3.one()),
            Err(Error::FieldMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn zero_has_no_inverse() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.inv(0), None);
        assert_eq!(f.inv(3), Some(5));
    }

    #[test]
    fn largest_modulus_products_do_not_overflow() {
        let f = PrimeField::new(65521).unwrap();
        let a = f.elem(65520);
        assert_eq!((a * a).value(), 1);
    }

    #[test]
    fn exhaustive_check_agrees_with_primality() {
        for p in [2u64, 3, 5, 7, 11, 13, 101] {
            assert!(PrimeField::new(p).unwrap().verify_exhaustive());
        }
    }

    fn field_and_triple() -> impl Strategy<Value = (PrimeField, u32, u32, u32)> {
        prop::sample::select(vec![2u64, 3, 5, 7, 11]).prop_flat_map(|p| {
            let f = PrimeField::new(p).unwrap();
            let m = p as u32;
            (Just(f), 0..m, 0..m, 0..m)
        })
    }

    proptest! {
        #[test]
        fn field_axioms((f, a, b, c) in field_and_triple()) {
            let (a, b, c) = (f.elem(a.into()), f.elem(b.into()), f.elem(c.into()));
            prop_assert_eq!((a + b) + c, a + (b + c));
            prop_assert_eq!((a * b) * c, a * (b * c));
            prop_assert_eq!(a * (b + c), a * b + a * c);
            prop_assert_eq!(a + b, b + a);
            prop_assert_eq!(a - a, f.zero());
            prop_assert_eq!(a + (-a), f.zero());
            if !a.is_zero() {
                prop_assert_eq!(a * a.inv().unwrap(), f.one());
            }
        }
    }
}
