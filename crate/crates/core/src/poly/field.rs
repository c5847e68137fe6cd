use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::PolyError;

/// Coefficient field. Elements are plain values; the field carries whatever
/// runtime data the arithmetic needs (the modulus).
pub trait Field: Clone + Debug + PartialEq + Eq + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    /// 0 for the rationals.
    fn characteristic(&self) -> u64;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    /// Signed decimal rendering used by the text format.
    fn render(&self, a: &Self::Elem) -> String;

    /// Storage size of an element in bits; constant for finite fields.
    fn bit_size(&self, _a: &Self::Elem) -> u64 {
        0
    }
}

/// `Z/pZ` for a prime `p < 2^31`, so products fit in 64 bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

pub const DEFAULT_PRIME: u64 = 32003;

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, PolyError> {
        if !is_prime(p) || p >= 1 << 31 {
            return Err(PolyError::BadCharacteristic(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = r * a % self.p;
            }
            a = a * a % self.p;
            e >>= 1;
        }
        r
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn characteristic(&self) -> u64 {
        self.p
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        self.pow(*a, self.p - 2)
    }
    fn render(&self, a: &u64) -> String {
        // symmetric representative, so -1 prints as -1
        if *a > self.p / 2 {
            format!("-{}", self.p - a)
        } else {
            a.to_string()
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn characteristic(&self) -> u64 {
        0
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
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
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn render(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else if a.is_negative() {
            format!("-({})", -a)
        } else {
            format!("({a})")
        }
    }
    fn bit_size(&self, a: &BigRational) -> u64 {
        a.numer().bits() + a.denom().bits()
    }
}

/// Runtime choice of coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldChoice {
    Prime(PrimeField),
    Rational,
}

impl FieldChoice {
    /// `0` selects the rationals, anything else must be a prime below `2^31`.
    pub fn from_characteristic(p: u64) -> Result<Self, PolyError> {
        if p == 0 {
            Ok(FieldChoice::Rational)
        } else {
            PrimeField::new(p).map(FieldChoice::Prime)
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldChoice::Prime(f) => f.characteristic(),
            FieldChoice::Rational => 0,
        }
    }
}

impl Default for FieldChoice {
    fn default() -> Self {
        FieldChoice::Prime(PrimeField::default())
    }
}

/// Runs `$body` with `$f` bound to the concrete field selected by `$choice`.
#[macro_export]
macro_rules! with_field {
    ($choice:expr, |$f:ident| $body:expr) => {
        match $choice {
            $crate::poly::FieldChoice::Prime(p) => {
                let $f = p;
                $body
            }
            $crate::poly::FieldChoice::Rational => {
                let $f = $crate::poly::Rationals;
                $body
            }
        }
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.add(&5, &4), 2);
        assert_eq!(f.sub(&2, &5), 4);
        assert_eq!(f.mul(&3, &5), 1);
        assert_eq!(f.inv(&3), 5);
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.render(&6), "-1");
        for a in 1..7 {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
    }

    #[test]
    fn rejects_composites() {
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(32004).is_err());
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(DEFAULT_PRIME).is_ok());
        assert!(FieldChoice::from_characteristic(0).unwrap() == FieldChoice::Rational);
    }

    #[test]
    fn rational_rendering() {
        let q = Rationals;
        let half = q.div(&q.one(), &q.from_i64(2));
        assert_eq!(q.render(&half), "(1/2)");
        assert_eq!(q.render(&q.neg(&half)), "-(1/2)");
        assert_eq!(q.render(&q.from_i64(-3)), "-3");
    }
}
