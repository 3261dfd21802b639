//! Coefficient fields: the rationals and prime fields `F_p`.
//!
//! Rationals use a machine-word representation until an operation
//! overflows, then fall back to arbitrary precision.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational number with a small fast path.
#[derive(Clone, Debug)]
pub enum Rat {
    /// Reduced fraction, denominator > 0.
    Small(i64, i64),
    Big(BigRational),
}

impl Rat {
    pub fn from_i64(n: i64) -> Self {
        Self::from_i128(n as i128, 1)
    }

    pub fn new(num: i64, den: i64) -> Option<Self> {
        if den == 0 {
            return None;
        }
        Some(Self::from_i128(num as i128, den as i128))
    }

    fn from_i128(num: i128, den: i128) -> Self {
        let (mut n, mut d) = (num, den);
        if d < 0 {
            n = -n;
            d = -d;
        }
        let g = n.gcd(&d);
        if g > 1 {
            n /= g;
            d /= g;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(a), Ok(b)) if a != i64::MIN => Rat::Small(a, b),
            _ => Rat::Big(BigRational::new(BigInt::from(n), BigInt::from(d))),
        }
    }

    fn from_big(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(a), Some(b)) if a != i64::MIN => Rat::Small(a, b),
            _ => Rat::Big(r),
        }
    }

    fn to_big(&self) -> BigRational {
        match self {
            Rat::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Rat::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Rat::Small(n, _) => *n == 0,
            Rat::Big(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Rat::Small(n, d) => *n == 1 && *d == 1,
            Rat::Big(r) => r.is_one(),
        }
    }

    pub fn add(&self, o: &Rat) -> Rat {
        if let (Rat::Small(a, b), Rat::Small(c, d)) = (self, o) {
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            if b == d {
                return Self::from_i128(a + c, b);
            }
            return Self::from_i128(a * d + c * b, b * d);
        }
        Self::from_big(self.to_big() + o.to_big())
    }

    pub fn sub(&self, o: &Rat) -> Rat {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Rat) -> Rat {
        if let (Rat::Small(a, b), Rat::Small(c, d)) = (self, o) {
            return Self::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128);
        }
        Self::from_big(self.to_big() * o.to_big())
    }

    pub fn neg(&self) -> Rat {
        match self {
            Rat::Small(n, d) => Rat::Small(-n, *d),
            Rat::Big(r) => Self::from_big(-r.clone()),
        }
    }

    pub fn inv(&self) -> Option<Rat> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Rat::Small(n, d) => Self::from_i128(*d as i128, *n as i128),
            Rat::Big(r) => Self::from_big(r.recip()),
        })
    }

    pub fn signum(&self) -> i32 {
        match self {
            Rat::Small(n, _) => n.signum() as i32,
            Rat::Big(r) => {
                if r.is_positive() {
                    1
                } else if r.is_negative() {
                    -1
                } else {
                    0
                }
            }
        }
    }

    /// Parses `"n"` or `"n/d"`.
    pub fn parse(s: &str) -> Option<Rat> {
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n: BigInt = n.parse().ok()?;
        let d: BigInt = d.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Self::from_big(BigRational::new(n, d)))
    }
}

impl PartialEq for Rat {
    fn eq(&self, o: &Rat) -> bool {
        match (self, o) {
            (Rat::Small(a, b), Rat::Small(c, d)) => a == c && b == d,
            _ => self.to_big() == o.to_big(),
        }
    }
}

impl Eq for Rat {}

impl std::hash::Hash for Rat {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.to_string().hash(state)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::Small(n, 1) => write!(f, "{n}"),
            Rat::Small(n, d) => write!(f, "{n}/{d}"),
            Rat::Big(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Rat::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

/// An element of a [`CoefficientField`]. Arithmetic goes through the field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Q(Rat),
    Fp(u32),
}

/// The field of coefficients of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "p", rename_all = "snake_case")]
pub enum CoefficientField {
    Rationals,
    Prime(u32),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut i = 2u64;
    while i * i <= p {
        if p.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

impl CoefficientField {
    /// Prime field `F_p`; requires `p` prime and `2 <= p < 2^31`.
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::InvalidField(p));
        }
        Ok(CoefficientField::Prime(p as u32))
    }

    pub fn zero(&self) -> Coeff {
        self.from_i64(0)
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match self {
            CoefficientField::Rationals => Coeff::Q(Rat::from_i64(n)),
            CoefficientField::Prime(p) => Coeff::Fp(n.rem_euclid(*p as i64) as u32),
        }
    }

    /// Maps a rational into the field; `None` when the denominator vanishes mod p.
    pub fn from_rat(&self, r: &Rat) -> Option<Coeff> {
        match self {
            CoefficientField::Rationals => Some(Coeff::Q(r.clone())),
            CoefficientField::Prime(p) => {
                let big = r.to_big();
                let p = BigInt::from(*p);
                let n = big.numer().mod_floor(&p).to_u32()?;
                let d = big.denom().mod_floor(&p).to_u32()?;
                if d == 0 {
                    return None;
                }
                let f = *self;
                Some(f.mul(&Coeff::Fp(n), &f.inv(&Coeff::Fp(d))?))
            }
        }
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Q(r) => r.is_zero(),
            Coeff::Fp(v) => *v == 0,
        }
    }

    pub fn is_one(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Q(r) => r.is_one(),
            Coeff::Fp(v) => *v == 1,
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b, self) {
            (Coeff::Q(x), Coeff::Q(y), _) => Coeff::Q(x.add(y)),
            (Coeff::Fp(x), Coeff::Fp(y), CoefficientField::Prime(p)) => {
                Coeff::Fp(((*x as u64 + *y as u64) % *p as u64) as u32)
            }
            _ => panic!("coefficient from a different field"),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (a, self) {
            (Coeff::Q(x), _) => Coeff::Q(x.neg()),
            (Coeff::Fp(0), _) => Coeff::Fp(0),
            (Coeff::Fp(x), CoefficientField::Prime(p)) => Coeff::Fp(p - x),
            _ => panic!("coefficient from a different field"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b) {
            (Coeff::Q(x), Coeff::Q(y)) => Coeff::Q(x.sub(y)),
            _ => self.add(a, &self.neg(b)),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b, self) {
            (Coeff::Q(x), Coeff::Q(y), _) => Coeff::Q(x.mul(y)),
            (Coeff::Fp(x), Coeff::Fp(y), CoefficientField::Prime(p)) => {
                Coeff::Fp(((*x as u64 * *y as u64) % *p as u64) as u32)
            }
            _ => panic!("coefficient from a different field"),
        }
    }

    pub fn inv(&self, a: &Coeff) -> Option<Coeff> {
        match (a, self) {
            (Coeff::Q(x), _) => x.inv().map(Coeff::Q),
            (Coeff::Fp(0), _) => None,
            (Coeff::Fp(x), CoefficientField::Prime(p)) => {
                // Fermat: x^(p-2)
                let (mut base, mut e, m) = (*x as u64, *p as u64 - 2, *p as u64);
                let mut acc = 1u64;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = acc * base % m;
                    }
                    base = base * base % m;
                    e >>= 1;
                }
                Some(Coeff::Fp(acc as u32))
            }
            _ => panic!("coefficient from a different field"),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Option<Coeff> {
        Some(self.mul(a, &self.inv(b)?))
    }

    /// Textual form used by printers and serializers.
    pub fn format(&self, a: &Coeff) -> String {
        match a {
            Coeff::Q(r) => r.to_string(),
            Coeff::Fp(v) => v.to_string(),
        }
    }

    pub fn parse(&self, s: &str) -> Option<Coeff> {
        self.from_rat(&Rat::parse(s)?)
    }

    /// Whether the printed form of `a` needs a leading minus sign.
    pub fn is_negative(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Q(r) => r.signum() < 0,
            Coeff::Fp(_) => false,
        }
    }

    /// Total order on field elements, used only for canonical sorting.
    pub fn cmp(&self, a: &Coeff, b: &Coeff) -> Ordering {
        match (a, b) {
            (Coeff::Q(x), Coeff::Q(y)) => x.to_big().cmp(&y.to_big()),
            (Coeff::Fp(x), Coeff::Fp(y)) => x.cmp(y),
            _ => Ordering::Equal,
        }
    }
}

impl fmt::Display for CoefficientField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientField::Rationals => write!(f, "Q"),
            CoefficientField::Prime(p) => write!(f, "Fp({p})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_fast_path_overflows_into_big() {
        let q = CoefficientField::Rationals;
        let big = q.from_i64(i64::MAX);
        let sq = q.mul(&big, &big);
        assert!(matches!(sq, Coeff::Q(Rat::Big(_))));
        let back = q.div(&sq, &big).unwrap();
        assert_eq!(back, big);
        assert!(matches!(back, Coeff::Q(Rat::Small(..))));
    }

    #[test]
    fn rational_arithmetic_reduces() {
        let a = Rat::new(2, 4).unwrap();
        assert_eq!(a, Rat::new(1, 2).unwrap());
        assert_eq!(a.add(&a), Rat::from_i64(1));
        assert_eq!(Rat::new(1, -3).unwrap().to_string(), "-1/3");
        assert_eq!(Rat::parse("6/-4").unwrap().to_string(), "-3/2");
    }

    #[test]
    fn prime_field_inverse() {
        let f = CoefficientField::prime(7).unwrap();
        for v in 1..7 {
            let a = f.from_i64(v);
            assert!(f.is_one(&f.mul(&a, &f.inv(&a).unwrap())));
        }
        assert_eq!(f.from_rat(&Rat::new(1, 2).unwrap()), Some(Coeff::Fp(4)));
        assert!(CoefficientField::prime(8).is_err());
        assert!(CoefficientField::prime(1 << 31).is_err());
    }
}
