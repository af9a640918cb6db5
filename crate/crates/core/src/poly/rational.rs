use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// An exact rational number, always in lowest terms with positive
/// denominator. Used for concrete values of `d`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalValue(BigRational);

impl RationalValue {
    pub fn zero() -> Self {
        RationalValue(BigRational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        RationalValue(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        RationalValue(BigRational::from_integer(n))
    }

    pub fn new(num: BigInt, den: BigInt) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(RationalValue(BigRational::new(num, den)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for RationalValue {
    fn from(r: BigRational) -> Self {
        RationalValue(r)
    }
}

impl fmt::Display for RationalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for RationalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalValue({self})")
    }
}

/// Parses `a` or `a/b` with an optional leading minus on either part.
impl FromStr for RationalValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let err = || Error::Parse(format!("rational {s:?}: expected a or a/b"));
        let int = |t: &str| -> Result<BigInt, Error> {
            let digits = t.strip_prefix('-').unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            t.parse().map_err(|_| err())
        };
        match s.split_once('/') {
            None => Ok(RationalValue::from_bigint(int(s)?)),
            Some((a, b)) => {
                let den = int(b)?;
                if den.is_zero() {
                    return Err(Error::Parse(format!("rational {s:?}: zero denominator")));
                }
                let r = BigRational::new(int(a)?, den);
                debug_assert!(r.denom().is_positive());
                Ok(RationalValue(r))
            }
        }
    }
}

impl Add<&RationalValue> for &RationalValue {
    type Output = RationalValue;
    fn add(self, rhs: &RationalValue) -> RationalValue {
        RationalValue(&self.0 + &rhs.0)
    }
}

impl Sub<&RationalValue> for &RationalValue {
    type Output = RationalValue;
    fn sub(self, rhs: &RationalValue) -> RationalValue {
        RationalValue(&self.0 - &rhs.0)
    }
}

impl Mul<&RationalValue> for &RationalValue {
    type Output = RationalValue;
    fn mul(self, rhs: &RationalValue) -> RationalValue {
        RationalValue(&self.0 * &rhs.0)
    }
}

impl Neg for &RationalValue {
    type Output = RationalValue;
    fn neg(self) -> RationalValue {
        RationalValue(-&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use proptest::prelude::*;

    #[test]
    fn parse_and_normalize() {
        let r: RationalValue = "6/-4".parse().unwrap();
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!("-1/2".parse::<RationalValue>().unwrap().denom(), &BigInt::from(2));
        assert_eq!("4/2".parse::<RationalValue>().unwrap().to_string(), "2");
        assert_eq!("0".parse::<RationalValue>().unwrap(), RationalValue::zero());
        for bad in ["", "1/0", "a", "1/", "/2", "1/2/3", "+1", " 1", "--1", "1.5"] {
            assert!(bad.parse::<RationalValue>().is_err(), "{bad:?}");
        }
    }

    proptest! {
        #[test]
        fn evaluation_is_a_ring_homomorphism(
            a in proptest::collection::vec(-20i64..20, 0..6),
            b in proptest::collection::vec(-20i64..20, 0..6),
            num in -9i64..9,
            den in 1i64..9,
        ) {
            let (a, b) = (Poly::from_i64s(&a), Poly::from_i64s(&b));
            let x = RationalValue::new(num.into(), den.into()).unwrap();
            prop_assert_eq!((&a * &b).eval(&x), &a.eval(&x) * &b.eval(&x));
            prop_assert_eq!((&a + &b).eval(&x), &a.eval(&x) + &b.eval(&x));
        }

        #[test]
        fn display_round_trip(num in -1000i64..1000, den in 1i64..1000) {
            let x = RationalValue::new(num.into(), den.into()).unwrap();
            prop_assert_eq!(x.to_string().parse::<RationalValue>().unwrap(), x);
        }
    }
}
