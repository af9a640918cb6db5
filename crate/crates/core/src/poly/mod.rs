//! Exact arithmetic in `Z[d]`, the ring every Gram entry and determinant
//! lives in.
//!
//! [`Poly`] is a dense univariate polynomial with arbitrary-precision integer
//! coefficients. Its canonical text form (`d^3-2*d`, zero is `0`) is used by
//! every JSON, CSV and CLI surface of the crate.

mod chebyshev;
mod matrix;
mod rational;
mod text;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use chebyshev::{chebyshev_p, chebyshev_q, ChebyshevTable};
pub use matrix::{det_bareiss, det_interpolate, PolyMatrix};
pub use rational::RationalValue;
pub use text::to_latex;

/// A polynomial in the indeterminate `d` (the loop parameter).
///
/// `coeffs[k]` is the coefficient of `d^k`. The highest stored coefficient is
/// never zero, so the zero polynomial is the empty vector and structural
/// equality is polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(1)
    }

    /// The indeterminate `d`.
    pub fn d() -> Self {
        Poly::monomial(1, 1)
    }

    pub fn constant(c: i64) -> Self {
        Poly::from_coeffs(vec![BigInt::from(c)])
    }

    /// `c * d^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        if c == 0 {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::from(c);
        Poly { coeffs }
    }

    /// `d^k`.
    pub fn d_pow(k: usize) -> Self {
        Poly::monomial(1, k)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Ascending coefficients as machine integers, for tests and fixtures.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// If `self = d^k` returns `k`.
    pub fn as_d_power(&self) -> Option<usize> {
        let k = self.degree()?;
        (self.coeffs[k].is_one() && self.coeffs[..k].iter().all(Zero::is_zero)).then_some(k)
    }

    /// Multiplies by `d^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// `c * d^k * self`.
    pub fn scale_by_monomial(&self, c: &BigInt, k: usize) -> Poly {
        self.scale(c).shift(k)
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Polynomial long division; `b` must be nonzero. Over `Z` this requires
    /// the intermediate leading coefficients to be divisible by `lc(b)`; when
    /// they are not, `NotDivisible` is returned.
    pub fn div_rem(&self, b: &Poly) -> Result<(Poly, Poly)> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let lead = &b.coeffs[db];
        let mut rem = self.coeffs.clone();
        let Some(da) = self.degree() else {
            return Ok((Poly::zero(), Poly::zero()));
        };
        if da < db {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let top = &rem[k + db];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                if !bj.is_zero() {
                    rem[k + j] -= &q * bj;
                }
            }
            quot[k] = q;
        }
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Exact quotient `a / b`.
    pub fn div_exact(&self, b: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(b)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }

    pub fn eval(&self, x: &RationalValue) -> RationalValue {
        // Horner over the rationals; denominators stay reduced.
        let mut acc = RationalValue::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &RationalValue::from_bigint(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Largest `k` with `d^k | self` (zero for the zero polynomial).
    pub fn d_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn has_negative_coeff(&self) -> bool {
        self.coeffs.iter().any(Signed::is_negative)
    }
}

fn add_coeffs(a: &[BigInt], b: &[BigInt], negate_b: bool) -> Poly {
    let len = a.len().max(b.len());
    let mut out = Vec::with_capacity(len);
    for k in 0..len {
        let x = a.get(k);
        let y = b.get(k);
        out.push(match (x, y) {
            (Some(x), Some(y)) if negate_b => x - y,
            (Some(x), Some(y)) => x + y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) if negate_b => -y,
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        });
    }
    Poly::from_coeffs(out)
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        add_coeffs(&self.coeffs, &rhs.coeffs, false)
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        add_coeffs(&self.coeffs, &rhs.coeffs, true)
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        *self = &*self - rhs;
    }
}

impl std::iter::Product for Poly {
    fn product<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::one(), |acc, p| acc * p)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(p("d^2+1") + p("d"), p("d^2+d+1"));
        assert_eq!(p("d") * p("d"), p("d^2"));
        // d*Q_3 - Q_2 is Q_4
        assert_eq!(p("d") * p("d^3-2*d") - p("d^2"), p("d^4-3*d^2"));
        assert_eq!(p("d^2-1").scale_by_monomial(&BigInt::from(-3), 2), p("-3*d^4+3*d^2"));
    }

    #[test]
    fn canonical_form() {
        assert_eq!(p("d^2-d^2"), Poly::zero());
        assert!(Poly::from_i64s(&[0, 0, 0]).is_zero());
        assert_eq!(Poly::from_i64s(&[1, 2, 0]).degree(), Some(1));
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn exact_division() {
        assert_eq!(p("d^3-2*d").div_exact(&p("d")).unwrap(), p("d^2-2"));
        assert_eq!(p("d^6-5*d^4+5*d^2").div_exact(&p("d^2")).unwrap(), p("d^4-5*d^2+5"));
        assert_eq!(p("d^2+1").div_exact(&p("d")), Err(Error::NotDivisible));
        assert_eq!(p("d").div_exact(&Poly::zero()), Err(Error::DivisionByZero));
        assert_eq!(Poly::zero().div_exact(&p("d+1")).unwrap(), Poly::zero());
        // leading coefficient not a unit
        assert_eq!(p("2*d^2+2").div_exact(&p("2*d")), Err(Error::NotDivisible));
        assert_eq!(p("4*d^2-1").div_exact(&p("2*d+1")).unwrap(), p("2*d-1"));
    }

    #[test]
    fn power_and_valuation() {
        assert_eq!(p("d-1").pow(3), p("d^3-3*d^2+3*d-1"));
        assert_eq!(p("d").pow(0), Poly::one());
        assert_eq!(p("d^5-d^3").d_valuation(), 3);
        assert_eq!(p("d^7").as_d_power(), Some(7));
        assert_eq!(p("2*d^7").as_d_power(), None);
        assert_eq!(p("1").as_d_power(), Some(0));
    }

    #[test]
    fn evaluation() {
        let one = RationalValue::from_int(1);
        assert_eq!(chebyshev_p(3).eval(&one), RationalValue::zero());
        assert_eq!(chebyshev_q(3).unwrap().eval(&one), RationalValue::from_int(-1));
        let half: RationalValue = "1/2".parse().unwrap();
        assert_eq!(Poly::zero().eval(&half), RationalValue::zero());
        assert_eq!(p("4*d^2-1").eval(&half), RationalValue::zero());
        assert_eq!(p("d^3").eval(&half), "1/8".parse().unwrap());
    }
}
