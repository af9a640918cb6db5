use std::collections::BTreeMap;

use super::binom;
use crate::error::{invalid, Result};
use crate::poly::{ChebyshevTable, Poly};

/// A product of powers of `Q_t`, kept as signed exponents per index.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct QProduct(BTreeMap<usize, i128>);

impl QProduct {
    fn add(&mut self, t: usize, e: i128) {
        // Q_1 = 1 contributes nothing
        if t != 1 && e != 0 {
            *self.0.entry(t).or_default() += e;
        }
    }

    fn ratio(&mut self, num: usize, den: usize, e: u64) {
        self.add(num, e as i128);
        self.add(den, -(e as i128));
    }

    fn scaled(&self, k: u64) -> QProduct {
        QProduct(self.0.iter().map(|(&t, &e)| (t, e * k as i128)).collect())
    }

    fn absorb(&mut self, other: &QProduct) {
        for (&t, &e) in &other.0 {
            self.add(t, e);
        }
    }

    /// Numerator and denominator polynomials.
    fn split(&self, table: &ChebyshevTable) -> (Poly, Poly) {
        let mut num = Poly::one();
        let mut den = Poly::one();
        for (&t, &e) in &self.0 {
            let f = table.q(t).pow(e.unsigned_abs() as u64);
            if e > 0 {
                num = num * f;
            } else {
                den = den * f;
            }
        }
        (num, den)
    }
}

fn max_index(n: usize) -> usize {
    n + 2
}

/// Closed product formula for `det G(n, p)`, `n >= 2p`. At `n = 2p` it is
/// the determinant of the pseudo Gram matrix.
pub fn closed_formula(n: usize, p: usize) -> Result<Poly> {
    if 2 * p > n {
        return Err(invalid(format!("need n >= 2p, got n={n}, p={p}")));
    }
    let mut acc = QProduct::default();
    for r in 0..p {
        acc.ratio(n - p - r + 1, p - r, binom(n, r as isize));
    }
    for s in 1..p {
        let mut inner = QProduct::default();
        let q = p - s;
        for r in 0..q {
            inner.ratio(q - r + 2, q - r, binom(2 * q + 1, r as isize));
        }
        acc.absorb(&inner.scaled(binom(n - 2 * (q + 1), s as isize - 1)));
    }
    let table = ChebyshevTable::new(max_index(n));
    let (num, den) = acc.split(&table);
    num.div_exact(&den)
}

/// Checks the product identity that turns the determinant recurrence into
/// the closed formula, as an equality of polynomials after clearing
/// denominators. Needs `n >= 2p`.
pub fn closed_formula_step_holds(n: usize, p: usize) -> Result<bool> {
    if 2 * p > n {
        return Err(invalid(format!("need n >= 2p, got n={n}, p={p}")));
    }
    if p == 0 {
        return Ok(true);
    }
    let mut lhs = QProduct::default();
    for r in 0..p {
        lhs.ratio(n - p - r + 1, p - r, binom(n, r as isize));
    }
    let mut rhs = QProduct::default();
    for r in 0..p {
        rhs.ratio(n - p - r, p - r, binom(n - 1, r as isize));
    }
    rhs.ratio(n - 2 * p + 2, n - 2 * p + 1, binom(n - 1, p as isize - 1));
    for r in 0..p - 1 {
        rhs.ratio(n - p - r + 1, p - r - 1, binom(n - 1, r as isize));
    }
    let table = ChebyshevTable::new(max_index(n));
    let (ln, ld) = lhs.split(&table);
    let (rn, rd) = rhs.split(&table);
    Ok(ln * rd == rn * ld)
}

/// A ratio of polynomials kept as a literal pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioPair {
    pub numerator: Poly,
    pub denominator: Poly,
}

impl RatioPair {
    /// Equality as rational functions, by cross-multiplication.
    pub fn same_ratio(&self, other: &RatioPair) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }

    /// `d - 1/r`.
    pub fn step(&self) -> RatioPair {
        RatioPair {
            numerator: &Poly::d() * &self.numerator - &self.denominator,
            denominator: self.numerator.clone(),
        }
    }
}

/// `r(n, p) = Q_{n-2p+2} / Q_{n-2p+1}` for `n >= 2p + 1`.
pub fn r_ratio(n: usize, p: usize) -> Result<RatioPair> {
    if n < 2 * p + 1 {
        return Err(invalid(format!("r(n, p) needs n >= 2p+1, got n={n}, p={p}")));
    }
    let m = n - 2 * p;
    let table = ChebyshevTable::new(m + 2);
    Ok(RatioPair { numerator: table.q(m + 2).clone(), denominator: table.q(m + 1).clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::chebyshev_q;

    #[test]
    fn golden_eight_three() {
        let expected: Poly = [
            Poly::d_pow(58),
            "d^2-2".parse::<Poly>().unwrap().pow(8),
            "d^2-3".parse::<Poly>().unwrap().pow(29),
            "d^4-4*d^2+2".parse::<Poly>().unwrap().pow(8),
            "d^4-5*d^2+5".parse().unwrap(),
        ]
        .into_iter()
        .product();
        assert_eq!(closed_formula(8, 3).unwrap(), expected);
    }

    #[test]
    fn trivial_and_one_pair() {
        assert_eq!(closed_formula(5, 0).unwrap(), Poly::one());
        for n in 2..=9 {
            assert_eq!(closed_formula(n, 1).unwrap(), chebyshev_q(n).unwrap());
        }
        assert!(closed_formula(3, 2).is_err());
    }

    #[test]
    fn identity_holds() {
        for n in 0..=10 {
            for p in 0..=n / 2 {
                assert!(closed_formula_step_holds(n, p).unwrap(), "n={n} p={p}");
            }
        }
    }

    #[test]
    fn ratios() {
        let r = r_ratio(5, 2).unwrap();
        assert_eq!(r.numerator, chebyshev_q(3).unwrap());
        assert_eq!(r.denominator, chebyshev_q(2).unwrap());
        // d - 2/d
        let direct = RatioPair { numerator: "d^2-2".parse().unwrap(), denominator: Poly::d() };
        assert!(r.same_ratio(&direct));
        let r4 = r_ratio(6, 2).unwrap();
        assert_eq!(r4.numerator, chebyshev_q(4).unwrap());
        for p in 0..=3 {
            for n in 2 * p + 1..=10 {
                assert!(r_ratio(n + 1, p).unwrap().same_ratio(&r_ratio(n, p).unwrap().step()));
            }
        }
        assert!(r_ratio(4, 2).is_err());
    }
}
