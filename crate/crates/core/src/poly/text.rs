use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Poly;
use crate::error::Error;

/// Exponents above this are rejected by the parser.
pub const MAX_PARSE_DEGREE: usize = 1 << 12;

impl fmt::Display for Poly {
    /// Canonical form: descending degree, `d` for the indeterminate, `*`
    /// between coefficient and power, no spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let mag = c.abs();
            match k {
                0 => write!(out, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(out, "{mag}*")?;
                    }
                    out.push('d');
                    if k > 1 {
                        write!(out, "^{k}")?;
                    }
                }
            }
        }
        f.write_str(&out)
    }
}

/// Drops whitespace at the ends and next to `+`/`-`; `None` if any other
/// whitespace remains.
fn strip_spaces(s: &str) -> Option<String> {
    let chars: Vec<char> = s.trim().chars().collect();
    let mut out = String::with_capacity(chars.len());
    for (i, &c) in chars.iter().enumerate() {
        if !c.is_whitespace() {
            out.push(c);
            continue;
        }
        let before = chars[..i].iter().rev().find(|c| !c.is_whitespace());
        let after = chars[i + 1..].iter().find(|c| !c.is_whitespace());
        if !matches!(before, Some('+' | '-')) && !matches!(after, Some('+' | '-')) {
            return None;
        }
    }
    Some(out)
}

impl FromStr for Poly {
    type Err = Error;

    /// Accepts the canonical form and, more loosely, any signed sum of terms
    /// `c`, `d`, `d^k`, `c*d`, `c*d^k` in any order. Like terms are combined.
    fn from_str(raw: &str) -> Result<Self, Error> {
        let err = |msg: &str| Error::Parse(format!("polynomial {raw:?}: {msg}"));
        let s = &strip_spaces(raw).ok_or_else(|| err("spaces are only allowed around '+' and '-'"))?;
        let bytes = s.as_bytes();
        if bytes.is_empty() {
            return Err(err("empty input"));
        }
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut pos = 0;
        let mut first = true;
        while pos < bytes.len() {
            let mut negative = false;
            match bytes[pos] {
                b'+' | b'-' => {
                    negative = bytes[pos] == b'-';
                    pos += 1;
                }
                _ if !first => return Err(err("expected '+' or '-' between terms")),
                _ => {}
            }
            first = false;

            let digits_start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let coeff = if pos > digits_start {
                let c: BigInt = s[digits_start..pos].parse().map_err(|_| err("bad integer"))?;
                if pos < bytes.len() && bytes[pos] == b'*' {
                    pos += 1;
                    if pos >= bytes.len() || bytes[pos] != b'd' {
                        return Err(err("expected 'd' after '*'"));
                    }
                } else {
                    push_term(&mut coeffs, 0, c, negative);
                    continue;
                }
                c
            } else {
                BigInt::one()
            };

            if pos >= bytes.len() || bytes[pos] != b'd' {
                return Err(err("expected a term"));
            }
            pos += 1;
            let mut degree = 1usize;
            if pos < bytes.len() && bytes[pos] == b'^' {
                pos += 1;
                let exp_start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if pos == exp_start {
                    return Err(err("missing exponent"));
                }
                degree = s[exp_start..pos]
                    .parse::<usize>()
                    .ok()
                    .filter(|&e| e <= MAX_PARSE_DEGREE)
                    .ok_or_else(|| err("exponent out of range"))?;
            }
            push_term(&mut coeffs, degree, coeff, negative);
        }
        if bytes.last().is_some_and(|b| matches!(b, b'+' | b'-')) {
            return Err(err("dangling sign"));
        }
        Ok(Poly::from_coeffs(coeffs))
    }
}

fn push_term(coeffs: &mut Vec<BigInt>, degree: usize, c: BigInt, negative: bool) {
    if coeffs.len() <= degree {
        coeffs.resize(degree + 1, BigInt::zero());
    }
    if negative {
        coeffs[degree] -= c;
    } else {
        coeffs[degree] += c;
    }
}

/// LaTeX rendering with `\delta` as the indeterminate.
pub fn to_latex(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let mag = c.abs();
        if k == 0 {
            out.push_str(&mag.to_string());
            continue;
        }
        if !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        out.push_str("\\delta");
        if k > 1 {
            let _ = write!(out, "^{{{k}}}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn formats_canonically() {
        assert_eq!(Poly::from_i64s(&[0, -2, 0, 1]).to_string(), "d^3-2*d");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::from_i64s(&[5]).to_string(), "5");
        assert_eq!(Poly::from_i64s(&[-1, 0, -1]).to_string(), "-d^2-1");
        assert_eq!(Poly::from_i64s(&[0, 3]).to_string(), "3*d");
        assert_eq!(Poly::from_i64s(&[0, -1]).to_string(), "-d");
    }

    #[test]
    fn parses_loose_forms() {
        let q: Poly = "-2*d+d^3".parse().unwrap();
        assert_eq!(q.to_string(), "d^3-2*d");
        let r: Poly = "d+d+1-1".parse().unwrap();
        assert_eq!(r.to_string(), "2*d");
        assert_eq!("0".parse::<Poly>().unwrap(), Poly::zero());
        assert_eq!("+d".parse::<Poly>().unwrap(), Poly::d());
        assert_eq!(" d^2 + 1 ".parse::<Poly>().unwrap().to_string(), "d^2+1");
        assert_eq!("- d".parse::<Poly>().unwrap(), -Poly::d());
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "x", "d^", "2*", "2*x", "d d", "d+", "-", "d^99999999", "1 2", "d ^2", "2 *d", " ", "1d", "d*2", "--d"] {
            assert!(bad.parse::<Poly>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn latex() {
        assert_eq!(to_latex(&Poly::from_i64s(&[0, -2, 0, 1])), "\\delta^{3}-2\\delta");
        assert_eq!(to_latex(&Poly::one()), "1");
        assert_eq!(to_latex(&Poly::zero()), "0");
    }

    proptest! {
        #[test]
        fn text_round_trip(coeffs in proptest::collection::vec(-1000i64..1000, 0..12)) {
            let p = Poly::from_i64s(&coeffs);
            let s = p.to_string();
            prop_assert_eq!(s.parse::<Poly>().unwrap(), p);
        }
    }
}
