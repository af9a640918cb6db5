//! Gram determinants by three independent routes, the ratios `r(n, p)` and
//! the semi-simplicity and quasi-heredity deciders.

mod decide;
mod formula;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::cellular::{gram, gram_pseudo, gram_type_a, CellLabel};
use crate::error::{invalid, Error, Result};
use crate::halfdiag::binomial;
use crate::poly::{det_bareiss, ChebyshevTable, Poly};

pub use decide::{quasihereditary, semisimple, semisimple_crosscheck, Verdict, Witness};
pub use formula::{closed_formula, closed_formula_step_holds, r_ratio, RatioPair};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DetMethod {
    /// Fraction-free elimination on the Gram matrix itself.
    Direct,
    Recurrence,
    Closed,
}

impl DetMethod {
    pub const ALL: [DetMethod; 3] = [DetMethod::Direct, DetMethod::Recurrence, DetMethod::Closed];
}

impl fmt::Display for DetMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DetMethod::Direct => "direct",
            DetMethod::Recurrence => "recurrence",
            DetMethod::Closed => "closed",
        })
    }
}

impl FromStr for DetMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(DetMethod::Direct),
            "recurrence" => Ok(DetMethod::Recurrence),
            "closed" => Ok(DetMethod::Closed),
            _ => Err(Error::Parse(format!("method {s:?}: expected direct, recurrence or closed"))),
        }
    }
}

/// The matrix a determinant belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DetSubject {
    Cell(CellLabel),
    /// [`gram_pseudo`] on `(2p, p)` diagrams.
    Pseudo,
    /// The undecorated form on `(n, p)` diagrams.
    TypeA { p: usize },
}

impl fmt::Display for DetSubject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DetSubject::Cell(c) => write!(f, "{c}"),
            DetSubject::Pseudo => f.write_str("pseudo"),
            DetSubject::TypeA { p } => write!(f, "typea:{p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetResult {
    pub n: usize,
    pub subject: DetSubject,
    pub method: DetMethod,
    pub det: Poly,
}

impl Serialize for DetResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("DetResult", 4)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("cell", &self.subject.to_string())?;
        st.serialize_field("method", &self.method.to_string())?;
        st.serialize_field("det", &self.det.to_string())?;
        st.end()
    }
}

fn unsupported(method: DetMethod, what: impl fmt::Display) -> Error {
    Error::MethodUnsupported { method: method.to_string(), what: what.to_string() }
}

pub(crate) fn binom(n: usize, k: isize) -> u64 {
    if k < 0 {
        0
    } else {
        u64::try_from(binomial(n, k as usize)).expect("binomial fits in u64")
    }
}

/// Determinant of the Gram matrix of `cell` at rank `n`.
pub fn det_gram(n: usize, cell: CellLabel, method: DetMethod) -> Result<DetResult> {
    cell.check(n)?;
    let det = match method {
        DetMethod::Direct => det_bareiss(gram(n, cell)?.entries())?,
        DetMethod::Recurrence => Recurrences::new(n).cell(n, cell)?,
        DetMethod::Closed => match cell {
            CellLabel::Plain(l) => closed_formula(n, (n - l) / 2)?,
            _ => return Err(unsupported(method, cell)),
        },
    };
    Ok(DetResult { n, subject: DetSubject::Cell(cell), method, det })
}

/// Determinant of [`gram_pseudo`]`(p)`.
pub fn det_gram_pseudo(p: usize, method: DetMethod) -> Result<DetResult> {
    if p == 0 {
        return Err(invalid("the pseudo Gram matrix needs p >= 1"));
    }
    let n = 2 * p;
    let det = match method {
        DetMethod::Direct => det_bareiss(gram_pseudo(p)?.entries())?,
        DetMethod::Recurrence => Recurrences::new(n).plain(n, p),
        DetMethod::Closed => closed_formula(n, p)?,
    };
    Ok(DetResult { n, subject: DetSubject::Pseudo, method, det })
}

/// Determinant of the undecorated Gram matrix on `(n, p)` diagrams.
pub fn det_gram_type_a(n: usize, p: usize, method: DetMethod) -> Result<DetResult> {
    if n == 0 || 2 * p > n {
        return Err(invalid(format!("need 0 <= 2p <= n, got n={n}, p={p}")));
    }
    let det = match method {
        DetMethod::Direct => det_bareiss(gram_type_a(n, p)?.entries())?,
        DetMethod::Recurrence => Recurrences::new(n).type_a(n, p),
        DetMethod::Closed => return Err(unsupported(method, DetSubject::TypeA { p })),
    };
    Ok(DetResult { n, subject: DetSubject::TypeA { p }, method, det })
}

/// Memoised recurrence route. `plain(n, p)` is `det G(n, p)` for `n > 2p`
/// and the pseudo determinant for `n = 2p`.
struct Recurrences {
    table: ChebyshevTable,
    plain: HashMap<(usize, usize), Poly>,
    type_a: HashMap<(usize, usize), Poly>,
}

impl Recurrences {
    fn new(n: usize) -> Self {
        Recurrences { table: ChebyshevTable::new(n + 2), plain: HashMap::new(), type_a: HashMap::new() }
    }

    fn cell(&mut self, n: usize, cell: CellLabel) -> Result<Poly> {
        Ok(match cell {
            CellLabel::Plain(l) => self.plain(n, (n - l) / 2),
            CellLabel::ZeroPlus | CellLabel::ZeroMinus => {
                let p = n / 2;
                Poly::d_pow((binomial(n, p) / 2) as usize) * self.plain(n - 1, p - 1)
            }
            CellLabel::Dotted(k) => {
                let p = (n - k) / 2;
                let size = binom(n, p as isize) - binom(n, p as isize - 1);
                Poly::d_pow(size as usize) * self.type_a(n, p)
            }
        })
    }

    fn plain(&mut self, n: usize, p: usize) -> Poly {
        if let Some(v) = self.plain.get(&(n, p)) {
            return v.clone();
        }
        let v = if p == 0 {
            Poly::one()
        } else if p == 1 {
            self.table.q(n).clone()
        } else if n == 2 * p {
            let half = Poly::d_pow((binomial(n, p) / 2) as usize) * self.plain(n - 1, p - 1);
            &half * &half
        } else {
            let m = n - 2 * p;
            let e = binom(n - 1, p as isize - 1);
            let num = self.plain(n - 1, p) * self.table.q(m + 2).pow(e) * self.plain(n - 1, p - 1);
            num.div_exact(&self.table.q(m + 1).pow(e)).expect("the recurrence divides exactly")
        };
        self.plain.insert((n, p), v.clone());
        v
    }

    fn type_a(&mut self, n: usize, p: usize) -> Poly {
        if let Some(v) = self.type_a.get(&(n, p)) {
            return v.clone();
        }
        let e = binom(n - 1, p as isize - 1) - binom(n - 1, p as isize - 2);
        let v = if p == 0 {
            Poly::one()
        } else if n == 2 * p {
            Poly::d_pow(e as usize) * self.type_a(n - 1, p - 1)
        } else {
            let m = n - 2 * p;
            let num = self.type_a(n - 1, p) * self.table.p(m + 2).pow(e) * self.type_a(n - 1, p - 1);
            num.div_exact(&self.table.p(m + 1).pow(e)).expect("the recurrence divides exactly")
        };
        self.type_a.insert((n, p), v.clone());
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cellular::cells;
    use crate::poly::{chebyshev_p, chebyshev_q};

    fn poly(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(det_gram(3, CellLabel::Plain(1), DetMethod::Direct).unwrap().det, poly("d^3-2*d"));
        assert_eq!(det_gram(4, CellLabel::ZeroPlus, DetMethod::Direct).unwrap().det, poly("d^6-2*d^4"));
        assert_eq!(det_gram_type_a(4, 1, DetMethod::Direct).unwrap().det, chebyshev_p(4));
        assert_eq!(det_gram_type_a(4, 2, DetMethod::Direct).unwrap().det, poly("d^4-d^2"));
        assert_eq!(det_gram_type_a(5, 0, DetMethod::Recurrence).unwrap().det, Poly::one());
    }

    #[test]
    fn routes_agree_up_to_six() {
        for n in 2..=6 {
            for cell in cells(n).unwrap() {
                let direct = det_gram(n, cell, DetMethod::Direct).unwrap().det;
                let rec = det_gram(n, cell, DetMethod::Recurrence).unwrap().det;
                assert_eq!(direct, rec, "n={n} {cell}");
                match det_gram(n, cell, DetMethod::Closed) {
                    Ok(r) => assert_eq!(r.det, direct, "n={n} {cell}"),
                    Err(Error::MethodUnsupported { .. }) => assert!(!matches!(cell, CellLabel::Plain(_))),
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }

    #[test]
    fn pseudo_routes_agree() {
        for p in 1..=3 {
            let d = det_gram_pseudo(p, DetMethod::Direct).unwrap().det;
            assert_eq!(d, det_gram_pseudo(p, DetMethod::Recurrence).unwrap().det);
            assert_eq!(d, det_gram_pseudo(p, DetMethod::Closed).unwrap().det);
        }
        assert_eq!(det_gram_pseudo(2, DetMethod::Direct).unwrap().det, poly("d^12-4*d^10+4*d^8"));
    }

    #[test]
    fn type_a_routes_agree() {
        for n in 1..=7 {
            for p in 0..=n / 2 {
                let a = det_gram_type_a(n, p, DetMethod::Direct).unwrap().det;
                assert_eq!(a, det_gram_type_a(n, p, DetMethod::Recurrence).unwrap().det, "n={n} p={p}");
            }
        }
    }

    #[test]
    fn one_pair_is_q() {
        for n in 3..=7 {
            assert_eq!(det_gram(n, CellLabel::Plain(n - 2), DetMethod::Direct).unwrap().det, chebyshev_q(n).unwrap());
        }
    }

    #[test]
    fn json_and_errors() {
        let r = det_gram(3, CellLabel::Plain(1), DetMethod::Closed).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"n":3,"cell":"plain:1","method":"closed","det":"d^3-2*d"}"#
        );
        assert!(matches!(
            det_gram(4, CellLabel::Dotted(0), DetMethod::Closed),
            Err(Error::MethodUnsupported { .. })
        ));
        assert!(det_gram(4, CellLabel::Plain(1), DetMethod::Direct).is_err());
        assert!(det_gram_type_a(3, 2, DetMethod::Direct).is_err());
        assert!("all".parse::<DetMethod>().is_err());
    }
}
