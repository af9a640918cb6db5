use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::halfdiag::{enumerate, CellBasis, Variant};

/// An element of the cell poset.
///
/// `Plain(l)` has `l` through strands; `ZeroPlus`/`ZeroMinus` have none and
/// split the fully paired diagrams by decoration parity; `Dotted(k)` is the
/// first-type cell with `k` through strands and a decorated circuit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CellLabel {
    Plain(usize),
    ZeroPlus,
    ZeroMinus,
    Dotted(usize),
}

impl CellLabel {
    /// Number of through strands.
    pub fn through(self) -> usize {
        match self {
            CellLabel::Plain(l) | CellLabel::Dotted(l) => l,
            CellLabel::ZeroPlus | CellLabel::ZeroMinus => 0,
        }
    }

    /// Number of pairs of each half diagram at rank `n`.
    pub fn pairs(self, n: usize) -> usize {
        (n - self.through()) / 2
    }

    pub fn variant(self) -> Variant {
        match self {
            CellLabel::Plain(_) => Variant::All,
            CellLabel::ZeroPlus => Variant::Even,
            CellLabel::ZeroMinus => Variant::Odd,
            CellLabel::Dotted(_) => Variant::Undecorated,
        }
    }

    pub fn is_dotted(self) -> bool {
        matches!(self, CellLabel::Dotted(_))
    }

    pub fn is_zero(self) -> bool {
        matches!(self, CellLabel::ZeroPlus | CellLabel::ZeroMinus)
    }

    pub fn check(self, n: usize) -> Result<()> {
        let ok = match self {
            CellLabel::Plain(l) => l >= 1 && l <= n && (n - l).is_multiple_of(2),
            CellLabel::ZeroPlus | CellLabel::ZeroMinus => n >= 2 && n.is_multiple_of(2),
            CellLabel::Dotted(k) => n >= 2 && k + 2 <= n && (n - k).is_multiple_of(2),
        };
        if ok {
            Ok(())
        } else {
            Err(invalid(format!("cell {self} does not exist for n={n}")))
        }
    }

    /// The ordered half-diagram basis of this cell at rank `n`.
    pub fn basis(self, n: usize) -> Result<CellBasis> {
        self.check(n)?;
        enumerate(n, self.pairs(n), self.variant())
    }
}

/// The cell poset in descending order.
pub fn cells(n: usize) -> Result<Vec<CellLabel>> {
    if n < 2 {
        return Err(invalid(format!("cells need n >= 2, got {n}")));
    }
    let mut out: Vec<CellLabel> = (1..=n).rev().filter(|l| (n - l).is_multiple_of(2)).map(CellLabel::Plain).collect();
    if n.is_multiple_of(2) {
        out.push(CellLabel::ZeroPlus);
        out.push(CellLabel::ZeroMinus);
    }
    out.extend((0..=n - 2).rev().filter(|k| (n - k).is_multiple_of(2)).map(CellLabel::Dotted));
    Ok(out)
}

impl fmt::Display for CellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellLabel::Plain(l) => write!(f, "plain:{l}"),
            CellLabel::ZeroPlus => f.write_str("0+"),
            CellLabel::ZeroMinus => f.write_str("0-"),
            CellLabel::Dotted(k) => write!(f, "dotted:{k}"),
        }
    }
}

impl FromStr for CellLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse(format!("cell {s:?}: expected plain:k, 0+, 0- or dotted:k"));
        let num = |t: &str| -> Result<usize> {
            if t.is_empty() || t.len() > 6 || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            t.parse().map_err(|_| err())
        };
        match s {
            "0+" => Ok(CellLabel::ZeroPlus),
            "0-" => Ok(CellLabel::ZeroMinus),
            _ => {
                if let Some(t) = s.strip_prefix("plain:") {
                    Ok(CellLabel::Plain(num(t)?))
                } else if let Some(t) = s.strip_prefix("dotted:") {
                    Ok(CellLabel::Dotted(num(t)?))
                } else {
                    Err(err())
                }
            }
        }
    }
}
