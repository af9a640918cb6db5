//! The forked quotient `FTL_n`: the type-D algebra modulo the ideal spanned
//! by first-type diagrams (those carrying a decorated circuit).

use serde::{Deserialize, Serialize};

use crate::cellular::{cells, CellLabel};
use crate::diagram::TLDiagram;
use crate::error::{invalid, Result};
use crate::gramdet::{Verdict, Witness};
use crate::halfdiag::binomial;
use crate::poly::{ChebyshevTable, RationalValue};

/// A basis diagram of `FTL_n` times a power of `d`, or zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FtlElement {
    Zero,
    Diagram(TLDiagram),
}

impl FtlElement {
    /// Image of a type-D diagram under the quotient map.
    pub fn project(d: TLDiagram) -> FtlElement {
        if d.is_first_type() {
            FtlElement::Zero
        } else {
            FtlElement::Diagram(d)
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, FtlElement::Zero)
    }

    pub fn diagram(&self) -> Option<&TLDiagram> {
        match self {
            FtlElement::Zero => None,
            FtlElement::Diagram(d) => Some(d),
        }
    }
}

impl From<TLDiagram> for FtlElement {
    fn from(d: TLDiagram) -> Self {
        FtlElement::project(d)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ZeroJson {
    zero: bool,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawElement {
    Zero(ZeroJson),
    Diagram(TLDiagram),
}

impl Serialize for FtlElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            FtlElement::Zero => ZeroJson { zero: true }.serialize(s),
            FtlElement::Diagram(d) => d.serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for FtlElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        match RawElement::deserialize(d)? {
            RawElement::Zero(ZeroJson { zero: true }) => Ok(FtlElement::Zero),
            RawElement::Zero(_) => Err(D::Error::custom("\"zero\" must be true")),
            RawElement::Diagram(t) if t.is_first_type() => {
                Err(D::Error::custom("first-type diagrams vanish in the forked quotient"))
            }
            RawElement::Diagram(t) => Ok(FtlElement::Diagram(t)),
        }
    }
}

pub fn ftl_multiply(a: &FtlElement, b: &FtlElement) -> Result<FtlElement> {
    match (a, b) {
        (FtlElement::Diagram(x), FtlElement::Diagram(y)) => Ok(FtlElement::project(x.multiply(y)?)),
        // zero carries no rank, so it is compatible with everything
        _ => Ok(FtlElement::Zero),
    }
}

/// `binomial(2n, n) / 2`.
pub fn ftl_dim(n: usize) -> Result<u128> {
    if n < 2 {
        return Err(invalid(format!("need n >= 2, got {n}")));
    }
    Ok(binomial(2 * n, n) / 2)
}

/// The cells that survive in the quotient: all but the dotted ones.
pub fn ftl_cells(n: usize) -> Result<Vec<CellLabel>> {
    Ok(cells(n)?.into_iter().filter(|c| !c.is_dotted()).collect())
}

/// Quasi-heredity of `FTL_n` at `delta`. For odd `n` at `delta = 0` the
/// witness is the one-through-strand form evaluating to `1` on
/// `(1,2)(3,4)...(n)` and `(1)(2,3)(4,5)...`; for even `n` the forms of both
/// zero cells vanish.
pub fn ftl_quasihereditary(n: usize, delta: &RationalValue) -> Result<Verdict> {
    if n < 2 {
        return Err(invalid(format!("need n >= 2, got {n}")));
    }
    if !delta.is_zero() {
        return Ok(Verdict { decision: true, witnesses: Vec::new() });
    }
    if n % 2 == 1 {
        return Ok(Verdict { decision: true, witnesses: vec![Witness::new("Phi plain:1", 1, RationalValue::from_int(1))] });
    }
    Ok(Verdict {
        decision: false,
        witnesses: vec![
            Witness::new("Phi 0+", 0, RationalValue::zero()),
            Witness::new("Phi 0-", 0, RationalValue::zero()),
        ],
    })
}

/// Semi-simplicity of `FTL_n` at `delta`: `Q_t(delta) != 0` for `2 <= t <= n`.
pub fn ftl_semisimple(n: usize, delta: &RationalValue) -> Result<Verdict> {
    if n < 3 {
        return Err(invalid(format!("need n >= 3, got {n}")));
    }
    let table = ChebyshevTable::new(n);
    Ok(Verdict::nonvanishing((2..=n).map(|t| Witness::new("Q", t, table.q(t).eval(delta))).collect::<Vec<_>>()))
}
