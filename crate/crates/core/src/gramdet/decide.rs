use serde::ser::SerializeStruct;
use serde::Serialize;

use super::{det_gram, DetMethod};
use crate::cellular::cells;
use crate::error::{invalid, Result};
use crate::poly::{ChebyshevTable, Poly, RationalValue};

/// A polynomial, or a form, with its value at the parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub family: String,
    pub index: usize,
    pub value: RationalValue,
}

impl Witness {
    pub fn new(family: impl Into<String>, index: usize, value: RationalValue) -> Self {
        Witness { family: family.into(), index, value }
    }
}

impl Serialize for Witness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Witness", 3)?;
        st.serialize_field("family", &self.family)?;
        st.serialize_field("index", &self.index)?;
        st.serialize_field("value", &self.value.to_string())?;
        st.end()
    }
}

/// A decision; when it is negative, the witnesses are the vanishing
/// quantities responsible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub decision: bool,
    pub witnesses: Vec<Witness>,
}

impl Verdict {
    /// Decision is true iff none of the candidates vanish; the vanishing ones
    /// become witnesses.
    pub(crate) fn nonvanishing(candidates: impl IntoIterator<Item = Witness>) -> Verdict {
        let witnesses: Vec<Witness> = candidates.into_iter().filter(|w| w.value.is_zero()).collect();
        Verdict { decision: witnesses.is_empty(), witnesses }
    }
}

/// `P_s` for `1 < s <= n` and `Q_t` for `2 < t <= n` at `delta`.
pub fn semisimple(n: usize, delta: &RationalValue) -> Result<Verdict> {
    if n < 4 {
        return Err(invalid(format!("the semi-simplicity criterion needs n >= 4, got {n}")));
    }
    let table = ChebyshevTable::new(n);
    let ps = (2..=n).map(|s| Witness::new("P", s, table.p(s).eval(delta)));
    let qs = (3..=n).map(|t| Witness::new("Q", t, table.q(t).eval(delta)));
    Ok(Verdict::nonvanishing(ps.chain(qs).collect::<Vec<_>>()))
}

/// Semi-simplicity read off from every cell's Gram determinant at `delta`.
/// Witnesses are named `det <cell>` with index `n`.
pub fn semisimple_crosscheck(n: usize, delta: &RationalValue) -> Result<Verdict> {
    if !(4..=6).contains(&n) {
        return Err(invalid(format!("the determinant cross-check runs for 4 <= n <= 6, got {n}")));
    }
    let mut candidates = Vec::new();
    for cell in cells(n)? {
        let det: Poly = det_gram(n, cell, DetMethod::Direct)?.det;
        candidates.push(Witness::new(format!("det {cell}"), n, det.eval(delta)));
    }
    Ok(Verdict::nonvanishing(candidates))
}

/// Quasi-heredity: every cell form is nonzero exactly when `delta != 0`.
/// At `delta = 0` the forms of the dotted cells vanish identically; they
/// are reported as `Phi dotted:k` with index `k`.
pub fn quasihereditary(n: usize, delta: &RationalValue) -> Result<Verdict> {
    if n < 2 {
        return Err(invalid(format!("need n >= 2, got {n}")));
    }
    if !delta.is_zero() {
        return Ok(Verdict { decision: true, witnesses: Vec::new() });
    }
    let witnesses = (0..=n - 2)
        .rev()
        .filter(|k| (n - k).is_multiple_of(2))
        .map(|k| Witness::new(format!("Phi dotted:{k}"), k, RationalValue::zero()))
        .collect();
    Ok(Verdict { decision: false, witnesses })
}
