//! Reference data shipped with the crate.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::halfdiag::HalfDiagram;
use crate::poly::{Poly, PolyMatrix};

const GRAM_5_2: &str = include_str!("../../data/gram_5_2.json");
const DET_8_3: &str = include_str!("../../data/det_8_3.json");

#[derive(Deserialize)]
struct GramFile {
    order: Vec<String>,
    entries: Vec<Vec<String>>,
}

#[derive(Deserialize)]
struct Factor {
    base: String,
    power: u64,
}

#[derive(Deserialize)]
struct DetFile {
    factors: Vec<Factor>,
}

fn parse_err(e: impl std::fmt::Display) -> Error {
    Error::Parse(format!("golden data: {e}"))
}

/// The printed Gram matrix of the one-through-strand cell at rank 5, with
/// its basis order.
pub fn golden_gram_5_2() -> Result<(Vec<HalfDiagram>, PolyMatrix)> {
    let raw: GramFile = serde_json::from_str(GRAM_5_2).map_err(parse_err)?;
    let order = raw.order.iter().map(|s| s.parse()).collect::<Result<Vec<HalfDiagram>>>()?;
    let rows = raw
        .entries
        .iter()
        .map(|r| r.iter().map(|e| e.parse()).collect::<Result<Vec<Poly>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok((order, PolyMatrix::from_rows(rows)?))
}

/// The printed factorisation of the Gram determinant of the two-through-strand
/// cell at rank 8, multiplied out.
pub fn golden_det_8_3() -> Result<Poly> {
    let raw: DetFile = serde_json::from_str(DET_8_3).map_err(parse_err)?;
    raw.factors.iter().map(|f| Ok(f.base.parse::<Poly>()?.pow(f.power))).product()
}
