//! Restriction of cell modules from rank `n` to rank `n - 1`.
//!
//! Basis vectors whose last dot is isolated span a submodule for the
//! generators of rank `n - 1`; the remaining vectors span the quotient. Both
//! pieces are compared, matrix entry by matrix entry, with cell modules of
//! rank `n - 1` through the bijections that delete the last dot.

use super::{action_matrix, CellLabel};
use crate::diagram::GeneratorId;
use crate::error::{invalid, Result};
use crate::halfdiag::{CellBasis, HalfDiagram, Sign};
use crate::poly::{Poly, PolyMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchingReport {
    pub n: usize,
    pub cell: CellLabel,
    pub sub_dim: usize,
    pub quotient_dim: usize,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl BranchingReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A piece of the restricted module, described as a rank `n - 1` module.
enum Model {
    /// One cell module; `index[i]` is the position in its basis of the
    /// preimage of the `i`-th vector of the piece.
    Cell { cell: CellLabel, index: Vec<usize> },
    /// The direct sum of the two signed modules with no through strands.
    SignedSum { sign: Vec<Sign>, index: Vec<usize> },
    /// The piece is killed by every generator.
    Zero,
}

fn positions(basis: &CellBasis, preimages: &[HalfDiagram]) -> Result<Vec<usize>> {
    preimages
        .iter()
        .map(|d| basis.index_of(d).ok_or_else(|| invalid(format!("{d} has no preimage in the smaller basis"))))
        .collect()
}

fn model_for(n: usize, members: &[HalfDiagram], cell: Option<CellLabel>, map: impl Fn(&HalfDiagram) -> Result<HalfDiagram>) -> Result<Model> {
    let Some(cell) = cell else {
        return Ok(Model::Zero);
    };
    let pre: Vec<HalfDiagram> = members.iter().map(map).collect::<Result<_>>()?;
    let basis = cell.basis(n - 1)?;
    if basis.len() != pre.len() {
        return Err(invalid(format!("piece of size {} does not match {cell} at n={}", pre.len(), n - 1)));
    }
    Ok(Model::Cell { cell, index: positions(&basis, &pre)? })
}

fn drop_last_arc(d: &HalfDiagram) -> Result<HalfDiagram> {
    if d.n() == 2 * d.p() {
        d.map_beta(Sign::of(d))
    } else {
        d.map_gamma()
    }
}

fn drop_last_dot(d: &HalfDiagram) -> Result<HalfDiagram> {
    d.remove_last_isolated().ok_or_else(|| invalid(format!("last dot of {d} is not isolated")))
}

/// Checks the restriction of the cell module of `cell` at rank `n >= 3`.
pub fn branching_check_cell(n: usize, cell: CellLabel) -> Result<BranchingReport> {
    if n < 3 {
        return Err(invalid("restriction needs n >= 3"));
    }
    let basis = cell.basis(n)?;
    let (sub, quot): (Vec<usize>, Vec<usize>) = (0..basis.len()).partition(|&i| basis.get(i).mate(n).is_none());
    let sub_members: Vec<HalfDiagram> = sub.iter().map(|&i| basis.get(i).clone()).collect();
    let quot_members: Vec<HalfDiagram> = quot.iter().map(|&i| basis.get(i).clone()).collect();

    let (sub_model, quot_model) = match cell {
        CellLabel::Plain(l) => {
            let sub_model = if l >= 2 {
                model_for(n, &sub_members, Some(CellLabel::Plain(l - 1)), drop_last_dot)?
            } else {
                let pre: Vec<HalfDiagram> = sub_members.iter().map(drop_last_dot).collect::<Result<_>>()?;
                let sign: Vec<Sign> = pre.iter().map(Sign::of).collect();
                let plus = CellLabel::ZeroPlus.basis(n - 1)?;
                let minus = CellLabel::ZeroMinus.basis(n - 1)?;
                let index = pre
                    .iter()
                    .zip(&sign)
                    .map(|(d, s)| {
                        let b = if *s == Sign::Plus { &plus } else { &minus };
                        b.index_of(d).ok_or_else(|| invalid(format!("{d} missing from signed basis")))
                    })
                    .collect::<Result<_>>()?;
                Model::SignedSum { sign, index }
            };
            let quot_cell = (l + 2 <= n).then_some(CellLabel::Plain(l + 1));
            (sub_model, model_for(n, &quot_members, quot_cell, drop_last_arc)?)
        }
        CellLabel::ZeroPlus | CellLabel::ZeroMinus => {
            (Model::Zero, model_for(n, &quot_members, Some(CellLabel::Plain(1)), drop_last_arc)?)
        }
        CellLabel::Dotted(k) => {
            let sub_cell = (k >= 1).then(|| CellLabel::Dotted(k - 1));
            let quot_cell = (k + 4 <= n).then_some(CellLabel::Dotted(k + 1));
            (
                model_for(n, &sub_members, sub_cell, drop_last_dot)?,
                model_for(n, &quot_members, quot_cell, drop_last_arc)?,
            )
        }
    };

    let mut report = BranchingReport {
        n,
        cell,
        sub_dim: sub.len(),
        quotient_dim: quot.len(),
        checks: 0,
        failures: Vec::new(),
    };
    for g in GeneratorId::all(n - 1) {
        let a = action_matrix(n, cell, g)?.entries;
        report.checks += 1;
        if quot.iter().any(|&i| sub.iter().any(|&j| !a.get(i, j).is_zero())) {
            report.failures.push(format!("{g}: the submodule is not invariant"));
        }
        for (name, rows, model) in [("submodule", &sub, &sub_model), ("quotient", &quot, &quot_model)] {
            report.checks += 1;
            let block = a.select(rows, rows);
            let expected = expected_block(n - 1, g, model, rows.len())?;
            if block != expected {
                report.failures.push(format!("{g}: {name} action differs from its model"));
            }
        }
    }
    Ok(report)
}

fn expected_block(m: usize, g: GeneratorId, model: &Model, size: usize) -> Result<PolyMatrix> {
    Ok(match model {
        Model::Zero => PolyMatrix::zeros(size, size),
        Model::Cell { cell, index } => action_matrix(m, *cell, g)?.entries.select(index, index),
        Model::SignedSum { sign, index } => {
            let plus = action_matrix(m, CellLabel::ZeroPlus, g)?.entries;
            let minus = action_matrix(m, CellLabel::ZeroMinus, g)?.entries;
            PolyMatrix::from_fn(size, size, |i, j| match (sign[i], sign[j]) {
                (Sign::Plus, Sign::Plus) => plus.get(index[i], index[j]).clone(),
                (Sign::Minus, Sign::Minus) => minus.get(index[i], index[j]).clone(),
                _ => Poly::zero(),
            })
        }
    })
}

/// Checks the restriction of the `(n, p)` cell modules: the plain cell with
/// `n - 2p` through strands, or both signed cells when `n = 2p`.
pub fn branching_check(n: usize, p: usize) -> Result<Vec<BranchingReport>> {
    if 2 * p > n {
        return Err(invalid(format!("need 2p <= n, got n={n}, p={p}")));
    }
    if 2 * p == n {
        Ok(vec![branching_check_cell(n, CellLabel::ZeroPlus)?, branching_check_cell(n, CellLabel::ZeroMinus)?])
    } else {
        Ok(vec![branching_check_cell(n, CellLabel::Plain(n - 2 * p))?])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cellular::cells;

    #[test]
    fn five_two() {
        let r = branching_check(5, 2).unwrap();
        assert_eq!(r.len(), 1);
        assert!(r[0].ok(), "{:?}", r[0].failures);
        assert_eq!((r[0].sub_dim, r[0].quotient_dim), (6, 4));
    }

    #[test]
    fn four_two_signed() {
        for r in branching_check(4, 2).unwrap() {
            assert!(r.ok(), "{:?}", r.failures);
            assert_eq!(r.quotient_dim, 3);
        }
    }

    #[test]
    fn every_cell_up_to_five() {
        for n in 3..=5 {
            for cell in cells(n).unwrap() {
                let r = branching_check_cell(n, cell).unwrap();
                assert!(r.ok(), "n={n} {cell}: {:?}", r.failures);
            }
        }
    }
}
