use rayon::prelude::*;

use super::TLDiagram;
use crate::cellular::{cells, CellLabel};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasisCount {
    pub total: usize,
    pub first_type: usize,
    pub second_type: usize,
}

/// Every basis diagram of rank `n`, cell by cell in poset order, and within
/// a cell by `(top, bottom)` in basis order.
pub fn basis_diagrams(n: usize) -> Result<Vec<(CellLabel, TLDiagram)>> {
    let mut out = Vec::new();
    for cell in cells(n)? {
        let basis = cell.basis(n)?;
        let block: Vec<_> = basis
            .members()
            .par_iter()
            .flat_map_iter(|s| basis.iter().map(move |t| TLDiagram::from_halves(s, t, cell)))
            .collect::<Result<_>>()?;
        out.extend(block.into_iter().map(|d| (cell, d)));
    }
    Ok(out)
}

/// Counts the basis by building every diagram.
pub fn basis_count(n: usize) -> Result<BasisCount> {
    let all = basis_diagrams(n)?;
    let first_type = all.iter().filter(|(_, d)| d.is_first_type()).count();
    Ok(BasisCount { total: all.len(), first_type, second_type: all.len() - first_type })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn small_counts() {
        let c = basis_count(4).unwrap();
        assert_eq!((c.total, c.first_type, c.second_type), (48, 13, 35));
        assert_eq!(basis_count(5).unwrap().total, 167);
        assert_eq!(basis_count(2).unwrap().second_type, 3);
    }

    #[test]
    fn diagrams_are_distinct_and_round_trip() {
        for n in 2..=5 {
            let all = basis_diagrams(n).unwrap();
            let set: HashSet<_> = all.iter().map(|(_, d)| d.clone()).collect();
            assert_eq!(set.len(), all.len());
            for (cell, d) in &all {
                assert_eq!(d.inferred_cell(), *cell);
                assert!(d.is_basis() && d.is_planar());
            }
        }
    }
}
