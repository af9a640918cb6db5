use std::fmt::Write as _;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::Serialize;

use super::{bilinear, bilinear_type_a, CellLabel};
use crate::error::{invalid, Result};
use crate::halfdiag::{enumerate, CellBasis, HalfDiagram, Variant};
use crate::poly::{to_latex, Poly, PolyMatrix};

/// Which form a Gram matrix belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GramKind {
    Cell(CellLabel),
    /// The matrix on all `(2p, p)` diagrams obtained by appending an isolated
    /// dot and using the one-through-strand form at rank `2p + 1`. It is the
    /// Gram matrix of no cell module.
    Pseudo,
    /// The undecorated (type A) form.
    TypeA,
}

impl std::fmt::Display for GramKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GramKind::Cell(c) => write!(f, "{c}"),
            GramKind::Pseudo => f.write_str("pseudo"),
            GramKind::TypeA => f.write_str("typea"),
        }
    }
}

/// A symmetric matrix of form values over an ordered half-diagram basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix {
    n: usize,
    kind: GramKind,
    basis: CellBasis,
    entries: PolyMatrix,
}

impl GramMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> GramKind {
        self.kind
    }

    pub fn basis(&self) -> &CellBasis {
        &self.basis
    }

    pub fn entries(&self) -> &PolyMatrix {
        &self.entries
    }

    pub fn into_entries(self) -> PolyMatrix {
        self.entries
    }

    pub fn size(&self) -> usize {
        self.basis.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        self.entries.get(i, j)
    }

    /// Rows as comma-separated canonical polynomials, one line per row.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.size() {
            let row: Vec<String> = self.entries.row(i).iter().map(Poly::to_string).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_latex(&self) -> String {
        let size = self.size();
        let mut out = String::new();
        let _ = writeln!(out, "\\left(\\begin{{array}}{{{}}}", "c".repeat(size.max(1)));
        for i in 0..size {
            let row: Vec<String> = self.entries.row(i).iter().map(to_latex).collect();
            out.push_str(&row.join(" & "));
            out.push_str(if i + 1 < size { " \\\\\n" } else { "\n" });
        }
        out.push_str("\\end{array}\\right)\n");
        out
    }
}

impl Serialize for GramMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<Vec<String>> =
            (0..self.size()).map(|i| self.entries.row(i).iter().map(Poly::to_string).collect()).collect();
        let mut st = s.serialize_struct("GramMatrix", 4)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("cell", &self.kind.to_string())?;
        st.serialize_field("order", self.basis.members())?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

fn fill(basis: &CellBasis, f: impl Fn(&HalfDiagram, &HalfDiagram) -> Result<Poly> + Sync) -> Result<PolyMatrix> {
    let size = basis.len();
    let rows: Vec<Vec<Poly>> = (0..size)
        .into_par_iter()
        .map(|i| (0..size).map(|j| f(basis.get(i), basis.get(j))).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    PolyMatrix::from_rows(rows)
}

/// The Gram matrix of `cell` at rank `n`, over the basis in its total order.
pub fn gram(n: usize, cell: CellLabel) -> Result<GramMatrix> {
    let basis = cell.basis(n)?;
    let entries = fill(&basis, |t, u| bilinear(cell, t, u))?;
    Ok(GramMatrix { n, kind: GramKind::Cell(cell), basis, entries })
}

/// The matrix on all `(2p, p)` diagrams with entries
/// `Phi(iota(S), iota(T))` at rank `2p + 1`, `iota` appending an isolated
/// dot.
pub fn gram_pseudo(p: usize) -> Result<GramMatrix> {
    if p == 0 {
        return Err(invalid("the pseudo Gram matrix needs p >= 1"));
    }
    let n = 2 * p;
    let basis = enumerate(n, p, Variant::All)?;
    let cell = CellLabel::Plain(1);
    let entries = fill(&basis, |t, u| bilinear(cell, &t.extend_isolated(), &u.extend_isolated()))?;
    Ok(GramMatrix { n, kind: GramKind::Pseudo, basis, entries })
}

/// The Gram matrix of the undecorated cell module on `(n, p)` diagrams.
pub fn gram_type_a(n: usize, p: usize) -> Result<GramMatrix> {
    let basis = enumerate(n, p, Variant::Undecorated)?;
    let entries = fill(&basis, bilinear_type_a)?;
    Ok(GramMatrix { n, kind: GramKind::TypeA, basis, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cellular::cells;

    #[test]
    fn trivial_cells() {
        let g = gram(5, CellLabel::Plain(5)).unwrap();
        assert_eq!(g.size(), 1);
        assert_eq!(g.get(0, 0), &Poly::one());
        assert_eq!(gram_type_a(4, 0).unwrap().get(0, 0), &Poly::one());
    }

    #[test]
    fn pseudo_p1() {
        let g = gram_pseudo(1).unwrap();
        let d = Poly::d();
        assert_eq!(g.entries().to_rows(), vec![vec![d.clone(), Poly::zero()], vec![Poly::zero(), d]]);
        assert!(gram_pseudo(0).is_err());
    }

    #[test]
    fn symmetric_monomial_entries() {
        for n in 2..=6 {
            for cell in cells(n).unwrap() {
                let g = gram(n, cell).unwrap();
                assert!(g.entries().is_symmetric());
                for i in 0..g.size() {
                    for j in 0..g.size() {
                        let e = g.get(i, j);
                        assert!(e.is_zero() || e.as_d_power().is_some(), "{e}");
                    }
                }
            }
        }
    }

    #[test]
    fn dotted_is_d_times_type_a() {
        let dotted = gram(4, CellLabel::Dotted(0)).unwrap();
        let typea = gram_type_a(4, 2).unwrap();
        assert_eq!(dotted.entries(), &typea.entries().scale(&Poly::d()));
    }

    #[test]
    fn output_formats() {
        let g = gram_pseudo(1).unwrap();
        assert_eq!(g.to_csv(), "d,0\n0,d\n");
        assert!(g.to_latex().contains("\\delta & 0"));
        let j = serde_json::to_string(&gram(2, CellLabel::ZeroPlus).unwrap()).unwrap();
        assert_eq!(j, r#"{"n":2,"cell":"0+","order":[{"n":2,"pairs":[[1,2]],"decorations":[]}],"entries":[["d"]]}"#);
    }
}
