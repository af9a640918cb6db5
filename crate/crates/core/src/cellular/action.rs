use super::CellLabel;
use crate::diagram::{Endpoint, GeneratorId, TLDiagram};
use crate::error::{Error, Result};
use crate::halfdiag::{CellBasis, HalfDiagram};
use crate::poly::{Poly, PolyMatrix};

/// The image of a basis vector of a cell module under a diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActionResult {
    /// The product falls into a lower cell.
    Zero,
    /// `d^delta_power` times the basis vector `diagram`.
    Term { delta_power: u32, diagram: HalfDiagram },
}

/// Acts with the diagram `a` on the basis vector `s` of the cell module of
/// `cell`, by stacking `a` on top of the cup diagram of `s`.
pub fn act(cell: CellLabel, a: &TLDiagram, s: &HalfDiagram) -> Result<ActionResult> {
    let n = a.n();
    if s.n() != n {
        return Err(Error::SizeMismatch(n, s.n()));
    }
    cell.check(n)?;
    if s.isolated_count() != cell.through() || !cell.variant().admits(s) {
        return Err(Error::BasisMismatch(format!("{s} is not in the basis of cell {cell}")));
    }
    let dotted = cell.is_dotted();
    if a.is_first_type() && !dotted {
        return Ok(ActionResult::Zero);
    }

    // Bottom endpoints of `a` already absorbed into some path or loop.
    let mut used = vec![false; n + 1];
    let mut arcs: Vec<(usize, usize, bool)> = Vec::new();
    let mut through = 0;
    let mut top_done = vec![false; n + 1];

    for i in 1..=n {
        if top_done[i] {
            continue;
        }
        top_done[i] = true;
        let mut parity = a.strand_decorated(Endpoint::Top(i));
        let mut at = a.mate_of(Endpoint::Top(i));
        loop {
            match at {
                Endpoint::Top(j) => {
                    top_done[j] = true;
                    arcs.push((i.min(j), i.max(j), parity));
                    break;
                }
                Endpoint::Bottom(k) => {
                    used[k] = true;
                    match s.arc_at(k) {
                        None => {
                            through += 1;
                            break;
                        }
                        Some(arc) => {
                            let k2 = if arc.left == k { arc.right } else { arc.left };
                            used[k2] = true;
                            parity ^= arc.decorated ^ a.strand_decorated(Endpoint::Bottom(k2));
                            at = a.mate_of(Endpoint::Bottom(k2));
                        }
                    }
                }
            }
        }
    }

    // What remains are curves between two isolated dots of `s`, which lower
    // the number of through strands, and closed loops.
    let mut even_loops = 0u32;
    let mut odd_loops = 0u32;
    for start in 1..=n {
        if used[start] || s.arc_at(start).is_some() {
            continue;
        }
        used[start] = true;
        let mut k = start;
        loop {
            let Endpoint::Bottom(k2) = a.mate_of(Endpoint::Bottom(k)) else { unreachable!() };
            used[k2] = true;
            match s.arc_at(k2) {
                None => break,
                Some(arc) => {
                    k = if arc.left == k2 { arc.right } else { arc.left };
                    used[k] = true;
                }
            }
        }
    }
    for start in 1..=n {
        if used[start] {
            continue;
        }
        let mut parity = false;
        let mut k = start;
        loop {
            used[k] = true;
            let arc = s.arc_at(k).expect("loops avoid isolated dots");
            let k2 = if arc.left == k { arc.right } else { arc.left };
            used[k2] = true;
            parity ^= arc.decorated ^ a.strand_decorated(Endpoint::Bottom(k2));
            let Endpoint::Bottom(next) = a.mate_of(Endpoint::Bottom(k2)) else { unreachable!() };
            k = next;
            if k == start {
                break;
            }
        }
        if parity {
            odd_loops += 1;
        } else {
            even_loops += 1;
        }
    }

    if through < cell.through() {
        return Ok(ActionResult::Zero);
    }
    let extra = if dotted {
        even_loops + odd_loops + u32::from(a.is_first_type())
    } else {
        if odd_loops > 0 {
            return Ok(ActionResult::Zero);
        }
        even_loops
    };
    let delta_power =
        a.delta_power().checked_add(extra).ok_or_else(|| Error::InvalidArguments("power of d overflows".into()))?;
    let pairs: Vec<(usize, usize)> = arcs.iter().map(|&(l, r, _)| (l, r)).collect();
    let decorations: Vec<(usize, usize)> =
        if dotted { Vec::new() } else { arcs.iter().filter(|x| x.2).map(|&(l, r, _)| (l, r)).collect() };
    let diagram = HalfDiagram::new(n, &pairs, &decorations)?;
    if !cell.variant().admits(&diagram) {
        return Err(Error::BasisMismatch(format!("{diagram} left the basis of cell {cell}")));
    }
    Ok(ActionResult::Term { delta_power, diagram })
}

/// Matrix of a diagram acting on a cell module: column `j` expands `a`
/// applied to basis vector `j`.
pub fn diagram_action_matrix(cell: CellLabel, a: &TLDiagram, basis: &CellBasis) -> Result<PolyMatrix> {
    let size = basis.len();
    let mut m = PolyMatrix::zeros(size, size);
    for (j, s) in basis.iter().enumerate() {
        if let ActionResult::Term { delta_power, diagram } = act(cell, a, s)? {
            let i = basis
                .index_of(&diagram)
                .ok_or_else(|| Error::BasisMismatch(format!("{diagram} is not in the basis")))?;
            m.set(i, j, Poly::d_pow(delta_power as usize));
        }
    }
    Ok(m)
}

/// A generator acting on a cell module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionMatrix {
    pub n: usize,
    pub cell: CellLabel,
    pub generator: GeneratorId,
    pub entries: PolyMatrix,
}

pub fn action_matrix(n: usize, cell: CellLabel, g: GeneratorId) -> Result<ActionMatrix> {
    let basis = cell.basis(n)?;
    let entries = diagram_action_matrix(cell, &g.diagram(n)?, &basis)?;
    Ok(ActionMatrix { n, cell, generator: g, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cellular::{cells, gram};
    use crate::diagram::{basis_diagrams, parse_word, evaluate_word};

    fn hd(s: &str) -> HalfDiagram {
        s.parse().unwrap()
    }

    fn term(k: u32, s: &str) -> ActionResult {
        ActionResult::Term { delta_power: k, diagram: hd(s) }
    }

    #[test]
    fn small_examples() {
        let e1 = GeneratorId::E(1).diagram(3).unwrap();
        let eb = GeneratorId::Bar1.diagram(3).unwrap();
        let cell = CellLabel::Plain(1);
        assert_eq!(act(cell, &e1, &hd("(1,2)(3)")).unwrap(), term(1, "(1,2)(3)"));
        assert_eq!(act(cell, &e1, &hd("(1)(2,3)")).unwrap(), term(0, "(1,2)(3)"));
        assert_eq!(act(cell, &eb, &hd("(1,2)(3)")).unwrap(), ActionResult::Zero);
        assert_eq!(act(cell, &eb, &hd("(1)(2,3)")).unwrap(), term(0, "(1,2)*(3)"));
        assert!(act(cell, &e1, &hd("(1)(2)(3)")).is_err());
    }

    /// a C_{S,T} = r C_{S',T} modulo lower cells, for every basis diagram a.
    #[test]
    fn agrees_with_diagram_products() {
        for n in 2..=4 {
            let all = basis_diagrams(n).unwrap();
            for cell in cells(n).unwrap() {
                let basis = cell.basis(n).unwrap();
                let t = basis.get(0);
                for (_, a) in &all {
                    for s in &basis {
                        let prod = a.multiply(&crate::diagram::TLDiagram::from_halves(s, t, cell).unwrap()).unwrap();
                        let got = act(cell, a, s).unwrap();
                        let (top, _) = prod.cut();
                        let in_cell = prod.inferred_cell() == cell;
                        let expected = if in_cell {
                            ActionResult::Term { delta_power: prod.delta_power(), diagram: top }
                        } else {
                            ActionResult::Zero
                        };
                        assert_eq!(got, expected, "n={n} {cell} a={a:?} s={s}");
                    }
                }
            }
        }
    }

    #[test]
    fn generators_are_self_adjoint() {
        for n in 2..=5 {
            for cell in cells(n).unwrap() {
                let g = gram(n, cell).unwrap();
                for gen in GeneratorId::all(n) {
                    let a = action_matrix(n, cell, gen).unwrap().entries;
                    let lhs = a.transpose().mul(g.entries()).unwrap();
                    let rhs = g.entries().mul(&a).unwrap();
                    assert_eq!(lhs, rhs, "n={n} {cell} {gen}");
                }
            }
        }
    }

    #[test]
    fn words_act_as_products_of_matrices() {
        let n = 5;
        for cell in cells(n).unwrap() {
            let basis = cell.basis(n).unwrap();
            let word = parse_word("e2 eb1 e3 e1 e2 e4").unwrap();
            let d = evaluate_word(n, &word).unwrap();
            let direct = diagram_action_matrix(cell, &d, &basis).unwrap();
            let mut acc = PolyMatrix::identity(basis.len());
            for g in &word {
                acc = acc.mul(&action_matrix(n, cell, *g).unwrap().entries).unwrap();
            }
            assert_eq!(direct, acc, "{cell}");
        }
    }
}
