use super::CellLabel;
use crate::error::{Error, Result};
use crate::halfdiag::HalfDiagram;
use crate::poly::Poly;

/// What stacking the cap diagram of `t` on the cup diagram of `u` produces.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Pairing {
    pub even_loops: usize,
    pub odd_loops: usize,
    /// Curves joining a dot free above to a dot free below, counting dots
    /// isolated in both halves.
    pub through: usize,
}

impl Pairing {
    pub fn loops(&self) -> usize {
        self.even_loops + self.odd_loops
    }
}

/// Traces the closed loops and open curves formed by two half diagrams on
/// the same dots.
pub fn pairing(t: &HalfDiagram, u: &HalfDiagram) -> Pairing {
    let n = t.n();
    debug_assert_eq!(n, u.n());
    // For each dot: partner and decoration above (from t) and below (from u).
    let mut up = vec![None; n + 1];
    let mut down = vec![None; n + 1];
    for a in t.arcs() {
        up[a.left] = Some((a.right, a.decorated));
        up[a.right] = Some((a.left, a.decorated));
    }
    for a in u.arcs() {
        down[a.left] = Some((a.right, a.decorated));
        down[a.right] = Some((a.left, a.decorated));
    }
    let mut seen = vec![false; n + 1];
    let mut out = Pairing::default();

    // Open curves start at a dot that is free above and walk downwards.
    for start in 1..=n {
        if seen[start] || up[start].is_some() {
            continue;
        }
        let mut dot = start;
        let mut going_down = true;
        loop {
            seen[dot] = true;
            let step = if going_down { down[dot] } else { up[dot] };
            match step {
                Some((next, _)) => {
                    seen[next] = true;
                    dot = next;
                    going_down = !going_down;
                }
                None => {
                    if going_down {
                        out.through += 1;
                    }
                    break;
                }
            }
        }
    }
    // Curves free below at both ends.
    for start in 1..=n {
        if seen[start] || down[start].is_some() {
            continue;
        }
        let mut dot = start;
        let mut going_up = true;
        loop {
            seen[dot] = true;
            let step = if going_up { up[dot] } else { down[dot] };
            match step {
                Some((next, _)) => {
                    seen[next] = true;
                    dot = next;
                    going_up = !going_up;
                }
                None => break,
            }
        }
    }
    // Everything left lies on closed loops.
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        let mut parity = false;
        let mut dot = start;
        let mut going_down = true;
        loop {
            seen[dot] = true;
            let (next, dec) = if going_down { down[dot] } else { up[dot] }.expect("loops are closed");
            parity ^= dec;
            dot = next;
            going_down = !going_down;
            if dot == start && going_down {
                break;
            }
        }
        if parity {
            out.odd_loops += 1;
        } else {
            out.even_loops += 1;
        }
    }
    out
}

fn check_member(cell: CellLabel, d: &HalfDiagram, n: usize) -> Result<()> {
    if d.n() != n || d.isolated_count() != cell.through() || !cell.variant().admits(d) {
        return Err(Error::BasisMismatch(format!("{d} is not in the basis of cell {cell} at n={n}")));
    }
    Ok(())
}

/// The bilinear form of a cell module on two basis half diagrams.
///
/// Zero when a loop carries an odd number of decorations (except in dotted
/// cells, which carry none) or when fewer through curves than the cell's
/// through count survive; otherwise `d^c` for `c` closed loops, with one more
/// factor `d` in dotted cells from merging the two decorated circuits.
pub fn bilinear(cell: CellLabel, t: &HalfDiagram, u: &HalfDiagram) -> Result<Poly> {
    let n = t.n();
    cell.check(n)?;
    check_member(cell, t, n)?;
    check_member(cell, u, n)?;
    let w = pairing(t, u);
    let value = match cell {
        CellLabel::Dotted(k) if w.through >= k => Poly::d_pow(w.loops() + 1),
        CellLabel::Dotted(_) => Poly::zero(),
        _ if w.odd_loops > 0 || w.through < cell.through() => Poly::zero(),
        _ => Poly::d_pow(w.even_loops),
    };
    Ok(value)
}

/// The bilinear form of the undecorated (type A) cell module with `n - 2p`
/// through strands.
pub fn bilinear_type_a(t: &HalfDiagram, u: &HalfDiagram) -> Result<Poly> {
    let n = t.n();
    if u.n() != n || t.p() != u.p() || !t.is_undecorated() || !u.is_undecorated() {
        return Err(Error::BasisMismatch(format!("{t} and {u} are not undecorated diagrams of one shape")));
    }
    let w = pairing(t, u);
    Ok(if w.through < n - 2 * t.p() { Poly::zero() } else { Poly::d_pow(w.loops()) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::TLDiagram;
    use crate::halfdiag::enumerate;
    use crate::cellular::cells;

    fn hd(s: &str) -> HalfDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn printed_entries() {
        let b = enumerate(5, 2, crate::halfdiag::Variant::All).unwrap();
        let phi = |i: usize, j: usize| bilinear(CellLabel::Plain(1), b.get(i - 1), b.get(j - 1)).unwrap();
        assert_eq!(phi(3, 4), Poly::zero());
        assert_eq!(phi(8, 9), Poly::d());
        assert_eq!(phi(1, 1), Poly::d_pow(2));
        assert_eq!(phi(2, 9), Poly::one());
        assert_eq!(phi(1, 2), Poly::zero());
    }

    #[test]
    fn pairing_counts() {
        let w = pairing(&hd("(1,2)(3,4)(5)"), &hd("(1)(2,3)(4,5)"));
        assert_eq!(w, Pairing { even_loops: 0, odd_loops: 0, through: 1 });
        let w = pairing(&hd("(1,2)*(3)"), &hd("(1,2)(3)"));
        assert_eq!(w, Pairing { even_loops: 0, odd_loops: 1, through: 1 });
        let w = pairing(&hd("(1,2)(3)(4)"), &hd("(1)(2)(3,4)"));
        assert_eq!(w.through, 0);
        assert!(bilinear(CellLabel::Plain(1), &hd("(1,2)(3)"), &hd("(1,2)(3,4)(5)")).is_err());
    }

    /// C_{S,T} C_{U,V} equals Phi(T,U) C_{S,V} modulo lower cells.
    #[test]
    fn form_agrees_with_diagram_products() {
        for n in 2..=5 {
            for cell in cells(n).unwrap() {
                let basis = cell.basis(n).unwrap();
                let s = basis.get(0);
                let v = basis.get(basis.len() - 1);
                for t in &basis {
                    for u in &basis {
                        let left = TLDiagram::from_halves(s, t, cell).unwrap();
                        let right = TLDiagram::from_halves(u, v, cell).unwrap();
                        let prod = left.multiply(&right).unwrap();
                        let target = TLDiagram::from_halves(s, v, cell).unwrap();
                        let expected = if prod.shape() == target {
                            Poly::d_pow(prod.delta_power() as usize)
                        } else {
                            Poly::zero()
                        };
                        assert_eq!(bilinear(cell, t, u).unwrap(), expected, "n={n} {cell} {t} {u}");
                    }
                }
            }
        }
    }
}
