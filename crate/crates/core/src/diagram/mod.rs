//! Decorated Temperley-Lieb diagrams and their multiplication.
//!
//! A diagram has `n` top and `n` bottom endpoints joined in a planar perfect
//! matching. Each strand carries a decoration bit; first-type diagrams carry
//! a decorated circuit instead and no decorations. The basis diagrams are
//! exactly the images of [`TLDiagram::from_halves`].

mod basis;
mod generator;
mod json;
mod multiply;

use std::fmt;

use crate::cellular::CellLabel;
use crate::error::{Error, Result};
use crate::halfdiag::{Arc, HalfDiagram};

pub use basis::{basis_count, basis_diagrams, BasisCount};
pub use generator::{evaluate_word, parse_word, GeneratorId};

/// A boundary point, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Endpoint {
    // Bottom sorts first so that labels order as "b.." < "t..".
    Bottom(usize),
    Top(usize),
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::Top(i) => write!(f, "t{i}"),
            Endpoint::Bottom(i) => write!(f, "b{i}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TLDiagram {
    n: usize,
    // Endpoint indices: top i is i-1, bottom i is n+i-1.
    mate: Vec<usize>,
    // Decoration bit of the strand through each endpoint (equal at both ends).
    decorated: Vec<bool>,
    decorated_circuit: bool,
    delta_power: u32,
}

impl TLDiagram {
    pub fn identity(n: usize) -> TLDiagram {
        let mate = (0..2 * n).map(|e| if e < n { e + n } else { e - n }).collect();
        TLDiagram { n, mate, decorated: vec![false; 2 * n], decorated_circuit: false, delta_power: 0 }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn decorated_circuit(&self) -> bool {
        self.decorated_circuit
    }

    /// First type: carries a decorated circuit.
    pub fn is_first_type(&self) -> bool {
        self.decorated_circuit
    }

    pub fn delta_power(&self) -> u32 {
        self.delta_power
    }

    pub fn with_delta_power(mut self, k: u32) -> TLDiagram {
        self.delta_power = k;
        self
    }

    /// The same diagram with scalar `d^0`.
    pub fn shape(&self) -> TLDiagram {
        self.clone().with_delta_power(0)
    }

    fn index(&self, e: Endpoint) -> usize {
        match e {
            Endpoint::Top(i) => i - 1,
            Endpoint::Bottom(i) => self.n + i - 1,
        }
    }

    fn endpoint(&self, idx: usize) -> Endpoint {
        if idx < self.n {
            Endpoint::Top(idx + 1)
        } else {
            Endpoint::Bottom(idx - self.n + 1)
        }
    }

    pub fn mate_of(&self, e: Endpoint) -> Endpoint {
        self.endpoint(self.mate[self.index(e)])
    }

    /// Decoration bit of the strand through `e`.
    pub fn strand_decorated(&self, e: Endpoint) -> bool {
        self.decorated[self.index(e)]
    }

    /// Each strand once, as `(a, b, decorated)` with `a < b`, sorted by `a`.
    pub fn strands(&self) -> Vec<(Endpoint, Endpoint, bool)> {
        let mut out: Vec<_> = (0..2 * self.n)
            .filter(|&i| i < self.mate[i])
            .map(|i| {
                let (a, b) = (self.endpoint(i), self.endpoint(self.mate[i]));
                let (a, b) = if a < b { (a, b) } else { (b, a) };
                (a, b, self.decorated[i])
            })
            .collect();
        out.sort();
        out
    }

    /// Number of strands joining top to bottom.
    pub fn through_count(&self) -> usize {
        (0..self.n).filter(|&i| self.mate[i] >= self.n).count()
    }

    pub fn decoration_count(&self) -> usize {
        (0..2 * self.n).filter(|&i| i < self.mate[i] && self.decorated[i]).count()
    }

    /// Builds the basis diagram with `top` as its upper half and `bottom` as
    /// its lower half in `cell`.
    pub fn from_halves(top: &HalfDiagram, bottom: &HalfDiagram, cell: CellLabel) -> Result<TLDiagram> {
        let n = top.n();
        if bottom.n() != n {
            return Err(Error::IncompatibleHalves(format!("{top} and {bottom} have different sizes")));
        }
        cell.check(n).map_err(|e| Error::IncompatibleHalves(e.to_string()))?;
        let variant = cell.variant();
        for half in [top, bottom] {
            if half.isolated_count() != cell.through() || !variant.admits(half) {
                return Err(Error::IncompatibleHalves(format!("{half} is not in the basis of cell {cell}")));
            }
        }
        let mut d = TLDiagram {
            n,
            mate: vec![0; 2 * n],
            decorated: vec![false; 2 * n],
            decorated_circuit: cell.is_dotted(),
            delta_power: 0,
        };
        for (half, offset) in [(top, 0), (bottom, n)] {
            for a in half.arcs() {
                d.join(offset + a.left - 1, offset + a.right - 1, a.decorated);
            }
        }
        let odd = (top.decoration_count() + bottom.decoration_count()) % 2 == 1;
        for (x, (t, b)) in top.isolated().into_iter().zip(bottom.isolated()).enumerate() {
            d.join(t - 1, n + b - 1, odd && x == 0);
        }
        Ok(d)
    }

    fn join(&mut self, a: usize, b: usize, decorated: bool) {
        self.mate[a] = b;
        self.mate[b] = a;
        self.decorated[a] = decorated;
        self.decorated[b] = decorated;
    }

    /// The top and bottom half diagrams. Vertical-strand decorations and the
    /// decorated circuit are dropped.
    pub fn cut(&self) -> (HalfDiagram, HalfDiagram) {
        self.try_cut().expect("halves of a basis diagram are valid")
    }

    fn try_cut(&self) -> Option<(HalfDiagram, HalfDiagram)> {
        let half = |offset: usize| {
            let arcs: Vec<Arc> = (offset..offset + self.n)
                .filter(|&i| i < self.mate[i] && self.mate[i] < offset + self.n)
                .map(|i| Arc { left: i - offset + 1, right: self.mate[i] - offset + 1, decorated: self.decorated[i] })
                .collect();
            let pairs: Vec<_> = arcs.iter().map(|a| (a.left, a.right)).collect();
            let decs: Vec<_> = arcs.iter().filter(|a| a.decorated).map(|a| (a.left, a.right)).collect();
            HalfDiagram::new(self.n, &pairs, &decs).ok()
        };
        Some((half(0)?, half(self.n)?))
    }

    /// The cell whose basis contains this diagram's shape.
    pub fn inferred_cell(&self) -> CellLabel {
        let through = self.through_count();
        if self.decorated_circuit {
            CellLabel::Dotted(through)
        } else if through == 0 {
            let top_decorations = (0..self.n).filter(|&i| i < self.mate[i] && self.decorated[i]).count();
            if top_decorations % 2 == 0 {
                CellLabel::ZeroPlus
            } else {
                CellLabel::ZeroMinus
            }
        } else {
            CellLabel::Plain(through)
        }
    }

    /// Whether the shape is a basis diagram, i.e. rebuilt exactly by
    /// [`from_halves`](Self::from_halves) from its own cut.
    pub fn is_basis(&self) -> bool {
        let Some((top, bottom)) = self.try_cut() else { return false };
        TLDiagram::from_halves(&top, &bottom, self.inferred_cell()).is_ok_and(|d| d == self.shape())
    }

    /// Top-bottom mirror image (the anti-involution of the algebra).
    pub fn flip(&self) -> TLDiagram {
        let n = self.n;
        let swap = |i: usize| if i < n { i + n } else { i - n };
        let mut mate = vec![0; 2 * n];
        let mut decorated = vec![false; 2 * n];
        for i in 0..2 * n {
            mate[swap(i)] = swap(self.mate[i]);
            decorated[swap(i)] = self.decorated[i];
        }
        TLDiagram { mate, decorated, ..self.clone() }
    }

    /// Whether the matching is drawable without crossings.
    fn is_planar(&self) -> bool {
        // Walk the boundary: top left to right, then bottom right to left.
        let n = self.n;
        let pos = |i: usize| if i < n { i } else { 3 * n - 1 - i };
        let chords: Vec<(usize, usize)> = (0..2 * n)
            .filter(|&i| i < self.mate[i])
            .map(|i| {
                let (a, b) = (pos(i), pos(self.mate[i]));
                (a.min(b), a.max(b))
            })
            .collect();
        chords.iter().all(|&(a, b)| chords.iter().all(|&(c, e)| !(a < c && c < b && b < e)))
    }
}

impl fmt::Debug for TLDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TLDiagram(n={}", self.n)?;
        for (a, b, dec) in self.strands() {
            write!(f, " {a}-{b}{}", if dec { "*" } else { "" })?;
        }
        if self.decorated_circuit {
            f.write_str(" +circuit")?;
        }
        write!(f, " d^{})", self.delta_power)
    }
}
