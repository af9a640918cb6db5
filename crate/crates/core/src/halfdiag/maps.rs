//! Order-preserving maps between diagram sets that share their last dot.

use super::{Arc, HalfDiagram};
use crate::error::{invalid, Result};

/// Parity class of a fully paired diagram: `Plus` for an even number of
/// decorations, `Minus` for odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of(d: &HalfDiagram) -> Sign {
        if d.decoration_count().is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl HalfDiagram {
    fn last_arc_index(&self) -> Option<usize> {
        self.arcs.iter().position(|a| a.right == self.n)
    }

    /// Toggles the decoration of the pair ending at `n`. Needs `n = 2p`;
    /// swaps the even and odd diagram sets.
    pub fn map_alpha(&self) -> Result<HalfDiagram> {
        if self.n != 2 * self.p() {
            return Err(invalid(format!("toggle needs n = 2p, got n={}, p={}", self.n, self.p())));
        }
        let i = self.last_arc_index().expect("a fully paired diagram pairs its last dot");
        let mut arcs = self.arcs.clone();
        arcs[i].decorated = !arcs[i].decorated;
        Ok(HalfDiagram::from_arcs(self.n, arcs))
    }

    /// Drops the pair ending at `n` (and its decoration), leaving its left
    /// end isolated. Needs `n = 2p` and decoration parity matching `sign`.
    pub fn map_beta(&self, sign: Sign) -> Result<HalfDiagram> {
        if self.n != 2 * self.p() {
            return Err(invalid(format!("needs n = 2p, got n={}, p={}", self.n, self.p())));
        }
        if Sign::of(self) != sign {
            return Err(invalid(format!("decoration parity of {self} does not match {sign:?}")));
        }
        Ok(self.drop_last_arc())
    }

    /// Drops the pair ending at `n`, leaving its left end isolated. Needs
    /// `n > 2p` and `n` not isolated; that pair is then never decorated.
    pub fn map_gamma(&self) -> Result<HalfDiagram> {
        if self.n == 2 * self.p() {
            return Err(invalid("needs n > 2p"));
        }
        if self.last_arc_index().is_none() {
            return Err(invalid(format!("dot {} is isolated in {self}", self.n)));
        }
        Ok(self.drop_last_arc())
    }

    fn drop_last_arc(&self) -> HalfDiagram {
        let i = self.last_arc_index().expect("last dot is paired");
        let mut arcs = self.arcs.clone();
        arcs.remove(i);
        HalfDiagram::from_arcs(self.n - 1, arcs)
    }

    /// Inverse of [`map_gamma`](Self::map_gamma) and the two
    /// [`map_beta`](Self::map_beta): adds a dot `n + 1` paired with the
    /// rightmost isolated dot. `decorated` is only allowed when that leaves no
    /// isolated dot.
    pub fn attach_last(&self, decorated: bool) -> Result<HalfDiagram> {
        let iso = self.isolated();
        let Some(&k) = iso.last() else {
            return Err(invalid(format!("{self} has no isolated dot")));
        };
        if decorated && iso.len() > 1 {
            return Err(invalid("a decorated last pair needs all other dots paired"));
        }
        let mut arcs = self.arcs.clone();
        arcs.push(Arc { left: k, right: self.n + 1, decorated });
        Ok(HalfDiagram::from_arcs(self.n + 1, arcs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::halfdiag::{enumerate, Variant};

    fn hd(s: &str) -> HalfDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn alpha_on_four_two() {
        let b = enumerate(4, 2, Variant::All).unwrap();
        let pairs = [(0, 1), (3, 2), (5, 4)];
        for (from, to) in pairs {
            assert_eq!(b.get(from).map_alpha().unwrap(), *b.get(to));
            assert_eq!(b.get(to).map_alpha().unwrap(), *b.get(from));
        }
        assert!(hd("(1,2)(3)").map_alpha().is_err());
    }

    #[test]
    fn beta_examples() {
        let b = enumerate(4, 2, Variant::All).unwrap();
        assert_eq!(b.get(0).map_beta(Sign::Plus).unwrap(), hd("(1,2)*(3)"));
        assert_eq!(b.get(4).map_beta(Sign::Minus).unwrap(), hd("(1)(2,3)"));
        assert!(b.get(0).map_beta(Sign::Minus).is_err());
        assert_eq!(b.get(4).map_beta(Sign::Minus).unwrap().attach_last(true).unwrap(), *b.get(4));
    }

    #[test]
    fn gamma_examples() {
        let b = enumerate(5, 2, Variant::All).unwrap();
        assert_eq!(b.get(6).map_gamma().unwrap(), hd("(1,2)*(3)(4)"));
        assert_eq!(b.get(9).map_gamma().unwrap(), hd("(1)(2)(3,4)"));
        assert!(b.get(0).map_gamma().is_err());
        assert!(hd("(1,2)(3,4)").map_gamma().is_err());
        assert!(hd("(1)(2)(3)").attach_last(true).is_err());
    }
}
