use std::fmt;
use std::str::FromStr;

use super::TLDiagram;
use crate::error::{invalid, Error, Result};

/// A generator: `Bar1` is the decorated `e_1`, `E(i)` is `e_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorId {
    Bar1,
    E(usize),
}

impl GeneratorId {
    /// All generators of rank `n`: `eb1, e1, ..., e(n-1)`.
    pub fn all(n: usize) -> Vec<GeneratorId> {
        std::iter::once(GeneratorId::Bar1).chain((1..n).map(GeneratorId::E)).collect()
    }

    /// Position on the branch of the Dynkin diagram: `eb1` and `e1` both
    /// attach to `e2`.
    fn node(self) -> usize {
        match self {
            GeneratorId::Bar1 => 1,
            GeneratorId::E(i) => i,
        }
    }

    /// Joined by an edge of the type-D Dynkin diagram.
    pub fn adjacent(self, other: GeneratorId) -> bool {
        let (a, b) = (self.node(), other.node());
        match (self, other) {
            (GeneratorId::Bar1, GeneratorId::E(1)) | (GeneratorId::E(1), GeneratorId::Bar1) => false,
            _ => a.abs_diff(b) == 1,
        }
    }

    pub fn diagram(self, n: usize) -> Result<TLDiagram> {
        let i = self.node();
        if n < 2 || i == 0 || i >= n {
            return Err(invalid(format!("generator {self} does not exist for n={n}")));
        }
        let mut d = TLDiagram::identity(n);
        let decorated = self == GeneratorId::Bar1;
        d.join(i - 1, i, decorated);
        d.join(n + i - 1, n + i, decorated);
        Ok(d)
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorId::Bar1 => f.write_str("eb1"),
            GeneratorId::E(i) => write!(f, "e{i}"),
        }
    }
}

impl FromStr for GeneratorId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "eb1" {
            return Ok(GeneratorId::Bar1);
        }
        let digits = s.strip_prefix('e').filter(|t| !t.is_empty() && t.len() <= 6 && t.bytes().all(|b| b.is_ascii_digit()));
        match digits.and_then(|t| t.parse::<usize>().ok()) {
            Some(i) if i >= 1 => Ok(GeneratorId::E(i)),
            _ => Err(Error::Parse(format!("generator {s:?}: expected e<i> or eb1"))),
        }
    }
}

/// Parses a whitespace-separated generator word such as `"e1 eb1 e2"`.
pub fn parse_word(s: &str) -> Result<Vec<GeneratorId>> {
    s.split_whitespace().map(str::parse).collect()
}

/// The product of the generators from left to right; the empty word is the
/// identity.
pub fn evaluate_word(n: usize, word: &[GeneratorId]) -> Result<TLDiagram> {
    let mut acc = TLDiagram::identity(n);
    for g in word {
        acc = acc.multiply(&g.diagram(n)?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Endpoint::{Bottom, Top};

    #[test]
    fn shapes() {
        let e1 = GeneratorId::E(1).diagram(5).unwrap();
        assert_eq!(e1.mate_of(Top(1)), Top(2));
        assert_eq!(e1.mate_of(Bottom(2)), Bottom(1));
        assert_eq!(e1.mate_of(Top(3)), Bottom(3));
        assert_eq!(e1.decoration_count(), 0);
        let eb = GeneratorId::Bar1.diagram(5).unwrap();
        assert_eq!(eb.decoration_count(), 2);
        assert!(eb.is_basis() && e1.is_basis());
        assert!(GeneratorId::E(5).diagram(5).is_err());
        assert!(GeneratorId::E(0).diagram(5).is_err());
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_word("e1 eb1  e12").unwrap(), [GeneratorId::E(1), GeneratorId::Bar1, GeneratorId::E(12)]);
        assert!(parse_word("").unwrap().is_empty());
        for bad in ["e0", "e", "eb2", "f1", "e-1", "e1x"] {
            assert!(bad.parse::<GeneratorId>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn dynkin_adjacency() {
        use GeneratorId::*;
        assert!(Bar1.adjacent(E(2)) && E(1).adjacent(E(2)) && E(2).adjacent(E(3)));
        assert!(!Bar1.adjacent(E(1)) && !Bar1.adjacent(E(3)) && !E(1).adjacent(E(3)));
    }
}
