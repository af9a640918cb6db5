//! Decorated parenthesis diagrams ("half diagrams"): non-crossing partial
//! matchings of the dots `1..=n` with a set of decorated pairs.
//!
//! A half diagram is the top or bottom of a basis diagram. Validity is
//! checked once, at construction; afterwards every [`HalfDiagram`] is known to
//! be valid.

mod enumerate;
mod maps;
mod text;

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use enumerate::{count, enumerate, CellBasis, Variant};
pub(crate) use enumerate::binomial;
pub use maps::Sign;

/// A pair `(left, right)` of a half diagram, `left < right`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub left: usize,
    pub right: usize,
    pub decorated: bool,
}

impl Arc {
    pub fn contains(&self, dot: usize) -> bool {
        self.left < dot && dot < self.right
    }

    /// `other` lies strictly inside `self`.
    pub fn encloses(&self, other: &Arc) -> bool {
        self.left < other.left && other.right < self.right
    }
}

/// The first invariant a candidate half diagram violates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NoDots,
    DotOutOfRange { dot: usize },
    PairNotIncreasing { pair: (usize, usize) },
    DotReused { dot: usize },
    DecorationNotAPair { pair: (usize, usize) },
    DuplicateDecoration { pair: (usize, usize) },
    /// An isolated dot sits under an arc.
    IsolatedUnderArc { dot: usize, pair: (usize, usize) },
    Crossing { first: (usize, usize), second: (usize, usize) },
    /// An isolated dot lies to the left of a decorated pair.
    IsolatedLeftOfDecoration { dot: usize, pair: (usize, usize) },
    /// A decorated pair is nested inside another pair.
    DecorationNested { inner: (usize, usize), outer: (usize, usize) },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            NoDots => write!(f, "a half diagram needs at least one dot"),
            DotOutOfRange { dot } => write!(f, "dot {dot} is out of range"),
            PairNotIncreasing { pair: (i, j) } => write!(f, "pair ({i},{j}) must have i < j"),
            DotReused { dot } => write!(f, "dot {dot} belongs to two pairs"),
            DecorationNotAPair { pair: (i, j) } => write!(f, "decoration ({i},{j}) is not a pair"),
            DuplicateDecoration { pair: (i, j) } => write!(f, "decoration ({i},{j}) is listed twice"),
            IsolatedUnderArc { dot, pair: (i, j) } => {
                write!(f, "isolated dot {dot} lies under the arc ({i},{j})")
            }
            Crossing { first: (a, b), second: (c, e) } => write!(f, "pairs ({a},{b}) and ({c},{e}) cross"),
            IsolatedLeftOfDecoration { dot, pair: (i, j) } => {
                write!(f, "isolated dot {dot} lies left of the decorated pair ({i},{j})")
            }
            DecorationNested { inner: (a, b), outer: (c, e) } => {
                write!(f, "decorated pair ({a},{b}) is nested inside ({c},{e})")
            }
        }
    }
}

/// Checks raw parts against every half-diagram invariant and reports the
/// first violation. Pairs and decorations may be given in any order.
pub fn validate(n: usize, pairs: &[(usize, usize)], decorations: &[(usize, usize)]) -> Result<(), Violation> {
    if n == 0 {
        return Err(Violation::NoDots);
    }
    let mut mate = vec![0usize; n + 1];
    for &(i, j) in pairs {
        for dot in [i, j] {
            if dot == 0 || dot > n {
                return Err(Violation::DotOutOfRange { dot });
            }
        }
        if i >= j {
            return Err(Violation::PairNotIncreasing { pair: (i, j) });
        }
        for dot in [i, j] {
            if mate[dot] != 0 {
                return Err(Violation::DotReused { dot });
            }
        }
        mate[i] = j;
        mate[j] = i;
    }
    let mut seen = Vec::new();
    for &pair in decorations {
        if !pairs.contains(&pair) {
            return Err(Violation::DecorationNotAPair { pair });
        }
        if seen.contains(&pair) {
            return Err(Violation::DuplicateDecoration { pair });
        }
        seen.push(pair);
    }

    let mut sorted: Vec<(usize, usize)> = pairs.to_vec();
    sorted.sort_unstable();
    let isolated: Vec<usize> = (1..=n).filter(|&k| mate[k] == 0).collect();
    for &(i, j) in &sorted {
        if let Some(&dot) = isolated.iter().find(|&&k| i < k && k < j) {
            return Err(Violation::IsolatedUnderArc { dot, pair: (i, j) });
        }
    }
    for (x, &(i, k)) in sorted.iter().enumerate() {
        for &(j, l) in &sorted[x + 1..] {
            if j < k && k < l {
                return Err(Violation::Crossing { first: (i, k), second: (j, l) });
            }
        }
    }
    let mut decs: Vec<(usize, usize)> = decorations.to_vec();
    decs.sort_unstable();
    for &(i, j) in &decs {
        if let Some(&dot) = isolated.iter().find(|&&k| k < j) {
            return Err(Violation::IsolatedLeftOfDecoration { dot, pair: (i, j) });
        }
    }
    for &(k, l) in &decs {
        if let Some(&outer) = sorted.iter().find(|&&(i, j)| i < k && l < j) {
            return Err(Violation::DecorationNested { inner: (k, l), outer });
        }
    }
    Ok(())
}

/// A valid decorated parenthesis diagram on `n` dots.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HalfDiagram {
    n: usize,
    // sorted by left endpoint
    arcs: Vec<Arc>,
}

impl HalfDiagram {
    pub fn new(n: usize, pairs: &[(usize, usize)], decorations: &[(usize, usize)]) -> Result<Self> {
        validate(n, pairs, decorations).map_err(Error::InvalidHalfDiagram)?;
        let mut arcs: Vec<Arc> = pairs
            .iter()
            .map(|&(left, right)| Arc { left, right, decorated: decorations.contains(&(left, right)) })
            .collect();
        arcs.sort_unstable();
        Ok(HalfDiagram { n, arcs })
    }

    /// `n` isolated dots.
    pub fn empty(n: usize) -> Self {
        assert!(n > 0, "a half diagram needs at least one dot");
        HalfDiagram { n, arcs: Vec::new() }
    }

    /// Builds from arcs already known to be valid.
    pub(crate) fn from_arcs(n: usize, mut arcs: Vec<Arc>) -> Self {
        arcs.sort_unstable();
        let d = HalfDiagram { n, arcs };
        debug_assert_eq!(validate(n, &d.pairs(), &d.decorations()), Ok(()), "{d}");
        d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of pairs.
    pub fn p(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.arcs.iter().map(|a| (a.left, a.right)).collect()
    }

    pub fn decorations(&self) -> Vec<(usize, usize)> {
        self.arcs.iter().filter(|a| a.decorated).map(|a| (a.left, a.right)).collect()
    }

    pub fn decoration_count(&self) -> usize {
        self.arcs.iter().filter(|a| a.decorated).count()
    }

    pub fn is_undecorated(&self) -> bool {
        self.arcs.iter().all(|a| !a.decorated)
    }

    /// The partner of `dot` (1-based), or `None` if it is isolated.
    pub fn mate(&self, dot: usize) -> Option<usize> {
        self.arcs.iter().find_map(|a| {
            if a.left == dot {
                Some(a.right)
            } else if a.right == dot {
                Some(a.left)
            } else {
                None
            }
        })
    }

    pub fn arc_at(&self, dot: usize) -> Option<&Arc> {
        self.arcs.iter().find(|a| a.left == dot || a.right == dot)
    }

    pub fn isolated(&self) -> Vec<usize> {
        let mut used = vec![false; self.n + 1];
        for a in &self.arcs {
            used[a.left] = true;
            used[a.right] = true;
        }
        (1..=self.n).filter(|&k| !used[k]).collect()
    }

    pub fn isolated_count(&self) -> usize {
        self.n - 2 * self.arcs.len()
    }

    /// The associated sequence that defines the total order on diagrams with
    /// the same `(n, p)`.
    pub fn assoc_seq(&self) -> AssocSeq {
        let p = self.p();
        let mut seq: Vec<SeqEntry> = Vec::with_capacity(2 * p);
        let mut rights: Vec<usize> = self.arcs.iter().map(|a| a.right).collect();
        rights.sort_unstable_by(|a, b| b.cmp(a));
        seq.extend(rights.into_iter().map(SeqEntry::Finite));
        let mut decorated: Vec<usize> = self.arcs.iter().filter(|a| a.decorated).map(|a| a.right).collect();
        decorated.sort_unstable();
        seq.extend(decorated.into_iter().map(SeqEntry::Finite));
        seq.resize(2 * p, SeqEntry::Infinity);
        AssocSeq(seq)
    }

    /// The same diagram with the decorations removed.
    pub fn undecorated(&self) -> HalfDiagram {
        let arcs = self.arcs.iter().map(|a| Arc { decorated: false, ..*a }).collect();
        HalfDiagram { n: self.n, arcs }
    }

    /// Removes the last dot if it is isolated; inverse of
    /// [`extend_isolated`](Self::extend_isolated).
    pub fn remove_last_isolated(&self) -> Option<HalfDiagram> {
        if self.n < 2 || self.mate(self.n).is_some() {
            return None;
        }
        Some(HalfDiagram { n: self.n - 1, arcs: self.arcs.clone() })
    }

    /// Appends an isolated dot `n + 1`.
    pub fn extend_isolated(&self) -> HalfDiagram {
        HalfDiagram { n: self.n + 1, arcs: self.arcs.clone() }
    }
}

impl PartialOrd for HalfDiagram {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Diagrams of the same shape compare by their associated sequences. Across
/// shapes the comparison falls back to `(n, p)` first so that `Ord` stays a
/// total order.
impl Ord for HalfDiagram {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.p())
            .cmp(&(other.n, other.p()))
            .then_with(|| self.assoc_seq().cmp(&other.assoc_seq()))
            .then_with(|| self.arcs.cmp(&other.arcs))
    }
}

impl fmt::Debug for HalfDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HalfDiagram({self})")
    }
}

/// An entry of an associated sequence. `Infinity` exceeds every finite entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeqEntry {
    Finite(usize),
    Infinity,
}

impl fmt::Display for SeqEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeqEntry::Finite(k) => write!(f, "{k}"),
            SeqEntry::Infinity => write!(f, "inf"),
        }
    }
}

/// Compared lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AssocSeq(pub Vec<SeqEntry>);

impl AssocSeq {
    pub fn entries(&self) -> &[SeqEntry] {
        &self.0
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HalfDiagramJson {
    n: usize,
    pairs: Vec<[usize; 2]>,
    decorations: Vec<[usize; 2]>,
}

impl Serialize for HalfDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HalfDiagramJson {
            n: self.n,
            pairs: self.arcs.iter().map(|a| [a.left, a.right]).collect(),
            decorations: self.arcs.iter().filter(|a| a.decorated).map(|a| [a.left, a.right]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HalfDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = HalfDiagramJson::deserialize(d)?;
        let pairs: Vec<(usize, usize)> = raw.pairs.iter().map(|&[i, j]| (i, j)).collect();
        let decs: Vec<(usize, usize)> = raw.decorations.iter().map(|&[i, j]| (i, j)).collect();
        HalfDiagram::new(raw.n, &pairs, &decs).map_err(serde::de::Error::custom)
    }
}
