use serde::{Deserialize, Serialize};

use super::{Arc, AssocSeq, HalfDiagram};
use crate::error::{invalid, Result};

/// Which members of the `(n, p)` diagrams a basis keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    All,
    /// Even number of decorations; only for `n = 2p`.
    Even,
    /// Odd number of decorations; only for `n = 2p`.
    Odd,
    Undecorated,
}

impl Variant {
    pub fn admits(self, d: &HalfDiagram) -> bool {
        match self {
            Variant::All => true,
            Variant::Even => d.decoration_count().is_multiple_of(2),
            Variant::Odd => d.decoration_count() % 2 == 1,
            Variant::Undecorated => d.is_undecorated(),
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Variant::All),
            "even" => Ok(Variant::Even),
            "odd" => Ok(Variant::Odd),
            "undecorated" => Ok(Variant::Undecorated),
            _ => Err(crate::error::Error::Parse(format!("unknown variant {s:?}"))),
        }
    }
}

/// An ordered list of half diagrams of one shape, ascending in the order of
/// associated sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellBasis {
    n: usize,
    p: usize,
    variant: Variant,
    members: Vec<HalfDiagram>,
    keys: Vec<AssocSeq>,
}

impl CellBasis {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn members(&self) -> &[HalfDiagram] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn get(&self, i: usize) -> &HalfDiagram {
        &self.members[i]
    }

    /// Position of `d` in the basis.
    pub fn index_of(&self, d: &HalfDiagram) -> Option<usize> {
        if d.n() != self.n || d.p() != self.p {
            return None;
        }
        let i = self.keys.binary_search(&d.assoc_seq()).ok()?;
        (self.members[i] == *d).then_some(i)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, HalfDiagram> {
        self.members.iter()
    }
}

impl<'a> IntoIterator for &'a CellBasis {
    type Item = &'a HalfDiagram;
    type IntoIter = std::slice::Iter<'a, HalfDiagram>;
    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

fn check_shape(n: usize, p: usize) -> Result<()> {
    if n == 0 || 2 * p > n {
        return Err(invalid(format!("need 0 <= 2p <= n and n >= 1, got n={n}, p={p}")));
    }
    Ok(())
}

/// All `(n, p)` diagrams of the given variant, sorted by associated sequence.
pub fn enumerate(n: usize, p: usize, variant: Variant) -> Result<CellBasis> {
    check_shape(n, p)?;
    if matches!(variant, Variant::Even | Variant::Odd) && n != 2 * p {
        return Err(invalid(format!("signed variants need n = 2p, got n={n}, p={p}")));
    }
    let mut keyed: Vec<(AssocSeq, HalfDiagram)> = generate(n, p)
        .into_iter()
        .filter(|d| variant.admits(d))
        .map(|d| (d.assoc_seq(), d))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    let (keys, members) = keyed.into_iter().unzip();
    Ok(CellBasis { n, p, variant, members, keys })
}

/// Every `(n, p)` diagram, built by deciding the fate of the last dot: it is
/// either isolated, or paired with the rightmost isolated dot of a smaller
/// diagram. Only when no isolated dot remains may that new pair be decorated.
fn generate(n: usize, p: usize) -> Vec<HalfDiagram> {
    if p == 0 {
        return vec![HalfDiagram::empty(n)];
    }
    let mut out = Vec::new();
    if n > 2 * p {
        out.extend(generate(n - 1, p).iter().map(HalfDiagram::extend_isolated));
    }
    for d in generate(n - 1, p - 1) {
        let Some(&k) = d.isolated().last() else { continue };
        let mut arcs = d.arcs().to_vec();
        arcs.push(Arc { left: k, right: n, decorated: false });
        if n == 2 * p {
            let mut decorated = arcs.clone();
            decorated.last_mut().unwrap().decorated = true;
            out.push(HalfDiagram::from_arcs(n, decorated));
        }
        out.push(HalfDiagram::from_arcs(n, arcs));
    }
    out
}

/// Number of `(n, p)` diagrams: the binomial coefficient `C(n, p)`.
pub fn count(n: usize, p: usize) -> Result<u128> {
    check_shape(n, p)?;
    Ok(binomial(n, p))
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strs(b: &CellBasis) -> Vec<String> {
        b.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn five_two_matches_the_printed_order() {
        let b = enumerate(5, 2, Variant::All).unwrap();
        assert_eq!(
            strs(&b),
            [
                "(1,2)*(3,4)*(5)",
                "(1,2)*(3,4)(5)",
                "(1,2)(3,4)*(5)",
                "(1,2)(3,4)(5)",
                "(1,4)*(2,3)(5)",
                "(1,4)(2,3)(5)",
                "(1,2)*(3)(4,5)",
                "(1,2)(3)(4,5)",
                "(1)(2,3)(4,5)",
                "(1)(2,5)(3,4)",
            ]
        );
    }

    #[test]
    fn four_two_signed() {
        let all = enumerate(4, 2, Variant::All).unwrap();
        assert_eq!(
            strs(&all),
            ["(1,2)*(3,4)*", "(1,2)*(3,4)", "(1,2)(3,4)*", "(1,2)(3,4)", "(1,4)*(2,3)", "(1,4)(2,3)"]
        );
        let even = enumerate(4, 2, Variant::Even).unwrap();
        let picked: Vec<_> = [0, 3, 5].iter().map(|&i| all.get(i).clone()).collect();
        assert_eq!(even.members(), &picked[..]);
        assert!(enumerate(5, 2, Variant::Even).is_err());
    }

    #[test]
    fn counts_and_lookup() {
        assert_eq!(enumerate(6, 0, Variant::All).unwrap().len(), 1);
        assert_eq!(count(10, 3).unwrap(), 120);
        assert!(count(3, 2).is_err());
        let b = enumerate(7, 3, Variant::All).unwrap();
        for (i, d) in b.iter().enumerate() {
            assert_eq!(b.index_of(d), Some(i));
        }
        assert_eq!(b.index_of(&HalfDiagram::empty(7)), None);
        assert_eq!(enumerate(6, 2, Variant::Undecorated).unwrap().len(), 9);
    }
}
