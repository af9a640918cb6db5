//! Bracket notation: `(1,2)*(3,4)(5)` lists pairs and isolated dots by their
//! smallest element; `*` marks a decorated pair.

use std::fmt;
use std::str::FromStr;

use super::HalfDiagram;
use crate::error::Error;

impl fmt::Display for HalfDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in 1..=self.n {
            match self.arc_at(k) {
                None => write!(f, "({k})")?,
                Some(a) if a.left == k => {
                    write!(f, "({},{})", a.left, a.right)?;
                    if a.decorated {
                        f.write_str("*")?;
                    }
                }
                Some(_) => {}
            }
        }
        Ok(())
    }
}

impl FromStr for HalfDiagram {
    type Err = Error;

    /// Every dot `1..=n` must appear exactly once; components may come in any
    /// order.
    fn from_str(s: &str) -> Result<Self, Error> {
        let err = |msg: &str| Error::Parse(format!("half diagram {s:?}: {msg}"));
        let mut pairs = Vec::new();
        let mut decorations = Vec::new();
        let mut dots = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            rest = rest.strip_prefix('(').ok_or_else(|| err("expected '('"))?;
            let close = rest.find(')').ok_or_else(|| err("missing ')'"))?;
            let inner = &rest[..close];
            rest = &rest[close + 1..];
            let number = |t: &str| -> Result<usize, Error> {
                if t.is_empty() || t.len() > 6 || !t.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(err("bad dot number"));
                }
                t.parse().map_err(|_| err("bad dot number"))
            };
            match inner.split_once(',') {
                None => dots.push(number(inner)?),
                Some((a, b)) => {
                    let pair = (number(a)?, number(b)?);
                    dots.extend([pair.0, pair.1]);
                    pairs.push(pair);
                    if let Some(r) = rest.strip_prefix('*') {
                        decorations.push(pair);
                        rest = r;
                    }
                }
            }
        }
        if dots.is_empty() {
            return Err(err("no dots"));
        }
        dots.sort_unstable();
        if dots.iter().enumerate().any(|(i, &d)| d != i + 1) {
            return Err(err("dots must be exactly 1..n, each once"));
        }
        HalfDiagram::new(dots.len(), &pairs, &decorations)
    }
}
