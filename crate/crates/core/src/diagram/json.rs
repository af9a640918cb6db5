use serde::{Deserialize, Serialize};

use super::{Endpoint, TLDiagram};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeJson {
    a: String,
    b: String,
    dec: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
struct DiagramJson {
    n: usize,
    edges: Vec<EdgeJson>,
    decorated_circuit: bool,
    delta_power: u32,
}

fn parse_endpoint(s: &str, n: usize) -> Result<Endpoint> {
    let err = || Error::Parse(format!("endpoint {s:?}: expected t<i> or b<i> with 1 <= i <= {n}"));
    let (row, digits) = s.split_at_checked(1).ok_or_else(err)?;
    if digits.is_empty() || digits.len() > 6 || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err());
    }
    let i: usize = digits.parse().map_err(|_| err())?;
    if i == 0 || i > n {
        return Err(err());
    }
    match row {
        "t" => Ok(Endpoint::Top(i)),
        "b" => Ok(Endpoint::Bottom(i)),
        _ => Err(err()),
    }
}

impl TLDiagram {
    /// Checks a raw matching and decoration data and returns it as a diagram
    /// if it is a scalar multiple of a basis diagram.
    pub fn from_strands(
        n: usize,
        strands: &[(Endpoint, Endpoint, bool)],
        decorated_circuit: bool,
        delta_power: u32,
    ) -> Result<TLDiagram> {
        let bad = |msg: String| Error::BasisMismatch(msg);
        if n == 0 {
            return Err(bad("a diagram needs n >= 1".into()));
        }
        let mut d = TLDiagram {
            n,
            mate: vec![usize::MAX; 2 * n],
            decorated: vec![false; 2 * n],
            decorated_circuit,
            delta_power,
        };
        for &(a, b, dec) in strands {
            for e in [a, b] {
                let (Endpoint::Top(i) | Endpoint::Bottom(i)) = e;
                if i == 0 || i > n {
                    return Err(bad(format!("endpoint {e} is out of range")));
                }
            }
            let (x, y) = (d.index(a), d.index(b));
            if x == y || d.mate[x] != usize::MAX || d.mate[y] != usize::MAX {
                return Err(bad(format!("endpoint used twice in {a}-{b}")));
            }
            d.join(x, y, dec);
        }
        if d.mate.contains(&usize::MAX) {
            return Err(bad("not every endpoint is joined".into()));
        }
        if !d.is_planar() {
            return Err(bad("strands cross".into()));
        }
        if !d.is_basis() {
            return Err(bad(format!("{d:?} is not a basis diagram")));
        }
        Ok(d)
    }
}

impl Serialize for TLDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramJson {
            n: self.n,
            edges: self
                .strands()
                .into_iter()
                .map(|(a, b, dec)| EdgeJson { a: a.to_string(), b: b.to_string(), dec })
                .collect(),
            decorated_circuit: self.decorated_circuit,
            delta_power: self.delta_power,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TLDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = DiagramJson::deserialize(d)?;
        let strands = raw
            .edges
            .iter()
            .map(|e| Ok((parse_endpoint(&e.a, raw.n)?, parse_endpoint(&e.b, raw.n)?, e.dec)))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        TLDiagram::from_strands(raw.n, &strands, raw.decorated_circuit, raw.delta_power).map_err(D::Error::custom)
    }
}
