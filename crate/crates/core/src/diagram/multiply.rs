use super::TLDiagram;
use crate::error::{Error, Result};

impl TLDiagram {
    /// Stacks `self` above `other` and simplifies: decorations cancel in
    /// pairs along each strand, a closed loop with an even number of
    /// decorations becomes a factor `d`, and one with an odd number becomes a
    /// decorated circuit. Several decorated circuits merge into one at the
    /// cost of a factor `d` each, and a decorated circuit erases every other
    /// decoration.
    pub fn multiply(&self, other: &TLDiagram) -> Result<TLDiagram> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        let n = self.n;
        let parts = [self, other];
        // Endpoint i of the product: top i of `self` (i < n) or bottom of `other`.
        let mut mate = vec![usize::MAX; 2 * n];
        let mut decorated = vec![false; 2 * n];
        // The middle row: bottom of `self` glued to top of `other`.
        let mut middle_seen = vec![false; n];

        for start in 0..2 * n {
            if mate[start] != usize::MAX {
                continue;
            }
            let (mut part, mut e) = if start < n { (0, start) } else { (1, start) };
            let mut parity = false;
            let end = loop {
                let d = parts[part];
                parity ^= d.decorated[e];
                let m = d.mate[e];
                let outer = if part == 0 { m < n } else { m >= n };
                if outer {
                    break m;
                }
                // Cross the middle row into the other diagram.
                let col = m % n;
                middle_seen[col] = true;
                if part == 0 {
                    part = 1;
                    e = col;
                } else {
                    part = 0;
                    e = n + col;
                }
            };
            mate[start] = end;
            mate[end] = start;
            decorated[start] = parity;
            decorated[end] = parity;
        }

        let mut even_loops = 0u32;
        let mut odd_loops = 0u32;
        for col in 0..n {
            if middle_seen[col] {
                continue;
            }
            // Walk the loop: down through `other`, back up through `self`.
            let mut parity = false;
            let mut c = col;
            loop {
                middle_seen[c] = true;
                let below = other.mate[c];
                parity ^= other.decorated[c];
                let c2 = below % n;
                middle_seen[c2] = true;
                let above = self.mate[n + c2];
                parity ^= self.decorated[n + c2];
                c = above - n;
                if c == col {
                    break;
                }
            }
            if parity {
                odd_loops += 1;
            } else {
                even_loops += 1;
            }
        }

        let circuits = odd_loops + u32::from(self.decorated_circuit) + u32::from(other.decorated_circuit);
        let extra = even_loops + circuits.saturating_sub(1);
        let delta_power = self
            .delta_power
            .checked_add(other.delta_power)
            .and_then(|k| k.checked_add(extra))
            .ok_or_else(|| Error::InvalidArguments("power of d overflows".into()))?;
        if circuits > 0 {
            decorated.iter_mut().for_each(|b| *b = false);
        }
        Ok(TLDiagram { n, mate, decorated, decorated_circuit: circuits > 0, delta_power })
    }
}
