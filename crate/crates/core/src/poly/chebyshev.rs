//! The two Chebyshev-type sequences: `P` (type A, second kind) and `Q`
//! (type D). Both satisfy `X_{m+1} = d*X_m - X_{m-1}`; they differ in their
//! seeds. `Q_1` is not part of the recurrence and is fixed to `1`.

use super::Poly;
use crate::error::{Error, Result};

/// `P_0 = 0`, `P_1 = 1`, `P_{s+1} = d*P_s - P_{s-1}`.
pub fn chebyshev_p(s: usize) -> Poly {
    ChebyshevTable::new(s).p(s).clone()
}

/// `Q_1 = 1`, `Q_2 = d^2`, `Q_3 = d^3-2*d`, then `Q_{t+1} = d*Q_t - Q_{t-1}`.
pub fn chebyshev_q(t: usize) -> Result<Poly> {
    if t == 0 {
        return Err(Error::InvalidIndex(0));
    }
    Ok(ChebyshevTable::new(t).q(t).clone())
}

/// Precomputed `P_0..=P_max` and `Q_1..=Q_max`.
#[derive(Clone, Debug)]
pub struct ChebyshevTable {
    p: Vec<Poly>,
    // q[0] is a placeholder so that q[t] is Q_t
    q: Vec<Poly>,
}

impl ChebyshevTable {
    pub fn new(max: usize) -> Self {
        let d = Poly::d();
        let mut p = vec![Poly::zero(), Poly::one()];
        while p.len() <= max {
            let k = p.len();
            p.push(&d * &p[k - 1] - &p[k - 2]);
        }
        let mut q = vec![Poly::zero(), Poly::one(), Poly::d_pow(2), Poly::from_i64s(&[0, -2, 0, 1])];
        while q.len() <= max {
            let k = q.len();
            q.push(&d * &q[k - 1] - &q[k - 2]);
        }
        ChebyshevTable { p, q }
    }

    pub fn max(&self) -> usize {
        self.p.len().min(self.q.len()) - 1
    }

    /// # Panics
    /// If `s` exceeds the table size.
    pub fn p(&self, s: usize) -> &Poly {
        &self.p[s]
    }

    /// # Panics
    /// If `t` is zero or exceeds the table size.
    pub fn q(&self, t: usize) -> &Poly {
        assert!(t >= 1, "Q_0 is undefined");
        &self.q[t]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn seeds_and_examples() {
        assert_eq!(chebyshev_p(0), Poly::zero());
        assert_eq!(chebyshev_p(1), Poly::one());
        assert_eq!(chebyshev_p(3), p("d^2-1"));
        assert_eq!(chebyshev_p(4), p("d^3-2*d"));
        assert_eq!(chebyshev_q(1).unwrap(), Poly::one());
        assert_eq!(chebyshev_q(2).unwrap(), p("d^2"));
        assert_eq!(chebyshev_q(3).unwrap(), p("d^3-2*d"));
        assert_eq!(chebyshev_q(6).unwrap(), p("d^6-5*d^4+5*d^2"));
        assert_eq!(chebyshev_q(0), Err(Error::InvalidIndex(0)));
    }

    #[test]
    fn recurrences_hold() {
        let t = ChebyshevTable::new(30);
        let d = Poly::d();
        for s in 1..30 {
            assert_eq!(t.p(s + 1), &(&d * t.p(s) - t.p(s - 1)));
        }
        for s in 3..30 {
            assert_eq!(t.q(s + 1), &(&d * t.q(s) - t.q(s - 1)));
        }
    }

    #[test]
    fn q_in_terms_of_p() {
        // Q_t = d*(P_t - P_{t-2})
        let t = ChebyshevTable::new(20);
        let d = Poly::d();
        for k in 2..=20 {
            assert_eq!(t.q(k), &(&d * &(t.p(k) - t.p(k - 2))), "t={k}");
        }
    }
}
