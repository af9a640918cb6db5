use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::Poly;
use crate::error::{Error, Result};

/// A dense row-major matrix of polynomials.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Poly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Poly>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::SizeMismatch(rows * cols, data.len()));
        }
        Ok(PolyMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix { rows, cols, data: vec![Poly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        PolyMatrix::from_fn(n, n, |i, j| if i == j { Poly::one() } else { Poly::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Poly) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        PolyMatrix { rows, cols, data }
    }

    /// Builds from nested rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::SizeMismatch(c, bad.len()));
        }
        Ok(PolyMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Poly) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Poly] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Poly>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// The submatrix with the given row and column indices, in that order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        PolyMatrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Simultaneous row and column permutation: entry `(i, j)` of the result
    /// is entry `(order[i], order[j])` of `self`.
    pub fn permuted(&self, order: &[usize]) -> PolyMatrix {
        self.select(order, order)
    }

    pub fn scale(&self, c: &Poly) -> PolyMatrix {
        PolyMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Poly::is_zero)
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch(self.cols, other.rows));
        }
        Ok(PolyMatrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Poly::zero();
            for k in 0..self.cols {
                let (a, b) = (self.get(i, k), other.get(k, j));
                if !a.is_zero() && !b.is_zero() {
                    acc += &(a * b);
                }
            }
            acc
        }))
    }

    /// Upper bound on the degree of the determinant: the sum over rows of the
    /// largest entry degree. `None` if some row is zero.
    pub fn det_degree_bound(&self) -> Option<usize> {
        (0..self.rows).map(|i| self.row(i).iter().filter_map(Poly::degree).max()).sum()
    }

    fn eval_int(&self, x: &BigInt) -> Vec<BigInt> {
        self.data.iter().map(|p| p.eval_int(x)).collect()
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(Poly::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

fn require_square(m: &PolyMatrix) -> Result<()> {
    if m.is_square() {
        Ok(())
    } else {
        Err(Error::SizeMismatch(m.rows, m.cols))
    }
}

/// Determinant by single-step fraction-free (Bareiss) elimination with row
/// pivoting. Every division is exact in `Z[d]`.
pub fn det_bareiss(m: &PolyMatrix) -> Result<Poly> {
    require_square(m)?;
    let n = m.rows;
    if n == 0 {
        return Ok(Poly::one());
    }
    let mut rows: Vec<Vec<Poly>> = m.to_rows();
    let mut negate = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if rows[k][k].is_zero() {
            // Prefer the pivot of lowest degree; it keeps the entries small.
            let Some(pivot) = (k + 1..n)
                .filter(|&i| !rows[i][k].is_zero())
                .min_by_key(|&i| rows[i][k].degree())
            else {
                return Ok(Poly::zero());
            };
            rows.swap(k, pivot);
            negate = !negate;
        }
        let (head, tail) = rows.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        let prev_ref = &prev;
        tail.par_iter_mut().for_each(|row| {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let mut v = &row[j] * pivot;
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    v -= &(&lead * &pivot_row[j]);
                }
                row[j] = if prev_ref.is_one() {
                    v
                } else {
                    v.div_exact(prev_ref).expect("Bareiss division is exact")
                };
            }
        });
        prev = rows[k][k].clone();
    }
    let det = rows[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Integer determinant by fraction-free elimination.
fn det_integer(mut a: Vec<BigInt>, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                a[i * n + j] = v / &prev;
            }
        }
        prev = a[k * n + k].clone();
    }
    let det = a[n * n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Determinant by evaluation and interpolation: the matrix is evaluated at
/// `D + 1` integer points, where `D` is [`PolyMatrix::det_degree_bound`], the
/// integer determinants are computed exactly and the result is recovered by
/// Newton interpolation over the rationals. Independent of [`det_bareiss`].
pub fn det_interpolate(m: &PolyMatrix) -> Result<Poly> {
    require_square(m)?;
    let n = m.rows;
    let Some(bound) = m.det_degree_bound() else {
        return Ok(if n == 0 { Poly::one() } else { Poly::zero() });
    };
    let half = (bound / 2) as i64;
    let xs: Vec<BigInt> = (0..=bound as i64).map(|i| BigInt::from(i - half)).collect();
    let ys: Vec<BigInt> = xs.par_iter().map(|x| det_integer(m.eval_int(x), n)).collect();
    interpolate(&xs, &ys)
}

/// Newton interpolation through `(xs[i], ys[i])`; the result must have
/// integer coefficients.
fn interpolate(xs: &[BigInt], ys: &[BigInt]) -> Result<Poly> {
    let k = xs.len();
    let mut coef: Vec<BigRational> = ys.iter().cloned().map(BigRational::from_integer).collect();
    for level in 1..k {
        for i in (level..k).rev() {
            let num = &coef[i] - &coef[i - 1];
            let den = BigRational::from_integer(&xs[i] - &xs[i - level]);
            coef[i] = num / den;
        }
    }
    // Expand the Newton form by Horner from the innermost term outward.
    let mut acc: Vec<BigRational> = Vec::new();
    for i in (0..k).rev() {
        // acc = acc * (x - xs[i]) + coef[i]
        let mut next = vec![BigRational::zero(); acc.len() + 1];
        for (j, c) in acc.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c * BigRational::from_integer(xs[i].clone());
        }
        next[0] += &coef[i];
        acc = next;
    }
    let mut out = Vec::with_capacity(acc.len());
    for c in acc {
        if !c.is_integer() {
            return Err(Error::NotDivisible);
        }
        out.push(c.to_integer());
    }
    Ok(Poly::from_coeffs(out))
}
