//! Exact linear algebra over the rationals.
//!
//! Every dimension this crate reports reduces to a rank computation on a
//! matrix of rationals, so the elimination here is plain Gauss-Jordan with a
//! deterministic pivot rule: scan columns left to right and take the first
//! row (top to bottom) with a nonzero entry. That makes `rref` canonical and
//! subspace equality a matter of comparing reduced bases.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact rational number. The denominator is always positive and coprime
/// to the numerator.
pub type Scalar = BigRational;

/// Shorthand for an integer-valued [`Scalar`].
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `p/q` as a [`Scalar`]. Panics on `q == 0`.
pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Parse `"p"` or `"p/q"`. The input must already be in lowest terms with a
/// positive denominator.
pub fn parse_rational(text: &str) -> Result<Scalar> {
    let bad = || Error::Parse(format!("invalid rational \"{text}\""));
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), Some(q.trim())),
        None => (t, None),
    };
    let p: BigInt = num.parse().map_err(|_| bad())?;
    let q: BigInt = match den {
        Some(q) => q.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if !q.is_positive() {
        return Err(bad());
    }
    let value = Scalar::new(p.clone(), q.clone());
    if value.numer() != &p || value.denom() != &q {
        return Err(Error::Parse(format!(
            "rational \"{text}\" is not in lowest terms"
        )));
    }
    Ok(value)
}

/// Render a scalar as `"p"` or `"p/q"`.
pub fn format_rational(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// A dense row-major matrix of [`Scalar`]s.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Result of reducing a matrix to reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    /// The reduced matrix, same shape as the input (zero rows at the bottom).
    pub matrix: Matrix,
    /// Pivot column of each nonzero row, strictly increasing.
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// The nonzero rows only.
    pub fn basis(&self) -> Matrix {
        self.matrix.top_rows(self.rank())
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    /// Build from rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                    context: format!("matrix row {i}"),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: nrows,
            cols,
            data,
        })
    }

    /// Convenience constructor from small integers, mostly for tests.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged integer matrix");
                r.iter().map(|&x| int(x))
            })
            .collect();
        Matrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Scalar> {
        self.row(i).to_vec()
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
                context: "matrix product".into(),
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
                context: "matrix-vector product".into(),
            });
        }
        Ok(self.iter_rows().map(|row| dot(row, v)).collect())
    }

    /// Rows `0..k`.
    pub fn top_rows(&self, k: usize) -> Matrix {
        Matrix {
            rows: k,
            cols: self.cols,
            data: self.data[..k * self.cols].to_vec(),
        }
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
                context: "vertical stack".into(),
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn push_row(&mut self, row: Vec<Scalar>) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: row.len(),
                context: "pushed row".into(),
            });
        }
        self.data.extend(row);
        self.rows += 1;
        Ok(())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form with first-nonzero pivoting.
    pub fn echelon(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            if !inv.is_one() {
                for j in c..m.cols {
                    let v = &m[(r, j)] * &inv;
                    m[(r, j)] = v;
                }
            }
            let pivot_row: Vec<(usize, Scalar)> = (c..m.cols)
                .filter(|&j| !m[(r, j)].is_zero())
                .map(|j| (j, m[(r, j)].clone()))
                .collect();
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for (j, v) in &pivot_row {
                    let t = &f * v;
                    m[(i, *j)] -= t;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { matrix: m, pivots }
    }

    pub fn rref(&self) -> Matrix {
        self.echelon().matrix
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// A basis of `{v : self * v = 0}`, one vector per free column, in
    /// increasing free-column order.
    pub fn nullspace_basis(&self) -> Vec<Vec<Scalar>> {
        let e = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &p in &e.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (r, &p) in e.pivots.iter().enumerate() {
                    v[p] = -e.matrix[(r, f)].clone();
                }
                v
            })
            .collect()
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;

    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for row in self.iter_rows() {
            let cells: Vec<String> = row.iter().map(format_rational).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = Scalar::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Standard basis vector `e_i` of length `n`.
pub fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

/// Greedily extend the span of `base` by vectors from `candidates`, returning
/// the candidates that were kept (each one strictly increased the rank).
pub fn extend_basis(
    dim: usize,
    base: &[Vec<Scalar>],
    candidates: &[Vec<Scalar>],
) -> Vec<Vec<Scalar>> {
    let mut span = Matrix::zeros(0, dim);
    for v in base {
        span.push_row(v.clone()).expect("basis vector length");
    }
    let mut rank = span.rank();
    let mut kept = Vec::new();
    for c in candidates {
        let mut trial = span.clone();
        trial.push_row(c.clone()).expect("candidate vector length");
        let r = trial.rank();
        if r > rank {
            span = trial;
            rank = r;
            kept.push(c.clone());
        }
    }
    kept
}
