use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};

use super::rational::{lcm_of_denominators, Integer, RatVector, Rational};
use super::MathError;

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type RatMatrix = Matrix<Rational>;
pub type IntMatrix = Matrix<Integer>;

impl<T> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self, MathError> {
        if data.len() != rows * cols {
            return Err(MathError::DimensionMismatch {
                expected: rows * cols,
                actual: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from equal-length rows. `cols` is needed for the
    /// zero-row case.
    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Result<Self, MathError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(MathError::DimensionMismatch {
                    expected: cols,
                    actual: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Self {
            rows: n,
            cols,
            data,
        })
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

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[T]> {
        (0..self.rows).map(move |r| self.row(r))
    }
}

impl<T: Clone> Matrix<T> {
    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.row_iter().map(<[T]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }
}

impl<T> Matrix<T>
where
    for<'a> &'a T: Mul<&'a T, Output = T>,
    T: Zero + Clone,
{
    pub fn mul_matrix(&self, other: &Self) -> Result<Self, MathError> {
        if self.cols != other.rows {
            return Err(MathError::DimensionMismatch {
                expected: self.cols,
                actual: other.rows,
            });
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    acc = acc + self.get(r, k) * other.get(k, c);
                }
                data.push(acc);
            }
        }
        Ok(Self {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn mul_vector(&self, v: &[T]) -> Result<Vec<T>, MathError> {
        if self.cols != v.len() {
            return Err(MathError::DimensionMismatch {
                expected: self.cols,
                actual: v.len(),
            });
        }
        Ok(self
            .row_iter()
            .map(|row| row.iter().zip(v).fold(T::zero(), |acc, (a, b)| acc + a * b))
            .collect())
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl RatMatrix {
    pub fn from_int(m: &IntMatrix) -> Self {
        Self {
            rows: m.rows,
            cols: m.cols,
            data: m.data.iter().cloned().map(Rational::from_integer).collect(),
        }
    }
}

/// Scales each row by the lcm of its denominators. Row scaling by a positive
/// integer preserves rank and the solution set of `[A | b]`.
pub fn integer_rows(rows: &[&[Rational]]) -> Vec<Vec<Integer>> {
    rows.iter()
        .map(|row| {
            let scale = lcm_of_denominators(row.iter());
            row.iter()
                .map(|x| x.numer() * (&scale / x.denom()))
                .collect()
        })
        .collect()
}

/// Fraction-free (Bareiss) forward elimination over the first `elim_cols`
/// columns; every division is exact.
struct Echelon {
    rank: usize,
    swaps: usize,
}

fn bareiss(m: &mut [Vec<Integer>], elim_cols: usize) -> Echelon {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = Integer::one();
    let mut r = 0;
    let mut swaps = 0;
    for c in 0..elim_cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            swaps += 1;
        }
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let v = (&m[r][c] * &m[i][j] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = Integer::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    Echelon { rank: r, swaps }
}

pub fn rank(a: &RatMatrix) -> usize {
    let rows: Vec<&[Rational]> = a.row_iter().collect();
    let mut m = integer_rows(&rows);
    bareiss(&mut m, a.cols).rank
}

pub fn determinant(a: &IntMatrix) -> Result<Integer, MathError> {
    if !a.is_square() {
        return Err(MathError::NotSquare {
            rows: a.rows,
            cols: a.cols,
        });
    }
    let n = a.rows;
    if n == 0 {
        return Ok(Integer::one());
    }
    let mut m = a.to_rows();
    let e = bareiss(&mut m, n);
    if e.rank < n {
        return Ok(Integer::zero());
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if e.swaps % 2 == 1 { -det } else { det })
}

/// Unique solution of `A x = b` for square `A`; `None` when `A` is singular.
pub fn solve_linear_system(a: &RatMatrix, b: &[Rational]) -> Result<Option<RatVector>, MathError> {
    if !a.is_square() {
        return Err(MathError::NotSquare {
            rows: a.rows,
            cols: a.cols,
        });
    }
    if b.len() != a.rows {
        return Err(MathError::DimensionMismatch {
            expected: a.rows,
            actual: b.len(),
        });
    }
    let n = a.rows;
    let augmented: Vec<Vec<Rational>> = (0..n)
        .map(|r| {
            let mut row = a.row(r).to_vec();
            row.push(b[r].clone());
            row
        })
        .collect();
    let refs: Vec<&[Rational]> = augmented.iter().map(Vec::as_slice).collect();
    let mut m = integer_rows(&refs);
    if bareiss(&mut m, n).rank < n {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut rhs = Rational::from_integer(m[i][n].clone());
        for j in i + 1..n {
            rhs -= Rational::from_integer(m[i][j].clone()) * &x[j];
        }
        x[i] = rhs / Rational::from_integer(m[i][i].clone());
    }
    Ok(Some(x))
}

pub fn inverse(a: &RatMatrix) -> Result<Option<RatMatrix>, MathError> {
    if !a.is_square() {
        return Err(MathError::NotSquare {
            rows: a.rows,
            cols: a.cols,
        });
    }
    let n = a.rows;
    let mut columns = Vec::with_capacity(n);
    for i in 0..n {
        let mut e = vec![Rational::zero(); n];
        e[i] = Rational::one();
        match solve_linear_system(a, &e)? {
            Some(col) => columns.push(col),
            None => return Ok(None),
        }
    }
    Ok(Some(Matrix::from_rows(n, columns)?.transpose()))
}

/// A basis of `{x : A x = 0}`, one vector per free column of the reduced
/// row echelon form.
pub fn nullspace(a: &RatMatrix) -> Vec<RatVector> {
    let (nrows, ncols) = (a.rows, a.cols);
    let mut m = a.to_rows();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..nrows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in 0..ncols {
                    let delta = &factor * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); ncols];
            v[free] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][free].clone();
            }
            v
        })
        .collect()
}
