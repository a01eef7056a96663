//! Dense linear algebra over GF(p).
//!
//! Vectors are plain `Vec<u32>` of canonical residues; the owning
//! [`Matrix`] or caller carries the field.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Output of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from rows of arbitrary integers, reducing mod p.
    /// All rows must have length `cols`.
    pub fn from_rows<R: AsRef<[u32]>>(field: PrimeField, cols: usize, rows: &[R]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    op: "from_rows",
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r.iter().map(|&v| v % field.modulus()));
        }
        Ok(Self {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Like [`Matrix::from_rows`] for literal data in tests and examples.
    /// Panics on ragged input.
    pub fn from_literal(field: PrimeField, rows: &[&[u32]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(field, cols, rows).expect("ragged literal matrix")
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.field.modulus();
    }

    pub fn entry(&self, i: usize, j: usize) -> FieldElement {
        self.field.elem(u64::from(self.get(i, j)))
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u32]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.row_iter().map(<[u32]>::to_vec).collect()
    }

    pub fn push_row(&mut self, row: &[u32]) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::DimensionMismatch {
                op: "push_row",
                expected: self.cols,
                found: row.len(),
            });
        }
        let p = self.field.modulus();
        self.data.extend(row.iter().map(|&v| v % p));
        self.rows += 1;
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Result<Self> {
        self.check_field(other)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                op: "hstack",
                expected: self.rows,
                found: other.rows,
            });
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Ok(Self {
            field: self.field,
            rows: self.rows,
            cols,
            data,
        })
    }

    pub fn select_columns(&self, keep: &[usize]) -> Self {
        let mut data = Vec::with_capacity(self.rows * keep.len());
        for i in 0..self.rows {
            data.extend(keep.iter().map(|&j| self.get(i, j)));
        }
        Self {
            field: self.field,
            rows: self.rows,
            cols: keep.len(),
            data,
        }
    }

    pub fn select_rows(&self, keep: &[usize]) -> Self {
        let mut data = Vec::with_capacity(keep.len() * self.cols);
        for &i in keep {
            data.extend_from_slice(self.row(i));
        }
        Self {
            field: self.field,
            rows: keep.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn negate(&self) -> Self {
        let f = self.field;
        Self {
            data: self.data.iter().map(|&v| f.neg(v)).collect(),
            ..self.clone()
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Self> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "mul",
                expected: self.cols,
                found: other.rows,
            });
        }
        let f = self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, other.get(l, j)));
                }
            }
        }
        Ok(out)
    }

    /// `A·x` for a column vector `x`.
    pub fn mul_vec(&self, x: &[u32]) -> Result<Vec<u32>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                op: "mul_vec",
                expected: self.cols,
                found: x.len(),
            });
        }
        let f = self.field;
        Ok(self.row_iter().map(|r| dot(f, r, x)).collect())
    }

    /// `x·A` for a row vector `x`.
    pub fn vec_mul(&self, x: &[u32]) -> Result<Vec<u32>> {
        if x.len() != self.rows {
            return Err(Error::DimensionMismatch {
                op: "vec_mul",
                expected: self.rows,
                found: x.len(),
            });
        }
        let f = self.field;
        let mut out = vec![0u32; self.cols];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            axpy(f, &mut out, xi, self.row(i));
        }
        Ok(out)
    }

    fn check_field(&self, other: &Matrix) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.field.modulus(),
                right: other.field.modulus(),
            })
        }
    }

    /// Gauss-Jordan elimination. Columns are scanned left to right and the
    /// first row (top-down) with a nonzero entry becomes the pivot row.
    pub fn rref(&self) -> Rref {
        let f = self.field;
        let mut m = self.clone();
        let cols = m.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    m.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..cols {
                let idx = r * cols + j;
                m.data[idx] = f.mul(m.data[idx], inv);
            }
            let pivot_row: Vec<u32> = m.row(r)[c..].to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor == 0 {
                    continue;
                }
                let row = &mut m.data[i * cols + c..(i + 1) * cols];
                axpy(f, row, f.neg(factor), &pivot_row);
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: m,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        let mut basis = EchelonBasis::new(self.field, self.cols);
        for row in self.row_iter() {
            basis.insert(row.to_vec());
        }
        basis.rank()
    }

    /// Canonical kernel basis read off the reduced echelon form: one vector
    /// per free column, in increasing column order, with that free variable
    /// set to 1 and the other free variables 0.
    pub fn nullspace(&self) -> Vec<Vec<u32>> {
        let f = self.field;
        let Rref { matrix, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0u32; self.cols];
                v[free] = 1;
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(matrix.get(i, free));
                }
                v
            })
            .collect()
    }

    /// One solution of `A·x = b`, free variables set to zero.
    pub fn solve(&self, b: &[u32]) -> Result<Vec<u32>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                op: "solve",
                expected: self.rows,
                found: b.len(),
            });
        }
        let rhs = Matrix::from_rows(self.field, 1, &b.iter().map(|&v| [v]).collect::<Vec<_>>())?;
        let Rref { matrix, pivots, .. } = self.hstack(&rhs)?.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(Error::Inconsistent);
        }
        let mut x = vec![0u32; self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = matrix.get(i, self.cols);
        }
        Ok(x)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in self.row_iter() {
            writeln!(f, "  {r:?}")?;
        }
        Ok(())
    }
}

/// Basis of `{c : B·c ∈ colspace(A)}`: the projection onto the `c` block of
/// the kernel of `[A | -B]`, reduced to a canonical echelon basis.
pub fn preimage_of_colspace(a: &Matrix, b: &Matrix) -> Result<Vec<Vec<u32>>> {
    if a.rows != b.rows {
        return Err(Error::DimensionMismatch {
            op: "preimage_of_colspace",
            expected: a.rows,
            found: b.rows,
        });
    }
    let joined = a.hstack(&b.negate())?;
    let projected: Vec<Vec<u32>> = joined
        .nullspace()
        .into_iter()
        .map(|v| v[a.cols..].to_vec())
        .collect();
    if projected.is_empty() {
        return Ok(Vec::new());
    }
    let Rref { matrix, rank, .. } = Matrix::from_rows(a.field, b.cols, &projected)?.rref();
    Ok((0..rank).map(|i| matrix.row(i).to_vec()).collect())
}

/// `dim {c : B·c ∈ colspace(A)} = cols(B) - rank([A|B]) + rank(A)`.
pub fn preimage_dimension(a: &Matrix, b: &Matrix) -> Result<usize> {
    if a.rows != b.rows {
        return Err(Error::DimensionMismatch {
            op: "preimage_dimension",
            expected: a.rows,
            found: b.rows,
        });
    }
    let joined = a.hstack(b)?;
    Ok(b.cols + a.rank() - joined.rank())
}

#[inline]
pub(crate) fn dot(f: PrimeField, a: &[u32], b: &[u32]) -> u32 {
    a.iter()
        .zip(b)
        .fold(0u32, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

/// `y += a·x` elementwise.
#[inline]
pub(crate) fn axpy(f: PrimeField, y: &mut [u32], a: u32, x: &[u32]) {
    for (yi, &xi) in y.iter_mut().zip(x) {
        if xi != 0 {
            *yi = f.add(*yi, f.mul(a, xi));
        }
    }
}

/// Incrementally maintained row-echelon basis. Each stored row has a
/// leading 1 at a distinct pivot column and zeros before it.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: PrimeField,
    cols: usize,
    by_pivot: Vec<Option<Vec<u32>>>,
    rank: usize,
}

impl EchelonBasis {
    pub fn new(field: PrimeField, cols: usize) -> Self {
        Self {
            field,
            cols,
            by_pivot: vec![None; cols],
            rank: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Reduces `row` against the basis. Returns the reduced row together
    /// with its leading column, or `None` when the row is in the span.
    fn reduce(&self, mut row: Vec<u32>) -> Option<(usize, Vec<u32>)> {
        debug_assert_eq!(row.len(), self.cols);
        let f = self.field;
        for c in 0..self.cols {
            if row[c] == 0 {
                continue;
            }
            match &self.by_pivot[c] {
                Some(prow) => {
                    let factor = f.neg(row[c]);
                    axpy(f, &mut row[c..], factor, &prow[c..]);
                }
                None => return Some((c, row)),
            }
        }
        None
    }

    /// Adds `row` to the basis if it is independent; returns whether it was.
    pub fn insert(&mut self, row: Vec<u32>) -> bool {
        let Some((c, mut row)) = self.reduce(row) else {
            return false;
        };
        let f = self.field;
        let inv = f.inv(row[c]).expect("leading entry is nonzero");
        for v in &mut row[c..] {
            *v = f.mul(*v, inv);
        }
        self.by_pivot[c] = Some(row);
        self.rank += 1;
        true
    }

    pub fn contains(&self, row: &[u32]) -> bool {
        self.reduce(row.to_vec()).is_none()
    }

    /// Basis rows ordered by pivot column.
    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.by_pivot.iter().flatten().map(Vec::as_slice)
    }

    pub fn to_matrix(&self) -> Matrix {
        let rows: Vec<&[u32]> = self.rows().collect();
        Matrix::from_rows(self.field, self.cols, &rows).expect("rows have basis width")
    }
}
