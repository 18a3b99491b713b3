//! Dense exact linear algebra over a [`Field`].
//!
//! Tensor products of spaces use the Kronecker convention throughout the
//! crate: the pure tensor `e_i ⊗ e_j` of `V ⊗ W` has index `i * dim W + j`.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

pub type Vector = Vec<Scalar>;

pub fn zero_vector(field: Field, len: usize) -> Vector {
    vec![field.zero(); len]
}

pub fn basis_vector(field: Field, len: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, len);
    v[i] = field.one();
    v
}

/// `acc += coef * v`.
pub fn axpy(acc: &mut [Scalar], coef: &Scalar, v: &[Scalar]) {
    debug_assert_eq!(acc.len(), v.len());
    if coef.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        a.add_mul(coef, x);
    }
}

pub fn scale(coef: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| coef * x).collect()
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// Kronecker product of two coordinate vectors.
pub fn kron_vectors(field: Field, a: &[Scalar], b: &[Scalar]) -> Vector {
    let mut out = zero_vector(field, a.len() * b.len());
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i * b.len() + j] = x * y;
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// One particular solution plus a basis of the kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub particular: Vector,
    pub nullspace: Vec<Vector>,
}

impl DenseMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        DenseMatrix {
            field,
            rows,
            cols,
            data: zero_vector(field, rows * cols),
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|x| x.field() != field) {
            return Err(Error::FieldMismatch(format!(
                "entry over {} in a matrix over {field}",
                bad.field()
            )));
        }
        Ok(DenseMatrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Self::new(field, r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_i64_rows(field: Field, rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Self::from_rows(field, rows).expect("rectangular literal")
    }

    /// Builds a matrix column by column: column `j` is `f(j)`.
    pub fn from_columns(
        field: Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize) -> Vector,
    ) -> Self {
        let mut m = Self::zeros(field, rows, cols);
        for j in 0..cols {
            let col = f(j);
            assert_eq!(col.len(), rows, "column {j} has wrong length");
            for (i, x) in col.into_iter().enumerate() {
                m.data[i * cols + j] = x;
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        assert_eq!(value.field(), self.field);
        self.data[r * self.cols + c] = value;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.field, self.rows)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        let mut out = zero_vector(self.field, self.rows);
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                o.add_mul(&self.data[r * self.cols + c], x);
            }
        }
        out
    }

    pub fn checked_mul(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[r * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    out.data[r * other.cols + c].add_mul(a, &other.data[k * other.cols + c]);
                }
            }
        }
        Ok(out)
    }

    /// Matrix product; panics on a dimension mismatch.
    pub fn mul(&self, other: &DenseMatrix) -> DenseMatrix {
        self.checked_mul(other).expect("matrix product dimensions")
    }

    pub fn add(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        DenseMatrix { data, ..*self }
    }

    pub fn sub(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        DenseMatrix { data, ..*self }
    }

    pub fn scale(&self, coef: &Scalar) -> DenseMatrix {
        DenseMatrix {
            data: scale(coef, &self.data),
            ..*self
        }
    }

    /// Kronecker product; row `(i, k)` maps to `i * other.rows + k`.
    pub fn kron(&self, other: &DenseMatrix) -> DenseMatrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Self::zeros(self.field, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.data[(i * other.rows + k) * cols + j * other.cols + l] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..cols {
            if rank == rows {
                break;
            }
            let Some(p) = (rank..rows).find(|&r| !self.data[r * cols + c].is_zero()) else {
                continue;
            };
            if p != rank {
                for k in 0..cols {
                    self.data.swap(p * cols + k, rank * cols + k);
                }
            }
            let inv = self.data[rank * cols + c].inv().expect("nonzero pivot");
            for k in c..cols {
                let v = &self.data[rank * cols + k] * &inv;
                self.data[rank * cols + k] = v;
            }
            let pivot_row: Vec<Scalar> = self.data[rank * cols..(rank + 1) * cols].to_vec();
            for r in 0..rows {
                if r == rank {
                    continue;
                }
                let factor = self.data[r * cols + c].clone();
                if factor.is_zero() {
                    continue;
                }
                let neg = -&factor;
                for k in c..cols {
                    if !pivot_row[k].is_zero() {
                        self.data[r * cols + k].add_mul(&neg, &pivot_row[k]);
                    }
                }
            }
            pivots.push(c);
            rank += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Kernel basis: one vector per free column, free variable set to one.
    pub fn nullspace(&self) -> Vec<Vector> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        kernel_from_rref(&m, &pivots, self.cols)
    }
}

fn kernel_from_rref(m: &DenseMatrix, pivots: &[usize], n: usize) -> Vec<Vector> {
    let field = m.field;
    let mut is_pivot = vec![false; n];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = zero_vector(field, n);
            v[free] = field.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m.get(r, free);
            }
            v
        })
        .collect()
}

/// Solves `A x = b` exactly. Returns `Ok(None)` when the system is
/// inconsistent; free variables of the particular solution are zero.
pub fn solve_linear(a: &DenseMatrix, b: &[Scalar]) -> Result<Option<Solution>> {
    if a.rows != b.len() {
        return Err(Error::Dimension(format!(
            "{}x{} system with right-hand side of length {}",
            a.rows,
            a.cols,
            b.len()
        )));
    }
    if let Some(bad) = b.iter().find(|x| x.field() != a.field) {
        return Err(Error::FieldMismatch(format!(
            "right-hand side over {} for a system over {}",
            bad.field(),
            a.field
        )));
    }
    let n = a.cols;
    let mut aug = DenseMatrix::zeros(a.field, a.rows, n + 1);
    for r in 0..a.rows {
        for c in 0..n {
            aug.data[r * (n + 1) + c] = a.get(r, c).clone();
        }
        aug.data[r * (n + 1) + n] = b[r].clone();
    }
    let pivots = aug.rref_in_place();
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut particular = zero_vector(a.field, n);
    for (r, &p) in pivots.iter().enumerate() {
        particular[p] = aug.get(r, n).clone();
    }
    // The augmented column is never a pivot here, so the kernel of the
    // coefficient block is read off the same echelon form.
    let mut nullspace = kernel_from_rref(&aug, &pivots, n + 1);
    nullspace.retain(|v| v[n].is_zero());
    for v in &mut nullspace {
        v.truncate(n);
    }
    Ok(Some(Solution {
        particular,
        nullspace,
    }))
}

/// Exact inverse, `Ok(None)` when singular.
pub fn invert(a: &DenseMatrix) -> Result<Option<DenseMatrix>> {
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "cannot invert a {}x{} matrix",
            a.rows, a.cols
        )));
    }
    let n = a.rows;
    if n == 0 {
        return Ok(Some(a.clone()));
    }
    let mut aug = DenseMatrix::zeros(a.field, n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            aug.data[r * 2 * n + c] = a.get(r, c).clone();
        }
        aug.data[r * 2 * n + n + r] = a.field.one();
    }
    let pivots = aug.rref_in_place();
    if pivots.len() < n || pivots[n - 1] >= n {
        return Ok(None);
    }
    let mut inv = DenseMatrix::zeros(a.field, n, n);
    for r in 0..n {
        for c in 0..n {
            inv.data[r * n + c] = aug.get(r, n + c).clone();
        }
    }
    Ok(Some(inv))
}

impl fmt::Display for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Q.from_i64(x)).collect()
    }

    #[test]
    fn solve_identity() {
        let sol = solve_linear(&DenseMatrix::identity(Q, 2), &v(&[1, 2]))
            .unwrap()
            .unwrap();
        assert_eq!(sol.particular, v(&[1, 2]));
        assert!(sol.nullspace.is_empty());
    }

    #[test]
    fn solve_inconsistent() {
        let a = DenseMatrix::from_i64_rows(Q, &[&[1, 1], &[2, 2]]);
        assert_eq!(solve_linear(&a, &v(&[1, 3])).unwrap(), None);
    }

    #[test]
    fn solve_rank_deficient() {
        let a = DenseMatrix::from_i64_rows(Q, &[&[1, 1], &[2, 2]]);
        let sol = solve_linear(&a, &v(&[1, 2])).unwrap().unwrap();
        assert_eq!(sol.particular, v(&[1, 0]));
        assert_eq!(sol.nullspace, vec![v(&[-1, 1])]);
        assert!(is_zero_vector(&a.mul_vec(&sol.nullspace[0])));
    }

    #[test]
    fn solve_dimension_mismatch() {
        let a = DenseMatrix::identity(Q, 2);
        assert!(matches!(solve_linear(&a, &v(&[1])), Err(Error::Dimension(_))));
    }

    #[test]
    fn kron_examples() {
        assert!(DenseMatrix::identity(Q, 2)
            .kron(&DenseMatrix::identity(Q, 3))
            .is_identity());
        let b = DenseMatrix::from_i64_rows(Q, &[&[1, 2], &[3, 4]]);
        let two = DenseMatrix::from_i64_rows(Q, &[&[2]]);
        assert_eq!(two.kron(&b), b.scale(&Q.from_i64(2)));
        let swap = DenseMatrix::from_i64_rows(Q, &[&[0, 1], &[1, 0]]);
        let expected = DenseMatrix::from_i64_rows(
            Q,
            &[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]],
        );
        assert_eq!(swap.kron(&DenseMatrix::identity(Q, 2)), expected);
    }

    #[test]
    fn invert_examples() {
        assert!(invert(&DenseMatrix::identity(Q, 3)).unwrap().unwrap().is_identity());
        let two = DenseMatrix::from_i64_rows(Q, &[&[2]]);
        assert_eq!(
            invert(&two).unwrap().unwrap().get(0, 0),
            &Q.ratio(1, 2).unwrap()
        );
        let ones = DenseMatrix::from_i64_rows(Q, &[&[1, 1], &[1, 1]]);
        assert_eq!(invert(&ones).unwrap(), None);
        let rect = DenseMatrix::zeros(Q, 2, 3);
        assert!(invert(&rect).is_err());
    }

    #[test]
    fn prime_field_inverse() {
        let f = Field::prime(5).unwrap();
        let a = DenseMatrix::from_i64_rows(f, &[&[1, 2], &[3, 4]]);
        let inv = invert(&a).unwrap().unwrap();
        assert!(a.mul(&inv).is_identity());
    }
}
