use crate::error::{Error, Result};
use crate::linalg::{zero_vector, Vector};
use crate::scalar::{Field, Scalar};

/// Bilinear structure constants of shape `(d_out, d_in1, d_in2)`.
///
/// For a product tensor, entry `(i, j, k)` is the coefficient of output
/// basis vector `i` in the product of input basis vectors `j` and `k`.
/// Comultiplication tensors reuse the type with `(i, j, k)` read as the
/// coefficient of `e_j ⊗ e_k` in `Δ(e_i)`.
#[derive(Clone, Debug)]
pub struct StructureTensor {
    field: Field,
    shape: (usize, usize, usize),
    entries: Vec<Scalar>,
    // nonzero outputs per input pair, indexed j * d_in2 + k
    columns: Vec<Vec<(usize, Scalar)>>,
}

impl PartialEq for StructureTensor {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.shape == other.shape && self.entries == other.entries
    }
}

impl Eq for StructureTensor {}

impl StructureTensor {
    pub fn new(field: Field, shape: (usize, usize, usize), entries: Vec<Scalar>) -> Result<Self> {
        let (a, b, c) = shape;
        if entries.len() != a * b * c {
            return Err(Error::Shape(format!(
                "tensor of shape {shape:?} needs {} entries, got {}",
                a * b * c,
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|x| x.field() != field) {
            return Err(Error::FieldMismatch(format!(
                "tensor entry over {} in a structure over {field}",
                bad.field()
            )));
        }
        let mut columns = vec![Vec::new(); b * c];
        for i in 0..a {
            for j in 0..b {
                for k in 0..c {
                    let x = &entries[(i * b + j) * c + k];
                    if !x.is_zero() {
                        columns[j * c + k].push((i, x.clone()));
                    }
                }
            }
        }
        Ok(StructureTensor {
            field,
            shape,
            entries,
            columns,
        })
    }

    pub fn zeros(field: Field, shape: (usize, usize, usize)) -> Self {
        Self::new(field, shape, zero_vector(field, shape.0 * shape.1 * shape.2))
            .expect("consistent zero tensor")
    }

    /// Builds the tensor of a bilinear map from its values on basis pairs.
    pub fn from_bilinear(
        field: Field,
        shape: (usize, usize, usize),
        mut f: impl FnMut(usize, usize) -> Vector,
    ) -> Self {
        let (a, b, c) = shape;
        let mut entries = zero_vector(field, a * b * c);
        for j in 0..b {
            for k in 0..c {
                let out = f(j, k);
                assert_eq!(out.len(), a, "bilinear value has wrong length");
                for (i, x) in out.into_iter().enumerate() {
                    entries[(i * b + j) * c + k] = x;
                }
            }
        }
        Self::new(field, shape, entries).expect("consistent tensor")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn shape(&self) -> (usize, usize, usize) {
        self.shape
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let (_, b, c) = self.shape;
        &self.entries[(i * b + j) * c + k]
    }

    /// Copy with one entry replaced.
    pub fn with_entry(&self, i: usize, j: usize, k: usize, value: Scalar) -> Self {
        let (_, b, c) = self.shape;
        let mut entries = self.entries.clone();
        entries[(i * b + j) * c + k] = value;
        Self::new(self.field, self.shape, entries).expect("same shape")
    }

    /// Nonzero `(output index, coefficient)` pairs for the basis pair `(j, k)`.
    pub fn column(&self, j: usize, k: usize) -> &[(usize, Scalar)] {
        &self.columns[j * self.shape.2 + k]
    }

    pub fn apply_basis(&self, j: usize, k: usize) -> Vector {
        let mut out = zero_vector(self.field, self.shape.0);
        for (i, x) in self.column(j, k) {
            out[*i] = x.clone();
        }
        out
    }

    /// Evaluates the bilinear map on coordinate vectors.
    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let (a, b, c) = self.shape;
        assert_eq!((x.len(), y.len()), (b, c), "tensor input lengths");
        let mut out = zero_vector(self.field, a);
        for (j, xj) in x.iter().enumerate() {
            if xj.is_zero() {
                continue;
            }
            for (k, yk) in y.iter().enumerate() {
                if yk.is_zero() {
                    continue;
                }
                let coef = xj * yk;
                for (i, t) in self.column(j, k) {
                    out[*i].add_mul(&coef, t);
                }
            }
        }
        out
    }

    /// Same as [`apply`](Self::apply) with the first argument a basis vector.
    pub fn apply_left_basis(&self, j: usize, y: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.field, self.shape.0);
        for (k, yk) in y.iter().enumerate() {
            if yk.is_zero() {
                continue;
            }
            for (i, t) in self.column(j, k) {
                out[*i].add_mul(yk, t);
            }
        }
        out
    }

    /// Same as [`apply`](Self::apply) with the second argument a basis vector.
    pub fn apply_right_basis(&self, x: &[Scalar], k: usize) -> Vector {
        let mut out = zero_vector(self.field, self.shape.0);
        for (j, xj) in x.iter().enumerate() {
            if xj.is_zero() {
                continue;
            }
            for (i, t) in self.column(j, k) {
                out[*i].add_mul(xj, t);
            }
        }
        out
    }
}
