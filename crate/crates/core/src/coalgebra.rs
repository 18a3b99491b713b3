//! Finite-dimensional coalgebras and algebras given by structure constants,
//! and convolution inverses in `Hom(C, A)`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{axpy, basis_vector, kron_vectors, solve_linear, zero_vector, DenseMatrix, Vector};
use crate::report::CheckReport;
use crate::scalar::{Field, Scalar};
use crate::tensor::StructureTensor;

pub type Terms2 = Vec<(usize, usize, Scalar)>;
pub type Terms3 = Vec<(usize, usize, usize, Scalar)>;

/// A coalgebra on `k^dim`. The comultiplication tensor entry `(i, j, k)` is
/// the coefficient of `e_j ⊗ e_k` in `Δ(e_i)`.
#[derive(Clone, Debug)]
pub struct Coalgebra {
    field: Field,
    dim: usize,
    comult: StructureTensor,
    counit: Vector,
    terms: Vec<Terms2>,
    terms3: Vec<Terms3>,
}

impl PartialEq for Coalgebra {
    fn eq(&self, other: &Self) -> bool {
        self.comult == other.comult && self.counit == other.counit
    }
}

impl Eq for Coalgebra {}

impl Coalgebra {
    pub fn new(field: Field, dim: usize, comult: StructureTensor, counit: Vector) -> Result<Self> {
        if comult.shape() != (dim, dim, dim) {
            return Err(Error::Shape(format!(
                "comultiplication of a {dim}-dimensional coalgebra has shape {:?}",
                comult.shape()
            )));
        }
        if counit.len() != dim {
            return Err(Error::Shape(format!("counit has length {}, expected {dim}", counit.len())));
        }
        if comult.field() != field || counit.iter().any(|x| x.field() != field) {
            return Err(Error::FieldMismatch("coalgebra data over another field".into()));
        }
        let terms: Vec<Terms2> = (0..dim)
            .map(|i| {
                let mut t = Vec::new();
                for j in 0..dim {
                    for k in 0..dim {
                        let c = comult.get(i, j, k);
                        if !c.is_zero() {
                            t.push((j, k, c.clone()));
                        }
                    }
                }
                t
            })
            .collect();
        let terms3 = (0..dim)
            .map(|i| {
                let mut acc: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
                for (j, k, c) in &terms[i] {
                    for (p, q, d) in &terms[*j] {
                        acc.entry((*p, *q, *k)).or_insert_with(|| field.zero()).add_mul(c, d);
                    }
                }
                acc.into_iter()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|((p, q, k), v)| (p, q, k, v))
                    .collect()
            })
            .collect();
        Ok(Coalgebra {
            field,
            dim,
            comult,
            counit,
            terms,
            terms3,
        })
    }

    /// The coalgebra in which every basis vector is group-like.
    pub fn group_like(field: Field, dim: usize) -> Self {
        let comult = StructureTensor::from_bilinear(field, (dim, dim, dim), |_, _| zero_vector(field, dim));
        let mut entries = comult.entries().to_vec();
        for i in 0..dim {
            entries[(i * dim + i) * dim + i] = field.one();
        }
        let comult = StructureTensor::new(field, (dim, dim, dim), entries).expect("shape");
        Self::new(field, dim, comult, vec![field.one(); dim]).expect("group-like coalgebra")
    }

    /// Tensor product coalgebra on `self ⊗ other` (Kronecker basis order).
    pub fn tensor(&self, other: &Coalgebra) -> Coalgebra {
        let (d1, d2) = (self.dim, other.dim);
        let d = d1 * d2;
        let f = self.field;
        let mut entries = zero_vector(f, d * d * d);
        for i in 0..d1 {
            for j in 0..d2 {
                let src = i * d2 + j;
                for (p, q, c) in &self.terms[i] {
                    for (r, s, e) in &other.terms[j] {
                        let (a, b) = (p * d2 + r, q * d2 + s);
                        entries[(src * d + a) * d + b].add_mul(c, e);
                    }
                }
            }
        }
        let comult = StructureTensor::new(f, (d, d, d), entries).expect("shape");
        let counit = kron_vectors(f, &self.counit, &other.counit);
        Self::new(f, d, comult, counit).expect("tensor coalgebra")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn comult_tensor(&self) -> &StructureTensor {
        &self.comult
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    /// Sweedler terms `(j, k, c)` of `Δ(e_i) = Σ c e_j ⊗ e_k`.
    pub fn terms(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.terms[i]
    }

    /// Terms of `(Δ ⊗ id)Δ(e_i)`.
    pub fn terms3(&self, i: usize) -> &[(usize, usize, usize, Scalar)] {
        &self.terms3[i]
    }

    pub fn eps_basis(&self, i: usize) -> &Scalar {
        &self.counit[i]
    }

    pub fn eps(&self, x: &[Scalar]) -> Scalar {
        let mut acc = self.field.zero();
        for (a, b) in x.iter().zip(&self.counit) {
            acc.add_mul(a, b);
        }
        acc
    }

    /// `Δ(x)` as a vector of length `dim²`.
    pub fn comult(&self, x: &[Scalar]) -> Vector {
        let d = self.dim;
        let mut out = zero_vector(self.field, d * d);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, k, c) in &self.terms[i] {
                out[j * d + k].add_mul(xi, c);
            }
        }
        out
    }

    pub fn comult_basis(&self, i: usize) -> Vector {
        self.comult(&basis_vector(self.field, self.dim, i))
    }

    pub fn is_cocommutative(&self) -> bool {
        (0..self.dim).all(|i| {
            self.terms[i]
                .iter()
                .all(|(j, k, c)| self.comult.get(i, *k, *j) == c)
        })
    }

    /// Coassociativity and counit laws on every basis vector.
    pub fn check_axioms(&self, report: &mut CheckReport, grade: usize) {
        let d = self.dim;
        let f = self.field;
        for i in 0..d {
            let mut left = zero_vector(f, d * d * d);
            let mut right = zero_vector(f, d * d * d);
            for (j, k, c) in &self.terms[i] {
                for (p, q, e) in &self.terms[*j] {
                    left[(p * d + q) * d + k].add_mul(c, e);
                }
                for (p, q, e) in &self.terms[*k] {
                    right[(j * d + p) * d + q].add_mul(c, e);
                }
            }
            report.check("coassociativity", &[grade], &[i], left, right);

            let own = basis_vector(f, d, i);
            let mut left = zero_vector(f, d);
            let mut right = zero_vector(f, d);
            for (j, k, c) in &self.terms[i] {
                left[*k].add_mul(c, &self.counit[*j]);
                right[*j].add_mul(c, &self.counit[*k]);
            }
            report.check("counit", &[grade], &[i], left, own.clone());
            report.check("counit", &[grade], &[i], right, own);
        }
    }

    /// `(f ⊗ f)Δ(e_i)` for a linear map `f` into a space of dimension `f.rows()`.
    pub fn map_comult(&self, f: &DenseMatrix, i: usize) -> Vector {
        let n = f.rows();
        let mut out = zero_vector(self.field, n * n);
        for (j, k, c) in &self.terms[i] {
            let v = kron_vectors(self.field, &f.column(*j), &f.column(*k));
            axpy(&mut out, c, &v);
        }
        out
    }
}

/// Records whether `f: src → dst` commutes with comultiplication and counit.
pub fn check_coalgebra_map(
    report: &mut CheckReport,
    axiom: &str,
    src: &Coalgebra,
    dst: &Coalgebra,
    f: &DenseMatrix,
    grades: &[usize],
) {
    let counit_axiom = format!("{axiom} counit");
    for i in 0..src.dim() {
        let image = f.column(i);
        report.check(axiom, grades, &[i], dst.comult(&image), src.map_comult(f, i));
        report.check(
            &counit_axiom,
            grades,
            &[i],
            vec![dst.eps(&image)],
            vec![src.eps_basis(i).clone()],
        );
    }
}

/// A unital associative algebra on `k^dim` given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    field: Field,
    dim: usize,
    mult: StructureTensor,
    unit: Vector,
}

impl FiniteAlgebra {
    pub fn new(field: Field, dim: usize, mult: StructureTensor, unit: Vector) -> Result<Self> {
        if mult.shape() != (dim, dim, dim) || unit.len() != dim {
            return Err(Error::Shape(format!("algebra data inconsistent with dimension {dim}")));
        }
        Ok(FiniteAlgebra {
            field,
            dim,
            mult,
            unit,
        })
    }

    /// `End(k^n)` with matrix unit `E_rs` at index `r * n + s`.
    pub fn matrix_algebra(field: Field, n: usize) -> Self {
        let d = n * n;
        let mult = StructureTensor::from_bilinear(field, (d, d, d), |a, b| {
            let (r, s) = (a / n, a % n);
            let (t, u) = (b / n, b % n);
            let mut v = zero_vector(field, d);
            if s == t {
                v[r * n + u] = field.one();
            }
            v
        });
        let unit = DenseMatrix::identity(field, n).entries().to_vec();
        Self::new(field, d, mult, unit).expect("matrix algebra")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.mult.apply(x, y)
    }

    pub fn mult(&self) -> &StructureTensor {
        &self.mult
    }
}

/// Convolution product `(f * g)(e_i) = Σ f(e_j)·g(e_k)` over `Δ(e_i)`.
pub fn convolve(c: &Coalgebra, a: &FiniteAlgebra, f: &DenseMatrix, g: &DenseMatrix) -> DenseMatrix {
    DenseMatrix::from_columns(c.field(), a.dim(), c.dim(), |i| {
        let mut out = zero_vector(c.field(), a.dim());
        for (j, k, coef) in c.terms(i) {
            let p = a.mul(&f.column(*j), &g.column(*k));
            axpy(&mut out, coef, &p);
        }
        out
    })
}

/// The convolution unit `ε(·)1_A`.
pub fn convolution_unit(c: &Coalgebra, a: &FiniteAlgebra) -> DenseMatrix {
    DenseMatrix::from_columns(c.field(), a.dim(), c.dim(), |i| {
        a.unit().iter().map(|u| u * c.eps_basis(i)).collect()
    })
}

/// Solves `g * f = ε·1` for `g: C → A` (columns are images of basis vectors)
/// and confirms `f * g = ε·1`.
///
/// Returns `Ok(None)` when the left equation has no solution and
/// [`Error::OneSidedInverse`] when a left inverse exists but is not two-sided
/// or is not unique.
pub fn convolution_inverse(
    c: &Coalgebra,
    a: &FiniteAlgebra,
    f: &DenseMatrix,
) -> Result<Option<DenseMatrix>> {
    let field = c.field();
    let (dc, da) = (c.dim(), a.dim());
    if (f.rows(), f.cols()) != (da, dc) {
        return Err(Error::Dimension(format!(
            "map is {}x{}, expected {da}x{dc}",
            f.rows(),
            f.cols()
        )));
    }
    // w[r][k] = e_r · f(e_k)
    let w: Vec<Vec<Vector>> = (0..da)
        .map(|r| (0..dc).map(|k| a.mult().apply_left_basis(r, &f.column(k))).collect())
        .collect();
    let unknowns = da * dc;
    let mut system = DenseMatrix::zeros(field, dc * da, unknowns);
    let mut rhs = zero_vector(field, dc * da);
    for i in 0..dc {
        for (j, k, coef) in c.terms(i) {
            for (r, row) in w.iter().enumerate() {
                for (s, x) in row[*k].iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let cell = system.get(i * da + s, r * dc + j) + &(coef * x);
                    system.set(i * da + s, r * dc + j, cell);
                }
            }
        }
        for s in 0..da {
            rhs[i * da + s] = &a.unit()[s] * c.eps_basis(i);
        }
    }
    let Some(sol) = solve_linear(&system, &rhs)? else {
        return Ok(None);
    };
    let g = DenseMatrix::new(field, da, dc, sol.particular)?;
    let unit = convolution_unit(c, a);
    if convolve(c, a, f, &g) != unit {
        return Err(Error::OneSidedInverse(
            "left convolution inverse does not satisfy the right-inverse equation".into(),
        ));
    }
    if !sol.nullspace.is_empty() {
        return Err(Error::OneSidedInverse(format!(
            "left convolution inverse is not unique ({}-dimensional solution space)",
            sol.nullspace.len()
        )));
    }
    Ok(Some(g))
}
