//! Hopf π-algebras stored as exact structure constants.
//!
//! Every identity below is multilinear, so checking it on all tuples of
//! basis vectors (over all grade tuples) proves it on the whole space.

use std::ops::Deref;
use std::sync::Arc;

use rayon::prelude::*;

use crate::coalgebra::Coalgebra;
use crate::error::{Error, Result};
use crate::graded::{GradedLinearMap, GradedSpace};
use crate::group::{FiniteGroup, GroupHom};
use crate::linalg::{axpy, basis_vector, invert, kron_vectors, solve_linear, zero_vector, DenseMatrix, Vector};
use crate::report::CheckReport;
use crate::scalar::{Field, Scalar};
use crate::tensor::StructureTensor;

/// Algebra and coalgebra data of a Hopf π-algebra without the antipode.
#[derive(Clone, Debug)]
pub struct PiBialgebra {
    space: GradedSpace,
    coalgebras: Vec<Coalgebra>,
    // indexed a * |π| + b, shape (dim(ab), dim a, dim b)
    mult: Vec<StructureTensor>,
    unit: Vector,
    labels: Vec<Vec<String>>,
}

impl PartialEq for PiBialgebra {
    /// Structural equality; basis labels are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space
            && self.coalgebras == other.coalgebras
            && self.mult == other.mult
            && self.unit == other.unit
    }
}

impl Eq for PiBialgebra {}

fn default_labels(space: &GradedSpace) -> Vec<Vec<String>> {
    space
        .grades()
        .map(|a| {
            (0..space.dim(a))
                .map(|i| format!("{}#{i}", space.group().name(a)))
                .collect()
        })
        .collect()
}

impl PiBialgebra {
    pub fn new(
        space: GradedSpace,
        coalgebras: Vec<Coalgebra>,
        mult: Vec<StructureTensor>,
        unit: Vector,
    ) -> Result<Self> {
        let labels = default_labels(&space);
        Self::with_labels(space, coalgebras, mult, unit, labels)
    }

    pub fn with_labels(
        space: GradedSpace,
        coalgebras: Vec<Coalgebra>,
        mult: Vec<StructureTensor>,
        unit: Vector,
        labels: Vec<Vec<String>>,
    ) -> Result<Self> {
        let g = space.group().clone();
        let n = g.size();
        let field = space.field();
        if coalgebras.len() != n {
            return Err(Error::Shape(format!("{} coalgebras for {n} grades", coalgebras.len())));
        }
        for a in g.elements() {
            if coalgebras[a].dim() != space.dim(a) {
                return Err(Error::Shape(format!(
                    "coalgebra in grade {} has dimension {}, expected {}",
                    g.name(a),
                    coalgebras[a].dim(),
                    space.dim(a)
                )));
            }
            if coalgebras[a].field() != field {
                return Err(Error::FieldMismatch("coalgebra over another field".into()));
            }
        }
        if mult.len() != n * n {
            return Err(Error::Shape(format!("{} multiplication blocks for {n} grades", mult.len())));
        }
        for a in g.elements() {
            for b in g.elements() {
                let t = &mult[a * n + b];
                let want = (space.dim(g.mul(a, b)), space.dim(a), space.dim(b));
                if t.shape() != want {
                    return Err(Error::Shape(format!(
                        "multiplication block ({}, {}) has shape {:?}, expected {want:?}",
                        g.name(a),
                        g.name(b),
                        t.shape()
                    )));
                }
                if t.field() != field {
                    return Err(Error::FieldMismatch("multiplication over another field".into()));
                }
            }
        }
        if unit.len() != space.dim(g.identity()) {
            return Err(Error::Shape("unit does not live in the identity grade".into()));
        }
        if labels.len() != n || g.elements().any(|a| labels[a].len() != space.dim(a)) {
            return Err(Error::Shape("basis labels do not match grade dimensions".into()));
        }
        Ok(PiBialgebra {
            space,
            coalgebras,
            mult,
            unit,
            labels,
        })
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.space.group()
    }

    pub fn field(&self) -> Field {
        self.space.field()
    }

    pub fn dim(&self, grade: usize) -> usize {
        self.space.dim(grade)
    }

    pub fn grades(&self) -> std::ops::Range<usize> {
        self.space.grades()
    }

    pub fn identity(&self) -> usize {
        self.group().identity()
    }

    pub fn coalgebra(&self, grade: usize) -> &Coalgebra {
        &self.coalgebras[grade]
    }

    pub fn coalgebras(&self) -> &[Coalgebra] {
        &self.coalgebras
    }

    pub fn mult_tensor(&self, a: usize, b: usize) -> &StructureTensor {
        &self.mult[a * self.group().size() + b]
    }

    pub fn mult_tensors(&self) -> &[StructureTensor] {
        &self.mult
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn labels(&self, grade: usize) -> &[String] {
        &self.labels[grade]
    }

    pub fn all_labels(&self) -> &[Vec<String>] {
        &self.labels
    }

    /// Product of `x ∈ H_a` and `y ∈ H_b`, an element of `H_{ab}`.
    pub fn mul(&self, a: usize, x: &[Scalar], b: usize, y: &[Scalar]) -> Vector {
        self.mult_tensor(a, b).apply(x, y)
    }

    pub fn mul_basis(&self, a: usize, i: usize, b: usize, j: usize) -> Vector {
        self.mult_tensor(a, b).apply_basis(i, j)
    }

    pub fn mul_left_basis(&self, a: usize, i: usize, b: usize, y: &[Scalar]) -> Vector {
        self.mult_tensor(a, b).apply_left_basis(i, y)
    }

    pub fn mul_right_basis(&self, a: usize, x: &[Scalar], b: usize, j: usize) -> Vector {
        self.mult_tensor(a, b).apply_right_basis(x, j)
    }

    pub fn eps(&self, grade: usize, x: &[Scalar]) -> Scalar {
        self.coalgebras[grade].eps(x)
    }

    pub fn basis(&self, grade: usize, i: usize) -> Vector {
        basis_vector(self.field(), self.dim(grade), i)
    }

    pub fn zero(&self, grade: usize) -> Vector {
        zero_vector(self.field(), self.dim(grade))
    }

    /// `ε(x)·1` for `x` in `grade`.
    pub fn eps_unit(&self, grade: usize, x: &[Scalar]) -> Vector {
        let e = self.eps(grade, x);
        self.unit.iter().map(|u| u * &e).collect()
    }

    pub fn is_cocommutative(&self) -> bool {
        self.coalgebras.iter().all(Coalgebra::is_cocommutative)
    }

    pub fn relabel(mut self, labels: Vec<Vec<String>>) -> Result<Self> {
        let n = self.group().size();
        if labels.len() != n || self.grades().any(|a| labels[a].len() != self.dim(a)) {
            return Err(Error::Shape("basis labels do not match grade dimensions".into()));
        }
        self.labels = labels;
        Ok(self)
    }
}

/// A Hopf π-algebra: a [`PiBialgebra`] with a grade-inverting antipode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfPiAlgebra {
    bialgebra: PiBialgebra,
    antipode: GradedLinearMap,
}

impl Deref for HopfPiAlgebra {
    type Target = PiBialgebra;

    fn deref(&self) -> &PiBialgebra {
        &self.bialgebra
    }
}

impl HopfPiAlgebra {
    pub fn new(bialgebra: PiBialgebra, antipode: GradedLinearMap) -> Result<Self> {
        if antipode.source() != bialgebra.space() || antipode.target() != bialgebra.space() {
            return Err(Error::Shape("antipode must act on the algebra's graded space".into()));
        }
        if !antipode.has_inverting_shift() {
            return Err(Error::Shape("antipode must map grade α to grade α⁻¹".into()));
        }
        Ok(HopfPiAlgebra {
            bialgebra,
            antipode,
        })
    }

    /// Builds the algebra from per-grade antipode blocks `H_α → H_{α⁻¹}`.
    pub fn from_parts(
        bialgebra: PiBialgebra,
        antipode_blocks: Vec<DenseMatrix>,
    ) -> Result<Self> {
        let s = GradedLinearMap::grade_inverting(bialgebra.space(), antipode_blocks)?;
        Self::new(bialgebra, s)
    }

    pub fn bialgebra(&self) -> &PiBialgebra {
        &self.bialgebra
    }

    pub fn antipode(&self) -> &GradedLinearMap {
        &self.antipode
    }

    /// `S_a(x)`, an element of `H_{a⁻¹}`.
    pub fn s(&self, a: usize, x: &[Scalar]) -> Vector {
        self.antipode.apply(a, x)
    }

    pub fn s_basis(&self, a: usize, i: usize) -> Vector {
        self.antipode.block(a).column(i)
    }

    pub fn inv(&self, a: usize) -> usize {
        self.group().inv(a)
    }

    pub fn with_mult(&self, a: usize, b: usize, tensor: StructureTensor) -> Result<Self> {
        let mut mult = self.mult.clone();
        mult[a * self.group().size() + b] = tensor;
        let bi = PiBialgebra::with_labels(
            self.space.clone(),
            self.coalgebras.clone(),
            mult,
            self.unit.clone(),
            self.labels.clone(),
        )?;
        Self::new(bi, self.antipode.clone())
    }

    pub fn with_coalgebra(&self, a: usize, coalgebra: Coalgebra) -> Result<Self> {
        let mut coalgebras = self.coalgebras.clone();
        coalgebras[a] = coalgebra;
        let bi = PiBialgebra::with_labels(
            self.space.clone(),
            coalgebras,
            self.mult.clone(),
            self.unit.clone(),
            self.labels.clone(),
        )?;
        Self::new(bi, self.antipode.clone())
    }

    pub fn with_antipode_block(&self, a: usize, block: DenseMatrix) -> Result<Self> {
        Self::new(self.bialgebra.clone(), self.antipode.with_block(a, block)?)
    }

    pub fn with_unit(&self, unit: Vector) -> Result<Self> {
        let bi = PiBialgebra::with_labels(
            self.space.clone(),
            self.coalgebras.clone(),
            self.mult.clone(),
            unit,
            self.labels.clone(),
        )?;
        Self::new(bi, self.antipode.clone())
    }

    pub fn relabel(&self, labels: Vec<Vec<String>>) -> Result<Self> {
        Ok(HopfPiAlgebra {
            bialgebra: self.bialgebra.clone().relabel(labels)?,
            antipode: self.antipode.clone(),
        })
    }

    /// Same structure over `group`, which must have the identical
    /// multiplication table (only element names may differ).
    pub fn regrade(&self, group: Arc<FiniteGroup>) -> Result<Self> {
        if group.table_rows() != self.group().table_rows() {
            return Err(Error::Shape("regrading requires an identical group table".into()));
        }
        let space = GradedSpace::new(self.field(), group, self.space.dims().to_vec())?;
        let bi = PiBialgebra::with_labels(
            space.clone(),
            self.coalgebras.clone(),
            self.mult.clone(),
            self.unit.clone(),
            self.labels.clone(),
        )?;
        Self::from_parts(bi, self.antipode.blocks().to_vec())
    }
}

pub(crate) fn grade_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect()
}

pub(crate) fn grade_triples(n: usize) -> Vec<(usize, usize, usize)> {
    (0..n)
        .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
        .collect()
}

/// Runs `f` on every item in parallel and merges the reports in item order.
pub(crate) fn par_reports<T: Sync>(
    items: &[T],
    f: impl Fn(&T) -> CheckReport + Sync + Send,
) -> CheckReport {
    let parts: Vec<CheckReport> = items.par_iter().map(f).collect();
    let mut out = CheckReport::new();
    for p in parts {
        out.merge(p);
    }
    out
}


pub const HOPF_AXIOMS: &[&str] = &[
    "associativity",
    "left unit",
    "right unit",
    "coassociativity",
    "counit",
    "comultiplicativity",
    "counit multiplicativity",
    "unit coalgebra",
    "antipode left",
    "antipode right",
];

/// Full Hopf π-algebra axiom suite on basis tuples.
pub fn check_hopf_pi_algebra(h: &HopfPiAlgebra) -> CheckReport {
    let g = h.group().clone();
    let n = g.size();
    let e = g.identity();
    let mut report = CheckReport::new();
    for name in HOPF_AXIOMS {
        report.declare(name);
    }

    let grades: Vec<usize> = g.elements().collect();
    report.merge(par_reports(&grades, |&a| {
        let mut r = CheckReport::new();
        let ai = g.inv(a);
        h.coalgebra(a).check_axioms(&mut r, a);
        for i in 0..h.dim(a) {
            let x = h.basis(a, i);
            r.check("left unit", &[e, a], &[i], h.mul_right_basis(e, h.unit(), a, i), x.clone());
            r.check("right unit", &[a, e], &[i], h.mul_left_basis(a, i, e, h.unit()), x);
            let target = h.eps_unit(a, &h.basis(a, i));
            let mut left = h.zero(e);
            let mut right = h.zero(e);
            for (j, k, c) in h.coalgebra(a).terms(i) {
                axpy(&mut left, c, &h.mul_right_basis(ai, &h.s_basis(a, *j), a, *k));
                axpy(&mut right, c, &h.mul_left_basis(a, *j, ai, &h.s_basis(a, *k)));
            }
            r.check("antipode left", &[a], &[i], left, target.clone());
            r.check("antipode right", &[a], &[i], right, target);
        }
        r
    }));

    let unit = h.unit().to_vec();
    let de = h.dim(e);
    let f = h.field();
    let mut unit_delta = zero_vector(f, de * de);
    if de > 0 {
        unit_delta = h.coalgebra(e).comult(&unit);
    }
    report.check("unit coalgebra", &[e], &[], unit_delta, kron_vectors(f, &unit, &unit));
    report.check("unit coalgebra", &[e], &[], vec![h.eps(e, &unit)], vec![f.one()]);

    report.merge(par_reports(&grade_pairs(n), |&(a, b)| {
        let mut r = CheckReport::new();
        let ab = g.mul(a, b);
        let (ca, cb, cab) = (h.coalgebra(a), h.coalgebra(b), h.coalgebra(ab));
        for i in 0..h.dim(a) {
            for j in 0..h.dim(b) {
                let p = h.mul_basis(a, i, b, j);
                let mut rhs = zero_vector(f, h.dim(ab) * h.dim(ab));
                for (p1, p2, c) in ca.terms(i) {
                    for (q1, q2, d) in cb.terms(j) {
                        let v = kron_vectors(f, &h.mul_basis(a, *p1, b, *q1), &h.mul_basis(a, *p2, b, *q2));
                        axpy(&mut rhs, &(c * d), &v);
                    }
                }
                r.check("comultiplicativity", &[a, b], &[i, j], cab.comult(&p), rhs);
                r.check(
                    "counit multiplicativity",
                    &[a, b],
                    &[i, j],
                    vec![cab.eps(&p)],
                    vec![ca.eps_basis(i) * cb.eps_basis(j)],
                );
            }
        }
        r
    }));

    report.merge(par_reports(&grade_triples(n), |&(a, b, c)| {
        let mut r = CheckReport::new();
        let (ab, bc) = (g.mul(a, b), g.mul(b, c));
        for i in 0..h.dim(a) {
            for j in 0..h.dim(b) {
                let xy = h.mul_basis(a, i, b, j);
                for k in 0..h.dim(c) {
                    let left = h.mul_right_basis(ab, &xy, c, k);
                    let right = h.mul_left_basis(a, i, bc, &h.mul_basis(b, j, c, k));
                    r.check("associativity", &[a, b, c], &[i, j, k], left, right);
                }
            }
        }
        r
    }));
    report
}

/// True iff every `Δ_α` is invariant under the flip.
pub fn is_cocommutative(h: &PiBialgebra) -> bool {
    h.is_cocommutative()
}

/// Consequences of the Hopf axioms involving the antipode.
pub fn check_antipode_identities(h: &HopfPiAlgebra) -> CheckReport {
    let g = h.group().clone();
    let f = h.field();
    let mut report = CheckReport::new();
    for name in [
        "antipode anti-multiplicativity",
        "antipode anti-comultiplicativity",
        "antipode counit",
        "antipode unit",
    ] {
        report.declare(name);
    }
    report.merge(par_reports(&grade_pairs(g.size()), |&(a, b)| {
        let mut r = CheckReport::new();
        let ab = g.mul(a, b);
        let (ai, bi) = (g.inv(a), g.inv(b));
        for i in 0..h.dim(a) {
            for j in 0..h.dim(b) {
                let left = h.s(ab, &h.mul_basis(a, i, b, j));
                let right = h.mul(bi, &h.s_basis(b, j), ai, &h.s_basis(a, i));
                r.check("antipode anti-multiplicativity", &[a, b], &[i, j], left, right);
            }
        }
        r
    }));
    for a in g.elements() {
        let ai = g.inv(a);
        for i in 0..h.dim(a) {
            let si = h.s_basis(a, i);
            let mut flipped = zero_vector(f, h.dim(ai) * h.dim(ai));
            for (j, k, c) in h.coalgebra(a).terms(i) {
                axpy(&mut flipped, c, &kron_vectors(f, &h.s_basis(a, *k), &h.s_basis(a, *j)));
            }
            report.check(
                "antipode anti-comultiplicativity",
                &[a],
                &[i],
                h.coalgebra(ai).comult(&si),
                flipped,
            );
            report.check(
                "antipode counit",
                &[a],
                &[i],
                vec![h.eps(ai, &si)],
                vec![h.coalgebra(a).eps_basis(i).clone()],
            );
        }
    }
    let e = g.identity();
    report.check("antipode unit", &[e], &[], h.s(e, h.unit()), h.unit().to_vec());
    if h.is_cocommutative() {
        report.declare("antipode involutivity");
        for a in g.elements() {
            let twice = h.antipode().block(g.inv(a)).mul(h.antipode().block(a));
            report.check_flag("antipode involutivity", &[a], &[], twice.is_identity());
        }
    } else {
        report.note("antipode involutivity not checked: algebra is not cocommutative");
    }
    report
}

/// The group algebra `k[Γ]` graded by `deg: Γ → π`: `H_α` is spanned by the
/// fiber over `α` in the order of `Γ`, every basis element is group-like, and
/// `S(g) = g⁻¹`.
pub fn group_algebra(field: Field, deg: &GroupHom) -> HopfPiAlgebra {
    let gamma = deg.source().clone();
    let pi = deg.target().clone();
    let fibers: Vec<Vec<usize>> = pi.elements().map(|a| deg.fiber(a)).collect();
    let mut position = vec![0; gamma.size()];
    for fiber in &fibers {
        for (i, &x) in fiber.iter().enumerate() {
            position[x] = i;
        }
    }
    let dims: Vec<usize> = fibers.iter().map(Vec::len).collect();
    let space = GradedSpace::new(field, pi.clone(), dims.clone()).expect("dims per grade");
    let coalgebras = dims.iter().map(|&d| Coalgebra::group_like(field, d)).collect();
    let mut mult = Vec::with_capacity(pi.size() * pi.size());
    for a in pi.elements() {
        for b in pi.elements() {
            let ab = pi.mul(a, b);
            mult.push(StructureTensor::from_bilinear(field, (dims[ab], dims[a], dims[b]), |i, j| {
                let x = gamma.mul(fibers[a][i], fibers[b][j]);
                basis_vector(field, dims[ab], position[x])
            }));
        }
    }
    let e = pi.identity();
    let unit = basis_vector(field, dims[e], position[gamma.identity()]);
    let labels = fibers
        .iter()
        .map(|fib| fib.iter().map(|&x| gamma.name(x).to_string()).collect())
        .collect();
    let bi = PiBialgebra::with_labels(space, coalgebras, mult, unit, labels).expect("group algebra shapes");
    let blocks = pi
        .elements()
        .map(|a| {
            let ai = pi.inv(a);
            DenseMatrix::from_columns(field, dims[ai], dims[a], |i| {
                basis_vector(field, dims[ai], position[gamma.inv(fibers[a][i])])
            })
        })
        .collect();
    HopfPiAlgebra::from_parts(bi, blocks).expect("group algebra antipode")
}

/// Checks that `f: H → K` (identity grade shift) is a morphism of Hopf
/// π-algebras on every basis vector and pair.
pub fn check_hopf_morphism(
    f: &GradedLinearMap,
    h: &HopfPiAlgebra,
    k: &HopfPiAlgebra,
) -> Result<CheckReport> {
    if !f.has_identity_shift() {
        return Err(Error::Shape("morphism check needs an identity grade shift".into()));
    }
    if f.source() != h.space() || f.target() != k.space() {
        return Err(Error::Shape("morphism does not map between the given algebras".into()));
    }
    let g = h.group().clone();
    let mut report = CheckReport::new();
    for name in [
        "morphism multiplicativity",
        "morphism unit",
        "morphism comultiplicativity",
        "morphism counit",
        "morphism antipode",
    ] {
        report.declare(name);
    }
    report.merge(par_reports(&grade_pairs(g.size()), |&(a, b)| {
        let mut r = CheckReport::new();
        let ab = g.mul(a, b);
        for i in 0..h.dim(a) {
            for j in 0..h.dim(b) {
                let left = f.apply(ab, &h.mul_basis(a, i, b, j));
                let right = k.mul(a, &f.block(a).column(i), b, &f.block(b).column(j));
                r.check("morphism multiplicativity", &[a, b], &[i, j], left, right);
            }
        }
        r
    }));
    let e = g.identity();
    report.check("morphism unit", &[e], &[], f.apply(e, h.unit()), k.unit().to_vec());
    for a in g.elements() {
        let block = f.block(a);
        let ai = g.inv(a);
        for i in 0..h.dim(a) {
            let image = block.column(i);
            report.check(
                "morphism comultiplicativity",
                &[a],
                &[i],
                k.coalgebra(a).comult(&image),
                h.coalgebra(a).map_comult(block, i),
            );
            report.check(
                "morphism counit",
                &[a],
                &[i],
                vec![k.eps(a, &image)],
                vec![h.coalgebra(a).eps_basis(i).clone()],
            );
            report.check(
                "morphism antipode",
                &[a],
                &[i],
                k.s(a, &image),
                f.apply(ai, &h.s_basis(a, i)),
            );
        }
    }
    Ok(report)
}

/// Solves the left antipode equation `m(S ⊗ id)Δ = ε·1` grade by grade and
/// keeps the solution only if the right equation also holds.
pub fn solve_antipode(b: &PiBialgebra) -> Result<Option<GradedLinearMap>> {
    let g = b.group().clone();
    let f = b.field();
    let e = g.identity();
    let de = b.dim(e);
    let mut blocks = Vec::with_capacity(g.size());
    for a in g.elements() {
        let ai = g.inv(a);
        let (da, dai) = (b.dim(a), b.dim(ai));
        // unknown S[r, j] at index r * da + j
        let mut system = DenseMatrix::zeros(f, da * de, dai * da);
        let mut rhs = zero_vector(f, da * de);
        for i in 0..da {
            for (j, k, c) in b.coalgebra(a).terms(i) {
                for r in 0..dai {
                    let prod = b.mul_basis(ai, r, a, *k);
                    for (s, x) in prod.iter().enumerate() {
                        if !x.is_zero() {
                            let cell = system.get(i * de + s, r * da + j) + &(c * x);
                            system.set(i * de + s, r * da + j, cell);
                        }
                    }
                }
            }
            let target = b.eps_unit(a, &b.basis(a, i));
            for (s, t) in target.into_iter().enumerate() {
                rhs[i * de + s] = t;
            }
        }
        let Some(sol) = solve_linear(&system, &rhs)? else {
            return Ok(None);
        };
        let block = DenseMatrix::new(f, dai, da, sol.particular)?;
        for i in 0..da {
            let mut right = zero_vector(f, de);
            for (j, k, c) in b.coalgebra(a).terms(i) {
                axpy(&mut right, c, &b.mul_left_basis(a, *j, ai, &block.column(*k)));
            }
            if right != b.eps_unit(a, &b.basis(a, i)) {
                return Ok(None);
            }
        }
        blocks.push(block);
    }
    Ok(Some(GradedLinearMap::grade_inverting(b.space(), blocks)?))
}

/// `H^op`: `a ·op b = b·a`. Needs an abelian grading group so that the
/// product of `H_α ⊗ H_β` lands in `H_{αβ}`.
pub fn opposite(h: &HopfPiAlgebra) -> Result<HopfPiAlgebra> {
    let g = h.group().clone();
    if !g.is_abelian() {
        return Err(Error::NonAbelian("opposite multiplication".into()));
    }
    let f = h.field();
    let mult = grade_pairs(g.size())
        .into_iter()
        .map(|(a, b)| {
            let ab = g.mul(a, b);
            StructureTensor::from_bilinear(f, (h.dim(ab), h.dim(a), h.dim(b)), |i, j| {
                h.mul_basis(b, j, a, i)
            })
        })
        .collect();
    let bi = PiBialgebra::with_labels(
        h.space().clone(),
        h.coalgebras().to_vec(),
        mult,
        h.unit().to_vec(),
        h.all_labels().to_vec(),
    )?;
    HopfPiAlgebra::new(bi, h.antipode().clone())
}

/// Tensor product `K ⊗ H` over `π₁ × π₂` (`K`'s group index major); the
/// component of grade `(γ, α)` is `K_γ ⊗ H_α` with basis `a * dim H_α + x`.
pub fn tensor_product(k: &HopfPiAlgebra, h: &HopfPiAlgebra) -> Result<HopfPiAlgebra> {
    if k.field() != h.field() {
        return Err(Error::FieldMismatch("tensor product of algebras over different fields".into()));
    }
    let f = k.field();
    let (g1, g2) = (k.group().clone(), h.group().clone());
    let pi = Arc::new(g1.direct_product(&g2));
    let m = g2.size();
    let split = |x: usize| (x / m, x % m);
    let dims: Vec<usize> = pi.elements().map(|x| {
        let (c, a) = split(x);
        k.dim(c) * h.dim(a)
    }).collect();
    let space = GradedSpace::new(f, pi.clone(), dims)?;
    let coalgebras = pi
        .elements()
        .map(|x| {
            let (c, a) = split(x);
            k.coalgebra(c).tensor(h.coalgebra(a))
        })
        .collect();
    let mut mult = Vec::new();
    for x in pi.elements() {
        for y in pi.elements() {
            let ((c1, a1), (c2, a2)) = (split(x), split(y));
            let (c, a) = (g1.mul(c1, c2), g2.mul(a1, a2));
            let (dh1, dh2) = (h.dim(a1), h.dim(a2));
            mult.push(StructureTensor::from_bilinear(
                f,
                (k.dim(c) * h.dim(a), k.dim(c1) * dh1, k.dim(c2) * dh2),
                |p, q| {
                    kron_vectors(
                        f,
                        &k.mul_basis(c1, p / dh1, c2, q / dh2),
                        &h.mul_basis(a1, p % dh1, a2, q % dh2),
                    )
                },
            ));
        }
    }
    let unit = kron_vectors(f, k.unit(), h.unit());
    let labels = pi
        .elements()
        .map(|x| {
            let (c, a) = split(x);
            k.labels(c)
                .iter()
                .flat_map(|l| h.labels(a).iter().map(move |r| format!("{l}⊗{r}")))
                .collect()
        })
        .collect();
    let bi = PiBialgebra::with_labels(space, coalgebras, mult, unit, labels)?;
    let blocks = pi
        .elements()
        .map(|x| {
            let (c, a) = split(x);
            k.antipode().block(c).kron(h.antipode().block(a))
        })
        .collect();
    HopfPiAlgebra::from_parts(bi, blocks)
}

/// The identity component `H_e` as a Hopf algebra over the trivial group.
pub fn identity_component(h: &HopfPiAlgebra) -> HopfPiAlgebra {
    let e = h.identity();
    let trivial = Arc::new(FiniteGroup::trivial());
    let space = GradedSpace::new(h.field(), trivial, vec![h.dim(e)]).expect("one grade");
    let bi = PiBialgebra::with_labels(
        space,
        vec![h.coalgebra(e).clone()],
        vec![h.mult_tensor(e, e).clone()],
        h.unit().to_vec(),
        vec![h.labels(e).to_vec()],
    )
    .expect("identity component shapes");
    HopfPiAlgebra::from_parts(bi, vec![h.antipode().block(e).clone()]).expect("identity component")
}

/// Copies `H_α = H` of an algebra `H` over the trivial group, indexed by a
/// group `π` of automorphisms `φ_α` of `H`. Coordinates in `H_α` are those of
/// `φ_α(h)`, so `m_{α,β} = φ_{αβ} ∘ m ∘ (φ_α⁻¹ ⊗ φ_β⁻¹)`,
/// `S_α = φ_{α⁻¹} ∘ S ∘ φ_α⁻¹` and `Δ`, `ε` are unchanged.
///
/// `autos[α]` must be invertible and `autos[αβ] = autos[α]·autos[β]`.
/// Whether each `φ_α` preserves structure is the caller's check.
pub fn twisted_copies(
    h: &HopfPiAlgebra,
    autos: &[DenseMatrix],
    pi: Arc<FiniteGroup>,
) -> Result<(HopfPiAlgebra, Vec<DenseMatrix>)> {
    if !h.group().is_trivial() {
        return Err(Error::Input("automorphism-indexed copies need an algebra over the trivial group".into()));
    }
    let f = h.field();
    let d = h.dim(0);
    if autos.len() != pi.size() {
        return Err(Error::Input(format!(
            "{} automorphisms for a group of order {}",
            autos.len(),
            pi.size()
        )));
    }
    let mut inverses = Vec::with_capacity(autos.len());
    for (a, phi) in autos.iter().enumerate() {
        if (phi.rows(), phi.cols()) != (d, d) {
            return Err(Error::Input(format!("automorphism {} is not {d}x{d}", pi.name(a))));
        }
        let inv = invert(phi)?
            .ok_or_else(|| Error::Input(format!("automorphism {} is singular", pi.name(a))))?;
        inverses.push(inv);
    }
    for a in pi.elements() {
        for b in pi.elements() {
            if autos[pi.mul(a, b)] != autos[a].mul(&autos[b]) {
                return Err(Error::Input(format!(
                    "automorphisms do not compose like the group at ({}, {})",
                    pi.name(a),
                    pi.name(b)
                )));
            }
        }
    }
    let space = GradedSpace::new(f, pi.clone(), vec![d; pi.size()])?;
    let coalgebras = vec![h.coalgebra(0).clone(); pi.size()];
    let mult = grade_pairs(pi.size())
        .into_iter()
        .map(|(a, b)| {
            let ab = pi.mul(a, b);
            StructureTensor::from_bilinear(f, (d, d, d), |i, j| {
                let p = h.mul(0, &inverses[a].column(i), 0, &inverses[b].column(j));
                autos[ab].mul_vec(&p)
            })
        })
        .collect();
    let unit = autos[pi.identity()].mul_vec(h.unit());
    let labels = pi
        .elements()
        .map(|a| h.labels(0).iter().map(|l| format!("{l}^{}", pi.name(a))).collect())
        .collect();
    let bi = PiBialgebra::with_labels(space, coalgebras, mult, unit, labels)?;
    let blocks = pi
        .elements()
        .map(|a| twist_block(&autos[pi.inv(a)], h.antipode().block(0), &inverses[a]))
        .collect();
    Ok((HopfPiAlgebra::from_parts(bi, blocks)?, inverses))
}

/// `outer ∘ m ∘ inner` for square blocks.
pub(crate) fn twist_block(outer: &DenseMatrix, m: &DenseMatrix, inner: &DenseMatrix) -> DenseMatrix {
    outer.mul(m).mul(inner)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    fn v4_second_projection() -> GroupHom {
        let z2 = FiniteGroup::cyclic(2);
        let v4 = Arc::new(z2.direct_product(&z2));
        GroupHom::new(v4, Arc::new(z2), vec![0, 1, 0, 1]).unwrap()
    }

    #[test]
    fn z2_group_algebra_passes() {
        let h = group_algebra(q(), &GroupHom::to_trivial(Arc::new(FiniteGroup::cyclic(2))));
        assert_eq!(h.space().dims(), &[2]);
        let r = check_hopf_pi_algebra(&h);
        assert!(r.passed(), "{r}");
        assert!(check_antipode_identities(&h).passed());
    }

    #[test]
    fn v4_graded_dims_and_axioms() {
        let h = group_algebra(q(), &v4_second_projection());
        assert_eq!(h.space().dims(), &[2, 2]);
        assert!(check_hopf_pi_algebra(&h).passed());
        assert!(is_cocommutative(&h));
    }

    #[test]
    fn mutated_product_names_the_pair() {
        let h = group_algebra(q(), &GroupHom::to_trivial(Arc::new(FiniteGroup::cyclic(2))));
        let t = h.mult_tensor(0, 0).with_entry(1, 1, 0, q().zero());
        let bad = h.with_mult(0, 0, t).unwrap();
        let r = check_hopf_pi_algebra(&bad);
        assert!(!r.passed());
        let failed = r.failed_axioms();
        assert!(failed.contains(&"associativity") || failed.contains(&"left unit"), "{r}");
        assert!(r.failures().iter().any(|f| f.basis.contains(&1)));
    }

    #[test]
    fn solve_antipode_recovers_inverse() {
        let h = group_algebra(q(), &v4_second_projection());
        let s = solve_antipode(h.bialgebra()).unwrap().unwrap();
        assert_eq!(&s, h.antipode());
    }

    #[test]
    fn monoid_has_no_antipode() {
        // {1, z} with z·z = z
        let f = q();
        let g = Arc::new(FiniteGroup::trivial());
        let space = GradedSpace::new(f, g, vec![2]).unwrap();
        let mult = StructureTensor::from_bilinear(f, (2, 2, 2), |i, j| {
            basis_vector(f, 2, if i == 1 || j == 1 { 1 } else { 0 })
        });
        let bi = PiBialgebra::new(
            space,
            vec![Coalgebra::group_like(f, 2)],
            vec![mult],
            basis_vector(f, 2, 0),
        )
        .unwrap();
        assert_eq!(solve_antipode(&bi).unwrap(), None);
    }

    #[test]
    fn trivial_bialgebra_antipode_is_identity() {
        let h = group_algebra(q(), &GroupHom::to_trivial(Arc::new(FiniteGroup::trivial())));
        let s = solve_antipode(h.bialgebra()).unwrap().unwrap();
        assert!(s.block(0).is_identity());
    }

    #[test]
    fn doubled_basis_vector_is_not_a_coalgebra_map() {
        let h = group_algebra(q(), &v4_second_projection());
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let k = group_algebra(q(), &GroupHom::identity(z2));
        let blocks = vec![
            DenseMatrix::from_i64_rows(q(), &[&[2, 0]]),
            DenseMatrix::from_i64_rows(q(), &[&[1, 1]]),
        ];
        let f = GradedLinearMap::grade_preserving(h.space(), k.space(), blocks).unwrap();
        let r = check_hopf_morphism(&f, &h, &k).unwrap();
        assert!(r.failure_count("morphism comultiplicativity") > 0);
        let id = GradedLinearMap::identity(h.space());
        assert!(check_hopf_morphism(&id, &h, &h).unwrap().passed());
    }

    #[test]
    fn antipode_as_morphism_has_wrong_shift() {
        let z4 = Arc::new(FiniteGroup::cyclic(4));
        let h = group_algebra(q(), &GroupHom::identity(z4));
        let err = check_hopf_morphism(h.antipode(), &h, &h).unwrap_err();
        assert!(matches!(err, Error::Shape(_)));
    }
}
