//! Graded action families `H_α ⊗ K_β → ·` and the module-like axiom checks
//! shared by braces, matched pairs, smash products and post-Hopf structures.

use crate::coalgebra::Coalgebra;
use crate::error::{Error, Result};
use crate::graded::GradedSpace;
use crate::hopf::{par_reports, HopfPiAlgebra};
use crate::linalg::{axpy, basis_vector, kron_vectors, scale, zero_vector, Vector};
use crate::report::CheckReport;
use crate::scalar::Scalar;
use crate::tensor::StructureTensor;

/// Which argument's grade and space the action lands in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ActionSide {
    /// `x ⇀ y` lands in the grade of `y`.
    Left,
    /// `x ↼ y` lands in the grade of `x`.
    Right,
}

/// A family of bilinear maps indexed by pairs of grades of two graded
/// spaces, stored at `a * |second grades| + b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionFamily {
    side: ActionSide,
    first: GradedSpace,
    second: GradedSpace,
    tensors: Vec<StructureTensor>,
}

impl ActionFamily {
    pub fn new(
        side: ActionSide,
        first: GradedSpace,
        second: GradedSpace,
        tensors: Vec<StructureTensor>,
    ) -> Result<Self> {
        let (n1, n2) = (first.group().size(), second.group().size());
        if first.field() != second.field() {
            return Err(Error::FieldMismatch("action between spaces over different fields".into()));
        }
        if tensors.len() != n1 * n2 {
            return Err(Error::Shape(format!(
                "{} action blocks, expected {}",
                tensors.len(),
                n1 * n2
            )));
        }
        for a in 0..n1 {
            for b in 0..n2 {
                let out = match side {
                    ActionSide::Left => second.dim(b),
                    ActionSide::Right => first.dim(a),
                };
                let want = (out, first.dim(a), second.dim(b));
                let t = &tensors[a * n2 + b];
                if t.shape() != want {
                    return Err(Error::Shape(format!(
                        "action block ({}, {}) has shape {:?}, expected {want:?}",
                        first.group().name(a),
                        second.group().name(b),
                        t.shape()
                    )));
                }
                if t.field() != first.field() {
                    return Err(Error::FieldMismatch("action block field".into()));
                }
            }
        }
        Ok(ActionFamily {
            side,
            first,
            second,
            tensors,
        })
    }

    /// Builds each block from its values on basis pairs.
    pub fn from_fn(
        side: ActionSide,
        first: &GradedSpace,
        second: &GradedSpace,
        f: impl Fn(usize, usize, usize, usize) -> Vector,
    ) -> Result<Self> {
        let field = first.field();
        let mut tensors = Vec::new();
        for a in first.grades() {
            for b in second.grades() {
                let out = match side {
                    ActionSide::Left => second.dim(b),
                    ActionSide::Right => first.dim(a),
                };
                tensors.push(StructureTensor::from_bilinear(
                    field,
                    (out, first.dim(a), second.dim(b)),
                    |i, j| f(a, i, b, j),
                ));
            }
        }
        Self::new(side, first.clone(), second.clone(), tensors)
    }

    /// `x ⇀ y = ε(x) y` for `x` in the first space.
    pub fn trivial_left(first: &GradedSpace, first_coalgebras: &[Coalgebra], second: &GradedSpace) -> Self {
        let field = first.field();
        Self::from_fn(ActionSide::Left, first, second, |a, i, b, j| {
            let mut v = basis_vector(field, second.dim(b), j);
            let e = first_coalgebras[a].eps_basis(i);
            for s in &mut v {
                *s = &*s * e;
            }
            v
        })
        .expect("trivial action shapes")
    }

    /// `x ↼ y = ε(y) x` for `y` in the second space.
    pub fn trivial_right(first: &GradedSpace, second: &GradedSpace, second_coalgebras: &[Coalgebra]) -> Self {
        let field = first.field();
        Self::from_fn(ActionSide::Right, first, second, |a, i, b, j| {
            let mut v = basis_vector(field, first.dim(a), i);
            let e = second_coalgebras[b].eps_basis(j);
            for s in &mut v {
                *s = &*s * e;
            }
            v
        })
        .expect("trivial action shapes")
    }

    pub fn side(&self) -> ActionSide {
        self.side
    }

    pub fn first(&self) -> &GradedSpace {
        &self.first
    }

    pub fn second(&self) -> &GradedSpace {
        &self.second
    }

    pub fn tensors(&self) -> &[StructureTensor] {
        &self.tensors
    }

    pub fn tensor(&self, a: usize, b: usize) -> &StructureTensor {
        &self.tensors[a * self.second.group().size() + b]
    }

    pub fn output_grade(&self, a: usize, b: usize) -> usize {
        match self.side {
            ActionSide::Left => b,
            ActionSide::Right => a,
        }
    }

    pub fn apply(&self, a: usize, x: &[Scalar], b: usize, y: &[Scalar]) -> Vector {
        self.tensor(a, b).apply(x, y)
    }

    pub fn apply_basis(&self, a: usize, i: usize, b: usize, j: usize) -> Vector {
        self.tensor(a, b).apply_basis(i, j)
    }

    pub fn apply_left_basis(&self, a: usize, i: usize, b: usize, y: &[Scalar]) -> Vector {
        self.tensor(a, b).apply_left_basis(i, y)
    }

    pub fn apply_right_basis(&self, a: usize, x: &[Scalar], b: usize, j: usize) -> Vector {
        self.tensor(a, b).apply_right_basis(x, j)
    }

    pub fn with_tensor(&self, a: usize, b: usize, tensor: StructureTensor) -> Result<Self> {
        let mut tensors = self.tensors.clone();
        tensors[a * self.second.group().size() + b] = tensor;
        Self::new(self.side, self.first.clone(), self.second.clone(), tensors)
    }

    /// Checks `Δ(x·y) = (x₁·y₁) ⊗ (x₂·y₂)` and `ε(x·y) = ε(x)ε(y)` where `·`
    /// is this action.
    pub fn check_coalgebra_compat(
        &self,
        report: &mut CheckReport,
        comult_axiom: &str,
        counit_axiom: &str,
        first: &[Coalgebra],
        second: &[Coalgebra],
    ) {
        report.declare(comult_axiom);
        report.declare(counit_axiom);
        let field = self.first.field();
        let pairs = grade_pairs_of(self);
        report.merge(par_reports(&pairs, |&(a, b)| {
            let mut r = CheckReport::new();
            let out = self.output_grade(a, b);
            let target = match self.side {
                ActionSide::Left => &second[out],
                ActionSide::Right => &first[out],
            };
            for i in 0..self.first.dim(a) {
                for j in 0..self.second.dim(b) {
                    let v = self.apply_basis(a, i, b, j);
                    let d = target.dim();
                    let mut rhs = zero_vector(field, d * d);
                    for (i1, i2, c) in first[a].terms(i) {
                        for (j1, j2, e) in second[b].terms(j) {
                            let t = kron_vectors(
                                field,
                                &self.apply_basis(a, *i1, b, *j1),
                                &self.apply_basis(a, *i2, b, *j2),
                            );
                            axpy(&mut rhs, &(c * e), &t);
                        }
                    }
                    r.check(comult_axiom, &[a, b], &[i, j], target.comult(&v), rhs);
                    r.check(
                        counit_axiom,
                        &[a, b],
                        &[i, j],
                        vec![target.eps(&v)],
                        vec![first[a].eps_basis(i) * second[b].eps_basis(j)],
                    );
                }
            }
            r
        }));
    }
}

pub(crate) fn index_triples(n1: usize, n2: usize, n3: usize) -> Vec<(usize, usize, usize)> {
    (0..n1)
        .flat_map(|a| (0..n2).flat_map(move |b| (0..n3).map(move |c| (a, b, c))))
        .collect()
}

fn grade_pairs_of(act: &ActionFamily) -> Vec<(usize, usize)> {
    let (n1, n2) = (act.first.group().size(), act.second.group().size());
    (0..n1).flat_map(|a| (0..n2).map(move |b| (a, b))).collect()
}

fn expect_left(act: &ActionFamily, acting: &HopfPiAlgebra, target: &HopfPiAlgebra) -> Result<()> {
    if act.side != ActionSide::Left || act.first != *acting.space() || act.second != *target.space() {
        return Err(Error::Shape("left action does not match the acting and target algebras".into()));
    }
    Ok(())
}

fn expect_right(act: &ActionFamily, target: &HopfPiAlgebra, acting: &HopfPiAlgebra) -> Result<()> {
    if act.side != ActionSide::Right || act.first != *target.space() || act.second != *acting.space() {
        return Err(Error::Shape("right action does not match the target and acting algebras".into()));
    }
    Ok(())
}

/// `target` as a left module-like coalgebra over `acting`:
/// `(kℓ)⇀m = k⇀(ℓ⇀m)`, `1⇀m = m`, and `⇀` is a coalgebra map.
pub fn check_left_modulelike_coalgebra(
    acting: &HopfPiAlgebra,
    target: &HopfPiAlgebra,
    act: &ActionFamily,
) -> Result<CheckReport> {
    expect_left(act, acting, target)?;
    let k = acting.group().clone();
    let g = target.group().clone();
    let mut report = CheckReport::new();
    report.declare("module associativity");
    report.declare("module unit");
    let triples = index_triples(k.size(), k.size(), g.size());
    report.merge(par_reports(&triples, |&(a, b, c)| {
        let mut r = CheckReport::new();
        let ab = k.mul(a, b);
        for i in 0..acting.dim(a) {
            for j in 0..acting.dim(b) {
                let kl = acting.mul_basis(a, i, b, j);
                for m in 0..target.dim(c) {
                    let left = act.apply_right_basis(ab, &kl, c, m);
                    let right = act.apply_left_basis(a, i, c, &act.apply_basis(b, j, c, m));
                    r.check("module associativity", &[a, b, c], &[i, j, m], left, right);
                }
            }
        }
        r
    }));
    let e = k.identity();
    for c in g.elements() {
        for m in 0..target.dim(c) {
            let v = act.apply_right_basis(e, acting.unit(), c, m);
            report.check("module unit", &[e, c], &[m], v, target.basis(c, m));
        }
    }
    act.check_coalgebra_compat(
        &mut report,
        "action comultiplicativity",
        "action counit",
        acting.coalgebras(),
        target.coalgebras(),
    );
    Ok(report)
}

/// `target` as a left module-like bialgebra over `acting`: the coalgebra
/// conditions plus `k⇀(hg) = (k₁⇀h)(k₂⇀g)` and `k⇀1 = ε(k)1`.
pub fn check_left_modulelike_bialgebra(
    acting: &HopfPiAlgebra,
    target: &HopfPiAlgebra,
    act: &ActionFamily,
) -> Result<CheckReport> {
    let mut report = check_left_modulelike_coalgebra(acting, target, act)?;
    let k = acting.group().clone();
    let g = target.group().clone();
    let field = target.field();
    report.declare("action on products");
    report.declare("action on unit");
    let triples = index_triples(k.size(), g.size(), g.size());
    report.merge(par_reports(&triples, |&(a, c, d)| {
        let mut r = CheckReport::new();
        let cd = g.mul(c, d);
        for i in 0..acting.dim(a) {
            for p in 0..target.dim(c) {
                for q in 0..target.dim(d) {
                    let left = act.apply_left_basis(a, i, cd, &target.mul_basis(c, p, d, q));
                    let mut right = zero_vector(field, target.dim(cd));
                    for (i1, i2, co) in acting.coalgebra(a).terms(i) {
                        let x = act.apply_basis(a, *i1, c, p);
                        let y = act.apply_basis(a, *i2, d, q);
                        axpy(&mut right, co, &target.mul(c, &x, d, &y));
                    }
                    r.check("action on products", &[a, c, d], &[i, p, q], left, right);
                }
            }
        }
        r
    }));
    let e = g.identity();
    for a in k.elements() {
        for i in 0..acting.dim(a) {
            let v = act.apply_left_basis(a, i, e, target.unit());
            let rhs = scale(acting.coalgebra(a).eps_basis(i), target.unit());
            report.check("action on unit", &[a, e], &[i], v, rhs);
        }
    }
    Ok(report)
}

/// `target` as a right module-like coalgebra over `acting`:
/// `(x↼a)↼b = x↼(ab)`, `x↼1 = x`, and `↼` is a coalgebra map.
pub fn check_right_modulelike_coalgebra(
    target: &HopfPiAlgebra,
    acting: &HopfPiAlgebra,
    act: &ActionFamily,
) -> Result<CheckReport> {
    expect_right(act, target, acting)?;
    let k = acting.group().clone();
    let g = target.group().clone();
    let mut report = CheckReport::new();
    report.declare("right module associativity");
    report.declare("right module unit");
    let triples = index_triples(g.size(), k.size(), k.size());
    report.merge(par_reports(&triples, |&(c, a, b)| {
        let mut r = CheckReport::new();
        let ab = k.mul(a, b);
        for m in 0..target.dim(c) {
            for i in 0..acting.dim(a) {
                let xa = act.apply_basis(c, m, a, i);
                for j in 0..acting.dim(b) {
                    let left = act.apply_right_basis(c, &xa, b, j);
                    let right = act.apply_left_basis(c, m, ab, &acting.mul_basis(a, i, b, j));
                    r.check("right module associativity", &[c, a, b], &[m, i, j], left, right);
                }
            }
        }
        r
    }));
    let e = k.identity();
    for c in g.elements() {
        for m in 0..target.dim(c) {
            let v = act.apply_left_basis(c, m, e, acting.unit());
            report.check("right module unit", &[c, e], &[m], v, target.basis(c, m));
        }
    }
    act.check_coalgebra_compat(
        &mut report,
        "right action comultiplicativity",
        "right action counit",
        target.coalgebras(),
        acting.coalgebras(),
    );
    Ok(report)
}
