//! Hopf π-braces: two Hopf π-algebra structures `(H, ·, S)` and
//! `(H, ∘, T)` on one coalgebra family with
//! `g∘(hℓ) = (g₁∘h) S(g₂) (g₃∘ℓ)`.

use std::sync::Arc;

use crate::action::{ActionFamily, ActionSide};
use crate::error::{Error, Result};
use crate::graded::{GradedLinearMap, GradedSpace};
use crate::group::FiniteGroup;
use crate::hopf::{
    check_hopf_morphism, check_hopf_pi_algebra, grade_pairs, grade_triples, opposite, par_reports,
    twisted_copies, HopfPiAlgebra,
};
use crate::linalg::{axpy, scale, zero_vector, DenseMatrix, Vector};
use crate::report::CheckReport;
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfPiBrace {
    dot: HopfPiAlgebra,
    circle: HopfPiAlgebra,
}

impl HopfPiBrace {
    /// Pairs two structures; they must share the graded space and the
    /// coalgebra family.
    pub fn new(dot: HopfPiAlgebra, circle: HopfPiAlgebra) -> Result<Self> {
        if dot.space() != circle.space() {
            return Err(Error::Shape("dot and circle structures live on different spaces".into()));
        }
        if dot.coalgebras() != circle.coalgebras() {
            return Err(Error::Shape("dot and circle structures have different coalgebras".into()));
        }
        Ok(HopfPiBrace { dot, circle })
    }

    pub fn dot(&self) -> &HopfPiAlgebra {
        &self.dot
    }

    pub fn circle(&self) -> &HopfPiAlgebra {
        &self.circle
    }

    pub fn space(&self) -> &GradedSpace {
        self.dot.space()
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.dot.group()
    }

    pub fn field(&self) -> Field {
        self.dot.field()
    }

    pub fn dim(&self, grade: usize) -> usize {
        self.dot.dim(grade)
    }

    pub fn is_cocommutative(&self) -> bool {
        self.dot.is_cocommutative()
    }

    pub fn with_circle(&self, circle: HopfPiAlgebra) -> Result<Self> {
        Self::new(self.dot.clone(), circle)
    }

    pub fn with_dot(&self, dot: HopfPiAlgebra) -> Result<Self> {
        Self::new(dot, self.circle.clone())
    }

    /// `g∘x` for a basis vector `g` of `H_a` and `x ∈ H_b`.
    fn circ_left(&self, a: usize, i: usize, b: usize, x: &[Scalar]) -> Vector {
        self.circle.mul_left_basis(a, i, b, x)
    }
}

/// `∘ = ·`: every Hopf π-algebra is a brace over itself.
pub fn trivial_brace(h: &HopfPiAlgebra) -> HopfPiBrace {
    HopfPiBrace::new(h.clone(), h.clone()).expect("same structure twice")
}

/// `g∘h = hg` with `T = S`, a brace when `H` is cocommutative. The grading
/// group must be abelian so that `hg` lands in `H_{αβ}`.
pub fn opposite_brace(h: &HopfPiAlgebra) -> Result<HopfPiBrace> {
    HopfPiBrace::new(h.clone(), opposite(h)?)
}

/// Both Hopf suites (prefixed `dot: ` and `circle: `), the compatibility
/// identity on all basis triples, and `1∘ = 1`.
pub fn check_brace(b: &HopfPiBrace) -> CheckReport {
    let mut report = CheckReport::new();
    report.merge_prefixed("dot: ", check_hopf_pi_algebra(&b.dot));
    report.merge_prefixed("circle: ", check_hopf_pi_algebra(&b.circle));
    report.declare("brace compatibility");
    report.merge(check_compatibility(b));
    let e = b.group().identity();
    report.check("circle unit", &[e], &[], b.circle.unit().to_vec(), b.dot.unit().to_vec());
    report
}

fn check_compatibility(b: &HopfPiBrace) -> CheckReport {
    let g = b.group().clone();
    let h = &b.dot;
    let f = b.field();
    par_reports(&grade_triples(g.size()), |&(a, bb, c)| {
        let mut r = CheckReport::new();
        let (ab, ac, bc) = (g.mul(a, bb), g.mul(a, c), g.mul(bb, c));
        let ai = g.inv(a);
        let out = g.mul(a, bc);
        for i in 0..h.dim(a) {
            let t3 = h.coalgebra(a).terms3(i);
            for j in 0..h.dim(bb) {
                for k in 0..h.dim(c) {
                    let left = b.circ_left(a, i, bc, &h.mul_basis(bb, j, c, k));
                    let mut right = zero_vector(f, h.dim(out));
                    for (p, q, s, coef) in t3 {
                        let gh = b.circle.mul_basis(a, *p, bb, j);
                        let gl = b.circle.mul_basis(a, *s, c, k);
                        let mid = h.mul(ab, &gh, ai, &h.s_basis(a, *q));
                        axpy(&mut right, coef, &h.mul(g.mul(ab, ai), &mid, ac, &gl));
                    }
                    r.check("brace compatibility", &[a, bb, c], &[i, j, k], left, right);
                }
            }
        }
        r
    })
}

/// `S_{αβ}(g₁∘h) g₂ = S_α(g₁) (g₂∘S_β(h))` on all basis pairs.
pub fn check_antipode_brace_identity(b: &HopfPiBrace) -> CheckReport {
    let g = b.group().clone();
    let h = &b.dot;
    let f = b.field();
    let mut report = CheckReport::new();
    report.declare("antipode brace identity");
    report.merge(par_reports(&grade_pairs(g.size()), |&(a, bb)| {
        let mut r = CheckReport::new();
        let ab = g.mul(a, bb);
        let (ai, bi, abi) = (g.inv(a), g.inv(bb), g.inv(ab));
        let out = g.inv(bb);
        for i in 0..h.dim(a) {
            for j in 0..h.dim(bb) {
                let sh = h.s_basis(bb, j);
                let mut left = zero_vector(f, h.dim(out));
                let mut right = zero_vector(f, h.dim(out));
                for (p, q, c) in h.coalgebra(a).terms(i) {
                    let s = h.s(ab, &b.circle.mul_basis(a, *p, bb, j));
                    axpy(&mut left, c, &h.mul_right_basis(abi, &s, a, *q));
                    let gs = b.circ_left(a, *q, bi, &sh);
                    axpy(&mut right, c, &h.mul(ai, &h.s_basis(a, *p), g.mul(a, bi), &gs));
                }
                r.check("antipode brace identity", &[a, bb], &[i, j], left, right);
            }
        }
        r
    }));
    report
}

/// `g ⇀ h = S(g₁)(g₂∘h)`, landing in the grade of `h`.
pub fn left_action(b: &HopfPiBrace) -> ActionFamily {
    let g = b.group().clone();
    let h = &b.dot;
    let f = b.field();
    ActionFamily::from_fn(ActionSide::Left, b.space(), b.space(), |a, i, bb, j| {
        let ai = g.inv(a);
        let mut out = zero_vector(f, h.dim(bb));
        for (p, q, c) in h.coalgebra(a).terms(i) {
            let gh = b.circle.mul_basis(a, *q, bb, j);
            axpy(&mut out, c, &h.mul(ai, &h.s_basis(a, *p), g.mul(a, bb), &gh));
        }
        out
    })
    .expect("left action shapes")
}

/// `a ↼ x = T(a₁⇀x₁) ∘ a₂ ∘ x₂`, landing in the grade of `a`. Needs an
/// abelian grading group.
pub fn right_action(b: &HopfPiBrace) -> Result<ActionFamily> {
    let g = b.group().clone();
    if !g.is_abelian() {
        return Err(Error::NonAbelian("right action".into()));
    }
    let left = left_action(b);
    Ok(right_action_from(b, &left))
}

fn right_action_from(b: &HopfPiBrace, left: &ActionFamily) -> ActionFamily {
    let g = b.group().clone();
    let c = &b.circle;
    let f = b.field();
    ActionFamily::from_fn(ActionSide::Right, b.space(), b.space(), |a, i, bb, j| {
        let bi = g.inv(bb);
        let mut out = zero_vector(f, c.dim(a));
        for (i1, i2, ci) in c.coalgebra(a).terms(i) {
            for (j1, j2, cj) in c.coalgebra(bb).terms(j) {
                let t = c.s(bb, &left.apply_basis(a, *i1, bb, *j1));
                let ta = c.mul_right_basis(bi, &t, a, *i2);
                let v = c.mul_right_basis(g.mul(bi, a), &ta, bb, *j2);
                axpy(&mut out, &(ci * cj), &v);
            }
        }
        out
    })
    .expect("right action shapes")
}

/// The action laws of a brace: `⇀` is a module-like algebra action,
/// both multiplications are recovered from it, and, when cocommutative,
/// `⇀` respects the coalgebra and antipode; `↼` is checked as a right
/// module-like coalgebra action when the grading group is also abelian.
pub fn check_module_properties(b: &HopfPiBrace) -> CheckReport {
    let g = b.group().clone();
    let (h, c) = (&b.dot, &b.circle);
    let f = b.field();
    let e = g.identity();
    let act = left_action(b);
    let mut report = CheckReport::new();
    for name in [
        "left action associativity",
        "left action unit",
        "left action on unit",
        "left action on products",
        "circle from action",
        "dot from action",
    ] {
        report.declare(name);
    }
    report.merge(par_reports(&grade_triples(g.size()), |&(a, bb, cc)| {
        let mut r = CheckReport::new();
        let (ab, bc) = (g.mul(a, bb), g.mul(bb, cc));
        for i in 0..h.dim(a) {
            for j in 0..h.dim(bb) {
                let gh = c.mul_basis(a, i, bb, j);
                for k in 0..h.dim(cc) {
                    let left = act.apply_right_basis(ab, &gh, cc, k);
                    let right = act.apply_left_basis(a, i, cc, &act.apply_basis(bb, j, cc, k));
                    r.check("left action associativity", &[a, bb, cc], &[i, j, k], left, right);

                    let left = act.apply_left_basis(a, i, bc, &h.mul_basis(bb, j, cc, k));
                    let mut right = zero_vector(f, h.dim(bc));
                    for (p, q, co) in h.coalgebra(a).terms(i) {
                        let x = act.apply_basis(a, *p, bb, j);
                        let y = act.apply_basis(a, *q, cc, k);
                        axpy(&mut right, co, &h.mul(bb, &x, cc, &y));
                    }
                    r.check("left action on products", &[a, bb, cc], &[i, j, k], left, right);
                }
            }
        }
        r
    }));
    report.merge(par_reports(&grade_pairs(g.size()), |&(a, bb)| {
        let mut r = CheckReport::new();
        let ab = g.mul(a, bb);
        let ai = g.inv(a);
        for i in 0..h.dim(a) {
            for j in 0..h.dim(bb) {
                let mut circ = zero_vector(f, h.dim(ab));
                let mut dot = zero_vector(f, h.dim(ab));
                for (p, q, co) in h.coalgebra(a).terms(i) {
                    axpy(&mut circ, co, &h.mul_left_basis(a, *p, bb, &act.apply_basis(a, *q, bb, j)));
                    let tq = c.s_basis(a, *q);
                    let moved = act.apply_right_basis(ai, &tq, bb, j);
                    axpy(&mut dot, co, &c.mul_left_basis(a, *p, bb, &moved));
                }
                r.check("circle from action", &[a, bb], &[i, j], c.mul_basis(a, i, bb, j), circ);
                r.check("dot from action", &[a, bb], &[i, j], h.mul_basis(a, i, bb, j), dot);
            }
        }
        r
    }));
    for bb in g.elements() {
        for j in 0..h.dim(bb) {
            let v = act.apply_right_basis(e, h.unit(), bb, j);
            report.check("left action unit", &[e, bb], &[j], v, h.basis(bb, j));
        }
    }
    for a in g.elements() {
        for i in 0..h.dim(a) {
            let v = act.apply_left_basis(a, i, e, h.unit());
            let rhs = scale(h.coalgebra(a).eps_basis(i), h.unit());
            report.check("left action on unit", &[a, e], &[i], v, rhs);
        }
    }

    if !b.is_cocommutative() {
        report.note("coalgebra and antipode laws of the actions not checked: not cocommutative");
        return report;
    }
    act.check_coalgebra_compat(
        &mut report,
        "left action comultiplicativity",
        "left action counit",
        h.coalgebras(),
        h.coalgebras(),
    );
    report.declare("left action commutes with antipode");
    report.merge(par_reports(&grade_pairs(g.size()), |&(a, bb)| {
        let mut r = CheckReport::new();
        let bi = g.inv(bb);
        for i in 0..h.dim(a) {
            for j in 0..h.dim(bb) {
                let left = h.s(bb, &act.apply_basis(a, i, bb, j));
                let right = act.apply_left_basis(a, i, bi, &h.s_basis(bb, j));
                r.check("left action commutes with antipode", &[a, bb], &[i, j], left, right);
            }
        }
        r
    }));

    if !g.is_abelian() {
        report.note("right action not checked: grading group is not abelian");
        return report;
    }
    let right = right_action_from(b, &act);
    for name in ["right action associativity", "right action unit"] {
        report.declare(name);
    }
    report.merge(par_reports(&grade_triples(g.size()), |&(a, x, y)| {
        let mut r = CheckReport::new();
        let xy = g.mul(x, y);
        for i in 0..h.dim(a) {
            for j in 0..h.dim(x) {
                let ax = right.apply_basis(a, i, x, j);
                for k in 0..h.dim(y) {
                    let left = right.apply_right_basis(a, &ax, y, k);
                    let rhs = right.apply_left_basis(a, i, xy, &c.mul_basis(x, j, y, k));
                    r.check("right action associativity", &[a, x, y], &[i, j, k], left, rhs);
                }
            }
        }
        r
    }));
    for a in g.elements() {
        for i in 0..h.dim(a) {
            let v = right.apply_left_basis(a, i, e, c.unit());
            report.check("right action unit", &[a, e], &[i], v, h.basis(a, i));
        }
    }
    right.check_coalgebra_compat(
        &mut report,
        "right action comultiplicativity",
        "right action counit",
        h.coalgebras(),
        h.coalgebras(),
    );
    report
}

/// Copies `H_α = H` of a brace over the trivial group indexed by a group of
/// brace automorphisms, in the coordinates `h^α = α(h)`. Each matrix must be
/// an automorphism of both structures.
pub fn aut_indexed_brace(
    hb: &HopfPiBrace,
    autos: &[DenseMatrix],
    pi: Arc<FiniteGroup>,
) -> Result<HopfPiBrace> {
    check_automorphisms(&[hb.dot(), hb.circle()], autos)?;
    let (dot, _) = twisted_copies(hb.dot(), autos, pi.clone())?;
    let (circle, _) = twisted_copies(hb.circle(), autos, pi)?;
    HopfPiBrace::new(dot, circle)
}

/// Rejects with an input error unless every matrix is a Hopf automorphism
/// of every given structure over the trivial group.
pub fn check_automorphisms(structures: &[&HopfPiAlgebra], autos: &[DenseMatrix]) -> Result<()> {
    for h in structures {
        if !h.group().is_trivial() {
            return Err(Error::Input("automorphism indexing needs a structure over the trivial group".into()));
        }
        let d = h.dim(0);
        for (n, phi) in autos.iter().enumerate() {
            if (phi.rows(), phi.cols()) != (d, d) {
                return Err(Error::Input(format!("automorphism {n} is not {d}x{d}")));
            }
            let map = GradedLinearMap::grade_preserving(h.space(), h.space(), vec![phi.clone()])?;
            let report = check_hopf_morphism(&map, h, h)?;
            if !report.passed() {
                return Err(Error::Input(format!(
                    "matrix {n} is not a Hopf automorphism: fails {}",
                    report.failed_axioms().join(", ")
                )));
            }
        }
    }
    Ok(())
}
