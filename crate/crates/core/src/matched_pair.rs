//! Matched pairs `(H, K, ↼, ⇀)` of Hopf group algebras, their bicrossed
//! products, and the passage between braces and matched pairs with `K = H`.
//!
//! Grade bookkeeping: `⇀: H_α ⊗ K_γ → K_γ` and `↼: H_α ⊗ K_γ → H_α`, so
//! every condition below is read with `⇀` landing in the `K`-grade of its
//! right argument and `↼` in the `H`-grade of its left argument.

use std::sync::Arc;

use crate::action::{
    check_left_modulelike_coalgebra, check_right_modulelike_coalgebra, index_triples, ActionFamily,
    ActionSide,
};
use crate::brace::{left_action, right_action, HopfPiBrace};
use crate::error::{Error, Result};
use crate::hopf::{grade_pairs, par_reports, HopfPiAlgebra, PiBialgebra};
use crate::linalg::{axpy, kron_vectors, scale, zero_vector, DenseMatrix};
use crate::report::CheckReport;
use crate::tensor::StructureTensor;

pub const MP_ACTION_ON_PRODUCT: &str = "x⇀(ab) = (x1⇀a1)((x2↼a2)⇀b)";
pub const MP_ACTION_ON_UNIT: &str = "x⇀1 = ε(x)1";
pub const MP_PRODUCT_ACTED: &str = "(xy)↼a = (x↼(y1⇀a1))(y2↼a2)";
pub const MP_UNIT_ACTED: &str = "1↼a = ε(a)1";
pub const MP_SYMMETRY: &str = "(x1↼a1)⊗(x2⇀a2) = (x2↼a2)⊗(x1⇀a1)";
pub const MP_CIRCLE: &str = "a∘b = (a1⇀b1)∘(a2↼b2)";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPair {
    k: HopfPiAlgebra,
    h: HopfPiAlgebra,
    left: ActionFamily,
    right: ActionFamily,
}

impl MatchedPair {
    /// `k` is graded by `π₁`, `h` by `π₂`; both actions have `H` as first
    /// and `K` as second argument.
    pub fn new(k: HopfPiAlgebra, h: HopfPiAlgebra, left: ActionFamily, right: ActionFamily) -> Result<Self> {
        if k.field() != h.field() {
            return Err(Error::FieldMismatch("matched pair over different fields".into()));
        }
        if left.side() != ActionSide::Left || left.first() != h.space() || left.second() != k.space() {
            return Err(Error::Shape("⇀ must map H_α ⊗ K_γ to K_γ".into()));
        }
        if right.side() != ActionSide::Right || right.first() != h.space() || right.second() != k.space() {
            return Err(Error::Shape("↼ must map H_α ⊗ K_γ to H_α".into()));
        }
        Ok(MatchedPair { k, h, left, right })
    }

    /// Both actions trivial: `x⇀a = ε(x)a`, `x↼a = ε(a)x`.
    pub fn trivial(k: HopfPiAlgebra, h: HopfPiAlgebra) -> Result<Self> {
        let left = ActionFamily::trivial_left(h.space(), h.coalgebras(), k.space());
        let right = ActionFamily::trivial_right(h.space(), k.space(), k.coalgebras());
        Self::new(k, h, left, right)
    }

    pub fn k(&self) -> &HopfPiAlgebra {
        &self.k
    }

    pub fn h(&self) -> &HopfPiAlgebra {
        &self.h
    }

    pub fn left(&self) -> &ActionFamily {
        &self.left
    }

    pub fn right(&self) -> &ActionFamily {
        &self.right
    }

    pub fn with_left(&self, left: ActionFamily) -> Result<Self> {
        Self::new(self.k.clone(), self.h.clone(), left, self.right.clone())
    }

    pub fn with_right(&self, right: ActionFamily) -> Result<Self> {
        Self::new(self.k.clone(), self.h.clone(), self.left.clone(), right)
    }
}

/// Module-like coalgebra conditions on both sides (prefixed `K: ` and
/// `H: `) and the five compatibility conditions, on all basis tuples.
pub fn check_matched_pair(mp: &MatchedPair) -> CheckReport {
    let (k, h) = (&mp.k, &mp.h);
    let (p1, p2) = (k.group().clone(), h.group().clone());
    let f = k.field();
    let mut report = CheckReport::new();
    report.merge_prefixed(
        "K: ",
        check_left_modulelike_coalgebra(h, k, &mp.left).expect("shapes checked on construction"),
    );
    report.merge_prefixed(
        "H: ",
        check_right_modulelike_coalgebra(h, k, &mp.right).expect("shapes checked on construction"),
    );
    for name in [MP_ACTION_ON_PRODUCT, MP_ACTION_ON_UNIT, MP_PRODUCT_ACTED, MP_UNIT_ACTED, MP_SYMMETRY] {
        report.declare(name);
    }

    // x ∈ H_α, a ∈ K_γ, b ∈ K_δ
    let triples = index_triples(p2.size(), p1.size(), p1.size());
    report.merge(par_reports(&triples, |&(al, ga, de)| {
        let mut r = CheckReport::new();
        let gd = p1.mul(ga, de);
        for xi in 0..h.dim(al) {
            for ai in 0..k.dim(ga) {
                for bi in 0..k.dim(de) {
                    let left = mp.left.apply_left_basis(al, xi, gd, &k.mul_basis(ga, ai, de, bi));
                    let mut right = zero_vector(f, k.dim(gd));
                    for (x1, x2, cx) in h.coalgebra(al).terms(xi) {
                        for (a1, a2, ca) in k.coalgebra(ga).terms(ai) {
                            let u = mp.left.apply_basis(al, *x1, ga, *a1);
                            let w = mp.right.apply_basis(al, *x2, ga, *a2);
                            let v = mp.left.apply_right_basis(al, &w, de, bi);
                            axpy(&mut right, &(cx * ca), &k.mul(ga, &u, de, &v));
                        }
                    }
                    r.check(MP_ACTION_ON_PRODUCT, &[al, ga, de], &[xi, ai, bi], left, right);
                }
            }
        }
        r
    }));

    // x ∈ H_α, y ∈ H_β, a ∈ K_γ
    let triples = index_triples(p2.size(), p2.size(), p1.size());
    report.merge(par_reports(&triples, |&(al, be, ga)| {
        let mut r = CheckReport::new();
        let ab = p2.mul(al, be);
        for xi in 0..h.dim(al) {
            for yi in 0..h.dim(be) {
                for ai in 0..k.dim(ga) {
                    let left = mp.right.apply_right_basis(ab, &h.mul_basis(al, xi, be, yi), ga, ai);
                    let mut right = zero_vector(f, h.dim(ab));
                    for (y1, y2, cy) in h.coalgebra(be).terms(yi) {
                        for (a1, a2, ca) in k.coalgebra(ga).terms(ai) {
                            let moved = mp.left.apply_basis(be, *y1, ga, *a1);
                            let u = mp.right.apply_left_basis(al, xi, ga, &moved);
                            let v = mp.right.apply_basis(be, *y2, ga, *a2);
                            axpy(&mut right, &(cy * ca), &h.mul(al, &u, be, &v));
                        }
                    }
                    r.check(MP_PRODUCT_ACTED, &[al, be, ga], &[xi, yi, ai], left, right);
                }
            }
        }
        r
    }));

    let (e1, e2) = (p1.identity(), p2.identity());
    for al in p2.elements() {
        for xi in 0..h.dim(al) {
            let v = mp.left.apply_left_basis(al, xi, e1, k.unit());
            let rhs = scale(h.coalgebra(al).eps_basis(xi), k.unit());
            report.check(MP_ACTION_ON_UNIT, &[al, e1], &[xi], v, rhs);
        }
    }
    for ga in p1.elements() {
        for ai in 0..k.dim(ga) {
            let v = mp.right.apply_right_basis(e2, h.unit(), ga, ai);
            let rhs = scale(k.coalgebra(ga).eps_basis(ai), h.unit());
            report.check(MP_UNIT_ACTED, &[e2, ga], &[ai], v, rhs);
        }
    }

    let (n1, n2) = (p1.size(), p2.size());
    let pairs: Vec<(usize, usize)> = (0..n2).flat_map(|a| (0..n1).map(move |c| (a, c))).collect();
    report.merge(par_reports(&pairs, |&(al, ga)| {
        let mut r = CheckReport::new();
        let d = h.dim(al) * k.dim(ga);
        for xi in 0..h.dim(al) {
            for ai in 0..k.dim(ga) {
                let mut left = zero_vector(f, d);
                let mut right = zero_vector(f, d);
                for (x1, x2, cx) in h.coalgebra(al).terms(xi) {
                    for (a1, a2, ca) in k.coalgebra(ga).terms(ai) {
                        let c = cx * ca;
                        let l = kron_vectors(
                            f,
                            &mp.right.apply_basis(al, *x1, ga, *a1),
                            &mp.left.apply_basis(al, *x2, ga, *a2),
                        );
                        axpy(&mut left, &c, &l);
                        let rr = kron_vectors(
                            f,
                            &mp.right.apply_basis(al, *x2, ga, *a2),
                            &mp.left.apply_basis(al, *x1, ga, *a1),
                        );
                        axpy(&mut right, &c, &rr);
                    }
                }
                r.check(MP_SYMMETRY, &[al, ga], &[xi, ai], left, right);
            }
        }
        r
    }));
    report
}

/// `K ⊗ H` over `π₁ × π₂` (`π₁` index major), component `(γ, α)` equal
/// to `K_γ ⊗ H_α` with basis `a * dim H_α + x`:
/// `(a⊗x)(b⊗y) = a(x₁⇀b₁) ⊗ (x₂↼b₂)y`, tensor coalgebra, and
/// `S(a⊗x) = (S(x₂)⇀S(a₂)) ⊗ (S(x₁)↼S(a₁))`.
pub fn bicrossed_product(mp: &MatchedPair) -> Result<HopfPiAlgebra> {
    let report = check_matched_pair(mp);
    if !report.passed() {
        return Err(Error::Precondition(format!(
            "not a matched pair: fails {}",
            report.failed_axioms().join(", ")
        )));
    }
    let (k, h) = (&mp.k, &mp.h);
    let f = k.field();
    let (p1, p2) = (k.group().clone(), h.group().clone());
    let pi = Arc::new(p1.direct_product(&p2));
    let m = p2.size();
    let split = |x: usize| (x / m, x % m);
    let dims: Vec<usize> = pi
        .elements()
        .map(|x| {
            let (c, a) = split(x);
            k.dim(c) * h.dim(a)
        })
        .collect();
    let space = crate::graded::GradedSpace::new(f, pi.clone(), dims.clone())?;
    let coalgebras = pi
        .elements()
        .map(|x| {
            let (c, a) = split(x);
            k.coalgebra(c).tensor(h.coalgebra(a))
        })
        .collect();
    let mult = grade_pairs(pi.size())
        .into_iter()
        .map(|(x, y)| {
            let ((ga, al), (de, be)) = (split(x), split(y));
            let (ha, hb) = (h.dim(al), h.dim(be));
            StructureTensor::from_bilinear(f, (dims[pi.mul(x, y)], dims[x], dims[y]), |u, v| {
                let (ai, xi) = (u / ha, u % ha);
                let (bi, yi) = (v / hb, v % hb);
                let mut out = zero_vector(f, dims[pi.mul(x, y)]);
                for (x1, x2, cx) in h.coalgebra(al).terms(xi) {
                    for (b1, b2, cb) in k.coalgebra(de).terms(bi) {
                        let kpart = k.mul_left_basis(ga, ai, de, &mp.left.apply_basis(al, *x1, de, *b1));
                        let hpart = h.mul_right_basis(al, &mp.right.apply_basis(al, *x2, de, *b2), be, yi);
                        axpy(&mut out, &(cx * cb), &kron_vectors(f, &kpart, &hpart));
                    }
                }
                out
            })
        })
        .collect();
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
    let blocks: Vec<DenseMatrix> = pi
        .elements()
        .map(|x| {
            let (ga, al) = split(x);
            let (gi, ai) = (p1.inv(ga), p2.inv(al));
            let ha = h.dim(al);
            let rows = k.dim(gi) * h.dim(ai);
            DenseMatrix::from_columns(f, rows, dims[x], |u| {
                let (a, xi) = (u / ha, u % ha);
                let mut out = zero_vector(f, rows);
                for (x1, x2, cx) in h.coalgebra(al).terms(xi) {
                    for (a1, a2, ca) in k.coalgebra(ga).terms(a) {
                        let kpart = mp.left.apply(ai, &h.s_basis(al, *x2), gi, &k.s_basis(ga, *a2));
                        let hpart = mp.right.apply(ai, &h.s_basis(al, *x1), gi, &k.s_basis(ga, *a1));
                        axpy(&mut out, &(cx * ca), &kron_vectors(f, &kpart, &hpart));
                    }
                }
                out
            })
        })
        .collect();
    HopfPiAlgebra::from_parts(bi, blocks)
}

/// `(H∘, H∘)` with `x⇀a = S(x₁)(x₂∘a)` and `x↼a = T(x₁⇀a₁)∘x₂∘a₂`.
pub fn brace_to_matched_pair(b: &HopfPiBrace) -> Result<MatchedPair> {
    if !b.group().is_abelian() {
        return Err(Error::NonAbelian("brace to matched pair".into()));
    }
    if !b.is_cocommutative() {
        return Err(Error::NotCocommutative("brace to matched pair".into()));
    }
    let left = left_action(b);
    let right = right_action(b)?;
    MatchedPair::new(b.circle().clone(), b.circle().clone(), left, right)
}

/// `a∘b = (a₁⇀b₁)∘(a₂↼b₂)` for a matched pair with `K = H`.
pub fn check_circle_identity(mp: &MatchedPair) -> Result<CheckReport> {
    if mp.k != mp.h {
        return Err(Error::Input("the circle identity needs K = H".into()));
    }
    let h = &mp.h;
    let g = h.group().clone();
    if !g.is_abelian() {
        return Err(Error::NonAbelian("circle identity of a matched pair".into()));
    }
    let f = h.field();
    let mut report = CheckReport::new();
    report.declare(MP_CIRCLE);
    report.merge(par_reports(&grade_pairs(g.size()), |&(a, b)| {
        let mut r = CheckReport::new();
        let ab = g.mul(a, b);
        for i in 0..h.dim(a) {
            for j in 0..h.dim(b) {
                let mut right = zero_vector(f, h.dim(ab));
                for (a1, a2, ca) in h.coalgebra(a).terms(i) {
                    for (b1, b2, cb) in h.coalgebra(b).terms(j) {
                        let u = mp.left.apply_basis(a, *a1, b, *b1);
                        let v = mp.right.apply_basis(a, *a2, b, *b2);
                        axpy(&mut right, &(ca * cb), &h.mul(b, &u, a, &v));
                    }
                }
                r.check(MP_CIRCLE, &[a, b], &[i, j], h.mul_basis(a, i, b, j), right);
            }
        }
        r
    }));
    Ok(report)
}

/// The brace of a matched pair with `K = H` satisfying the circle identity:
/// `∘` is the multiplication of `H`, `ab = a₁∘(T(a₂)⇀b)` and
/// `S(a) = a₁⇀T(a₂)`.
pub fn matched_pair_to_brace(mp: &MatchedPair) -> Result<HopfPiBrace> {
    let circle = check_circle_identity(mp)?;
    if !mp.h.is_cocommutative() {
        return Err(Error::NotCocommutative("matched pair to brace".into()));
    }
    let report = check_matched_pair(mp);
    if !report.passed() || !circle.passed() {
        let mut failed = report.failed_axioms();
        failed.extend(circle.failed_axioms());
        return Err(Error::Precondition(format!(
            "not a matched pair with the circle identity: fails {}",
            failed.join(", ")
        )));
    }
    let c = &mp.h;
    let g = c.group().clone();
    let f = c.field();
    let mult = grade_pairs(g.size())
        .into_iter()
        .map(|(a, b)| {
            let ab = g.mul(a, b);
            let ai = g.inv(a);
            StructureTensor::from_bilinear(f, (c.dim(ab), c.dim(a), c.dim(b)), |i, j| {
                let mut out = zero_vector(f, c.dim(ab));
                for (a1, a2, co) in c.coalgebra(a).terms(i) {
                    let moved = mp.left.apply_right_basis(ai, &c.s_basis(a, *a2), b, j);
                    axpy(&mut out, co, &c.mul_left_basis(a, *a1, b, &moved));
                }
                out
            })
        })
        .collect();
    let blocks = g
        .elements()
        .map(|a| {
            let ai = g.inv(a);
            DenseMatrix::from_columns(f, c.dim(ai), c.dim(a), |i| {
                let mut out = zero_vector(f, c.dim(ai));
                for (a1, a2, co) in c.coalgebra(a).terms(i) {
                    axpy(&mut out, co, &mp.left.apply_left_basis(a, *a1, ai, &c.s_basis(a, *a2)));
                }
                out
            })
        })
        .collect();
    let bi = PiBialgebra::with_labels(
        c.space().clone(),
        c.coalgebras().to_vec(),
        mult,
        c.unit().to_vec(),
        c.all_labels().to_vec(),
    )?;
    HopfPiBrace::new(HopfPiAlgebra::from_parts(bi, blocks)?, c.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::{check_brace, opposite_brace, trivial_brace};
    use crate::gallery::{gallery_algebra, s3_sign};
    use crate::hopf::{check_hopf_pi_algebra, tensor_product};
    use crate::scalar::Field;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn trivial_pair_gives_tensor_product() {
        let k = gallery_algebra(q(), "Z2/identity").unwrap();
        let h = gallery_algebra(q(), "Z2/identity").unwrap();
        let mp = MatchedPair::trivial(k.clone(), h.clone()).unwrap();
        assert!(check_matched_pair(&mp).passed());
        let p = bicrossed_product(&mp).unwrap();
        assert_eq!(p, tensor_product(&k, &h).unwrap());
        assert!(check_hopf_pi_algebra(&p).passed());
    }

    #[test]
    fn opposite_brace_pair_and_bicrossed_product() {
        let b = opposite_brace(&s3_sign(q())).unwrap();
        let mp = brace_to_matched_pair(&b).unwrap();
        let r = check_matched_pair(&mp);
        assert!(r.passed(), "{r}");
        assert!(check_circle_identity(&mp).unwrap().passed());
        let p = bicrossed_product(&mp).unwrap();
        assert_eq!(p.space().total_dim(), 36);
        assert!(check_hopf_pi_algebra(&p).passed());
        assert_eq!(matched_pair_to_brace(&mp).unwrap(), b);
    }

    #[test]
    fn trivial_brace_roundtrip() {
        let b = trivial_brace(&s3_sign(q()));
        let back = matched_pair_to_brace(&brace_to_matched_pair(&b).unwrap()).unwrap();
        assert_eq!(back, b);
        assert!(check_brace(&back).passed());
    }

    #[test]
    fn trivial_actions_break_circle_identity_on_s3() {
        let h = s3_sign(q());
        let mp = MatchedPair::trivial(h.clone(), h).unwrap();
        let r = check_circle_identity(&mp).unwrap();
        assert!(r.failure_count(MP_CIRCLE) > 0);
        assert!(matches!(matched_pair_to_brace(&mp), Err(Error::Precondition(_))));
    }

    #[test]
    fn corrupted_right_action_is_rejected() {
        let b = opposite_brace(&s3_sign(q())).unwrap();
        let mp = brace_to_matched_pair(&b).unwrap();
        let t = mp.right().tensor(1, 0).with_entry(0, 0, 0, q().from_i64(2));
        let bad = mp.with_right(mp.right().with_tensor(1, 0, t).unwrap()).unwrap();
        let r = check_matched_pair(&bad);
        assert!(r.failure_count(MP_PRODUCT_ACTED) > 0, "{r}");
        assert_eq!(r.failure_count(MP_SYMMETRY), 0);
        assert!(matches!(bicrossed_product(&bad), Err(Error::Precondition(_))));
    }

    #[test]
    fn different_k_and_h_rejected() {
        let k = gallery_algebra(q(), "Z2/identity").unwrap();
        let h = s3_sign(q());
        let mp = MatchedPair::trivial(k, h).unwrap();
        assert!(matches!(check_circle_identity(&mp), Err(Error::Input(_))));
    }
}
