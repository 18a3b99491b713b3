//! Post-Hopf π-algebras `(H, ▷)`: the axiom checks, the convolution
//! inverse `ψ` of `θ_x = x▷·`, the subadjacent Hopf π-algebra and the
//! correspondence with cocommutative braces.

use crate::action::{check_left_modulelike_bialgebra, index_triples, ActionFamily, ActionSide};
use crate::brace::{check_brace, left_action, HopfPiBrace};
use crate::coalgebra::{convolution_inverse, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::hopf::{
    check_antipode_identities, check_hopf_pi_algebra, grade_pairs, identity_component, par_reports,
    HopfPiAlgebra, PiBialgebra,
};
use crate::linalg::{axpy, scale, zero_vector, DenseMatrix};
use crate::report::CheckReport;
use crate::smash::smash_brace_modlike;
use crate::tensor::StructureTensor;

pub const P_COMULT: &str = "▷ comultiplicativity";
pub const P_COUNIT: &str = "▷ counit";
pub const P_DISTRIBUTIVE: &str = "x▷(yz) = (x1▷y)(x2▷z)";
pub const P_TWISTED_ASSOC: &str = "x▷(y▷z) = (x1(x2▷y))▷z";
pub const P_CONVOLUTION: &str = "convolution invertibility";
pub const P_ON_UNIT: &str = "x▷1 = ε(x)1";
pub const P_UNIT_ACTS: &str = "1▷x = x";
pub const P_ANTIPODE: &str = "S(x▷y) = x▷S(y)";
pub const P_THETA_UNIT: &str = "θ(1) = id";
pub const P_PSI_UNIQUE: &str = "ψ uniqueness";

/// A Hopf π-algebra with a validated `▷` and its solved `ψ`.
///
/// `psi[α * n + β]` has entry `(i, j, k)` equal to the coefficient of
/// `e_i` in `ψ_{α,β}(e_j)(e_k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PostHopfStructure {
    base: HopfPiAlgebra,
    triangle: ActionFamily,
    psi: Vec<StructureTensor>,
}

impl PostHopfStructure {
    /// Validates `▷` and solves `ψ`; any failed axiom is a precondition error.
    pub fn new(base: HopfPiAlgebra, triangle: ActionFamily) -> Result<Self> {
        let (report, p) = check_post_hopf(&base, &triangle)?;
        p.ok_or_else(|| {
            Error::Precondition(format!(
                "not a post-Hopf π-algebra: fails {}",
                report.failed_axioms().join(", ")
            ))
        })
    }

    pub fn base(&self) -> &HopfPiAlgebra {
        &self.base
    }

    pub fn triangle(&self) -> &ActionFamily {
        &self.triangle
    }

    pub fn psi(&self) -> &[StructureTensor] {
        &self.psi
    }

    /// `ψ_{α,β}(e_i)` as a matrix on `H_β`.
    pub fn psi_at(&self, a: usize, b: usize, i: usize) -> DenseMatrix {
        let n = self.base.group().size();
        slice_operator(&self.psi[a * n + b], i)
    }

    /// `θ_{α,β}(e_i) = e_i ▷ ·` as a matrix on `H_β`.
    pub fn theta_at(&self, a: usize, b: usize, i: usize) -> DenseMatrix {
        slice_operator(self.triangle.tensor(a, b), i)
    }

    pub fn is_cocommutative(&self) -> bool {
        self.base.is_cocommutative()
    }
}

fn slice_operator(t: &StructureTensor, i: usize) -> DenseMatrix {
    let (d, _, _) = t.shape();
    DenseMatrix::from_columns(t.field(), d, d, |s| t.apply_basis(i, s))
}

/// `θ_{α,β}: H_α → End(H_β)` with columns the flattened operators
/// (`E_rs` at `r * d + s`).
fn theta_matrix(triangle: &ActionFamily, a: usize, b: usize) -> DenseMatrix {
    let t = triangle.tensor(a, b);
    let (d, da, _) = t.shape();
    DenseMatrix::from_columns(t.field(), d * d, da, |i| {
        let mut out = zero_vector(t.field(), d * d);
        for s in 0..d {
            for (r, v) in t.apply_basis(i, s).into_iter().enumerate() {
                out[r * d + s] = v;
            }
        }
        out
    })
}

fn psi_tensor(g: &DenseMatrix, d: usize, da: usize) -> StructureTensor {
    StructureTensor::from_bilinear(g.field(), (d, da, d), |j, s| {
        (0..d).map(|r| g.get(r * d + s, j).clone()).collect()
    })
}

fn solve_psi(base: &HopfPiAlgebra, triangle: &ActionFamily, a: usize, b: usize) -> Result<Option<StructureTensor>> {
    let f = base.field();
    let d = base.dim(b);
    let end = FiniteAlgebra::matrix_algebra(f, d);
    let g = convolution_inverse(base.coalgebra(a), &end, &theta_matrix(triangle, a, b))?;
    Ok(g.map(|g| psi_tensor(&g, d, base.dim(a))))
}

fn expect_triangle(base: &HopfPiAlgebra, triangle: &ActionFamily) -> Result<()> {
    if triangle.side() != ActionSide::Left || triangle.first() != base.space() || triangle.second() != base.space() {
        return Err(Error::Shape("▷ must map H_α ⊗ H_β to H_β".into()));
    }
    Ok(())
}

/// Checks that `▷` is a family of coalgebra maps satisfying the
/// distributive and twisted associative laws, and solves for the
/// convolution inverse `ψ` of `θ` on every `(α, β)`. Returns the structure
/// when everything passes.
pub fn check_post_hopf(
    base: &HopfPiAlgebra,
    triangle: &ActionFamily,
) -> Result<(CheckReport, Option<PostHopfStructure>)> {
    expect_triangle(base, triangle)?;
    let g = base.group().clone();
    let n = g.size();
    let f = base.field();
    let mut report = CheckReport::new();
    triangle.check_coalgebra_compat(&mut report, P_COMULT, P_COUNIT, base.coalgebras(), base.coalgebras());
    report.declare(P_DISTRIBUTIVE);
    report.declare(P_TWISTED_ASSOC);
    report.declare(P_CONVOLUTION);

    let triples = index_triples(n, n, n);
    report.merge(par_reports(&triples, |&(a, b, c)| {
        let mut r = CheckReport::new();
        let bc = g.mul(b, c);
        let ab = g.mul(a, b);
        for i in 0..base.dim(a) {
            let terms = base.coalgebra(a).terms(i);
            for j in 0..base.dim(b) {
                for k in 0..base.dim(c) {
                    let left = triangle.apply_left_basis(a, i, bc, &base.mul_basis(b, j, c, k));
                    let mut right = zero_vector(f, base.dim(bc));
                    for (i1, i2, co) in terms {
                        let y = triangle.apply_basis(a, *i1, b, j);
                        let z = triangle.apply_basis(a, *i2, c, k);
                        axpy(&mut right, co, &base.mul(b, &y, c, &z));
                    }
                    r.check(P_DISTRIBUTIVE, &[a, b, c], &[i, j, k], left, right);

                    let inner = triangle.apply_basis(b, j, c, k);
                    let left = triangle.apply_left_basis(a, i, c, &inner);
                    let mut xy = zero_vector(f, base.dim(ab));
                    for (i1, i2, co) in terms {
                        let moved = triangle.apply_basis(a, *i2, b, j);
                        axpy(&mut xy, co, &base.mul_left_basis(a, *i1, b, &moved));
                    }
                    let right = triangle.apply_right_basis(ab, &xy, c, k);
                    r.check(P_TWISTED_ASSOC, &[a, b, c], &[i, j, k], left, right);
                }
            }
        }
        r
    }));

    let solved: Vec<Result<Option<StructureTensor>>> = {
        use rayon::prelude::*;
        grade_pairs(n).into_par_iter().map(|(a, b)| solve_psi(base, triangle, a, b)).collect()
    };
    let mut psi = Vec::with_capacity(n * n);
    for ((a, b), s) in grade_pairs(n).into_iter().zip(solved) {
        let ok = match s {
            Ok(Some(t)) => {
                psi.push(t);
                true
            }
            Ok(None) => false,
            Err(Error::OneSidedInverse(_)) => false,
            Err(e) => return Err(e),
        };
        if !report.check_flag(P_CONVOLUTION, &[a, b], &[], ok) {
            report.note(format!("not convolution invertible at ({}, {})", g.name(a), g.name(b)));
        }
    }
    let structure = report.passed().then(|| PostHopfStructure {
        base: base.clone(),
        triangle: triangle.clone(),
        psi,
    });
    Ok((report, structure))
}

/// The consequences `x▷1 = ε(x)1`, `1▷x = x`, `S(x▷y) = x▷S(y)` and
/// `θ_{e,α}(1) = id`. Needs no `ψ`, so it runs on any candidate `▷`.
pub fn check_post_hopf_consequences(h: &HopfPiAlgebra, tri: &ActionFamily) -> Result<CheckReport> {
    expect_triangle(h, tri)?;
    let g = h.group().clone();
    let e = g.identity();
    let mut report = CheckReport::new();
    for name in [P_ON_UNIT, P_UNIT_ACTS, P_ANTIPODE, P_THETA_UNIT] {
        report.declare(name);
    }
    for a in g.elements() {
        for i in 0..h.dim(a) {
            let v = tri.apply_left_basis(a, i, e, h.unit());
            report.check(P_ON_UNIT, &[a, e], &[i], v, scale(h.coalgebra(a).eps_basis(i), h.unit()));
        }
        for j in 0..h.dim(a) {
            let v = tri.apply_right_basis(e, h.unit(), a, j);
            report.check(P_UNIT_ACTS, &[e, a], &[j], v, h.basis(a, j));
        }
        let theta = tri.tensor(e, a);
        let op = DenseMatrix::from_columns(h.field(), h.dim(a), h.dim(a), |s| theta.apply_right_basis(h.unit(), s));
        report.check_flag(P_THETA_UNIT, &[e, a], &[], op.is_identity());
    }
    report.merge(par_reports(&grade_pairs(g.size()), |&(a, b)| {
        let mut r = CheckReport::new();
        let bi = g.inv(b);
        for i in 0..h.dim(a) {
            for j in 0..h.dim(b) {
                let left = h.s(b, &tri.apply_basis(a, i, b, j));
                let right = tri.apply_left_basis(a, i, bi, &h.s_basis(b, j));
                r.check(P_ANTIPODE, &[a, b], &[i, j], left, right);
            }
        }
        r
    }));
    Ok(report)
}

/// [`check_post_hopf_consequences`] plus the check that re-solving gives
/// the cached `ψ`.
pub fn check_post_hopf_derived(p: &PostHopfStructure) -> Result<CheckReport> {
    let mut report = check_post_hopf_consequences(&p.base, &p.triangle)?;
    let n = p.base.group().size();
    report.declare(P_PSI_UNIQUE);
    report.merge(par_reports(&grade_pairs(n), |&(a, b)| {
        let mut r = CheckReport::new();
        let again = solve_psi(&p.base, &p.triangle, a, b).ok().flatten();
        r.check_flag(P_PSI_UNIQUE, &[a, b], &[], again.as_ref() == Some(&p.psi[a * n + b]));
        r
    }));
    Ok(report)
}

fn require_cocommutative(p: &PostHopfStructure, what: &str) -> Result<()> {
    if !p.is_cocommutative() {
        return Err(Error::NotCocommutative(what.into()));
    }
    Ok(())
}

/// `x * y = x₁(x₂▷y)` with antipode `T(x) = ψ_{α,ᾱ}(x₁)(S(x₂))`.
pub fn subadjacent(p: &PostHopfStructure) -> Result<HopfPiAlgebra> {
    require_cocommutative(p, "subadjacent Hopf π-algebra")?;
    let h = &p.base;
    let g = h.group().clone();
    let n = g.size();
    let f = h.field();
    let tri = &p.triangle;
    let mult = grade_pairs(n)
        .into_iter()
        .map(|(a, b)| {
            let ab = g.mul(a, b);
            StructureTensor::from_bilinear(f, (h.dim(ab), h.dim(a), h.dim(b)), |i, j| {
                let mut out = zero_vector(f, h.dim(ab));
                for (i1, i2, co) in h.coalgebra(a).terms(i) {
                    axpy(&mut out, co, &h.mul_left_basis(a, *i1, b, &tri.apply_basis(a, *i2, b, j)));
                }
                out
            })
        })
        .collect();
    let blocks = g
        .elements()
        .map(|a| {
            let ai = g.inv(a);
            let psi = &p.psi[a * n + ai];
            DenseMatrix::from_columns(f, h.dim(ai), h.dim(a), |i| {
                let mut out = zero_vector(f, h.dim(ai));
                for (i1, i2, co) in h.coalgebra(a).terms(i) {
                    axpy(&mut out, co, &psi.apply_left_basis(*i1, &h.s_basis(a, *i2)));
                }
                out
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
    HopfPiAlgebra::from_parts(bi, blocks)
}

/// `▷_{α,e}` as an action of the subadjacent algebra on `H_e`.
fn identity_component_action(p: &PostHopfStructure, sub: &HopfPiAlgebra, he: &HopfPiAlgebra) -> ActionFamily {
    let e = p.base.identity();
    ActionFamily::from_fn(ActionSide::Left, sub.space(), he.space(), |a, i, _, j| {
        p.triangle.apply_basis(a, i, e, j)
    })
    .expect("identity component action shapes")
}

/// The subadjacent algebra as a Hopf π-algebra (`H▷: `), its antipode
/// identities, and `H_e` as a module-like bialgebra over it (`H_e: `).
pub fn check_subadjacent(p: &PostHopfStructure) -> Result<CheckReport> {
    let sub = subadjacent(p)?;
    let he = identity_component(&p.base);
    let act = identity_component_action(p, &sub, &he);
    let mut report = CheckReport::new();
    report.merge_prefixed("H▷: ", check_hopf_pi_algebra(&sub));
    report.merge_prefixed("H▷: ", check_antipode_identities(&sub));
    report.merge_prefixed("H_e: ", check_left_modulelike_bialgebra(&sub, &he, &act)?);
    Ok(report)
}

/// `(H, ·)` and `(H, *)` as a brace.
pub fn brace_from_post_hopf(p: &PostHopfStructure) -> Result<HopfPiBrace> {
    require_cocommutative(p, "brace of a post-Hopf π-algebra")?;
    HopfPiBrace::new(p.base.clone(), subadjacent(p)?)
}

/// `x▷y = S(x₁)(x₂∘y)` on a valid cocommutative brace.
pub fn post_hopf_from_brace(b: &HopfPiBrace) -> Result<PostHopfStructure> {
    if !b.is_cocommutative() {
        return Err(Error::NotCocommutative("post-Hopf structure of a brace".into()));
    }
    let report = check_brace(b);
    if !report.passed() {
        return Err(Error::Precondition(format!(
            "not a brace: fails {}",
            report.failed_axioms().join(", ")
        )));
    }
    PostHopfStructure::new(b.dot().clone(), left_action(b))
}

/// The smash brace `H_e ♮ H▷` over `π`, with the subadjacent algebra
/// acting on the identity component through `▷_{α,e}`.
pub fn smash_from_post_hopf(p: &PostHopfStructure) -> Result<HopfPiBrace> {
    let sub = subadjacent(p)?;
    let he = identity_component(&p.base);
    let act = identity_component_action(p, &sub, &he);
    let b = smash_brace_modlike(&sub, &he, &act)?;
    let group = p.base.group().clone();
    HopfPiBrace::new(b.dot().regrade(group.clone())?, b.circle().regrade(group)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::{opposite_brace, trivial_brace};
    use crate::gallery::{gallery_algebra, s3_sign};
    use crate::hopf::opposite;
    use crate::scalar::Field;

    fn q() -> Field {
        Field::Rational
    }

    fn trivial_triangle(h: &HopfPiAlgebra) -> ActionFamily {
        ActionFamily::trivial_left(h.space(), h.coalgebras(), h.space())
    }

    #[test]
    fn trivial_action_is_its_own_inverse() {
        let h = gallery_algebra(q(), "V4/first").unwrap();
        let p = PostHopfStructure::new(h.clone(), trivial_triangle(&h)).unwrap();
        for (a, b) in grade_pairs(h.group().size()) {
            assert_eq!(p.psi()[a * 2 + b], *p.triangle().tensor(a, b));
        }
        assert!(check_post_hopf_derived(&p).unwrap().passed());
        assert_eq!(subadjacent(&p).unwrap(), h);
        assert_eq!(brace_from_post_hopf(&p).unwrap(), trivial_brace(&h));
    }

    #[test]
    fn conjugation_action_on_s3() {
        let h = s3_sign(q());
        let b = opposite_brace(&h).unwrap();
        let p = post_hopf_from_brace(&b).unwrap();
        let n = h.group().size();
        for (a, bb) in grade_pairs(n) {
            for i in 0..h.dim(a) {
                let inv = crate::linalg::invert(&p.theta_at(a, bb, i)).unwrap().unwrap();
                assert_eq!(p.psi_at(a, bb, i), inv);
            }
        }
        let r = check_post_hopf_derived(&p).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(subadjacent(&p).unwrap(), opposite(&h).unwrap());
        let r = check_subadjacent(&p).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(brace_from_post_hopf(&p).unwrap(), b);
    }

    #[test]
    fn roundtrips() {
        let h = s3_sign(q());
        for b in [trivial_brace(&h), opposite_brace(&h).unwrap()] {
            let p = post_hopf_from_brace(&b).unwrap();
            assert_eq!(brace_from_post_hopf(&p).unwrap(), b);
            let back = post_hopf_from_brace(&brace_from_post_hopf(&p).unwrap()).unwrap();
            assert_eq!(back.triangle(), p.triangle());
        }
    }

    #[test]
    fn twisted_associativity_mutation_detected() {
        let h = s3_sign(q());
        let p = post_hopf_from_brace(&opposite_brace(&h).unwrap()).unwrap();
        let t = p.triangle().tensor(1, 0);
        let bad = p.triangle().with_tensor(1, 0, t.with_entry(0, 0, 0, q().zero()).with_entry(1, 0, 0, q().one())).unwrap();
        let (r, s) = check_post_hopf(&h, &bad).unwrap();
        assert!(r.failure_count(P_TWISTED_ASSOC) > 0, "{r}");
        assert!(s.is_none());
    }

    #[test]
    fn antipode_mutation_breaks_derived_identity() {
        let h = s3_sign(q());
        let p = post_hopf_from_brace(&opposite_brace(&h).unwrap()).unwrap();
        let mut block = h.antipode().block(1).clone();
        block.set(0, 0, q().from_i64(2));
        let bad = h.with_antipode_block(1, block).unwrap();
        let pb = PostHopfStructure::new(bad, p.triangle().clone()).unwrap();
        let r = check_post_hopf_derived(&pb).unwrap();
        assert!(r.failure_count(P_ANTIPODE) > 0);
    }

    #[test]
    fn zero_action_is_not_convolution_invertible() {
        let h = gallery_algebra(q(), "Z2/identity").unwrap();
        let zero = ActionFamily::from_fn(ActionSide::Left, h.space(), h.space(), |_, _, b, _| {
            zero_vector(q(), h.dim(b))
        })
        .unwrap();
        let (r, s) = check_post_hopf(&h, &zero).unwrap();
        assert!(r.failure_count(P_CONVOLUTION) > 0);
        assert!(r.notes().iter().any(|n| n.starts_with("not convolution invertible at")));
        assert!(s.is_none());
    }

    #[test]
    fn smash_products() {
        let h = s3_sign(q());
        let p = post_hopf_from_brace(&opposite_brace(&h).unwrap()).unwrap();
        let b = smash_from_post_hopf(&p).unwrap();
        assert_eq!(b.space().total_dim(), 18);
        let r = check_brace(&b);
        assert!(r.passed(), "{r}");

        let v = gallery_algebra(q(), "V4/first").unwrap();
        let p = PostHopfStructure::new(v.clone(), trivial_triangle(&v)).unwrap();
        let b = smash_from_post_hopf(&p).unwrap();
        assert_eq!(b.space().total_dim(), 8);
        assert!(check_brace(&b).passed());

        let one = identity_component(&crate::hopf::group_algebra(
            q(),
            &crate::group::GroupHom::identity(std::sync::Arc::new(crate::group::FiniteGroup::trivial())),
        ));
        let p = PostHopfStructure::new(one.clone(), trivial_triangle(&one)).unwrap();
        assert_eq!(smash_from_post_hopf(&p).unwrap().space().total_dim(), 1);
    }
}
