//! Smash-product braces built from a Hopf algebra acting on another by a
//! module-like bialgebra action.

use std::sync::Arc;

use crate::action::{check_left_modulelike_bialgebra, ActionFamily, ActionSide};
use crate::brace::HopfPiBrace;
use crate::error::{Error, Result};
use crate::graded::GradedSpace;
use crate::group::GroupHom;
use crate::hopf::{grade_pairs, HopfPiAlgebra, PiBialgebra};
use crate::linalg::{axpy, basis_vector, kron_vectors, zero_vector, DenseMatrix};
use crate::scalar::Field;
use crate::tensor::StructureTensor;

/// The action of a group `Γ₁` on a group `Γ₂` by permutations, linearized:
/// `k ⇀ h = perms[k][h]` on group-like bases of `k[Γ₁]` and `k[Γ₂]`
/// graded by `k_deg` and `h_deg`. Each permutation must preserve the
/// fibers of `h_deg`.
pub fn permutation_action(
    field: Field,
    k_deg: &GroupHom,
    h_deg: &GroupHom,
    perms: &[Vec<usize>],
) -> Result<ActionFamily> {
    let (g1, g2) = (k_deg.source(), h_deg.source());
    if perms.len() != g1.size() || perms.iter().any(|p| p.len() != g2.size()) {
        return Err(Error::Input("one permutation of the target group per acting element".into()));
    }
    for (k, p) in perms.iter().enumerate() {
        for h in g2.elements() {
            if p[h] >= g2.size() {
                return Err(Error::Input("permutation entry out of range".into()));
            }
            if h_deg.apply(p[h]) != h_deg.apply(h) {
                return Err(Error::Shape(format!(
                    "{} moves {} out of its grade",
                    g1.name(k),
                    g2.name(h)
                )));
            }
        }
    }
    let kspace = graded_space_of(field, k_deg)?;
    let hspace = graded_space_of(field, h_deg)?;
    let (kfib, _) = fibers(k_deg);
    let (hfib, hpos) = fibers(h_deg);
    ActionFamily::from_fn(ActionSide::Left, &kspace, &hspace, |a, i, c, j| {
        let k = kfib[a][i];
        let h = hfib[c][j];
        basis_vector(field, hspace.dim(c), hpos[perms[k][h]])
    })
}

fn fibers(deg: &GroupHom) -> (Vec<Vec<usize>>, Vec<usize>) {
    let fib: Vec<Vec<usize>> = deg.target().elements().map(|a| deg.fiber(a)).collect();
    let mut pos = vec![0; deg.source().size()];
    for f in &fib {
        for (i, &x) in f.iter().enumerate() {
            pos[x] = i;
        }
    }
    (fib, pos)
}

fn graded_space_of(field: Field, deg: &GroupHom) -> Result<GradedSpace> {
    let dims = deg.target().elements().map(|a| deg.fiber(a).len()).collect();
    GradedSpace::new(field, deg.target().clone(), dims)
}

/// The smash product `H ♮ K` of a cocommutative Hopf `π₁`-algebra `K`
/// acting on a cocommutative Hopf `π₂`-algebra `H`, a brace over
/// `π₁ × π₂` (index `α * |π₂| + γ`). The component of grade `(α, γ)` is
/// `H_γ ⊗ K_α` with basis `h * dim K_α + k`:
///
/// - `(h♮k)(h'♮k') = hh' ♮ kk'`
/// - `(h♮k)∘(h'♮k') = h(k₁⇀h') ♮ k₂k'`
/// - `S(h♮k) = S(h) ♮ S(k)`, `T(h♮k) = S(k₁)⇀S(h) ♮ S(k₂)`
pub fn smash_brace_modlike(
    k: &HopfPiAlgebra,
    h: &HopfPiAlgebra,
    act: &ActionFamily,
) -> Result<HopfPiBrace> {
    if k.field() != h.field() {
        return Err(Error::FieldMismatch("smash product of algebras over different fields".into()));
    }
    if !k.is_cocommutative() || !h.is_cocommutative() {
        return Err(Error::NotCocommutative("smash product brace".into()));
    }
    let report = check_left_modulelike_bialgebra(k, h, act)?;
    if !report.passed() {
        return Err(Error::Input(format!(
            "action is not a module-like bialgebra action: fails {}",
            report.failed_axioms().join(", ")
        )));
    }
    let f = k.field();
    let (p1, p2) = (k.group().clone(), h.group().clone());
    let pi = Arc::new(p1.direct_product(&p2));
    let m = p2.size();
    let split = |x: usize| (x / m, x % m);
    let dims: Vec<usize> = pi
        .elements()
        .map(|x| {
            let (a, c) = split(x);
            h.dim(c) * k.dim(a)
        })
        .collect();
    let space = GradedSpace::new(f, pi.clone(), dims.clone())?;
    let coalgebras = pi
        .elements()
        .map(|x| {
            let (a, c) = split(x);
            h.coalgebra(c).tensor(k.coalgebra(a))
        })
        .collect::<Vec<_>>();

    let mut dot = Vec::new();
    let mut circle = Vec::new();
    for (x, y) in grade_pairs(pi.size()) {
        let ((a, c), (b, d)) = (split(x), split(y));
        let (ka, kb) = (k.dim(a), k.dim(b));
        let shape = (dims[pi.mul(x, y)], dims[x], dims[y]);
        dot.push(StructureTensor::from_bilinear(f, shape, |u, v| {
            kron_vectors(f, &h.mul_basis(c, u / ka, d, v / kb), &k.mul_basis(a, u % ka, b, v % kb))
        }));
        circle.push(StructureTensor::from_bilinear(f, shape, |u, v| {
            let (hp, kq) = (u / ka, u % ka);
            let (hp2, kq2) = (v / kb, v % kb);
            let mut out = zero_vector(f, shape.0);
            for (k1, k2, co) in k.coalgebra(a).terms(kq) {
                let moved = act.apply_basis(a, *k1, d, hp2);
                let hh = h.mul_left_basis(c, hp, d, &moved);
                axpy(&mut out, co, &kron_vectors(f, &hh, &k.mul_basis(a, *k2, b, kq2)));
            }
            out
        }));
    }
    let unit = kron_vectors(f, h.unit(), k.unit());
    let labels: Vec<Vec<String>> = pi
        .elements()
        .map(|x| {
            let (a, c) = split(x);
            h.labels(c)
                .iter()
                .flat_map(|l| k.labels(a).iter().map(move |r| format!("{l}#{r}")))
                .collect()
        })
        .collect();
    let s_blocks: Vec<DenseMatrix> = pi
        .elements()
        .map(|x| {
            let (a, c) = split(x);
            h.antipode().block(c).kron(k.antipode().block(a))
        })
        .collect();
    let t_blocks: Vec<DenseMatrix> = pi
        .elements()
        .map(|x| {
            let (a, c) = split(x);
            let (ai, ci) = (p1.inv(a), p2.inv(c));
            let ka = k.dim(a);
            let rows = h.dim(ci) * k.dim(ai);
            DenseMatrix::from_columns(f, rows, dims[x], |u| {
                let (hp, kq) = (u / ka, u % ka);
                let sh = h.s_basis(c, hp);
                let mut out = zero_vector(f, rows);
                for (k1, k2, co) in k.coalgebra(a).terms(kq) {
                    let moved = act.tensor(ai, ci).apply(&k.s_basis(a, *k1), &sh);
                    axpy(&mut out, co, &kron_vectors(f, &moved, &k.s_basis(a, *k2)));
                }
                out
            })
        })
        .collect();
    let dot_bi = PiBialgebra::with_labels(space.clone(), coalgebras.clone(), dot, unit.clone(), labels.clone())?;
    let circle_bi = PiBialgebra::with_labels(space, coalgebras, circle, unit, labels)?;
    HopfPiBrace::new(
        HopfPiAlgebra::from_parts(dot_bi, s_blocks)?,
        HopfPiAlgebra::from_parts(circle_bi, t_blocks)?,
    )
}

/// The smash product `H ♯ K` of a Hopf algebra `K` (trivial grading)
/// acting on a Hopf π-algebra `H`, graded by `π` with components
/// `H_α ⊗ K`.
pub fn smash_brace_pimod(
    h: &HopfPiAlgebra,
    k: &HopfPiAlgebra,
    act: &ActionFamily,
) -> Result<HopfPiBrace> {
    if !k.group().is_trivial() {
        return Err(Error::Input("the acting Hopf algebra must be trivially graded".into()));
    }
    let b = smash_brace_modlike(k, h, act)?;
    let group = h.group().clone();
    HopfPiBrace::new(b.dot().regrade(group.clone())?, b.circle().regrade(group)?)
}

/// `k[Z/2]` acting on `k[V4]` (graded by the second coordinate) through the
/// automorphism `(a, b) ↦ (a + b, b)`. Returns the acting algebra (graded
/// by the identity of `Z/2` when `graded_acting`, else trivially), the
/// target algebra and the action.
pub fn v4_swap_example(field: Field, graded_acting: bool) -> (HopfPiAlgebra, HopfPiAlgebra, ActionFamily) {
    use crate::gallery::{v4, z2};
    use crate::hopf::group_algebra;
    let z2g = Arc::new(z2());
    let k_deg = if graded_acting {
        GroupHom::identity(z2g)
    } else {
        GroupHom::to_trivial(z2g)
    };
    let v4g = Arc::new(v4());
    let h_deg = GroupHom::new(v4g, Arc::new(z2()), vec![0, 1, 0, 1]).expect("second projection");
    let perms = vec![vec![0, 1, 2, 3], vec![0, 3, 2, 1]];
    let act = permutation_action(field, &k_deg, &h_deg, &perms).expect("swap preserves the grading");
    (group_algebra(field, &k_deg), group_algebra(field, &h_deg), act)
}
