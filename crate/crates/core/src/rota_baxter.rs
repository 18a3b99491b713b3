//! Rota-Baxter operators `B_α: H_α → H_{ᾱ}` on cocommutative Hopf
//! π-algebras, the standard constructions of them, and the descendent Hopf
//! π-algebra `H_B` with its brace.

use std::sync::Arc;

use crate::brace::{check_automorphisms, HopfPiBrace};
use crate::coalgebra::check_coalgebra_map;
use crate::error::{Error, Result};
use crate::graded::GradedLinearMap;
use crate::group::FiniteGroup;
use crate::hopf::{check_hopf_pi_algebra, grade_pairs, par_reports, twist_block, twisted_copies, HopfPiAlgebra, PiBialgebra};
use crate::linalg::{axpy, invert, scale, solve_linear, zero_vector, DenseMatrix, Vector};
use crate::report::CheckReport;
use crate::scalar::Scalar;
use crate::tensor::StructureTensor;

pub const RB_COALGEBRA: &str = "B coalgebra map";
pub const RB_IDENTITY: &str = "B(a)B(b) = B(a1B(a2)bS(B(a3)))";
pub const RB_CONVOLUTION: &str = "B(h1)B(T(h2)) = ε(h)1";
pub const RB_ANTIPODE: &str = "B∘T = S∘B";
pub const RB_HOMOMORPHISM: &str = "B(g∘h) = B(g)B(h)";
pub const RB_HOM_UNIT: &str = "B(1) = 1";

/// A cocommutative Hopf π-algebra with a validated Rota-Baxter operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotaBaxterOperator {
    carrier: HopfPiAlgebra,
    b: GradedLinearMap,
}

impl RotaBaxterOperator {
    /// Runs [`check_rb`]; a failed axiom is a precondition error.
    pub fn new(carrier: HopfPiAlgebra, b: GradedLinearMap) -> Result<Self> {
        let report = check_rb(&carrier, &b)?;
        if !report.passed() {
            return Err(Error::Precondition(format!(
                "not a Rota-Baxter operator: fails {}",
                report.failed_axioms().join(", ")
            )));
        }
        Ok(RotaBaxterOperator { carrier, b })
    }

    pub fn carrier(&self) -> &HopfPiAlgebra {
        &self.carrier
    }

    pub fn operator(&self) -> &GradedLinearMap {
        &self.b
    }

    pub fn block(&self, grade: usize) -> &DenseMatrix {
        self.b.block(grade)
    }
}

fn expect_operator_shape(h: &HopfPiAlgebra, b: &GradedLinearMap) -> Result<()> {
    if b.source() != h.space() || b.target() != h.space() {
        return Err(Error::Shape("operator must act on the carrier space".into()));
    }
    if !b.has_inverting_shift() {
        return Err(Error::Shape("operator must map H_α to H_{α⁻¹}".into()));
    }
    Ok(())
}

/// Each `B_α` is a coalgebra map and
/// `B_α(a)B_β(b) = B_{βα}(a₁B_α(a₂)·b·S(B_α(a₃)))` on all basis pairs.
pub fn check_rb(h: &HopfPiAlgebra, b: &GradedLinearMap) -> Result<CheckReport> {
    if !h.is_cocommutative() {
        return Err(Error::NotCocommutative("Rota-Baxter operator".into()));
    }
    expect_operator_shape(h, b)?;
    let g = h.group().clone();
    let f = h.field();
    let mut report = CheckReport::new();
    report.declare(RB_COALGEBRA);
    report.declare(RB_IDENTITY);
    for a in g.elements() {
        check_coalgebra_map(&mut report, RB_COALGEBRA, h.coalgebra(a), h.coalgebra(g.inv(a)), b.block(a), &[a]);
    }
    report.merge(par_reports(&grade_pairs(g.size()), |&(al, be)| {
        let mut r = CheckReport::new();
        let ai = g.inv(al);
        let ba = g.mul(be, al);
        let e = g.identity();
        let ba_block = b.block(ba);
        for i in 0..h.dim(al) {
            let inner: Vec<(Vector, Vector, Scalar)> = h
                .coalgebra(al)
                .terms3(i)
                .iter()
                .map(|(i1, i2, i3, c)| {
                    let left = h.mul_left_basis(al, *i1, ai, &b.block(al).column(*i2));
                    let right = h.s(ai, &b.block(al).column(*i3));
                    (left, right, c.clone())
                })
                .collect();
            let bi = b.block(al).column(i);
            for j in 0..h.dim(be) {
                let lhs = h.mul(ai, &bi, g.inv(be), &b.block(be).column(j));
                let mut arg = zero_vector(f, h.dim(ba));
                for (left, right, c) in &inner {
                    let v = h.mul_right_basis(e, left, be, j);
                    axpy(&mut arg, c, &h.mul(be, &v, al, right));
                }
                r.check(RB_IDENTITY, &[al, be], &[i, j], lhs, ba_block.mul_vec(&arg));
            }
        }
        r
    }));
    Ok(report)
}

/// `B = S`.
pub fn antipode_rb(h: &HopfPiAlgebra) -> Result<RotaBaxterOperator> {
    RotaBaxterOperator::new(h.clone(), h.antipode().clone())
}

/// Records whether the grade-preserving `φ` is multiplicative (or
/// anti-multiplicative when `anti`), unital and a coalgebra map.
fn bialgebra_map_report(h: &HopfPiAlgebra, phi: &GradedLinearMap, anti: bool) -> CheckReport {
    let g = h.group().clone();
    let mut report = CheckReport::new();
    let name = if anti { "φ(xy) = φ(y)φ(x)" } else { "φ(xy) = φ(x)φ(y)" };
    report.declare(name);
    for (a, b) in grade_pairs(g.size()) {
        let ab = g.mul(a, b);
        if anti && ab != g.mul(b, a) {
            report.check_flag(name, &[a, b], &[], false);
            continue;
        }
        for i in 0..h.dim(a) {
            for j in 0..h.dim(b) {
                let lhs = phi.apply(ab, &h.mul_basis(a, i, b, j));
                let (x, y) = (phi.block(a).column(i), phi.block(b).column(j));
                let rhs = if anti { h.mul(b, &y, a, &x) } else { h.mul(a, &x, b, &y) };
                report.check(name, &[a, b], &[i, j], lhs, rhs);
            }
        }
    }
    let e = g.identity();
    report.check("φ(1) = 1", &[e], &[], phi.apply(e, h.unit()), h.unit().to_vec());
    for a in g.elements() {
        check_coalgebra_map(&mut report, "φ coalgebra map", h.coalgebra(a), h.coalgebra(a), phi.block(a), &[a]);
    }
    report
}

/// `B^φ_α = φ_ᾱ ∘ B_α ∘ φ_α⁻¹` for a grade-preserving π-bialgebra
/// automorphism or antiautomorphism `φ`.
pub fn twist_rb(rb: &RotaBaxterOperator, phi: &GradedLinearMap) -> Result<RotaBaxterOperator> {
    let h = &rb.carrier;
    if !phi.has_identity_shift() || phi.source() != h.space() || phi.target() != h.space() {
        return Err(Error::Input("φ must be a grade-preserving map of the carrier".into()));
    }
    let g = h.group().clone();
    let mut inverses = Vec::with_capacity(g.size());
    for a in g.elements() {
        let inv = invert(phi.block(a))?
            .ok_or_else(|| Error::Input(format!("φ is singular on grade {}", g.name(a))))?;
        inverses.push(inv);
    }
    let auto = bialgebra_map_report(h, phi, false);
    if !auto.passed() && !bialgebra_map_report(h, phi, true).passed() {
        return Err(Error::Input(format!(
            "φ is neither an automorphism nor an antiautomorphism: fails {}",
            auto.failed_axioms().join(", ")
        )));
    }
    let blocks = g
        .elements()
        .map(|a| twist_block(phi.block(g.inv(a)), rb.b.block(a), &inverses[a]))
        .collect();
    RotaBaxterOperator::new(h.clone(), GradedLinearMap::grade_inverting(h.space(), blocks)?)
}

/// Copies of a Rota-Baxter Hopf algebra over the trivial group indexed by a
/// group of Hopf automorphisms, in coordinates `h^α = α(h)`:
/// `B_α(h^α) = B(h)^ᾱ`.
pub fn aut_indexed_rb(
    rb: &RotaBaxterOperator,
    autos: &[DenseMatrix],
    pi: Arc<FiniteGroup>,
) -> Result<RotaBaxterOperator> {
    check_automorphisms(&[&rb.carrier], autos)?;
    let (h, inverses) = twisted_copies(&rb.carrier, autos, pi.clone())?;
    let blocks = pi
        .elements()
        .map(|a| twist_block(&autos[pi.inv(a)], rb.b.block(0), &inverses[a]))
        .collect();
    let b = GradedLinearMap::grade_inverting(h.space(), blocks)?;
    let report = check_rb(&h, &b)?;
    if !report.passed() {
        return Err(Error::Input(format!(
            "automorphisms are not compatible with B: fails {}",
            report.failed_axioms().join(", ")
        )));
    }
    RotaBaxterOperator::new(h, b)
}

/// A factorization `H_α = G·K_α` with `G` a Hopf subalgebra of `H_e` and
/// `K` a Hopf π-subalgebra, each given by inclusion matrices whose columns
/// span the subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    g: DenseMatrix,
    k: Vec<DenseMatrix>,
}

impl Factorization {
    pub fn new(g: DenseMatrix, k: Vec<DenseMatrix>) -> Self {
        Factorization { g, k }
    }

    pub fn g(&self) -> &DenseMatrix {
        &self.g
    }

    pub fn k(&self) -> &[DenseMatrix] {
        &self.k
    }
}

fn in_span(basis: &DenseMatrix, v: &[Scalar]) -> Result<bool> {
    Ok(solve_linear(basis, v)?.is_some())
}

fn check_subalgebras(h: &HopfPiAlgebra, fac: &Factorization) -> Result<()> {
    let g = h.group().clone();
    let e = g.identity();
    let gm = &fac.g;
    let bad_g = |what: &str| Error::Input(format!("G is not a Hopf subalgebra of H_e: {what}"));
    let bad_k = |what: &str| Error::Input(format!("K is not a Hopf π-subalgebra: {what}"));
    if !in_span(gm, h.unit())? {
        return Err(bad_g("missing the unit"));
    }
    let gg = gm.kron(gm);
    for i in 0..gm.cols() {
        let x = gm.column(i);
        for j in 0..gm.cols() {
            if !in_span(gm, &h.mul(e, &x, e, &gm.column(j)))? {
                return Err(bad_g("not closed under products"));
            }
        }
        if !in_span(&gg, &h.coalgebra(e).comult(&x))? {
            return Err(bad_g("not a subcoalgebra"));
        }
        if !in_span(gm, &h.s(e, &x))? {
            return Err(bad_g("not closed under the antipode"));
        }
    }
    let k = &fac.k;
    if !in_span(&k[e], h.unit())? {
        return Err(bad_k("missing the unit"));
    }
    for a in g.elements() {
        let kk = k[a].kron(&k[a]);
        for i in 0..k[a].cols() {
            let x = k[a].column(i);
            for b in g.elements() {
                for j in 0..k[b].cols() {
                    if !in_span(&k[g.mul(a, b)], &h.mul(a, &x, b, &k[b].column(j)))? {
                        return Err(bad_k("not closed under products"));
                    }
                }
            }
            if !in_span(&kk, &h.coalgebra(a).comult(&x))? {
                return Err(bad_k("not a subcoalgebra"));
            }
            if !in_span(&k[g.inv(a)], &h.s(a, &x))? {
                return Err(bad_k("not closed under the antipode"));
            }
        }
    }
    Ok(())
}

/// `B_α(gk) = ε(g)S_α(k)` for `g ∈ G`, `k ∈ K_α`, extended linearly
/// through the inverse of the product map `G ⊗ K_α → H_α`.
pub fn factorization_rb(h: &HopfPiAlgebra, fac: &Factorization) -> Result<RotaBaxterOperator> {
    if !h.is_cocommutative() {
        return Err(Error::NotCocommutative("factorization operator".into()));
    }
    let g = h.group().clone();
    let e = g.identity();
    let f = h.field();
    if fac.g.rows() != h.dim(e) || fac.k.len() != g.size() || g.elements().any(|a| fac.k[a].rows() != h.dim(a)) {
        return Err(Error::Shape("inclusion matrices do not match the carrier".into()));
    }
    check_subalgebras(h, fac)?;
    let dg = fac.g.cols();
    let mut blocks = Vec::with_capacity(g.size());
    for a in g.elements() {
        let ka = &fac.k[a];
        let dk = ka.cols();
        let ai = g.inv(a);
        let product = DenseMatrix::from_columns(f, h.dim(a), dg * dk, |c| {
            h.mul(e, &fac.g.column(c / dk), a, &ka.column(c % dk))
        });
        let direct = || Error::Input(format!("product not direct at grade {}", g.name(a)));
        if product.rows() != product.cols() {
            return Err(direct());
        }
        let inverse = invert(&product)?.ok_or_else(direct)?;
        let image = DenseMatrix::from_columns(f, h.dim(ai), dg * dk, |c| {
            let eps = h.coalgebra(e).eps(&fac.g.column(c / dk));
            scale(&eps, &h.s(a, &ka.column(c % dk)))
        });
        blocks.push(image.mul(&inverse));
    }
    RotaBaxterOperator::new(h.clone(), GradedLinearMap::grade_inverting(h.space(), blocks)?)
}

/// The descendent Hopf π-algebra `H_B` with `g∘h = g₁B(g₂)·h·S(B(g₃))` and
/// `T(g) = S(B(g₁))S(g₂)B(g₃)`, plus a report on its consistency with `B`:
/// the suite for `H_B` (`H_B: `), the convolution identity, `B∘T = S∘B`,
/// `B` as an operator on `H_B` (`on H_B: `) and `B: H_B → H` as a
/// homomorphism. Needs an abelian grading group.
pub fn descendent_hopf(rb: &RotaBaxterOperator) -> Result<(HopfPiAlgebra, CheckReport)> {
    descendent_candidate(&rb.carrier, &rb.b)
}

/// The same construction and report for any grade-inverting map on a
/// cocommutative carrier; the report fails when `b` is not an operator.
pub fn descendent_candidate(h: &HopfPiAlgebra, b: &GradedLinearMap) -> Result<(HopfPiAlgebra, CheckReport)> {
    let g = h.group().clone();
    if !g.is_abelian() {
        return Err(Error::NonAbelian("descendent Hopf π-algebra".into()));
    }
    expect_operator_shape(h, b)?;
    let f = h.field();
    let mult = grade_pairs(g.size())
        .into_iter()
        .map(|(al, be)| {
            let ai = g.inv(al);
            let ab = g.mul(al, be);
            StructureTensor::from_bilinear(f, (h.dim(ab), h.dim(al), h.dim(be)), |i, j| {
                let mut out = zero_vector(f, h.dim(ab));
                for (i1, i2, i3, c) in h.coalgebra(al).terms3(i) {
                    let left = h.mul_left_basis(al, *i1, ai, &b.block(al).column(*i2));
                    let v = h.mul_right_basis(g.identity(), &left, be, j);
                    axpy(&mut out, c, &h.mul(be, &v, al, &h.s(ai, &b.block(al).column(*i3))));
                }
                out
            })
        })
        .collect();
    let t_blocks: Vec<DenseMatrix> = g
        .elements()
        .map(|al| {
            let ai = g.inv(al);
            DenseMatrix::from_columns(f, h.dim(ai), h.dim(al), |i| {
                let mut out = zero_vector(f, h.dim(ai));
                for (i1, i2, i3, c) in h.coalgebra(al).terms3(i) {
                    let sb = h.s(ai, &b.block(al).column(*i1));
                    let y = h.mul(al, &sb, ai, &h.s_basis(al, *i2));
                    axpy(&mut out, c, &h.mul(g.identity(), &y, ai, &b.block(al).column(*i3)));
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
    let hb = HopfPiAlgebra::from_parts(bi, t_blocks)?;

    let mut report = CheckReport::new();
    report.merge_prefixed("H_B: ", check_hopf_pi_algebra(&hb));
    report.declare(RB_CONVOLUTION);
    report.declare(RB_ANTIPODE);
    report.declare(RB_HOMOMORPHISM);
    let e = g.identity();
    for al in g.elements() {
        let ai = g.inv(al);
        for i in 0..h.dim(al) {
            let mut lhs = zero_vector(f, h.dim(e));
            for (i1, i2, c) in h.coalgebra(al).terms(i) {
                let t = hb.s_basis(al, *i2);
                let p = h.mul(ai, &b.block(al).column(*i1), al, &b.apply(ai, &t));
                axpy(&mut lhs, c, &p);
            }
            report.check(RB_CONVOLUTION, &[al], &[i], lhs, h.eps_unit(al, &h.basis(al, i)));
        }
        let bt = b.block(ai).mul(hb.antipode().block(al));
        let sb = h.antipode().block(ai).mul(b.block(al));
        report.check_flag(RB_ANTIPODE, &[al], &[], bt == sb);
    }
    match check_rb(&hb, b) {
        Ok(r) => report.merge_prefixed("on H_B: ", r),
        Err(err) => report.note(format!("B on H_B not checked: {err}")),
    }
    report.merge(par_reports(&grade_pairs(g.size()), |&(al, be)| {
        let mut r = CheckReport::new();
        let ab = g.mul(al, be);
        for i in 0..h.dim(al) {
            for j in 0..h.dim(be) {
                let lhs = b.apply(ab, &hb.mul_basis(al, i, be, j));
                let rhs = h.mul(g.inv(al), &b.block(al).column(i), g.inv(be), &b.block(be).column(j));
                r.check(RB_HOMOMORPHISM, &[al, be], &[i, j], lhs, rhs);
            }
        }
        r
    }));
    report.check(RB_HOM_UNIT, &[e], &[], b.apply(e, h.unit()), h.unit().to_vec());
    Ok((hb, report))
}

/// The brace `(H, ·)`, `(H, ∘_B)`. Needs an abelian grading group.
pub fn brace_from_rb(rb: &RotaBaxterOperator) -> Result<HopfPiBrace> {
    let (hb, _) = descendent_hopf(rb)?;
    HopfPiBrace::new(rb.carrier.clone(), hb)
}
