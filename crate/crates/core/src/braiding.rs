//! Braiding operators on tensor products of graded components, the braid
//! equation, and the intertwiners relating two braidings.

use crate::action::ActionFamily;
use crate::brace::{left_action, right_action, HopfPiBrace};
use crate::error::{Error, Result};
use crate::graded::GradedSpace;
use crate::hopf::{grade_pairs, HopfPiAlgebra};
use crate::linalg::{axpy, basis_vector, invert, kron_vectors, zero_vector, DenseMatrix, Vector};
use crate::report::CheckReport;
use crate::scalar::{Field, Scalar};

/// Maps `H_α ⊗ H_β → H_β ⊗ H_α` for every pair of grades, stored at
/// `α * |π| + β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidingFamily {
    space: GradedSpace,
    maps: Vec<DenseMatrix>,
}

impl BraidingFamily {
    pub fn new(space: GradedSpace, maps: Vec<DenseMatrix>) -> Result<Self> {
        let n = space.group().size();
        if maps.len() != n * n {
            return Err(Error::Shape(format!("{} braiding blocks, expected {}", maps.len(), n * n)));
        }
        for (a, b) in grade_pairs(n) {
            let d = space.dim(a) * space.dim(b);
            let m = &maps[a * n + b];
            if (m.rows(), m.cols()) != (d, d) {
                return Err(Error::Shape(format!("braiding block ({a}, {b}) is not {d}x{d}")));
            }
        }
        Ok(BraidingFamily { space, maps })
    }

    /// The plain flip `x ⊗ y ↦ y ⊗ x`.
    pub fn flip(space: &GradedSpace) -> Self {
        let f = space.field();
        let n = space.group().size();
        let maps = grade_pairs(n)
            .into_iter()
            .map(|(a, b)| {
                let (da, db) = (space.dim(a), space.dim(b));
                DenseMatrix::from_columns(f, db * da, da * db, |col| {
                    basis_vector(f, db * da, (col % db) * da + col / db)
                })
            })
            .collect();
        Self::new(space.clone(), maps).expect("flip shapes")
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn map(&self, a: usize, b: usize) -> &DenseMatrix {
        &self.maps[a * self.space.group().size() + b]
    }

    pub fn maps(&self) -> &[DenseMatrix] {
        &self.maps
    }

    pub fn with_map(&self, a: usize, b: usize, m: DenseMatrix) -> Result<Self> {
        let mut maps = self.maps.clone();
        maps[a * self.space.group().size() + b] = m;
        Self::new(self.space.clone(), maps)
    }
}

fn require_abelian(space: &GradedSpace, what: &str) -> Result<()> {
    if space.group().is_abelian() {
        Ok(())
    } else {
        Err(Error::NonAbelian(what.into()))
    }
}

/// `c(x ⊗ y) = (x₁ ⇀ y₁) ⊗ (x₂ ↼ y₂)`.
pub fn braiding_c(b: &HopfPiBrace) -> Result<BraidingFamily> {
    require_abelian(b.space(), "braiding c")?;
    if !b.is_cocommutative() {
        return Err(Error::NotCocommutative("braiding c".into()));
    }
    let left = left_action(b);
    let right = right_action(b)?;
    let h = b.dot();
    let f = b.field();
    let n = b.group().size();
    let maps = grade_pairs(n)
        .into_iter()
        .map(|(a, bb)| {
            let (da, db) = (h.dim(a), h.dim(bb));
            DenseMatrix::from_columns(f, db * da, da * db, |col| {
                let (i, j) = (col / db, col % db);
                let mut out = zero_vector(f, db * da);
                for (i1, i2, ci) in h.coalgebra(a).terms(i) {
                    for (j1, j2, cj) in h.coalgebra(bb).terms(j) {
                        let v = kron_vectors(
                            f,
                            &left.apply_basis(a, *i1, bb, *j1),
                            &right.apply_basis(a, *i2, bb, *j2),
                        );
                        axpy(&mut out, &(ci * cj), &v);
                    }
                }
                out
            })
        })
        .collect();
    BraidingFamily::new(b.space().clone(), maps)
}

/// `σ(x ⊗ y) = y₁ ⊗ S(y₂) x y₃`.
pub fn braiding_sigma(h: &HopfPiAlgebra) -> Result<BraidingFamily> {
    require_abelian(h.space(), "braiding σ")?;
    let f = h.field();
    let g = h.group().clone();
    let maps = grade_pairs(g.size())
        .into_iter()
        .map(|(a, b)| {
            let (da, db) = (h.dim(a), h.dim(b));
            let bi = g.inv(b);
            DenseMatrix::from_columns(f, db * da, da * db, |col| {
                let (i, j) = (col / db, col % db);
                let mut out = zero_vector(f, db * da);
                for (p, q, r, c) in h.coalgebra(b).terms3(j) {
                    let sx = h.mul_right_basis(bi, &h.s_basis(b, *q), a, i);
                    let mid = h.mul_right_basis(g.mul(bi, a), &sx, b, *r);
                    axpy(&mut out, c, &kron_vectors(f, &basis_vector(f, db, *p), &mid));
                }
                out
            })
        })
        .collect();
    BraidingFamily::new(h.space().clone(), maps)
}

/// Applies `(c ⊗ c)` to `Δ(e_i ⊗ e_j)` in the tensor coalgebra.
fn comult_image(h: &HopfPiAlgebra, c: &DenseMatrix, a: usize, b: usize, i: usize, j: usize) -> Vector {
    let f = h.field();
    let db = h.dim(b);
    let d = h.dim(a) * db;
    let mut out = zero_vector(f, d * d);
    for (i1, i2, ci) in h.coalgebra(a).terms(i) {
        for (j1, j2, cj) in h.coalgebra(b).terms(j) {
            let v = kron_vectors(f, &c.column(i1 * db + j1), &c.column(i2 * db + j2));
            axpy(&mut out, &(ci * cj), &v);
        }
    }
    out
}

/// For each triple of grades: the braid relation as exact matrices; and for
/// each pair: the braiding is an invertible coalgebra map between tensor
/// coalgebras.
pub fn check_braid_equation(
    h: &HopfPiAlgebra,
    family: &BraidingFamily,
    triples: &[(usize, usize, usize)],
) -> CheckReport {
    let f = h.field();
    let mut report = CheckReport::new();
    for name in [
        "braid relation",
        "braiding comultiplicativity",
        "braiding counit",
        "braiding invertibility",
    ] {
        report.declare(name);
    }
    let id = |d: usize| DenseMatrix::identity(f, d);
    for &(a, b, c) in triples {
        let (da, db, dc) = (h.dim(a), h.dim(b), h.dim(c));
        let left = family
            .map(b, c)
            .kron(&id(da))
            .mul(&id(db).kron(family.map(a, c)))
            .mul(&family.map(a, b).kron(&id(dc)));
        let right = id(dc)
            .kron(family.map(a, b))
            .mul(&family.map(a, c).kron(&id(db)))
            .mul(&id(da).kron(family.map(b, c)));
        report.check_flag("braid relation", &[a, b, c], &[], left == right);
    }
    let n = h.group().size();
    for (a, b) in grade_pairs(n) {
        let m = family.map(a, b);
        let source = h.coalgebra(a).tensor(h.coalgebra(b));
        let target = h.coalgebra(b).tensor(h.coalgebra(a));
        let db = h.dim(b);
        for col in 0..m.cols() {
            let (i, j) = (col / db, col % db);
            let image = m.column(col);
            report.check(
                "braiding comultiplicativity",
                &[a, b],
                &[i, j],
                target.comult(&image),
                comult_image(h, m, a, b, i, j),
            );
            report.check(
                "braiding counit",
                &[a, b],
                &[i, j],
                vec![target.eps(&image)],
                vec![source.eps_basis(col).clone()],
            );
        }
        let invertible = matches!(invert(m), Ok(Some(_)));
        report.check_flag("braiding invertibility", &[a, b], &[], invertible);
    }
    report
}

/// All grade triples of the space, in lexicographic order.
pub fn all_grade_triples(space: &GradedSpace) -> Vec<(usize, usize, usize)> {
    crate::hopf::grade_triples(space.group().size())
}

/// Outcome of comparing two braidings through the intertwiners `f_n`.
#[derive(Clone, Debug)]
pub struct IntertwinerReport {
    pub report: CheckReport,
    /// `f_n ∘ σ_i = c_i ∘ f_n` held at every position and grade sequence.
    pub sigma_to_c: bool,
    /// `f_n ∘ c_i = σ_i ∘ f_n` held at every position and grade sequence.
    pub c_to_sigma: bool,
}

impl IntertwinerReport {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }

    pub fn orientation(&self) -> &'static str {
        match (self.sigma_to_c, self.c_to_sigma) {
            (true, true) => "both orientations",
            (true, false) => "f∘σ = c∘f",
            (false, true) => "f∘c = σ∘f",
            (false, false) => "mixed orientation",
        }
    }
}

/// Terms of the `n`-fold iterated comultiplication of `e_i`.
fn iterated_terms(h: &HopfPiAlgebra, a: usize, i: usize, n: usize) -> Vec<(Vec<usize>, Scalar)> {
    let mut terms = vec![(vec![i], h.field().one())];
    for _ in 1..n {
        let mut next = Vec::new();
        for (idx, c) in &terms {
            let last = *idx.last().expect("nonempty");
            for (p, q, d) in h.coalgebra(a).terms(last) {
                let mut v = idx[..idx.len() - 1].to_vec();
                v.push(*p);
                v.push(*q);
                next.push((v, c * d));
            }
        }
        terms = next;
    }
    terms
}

fn product_dim(h: &HopfPiAlgebra, seq: &[usize]) -> usize {
    seq.iter().map(|&a| h.dim(a)).product()
}

/// `g_n(a₁ ⊗ … ⊗ a_n) = a₁₍₁₎ ⊗ a₁₍₂₎⇀a₂ ⊗ … ⊗ a₁₍ₙ₎⇀a_n`.
fn g_matrix(h: &HopfPiAlgebra, act: &ActionFamily, seq: &[usize]) -> DenseMatrix {
    let f = h.field();
    let d = product_dim(h, seq);
    let a = seq[0];
    let rest_dim = product_dim(h, &seq[1..]);
    DenseMatrix::from_columns(f, d, d, |col| {
        let i = col / rest_dim;
        let mut rest = Vec::with_capacity(seq.len() - 1);
        let mut r = col % rest_dim;
        for &b in seq[1..].iter().rev() {
            rest.push(r % h.dim(b));
            r /= h.dim(b);
        }
        rest.reverse();
        let mut out = zero_vector(f, d);
        for (idx, c) in iterated_terms(h, a, i, seq.len()) {
            let mut v = basis_vector(f, h.dim(a), idx[0]);
            for (k, &b) in seq[1..].iter().enumerate() {
                v = kron_vectors(f, &v, &act.apply_basis(a, idx[k + 1], b, rest[k]));
            }
            axpy(&mut out, &c, &v);
        }
        out
    })
}

/// `f_1 = id`, `f_n = g_n (id ⊗ f_{n-1})`.
fn f_matrix(h: &HopfPiAlgebra, act: &ActionFamily, seq: &[usize]) -> DenseMatrix {
    let f = h.field();
    if seq.len() == 1 {
        return DenseMatrix::identity(f, h.dim(seq[0]));
    }
    let inner = DenseMatrix::identity(f, h.dim(seq[0])).kron(&f_matrix(h, act, &seq[1..]));
    g_matrix(h, act, seq).mul(&inner)
}

/// The braiding at strand position `pos` on `H_{s_1} ⊗ … ⊗ H_{s_n}`.
fn strand_map(h: &HopfPiAlgebra, family: &BraidingFamily, seq: &[usize], pos: usize) -> DenseMatrix {
    let f = h.field();
    let before = product_dim(h, &seq[..pos]);
    let after = product_dim(h, &seq[pos + 2..]);
    DenseMatrix::identity(f, before)
        .kron(family.map(seq[pos], seq[pos + 1]))
        .kron(&DenseMatrix::identity(f, after))
}

fn sequences(n_grades: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|s| {
                (0..n_grades).map(move |a| {
                    let mut t = s.clone();
                    t.push(a);
                    t
                })
            })
            .collect();
    }
    out
}

/// Builds `f_n` from the brace's left action and compares `c` with `σ`
/// on every grade sequence of length `n` (2 or 3).
pub fn braid_intertwiner_check(b: &HopfPiBrace, n: usize) -> Result<IntertwinerReport> {
    let c = braiding_c(b)?;
    let sigma = braiding_sigma(b.dot())?;
    let act = left_action(b);
    let mut out = braid_intertwiner_check_with(b.dot(), &act, &c, &sigma, n)?;
    if n >= 2 {
        check_inverse_formula(b, &act, &mut out.report);
    }
    Ok(out)
}

/// Same comparison with explicitly supplied action and braidings.
pub fn braid_intertwiner_check_with(
    h: &HopfPiAlgebra,
    act: &ActionFamily,
    c: &BraidingFamily,
    sigma: &BraidingFamily,
    n: usize,
) -> Result<IntertwinerReport> {
    if !(2..=3).contains(&n) {
        return Err(Error::Input(format!("intertwiner check supports n = 2 or 3, got {n}")));
    }
    let mut report = CheckReport::new();
    report.declare("intertwiner invertibility");
    report.declare("intertwiner orientation");
    let mut sigma_to_c = true;
    let mut c_to_sigma = true;
    let seqs = sequences(h.group().size(), n);
    let fs: Vec<DenseMatrix> = seqs.iter().map(|s| f_matrix(h, act, s)).collect();
    let index_of = |s: &[usize]| s.iter().fold(0, |acc, &a| acc * h.group().size() + a);
    for (s, fm) in seqs.iter().zip(&fs) {
        let invertible = matches!(invert(fm), Ok(Some(_)));
        report.check_flag("intertwiner invertibility", s, &[], invertible);
        for pos in 0..n - 1 {
            let mut swapped = s.clone();
            swapped.swap(pos, pos + 1);
            let f_after = &fs[index_of(&swapped)];
            let ci = strand_map(h, c, s, pos);
            let si = strand_map(h, sigma, s, pos);
            let a_holds = f_after.mul(&si) == ci.mul(fm);
            let b_holds = f_after.mul(&ci) == si.mul(fm);
            sigma_to_c &= a_holds;
            c_to_sigma &= b_holds;
            let mut at = s.clone();
            at.push(pos);
            report.check_flag("intertwiner orientation", &at, &[], a_holds || b_holds);
        }
    }
    if report.passed() && !sigma_to_c && !c_to_sigma {
        report.note("orientation differs between positions");
    }
    Ok(IntertwinerReport {
        report,
        sigma_to_c,
        c_to_sigma,
    })
}

/// `f⁻¹(x ⊗ y) = x₁ ⊗ (T(x₂) ⇀ y)` as a two-sided matrix inverse of `f_2`.
fn check_inverse_formula(b: &HopfPiBrace, act: &ActionFamily, report: &mut CheckReport) {
    let h = b.dot();
    let t = b.circle();
    let f = h.field();
    let g = h.group().clone();
    report.declare("intertwiner inverse formula");
    for (a, bb) in grade_pairs(g.size()) {
        let (da, db) = (h.dim(a), h.dim(bb));
        let fm = f_matrix(h, act, &[a, bb]);
        let inv = DenseMatrix::from_columns(f, da * db, da * db, |col| {
            let (i, j) = (col / db, col % db);
            let mut out = zero_vector(f, da * db);
            for (p, q, c) in h.coalgebra(a).terms(i) {
                let moved = act.apply_right_basis(g.inv(a), &t.s_basis(a, *q), bb, j);
                axpy(&mut out, c, &kron_vectors(f, &basis_vector(f, da, *p), &moved));
            }
            out
        });
        let ok = fm.mul(&inv).is_identity() && inv.mul(&fm).is_identity();
        report.check_flag("intertwiner inverse formula", &[a, bb], &[], ok);
    }
}

/// `y ⊗ y⁻¹xy` on a basis of group-likes, given the group and the position
/// of each element in its graded component.
pub fn conjugation_braiding_oracle(
    field: Field,
    space: &GradedSpace,
    group: &crate::group::FiniteGroup,
    deg: &[usize],
    position: &[usize],
) -> BraidingFamily {
    let n = space.group().size();
    let mut maps = Vec::new();
    for (a, b) in grade_pairs(n) {
        let (da, db) = (space.dim(a), space.dim(b));
        let fiber = |grade: usize| -> Vec<usize> {
            group.elements().filter(|&x| deg[x] == grade).collect()
        };
        let (fa, fb) = (fiber(a), fiber(b));
        maps.push(DenseMatrix::from_columns(field, db * da, da * db, |col| {
            let (x, y) = (fa[col / db], fb[col % db]);
            let conj = group.mul(group.mul(group.inv(y), x), y);
            basis_vector(field, db * da, position[y] * da + position[conj])
        }));
    }
    BraidingFamily::new(space.clone(), maps).expect("oracle shapes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::{opposite_brace, trivial_brace};
    use crate::gallery::{gallery_algebra, s3, s3_sign};

    fn q() -> Field {
        Field::Rational
    }

    fn s3_positions() -> (Vec<usize>, Vec<usize>) {
        let h = s3_sign(q());
        let g = s3();
        let deg = vec![0, 1, 1, 1, 0, 0];
        let pos = g
            .elements()
            .map(|x| h.labels(deg[x]).iter().position(|l| l == g.name(x)).unwrap())
            .collect();
        (deg, pos)
    }

    #[test]
    fn c_and_sigma_match_conjugation_on_s3() {
        let h = s3_sign(q());
        let b = trivial_brace(&h);
        let (deg, pos) = s3_positions();
        let oracle = conjugation_braiding_oracle(q(), h.space(), &s3(), &deg, &pos);
        assert_eq!(braiding_c(&b).unwrap(), oracle);
        assert_eq!(braiding_sigma(&h).unwrap(), oracle);
        let triples = all_grade_triples(h.space());
        let r = check_braid_equation(&h, &oracle, &triples);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn flip_satisfies_braid_relation() {
        let h = gallery_algebra(q(), "V4/first").unwrap();
        let flip = BraidingFamily::flip(h.space());
        assert!(check_braid_equation(&h, &flip, &all_grade_triples(h.space())).passed());
        assert_eq!(braiding_sigma(&h).unwrap(), flip);
    }

    #[test]
    fn perturbed_braiding_fails() {
        let h = s3_sign(q());
        let c = braiding_sigma(&h).unwrap();
        let mut m = c.map(1, 1).clone();
        m.set(0, 0, q().from_i64(3));
        let bad = c.with_map(1, 1, m).unwrap();
        let r = check_braid_equation(&h, &bad, &all_grade_triples(h.space()));
        assert!(r.failure_count("braid relation") > 0);
    }

    #[test]
    fn intertwiner_orientations() {
        let h = s3_sign(q());
        let t = braid_intertwiner_check(&trivial_brace(&h), 2).unwrap();
        assert!(t.passed(), "{}", t.report);
        let o = braid_intertwiner_check(&opposite_brace(&h).unwrap(), 3).unwrap();
        assert!(o.passed(), "{}", o.report);
        assert!(o.c_to_sigma);
    }

    #[test]
    fn degenerate_action_makes_intertwiner_singular() {
        let h = s3_sign(q());
        let b = trivial_brace(&h);
        let act = left_action(&b);
        let zero = crate::tensor::StructureTensor::zeros(q(), act.tensor(0, 1).shape());
        let bad = act.with_tensor(0, 1, zero).unwrap();
        let c = braiding_c(&b).unwrap();
        let s = braiding_sigma(&h).unwrap();
        let r = braid_intertwiner_check_with(&h, &bad, &c, &s, 2).unwrap();
        assert!(r.report.failure_count("intertwiner invertibility") > 0);
    }
}
