//! Set-level search for Rota-Baxter operators on group algebras.
//!
//! A coalgebra map between group algebras sends group-likes to group-likes,
//! so a basis-to-basis operator is a map of sets `B: Γ → Γ` with
//! `deg(B(g)) = deg(g)⁻¹` and `B(a)B(b) = B(a·B(a)·b·B(a)⁻¹)`. Results are
//! tables `t[g] = B(g)` in lexicographic order.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graded::GradedLinearMap;
use crate::group::{FiniteGroup, GroupHom};
use crate::hopf::group_algebra;
use crate::linalg::{basis_vector, DenseMatrix};
use crate::rota_baxter::RotaBaxterOperator;
use crate::scalar::Field;

pub const DEFAULT_BOUND: u128 = 100_000_000;

/// `∏_α |deg⁻¹(ᾱ)|^{|deg⁻¹(α)|}`, saturating.
pub fn search_space_size(deg: &GroupHom) -> u128 {
    let pi = deg.target();
    pi.elements().fold(1u128, |acc, a| {
        let base = deg.fiber(pi.inv(a)).len() as u128;
        let exp = deg.fiber(a).len() as u32;
        acc.saturating_mul(base.saturating_pow(exp))
    })
}

fn guard(deg: &GroupHom, bound: u128) -> Result<()> {
    let required = search_space_size(deg);
    if required > bound {
        return Err(Error::BoundExceeded { required, bound });
    }
    Ok(())
}

/// Candidate images of each element: the fiber over the inverse grade.
fn candidates(deg: &GroupHom) -> Vec<Vec<usize>> {
    let pi = deg.target();
    deg.source().elements().map(|g| deg.fiber(pi.inv(deg.apply(g)))).collect()
}

fn rb_argument(g: &FiniteGroup, a: usize, ba: usize, b: usize) -> usize {
    g.mul(g.mul(g.mul(a, ba), b), g.inv(ba))
}

/// Whether the identity holds at every pair whose three entries are assigned.
fn consistent(g: &FiniteGroup, table: &[Option<usize>], last: usize) -> bool {
    for a in 0..=last {
        let ba = table[a].expect("prefix assigned");
        for b in 0..=last {
            let c = rb_argument(g, a, ba, b);
            if c > last {
                continue;
            }
            if a != last && b != last && c != last {
                continue;
            }
            let lhs = g.mul(ba, table[b].expect("prefix assigned"));
            if Some(lhs) != table[c] {
                return false;
            }
        }
    }
    true
}

fn extend(g: &FiniteGroup, cands: &[Vec<usize>], table: &mut Vec<Option<usize>>, pos: usize, out: &mut Vec<Vec<usize>>) {
    if pos == table.len() {
        out.push(table.iter().map(|x| x.expect("complete")).collect());
        return;
    }
    for &img in &cands[pos] {
        table[pos] = Some(img);
        if consistent(g, table, pos) {
            extend(g, cands, table, pos + 1, out);
        }
    }
    table[pos] = None;
}

/// Backtracking search, parallel over the image of the first element.
pub fn enumerate_group_rb(deg: &GroupHom, bound: u128) -> Result<Vec<Vec<usize>>> {
    guard(deg, bound)?;
    let g = deg.source().clone();
    let n = g.size();
    let cands = candidates(deg);
    let parts: Vec<Vec<Vec<usize>>> = cands[0]
        .par_iter()
        .map(|&first| {
            let mut table = vec![None; n];
            table[0] = Some(first);
            let mut out = Vec::new();
            if consistent(&g, &table, 0) {
                extend(&g, &cands, &mut table, 1, &mut out);
            }
            out
        })
        .collect();
    Ok(parts.into_iter().flatten().collect())
}

/// Whether a complete table satisfies the group-like identity and the
/// grading condition.
pub fn is_group_rb(deg: &GroupHom, table: &[usize]) -> bool {
    let g = deg.source();
    let pi = deg.target();
    table.len() == g.size()
        && g.elements().all(|a| table[a] < g.size() && deg.apply(table[a]) == pi.inv(deg.apply(a)))
        && g.elements().all(|a| {
            g.elements().all(|b| g.mul(table[a], table[b]) == table[rb_argument(g, a, table[a], b)])
        })
}

/// Every map in the search space, in lexicographic order, filtered by
/// [`is_group_rb`].
pub fn enumerate_group_rb_naive(deg: &GroupHom, bound: u128) -> Result<Vec<Vec<usize>>> {
    guard(deg, bound)?;
    let cands = candidates(deg);
    let n = cands.len();
    let mut digits = vec![0usize; n];
    let mut out = Vec::new();
    loop {
        let table: Vec<usize> = (0..n).map(|p| cands[p][digits[p]]).collect();
        if is_group_rb(deg, &table) {
            out.push(table);
        }
        let mut p = n;
        loop {
            if p == 0 {
                return Ok(out);
            }
            p -= 1;
            digits[p] += 1;
            if digits[p] < cands[p].len() {
                break;
            }
            digits[p] = 0;
        }
    }
}

/// The operator on `k[Γ]` graded by `deg` whose blocks send each group-like
/// to its image.
pub fn linearize_group_rb(field: Field, deg: &GroupHom, table: &[usize]) -> Result<RotaBaxterOperator> {
    if !is_group_rb(deg, table) {
        return Err(Error::Input("table is not a group-like Rota-Baxter map".into()));
    }
    let h = group_algebra(field, deg);
    let pi = deg.target();
    let mut pos = vec![0; deg.source().size()];
    for a in pi.elements() {
        for (i, x) in deg.fiber(a).into_iter().enumerate() {
            pos[x] = i;
        }
    }
    let blocks = pi
        .elements()
        .map(|a| {
            let fib = deg.fiber(a);
            let rows = h.dim(pi.inv(a));
            DenseMatrix::from_columns(field, rows, fib.len(), |i| basis_vector(field, rows, pos[table[fib[i]]]))
        })
        .collect();
    let b = GradedLinearMap::grade_inverting(h.space(), blocks)?;
    RotaBaxterOperator::new(h, b)
}

/// `x ↦ g·B(g⁻¹xg)·g⁻¹`, or `None` when conjugation by `g` moves some
/// element out of its grade.
pub fn conjugate_table(deg: &GroupHom, table: &[usize], g: usize) -> Option<Vec<usize>> {
    let gr = deg.source();
    let gi = gr.inv(g);
    let conj = |x: usize, by: usize, inv: usize| gr.mul(gr.mul(by, x), inv);
    if gr.elements().any(|x| deg.apply(conj(x, g, gi)) != deg.apply(x)) {
        return None;
    }
    Some(gr.elements().map(|x| conj(table[conj(x, gi, g)], g, gi)).collect())
}

/// Tables whose conjugate by a grading-preserving inner automorphism is
/// missing from `results`.
pub fn orbit_gaps(deg: &GroupHom, results: &[Vec<usize>]) -> Vec<(Vec<usize>, usize)> {
    let set: std::collections::HashSet<&Vec<usize>> = results.iter().collect();
    let mut gaps = Vec::new();
    for t in results {
        for g in deg.source().elements() {
            if let Some(c) = conjugate_table(deg, t, g) {
                if !set.contains(&c) {
                    gaps.push((t.clone(), g));
                }
            }
        }
    }
    gaps
}
