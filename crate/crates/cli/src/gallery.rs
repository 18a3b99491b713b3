//! The bundled fixture gallery: every gallery group and group algebra plus
//! derived braces, matched pairs, post-Hopf structures, Rota-Baxter
//! operators and inputs for the remaining construct subcommands.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use hopfpi::brace::{opposite_brace, trivial_brace};
use hopfpi::gallery::{gallery_algebra, gallery_groups};
use hopfpi::linalg::basis_vector;
use hopfpi::matched_pair::brace_to_matched_pair;
use hopfpi::post_hopf::post_hopf_from_brace;
use hopfpi::rota_baxter::antipode_rb;
use hopfpi::smash::v4_swap_example;
use hopfpi::{DenseMatrix, Factorization, Field, FiniteGroup, HopfPiAlgebra};

use crate::error::CliError;
use crate::format::{encode, Document, GroupWithGradings, Structure};

const POST_HOPF_KEYS: [&str; 4] = ["Z2/identity", "V4/first", "S3/trivial", "S3/sign"];
const MATCHED_PAIR_KEYS: [&str; 2] = ["V4/first", "S3/sign"];

/// File stem for a gallery key such as `S3/sign`.
pub fn stem(key: &str) -> String {
    key.replace('/', "-").to_lowercase()
}

fn algebra(f: Field, key: &str) -> HopfPiAlgebra {
    gallery_algebra(f, key).expect("gallery key")
}

fn rb(h: &HopfPiAlgebra) -> Result<Structure, CliError> {
    let s = antipode_rb(h)?;
    Ok(Structure::RotaBaxter { carrier: s.carrier().clone(), operator: s.operator().clone() })
}

/// Relative path and document of every fixture, in a fixed order.
pub fn gallery_documents() -> Result<Vec<(String, Document)>, CliError> {
    let f = Field::Rational;
    let mut out: Vec<(String, Structure)> = Vec::new();
    for g in gallery_groups() {
        let gradings = g.gradings.iter().map(|gr| (gr.name.clone(), gr.hom.clone())).collect();
        out.push((
            format!("groups/{}.json", g.name.to_lowercase()),
            Structure::Group(GroupWithGradings { group: g.group.clone(), gradings }),
        ));
        for gr in &g.gradings {
            let key = format!("{}/{}", g.name, gr.name);
            let s = stem(&key);
            let h = algebra(f, &key);
            out.push((format!("braces/{s}-trivial.json"), Structure::Brace(trivial_brace(&h))));
            out.push((format!("braces/{s}-opposite.json"), Structure::Brace(opposite_brace(&h)?)));
            out.push((format!("rota-baxter/{s}-antipode.json"), rb(&h)?));
            out.push((format!("algebras/{s}.json"), Structure::Hopf(h)));
        }
    }
    for key in POST_HOPF_KEYS {
        let p = post_hopf_from_brace(&opposite_brace(&algebra(f, key))?)?;
        out.push((
            format!("post-hopf/{}-conjugation.json", stem(key)),
            Structure::PostHopf { base: p.base().clone(), triangle: p.triangle().clone() },
        ));
    }
    for key in MATCHED_PAIR_KEYS {
        let mp = brace_to_matched_pair(&opposite_brace(&algebra(f, key))?)?;
        out.push((format!("matched-pairs/{}-opposite.json", stem(key)), Structure::MatchedPair(mp)));
    }
    for (name, graded) in [("pimod", false), ("modlike", true)] {
        let (acting, target, action) = v4_swap_example(f, graded);
        out.push((format!("actions/v4-swap-{name}.json"), Structure::Action { acting, target, action }));
    }

    // k[V4] graded by the second coordinate: G spans H_e, K_α the first basis vector.
    let h = algebra(f, "V4/second");
    let first = || DenseMatrix::from_columns(f, 2, 1, |_| basis_vector(f, 2, 0));
    let fac = Factorization::new(DenseMatrix::identity(f, 2), vec![first(), first()]);
    out.push(("factorizations/v4-second.json".into(), Structure::Factorization { carrier: h.clone(), factorization: fac }));
    let degenerate = Factorization::new(first(), vec![DenseMatrix::identity(f, 2), DenseMatrix::identity(f, 2)]);
    out.push((
        "factorizations/v4-second-degenerate.json".into(),
        Structure::Factorization { carrier: h, factorization: degenerate },
    ));

    // conjugation by (12) on e,(12),(13),(23),(123),(132), indexed by Z/2
    let perm = [0, 1, 3, 2, 5, 4];
    let conj = DenseMatrix::from_columns(f, 6, 6, |j| basis_vector(f, 6, perm[j]));
    out.push((
        "automorphisms/s3-conjugation.json".into(),
        Structure::Automorphisms { group: Arc::new(FiniteGroup::cyclic(2)), matrices: vec![DenseMatrix::identity(f, 6), conj] },
    ));
    // the same conjugation on k[S3] graded by the sign: fibers e,(123),(132) | (12),(13),(23)
    let block = DenseMatrix::from_i64_rows(f, &[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
    out.push(("linear-maps/s3-sign-conjugation.json".into(), Structure::LinearMap { blocks: vec![block.clone(), block] }));

    Ok(out.into_iter().map(|(p, s)| (p, Document { field: f, structure: s })).collect())
}

/// Writes every fixture under `dir`, creating subdirectories.
pub fn write_gallery(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let io = |p: &Path, e: std::io::Error| CliError::Io { path: p.display().to_string(), reason: e.to_string() };
    let mut written = Vec::new();
    for (rel, doc) in gallery_documents()? {
        let path = dir.join(&rel);
        if let Some(parent) = path.parent() {
            std::fs::create_dir_all(parent).map_err(|e| io(parent, e))?;
        }
        std::fs::write(&path, encode(&doc)).map_err(|e| io(&path, e))?;
        written.push(path);
    }
    Ok(written)
}
