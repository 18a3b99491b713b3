//! Small groups with named gradings, and the group algebras built from them.

use std::sync::Arc;

use crate::group::{FiniteGroup, Grading, GroupHom};
use crate::hopf::{group_algebra, HopfPiAlgebra};
use crate::scalar::Field;

pub fn z2() -> FiniteGroup {
    FiniteGroup::cyclic(2)
}

pub fn z4() -> FiniteGroup {
    FiniteGroup::cyclic(4)
}

/// Klein four-group `Z/2 × Z/2`, element `(a,b)` at index `2a + b`.
pub fn v4() -> FiniteGroup {
    z2().direct_product(&z2())
}

/// Permutations of `{1,2,3}` in cycle notation.
pub fn s3() -> FiniteGroup {
    let perms = vec![
        vec![0, 1, 2],
        vec![1, 0, 2],
        vec![2, 1, 0],
        vec![0, 2, 1],
        vec![1, 2, 0],
        vec![2, 0, 1],
    ];
    let names = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"];
    FiniteGroup::from_permutations(names.iter().map(|s| s.to_string()).collect(), &perms)
        .expect("S3")
}

/// Symmetries of a square: rotations `r^k` then reflections `s r^k`.
pub fn d4() -> FiniteGroup {
    let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { q.iter().map(|&i| p[i]).collect() };
    let r = vec![1, 2, 3, 0];
    let s = vec![0, 3, 2, 1];
    let mut rotations = vec![vec![0, 1, 2, 3]];
    for k in 1..4 {
        rotations.push(compose(&r, &rotations[k - 1]));
    }
    let reflections: Vec<Vec<usize>> = rotations.iter().map(|rk| compose(&s, rk)).collect();
    let perms: Vec<Vec<usize>> = rotations.into_iter().chain(reflections).collect();
    let names = ["e", "r", "r2", "r3", "s", "sr", "sr2", "sr3"];
    FiniteGroup::from_permutations(names.iter().map(|s| s.to_string()).collect(), &perms)
        .expect("D4")
}

/// Quaternion units; index `2u + neg` for `u` in `1, i, j, k`.
pub fn q8() -> FiniteGroup {
    // product of units u·v = (sign, unit)
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let table = (0..8)
        .map(|x| {
            (0..8)
                .map(|y| {
                    let (neg, u) = UNIT[x / 2][y / 2];
                    let sign = neg ^ (x % 2 == 1) ^ (y % 2 == 1);
                    2 * u + usize::from(sign)
                })
                .collect()
        })
        .collect();
    let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"];
    FiniteGroup::new(names.iter().map(|s| s.to_string()).collect(), table).expect("Q8")
}

fn hom(source: &Arc<FiniteGroup>, target: FiniteGroup, map: Vec<usize>) -> GroupHom {
    GroupHom::new(source.clone(), Arc::new(target), map).expect("gallery grading")
}

fn grading(name: &str, hom: GroupHom) -> Grading {
    Grading {
        name: name.to_string(),
        hom,
    }
}

/// A named group with the gradings used throughout the tests and fixtures.
#[derive(Clone, Debug)]
pub struct GalleryGroup {
    pub name: &'static str,
    pub group: Arc<FiniteGroup>,
    pub gradings: Vec<Grading>,
}

pub fn gallery_groups() -> Vec<GalleryGroup> {
    let mut out = Vec::new();

    let g = Arc::new(z2());
    out.push(GalleryGroup {
        name: "Z2",
        gradings: vec![
            grading("trivial", GroupHom::to_trivial(g.clone())),
            grading("identity", GroupHom::identity(g.clone())),
        ],
        group: g,
    });

    let g = Arc::new(z4());
    out.push(GalleryGroup {
        name: "Z4",
        gradings: vec![
            grading("trivial", GroupHom::to_trivial(g.clone())),
            grading("mod2", hom(&g, z2(), vec![0, 1, 0, 1])),
            grading("identity", GroupHom::identity(g.clone())),
        ],
        group: g,
    });

    let g = Arc::new(v4());
    out.push(GalleryGroup {
        name: "V4",
        gradings: vec![
            grading("trivial", GroupHom::to_trivial(g.clone())),
            grading("first", hom(&g, z2(), vec![0, 0, 1, 1])),
            grading("second", hom(&g, z2(), vec![0, 1, 0, 1])),
        ],
        group: g,
    });

    let g = Arc::new(s3());
    out.push(GalleryGroup {
        name: "S3",
        gradings: vec![
            grading("trivial", GroupHom::to_trivial(g.clone())),
            grading("sign", hom(&g, z2(), vec![0, 1, 1, 1, 0, 0])),
        ],
        group: g,
    });

    let g = Arc::new(d4());
    out.push(GalleryGroup {
        name: "D4",
        gradings: vec![
            grading("trivial", GroupHom::to_trivial(g.clone())),
            grading("reflection", hom(&g, z2(), vec![0, 0, 0, 0, 1, 1, 1, 1])),
            grading("klein", hom(&g, v4(), vec![0, 2, 0, 2, 1, 3, 1, 3])),
        ],
        group: g,
    });

    let g = Arc::new(q8());
    out.push(GalleryGroup {
        name: "Q8",
        gradings: vec![
            grading("trivial", GroupHom::to_trivial(g.clone())),
            grading("klein", hom(&g, v4(), vec![0, 0, 2, 2, 1, 1, 3, 3])),
            grading("i-kernel", hom(&g, z2(), vec![0, 0, 0, 0, 1, 1, 1, 1])),
        ],
        group: g,
    });
    out
}

/// Looks up a group by gallery name (`Z2`, `Z4`, `V4`, `S3`, `D4`, `Q8`).
pub fn gallery_group(name: &str) -> Option<GalleryGroup> {
    gallery_groups().into_iter().find(|g| g.name == name)
}

/// Every gallery group algebra, keyed `"<group>/<grading>"`.
pub fn gallery_algebras(field: Field) -> Vec<(String, HopfPiAlgebra)> {
    gallery_groups()
        .into_iter()
        .flat_map(|g| {
            g.gradings
                .into_iter()
                .map(move |gr| (format!("{}/{}", g.name, gr.name), group_algebra(field, &gr.hom)))
        })
        .collect()
}

pub fn gallery_algebra(field: Field, key: &str) -> Option<HopfPiAlgebra> {
    let (group, grading) = key.split_once('/')?;
    let g = gallery_group(group)?;
    let gr = g.gradings.into_iter().find(|gr| gr.name == grading)?;
    Some(group_algebra(field, &gr.hom))
}

/// `k[S3]` graded by the sign, the running example of the crate.
pub fn s3_sign(field: Field) -> HopfPiAlgebra {
    gallery_algebra(field, "S3/sign").expect("S3/sign")
}
