//! Properties of the constructions, sampled over the gallery algebras.

use hopfpi::brace::{check_antipode_brace_identity, check_brace, check_module_properties, opposite_brace, trivial_brace};
use hopfpi::braiding::{braiding_c, braiding_sigma, check_braid_equation};
use hopfpi::enumerate::{enumerate_group_rb, linearize_group_rb, DEFAULT_BOUND};
use hopfpi::gallery::{gallery_algebras, gallery_groups};
use hopfpi::hopf::{opposite, tensor_product};
use hopfpi::matched_pair::{bicrossed_product, brace_to_matched_pair, matched_pair_to_brace};
use hopfpi::post_hopf::{brace_from_post_hopf, post_hopf_from_brace};
use hopfpi::rota_baxter::{antipode_rb, brace_from_rb, check_rb, descendent_hopf};
use hopfpi::{DenseMatrix, Field, HopfPiAlgebra, HopfPiBrace, MatchedPair};
use proptest::prelude::*;

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::prime(5).unwrap()), Just(Field::prime(3).unwrap())]
}

/// Gallery algebras over an abelian grading group with total dimension at most 8.
fn abelian_algebra(f: Field, pick: usize) -> HopfPiAlgebra {
    let choices: Vec<HopfPiAlgebra> = gallery_algebras(f)
        .into_iter()
        .map(|(_, h)| h)
        .filter(|h| h.group().is_abelian() && h.space().total_dim() <= 8)
        .collect();
    choices[pick % choices.len()].clone()
}

fn brace(h: &HopfPiAlgebra, opposite_circle: bool) -> HopfPiBrace {
    if opposite_circle {
        opposite_brace(h).unwrap()
    } else {
        trivial_brace(h)
    }
}

fn small_matrix(f: Field, n: usize, data: &[i64]) -> DenseMatrix {
    DenseMatrix::new(f, n, n, data.iter().take(n * n).map(|&x| f.from_i64(x)).collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn kron_is_associative(f in field(), a in prop::collection::vec(-3i64..=3, 9), b in prop::collection::vec(-3i64..=3, 4), c in prop::collection::vec(-3i64..=3, 4), n in 1usize..=3) {
        let (a, b, c) = (small_matrix(f, n, &a), small_matrix(f, 2, &b), small_matrix(f, 2, &c));
        prop_assert_eq!(a.kron(&b).kron(&c), a.kron(&b.kron(&c)));
    }

    #[test]
    fn braces_satisfy_their_identities(f in field(), pick in 0usize..64, opp in any::<bool>()) {
        let b = brace(&abelian_algebra(f, pick), opp);
        prop_assert!(check_brace(&b).passed());
        prop_assert!(check_antipode_brace_identity(&b).passed());
        prop_assert!(check_module_properties(&b).passed());
    }

    #[test]
    fn matched_pair_roundtrip_is_exact(f in field(), pick in 0usize..64, opp in any::<bool>()) {
        let b = brace(&abelian_algebra(f, pick), opp);
        let mp = brace_to_matched_pair(&b).unwrap();
        let back = matched_pair_to_brace(&mp).unwrap();
        prop_assert_eq!(&back, &b);
        prop_assert_eq!(brace_to_matched_pair(&back).unwrap(), mp);
    }

    #[test]
    fn post_hopf_roundtrip_is_exact(f in field(), pick in 0usize..64, opp in any::<bool>()) {
        let b = brace(&abelian_algebra(f, pick), opp);
        let p = post_hopf_from_brace(&b).unwrap();
        let back = brace_from_post_hopf(&p).unwrap();
        prop_assert_eq!(&back, &b);
        let again = post_hopf_from_brace(&back).unwrap();
        prop_assert_eq!(again.triangle(), p.triangle());
    }

    #[test]
    fn both_braidings_satisfy_the_braid_equation(f in field(), pick in 0usize..64, opp in any::<bool>(), t in (0usize..8, 0usize..8, 0usize..8)) {
        let b = brace(&abelian_algebra(f, pick), opp);
        let n = b.group().size();
        let triple = [(t.0 % n, t.1 % n, t.2 % n)];
        prop_assert!(check_braid_equation(b.dot(), &braiding_c(&b).unwrap(), &triple).passed());
        prop_assert!(check_braid_equation(b.circle(), &braiding_sigma(b.circle()).unwrap(), &triple).passed());
    }

    #[test]
    fn trivial_bicrossed_product_is_the_tensor_product(f in field(), i in 0usize..64, j in 0usize..64) {
        let (k, h) = (abelian_algebra(f, i), abelian_algebra(f, j));
        let p = bicrossed_product(&MatchedPair::trivial(k.clone(), h.clone()).unwrap()).unwrap();
        let nh = h.group().size();
        for g in 0..k.group().size() {
            for a in 0..nh {
                prop_assert_eq!(p.dim(g * nh + a), k.dim(g) * h.dim(a));
            }
        }
        prop_assert_eq!(p, tensor_product(&k, &h).unwrap());
    }

    #[test]
    fn descendent_of_the_antipode_is_the_opposite(f in field(), pick in 0usize..64) {
        let h = abelian_algebra(f, pick);
        let (d, report) = descendent_hopf(&antipode_rb(&h).unwrap()).unwrap();
        prop_assert!(report.passed());
        prop_assert_eq!(d, opposite(&h).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn enumerated_operators_give_braces(pick in 0usize..64) {
        let choices: Vec<_> = gallery_groups()
            .into_iter()
            .filter(|g| g.group.size() <= 4)
            .flat_map(|g| g.gradings.into_iter().map(|gr| gr.hom))
            .collect();
        let deg = &choices[pick % choices.len()];
        for t in enumerate_group_rb(deg, DEFAULT_BOUND).unwrap() {
            let rb = linearize_group_rb(Field::Rational, deg, &t).unwrap();
            prop_assert!(check_rb(rb.carrier(), rb.operator()).unwrap().passed());
            let (_, report) = descendent_hopf(&rb).unwrap();
            prop_assert!(report.passed(), "{:?}", t);
            prop_assert!(check_brace(&brace_from_rb(&rb).unwrap()).passed());
        }
    }
}
