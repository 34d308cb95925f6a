mod common;

use std::collections::HashSet;

use common::{morphism_strategy, parse, FIXTURES};
use proptest::prelude::*;
use subst_core::conjugacy::{
    check_right_conjugate, conjugacy_extremes, conjugate_chain, markedness, shift_right_once,
};
use subst_core::factors::build_factor_index;
use subst_core::word::{longest_common_prefix, longest_common_suffix, Word};
use subst_core::{Error, Morphism};

/// Extremes read off the periodic extensions of the images: `φ_L` rotates
/// each image left by the common prefix length of the `φ(α)^ω`, `φ_R`
/// rotates right by the common suffix length of the left-infinite powers.
fn extremes_by_periodic_extension(phi: &Morphism) -> Option<(Morphism, Morphism, Word)> {
    let reps = 2 * phi.image_lengths().iter().sum::<usize>() + 2;
    let powers: Vec<Word> = phi.images().iter().map(|img| img.pow(reps)).collect();
    let lcp = longest_common_prefix(powers.iter().map(|w| w.as_slice()));
    let lcs = longest_common_suffix(powers.iter().map(|w| w.as_slice()));
    if lcp.len() == powers.iter().map(|w| w.len()).min().unwrap() {
        return None;
    }
    let rotate = |k: usize, left: bool| {
        let images = phi
            .images()
            .iter()
            .map(|img| {
                let k = k % img.len();
                img.right_conjugate(if left { img.len() - k } else { k }).unwrap()
            })
            .collect();
        Morphism::new(phi.alphabet().clone(), images).unwrap()
    };
    let leftmost = rotate(lcp.len(), true);
    let rightmost = rotate(lcs.len(), false);
    let w = Word(lcs).concat(&lcp);
    Some((leftmost, rightmost, w))
}

fn shifting_revisits(phi: &Morphism) -> bool {
    let mut seen = HashSet::from([phi.clone()]);
    let mut cur = phi.clone();
    while let Some((next, _)) = shift_right_once(&cur).unwrap() {
        if !seen.insert(next.clone()) {
            return true;
        }
        cur = next;
    }
    false
}

fn acyclic() -> impl Strategy<Value = Morphism> {
    morphism_strategy(2..=4, 1..=5).prop_filter("acyclic", |phi| !phi.is_cyclic())
}

fn acyclic_primitive() -> impl Strategy<Value = Morphism> {
    acyclic().prop_filter("primitive", Morphism::is_primitive)
}

fn index_of_language(phi: &Morphism, n: usize) -> subst_core::factors::FactorIndex {
    let (_, power, a) = phi.prolongable_power().unwrap();
    build_factor_index(&power, a, n).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn extremes_match_periodic_extension_oracle(phi in acyclic()) {
        let ext = conjugacy_extremes(&phi).unwrap();
        let (leftmost, rightmost, w) = extremes_by_periodic_extension(&phi).unwrap();
        prop_assert_eq!(&ext.leftmost, &leftmost);
        prop_assert_eq!(&ext.rightmost, &rightmost);
        prop_assert_eq!(&ext.w, &w);
        prop_assert!(check_right_conjugate(&ext.rightmost, &ext.leftmost, &ext.w).unwrap());
    }

    #[test]
    fn cyclic_iff_shifting_revisits(phi in morphism_strategy(1..=3, 1..=4)) {
        prop_assert_eq!(phi.is_cyclic(), shifting_revisits(&phi));
        prop_assert_eq!(phi.is_cyclic(), conjugacy_extremes(&phi) == Err(Error::Cyclic));
    }

    #[test]
    fn conjugates_share_incidence_matrix(phi in acyclic()) {
        let m = phi.incidence_matrix();
        for psi in conjugate_chain(&phi).unwrap() {
            prop_assert_eq!(psi.incidence_matrix(), m.clone());
        }
    }

    #[test]
    fn conjugacy_lifts_to_powers(phi in acyclic()) {
        let ext = conjugacy_extremes(&phi).unwrap();
        let (f, g) = (&ext.rightmost, &ext.leftmost);
        let mut wk = ext.w.clone();
        for k in 1..=3 {
            prop_assert!(check_right_conjugate(&f.power(k), &g.power(k), &wk).unwrap(), "k = {}", k);
            wk = f.apply(&wk).unwrap().concat(&ext.w);
        }
    }

    #[test]
    fn conjugacy_reverses(phi in acyclic()) {
        let ext = conjugacy_extremes(&phi).unwrap();
        prop_assert!(check_right_conjugate(
            &ext.leftmost.reversed(),
            &ext.rightmost.reversed(),
            &ext.w.reversed()
        ).unwrap());
    }

    #[test]
    fn extremes_are_idempotent(phi in acyclic()) {
        let ext = conjugacy_extremes(&phi).unwrap();
        for end in [&ext.leftmost, &ext.rightmost] {
            let again = conjugacy_extremes(end).unwrap();
            prop_assert_eq!(&again.leftmost, &ext.leftmost);
            prop_assert_eq!(&again.rightmost, &ext.rightmost);
            prop_assert_eq!(&again.w, &ext.w);
        }
    }

    #[test]
    fn marked_implies_injective(phi in acyclic()) {
        if markedness(&phi).unwrap().marked {
            prop_assert!(phi.is_injective().unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn primitive_conjugates_share_language(phi in acyclic_primitive()) {
        let base = index_of_language(&phi, 8);
        for psi in conjugate_chain(&phi).unwrap() {
            let other = index_of_language(&psi, 8);
            for n in 0..=8 {
                prop_assert_eq!(base.of_len(n).unwrap(), other.of_len(n).unwrap());
            }
        }
    }

    #[test]
    fn image_under_rightmost_then_w_is_a_factor(phi in acyclic_primitive()) {
        let ext = conjugacy_extremes(&phi).unwrap();
        let reach = 6 * ext.rightmost.max_image_len() + ext.w.len();
        let idx = index_of_language(&phi, reach);
        for n in 0..=6 {
            for u in idx.of_len(n).unwrap() {
                let v = ext.rightmost.apply(u).unwrap().concat(&ext.w);
                prop_assert!(idx.contains(&v), "{} ↦ {}", u, v);
            }
        }
    }
}

#[test]
fn fixtures_satisfy_extreme_relations() {
    for (name, spec) in FIXTURES {
        let phi = parse(spec);
        match conjugacy_extremes(&phi) {
            Ok(ext) => {
                let (l, r, w) = extremes_by_periodic_extension(&phi).unwrap();
                assert_eq!((ext.leftmost, ext.rightmost, ext.w), (l, r, w), "{name}");
            }
            Err(e) => panic!("{name}: {e}"),
        }
    }
}
