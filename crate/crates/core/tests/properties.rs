use proptest::prelude::*;

use crystal_grid::an::{an_apply_e, an_apply_f, an_dual, an_epsilon, an_epsilon_star, AnComponent};
use crystal_grid::binfty::{reachable, IotaSequence, PolyhedralModel};
use crystal_grid::crystal::{Crystal, OpKind, OperatorWord};
use crystal_grid::g22::{
    apply_e, apply_e_star, apply_f, apply_f_star, apply_word, connectivity_word, enumerate_components, epsilon,
    epsilon_prime, involution, Component2x2,
};

fn component() -> impl Strategy<Value = Component2x2> {
    (prop::array::uniform4(0u32..6), any::<prop::sample::Index>()).prop_map(|(d, k)| {
        let list = enumerate_components(d);
        list[k.index(list.len())]
    })
}

fn chain() -> impl Strategy<Value = AnComponent> {
    prop::collection::vec(0u32..6, 1..6).prop_map(|d| AnComponent::new(d).unwrap())
}

fn f_word(max_len: usize) -> impl Strategy<Value = OperatorWord> {
    prop::collection::vec(1usize..=4, 0..=max_len)
        .prop_map(|colors| colors.into_iter().fold(OperatorWord::default(), |w, i| w.then_power(OpKind::F, i, 1)))
}

proptest! {
    #[test]
    fn dual_is_an_involution(c in component()) {
        prop_assert_eq!(c.dual().dual(), c);
    }

    #[test]
    fn e_and_f_are_inverse(c in component(), i in 1usize..=4) {
        if let Some(up) = apply_e(&c, i) {
            prop_assert_eq!(apply_f(&up, i), Some(c));
        }
        if let Some(down) = apply_f(&c, i) {
            prop_assert_eq!(apply_e(&down, i), Some(c));
        }
    }

    #[test]
    fn star_operators_are_conjugate(c in component(), i in 1usize..=4) {
        let a = involution(i);
        prop_assert_eq!(apply_e_star(&c, i), apply_e(&c.dual(), a).map(|x| x.dual()));
        prop_assert_eq!(apply_f_star(&c, i), apply_f(&c.dual(), a).map(|x| x.dual()));
    }

    #[test]
    fn epsilon_prime_bounded_by_epsilon(c in component(), i in 1usize..=4) {
        let ep = epsilon_prime(&c, i).finite().unwrap();
        prop_assert!(i64::from(ep) <= epsilon(&c, i));
    }

    #[test]
    fn connectivity_word_reaches_highest(c in component()) {
        let word = connectivity_word(&c);
        prop_assert_eq!(word.len() as u32, c.total());
        prop_assert_eq!(apply_word(&word, c).unwrap().result, Some(Component2x2::highest()));
    }

    #[test]
    fn f_words_from_highest_stay_valid(w in f_word(10)) {
        let trace = apply_word(&w, Component2x2::highest()).unwrap();
        if let Some(end) = trace.result {
            prop_assert_eq!(end.total() as usize, w.len());
        }
    }

    #[test]
    fn chain_e_f_inverse(c in chain(), i in 1usize..=5) {
        prop_assume!(i <= c.n());
        if let Some(up) = an_apply_e(&c, i) {
            prop_assert_eq!(an_apply_f(&up, i), Some(c.clone()));
        }
        if let Some(down) = an_apply_f(&c, i) {
            prop_assert_eq!(an_apply_e(&down, i), Some(c.clone()));
        }
    }

    #[test]
    fn chain_dual_swaps_statistics(c in chain(), i in 1usize..=5) {
        let n = c.n();
        prop_assume!(i <= n);
        prop_assert_eq!(an_epsilon_star(&c, i), an_epsilon(&an_dual(&c), n + 1 - i));
    }

    #[test]
    fn binfty_e_undoes_f(w in f_word(6), i in 1usize..=4) {
        let model = PolyhedralModel::square(IotaSequence::standard()).unwrap();
        let x = model.evaluate(&w).unwrap();
        let y = model.f(&x, i).unwrap();
        prop_assert_eq!(model.epsilon(&y, i), model.epsilon(&x, i) + 1);
        prop_assert_eq!(model.e(&y, i), Some(x));
    }
}

#[test]
fn binfty_reachable_counts_grow() {
    let model = PolyhedralModel::square(IotaSequence::standard()).unwrap();
    let sizes: Vec<usize> = (0..=3).map(|k| reachable(&model, k).unwrap().len()).collect();
    assert_eq!(sizes[0], 1);
    assert_eq!(sizes[1], 5);
    assert!(sizes.windows(2).all(|w| w[0] < w[1]));
}
