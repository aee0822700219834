//! The axiom and morphism checkers must reject structures that are wrong.

use crystal_grid::crystal::{
    check_crystal_axioms, check_strict_morphism, CartanMatrix, Crystal, Relabeled, RootLatticeWeight,
};
use crystal_grid::g22::{components_up_to, Component2x2, G22Crystal, G22StarCrystal};

const BOUND: u32 = 6;

/// `G22Crystal` with selected statistics shifted.
struct Corrupted {
    inner: G22Crystal,
    eps_shift: fn(&Component2x2, usize) -> i64,
    phi_shift: fn(&Component2x2, usize) -> i64,
}

impl Crystal for Corrupted {
    type Element = Component2x2;

    fn cartan(&self) -> &CartanMatrix {
        self.inner.cartan()
    }
    fn weight(&self, b: &Component2x2) -> RootLatticeWeight {
        self.inner.weight(b)
    }
    fn epsilon(&self, b: &Component2x2, i: usize) -> i64 {
        self.inner.epsilon(b, i) + (self.eps_shift)(b, i)
    }
    fn phi(&self, b: &Component2x2, i: usize) -> i64 {
        self.inner.phi(b, i) + (self.phi_shift)(b, i)
    }
    fn e(&self, b: &Component2x2, i: usize) -> Option<Component2x2> {
        self.inner.e(b, i)
    }
    fn f(&self, b: &Component2x2, i: usize) -> Option<Component2x2> {
        self.inner.f(b, i)
    }
}

fn fragment() -> Vec<Component2x2> {
    components_up_to(BOUND)
}

fn in_bound(c: &Component2x2) -> bool {
    c.total() <= BOUND
}

#[test]
fn genuine_structures_are_clean() {
    assert!(check_crystal_axioms(&G22Crystal::new(), &fragment(), in_bound).is_clean());
    assert!(check_crystal_axioms(&G22StarCrystal::new(), &fragment(), in_bound).is_clean());
}

#[test]
fn shifted_epsilon_breaks_axiom_one() {
    let bad = Corrupted { inner: G22Crystal::new(), eps_shift: |_, i| i64::from(i == 1), phi_shift: |_, _| 0 };
    let report = check_crystal_axioms(&bad, &fragment(), in_bound);
    assert_eq!(report.count(1), fragment().len());
    assert_eq!(report.count(2) + report.count(3) + report.count(4), 0);
}

#[test]
fn parity_shift_breaks_axioms_two_and_three() {
    // shifting eps and phi together keeps axiom (1) but not the unit steps
    let odd = |b: &Component2x2, _: usize| i64::from(b.total() % 2);
    let bad = Corrupted { inner: G22Crystal::new(), eps_shift: odd, phi_shift: odd };
    let report = check_crystal_axioms(&bad, &fragment(), in_bound);
    assert_eq!(report.count(1), 0);
    assert!(report.count(2) > 0);
    assert!(report.count(3) > 0);
    assert_eq!(report.count(4), 0);
}

#[test]
fn dual_is_a_strict_morphism() {
    let target = Relabeled::new(G22Crystal::new(), vec![4, 3, 2, 1]);
    let report = check_strict_morphism(&G22StarCrystal::new(), &target, &fragment(), |c| Some(c.dual()), in_bound);
    assert!(report.is_clean(), "{:?}", report.violations.first());
}

#[test]
fn dual_without_relabelling_fails() {
    let report =
        check_strict_morphism(&G22StarCrystal::new(), &G22Crystal::new(), &fragment(), |c| Some(c.dual()), in_bound);
    assert!(!report.is_clean());
}

#[test]
fn constant_map_fails_weight_clause() {
    let report = check_strict_morphism(
        &G22Crystal::new(),
        &G22Crystal::new(),
        &fragment(),
        |_| Some(Component2x2::highest()),
        in_bound,
    );
    assert!(report.count(1) > 0);
    assert!(report.count(3) > 0);
}

#[test]
fn identity_is_a_morphism() {
    let report = check_strict_morphism(&G22Crystal::new(), &G22Crystal::new(), &fragment(), |c| Some(*c), in_bound);
    assert!(report.is_clean());
}
