//! The crystal on the equioriented chain `1 -> 2 -> ... -> n`.
//!
//! With no relations every representation variety is a vector space, so each
//! dimension vector carries exactly one component and the component is the
//! vector itself.

use std::fmt::{self, Display};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::crystal::{CartanMatrix, Crystal, Op, OpKind, OperatorWord, RootLatticeWeight, WordTrace};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AnComponent {
    dims: Vec<u32>,
}

impl AnComponent {
    pub fn new(dims: Vec<u32>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidShape("a chain needs at least one vertex".into()));
        }
        Ok(AnComponent { dims })
    }

    pub fn zero(n: usize) -> Self {
        AnComponent { dims: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[u32] {
        &self.dims
    }

    pub fn total(&self) -> u32 {
        self.dims.iter().sum()
    }

    pub fn weight(&self) -> RootLatticeWeight {
        RootLatticeWeight::from_dims(&self.dims)
    }

    /// `nu_j`, with `nu_0 = nu_{n+1} = 0`.
    fn at(&self, j: usize) -> u32 {
        if j == 0 || j > self.dims.len() {
            0
        } else {
            self.dims[j - 1]
        }
    }

    fn with(&self, i: usize, delta: i32) -> Self {
        let mut dims = self.dims.clone();
        dims[i - 1] = dims[i - 1].checked_add_signed(delta).expect("dimension stays nonnegative");
        AnComponent { dims }
    }

    fn check(&self, i: usize) {
        assert!((1..=self.dims.len()).contains(&i), "color {i} is not a vertex of A_{}", self.dims.len());
    }
}

impl Display for AnComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dims.iter().map(|d| d.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for AnComponent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let dims = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad dimension {t:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        AnComponent::new(dims)
    }
}

pub fn an_apply_e(c: &AnComponent, i: usize) -> Option<AnComponent> {
    c.check(i);
    (c.at(i - 1) < c.at(i)).then(|| c.with(i, -1))
}

pub fn an_apply_f(c: &AnComponent, i: usize) -> Option<AnComponent> {
    c.check(i);
    (c.at(i - 1) <= c.at(i)).then(|| c.with(i, 1))
}

pub fn an_apply_e_star(c: &AnComponent, i: usize) -> Option<AnComponent> {
    c.check(i);
    (c.at(i) > c.at(i + 1)).then(|| c.with(i, -1))
}

pub fn an_apply_f_star(c: &AnComponent, i: usize) -> Option<AnComponent> {
    c.check(i);
    (c.at(i) >= c.at(i + 1)).then(|| c.with(i, 1))
}

pub fn an_apply_op(c: &AnComponent, op: &Op) -> Option<AnComponent> {
    match op.kind {
        OpKind::E => an_apply_e(c, op.color),
        OpKind::F => an_apply_f(c, op.color),
        OpKind::EStar => an_apply_e_star(c, op.color),
        OpKind::FStar => an_apply_f_star(c, op.color),
    }
}

pub fn an_apply_word(word: &OperatorWord, start: AnComponent) -> Result<WordTrace<AnComponent>> {
    if let Some(op) = word.ops().iter().find(|o| o.color == 0 || o.color > start.n()) {
        return Err(Error::UnknownVertex(op.color));
    }
    Ok(word.apply(start, |op, c| an_apply_op(c, op)))
}

/// `max(0, nu_i - nu_{i-1})`, the generic cokernel dimension at vertex `i`.
pub fn an_epsilon(c: &AnComponent, i: usize) -> i64 {
    c.check(i);
    (c.at(i) as i64 - c.at(i - 1) as i64).max(0)
}

pub fn an_phi(c: &AnComponent, i: usize) -> i64 {
    an_epsilon(c, i) + CartanMatrix::chain(c.n()).pairing(i, &c.weight()).expect("color checked")
}

/// `max(0, nu_i - nu_{i+1})`, the generic kernel dimension at vertex `i`.
pub fn an_epsilon_star(c: &AnComponent, i: usize) -> i64 {
    c.check(i);
    (c.at(i) as i64 - c.at(i + 1) as i64).max(0)
}

pub fn an_phi_star(c: &AnComponent, i: usize) -> i64 {
    an_epsilon_star(c, i) + CartanMatrix::chain(c.n()).pairing(i, &c.weight()).expect("color checked")
}

/// Reverses the dimension vector.
pub fn an_dual(c: &AnComponent) -> AnComponent {
    AnComponent { dims: c.dims.iter().rev().copied().collect() }
}

/// All dimension vectors of length `n` with total at most `bound`.
pub fn an_components_up_to(n: usize, bound: u32) -> Vec<AnComponent> {
    fn rec(n: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<AnComponent>) {
        if prefix.len() == n {
            out.push(AnComponent { dims: prefix.clone() });
            return;
        }
        for d in 0..=left {
            prefix.push(d);
            rec(n, left - d, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, bound, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| (a.total(), &a.dims).cmp(&(b.total(), &b.dims)));
    out
}

/// The word `e_n^{nu_n} ... e_2^{nu_2} e_1^{nu_1}`, which empties vertex 1
/// first, then vertex 2, and so on down to zero.
pub fn an_connectivity_word(c: &AnComponent) -> OperatorWord {
    (1..=c.n()).rev().fold(OperatorWord::default(), |w, i| w.then_power(OpKind::E, i, c.at(i) as usize))
}

#[derive(Clone, Debug)]
pub struct AnCrystal {
    cartan: CartanMatrix,
}

#[derive(Clone, Debug)]
pub struct AnStarCrystal {
    cartan: CartanMatrix,
}

impl AnCrystal {
    pub fn new(n: usize) -> Self {
        AnCrystal { cartan: CartanMatrix::chain(n) }
    }
}

impl AnStarCrystal {
    pub fn new(n: usize) -> Self {
        AnStarCrystal { cartan: CartanMatrix::chain(n) }
    }
}

impl Crystal for AnCrystal {
    type Element = AnComponent;

    fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }
    fn weight(&self, b: &AnComponent) -> RootLatticeWeight {
        b.weight()
    }
    fn epsilon(&self, b: &AnComponent, i: usize) -> i64 {
        an_epsilon(b, i)
    }
    fn phi(&self, b: &AnComponent, i: usize) -> i64 {
        an_phi(b, i)
    }
    fn e(&self, b: &AnComponent, i: usize) -> Option<AnComponent> {
        an_apply_e(b, i)
    }
    fn f(&self, b: &AnComponent, i: usize) -> Option<AnComponent> {
        an_apply_f(b, i)
    }
}

impl Crystal for AnStarCrystal {
    type Element = AnComponent;

    fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }
    fn weight(&self, b: &AnComponent) -> RootLatticeWeight {
        b.weight()
    }
    fn epsilon(&self, b: &AnComponent, i: usize) -> i64 {
        an_epsilon_star(b, i)
    }
    fn phi(&self, b: &AnComponent, i: usize) -> i64 {
        an_phi_star(b, i)
    }
    fn e(&self, b: &AnComponent, i: usize) -> Option<AnComponent> {
        an_apply_e_star(b, i)
    }
    fn f(&self, b: &AnComponent, i: usize) -> Option<AnComponent> {
        an_apply_f_star(b, i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> AnComponent {
        s.parse().unwrap()
    }

    #[test]
    fn e_examples() {
        assert_eq!(an_apply_e(&v("1,0"), 1), Some(v("0,0")));
        assert_eq!(an_apply_e(&v("2,2"), 2), None);
        assert_eq!(an_apply_e(&v("1,3,1"), 2), Some(v("1,2,1")));
    }

    #[test]
    fn f_examples() {
        assert_eq!(an_apply_f(&v("0,0,0"), 1), Some(v("1,0,0")));
        assert_eq!(an_apply_f(&v("3,1,0"), 2), None);
        assert_eq!(an_apply_f(&v("1,1,1"), 3), Some(v("1,1,2")));
    }

    #[test]
    fn star_examples() {
        assert_eq!(an_apply_e_star(&v("0,0,1"), 3), Some(v("0,0,0")));
        assert_eq!(an_apply_f_star(&v("1,2"), 1), None);
        assert_eq!(an_apply_f_star(&v("2,1,1"), 2), Some(v("2,2,1")));
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(an_epsilon(&v("3,1"), 1), 3);
        assert_eq!(an_epsilon(&v("2,2"), 2), 0);
        assert_eq!(an_epsilon(&v("0,5"), 2), 5);
    }

    #[test]
    fn dual_examples() {
        assert_eq!(an_dual(&v("1,2,3")), v("3,2,1"));
        assert_eq!(an_dual(&an_dual(&v("4,0,7"))), v("4,0,7"));
        let c = v("2,1,1");
        assert_eq!(an_apply_e_star(&c, 2), None);
        assert_eq!(an_apply_e(&an_dual(&c), 2).map(|x| an_dual(&x)), None);
    }

    #[test]
    fn duality_conjugation() {
        for n in 1..=4 {
            for c in an_components_up_to(n, 6) {
                for i in 1..=n {
                    let a = n - i + 1;
                    assert_eq!(an_apply_e_star(&c, i), an_apply_e(&an_dual(&c), a).map(|x| an_dual(&x)));
                    assert_eq!(an_apply_f_star(&c, i), an_apply_f(&an_dual(&c), a).map(|x| an_dual(&x)));
                    assert_eq!(an_epsilon_star(&c, i), an_epsilon(&an_dual(&c), a));
                }
            }
        }
    }

    #[test]
    fn connectivity_word_empties() {
        for c in an_components_up_to(4, 6) {
            let w = an_connectivity_word(&c);
            assert_eq!(an_apply_word(&w, c.clone()).unwrap().result, Some(AnComponent::zero(4)), "{c}");
        }
    }
}
