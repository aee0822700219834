//! A truncated polyhedral model of `B(infinity)`.
//!
//! Elements are finitely supported sequences `x = (x_1, x_2, ...)` over a
//! periodic color sequence `iota`. With
//! `sigma_k(x) = x_k + sum_{j > k} A_{iota_k, iota_j} x_j`,
//! `epsilon_i(x)` is the maximum of `sigma_k` over positions of color `i`;
//! `f_i` raises `x_k` at the first position attaining it and `e_i` lowers it
//! at the last, provided `epsilon_i > 0`. Words of `f` letters applied to
//! zero stay inside the image of `B(infinity)`, so comparing the resulting
//! sequences decides equality in `B(infinity)`.

use serde::Serialize;

use crate::crystal::{CartanMatrix, Crystal, OpKind, OperatorWord, RootLatticeWeight};
use crate::error::{Error, Result};

pub const DEFAULT_LENGTH: usize = 40;

/// The color sequence `iota`, truncated to `length` positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IotaSequence {
    pattern: Vec<usize>,
    length: usize,
}

impl IotaSequence {
    pub fn new(pattern: Vec<usize>, length: usize) -> Result<Self> {
        if pattern.is_empty() || pattern.contains(&0) {
            return Err(Error::Parse("color pattern must be nonempty with colors >= 1".into()));
        }
        if length < 2 * pattern.len() {
            return Err(Error::Truncation { length, reached: 2 * pattern.len() });
        }
        Ok(IotaSequence { pattern, length })
    }

    /// `(1, 2, 3, 4)` repeated, ten periods.
    pub fn standard() -> Self {
        IotaSequence::new(vec![1, 2, 3, 4], DEFAULT_LENGTH).expect("valid")
    }

    /// `(4, 3, 2, 1)` repeated, ten periods.
    pub fn reversed() -> Self {
        IotaSequence::new(vec![4, 3, 2, 1], DEFAULT_LENGTH).expect("valid")
    }

    pub fn with_length(&self, length: usize) -> Result<Self> {
        IotaSequence::new(self.pattern.clone(), length)
    }

    pub fn period(&self) -> usize {
        self.pattern.len()
    }

    pub fn len(&self) -> usize {
        self.length
    }

    pub fn is_empty(&self) -> bool {
        self.length == 0
    }

    pub fn pattern(&self) -> &[usize] {
        &self.pattern
    }

    /// Color of 1-based position `k`.
    pub fn color(&self, k: usize) -> usize {
        self.pattern[(k - 1) % self.pattern.len()]
    }

    /// Positions whose support would leave no full period of slack.
    pub fn guard_start(&self) -> usize {
        self.length - self.pattern.len() + 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ZInfElement {
    x: Vec<u32>,
}

impl ZInfElement {
    pub fn zero(iota: &IotaSequence) -> Self {
        ZInfElement { x: vec![0; iota.len()] }
    }

    pub fn coords(&self) -> &[u32] {
        &self.x
    }

    /// Coordinates up to the last nonzero one.
    pub fn support_prefix(&self) -> &[u32] {
        let end = self.x.iter().rposition(|&v| v != 0).map_or(0, |p| p + 1);
        &self.x[..end]
    }
}

/// Which extreme position `f` and `e` act on when several attain the maximum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TieRule {
    /// `f` at the first maximising position, `e` at the last.
    FirstForF,
    /// `f` at the last maximising position, `e` at the first.
    LastForF,
}

#[derive(Clone, Debug)]
pub struct PolyhedralModel {
    cartan: CartanMatrix,
    iota: IotaSequence,
    tie: TieRule,
}

impl PolyhedralModel {
    pub fn new(cartan: CartanMatrix, iota: IotaSequence) -> Result<Self> {
        PolyhedralModel::with_tie_rule(cartan, iota, TieRule::FirstForF)
    }

    pub fn with_tie_rule(cartan: CartanMatrix, iota: IotaSequence, tie: TieRule) -> Result<Self> {
        if let Some(&bad) = iota.pattern.iter().find(|&&c| c > cartan.size()) {
            return Err(Error::UnknownVertex(bad));
        }
        Ok(PolyhedralModel { cartan, iota, tie })
    }

    /// The model for the commutative square with the given color sequence.
    pub fn square(iota: IotaSequence) -> Result<Self> {
        PolyhedralModel::new(CartanMatrix::square(), iota)
    }

    pub fn iota(&self) -> &IotaSequence {
        &self.iota
    }

    pub fn zero(&self) -> ZInfElement {
        ZInfElement::zero(&self.iota)
    }

    /// `x_k + sum_{j > k} A_{iota_k iota_j} x_j` for 1-based `k`.
    pub fn sigma(&self, x: &ZInfElement, k: usize) -> i64 {
        let ck = self.iota.color(k);
        let tail: i64 =
            (k + 1..=self.iota.len()).map(|j| self.cartan.entry(ck, self.iota.color(j)) * x.x[j - 1] as i64).sum();
        x.x[k - 1] as i64 + tail
    }

    /// `(epsilon_i, first maximiser, last maximiser)`.
    fn extremes(&self, x: &ZInfElement, i: usize) -> (i64, usize, usize) {
        let mut best = i64::MIN;
        let (mut first, mut last) = (0, 0);
        for k in (1..=self.iota.len()).filter(|&k| self.iota.color(k) == i) {
            let s = self.sigma(x, k);
            if s > best {
                best = s;
                first = k;
                last = k;
            } else if s == best {
                last = k;
            }
        }
        (best, first, last)
    }

    pub fn epsilon(&self, x: &ZInfElement, i: usize) -> i64 {
        self.extremes(x, i).0
    }

    fn check_guard(&self, x: &ZInfElement) -> Result<()> {
        match x.x.iter().rposition(|&v| v != 0) {
            Some(p) if p + 1 >= self.iota.guard_start() => {
                Err(Error::Truncation { length: self.iota.len(), reached: p + 1 })
            }
            _ => Ok(()),
        }
    }

    /// `e_i` or `f_i`; `Ok(None)` is the value 0.
    pub fn apply(&self, x: &ZInfElement, kind: OpKind, i: usize) -> Result<Option<ZInfElement>> {
        if i == 0 || i > self.cartan.size() {
            return Err(Error::UnknownVertex(i));
        }
        let (eps, first, last) = self.extremes(x, i);
        let mut y = x.clone();
        match kind {
            OpKind::F => {
                let k = if self.tie == TieRule::FirstForF { first } else { last };
                y.x[k - 1] += 1;
            }
            OpKind::E => {
                if eps <= 0 {
                    return Ok(None);
                }
                let k = if self.tie == TieRule::FirstForF { last } else { first };
                y.x[k - 1] -= 1;
            }
            _ => return Err(Error::Parse("only e and f act on the polyhedral model".into())),
        }
        self.check_guard(&y)?;
        Ok(Some(y))
    }

    /// The image of the highest-weight element under a word of `f` letters.
    pub fn evaluate(&self, word: &OperatorWord) -> Result<ZInfElement> {
        if let Some(op) = word.ops().iter().find(|o| o.kind != OpKind::F) {
            return Err(Error::Parse(format!("{op}: only f letters may be evaluated from the highest weight")));
        }
        let mut x = self.zero();
        for op in word.application_order() {
            x = self.apply(&x, OpKind::F, op.color)?.expect("f is never zero here");
        }
        Ok(x)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub distinct: bool,
    #[serde(rename = "xA")]
    pub x_a: Vec<u32>,
    #[serde(rename = "xB")]
    pub x_b: Vec<u32>,
}

/// Whether two `f`-words send the highest-weight element of `B(infinity)` to
/// different elements.
pub fn words_distinct(model: &PolyhedralModel, a: &OperatorWord, b: &OperatorWord) -> Result<Comparison> {
    let xa = model.evaluate(a)?;
    let xb = model.evaluate(b)?;
    Ok(Comparison { distinct: xa != xb, x_a: xa.support_prefix().to_vec(), x_b: xb.support_prefix().to_vec() })
}

/// The model as a crystal. Operators panic if an image reaches the guard
/// band, so fragments must stay well inside the truncation.
impl Crystal for PolyhedralModel {
    type Element = ZInfElement;

    fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }
    fn weight(&self, b: &ZInfElement) -> RootLatticeWeight {
        let mut w = RootLatticeWeight::zero(self.cartan.size());
        for (k, &v) in b.x.iter().enumerate() {
            w.coeffs[self.iota.color(k + 1) - 1] -= v as i64;
        }
        w
    }
    fn epsilon(&self, b: &ZInfElement, i: usize) -> i64 {
        PolyhedralModel::epsilon(self, b, i)
    }
    fn phi(&self, b: &ZInfElement, i: usize) -> i64 {
        PolyhedralModel::epsilon(self, b, i) + self.cartan.pairing(i, &self.weight(b)).expect("color in range")
    }
    fn e(&self, b: &ZInfElement, i: usize) -> Option<ZInfElement> {
        self.apply(b, OpKind::E, i).expect("inside the truncation")
    }
    fn f(&self, b: &ZInfElement, i: usize) -> Option<ZInfElement> {
        self.apply(b, OpKind::F, i).expect("inside the truncation")
    }
}

/// Every element reachable from zero by at most `max_len` letters `f_i`.
pub fn reachable(model: &PolyhedralModel, max_len: usize) -> Result<Vec<ZInfElement>> {
    let mut layer = vec![model.zero()];
    let mut all = std::collections::BTreeSet::from([model.zero()]);
    for _ in 0..max_len {
        let mut next = Vec::new();
        for x in &layer {
            for i in 1..=model.cartan.size() {
                if let Some(y) = model.apply(x, OpKind::F, i)? {
                    if all.insert(y.clone()) {
                        next.push(y);
                    }
                }
            }
        }
        layer = next;
    }
    Ok(all.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::check_crystal_axioms;
    use crate::g22::counterexample_words;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn model() -> PolyhedralModel {
        PolyhedralModel::square(IotaSequence::standard()).unwrap()
    }

    #[test]
    fn sigma_examples() {
        let m = model();
        let zero = m.zero();
        assert!((1..=40).all(|k| m.sigma(&zero, k) == 0));
        let e1 = m.apply(&zero, OpKind::F, 1).unwrap().unwrap();
        assert_eq!(e1.coords()[0], 1);
        assert_eq!(m.sigma(&e1, 1), 1);
        assert_eq!(m.sigma(&e1, 5), 0);
    }

    #[test]
    fn f_from_zero_hits_first_position() {
        let m = model();
        for i in 1..=4 {
            let x = m.apply(&m.zero(), OpKind::F, i).unwrap().unwrap();
            assert_eq!(x.support_prefix().len(), i);
            assert_eq!(x.coords()[i - 1], 1);
        }
    }

    #[test]
    fn e_undoes_f_on_random_words() {
        let m = model();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let len = rng.gen_range(0..6);
            let word =
                OperatorWord::new((0..len).map(|_| crate::crystal::Op::new(OpKind::F, rng.gen_range(1..=4))).collect());
            let x = m.evaluate(&word).unwrap();
            for i in 1..=4 {
                let y = m.apply(&x, OpKind::F, i).unwrap().unwrap();
                assert_eq!(m.apply(&y, OpKind::E, i).unwrap(), Some(x.clone()));
                assert_eq!(m.epsilon(&y, i), m.epsilon(&x, i) + 1);
            }
        }
    }

    #[test]
    fn rank_one_chain() {
        let iota = IotaSequence::new(vec![1], 10).unwrap();
        let m = PolyhedralModel::new(CartanMatrix::chain(1), iota.clone()).unwrap();
        let mut x = m.zero();
        for _ in 0..3 {
            x = m.apply(&x, OpKind::F, 1).unwrap().unwrap();
        }
        assert_eq!(m.epsilon(&x, 1), 3);
        for _ in 0..3 {
            x = m.apply(&x, OpKind::E, 1).unwrap().unwrap();
        }
        assert_eq!(x, m.zero());
        assert_eq!(m.apply(&x, OpKind::E, 1).unwrap(), None);

        let other = PolyhedralModel::with_tie_rule(CartanMatrix::chain(1), iota, TieRule::LastForF).unwrap();
        assert!(matches!(other.apply(&other.zero(), OpKind::F, 1), Err(Error::Truncation { .. })));
    }

    #[test]
    fn axioms_on_short_words() {
        let m = model();
        let frag = reachable(&m, 4).unwrap();
        let report = check_crystal_axioms(&m, &frag, |_| true);
        assert!(report.is_clean(), "{:?}", &report.violations[..report.violations.len().min(3)]);
    }

    #[test]
    fn counterexample_separates() {
        let (a, b) = counterexample_words();
        for iota in [IotaSequence::standard(), IotaSequence::reversed()] {
            for len in [40, 80] {
                let m = PolyhedralModel::square(iota.with_length(len).unwrap()).unwrap();
                assert!(words_distinct(&m, &a, &b).unwrap().distinct);
            }
        }
        let same: OperatorWord = "f1".parse().unwrap();
        assert!(!words_distinct(&model(), &same, &same).unwrap().distinct);
    }

    #[test]
    fn non_f_words_rejected() {
        let w: OperatorWord = "e1".parse().unwrap();
        assert!(model().evaluate(&w).is_err());
        assert!(IotaSequence::new(vec![1, 2], 3).is_err());
    }

    #[test]
    fn guard_band_detected() {
        let m = PolyhedralModel::square(IotaSequence::new(vec![1, 2, 3, 4], 8).unwrap()).unwrap();
        let long: OperatorWord = "f1 f4 f3 f2 f1 f4 f3 f2 f1".parse().unwrap();
        assert!(matches!(m.evaluate(&long), Err(Error::Truncation { .. })));
    }
}
