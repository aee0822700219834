//! Cartan data, root-lattice weights and the abstract crystal contract,
//! together with finite-fragment checkers for the crystal axioms and for
//! strict morphisms.

use std::collections::BTreeSet;
use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::GridQuiver;

/// A generalized Cartan matrix indexed by `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl CartanMatrix {
    /// Validates the three clauses of a generalized Cartan matrix.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidShape("Cartan matrix must be square".into()));
        }
        for i in 0..n {
            if rows[i][i] != 2 {
                return Err(Error::InvalidShape(format!("diagonal entry {} is not 2", i + 1)));
            }
            for j in 0..n {
                if i != j && (rows[i][j] > 0 || (rows[i][j] == 0) != (rows[j][i] == 0)) {
                    return Err(Error::InvalidShape(format!("entry ({}, {}) breaks the sign pattern", i + 1, j + 1)));
                }
            }
        }
        Ok(CartanMatrix { n, entries: rows.into_iter().flatten().collect() })
    }

    /// `A_ii = 2` and `A_ij = -#{arrows between i and j}`.
    pub fn from_arrows(num_vertices: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        let mut rows = vec![vec![0i64; num_vertices]; num_vertices];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(s, t) in arrows {
            if s == 0 || s > num_vertices {
                return Err(Error::UnknownVertex(s));
            }
            if t == 0 || t > num_vertices {
                return Err(Error::UnknownVertex(t));
            }
            if s == t {
                return Err(Error::QuiverLoop(s));
            }
            rows[s - 1][t - 1] -= 1;
            rows[t - 1][s - 1] -= 1;
        }
        CartanMatrix::new(rows)
    }

    pub fn from_quiver(q: &GridQuiver) -> Self {
        let arrows: Vec<_> = q.arrows().iter().map(|a| (a.source, a.target)).collect();
        CartanMatrix::from_arrows(q.num_vertices(), &arrows).expect("grid quivers have no loops")
    }

    /// Cartan matrix of the `A_n` chain.
    pub fn chain(n: usize) -> Self {
        CartanMatrix::from_quiver(&GridQuiver::new(&[n]).expect("n >= 1"))
    }

    /// Cartan matrix of the commutative square, vertices numbered `1..4`.
    pub fn square() -> Self {
        CartanMatrix::from_quiver(&GridQuiver::new(&[2, 2]).expect("valid shape"))
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// 1-based entry `A_ij`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        assert!((1..=self.n).contains(&i) && (1..=self.n).contains(&j), "index out of range");
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (1..=self.n).all(|i| (1..=self.n).all(|j| self.entry(i, j) == self.entry(j, i)))
    }

    /// `<h_i, w> = sum_j A_ij c_j`.
    pub fn pairing(&self, i: usize, w: &RootLatticeWeight) -> Result<i64> {
        if i == 0 || i > self.n {
            return Err(Error::UnknownVertex(i));
        }
        if w.coeffs.len() != self.n {
            return Err(Error::InvalidShape(format!(
                "weight has {} coefficients, expected {}",
                w.coeffs.len(),
                self.n
            )));
        }
        Ok(w.coeffs.iter().enumerate().map(|(j, c)| self.entry(i, j + 1) * c).sum())
    }

    /// The same matrix with indices renamed by `perm`, so that the new
    /// `(i, j)` entry is the old `(perm(i), perm(j))` entry.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let rows = (1..=self.n).map(|i| (1..=self.n).map(|j| self.entry(perm[i - 1], perm[j - 1])).collect()).collect();
        CartanMatrix::new(rows).expect("relabelling preserves the Cartan conditions")
    }
}

/// An element `sum_i c_i alpha_i` of the root lattice.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RootLatticeWeight {
    pub coeffs: Vec<i64>,
}

impl RootLatticeWeight {
    pub fn zero(n: usize) -> Self {
        RootLatticeWeight { coeffs: vec![0; n] }
    }

    /// `-sum_i d_i alpha_i`.
    pub fn from_dims<T: Copy + Into<i64>>(dims: &[T]) -> Self {
        RootLatticeWeight { coeffs: dims.iter().map(|&d| -d.into()).collect() }
    }

    pub fn simple_root(n: usize, i: usize) -> Self {
        let mut w = Self::zero(n);
        w.coeffs[i - 1] = 1;
        w
    }

    /// `self + k alpha_i`.
    pub fn shifted(&self, i: usize, k: i64) -> Self {
        let mut w = self.clone();
        w.coeffs[i - 1] += k;
        w
    }

    pub fn is_nonpositive(&self) -> bool {
        self.coeffs.iter().all(|&c| c <= 0)
    }
}

/// A Kashiwara crystal over a Cartan matrix, with colors `1..=n`.
///
/// `e` and `f` return `None` for the value 0 of the definition. Weights,
/// `epsilon` and `phi` are integer valued, so `phi = -inf` never occurs.
pub trait Crystal {
    type Element: Clone + Eq + Ord + Hash + Debug;

    fn cartan(&self) -> &CartanMatrix;
    fn weight(&self, b: &Self::Element) -> RootLatticeWeight;
    fn epsilon(&self, b: &Self::Element, i: usize) -> i64;
    fn phi(&self, b: &Self::Element, i: usize) -> i64;
    fn e(&self, b: &Self::Element, i: usize) -> Option<Self::Element>;
    fn f(&self, b: &Self::Element, i: usize) -> Option<Self::Element>;

    fn colors(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.cartan().size()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation<E> {
    /// Axiom number 1 to 5.
    pub axiom: u8,
    pub element: E,
    pub color: usize,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport<E> {
    pub elements_checked: usize,
    /// `f` images outside the declared bound, skipped rather than judged.
    pub skipped: usize,
    pub violations: Vec<AxiomViolation<E>>,
}

impl<E> AxiomReport<E> {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn count(&self, axiom: u8) -> usize {
        self.violations.iter().filter(|v| v.axiom == axiom).count()
    }
}

/// Checks the five crystal axioms on `fragment`.
///
/// `in_bound` decides whether an `f` image lies in the explored region; images
/// outside it are skipped. Axiom (5) holds vacuously for integer-valued `phi`.
pub fn check_crystal_axioms<C: Crystal>(
    crystal: &C,
    fragment: &[C::Element],
    in_bound: impl Fn(&C::Element) -> bool,
) -> AxiomReport<C::Element> {
    let cartan = crystal.cartan();
    let mut report = AxiomReport { elements_checked: fragment.len(), skipped: 0, violations: Vec::new() };
    let mut flag = |axiom: u8, b: &C::Element, i: usize, detail: String| {
        report.violations.push(AxiomViolation { axiom, element: b.clone(), color: i, detail });
    };
    let mut skipped = 0;
    for b in fragment {
        let wt = crystal.weight(b);
        for i in crystal.colors() {
            let eps = crystal.epsilon(b, i);
            let phi = crystal.phi(b, i);
            let pairing = cartan.pairing(i, &wt).expect("weight matches the Cartan matrix");
            if phi != eps + pairing {
                flag(1, b, i, format!("phi = {phi}, eps + <h,wt> = {}", eps + pairing));
            }
            if let Some(up) = crystal.e(b, i) {
                let (w2, e2, p2) = (crystal.weight(&up), crystal.epsilon(&up, i), crystal.phi(&up, i));
                if w2 != wt.shifted(i, 1) || e2 != eps - 1 || p2 != phi + 1 {
                    flag(2, b, i, format!("e image {up:?}: wt {:?}, eps {e2}, phi {p2}", w2.coeffs));
                }
                if crystal.f(&up, i).as_ref() != Some(b) {
                    flag(4, b, i, format!("f(e(b)) != b for e(b) = {up:?}"));
                }
            }
            match crystal.f(b, i) {
                Some(down) if in_bound(&down) => {
                    let (w2, e2, p2) = (crystal.weight(&down), crystal.epsilon(&down, i), crystal.phi(&down, i));
                    if w2 != wt.shifted(i, -1) || e2 != eps + 1 || p2 != phi - 1 {
                        flag(3, b, i, format!("f image {down:?}: wt {:?}, eps {e2}, phi {p2}", w2.coeffs));
                    }
                    if crystal.e(&down, i).as_ref() != Some(b) {
                        flag(4, b, i, format!("e(f(b)) != b for f(b) = {down:?}"));
                    }
                }
                Some(_) => skipped += 1,
                None => {}
            }
        }
    }
    report.skipped = skipped;
    report
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismViolation<E> {
    /// 1: weight and statistics, 2: commutes with `e`, 3: commutes with `f`.
    pub clause: u8,
    pub element: E,
    pub color: usize,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismReport<E> {
    pub elements_checked: usize,
    pub violations: Vec<MorphismViolation<E>>,
}

impl<E> MorphismReport<E> {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn count(&self, clause: u8) -> usize {
        self.violations.iter().filter(|v| v.clause == clause).count()
    }
}

/// Checks that `map` is a strict morphism on `fragment`: it preserves weight,
/// `epsilon` and `phi` wherever the image is nonzero, and commutes with every
/// `e_i` and `f_i` (with 0 sent to 0). `f` images failing `in_bound` are skipped.
pub fn check_strict_morphism<D: Crystal, C: Crystal>(
    domain: &D,
    codomain: &C,
    fragment: &[D::Element],
    map: impl Fn(&D::Element) -> Option<C::Element>,
    in_bound: impl Fn(&D::Element) -> bool,
) -> MorphismReport<D::Element> {
    let mut violations = Vec::new();
    let mut flag = |clause: u8, b: &D::Element, i: usize, detail: String| {
        violations.push(MorphismViolation { clause, element: b.clone(), color: i, detail });
    };
    for b in fragment {
        let image = map(b);
        if let Some(y) = &image {
            if codomain.weight(y) != domain.weight(b) {
                flag(1, b, 0, format!("weight {:?} sent to {:?}", domain.weight(b).coeffs, codomain.weight(y).coeffs));
            }
        }
        for i in domain.colors() {
            if let Some(y) = &image {
                if codomain.epsilon(y, i) != domain.epsilon(b, i) || codomain.phi(y, i) != domain.phi(b, i) {
                    flag(1, b, i, format!("(eps, phi) not preserved at {y:?}"));
                }
            }
            let lhs = domain.e(b, i).and_then(|x| map(&x));
            let rhs = image.as_ref().and_then(|y| codomain.e(y, i));
            if lhs != rhs {
                flag(2, b, i, format!("map(e b) = {lhs:?}, e(map b) = {rhs:?}"));
            }
            match domain.f(b, i) {
                Some(x) if !in_bound(&x) => {}
                fb => {
                    let lhs = fb.and_then(|x| map(&x));
                    let rhs = image.as_ref().and_then(|y| codomain.f(y, i));
                    if lhs != rhs {
                        flag(3, b, i, format!("map(f b) = {lhs:?}, f(map b) = {rhs:?}"));
                    }
                }
            }
        }
    }
    MorphismReport { elements_checked: fragment.len(), violations }
}

/// A crystal with colors renamed: color `i` here is color `perm[i-1]` of the
/// inner crystal, and weight coefficients are permuted the same way.
pub struct Relabeled<C> {
    inner: C,
    perm: Vec<usize>,
    cartan: CartanMatrix,
}

impl<C: Crystal> Relabeled<C> {
    pub fn new(inner: C, perm: Vec<usize>) -> Self {
        let n = inner.cartan().size();
        let sorted: BTreeSet<_> = perm.iter().copied().collect();
        assert!(perm.len() == n && sorted == (1..=n).collect(), "not a permutation of 1..={n}");
        let cartan = inner.cartan().relabel(&perm);
        Relabeled { inner, perm, cartan }
    }

    pub fn inner(&self) -> &C {
        &self.inner
    }
}

impl<C: Crystal> Crystal for Relabeled<C> {
    type Element = C::Element;

    fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }
    fn weight(&self, b: &C::Element) -> RootLatticeWeight {
        let w = self.inner.weight(b);
        RootLatticeWeight { coeffs: self.perm.iter().map(|&p| w.coeffs[p - 1]).collect() }
    }
    fn epsilon(&self, b: &C::Element, i: usize) -> i64 {
        self.inner.epsilon(b, self.perm[i - 1])
    }
    fn phi(&self, b: &C::Element, i: usize) -> i64 {
        self.inner.phi(b, self.perm[i - 1])
    }
    fn e(&self, b: &C::Element, i: usize) -> Option<C::Element> {
        self.inner.e(b, self.perm[i - 1])
    }
    fn f(&self, b: &C::Element, i: usize) -> Option<C::Element> {
        self.inner.f(b, self.perm[i - 1])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum OpKind {
    E,
    F,
    EStar,
    FStar,
}

/// A single Kashiwara operator such as `f4` or `e*2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Op {
    pub kind: OpKind,
    pub color: usize,
}

impl Op {
    pub fn new(kind: OpKind, color: usize) -> Self {
        Op { kind, color }
    }
}

impl Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            OpKind::E => "e",
            OpKind::F => "f",
            OpKind::EStar => "e*",
            OpKind::FStar => "f*",
        };
        write!(f, "{name}{}", self.color)
    }
}

impl FromStr for Op {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, rest) = if let Some(r) = s.strip_prefix("e*") {
            (OpKind::EStar, r)
        } else if let Some(r) = s.strip_prefix("f*") {
            (OpKind::FStar, r)
        } else if let Some(r) = s.strip_prefix('e') {
            (OpKind::E, r)
        } else if let Some(r) = s.strip_prefix('f') {
            (OpKind::F, r)
        } else {
            return Err(Error::Parse(format!("operator {s:?} must start with e, f, e* or f*")));
        };
        let color = rest
            .trim_start_matches('_')
            .parse::<usize>()
            .ok()
            .filter(|&c| c >= 1)
            .ok_or_else(|| Error::Parse(format!("operator {s:?} has no valid color")))?;
        Ok(Op { kind, color })
    }
}

/// A word of operators written in operator notation: the rightmost letter is
/// applied first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OperatorWord {
    ops: Vec<Op>,
}

/// Every intermediate value of a word application, starting with the input.
/// If a step returns 0, `states` stops at the last nonzero value and
/// `result` is `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordTrace<T> {
    pub states: Vec<T>,
    pub result: Option<T>,
}

impl OperatorWord {
    pub fn new(ops: Vec<Op>) -> Self {
        OperatorWord { ops }
    }

    /// Appends `op^k` on the right, so it acts before everything already present.
    pub fn then_power(mut self, kind: OpKind, color: usize, k: usize) -> Self {
        self.ops.extend(std::iter::repeat(Op::new(kind, color)).take(k));
        self
    }

    /// Letters as written, leftmost first.
    pub fn ops(&self) -> &[Op] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// Letters in application order.
    pub fn application_order(&self) -> impl Iterator<Item = &Op> {
        self.ops.iter().rev()
    }

    pub fn max_color(&self) -> usize {
        self.ops.iter().map(|o| o.color).max().unwrap_or(0)
    }

    pub fn apply<T: Clone>(&self, start: T, mut step: impl FnMut(&Op, &T) -> Option<T>) -> WordTrace<T> {
        let mut states = vec![start];
        for op in self.application_order() {
            match step(op, states.last().expect("nonempty")) {
                Some(next) => states.push(next),
                None => return WordTrace { states, result: None },
            }
        }
        let result = states.last().cloned();
        WordTrace { states, result }
    }

    /// Applies a word of plain `e`/`f` letters in a crystal.
    pub fn apply_in<C: Crystal>(&self, crystal: &C, start: C::Element) -> Result<WordTrace<C::Element>> {
        if let Some(op) = self.ops.iter().find(|o| matches!(o.kind, OpKind::EStar | OpKind::FStar)) {
            return Err(Error::Parse(format!("{op} is not an operator of this crystal")));
        }
        if let Some(op) = self.ops.iter().find(|o| o.color > crystal.cartan().size()) {
            return Err(Error::UnknownVertex(op.color));
        }
        Ok(self.apply(start, |op, x| match op.kind {
            OpKind::E => crystal.e(x, op.color),
            _ => crystal.f(x, op.color),
        }))
    }
}

impl Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.ops.iter().map(|o| o.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for OperatorWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let ops = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Op>>>()?;
        Ok(OperatorWord { ops })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_of_small_quivers() {
        let a2 = CartanMatrix::from_arrows(2, &[(1, 2)]).unwrap();
        assert_eq!(a2.rows(), vec![vec![2, -1], vec![-1, 2]]);
        let single = CartanMatrix::from_arrows(1, &[]).unwrap();
        assert_eq!(single.rows(), vec![vec![2]]);
        assert_eq!(CartanMatrix::from_arrows(2, &[(1, 1)]), Err(Error::QuiverLoop(1)));
        assert!(CartanMatrix::from_arrows(2, &[(1, 3)]).is_err());
    }

    #[test]
    fn square_cartan() {
        let a = CartanMatrix::square();
        assert_eq!(a.rows(), vec![vec![2, -1, -1, 0], vec![-1, 2, 0, -1], vec![-1, 0, 2, -1], vec![0, -1, -1, 2]]);
        assert!(a.is_symmetric());
        assert_eq!(a.relabel(&[4, 3, 2, 1]), a);
    }

    #[test]
    fn pairing_examples() {
        let a = CartanMatrix::square();
        assert_eq!(a.pairing(1, &RootLatticeWeight { coeffs: vec![-1, 0, 0, 0] }).unwrap(), -2);
        assert_eq!(a.pairing(1, &RootLatticeWeight::from_dims(&[1u32, 1, 1, 2])).unwrap(), 0);
        let a2 = CartanMatrix::chain(2);
        assert_eq!(a2.pairing(1, &RootLatticeWeight { coeffs: vec![0, -1] }).unwrap(), 1);
        assert_eq!(a.pairing(5, &RootLatticeWeight::zero(4)), Err(Error::UnknownVertex(5)));
    }

    #[test]
    fn rejects_non_cartan() {
        assert!(CartanMatrix::new(vec![vec![2, 1], vec![1, 2]]).is_err());
        assert!(CartanMatrix::new(vec![vec![2, -1], vec![0, 2]]).is_err());
        assert!(CartanMatrix::new(vec![vec![1]]).is_err());
    }

    #[test]
    fn word_parsing_and_order() {
        let w: OperatorWord = "f4 f4 e*2 f*1".parse().unwrap();
        assert_eq!(w.to_string(), "f4 f4 e*2 f*1");
        let first = w.application_order().next().unwrap();
        assert_eq!(*first, Op::new(OpKind::FStar, 1));
        assert!("g2".parse::<OperatorWord>().is_err());
        assert!("f0".parse::<OperatorWord>().is_err());
        assert!("".parse::<OperatorWord>().unwrap().is_empty());
    }

    #[test]
    fn word_application_stops_at_zero() {
        let w: OperatorWord = "f1 f2 f3".parse().unwrap();
        let trace = w.apply(0i32, |op, x| if op.color == 2 { None } else { Some(x + op.color as i32) });
        assert_eq!(trace.states, vec![0, 3]);
        assert_eq!(trace.result, None);
    }
}
