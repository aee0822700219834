//! The crystal on irreducible components of representation varieties of the
//! commutative square
//!
//! ```text
//! 3 -> 4
//! ^    ^
//! 1 -> 2
//! ```
//!
//! A component is a dimension vector `(d1, d2, d3, d4)` with a rank pair
//! `(r1, r2)`: `r1` is the rank of the stacked map out of vertex 1 and `r2` the
//! rank of the stacked map into vertex 4.

use std::fmt::{self, Display};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::crystal::{CartanMatrix, Crystal, Op, OpKind, OperatorWord, RootLatticeWeight, WordTrace};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Component2x2 {
    dims: [u32; 4],
    ranks: [u32; 2],
}

pub fn is_valid(dims: [u32; 4], ranks: [u32; 2]) -> bool {
    let [d1, d2, d3, d4] = dims;
    let [r1, r2] = ranks;
    let s = d2 + d3;
    if d1 + d4 >= s {
        r1 + r2 == s && r1 <= d1 && r2 <= d4
    } else {
        r1 == d1 && r2 == d4
    }
}

impl Component2x2 {
    pub fn new(dims: [u32; 4], ranks: [u32; 2]) -> Result<Self> {
        if is_valid(dims, ranks) {
            Ok(Component2x2 { dims, ranks })
        } else {
            Err(Error::InvalidComponent { dims, ranks })
        }
    }

    /// The component of the zero dimension vector.
    pub fn highest() -> Self {
        Component2x2 { dims: [0; 4], ranks: [0; 2] }
    }

    pub fn dims(&self) -> [u32; 4] {
        self.dims
    }

    pub fn ranks(&self) -> [u32; 2] {
        self.ranks
    }

    pub fn total(&self) -> u32 {
        self.dims.iter().sum()
    }

    pub fn weight(&self) -> RootLatticeWeight {
        RootLatticeWeight::from_dims(&self.dims)
    }

    /// `((d4, d3, d2, d1); (r2, r1))`, the component of the transposed,
    /// relabelled representation.
    pub fn dual(&self) -> Self {
        let [d1, d2, d3, d4] = self.dims;
        let [r1, r2] = self.ranks;
        Component2x2 { dims: [d4, d3, d2, d1], ranks: [r2, r1] }
    }

    fn shifted(&self, i: usize, di: i64, dr1: i64, dr2: i64) -> Self {
        let mut dims = self.dims;
        dims[i - 1] = (dims[i - 1] as i64 + di) as u32;
        let ranks = [(self.ranks[0] as i64 + dr1) as u32, (self.ranks[1] as i64 + dr2) as u32];
        match Component2x2::new(dims, ranks) {
            Ok(c) => c,
            Err(_) => panic!("case table produced ({dims:?}; {ranks:?}) from {self}: operator tables are inconsistent"),
        }
    }
}

impl Display for Component2x2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [d1, d2, d3, d4] = self.dims;
        let [r1, r2] = self.ranks;
        write!(f, "{d1},{d2},{d3},{d4}:{r1},{r2}")
    }
}

impl FromStr for Component2x2 {
    type Err = Error;

    /// Parses `d1,d2,d3,d4:r1,r2`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("component {s:?} is not of the form d1,d2,d3,d4:r1,r2"));
        let (d, r) = s.trim().split_once(':').ok_or_else(bad)?;
        let nums =
            |t: &str| t.split(',').map(|x| x.trim().parse::<u32>().map_err(|_| bad())).collect::<Result<Vec<_>>>();
        let dims: [u32; 4] = nums(d)?.try_into().map_err(|_| bad())?;
        let ranks: [u32; 2] = nums(r)?.try_into().map_err(|_| bad())?;
        Component2x2::new(dims, ranks)
    }
}

/// All components of the dimension vector `d`, by increasing `r1`.
pub fn enumerate_components(d: [u32; 4]) -> Vec<Component2x2> {
    let s = d[1] + d[2];
    if d[0] + d[3] < s {
        return vec![Component2x2 { dims: d, ranks: [d[0], d[3]] }];
    }
    (s.saturating_sub(d[3])..=d[0].min(s)).map(|r1| Component2x2 { dims: d, ranks: [r1, s - r1] }).collect()
}

/// Closed-form count of [`enumerate_components`].
pub fn component_count(d: [u32; 4]) -> u32 {
    let s = d[1] + d[2];
    if d[0] + d[3] >= s {
        d[0].min(s) - s.saturating_sub(d[3]) + 1
    } else {
        1
    }
}

/// Every dimension vector with entries summing to at most `bound`.
pub fn dims_up_to(bound: u32) -> Vec<[u32; 4]> {
    let mut out = Vec::new();
    for d1 in 0..=bound {
        for d2 in 0..=bound - d1 {
            for d3 in 0..=bound - d1 - d2 {
                for d4 in 0..=bound - d1 - d2 - d3 {
                    out.push([d1, d2, d3, d4]);
                }
            }
        }
    }
    out
}

/// Every component with total dimension at most `bound`.
pub fn components_up_to(bound: u32) -> Vec<Component2x2> {
    let mut out: Vec<_> = dims_up_to(bound).into_iter().flat_map(enumerate_components).collect();
    out.sort_by_key(|c| (c.total(), c.dims, c.ranks));
    out
}

/// Every component with each `d_i <= max`.
pub fn components_in_box(max: u32) -> Vec<Component2x2> {
    let mut out = Vec::new();
    for d1 in 0..=max {
        for d2 in 0..=max {
            for d3 in 0..=max {
                for d4 in 0..=max {
                    out.extend(enumerate_components([d1, d2, d3, d4]));
                }
            }
        }
    }
    out
}

fn check_color(i: usize) {
    assert!((1..=4).contains(&i), "color {i} is not a vertex of the square");
}

fn parts(c: &Component2x2) -> (i64, i64, i64, i64, i64, i64, i64) {
    let [d1, d2, d3, d4] = c.dims.map(i64::from);
    let [r1, r2] = c.ranks.map(i64::from);
    (d1, d2, d3, d4, r1, r2, d2 + d3)
}

pub fn apply_e(c: &Component2x2, i: usize) -> Option<Component2x2> {
    check_color(i);
    let (n1, _, _, n4, r1, r2, s) = parts(c);
    let ni = c.dims[i - 1] as i64;
    if ni == 0 {
        return None;
    }
    match i {
        1 if n1 + n4 <= s => Some(c.shifted(1, -1, -1, 0)),
        1 if n1 > r1 => Some(c.shifted(1, -1, 0, 0)),
        1 => None,
        2 | 3 if ni <= r1 => None,
        2 | 3 if n1 + n4 < s => Some(c.shifted(i, -1, 0, 0)),
        2 | 3 => Some(c.shifted(i, -1, 0, -1)),
        _ if n4 > r2 => Some(c.shifted(4, -1, 0, 0)),
        _ => None,
    }
}

pub fn apply_f(c: &Component2x2, i: usize) -> Option<Component2x2> {
    check_color(i);
    let (n1, _, _, n4, r1, r2, s) = parts(c);
    let ni = c.dims[i - 1] as i64;
    match i {
        1 if n1 + n4 < s => Some(c.shifted(1, 1, 1, 0)),
        1 => Some(c.shifted(1, 1, 0, 0)),
        2 | 3 if ni < r1 => None,
        2 | 3 if n1 + n4 <= s => Some(c.shifted(i, 1, 0, 0)),
        2 | 3 if r2 == n4 => None,
        2 | 3 => Some(c.shifted(i, 1, 0, 1)),
        _ if n1 + n4 >= s => Some(c.shifted(4, 1, 0, 0)),
        _ => None,
    }
}

pub fn apply_e_star(c: &Component2x2, i: usize) -> Option<Component2x2> {
    check_color(i);
    let (n1, _, _, n4, r1, r2, s) = parts(c);
    let ni = c.dims[i - 1] as i64;
    if ni == 0 {
        return None;
    }
    match i {
        1 if n1 > r1 => Some(c.shifted(1, -1, 0, 0)),
        1 => None,
        2 | 3 if ni <= r2 => None,
        2 | 3 if n1 + n4 < s => Some(c.shifted(i, -1, 0, 0)),
        2 | 3 => Some(c.shifted(i, -1, -1, 0)),
        _ if n1 + n4 <= s => Some(c.shifted(4, -1, 0, -1)),
        _ if n4 > r2 => Some(c.shifted(4, -1, 0, 0)),
        _ => None,
    }
}

pub fn apply_f_star(c: &Component2x2, i: usize) -> Option<Component2x2> {
    check_color(i);
    let (n1, _, _, n4, r1, r2, s) = parts(c);
    let ni = c.dims[i - 1] as i64;
    match i {
        1 if n1 + n4 >= s => Some(c.shifted(1, 1, 0, 0)),
        1 => None,
        2 | 3 if ni < r2 => None,
        2 | 3 if n1 + n4 <= s => Some(c.shifted(i, 1, 0, 0)),
        2 | 3 if r1 == n1 => None,
        2 | 3 => Some(c.shifted(i, 1, 1, 0)),
        _ if n1 + n4 < s => Some(c.shifted(4, 1, 0, 1)),
        _ => Some(c.shifted(4, 1, 0, 0)),
    }
}

pub fn apply_op(c: &Component2x2, op: &Op) -> Option<Component2x2> {
    match op.kind {
        OpKind::E => apply_e(c, op.color),
        OpKind::F => apply_f(c, op.color),
        OpKind::EStar => apply_e_star(c, op.color),
        OpKind::FStar => apply_f_star(c, op.color),
    }
}

/// Applies `word` right to left.
pub fn apply_word(word: &OperatorWord, start: Component2x2) -> Result<WordTrace<Component2x2>> {
    if let Some(op) = word.ops().iter().find(|o| o.color == 0 || o.color > 4) {
        return Err(Error::UnknownVertex(op.color));
    }
    Ok(word.apply(start, |op, c| apply_op(c, op)))
}

/// A natural number or infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedNat {
    Finite(u32),
    Infinity,
}

impl ExtendedNat {
    pub fn finite(self) -> Option<u32> {
        match self {
            ExtendedNat::Finite(k) => Some(k),
            ExtendedNat::Infinity => None,
        }
    }
}

impl Display for ExtendedNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedNat::Finite(k) => write!(f, "{k}"),
            ExtendedNat::Infinity => f.write_str("inf"),
        }
    }
}

impl Serialize for ExtendedNat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtendedNat::Finite(k) => s.serialize_u32(*k),
            ExtendedNat::Infinity => s.serialize_str("inf"),
        }
    }
}

fn nat(v: i64) -> ExtendedNat {
    ExtendedNat::Finite(u32::try_from(v).expect("nonnegative by validity"))
}

pub fn epsilon(c: &Component2x2, i: usize) -> i64 {
    check_color(i);
    let (n1, n2, n3, n4, r1, r2, _) = parts(c);
    match i {
        1 => n1,
        2 => (n2 - r1).max(0),
        3 => (n3 - r1).max(0),
        _ => n4 - r2,
    }
}

pub fn phi(c: &Component2x2, i: usize) -> i64 {
    epsilon(c, i) + CartanMatrix::square().pairing(i, &c.weight()).expect("color checked")
}

pub fn epsilon_star(c: &Component2x2, i: usize) -> i64 {
    check_color(i);
    let (n1, n2, n3, n4, r1, r2, _) = parts(c);
    match i {
        1 => n1 - r1,
        2 => (n2 - r2).max(0),
        3 => (n3 - r2).max(0),
        _ => n4,
    }
}

pub fn phi_star(c: &Component2x2, i: usize) -> i64 {
    epsilon_star(c, i) + CartanMatrix::square().pairing(i, &c.weight()).expect("color checked")
}

/// `max{k : e_i^k c != 0}`.
pub fn epsilon_prime(c: &Component2x2, i: usize) -> ExtendedNat {
    check_color(i);
    let (n1, n2, n3, n4, r1, r2, _) = parts(c);
    nat(match i {
        1 if n4 == r2 => n1,
        1 => n1 - r1,
        2 => (n2 - r1).max(0),
        3 => (n3 - r1).max(0),
        _ => n4 - r2,
    })
}

/// `max{k : f_i^k c != 0}`.
pub fn phi_prime(c: &Component2x2, i: usize) -> ExtendedNat {
    check_color(i);
    let (n1, _, _, n4, r1, r2, s) = parts(c);
    let ni = c.dims[i - 1] as i64;
    match i {
        1 => ExtendedNat::Infinity,
        2 | 3 if ni < r1 => nat(0),
        2 | 3 if n1 + n4 <= s || n1 == r1 => ExtendedNat::Infinity,
        2 | 3 => nat(n4 - r2),
        _ if n1 + n4 >= s => ExtendedNat::Infinity,
        _ => nat(0),
    }
}

/// `max{k : e*_i^k c != 0}`.
pub fn epsilon_star_prime(c: &Component2x2, i: usize) -> ExtendedNat {
    check_color(i);
    let (n1, n2, n3, n4, r1, r2, _) = parts(c);
    nat(match i {
        1 => n1 - r1,
        2 => (n2 - r2).max(0),
        3 => (n3 - r2).max(0),
        _ if n1 > r1 => n4 - r2,
        _ => n4,
    })
}

/// `max{k : f*_i^k c != 0}`.
pub fn phi_star_prime(c: &Component2x2, i: usize) -> ExtendedNat {
    check_color(i);
    let (n1, _, _, n4, r1, r2, s) = parts(c);
    let ni = c.dims[i - 1] as i64;
    match i {
        1 if n1 + n4 >= s => ExtendedNat::Infinity,
        1 => nat(0),
        2 | 3 if ni < r2 => nat(0),
        2 | 3 if n1 + n4 <= s || n4 == r2 => ExtendedNat::Infinity,
        2 | 3 => nat(n1 - r1),
        _ => ExtendedNat::Infinity,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InvariantKind {
    Epsilon,
    Phi,
    EpsilonPrime,
    PhiPrime,
    EpsilonStar,
    PhiStar,
    EpsilonStarPrime,
    PhiStarPrime,
}

impl InvariantKind {
    pub const ALL: [InvariantKind; 8] = [
        InvariantKind::Epsilon,
        InvariantKind::Phi,
        InvariantKind::EpsilonPrime,
        InvariantKind::PhiPrime,
        InvariantKind::EpsilonStar,
        InvariantKind::PhiStar,
        InvariantKind::EpsilonStarPrime,
        InvariantKind::PhiStarPrime,
    ];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum InvariantValue {
    Int(i64),
    Extended(ExtendedNat),
}

pub fn invariant(c: &Component2x2, i: usize, kind: InvariantKind) -> InvariantValue {
    use InvariantKind::*;
    match kind {
        Epsilon => InvariantValue::Int(epsilon(c, i)),
        Phi => InvariantValue::Int(phi(c, i)),
        EpsilonStar => InvariantValue::Int(epsilon_star(c, i)),
        PhiStar => InvariantValue::Int(phi_star(c, i)),
        EpsilonPrime => InvariantValue::Extended(epsilon_prime(c, i)),
        PhiPrime => InvariantValue::Extended(phi_prime(c, i)),
        EpsilonStarPrime => InvariantValue::Extended(epsilon_star_prime(c, i)),
        PhiStarPrime => InvariantValue::Extended(phi_star_prime(c, i)),
    }
}

/// `e4^{r2} e3^{d3} e2^{d2} e1^{d1} e4^{d4 - r2}`, which takes `c` to the
/// highest component.
pub fn connectivity_word(c: &Component2x2) -> OperatorWord {
    let [d1, d2, d3, d4] = c.dims.map(|d| d as usize);
    let r2 = c.ranks[1] as usize;
    OperatorWord::default()
        .then_power(OpKind::E, 4, r2)
        .then_power(OpKind::E, 3, d3)
        .then_power(OpKind::E, 2, d2)
        .then_power(OpKind::E, 1, d1)
        .then_power(OpKind::E, 4, d4 - r2)
}

/// The two words `f3 f1 f1 f3 f4 f4` and `f1 f1 f3 f3 f4 f4`, which agree on
/// the highest component of the square but not in `B(infinity)`.
pub fn counterexample_words() -> (OperatorWord, OperatorWord) {
    let a = "f3 f1 f1 f3 f4 f4".parse().expect("well-formed");
    let b = "f1 f1 f3 f3 f4 f4".parse().expect("well-formed");
    (a, b)
}

/// The crystal `(wt, eps, phi, e, f)` on components.
#[derive(Clone, Debug)]
pub struct G22Crystal {
    cartan: CartanMatrix,
}

/// The crystal `(wt, eps*, phi*, e*, f*)` on components.
#[derive(Clone, Debug)]
pub struct G22StarCrystal {
    cartan: CartanMatrix,
}

impl Default for G22Crystal {
    fn default() -> Self {
        G22Crystal { cartan: CartanMatrix::square() }
    }
}

impl Default for G22StarCrystal {
    fn default() -> Self {
        G22StarCrystal { cartan: CartanMatrix::square() }
    }
}

impl G22Crystal {
    pub fn new() -> Self {
        Self::default()
    }
}

impl G22StarCrystal {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Crystal for G22Crystal {
    type Element = Component2x2;

    fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }
    fn weight(&self, b: &Component2x2) -> RootLatticeWeight {
        b.weight()
    }
    fn epsilon(&self, b: &Component2x2, i: usize) -> i64 {
        epsilon(b, i)
    }
    fn phi(&self, b: &Component2x2, i: usize) -> i64 {
        phi(b, i)
    }
    fn e(&self, b: &Component2x2, i: usize) -> Option<Component2x2> {
        apply_e(b, i)
    }
    fn f(&self, b: &Component2x2, i: usize) -> Option<Component2x2> {
        apply_f(b, i)
    }
}

impl Crystal for G22StarCrystal {
    type Element = Component2x2;

    fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }
    fn weight(&self, b: &Component2x2) -> RootLatticeWeight {
        b.weight()
    }
    fn epsilon(&self, b: &Component2x2, i: usize) -> i64 {
        epsilon_star(b, i)
    }
    fn phi(&self, b: &Component2x2, i: usize) -> i64 {
        phi_star(b, i)
    }
    fn e(&self, b: &Component2x2, i: usize) -> Option<Component2x2> {
        apply_e_star(b, i)
    }
    fn f(&self, b: &Component2x2, i: usize) -> Option<Component2x2> {
        apply_f_star(b, i)
    }
}

/// The vertex involution of the square: `1 <-> 4`, `2 <-> 3`.
pub fn involution(i: usize) -> usize {
    check_color(i);
    5 - i
}
