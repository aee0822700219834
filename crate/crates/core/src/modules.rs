//! The eleven interval modules of the commutative square, generic
//! decompositions of components, Hom and Ext through projective
//! resolutions, and rank-profile certificates.

use std::collections::BTreeMap;
use std::fmt::{self, Display};
use std::sync::OnceLock;

use num_rational::BigRational;
use serde::ser::SerializeMap;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{rational_to_i64, Field, Rationals};
use crate::g22::Component2x2;
use crate::linalg::{self, Matrix};
use crate::quiver::GridQuiver;
use crate::rep::{compose, flatten, hom_basis, hom_dim, is_morphism, Representation, VertexMaps};

/// Dimension vectors of `M_1 .. M_11`.
pub const INDECOMPOSABLE_DIMS: [[u32; 4]; 11] = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [1, 1, 0, 0],
    [1, 0, 1, 0],
    [0, 1, 0, 1],
    [0, 0, 1, 1],
    [1, 1, 1, 0],
    [0, 1, 1, 1],
    [1, 1, 1, 1],
];

/// Arrows of the Auslander-Reiten quiver, as pairs of indices.
pub const AR_ARROWS: [(u8, u8); 14] = [
    (4, 7),
    (4, 8),
    (7, 10),
    (8, 10),
    (10, 3),
    (10, 2),
    (10, 11),
    (3, 9),
    (2, 9),
    (11, 9),
    (9, 5),
    (9, 6),
    (5, 1),
    (6, 1),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndecomposableId(u8);

impl IndecomposableId {
    pub fn new(k: u8) -> Result<Self> {
        if (1..=11).contains(&k) {
            Ok(IndecomposableId(k))
        } else {
            Err(Error::Parse(format!("there is no indecomposable M{k}")))
        }
    }

    pub fn all() -> impl Iterator<Item = IndecomposableId> {
        (1..=11).map(IndecomposableId)
    }

    pub fn index(self) -> u8 {
        self.0
    }

    pub fn dims(self) -> [u32; 4] {
        INDECOMPOSABLE_DIMS[self.0 as usize - 1]
    }

    /// The projective covers of the four simples: `M4, M7, M8, M11`.
    pub fn is_projective(self) -> bool {
        matches!(self.0, 4 | 7 | 8 | 11)
    }
}

impl Display for IndecomposableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M{}", self.0)
    }
}

fn m(k: u8) -> IndecomposableId {
    IndecomposableId(k)
}

fn square() -> GridQuiver {
    GridQuiver::new(&[2, 2]).expect("valid shape")
}

/// `M_k` over `field`, with identity maps wherever both ends are nonzero.
pub fn indecomposable<F: Field>(k: IndecomposableId, field: &F) -> Representation<F> {
    let q = square();
    let d = k.dims().map(|x| x as usize);
    let maps = q
        .arrows()
        .iter()
        .map(|a| {
            let (s, t) = (d[a.source - 1], d[a.target - 1]);
            if s == 1 && t == 1 {
                linalg::identity(field, 1)
            } else {
                linalg::zeros(field, t, s)
            }
        })
        .collect();
    Representation::new(field.clone(), q, d.to_vec(), maps).expect("interval modules commute")
}

/// Multiplicities `(m_1, ..., m_11)` of the indecomposables.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Multiset11 {
    counts: [u32; 11],
}

impl Multiset11 {
    pub fn new(counts: [u32; 11]) -> Self {
        Multiset11 { counts }
    }

    pub fn from_pairs(pairs: &[(u8, u32)]) -> Self {
        let mut counts = [0; 11];
        for &(k, n) in pairs {
            counts[k as usize - 1] += n;
        }
        Multiset11 { counts }
    }

    pub fn counts(&self) -> [u32; 11] {
        self.counts
    }

    pub fn count(&self, k: IndecomposableId) -> u32 {
        self.counts[k.0 as usize - 1]
    }

    pub fn present(&self) -> Vec<IndecomposableId> {
        IndecomposableId::all().filter(|&k| self.count(k) > 0).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.iter().all(|&c| c == 0)
    }

    pub fn dims(&self) -> [u32; 4] {
        let mut d = [0; 4];
        for k in IndecomposableId::all() {
            for (v, x) in k.dims().iter().enumerate() {
                d[v] += self.count(k) * x;
            }
        }
        d
    }

    /// Rank of the stacked map out of vertex 1.
    pub fn r1(&self) -> u32 {
        [5, 6, 9, 11].iter().map(|&k| self.count(m(k))).sum()
    }

    /// Rank of the stacked map into vertex 4.
    pub fn r2(&self) -> u32 {
        [7, 8, 10, 11].iter().map(|&k| self.count(m(k))).sum()
    }

    pub fn to_representation<F: Field>(&self, field: &F) -> Representation<F> {
        let mut rep = Representation::zero(field.clone(), square(), vec![0; 4]).expect("empty representation");
        for k in IndecomposableId::all() {
            for _ in 0..self.count(k) {
                rep = rep.direct_sum(&indecomposable(k, field)).expect("same quiver");
            }
        }
        rep
    }
}

impl Display for Multiset11 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .present()
            .into_iter()
            .map(|k| match self.count(k) {
                1 => k.to_string(),
                n => format!("{k}^{n}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl Serialize for Multiset11 {
    /// `{"M1": 1, "M4": 2, ...}` over the present summands, in index order.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let present = self.present();
        let mut map = s.serialize_map(Some(present.len()))?;
        for k in present {
            map.serialize_entry(&k.to_string(), &self.count(k))?;
        }
        map.end()
    }
}

/// Every case of the decomposition table whose condition `c` satisfies,
/// as `(case label, raw exponents)`.
pub fn decomposition_cases(c: &Component2x2) -> Vec<(&'static str, [i64; 11])> {
    let [n1, n2, n3, n4] = c.dims().map(i64::from);
    let [r1, r2] = c.ranks().map(i64::from);
    let s = n2 + n3;
    let v = |pairs: &[(usize, i64)]| {
        let mut e = [0i64; 11];
        for &(k, x) in pairs {
            e[k - 1] += x;
        }
        e
    };
    let le = |a: i64, b: i64, c: i64| a <= b && b <= c;
    let le4 = |a: i64, b: i64, c: i64, d: i64| a <= b && b <= c && c <= d;
    let mut cases: Vec<(&'static str, bool, [i64; 11])> = Vec::new();
    if n1 + n4 >= s {
        let a = v(&[(1, n1 - r1), (4, n4 - r2), (7, n2 - r1), (8, n3 - r1), (11, r1)]);
        let b = v(&[(1, n1 - r1), (4, n4 - r2), (6, r1 - n2), (8, n3 - r1), (11, n2)]);
        let cc = v(&[(1, n1 - r1), (4, n4 - r2), (6, r1 - n2), (5, r1 - n3), (11, r2)]);
        let d = v(&[(1, n1 - r1), (4, n4 - r2), (5, r1 - n3), (7, n2 - r1), (11, n3)]);
        cases.extend([
            ("I.1", le(n1, n2, n3), a),
            ("I.2", le(n2, n1, n3) && r1 <= n2, a),
            ("I.3", le(n2, n1, n3) && n2 <= r1, b),
            ("I.4", le(n2, n3, n1) && r1 <= n2, a),
            ("I.5", le(n2, n3, n1) && le(n2, r1, n3), b),
            ("I.6", le(n2, n3, n1) && n3 <= r1, cc),
            ("I.7", le(n1, n3, n2), a),
            ("I.8", le(n3, n1, n2) && r1 <= n3, a),
            ("I.9", le(n3, n1, n2) && n3 <= r1, d),
            ("I.10", le(n3, n2, n1) && r1 <= n3, a),
            ("I.11", le(n3, n2, n1) && le(n3, r1, n2), d),
            ("I.12", le(n3, n2, n1) && n2 <= r1, cc),
        ]);
    } else {
        if n2 <= n3 {
            cases.extend([
                ("II.1", le4(n4, n1, n2, n3), v(&[(2, n2 - n1), (3, n3 - n1), (9, n1 - n4), (11, n4)])),
                ("II.2", le4(n4, n2, n1, n3), v(&[(3, n3 - n1), (6, n1 - n2), (9, n2 - n4), (11, n4)])),
                ("II.3", le4(n4, n2, n3, n1), v(&[(5, n1 - n3), (6, n1 - n2), (9, s - n1 - n4), (11, n4)])),
                ("II.4", le4(n2, n4, n1, n3), v(&[(3, s - n1 - n4), (6, n1 - n2), (8, n4 - n2), (11, n2)])),
                ("II.5", le4(n1, n4, n2, n3), v(&[(2, n2 - n4), (3, n3 - n4), (10, n4 - n1), (11, n1)])),
                ("II.6", le4(n1, n2, n4, n3), v(&[(3, n3 - n4), (8, n4 - n2), (10, n2 - n1), (11, n1)])),
                ("II.7", le4(n1, n2, n3, n4), v(&[(7, n4 - n3), (8, n4 - n2), (10, s - n1 - n4), (11, n1)])),
                ("II.8", le4(n2, n1, n4, n3), v(&[(3, s - n1 - n4), (6, n1 - n2), (8, n4 - n2), (11, n2)])),
            ]);
        }
        if n3 <= n2 {
            cases.extend([
                ("III.1", le4(n4, n1, n3, n2), v(&[(2, n2 - n1), (3, n3 - n1), (9, n1 - n4), (11, n4)])),
                ("III.2", le4(n4, n3, n1, n2), v(&[(2, n2 - n1), (5, n1 - n3), (9, n3 - n4), (11, n4)])),
                ("III.3", le4(n4, n3, n2, n1), v(&[(5, n1 - n3), (6, n1 - n2), (9, s - n1 - n4), (11, n4)])),
                ("III.4", le4(n3, n4, n1, n2), v(&[(2, s - n1 - n4), (5, n1 - n3), (7, n4 - n3), (11, n3)])),
                ("III.5", le4(n1, n4, n3, n2), v(&[(2, n2 - n4), (3, n3 - n4), (10, n4 - n1), (11, n1)])),
                ("III.6", le4(n1, n3, n4, n2), v(&[(2, n2 - n4), (7, n4 - n3), (10, n3 - n1), (11, n1)])),
                ("III.7", le4(n1, n3, n2, n4), v(&[(7, n4 - n3), (8, n4 - n2), (10, s - n1 - n4), (11, n1)])),
                ("III.8", le4(n3, n1, n4, n2), v(&[(2, s - n1 - n4), (5, n1 - n3), (7, n4 - n3), (11, n3)])),
            ]);
        }
    }
    cases.into_iter().filter(|(_, hit, _)| *hit).map(|(name, _, e)| (name, e)).collect()
}

/// The isomorphism class of a general representation in `c`.
///
/// Panics if no case applies, if two applicable cases disagree, or if an
/// exponent is negative: each would mean the table is inconsistent.
pub fn generic_decomposition(c: &Component2x2) -> Multiset11 {
    let cases = decomposition_cases(c);
    let (first_name, first) = cases.first().unwrap_or_else(|| panic!("no decomposition case covers {c}"));
    for (name, e) in &cases {
        assert_eq!(e, first, "cases {first_name} and {name} disagree on {c}");
    }
    let counts = first
        .map(|x| u32::try_from(x).unwrap_or_else(|_| panic!("case {first_name} gives a negative exponent on {c}")));
    Multiset11 { counts }
}

/// A projective resolution `0 -> P_k -> ... -> P_0 -> M -> 0` over the
/// rationals, with explicit differentials.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub module: IndecomposableId,
    /// `terms[j]` lists the summands of `P_j`.
    pub terms: Vec<Vec<IndecomposableId>>,
    /// `P_j` as a representation.
    pub projectives: Vec<Representation<Rationals>>,
    /// `maps[0]` is the augmentation `P_0 -> M`, `maps[j]` is `P_j -> P_{j-1}`.
    pub maps: Vec<VertexMaps<BigRational>>,
    /// The sign chosen for each nonzero block, in construction order.
    pub signs: Vec<i64>,
}

fn sum_rep(parts: &[IndecomposableId]) -> Representation<Rationals> {
    let mut rep = Representation::zero(Rationals, square(), vec![0; 4]).expect("empty representation");
    for &p in parts {
        rep = rep.direct_sum(&indecomposable(p, &Rationals)).expect("same quiver");
    }
    rep
}

/// Whether the map `X -> Y` that is the identity on every shared vertex is
/// a nonzero morphism of interval modules.
fn has_canonical_block(x: IndecomposableId, y: IndecomposableId) -> bool {
    let q = Rationals;
    let (dx, dy) = (x.dims(), y.dims());
    if !(0..4).any(|v| dx[v] == 1 && dy[v] == 1) {
        return false;
    }
    let phi: VertexMaps<BigRational> = (0..4)
        .map(|v| {
            if dx[v] == 1 && dy[v] == 1 {
                linalg::identity(&q, 1)
            } else {
                linalg::zeros(&q, dy[v] as usize, dx[v] as usize)
            }
        })
        .collect();
    is_morphism(&indecomposable(x, &q), &indecomposable(y, &q), &phi)
}

/// Block map `(+) xs -> (+) ys` carrying the canonical block times the next
/// sign at each nonzero position, blocks taken row by row.
fn block_map(
    xs: &[IndecomposableId],
    ys: &[IndecomposableId],
    signs: &mut impl Iterator<Item = i64>,
) -> VertexMaps<BigRational> {
    let q = Rationals;
    let total = |list: &[IndecomposableId], v: usize| list.iter().map(|x| x.dims()[v] as usize).sum::<usize>();
    let mut mats: Vec<Matrix<BigRational>> = (0..4).map(|v| linalg::zeros(&q, total(ys, v), total(xs, v))).collect();
    let mut r0 = [0usize; 4];
    for &y in ys {
        let mut c0 = [0usize; 4];
        for &x in xs {
            if has_canonical_block(x, y) {
                let sign = signs.next().expect("one sign per block");
                for v in 0..4 {
                    if x.dims()[v] == 1 && y.dims()[v] == 1 {
                        mats[v].set(r0[v], c0[v], q.from_i64(sign));
                    }
                }
            }
            for v in 0..4 {
                c0[v] += x.dims()[v] as usize;
            }
        }
        for v in 0..4 {
            r0[v] += y.dims()[v] as usize;
        }
    }
    mats
}

fn nonzero_blocks(xs: &[IndecomposableId], ys: &[IndecomposableId]) -> usize {
    ys.iter().map(|&y| xs.iter().filter(|&&x| has_canonical_block(x, y)).count()).sum()
}

/// Exactness of `0 -> P_k -> ... -> P_0 -> M -> 0` checked vertex by vertex.
fn is_exact(
    module: &Representation<Rationals>,
    projectives: &[Representation<Rationals>],
    maps: &[VertexMaps<BigRational>],
) -> bool {
    let q = Rationals;
    for (j, map) in maps.iter().enumerate() {
        let source = &projectives[j];
        let target = if j == 0 { module } else { &projectives[j - 1] };
        if !is_morphism(source, target, map) {
            return false;
        }
    }
    for v in 0..4 {
        let ranks: Vec<usize> = maps.iter().map(|m| linalg::rank(&q, &m[v])).collect();
        if ranks[0] != module.dims()[v] {
            return false;
        }
        for j in 1..maps.len() {
            if !linalg::is_zero_matrix(&q, &linalg::mul(&q, &maps[j - 1][v], &maps[j][v])) {
                return false;
            }
            if ranks[j] + ranks[j - 1] != projectives[j - 1].dims()[v] {
                return false;
            }
        }
        if ranks[maps.len() - 1] != projectives[maps.len() - 1].dims()[v] {
            return false;
        }
    }
    true
}

impl Resolution {
    /// Builds the resolution with the given terms, searching block signs
    /// until the complex is exact.
    pub fn build(module: IndecomposableId, terms: Vec<Vec<IndecomposableId>>) -> Result<Self> {
        let target = indecomposable(module, &Rationals);
        let projectives: Vec<_> = terms.iter().map(|t| sum_rep(t)).collect();
        let mut block_counts = vec![nonzero_blocks(&terms[0], &[module])];
        for j in 1..terms.len() {
            block_counts.push(nonzero_blocks(&terms[j], &terms[j - 1]));
        }
        let total: usize = block_counts.iter().sum();
        for pattern in 0u32..(1 << total) {
            let signs: Vec<i64> = (0..total).map(|b| if pattern >> b & 1 == 1 { -1 } else { 1 }).collect();
            let mut it = signs.iter().copied();
            let mut maps = vec![block_map(&terms[0], &[module], &mut it)];
            for j in 1..terms.len() {
                maps.push(block_map(&terms[j], &terms[j - 1], &mut it));
            }
            if is_exact(&target, &projectives, &maps) {
                return Ok(Resolution { module, terms, projectives, maps, signs });
            }
        }
        Err(Error::Representation(format!("no sign choice makes the resolution of {module} exact")))
    }

    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }

    /// Rechecks that every map is a morphism and the complex is exact.
    pub fn is_exact(&self) -> bool {
        is_exact(&indecomposable(self.module, &Rationals), &self.projectives, &self.maps)
    }
}

/// The projective resolutions of all eleven indecomposables; projectives
/// resolve themselves.
pub fn resolutions() -> &'static [Resolution] {
    static CACHE: OnceLock<Vec<Resolution>> = OnceLock::new();
    CACHE.get_or_init(|| {
        IndecomposableId::all()
            .map(|k| {
                let terms: Vec<Vec<u8>> = match k.0 {
                    1 => vec![vec![11], vec![7, 8], vec![4]],
                    2 => vec![vec![7], vec![4]],
                    3 => vec![vec![8], vec![4]],
                    5 => vec![vec![11], vec![8]],
                    6 => vec![vec![11], vec![7]],
                    9 => vec![vec![11], vec![4]],
                    10 => vec![vec![7, 8], vec![4]],
                    p => vec![vec![p]],
                };
                let terms = terms.into_iter().map(|t| t.into_iter().map(m).collect()).collect();
                Resolution::build(k, terms).expect("listed resolutions are exact")
            })
            .collect()
    })
}

pub fn resolution(k: IndecomposableId) -> &'static Resolution {
    &resolutions()[k.0 as usize - 1]
}

/// `dim Ext^j(M_k, N)` for `j = 0, 1, 2`.
pub fn ext_dims(k: IndecomposableId, n: &Representation<Rationals>) -> Result<[usize; 3]> {
    let res = resolution(k);
    let q = Rationals;
    let bases: Vec<Vec<VertexMaps<BigRational>>> =
        res.projectives.iter().map(|p| hom_basis(p, n)).collect::<Result<_>>()?;
    // delta[j] : Hom(P_{j-1}, N) -> Hom(P_j, N), g -> g . d_j
    let mut delta_rank = vec![0usize; res.terms.len() + 1];
    for j in 1..res.terms.len() {
        let images: Vec<Vec<BigRational>> =
            bases[j - 1].iter().map(|g| flatten(&compose(&q, g, &res.maps[j]))).collect();
        if let Some(first) = images.first() {
            let cols = first.len();
            let mat = Matrix::from_vec(images.len(), cols, images.into_iter().flatten().collect());
            delta_rank[j] = linalg::rank(&q, &mat);
        }
    }
    let mut out = [0usize; 3];
    for j in 0..res.terms.len().min(3) {
        out[j] = bases[j].len() - delta_rank[j] - delta_rank[j + 1];
    }
    Ok(out)
}

/// `dim Ext^1(M_i, M_j)` for every pair, indexed `[i-1][j-1]`.
pub fn ext1_table() -> &'static [[usize; 11]; 11] {
    static TABLE: OnceLock<[[usize; 11]; 11]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [[0; 11]; 11];
        for i in IndecomposableId::all() {
            for j in IndecomposableId::all() {
                let n = indecomposable(j, &Rationals);
                t[i.0 as usize - 1][j.0 as usize - 1] = ext_dims(i, &n).expect("same quiver")[1];
            }
        }
        t
    })
}

pub fn ext1_dim(i: IndecomposableId, j: IndecomposableId) -> usize {
    ext1_table()[i.0 as usize - 1][j.0 as usize - 1]
}

/// `dim Ext^1(M_i, N)` for a direct sum `N`, by additivity.
pub fn ext1_dim_multiset(i: IndecomposableId, n: &Multiset11) -> usize {
    n.present().into_iter().map(|j| n.count(j) as usize * ext1_dim(i, j)).sum()
}

/// `dim Hom` between two direct sums of indecomposables.
pub fn hom_dim_multiset(a: &Multiset11, b: &Multiset11) -> usize {
    hom_dim(&a.to_representation(&Rationals), &b.to_representation(&Rationals)).expect("same quiver")
}

/// Whether `Ext^1(M_i, M_j) = 0` for every ordered pair of distinct summand
/// types of `decomp`.
pub fn cbs_check(decomp: &Multiset11) -> bool {
    let present = decomp.present();
    present.iter().all(|&i| present.iter().all(|&j| i == j || ext1_dim(i, j) == 0))
}

/// `(d1..d4, rk f12, rk f13, rk f24, rk f34, r1, r2, rk f24 f12)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RankProfile(pub [i64; 11]);

pub fn rank_profile<F: Field>(rep: &Representation<F>) -> Result<RankProfile> {
    if rep.quiver().shape() != [2, 2] {
        return Err(Error::Representation("rank profiles are defined for the 2x2 grid".into()));
    }
    let f = rep.field();
    let rk = |m: &Matrix<F::Elem>| linalg::rank(f, m) as i64;
    let d = rep.dims();
    Ok(RankProfile([
        d[0] as i64,
        d[1] as i64,
        d[2] as i64,
        d[3] as i64,
        rk(rep.map(1, 2)),
        rk(rep.map(1, 3)),
        rk(rep.map(2, 4)),
        rk(rep.map(3, 4)),
        rk(&rep.outgoing(1)),
        rk(&rep.incoming(4)),
        rk(&linalg::mul(f, rep.map(2, 4), rep.map(1, 2))),
    ]))
}

/// The 11x11 matrix whose `k`-th column is the profile of `M_k`.
pub fn profile_matrix() -> Matrix<BigRational> {
    let cols: Vec<RankProfile> =
        IndecomposableId::all().map(|k| rank_profile(&indecomposable(k, &Rationals)).expect("square quiver")).collect();
    let mut entries = Vec::with_capacity(121);
    for r in 0..11 {
        for c in &cols {
            entries.push(c.0[r]);
        }
    }
    linalg::from_i64(&Rationals, 11, 11, &entries)
}

fn profile_inverse() -> &'static Matrix<BigRational> {
    static INV: OnceLock<Matrix<BigRational>> = OnceLock::new();
    INV.get_or_init(|| linalg::inverse(&Rationals, &profile_matrix()).expect("profile matrix is invertible"))
}

/// Solves for the multiplicities whose direct sum has profile `p`.
pub fn multiplicities_from_profile(p: &RankProfile) -> Result<Multiset11> {
    let q = Rationals;
    let col = linalg::from_i64(&q, 11, 1, &p.0);
    let sol = linalg::mul(&q, profile_inverse(), &col);
    let mut counts = [0u32; 11];
    for (k, slot) in counts.iter_mut().enumerate() {
        *slot = rational_to_i64(sol.get(k, 0))
            .and_then(|x| u32::try_from(x).ok())
            .ok_or_else(|| Error::InconsistentProfile(p.0.to_vec()))?;
    }
    Ok(Multiset11 { counts })
}

/// Summary of the decomposition of a component, as printed by the CLI.
pub fn decomposition_summary(c: &Component2x2) -> BTreeMap<&'static str, serde_json::Value> {
    let d = generic_decomposition(c);
    BTreeMap::from([("summands", serde_json::to_value(d).expect("serializes")), ("cbs", cbs_check(&d).into())])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::g22::components_in_box;

    fn ms(ks: &[u8]) -> Multiset11 {
        Multiset11::from_pairs(&ks.iter().map(|&k| (k, 1)).collect::<Vec<_>>())
    }

    #[test]
    fn indecomposable_examples() {
        let q = Rationals;
        let m11 = indecomposable(m(11), &q);
        assert_eq!(m11.dims(), &[1, 1, 1, 1]);
        assert!(m11.maps().iter().all(|a| *a == linalg::identity(&q, 1)));
        let m1 = indecomposable(m(1), &q);
        assert_eq!(m1.dims(), &[1, 0, 0, 0]);
        let m7 = indecomposable(m(7), &q);
        assert_eq!(*m7.map(2, 4), linalg::identity(&q, 1));
        let projectives: Vec<_> = IndecomposableId::all().filter(|k| k.is_projective()).map(|k| k.index()).collect();
        assert_eq!(projectives, vec![4, 7, 8, 11]);
    }

    #[test]
    fn decomposition_examples() {
        let c = |s: &str| generic_decomposition(&s.parse().unwrap());
        assert_eq!(c("1,1,1,2:1,1"), ms(&[4, 11]));
        assert_eq!(c("2,1,1,2:1,1"), ms(&[1, 4, 11]));
        assert_eq!(c("1,2,2,1:1,1"), ms(&[2, 3, 11]));
        assert!(c("0,0,0,0:0,0").is_empty());
    }

    #[test]
    fn decomposition_matches_dims_and_ranks() {
        for c in components_in_box(4) {
            let d = generic_decomposition(&c);
            assert_eq!(d.dims(), c.dims(), "{c}");
            assert_eq!([d.r1(), d.r2()], c.ranks(), "{c}");
        }
    }

    #[test]
    fn hom_examples() {
        let q = Rationals;
        let h = |a: u8, b: u8| hom_dim(&indecomposable(m(a), &q), &indecomposable(m(b), &q)).unwrap();
        assert_eq!(h(11, 11), 1);
        assert_eq!(h(11, 4), 0);
        assert_eq!(h(4, 11), 1);
        for k in IndecomposableId::all() {
            assert_eq!(h(k.0, k.0), 1, "{k} is a brick");
        }
    }

    #[test]
    fn ar_arrows_are_nonzero_maps() {
        let q = Rationals;
        for (a, b) in AR_ARROWS {
            assert_eq!(hom_dim(&indecomposable(m(a), &q), &indecomposable(m(b), &q)).unwrap(), 1, "M{a} -> M{b}");
        }
    }

    #[test]
    fn ext_examples() {
        assert_eq!(ext1_dim(m(5), m(8)), 1);
        assert_eq!(ext1_dim(m(1), m(4)), 0);
        assert_eq!(ext_dims(m(1), &indecomposable(m(4), &Rationals)).unwrap(), [0, 0, 1]);
        assert_eq!(ext1_dim(m(2), m(3)), 0);
        for j in IndecomposableId::all() {
            assert_eq!(ext1_dim(m(7), j), 0);
        }
    }

    #[test]
    fn ext_zero_matches_hom() {
        let q = Rationals;
        for i in IndecomposableId::all() {
            for j in IndecomposableId::all() {
                let n = indecomposable(j, &q);
                let e = ext_dims(i, &n).unwrap();
                assert_eq!(e[0], hom_dim(&indecomposable(i, &q), &n).unwrap(), "Hom({i},{j})");
                if i.index() != 1 {
                    assert_eq!(e[2], 0);
                }
            }
        }
    }

    #[test]
    fn cbs_examples() {
        assert!(cbs_check(&ms(&[4, 11])));
        assert!(!cbs_check(&ms(&[5, 8])));
        assert!(cbs_check(&ms(&[11])));
    }

    #[test]
    fn profile_round_trips() {
        let q = Rationals;
        assert_eq!(multiplicities_from_profile(&rank_profile(&indecomposable(m(11), &q)).unwrap()).unwrap(), ms(&[11]));
        let sum = ms(&[4, 11]);
        assert_eq!(multiplicities_from_profile(&rank_profile(&sum.to_representation(&q)).unwrap()).unwrap(), sum);
        let zero = Representation::zero(q, square(), vec![0; 4]).unwrap();
        assert!(multiplicities_from_profile(&rank_profile(&zero).unwrap()).unwrap().is_empty());
        assert!(multiplicities_from_profile(&RankProfile([1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0])).is_err());
    }

    #[test]
    fn serializes_in_index_order() {
        let s = serde_json::to_string(&ms(&[1, 4, 11])).unwrap();
        assert_eq!(s, r#"{"M1":1,"M4":1,"M11":1}"#);
        assert_eq!(ms(&[4, 11]).to_string(), "M4 + M11");
    }
}
