//! Brute-force verification: sample genuine points of a component over a
//! prime field and recompute crystal statistics with exact linear algebra.
//!
//! For the square, a point with ranks `(r1, r2)` is produced from the pair
//! `alpha1 = [f12; f13]`, `alpha2 = [f24, -f34]` of composable maps
//! `k^{d1} -> k^{d2+d3} -> k^{d4}` with `alpha2 alpha1 = 0`: a normal form of
//! the given ranks is conjugated by independent random invertible matrices
//! and then split back into the four arrows.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};
use crate::g22::Component2x2;
use crate::linalg::{self, Matrix};
use crate::modules::{multiplicities_from_profile, rank_profile, Multiset11};
use crate::quiver::{GridQuiver, VertexId};
use crate::rep::Representation;

pub const DEFAULT_PRIME: u64 = 32003;
pub const MIN_PRIME: u64 = 101;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleConfig {
    pub prime: u64,
    pub count: usize,
    pub seed: u64,
}

impl SampleConfig {
    pub fn new(prime: u64, count: usize, seed: u64) -> Result<Self> {
        if prime < MIN_PRIME {
            return Err(Error::SampleConfig(format!("prime {prime} is below the minimum {MIN_PRIME}")));
        }
        PrimeField::new(prime)?;
        if count == 0 {
            return Err(Error::SampleConfig("at least one sample is required".into()));
        }
        Ok(SampleConfig { prime, count, seed })
    }

    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.prime).expect("validated on construction")
    }

    /// Independent generator for sample `index`.
    pub fn rng(&self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        rng
    }
}

/// A random point of the component `c`, using generator stream `index`.
pub fn sample_component_point(c: &Component2x2, cfg: &SampleConfig, index: u64) -> Representation<PrimeField> {
    let field = cfg.field();
    let mut rng = cfg.rng(index);
    let [d1, d2, d3, d4] = c.dims().map(|x| x as usize);
    let [r1, r2] = c.ranks().map(|x| x as usize);
    let mid = d2 + d3;
    assert!(r1 <= d1 && r2 <= d4 && r1 + r2 <= mid, "component {c} has impossible rank data");

    let mut alpha1 = linalg::zeros(&field, mid, d1);
    for k in 0..r1 {
        alpha1.set(k, k, 1);
    }
    let mut alpha2 = linalg::zeros(&field, d4, mid);
    for k in 0..r2 {
        alpha2.set(k, r1 + k, 1);
    }
    let (h1, _) = linalg::random_invertible(&field, d1, &mut rng);
    let (g2, g2_inv) = linalg::random_invertible(&field, mid, &mut rng);
    let (g3, _) = linalg::random_invertible(&field, d4, &mut rng);
    let alpha1 = linalg::mul(&field, &linalg::mul(&field, &g2, &alpha1), &h1);
    let alpha2 = linalg::mul(&field, &linalg::mul(&field, &g3, &alpha2), &g2_inv);

    let f12 = alpha1.row_block(0, d2);
    let f13 = alpha1.row_block(d2, mid);
    let f24 = alpha2.col_block(0, d2);
    let f34 = alpha2.col_block(d2, mid).map(|x| field.neg(x));
    let q = GridQuiver::new(&[2, 2]).expect("valid shape");
    Representation::new(field, q, vec![d1, d2, d3, d4], vec![f12, f13, f24, f34])
        .expect("normal form conjugates commute")
}

/// Uniformly random matrices on every arrow of the chain with dimensions `dims`.
pub fn sample_an_point(dims: &[u32], cfg: &SampleConfig, index: u64) -> Result<Representation<PrimeField>> {
    let field = cfg.field();
    let mut rng = cfg.rng(index);
    let q = GridQuiver::new(&[dims.len()])?;
    let d: Vec<usize> = dims.iter().map(|&x| x as usize).collect();
    let maps =
        q.arrows().iter().map(|a| linalg::random_matrix(&field, d[a.target - 1], d[a.source - 1], &mut rng)).collect();
    Representation::new(field, q, d, maps)
}

/// `dim coker` of the combined map into vertex `i`.
pub fn epsilon_of_rep<F: Field>(rep: &Representation<F>, i: VertexId) -> usize {
    rep.dim(i) - linalg::rank(rep.field(), &rep.incoming(i))
}

/// `dim ker` of the stacked map out of vertex `i`.
pub fn epsilon_star_of_rep<F: Field>(rep: &Representation<F>, i: VertexId) -> usize {
    rep.dim(i) - linalg::rank(rep.field(), &rep.outgoing(i))
}

/// `(r1, r2)` of a representation of the square.
pub fn rank_pair<F: Field>(rep: &Representation<F>) -> [usize; 2] {
    [linalg::rank(rep.field(), &rep.outgoing(1)), linalg::rank(rep.field(), &rep.incoming(4))]
}

/// The block matrix `F_i(f)` from `(+)_{j in out_1(i)} V_j` to
/// `(+)_{k in out_2(i)} V_k`: for each pair `j1 <_lex j2` with common head
/// `k`, the row block of `k` holds `f_{j1 k}` in column `j1` and `-f_{j2 k}` in
/// column `j2`. With `starred`, the mirror construction on in-neighbourhoods
/// with transposed blocks.
pub fn exttilde_matrix<F: Field>(rep: &Representation<F>, i: VertexId, starred: bool) -> Result<Matrix<F::Elem>> {
    let q = rep.quiver();
    let f = rep.field();
    let nb = q.neighborhoods(i)?;
    let (cols, rows, pairs) =
        if starred { (&nb.in_1, &nb.in_2, &nb.in_pairs) } else { (&nb.out_1, &nb.out_2, &nb.out_pairs) };
    let offsets = |list: &[VertexId]| {
        let mut acc = 0;
        list.iter()
            .map(|&v| {
                let o = acc;
                acc += rep.dim(v);
                (v, o)
            })
            .collect::<Vec<_>>()
    };
    let (col_off, row_off) = (offsets(cols), offsets(rows));
    let width: usize = cols.iter().map(|&v| rep.dim(v)).sum();
    let height: usize = rows.iter().map(|&v| rep.dim(v)).sum();
    let mut m = linalg::zeros(f, height, width);
    let find = |list: &[(VertexId, usize)], v: VertexId| list.iter().find(|(w, _)| *w == v).expect("listed").1;
    for &(j1, j2, k) in pairs {
        let r0 = find(&row_off, k);
        for (j, negate) in [(j1, false), (j2, true)] {
            let block = if starred { rep.map(k, j).transpose() } else { rep.map(j, k).clone() };
            let c0 = find(&col_off, j);
            for r in 0..block.rows() {
                for c in 0..block.cols() {
                    let x = block.get(r, c);
                    let x = if negate { f.neg(x) } else { x.clone() };
                    let sum = f.add(m.get(r0 + r, c0 + c), &x);
                    m.set(r0 + r, c0 + c, sum);
                }
            }
        }
    }
    Ok(m)
}

/// `dim ker F_i(f)` (or its starred counterpart).
pub fn exttilde_dim<F: Field>(rep: &Representation<F>, i: VertexId, starred: bool) -> Result<usize> {
    Ok(linalg::nullity(rep.field(), &exttilde_matrix(rep, i, starred)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OracleKind {
    Epsilon,
    EpsilonStar,
}

/// Minimum of `epsilon_i` (or `epsilon*_i`) over `cfg.count` sampled points.
pub fn estimate_component_invariant(
    c: &Component2x2,
    i: VertexId,
    kind: OracleKind,
    cfg: &SampleConfig,
) -> Result<usize> {
    if !(1..=4).contains(&i) {
        return Err(Error::UnknownVertex(i));
    }
    Ok((0..cfg.count as u64)
        .map(|k| {
            let rep = sample_component_point(c, cfg, k);
            match kind {
                OracleKind::Epsilon => epsilon_of_rep(&rep, i),
                OracleKind::EpsilonStar => epsilon_star_of_rep(&rep, i),
            }
        })
        .min()
        .expect("count >= 1"))
}

/// The same minimum for a dimension vector of the chain.
pub fn estimate_an_invariant(dims: &[u32], i: VertexId, kind: OracleKind, cfg: &SampleConfig) -> Result<usize> {
    if i == 0 || i > dims.len() {
        return Err(Error::UnknownVertex(i));
    }
    let mut best = usize::MAX;
    for k in 0..cfg.count as u64 {
        let rep = sample_an_point(dims, cfg, k)?;
        best = best.min(match kind {
            OracleKind::Epsilon => epsilon_of_rep(&rep, i),
            OracleKind::EpsilonStar => epsilon_star_of_rep(&rep, i),
        });
    }
    Ok(best)
}

/// The isomorphism type of a representation of the square, read off its
/// rank profile.
pub fn certify_decomposition<F: Field>(rep: &Representation<F>) -> Result<Multiset11> {
    multiplicities_from_profile(&rank_profile(rep)?)
}

/// Transposes every map and relabels vertices by the grid involution,
/// giving a representation of the same grid.
pub fn transpose_dual<F: Field>(rep: &Representation<F>) -> Representation<F> {
    let q = rep.quiver();
    let a = |v: VertexId| q.involution(v).expect("vertex of the grid");
    let dims = q.vertices().map(|u| rep.dim(a(u))).collect();
    let maps = q.arrows().iter().map(|arr| rep.map(a(arr.target), a(arr.source)).transpose()).collect();
    Representation::new(rep.field().clone(), q.clone(), dims, maps).expect("transposes of commuting squares commute")
}
