//! Representations of grid quivers by explicit matrices, and their morphisms.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, Matrix};
use crate::quiver::{GridQuiver, VertexId};

/// A representation: a space of dimension `dims[v-1]` at each vertex and a
/// `dims[t] x dims[s]` matrix on each arrow `s -> t`, with every unit square
/// commuting.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation<F: Field> {
    field: F,
    quiver: GridQuiver,
    dims: Vec<usize>,
    maps: Vec<Matrix<F::Elem>>,
}

impl<F: Field> Representation<F> {
    /// `maps` is indexed like `quiver.arrows()`.
    pub fn new(field: F, quiver: GridQuiver, dims: Vec<usize>, maps: Vec<Matrix<F::Elem>>) -> Result<Self> {
        if dims.len() != quiver.num_vertices() {
            return Err(Error::Representation(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                quiver.num_vertices()
            )));
        }
        if maps.len() != quiver.arrows().len() {
            return Err(Error::Representation(format!("{} maps for {} arrows", maps.len(), quiver.arrows().len())));
        }
        for (a, m) in quiver.arrows().iter().zip(&maps) {
            let want = (dims[a.target - 1], dims[a.source - 1]);
            if m.shape() != want {
                return Err(Error::Representation(format!(
                    "map on {} -> {} has shape {:?}, expected {want:?}",
                    a.source,
                    a.target,
                    m.shape()
                )));
            }
        }
        let rep = Representation { field, quiver, dims, maps };
        for r in rep.quiver.relations() {
            let p = linalg::mul(&rep.field, rep.map(r.mid_a, r.sink), rep.map(r.source, r.mid_a));
            let q = linalg::mul(&rep.field, rep.map(r.mid_b, r.sink), rep.map(r.source, r.mid_b));
            if p != q {
                return Err(Error::Representation(format!(
                    "square {} -> {{{}, {}}} -> {} does not commute",
                    r.source, r.mid_a, r.mid_b, r.sink
                )));
            }
        }
        Ok(rep)
    }

    /// All maps zero.
    pub fn zero(field: F, quiver: GridQuiver, dims: Vec<usize>) -> Result<Self> {
        let maps = quiver
            .arrows()
            .iter()
            .map(|a| {
                linalg::zeros(
                    &field,
                    dims.get(a.target - 1).copied().unwrap_or(0),
                    dims.get(a.source - 1).copied().unwrap_or(0),
                )
            })
            .collect();
        Representation::new(field, quiver, dims, maps)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn quiver(&self) -> &GridQuiver {
        &self.quiver
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, v: VertexId) -> usize {
        self.dims[v - 1]
    }

    pub fn maps(&self) -> &[Matrix<F::Elem>] {
        &self.maps
    }

    /// The matrix on arrow `s -> t`.
    pub fn map(&self, s: VertexId, t: VertexId) -> &Matrix<F::Elem> {
        let k = self.quiver.arrow_index(s, t).unwrap_or_else(|| panic!("no arrow {s} -> {t}"));
        &self.maps[k]
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.quiver != other.quiver {
            return Err(Error::Representation("direct sum of representations of different quivers".into()));
        }
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| linalg::direct_sum(&self.field, a, b)).collect();
        Representation::new(self.field.clone(), self.quiver.clone(), dims, maps)
    }

    /// `[f_{j,i} for j in in_1(i)]` side by side, the map into vertex `i`.
    pub fn incoming(&self, i: VertexId) -> Matrix<F::Elem> {
        let mut m = linalg::zeros(&self.field, self.dim(i), 0);
        for j in self.quiver.in_1(i) {
            m = m.hstack(self.map(j, i));
        }
        m
    }

    /// `[f_{i,j} for j in out_1(i)]` stacked, the map out of vertex `i`.
    pub fn outgoing(&self, i: VertexId) -> Matrix<F::Elem> {
        let mut m = linalg::zeros(&self.field, 0, self.dim(i));
        for j in self.quiver.out_1(i) {
            m = m.vstack(self.map(i, j));
        }
        m
    }
}

/// A family of vertex maps `phi_v : M_v -> N_v` (each `dim N_v x dim M_v`).
pub type VertexMaps<E> = Vec<Matrix<E>>;

/// Whether `phi` intertwines every arrow: `N_a phi_s = phi_t M_a`.
pub fn is_morphism<F: Field>(m: &Representation<F>, n: &Representation<F>, phi: &VertexMaps<F::Elem>) -> bool {
    let f = m.field();
    m.quiver().arrows().iter().enumerate().all(|(k, a)| {
        let left = linalg::mul(f, &n.maps()[k], &phi[a.source - 1]);
        let right = linalg::mul(f, &phi[a.target - 1], &m.maps()[k]);
        left == right
    })
}

pub fn compose<F: Field>(field: &F, second: &VertexMaps<F::Elem>, first: &VertexMaps<F::Elem>) -> VertexMaps<F::Elem> {
    second.iter().zip(first).map(|(b, a)| linalg::mul(field, b, a)).collect()
}

/// Flattens vertex maps into one coordinate vector.
pub fn flatten<E: Clone>(phi: &VertexMaps<E>) -> Vec<E> {
    phi.iter().flat_map(|m| (0..m.rows()).flat_map(move |r| m.row(r).to_vec())).collect()
}

/// A basis of `Hom(M, N)`.
pub fn hom_basis<F: Field>(m: &Representation<F>, n: &Representation<F>) -> Result<Vec<VertexMaps<F::Elem>>> {
    if m.quiver() != n.quiver() {
        return Err(Error::Representation("Hom between representations of different quivers".into()));
    }
    let f = m.field();
    let q = m.quiver();
    // unknown block for vertex v starts at offsets[v-1], row-major dim N_v x dim M_v
    let mut offsets = Vec::with_capacity(q.num_vertices());
    let mut total = 0;
    for v in q.vertices() {
        offsets.push(total);
        total += n.dim(v) * m.dim(v);
    }
    let var = |v: VertexId, r: usize, c: usize| offsets[v - 1] + r * m.dim(v) + c;
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    for (k, a) in q.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let (ma, na) = (&m.maps()[k], &n.maps()[k]);
        // (N_a phi_s - phi_t M_a)[r][c] = 0 for r < dim N_t, c < dim M_s
        for r in 0..n.dim(t) {
            for c in 0..m.dim(s) {
                let mut row = vec![f.zero(); total];
                for x in 0..n.dim(s) {
                    let idx = var(s, x, c);
                    row[idx] = f.add(&row[idx], na.get(r, x));
                }
                for y in 0..m.dim(t) {
                    let idx = var(t, r, y);
                    row[idx] = f.sub(&row[idx], ma.get(y, c));
                }
                rows.push(row);
            }
        }
    }
    let system = Matrix::from_vec(rows.len(), total, rows.into_iter().flatten().collect());
    let kernel = linalg::kernel_basis(f, &system);
    Ok(kernel
        .into_iter()
        .map(|v| {
            q.vertices()
                .map(|u| {
                    let start = offsets[u - 1];
                    Matrix::from_vec(n.dim(u), m.dim(u), v[start..start + n.dim(u) * m.dim(u)].to_vec())
                })
                .collect()
        })
        .collect())
}

pub fn hom_dim<F: Field>(m: &Representation<F>, n: &Representation<F>) -> Result<usize> {
    Ok(hom_basis(m, n)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn square() -> GridQuiver {
        GridQuiver::new(&[2, 2]).unwrap()
    }

    #[test]
    fn rejects_noncommuting_square() {
        let q = Rationals;
        let one = linalg::identity(&q, 1);
        let zero = linalg::zeros(&q, 1, 1);
        let maps = vec![one.clone(), one.clone(), one.clone(), zero];
        assert!(Representation::new(q, square(), vec![1, 1, 1, 1], maps).is_err());
    }

    #[test]
    fn rejects_bad_shapes() {
        let q = Rationals;
        let maps = vec![linalg::zeros(&q, 2, 1); 4];
        assert!(Representation::new(q, square(), vec![1, 1, 1, 1], maps).is_err());
    }

    #[test]
    fn zero_rep_hom() {
        let q = Rationals;
        let m = Representation::zero(q, square(), vec![1, 1, 1, 1]).unwrap();
        assert_eq!(hom_dim(&m, &m).unwrap(), 4);
        assert_eq!(m.incoming(4).shape(), (1, 2));
        assert_eq!(m.outgoing(1).shape(), (2, 1));
        assert_eq!(m.outgoing(4).shape(), (0, 1));
        for phi in hom_basis(&m, &m).unwrap() {
            assert!(is_morphism(&m, &m, &phi));
        }
    }
}
