//! The equioriented commutative grid `G_m` on `[1,m_1] x ... x [1,m_d]`.
//!
//! Vertices are coordinate tuples. They are stored with the first coordinate
//! varying fastest, so for the 2x2 grid the storage order
//! `(1,1), (2,1), (1,2), (2,2)` is exactly the numbering `1, 2, 3, 4` with
//! arrows `1->2, 1->3, 2->4, 3->4`, and for a single extent `n` it is the
//! chain `1 -> 2 -> ... -> n`.
//!
//! Public vertex ids are 1-based positions in that order.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// 1-based vertex number in storage order.
pub type VertexId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub source: VertexId,
    pub target: VertexId,
}

/// A commutativity relation `p - q` between the two length-2 paths around a
/// unit square `source -> mid_a -> sink` and `source -> mid_b -> sink`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SquareRelation {
    pub source: VertexId,
    pub mid_a: VertexId,
    pub mid_b: VertexId,
    pub sink: VertexId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridQuiver {
    shape: Vec<usize>,
    coords: Vec<Vec<usize>>,
    arrows: Vec<Arrow>,
    relations: Vec<SquareRelation>,
}

/// Out- and in-neighbourhood data of one vertex.
///
/// `out_pairs` lists `(j1, j2, k)` with `j1 <_lex j2` in `out_1` and
/// `k = k(j1, j2)` the common head; `in_pairs` is the mirror image with `k`
/// the common tail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Neighborhoods {
    pub out_1: Vec<VertexId>,
    pub out_2: Vec<VertexId>,
    pub in_1: Vec<VertexId>,
    pub in_2: Vec<VertexId>,
    pub out_pairs: Vec<(VertexId, VertexId, VertexId)>,
    pub in_pairs: Vec<(VertexId, VertexId, VertexId)>,
}

impl GridQuiver {
    pub fn new(shape: &[usize]) -> Result<Self> {
        if shape.is_empty() {
            return Err(Error::InvalidShape("a grid needs at least one extent".into()));
        }
        if let Some(bad) = shape.iter().find(|&&m| m == 0) {
            return Err(Error::InvalidShape(format!("extent {bad} must be positive")));
        }
        let total: usize = shape.iter().product();
        let mut coords = Vec::with_capacity(total);
        for mut idx in 0..total {
            let mut c = Vec::with_capacity(shape.len());
            for &m in shape {
                c.push(idx % m + 1);
                idx /= m;
            }
            coords.push(c);
        }
        let mut q = GridQuiver { shape: shape.to_vec(), coords, arrows: Vec::new(), relations: Vec::new() };

        for v in 1..=total {
            for axis in 0..shape.len() {
                if let Some(w) = q.step(v, axis) {
                    q.arrows.push(Arrow { source: v, target: w });
                }
            }
        }
        q.arrows.sort();
        for v in 1..=total {
            for a in 0..shape.len() {
                for b in a + 1..shape.len() {
                    if let (Some(x), Some(y)) = (q.step(v, a), q.step(v, b)) {
                        let sink = q.step(x, b).expect("square closes");
                        q.relations.push(SquareRelation { source: v, mid_a: x, mid_b: y, sink });
                    }
                }
            }
        }
        Ok(q)
    }

    /// Parses a comma-separated shape such as `2,2`.
    pub fn parse_shape(text: &str) -> Result<Vec<usize>> {
        text.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .ok()
                    .filter(|&m| m > 0)
                    .ok_or_else(|| Error::Parse(format!("bad grid extent {t:?}")))
            })
            .collect()
    }

    /// The grid two steps from `v` along `axis`, if it exists.
    fn step(&self, v: VertexId, axis: usize) -> Option<VertexId> {
        let mut c = self.coords[v - 1].clone();
        if c[axis] == self.shape[axis] {
            return None;
        }
        c[axis] += 1;
        self.vertex_of(&c)
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn num_vertices(&self) -> usize {
        self.coords.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        1..=self.coords.len()
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn relations(&self) -> &[SquareRelation] {
        &self.relations
    }

    pub fn coords(&self, v: VertexId) -> Result<&[usize]> {
        self.coords.get(v.wrapping_sub(1)).map(|c| c.as_slice()).ok_or(Error::UnknownVertex(v))
    }

    pub fn vertex_of(&self, coords: &[usize]) -> Option<VertexId> {
        if coords.len() != self.shape.len() {
            return None;
        }
        let mut idx = 0;
        let mut stride = 1;
        for (&c, &m) in coords.iter().zip(&self.shape) {
            if c == 0 || c > m {
                return None;
            }
            idx += (c - 1) * stride;
            stride *= m;
        }
        Some(idx + 1)
    }

    pub fn arrow_index(&self, source: VertexId, target: VertexId) -> Option<usize> {
        self.arrows.binary_search(&Arrow { source, target }).ok()
    }

    /// Lexicographic comparison of two vertices by coordinates, first
    /// coordinate most significant.
    pub fn lex_cmp(&self, a: VertexId, b: VertexId) -> Ordering {
        self.coords[a - 1].cmp(&self.coords[b - 1])
    }

    pub fn out_1(&self, v: VertexId) -> Vec<VertexId> {
        let mut out: Vec<_> = self.arrows.iter().filter(|a| a.source == v).map(|a| a.target).collect();
        out.sort_by(|&a, &b| self.lex_cmp(a, b));
        out
    }

    pub fn in_1(&self, v: VertexId) -> Vec<VertexId> {
        let mut inn: Vec<_> = self.arrows.iter().filter(|a| a.target == v).map(|a| a.source).collect();
        inn.sort_by(|&a, &b| self.lex_cmp(a, b));
        inn
    }

    pub fn neighborhoods(&self, v: VertexId) -> Result<Neighborhoods> {
        self.coords(v)?;
        let out_1 = self.out_1(v);
        let in_1 = self.in_1(v);
        let mut out_pairs = Vec::new();
        for (x, &j1) in out_1.iter().enumerate() {
            for &j2 in &out_1[x + 1..] {
                let heads: Vec<_> = self.out_1(j1).into_iter().filter(|k| self.out_1(j2).contains(k)).collect();
                if let [k] = heads[..] {
                    out_pairs.push((j1, j2, k));
                }
            }
        }
        let mut in_pairs = Vec::new();
        for (x, &j1) in in_1.iter().enumerate() {
            for &j2 in &in_1[x + 1..] {
                let tails: Vec<_> = self.in_1(j1).into_iter().filter(|k| self.in_1(j2).contains(k)).collect();
                if let [k] = tails[..] {
                    in_pairs.push((j1, j2, k));
                }
            }
        }
        let mut out_2: Vec<_> = out_pairs.iter().map(|p| p.2).collect();
        out_2.sort_by(|&a, &b| self.lex_cmp(a, b));
        out_2.dedup();
        let mut in_2: Vec<_> = in_pairs.iter().map(|p| p.2).collect();
        in_2.sort_by(|&a, &b| self.lex_cmp(a, b));
        in_2.dedup();
        Ok(Neighborhoods { out_1, out_2, in_1, in_2, out_pairs, in_pairs })
    }

    /// The involution `(i_1, ..., i_d) -> (m_1 - i_1 + 1, ..., m_d - i_d + 1)`,
    /// an isomorphism onto the opposite quiver.
    pub fn involution(&self, v: VertexId) -> Result<VertexId> {
        let c = self.coords(v)?;
        let mirrored: Vec<usize> = c.iter().zip(&self.shape).map(|(&i, &m)| m - i + 1).collect();
        Ok(self.vertex_of(&mirrored).expect("mirror stays in the grid"))
    }
}
