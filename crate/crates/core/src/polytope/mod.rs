//! Exact lattice polytopes: hulls, support functions, faces in a
//! co-direction, Minkowski sums, edges, normal fans, and the combinatorial
//! predicates on tuples of polytopes used by the compactification driver.

mod fan;
pub(crate) mod hull;
mod predicates;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lattice::{Covector, LatticeVector};

pub use fan::{Cone, Fan};
pub use predicates::{
    edges_affine_independent, face_decomposition, find_generic_covector, is_convenient,
    is_developed, is_generic_covector, is_weakly_generic, ConvenienceCertificate,
    DevelopedCertificate, DevelopedFace, EdgeIndependence,
};

use hull::Geometry;

/// Convex hull of finitely many lattice points, stored by its vertices.
#[derive(Clone)]
pub struct LatticePolytope {
    rank: usize,
    vertices: Vec<LatticeVector>,
    geometry: Arc<Geometry>,
}

impl PartialEq for LatticePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.vertices == other.vertices
    }
}

impl Eq for LatticePolytope {}

impl fmt::Debug for LatticePolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LatticePolytope")
            .field("rank", &self.rank)
            .field("vertices", &self.vertices)
            .finish()
    }
}

impl fmt::Display for LatticePolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "conv{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A face `Δ^ξ` of a polytope, identified by indices into the parent's
/// vertex list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub vertex_indices: Vec<usize>,
    pub vertices: Vec<LatticeVector>,
    /// A covector whose minimizing face is exactly this face.
    pub witness: Covector,
    pub dim: usize,
}

impl Face {
    pub fn is_vertex(&self) -> bool {
        self.dim == 0
    }

    /// Primitive direction of an edge, first nonzero coordinate positive.
    pub fn edge_direction(&self) -> Option<LatticeVector> {
        if self.dim != 1 {
            return None;
        }
        (&self.vertices[1] - &self.vertices[0])
            .canonical_direction()
            .ok()
    }
}

impl LatticePolytope {
    /// Convex hull of a nonempty point set; keeps only extreme points.
    pub fn hull<I>(points: I) -> Result<Self>
    where
        I: IntoIterator<Item = LatticeVector>,
    {
        let mut pts: Vec<LatticeVector> = points.into_iter().collect();
        let Some(first) = pts.first() else {
            return Err(Error::EmptyPointSet);
        };
        let rank = first.rank();
        if let Some(bad) = pts.iter().find(|p| p.rank() != rank) {
            return Err(Error::RankMismatch {
                expected: rank,
                got: bad.rank(),
            });
        }
        pts.sort();
        pts.dedup();
        let (vertices, geometry) = hull::convex_hull(&pts);
        Ok(Self {
            rank,
            vertices,
            geometry: Arc::new(geometry),
        })
    }

    pub fn from_i64s(points: &[&[i64]]) -> Result<Self> {
        Self::hull(points.iter().map(|p| LatticeVector::from_i64s(p)))
    }

    pub fn point(p: LatticeVector) -> Self {
        Self::hull([p]).expect("single point")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[LatticeVector] {
        &self.vertices
    }

    pub fn affine_dim(&self) -> usize {
        self.geometry.affine_dim
    }

    /// Primitive covectors spanning the space of linear functions that are
    /// constant on the polytope.
    pub fn lineality(&self) -> &[Covector] {
        &self.geometry.lineality
    }

    /// Facets as (inner normal, offset, vertex indices).
    pub fn facets(&self) -> Vec<(Covector, BigInt, Vec<usize>)> {
        self.geometry
            .facets
            .iter()
            .map(|f| (f.normal.clone(), f.offset.clone(), f.vertices.clone()))
            .collect()
    }

    pub(crate) fn facet_normals(&self) -> Vec<Covector> {
        self.geometry.facets.iter().map(|f| f.normal.clone()).collect()
    }

    fn check_rank(&self, r: usize) -> Result<()> {
        if r != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: r,
            });
        }
        Ok(())
    }

    fn make_face(&self, indices: Vec<usize>, witness: Covector) -> Face {
        let vertices: Vec<LatticeVector> = indices.iter().map(|&i| self.vertices[i].clone()).collect();
        let refs: Vec<&LatticeVector> = vertices.iter().collect();
        let dim = hull::affine_dim(&refs) as usize;
        Face {
            vertex_indices: indices,
            vertices,
            witness,
            dim,
        }
    }

    /// Every nonempty face, ordered by dimension then vertex indices. Each
    /// witness is the sum of the inner normals of the facets containing it.
    pub fn faces(&self) -> Vec<Face> {
        self.geometry
            .faces
            .iter()
            .map(|fr| Face {
                vertex_indices: fr.vertices.clone(),
                vertices: fr.vertices.iter().map(|&i| self.vertices[i].clone()).collect(),
                witness: self.geometry.facet_normal_sum(fr, self.rank),
                dim: fr.dim,
            })
            .collect()
    }

    /// `H_Δ(ξ) = min over vertices of ⟨ξ, v⟩`.
    pub fn support_function(&self, xi: &Covector) -> Result<BigInt> {
        self.check_rank(xi.rank())?;
        Ok(self
            .vertices
            .iter()
            .map(|v| xi.pair(v))
            .min()
            .expect("nonempty polytope"))
    }

    /// The face on which `ξ` attains its minimum.
    pub fn face_in_direction(&self, xi: &Covector) -> Result<Face> {
        let h = self.support_function(xi)?;
        let idx: Vec<usize> = (0..self.vertices.len())
            .filter(|&i| xi.pair(&self.vertices[i]) == h)
            .collect();
        Ok(self.make_face(idx, xi.clone()))
    }

    pub fn minkowski_sum(&self, other: &Self) -> Result<Self> {
        self.check_rank(other.rank)?;
        let mut pts = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for a in &self.vertices {
            for b in &other.vertices {
                pts.push(a + b);
            }
        }
        Self::hull(pts)
    }

    /// Minkowski sum of a nonempty tuple.
    pub fn sum_all(tuple: &[LatticePolytope]) -> Result<Self> {
        let Some(first) = tuple.first() else {
            return Err(Error::EmptyPointSet);
        };
        tuple[1..]
            .iter()
            .try_fold(first.clone(), |acc, p| acc.minkowski_sum(p))
    }

    pub fn translate(&self, by: &LatticeVector) -> Result<Self> {
        self.check_rank(by.rank())?;
        Self::hull(self.vertices.iter().map(|v| v + by))
    }

    /// All one-dimensional faces, each exactly once.
    pub fn edges(&self) -> Vec<Face> {
        self.faces().into_iter().filter(|f| f.dim == 1).collect()
    }

    /// Distinct canonical edge directions, in first-occurrence order.
    pub fn edge_directions(&self) -> Vec<LatticeVector> {
        let mut out: Vec<LatticeVector> = Vec::new();
        for e in self.edges() {
            let d = e.edge_direction().expect("edge");
            if !out.contains(&d) {
                out.push(d);
            }
        }
        out
    }

    pub fn normal_fan(&self) -> Fan {
        Fan::normal_fan(self)
    }

    pub(crate) fn face_records(&self) -> &[hull::FaceRecord] {
        &self.geometry.faces
    }
}
