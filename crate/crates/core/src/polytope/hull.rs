//! Exact incremental (beneath-beyond) convex hull of lattice points.
//!
//! Everything is computed inside the affine hull of the input: facet normals
//! are chosen orthogonal (for the standard dot product) to the lineality
//! space, so that a facet normal is a unique primitive integer covector.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::lattice::{Covector, LatticeVector};
use crate::linalg;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct FacetRecord {
    /// Inner normal: `⟨normal, v⟩ >= offset` on the polytope.
    pub normal: Covector,
    pub offset: BigInt,
    /// Sorted vertex indices lying on the facet.
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct FaceRecord {
    pub vertices: Vec<usize>,
    pub dim: usize,
    /// Indices of facets containing this face.
    pub facets: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Geometry {
    pub affine_dim: usize,
    pub lineality: Vec<Covector>,
    pub facets: Vec<FacetRecord>,
    /// All nonempty faces, sorted by (dim, vertices); the last one is the
    /// polytope itself.
    pub faces: Vec<FaceRecord>,
}

/// Affine dimension of a point set (-1 for the empty set).
pub(crate) fn affine_dim(points: &[&LatticeVector]) -> i64 {
    let Some(first) = points.first() else {
        return -1;
    };
    let diffs: Vec<Vec<BigInt>> = points[1..].iter().map(|p| (*p - *first).0).collect();
    linalg::rank(&diffs) as i64
}

/// Picks a maximal affinely independent subset (greedy, in order).
fn independent_subset<'a>(points: &[&'a LatticeVector]) -> Vec<&'a LatticeVector> {
    let mut chosen: Vec<&LatticeVector> = Vec::new();
    let mut diffs: Vec<Vec<BigInt>> = Vec::new();
    for &p in points {
        match chosen.first() {
            None => chosen.push(p),
            Some(first) => {
                let d = (p - *first).0;
                diffs.push(d);
                if linalg::rank(&diffs) == diffs.len() {
                    chosen.push(p);
                } else {
                    diffs.pop();
                }
            }
        }
    }
    chosen
}

struct Builder<'a> {
    points: &'a [LatticeVector],
    rank: usize,
    dim: usize,
    lineality: Vec<Vec<BigInt>>,
    // (d+1) * interior reference point
    interior: LatticeVector,
    facets: Vec<BuildFacet>,
}

#[derive(Clone)]
struct BuildFacet {
    normal: Covector,
    offset: BigInt,
    pts: BTreeSet<usize>,
}

impl<'a> Builder<'a> {
    /// Hyperplane through `through` (which must contain `dim` affinely
    /// independent points of the affine hull), oriented toward the interior.
    fn hyperplane(&self, through: &[&LatticeVector]) -> (Covector, BigInt) {
        let base = through[0];
        let mut rows: Vec<Vec<BigInt>> = through[1..].iter().map(|q| (*q - base).0).collect();
        rows.extend(self.lineality.iter().cloned());
        let raw = Covector(linalg::cross(&rows, self.rank));
        let (mut normal, _) = raw.make_primitive().expect("independent points span a hyperplane");
        let mut offset = normal.pair(base);
        let scale = BigInt::from(self.dim + 1);
        if normal.pair(&self.interior) < &offset * &scale {
            normal = -normal;
            offset = -offset;
        }
        (normal, offset)
    }

    fn facet_from(&self, pts: BTreeSet<usize>) -> BuildFacet {
        let refs: Vec<&LatticeVector> = pts.iter().map(|&i| &self.points[i]).collect();
        let basis = independent_subset(&refs);
        debug_assert_eq!(basis.len(), self.dim);
        let (normal, offset) = self.hyperplane(&basis);
        BuildFacet {
            normal,
            offset,
            pts,
        }
    }

    fn ridge_dim(&self, pts: &BTreeSet<usize>) -> i64 {
        let refs: Vec<&LatticeVector> = pts.iter().map(|&i| &self.points[i]).collect();
        affine_dim(&refs)
    }

    fn add_point(&mut self, idx: usize) {
        let p = &self.points[idx];
        let values: Vec<BigInt> = self.facets.iter().map(|f| f.normal.pair(p)).collect();
        let visible: Vec<usize> = (0..self.facets.len())
            .filter(|&i| values[i] < self.facets[i].offset)
            .collect();
        if visible.is_empty() {
            return;
        }
        let coplanar: Vec<bool> = (0..self.facets.len())
            .map(|i| values[i] == self.facets[i].offset)
            .collect();
        let mut created: Vec<BuildFacet> = Vec::new();
        for &v in &visible {
            for g in 0..self.facets.len() {
                if values[g] < self.facets[g].offset || coplanar[g] {
                    continue;
                }
                let ridge: BTreeSet<usize> = self.facets[v]
                    .pts
                    .intersection(&self.facets[g].pts)
                    .copied()
                    .collect();
                if self.ridge_dim(&ridge) != self.dim as i64 - 2 {
                    continue;
                }
                let mut pts = ridge;
                pts.insert(idx);
                let nf = self.facet_from(pts);
                match created
                    .iter_mut()
                    .find(|f| f.normal == nf.normal && f.offset == nf.offset)
                {
                    Some(existing) => existing.pts.extend(nf.pts),
                    None => created.push(nf),
                }
            }
        }
        for (i, f) in self.facets.iter_mut().enumerate() {
            if coplanar[i] {
                f.pts.insert(idx);
            }
        }
        let mut kept: Vec<BuildFacet> = self
            .facets
            .drain(..)
            .enumerate()
            .filter(|(i, _)| !visible.contains(i))
            .map(|(_, f)| f)
            .collect();
        for nf in created {
            match kept
                .iter_mut()
                .find(|f| f.normal == nf.normal && f.offset == nf.offset)
            {
                Some(existing) => existing.pts.extend(nf.pts),
                None => kept.push(nf),
            }
        }
        self.facets = kept;
    }
}

/// Computes the vertices (sorted) and full face data of `conv(points)`.
/// `points` must be nonempty, deduplicated, and sorted.
pub(crate) fn convex_hull(points: &[LatticeVector]) -> (Vec<LatticeVector>, Geometry) {
    let rank = points[0].rank();
    let refs: Vec<&LatticeVector> = points.iter().collect();
    let simplex = independent_subset(&refs);
    let dim = simplex.len() - 1;
    let base = simplex[0];
    let diffs: Vec<Vec<BigInt>> = simplex[1..].iter().map(|p| (*p - base).0).collect();
    let lineality = linalg::integer_kernel(&diffs, rank);

    if dim == 0 {
        let geometry = Geometry {
            affine_dim: 0,
            lineality: lineality.into_iter().map(Covector).collect(),
            facets: Vec::new(),
            faces: vec![FaceRecord {
                vertices: vec![0],
                dim: 0,
                facets: Vec::new(),
            }],
        };
        return (vec![points[0].clone()], geometry);
    }

    let simplex_idx: Vec<usize> = simplex
        .iter()
        .map(|s| points.iter().position(|p| p == *s).expect("simplex point"))
        .collect();
    let mut interior = LatticeVector::zero(rank);
    for s in &simplex {
        interior = &interior + *s;
    }
    let mut b = Builder {
        points,
        rank,
        dim,
        lineality: lineality.clone(),
        interior,
        facets: Vec::new(),
    };
    for omit in 0..simplex_idx.len() {
        let pts: BTreeSet<usize> = simplex_idx
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != omit)
            .map(|(_, &x)| x)
            .collect();
        let f = b.facet_from(pts);
        b.facets.push(f);
    }
    for idx in 0..points.len() {
        if !simplex_idx.contains(&idx) {
            b.add_point(idx);
        }
    }

    // a boundary point is a vertex iff the normals of its facets span
    let mut vertex_ids: Vec<usize> = Vec::new();
    for idx in 0..points.len() {
        let normals: Vec<Vec<BigInt>> = b
            .facets
            .iter()
            .filter(|f| f.pts.contains(&idx))
            .map(|f| f.normal.0.clone())
            .collect();
        if normals.len() >= dim && linalg::rank(&normals) == dim {
            vertex_ids.push(idx);
        }
    }
    let vertices: Vec<LatticeVector> = vertex_ids.iter().map(|&i| points[i].clone()).collect();
    let remap = |i: &usize| vertex_ids.binary_search(i).ok();

    let mut facets: Vec<FacetRecord> = b
        .facets
        .into_iter()
        .map(|f| FacetRecord {
            normal: f.normal,
            offset: f.offset,
            vertices: f.pts.iter().filter_map(remap).collect(),
        })
        .collect();
    facets.sort_by(|a, b| a.vertices.cmp(&b.vertices).then(a.normal.cmp(&b.normal)));

    let faces = face_lattice(&vertices, &facets);
    let geometry = Geometry {
        affine_dim: dim,
        lineality: lineality.into_iter().map(Covector).collect(),
        facets,
        faces,
    };
    (vertices, geometry)
}

fn face_lattice(vertices: &[LatticeVector], facets: &[FacetRecord]) -> Vec<FaceRecord> {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue: Vec<Vec<usize>> = Vec::new();
    for f in facets {
        if seen.insert(f.vertices.clone()) {
            queue.push(f.vertices.clone());
        }
    }
    while let Some(face) = queue.pop() {
        for f in facets {
            let meet: Vec<usize> = face
                .iter()
                .copied()
                .filter(|i| f.vertices.binary_search(i).is_ok())
                .collect();
            if !meet.is_empty() && seen.insert(meet.clone()) {
                queue.push(meet);
            }
        }
    }
    seen.insert((0..vertices.len()).collect());
    let mut faces: Vec<FaceRecord> = seen
        .into_iter()
        .map(|vs| {
            let refs: Vec<&LatticeVector> = vs.iter().map(|&i| &vertices[i]).collect();
            let dim = affine_dim(&refs) as usize;
            let containing = facets
                .iter()
                .enumerate()
                .filter(|(_, f)| vs.iter().all(|i| f.vertices.binary_search(i).is_ok()))
                .map(|(j, _)| j)
                .collect();
            FaceRecord {
                vertices: vs,
                dim,
                facets: containing,
            }
        })
        .collect();
    faces.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.vertices.cmp(&b.vertices)));
    faces
}

impl Geometry {
    pub(crate) fn facet_normal_sum(&self, face: &FaceRecord, rank: usize) -> Covector {
        let mut acc = Covector::zero(rank);
        for &j in &face.facets {
            acc = &acc + &self.facets[j].normal;
        }
        acc
    }
}
