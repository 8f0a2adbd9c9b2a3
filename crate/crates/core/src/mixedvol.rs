//! Exact lattice volumes and the Bernstein count `n!·MV(Δ_1, …, Δ_n)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::LatticeVector;
use crate::linalg;
use crate::polytope::LatticePolytope;

/// Volume with the simplices of the placing triangulation that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VolumeResult {
    pub value: BigRational,
    pub triangulation: Vec<Vec<LatticeVector>>,
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * BigInt::from(i))
}

/// `|det(v_1 − v_0, …, v_n − v_0)| / n!`.
pub fn simplex_volume(simplex: &[LatticeVector]) -> BigRational {
    let n = simplex[0].rank();
    assert_eq!(simplex.len(), n + 1, "a full simplex has n + 1 vertices");
    let rows: Vec<Vec<BigInt>> = simplex[1..].iter().map(|v| (v - &simplex[0]).0).collect();
    BigRational::new(linalg::det_int(&rows).abs(), factorial(n))
}

/// Placing triangulation: cone from the first vertex of each face over the
/// triangulations of its facets that avoid that vertex.
pub fn triangulate(polytope: &LatticePolytope) -> Vec<Vec<LatticeVector>> {
    let faces = polytope.face_records();
    let top = faces.len() - 1;
    fn rec(faces: &[crate::polytope::hull::FaceRecord], f: usize, out: &mut Vec<Vec<usize>>) {
        let face = &faces[f];
        if face.dim == 0 {
            out.push(vec![face.vertices[0]]);
            return;
        }
        let apex = face.vertices[0];
        for (g, sub) in faces.iter().enumerate() {
            if sub.dim + 1 == face.dim
                && !sub.vertices.contains(&apex)
                && sub.vertices.iter().all(|v| face.vertices.binary_search(v).is_ok())
            {
                let mut inner = Vec::new();
                rec(faces, g, &mut inner);
                for mut s in inner {
                    s.insert(0, apex);
                    out.push(s);
                }
            }
        }
    }
    let mut idx = Vec::new();
    rec(faces, top, &mut idx);
    idx.into_iter()
        .map(|s| s.into_iter().map(|i| polytope.vertices()[i].clone()).collect())
        .collect()
}

pub fn volume_with_triangulation(polytope: &LatticePolytope) -> VolumeResult {
    if polytope.affine_dim() < polytope.rank() {
        return VolumeResult {
            value: BigRational::zero(),
            triangulation: Vec::new(),
        };
    }
    let triangulation = triangulate(polytope);
    let value = triangulation
        .iter()
        .map(|s| simplex_volume(s))
        .fold(BigRational::zero(), |a, b| a + b);
    VolumeResult {
        value,
        triangulation,
    }
}

/// `n`-dimensional Euclidean volume; zero for lower-dimensional polytopes.
pub fn volume(polytope: &LatticePolytope) -> BigRational {
    volume_with_triangulation(polytope).value
}

/// `Σ_{∅ ≠ S ⊆ {1..n}} (−1)^{n−|S|} Vol(Σ_{i∈S} Δ_i)`.
pub fn bkk_number(polytopes: &[LatticePolytope]) -> Result<BigRational> {
    let n = polytopes.len();
    let rank = polytopes.first().map(|p| p.rank()).unwrap_or(0);
    if n != rank || n == 0 {
        return Err(Error::PolytopeCount {
            expected: rank,
            got: n,
        });
    }
    for p in polytopes {
        if p.rank() != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                got: p.rank(),
            });
        }
    }
    let mut total = BigRational::zero();
    for mask in 1u32..(1 << n) {
        let chosen: Vec<LatticePolytope> = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| polytopes[i].clone())
            .collect();
        let v = volume(&LatticePolytope::sum_all(&chosen)?);
        if (n - chosen.len()) % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn poly(points: &[&[i64]]) -> LatticePolytope {
        LatticePolytope::from_i64s(points).unwrap()
    }

    #[test]
    fn volumes() {
        assert_eq!(volume(&poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])), q(1));
        assert_eq!(
            volume(&poly(&[&[0, 0], &[1, 0], &[0, 1]])),
            BigRational::new(BigInt::one(), BigInt::from(2))
        );
        assert_eq!(volume(&poly(&[&[0, 0], &[3, 1]])), q(0));
        let cube: Vec<Vec<i64>> = (0..8).map(|i| vec![i & 1, (i >> 1) & 1, (i >> 2) & 1]).collect();
        let refs: Vec<&[i64]> = cube.iter().map(|v| v.as_slice()).collect();
        let vr = volume_with_triangulation(&poly(&refs));
        assert_eq!(vr.value, q(1));
        assert!(vr.triangulation.iter().all(|s| s.len() == 4));
    }

    #[test]
    fn bkk_examples() {
        let tri = poly(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(bkk_number(&[tri.clone(), tri]).unwrap(), q(1));
        let tri2 = poly(&[&[0, 0], &[2, 0], &[0, 2]]);
        assert_eq!(bkk_number(&[tri2.clone(), tri2]).unwrap(), q(4));
        let a = poly(&[&[0, 0], &[1, 0]]);
        let b = poly(&[&[0, 0], &[0, 1]]);
        assert_eq!(bkk_number(&[a.clone(), b]).unwrap(), q(1));
        assert_eq!(
            bkk_number(&[a]),
            Err(Error::PolytopeCount { expected: 2, got: 1 })
        );
    }
}
