//! Predicates on tuples of polytopes: face decompositions, affine
//! independence of edges, developedness, genericity of covectors, and
//! convenience of a fan.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{Face, Fan, LatticePolytope};
use crate::error::{Error, Result};
use crate::lattice::{Covector, LatticeVector};
use crate::linalg;

fn check_ranks(tuple: &[LatticePolytope], rank: usize) -> Result<()> {
    for p in tuple {
        if p.rank() != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                got: p.rank(),
            });
        }
    }
    Ok(())
}

/// `(Δ_1^ξ, …, Δ_k^ξ)`; their sum is `(Δ_1 + … + Δ_k)^ξ`.
pub fn face_decomposition(xi: &Covector, tuple: &[LatticePolytope]) -> Result<Vec<Face>> {
    check_ranks(tuple, xi.rank())?;
    tuple.iter().map(|p| p.face_in_direction(xi)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeIndependence {
    Independent,
    /// First violating choice of edges (one per polytope, lexicographic in
    /// edge order) together with their canonical directions.
    Dependent {
        edges: Vec<Face>,
        directions: Vec<LatticeVector>,
    },
    /// More polytopes than the ambient rank: k directions can never be
    /// independent.
    TooManyPolytopes { k: usize, rank: usize },
}

impl EdgeIndependence {
    pub fn holds(&self) -> bool {
        matches!(self, EdgeIndependence::Independent)
    }
}

/// Whether every choice of one edge per polytope gives linearly independent
/// directions.
pub fn edges_affine_independent(tuple: &[LatticePolytope]) -> EdgeIndependence {
    let k = tuple.len();
    let Some(rank) = tuple.first().map(|p| p.rank()) else {
        return EdgeIndependence::Independent;
    };
    if k > rank {
        return EdgeIndependence::TooManyPolytopes { k, rank };
    }
    let edges: Vec<Vec<Face>> = tuple.iter().map(|p| p.edges()).collect();
    if edges.iter().any(|e| e.is_empty()) {
        // no edge tuple exists at all
        return EdgeIndependence::Independent;
    }
    // distinct directions per polytope, each with the first edge realizing it
    let dirs: Vec<Vec<(LatticeVector, usize)>> = edges
        .iter()
        .map(|es| {
            let mut out: Vec<(LatticeVector, usize)> = Vec::new();
            for (i, e) in es.iter().enumerate() {
                let d = e.edge_direction().expect("edge");
                if !out.iter().any(|(x, _)| *x == d) {
                    out.push((d, i));
                }
            }
            out
        })
        .collect();

    // depth-first in lexicographic order; a dependent prefix already violates
    let mut choice = vec![0usize; k];
    let mut depth = 0usize;
    loop {
        let prefix: Vec<Vec<BigInt>> = (0..=depth)
            .map(|i| dirs[i][choice[i]].0 .0.clone())
            .collect();
        if linalg::rank(&prefix) < depth + 1 {
            for c in choice.iter_mut().skip(depth + 1) {
                *c = 0;
            }
            let picked: Vec<Face> = (0..k).map(|i| edges[i][dirs[i][choice[i]].1].clone()).collect();
            let directions = (0..k).map(|i| dirs[i][choice[i]].0.clone()).collect();
            return EdgeIndependence::Dependent {
                edges: picked,
                directions,
            };
        }
        if depth + 1 < k {
            depth += 1;
            choice[depth] = 0;
            continue;
        }
        // advance odometer
        loop {
            choice[depth] += 1;
            if choice[depth] < dirs[depth].len() {
                break;
            }
            if depth == 0 {
                return EdgeIndependence::Independent;
            }
            depth -= 1;
        }
    }
}

/// One face `Γ` of the Minkowski sum with `dim Γ < k`, its decomposition,
/// and the index of a summand face that is a vertex (if any).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DevelopedFace {
    pub face: Face,
    pub parts: Vec<Face>,
    pub vertex_part: Option<usize>,
}

impl DevelopedFace {
    pub fn vertex(&self) -> Option<(usize, &LatticeVector)> {
        self.vertex_part.map(|j| (j, &self.parts[j].vertices[0]))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DevelopedCertificate {
    pub k: usize,
    pub faces: Vec<DevelopedFace>,
}

impl DevelopedCertificate {
    pub fn holds(&self) -> bool {
        self.faces.iter().all(|f| f.vertex_part.is_some())
    }

    pub fn violation(&self) -> Option<&DevelopedFace> {
        self.faces.iter().find(|f| f.vertex_part.is_none())
    }
}

/// Checks that every face of `Δ_1 + … + Δ_k` of dimension `< k` has a
/// vertex among its summand faces.
pub fn is_developed(tuple: &[LatticePolytope]) -> Result<DevelopedCertificate> {
    let k = tuple.len();
    if k == 0 {
        return Ok(DevelopedCertificate {
            k,
            faces: Vec::new(),
        });
    }
    check_ranks(tuple, tuple[0].rank())?;
    let sum = LatticePolytope::sum_all(tuple)?;
    let mut faces = Vec::new();
    for face in sum.faces().into_iter().filter(|f| f.dim < k) {
        let parts = face_decomposition(&face.witness, tuple)?;
        let vertex_part = parts.iter().position(|p| p.is_vertex());
        faces.push(DevelopedFace {
            face,
            parts,
            vertex_part,
        });
    }
    Ok(DevelopedCertificate { k, faces })
}

/// `ξ` is nonconstant on every edge. The zero covector is never generic.
pub fn is_generic_covector(xi: &Covector, polytope: &LatticePolytope) -> bool {
    if xi.is_zero() || xi.rank() != polytope.rank() {
        return false;
    }
    polytope
        .edge_directions()
        .iter()
        .all(|d| !xi.pair(d).is_zero())
}

/// `ξ` attains both its minimum and its maximum only at vertices.
pub fn is_weakly_generic(xi: &Covector, polytope: &LatticePolytope) -> bool {
    if xi.is_zero() || xi.rank() != polytope.rank() {
        return false;
    }
    let neg = -xi.clone();
    let (Ok(lo), Ok(hi)) = (polytope.face_in_direction(xi), polytope.face_in_direction(&neg)) else {
        return false;
    };
    lo.is_vertex() && hi.is_vertex()
}

/// Primitive covectors of max-norm `s`, first nonzero coordinate positive,
/// ordered by support size then descending lexicographic order.
fn covector_shell(rank: usize, s: i64) -> Vec<Covector> {
    let mut out = Vec::new();
    let mut cur = vec![-s; rank];
    loop {
        let max = cur.iter().map(|x| x.abs()).max().unwrap_or(0);
        let first_pos = cur.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0);
        if max == s && first_pos {
            let c = Covector::from_i64s(&cur);
            if c.is_primitive() {
                out.push(c);
            }
        }
        let mut i = rank;
        loop {
            if i == 0 {
                out.sort_by(|a, b| {
                    let na = a.0.iter().filter(|x| !x.is_zero()).count();
                    let nb = b.0.iter().filter(|x| !x.is_zero()).count();
                    na.cmp(&nb).then_with(|| b.cmp(a))
                });
                return out;
            }
            i -= 1;
            if cur[i] < s {
                cur[i] += 1;
                break;
            }
            cur[i] = -s;
        }
    }
}

/// First generic covector in the deterministic enumeration (increasing
/// max-norm; within a shell, by support size then descending lex).
pub fn find_generic_covector(polytope: &LatticePolytope) -> Covector {
    let rank = polytope.rank();
    let dirs = polytope.edge_directions();
    for s in 1.. {
        for c in covector_shell(rank, s) {
            if dirs.iter().all(|d| !c.pair(d).is_zero()) {
                return c;
            }
        }
    }
    unreachable!("finitely many edge hyperplanes cannot cover the lattice")
}

/// Per (maximal cone, polytope index): a vertex `A` with
/// `⟨r, A⟩ = H(r)` for every generator `r` of the cone, if one exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvenienceCertificate {
    pub entries: Vec<(usize, usize, Option<LatticeVector>)>,
}

impl ConvenienceCertificate {
    pub fn holds(&self) -> bool {
        self.entries.iter().all(|(_, _, a)| a.is_some())
    }

    pub fn first_failure(&self) -> Option<(usize, usize)> {
        self.entries
            .iter()
            .find(|(_, _, a)| a.is_none())
            .map(|&(c, i, _)| (c, i))
    }
}

/// Whether every support function `H_{Δ_i}` is linear on every maximal cone
/// of the fan. Agreement of `⟨·, A⟩` with the concave `H` at the generators
/// forces agreement on the whole cone.
pub fn is_convenient(fan: &Fan, tuple: &[LatticePolytope]) -> Result<ConvenienceCertificate> {
    check_ranks(tuple, fan.rank())?;
    fan.check_complete()?;
    let mut entries = Vec::new();
    for c in fan.maximal_cones() {
        let gens = fan.generators(c);
        for (i, p) in tuple.iter().enumerate() {
            let support: Vec<BigInt> = gens
                .iter()
                .map(|g| p.support_function(g))
                .collect::<Result<_>>()?;
            let found = p
                .vertices()
                .iter()
                .find(|a| gens.iter().zip(&support).all(|(g, h)| g.pair(a) == *h))
                .cloned();
            entries.push((c, i, found));
        }
    }
    Ok(ConvenienceCertificate { entries })
}

#[cfg(test)]
pub(crate) fn shell_for_tests(rank: usize, s: i64) -> Vec<Covector> {
    covector_shell(rank, s)
}
