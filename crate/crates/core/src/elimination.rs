//! Sylvester resultants over a Laurent coefficient ring and the projection
//! of a system along a torus split.
//!
//! Sign convention: the Sylvester matrix lists the `q` rows of `P` first,
//! coefficients in descending degree, so for constant coefficients
//! `Res(P, Q) = a_p^q · b_q^p · Π (α_i − β_j)`. Zero sets never depend on it.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{Covector, LatticeVector, TorusSplit};
use crate::laurent::{LaurentPolynomial, UnivariatePoly};
use crate::polytope::is_weakly_generic;

/// Matrices up to this size may be expanded by cofactors directly.
const COFACTOR_LIMIT: usize = 3;

/// The `(p+q) × (p+q)` Sylvester matrix of two padded coefficient
/// sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylvesterMatrix {
    p: usize,
    q: usize,
    entries: Vec<Vec<LaurentPolynomial>>,
}

impl SylvesterMatrix {
    /// `pc` and `qc` are ascending coefficient lists; missing entries up to
    /// the declared degrees are zero.
    pub fn new(
        rank: usize,
        pc: &[LaurentPolynomial],
        qc: &[LaurentPolynomial],
        p: usize,
        q: usize,
    ) -> Result<Self> {
        if p + q == 0 {
            return Err(Error::EmptyResultant);
        }
        for (coeffs, declared) in [(pc, p), (qc, q)] {
            if let Some(actual) = coeffs.iter().rposition(|c| !c.is_zero()) {
                if actual > declared {
                    return Err(Error::DegreeTooSmall { declared, actual });
                }
            }
        }
        for c in pc.iter().chain(qc) {
            if c.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    got: c.rank(),
                });
            }
        }
        let size = p + q;
        let coeff = |cs: &[LaurentPolynomial], d: usize| {
            cs.get(d).cloned().unwrap_or_else(|| LaurentPolynomial::zero(rank))
        };
        let mut entries = vec![vec![LaurentPolynomial::zero(rank); size]; size];
        for i in 0..q {
            for d in 0..=p {
                entries[i][i + p - d] = coeff(pc, d);
            }
        }
        for i in 0..p {
            for d in 0..=q {
                entries[q + i][i + q - d] = coeff(qc, d);
            }
        }
        Ok(Self { p, q, entries })
    }

    pub fn size(&self) -> usize {
        self.p + self.q
    }

    pub fn entries(&self) -> &[Vec<LaurentPolynomial>] {
        &self.entries
    }

    pub fn determinant(&self) -> LaurentPolynomial {
        determinant(&self.entries)
    }
}

fn matrix_rank(m: &[Vec<LaurentPolynomial>]) -> usize {
    m.first()
        .and_then(|r| r.first())
        .map(|c| c.rank())
        .unwrap_or(0)
}

/// Determinant of a square matrix over the Laurent ring.
///
/// Small matrices use cofactor expansion; larger ones use fraction-free
/// Gaussian elimination with exact division, falling back to cofactor
/// expansion if a division is ever inexact.
pub fn determinant(m: &[Vec<LaurentPolynomial>]) -> LaurentPolynomial {
    if m.len() <= COFACTOR_LIMIT {
        return cofactor_determinant(m);
    }
    bareiss_determinant(m).unwrap_or_else(|| cofactor_determinant(m))
}

/// Laplace expansion along rows, memoized on the set of used columns.
pub fn cofactor_determinant(m: &[Vec<LaurentPolynomial>]) -> LaurentPolynomial {
    let n = m.len();
    if n == 0 {
        return LaurentPolynomial::one(0);
    }
    let rank = matrix_rank(m);
    assert!(n < 64, "cofactor expansion limited to 63 columns");
    let mut memo: HashMap<u64, LaurentPolynomial> = HashMap::new();
    fn rec(
        m: &[Vec<LaurentPolynomial>],
        row: usize,
        used: u64,
        rank: usize,
        memo: &mut HashMap<u64, LaurentPolynomial>,
    ) -> LaurentPolynomial {
        let n = m.len();
        if row == n {
            return LaurentPolynomial::one(rank);
        }
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let mut acc = LaurentPolynomial::zero(rank);
        let mut sign_positive = true;
        for col in 0..n {
            if used & (1 << col) != 0 {
                continue;
            }
            let entry = &m[row][col];
            if !entry.is_zero() {
                let minor = rec(m, row + 1, used | (1 << col), rank, memo);
                let term = entry.mul(&minor).expect("uniform rank");
                acc = if sign_positive {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                }
                .expect("uniform rank");
            }
            sign_positive = !sign_positive;
        }
        memo.insert(used, acc.clone());
        acc
    }
    rec(m, 0, 0, rank, &mut memo)
}

/// Fraction-free elimination; `None` if an exact division fails.
pub fn bareiss_determinant(m: &[Vec<LaurentPolynomial>]) -> Option<LaurentPolynomial> {
    let n = m.len();
    let rank = matrix_rank(m);
    if n == 0 {
        return Some(LaurentPolynomial::one(rank));
    }
    let mut a: Vec<Vec<LaurentPolynomial>> = m.to_vec();
    let mut prev = LaurentPolynomial::one(rank);
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            // Prefer the sparsest nonzero pivot.
            let swap = (k + 1..n)
                .filter(|&r| !a[r][k].is_zero())
                .min_by_key(|&r| a[r][k].len());
            match swap {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Some(LaurentPolynomial::zero(rank)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[k][k]
                    .mul(&a[i][j])
                    .ok()?
                    .sub(&a[i][k].mul(&a[k][j]).ok()?)
                    .ok()?;
                a[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Some(if negate { d.neg() } else { d })
}

/// `R_{p,q}(P, Q)` with declared degrees `p ≥ deg P`, `q ≥ deg Q`.
///
/// If `q = 0` this is `(Q_0)^p`; if `p = 0` it is `(P_0)^q`. Padding both
/// leading coefficients with zeros gives `0`.
pub fn resultant(
    p_poly: &UnivariatePoly,
    q_poly: &UnivariatePoly,
    p: usize,
    q: usize,
) -> Result<LaurentPolynomial> {
    let rank = p_poly.coefficient_rank();
    if q_poly.coefficient_rank() != rank {
        return Err(Error::RankMismatch {
            expected: rank,
            got: q_poly.coefficient_rank(),
        });
    }
    let m = SylvesterMatrix::new(rank, p_poly.coeffs(), q_poly.coeffs(), p, q)?;
    Ok(m.determinant())
}

/// A polynomial in parameters `λ_1..λ_N` whose coefficients are Laurent
/// polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaPoly {
    n_params: usize,
    rank: usize,
    terms: BTreeMap<Vec<u32>, LaurentPolynomial>,
}

impl LambdaPoly {
    pub fn n_params(&self) -> usize {
        self.n_params
    }

    /// Rank of the coefficient ring.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(λ-exponent, c_{k_1..k_N})` pairs with nonzero coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &LaurentPolynomial)> {
        self.terms.iter()
    }

    pub fn coefficients(&self) -> Vec<LaurentPolynomial> {
        self.terms.values().cloned().collect()
    }

    /// Whether every λ-monomial has total degree `d`.
    pub fn is_homogeneous_of_degree(&self, d: u32) -> bool {
        self.terms.keys().all(|k| k.iter().sum::<u32>() == d)
    }

    /// Substitutes rational values for the parameters.
    pub fn specialize(&self, lambda: &[BigRational]) -> Result<LaurentPolynomial> {
        if lambda.len() != self.n_params {
            return Err(Error::RankMismatch {
                expected: self.n_params,
                got: lambda.len(),
            });
        }
        let mut out = LaurentPolynomial::zero(self.rank);
        for (k, c) in &self.terms {
            let mut w = BigRational::one();
            for (l, e) in lambda.iter().zip(k) {
                for _ in 0..*e {
                    w *= l;
                }
            }
            out = out.add(&c.scale(&w))?;
        }
        Ok(out)
    }
}

/// All exponent vectors of length `n` with entries summing to `d`, in
/// lexicographic order.
fn homogeneous_exponents(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in homogeneous_exponents(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Inverse of a nonsingular rational matrix by Gauss-Jordan elimination.
fn invert(m: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("interpolation nodes are unisolvent");
        a.swap(col, p);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..2 * n {
                    let t = &a[col][c] * &f;
                    a[r][c] -= t;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Expands `R_{p,q}(P, λ_1 Q_1 + … + λ_N Q_N)` in the parameters, with
/// `p = deg P` and `q = max deg Q_i`.
///
/// The result is homogeneous of degree `p` in `λ`, so it is recovered
/// exactly from its values at the lattice points `{k ∈ N^N : |k| = p}`,
/// which are unisolvent for that space.
pub fn parametric_resultant(p_poly: &UnivariatePoly, qs: &[UnivariatePoly]) -> Result<LambdaPoly> {
    if qs.is_empty() {
        return Err(Error::NoEquations);
    }
    let rank = p_poly.coefficient_rank();
    for q in qs {
        if q.coefficient_rank() != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                got: q.coefficient_rank(),
            });
        }
    }
    let n = qs.len();
    let p = p_poly.degree().ok_or(Error::ZeroPivot)?;
    let q = qs.iter().filter_map(|u| u.degree()).max().unwrap_or(0);
    let p32 = u32::try_from(p).map_err(|_| Error::InvalidArgument("degree overflow".into()))?;
    let monomials = homogeneous_exponents(n, p32);
    let refs: Vec<&UnivariatePoly> = qs.iter().collect();
    let split = qs[0].split();
    let mut values = Vec::with_capacity(monomials.len());
    for node in &monomials {
        let lambda: Vec<BigRational> = node
            .iter()
            .map(|&k| BigRational::from_integer(BigInt::from(k)))
            .collect();
        let q_lambda = UnivariatePoly::linear_combination(split, &refs, &lambda);
        values.push(resultant(p_poly, &q_lambda, p, q)?);
    }
    let vandermonde: Vec<Vec<BigRational>> = monomials
        .iter()
        .map(|node| {
            monomials
                .iter()
                .map(|m| {
                    let v: BigInt = node
                        .iter()
                        .zip(m)
                        .map(|(&x, &e)| num_traits::pow(BigInt::from(x), e as usize))
                        .product();
                    BigRational::from_integer(v)
                })
                .collect()
        })
        .collect();
    let inverse = invert(&vandermonde);
    let mut terms = BTreeMap::new();
    for (m, row) in monomials.iter().zip(&inverse) {
        let mut c = LaurentPolynomial::zero(rank);
        for (w, v) in row.iter().zip(&values) {
            if !w.is_zero() {
                c = c.add(&v.scale(w))?;
            }
        }
        if !c.is_zero() {
            terms.insert(m.clone(), c);
        }
    }
    Ok(LambdaPoly {
        n_params: n,
        rank,
        terms,
    })
}

/// Replaces a list of equations by a canonical sublist with the same common
/// zero set in the torus: each equation is normalized (monomial shift and
/// leading scalar stripped), the list is sorted canonically (sparsest
/// first), and an equation is kept only if it is not a Q-linear combination
/// of those already kept.
pub fn prune_equations(polys: &[LaurentPolynomial]) -> Vec<LaurentPolynomial> {
    let mut normalized: Vec<LaurentPolynomial> = polys
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.normalized())
        .collect();
    normalized.sort_by(|a, b| a.canonical_cmp(b));
    normalized.dedup();
    independent_subset(&normalized)
}

/// Greedy maximal linearly independent sublist, in the given order.
pub fn independent_subset(polys: &[LaurentPolynomial]) -> Vec<LaurentPolynomial> {
    let monomials: BTreeSet<LatticeVector> = polys
        .iter()
        .flat_map(|p| p.terms().map(|(e, _)| e.clone()))
        .collect();
    let columns: Vec<LatticeVector> = monomials.into_iter().collect();
    // Echelon rows of the kept equations, each with its pivot column.
    let mut echelon: Vec<(usize, Vec<BigRational>)> = Vec::new();
    let mut kept = Vec::new();
    for p in polys {
        let mut v: Vec<BigRational> = columns.iter().map(|m| p.coefficient(m)).collect();
        for (col, row) in &echelon {
            if !v[*col].is_zero() {
                let f = v[*col].clone() / &row[*col];
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x -= &f * r;
                    }
                }
            }
        }
        if let Some(col) = v.iter().position(|x| !x.is_zero()) {
            echelon.push((col, v));
            kept.push(p.clone());
        }
    }
    kept
}

/// One projection step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projection {
    pub split: TorusSplit,
    /// Degree of the pivot in `t = x^e`.
    pub pivot_degree: usize,
    /// Number of λ-monomials of degree `p`, i.e. coefficient slots
    /// `c_{k_1..k_N}` (after the `Q_i` are reduced to a basis of their span).
    pub raw_count: usize,
    /// Pruned equations in the kernel coordinates (rank `n − 1`).
    pub equations: Vec<LaurentPolynomial>,
}

fn describe_weak_genericity_failure(phi: &Covector, pivot: &LaurentPolynomial) -> String {
    let Ok(poly) = pivot.newton_polytope() else {
        return "zero pivot".into();
    };
    if phi.is_zero() {
        return "phi is the zero covector".into();
    }
    for (xi, what) in [(phi.clone(), "minimum"), (-phi.clone(), "maximum")] {
        if let Ok(face) = poly.face_in_direction(&xi) {
            if !face.is_vertex() {
                let verts: Vec<String> = face.vertices.iter().map(|v| v.to_string()).collect();
                return format!(
                    "{what} of phi={phi} is attained on the {}-dimensional face {{{}}}",
                    face.dim,
                    verts.join(", ")
                );
            }
        }
    }
    format!("phi={phi} does not match the rank of the pivot")
}

/// Projection of `system` along `split`: the first entry is
/// the pivot `P`, the remaining nonzero entries are `Q_1..Q_N`.
pub fn project(system: &[LaurentPolynomial], split: &TorusSplit) -> Result<Projection> {
    let pivot = system.first().ok_or(Error::ZeroPivot)?;
    if pivot.is_zero() {
        return Err(Error::ZeroPivot);
    }
    let n = split.rank();
    for f in system {
        if f.rank() != n {
            return Err(Error::RankMismatch {
                expected: n,
                got: f.rank(),
            });
        }
    }
    let poly = pivot.newton_polytope()?;
    if !is_weakly_generic(&split.phi, &poly) {
        return Err(Error::NotWeaklyGeneric(describe_weak_genericity_failure(
            &split.phi, pivot,
        )));
    }
    let (pu, _) = pivot.to_univariate(split)?;
    debug_assert!(pu.coeffs().first().is_some_and(|c| c.is_monomial()));
    debug_assert!(pu.coeffs().last().is_some_and(|c| c.is_monomial()));
    // Only the span of the Q_i matters: Q_λ runs over the same polynomials.
    let shifted: Vec<LaurentPolynomial> = system[1..]
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| {
            f.to_univariate(split)
                .map(|(u, _)| LaurentPolynomial::from_univariate(&u, &BigInt::zero()))
        })
        .collect::<Result<_>>()?;
    let qs: Vec<UnivariatePoly> = independent_subset(&shifted)
        .iter()
        .map(|f| f.to_univariate(split).map(|(u, _)| u))
        .collect::<Result<_>>()?;
    if qs.is_empty() {
        return Err(Error::NoEquations);
    }
    let p = pu.degree().unwrap_or(0);
    if p == 0 {
        // a pivot of degree zero is a unit on the torus
        return Ok(Projection {
            split: split.clone(),
            pivot_degree: 0,
            raw_count: 1,
            equations: vec![LaurentPolynomial::one(n - 1)],
        });
    }
    if split.rank() == 1 {
        // Constant coefficients: all c vanish exactly when P and every Q_i
        // share a root (a finite union of proper subspaces of λ-space cannot
        // cover it), so a gcd decides the answer.
        let constants = |u: &UnivariatePoly| -> Vec<BigRational> {
            u.coeffs()
                .iter()
                .map(|c| c.coefficient(&LatticeVector::zero(0)))
                .collect()
        };
        let mut g = constants(&pu);
        for u in &qs {
            g = rational_gcd(g, constants(u));
        }
        let equations = if g.len() > 1 {
            Vec::new()
        } else {
            vec![LaurentPolynomial::one(0)]
        };
        return Ok(Projection {
            split: split.clone(),
            pivot_degree: p,
            raw_count: binomial(qs.len() + p - 1, p),
            equations,
        });
    }
    // Along the moment curve λ(s) = (1, s, …, s^{N−1}) the resultant is a
    // polynomial in s of degree at most p(N − 1). For y outside the
    // projection, R(λ)(y) vanishes only on p hyperplanes of λ-space, none of
    // which contains the curve; so the s-coefficients, equivalently the
    // values at p(N − 1) + 1 distinct s, cut out exactly the same set as the
    // full list of c's, and they lie in its Q-span.
    // Res(P, Q) = ±a_p^q · det(M_Q) where M_Q is multiplication by Q on
    // R[t]/(P); a_p is a monomial, so both normalize to the same equation.
    let lead_inv = monomial_inverse(&pu.coeffs()[p]);
    let mats: Vec<Vec<Vec<LaurentPolynomial>>> = qs
        .iter()
        .map(|u| multiplication_matrix(pu.coeffs(), &lead_inv, u.coeffs()))
        .collect::<Result<_>>()?;
    let samples = p * (qs.len() - 1) + 1;
    let values: Vec<LaurentPolynomial> = (0..samples)
        .map(|s| {
            let mut power = BigInt::one();
            let mut m = vec![vec![LaurentPolynomial::zero(n - 1); p]; p];
            for mat in &mats {
                let l = BigRational::from_integer(power.clone());
                power *= BigInt::from(s);
                for (row, mrow) in m.iter_mut().zip(mat) {
                    for (x, y) in row.iter_mut().zip(mrow) {
                        *x = x.add(&y.scale(&l))?;
                    }
                }
            }
            Ok(determinant(&m))
        })
        .collect::<Result<_>>()?;
    Ok(Projection {
        split: split.clone(),
        pivot_degree: p,
        raw_count: binomial(qs.len() + p - 1, p),
        equations: prune_equations(&values),
    })
}

fn monomial_inverse(m: &LaurentPolynomial) -> LaurentPolynomial {
    let (e, c) = m.terms().next().expect("nonzero monomial");
    LaurentPolynomial::monomial(-e.clone(), BigRational::one() / c)
}

/// Matrix of `Q ↦ t·Q` reduced modulo the pivot, in the basis `1, t, …, t^{p−1}`,
/// applied to `q`: column `j` holds `t^j·Q mod P`.
fn multiplication_matrix(
    pc: &[LaurentPolynomial],
    lead_inv: &LaurentPolynomial,
    qc: &[LaurentPolynomial],
) -> Result<Vec<Vec<LaurentPolynomial>>> {
    let p = pc.len() - 1;
    let rank = pc[0].rank();
    // monic tail: t^p ≡ −Σ_{i<p} (a_i / a_p) t^i
    let tail: Vec<LaurentPolynomial> = pc[..p]
        .iter()
        .map(|a| a.mul(lead_inv).map(|x| x.neg()))
        .collect::<Result<_>>()?;
    let mut r: Vec<LaurentPolynomial> = qc.to_vec();
    for d in (p..r.len()).rev() {
        let c = std::mem::replace(&mut r[d], LaurentPolynomial::zero(rank));
        if c.is_zero() {
            continue;
        }
        for (i, t) in tail.iter().enumerate() {
            r[d - p + i] = r[d - p + i].add(&c.mul(t)?)?;
        }
    }
    r.resize(p, LaurentPolynomial::zero(rank));
    let mut cols = Vec::with_capacity(p);
    for _ in 0..p {
        let top = r[p - 1].clone();
        let mut next = Vec::with_capacity(p);
        next.push(LaurentPolynomial::zero(rank));
        next.extend(r[..p - 1].iter().cloned());
        if !top.is_zero() {
            for (i, t) in tail.iter().enumerate() {
                next[i] = next[i].add(&top.mul(t)?)?;
            }
        }
        cols.push(std::mem::replace(&mut r, next));
    }
    Ok((0..p).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect())
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Monic gcd of two univariate polynomials over Q (ascending coefficients).
fn rational_gcd(a: Vec<BigRational>, b: Vec<BigRational>) -> Vec<BigRational> {
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let f = a.last().expect("nonempty") / b.last().expect("nonempty");
            for (i, c) in b.iter().enumerate() {
                a[i + shift] -= &f * c;
            }
            a = trim(a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    if let Some(lc) = a.last().cloned() {
        for c in a.iter_mut() {
            *c /= &lc;
        }
    }
    a
}

/// Defining equations of the projection of the zero set of `system` into
/// the subtorus with character lattice `ker φ`.
pub fn projection_equations(
    system: &[LaurentPolynomial],
    split: &TorusSplit,
) -> Result<Vec<LaurentPolynomial>> {
    project(system, split).map(|p| p.equations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn lp(s: &str, rank: usize) -> LaurentPolynomial {
        LaurentPolynomial::parse_with_rank(s, rank).unwrap()
    }

    fn uni(coeffs: &[i64]) -> UnivariatePoly {
        UnivariatePoly::over_rationals(coeffs.iter().map(|&c| q(c)).collect())
    }

    fn constant(p: &LaurentPolynomial) -> BigRational {
        assert_eq!(p.rank(), 0);
        p.coefficient(&LatticeVector::zero(0))
    }

    #[test]
    fn two_by_two() {
        // P = a0 + a1 t, Q = b0 + b1 t: det [[a1, a0], [b1, b0]] = a1 b0 − a0 b1
        let r = resultant(&uni(&[2, 3]), &uni(&[5, 7]), 1, 1).unwrap();
        assert_eq!(constant(&r), q(3 * 5 - 2 * 7));
    }

    #[test]
    fn common_root_vanishes() {
        let r = resultant(&uni(&[-2, 1]), &uni(&[-2, 1]), 1, 1).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn padded_leading_coefficients_vanish() {
        let r = resultant(&uni(&[1, 1]), &uni(&[3, 1]), 2, 2).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn degenerate_degrees() {
        let r = resultant(&uni(&[1, 2, 1]), &uni(&[3]), 2, 0).unwrap();
        assert_eq!(constant(&r), q(9));
        let r = resultant(&uni(&[5]), &uni(&[1, 1, 1]), 0, 2).unwrap();
        assert_eq!(constant(&r), q(25));
        assert_eq!(resultant(&uni(&[5]), &uni(&[3]), 0, 0), Err(Error::EmptyResultant));
        assert_eq!(
            resultant(&uni(&[1, 1, 1]), &uni(&[1]), 1, 0),
            Err(Error::DegreeTooSmall { declared: 1, actual: 2 })
        );
    }

    #[test]
    fn determinant_algorithms_agree() {
        let rank = 2;
        let cells = [
            "x1 + 1", "x2", "0", "3", "x1*x2^-1",
            "2", "x1 - x2", "x2^2", "0", "1",
            "0", "1", "x1", "x2 - 1", "5/2",
            "x1^-1", "0", "7", "x1 + x2", "0",
            "1", "1", "0", "x2", "x1^2",
        ];
        let m: Vec<Vec<LaurentPolynomial>> = cells
            .chunks(5)
            .map(|row| row.iter().map(|c| lp(c, rank)).collect())
            .collect();
        let b = bareiss_determinant(&m).unwrap();
        assert_eq!(b, cofactor_determinant(&m));
        assert!(!b.is_zero());
    }

    #[test]
    fn parametric_worked_example() {
        // x1x2 − 1 and x1 − x2 split along phi = (0,1), t = x2.
        let split = TorusSplit::complete(&Covector::from_i64s(&[0, 1])).unwrap();
        let (p, _) = lp("x1*x2 - 1", 2).to_univariate(&split).unwrap();
        let (q1, _) = lp("x1 - x2", 2).to_univariate(&split).unwrap();
        let r = parametric_resultant(&p, &[q1]).unwrap();
        assert_eq!(r.n_params(), 1);
        let terms: Vec<_> = r.terms().collect();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].0, &vec![1]);
        assert_eq!(terms[0].1.normalized(), lp("x1^2 - 1", 1));
    }

    #[test]
    fn parametric_constant_q() {
        let split = TorusSplit::complete(&Covector::from_i64s(&[0, 1])).unwrap();
        let (p, _) = lp("x2 - 3", 2).to_univariate(&split).unwrap();
        let (q1, _) = lp("x1 + 4", 2).to_univariate(&split).unwrap();
        let r = parametric_resultant(&p, &[q1]).unwrap();
        let terms: Vec<_> = r.terms().collect();
        assert_eq!(terms, vec![(&vec![1], &lp("x1 + 4", 1))]);
        assert_eq!(parametric_resultant(&p, &[]), Err(Error::NoEquations));
    }

    #[test]
    fn parametric_repeated_q_is_binomial() {
        // Q2 = Q1: R(λ1, λ2) = R1 · (λ1 + λ2)^p
        let split = TorusSplit::complete(&Covector::from_i64s(&[0, 1])).unwrap();
        let (p, _) = lp("x2^2 - x1*x2 + 2", 2).to_univariate(&split).unwrap();
        let (q1, _) = lp("x2 + x1", 2).to_univariate(&split).unwrap();
        let single = parametric_resultant(&p, std::slice::from_ref(&q1)).unwrap();
        let double = parametric_resultant(&p, &[q1.clone(), q1]).unwrap();
        let base = single.terms().next().unwrap().1.clone();
        let expect = [(vec![2, 0], 1), (vec![1, 1], 2), (vec![0, 2], 1)];
        assert_eq!(double.terms().count(), 3);
        for (k, binom) in expect {
            let c = double.terms().find(|(kk, _)| **kk == k).unwrap().1;
            assert_eq!(c, &base.scale(&q(binom)));
        }
    }

    #[test]
    fn projection_examples() {
        let split = TorusSplit::complete(&Covector::from_i64s(&[0, 1])).unwrap();
        let eqs = projection_equations(&[lp("x1*x2 - 1", 2), lp("x1 - x2", 2)], &split).unwrap();
        assert_eq!(eqs, vec![lp("x1^2 - 1", 1)]);

        let eqs = projection_equations(&[lp("x1*x2 - 1", 2), lp("x1*x2 - 1", 2)], &split).unwrap();
        assert!(eqs.is_empty());

        let split = TorusSplit::complete(&Covector::from_i64s(&[1, 0])).unwrap();
        let eqs = projection_equations(&[lp("x1 - 1", 2), lp("x2 - 1", 2)], &split).unwrap();
        assert_eq!(eqs, vec![lp("x1 - 1", 1)]);
    }

    #[test]
    fn projection_errors() {
        let split = TorusSplit::complete(&Covector::from_i64s(&[0, 1])).unwrap();
        assert_eq!(
            projection_equations(&[lp("x2 - 1", 2), LaurentPolynomial::zero(2)], &split),
            Err(Error::NoEquations)
        );
        assert_eq!(
            projection_equations(&[LaurentPolynomial::zero(2), lp("x2 - 1", 2)], &split),
            Err(Error::ZeroPivot)
        );
        // phi = (0,1) is constant on the edge of x1 − 1
        assert!(matches!(
            projection_equations(&[lp("x1 - 1", 2), lp("x2 - 1", 2)], &split),
            Err(Error::NotWeaklyGeneric(_))
        ));
    }

    fn from_roots(lead: i64, roots: &[i64]) -> UnivariatePoly {
        let mut c = vec![q(lead)];
        for &r in roots {
            let mut next = vec![q(0); c.len() + 1];
            for (i, a) in c.iter().enumerate() {
                next[i + 1] += a;
                next[i] -= a * q(r);
            }
            c = next;
        }
        UnivariatePoly::over_rationals(c)
    }

    proptest! {
        #[test]
        fn root_list_oracle(
            a in prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]),
            b in prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]),
            ra in prop::collection::vec(-4i64..5, 0..4),
            rb in prop::collection::vec(-4i64..5, 0..4),
        ) {
            prop_assume!(!ra.is_empty() || !rb.is_empty());
            let r = resultant(&from_roots(a, &ra), &from_roots(b, &rb), ra.len(), rb.len()).unwrap();
            let mut expect = q(a).pow(rb.len() as i32) * q(b).pow(ra.len() as i32);
            for x in &ra {
                for y in &rb {
                    expect *= q(x - y);
                }
            }
            let shared = ra.iter().any(|x| rb.contains(x));
            prop_assert_eq!(r.is_zero(), shared);
            prop_assert_eq!(constant(&r), expect);
        }

        #[test]
        fn multiplication_matrix_matches_sylvester(
            lead in prop::sample::select(vec![-2i64, -1, 1, 3]),
            pc in prop::collection::vec(-4i64..5, 1..4),
            qc in prop::collection::vec(-4i64..5, 1..6),
        ) {
            let mut pcs = pc.clone();
            pcs.push(lead);
            let pp = uni(&pcs);
            let qq = uni(&qc);
            let Some(qd) = qq.degree() else { return Ok(()) };
            let inv = monomial_inverse(&pp.coeffs()[pc.len()]);
            let m = multiplication_matrix(pp.coeffs(), &inv, qq.coeffs()).unwrap();
            let det = constant(&determinant(&m)) * q(lead).pow(qd as i32);
            let syl = constant(&resultant(&pp, &qq, pc.len(), qd).unwrap());
            prop_assert_eq!(det, syl);
        }

        #[test]
        fn multiplicativity(
            p in prop::collection::vec(-3i64..4, 1..4),
            q1 in prop::collection::vec(-3i64..4, 1..3),
            q2 in prop::collection::vec(-3i64..4, 1..3),
        ) {
            let pp = from_roots(1, &p);
            let a = from_roots(2, &q1);
            let b = from_roots(-1, &q2);
            let mut all = q1.clone();
            all.extend(&q2);
            let ab = from_roots(-2, &all);
            let lhs = resultant(&pp, &ab, p.len(), all.len()).unwrap();
            let rhs = resultant(&pp, &a, p.len(), q1.len()).unwrap()
                .mul(&resultant(&pp, &b, p.len(), q2.len()).unwrap()).unwrap();
            prop_assert!(lhs == rhs || lhs == rhs.neg());
        }
    }
}
