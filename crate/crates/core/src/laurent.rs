//! Laurent polynomials with rational coefficients.
//!
//! Exponents are arbitrary integers. The canonical printed form lists terms
//! in descending graded-lexicographic order, e.g. `3/4*x1^-2*x2^5 - x1 + 1`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{Covector, LatticeVector, TorusSplit};
use crate::polytope::LatticePolytope;

/// A finitely supported map from exponent vectors in Z^n to nonzero
/// rationals.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPolynomial {
    rank: usize,
    terms: BTreeMap<LatticeVector, BigRational>,
}

fn graded_lex(a: &LatticeVector, b: &LatticeVector) -> Ordering {
    let da: BigInt = a.0.iter().sum();
    let db: BigInt = b.0.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl LaurentPolynomial {
    pub fn zero(rank: usize) -> Self {
        Self {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(rank: usize, c: BigRational) -> Self {
        Self::monomial(LatticeVector::zero(rank), c)
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, BigRational::one())
    }

    pub fn monomial(exponent: LatticeVector, c: BigRational) -> Self {
        let rank = exponent.rank();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        Self { rank, terms }
    }

    /// The coordinate function `x_{i+1}` (0-based `i`).
    pub fn variable(rank: usize, i: usize) -> Self {
        Self::monomial(LatticeVector::unit(rank, i), BigRational::one())
    }

    /// Builds a polynomial from (exponent, coefficient) pairs, collecting
    /// like terms.
    pub fn from_terms<I>(rank: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (LatticeVector, BigRational)>,
    {
        let mut p = Self::zero(rank);
        for (e, c) in terms {
            assert_eq!(e.rank(), rank, "exponent rank");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: LatticeVector, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// A single term `c·x^m` with `c ≠ 0`: a unit of the Laurent ring.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LatticeVector, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &LatticeVector) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn support(&self) -> Vec<LatticeVector> {
        self.terms.keys().cloned().collect()
    }

    /// Terms in descending graded-lex order.
    pub fn sorted_terms(&self) -> Vec<(&LatticeVector, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| graded_lex(b.0, a.0));
        v
    }

    /// Coefficient of the graded-lex largest term.
    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.terms
            .iter()
            .max_by(|a, b| graded_lex(a.0, b.0))
            .map(|(_, c)| c)
    }

    /// Canonical total order: fewer terms first, then term by term in
    /// descending graded-lex order (exponent, then coefficient).
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            for ((ea, ca), (eb, cb)) in self.sorted_terms().into_iter().zip(other.sorted_terms()) {
                let o = graded_lex(eb, ea).then_with(|| ca.cmp(cb));
                if o != Ordering::Equal {
                    return o;
                }
            }
            Ordering::Equal
        })
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: other.rank,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut acc: BTreeMap<LatticeVector, BigRational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea + eb;
                let c = ca * cb;
                *acc.entry(e).or_insert_with(BigRational::zero) += c;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Self {
            rank: self.rank,
            terms: acc,
        })
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return Self::zero(self.rank);
        }
        Self {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    /// Multiplication by the character `x^m`.
    pub fn mul_monomial(&self, m: &LatticeVector) -> Result<Self> {
        if m.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: m.rank(),
            });
        }
        Ok(Self {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, c)| (e + m, c.clone())).collect(),
        })
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigRational::one())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.rank);
        for _ in 0..k {
            out = out.mul(self).expect("same rank");
        }
        out
    }

    pub fn newton_polytope(&self) -> Result<LatticePolytope> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        LatticePolytope::hull(self.terms.keys().cloned())
    }

    /// `P^ξ`: the terms whose exponents lie on the face of `Δ(P)` where `ξ`
    /// is minimal.
    pub fn reduce_in_codirection(&self, xi: &Covector) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if xi.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: xi.rank(),
            });
        }
        let min = self.terms.keys().map(|e| xi.pair(e)).min().expect("nonzero");
        Ok(Self {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| xi.pair(e) == min)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        })
    }

    /// Componentwise minimum of the exponents.
    pub fn min_exponent(&self) -> Option<LatticeVector> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, e| {
            LatticeVector(acc.0.iter().zip(&e.0).map(|(a, b)| a.min(b).clone()).collect())
        }))
    }

    /// Componentwise maximum of the exponents.
    pub fn max_exponent(&self) -> Option<LatticeVector> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, e| {
            LatticeVector(acc.0.iter().zip(&e.0).map(|(a, b)| a.max(b).clone()).collect())
        }))
    }

    /// Representative up to monomial factors and nonzero scalars: exponents
    /// shifted so the componentwise minimum is zero, leading coefficient 1.
    pub fn normalized(&self) -> Self {
        let Some(min) = self.min_exponent() else {
            return self.clone();
        };
        let shifted = self.mul_monomial(&-min).expect("same rank");
        let lc = shifted.leading_coefficient().expect("nonzero").clone();
        shifted.scale(&lc.recip())
    }

    /// Maps every exponent through `f` into a polynomial of rank `rank`.
    pub fn map_exponents<F>(&self, rank: usize, f: F) -> Self
    where
        F: Fn(&LatticeVector) -> LatticeVector,
    {
        Self::from_terms(rank, self.terms.iter().map(|(e, c)| (f(e), c.clone())))
    }

    /// Value at a point of the torus (all coordinates nonzero).
    pub fn evaluate(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: point.len(),
            });
        }
        if point.iter().any(|x| x.is_zero()) {
            return Err(Error::InvalidArgument("point is not in the torus".into()));
        }
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, k) in point.iter().zip(&e.0) {
                t *= rational_pow(x, k);
            }
            total += t;
        }
        Ok(total)
    }

    /// Exact quotient `self / d` if `d` divides `self` in the Laurent ring.
    ///
    /// Uses leading terms in lexicographic order on exponents (which is
    /// compatible with addition on all of Z^n). Every quotient exponent must
    /// lie in the box `[min(a) - min(d), max(a) - max(d)]` and above the
    /// lex trailing bound; leaving either means `d` does not divide.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert_eq!(self.rank, d.rank);
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.rank));
        }
        let (d_lead_e, d_lead_c) = d.terms.iter().next_back().expect("nonzero");
        let (d_trail_e, _) = d.terms.iter().next().expect("nonzero");
        let (a_trail_e, _) = self.terms.iter().next().expect("nonzero");
        let lower = a_trail_e - d_trail_e;
        let box_lo = &self.min_exponent()? - &d.min_exponent()?;
        let box_hi = &self.max_exponent()? - &d.max_exponent()?;
        let mut rem = self.clone();
        let mut q = Self::zero(self.rank);
        while let Some((e, c)) = rem.terms.iter().next_back() {
            let qe = e - d_lead_e;
            let in_box = qe
                .0
                .iter()
                .zip(box_lo.0.iter().zip(&box_hi.0))
                .all(|(x, (lo, hi))| lo <= x && x <= hi);
            if qe < lower || !in_box {
                return None;
            }
            let qc = c / d_lead_c;
            for (de, dc) in &d.terms {
                rem.add_term(&qe + de, -(&qc * dc));
            }
            q.terms.insert(qe, qc);
        }
        Some(q)
    }

    /// Rewrites the polynomial as `t^shift · Σ_d c_d t^d` with `t = x^e` and
    /// coefficients `c_d` in the kernel sublattice ring (rank n−1), where
    /// `c_0 ≠ 0`.
    pub fn to_univariate(&self, split: &TorusSplit) -> Result<(UnivariatePoly, BigInt)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if split.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: split.rank(),
            });
        }
        let sub_rank = self.rank - 1;
        let parts: Vec<(BigInt, LatticeVector, BigRational)> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let (level, coords) = split.decompose(e);
                (level, LatticeVector(coords), c.clone())
            })
            .collect();
        let shift = parts.iter().map(|(l, _, _)| l.clone()).min().expect("nonzero");
        let degree = parts
            .iter()
            .map(|(l, _, _)| l - &shift)
            .max()
            .expect("nonzero");
        let degree = usize::try_from(degree).map_err(|_| Error::InvalidArgument("degree overflow".into()))?;
        let mut coeffs = vec![LaurentPolynomial::zero(sub_rank); degree + 1];
        for (l, e, c) in parts {
            let d = usize::try_from(l - &shift).expect("bounded by degree");
            coeffs[d].add_term(e, c);
        }
        Ok((UnivariatePoly::new(split.clone(), coeffs), shift))
    }

    /// Inverse of [`to_univariate`](Self::to_univariate).
    pub fn from_univariate(u: &UnivariatePoly, shift: &BigInt) -> Self {
        let split = u.split();
        let rank = split.rank();
        let mut out = Self::zero(rank);
        for (d, c) in u.coeffs().iter().enumerate() {
            let level = shift + BigInt::from(d);
            let offset = split.e.scale(&level);
            for (e, coef) in c.terms() {
                let m = &split.pull_up(&e.0) + &offset;
                out.add_term(m, coef.clone());
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let parsed = parse_polynomial(text, 1)?;
        let rank = parsed.max_var;
        parsed.into_polynomial(rank, 1)
    }

    /// Parses with a fixed number of variables; indices above `rank` are an
    /// error.
    pub fn parse_with_rank(text: &str, rank: usize) -> Result<Self> {
        parse_polynomial(text, 1)?.into_polynomial(rank, 1)
    }
}

fn rational_pow(x: &BigRational, k: &BigInt) -> BigRational {
    let (base, mut e) = if k.is_negative() {
        (x.recip(), -k.clone())
    } else {
        (x.clone(), k.clone())
    };
    let mut result = BigRational::one();
    let mut b = base;
    let two = BigInt::from(2);
    while !e.is_zero() {
        if (&e % &two).is_one() {
            result *= &b;
        }
        b = &b * &b;
        e /= &two;
    }
    result
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = e
                .0
                .iter()
                .enumerate()
                .filter(|(_, k)| !k.is_zero())
                .map(|(j, k)| {
                    if k.is_one() {
                        format!("x{}", j + 1)
                    } else {
                        format!("x{}^{}", j + 1, k)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// A polynomial in `t = x^e` whose coefficients live in the ring of the
/// kernel sublattice of a [`TorusSplit`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnivariatePoly {
    split: TorusSplit,
    coeffs: Vec<LaurentPolynomial>,
}

impl UnivariatePoly {
    /// Trailing zero coefficients are dropped; the zero polynomial has no
    /// coefficients.
    pub fn new(split: TorusSplit, mut coeffs: Vec<LaurentPolynomial>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        debug_assert!(coeffs.iter().all(|c| c.rank() + 1 == split.rank()));
        Self { split, coeffs }
    }

    /// Polynomial over Q in one variable (coefficients of rank 0).
    pub fn over_rationals(coeffs: Vec<BigRational>) -> Self {
        let split = TorusSplit::complete(&Covector::from_i64s(&[1])).expect("rank 1");
        Self::new(
            split,
            coeffs
                .into_iter()
                .map(|c| LaurentPolynomial::constant(0, c))
                .collect(),
        )
    }

    pub fn split(&self) -> &TorusSplit {
        &self.split
    }

    pub fn coeffs(&self) -> &[LaurentPolynomial] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficient_rank(&self) -> usize {
        self.split.rank() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `Σ λ_i Q_i`.
    pub fn linear_combination(split: &TorusSplit, polys: &[&UnivariatePoly], lambda: &[BigRational]) -> Self {
        let rank = split.rank() - 1;
        let len = polys.iter().map(|p| p.coeffs.len()).max().unwrap_or(0);
        let mut coeffs = vec![LaurentPolynomial::zero(rank); len];
        for (p, l) in polys.iter().zip(lambda) {
            for (d, c) in p.coeffs.iter().enumerate() {
                coeffs[d] = coeffs[d].add(&c.scale(l)).expect("rank");
            }
        }
        Self::new(split.clone(), coeffs)
    }
}

// ---- parser ----

struct ParsedPolynomial {
    max_var: usize,
    terms: Vec<(BigRational, Vec<(usize, BigInt)>)>,
}

impl ParsedPolynomial {
    fn into_polynomial(self, rank: usize, line: usize) -> Result<LaurentPolynomial> {
        if self.max_var > rank {
            return Err(Error::Parse {
                line,
                pos: 0,
                msg: format!("variable x{} exceeds rank {rank}", self.max_var),
            });
        }
        let mut p = LaurentPolynomial::zero(rank);
        for (c, vars) in self.terms {
            let mut e = LatticeVector::zero(rank);
            for (i, k) in vars {
                e.0[i - 1] += k;
            }
            p.add_term(e, c);
        }
        Ok(p)
    }
}

struct Lexer<'a> {
    chars: Vec<(usize, char)>,
    idx: usize,
    line: usize,
    _src: &'a str,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str, line: usize) -> Self {
        Self {
            chars: src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            idx: 0,
            line,
            _src: src,
        }
    }

    fn pos(&self) -> usize {
        self.chars.get(self.idx).map(|&(p, _)| p + 1).unwrap_or_else(|| {
            self.chars.last().map(|&(p, _)| p + 2).unwrap_or(1)
        })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.idx).map(|&(_, c)| c)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.idx += 1;
        c
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            pos: self.pos(),
            msg: msg.into(),
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(|c| c.is_ascii_digit()) {
            s.push(c);
            self.idx += 1;
        }
        if s.is_empty() {
            return Err(self.err("expected digits"));
        }
        Ok(s.parse().expect("ascii digits"))
    }

    fn signed_integer(&mut self) -> Result<BigInt> {
        let neg = match self.peek() {
            Some('-') => {
                self.idx += 1;
                true
            }
            Some('+') => {
                self.idx += 1;
                false
            }
            _ => false,
        };
        let v = self.digits()?;
        Ok(if neg { -v } else { v })
    }

    fn var(&mut self) -> Result<(usize, BigInt)> {
        if self.bump() != Some('x') {
            self.idx -= 1;
            return Err(self.err("expected variable 'x<index>'"));
        }
        let index = self.digits()?;
        let index: usize = usize::try_from(&index).map_err(|_| self.err("variable index too large"))?;
        if index == 0 {
            return Err(self.err("variable indices start at 1"));
        }
        let exp = if self.peek() == Some('^') {
            self.idx += 1;
            self.signed_integer()?
        } else {
            BigInt::one()
        };
        Ok((index, exp))
    }

    fn monomial(&mut self) -> Result<Vec<(usize, BigInt)>> {
        let mut vars = vec![self.var()?];
        while self.peek() == Some('*') {
            self.idx += 1;
            vars.push(self.var()?);
        }
        Ok(vars)
    }

    fn term(&mut self) -> Result<(BigRational, Vec<(usize, BigInt)>)> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits()?;
                let coeff = if self.peek() == Some('/') {
                    self.idx += 1;
                    let den = self.digits()?;
                    if den.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    BigRational::new(num, den)
                } else {
                    BigRational::from_integer(num)
                };
                if self.peek() == Some('*') {
                    self.idx += 1;
                    Ok((coeff, self.monomial()?))
                } else {
                    Ok((coeff, Vec::new()))
                }
            }
            Some('x') => Ok((BigRational::one(), self.monomial()?)),
            Some(c) => Err(self.err(format!("unexpected '{c}'"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

fn parse_polynomial(text: &str, line: usize) -> Result<ParsedPolynomial> {
    let mut lx = Lexer::new(text, line);
    let mut terms = Vec::new();
    let mut sign = match lx.peek() {
        Some('-') => {
            lx.idx += 1;
            -BigRational::one()
        }
        Some('+') => {
            lx.idx += 1;
            BigRational::one()
        }
        _ => BigRational::one(),
    };
    loop {
        let (c, vars) = lx.term()?;
        terms.push((sign * c, vars));
        match lx.bump() {
            None => break,
            Some('+') => sign = BigRational::one(),
            Some('-') => sign = -BigRational::one(),
            Some(c) => {
                lx.idx -= 1;
                return Err(lx.err(format!("unexpected '{c}'")));
            }
        }
    }
    let max_var = terms
        .iter()
        .flat_map(|(_, v)| v.iter().map(|(i, _)| *i))
        .max()
        .unwrap_or(0);
    Ok(ParsedPolynomial { max_var, terms })
}

/// Parses a system: one polynomial per line (or `;`-separated), `#` starts a
/// comment. The rank is the largest variable index used anywhere.
pub fn parse_system(text: &str) -> Result<(usize, Vec<LaurentPolynomial>)> {
    let mut parsed = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut offset = 0usize;
        for piece in line.split(';') {
            if !piece.trim().is_empty() {
                let p = parse_polynomial(piece, ln + 1).map_err(|e| match e {
                    Error::Parse { line, pos, msg } => Error::Parse {
                        line,
                        pos: pos + offset,
                        msg,
                    },
                    other => other,
                })?;
                parsed.push((ln + 1, p));
            }
            offset += piece.len() + 1;
        }
    }
    let rank = parsed.iter().map(|(_, p)| p.max_var).max().unwrap_or(0);
    let polys = parsed
        .into_iter()
        .map(|(ln, p)| p.into_polynomial(rank, ln))
        .collect::<Result<Vec<_>>>()?;
    Ok((rank, polys))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn lv(x: &[i64]) -> LatticeVector {
        LatticeVector::from_i64s(x)
    }

    fn p(s: &str) -> LaurentPolynomial {
        LaurentPolynomial::parse(s).unwrap()
    }

    fn p2(s: &str) -> LaurentPolynomial {
        LaurentPolynomial::parse_with_rank(s, 2).unwrap()
    }

    #[test]
    fn parse_examples() {
        let a = p("x1 - x2");
        assert_eq!(a.rank(), 2);
        assert_eq!(a.coefficient(&lv(&[1, 0])), q(1, 1));
        assert_eq!(a.coefficient(&lv(&[0, 1])), q(-1, 1));
        assert_eq!(a.len(), 2);

        let b = p("3/4*x1^-2*x2^5 + 1");
        assert_eq!(b.len(), 2);
        assert_eq!(b.coefficient(&lv(&[-2, 5])), q(3, 4));
        assert_eq!(b.coefficient(&lv(&[0, 0])), q(1, 1));

        let c = p("x1 + x1 - 2*x1");
        assert!(c.is_zero());
        assert_eq!(c.to_string(), "0");
    }

    #[test]
    fn print_is_graded_lex_descending() {
        assert_eq!(p("1 - x1^2").to_string(), "-x1^2 + 1");
        assert_eq!(p("3/4*x1^-2*x2^5 + 1").to_string(), "3/4*x1^-2*x2^5 + 1");
        assert_eq!(p("x2 + x1").to_string(), "x1 + x2");
        assert_eq!(p("x1*x1*x2^-1").to_string(), "x1^2*x2^-1");
    }

    #[test]
    fn parse_errors_carry_position() {
        match LaurentPolynomial::parse("x^") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("{other:?}"),
        }
        assert!(LaurentPolynomial::parse("x1 +").is_err());
        assert!(LaurentPolynomial::parse("x0").is_err());
        assert!(LaurentPolynomial::parse("1/0").is_err());
        assert!(LaurentPolynomial::parse("x1 x2").is_err());
        assert!(LaurentPolynomial::parse_with_rank("x3", 2).is_err());
    }

    #[test]
    fn system_parsing() {
        let (n, sys) = parse_system("x1 - 1 # first\n\n x2 - 1; x1*x3\n").unwrap();
        assert_eq!(n, 3);
        assert_eq!(sys.len(), 3);
        assert_eq!(sys[0].rank(), 3);
        match parse_system("x1\nx2 +* 1\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(
            p("x1 + 1").mul_monomial(&lv(&[-1])).unwrap(),
            p("1 + x1^-1")
        );
        assert_eq!(p2("x1 + x2").mul(&p2("x1 - x2")).unwrap(), p2("x1^2 - x2^2"));
        assert!(p("x1 + 3").scale(&q(0, 1)).is_zero());
        assert!(p("x1").mul(&p2("x1")).is_err());
    }

    #[test]
    fn newton_polytopes() {
        let np = p2("1 + x1 + x2").newton_polytope().unwrap();
        assert_eq!(np.vertices(), &[lv(&[0, 0]), lv(&[0, 1]), lv(&[1, 0])]);
        let np = p("x1*x2^-1").newton_polytope().unwrap();
        assert_eq!(np.vertices(), &[lv(&[1, -1])]);
        let cube = p("1 + x1").pow(3);
        assert_eq!(cube, p("x1^3 + 3*x1^2 + 3*x1 + 1"));
        let np = cube.newton_polytope().unwrap();
        assert_eq!(np.vertices(), &[lv(&[0]), lv(&[3])]);
        assert_eq!(LaurentPolynomial::zero(2).newton_polytope(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn reductions() {
        let f = p2("1 + x1 + x2");
        assert_eq!(f.reduce_in_codirection(&Covector::from_i64s(&[1, 1])).unwrap(), p2("1"));
        assert_eq!(f.reduce_in_codirection(&Covector::from_i64s(&[0, -1])).unwrap(), p2("x2"));
        assert_eq!(f.reduce_in_codirection(&Covector::from_i64s(&[0, 0])).unwrap(), f);
        assert!(LaurentPolynomial::zero(2)
            .reduce_in_codirection(&Covector::from_i64s(&[1, 0]))
            .is_err());
    }

    #[test]
    fn univariate_examples() {
        let split = TorusSplit::complete(&Covector::from_i64s(&[0, 1])).unwrap();
        let (u, shift) = p("x1*x2 - 1").to_univariate(&split).unwrap();
        assert_eq!(shift, BigInt::zero());
        assert_eq!(u.degree(), Some(1));
        let one_var = |s: &str| LaurentPolynomial::parse_with_rank(s, 1).unwrap();
        assert_eq!(u.coeffs()[1], one_var("x1"));
        assert_eq!(u.coeffs()[0], one_var("-1"));

        let (u, shift) = p2("x2^3").to_univariate(&split).unwrap();
        assert_eq!(u.degree(), Some(0));
        assert_eq!(u.coeffs()[0], one_var("1"));
        assert_eq!(shift, BigInt::from(3));

        let (u, shift) = p("x1 - x2").to_univariate(&split).unwrap();
        assert_eq!(shift, BigInt::zero());
        assert_eq!(u.coeffs(), &[one_var("x1"), one_var("-1")]);
    }

    #[test]
    fn exact_division() {
        let a = p2("x1^2 - x2^2");
        let d = p2("x1 - x2");
        assert_eq!(a.div_exact(&d).unwrap(), p2("x1 + x2"));
        assert!(p2("x1^2 + 1").div_exact(&d).is_none());
        let m = p2("x1^-3*x2 + 2");
        let prod = m.mul(&p2("x1^2 - x1*x2^-1 + 5")).unwrap();
        assert_eq!(prod.div_exact(&m).unwrap(), p2("x1^2 - x1*x2^-1 + 5"));
    }

    #[test]
    fn normalization() {
        let a = p2("2*x1^3*x2 - 4*x1*x2^2");
        let b = p2("-x1^-1 + 1/2*x1*x2^-1");
        assert_eq!(a.normalized(), b.normalized());
        assert_eq!(a.normalized(), p2("x1^2 - 2*x2"));
    }

    #[test]
    fn evaluation() {
        let f = p2("x1^-1*x2 + 3");
        let v = f.evaluate(&[q(2, 1), q(5, 1)]).unwrap();
        assert_eq!(v, q(11, 2));
        assert!(f.evaluate(&[q(0, 1), q(1, 1)]).is_err());
    }

    fn arb_poly(rank: usize) -> impl Strategy<Value = LaurentPolynomial> {
        prop::collection::vec(
            (prop::collection::vec(-3i64..4, rank), -5i64..6, 1i64..4),
            0..6,
        )
        .prop_map(move |ts| {
            LaurentPolynomial::from_terms(
                rank,
                ts.into_iter()
                    .map(|(e, n, d)| (LatticeVector::from_i64s(&e), q(n, d))),
            )
        })
    }

    fn arb_positive_poly(rank: usize) -> impl Strategy<Value = LaurentPolynomial> {
        prop::collection::vec((prop::collection::vec(-2i64..3, rank), 1i64..5), 1..5).prop_map(
            move |ts| {
                LaurentPolynomial::from_terms(
                    rank,
                    ts.into_iter().map(|(e, n)| (LatticeVector::from_i64s(&e), q(n, 1))),
                )
            },
        )
    }

    proptest! {
        #[test]
        fn print_parse_fixpoint(f in arb_poly(3)) {
            let text = f.to_string();
            let back = LaurentPolynomial::parse_with_rank(&text, 3).unwrap();
            prop_assert_eq!(&back, &f);
            prop_assert_eq!(back.to_string(), text);
        }

        #[test]
        fn univariate_roundtrip(
            f in arb_poly(3),
            phi in prop::collection::vec(-3i64..4, 3),
        ) {
            prop_assume!(!f.is_zero() && phi.iter().any(|&x| x != 0));
            let (phi, _) = Covector::from_i64s(&phi).make_primitive().unwrap();
            let split = TorusSplit::complete(&phi).unwrap();
            let (u, shift) = f.to_univariate(&split).unwrap();
            prop_assert!(!u.coeffs()[0].is_zero());
            prop_assert_eq!(LaurentPolynomial::from_univariate(&u, &shift), f);
        }

        #[test]
        fn newton_polytope_of_product(a in arb_positive_poly(2), b in arb_positive_poly(2)) {
            let prod = a.mul(&b).unwrap();
            let lhs = prod.newton_polytope().unwrap();
            let rhs = a.newton_polytope().unwrap().minkowski_sum(&b.newton_polytope().unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn monomial_shift_translates_polytope(a in arb_poly(2), m in prop::collection::vec(-4i64..5, 2)) {
            prop_assume!(!a.is_zero());
            let m = LatticeVector::from_i64s(&m);
            let shifted = a.mul_monomial(&m).unwrap().newton_polytope().unwrap();
            prop_assert_eq!(shifted, a.newton_polytope().unwrap().translate(&m).unwrap());
        }

        #[test]
        fn reduction_is_idempotent(a in arb_poly(3), xi in prop::collection::vec(-3i64..4, 3)) {
            prop_assume!(!a.is_zero());
            let xi = Covector::from_i64s(&xi);
            let r = a.reduce_in_codirection(&xi).unwrap();
            prop_assert_eq!(r.reduce_in_codirection(&xi).unwrap(), r.clone());
            let face = a.newton_polytope().unwrap().face_in_direction(&xi).unwrap();
            let mut support = r.support();
            support.sort();
            // support of the reduction is the support of P on the face
            for e in a.support() {
                let on_face = xi.pair(&e) == a.newton_polytope().unwrap().support_function(&xi).unwrap();
                prop_assert_eq!(on_face, support.contains(&e));
            }
            prop_assert!(face.vertices.iter().all(|v| support.contains(v)));
        }

        #[test]
        fn ring_axioms(a in arb_poly(2), b in arb_poly(2), c in arb_poly(2)) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
            prop_assert!(a.sub(&a).unwrap().is_zero());
            if !b.is_zero() {
                prop_assert_eq!(a.mul(&b).unwrap().div_exact(&b).unwrap(), a.clone());
            }
        }
    }
}
