//! Character lattices, one-parameter-subgroup covectors, and unimodular
//! splittings of a lattice along a primitive covector.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;

/// A point of the character lattice Z^n.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct LatticeVector(pub Vec<BigInt>);

/// A point of the dual lattice, i.e. an integral linear function on Z^n.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Covector(pub Vec<BigInt>);

macro_rules! int_vector_common {
    ($t:ident) => {
        impl $t {
            pub fn new(coords: Vec<BigInt>) -> Self {
                Self(coords)
            }

            pub fn from_i64s(coords: &[i64]) -> Self {
                Self(coords.iter().map(|&x| BigInt::from(x)).collect())
            }

            pub fn zero(rank: usize) -> Self {
                Self(vec![BigInt::zero(); rank])
            }

            pub fn unit(rank: usize, i: usize) -> Self {
                let mut v = Self::zero(rank);
                v.0[i] = BigInt::one();
                v
            }

            pub fn rank(&self) -> usize {
                self.0.len()
            }

            pub fn coords(&self) -> &[BigInt] {
                &self.0
            }

            pub fn is_zero(&self) -> bool {
                linalg::is_zero_vec(&self.0)
            }

            /// Gcd of the coordinates (0 for the zero vector).
            pub fn content(&self) -> BigInt {
                self.0.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
            }

            pub fn is_primitive(&self) -> bool {
                self.content().is_one()
            }

            pub fn make_primitive(&self) -> Result<(Self, BigInt)> {
                let g = self.content();
                if g.is_zero() {
                    return Err(Error::ZeroVector);
                }
                Ok((Self(self.0.iter().map(|x| x / &g).collect()), g))
            }

            /// Primitive vector with the first nonzero coordinate positive.
            pub fn canonical_direction(&self) -> Result<Self> {
                let (mut v, _) = self.make_primitive()?;
                if v.0.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
                    v = -v;
                }
                Ok(v)
            }

            pub fn scale(&self, k: &BigInt) -> Self {
                Self(self.0.iter().map(|x| x * k).collect())
            }
        }

        impl std::ops::Add for &$t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                debug_assert_eq!(self.rank(), rhs.rank());
                $t(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
            }
        }

        impl std::ops::Sub for &$t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                debug_assert_eq!(self.rank(), rhs.rank());
                $t(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
            }
        }

        impl std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                $t(self.0.into_iter().map(|x| -x).collect())
            }
        }

        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                for (i, x) in self.0.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
        }
    };
}

int_vector_common!(LatticeVector);
int_vector_common!(Covector);

impl Covector {
    /// The pairing ⟨self, v⟩.
    pub fn pair(&self, v: &LatticeVector) -> BigInt {
        debug_assert_eq!(self.rank(), v.rank());
        linalg::dot(&self.0, &v.0)
    }
}

/// Splitting Z^n = ker(phi) ⊕ Z·e for a primitive covector `phi`.
///
/// `kernel_basis` together with `e` is a unimodular basis of Z^n, so every
/// lattice vector m decomposes uniquely as `phi(m)·e + k` with k in the
/// kernel sublattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusSplit {
    pub phi: Covector,
    pub e: LatticeVector,
    pub kernel_basis: Vec<LatticeVector>,
    // inverse of the column matrix (kernel_basis | e)
    inverse: Vec<Vec<BigInt>>,
}

impl TorusSplit {
    /// Completes a primitive covector to a unimodular basis by extended-gcd
    /// column operations, scanning coordinates left to right.
    pub fn complete(phi: &Covector) -> Result<Self> {
        let n = phi.rank();
        if n == 0 || phi.is_zero() {
            return Err(Error::ZeroVector);
        }
        if !phi.is_primitive() {
            return Err(Error::NotPrimitive(phi.to_string()));
        }
        // columns of the transformation, and the running image of phi
        let mut cols: Vec<Vec<BigInt>> = (0..n).map(|i| LatticeVector::unit(n, i).0).collect();
        let mut row: Vec<BigInt> = phi.0.clone();
        let acc = row.iter().position(|x| !x.is_zero()).expect("nonzero phi");
        for j in acc + 1..n {
            if row[j].is_zero() {
                continue;
            }
            let eg = row[acc].extended_gcd(&row[j]);
            let (g, s, t) = (eg.gcd, eg.x, eg.y);
            let ra = &row[acc] / &g;
            let rj = &row[j] / &g;
            let new_acc: Vec<BigInt> = cols[acc]
                .iter()
                .zip(&cols[j])
                .map(|(a, b)| &s * a + &t * b)
                .collect();
            let new_j: Vec<BigInt> = cols[acc]
                .iter()
                .zip(&cols[j])
                .map(|(a, b)| &rj * a - &ra * b)
                .collect();
            cols[acc] = new_acc;
            cols[j] = new_j;
            row[acc] = g;
            row[j] = BigInt::zero();
        }
        if row[acc].is_negative() {
            cols[acc] = cols[acc].iter().map(|x| -x).collect();
            row[acc] = -row[acc].clone();
        }
        debug_assert!(row[acc].is_one());
        let e = LatticeVector(cols[acc].clone());
        let kernel_basis: Vec<LatticeVector> = (0..n)
            .filter(|&j| j != acc)
            .map(|j| LatticeVector(cols[j].clone()))
            .collect();
        let matrix = basis_matrix(&kernel_basis, &e);
        let inverse = linalg::unimodular_inverse(&matrix)
            .expect("extended-gcd completion is unimodular");
        Ok(Self {
            phi: phi.clone(),
            e,
            kernel_basis,
            inverse,
        })
    }

    pub fn rank(&self) -> usize {
        self.phi.rank()
    }

    /// Determinant of the column matrix (kernel_basis | e).
    pub fn determinant(&self) -> BigInt {
        let m = basis_matrix(&self.kernel_basis, &self.e);
        linalg::det_int(&m)
    }

    /// Coordinates of a kernel vector in `kernel_basis`.
    pub fn push_down(&self, m: &LatticeVector) -> Result<Vec<BigInt>> {
        if m.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: m.rank(),
            });
        }
        if !self.phi.pair(m).is_zero() {
            return Err(Error::NotInKernel(m.to_string()));
        }
        let n = self.rank();
        Ok(self.inverse[..n - 1]
            .iter()
            .map(|r| linalg::dot(r, &m.0))
            .collect())
    }

    pub fn pull_up(&self, c: &[BigInt]) -> LatticeVector {
        debug_assert_eq!(c.len() + 1, self.rank());
        let mut out = LatticeVector::zero(self.rank());
        for (coef, b) in c.iter().zip(&self.kernel_basis) {
            for (o, x) in out.0.iter_mut().zip(&b.0) {
                *o += coef * x;
            }
        }
        out
    }

    /// Splits m as `(phi(m), push_down(m - phi(m)·e))`.
    pub fn decompose(&self, m: &LatticeVector) -> (BigInt, Vec<BigInt>) {
        let level = self.phi.pair(m);
        let rest = m - &self.e.scale(&level);
        let coords = self
            .push_down(&rest)
            .expect("m - phi(m) e lies in ker phi");
        (level, coords)
    }
}

fn basis_matrix(kernel: &[LatticeVector], e: &LatticeVector) -> Vec<Vec<BigInt>> {
    let n = e.rank();
    (0..n)
        .map(|i| {
            kernel
                .iter()
                .map(|b| b.0[i].clone())
                .chain(std::iter::once(e.0[i].clone()))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lv(x: &[i64]) -> LatticeVector {
        LatticeVector::from_i64s(x)
    }

    fn cv(x: &[i64]) -> Covector {
        Covector::from_i64s(x)
    }

    #[test]
    fn primitive_forms() {
        assert_eq!(
            lv(&[2, 4, -6]).make_primitive().unwrap(),
            (lv(&[1, 2, -3]), BigInt::from(2))
        );
        assert_eq!(
            lv(&[1, 0]).make_primitive().unwrap(),
            (lv(&[1, 0]), BigInt::from(1))
        );
        assert_eq!(
            lv(&[-3, 0, 0]).make_primitive().unwrap(),
            (lv(&[-1, 0, 0]), BigInt::from(3))
        );
        assert_eq!(lv(&[0, 0]).make_primitive(), Err(Error::ZeroVector));
    }

    fn check_split(s: &TorusSplit) {
        assert!(s.phi.pair(&s.e).is_one());
        for b in &s.kernel_basis {
            assert!(s.phi.pair(b).is_zero());
        }
        assert!(s.determinant().abs().is_one());
    }

    #[test]
    fn coordinate_splits() {
        let s = TorusSplit::complete(&cv(&[1, 0])).unwrap();
        assert_eq!(s.e, lv(&[1, 0]));
        assert_eq!(s.kernel_basis, vec![lv(&[0, 1])]);
        let s = TorusSplit::complete(&cv(&[0, 0, 1])).unwrap();
        assert_eq!(s.e, lv(&[0, 0, 1]));
        assert_eq!(s.kernel_basis, vec![lv(&[1, 0, 0]), lv(&[0, 1, 0])]);
    }

    #[test]
    fn split_of_two_three() {
        let s = TorusSplit::complete(&cv(&[2, 3])).unwrap();
        check_split(&s);
        assert_eq!(s.kernel_basis, vec![lv(&[3, -2])]);
        assert_eq!(s.push_down(&lv(&[3, -2])).unwrap(), vec![BigInt::one()]);
        assert_eq!(s.pull_up(&[BigInt::one()]), lv(&[3, -2]));
    }

    #[test]
    fn push_down_examples() {
        let s = TorusSplit::complete(&cv(&[1, 0])).unwrap();
        assert_eq!(s.push_down(&lv(&[0, 5])).unwrap(), vec![BigInt::from(5)]);
        assert_eq!(s.pull_up(&[BigInt::from(5)]), lv(&[0, 5]));
        assert!(matches!(
            s.push_down(&lv(&[1, 1])),
            Err(Error::NotInKernel(_))
        ));
    }

    #[test]
    fn non_primitive_phi_rejected() {
        assert!(matches!(
            TorusSplit::complete(&cv(&[2, 4])),
            Err(Error::NotPrimitive(_))
        ));
        assert_eq!(TorusSplit::complete(&cv(&[0, 0])), Err(Error::ZeroVector));
    }

    proptest! {
        #[test]
        fn splits_are_unimodular(raw in prop::collection::vec(-30i64..30, 1..5)) {
            prop_assume!(raw.iter().any(|&x| x != 0));
            let (phi, _) = cv(&raw).make_primitive().unwrap();
            let s = TorusSplit::complete(&phi).unwrap();
            check_split(&s);
            // deterministic
            prop_assert_eq!(TorusSplit::complete(&phi).unwrap(), s);
        }

        #[test]
        fn push_pull_roundtrip(
            raw in prop::collection::vec(-20i64..20, 2..5),
            c in prop::collection::vec(-50i64..50, 4),
        ) {
            prop_assume!(raw.iter().any(|&x| x != 0));
            let (phi, _) = cv(&raw).make_primitive().unwrap();
            let s = TorusSplit::complete(&phi).unwrap();
            let c: Vec<BigInt> = c[..raw.len() - 1].iter().map(|&x| BigInt::from(x)).collect();
            let m = s.pull_up(&c);
            prop_assert!(phi.pair(&m).is_zero());
            prop_assert_eq!(s.push_down(&m).unwrap(), c);
        }

        #[test]
        fn make_primitive_idempotent(raw in prop::collection::vec(-40i64..40, 1..5)) {
            prop_assume!(raw.iter().any(|&x| x != 0));
            let (p, g) = lv(&raw).make_primitive().unwrap();
            prop_assert!(g > BigInt::zero());
            prop_assert_eq!(p.make_primitive().unwrap(), (p.clone(), BigInt::one()));
        }
    }
}
