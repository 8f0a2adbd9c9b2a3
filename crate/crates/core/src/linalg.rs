//! Small exact linear-algebra kernels over `BigInt` / `BigRational`.
//!
//! Matrices are row-major `Vec<Vec<_>>`; sizes here never exceed a few
//! dozen rows, so nothing fancier is needed.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) fn to_rational(rows: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub(crate) fn rref(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(crate) fn rank(rows: &[Vec<BigInt>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut m = to_rational(rows);
    rref(&mut m).len()
}

/// Basis of `{x : rows · x = 0}` as primitive integer vectors, one per free
/// column of the echelon form (deterministic).
pub(crate) fn integer_kernel(rows: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    let mut m = to_rational(rows);
    let pivots = if m.is_empty() { Vec::new() } else { rref(&mut m) };
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigRational::zero(); cols];
        v[free] = BigRational::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[r][free].clone();
        }
        basis.push(clear_denominators(&v));
    }
    basis
}

/// Scales a rational vector to a primitive integer vector with the same
/// direction (positive multiple).
pub(crate) fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    use num_integer::Integer;
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
pub(crate) fn det_int(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Generalized cross product: for `n-1` vectors in Z^n, the vector whose
/// j-th entry is `(-1)^j · det(minor without column j)`. It is orthogonal to
/// every input row and nonzero iff the rows are independent.
pub(crate) fn cross(rows: &[Vec<BigInt>], n: usize) -> Vec<BigInt> {
    debug_assert_eq!(rows.len() + 1, n);
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let d = det_int(&minor);
            if j % 2 == 1 {
                -d
            } else {
                d
            }
        })
        .collect()
}

/// Exact inverse of a unimodular integer matrix.
pub(crate) fn unimodular_inverse(m: &[Vec<BigInt>]) -> Option<Vec<Vec<BigInt>>> {
    let n = m.len();
    let mut aug: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<BigRational> =
                r.iter().map(|x| BigRational::from_integer(x.clone())).collect();
            row.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            row
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    let mut inv = Vec::with_capacity(n);
    for row in aug {
        let mut out = Vec::with_capacity(n);
        for x in &row[n..] {
            if !x.is_integer() {
                return None;
            }
            out.push(x.to_integer());
        }
        inv.push(out);
    }
    Some(inv)
}

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn is_zero_vec(v: &[BigInt]) -> bool {
    v.iter().all(|x| x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn det_matches_cofactor_3x3() {
        let m = ints(&[&[2, -1, 0], &[1, 3, 4], &[0, 5, -2]]);
        // 2(3·-2 - 4·5) - (-1)(1·-2 - 0) + 0 = -52 - 2
        assert_eq!(det_int(&m), BigInt::from(-54));
    }

    #[test]
    fn det_needs_pivot_swap() {
        let m = ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(det_int(&m), BigInt::from(-1));
    }

    #[test]
    fn kernel_and_rank() {
        let m = ints(&[&[1, 1, 0]]);
        let k = integer_kernel(&m, 3);
        assert_eq!(k, ints(&[&[-1, 1, 0], &[0, 0, 1]]));
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn cross_is_orthogonal() {
        let rows = ints(&[&[1, 2, 3], &[0, 1, 4]]);
        let c = cross(&rows, 3);
        for r in &rows {
            assert!(dot(r, &c).is_zero());
        }
        assert!(!is_zero_vec(&c));
    }

    #[test]
    fn inverse_of_unimodular() {
        let m = ints(&[&[3, -1], &[-2, 1]]);
        let inv = unimodular_inverse(&m).unwrap();
        assert_eq!(inv, ints(&[&[1, 1], &[2, 3]]));
        assert!(unimodular_inverse(&ints(&[&[2, 0], &[0, 1]])).is_none());
    }
}
