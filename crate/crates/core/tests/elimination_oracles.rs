mod common;

use common::poly;
use goodcomp::elimination::{parametric_resultant, project, resultant};
use goodcomp::{Covector, LatticeVector, LaurentPolynomial, TorusSplit, UnivariatePoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn split() -> TorusSplit {
    TorusSplit::complete(&Covector::from_i64s(&[1, 0])).unwrap()
}

/// `Σ_i (a_i + b_i·x2) x1^i` as a polynomial in `x1` over `Q[x2^±]`.
fn bivariate(coeffs: &[(i64, i64)]) -> LaurentPolynomial {
    LaurentPolynomial::from_terms(
        2,
        coeffs.iter().enumerate().flat_map(|(i, &(a, b))| {
            let i = i as i64;
            [
                (LatticeVector::from_i64s(&[i, 0]), q(a)),
                (LatticeVector::from_i64s(&[i, 1]), q(b)),
            ]
        }),
    )
}

fn univariate(f: &LaurentPolynomial) -> UnivariatePoly {
    f.to_univariate(&split()).unwrap().0
}

fn coeff_pairs(max_len: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-3i64..4, -2i64..3), 1..max_len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn specialization_matches_resultant_of_the_combination(
        middle in coeff_pairs(3),
        q1 in coeff_pairs(3),
        q2 in coeff_pairs(3),
        l1 in -3i64..4,
        l2 in -3i64..4,
    ) {
        // constant, unit ends keep the pivot degree fixed
        let mut pc = vec![(1, 0)];
        pc.extend(middle);
        pc.push((2, 0));
        let pu = univariate(&bivariate(&pc));
        let qs = vec![univariate(&bivariate(&q1)), univariate(&bivariate(&q2))];
        prop_assume!(qs.iter().all(|u| !u.is_zero()));
        let lp = parametric_resultant(&pu, &qs).unwrap();
        let p = pu.degree().unwrap();
        prop_assert!(lp.is_homogeneous_of_degree(p as u32));
        let lambda = [q(l1), q(l2)];
        let refs: Vec<&UnivariatePoly> = qs.iter().collect();
        let comb = UnivariatePoly::linear_combination(&split(), &refs, &lambda);
        let qd = qs.iter().filter_map(|u| u.degree()).max().unwrap();
        let direct = resultant(&pu, &comb, p, qd).unwrap();
        prop_assert_eq!(lp.specialize(&lambda).unwrap(), direct);
    }
}

#[test]
fn projected_equations_vanish_on_the_image() {
    // x1^2 = 4 x2 and x1 = x2 + 1: the image in x2 is {x2 = 1}.
    let system = vec![poly("x1^2 - 4*x2", 2), poly("x1 - x2 - 1", 2)];
    let proj = project(&system, &split()).unwrap();
    assert!(!proj.equations.is_empty());
    for e in &proj.equations {
        assert!(e.evaluate(&[q(1)]).unwrap().is_zero(), "{e}");
    }
    assert!(proj.equations.iter().any(|e| !e.evaluate(&[q(2)]).unwrap().is_zero()));
}
