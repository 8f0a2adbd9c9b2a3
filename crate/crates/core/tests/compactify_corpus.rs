mod common;

use common::{corpus, poly};
use goodcomp::compactify::{good_system, good_system_with, Options};
use goodcomp::polytope::{edges_affine_independent, is_generic_covector};
use goodcomp::{Covector, LatticePolytope};
use num_traits::Zero;

#[test]
fn corpus_codimensions_and_certificates() {
    for entry in corpus() {
        let r = good_system(entry.rank, &entry.system)
            .unwrap_or_else(|e| panic!("{}: {e}", entry.name));
        assert_eq!(r.codim, entry.codim, "{}", entry.name);
        assert!(r.certificates.all_pass(), "{}:\n{}", entry.name, r.certificates.to_text());
    }
}

#[test]
fn determinism() {
    for entry in corpus() {
        let a = good_system(entry.rank, &entry.system).unwrap();
        let b = good_system(entry.rank, &entry.system).unwrap();
        assert_eq!(a.report(), b.report());
        assert_eq!(a.system_text(), b.system_text());
        assert_eq!(a.fan.to_text(), b.fan.to_text());
        assert_eq!(a.certificates.to_text(), b.certificates.to_text());
    }
}

#[test]
fn appending_equations_never_lowers_codim() {
    let entries = corpus();
    for a in &entries {
        for b in &entries {
            if a.rank != b.rank {
                continue;
            }
            let mut combined = a.system.clone();
            combined.extend(b.system.iter().cloned());
            // Iterated resultants of five or more equations get expensive.
            if combined.len() > 4 {
                continue;
            }
            match good_system(a.rank, &combined) {
                Ok(r) => assert!(r.codim >= a.codim, "{} + {}", a.name, b.name),
                // An empty intersection is the largest codimension possible.
                Err(goodcomp::Error::EmptyVariety { .. }) => {}
                Err(e) => panic!("{} + {}: {e}", a.name, b.name),
            }
        }
    }
}

#[test]
fn codim_does_not_depend_on_the_level_one_split() {
    for entry in corpus() {
        let Some(first) = entry.system.iter().find(|p| !p.is_zero()) else {
            continue;
        };
        if entry.system.iter().filter(|p| !p.is_zero()).count() < 2 {
            continue;
        }
        let poly = first.newton_polytope().unwrap();
        // Second generic covector in a fixed search order.
        let alternative = search_generic(&poly, 1);
        let opts = Options {
            level1_phi: Some(alternative.clone()),
            ..Options::default()
        };
        let r = good_system_with(entry.rank, &entry.system, &opts).unwrap();
        assert_eq!(r.codim, entry.codim, "{} with phi={alternative}", entry.name);
        assert!(r.certificates.all_pass());
    }
}

fn search_generic(poly: &LatticePolytope, skip: usize) -> Covector {
    let n = poly.rank();
    let mut found = 0;
    for s in 1i64.. {
        let mut cur = vec![-s; n];
        loop {
            let c = Covector::from_i64s(&cur);
            if !c.is_zero() && c.is_primitive() && is_generic_covector(&c, poly) {
                if found == skip {
                    return c;
                }
                found += 1;
            }
            let mut i = 0;
            while i < n && cur[i] == s {
                cur[i] = -s;
                i += 1;
            }
            if i == n {
                break;
            }
            cur[i] += 1;
        }
    }
    unreachable!()
}

#[test]
fn embeddings_put_later_pivots_in_the_kernel() {
    for entry in corpus() {
        let r = good_system(entry.rank, &entry.system).unwrap();
        for (i, level) in r.levels.iter().enumerate() {
            let Some(split) = &level.split else { continue };
            // phi in original coordinates is constant on every later pivot.
            let p1 = &r.tuple[i];
            let delta1 = p1.newton_polytope().unwrap();
            for later in &r.tuple[i + 1..] {
                let later_poly = later.newton_polytope().unwrap();
                for d in later_poly.edge_directions() {
                    let coords = embed_coords(&level.embedding, &d);
                    if let Some(c) = coords {
                        assert!(split.phi.pair(&goodcomp::LatticeVector(c)).is_zero());
                    } else {
                        panic!("{}: edge {d} leaves the level lattice", entry.name);
                    }
                }
            }
            // no edge of this pivot is parallel to the kernel
            for d in delta1.edge_directions() {
                let c = embed_coords(&level.embedding, &d).expect("pivot lies in its level");
                assert!(!split.phi.pair(&goodcomp::LatticeVector(c)).is_zero());
            }
        }
    }
}

/// Coordinates of `v` in the basis `basis` (exact, rational solve), if integral.
fn embed_coords(basis: &[goodcomp::LatticeVector], v: &goodcomp::LatticeVector) -> Option<Vec<num_bigint::BigInt>> {
    use num_rational::BigRational;
    use num_traits::One;
    let n = v.rank();
    let m = basis.len();
    // augmented matrix: n rows, m + 1 columns
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|r| {
            let mut row: Vec<BigRational> = basis.iter().map(|b| BigRational::from_integer(b.0[r].clone())).collect();
            row.push(BigRational::from_integer(v.0[r].clone()));
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m {
        let Some(p) = (row..n).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(row, p);
        let inv = BigRational::one() / a[row][col].clone();
        for x in a[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..=m {
                    let t = &a[row][c] * &f;
                    a[r][c] -= t;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if a[row..].iter().any(|r| !r[m].is_zero()) {
        return None;
    }
    let mut out = vec![num_bigint::BigInt::zero(); m];
    for (r, &c) in pivots.iter().enumerate() {
        if !a[r][m].is_integer() {
            return None;
        }
        out[c] = a[r][m].to_integer();
    }
    Some(out)
}

#[test]
fn worked_examples() {
    let r = good_system(2, &[poly("x1*x2 - 1", 2), poly("x1 - x2", 2)]).unwrap();
    assert_eq!(r.codim, 2);
    let polys = r.newton_polytopes();
    assert_eq!(polys[0].edge_directions(), vec![goodcomp::LatticeVector::from_i64s(&[1, 1])]);
    assert!(edges_affine_independent(&polys).holds());
}
