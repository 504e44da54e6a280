use alexq_core::cocycle::{
    kernel_lattice_basis, lambda_form, lattice_basis, phi, phi0, phi_image_basis, KernelVector,
};
use alexq_core::linalg::{mod_inverse, same_lattice};
use alexq_core::structure::{pack_mul, sd_mul, word_eval, Word};
use alexq_core::{IntMatrix, LinearAlexanderParams, SemidirectZ};

fn units(n: u64) -> impl Iterator<Item = LinearAlexanderParams> {
    (1..n.max(2)).filter_map(move |t| LinearAlexanderParams::new(n, t).ok())
}

fn all_params(n_max: u64) -> impl Iterator<Item = LinearAlexanderParams> {
    (2..=n_max).flat_map(units)
}

fn elements(p: &LinearAlexanderParams, degrees: std::ops::RangeInclusive<i64>) -> Vec<SemidirectZ> {
    degrees
        .flat_map(|k| (0..p.n()).map(move |a| SemidirectZ::new(k, a)))
        .collect()
}

#[test]
fn cocycle_identity_and_normalization() {
    for p in all_params(6) {
        let els = elements(&p, -2..=2);
        let m = p.orbit_count() as usize;
        for &a in &els {
            assert!(phi(&p, a, SemidirectZ::new(a.degree, 0)).is_zero());
            assert!(phi(&p, SemidirectZ::new(a.degree, 0), a).is_zero());
            for &b in &els {
                let ab = sd_mul(&p, a, b);
                for &c in &els {
                    let bc = sd_mul(&p, b, c);
                    let sum =
                        &(&(&phi(&p, b, c) - &phi(&p, ab, c)) + &phi(&p, a, bc)) - &phi(&p, a, b);
                    assert_eq!(sum, KernelVector::zero(m), "{p:?} {a:?} {b:?} {c:?}");
                }
            }
        }
    }
}

#[test]
fn invariance_and_degree_reduction() {
    for p in all_params(8) {
        for a in elements(&p, -3..=3) {
            for b in elements(&p, -3..=3) {
                let v = phi(&p, a, b);
                assert!(v.is_kernel_member());
                let ta = SemidirectZ::new(a.degree, p.apply_t(1, a.weight));
                let tb = SemidirectZ::new(b.degree, p.apply_t(1, b.weight));
                assert_eq!(phi(&p, ta, tb), v);
                assert_eq!(phi(&p, SemidirectZ::new(1, a.weight), b), v);
                let b1 = SemidirectZ::new(1, p.apply_t(1 - b.degree, b.weight));
                assert_eq!(phi(&p, a, b1), v);
                // braided symmetry
                let left = SemidirectZ::new(b.degree, p.apply_t(1 - a.degree, b.weight));
                let right = SemidirectZ::new(
                    a.degree,
                    p.add(p.apply_t(b.degree, a.weight), p.one_minus_t(b.weight)),
                );
                assert_eq!(phi(&p, left, right), v);
            }
        }
    }
}

#[test]
fn degree_zero_identities() {
    for p in all_params(8) {
        let n = p.n();
        let m = p.orbit_count() as usize;
        for a in 0..n {
            for b in 0..n {
                let v = phi0(&p, a, b);
                assert_eq!(phi0(&p, p.apply_t(1, b), p.add(a, p.one_minus_t(b))), v);
                let lam = lambda_form(&p, a, b);
                assert_eq!(lam, KernelVector::zero(m));
                assert_eq!(phi0(&p, p.one_minus_t(b), a), lam);
                assert_eq!(
                    phi0(&p, a, p.one_minus_t(b)),
                    -&phi0(&p, p.one_minus_t(a), p.apply_t(1, b))
                );
                for c in 0..n {
                    assert_eq!(
                        lambda_form(&p, p.add(a, b), c),
                        &lambda_form(&p, a, c) + &lambda_form(&p, b, c)
                    );
                    assert_eq!(
                        lambda_form(&p, c, p.add(a, b)),
                        &lambda_form(&p, c, a) + &lambda_form(&p, c, b)
                    );
                }
            }
        }
    }
}

#[test]
fn factorization_through_e0() {
    for p in all_params(10) {
        for a in 0..p.n() {
            for b in 0..p.n() {
                let lhs = word_eval(&p, &Word::generator(a).concat(&Word::generator(b)));
                let rhs = word_eval(
                    &p,
                    &Word::generator(0).concat(&Word::generator(p.add(p.apply_t(1, a), b))),
                );
                let k = phi(&p, SemidirectZ::new(1, a), SemidirectZ::new(1, b));
                assert_eq!(lhs, pack_mul(&p, &k.as_packed(), &rhs));
            }
        }
    }
}

#[test]
fn linear_relation_holds() {
    for p in all_params(12) {
        let n = p.n();
        for x in 0..n {
            for y in 0..n {
                for g in 0..n {
                    let lhs = Word::generator(x).concat(&Word::generator(y));
                    let rhs = Word::generator(p.sub(x, p.one_minus_t(g)))
                        .concat(&Word::generator(p.add(y, p.one_minus_t(p.apply_t(1, g)))));
                    assert_eq!(word_eval(&p, &lhs), word_eval(&p, &rhs));
                }
            }
        }
    }
}

/// Brute-force membership: every small vector meeting the two congruences
/// lies in the lattice, and the basis meets them.
#[test]
fn kernel_lattice_matches_definition() {
    for p in all_params(12) {
        let m = p.orbit_count() as usize;
        let basis = kernel_lattice_basis(&p);
        assert_eq!(basis.len(), m - 1);
        assert!(basis.iter().all(KernelVector::is_kernel_member));
        if !(2..=4).contains(&m) {
            continue;
        }
        let rows: Vec<Vec<i64>> = basis.iter().map(|v| v.0.clone()).collect();
        let lattice = IntMatrix::from_rows(&rows);
        let mut v = vec![-4i64; m];
        loop {
            let cand = KernelVector(v.clone());
            if cand.is_kernel_member() {
                let mut extended = rows.clone();
                extended.push(v.clone());
                assert!(
                    same_lattice(&lattice, &IntMatrix::from_rows(&extended)),
                    "{v:?}"
                );
            }
            let mut i = 0;
            while i < m && v[i] == 4 {
                v[i] = -4;
                i += 1;
            }
            if i == m {
                break;
            }
            v[i] += 1;
        }
    }
}

#[test]
fn phi_generates_kernel() {
    for p in all_params(10) {
        let m = p.orbit_count() as usize;
        let a: Vec<Vec<i64>> = phi_image_basis(&p).into_iter().map(|v| v.0).collect();
        let b: Vec<Vec<i64>> = kernel_lattice_basis(&p).into_iter().map(|v| v.0).collect();
        assert_eq!(a.len(), b.len(), "{p:?}");
        if m >= 2 {
            assert!(same_lattice(
                &IntMatrix::from_rows(&a),
                &IntMatrix::from_rows(&b)
            ));
        }
        assert_eq!(lattice_basis(m, &a), lattice_basis(m, &b));
    }
}

#[test]
fn inverse_sanity() {
    for p in all_params(12) {
        assert_eq!(mod_inverse(p.t(), p.n()), Some(p.t_inv()));
    }
}
