//! Row-style Hermite normal form: the canonical basis of an integer lattice.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

fn sub_scaled(rows: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    let src_row = rows[src].clone();
    for (x, y) in rows[dst].iter_mut().zip(&src_row) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

/// Hermite normal form of the lattice spanned by the rows of `m`.
///
/// The result has one row per basis vector (zero rows dropped), pivots
/// strictly increasing to the right and positive, and every entry above a
/// pivot reduced into `[0, pivot)`. Two generating sets span the same
/// lattice iff their Hermite forms are equal.
pub fn hermite_normal_form(m: &IntMatrix) -> IntMatrix {
    let mut rows = m.to_rows();
    let cols = m.cols();
    let mut r = 0;
    for col in 0..cols {
        if r == rows.len() {
            break;
        }
        loop {
            let pivot = (r..rows.len())
                .filter(|&i| !rows[i][col].is_zero())
                .min_by(|&i, &j| rows[i][col].magnitude().cmp(rows[j][col].magnitude()));
            let Some(p) = pivot else { break };
            rows.swap(r, p);
            let mut clean = true;
            for i in r + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = rows[i][col].div_floor(&rows[r][col]);
                sub_scaled(&mut rows, i, r, &q);
                clean &= rows[i][col].is_zero();
            }
            if clean {
                break;
            }
        }
        if rows[r][col].is_zero() {
            continue;
        }
        if rows[r][col].is_negative() {
            for x in &mut rows[r] {
                *x = -&*x;
            }
        }
        for i in 0..r {
            let q = rows[i][col].div_floor(&rows[r][col]);
            if !q.is_zero() {
                sub_scaled(&mut rows, i, r, &q);
            }
        }
        r += 1;
    }
    rows.truncate(r);
    IntMatrix::from_fn(r, cols, |i, j| rows[i][j].clone())
}

/// Whether the rows of `a` and `b` span the same lattice.
pub fn same_lattice(a: &IntMatrix, b: &IntMatrix) -> bool {
    a.cols() == b.cols() && hermite_normal_form(a) == hermite_normal_form(b)
}

/// Solves `x * basis = target` for a basis in Hermite normal form.
/// Returns `None` when `target` is not in the lattice.
pub fn express_in_basis(basis: &IntMatrix, target: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(basis.cols(), target.len());
    let mut residual = target.to_vec();
    let mut coeffs = Vec::with_capacity(basis.rows());
    for i in 0..basis.rows() {
        let row = basis.row(i);
        let p = row.iter().position(|x| !x.is_zero())?;
        let (q, rem) = residual[p].div_rem(&row[p]);
        if !rem.is_zero() {
            return None;
        }
        for (x, y) in residual.iter_mut().zip(row) {
            *x -= &q * y;
        }
        coeffs.push(q);
    }
    residual.iter().all(Zero::is_zero).then_some(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_basis() {
        let a = IntMatrix::from_rows(&[[-3, 3, 0], [1, -2, 1]]);
        let b = IntMatrix::from_rows(&[[-2, 1, 1], [1, -2, 1]]);
        assert!(same_lattice(&a, &b));
        assert_eq!(
            hermite_normal_form(&a),
            IntMatrix::from_rows(&[[1, 1, -2], [0, 3, -3]])
        );
        // index 2 sublattice of `a`
        let c = IntMatrix::from_rows(&[[-3, 3, 0], [-1, -1, 2]]);
        assert!(!same_lattice(&a, &c));
        assert_eq!(
            hermite_normal_form(&c),
            IntMatrix::from_rows(&[[1, 1, -2], [0, 6, -6]])
        );
    }

    #[test]
    fn duplicates_and_zero_rows() {
        let a = IntMatrix::from_rows(&[[4, 6], [0, 0], [6, 9], [2, 3]]);
        assert_eq!(hermite_normal_form(&a), IntMatrix::from_rows(&[[2, 3]]));
        assert_eq!(hermite_normal_form(&IntMatrix::zeros(2, 3)).rows(), 0);
    }

    #[test]
    fn solve() {
        let h = hermite_normal_form(&IntMatrix::from_rows(&[[1, 1], [0, 2]]));
        let x = express_in_basis(&h, &[BigInt::from(3), BigInt::from(7)]).unwrap();
        assert_eq!(x, [BigInt::from(3), BigInt::from(2)]);
        assert_eq!(
            express_in_basis(&h, &[BigInt::from(1), BigInt::from(2)]),
            None
        );
    }
}
