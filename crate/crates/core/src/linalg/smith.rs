//! Smith normal form by unimodular row and column elimination.
//!
//! Each round moves the nonzero entry of least magnitude in the trailing
//! submatrix to the pivot position, which keeps entry growth in check.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// `d = u * m * v` with `u`, `v` unimodular and `d` in Smith normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.d
            .diagonal_entries()
            .iter()
            .take_while(|d| !d.is_zero())
            .count()
    }
}

type Rows = Vec<Vec<BigInt>>;

struct Reducer {
    a: Rows,
    cols: usize,
    u: Option<Rows>,
    v: Option<Rows>,
}

fn rows_of(m: &IntMatrix) -> Rows {
    m.to_rows()
}

fn from_rows(rows: Rows, cols: usize) -> IntMatrix {
    IntMatrix::from_fn(rows.len(), cols, |i, j| rows[i][j].clone())
}

/// `dst -= q * src` on the tail of two distinct rows.
fn row_sub(rows: &mut Rows, dst: usize, src: usize, q: &BigInt, from: usize) {
    let (d, s) = if dst < src {
        let (lo, hi) = rows.split_at_mut(src);
        (&mut lo[dst], &hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(dst);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in d[from..].iter_mut().zip(&s[from..]) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

fn col_sub(rows: &mut Rows, dst: usize, src: usize, q: &BigInt, from: usize) {
    for row in rows[from..].iter_mut() {
        if !row[src].is_zero() {
            let delta = q * &row[src];
            row[dst] -= delta;
        }
    }
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        if let Some(u) = &mut self.u {
            u.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in &mut self.a {
            row.swap(i, j);
        }
        if let Some(v) = &mut self.v {
            for row in v {
                row.swap(i, j);
            }
        }
    }

    fn row_sub(&mut self, dst: usize, src: usize, q: &BigInt, from: usize) {
        row_sub(&mut self.a, dst, src, q, from);
        if let Some(u) = &mut self.u {
            row_sub(u, dst, src, q, 0);
        }
    }

    fn col_sub(&mut self, dst: usize, src: usize, q: &BigInt, from: usize) {
        col_sub(&mut self.a, dst, src, q, from);
        if let Some(v) = &mut self.v {
            col_sub(v, dst, src, q, 0);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.a[i] {
            *x = -&*x;
        }
        if let Some(u) = &mut self.u {
            for x in &mut u[i] {
                *x = -&*x;
            }
        }
    }

    fn smallest_in_tail(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in self.a.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if x.is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((bi, bj)) => x.magnitude() < self.a[bi][bj].magnitude(),
                };
                if better {
                    best = Some((i, j));
                    if x.magnitude() == &1u32.into() {
                        return best;
                    }
                }
            }
        }
        best
    }

    fn run(&mut self) {
        let rows = self.a.len();
        let cols = self.cols;
        for t in 0..rows.min(cols) {
            loop {
                let Some((pi, pj)) = self.smallest_in_tail(t) else {
                    return;
                };
                self.swap_rows(t, pi);
                self.swap_cols(t, pj);

                let mut dirty = false;
                for i in t + 1..rows {
                    if self.a[i][t].is_zero() {
                        continue;
                    }
                    let q = &self.a[i][t] / &self.a[t][t];
                    if !q.is_zero() {
                        self.row_sub(i, t, &q, t);
                    }
                    dirty |= !self.a[i][t].is_zero();
                }
                for j in t + 1..cols {
                    if self.a[t][j].is_zero() {
                        continue;
                    }
                    let q = &self.a[t][j] / &self.a[t][t];
                    if !q.is_zero() {
                        self.col_sub(j, t, &q, t);
                    }
                    dirty |= !self.a[t][j].is_zero();
                }
                if dirty {
                    continue;
                }

                let pivot = self.a[t][t].clone();
                let offender = (t + 1..rows)
                    .find(|&i| self.a[i][t + 1..].iter().any(|x| !x.is_multiple_of(&pivot)));
                match offender {
                    Some(i) => {
                        // row_t += row_i
                        let minus_one = BigInt::from(-1);
                        self.row_sub(t, i, &minus_one, t);
                    }
                    None => break,
                }
            }
            if self.a[t][t].is_negative() {
                self.negate_row(t);
            }
        }
    }
}

fn reduce(m: &IntMatrix, transforms: bool) -> Reducer {
    let mut r = Reducer {
        a: rows_of(m),
        cols: m.cols(),
        u: transforms.then(|| rows_of(&IntMatrix::identity(m.rows()))),
        v: transforms.then(|| rows_of(&IntMatrix::identity(m.cols()))),
    };
    r.run();
    r
}

/// The Smith normal form of `m`: same shape, diagonal, nonnegative, each
/// diagonal entry dividing the next.
pub fn smith_normal_form(m: &IntMatrix) -> IntMatrix {
    from_rows(reduce(m, false).a, m.cols())
}

/// Smith normal form together with the unimodular transforms.
pub fn smith_decomposition(m: &IntMatrix) -> SmithDecomposition {
    let r = reduce(m, true);
    SmithDecomposition {
        d: from_rows(r.a, m.cols()),
        u: from_rows(r.u.unwrap(), m.rows()),
        v: from_rows(r.v.unwrap(), m.cols()),
    }
}

/// A basis of `{x in Z^cols : m x = 0}`, one basis vector per row.
pub fn integer_kernel(m: &IntMatrix) -> IntMatrix {
    let s = smith_decomposition(m);
    let rank = s.rank();
    let cols = m.cols();
    IntMatrix::from_fn(cols - rank, cols, |i, j| s.v[(j, rank + i)].clone())
}
