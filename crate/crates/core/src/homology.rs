//! Second quandle homology, three ways:
//!
//! * [`h2_brute_force`]: the quandle chain complex of any finite quandle and
//!   Smith normal form;
//! * [`h2_eisermann`]: `m` copies of the pullback `Z^{m-1} ×_{Z/m} Ker(1-T)`
//!   describing `Stab(0) ∩ Ker ε` in the structure group;
//! * [`h2_closed_form`]: `Z^{m(m-1)} ⊕ (Z/g)^m` with `g = gcd(m, n/m)`.
//!
//! Chains use the convention
//! `∂(x_1..x_k) = sum_{i>=2} (-1)^i [(.., x̂_i, ..) - (x_1◁x_i, .., x_{i-1}◁x_i, x_{i+1}, ..)]`
//! modulo degenerate tuples (two equal neighbours).

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::linalg::{
    express_in_basis, gcd, hermite_normal_form, homology_invariants, integer_kernel,
    AbelianInvariants, IntMatrix,
};
use crate::quandle::{FiniteQuandle, LinearAlexanderParams};
use crate::Result;

/// Boundary maps `C_3 -> C_2 -> C_1` of the quandle complex, with the
/// nondegenerate basis tuples of each degree.
#[derive(Debug, Clone)]
pub struct BoundaryPair {
    pub d2: IntMatrix,
    pub d3: IntMatrix,
    pub pairs: Vec<(usize, usize)>,
    pub triples: Vec<(usize, usize, usize)>,
}

impl BoundaryPair {
    /// Column of `d2` (equivalently row of `d3`) for the pair `(x, y)`,
    /// `None` when degenerate.
    pub fn pair_index(&self, x: usize, y: usize) -> Option<usize> {
        let n = self.d2.rows();
        pair_index(n, x, y)
    }
}

fn pair_index(n: usize, x: usize, y: usize) -> Option<usize> {
    match y.cmp(&x) {
        core::cmp::Ordering::Equal => None,
        core::cmp::Ordering::Less => Some(x * (n - 1) + y),
        core::cmp::Ordering::Greater => Some(x * (n - 1) + y - 1),
    }
}

pub fn boundary_matrices(q: &FiniteQuandle) -> BoundaryPair {
    let n = q.size();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let triples: Vec<(usize, usize, usize)> = pairs
        .iter()
        .flat_map(|&(x, y)| (0..n).filter(move |&z| z != y).map(move |z| (x, y, z)))
        .collect();

    let mut d2 = IntMatrix::zeros(n, pairs.len());
    for (col, &(x, y)) in pairs.iter().enumerate() {
        d2[(x, col)] += 1;
        d2[(q.op(x, y), col)] -= 1;
    }

    let mut d3 = IntMatrix::zeros(pairs.len(), triples.len());
    for (col, &(x, y, z)) in triples.iter().enumerate() {
        let terms = [
            ((x, z), 1),
            ((q.op(x, y), z), -1),
            ((x, y), -1),
            ((q.op(x, z), q.op(y, z)), 1),
        ];
        for ((a, b), sign) in terms {
            if let Some(row) = pair_index(n, a, b) {
                d3[(row, col)] += sign;
            }
        }
    }
    BoundaryPair {
        d2,
        d3,
        pairs,
        triples,
    }
}

/// `H_2^Q(q)` from the chain complex.
pub fn h2_brute_force(q: &FiniteQuandle) -> Result<AbelianInvariants> {
    let b = boundary_matrices(q);
    homology_invariants(&b.d2, &b.d3)
}

/// `Z^{m(m-1)} ⊕ (Z/gcd(m, n/m))^m`.
pub fn h2_closed_form(p: &LinearAlexanderParams) -> AbelianInvariants {
    let m = p.orbit_count();
    let g = gcd(m, p.n() / m);
    let m = m as usize;
    AbelianInvariants::from_cyclic_orders(m * (m - 1), core::iter::repeat_n(g, m))
}

/// The pullback `P = {(w, a) : w in Z^{m-1}, a in Ker(1-T), sum i w_i = a (mod m)}`.
///
/// `Ker(1-T) = (n/m) Z/n` is covered by `j -> j n/m`, so `P = L / R` with
/// `L = {(w, j) in Z^m : sum i w_i - (n/m) j = 0 (mod m)}` and `R` generated
/// by `(0, .., 0, m)`. The invariants come from Smith form of the
/// coordinates of `R` in a basis of `L`.
pub fn eisermann_pullback(p: &LinearAlexanderParams) -> AbelianInvariants {
    let m = p.orbit_count() as usize;
    let k = p.n() / p.orbit_count();
    // (c_1, .., c_{m-1}, -n/m, m): the last column absorbs multiples of m
    let mut condition: Vec<BigInt> = (1..m).map(BigInt::from).collect();
    condition.push(-BigInt::from(k));
    condition.push(BigInt::from(m));
    let cond = IntMatrix::from_rows(&[condition]);
    let kernel = integer_kernel(&cond);
    let projected = IntMatrix::from_fn(kernel.rows(), m, |i, j| kernel[(i, j)].clone());
    let basis = hermite_normal_form(&projected);
    debug_assert_eq!(basis.rows(), m);

    let mut r = alloc::vec![BigInt::from(0); m];
    r[m - 1] = BigInt::from(m);
    let coords = express_in_basis(&basis, &r).expect("R lies in L");
    AbelianInvariants::cokernel(&IntMatrix::from_rows(&[coords]))
}

/// `H_2^Q ≅ (Stab(0) ∩ Ker ε)^m` with the stabilizer part given by
/// [`eisermann_pullback`].
pub fn h2_eisermann(p: &LinearAlexanderParams) -> AbelianInvariants {
    eisermann_pullback(p).pow(p.orbit_count() as usize)
}
