use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use super::{smith_normal_form, IntMatrix};
use crate::{Error, Result};

/// Canonical form of a finitely generated abelian group:
/// `Z^rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k` with `2 <= t_1 | t_2 | ... | t_k`.
///
/// Two groups are isomorphic iff their invariants compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AbelianInvariants {
    rank: usize,
    torsion: Vec<BigUint>,
}

impl AbelianInvariants {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        AbelianInvariants {
            rank,
            torsion: Vec::new(),
        }
    }

    /// `Z^rank` plus one cyclic summand `Z/d` per entry of `orders`, where an
    /// order of `0` means `Z`. The orders need not form a divisibility chain.
    pub fn from_cyclic_orders<T: Into<BigInt>>(
        rank: usize,
        orders: impl IntoIterator<Item = T>,
    ) -> Self {
        let orders: Vec<BigInt> = orders.into_iter().map(Into::into).collect();
        let snf = smith_normal_form(&IntMatrix::diagonal(&orders));
        Self::from_diagonal(rank, &snf.diagonal_entries())
    }

    /// The group `Z^generators / (row span of relations)`.
    pub fn cokernel(relations: &IntMatrix) -> Self {
        let snf = smith_normal_form(relations);
        let diag = snf.diagonal_entries();
        let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
        let mut g = Self::from_diagonal(0, &diag);
        g.rank = relations.cols() - nonzero;
        g
    }

    // `diag` is an SNF diagonal; zeros become free summands.
    fn from_diagonal(rank: usize, diag: &[BigInt]) -> Self {
        let mut g = Self::free(rank);
        for d in diag {
            if d.is_zero() {
                g.rank += 1;
            } else if !d.is_one() {
                g.torsion.push(d.magnitude().clone());
            }
        }
        g
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[BigUint] {
        &self.torsion
    }

    /// Torsion factors as machine integers, if they all fit.
    pub fn torsion_u64(&self) -> Option<Vec<u64>> {
        self.torsion.iter().map(ToPrimitive::to_u64).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigUint {
        self.torsion.iter().product()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let orders = self
            .torsion
            .iter()
            .chain(&other.torsion)
            .cloned()
            .map(BigInt::from);
        Self::from_cyclic_orders(self.rank + other.rank, orders)
    }

    /// Direct sum of `k` copies.
    pub fn pow(&self, k: usize) -> Self {
        let mut torsion = Vec::with_capacity(self.torsion.len() * k);
        // t_1^k, t_2^k, ... is already a divisibility chain when sorted by factor
        for t in &self.torsion {
            torsion.extend(core::iter::repeat_n(t.clone(), k));
        }
        AbelianInvariants {
            rank: self.rank * k,
            torsion,
        }
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut first = true;
        if self.rank > 0 {
            write!(f, "Z^{}", self.rank)?;
            first = false;
        }
        for t in &self.torsion {
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "Z/{t}")?;
            first = false;
        }
        Ok(())
    }
}

/// `Ker(d_low) / Im(d_high)` for a pair of composable boundary maps
/// `C_high --d_high--> C_mid --d_low--> C_low`.
pub fn homology_invariants(d_low: &IntMatrix, d_high: &IntMatrix) -> Result<AbelianInvariants> {
    let composite = d_low.checked_mul(d_high)?;
    if !composite.is_zero() {
        return Err(Error::NotAComplex);
    }
    let low = smith_normal_form(d_low);
    let low_rank = low
        .diagonal_entries()
        .iter()
        .filter(|d| !d.is_zero())
        .count();
    let high = smith_normal_form(d_high);
    let high_diag = high.diagonal_entries();
    let high_rank = high_diag.iter().filter(|d| !d.is_zero()).count();
    // the kernel is a direct summand of C_mid, so the torsion of
    // C_mid / Im(d_high) is exactly the torsion of the homology
    let mut g = AbelianInvariants::from_diagonal(0, &high_diag);
    g.rank = d_low.cols() - low_rank - high_rank;
    Ok(g)
}
