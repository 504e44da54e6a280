//! The 2-cocycle of the central extension `K(X) -> As(X) -> Z ⋉ Z/n`.
//!
//! Elements of `K(X)` have degree and weight zero, so under the faithful
//! packing they are determined by their abelianization vector alone; this
//! module represents them as [`KernelVector`]s and adds them componentwise.

use alloc::vec::Vec;
use core::ops::{Add, Neg, Sub};

use crate::linalg::{hermite_normal_form, IntMatrix};
use crate::quandle::LinearAlexanderParams;
use crate::structure::{sd_mul, section, word_eval, PackedElement, SemidirectZ, Word};

/// An element of `K(X)`, by its abelianization. Degree and weight are zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KernelVector(pub Vec<i64>);

impl KernelVector {
    pub fn zero(m: usize) -> Self {
        KernelVector(alloc::vec![0; m])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Degree zero and `sum r v_r = 0 (mod m)`.
    pub fn is_kernel_member(&self) -> bool {
        let m = self.0.len() as i64;
        let degree: i64 = self.0.iter().sum();
        let weighted: i64 = self.0.iter().enumerate().map(|(r, &x)| r as i64 * x).sum();
        degree == 0 && weighted.rem_euclid(m.max(1)) == 0
    }

    pub fn as_packed(&self) -> PackedElement {
        PackedElement {
            v: self.0.clone(),
            weight: 0,
        }
    }
}

impl Add for &KernelVector {
    type Output = KernelVector;

    fn add(self, rhs: &KernelVector) -> KernelVector {
        KernelVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &KernelVector {
    type Output = KernelVector;

    fn sub(self, rhs: &KernelVector) -> KernelVector {
        KernelVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &KernelVector {
    type Output = KernelVector;

    fn neg(self) -> KernelVector {
        KernelVector(self.0.iter().map(|a| -a).collect())
    }
}

/// `s(α) s(β) s(αβ)^-1`, as a word.
pub fn phi_word(p: &LinearAlexanderParams, alpha: SemidirectZ, beta: SemidirectZ) -> Word {
    let prod = sd_mul(p, alpha, beta);
    section(alpha.degree, alpha.weight)
        .concat(&section(beta.degree, beta.weight))
        .concat(&section(prod.degree, prod.weight).inverse())
}

/// `φ(α, β) = s(α) s(β) s(αβ)^-1`.
pub fn phi(p: &LinearAlexanderParams, alpha: SemidirectZ, beta: SemidirectZ) -> KernelVector {
    let e = word_eval(p, &phi_word(p, alpha, beta));
    debug_assert_eq!((e.degree(), e.weight), (0, 0));
    KernelVector(e.v)
}

/// `φ₀(a, b) = φ((0, a), (0, b))`.
pub fn phi0(p: &LinearAlexanderParams, a: u64, b: u64) -> KernelVector {
    phi(p, SemidirectZ::new(0, a), SemidirectZ::new(0, b))
}

/// `λ(x, y) = φ₀(y, x) - φ₀(x, y)`.
pub fn lambda_form(p: &LinearAlexanderParams, x: u64, y: u64) -> KernelVector {
    &phi0(p, y, x) - &phi0(p, x, y)
}

/// Hermite basis of `{v in Z^m : sum v_r = 0, sum r v_r = 0 (mod m)}`, the
/// abelianization image of `K(X)`.
pub fn kernel_lattice_basis(p: &LinearAlexanderParams) -> Vec<KernelVector> {
    let m = p.orbit_count() as usize;
    let mut gens: Vec<Vec<i64>> = Vec::new();
    if m >= 2 {
        // m (e_1 - e_0)
        let mut g = alloc::vec![0; m];
        g[0] = -(m as i64);
        g[1] = m as i64;
        gens.push(g);
        // (e_r - e_0) - r (e_1 - e_0)
        for r in 2..m {
            let mut g = alloc::vec![0; m];
            g[0] = r as i64 - 1;
            g[1] = -(r as i64);
            g[r] = 1;
            gens.push(g);
        }
    }
    lattice_basis(m, &gens)
}

/// Hermite basis of the lattice spanned by `gens`.
pub fn lattice_basis(m: usize, gens: &[Vec<i64>]) -> Vec<KernelVector> {
    if gens.is_empty() {
        return Vec::new();
    }
    let h = hermite_normal_form(&IntMatrix::from_rows(gens));
    (0..h.rows())
        .map(|i| {
            KernelVector(
                h.row(i)
                    .iter()
                    .map(|x| i64::try_from(x).expect("small lattice entries"))
                    .collect(),
            )
        })
        .inspect(|v| debug_assert_eq!(v.0.len(), m))
        .collect()
}

/// Hermite basis of the lattice spanned by `φ((1,a),(1,b))` for all `a, b`.
pub fn phi_image_basis(p: &LinearAlexanderParams) -> Vec<KernelVector> {
    let n = p.n();
    let mut gens = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let v = phi(p, SemidirectZ::new(1, a), SemidirectZ::new(1, b));
            if !v.is_zero() {
                gens.push(v.0);
            }
        }
    }
    lattice_basis(p.orbit_count() as usize, &gens)
}
