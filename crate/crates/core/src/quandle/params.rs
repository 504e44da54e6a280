use crate::linalg::{gcd, mod_inverse, mod_mul, mod_pow, mult_order};
use crate::{Error, Result};

/// The data `(n, t)` of the linear Alexander quandle `Al(Z/n, T)` with
/// `T x = t x`, together with derived constants.
///
/// Residues are `u64` values in `0..n`; signed inputs are reduced with
/// [`LinearAlexanderParams::reduce`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LinearAlexanderParams {
    n: u64,
    t: u64,
    t_inv: u64,
    m: u64,
}

/// Number of orbits of `Al(Z/n, t)`: `gcd(n, 1 - t)` with `gcd(n, 0) = n`.
pub fn orbit_count_linear(n: u64, t: u64) -> Result<u64> {
    LinearAlexanderParams::new(n, t).map(|p| p.orbit_count())
}

impl LinearAlexanderParams {
    pub fn new(n: u64, t: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotAUnit { t, n });
        }
        let t_red = t % n;
        let t_inv = match mod_inverse(t_red, n) {
            Some(inv) if gcd(t_red, n) == 1 => inv,
            _ => return Err(Error::NotAUnit { t, n }),
        };
        let one_minus_t = (1 + n - t_red) % n;
        Ok(LinearAlexanderParams {
            n,
            t: t_red,
            t_inv,
            m: gcd(n, one_minus_t),
        })
    }

    /// The Takasaki (dihedral) quandle `T = -1`.
    pub fn takasaki(n: u64) -> Result<Self> {
        Self::new(n, n.saturating_sub(1))
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn t_inv(&self) -> u64 {
        self.t_inv
    }

    /// Number of orbits `m`; the orbits are the cosets of `m Z/n`.
    pub fn orbit_count(&self) -> u64 {
        self.m
    }

    pub fn is_connected(&self) -> bool {
        self.m == 1
    }

    /// Orbit index of `x`, i.e. its representative in `0..m`.
    pub fn orbit_of(&self, x: u64) -> u64 {
        x % self.m
    }

    /// Multiplicative order of `t`; the least `d` with `e_x^d` central.
    pub fn central_power_degree(&self) -> u64 {
        mult_order(self.t, self.n).expect("t is a unit")
    }

    pub fn reduce(&self, x: i128) -> u64 {
        x.rem_euclid(self.n as i128) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        ((a as u128 + b as u128) % self.n as u128) as u64
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.n - a % self.n) % self.n
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mod_mul(a, b, self.n)
    }

    /// `(1 - T) x`.
    pub fn one_minus_t(&self, x: u64) -> u64 {
        self.sub(x, self.mul(self.t, x))
    }

    /// `T^k` for any integer `k`.
    pub fn pow_t(&self, k: i64) -> u64 {
        if k >= 0 {
            mod_pow(self.t, k as u64, self.n)
        } else {
            mod_pow(self.t_inv, k.unsigned_abs(), self.n)
        }
    }

    /// `T^k x`.
    pub fn apply_t(&self, k: i64, x: u64) -> u64 {
        self.mul(self.pow_t(k), x)
    }

    /// `q_k(T)`: `1 + T + ... + T^(k-1)` for `k >= 0`, and
    /// `-(T^k + ... + T^(-1))` for `k < 0`, so that `q_(k+1) = q_k + T^k`.
    pub fn geometric(&self, k: i64) -> u64 {
        if k < 0 {
            let q = self.geometric_nonneg(k.unsigned_abs());
            return self.neg(self.mul(self.pow_t(k), q));
        }
        self.geometric_nonneg(k as u64)
    }

    // (T^k, q_k) by binary expansion of k
    fn geometric_nonneg(&self, k: u64) -> u64 {
        let mut power = 1 % self.n;
        let mut sum = 0;
        for bit in (0..64 - k.leading_zeros()).rev() {
            // doubling: q_2j = q_j (1 + T^j)
            sum = self.mul(sum, self.add(1, power));
            power = self.mul(power, power);
            if (k >> bit) & 1 == 1 {
                sum = self.add(sum, power);
                power = self.mul(power, self.t);
            }
        }
        sum
    }

    /// `a ◁ b = T a + (1 - T) b`.
    pub fn op(&self, a: u64, b: u64) -> u64 {
        self.add(self.mul(self.t, a), self.one_minus_t(b))
    }

    /// `a · e_b^j`, the `j`-th power of the right translation by `b`.
    pub fn translate(&self, a: u64, b: u64, j: i64) -> u64 {
        let tj = self.pow_t(j);
        self.add(self.mul(tj, a), self.mul(self.sub(1 % self.n, tj), b))
    }

    /// Whether `x` lies in `im(1 - T) = m Z/n`.
    pub fn in_image_of_one_minus_t(&self, x: u64) -> bool {
        x.is_multiple_of(self.m)
    }

    /// Some `g` with `(1 - T) g = delta`, if one exists.
    pub fn solve_one_minus_t(&self, delta: u64) -> Option<u64> {
        if !self.in_image_of_one_minus_t(delta) {
            return None;
        }
        let reduced_n = self.n / self.m;
        let s = self.one_minus_t(1) / self.m;
        let inv = mod_inverse(s % reduced_n, reduced_n)?;
        Some(mod_mul(delta / self.m, inv, reduced_n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction() {
        assert_eq!(
            LinearAlexanderParams::new(4, 2),
            Err(Error::NotAUnit { t: 2, n: 4 })
        );
        assert!(LinearAlexanderParams::new(0, 1).is_err());
        let p = LinearAlexanderParams::new(4, 7).unwrap();
        assert_eq!((p.t(), p.t_inv()), (3, 3));
        assert_eq!(LinearAlexanderParams::new(1, 0).unwrap().orbit_count(), 1);
    }

    #[test]
    fn orbit_counts() {
        assert_eq!(orbit_count_linear(4, 3), Ok(2));
        assert_eq!(orbit_count_linear(9, 4), Ok(3));
        assert_eq!(orbit_count_linear(5, 2), Ok(1));
        for n in 1..20 {
            assert_eq!(orbit_count_linear(n, 1), Ok(n));
        }
    }

    #[test]
    fn geometric_recurrence() {
        for (n, t) in [(4, 3), (9, 4), (12, 5), (7, 3), (8, 1), (1, 0)] {
            let p = LinearAlexanderParams::new(n, t).unwrap();
            assert_eq!(p.geometric(0), 0);
            assert_eq!(p.geometric(-1), p.neg(p.t_inv()));
            for k in -40..40 {
                assert_eq!(
                    p.geometric(k + 1),
                    p.add(p.geometric(k), p.pow_t(k)),
                    "n={n} t={t} k={k}"
                );
            }
        }
    }

    #[test]
    fn translations() {
        let p = LinearAlexanderParams::new(4, 3).unwrap();
        assert_eq!(p.op(1, 2), 3);
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(p.translate(a, b, 1), p.op(a, b));
                assert_eq!(p.translate(p.translate(a, b, 1), b, -1), a);
                assert_eq!(p.translate(a, b, 2), p.op(p.op(a, b), b));
            }
        }
    }

    #[test]
    fn solving() {
        for (n, t) in [(4, 3), (9, 4), (12, 5), (8, 5), (6, 1), (5, 2)] {
            let p = LinearAlexanderParams::new(n, t).unwrap();
            for delta in 0..n {
                match p.solve_one_minus_t(delta) {
                    Some(g) => assert_eq!(p.one_minus_t(g), delta),
                    None => assert!((0..n).all(|g| p.one_minus_t(g) != delta)),
                }
            }
        }
    }
}
