//! Residue arithmetic on machine words.

use crate::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[inline]
pub fn mod_mul(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

pub fn mod_pow(base: u64, mut exp: u64, n: u64) -> u64 {
    let mut acc = 1 % n;
    let mut b = base % n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, b, n);
        }
        b = mod_mul(b, b, n);
        exp >>= 1;
    }
    acc
}

/// Inverse of `t` modulo `n`, if it exists. For `n = 1` every residue is `0`
/// and `0` is its own inverse.
pub fn mod_inverse(t: u64, n: u64) -> Option<u64> {
    if n == 0 {
        return None;
    }
    let (mut r0, mut r1) = (n as i128, (t % n) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return if n == 1 { Some(0) } else { None };
    }
    Some(s0.rem_euclid(n as i128) as u64)
}

/// Multiplicative order of `t` modulo `n`: the least `d >= 1` with
/// `t^d = 1 (mod n)`.
pub fn mult_order(t: u64, n: u64) -> Result<u64> {
    if n == 0 || gcd(t % n, n) != 1 {
        return Err(Error::NotAUnit { t, n });
    }
    let one = 1 % n;
    let t = t % n;
    let mut x = t;
    let mut d = 1;
    while x != one {
        x = mod_mul(x, t, n);
        d += 1;
    }
    Ok(d)
}
