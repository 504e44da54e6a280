//! The structure group `As(X)` of a linear Alexander quandle `X = Al(Z/n, T)`.
//!
//! An element is handled through words in the generators `e_x`. The map
//! `u(g) = (Ab(g), ω(g))` into `Z^m ⋉ Z/n` is injective, so a
//! [`PackedElement`] is a faithful finite description of `g`:
//!
//! * `Ab(g)` counts signed occurrences of generators per orbit (orbit `r`
//!   is `r + m Z/n`, represented by `r` in `0..m`),
//! * `ω(g)` is the weight, with `ω(e_x) = x` and
//!   `ω(gh) = T^{ε(h)} ω(g) + ω(h)`,
//! * the degree `ε(g)` is the sum of the entries of `Ab(g)`.
//!
//! [`canonical_word`] inverts `u`, and [`rewrite_trace`] reaches the same
//! canonical word from any input using only defining relations, central
//! powers and the linear relation
//! `e_α e_β = e_{α - (1-T)γ} e_{β + (1-T)Tγ}`.

mod rewrite;
mod word;

use alloc::vec;
use alloc::vec::Vec;

use crate::quandle::LinearAlexanderParams;
use crate::{Error, Result};

pub use rewrite::{check_step, check_trace, rewrite_trace, Rewrite, RewriteStep, Rule};
pub use word::{Letter, Word, WordParseError};

/// `(Ab(g), ω(g))` in `Z^m ⋉ Z/n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PackedElement {
    pub v: Vec<i64>,
    pub weight: u64,
}

impl PackedElement {
    pub fn identity(m: usize) -> Self {
        PackedElement {
            v: vec![0; m],
            weight: 0,
        }
    }

    pub fn degree(&self) -> i64 {
        self.v.iter().sum()
    }
}

/// Element `(k, a)` of `Z ⋉ Z/n` with `(k,a)(m,b) = (k+m, T^m a + b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SemidirectZ {
    pub degree: i64,
    pub weight: u64,
}

impl SemidirectZ {
    pub fn new(degree: i64, weight: u64) -> Self {
        SemidirectZ { degree, weight }
    }
}

pub fn sd_mul(p: &LinearAlexanderParams, x: SemidirectZ, y: SemidirectZ) -> SemidirectZ {
    SemidirectZ {
        degree: x.degree + y.degree,
        weight: p.add(p.apply_t(y.degree, x.weight), y.weight),
    }
}

/// `(k, a)^-1 = (-k, -T^{-k} a)`.
pub fn sd_inv(p: &LinearAlexanderParams, x: SemidirectZ) -> SemidirectZ {
    SemidirectZ {
        degree: -x.degree,
        weight: p.neg(p.apply_t(-x.degree, x.weight)),
    }
}

/// `by^-1 x by = (k, T^m a + (1 - T^k) b)` for `x = (k, a)`, `by = (m, b)`.
pub fn sd_conj(p: &LinearAlexanderParams, x: SemidirectZ, by: SemidirectZ) -> SemidirectZ {
    let one_minus_tk = p.sub(1 % p.n(), p.pow_t(x.degree));
    SemidirectZ {
        degree: x.degree,
        weight: p.add(
            p.apply_t(by.degree, x.weight),
            p.mul(one_minus_tk, by.weight),
        ),
    }
}

/// `u(w) = (Ab(w), ω(w))`. Colors are read modulo `n`.
pub fn word_eval(p: &LinearAlexanderParams, w: &Word) -> PackedElement {
    let m = p.orbit_count();
    let mut v = vec![0i64; m as usize];
    let mut weight = 0;
    for l in w.letters() {
        let x = l.color % p.n();
        v[(x % m) as usize] += l.exp;
        // ω(g e_x^k) = T^k ω(g) + q_k(T) x
        weight = p.add(p.apply_t(l.exp, weight), p.mul(p.geometric(l.exp), x));
    }
    PackedElement { v, weight }
}

/// Product in `Z^m ⋉ Z/n`, where `Z^m` acts through the degree.
pub fn pack_mul(p: &LinearAlexanderParams, x: &PackedElement, y: &PackedElement) -> PackedElement {
    assert_eq!(x.v.len(), y.v.len(), "packed elements of different rank");
    PackedElement {
        v: x.v.iter().zip(&y.v).map(|(a, b)| a + b).collect(),
        weight: p.add(p.apply_t(y.degree(), x.weight), y.weight),
    }
}

/// `f = (ε, ω)`: the image of a word in `Z ⋉ Z/n`.
pub fn f_map(p: &LinearAlexanderParams, w: &Word) -> SemidirectZ {
    let e = word_eval(p, w);
    SemidirectZ::new(e.degree(), e.weight)
}

/// The section `s(k, a) = e_0^{k-1} e_a` of `f`.
pub fn section(k: i64, a: u64) -> Word {
    let mut w = Word::new();
    w.push(0, k - 1);
    w.push(a, 1);
    w
}

/// Weight of `e_{m-1}^{v_{m-1}} ... e_1^{v_1} e_0^{v_0}`:
/// `sum_{r>=1} q_{v_r}(T) T^{v_0 + ... + v_{r-1}} r`.
pub fn b_of(p: &LinearAlexanderParams, v: &[i64]) -> Result<u64> {
    let m = p.orbit_count() as usize;
    if v.len() != m {
        return Err(Error::LengthMismatch {
            expected: m,
            found: v.len(),
        });
    }
    let mut b = 0;
    let mut below = v.first().copied().unwrap_or(0);
    for (r, &vr) in v.iter().enumerate().skip(1) {
        let term = p.mul(p.mul(p.geometric(vr), p.pow_t(below)), r as u64 % p.n());
        b = p.add(b, term);
        below += vr;
    }
    Ok(b)
}

/// The word `e_{m-1}^{v_{m-1}} ... e_1^{v_1} e_0^{v_0 - 1} e_d` with
/// `d = a - b(v)`, zero powers omitted and a trailing `e_0` merged into the
/// `e_0` block. This is the unique normal form of the element.
pub fn canonical_word(p: &LinearAlexanderParams, x: &PackedElement) -> Result<Word> {
    let b = b_of(p, &x.v)?;
    let d = p.sub(x.weight, b);
    if !p.in_image_of_one_minus_t(d) {
        return Err(Error::NotInImage { defect: d });
    }
    let mut w = Word::new();
    for r in (1..x.v.len()).rev() {
        w.push(r as u64, x.v[r]);
    }
    let v0 = x.v[0];
    if d == 0 {
        w.push(0, v0);
    } else {
        w.push(0, v0 - 1);
        w.push(d, 1);
    }
    Ok(w)
}

/// Right action `x · g = T^{ε(g)} x + (1 - T) ω(g)`.
pub fn act(p: &LinearAlexanderParams, x: u64, w: &Word) -> u64 {
    let e = word_eval(p, w);
    p.add(p.apply_t(e.degree(), x % p.n()), p.one_minus_t(e.weight))
}

/// Least `d >= 1` with every `e_x^d` central; the order of `t` mod `n`.
pub fn central_power_degree(p: &LinearAlexanderParams) -> u64 {
    p.central_power_degree()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn params(n: u64, t: u64) -> LinearAlexanderParams {
        LinearAlexanderParams::new(n, t).unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn packed(v: &[i64], weight: u64) -> PackedElement {
        PackedElement {
            v: v.to_vec(),
            weight,
        }
    }

    #[test]
    fn eval_examples() {
        let p = params(4, 3);
        assert_eq!(word_eval(&p, &w("e0")), packed(&[1, 0], 0));
        assert_eq!(word_eval(&p, &w("e1 e2")), packed(&[1, 1], 1));
        assert_eq!(word_eval(&p, &w("e1^-1")), packed(&[0, -1], 1));
        assert_eq!(word_eval(&p, &Word::new()), packed(&[0, 0], 0));
    }

    #[test]
    fn f_map_examples() {
        let p = params(4, 3);
        for a in 0..4 {
            assert_eq!(f_map(&p, &Word::generator(a)), SemidirectZ::new(1, a));
        }
        assert_eq!(f_map(&p, &Word::new()), SemidirectZ::new(0, 0));
        assert_eq!(f_map(&p, &w("e0 e3")), SemidirectZ::new(2, 3));
        assert_eq!(f_map(&p, &section(2, 3)), SemidirectZ::new(2, 3));
    }

    #[test]
    fn semidirect_examples() {
        let p = params(4, 3);
        let s = SemidirectZ::new;
        assert_eq!(sd_mul(&p, s(1, 0), s(1, 1)), s(2, 1));
        assert_eq!(sd_inv(&p, s(1, 1)), s(-1, 1));
        for a in 0..4 {
            for k in -3..4 {
                for c in 0..4 {
                    let x = s(0, a);
                    let by = s(k, c);
                    assert_eq!(sd_conj(&p, x, by), s(0, p.apply_t(k, a)));
                    let y = s(k, a);
                    assert_eq!(sd_mul(&p, y, sd_inv(&p, y)), s(0, 0));
                    let direct = sd_mul(&p, sd_mul(&p, sd_inv(&p, by), y), by);
                    assert_eq!(sd_conj(&p, y, by), direct);
                }
            }
        }
    }

    #[test]
    fn b_of_examples() {
        let p = params(4, 3);
        assert_eq!(b_of(&p, &[5, 0]), Ok(0));
        assert_eq!(b_of(&p, &[1, 1]), Ok(3));
        assert_eq!(b_of(&p, &[-1, 1]), Ok(3));
        assert_eq!(
            b_of(&p, &[1, 1, 1]),
            Err(Error::LengthMismatch {
                expected: 2,
                found: 3
            })
        );
        let p = params(9, 4);
        assert_eq!(b_of(&p, &[-7, 0, 0]), Ok(0));
    }

    #[test]
    fn canonical_examples() {
        let p = params(4, 3);
        assert_eq!(
            canonical_word(&p, &packed(&[1, 1], 1)).unwrap().to_string(),
            "e1 e2"
        );
        assert_eq!(canonical_word(&p, &packed(&[0, 0], 0)), Ok(Word::new()));
        assert_eq!(
            canonical_word(&p, &packed(&[1, 1], 0)),
            Err(Error::NotInImage { defect: 1 })
        );
        assert!(matches!(
            canonical_word(&p, &packed(&[1], 0)),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn action_examples() {
        let p = params(4, 3);
        for x in 0..4 {
            assert_eq!(act(&p, x, &Word::new()), x);
        }
        assert_eq!(act(&p, 1, &w("e2")), 3);
        assert_eq!(act(&p, 0, &w("e1 e2")), 2);
    }

    #[test]
    fn central_degrees() {
        assert_eq!(central_power_degree(&params(7, 1)), 1);
        assert_eq!(central_power_degree(&params(4, 3)), 2);
        assert_eq!(central_power_degree(&params(9, 4)), 3);
    }

    #[test]
    fn sections() {
        assert_eq!(section(1, 3), Word::generator(3));
        assert_eq!(section(2, 3).to_string(), "e0 e3");
        assert_eq!(section(0, 0).to_string(), "e0^-1 e0");
        let p = params(4, 3);
        assert_eq!(word_eval(&p, &section(0, 0)), PackedElement::identity(2));
    }
}
