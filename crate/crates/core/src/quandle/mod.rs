//! Finite quandles given by their operation tables.
//!
//! `table[a][b]` stores `a ◁ b`; the row is the left operand. Elements are
//! `0..n`.

mod group;
mod params;

use alloc::vec::Vec;
use core::fmt;

pub use group::{GroupDefect, GroupTable};
pub use params::{orbit_count_linear, LinearAlexanderParams};

/// First violated quandle axiom, with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    /// Row `row` has `len` entries instead of `n`.
    NotSquare {
        row: usize,
        len: usize,
    },
    OutOfRange {
        a: usize,
        b: usize,
        value: usize,
    },
    /// `a ◁ a != a`.
    Idempotence {
        a: usize,
    },
    /// Column `b` is not a permutation.
    RightTranslation {
        b: usize,
    },
    /// `(a ◁ b) ◁ c != (a ◁ c) ◁ (b ◁ c)`.
    SelfDistributivity {
        a: usize,
        b: usize,
        c: usize,
    },
}

impl AxiomViolation {
    pub fn axiom(&self) -> &'static str {
        match self {
            AxiomViolation::NotSquare { .. } => "shape",
            AxiomViolation::OutOfRange { .. } => "range",
            AxiomViolation::Idempotence { .. } => "idempotence",
            AxiomViolation::RightTranslation { .. } => "right-translation",
            AxiomViolation::SelfDistributivity { .. } => "self-distributivity",
        }
    }

    /// The witness indices, in the order `a, b, c`.
    pub fn witness(&self) -> Vec<usize> {
        match *self {
            AxiomViolation::NotSquare { row, .. } => alloc::vec![row],
            AxiomViolation::OutOfRange { a, b, .. } => alloc::vec![a, b],
            AxiomViolation::Idempotence { a } => alloc::vec![a],
            AxiomViolation::RightTranslation { b } => alloc::vec![b],
            AxiomViolation::SelfDistributivity { a, b, c } => alloc::vec![a, b, c],
        }
    }
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AxiomViolation::NotSquare { row, len } => write!(f, "row {row} has {len} entries"),
            AxiomViolation::OutOfRange { a, b, value } => {
                write!(f, "entry ({a},{b}) = {value} is out of range")
            }
            AxiomViolation::Idempotence { a } => write!(f, "idempotence fails at a={a}"),
            AxiomViolation::RightTranslation { b } => {
                write!(f, "right translation by b={b} is not bijective")
            }
            AxiomViolation::SelfDistributivity { a, b, c } => {
                write!(f, "self-distributivity fails at a={a}, b={b}, c={c}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteQuandle {
    n: usize,
    table: Vec<usize>,
}

impl FiniteQuandle {
    /// Checks the axioms in order (idempotence, bijectivity of each right
    /// translation, self-distributivity) and reports the first failure.
    pub fn validate<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self, AxiomViolation> {
        let n = rows.len();
        let mut table = Vec::with_capacity(n * n);
        for (a, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != n {
                return Err(AxiomViolation::NotSquare {
                    row: a,
                    len: r.len(),
                });
            }
            for (b, &value) in r.iter().enumerate() {
                if value >= n {
                    return Err(AxiomViolation::OutOfRange { a, b, value });
                }
            }
            table.extend_from_slice(r);
        }
        let q = FiniteQuandle { n, table };
        q.check()?;
        Ok(q)
    }

    fn check(&self) -> Result<(), AxiomViolation> {
        let n = self.n;
        if let Some(a) = (0..n).find(|&a| self.op(a, a) != a) {
            return Err(AxiomViolation::Idempotence { a });
        }
        let mut seen = alloc::vec![false; n];
        for b in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for a in 0..n {
                seen[self.op(a, b)] = true;
            }
            if seen.iter().any(|s| !s) {
                return Err(AxiomViolation::RightTranslation { b });
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.op(a, b);
                for c in 0..n {
                    if self.op(ab, c) != self.op(self.op(a, c), self.op(b, c)) {
                        return Err(AxiomViolation::SelfDistributivity { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(f(a, b));
            }
        }
        let q = FiniteQuandle { n, table };
        debug_assert_eq!(q.check(), Ok(()));
        q
    }

    /// `a ◁ b = a`.
    pub fn trivial(n: usize) -> Self {
        Self::from_fn(n, |a, _| a)
    }

    /// `Al(Z/n, T)`: `a ◁ b = t a + (1 - t) b mod n`.
    pub fn alexander(p: &LinearAlexanderParams) -> Self {
        let n = usize::try_from(p.n()).expect("modulus fits in memory");
        Self::from_fn(n, |a, b| p.op(a as u64, b as u64) as usize)
    }

    /// The Takasaki quandle `a ◁ b = 2b - a mod n`.
    pub fn takasaki(n: usize) -> Self {
        Self::from_fn(n, |a, b| (2 * b + n - a) % n)
    }

    /// `Conj(G)`: `g ◁ h = h^-1 g h`.
    pub fn conjugation(g: &GroupTable) -> Self {
        Self::from_fn(g.order(), |a, b| g.mul(g.mul(g.inv(b), a), b))
    }

    /// `Core(G)`: `g ◁ h = h g^-1 h`.
    pub fn core(g: &GroupTable) -> Self {
        Self::from_fn(g.order(), |a, b| g.mul(g.mul(b, g.inv(a)), b))
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// `a ◁ b`.
    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.n.max(1))
            .map(<[usize]>::to_vec)
            .collect()
    }

    /// Orbits under the right translations, each sorted, ordered by their
    /// least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for a in 0..self.n {
            for b in 0..self.n {
                let (x, y) = (find(&mut parent, a), find(&mut parent, self.op(a, b)));
                if x != y {
                    parent[x.max(y)] = x.min(y);
                }
            }
        }
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of = alloc::vec![usize::MAX; self.n];
        for a in 0..self.n {
            let root = find(&mut parent, a);
            if block_of[root] == usize::MAX {
                block_of[root] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[block_of[root]].push(a);
        }
        blocks
    }

    pub fn is_connected(&self) -> bool {
        self.orbits().len() == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn al(n: u64, t: u64) -> FiniteQuandle {
        FiniteQuandle::alexander(&LinearAlexanderParams::new(n, t).unwrap())
    }

    #[test]
    fn alexander_tables() {
        assert_eq!(al(4, 3).op(1, 2), 3);
        let triv = al(6, 1);
        assert!((0..6).all(|a| (0..6).all(|b| triv.op(a, b) == a)));
        assert_eq!(triv, FiniteQuandle::trivial(6));
        assert_eq!(al(4, 3), FiniteQuandle::takasaki(4));
        for n in 1..12 {
            assert_eq!(
                FiniteQuandle::alexander(&LinearAlexanderParams::takasaki(n as u64).unwrap()),
                FiniteQuandle::takasaki(n)
            );
        }
    }

    #[test]
    fn validation_reports() {
        assert!(FiniteQuandle::validate(&al(4, 3).rows()).is_ok());
        assert_eq!(
            FiniteQuandle::validate(&[[1, 0], [1, 0]]),
            Err(AxiomViolation::Idempotence { a: 0 })
        );
        assert_eq!(
            FiniteQuandle::validate(&[[0, 1], [0, 1]]),
            Err(AxiomViolation::RightTranslation { b: 0 })
        );
        assert_eq!(
            FiniteQuandle::validate(&[[0, 2], [1, 1]]),
            Err(AxiomViolation::OutOfRange {
                a: 0,
                b: 1,
                value: 2
            })
        );
        let ragged: [&[usize]; 2] = [&[0, 1], &[1]];
        assert_eq!(
            FiniteQuandle::validate(&ragged),
            Err(AxiomViolation::NotSquare { row: 1, len: 1 })
        );
        // idempotent with bijective columns but not self-distributive
        let rows = [[0, 2, 1], [2, 1, 2], [1, 0, 2]];
        assert!(matches!(
            FiniteQuandle::validate(&rows),
            Err(AxiomViolation::RightTranslation { .. } | AxiomViolation::SelfDistributivity { .. })
        ));
    }

    #[test]
    fn group_quandles() {
        let c3 = GroupTable::cyclic(3);
        assert_eq!(FiniteQuandle::conjugation(&c3), FiniteQuandle::trivial(3));
        assert_eq!(FiniteQuandle::core(&c3), al(3, 2));
        let s3 = FiniteQuandle::conjugation(&GroupTable::symmetric(3));
        assert_eq!(s3.size(), 6);
        let mut sizes: Vec<usize> = s3.orbits().iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, [1, 2, 3]);
        assert!(
            FiniteQuandle::validate(&FiniteQuandle::core(&GroupTable::symmetric(3)).rows()).is_ok()
        );
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(al(4, 3).orbits(), [[0, 2], [1, 3]]);
        assert_eq!(al(5, 2).orbits().len(), 1);
        assert_eq!(FiniteQuandle::trivial(4).orbits(), [[0], [1], [2], [3]]);
        assert!(al(5, 2).is_connected());
        assert!(!al(4, 3).is_connected());
        assert!(!FiniteQuandle::trivial(2).is_connected());
        assert!(FiniteQuandle::trivial(1).is_connected());
    }

    #[test]
    fn linear_orbits_are_cosets() {
        for n in 1..=30u64 {
            for t in 0..n {
                let Ok(p) = LinearAlexanderParams::new(n, t) else {
                    continue;
                };
                let q = FiniteQuandle::alexander(&p);
                assert_eq!(FiniteQuandle::validate(&q.rows()).as_ref(), Ok(&q));
                let m = p.orbit_count() as usize;
                let expected: Vec<Vec<usize>> = (0..m)
                    .map(|r| (r..n as usize).step_by(m).collect())
                    .collect();
                assert_eq!(q.orbits(), expected, "n={n} t={t}");
                assert_eq!(q.is_connected(), p.is_connected());
            }
        }
    }
}
