use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// What disqualifies a table from being a group multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupDefect {
    NotSquare,
    OutOfRange { a: usize, b: usize },
    NoIdentity,
    NoInverse { a: usize },
    NotAssociative { a: usize, b: usize, c: usize },
}

impl fmt::Display for GroupDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDefect::NotSquare => f.write_str("table is not square"),
            GroupDefect::OutOfRange { a, b } => write!(f, "product {a}*{b} out of range"),
            GroupDefect::NoIdentity => f.write_str("no identity element"),
            GroupDefect::NoInverse { a } => write!(f, "{a} has no inverse"),
            GroupDefect::NotAssociative { a, b, c } => {
                write!(f, "({a}*{b})*{c} != {a}*({b}*{c})")
            }
        }
    }
}

/// A validated finite group, elements `0..n`, `table[a][b] = a * b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    n: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupTable {
    pub fn new<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let fail = |d| Err(Error::NotAGroup(d));
        if n == 0 || rows.iter().any(|r| r.as_ref().len() != n) {
            return fail(GroupDefect::NotSquare);
        }
        let mut table = Vec::with_capacity(n * n);
        for (a, r) in rows.iter().enumerate() {
            for (b, &x) in r.as_ref().iter().enumerate() {
                if x >= n {
                    return fail(GroupDefect::OutOfRange { a, b });
                }
                table.push(x);
            }
        }
        let mul = |a: usize, b: usize| table[a * n + b];
        let Some(identity) = (0..n).find(|&e| (0..n).all(|x| mul(e, x) == x && mul(x, e) == x))
        else {
            return fail(GroupDefect::NoIdentity);
        };
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            match (0..n).find(|&b| mul(a, b) == identity && mul(b, a) == identity) {
                Some(b) => inverse.push(b),
                None => return fail(GroupDefect::NoInverse { a }),
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = mul(a, b);
                for c in 0..n {
                    if mul(ab, c) != mul(a, mul(b, c)) {
                        return fail(GroupDefect::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(GroupTable {
            n,
            table,
            identity,
            inverse,
        })
    }

    /// `Z/n` written additively.
    pub fn cyclic(n: usize) -> Self {
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        Self::new(&rows).expect("cyclic group")
    }

    /// The symmetric group on `k` letters; elements are the permutations in
    /// lexicographic order, `a * b` applies `a` first.
    pub fn symmetric(k: usize) -> Self {
        let perms = permutations(k);
        let index = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let rows: Vec<Vec<usize>> = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| {
                        let ab: Vec<usize> = a.iter().map(|&i| b[i]).collect();
                        index(&ab)
                    })
                    .collect()
            })
            .collect();
        Self::new(&rows).expect("symmetric group")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..k {
            let mut q: Vec<usize> = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defects() {
        let bad = |rows: &[[usize; 2]]| match GroupTable::new(rows) {
            Err(Error::NotAGroup(d)) => d,
            other => panic!("{other:?}"),
        };
        assert_eq!(
            bad(&[[0, 2], [1, 0]]),
            GroupDefect::OutOfRange { a: 0, b: 1 }
        );
        assert_eq!(bad(&[[1, 1], [1, 1]]), GroupDefect::NoIdentity);
        assert_eq!(bad(&[[0, 1], [1, 1]]), GroupDefect::NoInverse { a: 1 });
        let rows: [[usize; 3]; 3] = [[0, 1, 2], [1, 0, 0], [2, 0, 0]];
        assert!(matches!(
            GroupTable::new(&rows),
            Err(Error::NotAGroup(
                GroupDefect::NoInverse { .. } | GroupDefect::NotAssociative { .. }
            ))
        ));
    }

    #[test]
    fn symmetric_group() {
        let s3 = GroupTable::symmetric(3);
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.identity(), 0);
        let nonabelian = (0..6).any(|a| (0..6).any(|b| s3.mul(a, b) != s3.mul(b, a)));
        assert!(nonabelian);
        assert_eq!(GroupTable::symmetric(4).order(), 24);
    }
}
