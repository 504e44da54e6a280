//! Rewriting an arbitrary word into its canonical form.
//!
//! The procedure works in four phases:
//!
//! 1. braidings `e_a^k e_b^j -> e_b^j e_{a·e_b^j}^k` sort the letters into
//!    blocks by orbit, orbit `m-1` first and orbit `0` last;
//! 2. negative powers are made nonnegative by borrowing central powers
//!    `e_x^d` (`d` the order of `T`), which are parked at the front of the
//!    word as `e_r^{-d ξ}` with `r` the orbit representative;
//! 3. the linear relation `e_α e_β = e_{α-(1-T)γ} e_{β+(1-T)Tγ}` is swept left
//!    to right over the positive part, turning every color but the last
//!    into its orbit representative;
//! 4. the parked central powers move back into their blocks, and runs of
//!    equal letters are merged.
//!
//! Every step is recorded with the word it produces.

use alloc::vec::Vec;

use super::{canonical_word, word_eval, Letter, Word};
use crate::quandle::LinearAlexanderParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    /// `e_a^k e_b^j -> e_b^j e_{a·e_b^j}^k` on letters `at`, `at + 1`.
    Braiding { at: usize },
    /// Adjacent letters of equal color merged or split; zero powers dropped.
    FreeReduction,
    /// The letter at `at` gains `e^power`, compensated by `e_r^{-power}`
    /// (central, `r` the orbit representative) placed in front. When `at`
    /// equals the previous length, `e_0^power` is appended instead.
    CentralInsertion { at: usize, power: i64 },
    /// `e_α e_β -> e_{α-(1-T)γ} e_{β+(1-T)Tγ}` on letters `at`, `at + 1`.
    LinearRelation { at: usize, gamma: u64 },
    /// The central power at the front moves to position `to` of the rest of
    /// the word, next to its orbit block.
    CentralCancellation { to: usize },
}

impl Rule {
    pub fn name(&self) -> &'static str {
        match self {
            Rule::Braiding { .. } => "braiding",
            Rule::FreeReduction => "free-reduction",
            Rule::CentralInsertion { .. } => "central-insertion",
            Rule::LinearRelation { .. } => "linear-relation",
            Rule::CentralCancellation { .. } => "central-cancellation",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteStep {
    pub rule: Rule,
    /// The word after the step.
    pub word: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rewrite {
    /// The canonical word.
    pub word: Word,
    pub trace: Vec<RewriteStep>,
}

struct Rewriter<'a> {
    p: &'a LinearAlexanderParams,
    m: u64,
    d: i64,
    /// parked central powers
    prefix: Vec<Letter>,
    body: Vec<Letter>,
    trace: Vec<RewriteStep>,
}

fn merge_runs(letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        match out.last_mut() {
            Some(last) if last.color == l.color => {
                last.exp += l.exp;
                if last.exp == 0 {
                    out.pop();
                }
            }
            _ if l.exp == 0 => {}
            _ => out.push(l),
        }
    }
    out
}

impl Rewriter<'_> {
    fn orbit(&self, l: &Letter) -> u64 {
        l.color % self.m
    }

    fn current(&self) -> Word {
        Word::from_letters(self.prefix.iter().chain(&self.body).copied())
    }

    fn record(&mut self, rule: Rule) {
        let word = self.current();
        self.trace.push(RewriteStep { rule, word });
    }

    fn free_reduce(&mut self) {
        let merged = merge_runs(&self.body);
        if merged != self.body {
            self.body = merged;
            self.record(Rule::FreeReduction);
        }
    }

    fn sort_blocks(&mut self) {
        let mut swapped = true;
        while swapped {
            swapped = false;
            for i in 0..self.body.len().saturating_sub(1) {
                let (x, y) = (self.body[i], self.body[i + 1]);
                if self.orbit(&x) < self.orbit(&y) {
                    let moved = self.p.translate(x.color, y.color, y.exp);
                    self.body[i] = y;
                    self.body[i + 1] = Letter::new(moved, x.exp);
                    let at = self.prefix.len() + i;
                    self.record(Rule::Braiding { at });
                    swapped = true;
                }
            }
        }
        self.free_reduce();
    }

    fn positivize(&mut self) {
        let mut i = 0;
        while i < self.body.len() {
            let l = self.body[i];
            if l.exp >= 0 {
                i += 1;
                continue;
            }
            let power = ((-l.exp) as u64).div_ceil(self.d as u64) as i64 * self.d;
            let at = self.prefix.len() + i;
            self.prefix.insert(0, Letter::new(self.orbit(&l), -power));
            if l.exp + power == 0 {
                self.body.remove(i);
            } else {
                self.body[i].exp += power;
                i += 1;
            }
            self.record(Rule::CentralInsertion { at, power });
        }
        // the linear sweep needs the word to end in orbit 0
        if let Some(last) = self.body.last() {
            if self.orbit(last) != 0 {
                let at = self.prefix.len() + self.body.len();
                self.prefix.insert(0, Letter::new(0, -self.d));
                self.body.push(Letter::new(0, self.d));
                self.record(Rule::CentralInsertion { at, power: self.d });
            }
        }
    }

    fn sweep(&mut self) {
        if self.body.iter().any(|l| l.exp != 1) {
            self.body = self
                .body
                .iter()
                .flat_map(|l| core::iter::repeat_n(Letter::new(l.color, 1), l.exp as usize))
                .collect();
            self.record(Rule::FreeReduction);
        }
        for i in 0..self.body.len().saturating_sub(1) {
            let c = self.body[i].color;
            let r = c % self.m;
            if c == r {
                continue;
            }
            let delta = self.p.sub(c, r);
            let gamma = self
                .p
                .solve_one_minus_t(delta)
                .expect("colors in one orbit differ by an element of im(1 - T)");
            self.body[i].color = r;
            let next = self.body[i + 1].color;
            self.body[i + 1].color = self.p.add(next, self.p.apply_t(1, delta));
            let at = self.prefix.len() + i;
            self.record(Rule::LinearRelation { at, gamma });
        }
    }

    fn absorb(&mut self) {
        let has_trailing = !self.body.is_empty();
        while !self.prefix.is_empty() {
            let central = self.prefix.remove(0);
            let searchable = self.body.len() - usize::from(has_trailing);
            let to = self.body[..searchable]
                .iter()
                .position(|l| l.color <= central.color)
                .unwrap_or(searchable);
            self.body.insert(to, central);
            let to = self.prefix.len() + to;
            self.record(Rule::CentralCancellation { to });
        }
        self.free_reduce();
    }
}

/// Rewrites `w` into its canonical word, recording every step.
///
/// A word that is already canonical is returned with an empty trace.
pub fn rewrite_trace(p: &LinearAlexanderParams, w: &Word) -> Rewrite {
    let n = p.n();
    let reduced = Word::from_letters(w.letters().iter().map(|l| Letter::new(l.color % n, l.exp)));
    let target = canonical_word(p, &word_eval(p, &reduced)).expect("words evaluate into the image");
    if reduced == target {
        return Rewrite {
            word: reduced,
            trace: Vec::new(),
        };
    }
    let mut rw = Rewriter {
        p,
        m: p.orbit_count(),
        d: p.central_power_degree() as i64,
        prefix: Vec::new(),
        body: reduced.letters().to_vec(),
        trace: Vec::new(),
    };
    rw.sort_blocks();
    rw.positivize();
    rw.sweep();
    rw.absorb();
    let word = rw.current();
    debug_assert_eq!(word, target);
    Rewrite {
        word,
        trace: rw.trace,
    }
}

/// `x · e_b^j`, by iterating the quandle operation (or searching for its
/// inverse) rather than through the closed form.
fn translate_by_iteration(p: &LinearAlexanderParams, x: u64, b: u64, j: i64) -> u64 {
    let mut y = x;
    for _ in 0..j.unsigned_abs() {
        y = if j > 0 {
            p.op(y, b)
        } else {
            (0..p.n())
                .find(|&z| p.op(z, b) == y)
                .expect("right translations are bijective")
        };
    }
    y
}

/// Whether `step.word` follows from `before` by one application of
/// `step.rule`.
///
/// Central steps rely on `e_x^d` being central with `e_x^d = e_r^d` inside an
/// orbit, for `d` a multiple of the order of `T`; everything else is checked
/// letter by letter.
pub fn check_step(p: &LinearAlexanderParams, before: &Word, step: &RewriteStep) -> bool {
    let b = before.letters();
    let a = step.word.letters();
    let m = p.orbit_count();
    let d = p.central_power_degree() as i64;
    match step.rule {
        Rule::Braiding { at } => {
            if at + 1 >= b.len() || a.len() != b.len() {
                return false;
            }
            let (x, y) = (b[at], b[at + 1]);
            let moved = translate_by_iteration(p, x.color, y.color, y.exp);
            a[at] == y
                && a[at + 1] == Letter::new(moved, x.exp)
                && a[..at] == b[..at]
                && a[at + 2..] == b[at + 2..]
        }
        Rule::FreeReduction => merge_runs(a) == merge_runs(b),
        Rule::CentralInsertion { at, power } => {
            if power <= 0 || power % d != 0 || at > b.len() {
                return false;
            }
            let mut expected = Vec::with_capacity(b.len() + 2);
            if at == b.len() {
                expected.push(Letter::new(0, -power));
                expected.extend_from_slice(b);
                expected.push(Letter::new(0, power));
            } else {
                let x = b[at];
                expected.push(Letter::new(x.color % m, -power));
                expected.extend_from_slice(&b[..at]);
                if x.exp + power != 0 {
                    expected.push(Letter::new(x.color, x.exp + power));
                }
                expected.extend_from_slice(&b[at + 1..]);
            }
            a == expected
        }
        Rule::LinearRelation { at, gamma } => {
            if at + 1 >= b.len() || a.len() != b.len() {
                return false;
            }
            let (x, y) = (b[at], b[at + 1]);
            let shift = p.one_minus_t(gamma % p.n());
            x.exp == 1
                && y.exp == 1
                && a[at] == Letter::new(p.sub(x.color, shift), 1)
                && a[at + 1] == Letter::new(p.add(y.color, p.apply_t(1, shift)), 1)
                && a[..at] == b[..at]
                && a[at + 2..] == b[at + 2..]
        }
        Rule::CentralCancellation { to } => {
            let Some((&central, rest)) = b.split_first() else {
                return false;
            };
            if central.color >= m || central.exp % d != 0 || to > rest.len() {
                return false;
            }
            let mut expected = rest.to_vec();
            expected.insert(to, central);
            a == expected
        }
    }
}

/// Index of the first step of `trace` that is not a valid rule application,
/// starting from `start`.
pub fn check_trace(
    p: &LinearAlexanderParams,
    start: &Word,
    trace: &[RewriteStep],
) -> Result<(), usize> {
    let mut before = start.clone();
    for (i, step) in trace.iter().enumerate() {
        if !check_step(p, &before, step) {
            return Err(i);
        }
        before = step.word.clone();
    }
    Ok(())
}
