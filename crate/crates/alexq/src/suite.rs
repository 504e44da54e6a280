//! The verification sweep run by `alexq verify`: every check below, for each
//! `Al(Z/n, t)` with `2 <= n <= n_max` and `t` a unit.

use alexq_core::cocycle::{
    kernel_lattice_basis, lambda_form, lattice_basis, phi, phi0, phi_image_basis,
};
use alexq_core::homology::{h2_brute_force, h2_closed_form, h2_eisermann};
use alexq_core::linalg::{gcd, mult_order};
use alexq_core::structure::{
    act, canonical_word, check_trace, pack_mul, rewrite_trace, sd_mul, word_eval, Word,
};
use alexq_core::{FiniteQuandle, LinearAlexanderParams, SemidirectZ};
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::sample::{case_rng, random_word};

#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    pub n_max: u64,
    pub seed: u64,
    /// Random words (or word pairs) per case for the sampled checks.
    pub words: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    /// Individual instances tested.
    pub instances: u64,
    pub failures: u64,
    /// The first failing instance, if any.
    pub witness: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseOutcome {
    pub n: u64,
    pub t: u64,
    pub checks: Vec<CheckOutcome>,
}

impl CaseOutcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub cases: u64,
    pub checks: u64,
    pub passed: u64,
    pub failed: u64,
    pub instances: u64,
}

pub fn summarize(cases: &[CaseOutcome]) -> Summary {
    let checks = cases.iter().flat_map(|c| &c.checks);
    let mut s = Summary {
        cases: cases.len() as u64,
        checks: 0,
        passed: 0,
        failed: 0,
        instances: 0,
    };
    for c in checks {
        s.checks += 1;
        s.instances += c.instances;
        if c.passed() {
            s.passed += 1;
        } else {
            s.failed += 1;
        }
    }
    s
}

/// All `(n, t)` with `2 <= n <= n_max` and `gcd(t, n) = 1`, sorted.
pub fn cases(n_max: u64) -> Vec<(u64, u64)> {
    (2..=n_max)
        .flat_map(|n| (1..n).filter(move |&t| gcd(t, n) == 1).map(move |t| (n, t)))
        .collect()
}

/// Runs every case in parallel; the result is in `cases` order.
pub fn run_sweep(opts: SuiteOptions) -> Vec<CaseOutcome> {
    cases(opts.n_max)
        .into_par_iter()
        .map(|(n, t)| run_case(n, t, opts))
        .collect()
}

struct Tally {
    name: &'static str,
    instances: u64,
    failures: u64,
    witness: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            instances: 0,
            failures: 0,
            witness: None,
        }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }

    fn done(self) -> CheckOutcome {
        CheckOutcome {
            name: self.name.to_string(),
            instances: self.instances,
            failures: self.failures,
            witness: self.witness,
        }
    }
}

fn els(p: &LinearAlexanderParams, lo: i64, hi: i64) -> Vec<SemidirectZ> {
    (lo..=hi)
        .flat_map(|k| (0..p.n()).map(move |a| SemidirectZ::new(k, a)))
        .collect()
}

pub fn run_case(n: u64, t: u64, opts: SuiteOptions) -> CaseOutcome {
    let p = LinearAlexanderParams::new(n, t).expect("cases only lists units");
    let q = FiniteQuandle::alexander(&p);
    let checks = vec![
        check_axioms(&q),
        check_orbits(&p, &q),
        check_h2(&p, &q),
        check_cocycle_identity(&p),
        check_normalization(&p),
        check_t_invariance(&p),
        check_degree_reduction(&p),
        check_braided_symmetry(&p),
        check_phi0_braiding(&p),
        check_lambda(&p),
        check_linear_relation(&p),
        check_kernel_generation(&p),
        check_central_degree(&p),
        check_words(&p, &q, opts),
    ]
    .into_iter()
    .flatten()
    .collect();
    CaseOutcome { n, t, checks }
}

fn check_axioms(q: &FiniteQuandle) -> Vec<CheckOutcome> {
    let mut c = Tally::new("quandle-axioms");
    let v = FiniteQuandle::validate(&q.rows());
    c.check(v.is_ok(), || format!("{:?}", v.err()));
    vec![c.done()]
}

fn check_orbits(p: &LinearAlexanderParams, q: &FiniteQuandle) -> Vec<CheckOutcome> {
    let mut c = Tally::new("orbits");
    let m = p.orbit_count();
    let cosets: Vec<Vec<usize>> = (0..m)
        .map(|r| (r..p.n()).step_by(m as usize).map(|x| x as usize).collect())
        .collect();
    c.check(q.orbits() == cosets, || format!("m = {m}"));
    vec![c.done()]
}

fn check_h2(p: &LinearAlexanderParams, q: &FiniteQuandle) -> Vec<CheckOutcome> {
    let mut c = Tally::new("h2-three-routes");
    let closed = h2_closed_form(p);
    let eis = h2_eisermann(p);
    let brute = h2_brute_force(q).expect("quandle complex");
    c.check(closed == eis && eis == brute, || {
        format!("formula {closed}, eisermann {eis}, chain {brute}")
    });
    vec![c.done()]
}

fn check_cocycle_identity(p: &LinearAlexanderParams) -> Vec<CheckOutcome> {
    let mut c = Tally::new("cocycle-identity");
    let e = els(p, -2, 2);
    for &a in &e {
        for &b in &e {
            let ab = sd_mul(p, a, b);
            let phi_ab = phi(p, a, b);
            for &g in &e {
                let bg = sd_mul(p, b, g);
                let s = &(&(&phi(p, b, g) - &phi(p, ab, g)) + &phi(p, a, bg)) - &phi_ab;
                c.check(s.is_zero(), || format!("{a:?} {b:?} {g:?}"));
            }
        }
    }
    vec![c.done()]
}

fn check_normalization(p: &LinearAlexanderParams) -> Vec<CheckOutcome> {
    let mut c = Tally::new("normalization");
    for a in els(p, -3, 3) {
        for k in -3..=3 {
            let z = SemidirectZ::new(k, 0);
            c.check(phi(p, a, z).is_zero(), || format!("phi({a:?}, {z:?})"));
            c.check(phi(p, z, a).is_zero(), || format!("phi({z:?}, {a:?})"));
        }
    }
    vec![c.done()]
}

fn check_t_invariance(p: &LinearAlexanderParams) -> Vec<CheckOutcome> {
    let mut c = Tally::new("t-invariance");
    let e = els(p, -3, 3);
    for &a in &e {
        for &b in &e {
            let ta = SemidirectZ::new(a.degree, p.apply_t(1, a.weight));
            let tb = SemidirectZ::new(b.degree, p.apply_t(1, b.weight));
            c.check(phi(p, a, b) == phi(p, ta, tb), || format!("{a:?} {b:?}"));
        }
    }
    vec![c.done()]
}

fn check_degree_reduction(p: &LinearAlexanderParams) -> Vec<CheckOutcome> {
    let mut c = Tally::new("degree-one-reduction");
    let e = els(p, -3, 3);
    for &a in &e {
        for &b in &e {
            let v = phi(p, a, b);
            let left = phi(p, SemidirectZ::new(1, a.weight), b);
            let right = phi(p, a, SemidirectZ::new(1, p.apply_t(1 - b.degree, b.weight)));
            c.check(v == left && v == right, || format!("{a:?} {b:?}"));
        }
    }
    vec![c.done()]
}

fn check_braided_symmetry(p: &LinearAlexanderParams) -> Vec<CheckOutcome> {
    let mut c = Tally::new("braided-symmetry");
    let e = els(p, -3, 3);
    for &a in &e {
        for &b in &e {
            let l = SemidirectZ::new(b.degree, p.apply_t(1 - a.degree, b.weight));
            let r = SemidirectZ::new(
                a.degree,
                p.add(p.apply_t(b.degree, a.weight), p.one_minus_t(b.weight)),
            );
            c.check(phi(p, a, b) == phi(p, l, r), || format!("{a:?} {b:?}"));
        }
    }
    vec![c.done()]
}

fn check_phi0_braiding(p: &LinearAlexanderParams) -> Vec<CheckOutcome> {
    let mut c = Tally::new("phi0-braiding");
    for a in 0..p.n() {
        for b in 0..p.n() {
            let moved = phi0(p, p.apply_t(1, b), p.add(a, p.one_minus_t(b)));
            c.check(phi0(p, a, b) == moved, || format!("a={a} b={b}"));
        }
    }
    vec![c.done()]
}

fn check_lambda(p: &LinearAlexanderParams) -> Vec<CheckOutcome> {
    let mut vanish = Tally::new("lambda-vanishes");
    let mut via_phi0 = Tally::new("lambda-via-phi0");
    let mut additive = Tally::new("lambda-bi-additive");
    let mut last = Tally::new("phi0-one-minus-t");
    let n = p.n();
    for u in 0..n {
        for v in 0..n {
            let l = lambda_form(p, u, v);
            vanish.check(l.is_zero(), || format!("u={u} v={v}"));
            via_phi0.check(l == phi0(p, p.one_minus_t(v), u), || format!("u={u} v={v}"));
            let lhs = phi0(p, u, p.one_minus_t(v));
            let rhs = -&phi0(p, p.one_minus_t(u), p.apply_t(1, v));
            last.check(lhs == rhs, || format!("a={u} b={v}"));
            for w in 0..n {
                let first =
                    lambda_form(p, p.add(u, v), w) == &lambda_form(p, u, w) + &lambda_form(p, v, w);
                let second =
                    lambda_form(p, w, p.add(u, v)) == &lambda_form(p, w, u) + &lambda_form(p, w, v);
                additive.check(first && second, || format!("u={u} v={v} w={w}"));
            }
        }
    }
    vec![vanish.done(), via_phi0.done(), additive.done(), last.done()]
}

fn check_linear_relation(p: &LinearAlexanderParams) -> Vec<CheckOutcome> {
    let mut c = Tally::new("linear-relation");
    let n = p.n();
    for x in 0..n {
        for y in 0..n {
            let lhs = word_eval(p, &Word::generator(x).concat(&Word::generator(y)));
            for g in 0..n {
                let rhs = Word::generator(p.sub(x, p.one_minus_t(g)))
                    .concat(&Word::generator(p.add(y, p.one_minus_t(p.apply_t(1, g)))));
                c.check(lhs == word_eval(p, &rhs), || {
                    format!("x={x} y={y} gamma={g}")
                });
            }
        }
    }
    vec![c.done()]
}

fn check_kernel_generation(p: &LinearAlexanderParams) -> Vec<CheckOutcome> {
    let mut c = Tally::new("kernel-generation");
    let m = p.orbit_count() as usize;
    let image: Vec<Vec<i64>> = phi_image_basis(p).into_iter().map(|v| v.0).collect();
    let kernel: Vec<Vec<i64>> = kernel_lattice_basis(p).into_iter().map(|v| v.0).collect();
    c.check(
        lattice_basis(m, &image) == lattice_basis(m, &kernel),
        || format!("image {image:?}, kernel {kernel:?}"),
    );
    vec![c.done()]
}

fn check_central_degree(p: &LinearAlexanderParams) -> Vec<CheckOutcome> {
    let mut c = Tally::new("central-power-degree");
    let d = p.central_power_degree();
    c.check(Ok(d) == mult_order(p.t(), p.n()), || format!("d = {d}"));
    let n = p.n();
    for x in 0..n {
        let power = Word::power(x, d as i64);
        for y in 0..n {
            c.check(act(p, y, &power) == y, || format!("e_{x}^{d} moves {y}"));
            let g = Word::generator(y);
            c.check(
                word_eval(p, &power.concat(&g)) == word_eval(p, &g.concat(&power)),
                || format!("e_{x}^{d} and e_{y} do not commute"),
            );
        }
        // no smaller positive power acts trivially
        for k in 1..d {
            let moves = (0..n).any(|y| act(p, y, &Word::power(x, k as i64)) != y);
            c.check(moves, || format!("e_{x}^{k} acts trivially"));
        }
    }
    vec![c.done()]
}

fn check_words(
    p: &LinearAlexanderParams,
    q: &FiniteQuandle,
    opts: SuiteOptions,
) -> Vec<CheckOutcome> {
    let mut hom = Tally::new("homomorphism");
    let mut weight = Tally::new("weight-law");
    let mut action = Tally::new("action-formula");
    let mut normal = Tally::new("normal-form");
    let mut trace = Tally::new("rewrite-trace");
    let mut rng = case_rng(opts.seed, p.n(), p.t());
    for _ in 0..opts.words {
        let w1 = random_word(&mut rng, p.n(), 12, 2);
        let w2 = random_word(&mut rng, p.n(), 12, 2);
        let (e1, e2) = (word_eval(p, &w1), word_eval(p, &w2));
        let joined = word_eval(p, &w1.concat(&w2));
        hom.check(joined == pack_mul(p, &e1, &e2), || format!("{w1} | {w2}"));
        let folded = p.add(p.apply_t(w2.degree(), e1.weight), e2.weight);
        weight.check(joined.weight == folded, || format!("{w1} | {w2}"));

        let x = rng.random_range(0..p.n());
        action.check(act(p, x, &w1) == table_action(q, x, &w1), || {
            format!("{x} . {w1}")
        });

        let canon = canonical_word(p, &e1);
        normal.check(canon.as_ref().is_ok_and(|c| word_eval(p, c) == e1), || {
            format!("{w1}")
        });
        let r = rewrite_trace(p, &w1);
        trace.check(
            canon.as_ref().is_ok_and(|c| *c == r.word) && check_trace(p, &w1, &r.trace).is_ok(),
            || format!("{w1}"),
        );
    }
    vec![
        hom.done(),
        weight.done(),
        action.done(),
        normal.done(),
        trace.done(),
    ]
}

/// `x` acted on by the word one unit letter at a time through the table.
pub fn table_action(q: &FiniteQuandle, x: u64, w: &Word) -> u64 {
    let mut x = x as usize;
    for l in w.letters() {
        let b = l.color as usize;
        for _ in 0..l.exp.unsigned_abs() {
            x = if l.exp > 0 {
                q.op(x, b)
            } else {
                (0..q.size())
                    .find(|&y| q.op(y, b) == x)
                    .expect("right translations are bijective")
            };
        }
    }
    x as u64
}
