use alexq_core::homology::{boundary_matrices, h2_brute_force, h2_closed_form, h2_eisermann};
use alexq_core::{AbelianInvariants, FiniteQuandle, GroupTable, LinearAlexanderParams};
use num_bigint::BigInt;

fn corpus() -> Vec<(String, FiniteQuandle)> {
    let mut qs = vec![
        ("trivial(3)".to_string(), FiniteQuandle::trivial(3)),
        (
            "conj(S3)".to_string(),
            FiniteQuandle::conjugation(&GroupTable::symmetric(3)),
        ),
        (
            "core(C4)".to_string(),
            FiniteQuandle::core(&GroupTable::cyclic(4)),
        ),
        (
            "core(C5)".to_string(),
            FiniteQuandle::core(&GroupTable::cyclic(5)),
        ),
        (
            "core(S3)".to_string(),
            FiniteQuandle::core(&GroupTable::symmetric(3)),
        ),
    ];
    for n in 2..=7 {
        qs.push((format!("takasaki({n})"), FiniteQuandle::takasaki(n)));
    }
    qs
}

/// The quandle boundaries built directly from the formula, over all tuples
/// (degenerate ones included), then restricted.
fn reference_d2_d3(q: &FiniteQuandle) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let n = q.size();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|(x, y)| x != y)
        .collect();
    let pos = |x: usize, y: usize| pairs.iter().position(|&p| p == (x, y));
    let mut d2 = vec![vec![0i64; pairs.len()]; n];
    for (j, &(x, y)) in pairs.iter().enumerate() {
        d2[x][j] += 1;
        d2[q.op(x, y)][j] -= 1;
    }
    let triples: Vec<(usize, usize, usize)> = pairs
        .iter()
        .flat_map(|&(x, y)| (0..n).map(move |z| (x, y, z)))
        .filter(|&(_, y, z)| y != z)
        .collect();
    let mut d3 = vec![vec![0i64; triples.len()]; pairs.len()];
    for (j, &(x, y, z)) in triples.iter().enumerate() {
        let terms = [
            (x, z, 1),
            (q.op(x, y), z, -1),
            (x, y, -1),
            (q.op(x, z), q.op(y, z), 1),
        ];
        for (a, b, s) in terms {
            if let Some(i) = pos(a, b) {
                d3[i][j] += s;
            }
        }
    }
    (d2, d3)
}

fn rows_of(m: &alexq_core::IntMatrix) -> Vec<Vec<i64>> {
    m.to_rows()
        .into_iter()
        .map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect())
        .collect()
}

#[test]
fn boundaries_match_reference_and_compose_to_zero() {
    for (name, q) in corpus() {
        let b = boundary_matrices(&q);
        let (d2, d3) = reference_d2_d3(&q);
        assert_eq!(rows_of(&b.d2), d2, "{name}");
        assert_eq!(rows_of(&b.d3), d3, "{name}");
        assert!((&b.d2 * &b.d3).is_zero(), "{name}");
    }
}

#[test]
fn free_rank_counts_orbit_pairs() {
    for (name, q) in corpus() {
        let h = h2_brute_force(&q).unwrap();
        let k = q.orbits().len();
        assert_eq!(h.rank(), k * (k - 1), "{name}");
    }
}

#[test]
fn known_groups() {
    let trivial = h2_brute_force(&FiniteQuandle::trivial(4)).unwrap();
    assert_eq!(trivial, AbelianInvariants::free(12));
    for n in [3, 5, 7] {
        assert!(h2_brute_force(&FiniteQuandle::takasaki(n))
            .unwrap()
            .is_trivial());
    }
    let r4 = h2_brute_force(&FiniteQuandle::takasaki(4)).unwrap();
    let expected = AbelianInvariants::from_cyclic_orders(2, [BigInt::from(2), BigInt::from(2)]);
    assert_eq!(r4, expected);
}

#[test]
fn three_routes_agree_small() {
    for n in 2..=7u64 {
        for t in 1..n {
            let Ok(p) = LinearAlexanderParams::new(n, t) else {
                continue;
            };
            let closed = h2_closed_form(&p);
            assert_eq!(h2_eisermann(&p), closed, "({n},{t})");
            assert_eq!(
                h2_brute_force(&FiniteQuandle::alexander(&p)).unwrap(),
                closed,
                "({n},{t})"
            );
        }
    }
}
