//! Acceptance suite. Every check is an exact identity over the rationals;
//! there are no tolerances anywhere. One PASS line is printed per criterion
//! (visible with `cargo test --test acceptance -- --nocapture`).

use num::{BigInt, BigRational};
use schurq::bars::{decompose, from_core_quotient, list_bars, remove_bar, bar_sign, BarQuotient};
use schurq::partitions::{
    enumerate_odd_partitions, enumerate_partitions, enumerate_strict_partitions, normalize_signed,
    z_factor, Normalized, Partition, StrictPartition,
};
use schurq::reduced::{basis_check, reduced_q, relation_row};
use schurq::symfunc::{pj_times_q, q_function, spin_character, PowerSum};
use std::collections::{BTreeSet, HashMap};

fn sp(parts: &[u32]) -> StrictPartition {
    StrictPartition::new(parts.to_vec())
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Criterion 1: the multiplication recursion `p_j Q_lambda` evaluates to the
/// product `p_j * Q_lambda` for every strict |lambda| <= 10 and odd j <= 9.
#[test]
fn criterion_1_multiplication_recursion() {
    let mut checked = 0usize;
    for n in 0..=10u32 {
        for lambda in enumerate_strict_partitions(n) {
            for j in [1u32, 3, 5, 7, 9] {
                let lhs = pj_times_q(j, &lambda);
                let rhs = PowerSum::p(j).mul(&q_function(&lambda));
                assert_eq!(lhs, rhs, "lambda={lambda} j={j}");
                checked += 1;
            }
        }
    }
    println!("acceptance 1 (multiplication recursion, {checked} identities): PASS");
}

/// Criterion 2: the spin-character expansion of Q_lambda reconstructs
/// Q_lambda term by term, with integral character values; the n=3 table is
/// [[2,1],[1,-1]] over classes [(1,1,1),(3)].
#[test]
fn criterion_2_character_expansion() {
    let mut checked = 0usize;
    for n in 0..=10u32 {
        for lambda in enumerate_strict_partitions(n) {
            let mut rebuilt = PowerSum::zero();
            for pi in enumerate_odd_partitions(n, None) {
                // panics if the value is not an integer
                let zeta = spin_character(&lambda, &pi);
                if zeta == 0 {
                    continue;
                }
                let e = (lambda.len() as u32 + pi.len() as u32).div_ceil(2);
                let c = BigRational::new(
                    BigInt::from(zeta) * BigInt::from(2).pow(e),
                    z_factor(pi.parts()),
                );
                rebuilt = rebuilt.add(&PowerSum::monomial(pi.to_partition(), c));
            }
            assert_eq!(rebuilt, q_function(&lambda), "lambda={lambda}");
            checked += 1;
        }
    }

    // frozen n=3 table, classes in increasing order: (1,1,1), (3)
    let rows = enumerate_strict_partitions(3);
    let mut classes = enumerate_odd_partitions(3, None);
    classes.reverse();
    let table: Vec<Vec<i64>> = rows
        .iter()
        .map(|l| classes.iter().map(|pi| spin_character(l, pi)).collect())
        .collect();
    assert_eq!(table, vec![vec![2, 1], vec![1, -1]]);

    println!("acceptance 2 (character expansion, {checked} partitions + n=3 table): PASS");
}

/// Criterion 3: every relation row verifies exactly for r=3 up to |lambda|=12
/// and r=5 up to |lambda|=10; the smallest relation is reproduced verbatim.
#[test]
fn criterion_3_relation_rows() {
    let mut checked = 0usize;
    for (r, n_max) in [(3u32, 12u32), (5, 10)] {
        for n in 0..=n_max {
            for lambda in enumerate_strict_partitions(n) {
                let row = relation_row(&lambda, r);
                assert!(row.verify(), "row for {lambda}, r={r}");
                checked += 1;
            }
        }
    }

    // Q^(3)_(3) = Q^(3)_(2,1) = 4/3 p_1^3, and the row of (3) is {(2,1): 1}
    let expected = PowerSum::monomial(Partition::new(vec![1, 1, 1]), rat(4, 3));
    assert_eq!(reduced_q(&sp(&[3]), 3), expected);
    assert_eq!(reduced_q(&sp(&[2, 1]), 3), expected);
    let row = relation_row(&sp(&[3]), 3);
    assert_eq!(row.terms.len(), 1);
    assert_eq!(row.terms.get(&sp(&[2, 1])), Some(&rat(1, 1)));

    println!("acceptance 3 (reduced relation rows, {checked} rows): PASS");
}

/// Criterion 4: the reduced basis has the right size and full rank for all
/// n <= 12, r in {3,5}; the counts at (3,3) and (6,3) are 1 and 2.
#[test]
fn criterion_4_reduced_basis() {
    let mut checked = 0usize;
    for r in [3u32, 5] {
        for n in 0..=12u32 {
            let report = basis_check(n, r);
            assert!(
                report.pass,
                "basis check n={n} r={r}: {} elements, expected {}, rank {}",
                report.basis.len(),
                report.expected_dimension,
                report.rank
            );
            checked += 1;
        }
    }
    assert_eq!(basis_check(3, 3).expected_dimension, 1);
    assert_eq!(basis_check(6, 3).expected_dimension, 2);
    println!("acceptance 4 (reduced basis dimension and rank, {checked} degrees): PASS");
}

/// Criterion 5a: every maximal bar-removal sequence produces the same core
/// and the same sign, exhaustively for |lambda| <= 12, r in {3,5}.
#[test]
fn criterion_5a_order_independence() {
    fn all_outcomes(
        l: &StrictPartition,
        r: u32,
        sign: i32,
        out: &mut BTreeSet<(Vec<u32>, i32)>,
    ) {
        let bars = list_bars(l, r);
        if bars.is_empty() {
            out.insert((l.parts().to_vec(), sign));
            return;
        }
        for bar in bars {
            let s = if bar.leglength % 2 == 1 { -sign } else { sign };
            all_outcomes(&remove_bar(l, &bar), r, s, out);
        }
    }
    let mut checked = 0usize;
    for n in 0..=12u32 {
        for lambda in enumerate_strict_partitions(n) {
            for r in [3u32, 5] {
                let mut outcomes = BTreeSet::new();
                all_outcomes(&lambda, r, 1, &mut outcomes);
                assert_eq!(outcomes.len(), 1, "lambda={lambda} r={r}");
                let (core, sign) = outcomes.into_iter().next().unwrap();
                let d = decompose(&lambda, r);
                assert_eq!(core, d.core.parts().to_vec());
                assert_eq!(sign, d.sign);
                checked += 1;
            }
        }
    }
    println!("acceptance 5a (core/sign order independence, {checked} cases): PASS");
}

/// Criterion 5b: the (core, quotient) bijection round-trips and respects the
/// weight identity for |lambda| <= 16, r in {3,5,7}, and the reconstruction
/// map is injective over all valid inputs of total size <= 16.
#[test]
fn criterion_5b_bijection_and_weight() {
    let mut checked = 0usize;
    for n in 0..=16u32 {
        for lambda in enumerate_strict_partitions(n) {
            for r in [3u32, 5, 7] {
                let d = decompose(&lambda, r);
                assert_eq!(
                    lambda.size(),
                    d.core.size() + r * d.quotient.weight(),
                    "weight identity for {lambda}, r={r}"
                );
                assert_eq!(
                    from_core_quotient(&d.core, &d.quotient, r),
                    lambda,
                    "roundtrip for {lambda}, r={r}"
                );
                checked += 1;
            }
        }
    }

    // injectivity and completeness of the parametrization
    fn partition_tuples(w: u32, t: usize) -> Vec<Vec<Partition>> {
        if t == 0 {
            return if w == 0 { vec![Vec::new()] } else { Vec::new() };
        }
        let mut out = Vec::new();
        for first in 0..=w {
            for p in enumerate_partitions(first) {
                for mut rest in partition_tuples(w - first, t - 1) {
                    let mut tuple = vec![p.clone()];
                    tuple.append(&mut rest);
                    out.push(tuple);
                }
            }
        }
        out
    }
    let total_max = 16u32;
    for r in [3u32, 5, 7] {
        let t = ((r - 1) / 2) as usize;
        let mut seen: HashMap<StrictPartition, (StrictPartition, BarQuotient)> = HashMap::new();
        let mut per_size = vec![0usize; total_max as usize + 1];
        for s in 0..=total_max {
            for core in enumerate_strict_partitions(s) {
                if !list_bars(&core, r).is_empty() {
                    continue;
                }
                for w in 0..=(total_max - s) / r {
                    for z in 0..=w {
                        for zero in enumerate_strict_partitions(z) {
                            for paired in partition_tuples(w - z, t) {
                                let quotient = BarQuotient { zero: zero.clone(), paired };
                                let lambda = from_core_quotient(&core, &quotient, r);
                                per_size[lambda.size() as usize] += 1;
                                let prev = seen
                                    .insert(lambda.clone(), (core.clone(), quotient.clone()));
                                assert!(
                                    prev.is_none(),
                                    "two inputs rebuild {lambda} for r={r}"
                                );
                                let d = decompose(&lambda, r);
                                assert_eq!(d.core, core);
                                assert_eq!(d.quotient, quotient);
                            }
                        }
                    }
                }
            }
        }
        for n in 0..=total_max {
            assert_eq!(
                per_size[n as usize],
                enumerate_strict_partitions(n).len(),
                "parametrization misses or duplicates strict partitions of {n} for r={r}"
            );
        }
    }
    println!("acceptance 5b (bijection roundtrip, weight identity, injectivity, {checked} partitions): PASS");
}

/// Criterion 5c: for r=3, the 3j-bars of lambda are equinumerous with the
/// j-bars of lambda^0 plus the j-hooks of lambda^1 (|lambda| <= 12,
/// j in {1,3,5}).
#[test]
fn criterion_5c_bar_correspondence() {
    let mut checked = 0usize;
    for n in 0..=12u32 {
        for lambda in enumerate_strict_partitions(n) {
            let d = decompose(&lambda, 3);
            for j in [1u32, 3, 5] {
                let lhs = list_bars(&lambda, 3 * j).len();
                let rhs =
                    list_bars(&d.quotient.zero, j).len() + d.quotient.paired[0].count_hooks(j);
                assert_eq!(lhs, rhs, "lambda={lambda} j={j}");
                checked += 1;
            }
        }
    }
    println!("acceptance 5c (3j-bar / j-bar correspondence, {checked} counts): PASS");
}

/// Criterion 5d: bar signs of the elementary modifications at j=1 match the
/// derangement signs: delta(sort(lambda+3e_i), lambda) = sgn,
/// delta(sort(lambda;3), lambda) = sgn, delta(sort(lambda;2,1), lambda) = -sgn.
#[test]
fn criterion_5d_sign_case_formula() {
    let mut checked = 0usize;
    for n in 0..=8u32 {
        for lambda in enumerate_strict_partitions(n) {
            for i in 0..lambda.len() {
                let mut s = lambda.parts().to_vec();
                s[i] += 3;
                if let Normalized::Ordered { partition, sign } = normalize_signed(&s) {
                    assert_eq!(bar_sign(&partition, &lambda, 3), sign, "lambda={lambda} i={i}");
                    checked += 1;
                }
            }
            let mut s = lambda.parts().to_vec();
            s.push(3);
            if let Normalized::Ordered { partition, sign } = normalize_signed(&s) {
                assert_eq!(bar_sign(&partition, &lambda, 3), sign, "lambda={lambda} append 3");
                checked += 1;
            }
            let mut s = lambda.parts().to_vec();
            s.push(2);
            s.push(1);
            if let Normalized::Ordered { partition, sign } = normalize_signed(&s) {
                assert_eq!(
                    bar_sign(&partition, &lambda, 3),
                    -sign,
                    "lambda={lambda} append (2,1)"
                );
                checked += 1;
            }
        }
    }
    println!("acceptance 5d (sign case formula at j=1, {checked} cases): PASS");
}
