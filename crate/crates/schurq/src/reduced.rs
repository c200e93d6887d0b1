//! r-reduced Q-functions and the linear relations among them.
//!
//! The r-reduction sets `p_r = p_{3r} = p_{5r} = ... = 0`. Reduced Q-functions
//! indexed by strict partitions whose quotient component `lambda^0` is empty
//! form a basis of the reduced ring ([`basis_check`]); every other reduced
//! Q-function expands over that basis with coefficients built from bar signs
//! and the structure constants
//! `P_{l_1} ... P_{l_t} = sum_nu f^nu P_nu` and
//! `P_l s_m = sum_nu h^nu_{l m} s_nu`
//! ([`relation_row`]). Every emitted row is verified by exact polynomial
//! equality before it is returned.

use crate::bars::{decompose, from_core_quotient, BarQuotient};
use crate::linalg;
use crate::partitions::{
    enumerate_odd_partitions, enumerate_partitions, enumerate_strict_partitions, Partition,
    StrictPartition,
};
use crate::symfunc::{
    p_function, pj_times_q, q_function, rational_string, schur, to_p_basis, to_schur_basis,
    PowerSum,
};
use num::traits::ToPrimitive;
use num::{BigInt, BigRational, One, Signed, Zero};
use std::collections::BTreeMap;

fn assert_reduction_r(r: u32) {
    assert!(r % 2 == 1 && r >= 3, "reduction requires odd r >= 3, got {r}");
}

/// Sets `p_j = 0` for every `j` divisible by `r`: drops each monomial
/// containing a part divisible by `r`. Input must lie in the odd subalgebra.
pub fn reduce(f: &PowerSum, r: u32) -> PowerSum {
    assert_reduction_r(r);
    assert!(f.is_odd_only(), "reduce expects an odd power-sum element");
    let mut out = PowerSum::zero();
    for (k, c) in f.terms() {
        if k.parts().iter().all(|&p| p % r != 0) {
            out = out.add(&PowerSum::monomial(k.clone(), c.clone()));
        }
    }
    out
}

/// The r-reduced Q-function `reduce(Q_lambda, r)`.
pub fn reduced_q(lambda: &StrictPartition, r: u32) -> PowerSum {
    reduce(&q_function(lambda), r)
}

/// Coefficient of `P_nu` in `P_{factors[0]} ... P_{factors[t-1]}`.
///
/// Zero when the sizes do not add up; the empty factor list is the constant 1.
/// Panics if the computed coefficient is not a nonnegative integer.
pub fn f_coeff(nu: &StrictPartition, factors: &[StrictPartition]) -> u64 {
    let total: u32 = factors.iter().map(|f| f.size()).sum();
    if total != nu.size() {
        return 0;
    }
    let mut prod = PowerSum::one();
    for l in factors {
        prod = prod.mul(&p_function(l));
    }
    let c = to_p_basis(&prod).coeff(nu);
    assert!(
        c.is_integer() && !c.is_negative(),
        "f coefficient at {nu} is {} rather than a nonnegative integer",
        rational_string(&c)
    );
    c.to_integer().to_u64().expect("f coefficient exceeds u64")
}

/// Coefficient of `s_nu` in `P_lambda s_mu`.
///
/// Zero when the sizes do not add up. Panics if the computed coefficient is
/// not a nonnegative integer.
pub fn h_coeff(nu: &Partition, lambda: &StrictPartition, mu: &Partition) -> u64 {
    if lambda.size() + mu.size() != nu.size() {
        return 0;
    }
    let prod = p_function(lambda).mul(&schur(mu));
    let c = to_schur_basis(&prod).coeff(nu);
    assert!(
        c.is_integer() && !c.is_negative(),
        "h coefficient at {nu} is {} rather than a nonnegative integer",
        rational_string(&c)
    );
    c.to_integer().to_u64().expect("h coefficient exceeds u64")
}

/// Expansion of one r-reduced Q-function over the reduced basis: every key
/// `mu` is strict with `|mu| = |lambda|`, `mu^c = lambda^c`, `mu^0` empty, and
/// `Q^(r)_lambda = sum terms[mu] Q^(r)_mu` holds exactly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RelationRow {
    pub lambda: StrictPartition,
    pub r: u32,
    pub core: StrictPartition,
    pub terms: BTreeMap<StrictPartition, BigRational>,
}

impl RelationRow {
    /// Exact check of `Q^(r)_lambda = sum terms[mu] Q^(r)_mu`.
    pub fn verify(&self) -> bool {
        let mut rhs = PowerSum::zero();
        for (mu, c) in &self.terms {
            rhs = rhs.add(&reduced_q(mu, self.r).scale(c));
        }
        rhs == reduced_q(&self.lambda, self.r)
    }

    /// Basis partitions in row order (enumeration order: lexicographically
    /// decreasing part vectors).
    pub fn ordered_terms(&self) -> impl Iterator<Item = (&StrictPartition, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "lambda": self.lambda.to_string(),
            "r": self.r,
            "core": self.core.to_string(),
            "terms": self
                .ordered_terms()
                .map(|(mu, c)| serde_json::json!({
                    "mu": mu.to_string(),
                    "coeff": rational_string(c),
                }))
                .collect::<Vec<_>>(),
        })
    }
}

/// All t-tuples of partitions with total size `w`, in a fixed order.
fn partition_tuples(w: u32, t: usize) -> Vec<Vec<Partition>> {
    if t == 0 {
        return if w == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=w {
        for p in enumerate_partitions(first) {
            for mut rest in partition_tuples(w - first, t - 1) {
                let mut tuple = Vec::with_capacity(t);
                tuple.push(p.clone());
                tuple.append(&mut rest);
                out.push(tuple);
            }
        }
    }
    out
}

/// All tuples of strict partitions with the given sizes.
fn strict_tuples(sizes: &[u32]) -> Vec<Vec<StrictPartition>> {
    let mut out = vec![Vec::new()];
    for &s in sizes {
        let options = enumerate_strict_partitions(s);
        let mut next = Vec::with_capacity(out.len() * options.len());
        for tuple in &out {
            for o in &options {
                let mut t = tuple.clone();
                t.push(o.clone());
                next.push(t);
            }
        }
        out = next;
    }
    out
}

/// Expands `Q^(r)_lambda` over the reduced basis:
///
/// `Q^(r)_lambda = 2^[(len(lambda)+len(lambda^0))/2] (-1)^{|lambda^0|}
///  delta(lambda) sum_{mu,nu_1..nu_t} 2^{-[len(mu)/2]} delta(mu)
///  2^{sum_i len(nu_i) - len(lambda^0)}
///  f^{lambda^0}_{nu_1..nu_t} h^{mu^1}_{nu_1 lambda^1} ... h^{mu^t}_{nu_t lambda^t}
///  Q^(r)_mu`,
///
/// where `mu` runs over strict partitions with `|mu| = |lambda|`,
/// `mu^c = lambda^c`, `mu^0` empty (built through the core/quotient
/// bijection), and the `nu_i` over strict partitions of size
/// `|mu^i| - |lambda^i|`. The factor `2^{sum len(nu_i) - len(lambda^0)}`
/// restores the Q-normalization of the split factors; it is 1 whenever a
/// single `nu_i` is nonempty, in particular always at t=1. A row with
/// `lambda^0` empty is the unit vector.
pub fn relation_row(lambda: &StrictPartition, r: u32) -> RelationRow {
    assert_reduction_r(r);
    let d = decompose(lambda, r);
    let t = ((r - 1) / 2) as usize;
    let mut terms = BTreeMap::new();
    if d.quotient.zero.is_empty() {
        terms.insert(lambda.clone(), BigRational::one());
        return RelationRow {
            lambda: lambda.clone(),
            r,
            core: d.core,
            terms,
        };
    }
    let l0 = &d.quotient.zero;
    let pre_exp = (lambda.len() as u32 + l0.len() as u32) / 2;
    let mut pre = BigRational::from_integer(BigInt::from(2).pow(pre_exp));
    if l0.size() % 2 == 1 {
        pre = -pre;
    }
    if d.sign < 0 {
        pre = -pre;
    }
    let w = d.quotient.weight();
    for mu_tuple in partition_tuples(w, t) {
        let nu_sizes: Vec<i64> = (0..t)
            .map(|i| mu_tuple[i].size() as i64 - d.quotient.paired[i].size() as i64)
            .collect();
        if nu_sizes.iter().any(|&s| s < 0) {
            continue;
        }
        let nu_sizes: Vec<u32> = nu_sizes.into_iter().map(|s| s as u32).collect();
        if nu_sizes.iter().sum::<u32>() != l0.size() {
            continue;
        }
        let mut weight_sum = BigInt::zero();
        for nu_tuple in strict_tuples(&nu_sizes) {
            let f = f_coeff(l0, &nu_tuple);
            if f == 0 {
                continue;
            }
            let mut prod = BigInt::from(f);
            for i in 0..t {
                if prod.is_zero() {
                    break;
                }
                let h = h_coeff(&mu_tuple[i], &nu_tuple[i], &d.quotient.paired[i]);
                prod *= BigInt::from(h);
            }
            // Q-normalization of the nu factors: each contributes 2^{len(nu_i)},
            // offset below by 2^{-len(lambda^0)} so that the single-factor case
            // (nu_1 = lambda^0, forced at t=1) is weighted by exactly f*h.
            let extra: u32 = nu_tuple.iter().map(|v| v.len() as u32).sum();
            weight_sum += prod * BigInt::from(2).pow(extra);
        }
        if weight_sum.is_zero() {
            continue;
        }
        let mu_quotient = BarQuotient {
            zero: StrictPartition::empty(),
            paired: mu_tuple,
        };
        let mu = from_core_quotient(&d.core, &mu_quotient, r);
        let dmu = decompose(&mu, r);
        let denom = BigInt::from(2).pow(mu.len() as u32 / 2 + l0.len() as u32);
        let mut c = pre.clone() * BigRational::new(weight_sum, denom);
        if dmu.sign < 0 {
            c = -c;
        }
        terms.insert(mu, c);
    }
    RelationRow {
        lambda: lambda.clone(),
        r,
        core: d.core,
        terms,
    }
}

/// Rows for one bar core: the shared basis (strict partitions of `n` with
/// this core and empty `lambda^0`) and one verified row per partition with
/// this core.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoreBlock {
    pub core: StrictPartition,
    pub basis: Vec<StrictPartition>,
    pub rows: Vec<RelationRow>,
}

/// The full relation table for degree `n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RelationTable {
    pub n: u32,
    pub r: u32,
    pub blocks: Vec<CoreBlock>,
}

/// One verified row per strict partition of `n`, grouped by bar core.
/// Panics on the first row that fails exact verification.
pub fn relation_matrix(n: u32, r: u32) -> RelationTable {
    assert_reduction_r(r);
    let mut by_core: BTreeMap<StrictPartition, CoreBlock> = BTreeMap::new();
    for lambda in enumerate_strict_partitions(n) {
        let row = relation_row(&lambda, r);
        assert!(
            row.verify(),
            "relation row for {lambda} (r={r}) failed exact verification"
        );
        by_core
            .entry(row.core.clone())
            .or_insert_with(|| CoreBlock {
                core: row.core.clone(),
                basis: Vec::new(),
                rows: Vec::new(),
            })
            .rows
            .push(row);
    }
    for block in by_core.values_mut() {
        // basis order follows the enumeration order of the rows
        block.basis = block
            .rows
            .iter()
            .map(|row| row.lambda.clone())
            .filter(|l| is_basis_member(l, r))
            .collect();
    }
    RelationTable {
        n,
        r,
        blocks: by_core.into_values().collect(),
    }
}

fn is_basis_member(lambda: &StrictPartition, r: u32) -> bool {
    decompose(lambda, r).quotient.zero.is_empty()
}

impl RelationTable {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "r": self.r,
            "blocks": self
                .blocks
                .iter()
                .map(|b| serde_json::json!({
                    "core": b.core.to_string(),
                    "basis": b.basis.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                    "rows": b.rows.iter().map(|row| row.to_json()).collect::<Vec<_>>(),
                }))
                .collect::<Vec<_>>(),
        })
    }

    /// CSV: one block per core, blank-line separated; basis partitions are the
    /// columns, rows are the strict partitions of `n` with that core.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (bi, block) in self.blocks.iter().enumerate() {
            if bi > 0 {
                out.push('\n');
            }
            out.push_str(&format!("core,\"{}\"\n", block.core));
            out.push_str("lambda");
            for mu in &block.basis {
                out.push_str(&format!(",\"{mu}\""));
            }
            out.push('\n');
            for row in &block.rows {
                out.push_str(&format!("\"{}\"", row.lambda));
                for mu in &block.basis {
                    let c = row
                        .terms
                        .get(mu)
                        .cloned()
                        .unwrap_or_else(BigRational::zero);
                    out.push_str(&format!(",{}", rational_string(&c)));
                }
                out.push('\n');
            }
        }
        out
    }
}

/// Outcome of the basis test in one degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasisReport {
    pub n: u32,
    pub r: u32,
    /// Strict partitions of `n` with empty `lambda^0`, in enumeration order.
    pub basis: Vec<StrictPartition>,
    /// Number of degree-n monomials in the reduced ring: partitions of `n`
    /// into odd parts not divisible by `r`.
    pub expected_dimension: usize,
    pub rank: usize,
    pub pass: bool,
}

/// Checks that the reduced Q-functions with empty `lambda^0` are as many as
/// the degree-n monomials of the reduced ring and linearly independent.
pub fn basis_check(n: u32, r: u32) -> BasisReport {
    assert_reduction_r(r);
    let basis: Vec<StrictPartition> = enumerate_strict_partitions(n)
        .into_iter()
        .filter(|l| is_basis_member(l, r))
        .collect();
    let monomials = enumerate_odd_partitions(n, Some(r));
    let matrix: Vec<Vec<BigRational>> = basis
        .iter()
        .map(|l| {
            let f = reduced_q(l, r);
            monomials
                .iter()
                .map(|pi| f.coeff(&pi.to_partition()))
                .collect()
        })
        .collect();
    let rank = linalg::rank(matrix);
    let expected_dimension = monomials.len();
    let pass = basis.len() == expected_dimension && rank == expected_dimension;
    BasisReport {
        n,
        r,
        basis,
        expected_dimension,
        rank,
        pass,
    }
}

/// Summary of a [`verify_suite`] run.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct VerifyReport {
    /// `p_j Q_lambda` recursion identities checked.
    pub multiplication_identities: usize,
    /// Relation rows checked by exact expansion equality.
    pub relation_rows: usize,
    /// Basis dimension/rank checks.
    pub basis_checks: usize,
    pub failures: Vec<String>,
}

impl VerifyReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs the identity suite: the `p_j Q_lambda` recursion for all strict
/// partitions of size at most `n_max` and odd `j <= 9`, plus relation rows
/// and basis checks up to degree `n_max` for each listed `r`.
pub fn verify_suite(n_max: u32, rs: &[u32]) -> VerifyReport {
    let mut report = VerifyReport::default();
    for n in 0..=n_max {
        for lambda in enumerate_strict_partitions(n) {
            for j in [1u32, 3, 5, 7, 9] {
                let lhs = pj_times_q(j, &lambda);
                let rhs = PowerSum::p(j).mul(&q_function(&lambda));
                report.multiplication_identities += 1;
                if lhs != rhs {
                    report
                        .failures
                        .push(format!("p_{j} Q_{lambda} recursion failed"));
                }
            }
        }
    }
    for &r in rs {
        for n in 0..=n_max {
            for lambda in enumerate_strict_partitions(n) {
                let row = relation_row(&lambda, r);
                report.relation_rows += 1;
                if !row.verify() {
                    report
                        .failures
                        .push(format!("relation row for {lambda} (r={r}) failed"));
                }
            }
            let b = basis_check(n, r);
            report.basis_checks += 1;
            if !b.pass {
                report.failures.push(format!(
                    "basis check failed for n={n}, r={r}: {} elements, expected {}, rank {}",
                    b.basis.len(),
                    b.expected_dimension,
                    b.rank
                ));
            }
        }
    }
    report
}
