//! Symmetric functions in the power-sum basis, over exact rationals.
//!
//! A [`PowerSum`] is a polynomial in `p_1, p_2, p_3, ...` with `BigRational`
//! coefficients; a monomial is keyed by the partition listing its `p_j`
//! factors with multiplicity, and `deg p_j = j`. Q-functions live in the
//! subalgebra generated by the odd power sums.
//!
//! Q-functions are built by the classical route: the one-row generating
//! series `sum_m q_m t^m = exp(2 sum_{k odd} p_k t^k / k)`, the two-row
//! expansion `Q_(a,b) = q_a q_b + 2 sum_i (-1)^i q_{a+i} q_{b-i}`, and a
//! Pfaffian for longer partitions. Character values are then extracted from
//! power-sum coefficients, which keeps the expansions independent of the
//! character recursions used for Schur functions.
//!
//! The one-row series, Q-function, Schur-function, and character caches are
//! global and mutex-protected; all public functions are safe to call from
//! multiple threads.

use crate::linalg;
use crate::partitions::{
    enumerate_odd_partitions, enumerate_partitions, enumerate_strict_partitions, normalize_signed,
    z_factor, Normalized, OddPartition, Partition, StrictPartition,
};
use num::traits::ToPrimitive;
use num::{BigInt, BigRational, One, Signed, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{LazyLock, Mutex};

/// Always "num/den", lowest terms, positive denominator.
pub fn rational_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses "num/den" or a bare integer.
pub fn rational_from_str(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| format!("bad numerator in {s:?}"))?;
    let d: BigInt = d.parse().map_err(|_| format!("bad denominator in {s:?}"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(BigRational::new(n, d))
}

/// Polynomial in the power sums with exact rational coefficients.
///
/// Terms are keyed by the partition of `p_j` indices; no zero coefficient is
/// ever stored. Term order (iteration, serialization) is lexicographic on the
/// part vectors, so `p_1^3` sorts before `p_3`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PowerSum {
    terms: BTreeMap<Partition, BigRational>,
}

impl PowerSum {
    pub fn zero() -> Self {
        PowerSum::default()
    }

    pub fn one() -> Self {
        PowerSum::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Partition::empty(), c);
        }
        PowerSum { terms }
    }

    /// The single power sum `p_j`.
    pub fn p(j: u32) -> Self {
        assert!(j >= 1, "power sum index must be positive");
        PowerSum::monomial(Partition::new(vec![j]), BigRational::one())
    }

    pub fn monomial(key: Partition, coeff: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(key, coeff);
        }
        PowerSum { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of the monomial `key` (zero if absent). The empty key
    /// extracts the constant term.
    pub fn coeff(&self, key: &Partition) -> BigRational {
        self.terms.get(key).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(&Partition::empty())
    }

    /// True when every part of every monomial key is odd.
    pub fn is_odd_only(&self) -> bool {
        self.terms
            .keys()
            .all(|k| k.parts().iter().all(|&p| p % 2 == 1))
    }

    /// Degree if homogeneous (`None` for zero or mixed degrees).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|k| k.size());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Terms grouped by total degree.
    pub fn homogeneous_components(&self) -> BTreeMap<u32, PowerSum> {
        let mut out: BTreeMap<u32, PowerSum> = BTreeMap::new();
        for (k, c) in &self.terms {
            out.entry(k.size())
                .or_default()
                .insert_term(k.clone(), c.clone());
        }
        out
    }

    fn insert_term(&mut self, key: Partition, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().clone() + coeff;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add(&self, other: &PowerSum) -> PowerSum {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &PowerSum) -> PowerSum {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert_term(k.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> PowerSum {
        self.scale(&-BigRational::one())
    }

    pub fn scale(&self, c: &BigRational) -> PowerSum {
        if c.is_zero() {
            return PowerSum::zero();
        }
        PowerSum {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &PowerSum) -> PowerSum {
        let mut out = PowerSum::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                out.insert_term(merge_monomials(ka, kb), ca * cb);
            }
        }
        out
    }

    /// JSON form: `[{"coeff":"num/den","monomial":[parts...]}, ...]` with
    /// monomial parts decreasing and terms in the documented monomial order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(k, c)| {
                    serde_json::json!({
                        "monomial": k.parts(),
                        "coeff": rational_string(c),
                    })
                })
                .collect(),
        )
    }
}

fn merge_monomials(a: &Partition, b: &Partition) -> Partition {
    let mut parts = a.parts().to_vec();
    parts.extend_from_slice(b.parts());
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Partition::new(parts)
}

impl fmt::Display for PowerSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            let mono = if k.is_empty() {
                String::new()
            } else {
                let mut s = String::new();
                for (j, m) in part_multiplicities(k) {
                    if !s.is_empty() {
                        s.push(' ');
                    }
                    if m == 1 {
                        s.push_str(&format!("p{j}"));
                    } else {
                        s.push_str(&format!("p{j}^{m}"));
                    }
                }
                s
            };
            let abs = c.abs();
            let coeff_str = if abs.is_integer() {
                abs.numer().to_string()
            } else {
                format!("{}/{}", abs.numer(), abs.denom())
            };
            let body = if mono.is_empty() {
                coeff_str
            } else if abs.is_one() {
                mono
            } else {
                format!("{coeff_str} {mono}")
            };
            if first {
                if c.is_negative() {
                    write!(f, "-{body}")?;
                } else {
                    write!(f, "{body}")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - {body}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

fn part_multiplicities(k: &Partition) -> Vec<(u32, u32)> {
    let mut out: Vec<(u32, u32)> = Vec::new();
    for &p in k.parts() {
        match out.last_mut() {
            Some((j, m)) if *j == p => *m += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

static Q_ROW_CACHE: LazyLock<Mutex<Vec<PowerSum>>> = LazyLock::new(|| Mutex::new(vec![PowerSum::one()]));

/// One-row Q-function `q_m`, the coefficient of `t^m` in
/// `exp(2 sum_{k odd} p_k t^k / k)`; satisfies `m q_m = 2 sum_{k odd} p_k q_{m-k}`.
pub fn q_one_row(m: u32) -> PowerSum {
    let mut cache = Q_ROW_CACHE.lock().unwrap();
    while cache.len() <= m as usize {
        let d = cache.len() as u32;
        let mut acc = PowerSum::zero();
        let mut k = 1;
        while k <= d {
            let term = cache[(d - k) as usize].mul(&PowerSum::p(k));
            acc = acc.add(&term.scale(&BigRational::from_integer(2.into())));
            k += 2;
        }
        cache.push(acc.scale(&BigRational::new(1.into(), d.into())));
    }
    cache[m as usize].clone()
}

/// Two-row Q-function `Q_(a,b) = q_a q_b + 2 sum_{i=1..b} (-1)^i q_{a+i} q_{b-i}`,
/// requiring `a > b >= 0`. `Q_(a,0) = q_a`.
pub fn q_two_row(a: u32, b: u32) -> PowerSum {
    assert!(a > b, "q_two_row needs a > b >= 0, got ({a},{b})");
    let mut acc = q_one_row(a).mul(&q_one_row(b));
    for i in 1..=b {
        let term = q_one_row(a + i).mul(&q_one_row(b - i));
        let c = if i % 2 == 1 { -2 } else { 2 };
        acc = acc.add(&term.scale(&BigRational::from_integer(c.into())));
    }
    acc
}

/// Pfaffian of an antisymmetric matrix of even dimension, by expansion along
/// the first remaining row. Panics unless the matrix is square, of even
/// dimension, and exactly antisymmetric.
pub fn pfaffian(m: &[Vec<PowerSum>]) -> PowerSum {
    let n = m.len();
    assert!(n % 2 == 0, "pfaffian needs even dimension, got {n}");
    for row in m {
        assert_eq!(row.len(), n, "pfaffian needs a square matrix");
    }
    for i in 0..n {
        for j in 0..n {
            assert_eq!(
                m[i][j],
                m[j][i].neg(),
                "matrix is not antisymmetric at ({i},{j})"
            );
        }
    }
    let alive: Vec<usize> = (0..n).collect();
    pfaffian_rec(m, &alive)
}

fn pfaffian_rec(m: &[Vec<PowerSum>], alive: &[usize]) -> PowerSum {
    if alive.is_empty() {
        return PowerSum::one();
    }
    let i = alive[0];
    let mut acc = PowerSum::zero();
    for (pos, &j) in alive[1..].iter().enumerate() {
        let entry = &m[i][j];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = alive[1..]
            .iter()
            .copied()
            .filter(|&x| x != j)
            .collect();
        let minor = pfaffian_rec(m, &rest);
        let term = entry.mul(&minor);
        acc = if pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

static Q_CACHE: LazyLock<Mutex<HashMap<StrictPartition, PowerSum>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Schur's Q-function of a strict partition, as a polynomial in the odd
/// power sums. Computed as the Pfaffian of the two-row matrix after padding
/// to even length with a zero part; `Q(empty) = 1`.
pub fn q_function(lambda: &StrictPartition) -> PowerSum {
    if let Some(hit) = Q_CACHE.lock().unwrap().get(lambda) {
        return hit.clone();
    }
    let result = match lambda.len() {
        0 => PowerSum::one(),
        1 => q_one_row(lambda.parts()[0]),
        2 => q_two_row(lambda.parts()[0], lambda.parts()[1]),
        _ => {
            let mut padded: Vec<u32> = lambda.parts().to_vec();
            if padded.len() % 2 == 1 {
                padded.push(0);
            }
            let n = padded.len();
            let mut m = vec![vec![PowerSum::zero(); n]; n];
            for i in 0..n {
                for j in i + 1..n {
                    let e = q_two_row(padded[i], padded[j]);
                    m[j][i] = e.neg();
                    m[i][j] = e;
                }
            }
            pfaffian(&m)
        }
    };
    debug_assert!(result.is_odd_only());
    Q_CACHE
        .lock()
        .unwrap()
        .insert(lambda.clone(), result.clone());
    result
}

/// `P = 2^{-len} Q`.
pub fn p_function(lambda: &StrictPartition) -> PowerSum {
    let denom = BigInt::from(2).pow(lambda.len() as u32);
    q_function(lambda).scale(&BigRational::new(1.into(), denom))
}

static CHAR_CACHE: LazyLock<Mutex<HashMap<(Partition, Partition), i64>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Irreducible character of the symmetric group `chi_mu(pi)`, by the rim-hook
/// recursion on beta-sets. Panics if `|mu| != |pi|`.
pub fn ordinary_character(mu: &Partition, pi: &Partition) -> i64 {
    assert_eq!(
        mu.size(),
        pi.size(),
        "character arguments must have equal size: |{mu}| != |{pi}|"
    );
    if pi.is_empty() {
        return 1;
    }
    let key = (mu.clone(), pi.clone());
    if let Some(&hit) = CHAR_CACHE.lock().unwrap().get(&key) {
        return hit;
    }
    let k = pi.parts()[0] as i64;
    let rest = Partition::new(pi.parts()[1..].to_vec());
    let rows = mu.len();
    let beta = mu.beta_set(rows);
    let mut value = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let height = beta.iter().filter(|&&x| b - k < x && x < b).count();
        let mut nb = beta.clone();
        nb[idx] = b - k;
        nb.sort_unstable_by(|a, c| c.cmp(a));
        let parts: Vec<u32> = nb
            .iter()
            .enumerate()
            .filter_map(|(i, &x)| {
                let part = x - (rows as i64 - i as i64 - 1);
                (part > 0).then_some(part as u32)
            })
            .collect();
        let sub = ordinary_character(&Partition::new(parts), &rest);
        value += if height % 2 == 0 { sub } else { -sub };
    }
    CHAR_CACHE.lock().unwrap().insert(key, value);
    value
}

static SCHUR_CACHE: LazyLock<Mutex<HashMap<Partition, PowerSum>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Schur function `s_mu = sum_pi z_pi^{-1} chi_mu(pi) p_pi`.
pub fn schur(mu: &Partition) -> PowerSum {
    if let Some(hit) = SCHUR_CACHE.lock().unwrap().get(mu) {
        return hit.clone();
    }
    let mut acc = PowerSum::zero();
    for pi in enumerate_partitions(mu.size()) {
        let chi = ordinary_character(mu, &pi);
        if chi == 0 {
            continue;
        }
        let c = BigRational::new(chi.into(), z_factor(pi.parts()));
        acc = acc.add(&PowerSum::monomial(pi, c));
    }
    SCHUR_CACHE.lock().unwrap().insert(mu.clone(), acc.clone());
    acc
}

/// Spin character value `zeta_lambda(pi)`, extracted from the power-sum
/// expansion of `Q_lambda`:
/// `zeta = 2^{-floor((len(lambda)+len(pi)+1)/2)} z_pi [p_pi] Q_lambda`.
/// Panics if sizes differ or the result is not an integer.
pub fn spin_character(lambda: &StrictPartition, pi: &OddPartition) -> i64 {
    assert_eq!(
        lambda.size(),
        pi.size(),
        "spin character arguments must have equal size: |{lambda}| != |{pi}|"
    );
    let coeff = q_function(lambda).coeff(&pi.to_partition());
    let e = (lambda.len() as u32 + pi.len() as u32).div_ceil(2);
    let z = BigRational::from_integer(z_factor(pi.parts()));
    let value = coeff * z / BigRational::from_integer(BigInt::from(2).pow(e));
    assert!(
        value.is_integer(),
        "spin character zeta_{lambda}({pi}) = {value} is not an integer"
    );
    value
        .to_integer()
        .to_i64()
        .expect("spin character exceeds i64")
}

/// Expansion over the P-basis, indexed by strict partitions.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PBasisExpansion {
    coeffs: BTreeMap<StrictPartition, BigRational>,
}

impl PBasisExpansion {
    pub fn coeff(&self, lambda: &StrictPartition) -> BigRational {
        self.coeffs
            .get(lambda)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&StrictPartition, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn reconstruct(&self) -> PowerSum {
        let mut acc = PowerSum::zero();
        for (l, c) in &self.coeffs {
            acc = acc.add(&p_function(l).scale(c));
        }
        acc
    }
}

/// Expansion over the Schur basis, indexed by partitions.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SchurExpansion {
    coeffs: BTreeMap<Partition, BigRational>,
}

impl SchurExpansion {
    pub fn coeff(&self, mu: &Partition) -> BigRational {
        self.coeffs
            .get(mu)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn reconstruct(&self) -> PowerSum {
        let mut acc = PowerSum::zero();
        for (m, c) in &self.coeffs {
            acc = acc.add(&schur(m).scale(c));
        }
        acc
    }
}

/// Expands an odd-only element over the P-basis, degree by degree, by an
/// exact solve against the transition matrix `[p_pi] P_lambda` (rows: odd
/// partitions, columns: strict partitions, both in enumeration order).
/// Panics if a monomial has an even part.
pub fn to_p_basis(f: &PowerSum) -> PBasisExpansion {
    assert!(
        f.is_odd_only(),
        "P-basis expansion requires odd power sums only"
    );
    let mut out = PBasisExpansion::default();
    for (n, component) in f.homogeneous_components() {
        let rows = enumerate_odd_partitions(n, None);
        let cols = enumerate_strict_partitions(n);
        let matrix: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|pi| {
                let key = pi.to_partition();
                cols.iter().map(|l| p_function(l).coeff(&key)).collect()
            })
            .collect();
        let rhs: Vec<BigRational> = rows
            .iter()
            .map(|pi| component.coeff(&pi.to_partition()))
            .collect();
        let solution = linalg::solve_square(&matrix, &rhs)
            .expect("P-basis transition matrix is invertible");
        for (l, c) in cols.into_iter().zip(solution) {
            if !c.is_zero() {
                out.coeffs.insert(l, c);
            }
        }
    }
    out
}

/// Expands over the Schur basis: `[s_nu] f = sum_pi chi_nu(pi) [p_pi] f`.
pub fn to_schur_basis(f: &PowerSum) -> SchurExpansion {
    let mut out = SchurExpansion::default();
    for (n, component) in f.homogeneous_components() {
        for nu in enumerate_partitions(n) {
            let mut c = BigRational::zero();
            for (pi, v) in component.terms() {
                let chi = ordinary_character(&nu, pi);
                if chi != 0 {
                    c += v * BigRational::from_integer(chi.into());
                }
            }
            if !c.is_zero() {
                out.coeffs.insert(nu, c);
            }
        }
    }
    out
}

/// Element of the two-fold tensor square of the power-sum algebra; the image
/// of the variable-splitting substitution `p_j -> p_j (x) 1 + 1 (x) p_j`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TensorElement {
    terms: BTreeMap<(Partition, Partition), BigRational>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Partition, Partition), &BigRational)> {
        self.terms.iter()
    }

    fn insert_term(&mut self, key: (Partition, Partition), coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().clone() + coeff;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    /// Pure tensor `f (x) g`.
    pub fn tensor(f: &PowerSum, g: &PowerSum) -> TensorElement {
        let mut out = TensorElement::zero();
        for (ka, ca) in f.terms() {
            for (kb, cb) in g.terms() {
                out.insert_term((ka.clone(), kb.clone()), ca * cb);
            }
        }
        out
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert_term(k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> TensorElement {
        if c.is_zero() {
            return TensorElement::zero();
        }
        TensorElement {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for ((la, ra), ca) in &self.terms {
            for ((lb, rb), cb) in &other.terms {
                out.insert_term(
                    (merge_monomials(la, lb), merge_monomials(ra, rb)),
                    ca * cb,
                );
            }
        }
        out
    }

    /// Terms of left degree `a` and right degree `b`.
    pub fn bidegree_component(&self, a: u32, b: u32) -> TensorElement {
        TensorElement {
            terms: self
                .terms
                .iter()
                .filter(|((l, r), _)| l.size() == a && r.size() == b)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// All bidegrees present, as a map to components.
    pub fn by_bidegree(&self) -> BTreeMap<(u32, u32), TensorElement> {
        let mut out: BTreeMap<(u32, u32), TensorElement> = BTreeMap::new();
        for ((l, r), c) in &self.terms {
            out.entry((l.size(), r.size()))
                .or_default()
                .insert_term((l.clone(), r.clone()), c.clone());
        }
        out
    }
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut v = BigInt::one();
    for i in 0..k {
        v = v * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    v
}

/// Variable-splitting coproduct `p_j -> p_j (x) 1 + 1 (x) p_j`, extended as an
/// algebra homomorphism.
pub fn coproduct(f: &PowerSum) -> TensorElement {
    let mut out = TensorElement::zero();
    for (key, c) in f.terms() {
        // expand prod_j (p_j(x)1 + 1(x)p_j)^{m_j}
        let mut split: Vec<(Vec<u32>, Vec<u32>, BigInt)> =
            vec![(Vec::new(), Vec::new(), BigInt::one())];
        for (j, m) in part_multiplicities(key) {
            let mut next = Vec::with_capacity(split.len() * (m as usize + 1));
            for (left, right, mult) in &split {
                for s in 0..=m {
                    let mut l = left.clone();
                    let mut r = right.clone();
                    l.extend(std::iter::repeat_n(j, s as usize));
                    r.extend(std::iter::repeat_n(j, (m - s) as usize));
                    next.push((l, r, mult * binomial(m, s)));
                }
            }
            split = next;
        }
        for (l, r, mult) in split {
            out.insert_term(
                (Partition::from_unsorted(l), Partition::from_unsorted(r)),
                c * BigRational::from_integer(mult),
            );
        }
    }
    out
}

/// The signed Q-combination
/// `1/2 sum_{i=1}^{(j-1)/2} (-1)^i Q_(lambda;j-i,i) + 1/2 Q_(lambda;j)
///  + sum_i Q_(lambda + j e_i)`,
/// with every index sequence normalized (vanishing terms dropped, derangement
/// signs applied). Equals `p_j * Q_lambda` for odd `j`.
pub fn pj_times_q(j: u32, lambda: &StrictPartition) -> PowerSum {
    assert!(j % 2 == 1, "pj_times_q needs odd j, got {j}");
    let half = BigRational::new(1.into(), 2.into());
    let mut acc = PowerSum::zero();
    for i in 1..=(j - 1) / 2 {
        let mut seq = lambda.parts().to_vec();
        seq.push(j - i);
        seq.push(i);
        if let Normalized::Ordered { partition, sign } = normalize_signed(&seq) {
            let s = if i % 2 == 1 { -sign } else { sign };
            let c = half.clone() * BigRational::from_integer(s.into());
            acc = acc.add(&q_function(&partition).scale(&c));
        }
    }
    let mut seq = lambda.parts().to_vec();
    seq.push(j);
    if let Normalized::Ordered { partition, sign } = normalize_signed(&seq) {
        let c = half.clone() * BigRational::from_integer(sign.into());
        acc = acc.add(&q_function(&partition).scale(&c));
    }
    for i in 0..lambda.len() {
        let mut seq = lambda.parts().to_vec();
        seq[i] += j;
        if let Normalized::Ordered { partition, sign } = normalize_signed(&seq) {
            acc = acc.add(&q_function(&partition).scale(&BigRational::from_integer(sign.into())));
        }
    }
    acc
}
