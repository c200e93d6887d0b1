//! Bar combinatorics of shifted diagrams.
//!
//! For a strict partition `lambda` and odd `r`, an r-bar is either
//! - a within-row bar: the last `r` squares of row `i`, allowed when
//!   `lambda_i >= r` and `lambda_i - r` is not a part (it may be 0), or
//! - a two-row bar: rows `i < k` complete, with `lambda_i + lambda_k = r`.
//!
//! Removing bars until none remain yields the r-bar core; the removed material
//! is encoded by the r-bar quotient `(lambda^0, lambda^1, ..., lambda^t)`,
//! `t = (r-1)/2`, and the pair (core, quotient) determines the strict
//! partition uniquely. The sign of a removal is `(-1)^leglength`; its product
//! along a removal sequence depends only on the endpoints.
//!
//! Quotient encoding: parts `r*x` contribute `x` to `lambda^0` (a strict
//! partition). For `1 <= i <= t`, parts `r*x + i` occupy position `x >= 0` of
//! a two-sided 01-sequence and parts `r*x + (r-i)` vacate position `-1-x`;
//! all other negative positions are occupied, all other nonnegative ones
//! vacant. `lambda^i` is the partition read from that sequence relative to
//! its own charge. When the two residue classes are equinumerous this is the
//! classical Frobenius notation `(X^i | X^{r-i})`.

use crate::partitions::{Partition, StrictPartition};
use std::collections::BTreeSet;
use std::fmt;

/// Shape of a bar inside a shifted diagram.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BarKind {
    /// Final segment of a single row.
    WithinRow,
    /// Two complete rows whose parts sum to the bar length.
    TwoRow,
}

/// An r-bar of a strict partition, with 1-based row indices.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Bar {
    pub kind: BarKind,
    pub row_i: usize,
    pub row_k: usize,
    pub length: u32,
    pub leglength: u32,
}

/// The r-bar quotient `(lambda^0, lambda^1, ..., lambda^t)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BarQuotient {
    /// `lambda^0`: one part `x` per part `r*x` of the original partition.
    pub zero: StrictPartition,
    /// `lambda^i` for `i = 1..=t`, from the residue pair `{i, r-i}`.
    pub paired: Vec<Partition>,
}

impl BarQuotient {
    /// Total number of cells across all components; one removed r-bar each.
    pub fn weight(&self) -> u32 {
        self.zero.size() + self.paired.iter().map(|p| p.size()).sum::<u32>()
    }

    pub fn is_empty(&self) -> bool {
        self.zero.is_empty() && self.paired.iter().all(|p| p.is_empty())
    }
}

impl fmt::Display for BarQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}", self.zero)?;
        for p in &self.paired {
            write!(f, ",{}", p)?;
        }
        write!(f, ")")
    }
}

/// Full bar decomposition of a strict partition for a fixed odd `r >= 3`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BarDecomposition {
    pub core: StrictPartition,
    pub quotient: BarQuotient,
    /// Product of `(-1)^leglength` over any removal sequence down to the core.
    pub sign: i32,
    pub bars_removed: u32,
    pub r: u32,
}

fn assert_odd_r(r: u32) {
    assert!(r % 2 == 1 && r >= 1, "bar length must be odd and positive, got {r}");
}

fn assert_quotient_r(r: u32) {
    assert!(r % 2 == 1 && r >= 3, "bar core/quotient/sign require odd r >= 3, got {r}");
}

/// All r-bars of `lambda`, for odd `r >= 1`.
///
/// Within-row bars come with `leglength = #{a : l_i > l_a > l_i - r}`,
/// two-row bars with `leglength = l_k + #{a : l_i > l_a > l_k}`.
pub fn list_bars(lambda: &StrictPartition, r: u32) -> Vec<Bar> {
    assert_odd_r(r);
    let parts = lambda.parts();
    let mut bars = Vec::new();
    for i in 0..parts.len() {
        for k in i + 1..parts.len() {
            if parts[i] + parts[k] == r {
                let leg = parts[k]
                    + parts
                        .iter()
                        .filter(|&&a| parts[i] > a && a > parts[k])
                        .count() as u32;
                bars.push(Bar {
                    kind: BarKind::TwoRow,
                    row_i: i + 1,
                    row_k: k + 1,
                    length: r,
                    leglength: leg,
                });
            }
        }
    }
    for i in 0..parts.len() {
        if parts[i] >= r && !parts.contains(&(parts[i] - r)) {
            let leg = parts
                .iter()
                .filter(|&&a| parts[i] > a && a > parts[i] - r)
                .count() as u32;
            bars.push(Bar {
                kind: BarKind::WithinRow,
                row_i: i + 1,
                row_k: i + 1,
                length: r,
                leglength: leg,
            });
        }
    }
    bars
}

/// Removes `bar` from `lambda` and re-sorts. Panics if the bar is not an
/// actual bar of `lambda`.
pub fn remove_bar(lambda: &StrictPartition, bar: &Bar) -> StrictPartition {
    assert!(
        list_bars(lambda, bar.length).contains(bar),
        "bar {bar:?} is not a bar of {lambda}"
    );
    let parts = lambda.parts();
    let mut rest: Vec<u32> = Vec::with_capacity(parts.len());
    match bar.kind {
        BarKind::TwoRow => {
            for (idx, &p) in parts.iter().enumerate() {
                if idx + 1 != bar.row_i && idx + 1 != bar.row_k {
                    rest.push(p);
                }
            }
        }
        BarKind::WithinRow => {
            for (idx, &p) in parts.iter().enumerate() {
                if idx + 1 == bar.row_i {
                    if p > bar.length {
                        rest.push(p - bar.length);
                    }
                } else {
                    rest.push(p);
                }
            }
        }
    }
    rest.sort_unstable_by(|a, b| b.cmp(a));
    StrictPartition::new(rest)
}

/// Canonical bar choice: largest `row_i`, then largest `row_k`.
fn canonical_bar(bars: &[Bar]) -> Option<Bar> {
    bars.iter().copied().max_by_key(|b| (b.row_i, b.row_k))
}

/// Full decomposition: core and sign by canonical removal, quotient from the
/// residue classes of the parts.
pub fn decompose(lambda: &StrictPartition, r: u32) -> BarDecomposition {
    assert_quotient_r(r);
    let mut cur = lambda.clone();
    let mut sign = 1i32;
    let mut removed = 0u32;
    loop {
        let bars = list_bars(&cur, r);
        match canonical_bar(&bars) {
            None => break,
            Some(bar) => {
                if bar.leglength % 2 == 1 {
                    sign = -sign;
                }
                cur = remove_bar(&cur, &bar);
                removed += 1;
            }
        }
    }
    let quotient = quotient_of(lambda, r);
    debug_assert_eq!(lambda.size(), cur.size() + r * quotient.weight());
    debug_assert_eq!(removed, quotient.weight());
    BarDecomposition {
        core: cur,
        quotient,
        sign,
        bars_removed: removed,
        r,
    }
}

/// The r-bar core together with `bars_removed` (alias of [`decompose`]).
pub fn bar_core(lambda: &StrictPartition, r: u32) -> BarDecomposition {
    decompose(lambda, r)
}

/// The r-bar quotient (alias of [`decompose`]).
pub fn bar_quotient(lambda: &StrictPartition, r: u32) -> BarDecomposition {
    decompose(lambda, r)
}

fn quotient_of(lambda: &StrictPartition, r: u32) -> BarQuotient {
    let t = ((r - 1) / 2) as usize;
    let mut zero: Vec<u32> = lambda
        .parts()
        .iter()
        .filter(|&&p| p % r == 0)
        .map(|&p| p / r)
        .collect();
    zero.sort_unstable_by(|a, b| b.cmp(a));
    let mut paired = Vec::with_capacity(t);
    for i in 1..=t as u32 {
        let occupied: BTreeSet<i64> = lambda
            .parts()
            .iter()
            .filter(|&&p| p % r == i)
            .map(|&p| ((p - i) / r) as i64)
            .collect();
        let vacant: BTreeSet<i64> = lambda
            .parts()
            .iter()
            .filter(|&&p| p % r == r - i)
            .map(|&p| ((p - (r - i)) / r) as i64)
            .collect();
        paired.push(read_maya(&occupied, &vacant));
    }
    BarQuotient {
        zero: StrictPartition::new(zero),
        paired,
    }
}

/// Reads the partition encoded by a two-sided 01-sequence: position `x >= 0`
/// occupied iff `x` is in `occupied`; position `-1-x` vacant iff `x` is in
/// `vacant`. The partition is taken relative to the sequence's own charge
/// `|occupied| - |vacant|`.
fn read_maya(occupied: &BTreeSet<i64>, vacant: &BTreeSet<i64>) -> Partition {
    let charge = occupied.len() as i64 - vacant.len() as i64;
    let mut beads: Vec<i64> = occupied.iter().copied().collect();
    if let Some(&vmax) = vacant.iter().next_back() {
        for m in 0..=vmax {
            if !vacant.contains(&m) {
                beads.push(-1 - m);
            }
        }
    }
    beads.sort_unstable_by(|a, b| b.cmp(a));
    let mut parts = Vec::new();
    for (k, &s) in beads.iter().enumerate() {
        let mu = s - charge + (k as i64 + 1);
        assert!(mu >= 0, "maya sequence read produced a negative part");
        if mu > 0 {
            parts.push(mu as u32);
        }
    }
    Partition::new(parts)
}

/// Inverse of [`read_maya`]: bead positions of `mu` at the given charge, split
/// into occupied nonnegative positions and vacant negative ones.
fn write_maya(mu: &Partition, charge: i64) -> (BTreeSet<i64>, BTreeSet<i64>) {
    let rows = mu.len() as i64 + charge.abs() + 1;
    let mut beads = BTreeSet::new();
    for k in 1..=rows {
        let part = if k as usize <= mu.len() {
            mu.parts()[k as usize - 1] as i64
        } else {
            0
        };
        beads.insert(part + charge - k);
    }
    let min_bead = charge - rows; // every position <= this is occupied (tail)
    let occupied: BTreeSet<i64> = beads.iter().copied().filter(|&b| b >= 0).collect();
    let mut vacant = BTreeSet::new();
    let mut pos = -1;
    while pos > min_bead {
        if !beads.contains(&pos) {
            vacant.insert(-1 - pos);
        }
        pos -= 1;
    }
    (occupied, vacant)
}

/// Rebuilds the unique strict partition with the given r-bar core and
/// quotient. Panics if `core` is not an r-bar core.
pub fn from_core_quotient(core: &StrictPartition, quotient: &BarQuotient, r: u32) -> StrictPartition {
    assert_quotient_r(r);
    let t = ((r - 1) / 2) as usize;
    assert_eq!(
        quotient.paired.len(),
        t,
        "quotient must have {} paired components for r={r}",
        t
    );
    assert!(
        list_bars(core, r).is_empty(),
        "{core} is not an {r}-bar core"
    );
    let mut parts: Vec<u32> = Vec::new();
    for &x in quotient.zero.parts() {
        parts.push(r * x);
    }
    for i in 1..=t as u32 {
        let charge = core.parts().iter().filter(|&&p| p % r == i).count() as i64
            - core.parts().iter().filter(|&&p| p % r == r - i).count() as i64;
        let (occupied, vacant) = write_maya(&quotient.paired[i as usize - 1], charge);
        for &x in &occupied {
            parts.push(r * x as u32 + i);
        }
        for &x in &vacant {
            parts.push(r * x as u32 + (r - i));
        }
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    StrictPartition::new(parts)
}

/// Whether `target` can be reached from `lambda` by removing r-bars:
/// same core, and each quotient component contained in the corresponding one.
pub fn reachable(lambda: &StrictPartition, target: &StrictPartition, r: u32) -> bool {
    let dl = decompose(lambda, r);
    let dt = decompose(target, r);
    dl.core == dt.core
        && dl.quotient.zero.contains(&dt.quotient.zero)
        && dl
            .quotient
            .paired
            .iter()
            .zip(&dt.quotient.paired)
            .all(|(big, small)| big.contains(small))
}

/// Product of `(-1)^leglength` over a removal sequence from `lambda` down to
/// `mu`. Panics if `mu` is not reachable. The value does not depend on the
/// sequence chosen.
pub fn bar_sign(lambda: &StrictPartition, mu: &StrictPartition, r: u32) -> i32 {
    assert_quotient_r(r);
    assert!(
        reachable(lambda, mu, r),
        "{mu} is not reachable from {lambda} by removing {r}-bars"
    );
    let mut cur = lambda.clone();
    let mut sign = 1i32;
    while &cur != mu {
        let mut bars = list_bars(&cur, r);
        bars.sort_unstable_by_key(|b| std::cmp::Reverse((b.row_i, b.row_k)));
        let step = bars
            .into_iter()
            .find_map(|bar| {
                let next = remove_bar(&cur, &bar);
                reachable(&next, mu, r).then_some((bar, next))
            })
            .expect("reachable target admits a next bar removal");
        if step.0.leglength % 2 == 1 {
            sign = -sign;
        }
        cur = step.1;
    }
    sign
}
