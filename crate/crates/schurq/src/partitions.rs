//! Partition types and enumeration.
//!
//! Three newtypes share the textual format `"4,2,1"` (empty partition: `"-"`):
//! - [`Partition`]: weakly decreasing positive parts,
//! - [`StrictPartition`]: strictly decreasing positive parts,
//! - [`OddPartition`]: weakly decreasing odd positive parts.
//!
//! Enumeration of partitions of `n` is in reverse lexicographic order
//! (`(3), (2,1), (1,1,1)`), which fixes row/column orderings everywhere else
//! in the crate.

use num::BigInt;
use num::One;
use std::fmt;
use std::str::FromStr;

/// A partition: weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

/// A strict partition: strictly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StrictPartition {
    parts: Vec<u32>,
}

/// A partition all of whose parts are odd.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OddPartition {
    parts: Vec<u32>,
}

macro_rules! common_partition_impls {
    ($ty:ident) => {
        impl $ty {
            /// The parts, weakly decreasing.
            pub fn parts(&self) -> &[u32] {
                &self.parts
            }

            /// Sum of the parts.
            pub fn size(&self) -> u32 {
                self.parts.iter().sum()
            }

            /// Number of parts.
            pub fn len(&self) -> usize {
                self.parts.len()
            }

            pub fn is_empty(&self) -> bool {
                self.parts.is_empty()
            }

            /// The empty partition.
            pub fn empty() -> Self {
                $ty { parts: Vec::new() }
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.parts.is_empty() {
                    return write!(f, "-");
                }
                let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
                write!(f, "{}", s.join(","))
            }
        }

        impl fmt::Debug for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}({})", stringify!($ty), self)
            }
        }

        impl FromStr for $ty {
            type Err = String;

            fn from_str(s: &str) -> Result<Self, String> {
                let s = s.trim();
                if s.is_empty() || s == "-" {
                    return Ok($ty::empty());
                }
                let mut parts = Vec::new();
                for tok in s.split(',') {
                    let p: u32 = tok
                        .trim()
                        .parse()
                        .map_err(|_| format!("invalid part {:?} in partition {:?}", tok, s))?;
                    parts.push(p);
                }
                $ty::try_new(parts).map_err(|e| format!("{} in {:?}", e, s))
            }
        }
    };
}

common_partition_impls!(Partition);
common_partition_impls!(StrictPartition);
common_partition_impls!(OddPartition);

impl Partition {
    /// Checked constructor; panics unless parts are weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Self {
        Self::try_new(parts).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn try_new(parts: Vec<u32>) -> Result<Self, String> {
        if parts.contains(&0) {
            return Err("partition parts must be positive".into());
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err("partition parts must be weakly decreasing".into());
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let mut out = Vec::new();
        let mut col = 1;
        loop {
            let c = self.parts.iter().filter(|&&p| p >= col).count() as u32;
            if c == 0 {
                break;
            }
            out.push(c);
            col += 1;
        }
        Partition { parts: out }
    }

    /// Number of cells with hook length exactly `h`.
    ///
    /// Counted on the beta-set: first-column hook lengths are `b` for beads
    /// `b` in the beta-set, and a cell of hook length `h` corresponds to a
    /// bead `b >= h` with `b - h` unoccupied.
    pub fn count_hooks(&self, h: u32) -> usize {
        assert!(h > 0, "hook length must be positive");
        let beta = self.beta_set(self.len());
        beta.iter()
            .filter(|&&b| b >= h as i64 && !beta.contains(&(b - h as i64)))
            .count()
    }

    /// Beta-set with `rows` beads: `{ part_i + rows - i : i = 1..=rows }`,
    /// padding with zero parts. Requires `rows >= len()`.
    pub fn beta_set(&self, rows: usize) -> Vec<i64> {
        assert!(rows >= self.len());
        (1..=rows)
            .map(|i| {
                let p = if i <= self.len() {
                    self.parts[i - 1] as i64
                } else {
                    0
                };
                p + (rows as i64 - i as i64)
            })
            .collect()
    }

    /// Whether `other` fits inside `self` row by row.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len()
            && other
                .parts
                .iter()
                .zip(&self.parts)
                .all(|(o, s)| o <= s)
    }
}

impl StrictPartition {
    /// Checked constructor; panics unless parts are strictly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Self {
        Self::try_new(parts).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn try_new(parts: Vec<u32>) -> Result<Self, String> {
        if parts.contains(&0) {
            return Err("strict partition parts must be positive".into());
        }
        if !parts.windows(2).all(|w| w[0] > w[1]) {
            return Err("strict partition parts must be strictly decreasing".into());
        }
        Ok(StrictPartition { parts })
    }

    pub fn to_partition(&self) -> Partition {
        Partition {
            parts: self.parts.clone(),
        }
    }

    pub fn has_part(&self, p: u32) -> bool {
        self.parts.contains(&p)
    }

    /// Whether `other` fits inside `self` row by row.
    pub fn contains(&self, other: &StrictPartition) -> bool {
        other.len() <= self.len()
            && other
                .parts
                .iter()
                .zip(&self.parts)
                .all(|(o, s)| o <= s)
    }
}

impl OddPartition {
    /// Checked constructor; panics unless parts are odd, positive, weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Self {
        Self::try_new(parts).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn try_new(parts: Vec<u32>) -> Result<Self, String> {
        if parts.iter().any(|&p| p % 2 == 0) {
            return Err("odd partition parts must be odd".into());
        }
        Partition::try_new(parts).map(|p| OddPartition { parts: p.parts })
    }

    pub fn to_partition(&self) -> Partition {
        Partition {
            parts: self.parts.clone(),
        }
    }

    /// Multiplicity view: pairs `(j, m_j)` with `m_j` the number of parts
    /// equal to `j`, for each distinct part `j` in increasing order.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        multiplicities(&self.parts)
    }
}

fn multiplicities(parts: &[u32]) -> Vec<(u32, u32)> {
    let mut out: Vec<(u32, u32)> = Vec::new();
    for &p in parts {
        match out.iter_mut().find(|(j, _)| *j == p) {
            Some((_, m)) => *m += 1,
            None => out.push((p, 1)),
        }
    }
    out.sort_unstable();
    out
}

/// `z_pi = prod_j m_j! * j^{m_j}` over the multiplicities of `parts`.
pub fn z_factor(parts: &[u32]) -> BigInt {
    let mut z = BigInt::one();
    for (j, m) in multiplicities(parts) {
        for f in 1..=m {
            z *= f;
        }
        z *= BigInt::from(j).pow(m);
    }
    z
}

/// All partitions of `n` in reverse lexicographic order.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    rec_partitions(n, n, &mut cur, &mut |parts| {
        out.push(Partition {
            parts: parts.to_vec(),
        })
    });
    out
}

fn rec_partitions(n: u32, max: u32, cur: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    if n == 0 {
        emit(cur);
        return;
    }
    let hi = max.min(n);
    for p in (1..=hi).rev() {
        cur.push(p);
        rec_partitions(n - p, p, cur, emit);
        cur.pop();
    }
}

/// All strict partitions of `n` in reverse lexicographic order.
pub fn enumerate_strict_partitions(n: u32) -> Vec<StrictPartition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    rec_strict(n, n, &mut cur, &mut |parts| {
        out.push(StrictPartition {
            parts: parts.to_vec(),
        })
    });
    out
}

fn rec_strict(n: u32, max: u32, cur: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    if n == 0 {
        emit(cur);
        return;
    }
    let hi = max.min(n);
    for p in (1..=hi).rev() {
        cur.push(p);
        if p > 0 {
            rec_strict(n - p, p.saturating_sub(1), cur, emit);
        }
        cur.pop();
    }
}

/// All partitions of `n` into odd parts, in reverse lexicographic order.
///
/// With `forbidden_multiple = Some(r)` (r odd, at least 3), parts divisible
/// by `r` are excluded as well. Panics on even `r`.
pub fn enumerate_odd_partitions(n: u32, forbidden_multiple: Option<u32>) -> Vec<OddPartition> {
    if let Some(r) = forbidden_multiple {
        assert!(r % 2 == 1, "forbidden multiple must be odd, got {r}");
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    rec_odd(n, n, forbidden_multiple, &mut cur, &mut |parts| {
        out.push(OddPartition {
            parts: parts.to_vec(),
        })
    });
    out
}

fn rec_odd(
    n: u32,
    max: u32,
    forbidden: Option<u32>,
    cur: &mut Vec<u32>,
    emit: &mut impl FnMut(&[u32]),
) {
    if n == 0 {
        emit(cur);
        return;
    }
    let hi = max.min(n);
    for p in (1..=hi).rev() {
        if p % 2 == 0 {
            continue;
        }
        if let Some(r) = forbidden {
            if p % r == 0 {
                continue;
            }
        }
        cur.push(p);
        rec_odd(n - p, p, forbidden, cur, emit);
        cur.pop();
    }
}

/// Result of [`normalize_signed`]: either the input vanishes (repeated part)
/// or it sorts to a strict partition with the sign of the sorting permutation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Normalized {
    /// Two equal nonzero entries: the indexed object is zero.
    Zero,
    Ordered { partition: StrictPartition, sign: i32 },
}

impl Normalized {
    pub fn is_zero(&self) -> bool {
        matches!(self, Normalized::Zero)
    }
}

/// Drops zero entries, then sorts into strictly decreasing order.
///
/// Returns [`Normalized::Zero`] if two nonzero entries coincide; otherwise the
/// sorted strict partition together with the sign of the sorting permutation.
/// Zeros are removed before the sign is computed: the sign counts inversions
/// among the nonzero entries only.
pub fn normalize_signed(seq: &[u32]) -> Normalized {
    let vals: Vec<u32> = seq.iter().copied().filter(|&x| x > 0).collect();
    for i in 0..vals.len() {
        for j in i + 1..vals.len() {
            if vals[i] == vals[j] {
                return Normalized::Zero;
            }
        }
    }
    // inversions relative to decreasing order
    let mut inversions = 0usize;
    for i in 0..vals.len() {
        for j in i + 1..vals.len() {
            if vals[i] < vals[j] {
                inversions += 1;
            }
        }
    }
    let mut sorted = vals;
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    Normalized::Ordered {
        partition: StrictPartition { parts: sorted },
        sign: if inversions % 2 == 0 { 1 } else { -1 },
    }
}
