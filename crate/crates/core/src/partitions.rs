//! Integer partitions, dominance order and staircases.

use std::fmt;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of non-negative integers.
///
/// Trailing zeros are kept: inside an n-variable context partitions are
/// padded to length n and compared with that padding. Display strips them.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts known to be weakly decreasing.
    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Stored length, trailing zeros included.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weight() == 0
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.iter().take_while(|&&x| x > 0).count()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), zero beyond the stored length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn padded(&self, n: usize) -> Result<Self> {
        if self.length() > n {
            return Err(Error::Domain(format!("{self} has more than {n} parts")));
        }
        let mut parts: Vec<u32> = self.parts.iter().copied().take(n).collect();
        parts.resize(n, 0);
        Ok(Partition { parts })
    }

    pub fn trimmed(&self) -> Self {
        Partition { parts: self.parts[..self.length()].to_vec() }
    }

    pub fn conjugate(&self) -> Self {
        let first = self.part(0);
        Partition {
            parts: (1..=first)
                .map(|j| self.parts.iter().filter(|&&x| x >= j).count() as u32)
                .collect(),
        }
    }

    /// Young diagram containment `self ⊆ other`.
    pub fn contained_in(&self, other: &Partition) -> bool {
        (0..self.length()).all(|i| self.part(i) <= other.part(i))
    }

    /// Multiplies every part by `m`.
    pub fn scaled(&self, m: u32) -> Self {
        Partition { parts: self.parts.iter().map(|x| x * m).collect() }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.trimmed();
        let parts: Vec<String> = t.parts.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Reads `4,2,0`, `[4,2]` or `4 2`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|x| !x.is_empty())
            .map(|x| x.parse::<u32>().map_err(|_| Error::Parse(format!("bad part `{x}` in `{s}`"))))
            .collect::<Result<Vec<u32>>>()?;
        Partition::new(parts)
    }
}

/// The staircase `[m(n-1), ..., m, 0]`.
pub fn staircase(n: usize, m: u32) -> Result<Partition> {
    if n < 1 {
        return Err(Error::Domain("staircase needs n >= 1".into()));
    }
    Ok(Partition { parts: (0..n).rev().map(|i| m * i as u32).collect() })
}

/// Dominance order `lambda <= mu`: equal weights and every prefix sum of
/// `lambda` bounded by that of `mu`.
pub fn dominance_leq(lambda: &Partition, mu: &Partition) -> bool {
    if lambda.weight() != mu.weight() {
        return false;
    }
    let len = lambda.len().max(mu.len());
    let (mut a, mut b) = (0u64, 0u64);
    for i in 0..len {
        a += lambda.part(i) as u64;
        b += mu.part(i) as u64;
        if a > b {
            return false;
        }
    }
    true
}

/// Sorts a non-negative vector into a partition, the `((v))` operator.
pub fn decreasing_reorder(v: &[i64]) -> Result<Partition> {
    if let Some(x) = v.iter().find(|&&x| x < 0) {
        return Err(Error::Domain(format!("negative entry {x} in {v:?}")));
    }
    let mut parts: Vec<u32> = v.iter().map(|&x| x as u32).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Ok(Partition { parts })
}

/// All partitions of `weight` with at most `n` parts, padded to length `n`,
/// in descending lexicographic order.
pub fn partitions_of(weight: u32, n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fill(weight, n, weight, &mut cur, &mut out, &|_, _| true);
    out
}

/// Recursive generator: `bound` caps the next part; `accept(prefix_len,
/// prefix_sum)` prunes prefixes.
fn fill(
    remaining: u32,
    n: usize,
    bound: u32,
    cur: &mut Vec<u32>,
    out: &mut Vec<Partition>,
    accept: &dyn Fn(usize, u32) -> bool,
) {
    if cur.len() == n {
        if remaining == 0 {
            out.push(Partition { parts: cur.clone() });
        }
        return;
    }
    let slots = (n - cur.len()) as u32;
    let hi = bound.min(remaining);
    // the remaining slots must absorb what is left
    let lo = remaining.div_ceil(slots);
    if lo > hi {
        return;
    }
    let prefix: u32 = cur.iter().sum();
    for x in (lo..=hi).rev() {
        if !accept(cur.len() + 1, prefix + x) {
            continue;
        }
        cur.push(x);
        fill(remaining - x, n, x, cur, out, accept);
        cur.pop();
    }
}

/// Every partition `lambda <= mu` with at most `n` parts, padded to length
/// `n`, in descending lexicographic order (a linear extension of dominance).
pub fn partitions_dominated_by(mu: &Partition, n: usize) -> Vec<Partition> {
    let weight = mu.weight();
    let prefix: Vec<u32> = (0..=n)
        .map(|i| (0..i).map(|j| mu.part(j)).sum())
        .collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fill(weight, n, weight, &mut cur, &mut out, &|len, sum| sum <= prefix[len]);
    out
}

/// Number of distinct rearrangements of the parts: `n! / prod mult!`.
pub fn distinct_permutations_count(lambda: &Partition) -> u128 {
    let n = lambda.len();
    let mut result: u128 = (1..=n as u128).product();
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j < n && lambda.parts[j] == lambda.parts[i] {
            j += 1;
        }
        result /= (1..=(j - i) as u128).product::<u128>();
        i = j;
    }
    result
}
