//! Simultaneous core partitions.
//!
//! A partition is an `a`-core when none of its hook lengths is divisible by
//! `a`. Cores are enumerated through beta-sets (first-column hook lengths):
//! a partition is an `a`-core exactly when its beta-set `B` satisfies
//! `x in B, x >= a  =>  x - a in B`. For coprime `s` and `s + d` every
//! element of such a set is a gap of the numerical semigroup generated by
//! `s` and `s + d`, so the search window is finite.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::identities::{conjecture_sum, theorem2_rhs, VerificationReport};
use crate::rational::ExactRational;

/// An integer partition with weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument("partition parts must be weakly decreasing".into()));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// The transposed partition.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count() as u32)
            .collect();
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Hook lengths of every cell of the Young diagram, sorted ascending.
pub fn hook_lengths(p: &Partition) -> Vec<u32> {
    let conj = p.conjugate();
    let mut hooks = Vec::with_capacity(p.size() as usize);
    for (i, &row) in p.parts().iter().enumerate() {
        for j in 0..row as usize {
            // arm + leg + 1
            hooks.push(row - j as u32 + conj.parts()[j] - i as u32 - 1);
        }
    }
    hooks.sort_unstable();
    hooks
}

/// True iff no hook length of `p` is divisible by `a`.
pub fn is_core(p: &Partition, a: u32) -> bool {
    assert!(a >= 1, "core modulus must be positive");
    hook_lengths(p).iter().all(|h| h % a != 0)
}

/// First-column hook lengths of a partition.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BetaSet {
    elements: BTreeSet<u32>,
}

impl BetaSet {
    /// Any finite set of positive integers is the beta-set of exactly one
    /// partition.
    pub fn new(elements: impl IntoIterator<Item = u32>) -> Result<Self> {
        let elements: BTreeSet<u32> = elements.into_iter().collect();
        if elements.contains(&0) {
            return Err(Error::InvalidArgument("beta-set elements must be positive".into()));
        }
        Ok(Self { elements })
    }

    pub fn from_partition(p: &Partition) -> Self {
        let len = p.len() as u32;
        let elements = p
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &part)| part + len - 1 - i as u32)
            .collect();
        Self { elements }
    }

    pub fn to_partition(&self) -> Partition {
        let len = self.elements.len() as u32;
        let parts = self
            .elements
            .iter()
            .rev()
            .enumerate()
            .map(|(i, &h)| h + 1 + i as u32 - len)
            .collect();
        Partition { parts }
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> + '_ {
        self.elements.iter().copied()
    }

    /// Size of the corresponding partition: `sum(B) - |B|(|B|-1)/2`.
    pub fn partition_size(&self) -> u64 {
        let c = self.elements.len() as u64;
        self.elements.iter().map(|&h| u64::from(h)).sum::<u64>() - c * c.saturating_sub(1) / 2
    }

    /// Abacus criterion: `x in B, x >= a` implies `x - a in B`.
    pub fn is_core(&self, a: u32) -> bool {
        assert!(a >= 1, "core modulus must be positive");
        self.elements
            .iter()
            .all(|&x| x < a || self.elements.contains(&(x - a)))
    }
}

/// Number of simultaneous cores found, split by partition size.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoreCount {
    pub by_size: BTreeMap<u64, u64>,
}

impl CoreCount {
    pub fn total(&self) -> BigInt {
        self.by_size.values().map(|&c| BigInt::from(c)).sum()
    }

    /// Largest size of any core found.
    pub fn max_size(&self) -> Option<u64> {
        self.by_size.keys().next_back().copied()
    }

    fn merge(mut self, other: CoreCount) -> CoreCount {
        for (size, c) in other.by_size {
            *self.by_size.entry(size).or_default() += c;
        }
        self
    }
}

fn check_pair(s: u32, d: u32) -> Result<()> {
    if s == 0 || d == 0 {
        return Err(Error::InvalidArgument("s and d must be at least 1".into()));
    }
    if s.gcd(&d) != 1 {
        return Err(Error::NotCoprime { s, d });
    }
    Ok(())
}

/// Largest possible size of an `(s, s+d)`-core: `(s^2-1)((s+d)^2-1)/24`.
pub fn size_bound(s: u32, d: u32) -> u64 {
    let a = u64::from(s);
    let b = u64::from(s + d);
    (a * a - 1) * (b * b - 1) / 24
}

/// Largest gap of the semigroup generated by `s` and `s + d` (its Frobenius
/// number), or 0 when there are no gaps. This bounds every hook length of an
/// `(s, s+d)`-core.
pub fn hook_window(s: u32, d: u32) -> u32 {
    let a = i64::from(s);
    let b = i64::from(s + d);
    (a * b - a - b).max(0) as u32
}

/// The moduli `s, s+d, s+2d`.
pub fn moduli(s: u32, d: u32) -> [u32; 3] {
    [s, s + d, s + 2 * d]
}

/// Counts `(s, s+d, s+2d)`-core partitions by beta-set enumeration.
pub fn count_simultaneous_cores(s: u32, d: u32) -> Result<CoreCount> {
    check_pair(s, d)?;
    Ok(count_cores_in_window(&moduli(s, d), hook_window(s, d), size_bound(s, d)))
}

/// Counts partitions that are `m`-cores for every `m` in `moduli`, among
/// those whose beta-set lies in `1..=window` and whose size is at most
/// `max_size`.
///
/// With two coprime moduli and a window at least their Frobenius number this
/// is exhaustive; a larger window or size limit changes nothing.
pub fn count_cores_in_window(moduli: &[u32], window: u32, max_size: u64) -> CoreCount {
    assert!(moduli.iter().all(|&m| m >= 1), "core moduli must be positive");
    let mut search = Search {
        moduli,
        window,
        max_size,
        member: vec![false; window as usize + 1],
    };
    search.run(1, 0, 0, 0)
}

struct Search<'a> {
    moduli: &'a [u32],
    window: u32,
    max_size: u64,
    member: Vec<bool>,
}

/// Depth below which branches are handed to rayon.
const PARALLEL_DEPTH: u32 = 10;

impl Search<'_> {
    fn allowed(&self, x: u32) -> bool {
        self.moduli
            .iter()
            .all(|&m| x < m || (x > m && self.member[(x - m) as usize]))
    }

    /// Decides membership of `x, x+1, ..., window` given the current set of
    /// `count` elements of partition size `size`. Elements are added in
    /// increasing order, so adding `x` raises the size by `x - count >= 1`
    /// and the size limit prunes monotonically.
    fn run(&mut self, mut x: u32, count: u64, size: u64, depth: u32) -> CoreCount {
        while x <= self.window && !self.allowed(x) {
            x += 1;
        }
        if x > self.window {
            let mut out = CoreCount::default();
            out.by_size.insert(size, 1);
            return out;
        }
        let grown = size + u64::from(x) - count;
        let can_take = grown <= self.max_size;
        if !can_take {
            return self.run(x + 1, count, size, depth);
        }
        if depth < PARALLEL_DEPTH {
            let mut with = Search {
                moduli: self.moduli,
                window: self.window,
                max_size: self.max_size,
                member: self.member.clone(),
            };
            with.member[x as usize] = true;
            let (a, b) = rayon::join(
                || with.run(x + 1, count + 1, grown, depth + 1),
                || self.run(x + 1, count, size, depth + 1),
            );
            return a.merge(b);
        }
        self.member[x as usize] = true;
        let a = self.run(x + 1, count + 1, grown, depth + 1);
        self.member[x as usize] = false;
        a.merge(self.run(x + 1, count, size, depth + 1))
    }
}

/// Visits every partition of `n`.
pub fn for_each_partition(n: u32, mut visit: impl FnMut(&Partition)) {
    fn rec(remaining: u32, max_part: u32, parts: &mut Vec<u32>, visit: &mut dyn FnMut(&Partition)) {
        if remaining == 0 {
            visit(&Partition { parts: parts.clone() });
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            parts.push(part);
            rec(remaining - part, part, parts, visit);
            parts.pop();
        }
    }
    rec(n, n, &mut Vec::new(), &mut visit);
}

/// Counts simultaneous cores by scanning every partition of every size up
/// to `max_size` and testing hook lengths directly. Exponential in
/// `max_size`; used to cross-check [`count_cores_in_window`].
pub fn count_cores_naive(moduli: &[u32], max_size: u64) -> CoreCount {
    let mut out = CoreCount::default();
    for n in 0..=max_size as u32 {
        let mut c = 0u64;
        for_each_partition(n, |p| {
            let hooks = hook_lengths(p);
            if moduli.iter().all(|&m| hooks.iter().all(|h| h % m != 0)) {
                c += 1;
            }
        });
        if c > 0 {
            out.by_size.insert(u64::from(n), c);
        }
    }
    out
}

/// Naive count of `(s, s+d, s+2d)`-cores up to the size bound.
pub fn count_simultaneous_cores_naive(s: u32, d: u32) -> Result<CoreCount> {
    check_pair(s, d)?;
    Ok(count_cores_naive(&moduli(s, d), size_bound(s, d)))
}

/// Compares the brute-force count with the closed-form sum and with
/// `T(s+d-1, s)/d`. Agreement is evidence consistent with the conjectured
/// formula, nothing more.
pub fn conjecture_check(s: u32, d: u32) -> Result<VerificationReport> {
    let count = count_simultaneous_cores(s, d)?.total();
    let formula = conjecture_sum(s, d)?;
    let triangle = theorem2_rhs(s, d)?;
    Ok(VerificationReport::new(
        "conjecture",
        &[("s", i64::from(s)), ("d", i64::from(d))],
        vec![
            ("count".into(), ExactRational::from_integer(count)),
            ("formula".into(), ExactRational::from_integer(formula)),
            ("triangle".into(), ExactRational::from_integer(triangle)),
        ],
    ))
}

/// Coprime `(s, d)` with `s + 2d <= max_sum`, ordered by `s` then `d`.
pub fn coprime_pairs(max_sum: u32) -> Vec<(u32, u32)> {
    let mut pairs = Vec::new();
    for s in 1..=max_sum {
        for d in 1..=max_sum {
            if s + 2 * d <= max_sum && s.gcd(&d) == 1 {
                pairs.push((s, d));
            }
        }
    }
    pairs
}
