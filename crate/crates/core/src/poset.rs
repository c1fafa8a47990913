//! Finite graded posets given by Hasse covers with an explicit rank function.
//!
//! Elements are opaque ids `0..n`; constructions attach display labels
//! separately so one carrier type serves every poset in the crate.  The
//! transitive closure is precomputed as bit matrices, which keeps Möbius
//! recursion, flag-vector counting and transitive reduction cheap at the
//! sizes that occur here (hundreds of elements).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PosetError {
    UnknownElement(usize),
    NotComparable(usize, usize),
    /// A cover whose lower element does not have strictly smaller rank; such
    /// input cannot define a partial order compatible with the ranks.
    CoverRankOrder(usize, usize),
    LabelCountMismatch { expected: usize, got: usize },
    RankSetOutOfRange { entry: u32, proper_max: u32 },
    RankSetNotIncreasing,
    /// The operation needs a unique minimum and maximum.
    NotBounded,
    NotGraded(String),
    Empty,
}

impl core::error::Error for PosetError {}

impl fmt::Display for PosetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetError::UnknownElement(x) => write!(f, "unknown element id {x}"),
            PosetError::NotComparable(x, y) => write!(f, "elements {x} and {y} are not comparable"),
            PosetError::CoverRankOrder(x, y) => {
                write!(f, "cover ({x}, {y}) does not increase rank")
            }
            PosetError::LabelCountMismatch { expected, got } => {
                write!(f, "expected {expected} labels, got {got}")
            }
            PosetError::RankSetOutOfRange { entry, proper_max } => {
                write!(f, "rank {entry} outside proper range 1..={proper_max}")
            }
            PosetError::RankSetNotIncreasing => write!(f, "rank set must be strictly increasing"),
            PosetError::NotBounded => write!(f, "poset has no unique bottom/top"),
            PosetError::NotGraded(why) => write!(f, "poset is not graded: {why}"),
            PosetError::Empty => write!(f, "poset must have at least one element"),
        }
    }
}

/// Square bit matrix used for the order relation.
#[derive(Clone)]
pub(crate) struct BitMatrix {
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub(crate) fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitMatrix { words, data: vec![0; words * n] }
    }

    #[inline]
    pub(crate) fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize, j: usize) {
        self.data[i * self.words + j / 64] |= 1 << (j % 64);
    }

    /// OR row `src` into row `dst`.
    pub(crate) fn or_row(&mut self, dst: usize, src: usize) {
        let (d, s) = (dst * self.words, src * self.words);
        for w in 0..self.words {
            let v = self.data[s + w];
            self.data[d + w] |= v;
        }
    }

    pub(crate) fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }

    pub(crate) fn count_row(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// A strictly increasing set of proper ranks, the `S` of a flag f-vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RankSet(Vec<u32>);

impl RankSet {
    pub fn new(entries: Vec<u32>) -> Result<Self, PosetError> {
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(PosetError::RankSetNotIncreasing);
        }
        if entries.first() == Some(&0) {
            return Err(PosetError::RankSetOutOfRange { entry: 0, proper_max: 0 });
        }
        Ok(RankSet(entries))
    }

    pub fn empty() -> Self {
        RankSet(Vec::new())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> Option<u32> {
        self.0.last().copied()
    }

    /// S with an extra rank appended (must stay increasing).
    pub fn with_appended(&self, r: u32) -> RankSet {
        assert!(self.max().is_none_or(|m| m < r), "appended rank must exceed max");
        let mut v = self.0.clone();
        v.push(r);
        RankSet(v)
    }

    /// The reverse set { n+1-s_k, ..., n+1-s_1 } inside {1..n}.
    pub fn reversed(&self, n: u32) -> RankSet {
        let mut v: Vec<u32> = self.0.iter().rev().map(|&s| n + 1 - s).collect();
        v.sort_unstable();
        RankSet(v)
    }

    /// All subsets of {1..n} as rank sets, in mask order (deterministic).
    pub fn all_subsets(n: u32) -> Vec<RankSet> {
        let mut out = Vec::with_capacity(1 << n);
        for mask in 0u64..(1u64 << n) {
            let v: Vec<u32> = (1..=n).filter(|&r| mask >> (r - 1) & 1 == 1).collect();
            out.push(RankSet(v));
        }
        out
    }
}

impl fmt::Display for RankSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "}}")
    }
}

/// One problem found by [`GradedPoset::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Cover (lower, upper) with rank(upper) != rank(lower) + 1.
    CoverRankStep { lower: usize, upper: usize, lower_rank: u32, upper_rank: u32 },
    /// Minimal elements do not all share one rank.
    MinimalRankSpread { ranks: Vec<u32> },
    /// Maximal elements do not all share one rank.
    MaximalRankSpread { ranks: Vec<u32> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::CoverRankStep { lower, upper, lower_rank, upper_rank } => write!(
                f,
                "cover ({lower}, {upper}) jumps rank {lower_rank} -> {upper_rank}, expected step 1"
            ),
            Violation::MinimalRankSpread { ranks } => {
                write!(f, "minimal elements at mixed ranks {ranks:?}")
            }
            Violation::MaximalRankSpread { ranks } => {
                write!(f, "maximal elements at mixed ranks {ranks:?}")
            }
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A chain, listed in increasing rank order.
pub type Chain = Vec<usize>;

/// Finite graded poset.  Immutable after construction; freely shared across
/// threads.
#[derive(Clone)]
pub struct GradedPoset {
    ranks: Vec<u32>,
    labels: Vec<String>,
    covers: Vec<(u32, u32)>,
    up: Vec<Vec<u32>>,
    down: Vec<Vec<u32>>,
    up_reach: BitMatrix,
    bottom: Option<usize>,
    top: Option<usize>,
    max_rank: u32,
}

impl GradedPoset {
    /// Build a poset from ranks and Hasse covers.  Covers must strictly
    /// increase rank (otherwise no order compatible with the ranks exists);
    /// whether they increase rank by exactly one is checked by `validate`,
    /// not here.
    pub fn from_covers(
        ranks: Vec<u32>,
        covers: &[(usize, usize)],
        labels: Vec<String>,
    ) -> Result<Self, PosetError> {
        let n = ranks.len();
        if n == 0 {
            return Err(PosetError::Empty);
        }
        if !labels.is_empty() && labels.len() != n {
            return Err(PosetError::LabelCountMismatch { expected: n, got: labels.len() });
        }
        let labels = if labels.is_empty() {
            (0..n).map(|i| i.to_string()).collect()
        } else {
            labels
        };

        let mut cover_set = BTreeSet::new();
        for &(lo, hi) in covers {
            if lo >= n {
                return Err(PosetError::UnknownElement(lo));
            }
            if hi >= n {
                return Err(PosetError::UnknownElement(hi));
            }
            if ranks[lo] >= ranks[hi] {
                return Err(PosetError::CoverRankOrder(lo, hi));
            }
            cover_set.insert((lo as u32, hi as u32));
        }
        let covers: Vec<(u32, u32)> = cover_set.into_iter().collect();

        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(lo, hi) in &covers {
            up[lo as usize].push(hi);
            down[hi as usize].push(lo);
        }
        for v in up.iter_mut().chain(down.iter_mut()) {
            v.sort_unstable();
        }

        // Reflexive-transitive closure; covers increase rank, so processing
        // by descending (resp. ascending) rank visits neighbors first.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_unstable_by_key(|&i| core::cmp::Reverse(ranks[i]));
        let mut up_reach = BitMatrix::new(n);
        for &i in &order {
            up_reach.set(i, i);
            let ups = up[i].clone();
            for j in ups {
                up_reach.or_row(i, j as usize);
            }
        }
        order.reverse();
        let mut down_reach = BitMatrix::new(n);
        for &i in &order {
            down_reach.set(i, i);
            let downs = down[i].clone();
            for j in downs {
                down_reach.or_row(i, j as usize);
            }
        }

        let minimal: Vec<usize> = (0..n).filter(|&i| down[i].is_empty()).collect();
        let maximal: Vec<usize> = (0..n).filter(|&i| up[i].is_empty()).collect();
        let bottom = match minimal.as_slice() {
            [b] if up_reach.count_row(*b) == n => Some(*b),
            _ => None,
        };
        let top = match maximal.as_slice() {
            [t] if down_reach.count_row(*t) == n => Some(*t),
            _ => None,
        };
        let max_rank = ranks.iter().copied().max().unwrap_or(0);

        Ok(GradedPoset {
            ranks,
            labels,
            covers,
            up,
            down,
            up_reach,
            bottom,
            top,
            max_rank,
        })
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn rank(&self, x: usize) -> u32 {
        self.ranks[x]
    }

    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    /// Rank of the poset: the maximum element rank.
    pub fn max_rank(&self) -> u32 {
        self.max_rank
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn bottom(&self) -> Option<usize> {
        self.bottom
    }

    pub fn top(&self) -> Option<usize> {
        self.top
    }

    pub fn bounds(&self) -> Result<(usize, usize), PosetError> {
        match (self.bottom, self.top) {
            (Some(b), Some(t)) => Ok((b, t)),
            _ => Err(PosetError::NotBounded),
        }
    }

    pub fn covers(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.covers.iter().map(|&(a, b)| (a as usize, b as usize))
    }

    pub fn n_covers(&self) -> usize {
        self.covers.len()
    }

    pub fn up_covers(&self, x: usize) -> &[u32] {
        &self.up[x]
    }

    pub fn down_covers(&self, x: usize) -> &[u32] {
        &self.down[x]
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up_reach.get(x, y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.down[i].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.up[i].is_empty()).collect()
    }

    /// Check the gradedness invariants, listing every violation.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for &(lo, hi) in &self.covers {
            let (lo, hi) = (lo as usize, hi as usize);
            if self.ranks[hi] != self.ranks[lo] + 1 {
                violations.push(Violation::CoverRankStep {
                    lower: lo,
                    upper: hi,
                    lower_rank: self.ranks[lo],
                    upper_rank: self.ranks[hi],
                });
            }
        }
        let min_ranks: BTreeSet<u32> =
            self.minimal_elements().iter().map(|&i| self.ranks[i]).collect();
        if min_ranks.len() > 1 {
            violations
                .push(Violation::MinimalRankSpread { ranks: min_ranks.into_iter().collect() });
        }
        let max_ranks: BTreeSet<u32> =
            self.maximal_elements().iter().map(|&i| self.ranks[i]).collect();
        if max_ranks.len() > 1 {
            violations
                .push(Violation::MaximalRankSpread { ranks: max_ranks.into_iter().collect() });
        }
        ValidationReport { violations }
    }

    pub fn expect_valid(self, what: &str) -> Self {
        let report = self.validate();
        assert!(
            report.is_valid(),
            "{what} failed gradedness validation: {}",
            report.violations.iter().map(|v| format!("{v}")).collect::<Vec<_>>().join("; ")
        );
        self
    }

    /// Number of chains through exactly the prescribed proper ranks.
    pub fn flag_f(&self, s: &RankSet) -> Result<u64, PosetError> {
        let (bottom, top) = self.bounds()?;
        if s.is_empty() {
            return Ok(1);
        }
        let proper_max = self.max_rank.saturating_sub(1);
        for &r in s.entries() {
            if r == 0 || r > proper_max {
                return Err(PosetError::RankSetOutOfRange { entry: r, proper_max });
            }
        }
        // DP layer by layer over the prescribed ranks.
        let mut frontier: Vec<(usize, u64)> = vec![(bottom, 1)];
        for &r in s.entries() {
            let layer: Vec<usize> = (0..self.len()).filter(|&i| self.ranks[i] == r).collect();
            let mut next: Vec<(usize, u64)> = Vec::with_capacity(layer.len());
            for &y in &layer {
                let mut acc = 0u64;
                for &(x, c) in &frontier {
                    if self.lt(x, y) {
                        acc += c;
                    }
                }
                if acc > 0 {
                    next.push((y, acc));
                }
            }
            frontier = next;
            if frontier.is_empty() {
                return Ok(0);
            }
        }
        Ok(frontier.iter().filter(|&&(x, _)| self.lt(x, top)).map(|&(_, c)| c).sum())
    }

    /// Dual poset: covers reversed, ranks complemented, same ids and labels.
    pub fn dual(&self) -> GradedPoset {
        let ranks: Vec<u32> = self.ranks.iter().map(|&r| self.max_rank - r).collect();
        let covers: Vec<(usize, usize)> =
            self.covers.iter().map(|&(a, b)| (b as usize, a as usize)).collect();
        GradedPoset::from_covers(ranks, &covers, self.labels.clone())
            .expect("dual of a valid poset is valid")
    }

    /// Induced subposet on `keep` (old ids), with ranks recomputed by
    /// `rank_of` and covers obtained by transitive reduction of the
    /// restricted order.  Returns the subposet together with the old ids
    /// indexed by new id.
    pub fn induced_subposet(
        &self,
        keep: &[usize],
        rank_of: impl Fn(usize) -> u32,
    ) -> (GradedPoset, Vec<usize>) {
        let m = keep.len();
        assert!(m > 0, "induced subposet must be nonempty");
        let mut up_r = BitMatrix::new(m);
        let mut down_r = BitMatrix::new(m);
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate() {
                if self.leq(a, b) {
                    up_r.set(i, j);
                    down_r.set(j, i);
                }
            }
        }
        let mut covers = Vec::new();
        for i in 0..m {
            for j in 0..m {
                if i == j || !up_r.get(i, j) {
                    continue;
                }
                // cover iff nothing strictly between i and j in the subposet
                let ri = up_r.row(i);
                let rj = down_r.row(j);
                let mut has_mid = false;
                for (w, (&a, &b)) in ri.iter().zip(rj.iter()).enumerate() {
                    let mut v = a & b;
                    if i / 64 == w {
                        v &= !(1u64 << (i % 64));
                    }
                    if j / 64 == w {
                        v &= !(1u64 << (j % 64));
                    }
                    if v != 0 {
                        has_mid = true;
                        break;
                    }
                }
                if !has_mid {
                    covers.push((i, j));
                }
            }
        }
        let ranks: Vec<u32> = keep.iter().map(|&a| rank_of(a)).collect();
        let labels: Vec<String> = keep.iter().map(|&a| self.labels[a].clone()).collect();
        let sub =
            GradedPoset::from_covers(ranks, &covers, labels).expect("induced subposet construction");
        (sub, keep.to_vec())
    }

    /// Closed interval [x, y], ranks shifted so x has rank 0.
    pub fn closed_interval(
        &self,
        x: usize,
        y: usize,
    ) -> Result<(GradedPoset, Vec<usize>), PosetError> {
        self.check_elem(x)?;
        self.check_elem(y)?;
        if !self.leq(x, y) {
            return Err(PosetError::NotComparable(x, y));
        }
        let base = self.ranks[x];
        let keep: Vec<usize> =
            (0..self.len()).filter(|&z| self.leq(x, z) && self.leq(z, y)).collect();
        Ok(self.induced_subposet(&keep, |z| self.ranks[z] - base))
    }

    /// Open interval (x, y), ranks shifted so its bottom layer has rank 0.
    pub fn open_interval(
        &self,
        x: usize,
        y: usize,
    ) -> Result<(GradedPoset, Vec<usize>), PosetError> {
        self.check_elem(x)?;
        self.check_elem(y)?;
        if !self.lt(x, y) {
            return Err(PosetError::NotComparable(x, y));
        }
        let keep: Vec<usize> = (0..self.len())
            .filter(|&z| z != x && z != y && self.leq(x, z) && self.leq(z, y))
            .collect();
        if keep.is_empty() {
            return Err(PosetError::Empty);
        }
        let base = self.ranks[x] + 1;
        Ok(self.induced_subposet(&keep, |z| self.ranks[z] - base))
    }

    /// Proper part of a bounded poset, ranks shifted down by one.
    pub fn proper_part(&self) -> Result<(GradedPoset, Vec<usize>), PosetError> {
        let (b, t) = self.bounds()?;
        self.open_interval(b, t)
    }

    /// Subposet obtained by deleting the bottom, ranks shifted down by one.
    pub fn without_bottom(&self) -> Result<(GradedPoset, Vec<usize>), PosetError> {
        let b = self.bottom.ok_or(PosetError::NotBounded)?;
        let base = self.ranks[b] + 1;
        let keep: Vec<usize> = (0..self.len()).filter(|&z| z != b).collect();
        Ok(self.induced_subposet(&keep, |z| self.ranks[z] - base))
    }

    /// Subposet obtained by deleting the top; ranks unchanged.
    pub fn without_top(&self) -> Result<(GradedPoset, Vec<usize>), PosetError> {
        let t = self.top.ok_or(PosetError::NotBounded)?;
        let keep: Vec<usize> = (0..self.len()).filter(|&z| z != t).collect();
        Ok(self.induced_subposet(&keep, |z| self.ranks[z]))
    }

    /// Upper order ideal { y : y >= x }, ranks shifted so x has rank 0.
    pub fn upper_ideal(&self, x: usize) -> Result<(GradedPoset, Vec<usize>), PosetError> {
        self.check_elem(x)?;
        let base = self.ranks[x];
        let keep: Vec<usize> = (0..self.len()).filter(|&z| self.leq(x, z)).collect();
        Ok(self.induced_subposet(&keep, |z| self.ranks[z] - base))
    }

    fn check_elem(&self, x: usize) -> Result<(), PosetError> {
        if x >= self.len() {
            return Err(PosetError::UnknownElement(x));
        }
        Ok(())
    }

    /// Depth-first enumeration of maximal chains (minimal to maximal
    /// elements), with element-id tie-breaking at every step.
    pub fn maximal_chains(&self) -> MaximalChains<'_> {
        MaximalChains { poset: self, stack: Vec::new(), roots: self.minimal_elements(), root_idx: 0 }
    }

    pub fn count_maximal_chains(&self) -> u64 {
        let mut counts = vec![0u64; self.len()];
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_unstable_by_key(|&i| core::cmp::Reverse(self.ranks[i]));
        for &i in &order {
            counts[i] = if self.up[i].is_empty() {
                1
            } else {
                self.up[i].iter().map(|&j| counts[j as usize]).sum()
            };
        }
        self.minimal_elements().iter().map(|&i| counts[i]).sum()
    }

    /// Möbius value of the closed interval [x, y] (Philip Hall recursion).
    /// One-shot convenience; reuse a [`MobiusOracle`] for repeated queries.
    pub fn mobius(&self, x: usize, y: usize) -> Result<i64, PosetError> {
        MobiusOracle::new(self).mobius(x, y)
    }

    /// mu(0̂, 1̂) of a bounded poset.
    pub fn mobius_bounded(&self) -> Result<i64, PosetError> {
        let (b, t) = self.bounds()?;
        self.mobius(b, t)
    }

    /// Full Möbius matrix by inverting the zeta matrix.  Kept as an
    /// independent cross-check of the interval recursion.
    pub fn mobius_full_by_zeta(&self) -> Vec<Vec<i64>> {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_unstable_by_key(|&i| self.ranks[i]);
        let mut mu = vec![vec![0i64; n]; n];
        for (pos_x, &x) in order.iter().enumerate() {
            mu[x][x] = 1;
            for &y in order.iter().skip(pos_x + 1) {
                if !self.lt(x, y) {
                    continue;
                }
                let mut acc = 0i64;
                for &z in order.iter() {
                    if self.leq(x, z) && self.lt(z, y) {
                        acc += mu[x][z];
                    }
                }
                mu[x][y] = -acc;
            }
        }
        mu
    }

    /// Structural isomorphism test (rank-respecting bijection preserving
    /// covers), by color refinement plus backtracking.
    pub fn is_isomorphic_to(&self, other: &GradedPoset) -> bool {
        iso::isomorphic(self, other)
    }
}

/// Iterator over maximal chains, each a rank-increasing id list.
pub struct MaximalChains<'a> {
    poset: &'a GradedPoset,
    // (element, index of this element in its parent's up-cover list)
    stack: Vec<(usize, usize)>,
    roots: Vec<usize>,
    root_idx: usize,
}

impl Iterator for MaximalChains<'_> {
    type Item = Chain;

    fn next(&mut self) -> Option<Chain> {
        if self.stack.is_empty() {
            if self.root_idx >= self.roots.len() {
                return None;
            }
            self.stack.push((self.roots[self.root_idx], 0));
            self.root_idx += 1;
        }
        // descend to a maximal element
        loop {
            let &(x, _) = self.stack.last().unwrap();
            let ups = self.poset.up_covers(x);
            if ups.is_empty() {
                break;
            }
            self.stack.push((ups[0] as usize, 0));
        }
        let chain: Chain = self.stack.iter().map(|&(x, _)| x).collect();
        // backtrack to the next unexplored branch
        while let Some((_, idx)) = self.stack.pop() {
            if let Some(&(parent, _)) = self.stack.last() {
                let ups = self.poset.up_covers(parent);
                if idx + 1 < ups.len() {
                    self.stack.push((ups[idx + 1] as usize, idx + 1));
                    break;
                }
            }
        }
        Some(chain)
    }
}

/// Memoizing Möbius oracle over one poset.  The memo is interior-mutable, so
/// keep one oracle per thread; the poset itself is freely shareable.
pub struct MobiusOracle<'a> {
    poset: &'a GradedPoset,
    memo: RefCell<BTreeMap<(usize, usize), i64>>,
}

impl<'a> MobiusOracle<'a> {
    pub fn new(poset: &'a GradedPoset) -> Self {
        MobiusOracle { poset, memo: RefCell::new(BTreeMap::new()) }
    }

    pub fn mobius(&self, x: usize, y: usize) -> Result<i64, PosetError> {
        let p = self.poset;
        if x >= p.len() {
            return Err(PosetError::UnknownElement(x));
        }
        if y >= p.len() {
            return Err(PosetError::UnknownElement(y));
        }
        if !p.leq(x, y) {
            return Err(PosetError::NotComparable(x, y));
        }
        if let Some(&v) = self.memo.borrow().get(&(x, y)) {
            return Ok(v);
        }
        // Fill the whole interval [x, y] bottom-up in one pass.
        let mut interval: Vec<usize> =
            (0..p.len()).filter(|&z| p.leq(x, z) && p.leq(z, y)).collect();
        interval.sort_unstable_by_key(|&z| (p.rank(z), z));
        let mut local: Vec<(usize, i64)> = Vec::with_capacity(interval.len());
        let mut result = 0;
        {
            let mut memo = self.memo.borrow_mut();
            for &z in &interval {
                let v = if z == x {
                    1
                } else {
                    let mut acc = 0i64;
                    for &(w, mw) in &local {
                        if p.lt(w, z) {
                            acc += mw;
                        }
                    }
                    -acc
                };
                local.push((z, v));
                memo.insert((x, z), v);
                if z == y {
                    result = v;
                }
            }
        }
        Ok(result)
    }
}

mod iso {
    //! Poset isomorphism by iterated color refinement and backtracking.

    use super::GradedPoset;
    use alloc::collections::BTreeMap;
    use alloc::vec;
    use alloc::vec::Vec;

    fn refine(p: &GradedPoset, rounds: usize) -> Vec<u64> {
        let n = p.len();
        let mut color: Vec<u64> = (0..n)
            .map(|i| {
                hash3(p.rank(i) as u64, p.up_covers(i).len() as u64, p.down_covers(i).len() as u64)
            })
            .collect();
        for _ in 0..rounds {
            let mut next = Vec::with_capacity(n);
            for i in 0..n {
                let mut ups: Vec<u64> = p.up_covers(i).iter().map(|&j| color[j as usize]).collect();
                ups.sort_unstable();
                let mut downs: Vec<u64> =
                    p.down_covers(i).iter().map(|&j| color[j as usize]).collect();
                downs.sort_unstable();
                let mut h = color[i];
                for u in ups {
                    h = hash3(h, 0x75, u);
                }
                for d in downs {
                    h = hash3(h, 0x64, d);
                }
                next.push(h);
            }
            if next == color {
                break;
            }
            color = next;
        }
        color
    }

    fn hash3(a: u64, b: u64, c: u64) -> u64 {
        // FNV-ish mixing; collisions only weaken pruning, never correctness.
        let mut h = 0xcbf29ce484222325u64;
        for v in [a, b, c] {
            for byte in v.to_le_bytes() {
                h ^= byte as u64;
                h = h.wrapping_mul(0x100000001b3);
            }
        }
        h
    }

    pub fn isomorphic(p: &GradedPoset, q: &GradedPoset) -> bool {
        if p.len() != q.len() || p.n_covers() != q.n_covers() {
            return false;
        }
        let n = p.len();
        let cp = refine(p, 4);
        let cq = refine(q, 4);
        let mut count_p: BTreeMap<u64, usize> = BTreeMap::new();
        let mut count_q: BTreeMap<u64, usize> = BTreeMap::new();
        for i in 0..n {
            *count_p.entry(cp[i]).or_default() += 1;
            *count_q.entry(cq[i]).or_default() += 1;
        }
        if count_p != count_q {
            return false;
        }
        // Backtracking: assign p-elements starting from the rarest classes.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_unstable_by_key(|&i| (count_p[&cp[i]], cp[i], i));
        let mut p_to_q = vec![usize::MAX; n];
        let mut q_to_p = vec![usize::MAX; n];
        backtrack(p, q, &cp, &cq, &order, 0, &mut p_to_q, &mut q_to_p)
    }

    fn consistent(p: &GradedPoset, q: &GradedPoset, p_to_q: &[usize], q_to_p: &[usize], a: usize, b: usize) -> bool {
        for &u in p.up_covers(a) {
            let img = p_to_q[u as usize];
            if img != usize::MAX && !q.up_covers(b).contains(&(img as u32)) {
                return false;
            }
        }
        for &d in p.down_covers(a) {
            let img = p_to_q[d as usize];
            if img != usize::MAX && !q.down_covers(b).contains(&(img as u32)) {
                return false;
            }
        }
        for &u in q.up_covers(b) {
            let pre = q_to_p[u as usize];
            if pre != usize::MAX && !p.up_covers(a).contains(&(pre as u32)) {
                return false;
            }
        }
        for &d in q.down_covers(b) {
            let pre = q_to_p[d as usize];
            if pre != usize::MAX && !p.down_covers(a).contains(&(pre as u32)) {
                return false;
            }
        }
        true
    }

    #[allow(clippy::too_many_arguments)]
    fn backtrack(
        p: &GradedPoset,
        q: &GradedPoset,
        cp: &[u64],
        cq: &[u64],
        order: &[usize],
        depth: usize,
        p_to_q: &mut [usize],
        q_to_p: &mut [usize],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let a = order[depth];
        for b in 0..q.len() {
            if q_to_p[b] != usize::MAX || cq[b] != cp[a] {
                continue;
            }
            if !consistent(p, q, p_to_q, q_to_p, a, b) {
                continue;
            }
            p_to_q[a] = b;
            q_to_p[b] = a;
            if backtrack(p, q, cp, cq, order, depth + 1, p_to_q, q_to_p) {
                return true;
            }
            p_to_q[a] = usize::MAX;
            q_to_p[b] = usize::MAX;
        }
        false
    }
}
