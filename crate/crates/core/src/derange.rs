//! Derangement and signed-derangement counts, exact permanents, skew hook
//! diagrams, the cycle/diagram bijection in both directions, the F_pi
//! construction, and the counting consequences (the n·D± factorization and
//! the derangement count for the Boolean algebra case).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::labeling::Word;
use crate::num::{compositions, multinomial, pow2};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BijectionError {
    FixedPoint(u32),
    NotAPermutation,
    MalformedFilling(String),
    TooLarge(u32),
    PrecisionExhausted(u32),
}

impl core::error::Error for BijectionError {}

impl fmt::Display for BijectionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BijectionError::FixedPoint(x) => write!(f, "permutation fixes {x}"),
            BijectionError::NotAPermutation => write!(f, "not a permutation"),
            BijectionError::MalformedFilling(why) => write!(f, "malformed filling: {why}"),
            BijectionError::TooLarge(n) => write!(f, "n = {n} exceeds the supported range"),
            BijectionError::PrecisionExhausted(n) => {
                write!(f, "interval arithmetic too coarse at n = {n}")
            }
        }
    }
}

// ---------------------------------------------------------------------------
// counts

/// D_n by the recurrence D_n = (n-1)(D_(n-1) + D_(n-2)), D_0 = 1, D_1 = 0.
pub fn derangement_count(n: u32) -> i128 {
    assert!(n <= 33, "derangement count overflows i128 beyond n = 33");
    let (mut prev, mut cur) = (1i128, 0i128);
    if n == 0 {
        return 1;
    }
    for k in 2..=n as i128 {
        (prev, cur) = (cur, (k - 1) * (cur + prev));
    }
    cur
}

/// Exact permanent of a square integer matrix: direct permutation sum for
/// n <= 10, Ryser's inclusion-exclusion with Gray-code subset iteration
/// beyond.
pub fn permanent(matrix: &[Vec<i128>]) -> i128 {
    let n = matrix.len();
    assert!(matrix.iter().all(|row| row.len() == n), "matrix must be square");
    assert!(n <= 24, "permanent computation limited to n <= 24");
    if n == 0 {
        return 1;
    }
    if n <= 10 {
        fn rec(matrix: &[Vec<i128>], row: usize, used: u32, acc: i128, total: &mut i128) {
            let n = matrix.len();
            if row == n {
                *total += acc;
                return;
            }
            for col in 0..n {
                if used >> col & 1 == 0 && matrix[row][col] != 0 {
                    rec(matrix, row + 1, used | 1 << col, acc * matrix[row][col], total);
                }
            }
        }
        let mut total = 0;
        rec(matrix, 0, 0, 1, &mut total);
        return total;
    }
    // Ryser: per(A) = (-1)^n sum over nonempty S of (-1)^|S| prod_i sum_{j in S} a_ij
    let mut row_sums = vec![0i128; n];
    let mut acc: i128 = 0;
    let mut prev_gray: u64 = 0;
    for k in 1u64..1 << n {
        let gray = k ^ (k >> 1);
        let diff = gray ^ prev_gray;
        let j = diff.trailing_zeros() as usize;
        let add = gray & diff != 0;
        for (i, row) in matrix.iter().enumerate() {
            if add {
                row_sums[i] += row[j];
            } else {
                row_sums[i] -= row[j];
            }
        }
        prev_gray = gray;
        let mut prod: i128 = 1;
        for &s in &row_sums {
            prod = prod.checked_mul(s).expect("permanent overflow");
        }
        if gray.count_ones() % 2 == 0 {
            acc -= prod;
        } else {
            acc += prod;
        }
    }
    if n % 2 == 0 {
        -acc
    } else {
        acc
    }
}

/// D_n± as the permanent of the n x n matrix with 1 on the diagonal and 2
/// everywhere else.
pub fn signed_derangement_count(n: u32) -> i128 {
    assert!(n <= 20, "signed derangement count limited to n <= 20");
    let matrix: Vec<Vec<i128>> = (0..n as usize)
        .map(|i| (0..n as usize).map(|j| if i == j { 1 } else { 2 }).collect())
        .collect();
    permanent(&matrix)
}

/// Brute-force count of signed permutations without fixed points
/// (no index i with pi_i = +i), enumerating all 2^n n! of them.
pub fn signed_derangement_oracle(n: u32) -> Result<i128, BijectionError> {
    if n > 8 {
        return Err(BijectionError::TooLarge(n));
    }
    let mut perms = Vec::new();
    let mut items: Vec<u32> = (1..=n).collect();
    crate::num::permutations(&mut items, 0, &mut perms);
    let mut count = 0i128;
    for perm in &perms {
        for sign_mask in 0u64..(1 << n) {
            let fixed = perm
                .iter()
                .enumerate()
                .any(|(i, &v)| sign_mask >> i & 1 == 0 && v as usize == i + 1);
            if !fixed {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Brute-force derangement count, for cross-checking the recurrence.
pub fn derangement_oracle(n: u32) -> Result<i128, BijectionError> {
    if n > 8 {
        return Err(BijectionError::TooLarge(n));
    }
    let mut perms = Vec::new();
    let mut items: Vec<u32> = (1..=n).collect();
    crate::num::permutations(&mut items, 0, &mut perms);
    Ok(perms
        .iter()
        .filter(|p| p.iter().enumerate().all(|(i, &v)| v as usize != i + 1))
        .count() as i128)
}

// ---------------------------------------------------------------------------
// nearest-integer checks with certified interval arithmetic

/// Lower/upper rational bounds p/q for a positive constant.
struct RatBounds {
    lo_num: i128,
    hi_num: i128,
    den: i128,
}

/// sqrt(e) = sum 2^-k / k! truncated at N = 13; the remainder is below
/// 2^-13 / 14! < 1e-14.
fn sqrt_e_bounds() -> RatBounds {
    let n_terms = 13u32;
    let den = pow2(n_terms) * crate::num::factorial(n_terms);
    let mut lo = 0i128;
    for k in 0..=n_terms {
        lo += den / (pow2(k) * crate::num::factorial(k));
    }
    RatBounds { lo_num: lo, hi_num: lo + 2, den }
}

/// e = sum 1/k! truncated at N = 16; remainder below 2/17! < 1e-14.
fn e_bounds() -> RatBounds {
    let n_terms = 16u32;
    let den = crate::num::factorial(n_terms);
    let mut lo = 0i128;
    for k in 0..=n_terms {
        lo += den / crate::num::factorial(k);
    }
    RatBounds { lo_num: lo, hi_num: lo + 2, den }
}

/// Certify whether m is the nearest integer to a / x for x in the given
/// bounds.  Returns None when the interval cannot decide (never happens at
/// the precision used here unless the true value sits on a half-integer).
fn certified_nearest(a: i128, m: i128, x: &RatBounds) -> Option<bool> {
    let chk = |l: i128, r: i128| l.checked_mul(r).expect("nearest-integer check overflow");
    // a/x > m - 1/2  iff  2 a den > (2m-1) x_num   (take x = hi for certainty)
    let above = chk(2 * a, x.den) > chk(2 * m - 1, x.hi_num);
    let below = chk(2 * a, x.den) < chk(2 * m + 1, x.lo_num);
    if above && below {
        return Some(true);
    }
    // certified outside
    let not_above = chk(2 * a, x.den) <= chk(2 * m - 1, x.lo_num);
    let not_below = chk(2 * a, x.den) >= chk(2 * m + 1, x.hi_num);
    if not_above || not_below {
        return Some(false);
    }
    None
}

#[derive(Debug, Clone)]
pub struct NearestIntCheck {
    pub n: u32,
    pub exact: i128,
    /// D_n± is the nearest integer to 2^n n! / sqrt(e).
    pub unshifted_holds: bool,
    /// D_n± is the nearest integer to 2^(n-1) (n-1)! / sqrt(e) (stated for
    /// n >= 1); this indexes one step behind the other formula.
    pub shifted_holds: Option<bool>,
    /// The shifted formula instead reproduces D_(n-1)±.
    pub shifted_matches_previous: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct NearestIntReport {
    pub checks: Vec<NearestIntCheck>,
    /// Width of the certified interval around sqrt(e).
    pub interval_width_bound: f64,
}

impl NearestIntReport {
    /// The intended reading holds: the unshifted formula is right for every
    /// n, and the shifted one reproduces the previous count.
    pub fn ok(&self) -> bool {
        self.checks
            .iter()
            .all(|c| c.unshifted_holds && c.shifted_matches_previous.unwrap_or(true))
    }
}

/// Verify both stated nearest-integer identities for D_n± against exact
/// permanents for 0 <= n <= n_max, reporting which indexing each matches.
pub fn nearest_integer_checks(n_max: u32) -> Result<NearestIntReport, BijectionError> {
    if n_max > 16 {
        return Err(BijectionError::TooLarge(n_max));
    }
    let sqrt_e = sqrt_e_bounds();
    let mut checks = Vec::new();
    for n in 0..=n_max {
        let exact = signed_derangement_count(n);
        let a = pow2(n) * crate::num::factorial(n);
        let unshifted_holds = certified_nearest(a, exact, &sqrt_e)
            .ok_or(BijectionError::PrecisionExhausted(n))?;
        let (shifted_holds, shifted_matches_previous) = if n >= 1 {
            let a_shift = pow2(n - 1) * crate::num::factorial(n - 1);
            let vs_self = certified_nearest(a_shift, exact, &sqrt_e)
                .ok_or(BijectionError::PrecisionExhausted(n))?;
            let vs_prev = certified_nearest(a_shift, signed_derangement_count(n - 1), &sqrt_e)
                .ok_or(BijectionError::PrecisionExhausted(n))?;
            (Some(vs_self), Some(vs_prev))
        } else {
            (None, None)
        };
        checks.push(NearestIntCheck {
            n,
            exact,
            unshifted_holds,
            shifted_holds,
            shifted_matches_previous,
        });
    }
    Ok(NearestIntReport { checks, interval_width_bound: 2.0 / (8192.0 * 8.7178e10) })
}

/// D_n is the nearest integer to n!/e for n >= 1, certified.
pub fn derangement_nearest_check(n: u32) -> Result<bool, BijectionError> {
    if n == 0 || n > 16 {
        return Err(BijectionError::TooLarge(n));
    }
    let e = e_bounds();
    certified_nearest(crate::num::factorial(n), derangement_count(n), &e)
        .ok_or(BijectionError::PrecisionExhausted(n))
}

// ---------------------------------------------------------------------------
// permutations in cycle form

/// A permutation written in disjoint cycles, kept in standard form: each
/// cycle starts at its minimum and cycles are sorted by minima.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationCycles {
    cycles: Vec<Vec<u32>>,
}

impl PermutationCycles {
    pub fn new(mut cycles: Vec<Vec<u32>>) -> Result<Self, BijectionError> {
        let mut seen = BTreeSet::new();
        for c in &cycles {
            if c.is_empty() {
                return Err(BijectionError::NotAPermutation);
            }
            for &x in c {
                if x == 0 || !seen.insert(x) {
                    return Err(BijectionError::NotAPermutation);
                }
            }
        }
        for c in &mut cycles {
            let min_pos = c.iter().enumerate().min_by_key(|&(_, v)| v).unwrap().0;
            c.rotate_left(min_pos);
        }
        cycles.sort_by_key(|c| c[0]);
        Ok(PermutationCycles { cycles })
    }

    pub fn cycles(&self) -> &[Vec<u32>] {
        &self.cycles
    }

    pub fn support(&self) -> BTreeSet<u32> {
        self.cycles.iter().flatten().copied().collect()
    }

    /// Cycles of a one-line permutation of 1..n, optionally keeping fixed
    /// points as 1-cycles.
    pub fn from_one_line(perm: &[u32], keep_fixed: bool) -> Result<Self, BijectionError> {
        let n = perm.len();
        let mut seen = vec![false; n];
        if perm.iter().any(|&v| v == 0 || v as usize > n) {
            return Err(BijectionError::NotAPermutation);
        }
        let mut cycles = Vec::new();
        for start in 1..=n as u32 {
            if seen[start as usize - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize - 1] = true;
            let mut cur = perm[start as usize - 1];
            while cur != start {
                if seen[cur as usize - 1] {
                    return Err(BijectionError::NotAPermutation);
                }
                seen[cur as usize - 1] = true;
                cycle.push(cur);
                cur = perm[cur as usize - 1];
            }
            if cycle.len() > 1 || keep_fixed {
                cycles.push(cycle);
            }
        }
        PermutationCycles::new(cycles)
    }

    pub fn is_fixed_point_free_on(&self, n: u32) -> bool {
        self.cycles.iter().all(|c| c.len() >= 2)
            && self.support() == (1..=n).collect::<BTreeSet<u32>>()
    }

    /// Parse "(135764928)" or "(16827)(3495)"; multi-digit entries need
    /// separators: "(1 6 8 2 7)(3 4 9 5)" or "(1,6,8,2,7)".
    pub fn parse(s: &str) -> Result<Self, BijectionError> {
        let mut cycles = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let open = rest.find('(').ok_or(BijectionError::NotAPermutation)?;
            let close = rest.find(')').ok_or(BijectionError::NotAPermutation)?;
            if open != 0 || close < open {
                return Err(BijectionError::NotAPermutation);
            }
            let body = &rest[1..close];
            let cycle: Vec<u32> = if body.contains(|c: char| c == ',' || c.is_whitespace()) {
                body.split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse().map_err(|_| BijectionError::NotAPermutation))
                    .collect::<Result<_, _>>()?
            } else {
                body.chars()
                    .map(|c| c.to_digit(10).ok_or(BijectionError::NotAPermutation))
                    .collect::<Result<_, _>>()?
            };
            cycles.push(cycle);
            rest = rest[close + 1..].trim_start();
        }
        PermutationCycles::new(cycles)
    }

    pub fn render(&self) -> String {
        let compact = self.cycles.iter().flatten().all(|&v| v <= 9);
        let mut out = String::new();
        for c in &self.cycles {
            out.push('(');
            for (i, v) in c.iter().enumerate() {
                if i > 0 && !compact {
                    out.push(' ');
                }
                out.push_str(&format!("{v}"));
            }
            out.push(')');
        }
        out
    }
}

impl fmt::Display for PermutationCycles {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// All fixed-point-free permutations of 1..n in cycle form.
pub fn fixed_point_free_perms(n: u32) -> Result<Vec<PermutationCycles>, BijectionError> {
    if n > 8 {
        return Err(BijectionError::TooLarge(n));
    }
    let mut perms = Vec::new();
    let mut items: Vec<u32> = (1..=n).collect();
    crate::num::permutations(&mut items, 0, &mut perms);
    perms
        .iter()
        .filter(|p| p.iter().enumerate().all(|(i, &v)| v as usize != i + 1))
        .map(|p| PermutationCycles::from_one_line(p, false))
        .collect()
}

// ---------------------------------------------------------------------------
// barred words and skew hook diagrams

/// An unsigned barred word: the reading word of a labeled skew hook diagram.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BarredWord {
    letters: Vec<(u32, bool)>,
}

impl BarredWord {
    pub fn new(letters: Vec<(u32, bool)>) -> Self {
        BarredWord { letters }
    }

    pub fn letters(&self) -> &[(u32, bool)] {
        &self.letters
    }

    /// Hooks are the maximal runs of unbarred letters followed by barred
    /// letters; a hook boundary sits at every barred-to-unbarred step.
    pub fn hooks(&self) -> Vec<Vec<(u32, bool)>> {
        let mut hooks = Vec::new();
        let mut cur: Vec<(u32, bool)> = Vec::new();
        for &(v, barred) in &self.letters {
            if let Some(&(_, prev_barred)) = cur.last() {
                if prev_barred && !barred {
                    hooks.push(core::mem::take(&mut cur));
                }
            }
            cur.push((v, barred));
        }
        if !cur.is_empty() {
            hooks.push(cur);
        }
        hooks
    }

    pub fn shape(&self) -> SkewHookDiagram {
        SkewHookDiagram {
            hooks: self
                .hooks()
                .iter()
                .map(|h| {
                    let b = h.iter().filter(|&&(_, barred)| barred).count() as u32;
                    Hook { u: h.len() as u32 - b, b }
                })
                .collect(),
        }
    }

    /// Render as `8 |7| |2| 6 |1| 9 |5| 4 |3|`.
    pub fn render(&self) -> String {
        self.letters
            .iter()
            .map(|&(v, barred)| if barred { format!("|{v}|") } else { format!("{v}") })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn parse(s: &str) -> Result<Self, BijectionError> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let (body, barred) = match tok.strip_prefix('|').and_then(|t| t.strip_suffix('|')) {
                Some(body) => (body, true),
                None => (tok, false),
            };
            let v: u32 = body.parse().map_err(|_| BijectionError::NotAPermutation)?;
            letters.push((v, barred));
        }
        Ok(BarredWord { letters })
    }
}

impl fmt::Display for BarredWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// One hook: u horizontal boxes before the corner plus b vertical boxes
/// (corner included), so u + b boxes in total.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Hook {
    pub u: u32,
    pub b: u32,
}

/// A disjoint union of hooks meeting corner to corner: the skew shape
/// lambda/mu of the falling-chain combinatorics.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SkewHookDiagram {
    pub hooks: Vec<Hook>,
}

impl SkewHookDiagram {
    pub fn n_boxes(&self) -> u32 {
        self.hooks.iter().map(|h| h.u + h.b).sum()
    }

    /// u1 >= 0, u_i > 0 for i >= 2, b_i > 0 throughout.
    pub fn is_valid(&self) -> bool {
        !self.hooks.is_empty()
            && self.hooks.iter().all(|h| h.b >= 1)
            && self.hooks.iter().skip(1).all(|h| h.u >= 1)
    }

    /// Box coordinates (row, col) in reading order: each hook's row left to
    /// right, then its leg top to bottom; hooks descend to the southeast.
    pub fn cells(&self) -> Vec<(u32, u32)> {
        let mut cells = Vec::new();
        let (mut row, mut col) = (0u32, 0u32);
        for h in &self.hooks {
            for c in 0..=h.u {
                cells.push((row, col + c));
            }
            for r in 1..h.b {
                cells.push((row + r, col + h.u));
            }
            row += h.b;
            col += h.u + 1;
        }
        cells
    }

    /// The partition pair (lambda, mu) with rows listed shortest first.
    pub fn lambda_mu(&self) -> (Vec<u32>, Vec<u32>) {
        let mut lambda = Vec::new();
        let mut mu = Vec::new();
        let mut cum_u = 0;
        for (i, h) in self.hooks.iter().enumerate() {
            cum_u += h.u;
            let width = cum_u + i as u32 + 1;
            for _ in 0..h.b {
                lambda.push(width);
            }
            if i + 1 < self.hooks.len() {
                for _ in 0..h.b - 1 {
                    mu.push(width - 1);
                }
                mu.push(width);
            } else {
                for _ in 0..h.b - 1 {
                    mu.push(width - 1);
                }
            }
        }
        (lambda, mu)
    }
}

/// A labeling of a diagram's boxes in reading order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardFilling {
    pub diagram: SkewHookDiagram,
    pub labels: Vec<i64>,
}

impl StandardFilling {
    /// Standard: strictly decreasing along rows (left to right) and columns
    /// (top to bottom).
    pub fn is_standard(&self) -> bool {
        let cells = self.diagram.cells();
        if cells.len() != self.labels.len() {
            return false;
        }
        let by_pos: BTreeMap<(u32, u32), i64> =
            cells.iter().copied().zip(self.labels.iter().copied()).collect();
        by_pos.iter().all(|(&(r, c), &v)| {
            by_pos.get(&(r, c + 1)).is_none_or(|&right| v > right)
                && by_pos.get(&(r + 1, c)).is_none_or(|&below| v > below)
        })
    }
}

/// Shape of a falling signed word: one hook per block, u unbarred letters
/// and b barred letters.
pub fn word_shape(word: &Word) -> SkewHookDiagram {
    let as_barred =
        BarredWord::new(word.letters().iter().map(|l| (l.value.unsigned_abs(), l.barred)).collect());
    as_barred.shape()
}

/// The double augmented filling of a falling word: a 0 box prepends the
/// first hook's row and an n+1 box forms a final one-box hook.
pub fn augmented_filling(word: &Word) -> StandardFilling {
    let shape = word_shape(word);
    let mut hooks = shape.hooks;
    hooks[0].u += 1;
    hooks.push(Hook { u: 0, b: 1 });
    let mut labels = vec![0i64];
    labels.extend(word.letters().iter().map(|l| l.value as i64));
    labels.push(word.n() as i64 + 1);
    StandardFilling { diagram: SkewHookDiagram { hooks }, labels }
}

// ---------------------------------------------------------------------------
// the bijection between fixed-point-free permutations and diagrams

/// Forward map: fixed-point-free permutation in standard cycle form to the
/// barred word of a standard skew diagram whose hooks all have size > 1.
pub fn cycles_to_diagram(pi: &PermutationCycles) -> Result<BarredWord, BijectionError> {
    if let Some(c) = pi.cycles.iter().find(|c| c.len() < 2) {
        return Err(BijectionError::FixedPoint(c[0]));
    }
    let mut letters = Vec::new();
    for cycle in &pi.cycles {
        letters.extend(cycle_to_barred(cycle));
    }
    Ok(BarredWord::new(letters))
}

fn cycle_to_barred(cycle: &[u32]) -> Vec<(u32, bool)> {
    // Split into blocks, inverting the reverse algorithm: every non-first
    // block reads as a lead element followed by a strictly ascending run,
    // and the first block as the cycle minimum, a lead, then an ascending
    // run.  Stripping the maximal ascending suffix together with the element
    // before it is forced, so the decomposition is unique; blocks come off
    // right to left, which is the order the output wants anyway.
    let mut blocks: Vec<&[u32]> = Vec::new();
    let mut rest: &[u32] = cycle;
    loop {
        let s = rest.len();
        let first_block_ready = !(2..s - 1).any(|i| rest[i] > rest[i + 1]);
        if first_block_ready {
            break;
        }
        let mut start = s - 1;
        while start > 0 && rest[start - 1] < rest[start] {
            start -= 1;
        }
        // a descent exists beyond index 1, so the suffix starts at index >= 3
        debug_assert!(start >= 3);
        blocks.push(&rest[start - 1..]);
        rest = &rest[..start - 1];
    }
    blocks.push(rest);

    let mut out = Vec::new();
    let n_blocks = blocks.len();
    for (pos, block) in blocks.iter().enumerate() {
        // the lead element's rank among the block determines the bar count;
        // the first block (emitted last) uses its second element as lead
        let lead = if pos + 1 == n_blocks { block[1] } else { block[0] };
        let mut sorted: Vec<u32> = block.to_vec();
        sorted.sort_unstable();
        let j = sorted.iter().position(|&v| v == lead).unwrap() + 1;
        let mut desc = sorted;
        desc.reverse();
        let k = desc.len();
        out.extend(desc.into_iter().enumerate().map(|(p, v)| (v, p >= k - (j - 1))));
    }
    out
}

/// Reverse map: barred word of a standard diagram (all hooks of size > 1,
/// each with at least one unbarred and one barred letter) back to the
/// permutation in standard cycle form.
pub fn diagram_to_cycles(word: &BarredWord) -> Result<PermutationCycles, BijectionError> {
    let hooks = word.hooks();
    if hooks.is_empty() {
        return Err(BijectionError::MalformedFilling("empty word".into()));
    }
    for h in &hooks {
        if h.len() < 2 {
            return Err(BijectionError::MalformedFilling("hook of size one".into()));
        }
        if h.iter().all(|&(_, barred)| barred) || !h.last().unwrap().1 {
            return Err(BijectionError::MalformedFilling(
                "each hook needs unbarred then barred letters".into(),
            ));
        }
        if h.windows(2).any(|w| w[0].0 <= w[1].0) {
            return Err(BijectionError::MalformedFilling("hook labels must decrease".into()));
        }
    }
    // split the hook list into cycle pieces at running minima
    let mut pieces: Vec<&[Vec<(u32, bool)>]> = Vec::new();
    let mut start = 0;
    while start < hooks.len() {
        let min = hooks[start..].iter().flatten().map(|&(v, _)| v).min().unwrap();
        let end = hooks[start..]
            .iter()
            .position(|h| h.iter().any(|&(v, _)| v == min))
            .unwrap()
            + start;
        pieces.push(&hooks[start..=end]);
        start = end + 1;
    }
    let mut cycles = Vec::new();
    for piece in pieces {
        let mut seqs: Vec<Vec<u32>> = Vec::new();
        for hook in piece.iter().rev() {
            let j = hook.iter().filter(|&&(_, barred)| barred).count();
            let mut ms: Vec<u32> = hook.iter().map(|&(v, _)| v).collect();
            ms.sort_unstable();
            let k = ms.len();
            let mut seq = Vec::with_capacity(k);
            if j < k {
                seq.push(ms[0]);
                seq.push(ms[j]);
                for (pos, &m) in ms.iter().enumerate().skip(1) {
                    if pos != j {
                        seq.push(m);
                    }
                }
            } else {
                seq.push(ms[0]);
                seq.push(ms[k - 1]);
                seq.extend_from_slice(&ms[1..k - 1]);
            }
            seqs.push(seq);
        }
        let mut cycle = Vec::new();
        for (qi, mut seq) in seqs.into_iter().enumerate() {
            if qi > 0 {
                seq.swap(0, 1);
            }
            cycle.extend(seq);
        }
        cycles.push(cycle);
    }
    PermutationCycles::new(cycles)
}

// ---------------------------------------------------------------------------
// the F_pi construction

/// One of the n ordered pairs built from a permutation pi in S_(n-1) with
/// fixed-point set F: the decorated first-hook data and the partial
/// permutation tau on [n] - F_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FPair {
    pub i: u32,
    /// F_i = F ∪ {i} (i not fixed) or F ∪ {n} (i fixed).
    pub f_i: BTreeSet<u32>,
    /// Bars go over this many smallest elements of F_i.
    pub bar_count: u32,
    /// tau = Psi(pi-hat) as mapping pairs on [n] - F_i, sorted by source.
    pub tau: Vec<(u32, u32)>,
}

/// The n ordered pairs (F_i, tau) for pi given in one-line form on 1..n-1.
pub fn f_pi_family(pi: &[u32]) -> Result<Vec<FPair>, BijectionError> {
    let m = pi.len() as u32;
    let n = m + 1;
    let fixed: BTreeSet<u32> =
        (1..=m).filter(|&x| pi[x as usize - 1] == x).collect();
    let moved: Vec<u32> = (1..=m).filter(|x| !fixed.contains(x)).collect();
    let mut out = Vec::with_capacity(n as usize);
    for i in 1..=n {
        let in_f = fixed.contains(&i);
        let mut f_i = fixed.clone();
        let bar_count = if in_f {
            f_i.insert(n);
            fixed.iter().position(|&f| f == i).unwrap() as u32 + 1
        } else {
            f_i.insert(i);
            f_i.iter().filter(|&&x| x <= i).count() as u32
        };
        // Psi maps the moved elements, in order, onto [n] - F_i in order
        let targets: Vec<u32> = (1..=n).filter(|x| !f_i.contains(x)).collect();
        debug_assert_eq!(targets.len(), moved.len());
        let psi: BTreeMap<u32, u32> = moved.iter().copied().zip(targets.iter().copied()).collect();
        let tau: Vec<(u32, u32)> =
            moved.iter().map(|&x| (psi[&x], psi[&pi[x as usize - 1]])).collect();
        out.push(FPair { i, f_i, bar_count, tau });
    }
    Ok(out)
}

/// The labeled diagram of one pair: the first hook lists F_i in decreasing
/// order with bars over its `bar_count` smallest elements; the rest is the
/// diagram of tau relabeled through its order-preserving standardization.
pub fn f_pi_to_diagram(pair: &FPair) -> Result<BarredWord, BijectionError> {
    let k = pair.f_i.len();
    let mut letters: Vec<(u32, bool)> = pair
        .f_i
        .iter()
        .rev()
        .enumerate()
        .map(|(pos, &v)| (v, pos >= k - pair.bar_count as usize))
        .collect();
    if !pair.tau.is_empty() {
        let support: Vec<u32> = pair.tau.iter().map(|&(x, _)| x).collect();
        let rank_of: BTreeMap<u32, u32> =
            support.iter().enumerate().map(|(p, &x)| (x, p as u32 + 1)).collect();
        let unrank: Vec<u32> = support.clone();
        // standardize tau to a fixed-point-free permutation of 1..|support|
        let std_one_line: Vec<u32> = pair.tau.iter().map(|&(_, y)| rank_of[&y]).collect();
        let cycles = PermutationCycles::from_one_line(&std_one_line, false)?;
        if !cycles.is_fixed_point_free_on(support.len() as u32) {
            return Err(BijectionError::NotAPermutation);
        }
        let std_word = cycles_to_diagram(&cycles)?;
        letters.extend(
            std_word.letters().iter().map(|&(v, barred)| (unrank[v as usize - 1], barred)),
        );
    }
    Ok(BarredWord::new(letters))
}

/// Inverse of [`f_pi_to_diagram`]: recover (i, F_i, bar count, tau) from a
/// labeled diagram with unconstrained first hook and later hooks of size > 1.
pub fn f_pi_from_diagram(word: &BarredWord, n: u32) -> Result<FPair, BijectionError> {
    let hooks = word.hooks();
    if hooks.is_empty() {
        return Err(BijectionError::MalformedFilling("empty word".into()));
    }
    let first = &hooks[0];
    if first.windows(2).any(|w| w[0].0 <= w[1].0) {
        return Err(BijectionError::MalformedFilling("first hook must decrease".into()));
    }
    let f_i: BTreeSet<u32> = first.iter().map(|&(v, _)| v).collect();
    let bar_count = first.iter().filter(|&&(_, barred)| barred).count() as u32;
    if bar_count == 0 {
        return Err(BijectionError::MalformedFilling("first hook needs a bar".into()));
    }
    // bars must sit over the smallest elements
    if first.iter().rev().take(bar_count as usize).any(|&(_, barred)| !barred) {
        return Err(BijectionError::MalformedFilling("bars must cover a downward-closed set".into()));
    }
    let i = if f_i.contains(&n) && bar_count < f_i.len() as u32 {
        // shifted case: F = F_i - {n}, i is the bar_count-th smallest of F
        *f_i.iter().filter(|&&x| x != n).nth(bar_count as usize - 1).unwrap()
    } else {
        *f_i.iter().nth(bar_count as usize - 1).unwrap()
    };
    let rest: Vec<(u32, bool)> =
        hooks.iter().skip(1).flat_map(|h| h.iter().copied()).collect();
    let tau = if rest.is_empty() {
        Vec::new()
    } else {
        let rest_word = BarredWord::new(rest);
        let mut support: Vec<u32> = rest_word.letters().iter().map(|&(v, _)| v).collect();
        support.sort_unstable();
        let rank_of: BTreeMap<u32, u32> =
            support.iter().enumerate().map(|(p, &x)| (x, p as u32 + 1)).collect();
        let std_word = BarredWord::new(
            rest_word.letters().iter().map(|&(v, barred)| (rank_of[&v], barred)).collect(),
        );
        let cycles = diagram_to_cycles(&std_word)?;
        let mut tau: Vec<(u32, u32)> = Vec::new();
        for c in cycles.cycles() {
            for (p, &x) in c.iter().enumerate() {
                let y = c[(p + 1) % c.len()];
                tau.push((support[x as usize - 1], support[y as usize - 1]));
            }
        }
        tau.sort_unstable();
        tau
    };
    Ok(FPair { i, f_i, bar_count, tau })
}

/// |falling words| = n * D±_(n-1), assembled from the F_pi bijection: every
/// pair contributes a diagram whose non-first hooks can be signed freely.
pub fn count_falling_via_bijection(n: u32) -> Result<i128, BijectionError> {
    if n == 0 || n > 9 {
        return Err(BijectionError::TooLarge(n));
    }
    let mut perms = Vec::new();
    let mut items: Vec<u32> = (1..=n - 1).collect();
    crate::num::permutations(&mut items, 0, &mut perms);
    let mut seen = BTreeSet::new();
    let mut total: i128 = 0;
    for perm in &perms {
        for pair in f_pi_family(perm)? {
            let diagram = f_pi_to_diagram(&pair)?;
            let shape = diagram.shape();
            if !shape.is_valid() || shape.hooks.iter().skip(1).any(|h| h.u + h.b < 2) {
                return Err(BijectionError::MalformedFilling(format!(
                    "bad family diagram {diagram}"
                )));
            }
            if !seen.insert(diagram) {
                return Err(BijectionError::MalformedFilling("duplicate diagram".into()));
            }
            let first_hook_size = pair.f_i.len() as u32;
            total += pow2(n - first_hook_size);
        }
    }
    debug_assert_eq!(seen.len() as i128, crate::num::factorial(n));
    let expected = n as i128 * signed_derangement_count(n - 1);
    if total != expected {
        return Err(BijectionError::MalformedFilling(format!(
            "bijection count {total} != n * D± = {expected}"
        )));
    }
    Ok(total)
}

/// Number of augmented unsigned barred falling words (the Boolean algebra
/// case): diagrams with every hook of size at least 2, counted through their
/// standard fillings; equals D_n.
pub fn jonsson_count(n: u32) -> i128 {
    let mut acc: i128 = 0;
    for comp in compositions(n) {
        if comp.iter().any(|&c| c < 2) {
            continue;
        }
        let mut term = multinomial(n, &comp);
        for &c in &comp {
            term *= (c - 1) as i128;
        }
        acc += term;
    }
    acc
}
