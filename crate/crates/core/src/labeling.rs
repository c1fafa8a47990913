//! The Rees product of the cubical lattice with the chain, its edge
//! labeling, R-labeling verification, falling-chain machinery on double
//! augmented barred signed permutations, and the closed-form Möbius values.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::num::{binomial, compositions, factorial, multinomial, pow2};
use crate::poset::GradedPoset;
use crate::zoo::{cube_word, stars, word_label, STAR};

/// Elements of Rees(cube lattice, chain): a bottom, a top, and pairs
/// (face word, chain index) with 1 <= i <= (number of stars) + 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum CubeChainElem {
    Bottom,
    Pair(Vec<u8>, u32),
    Top,
}

/// Rees(cube lattice of dimension n, (n+1)-chain) with elements kept in
/// their (word, index) form, built directly from the cover rules.  A test
/// checks this agrees with the generic bounded Rees construction.
pub struct ReesCubeChain {
    pub n: u32,
    pub poset: GradedPoset,
    elems: Vec<CubeChainElem>,
    pair_index: BTreeMap<(Vec<u8>, u32), usize>,
}

impl ReesCubeChain {
    pub fn new(n: u32) -> Self {
        assert!((1..=8).contains(&n), "Rees cube-chain poset supported for 1 <= n <= 8");
        let mut elems = vec![CubeChainElem::Bottom];
        for w in 0..3usize.pow(n) {
            let word = cube_word(w, n);
            let k = stars(&word) + 1;
            for i in 1..=k {
                elems.push(CubeChainElem::Pair(word.clone(), i));
            }
        }
        elems.push(CubeChainElem::Top);
        // deterministic ids: by rank, then word, then chain index
        elems.sort_by_key(|e| match e {
            CubeChainElem::Bottom => (0, Vec::new(), 0),
            CubeChainElem::Pair(w, i) => (stars(w) + 1, w.clone(), *i),
            CubeChainElem::Top => (n + 2, Vec::new(), 0),
        });
        let mut pair_index = BTreeMap::new();
        for (id, e) in elems.iter().enumerate() {
            if let CubeChainElem::Pair(w, i) = e {
                pair_index.insert((w.clone(), *i), id);
            }
        }
        let top_id = elems.len() - 1;

        let mut ranks = Vec::with_capacity(elems.len());
        let mut labels = Vec::with_capacity(elems.len());
        let mut covers = Vec::new();
        for (id, e) in elems.iter().enumerate() {
            match e {
                CubeChainElem::Bottom => {
                    ranks.push(0);
                    labels.push(String::from("bot"));
                }
                CubeChainElem::Top => {
                    ranks.push(n + 2);
                    labels.push(String::from("top"));
                }
                CubeChainElem::Pair(word, i) => {
                    let k = stars(word) + 1;
                    ranks.push(k);
                    labels.push(format!("({},{})", word_label(word), i));
                    if k == 1 && *i == 1 {
                        covers.push((0, id));
                    }
                    if k == n + 1 {
                        covers.push((id, top_id));
                    }
                    for pos in 0..n as usize {
                        if word[pos] != STAR {
                            let mut up = word.clone();
                            up[pos] = STAR;
                            for j in [*i, *i + 1] {
                                let up_id = pair_index_get(&pair_index, &up, j);
                                covers.push((id, up_id));
                            }
                        }
                    }
                }
            }
        }
        let poset = GradedPoset::from_covers(ranks, &covers, labels)
            .expect("Rees cube-chain construction")
            .expect_valid("Rees(cube, chain)");
        ReesCubeChain { n, poset, elems, pair_index }
    }

    pub fn elem(&self, id: usize) -> &CubeChainElem {
        &self.elems[id]
    }

    pub fn lookup_pair(&self, word: &[u8], i: u32) -> Option<usize> {
        self.pair_index.get(&(word.to_vec(), i)).copied()
    }

    pub fn bottom(&self) -> usize {
        self.poset.bottom().unwrap()
    }

    pub fn top(&self) -> usize {
        self.poset.top().unwrap()
    }

    /// The label table lambda on all Hasse covers.
    pub fn edge_labels(&self) -> BTreeMap<(usize, usize), EdgeLabel> {
        self.poset
            .covers()
            .map(|(a, b)| ((a, b), self.edge_label(a, b).expect("cover must be labelable")))
            .collect()
    }

    /// The label of a single Hasse cover; errors when no labeling rule
    /// applies, which would signal a construction bug.
    pub fn edge_label(&self, lo: usize, hi: usize) -> Result<EdgeLabel, LabelError> {
        match (&self.elems[lo], &self.elems[hi]) {
            (CubeChainElem::Bottom, CubeChainElem::Pair(w, 1)) if stars(w) == 0 => {
                Ok(EdgeLabel { value: 0, bar: false })
            }
            (CubeChainElem::Pair(w, _), CubeChainElem::Top) if stars(w) == self.n => {
                Ok(EdgeLabel { value: self.n as i32 + 1, bar: false })
            }
            (CubeChainElem::Pair(w, i), CubeChainElem::Pair(y, j)) => {
                if !(j == i || *j == i + 1) {
                    return Err(LabelError::NotACover(lo, hi));
                }
                let mut pos = None;
                for a in 0..self.n as usize {
                    match (w[a], y[a]) {
                        (x, y) if x == y => {}
                        (d, s) if s == STAR && d != STAR && pos.is_none() => pos = Some((a, d)),
                        _ => return Err(LabelError::NotACover(lo, hi)),
                    }
                }
                let (a, digit) = pos.ok_or(LabelError::NotACover(lo, hi))?;
                let magnitude = a as i32 + 1;
                Ok(EdgeLabel {
                    value: if digit == 1 { magnitude } else { -magnitude },
                    bar: *j == i + 1,
                })
            }
            _ => Err(LabelError::NotACover(lo, hi)),
        }
    }

    /// Convert a maximal chain (bottom to top, n+3 element ids) into its
    /// double augmented barred signed permutation of labels.
    pub fn chain_to_word(&self, chain: &[usize]) -> Result<Word, LabelError> {
        if chain.len() != self.n as usize + 3 {
            return Err(LabelError::NotMaximalChain);
        }
        let mut letters = Vec::with_capacity(self.n as usize);
        for (step, pair) in chain.windows(2).enumerate() {
            let label = self.edge_label(pair[0], pair[1])?;
            match step {
                0 => {
                    if label != (EdgeLabel { value: 0, bar: false }) {
                        return Err(LabelError::NotMaximalChain);
                    }
                }
                s if s == self.n as usize + 1 => {
                    if label != (EdgeLabel { value: self.n as i32 + 1, bar: false }) {
                        return Err(LabelError::NotMaximalChain);
                    }
                }
                _ => letters.push(Letter { value: label.value, barred: label.bar }),
            }
        }
        Word::new(self.n, letters).map_err(LabelError::BadWord)
    }

    /// The maximal chain (bottom to top) labeled by the word: start from the
    /// 0/1 word given by the signs, star positions in word order, and
    /// increment the chain coordinate at barred steps.
    pub fn word_to_chain(&self, word: &Word) -> Result<Vec<usize>, LabelError> {
        if word.n != self.n {
            return Err(LabelError::BadWord(WordError::WrongLength));
        }
        let n = self.n as usize;
        // atom coordinates: position a carries 1 exactly when the letter of
        // magnitude a is positive
        let mut face = vec![0u8; n];
        for letter in word.letters() {
            if letter.value > 0 {
                face[letter.value.unsigned_abs() as usize - 1] = 1;
            }
        }
        let mut chain = vec![self.bottom()];
        let mut idx = 1u32;
        chain.push(self.lookup_pair(&face, idx).ok_or(LabelError::NotMaximalChain)?);
        for letter in word.letters() {
            face[letter.value.unsigned_abs() as usize - 1] = STAR;
            if letter.barred {
                idx += 1;
            }
            chain.push(self.lookup_pair(&face, idx).ok_or(LabelError::NotMaximalChain)?);
        }
        chain.push(self.top());
        Ok(chain)
    }

    /// The proper-part chain m_sigma (atom to coatom, n+1 ids).
    pub fn m_sigma(&self, word: &Word) -> Result<Vec<usize>, LabelError> {
        let full = self.word_to_chain(word)?;
        Ok(full[1..full.len() - 1].to_vec())
    }
}

fn pair_index_get(index: &BTreeMap<(Vec<u8>, u32), usize>, word: &[u8], i: u32) -> usize {
    *index.get(&(word.to_vec(), i)).expect("pair must exist")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabelError {
    NotACover(usize, usize),
    NotMaximalChain,
    BadWord(WordError),
}

impl core::error::Error for LabelError {}

impl fmt::Display for LabelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LabelError::NotACover(a, b) => write!(f, "({a}, {b}) is not a labelable cover"),
            LabelError::NotMaximalChain => write!(f, "not a maximal chain of the poset"),
            LabelError::BadWord(e) => write!(f, "bad word: {e}"),
        }
    }
}

/// Edge label (value, bar bit), ordered by the product order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct EdgeLabel {
    pub value: i32,
    pub bar: bool,
}

impl EdgeLabel {
    /// Product order on {0, ±1, ..., ±n, n+1} x {0, 1}.
    pub fn leq(self, other: EdgeLabel) -> bool {
        self.value <= other.value && self.bar <= other.bar
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordError {
    WrongLength,
    NotSignedPermutation,
}

impl core::error::Error for WordError {}

impl fmt::Display for WordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordError::WrongLength => write!(f, "expected one letter per position 1..n"),
            WordError::NotSignedPermutation => {
                write!(f, "letter magnitudes must form a permutation of 1..n")
            }
        }
    }
}

/// An inner letter of a double augmented barred signed permutation: a signed
/// magnitude with an optional bar.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Letter {
    pub value: i32,
    pub barred: bool,
}

/// Double augmented barred signed permutation 0 π1...πn n+1.  The fixed
/// endpoints are implicit; only the inner letters are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    n: u32,
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(n: u32, letters: Vec<Letter>) -> Result<Self, WordError> {
        if letters.len() != n as usize {
            return Err(WordError::WrongLength);
        }
        let mut seen = vec![false; n as usize];
        for l in &letters {
            let mag = l.value.unsigned_abs() as usize;
            if l.value == 0 || mag > n as usize || seen[mag - 1] {
                return Err(WordError::NotSignedPermutation);
            }
            seen[mag - 1] = true;
        }
        Ok(Word { n, letters })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Entry at position 0..=n+1 including the augmented endpoints.
    pub fn full(&self, i: usize) -> Letter {
        if i == 0 {
            Letter { value: 0, barred: false }
        } else if i == self.n as usize + 1 {
            Letter { value: self.n as i32 + 1, barred: false }
        } else {
            self.letters[i - 1]
        }
    }

    /// Falling test: an unbarred entry needs a descent after it; a barred
    /// entry needs either an unbarred successor or a descent.  Descents
    /// compare signed magnitudes (bars removed, signs kept).
    pub fn is_falling(&self) -> bool {
        (0..=self.n as usize).all(|i| {
            let a = self.full(i);
            let b = self.full(i + 1);
            if a.barred {
                !b.barred || a.value > b.value
            } else {
                a.value > b.value
            }
        })
    }

    /// Render as space-separated entries with |x| marking bars, including
    /// the augmented endpoints: `0 -3 |-4| 2 |-1| 5`.
    pub fn render(&self) -> String {
        let mut parts = vec![String::from("0")];
        for l in &self.letters {
            if l.barred {
                parts.push(format!("|{}|", l.value));
            } else {
                parts.push(l.value.to_string());
            }
        }
        parts.push((self.n + 1).to_string());
        parts.join(" ")
    }

    /// Parse the `render` format (the augmented endpoints are required).
    pub fn parse(s: &str) -> Result<Word, WordError> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        if tokens.len() < 3 {
            return Err(WordError::WrongLength);
        }
        let n = tokens.len() as u32 - 2;
        if tokens[0] != "0" || tokens[tokens.len() - 1] != (n + 1).to_string() {
            return Err(WordError::WrongLength);
        }
        let mut letters = Vec::with_capacity(n as usize);
        for tok in &tokens[1..tokens.len() - 1] {
            let (body, barred) = match tok.strip_prefix('|').and_then(|t| t.strip_suffix('|')) {
                Some(body) => (body, true),
                None => (*tok, false),
            };
            let value: i32 = body.parse().map_err(|_| WordError::NotSignedPermutation)?;
            letters.push(Letter { value, barred });
        }
        Word::new(n, letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// The total order on falling words: at the first disagreement in the bar
/// pattern the barred word is greater; with identical bar patterns, compare
/// the de-barred signed words lexicographically.
pub fn falling_cmp(a: &Word, b: &Word) -> Ordering {
    assert_eq!(a.n, b.n);
    for (la, lb) in a.letters.iter().zip(&b.letters) {
        match (la.barred, lb.barred) {
            (true, false) => return Ordering::Greater,
            (false, true) => return Ordering::Less,
            _ => {}
        }
    }
    for (la, lb) in a.letters.iter().zip(&b.letters) {
        match la.value.cmp(&lb.value) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    Ordering::Equal
}

/// All falling words for the given n, enumerated by composition blocks and
/// returned sorted ascending in the [`falling_cmp`] order.
pub fn falling_words(n: u32) -> Vec<Word> {
    assert!((1..=7).contains(&n), "falling word enumeration supported for 1 <= n <= 7");
    let mut out = Vec::new();
    for comp in compositions(n) {
        if comp.iter().skip(1).any(|&c| c < 2) {
            continue;
        }
        let all: Vec<u32> = (1..=n).collect();
        distribute_blocks(&comp, &all, &mut Vec::new(), &mut out);
    }
    out.sort_by(falling_cmp);
    out
}

/// Number of falling words, by the composition sum (no enumeration):
/// sum over compositions c of n of 2^(n-c1) multinomial(n; c) c1 prod(ci-1).
pub fn falling_count(n: u32) -> i128 {
    let mut acc: i128 = 0;
    for comp in compositions(n) {
        let mut term = pow2(n - comp[0]) * multinomial(n, &comp) * comp[0] as i128;
        for &c in comp.iter().skip(1) {
            term *= (c - 1) as i128;
        }
        acc += term;
    }
    acc
}

fn distribute_blocks(comp: &[u32], avail: &[u32], blocks: &mut Vec<Vec<u32>>, out: &mut Vec<Word>) {
    if comp.is_empty() {
        emit_words(blocks, out);
        return;
    }
    let take = comp[0] as usize;
    // choose `take` magnitudes out of avail
    let mut idxs: Vec<usize> = (0..take).collect();
    loop {
        let chosen: Vec<u32> = idxs.iter().map(|&i| avail[i]).collect();
        let rest: Vec<u32> = avail
            .iter()
            .enumerate()
            .filter(|&(i, _)| !idxs.contains(&i))
            .map(|(_, &v)| v)
            .collect();
        blocks.push(chosen);
        distribute_blocks(&comp[1..], &rest, blocks, out);
        blocks.pop();
        // next combination
        let mut i = take;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idxs[i] != i + avail.len() - take {
                idxs[i] += 1;
                for j in i + 1..take {
                    idxs[j] = idxs[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn emit_words(blocks: &[Vec<u32>], out: &mut Vec<Word>) {
    let n: u32 = blocks.iter().map(|b| b.len() as u32).sum();
    let c1 = blocks[0].len();
    let free = (n as usize) - c1;
    // sign masks over the non-first-block magnitudes (first block is all
    // negative), then bar split points per block
    for mask in 0u64..(1u64 << free) {
        let mut sign_of = BTreeMap::new();
        for m in &blocks[0] {
            sign_of.insert(*m, -1i32);
        }
        let mut bit = 0;
        for block in &blocks[1..] {
            for m in block {
                sign_of.insert(*m, if mask >> bit & 1 == 1 { -1 } else { 1 });
                bit += 1;
            }
        }
        // per-block signed values in decreasing order
        let signed_blocks: Vec<Vec<i32>> = blocks
            .iter()
            .map(|b| {
                let mut vals: Vec<i32> = b.iter().map(|&m| sign_of[&m] * m as i32).collect();
                vals.sort_unstable_by(|a, b| b.cmp(a));
                vals
            })
            .collect();
        // bar split choices: the first block may start bars anywhere (>= 1
        // bar); later blocks keep their first letter unbarred
        let choices: Vec<Vec<usize>> = signed_blocks
            .iter()
            .enumerate()
            .map(|(bi, b)| {
                let lo = 1;
                let hi = if bi == 0 { b.len() } else { b.len() - 1 };
                (lo..=hi).collect()
            })
            .collect();
        let mut pick = vec![0usize; blocks.len()];
        'outer: loop {
            let mut letters = Vec::with_capacity(n as usize);
            for (bi, b) in signed_blocks.iter().enumerate() {
                let bars = choices[bi][pick[bi]];
                for (j, &v) in b.iter().enumerate() {
                    letters.push(Letter { value: v, barred: j >= b.len() - bars });
                }
            }
            out.push(Word::new(n, letters).expect("constructed word is valid"));
            // odometer over bar choices
            for slot in (0..pick.len()).rev() {
                pick[slot] += 1;
                if pick[slot] < choices[slot].len() {
                    continue 'outer;
                }
                pick[slot] = 0;
            }
            break;
        }
    }
}

/// Report from [`verify_r_labeling`].
#[derive(Debug, Clone)]
pub struct RLabelingReport {
    pub intervals_checked: usize,
    /// Intervals with zero or at least two weakly rising saturated chains.
    pub failures: Vec<(usize, usize, usize)>,
}

impl RLabelingReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Check that every closed interval has exactly one weakly rising saturated
/// chain under the given edge labeling (rising: consecutive labels
/// comparable and nondecreasing in the label poset).
pub fn verify_r_labeling(
    p: &GradedPoset,
    labels: &BTreeMap<(usize, usize), EdgeLabel>,
) -> RLabelingReport {
    let mut intervals_checked = 0;
    let mut failures = Vec::new();
    for x in 0..p.len() {
        for y in 0..p.len() {
            if !p.lt(x, y) {
                continue;
            }
            intervals_checked += 1;
            let count = count_rising_chains(p, labels, x, y, 2);
            if count != 1 {
                failures.push((x, y, count));
            }
        }
    }
    RLabelingReport { intervals_checked, failures }
}

/// Number of weakly rising saturated chains from x to y, capped at `cap`.
fn count_rising_chains(
    p: &GradedPoset,
    labels: &BTreeMap<(usize, usize), EdgeLabel>,
    x: usize,
    y: usize,
    cap: usize,
) -> usize {
    fn dfs(
        p: &GradedPoset,
        labels: &BTreeMap<(usize, usize), EdgeLabel>,
        cur: usize,
        last: Option<EdgeLabel>,
        y: usize,
        cap: usize,
    ) -> usize {
        if cur == y {
            return 1;
        }
        let mut acc = 0;
        for &u in p.up_covers(cur) {
            let u = u as usize;
            if !p.leq(u, y) {
                continue;
            }
            let label = *labels.get(&(cur, u)).expect("labeling must cover every Hasse edge");
            if last.is_none_or(|prev| prev.leq(label)) {
                acc += dfs(p, labels, u, Some(label), y, cap);
                if acc >= cap {
                    return acc;
                }
            }
        }
        acc
    }
    dfs(p, labels, x, None, y, cap)
}

/// mu(Rees(cube_n, C_{n+1})) via the composition sum:
/// (-1)^n * sum over compositions c of 2^(n-c1) multinomial(n;c) c1 prod(ci - 1).
pub fn mobius_by_compositions(n: u32) -> i128 {
    let count = falling_count(n);
    if n % 2 == 0 {
        count
    } else {
        -count
    }
}

/// mu(Rees(cube_n, C_{n+1})) via the corank recursion closed form:
/// -1 + sum_{i=0}^{n} (-1)^(n-i) 2^(n-i) C(n,i) (i+1) (n-i)!.
pub fn mobius_cube_closed_form(n: u32) -> i128 {
    let mut acc: i128 = -1;
    for i in 0..=n {
        let sign = if (n - i) % 2 == 0 { 1 } else { -1 };
        acc += sign * pow2(n - i) * binomial(n, i) * (i as i128 + 1) * factorial(n - i);
    }
    acc
}

/// The convolution identity: 1 + sum_{k=0}^{n} C(n,k) (-1)^(k+1) k! (n-k+1) = 0.
pub fn convolution_identity_check(n: u32) -> bool {
    let mut acc: i128 = 1;
    for k in 0..=n {
        let sign = if (k + 1) % 2 == 0 { 1 } else { -1 };
        acc += binomial(n, k) * sign * factorial(k) * (n - k + 1) as i128;
    }
    acc == 0
}

/// mu([x, 1̂]) = (-1)^k (k-1)! for a proper element of corank k >= 1, where
/// corank(x) = rank(1̂) - rank(x) (so coatoms have corank 1).
pub fn interval_mobius_corank(k: u32) -> i128 {
    assert!(k >= 1, "corank formula applies to proper elements (k >= 1)");
    let sign = if k % 2 == 0 { 1 } else { -1 };
    sign * factorial(k - 1)
}

/// Brute-force falling-word enumeration by filtering every barred signed
/// permutation; kept as a test oracle for the block-structured enumerator.
pub fn falling_words_by_filter(n: u32) -> Vec<Word> {
    assert!(n <= 4, "filter oracle is exponential; use falling_words");
    let mut perms = Vec::new();
    let mut items: Vec<u32> = (1..=n).collect();
    crate::num::permutations(&mut items, 0, &mut perms);
    let mut out = Vec::new();
    for perm in &perms {
        for sign_mask in 0u64..(1 << n) {
            for bar_mask in 0u64..(1 << n) {
                let letters: Vec<Letter> = perm
                    .iter()
                    .enumerate()
                    .map(|(i, &m)| Letter {
                        value: if sign_mask >> i & 1 == 1 { -(m as i32) } else { m as i32 },
                        barred: bar_mask >> i & 1 == 1,
                    })
                    .collect();
                let w = Word::new(n, letters).expect("valid word");
                if w.is_falling() {
                    out.push(w);
                }
            }
        }
    }
    out.sort_by(falling_cmp);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::MobiusOracle;
    use crate::rees::rees_bounded;
    use crate::zoo;

    fn word_from_str(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn edge_label_examples() {
        let rcc = ReesCubeChain::new(5);
        // bottom edge
        let atom = rcc.lookup_pair(&[0, 1, 0, 0, 1], 1).unwrap();
        assert_eq!(
            rcc.edge_label(rcc.bottom(), atom).unwrap(),
            EdgeLabel { value: 0, bar: false }
        );
        // (01001,1) < (*1001,1) carries label -1 unbarred
        let up = rcc.lookup_pair(&[STAR, 1, 0, 0, 1], 1).unwrap();
        assert_eq!(rcc.edge_label(atom, up).unwrap(), EdgeLabel { value: -1, bar: false });
        // edges into the top carry n+1
        let coatom = rcc.lookup_pair(&[STAR; 5], 3).unwrap();
        assert_eq!(
            rcc.edge_label(coatom, rcc.top()).unwrap(),
            EdgeLabel { value: 6, bar: false }
        );
        assert!(rcc.edge_label(atom, coatom).is_err());
    }

    #[test]
    fn direct_construction_matches_generic_rees() {
        for n in 1..=3u32 {
            let rcc = ReesCubeChain::new(n);
            let generic =
                rees_bounded(&zoo::cubical_lattice(n), &zoo::chain(n + 1)).unwrap();
            assert!(rcc.poset.is_isomorphic_to(&generic));
            // the label sets agree, so the identification is the identity on
            // (word, index) pairs
            let mut a: Vec<&str> = rcc.poset.labels().iter().map(|s| s.as_str()).collect();
            let mut b: Vec<&str> = generic.labels().iter().map(|s| s.as_str()).collect();
            a.sort_unstable();
            b.sort_unstable();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn unique_rising_chain_of_whole_poset() {
        for n in 1..=3u32 {
            let rcc = ReesCubeChain::new(n);
            let labels = rcc.edge_labels();
            let count = super::count_rising_chains(&rcc.poset, &labels, rcc.bottom(), rcc.top(), 10);
            assert_eq!(count, 1);
            // the rising chain goes through the all-ones atom and reads
            // 0 1 2 ... n n+1 with no bars
            let rising: Vec<Letter> =
                (1..=n as i32).map(|v| Letter { value: v, barred: false }).collect();
            let w = Word::new(n, rising).unwrap();
            let chain = rcc.word_to_chain(&w).unwrap();
            assert_eq!(rcc.elem(chain[1]), &CubeChainElem::Pair(vec![1; n as usize], 1));
            let mut labels_on_chain = Vec::new();
            for pair in chain.windows(2) {
                labels_on_chain.push(rcc.edge_label(pair[0], pair[1]).unwrap());
            }
            assert!(labels_on_chain.windows(2).all(|w| w[0].leq(w[1])));
        }
    }

    #[test]
    fn r_labeling_small() {
        for n in 1..=3u32 {
            let rcc = ReesCubeChain::new(n);
            let report = verify_r_labeling(&rcc.poset, &rcc.edge_labels());
            assert!(report.ok(), "failures: {:?}", report.failures);
        }
    }

    #[test]
    fn corrupted_label_fails() {
        let rcc = ReesCubeChain::new(2);
        let mut labels = rcc.edge_labels();
        // flip one inner label's sign
        let key = *labels
            .iter()
            .find(|(_, l)| l.value == 1 && !l.bar)
            .map(|(k, _)| k)
            .unwrap();
        labels.insert(key, EdgeLabel { value: -1, bar: false });
        let report = verify_r_labeling(&rcc.poset, &labels);
        assert!(!report.ok());
        // the report names offending intervals
        assert!(!report.failures.is_empty());
    }

    #[test]
    fn section7_example_chain() {
        // sigma = 0 -1 |-3| 5 |2| |-4| 6 labels the displayed chain
        let rcc = ReesCubeChain::new(5);
        let sigma = word_from_str("0 -1 |-3| 5 |2| |-4| 6");
        assert!(sigma.is_falling());
        let chain = rcc.word_to_chain(&sigma).unwrap();
        let expect: Vec<CubeChainElem> = vec![
            CubeChainElem::Bottom,
            CubeChainElem::Pair(vec![0, 1, 0, 0, 1], 1),
            CubeChainElem::Pair(vec![STAR, 1, 0, 0, 1], 1),
            CubeChainElem::Pair(vec![STAR, 1, STAR, 0, 1], 2),
            CubeChainElem::Pair(vec![STAR, 1, STAR, 0, STAR], 2),
            CubeChainElem::Pair(vec![STAR, STAR, STAR, 0, STAR], 3),
            CubeChainElem::Pair(vec![STAR; 5], 4),
            CubeChainElem::Top,
        ];
        let got: Vec<CubeChainElem> = chain.iter().map(|&id| rcc.elem(id).clone()).collect();
        assert_eq!(got, expect);
        assert_eq!(rcc.chain_to_word(&chain).unwrap(), sigma);
    }

    #[test]
    fn section5_example_chain() {
        // (0, -3, |-4|, 2, |-1|, 5) corresponds to the displayed chain in
        // Rees(cube_4, C_5)
        let rcc = ReesCubeChain::new(4);
        let sigma = word_from_str("0 -3 |-4| 2 |-1| 5");
        assert!(sigma.is_falling());
        let chain = rcc.word_to_chain(&sigma).unwrap();
        let expect: Vec<CubeChainElem> = vec![
            CubeChainElem::Bottom,
            CubeChainElem::Pair(vec![0, 1, 0, 0], 1),
            CubeChainElem::Pair(vec![0, 1, STAR, 0], 1),
            CubeChainElem::Pair(vec![0, 1, STAR, STAR], 2),
            CubeChainElem::Pair(vec![0, STAR, STAR, STAR], 2),
            CubeChainElem::Pair(vec![STAR; 4], 3),
            CubeChainElem::Top,
        ];
        let got: Vec<CubeChainElem> = chain.iter().map(|&id| rcc.elem(id).clone()).collect();
        assert_eq!(got, expect);
        assert_eq!(rcc.chain_to_word(&chain).unwrap(), sigma);
    }

    #[test]
    fn word_chain_roundtrip_exhaustive() {
        // chain_to_word . word_to_chain is the identity on every valid word
        for n in 1..=3u32 {
            let rcc = ReesCubeChain::new(n);
            let mut perms = Vec::new();
            let mut items: Vec<u32> = (1..=n).collect();
            crate::num::permutations(&mut items, 0, &mut perms);
            for perm in &perms {
                for sign_mask in 0u64..(1 << n) {
                    for bar_mask in 0u64..(1 << n) {
                        let letters: Vec<Letter> = perm
                            .iter()
                            .enumerate()
                            .map(|(i, &m)| Letter {
                                value: if sign_mask >> i & 1 == 1 {
                                    -(m as i32)
                                } else {
                                    m as i32
                                },
                                barred: bar_mask >> i & 1 == 1,
                            })
                            .collect();
                        let w = Word::new(n, letters).unwrap();
                        let chain = rcc.word_to_chain(&w).unwrap();
                        assert_eq!(rcc.chain_to_word(&chain).unwrap(), w);
                    }
                }
            }
        }
    }

    #[test]
    fn all_unbarred_negative_decreasing_word() {
        // no bars means the chain coordinate stays 1 throughout
        let rcc = ReesCubeChain::new(3);
        let letters = vec![
            Letter { value: -1, barred: false },
            Letter { value: -2, barred: false },
            Letter { value: -3, barred: false },
        ];
        let w = Word::new(3, letters).unwrap();
        let chain = rcc.word_to_chain(&w).unwrap();
        for &id in &chain[1..chain.len() - 1] {
            match rcc.elem(id) {
                CubeChainElem::Pair(_, i) => assert_eq!(*i, 1),
                other => panic!("unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn falling_examples() {
        assert!(word_from_str("0 -3 |-4| 2 |-1| 5").is_falling());
        // the identity word has no descents
        let rising: Vec<Letter> =
            (1..=4).map(|v| Letter { value: v, barred: false }).collect();
        assert!(!Word::new(4, rising).unwrap().is_falling());
        // Figure-1 style word with n = 11
        assert!(word_from_str("0 -5 -7 |-8| |-9| 11 |6| |2| |-3| 10 4 |-1| 12").is_falling());
    }

    #[test]
    fn falling_word_counts() {
        let f1 = falling_words(1);
        assert_eq!(f1.len(), 1);
        // the unique falling word is 0 |-1| 2 (the last letter must carry a
        // bar for the final label descent)
        assert_eq!(f1[0].render(), "0 |-1| 2");
        assert_eq!(falling_words(2).len(), 2);
        assert_eq!(falling_words(3).len(), 15);
        for n in 1..=4u32 {
            assert_eq!(falling_words(n).len() as i128, falling_count(n));
        }
    }

    #[test]
    fn falling_matches_filter_oracle() {
        for n in 1..=4u32 {
            assert_eq!(falling_words(n), falling_words_by_filter(n));
        }
    }

    #[test]
    fn falling_count_divisible_by_n() {
        for n in 1..=10u32 {
            assert_eq!(falling_count(n) % n as i128, 0);
        }
    }

    #[test]
    fn mobius_routes_agree_small() {
        // oracle = closed form = compositions = (-1)^n |falling words|
        for n in 1..=4u32 {
            let rcc = ReesCubeChain::new(n);
            let mu = rcc.poset.mobius_bounded().unwrap() as i128;
            assert_eq!(mu, mobius_cube_closed_form(n));
            assert_eq!(mu, mobius_by_compositions(n));
            let count = falling_words(n).len() as i128;
            assert_eq!(mu, if n % 2 == 0 { count } else { -count });
        }
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(mobius_cube_closed_form(0), 0);
        assert_eq!(mobius_cube_closed_form(1), -1);
        assert_eq!(mobius_cube_closed_form(2), 2);
        assert_eq!(mobius_cube_closed_form(5), -1165);
        assert_eq!(mobius_cube_closed_form(8), 3130280);
        assert_eq!(mobius_by_compositions(3), -15);
        assert_eq!(mobius_by_compositions(4), 116);
        assert_eq!(mobius_by_compositions(1), -1);
    }

    #[test]
    fn convolution_identity() {
        for n in 0..=30 {
            assert!(convolution_identity_check(n), "identity fails at n = {n}");
        }
    }

    #[test]
    fn corank_mobius_formula() {
        assert_eq!(interval_mobius_corank(1), -1);
        assert_eq!(interval_mobius_corank(2), 1);
        assert_eq!(interval_mobius_corank(3), -2);
        // against the oracle on actual upper intervals
        for n in 1..=4u32 {
            let rcc = ReesCubeChain::new(n);
            let oracle = MobiusOracle::new(&rcc.poset);
            let top = rcc.top();
            let top_rank = rcc.poset.rank(top);
            for x in 0..rcc.poset.len() {
                let k = top_rank - rcc.poset.rank(x);
                if x == rcc.bottom() || x == top {
                    continue;
                }
                assert_eq!(
                    oracle.mobius(x, top).unwrap() as i128,
                    interval_mobius_corank(k),
                    "corank {k} element"
                );
            }
        }
    }

    #[test]
    fn corank_layer_counts() {
        // within [x, top) the number of corank-i elements is
        // C(k-1, i-1) * (k-i+1), where k is the corank of x
        for n in 1..=3u32 {
            let rcc = ReesCubeChain::new(n);
            let p = &rcc.poset;
            let top = rcc.top();
            let top_rank = p.rank(top);
            for x in 0..p.len() {
                if x == rcc.bottom() || x == top {
                    continue;
                }
                let k = top_rank - p.rank(x);
                for i in 1..=k {
                    let count = (0..p.len())
                        .filter(|&y| y != top && p.leq(x, y) && top_rank - p.rank(y) == i)
                        .count() as i128;
                    assert_eq!(
                        count,
                        binomial(k - 1, i - 1) * (k - i + 1) as i128,
                        "corank-{i} layer above a corank-{k} element"
                    );
                }
            }
        }
    }

    #[test]
    fn word_parse_render_roundtrip() {
        for s in ["0 -3 |-4| 2 |-1| 5", "0 |-1| 2", "0 1 2 3 4"] {
            let w = Word::parse(s).unwrap();
            assert_eq!(w.render(), s);
        }
        assert!(Word::parse("0 1 1 3").is_err());
        assert!(Word::parse("1 2").is_err());
    }

    #[test]
    fn falling_order_is_deterministic_and_strict() {
        let words = falling_words(3);
        for pair in words.windows(2) {
            assert_eq!(falling_cmp(&pair[0], &pair[1]), core::cmp::Ordering::Less);
        }
    }
}
