//! Canonical constructions: chains, t-ary trees, Boolean algebras, cubical
//! lattices and crosspolytope face lattices.
//!
//! All constructors validate gradedness eagerly and panic on parameter
//! violations; range checking for user input happens at the CLI boundary.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::poset::GradedPoset;

/// Total order on n elements, ranks 0..n-1, labels "1".."n".
pub fn chain(n: u32) -> GradedPoset {
    assert!(n >= 1, "chain needs n >= 1");
    let ranks: Vec<u32> = (0..n).collect();
    let covers: Vec<(usize, usize)> = (0..n as usize - 1).map(|i| (i, i + 1)).collect();
    let labels: Vec<String> = (1..=n).map(|i| format!("{i}")).collect();
    GradedPoset::from_covers(ranks, &covers, labels)
        .expect("chain construction")
        .expect_valid("chain")
}

/// Rooted t-ary tree poset of rank n (so `n_plus_1` rank levels): t^k
/// elements at rank k, each non-leaf covered by exactly t children.
/// The 1-ary tree is precisely the (n+1)-chain.
pub fn tary_tree(t: u32, n_plus_1: u32) -> GradedPoset {
    assert!(t >= 1, "tary_tree needs t >= 1");
    assert!(n_plus_1 >= 1, "tary_tree needs at least one level");
    let n = n_plus_1 - 1;
    let mut level_offset = Vec::with_capacity(n_plus_1 as usize + 1);
    let mut total = 0usize;
    for k in 0..=n {
        level_offset.push(total);
        let level = (t as usize).checked_pow(k).expect("tree too large");
        total = total.checked_add(level).expect("tree too large");
        assert!(total <= 2_000_000, "tree too large");
    }
    level_offset.push(total);

    let mut ranks = Vec::with_capacity(total);
    let mut labels = Vec::with_capacity(total);
    let mut covers = Vec::new();
    for k in 0..=n {
        let width = (t as usize).pow(k);
        for idx in 0..width {
            ranks.push(k);
            if k == 0 {
                labels.push(String::from("r"));
            } else {
                let parent_idx = idx / t as usize;
                let parent_label: String = labels[level_offset[k as usize - 1] + parent_idx].clone();
                labels.push(format!("{parent_label}.{}", idx % t as usize));
                covers.push((level_offset[k as usize - 1] + parent_idx, level_offset[k as usize] + idx));
            }
        }
    }
    GradedPoset::from_covers(ranks, &covers, labels)
        .expect("tree construction")
        .expect_valid("tary_tree")
}

/// Subsets of {1..n} ordered by inclusion.  Element ids are the bitmasks.
pub fn boolean_algebra(n: u32) -> GradedPoset {
    assert!(n <= 20, "Boolean algebra too large");
    let size = 1usize << n;
    let ranks: Vec<u32> = (0..size).map(|m| m.count_ones()).collect();
    let mut covers = Vec::new();
    for m in 0..size {
        for b in 0..n {
            if m >> b & 1 == 0 {
                covers.push((m, m | 1 << b));
            }
        }
    }
    let labels: Vec<String> = (0..size)
        .map(|m| {
            let elems: Vec<String> =
                (1..=n).filter(|&i| m >> (i - 1) & 1 == 1).map(|i| format!("{i}")).collect();
            format!("{{{}}}", elems.join(","))
        })
        .collect();
    GradedPoset::from_covers(ranks, &covers, labels)
        .expect("boolean algebra construction")
        .expect_valid("boolean_algebra")
}

/// The face lattice of the n-cube: an explicit bottom plus all words over
/// {0,1,*}; a word of k stars has rank k+1, and y covers x when y replaces
/// one 0/1 of x by *.  The all-star word is the top.
pub fn cubical_lattice(n: u32) -> GradedPoset {
    assert!((1..=12).contains(&n), "cubical lattice needs 1 <= n <= 12");
    let n_words = 3usize.pow(n);
    let size = n_words + 1;
    let mut ranks = Vec::with_capacity(size);
    let mut labels = Vec::with_capacity(size);
    ranks.push(0);
    labels.push(String::from("-"));
    for w in 0..n_words {
        let word = cube_word(w, n);
        ranks.push(stars(&word) + 1);
        labels.push(word_label(&word));
    }
    let mut covers = Vec::new();
    for w in 0..n_words {
        let word = cube_word(w, n);
        if stars(&word) == 0 {
            covers.push((0, w + 1));
        }
        for pos in 0..n as usize {
            if word[pos] != STAR {
                let mut up = word.clone();
                up[pos] = STAR;
                covers.push((w + 1, word_index(&up) + 1));
            }
        }
    }
    GradedPoset::from_covers(ranks, &covers, labels)
        .expect("cubical lattice construction")
        .expect_valid("cubical_lattice")
}

/// Face lattice of the n-crosspolytope, built as the dual of the cubical
/// lattice so the duality relationships hold by construction.
pub fn crosspolytope_lattice(n: u32) -> GradedPoset {
    cubical_lattice(n).dual().expect_valid("crosspolytope_lattice")
}

pub(crate) const STAR: u8 = 2;

/// Digits of word index `w` in base 3: 0, 1 or STAR per coordinate.
pub(crate) fn cube_word(mut w: usize, n: u32) -> Vec<u8> {
    let mut word = Vec::with_capacity(n as usize);
    for _ in 0..n {
        word.push((w % 3) as u8);
        w /= 3;
    }
    word
}

pub(crate) fn word_index(word: &[u8]) -> usize {
    word.iter().rev().fold(0usize, |acc, &d| acc * 3 + d as usize)
}

pub(crate) fn stars(word: &[u8]) -> u32 {
    word.iter().filter(|&&d| d == STAR).count() as u32
}

pub(crate) fn word_label(word: &[u8]) -> String {
    word.iter().map(|&d| match d {
        0 => '0',
        1 => '1',
        _ => '*',
    })
    .collect()
}

/// A deterministic collection of bounded and unbounded test posets of rank
/// at most `max_rank`, used by exhaustive property tests.
pub fn small_zoo(max_rank: u32) -> Vec<GradedPoset> {
    let mut out = Vec::new();
    for m in 1..=max_rank + 1 {
        out.push(chain(m));
    }
    for n in 0..=max_rank {
        out.push(boolean_algebra(n));
    }
    for n in 1..=max_rank.saturating_sub(1) {
        out.push(cubical_lattice(n));
        out.push(crosspolytope_lattice(n));
    }
    for t in 2..=3u32 {
        for levels in 2..=3u32.min(max_rank + 1) {
            out.push(tary_tree(t, levels));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::RankSet;
    use crate::num::binomial;
    use alloc::vec;

    #[test]
    fn chain_examples() {
        assert_eq!(chain(1).len(), 1);
        let c3 = chain(3);
        assert_eq!(c3.len(), 3);
        assert_eq!(c3.n_covers(), 2);
        for n in 1..=6 {
            assert_eq!(chain(n).maximal_chains().count(), 1);
        }
    }

    #[test]
    fn tree_examples() {
        // 1-ary tree is the chain
        for n in 1..=5 {
            assert!(tary_tree(1, n).is_isomorphic_to(&chain(n)));
        }
        assert_eq!(tary_tree(2, 3).len(), 7);
        let t = tary_tree(3, 4);
        for k in 0..=3u32 {
            let count = (0..t.len()).filter(|&i| t.rank(i) == k).count();
            assert_eq!(count, 3usize.pow(k));
        }
    }

    #[test]
    fn boolean_examples() {
        assert_eq!(boolean_algebra(0).len(), 1);
        let b3 = boolean_algebra(3);
        assert_eq!(b3.len(), 8);
        assert_eq!(b3.mobius_bounded().unwrap(), -1);
        for n in 0..=5u32 {
            let b = boolean_algebra(n);
            assert_eq!(b.len(), 1 << n);
            for k in 1..n {
                let f = b.flag_f(&RankSet::new(vec![k]).unwrap()).unwrap();
                assert_eq!(f as i128, binomial(n, k));
            }
        }
    }

    #[test]
    fn cube_examples() {
        let c1 = cubical_lattice(1);
        assert_eq!(c1.len(), 4);
        assert_eq!(c1.max_rank(), 2);
        assert_eq!(cubical_lattice(3).len(), 28);
        for n in 1..=4u32 {
            assert_eq!(cubical_lattice(n).len(), 3usize.pow(n) + 1);
            let mu = cubical_lattice(n).mobius_bounded().unwrap();
            assert_eq!(mu, if n % 2 == 0 { -1 } else { 1 }, "mu = (-1)^(n+1)");
        }
    }

    #[test]
    fn crosspolytope_examples() {
        let o1 = crosspolytope_lattice(1);
        assert_eq!(o1.len(), 4);
        assert!(o1.is_isomorphic_to(&cubical_lattice(1)));
        for n in 1..=4u32 {
            let o = crosspolytope_lattice(n);
            let atoms = (0..o.len()).filter(|&i| o.rank(i) == 1).count();
            assert_eq!(atoms, 2 * n as usize, "crosspolytope has 2n vertices");
            assert_eq!(o.mobius_bounded().unwrap(), if n % 2 == 0 { -1 } else { 1 });
        }
    }

    #[test]
    fn cube_is_eulerian_small() {
        // every closed interval has mu = (-1)^(rank difference)
        for n in 1..=4u32 {
            let c = cubical_lattice(n);
            let oracle = crate::poset::MobiusOracle::new(&c);
            for x in 0..c.len() {
                for y in 0..c.len() {
                    if c.leq(x, y) {
                        let expect = if (c.rank(y) - c.rank(x)) % 2 == 0 { 1 } else { -1 };
                        assert_eq!(oracle.mobius(x, y).unwrap(), expect);
                    }
                }
            }
        }
    }

    #[test]
    fn atom_upper_ideal_is_boolean() {
        for n in 1..=4u32 {
            let c = cubical_lattice(n);
            let atom = (0..c.len()).find(|&i| c.rank(i) == 1).unwrap();
            let (ideal, _) = c.upper_ideal(atom).unwrap();
            assert!(ideal.is_isomorphic_to(&boolean_algebra(n)));
        }
    }

    #[test]
    fn dual_of_square_is_its_polar() {
        // the square's polar is again a square
        let d = cubical_lattice(2).dual();
        assert!(d.is_isomorphic_to(&cubical_lattice(2)));
    }
}
