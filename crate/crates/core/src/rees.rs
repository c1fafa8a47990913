//! The Rees product P * Q, its bounded variant Rees(P, Q) and the truncated
//! variant Rees⁻(P, Q).
//!
//! Covers are recovered from the order relation by transitive reduction
//! rather than by a bespoke cover rule; at desk scale the cost is negligible
//! and it removes a class of off-by-one mistakes in the rank-gap inequality.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::poset::{BitMatrix, GradedPoset, PosetError};

/// The Rees product: pairs (a, b) with rank(a) >= rank(b), ordered by
/// componentwise order plus the rank-gap inequality
/// rank(a') - rank(a) >= rank(b') - rank(b).  rank(a, b) = rank(a).
pub fn rees_product(p: &GradedPoset, q: &GradedPoset) -> Result<GradedPoset, PosetError> {
    check_graded(p)?;
    check_graded(q)?;
    let mut elems: Vec<(usize, usize)> = Vec::new();
    for a in 0..p.len() {
        for b in 0..q.len() {
            if p.rank(a) >= q.rank(b) {
                elems.push((a, b));
            }
        }
    }
    elems.sort_unstable_by_key(|&(a, b)| (p.rank(a), a, b));
    let leq = |x: (usize, usize), y: (usize, usize)| {
        p.leq(x.0, y.0)
            && q.leq(x.1, y.1)
            && p.rank(y.0) - p.rank(x.0) >= q.rank(y.1) - q.rank(x.1)
    };
    let ranks: Vec<u32> = elems.iter().map(|&(a, _)| p.rank(a)).collect();
    let labels: Vec<String> =
        elems.iter().map(|&(a, b)| format!("({},{})", p.label(a), q.label(b))).collect();
    let covers = reduction(&elems, leq);
    GradedPoset::from_covers(ranks, &covers, labels)
}

/// Rees(P, Q) = ((P - {0̂}) * Q) with a new bottom and top adjoined.
/// P must be bounded.
pub fn rees_bounded(p: &GradedPoset, q: &GradedPoset) -> Result<GradedPoset, PosetError> {
    p.bounds()?;
    rees_over_debottomed(p, q)
}

/// Rees⁻(P, Q) = Rees(P - {1̂}, Q).
pub fn rees_minus(p: &GradedPoset, q: &GradedPoset) -> Result<GradedPoset, PosetError> {
    p.bounds()?;
    let (truncated, _) = p.without_top()?;
    rees_over_debottomed(&truncated, q)
}

/// Shared body: remove P's bottom, take the Rees product with Q, re-bound.
fn rees_over_debottomed(p: &GradedPoset, q: &GradedPoset) -> Result<GradedPoset, PosetError> {
    let (proper, _) = p.without_bottom()?;
    let inner = rees_product(&proper, q)?;
    let m = inner.len();
    // id 0 = new bottom, ids 1..=m = inner shifted, id m+1 = new top
    let mut ranks = Vec::with_capacity(m + 2);
    let mut labels = Vec::with_capacity(m + 2);
    ranks.push(0);
    labels.push(String::from("bot"));
    for x in 0..m {
        ranks.push(inner.rank(x) + 1);
        labels.push(inner.label(x).into());
    }
    let top_rank = inner.max_rank() + 2;
    ranks.push(top_rank);
    labels.push(String::from("top"));
    let mut covers: Vec<(usize, usize)> =
        inner.covers().map(|(a, b)| (a + 1, b + 1)).collect();
    for x in inner.minimal_elements() {
        covers.push((0, x + 1));
    }
    for x in inner.maximal_elements() {
        covers.push((x + 1, m + 1));
    }
    let poset = GradedPoset::from_covers(ranks, &covers, labels)?;
    let report = poset.validate();
    if !report.is_valid() {
        return Err(PosetError::NotGraded(format!("{}", report.violations[0])));
    }
    Ok(poset)
}

fn check_graded(p: &GradedPoset) -> Result<(), PosetError> {
    let report = p.validate();
    if !report.is_valid() {
        return Err(PosetError::NotGraded(format!("{}", report.violations[0])));
    }
    Ok(())
}

/// Hasse covers of the order `leq` on `elems` by transitive reduction.
fn reduction(
    elems: &[(usize, usize)],
    leq: impl Fn((usize, usize), (usize, usize)) -> bool,
) -> Vec<(usize, usize)> {
    let m = elems.len();
    let mut up = BitMatrix::new(m);
    let mut down = BitMatrix::new(m);
    for i in 0..m {
        for j in 0..m {
            if i != j && leq(elems[i], elems[j]) {
                up.set(i, j);
                down.set(j, i);
            }
        }
    }
    let mut covers = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if i == j || !up.get(i, j) {
                continue;
            }
            let ri = up.row(i);
            let rj = down.row(j);
            if ri.iter().zip(rj.iter()).all(|(&a, &b)| a & b == 0) {
                covers.push((i, j));
            }
        }
    }
    covers
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derange;
    use crate::zoo;

    #[test]
    fn product_with_trivial_chain() {
        let r = rees_product(&zoo::chain(2), &zoo::chain(1)).unwrap();
        assert!(r.is_isomorphic_to(&zoo::chain(2)));
    }

    #[test]
    fn product_rank_is_rank_of_p() {
        for p in zoo::small_zoo(3) {
            for q in [zoo::chain(1), zoo::chain(2), zoo::chain(3)] {
                if q.max_rank() > p.max_rank() {
                    continue;
                }
                let r = rees_product(&p, &q).unwrap();
                assert_eq!(r.max_rank(), p.max_rank());
                assert!(r.validate().is_valid());
            }
        }
    }

    #[test]
    fn product_c3_c3_size() {
        // pairs (i, j) with 0 <= j <= i <= 2
        let r = rees_product(&zoo::chain(3), &zoo::chain(3)).unwrap();
        assert_eq!(r.len(), 6);
    }

    #[test]
    fn bounded_small_mobius_values() {
        // Rees(B2, C2): mu = -D2 = -1
        let r = rees_bounded(&zoo::boolean_algebra(2), &zoo::chain(2)).unwrap();
        assert_eq!(r.mobius_bounded().unwrap(), -1);
        // Rees of the 1-cube lattice with C2: mu = -1
        let r = rees_bounded(&zoo::cubical_lattice(1), &zoo::chain(2)).unwrap();
        assert_eq!(r.mobius_bounded().unwrap(), -1);
        // Rees(B1, C1) is the 3-chain (diamond-free), mu = 0
        let r = rees_bounded(&zoo::boolean_algebra(1), &zoo::chain(1)).unwrap();
        assert!(r.is_isomorphic_to(&zoo::chain(3)));
        assert_eq!(r.mobius_bounded().unwrap(), 0);
    }

    #[test]
    fn bounded_rank() {
        // rank(Rees(P, C_rank(P))) = rank(P) + 1
        for p in [zoo::boolean_algebra(3), zoo::cubical_lattice(2)] {
            let r = rees_bounded(&p, &zoo::chain(p.max_rank())).unwrap();
            assert_eq!(r.max_rank(), p.max_rank() + 1);
        }
    }

    #[test]
    fn minus_crosspolytope_matches_signed_derangements() {
        for n in 1..=3u32 {
            let r = rees_minus(&zoo::crosspolytope_lattice(n), &zoo::chain(n)).unwrap();
            let mu = r.mobius_bounded().unwrap();
            assert_eq!(mu.unsigned_abs() as i128, derange::signed_derangement_count(n));
        }
    }

    #[test]
    fn boolean_rees_matches_derangements_small() {
        for n in 1..=4u32 {
            let r = rees_bounded(&zoo::boolean_algebra(n), &zoo::chain(n)).unwrap();
            let mu = r.mobius_bounded().unwrap();
            let d = derange::derangement_count(n);
            // mu = (-1)^(n+1) D_n
            let expected = if n % 2 == 1 { d } else { -d };
            assert_eq!(mu as i128, expected);
        }
    }
}
