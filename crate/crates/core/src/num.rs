//! Small exact-arithmetic helpers shared across the crate.
//!
//! Everything is `i128` with checked operations; the desk-scale inputs here
//! stay far below the overflow bound, and an overflow is a programming error,
//! so these panic rather than return errors.

use alloc::vec::Vec;

pub fn factorial(n: u32) -> i128 {
    let mut acc: i128 = 1;
    for k in 2..=n as i128 {
        acc = acc.checked_mul(k).expect("factorial overflow");
    }
    acc
}

pub fn binomial(n: u32, k: u32) -> i128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul((n - i) as i128)
            .expect("binomial overflow")
            / (i as i128 + 1);
    }
    acc
}

/// Multinomial coefficient `n! / (parts[0]! * parts[1]! * ...)`.
/// The parts must sum to `n`.
pub fn multinomial(n: u32, parts: &[u32]) -> i128 {
    debug_assert_eq!(parts.iter().sum::<u32>(), n);
    let mut acc: i128 = 1;
    let mut rest = n;
    for &p in parts {
        acc = acc
            .checked_mul(binomial(rest, p))
            .expect("multinomial overflow");
        rest -= p;
    }
    acc
}

pub fn pow2(e: u32) -> i128 {
    1i128.checked_shl(e).expect("2^e overflow")
}

/// All permutations of `items` by Heap-style swaps, appended to `out`.
pub fn permutations(items: &mut Vec<u32>, k: usize, out: &mut Vec<Vec<u32>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, out);
        items.swap(k, i);
    }
}

/// All compositions of `n` into positive parts, in lexicographic order.
/// `n = 0` yields no compositions.
pub fn compositions(n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            if !cur.is_empty() {
                out.push(cur.clone());
            }
            return;
        }
        for part in 1..=rest {
            cur.push(part);
            rec(rest - part, cur, out);
            cur.pop();
        }
    }
    rec(n, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(factorial(0), 1);
        assert_eq!(factorial(5), 120);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(4, 7), 0);
        assert_eq!(multinomial(4, &[2, 2]), 6);
        assert_eq!(multinomial(3, &[1, 2]), 3);
        assert_eq!(pow2(10), 1024);
    }

    #[test]
    fn composition_counts() {
        // 2^(n-1) compositions of n
        for n in 1..=8u32 {
            assert_eq!(compositions(n).len(), 1 << (n - 1));
        }
        assert!(compositions(0).is_empty());
    }
}
