//! Weight calculus for Rees products with t-ary trees: t-analogues, the
//! weights w(S) and v(S), the closed-form flag f-vector and Möbius function
//! of Rees(P, T_{t,n+1}), duality and (1+t)-divisibility.
//!
//! Weights are exact integer-coefficient polynomials in t; numeric values
//! come from evaluation.  Divisibility by 1+t is tested as vanishing at
//! t = -1, which turns the corollary into an exact zero check.

use alloc::vec;
use alloc::vec::Vec;

use crate::poset::{GradedPoset, PosetError, RankSet};
use crate::rees::rees_bounded;
use crate::zoo::tary_tree;

/// Dense integer polynomial in t (coefficients low to high, no trailing
/// zeros).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TPoly(Vec<i128>);

impl TPoly {
    pub fn zero() -> Self {
        TPoly(Vec::new())
    }

    pub fn one() -> Self {
        TPoly(vec![1])
    }

    pub fn t() -> Self {
        TPoly(vec![0, 1])
    }

    pub fn constant(c: i128) -> Self {
        let mut p = TPoly(vec![c]);
        p.trim();
        p
    }

    pub fn from_coeffs(coeffs: Vec<i128>) -> Self {
        let mut p = TPoly(coeffs);
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &TPoly) -> TPoly {
        let mut coeffs = vec![0; self.0.len().max(other.0.len())];
        for (i, &c) in self.0.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, &c) in other.0.iter().enumerate() {
            coeffs[i] += c;
        }
        TPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &TPoly) -> TPoly {
        let mut coeffs = vec![0; self.0.len().max(other.0.len())];
        for (i, &c) in self.0.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, &c) in other.0.iter().enumerate() {
            coeffs[i] -= c;
        }
        TPoly::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &TPoly) -> TPoly {
        if self.is_zero() || other.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = vec![0i128; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in other.0.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j]
                    .checked_add(a.checked_mul(b).expect("TPoly overflow"))
                    .expect("TPoly overflow");
            }
        }
        TPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: i128) -> TPoly {
        TPoly::from_coeffs(self.0.iter().map(|&a| a * c).collect())
    }

    pub fn eval(&self, t: i128) -> i128 {
        let mut acc = 0i128;
        for &c in self.0.iter().rev() {
            acc = acc.checked_mul(t).and_then(|v| v.checked_add(c)).expect("TPoly eval overflow");
        }
        acc
    }
}

impl core::fmt::Display for TPoly {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if c < 0 { " - " } else { " + " })?;
            }
            let a = c.unsigned_abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// The t-analogue [k] = 1 + t + ... + t^(k-1); [0] = 0.
pub fn t_analogue(k: u32) -> TPoly {
    TPoly::from_coeffs(vec![1; k as usize])
}

/// w(S) = [s1] [s2 - s1 + 1] ... [sk - s(k-1) + 1], with w(∅) = 1.
pub fn weight_w(s: &RankSet) -> TPoly {
    let mut acc = TPoly::one();
    let mut prev: Option<u32> = None;
    for &si in s.entries() {
        let gap = match prev {
            None => si,
            Some(p) => si - p + 1,
        };
        acc = acc.mul(&t_analogue(gap));
        prev = Some(si);
    }
    acc
}

/// v(S) = w(S ∪ {n+1}) - w(S) = t · w(S) · [(n+1) - sk], with v(∅) = t·[n].
/// Both defining expressions are computed and must agree.
pub fn weight_v(s: &RankSet, n: u32) -> TPoly {
    assert!(s.max().is_none_or(|m| m <= n), "rank set must lie in {{1..n}}");
    let difference = weight_w(&s.with_appended(n + 1)).sub(&weight_w(s));
    let product = match s.max() {
        Some(sk) => TPoly::t().mul(&weight_w(s)).mul(&t_analogue(n + 1 - sk)),
        None => TPoly::t().mul(&t_analogue(n)),
    };
    assert_eq!(difference, product, "the two definitions of v(S) disagree");
    difference
}

/// Flag f-vector of R = Rees(P, T_{t,n+1}) as a polynomial in t:
/// f_S(R) = w(S) f_S(P), and with the coatom rank n+1 included,
/// f_{S ∪ {n+1}}(R) = w(S ∪ {n+1}) f_S(P).
pub fn flag_f_rees(
    p: &GradedPoset,
    s: &RankSet,
    with_coatom_rank: bool,
) -> Result<TPoly, PosetError> {
    let n = proper_n(p)?;
    if s.max().is_some_and(|m| m > n) {
        return Err(PosetError::RankSetOutOfRange { entry: s.max().unwrap(), proper_max: n });
    }
    let f = p.flag_f(s)? as i128;
    let w = if with_coatom_rank { weight_w(&s.with_appended(n + 1)) } else { weight_w(s) };
    Ok(w.scale(f))
}

/// mu(Rees(P, T_{t,n+1})) = sum over S ⊆ {1..n} of (-1)^|S| v(S) f_S(P),
/// as an exact polynomial in t.
pub fn mobius_rees_formula(p: &GradedPoset) -> Result<TPoly, PosetError> {
    let n = proper_n(p)?;
    let mut acc = TPoly::zero();
    for s in RankSet::all_subsets(n) {
        let f = p.flag_f(&s)? as i128;
        if f == 0 {
            continue;
        }
        let term = weight_v(&s, n).scale(f);
        acc = if s.len() % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    Ok(acc)
}

fn proper_n(p: &GradedPoset) -> Result<u32, PosetError> {
    p.bounds()?;
    if p.max_rank() == 0 {
        return Err(PosetError::NotGraded("rank-0 poset has no proper ranks".into()));
    }
    Ok(p.max_rank() - 1)
}

/// One oracle comparison made by [`check_duality`].
#[derive(Debug, Clone)]
pub struct DualityOracleCheck {
    pub t: u32,
    pub mu_p: i64,
    pub mu_dual: i64,
}

#[derive(Debug, Clone)]
pub struct DualityReport {
    /// v(S) = v(S^rev) as polynomials for every S ⊆ {1..n}.
    pub symbolic_v_ok: bool,
    /// The two Möbius polynomials agree.
    pub polys_equal: bool,
    pub mu_poly: TPoly,
    pub oracle_checks: Vec<DualityOracleCheck>,
}

impl DualityReport {
    pub fn ok(&self) -> bool {
        self.symbolic_v_ok
            && self.polys_equal
            && self.oracle_checks.iter().all(|c| c.mu_p == c.mu_dual)
    }
}

/// Verify mu(Rees(P, T_{t,n+1})) = mu(Rees(P*, T_{t,n+1})): symbolically via
/// v(S) = v(S^rev), as Möbius polynomials, and against the poset oracle on
/// the constructed Rees posets for each requested t.
pub fn check_duality(p: &GradedPoset, t_values: &[u32]) -> Result<DualityReport, PosetError> {
    let n = proper_n(p)?;
    let symbolic_v_ok =
        RankSet::all_subsets(n).iter().all(|s| weight_v(s, n) == weight_v(&s.reversed(n), n));
    let dual = p.dual();
    let mu_poly = mobius_rees_formula(p)?;
    let mu_poly_dual = mobius_rees_formula(&dual)?;
    let polys_equal = mu_poly == mu_poly_dual;
    let mut oracle_checks = Vec::new();
    for &t in t_values {
        let tree = tary_tree(t, p.max_rank());
        let mu_p = rees_bounded(p, &tree)?.mobius_bounded()?;
        let mu_dual = rees_bounded(&dual, &tree)?.mobius_bounded()?;
        oracle_checks.push(DualityOracleCheck { t, mu_p, mu_dual });
    }
    Ok(DualityReport { symbolic_v_ok, polys_equal, mu_poly, oracle_checks })
}

#[derive(Debug, Clone)]
pub struct ParityReport {
    /// The corollary applies only to odd-rank posets.
    pub applicable: bool,
    pub value_at_minus_one: i128,
    pub value_at_one: i128,
}

impl ParityReport {
    pub fn ok(&self) -> bool {
        !self.applicable || (self.value_at_minus_one == 0 && self.value_at_one % 2 == 0)
    }
}

/// For P of odd rank n+1, mu(Rees(P, T_{t,n+1})) is divisible by 1+t; in
/// particular its value at t = 1 is even.  Checked as vanishing at t = -1.
pub fn check_parity_divisibility(p: &GradedPoset) -> Result<ParityReport, PosetError> {
    let mu_poly = mobius_rees_formula(p)?;
    Ok(ParityReport {
        applicable: p.max_rank() % 2 == 1,
        value_at_minus_one: mu_poly.eval(-1),
        value_at_one: mu_poly.eval(1),
    })
}
