//! Closed-form output-space sizes.

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

use crate::coloring::ColoringProfile;
use crate::combinatorics::binomial;
use crate::counting::{count_brute, CountMethod, CountReport};
use crate::error::{domain, Result};

/// Output-space size for a single `c`-coloring: `Σ_{i=0}^{n} c^i`.
///
/// Only the number `i` of surviving positions matters, and each survivor
/// takes one of `c` values, so the count does not depend on which coloring
/// is used.
pub fn count_single(q: u32, c: usize, n: usize) -> Result<CountReport> {
    if !(1 < c && c < q as usize) {
        return Err(domain(format!(
            "single-coloring count needs 1 < c < q, got q={q}, c={c}"
        )));
    }
    let c_big = BigUint::from(c);
    // (c^(n+1) - 1) / (c - 1)
    let count = (c_big.pow(n as u32 + 1) - 1u32) / (c - 1);
    Ok(CountReport {
        q,
        c,
        t: 1,
        n,
        method: CountMethod::SingleClosedForm,
        count,
        within_hypothesis: true,
    })
}

/// Output-space size for two distinct `(q-1)`-colorings:
///
/// `Σ_{i=0}^{n} Σ_{j=0}^{n-i} C(n-i, j) · C(n-j, i) · (q-2)^(n-i-j)`.
///
/// Here `i` and `j` count the occurrences of the two symbols that each
/// coloring leaves out. The inner sum is evaluated by Horner's rule in
/// `q-2`, with both binomials updated incrementally, and the outer sum runs
/// on the rayon pool.
pub fn count_two_qminus1(q: u32, n: usize) -> Result<CountReport> {
    if q < 3 {
        return Err(domain(format!(
            "two (q-1)-colorings need q >= 3, got q={q}"
        )));
    }
    let base = q as u64 - 2;
    let n64 = n as u64;
    let count = (0..=n64)
        .into_par_iter()
        .map(|i| {
            let m = n64 - i;
            // j runs from 0 to m so the first term picks up (q-2)^m.
            let mut c_left = BigUint::one();
            let mut c_right = binomial(n64, i);
            let mut acc = BigUint::default();
            for j in 0..=m {
                acc *= base;
                acc += &c_left * &c_right;
                if j == m {
                    break;
                }
                // C(m, j+1) = C(m, j) * (m - j) / (j + 1)
                c_left *= m - j;
                c_left /= j + 1;
                // C(n-j-1, i) = C(n-j, i) * (n-j-i) / (n-j)
                c_right *= n64 - j - i;
                c_right /= n64 - j;
            }
            acc
        })
        .reduce(BigUint::default, |a, b| a + b);
    Ok(CountReport {
        q,
        c: q as usize - 1,
        t: 2,
        n,
        method: CountMethod::TwoQminus1,
        count,
        within_hypothesis: true,
    })
}

/// Output-space size for a disjoint profile of `t` colorings of size `c`.
///
/// If the colorings cover the alphabet (`ct = q`) every input symbol lands in
/// exactly one stream, giving `c^n · C(n+t-1, t-1)`. Otherwise inputs may
/// also contain uncolored symbols and the count is
/// `Σ_{i=0}^{n} c^i · C(i+t-1, t-1)`, summing over the number `i` of colored
/// positions.
///
/// The formulas are established for `q >= 4`; smaller alphabets are still
/// computed but reported with `within_hypothesis = false`.
pub fn count_disjoint(q: u32, c: usize, t: usize, n: usize) -> Result<CountReport> {
    if c == 0 || t == 0 {
        return Err(domain("disjoint count needs c >= 1 and t >= 1"));
    }
    let colored = c
        .checked_mul(t)
        .filter(|&ct| ct <= q as usize)
        .ok_or_else(|| domain(format!("c*t = {}*{} exceeds q = {q}", c, t)))?;
    let tm1 = t as u64 - 1;
    let c_big = BigUint::from(c);
    let (method, count) = if colored == q as usize {
        (
            CountMethod::DisjointFull,
            c_big.pow(n as u32) * binomial(n as u64 + tm1, tm1),
        )
    } else {
        let mut pow = BigUint::one();
        let mut sum = BigUint::default();
        for i in 0..=n as u64 {
            sum += &pow * binomial(i + tm1, tm1);
            pow *= c;
        }
        (CountMethod::DisjointPartial, sum)
    };
    Ok(CountReport {
        q,
        c,
        t,
        n,
        method,
        count,
        within_hypothesis: q >= 4,
    })
}

/// Picks the closed form that applies to `profile`, falling back to
/// enumeration when none does.
pub fn count_auto(n: usize, profile: &ColoringProfile, max_states: u64) -> Result<CountReport> {
    let (q, c, t) = (profile.q(), profile.c(), profile.t());
    if t == 1 && 1 < c && c < q as usize {
        count_single(q, c, n)
    } else if t == 2 && q >= 3 && c == q as usize - 1 {
        count_two_qminus1(q, n)
    } else if t >= 2 && profile.is_disjoint() {
        count_disjoint(q, c, t, n)
    } else {
        count_brute(n, profile, max_states)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::coloring::make_profile;
    use crate::counting::DEFAULT_MAX_STATES;

    fn count(r: Result<CountReport>) -> u64 {
        r.unwrap().count.try_into().unwrap()
    }

    #[test]
    fn single_examples() {
        assert_eq!(count(count_single(3, 2, 2)), 7);
        assert_eq!(count(count_single(4, 2, 0)), 1);
        assert_eq!(count(count_single(4, 3, 3)), 40);
    }

    #[test]
    fn single_is_the_geometric_sum() {
        for c in 2..6usize {
            for n in 0..20usize {
                let sum: u64 = (0..=n as u32).map(|i| (c as u64).pow(i)).sum();
                assert_eq!(count(count_single(7, c, n)), sum);
            }
        }
    }

    #[test]
    fn single_domain() {
        assert!(count_single(3, 1, 4).is_err());
        assert!(count_single(3, 3, 4).is_err());
    }

    #[test]
    fn two_qminus1_examples() {
        assert_eq!(count(count_two_qminus1(3, 2)), 8);
        assert_eq!(count(count_two_qminus1(3, 1)), 3);
        assert_eq!(count(count_two_qminus1(4, 1)), 4);
        assert_eq!(count(count_two_qminus1(5, 0)), 1);
        assert!(count_two_qminus1(2, 3).is_err());
    }

    /// Direct term-by-term evaluation of the double sum.
    fn double_sum_naive(q: u64, n: u64) -> BigUint {
        let mut s = BigUint::default();
        for i in 0..=n {
            for j in 0..=n - i {
                s += binomial(n - i, j)
                    * binomial(n - j, i)
                    * BigUint::from(q - 2).pow((n - i - j) as u32);
            }
        }
        s
    }

    #[test]
    fn horner_evaluation_matches_naive_sum() {
        for q in [3u32, 4, 7, 20] {
            for n in [0usize, 1, 2, 5, 13, 40] {
                assert_eq!(
                    count_two_qminus1(q, n).unwrap().count,
                    double_sum_naive(q as u64, n as u64),
                    "q={q} n={n}"
                );
            }
        }
    }

    #[test]
    fn disjoint_examples() {
        assert_eq!(count(count_disjoint(4, 2, 2, 1)), 4);
        assert_eq!(count(count_disjoint(4, 2, 2, 2)), 12);
        let r = count_disjoint(5, 2, 2, 2).unwrap();
        assert_eq!(r.method, CountMethod::DisjointPartial);
        assert_eq!(r.count, BigUint::from(17u32));
        assert!(count_disjoint(5, 2, 3, 2).is_err());
        assert!(!count_disjoint(3, 1, 3, 2).unwrap().within_hypothesis);
    }

    #[test]
    fn auto_dispatch() {
        let a = Alphabet::new(4).unwrap();
        let single = make_profile(a, &[vec![0, 1]]).unwrap();
        let two = make_profile(a, &[vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        let disjoint = make_profile(a, &[vec![0, 1], vec![2, 3]]).unwrap();
        let other = make_profile(a, &[vec![0, 1], vec![1, 2]]).unwrap();
        let m = |p| count_auto(3, p, DEFAULT_MAX_STATES).unwrap().method;
        assert_eq!(m(&single), CountMethod::SingleClosedForm);
        assert_eq!(m(&two), CountMethod::TwoQminus1);
        assert_eq!(m(&disjoint), CountMethod::DisjointFull);
        assert_eq!(m(&other), CountMethod::BruteForce);
    }
}
