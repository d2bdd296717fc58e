use num_traits::Zero;

use crate::combinatorics::{binomial, binomial_u128};
use crate::error::{domain, Result};

fn check_design_params(v: u64, k: u64, tau: u64) -> Result<()> {
    if !(v >= k && k >= tau && tau >= 1) {
        return Err(domain(format!(
            "covering parameters need v >= k >= tau >= 1, got ({v}, {k}, {tau})"
        )));
    }
    Ok(())
}

/// Schönheim lower bound on the number of blocks of a `(v, k, tau)`
/// covering design:
///
/// `⌈v/k ⌈(v-1)/(k-1) ⌈ … ⌈(v-tau+1)/(k-tau+1)⌉ … ⌉⌉⌉`.
///
/// Evaluated innermost first in exact integer arithmetic.
pub fn schonheim_bound(v: u64, k: u64, tau: u64) -> Result<u128> {
    check_design_params(v, k, tau)?;
    let mut bound: u128 = 1;
    for h in (0..tau).rev() {
        let num = ((v - h) as u128)
            .checked_mul(bound)
            .ok_or_else(|| domain("Schönheim bound overflows u128"))?;
        bound = num.div_ceil((k - h) as u128);
    }
    Ok(bound)
}

/// Divisibility conditions `C(k-h, tau-h) | C(v-h, tau-h)` for every
/// `h = 0, …, tau-1`.
pub fn schonheim_tightness(v: u64, k: u64, tau: u64) -> Result<bool> {
    check_design_params(v, k, tau)?;
    Ok((0..tau).all(|h| {
        let whole = binomial(v - h, tau - h);
        let block = binomial(k - h, tau - h);
        (whole % block).is_zero()
    }))
}

/// Smallest `T` such that every profile of `T` distinct `c`-colorings of
/// `A_q` is a 2-cover:
///
/// `T_min(q, c) = C(q-1, c) + C(q-2, c-1) + 1`.
///
/// The largest non-cover takes every coloring except those containing a
/// fixed pair `{α, β}`, i.e. `C(q, c) - C(q-2, c-2)` colorings, and the
/// formula is that number plus one. For `c = 2` it equals `C(q, 2)` and for
/// `c = q-1` it equals 3.
pub fn t_capital_min(q: u32, c: usize) -> Result<u128> {
    if q < 3 || c < 2 || c >= q as usize {
        return Err(domain(format!(
            "T_min needs q >= 3 and 2 <= c <= q-1, got q={q}, c={c}"
        )));
    }
    let (q, c) = (q as u64, c as u64);
    let parts = [binomial_u128(q - 1, c), binomial_u128(q - 2, c - 1), 1];
    if parts.contains(&u128::MAX) {
        return Err(domain("T_min overflows u128"));
    }
    parts
        .iter()
        .try_fold(0u128, |acc, &p| acc.checked_add(p))
        .ok_or_else(|| domain("T_min overflows u128"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_examples() {
        assert_eq!(schonheim_bound(7, 3, 2).unwrap(), 7);
        assert_eq!(schonheim_bound(5, 2, 2).unwrap(), 10);
        for k in 1..8 {
            for tau in 1..=k {
                assert_eq!(schonheim_bound(k, k, tau).unwrap(), 1);
            }
        }
        assert!(schonheim_bound(3, 4, 2).is_err());
        assert!(schonheim_bound(5, 3, 0).is_err());
    }

    #[test]
    fn pairs_bound_is_binomial() {
        for q in 2..40u64 {
            assert_eq!(schonheim_bound(q, 2, 2).unwrap(), (q * (q - 1) / 2) as u128);
        }
    }

    #[test]
    fn tightness_examples() {
        assert!(schonheim_tightness(7, 3, 2).unwrap());
        assert!(!schonheim_tightness(6, 4, 2).unwrap());
        for q in 2..30 {
            assert!(schonheim_tightness(q, 2, 2).unwrap());
        }
        assert!(schonheim_tightness(9, 3, 2).unwrap());
        assert!(schonheim_tightness(13, 4, 2).unwrap());
        assert!(!schonheim_tightness(8, 3, 2).unwrap());
    }

    #[test]
    fn t_capital_min_examples() {
        assert_eq!(t_capital_min(4, 2).unwrap(), 6);
        assert_eq!(t_capital_min(4, 3).unwrap(), 3);
        assert_eq!(t_capital_min(5, 3).unwrap(), 8);
        assert_eq!(t_capital_min(6, 3).unwrap(), 17);
        assert!(t_capital_min(4, 4).is_err());
        assert!(t_capital_min(4, 1).is_err());
    }

    #[test]
    fn t_capital_min_special_cases() {
        for q in 3..30u32 {
            let pairs = (q * (q - 1) / 2) as u128;
            assert_eq!(t_capital_min(q, 2).unwrap(), pairs);
            assert_eq!(t_capital_min(q, q as usize - 1).unwrap(), 3);
        }
    }

    #[test]
    fn t_capital_min_is_all_but_the_pair_blocks_plus_one() {
        for q in 4..20u64 {
            for c in 2..q {
                let all = binomial_u128(q, c);
                let through_pair = binomial_u128(q - 2, c - 2);
                assert_eq!(
                    t_capital_min(q as u32, c as usize).unwrap(),
                    all - through_pair + 1
                );
            }
        }
    }
}
