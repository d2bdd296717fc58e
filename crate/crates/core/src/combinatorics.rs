//! Exact combinatorial helpers shared by the counting and covering code.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// `C(n, k)` as an arbitrary-precision integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // exact at every step: acc * (n-i) is divisible by (i+1)
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(n, k)` in `u128`, saturating at `u128::MAX`.
pub fn binomial_u128(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        let num = n as u128 - i;
        let g = gcd(acc, i + 1);
        let (a, d) = (acc / g, (i + 1) / g);
        match (a).checked_mul(num / d) {
            // num is divisible by d because acc*num is divisible by i+1
            Some(v) => acc = v,
            None => return u128::MAX,
        }
    }
    acc
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `log2(x)` for a positive big integer, without converting `x` to `f64`.
///
/// The top 64 bits are converted exactly to a mantissa; the rest contributes
/// through the shift. Relative error of the mantissa is below `2^-52`, so the
/// absolute error of the result stays near machine epsilon.
pub fn log2_big(x: &BigUint) -> f64 {
    assert!(!x.is_zero(), "log2 of zero");
    let bits = x.bits();
    if bits <= 64 {
        return (x.to_u64().unwrap() as f64).log2();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().unwrap();
    shift as f64 + (top as f64).log2()
}

/// Lexicographic iterator over the `k`-subsets of `{0, …, n-1}`, each
/// yielded as a strictly increasing index vector.
#[derive(Debug, Clone)]
pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        let current = (k <= n).then(|| (0..k).collect());
        Combinations { n, current }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        let k = cur.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i] < self.n - k + i {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Colexicographic iterator over the `k`-subsets of `{0, …, n-1}`.
///
/// Colex order visits every subset of `{0, …, m-1}` before any subset that
/// uses `m`, so a scan can be stopped and resumed from a rank.
#[derive(Debug, Clone)]
pub struct ColexSubsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl ColexSubsets {
    pub fn new(n: usize, k: usize) -> Self {
        let current = (k <= n).then(|| (0..k).collect());
        ColexSubsets { n, current }
    }
}

impl Iterator for ColexSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        let k = cur.len();
        // smallest i whose element can move up without hitting its successor
        let mut i = 0;
        while i < k {
            let limit = if i + 1 < k { cur[i + 1] } else { self.n };
            if cur[i] + 1 < limit {
                break;
            }
            i += 1;
        }
        if i == k {
            self.current = None;
        } else {
            cur[i] += 1;
            for (j, v) in cur.iter_mut().enumerate().take(i) {
                *v = j;
            }
        }
        Some(out)
    }
}
