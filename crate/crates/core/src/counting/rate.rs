//! Information rates, capacities and the entropy helpers they rest on.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::combinatorics::{binomial, log2_big};
use crate::counting::{CountMethod, CountReport};
use crate::error::{domain, Result};

/// `h(p) = -p log2 p - (1-p) log2 (1-p)`, with `h(0) = h(1) = 0`.
pub fn binary_entropy(p: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(domain(format!("binary entropy needs p in [0, 1], got {p}")));
    }
    Ok(entropy_unchecked(p))
}

#[inline]
fn entropy_unchecked(p: f64) -> f64 {
    if p <= 0.0 || p >= 1.0 {
        return 0.0;
    }
    -p * p.log2() - (1.0 - p) * (1.0 - p).log2()
}

#[inline]
fn log_base(q: f64, x: f64) -> f64 {
    x.ln() / q.ln()
}

/// Rate and, where a closed form is known, the capacity of the channel a
/// [`CountReport`] describes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateReport {
    pub n: usize,
    /// `log_q(count) / n`, in `[0, 1]`.
    pub rate: f64,
    pub capacity: Option<f64>,
    /// Maximizer of the two-coloring exponent, when the count came from the
    /// `(q-1)` double sum.
    pub s_opt: Option<f64>,
}

/// `R_n = log_q(count) / n`.
///
/// The logarithm is taken of the exact integer (bit length plus the top 64
/// bits), so counts far beyond `f64` range are fine; the absolute error is
/// below `1e-12`.
pub fn info_rate(report: &CountReport) -> Result<RateReport> {
    if report.n == 0 {
        return Err(domain("information rate is undefined for n = 0"));
    }
    if report.q < 2 {
        return Err(domain("information rate needs q >= 2"));
    }
    if report.count.is_zero() {
        return Err(domain("information rate needs a positive count"));
    }
    let q_pow_n = BigUint::from(report.q).pow(report.n as u32);
    let rate = if report.count == q_pow_n {
        1.0
    } else {
        let r = log2_big(&report.count) / (report.n as f64 * (report.q as f64).log2());
        r.clamp(0.0, 1.0)
    };

    let (capacity, s_opt) = match report.method {
        CountMethod::BruteForce => (None, None),
        CountMethod::SingleClosedForm
        | CountMethod::DisjointFull
        | CountMethod::DisjointPartial => (Some(log_base(report.q as f64, report.c as f64)), None),
        CountMethod::TwoQminus1 => {
            let cap = capacity_two_qminus1(report.q)?;
            (Some(cap.capacity), Some(cap.s_opt))
        }
    };
    Ok(RateReport {
        n: report.n,
        rate,
        capacity,
        s_opt,
    })
}

/// Capacity of a single `c`-coloring: `log_q c`.
pub fn capacity_single(q: u32, c: usize) -> Result<f64> {
    if !(1 < c && c < q as usize) {
        return Err(domain(format!(
            "single-coloring capacity needs 1 < c < q, got q={q}, c={c}"
        )));
    }
    Ok(log_base(q as f64, c as f64))
}

/// Capacity of a disjoint profile: `log_q c`, whatever the number of
/// colorings.
pub fn capacity_disjoint(q: u32, c: usize, t: usize) -> Result<f64> {
    if c < 2 || t == 0 || c.saturating_mul(t) > q as usize {
        return Err(domain(format!(
            "disjoint capacity needs c >= 2, t >= 1 and c*t <= q, got q={q}, c={c}, t={t}"
        )));
    }
    Ok(log_base(q as f64, c as f64))
}

/// Capacity of two distinct `(q-1)`-colorings together with the maximizer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoColoringCapacity {
    /// Common optimal fraction of each excluded symbol,
    /// `1/2 - sqrt((q+2)(q-2)) / (2(q+2))`.
    pub s_opt: f64,
    pub capacity: f64,
}

/// Closed-form capacity of two distinct `(q-1)`-colorings.
///
/// `C = log_q(4) (1-s) h(s/(1-s)) + (1-2s) log_q(q-2)` at the optimal `s`.
/// For `q = 3` the second term is zero (`log_q 1 = 0`).
pub fn capacity_two_qminus1(q: u32) -> Result<TwoColoringCapacity> {
    if q < 3 {
        return Err(domain(format!(
            "two (q-1)-colorings need q >= 3, got q={q}"
        )));
    }
    let qf = q as f64;
    let s = 0.5 - ((qf + 2.0) * (qf - 2.0)).sqrt() / (2.0 * (qf + 2.0));
    let pair_term = log_base(qf, 4.0) * (1.0 - s) * entropy_unchecked(s / (1.0 - s));
    let other_term = if q == 3 {
        0.0
    } else {
        (1.0 - 2.0 * s) * log_base(qf, qf - 2.0)
    };
    Ok(TwoColoringCapacity {
        s_opt: s,
        capacity: pair_term + other_term,
    })
}

/// Growth exponent of the `(i, j) = (sn, tn)` term of the two-coloring
/// double sum, in base-`q` units per symbol:
///
/// `log_q(2) [(1-s) h(t/(1-s)) + (1-t) h(s/(1-t))] + (1-s-t) log_q(q-2)`.
///
/// Defined for `s, t >= 0` with `s + t <= 1`; returns `NaN` outside that
/// triangle.
pub fn two_coloring_exponent(q: u32, s: f64, t: f64) -> f64 {
    if s < 0.0 || t < 0.0 || s + t > 1.0 || q < 3 {
        return f64::NAN;
    }
    let qf = q as f64;
    let binom =
        (1.0 - s) * entropy_unchecked(t / (1.0 - s)) + (1.0 - t) * entropy_unchecked(s / (1.0 - t));
    let free = if q == 3 {
        0.0
    } else {
        (1.0 - s - t) * log_base(qf, qf - 2.0)
    };
    log_base(qf, 2.0) * binom + free
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridMaximum {
    pub s: f64,
    pub t: f64,
    pub value: f64,
}

/// Exhaustive maximization of [`two_coloring_exponent`] over the grid
/// `{(a·step, b·step) : a, b >= 1, (a+b)·step < 1}`.
///
/// Ties keep the lexicographically smallest `(a, b)`.
pub fn exponent_grid_argmax(q: u32, step: f64) -> Result<GridMaximum> {
    if q < 3 {
        return Err(domain(format!(
            "two (q-1)-colorings need q >= 3, got q={q}"
        )));
    }
    if !(step > 0.0 && step < 0.5) {
        return Err(domain(format!(
            "grid step must lie in (0, 0.5), got {step}"
        )));
    }
    let points = (1.0 / step).round() as u64;
    let best = (1..points)
        .into_par_iter()
        .map(|a| {
            let s = a as f64 * step;
            let mut best = (f64::NEG_INFINITY, a, 0u64);
            for b in 1..points - a {
                let v = two_coloring_exponent(q, s, b as f64 * step);
                if v > best.0 {
                    best = (v, a, b);
                }
            }
            best
        })
        .reduce(
            || (f64::NEG_INFINITY, u64::MAX, u64::MAX),
            |x, y| {
                if y.0 > x.0 || (y.0 == x.0 && (y.1, y.2) < (x.1, x.2)) {
                    y
                } else {
                    x
                }
            },
        );
    Ok(GridMaximum {
        s: best.1 as f64 * step,
        t: best.2 as f64 * step,
        value: best.0,
    })
}

/// `C(n, k)` next to its entropy bounds
/// `2^(n h(k/n)) / (n+1) <= C(n, k) <= 2^(n h(k/n))`.
#[derive(Debug, Clone, PartialEq)]
pub struct BinomialBounds {
    pub lower: f64,
    pub value: BigUint,
    pub upper: f64,
}

impl BinomialBounds {
    /// Whether `lower <= value <= upper`, allowing a relative slack of
    /// `1e-12` for the floating-point bounds.
    pub fn holds(&self) -> bool {
        let v = self.value.to_f64().unwrap_or(f64::INFINITY);
        let slack = 1e-12 * v.max(1.0);
        self.lower <= v + slack && v <= self.upper + slack
    }
}

/// Evaluates both sides of the entropy bound on `C(n, k)`. The bounds are
/// `f64` and overflow to infinity once `n h(k/n)` passes 1024.
pub fn binomial_bounds_check(n: u64, k: u64) -> Result<BinomialBounds> {
    if n == 0 || k > n {
        return Err(domain(format!(
            "binomial bounds need n >= 1 and k <= n, got n={n}, k={k}"
        )));
    }
    let upper = (n as f64 * entropy_unchecked(k as f64 / n as f64)).exp2();
    Ok(BinomialBounds {
        lower: upper / (n + 1) as f64,
        value: binomial(n, k),
        upper,
    })
}
