//! Exact size of the channel output space, information rates and capacities.
//!
//! For a profile `I` over `A_q`, `S_q^(n)(I)` is the set of distinct output
//! tuples as `x` ranges over all of `A_q^n`. The information rate is
//! `R_n = log_q |S_q^(n)(I)| / n` and the capacity is its limit superior.
//!
//! Every closed form in [`formulas`] has a brute-force counterpart in
//! [`enumerate`]; the test suites check one against the other.

pub mod enumerate;
pub mod formulas;
pub mod rate;

use std::fmt;

use num_bigint::BigUint;

pub use enumerate::{
    count_brute, enumerate_outputs, find_collision, OutputSpace, DEFAULT_MAX_STATES,
};
pub use formulas::{count_auto, count_disjoint, count_single, count_two_qminus1};
pub use rate::{
    binary_entropy, binomial_bounds_check, capacity_disjoint, capacity_single,
    capacity_two_qminus1, exponent_grid_argmax, info_rate, two_coloring_exponent, BinomialBounds,
    GridMaximum, RateReport, TwoColoringCapacity,
};

/// How a [`CountReport`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CountMethod {
    /// Enumeration of every input sequence.
    BruteForce,
    /// One `c`-coloring: a geometric sum.
    SingleClosedForm,
    /// Two distinct `(q-1)`-colorings: the double binomial sum.
    TwoQminus1,
    /// Disjoint profile that covers the alphabet (`ct = q`).
    DisjointFull,
    /// Disjoint profile that leaves symbols uncolored (`ct < q`).
    DisjointPartial,
}

impl CountMethod {
    pub fn name(self) -> &'static str {
        match self {
            CountMethod::BruteForce => "brute",
            CountMethod::SingleClosedForm => "lemma1",
            CountMethod::TwoQminus1 => "prop2",
            CountMethod::DisjointFull => "thm4-full",
            CountMethod::DisjointPartial => "thm4-partial",
        }
    }

    /// Human-readable statement of the formula behind the count.
    pub fn formula(self) -> &'static str {
        match self {
            CountMethod::BruteForce => "|{ y_I(x) : x in A_q^n }| by enumeration",
            CountMethod::SingleClosedForm => "sum_{i=0}^{n} c^i = (c^(n+1) - 1)/(c - 1)",
            CountMethod::TwoQminus1 => {
                "sum_{i=0}^{n} sum_{j=0}^{n-i} C(n-i,j) C(n-j,i) (q-2)^(n-i-j)"
            }
            CountMethod::DisjointFull => "c^n C(n+t-1, t-1)",
            CountMethod::DisjointPartial => "sum_{i=0}^{n} c^i C(i+t-1, t-1)",
        }
    }
}

impl fmt::Display for CountMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exact cardinality of an output space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub q: u32,
    pub c: usize,
    pub t: usize,
    pub n: usize,
    pub method: CountMethod,
    pub count: BigUint,
    /// False when the parameters lie outside the hypotheses under which the
    /// formula was established (the count is still computed).
    pub within_hypothesis: bool,
}
