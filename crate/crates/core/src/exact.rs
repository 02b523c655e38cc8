//! Number-theoretic primitives consumed by the expansion engine: Bernoulli
//! numbers, rising factorials, the degenerate Pochhammer bracket `[a]_n`,
//! the vanishing gate `h(m, n)`, and weak-composition enumeration.
//!
//! # Bernoulli convention
//!
//! Bernoulli numbers follow the generating function
//! `x/(e^x - 1) = sum_{m>=0} (B_m / m!) x^m`, so **`B_1 = -1/2`**. The
//! opposite sign convention silently corrupts every even-weight expansion
//! coefficient downstream, so this is the one convention in the crate that
//! must never be changed.

use crate::rational::Rational;
use num_bigint::BigInt;
use num_traits::One;
use std::sync::Mutex;

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// Number of weak compositions of `total` into `parts` parts,
/// `C(total + parts - 1, parts - 1)`.
pub fn composition_count(total: u64, parts: u64) -> BigInt {
    binomial(total + parts - 1, parts - 1)
}

static BERNOULLI_CACHE: Mutex<Vec<Rational>> = Mutex::new(Vec::new());

/// The `m`-th Bernoulli number, `B_1 = -1/2` convention.
///
/// Computed bottom-up from the recurrence
/// `sum_{k=0}^{n} C(n+1, k) B_k = 0` (n >= 1) with `B_0 = 1`, memoized
/// behind a lock so concurrent callers share the table. All arithmetic is
/// exact; `B_m = 0` for odd `m >= 3` falls out of the recurrence.
pub fn bernoulli(m: u32) -> Rational {
    let mut cache = BERNOULLI_CACHE.lock().unwrap();
    if cache.is_empty() {
        cache.push(Rational::one());
    }
    while cache.len() <= m as usize {
        let n = cache.len() as u64;
        let mut acc = Rational::zero();
        for (k, b) in cache.iter().enumerate() {
            acc += Rational::from_bigint(binomial(n + 1, k as u64)) * b;
        }
        let next = -acc / Rational::from_int((n + 1) as i64);
        cache.push(next);
    }
    cache[m as usize].clone()
}

/// Errors from the exact primitives.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    /// A rising factorial with negative order hit a zero factor,
    /// i.e. some of `a-1, a-2, ..., a+n` vanishes.
    #[error("rising factorial ({a})_{n} divides by zero")]
    RisingFactorialPole { a: Rational, n: i64 },
}

/// Rising factorial (Pochhammer symbol) `(a)_n = Gamma(a+n)/Gamma(a)`,
/// extended to negative integer order:
///
/// * `n >= 1`: `a (a+1) ... (a+n-1)`,
/// * `n == 0`: `1`,
/// * `n < 0`: `1 / ((a-1)(a-2)...(a+n))`, defined only when no factor is zero.
pub fn rising_factorial(a: &Rational, n: i64) -> Result<Rational, ExactError> {
    let mut acc = Rational::one();
    if n >= 1 {
        for i in 0..n {
            acc *= &(a + &Rational::from_int(i));
        }
        Ok(acc)
    } else {
        for i in 1..=(-n) {
            let factor = a - &Rational::from_int(i);
            if factor.is_zero() {
                return Err(ExactError::RisingFactorialPole { a: a.clone(), n });
            }
            acc *= &factor;
        }
        Ok(acc.recip())
    }
}

/// Whether a bracket factor carries the linear form or is a bare constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BracketKind {
    Linear,
    Constant,
}

/// The degenerate Pochhammer leading factor `[a]_n`:
///
/// * `n >= 1`: `a * (n-1)!` — linear in `a`,
/// * `n <= 0`: the constant `(-1)^n / (-n)!`.
///
/// The `n = 0` value (`1`) extends the constant branch, which is stated only
/// for `n < 0`; the extension is the unique choice consistent with the
/// three-case leading behavior of Pochhammer ratios (see `h_gate`) and with
/// the known depth-2 and depth-3 expansion constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketFactor {
    pub kind: BracketKind,
    pub scalar: Rational,
}

/// Compute `[a]_n` for the attached (symbolic) `a`.
pub fn bracket(n: i64) -> BracketFactor {
    if n >= 1 {
        BracketFactor {
            kind: BracketKind::Linear,
            scalar: Rational::from_bigint(factorial((n - 1) as u64)),
        }
    } else {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        BracketFactor {
            kind: BracketKind::Constant,
            scalar: Rational::from_parts(BigInt::from(sign), factorial((-n) as u64)),
        }
    }
}

/// The gate `h(m, n)`: `false` (0) iff `m >= 1 > n`, else `true` (1).
///
/// It kills exactly the composition terms whose Pochhammer ratio is `O(e)`:
/// numerator index at least 1, denominator index below 1.
pub fn h_gate(m: i64, n: i64) -> bool {
    !(m >= 1 && n < 1)
}

/// A weak composition: an ordered vector of non-negative parts with fixed sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Composition {
    pub parts: Vec<u32>,
}

impl Composition {
    /// Suffix sum `p_n + p_{n+1} + ... + p_d` for 1-based `n`.
    pub fn suffix(&self, n: usize) -> u32 {
        self.parts[n - 1..].iter().sum()
    }
}

/// Streaming enumeration of all weak compositions of `total` into `parts`
/// non-negative parts in lexicographic order, each exactly once.
///
/// The successor is generated in place, so the full set (which can run to
/// millions of vectors at large depth and weight) is never materialized.
pub fn compositions(total: u32, parts: u32) -> Compositions {
    assert!(parts >= 1, "need at least one part");
    let mut first = vec![0u32; parts as usize];
    *first.last_mut().unwrap() = total;
    Compositions { state: Some(first) }
}

/// Iterator returned by [`compositions`].
#[derive(Debug, Clone)]
pub struct Compositions {
    state: Option<Vec<u32>>,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let cur = self.state.as_mut()?;
        let item = Composition { parts: cur.clone() };
        // Lexicographic successor: bump the entry left of the rightmost
        // nonzero tail entry, then flush the remainder to the last slot.
        let last = cur.len() - 1;
        match (1..=last).rev().find(|&j| cur[j] > 0) {
            None => self.state = None,
            Some(j) => {
                let rem = cur[j] - 1;
                cur[j - 1] += 1;
                for slot in cur[j..].iter_mut() {
                    *slot = 0;
                }
                cur[last] = rem;
            }
        }
        Some(item)
    }
}
