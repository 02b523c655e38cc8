//! Independent verification oracles.
//!
//! Three layers, none of which shares code with the expansion engine:
//!
//! * exact Riemann zeta values at non-positive integers,
//! * the exact depth-2 stuffle (harmonic product) constraint
//!   `zeta(a) zeta(b) = zeta_2(a,b) + zeta_2(b,a) + zeta(a+b)`, continued
//!   meromorphically, which pins sums of swapped leading terms to a
//!   constant,
//! * a floating-point Euler-Maclaurin continuation of the depth-2 function
//!   for numeric cross-checks near lattice points.
//!
//! The Euler-Maclaurin sign conventions are fixed by calibration against
//! direct summation (the `s = 2, a = 11` tail is the canonical fixture),
//! not trusted from any single reference. Plain `f64` suffices for the
//! 1e-7-scale targets at these parameter sizes.

use crate::exact::bernoulli;
use crate::rational::Rational;

/// Parameters of the Euler-Maclaurin evaluations: `n` summed head terms,
/// `j` correction pairs, and `r` tail-expansion orders for the double-sum
/// reduction. Continuation of a Hurwitz call at argument `s` is valid only
/// for `s > 1 - 2j`, which is enforced per call.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EMParams {
    n: u32,
    j: u32,
    r: u32,
}

impl EMParams {
    /// Requires `n >= 8`, `j >= 2`, `r >= 2`.
    pub fn new(n: u32, j: u32, r: u32) -> Result<Self, OracleError> {
        if n < 8 || j < 2 || r < 2 {
            return Err(OracleError::BadParams { n, j, r });
        }
        Ok(EMParams { n, j, r })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    pub fn r(&self) -> u32 {
        self.r
    }
}

impl Default for EMParams {
    fn default() -> Self {
        EMParams { n: 30, j: 8, r: 8 }
    }
}

/// Errors from the numeric oracles.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OracleError {
    #[error("parameters (N={n}, J={j}, R={r}) below minimum (8, 2, 2)")]
    BadParams { n: u32, j: u32, r: u32 },

    #[error("Hurwitz zeta has a pole at s = 1")]
    PoleAtOne,

    #[error("s = {s} outside the continued region s > {bound} for J = {j}")]
    RegionExceeded { s: f64, bound: f64, j: u32 },

    #[error("({s1}, {s2}) is within 1e-8 of the depth-2 singular set")]
    SingularInput { s1: f64, s2: f64 },

    #[error("arguments violate the convergence condition at k = {k}")]
    NotInConvergenceDomain { k: usize },
}

/// Exact `zeta(-m) = (-1)^m B_{m+1} / (m+1)`.
pub fn zeta_nonpositive(m: u32) -> Rational {
    let b = bernoulli(m + 1);
    let value = b / Rational::from_int((m + 1) as i64);
    if m % 2 == 0 {
        value
    } else {
        -value
    }
}

/// The constant the stuffle identity forces on the sum of a depth-2
/// leading term and its argument swap near `(-m1, -m2)`:
/// `zeta(-m1) zeta(-m2) - zeta(-m1-m2)`.
pub fn stuffle_constant(m1: u32, m2: u32) -> Rational {
    zeta_nonpositive(m1) * zeta_nonpositive(m2) - zeta_nonpositive(m1 + m2)
}

fn b2j_over_factorial(j: u32) -> f64 {
    let b = bernoulli(2 * j);
    let fact = Rational::from_bigint(crate::exact::factorial(2 * j as u64));
    (b / fact).to_f64()
}

/// Rising factorial of a real argument, `s (s+1) ... (s+r-1)`.
fn rising_f64(s: f64, r: u32) -> f64 {
    (0..r).fold(1.0, |acc, i| acc * (s + i as f64))
}

/// `x^e` with an exact-integer fast path.
fn powf(x: f64, e: f64) -> f64 {
    if e.fract() == 0.0 && e.abs() <= 64.0 {
        x.powi(e as i32)
    } else {
        x.powf(e)
    }
}

/// Euler-Maclaurin continuation of the Hurwitz zeta function
/// `sum_{k>=0} (a+k)^{-s}` for real `s != 1`, `a > 0`:
///
/// ```text
/// sum_{k=0}^{N-1} (a+k)^{-s} + (a+N)^{1-s}/(s-1) + (a+N)^{-s}/2
///   + sum_{j=1}^{J} B_{2j}/(2j)! * (s)_{2j-1} * (a+N)^{-s-2j+1}
/// ```
///
/// Valid (and increasingly accurate in `N`, `J`) for `s > 1 - 2J`. At
/// negative integer `s` the correction series terminates and the value is
/// exact up to rounding, matching `zeta_nonpositive` at `a = 1`.
pub fn hurwitz_zeta_em(s: f64, a: f64, params: &EMParams) -> Result<f64, OracleError> {
    if s == 1.0 {
        return Err(OracleError::PoleAtOne);
    }
    let bound = 1.0 - 2.0 * params.j as f64;
    if s <= bound {
        return Err(OracleError::RegionExceeded { s, bound, j: params.j });
    }
    assert!(a > 0.0, "Hurwitz parameter must be positive");
    // At negative s the head and the edge term are huge and cancel almost
    // completely (e.g. ~4e9 down to -1/2 at s = -6, N = 30), so the whole
    // evaluation runs in double-double to keep absolute error near 1e-13.
    let mut acc = DoubleDouble::zero();
    for k in 0..params.n {
        acc = acc.add_f64(powf(a + k as f64, -s));
    }
    let edge = a + params.n as f64;
    acc = acc.add(DoubleDouble::div(powf(edge, 1.0 - s), s - 1.0));
    acc = acc.add_f64(powf(edge, -s) / 2.0);
    for j in 1..=params.j {
        let term = DoubleDouble::prod(b2j_over_factorial(j), rising_f64(s, 2 * j - 1))
            .mul_f64(powf(edge, -s - 2.0 * j as f64 + 1.0));
        acc = acc.add(term);
    }
    Ok(acc.value())
}

/// Euler-Maclaurin continuation of the depth-2 function
/// `zeta_2(s1, s2) = sum_{m>=1} m^{-s1} sum_{n>=1} (m+n)^{-s2}`.
///
/// The head sums `m <= N` with an inner Hurwitz continuation at `m+1`; the
/// tail substitutes the asymptotic expansion of the inner sum,
///
/// ```text
/// sum_{n>=1} (m+n)^{-s2} ~ m^{1-s2}/(s2-1) - m^{-s2}/2
///     + sum_{j=1}^{R} B_{2j}/(2j)! (s2)_{2j-1} m^{-s2-2j+1},
/// ```
///
/// and resums each power of `m` over `m > N` as a Hurwitz value at `N+1`,
/// each term continued meromorphically. Inputs within 1e-8 of the exact
/// depth-2 singular set (`s2 = 1` or `s1+s2 in {2, 1, 0, -2, -4, ...}`)
/// are rejected; that set also covers every internal pole.
pub fn zeta2_em(s1: f64, s2: f64, params: &EMParams) -> Result<f64, OracleError> {
    const SINGULAR_EPS: f64 = 1e-8;
    let t = s1 + s2;
    let near_locus = {
        let near_two = (t - 2.0).abs() < SINGULAR_EPS;
        let near_one = (t - 1.0).abs() < SINGULAR_EPS;
        let near_even_nonpos = {
            let nearest = 2.0 * (t / 2.0).round();
            nearest <= 0.5 && (t - nearest).abs() < SINGULAR_EPS
        };
        near_two || near_one || near_even_nonpos
    };
    if (s2 - 1.0).abs() < SINGULAR_EPS || near_locus {
        return Err(OracleError::SingularInput { s1, s2 });
    }

    let mut head = KahanSum::new();
    for m in 1..=params.n {
        let mf = m as f64;
        head.add(powf(mf, -s1) * hurwitz_zeta_em(s2, mf + 1.0, params)?);
    }
    let edge = (params.n + 1) as f64;
    let mut tail = hurwitz_zeta_em(t - 1.0, edge, params)? / (s2 - 1.0)
        - hurwitz_zeta_em(t, edge, params)? / 2.0;
    for j in 1..=params.r {
        tail += b2j_over_factorial(j)
            * rising_f64(s2, 2 * j - 1)
            * hurwitz_zeta_em(t + 2.0 * j as f64 - 1.0, edge, params)?;
    }
    Ok(head.value() + tail)
}

/// Truncated direct nested summation of the defining series, with all
/// indices up to `cutoff`. Only valid — and only accepted — inside the
/// convergence domain `Re(s_d(d-k+1)) > k` for `k = 1..=d`; used to
/// calibrate the Euler-Maclaurin oracle.
pub fn direct_series(s: &[f64], cutoff: u32) -> Result<f64, OracleError> {
    let d = s.len();
    assert!(d >= 1, "need at least one exponent");
    for k in 1..=d {
        let suffix: f64 = s[d - k..].iter().sum();
        if suffix <= k as f64 {
            return Err(OracleError::NotInConvergenceDomain { k });
        }
    }
    match d {
        1 => {
            let mut acc = KahanSum::new();
            for m in (1..=cutoff).rev() {
                acc.add(powf(m as f64, -s[0]));
            }
            Ok(acc.value())
        }
        2 => {
            let mut acc = KahanSum::new();
            for m1 in (1..=cutoff).rev() {
                let outer = powf(m1 as f64, -s[0]);
                let mut inner = KahanSum::new();
                for m2 in (1..=cutoff).rev() {
                    inner.add(powf((m1 + m2) as f64, -s[1]));
                }
                acc.add(outer * inner.value());
            }
            Ok(acc.value())
        }
        _ => {
            let mut acc = KahanSum::new();
            nested_sum(s, cutoff, 0, 0, 1.0, &mut acc);
            Ok(acc.value())
        }
    }
}

fn nested_sum(s: &[f64], cutoff: u32, level: usize, prefix: u64, weight: f64, acc: &mut KahanSum) {
    for m in 1..=cutoff as u64 {
        let partial = prefix + m;
        let w = weight * powf(partial as f64, -s[level]);
        if level + 1 == s.len() {
            acc.add(w);
        } else {
            nested_sum(s, cutoff, level + 1, partial, w, acc);
        }
    }
}

/// Unevaluated sum of two doubles, `hi + lo` with `|lo| <= ulp(hi)/2`.
/// Gives roughly 32 significant digits, enough to survive the head/edge
/// cancellation in the Euler-Maclaurin evaluation.
#[derive(Debug, Clone, Copy)]
struct DoubleDouble {
    hi: f64,
    lo: f64,
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, f64::mul_add(a, b, -p))
}

impl DoubleDouble {
    fn zero() -> Self {
        DoubleDouble { hi: 0.0, lo: 0.0 }
    }

    fn add_f64(self, x: f64) -> Self {
        let (s, e) = two_sum(self.hi, x);
        let (hi, lo) = quick_two_sum(s, self.lo + e);
        DoubleDouble { hi, lo }
    }

    fn add(self, other: DoubleDouble) -> Self {
        let (s, e) = two_sum(self.hi, other.hi);
        let (hi, lo) = quick_two_sum(s, self.lo + other.lo + e);
        DoubleDouble { hi, lo }
    }

    /// Exact-error product of two doubles.
    fn prod(a: f64, b: f64) -> Self {
        let (hi, lo) = two_prod(a, b);
        DoubleDouble { hi, lo }
    }

    fn mul_f64(self, x: f64) -> Self {
        let (p, e) = two_prod(self.hi, x);
        let (hi, lo) = quick_two_sum(p, f64::mul_add(self.lo, x, e));
        DoubleDouble { hi, lo }
    }

    /// `a / b` with one Newton correction recovering the division error.
    fn div(a: f64, b: f64) -> Self {
        let q = a / b;
        let r = f64::mul_add(-q, b, a);
        let (hi, lo) = quick_two_sum(q, r / b);
        DoubleDouble { hi, lo }
    }

    fn value(self) -> f64 {
        self.hi + self.lo
    }
}

/// Compensated accumulator; the depth-2 calibration sums run to 1e8 terms.
struct KahanSum {
    sum: f64,
    carry: f64,
}

impl KahanSum {
    fn new() -> Self {
        KahanSum { sum: 0.0, carry: 0.0 }
    }

    fn add(&mut self, x: f64) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum
    }
}
