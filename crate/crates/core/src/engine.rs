//! The expansion engine: exact leading terms of the multiple zeta function
//! near non-positive integer lattice points, and the limit regimes driven
//! from them.
//!
//! For a target point `(-m_1, ..., -m_d)` with weight `M = m_1 + ... + m_d`,
//! the leading term is
//!
//! ```text
//! (-1)^{m_d} m_d! * sum over p_1+...+p_d = d+M of
//!     prod_i B_{p_i}/p_i!
//!     * prod_{j=2..d} h(a_j, b_j) * [E_j]_{a_j} / [E_{j-1}]_{b_j}
//! ```
//!
//! where `E_j = e_j + ... + e_d` is the j-th suffix form,
//! `a_j = -(m_j+...+m_d) - d + j + (p_j+...+p_d) - 1`, and
//! `b_j = -(m_{j-1}+...+m_d) - d + j + (p_j+...+p_d) - 1`. Note that the
//! numerator and denominator indices share the same `p` suffix sum and
//! differ only in the `m` suffix: `b_j` includes `m_{j-1}`. Getting that
//! off-by-one wrong still reproduces every all-zero lattice point and fails
//! only for `m != 0`; the depth-2 point `m = (1, 1)` with its golden value
//! `1/360 + (1/720) e_2/(e_1+e_2)` is the designated tripwire.
//!
//! The result is homogeneous of degree 0 in the perturbations, which is why
//! a directional limit is a plain evaluation at `theta`.
//!
//! The hypotheses under which the leading term approximates the function
//! (`|e_1| + ... + |e_d| <= 1/2`, and every ratio `|e_k / E_j|` bounded as
//! the perturbations shrink) constrain the regime of validity, not the
//! algebra; [`path_condition_check`] reports exactly when a monomial path
//! violates the bounded-ratio hypothesis, without blocking evaluation —
//! geometrically, an unbounded ratio means the path approaches the singular
//! locus `s_j + ... + s_d = -M` asymptotically, where the fixed rational
//! function may still have a limit.
//!
//! One discrepancy against published depth-2 tables is deliberate: at
//! `m = (0, 0)` some sources print `1/3 + (1/24) e_2/(e_1+e_2)`. The stuffle
//! identity pins the ratio coefficient: adding the expansion to its swap
//! must give the constant `zeta(0)^2 - zeta(0) = 3/4`, which forces `1/12`.
//! This engine and its stuffle oracle agree on `1/12`, so `1/24` is treated
//! as an erratum.

use crate::exact::{bernoulli, bracket, compositions, factorial, h_gate, BracketKind};
use crate::rational::Rational;
use crate::symbolic::{
    limit_at_zero, DeltaLimit, LinearForm, PathAssignment, RationalFunctionSum, RawTerm,
    SymbolicError,
};
use num_bigint::BigInt;
use num_traits::Signed;
use std::fmt;

/// A non-positive integer lattice point `(-m_1, ..., -m_d)`, stored by its
/// non-negative part vector `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    m: Vec<u32>,
}

impl Point {
    /// Requires depth at least 1.
    pub fn new(m: Vec<u32>) -> Result<Self, EngineError> {
        if m.is_empty() {
            return Err(EngineError::Precondition(
                "depth must be at least 1".to_string(),
            ));
        }
        Ok(Point { m })
    }

    pub fn depth(&self) -> usize {
        self.m.len()
    }

    /// Weight `M = m_1 + ... + m_d`.
    pub fn weight(&self) -> u32 {
        self.m.iter().sum()
    }

    pub fn parts(&self) -> &[u32] {
        &self.m
    }

    /// Suffix sum `m_n + m_{n+1} + ... + m_d` (1-based `n`).
    pub fn suffix(&self, n: usize) -> u32 {
        self.m[n - 1..].iter().sum()
    }
}

/// Errors from engine operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A path limit diverges to a signed infinity.
    #[error("limit diverges to {}infinity", if *negative { "-" } else { "+" })]
    Divergent { negative: bool },

    /// Iterated substitution finished without reducing to a constant.
    #[error("ordered limit did not reduce to a constant")]
    NotConstant,
}

/// Exact leading term of `zeta_d(-m_1 + e_1, ..., -m_d + e_d)` as a
/// canonical sum of linear-form power products.
///
/// Compositions containing a part with vanishing Bernoulli number (odd part
/// at least 3) are pruned before any factor work; the gate `h` then removes
/// the terms whose Pochhammer ratio degenerates to `O(e)`. Depth 1 needs no
/// special casing: the factor product over `j = 2..d` is empty and the sum
/// collapses to the single composition `p_1 = 1 + m_1`.
pub fn leading_term(p: &Point) -> RationalFunctionSum {
    let d = p.depth();
    let total = d as u32 + p.weight();
    let prefactor = signed_factorial(p.m[d - 1]);

    let mut raw = Vec::new();
    'comps: for comp in compositions(total, d as u32) {
        // B_p = 0 for odd p >= 3 annihilates the whole composition.
        if comp.parts.iter().any(|&q| q >= 3 && q % 2 == 1) {
            continue;
        }
        let mut coeff = prefactor.clone();
        for &q in &comp.parts {
            coeff *= &(bernoulli(q) / Rational::from_bigint(factorial(q as u64)));
        }
        let mut factors = Vec::with_capacity(2 * (d - 1));
        for j in 2..=d {
            let (num_idx, den_idx) = factor_indices(p, &comp.parts, j);
            if !h_gate(num_idx, den_idx) {
                continue 'comps;
            }
            let num = bracket(num_idx);
            match num.kind {
                BracketKind::Linear => {
                    coeff *= &num.scalar;
                    factors.push((LinearForm::suffix(d, j), 1));
                }
                BracketKind::Constant => coeff *= &num.scalar,
            }
            let den = bracket(den_idx);
            match den.kind {
                BracketKind::Linear => {
                    coeff *= &den.scalar.recip();
                    factors.push((LinearForm::suffix(d, j - 1), -1));
                }
                BracketKind::Constant => coeff *= &den.scalar.recip(),
            }
        }
        raw.push(RawTerm::new(coeff, factors));
    }
    RationalFunctionSum::canonicalize(d, raw).consolidate_numerators()
}

/// Same value as [`leading_term`], computed through the restricted-sum form:
/// instead of gating each factor with `h`, the composition stream itself is
/// filtered by the literal index condition
/// `-(m_j+...+m_d) - d + j + (p_j+...+p_d) < 2` or
/// `-(m_{j-1}+...+m_d) - d + j + (p_j+...+p_d) >= 2` for every `j`.
/// Kept as an independent code path so the two constructions cross-check
/// each other; no Bernoulli pruning is applied here, zero coefficients
/// simply drop out in canonicalization.
pub fn leading_term_restricted(p: &Point) -> RationalFunctionSum {
    let d = p.depth();
    let total = d as u32 + p.weight();
    let prefactor = signed_factorial(p.m[d - 1]);

    let mut raw = Vec::new();
    for comp in compositions(total, d as u32) {
        let admitted = (2..=d).all(|j| {
            let p_suf = comp.suffix(j) as i64;
            let lhs_num = -(p.suffix(j) as i64) - d as i64 + j as i64 + p_suf;
            let lhs_den = -(p.suffix(j - 1) as i64) - d as i64 + j as i64 + p_suf;
            lhs_num < 2 || lhs_den >= 2
        });
        if !admitted {
            continue;
        }
        let mut coeff = prefactor.clone();
        for &q in &comp.parts {
            coeff *= &(bernoulli(q) / Rational::from_bigint(factorial(q as u64)));
        }
        let mut factors = Vec::with_capacity(2 * (d - 1));
        for j in 2..=d {
            let (num_idx, den_idx) = factor_indices(p, &comp.parts, j);
            let num = bracket(num_idx);
            match num.kind {
                BracketKind::Linear => {
                    coeff *= &num.scalar;
                    factors.push((LinearForm::suffix(d, j), 1));
                }
                BracketKind::Constant => coeff *= &num.scalar,
            }
            let den = bracket(den_idx);
            match den.kind {
                BracketKind::Linear => {
                    coeff *= &den.scalar.recip();
                    factors.push((LinearForm::suffix(d, j - 1), -1));
                }
                BracketKind::Constant => coeff *= &den.scalar.recip(),
            }
        }
        raw.push(RawTerm::new(coeff, factors));
    }
    RationalFunctionSum::canonicalize(d, raw).consolidate_numerators()
}

/// Bracket indices `(a_j, b_j)` for factor `j` of a composition.
fn factor_indices(p: &Point, parts: &[u32], j: usize) -> (i64, i64) {
    let d = p.depth() as i64;
    let p_suf: i64 = parts[j - 1..].iter().map(|&q| q as i64).sum();
    let shared = -d + j as i64 + p_suf - 1;
    let num_idx = -(p.suffix(j) as i64) + shared;
    let den_idx = -(p.suffix(j - 1) as i64) + shared;
    (num_idx, den_idx)
}

/// `(-1)^m * m!`.
fn signed_factorial(m: u32) -> Rational {
    let f = Rational::from_bigint(factorial(m as u64));
    if m % 2 == 0 {
        f
    } else {
        -f
    }
}

/// Iterated (coordinatewise) limit: variables are sent to zero one at a
/// time in the listed order (first entry vanishes first). The fold must end
/// in a constant.
pub fn ordered_limit(p: &Point, order: &[usize]) -> Result<Rational, EngineError> {
    let d = p.depth();
    let mut seen = vec![false; d];
    if order.len() != d || !order.iter().all(|&v| (1..=d).contains(&v) && !std::mem::replace(&mut seen[v - 1], true)) {
        return Err(EngineError::Precondition(format!(
            "order must be a permutation of 1..={d}"
        )));
    }
    let mut f = leading_term(p);
    for &var in order {
        f = f.substitute_zero(var)?;
    }
    f.constant_value().ok_or(EngineError::NotConstant)
}

/// Directional limit along `e = delta * theta`: every component and every
/// suffix sum of `theta` must be nonzero (otherwise the approach runs into
/// the singular set and the expansion hypothesis fails). Because the
/// leading term is homogeneous of degree 0, the `delta` scaling cancels and
/// the limit is a plain exact evaluation at `theta`.
pub fn directional_limit(p: &Point, theta: &[Rational]) -> Result<Rational, EngineError> {
    let d = p.depth();
    if theta.len() != d {
        return Err(EngineError::Precondition(format!(
            "theta must have {d} components"
        )));
    }
    for (i, t) in theta.iter().enumerate() {
        if t.is_zero() {
            return Err(EngineError::Precondition(format!(
                "theta_{} must be nonzero",
                i + 1
            )));
        }
    }
    for j in 1..=d {
        let suffix: Rational = theta[j - 1..]
            .iter()
            .fold(Rational::zero(), |acc, t| acc + t);
        if suffix.is_zero() {
            return Err(EngineError::Precondition(format!(
                "suffix sum theta_{j}+...+theta_{d} must be nonzero"
            )));
        }
    }
    Ok(leading_term(p).evaluate_at(theta)?)
}

/// Limit along a monomial path `e_j = c_j delta^{k_j}`, `delta -> 0+`.
pub fn path_limit(p: &Point, path: &PathAssignment) -> Result<Rational, EngineError> {
    let ratio = leading_term(p).substitute_path(path)?;
    match limit_at_zero(&ratio) {
        DeltaLimit::Finite(v) => Ok(v),
        DeltaLimit::Infinite { negative } => Err(EngineError::Divergent { negative }),
    }
}

/// A violation of the bounded-ratio hypothesis along a monomial path:
/// `e_k / (e_j + ... + e_d)` blows up because the suffix sum vanishes to
/// higher order (or identically).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathWarning {
    pub j: usize,
    pub k: usize,
    pub var_order: u32,
    /// `None` when the suffix sum is identically zero along the path.
    pub suffix_order: Option<u32>,
}

impl fmt::Display for PathWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.suffix_order {
            Some(s) => write!(
                f,
                "|e{k}/(e{j}+...)| unbounded along path: ord(e{k}) = {v} < ord(suffix from e{j}) = {s}",
                k = self.k,
                j = self.j,
                v = self.var_order,
            ),
            None => write!(
                f,
                "suffix sum e{j}+... is identically zero along the path",
                j = self.j
            ),
        }
    }
}

/// Check the bounded-ratio hypothesis `|e_k / (e_j+...+e_d)|` bounded for
/// every `1 <= j <= d`, `j <= k <= d` along a monomial path, by comparing
/// exact delta-orders. Warnings never block evaluation: the leading term is
/// a fixed rational function whose limit may exist even where the
/// hypothesis fails.
pub fn path_condition_check(p: &Point, path: &PathAssignment) -> Vec<PathWarning> {
    let d = p.depth();
    assert_eq!(path.len(), d, "path length must match depth");
    let mut warnings = Vec::new();
    for j in 1..=d {
        let suffix_poly = LinearForm::suffix(d, j).to_delta_poly(path);
        let suffix_order = suffix_poly.order().map(|o| o as u32);
        for k in j..=d {
            let var_order = path.step(k).exponent;
            let unbounded = match suffix_order {
                None => true,
                Some(s) => var_order < s,
            };
            if unbounded {
                warnings.push(PathWarning {
                    j,
                    k,
                    var_order,
                    suffix_order,
                });
            }
        }
    }
    warnings
}

/// A real point in parameter space with exact rational coordinates, for
/// singularity classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SPoint {
    s: Vec<Rational>,
}

impl SPoint {
    pub fn new(s: Vec<Rational>) -> Result<Self, EngineError> {
        if s.is_empty() {
            return Err(EngineError::Precondition(
                "point must have at least one coordinate".to_string(),
            ));
        }
        Ok(SPoint { s })
    }

    pub fn depth(&self) -> usize {
        self.s.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.s
    }

    fn suffix(&self, n: usize) -> Rational {
        self.s[n - 1..]
            .iter()
            .fold(Rational::zero(), |acc, c| acc + c)
    }
}

/// One satisfied singular hyperplane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SingularLocus {
    /// `s_d = 1`.
    LastEqualsOne,
    /// `s_{d-1} + s_d` lies in `{2, 1, 0, -2, -4, ...}`.
    LastPairSum { value: Rational },
    /// For some `j >= 3`, the suffix sum of the last `j` coordinates is an
    /// integer at most `j`.
    SuffixInteger { j: usize, start: usize, value: Rational },
}

impl fmt::Display for SingularLocus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingularLocus::LastEqualsOne => write!(f, "s_d = 1"),
            SingularLocus::LastPairSum { value } => {
                write!(f, "s_{{d-1}}+s_d = {value}")
            }
            SingularLocus::SuffixInteger { j, start, value } => {
                let vars: Vec<String> =
                    (*start..*start + *j).map(|i| format!("s_{i}")).collect();
                write!(f, "{} = {} in Z_{{<={}}}", vars.join("+"), value, j)
            }
        }
    }
}

/// Result of singularity classification: every satisfied locus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularVerdict {
    pub loci: Vec<SingularLocus>,
}

impl SingularVerdict {
    pub fn is_singular(&self) -> bool {
        !self.loci.is_empty()
    }
}

/// Classify a point against the singular set of the depth-`d` function:
/// `s_d = 1`; `s_{d-1} + s_d in {2, 1, 0, -2, -4, ...}`; and for
/// `j = 3..=d`, `s_{d-j+1} + ... + s_d` an integer at most `j`. Depth 1
/// has only the pole `s_1 = 1`. Inputs are exact; callers wanting a
/// floating-point notion of "near-singular" must quantize first.
pub fn is_singular(point: &SPoint) -> SingularVerdict {
    let d = point.depth();
    let mut loci = Vec::new();
    if point.s[d - 1] == Rational::one() {
        loci.push(SingularLocus::LastEqualsOne);
    }
    if d >= 2 {
        let pair = point.suffix(d - 1);
        if pair.is_integer() {
            let n = pair.numer();
            let two = BigInt::from(2);
            let in_set = *n == two
                || *n == BigInt::from(1)
                || (!n.is_positive() && (n % &two) == BigInt::from(0));
            if in_set {
                loci.push(SingularLocus::LastPairSum { value: pair });
            }
        }
        for j in 3..=d {
            let start = d - j + 1;
            let value = point.suffix(start);
            if value.is_integer() && value.numer() <= &BigInt::from(j as i64) {
                loci.push(SingularLocus::SuffixInteger { j, start, value });
            }
        }
    }
    SingularVerdict { loci }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::RenderFormat;

    fn point(m: &[u32]) -> Point {
        Point::new(m.to_vec()).unwrap()
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    /// Build a sum from (coeff, [(int coeffs, exp)...]) triples.
    fn sum_of(d: usize, terms: &[(Rational, &[(&[i64], i64)])]) -> RationalFunctionSum {
        let raw = terms
            .iter()
            .map(|(c, facs)| {
                RawTerm::new(
                    c.clone(),
                    facs.iter()
                        .map(|(coeffs, exp)| (LinearForm::from_ints(coeffs), *exp))
                        .collect(),
                )
            })
            .collect();
        RationalFunctionSum::canonicalize(d, raw)
    }

    #[test]
    fn depth_one_weight_zero() {
        let f = leading_term(&point(&[0]));
        assert_eq!(f.constant_value(), Some(r(-1, 2)));
    }

    #[test]
    fn depth_two_tripwire() {
        // m = (1,1): 1/360 + (1/720) e2/(e1+e2). Sensitive to the
        // numerator/denominator index off-by-one.
        let f = leading_term(&point(&[1, 1]));
        let expected = sum_of(
            2,
            &[
                (r(1, 360), &[]),
                (r(1, 720), &[(&[0, 1], 1), (&[1, 1], -1)]),
            ],
        );
        assert_eq!(f, expected);
    }

    #[test]
    fn depth_two_origin_stuffle_arbitrated() {
        // m = (0,0): constant 1/3, ratio coefficient 1/12 (not the
        // published 1/24; the stuffle constraint 2/3 + A = 3/4 decides).
        let f = leading_term(&point(&[0, 0]));
        let expected = sum_of(
            2,
            &[(r(1, 3), &[]), (r(1, 12), &[(&[0, 1], 1), (&[1, 1], -1)])],
        );
        assert_eq!(f, expected);
    }

    #[test]
    fn depth_three_origin() {
        let f = leading_term(&point(&[0, 0, 0]));
        let expected = sum_of(
            3,
            &[
                (r(-1, 4), &[]),
                (r(-1, 24), &[(&[0, 0, 1], 1), (&[0, 1, 1], -1)]),
                (r(-1, 24), &[(&[0, 1, 2], 1), (&[1, 1, 1], -1)]),
            ],
        );
        assert_eq!(f, expected);
        assert_eq!(
            f.render(RenderFormat::Plain),
            "-1/4 - 1/24 * (e3)/(e2+e3) - 1/24 * (e2+2*e3)/(e1+e2+e3)"
        );
    }

    #[test]
    fn restricted_form_examples() {
        let f = leading_term_restricted(&point(&[1, 0]));
        assert_eq!(f.constant_value(), Some(r(1, 24)));

        let f = leading_term_restricted(&point(&[0, 1]));
        assert_eq!(f.constant_value(), Some(r(1, 12)));
    }

    #[test]
    fn dual_forms_agree_on_small_grid() {
        for d in 1..=3usize {
            for comp in crate::exact::compositions(4, d as u32) {
                let p = point(&comp.parts);
                let a = leading_term(&p);
                let b = leading_term_restricted(&p);
                assert!(a.equivalent(&b), "mismatch at {:?}", comp.parts);
            }
        }
    }

    #[test]
    fn ordered_limits_depth_three() {
        let p = point(&[0, 0, 0]);
        assert_eq!(ordered_limit(&p, &[1, 2, 3]).unwrap(), r(-3, 8));
        assert_eq!(ordered_limit(&p, &[3, 2, 1]).unwrap(), r(-1, 4));
    }

    #[test]
    fn ordered_limit_depth_two() {
        let p = point(&[0, 0]);
        assert_eq!(ordered_limit(&p, &[2, 1]).unwrap(), r(1, 3));
        assert_eq!(ordered_limit(&p, &[1, 2]).unwrap(), r(5, 12));
    }

    #[test]
    fn ordered_limit_rejects_non_permutations() {
        let p = point(&[0, 0]);
        assert!(matches!(
            ordered_limit(&p, &[1, 1]),
            Err(EngineError::Precondition(_))
        ));
        assert!(matches!(
            ordered_limit(&p, &[1]),
            Err(EngineError::Precondition(_))
        ));
    }

    #[test]
    fn directional_limits() {
        let p = point(&[0, 0]);
        let theta = vec![Rational::one(), Rational::one()];
        assert_eq!(directional_limit(&p, &theta).unwrap(), r(3, 8));

        let p3 = point(&[0, 0, 0]);
        let theta3 = vec![Rational::one(), Rational::one(), Rational::one()];
        assert_eq!(directional_limit(&p3, &theta3).unwrap(), r(-5, 16));

        let bad = vec![Rational::one(), Rational::from_int(-1)];
        assert!(matches!(
            directional_limit(&p, &bad),
            Err(EngineError::Precondition(_))
        ));
    }

    #[test]
    fn path_limits() {
        // (delta^2, delta, delta) at the depth-3 origin: -1/3.
        let p = point(&[0, 0, 0]);
        let path = PathAssignment::from_ints(&[(1, 2), (1, 1), (1, 1)]).unwrap();
        assert_eq!(path_limit(&p, &path).unwrap(), r(-1, 3));

        let p2 = point(&[0, 0]);
        let diag = PathAssignment::from_ints(&[(1, 1), (1, 1)]).unwrap();
        assert_eq!(path_limit(&p2, &diag).unwrap(), r(3, 8));

        // e1 = delta, e2 = delta^2 matches the ordered limit (2, 1).
        let hier = PathAssignment::from_ints(&[(1, 1), (1, 2)]).unwrap();
        assert_eq!(path_limit(&p2, &hier).unwrap(), r(1, 3));
    }

    #[test]
    fn path_limit_divergence() {
        // m = (0,1,0) has the single ratio term (1/360) e2/(e1+e2+e3);
        // along (delta^2, -delta, delta) the suffix sum collapses to
        // delta^2 while the numerator stays first order.
        let p = point(&[0, 1, 0]);
        let path = PathAssignment::from_ints(&[(1, 2), (-1, 1), (1, 1)]).unwrap();
        assert!(matches!(
            path_limit(&p, &path),
            Err(EngineError::Divergent { .. })
        ));
    }

    #[test]
    fn path_identically_zero_denominator() {
        // e2 + e3 vanishes identically along (delta, -delta, delta) at the
        // depth-3 origin, which uses that suffix form as a denominator.
        let p = point(&[0, 0, 0]);
        let path = PathAssignment::from_ints(&[(1, 1), (-1, 1), (1, 1)]).unwrap();
        assert_eq!(
            path_limit(&p, &path),
            Err(EngineError::Symbolic(
                SymbolicError::IdenticallyZeroDenominator
            ))
        );
    }

    #[test]
    fn path_condition_examples() {
        let p3 = point(&[0, 0, 0]);
        let sanctioned = PathAssignment::from_ints(&[(1, 2), (1, 1), (1, 1)]).unwrap();
        assert!(path_condition_check(&p3, &sanctioned).is_empty());

        let p2 = point(&[0, 0]);
        let fine = PathAssignment::from_ints(&[(1, 1), (1, 2)]).unwrap();
        assert!(path_condition_check(&p2, &fine).is_empty());

        // e1 = delta, e2 = -delta: the suffix e1+e2 vanishes identically.
        let degenerate = PathAssignment::from_ints(&[(1, 1), (-1, 1)]).unwrap();
        let warnings = path_condition_check(&p2, &degenerate);
        assert_eq!(warnings.len(), 2);
        assert!(warnings.iter().all(|w| w.j == 1 && w.suffix_order.is_none()));
    }

    #[test]
    fn path_condition_partial_cancellation() {
        // Depth 3 with (delta^2, -delta, delta): suffix from e2 is
        // identically zero and suffix from e1 has order 2 > 1.
        let p = point(&[0, 0, 0]);
        let path = PathAssignment::from_ints(&[(1, 2), (-1, 1), (1, 1)]).unwrap();
        let warnings = path_condition_check(&p, &path);
        // j=1: ord(suffix)=2, e2 and e3 have order 1 -> two warnings;
        // j=2: identically zero suffix -> two warnings.
        assert_eq!(warnings.len(), 4);
    }

    #[test]
    fn singular_classification() {
        let v = is_singular(&SPoint::new(vec![r(1, 2), Rational::one()]).unwrap());
        assert!(v.is_singular());
        assert_eq!(v.loci, vec![SingularLocus::LastEqualsOne]);

        let v = is_singular(&SPoint::new(vec![Rational::zero(), Rational::zero()]).unwrap());
        assert_eq!(
            v.loci,
            vec![SingularLocus::LastPairSum {
                value: Rational::zero()
            }]
        );

        let v = is_singular(&SPoint::new(vec![r(2, 1), r(3, 1)]).unwrap());
        assert!(!v.is_singular());

        let v = is_singular(
            &SPoint::new(vec![r(-5, 1), Rational::one(), Rational::one()]).unwrap(),
        );
        assert!(v
            .loci
            .iter()
            .any(|l| matches!(l, SingularLocus::SuffixInteger { j: 3, .. })));
        // That point also satisfies s_d = 1 and s_2+s_3 = 2.
        assert!(v.loci.contains(&SingularLocus::LastEqualsOne));

        // Odd negative pair sums are not in {2,1,0,-2,-4,...}.
        let v = is_singular(&SPoint::new(vec![r(-3, 1), r(2, 1)]).unwrap());
        assert!(!v.is_singular());

        // Depth 1 checks only s_1 = 1.
        let v = is_singular(&SPoint::new(vec![Rational::one()]).unwrap());
        assert!(v.is_singular());
        let v = is_singular(&SPoint::new(vec![r(-7, 1)]).unwrap());
        assert!(!v.is_singular());
    }

    #[test]
    fn locus_display() {
        assert_eq!(SingularLocus::LastEqualsOne.to_string(), "s_d = 1");
        assert_eq!(
            SingularLocus::LastPairSum { value: Rational::zero() }.to_string(),
            "s_{d-1}+s_d = 0"
        );
        assert_eq!(
            SingularLocus::SuffixInteger {
                j: 3,
                start: 1,
                value: r(-3, 1)
            }
            .to_string(),
            "s_1+s_2+s_3 = -3 in Z_{<=3}"
        );
    }
}
