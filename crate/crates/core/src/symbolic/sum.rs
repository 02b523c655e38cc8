//! Sums of terms and the operations on them: canonicalization, zero
//! substitution with cancellation resolution, path substitution, exact
//! evaluation, and exact equivalence.

use crate::exact::binomial;
use crate::rational::Rational;
use crate::symbolic::form::LinearForm;
use crate::symbolic::path::PathAssignment;
use crate::symbolic::poly::{DeltaPoly, PolyRatio};
use crate::symbolic::term::{RawTerm, Term};
use crate::symbolic::SymbolicError;
use std::collections::BTreeMap;

/// A finite sum of terms `coeff * prod_i form_i^{exp_i}` over `d` variables.
///
/// Canonical invariants: every factor key is a canonical form, no two terms
/// share a factor signature, no zero coefficients, and terms are stored in
/// the deterministic rendering order. The empty sum denotes zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunctionSum {
    d: usize,
    terms: Vec<Term>,
}

impl RationalFunctionSum {
    /// Normalize a list of raw terms: rescale factors to canonical form
    /// (folding scalars into coefficients), merge exponents of equal forms
    /// within a term, merge terms with equal signatures, drop zeros.
    ///
    /// Panics if a raw factor is the all-zero form with a non-positive
    /// exponent; such input is not a rational function. (A zero form with
    /// positive exponent annihilates its term.)
    pub fn canonicalize(d: usize, raw: Vec<RawTerm>) -> Self {
        let mut merged: BTreeMap<BTreeMap<LinearForm, i64>, Rational> = BTreeMap::new();
        'terms: for term in raw {
            if term.coeff.is_zero() {
                continue;
            }
            let mut coeff = term.coeff;
            let mut factors: BTreeMap<LinearForm, i64> = BTreeMap::new();
            for (form, exp) in term.factors {
                debug_assert_eq!(form.dim(), d, "factor dimension mismatch");
                if exp == 0 {
                    continue;
                }
                match form.canonical() {
                    None => {
                        assert!(exp > 0, "zero form with non-positive exponent");
                        continue 'terms;
                    }
                    Some((scale, canon)) => {
                        coeff *= &scale.pow(exp);
                        *factors.entry(canon).or_insert(0) += exp;
                    }
                }
            }
            factors.retain(|_, e| *e != 0);
            let slot = merged.entry(factors).or_insert_with(Rational::zero);
            *slot += coeff;
        }
        let mut terms: Vec<Term> = merged
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(factors, coeff)| Term { coeff, factors })
            .collect();
        terms.sort_by(|a, b| a.order_key().cmp(&b.order_key()));
        RationalFunctionSum { d, terms }
    }

    pub fn zero(d: usize) -> Self {
        RationalFunctionSum { d, terms: Vec::new() }
    }

    pub fn constant(d: usize, value: Rational) -> Self {
        if value.is_zero() {
            return Self::zero(d);
        }
        RationalFunctionSum {
            d,
            terms: vec![Term::constant(value)],
        }
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(value)` when the sum is a constant (including zero).
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [t] if t.is_constant() => Some(t.coeff.clone()),
            _ => None,
        }
    }

    /// Sum of two sums over the same variables.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.d, other.d, "variable count mismatch");
        let raw: Vec<RawTerm> = self
            .terms
            .iter()
            .chain(&other.terms)
            .cloned()
            .map(RawTerm::from)
            .collect();
        Self::canonicalize(self.d, raw)
    }

    /// Relabel variables: old variable `j` becomes `perm[j-1]`.
    pub fn permute_variables(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.d, "permutation length mismatch");
        let raw: Vec<RawTerm> = self
            .terms
            .iter()
            .map(|t| {
                RawTerm::new(
                    t.coeff.clone(),
                    t.factors
                        .iter()
                        .map(|(f, e)| (f.permuted(perm), *e))
                        .collect(),
                )
            })
            .collect();
        Self::canonicalize(self.d, raw)
    }

    /// The limit `e_var -> 0` with all other variables kept symbolic.
    ///
    /// Every factor gets the variable substituted to zero. A term whose
    /// substituted factor vanishes identically dies if the exponent is
    /// positive; a surviving pole triggers one round of cancellation
    /// resolution (each numerator factor containing the variable is split as
    /// `c * e_var + rest` and binomially distributed, then the whole sum is
    /// re-canonicalized and re-substituted). A pole that persists after the
    /// expansion is a genuine divergence.
    pub fn substitute_zero(&self, var: usize) -> Result<Self, SymbolicError> {
        assert!((1..=self.d).contains(&var), "variable out of range");
        match self.try_substitute_zero(var) {
            Ok(sum) => Ok(sum),
            Err(()) => self
                .expand_variable(var)
                .try_substitute_zero(var)
                .map_err(|()| SymbolicError::LimitDoesNotExist { var }),
        }
    }

    /// One direct substitution pass; `Err(())` means some term kept a pole
    /// in the vanishing variable.
    fn try_substitute_zero(&self, var: usize) -> Result<Self, ()> {
        let mut raw = Vec::with_capacity(self.terms.len());
        for term in &self.terms {
            let mut zero_exp: i64 = 0;
            let mut factors = Vec::with_capacity(term.factors.len());
            for (form, &exp) in &term.factors {
                let substituted = form.with_var_zeroed(var);
                if substituted.is_zero() {
                    zero_exp += exp;
                } else {
                    factors.push((substituted, exp));
                }
            }
            if zero_exp < 0 {
                return Err(());
            }
            if zero_exp > 0 {
                continue; // the term vanishes in the limit
            }
            raw.push(RawTerm::new(term.coeff.clone(), factors));
        }
        Ok(Self::canonicalize(self.d, raw))
    }

    /// Distribute `e_var` out of every numerator factor that mixes it with
    /// other variables: `(c e_var + rest)^k = sum_i C(k,i) c^i e_var^i
    /// rest^{k-i}`. Denominator factors are left alone; a mixed denominator
    /// does not vanish under the substitution, and a pure `e_var` pole is
    /// exactly what the expansion must cancel against.
    fn expand_variable(&self, var: usize) -> Self {
        let e_var = LinearForm::var(self.d, var);
        let mut raw = Vec::new();
        for term in &self.terms {
            let mut expanded: Vec<RawTerm> =
                vec![RawTerm::new(term.coeff.clone(), Vec::new())];
            for (form, &exp) in &term.factors {
                if exp > 0 && form.contains(var) && !form.supported_only_on(var) {
                    let (c, rest) = form.split_var(var);
                    let mut next = Vec::with_capacity(expanded.len() * (exp as usize + 1));
                    for i in 0..=exp {
                        let weight =
                            Rational::from_bigint(binomial(exp as u64, i as u64)) * c.pow(i);
                        for partial in &expanded {
                            let mut t = partial.clone();
                            t.coeff *= &weight;
                            if i > 0 {
                                t.factors.push((e_var.clone(), i));
                            }
                            if exp - i > 0 {
                                t.factors.push((rest.clone(), exp - i));
                            }
                            next.push(t);
                        }
                    }
                    expanded = next;
                } else {
                    for t in &mut expanded {
                        t.factors.push((form.clone(), exp));
                    }
                }
            }
            raw.extend(expanded);
        }
        Self::canonicalize(self.d, raw)
    }

    /// Substitute a monomial approach path, returning the sum as one exact
    /// ratio of polynomials in `delta` (numerator and denominator are not
    /// reduced).
    pub fn substitute_path(&self, path: &PathAssignment) -> Result<PolyRatio, SymbolicError> {
        if path.len() != self.d {
            return Err(SymbolicError::LengthMismatch {
                expected: self.d,
                got: path.len(),
            });
        }
        let mut num = DeltaPoly::zero();
        let mut den = DeltaPoly::one();
        for term in &self.terms {
            let mut t_num = DeltaPoly::constant(term.coeff.clone());
            let mut t_den = DeltaPoly::one();
            for (form, &exp) in &term.factors {
                let poly = form.to_delta_poly(path);
                if poly.is_zero() {
                    if exp < 0 {
                        return Err(SymbolicError::IdenticallyZeroDenominator);
                    }
                    t_num = DeltaPoly::zero();
                    continue;
                }
                let target = if exp > 0 { &mut t_num } else { &mut t_den };
                for _ in 0..exp.unsigned_abs() {
                    *target = target.mul(&poly);
                }
            }
            // num/den + t_num/t_den, cross-multiplied.
            num = num.mul(&t_den).add(&t_num.mul(&den));
            den = den.mul(&t_den);
        }
        Ok(PolyRatio { num, den })
    }

    /// Merge terms consisting of a single degree-one numerator factor over
    /// an identical denominator signature, adding the numerator forms
    /// linearly: `a L1/D + b L2/D = (a L1 + b L2)/D`. Constants and
    /// multi-numerator terms pass through unchanged. The engine presents
    /// leading terms this way, matching how the worked expansions are
    /// written; generic substitution results are left unconsolidated.
    pub fn consolidate_numerators(&self) -> Self {
        let mut raw: Vec<RawTerm> = Vec::new();
        let mut groups: BTreeMap<BTreeMap<LinearForm, i64>, Vec<(Rational, LinearForm)>> =
            BTreeMap::new();
        for term in &self.terms {
            let positives: Vec<(&LinearForm, i64)> = term
                .factors
                .iter()
                .filter(|&(_, &e)| e > 0)
                .map(|(f, &e)| (f, e))
                .collect();
            if let [(num_form, 1)] = positives.as_slice() {
                let rest: BTreeMap<LinearForm, i64> = term
                    .factors
                    .iter()
                    .filter(|&(_, &e)| e < 0)
                    .map(|(f, &e)| (f.clone(), e))
                    .collect();
                groups
                    .entry(rest)
                    .or_default()
                    .push((term.coeff.clone(), (*num_form).clone()));
            } else {
                raw.push(RawTerm::from(term.clone()));
            }
        }
        for (rest, parts) in groups {
            let mut combined = vec![Rational::zero(); self.d];
            for (c, form) in &parts {
                for (i, fc) in form.coeffs().iter().enumerate() {
                    if !fc.is_zero() {
                        combined[i] += &(c * fc);
                    }
                }
            }
            let mut factors: Vec<(LinearForm, i64)> = rest.into_iter().collect();
            factors.push((LinearForm::new(combined), 1));
            raw.push(RawTerm::new(Rational::one(), factors));
        }
        Self::canonicalize(self.d, raw)
    }

    /// Exact value at a point. A vanishing numerator factor annihilates its
    /// term; a vanishing denominator factor is an error naming the form.
    pub fn evaluate_at(&self, values: &[Rational]) -> Result<Rational, SymbolicError> {
        if values.len() != self.d {
            return Err(SymbolicError::LengthMismatch {
                expected: self.d,
                got: values.len(),
            });
        }
        let mut acc = Rational::zero();
        'terms: for term in &self.terms {
            let mut prod = term.coeff.clone();
            for (form, &exp) in &term.factors {
                let v = form.eval(values);
                if v.is_zero() {
                    if exp < 0 {
                        return Err(SymbolicError::DenominatorVanishes {
                            form: crate::symbolic::render::form_plain(form),
                        });
                    }
                    continue 'terms;
                }
                prod *= &v.pow(exp);
            }
            acc += prod;
        }
        Ok(acc)
    }

    /// Exact equality as rational functions: clear the union denominator
    /// (each pole form at its maximal order) and compare the fully expanded
    /// multivariate polynomial numerators.
    pub fn equivalent(&self, other: &Self) -> bool {
        assert_eq!(self.d, other.d, "variable count mismatch");
        let mut union_den: BTreeMap<LinearForm, i64> = BTreeMap::new();
        for term in self.terms.iter().chain(&other.terms) {
            for (form, &exp) in &term.factors {
                if exp < 0 {
                    let slot = union_den.entry(form.clone()).or_insert(0);
                    *slot = (*slot).max(-exp);
                }
            }
        }
        self.cleared_numerator(&union_den) == other.cleared_numerator(&union_den)
    }

    fn cleared_numerator(&self, union_den: &BTreeMap<LinearForm, i64>) -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for term in &self.terms {
            let mut poly = MultiPoly::constant(term.coeff.clone());
            for (form, &exp) in &term.factors {
                let lift = exp + union_den.get(form).copied().unwrap_or(0);
                debug_assert!(lift >= 0);
                for _ in 0..lift {
                    poly = poly.mul_form(form);
                }
            }
            // Pole forms absent from this term still multiply in.
            for (form, &order) in union_den {
                if !term.factors.contains_key(form) {
                    for _ in 0..order {
                        poly = poly.mul_form(form);
                    }
                }
            }
            acc.add_assign(poly);
        }
        acc
    }
}

/// Sparse multivariate polynomial used only by `equivalent`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct MultiPoly {
    monomials: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    fn zero() -> Self {
        MultiPoly {
            monomials: BTreeMap::new(),
        }
    }

    fn constant(c: Rational) -> Self {
        let mut monomials = BTreeMap::new();
        if !c.is_zero() {
            monomials.insert(Vec::new(), c);
        }
        MultiPoly { monomials }
    }

    fn add_assign(&mut self, other: MultiPoly) {
        for (mono, c) in other.monomials {
            let slot = self
                .monomials
                .entry(mono)
                .or_insert_with(Rational::zero);
            *slot += c;
        }
        self.monomials.retain(|_, c| !c.is_zero());
    }

    /// Multiply by a linear form.
    fn mul_form(&self, form: &LinearForm) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (mono, c) in &self.monomials {
            for (i, fc) in form.coeffs().iter().enumerate() {
                if fc.is_zero() {
                    continue;
                }
                let mut m = mono.clone();
                if m.len() <= i {
                    m.resize(i + 1, 0);
                }
                m[i] += 1;
                let slot = out.monomials.entry(m).or_insert_with(Rational::zero);
                *slot += &(c * fc);
            }
        }
        out.monomials.retain(|_, c| !c.is_zero());
        out
    }
}
