//! Linear forms in the perturbation variables.

use crate::rational::Rational;
use crate::symbolic::path::PathAssignment;
use crate::symbolic::poly::DeltaPoly;

/// An exact linear combination `c_1 e_1 + ... + c_d e_d`.
///
/// The canonical representative used inside terms has its first nonzero
/// coefficient equal to 1; any rescaling factor is folded into the owning
/// term's coefficient. Suffix sums `e_j + e_{j+1} + ... + e_d` are the forms
/// the engine produces natively; general forms arise from substitutions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearForm {
    coeffs: Vec<Rational>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        LinearForm { coeffs }
    }

    /// The single variable `e_j` (1-based) in `d` variables.
    pub fn var(d: usize, j: usize) -> Self {
        assert!((1..=d).contains(&j));
        let mut coeffs = vec![Rational::zero(); d];
        coeffs[j - 1] = Rational::one();
        LinearForm { coeffs }
    }

    /// The suffix sum `e_j + e_{j+1} + ... + e_d` (1-based `j`).
    pub fn suffix(d: usize, j: usize) -> Self {
        assert!((1..=d).contains(&j));
        let mut coeffs = vec![Rational::zero(); d];
        for c in coeffs[j - 1..].iter_mut() {
            *c = Rational::one();
        }
        LinearForm { coeffs }
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        LinearForm {
            coeffs: coeffs.iter().map(|&c| Rational::from_int(c)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `e_var` (1-based).
    pub fn coeff(&self, var: usize) -> &Rational {
        &self.coeffs[var - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn contains(&self, var: usize) -> bool {
        !self.coeffs[var - 1].is_zero()
    }

    /// True when the only (possibly) nonzero coefficient is on `e_var`.
    pub fn supported_only_on(&self, var: usize) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| i == var - 1 || c.is_zero())
    }

    /// Split into the canonical scale and the scaled form whose first
    /// nonzero coefficient is 1. Returns `None` for the zero form.
    pub fn canonical(&self) -> Option<(Rational, LinearForm)> {
        let scale = self.coeffs.iter().find(|c| !c.is_zero())?.clone();
        let coeffs = self.coeffs.iter().map(|c| c / &scale).collect();
        Some((scale, LinearForm { coeffs }))
    }

    /// The form with `e_var` set to zero.
    pub fn with_var_zeroed(&self, var: usize) -> LinearForm {
        let mut coeffs = self.coeffs.clone();
        coeffs[var - 1] = Rational::zero();
        LinearForm { coeffs }
    }

    /// Split off the `e_var` component: returns `(c_var, rest)` with
    /// `self = c_var * e_var + rest`.
    pub fn split_var(&self, var: usize) -> (Rational, LinearForm) {
        (self.coeffs[var - 1].clone(), self.with_var_zeroed(var))
    }

    /// Exact value at a point.
    pub fn eval(&self, values: &[Rational]) -> Rational {
        debug_assert_eq!(values.len(), self.coeffs.len());
        let mut acc = Rational::zero();
        for (c, v) in self.coeffs.iter().zip(values) {
            if !c.is_zero() {
                acc += c * v;
            }
        }
        acc
    }

    /// Substitute the monomial path `e_j = c_j delta^{k_j}`, producing an
    /// exact polynomial in `delta`.
    pub fn to_delta_poly(&self, path: &PathAssignment) -> DeltaPoly {
        debug_assert_eq!(path.len(), self.coeffs.len());
        let mut poly = DeltaPoly::zero();
        for (c, step) in self.coeffs.iter().zip(path.steps()) {
            if !c.is_zero() {
                poly.add_monomial(c * &step.coeff, step.exponent as usize);
            }
        }
        poly
    }

    /// Apply a variable relabeling: variable `j` becomes `perm[j-1]`.
    pub fn permuted(&self, perm: &[usize]) -> LinearForm {
        debug_assert_eq!(perm.len(), self.coeffs.len());
        let mut coeffs = vec![Rational::zero(); self.coeffs.len()];
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs[perm[j] - 1] = c.clone();
        }
        LinearForm { coeffs }
    }
}
