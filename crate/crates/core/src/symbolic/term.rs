//! Terms: a rational coefficient times a product of linear-form powers.

use crate::rational::Rational;
use crate::symbolic::form::LinearForm;
use std::collections::BTreeMap;

/// A canonicalized term. Factor keys are canonical forms (first nonzero
/// coefficient 1), exponents are nonzero, and the coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: Rational,
    pub factors: BTreeMap<LinearForm, i64>,
}

impl Term {
    pub fn constant(coeff: Rational) -> Self {
        Term {
            coeff,
            factors: BTreeMap::new(),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.factors.is_empty()
    }

    /// Sum of factor exponents; zero for every degree-0-homogeneous term.
    pub fn exponent_sum(&self) -> i64 {
        self.factors.values().sum()
    }

    /// Deterministic ordering key: total |exponent| mass first, then the
    /// factor signature itself.
    pub(crate) fn order_key(&self) -> (u64, &BTreeMap<LinearForm, i64>) {
        let mass: u64 = self.factors.values().map(|e| e.unsigned_abs()).sum();
        (mass, &self.factors)
    }
}

/// An un-normalized term as produced by the engine or parsed from input:
/// factors need not be canonical, may repeat, and may carry zero exponents.
#[derive(Debug, Clone)]
pub struct RawTerm {
    pub coeff: Rational,
    pub factors: Vec<(LinearForm, i64)>,
}

impl RawTerm {
    pub fn constant(coeff: Rational) -> Self {
        RawTerm {
            coeff,
            factors: Vec::new(),
        }
    }

    pub fn new(coeff: Rational, factors: Vec<(LinearForm, i64)>) -> Self {
        RawTerm { coeff, factors }
    }
}

impl From<Term> for RawTerm {
    fn from(t: Term) -> RawTerm {
        RawTerm {
            coeff: t.coeff,
            factors: t.factors.into_iter().collect(),
        }
    }
}
