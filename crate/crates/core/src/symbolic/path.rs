//! Monomial approach paths `e_j = c_j * delta^{k_j}`.

use crate::rational::Rational;

/// One variable's monomial: `e_j = coeff * delta^exponent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathStep {
    pub coeff: Rational,
    pub exponent: u32,
}

/// A per-variable monomial path describing how the perturbation point
/// approaches the origin as `delta -> 0+`. Directional limits are the
/// special case with every exponent 1; hierarchical exponents realize
/// iterated limits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathAssignment {
    steps: Vec<PathStep>,
}

/// Error building a path that violates `c_j != 0`, `k_j >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PathError {
    #[error("path coefficient for e{var} must be nonzero")]
    ZeroCoefficient { var: usize },
    #[error("path exponent for e{var} must be at least 1")]
    ZeroExponent { var: usize },
}

impl PathAssignment {
    pub fn new(steps: Vec<PathStep>) -> Result<Self, PathError> {
        for (i, s) in steps.iter().enumerate() {
            if s.coeff.is_zero() {
                return Err(PathError::ZeroCoefficient { var: i + 1 });
            }
            if s.exponent == 0 {
                return Err(PathError::ZeroExponent { var: i + 1 });
            }
        }
        Ok(PathAssignment { steps })
    }

    /// Path from `(coefficient, exponent)` pairs with integer coefficients.
    pub fn from_ints(pairs: &[(i64, u32)]) -> Result<Self, PathError> {
        Self::new(
            pairs
                .iter()
                .map(|&(c, k)| PathStep {
                    coeff: Rational::from_int(c),
                    exponent: k,
                })
                .collect(),
        )
    }

    /// The straight-line path `e = delta * theta`.
    pub fn direction(theta: &[Rational]) -> Result<Self, PathError> {
        Self::new(
            theta
                .iter()
                .map(|c| PathStep {
                    coeff: c.clone(),
                    exponent: 1,
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[PathStep] {
        &self.steps
    }

    pub fn step(&self, var: usize) -> &PathStep {
        &self.steps[var - 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(PathAssignment::from_ints(&[(1, 2), (1, 1)]).is_ok());
        assert_eq!(
            PathAssignment::from_ints(&[(0, 1)]),
            Err(PathError::ZeroCoefficient { var: 1 })
        );
        assert_eq!(
            PathAssignment::from_ints(&[(1, 0)]),
            Err(PathError::ZeroExponent { var: 1 })
        );
    }
}
