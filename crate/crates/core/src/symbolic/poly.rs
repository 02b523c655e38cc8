//! Univariate polynomials in the path parameter `delta` and limits of their
//! ratios at `delta -> 0+`.

use crate::rational::Rational;
use std::fmt;

/// Polynomial with exact rational coefficients, stored by ascending power.
/// Trailing zero coefficients are trimmed; the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaPoly {
    coeffs: Vec<Rational>,
}

impl DeltaPoly {
    pub fn zero() -> Self {
        DeltaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        DeltaPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = DeltaPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Rational::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Add `c * delta^k` in place.
    pub fn add_monomial(&mut self, c: Rational, k: usize) {
        if c.is_zero() {
            return;
        }
        if self.coeffs.len() <= k {
            self.coeffs.resize(k + 1, Rational::zero());
        }
        self.coeffs[k] += c;
        self.trim();
    }

    pub fn add(&self, other: &DeltaPoly) -> DeltaPoly {
        let mut coeffs = vec![Rational::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        let mut p = DeltaPoly { coeffs };
        p.trim();
        p
    }

    pub fn mul(&self, other: &DeltaPoly) -> DeltaPoly {
        if self.is_zero() || other.is_zero() {
            return DeltaPoly::zero();
        }
        let mut coeffs =
            vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        let mut p = DeltaPoly { coeffs };
        p.trim();
        p
    }

    /// Lowest power with nonzero coefficient; `None` for the zero polynomial.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Coefficient of the lowest-order monomial.
    pub fn lowest_coeff(&self) -> Option<&Rational> {
        self.order().map(|k| &self.coeffs[k])
    }
}

impl fmt::Display for DeltaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "d")?;
                    } else {
                        write!(f, "d^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// An unreduced ratio of polynomials in `delta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRatio {
    pub num: DeltaPoly,
    pub den: DeltaPoly,
}

impl fmt::Display for PolyRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

/// Outcome of `delta -> 0+` on a polynomial ratio.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeltaLimit {
    Finite(Rational),
    /// The ratio diverges; `negative` gives the sign of the infinity.
    Infinite { negative: bool },
}

/// Limit of `g = num/den` as `delta -> 0+`, decided by the lowest orders:
/// zero when `ord(num) > ord(den)`, the ratio of lowest coefficients when
/// equal, a signed infinity when `ord(num) < ord(den)`.
///
/// The denominator must not be identically zero.
pub fn limit_at_zero(g: &PolyRatio) -> DeltaLimit {
    let den_ord = g
        .den
        .order()
        .expect("denominator is identically zero");
    let Some(num_ord) = g.num.order() else {
        return DeltaLimit::Finite(Rational::zero());
    };
    use std::cmp::Ordering;
    match num_ord.cmp(&den_ord) {
        Ordering::Greater => DeltaLimit::Finite(Rational::zero()),
        Ordering::Equal => DeltaLimit::Finite(
            g.num.lowest_coeff().unwrap() / g.den.lowest_coeff().unwrap(),
        ),
        Ordering::Less => {
            let sign_negative = g.num.lowest_coeff().unwrap().is_negative()
                != g.den.lowest_coeff().unwrap().is_negative();
            DeltaLimit::Infinite {
                negative: sign_negative,
            }
        }
    }
}
