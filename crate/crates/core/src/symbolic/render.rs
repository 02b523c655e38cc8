//! Deterministic rendering of sums: plain text, LaTeX, and the JSON
//! interchange schema.
//!
//! Output ordering is fixed by the canonical term order (total exponent
//! mass, then factor signature), so identical inputs always produce
//! byte-identical output. Plain text names the variables `e1, e2, ...`;
//! LaTeX uses `\varepsilon_j`.
//!
//! JSON schema:
//!
//! ```json
//! {"d": 3, "terms": [{"coeff": "-1/24",
//!                     "factors": [{"form": ["0", "1", "1"], "exp": -1}]}]}
//! ```
//!
//! with every rational in canonical `"p/q"` text form and every form in
//! canonical scaling.

use crate::rational::Rational;
use crate::symbolic::form::LinearForm;
use crate::symbolic::sum::RationalFunctionSum;
use crate::symbolic::term::{RawTerm, Term};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Output formats understood by `render`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Plain,
    Latex,
    Json,
}

impl FromStr for RenderFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plain" => Ok(RenderFormat::Plain),
            "latex" => Ok(RenderFormat::Latex),
            "json" => Ok(RenderFormat::Json),
            other => Err(format!("unknown format {other:?} (expected plain|latex|json)")),
        }
    }
}

impl fmt::Display for RenderFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RenderFormat::Plain => "plain",
            RenderFormat::Latex => "latex",
            RenderFormat::Json => "json",
        })
    }
}

impl RationalFunctionSum {
    /// Render in the requested format. Plain and LaTeX render `0` for the
    /// empty sum; JSON emits the schema with an empty term list.
    pub fn render(&self, format: RenderFormat) -> String {
        match format {
            RenderFormat::Plain => render_plain(self),
            RenderFormat::Latex => render_latex(self),
            RenderFormat::Json => to_json_string(self),
        }
    }
}

fn render_plain(sum: &RationalFunctionSum) -> String {
    if sum.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, term) in sum.terms().iter().enumerate() {
        let negative = term.coeff.is_negative();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&term_plain(term));
    }
    out
}

fn term_plain(term: &Term) -> String {
    let coeff = term.coeff.abs().to_string();
    if term.is_constant() {
        return coeff;
    }
    let mut num_parts = Vec::new();
    let mut den_parts = Vec::new();
    for (form, &exp) in &term.factors {
        let body = format!("({})", form_plain(form));
        let power = exp.unsigned_abs();
        let part = if power == 1 {
            body
        } else {
            format!("{body}^{power}")
        };
        if exp > 0 {
            num_parts.push(part);
        } else {
            den_parts.push(part);
        }
    }
    let num = if num_parts.is_empty() {
        "1".to_string()
    } else {
        num_parts.join("*")
    };
    if den_parts.is_empty() {
        format!("{coeff} * {num}")
    } else if den_parts.len() == 1 {
        format!("{coeff} * {num}/{}", den_parts[0])
    } else {
        format!("{coeff} * {num}/({})", den_parts.join("*"))
    }
}

/// Plain text of a linear form, e.g. `e2+2*e3` or `e1-1/2*e2`.
pub(crate) fn form_plain(form: &LinearForm) -> String {
    let mut out = String::new();
    for (i, c) in form.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push('-');
        } else {
            out.push('+');
        }
        if !mag.is_one() {
            out.push_str(&format!("{mag}*"));
        }
        out.push_str(&format!("e{}", i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// LaTeX for a rational scalar: integers bare, otherwise `\frac{p}{q}`,
/// sign in front.
pub fn rational_latex(r: &Rational) -> String {
    let sign = if r.is_negative() { "-" } else { "" };
    let mag = r.abs();
    if mag.is_integer() {
        format!("{sign}{mag}")
    } else {
        format!("{sign}\\frac{{{}}}{{{}}}", mag.numer(), mag.denom())
    }
}

fn render_latex(sum: &RationalFunctionSum) -> String {
    if sum.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, term) in sum.terms().iter().enumerate() {
        let negative = term.coeff.is_negative();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push('-');
        } else {
            out.push('+');
        }
        out.push_str(&term_latex(term));
    }
    out
}

fn term_latex(term: &Term) -> String {
    let coeff = rational_latex(&term.coeff.abs());
    if term.is_constant() {
        return coeff;
    }
    let mut num_items: Vec<(String, bool)> = Vec::new(); // (body, multi-summand)
    let mut den_items: Vec<(String, bool)> = Vec::new();
    for (form, &exp) in &term.factors {
        let body = form_latex(form);
        let multi = form.coeffs().iter().filter(|c| !c.is_zero()).count() > 1;
        let power = exp.unsigned_abs();
        let target = if exp > 0 { &mut num_items } else { &mut den_items };
        if power == 1 {
            target.push((body, multi));
        } else {
            target.push((format!("({body})^{{{power}}}"), false));
        }
    }
    let group = |items: &[(String, bool)]| -> String {
        if items.is_empty() {
            return "1".to_string();
        }
        if items.len() == 1 {
            // A single factor needs no parentheses inside \frac.
            return items[0].0.clone();
        }
        items
            .iter()
            .map(|(body, multi)| {
                if *multi {
                    format!("({body})")
                } else {
                    body.clone()
                }
            })
            .collect::<Vec<_>>()
            .join("")
    };
    let num = group(&num_items);
    if den_items.is_empty() {
        let protected = if num_items.len() == 1 && num_items[0].1 {
            format!("({num})")
        } else {
            num
        };
        format!("{coeff}\\cdot {protected}")
    } else {
        format!("{coeff}\\cdot\\frac{{{num}}}{{{}}}", group(&den_items))
    }
}

fn form_latex(form: &LinearForm) -> String {
    let mut out = String::new();
    for (i, c) in form.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push('-');
        } else {
            out.push('+');
        }
        if !mag.is_one() {
            out.push_str(&rational_latex(&mag));
        }
        out.push_str(&format!("\\varepsilon_{}", i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Debug, Serialize, Deserialize)]
struct SumJson {
    d: usize,
    terms: Vec<TermJson>,
}

#[derive(Debug, Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    factors: Vec<FactorJson>,
}

#[derive(Debug, Serialize, Deserialize)]
struct FactorJson {
    form: Vec<String>,
    exp: i64,
}

fn to_json_string(sum: &RationalFunctionSum) -> String {
    let wire = SumJson {
        d: sum.dim(),
        terms: sum
            .terms()
            .iter()
            .map(|t| TermJson {
                coeff: t.coeff.to_string(),
                factors: t
                    .factors
                    .iter()
                    .map(|(form, &exp)| FactorJson {
                        form: form.coeffs().iter().map(Rational::to_string).collect(),
                        exp,
                    })
                    .collect(),
            })
            .collect(),
    };
    serde_json::to_string(&wire).expect("serialization cannot fail")
}

/// Errors decoding the JSON interchange form.
#[derive(Debug, thiserror::Error)]
pub enum JsonDecodeError {
    #[error(transparent)]
    Parse(#[from] serde_json::Error),
    #[error("invalid rational {0:?}")]
    Rational(String),
    #[error("form has {got} coefficients, expected d={d}")]
    FormLength { d: usize, got: usize },
}

/// Parse the JSON interchange form back into a canonical sum.
pub fn sum_from_json(s: &str) -> Result<RationalFunctionSum, JsonDecodeError> {
    let wire: SumJson = serde_json::from_str(s)?;
    let mut raw = Vec::with_capacity(wire.terms.len());
    for term in wire.terms {
        let coeff: Rational = term
            .coeff
            .parse()
            .map_err(|_| JsonDecodeError::Rational(term.coeff.clone()))?;
        let mut factors = Vec::with_capacity(term.factors.len());
        for factor in term.factors {
            if factor.form.len() != wire.d {
                return Err(JsonDecodeError::FormLength {
                    d: wire.d,
                    got: factor.form.len(),
                });
            }
            let coeffs: Result<Vec<Rational>, _> =
                factor.form.iter().map(|c| c.parse()).collect();
            let coeffs = coeffs.map_err(|_| {
                JsonDecodeError::Rational(factor.form.join(","))
            })?;
            factors.push((LinearForm::new(coeffs), factor.exp));
        }
        raw.push(RawTerm::new(coeff, factors));
    }
    Ok(RationalFunctionSum::canonicalize(wire.d, raw))
}
