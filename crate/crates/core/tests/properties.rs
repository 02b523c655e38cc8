//! Cross-module property tests: canonicalization idempotence on arbitrary
//! term soups, substitution/evaluation commutation, probabilistic
//! equivalence cross-checks, and directional/path coincidence.

use mzv_core::engine::{directional_limit, leading_term, leading_term_restricted, path_limit, Point};
use mzv_core::exact::compositions;
use mzv_core::symbolic::{
    sum_from_json, LinearForm, PathAssignment, RationalFunctionSum, RawTerm, RenderFormat,
};
use mzv_core::Rational;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn point(m: &[u32]) -> Point {
    Point::new(m.to_vec()).unwrap()
}

fn r(n: i64, d: i64) -> Rational {
    Rational::ratio(n, d)
}

/// Strategy: random raw terms over `d` variables with nonzero forms.
fn raw_terms(d: usize) -> impl Strategy<Value = Vec<RawTerm>> {
    let form = proptest::collection::vec(-3i64..=3, d)
        .prop_filter("nonzero form", |c| c.iter().any(|&x| x != 0));
    let factor = (form, prop_oneof![-2i64..0, 1i64..=2]);
    let term = (
        (-12i64..=12, 1i64..=6),
        proptest::collection::vec(factor, 0..3),
    )
        .prop_map(|((n, den), factors)| {
            RawTerm::new(
                Rational::ratio(n, den),
                factors
                    .into_iter()
                    .map(|(coeffs, exp)| (LinearForm::from_ints(&coeffs), exp))
                    .collect(),
            )
        });
    proptest::collection::vec(term, 0..5)
}

proptest! {
    #[test]
    fn canonicalize_idempotent(raw in raw_terms(3)) {
        let once = RationalFunctionSum::canonicalize(3, raw);
        let twice = RationalFunctionSum::canonicalize(
            3,
            once.terms().iter().cloned().map(RawTerm::from).collect(),
        );
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn json_roundtrip(raw in raw_terms(3)) {
        let f = RationalFunctionSum::canonicalize(3, raw);
        let back = sum_from_json(&f.render(RenderFormat::Json)).unwrap();
        prop_assert_eq!(back, f);
    }
}

/// `substitute_zero` commutes with evaluation: plugging ever smaller values
/// of the substituted variable into `f` converges to the substituted value,
/// first-order in t.
#[test]
fn substitution_commutes_with_evaluation() {
    let base = [r(1, 2), r(1, 3), r(1, 5)];
    for m in [[0u32, 0, 0], [1, 0, 0], [0, 1, 1]] {
        let f = leading_term(&point(&m));
        for var in 1..=3usize {
            let g = f.substitute_zero(var).unwrap();
            let settled = g.evaluate_at(&base).unwrap();
            let err_at = |t: Rational| {
                let mut v = base.clone();
                v[var - 1] = t;
                (f.evaluate_at(&v).unwrap() - &settled).abs()
            };
            let coarse = err_at(r(1, 1_000));
            let fine = err_at(r(1, 10_000));
            if coarse.is_zero() {
                assert!(fine.is_zero(), "m={m:?} var={var}");
            } else {
                // a decade in t must shrink the gap by at least 5x
                assert!(
                    fine * Rational::from_int(5) <= coarse,
                    "m={m:?} var={var}: no first-order shrinkage"
                );
            }
        }
    }
}

/// `equivalent` agrees with evaluation at 20 random small-height rational
/// points, rejection-sampled against vanishing denominators.
#[test]
fn equivalence_matches_random_evaluation() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut sample = |d: usize| -> Vec<Rational> {
        loop {
            let v: Vec<Rational> = (0..d)
                .map(|_| {
                    let p = rng.gen_range(1..=97i64);
                    let q = rng.gen_range(1..=97i64);
                    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                    Rational::ratio(sign * p, q)
                })
                .collect();
            let ok = (1..=d).all(|j| {
                !v[j - 1..]
                    .iter()
                    .fold(Rational::zero(), |acc, x| acc + x)
                    .is_zero()
            });
            if ok {
                return v;
            }
        }
    };

    for m in [[1u32, 1, 0], [0, 2, 1], [2, 0, 2]] {
        let p = point(&m);
        let f = leading_term(&p);
        let g = leading_term_restricted(&p);
        assert!(f.equivalent(&g));
        for _ in 0..20 {
            let v = sample(3);
            assert_eq!(
                f.evaluate_at(&v).unwrap(),
                g.evaluate_at(&v).unwrap(),
                "equivalent sums disagree at {v:?}"
            );
        }

        // Perturb g by a term that is not identically zero: equivalence
        // must fail, and some sampled point must witness it.
        let bump = RationalFunctionSum::canonicalize(
            3,
            vec![RawTerm::new(
                r(1, 7),
                vec![
                    (LinearForm::from_ints(&[0, 0, 1]), 1),
                    (LinearForm::from_ints(&[1, 1, 1]), -1),
                ],
            )],
        );
        let h = g.add(&bump);
        assert!(!f.equivalent(&h));
        let witnessed = (0..20).any(|_| {
            let v = sample(3);
            f.evaluate_at(&v).unwrap() != h.evaluate_at(&v).unwrap()
        });
        assert!(witnessed, "no evaluation witness against perturbed sum");
    }
}

/// Directional limits coincide with all-exponent-1 path limits (the leading
/// term is homogeneous of degree 0), for random admissible directions.
#[test]
fn directional_and_path_limits_coincide() {
    let mut rng = StdRng::seed_from_u64(0xd017);
    for d in 1..=3usize {
        for total in 0..=2u32 {
            for comp in compositions(total, d as u32) {
                let p = point(&comp.parts);
                let mut done = 0;
                while done < 10 {
                    let theta: Vec<Rational> = (0..d)
                        .map(|_| {
                            let n = rng.gen_range(1..=9i64);
                            let q = rng.gen_range(1..=9i64);
                            let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                            Rational::ratio(sign * n, q)
                        })
                        .collect();
                    let admissible = (1..=d).all(|j| {
                        !theta[j - 1..]
                            .iter()
                            .fold(Rational::zero(), |acc, x| acc + x)
                            .is_zero()
                    });
                    if !admissible {
                        continue;
                    }
                    done += 1;
                    let direct = directional_limit(&p, &theta).unwrap();
                    let path = PathAssignment::direction(&theta).unwrap();
                    let pathed = path_limit(&p, &path).unwrap();
                    assert_eq!(direct, pathed, "m={:?} theta={theta:?}", comp.parts);
                }
            }
        }
    }
}
