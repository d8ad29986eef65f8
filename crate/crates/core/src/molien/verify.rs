use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::golden::Golden;
use crate::exact::{Degree, UniPoly, UniSeries};

/// One named check within a [`SeriesReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// First degree at which the check failed, when it is degree-wise.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure_degree: Option<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    pub max_degree: usize,
    pub coefficients: Vec<BigInt>,
    pub theorem_match: bool,
    pub palindrome_n: bool,
    pub palindrome_nstar: bool,
    pub nonnegative_nstar: bool,
    pub transform_identity: bool,
    pub degree_gap: Option<i64>,
    pub degree_gap_star: Option<i64>,
    pub hsop_degrees: Vec<u32>,
    pub orbit_space_dimension: i64,
    pub checks: Vec<Check>,
}

impl SeriesReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

fn gap(den: &UniPoly, num: &UniPoly) -> Option<i64> {
    match (den.degree(), num.degree()) {
        (Degree::Finite(a), Degree::Finite(b)) => Some(a as i64 - b as i64),
        _ => None,
    }
}

fn first_mismatch(a: &[BigInt], b: &[BigInt]) -> Option<usize> {
    a.iter().zip(b).position(|(x, y)| x != y)
}

fn degreewise(name: &'static str, mismatch: Option<usize>, ok: String, bad: impl Fn(usize) -> String) -> Check {
    Check {
        name,
        passed: mismatch.is_none(),
        first_failure_degree: mismatch,
        detail: mismatch.map_or(ok, bad),
    }
}

/// Checks computed Poincare coefficients against the reference rational
/// function and its derived identities.
pub fn verify_theorem(computed: &[BigInt], golden: &Golden) -> SeriesReport {
    assert!(!computed.is_empty(), "need at least the degree-0 coefficient");
    let max_degree = computed.len() - 1;
    let order = max_degree.max(golden.taylor.len().saturating_sub(1));
    let mut checks = Vec::new();

    let expanded = UniSeries::from_rational(&golden.numerator, &golden.denominator, order)
        .ok()
        .and_then(|s| s.to_integer());
    let expanded: Vec<BigInt> = expanded.map(|s| s.into_coeffs()).unwrap_or_default();

    let mismatch = if expanded.len() < computed.len() {
        Some(expanded.len())
    } else {
        first_mismatch(computed, &expanded)
    };
    checks.push(degreewise(
        "series_matches_rational_function",
        mismatch,
        format!("computed coefficients 0..={max_degree} equal the expansion of N/D"),
        |d| {
            format!(
                "degree {d}: computed {} but N/D expands to {}",
                computed[d],
                expanded.get(d).map_or("nothing".to_string(), ToString::to_string)
            )
        },
    ));
    let theorem_match = mismatch.is_none();

    let printed = &golden.taylor;
    let mismatch = if expanded.len() < printed.len() {
        Some(expanded.len())
    } else {
        first_mismatch(printed, &expanded)
    };
    checks.push(degreewise(
        "rational_function_matches_printed_taylor",
        mismatch,
        format!("N/D expands to the {} printed Taylor coefficients", printed.len()),
        |d| format!("degree {d}: printed {} but N/D expands to {}", printed[d], expanded[d]),
    ));

    let mismatch = first_mismatch(computed, printed);
    checks.push(degreewise(
        "series_matches_printed_taylor",
        mismatch,
        format!("computed coefficients agree with the printed ones through degree {}", max_degree.min(printed.len() - 1)),
        |d| format!("degree {d}: computed {} but printed {}", computed[d], printed[d]),
    ));

    let low = computed[0] == BigInt::from(1) && computed.get(1).is_none_or(Zero::is_zero);
    let negative = computed.iter().position(Signed::is_negative);
    checks.push(Check {
        name: "low_degree_shape",
        passed: low && negative.is_none(),
        first_failure_degree: if !low { Some(if computed[0] != BigInt::from(1) { 0 } else { 1 }) } else { negative },
        detail: "constant coefficient 1, no linear invariants, no negative dimension".into(),
    });

    let palindrome_n = golden.numerator.is_palindromic(golden.numerator_mirror_degree).unwrap_or(false);
    checks.push(Check {
        name: "palindrome_N",
        passed: palindrome_n,
        first_failure_degree: None,
        detail: format!("N palindromic about degree {}", golden.numerator_mirror_degree),
    });
    let palindrome_nstar =
        golden.numerator_star.is_palindromic(golden.numerator_star_mirror_degree).unwrap_or(false);
    checks.push(Check {
        name: "palindrome_Nstar",
        passed: palindrome_nstar,
        first_failure_degree: None,
        detail: format!("N* palindromic about degree {}", golden.numerator_star_mirror_degree),
    });

    let den_product = &golden.denominator * &golden.transform;
    let mismatch = den_product.first_difference(&golden.denominator_star);
    checks.push(degreewise(
        "denominator_transform",
        mismatch,
        "D (1 - t + t^2)(1 + t^3) = D*".into(),
        |d| format!("degree {d}: D times the multiplier has {} but D* has {}", den_product.coeff(d), golden.denominator_star.coeff(d)),
    ));
    let num_product = &golden.numerator * &golden.transform;
    let num_mismatch = num_product.first_difference(&golden.numerator_star);
    checks.push(degreewise(
        "numerator_transform",
        num_mismatch,
        "N (1 - t + t^2)(1 + t^3) = N*".into(),
        |d| format!("degree {d}: N times the multiplier has {} but N* has {}", num_product.coeff(d), golden.numerator_star.coeff(d)),
    ));
    let transform_identity = mismatch.is_none() && num_mismatch.is_none();

    let neg = golden.numerator_star.coeffs().iter().position(Signed::is_negative);
    let nonnegative_nstar = neg.is_none();
    checks.push(degreewise("nonnegative_Nstar", neg, "every N* coefficient is >= 0".into(), |d| {
        format!("degree {d}: N* coefficient {} is negative", golden.numerator_star.coeff(d))
    }));

    let expected_gap = golden.module_dimension as i64;
    let degree_gap = gap(&golden.denominator, &golden.numerator);
    let degree_gap_star = gap(&golden.denominator_star, &golden.numerator_star);
    checks.push(Check {
        name: "degree_gap",
        passed: degree_gap == Some(expected_gap) && degree_gap_star == Some(expected_gap),
        first_failure_degree: None,
        detail: format!(
            "deg D - deg N = {}, deg D* - deg N* = {}, expected {expected_gap}",
            fmt_opt(degree_gap),
            fmt_opt(degree_gap_star)
        ),
    });

    let hsop_degrees = golden.hsop_degrees();
    let orbit_space_dimension = golden.module_dimension as i64 - golden.group_dimension as i64;
    checks.push(Check {
        name: "hsop_size",
        passed: hsop_degrees.len() as i64 == orbit_space_dimension,
        first_failure_degree: None,
        detail: format!(
            "D* lists {} parameter degrees; orbit space dimension {} - {} = {orbit_space_dimension}",
            hsop_degrees.len(),
            golden.module_dimension,
            golden.group_dimension
        ),
    });

    SeriesReport {
        max_degree,
        coefficients: computed.to_vec(),
        theorem_match,
        palindrome_n,
        palindrome_nstar,
        nonnegative_nstar,
        transform_identity,
        degree_gap,
        degree_gap_star,
        hsop_degrees,
        orbit_space_dimension,
        checks,
    }
}

fn fmt_opt(v: Option<i64>) -> String {
    v.map_or("undefined".into(), |g| g.to_string())
}
