//! Exact evaluation and cross-checking of the Motzkin-triangle identities.
//!
//! Sums with fractional terms are accumulated as [`ExactRational`] and only
//! converted back to integers at the end; a non-integral total is reported as
//! [`Error::ArithmeticFault`], never rounded.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rational::ExactRational;
use crate::triangles::{binomial_direct, motzkin_row, motzkin_t, TriangleSpec};

/// Outcome of comparing two or more exact quantities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: String,
    pub params: Vec<(String, i64)>,
    pub values: Vec<(String, ExactRational)>,
    /// True iff every entry of `values` is the same number.
    pub equal: bool,
}

impl VerificationReport {
    pub fn new(
        identity: impl Into<String>,
        params: &[(&str, i64)],
        values: Vec<(String, ExactRational)>,
    ) -> Self {
        let equal = values.windows(2).all(|w| w[0].1 == w[1].1);
        Self {
            identity: identity.into(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            values,
            equal,
        }
    }

    /// The shared value, when all values agree.
    pub fn common_value(&self) -> Option<&ExactRational> {
        if self.equal {
            self.values.first().map(|(_, v)| v)
        } else {
            None
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.identity)?;
        for (i, (k, v)) in self.params.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}={v}")?;
        }
        f.write_str("):")?;
        for (label, v) in &self.values {
            write!(f, " {label}={v}")?;
        }
        f.write_str(if self.equal { " equal" } else { " MISMATCH" })
    }
}

fn int_values<const N: usize>(values: [(&str, BigInt); N]) -> Vec<(String, ExactRational)> {
    values
        .into_iter()
        .map(|(k, v)| (k.to_string(), ExactRational::from_integer(v)))
        .collect()
}

fn require_positive(name: &str, v: u32) -> Result<i64> {
    if v == 0 {
        Err(Error::InvalidArgument(format!("{name} must be at least 1")))
    } else {
        Ok(i64::from(v))
    }
}

/// Divides `value` by `divisor`, failing if the division is not exact.
fn exact_div(value: BigInt, divisor: i64, what: &str) -> Result<BigInt> {
    let (q, r) = value.div_rem(&BigInt::from(divisor));
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::ArithmeticFault(format!("{what} = {value} is not divisible by {divisor}")))
    }
}

/// `sum_{k=0}^{n} T(n, k) T(n, k+1)`.
pub fn lhs_problem(n: u32) -> BigInt {
    let row = motzkin_row(n);
    row.iter().zip(row.iter().skip(1)).map(|(a, b)| a * b).sum()
}

/// `sum_{k=0}^{upper} C(2n, 2k+1) C(2k+1, k) / (k+2)` as an exact rational.
pub fn problem_rhs_sum(n: u32, upper: i64) -> ExactRational {
    let two_n = 2 * i64::from(n);
    (0..=upper)
        .map(|k| {
            let num = binomial_direct(two_n, 2 * k + 1) * binomial_direct(2 * k + 1, k);
            ExactRational::new(num, k + 2)
        })
        .sum()
}

/// `sum_{k=0}^{n} C(2n, 2k+1) C(2k+1, k) / (k+2)`; the total must be an
/// integer.
pub fn rhs_problem(n: u32) -> Result<BigInt> {
    problem_rhs_sum(n, i64::from(n)).into_integer("problem right-hand side")
}

/// `T(2n, 2n-1) / 2`, which is `0` at `n = 0` since `T(0, -1) = 0`.
pub fn half_motzkin_subdiagonal(n: u32) -> Result<BigInt> {
    let t = motzkin_t(2 * n, 2 * i64::from(n) - 1);
    exact_div(t, 2, &format!("T({}, {})", 2 * n, 2 * i64::from(n) - 1))
}

/// Three-way check of
/// `sum T(n,k) T(n,k+1) = sum C(2n,2k+1) C(2k+1,k)/(k+2) = T(2n,2n-1)/2`.
pub fn theorem1_check(n: u32) -> Result<VerificationReport> {
    Ok(VerificationReport::new(
        "theorem1",
        &[("n", i64::from(n))],
        int_values([
            ("lhs", lhs_problem(n)),
            ("binomial_sum", rhs_problem(n)?),
            ("half_T", half_motzkin_subdiagonal(n)?),
        ]),
    ))
}

/// `sum_{k=0}^{floor(s/2)} C(s+d-1, 2k+d-1) C(2k+d-1, k) / (k+d)` as an
/// exact rational. It is an integer whenever `gcd(s, d) = 1` but not in
/// general: `(s, d) = (2, 2)` gives `5/2`.
pub fn theorem2_sum(s: u32, d: u32) -> Result<ExactRational> {
    let s = require_positive("s", s)?;
    let d = require_positive("d", d)?;
    Ok((0..=s / 2)
        .map(|k| {
            let num = binomial_direct(s + d - 1, 2 * k + d - 1) * binomial_direct(2 * k + d - 1, k);
            ExactRational::new(num, k + d)
        })
        .sum())
}

/// [`theorem2_sum`], required to be an integer.
pub fn theorem2_lhs(s: u32, d: u32) -> Result<BigInt> {
    theorem2_sum(s, d)?.into_integer(&format!("two-parameter sum at s={s}, d={d}"))
}

/// `T(s+d-1, s) / d` as an exact rational.
pub fn theorem2_rhs_exact(s: u32, d: u32) -> Result<ExactRational> {
    let s64 = require_positive("s", s)?;
    let d64 = require_positive("d", d)?;
    Ok(ExactRational::new(motzkin_t(s + d - 1, s64), d64))
}

/// `T(s+d-1, s) / d`; the division must be exact.
pub fn theorem2_rhs(s: u32, d: u32) -> Result<BigInt> {
    let s64 = require_positive("s", s)?;
    let d64 = require_positive("d", d)?;
    let t = motzkin_t(s + d - 1, s64);
    exact_div(t, d64, &format!("T({}, {s})", s + d - 1))
}

/// Checks `theorem2_lhs(s, d) = T(s+d-1, s) / d`, requiring `d` to divide
/// `T(s+d-1, s)`. Fails with [`Error::ArithmeticFault`] for pairs where it
/// does not (only non-coprime pairs; see [`theorem2_exact_check`]).
pub fn theorem2_check(s: u32, d: u32) -> Result<VerificationReport> {
    let rhs = theorem2_rhs(s, d)?;
    Ok(VerificationReport::new(
        "theorem2",
        &[("s", i64::from(s)), ("d", i64::from(d))],
        int_values([("sum", theorem2_lhs(s, d)?), ("T_over_d", rhs)]),
    ))
}

/// The same identity compared as exact rationals, with no integrality
/// requirement. Holds for every `s, d >= 1`.
pub fn theorem2_exact_check(s: u32, d: u32) -> Result<VerificationReport> {
    Ok(VerificationReport::new(
        "theorem2-exact",
        &[("s", i64::from(s)), ("d", i64::from(d))],
        vec![
            ("sum".into(), theorem2_sum(s, d)?),
            ("T_over_d".into(), theorem2_rhs_exact(s, d)?),
        ],
    ))
}

/// `sum_{k=0}^{floor(s/2)} C(s+d-1, 2k+d-1) C(2k+d, k) / (2k+d)` as an exact
/// rational.
pub fn conjecture_sum_exact(s: u32, d: u32) -> Result<ExactRational> {
    let s = require_positive("s", s)?;
    let d = require_positive("d", d)?;
    Ok((0..=s / 2)
        .map(|k| {
            let num = binomial_direct(s + d - 1, 2 * k + d - 1) * binomial_direct(2 * k + d, k);
            ExactRational::new(num, 2 * k + d)
        })
        .sum())
}

/// The conjectured number of `(s, s+d, s+2d)`-core partitions,
/// [`conjecture_sum_exact`] required to be an integer.
pub fn conjecture_sum(s: u32, d: u32) -> Result<BigInt> {
    conjecture_sum_exact(s, d)?.into_integer(&format!("conjecture sum at s={s}, d={d}"))
}

/// `C(2k+d, k) / (2k+d) = C(2k+d-1, k) / (k+d)`, which turns
/// [`conjecture_sum`] into [`theorem2_lhs`] term by term.
pub fn term_bridge(k: u32, d: u32) -> Result<VerificationReport> {
    let d = require_positive("d", d)?;
    let k = i64::from(k);
    let left = ExactRational::new(binomial_direct(2 * k + d, k), 2 * k + d);
    let right = ExactRational::new(binomial_direct(2 * k + d - 1, k), k + d);
    Ok(VerificationReport::new(
        "term-bridge",
        &[("k", k), ("d", d)],
        vec![("conjecture_term".into(), left), ("theorem2_term".into(), right)],
    ))
}

/// `sum_{k=0}^{n} C(n,k) C(n,k+1) = C(2n, n+1)`.
pub fn pascal_analogy_check(n: u32) -> VerificationReport {
    let n = i64::from(n);
    let sum: BigInt = (0..=n)
        .map(|k| binomial_direct(n, k) * binomial_direct(n, k + 1))
        .sum();
    VerificationReport::new(
        "pascal-analogy",
        &[("n", n)],
        int_values([("sum", sum), ("central", binomial_direct(2 * n, n + 1))]),
    )
}

/// `sum_{k=0}^{dn/2} A(n,k) A(n,k+1) = A(2n, dn-1) / 2` for the triangle
/// generated by `spec`.
///
/// Also asserts the two facts the identity rests on: `A(2n, dn+1) = 0` and
/// `A(2n, dn+3) = -A(2n, dn-1)`.
pub fn general_identity_check(spec: &TriangleSpec, n: u32) -> Result<VerificationReport> {
    let d = i64::from(spec.degree());
    let dn = d * i64::from(n);
    let row = spec.row_polynomial(n);
    let lhs: BigInt = (0..=dn / 2)
        .map(|k| row.coefficient(k) * row.coefficient(k + 1))
        .sum();

    let doubled = spec.row_polynomial(2 * n);
    let below = doubled.coefficient(dn - 1);
    let middle = doubled.coefficient(dn + 1);
    let above = doubled.coefficient(dn + 3);
    if !middle.is_zero() {
        return Err(Error::ArithmeticFault(format!(
            "A({}, {}) = {middle}, expected 0",
            2 * n,
            dn + 1
        )));
    }
    if above != -&below {
        return Err(Error::ArithmeticFault(format!(
            "A({0}, {1}) = {above} but A({0}, {2}) = {below}",
            2 * n,
            dn + 3,
            dn - 1
        )));
    }
    let half = exact_div(below, 2, &format!("A({}, {})", 2 * n, dn - 1))?;
    Ok(VerificationReport::new(
        format!("general[{spec}]"),
        &[("n", i64::from(n))],
        int_values([("lhs", lhs), ("half_A", half)]),
    ))
}

/// Why a sweep did not pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SweepFailure {
    Mismatch(VerificationReport),
    Fault(Error),
}

impl fmt::Display for SweepFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SweepFailure::Mismatch(r) => r.fmt(f),
            SweepFailure::Fault(e) => e.fmt(f),
        }
    }
}

/// Aggregated result of running a check over many parameter values.
#[derive(Clone, Debug)]
pub struct SweepOutcome {
    pub reports: Vec<Result<VerificationReport>>,
}

impl SweepOutcome {
    pub fn total(&self) -> usize {
        self.reports.len()
    }

    pub fn passed(&self) -> usize {
        self.reports
            .iter()
            .filter(|r| matches!(r, Ok(rep) if rep.equal))
            .count()
    }

    pub fn all_passed(&self) -> bool {
        self.passed() == self.total()
    }

    /// First failure in parameter order.
    pub fn first_failure(&self) -> Option<SweepFailure> {
        self.reports.iter().find_map(|r| match r {
            Ok(rep) if rep.equal => None,
            Ok(rep) => Some(SweepFailure::Mismatch(rep.clone())),
            Err(e) => Some(SweepFailure::Fault(e.clone())),
        })
    }
}

/// Runs `check` on every parameter in parallel. Report order follows
/// `params` regardless of scheduling.
pub fn sweep<P, F>(params: Vec<P>, check: F) -> SweepOutcome
where
    P: Send,
    F: Fn(P) -> Result<VerificationReport> + Sync + Send,
{
    SweepOutcome {
        reports: params.into_par_iter().map(check).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn problem_sides_small() {
        assert_eq!(lhs_problem(0), big(0));
        assert_eq!(lhs_problem(1), big(1));
        assert_eq!(lhs_problem(2), big(6));
        assert_eq!(rhs_problem(0).unwrap(), big(0));
        assert_eq!(rhs_problem(1).unwrap(), big(1));
        assert_eq!(rhs_problem(2).unwrap(), big(6));
    }

    #[test]
    fn rhs_trailing_term_vanishes() {
        for n in 1..60 {
            let n64 = i64::from(n);
            assert_eq!(problem_rhs_sum(n, n64), problem_rhs_sum(n, n64 - 1));
        }
    }

    #[test]
    fn theorem1_small() {
        let r = theorem1_check(0).unwrap();
        assert!(r.equal);
        assert_eq!(r.common_value(), Some(&ExactRational::from_integer(0)));
        let r = theorem1_check(2).unwrap();
        assert_eq!(r.common_value(), Some(&ExactRational::from_integer(6)));
        // T(6,5) = 76 and T(10,9) = 3610 from the recurrence.
        assert_eq!(theorem1_check(3).unwrap().common_value(), Some(&ExactRational::from_integer(38)));
        assert_eq!(theorem1_check(5).unwrap().common_value(), Some(&ExactRational::from_integer(1805)));
    }

    #[test]
    fn theorem2_small() {
        assert_eq!(theorem2_lhs(1, 1).unwrap(), big(1));
        assert_eq!(theorem2_lhs(3, 2).unwrap(), big(6));
        assert_eq!(theorem2_lhs(2, 1).unwrap(), big(2));
        for (s, d, v) in [(1, 1, 1), (3, 2, 6), (5, 2, 38)] {
            let r = theorem2_check(s, d).unwrap();
            assert_eq!(r.common_value(), Some(&ExactRational::from_integer(v)), "{r}");
        }
        assert!(matches!(theorem2_lhs(0, 1), Err(Error::InvalidArgument(_))));
        assert!(theorem2_check(1, 0).is_err());
    }

    #[test]
    fn conjecture_sum_small() {
        assert_eq!(conjecture_sum(1, 1).unwrap(), big(1));
        assert_eq!(conjecture_sum(3, 2).unwrap(), big(6));
        for s in 1..30 {
            for d in 1..6 {
                assert_eq!(conjecture_sum_exact(s, d).unwrap(), theorem2_sum(s, d).unwrap());
            }
        }
    }

    #[test]
    fn theorem2_non_coprime_is_not_integral() {
        assert_eq!(theorem2_sum(2, 2).unwrap(), ExactRational::new(5, 2));
        assert!(matches!(theorem2_lhs(2, 2), Err(Error::ArithmeticFault(_))));
        assert!(matches!(theorem2_check(2, 2), Err(Error::ArithmeticFault(_))));
        assert!(matches!(conjecture_sum(3, 3), Err(Error::ArithmeticFault(_))));
        let r = theorem2_exact_check(2, 2).unwrap();
        assert!(r.equal, "{r}");
        assert_eq!(r.common_value(), Some(&ExactRational::new(5, 2)));
    }

    #[test]
    fn bridge_small() {
        let r = term_bridge(0, 1).unwrap();
        assert_eq!(r.common_value(), Some(&ExactRational::from_integer(1)));
        // C(3,1)/3 = 1 and C(2,1)/2 = 1
        let r = term_bridge(1, 1).unwrap();
        assert_eq!(r.common_value(), Some(&ExactRational::from_integer(1)));
        // C(7,2)/7 = 3 and C(6,2)/5 = 3
        let r = term_bridge(2, 3).unwrap();
        assert_eq!(r.common_value(), Some(&ExactRational::from_integer(3)));
    }

    #[test]
    fn pascal_small() {
        assert_eq!(pascal_analogy_check(0).common_value(), Some(&ExactRational::from_integer(0)));
        assert_eq!(pascal_analogy_check(2).common_value(), Some(&ExactRational::from_integer(4)));
        assert_eq!(pascal_analogy_check(3).common_value(), Some(&ExactRational::from_integer(15)));
    }

    #[test]
    fn general_small() {
        let motzkin = TriangleSpec::motzkin();
        let r = general_identity_check(&motzkin, 2).unwrap();
        assert_eq!(r.common_value(), Some(&ExactRational::from_integer(6)));
        let r = general_identity_check(&motzkin, 0).unwrap();
        assert_eq!(r.common_value(), Some(&ExactRational::from_integer(0)));
        let spec = TriangleSpec::new([1, 2, 1]).unwrap();
        // Row 2 of (1+x)^4 (1-x^2): 1 4 5 0 -5 -4 -1 -> 4 + 20 = 24; row 4 at x^3: 48.
        let r = general_identity_check(&spec, 2).unwrap();
        assert_eq!(r.common_value(), Some(&ExactRational::from_integer(24)));
    }

    #[test]
    fn report_mismatch() {
        let r = VerificationReport::new(
            "x",
            &[("n", 1)],
            vec![("a".into(), ExactRational::from_integer(1)), ("b".into(), ExactRational::from_integer(2))],
        );
        assert!(!r.equal);
        assert_eq!(r.common_value(), None);
        assert_eq!(r.to_string(), "x(n=1): a=1 b=2 MISMATCH");
        let out = sweep(vec![0u32, 1], |n| if n == 0 { Ok(r.clone()) } else { theorem1_check(n) });
        assert_eq!(out.passed(), 1);
        assert_eq!(out.first_failure(), Some(SweepFailure::Mismatch(r)));
    }
}
