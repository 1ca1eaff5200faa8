//! Number triangles generated by `P(x)^n * Q(x)`.
//!
//! The Motzkin triangle is available three ways: the three-term row
//! recurrence ([`motzkin_t`]), its skew-symmetric extension to columns
//! `0..=2n+2` ([`extended_t`]), and coefficient extraction from
//! `(1 + x + x^2)^n (1 - x^2)` ([`t_via_ct`]). All three must agree; the
//! tests and the acceptance suite check that they do.
//!
//! General triangles `A(n, k)` are *defined* as the coefficient of `x^k` in
//! `P(x)^n (1 - x^2)` for a palindromic `P` of even degree. The
//! `d + 1`-term recurrence with coefficients of `P` then holds by
//! construction.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;

/// Palindromic coefficient vector `(a_0, ..., a_d)` of `P(x)` with `d` even
/// and `a_0 = a_d != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TriangleSpec {
    coeffs: Vec<BigInt>,
}

impl TriangleSpec {
    pub fn new<I, C>(coeffs: I) -> Result<Self>
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let coeffs: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        if coeffs.is_empty() {
            return Err(Error::InvalidSpec("no coefficients".into()));
        }
        if coeffs[0].is_zero() {
            return Err(Error::InvalidSpec("leading and trailing coefficients must be nonzero".into()));
        }
        let d = coeffs.len() - 1;
        if !d.is_multiple_of(2) {
            return Err(Error::InvalidSpec(format!("degree {d} is odd")));
        }
        if let Some(j) = (0..=d).find(|&j| coeffs[j] != coeffs[d - j]) {
            return Err(Error::InvalidSpec(format!(
                "not palindromic: a_{j} = {} but a_{} = {}",
                coeffs[j],
                d - j,
                coeffs[d - j]
            )));
        }
        Ok(Self { coeffs })
    }

    /// `P(x) = 1 + x + x^2`, which generates the Motzkin triangle.
    pub fn motzkin() -> Self {
        Self { coeffs: vec![BigInt::one(); 3] }
    }

    pub fn degree(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `P(x)`.
    pub fn polynomial(&self) -> LaurentPolynomial {
        LaurentPolynomial::from_coeffs(self.coeffs.iter().cloned())
    }

    /// Row `n` as a polynomial: `P(x)^n (1 - x^2)`.
    pub fn row_polynomial(&self, n: u32) -> LaurentPolynomial {
        &self.polynomial().pow(n) * &one_minus_x_squared()
    }

    /// Row `n` as coefficients of `x^0 ..= x^(dn+2)`.
    pub fn row(&self, n: u32) -> Vec<BigInt> {
        let top = i64::from(self.degree()) * i64::from(n) + 2;
        self.row_polynomial(n).coefficients_in(0, top)
    }
}

impl FromStr for TriangleSpec {
    type Err = Error;

    /// Parses a comma-separated list such as `1,2,1`.
    fn from_str(s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::InvalidSpec(format!("bad coefficient {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(coeffs)
    }
}

impl fmt::Display for TriangleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// `Q(x) = 1 - x^2`.
pub fn one_minus_x_squared() -> LaurentPolynomial {
    LaurentPolynomial::from_coeffs([1, 0, -1])
}

fn motzkin_rows() -> &'static RwLock<Vec<Arc<[BigInt]>>> {
    static ROWS: OnceLock<RwLock<Vec<Arc<[BigInt]>>>> = OnceLock::new();
    ROWS.get_or_init(|| RwLock::new(vec![Arc::from(vec![BigInt::one()])]))
}

/// Row `n` of the Motzkin triangle, columns `0..=n`.
///
/// Rows are built by the recurrence and cached process-wide; readers only
/// ever see complete rows.
pub fn motzkin_row(n: u32) -> Arc<[BigInt]> {
    let n = n as usize;
    if let Some(row) = motzkin_rows().read().unwrap().get(n) {
        return Arc::clone(row);
    }
    let mut rows = motzkin_rows().write().unwrap();
    while rows.len() <= n {
        let prev = rows.last().unwrap();
        let next = next_motzkin_row(prev);
        rows.push(next.into());
    }
    Arc::clone(&rows[n])
}

/// `T(n, k) = T(n-1, k-2) + T(n-1, k-1) + T(n-1, k)`, with `T(n, 0) = 1`
/// and zero outside `0..=n`.
fn next_motzkin_row(prev: &[BigInt]) -> Vec<BigInt> {
    let at = |k: isize| -> BigInt {
        usize::try_from(k)
            .ok()
            .and_then(|k| prev.get(k))
            .cloned()
            .unwrap_or_default()
    };
    let mut row = Vec::with_capacity(prev.len() + 1);
    row.push(BigInt::one());
    for k in 1..=prev.len() as isize {
        row.push(at(k - 2) + at(k - 1) + at(k));
    }
    row
}

/// Motzkin triangle entry `T(n, k)`; zero for `k < 0` or `k > n`.
pub fn motzkin_t(n: u32, k: i64) -> BigInt {
    if k < 0 || k > i64::from(n) {
        return BigInt::zero();
    }
    motzkin_row(n)[k as usize].clone()
}

/// The Motzkin numbers `1, 1, 2, 4, 9, 21, ...` as the diagonal `T(n, n)`.
pub fn motzkin_number(n: u32) -> BigInt {
    motzkin_t(n, i64::from(n))
}

/// Skew-symmetric extension of row `n` to columns `0..=2n+2`, with
/// `T(n, n+1) = 0` and `T(n, k) = -T(n, 2n+2-k)`.
pub fn extended_t(n: u32, k: i64) -> Result<BigInt> {
    let n64 = i64::from(n);
    let max = 2 * n64 + 2;
    if !(0..=max).contains(&k) {
        return Err(Error::OutOfRange { n, k, max });
    }
    Ok(if k <= n64 {
        motzkin_t(n, k)
    } else if k == n64 + 1 {
        BigInt::zero()
    } else {
        -motzkin_t(n, max - k)
    })
}

/// The full extended row `n`: `2n + 3` entries.
pub fn extended_row(n: u32) -> Vec<BigInt> {
    (0..=2 * i64::from(n) + 2)
        .map(|k| extended_t(n, k).expect("k within the extension window"))
        .collect()
}

/// `(1 + x + x^2)^n (1 - x^2)`.
pub fn motzkin_generating_polynomial(n: u32) -> LaurentPolynomial {
    TriangleSpec::motzkin().row_polynomial(n)
}

/// `T(n, k) = CT[(1 + x + x^2)^n (1 - x^2) / x^k]`, for any integer `k`.
pub fn t_via_ct(n: u32, k: i64) -> BigInt {
    motzkin_generating_polynomial(n).shift(-k).constant_term()
}

/// `A(n, k)`: coefficient of `x^k` in `P(x)^n (1 - x^2)`; zero outside
/// `0..=dn+2`.
pub fn general_a(spec: &TriangleSpec, n: u32, k: i64) -> BigInt {
    spec.row_polynomial(n).coefficient(k)
}

/// `C(n, k) = CT[(1 + x)^n / x^k]`; zero for `k < 0` or `k > n`.
pub fn binomial(n: u32, k: i64) -> BigInt {
    LaurentPolynomial::from_coeffs([1, 1]).pow(n).shift(-k).constant_term()
}

/// `C(n, k)` by the multiplicative formula. Accepts any `n`, `k` and
/// returns zero outside `0 <= k <= n`. This is the path the identity sums
/// use.
pub fn binomial_direct(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // Exact at every step: acc is C(n, i) before this line.
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Coefficient of `x^k` in `(1 + x)^n (1 - x)`.
pub fn catalan_variant(n: u32, k: i64) -> BigInt {
    let p = &LaurentPolynomial::from_coeffs([1, 1]).pow(n) * &LaurentPolynomial::from_coeffs([1, -1]);
    p.coefficient(k)
}

/// Coefficient of `x^k` in `(1 + x + x^2)^n`.
pub fn trinomial(n: u32, k: i64) -> BigInt {
    LaurentPolynomial::from_coeffs([1, 1, 1]).pow(n).coefficient(k)
}

/// Trinomial coefficient via `(1 + x + x^2)^n = sum_j C(n, j) x^(2j) (1 + x)^(n-j)`,
/// i.e. `sum_j C(n, j) C(n - j, k - 2j)`.
pub fn trinomial_by_binomials(n: u32, k: i64) -> BigInt {
    let n = i64::from(n);
    (0..=n)
        .map(|j| binomial_direct(n, j) * binomial_direct(n - j, k - 2 * j))
        .sum()
}
