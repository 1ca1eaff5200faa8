//! Sparse Laurent polynomials in one variable over the integers.
//!
//! Every identity in this crate is ultimately a statement about the
//! coefficients of some product `P(x)^n * Q(x) / x^k`, so this type only
//! needs ring operations, powering, the substitution `x -> 1/x` and
//! coefficient extraction.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A Laurent polynomial stored as `exponent -> coefficient`.
///
/// Zero coefficients are never stored, so the derived equality is equality
/// of polynomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(1, 1)
    }

    /// `c * x^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs. Repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Ordinary polynomial `c_0 + c_1 x + c_2 x^2 + ...`.
    pub fn from_coeffs<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        Self::from_terms((0..).zip(coeffs))
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Coefficient of `x^e`; zero when `e` is outside the support.
    pub fn coefficient(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Coefficient of `x^0`.
    pub fn constant_term(&self) -> BigInt {
        self.coefficient(0)
    }

    /// Coefficients of `x^lo, ..., x^hi` inclusive, zeros included.
    pub fn coefficients_in(&self, lo: i64, hi: i64) -> Vec<BigInt> {
        (lo..=hi).map(|e| self.coefficient(e)).collect()
    }

    /// `p(1/x)`: every exponent is negated.
    pub fn substitute_reciprocal(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Multiplies by `x^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e + shift, c.clone())).collect(),
        }
    }

    /// `p^n` by repeated squaring. `p^0 = 1`, including for `p = 0`.
    pub fn pow(&self, mut n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Value at `x = 1`, i.e. the sum of all coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl<'a> Add<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &'a LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(mut self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(mut self) -> LaurentPolynomial {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl<'a> Sub<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: &'a LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Sub for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self - &rhs
    }
}

impl<'a> Mul<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &'a LaurentPolynomial) -> LaurentPolynomial {
        let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                *acc.entry(ea + eb).or_default() += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        LaurentPolynomial { terms: acc }
    }
}

impl Mul for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Renders as e.g. `4*x^-1 + 3 + 5*x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if e == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
