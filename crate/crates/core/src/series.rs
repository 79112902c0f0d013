//! Truncated formal power series in one variable `q` with exact rational
//! coefficients.
//!
//! A [`QSeries`] of order `N` tracks the coefficients of `q^0 ..= q^N`. Every
//! binary operation returns a series whose order is the minimum of the operand
//! orders, so a result never claims precision that one of its inputs lacked.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,
    #[error("exponent {requested} exceeds the tracked order {order}")]
    OrderExceeded { requested: usize, order: usize },
    #[error("division by (1 - {c}q^0) which is zero")]
    ZeroFactor { c: i64 },
}

/// Outcome of comparing two series coefficient by coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    Mismatch {
        exponent: usize,
        left: Rational,
        right: Rational,
    },
}

impl Comparison {
    pub fn is_equal(&self) -> bool {
        matches!(self, Comparison::Equal)
    }
}

/// Builds a rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Builds the reduced rational `num / den`. Panics when `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

// In-place helpers with an integer fast path: `Ratio::add_assign` always runs a
// gcd reduction even when both denominators are one.
#[inline]
fn add_into(dst: &mut Rational, src: &Rational) {
    if src.is_zero() {
        return;
    }
    if dst.denom().is_one() && src.denom().is_one() {
        *dst = Rational::from_integer(dst.numer() + src.numer());
    } else {
        *dst += src;
    }
}

#[inline]
fn sub_into(dst: &mut Rational, src: &Rational) {
    if src.is_zero() {
        return;
    }
    if dst.denom().is_one() && src.denom().is_one() {
        *dst = Rational::from_integer(dst.numer() - src.numer());
    } else {
        *dst -= src;
    }
}

#[inline]
fn mul_rat(a: &Rational, b: &Rational) -> Rational {
    if a.denom().is_one() && b.denom().is_one() {
        Rational::from_integer(a.numer() * b.numer())
    } else {
        a * b
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<Rational>,
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        QSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * q^e`, or the zero series when `e` lies beyond the truncation.
    pub fn monomial(c: Rational, e: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if e <= order {
            s.coeffs[e] = c;
        }
        s
    }

    /// Series with the given coefficients; the order is `coeffs.len() - 1`.
    ///
    /// Panics on an empty vector, since a series always tracks `q^0`.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series tracks at least q^0");
        QSeries { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// Sparse constructor: sum of `c * q^e` over the given terms, dropping
    /// exponents above `order`. Repeated exponents accumulate.
    pub fn from_terms<I>(terms: I, order: usize) -> Self
    where
        I: IntoIterator<Item = (usize, Rational)>,
    {
        let mut s = Self::zero(order);
        for (e, c) in terms {
            if e <= order {
                add_into(&mut s.coeffs[e], &c);
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<&Rational, SeriesError> {
        self.coeffs.get(n).ok_or(SeriesError::OrderExceeded {
            requested: n,
            order: self.order(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Drops every coefficient above `order`. Requesting a larger order than
    /// the series carries is an error: truncation never extends.
    pub fn truncate(&self, order: usize) -> Result<Self, SeriesError> {
        if order > self.order() {
            return Err(SeriesError::OrderExceeded {
                requested: order,
                order: self.order(),
            });
        }
        Ok(QSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    pub(crate) fn truncate_in_place(&mut self, order: usize) {
        debug_assert!(order <= self.order());
        self.coeffs.truncate(order + 1);
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero(self.order());
        }
        QSeries {
            coeffs: self.coeffs.iter().map(|c| mul_rat(c, r)).collect(),
        }
    }

    /// Multiplies by `q^k`; coefficients pushed past the order are dropped.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        if k <= n {
            out.coeffs[k..].clone_from_slice(&self.coeffs[..=n - k]);
        }
        out
    }

    /// Substitutes `q -> q^k`. The order is preserved, so source terms whose
    /// image lands beyond it are dropped.
    pub fn dilate(&self, k: usize) -> Self {
        assert!(k >= 1, "dilation factor must be positive");
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = i * k;
            if e > n {
                break;
            }
            out.coeffs[e] = c.clone();
        }
        out
    }

    /// `q^offset * s(q^k)` at order `k * order + offset`, the largest exponent
    /// of the form `k n + offset` still covered by the source coefficients.
    pub fn spread(&self, k: usize, offset: usize) -> Self {
        assert!(k >= 1, "dilation factor must be positive");
        let mut out = Self::zero(k * self.order() + offset);
        for (i, c) in self.coeffs.iter().enumerate() {
            out.coeffs[i * k + offset] = c.clone();
        }
        out
    }

    /// Multiplicative inverse up to the order. Fails when the constant term
    /// vanishes.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let n = self.order();
        let inv0 = a0.recip();
        let support: Vec<usize> = (1..=n).filter(|&i| !self.coeffs[i].is_zero()).collect();
        let mut b = Vec::with_capacity(n + 1);
        b.push(inv0.clone());
        for m in 1..=n {
            let mut acc = Rational::zero();
            for &k in support.iter().take_while(|&&k| k <= m) {
                add_into(&mut acc, &mul_rat(&self.coeffs[k], &b[m - k]));
            }
            b.push(-mul_rat(&acc, &inv0));
        }
        Ok(QSeries { coeffs: b })
    }

    /// In place `self *= (1 - c q^k)`.
    pub fn mul_one_minus(&mut self, c: i64, k: usize) {
        if k == 0 {
            let f = rat(1 - c);
            *self = self.scale(&f);
            return;
        }
        let n = self.order();
        if k > n || c == 0 {
            return;
        }
        let cr = rat(c);
        for i in (k..=n).rev() {
            if self.coeffs[i - k].is_zero() {
                continue;
            }
            let t = if c == 1 {
                self.coeffs[i - k].clone()
            } else if c == -1 {
                -self.coeffs[i - k].clone()
            } else {
                mul_rat(&self.coeffs[i - k], &cr)
            };
            sub_into(&mut self.coeffs[i], &t);
        }
    }

    /// In place `self /= (1 - c q^k)`. Only `k == 0, c == 1` is singular.
    pub fn div_one_minus(&mut self, c: i64, k: usize) -> Result<(), SeriesError> {
        if k == 0 {
            if c == 1 {
                return Err(SeriesError::ZeroFactor { c });
            }
            let f = ratio(1, 1 - c);
            *self = self.scale(&f);
            return Ok(());
        }
        let n = self.order();
        if k > n || c == 0 {
            return Ok(());
        }
        let cr = rat(c);
        for i in k..=n {
            if self.coeffs[i - k].is_zero() {
                continue;
            }
            let t = if c == 1 {
                self.coeffs[i - k].clone()
            } else if c == -1 {
                -self.coeffs[i - k].clone()
            } else {
                mul_rat(&self.coeffs[i - k], &cr)
            };
            add_into(&mut self.coeffs[i], &t);
        }
        Ok(())
    }

    /// Compares the coefficients of `q^0 ..= q^m` and reports the first
    /// differing exponent. `m` may not exceed either order.
    pub fn equal_up_to(&self, other: &QSeries, m: usize) -> Result<Comparison, SeriesError> {
        let limit = self.order().min(other.order());
        if m > limit {
            return Err(SeriesError::OrderExceeded {
                requested: m,
                order: limit,
            });
        }
        for (i, (a, b)) in self.coeffs.iter().zip(&other.coeffs).take(m + 1).enumerate() {
            if a != b {
                return Ok(Comparison::Mismatch {
                    exponent: i,
                    left: a.clone(),
                    right: b.clone(),
                });
            }
        }
        Ok(Comparison::Equal)
    }

    /// True iff every tracked coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    /// Same as [`QSeries::is_integral`], spelled as a check on a finished series.
    pub fn assert_integral(&self) -> bool {
        self.is_integral()
    }

    /// Largest absolute numerator, handy for sizing diagnostics.
    pub fn max_abs_numer(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.numer().abs())
            .max()
            .unwrap_or_default()
    }

    pub fn add_assign_ref(&mut self, other: &QSeries) {
        let n = self.order().min(other.order());
        self.coeffs.truncate(n + 1);
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            add_into(a, b);
        }
    }

    pub fn sub_assign_ref(&mut self, other: &QSeries) {
        let n = self.order().min(other.order());
        self.coeffs.truncate(n + 1);
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            sub_into(a, b);
        }
    }

    /// Adds `c * q^shift * other` into `self`, truncating at `self`'s order.
    /// `other` must reach at least `self.order() - shift`.
    pub(crate) fn add_shifted_scaled(&mut self, other: &QSeries, shift: usize, c: &Rational) {
        let n = self.order();
        if shift > n || c.is_zero() {
            return;
        }
        debug_assert!(other.order() >= n - shift);
        let unit = c.is_one();
        for (i, b) in other.coeffs.iter().take(n - shift + 1).enumerate() {
            if b.is_zero() {
                continue;
            }
            if unit {
                add_into(&mut self.coeffs[i + shift], b);
            } else {
                add_into(&mut self.coeffs[i + shift], &mul_rat(b, c));
            }
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSeries(order={}; {})", self.order(), self)
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*q")?,
                _ => write!(f, "{c}*q^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        let n = self.order().min(rhs.order());
        let mut out = QSeries::zero(n);
        let rhs_support: Vec<usize> = (0..=n).filter(|&j| !rhs.coeffs[j].is_zero()).collect();
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for &j in rhs_support.iter().take_while(|&&j| i + j <= n) {
                let t = mul_rat(a, &rhs.coeffs[j]);
                add_into(&mut out.coeffs[i + j], &t);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QSeries {
            type Output = QSeries;
            fn $m(self, rhs: QSeries) -> QSeries {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QSeries> for QSeries {
            type Output = QSeries;
            fn $m(self, rhs: &QSeries) -> QSeries {
                (&self).$m(rhs)
            }
        }
        impl $tr<QSeries> for &QSeries {
            type Output = QSeries;
            fn $m(self, rhs: QSeries) -> QSeries {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &QSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| {
                assert!(c.denom().is_one());
                i64::try_from(c.numer()).unwrap()
            })
            .collect()
    }

    #[test]
    fn zero_and_monomial() {
        assert_eq!(ints(&QSeries::zero(3)), vec![0, 0, 0, 0]);
        assert_eq!(ints(&QSeries::zero(0)), vec![0]);
        let s = &QSeries::zero(5) + &QSeries::monomial(rat(1), 2, 5);
        assert_eq!(ints(&s), vec![0, 0, 1, 0, 0, 0]);
        assert_eq!(ints(&QSeries::monomial(rat(1), 0, 4)), vec![1, 0, 0, 0, 0]);
        assert_eq!(ints(&QSeries::monomial(rat(-1), 1, 4)), vec![0, -1, 0, 0, 0]);
        assert!(QSeries::monomial(rat(1), 9, 4).is_zero());
    }

    #[test]
    fn additive_ops() {
        let q = QSeries::monomial(rat(1), 1, 6);
        assert!((&q + &(-&q)).is_zero());
        let s = QSeries::from_integers(&[1, 1]);
        let half = s.scale(&ratio(1, 2));
        assert_eq!(half.coeffs(), &[ratio(1, 2), ratio(1, 2)]);
        assert!((&s - &s).is_zero());
    }

    #[test]
    fn order_is_minimum() {
        let a = QSeries::one(10);
        let b = QSeries::one(4);
        assert_eq!((&a + &b).order(), 4);
        assert_eq!((&a * &b).order(), 4);
        assert_eq!((&b - &a).order(), 4);
    }

    #[test]
    fn product_of_binomials() {
        let a = QSeries::from_integers(&[1, -1, 0, 0]);
        let b = QSeries::from_integers(&[1, 1, 0, 0]);
        assert_eq!(ints(&(&a * &b)), vec![1, 0, -1, 0]);
        assert_eq!(&a * &QSeries::one(3), a);
    }

    #[test]
    fn geometric_inverse() {
        let s = QSeries::from_integers(&[1, -1, 0, 0, 0, 0]);
        assert_eq!(ints(&s.invert().unwrap()), vec![1; 6]);
        let two = QSeries::constant(rat(2), 3);
        assert_eq!(two.invert().unwrap().coeff(0).unwrap(), &ratio(1, 2));
        assert_eq!(
            QSeries::monomial(rat(1), 1, 3).invert(),
            Err(SeriesError::ZeroConstantTerm)
        );
    }

    #[test]
    fn dilation() {
        let s = QSeries::from_integers(&[1, 1, 0, 0]);
        assert_eq!(ints(&s.dilate(2)), vec![1, 0, 1, 0]);
        let t = QSeries::from_integers(&[3, -1, 4, 1, -5]);
        assert_eq!(t.dilate(1), t);
    }

    #[test]
    fn coefficient_access_and_comparison() {
        let s = QSeries::from_integers(&[1, -1]);
        assert_eq!(s.coeff(1).unwrap(), &rat(-1));
        assert_eq!(
            s.coeff(2),
            Err(SeriesError::OrderExceeded {
                requested: 2,
                order: 1
            })
        );
        assert!(s.equal_up_to(&s, 1).unwrap().is_equal());
        let one = QSeries::one(60);
        let bumped = &one + &QSeries::monomial(rat(1), 51, 60);
        assert!(one.equal_up_to(&bumped, 50).unwrap().is_equal());
        assert_eq!(
            one.equal_up_to(&bumped, 60).unwrap(),
            Comparison::Mismatch {
                exponent: 51,
                left: rat(0),
                right: rat(1)
            }
        );
        assert!(one.equal_up_to(&bumped.truncate(20).unwrap(), 21).is_err());
    }

    #[test]
    fn integrality() {
        assert!(QSeries::from_integers(&[1, 2]).is_integral());
        assert!(!QSeries::monomial(ratio(1, 2), 1, 2).is_integral());
    }

    #[test]
    fn factor_multiplication_matches_cauchy_product() {
        let base = QSeries::from_integers(&[2, -3, 5, 0, 7, 1, -1, 4]);
        for &(c, k) in &[(1, 1), (-1, 2), (3, 3), (1, 7), (1, 9)] {
            let mut f = vec![0i64; 8];
            f[0] = 1;
            if k <= 7 {
                f[k] = -c;
            }
            let expected = &base * &QSeries::from_integers(&f);
            let mut got = base.clone();
            got.mul_one_minus(c, k);
            assert_eq!(got, expected);
            got.div_one_minus(c, k).unwrap();
            assert_eq!(got, base);
        }
        let mut z = base.clone();
        z.mul_one_minus(-1, 0);
        assert_eq!(z, base.scale(&rat(2)));
        z.div_one_minus(-1, 0).unwrap();
        assert_eq!(z, base);
        assert!(z.div_one_minus(1, 0).is_err());
    }

    #[test]
    fn shift_drops_overflow() {
        let s = QSeries::from_integers(&[1, 2, 3]);
        assert_eq!(ints(&s.shift(1)), vec![0, 1, 2]);
        assert!(s.shift(3).is_zero());
    }
}
