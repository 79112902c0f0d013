//! q-Pochhammer symbols, basic hypergeometric partial sums and theta-type
//! series, all built as [`QSeries`] truncated at an explicit order.
//!
//! Every parameter is a signed monomial `c * q^e` ([`MonomialParam`]). A
//! Pochhammer factor `(1 - c q^k)` is only ever realised with `k >= 0`; a
//! factor with `k == 0` is the scalar `1 - c`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::series::{rat, QSeries, Rational, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProductError {
    #[error("factor (1 - {c}q^{exponent}) has a negative exponent")]
    NegativeExponentFactor { c: i64, exponent: i64 },
    #[error("infinite product with parameter exponent {exponent} < 1 does not converge q-adically")]
    NonconvergentProduct { exponent: i64 },
    #[error("hypergeometric argument exponent {exponent} < 1 gives a non-terminating truncation")]
    NonterminatingSum { exponent: i64 },
    #[error("denominator factor (1 - q^0) vanishes at term {term}")]
    ZeroDenominator { term: usize },
    #[error("exponent at index {index} is not a nonnegative integer")]
    NonintegralExponent { index: i64 },
    #[error("summand exponents must strictly increase (term {term})")]
    NonMonotoneSum { term: usize },
    #[error("invalid specification: {0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// The monomial `c * q^e` used as a Pochhammer or hypergeometric parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialParam {
    pub c: i64,
    pub e: i64,
}

impl MonomialParam {
    pub const ONE: MonomialParam = MonomialParam { c: 1, e: 0 };

    pub const fn new(c: i64, e: i64) -> Self {
        MonomialParam { c, e }
    }

    /// `q^e`
    pub const fn q_pow(e: i64) -> Self {
        MonomialParam { c: 1, e }
    }

    /// `-q^e`
    pub const fn neg_q_pow(e: i64) -> Self {
        MonomialParam { c: -1, e }
    }

    /// Multiplies by `q^k`.
    pub const fn shift(self, k: i64) -> Self {
        MonomialParam {
            c: self.c,
            e: self.e + k,
        }
    }

    pub const fn mul(self, other: MonomialParam) -> Self {
        MonomialParam {
            c: self.c * other.c,
            e: self.e + other.e,
        }
    }

    /// Exact quotient; `None` when the integer coefficients do not divide.
    pub fn checked_div(self, other: MonomialParam) -> Option<Self> {
        if other.c == 0 || self.c % other.c != 0 {
            return None;
        }
        Some(MonomialParam {
            c: self.c / other.c,
            e: self.e - other.e,
        })
    }

    pub const fn square(self) -> Self {
        self.mul(self)
    }
}

impl std::fmt::Display for MonomialParam {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.c, self.e) {
            (c, 0) => write!(f, "{c}"),
            (1, 1) => write!(f, "q"),
            (-1, 1) => write!(f, "-q"),
            (1, e) => write!(f, "q^{e}"),
            (-1, e) => write!(f, "-q^{e}"),
            (c, e) => write!(f, "{c}q^{e}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PochLength {
    Finite(usize),
    Infinite,
}

/// `(a; q^base)_len` raised to an integer power (negative powers divide).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PochFactor {
    pub param: MonomialParam,
    pub base: usize,
    pub length: PochLength,
    pub power: i32,
}

impl PochFactor {
    pub fn finite(param: MonomialParam, base: usize, n: usize) -> Self {
        PochFactor {
            param,
            base,
            length: PochLength::Finite(n),
            power: 1,
        }
    }

    pub fn infinite(param: MonomialParam, base: usize) -> Self {
        PochFactor {
            param,
            base,
            length: PochLength::Infinite,
            power: 1,
        }
    }

    pub fn pow(mut self, p: i32) -> Self {
        self.power *= p;
        self
    }

    pub fn inv(self) -> Self {
        self.pow(-1)
    }
}

/// One term `coeff * q^exponent * prod(factors)` of a sum of products.
#[derive(Debug, Clone)]
pub struct Summand {
    pub coeff: Rational,
    pub exponent: i64,
    pub factors: Vec<PochFactor>,
}

impl Summand {
    pub fn new(coeff: Rational, exponent: i64) -> Self {
        Summand {
            coeff,
            exponent,
            factors: Vec::new(),
        }
    }

    pub fn with(mut self, f: PochFactor) -> Self {
        self.factors.push(f);
        self
    }
}

/// Factors `(1 - c q^k)` with `1 <= k <= limit` and their multiplicities,
/// plus the scalar contributed by `k == 0` factors. `None` scalar means a
/// vanishing numerator factor.
struct Expansion {
    factors: BTreeMap<(i64, usize), i64>,
    scalar: Option<Rational>,
}

fn expand(factors: &[PochFactor], limit: usize, term: usize) -> Result<Expansion, ProductError> {
    let mut map: BTreeMap<(i64, usize), i64> = BTreeMap::new();
    let mut scalar = Rational::one();
    let mut vanishes = false;
    for f in factors {
        if f.base == 0 {
            return Err(ProductError::InvalidSpec("Pochhammer base must be positive".into()));
        }
        if f.power == 0 {
            continue;
        }
        let count = match f.length {
            PochLength::Finite(n) => n,
            PochLength::Infinite => {
                if f.param.e < 1 {
                    return Err(ProductError::NonconvergentProduct { exponent: f.param.e });
                }
                usize::MAX
            }
        };
        if count > 0 {
            // the smallest exponent is realised first
            let last = match f.length {
                PochLength::Finite(n) => f.param.e + (n as i64 - 1) * f.base as i64,
                PochLength::Infinite => f.param.e,
            };
            let lowest = f.param.e.min(last);
            if lowest < 0 {
                return Err(ProductError::NegativeExponentFactor {
                    c: f.param.c,
                    exponent: lowest,
                });
            }
        }
        let mut j = 0usize;
        while j < count {
            let k = f.param.e + (j as i64) * f.base as i64;
            if k as u64 > limit as u64 {
                break;
            }
            if k == 0 {
                let s = rat(1 - f.param.c);
                if s.is_zero() {
                    if f.power > 0 {
                        vanishes = true;
                    } else {
                        return Err(ProductError::ZeroDenominator { term });
                    }
                } else {
                    scalar *= num_traits::pow::Pow::pow(&s, f.power);
                }
            } else {
                *map.entry((f.param.c, k as usize)).or_insert(0) += f.power as i64;
            }
            j += 1;
        }
    }
    map.retain(|_, m| *m != 0);
    Ok(Expansion {
        factors: map,
        scalar: if vanishes { None } else { Some(scalar) },
    })
}

/// Multiplicity of each factor `(1 - c q^k)`, keyed by `(c, k)`.
type FactorCounts = BTreeMap<(i64, usize), i64>;

/// Sums `coeff(n) q^{exponent(n)} prod factors(n)` for `n = start, start+1, ...`
/// until the prefactor exponent exceeds `order`.
///
/// Consecutive summands usually share most of their factors, so the running
/// product is updated by multiplying in or dividing out only the factors that
/// changed. The exponent must strictly increase with `n`; that is what makes
/// the running product's order shrink monotonically.
pub fn sum_of_products<F>(start: usize, order: usize, mut term: F) -> Result<QSeries, ProductError>
where
    F: FnMut(usize) -> Summand,
{
    let mut total = QSeries::zero(order);
    let mut running: Option<(QSeries, FactorCounts)> = None;
    let mut prev_exp: Option<i64> = None;
    let mut n = start;
    loop {
        let s = term(n);
        if s.exponent < 0 {
            return Err(ProductError::NonintegralExponent { index: n as i64 });
        }
        if let Some(p) = prev_exp {
            if s.exponent <= p {
                return Err(ProductError::NonMonotoneSum { term: n });
            }
        }
        prev_exp = Some(s.exponent);
        if s.exponent as u64 > order as u64 {
            break;
        }
        let limit = order - s.exponent as usize;
        let exp = expand(&s.factors, limit, n)?;
        if let (Some(scalar), false) = (exp.scalar.as_ref(), s.coeff.is_zero()) {
            let (series, applied) = match running.take() {
                Some((mut series, applied)) => {
                    series.truncate_in_place(limit);
                    (series, applied)
                }
                None => (QSeries::one(limit), BTreeMap::new()),
            };
            let mut series = series;
            let keys: Vec<(i64, usize)> = applied
                .keys()
                .chain(exp.factors.keys())
                .filter(|(_, k)| *k <= limit)
                .copied()
                .collect();
            let mut seen = std::collections::BTreeSet::new();
            for key in keys {
                if !seen.insert(key) {
                    continue;
                }
                let have = applied.get(&key).copied().unwrap_or(0);
                let want = exp.factors.get(&key).copied().unwrap_or(0);
                let (c, k) = key;
                for _ in 0..(want - have).max(0) {
                    series.mul_one_minus(c, k);
                }
                for _ in 0..(have - want).max(0) {
                    series.div_one_minus(c, k)?;
                }
            }
            let c = &s.coeff * scalar;
            total.add_shifted_scaled(&series, s.exponent as usize, &c);
            running = Some((series, exp.factors));
        }
        n += 1;
    }
    Ok(total)
}

/// Product of the given Pochhammer factors, truncated at `order`.
pub fn product(factors: &[PochFactor], order: usize) -> Result<QSeries, ProductError> {
    let exp = expand(factors, order, 0)?;
    let Some(scalar) = exp.scalar else {
        return Ok(QSeries::zero(order));
    };
    let mut s = QSeries::constant(scalar, order);
    for (&(c, k), &m) in &exp.factors {
        for _ in 0..m.max(0) {
            s.mul_one_minus(c, k);
        }
        for _ in 0..(-m).max(0) {
            s.div_one_minus(c, k)?;
        }
    }
    Ok(s)
}

/// `(a; q^base)_n = prod_{j<n} (1 - a q^{j*base})`.
pub fn poch_finite(a: MonomialParam, base: usize, n: usize, order: usize) -> Result<QSeries, ProductError> {
    product(&[PochFactor::finite(a, base, n)], order)
}

/// `(a; q^base)_inf`, requiring `a = c q^e` with `e >= 1`.
pub fn poch_infinite(a: MonomialParam, base: usize, order: usize) -> Result<QSeries, ProductError> {
    product(&[PochFactor::infinite(a, base)], order)
}

/// Partial sum of the basic hypergeometric series
/// `3phi2(a1,a2,a3; b1,b2; q^base, z)`, where `(q^base; q^base)_n` is the
/// implicit extra denominator. Terms are kept while `z.e * n <= order`.
pub fn phi32(
    numer: [MonomialParam; 3],
    denom: [MonomialParam; 2],
    z: MonomialParam,
    base: usize,
    order: usize,
) -> Result<QSeries, ProductError> {
    if z.e < 1 {
        return Err(ProductError::NonterminatingSum { exponent: z.e });
    }
    let unit = MonomialParam::q_pow(base as i64);
    sum_of_products(0, order, |n| {
        let mut s = Summand::new(rat(z.c).pow(n as i32), z.e * n as i64);
        for a in numer {
            s = s.with(PochFactor::finite(a, base, n));
        }
        s = s.with(PochFactor::finite(unit, base, n).inv());
        for b in denom {
            s = s.with(PochFactor::finite(b, base, n).inv());
        }
        s
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignRule {
    Plus,
    /// `(-1)^n`
    Alternating,
    /// `(-1)^(n+1)`
    AlternatingShifted,
}

impl SignRule {
    pub fn at(self, n: i64) -> i64 {
        let odd = n.rem_euclid(2) == 1;
        match self {
            SignRule::Plus => 1,
            SignRule::Alternating => {
                if odd {
                    -1
                } else {
                    1
                }
            }
            SignRule::AlternatingShifted => {
                if odd {
                    1
                } else {
                    -1
                }
            }
        }
    }
}

/// Affine term weight `slope * n + intercept`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Weight {
    pub slope: i64,
    pub intercept: i64,
}

impl Weight {
    pub const ONE: Weight = Weight { slope: 0, intercept: 1 };
    pub const LINEAR: Weight = Weight { slope: 1, intercept: 0 };
    pub const ODD: Weight = Weight { slope: 2, intercept: 1 };
    pub const SUCC: Weight = Weight { slope: 1, intercept: 1 };

    pub fn at(self, n: i64) -> i64 {
        self.slope * n + self.intercept
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexRange {
    From(i64),
    /// Every integer index.
    All,
}

/// `scale * sum sign(n) weight(n) q^{(quad n^2 + lin n + constant)/divisor}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Theta1DSpec {
    pub range: IndexRange,
    pub sign: SignRule,
    pub weight: Weight,
    pub quad: i64,
    pub lin: i64,
    pub constant: i64,
    pub divisor: i64,
    pub scale: i64,
}

impl Theta1DSpec {
    /// Exponent `(quad n^2 + lin n + constant) / divisor` over `n >= 0`.
    pub const fn new(quad: i64, lin: i64, constant: i64, divisor: i64) -> Self {
        Theta1DSpec {
            range: IndexRange::From(0),
            sign: SignRule::Plus,
            weight: Weight::ONE,
            quad,
            lin,
            constant,
            divisor,
            scale: 1,
        }
    }

    pub const fn starting_at(mut self, n0: i64) -> Self {
        self.range = IndexRange::From(n0);
        self
    }

    pub const fn bilateral(mut self) -> Self {
        self.range = IndexRange::All;
        self
    }

    pub const fn signed(mut self, sign: SignRule) -> Self {
        self.sign = sign;
        self
    }

    pub const fn weighted(mut self, weight: Weight) -> Self {
        self.weight = weight;
        self
    }

    pub const fn scaled(mut self, scale: i64) -> Self {
        self.scale = scale;
        self
    }

    fn numerator(&self, n: i64) -> i64 {
        self.quad * n * n + self.lin * n + self.constant
    }
}

/// Evaluates a [`Theta1DSpec`] up to `order`.
///
/// The exponent is quadratic with positive leading coefficient (or linear and
/// increasing), so each direction of enumeration stops once the exponent is
/// past `order` and increasing away from the vertex.
pub fn theta1d(spec: &Theta1DSpec, order: usize) -> Result<QSeries, ProductError> {
    if spec.divisor <= 0 {
        return Err(ProductError::InvalidSpec("divisor must be positive".into()));
    }
    let bilateral = spec.range == IndexRange::All;
    if spec.quad < 0 || (spec.quad == 0 && (bilateral || spec.lin <= 0)) {
        return Err(ProductError::InvalidSpec(
            "exponent must grow without bound along the index range".into(),
        ));
    }
    let bound = order as i64 * spec.divisor;
    let mut terms: Vec<(usize, Rational)> = Vec::new();
    let mut visit = |n: i64| -> Result<(), ProductError> {
        let num = spec.numerator(n);
        if num > bound {
            return Ok(());
        }
        if num < 0 || num % spec.divisor != 0 {
            return Err(ProductError::NonintegralExponent { index: n });
        }
        let c = spec.scale * spec.sign.at(n) * spec.weight.at(n);
        terms.push(((num / spec.divisor) as usize, rat(c)));
        Ok(())
    };
    let start = match spec.range {
        IndexRange::From(n0) => n0,
        IndexRange::All => 0,
    };
    let mut n = start;
    while !(spec.numerator(n) > bound && 2 * spec.quad * n + spec.lin > 0) {
        visit(n)?;
        n += 1;
    }
    if bilateral {
        let mut n = -1;
        while !(spec.numerator(n) > bound && 2 * spec.quad * n + spec.lin < 0) {
            visit(n)?;
            n -= 1;
        }
    }
    Ok(QSeries::from_terms(terms, order))
}

/// `scale * sum_{r >= r0, n >= n0} sign(n) q^{(X^2 + (X + a2 n + b2)^2 - offset)/divisor}`
/// with `X = a1 r + b1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Theta2DSpec {
    pub a1: i64,
    pub b1: i64,
    pub a2: i64,
    pub b2: i64,
    pub sign: SignRule,
    pub scale: i64,
    pub offset: i64,
    pub divisor: i64,
    pub r_start: i64,
    pub n_start: i64,
}

impl Theta2DSpec {
    pub const fn new(a1: i64, b1: i64, a2: i64, b2: i64) -> Self {
        Theta2DSpec {
            a1,
            b1,
            a2,
            b2,
            sign: SignRule::Plus,
            scale: 1,
            offset: 0,
            divisor: 1,
            r_start: 0,
            n_start: 0,
        }
    }

    pub const fn signed(mut self, sign: SignRule) -> Self {
        self.sign = sign;
        self
    }

    pub const fn scaled(mut self, scale: i64) -> Self {
        self.scale = scale;
        self
    }

    /// Exponent becomes `(raw - offset) / divisor`.
    pub const fn reduced(mut self, offset: i64, divisor: i64) -> Self {
        self.offset = offset;
        self.divisor = divisor;
        self
    }

    pub const fn starting_at(mut self, r0: i64, n0: i64) -> Self {
        self.r_start = r0;
        self.n_start = n0;
        self
    }
}

/// Evaluates a [`Theta2DSpec`] up to `order`.
///
/// With `a1, a2 > 0` both `X = a1 r + b1` and `Y = X + a2 n + b2` increase
/// with their index, so once `X >= 0` and `X^2` alone exceeds the bound no
/// larger `r` contributes, and for fixed `r` once `Y >= 0` and the exponent
/// exceeds the bound no larger `n` does.
pub fn theta2d(spec: &Theta2DSpec, order: usize) -> Result<QSeries, ProductError> {
    if spec.a1 <= 0 || spec.a2 <= 0 || spec.divisor <= 0 {
        return Err(ProductError::InvalidSpec(
            "theta2d needs positive index slopes and divisor".into(),
        ));
    }
    let bound = order as i64 * spec.divisor + spec.offset;
    let mut terms: Vec<(usize, Rational)> = Vec::new();
    let mut r = spec.r_start;
    loop {
        let x = spec.a1 * r + spec.b1;
        if x >= 0 && x * x > bound {
            break;
        }
        let mut n = spec.n_start;
        loop {
            let y = x + spec.a2 * n + spec.b2;
            let raw = x * x + y * y;
            if raw > bound {
                if y >= 0 {
                    break;
                }
            } else {
                let num = raw - spec.offset;
                if num < 0 || num % spec.divisor != 0 {
                    return Err(ProductError::NonintegralExponent { index: n });
                }
                let c = spec.scale * spec.sign.at(n);
                terms.push(((num / spec.divisor) as usize, rat(c)));
            }
            n += 1;
        }
        r += 1;
    }
    Ok(QSeries::from_terms(terms, order))
}

/// Coefficients of the form `nn n^2 + nr n r + rr r^2 + n_lin n + r_lin r + c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadForm {
    pub nn: i64,
    pub nr: i64,
    pub rr: i64,
    pub n_lin: i64,
    pub r_lin: i64,
    pub c: i64,
}

impl QuadForm {
    pub const fn new(nn: i64, nr: i64, rr: i64, n_lin: i64, r_lin: i64, c: i64) -> Self {
        QuadForm {
            nn,
            nr,
            rr,
            n_lin,
            r_lin,
            c,
        }
    }

    pub fn at(&self, n: i64, r: i64) -> i64 {
        self.nn * n * n + self.nr * n * r + self.rr * r * r + self.n_lin * n + self.r_lin * r + self.c
    }
}

/// `scale * sum_{n >= n0, r >= r0} q^{form(n, r)}` for a form with nonnegative
/// coefficients, which is then nondecreasing in both indices on the range.
pub fn quad_double_sum(form: &QuadForm, n0: i64, r0: i64, scale: i64, order: usize) -> Result<QSeries, ProductError> {
    let QuadForm { nn, nr, rr, n_lin, r_lin, .. } = *form;
    if n0 < 0 || r0 < 0 || [nn, nr, rr, n_lin, r_lin].iter().any(|&v| v < 0) {
        return Err(ProductError::InvalidSpec(
            "double sum needs nonnegative indices and coefficients".into(),
        ));
    }
    if nn + nr + n_lin == 0 || rr + nr + r_lin == 0 {
        return Err(ProductError::InvalidSpec("double sum exponent must grow in both indices".into()));
    }
    let bound = order as i64;
    let mut terms = Vec::new();
    let mut r = r0;
    while form.at(n0, r) <= bound {
        let mut n = n0;
        loop {
            let e = form.at(n, r);
            if e > bound {
                break;
            }
            if e < 0 {
                return Err(ProductError::NonintegralExponent { index: n });
            }
            terms.push((e as usize, rat(scale)));
            n += 1;
        }
        r += 1;
    }
    Ok(QSeries::from_terms(terms, order))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &QSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c.numer()).unwrap())
            .collect()
    }

    const Q: MonomialParam = MonomialParam::q_pow(1);

    #[test]
    fn finite_pochhammer_examples() {
        assert_eq!(ints(&poch_finite(Q, 1, 1, 4).unwrap()), vec![1, -1, 0, 0, 0]);
        assert_eq!(ints(&poch_finite(Q, 1, 0, 4).unwrap()), vec![1, 0, 0, 0, 0]);
        assert_eq!(
            ints(&poch_finite(MonomialParam::neg_q_pow(2), 2, 2, 7).unwrap()),
            vec![1, 0, 1, 0, 1, 0, 1, 0]
        );
        // a vanishing factor kills the product
        assert!(poch_finite(MonomialParam::ONE, 1, 3, 5).unwrap().is_zero());
        // (-1; q)_2 = 2(1 + q)
        assert_eq!(
            ints(&poch_finite(MonomialParam::neg_q_pow(0), 1, 2, 3).unwrap()),
            vec![2, 2, 0, 0]
        );
    }

    #[test]
    fn pochhammer_errors() {
        assert_eq!(
            poch_finite(MonomialParam::q_pow(-2), 1, 2, 5),
            Err(ProductError::NegativeExponentFactor { c: 1, exponent: -2 })
        );
        // q^{-1} with two factors reaches (1 - q^{-1})
        assert!(poch_finite(MonomialParam::q_pow(-1), 1, 1, 5).is_err());
        assert_eq!(
            poch_infinite(MonomialParam::q_pow(0), 1, 5),
            Err(ProductError::NonconvergentProduct { exponent: 0 })
        );
    }

    #[test]
    fn euler_function_low_order() {
        let e = poch_infinite(Q, 1, 12).unwrap();
        let mut want = vec![0i64; 13];
        for (k, v) in [(0, 1), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1)] {
            want[k] = v;
        }
        assert_eq!(ints(&e), want);
    }

    #[test]
    fn phi32_below_first_term_is_one() {
        let p = phi32([Q, Q, Q], [Q.shift(1), Q.shift(1)], MonomialParam::q_pow(5), 1, 4).unwrap();
        assert_eq!(p, QSeries::one(4));
    }

    #[test]
    fn phi32_with_unit_numerator_terminates() {
        let p = phi32(
            [MonomialParam::ONE, Q, Q],
            [Q.shift(1), Q.shift(2)],
            Q,
            1,
            30,
        )
        .unwrap();
        assert_eq!(p, QSeries::one(30));
    }

    #[test]
    fn phi32_rejects_nonpositive_argument() {
        assert_eq!(
            phi32([Q, Q, Q], [Q, Q], MonomialParam::neg_q_pow(0), 1, 4),
            Err(ProductError::NonterminatingSum { exponent: 0 })
        );
        assert_eq!(
            phi32([Q, Q, Q], [MonomialParam::ONE, Q], Q, 1, 4),
            Err(ProductError::ZeroDenominator { term: 1 })
        );
    }

    #[test]
    fn theta1d_small_cases() {
        // 1 + q + q^3 + q^6 + q^10
        let psi = theta1d(&Theta1DSpec::new(1, 1, 0, 2), 10).unwrap();
        assert_eq!(ints(&psi), vec![1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1]);
        let bad = Theta1DSpec::new(1, 0, 0, 2).starting_at(1);
        assert_eq!(theta1d(&bad, 10), Err(ProductError::NonintegralExponent { index: 1 }));
        assert!(theta1d(&Theta1DSpec::new(0, -1, 0, 1), 4).is_err());
    }

    #[test]
    fn theta2d_small_cases() {
        let spec = Theta2DSpec::new(2, 1, 2, 0);
        let s = theta2d(&spec, 30).unwrap();
        // smallest term is (r, n) = (0, 0): 1 + 1
        assert_eq!(s.coeff(2).unwrap(), &rat(1));
        assert!(theta2d(&Theta2DSpec::new(2, 40, 2, 0), 30).unwrap().is_zero());
        let c_side = Theta2DSpec::new(2, 3, 2, 0).signed(SignRule::AlternatingShifted);
        assert!(theta2d(&c_side, 40).unwrap().coeff(26).unwrap().is_zero());
        assert!(theta2d(&Theta2DSpec::new(0, 1, 1, 0), 5).is_err());
    }

    #[test]
    fn quad_sum_counts_lattice_points() {
        // n^2 + r^2 over n, r >= 0: coefficient of q^25 counts (0,5),(5,0),(3,4),(4,3)
        let s = quad_double_sum(&QuadForm::new(1, 0, 1, 0, 0, 0), 0, 0, 1, 30).unwrap();
        assert_eq!(s.coeff(25).unwrap(), &rat(4));
        assert!(quad_double_sum(&QuadForm::new(1, -1, 1, 0, 0, 0), 0, 0, 1, 30).is_err());
    }
}
