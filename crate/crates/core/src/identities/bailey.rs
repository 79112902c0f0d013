//! Bailey pairs and the two-sided lemma that turns a pair relative to `a^2`
//! into a double-sum identity.

use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::products::{product, MonomialParam, PochFactor, ProductError};
use crate::report::VerificationReport;
use crate::series::{rat, QSeries, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BaileyError {
    #[error("pair {pair} is relative to {relative}, but a^2 = {a_squared}")]
    MismatchedRelative {
        pair: String,
        relative: MonomialParam,
        a_squared: MonomialParam,
    },
    #[error(transparent)]
    Product(#[from] ProductError),
}

/// `(n, order) -> term` for one side of a pair.
pub type SequenceFn = Arc<dyn Fn(usize, usize) -> Result<QSeries, ProductError> + Send + Sync>;

/// A pair `(alpha_n, beta_n)` relative to `a`, each term built on demand.
#[derive(Clone)]
pub struct BaileyPair {
    pub name: String,
    pub relative_to: MonomialParam,
    alpha: SequenceFn,
    beta: SequenceFn,
}

impl fmt::Debug for BaileyPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BaileyPair")
            .field("name", &self.name)
            .field("relative_to", &self.relative_to)
            .finish_non_exhaustive()
    }
}

impl BaileyPair {
    pub fn new(name: impl Into<String>, relative_to: MonomialParam, alpha: SequenceFn, beta: SequenceFn) -> Self {
        BaileyPair {
            name: name.into(),
            relative_to,
            alpha,
            beta,
        }
    }

    pub fn alpha(&self, n: usize, order: usize) -> Result<QSeries, ProductError> {
        (self.alpha)(n, order)
    }

    pub fn beta(&self, n: usize, order: usize) -> Result<QSeries, ProductError> {
        (self.beta)(n, order)
    }
}

fn q(e: usize) -> MonomialParam {
    MonomialParam::q_pow(e as i64)
}

/// Pair relative to `q^2`:
/// `alpha_n = q^{n^2+n} (1 - q^{2n+2}) / (1 - q^2)`,
/// `beta_n = 1 / ((q;q)_n (q^2;q)_n)`.
pub fn bp_d() -> BaileyPair {
    BaileyPair::new(
        "BP-D",
        q(2),
        Arc::new(|n, order| {
            // the quotient is the polynomial 1 + q^2 + ... + q^{2n}
            let base = n * n + n;
            Ok(QSeries::from_terms((0..=n).map(|j| (base + 2 * j, rat(1))), order))
        }),
        Arc::new(|n, order| {
            product(
                &[
                    PochFactor::finite(q(1), 1, n).inv(),
                    PochFactor::finite(q(2), 1, n).inv(),
                ],
                order,
            )
        }),
    )
}

/// Pair relative to `1`: `alpha_0 = 1`,
/// `alpha_n = q^{n^2} (q^n - q^{-n}) = q^{n^2+n} - q^{n^2-n}` for `n >= 1`,
/// `beta_n = q^n / (q;q)_n^2`.
pub fn bp_b() -> BaileyPair {
    BaileyPair::new(
        "BP-B",
        MonomialParam::ONE,
        Arc::new(|n, order| {
            if n == 0 {
                return Ok(QSeries::one(order));
            }
            Ok(QSeries::from_terms(
                [(n * n + n, rat(1)), (n * n - n, rat(-1))],
                order,
            ))
        }),
        Arc::new(|n, order| Ok(product(&[PochFactor::finite(q(1), 1, n).pow(-2)], order)?.shift(n))),
    )
}

/// Looks a pair up by name (`BP-D` or `BP-B`, case-insensitive).
pub fn pair_by_name(name: &str) -> Option<BaileyPair> {
    match name.trim().to_ascii_uppercase().as_str() {
        "BP-D" | "D" => Some(bp_d()),
        "BP-B" | "B" => Some(bp_b()),
        _ => None,
    }
}

/// The parameter at which the lemma is instantiated for each named pair.
pub fn lemma_parameter(pair: &BaileyPair) -> Option<MonomialParam> {
    match pair.name.as_str() {
        "BP-D" => Some(MonomialParam::neg_q_pow(1)),
        "BP-B" => Some(MonomialParam::new(-1, 0)),
        _ => None,
    }
}

/// Multiplies by `(1 - c q^k)`, treating `k == 0` as the scalar `1 - c`.
fn mul_factor(s: &mut QSeries, c: i64, k: i64) {
    if k == 0 {
        *s = s.scale(&rat(1 - c));
    } else if k as usize <= s.order() {
        s.mul_one_minus(c, k as usize);
    }
}

fn div_factor(s: &mut QSeries, c: i64, k: i64, term: usize) -> Result<(), ProductError> {
    if k == 0 {
        if c == 1 {
            return Err(ProductError::ZeroDenominator { term });
        }
        *s = s.scale(&(Rational::one() / rat(1 - c)));
        Ok(())
    } else if k as usize <= s.order() {
        Ok(s.div_one_minus(c, k as usize)?)
    } else {
        Ok(())
    }
}

/// `sum_{r=0}^{n} alpha_r / ((q;q)_{n-r} (aq;q)_{n+r})` with `a` the pair's
/// relative parameter.
pub fn relation_sum(pair: &BaileyPair, n: usize, order: usize) -> Result<QSeries, ProductError> {
    let a = pair.relative_to;
    if a.e < 0 {
        return Err(ProductError::NegativeExponentFactor { c: a.c, exponent: a.e });
    }
    // weight_r = 1 / ((q)_{n-r} (aq)_{n+r}), updated one factor per step
    let mut weight = product(
        &[
            PochFactor::finite(q(1), 1, n).inv(),
            PochFactor::finite(a.shift(1), 1, n).inv(),
        ],
        order,
    )?;
    let mut total = QSeries::zero(order);
    for r in 0..=n {
        if r > 0 {
            mul_factor(&mut weight, 1, (n - r + 1) as i64);
            div_factor(&mut weight, a.c, a.e + (n + r) as i64, r)?;
        }
        let alpha = pair.alpha(r, order)?;
        if !alpha.is_zero() {
            total.add_assign_ref(&(&alpha * &weight));
        }
    }
    Ok(total)
}

/// Checks the defining relation for every `n <= n_max` up to `order`.
pub fn bailey_check(pair: &BaileyPair, n_max: usize, order: usize) -> VerificationReport {
    let started = Instant::now();
    let parts: Vec<VerificationReport> = (0..=n_max)
        .map(|n| {
            VerificationReport::run(format!("n={n}"), order, || {
                Ok::<_, ProductError>((relation_sum(pair, n, order)?, pair.beta(n, order)?))
            })
        })
        .collect();
    let mut report = VerificationReport::combine(format!("bailey:{}", pair.name), order, &parts);
    report.elapsed = started.elapsed();
    report
}

/// Both sides of the lemma for a pair relative to `a^2`:
///
/// `(q)_inf (-aq)_inf^2 sum_n q^n (a)_n (a^2 q; q^2)_n / (-aq)_n beta_n`
///
/// and
///
/// `(1 - a) sum_{r,n} (1 + a q^{r+2n+1}) / (1 - a q^r) a^{2n} q^{2n^2+2nr+n+r} alpha_r`.
pub fn lemma_sides(pair: &BaileyPair, a: MonomialParam, order: usize) -> Result<(QSeries, QSeries), BaileyError> {
    let a_squared = a.square();
    if a_squared != pair.relative_to {
        return Err(BaileyError::MismatchedRelative {
            pair: pair.name.clone(),
            relative: pair.relative_to,
            a_squared,
        });
    }
    if a.e < 0 {
        return Err(ProductError::NegativeExponentFactor { c: a.c, exponent: a.e }.into());
    }
    Ok((lemma_lhs(pair, a, order)?, lemma_rhs(pair, a, order)?))
}

fn lemma_lhs(pair: &BaileyPair, a: MonomialParam, order: usize) -> Result<QSeries, ProductError> {
    let neg_aq = MonomialParam::new(-a.c, a.e + 1);
    let a2q = a.square().shift(1);
    let mut sum = QSeries::zero(order);
    // running (a)_n (a^2 q; q^2)_n / (-aq)_n
    let mut prefix = QSeries::one(order);
    for n in 0..=order {
        if n > 0 {
            let m = (n - 1) as i64;
            mul_factor(&mut prefix, a.c, a.e + m);
            mul_factor(&mut prefix, a2q.c, a2q.e + 2 * m);
            div_factor(&mut prefix, neg_aq.c, neg_aq.e + m, n)?;
        }
        if prefix.is_zero() {
            break;
        }
        let limit = order - n;
        let term = &prefix.truncate(limit)? * &pair.beta(n, limit)?;
        sum.add_shifted_scaled(&term, n, &Rational::one());
    }
    let outer = product(
        &[
            PochFactor::infinite(q(1), 1),
            PochFactor::infinite(neg_aq, 1).pow(2),
        ],
        order,
    )?;
    Ok(&outer * &sum)
}

fn lemma_rhs(pair: &BaileyPair, a: MonomialParam, order: usize) -> Result<QSeries, ProductError> {
    let (c, e) = (a.c, a.e);
    let mut total = QSeries::zero(order);
    // every term carries at least q^r, so r <= order covers all of them
    for r in 0..=order {
        let alpha = pair.alpha(r, order)?;
        match alpha.coeffs().iter().position(|x| !x.is_zero()) {
            Some(lowest) if lowest + r <= order => {}
            _ => continue,
        }
        let mut inner_terms: Vec<(usize, Rational)> = Vec::new();
        for n in 0usize.. {
            let base = (2 * n * n + 2 * n * r + n + r) as i64 + 2 * e * n as i64;
            if base as usize > order {
                break;
            }
            let sign = rat(c).pow(2 * n as i32);
            inner_terms.push((base as usize, sign.clone()));
            let up = base + e + (r + 2 * n + 1) as i64;
            if up as usize <= order {
                inner_terms.push((up as usize, sign * rat(c)));
            }
        }
        let inner = QSeries::from_terms(inner_terms, order);
        let mut term = &inner * &alpha;
        div_factor(&mut term, c, e + r as i64, r)?;
        total.add_assign_ref(&term);
    }
    mul_factor(&mut total, c, e);
    Ok(total)
}

/// Compares both lemma sides for `pair` at parameter `a`.
pub fn verify_lemma(pair: &BaileyPair, a: MonomialParam, order: usize) -> VerificationReport {
    VerificationReport::run(format!("lemma:{} a={a}", pair.name), order, || lemma_sides(pair, a, order))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_at_zero_is_one() {
        let p = bp_d();
        let s = relation_sum(&p, 0, 10).unwrap();
        assert!(s.equal_up_to(&QSeries::one(10), 10).unwrap().is_equal());
    }

    #[test]
    fn bp_d_first_terms() {
        assert!(bailey_check(&bp_d(), 3, 40).is_equal());
        assert!(bailey_check(&bp_b(), 5, 40).is_equal());
    }

    #[test]
    fn mismatched_relative_is_rejected() {
        let err = lemma_sides(&bp_b(), MonomialParam::neg_q_pow(1), 10).unwrap_err();
        assert!(matches!(err, BaileyError::MismatchedRelative { .. }));
    }

    #[test]
    fn lemma_constant_terms() {
        let (l, r) = lemma_sides(&bp_b(), MonomialParam::new(-1, 0), 0).unwrap();
        assert_eq!(*l.coeff(0).unwrap(), rat(1));
        assert_eq!(*r.coeff(0).unwrap(), rat(1));
    }

    #[test]
    fn lemma_small_orders() {
        for pair in [bp_d(), bp_b()] {
            let a = lemma_parameter(&pair).unwrap();
            assert!(verify_lemma(&pair, a, 30).is_equal(), "{}", pair.name);
        }
    }

    #[test]
    fn lemma_holds_for_the_other_square_root() {
        assert!(verify_lemma(&bp_d(), MonomialParam::q_pow(1), 60).is_equal());
    }

    #[test]
    fn lemma_at_a_equal_one_has_zero_denominator() {
        let err = lemma_sides(&bp_b(), MonomialParam::ONE, 5).unwrap_err();
        assert!(matches!(err, BaileyError::Product(ProductError::ZeroDenominator { .. })));
    }
}
