//! Classical identities used along the way, each at the instantiation where
//! it is applied.

use std::fmt;

use crate::enumerate::legendre_rule;
use crate::products::{
    phi32, product, sum_of_products, theta1d, MonomialParam, PochFactor, ProductError, SignRule, Summand,
    Theta1DSpec, Weight,
};
use crate::report::VerificationReport;
use crate::series::{rat, QSeries};

use super::theorems::psi;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassicalId {
    /// `(q;q)_inf = sum_{n in Z} (-1)^n q^{(3n^2-n)/2}`.
    PentagonalBilateral,
    /// The same product with the bilateral sum split into `n = 0`, `n >= 1`
    /// and `n <= -1`.
    PentagonalUnilateral,
    /// Signed distinct-part partition counts against the three-way rule.
    Legendre,
    /// `sum (-1)^n (2n+1) q^{n(n+1)/2} = (q;q)_inf^3`.
    Jacobi,
    /// `psi(q) = (q^2;q^2)_inf / (q;q^2)_inf`.
    GaussQuotient,
    /// `psi(q) = (-q;q)_inf^2 (q;q)_inf`.
    GaussProduct,
    /// `(-q;q)_inf = 1 / (q;q^2)_inf`.
    EulerReciprocal,
    /// q-binomial theorem on base `q^2` with `a = q`, `z = q`.
    QBinomial,
    /// Fine's transformation at `(a, t) = (q^{-1}, q)`.
    FineUnsigned,
    /// Fine's transformation at `(a, t) = (-q^{-1}, q)`.
    FineSigned,
    /// Andrews–Warnaar at `z = -1`.
    AndrewsWarnaarMinus,
    /// Andrews–Warnaar at `z = 1`.
    AndrewsWarnaarPlus,
    /// Three-term `3phi2` transformation on base `q^2` at
    /// `a = -1, b = q, c = -q, d = e = q^2`.
    GasperRahman10,
    /// Two-term-prefactor `3phi2` transformation on base `q^2` at
    /// `a = -q, b = -1, c = q, d = e = -q^2`.
    GasperRahman9,
    /// Pochhammer splitting laws on a fixed set of monomials.
    BasicFacts,
}

impl ClassicalId {
    pub const ALL: [ClassicalId; 15] = [
        ClassicalId::PentagonalBilateral,
        ClassicalId::PentagonalUnilateral,
        ClassicalId::Legendre,
        ClassicalId::Jacobi,
        ClassicalId::GaussQuotient,
        ClassicalId::GaussProduct,
        ClassicalId::EulerReciprocal,
        ClassicalId::QBinomial,
        ClassicalId::FineUnsigned,
        ClassicalId::FineSigned,
        ClassicalId::AndrewsWarnaarMinus,
        ClassicalId::AndrewsWarnaarPlus,
        ClassicalId::GasperRahman10,
        ClassicalId::GasperRahman9,
        ClassicalId::BasicFacts,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassicalId::PentagonalBilateral => "pentagonal-bilateral",
            ClassicalId::PentagonalUnilateral => "pentagonal-unilateral",
            ClassicalId::Legendre => "legendre",
            ClassicalId::Jacobi => "jacobi",
            ClassicalId::GaussQuotient => "gauss-quotient",
            ClassicalId::GaussProduct => "gauss-product",
            ClassicalId::EulerReciprocal => "euler-reciprocal",
            ClassicalId::QBinomial => "q-binomial",
            ClassicalId::FineUnsigned => "fine-a",
            ClassicalId::FineSigned => "fine-b",
            ClassicalId::AndrewsWarnaarMinus => "aw-minus",
            ClassicalId::AndrewsWarnaarPlus => "aw-plus",
            ClassicalId::GasperRahman10 => "gr-iii10",
            ClassicalId::GasperRahman9 => "gr-iii9",
            ClassicalId::BasicFacts => "basic-facts",
        }
    }

    pub fn parse(s: &str) -> Option<ClassicalId> {
        let t = s.trim().to_ascii_lowercase();
        ClassicalId::ALL.into_iter().find(|id| id.name() == t)
    }
}

impl fmt::Display for ClassicalId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn q(e: i64) -> MonomialParam {
    MonomialParam::q_pow(e)
}

fn nq(e: i64) -> MonomialParam {
    MonomialParam::neg_q_pow(e)
}

fn inf(a: MonomialParam, base: usize) -> PochFactor {
    PochFactor::infinite(a, base)
}

fn fin(a: MonomialParam, base: usize, n: usize) -> PochFactor {
    PochFactor::finite(a, base, n)
}

/// Signed count of partitions into distinct parts (even minus odd number of
/// parts), by a knapsack over the part sizes.
pub fn distinct_parts_signed_counts(order: usize) -> Vec<i64> {
    let mut table = vec![0i64; order + 1];
    table[0] = 1;
    for part in 1..=order {
        for n in (part..=order).rev() {
            table[n] -= table[n - part];
        }
    }
    table
}

/// Both sides of Fine's transformation
/// `sum (a q^{n+1}; q)_n t^n / (q;q)_n = (t;q)_inf^{-1} sum (t;q)_n / (q;q)_n (-at)^n q^{(3n^2+n)/2}`.
pub fn fine_sides(a: MonomialParam, t: MonomialParam, order: usize) -> Result<(QSeries, QSeries), ProductError> {
    if t.e < 1 {
        return Err(ProductError::NonterminatingSum { exponent: t.e });
    }
    let lhs = sum_of_products(0, order, |n| {
        Summand::new(rat(t.c).pow(n as i32), t.e * n as i64)
            .with(fin(a.shift(n as i64 + 1), 1, n))
            .with(fin(q(1), 1, n).inv())
    })?;
    let at = a.mul(t);
    let n_i = |n: usize| n as i64;
    let sum = sum_of_products(0, order, |n| {
        Summand::new(rat(-at.c).pow(n as i32), at.e * n_i(n) + (3 * n_i(n) * n_i(n) + n_i(n)) / 2)
            .with(fin(t, 1, n))
            .with(fin(q(1), 1, n).inv())
    })?;
    let rhs = &product(&[inf(t, 1).inv()], order)? * &sum;
    Ok((lhs, rhs))
}

/// Both sides of the Andrews–Warnaar identity for `z = +-1`:
/// `sum (-zq;q^2)_n (-q/z;q^2)_n q^n / (-q;q)_{2n+1}` against
/// `sum (1 - z^{2n+1})/(1 - z) z^{-n} q^{n(n+1)}`, where the weight is read as
/// `sum_{j=-n}^{n} z^j` so that `z = 1` needs no limit.
pub fn andrews_warnaar_sides(z: i64, order: usize) -> Result<(QSeries, QSeries), ProductError> {
    if z != 1 && z != -1 {
        return Err(ProductError::InvalidSpec("Andrews-Warnaar sides need z = 1 or z = -1".into()));
    }
    let lhs = sum_of_products(0, order, |n| {
        Summand::new(rat(1), n as i64)
            .with(fin(MonomialParam::new(-z, 1), 2, n))
            .with(fin(MonomialParam::new(-z, 1), 2, n))
            .with(fin(nq(1), 1, 2 * n + 1).inv())
    })?;
    let weight = |n: i64| -> i64 { (-n..=n).map(|j| if j.rem_euclid(2) == 1 { z } else { 1 }).sum() };
    let rhs = QSeries::from_terms(
        (0..)
            .map(|n: i64| (n, n * n + n))
            .take_while(|&(_, e)| e as usize <= order)
            .map(|(n, e)| (e as usize, rat(weight(n)))),
        order,
    );
    Ok((lhs, rhs))
}

/// Parameters of a `3phi2` on base `q^base`.
#[derive(Debug, Clone, Copy)]
pub struct Phi32Params {
    pub a: MonomialParam,
    pub b: MonomialParam,
    pub c: MonomialParam,
    pub d: MonomialParam,
    pub e: MonomialParam,
    pub base: usize,
}

fn quotient(x: MonomialParam, y: MonomialParam) -> Result<MonomialParam, ProductError> {
    x.checked_div(y)
        .ok_or_else(|| ProductError::InvalidSpec(format!("{x} / {y} is not a signed monomial")))
}

impl Phi32Params {
    /// `de / abc`, the argument both transformations start from.
    pub fn argument(&self) -> Result<MonomialParam, ProductError> {
        quotient(self.d.mul(self.e), self.a.mul(self.b).mul(self.c))
    }

    pub fn lhs(&self, order: usize) -> Result<QSeries, ProductError> {
        phi32([self.a, self.b, self.c], [self.d, self.e], self.argument()?, self.base, order)
    }
}

/// `3phi2(a,b,c;d,e;de/abc) =
/// (b, de/ab, de/bc)_inf / (d, e, de/abc)_inf * 3phi2(d/b, e/b, de/abc; de/ab, de/bc; b)`.
pub fn gasper_rahman_10_sides(p: &Phi32Params, order: usize) -> Result<(QSeries, QSeries), ProductError> {
    let de = p.d.mul(p.e);
    let de_ab = quotient(de, p.a.mul(p.b))?;
    let de_bc = quotient(de, p.b.mul(p.c))?;
    let arg = p.argument()?;
    let pre = product(
        &[
            inf(p.b, p.base),
            inf(de_ab, p.base),
            inf(de_bc, p.base),
            inf(p.d, p.base).inv(),
            inf(p.e, p.base).inv(),
            inf(arg, p.base).inv(),
        ],
        order,
    )?;
    let phi = phi32(
        [quotient(p.d, p.b)?, quotient(p.e, p.b)?, arg],
        [de_ab, de_bc],
        p.b,
        p.base,
        order,
    )?;
    Ok((p.lhs(order)?, &pre * &phi))
}

/// `3phi2(a,b,c;d,e;de/abc) =
/// (e/a, de/bc)_inf / (e, de/abc)_inf * 3phi2(a, d/b, d/c; d, de/bc; e/a)`.
pub fn gasper_rahman_9_sides(p: &Phi32Params, order: usize) -> Result<(QSeries, QSeries), ProductError> {
    let de_bc = quotient(p.d.mul(p.e), p.b.mul(p.c))?;
    let e_a = quotient(p.e, p.a)?;
    let arg = p.argument()?;
    let pre = product(
        &[
            inf(e_a, p.base),
            inf(de_bc, p.base),
            inf(p.e, p.base).inv(),
            inf(arg, p.base).inv(),
        ],
        order,
    )?;
    let phi = phi32(
        [p.a, quotient(p.d, p.b)?, quotient(p.d, p.c)?],
        [p.d, de_bc],
        e_a,
        p.base,
        order,
    )?;
    Ok((p.lhs(order)?, &pre * &phi))
}

/// Instantiation used for the `A'` identity.
pub const GR10_PARAMS: Phi32Params = Phi32Params {
    a: MonomialParam::new(-1, 0),
    b: MonomialParam::q_pow(1),
    c: MonomialParam::neg_q_pow(1),
    d: MonomialParam::q_pow(2),
    e: MonomialParam::q_pow(2),
    base: 2,
};

/// Instantiation used for the `A''` identity.
pub const GR9_PARAMS: Phi32Params = Phi32Params {
    a: MonomialParam::neg_q_pow(1),
    b: MonomialParam::new(-1, 0),
    c: MonomialParam::q_pow(1),
    d: MonomialParam::neg_q_pow(2),
    e: MonomialParam::neg_q_pow(2),
    base: 2,
};

/// `sum (a;q^base)_n / (q^base;q^base)_n z^n = (az;q^base)_inf / (z;q^base)_inf`.
pub fn q_binomial_sides(
    a: MonomialParam,
    z: MonomialParam,
    base: usize,
    order: usize,
) -> Result<(QSeries, QSeries), ProductError> {
    if z.e < 1 {
        return Err(ProductError::NonterminatingSum { exponent: z.e });
    }
    let unit = q(base as i64);
    let lhs = sum_of_products(0, order, |n| {
        Summand::new(rat(z.c).pow(n as i32), z.e * n as i64)
            .with(fin(a, base, n))
            .with(fin(unit, base, n).inv())
    })?;
    let rhs = product(&[inf(a.mul(z), base), inf(z, base).inv()], order)?;
    Ok((lhs, rhs))
}

fn basic_facts(order: usize) -> Result<(QSeries, QSeries), ProductError> {
    // Each law contributes lhs - rhs; all differences must vanish.
    let mut diff = QSeries::zero(order);
    let params = [q(1), nq(1), q(2), nq(3), MonomialParam::new(2, 1)];
    for a in params {
        for (n, m) in [(0, 3), (2, 5), (4, 4)] {
            let whole = product(&[fin(a, 1, n + m)], order)?;
            let split = product(&[fin(a, 1, m), fin(a.shift(m as i64), 1, n)], order)?;
            diff.add_assign_ref(&(&whole - &split));
        }
        for n in [0, 1, 6] {
            let whole = product(&[inf(a, 1)], order)?;
            let split = product(&[fin(a, 1, n), inf(a.shift(n as i64), 1)], order)?;
            diff.add_assign_ref(&(&whole - &split));
        }
        let whole = product(&[inf(a, 1)], order)?;
        let split = product(&[inf(a, 2), inf(a.shift(1), 2)], order)?;
        diff.add_assign_ref(&(&whole - &split));
    }
    Ok((diff, QSeries::zero(order)))
}

/// Both sides of a classical identity at its instantiation.
pub fn classical_sides(id: ClassicalId, order: usize) -> Result<(QSeries, QSeries), ProductError> {
    let euler = || product(&[inf(q(1), 1)], order);
    match id {
        ClassicalId::PentagonalBilateral => Ok((
            euler()?,
            theta1d(
                &Theta1DSpec::new(3, -1, 0, 2).bilateral().signed(SignRule::Alternating),
                order,
            )?,
        )),
        ClassicalId::PentagonalUnilateral => {
            let plus = theta1d(
                &Theta1DSpec::new(3, 1, 0, 2).starting_at(1).signed(SignRule::Alternating),
                order,
            )?;
            let minus = theta1d(
                &Theta1DSpec::new(3, -1, 0, 2).starting_at(1).signed(SignRule::Alternating),
                order,
            )?;
            Ok((euler()?, &(&QSeries::one(order) + &plus) + &minus))
        }
        ClassicalId::Legendre => {
            let counts = distinct_parts_signed_counts(order);
            let lhs = QSeries::from_terms(counts.into_iter().enumerate().map(|(n, c)| (n, rat(c))), order);
            let rhs = QSeries::from_terms((0..=order).map(|n| (n, rat(legendre_rule(n as u64)))), order);
            Ok((lhs, rhs))
        }
        ClassicalId::Jacobi => Ok((
            theta1d(
                &Theta1DSpec::new(1, 1, 0, 2)
                    .signed(SignRule::Alternating)
                    .weighted(Weight::ODD),
                order,
            )?,
            product(&[inf(q(1), 1).pow(3)], order)?,
        )),
        ClassicalId::GaussQuotient => Ok((psi(order), product(&[inf(q(2), 2), inf(q(1), 2).inv()], order)?)),
        ClassicalId::GaussProduct => Ok((psi(order), product(&[inf(nq(1), 1).pow(2), inf(q(1), 1)], order)?)),
        ClassicalId::EulerReciprocal => Ok((
            product(&[inf(nq(1), 1)], order)?,
            product(&[inf(q(1), 2)], order)?.invert()?,
        )),
        ClassicalId::QBinomial => q_binomial_sides(q(1), q(1), 2, order),
        ClassicalId::FineUnsigned => fine_sides(q(-1), q(1), order),
        ClassicalId::FineSigned => fine_sides(nq(-1), q(1), order),
        ClassicalId::AndrewsWarnaarMinus => andrews_warnaar_sides(-1, order),
        ClassicalId::AndrewsWarnaarPlus => andrews_warnaar_sides(1, order),
        ClassicalId::GasperRahman10 => gasper_rahman_10_sides(&GR10_PARAMS, order),
        ClassicalId::GasperRahman9 => gasper_rahman_9_sides(&GR9_PARAMS, order),
        ClassicalId::BasicFacts => basic_facts(order),
    }
}

pub fn verify_classical(id: ClassicalId, order: usize) -> VerificationReport {
    VerificationReport::run(format!("classical:{id}"), order, || classical_sides(id, order))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_hold_at_small_order() {
        for id in ClassicalId::ALL {
            let r = verify_classical(id, 40);
            assert!(r.is_equal(), "{r}");
        }
    }

    #[test]
    fn names_parse() {
        for id in ClassicalId::ALL {
            assert_eq!(ClassicalId::parse(id.name()), Some(id));
        }
    }

    #[test]
    fn knapsack_matches_rule() {
        let t = distinct_parts_signed_counts(50);
        for (n, v) in t.iter().enumerate() {
            assert_eq!(*v, legendre_rule(n as u64));
        }
    }

    #[test]
    fn q_binomial_with_extra_q_in_numerator_fails() {
        let (a, z, base, o) = (q(1), q(1), 2, 30);
        let (lhs, _) = q_binomial_sides(a, z, base, o).unwrap();
        let shifted = product(&[inf(a.mul(z).mul(q(base as i64)), base), inf(z, base).inv()], o).unwrap();
        assert_ne!(lhs, shifted);
    }

    #[test]
    fn gr9_with_b_over_c_cannot_be_built() {
        let p = GR9_PARAMS;
        let b_c = quotient(p.b, p.c).unwrap();
        assert!(b_c.e < 0);
        let de_bc = quotient(p.d.mul(p.e), p.b.mul(p.c)).unwrap();
        let e_a = quotient(p.e, p.a).unwrap();
        let built = phi32([p.a, quotient(p.d, p.b).unwrap(), b_c], [p.d, de_bc], e_a, p.base, 20);
        assert!(built.is_err());
    }
}
